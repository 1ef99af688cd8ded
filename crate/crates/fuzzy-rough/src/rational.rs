//! Exact rational degrees in `[0, 1]` and finite chains of them.
//!
//! Every scalar in the library is a [`UnitRational`]. No floating point is
//! used anywhere: the class and lattice machinery depends on exact equalities
//! such as `F(a) = θ(a,b) ⊙ F(b)`, which rounding would corrupt.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational in the closed interval `[0, 1]`.
///
/// Stored normalized (gcd of numerator and denominator is 1), so equality is
/// structural and the derived order is the rational order. Numerator and
/// denominator are arbitrary-precision: quotients taken by the product
/// residuum can grow denominators beyond machine range under composition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitRational(BigRational);

impl UnitRational {
    pub fn zero() -> Self {
        UnitRational(BigRational::zero())
    }

    pub fn one() -> Self {
        UnitRational(BigRational::one())
    }

    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ZeroDenominator);
        }
        Self::from_ratio(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_ratio(ratio: BigRational) -> Result<Self> {
        if ratio.is_negative() || ratio > BigRational::one() {
            return Err(Error::ValueOutOfRange(ratio.to_string()));
        }
        Ok(UnitRational(ratio))
    }

    /// Wraps a ratio that is already known to lie in `[0, 1]`.
    pub(crate) fn from_ratio_unchecked(ratio: BigRational) -> Self {
        debug_assert!(!ratio.is_negative() && ratio <= BigRational::one());
        UnitRational(ratio)
    }

    pub(crate) fn ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// `1 - x`.
    pub fn complement(&self) -> Self {
        UnitRational(BigRational::one() - &self.0)
    }

    pub fn min_of(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn max_of(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }
}

impl fmt::Display for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a non-negative rational from `"p/q"`, an integer string, or a
/// terminating decimal such as `"0.75"` (read exactly, here as 3/4).
pub(crate) fn parse_big_rational(input: &str) -> Result<BigRational> {
    let s = input.trim();
    let err = |reason: &str| Error::ParseValue {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(err("empty string"));
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let parse_digits = |digits: &str| -> Result<BigInt> {
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            Err(err("expected decimal digits"))
        } else {
            Ok(BigInt::parse_bytes(digits.as_bytes(), 10).expect("digits"))
        }
    };
    let magnitude = if let Some((num, den)) = body.split_once('/') {
        let num = parse_digits(num)?;
        let den = parse_digits(den)?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        BigRational::new(num, den)
    } else if let Some((int_part, frac_part)) = body.split_once('.') {
        let int = if int_part.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(int_part)?
        };
        let frac = parse_digits(frac_part)?;
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        BigRational::new(int * &scale + frac, scale)
    } else {
        BigRational::from_integer(parse_digits(body)?)
    };
    Ok(if sign < 0 { -magnitude } else { magnitude })
}

impl FromStr for UnitRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_ratio(parse_big_rational(s)?)
    }
}

impl Serialize for UnitRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for UnitRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct Visitor;

        impl de::Visitor<'_> for Visitor {
            type Value = UnitRational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational in [0, 1] as a string like \"3/4\", \"0.75\" or \"1\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<UnitRational, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<UnitRational, E> {
                UnitRational::new(v, 1).map_err(E::custom)
            }
        }

        deserializer.deserialize_any(Visitor)
    }
}

/// A finite subchain of `[0, 1]` containing both endpoints.
///
/// Chains fix the value range in chain-mode computation: lattice enumeration
/// and the exhaustive pair search quantify over all maps `U -> L`.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain {
    elements: Vec<UnitRational>,
}

impl Chain {
    /// Builds a chain from the given values; sorts, removes duplicates and
    /// requires that 0 and 1 are present.
    pub fn new(values: Vec<UnitRational>) -> Result<Self> {
        let mut elements = values;
        elements.sort();
        elements.dedup();
        match (elements.first(), elements.last()) {
            (Some(lo), Some(hi)) if lo.is_zero() && hi.is_one() => Ok(Chain { elements }),
            _ => Err(Error::ChainEndpointsMissing),
        }
    }

    pub fn parse(values: &[&str]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .map(|v| v.parse())
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[UnitRational] {
        &self.elements
    }

    pub fn get(&self, rank: usize) -> Option<&UnitRational> {
        self.elements.get(rank)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, UnitRational> {
        self.elements.iter()
    }

    pub fn contains(&self, value: &UnitRational) -> bool {
        self.rank(value).is_some()
    }

    /// Position of `value` in the chain, if present.
    pub fn rank(&self, value: &UnitRational) -> Option<usize> {
        self.elements.binary_search(value).ok()
    }

    /// The order-reversing bijection of the chain: the element whose rank is
    /// the mirror of `value`'s rank.
    pub fn reversed(&self, value: &UnitRational) -> Result<UnitRational> {
        let rank = self
            .rank(value)
            .ok_or_else(|| Error::ValueNotInChain(value.to_string()))?;
        Ok(self.elements[self.elements.len() - 1 - rank].clone())
    }

    /// Greatest chain element `<= value`. Total on `[0, 1]` because 0 is a
    /// chain element.
    pub fn floor_of(&self, value: &UnitRational) -> UnitRational {
        match self.elements.binary_search(value) {
            Ok(i) => self.elements[i].clone(),
            Err(0) => unreachable!("chain contains 0"),
            Err(i) => self.elements[i - 1].clone(),
        }
    }

    /// Whether `1 - x` stays in the chain for every element `x`.
    pub fn closed_under_complement(&self) -> bool {
        self.elements.iter().all(|x| self.contains(&x.complement()))
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
