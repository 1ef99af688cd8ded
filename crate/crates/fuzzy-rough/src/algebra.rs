//! Triangular norms, co-norms, negators and implicators on exact rationals,
//! with structural property flags and per-chain validation.
//!
//! An [`Algebra`] bundles one operator of each kind. Three derived properties
//! gate the higher-level machinery:
//!
//! * **duality** — negation swaps the two approximation operators,
//! * **idempotence** — both approximation operators are idempotent over
//!   transitive relations,
//! * **min/max with an involutive negator** — the setting in which pair
//!   characterization and lattice meets are available.

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{Chain, UnitRational};
use crate::report::{PropertyCheck, ValidationReport};

/// Triangular norm: commutative, associative, monotone, unit 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TNormKind {
    Min,
    Product,
    Lukasiewicz,
}

impl TNormKind {
    pub fn apply(&self, x: &UnitRational, y: &UnitRational) -> UnitRational {
        match self {
            TNormKind::Min => x.min_of(y),
            TNormKind::Product => UnitRational::from_ratio_unchecked(x.ratio() * y.ratio()),
            TNormKind::Lukasiewicz => {
                let sum = x.ratio() + y.ratio() - BigRational::one();
                if sum.is_negative() {
                    UnitRational::zero()
                } else {
                    UnitRational::from_ratio_unchecked(sum)
                }
            }
        }
    }
}

/// Triangular co-norm: commutative, associative, monotone, unit 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TConormKind {
    Max,
    ProbSum,
    BoundedSum,
}

impl TConormKind {
    pub fn apply(&self, x: &UnitRational, y: &UnitRational) -> UnitRational {
        match self {
            TConormKind::Max => x.max_of(y),
            TConormKind::ProbSum => {
                UnitRational::from_ratio_unchecked(x.ratio() + y.ratio() - x.ratio() * y.ratio())
            }
            TConormKind::BoundedSum => {
                let sum = x.ratio() + y.ratio();
                if sum > BigRational::one() {
                    UnitRational::one()
                } else {
                    UnitRational::from_ratio_unchecked(sum)
                }
            }
        }
    }

    /// The t-norm this co-norm is dual to under the standard negator.
    fn standard_dual(&self) -> TNormKind {
        match self {
            TConormKind::Max => TNormKind::Min,
            TConormKind::ProbSum => TNormKind::Product,
            TConormKind::BoundedSum => TNormKind::Lukasiewicz,
        }
    }
}

/// Decreasing map with `n(0) = 1` and `n(1) = 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NegatorKind {
    /// `x -> 1 - x`; involutive on all of `[0, 1]`.
    Standard,
    /// The order-reversing bijection of a chain; involutive by construction
    /// and the only involutive negator mapping an arbitrary finite chain to
    /// itself.
    ChainReversal,
    /// An explicit value table over a chain.
    Table {
        pairs: Vec<(UnitRational, UnitRational)>,
        involutive: bool,
    },
}

impl NegatorKind {
    /// Evaluates the negator. Chain-based kinds need the chain and reject
    /// arguments outside it.
    pub fn apply(&self, chain: Option<&Chain>, x: &UnitRational) -> Result<UnitRational> {
        match self {
            NegatorKind::Standard => Ok(x.complement()),
            NegatorKind::ChainReversal => chain.ok_or(Error::ChainRequired)?.reversed(x),
            NegatorKind::Table { pairs, .. } => pairs
                .iter()
                .find(|(from, _)| from == x)
                .map(|(_, to)| to.clone())
                .ok_or_else(|| Error::ValueNotInChain(x.to_string())),
        }
    }

    pub fn is_involutive(&self) -> bool {
        match self {
            NegatorKind::Standard | NegatorKind::ChainReversal => true,
            NegatorKind::Table { involutive, .. } => *involutive,
        }
    }
}

/// Implicator: decreasing in the first argument, increasing in the second,
/// with the classical boundary values.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImplicatorKind {
    /// Residual of a t-norm: `x ▷ y = sup { z | x ⊙ z <= y }`, evaluated by
    /// closed form.
    Residual(TNormKind),
    /// `x ▷ y = n(x) ⊕ y`.
    S(TConormKind, NegatorKind),
}

impl ImplicatorKind {
    pub fn apply(
        &self,
        chain: Option<&Chain>,
        x: &UnitRational,
        y: &UnitRational,
    ) -> Result<UnitRational> {
        match self {
            ImplicatorKind::Residual(TNormKind::Min) => Ok(if x <= y {
                UnitRational::one()
            } else {
                y.clone()
            }),
            ImplicatorKind::Residual(TNormKind::Product) => Ok(if x <= y {
                UnitRational::one()
            } else {
                // x > y >= 0, so the quotient lies in [0, 1).
                UnitRational::from_ratio_unchecked(y.ratio() / x.ratio())
            }),
            ImplicatorKind::Residual(TNormKind::Lukasiewicz) => {
                let value = BigRational::one() - x.ratio() + y.ratio();
                Ok(if value >= BigRational::one() {
                    UnitRational::one()
                } else {
                    UnitRational::from_ratio_unchecked(value)
                })
            }
            ImplicatorKind::S(conorm, negator) => Ok(conorm.apply(&negator.apply(chain, x)?, y)),
        }
    }

    /// `1 ▷ x = x` for every x. Holds for every kind constructible here: the
    /// residuals by residuation, the S-implicators because `n(1) = 0` is the
    /// co-norm unit.
    pub fn is_border(&self) -> bool {
        true
    }

    /// Residual implicator whose induced negator `x ▷ 0` is involutive.
    pub fn is_residual_with_involutive_negator(&self) -> bool {
        matches!(self, ImplicatorKind::Residual(TNormKind::Lukasiewicz))
    }
}

/// An operator bundle: t-norm, t-conorm, negator and implicator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Algebra {
    pub tnorm: TNormKind,
    pub tconorm: TConormKind,
    pub negator: NegatorKind,
    pub implicator: ImplicatorKind,
}

impl Algebra {
    pub fn new(
        tnorm: TNormKind,
        tconorm: TConormKind,
        negator: NegatorKind,
        implicator: ImplicatorKind,
    ) -> Self {
        Algebra {
            tnorm,
            tconorm,
            negator,
            implicator,
        }
    }

    /// Min, max, standard negator and the Kleene-Dienes implicator
    /// `max(1 - x, y)`.
    pub fn kleene_dienes() -> Self {
        Algebra::min_max(NegatorKind::Standard)
    }

    /// Min, max and the extended Kleene-Dienes implicator `max(n(x), y)` of
    /// the given negator.
    pub fn min_max(negator: NegatorKind) -> Self {
        Algebra::new(
            TNormKind::Min,
            TConormKind::Max,
            negator.clone(),
            ImplicatorKind::S(TConormKind::Max, negator),
        )
    }

    /// A t-norm with its residual implicator and the standard-dual co-norm.
    pub fn residual(tnorm: TNormKind) -> Self {
        let tconorm = match tnorm {
            TNormKind::Min => TConormKind::Max,
            TNormKind::Product => TConormKind::ProbSum,
            TNormKind::Lukasiewicz => TConormKind::BoundedSum,
        };
        Algebra::new(
            tnorm,
            tconorm,
            NegatorKind::Standard,
            ImplicatorKind::Residual(tnorm),
        )
    }

    pub fn conj(&self, x: &UnitRational, y: &UnitRational) -> UnitRational {
        self.tnorm.apply(x, y)
    }

    pub fn disj(&self, x: &UnitRational, y: &UnitRational) -> UnitRational {
        self.tconorm.apply(x, y)
    }

    pub fn negate(&self, chain: Option<&Chain>, x: &UnitRational) -> Result<UnitRational> {
        self.negator.apply(chain, x)
    }

    pub fn implication(
        &self,
        chain: Option<&Chain>,
        x: &UnitRational,
        y: &UnitRational,
    ) -> Result<UnitRational> {
        self.implicator.apply(chain, x, y)
    }

    /// The negator the duality property would use: the implicator's own
    /// negator for S-implicators, the induced `x ▷ 0` for residuals.
    fn relevant_negator_involutive(&self) -> bool {
        match &self.implicator {
            ImplicatorKind::S(_, negator) => negator.is_involutive(),
            ImplicatorKind::Residual(_) => self.implicator.is_residual_with_involutive_negator(),
        }
    }

    /// Whether the declared t-norm/t-conorm pair is known to satisfy
    /// `n(x ⊕ y) = n(x) ⊙ n(y)` for the declared negator.
    pub fn n_dual(&self) -> bool {
        match (self.tnorm, self.tconorm, &self.negator) {
            // min/max are dual under every involutive negator.
            (TNormKind::Min, TConormKind::Max, negator) => negator.is_involutive(),
            (_, conorm, NegatorKind::Standard) => conorm.standard_dual() == self.tnorm,
            _ => false,
        }
    }

    /// Min t-norm with the implicator `max(n(x), y)` of an involutive
    /// negator: the setting for threshold characterizations, pair
    /// characterization short-cuts and constructive lattice meets.
    pub fn min_max_involutive(&self) -> bool {
        self.tnorm == TNormKind::Min
            && matches!(
                &self.implicator,
                ImplicatorKind::S(TConormKind::Max, negator)
                    if negator.is_involutive() && *negator == self.negator
            )
    }

    /// Negation swaps lower and upper approximations.
    pub fn has_duality(&self) -> bool {
        match &self.implicator {
            ImplicatorKind::Residual(_) => self.implicator.is_residual_with_involutive_negator(),
            ImplicatorKind::S(conorm, negator) => {
                negator.is_involutive()
                    && *negator == self.negator
                    && *conorm == self.tconorm
                    && self.n_dual()
            }
        }
    }

    /// Both approximation operators are idempotent over transitive relations.
    ///
    /// Every built-in t-norm is continuous, so each residual implicator
    /// qualifies; on a finite chain left-continuity imposes no constraint at
    /// all (see the note attached by [`Algebra::validate`]).
    pub fn is_idempotent(&self) -> bool {
        match &self.implicator {
            ImplicatorKind::Residual(_) => true,
            ImplicatorKind::S(..) => self.has_duality(),
        }
    }

    pub fn require_min_max_involutive(&self) -> Result<()> {
        if self.min_max_involutive() {
            Ok(())
        } else {
            Err(Error::MinMaxAlgebraRequired)
        }
    }

    pub fn require_duality(&self) -> Result<()> {
        if self.has_duality() {
            Ok(())
        } else if !self.relevant_negator_involutive() {
            Err(Error::NegatorNotInvolutive)
        } else {
            Err(Error::DualityUnavailable)
        }
    }

    pub fn require_idempotence(&self) -> Result<()> {
        if self.is_idempotent() {
            Ok(())
        } else {
            Err(Error::IdempotenceUnavailable)
        }
    }

    /// The negator induced by the implicator, `n(x) = x ▷ 0`, tabulated over
    /// `chain` and recognized as a named kind when possible.
    pub fn induced_negator(&self, chain: &Chain) -> Result<NegatorKind> {
        let zero = UnitRational::zero();
        let mut pairs = Vec::with_capacity(chain.len());
        for x in chain.iter() {
            pairs.push((x.clone(), self.implication(Some(chain), x, &zero)?));
        }
        if pairs.iter().all(|(x, nx)| *nx == x.complement()) {
            return Ok(NegatorKind::Standard);
        }
        if pairs
            .iter()
            .all(|(x, nx)| chain.reversed(x).map(|r| r == *nx).unwrap_or(false))
        {
            return Ok(NegatorKind::ChainReversal);
        }
        let involutive = pairs.iter().all(|(x, nx)| {
            pairs
                .iter()
                .find(|(from, _)| from == nx)
                .map(|(_, nnx)| nnx == x)
                .unwrap_or(false)
        });
        Ok(NegatorKind::Table { pairs, involutive })
    }

    /// Checks the operator laws and closure properties over every pair (and
    /// triple, for associativity) of chain elements. Violations are report
    /// entries with witnesses, never errors.
    pub fn validate(&self, chain: &Chain) -> ValidationReport {
        let mut report = ValidationReport::new();
        let elems = chain.elements();
        let c = Some(chain);

        let binary = |f: &dyn Fn(&UnitRational, &UnitRational) -> Result<UnitRational>| {
            let mut table = Vec::new();
            for x in elems {
                for y in elems {
                    table.push(((x, y), f(x, y)));
                }
            }
            table
        };

        let conj_table = binary(&|x, y| Ok(self.conj(x, y)));
        let disj_table = binary(&|x, y| Ok(self.disj(x, y)));
        let impl_table = binary(&|x, y| self.implication(c, x, y));

        // t-norm and t-conorm laws
        type BinaryOp<'a> = &'a dyn Fn(&UnitRational, &UnitRational) -> UnitRational;
        let conj = |x: &UnitRational, y: &UnitRational| self.conj(x, y);
        let disj = |x: &UnitRational, y: &UnitRational| self.disj(x, y);
        let monoid_laws: [(&str, UnitRational, BinaryOp); 2] = [
            ("tnorm", UnitRational::one(), &conj),
            ("tconorm", UnitRational::zero(), &disj),
        ];
        for (name, unit, apply) in monoid_laws {
            let mut commutative = None;
            let mut associative = None;
            let mut monotone = None;
            let mut unit_law = None;
            for x in elems {
                if unit_law.is_none() && apply(&unit, x) != *x {
                    unit_law = Some(format!("unit ∘ {x} = {}", apply(&unit, x)));
                }
                for y in elems {
                    if commutative.is_none() && apply(x, y) != apply(y, x) {
                        commutative = Some(format!("({x}, {y})"));
                    }
                    for z in elems {
                        if associative.is_none() && apply(&apply(x, y), z) != apply(x, &apply(y, z))
                        {
                            associative = Some(format!("({x}, {y}, {z})"));
                        }
                        if monotone.is_none() && y <= z && apply(x, y) > apply(x, z) {
                            monotone = Some(format!("({x}, {y} <= {z})"));
                        }
                    }
                }
            }
            report.push(PropertyCheck::of(
                format!("{name}-commutative"),
                commutative,
            ));
            report.push(PropertyCheck::of(
                format!("{name}-associative"),
                associative,
            ));
            report.push(PropertyCheck::of(format!("{name}-monotone"), monotone));
            report.push(PropertyCheck::of(format!("{name}-unit"), unit_law));
        }

        // negator laws
        match (
            self.negate(c, &UnitRational::zero()),
            self.negate(c, &UnitRational::one()),
        ) {
            (Ok(n0), Ok(n1)) if n0.is_one() && n1.is_zero() => {
                report.push(PropertyCheck::pass("negator-boundary"))
            }
            (n0, n1) => report.push(PropertyCheck::fail(
                "negator-boundary",
                format!("n(0) = {n0:?}, n(1) = {n1:?}"),
            )),
        }
        let negations: Vec<_> = elems.iter().map(|x| self.negate(c, x)).collect();
        let mut decreasing = None;
        let mut involutive = None;
        for (i, x) in elems.iter().enumerate() {
            match &negations[i] {
                Ok(nx) => {
                    for (j, _) in elems.iter().enumerate().skip(i + 1) {
                        if let (Some(nyt), None) = (negations[j].as_ref().ok(), &decreasing) {
                            if nyt > nx {
                                decreasing = Some(format!("{x} <= {} but n rises", elems[j]));
                            }
                        }
                    }
                    if involutive.is_none() {
                        match self.negate(c, nx) {
                            Ok(nnx) if nnx == *x => {}
                            Ok(nnx) => involutive = Some(format!("n(n({x})) = {nnx}")),
                            Err(e) => involutive = Some(format!("n(n({x})): {e}")),
                        }
                    }
                }
                Err(e) => {
                    if decreasing.is_none() {
                        decreasing = Some(format!("n({x}): {e}"));
                    }
                }
            }
        }
        report.push(PropertyCheck::of("negator-decreasing", decreasing));
        report.push(PropertyCheck::of("negator-involutive", involutive));

        // implicator laws
        let find = |table: &[((&UnitRational, &UnitRational), Result<UnitRational>)],
                    x: &UnitRational,
                    y: &UnitRational|
         -> Option<UnitRational> {
            table
                .iter()
                .find(|((a, b), _)| *a == x && *b == y)
                .and_then(|(_, v)| v.as_ref().ok().cloned())
        };
        let zero = UnitRational::zero();
        let one = UnitRational::one();
        let boundary_ok = [
            (&zero, &zero, &one),
            (&zero, &one, &one),
            (&one, &one, &one),
            (&one, &zero, &zero),
        ]
        .into_iter()
        .find(|(x, y, expect)| find(&impl_table, x, y).as_ref() != Some(expect))
        .map(|(x, y, expect)| format!("{x} ▷ {y} should be {expect}"));
        report.push(PropertyCheck::of("implicator-boundary", boundary_ok));

        let mut impl_monotone = None;
        let mut border = None;
        for x in elems {
            if border.is_none() {
                match find(&impl_table, &one, x) {
                    Some(v) if v == *x => {}
                    v => border = Some(format!("1 ▷ {x} = {v:?}")),
                }
            }
            for y in elems {
                for z in elems {
                    if impl_monotone.is_none() && y <= z {
                        let first_dec = match (find(&impl_table, y, x), find(&impl_table, z, x)) {
                            (Some(a), Some(b)) => a < b,
                            _ => false,
                        };
                        let second_inc = match (find(&impl_table, x, y), find(&impl_table, x, z)) {
                            (Some(a), Some(b)) => a > b,
                            _ => false,
                        };
                        if first_dec {
                            impl_monotone = Some(format!("first argument: {y} <= {z} at {x}"));
                        } else if second_inc {
                            impl_monotone = Some(format!("second argument: {y} <= {z} at {x}"));
                        }
                    }
                }
            }
        }
        report.push(PropertyCheck::of("implicator-monotone", impl_monotone));
        report.push(PropertyCheck::of("implicator-border", border));

        // n-duality of the declared pair, both identities
        let mut n_dual = None;
        for x in elems {
            for y in elems {
                if n_dual.is_some() {
                    break;
                }
                let lhs = self.negate(c, &self.disj(x, y));
                let rhs = match (self.negate(c, x), self.negate(c, y)) {
                    (Ok(nx), Ok(ny)) => Ok(self.conj(&nx, &ny)),
                    _ => Err(Error::ChainRequired),
                };
                let lhs2 = self.negate(c, &self.conj(x, y));
                let rhs2 = match (self.negate(c, x), self.negate(c, y)) {
                    (Ok(nx), Ok(ny)) => Ok(self.disj(&nx, &ny)),
                    _ => Err(Error::ChainRequired),
                };
                let agree = |a: &Result<UnitRational>, b: &Result<UnitRational>| match (a, b) {
                    (Ok(a), Ok(b)) => a == b,
                    _ => false,
                };
                if !agree(&lhs, &rhs) {
                    n_dual = Some(format!(
                        "n({x} ⊕ {y}) = {lhs:?} but n({x}) ⊙ n({y}) = {rhs:?}"
                    ));
                } else if !agree(&lhs2, &rhs2) {
                    n_dual = Some(format!(
                        "n({x} ⊙ {y}) = {lhs2:?} but n({x}) ⊕ n({y}) = {rhs2:?}"
                    ));
                }
            }
        }
        report.push(PropertyCheck::of("n-dual", n_dual));

        // closure of each operator over the chain
        let closure =
            |name: &str, table: &[((&UnitRational, &UnitRational), Result<UnitRational>)]| {
                let witness = table.iter().find_map(|((x, y), v)| match v {
                    Ok(v) if chain.contains(v) => None,
                    Ok(v) => Some(format!("{x} ∘ {y} = {v} ∉ L")),
                    Err(e) => Some(format!("{x} ∘ {y}: {e}")),
                });
                PropertyCheck::of(format!("chain-closed-{name}"), witness)
            };
        report.push(closure("tnorm", &conj_table));
        report.push(closure("tconorm", &disj_table));
        report.push(closure("implicator", &impl_table));
        let neg_closure = elems.iter().find_map(|x| match self.negate(c, x) {
            Ok(v) if chain.contains(&v) => None,
            Ok(v) => Some(format!("n({x}) = {v} ∉ L")),
            Err(e) => Some(format!("n({x}): {e}")),
        });
        report.push(PropertyCheck::of("chain-closed-negator", neg_closure));

        // structural flags
        let structural = |name: &str, holds: bool, why: &str| {
            if holds {
                PropertyCheck::pass(name)
            } else {
                PropertyCheck::fail(name, why)
            }
        };
        report.push(structural(
            "min-max-involutive",
            self.min_max_involutive(),
            "not the min t-norm with max(n(x), y) for an involutive negator",
        ));
        report.push(structural(
            "duality-hypotheses",
            self.has_duality(),
            "negation does not swap the approximation operators",
        ));
        report.push(structural(
            "idempotence-hypotheses",
            self.is_idempotent(),
            "approximations need not be idempotent",
        ));
        if matches!(self.implicator, ImplicatorKind::Residual(_)) {
            report.note(
                "residual implicators count as idempotence-capable: every built-in \
                 t-norm is continuous, and on a finite chain left-continuity imposes \
                 no constraint",
            );
        }
        if self.min_max_involutive() {
            debug_assert!(self.has_duality() && self.is_idempotent());
        }
        report
    }
}
