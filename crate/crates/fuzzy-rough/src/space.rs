//! Universes, fuzzy sets, fuzzy relations and the two approximation
//! operators.
//!
//! For a space with relation θ, algebra (⊙, ▷) and a fuzzy set `f`,
//!
//! * the lower approximation is `x -> min over y of θ(x,y) ▷ f(y)`,
//! * the upper approximation is `x -> max over y of θ(x,y) ⊙ f(y)`.
//!
//! Universes are finite, so the infima and suprema of the general definitions
//! become minima and maxima and every statement about them is decidable.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, TNormKind};
use crate::error::{Error, Result};
use crate::rational::{Chain, UnitRational};
use crate::report::{PropertyCheck, ValidationReport};

/// An ordered set of distinct element names. The construction order is the
/// canonical total order used for all tie-breaking.
#[derive(Clone)]
pub struct Universe {
    inner: Arc<UniverseInner>,
}

struct UniverseInner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::BadUniverse);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || index.insert(name.clone(), i).is_some() {
                return Err(Error::BadUniverse);
            }
        }
        Ok(Universe {
            inner: Arc::new(UniverseInner { names, index }),
        })
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.inner.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    pub fn same_as(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }

    pub(crate) fn check_same(&self, other: &Universe) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

/// A total map from universe elements to degrees.
#[derive(Clone, PartialEq, Eq)]
pub struct FuzzySet {
    universe: Universe,
    values: Vec<UnitRational>,
}

impl FuzzySet {
    pub fn new(universe: Universe, values: Vec<UnitRational>) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(Error::DimensionMismatch {
                expected: universe.len(),
                found: values.len(),
            });
        }
        Ok(FuzzySet { universe, values })
    }

    pub fn constant(universe: Universe, value: UnitRational) -> Self {
        let values = vec![value; universe.len()];
        FuzzySet { universe, values }
    }

    /// Builds a set from `"element: value"` pairs; every universe element
    /// must be covered exactly once.
    pub fn from_pairs<'a>(
        universe: Universe,
        pairs: impl IntoIterator<Item = (&'a str, UnitRational)>,
    ) -> Result<Self> {
        let mut values: Vec<Option<UnitRational>> = vec![None; universe.len()];
        let mut seen = 0usize;
        for (name, value) in pairs {
            let i = universe
                .index_of(name)
                .ok_or_else(|| Error::Document(format!("unknown element {name:?}")))?;
            if values[i].replace(value).is_some() {
                return Err(Error::Document(format!("duplicate element {name:?}")));
            }
            seen += 1;
        }
        if seen != universe.len() {
            return Err(Error::DimensionMismatch {
                expected: universe.len(),
                found: seen,
            });
        }
        Ok(FuzzySet {
            universe,
            values: values.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn parse(universe: &Universe, values: &[&str]) -> Result<Self> {
        FuzzySet::new(
            universe.clone(),
            values
                .iter()
                .map(|v| v.parse())
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn values(&self) -> &[UnitRational] {
        &self.values
    }

    pub fn value(&self, index: usize) -> &UnitRational {
        &self.values[index]
    }

    pub fn value_of(&self, name: &str) -> Option<&UnitRational> {
        self.universe.index_of(name).map(|i| &self.values[i])
    }

    /// Pointwise comparison.
    pub fn leq(&self, other: &FuzzySet) -> Result<bool> {
        self.universe.check_same(&other.universe)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }

    /// Replaces the value at `index`.
    pub fn with_value(&self, index: usize, value: UnitRational) -> FuzzySet {
        let mut values = self.values.clone();
        values[index] = value;
        FuzzySet {
            universe: self.universe.clone(),
            values,
        }
    }

    /// The set of distinct values taken.
    pub fn range(&self) -> Vec<UnitRational> {
        let mut range = self.values.clone();
        range.sort();
        range.dedup();
        range
    }
}

impl fmt::Debug for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {v}", self.universe.name(i))?;
        }
        write!(f, "}}")
    }
}

/// Componentwise minimum of a non-empty family over one universe.
pub fn pointwise_meet<'a>(sets: impl IntoIterator<Item = &'a FuzzySet>) -> Result<FuzzySet> {
    combine(sets, UnitRational::min_of)
}

/// Componentwise maximum of a non-empty family over one universe.
pub fn pointwise_join<'a>(sets: impl IntoIterator<Item = &'a FuzzySet>) -> Result<FuzzySet> {
    combine(sets, UnitRational::max_of)
}

fn combine<'a>(
    sets: impl IntoIterator<Item = &'a FuzzySet>,
    op: fn(&UnitRational, &UnitRational) -> UnitRational,
) -> Result<FuzzySet> {
    let mut iter = sets.into_iter();
    let first = iter.next().ok_or(Error::EmptyFamily)?;
    let mut values = first.values.clone();
    for set in iter {
        first.universe.check_same(&set.universe)?;
        for (acc, v) in values.iter_mut().zip(&set.values) {
            *acc = op(acc, v);
        }
    }
    Ok(FuzzySet {
        universe: first.universe.clone(),
        values,
    })
}

/// Pointwise negation of a set with the algebra's negator.
pub fn negate_set(algebra: &Algebra, chain: Option<&Chain>, f: &FuzzySet) -> Result<FuzzySet> {
    let values = f
        .values
        .iter()
        .map(|v| algebra.negate(chain, v))
        .collect::<Result<Vec<_>>>()?;
    if let Some(chain) = chain {
        for v in &values {
            if !chain.contains(v) {
                return Err(Error::ValueNotInChain(v.to_string()));
            }
        }
    }
    Ok(FuzzySet {
        universe: f.universe.clone(),
        values,
    })
}

/// A fuzzy binary relation on a universe, stored as a square matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct FuzzyRelation {
    universe: Universe,
    entries: Vec<UnitRational>,
}

impl FuzzyRelation {
    pub fn new(universe: Universe, rows: Vec<Vec<UnitRational>>) -> Result<Self> {
        let n = universe.len();
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(FuzzyRelation { universe, entries })
    }

    /// Builds a symmetric relation with diagonal 1 from the strictly upper
    /// triangle given row by row.
    pub fn symmetric_from_upper_triangle(
        universe: Universe,
        upper: &[UnitRational],
    ) -> Result<Self> {
        let n = universe.len();
        if upper.len() != n * (n - 1) / 2 {
            return Err(Error::DimensionMismatch {
                expected: n * (n - 1) / 2,
                found: upper.len(),
            });
        }
        let mut rel = FuzzyRelation::identity(universe);
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                rel.set(i, j, upper[k].clone());
                rel.set(j, i, upper[k].clone());
                k += 1;
            }
        }
        Ok(rel)
    }

    pub fn identity(universe: Universe) -> Self {
        let n = universe.len();
        let mut entries = vec![UnitRational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = UnitRational::one();
        }
        FuzzyRelation { universe, entries }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn get(&self, from: usize, to: usize) -> &UnitRational {
        &self.entries[from * self.universe.len() + to]
    }

    pub(crate) fn set(&mut self, from: usize, to: usize, value: UnitRational) {
        let n = self.universe.len();
        self.entries[from * n + to] = value;
    }

    pub fn values(&self) -> &[UnitRational] {
        &self.entries
    }

    /// Distinct entries, sorted.
    pub fn range(&self) -> Vec<UnitRational> {
        let mut range = self.entries.clone();
        range.sort();
        range.dedup();
        range
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexivity_witness().is_none()
    }

    pub fn reflexivity_witness(&self) -> Option<usize> {
        (0..self.universe.len()).find(|&i| !self.get(i, i).is_one())
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_witness().is_none()
    }

    pub fn symmetry_witness(&self) -> Option<(usize, usize)> {
        let n = self.universe.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_transitive(&self, tnorm: TNormKind) -> bool {
        self.transitivity_witness(tnorm).is_none()
    }

    pub fn transitivity_witness(&self, tnorm: TNormKind) -> Option<(usize, usize, usize)> {
        let n = self.universe.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if tnorm.apply(self.get(x, y), self.get(y, z)) > *self.get(x, z) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Reports reflexivity, symmetry and ⊙-transitivity, each with a witness
    /// when violated.
    pub fn validate(&self, tnorm: TNormKind) -> ValidationReport {
        let mut report = ValidationReport::new();
        let name = |i: usize| self.universe.name(i).to_string();
        report.push(PropertyCheck::of(
            "reflexive",
            self.reflexivity_witness()
                .map(|i| format!("θ({0},{0}) = {1}", name(i), self.get(i, i))),
        ));
        report.push(PropertyCheck::of(
            "symmetric",
            self.symmetry_witness().map(|(i, j)| {
                format!(
                    "θ({},{}) = {} but θ({},{}) = {}",
                    name(i),
                    name(j),
                    self.get(i, j),
                    name(j),
                    name(i),
                    self.get(j, i)
                )
            }),
        ));
        report.push(PropertyCheck::of(
            "transitive",
            self.transitivity_witness(tnorm).map(|(x, y, z)| {
                format!(
                    "θ({},{}) ⊙ θ({},{}) = {} > θ({},{}) = {}",
                    name(x),
                    name(y),
                    name(y),
                    name(z),
                    tnorm.apply(self.get(x, y), self.get(y, z)),
                    name(x),
                    name(z),
                    self.get(x, z)
                )
            }),
        ));
        report
    }

    /// Least min-transitive relation above this one, computed by iterating
    /// max-min self-composition to a fixpoint (at most `|U|` rounds).
    pub fn min_transitive_closure(&self) -> FuzzyRelation {
        let n = self.universe.len();
        let mut current = self.clone();
        loop {
            let mut next = current.clone();
            let mut changed = false;
            for x in 0..n {
                for z in 0..n {
                    let mut best = current.get(x, z).clone();
                    for y in 0..n {
                        let via = current.get(x, y).min_of(current.get(y, z));
                        if via > best {
                            best = via;
                        }
                    }
                    if best != *current.get(x, z) {
                        changed = true;
                        next.set(x, z, best);
                    }
                }
            }
            if !changed {
                return current;
            }
            current = next;
        }
    }
}

impl fmt::Debug for FuzzyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.universe.len();
        writeln!(f, "[")?;
        for i in 0..n {
            write!(f, "  ")?;
            for j in 0..n {
                write!(f, "{:>6} ", self.get(i, j).to_string())?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// A universe with a reflexive fuzzy relation, an operator algebra and an
/// optional value chain.
///
/// Reflexivity is required at construction; symmetry and ⊙-transitivity are
/// recorded and demanded only by the operations that need a similarity
/// relation. In chain mode every relation entry must lie in the chain and
/// the algebra must keep approximation values inside it.
#[derive(Clone, Debug)]
pub struct ApproximationSpace {
    theta: FuzzyRelation,
    algebra: Algebra,
    chain: Option<Chain>,
    similarity: bool,
}

impl ApproximationSpace {
    pub fn new(theta: FuzzyRelation, algebra: Algebra, chain: Option<Chain>) -> Result<Self> {
        if let Some(i) = theta.reflexivity_witness() {
            return Err(Error::NotSimilarity(format!(
                "θ({0},{0}) = {1} ≠ 1",
                theta.universe().name(i),
                theta.get(i, i)
            )));
        }
        if let Some(chain) = &chain {
            for v in theta.values() {
                if !chain.contains(v) {
                    return Err(Error::ValueNotInChain(v.to_string()));
                }
            }
            // The approximation operators apply ⊙ and ▷ to relation entries
            // against arbitrary chain values; their results must stay in the
            // chain for chain-mode invariants to hold.
            for t in theta.range() {
                for v in chain.iter() {
                    let conj = algebra.conj(&t, v);
                    if !chain.contains(&conj) {
                        return Err(Error::ValueNotInChain(conj.to_string()));
                    }
                    let imp = algebra.implication(Some(chain), &t, v)?;
                    if !chain.contains(&imp) {
                        return Err(Error::ValueNotInChain(imp.to_string()));
                    }
                }
            }
        }
        let similarity = theta.is_symmetric() && theta.is_transitive(algebra.tnorm);
        Ok(ApproximationSpace {
            theta,
            algebra,
            chain,
            similarity,
        })
    }

    pub fn universe(&self) -> &Universe {
        self.theta.universe()
    }

    pub fn theta(&self) -> &FuzzyRelation {
        &self.theta
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn chain(&self) -> Option<&Chain> {
        self.chain.as_ref()
    }

    /// Whether θ is symmetric and ⊙-transitive for the algebra's t-norm.
    pub fn is_similarity(&self) -> bool {
        self.similarity
    }

    pub fn require_similarity(&self) -> Result<()> {
        if self.similarity {
            Ok(())
        } else {
            let report = self.theta.validate(self.algebra.tnorm);
            let witness = report
                .checks
                .iter()
                .find_map(|c| match &c.status {
                    crate::report::CheckStatus::Fail { witness } => {
                        Some(format!("{}: {witness}", c.name))
                    }
                    _ => None,
                })
                .unwrap_or_else(|| "unknown".to_string());
            Err(Error::NotSimilarity(witness))
        }
    }

    pub fn require_chain(&self) -> Result<&Chain> {
        self.chain.as_ref().ok_or(Error::ChainRequired)
    }

    /// Universe agreement plus, in chain mode, value membership.
    pub fn check_set(&self, f: &FuzzySet) -> Result<()> {
        self.universe().check_same(f.universe())?;
        if let Some(chain) = &self.chain {
            for v in f.values() {
                if !chain.contains(v) {
                    return Err(Error::ValueNotInChain(v.to_string()));
                }
            }
        }
        Ok(())
    }

    /// Lower approximation: `x -> min over y of θ(x,y) ▷ f(y)`.
    pub fn lower(&self, f: &FuzzySet) -> Result<FuzzySet> {
        self.check_set(f)?;
        let n = self.universe().len();
        let chain = self.chain.as_ref();
        let mut values = Vec::with_capacity(n);
        for x in 0..n {
            let mut acc: Option<UnitRational> = None;
            for y in 0..n {
                let v = self
                    .algebra
                    .implication(chain, self.theta.get(x, y), f.value(y))?;
                acc = Some(match acc {
                    None => v,
                    Some(a) => a.min_of(&v),
                });
            }
            values.push(acc.expect("universe is non-empty"));
        }
        FuzzySet::new(self.universe().clone(), values)
    }

    /// Upper approximation: `x -> max over y of θ(x,y) ⊙ f(y)`.
    pub fn upper(&self, f: &FuzzySet) -> Result<FuzzySet> {
        self.check_set(f)?;
        let n = self.universe().len();
        let mut values = Vec::with_capacity(n);
        for x in 0..n {
            let mut acc: Option<UnitRational> = None;
            for y in 0..n {
                let v = self.algebra.conj(self.theta.get(x, y), f.value(y));
                acc = Some(match acc {
                    None => v,
                    Some(a) => a.max_of(&v),
                });
            }
            values.push(acc.expect("universe is non-empty"));
        }
        FuzzySet::new(self.universe().clone(), values)
    }

    pub fn is_fixed_lower(&self, f: &FuzzySet) -> Result<bool> {
        Ok(self.lower(f)? == *f)
    }

    pub fn is_fixed_upper(&self, f: &FuzzySet) -> Result<bool> {
        Ok(self.upper(f)? == *f)
    }

    /// Pointwise negation with this space's algebra and chain.
    pub fn negate(&self, f: &FuzzySet) -> Result<FuzzySet> {
        self.universe().check_same(f.universe())?;
        negate_set(&self.algebra, self.chain.as_ref(), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn ur(s: &str) -> UnitRational {
        s.parse().unwrap()
    }

    #[test]
    fn universe_rejects_duplicates_and_empty() {
        assert!(Universe::new(["a", "b", "a"]).is_err());
        assert!(Universe::new(Vec::<String>::new()).is_err());
        let u = Universe::new(["a", "b"]).unwrap();
        assert_eq!(u.index_of("b"), Some(1));
        assert_eq!(u.index_of("c"), None);
    }

    #[test]
    fn pointwise_meet_and_join() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let f1 = FuzzySet::parse(&u, &["1", "1/10", "1/2"]).unwrap();
        let f2 = FuzzySet::parse(&u, &["1/10", "1", "1/2"]).unwrap();
        let meet = pointwise_meet([&f1, &f2]).unwrap();
        assert_eq!(meet, FuzzySet::parse(&u, &["1/10", "1/10", "1/2"]).unwrap());
        let join = pointwise_join([&f1, &f2]).unwrap();
        assert_eq!(join, FuzzySet::parse(&u, &["1", "1", "1/2"]).unwrap());
        assert_eq!(pointwise_join([&f1, &f1]).unwrap(), f1);
        let other = Universe::new(["x", "y", "z"]).unwrap();
        let g = FuzzySet::parse(&other, &["0", "0", "0"]).unwrap();
        assert!(matches!(
            pointwise_meet([&f1, &g]),
            Err(Error::UniverseMismatch)
        ));
        assert!(matches!(pointwise_meet([]), Err(Error::EmptyFamily)));
    }

    #[test]
    fn negate_set_values() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let f = FuzzySet::parse(&u, &["0", "1", "1/4"]).unwrap();
        let alg = Algebra::kleene_dienes();
        let n = negate_set(&alg, None, &f).unwrap();
        assert_eq!(n, FuzzySet::parse(&u, &["1", "0", "3/4"]).unwrap());
        let nn = negate_set(&alg, None, &n).unwrap();
        assert_eq!(nn, f);
        let chain = Chain::parse(&["0", "1/2", "1"]).unwrap();
        let mid = FuzzySet::parse(&u, &["1/2", "1/2", "1/2"]).unwrap();
        let reversal = Algebra::min_max(crate::algebra::NegatorKind::ChainReversal);
        assert_eq!(negate_set(&reversal, Some(&chain), &mid).unwrap(), mid);
    }

    #[test]
    fn relation_validation_reports_witnesses() {
        let space = samples::three_element_space();
        let report = space.theta().validate(TNormKind::Min);
        assert!(report.all_hold(), "{report}");

        let u = Universe::new(["a", "b", "c"]).unwrap();
        let rel = FuzzyRelation::symmetric_from_upper_triangle(u, &[ur("1"), ur("1/2"), ur("1")])
            .unwrap();
        let report = rel.validate(TNormKind::Min);
        assert!(!report.holds("transitive"));
        assert!(report.holds("reflexive"));
        assert!(report.holds("symmetric"));
    }

    #[test]
    fn identity_relation_is_similarity_for_every_tnorm() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let rel = FuzzyRelation::identity(u);
        for tnorm in [TNormKind::Min, TNormKind::Product, TNormKind::Lukasiewicz] {
            assert!(rel.validate(tnorm).all_hold());
        }
    }

    #[test]
    fn closure_adds_shortcuts() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let rel = FuzzyRelation::symmetric_from_upper_triangle(
            u.clone(),
            &[ur("4/5"), ur("0"), ur("3/5")],
        )
        .unwrap();
        let closed = rel.min_transitive_closure();
        assert_eq!(*closed.get(0, 2), ur("3/5"));
        assert!(closed.is_transitive(TNormKind::Min));
        assert!(closed.is_symmetric());
        // already-transitive input is untouched
        assert_eq!(closed.min_transitive_closure(), closed);
        let id = FuzzyRelation::identity(u);
        assert_eq!(id.min_transitive_closure(), id);
    }

    #[test]
    fn table_values_for_lower_and_upper() {
        let space = samples::three_element_space();
        let (f1, f2) = samples::three_element_sets();
        let u = space.universe();

        assert_eq!(
            space.upper(&f1).unwrap(),
            FuzzySet::parse(u, &["1", "3/4", "1/2"]).unwrap()
        );
        assert_eq!(
            space.lower(&f1).unwrap(),
            FuzzySet::parse(u, &["1/4", "1/10", "1/2"]).unwrap()
        );
        assert_eq!(
            space.upper(&f2).unwrap(),
            FuzzySet::parse(u, &["3/4", "1", "1/2"]).unwrap()
        );
        assert_eq!(
            space.lower(&f2).unwrap(),
            FuzzySet::parse(u, &["1/10", "1/4", "1/2"]).unwrap()
        );
    }

    #[test]
    fn six_element_table_values_for_both_relation_variants() {
        for space in [
            samples::six_element_space(),
            samples::six_element_space_weak_links(),
        ] {
            let h = samples::six_element_reference_set();
            let u = space.universe();
            assert_eq!(
                space.upper(&h).unwrap(),
                FuzzySet::parse(u, &["1", "1", "3/4", "1/2", "1/2", "3/4"]).unwrap()
            );
            assert_eq!(
                space.lower(&h).unwrap(),
                FuzzySet::parse(u, &["0", "0", "1/4", "1/2", "1/2", "1/2"]).unwrap()
            );
        }
    }

    #[test]
    fn identity_relation_fixes_everything() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let space = ApproximationSpace::new(
            FuzzyRelation::identity(u.clone()),
            Algebra::kleene_dienes(),
            None,
        )
        .unwrap();
        let f = FuzzySet::parse(&u, &["1/3", "2/3", "1"]).unwrap();
        assert_eq!(space.lower(&f).unwrap(), f);
        assert_eq!(space.upper(&f).unwrap(), f);
    }

    #[test]
    fn constant_zero_set_has_zero_upper() {
        let space = samples::three_element_space();
        let zero = FuzzySet::constant(space.universe().clone(), UnitRational::zero());
        assert_eq!(space.upper(&zero).unwrap(), zero);
    }

    #[test]
    fn fixpoint_tests() {
        let space = samples::three_element_space();
        let (f1, _) = samples::three_element_sets();
        let upper = space.upper(&f1).unwrap();
        // idempotence makes every image a fixpoint
        assert!(space.is_fixed_upper(&upper).unwrap());
        assert!(!space.is_fixed_upper(&f1).unwrap());
        let half = FuzzySet::constant(space.universe().clone(), ur("1/2"));
        assert!(space.is_fixed_lower(&half).unwrap());
        assert!(space.is_fixed_upper(&half).unwrap());
    }

    #[test]
    fn sandwich_between_lower_and_upper() {
        let space = samples::six_element_space();
        let h = samples::six_element_reference_set();
        let lower = space.lower(&h).unwrap();
        let upper = space.upper(&h).unwrap();
        assert!(lower.leq(&h).unwrap());
        assert!(h.leq(&upper).unwrap());
    }

    #[test]
    fn chain_mode_rejects_foreign_values() {
        let space = samples::three_element_coarse_space();
        let bad = FuzzySet::parse(space.universe(), &["1/4", "0", "0"]).unwrap();
        assert!(matches!(space.upper(&bad), Err(Error::ValueNotInChain(_))));
    }

    #[test]
    fn space_construction_rejects_irreflexive_relations() {
        let u = Universe::new(["a", "b"]).unwrap();
        let rel =
            FuzzyRelation::new(u, vec![vec![ur("1/2"), ur("0")], vec![ur("0"), ur("1")]]).unwrap();
        assert!(matches!(
            ApproximationSpace::new(rel, Algebra::kleene_dienes(), None),
            Err(Error::NotSimilarity(_))
        ));
    }
}
