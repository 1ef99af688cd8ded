//! Deciding whether a pair of fuzzy sets is a fuzzy rough set, with a
//! constructive witness on acceptance and an exhaustive search oracle.
//!
//! A pair `(G, F)` is a fuzzy rough set when some reference set `f` has
//! `G = lower(f)` and `F = upper(f)`. Over a similarity relation with an
//! idempotent algebra this holds exactly when
//!
//! 1. `G` is a lower fixpoint, `F` an upper fixpoint and `G <= F`;
//! 2. every maximal lower-side class all of whose members form maximal
//!    singleton upper-side classes contains an element with `G = F`;
//! 3. symmetrically with the two sides swapped.
//!
//! On acceptance a witness is assembled by overriding `F` with `G` at one
//! representative per maximal lower-side class.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quasiorder::{self, FactorPoset};
use crate::space::{ApproximationSpace, FuzzySet};

/// A pair of fuzzy sets read as (lower, upper); certified when a reference
/// set whose approximations they are is attached.
#[derive(Clone)]
pub struct RoughPair {
    lower: FuzzySet,
    upper: FuzzySet,
    witness: Option<FuzzySet>,
}

impl RoughPair {
    /// Wraps a candidate pair without certification.
    pub fn candidate(lower: FuzzySet, upper: FuzzySet) -> Result<Self> {
        lower.universe().check_same(upper.universe())?;
        Ok(RoughPair {
            lower,
            upper,
            witness: None,
        })
    }

    pub(crate) fn certified(lower: FuzzySet, upper: FuzzySet, witness: FuzzySet) -> Self {
        RoughPair {
            lower,
            upper,
            witness: Some(witness),
        }
    }

    pub fn lower(&self) -> &FuzzySet {
        &self.lower
    }

    pub fn upper(&self) -> &FuzzySet {
        &self.upper
    }

    pub fn witness(&self) -> Option<&FuzzySet> {
        self.witness.as_ref()
    }

    pub fn is_certified(&self) -> bool {
        self.witness.is_some()
    }
}

/// Pairs compare by their two value vectors; the witness is certification
/// metadata, not identity. Many reference sets induce the same pair.
impl PartialEq for RoughPair {
    fn eq(&self, other: &Self) -> bool {
        self.lower == other.lower && self.upper == other.upper
    }
}

impl Eq for RoughPair {}

impl fmt::Debug for RoughPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(lower {:?}, upper {:?})", self.lower, self.upper)
    }
}

/// The first violated acceptance condition, in checking order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FailedCondition {
    /// The candidate lower set is not a fixpoint of the lower approximation.
    LowerNotFixed,
    /// The candidate upper set is not a fixpoint of the upper approximation.
    UpperNotFixed,
    /// The lower set does not lie below the upper set.
    OrderViolated,
    /// A maximal lower-side class whose members all form maximal singleton
    /// upper-side classes has no element where the two sets agree.
    NoEqualityInLowerClass { class: Vec<String> },
    /// A maximal upper-side class whose members all form maximal singleton
    /// lower-side classes has no element where the two sets agree.
    NoEqualityInUpperClass { class: Vec<String> },
}

/// Outcome of the decision procedure: accepted with a witness, or rejected
/// with the first failed condition.
#[derive(Clone, Debug)]
pub struct CharacterizationVerdict {
    pub accepted: bool,
    pub failed: Option<FailedCondition>,
    pub witness: Option<FuzzySet>,
}

impl CharacterizationVerdict {
    fn rejected(failed: FailedCondition) -> Self {
        CharacterizationVerdict {
            accepted: false,
            failed: Some(failed),
            witness: None,
        }
    }

    fn accepted(witness: FuzzySet) -> Self {
        CharacterizationVerdict {
            accepted: true,
            failed: None,
            witness: Some(witness),
        }
    }
}

/// Decides whether `(lower, upper)` is a fuzzy rough set of the space.
///
/// Requires an idempotent algebra and a similarity relation. Conditions are
/// checked in a fixed order and maximal classes scanned in order of their
/// smallest member, so rejection reports are deterministic.
pub fn is_fuzzy_rough_pair(
    space: &ApproximationSpace,
    upper: &FuzzySet,
    lower: &FuzzySet,
) -> Result<CharacterizationVerdict> {
    space.algebra().require_idempotence()?;
    space.require_similarity()?;
    space.check_set(upper)?;
    space.check_set(lower)?;

    if !space.is_fixed_lower(lower)? {
        return Ok(CharacterizationVerdict::rejected(
            FailedCondition::LowerNotFixed,
        ));
    }
    if !space.is_fixed_upper(upper)? {
        return Ok(CharacterizationVerdict::rejected(
            FailedCondition::UpperNotFixed,
        ));
    }
    if !lower.leq(upper)? {
        return Ok(CharacterizationVerdict::rejected(
            FailedCondition::OrderViolated,
        ));
    }

    let upper_poset = quasiorder::factor_poset(&quasiorder::from_upper(space, upper)?)?;
    let lower_poset = quasiorder::factor_poset(&quasiorder::from_lower(space, lower)?)?;

    // condition 2: maximal lower-side classes made of maximal singleton
    // upper-side classes
    for &class in lower_poset.maximal() {
        let members = lower_poset.partition().members(class);
        let premise = members.iter().all(|&x| upper_poset.is_singleton_maximal(x));
        if premise && !members.iter().any(|&u| lower.value(u) == upper.value(u)) {
            return Ok(CharacterizationVerdict::rejected(
                FailedCondition::NoEqualityInLowerClass {
                    class: lower_poset.partition().class_names(class),
                },
            ));
        }
    }

    // condition 3: the mirror image
    for &class in upper_poset.maximal() {
        let members = upper_poset.partition().members(class);
        let premise = members.iter().all(|&x| lower_poset.is_singleton_maximal(x));
        if premise && !members.iter().any(|&v| lower.value(v) == upper.value(v)) {
            return Ok(CharacterizationVerdict::rejected(
                FailedCondition::NoEqualityInUpperClass {
                    class: upper_poset.partition().class_names(class),
                },
            ));
        }
    }

    let witness = build_witness(space, upper, lower, &upper_poset, &lower_poset)?;
    Ok(CharacterizationVerdict::accepted(witness))
}

/// Builds the certifying reference set for an already-accepted pair.
///
/// From each maximal lower-side class one representative is selected — by
/// preference an element in no maximal upper-side class, then an element
/// where the two sets agree, then one whose singleton is not a maximal
/// upper-side class — ties broken by smallest universe index. The witness is
/// `lower` on the selected elements and `upper` elsewhere, re-verified by
/// recomputing both approximations.
pub fn construct_witness(
    space: &ApproximationSpace,
    upper: &FuzzySet,
    lower: &FuzzySet,
) -> Result<FuzzySet> {
    let upper_poset = quasiorder::factor_poset(&quasiorder::from_upper(space, upper)?)?;
    let lower_poset = quasiorder::factor_poset(&quasiorder::from_lower(space, lower)?)?;
    build_witness(space, upper, lower, &upper_poset, &lower_poset)
}

fn build_witness(
    space: &ApproximationSpace,
    upper: &FuzzySet,
    lower: &FuzzySet,
    upper_poset: &FactorPoset,
    lower_poset: &FactorPoset,
) -> Result<FuzzySet> {
    let mut selected = Vec::new();
    for &class in lower_poset.maximal() {
        let members = lower_poset.partition().members(class);
        let in_no_maximal_upper_class =
            |&&x: &&usize| !upper_poset.is_maximal(upper_poset.partition().class_of(x));
        let values_agree = |&&x: &&usize| lower.value(x) == upper.value(x);
        let singleton_not_maximal = |&&x: &&usize| !upper_poset.is_singleton_maximal(x);
        let choice = members
            .iter()
            .find(in_no_maximal_upper_class)
            .or_else(|| members.iter().find(values_agree))
            .or_else(|| members.iter().find(singleton_not_maximal));
        match choice {
            Some(&x) => selected.push(x),
            None => {
                return Err(Error::SelectionImpossible(
                    lower_poset.partition().class_names(class).join(","),
                ))
            }
        }
    }
    let witness = override_at(upper, lower, &selected);
    verify_witness(space, upper, lower, witness)
}

pub(crate) fn override_at(base: &FuzzySet, values: &FuzzySet, selected: &[usize]) -> FuzzySet {
    let mut witness = base.clone();
    for &x in selected {
        witness = witness.with_value(x, values.value(x).clone());
    }
    witness
}

pub(crate) fn verify_witness(
    space: &ApproximationSpace,
    upper: &FuzzySet,
    lower: &FuzzySet,
    witness: FuzzySet,
) -> Result<FuzzySet> {
    if space.upper(&witness)? != *upper || space.lower(&witness)? != *lower {
        // Reachable only when the acceptance conditions did not actually
        // hold for the inputs.
        return Err(Error::SelectionImpossible(
            "constructed reference set fails recomputation".to_string(),
        ));
    }
    Ok(witness)
}

/// Default candidate budget of the exhaustive oracle: ample for chains and
/// universes at desk scale (the 6-element sample space needs 5^6).
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000;

/// Exhaustive, implementation-independent oracle: enumerates every chain
/// valued reference set in lexicographic universe order and returns the first
/// whose approximations are exactly `(lower, upper)`.
pub fn exhaustive_witness_search(
    space: &ApproximationSpace,
    upper: &FuzzySet,
    lower: &FuzzySet,
    budget: u64,
) -> Result<Option<FuzzySet>> {
    let chain = space.require_chain()?;
    space.check_set(upper)?;
    space.check_set(lower)?;
    let n = space.universe().len();
    let candidates = (chain.len() as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if candidates > budget as u128 {
        return Err(Error::BudgetExceeded { candidates, budget });
    }

    let mut digits = vec![0usize; n];
    loop {
        let candidate = FuzzySet::new(
            space.universe().clone(),
            digits
                .iter()
                .map(|&d| chain.get(d).expect("digit in range").clone())
                .collect(),
        )?;
        if space.upper(&candidate)? == *upper && space.lower(&candidate)? == *lower {
            return Ok(Some(candidate));
        }
        // advance the odometer; the first digit is the most significant
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            if digits[pos] + 1 < chain.len() {
                digits[pos] += 1;
                for d in digits.iter_mut().skip(pos + 1) {
                    *d = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::UnitRational;
    use crate::samples;

    #[test]
    fn crossed_pair_meet_is_rejected_on_the_upper_class() {
        let space = samples::three_element_space();
        let upper = FuzzySet::parse(space.universe(), &["3/4", "3/4", "1/2"]).unwrap();
        let lower = FuzzySet::parse(space.universe(), &["1/10", "1/10", "1/2"]).unwrap();
        let verdict = is_fuzzy_rough_pair(&space, &upper, &lower).unwrap();
        assert!(!verdict.accepted);
        assert_eq!(
            verdict.failed,
            Some(FailedCondition::NoEqualityInUpperClass {
                class: vec!["a".to_string(), "b".to_string()]
            })
        );
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn six_element_pair_is_accepted_with_deterministic_witness() {
        let space = samples::six_element_space();
        let h = samples::six_element_reference_set();
        let upper = space.upper(&h).unwrap();
        let lower = space.lower(&h).unwrap();
        let verdict = is_fuzzy_rough_pair(&space, &upper, &lower).unwrap();
        assert!(verdict.accepted);
        let witness = verdict.witness.unwrap();
        assert_eq!(
            witness,
            FuzzySet::parse(space.universe(), &["0", "1", "3/4", "1/2", "1/2", "3/4"]).unwrap()
        );
        assert_eq!(space.upper(&witness).unwrap(), upper);
        assert_eq!(space.lower(&witness).unwrap(), lower);
    }

    #[test]
    fn constant_zero_pair_is_accepted_with_zero_witness() {
        let space = samples::three_element_space();
        let zero = FuzzySet::constant(space.universe().clone(), UnitRational::zero());
        let verdict = is_fuzzy_rough_pair(&space, &zero, &zero).unwrap();
        assert!(verdict.accepted);
        assert_eq!(verdict.witness.unwrap(), zero);
    }

    #[test]
    fn single_element_universe_pairs() {
        let universe = crate::space::Universe::new(["a"]).unwrap();
        let space = crate::space::ApproximationSpace::new(
            crate::space::FuzzyRelation::identity(universe.clone()),
            crate::algebra::Algebra::kleene_dienes(),
            Some(crate::rational::Chain::parse(&["0", "1/4", "1"]).unwrap()),
        )
        .unwrap();
        let v = FuzzySet::parse(&universe, &["1/4"]).unwrap();
        let verdict = is_fuzzy_rough_pair(&space, &v, &v).unwrap();
        assert!(verdict.accepted);
        assert_eq!(verdict.witness.unwrap(), v);
    }

    #[test]
    fn fixpoint_and_order_rejections_come_first() {
        let space = samples::three_element_space();
        let (f1, _) = samples::three_element_sets();
        let upper = space.upper(&f1).unwrap();
        let lower = space.lower(&f1).unwrap();
        // f1 itself is not a lower fixpoint
        let verdict = is_fuzzy_rough_pair(&space, &upper, &f1).unwrap();
        assert_eq!(verdict.failed, Some(FailedCondition::LowerNotFixed));
        let verdict = is_fuzzy_rough_pair(&space, &f1, &lower).unwrap();
        assert_eq!(verdict.failed, Some(FailedCondition::UpperNotFixed));
        // both components fixed but in the wrong order
        let verdict = is_fuzzy_rough_pair(&space, &lower, &upper);
        // lower(f1) is not an upper fixpoint here, so the fixpoint check
        // fires before the order check
        assert!(!verdict.unwrap().accepted);
        let half = FuzzySet::constant(space.universe().clone(), "1/2".parse().unwrap());
        let zero = FuzzySet::constant(space.universe().clone(), UnitRational::zero());
        let verdict = is_fuzzy_rough_pair(&space, &zero, &half).unwrap();
        assert_eq!(verdict.failed, Some(FailedCondition::OrderViolated));
    }

    #[test]
    fn oracle_agrees_on_the_sample_rejection() {
        let space = samples::three_element_space();
        let upper = FuzzySet::parse(space.universe(), &["3/4", "3/4", "1/2"]).unwrap();
        let lower = FuzzySet::parse(space.universe(), &["1/10", "1/10", "1/2"]).unwrap();
        let found =
            exhaustive_witness_search(&space, &upper, &lower, DEFAULT_ORACLE_BUDGET).unwrap();
        assert!(found.is_none());
    }

    #[test]
    fn oracle_finds_constant_witnesses_first() {
        let space = samples::three_element_coarse_space();
        let half = FuzzySet::constant(space.universe().clone(), "1/2".parse().unwrap());
        let found = exhaustive_witness_search(&space, &half, &half, 1_000)
            .unwrap()
            .unwrap();
        assert_eq!(found, half);

        let zero = FuzzySet::constant(space.universe().clone(), UnitRational::zero());
        let found = exhaustive_witness_search(&space, &zero, &zero, 1_000)
            .unwrap()
            .unwrap();
        assert_eq!(found, zero);
    }

    #[test]
    fn oracle_respects_its_budget() {
        let space = samples::three_element_space();
        let zero = FuzzySet::constant(space.universe().clone(), UnitRational::zero());
        assert!(matches!(
            exhaustive_witness_search(&space, &zero, &zero, 10),
            Err(Error::BudgetExceeded {
                candidates: 216,
                budget: 10
            })
        ));
    }
}
