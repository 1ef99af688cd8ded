//! Crisp quasiorders induced by approximation fixpoints, their equivalence
//! classes and the natural partial order on the factor set.
//!
//! For an upper-approximation fixpoint `F` the induced relation contains
//! `(a, b)` exactly when `F(a) = θ(a,b) ⊙ F(b)`; for a lower fixpoint `G` the
//! test is `G(a) = θ(a,b) ▷ G(b)`. Over a reflexive, ⊙-transitive relation
//! both are reflexive and transitive, which is re-verified at construction:
//! a violation signals that the input was not an operator image.

use std::fmt;

use crate::error::{Error, Result};
use crate::report::{PropertyCheck, ValidationReport};
use crate::space::{ApproximationSpace, FuzzySet, Universe};

/// Which approximation operator a fixpoint came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
}

/// A reflexive, transitive boolean relation on a universe.
#[derive(Clone, PartialEq, Eq)]
pub struct CrispQuasiorder {
    universe: Universe,
    adjacency: Vec<bool>,
}

impl CrispQuasiorder {
    fn from_test(universe: Universe, test: impl Fn(usize, usize) -> Result<bool>) -> Result<Self> {
        let n = universe.len();
        let mut adjacency = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                adjacency[a * n + b] = test(a, b)?;
            }
        }
        let q = CrispQuasiorder {
            universe,
            adjacency,
        };
        if let Some(a) = (0..n).find(|&a| !q.contains(a, a)) {
            return Err(Error::NotAQuasiorder(format!(
                "missing loop at {}",
                q.universe.name(a)
            )));
        }
        if let Some((a, b, c)) = q.transitivity_witness() {
            return Err(Error::NotAQuasiorder(format!(
                "({}, {}) and ({}, {}) present but ({}, {}) missing",
                q.universe.name(a),
                q.universe.name(b),
                q.universe.name(b),
                q.universe.name(c),
                q.universe.name(a),
                q.universe.name(c)
            )));
        }
        Ok(q)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn contains(&self, from: usize, to: usize) -> bool {
        self.adjacency[from * self.universe.len() + to]
    }

    /// All related pairs in row-major universe order, loops included.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.universe.len();
        (0..n).flat_map(move |a| {
            (0..n)
                .filter(move |&b| self.contains(a, b))
                .map(move |b| (a, b))
        })
    }

    fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.universe.len();
        for a in 0..n {
            for b in 0..n {
                if !self.contains(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.contains(b, c) && !self.contains(a, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

impl fmt::Debug for CrispQuasiorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for (a, b) in self.pairs() {
            if a != b {
                list.entry(&format!(
                    "{}->{}",
                    self.universe.name(a),
                    self.universe.name(b)
                ));
            }
        }
        list.finish()
    }
}

/// The quasiorder induced by an upper-approximation fixpoint.
///
/// When the algebra guarantees idempotence the fixpoint property is checked
/// first and `NotUpperFixed` reported if it fails.
pub fn from_upper(space: &ApproximationSpace, upper: &FuzzySet) -> Result<CrispQuasiorder> {
    space.check_set(upper)?;
    if space.algebra().is_idempotent() {
        let image = space.upper(upper)?;
        if let Some(i) = first_difference(&image, upper) {
            return Err(Error::NotUpperFixed(space.universe().name(i).to_string()));
        }
    }
    let theta = space.theta();
    let algebra = space.algebra();
    CrispQuasiorder::from_test(space.universe().clone(), |a, b| {
        Ok(*upper.value(a) == algebra.conj(theta.get(a, b), upper.value(b)))
    })
}

/// The quasiorder induced by a lower-approximation fixpoint.
pub fn from_lower(space: &ApproximationSpace, lower: &FuzzySet) -> Result<CrispQuasiorder> {
    space.check_set(lower)?;
    if space.algebra().is_idempotent() {
        let image = space.lower(lower)?;
        if let Some(i) = first_difference(&image, lower) {
            return Err(Error::NotLowerFixed(space.universe().name(i).to_string()));
        }
    }
    let theta = space.theta();
    let algebra = space.algebra();
    let chain = space.chain();
    CrispQuasiorder::from_test(space.universe().clone(), |a, b| {
        Ok(*lower.value(a) == algebra.implication(chain, theta.get(a, b), lower.value(b))?)
    })
}

fn first_difference(a: &FuzzySet, b: &FuzzySet) -> Option<usize> {
    a.values().iter().zip(b.values()).position(|(x, y)| x != y)
}

/// Computes the quasiorder of `set` through its negation: the upper-side
/// quasiorder equals the lower-side quasiorder of the negated set, and vice
/// versa. Requires an involutive negator; the indirect result is asserted
/// against the directly computed one.
pub fn via_negation(
    space: &ApproximationSpace,
    side: Side,
    set: &FuzzySet,
) -> Result<CrispQuasiorder> {
    if !space.algebra().negator.is_involutive() {
        return Err(Error::NegatorNotInvolutive);
    }
    space.algebra().require_duality()?;
    let negated = space.negate(set)?;
    let (direct, swapped) = match side {
        Side::Upper => (from_upper(space, set)?, from_lower(space, &negated)?),
        Side::Lower => (from_lower(space, set)?, from_upper(space, &negated)?),
    };
    assert_eq!(
        direct, swapped,
        "negation must induce the same quasiorder from the opposite side"
    );
    Ok(swapped)
}

/// Disjoint equivalence classes covering the universe, each listed in
/// universe order; the blocks themselves are ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    universe: Universe,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ClassPartition {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn members(&self, class: usize) -> &[usize] {
        &self.classes[class]
    }

    pub fn class_names(&self, class: usize) -> Vec<String> {
        self.classes[class]
            .iter()
            .map(|&i| self.universe.name(i).to_string())
            .collect()
    }

    /// True when the class of `element` is exactly the singleton `{element}`.
    pub fn is_singleton_class(&self, element: usize) -> bool {
        self.classes[self.class_of[element]].len() == 1
    }
}

/// The factor poset of a quasiorder: classes of mutual relation with the
/// lifted order and its maximal classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorPoset {
    partition: ClassPartition,
    leq: Vec<bool>,
    maximal: Vec<usize>,
}

impl FactorPoset {
    pub fn partition(&self) -> &ClassPartition {
        &self.partition
    }

    pub fn class_count(&self) -> usize {
        self.partition.class_count()
    }

    /// Class order lifted from the quasiorder.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.partition.class_count() + b]
    }

    /// Indices of maximal classes, ascending.
    pub fn maximal(&self) -> &[usize] {
        &self.maximal
    }

    pub fn is_maximal(&self, class: usize) -> bool {
        self.maximal.binary_search(&class).is_ok()
    }

    /// True when `{element}` is a class and that class is maximal.
    pub fn is_singleton_maximal(&self, element: usize) -> bool {
        self.partition.is_singleton_class(element)
            && self.is_maximal(self.partition.class_of(element))
    }

    /// Cover edges `(lower, upper)` of the Hasse diagram, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.class_count();
        let mut covers = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let skipped = (0..k).any(|m| m != a && m != b && self.leq(a, m) && self.leq(m, b));
                if !skipped {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        covers
    }
}

/// Partitions the universe into classes of mutual relation and lifts the
/// quasiorder to the natural partial order on the factor set.
pub fn factor_poset(q: &CrispQuasiorder) -> Result<FactorPoset> {
    let n = q.universe().len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for (b, slot) in class_of.iter_mut().enumerate() {
            if q.contains(a, b) && q.contains(b, a) {
                if *slot != usize::MAX {
                    return Err(Error::NotAQuasiorder(format!(
                        "classes of {} and {} overlap without merging",
                        q.universe().name(a),
                        q.universe().name(b)
                    )));
                }
                *slot = id;
                members.push(b);
            }
        }
        classes.push(members);
    }
    let k = classes.len();
    let mut leq = vec![false; k * k];
    for (a_class, members) in classes.iter().enumerate() {
        let repr_a = members[0];
        for (b_class, other) in classes.iter().enumerate() {
            let related = q.contains(repr_a, other[0]);
            // One witness pair suffices; all pairs must agree.
            debug_assert!(members
                .iter()
                .all(|&x| other.iter().all(|&y| q.contains(x, y) == related)));
            leq[a_class * k + b_class] = related;
        }
    }
    for a in 0..k {
        for b in 0..k {
            if a != b && leq[a * k + b] && leq[b * k + a] {
                return Err(Error::NotAQuasiorder(
                    "distinct classes are mutually related".to_string(),
                ));
            }
        }
    }
    let maximal = (0..k)
        .filter(|&a| (0..k).all(|b| b == a || !leq[a * k + b]))
        .collect();
    Ok(FactorPoset {
        partition: ClassPartition {
            universe: q.universe().clone(),
            classes,
            class_of,
        },
        leq,
        maximal,
    })
}

/// Verifies the threshold characterization of membership available in the
/// min/max setting over a similarity relation: a pair `(a, b)` is in the
/// upper-side quasiorder exactly when `F(a) <= θ(a,b)`, and in the lower-side
/// one exactly when `G(a) >= n(θ(a,b))`.
pub fn threshold_report(
    space: &ApproximationSpace,
    side: Side,
    set: &FuzzySet,
    q: &CrispQuasiorder,
) -> Result<ValidationReport> {
    space.algebra().require_min_max_involutive()?;
    space.require_similarity()?;
    space.universe().check_same(q.universe())?;
    let n = space.universe().len();
    let mut witness = None;
    'outer: for a in 0..n {
        for b in 0..n {
            let theta = space.theta().get(a, b);
            let expected = match side {
                Side::Upper => *set.value(a) <= *theta,
                Side::Lower => *set.value(a) >= space.algebra().negate(space.chain(), theta)?,
            };
            if q.contains(a, b) != expected {
                witness = Some(format!(
                    "({}, {}): membership {} but threshold test {}",
                    space.universe().name(a),
                    space.universe().name(b),
                    q.contains(a, b),
                    expected
                ));
                break 'outer;
            }
        }
    }
    let mut report = ValidationReport::new();
    report.push(PropertyCheck::of("threshold-characterization", witness));
    Ok(report)
}

/// Maximal classes computed directly from the threshold characterization,
/// independently of the factor poset: a block is maximal exactly when the
/// relation separates it strictly from everything outside.
///
/// Upper side: `θ(a,z) < F(a) = F(b) <= θ(a,b)` for all `a, b` in the block
/// and `z` outside. Lower side: `n(θ(a,b)) <= G(a) = G(b) < n(θ(a,z))`.
pub fn maximal_blocks_by_threshold(
    space: &ApproximationSpace,
    side: Side,
    set: &FuzzySet,
    partition: &ClassPartition,
) -> Result<Vec<usize>> {
    space.algebra().require_min_max_involutive()?;
    space.require_similarity()?;
    let n = space.universe().len();
    let mut maximal = Vec::new();
    'blocks: for (id, members) in partition.classes().iter().enumerate() {
        for &a in members {
            for &b in members {
                if set.value(a) != set.value(b) {
                    continue 'blocks;
                }
                let bound = match side {
                    Side::Upper => *set.value(a) <= *space.theta().get(a, b),
                    Side::Lower => {
                        *set.value(a)
                            >= space
                                .algebra()
                                .negate(space.chain(), space.theta().get(a, b))?
                    }
                };
                if !bound {
                    continue 'blocks;
                }
            }
            for z in 0..n {
                if partition.class_of(z) == id {
                    continue;
                }
                let separated = match side {
                    Side::Upper => *space.theta().get(a, z) < *set.value(a),
                    Side::Lower => {
                        *set.value(a)
                            < space
                                .algebra()
                                .negate(space.chain(), space.theta().get(a, z))?
                    }
                };
                if !separated {
                    continue 'blocks;
                }
            }
        }
        maximal.push(id);
    }
    Ok(maximal)
}

/// Checks value propagation along the quasiorder: whenever `(a, b)` is in the
/// upper-side quasiorder of `F` and `h <= F` agrees with `F` at `b`, the
/// upper approximation of `h` reproduces `F` at `a` (dually for the lower
/// side with `h >= G`).
pub fn propagation_report(
    space: &ApproximationSpace,
    side: Side,
    set: &FuzzySet,
    q: &CrispQuasiorder,
    h: &FuzzySet,
) -> Result<ValidationReport> {
    space.universe().check_same(q.universe())?;
    space.check_set(h)?;
    let applicable = match side {
        Side::Upper => h.leq(set)?,
        Side::Lower => set.leq(h)?,
    };
    let mut report = ValidationReport::new();
    if !applicable {
        report.push(PropertyCheck::skipped(
            "value-propagation",
            match side {
                Side::Upper => "h is not below the fixpoint",
                Side::Lower => "h is not above the fixpoint",
            },
        ));
        return Ok(report);
    }
    let image = match side {
        Side::Upper => space.upper(h)?,
        Side::Lower => space.lower(h)?,
    };
    let n = space.universe().len();
    let mut witness = None;
    'outer: for a in 0..n {
        for b in 0..n {
            if !q.contains(a, b) || h.value(b) != set.value(b) {
                continue;
            }
            if image.value(a) != set.value(a) {
                witness = Some(format!(
                    "({}, {}): image value {} differs from {}",
                    space.universe().name(a),
                    space.universe().name(b),
                    image.value(a),
                    set.value(a)
                ));
                break 'outer;
            }
        }
    }
    report.push(PropertyCheck::of("value-propagation", witness));
    Ok(report)
}

/// Pretty class label `{a,b}` used by diagrams and reports.
pub fn class_label(partition: &ClassPartition, class: usize) -> String {
    format!("{{{}}}", partition.class_names(class).join(","))
}
