//! Ready-made small approximation spaces used by the examples, the test
//! suites and the documentation.
//!
//! All of them use the min t-norm with the Kleene-Dienes implicator
//! `max(1 - x, y)` and carry a value chain, so every chain-mode operation is
//! available on them.

use crate::algebra::Algebra;
use crate::rational::{Chain, UnitRational};
use crate::space::{ApproximationSpace, FuzzyRelation, FuzzySet, Universe};

fn ur(s: &str) -> UnitRational {
    s.parse().expect("sample literal")
}

fn universe3() -> Universe {
    Universe::new(["a", "b", "c"]).expect("sample universe")
}

fn universe6() -> Universe {
    Universe::new(["a", "b", "c", "d", "e", "f"]).expect("sample universe")
}

/// Three elements, two of them strongly similar (3/4) and both only loosely
/// related to the third (1/4), over the six-value chain
/// `{0, 1/10, 1/4, 1/2, 3/4, 1}`.
pub fn three_element_space() -> ApproximationSpace {
    let theta = FuzzyRelation::symmetric_from_upper_triangle(
        universe3(),
        &[ur("3/4"), ur("1/4"), ur("1/4")],
    )
    .expect("sample relation");
    let chain = Chain::parse(&["0", "1/10", "1/4", "1/2", "3/4", "1"]).expect("sample chain");
    ApproximationSpace::new(theta, Algebra::kleene_dienes(), Some(chain)).expect("sample space")
}

/// The two crossed reference sets `{a: 1, b: 1/10, c: 1/2}` and
/// `{a: 1/10, b: 1, c: 1/2}` on the universe of [`three_element_space`].
pub fn three_element_sets() -> (FuzzySet, FuzzySet) {
    let u = universe3();
    (
        FuzzySet::parse(&u, &["1", "1/10", "1/2"]).expect("sample set"),
        FuzzySet::parse(&u, &["1/10", "1", "1/2"]).expect("sample set"),
    )
}

/// Three elements, two of them indistinguishable (degree 1) and both related
/// to the third at 1/2, over the chain `{0, 1/2, 1}`. Small enough that the
/// full family of 27 reference sets can be enumerated by hand.
pub fn three_element_coarse_space() -> ApproximationSpace {
    let theta =
        FuzzyRelation::symmetric_from_upper_triangle(universe3(), &[ur("1"), ur("1/2"), ur("1/2")])
            .expect("sample relation");
    let chain = Chain::parse(&["0", "1/2", "1"]).expect("sample chain");
    ApproximationSpace::new(theta, Algebra::kleene_dienes(), Some(chain)).expect("sample space")
}

fn six_element_space_with(d_link: &str) -> ApproximationSpace {
    let u = universe6();
    // upper triangle row by row: ab ac ad ae af | bc bd be bf | cd ce cf | de df | ef
    let triangle = [
        ur("1"),
        ur("3/4"),
        ur(d_link),
        ur("0"),
        ur("0"),
        ur("3/4"),
        ur(d_link),
        ur("0"),
        ur("0"),
        ur(d_link),
        ur("0"),
        ur("0"),
        ur("0"),
        ur("0"),
        ur("1/2"),
    ];
    let theta =
        FuzzyRelation::symmetric_from_upper_triangle(u, &triangle).expect("sample relation");
    let chain = Chain::parse(&["0", "1/4", "1/2", "3/4", "1"]).expect("sample chain");
    ApproximationSpace::new(theta, Algebra::kleene_dienes(), Some(chain)).expect("sample space")
}

/// Six elements in two similarity clusters: `{a, b, c, d}` with graded links
/// (a-b at 1, a-c and b-c at 3/4, d tied to the rest at 1/2) and the isolated
/// pair `{e, f}` at 1/2.
pub fn six_element_space() -> ApproximationSpace {
    six_element_space_with("1/2")
}

/// Variant of [`six_element_space`] with the a-d, b-d and c-d degrees lowered
/// to 1/4. Both variants are similarity relations and give the same
/// approximations of [`six_element_reference_set`], but they induce different
/// quasiorders: here `d` no longer reaches the upper cluster.
pub fn six_element_space_weak_links() -> ApproximationSpace {
    six_element_space_with("1/4")
}

/// The reference set `{a: 0, b: 1, c: 1/4, d: 1/2, e: 1/2, f: 3/4}` on the
/// universe of [`six_element_space`].
pub fn six_element_reference_set() -> FuzzySet {
    FuzzySet::parse(&universe6(), &["0", "1", "1/4", "1/2", "1/2", "3/4"]).expect("sample set")
}
