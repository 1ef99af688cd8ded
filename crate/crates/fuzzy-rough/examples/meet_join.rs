//! Meets and joins of fuzzy rough pairs, including a case where the
//! componentwise candidate is not itself a fuzzy rough pair and the
//! constructive correction is needed — and a triple witnessing that the
//! resulting lattice is not distributive.
//!
//! Run with: `cargo run --example meet_join`

use fuzzy_rough::lattice::{join, meet, rough_pair_of};
use fuzzy_rough::samples;
use fuzzy_rough::space::{pointwise_meet, FuzzySet};
use fuzzy_rough::{Result, RoughPair, UnitRational};

fn show(label: &str, pair: &RoughPair) {
    println!(
        "{label}: upper {:?} over lower {:?}",
        pair.upper(),
        pair.lower()
    );
}

fn main() -> Result<()> {
    let space = samples::three_element_space();
    let (f1, f2) = samples::three_element_sets();
    let a1 = rough_pair_of(&space, &f1)?;
    let a2 = rough_pair_of(&space, &f2)?;
    show("a1", &a1);
    show("a2", &a2);

    // the componentwise meet of the two pairs is NOT a fuzzy rough pair;
    // the meet operation corrects the upper component downwards
    let naive_upper = pointwise_meet([a1.upper(), a2.upper()])?;
    let naive_lower = pointwise_meet([a1.lower(), a2.lower()])?;
    println!("\ncomponentwise candidate: upper {naive_upper:?} over lower {naive_lower:?}");
    let met = meet(&space, &[a1.clone(), a2.clone()])?;
    show("a1 ∧ a2", &met);

    // distributivity fails: (a1 ∧ a2) ∨ c != (a1 ∨ c) ∧ (a2 ∨ c)
    let c = rough_pair_of(
        &space,
        &FuzzySet::constant(space.universe().clone(), UnitRational::new(1, 2)?),
    )?;
    show("\nc", &c);
    let lhs = join(&space, &[met, c.clone()])?;
    show("(a1 ∧ a2) ∨ c", &lhs);
    let rhs = meet(
        &space,
        &[join(&space, &[a1, c.clone()])?, join(&space, &[a2, c])?],
    )?;
    show("(a1 ∨ c) ∧ (a2 ∨ c)", &rhs);
    println!("\ndistributive at this triple: {}", lhs == rhs);
    Ok(())
}
