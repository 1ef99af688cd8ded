//! Deciding whether a pair of fuzzy sets is a fuzzy rough set: an accepted
//! pair with its constructed certificate, a rejected pair with the failing
//! condition, and the exhaustive oracle cross-check.
//!
//! Run with: `cargo run --example check_pair`

use fuzzy_rough::characterize::{
    exhaustive_witness_search, is_fuzzy_rough_pair, DEFAULT_ORACLE_BUDGET,
};
use fuzzy_rough::samples;
use fuzzy_rough::space::FuzzySet;
use fuzzy_rough::Result;

fn main() -> Result<()> {
    // accepted: the approximations of an actual reference set
    let space = samples::six_element_space();
    let h = samples::six_element_reference_set();
    let upper = space.upper(&h)?;
    let lower = space.lower(&h)?;
    let verdict = is_fuzzy_rough_pair(&space, &upper, &lower)?;
    println!("upper {upper:?}");
    println!("lower {lower:?}");
    println!("accepted: {}", verdict.accepted);
    let witness = verdict.witness.expect("accepted pairs carry a witness");
    println!("constructed certificate {witness:?}");
    println!(
        "certificate reproduces the pair: {}",
        space.upper(&witness)? == upper && space.lower(&witness)? == lower
    );

    // rejected: the componentwise meet of two incomparable pairs
    let space = samples::three_element_space();
    let upper = FuzzySet::parse(space.universe(), &["3/4", "3/4", "1/2"])?;
    let lower = FuzzySet::parse(space.universe(), &["1/10", "1/10", "1/2"])?;
    let verdict = is_fuzzy_rough_pair(&space, &upper, &lower)?;
    println!("\nupper {upper:?}");
    println!("lower {lower:?}");
    println!("accepted: {}", verdict.accepted);
    println!("failed condition: {:?}", verdict.failed);

    // the oracle enumerates every chain-valued reference set
    let found = exhaustive_witness_search(&space, &upper, &lower, DEFAULT_ORACLE_BUDGET)?;
    println!(
        "exhaustive search over {} candidates agrees: {:?}",
        space
            .chain()
            .unwrap()
            .len()
            .pow(space.universe().len() as u32),
        found
    );
    Ok(())
}
