//! The duality involution on fuzzy rough pairs: negation swaps the two
//! approximations and reverses the componentwise order.
//!
//! Run with: `cargo run --example duality`

use fuzzy_rough::lattice::{dual_pair, pair_leq, rough_pair_of};
use fuzzy_rough::samples;
use fuzzy_rough::space::FuzzySet;
use fuzzy_rough::{Result, UnitRational};

fn main() -> Result<()> {
    // the chain {0, 1/2, 1} is closed under 1 - x, so the standard negator
    // acts on the whole diagram
    let space = samples::three_element_coarse_space();
    let f = FuzzySet::parse(space.universe(), &["1", "1/2", "0"])?;
    let g = FuzzySet::parse(space.universe(), &["1", "1", "1/2"])?;
    let p = rough_pair_of(&space, &f)?;
    let q = rough_pair_of(&space, &g)?;

    let dp = dual_pair(&space, &p)?;
    let dq = dual_pair(&space, &q)?;
    println!("p      : upper {:?} over lower {:?}", p.upper(), p.lower());
    println!(
        "Φ(p)   : upper {:?} over lower {:?}",
        dp.upper(),
        dp.lower()
    );
    println!("Φ(Φ(p)) = p: {}", dual_pair(&space, &dp)? == p);
    println!("\np ≤ q: {}", pair_leq(&p, &q)?);
    println!("Φ(q) ≤ Φ(p): {}", pair_leq(&dq, &dp)?);

    let bottom = rough_pair_of(
        &space,
        &FuzzySet::constant(space.universe().clone(), UnitRational::zero()),
    )?;
    let top = rough_pair_of(
        &space,
        &FuzzySet::constant(space.universe().clone(), UnitRational::one()),
    )?;
    println!("\nΦ(bottom) = top: {}", dual_pair(&space, &bottom)? == top);
    Ok(())
}
