//! Lower and upper approximations of fuzzy sets, computed exactly.
//!
//! Builds a three-element space from a JSON document, approximates two
//! reference sets and shows the fixpoint property of the images.
//!
//! Run with: `cargo run --example approximations`

use fuzzy_rough::io::document;
use fuzzy_rough::space::FuzzySet;
use fuzzy_rough::Result;

fn main() -> Result<()> {
    let space = document::space_from_json(
        r#"{
            "universe": ["a", "b", "c"],
            "chain": ["0", "1/10", "1/4", "1/2", "3/4", "1"],
            "algebra": {"tnorm": "min", "tconorm": "max",
                        "negator": "standard", "implicator": "kd"},
            "theta": [["1",   "3/4", "1/4"],
                      ["3/4", "1",   "1/4"],
                      ["1/4", "1/4", "1"]]
        }"#,
    )?;
    println!("similarity space over {:?}", space.universe());
    println!("θ =\n{:?}", space.theta());

    for values in [["1", "1/10", "1/2"], ["1/10", "1", "1/2"]] {
        let f = FuzzySet::parse(space.universe(), &values)?;
        let lower = space.lower(&f)?;
        let upper = space.upper(&f)?;
        println!("\nf       = {f:?}");
        println!("lower f = {lower:?}");
        println!("upper f = {upper:?}");
        println!(
            "images are fixpoints: lower {} / upper {}",
            space.is_fixed_lower(&lower)?,
            space.is_fixed_upper(&upper)?
        );
    }
    Ok(())
}
