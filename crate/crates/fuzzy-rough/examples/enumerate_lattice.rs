//! Enumerating every fuzzy rough pair of a chain-mode space, checking the
//! lattice properties of the resulting order and exporting its Hasse
//! diagram as DOT.
//!
//! Run with: `cargo run --example enumerate_lattice`

use fuzzy_rough::io::dot;
use fuzzy_rough::lattice::{check_properties, enumerate_lattice};
use fuzzy_rough::samples;
use fuzzy_rough::Result;

fn main() -> Result<()> {
    // 27 reference sets collapse onto 14 distinct pairs
    let space = samples::three_element_coarse_space();
    let diagram = enumerate_lattice(&space, 1_000)?;
    println!(
        "{} reference sets, {} distinct fuzzy rough pairs",
        space
            .chain()
            .unwrap()
            .len()
            .pow(space.universe().len() as u32),
        diagram.len()
    );
    for (i, pair) in diagram.elements().iter().enumerate() {
        println!(
            "  n{i}: upper {:?} over lower {:?}",
            pair.upper(),
            pair.lower()
        );
    }
    let report = check_properties(&space, &diagram);
    println!(
        "lattice: {}, distributive: {}, modular: {}, self-dual: {}",
        report.is_lattice, report.is_distributive, report.is_modular, report.is_self_dual
    );
    println!("\nHasse diagram:\n{}", dot::diagram_dot(&diagram));

    // a finer chain on a different relation loses distributivity
    let space = samples::three_element_space();
    let diagram = enumerate_lattice(&space, 1_000)?;
    let report = check_properties(&space, &diagram);
    println!(
        "finer space: {} pairs; lattice: {}, distributive: {}, witness {:?}",
        diagram.len(),
        report.is_lattice,
        report.is_distributive,
        report.distributivity_witness
    );
    Ok(())
}
