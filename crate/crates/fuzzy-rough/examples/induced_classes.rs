//! The crisp quasiorders induced by the two approximations of a set, their
//! equivalence classes, factor posets and maximal classes, with DOT output.
//!
//! Run with: `cargo run --example induced_classes`

use fuzzy_rough::io::dot;
use fuzzy_rough::quasiorder::{self, class_label, Side};
use fuzzy_rough::samples;
use fuzzy_rough::Result;

fn main() -> Result<()> {
    let space = samples::six_element_space();
    let h = samples::six_element_reference_set();
    let upper = space.upper(&h)?;
    let lower = space.lower(&h)?;
    println!("reference set {h:?}");
    println!("upper image   {upper:?}");
    println!("lower image   {lower:?}");

    for (label, side, image) in [
        ("upper", Side::Upper, &upper),
        ("lower", Side::Lower, &lower),
    ] {
        let q = match side {
            Side::Upper => quasiorder::from_upper(&space, image)?,
            Side::Lower => quasiorder::from_lower(&space, image)?,
        };
        let poset = quasiorder::factor_poset(&q)?;
        println!("\n{label}-side quasiorder: {q:?}");
        println!(
            "classes: {}",
            (0..poset.class_count())
                .map(|c| class_label(poset.partition(), c))
                .collect::<Vec<_>>()
                .join(" ")
        );
        println!("cover edges of the factor poset: {:?}", poset.covers());
        println!(
            "maximal classes: {}",
            poset
                .maximal()
                .iter()
                .map(|&c| class_label(poset.partition(), c))
                .collect::<Vec<_>>()
                .join(" ")
        );
        // the same quasiorder through the negated set
        let via = quasiorder::via_negation(&space, side, image)?;
        println!("recomputed through negation: identical = {}", via == q);
        println!(
            "DOT of the factor poset:\n{}",
            dot::factor_poset_dot(&poset)
        );
    }
    Ok(())
}
