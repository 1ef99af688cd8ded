//! Operator algebras and their validation over a chain: law checks with
//! counterexample witnesses, closure reports and induced negators.
//!
//! Run with: `cargo run --example validate_algebra`

use fuzzy_rough::algebra::{Algebra, ImplicatorKind, NegatorKind, TConormKind, TNormKind};
use fuzzy_rough::rational::Chain;
use fuzzy_rough::Result;

fn main() -> Result<()> {
    let symmetric = Chain::parse(&["0", "1/4", "1/2", "3/4", "1"])?;
    let lopsided = Chain::parse(&["0", "1/10", "1/4", "1/2", "3/4", "1"])?;

    let kd = Algebra::kleene_dienes();
    println!("min/max with the standard negator on {symmetric:?}:");
    print!("{}", kd.validate(&symmetric));

    println!("\nthe same algebra on {lopsided:?} (not closed under 1 - x):");
    let report = kd.validate(&lopsided);
    for check in report.checks.iter().filter(|c| !c.holds()) {
        println!("  {:?}", check);
    }

    println!("\nchain reversal repairs closure on the same chain:");
    let reversal = Algebra::min_max(NegatorKind::ChainReversal);
    let report = reversal.validate(&lopsided);
    println!(
        "  all checks hold: {} (negator involutive: {})",
        report.all_hold(),
        reversal.negator.is_involutive()
    );

    // a mismatched pair: product t-norm against the max co-norm
    let product_kd = Algebra::new(
        TNormKind::Product,
        TConormKind::Max,
        NegatorKind::Standard,
        ImplicatorKind::S(TConormKind::Max, NegatorKind::Standard),
    );
    let report = product_kd.validate(&symmetric);
    println!("\nproduct t-norm with max co-norm:");
    println!("  n-dual: {:?}", report.find("n-dual").unwrap());

    // negators induced by residual implicators
    for tnorm in [TNormKind::Min, TNormKind::Lukasiewicz] {
        let algebra = Algebra::residual(tnorm);
        println!(
            "\nresidual of {:?} induces the negator {:?}",
            tnorm,
            algebra.induced_negator(&symmetric)?
        );
    }
    Ok(())
}
