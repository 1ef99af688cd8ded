//! The seeded randomized verification runner: samples chain-valued
//! similarity spaces and machine-checks the crate's full law inventory,
//! printing a reproducible transcript.
//!
//! Run with: `cargo run --example verify_laws`

use fuzzy_rough::io::verify::{run, VerifyConfig};

fn main() {
    let config = VerifyConfig {
        seed: 42,
        samples: 60,
        max_universe: 4,
        max_chain: 4,
        ..VerifyConfig::default()
    };
    let outcome = run(&config);
    print!("{}", outcome.transcript());
    std::process::exit(if outcome.all_pass() { 0 } else { 1 });
}
