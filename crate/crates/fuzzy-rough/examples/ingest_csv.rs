//! Building a chain-valued similarity space from tabular data: min-max
//! normalization per column, pointwise-min aggregation, max-min transitive
//! closure, flooring to the chain.
//!
//! Run with: `cargo run --example ingest_csv`

use fuzzy_rough::algebra::{Algebra, TNormKind};
use fuzzy_rough::io::document;
use fuzzy_rough::io::ingest::{ingest_similarity, IngestOptions};
use fuzzy_rough::rational::Chain;
use fuzzy_rough::space::ApproximationSpace;
use fuzzy_rough::Result;

const DATA: &str = "\
name,sepal,petal
rowan,5.1,1.4
holly,4.9,1.3
yew,6.3,5.1
alder,6.5,5.4
";

fn main() -> Result<()> {
    let chain = Chain::parse(&["0", "1/4", "1/2", "3/4", "1"])?;
    let options = IngestOptions {
        columns: Some(vec!["sepal".to_string(), "petal".to_string()]),
        id_column: Some("name".to_string()),
    };
    let (universe, relation) = ingest_similarity(DATA.as_bytes(), &chain, &options)?;
    println!("universe {universe:?}");
    println!("θ =\n{relation:?}");
    let report = relation.validate(TNormKind::Min);
    println!("similarity checks:\n{report}");

    let space = ApproximationSpace::new(relation, Algebra::kleene_dienes(), Some(chain))?;
    print!("\nspace document:\n{}", document::space_to_json(&space));
    Ok(())
}
