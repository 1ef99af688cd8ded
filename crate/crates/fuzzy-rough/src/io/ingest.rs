//! Building chain-valued similarity relations from tabular data.
//!
//! Recipe: min-max normalize each selected numeric column, take
//! `1 - |difference|` as the per-column similarity, aggregate columns by
//! pointwise minimum, close under max-min composition, then floor every
//! degree to the target chain. Flooring commutes with min and fixes 1, so
//! reflexivity, symmetry and min-transitivity all survive quantization.

use std::io::Read;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{parse_big_rational, Chain, UnitRational};
use crate::space::{FuzzyRelation, Universe};

/// Options for [`ingest_similarity`].
#[derive(Clone, Debug, Default)]
pub struct IngestOptions {
    /// Columns to use; defaults to every column (all must be numeric).
    pub columns: Option<Vec<String>>,
    /// Column providing row names; defaults to generated names `r1`, `r2`, ...
    pub id_column: Option<String>,
}

/// Reads CSV data (header row required) and produces a chain-valued
/// similarity relation over the rows.
pub fn ingest_similarity(
    reader: impl Read,
    chain: &Chain,
    options: &IngestOptions,
) -> Result<(Universe, FuzzyRelation)> {
    let mut csv_reader = csv::ReaderBuilder::new().from_reader(reader);
    let headers: Vec<String> = csv_reader
        .headers()
        .map_err(|e| Error::Document(e.to_string()))?
        .iter()
        .map(str::to_string)
        .collect();

    let selected: Vec<usize> = match &options.columns {
        Some(names) => names
            .iter()
            .map(|name| {
                headers
                    .iter()
                    .position(|h| h == name)
                    .ok_or_else(|| Error::Document(format!("no column named {name:?}")))
            })
            .collect::<Result<Vec<_>>>()?,
        None => {
            let id_idx = options
                .id_column
                .as_ref()
                .and_then(|name| headers.iter().position(|h| h == name));
            (0..headers.len()).filter(|i| Some(*i) != id_idx).collect()
        }
    };
    let id_idx = match &options.id_column {
        Some(name) => Some(
            headers
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| Error::Document(format!("no column named {name:?}")))?,
        ),
        None => None,
    };

    let mut names: Vec<String> = Vec::new();
    let mut columns: Vec<Vec<BigRational>> = vec![Vec::new(); selected.len()];
    for (row_index, record) in csv_reader.records().enumerate() {
        let record = record.map_err(|e| Error::Document(e.to_string()))?;
        names.push(match id_idx {
            Some(i) => record
                .get(i)
                .ok_or_else(|| Error::Document("short row".to_string()))?
                .to_string(),
            None => format!("r{}", row_index + 1),
        });
        for (slot, &col) in selected.iter().enumerate() {
            let raw = record
                .get(col)
                .ok_or_else(|| Error::Document("short row".to_string()))?;
            let value = parse_big_rational(raw)
                .map_err(|_| Error::NonNumericColumn(headers[col].clone()))?;
            columns[slot].push(value);
        }
    }
    if names.is_empty() {
        return Err(Error::EmptyTable);
    }

    let universe = Universe::new(names)?;
    let n = universe.len();
    // start from "indistinguishable" and let every column cut similarity down
    let mut relation = FuzzyRelation::new(universe.clone(), vec![vec![UnitRational::one(); n]; n])?;
    let one = BigRational::one();
    for column in &columns {
        let min = column.iter().min().expect("non-empty");
        let max = column.iter().max().expect("non-empty");
        let span = max - min;
        // a constant column separates nothing: its similarity is 1 everywhere
        let normalized: Vec<BigRational> = if span.is_zero() {
            vec![BigRational::zero(); n]
        } else {
            column.iter().map(|v| (v - min) / &span).collect()
        };
        for x in 0..n {
            for y in (x + 1)..n {
                let difference = (&normalized[x] - &normalized[y]).abs();
                let similarity = UnitRational::from_ratio_unchecked(&one - difference);
                let combined = relation.get(x, y).min_of(&similarity);
                relation.set(x, y, combined.clone());
                relation.set(y, x, combined);
            }
        }
    }

    let closed = relation.min_transitive_closure();
    let mut quantized = FuzzyRelation::identity(universe.clone());
    for x in 0..n {
        for y in 0..n {
            if x != y {
                quantized.set(x, y, chain.floor_of(closed.get(x, y)));
            }
        }
    }
    Ok((universe, quantized))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TNormKind;

    fn ur(s: &str) -> UnitRational {
        s.parse().unwrap()
    }

    #[test]
    fn single_column_example() {
        let csv = "value\n0\n5\n10\n";
        let chain = Chain::parse(&["0", "1/2", "1"]).unwrap();
        let (universe, rel) =
            ingest_similarity(csv.as_bytes(), &chain, &IngestOptions::default()).unwrap();
        assert_eq!(universe.names(), ["r1", "r2", "r3"]);
        // normalized values 0, 1/2, 1; raw similarities 1/2, 0, 1/2;
        // the closure lifts θ(r1, r3) to 1/2; flooring changes nothing
        assert_eq!(*rel.get(0, 1), ur("1/2"));
        assert_eq!(*rel.get(0, 2), ur("1/2"));
        assert_eq!(*rel.get(1, 2), ur("1/2"));
        assert!(rel.validate(TNormKind::Min).all_hold());
    }

    #[test]
    fn identical_rows_are_fully_similar() {
        let csv = "x,y\n3,4\n3,4\n";
        let chain = Chain::parse(&["0", "1/2", "1"]).unwrap();
        let (_, rel) =
            ingest_similarity(csv.as_bytes(), &chain, &IngestOptions::default()).unwrap();
        assert_eq!(*rel.get(0, 1), ur("1"));
    }

    #[test]
    fn one_row_gives_the_trivial_relation() {
        let csv = "x\n42\n";
        let chain = Chain::parse(&["0", "1"]).unwrap();
        let (universe, rel) =
            ingest_similarity(csv.as_bytes(), &chain, &IngestOptions::default()).unwrap();
        assert_eq!(universe.len(), 1);
        assert_eq!(*rel.get(0, 0), ur("1"));
    }

    #[test]
    fn quantization_preserves_similarity() {
        let csv = "a,b\n0,10\n1,12\n4,19\n9,30\n";
        let chain = Chain::parse(&["0", "1/4", "1/2", "3/4", "1"]).unwrap();
        let (_, rel) =
            ingest_similarity(csv.as_bytes(), &chain, &IngestOptions::default()).unwrap();
        assert!(rel.validate(TNormKind::Min).all_hold());
        for v in rel.values() {
            assert!(chain.contains(v));
        }
    }

    #[test]
    fn errors_on_non_numeric_and_empty() {
        let chain = Chain::parse(&["0", "1"]).unwrap();
        assert!(matches!(
            ingest_similarity("x\nfoo\n".as_bytes(), &chain, &IngestOptions::default()),
            Err(Error::NonNumericColumn(_))
        ));
        assert!(matches!(
            ingest_similarity("x\n".as_bytes(), &chain, &IngestOptions::default()),
            Err(Error::EmptyTable)
        ));
    }

    #[test]
    fn id_column_names_rows() {
        let csv = "name,v\nfoo,1\nbar,2\n";
        let chain = Chain::parse(&["0", "1"]).unwrap();
        let options = IngestOptions {
            columns: Some(vec!["v".to_string()]),
            id_column: Some("name".to_string()),
        };
        let (universe, _) = ingest_similarity(csv.as_bytes(), &chain, &options).unwrap();
        assert_eq!(universe.names(), ["foo", "bar"]);
    }
}
