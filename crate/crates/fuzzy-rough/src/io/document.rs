//! JSON document schemas and their mapping onto the core types.
//!
//! Rationals travel as strings (`"3/4"`, `"0.75"`, `"1"`); matrices follow
//! universe order row by row; documents are rejected on any dimension
//! mismatch. Emission is canonical: parse ∘ emit ∘ parse = parse.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, ImplicatorKind, NegatorKind, TConormKind, TNormKind};
use crate::characterize::{CharacterizationVerdict, RoughPair};
use crate::error::{Error, Result};
use crate::lattice::LatticeDiagram;
use crate::rational::{Chain, UnitRational};
use crate::space::{ApproximationSpace, FuzzyRelation, FuzzySet, Universe};

/// `{"universe": [...], "chain": [...]?, "algebra": {...}, "theta": [[...], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpaceDocument {
    pub universe: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<UnitRational>>,
    #[serde(default)]
    pub algebra: AlgebraDocument,
    pub theta: Vec<Vec<UnitRational>>,
}

/// Algebra descriptor with defaults: min, max, Kleene-Dienes implicator and
/// a negator fitting the value mode (chain reversal in chain mode, standard
/// otherwise).
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct AlgebraDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tnorm: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tconorm: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negator: Option<NegatorDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub implicator: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NegatorDocument {
    Named(String),
    Table {
        table: Vec<(UnitRational, UnitRational)>,
    },
}

impl AlgebraDocument {
    pub fn to_algebra(&self, chain_mode: bool) -> Result<Algebra> {
        let tnorm = match self.tnorm.as_deref().unwrap_or("min") {
            "min" => TNormKind::Min,
            "product" => TNormKind::Product,
            "lukasiewicz" => TNormKind::Lukasiewicz,
            other => return Err(Error::Document(format!("unknown tnorm {other:?}"))),
        };
        let tconorm = match self.tconorm.as_deref().unwrap_or("max") {
            "max" => TConormKind::Max,
            "probabilistic-sum" => TConormKind::ProbSum,
            "bounded-sum" => TConormKind::BoundedSum,
            other => return Err(Error::Document(format!("unknown tconorm {other:?}"))),
        };
        let negator = match &self.negator {
            None => {
                if chain_mode {
                    NegatorKind::ChainReversal
                } else {
                    NegatorKind::Standard
                }
            }
            Some(NegatorDocument::Named(name)) => match name.as_str() {
                "standard" => NegatorKind::Standard,
                "chain-reversal" => NegatorKind::ChainReversal,
                other => return Err(Error::Document(format!("unknown negator {other:?}"))),
            },
            Some(NegatorDocument::Table { table }) => {
                let mut pairs = table.clone();
                pairs.sort_by(|(a, _), (b, _)| a.cmp(b));
                pairs.dedup_by(|(a, _), (b, _)| a == b);
                if pairs.len() != table.len() {
                    return Err(Error::Document(
                        "negator table maps an argument twice".to_string(),
                    ));
                }
                let boundary = pairs
                    .first()
                    .is_some_and(|(x, nx)| x.is_zero() && nx.is_one())
                    && pairs
                        .last()
                        .is_some_and(|(x, nx)| x.is_one() && nx.is_zero());
                let decreasing = pairs.windows(2).all(|w| w[0].1 >= w[1].1);
                if !boundary || !decreasing {
                    return Err(Error::Document(
                        "negator table must be decreasing with n(0) = 1 and n(1) = 0".to_string(),
                    ));
                }
                let involutive = pairs.iter().all(|(x, nx)| {
                    pairs
                        .iter()
                        .find(|(from, _)| from == nx)
                        .map(|(_, nnx)| nnx == x)
                        .unwrap_or(false)
                });
                NegatorKind::Table { pairs, involutive }
            }
        };
        let implicator = match self.implicator.as_deref().unwrap_or("kd") {
            "kd" => ImplicatorKind::S(TConormKind::Max, negator.clone()),
            "s" => ImplicatorKind::S(tconorm, negator.clone()),
            "godel" | "r-min" => ImplicatorKind::Residual(TNormKind::Min),
            "goguen" | "r-product" => ImplicatorKind::Residual(TNormKind::Product),
            "lukasiewicz" | "r-lukasiewicz" => ImplicatorKind::Residual(TNormKind::Lukasiewicz),
            other => return Err(Error::Document(format!("unknown implicator {other:?}"))),
        };
        Ok(Algebra::new(tnorm, tconorm, negator, implicator))
    }

    pub fn from_algebra(algebra: &Algebra) -> Self {
        let tnorm = match algebra.tnorm {
            TNormKind::Min => "min",
            TNormKind::Product => "product",
            TNormKind::Lukasiewicz => "lukasiewicz",
        };
        let tconorm = match algebra.tconorm {
            TConormKind::Max => "max",
            TConormKind::ProbSum => "probabilistic-sum",
            TConormKind::BoundedSum => "bounded-sum",
        };
        let negator = match &algebra.negator {
            NegatorKind::Standard => NegatorDocument::Named("standard".to_string()),
            NegatorKind::ChainReversal => NegatorDocument::Named("chain-reversal".to_string()),
            NegatorKind::Table { pairs, .. } => NegatorDocument::Table {
                table: pairs.clone(),
            },
        };
        let implicator = match &algebra.implicator {
            ImplicatorKind::Residual(TNormKind::Min) => "godel".to_string(),
            ImplicatorKind::Residual(TNormKind::Product) => "goguen".to_string(),
            ImplicatorKind::Residual(TNormKind::Lukasiewicz) => "lukasiewicz".to_string(),
            ImplicatorKind::S(TConormKind::Max, _) => "kd".to_string(),
            ImplicatorKind::S(..) => "s".to_string(),
        };
        AlgebraDocument {
            tnorm: Some(tnorm.to_string()),
            tconorm: Some(tconorm.to_string()),
            negator: Some(negator),
            implicator: Some(implicator.to_string()),
        }
    }
}

/// Builds a validated space from a document.
pub fn parse_space(doc: &SpaceDocument) -> Result<ApproximationSpace> {
    let universe = Universe::new(doc.universe.clone())?;
    let chain = doc
        .chain
        .as_ref()
        .map(|values| Chain::new(values.clone()))
        .transpose()?;
    let algebra = doc.algebra.to_algebra(chain.is_some())?;
    let theta = FuzzyRelation::new(universe, doc.theta.clone())?;
    ApproximationSpace::new(theta, algebra, chain)
}

/// Canonical document of a space.
pub fn emit_space(space: &ApproximationSpace) -> SpaceDocument {
    let n = space.universe().len();
    SpaceDocument {
        universe: space.universe().names().to_vec(),
        chain: space.chain().map(|c| c.elements().to_vec()),
        algebra: AlgebraDocument::from_algebra(space.algebra()),
        theta: (0..n)
            .map(|i| (0..n).map(|j| space.theta().get(i, j).clone()).collect())
            .collect(),
    }
}

pub fn space_from_json(json: &str) -> Result<ApproximationSpace> {
    let doc: SpaceDocument =
        serde_json::from_str(json).map_err(|e| Error::Document(e.to_string()))?;
    parse_space(&doc)
}

pub fn space_to_json(space: &ApproximationSpace) -> String {
    let mut out = serde_json::to_string_pretty(&emit_space(space)).expect("serializable");
    out.push('\n');
    out
}

/// `{"values": {"a": "1", "b": "1/10", ...}}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SetDocument {
    pub values: BTreeMap<String, UnitRational>,
}

pub fn parse_set(universe: &Universe, doc: &SetDocument) -> Result<FuzzySet> {
    FuzzySet::from_pairs(
        universe.clone(),
        doc.values.iter().map(|(k, v)| (k.as_str(), v.clone())),
    )
}

pub fn emit_set(set: &FuzzySet) -> SetDocument {
    SetDocument {
        values: set
            .universe()
            .names()
            .iter()
            .cloned()
            .zip(set.values().iter().cloned())
            .collect(),
    }
}

pub fn set_from_json(universe: &Universe, json: &str) -> Result<FuzzySet> {
    let doc: SetDocument =
        serde_json::from_str(json).map_err(|e| Error::Document(e.to_string()))?;
    parse_set(universe, &doc)
}

pub fn set_to_json(set: &FuzzySet) -> String {
    let mut out = serde_json::to_string_pretty(&emit_set(set)).expect("serializable");
    out.push('\n');
    out
}

/// A rough pair with optional certifying reference set, values in universe
/// order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairDocument {
    pub lower: Vec<UnitRational>,
    pub upper: Vec<UnitRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<UnitRational>>,
}

pub fn emit_pair(pair: &RoughPair) -> PairDocument {
    PairDocument {
        lower: pair.lower().values().to_vec(),
        upper: pair.upper().values().to_vec(),
        witness: pair.witness().map(|w| w.values().to_vec()),
    }
}

pub fn pair_to_json(pair: &RoughPair) -> String {
    let mut out = serde_json::to_string_pretty(&emit_pair(pair)).expect("serializable");
    out.push('\n');
    out
}

/// Decision output of the pair characterization.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictDocument {
    pub accepted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_condition: Option<crate::characterize::FailedCondition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SetDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_witness: Option<SetDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

impl VerdictDocument {
    pub fn new(verdict: &CharacterizationVerdict) -> Self {
        VerdictDocument {
            accepted: verdict.accepted,
            failed_condition: verdict.failed.clone(),
            witness: verdict.witness.as_ref().map(emit_set),
            oracle_witness: None,
            oracle_agrees: None,
        }
    }

    pub fn with_oracle(mut self, found: Option<&FuzzySet>) -> Self {
        self.oracle_agrees = Some(found.is_some() == self.accepted);
        self.oracle_witness = found.map(emit_set);
        self
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable");
        out.push('\n');
        out
    }
}

/// An enumerated diagram: universe, elements with value vectors, cover edges
/// and the bound indices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiagramDocument {
    pub universe: Vec<String>,
    pub elements: Vec<PairDocument>,
    pub covers: Vec<(usize, usize)>,
    pub bottom: usize,
    pub top: usize,
}

pub fn emit_diagram(space: &ApproximationSpace, diagram: &LatticeDiagram) -> DiagramDocument {
    DiagramDocument {
        universe: space.universe().names().to_vec(),
        elements: diagram.elements().iter().map(emit_pair).collect(),
        covers: diagram.covers().to_vec(),
        bottom: diagram.bottom(),
        top: diagram.top(),
    }
}

pub fn diagram_to_json(space: &ApproximationSpace, diagram: &LatticeDiagram) -> String {
    let mut out =
        serde_json::to_string_pretty(&emit_diagram(space, diagram)).expect("serializable");
    out.push('\n');
    out
}

pub fn diagram_from_json(json: &str) -> Result<DiagramDocument> {
    serde_json::from_str(json).map_err(|e| Error::Document(e.to_string()))
}
