//! Exact-arithmetic fuzzy rough approximation over finite universes.
//!
//! Given a finite universe `U`, a reflexive fuzzy relation `θ` and an
//! operator algebra (t-norm `⊙`, implicator `▷`, ...), every fuzzy set `f`
//! has a lower approximation `min_y θ(x,y) ▷ f(y)` and an upper
//! approximation `max_y θ(x,y) ⊙ f(y)`. This crate computes with such pairs
//! exactly — every degree is an arbitrary-precision rational — and builds the
//! order theory on top of them:
//!
//! * [`algebra`] — the operator kinds, their laws and per-chain validation;
//! * [`space`] — universes, fuzzy sets, relations, the two approximation
//!   operators and the max-min transitive closure;
//! * [`quasiorder`] — the crisp quasiorders induced by approximation
//!   fixpoints, their equivalence classes, factor posets and maximal
//!   classes;
//! * [`characterize`] — deciding whether a pair of fuzzy sets is a fuzzy
//!   rough set, with a constructive certifying reference set and an
//!   exhaustive search oracle;
//! * [`lattice`] — the componentwise order on pairs, its duality involution,
//!   constructive meets and joins, full enumeration over a chain, Hasse
//!   covers and lattice-property checks;
//! * [`io`] — JSON documents, CSV ingestion of similarity relations, DOT
//!   export and a seeded randomized verification runner;
//! * [`samples`] — small ready-made spaces used across examples and tests.
//!
//! The `examples/` directory holds one runnable program per capability; the
//! thin `frs` binary exposes the same functionality as subcommands.
//!
//! ```
//! use fuzzy_rough::{lattice, samples};
//!
//! let space = samples::three_element_space();
//! let (f1, f2) = samples::three_element_sets();
//! let p1 = lattice::rough_pair_of(&space, &f1)?;
//! let p2 = lattice::rough_pair_of(&space, &f2)?;
//! let met = lattice::meet(&space, &[p1, p2])?;
//! assert_eq!(met.lower().value_of("a").unwrap().to_string(), "1/10");
//! assert_eq!(met.upper().value_of("a").unwrap().to_string(), "1/4");
//! # Ok::<(), fuzzy_rough::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod algebra;
pub mod characterize;
pub mod error;
pub mod io;
pub mod lattice;
pub mod quasiorder;
pub mod rational;
pub mod report;
pub mod samples;
pub mod space;

pub use algebra::{Algebra, ImplicatorKind, NegatorKind, TConormKind, TNormKind};
pub use characterize::{CharacterizationVerdict, FailedCondition, RoughPair};
pub use error::{Error, Result};
pub use lattice::{LatticeDiagram, PropertyReport};
pub use rational::{Chain, UnitRational};
pub use report::{CheckStatus, PropertyCheck, ValidationReport};
pub use space::{ApproximationSpace, FuzzyRelation, FuzzySet, Universe};
