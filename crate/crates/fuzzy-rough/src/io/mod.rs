//! File formats, data ingestion, DOT export and the randomized
//! property-verification runner.

pub mod document;
pub mod dot;
pub mod ingest;
pub mod verify;
