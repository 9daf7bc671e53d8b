//! Isomorph-free generation, graph6 corpus ingestion and exhaustive scans.

mod canon;
mod generate;
mod ingest;
mod scan;

pub use canon::{canonical_form, canonical_labeling, Canonical, CanonicalForm};
pub use generate::{generate_all, nodes_at_level, GraphGenerator, Node, GENERATE_MAX_ORDER};
pub use ingest::{ingest_graph6, Graph6Lines};
pub use scan::{scan_corpus, scan_order, EnumerationSummary, ScanOptions, Violation};
