//! Identifier-map extraction and comparison for object-oriented software
//! variants.

pub mod eval;
pub mod fca;
pub mod map;
pub mod model;
pub mod parser;
pub mod render;
pub mod xml;

pub use eval::{
    corpus_stats, evaluate_map, f_measure, precision, recall, CorpusStats, EvalError, GroundTruth,
    MapCounts, Metrics, MetricsReport, VariantStats,
};
pub use fca::{
    brute_force_lattice, build_aoc_poset, build_context, AocPoset, Concept, FcaError,
    FormalContext,
};
pub use map::{
    build_all_maps, classify_evolution, extract_map, EvolutionReport, IdentifiersMap, MapError,
};
pub use model::{
    CodeModel, Identifier, IdentifierKind, KindFilter, ModelError, SourceStats, DEFAULT_PACKAGE,
};
pub use parser::{extract_variant, Diagnostic, ParseError, Severity};
pub use render::{
    evolution_from_json, evolution_to_json, map_from_json, metrics_to_json, to_dot, to_json,
    to_text_report, RenderError, RenderOptions,
};
pub use xml::{read_xml, write_xml, XmlError};
