//! Isomorph-free generation, cospectral surveys of near-complete graphs,
//! exhaustive DS checks and the multiplicity-of-(-1) classification.

pub mod ds;
pub mod edges;
pub mod generate;
pub mod multiplicity;
pub mod survey;

pub use ds::{ds_verify, ds_verify_many, MAX_DS_ORDER};
pub use edges::{generate_by_edges, MAX_PATTERN_EDGES};
pub use generate::{for_each_partition, generate_graphs, GraphStream, MAX_GENERATED_ORDER};
pub use multiplicity::{classified_forms, multiplicity_survey};
pub use survey::{
    deleted_pattern, group_by_key, survey_kn_minus, CospectralClass, Mode, SpectralKey, SurveyReport,
};
