//! Exact workbench for spectral Turán-type questions on small graphs:
//! bitset graphs, canonical labeling, isomorph-free enumeration, spectral
//! radius computation with an independent characteristic-polynomial oracle,
//! subgraph/domination deciders, and mechanical verification drivers for
//! edge-count versus spectral-radius extremal claims.

pub mod enumerate;
pub mod error;
pub mod graph;
pub mod report;
pub mod spectral;
pub mod subgraph;
pub mod turan;

pub use enumerate::{
    balister_bound, balister_extremal, enumerate_graphs, max_spectral_radius, EnumOptions,
    EnumSpec, ExtremalRecord, ForbiddenPattern, EXHAUSTIVE_EDGE_LIMIT,
};
pub use error::{Error, Result};
pub use graph::canon::{are_isomorphic, canonical_form, canonical_key, canonical_perm, CanonKey};
pub use graph::family::{join, FamilySpec};
pub use graph::graph6::{from_graph6, to_graph6};
pub use graph::large::{LargeGraph, LARGE_MAX_VERTICES};
pub use graph::{Graph, MAX_VERTICES};
pub use report::{JsonValue, Report};
pub use spectral::charpoly::{char_poly, char_poly_radius_oracle, ORACLE_MAX_VERTICES};
pub use spectral::{
    eigen_identity_check, extremal_vertex, join_lambda_closed_form, perron_vector,
    spectral_radius, SpectralResult, DEFAULT_TOL,
};
pub use subgraph::{
    contains_subgraph, dominating_structure, has_c_triangle, has_cycle, longest_path_order,
    DominationCertificate, MatchMode, Witness,
};
pub use turan::{
    decompose, eq4_slack, eta, extremal_search_report, verify_balister, verify_corollary,
    verify_dominating, verify_eta_table, verify_theorem1, Decomposition, EtaClass, EtaValue,
    VerifyMode, CERT_TOL, SLACK_TOL,
};
