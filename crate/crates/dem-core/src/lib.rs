//! Distance-based edge monitoring for finite simple graphs.
//!
//! A set of vertices `M` *monitors* an edge `e` when deleting `e` changes the
//! distance from some vertex of `M` to some vertex of the graph. This crate
//! computes, exactly:
//!
//! - the set of edges a single vertex monitors ([`monitored_edges`]),
//! - minimum monitoring sets and the monitoring number ([`dem_number`]),
//! - restrictions to subgraphs ([`restrict_dem`]),
//! - the effect of deleting edges or vertices ([`perturbation`]),
//!
//! plus generators for the named graph families these quantities are usually
//! studied on ([`families`]), with closed-form predictions where they exist.
//!
//! Everything is deterministic: graphs are labeled, ties break toward smaller
//! vertex ids, and the reported minimum monitoring set is the
//! lexicographically least one.

mod bits;

pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod monitoring;
pub mod perturbation;

pub use error::{Error, Result};
pub use families::{
    conical_layer_em_count, conical_layer_threshold, cycle_em_count, generate, predicted_dem,
    vertex_names, ClosedForm, FamilySpec,
};
pub use graph::{
    base_graph, cartesian_product, connected_components, distances_from, join_graphs,
    DistVector, EdgeId, Graph, VertexId,
};
pub use invariants::{graph_invariants, vertex_cover_number, GraphInvariants};
pub use io::{parse_graph, write_graph};
pub use monitoring::{
    dem_number, dem_number_with, dem_value_by_base_reduction, forced_endpoint_edges, greedy_dem,
    is_dem_set, monitored_edges, monitored_edges_naive, restrict_dem, witnesses, Coverage,
    DemResult, EdgeSet, Method, MonitorMap, SearchConfig, WitnessPair,
};
pub use perturbation::{
    edge_deletion_record, max_preserving_deletion, revalidate_after_edge_deletion, scan,
    verify_preserving_set, vertex_deletion_record, DeletionPlan, Element, Extremes,
    PerturbationRecord, PerturbationReport, Preservation, PreservationOptions, Revalidation,
    ScanMode,
};
