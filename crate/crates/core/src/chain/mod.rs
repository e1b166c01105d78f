//! The lazy walk on the perfect `(d+1)`-ary search tree.
//!
//! Exact construction and stationary law, detailed balance, congestion of
//! shortest-path routing, the spectrum, conductance, mixing-time bounds,
//! the classical walk search and the bridge from CSP instances to marked
//! nodes.

mod address;
mod conductance;
mod congestion;
mod export;
mod marking;
mod mixing;
mod spectral;
mod stationary;
mod tree;
mod walk;

pub use address::TreeAddress;
pub use conductance::{conductance, cut_ratio, sandwich_holds, Conductance, ConductanceMode};
pub use congestion::{
    congestion_direct, rho0, rho_closed_form, rho_layer, DirectCongestion, EdgeLoad,
};
pub use export::{
    chain_report, ChainReport, ConductanceRecord, CongestionRecord, EdgeRecord, NodeRecord,
    SpectralRecord, CHAIN_SCHEMA_VERSION,
};
pub use marking::{history_for_address, mark_solution_nodes};
pub use mixing::{mixing_time_bounds, MixingBounds};
pub use spectral::{reversible_spectrum, spectral_gap, SpectralMode, SpectralReport, EIGEN_TOL};
pub use stationary::{
    apply_left, check_reversibility, layer_chain, stationary_distribution, verify_stationary,
    LayerChain, Stationary, StationaryCheck,
};
pub use tree::{build_tree_chain, tree_node_count, TreeChain};
pub use walk::{
    classical_walk_search, epsilon_marked_bound, exact_walk_success_probability, marked_mask,
    marked_mass, walk_success_count, WalkOutcome, WalkSampler,
};
