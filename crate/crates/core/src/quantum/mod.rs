//! Grover and minimum-finding simulation, and closed-form cost models for
//! the quantum CSP/CSSP algorithms and their classical counterparts.

mod cost;
mod grover;
mod minfind;
mod regime;

pub use cost::{cost_report, log2_sum, CostMetric, CostParams, CostProfile, Term, WalkComponents};
pub use grover::{
    grover_optimal_iterations, grover_simulate, grover_success_closed_form, GroverMode, GroverRun,
    MAX_STATEVECTOR,
};
pub use minfind::{min_find_simulate, MinFindRun};
pub use regime::{
    algorithm_summary, classify, default_k_classes, log2_cost_growth, regime_table, Growth,
    KGrowth, Regime, RegimeCell, SummaryRow,
};
