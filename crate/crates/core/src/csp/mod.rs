//! Exact solvers for the Closest String problem.

mod dp;
mod exhaustive;
mod history;
mod preprocess;
mod tree_search;

pub use dp::solve_dp_levenshtein;
pub(crate) use exhaustive::{advance, candidate_space};
pub use exhaustive::{solve_exhaustive, Center};
pub use history::{candidate_from_history, WalkHistory};
pub use preprocess::{preprocess, PreprocessResult, Verdict};
pub(crate) use tree_search::branch_positions;
pub use tree_search::{perfect_tree_size, tree_search, SearchStats, TreeSearchOutcome};
