/// Work limits shared by the exponential solvers. Every solver checks its
/// limit up front and refuses with [`Error::BudgetExceeded`](crate::Error)
/// instead of running unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Candidate centers the exhaustive CSP oracle may enumerate.
    pub max_candidates: u128,
    /// Cells of the Levenshtein Boolean table.
    pub max_dp_cells: u128,
    /// Generator subsets the CSSP solver may enumerate.
    pub max_subsets: u128,
    /// Strings a single generator may expand into (`σ^conflict`).
    pub max_generated: u128,
    /// Nodes of the tree chain.
    pub max_chain_nodes: usize,
    /// Nodes for the dense eigensolve.
    pub max_eigen_nodes: usize,
    /// Nodes for direct canonical-path congestion.
    pub max_direct_congestion_nodes: usize,
    /// Nodes for exact subset-enumeration conductance.
    pub max_exact_conductance_nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_candidates: 1 << 24,
            max_dp_cells: 1 << 24,
            max_subsets: 1 << 20,
            max_generated: 1 << 16,
            // d <= 5
            max_chain_nodes: 9331,
            // d <= 4
            max_eigen_nodes: 781,
            // d <= 3
            max_direct_congestion_nodes: 85,
            // d <= 2
            max_exact_conductance_nodes: 13,
        }
    }
}

impl Budget {
    /// Sets every search-size limit (candidates, DP cells, subsets) to `n`.
    pub fn with_search_limit(mut self, n: u128) -> Self {
        self.max_candidates = n;
        self.max_dp_cells = n;
        self.max_subsets = n;
        self
    }
}
