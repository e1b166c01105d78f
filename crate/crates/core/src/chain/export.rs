use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::Result;
use crate::scalar::{Rational, Scalar};

use super::conductance::{conductance, sandwich_holds, ConductanceMode};
use super::congestion::{congestion_direct, rho_closed_form};
use super::mixing::{mixing_time_bounds, MixingBounds};
use super::spectral::{spectral_gap, SpectralMode};
use super::stationary::{layer_chain, stationary_distribution, verify_stationary, StationaryCheck};
use super::walk::epsilon_marked_bound;
use super::{build_tree_chain, TreeChain};

pub const CHAIN_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub index: usize,
    pub address: String,
    pub layer: usize,
    pub stationary: String,
}

/// A tree edge with both transition probabilities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub parent: usize,
    pub child: usize,
    pub down: String,
    pub up: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CongestionRecord {
    pub closed_form: Vec<String>,
    pub rho_max: String,
    pub rho_max_below_8d: bool,
    /// Per-layer values from path enumeration, when under the node cap.
    pub direct: Option<Vec<String>>,
    pub direct_matches: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralRecord {
    pub mode: SpectralMode,
    pub eigenvalues: Vec<f64>,
    pub lambda2: f64,
    pub gap: f64,
    pub min_eigenvalue: f64,
    pub layer_gap: f64,
    pub congestion_bound: f64,
    pub inverse_square_bound: f64,
    pub top_is_one: bool,
    pub nonnegative: bool,
    pub meets_congestion_bound: bool,
    pub meets_inverse_square_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConductanceRecord {
    pub mode: ConductanceMode,
    pub exact: Option<String>,
    pub upper: String,
    pub lower: String,
    pub witness: Vec<usize>,
    pub meets_congestion_bound: bool,
    /// `Φ²/2 ≤ δ ≤ 2Φ`, when both are known exactly enough to check.
    pub sandwich: Option<bool>,
}

/// Everything known about the tree chain for one `d`, rationals written as
/// `"num/den"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainReport {
    pub schema_version: u32,
    pub kind: String,
    pub d: usize,
    pub node_count: usize,
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<EdgeRecord>,
    pub layer_stationary: Vec<String>,
    pub layer_chain: Vec<Vec<String>>,
    pub checks: StationaryCheck,
    pub congestion: CongestionRecord,
    pub spectral: SpectralRecord,
    pub conductance: ConductanceRecord,
    pub mixing: MixingBounds,
    pub epsilon_single_leaf: String,
}

fn render_all(v: &[Rational]) -> Vec<String> {
    v.iter().map(Scalar::render).collect()
}

/// Builds the exact chain for `d` and runs every analysis the budget allows.
pub fn chain_report(d: usize, budget: &Budget) -> Result<ChainReport> {
    let chain: TreeChain<Rational> = build_tree_chain(d, budget)?;
    let pi = stationary_distribution(&chain);
    let checks = verify_stationary(&chain, &pi);
    let layers = layer_chain(&chain);

    let closed = rho_closed_form(d)?;
    let rho_max = closed[0].clone();
    let direct = if chain.len() <= budget.max_direct_congestion_nodes {
        Some(congestion_direct(&chain, &pi, budget)?)
    } else {
        None
    };

    let spectral = spectral_gap(&chain.to_f64(), budget)?;
    let phi = conductance(&chain, &pi, budget)?;
    let sandwich = (phi.mode == ConductanceMode::Exact && spectral.mode == SpectralMode::Full)
        .then(|| sandwich_holds(phi.upper.as_f64(), spectral.gap));
    let mixing = mixing_time_bounds(spectral.gap, pi.min().as_f64())?;

    Ok(ChainReport {
        schema_version: CHAIN_SCHEMA_VERSION,
        kind: "tree_chain".into(),
        d,
        node_count: chain.len(),
        nodes: (0..chain.len())
            .map(|i| NodeRecord {
                index: i,
                address: chain.address(i).to_string(),
                layer: chain.layer(i),
                stationary: pi.node[i].render(),
            })
            .collect(),
        edges: chain
            .edges()
            .into_iter()
            .map(|(p, c)| EdgeRecord {
                parent: p,
                child: c,
                down: chain.p(p, c).render(),
                up: chain.p(c, p).render(),
            })
            .collect(),
        layer_stationary: render_all(&pi.layer),
        layer_chain: layers.q.iter().map(|row| render_all(row)).collect(),
        checks,
        congestion: CongestionRecord {
            closed_form: render_all(&closed),
            rho_max_below_8d: rho_max < Rational::from_count(8 * d),
            rho_max: rho_max.render(),
            direct_matches: direct
                .as_ref()
                .map(|c| c.layer_uniform && c.per_layer == closed),
            direct: direct.map(|c| render_all(&c.per_layer)),
        },
        spectral: SpectralRecord {
            top_is_one: spectral.top_is_one(),
            nonnegative: spectral.nonnegative(),
            meets_congestion_bound: spectral.meets_congestion_bound(),
            meets_inverse_square_bound: spectral.meets_inverse_square_bound(),
            mode: spectral.mode,
            eigenvalues: spectral.eigenvalues,
            lambda2: spectral.lambda2,
            gap: spectral.gap,
            min_eigenvalue: spectral.min_eigenvalue,
            layer_gap: spectral.layer_gap,
            congestion_bound: spectral.congestion_bound,
            inverse_square_bound: spectral.inverse_square_bound,
        },
        conductance: ConductanceRecord {
            mode: phi.mode,
            meets_congestion_bound: phi.meets_congestion_bound(),
            exact: phi.exact.as_ref().map(Scalar::render),
            upper: phi.upper.render(),
            lower: phi.lower.render(),
            witness: phi.witness,
            sandwich,
        },
        mixing,
        epsilon_single_leaf: epsilon_marked_bound(d, 1)?.render(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d1_report() {
        let r = chain_report(1, &Budget::default()).unwrap();
        assert_eq!(r.node_count, 3);
        assert!(r.checks.all());
        assert_eq!(r.layer_stationary, ["1/2", "1/2"]);
        assert_eq!(r.nodes[1].address, "(1)");
        assert_eq!(r.edges[0].down, "1/4");
        assert_eq!(r.edges[0].up, "1/2");
        assert_eq!(r.congestion.rho_max, "3/1");
        assert_eq!(r.congestion.direct_matches, Some(true));
        assert_eq!(r.conductance.exact.as_deref(), Some("1/2"));
        assert_eq!(r.conductance.sandwich, Some(true));
        assert_eq!(r.epsilon_single_leaf, "1/4");
    }

    #[test]
    fn json_round_trip() {
        let r = chain_report(2, &Budget::default()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: ChainReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(
            text,
            serde_json::to_string(&chain_report(2, &Budget::default()).unwrap()).unwrap()
        );
    }

    #[test]
    fn larger_d_degrades_gracefully() {
        let r = chain_report(4, &Budget::default()).unwrap();
        assert!(r.congestion.direct.is_none());
        assert_eq!(r.conductance.mode, ConductanceMode::Bound);
        assert_eq!(r.conductance.sandwich, None);
        assert_eq!(r.spectral.mode, SpectralMode::Full);
    }
}
