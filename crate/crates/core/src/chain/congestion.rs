use num_bigint::BigInt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

use super::{Stationary, TreeChain};

/// Closed-form congestion of an edge from layer `l` to `l + 1`:
///
/// `ρ_l = 2(2(d−l)−1)(2d(d+1)^{l+1} − 2(d−l) + 1) / (d(d+1)^{l+1})`
pub fn rho_layer(d: usize, l: usize) -> Result<Rational> {
    if d == 0 || l >= d {
        return Err(Error::OutOfRange(format!(
            "layer {l} has no outgoing edge for d = {d}"
        )));
    }
    let dd = BigInt::from(d);
    let gap = BigInt::from(2 * (d - l)) - 1;
    let width = BigInt::from(d + 1).pow(l as u32 + 1);
    let num = BigInt::from(2) * &gap * (BigInt::from(2) * &dd * &width - &gap);
    Ok(Rational::new(num, dd * width))
}

/// `ρ_l` for every layer `l = 0..d`.
pub fn rho_closed_form(d: usize) -> Result<Vec<Rational>> {
    (0..d).map(|l| rho_layer(d, l)).collect()
}

/// `ρ₀ = 2(2d−1)(2d²+1)/(d(d+1))`, the largest layer congestion.
pub fn rho0(d: usize) -> Result<Rational> {
    if d == 0 {
        return Err(Error::OutOfRange("congestion needs d >= 1".into()));
    }
    let dd = BigInt::from(d);
    let num = BigInt::from(2) * (BigInt::from(2) * &dd - 1) * (BigInt::from(2) * &dd * &dd + 1);
    Ok(Rational::new(num, &dd * (&dd + 1)))
}

/// Load and congestion of one directed transition.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeLoad<T> {
    pub from: usize,
    pub to: usize,
    /// `Σ π_x π_y` over ordered pairs whose path contains both endpoints.
    pub load: T,
    /// `load / (π_from · p_{from,to})`.
    pub congestion: T,
}

/// Congestion recomputed by walking every canonical path.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectCongestion<T> {
    /// Every transition with positive probability, self-loops included.
    pub edges: Vec<EdgeLoad<T>>,
    /// Largest congestion among edges leaving layer `l` downwards.
    pub per_layer: Vec<T>,
    /// Whether all downward edges out of a layer share one value.
    pub layer_uniform: bool,
    pub max: T,
}

/// Sums `π_x π_y` along the unique simple tree path of every ordered pair
/// `(x, y)` and normalizes by edge capacity. Refused above the node cap.
pub fn congestion_direct<T: Scalar>(
    chain: &TreeChain<T>,
    pi: &Stationary<T>,
    budget: &Budget,
) -> Result<DirectCongestion<T>> {
    let n = chain.len();
    if n > budget.max_direct_congestion_nodes {
        return Err(Error::budget(
            "direct congestion nodes",
            n as u128,
            budget.max_direct_congestion_nodes as u128,
        ));
    }
    // up[v] / down[v]: load on v → parent and parent → v.
    let mut up = vec![T::zero(); n];
    let mut down = vec![T::zero(); n];
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let w = pi.node[x].clone() * pi.node[y].clone();
            let (mut a, mut b) = (x, y);
            let mut descent = Vec::new();
            while a != b {
                if chain.layer(a) >= chain.layer(b) {
                    up[a] = up[a].clone() + w.clone();
                    a = chain.parent(a).unwrap();
                } else {
                    descent.push(b);
                    b = chain.parent(b).unwrap();
                }
            }
            for v in descent {
                down[v] = down[v].clone() + w.clone();
            }
        }
    }

    let mut edges = Vec::new();
    let mut per_layer: Vec<Option<T>> = vec![None; chain.d()];
    let mut layer_uniform = true;
    for u in 0..n {
        for (v, p) in chain.row(u) {
            // Pairs crossing the edge in either direction both count.
            let load = if *v == u {
                T::zero()
            } else {
                let child = if chain.parent(*v) == Some(u) { *v } else { u };
                up[child].clone() + down[child].clone()
            };
            let congestion = load.clone() / (pi.node[u].clone() * p.clone());
            if chain.parent(*v) == Some(u) {
                let slot = &mut per_layer[chain.layer(u)];
                match slot {
                    None => *slot = Some(congestion.clone()),
                    Some(prev) => {
                        if !prev.approx_eq(&congestion) {
                            layer_uniform = false;
                        }
                        if congestion > *prev {
                            *prev = congestion.clone();
                        }
                    }
                }
            }
            edges.push(EdgeLoad {
                from: u,
                to: *v,
                load,
                congestion,
            });
        }
    }
    let max = edges
        .iter()
        .map(|e| e.congestion.clone())
        .reduce(|a, b| if b > a { b } else { a })
        .unwrap_or_else(T::zero);
    Ok(DirectCongestion {
        edges,
        per_layer: per_layer
            .into_iter()
            .map(|v| v.unwrap_or_else(T::zero))
            .collect(),
        layer_uniform,
        max,
    })
}
