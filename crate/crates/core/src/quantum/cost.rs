use serde::{Deserialize, Serialize};

use crate::chain::epsilon_marked_bound;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Problem parameters the cost formulas are evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostParams {
    pub sigma: u64,
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

impl CostParams {
    pub fn new(sigma: u64, n: u64, k: u64, d: u64) -> Result<Self> {
        if sigma < 2 || n == 0 || k == 0 {
            return Err(Error::InvalidArgument(format!(
                "need sigma >= 2, n >= 1, k >= 1 (got sigma = {sigma}, n = {n}, k = {k})"
            )));
        }
        Ok(CostParams { sigma, n, k, d })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CostMetric {
    Hamming,
    Levenshtein,
}

impl CostMetric {
    pub fn name(self) -> &'static str {
        match self {
            CostMetric::Hamming => "hamming",
            CostMetric::Levenshtein => "levenshtein",
        }
    }

    /// `log₂ D(n)`: `n` for Hamming, `n²` for Levenshtein.
    fn log2_distance_cost(self, n: f64) -> f64 {
        match self {
            CostMetric::Hamming => n.log2(),
            CostMetric::Levenshtein => 2.0 * n.log2(),
        }
    }
}

/// One summand of a runtime expression, in log₂.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub name: String,
    pub log2: f64,
}

/// Setup, update and check costs of the quantum walk, with `ε` and the gap
/// bound it is fed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkComponents {
    pub log2_setup: f64,
    pub log2_update: f64,
    pub log2_check: f64,
    /// `1/(2d(d+1)^d)` as `"num/den"`.
    pub epsilon: String,
    pub log2_epsilon: f64,
    /// `2⁻⁹d⁻²`.
    pub delta_bound: f64,
    /// `log₂(S + ε^{-1/2}(δ^{-1/2}U + C))` before simplification.
    pub log2_composed: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostProfile {
    pub algorithm: String,
    pub quantum: bool,
    pub metric: CostMetric,
    pub params: CostParams,
    pub runtime: String,
    pub terms: Vec<Term>,
    /// `log₂` of the sum of the terms.
    pub log2_total: f64,
    /// Range of `log₂` cost when part of the formula is only bracketed.
    pub log2_interval: Option<[f64; 2]>,
    pub walk: Option<WalkComponents>,
    /// When the algorithm is the one to pick.
    pub optimality: String,
    pub note: String,
}

impl CostProfile {
    /// `log₂` of the largest term.
    pub fn log2_dominant(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.log2)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn term(&self, name: &str) -> Option<f64> {
        self.terms.iter().find(|t| t.name == name).map(|t| t.log2)
    }
}

/// `log₂(2^a + 2^b + …)` without overflow.
pub fn log2_sum(values: &[f64]) -> f64 {
    let top = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if top == f64::NEG_INFINITY {
        return top;
    }
    top + values.iter().map(|v| (v - top).exp2()).sum::<f64>().log2()
}

const HIDDEN: &str = "polylogarithmic factors omitted";

fn term(name: &str, log2: f64) -> Term {
    Term {
        name: name.into(),
        log2,
    }
}

fn profile(
    algorithm: &str,
    quantum: bool,
    metric: CostMetric,
    params: CostParams,
    runtime: &str,
    terms: Vec<Term>,
    optimality: &str,
) -> CostProfile {
    let log2_total = log2_sum(&terms.iter().map(|t| t.log2).collect::<Vec<_>>());
    CostProfile {
        algorithm: algorithm.into(),
        quantum,
        metric,
        params,
        runtime: runtime.into(),
        terms,
        log2_total,
        log2_interval: None,
        walk: None,
        optimality: optimality.into(),
        note: if quantum {
            HIDDEN.into()
        } else {
            String::new()
        },
    }
}

/// Dominant costs, in log₂, of every algorithm that applies to `metric`:
/// the trivial search and, for Hamming, the walk search and the CSSP
/// generator search, for Levenshtein, the dynamic program; each quantum
/// version next to its classical counterpart.
pub fn cost_report(params: CostParams, metric: CostMetric) -> Result<Vec<CostProfile>> {
    let CostParams { sigma, n, k, d } = params;
    let (ls, nf, lk) = ((sigma as f64).log2(), n as f64, (k as f64).log2());
    let ln = nf.log2();
    let lkn = lk + ln;
    let lde = metric.log2_distance_cost(nf);
    // log d, with d = 0 and 1 both contributing nothing.
    let ld = if d >= 1 { (d as f64).log2() } else { 0.0 };
    let df = d as f64;

    let mut out = vec![
        profile(
            "quantum_trivial",
            true,
            metric,
            params,
            "σ^{n/2} · √k · D(n)",
            vec![term(
                "sigma^(n/2)*sqrt(k)*D(n)",
                nf / 2.0 * ls + lk / 2.0 + lde,
            )],
            "σ small, d and k large",
        ),
        profile(
            "classical_exhaustive",
            false,
            metric,
            params,
            "σ^n · k · D(n)",
            vec![term("sigma^n*k*D(n)", nf * ls + lk + lde)],
            "σ small, d and k large",
        ),
    ];

    match metric {
        CostMetric::Hamming => {
            let mut q_terms = vec![term("kn", lkn)];
            let mut c_terms = vec![term("kn", lkn)];
            if d >= 1 {
                q_terms.push(term("k^2*d^((d+5)/2)", 2.0 * lk + (df + 5.0) / 2.0 * ld));
                c_terms.push(term("k*d^(d+1)", lk + (df + 1.0) * ld));
            }
            let mut walk = profile(
                "quantum_walk",
                true,
                metric,
                params,
                "kn + k² · d^{(d+5)/2}",
                q_terms,
                "d small",
            );
            walk.walk = walk_components(params)?;
            out.push(walk);
            out.push(profile(
                "classical_tree_search",
                false,
                metric,
                params,
                "kn + k · d^{d+1}",
                c_terms,
                "d small",
            ));
            out.push(profile(
                "quantum_cssp",
                true,
                metric,
                params,
                "σ^{d(log d+2)/2} · (kn)^{(log d)/2} · k² · n³",
                vec![term(
                    "sigma^(d(log d+2)/2)*(kn)^(log d/2)*k^2*n^3",
                    df * (ld + 2.0) / 2.0 * ls + ld / 2.0 * lkn + 2.0 * lk + 3.0 * ln,
                )],
                "σ small, d small",
            ));
            out.push(profile(
                "classical_cssp",
                false,
                metric,
                params,
                "σ^{d(log d+2)} · (kn)^{log d} · k³ · n⁴",
                vec![term(
                    "sigma^(d(log d+2))*(kn)^(log d)*k^3*n^4",
                    df * (ld + 2.0) * ls + ld * lkn + 3.0 * lk + 4.0 * ln,
                )],
                "σ small, d small",
            ));
        }
        CostMetric::Levenshtein => {
            let kf = k as f64;
            let base = ls + kf;
            let t_low = (nf / std::f64::consts::E).max(1.0).log2();
            let mut dp = profile(
                "quantum_dp",
                true,
                metric,
                params,
                "σ · 2^k · T(n)^{2k}, n/e ≤ T(n) < n",
                vec![term("sigma*2^k*T(n)^(2k)", base + 2.0 * kf * ln)],
                "k small",
            );
            dp.log2_interval = Some([base + 2.0 * kf * t_low, base + 2.0 * kf * ln]);
            out.push(dp);
            out.push(profile(
                "classical_dp",
                false,
                metric,
                params,
                "σ · 2^k · n^{2k}",
                vec![term("sigma*2^k*n^(2k)", base + 2.0 * kf * ln)],
                "k small",
            ));
        }
    }
    Ok(out)
}

fn walk_components(params: CostParams) -> Result<Option<WalkComponents>> {
    let CostParams { k, d, .. } = params;
    if d == 0 {
        return Ok(None);
    }
    let (lk, ld) = ((k as f64).log2(), (d as f64).log2());
    let eps = epsilon_marked_bound(d as usize, 1)?;
    let log2_epsilon = eps.as_f64().log2();
    let delta_bound = 1.0 / (512.0 * (d * d) as f64);
    let s = 2.0 * lk + 2.0 * ld;
    let u = 2.0 * lk + ld;
    let c = u;
    let inner = log2_sum(&[u - delta_bound.log2() / 2.0, c]);
    Ok(Some(WalkComponents {
        log2_setup: s,
        log2_update: u,
        log2_check: c,
        epsilon: eps.render(),
        log2_epsilon,
        delta_bound,
        log2_composed: log2_sum(&[s, inner - log2_epsilon / 2.0]),
    }))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn find<'a>(report: &'a [CostProfile], name: &str) -> &'a CostProfile {
        report.iter().find(|p| p.algorithm == name).unwrap()
    }

    #[test]
    fn walk_against_tree_search_at_k2_d4() {
        let r = cost_report(CostParams::new(4, 20, 2, 4).unwrap(), CostMetric::Hamming).unwrap();
        let q = find(&r, "quantum_walk").term("k^2*d^((d+5)/2)").unwrap();
        let c = find(&r, "classical_tree_search").term("k*d^(d+1)").unwrap();
        // log₂(k²d^{4.5}) = 2 + 9 and log₂(k·d⁵) = 1 + 10.
        assert!((q - 11.0).abs() < 1e-12 && (c - 11.0).abs() < 1e-12);
        assert_eq!(q - c, 0.0);
    }

    #[test]
    fn d1_walk_term_is_k_squared() {
        let r = cost_report(CostParams::new(4, 10, 8, 1).unwrap(), CostMetric::Hamming).unwrap();
        assert!((find(&r, "quantum_walk").term("k^2*d^((d+5)/2)").unwrap() - 6.0).abs() < 1e-12);
        let w = find(&r, "quantum_walk").walk.as_ref().unwrap();
        assert_eq!(w.epsilon, "1/4");
        assert_eq!(w.delta_bound, 1.0 / 512.0);
    }

    #[test]
    fn d0_degenerates() {
        let r = cost_report(CostParams::new(4, 10, 8, 0).unwrap(), CostMetric::Hamming).unwrap();
        let walk = find(&r, "quantum_walk");
        assert_eq!(walk.terms.len(), 1);
        assert!((walk.log2_total - 80f64.log2()).abs() < 1e-12);
        assert!(walk.walk.is_none());
        let cssp = find(&r, "quantum_cssp");
        assert!((cssp.log2_total - (2.0 * 3.0 + 3.0 * 10f64.log2())).abs() < 1e-12);
        assert!(r.iter().all(|p| p.log2_total.is_finite()));
    }

    #[test]
    fn dp_interval() {
        let r = cost_report(
            CostParams::new(2, 30, 3, 2).unwrap(),
            CostMetric::Levenshtein,
        )
        .unwrap();
        let dp = find(&r, "quantum_dp");
        let [lo, hi] = dp.log2_interval.unwrap();
        assert!(lo < hi);
        assert_eq!(hi, dp.log2_total);
        assert!(r.iter().all(|p| p.algorithm != "quantum_walk"));
    }

    #[test]
    fn log_sum() {
        assert!((log2_sum(&[3.0, 3.0]) - 4.0).abs() < 1e-12);
        assert_eq!(log2_sum(&[]), f64::NEG_INFINITY);
        assert!((log2_sum(&[2000.0, 0.0]) - 2000.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(CostParams::new(1, 5, 1, 1).is_err());
        assert!(CostParams::new(2, 0, 1, 1).is_err());
        assert!(CostParams::new(2, 5, 0, 1).is_err());
    }

    fn terms(p: CostParams, m: CostMetric) -> Vec<(String, f64, f64)> {
        let mut out = Vec::new();
        for pr in cost_report(p, m).unwrap() {
            let lo = pr.log2_interval.map_or(pr.log2_total, |i| i[0]);
            for t in &pr.terms {
                out.push((format!("{}/{}", pr.algorithm, t.name), t.log2, lo));
            }
            out.push((pr.algorithm.clone(), pr.log2_total, lo));
        }
        out
    }

    proptest! {
        #[test]
        fn monotone(sigma in 2u64..8, n in 1u64..60, k in 1u64..20, d in 0u64..12, which in 0usize..4,
                    lev in any::<bool>()) {
            let m = if lev { CostMetric::Levenshtein } else { CostMetric::Hamming };
            let base = CostParams::new(sigma, n, k, d).unwrap();
            let mut up = base;
            match which {
                0 => up.sigma += 1,
                1 => up.n += 1,
                2 => up.k += 1,
                _ => up.d += 1,
            }
            let before = terms(base, m);
            let after = terms(up, m);
            for (name, v, lo) in &before {
                let (_, w, lo2) = after.iter().find(|(n2, _, _)| n2 == name).unwrap();
                prop_assert!(w + 1e-9 >= *v, "{} dropped: {} -> {}", name, v, w);
                prop_assert!(lo2 + 1e-9 >= *lo);
            }
        }
    }
}
