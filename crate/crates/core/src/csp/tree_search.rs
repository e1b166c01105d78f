use serde::{Deserialize, Serialize};

use super::history::WalkHistory;
use super::preprocess::{preprocess, Verdict};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::strings::{hamming_codes, CspInstance, Seq};

/// Instrumentation of one bounded-search-tree run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Recursive calls, including ones that return immediately.
    pub nodes_expanded: u64,
    pub max_depth: usize,
    /// Calls entered with a negative remaining budget.
    pub pruned_by_budget: u64,
    /// Calls rejected because some input is farther than `d + Δd`. The
    /// preprocessing column bound counts as one such rejection at the root.
    pub pruned_by_bound: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TreeSearchOutcome {
    /// Center of the original instance, if one exists.
    pub center: Option<Seq>,
    pub stats: SearchStats,
    /// Path to the accepting node, in reduced-instance coordinates.
    pub history: Option<WalkHistory>,
    pub verdict: Verdict,
}

/// `Σ_{l=0}^{d+1} (d+1)^l`, the number of calls a run can make at most.
pub fn perfect_tree_size(d: usize) -> u128 {
    let b = d as u128 + 1;
    let mut total: u128 = 0;
    let mut layer: u128 = 1;
    for _ in 0..=d + 1 {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(b);
    }
    total
}

/// First input farther than `d` from `candidate` and the first `d + 1`
/// positions (ascending) where the two differ.
pub(crate) fn branch_positions(
    candidate: &[u8],
    strings: &[&[u8]],
    d: usize,
) -> Option<(usize, Vec<usize>)> {
    let target = strings
        .iter()
        .position(|s| hamming_codes(candidate, s) > d)?;
    let positions = candidate
        .iter()
        .zip(strings[target])
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(p, _)| p)
        .take(d + 1)
        .collect();
    Some((target, positions))
}

struct Search<'a> {
    strings: Vec<&'a [u8]>,
    d: usize,
    candidate: Vec<u8>,
    history: WalkHistory,
    stats: SearchStats,
}

impl Search<'_> {
    fn run(&mut self, remaining: isize, depth: usize) -> bool {
        self.stats.nodes_expanded += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if remaining < 0 {
            self.stats.pruned_by_budget += 1;
            return false;
        }
        let limit = self.d + remaining as usize;
        if self
            .strings
            .iter()
            .any(|s| hamming_codes(&self.candidate, s) > limit)
        {
            self.stats.pruned_by_bound += 1;
            return false;
        }
        let Some((target, positions)) = branch_positions(&self.candidate, &self.strings, self.d)
        else {
            return true;
        };
        for p in positions {
            let old = self.candidate[p];
            self.candidate[p] = self.strings[target][p];
            self.history.push(target + 1, p);
            if self.run(remaining - 1, depth + 1) {
                return true;
            }
            self.history.pop();
            self.candidate[p] = old;
        }
        false
    }
}

/// Bounded search tree for Hamming CSP: start from `s₁` with budget `d`,
/// pick the first input farther than `d`, and branch on copying one of its
/// first `d + 1` differing symbols. Runs on the preprocessed instance and
/// maps the answer back.
pub fn tree_search<T: Scalar>(inst: &CspInstance<T>) -> Result<TreeSearchOutcome> {
    if !inst.metric().is_hamming() {
        return Err(Error::UnsupportedMetric {
            operation: "tree_search",
            metric: inst.metric().name(),
        });
    }
    let pre = preprocess(inst)?;
    if pre.verdict == Verdict::Unsolvable {
        return Ok(TreeSearchOutcome {
            center: None,
            stats: SearchStats {
                nodes_expanded: 1,
                pruned_by_bound: 1,
                ..SearchStats::default()
            },
            history: None,
            verdict: Verdict::Unsolvable,
        });
    }
    let reduced = &pre.reduced;
    let mut search = Search {
        strings: reduced.strings().iter().map(Seq::codes).collect(),
        d: inst.d(),
        candidate: reduced.strings()[0].codes().to_vec(),
        history: WalkHistory::default(),
        stats: SearchStats::default(),
    };
    let found = search.run(inst.d() as isize, 0);
    let (center, history) = if found {
        let reduced_center = Seq::from_codes(reduced.alphabet(), search.candidate.clone())?;
        (
            Some(pre.lift(&reduced_center)?),
            Some(search.history.clone()),
        )
    } else {
        (None, None)
    };
    Ok(TreeSearchOutcome {
        center,
        stats: search.stats,
        history,
        verdict: pre.verdict,
    })
}
