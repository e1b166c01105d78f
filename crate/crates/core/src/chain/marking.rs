use std::collections::BTreeSet;

use crate::budget::Budget;
use crate::csp::{branch_positions, preprocess, Verdict, WalkHistory};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::strings::{hamming_codes, CspInstance, Seq};

use super::tree::tree_node_count;
use super::TreeAddress;

fn feasible(candidate: &[u8], strings: &[&[u8]], d: usize) -> bool {
    strings.iter().all(|s| hamming_codes(candidate, s) <= d)
}

fn check_instance<T: Scalar>(inst: &CspInstance<T>) -> Result<()> {
    if !inst.metric().is_hamming() {
        return Err(Error::UnsupportedMetric {
            operation: "tree-chain marking",
            metric: inst.metric().name(),
        });
    }
    if inst.d() == 0 {
        return Err(Error::InvalidArgument("the tree chain needs d >= 1".into()));
    }
    Ok(())
}

/// The substitution history that the search tree attaches to `address`.
///
/// Branch `c` at a node copies the `c`-th differing position of the first
/// input farther than `d`. Once a node's candidate is feasible the search
/// stops there, so its descendants share its (shorter) history.
pub fn history_for_address<T: Scalar>(
    inst: &CspInstance<T>,
    address: &TreeAddress,
) -> Result<WalkHistory> {
    check_instance(inst)?;
    if address.d() != inst.d() {
        return Err(Error::InvalidArgument(format!(
            "address built for d = {}, instance has d = {}",
            address.d(),
            inst.d()
        )));
    }
    let strings: Vec<&[u8]> = inst.strings().iter().map(Seq::codes).collect();
    let mut candidate = strings[0].to_vec();
    let mut history = WalkHistory::default();
    for &branch in address.path() {
        let Some((target, positions)) = branch_positions(&candidate, &strings, inst.d()) else {
            break;
        };
        let p = positions[branch - 1];
        candidate[p] = strings[target][p];
        history.push(target + 1, p);
    }
    Ok(history)
}

/// Every tree node whose candidate is a center of the preprocessed
/// instance. Empty when preprocessing already rules the instance out.
pub fn mark_solution_nodes<T: Scalar>(
    inst: &CspInstance<T>,
    budget: &Budget,
) -> Result<BTreeSet<TreeAddress>> {
    check_instance(inst)?;
    let d = inst.d();
    let nodes = tree_node_count(d);
    if nodes > budget.max_chain_nodes as u128 {
        return Err(Error::budget(
            "chain nodes",
            nodes,
            budget.max_chain_nodes as u128,
        ));
    }
    let pre = preprocess(inst)?;
    let mut marked = BTreeSet::new();
    if pre.verdict == Verdict::Unsolvable {
        return Ok(marked);
    }
    let strings: Vec<&[u8]> = pre.reduced.strings().iter().map(Seq::codes).collect();
    let mut candidate = strings[0].to_vec();
    let mut path = Vec::with_capacity(d);
    visit(&strings, d, &mut candidate, &mut path, &mut marked);
    Ok(marked)
}

fn visit(
    strings: &[&[u8]],
    d: usize,
    candidate: &mut Vec<u8>,
    path: &mut Vec<usize>,
    marked: &mut BTreeSet<TreeAddress>,
) {
    if feasible(candidate, strings, d) {
        mark_subtree(d, path, marked);
        return;
    }
    if path.len() == d {
        return;
    }
    let (target, positions) =
        branch_positions(candidate, strings, d).expect("infeasible candidate has a violator");
    for (c, &p) in positions.iter().enumerate() {
        let old = candidate[p];
        candidate[p] = strings[target][p];
        path.push(c + 1);
        visit(strings, d, candidate, path, marked);
        path.pop();
        candidate[p] = old;
    }
}

fn mark_subtree(d: usize, path: &mut Vec<usize>, marked: &mut BTreeSet<TreeAddress>) {
    marked.insert(TreeAddress::from_path(d, path).expect("path inside the tree"));
    if path.len() < d {
        for c in 1..=d + 1 {
            path.push(c);
            mark_subtree(d, path, marked);
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::csp::candidate_from_history;
    use crate::scalar::Rational;
    use crate::strings::{Alphabet, Metric};

    fn inst(texts: &[&str], d: usize) -> CspInstance<Rational> {
        CspInstance::from_strs(&Arc::new(Alphabet::dna()), texts, d, Metric::Hamming).unwrap()
    }

    #[test]
    fn infeasible_marks_nothing() {
        let b = Budget::default();
        assert!(
            mark_solution_nodes(&inst(&["AAA", "CCA", "CAC", "ACC"], 1), &b)
                .unwrap()
                .is_empty()
        );
        assert!(mark_solution_nodes(&inst(&["AAAA", "TTTT", "CCCC"], 1), &b)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn root_feasible_marks_everything() {
        let marked =
            mark_solution_nodes(&inst(&["AAAA", "AATA", "ATAA"], 1), &Budget::default()).unwrap();
        assert!(marked.contains(&TreeAddress::root(1)));
        assert_eq!(marked.len(), 3);
    }

    #[test]
    fn marked_nodes_are_centers() {
        let i = inst(&["AAAA", "TTAA"], 1);
        let marked = mark_solution_nodes(&i, &Budget::default()).unwrap();
        assert!(!marked.is_empty());
        let pre = preprocess(&i).unwrap();
        let s1 = &pre.reduced.strings()[0];
        for a in &marked {
            let h = history_for_address(&pre.reduced, a).unwrap();
            let c = candidate_from_history(s1, &h, &pre.reduced).unwrap();
            assert!(i.is_center(&pre.lift(&c).unwrap()).unwrap(), "{a}");
        }
        // The unmarked nodes really are infeasible.
        for idx in 0..3 {
            let a = TreeAddress::from_index(1, idx).unwrap();
            let h = history_for_address(&pre.reduced, &a).unwrap();
            let c = candidate_from_history(s1, &h, &pre.reduced).unwrap();
            assert_eq!(pre.reduced.is_center(&c).unwrap(), marked.contains(&a));
        }
    }

    #[test]
    fn rejects_d0_and_big_trees() {
        assert!(mark_solution_nodes(&inst(&["AA"], 0), &Budget::default()).is_err());
        let e = mark_solution_nodes(&inst(&["AAAAAA"], 6), &Budget::default()).unwrap_err();
        assert!(e.is_refusal());
    }
}
