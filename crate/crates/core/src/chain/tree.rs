use std::ops::Range;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::TreeAddress;

/// `|Ω| = ((d+1)^{d+1} − 1)/d`, saturating.
pub fn tree_node_count(d: usize) -> u128 {
    let b = d as u128 + 1;
    let mut total: u128 = 0;
    let mut width: u128 = 1;
    for _ in 0..=d {
        total = total.saturating_add(width);
        width = width.saturating_mul(b);
    }
    total
}

/// The lazy walk on the perfect `(d+1)`-ary tree of depth `d`.
///
/// Nodes are indexed breadth-first (see [`TreeAddress::index`]). Rows are
/// sparse and sorted by column.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeChain<T> {
    d: usize,
    offsets: Vec<usize>,
    rows: Vec<Vec<(usize, T)>>,
}

/// Builds the chain: every node stays put with probability 1/2; an interior
/// node moves to each child with 1/(4(d+1)) and to its parent with 1/4; a
/// leaf moves to its parent with 1/2; the root moves to each child with
/// 1/(2(d+1)).
pub fn build_tree_chain<T: Scalar>(d: usize, budget: &Budget) -> Result<TreeChain<T>> {
    if d == 0 {
        return Err(Error::InvalidArgument("the tree chain needs d >= 1".into()));
    }
    let nodes = tree_node_count(d);
    if nodes > budget.max_chain_nodes as u128 {
        return Err(Error::budget(
            "chain nodes",
            nodes,
            budget.max_chain_nodes as u128,
        ));
    }
    let b = d + 1;
    let mut offsets = vec![0usize];
    let mut width = 1;
    for _ in 0..=d {
        offsets.push(offsets.last().unwrap() + width);
        width *= b;
    }
    let mut chain = TreeChain {
        d,
        offsets,
        rows: Vec::with_capacity(nodes as usize),
    };
    let bb = b as i64;
    for i in 0..nodes as usize {
        let layer = chain.layer(i);
        let (to_child, to_parent) = if layer == 0 {
            (T::ratio(1, 2 * bb), None)
        } else if layer == d {
            (T::zero(), Some(T::ratio(1, 2)))
        } else {
            (T::ratio(1, 4 * bb), Some(T::ratio(1, 4)))
        };
        let mut row = Vec::with_capacity(b + 2);
        if let (Some(p), Some(q)) = (chain.parent(i), to_parent) {
            row.push((p, q));
        }
        row.push((i, T::ratio(1, 2)));
        row.extend(chain.children(i).map(|c| (c, to_child.clone())));
        chain.rows.push(row);
    }
    Ok(chain)
}

impl<T: Scalar> TreeChain<T> {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Index range of one layer.
    pub fn layer_range(&self, layer: usize) -> Range<usize> {
        self.offsets[layer]..self.offsets[layer + 1]
    }

    pub fn layer(&self, i: usize) -> usize {
        self.offsets.partition_point(|&o| o <= i) - 1
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        let layer = self.layer(i);
        (layer > 0).then(|| self.offsets[layer - 1] + (i - self.offsets[layer]) / (self.d + 1))
    }

    pub fn children(&self, i: usize) -> Range<usize> {
        let layer = self.layer(i);
        if layer == self.d {
            return i..i;
        }
        let start = self.offsets[layer + 1] + (i - self.offsets[layer]) * (self.d + 1);
        start..start + self.d + 1
    }

    pub fn address(&self, i: usize) -> TreeAddress {
        TreeAddress::from_index(self.d, i).expect("index inside the tree")
    }

    pub fn index_of(&self, a: &TreeAddress) -> Result<usize> {
        if a.d() != self.d {
            return Err(Error::InvalidArgument(format!(
                "address for d = {} used on a chain with d = {}",
                a.d(),
                self.d
            )));
        }
        Ok(a.index())
    }

    /// Non-zero entries of row `i`, sorted by column.
    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.rows[i]
    }

    /// `p_{ij}`, zero when there is no transition.
    pub fn p(&self, i: usize, j: usize) -> T {
        self.rows[i]
            .iter()
            .find(|(c, _)| *c == j)
            .map_or_else(T::zero, |(_, v)| v.clone())
    }

    /// Parent–child pairs, parent first.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..self.len())
            .map(|c| (self.parent(c).unwrap(), c))
            .collect()
    }

    /// Overwrites one entry. Rows are no longer guaranteed to be stochastic
    /// afterwards; used to check that the verifiers notice.
    pub fn set_transition(&mut self, i: usize, j: usize, value: T) {
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => row[pos].1 = value,
            Err(pos) => row.insert(pos, (j, value)),
        }
    }

    pub fn row_sum(&self, i: usize) -> T {
        self.rows[i]
            .iter()
            .fold(T::zero(), |acc, (_, v)| acc + v.clone())
    }

    /// The same chain in another scalar type.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> TreeChain<U> {
        TreeChain {
            d: self.d,
            offsets: self.offsets.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|(c, v)| (*c, f(v))).collect())
                .collect(),
        }
    }

    pub fn to_f64(&self) -> TreeChain<f64> {
        self.map(Scalar::as_f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn exact(d: usize) -> TreeChain<Rational> {
        build_tree_chain(d, &Budget::default()).unwrap()
    }

    #[test]
    fn node_counts() {
        let counts: Vec<u128> = (1..=5).map(tree_node_count).collect();
        assert_eq!(counts, [3, 13, 85, 781, 9331]);
        assert_eq!(exact(2).len(), 13);
    }

    #[test]
    fn d1_rows() {
        let c = exact(1);
        let r = |n, d| Rational::ratio(n, d);
        assert_eq!(
            (0..3).map(|j| c.p(0, j)).collect::<Vec<_>>(),
            [r(1, 2), r(1, 4), r(1, 4)]
        );
        assert_eq!(
            (0..3).map(|j| c.p(1, j)).collect::<Vec<_>>(),
            [r(1, 2), r(1, 2), r(0, 1)]
        );
        assert_eq!(
            (0..3).map(|j| c.p(2, j)).collect::<Vec<_>>(),
            [r(1, 2), r(0, 1), r(1, 2)]
        );
    }

    #[test]
    fn rows_sum_to_one_and_are_lazy() {
        for d in 1..=4 {
            let c = exact(d);
            for i in 0..c.len() {
                assert_eq!(c.row_sum(i), Rational::ratio(1, 1));
                assert!(c.p(i, i) >= Rational::ratio(1, 2));
                for (j, _) in c.row(i) {
                    assert!(c.layer(i).abs_diff(c.layer(*j)) <= 1);
                }
            }
        }
    }

    #[test]
    fn structure_matches_addresses() {
        let c = exact(3);
        for i in 0..c.len() {
            let a = c.address(i);
            assert_eq!(c.layer(i), a.layer());
            assert_eq!(c.parent(i), a.parent().map(|p| p.index()));
            let kids: Vec<usize> = a.children().iter().map(TreeAddress::index).collect();
            assert_eq!(c.children(i).collect::<Vec<_>>(), kids);
        }
        assert_eq!(c.edges().len(), c.len() - 1);
    }

    #[test]
    fn refuses() {
        assert!(build_tree_chain::<f64>(0, &Budget::default()).is_err());
        let e = build_tree_chain::<f64>(6, &Budget::default()).unwrap_err();
        assert!(e.is_refusal());
        let small = Budget {
            max_chain_nodes: 12,
            ..Budget::default()
        };
        assert!(build_tree_chain::<f64>(2, &small).unwrap_err().is_refusal());
    }

    #[test]
    fn perturbation() {
        let mut c = exact(1);
        c.set_transition(0, 1, Rational::ratio(1, 8));
        assert_eq!(c.p(0, 1), Rational::ratio(1, 8));
        assert_ne!(c.row_sum(0), Rational::ratio(1, 1));
    }
}
