use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A node of the perfect `(d+1)`-ary tree of depth `d`.
///
/// Written as `(j₁, …, j_l, 0, …, 0)`: the leading non-zero coordinates are
/// the branch taken at each layer, each in `1..=d+1`. The root is all zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TreeAddress {
    d: usize,
    path: Vec<usize>,
}

impl TreeAddress {
    pub fn root(d: usize) -> Self {
        TreeAddress {
            d,
            path: Vec::new(),
        }
    }

    /// From the full length-`d` coordinate vector.
    pub fn new(d: usize, coords: &[usize]) -> Result<Self> {
        if coords.len() != d {
            return Err(Error::InvalidArgument(format!(
                "expected {d} coordinates, got {}",
                coords.len()
            )));
        }
        let layer = coords.iter().take_while(|&&c| c != 0).count();
        if coords[layer..].iter().any(|&c| c != 0) {
            return Err(Error::InvalidArgument(format!(
                "non-zero coordinates must form a prefix: {coords:?}"
            )));
        }
        Self::from_path(d, &coords[..layer])
    }

    /// From the branch choices alone.
    pub fn from_path(d: usize, path: &[usize]) -> Result<Self> {
        if path.len() > d {
            return Err(Error::OutOfRange(format!(
                "depth {} exceeds {d}",
                path.len()
            )));
        }
        if let Some(&c) = path.iter().find(|&&c| c == 0 || c > d + 1) {
            return Err(Error::OutOfRange(format!(
                "branch {c} outside 1..={}",
                d + 1
            )));
        }
        Ok(TreeAddress {
            d,
            path: path.to_vec(),
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn layer(&self) -> usize {
        self.path.len()
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    /// Zero-padded coordinates.
    pub fn coords(&self) -> Vec<usize> {
        let mut c = self.path.clone();
        c.resize(self.d, 0);
        c
    }

    pub fn is_root(&self) -> bool {
        self.path.is_empty()
    }

    pub fn is_leaf(&self) -> bool {
        self.path.len() == self.d
    }

    pub fn parent(&self) -> Option<TreeAddress> {
        let mut path = self.path.clone();
        path.pop()?;
        Some(TreeAddress { d: self.d, path })
    }

    pub fn children(&self) -> Vec<TreeAddress> {
        if self.is_leaf() {
            return Vec::new();
        }
        (1..=self.d + 1)
            .map(|c| {
                let mut path = self.path.clone();
                path.push(c);
                TreeAddress { d: self.d, path }
            })
            .collect()
    }

    /// Position in breadth-first order, root first.
    pub fn index(&self) -> usize {
        let b = self.d + 1;
        let offset: usize = (0..self.layer()).map(|l| b.pow(l as u32)).sum();
        offset + self.path.iter().fold(0, |rank, &c| rank * b + (c - 1))
    }

    /// Inverse of [`TreeAddress::index`].
    pub fn from_index(d: usize, index: usize) -> Result<Self> {
        let b = d + 1;
        let mut rest = index;
        let mut width = 1;
        for layer in 0..=d {
            if rest < width {
                let mut path = vec![0; layer];
                for slot in path.iter_mut().rev() {
                    *slot = rest % b + 1;
                    rest /= b;
                }
                return Ok(TreeAddress { d, path });
            }
            rest -= width;
            width *= b;
        }
        Err(Error::OutOfRange(format!("node index {index} for d = {d}")))
    }
}

impl Ord for TreeAddress {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.d, self.path.len(), &self.path).cmp(&(other.d, other.path.len(), &other.path))
    }
}

impl PartialOrd for TreeAddress {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TreeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}
