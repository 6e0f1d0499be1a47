//! Finite posets used as stratification targets.
//!
//! A poset carries the Alexandrov topology: the open sets are exactly the
//! upward closed sets, so a monotone map of posets is the same thing as a
//! continuous map. Stratifications of complexes land in these.

use alloc::string::String;
use alloc::vec::Vec;

use crate::group::ConjClassPoset;

/// A finite poset with named elements and an explicit order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratPoset {
    labels: Vec<String>,
    /// `leq[a][b]` iff `a <= b`.
    leq: Vec<Vec<bool>>,
}

impl StratPoset {
    /// Builds a poset from the reflexive-transitive closure of `covers`,
    /// then checks antisymmetry.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Option<StratPoset> {
        let n = labels.len();
        let mut leq = alloc::vec![alloc::vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return None;
            }
            leq[a][b] = true;
        }
        // Floyd–Warshall style transitive closure
        for k in 0..n {
            let row_k = leq[k].clone();
            for row_a in leq.iter_mut() {
                if row_a[k] {
                    for (b, &through) in row_k.iter().enumerate() {
                        if through {
                            row_a[b] = true;
                        }
                    }
                }
            }
        }
        let poset = StratPoset { labels, leq };
        poset.is_partial_order().then_some(poset)
    }

    /// Builds a poset directly from a relation matrix, validating the axioms.
    pub fn from_relation(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Option<StratPoset> {
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return None;
        }
        let poset = StratPoset { labels, leq };
        poset.is_partial_order().then_some(poset)
    }

    fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| self.leq[a][a])
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    (!(self.leq[a][b] && self.leq[b][a]) || a == b)
                        && (0..n).all(|c| !(self.leq[a][b] && self.leq[b][c]) || self.leq[a][c])
                })
            })
    }

    /// The chain poset `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> StratPoset {
        StratPoset {
            labels: (0..n).map(|i| alloc::format!("{i}")).collect(),
            leq: (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect(),
        }
    }

    /// A poset with no relations besides equality.
    pub fn antichain(labels: Vec<String>) -> StratPoset {
        let n = labels.len();
        StratPoset {
            labels,
            leq: (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect(),
        }
    }

    /// The one-element poset.
    pub fn point() -> StratPoset {
        StratPoset::chain(1)
    }

    /// The stratifying poset of conjugacy classes, in the poset's chosen
    /// orientation, with human-readable class labels `[n]` by subgroup order.
    pub fn from_conj_classes(classes: &ConjClassPoset) -> StratPoset {
        let n = classes.len();
        StratPoset {
            labels: (0..n)
                .map(|c| alloc::format!("[{}]", classes.representative(c).order()))
                .collect(),
            leq: (0..n)
                .map(|a| (0..n).map(|b| classes.leq(a, b)).collect())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq[a][b] || self.leq[b][a]
    }

    pub fn opposite(&self) -> StratPoset {
        let n = self.len();
        StratPoset {
            labels: self.labels.clone(),
            leq: (0..n).map(|a| (0..n).map(|b| self.leq[b][a]).collect()).collect(),
        }
    }

    /// Left cone: the same poset with a new minimum freely adjoined at
    /// index 0 (all old indices shift up by one).
    pub fn left_cone(&self, apex_label: &str) -> StratPoset {
        let n = self.len() + 1;
        let mut labels = Vec::with_capacity(n);
        labels.push(String::from(apex_label));
        labels.extend(self.labels.iter().cloned());
        let leq = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        if a == 0 {
                            true
                        } else if b == 0 {
                            false
                        } else {
                            self.leq[a - 1][b - 1]
                        }
                    })
                    .collect()
            })
            .collect();
        StratPoset { labels, leq }
    }

    /// Depth of an element: the number of elements in the longest chain
    /// ending at it (so minimal elements have depth 1).
    pub fn depth_of(&self, p: usize) -> usize {
        let mut best = 1;
        for q in 0..self.len() {
            if self.lt(q, p) {
                let d = self.depth_of(q) + 1;
                if d > best {
                    best = d;
                }
            }
        }
        best
    }

    /// Depth of the whole poset: the length of its longest chain.
    pub fn depth(&self) -> usize {
        (0..self.len()).map(|p| self.depth_of(p)).max().unwrap_or(0)
    }
}

/// The strictly monotone map sending each element to its depth, together
/// with the chain it lands in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthMap {
    pub chain: StratPoset,
    /// Element of the chain (0-based index; depth d lands at index d-1).
    pub map: Vec<usize>,
}

pub fn depth_map(p: &StratPoset) -> DepthMap {
    let n = p.depth();
    DepthMap {
        chain: StratPoset::chain(n),
        map: (0..p.len()).map(|x| p.depth_of(x) - 1).collect(),
    }
}
