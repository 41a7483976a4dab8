//! Inclusion order on Coxeter pyramids.
//!
//! `P1 <= P2` when some isometric copy of `P1` sits inside `P2`. With both
//! pyramids normalized on the same hemisphere this is inclusion of link
//! rectangles, which in labels means: some relabeling of `P1`'s cyclic side
//! sequence is componentwise at most `P2`'s.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::geometry::{enumerate_pyramids, Dihedral, PyramidQuadruple};

/// Whether `a` fits inside `b` under some alignment of the rectangles.
pub fn leq(a: &PyramidQuadruple, b: &PyramidQuadruple) -> bool {
    let target = b.cyclic();
    Dihedral::all().any(|s| {
        s.apply(a.cyclic())
            .iter()
            .zip(&target)
            .all(|(x, y)| x <= y)
    })
}

/// The order relation on a list of pyramids, with its covering relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderRelation {
    pub elements: Vec<PyramidQuadruple>,
    /// Index pairs `(i, j)` with `elements[i] <= elements[j]`, reflexive pairs included.
    pub pairs: Vec<(usize, usize)>,
    /// Covering pairs: `i < j` with nothing strictly in between.
    pub hasse_edges: Vec<(usize, usize)>,
}

impl OrderRelation {
    pub fn over(elements: Vec<PyramidQuadruple>) -> Self {
        let n = elements.len();
        let mut le = alloc::vec![alloc::vec![false; n]; n];
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if leq(&elements[i], &elements[j]) {
                    le[i][j] = true;
                    pairs.push((i, j));
                }
            }
        }
        let mut hasse_edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !le[i][j] {
                    continue;
                }
                let between = (0..n).any(|c| c != i && c != j && le[i][c] && le[c][j]);
                if !between {
                    hasse_edges.push((i, j));
                }
            }
        }
        Self {
            elements,
            pairs,
            hasse_edges,
        }
    }

    pub fn index_of(&self, q: &PyramidQuadruple) -> Option<usize> {
        self.elements.iter().position(|e| e == q)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.pairs.binary_search(&(i, j)).is_ok()
    }

    /// Elements below nothing but themselves.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&j| (0..self.elements.len()).all(|i| i == j || !self.le(i, j)))
            .collect()
    }

    /// Elements above nothing but themselves.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| (0..self.elements.len()).all(|j| i == j || !self.le(i, j)))
            .collect()
    }

    /// Reflexive-transitive closure of the covering relation.
    pub fn closure_of_hasse(&self) -> Vec<(usize, usize)> {
        let n = self.elements.len();
        let mut reach = alloc::vec![alloc::vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in &self.hasse_edges {
            reach[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if reach[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// The order on all 33 pyramids, elements in lexicographic order.
pub fn build_order() -> OrderRelation {
    OrderRelation::over(enumerate_pyramids())
}

/// Comparison of the inclusion order with a numeric invariant.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MonotonicityReport {
    /// Ordered pairs `q1 <= q2` with `value(q1) > value(q2) + tol`.
    pub violations: Vec<(PyramidQuadruple, PyramidQuadruple)>,
    /// Ordered pairs `q1 != q2` with `value(q1) <= value(q2) + tol` but `q1 </= q2`.
    pub converse_exceptions: Vec<(PyramidQuadruple, PyramidQuadruple)>,
    pub pairs_checked: usize,
}

impl MonotonicityReport {
    pub fn is_monotone(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `value` never decreases along the order, and lists the
/// pairs where the values compare but the pyramids do not.
pub fn monotonicity_report(
    order: &OrderRelation,
    values: &BTreeMap<PyramidQuadruple, f64>,
    tol: f64,
) -> MonotonicityReport {
    let mut report = MonotonicityReport::default();
    let n = order.elements.len();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a, b) = (order.elements[i], order.elements[j]);
            let (Some(&va), Some(&vb)) = (values.get(&a), values.get(&b)) else {
                continue;
            };
            let value_le = va <= vb + tol;
            if order.le(i, j) {
                report.pairs_checked += 1;
                if !value_le {
                    report.violations.push((a, b));
                }
            } else if value_le {
                report.converse_exceptions.push((a, b));
            }
        }
    }
    report
}
