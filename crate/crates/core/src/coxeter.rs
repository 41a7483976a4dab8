//! Coxeter diagrams, finite-type recognition and Solomon's product formula.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactpoly::{bracket, IntPolynomial};
use crate::geometry::PyramidQuadruple;

/// Order `m(s, s')` of the product of two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Finite(u32),
    /// No relation: parallel (bold edge) or ultra-parallel mirrors.
    Infinity,
}

impl Label {
    /// Edges in the Coxeter graph are the pairs with `m >= 3` or `m = inf`.
    pub fn is_edge(self) -> bool {
        !matches!(self, Label::Finite(1 | 2))
    }

    /// Wire encoding: `0` for infinity.
    pub fn to_wire(self) -> u32 {
        match self {
            Label::Finite(m) => m,
            Label::Infinity => 0,
        }
    }

    pub fn from_wire(m: u32) -> Self {
        match m {
            0 => Label::Infinity,
            m => Label::Finite(m),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// Symmetric matrix of labels over a named generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDiagram {
    generators: Vec<String>,
    matrix: Vec<Vec<Label>>,
}

impl CoxeterDiagram {
    /// Diagram with every pair commuting (`m = 2`).
    pub fn discrete(generators: Vec<String>) -> Self {
        let r = generators.len();
        let matrix = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| if i == j { Label::Finite(1) } else { Label::Finite(2) })
                    .collect()
            })
            .collect();
        Self { generators, matrix }
    }

    /// Builds a diagram from `(i, j, m)` triples; unlisted pairs get `m = 2`.
    pub fn from_edges(generators: Vec<String>, edges: &[(usize, usize, Label)]) -> Result<Self> {
        let mut d = Self::discrete(generators);
        for &(i, j, m) in edges {
            d.set(i, j, m)?;
        }
        Ok(d)
    }

    pub fn set(&mut self, i: usize, j: usize, m: Label) -> Result<()> {
        let r = self.rank();
        if i >= r || j >= r {
            return Err(Error::InvalidArgument(alloc::format!(
                "edge ({i}, {j}) refers to a generator outside 0..{r}"
            )));
        }
        if i == j {
            return Err(Error::InvalidArgument("diagonal entries are fixed to 1".into()));
        }
        if matches!(m, Label::Finite(0 | 1)) {
            return Err(Error::InvalidArgument(alloc::format!(
                "off-diagonal label must be >= 2 or infinity, got {m}"
            )));
        }
        self.matrix[i][j] = m;
        self.matrix[j][i] = m;
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.matrix[i][j]
    }

    /// Edges `(i, j, m)` with `i < j` and `m != 2`.
    pub fn edges(&self) -> Vec<(usize, usize, Label)> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                if self.matrix[i][j].is_edge() {
                    out.push((i, j, self.matrix[i][j]));
                }
            }
        }
        out
    }

    /// Sub-diagram on the generators whose bit is set in `mask`.
    pub fn restrict(&self, mask: u64) -> Self {
        let idx: Vec<usize> = (0..self.rank()).filter(|&i| mask >> i & 1 == 1).collect();
        Self {
            generators: idx.iter().map(|&i| self.generators[i].clone()).collect(),
            matrix: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.matrix[i][j]).collect())
                .collect(),
        }
    }

    /// Generators relabeled so that new generator `i` is old `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            generators: perm.iter().map(|&i| self.generators[i].clone()).collect(),
            matrix: perm
                .iter()
                .map(|&i| perm.iter().map(|&j| self.matrix[i][j]).collect())
                .collect(),
        }
    }
}

/// Generator names of a pyramid diagram, base facet first.
pub const PYRAMID_GENERATORS: [&str; 5] = ["b", "A", "B", "C", "D"];

/// Coxeter diagram of the pyramid with labels `q`: the base meets side
/// `i` at angle `pi/label_i`, adjacent sides are orthogonal, opposite sides
/// are parallel.
pub fn pyramid_diagram(q: &PyramidQuadruple) -> CoxeterDiagram {
    const B: usize = 0;
    const A: usize = 1;
    const BB: usize = 2;
    const C: usize = 3;
    const D: usize = 4;
    let names = PYRAMID_GENERATORS.iter().map(|s| s.to_string()).collect();
    let edges = [
        (B, A, Label::Finite(q.k())),
        (B, BB, Label::Finite(q.m())),
        (B, C, Label::Finite(q.l())),
        (B, D, Label::Finite(q.n())),
        (A, C, Label::Infinity),
        (BB, D, Label::Infinity),
    ];
    CoxeterDiagram::from_edges(names, &edges).expect("pyramid labels are >= 2")
}

/// Irreducible finite Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiniteKind {
    A,
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    /// Dihedral group of order `2m`, only used for `m >= 5`.
    I2(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteComponent {
    pub kind: FiniteKind,
    pub rank: usize,
}

impl FiniteComponent {
    /// Exponents of the reflection group.
    pub fn exponents(&self) -> Vec<u32> {
        let n = self.rank as u32;
        match self.kind {
            FiniteKind::A => (1..=n).collect(),
            FiniteKind::B => (1..=n).map(|i| 2 * i - 1).collect(),
            FiniteKind::D => {
                let mut e: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e
            }
            FiniteKind::E6 => vec![1, 4, 5, 7, 8, 11],
            FiniteKind::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            FiniteKind::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
            FiniteKind::F4 => vec![1, 5, 7, 11],
            FiniteKind::H3 => vec![1, 5, 9],
            FiniteKind::H4 => vec![1, 11, 19, 29],
            FiniteKind::I2(m) => vec![1, m - 1],
        }
    }
}

impl fmt::Display for FiniteComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FiniteKind::A => write!(f, "A{}", self.rank),
            FiniteKind::B => write!(f, "B{}", self.rank),
            FiniteKind::D => write!(f, "D{}", self.rank),
            FiniteKind::I2(m) => write!(f, "I2({m})"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// Irreducible components of a finite Coxeter group, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiniteTypeDecomposition {
    pub components: Vec<FiniteComponent>,
}

impl FiniteTypeDecomposition {
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }
}

impl fmt::Display for FiniteTypeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("1");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn components(d: &CoxeterDiagram) -> Vec<Vec<usize>> {
    let r = d.rank();
    let mut seen = vec![false; r];
    let mut out = Vec::new();
    for start in 0..r {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in 0..r {
                if !seen[w] && w != v && d.label(v, w).is_edge() {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn finite_label(l: Label) -> Option<u32> {
    match l {
        Label::Finite(m) => Some(m),
        Label::Infinity => None,
    }
}

/// Walks a path starting at an end vertex and returns the edge labels.
fn path_labels(d: &CoxeterDiagram, comp: &[usize], start: usize) -> Option<Vec<u32>> {
    let mut labels = Vec::with_capacity(comp.len() - 1);
    let mut prev = usize::MAX;
    let mut cur = start;
    for _ in 1..comp.len() {
        let next = comp
            .iter()
            .copied()
            .find(|&w| w != cur && w != prev && d.label(cur, w).is_edge())?;
        labels.push(finite_label(d.label(cur, next))?);
        prev = cur;
        cur = next;
    }
    Some(labels)
}

fn recognize_component(d: &CoxeterDiagram, comp: &[usize]) -> Option<FiniteComponent> {
    let rank = comp.len();
    let mut degree = vec![0usize; d.rank()];
    let mut edge_count = 0;
    for (a, &v) in comp.iter().enumerate() {
        for &w in &comp[a + 1..] {
            let l = d.label(v, w);
            if l.is_edge() {
                finite_label(l)?;
                degree[v] += 1;
                degree[w] += 1;
                edge_count += 1;
            }
        }
    }
    if rank == 1 {
        return Some(FiniteComponent { kind: FiniteKind::A, rank: 1 });
    }
    if edge_count != rank - 1 {
        // cycles: affine A~ or hyperbolic
        return None;
    }
    if rank == 2 {
        let m = finite_label(d.label(comp[0], comp[1]))?;
        let kind = match m {
            3 => FiniteKind::A,
            4 => FiniteKind::B,
            m => FiniteKind::I2(m),
        };
        return Some(FiniteComponent { kind, rank: 2 });
    }
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree[v] >= 3).collect();
    match branch.as_slice() {
        [] => {
            let end = comp.iter().copied().find(|&v| degree[v] == 1)?;
            let mut labels = path_labels(d, comp, end)?;
            let heavy: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] > 3).collect();
            match heavy.as_slice() {
                [] => Some(FiniteComponent { kind: FiniteKind::A, rank }),
                [i] => {
                    let last = labels.len() - 1;
                    if *i == last {
                        labels.reverse();
                    }
                    let at_end = *i == 0 || *i == last;
                    match (labels[if at_end { 0 } else { *i }], at_end, rank) {
                        (4, true, _) => Some(FiniteComponent { kind: FiniteKind::B, rank }),
                        (4, false, 4) if *i == 1 => {
                            Some(FiniteComponent { kind: FiniteKind::F4, rank })
                        }
                        (5, true, 3) => Some(FiniteComponent { kind: FiniteKind::H3, rank }),
                        (5, true, 4) => Some(FiniteComponent { kind: FiniteKind::H4, rank }),
                        _ => None,
                    }
                }
                _ => None,
            }
        }
        [center] => {
            if degree[*center] != 3 {
                return None;
            }
            // simply laced star with three arms
            let mut arms = Vec::with_capacity(3);
            for &first in comp {
                if first == *center || !d.label(*center, first).is_edge() {
                    continue;
                }
                if finite_label(d.label(*center, first))? != 3 {
                    return None;
                }
                let mut len = 1;
                let (mut prev, mut cur) = (*center, first);
                while let Some(next) = comp
                    .iter()
                    .copied()
                    .find(|&w| w != cur && w != prev && d.label(cur, w).is_edge())
                {
                    if finite_label(d.label(cur, next))? != 3 {
                        return None;
                    }
                    len += 1;
                    prev = cur;
                    cur = next;
                }
                arms.push(len);
            }
            arms.sort_unstable();
            let kind = match arms.as_slice() {
                [1, 1, _] => FiniteKind::D,
                [1, 2, 2] => FiniteKind::E6,
                [1, 2, 3] => FiniteKind::E7,
                [1, 2, 4] => FiniteKind::E8,
                _ => return None,
            };
            Some(FiniteComponent { kind, rank })
        }
        _ => None,
    }
}

/// Decomposes `d` into irreducible finite types, or returns `None` when
/// the group it presents is infinite.
pub fn recognize_finite_type(d: &CoxeterDiagram) -> Option<FiniteTypeDecomposition> {
    let mut out = Vec::new();
    for comp in components(d) {
        out.push(recognize_component(d, &comp)?);
    }
    out.sort();
    Some(FiniteTypeDecomposition { components: out })
}

/// Growth polynomial of a finite Coxeter group: the product of
/// `[e + 1]` over all exponents `e` of all components.
pub fn solomon_growth(ft: &FiniteTypeDecomposition) -> IntPolynomial {
    ft.components
        .iter()
        .flat_map(FiniteComponent::exponents)
        .fold(IntPolynomial::one(), |acc, e| {
            &acc * &bracket(e + 1).expect("exponents are positive")
        })
}

/// Generator subsets (as bitmasks) that generate finite subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteParabolicFamily {
    pub subsets: Vec<(u64, FiniteTypeDecomposition)>,
}

impl FiniteParabolicFamily {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.subsets.iter().any(|(m, _)| *m == mask)
    }
}

/// Every subset `T` of the generators with `G_T` finite, by exhaustive
/// search over all `2^|S|` subsets in increasing bitmask order.
pub fn finite_parabolic_family(d: &CoxeterDiagram) -> FiniteParabolicFamily {
    assert!(d.rank() < 64, "diagram too large for bitmask enumeration");
    let subsets = (0..1u64 << d.rank())
        .filter_map(|mask| recognize_finite_type(&d.restrict(mask)).map(|ft| (mask, ft)))
        .collect();
    FiniteParabolicFamily { subsets }
}
