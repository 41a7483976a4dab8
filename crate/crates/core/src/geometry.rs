//! Labelings of Coxeter pyramids and their projected links.
//!
//! A pyramid is normalized with apex at infinity, base on the unit
//! hemisphere, and side facets A, B, C, D vertical. Seen from above, the
//! side facets cut out a rectangle in the unit disk; side `i` sits at
//! Euclidean distance `cos(theta_i)` from the origin, where
//! `theta_A = pi/k`, `theta_B = pi/m`, `theta_C = pi/l`, `theta_D = pi/n`.
//! Going around the rectangle the sides appear in the order A, B, C, D,
//! so the cyclic label sequence is `(k, m, l, n)`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Labels above this bound cannot occur: a label `x >= 7` forces both
/// neighbours to be 2, which makes the opposite pair degenerate.
pub const MAX_LABEL: u32 = 6;

/// Dihedral-angle denominators `(k, l, m, n)` of a Coxeter pyramid.
///
/// Construction checks the corner and non-degeneracy conditions but not
/// the ordering of the canonical form; see [`PyramidQuadruple::canonicalize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PyramidQuadruple {
    k: u32,
    l: u32,
    m: u32,
    n: u32,
}

/// Shape of the base-vertex link at a rectangle corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CornerKind {
    /// Spherical link: finite vertex strictly inside the disk.
    Material,
    /// Euclidean link: ideal vertex on the unit circle.
    Ideal,
    /// Hyperbolic link: corner outside the disk, no pyramid.
    Excluded,
}

/// Classifies the corner where sides with labels `a` and `b` meet, by
/// comparing `1/a + 1/b` against `1/2` in exact arithmetic.
pub fn adjacent_pair_ok(a: u32, b: u32) -> CornerKind {
    // 1/a + 1/b ? 1/2  <=>  2(a + b) ? ab
    let lhs = 2 * (u64::from(a) + u64::from(b));
    let rhs = u64::from(a) * u64::from(b);
    match lhs.cmp(&rhs) {
        core::cmp::Ordering::Greater => CornerKind::Material,
        core::cmp::Ordering::Equal => CornerKind::Ideal,
        core::cmp::Ordering::Less => CornerKind::Excluded,
    }
}

/// One of the eight symmetries of the rectangle, acting on cyclic label
/// sequences `(A, B, C, D)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dihedral {
    rotation: usize,
    reflect: bool,
}

impl Dihedral {
    pub fn all() -> impl Iterator<Item = Dihedral> {
        (0..4).flat_map(|rotation| {
            [false, true]
                .into_iter()
                .map(move |reflect| Dihedral { rotation, reflect })
        })
    }

    pub fn apply(self, seq: [u32; 4]) -> [u32; 4] {
        core::array::from_fn(|j| {
            let idx = if self.reflect {
                (self.rotation + 4 - j) % 4
            } else {
                (self.rotation + j) % 4
            };
            seq[idx]
        })
    }
}

impl PyramidQuadruple {
    pub fn new(k: u32, l: u32, m: u32, n: u32) -> Result<Self> {
        let q = Self { k, l, m, n };
        let raw = [k, l, m, n];
        if raw.iter().any(|&x| x < 2) {
            return Err(Error::InvalidQuadruple {
                quadruple: raw,
                reason: "every label must be at least 2",
            });
        }
        if k == 2 && l == 2 {
            return Err(Error::InvalidQuadruple {
                quadruple: raw,
                reason: "opposite sides A and C both pass through the origin (k = l = 2)",
            });
        }
        if m == 2 && n == 2 {
            return Err(Error::InvalidQuadruple {
                quadruple: raw,
                reason: "opposite sides B and D both pass through the origin (m = n = 2)",
            });
        }
        if q
            .corner_labels()
            .iter()
            .any(|&(a, b)| adjacent_pair_ok(a, b) == CornerKind::Excluded)
        {
            return Err(Error::InvalidQuadruple {
                quadruple: raw,
                reason: "a rectangle corner lies outside the unit disk (1/x + 1/y < 1/2 for adjacent sides)",
            });
        }
        Ok(q)
    }

    /// Builds a quadruple from its cyclic side sequence `(A, B, C, D)`.
    pub fn from_cyclic(seq: [u32; 4]) -> Result<Self> {
        let [a, b, c, d] = seq;
        Self::new(a, c, b, d)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `[k, l, m, n]`.
    pub fn as_array(&self) -> [u32; 4] {
        [self.k, self.l, self.m, self.n]
    }

    /// Labels of sides A, B, C, D in the order they appear around the rectangle.
    pub fn cyclic(&self) -> [u32; 4] {
        [self.k, self.m, self.l, self.n]
    }

    /// Label pairs at the corners AB, BC, CD, DA.
    pub fn corner_labels(&self) -> [(u32, u32); 4] {
        let s = self.cyclic();
        core::array::from_fn(|i| (s[i], s[(i + 1) % 4]))
    }

    /// The ordering `k <= l, m <= n, k <= m`, and `l <= n` when `k = m`.
    pub fn is_canonical(&self) -> bool {
        self.k <= self.l
            && self.m <= self.n
            && self.k <= self.m
            && (self.k != self.m || self.l <= self.n)
    }

    /// All eight relabelings of the same pyramid.
    pub fn orbit(&self) -> impl Iterator<Item = PyramidQuadruple> + '_ {
        Dihedral::all().map(move |s| {
            Self::from_cyclic(s.apply(self.cyclic())).expect("symmetry preserves validity")
        })
    }

    /// The unique relabeling in canonical form.
    pub fn canonicalize(&self) -> Result<Self> {
        let mut found: Option<Self> = None;
        for image in self.orbit().filter(Self::is_canonical) {
            match found {
                None => found = Some(image),
                Some(prev) => assert_eq!(prev, image, "canonical form must be unique"),
            }
        }
        found.ok_or(Error::NoCanonicalForm(*self))
    }

    pub fn projected_link(&self) -> ProjectedLink {
        ProjectedLink::of(self)
    }
}

impl fmt::Display for PyramidQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.k, self.l, self.m, self.n)
    }
}

impl FromStr for PyramidQuadruple {
    type Err = Error;

    /// Parses `"k,l,m,n"`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::InvalidArgument(alloc::format!(
                "expected four comma-separated labels \"k,l,m,n\", got {s:?}"
            )));
        }
        let mut labels = [0u32; 4];
        for (slot, part) in labels.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| {
                Error::InvalidArgument(alloc::format!("label {part:?} is not a positive integer"))
            })?;
        }
        let [k, l, m, n] = labels;
        Self::new(k, l, m, n)
    }
}

/// Quadruples with labels up to `max_label` that describe a pyramid and are
/// in canonical form, sorted lexicographically in `(k, l, m, n)`.
pub fn enumerate_with_bound(max_label: u32) -> Vec<PyramidQuadruple> {
    let labels = 2..=max_label;
    let mut out = Vec::new();
    for k in labels.clone() {
        for l in labels.clone() {
            for m in labels.clone() {
                for n in labels.clone() {
                    if let Ok(q) = PyramidQuadruple::new(k, l, m, n) {
                        if q.is_canonical() {
                            out.push(q);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The complete list of Coxeter pyramids in hyperbolic 3-space.
pub fn enumerate_pyramids() -> Vec<PyramidQuadruple> {
    enumerate_with_bound(MAX_LABEL)
}

/// The rectangle `[x_min, x_max] x [y_min, y_max]` cut out of the unit disk
/// by the side facets. B and D are the vertical edges (B on the right),
/// A and C the horizontal ones (C on top).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectedLink {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    /// Corner classification in the order AB, BC, CD, DA.
    pub corners: [CornerKind; 4],
}

/// `cos(pi / label)`, exact at the labels where that is rational.
pub fn cos_pi_over(label: u32) -> f64 {
    match label {
        2 => 0.0,
        3 => 0.5,
        _ => libm::cos(core::f64::consts::PI / f64::from(label)),
    }
}

impl ProjectedLink {
    fn of(q: &PyramidQuadruple) -> Self {
        let corners = q.corner_labels().map(|(a, b)| adjacent_pair_ok(a, b));
        Self {
            x_min: -cos_pi_over(q.n),
            x_max: cos_pi_over(q.m),
            y_min: -cos_pi_over(q.k),
            y_max: cos_pi_over(q.l),
            corners,
        }
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    /// Corner points in the order AB, BC, CD, DA.
    pub fn corner_points(&self) -> [(f64, f64); 4] {
        [
            (self.x_max, self.y_min),
            (self.x_max, self.y_max),
            (self.x_min, self.y_max),
            (self.x_min, self.y_min),
        ]
    }
}
