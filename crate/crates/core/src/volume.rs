//! Hyperbolic volumes of Coxeter pyramids.
//!
//! The link rectangle `[x_min, x_max] x [y_min, y_max]` splits along the
//! coordinate axes into at most four quadrant rectangles `[0, a] x [0, b]`.
//! Over each of them the pyramid is an orthopyramid, and that orthopyramid
//! splits along the diagonal plane into two orthotetrahedra with an ideal
//! vertex at infinity, whose volumes are sums of Lobachevsky function
//! values.

use alloc::vec::Vec;
use alloc::format;
use core::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::geometry::PyramidQuadruple;

/// Default absolute accuracy of [`lobachevsky`].
pub const LOBACHEVSKY_EPS: f64 = 1e-12;

/// Slack allowed on `a^2 + b^2 <= 1` for corners that are ideal up to
/// rounding.
const DISK_SLACK: f64 = 1e-12;

/// `zeta(2n)` for `n >= 1`.
fn zeta_even(n: u32) -> f64 {
    let pi2 = PI * PI;
    match n {
        1 => pi2 / 6.0,
        2 => pi2 * pi2 / 90.0,
        3 => pi2 * pi2 * pi2 / 945.0,
        _ => {
            let mut sum = 1.0;
            let mut k = 2.0f64;
            loop {
                let term = libm::pow(k, -2.0 * f64::from(n));
                sum += term;
                if term < 1e-20 {
                    break sum;
                }
                k += 1.0;
            }
        }
    }
}

/// Lobachevsky function `-int_0^theta log|2 sin t| dt`, accurate to `eps`.
///
/// The argument is reduced to `[0, pi/2]` by periodicity and oddness, then
/// evaluated from
///
/// ```text
/// L(x) = x (1 - log 2x) + x * sum_{n>=1} zeta(2n) / (n (2n+1)) * (x/pi)^(2n)
/// ```
///
/// whose terms shrink at least by a factor 4 each.
pub fn lobachevsky(theta: f64, eps: f64) -> f64 {
    assert!(theta.is_finite(), "Lobachevsky function needs a finite argument");
    let mut r = theta - PI * libm::round(theta / PI);
    let sign = if r < 0.0 {
        r = -r;
        -1.0
    } else {
        1.0
    };
    if r == 0.0 {
        return 0.0;
    }
    let x2 = (r / PI) * (r / PI);
    let mut sum = 0.0;
    let mut power = 1.0;
    let mut n = 1u32;
    loop {
        power *= x2;
        let nf = f64::from(n);
        let term = zeta_even(n) / (nf * (2.0 * nf + 1.0)) * power * r;
        sum += term;
        // remaining tail is at most term * x2 / (1 - x2) <= term / 3
        if term < eps / 4.0 || n > 200 {
            break;
        }
        n += 1;
    }
    sign * (r * (1.0 - libm::log(2.0 * r)) + sum)
}

/// Volume of the orthotetrahedron `[theta, pi/2 - theta, zeta]` with an
/// ideal vertex:
/// `(L(theta + zeta) + L(theta - zeta) + 2 L(pi/2 - theta)) / 4`.
pub fn ortho_tet_volume(theta: f64, zeta: f64) -> Result<f64> {
    tet_volume(theta, zeta, LOBACHEVSKY_EPS)
}

fn tet_volume(theta: f64, zeta: f64, eps: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(Error::OutOfDomain("theta must lie in (0, pi/2)"));
    }
    if !(0.0..FRAC_PI_2).contains(&zeta) {
        return Err(Error::OutOfDomain("zeta must lie in [0, pi/2)"));
    }
    let l = |x| lobachevsky(x, eps);
    Ok(0.25 * (l(theta + zeta) + l(theta - zeta) + 2.0 * l(FRAC_PI_2 - theta)))
}

/// Volume of the cone from infinity over the part of the unit hemisphere
/// above the rectangle `[0, a] x [0, b]`.
pub fn ortho_pyramid_volume(a: f64, b: f64) -> Result<f64> {
    quadrant_volume(a, b, LOBACHEVSKY_EPS)
}

fn quadrant_volume(a: f64, b: f64, eps: f64) -> Result<f64> {
    if !(a >= 0.0 && b >= 0.0) {
        return Err(Error::OutOfDomain("rectangle sides must be non-negative"));
    }
    if a * a + b * b > 1.0 + DISK_SLACK {
        return Err(Error::OutsideDisk(a, b));
    }
    if a == 0.0 || b == 0.0 {
        return Ok(0.0);
    }
    let alpha = libm::atan2(b, a);
    let first = tet_volume(FRAC_PI_2 - alpha, libm::acos(b.min(1.0)), eps)?;
    let second = tet_volume(alpha, libm::acos(a.min(1.0)), eps)?;
    Ok(first + second)
}

/// Rectangle corner a quadrant piece is anchored at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corner {
    AB,
    BC,
    CD,
    DA,
}

impl Corner {
    pub fn tag(self) -> &'static str {
        match self {
            Corner::AB => "AB",
            Corner::BC => "BC",
            Corner::CD => "CD",
            Corner::DA => "DA",
        }
    }
}

/// One signed orthopyramid of the decomposition.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VolumePiece {
    pub corner: Corner,
    pub sign: i8,
    pub a: f64,
    pub b: f64,
    pub volume: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VolumeReport {
    pub quadruple: PyramidQuadruple,
    pub pieces: [VolumePiece; 4],
    pub total: f64,
    pub error_bound: f64,
}

/// Volume by inclusion-exclusion over the four quadrant orthopyramids
/// spanned by the origin and the rectangle corners.
pub fn pyramid_volume(q: &PyramidQuadruple) -> VolumeReport {
    pyramid_volume_with_eps(q, LOBACHEVSKY_EPS).expect("default tolerance is valid")
}

/// [`pyramid_volume`] with an explicit Lobachevsky tolerance.
pub fn pyramid_volume_with_eps(q: &PyramidQuadruple, eps: f64) -> Result<VolumeReport> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidArgument(format!("Lobachevsky tolerance must lie in (0, 1), got {eps}")));
    }
    let r = q.projected_link();
    let signum = |v: f64| if v < 0.0 { -1i8 } else { 1i8 };
    let corners = [
        (Corner::BC, r.x_max, r.y_max, 1i8),
        (Corner::CD, r.x_min, r.y_max, -1),
        (Corner::AB, r.x_max, r.y_min, -1),
        (Corner::DA, r.x_min, r.y_min, 1),
    ];
    let pieces = corners.map(|(corner, x, y, weight)| {
        let (a, b) = (x.abs(), y.abs());
        let volume = quadrant_volume(a, b, eps).expect("link corners lie in the disk");
        debug_assert!(volume >= -1e-15, "negative orthopyramid volume {volume}");
        VolumePiece {
            corner,
            sign: weight * signum(x) * signum(y),
            a,
            b,
            volume,
        }
    });
    let total = pieces.iter().map(|p| f64::from(p.sign) * p.volume).sum();
    Ok(VolumeReport {
        quadruple: *q,
        pieces,
        total,
        // each piece uses eight Lobachevsky values with weights summing to 2
        error_bound: 8.0 * eps + 1e-14,
    })
}

// Gauss-Kronrod 7/15 abscissae and weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One Gauss-Kronrod 15-point panel: (Kronrod estimate, |Kronrod - Gauss|).
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = half * XGK[i];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Globally adaptive Gauss-Kronrod quadrature: keeps bisecting the panel
/// with the largest error estimate until the summed estimate drops below
/// `eps`.
pub fn adaptive_quadrature(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    eps: f64,
    max_panels: usize,
) -> Result<f64> {
    let (v, e) = gk15(&f, a, b);
    let mut panels: Vec<(f64, f64, f64, f64)> = alloc::vec![(a, b, v, e)];
    loop {
        let total_err: f64 = panels.iter().map(|p| p.3).sum();
        if total_err <= eps {
            return Ok(panels.iter().map(|p| p.2).sum());
        }
        if panels.len() >= max_panels {
            return Err(Error::QuadratureDiverged(max_panels));
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let (lo, hi, _, _) = panels.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if !(lo < mid && mid < hi) {
            // the panel cannot be split any further in floating point
            return Err(Error::QuadratureDiverged(panels.len() + 1));
        }
        let (v1, e1) = gk15(&f, lo, mid);
        let (v2, e2) = gk15(&f, mid, hi);
        panels.push((lo, mid, v1, e1));
        panels.push((mid, hi, v2, e2));
    }
}

const ORACLE_MAX_PANELS: usize = 20_000;

/// Independent volume check: integrates the hyperbolic volume element
/// above the unit hemisphere, `1 / (2 (1 - x^2 - y^2))`, over the link
/// rectangle.
///
/// The inner `y` integral has the closed form
/// `(artanh(y_max / c) - artanh(y_min / c)) / (2c)` with `c = sqrt(1 - x^2)`;
/// the outer integral is adaptive and resolves the logarithmic endpoint
/// singularities that ideal corners produce.
pub fn volume_quadrature_oracle(q: &PyramidQuadruple, eps: f64) -> Result<f64> {
    if !(eps >= 1e-8) {
        return Err(Error::InvalidArgument("quadrature tolerance must be at least 1e-8".into()));
    }
    let r = q.projected_link();
    let clamp = |u: f64| u.clamp(-1.0 + f64::EPSILON, 1.0 - f64::EPSILON);
    let inner = |x: f64| {
        let c = libm::sqrt(1.0 - x * x);
        (libm::atanh(clamp(r.y_max / c)) - libm::atanh(clamp(r.y_min / c))) / (2.0 * c)
    };
    // split at the origin so each panel has at most one singular end
    let mut total = 0.0;
    for (lo, hi) in [(r.x_min, 0.0), (0.0, r.x_max)] {
        if hi > lo {
            total += adaptive_quadrature(inner, lo, hi, eps / 4.0, ORACLE_MAX_PANELS)?;
        }
    }
    Ok(total)
}
