//! Growth functions of Coxeter groups and their growth rates.
//!
//! The growth function comes from Steinberg's formula
//!
//! ```text
//! 1 / f(1/t) = sum over finite parabolic T of (-1)^|T| / f_T(t)
//! ```
//!
//! evaluated exactly. Its denominator factors as `(t - 1) g(t)`. When some
//! `(t + 1)^j g(t)` has the shape `h(t) - 1` with `h` having non-negative
//! coefficients whose support has gcd 1, the smallest positive root `r1` of
//! `g` is simple, is the only root on `|t| = r1`, and `1/r1` is a Perron
//! number. The same monotone shape makes bisection on `(0, 1)` exact.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coxeter::{
    finite_parabolic_family, pyramid_diagram, solomon_growth, CoxeterDiagram,
};
use crate::error::{Error, Result};
use crate::exactpoly::{
    reciprocal_transform, rf_combine, series_coefficients, IntPolynomial, RationalFunction, Sign,
};
use crate::geometry::PyramidQuadruple;

/// Growth function `f_S = P/Q` of the Coxeter system presented by `d`.
pub fn steinberg_growth(d: &CoxeterDiagram) -> Result<RationalFunction> {
    let family = finite_parabolic_family(d);
    if family.len() == 1usize << d.rank() {
        return Err(Error::FiniteGroup);
    }
    let terms: Vec<(Sign, RationalFunction)> = family
        .subsets
        .iter()
        .map(|(mask, ft)| {
            let sign = Sign::parity(mask.count_ones() as usize);
            let rf = RationalFunction::inverse_of(solomon_growth(ft))
                .expect("Solomon polynomials are nonzero");
            (sign, rf)
        })
        .collect();
    let inverse_at_reciprocal = rf_combine(&terms)?;
    reciprocal_transform(&inverse_at_reciprocal)
}

/// `Q / (t - 1)`, signed so that the constant term is negative.
pub fn denominator_split(q: &IntPolynomial) -> Result<IntPolynomial> {
    let t_minus_one = IntPolynomial::from_i64s(&[-1, 1]);
    let g = q.div_exact(&t_minus_one).ok_or(Error::NoFactorTMinusOne)?;
    if g.is_zero() {
        return Err(Error::NoFactorTMinusOne);
    }
    Ok(if g.constant_term().is_positive() { -g } else { g })
}

/// Witness that `(t + 1)^j g(t) = h(t) - 1` with `h` having non-negative
/// coefficients, `h(0) = 0`, and gcd of the support of `h` equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerronCertificate {
    pub multiplier_power: u32,
    /// `h(t) = (t + 1)^j g(t) + 1`; its coefficients are the `b_k`.
    pub h: IntPolynomial,
    pub support_gcd: u64,
}

impl PerronCertificate {
    /// `(t + 1)^j g(t)`, the polynomial the certificate talks about.
    pub fn expanded(&self) -> IntPolynomial {
        &self.h - &IntPolynomial::one()
    }

    /// Recomputes the certificate conditions against `g`.
    pub fn verify(&self, g: &IntPolynomial) -> bool {
        let lhs = &IntPolynomial::from_i64s(&[1, 1]).pow(self.multiplier_power) * g;
        lhs == self.expanded()
            && h_shape(&self.h) == Some(self.support_gcd)
            && self.support_gcd == 1
    }
}

/// Returns the gcd of the support if `h` has zero constant term and
/// non-negative coefficients.
fn h_shape(h: &IntPolynomial) -> Option<u64> {
    if !h.constant_term().is_zero() || h.is_zero() {
        return None;
    }
    let mut gcd = 0u64;
    for (k, b) in h.coeffs().iter().enumerate() {
        if b.is_negative() {
            return None;
        }
        if !b.is_zero() {
            gcd = gcd.gcd(&(k as u64));
        }
    }
    Some(gcd)
}

/// Smallest `j <= j_max` whose `(t + 1)^j g(t)` has the certified shape.
///
/// Absence is reported as `Ok(None)`; a constant term other than `-1` is
/// an error.
pub fn perron_certificate(g: &IntPolynomial, j_max: u32) -> Result<Option<PerronCertificate>> {
    if g.constant_term() != -BigInt::one() {
        return Err(Error::BadConstantTerm(alloc::format!("{}", g.constant_term())));
    }
    let t_plus_one = IntPolynomial::from_i64s(&[1, 1]);
    let mut expanded = g.clone();
    for j in 0..=j_max {
        let h = &expanded + &IntPolynomial::one();
        if let Some(support_gcd) = h_shape(&h) {
            if support_gcd == 1 {
                return Ok(Some(PerronCertificate {
                    multiplier_power: j,
                    h,
                    support_gcd,
                }));
            }
        }
        expanded = &expanded * &t_plus_one;
    }
    Ok(None)
}

/// A dyadic rational `num / 2^shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub num: BigInt,
    pub shift: u32,
}

impl Dyadic {
    pub fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::NAN) / libm::exp2(f64::from(self.shift))
    }

    /// Exact decimal expansion; dyadic rationals always terminate.
    pub fn to_decimal_string(&self) -> String {
        // num / 2^s = num * 5^s / 10^s
        let scaled = &self.num * BigInt::from(5u32).pow(self.shift);
        let neg = scaled.is_negative();
        let digits = scaled.abs().to_str_radix(10);
        let s = self.shift as usize;
        let (int_part, frac_part) = if digits.len() > s {
            let (a, b) = digits.split_at(digits.len() - s);
            (String::from(a), String::from(b))
        } else {
            let mut frac = String::new();
            for _ in 0..s - digits.len() {
                frac.push('0');
            }
            frac.push_str(&digits);
            (String::from("0"), frac)
        };
        let frac_part = frac_part.trim_end_matches('0');
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&int_part);
        if !frac_part.is_empty() {
            out.push('.');
            out.push_str(frac_part);
        }
        out
    }
}

/// Bisection tolerance on `r1`, as a power of two: the bracket width ends
/// at most `2^-bits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootTolerance {
    pub bits: u32,
}

impl Default for RootTolerance {
    fn default() -> Self {
        Self { bits: 40 }
    }
}

impl RootTolerance {
    /// Smallest power of two not exceeding `eps`.
    pub fn from_eps(eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps.is_finite()) {
            return Err(Error::InvalidArgument("root tolerance must be positive".into()));
        }
        let bits = libm::ceil(-libm::log2(eps)).max(1.0);
        if bits > 4096.0 {
            return Err(Error::InvalidArgument("root tolerance below 2^-4096".into()));
        }
        Ok(Self { bits: bits as u32 })
    }

    pub fn eps(&self) -> f64 {
        libm::exp2(-f64::from(self.bits))
    }
}

/// Certified bracket for `r1` and the growth rate `tau = 1/r1`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthRate {
    pub r1_lo: Dyadic,
    pub r1_hi: Dyadic,
    pub tau: f64,
    /// Upper bound on `|tau - 1/r1|`.
    pub tau_error: f64,
}

/// Brackets the unique root of `(t + 1)^j g(t)` in `(0, 1)` by exact
/// bisection on dyadic rationals.
pub fn growth_rate(
    g: &IntPolynomial,
    cert: &PerronCertificate,
    tol: RootTolerance,
) -> Result<GrowthRate> {
    if !cert.verify(g) {
        return Err(Error::CertificateMismatch);
    }
    let f = cert.expanded();
    // f(0) = -1 < 0 by construction; f(1) = h(1) - 1
    if f.eval(&BigInt::one()) <= BigInt::zero() {
        return Err(Error::CertificateMismatch);
    }
    let mut lo = BigInt::zero();
    let mut hi = BigInt::one();
    let mut shift = 0u32;
    while shift < tol.bits {
        shift += 1;
        lo <<= 1u32;
        hi <<= 1u32;
        let mid = &lo + BigInt::one();
        match f.sign_at_dyadic(&mid, shift) {
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
            Ordering::Equal => {
                lo = mid.clone();
                hi = mid;
                break;
            }
        }
    }
    let r1_lo = Dyadic { num: lo, shift };
    let r1_hi = Dyadic { num: hi, shift };
    let (lo_f, hi_f) = (r1_lo.to_f64(), r1_hi.to_f64());
    let tau = 2.0 / (lo_f + hi_f);
    let tau_error = (1.0 / lo_f - 1.0 / hi_f) + 8.0 * f64::EPSILON * tau;
    Ok(GrowthRate {
        r1_lo,
        r1_hi,
        tau,
        tau_error,
    })
}

const ABERTH_MAX_ITER: usize = 500;

/// All complex roots of `p` by Aberth-Ehrlich simultaneous iteration.
pub fn complex_roots(p: &IntPolynomial) -> Result<Vec<Complex64>> {
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let deg = match p.degree() {
        None | Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    let deriv: Vec<f64> = (1..=deg).map(|i| coeffs[i] * i as f64).collect();
    let eval = |c: &[f64], z: Complex64| {
        c.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    };
    // Cauchy bound on root moduli
    let lead = coeffs[deg].abs();
    let radius = 1.0 + coeffs[..deg].iter().fold(0.0f64, |m, c| m.max(c.abs())) / lead;
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * core::f64::consts::PI * (k as f64 + 0.25) / deg as f64 + 0.4;
            Complex64::from_polar(0.5 * radius, angle)
        })
        .collect();
    for _ in 0..ABERTH_MAX_ITER {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let zi = z[i];
            let ratio = eval(&coeffs, zi) / eval(&deriv, zi);
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (zi - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] = zi - step;
                max_step = max_step.max(step.norm() / zi.norm().max(1e-300));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    let abs_coeffs: Vec<f64> = coeffs.iter().map(|c| c.abs()).collect();
    for &zi in &z {
        let scale = eval(&abs_coeffs, Complex64::new(zi.norm(), 0.0)).re;
        if !(eval(&coeffs, zi).norm() <= 1e-10 * scale) {
            return Err(Error::RootFinderDiverged(ABERTH_MAX_ITER));
        }
    }
    Ok(z)
}

/// Numerical cross-check of the certified claim: exactly one root of `g`
/// lies within `1e-8` of `r1`, and every other root is farther than
/// `r1 + 1e-8` from the origin.
pub fn numeric_root_check(g: &IntPolynomial, r1: f64) -> Result<bool> {
    const TOL: f64 = 1e-8;
    let roots = complex_roots(g)?;
    let near = roots.iter().filter(|z| (**z - r1).norm() <= TOL).count();
    let others_outside = roots
        .iter()
        .filter(|z| (**z - r1).norm() > TOL)
        .all(|z| z.norm() > r1 + TOL);
    Ok(near == 1 && others_outside)
}

#[derive(Clone, Copy, Debug)]
pub struct GrowthOptions {
    pub tolerance: RootTolerance,
    pub j_max: u32,
    pub numeric_check: bool,
}

impl Default for GrowthOptions {
    fn default() -> Self {
        Self {
            tolerance: RootTolerance::default(),
            j_max: 5,
            numeric_check: false,
        }
    }
}

/// Everything known about the growth of one pyramid group.
#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub quadruple: PyramidQuadruple,
    pub growth_function: RationalFunction,
    /// `Q = (t - 1) g` with `g(0) = -1`.
    pub g: IntPolynomial,
    pub rate: GrowthRate,
    pub perron: PerronCertificate,
    /// Result of [`numeric_root_check`], when requested.
    pub numeric_check: Option<bool>,
}

impl GrowthReport {
    pub fn numerator(&self) -> &IntPolynomial {
        self.growth_function.num()
    }

    pub fn denominator(&self) -> &IntPolynomial {
        self.growth_function.den()
    }

    pub fn tau(&self) -> f64 {
        self.rate.tau
    }

    pub fn series(&self, count: usize) -> Result<Vec<BigInt>> {
        series_coefficients(&self.growth_function, count)
    }
}

/// Runs the whole growth pipeline for one pyramid.
pub fn growth_report(q: &PyramidQuadruple, opts: &GrowthOptions) -> Result<GrowthReport> {
    let f = steinberg_growth(&pyramid_diagram(q))?;
    if !f.num().constant_term().is_one() || !f.den().constant_term().is_one() {
        return Err(Error::InconsistentSteinberg("growth function must satisfy P(0) = Q(0) = 1"));
    }
    let g = denominator_split(f.den())?;
    let perron = perron_certificate(&g, opts.j_max)?.ok_or(Error::NoPerronCertificate(*q))?;
    let rate = growth_rate(&g, &perron, opts.tolerance)?;
    let numeric_check = if opts.numeric_check {
        Some(numeric_root_check(&g, rate.r1_lo.to_f64())?)
    } else {
        None
    };
    Ok(GrowthReport {
        quadruple: *q,
        growth_function: f,
        g,
        rate,
        perron,
        numeric_check,
    })
}
