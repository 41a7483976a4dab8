//! Exact arithmetic on integer polynomials and their reduced quotients.
//!
//! Coefficients are stored densely in ascending order: `coeffs[i]` is the
//! coefficient of `t^i`. Every value is kept trimmed, so the zero polynomial
//! is the empty vector and structural equality is mathematical equality.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Ascending coefficients, without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as machine integers, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Sign of `p(num / 2^shift)`, computed exactly.
    pub fn sign_at_dyadic(&self, num: &BigInt, shift: u32) -> core::cmp::Ordering {
        // 2^(shift*deg) * p(num/2^shift) = sum c_i num^i 2^(shift*(deg-i))
        let Some(deg) = self.degree() else {
            return core::cmp::Ordering::Equal;
        };
        let mut acc = BigInt::zero();
        let mut pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            let scale = u64::from(shift) * (deg - i) as u64;
            acc += (c * &pow) << scale;
            pow *= num;
        }
        acc.sign_ordering()
    }

    /// Integer gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
            .expect("content divides every coefficient")
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::from_coeffs(out))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `t^n * p(1/t)`; requires `n >= deg p`.
    pub fn reversed(&self, n: usize) -> Self {
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        assert!(n >= deg, "reversal length {n} below degree {deg}");
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Quotient of an exact division over the integers, or `None` if the
    /// division leaves a remainder or needs fractions.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dlead = divisor.leading()?;
        let ddeg = divisor.coeffs.len() - 1;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + ddeg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dlead = divisor.leading().expect("nonzero divisor");
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        while rem.len() > ddeg && !rem.is_empty() {
            let top = rem.pop().unwrap();
            let k = rem.len() - ddeg;
            for x in rem.iter_mut() {
                *x *= dlead;
            }
            for (j, d) in divisor.coeffs[..ddeg].iter().enumerate() {
                rem[k + j] -= &top * d;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Self::from_coeffs(rem)
    }

    /// Greatest common divisor over the rationals, returned primitive with
    /// positive leading coefficient (primitive remainder sequence).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.coeffs.len() < b.coeffs.len() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Human-readable ascending form, e.g. `-1 + 2*t + t^2`.
    pub fn to_text(&self) -> String {
        format!("{self}")
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> core::cmp::Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> core::cmp::Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: Self) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

/// `[n] = 1 + t + ... + t^(n-1)`.
pub fn bracket(n: u32) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("bracket [n] needs n >= 1".into()));
    }
    Ok(IntPolynomial::from_coeffs(vec![BigInt::one(); n as usize]))
}

/// Quotient of two integer polynomials in lowest terms.
///
/// Canonical form: `gcd(num, den)` is constant, the denominator has a
/// positive leading coefficient, and the joint content of numerator and
/// denominator is 1. Two equal rational functions therefore compare equal
/// structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self {
                num,
                den: IntPolynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c).expect("content divides");
            den = den.div_scalar_exact(&c).expect("content divides");
        }
        Ok(Self { num, den })
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one()).expect("unit denominator")
    }

    /// `1 / p`.
    pub fn inverse_of(p: IntPolynomial) -> Result<Self> {
        Self::new(IntPolynomial::one(), p)
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let g = self.den.gcd(&other.den);
        let a = other.den.div_exact(&g).expect("gcd divides");
        let b = self.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &a) + &(&other.num * &b);
        let den = &self.den * &a;
        Self::new(num, den).expect("nonzero denominators multiply to nonzero")
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn parity(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Exact signed sum of rational functions, reduced and normalized.
pub fn rf_combine(terms: &[(Sign, RationalFunction)]) -> Result<RationalFunction> {
    if terms.is_empty() {
        return Err(Error::InvalidArgument("rf_combine needs at least one term".into()));
    }
    let zero = RationalFunction::from_polynomial(IntPolynomial::zero());
    Ok(terms.iter().fold(zero, |acc, (sign, rf)| match sign {
        Sign::Plus => acc.add(rf),
        Sign::Minus => acc.add(&rf.neg()),
    }))
}

/// Turns the value of `1/f(t^{-1})` into `f(t)`.
///
/// Substitutes `t -> 1/t` into `den/num` and clears the negative powers of
/// `t`. The result must have equal nonzero constant terms in numerator and
/// denominator, as every growth series starts with `a_0 = 1`.
pub fn reciprocal_transform(rf: &RationalFunction) -> Result<RationalFunction> {
    if rf.num.is_zero() {
        return Err(Error::InconsistentSteinberg("zero numerator"));
    }
    let n = rf.num.degree().unwrap().max(rf.den.degree().unwrap());
    let out = RationalFunction::new(rf.den.reversed(n), rf.num.reversed(n))?;
    let (p0, q0) = (out.num.constant_term(), out.den.constant_term());
    if p0.is_zero() || p0 != q0 {
        return Err(Error::InconsistentSteinberg(
            "constant terms of the growth function disagree",
        ));
    }
    Ok(out)
}

/// First `count` Taylor coefficients of `rf` at `t = 0`.
pub fn series_coefficients(rf: &RationalFunction, count: usize) -> Result<Vec<BigInt>> {
    let d0 = rf.den.constant_term();
    if d0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    // num = den * sum a_k t^k  =>  a_k = (num_k - sum_{j>=1} den_j a_{k-j}) / den_0
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = rf.num.coeff(k);
        for j in 1..=k.min(rf.den.coeffs.len().saturating_sub(1)) {
            acc -= &rf.den.coeffs[j] * &out[k - j];
        }
        let (q, r) = acc.div_rem(&d0);
        if !r.is_zero() {
            return Err(Error::NonIntegralSeries { index: k });
        }
        out.push(q);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn bracket_values() {
        assert_eq!(bracket(1).unwrap(), p(&[1]));
        assert_eq!(bracket(2).unwrap(), p(&[1, 1]));
        assert_eq!(bracket(5).unwrap().eval(&BigInt::one()), BigInt::from(5));
        assert_eq!(bracket(5).unwrap().degree(), Some(4));
        assert!(matches!(bracket(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn zero_polynomial_is_empty() {
        assert!(p(&[0, 0, 0]).coeffs().is_empty());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
    }

    #[test]
    fn combine_telescopes() {
        let s = rf_combine(&[(Sign::Plus, rf(&[1], &[1, 1])), (Sign::Plus, rf(&[0, 1], &[1, 1]))])
            .unwrap();
        assert_eq!(s, rf(&[1], &[1]));
        let s = rf_combine(&[(Sign::Plus, rf(&[1], &[1])), (Sign::Minus, rf(&[1], &[1, 1]))])
            .unwrap();
        assert_eq!(s, rf(&[0, 1], &[1, 1]));
    }

    #[test]
    fn combine_cross_multiplies() {
        // 1/(1+t) + 1/(1+t+t^2) = (2+2t+t^2) / ((1+t)(1+t+t^2)), by hand.
        let s = rf_combine(&[
            (Sign::Plus, rf(&[1], &[1, 1])),
            (Sign::Plus, rf(&[1], &[1, 1, 1])),
        ])
        .unwrap();
        assert_eq!(s.num(), &p(&[2, 2, 1]));
        assert_eq!(s.den(), &p(&[1, 2, 2, 1]));
    }

    #[test]
    fn combine_rejects_empty() {
        assert!(rf_combine(&[]).is_err());
    }

    #[test]
    fn normalization_fixes_sign_and_content() {
        let r = rf(&[2, 4], &[-6, -2]);
        // (2+4t)/(-6-2t) = -(1+2t)/(3+t)
        assert_eq!(r.num(), &p(&[-1, -2]));
        assert_eq!(r.den(), &p(&[3, 1]));
        let r = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(r.num(), &p(&[1, 1]));
        assert_eq!(r.den(), &p(&[1]));
        assert!(RationalFunction::new(p(&[1]), p(&[])).is_err());
    }

    #[test]
    fn reciprocal_rank_one() {
        // 1/f(1/t) for f = 1 + t is t/(1+t)
        let f = reciprocal_transform(&rf(&[0, 1], &[1, 1])).unwrap();
        assert_eq!(f, rf(&[1, 1], &[1]));
        let one = reciprocal_transform(&rf(&[3, 1], &[3, 1])).unwrap();
        assert_eq!(one, rf(&[1], &[1]));
        assert!(reciprocal_transform(&rf(&[], &[1])).is_err());
    }

    #[test]
    fn series_examples() {
        let s = series_coefficients(&rf(&[1], &[1, -1]), 4).unwrap();
        assert_eq!(s, [1, 1, 1, 1].map(BigInt::from));
        let s = series_coefficients(&rf(&[1, 1], &[1]), 3).unwrap();
        assert_eq!(s, [1, 1, 0].map(BigInt::from));
        assert_eq!(
            series_coefficients(&rf(&[1], &[0, 1]), 2),
            Err(Error::PoleAtOrigin)
        );
        assert!(matches!(
            series_coefficients(&rf(&[1], &[2, 1]), 2),
            Err(Error::NonIntegralSeries { index: 0 })
        ));
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        let a = &bracket(6).unwrap() * &bracket(4).unwrap();
        let b = &bracket(10).unwrap() * &bracket(2).unwrap();
        // [6] = [2](1-t+t^2)(1+t+t^2), [4] = [2](1+t^2), [10] = [2](1-t+...)(1+t+..+t^4)
        // common factor is [2]^2
        assert_eq!(a.gcd(&b), &bracket(2).unwrap() * &bracket(2).unwrap());
        assert_eq!(p(&[3, 6]).gcd(&p(&[])), p(&[1, 2]));
    }

    #[test]
    fn div_exact_detects_remainder() {
        let a = &p(&[-1, 1]) * &p(&[-1, 2, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[-1, 2, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[-1, 1])), None);
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[-1, 2, 1]).to_text(), "-1 + 2*t + t^2");
        assert_eq!(p(&[0, -1, 0, 3]).to_text(), "-t + 3*t^3");
        assert_eq!(p(&[]).to_text(), "0");
    }

    #[test]
    fn dyadic_sign() {
        // t^2 + 2t - 1 has root sqrt(2)-1 = 0.41421...
        let g = p(&[-1, 2, 1]);
        assert_eq!(g.sign_at_dyadic(&BigInt::from(3), 3), core::cmp::Ordering::Less); // 0.375
        assert_eq!(g.sign_at_dyadic(&BigInt::from(7), 4), core::cmp::Ordering::Greater); // 0.4375
        assert_eq!(p(&[-1, 2]).sign_at_dyadic(&BigInt::from(1), 1), core::cmp::Ordering::Equal);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_poly() -> impl Strategy<Value = IntPolynomial> {
            proptest::collection::vec(-4i64..=4, 0..6).prop_map(|c| IntPolynomial::from_i64s(&c))
        }

        fn nonzero_const_poly() -> impl Strategy<Value = IntPolynomial> {
            (proptest::collection::vec(-4i64..=4, 0..5), 1i64..=3, any::<bool>()).prop_map(
                |(mut c, c0, neg)| {
                    c.insert(0, if neg { -c0 } else { c0 });
                    IntPolynomial::from_i64s(&c)
                },
            )
        }

        proptest! {
            #[test]
            fn bracket_product_at_one(n in 1u32..40, m in 1u32..40) {
                let prod = &bracket(n).unwrap() * &bracket(m).unwrap();
                prop_assert_eq!(prod.eval(&BigInt::one()), BigInt::from(n * m));
            }

            #[test]
            fn combine_is_order_independent(
                terms in proptest::collection::vec((any::<bool>(), small_poly(), nonzero_const_poly()), 1..5),
                seed in any::<u64>(),
            ) {
                let terms: Vec<_> = terms
                    .into_iter()
                    .map(|(s, n, d)| {
                        let sign = if s { Sign::Plus } else { Sign::Minus };
                        (sign, RationalFunction::new(n, d).unwrap())
                    })
                    .collect();
                let mut shuffled = terms.clone();
                let len = shuffled.len();
                shuffled.rotate_left((seed as usize) % len);
                shuffled.reverse();
                prop_assert_eq!(rf_combine(&terms).unwrap(), rf_combine(&shuffled).unwrap());
            }

            #[test]
            fn reciprocal_is_involutive(
                c in 1i64..=3,
                lead in 1i64..=3,
                mids in (1usize..5).prop_flat_map(|d| (
                    proptest::collection::vec(-3i64..=3, d - 1),
                    proptest::collection::vec(-3i64..=3, d - 1),
                )),
            ) {
                let build = |mid: &[i64]| {
                    let mut v = vec![c];
                    v.extend_from_slice(mid);
                    v.push(lead);
                    IntPolynomial::from_i64s(&v)
                };
                let r = RationalFunction::new(build(&mids.0), build(&mids.1)).unwrap();
                let once = reciprocal_transform(&r);
                prop_assume!(once.is_ok());
                let twice = reciprocal_transform(&once.unwrap()).unwrap();
                prop_assert_eq!(twice, r);
            }

            #[test]
            fn gcd_divides_both(a in small_poly(), b in small_poly(), c in nonzero_const_poly()) {
                let x = &a * &c;
                let y = &b * &c;
                let g = x.gcd(&y);
                if !g.is_zero() {
                    prop_assert!(x.div_exact(&g).is_some());
                    prop_assert!(y.div_exact(&g).is_some());
                    prop_assert!(g.div_exact(&c.primitive_part()).is_some() || x.is_zero() || y.is_zero());
                }
            }
        }
    }
}
