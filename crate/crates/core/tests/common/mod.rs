//! Published reference data for the 33 pyramids, and helpers shared by the
//! integration tests.

#![allow(dead_code)]

use coxeter_pyramids::exactpoly::IntPolynomial;
use coxeter_pyramids::PyramidQuadruple;

/// `(k, l, m, n)`, the factor `g` of the growth denominator `(t - 1) g(t)`
/// exactly as printed, tabulated growth rate, tabulated volume.
pub const TABLE: [([u32; 4], &str, f64, f64); 33] = [
    ([2, 3, 2, 3], "t^5+2 t^4+2 t^3+t^2-1", 1.73469, 0.152661),
    ([2, 3, 2, 4], "t^7+t^6+2 t^5+t^4+2 t^3+t-1", 1.90648, 0.25096),
    ([2, 3, 2, 5], "t^{13}+t^{12}+2 t^{11}+2 t^{10}+3 t^9+2 t^8+3 t^7+2 t^6+3 t^5+t^4+2 t^3+t-1", 1.9825, 0.332327),
    ([2, 3, 3, 3], "t^4+2 t^3+t^2+t-1", 2.06599, 0.305322),
    ([2, 4, 2, 4], "t^4+2 t^3+t^2+t-1", 2.06599, 0.457983),
    ([2, 3, 2, 6], "t^6+2 t^5+t^4+t^3+t^2+t-1", 2.01561, 0.422892),
    ([2, 3, 3, 4], "t^7+2 t^6+2 t^5+2 t^4+2 t^3+t^2+t-1", 2.1946, 0.403621),
    ([2, 4, 3, 3], "t^7+2 t^6+2 t^5+3 t^4+2 t^3+t^2+t-1", 2.23757, 0.501921),
    ([2, 3, 3, 5], "t^{15}+2 t^{14}+3 t^{13}+5 t^{12}+5 t^{11}+7 t^{10}+6 t^9+7 t^8+6 t^7+6 t^6+5 t^5+3 t^4+3 t^3+t-1", 2.24692, 0.484988),
    ([2, 3, 3, 6], "t^8+2 t^7+3 t^6+3 t^5+3 t^4+2 t^3+t^2+t-1", 2.26809, 0.575553),
    ([2, 5, 3, 3], "t^9+t^8+2 t^6+t^4+t^3+2 t-1", 2.30482, 0.664654),
    ([2, 3, 4, 4], "t^5+t^4+t^3+2 t-1", 2.30522, 0.501921),
    ([2, 6, 3, 3], "2 t^5+t^4+t^3+2 t-1", 2.33081, 0.845785),
    ([2, 3, 4, 5], "t^{13}+t^{12}+2 t^{11}+2 t^{10}+3 t^9+2 t^8+3 t^7+2 t^6+3 t^5+t^4+3 t^3-t^2+2 t-1", 2.34913, 0.583287),
    ([2, 4, 3, 4], "t^8+2 t^7+3 t^6+3 t^5+3 t^4+3 t^3+t^2+t-1", 2.35204, 0.708943),
    ([2, 3, 4, 6], "t^8+2 t^7+3 t^6+4 t^5+3 t^4+3 t^3+t^2+t-1", 2.36644, 0.673853),
    ([2, 3, 5, 5], "t^{11}+t^{10}+t^9+2 t^8+t^7+2 t^6+t^5+2 t^4+t^3+2 t-1", 2.38946, 0.664654),
    ([2, 3, 5, 6], "t^{14}+2 t^{13}+3 t^{12}+4 t^{11}+5 t^{10}+5 t^9+5 t^8+5 t^7+5 t^6+5 t^5+3 t^4+3 t^3+t^2+t-1", 2.40522, 0.75522),
    ([3, 3, 3, 3], "t^2+2 t-1", 2.41421, 0.610644),
    ([2, 3, 6, 6], "2 t^6+3 t^5+2 t^4+2 t^3+2 t^2+t-1", 2.42032, 0.845785),
    ([2, 4, 4, 4], "2 t^4+3 t^3+2 t^2+t-1", 2.45111, 0.915966),
    ([3, 3, 3, 4], "t^5+2 t^4+t^2+2 t-1", 2.53983, 0.807242),
    ([3, 3, 3, 5], "t^9+t^8-t^7+3 t^6-t^5+t^4+2 t^3-2 t^2+3 t-1", 2.58553, 0.969976),
    ([3, 3, 3, 6], "2 t^7+t^6+4 t^5+t^4+3 t^3+2 t-1", 2.60198, 1.15111),
    ([3, 3, 4, 4], "t^5+2 t^4+t^3+t^2+2 t-1", 2.64822, 1.00384),
    ([3, 4, 3, 4], "t^6+t^5+2 t^4+t^3+t^2+2 t-1", 2.65364, 1.11256),
    ([3, 3, 4, 5], "t^9+t^8+2 t^6+3 t^3-2 t^2+3 t-1", 2.68684, 1.16657),
    ([3, 3, 4, 6], "2 t^8+3 t^7+5 t^6+6 t^5+5 t^4+4 t^3+2 t^2+t-1", 2.70039, 1.34771),
    ([3, 3, 5, 5], "t^7+t^6-t^5+2 t^4-t^2+3 t-1", 2.72275, 1.32931),
    ([3, 3, 5, 6], "2 t^{10}+t^9+2 t^8+t^7+2 t^6+2 t^5+t^4+2 t^3+t^2+2 t-1", 2.73526, 1.51044),
    ([3, 3, 6, 6], "4 t^5+t^4+2 t^3+t^2+2 t-1", 2.74738, 1.69157),
    ([3, 4, 4, 4], "2 t^6+t^5+2 t^4+2 t^3+t^2+2 t-1", 2.75303, 1.41789),
    ([4, 4, 4, 4], "4 t^3+t^2+2 t-1", 2.84547, 1.83193),
];

/// The four `(t + 1)^j g(t)` expansions printed for the pyramids that need
/// a multiplier.
pub const EXCEPTIONAL: [([u32; 4], u32, &str); 4] = [
    ([2, 3, 4, 5], 1, "t^{14}+2 t^{13}+3 t^{12}+4 t^{11}+5 t^{10}+5 t^9+5 t^8+5 t^7+5 t^6+4 t^5+4 t^4+2 t^3+t^2+t-1"),
    ([3, 3, 3, 5], 1, "t^{10}+ 2 t^9 + 2 t^7+ 2 t^6+ 3 t^4+ t^2 + 2 t -1"),
    ([3, 3, 4, 5], 1, "t^{10}+2 t^9+t^8+2 t^7+2 t^6+3 t^4+t^3+t^2+2 t-1"),
    ([3, 3, 5, 5], 2, "t^9+3 t^8+2 t^7+t^6+3 t^5+t^4+t^3+4 t^2+t-1"),
];

pub fn quad(a: [u32; 4]) -> PyramidQuadruple {
    PyramidQuadruple::new(a[0], a[1], a[2], a[3]).unwrap()
}

/// Parses the printed form `2 t^{10}+t^9-2 t^2+3 t-1` into a polynomial.
pub fn parse_printed(src: &str) -> IntPolynomial {
    let s: String = src.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
    let mut coeffs: Vec<i64> = Vec::new();
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1, rest.to_string()),
            None => (1, term.trim_start_matches('+').to_string()),
        };
        let (coef, power) = match body.find('t') {
            None => (body.parse::<i64>().unwrap(), 0usize),
            Some(pos) => {
                let c = if pos == 0 { 1 } else { body[..pos].parse::<i64>().unwrap() };
                let rest = &body[pos + 1..];
                let p = if rest.is_empty() { 1 } else { rest.trim_start_matches('^').parse().unwrap() };
                (c, p)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] += sign * coef;
    }
    IntPolynomial::from_i64s(&coeffs)
}

#[test]
fn printed_form_parser() {
    assert_eq!(parse_printed("t^2+2 t-1"), IntPolynomial::from_i64s(&[-1, 2, 1]));
    assert_eq!(
        parse_printed("2 t^{10}+ t^9 -2 t^2+3 t-1").coeffs().len(),
        11
    );
    assert_eq!(parse_printed("-t^3+4"), IntPolynomial::from_i64s(&[4, 0, 0, -1]));
}

/// Counts group elements by word length by walking the Cayley graph in the
/// Tits representation. Returns `a_0 ..= a_depth`.
pub fn word_growth_bfs(q: &PyramidQuadruple, depth: usize) -> Vec<u64> {
    diagram_growth_bfs(&coxeter_pyramids::coxeter::pyramid_diagram(q), depth)
}

/// Same walk for an arbitrary diagram. Stops early once a level is empty.
pub fn diagram_growth_bfs(d: &coxeter_pyramids::coxeter::CoxeterDiagram, depth: usize) -> Vec<u64> {
    use coxeter_pyramids::coxeter::Label;
    use std::collections::HashSet;

    let r = d.rank();
    let bilinear = |i: usize, j: usize| -> f64 {
        match d.label(i, j) {
            _ if i == j => 1.0,
            Label::Infinity => -1.0,
            Label::Finite(m) => -(std::f64::consts::PI / f64::from(m)).cos(),
        }
    };
    // reflection s: v -> v - 2 B(e_s, v) e_s, as a matrix
    let gens: Vec<Vec<f64>> = (0..r)
        .map(|s| {
            let mut m = vec![0.0; r * r];
            for j in 0..r {
                m[j * r + j] = 1.0;
                m[s * r + j] -= 2.0 * bilinear(s, j);
            }
            m
        })
        .collect();
    let key = |m: &[f64]| -> Vec<i64> { m.iter().map(|x| (x * 1e7).round() as i64).collect() };
    let mul = |a: &[f64], b: &[f64]| -> Vec<f64> {
        let mut c = vec![0.0; r * r];
        for i in 0..r {
            for k in 0..r {
                let aik = a[i * r + k];
                if aik != 0.0 {
                    for j in 0..r {
                        c[i * r + j] += aik * b[k * r + j];
                    }
                }
            }
        }
        c
    };

    let mut identity = vec![0.0; r * r];
    for i in 0..r {
        identity[i * r + i] = 1.0;
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(key(&identity));
    let mut frontier = vec![identity];
    let mut counts = vec![1u64];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for s in &gens {
                let ws = mul(w, s);
                if seen.insert(key(&ws)) {
                    next.push(ws);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        counts.push(next.len() as u64);
        frontier = next;
    }
    counts
}
