//! Dense univariate polynomials with exact coefficients.
//!
//! `IntPoly` (arbitrary-precision integers) carries the independence
//! polynomials themselves; `RatPoly` (arbitrary-precision rationals) carries
//! Sturm chains and Euclidean remainders. Coefficients are stored in
//! ascending order with no trailing zeros; the zero polynomial is the empty
//! vector. No operation ever rounds.

mod dyadic;
mod rat;

pub use dyadic::{rational_exp, ComplexInterval, DyInterval, Dyadic};
pub use rat::RatPoly;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Dense integer polynomial, ascending coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

const KARATSUBA_CUTOFF: usize = 32;

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// c * x^k
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly { coeffs: v }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True when zero or the leading coefficient is positive.
    pub fn is_standard(&self) -> bool {
        self.coeffs.last().map_or(true, |c| c.is_positive())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        IntPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let out = mul_slices(&self.coeffs, &other.coeffs);
        IntPoly::from_coeffs(out)
    }

    /// Multiplies by x^k.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: v }
    }

    pub fn pow(&self, exp: usize) -> IntPoly {
        let mut base = self.clone();
        let mut e = exp;
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Iterated formal derivative.
    pub fn derivative(&self, order: usize) -> IntPoly {
        let mut cur = self.clone();
        for _ in 0..order {
            if cur.coeffs.len() <= 1 {
                return IntPoly::zero();
            }
            let next: Vec<BigInt> = cur
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect();
            cur = IntPoly::from_coeffs(next);
        }
        cur
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of p(a/b) for b > 0, via the homogenized integer form
    /// sum c_k a^k b^(d-k); avoids rational reduction in hot loops.
    pub fn sign_at_fraction(&self, a: &BigInt, b: &BigInt) -> i8 {
        debug_assert!(b.is_positive());
        if self.is_zero() {
            return 0;
        }
        let mut acc = self.coeffs.last().unwrap().clone();
        let mut bp = BigInt::one();
        for c in self.coeffs.iter().rev().skip(1) {
            bp *= b;
            acc = acc * a + c * &bp;
        }
        sign_i8(&acc)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::INFINITY);
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0);
        }
        acc
    }

    /// p(q(x)), exact.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            acc = acc.add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    /// Splits into (even, odd) parts: p(x) = even(x^2) + x*odd(x^2).
    pub fn even_odd_split(&self) -> (IntPoly, IntPoly) {
        let even: Vec<BigInt> = self.coeffs.iter().step_by(2).cloned().collect();
        let odd: Vec<BigInt> = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (IntPoly::from_coeffs(even), IntPoly::from_coeffs(odd))
    }

    /// Reverses the coefficient sequence. Roots map to reciprocals when the
    /// constant term is nonzero; the flag reports a zero constant term.
    pub fn reversal(&self) -> (IntPoly, bool) {
        let flagged = self.coeffs.first().map_or(false, |c| c.is_zero());
        let mut v: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        (IntPoly { coeffs: v }, flagged)
    }

    /// Gcd of |coefficients| (positive), zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, preserving signs.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Largest |coefficient| as f64 bit-length style bound, for scaling.
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    /// Serializes to the exchange form: array of decimal strings, ascending.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings(strings: &[String]) -> Result<IntPoly> {
        let mut coeffs = Vec::with_capacity(strings.len());
        for (i, s) in strings.iter().enumerate() {
            let c: BigInt = s.trim().parse().map_err(|_| Error::Parse {
                line: i + 1,
                msg: format!("bad integer coefficient {s:?}"),
            })?;
            coeffs.push(c);
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

pub(crate) fn sign_i8(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Schoolbook + Karatsuba product of coefficient slices.
fn mul_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len().min(b.len()) < KARATSUBA_CUTOFF {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                out[i + j] += ai * bj;
            }
        }
        return out;
    }
    // Karatsuba: split at m, a = a0 + x^m a1, b = b0 + x^m b1.
    let m = a.len().max(b.len()) / 2;
    let (a0, a1) = split_at_clamped(a, m);
    let (b0, b1) = split_at_clamped(b, m);
    let z0 = mul_slices(a0, b0);
    let z2 = if a1.is_empty() || b1.is_empty() {
        Vec::new()
    } else {
        mul_slices(a1, b1)
    };
    let asum = add_slices(a0, a1);
    let bsum = add_slices(b0, b1);
    let mut z1 = mul_slices(&asum, &bsum);
    sub_assign_slices(&mut z1, &z0);
    sub_assign_slices(&mut z1, &z2);

    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, v) in z0.into_iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in z1.into_iter().enumerate() {
        if !v.is_zero() {
            out[i + m] += v;
        }
    }
    for (i, v) in z2.into_iter().enumerate() {
        out[i + 2 * m] += v;
    }
    out
}

fn split_at_clamped(a: &[BigInt], m: usize) -> (&[BigInt], &[BigInt]) {
    if a.len() <= m {
        (a, &[])
    } else {
        a.split_at(m)
    }
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut v = BigInt::zero();
        if let Some(x) = a.get(k) {
            v += x;
        }
        if let Some(x) = b.get(k) {
            v += x;
        }
        out.push(v);
    }
    out
}

fn sub_assign_slices(a: &mut Vec<BigInt>, b: &[BigInt]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x -= y;
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl From<Vec<i64>> for IntPoly {
    fn from(v: Vec<i64>) -> Self {
        IntPoly::from_coeffs(v.into_iter().map(BigInt::from).collect())
    }
}

impl From<&[i64]> for IntPoly {
    fn from(v: &[i64]) -> Self {
        IntPoly::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }
}

/// (1+x)^n, the independence polynomial of the empty graph.
pub fn one_plus_x_pow(n: usize) -> IntPoly {
    IntPoly::from(vec![1, 1]).pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        IntPoly::from(v)
    }

    #[test]
    fn mul_binomials() {
        // (1+x)(1+x) = 1+2x+x^2
        assert_eq!(p(&[1, 1]).mul(&p(&[1, 1])), p(&[1, 2, 1]));
        // (1+x)^3 = 1+3x+3x^2+x^3
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        // exercise the cutoff with (1+x)^80 * (1+2x)^70 two ways
        let a = one_plus_x_pow(80);
        let b = p(&[1, 2]).pow(70);
        let prod = a.mul(&b);
        let mut manual = vec![BigInt::zero(); 151];
        for (i, ai) in a.coeffs().iter().enumerate() {
            for (j, bj) in b.coeffs().iter().enumerate() {
                manual[i + j] += ai * bj;
            }
        }
        assert_eq!(prod, IntPoly::from_coeffs(manual));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[1, 7]).derivative(1), p(&[7]));
        assert_eq!(p(&[0, 0, 0, 0, 1]).derivative(2), p(&[0, 0, 12]));
        assert_eq!(p(&[1, 1]).derivative(5), IntPoly::zero());
    }

    #[test]
    fn evaluate_examples() {
        // (1+2x) at -1/2 is exactly 0
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        assert!(p(&[1, 2]).eval_rational(&half).is_zero());
        // (1+x)^n + x at 0 is 1
        let star = one_plus_x_pow(9).add(&IntPoly::x());
        assert!(star.eval_rational(&BigRational::zero()).is_one());
    }

    #[test]
    fn compose_examples() {
        let q = p(&[1, 3, 1]);
        assert_eq!(q.compose(&IntPoly::x()), q);
        // (1+3x+x^2) o (2x) = 1+6x+4x^2
        assert_eq!(q.compose(&p(&[0, 2])), p(&[1, 6, 4]));
        // p o 0 = constant term
        assert_eq!(q.compose(&IntPoly::zero()), p(&[1]));
    }

    #[test]
    fn even_odd_examples() {
        // 1+6x+6x^2+2x^3 -> even 1+6x, odd 6+2x
        let (e, o) = p(&[1, 6, 6, 2]).even_odd_split();
        assert_eq!(e, p(&[1, 6]));
        assert_eq!(o, p(&[6, 2]));
        let (e, o) = p(&[1]).even_odd_split();
        assert_eq!(e, p(&[1]));
        assert!(o.is_zero());
        // i(K_{1,3}) = 1+4x+3x^2+x^3 -> even 1+3x, odd 4+x
        let (e, o) = p(&[1, 4, 3, 1]).even_odd_split();
        assert_eq!(e, p(&[1, 3]));
        assert_eq!(o, p(&[4, 1]));
    }

    #[test]
    fn even_odd_recombination() {
        // p = even(x^2) + x*odd(x^2) exactly
        for poly in [p(&[1, 6, 6, 2]), p(&[5]), p(&[0, 1, 0, -7, 3]), IntPoly::zero()] {
            let (e, o) = poly.even_odd_split();
            let x2 = p(&[0, 0, 1]);
            let back = e.compose(&x2).add(&o.compose(&x2).mul(&IntPoly::x()));
            assert_eq!(back, poly);
        }
    }

    #[test]
    fn reversal_examples() {
        let (r, flag) = p(&[1, 2]).reversal();
        assert_eq!(r, p(&[2, 1]));
        assert!(!flag);
        let (r, _) = p(&[1, 6]).reversal();
        assert_eq!(r, p(&[6, 1]));
        // double reversal is the identity when p(0) != 0
        let q = p(&[3, 0, -5, 7]);
        assert_eq!(q.reversal().0.reversal().0, q);
        // zero constant term is flagged
        let (_, flag) = p(&[0, 1, 4]).reversal();
        assert!(flag);
    }

    #[test]
    fn decimal_round_trip() {
        let q = p(&[1, -6, 0, 2]);
        let s = q.to_decimal_strings();
        assert_eq!(s, vec!["1", "-6", "0", "2"]);
        assert_eq!(IntPoly::from_decimal_strings(&s).unwrap(), q);
    }
}
