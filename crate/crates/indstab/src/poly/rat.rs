//! Exact rational polynomials: Euclidean division, gcd, squarefree
//! decomposition. Everything reduces to lowest terms; nothing rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use super::{sign_i8, IntPoly};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_int(p: &IntPoly) -> Self {
        p.to_rat()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_standard(&self) -> bool {
        self.coeffs.last().map_or(true, |c| c.is_positive())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of p(x); uses the cleared-denominator integer form.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let (ip, _) = self.clear_denominators();
        ip.sign_at_fraction(x.numer(), x.denom())
    }

    /// Sign of the value at +infinity (sign of leading coefficient).
    pub fn sign_at_pos_inf(&self) -> i8 {
        self.coeffs.last().map_or(0, |c| rational_sign(c))
    }

    /// Sign of the value at -infinity.
    pub fn sign_at_neg_inf(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = self.coeffs.last().map(rational_sign).unwrap_or(0);
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Euclidean division: self = q * divisor + r with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![BigRational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let t = &c * b;
                rem[k + j] -= t;
            }
            quot[k] = c;
        }
        Ok((RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &RatPoly) -> Result<RatPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient; errors if the division is not exact.
    pub fn div_exact(&self, divisor: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Precondition(
                "inexact polynomial division where exactness was required".into(),
            ));
        }
        Ok(q)
    }

    /// Monic gcd via the Euclidean algorithm on primitive integer images.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.primitive_int();
        let mut b = other.primitive_int();
        if a.is_zero() {
            return RatPoly::from_int(&b).monic();
        }
        loop {
            if b.is_zero() {
                return RatPoly::from_int(&a).monic();
            }
            let r = int_pseudo_rem_abs(&a, &b).primitive_part();
            a = b;
            b = r;
        }
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> RatPoly {
        match self.leading_coeff() {
            None => RatPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Squarefree part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> Result<RatPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return Ok(self.clone());
        }
        self.div_exact(&g)
    }

    /// Yun squarefree decomposition: self = lc * prod out[i].1 ^ out[i].0
    /// with each factor monic, squarefree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(usize, RatPoly)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        if f.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let fp = f.derivative();
        let a = f.gcd(&fp);
        let mut b = f.div_exact(&a)?;
        let mut c = fp.div_exact(&a)?;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1usize;
        while b.degree().unwrap_or(0) > 0 {
            let ai = b.gcd(&d).monic();
            if ai.degree().unwrap_or(0) > 0 {
                out.push((i, ai.clone()));
            }
            b = b.div_exact(&ai)?;
            c = d.div_exact(&ai)?;
            d = c.sub(&b.derivative());
            i += 1;
        }
        Ok(out)
    }

    /// Clears denominators and content: returns (g, s) with g a primitive
    /// integer polynomial, s > 0 rational, and self = s * g.
    pub fn clear_denominators(&self) -> (IntPoly, BigRational) {
        if self.is_zero() {
            return (IntPoly::zero(), BigRational::one());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let raw = IntPoly::from_coeffs(ints);
        let content = raw.content();
        let prim = raw.primitive_part();
        // self = (content / den_lcm) * prim
        (prim, BigRational::new(content, den_lcm))
    }

    pub fn to_int_exact(&self) -> Option<IntPoly> {
        if self.coeffs.iter().all(|c| c.denom().is_one()) {
            Some(IntPoly::from_coeffs(
                self.coeffs.iter().map(|c| c.numer().clone()).collect(),
            ))
        } else {
            None
        }
    }

    fn primitive_int(&self) -> IntPoly {
        self.clear_denominators().0
    }
}

pub(crate) fn rational_sign(c: &BigRational) -> i8 {
    sign_i8(c.numer())
}

/// Pseudo-remainder scaled by |lc(b)|^(deg a - deg b + 1): a positive multiple
/// of rem(a, b), so every sign evaluation matches the rational remainder.
pub(crate) fn int_pseudo_rem_abs(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let da = a.degree().expect("nonzero dividend");
    let db = b.degree().expect("nonzero divisor");
    if da < db {
        return a.clone();
    }
    let lc = b.leading_coeff().unwrap().clone();
    let delta = (da - db + 1) as u32;
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    let mut steps = 0u32;
    for k in (db..=da).rev() {
        let c = rem[k].clone();
        for x in rem.iter_mut() {
            *x *= &lc;
        }
        if !c.is_zero() {
            for (j, bj) in b.coeffs().iter().enumerate() {
                rem[k - db + j] -= bj * &c;
            }
        }
        steps += 1;
        debug_assert!(rem[k].is_zero());
    }
    rem.truncate(db);
    let mut out = IntPoly::from_coeffs(rem);
    // rem above equals lc^steps * rem(a, b); make the multiplier |lc|^delta.
    debug_assert_eq!(steps, delta);
    if lc.is_negative() && delta % 2 == 1 {
        out = out.neg();
    }
    out
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for RatPoly {
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
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}
