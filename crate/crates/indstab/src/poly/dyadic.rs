//! Software floating point over big integers: dyadic values m * 2^e with
//! directed rounding, intervals built on them, and a rational Taylor exp.
//! This is the certification arithmetic: every rounding direction is explicit,
//! so a sign decided here is a proof, not an estimate.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact dyadic rational m * 2^e.
#[derive(Clone, Debug)]
pub struct Dyadic {
    m: BigInt,
    e: i64,
}

fn floor_shr(m: &BigInt, s: u64) -> BigInt {
    if s == 0 {
        return m.clone();
    }
    if m.sign() != Sign::Minus {
        m >> s
    } else {
        // floor for negatives: -ceil(|m| / 2^s)
        let mag: BigInt = (-m + ((BigInt::one() << s) - BigInt::one())) >> s;
        -mag
    }
}

fn ceil_shr(m: &BigInt, s: u64) -> BigInt {
    -floor_shr(&(-m), s)
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            m: BigInt::zero(),
            e: 0,
        }
    }

    pub fn new(m: BigInt, e: i64) -> Self {
        Dyadic { m, e }.normalized()
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        Dyadic::new(x.clone(), 0)
    }

    /// Exact: every f64 is a dyadic rational.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Dyadic::zero());
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, e) = if exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp - 1075)
        };
        let mut m = BigInt::from(mant);
        if sign < 0 {
            m = -m;
        }
        Some(Dyadic::new(m, e))
    }

    fn normalized(mut self) -> Self {
        if self.m.is_zero() {
            self.e = 0;
            return self;
        }
        let tz = self.m.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.m >>= tz;
            self.e += tz as i64;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn sign(&self) -> i8 {
        match self.m.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            m: -&self.m,
            e: self.e,
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.m.is_zero() {
            return other.clone();
        }
        if other.m.is_zero() {
            return self.clone();
        }
        let (lo, hi) = if self.e <= other.e {
            (self, other)
        } else {
            (other, self)
        };
        let shift = (hi.e - lo.e) as u64;
        Dyadic::new((&hi.m << shift) + &lo.m, lo.e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.m * &other.m, self.e + other.e)
    }

    /// Number of significant bits of the mantissa.
    pub fn mantissa_bits(&self) -> u64 {
        self.m.bits()
    }

    /// Rounds toward negative infinity to at most `prec` mantissa bits.
    pub fn round_down(&self, prec: u64) -> Dyadic {
        let bits = self.m.bits();
        if bits <= prec {
            return self.clone();
        }
        let s = bits - prec;
        Dyadic::new(floor_shr(&self.m, s), self.e + s as i64)
    }

    /// Rounds toward positive infinity to at most `prec` mantissa bits.
    pub fn round_up(&self, prec: u64) -> Dyadic {
        let bits = self.m.bits();
        if bits <= prec {
            return self.clone();
        }
        let s = bits - prec;
        Dyadic::new(ceil_shr(&self.m, s), self.e + s as i64)
    }

    pub fn cmp(&self, other: &Dyadic) -> std::cmp::Ordering {
        self.sub(other).m.sign().cmp(&Sign::NoSign)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.e >= 0 {
            BigRational::from(&self.m << self.e as u64)
        } else {
            BigRational::new(self.m.clone(), BigInt::one() << (-self.e) as u64)
        }
    }

    pub fn to_f64(&self) -> f64 {
        // round-trip through a 64-bit mantissa approximation
        let bits = self.m.bits();
        if bits == 0 {
            return 0.0;
        }
        if bits <= 53 {
            let m = bigint_to_i128(&self.m) as f64;
            return m * 2f64.powi(self.e.clamp(-2000, 2000) as i32);
        }
        let s = bits - 53;
        // round to nearest by adding half an ulp before the shift
        let half = BigInt::one() << (s - 1);
        let adjusted = if self.m.is_negative() {
            &self.m - half
        } else {
            &self.m + half
        };
        let m = bigint_to_i128(&floor_shr(&adjusted, s)) as f64;
        m * 2f64.powi((self.e + s as i64).clamp(-2000, 2000) as i32)
    }

    /// Floor square root (self must be >= 0); exact when possible, else <=.
    fn sqrt_down(&self, prec: u64) -> Dyadic {
        debug_assert!(self.sign() >= 0);
        if self.m.is_zero() {
            return Dyadic::zero();
        }
        // scale so the exponent is even and the mantissa has ~2*prec bits
        let mut m = self.m.clone();
        let mut e = self.e;
        let want = 2 * prec + 4;
        let bits = m.bits();
        if bits < want {
            let mut add = want - bits;
            if (e - add as i64) % 2 != 0 {
                add += 1;
            }
            m <<= add;
            e -= add as i64;
        } else if e % 2 != 0 {
            m <<= 1;
            e -= 1;
        }
        let r = m.sqrt(); // floor sqrt
        Dyadic::new(r, e / 2)
    }

    fn sqrt_up(&self, prec: u64) -> Dyadic {
        debug_assert!(self.sign() >= 0);
        if self.m.is_zero() {
            return Dyadic::zero();
        }
        let mut m = self.m.clone();
        let mut e = self.e;
        let want = 2 * prec + 4;
        let bits = m.bits();
        if bits < want {
            let mut add = want - bits;
            if (e - add as i64) % 2 != 0 {
                add += 1;
            }
            m <<= add;
            e -= add as i64;
        } else if e % 2 != 0 {
            m <<= 1;
            e -= 1;
        }
        let r = m.sqrt();
        let r = if (&r * &r) == m { r } else { r + 1 };
        Dyadic::new(r, e / 2)
    }
}

fn bigint_to_i128(x: &BigInt) -> i128 {
    use num_traits::ToPrimitive;
    x.to_i128().unwrap_or(if x.is_negative() {
        i128::MIN
    } else {
        i128::MAX
    })
}

/// Closed interval [lo, hi] with dyadic endpoints; all operations round
/// outward at the working precision.
#[derive(Clone, Debug)]
pub struct DyInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl DyInterval {
    pub fn point(d: Dyadic) -> Self {
        DyInterval {
            lo: d.clone(),
            hi: d,
        }
    }

    pub fn zero() -> Self {
        DyInterval::point(Dyadic::zero())
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        DyInterval::point(Dyadic::from_bigint(x))
    }

    pub fn from_f64(x: f64) -> Option<Self> {
        Dyadic::from_f64(x).map(DyInterval::point)
    }

    pub fn from_rational(q: &BigRational, prec: u64) -> Self {
        // q = n / d: bracket by directed divisions
        let n = q.numer();
        let d = q.denom();
        let nb = n.bits() as i64;
        let db = d.bits() as i64;
        let shift = (prec as i64 + 2 - (nb - db)).max(0) as u64;
        let scaled = n << shift;
        let (quo, rem) = num_integer::Integer::div_rem(&scaled, d);
        let lo_m = if rem.is_negative() { &quo - 1 } else { quo.clone() };
        let hi_m = if rem.is_positive() { &quo + 1 } else { quo };
        DyInterval {
            lo: Dyadic::new(lo_m, -(shift as i64)),
            hi: Dyadic::new(hi_m, -(shift as i64)),
        }
    }

    pub fn round_out(&self, prec: u64) -> DyInterval {
        DyInterval {
            lo: self.lo.round_down(prec),
            hi: self.hi.round_up(prec),
        }
    }

    pub fn neg(&self) -> DyInterval {
        DyInterval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn add(&self, other: &DyInterval, prec: u64) -> DyInterval {
        DyInterval {
            lo: self.lo.add(&other.lo).round_down(prec),
            hi: self.hi.add(&other.hi).round_up(prec),
        }
    }

    pub fn sub(&self, other: &DyInterval, prec: u64) -> DyInterval {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &DyInterval, prec: u64) -> DyInterval {
        let cands = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c.cmp(&lo) == std::cmp::Ordering::Less {
                lo = c.clone();
            }
            if c.cmp(&hi) == std::cmp::Ordering::Greater {
                hi = c.clone();
            }
        }
        DyInterval {
            lo: lo.round_down(prec),
            hi: hi.round_up(prec),
        }
    }

    /// Interval square (tight at zero-straddling intervals).
    pub fn sqr(&self, prec: u64) -> DyInterval {
        let a = self.lo.mul(&self.lo);
        let b = self.hi.mul(&self.hi);
        let (mut lo, hi) = if a.cmp(&b) == std::cmp::Ordering::Less {
            (a.clone(), b)
        } else {
            (b, a)
        };
        if self.lo.sign() <= 0 && self.hi.sign() >= 0 {
            lo = Dyadic::zero();
        }
        DyInterval {
            lo: lo.round_down(prec),
            hi: hi.round_up(prec),
        }
    }

    pub fn powi(&self, mut e: u64, prec: u64) -> DyInterval {
        let mut base = self.clone();
        let mut acc = DyInterval::point(Dyadic::from_bigint(&BigInt::one()));
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, prec);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, prec);
            }
        }
        acc
    }

    /// Interval square root; requires lo >= 0.
    pub fn sqrt(&self, prec: u64) -> DyInterval {
        DyInterval {
            lo: self.lo.sqrt_down(prec),
            hi: self.hi.sqrt_up(prec),
        }
    }

    /// Some(sign) when the interval is strictly one-signed or exactly zero.
    pub fn sign(&self) -> Option<i8> {
        let (sl, sh) = (self.lo.sign(), self.hi.sign());
        if sl > 0 {
            Some(1)
        } else if sh < 0 {
            Some(-1)
        } else if sl == 0 && sh == 0 {
            Some(0)
        } else {
            None
        }
    }

    pub fn mid_f64(&self) -> f64 {
        0.5 * (self.lo.to_f64() + self.hi.to_f64())
    }
}

/// Rectangular complex interval.
#[derive(Clone, Debug)]
pub struct ComplexInterval {
    pub re: DyInterval,
    pub im: DyInterval,
}

impl ComplexInterval {
    pub fn from_f64(re: f64, im: f64) -> Option<Self> {
        Some(ComplexInterval {
            re: DyInterval::from_f64(re)?,
            im: DyInterval::from_f64(im)?,
        })
    }

    pub fn add(&self, other: &ComplexInterval, prec: u64) -> ComplexInterval {
        ComplexInterval {
            re: self.re.add(&other.re, prec),
            im: self.im.add(&other.im, prec),
        }
    }

    pub fn mul(&self, other: &ComplexInterval, prec: u64) -> ComplexInterval {
        ComplexInterval {
            re: self.re.mul(&other.re, prec).sub(&self.im.mul(&other.im, prec), prec),
            im: self.re.mul(&other.im, prec).add(&self.im.mul(&other.re, prec), prec),
        }
    }

    /// |z|^2 as a real interval.
    pub fn norm_sqr(&self, prec: u64) -> DyInterval {
        self.re.sqr(prec).add(&self.im.sqr(prec), prec)
    }
}

/// Certified evaluation of an integer polynomial at a complex point.
pub fn eval_complex_interval(
    coeffs: &[BigInt],
    z: &ComplexInterval,
    prec: u64,
) -> ComplexInterval {
    let mut acc = ComplexInterval {
        re: DyInterval::zero(),
        im: DyInterval::zero(),
    };
    for c in coeffs.iter().rev() {
        acc = acc.mul(z, prec);
        acc.re = acc.re.add(&DyInterval::from_bigint(c), prec);
    }
    acc
}

/// Certified exp of a rational: returns [lo, hi] containing e^q exactly,
/// via the Taylor series with an explicit tail bound.
pub fn rational_exp(q: &BigRational) -> (BigRational, BigRational) {
    if q.is_negative() {
        let (lo, hi) = rational_exp(&-q);
        // 1/[lo, hi] -> [1/hi, 1/lo]; lo > 0 always here
        return (hi.recip(), lo.recip());
    }
    // N >= 2*q + 40 makes the tail bounded by 2 * term_(N+1)
    let qf = q.numer().bits() as i64 - q.denom().bits() as i64;
    let qceil = if qf < 0 { 1u64 } else { 2u64 << qf.min(32) };
    let n_terms = (2 * qceil + 40) as usize;
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for k in 1..=n_terms {
        term = term * q / BigRational::from(BigInt::from(k));
        sum += &term;
    }
    let tail_first = term * q / BigRational::from(BigInt::from(n_terms + 1));
    let bound = &tail_first + &tail_first;
    let hi = &sum + bound;
    (sum, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    #[test]
    fn dyadic_round_trip_f64() {
        for x in [0.0, 1.0, -3.5, 0.1, 1e-30, -123456.789] {
            let d = Dyadic::from_f64(x).unwrap();
            assert_eq!(d.to_rational(), BigRational::from_f64(x).unwrap());
        }
    }

    #[test]
    fn directed_rounding_brackets() {
        let q = BigRational::new(BigInt::from(1), BigInt::from(3));
        let iv = DyInterval::from_rational(&q, 64);
        assert!(iv.lo.to_rational() <= q && q <= iv.hi.to_rational());
        assert!(iv.lo.cmp(&iv.hi) != std::cmp::Ordering::Greater);
        // and the bracket is tight to ~2^-64
        let w = iv.hi.sub(&iv.lo).to_f64();
        assert!(w < 1e-18);
    }

    #[test]
    fn interval_mul_contains_product() {
        let a = DyInterval::from_rational(&BigRational::new(BigInt::from(-7), BigInt::from(3)), 40);
        let b = DyInterval::from_rational(&BigRational::new(BigInt::from(5), BigInt::from(11)), 40);
        let p = a.mul(&b, 40);
        let exact = BigRational::new(BigInt::from(-35), BigInt::from(33));
        assert!(p.lo.to_rational() <= exact && exact <= p.hi.to_rational());
    }

    #[test]
    fn exp_brackets_known_values() {
        // e^1 = 2.718281828...
        let (lo, hi) = rational_exp(&BigRational::one());
        let e = 2.718281828459045f64;
        assert!(lo.to_f64_approx() <= e && e <= hi.to_f64_approx());
        // e^10 = 22026.4657948...
        let (lo, hi) = rational_exp(&BigRational::from(BigInt::from(10)));
        assert!(lo.to_f64_approx() < 22026.4658 && hi.to_f64_approx() > 22026.4657);
        assert!(hi - lo < BigRational::new(BigInt::from(1), BigInt::from(1_000_000)));
        // e^-2 = 0.1353352832...
        let (lo, hi) = rational_exp(&BigRational::from(BigInt::from(-2)));
        let v = 0.1353352832366127f64;
        assert!(lo.to_f64_approx() <= v && v <= hi.to_f64_approx());
    }

    trait ApproxF64 {
        fn to_f64_approx(&self) -> f64;
    }
    impl ApproxF64 for BigRational {
        fn to_f64_approx(&self) -> f64 {
            use num_traits::ToPrimitive;
            self.to_f64().unwrap_or(f64::NAN)
        }
    }

    #[test]
    fn interval_sqrt_brackets() {
        let two = DyInterval::from_bigint(&BigInt::from(2));
        let s = two.sqrt(80);
        let r2 = 1.4142135623730951f64;
        assert!(s.lo.to_f64() <= r2 && r2 <= s.hi.to_f64());
        assert!((s.hi.to_f64() - s.lo.to_f64()).abs() < 1e-20);
    }

    #[test]
    fn certified_polynomial_sign() {
        // p = x + (1+x)^8 at -0.3: -0.3 + 0.7^8 = -0.24235... < 0, certified
        let p = crate::poly::one_plus_x_pow(8).add(&crate::poly::IntPoly::x());
        let z = ComplexInterval::from_f64(-0.3, 0.0).unwrap();
        let v = eval_complex_interval(p.coeffs(), &z, 128);
        assert_eq!(v.re.sign(), Some(-1));
        assert_eq!(v.im.sign(), Some(0));
    }
}
