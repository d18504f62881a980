//! Exact rational helpers and certified enclosures.
//!
//! Everything here works over `BigRational`; transcendental values (logarithms,
//! square roots) are only ever returned as a [`RationalInterval`] that is
//! guaranteed to contain the true value.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// Floor of a rational as an integer.
pub fn floor(x: &BigRational) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn ceil(x: &BigRational) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

/// `num/den` or a bare integer; the wire format for rationals.
pub fn rat_to_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `a`, `a/b`, or a decimal such as `1e-12`, `0.001`, `-2.5E3` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (ip, fp) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{ip}{fp}0").parse::<BigInt>().map_err(|_| bad())? / 10;
    let scale = exp - fp.len() as i64;
    let ten = BigInt::from(10u32);
    let mut value = if scale >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        value = -value;
    }
    Ok(value)
}

/// Largest `k` with `2^k <= x` for positive `x`.
fn floor_log2(x: &BigRational) -> i64 {
    let nb = x.numer().bits() as i64;
    let db = x.denom().bits() as i64;
    let mut k = nb - db;
    // 2^(nb-1) <= num < 2^nb, 2^(db-1) <= den < 2^db, so k-1 <= log2 x < k+1
    if pow2(k) > *x {
        k -= 1;
    }
    k
}

pub fn pow2(k: i64) -> BigRational {
    if k >= 0 {
        BigRational::from_integer(BigInt::one() << (k as usize))
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << ((-k) as usize))
    }
}

/// Rounds down onto the grid `2^-bits`.
pub fn round_down(x: &BigRational, bits: u64) -> BigRational {
    let scale = BigInt::one() << bits as usize;
    let scaled = x * BigRational::from_integer(scale.clone());
    BigRational::new(floor(&scaled), scale)
}

pub fn round_up(x: &BigRational, bits: u64) -> BigRational {
    let scale = BigInt::one() << bits as usize;
    let scaled = x * BigRational::from_integer(scale.clone());
    BigRational::new(ceil(&scaled), scale)
}

/// Number of binary digits needed so that `2^-bits <= eps`.
pub fn bits_for(eps: &BigRational) -> u64 {
    assert!(eps.is_positive());
    let k = floor_log2(eps);
    if k >= 0 {
        1
    } else {
        (-k) as u64 + 1
    }
}

/// A closed interval `[lo, hi]` of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Precondition(format!(
                "interval lower end {} exceeds upper end {}",
                rat_to_string(&lo),
                rat_to_string(&hi)
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Result<Self> {
        Self::new(rat(lo, 1), rat(hi, 1))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat(2, 1)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &RationalInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &RationalInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_negative() {
            Self {
                lo: &self.hi * k,
                hi: &self.lo * k,
            }
        } else {
            Self {
                lo: &self.lo * k,
                hi: &self.hi * k,
            }
        }
    }

    pub fn add(&self, other: &RationalInterval) -> Self {
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    /// Product of two intervals with strictly positive lower ends.
    pub fn mul_positive(&self, other: &RationalInterval) -> Self {
        debug_assert!(self.lo.is_positive() && other.lo.is_positive());
        Self {
            lo: &self.lo * &other.lo,
            hi: &self.hi * &other.hi,
        }
    }

    /// Integer power of a strictly positive interval.
    pub fn powi_positive(&self, n: i64) -> Self {
        debug_assert!(self.lo.is_positive());
        if n >= 0 {
            let n = n as usize;
            Self {
                lo: num_traits::pow(self.lo.clone(), n),
                hi: num_traits::pow(self.hi.clone(), n),
            }
        } else {
            let n = (-n) as usize;
            Self {
                lo: num_traits::pow(self.hi.recip(), n),
                hi: num_traits::pow(self.lo.recip(), n),
            }
        }
    }

    /// Outward rounding onto a dyadic grid, keeping numbers small.
    pub fn round_outward(&self, bits: u64) -> Self {
        Self {
            lo: round_down(&self.lo, bits),
            hi: round_up(&self.hi, bits),
        }
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.12}, {:.12}]", self.lo_f64(), self.hi_f64())
    }
}

impl Serialize for RationalInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RationalInterval", 2)?;
        st.serialize_field("lo", &rat_to_string(&self.lo))?;
        st.serialize_field("hi", &rat_to_string(&self.hi))?;
        st.end()
    }
}

/// Enclosure of `atanh(z)` for `0 <= z <= 1/3` with width below `tol`.
fn atanh_small(z: &BigRational, tol: &BigRational) -> RationalInterval {
    debug_assert!(!z.is_negative() && *z <= rat(1, 3));
    if z.is_zero() {
        return RationalInterval::point(BigRational::zero());
    }
    let z2 = z * z;
    // tail after the term z^(2j+1)/(2j+1) is at most z^(2j+3) / ((2j+3)(1-z^2))
    let tail_factor = (BigRational::one() - &z2).recip();
    let mut power = z.clone();
    let mut sum = BigRational::zero();
    let mut j: i64 = 0;
    loop {
        sum += &power / rat(2 * j + 1, 1);
        power = &power * &z2;
        j += 1;
        let tail = &power / rat(2 * j + 1, 1) * &tail_factor;
        if &tail < tol {
            return RationalInterval {
                lo: sum.clone(),
                hi: sum + tail,
            };
        }
    }
}

/// Certified enclosure of `ln 2` of width below `eps`.
pub fn ln2_enclosure(eps: &BigRational) -> RationalInterval {
    let half = eps / rat(2, 1);
    let at = atanh_small(&rat(1, 3), &half);
    at.scale(&rat(2, 1))
}

/// Certified enclosure of `ln x` for rational `x > 0`, width below `eps`.
pub fn ln_enclosure(x: &BigRational, eps: &BigRational) -> Result<RationalInterval> {
    if !x.is_positive() {
        return Err(Error::Precondition("logarithm of a non-positive number".into()));
    }
    if !eps.is_positive() {
        return Err(Error::Precondition("precision must be positive".into()));
    }
    if x.is_one() {
        return Ok(RationalInterval::point(BigRational::zero()));
    }
    let k = floor_log2(x);
    let m = x / pow2(k);
    // m in [1, 2): ln m = 2 atanh((m-1)/(m+1)), argument in [0, 1/3)
    let z = (&m - BigRational::one()) / (&m + BigRational::one());
    let quarter = eps / rat(4, 1);
    let lnm = atanh_small(&z, &(&quarter / rat(2, 1))).scale(&rat(2, 1));
    let lnk = if k == 0 {
        RationalInterval::point(BigRational::zero())
    } else {
        let per = &quarter / rat(k.abs() + 1, 1);
        ln2_enclosure(&per).scale(&rat(k, 1))
    };
    let bits = bits_for(eps) + 3;
    Ok(lnm.add(&lnk).round_outward(bits))
}

/// Certified enclosure of `ln` over a positive interval.
pub fn ln_interval(x: &RationalInterval, eps: &BigRational) -> Result<RationalInterval> {
    let half = eps / rat(2, 1);
    let lo = ln_enclosure(&x.lo, &half)?;
    let hi = ln_enclosure(&x.hi, &half)?;
    Ok(RationalInterval { lo: lo.lo, hi: hi.hi })
}

/// Integer square root (floor).
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    n.sqrt()
}

/// Certified enclosure of `sqrt(x)` for `x >= 0`, width at most `eps`.
pub fn sqrt_enclosure(x: &BigRational, eps: &BigRational) -> Result<RationalInterval> {
    if x.is_negative() {
        return Err(Error::Precondition("square root of a negative number".into()));
    }
    let bits = bits_for(eps);
    let s = BigInt::one() << bits as usize;
    let scaled = floor(&(x * BigRational::from_integer(&s * &s)));
    let r = isqrt(&scaled);
    let lo = BigRational::new(r.clone(), s.clone());
    let hi = if &r * &r == scaled && BigRational::from_integer(scaled.clone()) == x * BigRational::from_integer(&s * &s) {
        lo.clone()
    } else {
        BigRational::new(r + 1, s)
    };
    Ok(RationalInterval { lo, hi })
}

pub fn sign_of(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
