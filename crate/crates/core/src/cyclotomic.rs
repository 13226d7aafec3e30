//! Exact arithmetic in `Z[zeta_p]`.
//!
//! A [`CycInt`] is stored in the basis `1, zeta, ..., zeta^{p-2}`, which makes
//! the representation unique; for `p = 2` that is a single integer.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycInt {
    p: u32,
    coeffs: Vec<BigInt>,
}

fn basis_len(p: u32) -> usize {
    (p as usize - 1).max(1)
}

impl CycInt {
    pub fn zero(p: u32) -> CycInt {
        CycInt { p, coeffs: vec![BigInt::zero(); basis_len(p)] }
    }

    pub fn from_int(p: u32, r: impl Into<BigInt>) -> CycInt {
        let mut c = CycInt::zero(p);
        c.coeffs[0] = r.into();
        c
    }

    pub fn one(p: u32) -> CycInt {
        CycInt::from_int(p, 1)
    }

    /// `zeta^i`.
    pub fn zeta_pow(p: u32, i: u64) -> CycInt {
        let mut w = vec![BigInt::zero(); p as usize];
        w[(i % p as u64) as usize] = BigInt::one();
        CycInt::from_unreduced(p, w)
    }

    /// Takes coefficients already in the reduced basis (length `p - 1`, or 1 for p = 2).
    pub fn from_reduced(p: u32, coeffs: Vec<BigInt>) -> Result<CycInt> {
        if coeffs.len() != basis_len(p) {
            return Err(Error::Inconsistent(format!(
                "expected {} reduced coefficients for p = {p}, got {}",
                basis_len(p),
                coeffs.len()
            )));
        }
        Ok(CycInt { p, coeffs })
    }

    /// `sum_i w_i zeta^i` for `w` of length `p`, reduced with
    /// `zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})`.
    pub fn from_unreduced(p: u32, mut w: Vec<BigInt>) -> CycInt {
        assert_eq!(w.len(), p as usize);
        let top = w.pop().expect("p >= 2");
        if p == 2 {
            return CycInt { p, coeffs: vec![&w[0] - top] };
        }
        for c in w.iter_mut() {
            *c -= &top;
        }
        CycInt { p, coeffs: w }
    }

    pub fn from_small_unreduced(p: u32, w: &[i64]) -> CycInt {
        CycInt::from_unreduced(p, w.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficients as a length-`p` vector with a zero `zeta^{p-1}` slot
    /// (for p = 2: `[c, 0]`, i.e. `c * zeta^0`).
    pub fn to_unreduced(&self) -> Vec<BigInt> {
        let mut w = self.coeffs.clone();
        w.resize(self.p as usize, BigInt::zero());
        w
    }

    fn check(&self, other: &CycInt) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::MixedPrime(self.p, other.p))
        }
    }

    pub fn try_add(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        Ok(CycInt { p: self.p, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn try_sub(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        Ok(CycInt { p: self.p, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    /// Product modulo `1 + x + ... + x^{p-1}`.
    pub fn try_mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        let p = self.p as usize;
        if p == 2 {
            return Ok(CycInt { p: 2, coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] });
        }
        let mut w = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % p;
                w[k] += a * b;
            }
        }
        Ok(CycInt::from_unreduced(self.p, w))
    }

    pub fn scale(&self, k: &BigInt) -> CycInt {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// The automorphism `zeta -> zeta^j`.
    pub fn galois_apply(&self, j: u64) -> Result<CycInt> {
        let p = self.p as u64;
        if j.is_multiple_of(p) {
            return Err(Error::BadIndex(j, self.p));
        }
        if p == 2 {
            return Ok(self.clone());
        }
        let mut w = vec![BigInt::zero(); p as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            w[(i as u64 * j % p) as usize] += c;
        }
        Ok(CycInt::from_unreduced(self.p, w))
    }

    /// Complex conjugation, `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> CycInt {
        self.galois_apply(self.p as u64 - 1).expect("p - 1 is a unit mod p")
    }

    /// `Some(r)` when this is the rational integer `r`.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Writes an element fixed by `zeta -> zeta^{g^2}` as `(I + J sqrt(p)) / 2`.
    ///
    /// Requires `p = 1 (mod 4)`; returns `None` when the element does not lie
    /// in `Q(sqrt(p))`.
    pub fn quad_decompose(&self) -> Result<Option<QuadDecomp>> {
        let p = self.p;
        if p % 4 != 1 {
            return Err(Error::WrongResidue(p));
        }
        let w = self.to_unreduced();
        let mut plus: Option<&BigInt> = None;
        let mut minus: Option<&BigInt> = None;
        for (i, c) in w.iter().enumerate().skip(1) {
            let slot = if legendre(i as u64, p as u64) == 1 { &mut plus } else { &mut minus };
            match slot {
                None => *slot = Some(c),
                Some(prev) if *prev == c => {}
                Some(_) => return Ok(None),
            }
        }
        let (plus, minus) = (plus.expect("p >= 5"), minus.expect("p >= 5"));
        let i = BigInt::from(2) * &w[0] - plus - minus;
        let j = plus - minus;
        Ok(Some(QuadDecomp { i, j }))
    }

    /// Evaluation at `zeta = exp(2 pi i / p)`.
    pub fn complex_embed(&self) -> Complex64 {
        let p = self.p as f64;
        if self.p == 2 {
            return Complex64::new(self.coeffs[0].to_f64().unwrap_or(f64::NAN), 0.0);
        }
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / p;
                Complex64::from_polar(1.0, theta) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.try_add(rhs).expect("mixed primes")
    }
}

impl AddAssign<&CycInt> for CycInt {
    fn add_assign(&mut self, rhs: &CycInt) {
        assert_eq!(self.p, rhs.p, "mixed primes");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.try_sub(rhs).expect("mixed primes")
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.try_mul(rhs).expect("mixed primes")
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for CycInt {
    /// `c0 + c1*z + c2*z^2 ...`, skipping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*z")?,
                _ => write!(f, "{mag}*z^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn big_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CycInt", 2)?;
        st.serialize_field("p", &self.p)?;
        let coeffs: Vec<_> = self.coeffs.iter().map(big_to_json).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// `(I + J sqrt(p)) / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadDecomp {
    pub i: BigInt,
    pub j: BigInt,
}

impl QuadDecomp {
    pub fn render(&self, p: u32) -> String {
        let sign = if self.j.is_negative() { '-' } else { '+' };
        format!("({} {} {}*sqrt({p}))/2", self.i, sign, self.j.abs())
    }

    /// Simplified form: `sqrt(5)`, `-sqrt(5)`, `(5 + sqrt(5))/2`, `3 - 2*sqrt(13)`.
    pub fn pretty(&self, p: u32) -> String {
        let two = BigInt::from(2);
        let (i, j, halves) = if self.i.is_even() && self.j.is_even() {
            (&self.i / &two, &self.j / &two, false)
        } else {
            (self.i.clone(), self.j.clone(), true)
        };
        let root = if j.abs().is_one() { format!("sqrt({p})") } else { format!("{}*sqrt({p})", j.abs()) };
        let body = match (i.is_zero(), j.is_zero(), j.is_negative()) {
            (_, true, _) => i.to_string(),
            (true, false, false) => root,
            (true, false, true) => format!("-{root}"),
            (false, false, neg) => format!("{} {} {root}", i, if neg { '-' } else { '+' }),
        };
        if halves {
            format!("({body})/2")
        } else {
            body
        }
    }

    pub fn to_f64(&self, p: u32) -> f64 {
        (self.i.to_f64().unwrap_or(f64::NAN) + self.j.to_f64().unwrap_or(f64::NAN) * (p as f64).sqrt()) / 2.0
    }
}

impl Serialize for QuadDecomp {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("QuadDecomp", 2)?;
        st.serialize_field("I", &big_to_json(&self.i))?;
        st.serialize_field("J", &big_to_json(&self.j))?;
        st.end()
    }
}

/// Counts `w_0..w_{p-1}` of how often each `zeta^i` occurs in a sum of roots
/// of unity, together with their total.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Histogram {
    pub p: u32,
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Histogram {
    pub fn new(p: u32, counts: Vec<u64>) -> Histogram {
        assert_eq!(counts.len(), p as usize);
        let total = counts.iter().sum();
        Histogram { p, counts, total }
    }

    pub fn reduce(&self) -> CycInt {
        CycInt::from_unreduced(self.p, self.counts.iter().map(|&c| BigInt::from(c)).collect())
    }
}

/// p-adic valuation of a rational integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinite
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

pub fn vp_int(x: &BigInt, p: u32) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    let mut v = 0;
    let mut m = x.clone();
    loop {
        let (quot, rem) = m.div_rem(&p);
        if !rem.is_zero() {
            return Valuation::Finite(v);
        }
        m = quot;
        v += 1;
    }
}

/// Legendre symbol `(a / p)` for odd prime `p`: 1, -1, or 0.
pub fn legendre(a: u64, p: u64) -> i32 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    let mut r = 1u64;
    let mut b = a;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

/// The quadratic Gauss sum `sum_{i != 0} (i/p) zeta^i`.
pub fn quadratic_gauss_sum(p: u32) -> CycInt {
    let w = (0..p as u64).map(|i| legendre(i, p as u64) as i64).collect::<Vec<_>>();
    CycInt::from_small_unreduced(p, &w)
}
