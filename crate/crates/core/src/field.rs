//! Arithmetic in small finite fields `F_{p^n}`.
//!
//! Elements are stored as packed indices into the coefficient-lexicographic
//! enumeration of the field, with the constant coefficient most significant:
//! the element `c_0 + c_1 x + ... + c_{n-1} x^{n-1}` has index
//! `c_0 p^{n-1} + c_1 p^{n-2} + ... + c_{n-1}`. Multiplication, inversion and
//! powers go through discrete-log tables built once per field; addition is
//! digit-wise.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 20;

/// An element of a [`Field`], identified by its enumeration index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    /// Unchecked; callers guarantee `index < q`.
    pub(crate) fn from_index(index: u32) -> FieldElement {
        FieldElement(index)
    }

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// The user-facing description of a field: characteristic, degree and
/// (optionally) a defining polynomial, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    pub p: u32,
    pub n: u32,
    pub modulus: Option<Vec<u32>>,
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `"p"`, `"p^n"`, or a prime power `"q"`, each with an optional
    /// `":c0,c1,...,cn"` modulus suffix (constant term first, monic).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (order, modulus) = match s.split_once(':') {
            Some((o, m)) => (o.trim(), Some(m.trim())),
            None => (s, None),
        };
        let parse_int = |t: &str| -> Result<u64> {
            t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("expected an integer, got {t:?}")))
        };
        let (p, n) = match order.split_once('^') {
            Some((p, n)) => {
                let p = parse_int(p)?;
                let n = parse_int(n)?;
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                (p, n)
            }
            None => {
                let q = parse_int(order)?;
                if is_prime(q) {
                    (q, 1)
                } else {
                    match prime_power(q) {
                        Some((p, n)) => (p, n as u64),
                        None => return Err(Error::NotPrime(q)),
                    }
                }
            }
        };
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if (p as u128).checked_pow(n as u32).is_none_or(|q| q > MAX_ORDER as u128) {
            return Err(Error::TooLarge((p as u128).saturating_pow(n.min(128) as u32)));
        }
        let modulus = modulus
            .map(|m| {
                m.split(',')
                    .map(|c| {
                        parse_int(c).and_then(|v| {
                            u32::try_from(v).map_err(|_| Error::Parse(format!("coefficient {v} too large")))
                        })
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .transpose()?;
        Ok(FieldSpec { p: p as u32, n: n as u32, modulus })
    }
}

/// A finite field `F_{p^n}` with its lookup tables.
#[derive(Clone)]
pub struct Field {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `place[i] = p^{n-1-i}`: the weight of coefficient `i` in an index.
    place: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    trace: Vec<u32>,
    generator: FieldElement,
    gamma: u32,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field").field("p", &self.p).field("n", &self.n).field("modulus", &self.modulus).finish()
    }
}

impl Field {
    /// Builds `F_{p^n}`. Without an explicit modulus the lexicographically
    /// smallest monic irreducible of degree `n` is used (coefficients compared
    /// from the constant term up). For `n = 1` the modulus is `x`.
    pub fn new(p: u32, n: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u128).checked_pow(n).unwrap_or(u128::MAX);
        if q > MAX_ORDER as u128 {
            return Err(Error::TooLarge(q));
        }
        let q = q as u32;

        let modulus = match modulus {
            Some(m) => {
                if m.len() != n as usize + 1 {
                    return Err(Error::BadModulus(format!(
                        "expected {} coefficients for degree {n}, got {}",
                        n + 1,
                        m.len()
                    )));
                }
                if m[n as usize] != 1 {
                    return Err(Error::BadModulus("modulus must be monic".into()));
                }
                if let Some(c) = m.iter().find(|&&c| c >= p) {
                    return Err(Error::BadModulus(format!("coefficient {c} not reduced mod {p}")));
                }
                if !is_irreducible(m, p) {
                    return Err(Error::Reducible(m.to_vec(), p));
                }
                m.to_vec()
            }
            None if n == 1 => vec![0, 1],
            None => smallest_irreducible(p, n),
        };

        let mut place = vec![1u32; n as usize];
        for i in (0..n as usize - 1).rev() {
            place[i] = place[i + 1] * p;
        }

        let mut field = Field {
            p,
            n,
            q,
            modulus,
            place,
            exp: Vec::new(),
            log: Vec::new(),
            trace: Vec::new(),
            generator: FieldElement(0),
            gamma: primitive_root_mod_p(p),
        };
        field.build_tables();
        Ok(field)
    }

    /// Parses a field string such as `"5"`, `"9"`, `"2^3"` or `"2^3:1,1,0,1"`.
    pub fn parse(s: &str) -> Result<Field> {
        let spec: FieldSpec = s.parse()?;
        Field::from_spec(&spec)
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        Field::new(spec.p, spec.n, spec.modulus.as_deref())
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.p, n: self.n, modulus: Some(self.modulus.clone()) }
    }

    fn build_tables(&mut self) {
        let order = self.q - 1;
        let factors = prime_factors(order as u64);
        let one = self.one_poly();

        // First generator of K^x in enumeration order.
        let generator = (1..self.q)
            .find(|&idx| {
                let g = self.coeffs_of(idx);
                factors.iter().all(|&r| self.poly_pow(&g, order as u64 / r) != one)
            })
            .expect("every finite field has a primitive element");
        self.generator = FieldElement(generator);

        let g = self.coeffs_of(generator);
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![u32::MAX; self.q as usize];
        let mut cur = one;
        for k in 0..order {
            let idx = self.index_of(&cur);
            exp.push(idx);
            log[idx as usize] = k;
            cur = self.poly_mulmod(&cur, &g);
        }
        debug_assert_eq!(self.index_of(&cur), exp[0]);

        // Trace is F_p-linear, so it is fixed by its values on 1, x, ..., x^{n-1}.
        let basis_trace: Vec<u32> = (0..self.n as usize)
            .map(|i| {
                let mut mono = vec![0u32; self.n as usize];
                mono[i] = 1;
                self.trace_poly(&mono)
            })
            .collect();
        let p = self.p as u64;
        let trace = (0..self.q)
            .map(|idx| {
                let c = self.coeffs_of(idx);
                (c.iter().zip(&basis_trace).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % p) as u32
            })
            .collect();

        self.exp = exp;
        self.log = log;
        self.trace = trace;
    }

    /// Trace by its definition `x + x^p + ... + x^{p^{n-1}}` on polynomials.
    fn trace_poly(&self, x: &[u32]) -> u32 {
        let mut acc = vec![0u32; self.n as usize];
        let mut cur = x.to_vec();
        for _ in 0..self.n {
            for (a, c) in acc.iter_mut().zip(&cur) {
                *a = (*a + c) % self.p;
            }
            cur = self.poly_pow(&cur, self.p as u64);
        }
        debug_assert!(acc[1..].iter().all(|&c| c == 0), "trace must land in F_p");
        acc[0]
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(self.place[0])
    }

    /// Embeds `c mod p` from the prime subfield.
    pub fn from_prime_subfield(&self, c: i64) -> FieldElement {
        let c = c.rem_euclid(self.p as i64) as u32;
        FieldElement(c * self.place[0])
    }

    /// The `F_p` residue of an element that lies in the prime subfield.
    pub fn to_prime_subfield(&self, x: FieldElement) -> Option<u32> {
        x.0.is_multiple_of(self.place[0]).then(|| x.0 / self.place[0])
    }

    pub fn element(&self, index: u64) -> Result<FieldElement> {
        if index < self.q as u64 {
            Ok(FieldElement(index as u32))
        } else {
            Err(Error::BadElement(index, self.q))
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.n as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse(format!("bad coefficient vector {coeffs:?}")));
        }
        Ok(FieldElement(self.index_of(coeffs)))
    }

    /// Polynomial coefficients, constant term first.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        self.coeffs_of(x.0)
    }

    fn coeffs_of(&self, idx: u32) -> Vec<u32> {
        self.place.iter().map(|&w| (idx / w) % self.p).collect()
    }

    fn index_of(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().zip(&self.place).map(|(&c, &w)| c * w).sum()
    }

    /// All `q` elements in enumeration order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(FieldElement)
    }

    /// The nonzero elements in enumeration order.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.combine(a, b, |x, y, p| (x + y) % p)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.combine(a, b, |x, y, p| (x + p - y) % p)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.sub(FieldElement(0), a)
    }

    fn combine(&self, a: FieldElement, b: FieldElement, op: impl Fn(u32, u32, u32) -> u32) -> FieldElement {
        if self.n == 1 {
            return FieldElement(op(a.0, b.0, self.p));
        }
        let mut r = 0;
        for &w in &self.place {
            r += op((a.0 / w) % self.p, (b.0 / w) % self.p, self.p) * w;
        }
        FieldElement(r)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let k = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % (self.q as u64 - 1);
        FieldElement(self.exp[k as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        Ok(FieldElement(self.exp[((order - self.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `x^e`, with `x^0 = 1` for every `x` (including zero).
    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return self.one();
        }
        if x.0 == 0 {
            return FieldElement(0);
        }
        let order = self.q as u64 - 1;
        let k = (self.log[x.0 as usize] as u128 * e as u128 % order as u128) as usize;
        FieldElement(self.exp[k])
    }

    /// Multiplication by plain polynomial arithmetic modulo the modulus,
    /// independent of the log tables.
    pub fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let r = self.poly_mulmod(&self.coeffs(a), &self.coeffs(b));
        FieldElement(self.index_of(&r))
    }

    /// Absolute trace to `F_p`.
    pub fn trace(&self, x: FieldElement) -> u32 {
        self.trace[x.0 as usize]
    }

    /// First generator of `K^x` in enumeration order.
    pub fn primitive_element(&self) -> FieldElement {
        self.generator
    }

    /// Smallest primitive root of the prime subfield (1 when p = 2).
    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    /// Discrete log to base [`Field::primitive_element`], `None` for zero.
    pub fn log(&self, x: FieldElement) -> Option<u32> {
        (x.0 != 0).then(|| self.log[x.0 as usize])
    }

    /// `g^k` for the primitive element `g`; `k` is reduced mod `q - 1`.
    pub fn exp(&self, k: u64) -> FieldElement {
        FieldElement(self.exp[(k % (self.q as u64 - 1)) as usize])
    }

    /// Discrete log table indexed by element index; entry 0 is `u32::MAX`.
    pub fn log_table(&self) -> &[u32] {
        &self.log
    }

    /// `exp[k] = g^k` index, for `k < q - 1`.
    pub fn exp_table(&self) -> &[u32] {
        &self.exp
    }

    /// Trace indexed by element index.
    pub fn trace_table(&self) -> &[u32] {
        &self.trace
    }

    /// Multiplicative order of a unit.
    pub fn order(&self, x: FieldElement) -> Result<u64> {
        let l = self.log(x).ok_or(Error::DivisionByZero)? as u64;
        let m = self.q as u64 - 1;
        Ok(m / l.gcd(&m).max(1))
    }

    fn one_poly(&self) -> Vec<u32> {
        let mut v = vec![0u32; self.n as usize];
        v[0] = 1;
        v
    }

    fn poly_mulmod(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = self.n as usize;
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce with x^n = -(m_0 + ... + m_{n-1} x^{n-1}).
        for d in (n..2 * n - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..n {
                let m = self.modulus[i] as u64;
                prod[d - n + i] = (prod[d - n + i] + (p - c) * m) % p;
            }
        }
        prod.truncate(n);
        prod.into_iter().map(|c| c as u32).collect()
    }

    fn poly_pow(&self, base: &[u32], mut e: u64) -> Vec<u32> {
        let mut acc = self.one_poly();
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mulmod(&acc, &b);
            }
            b = self.poly_mulmod(&b, &b);
            e >>= 1;
        }
        acc
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, n))` when `q = p^n` with `n >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut m = q;
    let mut n = 0;
    while m.is_multiple_of(p) {
        m /= p;
        n += 1;
    }
    (m == 1).then_some((p, n))
}

/// Distinct prime factors, ascending.
pub fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Multiplicative order of `a` modulo `m` (`a` coprime to `m`).
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let a = a % m;
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
        assert!(k <= m, "{a} is not a unit mod {m}");
    }
    k
}

/// Smallest primitive root modulo the prime `p` (1 for p = 2).
pub fn primitive_root_mod_p(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (2..p).find(|&g| multiplicative_order(g as u64, p as u64) == p as u64 - 1).expect("primes have primitive roots")
}

/// Whether `x -> x^s` permutes a field of order `q`.
pub fn is_invertible_exponent(q: u64, s: u64) -> bool {
    s >= 1 && s.gcd(&(q - 1)) == 1
}

/// The unique `t` in `[1, m)` with `s t = 1 (mod m)`; 0 when `m = 1`.
pub fn mod_inverse(s: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::NotCoprime(s, m));
    }
    if m == 1 {
        return Ok(0);
    }
    let e = (s as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return Err(Error::NotCoprime(s, m));
    }
    Ok(e.x.rem_euclid(m as i128) as u64)
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                divisor.push((c % p as u64) as u32);
                c /= p as u64;
            }
            divisor.push(1);
            if poly_rem_is_zero(poly, &divisor, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(a: &[u32], monic: &[u32], p: u32) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let d = monic.len() - 1;
    for top in (d..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        for (i, &m) in monic.iter().enumerate() {
            let pos = top - d + i;
            r[pos] = (r[pos] + (p - c) * m as u64) % p;
        }
    }
    r[..d].iter().all(|&c| c == 0)
}

/// Smallest monic irreducible of degree `n`, comparing coefficient vectors
/// with the constant term most significant.
fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    let count = (p as u64).pow(n);
    for code in 0..count {
        let mut poly = vec![0u32; n as usize + 1];
        let mut c = code;
        for i in (0..n as usize).rev() {
            poly[i] = (c % p as u64) as u32;
            c /= p as u64;
        }
        poly[n as usize] = 1;
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields() -> Vec<Field> {
        [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (2, 5), (3, 3), (2, 6), (7, 2)]
            .iter()
            .map(|&(p, n)| Field::new(p, n, None).unwrap())
            .collect()
    }

    #[test]
    fn make_field_examples() {
        let f5 = Field::new(5, 1, None).unwrap();
        assert_eq!(f5.q(), 5);
        assert_eq!(f5.modulus(), &[0, 1]);
        let f8 = Field::new(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        assert_eq!(f8.q(), 8);
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(Field::new(2, 2, Some(&[1, 0, 1])), Err(Error::Reducible(..))));
        assert!(matches!(Field::new(2, 21, None), Err(Error::TooLarge(_))));
        assert!(matches!(Field::new(2, 3, Some(&[1, 1, 0])), Err(Error::BadModulus(_))));
    }

    #[test]
    fn x3_x_1_irreducible_by_hand() {
        // no root in F_2 and a cubic without roots has no quadratic factor
        let poly = [1, 1, 0, 1];
        let eval = |x: u32| poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % 2);
        assert!((0..2).all(|x| eval(x) != 0));
        assert!(is_irreducible(&poly, 2));
        assert!(!is_irreducible(&[1, 0, 0, 1], 2)); // x^3 + 1 = (x + 1)(x^2 + x + 1)
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2)); // (x^2 + x + 1)^2, rootless
    }

    #[test]
    fn default_modulus_is_smallest() {
        assert_eq!(Field::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(2, 3, None).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(Field::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn parse_field_strings() {
        assert_eq!(Field::parse("5").unwrap().q(), 5);
        assert_eq!(Field::parse("9").unwrap().q(), 9);
        assert_eq!(Field::parse("2^3").unwrap().q(), 8);
        assert_eq!(Field::parse("2^3:1,1,0,1").unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(Field::parse("6").unwrap_err(), Error::NotPrime(6));
        assert_eq!(Field::parse("4^2").unwrap_err(), Error::NotPrime(4));
        assert!(matches!(Field::parse("x"), Err(Error::Parse(_))));
    }

    #[test]
    fn trace_examples() {
        let f7 = Field::new(7, 1, None).unwrap();
        for x in f7.elements() {
            assert_eq!(f7.trace(x), x.index());
        }
        let f4 = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let omega = f4.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f4.trace(omega), 1);
        assert_eq!(f4.trace(f4.zero()), 0);
    }

    #[test]
    fn trace_is_additive_and_frobenius_invariant() {
        for f in fields().into_iter().filter(|f| f.q() <= 64) {
            let p = f.p();
            for x in f.elements() {
                // definition through table multiplication
                let mut acc = f.zero();
                let mut cur = x;
                for _ in 0..f.n() {
                    acc = f.add(acc, cur);
                    cur = f.pow(cur, p as u64);
                }
                assert_eq!(f.to_prime_subfield(acc), Some(f.trace(x)));
                assert_eq!(f.trace(f.pow(x, p as u64)), f.trace(x));
                for y in f.elements() {
                    assert_eq!(f.trace(f.add(x, y)), (f.trace(x) + f.trace(y)) % p);
                }
            }
        }
    }

    #[test]
    fn arithmetic_small_examples() {
        let f5 = Field::new(5, 1, None).unwrap();
        assert_eq!(f5.inv(FieldElement(2)).unwrap(), FieldElement(3));
        assert_eq!(f5.inv(f5.zero()), Err(Error::DivisionByZero));
        for x in f5.elements() {
            assert_eq!(f5.pow(x, 0), f5.one());
        }
        let f8 = Field::new(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        let omega = f8.from_coeffs(&[0, 1, 0]).unwrap();
        let mut acc = f8.one();
        for _ in 0..7 {
            acc = f8.mul_poly(acc, omega);
        }
        assert_eq!(acc, f8.one());
        assert_eq!(f8.pow(omega, 7), f8.one());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in fields().into_iter().filter(|f| f.q() <= 64) {
            for x in f.units() {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
                assert_eq!(f.pow(x, f.q() as u64 - 1), f.one());
            }
            for x in f.elements() {
                assert_eq!(f.add(x, f.neg(x)), f.zero());
                for y in f.elements() {
                    assert_eq!(f.mul(x, y), f.mul_poly(x, y));
                    assert_eq!(f.sub(f.add(x, y), y), x);
                }
            }
        }
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(primitive_root_mod_p(5), 2);
        assert_eq!(primitive_root_mod_p(7), 3);
        assert_eq!(primitive_root_mod_p(2), 1);
        for f in fields() {
            let g = f.primitive_element();
            assert_eq!(f.order(g).unwrap(), f.q() as u64 - 1);
            // no earlier unit generates
            for u in f.units().take_while(|&u| u != g) {
                assert!(f.order(u).unwrap() < f.q() as u64 - 1);
            }
            let mut seen = std::collections::HashSet::new();
            for k in 0..f.q() as u64 - 1 {
                assert!(seen.insert(f.pow(g, k)));
            }
        }
        let f9 = Field::new(3, 2, None).unwrap();
        let g = f9.primitive_element();
        let powers: Vec<_> = (1..=8).map(|k| f9.pow(g, k)).collect();
        assert_eq!(powers.iter().position(|&x| x == f9.one()), Some(7));
    }

    #[test]
    fn enumeration() {
        let f2 = Field::new(2, 1, None).unwrap();
        assert_eq!(f2.elements().map(|x| x.index()).collect::<Vec<_>>(), vec![0, 1]);
        let f5 = Field::new(5, 1, None).unwrap();
        assert_eq!(f5.elements().map(|x| x.index()).collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
        assert_eq!(Field::new(2, 3, None).unwrap().units().count(), 7);
        let f9 = Field::new(3, 2, None).unwrap();
        assert_eq!(f9.coeffs(f9.one()), vec![1, 0]);
        assert_eq!(f9.coeffs(FieldElement(1)), vec![0, 1]);
    }

    #[test]
    fn exponent_helpers() {
        assert!(is_invertible_exponent(5, 3));
        assert!(!is_invertible_exponent(5, 2));
        assert_eq!(mod_inverse(3, 4), Ok(3));
        assert_eq!(mod_inverse(2, 4), Err(Error::NotCoprime(2, 4)));
        assert_eq!(mod_inverse(5, 1), Ok(0));
        assert_eq!(prime_power(343), Some((7, 3)));
        assert_eq!(prime_power(12), None);
    }
}
