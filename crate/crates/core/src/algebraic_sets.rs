//! Point counts `Q^t_{a,b}`: vectors `v` in `K^k` with `t.v = a` and
//! `v_1^s + ... + v_k^s = b^s`, and the integer brackets `V^{[t]}` built from them.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::checks::CheckReport;
use crate::error::{Error, Result};
use crate::field::{is_invertible_exponent, mod_inverse, Field, FieldElement};

/// Largest vector length accepted by the counting routines.
pub const MAX_K: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QQuery {
    pub t: Vec<FieldElement>,
    pub a: FieldElement,
    pub b: FieldElement,
}

/// `x -> x^s` as a lookup table, shared by all counts for one `(K, s)`.
#[derive(Clone, Debug)]
pub struct PowerMap<'f> {
    field: &'f Field,
    s: u64,
    pow: Vec<u32>,
}

impl<'f> PowerMap<'f> {
    pub fn new(field: &'f Field, s: u64) -> Result<PowerMap<'f>> {
        if !is_invertible_exponent(field.q() as u64, s) {
            return Err(Error::NotInvertibleExponent { q: field.q(), s });
        }
        let pow = field.elements().map(|x| field.pow(x, s).index()).collect();
        Ok(PowerMap { field, s, pow })
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn pow(&self, x: FieldElement) -> FieldElement {
        self.field.element(self.pow[x.index() as usize] as u64).expect("table entry")
    }

    fn pow_idx(&self, x: u32) -> u32 {
        self.pow[x as usize]
    }

    /// Checked `Q^t_{a,b}`.
    pub fn count(&self, query: &QQuery) -> Result<u64> {
        validate_t(&query.t)?;
        Ok(self.count_unchecked(&query.t, query.a, query.b))
    }

    /// Like [`PowerMap::count`] but some coefficients may be zero, as long as
    /// one is a unit.
    pub fn count_general(&self, t: &[FieldElement], a: FieldElement, b: FieldElement) -> Result<u64> {
        if t.is_empty() || t.len() > MAX_K {
            return Err(Error::TooLargeK(t.len()));
        }
        let pos = t.iter().position(|x| !x.is_zero()).ok_or(Error::ZeroCoefficient)?;
        let mut t = t.to_vec();
        let last = t.len() - 1;
        t.swap(pos, last);
        Ok(self.count_unchecked(&t, a, b))
    }

    /// Counts with the last coefficient a unit; earlier ones may be zero.
    /// The hyperplane is solved for the last coordinate, so the cost is
    /// `q^{k-1}`.
    pub(crate) fn count_unchecked(&self, t: &[FieldElement], a: FieldElement, b: FieldElement) -> u64 {
        let f = self.field;
        let (last, rest) = t.split_last().expect("nonempty t");
        let last_inv = f.inv(*last).expect("last coefficient is a unit");
        let target = self.pow_idx(b.index());
        let mut count = 0;
        self.walk(rest, f.zero(), f.zero(), &mut |dot, pows| {
            let vk = f.mul(f.sub(a, dot), last_inv);
            let total = f.add(pows, FieldElement::from_index(self.pow_idx(vk.index())));
            if total.index() == target {
                count += 1;
            }
        });
        count
    }

    /// Visits every prefix vector over `t`, passing `t.v` and `sum v_i^s`.
    fn walk(
        &self,
        t: &[FieldElement],
        dot: FieldElement,
        pows: FieldElement,
        visit: &mut impl FnMut(FieldElement, FieldElement),
    ) {
        let f = self.field;
        match t.split_first() {
            None => visit(dot, pows),
            Some((ti, rest)) => {
                for v in f.elements() {
                    let d = f.add(dot, f.mul(*ti, v));
                    let ps = f.add(pows, FieldElement::from_index(self.pow_idx(v.index())));
                    self.walk(rest, d, ps, visit);
                }
            }
        }
    }

    /// The full table `Q[a][b]` (indexed by element index) by enumerating
    /// all of `K^k`. Independent of the hyperplane method.
    pub fn table(&self, t: &[FieldElement]) -> Result<Vec<Vec<u64>>> {
        validate_t(t)?;
        let f = self.field;
        let q = f.q() as usize;
        // b is recovered from b^s through the inverse power map.
        let mut root = vec![0u32; q];
        for x in f.elements() {
            root[self.pow_idx(x.index()) as usize] = x.index();
        }
        let mut table = vec![vec![0u64; q]; q];
        self.walk(t, f.zero(), f.zero(), &mut |dot, pows| {
            table[dot.index() as usize][root[pows.index() as usize] as usize] += 1;
        });
        Ok(table)
    }

    /// `V^{[t]}` from a single pass over the hyperplane `t.v = 1`.
    pub fn v_bracket(&self, t: &[FieldElement]) -> Result<VBracket> {
        validate_t(t)?;
        let f = self.field;
        let (last, rest) = t.split_last().expect("nonempty t");
        let last_inv = f.inv(*last)?;
        let one = f.one();
        let mut hist = vec![0u64; f.q() as usize];
        self.walk(rest, f.zero(), f.zero(), &mut |dot, pows| {
            let vk = f.mul(f.sub(one, dot), last_inv);
            let total = f.add(pows, FieldElement::from_index(self.pow_idx(vk.index())));
            hist[total.index() as usize] += 1;
        });
        let base = hist[0] as i64;
        let m = f.q() as usize - 1;
        let mut coeffs = vec![0i64; m];
        for u in f.units() {
            let l = f.log(u).expect("unit") as usize;
            coeffs[l] = hist[self.pow_idx(u.index()) as usize] as i64 - base;
        }
        Ok(VBracket { t: t.to_vec(), coeffs })
    }
}

fn validate_t(t: &[FieldElement]) -> Result<()> {
    if t.is_empty() || t.len() > MAX_K {
        return Err(Error::TooLargeK(t.len()));
    }
    if t.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroCoefficient);
    }
    Ok(())
}

/// `Q^t_{a,b}` over `K` for exponent `s`.
pub fn q_count(field: &Field, s: u64, query: &QQuery) -> Result<u64> {
    PowerMap::new(field, s)?.count(query)
}

/// `V^{[t]}_u = Q^t_{1,u} - Q^t_{1,0}` for every unit `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VBracket {
    pub t: Vec<FieldElement>,
    /// Indexed by the discrete log of `u`.
    pub coeffs: Vec<i64>,
}

impl VBracket {
    pub fn get(&self, field: &Field, u: FieldElement) -> i64 {
        self.coeffs[field.log(u).expect("V is indexed by units") as usize]
    }

    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

pub fn v_bracket(field: &Field, s: u64, t: &[FieldElement]) -> Result<VBracket> {
    PowerMap::new(field, s)?.v_bracket(t)
}

/// `U = V^{[1,-1]}`.
pub fn u_table(field: &Field, s: u64) -> Result<VBracket> {
    v_bracket(field, s, &[field.one(), field.neg(field.one())])
}

/// `V = V^{[1,1]}`.
pub fn v_table(field: &Field, s: u64) -> Result<VBracket> {
    v_bracket(field, s, &[field.one(), field.one()])
}

/// Uniformly random vector of `k` units.
pub(crate) fn random_units(field: &Field, k: usize, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    (0..k).map(|_| field.element(rng.gen_range(1..field.q() as u64)).expect("in range")).collect()
}

/// Every vector in `(K^x)^k`, in lexicographic enumeration order.
pub(crate) fn all_unit_vectors(field: &Field, k: usize) -> Vec<Vec<FieldElement>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                field.units().map(move |u| {
                    let mut v = prefix.clone();
                    v.push(u);
                    v
                })
            })
            .collect();
    }
    out
}

/// The `t` vectors examined for length `k`: all of them when `exhaust`,
/// otherwise `samples` seeded draws.
pub(crate) fn t_vectors(
    field: &Field,
    k: usize,
    exhaust: bool,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Vec<FieldElement>> {
    if exhaust {
        all_unit_vectors(field, k)
    } else {
        (0..samples).map(|_| random_units(field, k, rng)).collect()
    }
}

/// Number of sampled `t` vectors when exhaustion is skipped.
pub const T_SAMPLES: usize = 20;

/// Exact checks of the point-count identities for `k <= k_max`. Lengths up
/// to 2 are exhausted, longer ones use [`T_SAMPLES`] seeded vectors.
pub fn verify_q_lemmas(field: &Field, s: u64, k_max: usize, seed: u64) -> Result<CheckReport> {
    if k_max == 0 || k_max + 1 > MAX_K {
        return Err(Error::TooLargeK(k_max));
    }
    let pm = PowerMap::new(field, s)?;
    let f = field;
    let q = f.q() as u64;
    let m = q - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = CheckReport::new();
    let ctx = |t: &[FieldElement], extra: String| format!("q={q} s={s} t={t:?} {extra}");

    for k in 1..=k_max {
        let qk1 = q.pow(k as u32 - 1);
        for t in t_vectors(f, k, k <= 2, T_SAMPLES, &mut rng) {
            let table = pm.table(&t)?;
            let at = |a: FieldElement, b: FieldElement| table[a.index() as usize][b.index() as usize];
            let q00 = at(f.zero(), f.zero());
            r.record("q-nonnegative", q00 >= 1, || ctx(&t, "Q_00 = 0".into()));

            // the hyperplane counter agrees with full enumeration
            for a in f.elements() {
                for b in f.elements() {
                    let c = pm.count_unchecked(&t, a, b);
                    r.record("q-count-consistency", c == at(a, b), || ctx(&t, format!("a={a} b={b}")));
                }
            }

            // row and column sums
            for b in f.elements() {
                let col: u64 = f.elements().map(|a| at(a, b)).sum();
                let row: u64 = f.elements().map(|a| at(b, a)).sum();
                r.record("q-row-sums", col == qk1 && row == qk1, || ctx(&t, format!("b={b} sums {col}, {row}")));
            }

            // scaling of t, and joint scaling of (a, b)
            for u in f.units() {
                let ut: Vec<_> = t.iter().map(|&x| f.mul(u, x)).collect();
                let scaled = pm.table(&ut)?;
                let uinv = f.inv(u)?;
                for a in f.elements() {
                    for b in f.elements() {
                        let lhs = scaled[a.index() as usize][b.index() as usize];
                        let ok = lhs == at(f.mul(a, uinv), b) && at(f.mul(u, a), f.mul(u, b)) == at(a, b);
                        r.record("q-scaling", ok, || ctx(&t, format!("u={u} a={a} b={b}")));
                    }
                }
            }

            // zero targets
            for a in f.units() {
                let (x, y) = (at(a, f.zero()), at(f.zero(), a));
                let ok = x == y && (m * x) as i128 == qk1 as i128 - q00 as i128;
                r.record("q-zero-target", ok, || ctx(&t, format!("a={a}: {x}, {y}, Q_00={q00}")));
            }
            for b in f.elements() {
                let col: u64 = f.units().map(|a| at(a, b)).sum();
                let row: u64 = f.units().map(|a| at(b, a)).sum();
                let ok = if b.is_zero() {
                    col as i128 == qk1 as i128 - q00 as i128 && row == col
                } else {
                    (m * col) as i128 == (q * qk1) as i128 - 2 * qk1 as i128 + q00 as i128 && row == col
                };
                r.record("q-zero-target", ok, || ctx(&t, format!("b={b}: {col}, {row}")));
            }

            // lifting to k + 1 coordinates with a leading a/b (possibly zero)
            let mut lifted = vec![0u64; q as usize];
            for c in f.elements() {
                let mut t2 = vec![c];
                t2.extend_from_slice(&t);
                lifted[c.index() as usize] = pm.count_unchecked(&t2, f.zero(), f.zero());
            }
            for b in f.units() {
                for a in f.elements() {
                    let c = f.div(a, b)?;
                    let lhs = (m * at(a, b)) as i128;
                    let rhs = lifted[c.index() as usize] as i128 - q00 as i128;
                    r.record("q-lift", lhs == rhs, || ctx(&t, format!("a={a} b={b}: {lhs} != {rhs}")));
                }
            }

            // closed forms for one and two coordinates
            if k == 1 {
                for a in f.elements() {
                    for b in f.elements() {
                        let want = u64::from(a == f.mul(t[0], b));
                        r.record("q-small-k", at(a, b) == want, || ctx(&t, format!("a={a} b={b}")));
                    }
                }
            }
            if k == 2 {
                let same = t[0] == t[1];
                for a in f.elements() {
                    for b in f.elements() {
                        if !a.is_zero() && !b.is_zero() {
                            continue;
                        }
                        let want =
                            if a.is_zero() && b.is_zero() { 1 + if same { m } else { 0 } } else { u64::from(!same) };
                        r.record("q-small-k", at(a, b) == want, || ctx(&t, format!("a={a} b={b}")));
                    }
                }
            }

            // invariance under permuting t
            if k >= 2 {
                let mut rev = t.clone();
                rev.reverse();
                r.record("q-permutation", pm.table(&rev)? == table, || ctx(&t, "reversed".into()));
            }
        }
    }

    if k_max >= 2 {
        special_values(&pm, &mut r)?;
    }
    Ok(r)
}

fn special_values(pm: &PowerMap<'_>, r: &mut CheckReport) -> Result<()> {
    let f = pm.field();
    let (q, s) = (f.q(), pm.s());
    let one = f.one();
    let minus = f.neg(one);
    let diff = pm.table(&[one, minus])?;
    let sum = pm.table(&[one, one])?;
    let at = |tab: &Vec<Vec<u64>>, a: FieldElement, b: FieldElement| tab[a.index() as usize][b.index() as usize];
    for w in f.elements() {
        let ok = at(&diff, one, w) == at(&diff, one, f.neg(w));
        r.record("q-special-values", ok, || format!("q={q} s={s} reflection at w={w}"));
    }
    let odd_p = f.p() != 2;
    if odd_p {
        let x = at(&diff, one, one) as i64 - 1;
        let y = at(&diff, one, minus) as i64 - 1;
        let z = at(&sum, one, minus) as i64;
        r.record("q-special-values", x == y && y == z, || format!("q={q} s={s}: {x}, {y}, {z}"));
    }
    // w* = 2^{1/s - 1}, with 1/s modulo q - 1
    let special = if odd_p {
        let two = f.from_prime_subfield(2);
        let inv = mod_inverse(s % (q as u64 - 1), q as u64 - 1)?;
        Some(f.div(f.pow(two, inv), two)?)
    } else {
        None
    };
    for w in f.elements() {
        let odd = at(&sum, one, w).is_odd();
        r.record("q-special-values", odd == (Some(w) == special), || {
            format!("q={q} s={s} parity at w={w}: Q={}", at(&sum, one, w))
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32, n: u32) -> Field {
        Field::new(p, n, None).unwrap()
    }

    /// Direct count over all of K^k with no shared machinery.
    fn naive(field: &Field, s: u64, t: &[FieldElement], a: FieldElement, b: FieldElement) -> u64 {
        let q = field.q() as u64;
        let k = t.len() as u32;
        let bs = field.pow(b, s);
        (0..q.pow(k))
            .filter(|&code| {
                let v: Vec<_> = (0..k).map(|i| field.element(code / q.pow(i) % q).unwrap()).collect();
                let dot = v.iter().zip(t).fold(field.zero(), |acc, (&x, &c)| field.add(acc, field.mul_poly(x, c)));
                let ps = v.iter().fold(field.zero(), |acc, &x| field.add(acc, field.pow(x, s)));
                dot == a && ps == bs
            })
            .count() as u64
    }

    #[test]
    fn counts_match_naive() {
        for (p, n, s) in [(5, 1, 3), (7, 1, 5), (2, 3, 3), (3, 2, 5)] {
            let k = f(p, n);
            let pm = PowerMap::new(&k, s).unwrap();
            for t in all_unit_vectors(&k, 2) {
                for a in k.elements() {
                    for b in k.elements() {
                        assert_eq!(pm.count_unchecked(&t, a, b), naive(&k, s, &t, a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        let k = f(5, 1);
        let e = |i| k.element(i).unwrap();
        let one = k.one();
        assert_eq!(q_count(&k, 3, &QQuery { t: vec![e(2)], a: e(4), b: e(2) }).unwrap(), 1);
        assert_eq!(q_count(&k, 3, &QQuery { t: vec![e(2)], a: e(3), b: e(2) }).unwrap(), 0);
        let q = q_count(&k, 3, &QQuery { t: vec![one, one], a: k.zero(), b: k.zero() }).unwrap();
        assert_eq!(q, 5);
        // 1/3 mod 4 = 3, so w = 2^{3-1} = 4
        for w in k.elements() {
            let c = q_count(&k, 3, &QQuery { t: vec![one, one], a: one, b: w }).unwrap();
            assert_eq!(c % 2 == 1, w == e(4), "w={w} count={c}");
        }
        let f3 = f(3, 1);
        let t = vec![f3.one(), f3.one()];
        let total: u64 =
            f3.elements().map(|b| q_count(&f3, 1, &QQuery { t: t.clone(), a: f3.one(), b }).unwrap()).sum();
        assert_eq!(total, 3);
    }

    #[test]
    fn errors() {
        let k = f(5, 1);
        let one = k.one();
        let zero = k.zero();
        assert_eq!(q_count(&k, 3, &QQuery { t: vec![one, zero], a: one, b: one }), Err(Error::ZeroCoefficient));
        assert_eq!(q_count(&k, 3, &QQuery { t: vec![one; 5], a: one, b: one }), Err(Error::TooLargeK(5)));
        assert_eq!(q_count(&k, 3, &QQuery { t: vec![], a: one, b: one }), Err(Error::TooLargeK(0)));
        assert!(matches!(
            q_count(&k, 2, &QQuery { t: vec![one], a: one, b: one }),
            Err(Error::NotInvertibleExponent { .. })
        ));
    }

    #[test]
    fn brackets() {
        for (k, s) in [(f(5, 1), 3), (f(7, 1), 5), (f(3, 2), 5), (f(13, 1), 5)] {
            let v = v_table(&k, s).unwrap();
            let u = u_table(&k, s).unwrap();
            assert_eq!(v.total(), k.q() as i64);
            assert_eq!(u.total(), 0);
            let m1 = k.neg(k.one());
            assert_eq!(u.get(&k, k.one()), u.get(&k, m1));
            assert_eq!(u.get(&k, m1), v.get(&k, m1));
            assert!(v.coeffs.iter().all(|&c| c >= 0) && u.coeffs.iter().all(|&c| c >= -1));
        }
    }

    #[test]
    fn lemma_suite_small_fields() {
        for (k, s) in [(f(2, 1), 1), (f(3, 1), 1), (f(5, 1), 3), (f(7, 1), 5), (f(2, 3), 3), (f(3, 2), 5), (f(2, 2), 1)]
        {
            let report = verify_q_lemmas(&k, s, 3, 42).unwrap();
            assert!(report.passed(), "q={} s={s}\n{report}", k.q());
        }
    }
}
