//! The group algebra of `K^x` over `Z[zeta_p]`, and exact checks of the
//! product identities relating Weil sums, `Psi` and the brackets `V^{[t]}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebraic_sets::{t_vectors, PowerMap, VBracket, T_SAMPLES};
use crate::checks::CheckReport;
use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::field::{mod_inverse, Field, FieldElement, FieldSpec};
use crate::spectrum::{spectrum, WeilSpectrum};

/// `sum_u S_u [u]`, stored densely by discrete log of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    field: FieldSpec,
    p: u32,
    coeffs: Vec<CycInt>,
}

impl GroupAlgebraElement {
    pub fn zero(field: &Field) -> GroupAlgebraElement {
        GroupAlgebraElement {
            field: field.spec(),
            p: field.p(),
            coeffs: vec![CycInt::zero(field.p()); field.q() as usize - 1],
        }
    }

    /// `sum_u f(u) [u]`.
    pub fn from_fn(field: &Field, mut f: impl FnMut(FieldElement) -> CycInt) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(field);
        for u in field.units() {
            out.coeffs[field.log(u).expect("unit") as usize] = f(u);
        }
        out
    }

    /// The basis element `[u]`.
    pub fn basis(field: &Field, u: FieldElement) -> Result<GroupAlgebraElement> {
        let l = field.log(u).ok_or(Error::DivisionByZero)?;
        let mut out = GroupAlgebraElement::zero(field);
        out.coeffs[l as usize] = CycInt::one(field.p());
        Ok(out)
    }

    pub fn identity(field: &Field) -> GroupAlgebraElement {
        GroupAlgebraElement::basis(field, field.one()).expect("one is a unit")
    }

    /// A subset of `K^x` as a sum of basis elements; zero is dropped.
    pub fn subset(field: &Field, elems: impl IntoIterator<Item = FieldElement>) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(field);
        let one = CycInt::one(field.p());
        for u in elems {
            if let Some(l) = field.log(u) {
                out.coeffs[l as usize] += &one;
            }
        }
        out
    }

    /// `K^x` itself.
    pub fn all_units(field: &Field) -> GroupAlgebraElement {
        GroupAlgebraElement::subset(field, field.units())
    }

    pub fn from_integers(field: &Field, v: &VBracket) -> GroupAlgebraElement {
        let p = field.p();
        GroupAlgebraElement {
            field: field.spec(),
            p,
            coeffs: v.coeffs.iter().map(|&c| CycInt::from_int(p, c)).collect(),
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Coefficients indexed by discrete log.
    pub fn coeffs(&self) -> &[CycInt] {
        &self.coeffs
    }

    pub fn coeff(&self, field: &Field, u: FieldElement) -> &CycInt {
        &self.coeffs[field.log(u).expect("indexed by units") as usize]
    }

    fn order(&self) -> usize {
        self.coeffs.len()
    }

    fn same_field(&self, other: &GroupAlgebraElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedField)
        }
    }

    pub fn try_add(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.same_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(GroupAlgebraElement { coeffs, ..self.clone_empty() })
    }

    pub fn try_sub(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.same_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(GroupAlgebraElement { coeffs, ..self.clone_empty() })
    }

    /// Convolution: `(ST)_w = sum_{uv = w} S_u T_v`.
    pub fn convolve(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.same_field(other)?;
        let m = self.order();
        let mut out = vec![CycInt::zero(self.p); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[(i + j) % m] += &(a * b);
            }
        }
        Ok(GroupAlgebraElement { coeffs: out, ..self.clone_empty() })
    }

    /// `sum_u conj(S_u) [u^{-1}]`.
    pub fn conj(&self) -> GroupAlgebraElement {
        let m = self.order();
        let mut out = vec![CycInt::zero(self.p); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[(m - i) % m] = a.conj();
        }
        GroupAlgebraElement { coeffs: out, ..self.clone_empty() }
    }

    /// `S^{(t)} = sum_u S_u [u^t]`; colliding terms add up when `t` is not
    /// coprime to `q - 1`.
    pub fn twist(&self, t: i64) -> GroupAlgebraElement {
        let m = self.order() as i64;
        let mut out = vec![CycInt::zero(self.p); m as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[(i as i64 * t).rem_euclid(m) as usize] += a;
        }
        GroupAlgebraElement { coeffs: out, ..self.clone_empty() }
    }

    /// `|S| = sum_u S_u`.
    pub fn total(&self) -> CycInt {
        let mut acc = CycInt::zero(self.p);
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    pub fn scale(&self, k: &CycInt) -> GroupAlgebraElement {
        GroupAlgebraElement { coeffs: self.coeffs.iter().map(|c| c * k).collect(), ..self.clone_empty() }
    }

    pub fn scale_int(&self, k: i64) -> GroupAlgebraElement {
        self.scale(&CycInt::from_int(self.p, k))
    }

    /// Coefficient-wise product.
    pub fn pointwise(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.same_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).collect();
        Ok(GroupAlgebraElement { coeffs, ..self.clone_empty() })
    }

    fn clone_empty(&self) -> GroupAlgebraElement {
        GroupAlgebraElement { field: self.field.clone(), p: self.p, coeffs: Vec::new() }
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self.try_add(rhs).expect("mixed fields")
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self.try_sub(rhs).expect("mixed fields")
    }
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self.convolve(rhs).expect("mixed fields")
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        self.scale_int(-1)
    }
}

impl fmt::Display for GroupAlgebraElement {
    /// Nonzero terms as `(coefficient)[g^i]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            write!(f, "({c})[g^{i}]")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `Psi = sum_u psi(u) [u]`.
pub fn psi_element(field: &Field) -> GroupAlgebraElement {
    GroupAlgebraElement::from_fn(field, |u| CycInt::zeta_pow(field.p(), field.trace(u) as u64))
}

/// `W = sum_u W_u [u]`.
pub fn weil_element(field: &Field, s: u64) -> Result<GroupAlgebraElement> {
    Ok(weil_element_from(&spectrum(field, s)?))
}

pub fn weil_element_from(spec: &WeilSpectrum<'_>) -> GroupAlgebraElement {
    GroupAlgebraElement::from_fn(spec.field(), |u| spec.value(u).clone())
}

/// `W^{[t]} = sum_u W_{t_1 u} ... W_{t_k u} [u]`.
pub fn w_bracket(field: &Field, s: u64, t: &[FieldElement]) -> Result<GroupAlgebraElement> {
    w_bracket_from(&spectrum(field, s)?, t)
}

pub fn w_bracket_from(spec: &WeilSpectrum<'_>, t: &[FieldElement]) -> Result<GroupAlgebraElement> {
    if t.is_empty() || t.len() > crate::algebraic_sets::MAX_K {
        return Err(Error::TooLargeK(t.len()));
    }
    if t.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroCoefficient);
    }
    let field = spec.field();
    Ok(GroupAlgebraElement::from_fn(field, |u| {
        let mut acc = CycInt::one(field.p());
        for &ti in t {
            acc = &acc * spec.value(field.mul(ti, u));
        }
        acc
    }))
}

/// A primitive `k`-th root of unity in `F_p`, embedded in `K`.
pub fn prime_root_of_unity(field: &Field, k: u64) -> Result<FieldElement> {
    let p = field.p() as u64;
    if k == 0 || !(p - 1).is_multiple_of(k) {
        return Err(Error::NotCoprime(k, p - 1));
    }
    let mut lam = 1u64;
    for _ in 0..(p - 1) / k {
        lam = lam * field.gamma() as u64 % p;
    }
    Ok(field.from_prime_subfield(lam as i64))
}

/// `T = sum_{i<k} [lambda^i]` for a primitive `k`-th root of unity `lambda` in `F_p`.
pub fn lateral_t(field: &Field, k: u64) -> Result<GroupAlgebraElement> {
    let lam = prime_root_of_unity(field, k)?;
    Ok(GroupAlgebraElement::subset(field, (0..k).map(|i| field.pow(lam, i))))
}

/// `Omega_u = sum_{i<k} W_{lambda^i u}`.
pub fn omega(spec: &WeilSpectrum<'_>, k: u64) -> Result<GroupAlgebraElement> {
    let field = spec.field();
    let lam = prime_root_of_unity(field, k)?;
    Ok(GroupAlgebraElement::from_fn(field, |u| {
        let mut acc = CycInt::zero(field.p());
        let mut x = u;
        for _ in 0..k {
            acc += spec.value(x);
            x = field.mul(lam, x);
        }
        acc
    }))
}

/// `Phi_u = W_u - W_{-u}`.
pub fn phi(spec: &WeilSpectrum<'_>) -> GroupAlgebraElement {
    let field = spec.field();
    GroupAlgebraElement::from_fn(field, |u| spec.value(u) - spec.value(field.neg(u)))
}

/// `Upsilon_u = (W_u - W_{-u})^2`.
pub fn upsilon(spec: &WeilSpectrum<'_>) -> GroupAlgebraElement {
    let field = spec.field();
    GroupAlgebraElement::from_fn(field, |u| {
        let d = spec.value(u) - spec.value(field.neg(u));
        &d * &d
    })
}

/// `[1] - [-1]`.
pub fn s_element(field: &Field) -> GroupAlgebraElement {
    let minus = GroupAlgebraElement::basis(field, field.neg(field.one())).expect("unit");
    &GroupAlgebraElement::identity(field) - &minus
}

/// A random element with coefficients drawn from `[-bound, bound]` in the
/// reduced basis; about a third of the coefficients are zero.
pub fn random_element(field: &Field, bound: i64, rng: &mut ChaCha8Rng) -> GroupAlgebraElement {
    let p = field.p();
    GroupAlgebraElement::from_fn(field, |_| {
        if rng.gen_range(0..3) == 0 {
            return CycInt::zero(p);
        }
        let len = (p as usize - 1).max(1);
        let cs = (0..len).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
        CycInt::from_reduced(p, cs).expect("right length")
    })
}

fn int(p: u32, v: i64) -> CycInt {
    CycInt::from_int(p, v)
}

/// Exact checks of the product identities for one `(K, s)`. Bracket lengths
/// up to 3 are exhausted for `q <= 7` and sampled ([`T_SAMPLES`] seeded
/// vectors) above that.
pub fn verify_identities(field: &Field, s: u64, seed: u64) -> Result<CheckReport> {
    let spec = spectrum(field, s)?;
    let pm = PowerMap::new(field, s)?;
    let f = field;
    let p = f.p();
    let q = f.q() as i64;
    let m = q - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = CheckReport::new();
    let ctx = || format!("q={q} s={s}");

    let w = weil_element_from(&spec);
    let units = GroupAlgebraElement::all_units(f);
    let one = GroupAlgebraElement::identity(f);
    let psi = psi_element(f);

    basic_laws(f, &[&w, &psi], &mut rng, &mut r);

    // W from Psi, with 1/s taken modulo q - 1
    let inv_s = mod_inverse(s % m as u64, m as u64)? as i64;
    let rhs = &(&psi * &psi.twist(inv_s).conj()) + &units;
    r.record("weil-from-psi", w == rhs, || format!("{}: W = {w}, rhs = {rhs}", ctx()));

    for t in (1..m.max(2)).filter(|t| t.gcd(&m) == 1) {
        let pt = psi.twist(t);
        let lhs = &pt * &pt.conj();
        let want = &one.scale_int(q) - &units;
        r.record("psi-twist-norm", lhs == want, || format!("{}: t={t}", ctx()));
    }

    r.record_eq("weil-norm", &w.total(), &int(p, q), ctx);
    let norm = &w * &w.conj();
    r.record("weil-norm", norm == one.scale_int(q * q), || format!("{}: W conj(W) = {norm}", ctx()));

    // brackets of length 1..=3
    let exhaust = q <= 7;
    for k in 1..=3usize {
        let ts = t_vectors(f, k, exhaust || k == 1, T_SAMPLES, &mut rng);
        for t in ts {
            let wt = w_bracket_from(&spec, &t)?;
            let vt = pm.v_bracket(&t)?;
            let q00 = pm.count_unchecked(&t, f.zero(), f.zero()) as i64;
            let q10 = pm.count_unchecked(&t, f.one(), f.zero()) as i64;
            let qk = q.pow(k as u32);
            let tctx = || format!("{} t={t:?}", ctx());

            // (q - 1)|W^{[t]}| = q^2 Q_00 - q^k
            let lhs = wt.total().scale(&BigInt::from(m));
            r.record_eq("bracket-total", &lhs, &int(p, q * q * q00 - qk), tctx);

            let vtot = vt.total();
            let ok = vtot == qk / q - q * q10 && m * vtot == q * q00 - qk / q;
            r.record("v-total", ok, || format!("{}: |V| = {vtot}", tctx()));

            let prod = &w * &GroupAlgebraElement::from_integers(f, &vt);
            r.record("bracket-factorization", wt == prod, || format!("{}: W^[t] = {wt}, W V = {prod}", tctx()));
        }
    }

    // pairs: V^{[t1,t2]} and |W^{[t1,t2]}|
    let inv = |x: FieldElement| f.inv(x).expect("unit");
    for t1 in f.units() {
        for t2 in f.units() {
            let t = [t1, t2];
            let vt = pm.v_bracket(&t)?;
            let same = t1 == t2;
            let mut ok = vt.total() == if same { q } else { 0 };
            for u in f.units() {
                let qu = pm.count_unchecked(&t, f.one(), u) as i64;
                let v = vt.get(f, u);
                ok &= v == if same { qu } else { qu - 1 };
                ok &= v >= if same { 0 } else { -1 };
            }
            r.record("v-pair", ok, || format!("{} t=({t1}, {t2})", ctx()));

            let total: CycInt = sum_products(&spec, &t);
            r.record_eq("bracket-totals", &total, &int(p, if same { q * q } else { 0 }), || {
                format!("{} t=({t1}, {t2})", ctx())
            });
        }
    }
    r.record_eq("bracket-totals", &w.total(), &int(p, q), ctx);
    let triples = t_vectors(f, 3, exhaust, T_SAMPLES, &mut rng);
    for t in triples {
        let lhs = sum_products(&spec, &t);
        let v12 = pm.v_bracket(&t[..2])?;
        let rhs = int(p, q * q * v12.get(f, inv(t[2])));
        r.record_eq("bracket-totals", &lhs, &rhs, || format!("{} t={t:?}", ctx()));
    }
    let v = pm.v_bracket(&[f.one(), f.one()])?;
    let fourth = sum_products(&spec, &[f.one(); 4]);
    let vsq: i64 = v.coeffs.iter().map(|c| c * c).sum();
    r.record_eq("bracket-totals", &fourth, &int(p, q * q * vsq), ctx);

    // lateral symmetrization for every k dividing p - 1
    let pm1 = p as u64 - 1;
    for k in (1..=pm1.max(1)).filter(|k| pm1.is_multiple_of(*k)) {
        let om = omega(&spec, k)?;
        let t = lateral_t(f, k)?;
        let wt = &w * &t;
        r.record("lateral-sum", om == wt, || format!("{} k={k}", ctx()));

        let ki = k as i64;
        let nonzero_count = om.coeffs().len() as i64;
        r.record("lateral-moments", nonzero_count == m, || format!("{} k={k}", ctx()));
        r.record_eq("lateral-moments", &om.total(), &int(p, ki * q), || format!("{} k={k} first moment", ctx()));
        let sq = om.pointwise(&om)?.total();
        r.record_eq("lateral-moments", &sq, &int(p, ki * q * q), || format!("{} k={k} second moment", ctx()));
        if k == 2 {
            let cube = om.pointwise(&om)?.pointwise(&om)?.total();
            let minus = f.neg(f.one());
            let rhs = int(p, 2 * q * q * (v.get(f, f.one()) + 3 * v.get(f, minus)));
            r.record_eq("lateral-moments", &cube, &rhs, || format!("{} third moment", ctx()));
        }
    }

    if p != 2 {
        bilateral(f, &spec, &pm, &w, &mut r)?;
    }
    Ok(r)
}

/// `sum_u prod_i W_{t_i u}` without building the element.
fn sum_products(spec: &WeilSpectrum<'_>, t: &[FieldElement]) -> CycInt {
    let field = spec.field();
    let mut acc = CycInt::zero(field.p());
    for u in field.units() {
        let mut prod = CycInt::one(field.p());
        for &ti in t {
            prod = &prod * spec.value(field.mul(ti, u));
        }
        acc += &prod;
    }
    acc
}

/// Ring laws of the group algebra on random elements, on `W` and `Psi`, and
/// on every subgroup of `K^x`.
fn basic_laws(f: &Field, fixed: &[&GroupAlgebraElement], rng: &mut ChaCha8Rng, r: &mut CheckReport) {
    let q = f.q() as i64;
    let m = q - 1;
    let p = f.p();
    let units = GroupAlgebraElement::all_units(f);
    let mut elems: Vec<GroupAlgebraElement> = fixed.iter().map(|e| (*e).clone()).collect();
    for _ in 0..4 {
        elems.push(random_element(f, 3, rng));
    }
    let ctx = |i: usize, j: usize| format!("q={q} elements #{i}, #{j}");
    for (i, a) in elems.iter().enumerate() {
        let t = rng.gen_range(-2 * m..=2 * m);
        r.record("algebra-basic", a.twist(t).total() == a.total(), || format!("{} twist {t}", ctx(i, i)));
        r.record("algebra-basic", a.conj().total() == a.total().conj(), || ctx(i, i));
        let au = a * &units;
        r.record("algebra-basic", au == units.scale(&a.total()), || ctx(i, i));
        let mut sq = CycInt::zero(p);
        for c in a.coeffs() {
            sq += &(c * &c.conj());
        }
        let lhs = (a * &a.conj()).coeffs()[0].clone();
        r.record("algebra-basic", lhs == sq, || ctx(i, i));
        for (j, b) in elems.iter().enumerate() {
            r.record("algebra-basic", (a + b).total() == &a.total() + &b.total(), || ctx(i, j));
            r.record("algebra-basic", (a * b).total() == &a.total() * &b.total(), || ctx(i, j));
            r.record("algebra-basic", a * b == b * a, || ctx(i, j));
        }
    }
    // subgroups: one per divisor d of q - 1
    for d in (1..=m).filter(|d| m % d == 0) {
        let step = (m / d) as u64;
        let h = GroupAlgebraElement::subset(f, (0..d as u64).map(|i| f.exp(i * step)));
        let ok =
            h.conj() == h && h.twist(-1) == h && &h * &h == h.scale(&h.total()) && h.total() == CycInt::from_int(p, d);
        r.record("algebra-basic", ok, || format!("q={q} subgroup of order {d}"));
    }
}

/// Identities for `Phi`, `Upsilon`, `U` and `V` (odd characteristic).
fn bilateral(
    f: &Field,
    spec: &WeilSpectrum<'_>,
    pm: &PowerMap<'_>,
    w: &GroupAlgebraElement,
    r: &mut CheckReport,
) -> Result<()> {
    let p = f.p();
    let q = f.q() as i64;
    let s = spec.s();
    let ctx = || format!("q={q} s={s}");
    let one = f.one();
    let minus = f.neg(one);
    let u_t = pm.v_bracket(&[one, minus])?;
    let v_t = pm.v_bracket(&[one, one])?;
    let ue = GroupAlgebraElement::from_integers(f, &u_t);
    let ve = GroupAlgebraElement::from_integers(f, &v_t);
    let t = lateral_t(f, 2)?;
    let ph = phi(spec);
    let ups = upsilon(spec);
    let om = omega(spec, 2)?;

    let ws = w * &s_element(f);
    r.record("bilateral-factorization", ph == ws, || format!("{}: Phi != WS", ctx()));
    let rhs = w * &(&(&t * &ve) - &ue.scale_int(2));
    r.record("bilateral-factorization", ups == rhs, || format!("{}: Upsilon != W(TV - 2U)", ctx()));

    for u in f.units() {
        let (uu, vu) = (u_t.get(f, u), v_t.get(f, u));
        let qd = pm.count_unchecked(&[one, minus], one, u) as i64;
        let qs = pm.count_unchecked(&[one, one], one, u) as i64;
        let ok = uu == qd - 1 && vu == qs && uu >= -1 && vu >= 0;
        r.record("uv-tables", ok, || format!("{} u={u}: U={uu} V={vu}", ctx()));
        r.record("uv-tables", uu == u_t.get(f, f.neg(u)), || format!("{} u={u}: U not even", ctx()));
    }
    let (u1, um1, vm1) = (u_t.get(f, one), u_t.get(f, minus), v_t.get(f, minus));
    r.record("uv-tables", u1 == um1 && um1 == vm1, || format!("{}: U_1={u1} U_-1={um1} V_-1={vm1}", ctx()));
    r.record("uv-tables", u_t.total() == 0 && v_t.total() == q, || format!("{}: totals", ctx()));

    r.record_eq("bilateral-moments", &ph.total(), &CycInt::zero(p), ctx);
    let ph2 = ph.pointwise(&ph)?;
    r.record_eq("bilateral-moments", &ph2.total(), &int(p, 2 * q * q), ctx);
    let v1 = v_t.get(f, one);
    r.record_eq("bilateral-moments", &ph2.pointwise(&om)?.total(), &int(p, 2 * q * q * (v1 - vm1)), ctx);
    let mut acc = 0i64;
    for u in f.units() {
        let x = v_t.get(f, u) + v_t.get(f, f.neg(u)) - 2 * u_t.get(f, u);
        acc += x * x;
    }
    r.record_eq("bilateral-moments", &ph2.pointwise(&ph2)?.total(), &int(p, q * q * acc), ctx);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::exponent_classes;

    fn f(p: u32, n: u32) -> Field {
        Field::new(p, n, None).unwrap()
    }

    #[test]
    fn elementary_examples() {
        let k = f(5, 1);
        let units = GroupAlgebraElement::all_units(&k);
        let one = GroupAlgebraElement::identity(&k);
        assert_eq!(&units * &one, units);
        assert_eq!(units.twist(3), units);
        assert_eq!(units.conj(), units);
        assert_eq!(psi_element(&k).total(), CycInt::from_int(5, -1));
        let w = weil_element(&k, 3).unwrap();
        assert_eq!(w.total(), CycInt::from_int(5, 5));
        assert_eq!(&w * &w.conj(), one.scale_int(25));
        assert_eq!(w_bracket(&k, 3, &[k.one()]).unwrap(), w);
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = GroupAlgebraElement::all_units(&f(5, 1));
        let b = GroupAlgebraElement::all_units(&Field::new(5, 1, Some(&[0, 1])).unwrap());
        assert!(a.convolve(&b).is_ok());
        let c = GroupAlgebraElement::all_units(&f(7, 1));
        assert_eq!(a.convolve(&c), Err(Error::MixedField));
        let e = GroupAlgebraElement::all_units(&f(2, 2));
        let g = GroupAlgebraElement::all_units(&f(3, 1));
        assert_eq!(e.try_add(&g), Err(Error::MixedField));
    }

    /// Convolution against a definition that multiplies field elements
    /// directly rather than adding logs.
    #[test]
    fn convolution_matches_definition() {
        let k = f(3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_element(&k, 4, &mut rng);
        let b = random_element(&k, 4, &mut rng);
        let c = &a * &b;
        for w in k.units() {
            let mut acc = CycInt::zero(3);
            for u in k.units() {
                for v in k.units() {
                    if k.mul_poly(u, v) == w {
                        acc += &(a.coeff(&k, u) * b.coeff(&k, v));
                    }
                }
            }
            assert_eq!(c.coeff(&k, w), &acc);
        }
    }

    #[test]
    fn bracket_examples() {
        let k = f(7, 1);
        let e = |i| k.element(i).unwrap();
        for (t1, t2) in [(1, 1), (2, 2), (1, 3), (3, 5)] {
            let wt = w_bracket(&k, 5, &[e(t1), e(t2)]).unwrap();
            let want = if t1 == t2 { 49 } else { 0 };
            assert_eq!(wt.total(), CycInt::from_int(7, want));
        }
    }

    #[test]
    fn identity_suite_small_fields() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let k = f(p, n);
            for s in exponent_classes(k.q() as u64, p as u64) {
                let report = verify_identities(&k, s, 42).unwrap();
                assert!(report.passed(), "q={} s={s}\n{report}", k.q());
            }
        }
    }
}
