//! Weil sums `W_u = sum_x psi(x^s - u x)`, their spectra, and the Galois
//! permutation of the value set.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::checks::CheckReport;
use crate::cyclotomic::{vp_int, CycInt, Histogram, QuadDecomp, Valuation};
use crate::error::{Error, Result};
use crate::field::{is_invertible_exponent, mod_inverse, multiplicative_order, Field, FieldElement};

/// A single Weil sum with its histogram of exponents of `zeta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeilValue {
    pub value: CycInt,
    pub histogram: Histogram,
    pub quad: Option<QuadDecomp>,
}

impl WeilValue {
    pub fn from_histogram(histogram: Histogram) -> WeilValue {
        let value = histogram.reduce();
        let quad = if histogram.p % 4 == 1 { value.quad_decompose().ok().flatten() } else { None };
        WeilValue { value, histogram, quad }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.value.as_integer()
    }

    /// An integer, `(I + J*sqrt(p))/2`, or the reduced coefficient form.
    pub fn render(&self) -> String {
        if let Some(r) = self.value.as_integer() {
            return r.to_string();
        }
        match &self.quad {
            Some(d) => d.pretty(self.histogram.p),
            None => format!("[{}]", self.value),
        }
    }
}

fn check_exponent(field: &Field, s: u64) -> Result<()> {
    if is_invertible_exponent(field.q() as u64, s) {
        Ok(())
    } else {
        Err(Error::NotInvertibleExponent { q: field.q(), s })
    }
}

/// `W_u` straight from the definition, one field exponentiation per `x`.
pub fn weil_sum(field: &Field, s: u64, u: FieldElement) -> Result<WeilValue> {
    check_exponent(field, s)?;
    let mut counts = vec![0u64; field.p() as usize];
    for x in field.elements() {
        let arg = field.sub(field.pow(x, s), field.mul(u, x));
        counts[field.trace(arg) as usize] += 1;
    }
    Ok(WeilValue::from_histogram(Histogram::new(field.p(), counts)))
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    pub value: WeilValue,
    pub frequency: u64,
}

/// The multiset `{W_u : u in K^x}`. Distinct values are kept in order of
/// first occurrence as `u` runs through the units in enumeration order.
#[derive(Clone, Debug)]
pub struct WeilSpectrum<'f> {
    field: &'f Field,
    s: u64,
    entries: Vec<SpectrumEntry>,
    /// Value index for each unit, indexed by `u.index() - 1`.
    per_u: Vec<u32>,
}

impl<'f> WeilSpectrum<'f> {
    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn num_values(&self) -> usize {
        self.entries.len()
    }

    /// Index into [`WeilSpectrum::entries`] of `W_u`, `u != 0`.
    pub fn value_index(&self, u: FieldElement) -> usize {
        assert!(!u.is_zero(), "the spectrum is indexed by units");
        self.per_u[u.index() as usize - 1] as usize
    }

    pub fn value(&self, u: FieldElement) -> &CycInt {
        &self.entries[self.value_index(u)].value.value
    }

    pub fn frequencies(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.frequency).collect()
    }

    pub fn is_rational(&self) -> bool {
        self.entries.iter().all(|e| e.value.value.is_rational())
    }

    pub fn rendered_values(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.value.render()).collect()
    }
}

/// All Weil sums over the units, O(q^2) table lookups in total.
pub fn spectrum(field: &Field, s: u64) -> Result<WeilSpectrum<'_>> {
    check_exponent(field, s)?;
    let p = field.p();
    let q = field.q();
    let order = q as usize - 1;
    let exp = field.exp_table();
    let log = field.log_table();
    let trace = field.trace_table();

    // Tr(g^j) for j in 0..2(q-1), so that Tr(u x) = tr_exp[log u + log x].
    let tr_exp: Vec<u32> = (0..2 * order).map(|j| trace[exp[j % order] as usize]).collect();
    // p + Tr(x^s) with x = g^k.
    let s_red = (s % order as u64) as usize;
    let tr_pow: Vec<u32> = (0..order).map(|k| p + tr_exp[k * s_red % order]).collect();

    let mut entries: Vec<SpectrumEntry> = Vec::new();
    let mut index: HashMap<Vec<i64>, u32> = HashMap::new();
    let mut per_u = Vec::with_capacity(order);
    let mut counts = vec![0u64; p as usize];
    for u in field.units() {
        counts.iter_mut().for_each(|c| *c = 0);
        counts[0] = 1; // x = 0
        let lu = log[u.index() as usize] as usize;
        let shifted = &tr_exp[lu..lu + order];
        for (&a, &b) in tr_pow.iter().zip(shifted) {
            let mut d = a - b;
            if d >= p {
                d -= p;
            }
            counts[d as usize] += 1;
        }
        let top = counts[p as usize - 1] as i64;
        let key: Vec<i64> = if p == 2 {
            vec![counts[0] as i64 - top]
        } else {
            counts[..p as usize - 1].iter().map(|&c| c as i64 - top).collect()
        };
        let next = entries.len() as u32;
        let idx = *index.entry(key).or_insert(next);
        if idx == next {
            entries.push(SpectrumEntry {
                value: WeilValue::from_histogram(Histogram::new(p, counts.clone())),
                frequency: 0,
            });
        }
        debug_assert_eq!(entries[idx as usize].value.histogram.counts, counts);
        entries[idx as usize].frequency += 1;
        per_u.push(idx);
    }
    Ok(WeilSpectrum { field, s, entries, per_u })
}

/// Whether `s` is a power of `p` modulo `q - 1`.
pub fn is_degenerate(q: u64, p: u64, s: u64) -> bool {
    let m = q - 1;
    if m <= 1 {
        return true;
    }
    let target = s % m;
    let mut pk = 1 % m;
    loop {
        if pk == target {
            return true;
        }
        pk = pk * p % m;
        if pk == 1 % m {
            return false;
        }
    }
}

/// `1/s` modulo `q - 1`: the inverse that relates equivalent exponents.
pub fn inverse_mod_q_minus_1(q: u64, s: u64) -> Result<u64> {
    mod_inverse(s % (q - 1).max(1), q - 1)
}

/// `1/s` modulo `p - 1`: the inverse in the Galois multiplier `gamma^{1 - 1/s}`.
pub fn inverse_mod_p_minus_1(p: u64, s: u64) -> Result<u64> {
    mod_inverse(s % (p - 1).max(1), p - 1)
}

/// The orbit of `s` under `s -> p s` and `s -> 1/s` modulo `q - 1`, ascending.
pub fn exponent_orbit(q: u64, p: u64, s: u64) -> Result<Vec<u64>> {
    let m = q - 1;
    if m <= 1 {
        return Ok(vec![1]);
    }
    if !is_invertible_exponent(q, s) {
        return Err(Error::NotCoprime(s, m));
    }
    let mut seen = vec![s % m];
    let mut frontier = vec![s % m];
    while let Some(t) = frontier.pop() {
        for next in [t * p % m, inverse_mod_q_minus_1(q, t)?] {
            if !seen.contains(&next) {
                seen.push(next);
                frontier.push(next);
            }
        }
    }
    seen.sort_unstable();
    Ok(seen)
}

/// Least member of the equivalence class of `s`.
pub fn canonical_exponent(q: u64, p: u64, s: u64) -> Result<u64> {
    Ok(exponent_orbit(q, p, s)?[0])
}

/// One representative (the least) per equivalence class of invertible
/// exponents, ascending.
pub fn exponent_classes(q: u64, p: u64) -> Vec<u64> {
    let m = q - 1;
    if m <= 1 {
        return vec![1];
    }
    let mut covered = vec![false; m as usize];
    let mut reps = Vec::new();
    for s in 1..m {
        if covered[s as usize] || s.gcd(&m) != 1 {
            continue;
        }
        reps.push(s);
        for t in exponent_orbit(q, p, s).expect("s is invertible") {
            covered[t as usize] = true;
        }
    }
    reps
}

/// `gamma^{1 - 1/s}` in `F_p`, with `1/s` taken modulo `p - 1`.
pub fn tau_multiplier(field: &Field, s: u64) -> Result<u32> {
    let p = field.p() as u64;
    if p == 2 {
        return Ok(1);
    }
    let inv = inverse_mod_p_minus_1(p, s)?;
    let e = (1 + (p - 1) - inv) % (p - 1);
    let mut acc = 1u64;
    for _ in 0..e {
        acc = acc * field.gamma() as u64 % p;
    }
    Ok(acc as u32)
}

/// The restriction of `zeta -> zeta^gamma` to the value set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauAction {
    /// The multiplier `lambda` as a residue mod p.
    pub lambda: u32,
    /// `mapping[i]` is the value index of `tau(value i)`.
    pub mapping: Vec<usize>,
    pub cycles: Vec<Vec<usize>>,
    /// Cycle lengths, descending.
    pub cycle_type: Vec<usize>,
    pub order: u64,
}

/// Builds `tau(W_u) = W_{lambda u}` and checks it is well defined.
pub fn tau_action(spec: &WeilSpectrum<'_>) -> Result<TauAction> {
    let field = spec.field;
    let lambda = tau_multiplier(field, spec.s)?;
    let lam = field.from_prime_subfield(lambda as i64);
    let mut mapping = vec![usize::MAX; spec.num_values()];
    for u in field.units() {
        let from = spec.value_index(u);
        let to = spec.value_index(field.mul(lam, u));
        if mapping[from] == usize::MAX {
            mapping[from] = to;
        } else if mapping[from] != to {
            return Err(Error::Inconsistent(format!(
                "tau is not well defined at u = {u}: value {from} maps to both {} and {to}",
                mapping[from]
            )));
        }
    }
    let mut seen = vec![false; mapping.len()];
    let mut cycles = Vec::new();
    for start in 0..mapping.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = mapping[i];
        }
        if i != start {
            return Err(Error::Inconsistent("tau is not a permutation".into()));
        }
        cycles.push(cycle);
    }
    let mut cycle_type: Vec<usize> = cycles.iter().map(Vec::len).collect();
    cycle_type.sort_unstable_by(|a, b| b.cmp(a));
    let order = cycle_type.iter().fold(1u64, |acc, &k| acc.lcm(&(k as u64)));
    Ok(TauAction { lambda, mapping, cycles, cycle_type, order })
}

/// `(p - 1) / gcd(p - 1, s - 1)`.
pub fn galois_degree(p: u64, s: u64) -> u64 {
    (p - 1) / (p - 1).gcd(&(s - 1)).max(1)
}

/// Which of the optional (more expensive) spectrum checks to run.
#[derive(Clone, Copy, Debug)]
pub struct SpectrumCheckOptions {
    /// `sum_u W_u conj(W_u) = q^2`, O(p^2) per distinct value.
    pub second_moment: bool,
    /// `sigma^j(W_u) = W_{lambda^j u}` for every unit and every `j`.
    pub full_galois: bool,
    /// Float sanity checks on the complex embedding.
    pub embedding: bool,
}

impl Default for SpectrumCheckOptions {
    fn default() -> Self {
        SpectrumCheckOptions { second_moment: true, full_galois: false, embedding: true }
    }
}

/// Per-pair invariants of a spectrum and its Galois action.
pub fn check_spectrum(spec: &WeilSpectrum<'_>, tau: &TauAction, opts: SpectrumCheckOptions) -> CheckReport {
    let field = spec.field;
    let (p, q, n, s) = (field.p(), field.q() as u64, field.n(), spec.s);
    let pb = p as u64;
    let ctx = || format!("q={q} s={s}");
    let mut r = CheckReport::new();
    let degenerate = is_degenerate(q, pb, s);
    let values: Vec<&CycInt> = spec.entries.iter().map(|e| &e.value.value).collect();

    // global sums
    let total: u64 = spec.entries.iter().map(|e| e.frequency).sum();
    r.record_eq("frequency-total", &total, &(q - 1), ctx);
    let mut sum = CycInt::zero(p);
    for e in &spec.entries {
        sum = &sum + &e.value.value.scale(&BigInt::from(e.frequency));
    }
    r.record_eq("sum-of-values", &sum, &CycInt::from_int(p, q), ctx);
    if opts.second_moment {
        r.record_eq("second-moment", &second_moment(spec), &CycInt::from_int(p, q * q), ctx);
    }
    let w0 = weil_sum_at_zero(field, s);
    r.record_eq("zero-value", &w0, &CycInt::zero(p), ctx);

    // reality
    for v in &values {
        r.record("reality", v.conj() == **v, || format!("{}: {v} is not real", ctx()));
        if opts.embedding && q <= 1 << 10 {
            let z = v.complex_embed();
            r.record("reality-embedding", z.im.abs() < 1e-9, || format!("{}: im = {}", ctx(), z.im));
        }
    }

    // Galois action
    let gamma = field.gamma() as u64;
    for (i, v) in values.iter().enumerate() {
        let image = v.galois_apply(gamma).expect("gamma is a unit mod p");
        r.record("galois-action", &image == values[tau.mapping[i]], || {
            format!("{}: sigma({v}) = {image}, tau gives {}", ctx(), values[tau.mapping[i]])
        });
    }
    if opts.full_galois {
        let lam = field.from_prime_subfield(tau.lambda as i64);
        for u in field.units() {
            let mut g = 1u64;
            let mut lu = u;
            for j in 0..pb.max(2) - 1 {
                let lhs = spec.value(u).galois_apply(g).expect("unit");
                let ok = &lhs == spec.value(lu);
                r.record("galois-action-full", ok, || format!("{}: u={u} j={j}", ctx()));
                g = g * gamma % pb;
                lu = field.mul(lam, lu);
            }
        }
    }
    let m = galois_degree(pb, s);
    let lambda_order = multiplicative_order(tau.lambda as u64, pb);
    r.record("galois-degree", tau.order == m && lambda_order == m, || {
        format!("{}: tau order {}, formula {m}, ord(lambda) {lambda_order}", ctx(), tau.order)
    });
    if p > 2 {
        r.record("galois-degree", (pb - 1).is_multiple_of(2 * m), || format!("{}: p != 1 mod 2m (m={m})", ctx()));
    }

    // cycle structure
    for cycle in &tau.cycles {
        let k = cycle.len() as u64;
        let f0 = spec.entries[cycle[0]].frequency;
        let ok = m.is_multiple_of(k)
            && cycle.iter().all(|&i| spec.entries[i].frequency == f0)
            && f0.is_multiple_of((m / k.max(1)).max(1));
        r.record("frequency-divisibility", ok, || format!("{}: cycle {cycle:?} frequencies", ctx()));
    }
    let max_len = tau.cycle_type.first().copied().unwrap_or(0) as u64;
    let bound_ok = if p == 2 { max_len == 1 } else { max_len <= (pb - 1) / 2 };
    r.record("cycle-length-bound", bound_ok, || format!("{}: cycle type {:?}", ctx(), tau.cycle_type));
    r.record("single-cycle", (tau.cycles.len() == 1) == (q == 2), || {
        format!("{}: cycle type {:?}", ctx(), tau.cycle_type)
    });

    // classification theorems
    let num = spec.num_values();
    let rational = spec.is_rational();
    if degenerate {
        let mut expected = vec![CycInt::from_int(p, q)];
        if q > 2 {
            expected.push(CycInt::zero(p));
        }
        let mut got: Vec<CycInt> = values.iter().map(|v| (*v).clone()).collect();
        got.sort();
        expected.sort();
        r.record("degenerate-values", got == expected, || format!("{}: values {:?}", ctx(), spec.rendered_values()));
    }
    r.record("three-valued-criterion", (num >= 3) == !degenerate, || {
        format!("{}: {num} values, degenerate = {degenerate}", ctx())
    });
    let one_mod = (s - 1) % (pb - 1).max(1) == 0;
    r.record("rationality-criterion", rational == one_mod, || {
        format!("{}: rational = {rational}, s = 1 mod p-1 is {one_mod}", ctx())
    });
    r.record("three-valued-rational", num != 3 || rational, || format!("{}: irrational 3-valued", ctx()));
    let exceptional = q == 5 && s % 4 == 3;
    r.record("four-valued-rational", num != 4 || rational || exceptional, || {
        format!("{}: irrational 4-valued {:?}", ctx(), spec.rendered_values())
    });

    // bounds
    for e in &spec.entries {
        let h = &e.value.histogram;
        let mut ok = h.total == q && h.counts[0] >= 1;
        if !degenerate {
            ok &= h.counts.iter().all(|&w| w < q);
            if opts.embedding {
                ok &= e.value.value.complex_embed().norm() < q as f64;
            }
        }
        r.record("histogram-bounds", ok, || format!("{}: histogram {:?}", ctx(), h.counts));

        if let Some(v) = e.value.as_integer() {
            let val = vp_int(&v, p);
            let positive = val >= Valuation::Finite(1);
            let below_q = degenerate || val == Valuation::Infinite || val < Valuation::Finite(n);
            r.record("valuation-bounds", positive && below_q, || format!("{}: v_p({v}) = {val}", ctx()));
        }
        if let Some(d) = &e.value.quad {
            let mut ok = d.i.is_even() == d.j.is_even() && vp_int(&d.i, p) >= Valuation::Finite(1);
            if !degenerate {
                let bound = BigInt::from(2 * (q - 1));
                let pm1 = BigInt::from(pb - 1);
                let qb = BigInt::from(q);
                ok &= &d.i * &pm1 > -bound.clone() && d.i > -qb.clone() && d.i < BigInt::from(2 * q);
                ok &= d.j.abs() * &pm1 <= bound && d.j.abs() < qb;
            }
            r.record("quadratic-bounds", ok, || format!("{}: (I, J) = ({}, {})", ctx(), d.i, d.j));
        }
    }
    r
}

/// `sum_u W_u conj(W_u)` computed on histograms in machine integers:
/// the product of `sum_i h_i zeta^i` with its conjugate has coefficient
/// `sum_i h_i h_{i-k}` at `zeta^k`.
fn second_moment(spec: &WeilSpectrum<'_>) -> CycInt {
    let p = spec.field.p() as usize;
    let mut acc = vec![0i64; p];
    for e in &spec.entries {
        let h = &e.value.histogram.counts;
        let f = e.frequency as i64;
        for (k, slot) in acc.iter_mut().enumerate() {
            let mut c = 0i64;
            for i in 0..p {
                c += h[i] as i64 * h[(i + p - k) % p] as i64;
            }
            *slot += f * c;
        }
    }
    CycInt::from_small_unreduced(p as u32, &acc)
}

fn weil_sum_at_zero(field: &Field, s: u64) -> CycInt {
    let mut counts = vec![0u64; field.p() as usize];
    for x in field.elements() {
        counts[field.trace(field.pow(x, s)) as usize] += 1;
    }
    Histogram::new(field.p(), counts).reduce()
}

/// Summary of one `(K, s)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub q: u32,
    pub p: u32,
    pub n: u32,
    pub s: u64,
    pub s_canonical: u64,
    pub num_values: usize,
    pub is_degenerate: bool,
    pub is_rational: bool,
    /// `s = 1 (mod p - 1)`.
    pub s_is_one_mod_p_minus_1: bool,
    pub tau_order: u64,
    pub cycle_type: Vec<usize>,
    /// Cycles of tau as indices into `values`.
    pub cycles: Vec<Vec<usize>>,
    pub frequencies: Vec<u64>,
    pub values: Vec<String>,
}

pub fn classification_record(spec: &WeilSpectrum<'_>, tau: &TauAction) -> Result<ClassificationRecord> {
    let field = spec.field;
    let (q, p) = (field.q() as u64, field.p() as u64);
    Ok(ClassificationRecord {
        q: field.q(),
        p: field.p(),
        n: field.n(),
        s: spec.s,
        s_canonical: canonical_exponent(q, p, spec.s)?,
        num_values: spec.num_values(),
        is_degenerate: is_degenerate(q, p, spec.s),
        is_rational: spec.is_rational(),
        s_is_one_mod_p_minus_1: (spec.s - 1).is_multiple_of((p - 1).max(1)),
        tau_order: tau.order,
        cycle_type: tau.cycle_type.clone(),
        cycles: tau.cycles.clone(),
        frequencies: spec.frequencies(),
        values: spec.rendered_values(),
    })
}

/// Computes the spectrum and its record, failing with the name of the first
/// violated invariant.
pub fn classify(field: &Field, s: u64) -> Result<ClassificationRecord> {
    let spec = spectrum(field, s)?;
    let tau = tau_action(&spec)?;
    check_spectrum(&spec, &tau, SpectrumCheckOptions::default()).into_result()?;
    classification_record(&spec, &tau)
}

/// Helper for reports: values of `W_u` for every unit `u`, in enumeration order.
pub fn per_unit_values<'a>(spec: &'a WeilSpectrum<'_>) -> impl Iterator<Item = (FieldElement, &'a WeilValue)> + 'a {
    spec.field.units().map(move |u| (u, &spec.entries[spec.value_index(u)].value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32, n: u32) -> Field {
        Field::new(p, n, None).unwrap()
    }

    #[test]
    fn weil_sum_examples() {
        let f5 = f(5, 1);
        let w0 = weil_sum(&f5, 3, f5.zero()).unwrap();
        assert!(w0.value.is_zero());
        let w1 = weil_sum(&f5, 3, f5.one()).unwrap();
        assert_eq!(w1.histogram.counts, vec![3, 1, 0, 0, 1]);
        assert_eq!(w1.quad, Some(QuadDecomp { i: 5.into(), j: 1.into() }));
        let w2 = weil_sum(&f5, 3, f5.element(2).unwrap()).unwrap();
        assert_eq!(w2.quad, Some(QuadDecomp { i: 0.into(), j: 2.into() }));
        assert_eq!(weil_sum(&f5, 2, f5.one()).unwrap_err(), Error::NotInvertibleExponent { q: 5, s: 2 });
    }

    #[test]
    fn exceptional_spectrum() {
        let f5 = f(5, 1);
        let spec = spectrum(&f5, 3).unwrap();
        let quads: Vec<_> = spec.entries().iter().map(|e| e.value.quad.clone().unwrap()).collect();
        let expect = [(5, 1), (0, 2), (0, -2), (5, -1)];
        assert_eq!(quads.len(), 4);
        for (d, (i, j)) in quads.iter().zip(expect) {
            assert_eq!((d.i.clone(), d.j.clone()), (BigInt::from(i), BigInt::from(j)));
        }
        assert_eq!(spec.frequencies(), vec![1, 1, 1, 1]);
        let tau = tau_action(&spec).unwrap();
        assert_eq!(tau.cycle_type, vec![2, 2]);
        // (5+sqrt5)/2 <-> (5-sqrt5)/2 and sqrt5 <-> -sqrt5
        assert_eq!(tau.mapping, vec![3, 2, 1, 0]);
    }

    #[test]
    fn degenerate_spectra() {
        for (p, n) in [(3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2)] {
            let k = f(p, n);
            let spec = spectrum(&k, 1).unwrap();
            let q = k.q() as i64;
            let mut got: Vec<(String, u64)> = spec.entries().iter().map(|e| (e.value.render(), e.frequency)).collect();
            got.sort();
            let mut want = vec![("0".to_string(), q as u64 - 2), (q.to_string(), 1)];
            want.sort();
            assert_eq!(got, want);
            let tau = tau_action(&spec).unwrap();
            assert!(tau.cycle_type.iter().all(|&c| c == 1));
        }
        let f2 = f(2, 1);
        let spec = spectrum(&f2, 1).unwrap();
        assert_eq!(spec.rendered_values(), vec!["2"]);
        assert_eq!(spec.frequencies(), vec![1]);
    }

    #[test]
    fn fast_spectrum_matches_definition() {
        for (p, n) in [(2, 3), (3, 2), (5, 1), (7, 1), (2, 4), (13, 1), (3, 3), (5, 2)] {
            let k = f(p, n);
            for s in exponent_classes(k.q() as u64, p as u64) {
                let spec = spectrum(&k, s).unwrap();
                for u in k.units() {
                    assert_eq!(spec.value(u), &weil_sum(&k, s, u).unwrap().value);
                }
            }
        }
    }

    #[test]
    fn degeneracy() {
        assert!(is_degenerate(8, 2, 2));
        assert!(!is_degenerate(5, 5, 3));
        assert!(is_degenerate(4, 2, 1) && is_degenerate(4, 2, 2));
        assert!(is_degenerate(2, 2, 1));
    }

    #[test]
    fn exponent_class_examples() {
        assert_eq!(exponent_classes(5, 5), vec![1, 3]);
        assert_eq!(exponent_classes(8, 2), vec![1, 3]);
        assert_eq!(exponent_orbit(8, 2, 1).unwrap(), vec![1, 2, 4]);
        assert_eq!(exponent_orbit(8, 2, 3).unwrap(), vec![3, 5, 6]);
        assert_eq!(exponent_classes(2, 2), vec![1]);
        assert_eq!(exponent_classes(3, 3), vec![1]);
    }

    /// Orbits by brute force: close {s} under both generators with a naive
    /// inverse search.
    #[test]
    fn orbits_match_brute_force() {
        for (q, p) in [(9u64, 3u64), (16, 2), (25, 5), (27, 3), (32, 2), (49, 7), (64, 2)] {
            let m = q - 1;
            for s in (1..m).filter(|s| s.gcd(&m) == 1) {
                let mut set = std::collections::BTreeSet::from([s]);
                loop {
                    let before = set.len();
                    for t in set.clone() {
                        set.insert(t * p % m);
                        set.insert((1..m).find(|x| x * t % m == 1).unwrap());
                    }
                    if set.len() == before {
                        break;
                    }
                }
                assert_eq!(exponent_orbit(q, p, s).unwrap(), set.into_iter().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn equivalent_exponents_share_spectra() {
        for (p, n) in [(2, 4), (3, 2), (2, 5), (3, 3), (5, 2), (2, 6), (7, 1), (11, 1)] {
            let k = f(p, n);
            let q = k.q() as u64;
            for s in exponent_classes(q, p as u64) {
                let mut base: Vec<(CycInt, u64)> =
                    spectrum(&k, s).unwrap().entries().iter().map(|e| (e.value.value.clone(), e.frequency)).collect();
                base.sort();
                for t in exponent_orbit(q, p as u64, s).unwrap() {
                    let mut other: Vec<(CycInt, u64)> = spectrum(&k, t)
                        .unwrap()
                        .entries()
                        .iter()
                        .map(|e| (e.value.value.clone(), e.frequency))
                        .collect();
                    other.sort();
                    assert_eq!(base, other, "q={q} s={s} t={t}");
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let r = classify(&f(5, 1), 3).unwrap();
        assert_eq!((r.num_values, r.is_rational, r.tau_order), (4, false, 2));
        assert_eq!(r.cycle_type, vec![2, 2]);
        let r = classify(&f(7, 1), 1).unwrap();
        assert_eq!((r.num_values, r.is_rational, r.is_degenerate), (2, true, true));
        let r = classify(&f(3, 2), 5).unwrap();
        assert_eq!(galois_degree(3, 5), 1);
        assert_eq!(r.tau_order, 1);
        assert!(r.is_rational);
        let r = classify(&f(2, 3), 3).unwrap();
        assert_eq!((r.num_values, r.is_rational), (3, true));
        let r = classify(&f(2, 1), 1).unwrap();
        assert_eq!((r.num_values, r.tau_order), (1, 1));
    }

    #[test]
    fn inverses_are_distinct_helpers() {
        // q = 13, s = 5: mod 12 the inverse is 5, mod p - 1 = 12 likewise; for
        // q = 25 they differ: 1/7 mod 24 = 7, 1/7 mod 4 = 3.
        assert_eq!(inverse_mod_q_minus_1(25, 7).unwrap(), 7);
        assert_eq!(inverse_mod_p_minus_1(5, 7).unwrap(), 3);
    }

    #[test]
    fn full_checks_small_fields() {
        for (p, n) in
            [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4), (17, 1), (5, 2), (3, 3)]
        {
            let k = f(p, n);
            for s in exponent_classes(k.q() as u64, p as u64) {
                let spec = spectrum(&k, s).unwrap();
                let tau = tau_action(&spec).unwrap();
                let opts = SpectrumCheckOptions { full_galois: true, ..Default::default() };
                let report = check_spectrum(&spec, &tau, opts);
                assert!(report.passed(), "q={} s={s}\n{report}", k.q());
            }
        }
    }
}
