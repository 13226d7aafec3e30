//! Spectra and counts against arithmetic written out by hand, sharing no
//! code with the library's field implementation.

use std::collections::BTreeMap;

use weil_core::{exponent_classes, q_count, spectrum, Field, QQuery};

fn modpow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Histogram of `Tr(x^s - u x)` over a prime field.
fn prime_histogram(p: u64, s: u64, u: u64) -> Vec<u64> {
    let mut h = vec![0u64; p as usize];
    for x in 0..p {
        let v = (modpow(x, s, p) + p * p - u * x % p) % p;
        h[v as usize] += 1;
    }
    h
}

#[test]
fn prime_fields_match_modular_arithmetic() {
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        let k = Field::new(p as u32, 1, None).unwrap();
        for s in (1..p.max(2)).filter(|&s| gcd(s, p - 1) == 1) {
            let spec = spectrum(&k, s).unwrap();
            for u in k.units() {
                let e = &spec.entries()[spec.value_index(u)];
                assert_eq!(e.value.histogram.counts, prime_histogram(p, s, u.index() as u64), "p={p} s={s} u={u}");
            }
        }
    }
}

/// `F_9 = F_3[i]`, `i^2 = -1`, elements as `(a, b)` for `a + b i`.
/// The Frobenius sends `i` to `-i`, so `Tr(a + b i) = 2a`.
mod f9 {
    pub type E = (u64, u64);

    pub fn mul(x: E, y: E) -> E {
        ((x.0 * y.0 + 2 * x.1 * y.1) % 3, (x.0 * y.1 + x.1 * y.0) % 3)
    }

    pub fn pow(x: E, e: u64) -> E {
        (0..e).fold((1, 0), |acc, _| mul(acc, x))
    }

    pub fn trace(x: E) -> u64 {
        2 * x.0 % 3
    }

    pub fn all() -> Vec<E> {
        (0..9).map(|i| (i % 3, i / 3)).collect()
    }
}

#[test]
fn f9_matches_hand_arithmetic() {
    // default modulus 1 + x^2
    let k = Field::parse("3^2").unwrap();
    assert_eq!(k.modulus(), &[1, 0, 1]);
    for s in [1u64, 3, 5, 7] {
        let spec = spectrum(&k, s).unwrap();
        for u in k.units() {
            let c = k.coeffs(u);
            let uu = (c[0] as u64, c[1] as u64);
            let mut h = vec![0u64; 3];
            for x in f9::all() {
                let xs = f9::pow(x, s);
                let ux = f9::mul(uu, x);
                let d = ((xs.0 + 3 - ux.0) % 3, (xs.1 + 3 - ux.1) % 3);
                h[f9::trace(d) as usize] += 1;
            }
            let e = &spec.entries()[spec.value_index(u)];
            assert_eq!(e.value.histogram.counts, h, "s={s} u={c:?}");
        }
    }
}

/// Value multisets of every exponent in each class coincide (q <= 64).
#[test]
fn equivalent_exponents_share_multisets() {
    for q in [4u32, 8, 9, 16, 25, 27, 32, 49, 64] {
        let k = Field::parse(&q.to_string()).unwrap();
        let m = q as u64 - 1;
        let mut by_class: BTreeMap<u64, Vec<(String, u64)>> = BTreeMap::new();
        for s in (1..m).filter(|&s| gcd(s, m) == 1) {
            let spec = spectrum(&k, s).unwrap();
            let mut ms: Vec<(String, u64)> =
                spec.entries().iter().map(|e| (e.value.value.to_string(), e.frequency)).collect();
            ms.sort();
            let canon = weil_core::spectrum::canonical_exponent(q as u64, k.p() as u64, s).unwrap();
            if let Some(prev) = by_class.get(&canon) {
                assert_eq!(prev, &ms, "q={q} s={s}");
            } else {
                by_class.insert(canon, ms);
            }
        }
        let reps: Vec<u64> = by_class.keys().copied().collect();
        assert_eq!(reps, exponent_classes(q as u64, k.p() as u64));
    }
}

/// Point counts over a prime field by direct enumeration with modular arithmetic.
#[test]
fn counts_match_modular_enumeration() {
    let p = 7u64;
    let s = 5u64;
    let k = Field::new(7, 1, None).unwrap();
    let e = |i: u64| k.element(i).unwrap();
    for t in [[1u64, 1], [1, 6], [2, 3], [4, 4]] {
        for a in 0..p {
            for b in 0..p {
                let mut want = 0;
                for v1 in 0..p {
                    for v2 in 0..p {
                        let dot = (t[0] * v1 + t[1] * v2) % p;
                        let ps = (modpow(v1, s, p) + modpow(v2, s, p)) % p;
                        if dot == a && ps == modpow(b, s, p) {
                            want += 1;
                        }
                    }
                }
                let got = q_count(&k, s, &QQuery { t: vec![e(t[0]), e(t[1])], a: e(a), b: e(b) }).unwrap();
                assert_eq!(got, want, "t={t:?} a={a} b={b}");
            }
        }
    }
}
