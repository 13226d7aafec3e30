//! Multiplicative characters of `K^x` as complex floats, Gauss sums and the
//! Fourier transform on the group algebra.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::checks::CheckReport;
use crate::field::{Field, FieldElement};
use crate::group_algebra::{psi_element, random_element, GroupAlgebraElement};

/// Absolute tolerance for float-side checks.
pub const TOLERANCE: f64 = 1e-6;

/// `chi_j(g^a) = exp(2 pi i j a / (q - 1))` for the primitive element `g`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    p: u32,
    order: usize,
    /// Discrete logs by element index.
    log: Vec<u32>,
    trace: Vec<u32>,
    /// `xi^k` for `k < q - 1`.
    roots: Vec<Complex64>,
}

impl CharacterTable {
    pub fn new(field: &Field) -> CharacterTable {
        let order = field.q() as usize - 1;
        let roots = (0..order).map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / order as f64)).collect();
        CharacterTable {
            p: field.p(),
            order,
            log: field.log_table().to_vec(),
            trace: field.trace_table().to_vec(),
            roots,
        }
    }

    /// Number of characters, `q - 1`.
    pub fn len(&self) -> usize {
        self.order
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    /// `chi_j(u)` for a unit `u`.
    pub fn chi(&self, j: usize, u: FieldElement) -> Complex64 {
        let a = self.log[u.index() as usize] as usize;
        self.roots[j * a % self.order]
    }

    fn chi_log(&self, j: usize, a: usize) -> Complex64 {
        self.roots[j * a % self.order]
    }

    /// `psi(u) = exp(2 pi i Tr(u) / p)`.
    pub fn psi(&self, u: FieldElement) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * PI * self.trace[u.index() as usize] as f64 / self.p as f64)
    }

    /// `G(chi_j) = sum_u psi(u) chi_j(u)`.
    pub fn gauss_sum(&self, j: usize) -> Complex64 {
        (1..=self.order as u32).map(FieldElement::from_index).map(|u| self.psi(u) * self.chi(j, u)).sum()
    }

    /// `chi_j(S) = sum_u S_u chi_j(u)`.
    pub fn fourier_coefficient(&self, s: &GroupAlgebraElement, j: usize) -> Complex64 {
        s.coeffs().iter().enumerate().map(|(a, c)| c.complex_embed() * self.chi_log(j, a)).sum()
    }

    pub fn fourier_transform(&self, s: &GroupAlgebraElement) -> Vec<Complex64> {
        (0..self.order).map(|j| self.fourier_coefficient(s, j)).collect()
    }

    /// Coefficients (by discrete log) of the element with transform `r`.
    pub fn inverse(&self, r: &[Complex64]) -> Vec<Complex64> {
        let m = self.order;
        (0..m)
            .map(|a| r.iter().enumerate().map(|(j, x)| x * self.chi_log(j, a).conj()).sum::<Complex64>() / m as f64)
            .collect()
    }
}

pub fn gauss_sum(table: &CharacterTable, j: usize) -> Complex64 {
    table.gauss_sum(j)
}

pub fn fourier_coefficient(table: &CharacterTable, s: &GroupAlgebraElement, j: usize) -> Complex64 {
    table.fourier_coefficient(s, j)
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= TOLERANCE
}

/// Float checks on characters, Gauss sums and the Fourier transform.
pub fn verify_characters(field: &Field, seed: u64) -> CheckReport {
    let table = CharacterTable::new(field);
    let q = field.q() as f64;
    let m = table.len();
    let mut r = CheckReport::new();
    let ctx = |j: usize| format!("q={} j={j}", field.q());
    let minus = field.neg(field.one());

    r.record("gauss-sums", close(table.gauss_sum(0), Complex64::new(-1.0, 0.0)), || ctx(0));
    for j in 1..m {
        let g = table.gauss_sum(j);
        r.record("gauss-sums", (g.norm_sqr() - q).abs() <= TOLERANCE, || {
            format!("{}: |G|^2 = {}", ctx(j), g.norm_sqr())
        });
        let rhs = table.chi(j, minus) * table.gauss_sum((m - j) % m);
        r.record("gauss-sums", close(g.conj(), rhs), || ctx(j));
    }
    let psi = psi_element(field);
    for j in 0..m {
        r.record("gauss-sums", close(table.fourier_coefficient(&psi, j), table.gauss_sum(j)), || ctx(j));
    }

    for j in 0..m {
        let sum: Complex64 = field.units().map(|u| table.chi(j, u)).sum();
        let want = if j == 0 { m as f64 } else { 0.0 };
        r.record("character-orthogonality", close(sum, Complex64::new(want, 0.0)), || format!("{}: {sum}", ctx(j)));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..3 {
        let s = random_element(field, 5, &mut rng);
        let t = random_element(field, 5, &mut rng);
        let (fs, ft) = (table.fourier_transform(&s), table.fourier_transform(&t));
        let fst = table.fourier_transform(&(&s * &t));
        let fsum = table.fourier_transform(&(&s + &t));
        let fconj = table.fourier_transform(&s.conj());
        let tw = 1 + (seed as usize % m.max(1));
        let ftw = table.fourier_transform(&s.twist(tw as i64));
        r.record("fourier-multiplicative", close(fs[0], s.total().complex_embed()), || ctx(0));
        for j in 0..m {
            r.record("fourier-multiplicative", close(fst[j], fs[j] * ft[j]), || ctx(j));
            r.record("fourier-multiplicative", close(fsum[j], fs[j] + ft[j]), || ctx(j));
            r.record("fourier-multiplicative", close(fconj[j], fs[j].conj()), || ctx(j));
            r.record("fourier-multiplicative", close(ftw[j], fs[tw * j % m]), || ctx(j));
        }
        let back = table.inverse(&fs);
        for (a, c) in s.coeffs().iter().enumerate() {
            r.record("fourier-inversion", close(back[a], c.complex_embed()), || format!("q={} log={a}", field.q()));
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_sum_examples() {
        let k = Field::new(5, 1, None).unwrap();
        let t = CharacterTable::new(&k);
        assert!(close(t.gauss_sum(0), Complex64::new(-1.0, 0.0)));
        assert!((t.gauss_sum(1).norm() - 5f64.sqrt()).abs() < 1e-12);
        let units = GroupAlgebraElement::all_units(&k);
        assert!(t.fourier_coefficient(&units, 1).norm() < 1e-12);
    }

    #[test]
    fn suite_passes() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 4), (3, 3), (7, 2)] {
            let k = Field::new(p, n, None).unwrap();
            let report = verify_characters(&k, 42);
            assert!(report.passed(), "{report}");
        }
    }
}
