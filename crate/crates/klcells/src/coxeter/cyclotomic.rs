//! Exact arithmetic in the cyclotomic integers `Z[x]/Phi_n(x)`, just enough
//! to realise root systems of non-crystallographic Coxeter groups with
//! `2cos(pi/m) = zeta_2m + zeta_2m^-1`.
//!
//! With `n = 1` the ring is `Z` itself and every element is a single integer
//! coefficient, which is what crystallographic types use.

use std::f64::consts::PI;

/// Context describing the ring `Z[zeta_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicRing {
    n: usize,
    /// Monic `Phi_n`, coefficients from the constant term upward.
    phi: Vec<i64>,
}

/// Integer polynomial `a / b` for monic `b`, panicking on a non-zero remainder.
fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        return vec![0];
    }
    let mut q = vec![0i64; rem.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db];
        q[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                rem[i + j] -= c * bj;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    q
}

fn cyclotomic_poly(n: usize) -> Vec<i64> {
    // x^n - 1 = prod_{d | n} Phi_d
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = exact_div(&p, &cyclotomic_poly(d));
        }
    }
    p
}

impl CyclotomicRing {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        Self {
            n,
            phi: cyclotomic_poly(n),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of integer coordinates per element.
    pub fn dim(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.dim()]
    }

    pub fn from_int(&self, k: i64) -> Vec<i64> {
        let mut v = self.zero();
        v[0] = k;
        v
    }

    fn reduce(&self, mut a: Vec<i64>) -> Vec<i64> {
        let d = self.dim();
        for i in (d..a.len()).rev() {
            let c = a[i];
            if c != 0 {
                for (j, &pj) in self.phi.iter().enumerate() {
                    a[i - d + j] -= c * pj;
                }
            }
        }
        a.truncate(d);
        a.resize(d, 0);
        a
    }

    /// `zeta_n^k`.
    pub fn zeta_pow(&self, k: usize) -> Vec<i64> {
        let mut a = vec![0i64; k % self.n + 1];
        a[k % self.n] = 1;
        self.reduce(a)
    }

    /// `2cos(pi/m)`; requires `2m | n`.
    pub fn two_cos_pi_over(&self, m: usize) -> Vec<i64> {
        assert!(self.n.is_multiple_of(2 * m), "ring too small for 2cos(pi/{m})");
        let k = self.n / (2 * m);
        self.add(&self.zeta_pow(k), &self.zeta_pow(self.n - k))
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(out)
    }

    pub fn is_zero(a: &[i64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    /// Real part of the complex embedding `zeta_n -> exp(2 pi i / n)`. All
    /// values used for roots are real, so this is their numeric value.
    pub fn to_f64(&self, a: &[i64]) -> f64 {
        a.iter()
            .enumerate()
            .map(|(k, &c)| c as f64 * (2.0 * PI * k as f64 / self.n as f64).cos())
            .sum()
    }

    /// Sign of a real element: exact zero test, numeric sign otherwise.
    pub fn sign(&self, a: &[i64]) -> i32 {
        if Self::is_zero(a) {
            return 0;
        }
        let x = self.to_f64(a);
        assert!(x.abs() > 1e-9, "ambiguous sign for a non-zero root coordinate");
        if x > 0.0 {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn golden_ratio_relation() {
        // tau = 2cos(pi/5) satisfies tau^2 = tau + 1
        let r = CyclotomicRing::new(10);
        let tau = r.two_cos_pi_over(5);
        let lhs = r.mul(&tau, &tau);
        let rhs = r.add(&tau, &r.from_int(1));
        assert_eq!(lhs, rhs);
        assert!((r.to_f64(&tau) - 1.618_033_988_75).abs() < 1e-9);
    }

    #[test]
    fn right_angle_vanishes() {
        let r = CyclotomicRing::new(24);
        assert!(CyclotomicRing::is_zero(&r.two_cos_pi_over(2)));
        assert_eq!(r.two_cos_pi_over(3), r.from_int(1));
        let sqrt2 = r.two_cos_pi_over(4);
        assert_eq!(r.mul(&sqrt2, &sqrt2), r.from_int(2));
    }
}
