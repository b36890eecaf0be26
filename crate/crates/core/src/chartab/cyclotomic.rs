//! Exact arithmetic in `Z[zeta_e]`, elements stored in the power basis
//! `1, zeta, ..., zeta^(phi(e)-1)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, gcd};

/// Reduction data for one conductor.
#[derive(Debug)]
pub struct CyclotomicField {
    pub e: u64,
    pub phi: usize,
    /// Coefficients of the `e`-th cyclotomic polynomial, lowest first.
    pub modulus: Vec<i64>,
    /// `x^t mod Phi_e` for `t < e`.
    powers: Vec<Vec<i64>>,
}

/// `Phi_n` by dividing `x^n - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Division by a monic integer polynomial that is known to be exact.
fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for s in (0..q.len()).rev() {
        let lead = r[s + db];
        q[s] = lead;
        for (i, &c) in b.iter().enumerate() {
            r[s + i] -= lead * c;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

impl CyclotomicField {
    pub fn new(e: u64) -> Arc<Self> {
        let e = e.max(1);
        let modulus = cyclotomic_polynomial(e);
        let phi = euler_phi(e) as usize;
        debug_assert_eq!(modulus.len(), phi + 1);
        let mut powers = Vec::with_capacity(e as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..e {
            powers.push(cur.clone());
            // multiply by x and reduce the overflow term
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1] - top * modulus[i];
            }
            cur[0] = -top * modulus[0];
        }
        Arc::new(CyclotomicField {
            e,
            phi,
            modulus,
            powers,
        })
    }

    /// `zeta^t`, reduced.
    pub fn zeta_power(&self, t: u64) -> &[i64] {
        &self.powers[(t % self.e) as usize]
    }

    /// `sum_t m_t zeta^t`, reduced.
    pub fn from_multiplicities(&self, m: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.phi];
        for (t, &c) in m.iter().enumerate() {
            if c != 0 {
                for (o, &v) in out.iter_mut().zip(self.zeta_power(t as u64)) {
                    *o += c * v;
                }
            }
        }
        out
    }

    /// Image of `coeffs` under `zeta -> zeta^j`.
    pub fn galois(&self, coeffs: &[i64], j: u64) -> Vec<i64> {
        let m: Vec<i64> = {
            let mut m = vec![0i64; self.e as usize];
            for (s, &c) in coeffs.iter().enumerate() {
                m[(s as u64 * j % self.e) as usize] += c;
            }
            m
        };
        self.from_multiplicities(&m)
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut m = vec![0i64; self.e as usize];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                m[(i + j) % self.e as usize] += x * y;
            }
        }
        self.from_multiplicities(&m)
    }

    /// Units modulo `e`, i.e. the exponents of the Galois automorphisms.
    pub fn units(&self) -> Vec<u64> {
        (1..=self.e).filter(|&j| gcd(j, self.e) == 1).collect()
    }

    /// `max_t ||x^t mod Phi_e||_inf`, summed over `t <= 2 phi - 2`.
    pub fn reduction_growth(&self) -> i64 {
        (0..=(2 * self.phi as u64).saturating_sub(2))
            .map(|t| self.zeta_power(t).iter().map(|c| c.abs()).max().unwrap_or(0))
            .sum()
    }
}

/// An element of `Z[zeta_e]` in canonical reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclotomicValue {
    pub e: u64,
    pub coeffs: Vec<i64>,
}

impl CyclotomicValue {
    pub fn integer(field: &CyclotomicField, n: i64) -> Self {
        let mut coeffs = vec![0i64; field.phi];
        coeffs[0] = n;
        CyclotomicValue { e: field.e, coeffs }
    }

    /// `sum_t m_t zeta^t` for an arbitrary multiplicity vector.
    pub fn from_sum(field: &CyclotomicField, m: &[i64]) -> Self {
        CyclotomicValue {
            e: field.e,
            coeffs: field.from_multiplicities(m),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CyclotomicValue {
            e: self.e,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, field: &CyclotomicField, other: &Self) -> Self {
        CyclotomicValue {
            e: self.e,
            coeffs: field.mul(&self.coeffs, &other.coeffs),
        }
    }

    /// Complex conjugate, `zeta -> zeta^(e-1)`.
    pub fn conj(&self, field: &CyclotomicField) -> Self {
        self.galois(field, field.e - 1)
    }

    pub fn galois(&self, field: &CyclotomicField, j: u64) -> Self {
        CyclotomicValue {
            e: self.e,
            coeffs: field.galois(&self.coeffs, j),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    /// Numerical value, for diagnostics and tests only.
    pub fn to_complex(&self) -> (f64, f64) {
        let w = 2.0 * std::f64::consts::PI / self.e as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (s, &c)| {
            let a = w * s as f64;
            (re + c as f64 * a.cos(), im + c as f64 * a.sin())
        })
    }
}

/// Exact zero test on a reduced value.
pub fn cyclotomic_is_zero(v: &CyclotomicValue) -> bool {
    v.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(21).len(), 13);
    }

    #[test]
    fn zero_tests() {
        let f2 = CyclotomicField::new(2);
        assert!(cyclotomic_is_zero(&CyclotomicValue::from_sum(&f2, &[1, 1])));
        let f3 = CyclotomicField::new(3);
        assert!(cyclotomic_is_zero(&CyclotomicValue::from_sum(&f3, &[1, 1, 1])));
        let f5 = CyclotomicField::new(5);
        let v = CyclotomicValue::from_sum(&f5, &[0, 1, 0, 0, 1]);
        assert!(!cyclotomic_is_zero(&v));
        let (re, im) = v.to_complex();
        assert!((re - 0.618_033_988_7).abs() < 1e-9 && im.abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn reduction_agrees_with_numeric_value(e in 1u64..40, m in prop::collection::vec(-3i64..4, 40)) {
            let f = CyclotomicField::new(e);
            let m = &m[..e as usize];
            let v = CyclotomicValue::from_sum(&f, m);
            let w = 2.0 * std::f64::consts::PI / e as f64;
            let (re, im) = m.iter().enumerate().fold((0.0, 0.0), |(re, im), (t, &c)| {
                (re + c as f64 * (w * t as f64).cos(), im + c as f64 * (w * t as f64).sin())
            });
            let (vr, vi) = v.to_complex();
            prop_assert!((re - vr).abs() < 1e-6 && (im - vi).abs() < 1e-6);
        }

        #[test]
        fn galois_is_multiplicative(e in 2u64..30, a in prop::collection::vec(-3i64..4, 30), b in prop::collection::vec(-3i64..4, 30)) {
            let f = CyclotomicField::new(e);
            let x = CyclotomicValue::from_sum(&f, &a[..e as usize]);
            let y = CyclotomicValue::from_sum(&f, &b[..e as usize]);
            for j in f.units() {
                prop_assert_eq!(
                    x.mul(&f, &y).galois(&f, j),
                    x.galois(&f, j).mul(&f, &y.galois(&f, j))
                );
            }
            prop_assert_eq!(x.conj(&f).conj(&f), x);
        }
    }
}
