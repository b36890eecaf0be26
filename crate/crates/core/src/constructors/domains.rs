//! Multiplication domains for the built-in families.

use crate::group::{Backing, Multiplication, Word};

/// `Z_{m_1} x ... x Z_{m_k}` as coordinate vectors.
pub struct Abelian {
    moduli: Vec<u32>,
}

impl Abelian {
    pub fn new(moduli: Vec<u32>) -> Self {
        Abelian { moduli }
    }

    pub fn basis(&self) -> Vec<Word> {
        (0..self.moduli.len())
            .map(|i| {
                let mut w: Word = self.moduli.iter().map(|_| 0).collect();
                w[i] = 1;
                w
            })
            .collect()
    }
}

impl Multiplication for Abelian {
    fn identity(&self) -> Word {
        self.moduli.iter().map(|_| 0).collect()
    }
    fn multiply(&self, a: &[u32], b: &[u32]) -> Word {
        self.moduli
            .iter()
            .zip(a.iter().zip(b))
            .map(|(&m, (&x, &y))| (x + y) % m)
            .collect()
    }
    fn is_valid(&self, w: &[u32]) -> bool {
        w.len() == self.moduli.len() && w.iter().zip(&self.moduli).all(|(&x, &m)| x < m)
    }
    fn backing(&self) -> Backing {
        Backing::Semidirect
    }
}

/// `<x, y | x^m, y^k = x^t, y x y^-1 = x^s>` as pairs `(a, b)` meaning `x^a y^b`.
pub struct Metacyclic {
    m: u64,
    k: u64,
    t: u64,
    /// `s^b mod m` for `b < k`.
    s_pow: Vec<u64>,
}

impl Metacyclic {
    /// Returns `None` when the parameters do not define a group of order `m * k`.
    pub fn new(m: u64, k: u64, s: u64, t: u64) -> Option<Self> {
        let s = s % m;
        let t = t % m;
        let mut s_pow = vec![1 % m];
        for _ in 1..k {
            s_pow.push(s_pow.last().unwrap() * s % m);
        }
        let s_k = s_pow[(k - 1) as usize] * s % m;
        let ok = m >= 1 && k >= 1 && s_k == 1 % m && (s * t) % m == t;
        ok.then_some(Metacyclic { m, k, t, s_pow })
    }

    pub fn generators(&self) -> Vec<Word> {
        vec![Word::from_slice(&[1 % self.m as u32, 0]), Word::from_slice(&[0, 1 % self.k as u32])]
    }
}

impl Multiplication for Metacyclic {
    fn identity(&self) -> Word {
        Word::from_slice(&[0, 0])
    }
    fn multiply(&self, a: &[u32], b: &[u32]) -> Word {
        let mut x = a[0] as u64 + self.s_pow[a[1] as usize] * b[0] as u64;
        let mut y = a[1] as u64 + b[1] as u64;
        if y >= self.k {
            y -= self.k;
            x += self.t;
        }
        Word::from_slice(&[(x % self.m) as u32, y as u32])
    }
    fn is_valid(&self, w: &[u32]) -> bool {
        w.len() == 2 && (w[0] as u64) < self.m && (w[1] as u64) < self.k
    }
    fn backing(&self) -> Backing {
        Backing::Semidirect
    }
}

/// Unitriangular 3x3 matrices over `Z_p` as triples `(a, b, c)`.
pub struct Heisenberg {
    p: u32,
}

impl Heisenberg {
    pub fn new(p: u32) -> Self {
        Heisenberg { p }
    }
}

impl Multiplication for Heisenberg {
    fn identity(&self) -> Word {
        Word::from_slice(&[0, 0, 0])
    }
    fn multiply(&self, a: &[u32], b: &[u32]) -> Word {
        let p = self.p;
        Word::from_slice(&[
            (a[0] + b[0]) % p,
            (a[1] + b[1]) % p,
            (a[2] + b[2] + a[0] * b[1]) % p,
        ])
    }
    fn is_valid(&self, w: &[u32]) -> bool {
        w.len() == 3 && w.iter().all(|&x| x < self.p)
    }
    fn backing(&self) -> Backing {
        Backing::Semidirect
    }
}
