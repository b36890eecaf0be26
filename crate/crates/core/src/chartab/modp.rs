//! Arithmetic, polynomials and linear algebra over a prime field `F_p`, `p < 2^31`.

use crate::arith::pow_mod;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p < (1 << 31), "prime field modulus must stay below 2^31");
        Fp { p }
    }
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    pub fn pow(self, a: u64, n: u64) -> u64 {
        pow_mod(a, n, self.p)
    }
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        pow_mod(a, self.p - 2, self.p)
    }
    pub fn reduce_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }
}

/// Polynomials are coefficient vectors, lowest degree first, without trailing zeros.
pub type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn degree(a: &[u64]) -> usize {
    a.len().saturating_sub(1)
}

pub fn poly_rem(f: Fp, a: &[u64], m: &[u64]) -> Poly {
    let mut a = trim(a.to_vec());
    let dm = degree(m);
    let inv = f.inv(*m.last().unwrap());
    while a.len() > dm {
        let lead = f.mul(*a.last().unwrap(), inv);
        let shift = a.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            a[shift + i] = f.sub(a[shift + i], f.mul(lead, c));
        }
        a.pop();
        a = trim(a);
    }
    a
}

/// Quotient and remainder of `a / m`.
pub fn poly_divrem(f: Fp, a: &[u64], m: &[u64]) -> (Poly, Poly) {
    let mut r = trim(a.to_vec());
    let dm = degree(m);
    if r.len() <= dm {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - dm];
    let inv = f.inv(*m.last().unwrap());
    while r.len() > dm {
        let lead = f.mul(*r.last().unwrap(), inv);
        let shift = r.len() - 1 - dm;
        q[shift] = lead;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(lead, c));
        }
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

pub fn poly_mul(f: Fp, a: &[u64], b: &[u64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = f.add(c[i + j], f.mul(x, y));
        }
    }
    trim(c)
}

pub fn poly_powmod(f: Fp, base: &[u64], mut n: u64, m: &[u64]) -> Poly {
    let mut acc = poly_rem(f, &[1], m);
    let mut b = poly_rem(f, base, m);
    while n > 0 {
        if n & 1 == 1 {
            acc = poly_rem(f, &poly_mul(f, &acc, &b), m);
        }
        b = poly_rem(f, &poly_mul(f, &b, &b), m);
        n >>= 1;
    }
    acc
}

pub fn poly_monic(f: Fp, a: Poly) -> Poly {
    match a.last() {
        None => a,
        Some(&l) => {
            let inv = f.inv(l);
            a.into_iter().map(|c| f.mul(c, inv)).collect()
        }
    }
}

pub fn poly_gcd(f: Fp, a: &[u64], b: &[u64]) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(f, &a, &b);
        a = b;
        b = r;
    }
    poly_monic(f, a)
}

fn poly_sub(f: Fp, a: &[u64], b: &[u64]) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect(),
    )
}

/// Distinct roots of `g` in `F_p`, ascending.
pub fn roots(f: Fp, g: &[u64]) -> Vec<u64> {
    let g = poly_monic(f, trim(g.to_vec()));
    if degree(&g) == 0 {
        return Vec::new();
    }
    let xp = poly_powmod(f, &[0, 1], f.p, &g);
    let split = poly_gcd(f, &poly_sub(f, &xp, &[0, 1]), &g);
    let mut out = Vec::new();
    split_linear(f, split, &mut out);
    out.sort_unstable();
    out
}

/// Equal-degree splitting of a squarefree product of linear factors.
fn split_linear(f: Fp, g: Poly, out: &mut Vec<u64>) {
    match degree(&g) {
        0 => {}
        1 => out.push(f.neg(f.mul(g[0], f.inv(g[1])))),
        d => {
            for a in 0.. {
                let h = poly_powmod(f, &[a % f.p, 1], (f.p - 1) / 2, &g);
                let h = poly_gcd(f, &poly_sub(f, &h, &[1]), &g);
                let dh = degree(&h);
                if h.len() > 1 && dh < d {
                    let (q, _) = poly_divrem(f, &g, &h);
                    split_linear(f, h, out);
                    split_linear(f, poly_monic(f, q), out);
                    return;
                }
            }
        }
    }
}

/// Characteristic polynomial `det(x I - A)` via Hessenberg reduction.
pub fn charpoly(f: Fp, a: &[Vec<u64>]) -> Poly {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = f.inv(h[m][m - 1]);
        for i in m + 1..n {
            let u = f.mul(h[i][m - 1], inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let t = f.mul(u, h[m][j]);
                h[i][j] = f.sub(h[i][j], t);
            }
            for row in h.iter_mut() {
                let t = f.mul(u, row[i]);
                row[m] = f.add(row[m], t);
            }
        }
    }
    // p_k(x) = charpoly of the leading k x k block.
    let mut polys: Vec<Poly> = vec![vec![1]];
    for k in 1..=n {
        let mut pk = poly_mul(f, &[f.neg(h[k - 1][k - 1]), 1], &polys[k - 1]);
        let mut t = 1u64;
        for i in 1..k {
            t = f.mul(t, h[k - i][k - i - 1]);
            let c = f.mul(t, h[k - i - 1][k - 1]);
            let term: Poly = polys[k - i - 1].iter().map(|&v| f.mul(v, c)).collect();
            pk = poly_sub(f, &pk, &term);
        }
        polys.push(pk);
    }
    let mut out = polys.pop().unwrap();
    out.resize(n + 1, 0);
    out
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(f: Fp, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, i);
        let inv = f.inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = f.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (v, &pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                *v = f.sub(*v, f.mul(factor, pv));
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{u : u A = 0}` for a square matrix `A`.
pub fn left_nullspace(f: Fp, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    // u A = 0  <=>  A^T u^T = 0.
    let mut t: Vec<Vec<u64>> = (0..n).map(|j| (0..n).map(|i| a[i][j]).collect()).collect();
    let pivots = rref(f, &mut t);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut u = vec![0u64; n];
            u[fc] = 1;
            for (row, &pc) in t.iter().zip(&pivots) {
                u[pc] = f.neg(row[fc]);
            }
            u
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn det_brute(f: Fp, a: &[Vec<u64>]) -> u64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for j in 0..n {
            let minor: Vec<Vec<u64>> = a[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                .collect();
            let t = f.mul(a[0][j], det_brute(f, &minor));
            total = if j % 2 == 0 { f.add(total, t) } else { f.sub(total, t) };
        }
        total
    }

    fn eval(f: Fp, p: &[u64], x: u64) -> u64 {
        p.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    proptest! {
        #[test]
        fn charpoly_matches_determinant(entries in prop::collection::vec(0u64..13, 16), x in 0u64..13) {
            let f = Fp::new(13);
            let a: Vec<Vec<u64>> = entries.chunks(4).map(<[u64]>::to_vec).collect();
            let cp = charpoly(f, &a);
            let xa: Vec<Vec<u64>> = (0..4)
                .map(|i| (0..4).map(|j| f.sub(if i == j { x } else { 0 }, a[i][j])).collect())
                .collect();
            prop_assert_eq!(eval(f, &cp, x), det_brute(f, &xa));
        }

        #[test]
        fn roots_match_scan(coeffs in prop::collection::vec(0u64..31, 1..7)) {
            let f = Fp::new(31);
            let mut g = coeffs.clone();
            g.push(1);
            let scan: Vec<u64> = (0..31).filter(|&x| eval(f, &g, x) == 0).collect();
            prop_assert_eq!(roots(f, &g), scan);
        }

        #[test]
        fn nullspace_vectors_annihilate(entries in prop::collection::vec(0u64..7, 9)) {
            let f = Fp::new(7);
            let a: Vec<Vec<u64>> = entries.chunks(3).map(<[u64]>::to_vec).collect();
            let ns = left_nullspace(f, &a);
            for u in &ns {
                for j in 0..3 {
                    let s = (0..3).fold(0, |acc, i| f.add(acc, f.mul(u[i], a[i][j])));
                    prop_assert_eq!(s, 0);
                }
            }
            let mut t = a.clone();
            let rank = rref(f, &mut t).len();
            prop_assert_eq!(ns.len() + rank, 3);
        }
    }
}
