//! Concrete multiplication domains shared across the crate.

use super::{Backing, FiniteGroup, Multiplication, Word};
use crate::error::{Error, Result};

/// Permutations of `0..degree` as image lists; `a * b` applies `a` first.
pub struct Permutations {
    degree: usize,
}

impl Permutations {
    pub fn new(degree: usize) -> Self {
        Permutations { degree }
    }

    /// Builds an image list from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Word {
        let mut w: Word = (0..degree as u32).collect();
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                w[a as usize] = c[(i + 1) % c.len()];
            }
        }
        w
    }
}

impl Multiplication for Permutations {
    fn identity(&self) -> Word {
        (0..self.degree as u32).collect()
    }
    fn multiply(&self, a: &[u32], b: &[u32]) -> Word {
        a.iter().map(|&i| b[i as usize]).collect()
    }
    fn is_valid(&self, w: &[u32]) -> bool {
        if w.len() != self.degree {
            return false;
        }
        let mut seen = vec![false; self.degree];
        w.iter().all(|&i| {
            (i as usize) < self.degree && !std::mem::replace(&mut seen[i as usize], true)
        })
    }
    fn backing(&self) -> Backing {
        Backing::Permutation
    }
}

/// An explicit Cayley table over `0..n`, with `0` the identity.
pub struct TableDomain {
    n: usize,
    table: Vec<u32>,
}

impl TableDomain {
    pub fn new(n: usize, table: Vec<u32>) -> Result<Self> {
        if n == 0 || table.len() != n * n || table.iter().any(|&v| v as usize >= n) {
            return Err(Error::BadParams("malformed multiplication table".into()));
        }
        if (0..n).any(|x| table[x] as usize != x || table[x * n] as usize != x) {
            return Err(Error::BadParams("element 0 is not an identity".into()));
        }
        Ok(TableDomain { n, table })
    }
}

impl Multiplication for TableDomain {
    fn identity(&self) -> Word {
        Word::from_slice(&[0])
    }
    fn multiply(&self, a: &[u32], b: &[u32]) -> Word {
        Word::from_slice(&[self.table[a[0] as usize * self.n + b[0] as usize]])
    }
    fn is_valid(&self, w: &[u32]) -> bool {
        w.len() == 1 && (w[0] as usize) < self.n
    }
    fn backing(&self) -> Backing {
        Backing::Table
    }
}

/// Elements of a subgroup, encoded by their index in the parent.
pub struct Embedded {
    parent: FiniteGroup,
}

impl Embedded {
    pub fn new(parent: FiniteGroup) -> Self {
        Embedded { parent }
    }
}

impl Multiplication for Embedded {
    fn identity(&self) -> Word {
        Word::from_slice(&[0])
    }
    fn multiply(&self, a: &[u32], b: &[u32]) -> Word {
        Word::from_slice(&[self.parent.mul(a[0] as usize, b[0] as usize) as u32])
    }
    fn is_valid(&self, w: &[u32]) -> bool {
        w.len() == 1 && (w[0] as usize) < self.parent.order()
    }
    fn backing(&self) -> Backing {
        Backing::Table
    }
}

/// Cosets of a normal subgroup, each labelled by its smallest member.
pub struct Cosets {
    parent: FiniteGroup,
    label: Vec<u32>,
}

impl Cosets {
    pub fn new(parent: FiniteGroup, label: Vec<u32>) -> Self {
        Cosets { parent, label }
    }
}

impl Multiplication for Cosets {
    fn identity(&self) -> Word {
        Word::from_slice(&[0])
    }
    fn multiply(&self, a: &[u32], b: &[u32]) -> Word {
        let p = self.parent.mul(a[0] as usize, b[0] as usize);
        Word::from_slice(&[self.label[p]])
    }
    fn is_valid(&self, w: &[u32]) -> bool {
        w.len() == 1 && self.label.get(w[0] as usize) == Some(&w[0])
    }
    fn backing(&self) -> Backing {
        Backing::Coset
    }
}

/// Direct product of enumerated groups; a word lists one index per factor.
pub struct Direct {
    factors: Vec<FiniteGroup>,
}

impl Direct {
    pub fn new(factors: Vec<FiniteGroup>) -> Self {
        Direct { factors }
    }
}

impl Multiplication for Direct {
    fn identity(&self) -> Word {
        self.factors.iter().map(|_| 0).collect()
    }
    fn multiply(&self, a: &[u32], b: &[u32]) -> Word {
        self.factors
            .iter()
            .zip(a.iter().zip(b))
            .map(|(f, (&x, &y))| f.mul(x as usize, y as usize) as u32)
            .collect()
    }
    fn is_valid(&self, w: &[u32]) -> bool {
        w.len() == self.factors.len()
            && self
                .factors
                .iter()
                .zip(w)
                .all(|(f, &x)| (x as usize) < f.order())
    }
    fn backing(&self) -> Backing {
        Backing::Semidirect
    }
}
