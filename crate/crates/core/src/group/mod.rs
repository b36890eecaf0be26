//! Finite groups as indexed element sets with a product oracle.
//!
//! Every group is enumerated once, breadth first from its generators, so that
//! element `0` is the identity and the indexing depends only on the generator
//! list. Products go through a precomputed Cayley table for small groups and
//! through the backing [`Multiplication`] plus a hash lookup otherwise.

mod bitset;
mod classes;
pub mod domains;
mod homomorphism;
mod subgroup;

use std::fmt;
use std::sync::{Arc, OnceLock};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::arith::lcm;
use crate::error::{Error, Result};

pub use bitset::BitSet;
pub use classes::{conjugacy_classes, ClassData};
pub use homomorphism::{quotient, Homomorphism};
pub use subgroup::{center, derived_subgroup, normal_closure, Subgroup};

/// Canonical encoding of an element in its backing representation.
pub type Word = SmallVec<[u32; 12]>;

/// Largest order for which a full Cayley table is stored.
pub const TABLE_LIMIT: usize = 2048;

/// Default cap on the number of elements an enumeration may produce.
pub const DEFAULT_BOUND: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Backing {
    Permutation,
    Semidirect,
    Coset,
    Table,
}

/// The multiplication of some concrete representation.
pub trait Multiplication: Send + Sync {
    fn identity(&self) -> Word;
    fn multiply(&self, a: &[u32], b: &[u32]) -> Word;
    /// Whether `w` is a well-formed encoding in this representation.
    fn is_valid(&self, w: &[u32]) -> bool;
    fn backing(&self) -> Backing;
}

struct Inner {
    domain: Arc<dyn Multiplication>,
    elements: Vec<Word>,
    lookup: FxHashMap<Word, u32>,
    table: Option<Vec<u32>>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<usize>,
    exponent: u64,
    classes: OnceLock<ClassData>,
}

/// An enumerated finite group. Cloning is cheap and shares the enumeration.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<Inner>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("generators", &self.inner.generators)
            .field("backing", &self.backing())
            .finish()
    }
}

/// Enumerates the closure of `generators` under the multiplication of `domain`.
pub fn enumerate_elements(
    domain: Arc<dyn Multiplication>,
    generators: &[Word],
    bound: usize,
) -> Result<FiniteGroup> {
    FiniteGroup::enumerate(domain, generators, bound)
}

impl FiniteGroup {
    pub fn enumerate(
        domain: Arc<dyn Multiplication>,
        generators: &[Word],
        bound: usize,
    ) -> Result<Self> {
        for g in generators {
            if !domain.is_valid(g) {
                return Err(Error::InvalidGenerator(format!("{:?}", g.as_slice())));
            }
        }
        let id = domain.identity();
        let mut elements = vec![id.clone()];
        let mut lookup = FxHashMap::default();
        lookup.insert(id, 0u32);
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let w = domain.multiply(&elements[i], g);
                if !lookup.contains_key(&w) {
                    if elements.len() >= bound {
                        return Err(Error::BoundExceeded { bound });
                    }
                    lookup.insert(w.clone(), elements.len() as u32);
                    elements.push(w);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(lookup[&domain.multiply(a, b)]);
                }
            }
            t
        });
        let gens = generators
            .iter()
            .map(|g| lookup[g] as usize)
            .collect::<Vec<_>>();
        let mut inner = Inner {
            domain,
            elements,
            lookup,
            table,
            inverses: Vec::new(),
            orders: Vec::new(),
            generators: gens,
            exponent: 1,
            classes: OnceLock::new(),
        };
        let mut inverses = vec![0u32; n];
        let mut orders = vec![0u32; n];
        let mut exponent = 1u64;
        for x in 0..n {
            let mut prev = 0usize;
            let mut y = x;
            let mut o = 1u32;
            while y != 0 {
                prev = y;
                y = inner.mul(y, x);
                o += 1;
                if o as usize > n {
                    return Err(Error::InvalidGenerator(
                        "element of unbounded order".into(),
                    ));
                }
            }
            inverses[x] = prev as u32;
            orders[x] = o;
            exponent = lcm(exponent, o as u64);
        }
        inner.inverses = inverses;
        inner.orders = orders;
        inner.exponent = exponent;
        Ok(FiniteGroup {
            inner: Arc::new(inner),
        })
    }

    /// Trivial group in a one-point table backing.
    pub fn trivial() -> Self {
        let domain = Arc::new(domains::TableDomain::new(1, vec![0]).expect("one-point table"));
        FiniteGroup::enumerate(domain, &[], 1).expect("trivial group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverses[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u64 {
        self.inner.orders[a] as u64
    }

    pub fn exponent(&self) -> u64 {
        self.inner.exponent
    }

    pub fn generators(&self) -> &[usize] {
        &self.inner.generators
    }

    pub fn word(&self, a: usize) -> &[u32] {
        &self.inner.elements[a]
    }

    pub fn index_of(&self, w: &[u32]) -> Option<usize> {
        self.inner.lookup.get(w).map(|&i| i as usize)
    }

    pub fn backing(&self) -> Backing {
        self.inner.domain.backing()
    }

    pub fn pow(&self, a: usize, n: u64) -> usize {
        let n = n % self.element_order(a);
        let mut acc = 0;
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `g^-1 x g`
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x^-1 y^-1 x y`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    #[inline]
    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Cached conjugacy classes.
    pub fn classes(&self) -> &ClassData {
        self.inner
            .classes
            .get_or_init(|| classes::compute_classes(self))
    }

    /// `|G : C_G(x)|` read from the cached classes.
    pub fn class_size_of(&self, x: usize) -> u64 {
        let c = self.classes();
        c.sizes[c.class_of[x] as usize] as u64
    }

    /// Elements of `G` commuting with `x`, by a full scan.
    pub fn centralizer_of(&self, x: usize) -> Subgroup {
        let members: Vec<usize> = self.elements().filter(|&y| self.commutes(x, y)).collect();
        Subgroup::from_members(self, members)
    }

    /// Enumerate `h` as a group in its own right, words being parent indices.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let domain = Arc::new(domains::Embedded::new(self.clone()));
        let gens: Vec<Word> = h
            .generators()
            .iter()
            .map(|&g| Word::from_slice(&[g as u32]))
            .collect();
        FiniteGroup::enumerate(domain, &gens, usize::MAX).expect("subgroup closure")
    }

    /// Checks the group axioms on `samples` random triples plus identity and inverses.
    pub fn spot_check_axioms(&self, samples: usize, seed: u64) -> bool {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = self.order();
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x || self.mul(x, self.inv(x)) != 0 {
                return false;
            }
        }
        (0..samples).all(|_| {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        })
    }
}

impl Inner {
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => {
                let w = self.domain.multiply(&self.elements[a], &self.elements[b]);
                self.lookup[&w] as usize
            }
        }
    }
}

impl FiniteGroup {
    /// For groups built by [`FiniteGroup::subgroup_as_group`]: the parent index of element `a`.
    pub fn embedded_index(&self, a: usize) -> usize {
        self.word(a)[0] as usize
    }
}
