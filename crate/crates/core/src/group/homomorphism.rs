use std::sync::Arc;

use super::domains::Cosets;
use super::{FiniteGroup, Subgroup, Word};
use crate::error::{Error, Result};

/// A group homomorphism stored as an image table.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    pub source: FiniteGroup,
    pub target: FiniteGroup,
    image_of: Vec<u32>,
}

impl Homomorphism {
    pub fn new(source: FiniteGroup, target: FiniteGroup, image_of: Vec<u32>) -> Self {
        Homomorphism {
            source,
            target,
            image_of,
        }
    }

    #[inline]
    pub fn image_of(&self, x: usize) -> usize {
        self.image_of[x] as usize
    }

    /// Checks the homomorphism property on all generator pairs and `samples` random pairs.
    pub fn check(&self, samples: usize, seed: u64) -> bool {
        use rand::{Rng, SeedableRng};
        if self.image_of(0) != 0 {
            return false;
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = self.source.order();
        (0..samples).all(|_| {
            let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
            self.image_of(self.source.mul(x, y))
                == self.target.mul(self.image_of(x), self.image_of(y))
        })
    }

    pub fn kernel(&self) -> Subgroup {
        let members = self
            .source
            .elements()
            .filter(|&x| self.image_of[x] == 0)
            .collect();
        Subgroup::from_members(&self.source, members)
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let members = self
            .source
            .elements()
            .filter(|&x| h.contains(self.image_of(x)))
            .collect();
        Subgroup::from_members(&self.source, members)
    }

    /// Image of a subgroup of the source.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = h.generators().iter().map(|&x| self.image_of(x)).collect();
        Subgroup::generated(&self.target, &gens)
    }
}

/// `G/N` with cosets labelled by their smallest member, and the projection.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, Homomorphism)> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let mut label = vec![u32::MAX; g.order()];
    for x in g.elements() {
        if label[x] != u32::MAX {
            continue;
        }
        for &m in n.members() {
            label[g.mul(x, m)] = x as u32;
        }
    }
    let gens: Vec<Word> = g
        .generators()
        .iter()
        .map(|&x| Word::from_slice(&[label[x]]))
        .collect();
    let domain = Arc::new(Cosets::new(g.clone(), label.clone()));
    let q = FiniteGroup::enumerate(domain, &gens, usize::MAX)?;
    let image_of = label
        .iter()
        .map(|&l| q.index_of(&[l]).expect("coset label enumerated") as u32)
        .collect();
    Ok((q.clone(), Homomorphism::new(g.clone(), q, image_of)))
}
