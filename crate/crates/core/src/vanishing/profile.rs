use serde::Serialize;

use crate::arith::prime_divisors;
use crate::chartab::{character_table, CharacterTable};
use crate::error::Result;
use crate::group::{FiniteGroup, Subgroup};

/// Class sizes of a group split by whether some irreducible character vanishes there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingProfile {
    pub cs: Vec<u64>,
    pub vcs: Vec<u64>,
    pub vanishing_class_indices: Vec<usize>,
    pub nonvanishing_class_indices: Vec<usize>,
    /// The unique vanishing class size, when there is exactly one.
    pub s: Option<u64>,
    /// Prime divisors of `s` (empty when `s` is absent).
    pub pi: Vec<u64>,
    #[serde(skip)]
    vanishing: Vec<bool>,
}

impl VanishingProfile {
    pub fn from_table(table: &CharacterTable) -> Self {
        let classes = &table.class_data;
        let vanishing: Vec<bool> = (0..classes.len())
            .map(|j| table.is_vanishing_class(j))
            .collect();
        let mut vcs: Vec<u64> = (0..classes.len())
            .filter(|&j| vanishing[j])
            .map(|j| classes.sizes[j] as u64)
            .collect();
        vcs.sort_unstable();
        vcs.dedup();
        let s = (vcs.len() == 1).then(|| vcs[0]);
        VanishingProfile {
            cs: classes.size_set(),
            vanishing_class_indices: (0..classes.len()).filter(|&j| vanishing[j]).collect(),
            nonvanishing_class_indices: (0..classes.len()).filter(|&j| !vanishing[j]).collect(),
            pi: s.map(prime_divisors).unwrap_or_default(),
            s,
            vcs,
            vanishing,
        }
    }

    pub fn is_vanishing_class(&self, j: usize) -> bool {
        self.vanishing[j]
    }

    /// Whether element `x` of the profiled group is vanishing.
    pub fn is_vanishing(&self, g: &FiniteGroup, x: usize) -> bool {
        self.vanishing[g.classes().class_of[x] as usize]
    }

    /// Whether `h` contains no vanishing element of the profiled group.
    pub fn avoids_vanishing(&self, h: &Subgroup) -> bool {
        let g = h.parent();
        h.members().iter().all(|&x| !self.is_vanishing(g, x))
    }

    /// A vanishing element of the profiled group lying in `h`, if any.
    pub fn vanishing_in(&self, h: &Subgroup) -> Option<usize> {
        let g = h.parent();
        h.members().iter().copied().find(|&x| self.is_vanishing(g, x))
    }
}

/// Character table of `g` together with its vanishing profile.
pub fn vanishing_profile(g: &FiniteGroup) -> Result<VanishingProfile> {
    Ok(VanishingProfile::from_table(&character_table(g)?))
}
