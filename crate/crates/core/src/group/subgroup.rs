use std::fmt;

use super::{BitSet, FiniteGroup};

/// A subgroup of an enumerated group, stored as a sorted member list.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Vec<usize>,
    set: BitSet,
    generators: Vec<usize>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

/// Growing closure used while adding generators one at a time.
struct Closure<'a> {
    g: &'a FiniteGroup,
    members: Vec<usize>,
    set: BitSet,
    gens: Vec<usize>,
}

impl<'a> Closure<'a> {
    fn new(g: &'a FiniteGroup) -> Self {
        let mut set = BitSet::new(g.order());
        set.insert(0);
        Closure {
            g,
            members: vec![0],
            set,
            gens: Vec::new(),
        }
    }

    /// Adds `x` as a generator. Returns `false` if the closure outgrew `limit`.
    fn add(&mut self, x: usize, limit: usize) -> bool {
        if self.set.contains(x) {
            return true;
        }
        self.gens.push(x);
        let old = self.members.len();
        let mut next = old;
        for i in 0..old {
            let y = self.g.mul(self.members[i], x);
            if self.set.insert(y) {
                self.members.push(y);
            }
        }
        while next < self.members.len() {
            if self.members.len() > limit {
                return false;
            }
            let m = self.members[next];
            for &s in &self.gens {
                let y = self.g.mul(m, s);
                if self.set.insert(y) {
                    self.members.push(y);
                }
            }
            next += 1;
        }
        self.members.len() <= limit
    }

    fn finish(mut self) -> Subgroup {
        self.members.sort_unstable();
        Subgroup {
            parent: self.g.clone(),
            members: self.members,
            set: self.set,
            generators: self.gens,
        }
    }
}

impl Subgroup {
    /// The subgroup generated by `gens`.
    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
        let mut c = Closure::new(g);
        for &x in gens {
            c.add(x, usize::MAX);
        }
        c.finish()
    }

    /// The subgroup generated by `gens`, or `None` once it exceeds `limit` elements.
    pub fn generated_bounded(g: &FiniteGroup, gens: &[usize], limit: usize) -> Option<Subgroup> {
        let mut c = Closure::new(g);
        for &x in gens {
            if !c.add(x, limit) {
                return None;
            }
        }
        Some(c.finish())
    }

    /// Wraps a member list known to form a subgroup. A generating set is
    /// chosen greedily in index order.
    pub fn from_members(g: &FiniteGroup, mut members: Vec<usize>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        let mut c = Closure::new(g);
        for &x in &members {
            if c.members.len() == members.len() {
                break;
            }
            c.add(x, usize::MAX);
        }
        let s = c.finish();
        debug_assert_eq!(s.members, members, "member list is not a subgroup");
        s
    }

    pub fn trivial(g: &FiniteGroup) -> Subgroup {
        Closure::new(g).finish()
    }

    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup::generated(g, g.generators())
    }

    /// Adds one more generator.
    pub fn join_element(&self, x: usize) -> Subgroup {
        if self.contains(x) {
            return self.clone();
        }
        let mut c = Closure {
            g: &self.parent,
            members: self.members.clone(),
            set: self.set.clone(),
            gens: self.generators.clone(),
        };
        c.add(x, usize::MAX);
        c.finish()
    }

    /// `<self, other>`
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut c = Closure {
            g: &self.parent,
            members: self.members.clone(),
            set: self.set.clone(),
            gens: self.generators.clone(),
        };
        for &x in &other.generators {
            c.add(x, usize::MAX);
        }
        c.finish()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Subgroup::from_members(&self.parent, members)
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn bits(&self) -> &BitSet {
        &self.set
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.set.is_subset(&other.set)
    }

    /// Normal in the parent: generators are stable under conjugation by parent generators.
    pub fn is_normal(&self) -> bool {
        self.is_normalized_by(self.parent.generators())
    }

    pub fn is_normalized_by(&self, elements: &[usize]) -> bool {
        let g = &self.parent;
        self.generators
            .iter()
            .all(|&h| elements.iter().all(|&x| self.contains(g.conj(h, x))))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commutes(a, b)))
    }

    /// `{x in self : x commutes with every element of other}`
    pub fn centralizer_in(&self, other: &Subgroup) -> Subgroup {
        self.centralizing(other.generators())
    }

    /// Members commuting with all of `elements`.
    pub fn centralizing(&self, elements: &[usize]) -> Subgroup {
        let g = &self.parent;
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&x| elements.iter().all(|&y| g.commutes(x, y)))
            .collect();
        Subgroup::from_members(g, members)
    }

    /// Normalizer in the parent, by a full scan.
    pub fn normalizer(&self) -> Subgroup {
        let g = &self.parent;
        let members = g
            .elements()
            .filter(|&x| self.generators.iter().all(|&h| self.contains(g.conj(h, x))))
            .collect();
        Subgroup::from_members(g, members)
    }

    /// Center of this subgroup.
    pub fn center(&self) -> Subgroup {
        self.centralizer_in(self)
    }

    /// Conjugate `x^-1 H x`.
    pub fn conjugate(&self, x: usize) -> Subgroup {
        let g = &self.parent;
        let members = self.members.iter().map(|&h| g.conj(h, x)).collect();
        Subgroup::from_members(g, members)
    }

    /// Product set `self * other`, assumed to be a subgroup (one factor normalizes the other).
    pub fn product(&self, other: &Subgroup) -> Subgroup {
        self.join(other)
    }
}

/// `Z(G)`: elements commuting with every generator.
pub fn center(g: &FiniteGroup) -> Subgroup {
    Subgroup::whole(g).centralizing(g.generators())
}

/// Smallest normal subgroup containing `s`.
pub fn normal_closure(g: &FiniteGroup, s: &[usize]) -> Subgroup {
    let mut c = Closure::new(g);
    for &x in s {
        c.add(x, usize::MAX);
    }
    let mut i = 0;
    while i < c.gens.len() {
        let h = c.gens[i];
        for &x in g.generators() {
            let y = g.conj(h, x);
            c.add(y, usize::MAX);
        }
        i += 1;
    }
    c.finish()
}

/// `[G, G]` as the normal closure of generator commutators.
pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            comms.push(g.commutator(a, b));
        }
    }
    normal_closure(g, &comms)
}
