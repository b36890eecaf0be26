use super::FiniteGroup;

/// Conjugacy classes of a group, ordered by their smallest member.
#[derive(Clone, Debug)]
pub struct ClassData {
    /// Representative of each class: its smallest element index.
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub class_of: Vec<u32>,
    /// Sorted members of each class.
    pub members: Vec<Vec<usize>>,
    pub exponent: u64,
    power_map: Vec<u32>,
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class of `rep_i ^ j`, for any integer `j >= 0`.
    #[inline]
    pub fn power(&self, i: usize, j: u64) -> usize {
        let e = self.exponent as usize;
        self.power_map[i * e + (j % self.exponent) as usize] as usize
    }

    /// Class of the inverses of class `i`.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.power(i, self.exponent - 1)
    }

    /// Sorted distinct class sizes.
    pub fn size_set(&self) -> Vec<u64> {
        let mut s: Vec<u64> = self.sizes.iter().map(|&h| h as u64).collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

/// Conjugacy classes of `g`, served from the group's cache.
pub fn conjugacy_classes(g: &FiniteGroup) -> ClassData {
    g.classes().clone()
}

pub(super) fn compute_classes(g: &FiniteGroup) -> ClassData {
    let n = g.order();
    let gens = g.generators();
    let inv_gens: Vec<usize> = gens.iter().map(|&x| g.inv(x)).collect();
    let mut class_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    let mut members = Vec::new();
    for x in 0..n {
        if class_of[x] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        class_of[x] = c;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for (&s, &si) in gens.iter().zip(&inv_gens) {
                let z = g.mul(g.mul(si, y), s);
                if class_of[z] == u32::MAX {
                    class_of[z] = c;
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        members.push(orbit);
    }
    let sizes = members.iter().map(Vec::len).collect();
    let e = g.exponent();
    let k = reps.len();
    let mut power_map = Vec::with_capacity(k * e as usize);
    for &r in &reps {
        let mut y = 0usize;
        for _ in 0..e {
            power_map.push(class_of[y]);
            y = g.mul(y, r);
        }
    }
    ClassData {
        reps,
        sizes,
        class_of,
        members,
        exponent: e,
        power_map,
    }
}
