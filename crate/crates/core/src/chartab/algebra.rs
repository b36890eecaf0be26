use crate::group::{ClassData, FiniteGroup};

/// Structure constants of the class algebra, computed on demand.
///
/// `a(i, j, k)` is the coefficient of the class sum `C_k` in `C_i C_j`. The
/// matrix `M_i` has rows indexed by `j` and columns by `k`; characters give
/// the common eigenvectors `M_i w = omega(C_i) w`.
#[derive(Clone, Debug)]
pub struct ClassAlgebra {
    group: FiniteGroup,
    pub k: usize,
    pub class_sizes: Vec<u64>,
    pub exponent: u64,
}

/// The class algebra of `g` with respect to `classes`.
pub fn class_structure_constants(g: &FiniteGroup, classes: &ClassData) -> ClassAlgebra {
    ClassAlgebra {
        group: g.clone(),
        k: classes.len(),
        class_sizes: classes.sizes.iter().map(|&h| h as u64).collect(),
        exponent: classes.exponent,
    }
}

impl ClassAlgebra {
    pub fn group_order(&self) -> u64 {
        self.group.order() as u64
    }

    pub fn classes(&self) -> &ClassData {
        self.group.classes()
    }

    /// `(a(i, j, k))_k`, from one pass over class `i` against the representative of class `j`.
    pub fn column(&self, i: usize, j: usize) -> Vec<u64> {
        let c = self.classes();
        let g = &self.group;
        let zj = c.reps[j];
        let mut counts = vec![0u64; self.k];
        for &x in &c.members[i] {
            counts[c.class_of[g.mul(x, zj)] as usize] += 1;
        }
        let hj = self.class_sizes[j];
        counts
            .iter()
            .zip(&self.class_sizes)
            .map(|(&n, &hk)| {
                debug_assert_eq!(n * hj % hk, 0);
                n * hj / hk
            })
            .collect()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> u64 {
        self.column(i, j)[k]
    }

    /// Full matrix `M_i[j][k] = a(i, j, k)`.
    pub fn matrix(&self, i: usize) -> Vec<Vec<u64>> {
        (0..self.k).map(|j| self.column(i, j)).collect()
    }
}
