//! Builders for the group families used throughout the crate.

mod domains;
mod semidirect;
mod suzuki;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::domains::{Direct, Permutations};
use crate::group::{FiniteGroup, Word};

pub use domains::{Abelian, Heisenberg, Metacyclic};
pub use semidirect::{
    maximal_kernel_functionals, order_p_automorphism, semidirect_product, ActionSpec, Matrix,
    MaximalKernels, ModuleSpec, SemidirectProduct,
};
pub use suzuki::{sz8_borel, sz8_two_group, F8Element};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Cyclic,
    ElementaryAbelian,
    Homocyclic,
    Dihedral,
    Quaternion8,
    Alt5,
    SL23,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

fn abelian(moduli: Vec<u32>, bound: usize) -> Result<FiniteGroup> {
    let order = moduli
        .iter()
        .try_fold(1usize, |acc, &m| acc.checked_mul(m as usize))
        .unwrap_or(usize::MAX);
    if order > bound {
        return Err(Error::BoundExceeded { bound });
    }
    let d = Abelian::new(moduli);
    let gens = d.basis();
    FiniteGroup::enumerate(Arc::new(d), &gens, bound)
}

fn metacyclic(m: u64, k: u64, s: u64, t: u64) -> Result<FiniteGroup> {
    let d = Metacyclic::new(m, k, s, t)
        .ok_or_else(|| Error::BadParams("inconsistent metacyclic parameters".into()))?;
    let gens = d.generators();
    FiniteGroup::enumerate(Arc::new(d), &gens, usize::MAX)
}

fn param(params: &[u64], n: usize, family: Family) -> Result<&[u64]> {
    if params.len() != n {
        return Err(Error::BadParams(format!(
            "{family:?} takes {n} parameters, got {}",
            params.len()
        )));
    }
    Ok(params)
}

/// Builds one of the base families, refusing anything larger than `bound`.
pub fn build_base(family: Family, params: &[u64], bound: usize) -> Result<FiniteGroup> {
    let small = |x: u64| u32::try_from(x).map_err(|_| Error::BoundExceeded { bound });
    match family {
        Family::Cyclic => {
            let n = param(params, 1, family)?[0];
            if n == 0 {
                return Err(Error::BadParams("cyclic group of order 0".into()));
            }
            if n == 1 {
                return Ok(FiniteGroup::trivial());
            }
            abelian(vec![small(n)?], bound)
        }
        Family::ElementaryAbelian => {
            let p = param(params, 2, family)?;
            if !crate::arith::is_prime(p[0]) || p[1] == 0 {
                return Err(Error::BadParams("EA needs a prime and a positive rank".into()));
            }
            abelian(vec![small(p[0])?; small(p[1].min(64))? as usize], bound)
        }
        Family::Homocyclic => {
            let p = param(params, 2, family)?;
            if p[0] < 2 || p[1] == 0 {
                return Err(Error::BadParams("Homocyclic needs modulus >= 2 and rank >= 1".into()));
            }
            abelian(vec![small(p[0])?; small(p[1].min(64))? as usize], bound)
        }
        Family::Dihedral => {
            let n = param(params, 1, family)?[0];
            if n < 4 || n % 2 == 1 {
                return Err(Error::BadParams("dihedral order must be even and >= 4".into()));
            }
            if n > bound as u64 {
                return Err(Error::BoundExceeded { bound });
            }
            metacyclic(n / 2, 2, n / 2 - 1, 0)
        }
        Family::Quaternion8 => {
            param(params, 0, family)?;
            metacyclic(4, 2, 3, 2)
        }
        Family::Alt5 => {
            param(params, 0, family)?;
            let gens = [
                Permutations::from_cycles(5, &[&[0, 1, 2]]),
                Permutations::from_cycles(5, &[&[0, 1, 2, 3, 4]]),
            ];
            FiniteGroup::enumerate(Arc::new(Permutations::new(5)), &gens, bound.max(60))
        }
        Family::SL23 => {
            param(params, 0, family)?;
            sl23()
        }
    }
}

/// `SL(2,3)` acting on the eight nonzero vectors of `F_3^2`.
fn sl23() -> Result<FiniteGroup> {
    let vectors: Vec<(u32, u32)> = (0..3)
        .flat_map(|x| (0..3).map(move |y| (x, y)))
        .filter(|&v| v != (0, 0))
        .collect();
    let index = |v: (u32, u32)| vectors.iter().position(|&w| w == v).unwrap() as u32;
    let perm = |m: [[u32; 2]; 2]| -> Word {
        vectors
            .iter()
            .map(|&(x, y)| index(((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)))
            .collect()
    };
    let gens = [perm([[1, 1], [0, 1]]), perm([[1, 0], [1, 1]])];
    FiniteGroup::enumerate(Arc::new(Permutations::new(8)), &gens, usize::MAX)
}

/// The extraspecial groups of order `p^3` for `p` in `{2, 3}`.
pub fn extraspecial(p: u64, sign: Sign) -> Result<FiniteGroup> {
    match (p, sign) {
        (2, Sign::Plus) => metacyclic(4, 2, 3, 0),
        (2, Sign::Minus) => metacyclic(4, 2, 3, 2),
        (3, Sign::Plus) => {
            let gens = [Word::from_slice(&[1, 0, 0]), Word::from_slice(&[0, 1, 0])];
            FiniteGroup::enumerate(Arc::new(Heisenberg::new(3)), &gens, usize::MAX)
        }
        (3, Sign::Minus) => metacyclic(9, 3, 4, 0),
        _ => Err(Error::BadParams(format!("no extraspecial group of order {p}^3 here"))),
    }
}

/// Direct product of already enumerated groups.
pub fn direct_product(factors: &[FiniteGroup], bound: usize) -> Result<FiniteGroup> {
    let order = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.order()))
        .unwrap_or(usize::MAX);
    if order > bound {
        return Err(Error::BoundExceeded { bound });
    }
    let mut gens = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        for &g in f.generators() {
            let mut w: Word = factors.iter().map(|_| 0).collect();
            w[i] = g as u32;
            gens.push(w);
        }
    }
    FiniteGroup::enumerate(Arc::new(Direct::new(factors.to_vec())), &gens, bound)
}
