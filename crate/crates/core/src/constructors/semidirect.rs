//! Split extensions of an abelian module by an enumerated group.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::domains::Abelian;
use crate::arith::{factorize, is_prime, mult_order, pow_mod};
use crate::error::{Error, Result};
use crate::group::{
    derived_subgroup, normal_closure, Backing, FiniteGroup, Homomorphism, Multiplication,
    Subgroup, Word,
};

/// Square matrix over `Z_m`, row major, acting on column vectors.
pub type Matrix = Vec<Vec<u64>>;

/// An abelian group `prod C_{m_i}^{r_i}`, one entry `(m_i, r_i)` per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub factors: Vec<(u64, u32)>,
}

impl ModuleSpec {
    pub fn new(factors: Vec<(u64, u32)>) -> Result<Self> {
        if factors.is_empty() || factors.iter().any(|&(m, r)| m < 2 || r == 0) {
            return Err(Error::BadParams("module factors need modulus >= 2 and rank >= 1".into()));
        }
        Ok(ModuleSpec { factors })
    }

    pub fn order(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, &(m, r)| {
            acc.checked_mul(m.checked_pow(r)?)
        })
    }

    fn moduli(&self) -> Vec<u32> {
        self.factors
            .iter()
            .flat_map(|&(m, r)| std::iter::repeat(m as u32).take(r as usize))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ActionSpec {
    Trivial,
    /// Factor `i` is acted on through `P / M_i`, `M_i` the `i`-th maximal subgroup of `P`.
    MaximalKernels,
    /// `matrices[g][i]` is the matrix of actor generator `g` on factor `i`.
    ExplicitMatrices(Vec<Vec<Matrix>>),
}

/// A semidirect product `module ⋊ actor` with its structural maps.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub group: FiniteGroup,
    pub module: Subgroup,
    pub complement: Subgroup,
    pub projection: Homomorphism,
    /// For each factor, the elements of the actor acting trivially on it.
    pub factor_kernels: Vec<Subgroup>,
}

/// Words are module coordinates followed by the actor index.
struct SplitExtension {
    moduli: Vec<u32>,
    /// Flattened block diagonal action per actor element: `blocks[h][f]` is row major.
    blocks: Vec<Vec<Vec<u64>>>,
    spans: Vec<(usize, usize)>,
    actor: FiniteGroup,
}

impl SplitExtension {
    fn act(&self, h: usize, v: &[u32], out: &mut Word) {
        for (f, &(start, r)) in self.spans.iter().enumerate() {
            let m = self.moduli[start] as u64;
            let mat = &self.blocks[h][f];
            for i in 0..r {
                let mut acc = 0u64;
                for j in 0..r {
                    acc += mat[i * r + j] * v[start + j] as u64;
                }
                out.push((acc % m) as u32);
            }
        }
    }
}

impl Multiplication for SplitExtension {
    fn identity(&self) -> Word {
        let mut w: Word = self.moduli.iter().map(|_| 0).collect();
        w.push(0);
        w
    }
    fn multiply(&self, a: &[u32], b: &[u32]) -> Word {
        let d = self.moduli.len();
        let h1 = a[d] as usize;
        let mut w = Word::new();
        self.act(h1, &b[..d], &mut w);
        for i in 0..d {
            w[i] = (w[i] + a[i]) % self.moduli[i];
        }
        w.push(self.actor.mul(h1, b[d] as usize) as u32);
        w
    }
    fn is_valid(&self, w: &[u32]) -> bool {
        let d = self.moduli.len();
        w.len() == d + 1
            && w[..d].iter().zip(&self.moduli).all(|(&x, &m)| x < m)
            && (w[d] as usize) < self.actor.order()
    }
    fn backing(&self) -> Backing {
        Backing::Semidirect
    }
}

fn mat_mul(a: &[u64], b: &[u64], r: usize, m: u64) -> Vec<u64> {
    let mut c = vec![0u64; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x == 0 {
                continue;
            }
            for j in 0..r {
                c[i * r + j] = (c[i * r + j] + x * b[k * r + j]) % m;
            }
        }
    }
    c
}

fn identity_mat(r: usize) -> Vec<u64> {
    let mut c = vec![0u64; r * r];
    for i in 0..r {
        c[i * r + i] = 1;
    }
    c
}

fn mat_pow(a: &[u64], n: u64, r: usize, m: u64) -> Vec<u64> {
    (0..n).fold(identity_mat(r), |acc, _| mat_mul(&acc, a, r, m))
}

/// Builds `module ⋊ actor` with `(n1, h1)(n2, h2) = (n1 + h1·n2, h1 h2)`.
pub fn semidirect_product(
    module: &ModuleSpec,
    actor: &FiniteGroup,
    action: &ActionSpec,
    bound: usize,
) -> Result<SemidirectProduct> {
    let order = module
        .order()
        .and_then(|o| o.checked_mul(actor.order() as u64))
        .unwrap_or(u64::MAX);
    if order > bound as u64 {
        return Err(Error::BoundExceeded { bound });
    }
    let gen_blocks = generator_blocks(module, actor, action)?;
    let mut spans = Vec::new();
    let mut start = 0;
    for &(_, r) in &module.factors {
        spans.push((start, r as usize));
        start += r as usize;
    }

    // Extend the generator action along the enumeration of the actor.
    let n = actor.order();
    let mut blocks: Vec<Option<Vec<Vec<u64>>>> = vec![None; n];
    blocks[0] = Some(module.factors.iter().map(|&(_, r)| identity_mat(r as usize)).collect());
    let mut queue = vec![0usize];
    let mut qi = 0;
    while qi < queue.len() {
        let x = queue[qi];
        qi += 1;
        for (gi, &s) in actor.generators().iter().enumerate() {
            let y = actor.mul(x, s);
            let prod: Vec<Vec<u64>> = module
                .factors
                .iter()
                .enumerate()
                .map(|(f, &(m, r))| {
                    mat_mul(&blocks[x].as_ref().unwrap()[f], &gen_blocks[gi][f], r as usize, m)
                })
                .collect();
            match &blocks[y] {
                None => {
                    blocks[y] = Some(prod);
                    queue.push(y);
                }
                Some(existing) if *existing != prod => {
                    return Err(Error::ActionNotHomomorphism(format!(
                        "element {x} times generator {gi} is inconsistent"
                    )));
                }
                Some(_) => {}
            }
        }
    }
    let blocks: Vec<Vec<Vec<u64>>> = blocks.into_iter().map(|b| b.unwrap()).collect();

    let factor_kernels = (0..module.factors.len())
        .map(|f| {
            let r = module.factors[f].1 as usize;
            let id = identity_mat(r);
            let members = actor.elements().filter(|&h| blocks[h][f] == id).collect();
            Subgroup::from_members(actor, members)
        })
        .collect();

    let moduli = module.moduli();
    let d = moduli.len();
    let domain = SplitExtension {
        moduli: moduli.clone(),
        blocks,
        spans,
        actor: actor.clone(),
    };
    let mut gens: Vec<Word> = Abelian::new(moduli)
        .basis()
        .into_iter()
        .map(|mut w| {
            w.push(0);
            w
        })
        .collect();
    for &s in actor.generators() {
        let mut w: Word = (0..d).map(|_| 0).collect();
        w.push(s as u32);
        gens.push(w);
    }
    let group = FiniteGroup::enumerate(Arc::new(domain), &gens, bound)?;
    let module_members = group.elements().filter(|&x| group.word(x)[d] == 0).collect();
    let complement_members = group
        .elements()
        .filter(|&x| group.word(x)[..d].iter().all(|&c| c == 0))
        .collect();
    let image_of = group.elements().map(|x| group.word(x)[d]).collect();
    Ok(SemidirectProduct {
        module: Subgroup::from_members(&group, module_members),
        complement: Subgroup::from_members(&group, complement_members),
        projection: Homomorphism::new(group.clone(), actor.clone(), image_of),
        group,
        factor_kernels,
    })
}

/// Matrices of each actor generator on each factor.
fn generator_blocks(
    module: &ModuleSpec,
    actor: &FiniteGroup,
    action: &ActionSpec,
) -> Result<Vec<Vec<Vec<u64>>>> {
    let ngens = actor.generators().len();
    match action {
        ActionSpec::Trivial => Ok(vec![
            module
                .factors
                .iter()
                .map(|&(_, r)| identity_mat(r as usize))
                .collect();
            ngens
        ]),
        ActionSpec::ExplicitMatrices(mats) => {
            if mats.len() != ngens {
                return Err(Error::BadParams(format!(
                    "expected matrices for {ngens} actor generators, got {}",
                    mats.len()
                )));
            }
            mats.iter()
                .map(|per_factor| {
                    if per_factor.len() != module.factors.len() {
                        return Err(Error::BadParams(format!(
                            "expected {} factor matrices per generator",
                            module.factors.len()
                        )));
                    }
                    per_factor
                        .iter()
                        .zip(&module.factors)
                        .map(|(mat, &(m, r))| {
                            let r = r as usize;
                            if mat.len() != r || mat.iter().any(|row| row.len() != r) {
                                return Err(Error::BadParams(format!(
                                    "factor of rank {r} needs a {r}x{r} matrix"
                                )));
                            }
                            Ok(mat.iter().flatten().map(|&x| x % m).collect())
                        })
                        .collect()
                })
                .collect()
        }
        ActionSpec::MaximalKernels => {
            let maxes = maximal_kernel_functionals(actor)?;
            if maxes.functionals.len() != module.factors.len() {
                return Err(Error::FactorCountMismatch {
                    factors: module.factors.len(),
                    maximal: maxes.functionals.len(),
                });
            }
            let p = maxes.p;
            let autos: Vec<Vec<u64>> = module
                .factors
                .iter()
                .map(|&(m, r)| order_p_automorphism(m, r as usize, p))
                .collect::<Result<_>>()?;
            Ok(actor
                .generators()
                .iter()
                .map(|&s| {
                    let c = &maxes.coords[s];
                    maxes
                        .functionals
                        .iter()
                        .zip(&module.factors)
                        .zip(&autos)
                        .map(|((f, &(m, r)), a)| {
                            let v = f.iter().zip(c).map(|(x, y)| x * y).sum::<u64>() % p;
                            mat_pow(a, v, r as usize, m)
                        })
                        .collect()
                })
                .collect())
        }
    }
}

/// Frattini coordinates of a `p`-group and the normalized functionals whose
/// kernels are its maximal subgroups, ordered by kernel member sets.
pub struct MaximalKernels {
    pub p: u64,
    pub coords: Vec<Vec<u64>>,
    pub functionals: Vec<Vec<u64>>,
    pub kernels: Vec<Subgroup>,
}

pub fn maximal_kernel_functionals(actor: &FiniteGroup) -> Result<MaximalKernels> {
    let f = factorize(actor.order() as u64);
    if f.len() != 1 {
        return Err(Error::BadParams(
            "maximal-kernel actions need a nontrivial p-group".into(),
        ));
    }
    let p = f[0].0;
    let mut seeds: Vec<usize> = derived_subgroup(actor).generators().to_vec();
    seeds.extend(actor.generators().iter().map(|&g| actor.pow(g, p)));
    let frattini = normal_closure(actor, &seeds);

    let mut basis = Vec::new();
    let mut span = frattini.clone();
    for &g in actor.generators() {
        if !span.contains(g) {
            basis.push(g);
            span = span.join_element(g);
        }
    }
    let d = basis.len();
    let mut coords = vec![Vec::new(); actor.order()];
    let total = (p as usize).pow(d as u32);
    for code in 0..total {
        let mut c = Vec::with_capacity(d);
        let mut rest = code;
        let mut x = 0usize;
        for &b in &basis {
            let e = (rest % p as usize) as u64;
            rest /= p as usize;
            c.push(e);
            x = actor.mul(x, actor.pow(b, e));
        }
        for &m in frattini.members() {
            coords[actor.mul(x, m)] = c.clone();
        }
    }

    let mut pairs: Vec<(Subgroup, Vec<u64>)> = Vec::new();
    for code in 1..total {
        let mut fvec = Vec::with_capacity(d);
        let mut rest = code;
        for _ in 0..d {
            fvec.push((rest % p as usize) as u64);
            rest /= p as usize;
        }
        if fvec.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        let members = actor
            .elements()
            .filter(|&x| fvec.iter().zip(&coords[x]).map(|(a, b)| a * b).sum::<u64>() % p == 0)
            .collect();
        pairs.push((Subgroup::from_members(actor, members), fvec));
    }
    pairs.sort_by(|a, b| a.0.members().cmp(b.0.members()));
    let (kernels, functionals) = pairs.into_iter().unzip();
    Ok(MaximalKernels {
        p,
        coords,
        functionals,
        kernels,
    })
}

/// Canonical automorphism of order `p` of `C_m^r`, as a row-major matrix.
pub fn order_p_automorphism(m: u64, r: usize, p: u64) -> Result<Vec<u64>> {
    if r == 1 {
        let a = (2..m)
            .find(|&a| mult_order(a, m) == Some(p))
            .ok_or_else(|| Error::BadParams(format!("no unit of order {p} modulo {m}")))?;
        return Ok(vec![a]);
    }
    if !is_prime(m) {
        return Err(Error::BadParams(format!(
            "rank {r} factors need a prime modulus, got {m}"
        )));
    }
    let poly = smallest_irreducible_factor(m, r, p).ok_or_else(|| {
        Error::BadParams(format!("x^{p} - 1 has no irreducible factor of degree {r} over F_{m}"))
    })?;
    // Companion matrix of x^r + c_{r-1} x^{r-1} + ... + c_0.
    let mut c = vec![0u64; r * r];
    for i in 1..r {
        c[i * r + (i - 1)] = 1;
    }
    for (i, &coef) in poly.iter().enumerate() {
        c[i * r + (r - 1)] = (m - coef) % m;
    }
    Ok(c)
}

/// Lowest coefficients `c_0..c_{r-1}` (compared from `c_0` upward) of a monic
/// irreducible degree-`r` divisor of `x^p - 1` over `F_q`.
fn smallest_irreducible_factor(q: u64, r: usize, p: u64) -> Option<Vec<u64>> {
    let count = q.checked_pow(r as u32)?;
    (0..count)
        .map(|code| {
            let mut c = Vec::with_capacity(r);
            let mut rest = code;
            for _ in 0..r {
                c.push(rest % q);
                rest /= q;
            }
            c
        })
        .find(|c| {
            let mut f = c.clone();
            f.push(1);
            is_irreducible(&f, q) && x_pow_mod(p, &f, q) == {
                let mut one = vec![0u64; r];
                one[0] = 1;
                one
            }
        })
}

/// `x^n mod f` over `F_q`, `f` monic of degree `r`, as `r` coefficients.
fn x_pow_mod(n: u64, f: &[u64], q: u64) -> Vec<u64> {
    let r = f.len() - 1;
    let mut acc = vec![0u64; r];
    acc[0] = 1 % q;
    for _ in 0..n {
        // multiply by x
        let top = acc[r - 1];
        for i in (1..r).rev() {
            acc[i] = (acc[i - 1] + q * q - top * f[i] % q) % q;
        }
        acc[0] = (q * q - top * f[0] % q) % q;
    }
    acc
}

fn poly_rem(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let db = b.len() - 1;
    let inv_lead = pow_mod(b[db], q - 2, q);
    while a.len() > db {
        let lead = *a.last().unwrap() * inv_lead % q;
        let shift = a.len() - 1 - db;
        for (i, &bc) in b.iter().enumerate() {
            a[shift + i] = (a[shift + i] + q * q - lead * bc % q) % q;
        }
        a.pop();
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Irreducibility over `F_q` by trial division with every monic polynomial of
/// degree at most half.
fn is_irreducible(f: &[u64], q: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = q.pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut rest = code;
            for _ in 0..d {
                g.push(rest % q);
                rest /= q;
            }
            g.push(1);
            if poly_rem(f, &g, q).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn companion_for_cube_roots_over_f2() {
        assert_eq!(smallest_irreducible_factor(2, 2, 3), Some(vec![1, 1]));
        let c = order_p_automorphism(2, 2, 3).unwrap();
        let c3 = mat_pow(&c, 3, 2, 2);
        assert_eq!(c3, identity_mat(2));
        assert_ne!(c, identity_mat(2));
    }

    #[test]
    fn rank_one_multipliers() {
        assert_eq!(order_p_automorphism(7, 1, 3).unwrap(), vec![2]);
        assert_eq!(order_p_automorphism(9, 1, 2).unwrap(), vec![8]);
        assert_eq!(order_p_automorphism(11, 1, 2).unwrap(), vec![10]);
        assert!(order_p_automorphism(7, 1, 5).is_err());
    }

    #[test]
    fn irreducibility_matches_root_scan_for_quadratics() {
        for q in [2u64, 3, 5] {
            for c0 in 0..q {
                for c1 in 0..q {
                    let has_root = (0..q).any(|x| (x * x + c1 * x + c0) % q == 0);
                    assert_eq!(is_irreducible(&[c0, c1, 1], q), !has_root);
                }
            }
        }
    }

    #[test]
    fn maximal_kernel_products() {
        use crate::constructors::{extraspecial, Sign};
        for sign in [Sign::Plus, Sign::Minus] {
            let p = extraspecial(2, sign).unwrap();
            let module = ModuleSpec::new(vec![(3, 1); 3]).unwrap();
            let sd = semidirect_product(&module, &p, &ActionSpec::MaximalKernels, 10_000).unwrap();
            assert_eq!(sd.group.order(), 216);
            assert!(sd.group.spot_check_axioms(10_000, 7));
            assert!(sd.projection.check(1000, 1));
            assert_eq!(sd.module.order(), 27);
            assert!(sd.module.is_normal());
            let mk = maximal_kernel_functionals(&p).unwrap();
            assert_eq!(sd.factor_kernels, mk.kernels);
            let bad = ModuleSpec::new(vec![(3, 1); 2]).unwrap();
            assert_eq!(
                semidirect_product(&bad, &p, &ActionSpec::MaximalKernels, 10_000).unwrap_err(),
                Error::FactorCountMismatch { factors: 2, maximal: 3 }
            );
        }
        let p = extraspecial(3, Sign::Plus).unwrap();
        let module = ModuleSpec::new(vec![(2, 2); 4]).unwrap();
        let sd = semidirect_product(&module, &p, &ActionSpec::MaximalKernels, 10_000).unwrap();
        assert_eq!(sd.group.order(), 27 * 256);
        assert_eq!(sd.factor_kernels, maximal_kernel_functionals(&p).unwrap().kernels);
    }

    #[test]
    fn explicit_action_must_be_homomorphism() {
        use crate::constructors::{build_base, Family};
        let c2 = build_base(Family::Cyclic, &[2], 10).unwrap();
        let module = ModuleSpec::new(vec![(7, 1)]).unwrap();
        let bad = ActionSpec::ExplicitMatrices(vec![vec![vec![vec![2]]]]);
        assert!(matches!(
            semidirect_product(&module, &c2, &bad, 1000),
            Err(Error::ActionNotHomomorphism(_))
        ));
        let good = ActionSpec::ExplicitMatrices(vec![vec![vec![vec![6]]]]);
        let sd = semidirect_product(&module, &c2, &good, 1000).unwrap();
        assert_eq!(sd.group.order(), 14);
        assert_eq!(crate::group::center(&sd.group).order(), 1);
        let triv = semidirect_product(&module, &c2, &ActionSpec::Trivial, 1000).unwrap();
        assert!(triv.group.is_abelian());
        assert!(semidirect_product(&module, &c2, &ActionSpec::Trivial, 10).is_err());
    }
}
