use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::algebra::class_structure_constants;
use super::cyclotomic::{CyclotomicField, CyclotomicValue};
use super::dixon::{dixon_primes, modular_character_table};
use super::lift::lift_to_cyclotomic;
use crate::arith::{is_prime, pow_mod, primitive_root};
use crate::error::{Error, Result};
use crate::group::{ClassData, FiniteGroup};

/// Irreducible characters of a group with exact cyclotomic values.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub rows: Vec<Vec<CyclotomicValue>>,
    pub degrees: Vec<u64>,
    pub dixon_prime: u64,
    pub class_data: Arc<ClassData>,
    pub field: Arc<CyclotomicField>,
    pub group_order: u64,
}

/// Wire form of a table: integers only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedTable {
    pub conductor: u64,
    pub class_sizes: Vec<u64>,
    pub rows: Vec<SerializedRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedRow {
    pub degree: u64,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.class_data.sizes.iter().map(|&h| h as u64).collect()
    }

    /// Whether some character is zero on class `j`.
    pub fn is_vanishing_class(&self, j: usize) -> bool {
        self.rows.iter().any(|r| r[j].is_zero())
    }

    pub fn vanishing_classes(&self) -> Vec<usize> {
        (0..self.class_data.len())
            .filter(|&j| self.is_vanishing_class(j))
            .collect()
    }

    pub fn serialize(&self) -> SerializedTable {
        SerializedTable {
            conductor: self.field.e,
            class_sizes: self.class_sizes(),
            rows: self
                .rows
                .iter()
                .zip(&self.degrees)
                .map(|(r, &d)| SerializedRow {
                    degree: d,
                    values: r.iter().map(|v| v.coeffs.clone()).collect(),
                })
                .collect(),
        }
    }
}

/// Character table of `g` using the smallest Dixon prime.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    character_table_nth_prime(g, 0)
}

/// Character table of `g` using the `n`-th smallest Dixon prime (from zero).
pub fn character_table_nth_prime(g: &FiniteGroup, n: usize) -> Result<CharacterTable> {
    let classes = g.classes();
    let order = g.order() as u64;
    let e = classes.exponent;
    let p = dixon_primes(order, e).nth(n).unwrap();
    let alg = class_structure_constants(g, classes);
    let modular = modular_character_table(&alg, p)?;
    let lifted = lift_to_cyclotomic(&modular, classes, e)?;
    let mut paired: Vec<(u64, Vec<CyclotomicValue>)> =
        lifted.degrees.into_iter().zip(lifted.rows).collect();
    paired.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    let (degrees, rows) = paired.into_iter().unzip();
    let table = CharacterTable {
        rows,
        degrees,
        dixon_prime: p,
        class_data: Arc::new(classes.clone()),
        field: lifted.field,
        group_order: order,
    };
    if !verify_orthogonality(&table) {
        return Err(Error::LiftInconsistent(
            "lifted table fails the orthogonality relations".into(),
        ));
    }
    Ok(table)
}

/// Maps each row under every Galois automorphism and checks that the image
/// is again a row.
pub fn is_galois_stable(table: &CharacterTable) -> bool {
    let index: FxHashMap<&Vec<CyclotomicValue>, usize> =
        table.rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
    table.field.units().into_iter().filter(|&j| j != 1).all(|j| {
        table.rows.iter().all(|r| {
            let img: Vec<CyclotomicValue> = r.iter().map(|v| v.galois(&table.field, j)).collect();
            index.contains_key(&img)
        })
    })
}

/// Exact first and second orthogonality.
///
/// Every relation is an identity in `Z[zeta_e]` whose reduced coefficients
/// are bounded a priori. It is checked modulo enough primes `q = 1 mod e`
/// that their product exceeds twice the bound, at every primitive `e`-th
/// root of unity mod `q`. When the table is closed under the Galois group a
/// single root suffices, since the other evaluations are entries of the
/// same relation matrices.
pub fn verify_orthogonality(table: &CharacterTable) -> bool {
    let k = table.class_data.len();
    let n = table.group_order;
    let field = &table.field;
    if table.rows.len() != k || table.degrees.len() != k || k == 0 {
        return false;
    }
    if table.rows.iter().any(|r| r.len() != k) {
        return false;
    }
    for (r, &d) in table.rows.iter().zip(&table.degrees) {
        if r[0].as_integer() != Some(d as i64) {
            return false;
        }
    }
    if table.degrees.iter().map(|d| d * d).sum::<u64>() != n {
        return false;
    }
    let sizes = table.class_sizes();
    let conj: Vec<Vec<CyclotomicValue>> = table
        .rows
        .iter()
        .map(|r| r.iter().map(|v| v.conj(field)).collect())
        .collect();
    let max_coeff = |rows: &[Vec<CyclotomicValue>]| -> u128 {
        rows.iter()
            .flatten()
            .flat_map(|v| v.coeffs.iter().map(|c| c.unsigned_abs() as u128))
            .max()
            .unwrap_or(0)
    };
    let a = max_coeff(&table.rows);
    let ac = max_coeff(&conj);
    let phi = field.phi as u128;
    let growth = field.reduction_growth() as u128;
    let per_term = phi * a * ac * growth;
    let bound = (n as u128 * per_term + n as u128).max(k as u128 * per_term + n as u128);

    let stable = is_galois_stable(table);
    let e = field.e;
    let mut product: u128 = 1;
    let mut q = ((1u64 << 31) - 1) / e * e + 1;
    while product <= 2 * bound {
        while q >= (1 << 31) || !is_prime(q) {
            q -= e;
        }
        let root = pow_mod(primitive_root(q), (q - 1) / e, q);
        let exponents: Vec<u64> = if stable { vec![1] } else { field.units() };
        for j in exponents {
            if !relations_hold_mod(table, &sizes, q, pow_mod(root, j, q)) {
                return false;
            }
        }
        product = product.saturating_mul(q as u128);
        q -= e;
    }
    true
}

fn relations_hold_mod(table: &CharacterTable, sizes: &[u64], q: u64, rho: u64) -> bool {
    let k = sizes.len();
    let e = table.field.e;
    let pw: Vec<u64> = (0..e)
        .scan(1u64, |acc, _| {
            let cur = *acc;
            *acc = *acc * rho % q;
            Some(cur)
        })
        .collect();
    let eval = |v: &CyclotomicValue, inverse: bool| -> u64 {
        v.coeffs.iter().enumerate().fold(0u64, |acc, (s, &c)| {
            let idx = if inverse { (e - s as u64 % e) % e } else { s as u64 };
            let c = c.rem_euclid(q as i64) as u64;
            (acc + c * pw[idx as usize]) % q
        })
    };
    let y: Vec<Vec<u64>> = table.rows.iter().map(|r| r.iter().map(|v| eval(v, false)).collect()).collect();
    let ybar: Vec<Vec<u64>> = table.rows.iter().map(|r| r.iter().map(|v| eval(v, true)).collect()).collect();
    let dot = |a: &[u64], b: &[u64]| -> u64 {
        (a.iter().zip(b).map(|(&x, &y)| x as u128 * y as u128).sum::<u128>() % q as u128) as u64
    };
    let n = table.group_order % q;
    for chi in 0..k {
        let weighted: Vec<u64> = y[chi].iter().zip(sizes).map(|(&v, &h)| v * (h % q) % q).collect();
        for psi in 0..k {
            let expect = if chi == psi { n } else { 0 };
            if dot(&weighted, &ybar[psi]) != expect {
                return false;
            }
        }
    }
    let yt: Vec<Vec<u64>> = (0..k).map(|c| (0..k).map(|r| y[r][c]).collect()).collect();
    let ybart: Vec<Vec<u64>> = (0..k).map(|c| (0..k).map(|r| ybar[r][c]).collect()).collect();
    for a in 0..k {
        for b in 0..k {
            let expect = if a == b { (table.group_order / sizes[a]) % q } else { 0 };
            if dot(&ybart[a], &yt[b]) != expect {
                return false;
            }
        }
    }
    true
}
