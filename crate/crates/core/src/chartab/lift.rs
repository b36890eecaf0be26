use std::sync::Arc;

use super::cyclotomic::{CyclotomicField, CyclotomicValue};
use super::dixon::ModularTable;
use super::modp::Fp;
use crate::arith::primitive_root;
use crate::error::{Error, Result};
use crate::group::ClassData;

/// Exact characters, one row per character, columns in class order.
#[derive(Clone, Debug)]
pub struct LiftedRows {
    pub field: Arc<CyclotomicField>,
    pub rows: Vec<Vec<CyclotomicValue>>,
    pub degrees: Vec<u64>,
}

/// The primitive `e`-th root of unity in `F_p` used to identify `zeta_e`:
/// `g^((p-1)/e)` for the smallest primitive root `g`.
pub fn modular_root_of_unity(p: u64, e: u64) -> u64 {
    Fp::new(p).pow(primitive_root(p), (p - 1) / e)
}

/// Recovers eigenvalue multiplicities of each character on each class from
/// its values on the powers of that class, and assembles exact values.
pub fn lift_to_cyclotomic(modular: &ModularTable, classes: &ClassData, e: u64) -> Result<LiftedRows> {
    let p = modular.p;
    let f = Fp::new(p);
    let field = CyclotomicField::new(e);
    let w = modular_root_of_unity(p, e);
    let eu = e as usize;
    // inv_powers[s] = w^-s
    let w_inv = f.inv(w);
    let mut inv_powers = vec![1u64; eu];
    for s in 1..eu {
        inv_powers[s] = f.mul(inv_powers[s - 1], w_inv);
    }
    let e_inv = f.inv(e % p);
    let k = classes.len();
    let mut rows = Vec::with_capacity(modular.values.len());
    for (theta, &deg) in modular.values.iter().zip(&modular.degrees) {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let along: Vec<u64> = (0..e).map(|s| theta[classes.power(j, s)]).collect();
            let mut m = vec![0i64; eu];
            let mut total = 0u64;
            for (t, mt) in m.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (s, &v) in along.iter().enumerate() {
                    acc = (acc + v * inv_powers[s * t % eu]) % p;
                }
                let val = f.mul(acc, e_inv);
                if val > deg {
                    return Err(Error::LiftInconsistent(format!(
                        "multiplicity {val} exceeds degree {deg} on class {j}"
                    )));
                }
                total += val;
                *mt = val as i64;
            }
            if total != deg {
                return Err(Error::LiftInconsistent(format!(
                    "multiplicities on class {j} sum to {total}, not {deg}"
                )));
            }
            row.push(CyclotomicValue::from_sum(&field, &m));
        }
        rows.push(row);
    }
    Ok(LiftedRows {
        field,
        rows,
        degrees: modular.degrees.clone(),
    })
}
