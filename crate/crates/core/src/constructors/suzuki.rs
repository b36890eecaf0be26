//! The Borel subgroup of `Sz(8)`: the Suzuki 2-group of order 64 extended by `F_8^*`.

use std::ops::{Add, Mul};
use std::sync::Arc;

use crate::error::Result;
use crate::group::{Backing, FiniteGroup, Multiplication, Word};

/// Element of `F_8 = F_2[x] / (x^3 + x + 1)`, stored as three coefficient bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F8Element(pub u8);

impl F8Element {
    pub const ZERO: F8Element = F8Element(0);
    pub const ONE: F8Element = F8Element(1);
    /// The class of `x`, a generator of the multiplicative group.
    pub const GENERATOR: F8Element = F8Element(2);

    pub fn pow(self, mut n: u32) -> F8Element {
        let mut acc = F8Element::ONE;
        let mut b = self;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * b;
            }
            b = b * b;
            n >>= 1;
        }
        acc
    }

    pub fn all() -> impl Iterator<Item = F8Element> {
        (0..8).map(F8Element)
    }
}

impl Add for F8Element {
    type Output = F8Element;
    fn add(self, o: F8Element) -> F8Element {
        F8Element(self.0 ^ o.0)
    }
}

impl Mul for F8Element {
    type Output = F8Element;
    fn mul(self, o: F8Element) -> F8Element {
        let mut r = 0u8;
        for i in 0..3 {
            if (o.0 >> i) & 1 == 1 {
                r ^= self.0 << i;
            }
        }
        for i in (3..5).rev() {
            if (r >> i) & 1 == 1 {
                r ^= 0b1011 << (i - 3);
            }
        }
        F8Element(r)
    }
}

/// Words are `(a, b, l)`: `(a, b)` in the 2-group and `l` the exponent of
/// the field generator.
struct SuzukiBorel {
    /// `GENERATOR^l` for `l < 7`.
    powers: [F8Element; 7],
}

impl SuzukiBorel {
    fn new() -> Self {
        let mut powers = [F8Element::ONE; 7];
        for l in 1..7 {
            powers[l] = powers[l - 1] * F8Element::GENERATOR;
        }
        SuzukiBorel { powers }
    }
}

impl Multiplication for SuzukiBorel {
    fn identity(&self) -> Word {
        Word::from_slice(&[0, 0, 0])
    }
    fn multiply(&self, x: &[u32], y: &[u32]) -> Word {
        let (a, b) = (F8Element(x[0] as u8), F8Element(x[1] as u8));
        let lam = self.powers[x[2] as usize];
        let c = lam * F8Element(y[0] as u8);
        let d = lam.pow(5) * F8Element(y[1] as u8);
        let a2 = a + c;
        let b2 = b + d + a.pow(4) * c;
        Word::from_slice(&[a2.0 as u32, b2.0 as u32, (x[2] + y[2]) % 7])
    }
    fn is_valid(&self, w: &[u32]) -> bool {
        w.len() == 3 && w[0] < 8 && w[1] < 8 && w[2] < 7
    }
    fn backing(&self) -> Backing {
        Backing::Semidirect
    }
}

/// The normalizer of a Sylow 2-subgroup of `Sz(8)`, of order 448.
pub fn sz8_borel() -> Result<FiniteGroup> {
    let gens = [Word::from_slice(&[1, 0, 0]), Word::from_slice(&[0, 0, 1])];
    FiniteGroup::enumerate(Arc::new(SuzukiBorel::new()), &gens, 448)
}

/// Indices of the elements with trivial field part, i.e. the Suzuki 2-group.
pub fn sz8_two_group(g: &FiniteGroup) -> Vec<usize> {
    g.elements().filter(|&x| g.word(x)[2] == 0).collect()
}
