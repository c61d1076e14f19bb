//! Seeded random elements for property checks.
//!
//! Bounds: degrees in `[-3, 3]`, `H`-degree at most 3, matrix-unit indices at
//! most 5, coefficients in `{-9..9} \ {0}`. With these bounds every truncation
//! window at `N = 24` is nonempty.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::element::{Atom1, Element1, Poly1};
use crate::rational::{self, Rational};
use crate::tensor::{ElementN, PolyN};

pub const MAX_GRADE: i64 = 3;
pub const MAX_HPOW: u32 = 3;
pub const MAX_UNIT_INDEX: u64 = 5;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn coeff(&mut self) -> Rational {
        let mut c = 0;
        while c == 0 {
            c = self.rng.gen_range(-9..=9);
        }
        rational::int(c)
    }

    pub fn atom(&mut self) -> Atom1 {
        if self.rng.gen_bool(0.3) {
            Atom1::Unit {
                row: self.rng.gen_range(0..=MAX_UNIT_INDEX),
                col: self.rng.gen_range(0..=MAX_UNIT_INDEX),
            }
        } else {
            Atom1::Graded {
                grade: self.rng.gen_range(-MAX_GRADE..=MAX_GRADE),
                hpow: self.rng.gen_range(0..=MAX_HPOW),
            }
        }
    }

    /// A sum of one to five random atoms.
    pub fn element1(&mut self) -> Element1 {
        let n = self.rng.gen_range(1..=5);
        let terms: Vec<(Atom1, Rational)> = (0..n).map(|_| (self.atom(), self.coeff())).collect();
        Element1::from_atoms(terms.iter().map(|(a, c)| (*a, c)))
    }

    /// A sum of one to four random tensor keys.
    pub fn element_n(&mut self, rank: usize) -> ElementN {
        let n = self.rng.gen_range(1..=4);
        let mut out = ElementN::zero(rank);
        for _ in 0..n {
            let key = (0..rank).map(|_| self.atom()).collect();
            out = out
                .add(&ElementN::monomial(key, self.coeff()))
                .expect("same rank");
        }
        out
    }

    /// A word of length `0..=max_len` in the generators `x_i`, `∂_i`.
    pub fn weyl_word(&mut self, rank: usize, max_len: usize) -> ElementN {
        let len = self.rng.gen_range(0..=max_len);
        let mut acc = ElementN::one(rank);
        for _ in 0..len {
            let factor = self.rng.gen_range(1..=rank);
            let g = if self.rng.gen_bool(0.5) {
                Element1::x()
            } else {
                Element1::d_pow(1)
            };
            let lifted = ElementN::lift(factor, &g, rank).expect("factor in range");
            acc = acc.mul(&lifted).expect("same rank");
        }
        acc
    }

    pub fn poly1(&mut self) -> Poly1 {
        let n = self.rng.gen_range(1..=3);
        (0..n)
            .map(|_| (self.rng.gen_range(0..=6), self.coeff()))
            .collect()
    }

    pub fn poly_n(&mut self, rank: usize) -> PolyN {
        let n = self.rng.gen_range(1..=3);
        let mut out = PolyN::zero(rank);
        for _ in 0..n {
            let exps = (0..rank).map(|_| self.rng.gen_range(0..=4)).collect();
            out = out
                .add(&PolyN::monomial(exps, self.coeff()))
                .expect("same rank");
        }
        out
    }

    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        self.rng.gen_range(lo..=hi)
    }
}
