//! `I_n = I₁ ⊗ ⋯ ⊗ I₁` and its action on `K[x₁, …, x_n]`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::element::{atom_mul, format_sum, Atom1, Element1, Poly1};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A tensor of basis atoms, one per factor.
pub type TensorKey = Vec<Atom1>;

/// A rational combination of tensor keys, all of length `rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementN {
    rank: usize,
    terms: BTreeMap<TensorKey, Rational>,
}

fn check_rank(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::RankMismatch { left, right })
    }
}

impl ElementN {
    pub fn zero(rank: usize) -> Self {
        ElementN {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![Atom1::ONE; rank], Rational::one())
    }

    pub fn scalar(rank: usize, c: Rational) -> Self {
        Self::monomial(vec![Atom1::ONE; rank], c)
    }

    pub fn monomial(key: TensorKey, c: Rational) -> Self {
        let mut out = Self::zero(key.len());
        out.add_term(key, c);
        out
    }

    /// Embeds `a` in slot `factor` (1-based) of a rank-`rank` tensor.
    pub fn lift(factor: usize, a: &Element1, rank: usize) -> Result<Self> {
        if factor == 0 || factor > rank {
            return Err(Error::FactorOutOfRange {
                index: factor,
                rank,
            });
        }
        let mut out = Self::zero(rank);
        for (atom, c) in a.atoms() {
            let mut key = vec![Atom1::ONE; rank];
            key[factor - 1] = atom;
            out.add_term(key, c);
        }
        Ok(out)
    }

    pub fn from_element1(a: &Element1) -> Self {
        let mut out = Self::zero(1);
        for (atom, c) in a.atoms() {
            out.add_term(vec![atom], c);
        }
        out
    }

    /// `a₁ ⊗ ⋯ ⊗ a_n`.
    pub fn tensor(factors: &[Element1]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::ZeroRank);
        }
        let rank = factors.len();
        let mut acc = Self::one(rank);
        for (i, a) in factors.iter().enumerate() {
            acc = acc.mul(&Self::lift(i + 1, a, rank)?)?;
        }
        Ok(acc)
    }

    /// The rank-1 element as an `Element1`.
    pub fn to_element1(&self) -> Result<Element1> {
        check_rank(self.rank, 1)?;
        Ok(Element1::from_atoms(
            self.terms.iter().map(|(k, c)| (k[0], c)),
        ))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<TensorKey, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, key: TensorKey, c: Rational) {
        debug_assert_eq!(key.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        ElementN {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Factor-wise product `(⊗aᵢ)(⊗bᵢ) = ⊗(aᵢbᵢ)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut cache: HashMap<(Atom1, Atom1), Vec<(Atom1, Rational)>> = HashMap::new();
        let mut out = Self::zero(self.rank);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut partial: Vec<(TensorKey, Rational)> =
                    vec![(Vec::with_capacity(self.rank), c1 * c2)];
                for (&a, &b) in k1.iter().zip(k2) {
                    let prod = cache
                        .entry((a, b))
                        .or_insert_with(|| atom_mul(a, b).atoms());
                    if prod.is_empty() {
                        partial.clear();
                        break;
                    }
                    partial = partial
                        .into_iter()
                        .flat_map(|(key, c)| {
                            prod.iter().map(move |(atom, d)| {
                                let mut key = key.clone();
                                key.push(*atom);
                                (key, &c * d)
                            })
                        })
                        .collect();
                }
                for (key, c) in partial {
                    out.add_term(key, c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = acc.mul(self).expect("equal ranks");
        }
        acc
    }

    /// Factor-wise action on `K[x₁, …, x_n]`.
    pub fn apply(&self, p: &PolyN) -> Result<PolyN> {
        check_rank(self.rank, p.rank)?;
        let mut cache: HashMap<(Atom1, u64), Poly1> = HashMap::new();
        let mut out = PolyN::zero(self.rank);
        for (key, c) in &self.terms {
            for (exps, d) in &p.terms {
                let mut partial: Vec<(Vec<u64>, Rational)> = vec![(Vec::new(), c * d)];
                for (&atom, &e) in key.iter().zip(exps) {
                    let image = cache.entry((atom, e)).or_insert_with(|| {
                        Element1::from_atom(atom).apply(&Poly1::monomial(Rational::one(), e))
                    });
                    partial = partial
                        .into_iter()
                        .flat_map(|(mono, c)| {
                            image.terms().iter().map(move |(&s, d)| {
                                let mut mono = mono.clone();
                                mono.push(s);
                                (mono, &c * d)
                            })
                        })
                        .collect();
                }
                for (mono, c) in partial {
                    out.add_term(mono, c);
                }
            }
        }
        Ok(out)
    }

    /// Text form of one tensor key; identity factors are omitted.
    pub fn key_text(key: &[Atom1]) -> String {
        let rank = key.len();
        let parts: Vec<String> = key
            .iter()
            .enumerate()
            .filter(|(_, a)| **a != Atom1::ONE)
            .map(|(i, a)| {
                let mut s = String::new();
                let suffix = if rank > 1 {
                    (i + 1).to_string()
                } else {
                    String::new()
                };
                a.write_with_suffix(&mut s, &suffix);
                s
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Free functions mirroring the methods, for callers that prefer them.
pub fn mul_n(a: &ElementN, b: &ElementN) -> Result<ElementN> {
    a.mul(b)
}

pub fn apply_n(a: &ElementN, p: &PolyN) -> Result<PolyN> {
    a.apply(p)
}

impl fmt::Display for ElementN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (Self::key_text(k), c.clone()));
        f.write_str(&format_sum(terms))
    }
}

/// A polynomial in `x₁, …, x_n`, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyN {
    rank: usize,
    terms: BTreeMap<Vec<u64>, Rational>,
}

impl PolyN {
    pub fn zero(rank: usize) -> Self {
        PolyN {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exps: Vec<u64>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn variable(index: usize, rank: usize) -> Result<Self> {
        if index == 0 || index > rank {
            return Err(Error::FactorOutOfRange { index, rank });
        }
        let mut exps = vec![0; rank];
        exps[index - 1] = 1;
        Ok(Self::monomial(exps, Rational::one()))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u64>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u64]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u64>, c: Rational) {
        debug_assert_eq!(exps.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.rank);
        for (e, d) in &self.terms {
            out.add_term(e.clone(), d * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut out = Self::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::monomial(vec![0; self.rank], Rational::one());
        for _ in 0..k {
            acc = acc.mul(self).expect("equal ranks");
        }
        acc
    }
}

impl fmt::Display for PolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = self.rank;
        let terms = self.terms.iter().map(|(exps, c)| {
            let parts: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let var = if rank == 1 {
                        "x".to_string()
                    } else {
                        format!("x{}", i + 1)
                    };
                    if e == 1 {
                        var
                    } else {
                        format!("{var}^{e}")
                    }
                })
                .collect();
            let mono = if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            };
            (mono, c.clone())
        });
        f.write_str(&format_sum(terms))
    }
}
