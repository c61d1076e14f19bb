use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::element::{b1_monomial_text, format_sum, B1Element, Element1};
use crate::error::{Error, Result};
use crate::hpoly::HPoly;
use crate::rational::Rational;
use crate::tensor::ElementN;

/// An element of `B_n = B₁^{⊗n}`; each key lists, per factor, the pair
/// `(k, t)` of the monomial `H^t ∂^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BnElement {
    rank: usize,
    terms: BTreeMap<Vec<(i64, u32)>, Rational>,
}

impl BnElement {
    pub fn zero(rank: usize) -> Self {
        BnElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_b1(u: &B1Element) -> Self {
        let mut out = Self::zero(1);
        for (mono, c) in u.monomials() {
            out.add_term(vec![mono], c);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<(i64, u32)>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: Vec<(i64, u32)>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    /// Factor-wise product in `K[H][∂, ∂^{-1}; τ]`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut out = Self::zero(self.rank);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut partial = vec![(Vec::new(), c1 * c2)];
                for (&(ka, ta), &(kb, tb)) in k1.iter().zip(k2) {
                    let prod = B1Element::term(ka, HPoly::monomial(Rational::one(), ta as usize))
                        .mul(&B1Element::term(
                            kb,
                            HPoly::monomial(Rational::one(), tb as usize),
                        ))
                        .monomials();
                    partial = partial
                        .into_iter()
                        .flat_map(|(key, c): (Vec<(i64, u32)>, Rational)| {
                            prod.iter().map(move |(m, d)| {
                                let mut key = key.clone();
                                key.push(*m);
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
}

impl fmt::Display for BnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = self.rank;
        let terms = self.terms.iter().map(|(key, c)| {
            let parts: Vec<String> = key
                .iter()
                .enumerate()
                .filter(|(_, m)| **m != (0, 0))
                .map(|(i, &(k, t))| {
                    let suffix = if rank > 1 {
                        (i + 1).to_string()
                    } else {
                        String::new()
                    };
                    b1_monomial_text(k, t, &suffix)
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

/// Image in `B_n = I_n / 𝔞_n`, where `𝔞_n` is spanned by the tensors with a
/// matrix unit in some factor.
pub fn project_bn(a: &ElementN) -> BnElement {
    let mut out = BnElement::zero(a.rank());
    for (key, c) in a.terms() {
        if key.iter().any(|atom| atom.is_unit()) {
            continue;
        }
        let mut partial = vec![(Vec::new(), c.clone())];
        for atom in key {
            let image = Element1::from_atom(*atom).project_b1().monomials();
            partial = partial
                .into_iter()
                .flat_map(|(k, c): (Vec<(i64, u32)>, Rational)| {
                    image.iter().map(move |(m, d)| {
                        let mut k = k.clone();
                        k.push(*m);
                        (k, &c * d)
                    })
                })
                .collect();
        }
        for (k, c) in partial {
            out.add_term(k, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t2(a: Element1, b: Element1) -> ElementN {
        ElementN::tensor(&[a, b]).unwrap()
    }

    #[test]
    fn examples() {
        assert!(project_bn(&t2(Element1::unit(0, 0), Element1::integral_pow(1))).is_zero());
        let p = project_bn(&t2(Element1::d_pow(1), Element1::integral_pow(1)));
        assert_eq!(p.to_string(), "d1*d2^-1");
        let h1 = ElementN::lift(1, &Element1::h(), 2).unwrap();
        let h2 = ElementN::lift(2, &Element1::h(), 2).unwrap();
        assert!(!project_bn(&h1.sub(&h2).unwrap()).is_zero());
    }

    #[test]
    fn rank_one_agrees_with_b1() {
        let a = Element1::x()
            .add(&Element1::integral_pow(2))
            .add(&Element1::unit(1, 1));
        assert_eq!(
            project_bn(&ElementN::from_element1(&a)),
            BnElement::from_b1(&a.project_b1())
        );
    }
}
