use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::split::split;
use crate::element::{Atom1, Element1};
use crate::error::{Error, Result};
use crate::tensor::{ElementN, TensorKey};

/// Summand of `I₁ = A₁ ⊕ F ⊕ L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Label {
    A,
    F,
    L,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::A, Label::F, Label::L];
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Label::A => "A",
            Label::F => "F",
            Label::L => "L",
        };
        f.write_str(s)
    }
}

/// One label per tensor factor.
pub type CensusLabel = Vec<Label>;

fn atom_parts(atom: Atom1) -> Vec<(Label, Vec<(Atom1, crate::Rational)>)> {
    let parts = split(&Element1::from_atom(atom));
    [
        (Label::A, parts.a_part),
        (Label::F, parts.f_part),
        (Label::L, parts.l_part),
    ]
    .into_iter()
    .filter(|(_, e)| !e.is_zero())
    .map(|(l, e)| (l, e.atoms()))
    .collect()
}

// one factor's split: a label and the atoms of that part
type LabeledPart = (Label, Vec<(Atom1, crate::Rational)>);

/// Components of `a` along `⊗ᵢ (A₁ ⊕ F ⊕ L)`, keyed by label tuple; only
/// nonzero components are returned.
pub fn label_components(a: &ElementN) -> BTreeMap<CensusLabel, ElementN> {
    let rank = a.rank();
    let mut cache: BTreeMap<Atom1, Vec<LabeledPart>> = BTreeMap::new();
    let mut out: BTreeMap<CensusLabel, ElementN> = BTreeMap::new();
    for (key, c) in a.terms() {
        let mut partial: Vec<(CensusLabel, TensorKey, crate::Rational)> =
            vec![(Vec::new(), Vec::new(), c.clone())];
        for &atom in key {
            let parts = cache.entry(atom).or_insert_with(|| atom_parts(atom));
            let mut next = Vec::new();
            for (labels, k, c) in &partial {
                for (label, atoms) in parts.iter() {
                    for (atom, d) in atoms {
                        let mut labels = labels.clone();
                        labels.push(*label);
                        let mut k = k.clone();
                        k.push(*atom);
                        next.push((labels, k, c * d));
                    }
                }
            }
            partial = next;
        }
        for (labels, k, c) in partial {
            let slot = out.entry(labels).or_insert_with(|| ElementN::zero(rank));
            slot.add_term(k, c);
        }
    }
    out.retain(|_, e| !e.is_zero());
    out
}

/// Label tuples with a nonzero component in `a`.
pub fn census(a: &ElementN) -> BTreeSet<CensusLabel> {
    label_components(a).into_keys().collect()
}

/// The least `m` with `a ∈ soc^m`, i.e. the largest number of `L` factors
/// among the nonzero label components.
pub fn socle_level(a: &ElementN) -> Result<usize> {
    census(a)
        .iter()
        .map(|labels| labels.iter().filter(|&&l| l == Label::L).count())
        .max()
        .ok_or(Error::ZeroElement)
}

/// Whether `a ∈ soc^m`; the zero element lies in every term.
pub fn socle_member(a: &ElementN, m: usize) -> bool {
    socle_level(a).map_or(true, |level| level <= m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Label::*;

    fn t2(a: Element1, b: Element1) -> ElementN {
        ElementN::tensor(&[a, b]).unwrap()
    }

    #[test]
    fn levels() {
        let i = Element1::integral_pow(1);
        assert_eq!(socle_level(&t2(i.clone(), i.clone())).unwrap(), 2);
        assert_eq!(
            socle_level(&t2(Element1::unit(0, 0), Element1::x())).unwrap(),
            0
        );
        assert_eq!(socle_level(&t2(Element1::one(), i)).unwrap(), 1);
        assert_eq!(socle_level(&ElementN::zero(2)), Err(Error::ZeroElement));
        assert!(socle_member(&ElementN::zero(2), 0));
    }

    #[test]
    fn census_example() {
        let a = ElementN::one(2)
            .add(&t2(Element1::unit(0, 0), Element1::integral_pow(1)))
            .unwrap();
        let want: BTreeSet<CensusLabel> = [vec![A, A], vec![F, L]].into_iter().collect();
        assert_eq!(census(&a), want);
        assert!(census(&ElementN::zero(2)).is_empty());
    }

    #[test]
    fn mixed_atom_has_two_labels() {
        // ∫^2 H^2 = x^2 - ∫^2 H
        let a = ElementN::from_element1(&Element1::component(
            2,
            crate::HPoly::monomial(crate::rational::int(1), 2),
        ));
        let want: BTreeSet<CensusLabel> = [vec![A], vec![L]].into_iter().collect();
        assert_eq!(census(&a), want);
    }
}
