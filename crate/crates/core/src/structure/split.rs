use num_traits::One;

use crate::element::{Atom1, Element1};
use crate::hpoly::HPoly;
use crate::oracle::{exact_rank, SparseRow};

/// The decomposition `a = a_A + a_F + a_L` along `I₁ = A₁ ⊕ F ⊕ L`, where
/// `L` is spanned by `∫^s H^t` with `0 ≤ t < s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitTriple {
    pub a_part: Element1,
    pub f_part: Element1,
    pub l_part: Element1,
}

impl SplitTriple {
    pub fn sum(&self) -> Element1 {
        self.a_part.add(&self.f_part).add(&self.l_part)
    }

    /// Whether each part is supported in its declared span.
    pub fn parts_in_spans(&self) -> bool {
        in_a_span(&self.a_part) && in_f_span(&self.f_part) && in_l_span(&self.l_part)
    }
}

/// `A₁` in canonical coordinates: no F-part, and every positive-degree
/// component `∫^i b(H)` has `H(H+1)⋯(H+i-1) | b`.
pub(crate) fn in_a_span(a: &Element1) -> bool {
    a.fpart().is_empty()
        && a.graded()
            .iter()
            .all(|(&g, b)| g <= 0 || b.div_rem_monic(&HPoly::rising(g as usize)).1.is_zero())
}

pub(crate) fn in_f_span(a: &Element1) -> bool {
    a.graded().is_empty()
}

pub(crate) fn in_l_span(a: &Element1) -> bool {
    a.fpart().is_empty()
        && a.graded()
            .iter()
            .all(|(&g, b)| g > 0 && b.degree().is_none_or(|d| d < g as usize))
}

/// Splits `a` along `I₁ = A₁ ⊕ F ⊕ L`.
///
/// Components of degree `≤ 0` lie in `A₁`. For `i > 0`, `∫^i b(H)` is divided
/// by `H(H+1)⋯(H+i-1)`: since `x^i = ∫^i H(H+1)⋯(H+i-1)`, the quotient part is
/// `x^i q(H) ∈ A₁` and the remainder lies in `L`.
pub fn split(a: &Element1) -> SplitTriple {
    let mut a_part = Element1::zero();
    let mut l_part = Element1::zero();
    for (&g, b) in a.graded() {
        if g <= 0 {
            a_part.add_component(g, b);
            continue;
        }
        let (_, r) = b.div_rem_monic(&HPoly::rising(g as usize));
        a_part.add_component(g, &(b - &r));
        l_part.add_component(g, &r);
    }
    let f_part = Element1::from_atoms(
        a.fpart()
            .iter()
            .map(|(&(row, col), c)| (Atom1::Unit { row, col }, c)),
    );
    SplitTriple {
        a_part,
        f_part,
        l_part,
    }
}

/// `dim Q_{≤i}` for `i = 0..=i_max`, where `Q = I₁/(A₁ + F)` and `Q_{≤i}` is
/// the image of the degrees `1..=i+1`.
///
/// Each degree `j` is measured as the rank of the `L`-projections of
/// `∫^j H^t` for `t ≤ j + 1`, so the count does not presuppose the answer.
pub fn q_dims(i_max: usize) -> Vec<usize> {
    let mut dims = Vec::with_capacity(i_max + 1);
    let mut total = 0;
    for i in 0..=i_max {
        let j = i as i64 + 1;
        let rows: Vec<SparseRow> = (0..=i + 2)
            .map(|t| {
                let atom = Element1::component(j, HPoly::monomial(One::one(), t));
                let l = split(&atom).l_part;
                l.graded()
                    .get(&j)
                    .map(|p| p.terms().map(|(t, c)| (t, c.clone())).collect())
                    .unwrap_or_default()
            })
            .collect();
        total += exact_rank(&rows);
        dims.push(total);
    }
    dims
}
