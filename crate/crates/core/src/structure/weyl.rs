use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::element::{format_sum, Element1};
use crate::hpoly::HPoly;
use crate::rational::{self, Rational};

/// A Weyl-algebra element in normal order: coefficients of `x^i ∂^j`.
pub type WeylElement = BTreeMap<(u64, u64), Rational>;

/// `x^i ∂^j` as an element of `I₁`.
pub fn weyl_monomial(i: u64, j: u64) -> Element1 {
    Element1::x_pow(i).mul(&Element1::d_pow(j))
}

// Stirling numbers of the second kind S(k, 0..=k).
fn stirling2_row(k: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); k + 1];
    row[0] = rational::int(1);
    for n in 1..=k {
        let mut next = vec![Rational::zero(); k + 1];
        for j in 1..=n {
            next[j] = &row[j - 1] + rational::int(j as i64) * &row[j];
        }
        row = next;
    }
    row
}

/// Rewrites `q(H)` as `Σ c_j x^j ∂^j` using `H = x∂ + 1` and
/// `(x∂)^k = Σ_j S(k, j) x^j ∂^j`.
fn h_poly_in_weyl(q: &HPoly) -> BTreeMap<u64, Rational> {
    let theta = q.shift(1);
    let mut out: BTreeMap<u64, Rational> = BTreeMap::new();
    for (k, c) in theta.terms() {
        for (j, s) in stirling2_row(k).into_iter().enumerate() {
            if !s.is_zero() {
                *out.entry(j as u64).or_insert_with(Rational::zero) += c * s;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Normal-ordered Weyl form of an element of `A₁ ⊂ I₁`; `None` if the element
/// is not in `A₁`.
pub fn to_weyl(a: &Element1) -> Option<WeylElement> {
    if !super::split::in_a_span(a) {
        return None;
    }
    let mut out = WeylElement::new();
    let mut add = |key: (u64, u64), c: Rational| {
        let e = out.entry(key).or_insert_with(Rational::zero);
        *e += c;
    };
    for (&g, b) in a.graded() {
        if g > 0 {
            // ∫^g b(H) = x^g q(H)
            let (q, _) = b.div_rem_monic(&HPoly::rising(g as usize));
            for (j, c) in h_poly_in_weyl(&q) {
                add((g as u64 + j, j), c);
            }
        } else {
            let m = g.unsigned_abs();
            for (j, c) in h_poly_in_weyl(b) {
                add((j, j + m), c);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Some(out)
}

pub struct WeylDisplay<'a>(pub &'a WeylElement);

impl fmt::Display for WeylDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.0.iter().map(|(&(i, j), c)| {
            let mut parts = Vec::new();
            match i {
                0 => {}
                1 => parts.push("x".to_string()),
                _ => parts.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("d".to_string()),
                _ => parts.push(format!("d^{j}")),
            }
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn h_is_x_d_plus_one() {
        let w = to_weyl(&Element1::h()).unwrap();
        assert_eq!(WeylDisplay(&w).to_string(), "1 + x*d");
    }

    #[test]
    fn roundtrip_through_monomials() {
        let a = weyl_monomial(2, 1)
            .add(&weyl_monomial(0, 3).scale(&int(-2)))
            .add(&weyl_monomial(3, 3));
        let w = to_weyl(&a).unwrap();
        let back = w.iter().fold(Element1::zero(), |acc, (&(i, j), c)| {
            acc.add(&weyl_monomial(i, j).scale(c))
        });
        assert_eq!(back, a);
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn integral_is_not_weyl() {
        assert!(to_weyl(&Element1::integral_pow(1)).is_none());
        assert!(to_weyl(&Element1::unit(0, 0)).is_none());
    }
}
