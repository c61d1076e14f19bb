use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::weyl::weyl_monomial;
use crate::element::{Atom1, Element1};
use crate::error::{Error, Result};
use crate::oracle::{IncrementalRank, SparseRow};

/// Largest filtration index accepted by [`bimodule_filtration_dims`].
pub const MAX_FILTRATION_INDEX: usize = 16;

/// Number of consecutive equal differences required before a growth
/// pattern counts as stable.
pub const STABLE_WINDOW: usize = 4;

/// `dim V_i` for `i = 0..=i_max`, where
/// `V_i = span{ x^a ∂^b · g · x^c ∂^d : g ∈ generators, a+b+c+d ≤ i }`
/// is the standard Bernstein filtration of the bimodule generated by
/// `generators`.
pub fn bimodule_filtration_dims(generators: &[Element1], i_max: usize) -> Result<Vec<usize>> {
    if i_max > MAX_FILTRATION_INDEX {
        return Err(Error::BudgetExceeded {
            requested: i_max,
            limit: MAX_FILTRATION_INDEX,
        });
    }
    if generators.is_empty() || generators.iter().any(Element1::is_zero) {
        return Err(Error::BadGenerator);
    }

    let weyl: HashMap<(u64, u64), Element1> = (0..=i_max as u64)
        .flat_map(|s| (0..=s).map(move |a| (a, s - a)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(a, b)| ((a, b), weyl_monomial(a, b)))
        .collect();
    let left: HashMap<(usize, u64, u64), Element1> = weyl
        .par_iter()
        .flat_map_iter(|(&(a, b), w)| {
            generators
                .iter()
                .enumerate()
                .map(move |(g, gen)| ((g, a, b), w.mul(gen)))
        })
        .collect();

    let mut index: HashMap<Atom1, usize> = HashMap::new();
    let mut basis = IncrementalRank::new();
    let mut dims = Vec::with_capacity(i_max + 1);
    for level in 0..=i_max as u64 {
        let mut jobs = Vec::new();
        for g in 0..generators.len() {
            for ab in 0..=level {
                for a in 0..=ab {
                    for c in 0..=level - ab {
                        jobs.push((g, a, ab - a, c, level - ab - c));
                    }
                }
            }
        }
        let products: Vec<Element1> = jobs
            .par_iter()
            .map(|&(g, a, b, c, d)| left[&(g, a, b)].mul(&weyl[&(c, d)]))
            .collect();
        for p in products {
            let row: SparseRow = p
                .atoms()
                .into_iter()
                .map(|(atom, c)| {
                    let next = index.len();
                    (*index.entry(atom).or_insert(next), c)
                })
                .collect();
            basis.insert(&row);
        }
        dims.push(basis.rank());
    }
    Ok(dims)
}

/// Growth summary of a dimension sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    /// Degree of the eventual polynomial growth.
    pub degree: usize,
    /// The stabilized `degree`-th difference (the second difference for
    /// degree 2), which equals the multiplicity; `None` for degree 0.
    pub leading_difference: Option<i64>,
    /// First index `i` from which the `degree`-th difference is constant.
    pub stable_from: usize,
}

/// Finds the least `d` whose `d`-th backward differences end in a run of at
/// least [`STABLE_WINDOW`] equal values. Returns `None` when no such run
/// exists within the data.
pub fn multiplicity_report(dims: &[usize]) -> Option<MultiplicityReport> {
    let mut diffs: Vec<i64> = dims.iter().map(|&d| d as i64).collect();
    let mut degree = 0;
    while diffs.len() >= STABLE_WINDOW {
        let last = *diffs.last().expect("nonempty");
        let run = diffs.iter().rev().take_while(|&&v| v == last).count();
        if run >= STABLE_WINDOW && (degree == 0 || last != 0) {
            let first = diffs.len() - run;
            return Some(MultiplicityReport {
                degree,
                leading_difference: (degree > 0).then_some(last),
                stable_from: first + degree,
            });
        }
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        degree += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangular(n: usize) -> Vec<usize> {
        (0..=n).map(|i| (i + 1) * (i + 2) / 2).collect()
    }

    #[test]
    fn report_examples() {
        let r = multiplicity_report(&triangular(10)).unwrap();
        assert_eq!(r.degree, 2);
        assert_eq!(r.leading_difference, Some(1));
        assert_eq!(r.stable_from, 2);

        let r = multiplicity_report(&[7; 6]).unwrap();
        assert_eq!(
            r,
            MultiplicityReport {
                degree: 0,
                leading_difference: None,
                stable_from: 0
            }
        );
        assert_eq!(multiplicity_report(&[1, 2, 4]), None);
        // 2^i never stabilizes
        let exp: Vec<usize> = (0..12).map(|i| 1 << i).collect();
        assert_eq!(multiplicity_report(&exp), None);
    }

    #[test]
    fn stabilization_after_irregular_start() {
        let dims = [1, 5, 6, 8, 10, 12, 14];
        let r = multiplicity_report(&dims).unwrap();
        assert_eq!(r.degree, 1);
        assert_eq!(r.leading_difference, Some(2));
        assert_eq!(r.stable_from, 3);
    }

    #[test]
    fn unit_generator_gives_triangular_numbers() {
        let dims = bimodule_filtration_dims(&[Element1::unit(0, 0)], 6).unwrap();
        assert_eq!(dims, triangular(6));
        let dims = bimodule_filtration_dims(&[Element1::one()], 6).unwrap();
        assert_eq!(dims, triangular(6));
    }

    #[test]
    fn budget_and_generators() {
        assert!(matches!(
            bimodule_filtration_dims(&[Element1::one()], MAX_FILTRATION_INDEX + 1),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(
            bimodule_filtration_dims(&[Element1::zero()], 2),
            Err(Error::BadGenerator)
        );
        assert_eq!(bimodule_filtration_dims(&[], 2), Err(Error::BadGenerator));
    }
}
