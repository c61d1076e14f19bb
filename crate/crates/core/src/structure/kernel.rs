use crate::element::Element1;
use crate::tensor::ElementN;

/// `H₁ - H₂` in `I₂`.
pub fn h_difference() -> ElementN {
    let h1 = ElementN::lift(1, &Element1::h(), 2).expect("rank 2");
    let h2 = ElementN::lift(2, &Element1::h(), 2).expect("rank 2");
    h1.sub(&h2).expect("rank 2")
}

/// Checks right multiplication by `H₁ - H₂` on matrix-unit tensors.
///
/// The first flag is `e_{ij}(1) e_{kj}(2) · (H₁ - H₂) = 0`. The second is
/// `e_{ij}(1) e_{kj'}(2) · (H₁ - H₂) ≠ 0`, which is only meaningful for
/// `j ≠ j'` and reported as `true` otherwise.
pub fn kernel_witness_check(i: u64, j: u64, k: u64, j_prime: u64) -> (bool, bool) {
    let rhs = h_difference();
    let diag = ElementN::tensor(&[Element1::unit(i, j), Element1::unit(k, j)]).expect("rank 2");
    let annihilated = diag.mul(&rhs).expect("rank 2").is_zero();
    let off = if j == j_prime {
        true
    } else {
        let t =
            ElementN::tensor(&[Element1::unit(i, j), Element1::unit(k, j_prime)]).expect("rank 2");
        !t.mul(&rhs).expect("rank 2").is_zero()
    };
    (annihilated, off)
}
