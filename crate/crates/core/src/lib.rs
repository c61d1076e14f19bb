//! Exact computations in the algebra of polynomial integro-differential
//! operators `I_n = K⟨x_i, ∂_i, ∫_i⟩ ⊂ End_K(K[x₁, …, x_n])` over `K = ℚ`.
//!
//! * [`element`]: canonical forms and arithmetic in `I₁`, its action on
//!   `K[x]` and the quotient `B₁ = I₁/F`.
//! * [`tensor`]: `I_n = I₁^{⊗n}` and its action on `K[x₁, …, x_n]`.
//! * [`structure`]: the decomposition `I₁ = A₁ ⊕ F ⊕ L`, socle levels,
//!   quotients `B_n`, and Bernstein-filtration dimension counts.
//! * [`oracle`]: truncated matrices in the divided-power basis and exact rank.
//! * [`expr`]: the expression language used by the command line.

pub mod element;
pub mod error;
pub mod expr;
pub mod hpoly;
pub mod oracle;
pub mod random;
pub mod rational;
pub mod structure;
pub mod tensor;
pub mod verify;

pub use element::{atom_mul, b1_mul, Atom1, B1Element, Element1, Generator, Poly1};
pub use error::{Error, Result};
pub use hpoly::HPoly;
pub use rational::Rational;
pub use tensor::{ElementN, PolyN};
