//! Univariate polynomials in the Euler-type element `H = ∂x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{self, Rational};

/// A polynomial in `H` with dense coefficients; index `t` holds the
/// coefficient of `H^t`. The highest stored coefficient is never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HPoly {
    coeffs: Vec<Rational>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·H^t`.
    pub fn monomial(c: Rational, t: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); t + 1];
        coeffs[t] = c;
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `H`.
    pub fn h() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HPoly { coeffs }
    }

    /// `H(H+1)⋯(H+i-1)`; the empty product `1` for `i = 0`.
    pub fn rising(i: usize) -> Self {
        let mut acc = Self::one();
        for k in 0..i {
            acc = &acc * &Self::from_coeffs(vec![rational::int(k as i64), Rational::one()]);
        }
        acc
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> Rational {
        self.coeffs.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes `H ↦ H + k`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let k = rational::int(k);
        // Horner in the shifted variable.
        let mut acc: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            // acc = acc * (H + k) + c
            let mut next = vec![Rational::zero(); acc.len() + 1];
            for (t, a) in acc.iter().enumerate() {
                next[t + 1] += a;
                next[t] += a * &k;
            }
            next[0] += c;
            acc = next;
        }
        Self::from_coeffs(acc)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rational::int(x))
    }

    /// Division with remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &HPoly) -> (HPoly, HPoly) {
        let d = divisor.degree().expect("division by zero polynomial");
        assert!(divisor.coeffs[d].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (HPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for top in (d..rem.len()).rev() {
            let lead = rem[top].clone();
            if lead.is_zero() {
                continue;
            }
            let shift = top - d;
            for (t, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + t] -= &lead * c;
            }
            quot[shift] = lead;
        }
        rem.truncate(d);
        (HPoly::from_coeffs(quot), HPoly::from_coeffs(rem))
    }

    /// Nonzero `(t, c)` pairs in ascending power.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Add for &HPoly {
    type Output = HPoly;

    fn add(self, rhs: &HPoly) -> HPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|t| self.coeff(t) + rhs.coeff(t)).collect();
        HPoly::from_coeffs(coeffs)
    }
}

impl Sub for &HPoly {
    type Output = HPoly;

    fn sub(self, rhs: &HPoly) -> HPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|t| self.coeff(t) - rhs.coeff(t)).collect();
        HPoly::from_coeffs(coeffs)
    }
}

impl Neg for &HPoly {
    type Output = HPoly;

    fn neg(self) -> HPoly {
        HPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &HPoly {
    type Output = HPoly;

    fn mul(self, rhs: &HPoly) -> HPoly {
        if self.is_zero() || rhs.is_zero() {
            return HPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        HPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in self.terms() {
            let neg = rational::is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let var = match t {
                0 => String::new(),
                1 => "H".to_string(),
                _ => format!("H^{t}"),
            };
            match (abs.is_one(), var.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{var}")?,
                (false, true) => write!(f, "{}", rational::format(&abs))?,
                (false, false) => write!(f, "{}*{var}", rational::format(&abs))?,
            }
        }
        Ok(())
    }
}
