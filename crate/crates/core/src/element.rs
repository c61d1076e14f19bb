//! Canonical forms and arithmetic in the algebra `I₁` of polynomial
//! integro-differential operators in one variable.
//!
//! Every element is stored as
//!
//! ```text
//!   Σ_{i>0} ∫^i a_i(H)  +  a_0(H)  +  Σ_{i>0} a_{-i}(H) ∂^i  +  Σ λ_{st} e_{st}
//! ```
//!
//! with `H = ∂x` and `e_{st} = ∫^s ∂^t − ∫^{s+1} ∂^{t+1}`. The polynomial of a
//! graded component always sits on the outer side of the power of `∫` or `∂`,
//! so the atoms `∫^i H^t`, `H^t`, `H^t ∂^i` and `e_{st}` form a basis and two
//! elements are equal iff their stored maps are identical.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hpoly::HPoly;
use crate::rational::{self, Rational};

/// A basis atom of `I₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Atom1 {
    /// `∫^grade H^hpow` for `grade > 0`, `H^hpow` for `grade = 0` and
    /// `H^hpow ∂^|grade|` for `grade < 0`.
    Graded { grade: i64, hpow: u32 },
    /// The matrix unit `e_{row,col}`.
    #[serde(rename = "e")]
    Unit { row: u64, col: u64 },
}

impl Atom1 {
    pub const ONE: Atom1 = Atom1::Graded { grade: 0, hpow: 0 };

    /// Degree in the ℤ-grading; `e_{st}` has degree `s - t`.
    pub fn grade(&self) -> i64 {
        match *self {
            Atom1::Graded { grade, .. } => grade,
            Atom1::Unit { row, col } => row as i64 - col as i64,
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Atom1::Unit { .. })
    }

    /// Writes the atom as parseable text; `suffix` is appended to every
    /// generator letter (factor index for tensor products).
    pub fn write_with_suffix(&self, out: &mut String, suffix: &str) {
        use std::fmt::Write;
        let pow = |out: &mut String, letter: &str, e: u64| {
            if e == 1 {
                let _ = write!(out, "{letter}{suffix}");
            } else {
                let _ = write!(out, "{letter}{suffix}^{e}");
            }
        };
        match *self {
            Atom1::Graded { grade, hpow } => {
                let m = grade.unsigned_abs();
                let mut parts = 0;
                if grade > 0 {
                    pow(out, "I", m);
                    parts += 1;
                }
                if hpow > 0 {
                    if parts > 0 {
                        out.push('*');
                    }
                    pow(out, "H", hpow as u64);
                    parts += 1;
                }
                if grade < 0 {
                    if parts > 0 {
                        out.push('*');
                    }
                    pow(out, "d", m);
                    parts += 1;
                }
                if parts == 0 {
                    out.push('1');
                }
            }
            Atom1::Unit { row, col } => {
                let _ = write!(out, "e({row},{col})");
                if !suffix.is_empty() {
                    let _ = write!(out, "_{suffix}");
                }
            }
        }
    }
}

impl fmt::Display for Atom1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_with_suffix(&mut s, "");
        f.write_str(&s)
    }
}

/// Generators accepted by [`Element1::from_generator`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    X,
    D,
    Integral,
    H,
    Unit(u64, u64),
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "x" => return Ok(Generator::X),
            "d" => return Ok(Generator::D),
            "I" => return Ok(Generator::Integral),
            "H" => return Ok(Generator::H),
            _ => {}
        }
        let unknown = || Error::UnknownGenerator(s.to_string());
        let inner = s
            .strip_prefix("e(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(unknown)?;
        let (a, b) = inner.split_once(',').ok_or_else(unknown)?;
        let a = a.trim().parse().map_err(|_| unknown())?;
        let b = b.trim().parse().map_err(|_| unknown())?;
        Ok(Generator::Unit(a, b))
    }
}

/// An element of `I₁` in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element1 {
    graded: BTreeMap<i64, HPoly>,
    fpart: BTreeMap<(u64, u64), Rational>,
}

impl Element1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::component(0, HPoly::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::component(0, HPoly::constant(c))
    }

    /// The graded component `poly·v_grade` in the outer-polynomial convention.
    pub fn component(grade: i64, poly: HPoly) -> Self {
        let mut e = Self::zero();
        e.add_component(grade, &poly);
        e
    }

    /// `∫^i`.
    pub fn integral_pow(i: u64) -> Self {
        Self::component(i as i64, HPoly::one())
    }

    /// `∂^m`.
    pub fn d_pow(m: u64) -> Self {
        Self::component(-(m as i64), HPoly::one())
    }

    pub fn h() -> Self {
        Self::component(0, HPoly::h())
    }

    /// `x = ∫H`.
    pub fn x() -> Self {
        Self::component(1, HPoly::h())
    }

    /// `x^a = ∫^a H(H+1)⋯(H+a-1)`.
    pub fn x_pow(a: u64) -> Self {
        Self::component(a as i64, HPoly::rising(a as usize))
    }

    /// The matrix unit `e_{st}`.
    pub fn unit(s: u64, t: u64) -> Self {
        let mut e = Self::zero();
        e.add_unit(s, t, Rational::one());
        e
    }

    pub fn from_generator(g: Generator) -> Self {
        match g {
            Generator::X => Self::x(),
            Generator::D => Self::d_pow(1),
            Generator::Integral => Self::integral_pow(1),
            Generator::H => Self::h(),
            Generator::Unit(s, t) => Self::unit(s, t),
        }
    }

    /// Looks a generator up by name: `x`, `d`, `I`, `H` or `e(s,t)`.
    pub fn from_generator_name(name: &str) -> Result<Self> {
        name.parse().map(Self::from_generator)
    }

    pub fn from_atom(atom: Atom1) -> Self {
        match atom {
            Atom1::Graded { grade, hpow } => {
                Self::component(grade, HPoly::monomial(Rational::one(), hpow as usize))
            }
            Atom1::Unit { row, col } => Self::unit(row, col),
        }
    }

    pub fn from_atoms<'a>(terms: impl IntoIterator<Item = (Atom1, &'a Rational)>) -> Self {
        let mut e = Self::zero();
        for (atom, c) in terms {
            match atom {
                Atom1::Graded { grade, hpow } => {
                    e.add_component(grade, &HPoly::monomial(c.clone(), hpow as usize))
                }
                Atom1::Unit { row, col } => e.add_unit(row, col, c.clone()),
            }
        }
        e
    }

    /// Expansion over basis atoms, graded atoms first by ascending degree.
    pub fn atoms(&self) -> Vec<(Atom1, Rational)> {
        let mut out = Vec::new();
        for (&grade, p) in &self.graded {
            for (t, c) in p.terms() {
                out.push((
                    Atom1::Graded {
                        grade,
                        hpow: t as u32,
                    },
                    c.clone(),
                ));
            }
        }
        for (&(row, col), c) in &self.fpart {
            out.push((Atom1::Unit { row, col }, c.clone()));
        }
        out
    }

    pub fn graded(&self) -> &BTreeMap<i64, HPoly> {
        &self.graded
    }

    pub fn fpart(&self) -> &BTreeMap<(u64, u64), Rational> {
        &self.fpart
    }

    pub fn is_zero(&self) -> bool {
        self.graded.is_empty() && self.fpart.is_empty()
    }

    pub(crate) fn add_component(&mut self, grade: i64, poly: &HPoly) {
        if poly.is_zero() {
            return;
        }
        let sum = match self.graded.get(&grade) {
            Some(p) => p + poly,
            None => poly.clone(),
        };
        if sum.is_zero() {
            self.graded.remove(&grade);
        } else {
            self.graded.insert(grade, sum);
        }
    }

    pub(crate) fn add_unit(&mut self, s: u64, t: u64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.fpart.entry((s, t)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.fpart.remove(&(s, t));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&g, p) in &other.graded {
            out.add_component(g, p);
        }
        for (&(s, t), c) in &other.fpart {
            out.add_unit(s, t, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element1 {
            graded: self.graded.iter().map(|(&g, p)| (g, p.scale(c))).collect(),
            fpart: self.fpart.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&i, p) in &self.graded {
            for (&j, q) in &other.graded {
                mul_graded(i, p, j, q, &mut out);
            }
            for (&(s, t), c) in &other.fpart {
                mul_graded_unit(i, p, s, t, c, &mut out);
            }
        }
        for (&(s, t), c) in &self.fpart {
            for (&j, q) in &other.graded {
                mul_unit_graded(s, t, c, j, q, &mut out);
            }
            // e_{st} e_{uv} = δ_{tu} e_{sv}
            for (&(_, v), d) in other.fpart.range((t, 0)..=(t, u64::MAX)) {
                out.add_unit(s, v, c * d);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// F-degree: `-1` without F-part, otherwise the largest index of a
    /// stored `e_{st}`.
    pub fn fdegree(&self) -> i64 {
        self.fpart
            .keys()
            .map(|&(s, t)| s.max(t) as i64)
            .max()
            .unwrap_or(-1)
    }

    /// The homogeneous component of degree `i`.
    pub fn grade_component(&self, i: i64) -> Self {
        let mut out = Self::zero();
        if let Some(p) = self.graded.get(&i) {
            out.graded.insert(i, p.clone());
        }
        for (&(s, t), c) in &self.fpart {
            if s as i64 - t as i64 == i {
                out.fpart.insert((s, t), c.clone());
            }
        }
        out
    }

    /// Degrees with a nonzero homogeneous component, ascending.
    pub fn support_grades(&self) -> Vec<i64> {
        let mut gs: Vec<i64> = self.graded.keys().copied().collect();
        gs.extend(self.fpart.keys().map(|&(s, t)| s as i64 - t as i64));
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// Largest positive degree shift in the support (`0` if none).
    pub fn max_up(&self) -> usize {
        self.support_grades()
            .last()
            .map_or(0, |&g| g.max(0) as usize)
    }

    /// The anti-automorphism `∂ ↦ ∫`, `∫ ↦ ∂`, `H ↦ H`, `e_{st} ↦ e_{ts}`.
    pub fn transpose(&self) -> Self {
        Element1 {
            // ∫^i p(H) ↦ p(H) ∂^i and back: only the degree flips.
            graded: self.graded.iter().map(|(&g, p)| (-g, p.clone())).collect(),
            fpart: self
                .fpart
                .iter()
                .map(|(&(s, t), c)| ((t, s), c.clone()))
                .collect(),
        }
    }

    /// The action on `K[x]`.
    pub fn apply(&self, p: &Poly1) -> Poly1 {
        let mut out = Poly1::zero();
        for (&s, c) in &p.terms {
            for (&g, b) in &self.graded {
                if g >= 0 {
                    let i = g as u64;
                    // ∫^i x^s = s!/(s+i)! x^{s+i}
                    let coeff = b.eval_int(s as i64 + 1) / rational::factorial_ratio(s + i, s);
                    out.add_term(s + i, c * coeff);
                } else {
                    let m = g.unsigned_abs();
                    if s >= m {
                        let coeff =
                            rational::factorial_ratio(s, s - m) * b.eval_int((s - m) as i64 + 1);
                        out.add_term(s - m, c * coeff);
                    }
                }
            }
            for (&(row, col), lambda) in &self.fpart {
                if col == s {
                    // e_{row,col} x^col = col!/row! x^row
                    let coeff = rational::factorial(col) / rational::factorial(row);
                    out.add_term(row, c * lambda * coeff);
                }
            }
        }
        out
    }

    /// Image in the skew Laurent ring `B₁ = I₁/F`.
    pub fn project_b1(&self) -> B1Element {
        let mut out = B1Element::zero();
        for (&g, p) in &self.graded {
            // ∫^i ↦ ∂^{-i}, and ∂^{-i} p(H) = p(H - i) ∂^{-i}
            let poly = if g > 0 { p.shift(-g) } else { p.clone() };
            out.add_term(-g, &poly);
        }
        out
    }
}

// ∫^i p · ∫^j q etc., all four sign combinations of the two degrees.
fn mul_graded(i: i64, p: &HPoly, j: i64, q: &HPoly, out: &mut Element1) {
    if i >= 0 && j >= 0 {
        // ∫^i p(H) ∫^j q(H) = ∫^{i+j} p(H+j) q(H)
        out.add_component(i + j, &(&p.shift(j) * q));
    } else if i <= 0 && j <= 0 {
        // p(H) ∂^m q(H) ∂^n = p(H) q(H+m) ∂^{m+n}
        out.add_component(i + j, &(p * &q.shift(-i)));
    } else if i < 0 {
        // p ∂^m ∫^b q = p v_{b-m} q, with ∂∫ = 1
        let g = i + j;
        if g >= 0 {
            out.add_component(g, &(&p.shift(g) * q));
        } else {
            out.add_component(g, &(p * &q.shift(-g)));
        }
    } else {
        // ∫^a r(H) ∂^m with r = pq, equal to ∫^a ∂^m r(H-m), and
        // ∫^a ∂^m = v_{a-m} - Σ_{t<min(a,m)} e_{t+max(a-m,0), t+max(m-a,0)}
        let a = i;
        let m = -j;
        let r = p * q;
        let g = a - m;
        if g >= 0 {
            out.add_component(g, &r.shift(-m));
        } else {
            out.add_component(g, &r.shift(-a));
        }
        let row_off = g.max(0) as u64;
        let col_off = (-g).max(0) as u64;
        for t in 0..a.min(m) as u64 {
            let (s, u) = (t + row_off, t + col_off);
            // e_{su} r(H-m) = r(u+1-m) e_{su}
            let c = r.eval_int(u as i64 + 1 - m);
            out.add_unit(s, u, -c);
        }
    }
}

fn mul_graded_unit(i: i64, p: &HPoly, s: u64, t: u64, c: &Rational, out: &mut Element1) {
    if i >= 0 {
        // ∫^i p(H) e_{st} = p(s+1) e_{s+i,t}
        out.add_unit(s + i as u64, t, c * p.eval_int(s as i64 + 1));
    } else {
        let m = i.unsigned_abs();
        if s >= m {
            // p(H) ∂^m e_{st} = p(s-m+1) e_{s-m,t}
            out.add_unit(s - m, t, c * p.eval_int((s - m) as i64 + 1));
        }
    }
}

fn mul_unit_graded(s: u64, t: u64, c: &Rational, j: i64, q: &HPoly, out: &mut Element1) {
    if j > 0 {
        let b = j as u64;
        if t >= b {
            // e_{st} ∫^b q(H) = q(t-b+1) e_{s,t-b}
            out.add_unit(s, t - b, c * q.eval_int((t - b) as i64 + 1));
        }
    } else {
        // e_{st} q(H) ∂^n = q(t+1) e_{s,t+n}
        out.add_unit(s, t + j.unsigned_abs(), c * q.eval_int(t as i64 + 1));
    }
}

/// Product of two basis atoms, in canonical form.
pub fn atom_mul(left: Atom1, right: Atom1) -> Element1 {
    Element1::from_atom(left).mul(&Element1::from_atom(right))
}

impl fmt::Display for Element1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.atoms().into_iter().map(|(a, c)| (a.to_string(), c));
        f.write_str(&format_sum(terms))
    }
}

/// Joins `(monomial, coefficient)` pairs as `c*m + c*m - ...`; a monomial of
/// `"1"` prints the bare coefficient.
pub(crate) fn format_sum(terms: impl IntoIterator<Item = (String, Rational)>) -> String {
    let mut out = String::new();
    for (mono, c) in terms {
        let neg = rational::is_negative(&c);
        let abs = if neg { -c } else { c };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono == "1" {
            out.push_str(&rational::format(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&rational::format(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A polynomial in one variable, the module on which `I₁` acts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly1 {
    terms: BTreeMap<u64, Rational>,
}

impl Poly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·x^s`.
    pub fn monomial(c: Rational, s: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(s, c);
        p
    }

    pub fn add_term(&mut self, s: u64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(s).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn terms(&self) -> &BTreeMap<u64, Rational> {
        &self.terms
    }

    pub fn coeff(&self, s: u64) -> Rational {
        self.terms.get(&s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&s, c) in &other.terms {
            out.add_term(s, c.clone());
        }
        out
    }
}

impl FromIterator<(u64, Rational)> for Poly1 {
    fn from_iter<T: IntoIterator<Item = (u64, Rational)>>(iter: T) -> Self {
        let mut p = Self::zero();
        for (s, c) in iter {
            p.add_term(s, c);
        }
        p
    }
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(&s, c)| {
            let mono = match s {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{s}"),
            };
            (mono, c.clone())
        });
        f.write_str(&format_sum(terms))
    }
}

/// An element of `B₁ = K[H][∂, ∂^{-1}; τ]`, `τ(H) = H + 1`, stored as
/// `Σ_k p_k(H) ∂^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct B1Element {
    terms: BTreeMap<i64, HPoly>,
}

impl B1Element {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `p(H) ∂^k`.
    pub fn term(k: i64, p: HPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(k, &p);
        out
    }

    pub fn add_term(&mut self, k: i64, p: &HPoly) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.get(&k) {
            Some(q) => q + p,
            None => p.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, HPoly> {
        &self.terms
    }

    /// Coefficient of `H^t ∂^k`.
    pub fn coeff(&self, k: i64, t: usize) -> Rational {
        self.terms
            .get(&k)
            .map_or_else(Rational::zero, |p| p.coeff(t))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, p) in &other.terms {
            out.add_term(k, p);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&k, p) in &self.terms {
            for (&l, q) in &other.terms {
                // p ∂^k q ∂^l = p q(H+k) ∂^{k+l}
                out.add_term(k + l, &(p * &q.shift(k)));
            }
        }
        out
    }

    /// Nonzero `((k, t), c)` triples: the coefficient of `H^t ∂^k`.
    pub fn monomials(&self) -> Vec<((i64, u32), Rational)> {
        self.terms
            .iter()
            .flat_map(|(&k, p)| p.terms().map(move |(t, c)| ((k, t as u32), c.clone())))
            .collect()
    }
}

/// Multiplication in `B₁`.
pub fn b1_mul(u: &B1Element, v: &B1Element) -> B1Element {
    u.mul(v)
}

pub(crate) fn b1_monomial_text(k: i64, t: u32, suffix: &str) -> String {
    let mut parts = Vec::new();
    match t {
        0 => {}
        1 => parts.push(format!("H{suffix}")),
        _ => parts.push(format!("H{suffix}^{t}")),
    }
    match k {
        0 => {}
        1 => parts.push(format!("d{suffix}")),
        _ => parts.push(format!("d{suffix}^{k}")),
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for B1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .monomials()
            .into_iter()
            .map(|((k, t), c)| (b1_monomial_text(k, t, ""), c));
        f.write_str(&format_sum(terms))
    }
}
