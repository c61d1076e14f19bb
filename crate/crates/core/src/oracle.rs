//! Truncated-matrix model of operators on `K[x]`, independent of the
//! rewriting rules, and exact rank computation.
//!
//! Matrices are taken in the divided-power basis `x^[s] = x^s/s!`: column `s`
//! holds the coordinates of `a·x^[s]`, and images of degree `≥ N` are dropped.
//! In this basis `e_{ij}` is literally the elementary matrix `E_{ij}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::element::Element1;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::tensor::ElementN;

/// A dense `N×N` rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncMatrix {
    size: usize,
    entries: Vec<Rational>,
}

impl TruncMatrix {
    pub fn zeros(size: usize) -> Self {
        TruncMatrix {
            size,
            entries: vec![Rational::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Rational) {
        self.entries[row * self.size + col] = v;
    }

    fn add_at(&mut self, row: usize, col: usize, v: &Rational) {
        self.entries[row * self.size + col] += v;
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        (0..self.size).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        TruncMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncMatrix {
            size: self.size,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product; the row index of `self` is the most significant.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.size, other.size);
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * m + k, j * m + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Rows of `"p/q"` strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.size)
            .map(|r| {
                (0..self.size)
                    .map(|c| rational::format_pq(self.get(r, c)))
                    .collect()
            })
            .collect()
    }

    /// Re-expresses the matrix in the plain monomial basis `x^s`.
    pub fn to_monomial_basis(&self) -> Self {
        let n = self.size;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for s in 0..n {
                let v = self.get(r, s);
                if !v.is_zero() {
                    // x^s = s!·x^[s], and x^[r] = x^r / r!
                    out.set(
                        r,
                        s,
                        v * rational::factorial(s as u64) / rational::factorial(r as u64),
                    );
                }
            }
        }
        out
    }
}

impl fmt::Display for TruncMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.size {
            let row: Vec<String> = (0..self.size)
                .map(|c| rational::format(self.get(r, c)))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Matrix of `a` acting on `span{x^[0], …, x^[N-1]}`.
pub fn to_matrix(a: &Element1, size: usize) -> TruncMatrix {
    let mut m = TruncMatrix::zeros(size);
    for (&g, p) in a.graded() {
        for s in 0..size {
            if g >= 0 {
                // ∫^g p(H) x^[s] = p(s+1) x^[s+g]
                let r = s + g as usize;
                if r < size {
                    m.add_at(r, s, &p.eval_int(s as i64 + 1));
                }
            } else {
                // p(H) ∂^k x^[s] = p(s-k+1) x^[s-k]
                let k = g.unsigned_abs() as usize;
                if s >= k {
                    m.add_at(s - k, s, &p.eval_int((s - k) as i64 + 1));
                }
            }
        }
    }
    for (&(row, col), c) in a.fpart() {
        let (row, col) = (row as usize, col as usize);
        if row < size && col < size {
            m.add_at(row, col, c);
        }
    }
    m
}

/// Matrix of a rank-`n` tensor on `⊗ span{x_i^[0..N)}`, of size `N^n`.
pub fn to_matrix_n(a: &ElementN, size: usize) -> TruncMatrix {
    let total = size.pow(a.rank() as u32);
    let mut out = TruncMatrix::zeros(total);
    for (key, c) in a.terms() {
        let mut m = TruncMatrix::identity(1);
        for atom in key {
            m = m.kron(&to_matrix(&Element1::from_atom(*atom), size));
        }
        out = out.add(&m.scale(c));
    }
    out
}

/// Checks `mul(a, b)` against the matrix product on the columns where
/// truncation loses nothing, `s + up(a) + up(b) < N`.
pub fn consistent(a: &Element1, b: &Element1, size: usize) -> Result<bool> {
    let required = a.max_up() + b.max_up();
    if size <= required {
        return Err(Error::EmptyWindow { size, required });
    }
    let symbolic = to_matrix(&a.mul(b), size);
    let numeric = to_matrix(a, size).mul(&to_matrix(b, size));
    Ok((0..size - required).all(|s| symbolic.column(s) == numeric.column(s)))
}

/// A sparse rational row vector.
pub type SparseRow = BTreeMap<usize, Rational>;

/// Clears denominators and removes the content.
fn primitive_int_row(row: &SparseRow) -> BTreeMap<usize, BigInt> {
    let lcm = row
        .values()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: BTreeMap<usize, BigInt> = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(&k, v)| (k, v.numer() * (&lcm / v.denom())))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut row: BTreeMap<usize, BigInt>) -> BTreeMap<usize, BigInt> {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
    if row.values().next().is_some_and(|v| v.is_negative()) {
        for v in row.values_mut() {
            *v = -&*v;
        }
    }
    row
}

/// Rank over ℚ by fraction-free (Bareiss) elimination.
pub fn exact_rank(rows: &[SparseRow]) -> usize {
    let mut cols: Vec<usize> = rows.iter().flat_map(|r| r.keys().copied()).collect();
    cols.sort_unstable();
    cols.dedup();
    let col_pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let width = cols.len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![BigInt::zero(); width];
            for (k, v) in primitive_int_row(r) {
                dense[col_pos[&k]] = v;
            }
            dense
        })
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();

    let height = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..width {
        if rank == height {
            break;
        }
        let Some(p) = (rank..height).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for i in rank + 1..height {
            let factor = m[i][c].clone();
            for j in c + 1..width {
                let v = &pivot * &m[i][j] - &factor * &m[rank][j];
                debug_assert!((&v % &prev).is_zero());
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Echelon basis that grows one row at a time; used where rows arrive in
/// stages and the rank is needed after each stage.
///
/// Reduction is fraction-free: rows are kept primitive over ℤ and combined
/// by cross-multiplication.
#[derive(Clone, Debug, Default)]
pub struct IncrementalRank {
    pivots: BTreeMap<usize, BTreeMap<usize, BigInt>>,
}

impl IncrementalRank {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: &SparseRow) -> bool {
        let mut row = primitive_int_row(row);
        loop {
            let Some((&lead, lead_val)) = row.iter().next() else {
                return false;
            };
            let Some(pivot) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, row);
                return true;
            };
            let a = pivot[&lead].clone();
            let b = lead_val.clone();
            // row ← a·row − b·pivot
            let mut next: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&k, v) in &row {
                next.insert(k, &a * v);
            }
            for (&k, v) in pivot {
                let e = next.entry(k).or_insert_with(BigInt::zero);
                *e -= &b * v;
            }
            next.retain(|_, v| !v.is_zero());
            row = make_primitive(next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hpoly::HPoly;
    use crate::rational::int;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(k, v)| (k, int(v))).collect()
    }

    #[test]
    fn elementary_matrix() {
        let m = to_matrix(&Element1::unit(1, 2), 4);
        for r in 0..4 {
            for c in 0..4 {
                let want = if (r, c) == (1, 2) { int(1) } else { int(0) };
                assert_eq!(m.get(r, c), &want);
            }
        }
    }

    #[test]
    fn identity_and_h() {
        assert_eq!(to_matrix(&Element1::one(), 5), TruncMatrix::identity(5));
        let h = to_matrix(&Element1::h(), 3);
        for i in 0..3 {
            assert_eq!(h.get(i, i), &int(i as i64 + 1));
        }
        assert_eq!(h.get(0, 1), &int(0));
    }

    #[test]
    fn window_examples() {
        let d = Element1::d_pow(1);
        let i = Element1::integral_pow(1);
        assert!(consistent(&d, &i, 8).unwrap());
        assert!(consistent(&i, &d, 8).unwrap());
        let prod = to_matrix(&i, 8).mul(&to_matrix(&d, 8));
        for s in 0..7 {
            let mut col = vec![int(0); 8];
            if s > 0 {
                col[s] = int(1);
            }
            assert_eq!(prod.column(s), col);
        }
        assert_eq!(
            consistent(&i, &i, 2),
            Err(Error::EmptyWindow {
                size: 2,
                required: 2
            })
        );
    }

    #[test]
    fn monomial_convention() {
        let m = to_matrix(&Element1::unit(1, 3), 5).to_monomial_basis();
        assert_eq!(m.get(1, 3), &int(6));
        let x = to_matrix(&Element1::component(1, HPoly::h()), 4).to_monomial_basis();
        assert_eq!(x.get(1, 0), &int(1));
        assert_eq!(x.get(3, 2), &int(1));
    }

    #[test]
    fn rank_small() {
        assert_eq!(
            exact_rank(&[row(&[(0, 1)]), row(&[(1, 1)]), row(&[(0, 1), (1, 1)])]),
            2
        );
        assert_eq!(exact_rank(&[]), 0);
        assert_eq!(exact_rank(&[row(&[]), row(&[(3, 0)])]), 0);
        assert_eq!(
            exact_rank(&[
                row(&[(0, 2), (1, 4)]),
                row(&[(0, 3), (1, 6)]),
                row(&[(2, 5)])
            ]),
            2
        );
    }

    #[test]
    fn incremental_matches_bareiss() {
        let rows = vec![
            row(&[(0, 2), (1, 4), (5, 1)]),
            row(&[(0, 3), (1, 6)]),
            row(&[(5, 7)]),
            row(&[(1, 1), (2, 1)]),
            row(&[(0, 1), (1, 3), (2, 1)]),
        ];
        let mut inc = IncrementalRank::new();
        for r in &rows {
            inc.insert(r);
        }
        assert_eq!(inc.rank(), exact_rank(&rows));
        assert_eq!(inc.rank(), 3);
    }
}
