//! Exact integer matrices, Smith normal form and finitely generated abelian
//! groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntegerMatrix {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers; all rows must have the
    /// same length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntegerMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::SizeMismatch(cols, bad.len()));
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        })
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[i64]) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(rows, cols);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = BigInt::from(d);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(self.cols, other.rows));
        }
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entries as machine integers, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_i64()).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        invariant_factors(self).len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += q * row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * q;
            if !v.is_zero() {
                self[(dst, j)] += v;
            }
        }
    }

    /// `col[dst] += q * col[src]`.
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * q;
            if !v.is_zero() {
                self[(i, dst)] += v;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal, each diagonal
/// entry dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// The nonzero diagonal entries of `D`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .take_while(|v| !v.is_zero())
            .collect()
    }
}

struct Tracker<'a> {
    a: &'a mut IntegerMatrix,
    u: Option<&'a mut IntegerMatrix>,
    v: Option<&'a mut IntegerMatrix>,
}

impl Tracker<'_> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = self.u.as_deref_mut() {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = self.v.as_deref_mut() {
            v.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_row(dst, src, q);
        if let Some(u) = self.u.as_deref_mut() {
            u.add_row(dst, src, q);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_col(dst, src, q);
        if let Some(v) = self.v.as_deref_mut() {
            v.add_col(dst, src, q);
        }
    }

    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        if let Some(u) = self.u.as_deref_mut() {
            u.negate_row(r);
        }
    }

    /// Position of the least nonzero `|entry|` in the lower-right block at `t`.
    fn smallest_from(&self, t: usize) -> Option<(usize, usize)> {
        let a = &*self.a;
        let mut best: Option<(usize, usize)> = None;
        for i in t..a.rows {
            for j in t..a.cols {
                let v = &a[(i, j)];
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Least nonzero `|entry|` in row `t` and column `t`, from position `t`.
    fn smallest_in_cross(&self, t: usize) -> (usize, usize) {
        let a = &*self.a;
        let cells = (t..a.rows)
            .map(|i| (i, t))
            .chain((t + 1..a.cols).map(|j| (t, j)));
        cells
            .filter(|&c| !a[c].is_zero())
            .min_by(|&x, &y| a[x].abs().cmp(&a[y].abs()))
            .expect("cross has a nonzero entry")
    }

    fn run(&mut self) {
        let mut t = 0;
        while let Some((pi, pj)) = self.smallest_from(t) {
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.a.rows {
                    if !self.a[(i, t)].is_zero() {
                        let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                        self.add_row(i, t, &-q);
                        clean &= self.a[(i, t)].is_zero();
                    }
                }
                for j in t + 1..self.a.cols {
                    if !self.a[(t, j)].is_zero() {
                        let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                        self.add_col(j, t, &-q);
                        clean &= self.a[(t, j)].is_zero();
                    }
                }
                if !clean {
                    let (i, j) = self.smallest_in_cross(t);
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                let pivot = self.a[(t, t)].clone();
                let bad = (t + 1..self.a.rows).find(|&i| {
                    (t + 1..self.a.cols).any(|j| !self.a[(i, j)].is_multiple_of(&pivot))
                });
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(m.rows);
    let mut v = IntegerMatrix::identity(m.cols);
    Tracker {
        a: &mut d,
        u: Some(&mut u),
        v: Some(&mut v),
    }
    .run();
    SmithForm { u, d, v }
}

/// Nonzero invariant factors of `m`, without the transforms.
pub fn invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut d = m.clone();
    Tracker {
        a: &mut d,
        u: None,
        v: None,
    }
    .run();
    (0..d.rows.min(d.cols))
        .map(|i| d[(i, i)].clone())
        .take_while(|v| !v.is_zero())
        .collect()
}

/// `Z^free_rank + Z/t_1 + ... + Z/t_r` with `1 < t_1 | t_2 | ... | t_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> AbelianGroup {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> AbelianGroup {
        AbelianGroup::free(0)
    }

    /// Canonical form of `Z^free_rank` plus cyclic groups of the given
    /// orders. Orders of 0 count as free summands; orders of 1 are dropped.
    pub fn from_cyclic(free_rank: usize, orders: &[u64]) -> AbelianGroup {
        let mut free = free_rank;
        // prime -> exponents of its prime-power summands
        let mut powers: Vec<(u64, Vec<u64>)> = Vec::new();
        for &order in orders {
            if order == 0 {
                free += 1;
                continue;
            }
            for (p, q) in prime_powers(order) {
                match powers.iter_mut().find(|(pp, _)| *pp == p) {
                    Some((_, list)) => list.push(q),
                    None => powers.push((p, vec![q])),
                }
            }
        }
        let len = powers.iter().map(|(_, l)| l.len()).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for (_, list) in &mut powers {
            list.sort_unstable();
            // the largest powers go to the last invariant factors
            for (slot, &q) in torsion.iter_mut().rev().zip(list.iter().rev()) {
                *slot *= q;
            }
        }
        AbelianGroup {
            free_rank: free,
            torsion,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

fn prime_powers(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut q = 1;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Converts invariant factors to `u64`, keeping those above 1.
pub(crate) fn torsion_of(factors: &[BigInt]) -> Result<Vec<u64>> {
    factors
        .iter()
        .filter(|v| !v.is_one())
        .map(|v| {
            v.to_u64()
                .ok_or_else(|| Error::Overflow(format!("invariant factor {v} exceeds u64")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn check(mat: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(mat);
        assert_eq!(s.u.mul(mat).unwrap().mul(&s.v).unwrap(), s.d);
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        assert!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        assert!(f.iter().all(|v| v.is_positive()));
        s
    }

    #[test]
    fn snf_examples() {
        assert!(check(&IntegerMatrix::zeros(2, 3)).d.is_zero());
        assert_eq!(
            check(&IntegerMatrix::identity(3)).d,
            IntegerMatrix::identity(3)
        );
        let s = check(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.d, IntegerMatrix::diagonal(2, 2, &[1, 6]));
        let s = check(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(s.d, IntegerMatrix::diagonal(3, 3, &[2, 6, 12]));
        check(&m(&[&[0, 0, 5], &[0, 7, 0]]));
        check(&m(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[-1, 0, 1, 0]]));
    }

    #[test]
    fn invariant_factors_match_snf() {
        let a = m(&[&[4, 6, 8], &[6, 9, 12], &[2, 3, 5]]);
        assert_eq!(
            invariant_factors(&a),
            smith_normal_form(&a).invariant_factors()
        );
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn abelian_group_canonical_form() {
        let g = AbelianGroup::from_cyclic(1, &[2, 3, 4, 1]);
        assert_eq!(
            g,
            AbelianGroup {
                free_rank: 1,
                torsion: vec![2, 12]
            }
        );
        assert_eq!(g.to_string(), "Z + Z/2 + Z/12");
        assert_eq!(AbelianGroup::from_cyclic(0, &[6, 0]).to_string(), "Z + Z/6");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::free(3).to_string(), "Z^3");
    }

    #[test]
    fn transpose_and_mul() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        let p = a.mul(&a.transpose()).unwrap();
        assert_eq!(p, m(&[&[14, 32], &[32, 77]]));
        assert!(a.mul(&a).is_err());
    }
}
