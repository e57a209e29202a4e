//! YB chain complex `C_n = Z X^n` and its (co)homology.
//!
//! `F_i^0` moves `x_i` to the right end with `R_{i,i+1}`, then `R_{i+1,i+2}`,
//! and so on, and deletes the last entry; `F_i^1` moves `x_i` to the left end
//! and deletes the first entry. The boundary is
//! `d_n = sum_i (-1)^i (F_i^0 - F_i^1)`, with `C_0 = Z` on the empty tuple.

mod matrix;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

pub use matrix::{invariant_factors, smith_normal_form, AbelianGroup, IntegerMatrix, SmithForm};

use crate::error::{Error, Result};
use crate::solution::Solution;
use crate::words::{self, checked_power, word_limit};

/// Largest dense boundary matrix built, in entries.
pub const MAX_MATRIX_ENTRIES: u64 = 1 << 24;

fn dimensions(r: &Solution, n: usize) -> Result<(usize, usize)> {
    let cols = checked_power(r.size(), n, word_limit())?;
    let rows = if n == 0 {
        1
    } else {
        checked_power(r.size(), n - 1, word_limit())?
    };
    if rows as u64 * cols as u64 > MAX_MATRIX_ENTRIES {
        return Err(Error::Overflow(format!(
            "boundary matrix in degree {n} would have {rows}x{cols} entries"
        )));
    }
    Ok((rows, cols))
}

/// `F_i^0(x)` with 1-based `i`: the tuple after moving `x_i` right, minus its
/// last entry.
fn face_right(r: &Solution, x: &[u32], i: usize) -> Vec<u32> {
    let mut w = x.to_vec();
    for p in i - 1..w.len() - 1 {
        r.apply_leg_in_place(p, &mut w);
    }
    w.pop();
    w
}

/// `F_i^1(x)`: the tuple after moving `x_i` left, minus its first entry.
fn face_left(r: &Solution, x: &[u32], i: usize) -> Vec<u32> {
    let mut w = x.to_vec();
    for p in (0..i - 1).rev() {
        r.apply_leg_in_place(p, &mut w);
    }
    w.remove(0);
    w
}

/// Matrix of `d_n : C_n -> C_{n-1}` in the lexicographic bases; column `c`
/// is the boundary of the `c`-th tuple.
pub fn boundary_matrix(r: &Solution, n: usize) -> Result<IntegerMatrix> {
    r.require_ybe()?;
    let (rows, cols) = dimensions(r, n)?;
    let mut m = IntegerMatrix::zeros(rows, cols);
    if n <= 1 {
        return Ok(m);
    }
    let size = r.size();
    let mut x = vec![0u32; n];
    for c in 0..cols {
        words::word_at(c, size, &mut x);
        for i in 1..=n {
            let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
            m[(words::index_of(&face_right(r, &x, i), size), c)] += sign;
            m[(words::index_of(&face_left(r, &x, i), size), c)] -= sign;
        }
    }
    Ok(m)
}

/// `d_n` from the closed formula for `R(x, y) = (y, x * y)`:
/// `sum_{i>=2} (-1)^i (x_1..^x_i..x_n - (x_1*x_i)..(x_{i-1}*x_i) x_{i+1}..x_n)`.
pub fn derived_boundary(r: &Solution, n: usize) -> Result<IntegerMatrix> {
    if !r.alpha_is_identity() {
        return Err(Error::NotDerivedType);
    }
    r.require_ybe()?;
    let (rows, cols) = dimensions(r, n)?;
    let mut m = IntegerMatrix::zeros(rows, cols);
    if n <= 1 {
        return Ok(m);
    }
    let size = r.size();
    let star = |a: u32, b: u32| r.beta(b, a);
    let mut x = vec![0u32; n];
    for c in 0..cols {
        words::word_at(c, size, &mut x);
        for i in 2..=n {
            let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
            let mut dropped = x.clone();
            dropped.remove(i - 1);
            let mut acted: Vec<u32> = x[..i - 1].iter().map(|&a| star(a, x[i - 1])).collect();
            acted.extend_from_slice(&x[i..]);
            m[(words::index_of(&dropped, size), c)] += sign;
            m[(words::index_of(&acted, size), c)] -= sign;
        }
    }
    Ok(m)
}

/// Whether `d_n d_{n+1} = 0` for all `1 <= n < nmax`.
pub fn verify_complex(r: &Solution, nmax: usize) -> Result<bool> {
    Ok(first_non_complex_degree(r, nmax)?.is_none())
}

fn first_non_complex_degree(r: &Solution, nmax: usize) -> Result<Option<usize>> {
    r.require_ybe()?;
    let mut lower = boundary_matrix(r, 1)?;
    for n in 1..nmax {
        let upper = boundary_matrix(r, n + 1)?;
        if !lower.mul(&upper)?.is_zero() {
            return Ok(Some(n));
        }
        lower = upper;
    }
    Ok(None)
}

fn boundary_pair(r: &Solution, n: usize) -> Result<(IntegerMatrix, IntegerMatrix)> {
    r.require_ybe()?;
    let lower = boundary_matrix(r, n)?;
    let upper = boundary_matrix(r, n + 1)?;
    if n >= 1 && !lower.mul(&upper)?.is_zero() {
        return Err(Error::NotAComplex(n));
    }
    Ok((lower, upper))
}

/// `H_n = ker d_n / im d_{n+1}`.
pub fn homology(r: &Solution, n: usize) -> Result<AbelianGroup> {
    let (lower, upper) = boundary_pair(r, n)?;
    let rank_lower = lower.rank();
    let upper_factors = invariant_factors(&upper);
    let free = lower.cols() - rank_lower - upper_factors.len();
    Ok(AbelianGroup::from_cyclic(
        free,
        &matrix::torsion_of(&upper_factors)?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Coefficients {
    Integers,
    /// `Z/m`, `m >= 2`.
    Modular(u64),
}

impl Coefficients {
    /// Parses `z`, `Z`, `z/M` or `Z/M`.
    pub fn parse(s: &str) -> Result<Coefficients> {
        let lower = s.to_ascii_lowercase();
        if lower == "z" {
            return Ok(Coefficients::Integers);
        }
        let m = lower
            .strip_prefix("z/")
            .and_then(|m| m.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidParams(format!("unknown coefficients `{s}`")))?;
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        Ok(Coefficients::Modular(m))
    }
}

/// `H^n = ker delta^n / im delta^{n-1}` with `delta^n = d_{n+1}^T`.
///
/// Over `Z` this is read off the transposed boundaries; over `Z/m` it is
/// `Hom(H_n, Z/m) + Ext(H_{n-1}, Z/m)`.
pub fn cohomology(r: &Solution, n: usize, coefficients: Coefficients) -> Result<AbelianGroup> {
    match coefficients {
        Coefficients::Integers => {
            let (lower, upper) = boundary_pair(r, n)?;
            let delta = upper.transpose();
            let prev = lower.transpose();
            let prev_factors = invariant_factors(&prev);
            let free = delta.cols() - delta.rank() - prev_factors.len();
            Ok(AbelianGroup::from_cyclic(
                free,
                &matrix::torsion_of(&prev_factors)?,
            ))
        }
        Coefficients::Modular(m) => {
            if m < 2 {
                return Err(Error::BadModulus(m));
            }
            let h = homology(r, n)?;
            let mut orders = vec![m; h.free_rank];
            orders.extend(h.torsion.iter().map(|&t| num_integer::gcd(t, m)));
            if n >= 1 {
                let below = homology(r, n - 1)?;
                orders.extend(below.torsion.iter().map(|&t| num_integer::gcd(t, m)));
            }
            Ok(AbelianGroup::from_cyclic(0, &orders))
        }
    }
}

/// Whether `f : X^n -> Z/m` (values in lexicographic tuple order) is a
/// cocycle, i.e. `f o d_{n+1} = 0 mod m`. Use `m = 0` for integer values.
pub fn is_cocycle(r: &Solution, n: usize, f: &[i64], modulus: u64) -> Result<bool> {
    let upper = boundary_matrix(r, n + 1)?;
    if f.len() != upper.rows() {
        return Err(Error::SizeMismatch(upper.rows(), f.len()));
    }
    let row = IntegerMatrix::from_rows(&[f.to_vec()])?;
    let image = row.mul(&upper)?;
    let m = num_bigint::BigInt::from(modulus);
    Ok((0..image.cols()).all(|c| {
        let v = &image[(0, c)];
        if modulus == 0 {
            num_traits::Zero::is_zero(v)
        } else {
            num_traits::Zero::is_zero(&num_integer::Integer::mod_floor(v, &m))
        }
    }))
}

/// Orbits of `[N]` under the maps `x -> beta_y(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    pub blocks: Vec<Vec<u32>>,
}

pub fn beta_orbits(r: &Solution) -> OrbitPartition {
    let n = r.size();
    let mut uf = UnionFind::<usize>::new(n);
    for (x, y) in r.pairs() {
        uf.union(x as usize - 1, r.beta(y, x) as usize - 1);
    }
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut slot_of_root = vec![usize::MAX; n];
    for x in 0..n {
        let root = uf.find(x);
        if slot_of_root[root] == usize::MAX {
            slot_of_root[root] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot_of_root[root]].push(x as u32 + 1);
    }
    OrbitPartition { blocks }
}

/// For derived-type `R`, checks that `H_1` is free on the `beta`-orbits.
pub fn h1_orbit_check(r: &Solution) -> Result<bool> {
    if !r.is_derived_type() {
        return Err(Error::NotDerivedType);
    }
    Ok(homology(r, 1)? == AbelianGroup::free(beta_orbits(r).blocks.len()))
}
