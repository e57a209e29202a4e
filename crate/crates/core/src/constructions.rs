//! New solutions from old ones: products, extensions, derived solutions,
//! higher levels `R^{l,m}` and the disjoint-union solution of a k-graph.

use crate::error::{Error, Result};
use crate::kgraph::{ThetaFamily, ThetaMap};
use crate::solution::Solution;
use crate::words::{self, checked_power, MAX_TABLE_ENTRIES};

/// Componentwise product on `X x Y`, with `(x, y)` encoded as `(x - 1) |Y| + y`.
pub fn cartesian_product(rx: &Solution, ry: &Solution) -> Result<Solution> {
    rx.require_ybe()?;
    ry.require_ybe()?;
    let ny = ry.size() as u32;
    let pair = |x: u32, y: u32| (x - 1) * ny + y;
    let split = |z: u32| ((z - 1) / ny + 1, (z - 1) % ny + 1);
    Solution::from_fn(rx.size() * ry.size(), |p, q| {
        let (x1, y1) = split(p);
        let (x2, y2) = split(q);
        let (a, b) = rx.apply(x1, x2);
        let (c, d) = ry.apply(y1, y2);
        (pair(a, c), pair(b, d))
    })
}

/// `R_X` and `R_Y` on the diagonal blocks and flips across, on `X` then `Y`.
pub fn trivial_extension(rx: &Solution, ry: &Solution) -> Result<Solution> {
    rx.require_ybe()?;
    ry.require_ybe()?;
    let nx = rx.size() as u32;
    Solution::from_fn(rx.size() + ry.size(), |p, q| match (p <= nx, q <= nx) {
        (true, true) => rx.apply(p, q),
        (false, false) => {
            let (u, v) = ry.apply(p - nx, q - nx);
            (u + nx, v + nx)
        }
        _ => (q, p),
    })
}

/// Identity on each diagonal block, `theta` on `X x Y` and its inverse on `Y x X`.
pub fn glued_identity_extension(theta: &ThetaMap) -> Result<Solution> {
    let nx = theta.left_size() as u32;
    Solution::from_fn(theta.left_size() + theta.right_size(), |p, q| {
        match (p <= nx, q <= nx) {
            (true, false) => {
                let (t, s) = theta.apply(p, q - nx);
                (t + nx, s)
            }
            (false, true) => {
                let (s, t) = theta.invert(p - nx, q);
                (s, t + nx)
            }
            _ => (p, q),
        }
    })
}

fn invert_perm(p: &[u32]) -> Option<Vec<u32>> {
    let mut inv = vec![0u32; p.len()];
    for (i, &v) in p.iter().enumerate() {
        let slot = inv.get_mut(v as usize - 1)?;
        if *slot != 0 {
            return None;
        }
        *slot = i as u32 + 1;
    }
    Some(inv)
}

fn check_derivable(r: &Solution) -> Result<(Vec<Vec<u32>>, Vec<Vec<u32>>)> {
    r.require_ybe()?;
    let ab = r.alpha_beta();
    let alpha_inv: Option<Vec<_>> = ab.alpha.iter().map(|a| invert_perm(a)).collect();
    let beta_inv: Option<Vec<_>> = ab.beta.iter().map(|b| invert_perm(b)).collect();
    match (alpha_inv, beta_inv) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::Degenerate),
    }
}

/// `R'(x, y) = (beta_x(alpha_{beta_y^{-1}(x)}(y)), x)`.
pub fn derived_solution(r: &Solution) -> Result<Solution> {
    let (_, beta_inv) = check_derivable(r)?;
    Solution::from_fn(r.size(), |x, y| {
        let w = beta_inv[y as usize - 1][x as usize - 1];
        (r.beta(x, r.alpha(w, y)), x)
    })
}

/// The left-handed variant `(x, y) -> (y, alpha_y(beta_{alpha_x^{-1}(y)}(x)))`.
pub fn left_derived_solution(r: &Solution) -> Result<Solution> {
    let (alpha_inv, _) = check_derivable(r)?;
    Solution::from_fn(r.size(), |x, y| {
        let w = alpha_inv[x as usize - 1][y as usize - 1];
        (y, r.alpha(y, r.beta(w, x)))
    })
}

/// The bijection `R^{l,m}` on block words, `[N]^l x [N]^m -> [N]^m x [N]^l`.
///
/// Codes are 1-based big-endian word encodings. Entry
/// `(code(u) - 1) * N^m + (code(v) - 1)` holds `(code(v'), code(u'))` where
/// `e^1_u e^2_v = e^2_{v'} e^1_{u'}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMap {
    l: usize,
    m: usize,
    size: usize,
    left_words: usize,
    right_words: usize,
    table: Vec<(u32, u32)>,
}

impl LevelMap {
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[(u32, u32)] {
        &self.table
    }

    pub fn apply_codes(&self, u: u32, v: u32) -> (u32, u32) {
        self.table[(u as usize - 1) * self.right_words + (v as usize - 1)]
    }

    /// `R^{l,m}(u, v) = (v', u')` on explicit words.
    pub fn apply(&self, u: &[u32], v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let (cv, cu) = self.apply_codes(words::encode(u, self.size), words::encode(v, self.size));
        (
            words::decode(cv, self.size, self.m),
            words::decode(cu, self.size, self.l),
        )
    }

    pub fn to_theta_map(&self) -> ThetaMap {
        ThetaMap::new(self.left_words, self.right_words, self.table.clone())
            .expect("level maps are bijections")
    }

    pub fn to_solution(&self) -> Result<Solution> {
        if self.l != self.m {
            return Err(Error::InvalidParams(format!(
                "level ({}, {}) is not square",
                self.l, self.m
            )));
        }
        Solution::new(self.left_words, self.table.clone())
    }
}

/// Pushes the colour-2 block `v` left through the colour-1 block `u`.
///
/// Rewrites `e^1_u e^2_v` by always applying `R` to the leftmost adjacent
/// (colour 1, colour 2) pair; for a sorted input this moves `v_1` fully to
/// the front, then `v_2`, and so on. `u` is overwritten with `u'` and `v`
/// with `v'`.
pub(crate) fn push_through(r: &Solution, u: &mut [u32], v: &mut [u32]) {
    for y in v.iter_mut() {
        for x in u.iter_mut().rev() {
            let (y2, x2) = r.apply(*x, *y);
            *x = x2;
            *y = y2;
        }
    }
}

pub fn level_map(r: &Solution, l: usize, m: usize) -> Result<LevelMap> {
    level_map_with_limit(r, l, m, words::word_limit())
}

pub fn level_map_with_limit(r: &Solution, l: usize, m: usize, limit: u64) -> Result<LevelMap> {
    if l == 0 || m == 0 {
        return Err(Error::InvalidParams(
            "level indices must be positive".into(),
        ));
    }
    let n = r.size();
    let left_words = checked_power(n, l, limit)?;
    let right_words = checked_power(n, m, limit)?;
    let entries = left_words as u64 * right_words as u64;
    if entries > MAX_TABLE_ENTRIES {
        return Err(Error::Overflow(format!(
            "level table would have {entries} entries"
        )));
    }
    let mut table = Vec::with_capacity(entries as usize);
    let mut u = vec![0u32; l];
    let mut v = vec![0u32; m];
    for ui in 0..left_words {
        for vi in 0..right_words {
            words::word_at(ui, n, &mut u);
            words::word_at(vi, n, &mut v);
            push_through(r, &mut u, &mut v);
            table.push((words::encode(&v, n), words::encode(&u, n)));
        }
    }
    Ok(LevelMap {
        l,
        m,
        size: n,
        left_words,
        right_words,
        table,
    })
}

/// The `n`th level `R^{n,n}` as a solution on `[N^n]`.
pub fn level_solution(r: &Solution, n: usize) -> Result<Solution> {
    level_solution_with_limit(r, n, words::word_limit())
}

pub fn level_solution_with_limit(r: &Solution, n: usize, limit: u64) -> Result<Solution> {
    level_map_with_limit(r, n, n, limit)?.to_solution()
}

/// Solution on `X = [N_1] + ... + [N_k]` (blocks in colour order): identity on
/// each `[N_i]^2`, `theta_ij` on `[N_i] x [N_j]` and `theta_ij^{-1}` on
/// `[N_j] x [N_i]` for `i < j`.
pub fn disjoint_union_solution(theta: &ThetaFamily) -> Solution {
    let sizes = theta.sizes();
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut acc = 0u32;
    for &s in sizes {
        offsets.push(acc);
        acc += s as u32;
    }
    let locate = |x: u32| {
        let c = offsets.iter().rposition(|&o| o < x).expect("x >= 1");
        (c + 1, x - offsets[c])
    };
    Solution::from_fn(acc as usize, |x, y| {
        let (i, s) = locate(x);
        let (j, t) = locate(y);
        if i == j {
            (x, y)
        } else if i < j {
            let (t2, s2) = theta.map(i, j).apply(s, t);
            (offsets[j - 1] + t2, offsets[i - 1] + s2)
        } else {
            let (a, b) = theta.map(j, i).invert(s, t);
            (offsets[j - 1] + a, offsets[i - 1] + b)
        }
    })
    .expect("block construction is a bijection")
}
