//! Independent oracles shared by the integration tests. Nothing here calls
//! the library routine it is used to check.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ybk::kgraph::{normalize, Letter, ThetaFamily, ThetaMap};
use ybk::Solution;

/// Applies the raw table, 1-based.
pub fn r_at(r: &Solution, x: u32, y: u32) -> (u32, u32) {
    r.table()[(x as usize - 1) * r.size() + (y as usize - 1)]
}

/// Braid relation checked straight from the table.
pub fn raw_ybe(r: &Solution) -> bool {
    let n = r.size() as u32;
    for x in 1..=n {
        for y in 1..=n {
            for z in 1..=n {
                // R12 R23 R12
                let (a, b) = r_at(r, x, y);
                let (b, c) = r_at(r, b, z);
                let (a, b) = r_at(r, a, b);
                let left = (a, b, c);
                // R23 R12 R23
                let (b, c) = r_at(r, y, z);
                let (a, b) = r_at(r, x, b);
                let (b, c) = r_at(r, b, c);
                if left != (a, b, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// `R^{l,m}(u, v)` by the leg-composition product: the last letter of `u`
/// is carried to the end first, then the one before it, and so on.
pub fn leg_level(r: &Solution, u: &[u32], v: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let (l, m) = (u.len(), v.len());
    let mut w: Vec<u32> = u.iter().chain(v).copied().collect();
    for i in (0..l).rev() {
        for p in i..i + m {
            let (a, b) = r_at(r, w[p], w[p + 1]);
            w[p] = a;
            w[p + 1] = b;
        }
    }
    (w[..m].to_vec(), w[m..].to_vec())
}

/// All words of length `n` over `[size]`, lexicographic.
pub fn all_words(size: usize, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=size as u32).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Connected components of length-`n` words under `R` and `R^{-1}` at
/// every adjacent position, by breadth-first search.
pub fn closure_classes(r: &Solution, n: usize) -> Vec<Vec<Vec<u32>>> {
    let inverse: HashMap<(u32, u32), (u32, u32)> = (1..=r.size() as u32)
        .flat_map(|x| (1..=r.size() as u32).map(move |y| (x, y)))
        .map(|(x, y)| (r_at(r, x, y), (x, y)))
        .collect();
    let mut seen = HashSet::new();
    let mut classes = Vec::new();
    for start in all_words(r.size(), n) {
        if seen.contains(&start) {
            continue;
        }
        let mut class = vec![];
        let mut queue = VecDeque::from([start.clone()]);
        seen.insert(start);
        while let Some(w) = queue.pop_front() {
            for p in 0..n.saturating_sub(1) {
                let pair = (w[p], w[p + 1]);
                for (a, b) in [r_at(r, pair.0, pair.1), inverse[&pair]] {
                    let mut next = w.clone();
                    next[p] = a;
                    next[p + 1] = b;
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            class.push(w);
        }
        class.sort();
        classes.push(class);
    }
    classes.sort();
    classes
}

/// Rank over the prime field `F_p`.
pub fn rank_mod_p(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|v| v.rem_euclid(p)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let inv = |a: i64| {
        let (mut e, mut base, mut acc) = (p - 2, a, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let k = inv(m[rank][c]);
        for v in m[rank].iter_mut() {
            *v = *v * k % p;
        }
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] - f * m[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Boundary of the chain complex written out from the face maps:
/// `d(x) = sum_i (-1)^i (F_i^0(x) - F_i^1(x))`, with `F_i^0` carrying
/// `x_i` to the right end and dropping it and `F_i^1` carrying it to the
/// left end and dropping it. Columns are indexed by `n`-tuples.
pub fn face_boundary(r: &Solution, n: usize) -> Vec<Vec<i64>> {
    let rows_words = all_words(r.size(), n.saturating_sub(1));
    let index: HashMap<Vec<u32>, usize> = rows_words
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    let cols = all_words(r.size(), n);
    let mut m = vec![vec![0i64; cols.len()]; rows_words.len()];
    if n == 0 {
        return m;
    }
    for (c, w) in cols.iter().enumerate() {
        for i in 1..=n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let mut right = w.clone();
            for p in i - 1..n - 1 {
                let (a, b) = r_at(r, right[p], right[p + 1]);
                right[p] = a;
                right[p + 1] = b;
            }
            right.pop();
            let mut left = w.clone();
            for p in (0..i - 1).rev() {
                let (a, b) = r_at(r, left[p], left[p + 1]);
                left[p] = a;
                left[p + 1] = b;
            }
            left.remove(0);
            m[index[&right]][c] += sign;
            m[index[&left]][c] -= sign;
        }
    }
    m
}

/// Random bijection of `[n]^2`.
pub fn random_solution_table(rng: &mut ChaCha8Rng, n: usize) -> Solution {
    let mut pairs: Vec<(u32, u32)> = (1..=n as u32)
        .flat_map(|x| (1..=n as u32).map(move |y| (x, y)))
        .collect();
    pairs.shuffle(rng);
    Solution::new(n, pairs).unwrap()
}

/// Random bijection `[a] x [b] -> [b] x [a]`.
pub fn random_theta_map(rng: &mut ChaCha8Rng, a: usize, b: usize) -> ThetaMap {
    let mut pairs: Vec<(u32, u32)> = (1..=b as u32)
        .flat_map(|t| (1..=a as u32).map(move |s| (t, s)))
        .collect();
    pairs.shuffle(rng);
    ThetaMap::new(a, b, pairs).unwrap()
}

/// Generalized braid relation checked on explicit triples:
/// pushing `e^i_s e^j_t e^l_u` to colour-descending order along both
/// paths must agree.
pub fn raw_triple_condition(maps: &HashMap<(usize, usize), ThetaMap>, sizes: &[usize]) -> bool {
    let k = sizes.len();
    for i in 1..=k {
        for j in i + 1..=k {
            for l in j + 1..=k {
                let (ij, il, jl) = (&maps[&(i, j)], &maps[&(i, l)], &maps[&(j, l)]);
                for s in 1..=sizes[i - 1] as u32 {
                    for t in 1..=sizes[j - 1] as u32 {
                        for u in 1..=sizes[l - 1] as u32 {
                            // ij first: (s,t,u) -> (t1,s1,u) -> (t1,u1,s2) -> (u2,t2,s2)
                            let (t1, s1) = ij.apply(s, t);
                            let (u1, s2) = il.apply(s1, u);
                            let (u2, t2) = jl.apply(t1, u1);
                            // jl first: (s,t,u) -> (s,u1',t1') -> (u2',s1',t1') -> (u2',t2',s2')
                            let (u1b, t1b) = jl.apply(t, u);
                            let (u2b, s1b) = il.apply(s, u1b);
                            let (t2b, s2b) = ij.apply(s1b, t1b);
                            if (u2, t2, s2) != (u2b, t2b, s2b) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Rejection-samples a valid 3-colour family with sizes in `1..=3`.
/// Returns the family and the number of attempts used.
pub fn random_valid_family(rng: &mut ChaCha8Rng) -> (ThetaFamily, usize) {
    for attempt in 1.. {
        let sizes: Vec<usize> = (0..3).map(|_| rng.gen_range(1..=3)).collect();
        let mut maps = HashMap::new();
        for i in 1..=3 {
            for j in i + 1..=3 {
                maps.insert((i, j), random_theta_map(rng, sizes[i - 1], sizes[j - 1]));
            }
        }
        if raw_triple_condition(&maps, &sizes) {
            let ordered = vec![
                maps[&(1, 2)].clone(),
                maps[&(1, 3)].clone(),
                maps[&(2, 3)].clone(),
            ];
            return (ThetaFamily::new(sizes, ordered).unwrap(), attempt);
        }
    }
    unreachable!()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Number of `(t', s')` with `e^i_s e^j_t' = e^j_t e^i_s'` in the
/// semigroup, found by comparing normal forms.
pub fn pullback_fibre(family: &Arc<ThetaFamily>, i: usize, s: u32, j: usize, t: u32) -> usize {
    let sizes = family.sizes();
    let mut count = 0;
    for tp in 1..=sizes[j - 1] as u32 {
        for sp in 1..=sizes[i - 1] as u32 {
            let lhs = normalize(family, &[(i, s), (j, tp)]).unwrap();
            let rhs = normalize(family, &[(j, t), (i, sp)]).unwrap();
            if lhs == rhs {
                count += 1;
            }
        }
    }
    count
}

/// Number of `(s, t)` with `e^i_s e^j_t' = e^j_t e^i_s'` for fixed
/// trailing letters `t'`, `s'`.
pub fn pushout_fibre(family: &Arc<ThetaFamily>, i: usize, sp: u32, j: usize, tp: u32) -> usize {
    let sizes = family.sizes();
    let mut count = 0;
    for s in 1..=sizes[i - 1] as u32 {
        for t in 1..=sizes[j - 1] as u32 {
            let lhs = normalize(family, &[(i, s), (j, tp)]).unwrap();
            let rhs = normalize(family, &[(j, t), (i, sp)]).unwrap();
            if lhs == rhs {
                count += 1;
            }
        }
    }
    count
}

/// Words over a family of total length `n`, as letter lists in every colour
/// order.
pub fn all_letter_words(sizes: &[usize], n: usize) -> Vec<Vec<Letter>> {
    let letters: Vec<Letter> = sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &s)| (1..=s as u32).map(move |x| (c + 1, x)))
        .collect();
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<Letter>| {
                letters.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

/// Binomial coefficient for small arguments.
pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every YBE solution on `[2]` and `[3]`, plus the larger catalog members.
pub fn solution_pool() -> &'static [Solution] {
    static POOL: std::sync::OnceLock<Vec<Solution>> = std::sync::OnceLock::new();
    POOL.get_or_init(|| {
        let mut pool = ybk::classify::enumerate_solutions(2).unwrap();
        pool.extend(ybk::classify::enumerate_solutions(3).unwrap());
        for n in [4, 5] {
            for name in ["identity", "flip", "double_shift", "shift", "dihedral"] {
                pool.push(ybk::builtin(name, n).unwrap());
            }
        }
        pool
    })
}
