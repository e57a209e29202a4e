//! Exhaustive enumeration of small solutions and their classification up to
//! product conjugacy and YB-isomorphism.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use petgraph::unionfind::UnionFind;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::growth;
use crate::solution::{PropertyReport, Solution};

/// Largest size for which exhaustive enumeration is attempted.
pub const MAX_EXHAUSTIVE_SIZE: usize = 3;

/// Length of the growth prefix used to prune YB-isomorphism tests.
const GROWTH_PREFIX: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    /// `R o (tau x rho) = (tau x rho) o theta`.
    Conjugacy,
    /// `(phi x phi) o R_X = R_Y o (phi x phi)`.
    YbIso,
}

impl Relation {
    pub fn parse(s: &str) -> Result<Relation> {
        match s {
            "conjugacy" | "product-conjugacy" => Ok(Relation::Conjugacy),
            "yb-iso" | "yb_iso" | "iso" => Ok(Relation::YbIso),
            _ => Err(Error::InvalidParams(format!("unknown relation `{s}`"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Relation::Conjugacy => "conjugacy",
            Relation::YbIso => "yb-iso",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// In-place lexicographic successor; false once the last permutation is passed.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn table_is_ybe(n: usize, table: &[(u32, u32)]) -> bool {
    let r = |x: u32, y: u32| table[(x as usize - 1) * n + (y as usize - 1)];
    let n = n as u32;
    for x in 1..=n {
        for y in 1..=n {
            let (a1, b1) = r(x, y);
            for z in 1..=n {
                // R12 R23 R12 and R23 R12 R23 on (x, y, z)
                let (b2, c1) = r(b1, z);
                let (a2, b3) = r(a1, b2);
                let (q1, r1) = r(y, z);
                let (p1, q2) = r(x, q1);
                let (q3, r2) = r(q2, r1);
                if (a2, b3, c1) != (p1, q3, r2) {
                    return false;
                }
            }
        }
    }
    true
}

fn all_pairs(n: usize) -> Vec<(u32, u32)> {
    (1..=n as u32).cartesian_product(1..=n as u32).collect()
}

/// All YBE solutions on `[n]`, in lexicographic order of their tables.
pub fn enumerate_solutions(n: usize) -> Result<Vec<Solution>> {
    if n == 0 {
        return Err(Error::EmptySet);
    }
    if n > MAX_EXHAUSTIVE_SIZE {
        return Err(Error::SizeTooLarge(n));
    }
    let mut table = all_pairs(n);
    let mut out = Vec::new();
    loop {
        if table_is_ybe(n, &table) {
            out.push(Solution::new(n, table.clone()).expect("permutation tables are bijections"));
        }
        if !next_permutation(&mut table) {
            return Ok(out);
        }
    }
}

/// `(n^2)!`, the number of bijections of `[n]^2`.
pub fn bijection_count(n: usize) -> u128 {
    (1..=(n * n) as u128).product()
}

/// Random bijections on `[n]^2` from a seeded generator.
pub fn random_bijections(n: usize, count: usize, seed: u64) -> Vec<Solution> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut table = all_pairs(n);
            table.shuffle(&mut rng);
            Solution::new(n, table).expect("shuffled tables are bijections")
        })
        .collect()
}

/// YBE solutions among `samples` seeded random bijections, deduplicated and
/// sorted. This is not an exhaustive census.
pub fn sample_solutions(n: usize, samples: usize, seed: u64) -> Result<Vec<Solution>> {
    if n == 0 {
        return Err(Error::EmptySet);
    }
    let mut found: Vec<Solution> = random_bijections(n, samples, seed)
        .into_iter()
        .filter(Solution::is_ybe)
        .collect();
    found.sort_by(|a, b| a.table().cmp(b.table()));
    found.dedup();
    Ok(found)
}

/// Permutations of `[n]` in one-line notation, lexicographic order.
fn permutations(n: usize) -> impl Iterator<Item = Vec<u32>> {
    (1..=n as u32).permutations(n)
}

fn check_sizes(a: &Solution, b: &Solution) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    Ok(())
}

/// Whether `B o (tau x rho) = (tau x rho) o A`.
pub fn is_conjugacy_witness(a: &Solution, b: &Solution, tau: &[u32], rho: &[u32]) -> bool {
    let t = |x: u32| tau[x as usize - 1];
    let r = |x: u32| rho[x as usize - 1];
    a.size() == b.size()
        && a.pairs().all(|(x, y)| {
            let (u, v) = a.apply(x, y);
            b.apply(t(x), r(y)) == (t(u), r(v))
        })
}

/// Whether `(phi x phi) o A = B o (phi x phi)`.
pub fn is_iso_witness(a: &Solution, b: &Solution, phi: &[u32]) -> bool {
    is_conjugacy_witness(a, b, phi, phi)
}

/// The least `(tau, rho)` with `B o (tau x rho) = (tau x rho) o A`.
pub fn product_conjugate(a: &Solution, b: &Solution) -> Result<Option<(Vec<u32>, Vec<u32>)>> {
    check_sizes(a, b)?;
    let n = a.size();
    for tau in permutations(n) {
        for rho in permutations(n) {
            if is_conjugacy_witness(a, b, &tau, &rho) {
                return Ok(Some((tau, rho)));
            }
        }
    }
    Ok(None)
}

/// The least `phi` with `(phi x phi) o A = B o (phi x phi)`.
pub fn yb_isomorphic(a: &Solution, b: &Solution) -> Result<Option<Vec<u32>>> {
    check_sizes(a, b)?;
    Ok(permutations(a.size()).find(|phi| is_iso_witness(a, b, phi)))
}

/// Cycle type of `R` as a permutation of `[N]^2`, invariant under both
/// relations since each conjugates one permutation into the other.
fn cycle_type(r: &Solution) -> Vec<usize> {
    let n = r.size();
    let mut seen = vec![false; n * n];
    let mut lengths = Vec::new();
    for (x, y) in r.pairs() {
        let mut p = (x, y);
        let mut len = 0;
        while !seen[(p.0 as usize - 1) * n + (p.1 as usize - 1)] {
            seen[(p.0 as usize - 1) * n + (p.1 as usize - 1)] = true;
            p = r.apply(p.0, p.1);
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    lengths.sort_unstable();
    lengths
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Fingerprint {
    Conjugacy(Vec<usize>),
    Iso([bool; 7], Vec<usize>, Vec<usize>),
}

fn fingerprint(r: &Solution, relation: Relation) -> Result<Fingerprint> {
    Ok(match relation {
        Relation::Conjugacy => Fingerprint::Conjugacy(cycle_type(r)),
        Relation::YbIso => Fingerprint::Iso(
            r.properties().flags(),
            cycle_type(r),
            growth(r, GROWTH_PREFIX)?,
        ),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionClass {
    /// Indices into the census solution list, ascending; the first is the
    /// lexicographically least table.
    pub members: Vec<usize>,
    /// Properties of the representative.
    pub properties: PropertyReport,
    /// Whether every member shares the representative's property flags.
    pub uniform_flags: bool,
}

impl SolutionClass {
    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionCensus {
    pub size: usize,
    /// `(N^2)!` for exhaustive censuses, otherwise the number of samples drawn.
    pub total_bijections: Option<u128>,
    pub exhaustive: bool,
    pub relation: Relation,
    /// Sorted by table.
    pub solutions: Vec<Solution>,
    /// Ordered by representative.
    pub classes: Vec<SolutionClass>,
}

/// Partitions solutions of one size under `relation`.
pub fn classify(solutions: &[Solution], relation: Relation) -> Result<SolutionCensus> {
    let size = solutions.first().map_or(0, Solution::size);
    if let Some(bad) = solutions.iter().find(|s| s.size() != size) {
        return Err(Error::SizeMismatch(size, bad.size()));
    }
    let mut sorted = solutions.to_vec();
    sorted.sort_by(|a, b| a.table().cmp(b.table()));
    sorted.dedup();

    let mut groups: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
    for (i, s) in sorted.iter().enumerate() {
        groups.entry(fingerprint(s, relation)?).or_default().push(i);
    }
    let mut uf = UnionFind::<usize>::new(sorted.len());
    for members in groups.values() {
        for (p, &i) in members.iter().enumerate() {
            for &j in &members[..p] {
                if uf.equiv(i, j) {
                    continue;
                }
                let related = match relation {
                    Relation::Conjugacy => product_conjugate(&sorted[j], &sorted[i])?.is_some(),
                    Relation::YbIso => yb_isomorphic(&sorted[j], &sorted[i])?.is_some(),
                };
                if related {
                    uf.union(i, j);
                }
            }
        }
    }
    let mut by_root: HashMap<usize, usize> = HashMap::new();
    let mut member_lists: Vec<Vec<usize>> = Vec::new();
    for i in 0..sorted.len() {
        let slot = *by_root.entry(uf.find(i)).or_insert_with(|| {
            member_lists.push(Vec::new());
            member_lists.len() - 1
        });
        member_lists[slot].push(i);
    }
    let classes = member_lists
        .into_iter()
        .map(|members| {
            let properties = sorted[members[0]].properties();
            let flags = properties.flags();
            let uniform_flags = members
                .iter()
                .all(|&m| sorted[m].properties().flags() == flags);
            SolutionClass {
                members,
                properties,
                uniform_flags,
            }
        })
        .collect();
    Ok(SolutionCensus {
        size,
        total_bijections: None,
        exhaustive: false,
        relation,
        solutions: sorted,
        classes,
    })
}

/// Exhaustive census of `[n]` under `relation`.
pub fn census(n: usize, relation: Relation) -> Result<SolutionCensus> {
    let solutions = enumerate_solutions(n)?;
    let mut c = classify(&solutions, relation)?;
    c.size = n;
    c.total_bijections = Some(bijection_count(n));
    c.exhaustive = true;
    Ok(c)
}

/// Census of the YBE solutions found among seeded random bijections.
pub fn sampled_census(
    n: usize,
    samples: usize,
    seed: u64,
    relation: Relation,
) -> Result<SolutionCensus> {
    let solutions = sample_solutions(n, samples, seed)?;
    let mut c = classify(&solutions, relation)?;
    c.size = n;
    c.total_bijections = Some(samples as u128);
    c.exhaustive = false;
    Ok(c)
}
