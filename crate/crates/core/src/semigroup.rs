//! The YB-semigroup `G_R^+`, graded by word length.
//!
//! Every relation `xy = y'x'` preserves length, so each graded piece is the
//! quotient of `[N]^n` by the equivalence generated by applying `R` at a
//! single position. Classes are found with union-find over those edges.

use std::collections::HashMap;
use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::constructions::{level_map, LevelMap};
use crate::error::{Error, Result};
use crate::solution::Solution;
use crate::words::{self, checked_power, word_limit};

/// The length-`n` piece of `G_R^+`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClassSet {
    size: usize,
    length: usize,
    /// Class id of each word, indexed by zero-based word index.
    class_of: Vec<u32>,
    /// Zero-based index of the lexicographically least word of each class.
    reps: Vec<usize>,
}

impl GradedClassSet {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn word_count(&self) -> usize {
        self.class_of.len()
    }

    /// Class ids are numbered in increasing order of representatives.
    pub fn class_of(&self, word: &[u32]) -> usize {
        self.class_of[words::index_of(word, self.size)] as usize
    }

    pub fn class_of_index(&self, idx: usize) -> usize {
        self.class_of[idx] as usize
    }

    pub fn representative(&self, class: usize) -> Vec<u32> {
        let mut out = vec![0; self.length];
        words::word_at(self.reps[class], self.size, &mut out);
        out
    }

    /// Members of a class in lexicographic order.
    pub fn members(&self, class: usize) -> Vec<Vec<u32>> {
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c as usize == class)
            .map(|(idx, _)| {
                let mut w = vec![0; self.length];
                words::word_at(idx, self.size, &mut w);
                w
            })
            .collect()
    }

    /// All classes as member lists, ordered by representative.
    pub fn classes(&self) -> Vec<Vec<Vec<u32>>> {
        let mut out = vec![Vec::new(); self.class_count()];
        let mut w = vec![0; self.length];
        for (idx, &c) in self.class_of.iter().enumerate() {
            words::word_at(idx, self.size, &mut w);
            out[c as usize].push(w.clone());
        }
        out
    }
}

pub fn graded_elements(r: &Solution, n: usize) -> Result<GradedClassSet> {
    let size = r.size();
    let count = checked_power(size, n, word_limit())?;
    let mut uf = UnionFind::<usize>::new(count);
    let mut w = vec![0u32; n];
    for idx in 0..count {
        for p in 0..n.saturating_sub(1) {
            words::word_at(idx, size, &mut w);
            r.apply_leg_in_place(p, &mut w);
            uf.union(idx, words::index_of(&w, size));
        }
    }
    let mut id_of_root: HashMap<usize, u32> = HashMap::new();
    let mut class_of = Vec::with_capacity(count);
    let mut reps = Vec::new();
    for idx in 0..count {
        let root = uf.find(idx);
        let id = *id_of_root.entry(root).or_insert_with(|| {
            reps.push(idx);
            reps.len() as u32 - 1
        });
        class_of.push(id);
    }
    Ok(GradedClassSet {
        size,
        length: n,
        class_of,
        reps,
    })
}

/// `growth[n]` is the number of elements of length `n`, for `n <= maxlen`.
pub fn growth(r: &Solution, maxlen: usize) -> Result<Vec<usize>> {
    (0..=maxlen)
        .map(|n| graded_elements(r, n).map(|g| g.class_count()))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// `[a][b] = [a][c]` (or `[b][a] = [c][a]`) with `[b] != [c]`, given by
/// class representatives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CancelWitness {
    pub side: Side,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
}

/// Checks left and right cancellation for all classes `a, b, c` with
/// `|a| + |b| <= maxlen`. Returns the first failure.
pub fn check_cancellative(r: &Solution, maxlen: usize) -> Result<Option<CancelWitness>> {
    let graded: Vec<GradedClassSet> = (0..=maxlen)
        .map(|n| graded_elements(r, n))
        .collect::<Result<_>>()?;
    for total in 2..=maxlen {
        let product = &graded[total];
        for la in 1..total {
            let lb = total - la;
            let (ga, gb) = (&graded[la], &graded[lb]);
            for side in [Side::Left, Side::Right] {
                for a in 0..ga.class_count() {
                    let ra = ga.representative(a);
                    let mut seen: HashMap<usize, usize> = HashMap::new();
                    for b in 0..gb.class_count() {
                        let rb = gb.representative(b);
                        let word = match side {
                            Side::Left => [ra.as_slice(), &rb].concat(),
                            Side::Right => [rb.as_slice(), &ra].concat(),
                        };
                        let class = product.class_of(&word);
                        if let Some(&prev) = seen.get(&class) {
                            return Ok(Some(CancelWitness {
                                side,
                                a: ra,
                                b: gb.representative(prev),
                                c: rb,
                            }));
                        }
                        seen.insert(class, b);
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Generator and relation lists for `G_R^+` and `G_R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentations {
    pub generators: Vec<String>,
    /// Each chain lists the words `w, R(w), R^2(w), ...` of one nontrivial
    /// `R`-orbit on `[N]^2`, starting from its least word.
    pub relations: Vec<Vec<String>>,
    pub semigroup: String,
    pub group: String,
}

pub fn presentations(r: &Solution) -> Presentations {
    let n = r.size();
    let letter = |x: u32| format!("e{x}");
    let word = |x: u32, y: u32| {
        if n < 10 {
            format!("e{x}e{y}")
        } else {
            format!("e{x} e{y}")
        }
    };
    let generators: Vec<String> = (1..=n as u32).map(letter).collect();
    let mut visited = vec![false; n * n];
    let mut relations = Vec::new();
    for (x, y) in r.pairs() {
        let idx = (x as usize - 1) * n + (y as usize - 1);
        if visited[idx] {
            continue;
        }
        let mut chain = Vec::new();
        let (mut a, mut b) = (x, y);
        loop {
            visited[(a as usize - 1) * n + (b as usize - 1)] = true;
            chain.push(word(a, b));
            (a, b) = r.apply(a, b);
            if (a, b) == (x, y) {
                break;
            }
        }
        if chain.len() > 1 {
            relations.push(chain);
        }
    }
    let joined = relations
        .iter()
        .map(|c| c.join("="))
        .collect::<Vec<_>>()
        .join(", ");
    let gens = generators.join(", ");
    let body = if joined.is_empty() {
        gens.clone()
    } else {
        format!("{gens} | {joined}")
    };
    let mut semigroup = String::new();
    let mut group = String::new();
    let _ = write!(semigroup, "G_R^+ = <{body}> (monoid)");
    let _ = write!(group, "G_R = <{body}> (group)");
    Presentations {
        generators,
        relations,
        semigroup,
        group,
    }
}

/// How the extension of `R` to `G_R^+` can fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ExtensionWitness {
    /// The braid relation fails on `(u, v, w)`.
    Braid {
        u: Vec<u32>,
        v: Vec<u32>,
        w: Vec<u32>,
    },
    /// `u ~ u2` but `R~(u, v)` and `R~(u2, v)` land in different classes
    /// (or dually for the second argument).
    NotWellDefined {
        first: (Vec<u32>, Vec<u32>),
        second: (Vec<u32>, Vec<u32>),
    },
    /// A unit rule fails.
    Unit { x: Vec<u32> },
}

struct Extension<'a> {
    r: &'a Solution,
    maps: HashMap<(usize, usize), LevelMap>,
}

impl Extension<'_> {
    fn new(r: &Solution, maxlen: usize) -> Result<Extension<'_>> {
        let mut maps = HashMap::new();
        for l in 1..maxlen {
            for m in 1..=maxlen - l {
                maps.insert((l, m), level_map(r, l, m)?);
            }
        }
        Ok(Extension { r, maps })
    }

    /// `R~(u, v) = (v', u')`, with the unit rules on empty words.
    fn apply(&self, u: &[u32], v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        if u.is_empty() || v.is_empty() {
            return (v.to_vec(), u.to_vec());
        }
        if u.len() == 1 && v.len() == 1 {
            let (a, b) = self.r.apply(u[0], v[0]);
            return (vec![a], vec![b]);
        }
        self.maps[&(u.len(), v.len())].apply(u, v)
    }
}

/// Verifies that the level maps extend `R` to a braided map on `G_R^+`
/// for all graded triples of total length at most `maxlen`.
pub fn semigroup_extension_check(r: &Solution, maxlen: usize) -> Result<Option<ExtensionWitness>> {
    r.require_ybe()?;
    let ext = Extension::new(r, maxlen)?;
    let size = r.size();
    let all_words = |len: usize| -> Result<Vec<Vec<u32>>> {
        let count = checked_power(size, len, word_limit())?;
        Ok((0..count)
            .map(|idx| {
                let mut w = vec![0; len];
                words::word_at(idx, size, &mut w);
                w
            })
            .collect())
    };
    let pieces: Vec<Vec<Vec<u32>>> = (0..=maxlen).map(all_words).collect::<Result<_>>()?;

    for len in 0..=maxlen {
        for x in &pieces[len] {
            if ext.apply(x, &[]) != (vec![], x.clone()) || ext.apply(&[], x) != (x.clone(), vec![])
            {
                return Ok(Some(ExtensionWitness::Unit { x: x.clone() }));
            }
        }
    }

    for total in 0..=maxlen {
        for l in 0..=total {
            for m in 0..=total - l {
                let n = total - l - m;
                for u in &pieces[l] {
                    for v in &pieces[m] {
                        for w in &pieces[n] {
                            // R12 R23 R12
                            let (v1, u1) = ext.apply(u, v);
                            let (w1, u2) = ext.apply(&u1, w);
                            let (w2, v2) = ext.apply(&v1, &w1);
                            let lhs = (w2, v2, u2);
                            // R23 R12 R23
                            let (w1, v1) = ext.apply(v, w);
                            let (w2, u1) = ext.apply(u, &w1);
                            let (v2, u2) = ext.apply(&u1, &v1);
                            if lhs != (w2, v2, u2) {
                                return Ok(Some(ExtensionWitness::Braid {
                                    u: u.clone(),
                                    v: v.clone(),
                                    w: w.clone(),
                                }));
                            }
                        }
                    }
                }
            }
        }
    }

    let graded: Vec<GradedClassSet> = (0..=maxlen)
        .map(|n| graded_elements(r, n))
        .collect::<Result<_>>()?;
    for l in 1..maxlen {
        for m in 1..=maxlen - l {
            let (gl, gm) = (&graded[l], &graded[m]);
            let mut image: HashMap<(usize, usize), (usize, usize, &[u32], &[u32])> = HashMap::new();
            for u in &pieces[l] {
                for v in &pieces[m] {
                    let (v2, u2) = ext.apply(u, v);
                    let key = (gl.class_of(u), gm.class_of(v));
                    let out = (gm.class_of(&v2), gl.class_of(&u2));
                    match image.get(&key) {
                        Some(&(a, b, pu, pv)) if (a, b) != out => {
                            return Ok(Some(ExtensionWitness::NotWellDefined {
                                first: (pu.to_vec(), pv.to_vec()),
                                second: (u.clone(), v.clone()),
                            }));
                        }
                        Some(_) => {}
                        None => {
                            image.insert(key, (out.0, out.1, u, v));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `alpha_{w}(y) = alpha_{w_1} ... alpha_{w_n}(y)`.
fn alpha_word(r: &Solution, w: &[u32], y: u32) -> u32 {
    w.iter().rev().fold(y, |acc, &x| r.alpha(x, acc))
}

/// `beta_y(x_1 ... x_n)`, a word of the same length.
fn beta_word(r: &Solution, y: u32, x: &[u32]) -> Vec<u32> {
    let n = x.len();
    let mut out = Vec::with_capacity(n);
    for i in 2..=n {
        out.push(r.beta(alpha_word(r, &x[i - 1..], y), x[i - 2]));
    }
    out.push(r.beta(y, x[n - 1]));
    out
}

/// Compares the first block of `R^{n,n}(x, y)` with the letters
/// `h_i = alpha_{beta_{y_1 ... y_{i-1}}(x)}(y_i)` and the second block with
/// `beta_{y_1 ... y_n}(x)`. Returns the first mismatching pair.
pub fn action_formula_check(r: &Solution, n: usize) -> Result<Option<(Vec<u32>, Vec<u32>)>> {
    if !r.is_ybe() || !r.is_non_degenerate() {
        return Err(Error::PreconditionFailed(
            "action formulas need a non-degenerate YBE solution".into(),
        ));
    }
    let lm = level_map(r, n, n)?;
    let size = r.size();
    let count = checked_power(size, n, word_limit())?;
    let mut x = vec![0u32; n];
    let mut y = vec![0u32; n];
    for xi in 0..count {
        for yi in 0..count {
            words::word_at(xi, size, &mut x);
            words::word_at(yi, size, &mut y);
            let mut h = Vec::with_capacity(n);
            let mut acted = x.clone();
            for &letter in &y {
                h.push(alpha_word(r, &acted, letter));
                acted = beta_word(r, letter, &acted);
            }
            if lm.apply(&x, &y) != (h, acted) {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}
