//! Single-vertex k-graphs presented by families of commutation bijections.
//!
//! A family `theta = {theta_ij : [N_i] x [N_j] -> [N_j] x [N_i]}` for
//! `1 <= i < j <= k` imposes `e^i_s e^j_t = e^j_{t'} e^i_{s'}` whenever
//! `theta_ij(s, t) = (t', s')`. It defines a k-graph exactly when the flipped
//! maps satisfy the generalized QYBE on every colour triple, in which case
//! every element has a unique colour-sorted normal form
//! `e^1_{u_1} ... e^k_{u_k}`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::constructions::level_map_with_limit;
use crate::error::{Error, Result};
use crate::solution::Solution;
use crate::words::word_limit;

/// A bijection `[N_i] x [N_j] -> [N_j] x [N_i]`, row-major by `(s, t)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ThetaMap {
    left: usize,
    right: usize,
    table: Vec<(u32, u32)>,
    inverse: Vec<(u32, u32)>,
}

impl fmt::Debug for ThetaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ThetaMap")
            .field("left", &self.left)
            .field("right", &self.right)
            .field("table", &self.table)
            .finish()
    }
}

impl ThetaMap {
    pub fn new(left: usize, right: usize, table: Vec<(u32, u32)>) -> Result<Self> {
        if left == 0 || right == 0 {
            return Err(Error::EmptySet);
        }
        let n = left * right;
        if table.len() != n {
            return Err(Error::WrongTableLength {
                expected: n,
                found: table.len(),
            });
        }
        let mut inverse = vec![(0u32, 0u32); n];
        for (idx, &(t, s)) in table.iter().enumerate() {
            if t == 0 || t as usize > right {
                return Err(Error::OutOfRange {
                    index: idx,
                    value: t,
                    bound: right,
                });
            }
            if s == 0 || s as usize > left {
                return Err(Error::OutOfRange {
                    index: idx,
                    value: s,
                    bound: left,
                });
            }
            let preimage = ((idx / right) as u32 + 1, (idx % right) as u32 + 1);
            let slot = &mut inverse[(t as usize - 1) * left + (s as usize - 1)];
            if slot.0 != 0 {
                return Err(Error::NotABijection {
                    first: *slot,
                    second: preimage,
                    image: (t, s),
                });
            }
            *slot = preimage;
        }
        Ok(ThetaMap {
            left,
            right,
            table,
            inverse,
        })
    }

    pub fn from_fn(left: usize, right: usize, f: impl Fn(u32, u32) -> (u32, u32)) -> Result<Self> {
        let mut table = Vec::with_capacity(left * right);
        for s in 1..=left as u32 {
            for t in 1..=right as u32 {
                table.push(f(s, t));
            }
        }
        ThetaMap::new(left, right, table)
    }

    pub fn from_solution(r: &Solution) -> ThetaMap {
        ThetaMap::new(r.size(), r.size(), r.table().to_vec()).expect("solutions are bijections")
    }

    /// `N_i`, the size of the first input coordinate.
    pub fn left_size(&self) -> usize {
        self.left
    }

    /// `N_j`, the size of the second input coordinate.
    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn table(&self) -> &[(u32, u32)] {
        &self.table
    }

    /// `theta(s, t) = (t', s')`.
    #[inline]
    pub fn apply(&self, s: u32, t: u32) -> (u32, u32) {
        self.table[(s as usize - 1) * self.right + (t as usize - 1)]
    }

    /// `theta^{-1}(t', s') = (s, t)`.
    #[inline]
    pub fn invert(&self, t: u32, s: u32) -> (u32, u32) {
        self.inverse[(t as usize - 1) * self.left + (s as usize - 1)]
    }

    /// The flipped map `sigma theta` on `[N_i] x [N_j]`.
    #[inline]
    fn flipped(&self, s: u32, t: u32) -> (u32, u32) {
        let (t2, s2) = self.apply(s, t);
        (s2, t2)
    }
}

/// Where the generalized QYBE fails: colours `i < j < l` and a point of
/// `[N_i] x [N_j] x [N_l]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TripleWitness {
    pub colours: [usize; 3],
    pub point: [u32; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaFamily {
    sizes: Vec<usize>,
    maps: Vec<ThetaMap>,
    failure: Option<TripleWitness>,
}

fn pair_index(k: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= k);
    (i - 1) * (2 * k - i) / 2 + (j - i - 1)
}

impl ThetaFamily {
    /// Builds a family from maps listed in pair order
    /// `(1,2), (1,3), ..., (1,k), (2,3), ..., (k-1,k)`.
    pub fn new(sizes: Vec<usize>, maps: Vec<ThetaMap>) -> Result<Self> {
        let k = sizes.len();
        if k < 2 {
            return Err(Error::InvalidParams(format!(
                "k must be at least 2, got {k}"
            )));
        }
        if sizes.contains(&0) {
            return Err(Error::EmptySet);
        }
        if maps.len() != k * (k - 1) / 2 {
            return Err(Error::InvalidParams(format!(
                "expected {} maps for k = {k}, got {}",
                k * (k - 1) / 2,
                maps.len()
            )));
        }
        for i in 1..=k {
            for j in i + 1..=k {
                let m = &maps[pair_index(k, i, j)];
                if m.left != sizes[i - 1] || m.right != sizes[j - 1] {
                    return Err(Error::InvalidParams(format!(
                        "map ({i},{j}) has shape {}x{}, expected {}x{}",
                        m.left,
                        m.right,
                        sizes[i - 1],
                        sizes[j - 1]
                    )));
                }
            }
        }
        let mut family = ThetaFamily {
            sizes,
            maps,
            failure: None,
        };
        family.failure = family.find_failure();
        Ok(family)
    }

    /// Builds a family from raw tables in pair order.
    pub fn from_tables(sizes: Vec<usize>, tables: Vec<Vec<(u32, u32)>>) -> Result<Self> {
        let k = sizes.len();
        let mut maps = Vec::with_capacity(tables.len());
        let mut it = tables.into_iter();
        for i in 1..=k {
            for j in i + 1..=k {
                let table = it
                    .next()
                    .ok_or_else(|| Error::InvalidParams(format!("missing map ({i},{j})")))?;
                maps.push(ThetaMap::new(sizes[i - 1], sizes[j - 1], table)?);
            }
        }
        if it.next().is_some() {
            return Err(Error::InvalidParams("too many maps".into()));
        }
        ThetaFamily::new(sizes, maps)
    }

    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn maps(&self) -> &[ThetaMap] {
        &self.maps
    }

    /// `theta_ij` for `1 <= i < j <= k`.
    pub fn map(&self, i: usize, j: usize) -> &ThetaMap {
        &self.maps[pair_index(self.k(), i, j)]
    }

    fn find_failure(&self) -> Option<TripleWitness> {
        let k = self.k();
        for i in 1..=k {
            for j in i + 1..=k {
                for l in j + 1..=k {
                    let (ij, il, jl) = (self.map(i, j), self.map(i, l), self.map(j, l));
                    for a in 1..=self.sizes[i - 1] as u32 {
                        for b in 1..=self.sizes[j - 1] as u32 {
                            for c in 1..=self.sizes[l - 1] as u32 {
                                // vartheta_ij vartheta_il vartheta_jl, rightmost first
                                let (b1, c1) = jl.flipped(b, c);
                                let (a1, c2) = il.flipped(a, c1);
                                let (a2, b2) = ij.flipped(a1, b1);
                                let lhs = (a2, b2, c2);
                                let (a1, b1) = ij.flipped(a, b);
                                let (a2, c1) = il.flipped(a1, c);
                                let (b2, c2) = jl.flipped(b1, c1);
                                if lhs != (a2, b2, c2) {
                                    return Some(TripleWitness {
                                        colours: [i, j, l],
                                        point: [a, b, c],
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Whether the family defines a single-vertex k-graph, with the least
    /// failing triple otherwise.
    pub fn validate(&self) -> std::result::Result<(), TripleWitness> {
        match self.failure {
            None => Ok(()),
            Some(w) => Err(w),
        }
    }

    pub fn is_kgraph(&self) -> bool {
        self.failure.is_none()
    }

    fn require_normal_forms(&self) -> Result<()> {
        if self.k() == 2 || self.is_kgraph() {
            Ok(())
        } else {
            Err(Error::InvalidFamily)
        }
    }

    /// Rewrites the adjacent pair `e^{c1}_x e^{c2}_y` (`c1 != c2`) as
    /// `e^{c2}_{y'} e^{c1}_{x'}` and returns `(y', x')`.
    #[inline]
    fn swap(&self, c1: usize, x: u32, c2: usize, y: u32) -> (u32, u32) {
        if c1 < c2 {
            self.map(c1, c2).apply(x, y)
        } else {
            self.map(c2, c1).invert(x, y)
        }
    }

    fn check_letter(&self, (c, x): Letter) -> Result<()> {
        if c == 0 || c > self.k() {
            return Err(Error::InvalidLetter(format!(
                "colour {c} is outside [1, {}]",
                self.k()
            )));
        }
        if x == 0 || x as usize > self.sizes[c - 1] {
            return Err(Error::InvalidLetter(format!(
                "letter {x} is outside [1, {}] for colour {c}",
                self.sizes[c - 1]
            )));
        }
        Ok(())
    }

    /// Sorts colours ascending by rewriting the leftmost out-of-order pair.
    fn sort_in_place(&self, word: &mut [Letter]) {
        // Insertion sort visits exactly the leftmost inversion at each step.
        for p in 1..word.len() {
            let mut q = p;
            while q > 0 && word[q - 1].0 > word[q].0 {
                let (c1, x) = word[q - 1];
                let (c2, y) = word[q];
                let (y2, x2) = self.swap(c1, x, c2, y);
                word[q - 1] = (c2, y2);
                word[q] = (c1, x2);
                q -= 1;
            }
        }
    }

    /// Rearranges `word` so its colour sequence equals `target`, which must be
    /// a rearrangement of the current colour multiset.
    fn reorder(&self, word: &mut [Letter], target: &[usize]) {
        for p in 0..target.len() {
            let q = (p..word.len())
                .find(|&q| word[q].0 == target[p])
                .expect("target is a rearrangement of the word's colours");
            for r in (p + 1..=q).rev() {
                let (c1, x) = word[r - 1];
                let (c2, y) = word[r];
                let (y2, x2) = self.swap(c1, x, c2, y);
                word[r - 1] = (c2, y2);
                word[r] = (c1, x2);
            }
        }
    }

    /// Counts of `F_theta^+` elements of each degree summed over `|d| = n`.
    pub fn count_of_length(&self, n: usize) -> u128 {
        fn go(sizes: &[usize], left: usize) -> u128 {
            match sizes.split_first() {
                None => u128::from(left == 0),
                Some((&s, rest)) => (0..=left)
                    .map(|d| (s as u128).pow(d as u32) * go(rest, left - d))
                    .sum(),
            }
        }
        go(&self.sizes, n)
    }
}

/// A letter `e^c_x` as `(colour, index)`, both 1-based.
pub type Letter = (usize, u32);

/// Element of `F_theta^+` in colour-sorted normal form.
#[derive(Clone)]
pub struct KWord {
    family: Arc<ThetaFamily>,
    letters: Vec<Letter>,
}

impl fmt::Debug for KWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KWord({self})")
    }
}

impl fmt::Display for KWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e_0");
        }
        for (i, (c, x)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}:{x}")?;
        }
        Ok(())
    }
}

impl PartialEq for KWord {
    fn eq(&self, other: &Self) -> bool {
        same_family(&self.family, &other.family) && self.letters == other.letters
    }
}

impl Eq for KWord {}

fn same_family(a: &Arc<ThetaFamily>, b: &Arc<ThetaFamily>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl KWord {
    pub fn empty(family: &Arc<ThetaFamily>) -> KWord {
        KWord {
            family: family.clone(),
            letters: Vec::new(),
        }
    }

    pub fn family(&self) -> &Arc<ThetaFamily> {
        &self.family
    }

    /// The normal form as a colour-sorted letter sequence.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The words `u_1, ..., u_k` of `e^1_{u_1} ... e^k_{u_k}`.
    pub fn blocks(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.family.k()];
        for &(c, x) in &self.letters {
            out[c - 1].push(x);
        }
        out
    }

    pub fn degree(&self) -> Vec<usize> {
        let mut d = vec![0; self.family.k()];
        for &(c, _) in &self.letters {
            d[c - 1] += 1;
        }
        d
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &KWord) -> Result<KWord> {
        if !same_family(&self.family, &other.family) {
            return Err(Error::FamilyMismatch);
        }
        let mut word = self.letters.clone();
        word.extend_from_slice(&other.letters);
        self.family.require_normal_forms()?;
        self.family.sort_in_place(&mut word);
        Ok(KWord {
            family: self.family.clone(),
            letters: word,
        })
    }

    /// The unique `(mu, nu)` with `mu nu = self` and `d(mu) = m`.
    pub fn factorize(&self, m: &[usize]) -> Result<(KWord, KWord)> {
        let d = self.degree();
        if m.len() != d.len() || m.iter().zip(&d).any(|(a, b)| a > b) {
            return Err(Error::DegreeOutOfRange {
                requested: m.to_vec(),
                available: d,
            });
        }
        self.family.require_normal_forms()?;
        let mut target = Vec::with_capacity(self.letters.len());
        for (c, &count) in m.iter().enumerate() {
            target.extend(std::iter::repeat_n(c + 1, count));
        }
        let split = target.len();
        for (c, (&total, &count)) in d.iter().zip(m).enumerate() {
            target.extend(std::iter::repeat_n(c + 1, total - count));
        }
        let mut word = self.letters.clone();
        self.family.reorder(&mut word, &target);
        let (head, tail) = word.split_at(split);
        Ok((
            KWord {
                family: self.family.clone(),
                letters: head.to_vec(),
            },
            KWord {
                family: self.family.clone(),
                letters: tail.to_vec(),
            },
        ))
    }

    fn with_letters(&self, letters: Vec<Letter>) -> KWord {
        KWord {
            family: self.family.clone(),
            letters,
        }
    }
}

/// Normal form of an arbitrary word of `(colour, letter)` pairs.
pub fn normalize(family: &Arc<ThetaFamily>, word: &[Letter]) -> Result<KWord> {
    for &letter in word {
        family.check_letter(letter)?;
    }
    family.require_normal_forms()?;
    let mut letters = word.to_vec();
    family.sort_in_place(&mut letters);
    Ok(KWord {
        family: family.clone(),
        letters,
    })
}

/// All elements of a given degree, in lexicographic order of their blocks.
pub fn words_of_degree(family: &Arc<ThetaFamily>, degree: &[usize]) -> Vec<KWord> {
    let mut colours = Vec::new();
    for (c, &n) in degree.iter().enumerate() {
        colours.extend(std::iter::repeat_n(c + 1, n));
    }
    let mut out = Vec::new();
    let mut current: Vec<Letter> = colours.iter().map(|&c| (c, 1)).collect();
    loop {
        out.push(KWord {
            family: family.clone(),
            letters: current.clone(),
        });
        // odometer increment from the right
        let mut p = current.len();
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            let (c, x) = current[p];
            if (x as usize) < family.sizes[c - 1] {
                current[p] = (c, x + 1);
                break;
            }
            current[p] = (c, 1);
        }
    }
}

/// `theta_ij = R` for every pair, `N_i = N`.
pub fn constant_family(r: &Solution, k: usize) -> Result<ThetaFamily> {
    if k < 2 {
        return Err(Error::InvalidParams(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let map = ThetaMap::from_solution(r);
    ThetaFamily::new(vec![r.size(); k], vec![map; k * (k - 1) / 2])
}

/// Recovers `R` from a constant family.
pub fn constant_solution(family: &ThetaFamily) -> Result<Solution> {
    let first = &family.maps[0];
    let n = family.sizes[0];
    if family.sizes.iter().any(|&s| s != n) || family.maps.iter().any(|m| m != first) {
        return Err(Error::NotConstantFamily);
    }
    Solution::new(n, first.table.clone())
}

/// The three-colour family `{R^{l,m}, R^{l,n}, R^{m,n}}` of a constant family.
pub fn restrict(family: &ThetaFamily, l: usize, m: usize, n: usize) -> Result<ThetaFamily> {
    let r = constant_solution(family)?;
    let lm = level_map_with_limit(&r, l, m, word_limit())?;
    let ln = level_map_with_limit(&r, l, n, word_limit())?;
    let mn = level_map_with_limit(&r, m, n, word_limit())?;
    let sizes = vec![
        lm.to_theta_map().left_size(),
        lm.to_theta_map().right_size(),
        ln.to_theta_map().right_size(),
    ];
    ThetaFamily::new(
        sizes,
        vec![lm.to_theta_map(), ln.to_theta_map(), mn.to_theta_map()],
    )
}

/// First colour pair and edge at which a unique pullback or pushout fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FiberWitness {
    pub i: usize,
    pub j: usize,
    pub s: u32,
    pub t: u32,
    pub count: usize,
}

/// For every `(e^i_s, e^j_t)`, `i != j`, exactly one `(t', s')` satisfies
/// `e^i_s e^j_{t'} = e^j_t e^i_{s'}`.
pub fn unique_pullback(family: &ThetaFamily) -> std::result::Result<(), FiberWitness> {
    fiber_check(family, |fam, i, j, s, t| {
        (1..=fam.sizes[j - 1] as u32)
            .filter(|&t2| fam.swap(i, s, j, t2).0 == t)
            .count()
    })
}

/// For every `(e^i_{s'}, e^j_{t'})`, `i != j`, exactly one `(t, s)` satisfies
/// `e^i_s e^j_{t'} = e^j_t e^i_{s'}`. Witness fields hold `(s', t')`.
pub fn unique_pushout(family: &ThetaFamily) -> std::result::Result<(), FiberWitness> {
    fiber_check(family, |fam, i, j, s2, t2| {
        (1..=fam.sizes[i - 1] as u32)
            .filter(|&s| fam.swap(i, s, j, t2).1 == s2)
            .count()
    })
}

fn fiber_check(
    family: &ThetaFamily,
    count: impl Fn(&ThetaFamily, usize, usize, u32, u32) -> usize,
) -> std::result::Result<(), FiberWitness> {
    let k = family.k();
    for i in 1..=k {
        for j in (1..=k).filter(|&j| j != i) {
            for s in 1..=family.sizes[i - 1] as u32 {
                for t in 1..=family.sizes[j - 1] as u32 {
                    let c = count(family, i, j, s, t);
                    if c != 1 {
                        return Err(FiberWitness {
                            i,
                            j,
                            s,
                            t,
                            count: c,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Given `mu`, `nu`, find `(mu~, nu~)` with `mu nu~ = nu mu~`.
    Pullback,
    /// Given `mu`, `nu`, find `(mu~, nu~)` with `mu~ nu = nu~ mu`.
    Pushout,
}

/// Completes a commuting diamond from two sides of disjoint degree.
pub fn complete_diamond(mu: &KWord, nu: &KWord, direction: Direction) -> Result<(KWord, KWord)> {
    if !same_family(&mu.family, &nu.family) {
        return Err(Error::FamilyMismatch);
    }
    let (dm, dn) = (mu.degree(), nu.degree());
    if dm.iter().zip(&dn).any(|(&a, &b)| a.min(b) > 0) {
        return Err(Error::DegreesOverlap(dm, dn));
    }
    let fam = &*mu.family;
    fam.require_normal_forms()?;
    let (mt, nt) = match direction {
        Direction::Pullback => {
            unique_pullback(fam).map_err(|_| Error::PropertyMissing("pullback"))?;
            pullback_rec(fam, &mu.letters, &nu.letters)
        }
        Direction::Pushout => {
            unique_pushout(fam).map_err(|_| Error::PropertyMissing("pushout"))?;
            pushout_rec(fam, &mu.letters, &nu.letters)
        }
    };
    let mut mt = mt;
    let mut nt = nt;
    fam.sort_in_place(&mut mt);
    fam.sort_in_place(&mut nt);
    Ok((mu.with_letters(mt), mu.with_letters(nt)))
}

/// Returns `(mu~, nu~)` with `mu nu~ = nu mu~`.
fn pullback_rec(fam: &ThetaFamily, mu: &[Letter], nu: &[Letter]) -> (Vec<Letter>, Vec<Letter>) {
    if nu.is_empty() || mu.is_empty() {
        return (mu.to_vec(), nu.to_vec());
    }
    if nu.len() > 1 {
        // nu = nu2 nu1 with nu2 a single edge
        let (nu2, nu1) = nu.split_at(1);
        let (mu1, nu2t) = pullback_rec(fam, mu, nu2);
        let (mu2, nu1t) = pullback_rec(fam, &mu1, nu1);
        return (mu2, [nu2t, nu1t].concat());
    }
    if mu.len() > 1 {
        let (mu1, mu2) = mu.split_at(1);
        let (mu1t, nu1) = pullback_rec(fam, mu1, nu);
        let (mu2t, nu2) = pullback_rec(fam, mu2, &nu1);
        return ([mu1t, mu2t].concat(), nu2);
    }
    let (i, s) = mu[0];
    let (j, t) = nu[0];
    let t2 = (1..=fam.sizes[j - 1] as u32)
        .find(|&t2| fam.swap(i, s, j, t2).0 == t)
        .expect("unique pullback property");
    let s2 = fam.swap(i, s, j, t2).1;
    (vec![(i, s2)], vec![(j, t2)])
}

/// Returns `(mu~, nu~)` with `mu~ nu = nu~ mu`.
fn pushout_rec(fam: &ThetaFamily, mu: &[Letter], nu: &[Letter]) -> (Vec<Letter>, Vec<Letter>) {
    if nu.is_empty() || mu.is_empty() {
        return (mu.to_vec(), nu.to_vec());
    }
    if nu.len() > 1 {
        let (nua, nub) = nu.split_at(nu.len() - 1);
        let (mu1, nubt) = pushout_rec(fam, mu, nub);
        let (mu2, nuat) = pushout_rec(fam, &mu1, nua);
        return (mu2, [nuat, nubt].concat());
    }
    if mu.len() > 1 {
        let (mua, mub) = mu.split_at(mu.len() - 1);
        let (mubt, nu1) = pushout_rec(fam, mub, nu);
        let (muat, nu2) = pushout_rec(fam, mua, &nu1);
        return ([muat, mubt].concat(), nu2);
    }
    let (i, s2) = mu[0];
    let (j, t2) = nu[0];
    let s = (1..=fam.sizes[i - 1] as u32)
        .find(|&s| fam.swap(i, s, j, t2).1 == s2)
        .expect("unique pushout property");
    let t = fam.swap(i, s, j, t2).0;
    (vec![(i, s)], vec![(j, t)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Periodicity {
    /// The least `n` with `R^{n,n}` the identity.
    Periodic(usize),
    /// No `n <= bound` makes `R^{n,n}` the identity.
    AperiodicUpTo(usize),
}

impl fmt::Display for Periodicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Periodicity::Periodic(n) => write!(f, "Periodic({n})"),
            Periodicity::AperiodicUpTo(b) => write!(f, "AperiodicUpTo({b})"),
        }
    }
}

pub const DEFAULT_PERIODICITY_BOUND: usize = 6;

/// Searches for the least `n <= bound` with `R^{n,n} = id`.
pub fn periodicity(r: &Solution, bound: usize) -> Result<Periodicity> {
    r.require_ybe()?;
    for n in 1..=bound {
        let lm = level_map_with_limit(r, n, n, word_limit())?;
        if level_is_identity(lm.table(), lm.table().len()) {
            return Ok(Periodicity::Periodic(n));
        }
    }
    Ok(Periodicity::AperiodicUpTo(bound))
}

/// Same criterion, reading the level maps off the `(1, 2)` map of the
/// restricted family of a constant k-colour family.
pub fn periodicity_of_family(family: &ThetaFamily, bound: usize) -> Result<Periodicity> {
    let r = constant_solution(family)?;
    r.require_ybe()?;
    for n in 1..=bound {
        let restricted = restrict(family, n, n, n)?;
        let map = restricted.map(1, 2);
        if level_is_identity(map.table(), map.table().len()) {
            return Ok(Periodicity::Periodic(n));
        }
    }
    Ok(Periodicity::AperiodicUpTo(bound))
}

fn level_is_identity(table: &[(u32, u32)], len: usize) -> bool {
    let side = (len as f64).sqrt().round() as usize;
    table
        .iter()
        .enumerate()
        .all(|(idx, &(a, b))| a as usize == idx / side + 1 && b as usize == idx % side + 1)
}
