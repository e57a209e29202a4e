//! Finite candidate maps `R` on `[N] x [N]` and their structural predicates.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::wrap;

/// A bijection `R` on `[N] x [N]`, stored row-major with `x` outer.
///
/// Elements are the integers `1..=N`. Entry `(x - 1) * N + (y - 1)` holds
/// `R(x, y)`. The inverse table is kept alongside so that both directions are
/// constant-time lookups.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    size: usize,
    table: Vec<(u32, u32)>,
    inverse: Vec<(u32, u32)>,
}

impl fmt::Debug for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Solution")
            .field("size", &self.size)
            .field("table", &self.table)
            .finish()
    }
}

impl Solution {
    /// Validates a table of `N^2` output pairs.
    pub fn new(size: usize, table: Vec<(u32, u32)>) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptySet);
        }
        let n2 = size * size;
        if table.len() != n2 {
            return Err(Error::WrongTableLength {
                expected: n2,
                found: table.len(),
            });
        }
        let mut inverse = vec![(0u32, 0u32); n2];
        for (idx, &(u, v)) in table.iter().enumerate() {
            for value in [u, v] {
                if value == 0 || value as usize > size {
                    return Err(Error::OutOfRange {
                        index: idx,
                        value,
                        bound: size,
                    });
                }
            }
            let x = (idx / size) as u32 + 1;
            let y = (idx % size) as u32 + 1;
            let slot = &mut inverse[(u as usize - 1) * size + (v as usize - 1)];
            if slot.0 != 0 {
                return Err(Error::NotABijection {
                    first: *slot,
                    second: (x, y),
                    image: (u, v),
                });
            }
            *slot = (x, y);
        }
        Ok(Solution {
            size,
            table,
            inverse,
        })
    }

    /// Builds a solution from a closure `(x, y) -> R(x, y)` on `[N]^2`.
    pub fn from_fn(size: usize, f: impl Fn(u32, u32) -> (u32, u32)) -> Result<Self> {
        let mut table = Vec::with_capacity(size * size);
        for x in 1..=size as u32 {
            for y in 1..=size as u32 {
                table.push(f(x, y));
            }
        }
        Solution::new(size, table)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[(u32, u32)] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: u32, y: u32) -> (u32, u32) {
        self.table[(x as usize - 1) * self.size + (y as usize - 1)]
    }

    #[inline]
    pub fn apply_inverse(&self, u: u32, v: u32) -> (u32, u32) {
        self.inverse[(u as usize - 1) * self.size + (v as usize - 1)]
    }

    pub fn inverse(&self) -> Solution {
        Solution {
            size: self.size,
            table: self.inverse.clone(),
            inverse: self.table.clone(),
        }
    }

    /// `alpha_x(y)`, the first output coordinate.
    #[inline]
    pub fn alpha(&self, x: u32, y: u32) -> u32 {
        self.apply(x, y).0
    }

    /// `beta_y(x)`, the second output coordinate of `R(x, y)`.
    #[inline]
    pub fn beta(&self, y: u32, x: u32) -> u32 {
        self.apply(x, y).1
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + Clone {
        1..=self.size as u32
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(idx, &(u, v))| {
            u as usize == idx / self.size + 1 && v as usize == idx % self.size + 1
        })
    }

    /// `sigma R sigma`, which exchanges the two chiralities of derived type.
    pub fn mirror(&self) -> Solution {
        Solution::from_fn(self.size, |x, y| {
            let (u, v) = self.apply(y, x);
            (v, u)
        })
        .expect("conjugate of a bijection is a bijection")
    }

    /// The QYBE form `r = sigma R`.
    pub fn flip_composed(&self) -> Solution {
        Solution::from_fn(self.size, |x, y| {
            let (u, v) = self.apply(x, y);
            (v, u)
        })
        .expect("flip composed with a bijection is a bijection")
    }

    pub fn compose(&self, other: &Solution) -> Result<Solution> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(self.size, other.size));
        }
        Solution::from_fn(self.size, |x, y| {
            let (u, v) = other.apply(x, y);
            self.apply(u, v)
        })
    }

    /// Applies `R` to coordinates `(i, i + 1)` of a tuple, 1-based `i`.
    pub fn apply_leg(&self, position: usize, tuple: &[u32]) -> Result<Vec<u32>> {
        if position == 0 || position >= tuple.len() {
            return Err(Error::PositionOutOfRange {
                position,
                len: tuple.len(),
            });
        }
        if let Some(&bad) = tuple.iter().find(|&&a| a == 0 || a as usize > self.size) {
            return Err(Error::InvalidLetter(format!(
                "{bad} is outside [1, {}]",
                self.size
            )));
        }
        let mut out = tuple.to_vec();
        self.apply_leg_in_place(position - 1, &mut out);
        Ok(out)
    }

    /// Zero-based, unchecked variant of [`Solution::apply_leg`].
    #[inline]
    pub(crate) fn apply_leg_in_place(&self, p: usize, word: &mut [u32]) {
        let (u, v) = self.apply(word[p], word[p + 1]);
        word[p] = u;
        word[p + 1] = v;
    }

    /// Least `(x, y, z)` where the two sides of the braid relation differ.
    pub fn ybe_witness(&self) -> Option<[u32; 3]> {
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    let mut lhs = [x, y, z];
                    self.apply_leg_in_place(0, &mut lhs);
                    self.apply_leg_in_place(1, &mut lhs);
                    self.apply_leg_in_place(0, &mut lhs);
                    let mut rhs = [x, y, z];
                    self.apply_leg_in_place(1, &mut rhs);
                    self.apply_leg_in_place(0, &mut rhs);
                    self.apply_leg_in_place(1, &mut rhs);
                    if lhs != rhs {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    /// Exhaustive check of `R12 R23 R12 = R23 R12 R23` on `[N]^3`.
    pub fn is_ybe(&self) -> bool {
        self.ybe_witness().is_none()
    }

    pub(crate) fn require_ybe(&self) -> Result<()> {
        if self.is_ybe() {
            Ok(())
        } else {
            Err(Error::NotAYbeSolution)
        }
    }

    pub fn involutive_witness(&self) -> Option<(u32, u32)> {
        self.pairs().find(|&(x, y)| {
            let (u, v) = self.apply(x, y);
            self.apply(u, v) != (x, y)
        })
    }

    pub fn square_free_witness(&self) -> Option<u32> {
        self.elements().find(|&x| self.apply(x, x) != (x, x))
    }

    pub fn degeneracy_witness(&self) -> Option<DegeneracyWitness> {
        for x in self.elements() {
            if let Some((y1, y2)) = first_collision(self.elements().map(|y| self.alpha(x, y))) {
                return Some(DegeneracyWitness::Alpha { x, y1, y2 });
            }
        }
        for y in self.elements() {
            if let Some((x1, x2)) = first_collision(self.elements().map(|x| self.beta(y, x))) {
                return Some(DegeneracyWitness::Beta { y, x1, x2 });
            }
        }
        None
    }

    pub fn is_involutive(&self) -> bool {
        self.involutive_witness().is_none()
    }

    pub fn is_square_free(&self) -> bool {
        self.square_free_witness().is_none()
    }

    pub fn is_non_degenerate(&self) -> bool {
        self.degeneracy_witness().is_none()
    }

    /// Every `alpha_x` is the identity: `R(x, y) = (y, beta_y(x))`.
    pub fn alpha_is_identity(&self) -> bool {
        self.pairs().all(|(x, y)| self.alpha(x, y) == y)
    }

    /// Every `beta_y` is the identity: `R(x, y) = (alpha_x(y), x)`.
    pub fn beta_is_identity(&self) -> bool {
        self.pairs().all(|(x, y)| self.beta(y, x) == x)
    }

    pub fn is_derived_type(&self) -> bool {
        self.alpha_is_identity() || self.beta_is_identity()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.elements()
            .flat_map(move |x| self.elements().map(move |y| (x, y)))
    }

    pub fn properties(&self) -> PropertyReport {
        let witnesses = Witnesses {
            ybe: self.ybe_witness(),
            involutive: self.involutive_witness(),
            square_free: self.square_free_witness(),
            non_degenerate: self.degeneracy_witness(),
        };
        let is_ybe = witnesses.ybe.is_none();
        let involutive = witnesses.involutive.is_none();
        let non_degenerate = witnesses.non_degenerate.is_none();
        PropertyReport {
            is_bijection: true,
            is_ybe,
            involutive,
            square_free: witnesses.square_free.is_none(),
            non_degenerate,
            symmetric: involutive && non_degenerate && is_ybe,
            derived_type: self.is_derived_type(),
            witnesses,
        }
    }

    pub fn alpha_beta(&self) -> AlphaBeta {
        let n = self.size;
        let mut alpha = vec![vec![0u32; n]; n];
        let mut beta = vec![vec![0u32; n]; n];
        for (x, y) in self.pairs() {
            let (u, v) = self.apply(x, y);
            alpha[x as usize - 1][y as usize - 1] = u;
            beta[y as usize - 1][x as usize - 1] = v;
        }
        AlphaBeta { alpha, beta }
    }

    /// Checks the three component equations of the braid relation separately.
    pub fn check_structure_equations(&self) -> StructureReport {
        let a = |x: u32, y: u32| self.alpha(x, y);
        let b = |y: u32, x: u32| self.beta(y, x);
        let mut report = StructureReport::default();
        for x in self.elements() {
            for y in self.elements() {
                let (u, v) = self.apply(x, y);
                for z in self.elements() {
                    if report.left_action.is_none() && a(x, a(y, z)) != a(u, a(v, z)) {
                        report.left_action = Some([x, y, z]);
                    }
                    if report.right_action.is_none() && b(y, b(x, z)) != b(v, b(u, z)) {
                        report.right_action = Some([x, y, z]);
                    }
                    if report.compatibility.is_none()
                        && b(a(b(y, x), z), a(x, y)) != a(b(a(y, z), x), b(z, y))
                    {
                        report.compatibility = Some([x, y, z]);
                    }
                }
            }
        }
        report
    }
}

fn first_collision(values: impl Iterator<Item = u32>) -> Option<(u32, u32)> {
    let mut seen: Vec<u32> = Vec::new();
    for (i, v) in values.enumerate() {
        if let Some(j) = seen.iter().position(|&w| w == v) {
            return Some((j as u32 + 1, i as u32 + 1));
        }
        seen.push(v);
    }
    None
}

/// The coordinate families `alpha_x(y)` and `beta_y(x)`, 1-based values in
/// 0-based vectors: `alpha[x - 1][y - 1]`, `beta[y - 1][x - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaBeta {
    pub alpha: Vec<Vec<u32>>,
    pub beta: Vec<Vec<u32>>,
}

impl AlphaBeta {
    pub fn reassemble(&self) -> Result<Solution> {
        let n = self.alpha.len();
        Solution::from_fn(n, |x, y| {
            (
                self.alpha[x as usize - 1][y as usize - 1],
                self.beta[y as usize - 1][x as usize - 1],
            )
        })
    }
}

/// Two inputs that collide under one of the coordinate maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "side", rename_all = "snake_case")]
pub enum DegeneracyWitness {
    /// `alpha_x(y1) = alpha_x(y2)`.
    Alpha { x: u32, y1: u32, y2: u32 },
    /// `beta_y(x1) = beta_y(x2)`.
    Beta { y: u32, x1: u32, x2: u32 },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub ybe: Option<[u32; 3]>,
    pub involutive: Option<(u32, u32)>,
    pub square_free: Option<u32>,
    pub non_degenerate: Option<DegeneracyWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub is_bijection: bool,
    pub is_ybe: bool,
    pub involutive: bool,
    pub square_free: bool,
    pub non_degenerate: bool,
    pub symmetric: bool,
    pub derived_type: bool,
    pub witnesses: Witnesses,
}

impl PropertyReport {
    /// The boolean flags in a fixed order, used as a classification fingerprint.
    pub fn flags(&self) -> [bool; 7] {
        [
            self.is_bijection,
            self.is_ybe,
            self.involutive,
            self.square_free,
            self.non_degenerate,
            self.symmetric,
            self.derived_type,
        ]
    }
}

/// Least failing triple for each component equation, if any.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// `alpha_x alpha_y = alpha_{alpha_x(y)} alpha_{beta_y(x)}`.
    pub left_action: Option<[u32; 3]>,
    /// `beta_y beta_x = beta_{beta_y(x)} beta_{alpha_x(y)}`.
    pub right_action: Option<[u32; 3]>,
    /// The mixed compatibility condition.
    pub compatibility: Option<[u32; 3]>,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.left_action.is_none() && self.right_action.is_none() && self.compatibility.is_none()
    }
}

/// Named solutions from the standard catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builtin {
    /// `R(i, j) = (i, j)`.
    Identity,
    /// `R(i, j) = (j, i)`.
    Flip,
    /// `R(i, j) = (j + 1, i + 1)`.
    DoubleShift,
    /// `R(i, j) = (j + 1, i)`.
    Shift,
    /// `R(i, j) = (j, 2j - i)`, `N >= 3`.
    Dihedral,
    /// `R(x, y) = (f(y), g(x))` for commuting permutations `f`, `g`.
    Permutation { f: Vec<u32>, g: Vec<u32> },
}

impl Builtin {
    pub fn parse(name: &str) -> Result<Builtin> {
        Ok(match name {
            "identity" | "id" => Builtin::Identity,
            "flip" | "trivial" => Builtin::Flip,
            "double_shift" | "double-shift" => Builtin::DoubleShift,
            "shift" => Builtin::Shift,
            "dihedral" => Builtin::Dihedral,
            _ => return Err(Error::UnknownName(name.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Builtin::Identity => "identity",
            Builtin::Flip => "flip",
            Builtin::DoubleShift => "double_shift",
            Builtin::Shift => "shift",
            Builtin::Dihedral => "dihedral",
            Builtin::Permutation { .. } => "permutation",
        }
    }

    pub fn build(&self, size: usize) -> Result<Solution> {
        if size == 0 {
            return Err(Error::EmptySet);
        }
        let n = size;
        let w = |v: i64| wrap(v, n);
        match self {
            Builtin::Identity => Solution::from_fn(n, |i, j| (i, j)),
            Builtin::Flip => Solution::from_fn(n, |i, j| (j, i)),
            Builtin::DoubleShift => Solution::from_fn(n, |i, j| (w(j as i64 + 1), w(i as i64 + 1))),
            Builtin::Shift => Solution::from_fn(n, |i, j| (w(j as i64 + 1), i)),
            Builtin::Dihedral => {
                if n < 3 {
                    return Err(Error::InvalidParams(format!(
                        "the dihedral solution needs N >= 3, got {n}"
                    )));
                }
                Solution::from_fn(n, |i, j| (j, w(2 * j as i64 - i as i64)))
            }
            Builtin::Permutation { f, g } => {
                check_permutation(f, n, "f")?;
                check_permutation(g, n, "g")?;
                let commute = (0..n).all(|x| f[g[x] as usize - 1] == g[f[x] as usize - 1]);
                if !commute {
                    return Err(Error::InvalidParams("f and g do not commute".into()));
                }
                Solution::from_fn(n, |x, y| (f[y as usize - 1], g[x as usize - 1]))
            }
        }
    }
}

fn check_permutation(p: &[u32], n: usize, name: &str) -> Result<()> {
    if p.len() != n {
        return Err(Error::InvalidParams(format!(
            "{name} has {} entries, expected {n}",
            p.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in p {
        if v == 0 || v as usize > n || std::mem::replace(&mut seen[v as usize - 1], true) {
            return Err(Error::InvalidParams(format!(
                "{name} is not a permutation of [{n}]"
            )));
        }
    }
    Ok(())
}

/// Convenience wrapper around [`Builtin::build`].
pub fn builtin(name: &str, size: usize) -> Result<Solution> {
    Builtin::parse(name)?.build(size)
}
