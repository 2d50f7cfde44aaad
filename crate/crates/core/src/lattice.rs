//! Five-vertex lattice models: the uncolored model for Grothendieck
//! polynomials and three colored models for Lascoux atoms and polynomials.
//!
//! The grid has `n` rows (row `r` carries spectral parameter `z_r`, rows
//! counted from the top) and `m` columns. Paths enter on the left or bottom
//! of a vertex and leave on the top or right. A vertex is written
//! `(left, top, right, bottom)`; label `0` is empty and label `k >= 1` is the
//! color `c_k`, where `c_1 > c_2 > ⋯ > c_n`. The uncolored model uses only
//! label `1`.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Coeff, MPoly};
use crate::gt::{GtPattern, MarkedGtPattern};
use crate::symgroup::{Partition, Permutation};

pub type Label = u8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("width m = {m} is too small, need at least {needed}")]
    WidthTooSmall { m: usize, needed: usize },
    #[error("permutation of size {perm} does not match n = {n}")]
    SizeMismatch { perm: usize, n: usize },
    #[error("edge labels do not form an admissible state: {0}")]
    Inadmissible(String),
    #[error("GT pattern top row {top:?} does not match {lambda:?}")]
    WrongTop { top: Partition, lambda: Partition },
}

/// The four labels around a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub left: Label,
    pub top: Label,
    pub right: Label,
    pub bottom: Label,
}

impl Vertex {
    pub const fn new(left: Label, top: Label, right: Label, bottom: Label) -> Self {
        Vertex { left, top, right, bottom }
    }

    /// The same vertex with every color replaced by `1`.
    pub fn uncolored(self) -> Vertex {
        let f = |x: Label| (x > 0) as Label;
        Vertex::new(f(self.left), f(self.top), f(self.right), f(self.bottom))
    }
}

/// Admissible local configurations.
///
/// For two distinct colors `c_i > c_j` (so `i < j`):
/// `B1 = (c_j, c_j, c_i, c_i)`, `B1Dagger = (c_j, c_i, c_j, c_i)`,
/// `B1Prime = (c_i, c_i, c_j, c_j)`. `B1Same` is `(d, d, d, d)`, which in the
/// uncolored model is the ordinary `b_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    A1,
    A2,
    B1,
    B1Dagger,
    B1Prime,
    B1Same,
    B2,
    C1,
}

impl VertexKind {
    /// Boltzmann weight in row `row` of an `n`-variable ring.
    pub fn weight<C: Coeff>(self, n: usize, row: usize) -> MPoly<C> {
        match self {
            VertexKind::A2 => &MPoly::one(n) + &(&MPoly::beta(n) * &MPoly::z(n, row)),
            VertexKind::B2 => MPoly::z(n, row),
            _ => MPoly::one(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexKind::A1 => "a1",
            VertexKind::A2 => "a2",
            VertexKind::B1 => "b1",
            VertexKind::B1Dagger => "b1-dagger",
            VertexKind::B1Prime => "b1-prime",
            VertexKind::B1Same => "b1-same",
            VertexKind::B2 => "b2",
            VertexKind::C1 => "c1",
        }
    }
}

/// Shape of a vertex ignoring which flavor admits it.
pub fn classify(v: Vertex) -> Option<VertexKind> {
    let Vertex { left: l, top: t, right: r, bottom: b } = v;
    match (l, t, r, b) {
        (0, 0, 0, 0) => Some(VertexKind::A1),
        (0, 0, r, b) if r == b => Some(VertexKind::A2),
        (l, 0, r, 0) if l == r => Some(VertexKind::B2),
        (l, t, 0, 0) if l == t => Some(VertexKind::C1),
        (_, _, _, _) if l == 0 || t == 0 || r == 0 || b == 0 => None,
        _ if l == t && r == b => match l.cmp(&r) {
            std::cmp::Ordering::Equal => Some(VertexKind::B1Same),
            // smaller index is the larger color
            std::cmp::Ordering::Greater => Some(VertexKind::B1),
            std::cmp::Ordering::Less => Some(VertexKind::B1Prime),
        },
        _ if l == r && t == b && l > t => Some(VertexKind::B1Dagger),
        _ => None,
    }
}

/// Which lattice model.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Flavor {
    Uncolored,
    /// Lascoux atoms: `b1` and `b1†` for every pair of colors.
    Atom(Permutation),
    /// Lascoux polynomials: `b1`, `b1†` for crossing pairs, `b1′` otherwise.
    Lascoux(Permutation),
    /// Lascoux polynomials: `b1′` and `b1†` for every pair.
    LascouxPrime(Permutation),
}

impl Flavor {
    pub fn permutation(&self) -> Option<&Permutation> {
        match self {
            Flavor::Uncolored => None,
            Flavor::Atom(w) | Flavor::Lascoux(w) | Flavor::LascouxPrime(w) => Some(w),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Flavor::Uncolored => "uncolored",
            Flavor::Atom(_) => "atom",
            Flavor::Lascoux(_) => "lascoux",
            Flavor::LascouxPrime(_) => "lascoux-prime",
        }
    }

    pub fn is_colored(&self) -> bool {
        !matches!(self, Flavor::Uncolored)
    }

    /// Color pairs `(a, b)`, `a < b`, whose strands cross; empty when uncolored.
    pub fn crossing_pairs(&self) -> BTreeSet<(Label, Label)> {
        match self.permutation() {
            Some(w) => crossing_pairs(&left_colors(w)),
            None => BTreeSet::new(),
        }
    }
}

/// The kind of `v` if `flavor` admits it, given its crossing pairs.
pub fn admitted_kind(flavor: &Flavor, crossing: &BTreeSet<(Label, Label)>, v: Vertex) -> Option<VertexKind> {
    if !flavor.is_colored() && [v.left, v.top, v.right, v.bottom].iter().any(|&x| x > 1) {
        return None;
    }
    let kind = classify(v)?;
    let pair = || (v.left.min(v.top).min(v.right), v.left.max(v.top).max(v.right));
    let allowed = match (flavor, kind) {
        (Flavor::Uncolored, VertexKind::B1 | VertexKind::B1Dagger | VertexKind::B1Prime) => false,
        (Flavor::Atom(_), VertexKind::B1Prime) => false,
        (Flavor::Lascoux(_), VertexKind::B1 | VertexKind::B1Dagger) => crossing.contains(&pair()),
        (Flavor::Lascoux(_), VertexKind::B1Prime) => !crossing.contains(&pair()),
        (Flavor::LascouxPrime(_), VertexKind::B1) => false,
        _ => true,
    };
    allowed.then_some(kind)
}

/// Positions (1-based) of the `1`s in the `{0,1}`-sequence of `λ` inside an
/// `n × (m - n)` rectangle: `λ_j + n + 1 - j`.
pub fn one_positions(lambda: &Partition) -> Vec<usize> {
    let n = lambda.n();
    let mut pos: Vec<usize> = (1..=n).map(|j| lambda.get(j - 1) + n + 1 - j).collect();
    pos.sort_unstable();
    pos
}

/// The top boundary: the `i`-th `1` from the left carries color `c_i`
/// (or plain `1` when uncolored).
pub fn partition_to_boundary(lambda: &Partition, m: usize, colored: bool) -> Result<Vec<Label>, LatticeError> {
    let needed = lambda.first() + lambda.n();
    if m < needed {
        return Err(LatticeError::WidthTooSmall { m, needed });
    }
    let mut top = vec![0; m];
    for (k, p) in one_positions(lambda).into_iter().enumerate() {
        top[p - 1] = if colored { (k + 1) as Label } else { 1 };
    }
    Ok(top)
}

/// `{0,1}`-sequence as a string of digits.
pub fn zero_one_string(lambda: &Partition, m: usize) -> Result<String, LatticeError> {
    Ok(partition_to_boundary(lambda, m, false)?
        .iter()
        .map(|&x| char::from(b'0' + x))
        .collect())
}

/// Boundary data and admissibility rules for one model.
#[derive(Debug, Clone)]
pub struct Model {
    flavor: Flavor,
    lambda: Partition,
    m: usize,
    left: Vec<Label>,
    top: Vec<Label>,
    crossing: BTreeSet<(Label, Label)>,
}

impl Model {
    /// Model with the given width; `None` picks the minimal `m = λ_1 + n`.
    pub fn new(flavor: Flavor, lambda: &Partition, m: Option<usize>) -> Result<Self, LatticeError> {
        let n = lambda.n();
        let m = m.unwrap_or(lambda.first() + n);
        if let Some(w) = flavor.permutation() {
            if w.size() != n {
                return Err(LatticeError::SizeMismatch { perm: w.size(), n });
            }
        }
        let top = partition_to_boundary(lambda, m, flavor.is_colored())?;
        let left: Vec<Label> = match flavor.permutation() {
            None => vec![1; n],
            Some(w) => left_colors(w),
        };
        let crossing = flavor.crossing_pairs();
        Ok(Model {
            flavor,
            lambda: lambda.clone(),
            m,
            left,
            top,
            crossing,
        })
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn flavor(&self) -> &Flavor {
        &self.flavor
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// Left boundary labels, top to bottom.
    pub fn left_boundary(&self) -> &[Label] {
        &self.left
    }

    pub fn top_boundary(&self) -> &[Label] {
        &self.top
    }

    /// Color pairs `(a, b)`, `a < b`, whose strands must cross.
    pub fn crossing_pairs(&self) -> &BTreeSet<(Label, Label)> {
        &self.crossing
    }

    /// The kind of `v` if this model admits it.
    pub fn kind(&self, v: Vertex) -> Option<VertexKind> {
        admitted_kind(&self.flavor, &self.crossing, v)
    }

    /// Weight of `v` in row `row`, zero if inadmissible.
    pub fn local_weight<C: Coeff>(&self, v: Vertex, row: usize) -> MPoly<C> {
        match self.kind(v) {
            Some(k) => k.weight(self.n(), row),
            None => MPoly::zero(self.n()),
        }
    }

    /// All admissible states, depth-first in row-major order with `(right,
    /// bottom)` choices in increasing order.
    pub fn states(&self) -> Vec<LatticeState> {
        self.search(None)
    }

    /// Admissible states whose occupied edges are exactly those of `support`.
    pub fn states_with_support(&self, support: &LatticeState) -> Vec<LatticeState> {
        self.search(Some(support))
    }

    fn search(&self, support: Option<&LatticeState>) -> Vec<LatticeState> {
        let (n, m) = (self.n(), self.m);
        let mut st = LatticeState {
            flavor: self.flavor.clone(),
            lambda: self.lambda.clone(),
            n,
            m,
            h: vec![vec![0; m + 1]; n],
            v: vec![vec![0; m]; n + 1],
        };
        for r in 0..n {
            st.h[r][0] = self.left[r];
        }
        st.v[0].clone_from(&self.top);
        let alphabet: Vec<Label> = if self.flavor.is_colored() {
            (0..=n as Label).collect()
        } else {
            vec![0, 1]
        };
        let mut ctx = Search {
            model: self,
            alphabet,
            support,
            out: Vec::new(),
        };
        ctx.dfs(&mut st, 0, 0);
        ctx.out
    }

    pub fn partition_function<C: Coeff>(&self) -> MPoly<C> {
        MPoly::sum(self.n(), self.states().iter().map(|s| s.weight::<C>()))
    }
}

/// Left boundary `w w_0 c` for `Atom(w)` etc.: with `σ = w w_0`, the color
/// `c_i` enters in row `σ(i)`.
fn left_colors(w: &Permutation) -> Vec<Label> {
    let sigma = w.compose(&Permutation::longest(w.size())).inverse();
    (1..=w.size()).map(|r| sigma.apply(r) as Label).collect()
}

/// Colors `a < b` must cross iff `a` enters below `b`: `c_a` exits the top
/// to the left of `c_b`.
fn crossing_pairs(left: &[Label]) -> BTreeSet<(Label, Label)> {
    let row = |c: Label| left.iter().position(|&x| x == c).expect("every color enters once");
    let mut out = BTreeSet::new();
    for a in 1..=left.len() as Label {
        for b in a + 1..=left.len() as Label {
            if row(a) > row(b) {
                out.insert((a, b));
            }
        }
    }
    out
}

struct Search<'a> {
    model: &'a Model,
    alphabet: Vec<Label>,
    support: Option<&'a LatticeState>,
    out: Vec<LatticeState>,
}

impl Search<'_> {
    fn dfs(&mut self, st: &mut LatticeState, r: usize, c: usize) {
        let (n, m) = (st.n, st.m);
        if r == n {
            self.out.push(st.clone());
            return;
        }
        if c == m {
            if st.h[r][m] != 0 || !self.row_exit_ok(st, r) {
                return;
            }
            self.dfs(st, r + 1, 0);
            return;
        }
        let (left, top) = (st.h[r][c], st.v[r][c]);
        for i in 0..self.alphabet.len() {
            for j in 0..self.alphabet.len() {
                let (right, bottom) = (self.alphabet[i], self.alphabet[j]);
                if c + 1 == m && right != 0 {
                    continue;
                }
                if r + 1 == n && bottom != 0 {
                    continue;
                }
                if let Some(sup) = self.support {
                    if (right != 0) != (sup.h[r][c + 1] != 0) || (bottom != 0) != (sup.v[r + 1][c] != 0) {
                        continue;
                    }
                }
                let v = Vertex::new(left, top, right, bottom);
                if self.model.kind(v).is_none() {
                    continue;
                }
                if bottom != 0 && !self.bottom_ok(st, r, c, bottom) {
                    continue;
                }
                st.h[r][c + 1] = right;
                st.v[r + 1][c] = bottom;
                self.dfs(st, r, c + 1);
            }
        }
        st.h[r][c + 1] = 0;
        st.v[r + 1][c] = 0;
    }

    /// A label below row `r` must belong to a path entering in a lower row
    /// and appear at most once.
    fn bottom_ok(&self, st: &LatticeState, r: usize, c: usize, label: Label) -> bool {
        let below = &self.model.left[r + 1..];
        if self.model.flavor.is_colored() {
            below.contains(&label) && !st.v[r + 1][..c].contains(&label)
        } else {
            st.v[r + 1][..c].iter().filter(|&&x| x != 0).count() < below.len()
        }
    }

    fn row_exit_ok(&self, st: &LatticeState, r: usize) -> bool {
        let mut got: Vec<Label> = st.v[r + 1].iter().copied().filter(|&x| x != 0).collect();
        let mut want: Vec<Label> = self.model.left[r + 1..].to_vec();
        got.sort_unstable();
        want.sort_unstable();
        got == want
    }
}

/// A full labeling of the grid.
///
/// `h[r][c]` is the horizontal edge left of column `c` in row `r` (so
/// `h[r][0]` is the left boundary and `h[r][m]` the right boundary);
/// `v[r][c]` is the vertical edge above row `r` in column `c` (so `v[0]` is
/// the top boundary and `v[n]` the bottom boundary). Indices are 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticeState {
    flavor: Flavor,
    lambda: Partition,
    n: usize,
    m: usize,
    h: Vec<Vec<Label>>,
    v: Vec<Vec<Label>>,
}

impl LatticeState {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn flavor(&self) -> &Flavor {
        &self.flavor
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn horizontal(&self) -> &[Vec<Label>] {
        &self.h
    }

    pub fn vertical(&self) -> &[Vec<Label>] {
        &self.v
    }

    /// Vertex in row `r`, column `c` (0-based).
    pub fn vertex(&self, r: usize, c: usize) -> Vertex {
        Vertex::new(self.h[r][c], self.v[r][c], self.h[r][c + 1], self.v[r + 1][c])
    }

    pub fn model(&self) -> Model {
        Model::new(self.flavor.clone(), &self.lambda, Some(self.m)).expect("state came from a valid model")
    }

    /// Kinds of all vertices, row by row.
    pub fn kinds(&self) -> Vec<Vec<VertexKind>> {
        let model = self.model();
        (0..self.n)
            .map(|r| {
                (0..self.m)
                    .map(|c| model.kind(self.vertex(r, c)).expect("state is admissible"))
                    .collect()
            })
            .collect()
    }

    /// Product of the local weights.
    pub fn weight<C: Coeff>(&self) -> MPoly<C> {
        let mut w = MPoly::one(self.n);
        for (r, row) in self.kinds().iter().enumerate() {
            for k in row {
                if matches!(k, VertexKind::A2 | VertexKind::B2) {
                    w = &w * &k.weight(self.n, r + 1);
                }
            }
        }
        w
    }

    /// Positions `(row, col)`, 1-based, of the `a2` vertices.
    pub fn a2_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, row) in self.kinds().iter().enumerate() {
            for (c, k) in row.iter().enumerate() {
                if *k == VertexKind::A2 {
                    out.push((r + 1, c + 1));
                }
            }
        }
        out
    }

    /// The same paths with colors forgotten.
    pub fn uncolored(&self) -> LatticeState {
        let f = |x: &Label| (*x > 0) as Label;
        LatticeState {
            flavor: Flavor::Uncolored,
            lambda: self.lambda.clone(),
            n: self.n,
            m: self.m,
            h: self.h.iter().map(|r| r.iter().map(f).collect()).collect(),
            v: self.v.iter().map(|r| r.iter().map(f).collect()).collect(),
        }
    }

    pub fn same_support(&self, other: &LatticeState) -> bool {
        self.uncolored().h == other.uncolored().h && self.uncolored().v == other.uncolored().v
    }

    /// `𝔓`: level `λ^(i)` is read from the vertical edges below row `n - i`.
    pub fn to_gt(&self) -> GtPattern {
        let n = self.n;
        let chain = (0..=n)
            .map(|i| {
                let ones: Vec<usize> = self.v[n - i]
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(c, _)| c + 1)
                    .collect();
                let k = ones.len();
                let parts: Vec<usize> = (1..=k).map(|p| ones[k - p] - (k + 1 - p)).collect();
                Partition::new(parts, n).expect("positions decrease")
            })
            .collect();
        GtPattern::new(chain).expect("admissible states interlace")
    }

    /// `𝔓^{-1}` into the uncolored model of width `m`.
    pub fn from_gt(pattern: &GtPattern, m: usize) -> Result<LatticeState, LatticeError> {
        let n = pattern.n();
        let lambda = pattern.top().clone();
        let model = Model::new(Flavor::Uncolored, &lambda, Some(m))?;
        let mut v = vec![vec![0; m]; n + 1];
        for (r, row) in v.iter_mut().enumerate() {
            let level = pattern.level(n - r);
            for p in 1..=n - r {
                let pos = level.get(p - 1) + (n - r) + 1 - p;
                if pos > m {
                    return Err(LatticeError::WidthTooSmall { m, needed: pos });
                }
                row[pos - 1] = 1;
            }
        }
        let mut h = vec![vec![0; m + 1]; n];
        for r in 0..n {
            h[r][0] = 1;
            for c in 0..m {
                let flow = h[r][c] as i32 + v[r + 1][c] as i32 - v[r][c] as i32;
                if !(0..=1).contains(&flow) {
                    return Err(LatticeError::Inadmissible(format!("row {} column {}", r + 1, c + 1)));
                }
                h[r][c + 1] = flow as Label;
            }
        }
        let st = LatticeState {
            flavor: Flavor::Uncolored,
            lambda,
            n,
            m,
            h,
            v,
        };
        st.check(&model)?;
        Ok(st)
    }

    fn check(&self, model: &Model) -> Result<(), LatticeError> {
        for r in 0..self.n {
            if self.h[r][self.m] != 0 {
                return Err(LatticeError::Inadmissible(format!("row {} exits right", r + 1)));
            }
            for c in 0..self.m {
                if model.kind(self.vertex(r, c)).is_none() {
                    return Err(LatticeError::Inadmissible(format!("vertex ({}, {})", r + 1, c + 1)));
                }
            }
        }
        if self.v[self.n].iter().any(|&x| x != 0) || self.v[0] != model.top || self.h.iter().map(|r| r[0]).ne(model.left.iter().copied()) {
            return Err(LatticeError::Inadmissible("boundary".into()));
        }
        Ok(())
    }

    /// Color an uncolored state as an atom state. At every vertex with all
    /// four edges occupied the smaller color comes in from the left and the
    /// larger from below, so colors propagate uniquely from the top boundary.
    /// Returns the permutation `w` of the model the result belongs to.
    pub fn color_as_atom(&self) -> (Permutation, LatticeState) {
        let (n, m) = (self.n, self.m);
        let top = partition_to_boundary(&self.lambda, m, true).expect("width already valid");
        let mut h = vec![vec![0 as Label; m + 1]; n];
        let mut v = vec![vec![0 as Label; m]; n + 1];
        v[0] = top;
        for r in 0..n {
            for c in (0..m).rev() {
                let (t, rt) = (v[r][c], h[r][c + 1]);
                let (occ_l, occ_b) = (self.h[r][c] != 0, self.v[r + 1][c] != 0);
                let (l, b) = match (occ_l, occ_b) {
                    (false, false) => (0, 0),
                    (true, false) => (t.max(rt), 0),
                    (false, true) => (0, t.max(rt)),
                    // the larger index is the smaller color
                    (true, true) => (t.max(rt), t.min(rt)),
                };
                h[r][c] = l;
                v[r + 1][c] = b;
            }
        }
        let left: Vec<usize> = (0..n).map(|r| h[r][0] as usize).collect();
        let sigma = Permutation::new(left).expect("each color enters exactly once").inverse();
        let w = sigma.compose(&Permutation::longest(n));
        let st = LatticeState {
            flavor: Flavor::Atom(w.clone()),
            lambda: self.lambda.clone(),
            n,
            m,
            h,
            v,
        };
        debug_assert!(st.check(&st.model()).is_ok());
        (w, st)
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Vec<Value>> = (0..self.n)
            .map(|r| {
                (0..self.m)
                    .map(|c| {
                        let v = self.vertex(r, c);
                        json!({"l": v.left, "t": v.top, "r": v.right, "b": v.bottom})
                    })
                    .collect()
            })
            .collect();
        json!({
            "n": self.n,
            "m": self.m,
            "flavor": self.flavor.name(),
            "w": self.flavor.permutation().map(|w| w.one_line().to_vec()),
            "lambda": self.lambda.parts(),
            "vertices": vertices,
            "weight": self.weight::<num_bigint::BigInt>().to_string(),
        })
    }

    /// Text picture: vertical edge rows interleaved with horizontal edge
    /// rows; `.` is empty, digits are colors.
    pub fn to_ascii(&self) -> String {
        let ch = |x: Label| if x == 0 { '.' } else { char::from_digit(x as u32, 36).unwrap_or('?') };
        let mut out = String::new();
        for r in 0..=self.n {
            out.push_str("  ");
            for c in 0..self.m {
                out.push(ch(self.v[r][c]));
                out.push_str("   ");
            }
            out = out.trim_end().to_string();
            out.push('\n');
            if r < self.n {
                for c in 0..=self.m {
                    out.push(ch(self.h[r][c]));
                    if c < self.m {
                        out.push_str(" + ");
                    }
                }
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Debug for LatticeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ascii())
    }
}

/// `ξ`: the unique state of `Lascoux(w)` with the same paths as a state of
/// `LascouxPrime(w)`.
pub fn xi(state: &LatticeState) -> Result<LatticeState, LatticeError> {
    let w = match state.flavor() {
        Flavor::LascouxPrime(w) => w.clone(),
        other => return Err(LatticeError::Inadmissible(format!("ξ expects a lascoux-prime state, got {}", other.name()))),
    };
    let model = Model::new(Flavor::Lascoux(w), state.lambda(), Some(state.m()))?;
    let mut found = model.states_with_support(state);
    match found.len() {
        1 => Ok(found.pop().expect("one state")),
        k => Err(LatticeError::Inadmissible(format!("{k} lascoux states share these paths"))),
    }
}

/// A state together with a set of marked `a2` vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MarkedState {
    pub state: LatticeState,
    pub marks: BTreeSet<(usize, usize)>,
}

impl MarkedState {
    /// Every marking of `state`.
    pub fn all(state: &LatticeState) -> Vec<MarkedState> {
        use itertools::Itertools;
        state
            .a2_positions()
            .into_iter()
            .powerset()
            .map(|m| MarkedState {
                state: state.clone(),
                marks: m.into_iter().collect(),
            })
            .collect()
    }

    /// `𝔓` on marked states: an `a2` at row `r`, column `col` is the `i`-th
    /// occupied bottom edge from the right, and becomes the mark `(i, n+1-r)`.
    pub fn to_marked_gt(&self) -> MarkedGtPattern {
        let n = self.state.n;
        let marks = self
            .marks
            .iter()
            .map(|&(r, col)| {
                let i = self.state.v[r][col - 1..].iter().filter(|&&x| x != 0).count();
                (i, n + 1 - r)
            })
            .collect();
        MarkedGtPattern::new(self.state.to_gt(), marks).expect("a2 vertices are markable")
    }

    /// Inverse of [`MarkedState::to_marked_gt`] into the uncolored model.
    pub fn from_marked_gt(p: &MarkedGtPattern, m: usize) -> Result<MarkedState, LatticeError> {
        let state = LatticeState::from_gt(p.pattern(), m)?;
        let n = state.n;
        let marks = p
            .marks()
            .iter()
            .map(|&(i, j)| {
                let r = n + 1 - j;
                let occupied: Vec<usize> = (0..m).filter(|&c| state.v[r][c] != 0).collect();
                (r, occupied[occupied.len() - i] + 1)
            })
            .collect();
        Ok(MarkedState { state, marks })
    }

    /// `b^{|M|} z^{w_0 wt(φ(𝔓(S, M)))}`: this marking's share of the state
    /// weight.
    pub fn monomial<C: Coeff>(&self) -> MPoly<C> {
        let mut wt = self.to_marked_gt().weight();
        wt.reverse();
        MPoly::beta_z_power(self.marks.len(), &wt)
    }
}
