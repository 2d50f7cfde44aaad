//! Set-valued and semistandard tableaux.
//!
//! A tableau is stored row by row in English notation; every cell holds a
//! nonempty [`CellSet`]. Semistandard tableaux are the set-valued tableaux
//! whose cells are all singletons.

mod crystal;
mod keys;

use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Coeff, MPoly};
use crate::symgroup::{Partition, Permutation};

pub use crystal::{
    component, crystal_e, crystal_f, highest_weight_path, lowest_weight, lusztig_involution, svt_crystal_e,
    svt_crystal_f,
};
pub use keys::{demazure_crystal, key_leq, key_map, DemazureTable, KeyClasses};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("row lengths {0:?} are not a partition")]
    BadShape(Vec<usize>),
    #[error("empty cell at ({row}, {col})")]
    EmptyCell { row: usize, col: usize },
    #[error("entry {entry} outside 1..={n}")]
    EntryOutOfRange { entry: usize, n: usize },
    #[error("row condition fails at ({row}, {col})")]
    RowCondition { row: usize, col: usize },
    #[error("column condition fails at ({row}, {col})")]
    ColumnCondition { row: usize, col: usize },
    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),
}

/// A finite set of entries in `1..=31`, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CellSet(u32);

impl CellSet {
    pub const EMPTY: CellSet = CellSet(0);

    pub fn singleton(x: usize) -> Self {
        assert!((1..32).contains(&x), "entry {x} out of range");
        CellSet(1 << x)
    }

    pub fn from_entries<I: IntoIterator<Item = usize>>(entries: I) -> Self {
        entries
            .into_iter()
            .fold(CellSet::EMPTY, |s, x| s.with(x))
    }

    pub fn from_bits(bits: u32) -> Self {
        CellSet(bits & !1)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, x: usize) -> bool {
        x < 32 && self.0 >> x & 1 == 1
    }

    pub fn with(self, x: usize) -> Self {
        CellSet(self.0 | CellSet::singleton(x).0)
    }

    pub fn without(self, x: usize) -> Self {
        CellSet(self.0 & !CellSet::singleton(x).0)
    }

    /// Smallest entry. Panics on the empty set.
    pub fn smallest(self) -> usize {
        assert!(!self.is_empty(), "min of empty cell");
        self.0.trailing_zeros() as usize
    }

    /// Largest entry. Panics on the empty set.
    pub fn largest(self) -> usize {
        assert!(!self.is_empty(), "max of empty cell");
        31 - self.0.leading_zeros() as usize
    }

    /// Entries in increasing order.
    pub fn iter(self) -> impl DoubleEndedIterator<Item = usize> {
        (1..32).filter(move |&x| self.contains(x))
    }

    /// Apply `x -> f(x)` entrywise.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Self {
        CellSet::from_entries(self.iter().map(f))
    }

    /// All nonempty subsets of `lo..=hi`, in increasing bitmask order.
    pub fn all_within(lo: usize, hi: usize) -> impl Iterator<Item = CellSet> {
        let range_mask: u32 = if lo > hi {
            0
        } else {
            ((1u64 << (hi + 1)) - (1u64 << lo)) as u32
        };
        // enumerate submasks of range_mask in increasing order
        let mut sub: u32 = 0;
        std::iter::from_fn(move || {
            sub = (sub | !range_mask).wrapping_add(1) & range_mask;
            (sub != 0).then_some(CellSet(sub))
        })
    }
}

impl fmt::Debug for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() == 1 {
            write!(f, "{}", self.smallest())
        } else {
            write!(f, "{{{}}}", self.iter().join(","))
        }
    }
}

/// A set-valued tableau with entries in `1..=n`.
///
/// Rows weakly increase in the sense `max X <= min Y` for `X` left of `Y`,
/// and columns strictly increase in the sense `max X < min Y` for `X` above
/// `Y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetValuedTableau {
    n: usize,
    rows: Vec<Vec<CellSet>>,
}

pub type Ssyt = SetValuedTableau;

impl SetValuedTableau {
    pub fn new(n: usize, rows: Vec<Vec<CellSet>>) -> Result<Self, TableauError> {
        let t = SetValuedTableau { n, rows };
        t.validate()?;
        Ok(t)
    }

    /// Build from rows of entry lists, e.g. `[[1], [1, 2]]` for a row `1 {1,2}`.
    pub fn from_entries(n: usize, rows: &[Vec<Vec<usize>>]) -> Result<Self, TableauError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|c| CellSet::from_entries(c.iter().copied())).collect())
            .collect();
        Self::new(n, rows)
    }

    /// Build a semistandard tableau from rows of single entries.
    pub fn from_ssyt_rows(n: usize, rows: &[Vec<usize>]) -> Result<Self, TableauError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| CellSet::singleton(x)).collect())
            .collect();
        Self::new(n, rows)
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<Vec<CellSet>>) -> Self {
        SetValuedTableau { n, rows }
    }

    pub fn validate(&self) -> Result<(), TableauError> {
        let shape: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        if shape.windows(2).any(|w| w[0] < w[1]) || shape.last() == Some(&0) {
            return Err(TableauError::BadShape(shape));
        }
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &cell) in row.iter().enumerate() {
                if cell.is_empty() {
                    return Err(TableauError::EmptyCell { row: r, col: c });
                }
                if cell.largest() > self.n {
                    return Err(TableauError::EntryOutOfRange {
                        entry: cell.largest(),
                        n: self.n,
                    });
                }
                if c > 0 && row[c - 1].largest() > cell.smallest() {
                    return Err(TableauError::RowCondition { row: r, col: c });
                }
                if r > 0 && self.rows[r - 1][c].largest() >= cell.smallest() {
                    return Err(TableauError::ColumnCondition { row: r, col: c });
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<CellSet>] {
        &self.rows
    }

    pub fn cell(&self, row: usize, col: usize) -> Option<CellSet> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Row lengths, padded with zeros to length `n`.
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect(), self.n.max(self.rows.len()))
            .expect("rows form a partition")
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn column(&self, col: usize) -> Vec<CellSet> {
        self.rows
            .iter()
            .take_while(|r| r.len() > col)
            .map(|r| r[col])
            .collect()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Number of occurrences of each of `1..=n`.
    pub fn weight(&self) -> Vec<usize> {
        let mut wt = vec![0; self.n];
        for cell in self.rows.iter().flatten() {
            for x in cell.iter() {
                wt[x - 1] += 1;
            }
        }
        wt
    }

    /// `Σ (|X| - 1)` over cells.
    pub fn excess(&self) -> usize {
        self.rows.iter().flatten().map(|c| c.len() - 1).sum()
    }

    pub fn is_semistandard(&self) -> bool {
        self.excess() == 0
    }

    /// `b^excess z^wt`.
    pub fn monomial<C: Coeff>(&self) -> MPoly<C> {
        MPoly::beta_z_power(self.excess(), &self.weight())
    }

    /// Cellwise minimum; always semistandard.
    pub fn min_tableau(&self) -> Ssyt {
        self.map_cells(|c| CellSet::singleton(c.smallest()))
    }

    /// Cellwise maximum; always semistandard.
    pub fn max_tableau(&self) -> Ssyt {
        self.map_cells(|c| CellSet::singleton(c.largest()))
    }

    /// Replace every entry `i` by `n + 1 - i`. The result is a reverse
    /// tableau: rows and columns decrease.
    pub fn complement(&self) -> ReverseTableau {
        ReverseTableau {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c.map(|x| self.n + 1 - x)).collect())
                .collect(),
        }
    }

    pub(crate) fn map_cells(&self, f: impl Fn(CellSet) -> CellSet) -> Self {
        SetValuedTableau {
            n: self.n,
            rows: self.rows.iter().map(|r| r.iter().map(|&c| f(c)).collect()).collect(),
        }
    }

    pub(crate) fn set_cell(&mut self, row: usize, col: usize, cell: CellSet) {
        self.rows[row][col] = cell;
    }

    /// Entry lists, for JSON and tests.
    pub fn to_entries(&self) -> Vec<Vec<Vec<usize>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|c| c.iter().collect()).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "shape": self.rows.iter().map(Vec::len).collect::<Vec<_>>(),
            "cells": self.to_entries(),
        })
    }

    /// True if column `k + 1` is contained in column `k` for every `k`.
    pub fn is_key(&self) -> bool {
        self.is_semistandard()
            && (1..self.num_columns()).all(|c| {
                let left = self.column(c - 1);
                self.column(c).iter().all(|x| left.contains(x))
            })
    }
}

impl fmt::Debug for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetValuedTableau {
    /// `[[1,1,{2,3}],[2,2],[3]]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.rows
                .iter()
                .map(|r| format!("[{}]", r.iter().join(",")))
                .join(",")
        )
    }
}

/// A tableau with entries decreasing weakly along rows and strictly down
/// columns; produced by [`SetValuedTableau::complement`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReverseTableau {
    n: usize,
    rows: Vec<Vec<CellSet>>,
}

impl ReverseTableau {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<CellSet>] {
        &self.rows
    }

    pub fn column(&self, col: usize) -> Vec<CellSet> {
        self.rows
            .iter()
            .take_while(|r| r.len() > col)
            .map(|r| r[col])
            .collect()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn weight(&self) -> Vec<usize> {
        let mut wt = vec![0; self.n];
        for cell in self.rows.iter().flatten() {
            for x in cell.iter() {
                wt[x - 1] += 1;
            }
        }
        wt
    }

    pub fn excess(&self) -> usize {
        self.rows.iter().flatten().map(|c| c.len() - 1).sum()
    }

    pub fn monomial<C: Coeff>(&self) -> MPoly<C> {
        MPoly::beta_z_power(self.excess(), &self.weight())
    }

    /// The tableau whose cells are the largest entries.
    pub fn max_tableau(&self) -> ReverseTableau {
        ReverseTableau {
            n: self.n,
            rows: self.rows.iter().map(|r| r.iter().map(|c| CellSet::singleton(c.largest())).collect()).collect(),
        }
    }

    pub fn complement(&self) -> SetValuedTableau {
        SetValuedTableau {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c.map(|x| self.n + 1 - x)).collect())
                .collect(),
        }
    }

    pub fn to_entries(&self) -> Vec<Vec<Vec<usize>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|c| c.iter().rev().collect()).collect())
            .collect()
    }
}

impl fmt::Debug for ReverseTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ReverseTableau {
    /// `[[3,3,1,1],[2,{2,1}],[1]]`, sets listed largest first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rows.iter().map(|r| format!("[{}]", r.iter().map(|c| descending(*c)).join(","))).join(","))
    }
}

/// A cell with its entries largest first: `2` or `{2,1}`.
pub fn descending(c: CellSet) -> String {
    if c.len() == 1 {
        c.largest().to_string()
    } else {
        format!("{{{}}}", c.iter().rev().join(","))
    }
}

/// All set-valued tableaux of shape `lambda` with entries in `1..=n`.
pub fn enumerate_svt(lambda: &Partition, n: usize) -> Vec<SetValuedTableau> {
    enumerate(lambda, n, false)
}

/// All semistandard tableaux of shape `lambda` with entries in `1..=n`.
pub fn enumerate_ssyt(lambda: &Partition, n: usize) -> Vec<Ssyt> {
    enumerate(lambda, n, true)
}

fn enumerate(lambda: &Partition, n: usize, single: bool) -> Vec<SetValuedTableau> {
    let shape: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p > 0).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let heights: Vec<usize> = (0..shape.first().copied().unwrap_or(0))
        .map(|c| shape.iter().filter(|&&len| len > c).count())
        .collect();
    let mut rows: Vec<Vec<CellSet>> = shape.iter().map(|&len| vec![CellSet::EMPTY; len]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, &heights, n, single, &mut rows, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    heights: &[usize],
    n: usize,
    single: bool,
    rows: &mut Vec<Vec<CellSet>>,
    out: &mut Vec<SetValuedTableau>,
) {
    if k == cells.len() {
        out.push(SetValuedTableau::from_rows_unchecked(n, rows.clone()));
        return;
    }
    let (r, c) = cells[k];
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1].largest());
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c].largest() + 1);
    }
    // leave room for the strictly increasing cells below
    let below = heights[c] - r - 1;
    if n < below || lo > n - below {
        return;
    }
    let hi = n - below;
    let candidates: Vec<CellSet> = if single {
        (lo..=hi).map(CellSet::singleton).collect()
    } else {
        // only the maximum is constrained by the cells below
        CellSet::all_within(lo, n).filter(|s| s.largest() <= hi).collect()
    };
    for cell in candidates {
        rows[r][c] = cell;
        fill(cells, k + 1, heights, n, single, rows, out);
    }
    rows[r][c] = CellSet::EMPTY;
}

/// `Σ_T b^{excess(T)} z^{wt(T)}` over set-valued tableaux of shape `lambda`:
/// the symmetric Grothendieck polynomial.
pub fn grothendieck_svt<C: Coeff>(lambda: &Partition) -> MPoly<C> {
    MPoly::sum(lambda.n(), enumerate_svt(lambda, lambda.n()).iter().map(|t| t.monomial()))
}

/// `Σ_T z^{wt(T)}` over semistandard tableaux: the Schur polynomial.
pub fn schur<C: Coeff>(lambda: &Partition, n: usize) -> MPoly<C> {
    MPoly::sum(n, enumerate_ssyt(lambda, n).iter().map(|t| t.monomial()))
}

/// The key tableau `K_{wλ}`: row `i` filled with `i`, `w` applied to every
/// entry, columns re-sorted.
pub fn key_tableau(w: &Permutation, lambda: &Partition) -> Ssyt {
    assert_eq!(w.size(), lambda.n(), "permutation and partition sizes differ");
    let shape: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p > 0).collect();
    let mut rows: Vec<Vec<CellSet>> = shape.iter().map(|&len| vec![CellSet::EMPTY; len]).collect();
    for c in 0..shape.first().copied().unwrap_or(0) {
        let mut col: Vec<usize> = (0..shape.len())
            .filter(|&r| shape[r] > c)
            .map(|r| w.apply(r + 1))
            .collect();
        col.sort_unstable();
        for (r, x) in col.into_iter().enumerate() {
            rows[r][c] = CellSet::singleton(x);
        }
    }
    SetValuedTableau::from_rows_unchecked(lambda.n(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    fn part(v: &[usize], n: usize) -> Partition {
        Partition::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn cellset_basics() {
        let s = CellSet::from_entries([3, 1]);
        assert_eq!((s.smallest(), s.largest(), s.len()), (1, 3, 2));
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(CellSet::singleton(2).to_string(), "2");
        let subsets: Vec<CellSet> = CellSet::all_within(2, 3).collect();
        assert_eq!(
            subsets,
            vec![
                CellSet::from_entries([2]),
                CellSet::from_entries([3]),
                CellSet::from_entries([2, 3])
            ]
        );
        assert_eq!(CellSet::all_within(3, 2).count(), 0);
    }

    #[test]
    fn single_box_svt() {
        let ts = enumerate_svt(&part(&[1], 2), 2);
        let shown: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, vec!["[[1]]", "[[2]]", "[[{1,2}]]"]);
        let excess: Vec<usize> = ts.iter().map(|t| t.excess()).collect();
        assert_eq!(excess, vec![0, 0, 1]);
    }

    #[test]
    fn empty_shape() {
        let ts = enumerate_svt(&Partition::empty(3), 3);
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].weight(), vec![0, 0, 0]);
    }

    #[test]
    fn grothendieck_21_in_two_variables() {
        let g: Poly = grothendieck_svt(&part(&[2, 1], 2));
        assert_eq!(g, Poly::parse("z1^2*z2 + z1*z2^2 + b*z1^2*z2^2", 2).unwrap());
        assert_eq!(enumerate_svt(&part(&[2, 1], 2), 2).len(), 3);
    }

    #[test]
    fn enumeration_is_valid_and_complete() {
        for lambda in Partition::all_within(&part(&[2, 2, 1], 3)) {
            let ts = enumerate_svt(&lambda, 3);
            for t in &ts {
                t.validate().unwrap();
                assert_eq!(t.shape(), lambda);
            }
            // brute force: all assignments of nonempty subsets of {1,2,3}
            let cells = lambda.size();
            let mut count = 0;
            let mut idx = vec![1u32; cells];
            loop {
                let mut it = idx.iter();
                let rows: Vec<Vec<CellSet>> = lambda
                    .parts()
                    .iter()
                    .filter(|&&p| p > 0)
                    .map(|&p| (0..p).map(|_| CellSet::from_bits(it.next().unwrap() << 1)).collect())
                    .collect();
                if SetValuedTableau::new(3, rows).is_ok() {
                    count += 1;
                }
                let mut k = 0;
                while k < cells && idx[k] == 7 {
                    idx[k] = 1;
                    k += 1;
                }
                if k == cells {
                    break;
                }
                idx[k] += 1;
            }
            assert_eq!(ts.len(), count, "{lambda:?}");
        }
    }

    #[test]
    fn validation_errors() {
        assert!(SetValuedTableau::from_ssyt_rows(3, &[vec![2, 1]]).is_err());
        assert!(SetValuedTableau::from_ssyt_rows(3, &[vec![1], vec![1]]).is_err());
        assert!(SetValuedTableau::from_ssyt_rows(3, &[vec![1], vec![2, 3]]).is_err());
        assert!(SetValuedTableau::from_ssyt_rows(2, &[vec![3]]).is_err());
        assert!(SetValuedTableau::from_entries(3, &[vec![vec![1, 2], vec![2]]]).is_ok());
        assert!(SetValuedTableau::from_entries(3, &[vec![vec![1, 2]], vec![vec![2]]]).is_err());
    }

    #[test]
    fn key_tableaux() {
        let l = part(&[4, 2, 1], 3);
        let k = key_tableau(&Permutation::identity(3), &l);
        assert_eq!(k.to_string(), "[[1,1,1,1],[2,2],[3]]");
        let w = Permutation::from_word(3, &[1, 2]).unwrap();
        assert_eq!(key_tableau(&w, &l).to_string(), "[[1,2,2,2],[2,3],[3]]");
        assert_eq!(
            key_tableau(&Permutation::longest(3), &part(&[2, 1], 3)).to_string(),
            "[[2,3],[3]]"
        );
        assert!(key_tableau(&w, &l).is_key());
        assert!(!SetValuedTableau::from_ssyt_rows(3, &[vec![1, 2], vec![3]]).unwrap().is_key());
    }

    #[test]
    fn key_weight_is_w_lambda() {
        let l = part(&[3, 1, 0], 3);
        for w in Permutation::all(3) {
            assert_eq!(key_tableau(&w, &l).weight(), w.act_on(l.parts()));
        }
    }

    #[test]
    fn json_shape() {
        let t = SetValuedTableau::from_entries(2, &[vec![vec![1], vec![1, 2]], vec![vec![2]]]).unwrap();
        assert_eq!(t.to_json().to_string(), r#"{"cells":[[[1],[1,2]],[[2]]],"shape":[2,1]}"#);
    }
}
