//! Set-valued skyline tableaux and the maps from marked atom states to them.
//!
//! A skyline diagram is a Young diagram with its rows permuted, so its row
//! lengths form a composition. Cells hold nonempty sets; the largest entry
//! of a cell is its anchor and the others are free.

use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Coeff, MPoly};
use crate::lattice::MarkedState;
use crate::symgroup::{Partition, Permutation};
use crate::tableaux::{descending, CellSet, ReverseTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkylineError {
    #[error("empty cell at ({row}, {col})")]
    EmptyCell { row: usize, col: usize },
    #[error("entry {entry} outside 1..={n}")]
    EntryOutOfRange { entry: usize, n: usize },
    #[error("entry {entry} repeats in column {col}")]
    RepeatedInColumn { col: usize, entry: usize },
    #[error("row condition fails at ({row}, {col})")]
    RowCondition { row: usize, col: usize },
    #[error("triple condition fails for A = ({row}, {col}) and C in row {other}")]
    Triple { row: usize, col: usize, other: usize },
    #[error("free entry {entry} at ({row}, {col}) is not in the cell of the least admissible anchor")]
    FreeEntry { row: usize, col: usize, entry: usize },
    #[error("first column anchor in row {row} is {anchor}")]
    FirstColumn { row: usize, anchor: usize },
    #[error("shape {shape:?} is not a rearrangement of {rows:?}")]
    ShapeMismatch { shape: Vec<usize>, rows: Vec<usize> },
    #[error("no row for anchor {entry} in column {col}")]
    NotPlaceable { col: usize, entry: usize },
}

/// A set-valued skyline tableau; rows and columns are 0-based in the API
/// but row `r` has index `r + 1` in the first-column condition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkylineTableau {
    n: usize,
    rows: Vec<Vec<CellSet>>,
}

impl SkylineTableau {
    /// Checks all five skyline conditions.
    pub fn new(n: usize, rows: Vec<Vec<CellSet>>) -> Result<Self, SkylineError> {
        let t = SkylineTableau { n, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn from_entries(n: usize, rows: &[Vec<Vec<usize>>]) -> Result<Self, SkylineError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|c| CellSet::from_entries(c.iter().copied())).collect())
            .collect();
        Self::new(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<CellSet>] {
        &self.rows
    }

    /// Row lengths.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn cell(&self, row: usize, col: usize) -> Option<CellSet> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn anchor(&self, row: usize, col: usize) -> Option<usize> {
        self.cell(row, col).map(CellSet::largest)
    }

    pub fn weight(&self) -> Vec<usize> {
        let mut wt = vec![0; self.n];
        for x in self.rows.iter().flatten().flat_map(|c| c.iter()) {
            wt[x - 1] += 1;
        }
        wt
    }

    pub fn excess(&self) -> usize {
        self.rows.iter().flatten().map(|c| c.len() - 1).sum()
    }

    pub fn monomial<C: Coeff>(&self) -> MPoly<C> {
        MPoly::beta_z_power(self.excess(), &self.weight())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn validate(&self) -> Result<(), SkylineError> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                if cell.is_empty() {
                    return Err(SkylineError::EmptyCell { row: r, col: c });
                }
                if cell.largest() > self.n {
                    return Err(SkylineError::EntryOutOfRange {
                        entry: cell.largest(),
                        n: self.n,
                    });
                }
            }
        }
        self.check_columns()?;
        self.check_rows()?;
        self.check_triples()?;
        self.check_free_entries()?;
        self.check_first_column()
    }

    fn column_rows(&self, col: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rows.len()).filter(move |&r| self.rows[r].len() > col)
    }

    fn num_columns(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn check_columns(&self) -> Result<(), SkylineError> {
        for col in 0..self.num_columns() {
            let mut seen = CellSet::default();
            for r in self.column_rows(col) {
                let cell = self.rows[r][col];
                if let Some(entry) = cell.iter().find(|&x| seen.contains(x)) {
                    return Err(SkylineError::RepeatedInColumn { col, entry });
                }
                seen = CellSet::from_bits(seen.bits() | cell.bits());
            }
        }
        Ok(())
    }

    fn check_rows(&self) -> Result<(), SkylineError> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, pair) in row.windows(2).enumerate() {
                if pair[0].smallest() < pair[1].largest() {
                    return Err(SkylineError::RowCondition { row: r, col: c + 1 });
                }
            }
        }
        Ok(())
    }

    fn check_triples(&self) -> Result<(), SkylineError> {
        let len = |r: usize| self.rows[r].len();
        let ok = |a: usize, b: usize, c: usize| c < a || b < c;
        for r in 0..self.rows.len() {
            for k in 1..len(r) {
                let (a, b) = (self.rows[r][k].largest(), self.rows[r][k - 1].largest());
                for other in r + 1..self.rows.len() {
                    if len(other) > k && len(r) >= len(other) && !ok(a, b, self.rows[other][k].largest()) {
                        return Err(SkylineError::Triple { row: r, col: k, other });
                    }
                }
                for other in 0..r {
                    if len(other) >= k && len(r) > len(other) && !ok(a, b, self.rows[other][k - 1].largest()) {
                        return Err(SkylineError::Triple { row: r, col: k, other });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_free_entries(&self) -> Result<(), SkylineError> {
        for col in 0..self.num_columns() {
            for r in self.column_rows(col) {
                let cell = self.rows[r][col];
                for f in cell.iter().filter(|&x| x != cell.largest()) {
                    if free_home(&self.rows, col, f) != Some(r) {
                        return Err(SkylineError::FreeEntry { row: r, col, entry: f });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_first_column(&self) -> Result<(), SkylineError> {
        for r in self.column_rows(0) {
            let anchor = self.rows[r][0].largest();
            if anchor != r + 1 {
                return Err(SkylineError::FirstColumn { row: r, anchor });
            }
        }
        Ok(())
    }

    pub fn to_entries(&self) -> Vec<Vec<Vec<usize>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|c| c.iter().collect()).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "shape": self.shape(),
            "cells": self.to_entries(),
        })
    }
}

/// The row whose cell in `col` should hold the free entry `f`: the least
/// anchor above `f` whose right neighbour has anchor at most `f`.
fn free_home(rows: &[Vec<CellSet>], col: usize, f: usize) -> Option<usize> {
    (0..rows.len())
        .filter(|&r| rows[r].len() > col)
        .filter(|&r| rows[r][col].largest() > f)
        .filter(|&r| rows[r].get(col + 1).is_none_or(|right| right.largest() <= f))
        .min_by_key(|&r| rows[r][col].largest())
}

impl fmt::Debug for SkylineTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SkylineTableau {
    /// `[[1],[2,{2,1},1,1],[3,3]]`, sets listed anchor first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.rows
                .iter()
                .map(|r| format!("[{}]", r.iter().map(|c| descending(*c)).join(",")))
                .join(",")
        )
    }
}

/// Every skyline tableau of the given shape with entries in `1..=n`.
///
/// Cells are filled column by column, pruning on the column, row and
/// first-column conditions; complete fillings are then fully validated.
pub fn enumerate_skyline(shape: &[usize], n: usize) -> Vec<SkylineTableau> {
    let cells: Vec<(usize, usize)> = (0..shape.iter().copied().max().unwrap_or(0))
        .flat_map(|c| (0..shape.len()).filter(move |&r| shape[r] > c).map(move |r| (r, c)))
        .collect();
    let mut rows: Vec<Vec<CellSet>> = shape.iter().map(|&l| vec![CellSet::default(); l]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, n, &mut rows, &mut out);
    out.sort();
    out
}

fn fill(cells: &[(usize, usize)], idx: usize, n: usize, rows: &mut Vec<Vec<CellSet>>, out: &mut Vec<SkylineTableau>) {
    let Some(&(r, c)) = cells.get(idx) else {
        let t = SkylineTableau { n, rows: rows.clone() };
        if t.validate().is_ok() {
            out.push(t);
        }
        return;
    };
    let above = (0..r)
        .filter(|&q| rows[q].len() > c)
        .fold(0u32, |acc, q| acc | rows[q][c].bits());
    for cell in CellSet::all_within(1, n) {
        if cell.bits() & above != 0 {
            continue;
        }
        if c == 0 && cell.largest() != r + 1 {
            continue;
        }
        if c > 0 && rows[r][c - 1].smallest() < cell.largest() {
            continue;
        }
        rows[r][c] = cell;
        fill(cells, idx + 1, n, rows, out);
    }
    rows[r][c] = CellSet::default();
}

/// `Σ β^excess z^wt` over skyline tableaux of shape `w·λ`.
pub fn skyline_sum<C: Coeff>(w: &Permutation, lambda: &Partition) -> MPoly<C> {
    let n = lambda.n();
    MPoly::sum(
        n,
        enumerate_skyline(&w.act_on(lambda.parts()), n)
            .iter()
            .map(SkylineTableau::monomial),
    )
}

/// `ψ`: a marked state to the entrywise complement of its set-valued tableau.
pub fn psi(ms: &MarkedState) -> ReverseTableau {
    ms.to_marked_gt().to_tableau().complement()
}

/// `η`: arrange the columns of a reverse tableau into a skyline tableau of
/// the given shape.
///
/// Anchors go column by column in decreasing order, each into the topmost
/// free row of the column whose left neighbour is at least as large; in the
/// first column anchor `e` goes to row `e`. Free entries then join the cell
/// of the least admissible anchor.
pub fn eta(t: &ReverseTableau, shape: &[usize]) -> Result<SkylineTableau, SkylineError> {
    let n = t.n();
    let lengths: Vec<usize> = t.rows().iter().map(Vec::len).collect();
    let mut sorted = shape.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut padded = lengths.clone();
    padded.resize(sorted.len().max(lengths.len()), 0);
    sorted.resize(padded.len(), 0);
    if sorted != padded || shape.len() != n {
        return Err(SkylineError::ShapeMismatch {
            shape: shape.to_vec(),
            rows: lengths,
        });
    }
    let mut rows: Vec<Vec<CellSet>> = shape.iter().map(|&l| vec![CellSet::default(); l]).collect();
    for col in 0..t.num_columns() {
        let mut anchors: Vec<usize> = t.column(col).iter().map(|c| c.largest()).collect();
        anchors.sort_unstable_by(|a, b| b.cmp(a));
        for e in anchors {
            let free = |r: usize| shape[r] > col && rows[r][col].is_empty();
            let target = if col == 0 {
                Some(e - 1).filter(|&r| r < shape.len() && free(r))
            } else {
                (0..shape.len()).find(|&r| free(r) && rows[r][col - 1].largest() >= e)
            };
            let r = target.ok_or(SkylineError::NotPlaceable { col, entry: e })?;
            rows[r][col] = CellSet::singleton(e);
        }
    }
    for col in 0..t.num_columns() {
        for cell in t.column(col) {
            for f in cell.iter().filter(|&x| x != cell.largest()) {
                let r = free_home(&rows, col, f).ok_or(SkylineError::NotPlaceable { col, entry: f })?;
                rows[r][col] = rows[r][col].with(f);
            }
        }
    }
    SkylineTableau::new(n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Flavor, Model};
    use crate::operators::lascoux_atom;
    use crate::Poly;
    use std::collections::BTreeSet;

    fn part(v: &[usize], n: usize) -> Partition {
        Partition::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn displayed_ten_tableaux() {
        let got: BTreeSet<String> = enumerate_skyline(&[1, 4, 2], 3).iter().map(|t| t.to_string()).collect();
        let expected: BTreeSet<String> = [
            "[[1],[2,{2,1},1,1],[3,3]]",
            "[[1],[2,2,{2,1},1],[3,{3,1}]]",
            "[[1],[2,2,{2,1},1],[3,3]]",
            "[[1],[2,2,2,{2,1}],[3,{3,1}]]",
            "[[1],[2,2,2,{2,1}],[3,3]]",
            "[[1],[2,2,1,1],[3,3]]",
            "[[1],[2,2,2,1],[3,{3,1}]]",
            "[[1],[2,2,2,1],[3,3]]",
            "[[1],[2,2,2,2],[3,{3,1}]]",
            "[[1],[2,2,2,2],[3,3]]",
        ]
        .into_iter()
        .map(String::from)
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn straight_shape_has_one_tableau() {
        let all = enumerate_skyline(&[4, 2, 1], 3);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].to_string(), "[[1,1,1,1],[2,2],[3]]");
        let sum: Poly = skyline_sum(&Permutation::identity(3), &part(&[4, 2, 1], 3));
        assert_eq!(sum, MPoly::z_power(&[4, 2, 1]));
        assert_eq!(enumerate_skyline(&[0, 0], 2).len(), 1);
        assert_eq!(enumerate_skyline(&[], 0).len(), 1);
    }

    #[test]
    fn sums_are_atoms() {
        for lambda in Partition::all_within(&part(&[3, 2, 1], 3)) {
            for w in Permutation::all(3) {
                let sum: Poly = skyline_sum(&w, &lambda);
                assert_eq!(sum, lascoux_atom(&w.min_coset_rep(&lambda), &lambda), "{w:?} {lambda:?}");
            }
        }
    }

    #[test]
    fn broken_axioms_are_detected() {
        let e = |rows: &[Vec<Vec<usize>>]| SkylineTableau::from_entries(3, rows).unwrap_err();
        assert!(matches!(e(&[vec![vec![1]], vec![vec![2], vec![2]], vec![vec![3], vec![2]]]), SkylineError::RepeatedInColumn { .. }));
        assert!(matches!(e(&[vec![vec![1]], vec![vec![2], vec![3]], vec![vec![3]]]), SkylineError::RowCondition { .. }));
        assert!(matches!(e(&[vec![vec![2]], vec![vec![1]], vec![]]), SkylineError::FirstColumn { .. }));
        assert!(matches!(e(&[vec![vec![1]], vec![vec![2], vec![1]], vec![vec![3], vec![2]]]), SkylineError::Triple { .. }));
        assert!(matches!(
            e(&[vec![vec![1]], vec![vec![2], vec![2, 1], vec![2], vec![1]], vec![vec![3], vec![3]]]),
            SkylineError::RowCondition { .. }
        ));
        assert!(matches!(e(&[vec![vec![1]], vec![vec![2], vec![2]], vec![vec![3], vec![3, 1]]]), SkylineError::FreeEntry { .. }));
    }

    #[test]
    fn every_single_cell_change_of_a_valid_tableau_is_checked() {
        for t in enumerate_skyline(&[1, 4, 2], 3) {
            let valid: BTreeSet<SkylineTableau> = enumerate_skyline(&[1, 4, 2], 3).into_iter().collect();
            for r in 0..3 {
                for c in 0..t.rows[r].len() {
                    for cell in CellSet::all_within(1, 3) {
                        let mut rows = t.rows.clone();
                        rows[r][c] = cell;
                        let u = SkylineTableau { n: 3, rows };
                        assert_eq!(u.is_valid(), valid.contains(&u));
                    }
                }
            }
        }
    }

    fn example_state() -> crate::lattice::LatticeState {
        let lambda = part(&[4, 2, 1], 3);
        let s1s2 = Permutation::from_word(3, &[1, 2]).unwrap();
        Model::new(Flavor::Atom(s1s2), &lambda, Some(8))
            .unwrap()
            .states()
            .into_iter()
            .find(|st| st.weight::<num_bigint::BigInt>() == Poly::parse("z1^3*z2^2*z3^2 + b*z1^4*z2^2*z3^2", 3).unwrap())
            .unwrap()
    }

    #[test]
    fn psi_and_eta_on_the_worked_example() {
        let st = example_state();
        let marked = MarkedState::all(&st);
        let images: Vec<String> = marked.iter().map(|ms| psi(ms).to_string()).collect();
        assert_eq!(images, vec!["[[3,3,1,1],[2,2],[1]]", "[[3,3,1,1],[2,{2,1}],[1]]"]);
        let sky: Vec<String> = marked
            .iter()
            .map(|ms| eta(&psi(ms), &[1, 4, 2]).unwrap().to_string())
            .collect();
        assert_eq!(sky, vec!["[[1],[2,2,1,1],[3,3]]", "[[1],[2,{2,1},1,1],[3,3]]"]);
        assert_eq!(psi(&marked[1]).max_tableau(), psi(&marked[0]));
    }

    #[test]
    fn eta_psi_is_a_bijection() {
        for lambda in Partition::all_within(&part(&[2, 1, 0], 3)) {
            for w in Permutation::all(3).filter(|w| w.is_min_rep(&lambda)) {
                let shape = w.act_on(lambda.parts());
                let mut image = BTreeSet::new();
                let mut count = 0;
                for st in Model::new(Flavor::Atom(w.clone()), &lambda, None).unwrap().states() {
                    for ms in MarkedState::all(&st) {
                        let t = psi(&ms);
                        assert_eq!(t.monomial::<num_bigint::BigInt>(), ms.monomial());
                        let s = eta(&t, &shape).unwrap();
                        assert_eq!(s.monomial::<num_bigint::BigInt>(), ms.monomial());
                        image.insert(s);
                        count += 1;
                    }
                }
                let all: BTreeSet<SkylineTableau> = enumerate_skyline(&shape, 3).into_iter().collect();
                assert_eq!(image.len(), count);
                assert_eq!(image, all, "{w:?} {lambda:?}");
            }
        }
    }
}
