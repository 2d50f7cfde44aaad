//! Gelfand–Tsetlin patterns, markings, and the bijection `φ` with set-valued
//! tableaux.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::symgroup::Partition;
use crate::tableaux::{CellSet, SetValuedTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GtError {
    #[error("chain must have n + 1 = {expected} partitions, got {got}")]
    ChainLength { expected: usize, got: usize },
    #[error("level {0} is not the empty partition")]
    NonEmptyBottom(usize),
    #[error("level {level} has more than {level} parts")]
    TooManyParts { level: usize },
    #[error("levels {0} and the next do not interlace")]
    NotInterlacing(usize),
    #[error("entry ({i}, {j}) cannot be marked")]
    BadMark { i: usize, j: usize },
    #[error("tableau does not come from a marked pattern: {0}")]
    NotInImage(String),
}

/// A chain `∅ = λ^(0) ⊆ λ^(1) ⊆ ⋯ ⊆ λ^(n)` with horizontal-strip steps.
///
/// Every level is stored padded to length `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GtPattern {
    chain: Vec<Partition>,
}

impl GtPattern {
    pub fn new(chain: Vec<Partition>) -> Result<Self, GtError> {
        let n = chain.len().saturating_sub(1);
        if chain.is_empty() {
            return Err(GtError::ChainLength { expected: 1, got: 0 });
        }
        let chain: Vec<Partition> = chain
            .into_iter()
            .enumerate()
            .map(|(j, p)| {
                if p.n() > n && p.parts()[n..].iter().any(|&x| x > 0) {
                    Err(GtError::TooManyParts { level: j })
                } else {
                    Ok(Partition::new(p.parts().iter().copied().take(n).collect(), n).expect("prefix of a partition"))
                }
            })
            .collect::<Result<_, _>>()?;
        if chain[0].size() != 0 {
            return Err(GtError::NonEmptyBottom(0));
        }
        for (j, level) in chain.iter().enumerate() {
            if level.length() > j {
                return Err(GtError::TooManyParts { level: j });
            }
        }
        for j in 1..=n {
            let (lo, hi) = (&chain[j - 1], &chain[j]);
            let ok = (0..n).all(|i| hi.get(i + 1) <= lo.get(i) && lo.get(i) <= hi.get(i));
            if !ok {
                return Err(GtError::NotInterlacing(j - 1));
            }
        }
        Ok(GtPattern { chain })
    }

    /// Convenience constructor from unpadded level vectors.
    pub fn from_levels(levels: &[Vec<usize>]) -> Result<Self, GtError> {
        let n = levels.len().saturating_sub(1);
        let chain = levels
            .iter()
            .enumerate()
            .map(|(j, v)| Partition::new(v.clone(), n.max(v.len())).map_err(|_| GtError::NotInterlacing(j)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(chain)
    }

    pub fn n(&self) -> usize {
        self.chain.len() - 1
    }

    /// `λ^(j)`.
    pub fn level(&self, j: usize) -> &Partition {
        &self.chain[j]
    }

    pub fn top(&self) -> &Partition {
        &self.chain[self.n()]
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// `wt_j = |λ^(j)| - |λ^(j-1)|`.
    pub fn weight(&self) -> Vec<usize> {
        (1..=self.n())
            .map(|j| self.chain[j].size() - self.chain[j - 1].size())
            .collect()
    }

    /// Whether `(i, j)` may be marked: `1 <= i <= j - 1` and
    /// `λ^(j)_{i+1} < λ^(j-1)_i`.
    pub fn is_markable(&self, i: usize, j: usize) -> bool {
        j >= 2 && j <= self.n() && i >= 1 && i < j && self.chain[j].get(i) < self.chain[j - 1].get(i - 1)
    }

    /// All markable entries, sorted.
    pub fn markable(&self) -> Vec<(usize, usize)> {
        (2..=self.n())
            .flat_map(|j| (1..j).map(move |i| (i, j)))
            .filter(|&(i, j)| self.is_markable(i, j))
            .collect()
    }

    /// Every pattern with top row `lambda`.
    pub fn all_with_top(lambda: &Partition) -> Vec<GtPattern> {
        let n = lambda.n();
        let mut out = Vec::new();
        let mut chain = vec![Partition::empty(n); n + 1];
        chain[n] = lambda.clone();
        if lambda.length() <= n {
            descend(n, &mut chain, &mut out);
        }
        out.sort();
        out
    }

    /// The unique pattern whose `φ`-image is the tableau with row `i` all `i`.
    pub fn ground(lambda: &Partition) -> GtPattern {
        let n = lambda.n();
        let chain = (0..=n)
            .map(|j| Partition::new(lambda.parts()[..j].to_vec(), n).expect("prefix of a partition"))
            .collect();
        GtPattern { chain }
    }
}

fn descend(j: usize, chain: &mut Vec<Partition>, out: &mut Vec<GtPattern>) {
    if j == 0 {
        out.push(GtPattern { chain: chain.clone() });
        return;
    }
    let hi = chain[j].clone();
    choose_level(j, &hi, &mut Vec::with_capacity(j), chain, out);
}

/// Choose `λ^(j-1)` part by part with `hi_{i+1} <= part_i <= hi_i`.
fn choose_level(j: usize, hi: &Partition, parts: &mut Vec<usize>, chain: &mut Vec<Partition>, out: &mut Vec<GtPattern>) {
    let i = parts.len();
    if i == j - 1 {
        let n = chain.len() - 1;
        chain[j - 1] = Partition::new(parts.clone(), n).expect("interlacing parts are decreasing");
        descend(j - 1, chain, out);
        return;
    }
    for p in hi.get(i + 1)..=hi.get(i) {
        parts.push(p);
        choose_level(j, hi, parts, chain, out);
        parts.pop();
    }
}

impl fmt::Debug for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut levels = self.chain.iter().enumerate().map(|(j, p)| {
            format!("({})", p.parts()[..j].iter().copied().filter(|&x| x > 0).join(","))
        });
        write!(f, "[{}]", levels.join(", "))
    }
}

/// A GT pattern with a set of marked entries `(i, j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MarkedGtPattern {
    pattern: GtPattern,
    marks: BTreeSet<(usize, usize)>,
}

impl MarkedGtPattern {
    pub fn new(pattern: GtPattern, marks: BTreeSet<(usize, usize)>) -> Result<Self, GtError> {
        if let Some(&(i, j)) = marks.iter().find(|&&(i, j)| !pattern.is_markable(i, j)) {
            return Err(GtError::BadMark { i, j });
        }
        Ok(MarkedGtPattern { pattern, marks })
    }

    pub fn unmarked(pattern: GtPattern) -> Self {
        MarkedGtPattern {
            pattern,
            marks: BTreeSet::new(),
        }
    }

    pub fn pattern(&self) -> &GtPattern {
        &self.pattern
    }

    pub fn marks(&self) -> &BTreeSet<(usize, usize)> {
        &self.marks
    }

    /// Weight of `φ(Λ, M)`: the pattern weight plus one `z_j` per mark
    /// `(i, j)`.
    pub fn weight(&self) -> Vec<usize> {
        let mut wt = self.pattern.weight();
        for &(_, j) in &self.marks {
            wt[j - 1] += 1;
        }
        wt
    }

    /// Every marking of `pattern`.
    pub fn all_markings(pattern: &GtPattern) -> Vec<MarkedGtPattern> {
        pattern
            .markable()
            .into_iter()
            .powerset()
            .map(|m| MarkedGtPattern {
                pattern: pattern.clone(),
                marks: m.into_iter().collect(),
            })
            .collect()
    }

    /// `φ`: at step `j`, add `j` to the last cell of row `i` for each mark
    /// `(i, j)`, then fill the strip `λ^(j) / λ^(j-1)` with `{j}`.
    pub fn to_tableau(&self) -> SetValuedTableau {
        let n = self.pattern.n();
        let mut rows: Vec<Vec<CellSet>> = vec![Vec::new(); n];
        for j in 1..=n {
            for &(i, _) in self.marks.iter().filter(|&&(_, mj)| mj == j) {
                let last = rows[i - 1].last_mut().expect("marked rows are nonempty");
                *last = last.with(j);
            }
            let level = self.pattern.level(j);
            for (i, row) in rows.iter_mut().enumerate() {
                row.resize(level.get(i), CellSet::singleton(j));
            }
        }
        rows.retain(|r| !r.is_empty());
        SetValuedTableau::new(n, rows).expect("φ produces a set-valued tableau")
    }

    /// `φ^{-1}`.
    pub fn from_tableau(t: &SetValuedTableau) -> Result<Self, GtError> {
        let n = t.n();
        let chain: Vec<Partition> = (0..=n)
            .map(|j| {
                let parts: Vec<usize> = (0..n)
                    .map(|i| {
                        t.rows()
                            .get(i)
                            .map_or(0, |r| r.iter().filter(|c| c.smallest() <= j).count())
                    })
                    .collect();
                Partition::new(parts, n).map_err(|_| GtError::NotInImage(t.to_string()))
            })
            .collect::<Result<_, _>>()?;
        let pattern = GtPattern::new(chain).map_err(|_| GtError::NotInImage(t.to_string()))?;
        let marks: BTreeSet<(usize, usize)> = t
            .rows()
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                r.iter()
                    .flat_map(move |c| c.iter().skip(1).map(move |j| (i + 1, j)))
            })
            .collect();
        let marked = MarkedGtPattern::new(pattern, marks).map_err(|_| GtError::NotInImage(t.to_string()))?;
        if marked.to_tableau() != *t {
            return Err(GtError::NotInImage(t.to_string()));
        }
        Ok(marked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_svt;

    fn part(v: &[usize], n: usize) -> Partition {
        Partition::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn worked_example() {
        let pattern = GtPattern::from_levels(&[
            vec![],
            vec![6],
            vec![6, 4],
            vec![6, 4, 2],
            vec![7, 4, 4, 0],
        ])
        .unwrap();
        let marks = BTreeSet::from([(1, 2), (2, 3), (1, 4), (3, 4)]);
        let marked = MarkedGtPattern::new(pattern.clone(), marks).unwrap();
        let t = marked.to_tableau();
        assert_eq!(t.to_string(), "[[1,1,1,1,1,{1,2,4},4],[2,2,2,{2,3}],[3,{3,4},4,4]]");
        assert_eq!(MarkedGtPattern::from_tableau(&t).unwrap(), marked);
        // (2,4): λ^(4)_3 = 4 equals λ^(3)_2 = 4
        assert!(!pattern.is_markable(2, 4));
        assert!(!pattern.is_markable(4, 4));
        assert!(MarkedGtPattern::new(pattern, BTreeSet::from([(2, 4)])).is_err());
    }

    #[test]
    fn interlacing_is_enforced() {
        assert!(GtPattern::from_levels(&[vec![], vec![2], vec![1, 1]]).is_err());
        assert!(GtPattern::from_levels(&[vec![], vec![1, 1], vec![1, 1]]).is_err());
        assert!(GtPattern::from_levels(&[vec![1], vec![1]]).is_err());
        assert!(GtPattern::from_levels(&[vec![], vec![2], vec![2, 1]]).is_ok());
    }

    #[test]
    fn counts_match_ssyt() {
        for lambda in Partition::all_within(&part(&[3, 2, 1], 3)) {
            let pats = GtPattern::all_with_top(&lambda);
            let ssyt = crate::tableaux::enumerate_ssyt(&lambda, 3);
            assert_eq!(pats.len(), ssyt.len());
            for p in &pats {
                assert!(MarkedGtPattern::unmarked(p.clone()).to_tableau().is_semistandard());
            }
        }
    }

    #[test]
    fn phi_round_trip_on_21() {
        let lambda = part(&[2, 1], 3);
        let mut images = BTreeSet::new();
        for p in GtPattern::all_with_top(&lambda) {
            for m in MarkedGtPattern::all_markings(&p) {
                let t = m.to_tableau();
                assert_eq!(t.weight(), m.weight());
                assert_eq!(t.excess(), m.marks().len());
                assert_eq!(MarkedGtPattern::from_tableau(&t).unwrap(), m);
                images.insert(t);
            }
        }
        let all: BTreeSet<_> = enumerate_svt(&lambda, 3).into_iter().collect();
        assert_eq!(images, all);
    }

    #[test]
    fn ground_pattern() {
        let lambda = part(&[2, 2, 1], 3);
        let t = MarkedGtPattern::unmarked(GtPattern::ground(&lambda)).to_tableau();
        assert_eq!(t.to_string(), "[[1,1],[2,2],[3]]");
    }
}
