//! The symmetric group `S_n` in one-line notation, partitions, and the
//! action of permutations on compositions.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymGroupError {
    #[error("{0:?} is not a permutation of 1..=n")]
    NotAPermutation(Vec<usize>),
    #[error("simple reflection s{index} does not exist in S{n}")]
    BadReflection { index: usize, n: usize },
    #[error("{0:?} is not weakly decreasing")]
    NotAPartition(Vec<usize>),
    #[error("partition {parts:?} has more than {n} nonzero parts")]
    TooManyParts { parts: Vec<usize>, n: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("cannot parse {0:?} as a permutation")]
    Parse(String),
    #[error("cannot parse {0:?} as a partition")]
    ParsePartition(String),
}

/// A permutation `w` of `{1..n}` stored as `(w(1), ..., w(n))`.
///
/// Products compose as functions: `(v * u)(i) = v(u(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, SymGroupError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(SymGroupError::NotAPermutation(one_line));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// The simple transposition `s_i` swapping `i` and `i+1`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s{i} not in S{n}");
        let mut one_line: Vec<usize> = (1..=n).collect();
        one_line.swap(i - 1, i);
        Permutation { one_line }
    }

    pub fn longest(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).rev().collect(),
        }
    }

    /// `s_{i_1} s_{i_2} ... s_{i_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, SymGroupError> {
        let mut w = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(SymGroupError::BadReflection { index: i, n });
            }
            w = w.right_multiply_simple(i);
        }
        Ok(w)
    }

    /// Parse either one-line notation (`2,3,1`) or a word (`s1 s2`, empty for
    /// the identity).
    pub fn parse(s: &str, n: usize) -> Result<Self, SymGroupError> {
        let t = s.trim();
        if t.is_empty() || t == "e" || t == "id" {
            return Ok(Self::identity(n));
        }
        if t.starts_with('s') {
            let word = t
                .split(|c: char| c.is_whitespace() || c == ',' || c == '*')
                .filter(|x| !x.is_empty())
                .map(|x| {
                    x.strip_prefix('s')
                        .and_then(|d| d.parse::<usize>().ok())
                        .ok_or_else(|| SymGroupError::Parse(s.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Self::from_word(n, &word);
        }
        let one_line = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| SymGroupError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if one_line.len() != n {
            return Err(SymGroupError::SizeMismatch(one_line.len(), n));
        }
        Self::new(one_line)
    }

    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size(), "composing permutations of different sizes");
        Permutation {
            one_line: other.one_line.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.size()];
        for (k, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { one_line: inv }
    }

    /// `w s_i`: swaps positions `i` and `i+1` of the one-line notation.
    pub fn right_multiply_simple(&self, i: usize) -> Self {
        let mut one_line = self.one_line.clone();
        one_line.swap(i - 1, i);
        Permutation { one_line }
    }

    /// `s_i w`: swaps the values `i` and `i+1`.
    pub fn left_multiply_simple(&self, i: usize) -> Self {
        Permutation {
            one_line: self
                .one_line
                .iter()
                .map(|&v| {
                    if v == i {
                        i + 1
                    } else if v == i + 1 {
                        i
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        self.one_line
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count()
    }

    /// Inversions as value pairs `(a, b)` with `a < b` and `b` appearing to the
    /// left of `a` in one-line notation, sorted by position.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                let (x, y) = (self.one_line[p], self.one_line[q]);
                if x > y {
                    out.push((y, x));
                }
            }
        }
        out
    }

    /// Reduced word `[i_1, ..., i_l]` with `w = s_{i_1} ... s_{i_l}`.
    ///
    /// Built by stripping the smallest right descent until reaching the
    /// identity; the stripped letters are read back to front.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.size()).find(|&i| w.apply(i) > w.apply(i + 1)) {
            rev.push(i);
            w = w.right_multiply_simple(i);
        }
        rev.reverse();
        rev
    }

    /// Every reduced word of `w`, in lexicographic order.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 1..self.size() {
            if self.apply(i) > self.apply(i + 1) {
                for mut prefix in self.right_multiply_simple(i).all_reduced_words() {
                    prefix.push(i);
                    out.push(prefix);
                }
            }
        }
        out.sort();
        out
    }

    /// Strong Bruhat order via the tableau criterion: for every `k`, the sorted
    /// first `k` values of `self` are entrywise at most those of `other`.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        assert_eq!(self.size(), other.size(), "Bruhat comparison across sizes");
        (1..=self.size()).all(|k| {
            let mut a = self.one_line[..k].to_vec();
            let mut b = other.one_line[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            a.iter().zip(&b).all(|(x, y)| x <= y)
        })
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .map(|one_line| Permutation { one_line })
    }

    /// Left action on a composition: entry `i` of `alpha` moves to position
    /// `w(i)`, so `(w·alpha)_j = alpha_{w^{-1}(j)}`.
    pub fn act_on(&self, alpha: &[usize]) -> Vec<usize> {
        assert_eq!(alpha.len(), self.size(), "composition length mismatch");
        let mut out = vec![0; alpha.len()];
        for (i, &a) in alpha.iter().enumerate() {
            out[self.one_line[i] - 1] = a;
        }
        out
    }

    /// The shortest `u` with `u·lambda = w·lambda`.
    ///
    /// Equal parts of `lambda` are sent to the positions they occupy in
    /// `w·lambda` in increasing order, which makes `u` the unique minimal
    /// element of the coset `w Stab(lambda)`.
    pub fn min_coset_rep(&self, lambda: &Partition) -> Permutation {
        let target = self.act_on(lambda.parts());
        let mut used = vec![false; target.len()];
        let one_line = lambda
            .parts()
            .iter()
            .map(|&part| {
                let j = (0..target.len())
                    .find(|&j| !used[j] && target[j] == part)
                    .expect("composition is a rearrangement of lambda");
                used[j] = true;
                j + 1
            })
            .collect();
        Permutation { one_line }
    }

    pub fn is_min_rep(&self, lambda: &Partition) -> bool {
        self.min_coset_rep(lambda) == *self
    }

    /// Word form `s1 s2 ...`, `e` for the identity.
    pub fn word_string(&self) -> String {
        let word = self.reduced_word();
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| format!("s{i}")).join(" ")
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line.iter().join(","))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line.iter().join(","))
    }
}

/// A weakly decreasing sequence of nonnegative integers, padded with zeros to
/// a fixed length `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Pads `parts` with zeros up to length `n`.
    pub fn new(mut parts: Vec<usize>, n: usize) -> Result<Self, SymGroupError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymGroupError::NotAPartition(parts));
        }
        while parts.len() > n && parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > n {
            return Err(SymGroupError::TooManyParts { parts, n });
        }
        parts.resize(n, 0);
        Ok(Partition { parts })
    }

    /// Comma-separated parts; a single `0` or the empty string is the empty
    /// partition.
    pub fn parse(s: &str, n: usize) -> Result<Self, SymGroupError> {
        let parts = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| SymGroupError::ParsePartition(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts, n)
    }

    pub fn empty(n: usize) -> Self {
        Partition { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of entries, zeros included.
    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..self.n().max(other.n())).all(|i| other.get(i) <= self.get(i))
    }

    /// Simple reflections fixing `self`.
    pub fn stabilizer_generators(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.parts[i - 1] == self.parts[i])
            .collect()
    }

    /// All partitions of length at most `bound.n()` contained in `bound`.
    pub fn all_within(bound: &Partition) -> Vec<Partition> {
        fn rec(bound: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == bound.len() {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in 0..=cap.min(bound[i]) {
                cur.push(p);
                rec(bound, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&bound.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}
