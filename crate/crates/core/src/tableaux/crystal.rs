//! Type A crystal operators on semistandard and set-valued tableaux, and the
//! Lusztig involution.
//!
//! Both operator families use the column signature: a column gets `+` if it
//! contains `i` but not `i+1`, `-` if it contains `i+1` but not `i`. Adjacent
//! `-+` pairs cancel repeatedly; `f_i` acts at the rightmost surviving `+`
//! and `e_i` at the leftmost surviving `-`.

use std::collections::{BTreeSet, VecDeque};

use super::{CellSet, SetValuedTableau, Ssyt};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sign {
    Plus,
    Minus,
}

fn signature(t: &SetValuedTableau, i: usize) -> Vec<(usize, Sign)> {
    (0..t.num_columns())
        .filter_map(|c| {
            let col = t.column(c);
            let has_i = col.iter().any(|s| s.contains(i));
            let has_j = col.iter().any(|s| s.contains(i + 1));
            match (has_i, has_j) {
                (true, false) => Some((c, Sign::Plus)),
                (false, true) => Some((c, Sign::Minus)),
                _ => None,
            }
        })
        .collect()
}

/// Columns carrying an unpaired sign, left to right.
fn reduced_signature(t: &SetValuedTableau, i: usize) -> Vec<(usize, Sign)> {
    let mut stack: Vec<(usize, Sign)> = Vec::new();
    for entry in signature(t, i) {
        if entry.1 == Sign::Plus && stack.last().is_some_and(|top| top.1 == Sign::Minus) {
            stack.pop();
        } else {
            stack.push(entry);
        }
    }
    stack
}

fn row_containing(t: &SetValuedTableau, col: usize, x: usize) -> usize {
    t.column(col)
        .iter()
        .position(|s| s.contains(x))
        .expect("signed column contains the entry")
}

fn check_index(t: &SetValuedTableau, i: usize) {
    assert!(i >= 1 && i < t.n(), "crystal index {i} out of range for n = {}", t.n());
}

/// `f_i` on a semistandard tableau.
pub fn crystal_f(t: &Ssyt, i: usize) -> Option<Ssyt> {
    check_index(t, i);
    assert!(t.is_semistandard(), "crystal_f expects a semistandard tableau");
    let (c, _) = *reduced_signature(t, i)
        .iter()
        .rev()
        .find(|(_, s)| *s == Sign::Plus)?;
    let r = row_containing(t, c, i);
    let mut out = t.clone();
    out.set_cell(r, c, CellSet::singleton(i + 1));
    Some(out)
}

/// `e_i` on a semistandard tableau.
pub fn crystal_e(t: &Ssyt, i: usize) -> Option<Ssyt> {
    check_index(t, i);
    assert!(t.is_semistandard(), "crystal_e expects a semistandard tableau");
    let (c, _) = *reduced_signature(t, i)
        .iter()
        .find(|(_, s)| *s == Sign::Minus)?;
    let r = row_containing(t, c, i + 1);
    let mut out = t.clone();
    out.set_cell(r, c, CellSet::singleton(i));
    Some(out)
}

/// `f_i` on a set-valued tableau.
///
/// Let `b` be the cell holding `i` in the column of the rightmost unpaired
/// `+`. If the cell right of `b` also holds `i`, that `i` is removed and
/// `i+1` is added to `b`; otherwise the `i` in `b` becomes `i+1`.
pub fn svt_crystal_f(t: &SetValuedTableau, i: usize) -> Option<SetValuedTableau> {
    check_index(t, i);
    let (c, _) = *reduced_signature(t, i)
        .iter()
        .rev()
        .find(|(_, s)| *s == Sign::Plus)?;
    let r = row_containing(t, c, i);
    let b = t.rows()[r][c];
    let mut out = t.clone();
    match t.cell(r, c + 1) {
        Some(right) if right.contains(i) => {
            out.set_cell(r, c + 1, right.without(i));
            out.set_cell(r, c, b.with(i + 1));
        }
        _ => out.set_cell(r, c, b.without(i).with(i + 1)),
    }
    debug_assert!(out.validate().is_ok(), "f_{i} broke {t}");
    Some(out)
}

/// `e_i` on a set-valued tableau; the partial inverse of [`svt_crystal_f`].
pub fn svt_crystal_e(t: &SetValuedTableau, i: usize) -> Option<SetValuedTableau> {
    check_index(t, i);
    let (c, _) = *reduced_signature(t, i)
        .iter()
        .find(|(_, s)| *s == Sign::Minus)?;
    let r = row_containing(t, c, i + 1);
    let b = t.rows()[r][c];
    let mut out = t.clone();
    match c.checked_sub(1).and_then(|l| t.cell(r, l)) {
        Some(left) if left.contains(i + 1) => {
            out.set_cell(r, c - 1, left.without(i + 1));
            out.set_cell(r, c, b.with(i));
        }
        _ => out.set_cell(r, c, b.without(i + 1).with(i)),
    }
    debug_assert!(out.validate().is_ok(), "e_{i} broke {t}");
    Some(out)
}

/// Raise to the highest weight, always using the smallest applicable `e_i`.
/// Returns the highest weight element and the indices used, in order.
pub fn highest_weight_path(t: &SetValuedTableau) -> (SetValuedTableau, Vec<usize>) {
    let mut cur = t.clone();
    let mut path = Vec::new();
    'outer: loop {
        for i in 1..t.n() {
            if let Some(next) = svt_crystal_e(&cur, i) {
                cur = next;
                path.push(i);
                continue 'outer;
            }
        }
        return (cur, path);
    }
}

/// Lower to the lowest weight, always using the smallest applicable `f_i`.
pub fn lowest_weight(t: &SetValuedTableau) -> SetValuedTableau {
    let mut cur = t.clone();
    'outer: loop {
        for i in 1..t.n() {
            if let Some(next) = svt_crystal_f(&cur, i) {
                cur = next;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// The Lusztig involution `T*`.
///
/// If `T = f_{i_1} ⋯ f_{i_k} u` for the highest weight `u` of its component,
/// then `T* = e_{n-i_1} ⋯ e_{n-i_k} v` for the lowest weight `v`.
pub fn lusztig_involution(t: &SetValuedTableau) -> SetValuedTableau {
    let n = t.n();
    let (_, path) = highest_weight_path(t);
    let mut cur = lowest_weight(t);
    for &i in path.iter().rev() {
        cur = svt_crystal_e(&cur, n - i).expect("mirrored path stays in the component");
    }
    cur
}

/// The connected component of `t` under all `e_i`, `f_i`.
pub fn component(t: &SetValuedTableau) -> BTreeSet<SetValuedTableau> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([t.clone()]);
    seen.insert(t.clone());
    while let Some(cur) = queue.pop_front() {
        for i in 1..t.n() {
            for next in [svt_crystal_e(&cur, i), svt_crystal_f(&cur, i)].into_iter().flatten() {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::Partition;
    use crate::tableaux::{enumerate_ssyt, enumerate_svt, schur};
    use crate::{MPoly, Poly};

    fn ssyt(n: usize, rows: &[Vec<usize>]) -> Ssyt {
        Ssyt::from_ssyt_rows(n, rows).unwrap()
    }

    fn svt(n: usize, rows: &[Vec<Vec<usize>>]) -> SetValuedTableau {
        SetValuedTableau::from_entries(n, rows).unwrap()
    }

    fn part(v: &[usize], n: usize) -> Partition {
        Partition::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn sl2_string_of_a_row() {
        let a = ssyt(2, &[vec![1, 1]]);
        let b = crystal_f(&a, 1).unwrap();
        assert_eq!(b, ssyt(2, &[vec![1, 2]]));
        let c = crystal_f(&b, 1).unwrap();
        assert_eq!(c, ssyt(2, &[vec![2, 2]]));
        assert!(crystal_f(&c, 1).is_none());
        assert_eq!(crystal_e(&c, 1).unwrap(), b);
    }

    #[test]
    fn column_is_paired() {
        let t = ssyt(2, &[vec![1], vec![2]]);
        assert!(crystal_f(&t, 1).is_none());
        assert!(crystal_e(&t, 1).is_none());
    }

    #[test]
    fn ssyt_operators_are_partial_inverses() {
        for lambda in Partition::all_within(&part(&[3, 2, 1], 3)) {
            for t in enumerate_ssyt(&lambda, 3) {
                for i in 1..3 {
                    if let Some(f) = crystal_f(&t, i) {
                        f.validate().unwrap();
                        assert_eq!(crystal_e(&f, i).as_ref(), Some(&t));
                    }
                    if let Some(e) = crystal_e(&t, i) {
                        assert_eq!(crystal_f(&e, i).as_ref(), Some(&t));
                    }
                }
            }
        }
    }

    #[test]
    fn svt_operators_restrict_to_ssyt_operators() {
        for lambda in Partition::all_within(&part(&[3, 2, 1], 3)) {
            for t in enumerate_ssyt(&lambda, 3) {
                for i in 1..3 {
                    assert_eq!(svt_crystal_f(&t, i), crystal_f(&t, i));
                    assert_eq!(svt_crystal_e(&t, i), crystal_e(&t, i));
                }
            }
        }
    }

    #[test]
    fn svt_operator_contract() {
        for lambda in Partition::all_within(&part(&[3, 2, 1], 3)) {
            for t in enumerate_svt(&lambda, 3) {
                for i in 1..3 {
                    if let Some(f) = svt_crystal_f(&t, i) {
                        f.validate().unwrap();
                        assert_eq!(f.excess(), t.excess());
                        let (wt, wf) = (t.weight(), f.weight());
                        assert_eq!(wf[i - 1] + 1, wt[i - 1]);
                        assert_eq!(wf[i], wt[i] + 1);
                        assert_eq!(svt_crystal_e(&f, i).as_ref(), Some(&t));
                    }
                    if let Some(e) = svt_crystal_e(&t, i) {
                        e.validate().unwrap();
                        assert_eq!(svt_crystal_f(&e, i).as_ref(), Some(&t));
                    }
                }
            }
        }
    }

    #[test]
    fn components_have_schur_characters() {
        for lambda in Partition::all_within(&part(&[2, 2, 1], 3)) {
            let all = enumerate_svt(&lambda, 3);
            let mut seen = BTreeSet::new();
            let mut total = Poly::zero(3);
            for t in &all {
                if seen.contains(t) {
                    continue;
                }
                let comp = component(t);
                let (hw, _) = highest_weight_path(t);
                let mu = Partition::new(hw.weight(), 3).expect("highest weight is dominant");
                let character = MPoly::sum(3, comp.iter().map(|x| x.monomial()));
                let expected = &MPoly::beta_z_power(hw.excess(), &[0, 0, 0]) * &schur(&mu, 3);
                assert_eq!(character, expected, "component of {t}");
                total = &total + &character;
                seen.extend(comp);
            }
            assert_eq!(seen.len(), all.len());
            assert_eq!(total, crate::tableaux::grothendieck_svt(&lambda));
        }
    }

    #[test]
    fn lusztig_example() {
        let t = svt(3, &[vec![vec![1], vec![1], vec![1], vec![2, 3]], vec![vec![2], vec![2]], vec![vec![3]]]);
        let star = lusztig_involution(&t);
        assert_eq!(star.to_string(), "[[1,1,{2,3},3],[2,2],[3]]");
        assert_eq!(lusztig_involution(&star), t);
    }

    #[test]
    fn lusztig_reverses_weight() {
        for lambda in Partition::all_within(&part(&[2, 1, 0], 3)) {
            for t in enumerate_svt(&lambda, 3) {
                let star = lusztig_involution(&t);
                let mut rev = t.weight();
                rev.reverse();
                assert_eq!(star.weight(), rev);
                assert_eq!(lusztig_involution(&star), t);
            }
        }
    }
}
