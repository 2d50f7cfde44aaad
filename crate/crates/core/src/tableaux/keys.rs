//! Right keys of semistandard tableaux via Demazure crystals, and the Key map
//! `K(T) = k(min(T*)*)` on set-valued tableaux.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::crystal::{component, crystal_f, highest_weight_path, lusztig_involution};
use super::{enumerate_ssyt, enumerate_svt, key_tableau, SetValuedTableau, Ssyt, TableauError};
use crate::algebra::{Coeff, MPoly};
use crate::symgroup::{Partition, Permutation};

/// Right keys of every semistandard tableau of shape `λ`.
///
/// Within each connected component the Demazure crystals
/// `B_e = {u_λ}`, `B_{s_i w} = ⋃_k f_i^k B_w` are built along a reduced word
/// of every minimal coset representative `u`; a tableau's right key is
/// `K_{uλ}` for the shortest `u` with the tableau in `B_u`.
#[derive(Debug, Clone)]
pub struct DemazureTable {
    lambda: Partition,
    key_of: HashMap<Ssyt, Permutation>,
}

impl DemazureTable {
    pub fn new(lambda: &Partition) -> Self {
        let n = lambda.n();
        let mut reps: Vec<Permutation> = Permutation::all(n).filter(|w| w.is_min_rep(lambda)).collect();
        reps.sort_by_key(|w| (w.length(), w.clone()));
        let mut key_of = HashMap::new();
        for t in enumerate_ssyt(lambda, n) {
            if key_of.contains_key(&t) {
                continue;
            }
            let (hw, _) = highest_weight_path(&t);
            let comp = component(&hw);
            for u in &reps {
                for x in demazure_crystal(&hw, &u.reduced_word()) {
                    key_of.entry(x).or_insert_with(|| u.clone());
                }
            }
            debug_assert!(comp.iter().all(|x| key_of.contains_key(x)));
        }
        DemazureTable {
            lambda: lambda.clone(),
            key_of,
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// The minimal coset representative `u` with `k(S) = K_{uλ}`.
    pub fn key_permutation(&self, s: &Ssyt) -> Option<&Permutation> {
        self.key_of.get(s)
    }

    /// The right key `k(S)`.
    pub fn right_key(&self, s: &Ssyt) -> Option<Ssyt> {
        self.key_permutation(s).map(|u| key_tableau(u, &self.lambda))
    }
}

/// `F_{i_1} ⋯ F_{i_k} {hw}` with the last letter applied first.
pub fn demazure_crystal(hw: &Ssyt, word: &[usize]) -> BTreeSet<Ssyt> {
    let mut set = BTreeSet::from([hw.clone()]);
    for &i in word.iter().rev() {
        let mut next = set.clone();
        for t in &set {
            let mut cur = t.clone();
            while let Some(f) = crystal_f(&cur, i) {
                next.insert(f.clone());
                cur = f;
            }
        }
        set = next;
    }
    set
}

/// The Key map `K(T) = k(min(T*)*)`, returned as the minimal coset
/// representative `u` with `K(T) = K_{uλ}`.
pub fn key_map(t: &SetValuedTableau, table: &DemazureTable) -> Permutation {
    let star = lusztig_involution(t);
    let m = star.min_tableau();
    let m_star = lusztig_involution(&m);
    table
        .key_permutation(&m_star)
        .expect("min(T*)* is a semistandard tableau of the same shape")
        .clone()
}

/// Entrywise comparison of two key tableaux of the same shape.
pub fn key_leq(a: &Ssyt, b: &Ssyt) -> Result<bool, TableauError> {
    let sa: Vec<usize> = a.rows().iter().map(Vec::len).collect();
    let sb: Vec<usize> = b.rows().iter().map(Vec::len).collect();
    if sa != sb {
        return Err(TableauError::ShapeMismatch(sa, sb));
    }
    Ok(a.rows()
        .iter()
        .flatten()
        .zip(b.rows().iter().flatten())
        .all(|(x, y)| x.smallest() <= y.smallest()))
}

/// `SVT^n(λ)` split by Key: one class per minimal coset representative.
#[derive(Debug, Clone)]
pub struct KeyClasses {
    lambda: Partition,
    classes: BTreeMap<Permutation, Vec<SetValuedTableau>>,
}

impl KeyClasses {
    pub fn new(lambda: &Partition) -> Self {
        let table = DemazureTable::new(lambda);
        let mut classes: BTreeMap<Permutation, Vec<SetValuedTableau>> = Permutation::all(lambda.n())
            .filter(|w| w.is_min_rep(lambda))
            .map(|w| (w, Vec::new()))
            .collect();
        for t in enumerate_svt(lambda, lambda.n()) {
            let u = key_map(&t, &table);
            classes.get_mut(&u).expect("keys are minimal representatives").push(t);
        }
        KeyClasses {
            lambda: lambda.clone(),
            classes,
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// `{T : K(T) = K_{wλ}}`.
    pub fn class(&self, w: &Permutation) -> &[SetValuedTableau] {
        &self.classes[&w.min_coset_rep(&self.lambda)]
    }

    /// `{T : K(T) <= K_{wλ}}`.
    pub fn filtered(&self, w: &Permutation) -> Vec<&SetValuedTableau> {
        let target = key_tableau(w, &self.lambda);
        self.classes
            .iter()
            .filter(|(u, _)| key_leq(&key_tableau(u, &self.lambda), &target).expect("same shape"))
            .flat_map(|(_, ts)| ts.iter())
            .collect()
    }

    pub fn classes(&self) -> &BTreeMap<Permutation, Vec<SetValuedTableau>> {
        &self.classes
    }

    /// `Σ_{K(T) = K_{wλ}} b^excess z^wt`.
    pub fn class_sum<C: Coeff>(&self, w: &Permutation) -> MPoly<C> {
        MPoly::sum(self.lambda.n(), self.class(w).iter().map(|t| t.monomial()))
    }

    /// `Σ_{K(T) <= K_{wλ}} b^excess z^wt`.
    pub fn filtered_sum<C: Coeff>(&self, w: &Permutation) -> MPoly<C> {
        MPoly::sum(self.lambda.n(), self.filtered(w).iter().map(|t| t.monomial()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::lascoux_atom;
    use crate::Poly;

    fn part(v: &[usize], n: usize) -> Partition {
        Partition::new(v.to_vec(), n).unwrap()
    }

    fn svt(rows: &[Vec<Vec<usize>>]) -> SetValuedTableau {
        SetValuedTableau::from_entries(3, rows).unwrap()
    }

    #[test]
    fn right_key_example() {
        let l = part(&[4, 2, 1], 3);
        let table = DemazureTable::new(&l);
        let s = Ssyt::from_ssyt_rows(3, &[vec![1, 1, 2, 2], vec![2, 3], vec![3]]).unwrap();
        assert_eq!(table.right_key(&s).unwrap().to_string(), "[[1,2,2,2],[2,3],[3]]");
        for w in Permutation::all(3) {
            let k = key_tableau(&w, &l);
            assert_eq!(table.right_key(&k).unwrap(), k);
        }
    }

    #[test]
    fn key_map_examples() {
        let l = part(&[4, 2, 1], 3);
        let table = DemazureTable::new(&l);
        let s1s2 = Permutation::from_word(3, &[1, 2]).unwrap();
        let t = svt(&[vec![vec![1], vec![1], vec![1], vec![2, 3]], vec![vec![2], vec![2]], vec![vec![3]]]);
        let star = lusztig_involution(&t);
        let m_star = lusztig_involution(&star.min_tableau());
        assert_eq!(star.min_tableau().to_string(), "[[1,1,2,3],[2,2],[3]]");
        assert_eq!(m_star.to_string(), "[[1,1,2,2],[2,3],[3]]");
        assert_eq!(key_map(&t, &table), s1s2);

        let t2 = svt(&[vec![vec![1], vec![1], vec![1], vec![1]], vec![vec![2], vec![2, 3]], vec![vec![3]]]);
        let star2 = lusztig_involution(&t2);
        assert_eq!(star2.to_string(), "[[1,1,3,3],[2,{2,3}],[3]]");
        assert_eq!(lusztig_involution(&star2.min_tableau()).to_string(), "[[1,1,1,2],[2,3],[3]]");
        assert_eq!(key_map(&t2, &table), s1s2);
    }

    #[test]
    fn keys_of_key_tableaux() {
        let l = part(&[3, 1, 0], 3);
        let table = DemazureTable::new(&l);
        for w in Permutation::all(3) {
            let k = key_tableau(&w, &l);
            assert_eq!(key_map(&k, &table), w.min_coset_rep(&l));
        }
    }

    #[test]
    fn ten_tableau_class() {
        let l = part(&[4, 2, 1], 3);
        let classes = KeyClasses::new(&l);
        let s1s2 = Permutation::from_word(3, &[1, 2]).unwrap();
        let mut got: Vec<String> = classes.class(&s1s2).iter().map(|t| t.to_string()).collect();
        got.sort();
        let mut expected = vec![
            "[[1,1,1,1],[2,{2,3}],[3]]",
            "[[1,1,1,{1,2}],[2,{2,3}],[3]]",
            "[[1,1,1,{2,3}],[2,2],[3]]",
            "[[1,1,{1,2},2],[2,{2,3}],[3]]",
            "[[1,1,2,{2,3}],[2,2],[3]]",
            "[[1,1,1,2],[2,3],[3]]",
            "[[1,1,1,2],[2,{2,3}],[3]]",
            "[[1,1,2,2],[2,3],[3]]",
            "[[1,1,2,2],[2,{2,3}],[3]]",
            "[[1,2,2,2],[2,3],[3]]",
        ];
        expected.sort();
        assert_eq!(got, expected);
        let sum: Poly = classes.class_sum(&s1s2);
        assert_eq!(sum, lascoux_atom(&s1s2, &l));
    }

    #[test]
    fn beta_zero_atoms_from_right_keys() {
        for lambda in Partition::all_within(&part(&[2, 2, 1], 3)) {
            let table = DemazureTable::new(&lambda);
            for u in Permutation::all(3).filter(|w| w.is_min_rep(&lambda)) {
                let sum = MPoly::sum(
                    3,
                    enumerate_ssyt(&lambda, 3)
                        .iter()
                        .filter(|s| table.key_permutation(s) == Some(&u))
                        .map(|s| s.monomial()),
                );
                let atom: Poly = lascoux_atom(&u, &lambda);
                assert_eq!(sum, atom.at_beta_zero(), "{lambda:?} {u:?}");
            }
        }
    }

    #[test]
    fn key_leq_rejects_shape_mismatch() {
        let a = key_tableau(&Permutation::identity(3), &part(&[2, 1], 3));
        let b = key_tableau(&Permutation::identity(3), &part(&[2, 2], 3));
        assert!(key_leq(&a, &b).is_err());
        assert!(key_leq(&a, &a).unwrap());
    }
}
