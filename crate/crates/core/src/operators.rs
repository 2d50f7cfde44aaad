//! Demazure–Lascoux operators, Lascoux polynomials and atoms, and the
//! bialternant determinant for symmetric Grothendieck polynomials.

use crate::algebra::{AlgebraError, Coeff, MPoly};
use crate::symgroup::{Partition, Permutation};

fn check_index<C: Coeff>(i: usize, f: &MPoly<C>) -> Result<(), AlgebraError> {
    if i == 0 || i >= f.n_vars() {
        Err(AlgebraError::PermutationSize {
            perm: i + 1,
            vars: f.n_vars(),
        })
    } else {
        Ok(())
    }
}

/// `ϖ_i f = ((z_i + b z_i z_{i+1}) f - (z_{i+1} + b z_i z_{i+1}) s_i f) / (z_i - z_{i+1})`.
pub fn demazure_lascoux<C: Coeff>(i: usize, f: &MPoly<C>) -> Result<MPoly<C>, AlgebraError> {
    check_index(i, f)?;
    let n = f.n_vars();
    let zi = MPoly::z(n, i);
    let zj = MPoly::z(n, i + 1);
    let bzz = &(&MPoly::beta(n) * &zi) * &zj;
    let numerator = &(&(&zi + &bzz) * f) - &(&(&zj + &bzz) * &f.swap_adjacent(i));
    numerator.exact_divide(&(&zi - &zj))
}

/// `ϖ̄_i f = ϖ_i f - f`.
pub fn atom_op<C: Coeff>(i: usize, f: &MPoly<C>) -> Result<MPoly<C>, AlgebraError> {
    Ok(&demazure_lascoux(i, f)? - f)
}

/// Apply `ϖ_{i_1} ⋯ ϖ_{i_k}` (or the barred operators) to `f`; the last
/// letter acts first.
pub fn apply_word<C: Coeff>(word: &[usize], f: &MPoly<C>, atom: bool) -> Result<MPoly<C>, AlgebraError> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = if atom { atom_op(i, &g)? } else { demazure_lascoux(i, &g)? };
    }
    Ok(g)
}

fn check_sizes(w: &Permutation, lambda: &Partition) {
    assert_eq!(w.size(), lambda.n(), "permutation and partition sizes differ");
}

/// `L_{wλ} = ϖ_w z^λ`.
pub fn lascoux<C: Coeff>(w: &Permutation, lambda: &Partition) -> MPoly<C> {
    lascoux_along(&w.reduced_word(), lambda)
}

/// `L̄_{wλ} = ϖ̄_w z^λ`.
pub fn lascoux_atom<C: Coeff>(w: &Permutation, lambda: &Partition) -> MPoly<C> {
    check_sizes(w, lambda);
    apply_word(&w.reduced_word(), &MPoly::z_power(lambda.parts()), true)
        .expect("divided differences of polynomials are polynomials")
}

/// `ϖ_{i_1} ⋯ ϖ_{i_k} z^λ` for an explicit word.
pub fn lascoux_along<C: Coeff>(word: &[usize], lambda: &Partition) -> MPoly<C> {
    apply_word(word, &MPoly::z_power(lambda.parts()), false)
        .expect("divided differences of polynomials are polynomials")
}

/// `ϖ̄_{i_1} ⋯ ϖ̄_{i_k} z^λ` for an explicit word.
pub fn lascoux_atom_along<C: Coeff>(word: &[usize], lambda: &Partition) -> MPoly<C> {
    apply_word(word, &MPoly::z_power(lambda.parts()), true)
        .expect("divided differences of polynomials are polynomials")
}

/// Symmetric Grothendieck polynomial `G_λ = L_{w_0 λ}`.
pub fn grothendieck_ddo<C: Coeff>(lambda: &Partition) -> MPoly<C> {
    lascoux(&Permutation::longest(lambda.n()), lambda)
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant<C: Coeff>(matrix: &[Vec<MPoly<C>>], n_vars: usize) -> MPoly<C> {
    let k = matrix.len();
    if k == 0 {
        return MPoly::one(n_vars);
    }
    let cols: Vec<usize> = (0..k).collect();
    det_minor(matrix, 0, &cols, n_vars)
}

fn det_minor<C: Coeff>(matrix: &[Vec<MPoly<C>>], row: usize, cols: &[usize], n_vars: usize) -> MPoly<C> {
    if cols.len() == 1 {
        return matrix[row][cols[0]].clone();
    }
    let mut acc = MPoly::zero(n_vars);
    for (k, &c) in cols.iter().enumerate() {
        if matrix[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &matrix[row][c] * &det_minor(matrix, row + 1, &rest, n_vars);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `∏_{i<j} (z_i - z_j)`.
pub fn vandermonde<C: Coeff>(n: usize) -> MPoly<C> {
    let mut v = MPoly::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            v = &v * &(&MPoly::z(n, i) - &MPoly::z(n, j));
        }
    }
    v
}

/// `G_λ = det(z_j^{λ_i + n - i} (1 + b z_j)^{i-1}) / ∏_{i<j} (z_i - z_j)`.
pub fn grothendieck_det<C: Coeff>(lambda: &Partition) -> MPoly<C> {
    let n = lambda.n();
    let matrix: Vec<Vec<MPoly<C>>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let zj = MPoly::z(n, j);
                    let one_plus = &MPoly::one(n) + &(&MPoly::beta(n) * &zj);
                    &zj.pow((lambda.get(i - 1) + n - i) as u32) * &one_plus.pow((i - 1) as u32)
                })
                .collect()
        })
        .collect();
    determinant(&matrix, n)
        .exact_divide(&vandermonde(n))
        .expect("the bialternant numerator is antisymmetric")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    fn p(s: &str, n: usize) -> Poly {
        Poly::parse(s, n).unwrap()
    }

    fn part(v: &[usize], n: usize) -> Partition {
        Partition::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn pi_examples() {
        assert_eq!(demazure_lascoux(1, &Poly::one(2)).unwrap(), Poly::one(2));
        assert_eq!(demazure_lascoux(1, &p("z1", 2)).unwrap(), p("z1 + z2 + b*z1*z2", 2));
        assert_eq!(demazure_lascoux(1, &p("z1*z2", 2)).unwrap(), p("z1*z2", 2));
        assert!(demazure_lascoux(2, &p("z1", 2)).is_err());
        assert!(demazure_lascoux(0, &p("z1", 2)).is_err());
    }

    #[test]
    fn atom_op_examples() {
        assert!(atom_op(1, &Poly::one(2)).unwrap().is_zero());
        assert_eq!(atom_op(1, &p("z1", 2)).unwrap(), p("z2 + b*z1*z2", 2));
        assert!(atom_op(1, &p("z1*z2", 2)).unwrap().is_zero());
    }

    #[test]
    fn lascoux_examples() {
        let l = part(&[2, 1, 0], 3);
        assert_eq!(lascoux::<num_bigint::BigInt>(&Permutation::identity(3), &l), p("z1^2*z2", 3));
        assert_eq!(
            lascoux::<num_bigint::BigInt>(&Permutation::longest(2), &part(&[1], 2)),
            p("z1 + z2 + b*z1*z2", 2)
        );
    }

    #[test]
    fn atom_of_421_under_s1s2() {
        let w = Permutation::from_word(3, &[1, 2]).unwrap();
        let atom: Poly = lascoux_atom(&w, &part(&[4, 2, 1], 3));
        assert_eq!(
            atom.to_string(),
            "b^2*z1^4*z2^3*z3^2 + b^2*z1^3*z2^4*z3^2 + b*z1^4*z2^2*z3^2 + 2*b*z1^3*z2^3*z3^2 \
             + 2*b*z1^2*z2^4*z3^2 + z1^3*z2^2*z3^2 + z1^2*z2^3*z3^2 + z1*z2^4*z3^2"
        );
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(grothendieck_det::<num_bigint::BigInt>(&Partition::empty(3)), Poly::one(3));
        assert_eq!(
            grothendieck_det::<num_bigint::BigInt>(&part(&[1], 2)),
            p("z1 + z2 + b*z1*z2", 2)
        );
        let g: Poly = grothendieck_det(&part(&[1], 3));
        assert_eq!(g, grothendieck_ddo(&part(&[1], 3)));
    }

    #[test]
    fn small_determinants() {
        let m = vec![vec![p("z1", 2), p("z2", 2)], vec![p("1", 2), p("1", 2)]];
        assert_eq!(determinant(&m, 2), p("z1 - z2", 2));
        assert_eq!(vandermonde::<num_bigint::BigInt>(2), p("z1 - z2", 2));
    }
}
