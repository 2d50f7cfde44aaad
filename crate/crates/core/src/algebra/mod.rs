//! Exact multivariate polynomials in `b` (standing for β) and `z1..zN`.
//!
//! A polynomial is a finite map from exponent vectors `(e_b, e_1, ..., e_N)`
//! to nonzero coefficients. The coefficient ring is a type parameter; the
//! crate-level alias [`crate::Poly`] fixes it to arbitrary-precision integers.

mod ops;
mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Num, Signed};
use thiserror::Error;

use crate::symgroup::Permutation;

pub use text::ParsePolyError;

/// Coefficient ring of an [`MPoly`].
///
/// Anything with exact `+ - * / %` and a sign works: `BigInt`, `i64`,
/// `BigRational`. Division is only ever used when the remainder is zero.
pub trait Coeff: Num + Signed + Clone + fmt::Debug + fmt::Display {}

impl<T> Coeff for T where T: Num + Signed + Clone + fmt::Debug + fmt::Display {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable count mismatch: {left} vs {right}")]
    VarMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("nonzero remainder in exact division")]
    NotDivisible,
    #[error("permutation of size {perm} cannot act on {vars} variables")]
    PermutationSize { perm: usize, vars: usize },
}

/// Exponent vector `(e_b, e_1, ..., e_N)`.
///
/// Ordered by total degree first, then lexicographically; the largest
/// monomial is the leading one and is printed first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars + 1])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "exponent vector must include the b slot");
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn beta_degree(&self) -> u32 {
        self.0[0]
    }

    /// Exponents of `z1..zN`.
    pub fn z_exponents(&self) -> &[u32] {
        &self.0[1..]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `b, z1, ..., zN` with coefficients in `C`.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly<C> {
    n_vars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(n_vars: usize) -> Self {
        MPoly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, C::one())
    }

    pub fn constant(n_vars: usize, c: C) -> Self {
        Self::term(n_vars, c, Monomial::one(n_vars))
    }

    pub fn term(n_vars: usize, c: C, m: Monomial) -> Self {
        assert_eq!(m.0.len(), n_vars + 1, "monomial length does not match n_vars");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { n_vars, terms }
    }

    /// The variable `b`.
    pub fn beta(n_vars: usize) -> Self {
        let mut e = vec![0; n_vars + 1];
        e[0] = 1;
        Self::term(n_vars, C::one(), Monomial(e))
    }

    /// The variable `z_i`, 1-based.
    pub fn z(n_vars: usize, i: usize) -> Self {
        assert!((1..=n_vars).contains(&i), "z index {i} out of range 1..={n_vars}");
        let mut e = vec![0; n_vars + 1];
        e[i] = 1;
        Self::term(n_vars, C::one(), Monomial(e))
    }

    /// `z^alpha` for an exponent vector of length `n_vars`.
    pub fn z_power(alpha: &[usize]) -> Self {
        let mut e = Vec::with_capacity(alpha.len() + 1);
        e.push(0);
        e.extend(alpha.iter().map(|&a| a as u32));
        Self::term(alpha.len(), C::one(), Monomial(e))
    }

    /// `b^k z^alpha`.
    pub fn beta_z_power(k: usize, alpha: &[usize]) -> Self {
        let mut e = Vec::with_capacity(alpha.len() + 1);
        e.push(k as u32);
        e.extend(alpha.iter().map(|&a| a as u32));
        Self::term(alpha.len(), C::one(), Monomial(e))
    }

    pub fn from_terms<I>(n_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut p = Self::zero(n_vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), n_vars + 1, "monomial length does not match n_vars");
            p.add_term(m, c);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in print order (leading term first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.n_vars == other.n_vars {
            Ok(())
        } else {
            Err(AlgebraError::VarMismatch {
                left: self.n_vars,
                right: other.n_vars,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.n_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n_vars);
        }
        MPoly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n_vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `f(z_{w(1)}, ..., z_{w(N)})`; `b` is untouched.
    ///
    /// Composes as `permute_z(permute_z(f, u), v) == permute_z(f, v∘u)`.
    pub fn permute_z(&self, w: &Permutation) -> Result<Self, AlgebraError> {
        if w.size() != self.n_vars {
            return Err(AlgebraError::PermutationSize {
                perm: w.size(),
                vars: self.n_vars,
            });
        }
        let mut out = Self::zero(self.n_vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.n_vars + 1];
            e[0] = m.0[0];
            for i in 1..=self.n_vars {
                e[w.apply(i)] += m.0[i];
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Swap `z_i` and `z_{i+1}`.
    pub fn swap_adjacent(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n_vars, "s_{i} out of range for {} variables", self.n_vars);
        MPoly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.swap(i, i + 1);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Exact quotient `f / g`, by long division on leading terms.
    pub fn exact_divide(&self, g: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(g)?;
        let (gm, gc) = g.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quotient = Self::zero(self.n_vars);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.checked_div(gm).ok_or(AlgebraError::NotDivisible)?;
            if !(rc.clone() % gc.clone()).is_zero() {
                return Err(AlgebraError::NotDivisible);
            }
            let qc = rc.clone() / gc.clone();
            let t = Self::term(self.n_vars, qc.clone(), qm.clone());
            rem = &rem - &(&t * g);
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    /// Specialise `b = 0`.
    pub fn at_beta_zero(&self) -> Self {
        MPoly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[0] == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Map coefficients into another ring.
    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(self.n_vars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Re-embed in a ring with `n_vars` z-variables, keeping z1..zk in place.
    pub fn with_n_vars(&self, n_vars: usize) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(n_vars);
        for (m, c) in &self.terms {
            if m.0[n_vars.min(self.n_vars) + 1..].iter().any(|&e| e > 0) {
                return Err(AlgebraError::VarMismatch {
                    left: self.n_vars,
                    right: n_vars,
                });
            }
            let mut e = vec![0; n_vars + 1];
            let k = n_vars.min(self.n_vars) + 1;
            e[..k].copy_from_slice(&m.0[..k]);
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }
}

impl<C: Coeff> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.n_vars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;
    use num_bigint::BigInt;

    fn z(n: usize, i: usize) -> Poly {
        Poly::z(n, i)
    }

    fn p(s: &str, n: usize) -> Poly {
        Poly::parse(s, n).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let f = &(&z(2, 1) + &z(2, 2)) * &(&z(2, 1) - &z(2, 2));
        assert_eq!(f, p("z1^2 - z2^2", 2));
    }

    #[test]
    fn distributivity_with_beta() {
        let f = &(&Poly::one(2) + &(&Poly::beta(2) * &z(2, 1))) * &z(2, 2);
        assert_eq!(f.to_string(), "b*z1*z2 + z2");
    }

    #[test]
    fn ring_identities() {
        let f = p("3*b*z1^2 - z2 + 7", 2);
        assert!((&f * &Poly::zero(2)).is_zero());
        assert_eq!(&f + &Poly::zero(2), f);
        assert_eq!(&f * &Poly::one(2), f);
    }

    #[test]
    fn mismatched_vars_rejected() {
        let err = z(2, 1).checked_add(&z(3, 1)).unwrap_err();
        assert_eq!(err, AlgebraError::VarMismatch { left: 2, right: 3 });
        assert!(z(2, 1).checked_mul(&z(3, 1)).is_err());
    }

    #[test]
    fn permute_examples() {
        let s1 = Permutation::simple(2, 1);
        assert_eq!(z(2, 1).permute_z(&s1).unwrap(), z(2, 2));
        let f = p("z1*z2 + b*z1", 2);
        assert_eq!(f.permute_z(&Permutation::identity(2)).unwrap(), f);
        let w0 = Permutation::longest(3);
        assert_eq!(p("z1^2*z2", 3).permute_z(&w0).unwrap(), p("z2*z3^2", 3));
        assert!(f.permute_z(&w0).is_err());
    }

    #[test]
    fn exact_division_examples() {
        let d = p("z1 - z2", 2);
        assert_eq!(p("z1^2 - z2^2", 2).exact_divide(&d).unwrap(), p("z1 + z2", 2));
        assert_eq!(p("z1^2*z2 - z1*z2^2", 2).exact_divide(&d).unwrap(), p("z1*z2", 2));
        assert_eq!(p("z1^2 + z2", 2).exact_divide(&d), Err(AlgebraError::NotDivisible));
        assert_eq!(p("z1", 2).exact_divide(&Poly::zero(2)), Err(AlgebraError::DivisionByZero));
        // 2z1 / 3 has no integer quotient
        assert_eq!(
            p("2*z1", 2).exact_divide(&Poly::constant(2, BigInt::from(3))),
            Err(AlgebraError::NotDivisible)
        );
    }

    #[test]
    fn two_by_two_grothendieck_determinant_by_hand() {
        // det [[z1^2, z2^2], [1 + b*z1, 1 + b*z2]] expanded by hand
        let num = p("b*z1^2*z2 - b*z1*z2^2 + z1^2 - z2^2", 2);
        let q = num.exact_divide(&p("z1 - z2", 2)).unwrap();
        assert_eq!(q, p("b*z1*z2 + z1 + z2", 2));
    }

    #[test]
    fn generic_over_machine_integers() {
        let a: MPoly<i64> = MPoly::z(2, 1);
        let b: MPoly<i64> = MPoly::z(2, 2);
        let f = &(&a + &b) * &(&a - &b);
        assert_eq!(f.to_string(), "z1^2 - z2^2");
        assert_eq!(f.exact_divide(&(&a - &b)).unwrap(), &a + &b);
    }

    #[test]
    fn beta_zero_specialisation() {
        assert_eq!(p("b*z1 + z2 - 2*b^2", 2).at_beta_zero(), p("z2", 2));
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let a = Monomial::new(vec![0, 2, 0]);
        let b = Monomial::new(vec![0, 1, 1]);
        let c = Monomial::new(vec![1, 0, 0]);
        assert!(a > b);
        assert!(b > c);
    }
}
