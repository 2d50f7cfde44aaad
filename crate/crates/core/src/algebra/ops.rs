use std::ops::{Add, Mul, Neg, Sub};

use super::{Coeff, MPoly};

// Operator sugar panics on a variable-count mismatch; use the `checked_*`
// methods where the operands come from untrusted input.

impl<C: Coeff> Add for &MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: Self) -> MPoly<C> {
        self.checked_add(rhs).expect("MPoly addition")
    }
}

impl<C: Coeff> Sub for &MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: Self) -> MPoly<C> {
        self.checked_sub(rhs).expect("MPoly subtraction")
    }
}

impl<C: Coeff> Mul for &MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: Self) -> MPoly<C> {
        self.checked_mul(rhs).expect("MPoly multiplication")
    }
}

impl<C: Coeff> Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        self.scale(&(-C::one()))
    }
}

impl<C: Coeff> Add for MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: Self) -> MPoly<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: Self) -> MPoly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: Self) -> MPoly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        -&self
    }
}

impl<C: Coeff> MPoly<C> {
    /// Sum of an iterator, `0` in `n_vars` variables when empty.
    pub fn sum<I: IntoIterator<Item = MPoly<C>>>(n_vars: usize, iter: I) -> Self {
        iter.into_iter()
            .fold(MPoly::zero(n_vars), |acc, p| &acc + &p)
    }

    /// Product of an iterator, `1` in `n_vars` variables when empty.
    pub fn product<I: IntoIterator<Item = MPoly<C>>>(n_vars: usize, iter: I) -> Self {
        iter.into_iter()
            .fold(MPoly::one(n_vars), |acc, p| &acc * &p)
    }
}
