use crate::local::LocalizedElem;
use crate::poly::Polynomial;

/// The little bit of ring structure the Schur formulas need, so the same
/// tableau sum can be evaluated on raw polynomials or on localized
/// substitutions.
pub trait RingElem: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl RingElem for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl RingElem for LocalizedElem {
    fn zero() -> Self {
        LocalizedElem::zero()
    }
    fn one() -> Self {
        LocalizedElem::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        LocalizedElem::is_zero(self)
    }
}
