//! Fractions of polynomials, lazily reduced.
//!
//! Normalization keeps the denominator monic, folds constant denominators
//! into the numerator, and cancels a common monomial factor. Full gcd
//! reduction is available on demand; equality is decided by
//! cross-multiplication and never requires it.

use crate::algebra::poly::{poly_gcd, Exp, FieldElem, Poly, Var};
use crate::algebra::scalar::Scalar;
use std::fmt;

/// `num/den` with `den` nonzero. The pair is not necessarily coprime.
#[derive(Clone)]
pub struct Frac<C: FieldElem> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: FieldElem> Frac<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert!(num.var() == den.var(), "fraction variable mismatch");
        let mut f = Frac { num, den };
        f.normalize();
        f
    }

    /// Already-normalized parts; used by the dense fast path.
    pub(crate) fn from_parts_unchecked(num: Poly<C>, den: Poly<C>) -> Self {
        debug_assert!(!den.is_zero());
        Frac { num, den }
    }

    pub fn from_poly(num: Poly<C>) -> Self {
        let one = num
            .terms()
            .first()
            .map(|(_, c)| c.one_like())
            .unwrap_or_else(|| panic!("cannot infer field for zero polynomial fraction"));
        let den = Poly::constant(num.var().clone(), one);
        Frac { num, den }
    }

    /// Zero with explicit variable and field context.
    pub fn zero_with(var: Var, one: C) -> Self {
        Frac {
            num: Poly::zero(var.clone()),
            den: Poly::constant(var, one),
        }
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    pub fn var(&self) -> &Var {
        self.num.var()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            let one = self.den.leading().unwrap().1.one_like();
            self.den = Poly::constant(self.num.var().clone(), one);
            return;
        }
        // cancel the common monomial factor t^min(ord, ord)
        let o_num = self.num.ord().unwrap().clone();
        let o_den = self.den.ord().unwrap().clone();
        let common = if o_num <= o_den { o_num } else { o_den };
        if !common.is_zero() {
            self.num = shift_down(&self.num, &common);
            self.den = shift_down(&self.den, &common);
        }
        if self.den.degree().map_or(false, |d| d.is_zero()) {
            // Constant denominator: fold into the numerator when that keeps
            // coefficients in normal form, otherwise leave it at the
            // fraction level (e.g. a power of the adic variable).
            let c = &self.den.terms()[0].1;
            if c.is_one() {
                return;
            }
            if c.fold_as_unit() {
                let inv = c.inv();
                self.num = self.num.mul_coeff(&inv);
                let one = inv.one_like();
                self.den = Poly::constant(self.num.var().clone(), one);
            }
        } else if !self.den.is_monic() {
            let inv = self.den.leading().unwrap().1.inv();
            self.num = self.num.mul_coeff(&inv);
            self.den = self.den.mul_coeff(&inv);
        }
    }

    /// Divide out gcd(num, den). Equality and arithmetic do not need this;
    /// it is used for display and to keep long-running computations small.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            return;
        }
        let g = poly_gcd(&self.num, &self.den);
        if g.degree().map_or(false, |d| !d.is_zero()) {
            self.num = self.num.euclid_div(&g).expect("gcd divides num").0;
            self.den = self.den.euclid_div(&g).expect("gcd divides den").0;
            self.normalize();
        }
    }

    pub fn is_zero_impl(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one_impl(&self) -> bool {
        self.num == self.den
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Frac::new(self.num.add(&rhs.num), self.den.clone());
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Frac::new(num, den)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        Frac::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    fn neg_impl(&self) -> Self {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv_impl(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero fraction");
        Frac::new(self.den.clone(), self.num.clone())
    }

    fn characteristic_impl(&self) -> Option<u64> {
        self.den.leading().and_then(|(_, c)| c.characteristic())
    }

    /// e-th power; by the characteristic it is the termwise Frobenius.
    fn pow_impl(&self, e: u64) -> Self {
        if e == 0 {
            return self.one_like_impl();
        }
        if self.characteristic_impl() == Some(e) {
            return Frac::new(self.num.frobenius(e), self.den.frobenius(e));
        }
        let mut acc = self.one_like_impl();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            base = base.mul_impl(&base);
            e >>= 1;
        }
        acc
    }

    /// Scalar-like fractions (constant over constant, recursively) are the
    /// ones safe to fold out of denominators.
    fn scalar_like(&self) -> bool {
        self.num.is_constant()
            && self.den.is_constant()
            && self
                .num
                .terms()
                .first()
                .map_or(true, |(_, c)| c.fold_as_unit())
            && self
                .den
                .terms()
                .first()
                .map_or(true, |(_, c)| c.fold_as_unit())
    }

    fn zero_like_impl(&self) -> Self {
        let one = self.den.leading().unwrap().1.one_like();
        Frac::zero_with(self.num.var().clone(), one)
    }

    fn one_like_impl(&self) -> Self {
        let one = self.den.leading().unwrap().1.one_like();
        let c = Poly::constant(self.num.var().clone(), one);
        Frac {
            num: c.clone(),
            den: c,
        }
    }
}

fn shift_down<C: FieldElem>(p: &Poly<C>, by: &Exp) -> Poly<C> {
    Poly::from_terms(
        p.var().clone(),
        p.terms()
            .iter()
            .map(|(e, c)| (e.sub(by), c.clone()))
            .collect(),
    )
}

/// Cross-multiplication equality, valid for unreduced pairs.
impl<C: FieldElem> PartialEq for Frac<C> {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<C: FieldElem> fmt::Debug for Frac<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

impl FieldElem for Frac<Scalar> {
    fn is_zero(&self) -> bool {
        self.is_zero_impl()
    }
    fn is_one(&self) -> bool {
        self.is_one_impl()
    }
    fn zero_like(&self) -> Self {
        self.zero_like_impl()
    }
    fn one_like(&self) -> Self {
        self.one_like_impl()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.add_impl(rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add_impl(&rhs.neg_impl())
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
    fn neg(&self) -> Self {
        self.neg_impl()
    }
    fn inv(&self) -> Self {
        self.inv_impl()
    }
    fn fold_as_unit(&self) -> bool {
        self.scalar_like()
    }
    fn pow_u64(&self, e: u64) -> Self {
        self.pow_impl(e)
    }
    fn characteristic(&self) -> Option<u64> {
        self.characteristic_impl()
    }
    fn try_fast_mul(a: &Poly<Self>, b: &Poly<Self>) -> Option<Poly<Self>> {
        crate::algebra::fastpoly::try_mul(a, b)
    }
    fn try_fast_divrem(f: &Poly<Self>, phi: &Poly<Self>) -> Option<(Poly<Self>, Poly<Self>)> {
        crate::algebra::fastpoly::try_divrem(f, phi)
    }
}

impl FieldElem for Frac<Frac<Scalar>> {
    fn is_zero(&self) -> bool {
        self.is_zero_impl()
    }
    fn is_one(&self) -> bool {
        self.is_one_impl()
    }
    fn zero_like(&self) -> Self {
        self.zero_like_impl()
    }
    fn one_like(&self) -> Self {
        self.one_like_impl()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.add_impl(rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add_impl(&rhs.neg_impl())
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
    fn neg(&self) -> Self {
        self.neg_impl()
    }
    fn inv(&self) -> Self {
        self.inv_impl()
    }
    fn fold_as_unit(&self) -> bool {
        self.scalar_like()
    }
    fn pow_u64(&self, e: u64) -> Self {
        self.pow_impl(e)
    }
    fn characteristic(&self) -> Option<u64> {
        self.characteristic_impl()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::GroundField;

    fn z() -> Var {
        Var::new("z")
    }

    fn zp(coeffs: &[(u64, i64)]) -> Poly<Scalar> {
        let f = GroundField::Rationals;
        Poly::from_terms(
            z(),
            coeffs.iter().map(|(e, c)| (Exp::from(*e), f.from_int(*c))).collect(),
        )
    }

    #[test]
    fn test_constant_den_folds() {
        let f = Frac::new(zp(&[(1, 3)]), zp(&[(0, 3)]));
        assert_eq!(f.num(), &zp(&[(1, 1)]));
        assert!(f.den().is_constant());
    }

    #[test]
    fn test_monomial_cancellation() {
        // z^3 / z^2 normalizes to z / 1
        let f = Frac::new(zp(&[(3, 1)]), zp(&[(2, 1)]));
        assert_eq!(f.num(), &zp(&[(1, 1)]));
        assert!(f.den().is_constant());
    }

    #[test]
    fn test_cross_mult_equality() {
        // (z^2+z)/(z+1) == z/1 without reduction
        let a = Frac::new(zp(&[(2, 1), (1, 1)]), zp(&[(1, 1), (0, 1)]));
        let b = Frac::from_poly(zp(&[(1, 1)]));
        assert_eq!(a, b);
    }

    #[test]
    fn test_field_axioms_sampled() {
        let a = Frac::new(zp(&[(2, 1), (0, -3)]), zp(&[(1, 1), (0, 1)]));
        let b = Frac::new(zp(&[(1, 5)]), zp(&[(2, 1), (0, 2)]));
        // a * a^-1 = 1
        assert!(a.mul_impl(&a.inv_impl()).is_one_impl());
        // distributivity spot check
        let left = a.add_impl(&b).mul_impl(&a);
        let right = a.mul_impl(&a).add_impl(&b.mul_impl(&a));
        assert_eq!(left, right);
    }

    #[test]
    fn test_reduce() {
        let mut f = Frac::new(
            zp(&[(2, 1), (1, 2), (0, 1)]), // (z+1)^2
            zp(&[(2, 1), (0, -1)]),        // (z+1)(z-1)
        );
        f.reduce();
        assert_eq!(f.num(), &zp(&[(1, 1), (0, 1)]));
        assert_eq!(f.den(), &zp(&[(1, 1), (0, -1)]));
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn test_zero_denominator_panics() {
        let _ = Frac::new(zp(&[(0, 1)]), zp(&[]));
    }
}
