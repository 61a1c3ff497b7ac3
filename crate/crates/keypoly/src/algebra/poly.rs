//! Sparse univariate polynomials over a coefficient field.
//!
//! Exponents are arbitrary-precision (the tower's z-exponents grow like
//! 2^{2j}p^j and overflow fixed-width integers at depth); small exponents
//! are stored inline. Terms are kept sorted by strictly increasing exponent
//! with no zero coefficients; the zero polynomial is the empty term list.

use num::bigint::BigUint;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// A variable tag. Cheap to clone; equality is by name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A nonnegative exponent, inline for values that fit in a `u64`.
/// Invariant: `Big` is used only for values above `u64::MAX`, so the derived
/// ordering (all `Small` before all `Big`) is the numeric one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exp {
    Small(u64),
    Big(Box<BigUint>),
}

impl Exp {
    pub fn zero() -> Self {
        Exp::Small(0)
    }

    pub fn one() -> Self {
        Exp::Small(1)
    }

    pub fn from_biguint(b: BigUint) -> Self {
        match b.to_u64_digits().as_slice() {
            [] => Exp::Small(0),
            [d] => Exp::Small(*d),
            _ => Exp::Big(Box::new(b)),
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        match self {
            Exp::Small(n) => BigUint::from(*n),
            Exp::Big(b) => (**b).clone(),
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        match self {
            Exp::Small(n) => Some(*n),
            Exp::Big(_) => None,
        }
    }

    pub fn to_usize(&self) -> Option<usize> {
        self.to_u64().and_then(|n| usize::try_from(n).ok())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Exp::Small(0))
    }

    pub fn add(&self, rhs: &Exp) -> Exp {
        match (self, rhs) {
            (Exp::Small(a), Exp::Small(b)) => match a.checked_add(*b) {
                Some(s) => Exp::Small(s),
                None => Exp::from_biguint(BigUint::from(*a) + BigUint::from(*b)),
            },
            _ => Exp::from_biguint(self.to_biguint() + rhs.to_biguint()),
        }
    }

    /// `self - rhs`; panics if the result would be negative.
    pub fn sub(&self, rhs: &Exp) -> Exp {
        match (self, rhs) {
            (Exp::Small(a), Exp::Small(b)) => {
                Exp::Small(a.checked_sub(*b).expect("negative exponent"))
            }
            _ => {
                let (a, b) = (self.to_biguint(), rhs.to_biguint());
                assert!(a >= b, "negative exponent");
                Exp::from_biguint(a - b)
            }
        }
    }

    pub fn mul_u64(&self, k: u64) -> Exp {
        match self {
            Exp::Small(a) => match a.checked_mul(k) {
                Some(m) => Exp::Small(m),
                None => Exp::from_biguint(BigUint::from(*a) * BigUint::from(k)),
            },
            Exp::Big(b) => Exp::from_biguint((**b).clone() * BigUint::from(k)),
        }
    }
}

impl From<u64> for Exp {
    fn from(n: u64) -> Self {
        Exp::Small(n)
    }
}

impl fmt::Display for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exp::Small(n) => write!(f, "{}", n),
            Exp::Big(b) => write!(f, "{}", b),
        }
    }
}

impl fmt::Debug for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Field operations needed from a coefficient domain. Constants are derived
/// from existing elements (`zero_like`/`one_like`) so prime-field elements
/// can carry their modulus.
pub trait FieldElem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;

    fn pow_u64(&self, e: u64) -> Self {
        if e == 0 {
            return self.one_like();
        }
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// True when dividing a polynomial's coefficients by this element keeps
    /// them in normal form (plain scalars do; a fraction only when it is
    /// itself scalar-like). Fractions use this to decide whether a constant
    /// denominator is folded into the numerator or kept at the fraction
    /// level, where powers of the adic variable stay visible and cheap.
    fn fold_as_unit(&self) -> bool {
        true
    }

    /// The characteristic of the coefficient field, when positive and
    /// known. Powers by the characteristic may then be taken termwise.
    fn characteristic(&self) -> Option<u64> {
        None
    }

    /// Optional dense fast path for products of polynomials over this field.
    /// `None` means "use the generic sparse algorithm".
    fn try_fast_mul(_a: &Poly<Self>, _b: &Poly<Self>) -> Option<Poly<Self>> {
        None
    }

    /// Optional fast path for Euclidean division by a monic divisor.
    fn try_fast_divrem(_f: &Poly<Self>, _phi: &Poly<Self>) -> Option<(Poly<Self>, Poly<Self>)> {
        None
    }
}

impl FieldElem for crate::algebra::scalar::Scalar {
    fn is_zero(&self) -> bool {
        Self::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Self::is_one(self)
    }
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Self::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Self::neg(self)
    }
    fn inv(&self) -> Self {
        Self::inv(self)
    }
    fn pow_u64(&self, e: u64) -> Self {
        Self::pow_u64(self, e)
    }
    fn characteristic(&self) -> Option<u64> {
        match self.field() {
            crate::algebra::scalar::GroundField::Fp(p) => Some(p),
            crate::algebra::scalar::GroundField::Rationals => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("divisor is not monic")]
    NotMonic,
    #[error("divisor is constant")]
    ConstantDivisor,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(String, String),
}

/// Sparse polynomial in one variable over `C`.
#[derive(Clone, PartialEq)]
pub struct Poly<C: FieldElem> {
    var: Var,
    terms: Vec<(Exp, C)>,
}

impl<C: FieldElem> Poly<C> {
    pub fn zero(var: Var) -> Self {
        Poly { var, terms: Vec::new() }
    }

    pub fn constant(var: Var, c: C) -> Self {
        Self::monomial(var, Exp::zero(), c)
    }

    pub fn monomial(var: Var, exp: Exp, c: C) -> Self {
        if c.is_zero() {
            Poly { var, terms: Vec::new() }
        } else {
            Poly { var, terms: vec![(exp, c)] }
        }
    }

    /// Terms already strictly increasing in exponent with no zero
    /// coefficients; checked only in debug builds.
    pub(crate) fn from_sorted_terms(var: Var, terms: Vec<(Exp, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { var, terms }
    }

    /// Build from arbitrary (exponent, coefficient) pairs: sorts, merges
    /// duplicates, drops zeros.
    pub fn from_terms(var: Var, terms: Vec<(Exp, C)>) -> Self {
        let mut map: BTreeMap<Exp, C> = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            match map.remove(&e) {
                Some(prev) => {
                    let s = prev.add(&c);
                    if !s.is_zero() {
                        map.insert(e, s);
                    }
                }
                None => {
                    map.insert(e, c);
                }
            }
        }
        Poly { var, terms: map.into_iter().collect() }
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn terms(&self) -> &[(Exp, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.first().map_or(true, |(e, _)| e.is_zero())
    }

    /// The constant coefficient (zero_like of leading if absent and poly
    /// nonzero; `None` for the zero polynomial with no context).
    pub fn constant_coeff(&self) -> Option<C> {
        if self.is_zero() {
            return None;
        }
        match self.terms.first() {
            Some((e, c)) if e.is_zero() => Some(c.clone()),
            _ => Some(self.terms[0].1.zero_like()),
        }
    }

    pub fn degree(&self) -> Option<&Exp> {
        self.terms.last().map(|(e, _)| e)
    }

    /// Degree as usize; zero polynomial and oversized degrees return None.
    pub fn degree_usize(&self) -> Option<usize> {
        self.degree().and_then(|e| e.to_usize())
    }

    /// Order: the least exponent with nonzero coefficient.
    pub fn ord(&self) -> Option<&Exp> {
        self.terms.first().map(|(e, _)| e)
    }

    pub fn leading(&self) -> Option<(&Exp, &C)> {
        self.terms.last().map(|(e, c)| (e, c))
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |(_, c)| c.is_one())
    }

    pub fn coeff(&self, e: &Exp) -> Option<&C> {
        self.terms
            .binary_search_by(|(te, _)| te.cmp(e))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    fn check_var(&self, rhs: &Poly<C>) {
        assert!(
            self.var == rhs.var,
            "variable mismatch: {} vs {}",
            self.var,
            rhs.var
        );
    }

    pub fn add(&self, rhs: &Poly<C>) -> Poly<C> {
        self.check_var(rhs);
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &rhs.terms[j];
            match ea.cmp(eb) {
                std::cmp::Ordering::Less => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((eb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ca.add(cb);
                    if !s.is_zero() {
                        out.push((ea.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs.terms[j..].iter().cloned());
        Poly { var: self.var.clone(), terms: out }
    }

    pub fn neg(&self) -> Poly<C> {
        Poly {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Poly<C>) -> Poly<C> {
        self.add(&rhs.neg())
    }

    pub fn mul_coeff(&self, c: &C) -> Poly<C> {
        if c.is_zero() {
            return Poly::zero(self.var.clone());
        }
        Poly {
            var: self.var.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(e, a)| {
                    let m = a.mul(c);
                    (!m.is_zero()).then(|| (e.clone(), m))
                })
                .collect(),
        }
    }

    /// Multiply by `c · var^exp`.
    pub fn mul_monomial(&self, exp: &Exp, c: &C) -> Poly<C> {
        if c.is_zero() {
            return Poly::zero(self.var.clone());
        }
        Poly {
            var: self.var.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(e, a)| {
                    let m = a.mul(c);
                    (!m.is_zero()).then(|| (e.add(exp), m))
                })
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly<C>) -> Poly<C> {
        self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.var.clone());
        }
        if let Some(fast) = C::try_fast_mul(self, rhs) {
            return fast;
        }
        let mut map: BTreeMap<Exp, C> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.add(eb);
                let m = ca.mul(cb);
                if m.is_zero() {
                    continue;
                }
                match map.remove(&e) {
                    Some(prev) => {
                        let s = prev.add(&m);
                        if !s.is_zero() {
                            map.insert(e, s);
                        }
                    }
                    None => {
                        map.insert(e, m);
                    }
                }
            }
        }
        Poly { var: self.var.clone(), terms: map.into_iter().collect() }
    }

    pub fn pow(&self, e: u64) -> Poly<C> {
        if e == 0 {
            let one = self
                .terms
                .first()
                .map(|(_, c)| c.one_like())
                .expect("0^0 over an empty polynomial");
            return Poly::constant(self.var.clone(), one);
        }
        let mut acc: Option<Poly<C>> = None;
        let mut base = self.clone();
        let mut e = e;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul(&base),
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.unwrap()
    }

    /// Termwise p-th power: `Σ c·x^e ↦ Σ c^p·x^{pe}`. Equals `pow(p)` over a
    /// coefficient domain of characteristic p (Frobenius); callers are
    /// responsible for the characteristic.
    pub fn frobenius(&self, p: u64) -> Poly<C> {
        Poly {
            var: self.var.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.mul_u64(p), c.pow_u64(p)))
                .collect(),
        }
    }

    /// Euclidean division by a monic divisor of positive degree:
    /// `self = q·phi + r` with `deg r < deg phi`, exactly.
    pub fn euclid_div(&self, phi: &Poly<C>) -> Result<(Poly<C>, Poly<C>), AlgebraError> {
        if self.var != phi.var {
            return Err(AlgebraError::VariableMismatch(
                self.var.to_string(),
                phi.var.to_string(),
            ));
        }
        if phi.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if phi.degree().map_or(true, |d| d.is_zero()) {
            return Err(AlgebraError::ConstantDivisor);
        }
        if !phi.is_monic() {
            return Err(AlgebraError::NotMonic);
        }
        if let Some(pair) = C::try_fast_divrem(self, phi) {
            return Ok(pair);
        }
        Ok(self.euclid_div_classical(phi))
    }

    /// Schoolbook division; preconditions already checked.
    pub(crate) fn euclid_div_classical(&self, phi: &Poly<C>) -> (Poly<C>, Poly<C>) {
        let dphi = phi.degree().unwrap().clone();
        let mut q: Vec<(Exp, C)> = Vec::new();
        let mut r = self.clone();
        while let Some((dr, lc)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if dr < dphi {
                break;
            }
            let gap = dr.sub(&dphi);
            r = r.sub(&phi.mul_monomial(&gap, &lc));
            debug_assert!(r.degree().map_or(true, |d| *d < dr));
            q.push((gap, lc));
        }
        q.reverse();
        (Poly { var: self.var.clone(), terms: q }, r)
    }

    pub fn map_coeffs<D: FieldElem>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly {
            var: self.var.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(e, c)| {
                    let d = f(c);
                    (!d.is_zero()).then(|| (e.clone(), d))
                })
                .collect(),
        }
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Monic gcd via the Euclidean algorithm over a coefficient field.
pub fn poly_gcd<C: FieldElem>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let lc_inv = b.leading().unwrap().1.inv();
        let monic = b.mul_coeff(&lc_inv);
        let r = if monic.degree().map_or(true, |d| d.is_zero()) {
            Poly::zero(a.var().clone())
        } else {
            a.euclid_div(&monic).expect("gcd division").1
        };
        a = monic;
        b = r;
    }
    if let Some((_, lc)) = a.leading() {
        let inv = lc.inv();
        return a.mul_coeff(&inv);
    }
    a
}

impl<C: FieldElem> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                if e.is_zero() {
                    format!("{:?}", c)
                } else if *e == Exp::one() {
                    format!("{:?}*{}", c, self.var)
                } else {
                    format!("{:?}*{}^{}", c, self.var, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
