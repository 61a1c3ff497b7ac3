//! Gauss, augmented, truncated and limit valuations, evaluated exactly via
//! standard expansions and min-formulas, together with the effective
//! equivalence and key-divisibility predicates.

pub mod config;
pub mod limit;

use crate::algebra::expansion::phi_expansion;
use crate::algebra::poly::{AlgebraError, Exp, FieldElem, Poly, Var};
use crate::algebra::tower::{TowerElem, ZRat};
use crate::algebra::Frac;
use crate::values::ExtValue;
use num::bigint::BigInt;
use num::rational::BigRational;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

pub use limit::{limit_augment, DegreeProfile, KeyPolyGenerator, LimitFamily};

#[derive(Debug, Error, Clone)]
pub enum ValuationError {
    #[error("pivot is not monic")]
    NotMonic,
    #[error("pivot must have positive degree")]
    ConstantPivot,
    #[error("GammaNotGreater: {gamma} is not strictly above the current value {current}")]
    GammaNotGreater { gamma: ExtValue, current: ExtValue },
    #[error("at step {step}: {source}")]
    AtStep {
        step: usize,
        #[source]
        source: Box<ValuationError>,
    },
    #[error("LambdaNotAboveFamily: {lambda} does not dominate the family ({detail})")]
    LambdaNotAboveFamily { lambda: ExtValue, detail: String },
    #[error("GeneratorExhausted: the limit family cannot produce index {index}")]
    GeneratorExhausted { index: usize },
    #[error("value must be finite")]
    NotFinite,
    #[error("wrong tower level: expected {expected}, got {got}")]
    WrongLevel {
        expected: &'static str,
        got: &'static str,
    },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A valuation on elements of `T`.
pub trait Valuation<T>: Send + Sync + fmt::Debug {
    fn value(&self, t: &T) -> Result<ExtValue, ValuationError>;
}

/// j·γ for an expansion index.
pub(crate) fn scale_value(v: &ExtValue, e: &Exp) -> ExtValue {
    if e.is_zero() {
        return ExtValue::zero();
    }
    match v {
        ExtValue::Top => ExtValue::Top,
        ExtValue::Finite(q) => {
            ExtValue::Finite(q * BigRational::from_integer(BigInt::from(e.to_biguint())))
        }
    }
}

/// a − b where b must be finite (denominators are nonzero).
pub(crate) fn sub_value(a: &ExtValue, b: &ExtValue) -> Result<ExtValue, ValuationError> {
    match (a, b) {
        (_, ExtValue::Top) => Err(ValuationError::NotFinite),
        (ExtValue::Top, _) => Ok(ExtValue::Top),
        (ExtValue::Finite(x), ExtValue::Finite(y)) => Ok(ExtValue::Finite(x - y)),
    }
}

// ---- base valuations on the bottom of the tower ----

/// Valuation of k(z): trivial (0 on nonzero elements) or t-adic
/// (ord of the numerator minus ord of the denominator).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseValuation {
    Trivial,
    TAdic,
}

impl Valuation<ZRat> for BaseValuation {
    fn value(&self, a: &ZRat) -> Result<ExtValue, ValuationError> {
        if a.num().is_zero() {
            return Ok(ExtValue::Top);
        }
        match self {
            BaseValuation::Trivial => Ok(ExtValue::zero()),
            BaseValuation::TAdic => {
                let on = BigInt::from(a.num().ord().unwrap().to_biguint());
                let od = BigInt::from(a.den().ord().unwrap().to_biguint());
                Ok(ExtValue::Finite(BigRational::from_integer(on - od)))
            }
        }
    }
}

/// The t-adic valuation on the level-one fraction field, with a level check.
pub fn z_adic(a: &TowerElem) -> Result<ExtValue, ValuationError> {
    match a {
        TowerElem::ZLevel(r) => BaseValuation::TAdic.value(r),
        other => Err(ValuationError::WrongLevel {
            expected: "k(z)",
            got: other.level_name(),
        }),
    }
}

/// Extension of a polynomial-ring valuation to its fraction field:
/// value(num) − value(den).
pub struct FracVal<C: FieldElem> {
    inner: Arc<dyn Valuation<Poly<C>>>,
}

impl<C: FieldElem> FracVal<C> {
    pub fn new(inner: Arc<dyn Valuation<Poly<C>>>) -> Self {
        FracVal { inner }
    }
}

impl<C: FieldElem> fmt::Debug for FracVal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FracVal({:?})", self.inner)
    }
}

impl<C: FieldElem> Valuation<Frac<C>> for FracVal<C> {
    fn value(&self, a: &Frac<C>) -> Result<ExtValue, ValuationError> {
        let vn = self.inner.value(a.num())?;
        let vd = self.inner.value(a.den())?;
        sub_value(&vn, &vd)
    }
}

// ---- the valuation-spec tree ----

/// A valuation of a polynomial ring `Poly<C>`, described by how it was
/// built. Augmented steps share their inner spec through `Arc`, so chains
/// are cheap to extend and truncate.
#[derive(Debug)]
pub enum ValuationSpec<C: FieldElem> {
    /// Monomial valuation: min over terms of inner(dᵢ) + i·β.
    Gauss {
        inner: Arc<dyn Valuation<C>>,
        var: Var,
        beta: ExtValue,
    },
    /// min over the φ-expansion of inner(f_j) + j·γ, with γ strictly above
    /// the inner value of φ.
    Augmented {
        inner: Arc<ValuationSpec<C>>,
        phi: Poly<C>,
        gamma: ExtValue,
    },
    /// Stable value along an infinite family of augmentations.
    Limit(Arc<LimitFamily<C>>),
    /// min over the φ-expansion of family-stable coefficient values plus
    /// j·λ, for a limit key polynomial φ.
    LimitAugmented {
        family: Arc<LimitFamily<C>>,
        phi: Poly<C>,
        lambda: ExtValue,
    },
}

impl<C: FieldElem> ValuationSpec<C> {
    pub fn gauss(
        inner: Arc<dyn Valuation<C>>,
        var: Var,
        beta: ExtValue,
    ) -> Result<Self, ValuationError> {
        if beta.is_top() {
            return Err(ValuationError::NotFinite);
        }
        Ok(ValuationSpec::Gauss { inner, var, beta })
    }

    /// Augment by a monic pivot of positive degree, requiring
    /// γ > inner(φ) strictly.
    pub fn augment(
        inner: Arc<ValuationSpec<C>>,
        phi: Poly<C>,
        gamma: ExtValue,
    ) -> Result<Self, ValuationError> {
        if phi.degree().map_or(true, |d| d.is_zero()) {
            return Err(ValuationError::ConstantPivot);
        }
        if !phi.is_monic() {
            return Err(ValuationError::NotMonic);
        }
        if gamma.is_top() {
            return Err(ValuationError::NotFinite);
        }
        let current = inner.evaluate(&phi)?;
        if gamma <= current {
            return Err(ValuationError::GammaNotGreater { gamma, current });
        }
        Ok(ValuationSpec::Augmented { inner, phi, gamma })
    }

    pub fn var(&self) -> &Var {
        match self {
            ValuationSpec::Gauss { var, .. } => var,
            ValuationSpec::Augmented { phi, .. } | ValuationSpec::LimitAugmented { phi, .. } => {
                phi.var()
            }
            ValuationSpec::Limit(fam) => fam.var(),
        }
    }

    /// The value assigned to this node's pivot (β, γ or λ).
    pub fn assigned_value(&self) -> Option<&ExtValue> {
        match self {
            ValuationSpec::Gauss { beta, .. } => Some(beta),
            ValuationSpec::Augmented { gamma, .. } => Some(gamma),
            ValuationSpec::LimitAugmented { lambda, .. } => Some(lambda),
            ValuationSpec::Limit(_) => None,
        }
    }

    /// Degree of this node's pivot (1 for a Gauss node).
    pub fn pivot_degree(&self) -> Option<Exp> {
        match self {
            ValuationSpec::Gauss { .. } => Some(Exp::one()),
            ValuationSpec::Augmented { phi, .. } | ValuationSpec::LimitAugmented { phi, .. } => {
                phi.degree().cloned()
            }
            ValuationSpec::Limit(_) => None,
        }
    }

    /// Does `phi` equal this node's pivot?
    pub fn pivot_matches(&self, phi: &Poly<C>) -> bool {
        match self {
            ValuationSpec::Gauss { var, .. } => {
                phi.var() == var
                    && phi.len() == 1
                    && phi.is_monic()
                    && phi.degree().map_or(false, |d| *d == Exp::one())
            }
            ValuationSpec::Augmented { phi: p, .. }
            | ValuationSpec::LimitAugmented { phi: p, .. } => p == phi,
            ValuationSpec::Limit(_) => false,
        }
    }

    /// Nonzero expansion coefficients of `h` with respect to this node's
    /// pivot, as (index, value-under-the-inner-valuation), plus the pivot's
    /// assigned value. This is the raw material of every min-formula.
    pub fn expansion_values(
        &self,
        h: &Poly<C>,
    ) -> Result<(Vec<(usize, ExtValue)>, ExtValue), ValuationError> {
        match self {
            ValuationSpec::Gauss { inner, var, beta } => {
                if h.var() != var {
                    return Err(ValuationError::Shape(format!(
                        "variable mismatch: {} vs {}",
                        h.var(),
                        var
                    )));
                }
                let mut out = Vec::with_capacity(h.len());
                for (e, c) in h.terms() {
                    let idx = e.to_usize().ok_or_else(|| {
                        ValuationError::Shape("monomial exponent exceeds index range".into())
                    })?;
                    out.push((idx, inner.value(c)?));
                }
                Ok((out, beta.clone()))
            }
            ValuationSpec::Augmented { inner, phi, gamma } => {
                if h.degree() < phi.degree() {
                    // expansion is h itself
                    return Ok((vec![(0, inner.evaluate(h)?)], gamma.clone()));
                }
                let exp = phi_expansion(h, phi)?;
                let mut out = Vec::with_capacity(exp.coeffs.len());
                for (j, c) in exp.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    out.push((j, inner.evaluate(c)?));
                }
                Ok((out, gamma.clone()))
            }
            ValuationSpec::LimitAugmented { family, phi, lambda } => {
                let exp = phi_expansion(h, phi)?;
                let mut out = Vec::with_capacity(exp.coeffs.len());
                for (j, c) in exp.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    out.push((j, family.limit_eval(c)?));
                }
                Ok((out, lambda.clone()))
            }
            ValuationSpec::Limit(_) => Err(ValuationError::Shape(
                "expansion values require a Gauss, augmented or limit-augmented node".into(),
            )),
        }
    }

    /// The exact value of `h` under this valuation; Top iff `h` is zero.
    pub fn evaluate(&self, h: &Poly<C>) -> Result<ExtValue, ValuationError> {
        if h.is_zero() {
            return Ok(ExtValue::Top);
        }
        if let ValuationSpec::Limit(family) = self {
            return family.limit_eval(h);
        }
        let (vals, assigned) = self.expansion_values(h)?;
        let mut best = ExtValue::Top;
        for (j, v) in vals {
            let term = &v + &scale_value(&assigned, &Exp::from(j as u64));
            if term < best {
                best = term;
            }
        }
        Ok(best)
    }

    /// Value extended to the fraction field: value(num) − value(den).
    pub fn evaluate_frac(&self, a: &Frac<C>) -> Result<ExtValue, ValuationError> {
        let vn = self.evaluate(a.num())?;
        let vd = self.evaluate(a.den())?;
        sub_value(&vn, &vd)
    }
}

impl<C: FieldElem> Valuation<Poly<C>> for ValuationSpec<C> {
    fn value(&self, t: &Poly<C>) -> Result<ExtValue, ValuationError> {
        self.evaluate(t)
    }
}

// ---- chains of augmentations (truncations) ----

/// A finite chain: a Gauss step at index 0 followed by augmentations. The
/// i-th truncation is the valuation built from the prefix through step i.
pub struct Chain<C: FieldElem> {
    steps: Vec<(Poly<C>, ExtValue)>,
    specs: Vec<Arc<ValuationSpec<C>>>,
}

impl<C: FieldElem> Chain<C> {
    /// Build and validate the whole chain. Step 0 must be the bare
    /// variable; every later γ must be strictly above the previous
    /// truncation's value of its pivot. Errors carry the failing step.
    pub fn new(
        inner: Arc<dyn Valuation<C>>,
        var: Var,
        steps: Vec<(Poly<C>, ExtValue)>,
    ) -> Result<Self, ValuationError> {
        if steps.is_empty() {
            return Err(ValuationError::Shape(
                "chain needs at least a Gauss step".into(),
            ));
        }
        let mut specs: Vec<Arc<ValuationSpec<C>>> = Vec::with_capacity(steps.len());
        for (i, (phi, gamma)) in steps.iter().enumerate() {
            let at = |e: ValuationError| ValuationError::AtStep {
                step: i,
                source: Box::new(e),
            };
            if i == 0 {
                let is_bare_var = phi.var() == &var
                    && phi.len() == 1
                    && phi.is_monic()
                    && phi.degree().map_or(false, |d| *d == Exp::one());
                if !is_bare_var {
                    return Err(at(ValuationError::Shape(
                        "first chain step must be the bare variable".into(),
                    )));
                }
                let spec =
                    ValuationSpec::gauss(inner.clone(), var.clone(), gamma.clone()).map_err(at)?;
                specs.push(Arc::new(spec));
            } else {
                let spec =
                    ValuationSpec::augment(specs[i - 1].clone(), phi.clone(), gamma.clone())
                        .map_err(at)?;
                specs.push(Arc::new(spec));
            }
        }
        Ok(Chain { steps, specs })
    }

    /// Number of steps, including the Gauss step at index 0.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[(Poly<C>, ExtValue)] {
        &self.steps
    }

    /// The truncation at step `i` (0 = the Gauss step).
    pub fn truncation(&self, i: usize) -> &Arc<ValuationSpec<C>> {
        &self.specs[i]
    }

    pub fn full(&self) -> &Arc<ValuationSpec<C>> {
        self.specs.last().unwrap()
    }

    /// ν_i(h).
    pub fn truncation_value(&self, i: usize, h: &Poly<C>) -> Result<ExtValue, ValuationError> {
        self.specs[i].evaluate(h)
    }
}

impl<C: FieldElem> fmt::Debug for Chain<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain(len={})", self.steps.len())
    }
}

// ---- effective predicates ----

/// μ-equivalence: equal finite values and strictly larger value of the
/// difference (equality of initial forms).
pub fn mu_equivalent<C: FieldElem>(
    spec: &ValuationSpec<C>,
    f: &Poly<C>,
    g: &Poly<C>,
) -> Result<bool, ValuationError> {
    let vf = spec.evaluate(f)?;
    let vg = spec.evaluate(g)?;
    if vf.is_top() || vg.is_top() || vf != vg {
        return Ok(false);
    }
    let diff = spec.evaluate(&f.sub(g))?;
    Ok(diff > vf)
}

/// Does the initial form of this augmented node's pivot divide the initial
/// form of `f`? Effective criterion: index 0 of the φ-expansion does not
/// attain the minimum (the zero polynomial is divisible by everything).
pub fn mu_divides_key<C: FieldElem>(
    spec: &ValuationSpec<C>,
    f: &Poly<C>,
) -> Result<bool, ValuationError> {
    if !matches!(spec, ValuationSpec::Augmented { .. }) {
        return Err(ValuationError::Shape(
            "mu_divides_key requires an augmented node".into(),
        ));
    }
    if f.is_zero() {
        return Ok(true);
    }
    let (vals, gamma) = spec.expansion_values(f)?;
    let mut best = ExtValue::Top;
    for (j, v) in &vals {
        let term = v + &scale_value(&gamma, &Exp::from(*j as u64));
        if term < best {
            best = term;
        }
    }
    for (j, v) in &vals {
        if *j == 0 && *v == best {
            return Ok(false);
        }
    }
    Ok(true)
}


#[cfg(test)]
mod tests {
    use super::test_support::{gauss_mu, yadic_ctx};
    use super::*;
    use crate::algebra::parse::parse_poly;
    use crate::algebra::scalar::GroundField;
    use crate::algebra::tower::{TowerCtx, XPoly};

    fn pp(ctx: &TowerCtx, s: &str) -> XPoly {
        parse_poly(s, ctx).unwrap()
    }

    #[test]
    fn test_gauss_values() {
        let (ctx, k) = yadic_ctx();
        let mu = gauss_mu(&ctx, k);
        assert_eq!(
            mu.evaluate(&pp(&ctx, "x^2 + y^3")).unwrap(),
            ExtValue::from_int(3)
        );
        assert_eq!(
            mu.evaluate(&pp(&ctx, "x")).unwrap(),
            ExtValue::from_ratio(3, 2)
        );
        assert_eq!(mu.evaluate(&pp(&ctx, "y^5")).unwrap(), ExtValue::from_int(5));
        assert_eq!(mu.evaluate(&ctx.xp_zero()).unwrap(), ExtValue::Top);
    }

    #[test]
    fn test_augment_and_evaluate() {
        let (ctx, k) = yadic_ctx();
        let mu = gauss_mu(&ctx, k);
        let phi = pp(&ctx, "x^2 + y^3");
        // μ(φ) = 3, so γ = 10/3 is a valid augmentation and γ = 3 is not.
        let err = ValuationSpec::augment(mu.clone(), phi.clone(), ExtValue::from_int(3));
        assert!(matches!(err, Err(ValuationError::GammaNotGreater { .. })));
        let mu2 = Arc::new(
            ValuationSpec::augment(mu.clone(), phi.clone(), ExtValue::from_ratio(10, 3)).unwrap(),
        );
        assert_eq!(mu2.evaluate(&phi).unwrap(), ExtValue::from_ratio(10, 3));
        // min(2·10/3, 7) = 20/3
        let f = phi.mul(&phi).add(&pp(&ctx, "y^7"));
        assert_eq!(mu2.evaluate(&f).unwrap(), ExtValue::from_ratio(20, 3));
        // degree below the pivot: values agree with the Gauss step
        for s in ["x + y", "y^2", "3*x - 1/2*y^4"] {
            let g = pp(&ctx, s);
            assert_eq!(mu2.evaluate(&g).unwrap(), mu.evaluate(&g).unwrap());
        }
    }

    #[test]
    fn test_augment_rejects_bad_pivots() {
        let (ctx, k) = yadic_ctx();
        let mu = gauss_mu(&ctx, k);
        let not_monic = pp(&ctx, "2*x^2 + y");
        assert!(matches!(
            ValuationSpec::augment(mu.clone(), not_monic, ExtValue::from_int(5)),
            Err(ValuationError::NotMonic)
        ));
        let constant = pp(&ctx, "y + 1");
        assert!(matches!(
            ValuationSpec::augment(mu, constant, ExtValue::from_int(5)),
            Err(ValuationError::ConstantPivot)
        ));
    }

    #[test]
    fn test_mu_equivalent() {
        let (ctx, k) = yadic_ctx();
        let mu = gauss_mu(&ctx, k);
        let f = pp(&ctx, "x^2 + y^3");
        let g = pp(&ctx, "x^2 + 2*y^3");
        // both value 3, difference has value 3 too: not equivalent
        assert!(!mu_equivalent(&mu, &f, &g).unwrap());
        assert!(mu_equivalent(&mu, &f, &f).unwrap());
        // f vs f + (higher-value term): equivalent
        let h = f.add(&pp(&ctx, "y^9"));
        assert!(mu_equivalent(&mu, &f, &h).unwrap());
        // zero is not equivalent to anything (Top values)
        assert!(!mu_equivalent(&mu, &ctx.xp_zero(), &f).unwrap());
    }

    #[test]
    fn test_mu_divides_key() {
        let (ctx, k) = yadic_ctx();
        let mu = gauss_mu(&ctx, k);
        let phi = pp(&ctx, "x^2 + y^3");
        let spec = Arc::new(
            ValuationSpec::augment(mu.clone(), phi.clone(), ExtValue::from_ratio(10, 3)).unwrap(),
        );
        // φ·g is divisible for any nonzero g
        for s in ["x + y", "y^2", "x^3 - y"] {
            let f = phi.mul(&pp(&ctx, s));
            assert!(mu_divides_key(&spec, &f).unwrap());
        }
        // degree below φ: never divisible (unless zero)
        assert!(!mu_divides_key(&spec, &pp(&ctx, "x + y")).unwrap());
        assert!(mu_divides_key(&spec, &ctx.xp_zero()).unwrap());
        // f = φ + y^3: min attained only at index 0
        let f = phi.add(&pp(&ctx, "y^3"));
        assert!(!mu_divides_key(&spec, &f).unwrap());
        // requires an augmented node
        assert!(mu_divides_key(&mu, &phi).is_err());
    }

    #[test]
    fn test_chain_construction_and_errors() {
        let (ctx, k) = yadic_ctx();
        let x = ctx.xp_x();
        let phi = pp(&ctx, "x^2 + y^3");
        let chain = Chain::new(
            k.clone(),
            ctx.x.clone(),
            vec![
                (x.clone(), ExtValue::from_ratio(3, 2)),
                (phi.clone(), ExtValue::from_ratio(10, 3)),
            ],
        )
        .unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(
            chain.truncation_value(1, &phi).unwrap(),
            ExtValue::from_ratio(10, 3)
        );
        // non-variable first step
        let bad = Chain::new(
            k.clone(),
            ctx.x.clone(),
            vec![(phi.clone(), ExtValue::from_int(1))],
        );
        assert!(bad.is_err());
        // gamma at the boundary fails with the step recorded
        let bad = Chain::new(
            k,
            ctx.x.clone(),
            vec![(x, ExtValue::from_ratio(3, 2)), (phi, ExtValue::from_int(3))],
        );
        match bad {
            Err(ValuationError::AtStep { step: 1, source }) => {
                assert!(matches!(*source, ValuationError::GammaNotGreater { .. }))
            }
            other => panic!("expected AtStep(1, GammaNotGreater), got {other:?}"),
        }
    }

    #[test]
    fn test_z_adic() {
        let ctx = TowerCtx::new(GroundField::Rationals, &["z", "y"], "x").unwrap();
        let one = GroundField::Rationals.one();
        // z^3 + z^5 -> 3
        let a = ctx.zr(
            ctx.zp_monomial(Exp::from(3u64), one.clone())
                .add(&ctx.zp_monomial(Exp::from(5u64), one.clone())),
        );
        assert_eq!(z_adic(&TowerElem::ZLevel(a)).unwrap(), ExtValue::from_int(3));
        // 1/z^2 -> -2
        let b = ZRat::new(ctx.zp_int(1), ctx.zp_monomial(Exp::from(2u64), one));
        assert_eq!(
            z_adic(&TowerElem::ZLevel(b)).unwrap(),
            ExtValue::from_int(-2)
        );
        // 0 -> Top
        let zero = ctx.zr(ctx.zp_int(0));
        assert_eq!(z_adic(&TowerElem::ZLevel(zero)).unwrap(), ExtValue::Top);
        // wrong level
        let g = TowerElem::Ground(GroundField::Rationals.one());
        assert!(matches!(z_adic(&g), Err(ValuationError::WrongLevel { .. })));
    }

    #[test]
    fn test_same_augmentation_on_shifted_pivot() {
        // φ₂ = φ₁ + r with μ(r) ≥ γ gives the same augmented valuation.
        let (ctx, k) = yadic_ctx();
        let mu = gauss_mu(&ctx, k);
        let phi1 = pp(&ctx, "x^2 + y^3");
        let phi2 = phi1.add(&pp(&ctx, "y^4"));
        let gamma = ExtValue::from_ratio(10, 3);
        let a = ValuationSpec::augment(mu.clone(), phi1, gamma.clone()).unwrap();
        let b = ValuationSpec::augment(mu, phi2, gamma).unwrap();
        for s in ["x^5 + y*x^2", "x^2 + y^3", "x^4 - y^6", "y + x"] {
            let f = pp(&ctx, s);
            assert_eq!(a.evaluate(&f).unwrap(), b.evaluate(&f).unwrap(), "{s}");
        }
    }
}
