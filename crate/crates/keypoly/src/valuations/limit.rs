//! Limit valuations: the stable value of a polynomial along an infinite
//! family of augmentations, and the limit augmented valuation built from a
//! limit key polynomial above the whole family.

use crate::algebra::poly::{Exp, FieldElem, Poly, Var};
use crate::valuations::{ValuationSpec, Valuation, ValuationError};
use crate::values::ExtValue;
use std::fmt;
use std::sync::{Arc, Mutex};

/// Produces the j-th family member (1-indexed). `prev` holds the steps
/// already produced, so recursively defined towers need not recompute them.
/// Returning `None` means the generator is exhausted at that index.
pub trait KeyPolyGenerator<C: FieldElem>: Send + Sync {
    fn step(&self, j: usize, prev: &[(Poly<C>, ExtValue)]) -> Option<(Poly<C>, ExtValue)>;

    /// Degree of the j-th pivot when it can be predicted without building
    /// the polynomial. A `Some` promises that index j is producible; the
    /// prediction is checked against the constructed pivot.
    fn degree_hint(&self, _j: usize) -> Option<Exp> {
        None
    }
}

/// How the family's pivot degrees behave, which decides the stabilization
/// rule used by [`LimitFamily::limit_eval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeProfile {
    /// Degrees strictly increase: evaluate the truncation at the smallest
    /// index j with deg φ_{j+1} > deg f.
    StrictlyIncreasing,
    /// Degrees are eventually constant (a continued family): iterate until
    /// two consecutive truncation values agree, which persists.
    EventuallyConstant,
}

struct FamilyMemo<C: FieldElem> {
    steps: Vec<(Poly<C>, ExtValue)>,
    specs: Vec<Arc<ValuationSpec<C>>>,
    exhausted_at: Option<usize>,
}

/// A memoized family of augmentations ν_1 ⊂ ν_2 ⊂ … with strictly
/// increasing values, usable as a valuation through the stable value.
pub struct LimitFamily<C: FieldElem> {
    inner: Arc<dyn Valuation<C>>,
    var: Var,
    generator: Box<dyn KeyPolyGenerator<C>>,
    profile: DegreeProfile,
    declared_bound: Option<ExtValue>,
    memo: Mutex<FamilyMemo<C>>,
}

impl<C: FieldElem> fmt::Debug for LimitFamily<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LimitFamily(var={}, profile={:?})", self.var, self.profile)
    }
}

impl<C: FieldElem> LimitFamily<C> {
    pub fn new(
        inner: Arc<dyn Valuation<C>>,
        var: Var,
        generator: Box<dyn KeyPolyGenerator<C>>,
        profile: DegreeProfile,
        declared_bound: Option<ExtValue>,
    ) -> Self {
        LimitFamily {
            inner,
            var,
            generator,
            profile,
            declared_bound,
            memo: Mutex::new(FamilyMemo {
                steps: Vec::new(),
                specs: Vec::new(),
                exhausted_at: None,
            }),
        }
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn profile(&self) -> DegreeProfile {
        self.profile
    }

    pub fn declared_bound(&self) -> Option<&ExtValue> {
        self.declared_bound.as_ref()
    }

    /// Produce (pivot, value) pairs up to index `j` (1-indexed) with the
    /// cheap structural validations: the first pivot must be the bare
    /// variable, values must strictly increase and stay below the declared
    /// bound, degrees must match the declared profile.
    fn ensure_steps(&self, j: usize) -> Result<(), ValuationError> {
        let mut memo = self.memo.lock().unwrap();
        while memo.steps.len() < j {
            let next_index = memo.steps.len() + 1;
            if memo.exhausted_at.map_or(false, |e| e <= next_index) {
                return Err(ValuationError::GeneratorExhausted { index: next_index });
            }
            let produced = self.generator.step(next_index, &memo.steps);
            let (phi, gamma) = match produced {
                Some(pair) => pair,
                None => {
                    memo.exhausted_at = Some(next_index);
                    return Err(ValuationError::GeneratorExhausted { index: next_index });
                }
            };
            let at = |e: ValuationError| ValuationError::AtStep {
                step: next_index,
                source: Box::new(e),
            };
            if let Some((_, prev_gamma)) = memo.steps.last() {
                if gamma <= *prev_gamma {
                    return Err(at(ValuationError::Shape(
                        "family values must be strictly increasing".into(),
                    )));
                }
            }
            if let Some(bound) = &self.declared_bound {
                if gamma >= *bound {
                    return Err(at(ValuationError::Shape(
                        "family value reaches its declared bound".into(),
                    )));
                }
            }
            if next_index == 1 {
                let bare = phi.var() == &self.var
                    && phi.len() == 1
                    && phi.is_monic()
                    && phi.degree().map_or(false, |d| *d == Exp::one());
                if !bare {
                    return Err(at(ValuationError::Shape(
                        "first family pivot must be the bare variable".into(),
                    )));
                }
            } else if self.profile == DegreeProfile::StrictlyIncreasing {
                let prev_deg = memo.steps.last().unwrap().0.degree().cloned();
                if phi.degree().cloned() <= prev_deg {
                    return Err(at(ValuationError::Shape(
                        "family pivot degrees must strictly increase".into(),
                    )));
                }
            }
            if let Some(hint) = self.generator.degree_hint(next_index) {
                if phi.degree() != Some(&hint) {
                    return Err(at(ValuationError::Shape(
                        "generator degree hint disagrees with the pivot".into(),
                    )));
                }
            }
            memo.steps.push((phi, gamma));
        }
        Ok(())
    }

    /// Build truncation specs through index `j`, validating each
    /// augmentation (γ strictly above the previous truncation's value of
    /// the pivot). Only truncations that are actually evaluated pay for
    /// this validation.
    fn ensure_specs(&self, j: usize) -> Result<(), ValuationError> {
        self.ensure_steps(j)?;
        loop {
            // Take what is needed for the next spec without holding the
            // lock through the expensive validation.
            let (next_index, phi, gamma, prev_spec) = {
                let memo = self.memo.lock().unwrap();
                let next_index = memo.specs.len() + 1;
                if next_index > j {
                    return Ok(());
                }
                let (phi, gamma) = memo.steps[next_index - 1].clone();
                let prev = memo.specs.last().cloned();
                (next_index, phi, gamma, prev)
            };
            let at = |e: ValuationError| ValuationError::AtStep {
                step: next_index,
                source: Box::new(e),
            };
            let spec = if next_index == 1 {
                ValuationSpec::gauss(self.inner.clone(), self.var.clone(), gamma).map_err(at)?
            } else {
                ValuationSpec::augment(prev_spec.unwrap(), phi, gamma).map_err(at)?
            };
            let mut memo = self.memo.lock().unwrap();
            if memo.specs.len() + 1 == next_index {
                memo.specs.push(Arc::new(spec));
            }
        }
    }

    /// The j-th truncation ν_j (1-indexed).
    pub fn truncation(&self, j: usize) -> Result<Arc<ValuationSpec<C>>, ValuationError> {
        assert!(j >= 1, "family indices are 1-based");
        self.ensure_specs(j)?;
        Ok(self.memo.lock().unwrap().specs[j - 1].clone())
    }

    /// The j-th (pivot, value) pair.
    pub fn step_data(&self, j: usize) -> Result<(Poly<C>, ExtValue), ValuationError> {
        assert!(j >= 1, "family indices are 1-based");
        self.ensure_steps(j)?;
        Ok(self.memo.lock().unwrap().steps[j - 1].clone())
    }

    /// Degree of the j-th pivot, preferring the generator's prediction so
    /// that probing one index ahead does not construct the polynomial.
    fn step_degree(&self, j: usize) -> Result<Exp, ValuationError> {
        {
            let memo = self.memo.lock().unwrap();
            if let Some((phi, _)) = memo.steps.get(j - 1) {
                return Ok(phi.degree().cloned().expect("family pivots are nonzero"));
            }
            if memo.exhausted_at.map_or(false, |e| e <= j) {
                return Err(ValuationError::GeneratorExhausted { index: j });
            }
        }
        if let Some(hint) = self.generator.degree_hint(j) {
            return Ok(hint);
        }
        self.ensure_steps(j)?;
        Ok(self
            .memo
            .lock()
            .unwrap()
            .steps[j - 1]
            .0
            .degree()
            .cloned()
            .expect("family pivots are nonzero"))
    }

    /// The stable value of `f` along the family.
    ///
    /// For strictly increasing pivot degrees this evaluates ν_j at the
    /// smallest j with deg φ_{j+1} > deg f; the result is unchanged by any
    /// deeper truncation. For eventually-constant degrees, truncation values
    /// are computed until two consecutive ones agree, and that value is
    /// final because equal values persist along the family.
    pub fn limit_eval(&self, f: &Poly<C>) -> Result<ExtValue, ValuationError> {
        if f.is_zero() {
            return Ok(ExtValue::Top);
        }
        if f.var() != &self.var {
            return Err(ValuationError::Shape(format!(
                "variable mismatch: {} vs {}",
                f.var(),
                self.var
            )));
        }
        let deg_f = f.degree().cloned().unwrap();
        match self.profile {
            DegreeProfile::StrictlyIncreasing => {
                let mut j = 1usize;
                loop {
                    let next_deg = self.step_degree(j + 1)?;
                    if next_deg > deg_f {
                        break;
                    }
                    j += 1;
                }
                let spec = self.truncation(j)?;
                let value = spec.evaluate(f)?;
                #[cfg(debug_assertions)]
                {
                    // one-extra-step cross-check on small instances
                    if self
                        .step_degree(j + 1)
                        .ok()
                        .and_then(|d| d.to_u64())
                        .map_or(false, |d| d <= 64)
                    {
                        if let Ok(deeper) = self.truncation(j + 1) {
                            debug_assert_eq!(
                                deeper.evaluate(f).ok(),
                                Some(value.clone()),
                                "stable value changed one step deeper"
                            );
                        }
                    }
                }
                Ok(value)
            }
            DegreeProfile::EventuallyConstant => {
                let mut prev = self.truncation(1)?.evaluate(f)?;
                let mut j = 2usize;
                loop {
                    let cur = self.truncation(j)?.evaluate(f)?;
                    if cur == prev {
                        return Ok(cur);
                    }
                    debug_assert!(cur > prev, "family values must not decrease");
                    prev = cur;
                    j += 1;
                }
            }
        }
    }

    /// Check that λ dominates the family: above the declared bound when one
    /// is present, and above every value produced so far.
    fn check_lambda(&self, lambda: &ExtValue) -> Result<(), ValuationError> {
        if lambda.is_top() {
            return Err(ValuationError::NotFinite);
        }
        if let Some(bound) = &self.declared_bound {
            if lambda < bound {
                return Err(ValuationError::LambdaNotAboveFamily {
                    lambda: lambda.clone(),
                    detail: format!("below the declared bound {bound}"),
                });
            }
        }
        let memo = self.memo.lock().unwrap();
        for (j, (_, gamma)) in memo.steps.iter().enumerate() {
            if lambda <= gamma {
                return Err(ValuationError::LambdaNotAboveFamily {
                    lambda: lambda.clone(),
                    detail: format!("not above the family value at index {}", j + 1),
                });
            }
        }
        Ok(())
    }
}

impl<C: FieldElem> Valuation<Poly<C>> for LimitFamily<C> {
    fn value(&self, t: &Poly<C>) -> Result<ExtValue, ValuationError> {
        self.limit_eval(t)
    }
}

/// The limit augmented valuation `[family; φ ↦ λ]`: φ-expansion with
/// family-stable coefficient values.
pub fn limit_augment<C: FieldElem>(
    family: Arc<LimitFamily<C>>,
    phi: Poly<C>,
    lambda: ExtValue,
) -> Result<ValuationSpec<C>, ValuationError> {
    if phi.degree().map_or(true, |d| d.is_zero()) {
        return Err(ValuationError::ConstantPivot);
    }
    if !phi.is_monic() {
        return Err(ValuationError::NotMonic);
    }
    family.check_lambda(&lambda)?;
    Ok(ValuationSpec::LimitAugmented { family, phi, lambda })
}

/// A fixed, finite list of steps exposed as a generator (handy for tests
/// and for families whose members are precomputed).
pub struct FixedSteps<C: FieldElem>(pub Vec<(Poly<C>, ExtValue)>);

impl<C: FieldElem> KeyPolyGenerator<C> for FixedSteps<C> {
    fn step(&self, j: usize, _prev: &[(Poly<C>, ExtValue)]) -> Option<(Poly<C>, ExtValue)> {
        self.0.get(j - 1).cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;
    use crate::algebra::tower::{KElem, TowerCtx, XPoly};
    use crate::valuations::test_support::yadic_ctx;

    fn pp(ctx: &TowerCtx, s: &str) -> XPoly {
        parse_poly(s, ctx).unwrap()
    }

    /// A toy strictly-increasing family over K = k(y):
    /// φ₁ = x (γ = 3/2), φ₂ = x² + y³ (γ = 10/3), φ₃ = φ₂² + y⁷x (γ = 8).
    fn toy_family() -> (TowerCtx, Arc<LimitFamily<KElem>>) {
        let (ctx, k) = yadic_ctx();
        let phi2 = pp(&ctx, "x^2 + y^3");
        let phi3 = phi2.mul(&phi2).add(&pp(&ctx, "y^7*x"));
        let steps = vec![
            (ctx.xp_x(), ExtValue::from_ratio(3, 2)),
            (phi2, ExtValue::from_ratio(10, 3)),
            (phi3, ExtValue::from_int(8)),
        ];
        let fam = LimitFamily::new(
            k,
            ctx.x.clone(),
            Box::new(FixedSteps(steps)),
            DegreeProfile::StrictlyIncreasing,
            None,
        );
        (ctx, Arc::new(fam))
    }

    #[test]
    fn test_degree_rule_selection() {
        let (ctx, fam) = toy_family();
        // deg 1 < deg φ₂ = 2: stabilizes at ν₁ (the Gauss step)
        assert_eq!(
            fam.limit_eval(&pp(&ctx, "x + y")).unwrap(),
            ExtValue::from_int(1)
        );
        // deg 2 and 3 < deg φ₃ = 4: ν₂ applies
        assert_eq!(
            fam.limit_eval(&pp(&ctx, "x^2 + y^3")).unwrap(),
            ExtValue::from_ratio(10, 3)
        );
        // deg ≥ 4 needs φ₄: the generator is exhausted
        assert!(matches!(
            fam.limit_eval(&pp(&ctx, "x^4")).unwrap_err(),
            ValuationError::GeneratorExhausted { index: 4 }
        ));
    }

    #[test]
    fn test_limit_augment_values() {
        let (ctx, fam) = toy_family();
        let phi = pp(&ctx, "x^2 + y^3");
        // λ must dominate the produced values lazily; 2 < 10/3 fails once
        // index 2 has been produced.
        fam.truncation(2).unwrap();
        assert!(matches!(
            limit_augment(fam.clone(), phi.clone(), ExtValue::from_int(2)),
            Err(ValuationError::LambdaNotAboveFamily { .. })
        ));
        let mu = limit_augment(fam.clone(), phi.clone(), ExtValue::from_int(100)).unwrap();
        assert_eq!(mu.evaluate(&phi).unwrap(), ExtValue::from_int(100));
        // coefficients of degree < deg φ use the stable family value
        let g = pp(&ctx, "x + y");
        assert_eq!(mu.evaluate(&g).unwrap(), fam.limit_eval(&g).unwrap());
        // φ² gets 2λ
        assert_eq!(
            mu.evaluate(&phi.mul(&phi)).unwrap(),
            ExtValue::from_int(200)
        );
    }

    #[test]
    fn test_declared_bound_check() {
        let (ctx, k) = yadic_ctx();
        let steps = vec![(ctx.xp_x(), ExtValue::from_ratio(3, 2))];
        let fam = Arc::new(LimitFamily::new(
            k,
            ctx.x.clone(),
            Box::new(FixedSteps(steps)),
            DegreeProfile::EventuallyConstant,
            Some(ExtValue::from_int(2)),
        ));
        let phi = pp(&ctx, "x^2 + y^3");
        assert!(matches!(
            limit_augment(fam.clone(), phi.clone(), ExtValue::from_ratio(3, 2)),
            Err(ValuationError::LambdaNotAboveFamily { .. })
        ));
        assert!(limit_augment(fam, phi, ExtValue::from_int(2)).is_ok());
    }

    #[test]
    fn test_invalid_family_rejected() {
        let (ctx, k) = yadic_ctx();
        // decreasing values
        let steps = vec![
            (ctx.xp_x(), ExtValue::from_int(2)),
            (pp(&ctx, "x^2 + y"), ExtValue::from_int(1)),
        ];
        let fam = LimitFamily::new(
            k,
            ctx.x.clone(),
            Box::new(FixedSteps(steps)),
            DegreeProfile::StrictlyIncreasing,
            None,
        );
        assert!(fam.truncation(2).is_err());
    }
}
