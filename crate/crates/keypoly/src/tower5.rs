//! A depth-parameterized tower of key polynomials over F_p(z)[y] (p an odd
//! prime) whose augmentations define a limit valuation ν on K = F_p(z)(y),
//! together with the x-side chain of degree-one key polynomials
//! Q_{x,i} = x − h_1 − … − h_i below the limit key polynomial x^p − y² − z,
//! and exact checks of all closed-form values.
//!
//! The y-side recursion is
//!   Q_{y,1} = y,            γ_{y,1} = 1/2
//!   Q_{y,2} = y² + z,       γ_{y,2} = p − 1/4
//!   Q_{y,3} = Q₂² + z^{2p−1}y,          γ_{y,3} = 2p − 1/(8p)
//!   Q_{y,4} = Q₃^{2p} − z^{4p²−p}Q₂,    γ_{y,4} = 4p² − 1/16
//!   Q_{y,5} = Q₄² + z^{6p²}Q₃^p,        γ_{y,5} = 8p² − 1/(32p)
//! and for m ≥ 3
//!   Q_{y,2m}   = Q_{2m−1}^{2p} + z^{2^{2m−2}p^m − 2^{2m−4}p^{m−1}} Q_{2m−2}
//!   Q_{y,2m+1} = Q_{2m}²       + z^{3·2^{2m−3}p^m} Q_{2m−1}^p
//! with γ_{y,2m} = 2^{2m−2}p^m − 1/2^{2m} and
//! γ_{y,2m+1} = 2^{2m−1}p^m − 1/(2^{2m+1}p).

use crate::algebra::poly::{Exp, FieldElem};
use crate::algebra::scalar::{is_prime, GroundField};
use crate::algebra::tower::{KElem, TowerCtx, XPoly, YPoly, ZRat};
use crate::valuations::{
    limit_augment, BaseValuation, Chain, DegreeProfile, FracVal, KeyPolyGenerator, LimitFamily,
    Valuation, ValuationError, ValuationSpec,
};
use crate::values::{ExtValue, RationalSubgroup};
use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::One;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TowerParams {
    pub p: u64,
    pub depth: usize,
}

impl TowerParams {
    pub fn new(p: u64, depth: usize) -> Result<Self, String> {
        if !is_prime(p) || p <= 2 {
            return Err(format!("p must be an odd prime, got {p}"));
        }
        if depth == 0 {
            return Err("depth must be at least 1".into());
        }
        Ok(TowerParams { p, depth })
    }
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

fn ppow(p: u64, m: u64) -> BigInt {
    BigInt::from(p).pow(m as u32)
}

fn br(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// γ_{y,2m} = 2^{2m−2}·p^m − 1/2^{2m}, valid for all m ≥ 1.
pub fn gamma_even(p: u64, m: u64) -> BigRational {
    br(pow2(2 * m - 2) * ppow(p, m)) - BigRational::new(BigInt::one(), pow2(2 * m))
}

/// γ_{y,2m+1} = 2^{2m−1}·p^m − 1/(2^{2m+1}·p), valid for all m ≥ 1.
pub fn gamma_odd(p: u64, m: u64) -> BigRational {
    br(pow2(2 * m - 1) * ppow(p, m)) - BigRational::new(BigInt::one(), pow2(2 * m + 1) * BigInt::from(p))
}

/// γ_{y,j} for any j ≥ 1.
pub fn gamma_y(p: u64, j: usize) -> BigRational {
    match j {
        0 => panic!("tower indices are 1-based"),
        1 => BigRational::new(BigInt::one(), BigInt::from(2)),
        j if j % 2 == 0 => gamma_even(p, (j / 2) as u64),
        j => gamma_odd(p, (j / 2) as u64),
    }
}

/// z-exponent in Q_{y,2m}: 2^{2m−2}p^m − 2^{2m−4}p^{m−1} (m ≥ 2).
fn zexp_even(p: u64, m: u64) -> BigUint {
    (pow2(2 * m - 2) * ppow(p, m) - pow2(2 * m - 4) * ppow(p, m - 1))
        .to_biguint()
        .unwrap()
}

/// z-exponent in Q_{y,2m+1}: 3·2^{2m−3}p^m (m ≥ 2).
fn zexp_odd(p: u64, m: u64) -> BigUint {
    (BigInt::from(3) * pow2(2 * m - 3) * ppow(p, m)).to_biguint().unwrap()
}

/// Generator of the y-side family. `prev` supplies the earlier pivots.
struct YTowerGen {
    p: u64,
    ctx: TowerCtx,
}

impl YTowerGen {
    fn zpow(&self, e: BigUint) -> ZRat {
        self.ctx.zr_zpow(Exp::from_biguint(e))
    }
}

/// deg Q_{y,j}: 1, 2, 4, then 2^{2m−1}p^{m−1} and 2^{2m}p^{m−1} for
/// j = 2m, 2m+1 with m ≥ 2.
pub fn qy_degree(p: u64, j: usize) -> BigUint {
    match j {
        0 => panic!("tower indices are 1-based"),
        1 => BigUint::one(),
        2 => BigUint::from(2u32),
        3 => BigUint::from(4u32),
        j => {
            let m = (j / 2) as u64;
            let two_exp = if j % 2 == 0 { 2 * m - 1 } else { 2 * m };
            (pow2(two_exp) * ppow(p, m - 1)).to_biguint().unwrap()
        }
    }
}

impl KeyPolyGenerator<ZRat> for YTowerGen {
    fn degree_hint(&self, j: usize) -> Option<Exp> {
        Some(Exp::from_biguint(qy_degree(self.p, j)))
    }

    fn step(&self, j: usize, prev: &[(YPoly, ExtValue)]) -> Option<(YPoly, ExtValue)> {
        let p = self.p;
        let ctx = &self.ctx;
        let q = |i: usize| &prev[i - 1].0; // Q_{y,i} for i < j
        let gamma = ExtValue::Finite(gamma_y(p, j));
        let poly = match j {
            1 => ctx.yp_y(),
            2 => ctx.yp_y().mul(&ctx.yp_y()).add(&ctx.yp_const(self.zpow(BigUint::one()))),
            3 => {
                // Q₂² + z^{2p−1}·y
                let t = ctx.yp_monomial(Exp::one(), self.zpow(BigUint::from(2 * p - 1)));
                q(2).mul(q(2)).add(&t)
            }
            4 => {
                // Q₃^{2p} − z^{4p²−p}·Q₂
                let head = q(3).mul(q(3)).frobenius(p);
                let tail = q(2).mul_coeff(&self.zpow(zexp_even(p, 2)));
                head.sub(&tail)
            }
            5 => {
                // Q₄² + z^{6p²}·Q₃^p
                let tail = q(3).frobenius(p).mul_coeff(&self.zpow(zexp_odd(p, 2)));
                q(4).mul(q(4)).add(&tail)
            }
            j if j % 2 == 0 => {
                let m = (j / 2) as u64;
                let head = q(j - 1).mul(q(j - 1)).frobenius(p);
                let tail = q(j - 2).mul_coeff(&self.zpow(zexp_even(p, m)));
                head.add(&tail)
            }
            j => {
                let m = (j / 2) as u64;
                let tail = q(j - 2).frobenius(p).mul_coeff(&self.zpow(zexp_odd(p, m)));
                // j = 2m+1: square Q_{2m}, add z-term with Q_{2m−1}
                q(j - 1).mul(q(j - 1)).add(&tail)
            }
        };
        Some((poly, gamma))
    }
}

/// Shared tower state: the y-side family and memoized h fractions.
struct Core {
    p: u64,
    ctx: TowerCtx,
    y_family: Arc<LimitFamily<ZRat>>,
    nu: Arc<dyn Valuation<KElem>>,
    h_memo: Mutex<HashMap<usize, KElem>>,
}

impl Core {
    /// h_i = Q_{y,2i+1}² / z^{2^{2i}p^i − 1}.
    fn h(&self, i: usize) -> Result<KElem, ValuationError> {
        assert!(i >= 1);
        if let Some(h) = self.h_memo.lock().unwrap().get(&i) {
            return Ok(h.clone());
        }
        let (q, _) = self.y_family.step_data(2 * i + 1)?;
        let num = q.mul(&q);
        let den_exp = (pow2(2 * i as u64) * ppow(self.p, i as u64) - BigInt::one())
            .to_biguint()
            .unwrap();
        let den = self.ctx.yp_const(self.ctx.zr_zpow(Exp::from_biguint(den_exp)));
        let h = self.ctx.k_frac(num, den);
        self.h_memo.lock().unwrap().insert(i, h.clone());
        Ok(h)
    }

    /// Q_{x,i} = x − h₁ − … − h_i (i ≥ 1); i = 0 gives the bare variable.
    fn qx(&self, i: usize) -> Result<XPoly, ValuationError> {
        let mut acc = self.ctx.k_from_yp(self.ctx.yp_zero());
        for j in 1..=i {
            acc = acc.add(&self.h(j)?);
        }
        Ok(self.ctx.xp_x().sub(&self.ctx.xp_const(acc)))
    }

    /// β_i = μ(Q_{x,i}); β₀ = μ(x) = 1 − 1/(4p).
    fn beta(&self, i: usize) -> ExtValue {
        let denom = pow2(2 * i as u64 + 2) * BigInt::from(self.p);
        ExtValue::Finite(BigRational::one() - BigRational::new(BigInt::one(), denom))
    }
}

/// Generator of the x-side continued family: (x, β₀), then (Q_{x,i}, β_i)
/// for i up to the configured depth.
struct XChainGen {
    core: Arc<Core>,
    depth: usize,
}

impl KeyPolyGenerator<KElem> for XChainGen {
    fn degree_hint(&self, j: usize) -> Option<Exp> {
        (j <= self.depth + 1).then(Exp::one)
    }

    fn step(&self, j: usize, _prev: &[(XPoly, ExtValue)]) -> Option<(XPoly, ExtValue)> {
        if j > self.depth + 1 {
            return None;
        }
        let i = j - 1;
        let phi = self.core.qx(i).ok()?;
        Some((phi, self.core.beta(i)))
    }
}

/// The full tower instance at a given prime and x-side depth.
pub struct Tower5 {
    params: TowerParams,
    core: Arc<Core>,
}

impl Tower5 {
    pub fn new(params: TowerParams) -> Self {
        let ctx = TowerCtx::new(GroundField::Fp(params.p), &["z", "y"], "x").unwrap();
        let y_family = Arc::new(LimitFamily::new(
            Arc::new(BaseValuation::TAdic),
            ctx.y.clone(),
            Box::new(YTowerGen { p: params.p, ctx: ctx.clone() }),
            DegreeProfile::StrictlyIncreasing,
            None,
        ));
        let nu_spec: Arc<ValuationSpec<ZRat>> =
            Arc::new(ValuationSpec::Limit(y_family.clone()));
        let nu: Arc<dyn Valuation<KElem>> = Arc::new(FracVal::new(nu_spec));
        Tower5 {
            params,
            core: Arc::new(Core {
                p: params.p,
                ctx,
                y_family,
                nu,
                h_memo: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn params(&self) -> TowerParams {
        self.params
    }

    pub fn ctx(&self) -> &TowerCtx {
        &self.core.ctx
    }

    /// The y-side family ν_1 ⊂ ν_2 ⊂ … defining ν.
    pub fn y_family(&self) -> &Arc<LimitFamily<ZRat>> {
        &self.core.y_family
    }

    /// (Q_{y,j}, γ_{y,j}).
    pub fn qy(&self, j: usize) -> Result<(YPoly, BigRational), ValuationError> {
        let (q, g) = self.core.y_family.step_data(j)?;
        match g {
            ExtValue::Finite(g) => Ok((q, g)),
            ExtValue::Top => unreachable!("family values are finite"),
        }
    }

    /// ν as a valuation of K = F_p(z)(y).
    pub fn nu(&self) -> Arc<dyn Valuation<KElem>> {
        self.core.nu.clone()
    }

    pub fn nu_value(&self, a: &KElem) -> Result<ExtValue, ValuationError> {
        self.core.nu.value(a)
    }

    /// h_i = Q_{y,2i+1}²/z^{2^{2i}p^i−1}; ν(h_i) = 1 − 1/(2^{2i}p).
    pub fn h(&self, i: usize) -> Result<KElem, ValuationError> {
        self.core.h(i)
    }

    /// The closed form 1 − 1/(2^{2i}p) for ν(h_i).
    pub fn expected_h_value(&self, i: usize) -> ExtValue {
        let denom = pow2(2 * i as u64) * BigInt::from(self.params.p);
        ExtValue::Finite(BigRational::one() - BigRational::new(BigInt::one(), denom))
    }

    pub fn qx(&self, i: usize) -> Result<XPoly, ValuationError> {
        self.core.qx(i)
    }

    /// β_i = 1 − 1/(2^{2i+2}p), the value of Q_{x,i} (β₀ = μ(x)).
    pub fn beta(&self, i: usize) -> ExtValue {
        self.core.beta(i)
    }

    /// The strictly increasing β_i stay below 1 with 1 − β_i = 1/(2^{2i+2}p).
    pub fn beta_pattern_holds(&self, i: usize) -> bool {
        let one = ExtValue::from_int(1);
        let beta = self.beta(i);
        if beta >= one {
            return false;
        }
        match (&one, &beta) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => {
                let gap = a - b;
                gap == BigRational::new(
                    BigInt::one(),
                    pow2(2 * i as u64 + 2) * BigInt::from(self.params.p),
                )
            }
            _ => false,
        }
    }

    /// The x-side chain [(x, β₀), (Q_{x,1}, β₁), …] through the configured
    /// depth, validated step by step.
    pub fn x_chain(&self) -> Result<Chain<KElem>, ValuationError> {
        let mut steps = Vec::with_capacity(self.params.depth + 1);
        for i in 0..=self.params.depth {
            steps.push((self.core.qx(i)?, self.core.beta(i)));
        }
        Chain::new(self.nu(), self.core.ctx.x.clone(), steps)
    }

    /// The x-side continued family as a limit family with declared bound 1.
    pub fn x_family(&self) -> Arc<LimitFamily<KElem>> {
        Arc::new(LimitFamily::new(
            self.nu(),
            self.core.ctx.x.clone(),
            Box::new(XChainGen { core: self.core.clone(), depth: self.params.depth }),
            DegreeProfile::EventuallyConstant,
            Some(ExtValue::from_int(1)),
        ))
    }

    /// f = x^p − y² − z.
    pub fn f(&self) -> XPoly {
        let ctx = &self.core.ctx;
        let y2z = ctx
            .yp_monomial(Exp::from(2u64), ctx.zr_one())
            .add(&ctx.yp_const(ctx.zr_zpow(Exp::one())));
        ctx.xp_monomial(Exp::from(self.params.p), ctx.k_one())
            .sub(&ctx.xp_const(ctx.k_from_yp(y2z)))
    }

    /// μ_i(f), expected to equal p − 1/2^{2i+2}.
    pub fn mu_i_of_f(&self, i: usize) -> Result<ExtValue, ValuationError> {
        let chain = self.x_chain()?;
        chain.truncation_value(i, &self.f())
    }

    pub fn expected_mu_i(&self, i: usize) -> ExtValue {
        ExtValue::Finite(
            br(BigInt::from(self.params.p)) - BigRational::new(BigInt::one(), pow2(2 * i as u64 + 2)),
        )
    }

    /// The limit augmented valuation [family; f ↦ p].
    pub fn limit_mu(&self) -> Result<ValuationSpec<KElem>, ValuationError> {
        limit_augment(
            self.x_family(),
            self.f(),
            ExtValue::from_int(self.params.p as i64),
        )
    }

    /// The telescoping identity at level i:
    /// −y²−z + Σ_{j<i} h_j^p = Q_{y,2i}/z^{2^{2i−2}p^i−p}; the degenerate
    /// i = 1 case reads −y²−z = −Q_{y,2}.
    pub fn check_identity(&self, i: usize) -> Result<bool, ValuationError> {
        assert!(i >= 1);
        let ctx = &self.core.ctx;
        let p = self.params.p;
        let y2z = ctx
            .yp_monomial(Exp::from(2u64), ctx.zr_one())
            .add(&ctx.yp_const(ctx.zr_zpow(Exp::one())));
        let mut lhs = ctx.k_from_yp(y2z).neg();
        if i == 1 {
            let (q2, _) = self.core.y_family.step_data(2)?;
            return Ok(lhs == ctx.k_from_yp(q2).neg());
        }
        for j in 1..i {
            lhs = lhs.add(&self.core.h(j)?.pow_u64(p));
        }
        let (q2i, _) = self.core.y_family.step_data(2 * i)?;
        let den_exp = (pow2(2 * i as u64 - 2) * ppow(p, i as u64) - BigInt::from(p))
            .to_biguint()
            .unwrap();
        let rhs = ctx.k_frac(q2i, ctx.yp_const(ctx.zr_zpow(Exp::from_biguint(den_exp))));
        Ok(lhs == rhs)
    }

    /// Value-group certificates for the tower steps: for each j in
    /// 2..=jmax, the value of the lower-order term of Q_{y,2j} under
    /// ν_{2j−1} must not be divisible by 2 or p in ⟨1, γ_{y,1}, …,
    /// γ_{y,2j−2}⟩, and analogously for the odd step Q_{y,2j+1}.
    pub fn irreducibility_report(&self, jmax: usize) -> Result<IrreducibilityReport, ValuationError> {
        assert!(jmax >= 2);
        let p = self.params.p;
        let mut checks = Vec::new();
        for j in 2..=jmax {
            checks.push(self.irreducibility_check(2 * j)?);
            checks.push(self.irreducibility_check(2 * j + 1)?);
        }
        Ok(IrreducibilityReport { p, checks })
    }

    /// The certificate for a single tower step Q_{y,k} (k ≥ 4): computes
    /// the exact value of the z-term of the recursion under ν_{k−1},
    /// verifies it against the closed form, and runs the subgroup
    /// non-divisibility tests for m ∈ {2, p}.
    pub fn irreducibility_check(&self, k: usize) -> Result<IrreducibilityCheck, ValuationError> {
        assert!(k >= 4);
        let p = self.params.p;
        let ctx = &self.core.ctx;
        let even = k % 2 == 0;
        let m = (k / 2) as u64;
        // the lower-order term of the recursion for Q_{y,k}
        let (lower, closed_form) = if even {
            let (q, _) = self.core.y_family.step_data(k - 2)?;
            let term = q.mul_coeff(&ctx.zr_zpow(Exp::from_biguint(zexp_even(p, m))));
            // 2^{2m−2}p^m − 1/2^{2m−2}
            let cf = br(pow2(2 * m - 2) * ppow(p, m))
                - BigRational::new(BigInt::one(), pow2(2 * m - 2));
            (term, cf)
        } else {
            let (q, _) = self.core.y_family.step_data(k - 2)?;
            let term = q
                .frobenius(p)
                .mul_coeff(&ctx.zr_zpow(Exp::from_biguint(zexp_odd(p, m))));
            // 2^{2m−1}p^m − 1/2^{2m−1}
            let cf = br(pow2(2 * m - 1) * ppow(p, m))
                - BigRational::new(BigInt::one(), pow2(2 * m - 1));
            (term, cf)
        };
        let spec = self.core.y_family.truncation(k - 1)?;
        let value = match spec.evaluate(&lower)? {
            ExtValue::Finite(v) => v,
            ExtValue::Top => unreachable!("lower term is nonzero"),
        };
        let closed_form_ok = value == closed_form;
        let mut gens = vec![BigRational::one()];
        for idx in 1..=(k - 2) {
            gens.push(gamma_y(p, idx));
        }
        let sub = RationalSubgroup::from_generators(&gens);
        let not_div_2 = !sub.divisible_in(&value, 2);
        let not_div_p = !sub.divisible_in(&value, p);
        Ok(IrreducibilityCheck {
            tower_index: k,
            even,
            value,
            closed_form_ok,
            not_div_2,
            not_div_p,
        })
    }
}

/// One value-group certificate for a tower step.
#[derive(Clone, Debug)]
pub struct IrreducibilityCheck {
    pub tower_index: usize,
    pub even: bool,
    pub value: BigRational,
    pub closed_form_ok: bool,
    pub not_div_2: bool,
    pub not_div_p: bool,
}

impl IrreducibilityCheck {
    pub fn passed(&self) -> bool {
        self.closed_form_ok && self.not_div_2 && self.not_div_p
    }
}

#[derive(Clone, Debug)]
pub struct IrreducibilityReport {
    pub p: u64,
    pub checks: Vec<IrreducibilityCheck>,
}

impl IrreducibilityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    fn t(p: u64, depth: usize) -> Tower5 {
        Tower5::new(TowerParams::new(p, depth).unwrap())
    }

    fn rq(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn test_params_validation() {
        assert!(TowerParams::new(2, 1).is_err());
        assert!(TowerParams::new(9, 1).is_err());
        assert!(TowerParams::new(3, 0).is_err());
        assert!(TowerParams::new(5, 2).is_ok());
    }

    #[test]
    fn test_qy_base_cases() {
        let tw = t(3, 1);
        let ctx = tw.ctx().clone();
        let (q1, g1) = tw.qy(1).unwrap();
        assert_eq!(q1, ctx.yp_y());
        assert_eq!(g1, rq(1, 2));
        let (q2, g2) = tw.qy(2).unwrap();
        let expect = parse_poly("y^2 + z", &ctx).unwrap();
        assert_eq!(ctx.xp_const(ctx.k_from_yp(q2)), expect);
        assert_eq!(g2, rq(11, 4)); // p − 1/4 at p = 3
        let (q3, g3) = tw.qy(3).unwrap();
        let expect = parse_poly("(y^2 + z)^2 + z^5*y", &ctx).unwrap();
        assert_eq!(ctx.xp_const(ctx.k_from_yp(q3)), expect);
        assert_eq!(g3, rq(143, 24)); // 2p − 1/(8p)
    }

    #[test]
    fn test_gamma_closed_forms() {
        // the explicit γ₄, γ₅ agree with the general even/odd forms at m = 2
        for p in [3u64, 5] {
            let g4 = gamma_y(p, 4);
            assert_eq!(g4, br(BigInt::from(4 * p * p)) - rq(1, 16));
            let g5 = gamma_y(p, 5);
            assert_eq!(
                g5,
                br(BigInt::from(8 * p * p)) - BigRational::new(BigInt::one(), BigInt::from(32 * p))
            );
        }
        // strictly increasing along the tower
        for p in [3u64, 5] {
            let mut prev = gamma_y(p, 1);
            for j in 2..=9 {
                let g = gamma_y(p, j);
                assert!(g > prev, "gamma not increasing at j={j}");
                prev = g;
            }
        }
    }

    #[test]
    fn test_nu_attains_gammas() {
        let tw = t(3, 1);
        for j in 1..=5 {
            let (q, g) = tw.qy(j).unwrap();
            let v = tw.y_family().limit_eval(&q).unwrap();
            assert_eq!(v, ExtValue::Finite(g), "nu(Q_y{j})");
        }
    }

    #[test]
    fn test_truncation_strictness_before_assignment() {
        // ν_{j−1}(Q_{y,j}) < γ_{y,j}: e.g. ν₁(Q₂) = 1 and ν₃(Q₄) = 4p² − 1/4
        let tw = t(3, 1);
        let (q2, _) = tw.qy(2).unwrap();
        let nu1 = tw.y_family().truncation(1).unwrap();
        assert_eq!(nu1.evaluate(&q2).unwrap(), ExtValue::from_int(1));
        let (q4, _) = tw.qy(4).unwrap();
        let nu3 = tw.y_family().truncation(3).unwrap();
        assert_eq!(
            nu3.evaluate(&q4).unwrap(),
            ExtValue::Finite(br(BigInt::from(36)) - rq(1, 4))
        );
    }

    #[test]
    fn test_limit_eval_by_degree_rule() {
        let tw = t(3, 1);
        let ctx = tw.ctx().clone();
        // ν(y) = 1/2 and ν(y²+z) = p − 1/4
        let y = ctx.yp_y();
        assert_eq!(
            tw.y_family().limit_eval(&y).unwrap(),
            ExtValue::from_ratio(1, 2)
        );
        let q2 = y.mul(&y).add(&ctx.yp_const(ctx.zr_zpow(Exp::one())));
        assert_eq!(
            tw.y_family().limit_eval(&q2).unwrap(),
            ExtValue::from_ratio(11, 4)
        );
    }

    #[test]
    fn test_h_values_small() {
        for p in [3u64, 5] {
            let tw = t(p, 1);
            for i in 1..=2 {
                let h = tw.h(i).unwrap();
                assert_eq!(
                    tw.nu_value(&h).unwrap(),
                    tw.expected_h_value(i),
                    "nu(h_{i}) at p={p}"
                );
            }
        }
    }

    #[test]
    fn test_h_denominator_is_pure_z_power() {
        let tw = t(3, 1);
        let h = tw.h(1).unwrap();
        assert!(h.den().is_constant()); // constant in y
        let c = &h.den().terms()[0].1;
        assert_eq!(c.num().len(), 1); // single z-monomial
        assert_eq!(c.num().ord().unwrap().to_u64(), Some(4 * 3 - 1));
    }

    #[test]
    fn test_frobenius_vs_pow_crosscheck() {
        let tw = t(3, 1);
        let h1 = tw.h(1).unwrap();
        let by_pow = h1.mul(&h1).mul(&h1);
        let by_frob = h1.pow_u64(3);
        assert_eq!(by_pow, by_frob);
        let (q3, _) = tw.qy(3).unwrap();
        assert_eq!(q3.pow(3), q3.frobenius(3));
        assert_eq!(q3.pow(6), q3.mul(&q3).frobenius(3));
    }

    #[test]
    fn test_beta_values() {
        let tw = t(3, 2);
        assert_eq!(tw.beta(0), ExtValue::from_ratio(11, 12)); // 1 − 1/(4p)
        assert_eq!(tw.beta(1), ExtValue::from_ratio(47, 48));
        assert_eq!(tw.beta(2), ExtValue::from_ratio(191, 192));
        for i in 0..=3 {
            assert!(tw.beta_pattern_holds(i));
        }
    }

    #[test]
    fn test_x_chain_and_mu_i() {
        let tw = t(3, 2);
        let chain = tw.x_chain().unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(tw.mu_i_of_f(1).unwrap(), ExtValue::from_ratio(47, 16));
        assert_eq!(tw.mu_i_of_f(2).unwrap(), ExtValue::from_ratio(191, 64));
        for i in 1..=2 {
            assert_eq!(tw.mu_i_of_f(i).unwrap(), tw.expected_mu_i(i));
        }
        // strictly increasing and below p
        assert!(tw.expected_mu_i(1) < tw.expected_mu_i(2));
        assert!(tw.expected_mu_i(2) < ExtValue::from_int(3));
    }

    #[test]
    fn test_identity_small() {
        let tw = t(3, 2);
        assert!(tw.check_identity(1).unwrap());
        assert!(tw.check_identity(2).unwrap());
    }

    #[test]
    fn test_limit_mu() {
        let tw = t(3, 2);
        let mu = tw.limit_mu().unwrap();
        let f = tw.f();
        assert_eq!(mu.evaluate(&f).unwrap(), ExtValue::from_int(3));
        assert_eq!(
            mu.evaluate(&f.mul(&f)).unwrap(),
            ExtValue::from_int(6)
        );
        // degree below p: the stable family value
        let fam = tw.x_family();
        let g = tw.ctx().xp_x();
        assert_eq!(
            mu.evaluate(&g).unwrap(),
            fam.limit_eval(&g).unwrap()
        );
        assert_eq!(mu.evaluate(&g).unwrap(), tw.beta(0));
    }

    #[test]
    fn test_x_family_stabilization() {
        // μ_i(Q_{x,1}) stabilizes at i = 1: β₁ afterwards
        let tw = t(3, 2);
        let fam = tw.x_family();
        let q1 = tw.qx(1).unwrap();
        assert_eq!(fam.limit_eval(&q1).unwrap(), tw.beta(1));
        // f itself never stabilizes within the finite family
        assert!(matches!(
            fam.limit_eval(&tw.f()).unwrap_err(),
            ValuationError::GeneratorExhausted { .. }
        ));
    }

    #[test]
    fn test_irreducibility_certificates_j2() {
        // at j = 2 the even certificate passes in full for p ∈ {3, 5}
        for p in [3u64, 5] {
            let tw = t(p, 1);
            let check = tw.irreducibility_check(4).unwrap();
            assert!(check.closed_form_ok, "closed form at p={p}");
            assert!(check.not_div_2, "m=2 at p={p}");
            assert!(check.not_div_p, "m=p at p={p}");
        }
    }

    #[test]
    fn test_irreducibility_certificate_values_match_closed_forms() {
        let tw = t(3, 1);
        for k in [4usize, 5, 6, 7] {
            let check = tw.irreducibility_check(k).unwrap();
            assert!(check.closed_form_ok, "closed form at k={k}");
            // the 2-divisibility obstruction is 2-adic and always holds
            assert!(check.not_div_2, "m=2 at k={k}");
        }
    }
}
