//! The concrete coefficient tower k → k(z) → k(z)(y) and the outer
//! polynomial ring K[x], with a dynamically-typed element for the
//! level-checked operations.

use crate::algebra::frac::Frac;
use crate::algebra::poly::{Exp, Poly, Var};
use crate::algebra::scalar::{GroundField, Scalar};

pub type ZPoly = Poly<Scalar>;
pub type ZRat = Frac<Scalar>;
pub type YPoly = Poly<ZRat>;
pub type KElem = Frac<ZRat>;
pub type XPoly = Poly<KElem>;

/// Variable names and ground field for one tower instance. A single-variable
/// coefficient field k(t) is modelled with an inert, unparseable level-1
/// variable underneath t, so every instance has the same two-level shape.
#[derive(Clone, Debug)]
pub struct TowerCtx {
    pub field: GroundField,
    pub z: Var,
    pub y: Var,
    pub x: Var,
    /// False when the level-1 variable is the inert placeholder.
    pub z_visible: bool,
}

impl TowerCtx {
    pub fn new(field: GroundField, tower: &[&str], outer: &str) -> Result<TowerCtx, String> {
        let (z, y, z_visible) = match tower {
            [t] => (Var::new("__inert"), Var::new(t), false),
            [z, y] => (Var::new(z), Var::new(y), true),
            [] => return Err("tower must name at least one variable".into()),
            _ => return Err("tower depth above two transcendentals is not supported".into()),
        };
        let mut names = vec![y.name().to_string(), outer.to_string()];
        if z_visible {
            names.push(z.name().to_string());
        }
        names.sort();
        names.dedup();
        let expected = if z_visible { 3 } else { 2 };
        if names.len() != expected {
            return Err("tower and outer variable names must be distinct".into());
        }
        Ok(TowerCtx {
            field,
            z,
            y,
            x: Var::new(outer),
            z_visible,
        })
    }

    // ---- level 1: k[z] and k(z) ----

    pub fn zp_const(&self, c: Scalar) -> ZPoly {
        Poly::constant(self.z.clone(), c)
    }

    pub fn zp_int(&self, n: i64) -> ZPoly {
        self.zp_const(self.field.from_int(n))
    }

    /// c·z^e
    pub fn zp_monomial(&self, e: Exp, c: Scalar) -> ZPoly {
        Poly::monomial(self.z.clone(), e, c)
    }

    pub fn zr(&self, p: ZPoly) -> ZRat {
        if p.is_zero() {
            ZRat::zero_with(self.z.clone(), self.field.one())
        } else {
            ZRat::from_poly(p)
        }
    }

    pub fn zr_int(&self, n: i64) -> ZRat {
        self.zr(self.zp_int(n))
    }

    pub fn zr_one(&self) -> ZRat {
        self.zr_int(1)
    }

    /// z^e as an element of k(z).
    pub fn zr_zpow(&self, e: Exp) -> ZRat {
        self.zr(self.zp_monomial(e, self.field.one()))
    }

    // ---- level 2: k(z)[y] and K = k(z)(y) ----

    pub fn yp_zero(&self) -> YPoly {
        Poly::zero(self.y.clone())
    }

    pub fn yp_const(&self, c: ZRat) -> YPoly {
        Poly::constant(self.y.clone(), c)
    }

    pub fn yp_monomial(&self, e: Exp, c: ZRat) -> YPoly {
        Poly::monomial(self.y.clone(), e, c)
    }

    /// The variable y as a monic degree-one polynomial.
    pub fn yp_y(&self) -> YPoly {
        self.yp_monomial(Exp::one(), self.zr_one())
    }

    pub fn k_from_yp(&self, p: YPoly) -> KElem {
        if p.is_zero() {
            KElem::zero_with(self.y.clone(), self.zr_one())
        } else {
            KElem::from_poly(p)
        }
    }

    pub fn k_frac(&self, num: YPoly, den: YPoly) -> KElem {
        KElem::new(num, den)
    }

    pub fn k_int(&self, n: i64) -> KElem {
        self.k_from_yp(self.yp_const(self.zr_int(n)))
    }

    pub fn k_one(&self) -> KElem {
        self.k_int(1)
    }

    // ---- outer level: K[x] ----

    pub fn xp_zero(&self) -> XPoly {
        Poly::zero(self.x.clone())
    }

    pub fn xp_const(&self, c: KElem) -> XPoly {
        Poly::constant(self.x.clone(), c)
    }

    pub fn xp_monomial(&self, e: Exp, c: KElem) -> XPoly {
        Poly::monomial(self.x.clone(), e, c)
    }

    /// The outer variable x as a monic degree-one polynomial.
    pub fn xp_x(&self) -> XPoly {
        self.xp_monomial(Exp::one(), self.k_one())
    }
}

/// An element of the coefficient tower with its level made explicit.
#[derive(Clone, Debug, PartialEq)]
pub enum TowerElem {
    Ground(Scalar),
    ZLevel(ZRat),
    YLevel(KElem),
}

impl TowerElem {
    pub fn level_name(&self) -> &'static str {
        match self {
            TowerElem::Ground(_) => "k",
            TowerElem::ZLevel(_) => "k(z)",
            TowerElem::YLevel(_) => "k(z)(y)",
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            TowerElem::Ground(s) => s.is_zero(),
            TowerElem::ZLevel(r) => r.num().is_zero(),
            TowerElem::YLevel(r) => r.num().is_zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_ctx_construction() {
        let ctx = TowerCtx::new(GroundField::Fp(3), &["z", "y"], "x").unwrap();
        assert!(ctx.z_visible);
        let ctx = TowerCtx::new(GroundField::Rationals, &["y"], "x").unwrap();
        assert!(!ctx.z_visible);
        assert!(TowerCtx::new(GroundField::Rationals, &[], "x").is_err());
        assert!(TowerCtx::new(GroundField::Rationals, &["x"], "x").is_err());
        assert!(TowerCtx::new(GroundField::Rationals, &["a", "b", "c"], "x").is_err());
    }

    #[test]
    fn test_tower_field_arithmetic() {
        use crate::algebra::poly::FieldElem;
        let ctx = TowerCtx::new(GroundField::Fp(5), &["z", "y"], "x").unwrap();
        // (y^2 + z) * 1 == y^2 + z
        let q2 = ctx
            .yp_monomial(Exp::from(2u64), ctx.zr_one())
            .add(&ctx.yp_const(ctx.zr_zpow(Exp::one())));
        let k = ctx.k_from_yp(q2.clone());
        assert_eq!(k.mul(&ctx.k_one()), k);
        // field: a·a⁻¹ = 1
        assert!(k.mul(&k.inv()).is_one());
    }
}
