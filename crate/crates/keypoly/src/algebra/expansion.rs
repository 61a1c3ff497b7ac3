//! Standard expansions: the unique rewriting f = Σ f_j φ^j with
//! deg f_j < deg φ, and its recursive form along a chain of pivots.

use crate::algebra::poly::{AlgebraError, FieldElem, Poly};

/// φ-adic expansion of a polynomial: `coeffs[j]` is the coefficient of φ^j,
/// each of degree < deg φ; the last entry is nonzero unless the whole
/// polynomial is zero.
#[derive(Clone, Debug)]
pub struct Expansion<C: FieldElem> {
    pub pivot: Poly<C>,
    pub coeffs: Vec<Poly<C>>,
}

impl<C: FieldElem> Expansion<C> {
    /// Σ coeffs[j]·pivot^j, reconstructed exactly.
    pub fn reconstruct(&self) -> Poly<C> {
        let mut acc = Poly::zero(self.pivot.var().clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&self.pivot).add(c);
        }
        acc
    }

    /// Indices with nonzero coefficient.
    pub fn support_indices(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(j, c)| (!c.is_zero()).then_some(j))
            .collect()
    }
}

/// Iterated Euclidean division by a monic pivot of positive degree.
pub fn phi_expansion<C: FieldElem>(
    f: &Poly<C>,
    phi: &Poly<C>,
) -> Result<Expansion<C>, AlgebraError> {
    let mut coeffs = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.euclid_div(phi)?;
        coeffs.push(r);
        rest = q;
    }
    Ok(Expansion {
        pivot: phi.clone(),
        coeffs,
    })
}

/// A chain expansion: the outer level is expanded in the last pivot, each
/// coefficient recursively in the earlier pivots; leaves have degree below
/// the first pivot.
#[derive(Clone, Debug)]
pub enum ChainExpansion<C: FieldElem> {
    Leaf(Poly<C>),
    Node {
        pivot: Poly<C>,
        coeffs: Vec<ChainExpansion<C>>,
    },
}

impl<C: FieldElem> ChainExpansion<C> {
    pub fn reconstruct(&self) -> Poly<C> {
        match self {
            ChainExpansion::Leaf(p) => p.clone(),
            ChainExpansion::Node { pivot, coeffs } => {
                let mut acc = Poly::zero(pivot.var().clone());
                for c in coeffs.iter().rev() {
                    acc = acc.mul(pivot).add(&c.reconstruct());
                }
                acc
            }
        }
    }
}

/// Expand `f` in the chain `Q_1, …, Q_l` (monic, nondecreasing degrees):
/// outer expansion in Q_l, coefficients recursively in the earlier prefix.
pub fn chain_expansion<C: FieldElem>(
    f: &Poly<C>,
    chain: &[Poly<C>],
) -> Result<ChainExpansion<C>, AlgebraError> {
    match chain.split_last() {
        None => Ok(ChainExpansion::Leaf(f.clone())),
        Some((last, prefix)) => {
            let outer = phi_expansion(f, last)?;
            let mut coeffs = Vec::with_capacity(outer.coeffs.len());
            for c in &outer.coeffs {
                coeffs.push(chain_expansion(&c, prefix)?);
            }
            Ok(ChainExpansion::Node {
                pivot: last.clone(),
                coeffs,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{Exp, Var};
    use crate::algebra::scalar::{GroundField, Scalar};

    fn x() -> Var {
        Var::new("x")
    }

    fn qp(coeffs: &[(u64, i64)]) -> Poly<Scalar> {
        let f = GroundField::Rationals;
        Poly::from_terms(
            x(),
            coeffs.iter().map(|(e, c)| (Exp::from(*e), f.from_int(*c))).collect(),
        )
    }

    #[test]
    fn test_phi_expansion_simple() {
        // f = phi^2 + 1 -> [1, 0, 1]
        let phi = qp(&[(2, 1), (0, 2)]);
        let f = phi.mul(&phi).add(&qp(&[(0, 1)]));
        let exp = phi_expansion(&f, &phi).unwrap();
        assert_eq!(exp.coeffs.len(), 3);
        assert_eq!(exp.coeffs[0], qp(&[(0, 1)]));
        assert!(exp.coeffs[1].is_zero());
        assert_eq!(exp.coeffs[2], qp(&[(0, 1)]));
        assert_eq!(exp.reconstruct(), f);
        assert_eq!(exp.support_indices(), vec![0, 2]);
    }

    #[test]
    fn test_phi_expansion_zero() {
        let phi = qp(&[(2, 1)]);
        let exp = phi_expansion(&qp(&[]), &phi).unwrap();
        assert!(exp.coeffs.is_empty());
        assert!(exp.reconstruct().is_zero());
    }

    #[test]
    fn test_chain_expansion_monomials() {
        // chain [x]: expansion = monomial list
        let f = qp(&[(3, 2), (1, -1), (0, 5)]);
        let ce = chain_expansion(&f, &[qp(&[(1, 1)])]).unwrap();
        match &ce {
            ChainExpansion::Node { coeffs, .. } => assert_eq!(coeffs.len(), 4),
            _ => panic!("expected node"),
        }
        assert_eq!(ce.reconstruct(), f);
    }

    #[test]
    fn test_chain_expansion_roundtrip() {
        let q1 = qp(&[(1, 1)]);
        let q2 = qp(&[(2, 1), (0, 3)]);
        // f = Q2^2 + Q1·Q2 + 1
        let f = q2.mul(&q2).add(&q1.mul(&q2)).add(&qp(&[(0, 1)]));
        let ce = chain_expansion(&f, &[q1.clone(), q2.clone()]).unwrap();
        assert_eq!(ce.reconstruct(), f);
        // x^5 in the same chain
        let f = qp(&[(5, 1)]);
        let ce = chain_expansion(&f, &[q1, q2]).unwrap();
        assert_eq!(ce.reconstruct(), f);
    }
}
