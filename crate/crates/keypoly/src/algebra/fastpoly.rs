//! Dense fast paths for the y-level ring F_p(z)[y].
//!
//! Polynomials whose coefficients are denominator-free prime-field
//! z-polynomials with small exponents are packed by Kronecker substitution
//! into a single coefficient vector and multiplied with one NTT convolution.
//! Euclidean division by a monic divisor splits the quotient
//! divide-and-conquer style so that all heavy lifting happens in fast
//! multiplications. Both paths are exact and are cross-checked against the
//! sparse schoolbook algorithms in tests.

use crate::algebra::fastnum::{convolve_exact, Q};
use crate::algebra::frac::Frac;
use crate::algebra::poly::{Exp, Poly, Var};
use crate::algebra::scalar::Scalar;

type ZRat = Frac<Scalar>;
type YPoly = Poly<ZRat>;

/// Engage dense paths above this many coefficient pair-products.
const PAIR_THRESHOLD: u128 = 1 << 20;
/// Largest packed vector we are willing to allocate (2^26 u64 = 512 MiB).
const MAX_PACKED_LEN: usize = 1 << 26;
/// Below this quotient degree, divide-and-conquer falls back to schoolbook.
const DIV_BASE_DEGREE: u64 = 32;

/// Shape of a y-level polynomial eligible for dense packing.
struct Shape {
    p: u64,
    deg_y: u64,
    deg_z: u64,
    /// total number of scalar terms across all coefficients
    mass: u128,
}

fn shape(a: &YPoly) -> Option<Shape> {
    if a.is_zero() {
        return None;
    }
    let mut p = None;
    let mut deg_z = 0u64;
    let mut mass = 0u128;
    for (ey, c) in a.terms() {
        ey.to_u64()?;
        if !c.den().is_constant() {
            return None;
        }
        for (ez, s) in c.num().terms() {
            let ez = ez.to_u64()?;
            deg_z = deg_z.max(ez);
            let (_, sp) = s.as_fp()?;
            match p {
                None => p = Some(sp),
                Some(q) if q == sp => {}
                _ => return None,
            }
            mass += 1;
        }
    }
    Some(Shape {
        p: p?,
        deg_y: a.degree()?.to_u64()?,
        deg_z,
        mass,
    })
}

fn pack(a: &YPoly, stride: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for (ey, c) in a.terms() {
        let base = ey.to_u64().unwrap() * stride;
        for (ez, s) in c.num().terms() {
            let (v, _) = s.as_fp().unwrap();
            out[(base + ez.to_u64().unwrap()) as usize] = v;
        }
    }
    out
}

fn unpack(buf: &[u64], stride: u64, p: u64, var_y: &Var, var_z: &Var, one: &Scalar) -> YPoly {
    let mut yterms: Vec<(Exp, ZRat)> = Vec::new();
    let mut zterms: Vec<(Exp, Scalar)> = Vec::new();
    let mut cur_y: Option<u64> = None;
    let flush = |y: u64, zterms: &mut Vec<(Exp, Scalar)>, yterms: &mut Vec<(Exp, ZRat)>| {
        if zterms.is_empty() {
            return;
        }
        let num = Poly::from_sorted_terms(var_z.clone(), std::mem::take(zterms));
        let den = Poly::constant(var_z.clone(), one.clone());
        yterms.push((Exp::from(y), Frac::from_parts_unchecked(num, den)));
    };
    for (idx, &raw) in buf.iter().enumerate() {
        let v = raw % p;
        if v == 0 {
            continue;
        }
        let y = idx as u64 / stride;
        let z = idx as u64 % stride;
        if cur_y != Some(y) {
            if let Some(prev) = cur_y {
                flush(prev, &mut zterms, &mut yterms);
            }
            cur_y = Some(y);
        }
        zterms.push((Exp::from(z), Scalar::Fp { val: v, p }));
    }
    if let Some(prev) = cur_y {
        flush(prev, &mut zterms, &mut yterms);
    }
    Poly::from_sorted_terms(var_y.clone(), yterms)
}

/// Dense product, or `None` when not applicable / not worthwhile.
pub(crate) fn try_mul(a: &YPoly, b: &YPoly) -> Option<YPoly> {
    let sa = shape(a)?;
    let sb = shape(b)?;
    if sa.p != sb.p {
        return None;
    }
    if sa.mass * sb.mass < PAIR_THRESHOLD {
        return None;
    }
    let stride = sa.deg_z + sb.deg_z + 1;
    let out_len = ((sa.deg_y + sb.deg_y) * stride + stride) as usize;
    if out_len > MAX_PACKED_LEN {
        return None;
    }
    let len_a = (sa.deg_y * stride + sa.deg_z + 1) as usize;
    let len_b = (sb.deg_y * stride + sb.deg_z + 1) as usize;
    let p = sa.p;
    let squaring = std::ptr::eq(a, b) || a == b;
    let pa = pack(a, stride, len_a);
    let conv = if squaring {
        convolve_exact(&pa, &pa, p - 1)?
    } else {
        let pb = pack(b, stride, len_b);
        convolve_exact(&pa, &pb, p - 1)?
    };
    drop(pa);
    let one = Scalar::Fp { val: 1, p };
    let var_z = a.terms()[0].1.num().var().clone();
    Some(unpack(&conv, stride, p, a.var(), &var_z, &one))
}

/// `f / y^t` and `f mod y^t` in one pass.
fn split_at_y(f: &YPoly, t: u64) -> (YPoly, YPoly) {
    let te = Exp::from(t);
    let mut hi = Vec::new();
    let mut lo = Vec::new();
    for (e, c) in f.terms() {
        if *e >= te {
            hi.push((e.sub(&te), c.clone()));
        } else {
            lo.push((e.clone(), c.clone()));
        }
    }
    (
        Poly::from_sorted_terms(f.var().clone(), hi),
        Poly::from_sorted_terms(f.var().clone(), lo),
    )
}

fn shift_up(f: &YPoly, t: u64) -> YPoly {
    let te = Exp::from(t);
    Poly::from_sorted_terms(
        f.var().clone(),
        f.terms().iter().map(|(e, c)| (e.add(&te), c.clone())).collect(),
    )
}

/// Divide-and-conquer Euclidean division by a monic divisor, or `None` when
/// the inputs do not warrant or permit the dense path. Exact: returns
/// `(q, r)` with `f = q·phi + r`, `deg r < deg phi`.
pub(crate) fn try_divrem(f: &YPoly, phi: &YPoly) -> Option<(YPoly, YPoly)> {
    let sf = shape(f)?;
    let sp = shape(phi)?;
    if sf.p != sp.p || sf.deg_y < sp.deg_y {
        return None;
    }
    // mass of the schoolbook division ~ quotient mass × divisor mass
    if sf.mass * sp.mass < PAIR_THRESHOLD {
        return None;
    }
    // Bound check: convolutions inside use the same exactness criterion as
    // try_mul; let the recursion fall back per-multiplication if needed.
    if (sp.mass.min(sf.mass)) * ((sf.p - 1) as u128) * ((sf.p - 1) as u128) >= Q as u128 {
        return None;
    }
    Some(divrem_rec(f.clone(), phi))
}

fn divrem_rec(f: YPoly, phi: &YPoly) -> (YPoly, YPoly) {
    let m = phi.degree().and_then(|e| e.to_u64()).unwrap();
    let n = match f.degree().and_then(|e| e.to_u64()) {
        Some(n) if n >= m => n,
        _ => return (Poly::zero(f.var().clone()), f),
    };
    let k = n - m;
    if k <= DIV_BASE_DEGREE {
        return f.euclid_div_classical(phi);
    }
    let t = k / 2 + 1;
    let (f_hi, f_lo) = split_at_y(&f, t);
    let (q_hi, r_hi) = divrem_rec(f_hi, phi);
    // f = y^t (q_hi phi + r_hi) + f_lo
    let f_rest = shift_up(&r_hi, t).add(&f_lo);
    let (q_lo, r) = divrem_rec(f_rest, phi);
    (shift_up(&q_hi, t).add(&q_lo), r)
}
