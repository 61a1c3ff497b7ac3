//! Ground field elements: ℚ or a prime field F_p with p > 2.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;

/// The coefficient field at the bottom of the tower.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroundField {
    Rationals,
    /// F_p; the tower construction requires p prime and p > 2.
    Fp(u64),
}

impl GroundField {
    pub fn zero(&self) -> Scalar {
        match self {
            GroundField::Rationals => Scalar::Q(Box::new(BigRational::zero())),
            GroundField::Fp(p) => Scalar::Fp { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            GroundField::Rationals => Scalar::Q(Box::new(BigRational::one())),
            GroundField::Fp(p) => Scalar::Fp { val: 1, p: *p },
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            GroundField::Rationals => Scalar::Q(Box::new(BigRational::from_integer(BigInt::from(n)))),
            GroundField::Fp(p) => {
                let p = *p as i128;
                let r = ((n as i128 % p) + p) % p;
                Scalar::Fp { val: r as u64, p: p as u64 }
            }
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Scalar {
        match self {
            GroundField::Rationals => Scalar::Q(Box::new(q.clone())),
            GroundField::Fp(p) => {
                let pb = BigInt::from(*p);
                let num = q.numer().mod_floor_big(&pb);
                let den = q.denom().mod_floor_big(&pb);
                let num = Scalar::Fp { val: num, p: *p };
                let den = Scalar::Fp { val: den, p: *p };
                assert!(!den.is_zero(), "denominator vanishes mod p");
                num.mul(&den.inv())
            }
        }
    }
}

trait ModFloorBig {
    fn mod_floor_big(&self, m: &BigInt) -> u64;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> u64 {
        use num::Integer;
        let r = self.mod_floor(m);
        let (_, digits) = r.to_u64_digits();
        match digits.len() {
            0 => 0,
            1 => digits[0],
            _ => unreachable!("residue exceeds u64"),
        }
    }
}

/// A single ground-field element. Binary operations panic on a field
/// mismatch; parsers and configs keep mixed fields from meeting.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Box<BigRational>),
    Fp { val: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> GroundField {
        match self {
            Scalar::Q(_) => GroundField::Rationals,
            Scalar::Fp { p, .. } => GroundField::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    fn check(&self, rhs: &Scalar) {
        assert!(
            self.field() == rhs.field(),
            "coefficient field mismatch: {:?} vs {:?}",
            self.field(),
            rhs.field()
        );
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(&**a + &**b)),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => {
                Scalar::Fp { val: (a + b) % p, p: *p }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(Box::new(&**a * &**b)),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                val: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(Box::new(-&**a)),
            Scalar::Fp { val, p } => Scalar::Fp { val: (p - val) % p, p: *p },
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Q(Box::new(a.recip()))
            }
            Scalar::Fp { val, p } => {
                assert!(*val != 0, "inverse of zero");
                Scalar::Fp { val: mod_pow(*val, p - 2, *p), p: *p }
            }
        }
    }

    /// p-th power. In F_p this is the identity (Fermat); over ℚ it is a
    /// genuine power.
    pub fn pow_u64(&self, e: u64) -> Scalar {
        match self {
            Scalar::Q(a) => {
                let mut acc = BigRational::one();
                let mut base = (**a).clone();
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc *= &base;
                    }
                    base = &base * &base;
                    e >>= 1;
                }
                Scalar::Q(Box::new(acc))
            }
            Scalar::Fp { val, p } => Scalar::Fp { val: mod_pow(*val, e, *p), p: *p },
        }
    }

    pub fn as_fp(&self) -> Option<(u64, u64)> {
        match self {
            Scalar::Fp { val, p } => Some((*val, *p)),
            Scalar::Q(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // deterministic Miller-Rabin for u64
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{}", crate::values::format_rational(q)),
            Scalar::Fp { val, .. } => write!(f, "{}", val),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_fp_arithmetic() {
        let f = GroundField::Fp(7);
        let a = f.from_int(5);
        let b = f.from_int(4);
        assert_eq!(a.add(&b), f.from_int(2));
        assert_eq!(a.mul(&b), f.from_int(6));
        assert_eq!(a.sub(&b), f.from_int(1));
        assert_eq!(a.neg(), f.from_int(2));
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(f.from_int(-1), f.from_int(6));
    }

    #[test]
    fn test_fermat_identity() {
        let f = GroundField::Fp(5);
        for n in 0..5 {
            let a = f.from_int(n);
            assert_eq!(a.pow_u64(5), a);
        }
    }

    #[test]
    fn test_rational_inverse() {
        let f = GroundField::Rationals;
        let a = f.from_int(3);
        assert!(a.mul(&a.inv()).is_one());
    }

    #[test]
    fn test_from_rational_mod_p() {
        let f = GroundField::Fp(5);
        let q = BigRational::new(BigInt::from(2), BigInt::from(3)); // 2·3⁻¹ = 2·2 = 4 mod 5
        assert_eq!(f.from_rational(&q), f.from_int(4));
    }

    #[test]
    fn test_is_prime() {
        assert!(is_prime(3));
        assert!(is_prime(5));
        assert!(is_prime(104729));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
        assert!(!is_prime(561));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn test_field_mismatch_panics() {
        let a = GroundField::Fp(5).from_int(1);
        let b = GroundField::Rationals.from_int(1);
        let _ = a.add(&b);
    }
}
