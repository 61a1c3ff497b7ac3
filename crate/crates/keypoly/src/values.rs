//! The value group: exact arithmetic in ℚ ∪ {∞} and membership tests in
//! finitely generated subgroups of ℚ.
//!
//! Values live in ℚ with an absorbing top element `Top` (the value of the
//! zero polynomial). Every finitely generated subgroup of ℚ is cyclic, so a
//! [`RationalSubgroup`] is stored as a single nonnegative generator.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

/// An element of ℚ ∪ {∞}. `Top` is absorbing for addition and greater than
/// every finite value; finite values are kept in lowest terms with positive
/// denominator (enforced by `BigRational`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtValue {
    Finite(BigRational),
    Top,
}

impl ExtValue {
    pub fn zero() -> Self {
        ExtValue::Finite(BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        ExtValue::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// num/den as an exact rational; `den` must be nonzero.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        ExtValue::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_top(&self) -> bool {
        matches!(self, ExtValue::Top)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_top()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExtValue::Finite(q) => Some(q),
            ExtValue::Top => None,
        }
    }

    /// Multiply by a nonnegative integer (expansion index). `0 * Top` is
    /// defined as `0`, matching the convention that absent terms of a
    /// min-formula are skipped.
    pub fn mul_usize(&self, n: usize) -> Self {
        if n == 0 {
            return ExtValue::zero();
        }
        match self {
            ExtValue::Finite(q) => ExtValue::Finite(q * BigRational::from_integer(BigInt::from(n))),
            ExtValue::Top => ExtValue::Top,
        }
    }

    pub fn min(self, other: ExtValue) -> ExtValue {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl Add<&ExtValue> for &ExtValue {
    type Output = ExtValue;

    fn add(self, rhs: &ExtValue) -> ExtValue {
        match (self, rhs) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => ExtValue::Finite(a + b),
            _ => ExtValue::Top,
        }
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Finite(q) => write!(f, "{}", format_rational(q)),
            ExtValue::Top => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Serialize a rational as `num/den`, omitting `/den` when the denominator
/// is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `num/den` (or a bare integer). `inf` is not accepted here; use
/// [`parse_ext_value`] where Top is meaningful.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let den = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(num, den))
}

pub fn parse_ext_value(s: &str) -> Result<ExtValue, String> {
    if s.trim() == "inf" {
        Ok(ExtValue::Top)
    } else {
        parse_rational(s).map(ExtValue::Finite)
    }
}

/// A finitely generated subgroup of ℚ, stored as `g·ℤ` for a nonnegative
/// generator `g` in lowest terms. `g = 0` is the trivial subgroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalSubgroup {
    generator: BigRational,
}

impl RationalSubgroup {
    pub fn trivial() -> Self {
        RationalSubgroup {
            generator: BigRational::zero(),
        }
    }

    pub fn generator(&self) -> &BigRational {
        &self.generator
    }

    /// The subgroup Σ gᵢ·ℤ: gcd of the numerators over the least common
    /// denominator. Order-independent and idempotent.
    pub fn from_generators(gens: &[BigRational]) -> Self {
        let mut g = BigRational::zero();
        for q in gens {
            g = rational_gcd(&g, q);
        }
        RationalSubgroup { generator: g }
    }

    /// Is `q` an integer multiple of the generator?
    pub fn contains(&self, q: &BigRational) -> bool {
        if self.generator.is_zero() {
            return q.is_zero();
        }
        (q / &self.generator).is_integer()
    }

    /// True iff `γ/m` lies in the subgroup, i.e. γ is "divisible by m"
    /// inside the group.
    pub fn divisible_in(&self, gamma: &BigRational, m: u64) -> bool {
        assert!(m >= 1, "divisor must be positive");
        let m = BigRational::from_integer(BigInt::from(m));
        self.contains(&(gamma / m))
    }
}

/// gcd on ℚ: the generator of aℤ + bℤ, computed over the least common
/// denominator. Result is nonnegative.
fn rational_gcd(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let lcd = a.denom().lcm(b.denom());
    let na = a.numer() * (&lcd / a.denom());
    let nb = b.numer() * (&lcd / b.denom());
    BigRational::new(na.gcd(&nb), lcd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn test_top_absorbing_and_order() {
        let half = ExtValue::from_ratio(1, 2);
        assert_eq!(&ExtValue::Top + &half, ExtValue::Top);
        assert_eq!(&half + &ExtValue::Top, ExtValue::Top);
        assert!(ExtValue::Top > half);
        assert_eq!(ExtValue::Top.clone().min(half.clone()), half);
    }

    #[test]
    fn test_mul_usize() {
        assert_eq!(ExtValue::from_ratio(10, 3).mul_usize(2), ExtValue::from_ratio(20, 3));
        assert_eq!(ExtValue::Top.mul_usize(3), ExtValue::Top);
        assert_eq!(ExtValue::Top.mul_usize(0), ExtValue::zero());
    }

    #[test]
    fn test_format_parse_roundtrip() {
        for s in ["3/2", "-1/48", "7", "0", "inf"] {
            let v = parse_ext_value(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_rational("4/6").unwrap(), q(2, 3));
    }

    #[test]
    fn test_subgroup_from_generators() {
        // ⟨1, 1/2⟩ = (1/2)ℤ
        let s = RationalSubgroup::from_generators(&[q(1, 1), q(1, 2)]);
        assert_eq!(s.generator(), &q(1, 2));
        // ⟨1, 11/4⟩ = (1/4)ℤ: lcd 4, gcd(4, 11) = 1
        let s = RationalSubgroup::from_generators(&[q(1, 1), q(11, 4)]);
        assert_eq!(s.generator(), &q(1, 4));
        // single generator
        let s = RationalSubgroup::from_generators(&[q(2, 3)]);
        assert_eq!(s.generator(), &q(2, 3));
        // empty list: trivial
        let s = RationalSubgroup::from_generators(&[]);
        assert_eq!(s, RationalSubgroup::trivial());
        assert!(s.contains(&q(0, 1)));
        assert!(!s.contains(&q(1, 2)));
    }

    #[test]
    fn test_subgroup_order_independence_and_idempotence() {
        let gens = [q(1, 1), q(1, 2), q(11, 4), q(143, 24)];
        let fwd = RationalSubgroup::from_generators(&gens);
        let mut rev = gens.to_vec();
        rev.reverse();
        assert_eq!(fwd, RationalSubgroup::from_generators(&rev));
        // appending the output generator changes nothing
        let mut extended = gens.to_vec();
        extended.push(fwd.generator().clone());
        assert_eq!(fwd, RationalSubgroup::from_generators(&extended));
        // every generator is divisible by 1 in the subgroup
        for g in &gens {
            assert!(fwd.divisible_in(g, 1));
        }
    }

    #[test]
    fn test_divisible_in_basic() {
        let s = RationalSubgroup::from_generators(&[q(1, 2)]);
        assert!(!s.divisible_in(&q(3, 4), 1));
        let z = RationalSubgroup::from_generators(&[q(1, 1)]);
        assert!(z.divisible_in(&q(6, 1), 2)); // 3 ∈ ℤ
        assert!(!z.divisible_in(&q(1, 1), 2)); // 1/2 ∉ ℤ
    }

    #[test]
    fn test_divisible_in_tower_values() {
        // Generators 1, 1/2, p−1/4, 2p−1/(8p) at p = 3: ⟨1, 1/2, 11/4, 143/24⟩.
        // The least common denominator is 24 and the numerator gcd is 1, so
        // the group is (1/24)ℤ and any value with denominator dividing 24 is
        // a member after division.
        let s = RationalSubgroup::from_generators(&[q(1, 1), q(1, 2), q(11, 4), q(143, 24)]);
        assert_eq!(s.generator(), &q(1, 24));
        assert!(s.divisible_in(&q(47, 4), 2)); // 47/8 = 141/24
        assert!(s.divisible_in(&q(47, 4), 3)); // 47/12 = 94/24
        assert!(s.divisible_in(&q(143, 4), 2)); // 143/8 = 429/24

        // Without the 1/(8p)-denominator generator the group is (1/4)ℤ and
        // the value 4p² − 1/4 = 143/4 resists both divisors. This is the
        // membership pattern the tower's irreducibility certificate relies on.
        let s = RationalSubgroup::from_generators(&[q(1, 1), q(1, 2), q(11, 4)]);
        assert_eq!(s.generator(), &q(1, 4));
        assert!(!s.divisible_in(&q(143, 4), 2)); // 143/8 ∉ (1/4)ℤ
        assert!(!s.divisible_in(&q(143, 4), 3)); // 143/12 ∉ (1/4)ℤ
    }
}
