//! Exact rational scalars.
//!
//! Values that fit in a reduced `i128` fraction stay in that form and never
//! allocate; anything larger spills into a [`BigRational`]. The representation
//! is canonical (reduced, positive denominator, small whenever it fits), so
//! the derived equality and hashing are structural.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced fraction with `den > 0` and `num != i128::MIN`.
    Small(i128, i128),
    Big(BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid number literal `{0}`")]
pub struct ParseScalarError(pub String);

impl Scalar {
    pub const ZERO: Scalar = Scalar(Repr::Small(0, 1));
    pub const ONE: Scalar = Scalar(Repr::Small(1, 1));

    pub fn zero() -> Self {
        Self::ZERO
    }

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn from_int(v: i64) -> Self {
        Scalar(Repr::Small(v as i128, 1))
    }

    /// `num / den`. Panics if `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        small_or_big(num as i128, den as i128)
    }

    pub fn from_big(r: BigRational) -> Self {
        let fits = r
            .numer()
            .to_i128()
            .filter(|n| *n != i128::MIN)
            .zip(r.denom().to_i128());
        match fits {
            Some((n, d)) => Scalar(Repr::Small(n, d)),
            None => Scalar(Repr::Big(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// Sign as `-1`, `0` or `1`.
    pub fn signum(&self) -> i8 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i8,
            Repr::Big(r) => {
                if r.is_positive() {
                    1
                } else if r.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Option<Scalar> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => {
                if *n < 0 {
                    Some(Scalar(Repr::Small(-*d, -*n)))
                } else {
                    Some(Scalar(Repr::Small(*d, *n)))
                }
            }
            Repr::Big(r) => Some(Scalar::from_big(r.recip())),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.recip().map(|r| self * &r)
    }

    /// Largest integer not above `self`.
    pub fn floor(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, d) => BigInt::from(n.div_floor(d)),
            Repr::Big(r) => r.floor().to_integer(),
        }
    }

    /// Floor, saturated to the `i64` range.
    pub fn floor_i64(&self) -> i64 {
        match &self.0 {
            Repr::Small(n, d) => {
                let f = n.div_floor(d);
                f.clamp(i64::MIN as i128, i64::MAX as i128) as i64
            }
            Repr::Big(_) => {
                let f = self.floor();
                f.to_i64().unwrap_or(if f.is_negative() { i64::MIN } else { i64::MAX })
            }
        }
    }

    /// Nearest `f64`, for display and heuristics only.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn min(self, other: Scalar) -> Scalar {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Scalar) -> Scalar {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Numerator and denominator as big integers.
    pub fn to_parts(&self) -> (BigInt, BigInt) {
        match &self.0 {
            Repr::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => (r.numer().clone(), r.denom().clone()),
        }
    }
}

fn small_or_big(num: i128, den: i128) -> Scalar {
    debug_assert!(den != 0);
    if num == i128::MIN || den == i128::MIN {
        return Scalar::from_big(BigRational::new(BigInt::from(num), BigInt::from(den)));
    }
    let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
    if n == 0 {
        return Scalar::ZERO;
    }
    if d != 1 {
        let g = n.gcd(&d);
        if g != 1 {
            n /= g;
            d /= g;
        }
    }
    Scalar(Repr::Small(n, d))
}

fn big_op(a: &Scalar, b: &Scalar, op: impl FnOnce(BigRational, BigRational) -> BigRational) -> Scalar {
    Scalar::from_big(op(a.to_big(), b.to_big()))
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let (a, b, c, d) = (*a, *b, *c, *d);
            if b == d {
                if let Some(s) = a.checked_add(c) {
                    return small_or_big(s, b);
                }
            } else if let (Some(ad), Some(cb), Some(bd)) =
                (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d))
            {
                if let Some(n) = ad.checked_add(cb) {
                    return small_or_big(n, bd);
                }
            }
        }
        big_op(self, rhs, |x, y| x + y)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let (a, b, c, d) = (*a, *b, *c, *d);
            if b == d {
                if let Some(s) = a.checked_sub(c) {
                    return small_or_big(s, b);
                }
            } else if let (Some(ad), Some(cb), Some(bd)) =
                (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d))
            {
                if let Some(n) = ad.checked_sub(cb) {
                    return small_or_big(n, bd);
                }
            }
        }
        big_op(self, rhs, |x, y| x - y)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let (a, b, c, d) = (*a, *b, *c, *d);
            if b == 1 && d == 1 {
                if let Some(p) = a.checked_mul(c) {
                    return small_or_big(p, 1);
                }
            } else {
                // Cross-reduce first so the result is already in lowest terms.
                let g1 = a.gcd(&d).max(1);
                let g2 = c.gcd(&b).max(1);
                if let (Some(n), Some(m)) = ((a / g1).checked_mul(c / g2), (b / g2).checked_mul(d / g1)) {
                    return small_or_big(n, m);
                }
            }
        }
        big_op(self, rhs, |x, y| x * y)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => Scalar(Repr::Small(-*n, *d)),
            Repr::Big(r) => Scalar::from_big(-r.clone()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &other.0) {
            if b == d {
                return a.cmp(c);
            }
            let (sa, sc) = (a.signum(), c.signum());
            if sa != sc {
                return sa.cmp(&sc);
            }
            if let (Some(ad), Some(cb)) = (a.checked_mul(*d), c.checked_mul(*b)) {
                return ad.cmp(&cb);
            }
        }
        self.to_big().cmp(&other.to_big())
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<i32> for Scalar {
    fn from(v: i32) -> Self {
        Scalar::from_int(v as i64)
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::from_big(BigRational::from_integer(v))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts integers, finite decimals with an optional exponent (`-1.25e3`),
/// and fractions `p/q`. Never goes through binary floating point.
impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(text.to_string());
        let s = text.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: Scalar = p.parse().map_err(|_| err())?;
            let q: Scalar = q.parse().map_err(|_| err())?;
            return p.checked_div(&q).ok_or_else(err);
        }
        let (mantissa, exponent) = match s.find(['e', 'E']) {
            Some(i) => {
                let e: i32 = s[i + 1..].parse().map_err(|_| err())?;
                (&s[..i], e)
            }
            None => (s, 0),
        };
        let (negative, digits) = match mantissa.as_bytes().first() {
            Some(b'-') => (true, &mantissa[1..]),
            Some(b'+') => (false, &mantissa[1..]),
            _ => (false, mantissa),
        };
        let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
        let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
        if (int_part.is_empty() && frac_part.is_empty()) || !all_digits(int_part) || !all_digits(frac_part) {
            return Err(err());
        }
        if exponent.unsigned_abs() > 4096 {
            return Err(err());
        }
        let mut joined = String::with_capacity(int_part.len() + frac_part.len());
        joined.push_str(int_part);
        joined.push_str(frac_part);
        let mut numer: BigInt = joined.parse().map_err(|_| err())?;
        if negative {
            numer = -numer;
        }
        let scale = exponent - frac_part.len() as i32;
        let ten = BigInt::from(10u32);
        let value = if scale >= 0 {
            BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
        } else {
            BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
        };
        Ok(Scalar::from_big(value))
    }
}

/// Convenience for literals in tests and examples; panics on bad input.
pub fn sc(text: &str) -> Scalar {
    text.parse().expect("valid scalar literal")
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::ZERO
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::ONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_decimals_and_fractions() {
        assert_eq!(sc("1.5"), Scalar::ratio(3, 2));
        assert_eq!(sc("-0.25"), Scalar::ratio(-1, 4));
        assert_eq!(sc("2e3"), Scalar::from_int(2000));
        assert_eq!(sc("12.5e-1"), Scalar::ratio(5, 4));
        assert_eq!(sc("9/2"), Scalar::ratio(9, 2));
        assert_eq!(sc("-6/-4"), Scalar::ratio(3, 2));
        assert_eq!(sc(".5"), Scalar::ratio(1, 2));
        for bad in ["", "-", "1..2", "abc", "1e", "NaN", "inf", "1/0", "0x10", "1.5.5"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn canonical_equality_across_representations() {
        let huge = sc("170141183460469231731687303715884105727"); // i128::MAX
        let bigger = &huge + &Scalar::one();
        let back = &bigger - &Scalar::one();
        assert_eq!(back, huge);
        assert!(matches!(back.0, Repr::Small(..)));
        assert!(matches!(bigger.0, Repr::Big(..)));
    }

    #[test]
    fn floor_and_display() {
        assert_eq!(Scalar::ratio(-7, 2).floor_i64(), -4);
        assert_eq!(Scalar::ratio(7, 2).floor_i64(), 3);
        assert_eq!(Scalar::ratio(9, 2).to_string(), "9/2");
        assert_eq!(Scalar::from_int(-3).to_string(), "-3");
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        prop_oneof![
            (any::<i64>(), 1i64..1_000_000).prop_map(|(n, d)| Scalar::ratio(n, d)),
            (any::<i128>(), any::<i128>()).prop_filter_map("nonzero", |(n, d)| {
                (d != 0).then(|| Scalar::from_big(BigRational::new(n.into(), d.into())))
            }),
        ]
    }

    proptest! {
        #[test]
        fn arithmetic_matches_bigrational(a in arb_scalar(), b in arb_scalar()) {
            let (x, y) = (a.to_big(), b.to_big());
            prop_assert_eq!((&a + &b).to_big(), &x + &y);
            prop_assert_eq!((&a - &b).to_big(), &x - &y);
            prop_assert_eq!((&a * &b).to_big(), &x * &y);
            prop_assert_eq!(a.cmp(&b), x.cmp(&y));
            if !b.is_zero() {
                prop_assert_eq!((&a / &b).to_big(), &x / &y);
            }
            prop_assert_eq!(Scalar::from_big(x.clone()), a.clone());
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
        }
    }
}
