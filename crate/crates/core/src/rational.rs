//! Exact rationals over arbitrary-precision integers.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Significant digits used by [`Rational::to_decimal`].
pub const DECIMAL_DIGITS: usize = 20;

/// A fully reduced fraction with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// `num / den`. Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        Rational(BigRational::new(num, den))
    }

    pub fn integer(v: i64) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Decimal rendering with [`DECIMAL_DIGITS`] significant digits, rounded
    /// half to even. Zero renders as `"0"`.
    pub fn to_decimal(&self) -> String {
        to_decimal_sig(&self.0, DECIMAL_DIGITS)
    }
}

fn to_decimal_sig(x: &BigRational, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let num = x.numer().abs();
    let den = x.denom().clone();
    let ten = BigInt::from(10);

    // exponent e with 10^e <= |x| < 10^(e+1)
    let mut e: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
    let ge_pow = |e: i64| -> bool {
        if e >= 0 {
            num >= &den * ten.pow(e as u32)
        } else {
            &num * ten.pow((-e) as u32) >= den
        }
    };
    while !ge_pow(e) {
        e -= 1;
    }
    while ge_pow(e + 1) {
        e += 1;
    }

    let shift = digits as i64 - 1 - e;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (&num * ten.pow(shift as u32), den.clone())
    } else {
        (num.clone(), &den * ten.pow((-shift) as u32))
    };
    let (mut q, r) = scaled_num.div_rem(&scaled_den);
    let twice = &r * 2;
    if twice > scaled_den || (twice == scaled_den && q.is_odd()) {
        q += 1;
    }
    if q == ten.pow(digits as u32) {
        q /= &ten;
        e += 1;
    }
    let ds = q.to_string();
    debug_assert_eq!(ds.len(), digits);
    let body = if e >= digits as i64 - 1 {
        format!("{ds}{}", "0".repeat((e - (digits as i64 - 1)) as usize))
    } else if e >= 0 {
        let (int, frac) = ds.split_at(e as usize + 1);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{ds}", "0".repeat((-e - 1) as usize))
    };
    format!("{sign}{body}")
}

impl fmt::Display for Rational {
    /// Always `num/den`, including integers (`1/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    num: String,
    den: String,
    #[serde(default, skip_deserializing)]
    decimal: String,
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            num: self.numer().to_string(),
            den: self.denom().to_string(),
            decimal: self.to_decimal(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let num: BigInt = w.num.parse().map_err(D::Error::custom)?;
        let den: BigInt = w.den.parse().map_err(D::Error::custom)?;
        if den.sign() == Sign::NoSign {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Rational::from_bigints(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = Rational::new(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(r.to_string(), "-2/3");
        assert_eq!(Rational::integer(1).to_string(), "1/1");
        assert_eq!(Rational::zero().to_string(), "0/1");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Rational::new(7, 12).to_decimal(), "0.58333333333333333333");
        assert_eq!(Rational::new(2, 3).to_decimal(), "0.66666666666666666667");
        assert_eq!(Rational::one().to_decimal(), "1.0000000000000000000");
        assert_eq!(Rational::zero().to_decimal(), "0");
        assert_eq!(Rational::new(-1, 8).to_decimal(), "-0.12500000000000000000");
        assert_eq!(
            Rational::new(1, 300).to_decimal(),
            "0.0033333333333333333333"
        );
        assert_eq!(Rational::integer(123).to_decimal(), "123.00000000000000000");
        assert_eq!(
            Rational::from_bigints(BigInt::from(10).pow(25), 1.into()).to_decimal(),
            "10000000000000000000000000"
        );
    }

    #[test]
    fn decimal_rounds_half_to_even() {
        // 21 significant digits ending in 5 exactly: round to even
        let ten20 = BigInt::from(10).pow(20);
        let up = Rational::from_bigints(BigInt::from(100000000000000000015u128), ten20.clone());
        assert_eq!(up.to_decimal(), "1.0000000000000000002");
        let down = Rational::from_bigints(BigInt::from(100000000000000000005u128), ten20.clone());
        assert_eq!(down.to_decimal(), "1.0000000000000000000");
        // carry into a new digit
        let carry = Rational::from_bigints(BigInt::from(999999999999999999995u128), ten20);
        assert_eq!(carry.to_decimal(), "10.000000000000000000");
    }

    #[test]
    fn json_wire_format() {
        let r = Rational::new(5, 6);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["num"], "5");
        assert_eq!(v["den"], "6");
        assert_eq!(v["decimal"], "0.83333333333333333333");
        let back: Rational = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<Rational>(r#"{"num":"1","den":"0"}"#).is_err());
    }
}
