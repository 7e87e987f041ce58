//! Coefficient types.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, Zero};

/// Anything that can sit in a polynomial coefficient slot.
pub trait Scalar:
    Num + Clone + Debug + Display + PartialEq + Send + Sync + FromPrimitive + std::ops::Neg<Output = Self> + 'static
{
    /// Parse a literal such as `3`, `-7/2` or `1.5`.
    fn parse_literal(s: &str) -> Option<Self>;

    fn is_negative_literal(&self) -> bool;

    fn abs_value(&self) -> Self;
}

/// Coefficient types with exact division. Groebner computations require this.
pub trait ExactField: Scalar + Eq + std::hash::Hash {}

impl Scalar for f64 {
    fn parse_literal(s: &str) -> Option<Self> {
        parse_fraction::<f64>(s)
    }
    fn is_negative_literal(&self) -> bool {
        *self < 0.0
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
}

impl Scalar for f32 {
    fn parse_literal(s: &str) -> Option<Self> {
        parse_fraction::<f32>(s)
    }
    fn is_negative_literal(&self) -> bool {
        *self < 0.0
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
}

fn parse_fraction<F: FromStr + std::ops::Div<Output = F>>(s: &str) -> Option<F> {
    match s.split_once('/') {
        Some((a, b)) => Some(a.trim().parse::<F>().ok()? / b.trim().parse::<F>().ok()?),
        None => s.trim().parse::<F>().ok(),
    }
}

impl Scalar for BigRational {
    fn parse_literal(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((a, b)) => {
                let d = BigInt::from_str(b.trim()).ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(BigRational::new(BigInt::from_str(a.trim()).ok()?, d))
            }
            None => Some(BigRational::from_integer(BigInt::from_str(s).ok()?)),
        }
    }
    fn is_negative_literal(&self) -> bool {
        self.is_negative()
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
}

impl ExactField for BigRational {}

impl Scalar for Ratio<i64> {
    fn parse_literal(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((a, b)) => {
                let d: i64 = b.trim().parse().ok()?;
                if d == 0 {
                    return None;
                }
                Some(Ratio::new(a.trim().parse().ok()?, d))
            }
            None => Some(Ratio::from_integer(s.parse().ok()?)),
        }
    }
    fn is_negative_literal(&self) -> bool {
        self.is_negative()
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
}

impl ExactField for Ratio<i64> {}
