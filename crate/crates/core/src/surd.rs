//! Exact numbers `a + b√k` with rational `a`, `b` and a square-free radicand `k`.
//!
//! Rationals are surds with `b = 0`; they combine with a surd of any
//! radicand. Two irrational surds only combine when their radicands agree.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    rational: BigRational,
    radical: BigRational,
    /// 1 when `radical` is zero.
    radicand: u32,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl Surd {
    /// `a + b√k`; `k` must be square-free (checked in debug builds).
    pub fn new(a: BigRational, b: BigRational, k: u32) -> Self {
        debug_assert!(
            k >= 1 && is_square_free(k),
            "radicand {k} is not square-free"
        );
        if b.is_zero() || k == 1 {
            let rational = if k == 1 { a + b } else { a };
            return Surd::rational(rational);
        }
        Surd {
            rational: a,
            radical: b,
            radicand: k,
        }
    }

    /// `(a_num/a_den) + (b_num/b_den)√k`.
    pub fn from_parts(a_num: i64, a_den: i64, b_num: i64, b_den: i64, k: u32) -> Self {
        Surd::new(ratio(a_num, a_den), ratio(b_num, b_den), k)
    }

    pub fn rational(q: BigRational) -> Self {
        Surd {
            rational: q,
            radical: BigRational::zero(),
            radicand: 1,
        }
    }

    pub fn integer(n: i64) -> Self {
        Surd::rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Surd::integer(0)
    }

    pub fn one() -> Self {
        Surd::integer(1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.radical
    }

    pub fn radicand(&self) -> u32 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radical.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }

    fn common_radicand(&self, other: &Surd) -> Result<u32> {
        match (self.radicand, other.radicand) {
            (1, k) | (k, 1) => Ok(k),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::RadicandMismatch { left: a, right: b }),
        }
    }

    pub fn checked_add(&self, other: &Surd) -> Result<Surd> {
        let k = self.common_radicand(other)?;
        Ok(Surd::new(
            &self.rational + &other.rational,
            &self.radical + &other.radical,
            k,
        ))
    }

    pub fn checked_sub(&self, other: &Surd) -> Result<Surd> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Surd) -> Result<Surd> {
        let k = self.common_radicand(other)?;
        let kq = BigRational::from_integer(k.into());
        let a = &self.rational * &other.rational + &self.radical * &other.radical * kq;
        let b = &self.rational * &other.radical + &self.radical * &other.rational;
        Ok(Surd::new(a, b, k))
    }

    pub fn checked_div(&self, other: &Surd) -> Result<Surd> {
        self.checked_mul(&other.recip()?)
    }

    /// `1 / (a + b√k) = (a - b√k) / (a² - k b²)`.
    pub fn recip(&self) -> Result<Surd> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = BigRational::from_integer(self.radicand.into());
        // nonzero because √k is irrational whenever b ≠ 0
        let norm = &self.rational * &self.rational - &self.radical * &self.radical * k;
        Ok(Surd::new(
            &self.rational / &norm,
            -&self.radical / &norm,
            self.radicand,
        ))
    }

    pub fn neg(&self) -> Surd {
        Surd {
            rational: -&self.rational,
            radical: -&self.radical,
            radicand: self.radicand,
        }
    }

    pub fn abs(&self) -> Surd {
        if self.signum() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact sign, without any approximation of `√k`.
    pub fn signum(&self) -> Ordering {
        let zero = BigRational::zero();
        let a = self.rational.cmp(&zero);
        let b = self.radical.cmp(&zero);
        if b == Ordering::Equal {
            return a;
        }
        if a == Ordering::Equal || a == b {
            return b;
        }
        // opposite signs: compare a² with k b²
        let k = BigRational::from_integer(self.radicand.into());
        let lhs = &self.rational * &self.rational;
        let rhs = &self.radical * &self.radical * k;
        match lhs.cmp(&rhs) {
            Ordering::Greater => a,
            Ordering::Less => b,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn cmp_exact(&self, other: &Surd) -> Result<Ordering> {
        Ok(self.checked_sub(other)?.signum())
    }

    /// `floor(self)`.
    pub fn floor(&self) -> BigInt {
        // estimate with an integer square root, then correct exactly
        let k = BigUint::from(self.radicand);
        let b = &self.radical;
        let b2k = (b * b) * BigRational::from_integer(BigInt::from(k));
        let root_floor = BigRational::from_integer(
            (b2k.numer().magnitude() / b2k.denom().magnitude())
                .sqrt()
                .into(),
        );
        let radical_estimate = if b.is_negative() {
            -root_floor
        } else {
            root_floor
        };
        let mut guess = (&self.rational + radical_estimate).floor().to_integer();
        loop {
            let g = Surd::rational(BigRational::from_integer(guess.clone()));
            if self.checked_sub(&g).expect("rational").signum() == Ordering::Less {
                guess -= 1;
                continue;
            }
            let g1 = Surd::rational(BigRational::from_integer(&guess + 1));
            if self.checked_sub(&g1).expect("rational").signum() != Ordering::Less {
                guess += 1;
                continue;
            }
            return guess;
        }
    }

    /// Scaled by `10^digits` and rounded half-to-even, as a signed integer.
    pub fn round_scaled(&self, digits: usize) -> BigInt {
        let scale = BigRational::from_integer(BigInt::from(10u32).pow(digits as u32));
        let scaled = Surd::new(
            &self.rational * &scale,
            &self.radical * &scale,
            self.radicand,
        );
        let floor = scaled.floor();
        let half = Surd::new(
            BigRational::from_integer(floor.clone()) + ratio(1, 2),
            BigRational::zero(),
            1,
        );
        match scaled.cmp_exact(&half).expect("rational") {
            Ordering::Less => floor,
            Ordering::Greater => floor + 1,
            Ordering::Equal if floor.is_even() => floor,
            Ordering::Equal => floor + 1,
        }
    }

    pub fn to_decimal(&self, digits: usize) -> String {
        crate::decimal::format_scaled(&self.round_scaled(digits), digits)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.rational.to_f64().unwrap_or(f64::NAN)
            + self.radical.to_f64().unwrap_or(f64::NAN) * f64::from(self.radicand).sqrt()
    }
}

fn is_square_free(k: u32) -> bool {
    (2..=k.sqrt()).all(|p| !k.is_multiple_of(p * p))
}

impl fmt::Display for Surd {
    /// `a + b*sqrt(k)` with the rational parts in lowest terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational);
        }
        let b = &self.radical;
        let coeff = if b.abs().is_one() {
            String::new()
        } else {
            format!("{}*", b.abs())
        };
        let sign = if b.is_negative() { "-" } else { "+" };
        if self.rational.is_zero() {
            let lead = if b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coeff}sqrt({})", self.radicand)
        } else {
            write!(f, "{} {sign} {coeff}sqrt({})", self.rational, self.radicand)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a_num: i64, a_den: i64, b_num: i64, b_den: i64, k: u32) -> Surd {
        Surd::from_parts(a_num, a_den, b_num, b_den, k)
    }

    #[test]
    fn field_operations() {
        let x = s(3, 1, -1, 1, 3); // 3 - √3
        let y = s(3, 1, 1, 1, 3); // 3 + √3
        assert_eq!(x.checked_mul(&y).unwrap(), Surd::integer(6));
        assert_eq!(x.checked_add(&y).unwrap(), Surd::integer(6));
        let q = x.checked_div(&y).unwrap();
        assert_eq!(q.checked_mul(&y).unwrap(), x);
        assert_eq!(x.recip().unwrap().checked_mul(&x).unwrap(), Surd::one());
        assert_eq!(Surd::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_radicands_are_rejected() {
        let a = s(0, 1, 1, 1, 2);
        let b = s(0, 1, 1, 1, 3);
        assert_eq!(
            a.checked_add(&b),
            Err(Error::RadicandMismatch { left: 2, right: 3 })
        );
        assert!(a.checked_add(&Surd::integer(5)).is_ok());
    }

    #[test]
    fn exact_sign() {
        assert_eq!(s(3, 1, -1, 1, 3).signum(), Ordering::Greater);
        assert_eq!(s(-2, 1, 1, 1, 3).signum(), Ordering::Less);
        assert_eq!(s(30, 1, -9, 1, 10).signum(), Ordering::Greater); // 30 > 28.46
        assert_eq!(s(20, 1, -9, 1, 10).signum(), Ordering::Less);
        assert_eq!(Surd::zero().signum(), Ordering::Equal);
    }

    #[test]
    fn decimals() {
        assert_eq!(s(3, 6, -1, 6, 3).to_decimal(12), "0.211324865405");
        assert_eq!(
            s(0, 1, 1, 1, 2).to_decimal(30),
            "1.414213562373095048801688724210"
        );
        assert_eq!(Surd::rational(ratio(1, 2)).to_decimal(3), "0.500");
        assert_eq!(s(0, 1, -1, 1, 2).to_decimal(4), "-1.4142");
        // ties go to even
        assert_eq!(Surd::rational(ratio(1, 8)).to_decimal(2), "0.12");
        assert_eq!(Surd::rational(ratio(3, 8)).to_decimal(2), "0.38");
    }

    #[test]
    fn floor_is_exact() {
        assert_eq!(s(0, 1, 1, 1, 2).floor(), BigInt::from(1));
        assert_eq!(s(0, 1, -1, 1, 2).floor(), BigInt::from(-2));
        assert_eq!(s(1, 3, 0, 1, 1).floor(), BigInt::from(0));
        assert_eq!(Surd::integer(-3).floor(), BigInt::from(-3));
    }

    #[test]
    fn display() {
        assert_eq!(s(1, 2, -1, 6, 3).to_string(), "1/2 - 1/6*sqrt(3)");
        assert_eq!(s(0, 1, 1, 2, 2).to_string(), "1/2*sqrt(2)");
        assert_eq!(s(0, 1, -1, 1, 2).to_string(), "-sqrt(2)");
        assert_eq!(Surd::integer(0).to_string(), "0");
    }
}
