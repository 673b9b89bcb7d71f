//! Truncated formal power series with exact rational coefficients.
//!
//! Only what the generating functions need: ring operations, division by a
//! unit, and square roots of series whose constant term is a rational
//! square. Square roots use Newton's iteration `s <- (s + a/s) / 2`,
//! doubling the number of correct coefficients at every step.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::sequences::SequenceId;
use crate::{Error, Result};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 64;

/// `Σ_{i<order} coeffs[i] x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        PowerSeries { coeffs }
    }

    /// Series with integer coefficients, padded with zeros (or truncated) to `order`.
    pub fn from_integers(order: usize, coeffs: &[i64]) -> Self {
        let mut out = PowerSeries::zero(order);
        for (slot, &c) in out.coeffs.iter_mut().zip(coeffs) {
            *slot = BigRational::from_integer(c.into());
        }
        out
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigRational::zero(); order],
        }
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        let mut out = PowerSeries::zero(order);
        if order > 0 {
            out.coeffs[0] = c;
        }
        out
    }

    pub fn from_integer(order: usize, c: i64) -> Self {
        PowerSeries::constant(order, BigRational::from_integer(c.into()))
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        PowerSeries::from_integers(order, &[0, 1])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<_> = self.coeffs.iter().take(order).cloned().collect();
        coeffs.resize(order, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(k.into()))
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(PowerSeries { coeffs })
    }

    /// `self / other`, by long division; `other` must have a nonzero constant term.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let lead = &other.coeffs[0];
        if lead.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut q: Vec<BigRational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                if !other.coeffs[j].is_zero() {
                    acc -= &other.coeffs[j] * &q[k - j];
                }
            }
            q.push(acc / lead);
        }
        Ok(PowerSeries { coeffs: q })
    }

    pub fn arith(&self, other: &Self, op: SeriesOp) -> Result<Self> {
        match op {
            SeriesOp::Add => self.checked_add(other),
            SeriesOp::Sub => self.checked_sub(other),
            SeriesOp::Mul => self.checked_mul(other),
            SeriesOp::Div => self.checked_div(other),
        }
    }

    /// Principal square root: the constant term is the positive rational root
    /// of `self`'s constant term.
    pub fn sqrt(&self) -> Result<Self> {
        Ok(self.sqrt_stages()?.pop().expect("at least one stage"))
    }

    /// Newton iterates of [`PowerSeries::sqrt`], each at the precision it is
    /// exact to (1, 2, 4, … coefficients, capped at the order).
    pub fn sqrt_stages(&self) -> Result<Vec<Self>> {
        let n = self.order();
        if n == 0 {
            return Ok(vec![self.clone()]);
        }
        let root = rational_sqrt(&self.coeffs[0])?;
        let half = BigRational::new(1.into(), 2.into());
        let mut s = PowerSeries::constant(1, root);
        let mut stages = vec![s.clone()];
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            let a = self.truncate(prec);
            let s_ext = s.truncate(prec);
            let quotient = a.checked_div(&s_ext)?;
            s = (&s_ext + &quotient).scale(&half);
            stages.push(s.clone());
        }
        Ok(stages)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

fn rational_sqrt(c: &BigRational) -> Result<BigRational> {
    let irrational = || Error::IrrationalSquareRoot(c.to_string());
    if !c.is_positive() {
        return Err(irrational());
    }
    let root = |v: &BigInt| -> Option<BigInt> {
        let v: BigUint = v.magnitude().clone();
        let r = v.sqrt();
        (&r * &r == v).then(|| BigInt::from(r))
    };
    let num = root(c.numer()).ok_or_else(irrational)?;
    let den = root(c.denom()).ok_or_else(irrational)?;
    Ok(BigRational::new(num, den))
}

// Operator forms panic on mismatched orders; use the `checked_*` methods
// when the orders are not known to agree.
impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        self.checked_add(rhs)
            .expect("power series orders must match")
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self.checked_sub(rhs)
            .expect("power series orders must match")
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        self.checked_mul(rhs)
            .expect("power series orders must match")
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// The radicals shared by the closed forms, built once per order.
struct Radicals {
    order: usize,
    x: PowerSeries,
    /// `√(1 - 8x)`
    s8: PowerSeries,
    /// `√(1 - 4x)`
    s4: PowerSeries,
    /// `√(2 + 2√(1 - 8x) + 8x)`
    nested_f: PowerSeries,
    /// `√(3 - 4x - 2√(1 - 8x))`
    nested_y: PowerSeries,
}

impl Radicals {
    fn new(order: usize) -> Result<Self> {
        let int = |k| PowerSeries::from_integer(order, k);
        let x = PowerSeries::x(order);
        let s8 = (&int(1) - &x.scale_int(8)).sqrt()?;
        let s4 = (&int(1) - &x.scale_int(4)).sqrt()?;
        let nested_f = (&(&int(2) + &s8.scale_int(2)) + &x.scale_int(8)).sqrt()?;
        let nested_y = (&(&int(3) - &x.scale_int(4)) - &s8.scale_int(2)).sqrt()?;
        Ok(Radicals {
            order,
            x,
            s8,
            s4,
            nested_f,
            nested_y,
        })
    }

    fn int(&self, k: i64) -> PowerSeries {
        PowerSeries::from_integer(self.order, k)
    }

    /// `Σ k_i · term_i / den`
    fn combine(&self, terms: &[(i64, &PowerSeries)], den: i64) -> PowerSeries {
        let mut acc = PowerSeries::zero(self.order);
        for (k, term) in terms {
            acc = &acc + &term.scale_int(*k);
        }
        acc.scale(&BigRational::new(1.into(), den.into()))
    }

    fn closed_form(&self, id: SequenceId) -> PowerSeries {
        let one = self.int(1);
        let (x, s8, s4, r, q) = (&self.x, &self.s8, &self.s4, &self.nested_f, &self.nested_y);
        match id {
            // (1 - √(1-8x)) / 2
            SequenceId::G => self.combine(&[(1, &one), (-1, s8)], 2),
            // (-1 - √(1-8x) + √(2+2√(1-8x)+8x)) / 4
            SequenceId::F => self.combine(&[(-1, &one), (-1, s8), (1, r)], 4),
            // F(x) - x
            SequenceId::T2 => self.combine(&[(-1, &one), (-1, s8), (1, r), (-4, x)], 4),
            SequenceId::T3 => {
                let sr = s8 * r;
                self.combine(&[(2, &one), (2, s8), (-1, r), (-1, &sr)], 8)
            }
            SequenceId::T1 => {
                let sr = s8 * r;
                self.combine(&[(6, &one), (-2, s8), (-3, r), (1, &sr)], 8)
            }
            // (2 - √(1-8x) - √(3-4x-2√(1-8x))) / 2
            SequenceId::Y => self.combine(&[(2, &one), (-1, s8), (-1, q)], 2),
            SequenceId::D2 | SequenceId::D3 => {
                let sq = s8 * q;
                self.combine(&[(-5, &one), (3, s8), (3, q), (4, x), (-1, &sq)], 4)
            }
            SequenceId::D1 => {
                let sq = s8 * q;
                self.combine(&[(4, &one), (-3, s8), (-2, q), (-6, x), (1, &sq)], 2)
            }
            // (1 - √(1-4x)) / 2
            SequenceId::H | SequenceId::Cat => self.combine(&[(1, &one), (-1, s4)], 2),
            SequenceId::K1 => {
                let ps = s4 * s8;
                self.combine(&[(1, &one), (-6, x), (-1, &ps)], 2)
            }
            SequenceId::K2 | SequenceId::K3 => {
                let sp = s8 * s4;
                self.combine(&[(-1, &one), (-1, s8), (1, &sp), (1, s4), (4, x)], 4)
            }
        }
    }
}

/// Generating function of `id` truncated to `order` (coefficients of `x^0..x^{order-1}`).
pub fn generating_function(id: SequenceId, order: usize) -> Result<PowerSeries> {
    Ok(Radicals::new(order)?.closed_form(id))
}

/// Generating functions of several ids, sharing the radical expansions.
pub fn generating_functions(ids: &[SequenceId], order: usize) -> Result<Vec<PowerSeries>> {
    let radicals = Radicals::new(order)?;
    Ok(ids.iter().map(|&id| radicals.closed_form(id)).collect())
}

/// Coefficients of `x^1..x^{order-1}` of the generating function of `id`.
pub fn gf_coefficients(id: SequenceId, order: usize) -> Result<Vec<BigRational>> {
    if order < 2 {
        return Err(Error::OrderTooSmall { got: order, min: 2 });
    }
    strip_constant(id, generating_function(id, order)?)
}

fn strip_constant(id: SequenceId, series: PowerSeries) -> Result<Vec<BigRational>> {
    let mut coeffs = series.into_coeffs();
    if !coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm {
            id,
            value: coeffs[0].to_string(),
        });
    }
    coeffs.remove(0);
    Ok(coeffs)
}
