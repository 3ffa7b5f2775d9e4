//! Guarded fixed-point arithmetic over big integers, used only by the
//! asymptotic telescoping harness. A value is mant / 2^bits; every
//! operation keeps the scale and rounds to nearest, so each primitive is
//! accurate to one unit in the last place. Rational powers of positive
//! rationals go through exact integer powers and floor nth roots.

use std::cmp::Ordering;

use num::traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::number::{Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed {
    mant: Int,
    bits: u32,
}

/// Nearest integer to a/b, ties away from zero. b must be positive.
fn round_div(a: &Int, b: &Int) -> Int {
    debug_assert!(b.is_positive());
    let two_a: Int = a * 2;
    let twice = &two_a + b * two_a.signum();
    twice / (b * 2)
}

impl Fixed {
    pub fn zero(bits: u32) -> Self {
        Fixed { mant: Int::zero(), bits }
    }

    pub fn from_rat(r: &Rat, bits: u32) -> Self {
        let scaled = r.numer() << bits;
        Fixed { mant: round_div(&scaled, r.denom()), bits }
    }

    pub fn to_rat(&self) -> Rat {
        Rat::new(self.mant.clone(), Int::from(1) << self.bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Fixed { mant: self.mant.abs(), bits: self.bits }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.bits, other.bits);
        Fixed { mant: &self.mant + &other.mant, bits: self.bits }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.bits, other.bits);
        Fixed { mant: &self.mant - &other.mant, bits: self.bits }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.bits, other.bits);
        let prod = &self.mant * &other.mant;
        Fixed { mant: round_div(&prod, &(Int::from(1) << self.bits)), bits: self.bits }
    }

    /// Multiply by an exact rational.
    pub fn mul_rat(&self, r: &Rat) -> Self {
        let prod = &self.mant * r.numer();
        Fixed { mant: round_div(&prod, r.denom()), bits: self.bits }
    }

    pub fn recip(&self) -> Self {
        let scaled = Int::from(1) << (2 * self.bits);
        let mant = if self.mant.is_negative() {
            -round_div(&scaled, &self.mant.abs())
        } else {
            round_div(&scaled, &self.mant)
        };
        Fixed { mant, bits: self.bits }
    }

    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.bits, other.bits);
        self.mant.abs().cmp(&other.mant.abs())
    }

    /// Decimal rendering with the given number of fractional digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scaled = self.mant.abs() * Int::from(10).pow(digits);
        let q = round_div(&scaled, &(Int::from(1) << self.bits));
        let s = q.to_string();
        let sign = if self.mant.is_negative() { "-" } else { "" };
        let d = digits as usize;
        if s.len() <= d {
            format!("{sign}0.{:0>width$}", s, width = d)
        } else {
            let (int_part, frac) = s.split_at(s.len() - d);
            format!("{sign}{int_part}.{frac}")
        }
    }
}

/// base^expo for positive rational base and rational exponent, at the
/// given precision. Exact integer powers are taken in rational arithmetic;
/// a q-th root is then extracted with 64 guard bits.
pub fn rational_pow(base: &Rat, expo: &Rat, bits: u32) -> Result<Fixed> {
    if !base.is_positive() {
        return Err(Error::BadShape(format!(
            "rational_pow needs a positive base, got {base}"
        )));
    }
    let p: i64 = expo
        .numer()
        .to_i64()
        .ok_or_else(|| Error::OutOfRange("exponent numerator too large".into()))?;
    let q: u32 = expo
        .denom()
        .to_u32()
        .ok_or_else(|| Error::OutOfRange("exponent denominator too large".into()))?;
    let t = if p >= 0 {
        num::traits::Pow::pow(base, p as u64)
    } else {
        num::traits::Pow::pow(&base.recip(), (-p) as u64)
    };
    if q == 1 {
        return Ok(Fixed::from_rat(&t, bits));
    }
    const GUARD: u32 = 64;
    let scale = bits + GUARD;
    // floor( (t * 2^(q*scale))^(1/q) ) at scale bits+GUARD, then round down
    let scaled = (t.numer() << (q as usize * scale as usize)) / t.denom();
    let root = scaled.nth_root(q);
    Ok(Fixed {
        mant: round_div(&root, &(Int::from(1) << GUARD)),
        bits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{rat, rat_int};

    #[test]
    fn exact_roots_come_out_exact() {
        let two = rational_pow(&rat_int(4), &rat(1, 2), 128).unwrap();
        assert_eq!(two.to_rat(), rat_int(2));
        let half = rational_pow(&rat_int(8), &rat(-1, 3), 128).unwrap();
        assert_eq!(half.to_rat(), rat(1, 2));
        let nine = rational_pow(&rat(1, 9), &rat_int(-1), 96).unwrap();
        assert_eq!(nine.to_rat(), rat_int(9));
    }

    #[test]
    fn irrational_roots_are_tight() {
        // sqrt(2) to 200 bits, squared back, should sit within a few ulps of 2
        let r = rational_pow(&rat_int(2), &rat(1, 2), 200).unwrap();
        let sq = r.mul(&r);
        let err = sq.sub(&Fixed::from_rat(&rat_int(2), 200));
        let ulps = Fixed { mant: Int::from(8), bits: 200 };
        assert_eq!(err.abs().cmp_abs(&ulps), Ordering::Less);
    }

    #[test]
    fn matches_f64_roughly() {
        for (b, e) in [(rat_int(50), rat(1, 3)), (rat(7, 2), rat(-2, 5)), (rat_int(2550), rat(-5, 2))] {
            let hi = rational_pow(&b, &e, 160).unwrap().to_rat();
            let expect = (b.numer().to_f64().unwrap() / b.denom().to_f64().unwrap())
                .powf(e.numer().to_f64().unwrap() / e.denom().to_f64().unwrap());
            let got = hi.numer().to_f64().unwrap() / hi.denom().to_f64().unwrap();
            assert!((got - expect).abs() <= 1e-12 * expect.abs(), "{got} vs {expect}");
        }
    }

    #[test]
    fn decimal_rendering() {
        let x = Fixed::from_rat(&rat(-5, 4), 64);
        assert_eq!(x.to_decimal(3), "-1.250");
        let y = Fixed::from_rat(&rat(1, 3), 64);
        assert_eq!(y.to_decimal(6), "0.333333");
    }

    #[test]
    fn negative_base_is_rejected() {
        assert!(rational_pow(&rat_int(-2), &rat(1, 2), 64).is_err());
    }
}
