//! Truncated formal series on a half-integer exponent ladder.
//!
//! A `LadderSeries` represents sum_j c_j * u^(base - j/2) for j = 0..len-1.
//! Coefficients beyond the stored length are unknown, not zero, unless the
//! series is marked exact. Every series in this crate lives on the step -1/2
//! ladder; integer-step series embed with zero odd coefficients.

use std::fmt;

use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::number::{rat, Rat};

#[derive(Clone, Debug, PartialEq)]
pub struct LadderSeries {
    base: Rat,
    coeffs: Vec<Rat>,
    exact: bool,
}

impl LadderSeries {
    /// A series whose coefficients beyond the stored ones are unknown.
    pub fn truncated(base: Rat, coeffs: Vec<Rat>) -> Self {
        LadderSeries { base, coeffs, exact: false }
    }

    /// A series that is exactly the stored terms (no O-tail).
    pub fn exact(base: Rat, coeffs: Vec<Rat>) -> Self {
        LadderSeries { base, coeffs, exact: true }
    }

    pub fn one() -> Self {
        LadderSeries::exact(Rat::zero(), vec![Rat::one()])
    }

    pub fn base(&self) -> &Rat {
        &self.base
    }

    /// Number of known coefficients (half-steps below the base).
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Rat {
        self.coeffs.get(j).cloned().unwrap_or_else(Rat::zero)
    }

    /// Exponent of the j-th slot: base - j/2.
    pub fn exponent(&self, j: usize) -> Rat {
        &self.base - rat(j as i64, 2)
    }

    /// Coefficient at a given exponent, when the exponent sits on the ladder
    /// within the known range.
    pub fn coeff_at(&self, exponent: &Rat) -> Option<Rat> {
        let steps = (&self.base - exponent) * rat(2, 1);
        if !steps.denom().is_one() || steps.is_negative() {
            return None;
        }
        let j = steps.numer().try_into().ok()?;
        if j < self.coeffs.len() || self.exact {
            Some(self.coeff(j))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        LadderSeries {
            base: self.base.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            exact: self.exact,
        }
    }

    /// Multiply every exponent by shifting the base.
    pub fn shift_base(&self, by: &Rat) -> Self {
        LadderSeries {
            base: &self.base + by,
            coeffs: self.coeffs.clone(),
            exact: self.exact,
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut out = self.clone();
        if out.coeffs.len() > order {
            out.coeffs.truncate(order);
            out.exact = false;
        }
        out
    }

    fn half_step_offset(&self, other: &Self) -> Result<i64> {
        let diff = (&self.base - &other.base) * rat(2, 1);
        if diff.denom().is_one() {
            Ok(diff.numer().try_into().expect("offset fits in i64"))
        } else {
            Err(Error::LadderMismatch(self.base.clone(), other.base.clone()))
        }
    }

    /// Sum of two series whose bases differ by a multiple of 1/2. The known
    /// length is limited by whichever operand's knowledge ends first.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let offset = self.half_step_offset(other)?;
        // align to the higher base
        let (hi, lo, off) = if offset >= 0 {
            (self, other, offset as usize)
        } else {
            (other, self, (-offset) as usize)
        };
        let hi_end = if hi.exact { usize::MAX } else { hi.coeffs.len() };
        let lo_end = if lo.exact { usize::MAX } else { lo.coeffs.len() + off };
        let known = hi_end.min(lo_end);
        let stored = if known == usize::MAX {
            hi.coeffs.len().max(lo.coeffs.len() + off)
        } else {
            known
        };
        let mut coeffs = vec![Rat::zero(); stored];
        for (j, c) in coeffs.iter_mut().enumerate() {
            let mut v = hi.coeff(j);
            if j >= off {
                v += lo.coeff(j - off);
            }
            *c = v;
        }
        Ok(LadderSeries {
            base: hi.base.clone(),
            coeffs,
            exact: known == usize::MAX,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&rat(-1, 1)))
    }

    /// Cauchy product. The result is known to min(order_a, order_b)
    /// half-steps (exact series impose no limit).
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let a_end = if self.exact { usize::MAX } else { self.coeffs.len() };
        let b_end = if other.exact { usize::MAX } else { other.coeffs.len() };
        let known = a_end.min(b_end);
        let stored = if known == usize::MAX {
            (self.coeffs.len() + other.coeffs.len()).saturating_sub(1).max(1)
        } else {
            known
        };
        let mut coeffs = vec![Rat::zero(); stored];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j < stored {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(LadderSeries {
            base: &self.base + &other.base,
            coeffs,
            exact: known == usize::MAX,
        })
    }
}

impl fmt::Display for LadderSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let e = self.exponent(j);
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "u^({e})")?;
            } else {
                write!(f, "{mag}*u^({e})")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        if !self.exact {
            write!(f, " + O(u^({}))", self.exponent(self.coeffs.len()))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rat_int;

    #[test]
    fn product_of_conjugates() {
        // (1 + u^(-1/2)) * (1 - u^(-1/2)) known to three half-steps
        let a = LadderSeries::truncated(Rat::zero(), vec![rat_int(1), rat_int(1), rat_int(0)]);
        let b = LadderSeries::truncated(Rat::zero(), vec![rat_int(1), rat_int(-1), rat_int(0)]);
        let p = a.try_mul(&b).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(p.coeffs(), &[rat_int(1), rat_int(0), rat_int(-1)]);
    }

    #[test]
    fn multiply_by_exact_one_is_identity() {
        let s = LadderSeries::truncated(rat(3, 2), vec![rat_int(2), rat(1, 3), rat(-5, 7)]);
        let p = s.try_mul(&LadderSeries::one()).unwrap();
        assert_eq!(p, s);
    }

    #[test]
    fn add_aligns_bases() {
        // u + 1  plus  u^(1/2): bases differ by a half step
        let a = LadderSeries::truncated(rat_int(1), vec![rat_int(1), rat_int(0), rat_int(1)]);
        let b = LadderSeries::truncated(rat(1, 2), vec![rat_int(1), rat_int(0)]);
        let s = a.try_add(&b).unwrap();
        assert_eq!(s.base(), &rat_int(1));
        assert_eq!(s.coeffs(), &[rat_int(1), rat_int(1), rat_int(1)]);
    }

    #[test]
    fn incompatible_ladders_are_rejected() {
        let a = LadderSeries::truncated(rat_int(0), vec![rat_int(1)]);
        let b = LadderSeries::truncated(rat(1, 3), vec![rat_int(1)]);
        assert!(matches!(a.try_add(&b), Err(Error::LadderMismatch(_, _))));
    }

    #[test]
    fn coeff_at_exponent() {
        let s = LadderSeries::truncated(rat(1, 3), vec![rat_int(4), rat_int(5), rat_int(6)]);
        assert_eq!(s.coeff_at(&rat(1, 3)), Some(rat_int(4)));
        assert_eq!(s.coeff_at(&rat(-2, 3)), Some(rat_int(6)));
        assert_eq!(s.coeff_at(&rat(-7, 6)), None); // below known range
        assert_eq!(s.coeff_at(&rat(1, 4)), None); // off the ladder
    }
}
