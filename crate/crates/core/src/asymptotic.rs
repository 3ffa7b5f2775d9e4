//! Asymptotic power-sum series for rational exponents alpha != -1:
//! sum of k^alpha minus its zeta constant expands over u^((alpha+1)/2 - k)
//! with the same coefficients A_k^(w) at w = (alpha+1)/2. Includes the
//! double-sum formula for A_k^(w) built from ordinary Bernoulli numbers,
//! the generalized-binomial prefactor series, the half-power cancellation
//! check, and a numeric telescoping validator.

use std::fmt;

use num::traits::{One, Signed, Zero};

use crate::bernoulli::bernoulli_number;
use crate::error::{Error, Result};
use crate::fixed::{rational_pow, Fixed};
use crate::ladder::LadderSeries;
use crate::number::{factorial, rat, rat_int, rational_binomial, Rat};

/// Coefficient of u^(-l/2) in ((sqrt(1+4u)+1)/(2 sqrt(u)))^(2w), with the
/// removable factor w + l/2 cancelled:
/// (w/(w+l/2)) C(w+l/2, l) = w (w+l/2-1)...(w+l/2-l+1) / l!.
fn prefactor_coefficient(w: &Rat, l: usize) -> Rat {
    if l == 0 {
        return Rat::one();
    }
    let mut acc = w.clone();
    for i in 1..l {
        acc *= w + rat(l as i64, 2) - rat_int(i as i64);
    }
    acc / Rat::from_integer(factorial(l))
}

/// The prefactor as a ladder series with base exponent 0.
pub fn prefactor_series(w: &Rat, order: usize) -> LadderSeries {
    let coeffs = (0..=order).map(|l| prefactor_coefficient(w, l)).collect();
    LadderSeries::truncated(Rat::zero(), coeffs)
}

/// ((sqrt(1+4u)+1)/2)^(-q) as a ladder series with base -q/2:
/// u^(-q/2) - sum_{j>=1} (q/(2j)) C((j-q)/2 - 1, j-1) u^(-(q+j)/2).
pub fn inverse_power_series(q: usize, order: usize) -> LadderSeries {
    let mut coeffs = vec![Rat::one()];
    for j in 1..=order {
        let upper = rat((j as i64) - (q as i64), 2) - Rat::one();
        let c = rat(q as i64, 2 * j as i64) * rational_binomial(&upper, j - 1);
        coeffs.push(-c);
    }
    LadderSeries::truncated(rat(-(q as i64), 2), coeffs)
}

/// A_k^(w) by the explicit double sum over ordinary Bernoulli numbers.
/// Polynomial in w, so it is defined for every rational w and agrees with
/// the recurrence and the symbolic route wherever those are defined.
pub fn coefficient_general(w: &Rat, k: usize) -> Rat {
    let two_w = rat_int(2) * w;
    let mut total = Rat::zero();
    for l in 0..=2 * k {
        let q = 2 * k - l;
        let mut inner = rational_binomial(&two_w, q) * bernoulli_number(q);
        for j in 1..q {
            let upper = rat_int(k as i64) - rat(l as i64, 2) - rat_int(j as i64) - Rat::one();
            inner -= rat(1, 2)
                * rational_binomial(&two_w, j)
                * rat(j as i64, (q - j) as i64)
                * rational_binomial(&upper, q - j - 1)
                * bernoulli_number(j);
        }
        total += prefactor_coefficient(w, l) * inner;
    }
    total
}

/// Build the full A-series ladder prefactor * sum_q C(2w,q) B_q
/// ((sqrt(1+4u)+1)/2)^(-q), normalized by u^(-w) so the base is 0. Half
/// powers must cancel; even slots carry A_k^(w).
pub fn coefficient_ladder(w: &Rat, order: usize) -> LadderSeries {
    let two_w = rat_int(2) * w;
    let mut sum = LadderSeries::truncated(Rat::zero(), vec![Rat::zero(); order + 1]);
    for q in 0..=order {
        let scale = rational_binomial(&two_w, q) * bernoulli_number(q);
        if scale.is_zero() {
            continue;
        }
        let term = inverse_power_series(q, order - q).scale(&scale);
        sum = sum.try_add(&term).expect("same ladder");
    }
    prefactor_series(w, order).try_mul(&sum).expect("same ladder")
}

/// Check that every odd-ladder coefficient of [`coefficient_ladder`]
/// vanishes and that the even ones reproduce [`coefficient_general`].
pub fn half_power_check(w: &Rat, order: usize) -> bool {
    let ladder = coefficient_ladder(w, order);
    for j in 0..=order {
        let c = ladder.coeff(j);
        if j % 2 == 1 {
            if !c.is_zero() {
                return false;
            }
        } else if c != coefficient_general(w, j / 2) {
            return false;
        }
    }
    true
}

/// Truncated asymptotic series for sum_{k<=n} k^alpha - zeta(-alpha):
/// terms A_k^(w)/(alpha+1) u^(w-k) for k = 0..=p, u = n^2+n.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticSeries {
    pub alpha: Rat,
    pub w: Rat,
    /// (exponent w-k, coefficient A_k^(w)/(alpha+1)), exponents
    /// decreasing by 1
    pub terms: Vec<(Rat, Rat)>,
    /// the symbolic constant is zeta(zeta_argument); never evaluated
    pub zeta_argument: Rat,
}

pub fn build_series(alpha: &Rat, p: usize) -> Result<AsymptoticSeries> {
    if *alpha == rat_int(-1) {
        return Err(Error::HarmonicAlpha);
    }
    let w = (alpha + Rat::one()) / rat_int(2);
    let scale = (alpha + Rat::one()).recip();
    let terms = (0..=p)
        .map(|k| (&w - rat_int(k as i64), coefficient_general(&w, k) * &scale))
        .collect();
    Ok(AsymptoticSeries {
        alpha: alpha.clone(),
        w: w.clone(),
        terms,
        zeta_argument: -alpha,
    })
}

impl AsymptoticSeries {
    /// Evaluate the truncated series at u = n^2 + n in fixed-point
    /// arithmetic.
    pub fn evaluate_at(&self, n: u64, bits: u32) -> Result<Fixed> {
        let u = rat_int((n * n + n) as i64);
        let mut acc = Fixed::zero(bits);
        for (e, c) in &self.terms {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&rational_pow(&u, e, bits)?.mul_rat(c));
        }
        Ok(acc)
    }

    /// Magnitude of the first omitted term at the given n.
    pub fn first_omitted(&self, n: u64, bits: u32) -> Result<Fixed> {
        let p = self.terms.len() - 1;
        let k = p + 1;
        let coeff = coefficient_general(&self.w, k) / (&self.alpha + Rat::one());
        let u = rat_int((n * n + n) as i64);
        let e = &self.w - rat_int(k as i64);
        Ok(rational_pow(&u, &e, bits)?.mul_rat(&coeff).abs())
    }
}

impl fmt::Display for AsymptoticSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.terms {
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
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*u^({e})")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + zeta({}) + ...", self.zeta_argument)
    }
}

/// Plain Euler-Maclaurin ladder in n for sum k^alpha, as (exponent,
/// coefficient) pairs: n^(alpha+1)/(alpha+1), n^alpha/2, then
/// (B_{2j}/(2j)!) alpha(alpha-1)...(alpha-2j+2) n^(alpha-2j+1).
pub fn euler_maclaurin_terms(alpha: &Rat, count: usize) -> Vec<(Rat, Rat)> {
    let mut out = Vec::with_capacity(count);
    if count >= 1 {
        out.push(((alpha + Rat::one()), (alpha + Rat::one()).recip()));
    }
    if count >= 2 {
        out.push((alpha.clone(), rat(1, 2)));
    }
    let mut falling = Rat::one();
    let mut j = 0usize;
    while out.len() < count {
        j += 1;
        // extend the falling factorial alpha^(2j-1) = alpha...(alpha-2j+2)
        let lo = if j == 1 { 0 } else { 2 * (j - 1) - 1 };
        for i in lo..2 * j - 1 {
            falling *= alpha - rat_int(i as i64);
        }
        let c = bernoulli_number(2 * j) / Rat::from_integer(factorial(2 * j)) * &falling;
        out.push((alpha - rat_int(2 * j as i64 - 1), c));
    }
    out
}

fn evaluate_ladder_at(terms: &[(Rat, Rat)], point: &Rat, bits: u32) -> Result<Fixed> {
    let mut acc = Fixed::zero(bits);
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&rational_pow(point, e, bits)?.mul_rat(c));
    }
    Ok(acc)
}

/// Outcome of the telescoping validation: the difference S(n2) - S(n1) of
/// the truncated series, which cancels the zeta constant, against the
/// directly summed powers.
#[derive(Clone, Debug)]
pub struct TelescopeReport {
    pub alpha: Rat,
    pub p: usize,
    pub n1: u64,
    pub n2: u64,
    pub bits: u32,
    /// |series difference - direct sum|
    pub abs_error: Rat,
    /// magnitude of the first omitted series term at n1
    pub first_omitted: Rat,
    pub within_bound: bool,
    /// error of the plain Euler-Maclaurin ladder at equal term count,
    /// reported for comparison only
    pub euler_maclaurin_error: Rat,
}

pub fn telescope_check(
    alpha: &Rat,
    p: usize,
    n1: u64,
    n2: u64,
    bits: u32,
) -> Result<TelescopeReport> {
    assert!(n2 > n1 && n1 >= 10);
    let run = |bits: u32| -> Result<(Fixed, Fixed, Fixed)> {
        let series = build_series(alpha, p)?;
        let diff = series.evaluate_at(n2, bits)?.sub(&series.evaluate_at(n1, bits)?);
        let mut direct = Fixed::zero(bits);
        for k in n1 + 1..=n2 {
            direct = direct.add(&rational_pow(&rat_int(k as i64), alpha, bits)?);
        }
        let err = diff.sub(&direct).abs();
        let em = euler_maclaurin_terms(alpha, p + 1);
        let em_diff = evaluate_ladder_at(&em, &rat_int(n2 as i64), bits)?
            .sub(&evaluate_ladder_at(&em, &rat_int(n1 as i64), bits)?);
        let em_err = em_diff.sub(&direct).abs();
        let omitted = series.first_omitted(n1, bits)?;
        Ok((err, omitted, em_err))
    };
    let (err_lo, omitted_lo, em_lo) = run(bits)?;
    let (err_hi, omitted_hi, em_hi) = run(bits + 64)?;
    // the two working precisions must agree far below the quantities
    // being compared, otherwise the result would be rounding noise
    let tol = Rat::new(1.into(), num::BigInt::from(1) << (bits / 2));
    if (err_lo.to_rat() - err_hi.to_rat()).abs() > tol
        || (em_lo.to_rat() - em_hi.to_rat()).abs() > tol
    {
        return Err(Error::PrecisionExhausted {
            bits,
            detail: format!(
                "error estimate moved by more than 2^-{} between precisions",
                bits / 2
            ),
        });
    }
    let abs_error = err_hi.to_rat();
    let first_omitted = omitted_hi.to_rat().abs();
    let _ = omitted_lo;
    Ok(TelescopeReport {
        alpha: alpha.clone(),
        p,
        n1,
        n2,
        bits,
        within_bound: abs_error <= first_omitted,
        abs_error,
        first_omitted,
        euler_maclaurin_error: em_hi.to_rat(),
    })
}
