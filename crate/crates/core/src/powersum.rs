//! r-fold power sums, their Faulhaber forms in N_r = (n^2+rn)/2, the
//! odd-exponent reduction recurrence, and the even/odd duality that turns a
//! formula for one parity into a formula for the other.

use std::fmt;

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::number::{binomial, pow2, rat, rat_int, Rat};
use crate::poly::{antidifference, substitute_faulhaber, Poly, Var};

/// Which power sum the polynomial part multiplies.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// Sigma^r n^1 (odd exponents)
    SigmaN1,
    /// Sigma^r n^2 (even exponents)
    SigmaN2,
}

impl FactorKind {
    pub fn exponent(self) -> u32 {
        match self {
            FactorKind::SigmaN1 => 1,
            FactorKind::SigmaN2 => 2,
        }
    }
}

/// Sigma^r n^m written as g(N_r) times Sigma^r n^1 or Sigma^r n^2.
#[derive(Clone, Debug, PartialEq)]
pub struct FaulhaberForm {
    pub r: u32,
    pub m: u32,
    /// polynomial part in N = (n^2 + rn)/2
    pub g: Poly,
    pub factor: FactorKind,
}

impl FaulhaberForm {
    /// The factor polynomial Sigma^r n^1 or Sigma^r n^2 expanded in n.
    pub fn factor_poly(&self) -> Poly {
        power_sum(self.factor.exponent(), self.r)
    }

    /// Expand the whole form back into a polynomial in n.
    pub fn expand(&self) -> Poly {
        substitute_faulhaber(&self.g, self.r)
            .try_mul(&self.factor_poly())
            .expect("same variable")
    }

    /// For r = 1 and odd m the factor is N itself, so the form collapses to
    /// a pure polynomial in N.
    pub fn collapsed_n_polynomial(&self) -> Option<Poly> {
        if self.r == 1 && self.factor == FactorKind::SigmaN1 {
            Some(
                self.g
                    .try_mul(&Poly::identity(Var::CapN))
                    .expect("same variable"),
            )
        } else {
            None
        }
    }
}

impl fmt::Display for FaulhaberForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sigma^{} n^{} = ({}) * sigma^{} n^{}",
            self.r,
            self.m,
            self.g,
            self.r,
            self.factor.exponent()
        )
    }
}

/// Sigma^r n^m: the unique polynomial of degree m + r agreeing with the
/// r-fold repeated sum of m-th powers; r = 0 gives n^m itself.
pub fn power_sum(m: u32, r: u32) -> Poly {
    let mut p = Poly::monomial(Var::N, Rat::one(), m as usize);
    for _ in 0..r {
        p = antidifference(&p);
    }
    p
}

/// Rewrite an r-reflective polynomial in n as a polynomial in N = n(n+r)/2
/// by repeated exact division by n^2 + rn. Fails when a division step
/// leaves a non-constant remainder.
fn rewrite_in_triangular(q: &Poly, r: u32) -> Result<Poly> {
    let v = Poly::new(Var::N, vec![Rat::zero(), rat_int(r as i64), Rat::one()]);
    let mut rest = q.clone();
    let mut coeffs = Vec::new();
    while !rest.is_zero() {
        let (quot, rem) = rest.divrem(&v)?;
        if rem.degree().is_some_and(|d| d >= 1) {
            return Err(Error::NotDivisible(format!(
                "{q} is not a polynomial in n(n+{r})"
            )));
        }
        coeffs.push(rem.coeff(0));
        rest = quot;
    }
    // v = 2N, so the v^k coefficient picks up 2^k
    let coeffs = coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| c * Rat::from_integer(pow2(k)))
        .collect();
    Ok(Poly::new(Var::CapN, coeffs))
}

/// Faulhaber form of Sigma^r n^m: exact division by the factor power sum,
/// then rewriting of the quotient in N_r. The underlying theorem guarantees
/// divisibility, so a nonzero remainder signals a bug.
pub fn to_faulhaber_form(m: u32, r: u32) -> Result<FaulhaberForm> {
    if m == 0 || r == 0 {
        return Err(Error::OutOfRange(format!(
            "faulhaber form needs m >= 1 and r >= 1, got m = {m}, r = {r}"
        )));
    }
    let factor = if m % 2 == 1 {
        FactorKind::SigmaN1
    } else {
        FactorKind::SigmaN2
    };
    let quotient = power_sum(m, r).exact_div(&power_sum(factor.exponent(), r))?;
    let g = rewrite_in_triangular(&quotient, r)?;
    Ok(FaulhaberForm { r, m, g, factor })
}

/// The reduction 2m Sigma n^(2m-1) = n^m (n+1)^m - S(n) with
/// S(n) = sum over odd j >= 3 of 2 C(m,j) Sigma n^(2m-j), i.e.
/// Sigma n^(2m-1) = (2^(m-1)/m) N^m - sum of lower odd power sums.
#[derive(Clone, Debug, PartialEq)]
pub struct OddReduction {
    pub m: u32,
    /// coefficient of N^m
    pub leading: Rat,
    /// (odd exponent 2m - j, coefficient) pairs of the subtracted sums
    pub lower: Vec<(u32, Rat)>,
    /// the same exponents with the coefficients 2 C(m,j) of S(n)
    pub s_terms: Vec<(u32, Rat)>,
}

impl OddReduction {
    /// Apply the reduction recursively, producing the full polynomial in N
    /// for Sigma n^(2m-1).
    pub fn resolve(&self) -> Poly {
        let mut acc = Poly::monomial(Var::CapN, self.leading.clone(), self.m as usize);
        for (exp, c) in &self.lower {
            let sub = derive_odd_reduction((exp + 1) / 2).resolve().scale(c);
            acc = acc.try_sub(&sub).expect("same variable");
        }
        acc
    }
}

/// Expand n^m (n+1)^m - (n-1)^m n^m = 2 sum_{odd j} C(m,j) n^(2m-j) and
/// solve for the leading odd power.
pub fn derive_odd_reduction(m: u32) -> OddReduction {
    assert!(m >= 1);
    let leading = Rat::new(pow2(m as usize - 1), m.into());
    let mut lower = Vec::new();
    let mut s_terms = Vec::new();
    let mut j = 3;
    while j <= m {
        let b = Rat::from_integer(binomial(m as u64, j as usize));
        lower.push((2 * m - j, &b / rat_int(m as i64)));
        s_terms.push((2 * m - j, b * rat_int(2)));
        j += 2;
    }
    OddReduction { m, leading, lower, s_terms }
}

/// Direction of the even/odd conversion.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DualDirection {
    OddToEven,
    EvenToOdd,
}

/// From Sigma n^(2m+1) = sum_k (a_k/(k+1)) N^(k+1) extract (a_1, ..., a_m),
/// so that Sigma n^(2m) = ((n+1/2)/(2m+1)) (a_1 N + ... + a_m N^m).
pub fn odd_to_even_dual(odd_poly: &Poly) -> Result<Vec<Rat>> {
    if odd_poly.var() != Var::CapN {
        return Err(Error::VarMismatch(odd_poly.var(), Var::CapN));
    }
    if !odd_poly.coeff(0).is_zero() || !odd_poly.coeff(1).is_zero() {
        return Err(Error::BadShape(
            "odd power sum must have zero constant and zero N^1 coefficient".into(),
        ));
    }
    let d = odd_poly
        .degree()
        .ok_or_else(|| Error::BadShape("zero polynomial".into()))?;
    Ok((1..d)
        .map(|k| odd_poly.coeff(k + 1) * rat_int((k + 1) as i64))
        .collect())
}

/// Inverse of [`odd_to_even_dual`]: rebuild the N-polynomial of the odd sum
/// from the even-sum coefficient list.
pub fn even_to_odd_dual(a: &[Rat]) -> Poly {
    let mut coeffs = vec![Rat::zero(); a.len() + 2];
    for (i, ak) in a.iter().enumerate() {
        let k = i + 1;
        coeffs[k + 1] = ak / rat_int((k + 1) as i64);
    }
    Poly::new(Var::CapN, coeffs)
}

/// The even sum built from its dual list: ((n+1/2)/(2m+1)) sum_k a_k N^k,
/// expanded as a polynomial in n.
pub fn even_sum_from_dual(a: &[Rat]) -> Poly {
    let m = a.len() as u32;
    let mut inner = Poly::zero(Var::CapN);
    for (i, ak) in a.iter().enumerate() {
        inner = inner
            .try_add(&Poly::monomial(Var::CapN, ak.clone(), i + 1))
            .expect("same variable");
    }
    let half = Poly::new(Var::N, vec![rat(1, 2), Rat::one()]);
    substitute_faulhaber(&inner, 1)
        .try_mul(&half)
        .expect("same variable")
        .scale(&rat(1, (2 * m + 1) as i64))
}
