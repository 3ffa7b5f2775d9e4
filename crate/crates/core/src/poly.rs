//! Dense univariate polynomials over exact rationals, tagged by variable,
//! together with the backward difference and antidifference operators.

use std::fmt;

use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::number::{factorial, lcm, rat_int, Int, Rat};

/// Variable tag carried by every polynomial. Arithmetic between mismatched
/// tags is rejected.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    /// the summation variable n
    N,
    /// the triangular argument N = (n^2+rn)/2
    CapN,
    /// u = 2N = n^2 + n
    U,
    /// the coefficient order w
    W,
    /// a generic argument x
    X,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::N => 'n',
            Var::CapN => 'N',
            Var::U => 'u',
            Var::W => 'w',
            Var::X => 'x',
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Polynomial with coefficients indexed by degree. The highest-degree stored
/// coefficient is nonzero; the zero polynomial stores no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(var: Var, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        Poly::new(var, vec![c])
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(var, Rat::one())
    }

    /// c * x^k
    pub fn monomial(var: Var, c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(var, coeffs)
    }

    /// The variable itself.
    pub fn identity(var: Var) -> Self {
        Poly::monomial(var, Rat::one(), 1)
    }

    /// C(x + shift, k) expanded as a polynomial in x.
    pub fn binomial(var: Var, shift: i64, k: usize) -> Self {
        let mut acc = Poly::one(var);
        for i in 0..k {
            acc = acc.mul_raw(&Poly::new(
                var,
                vec![rat_int(shift - i as i64), Rat::one()],
            ));
        }
        acc.scale(&Rat::from_integer(factorial(k)).recip())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Reinterpret the same coefficients under another variable tag.
    pub fn with_var(&self, var: Var) -> Poly {
        Poly { var, coeffs: self.coeffs.clone() }
    }

    fn check_var(&self, other: &Poly) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VarMismatch(self.var, other.var))
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_var(other)?;
        Ok(self.add_raw(other))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_var(other)?;
        Ok(self.add_raw(&other.neg()))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_var(other)?;
        Ok(self.mul_raw(other))
    }

    fn add_raw(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::new(self.var, out)
    }

    fn mul_raw(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.var);
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(self.var, out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one(self.var);
        for _ in 0..e {
            acc = acc.mul_raw(self);
        }
        acc
    }

    /// Horner evaluation at a rational point.
    pub fn evaluate(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute `inner` for the variable; the result carries `inner`'s tag.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_raw(inner).add_raw(&Poly::constant(inner.var, c.clone()));
        }
        acc
    }

    /// p(x + c)
    pub fn shift(&self, c: &Rat) -> Poly {
        self.compose(&Poly::new(self.var, vec![c.clone(), Rat::one()]))
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect();
        Poly::new(self.var, coeffs)
    }

    /// Quotient and remainder of exact rational long division.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_var(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let d = divisor.coeffs.len() - 1;
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d && !rem.is_empty() {
            let k = rem.len() - 1 - d;
            let q = rem.last().unwrap() / &lead;
            if !q.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let t = &q * b;
                    rem[k + i] -= t;
                }
                quot[k] = q;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Poly::new(self.var, quot), Poly::new(self.var, rem)))
    }

    /// Exact division; the remainder must vanish.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible(format!(
                "{} by {}",
                self, divisor
            )))
        }
    }

    /// Common denominator of all coefficients together with the integer
    /// numerators over it, indexed by degree.
    pub fn common_denominator(&self) -> (Int, Vec<Int>) {
        let mut den = Int::one();
        for c in &self.coeffs {
            den = lcm(&den, c.denom());
        }
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numer() * &den / c.denom())
            .collect();
        (den, nums)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let v = self.var.symbol();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
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
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "{v}")?;
                    } else {
                        write!(f, "{v}^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Backward difference p(x) - p(x-1). Drops the degree by exactly one for
/// nonconstant input.
pub fn nabla(p: &Poly) -> Poly {
    let shifted = p.shift(&rat_int(-1));
    p.try_sub(&shifted).expect("same variable")
}

/// The antidifference q with nabla(q) = p and q(0) = 0, so that
/// q(n) = p(1) + ... + p(n) for n >= 1. Computed through the binomial
/// basis: p = sum c_k C(x,k) gives q = c_0 x + sum_{k>=1} c_k C(x+1,k+1),
/// an independent route from the Bernoulli closed form.
pub fn antidifference(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero(p.var);
    }
    let d = p.degree().unwrap();
    // forward differences at 0: p = sum_k (Delta^k p)(0) C(x, k)
    let mut row: Vec<Rat> = (0..=d).map(|i| p.evaluate(&rat_int(i as i64))).collect();
    let mut deltas = Vec::with_capacity(d + 1);
    for _ in 0..=d {
        deltas.push(row[0].clone());
        for i in 0..row.len() - 1 {
            row[i] = &row[i + 1] - &row[i];
        }
        row.pop();
    }
    let mut acc = Poly::monomial(p.var, deltas[0].clone(), 1);
    for (k, c) in deltas.iter().enumerate().skip(1) {
        if !c.is_zero() {
            acc = acc
                .try_add(&Poly::binomial(p.var, 1, k + 1).scale(c))
                .expect("same variable");
        }
    }
    acc
}

/// Replace N by (n^2 + rn)/2 in a polynomial in N, expanding to a
/// polynomial in n.
pub fn substitute_faulhaber(p: &Poly, r: u32) -> Poly {
    let n_r = Poly::new(
        Var::N,
        vec![Rat::zero(), Rat::new(Int::from(r), Int::from(2)), Rat::new(Int::one(), Int::from(2))],
    );
    p.compose(&n_r)
}
