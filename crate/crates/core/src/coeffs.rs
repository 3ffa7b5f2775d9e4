//! The coefficients A_k^(w) of u^(w-k) in the u = n^2+n form of power sums,
//! computed by independent routes: the defining triangular recurrence, the
//! Jacobi derivative recurrence, the Gessel-Viennot explicit sum, and a
//! binomial determinant with its staircase-counting interpretation.

use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::bernoulli::{bernoulli_number, bernoulli_polynomial};
use crate::centralfact::series_mul;
use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::number::{binomial, factorial, is_integer, rat_int, rational_binomial, Int, Rat};
use crate::poly::{Poly, Var};

/// A prefix of A_0^(w), A_1^(w), ... for a fixed rational w.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    pub w: Rat,
    pub entries: Vec<Rat>,
}

impl CoefficientTable {
    pub fn get(&self, k: usize) -> Rat {
        self.entries.get(k).cloned().unwrap_or_else(Rat::zero)
    }
}

/// Solve the defining recurrence sum_{j<=k} C(w-j, 2k+1-2j) A_j = 0 with
/// A_0 = 1. The pivot coefficient of A_k is w - k, so the system degenerates
/// exactly when w is an integer in 0..=kmax; the caller must then use the
/// symbolic route or the special-value constructor.
pub fn by_recurrence(w: &Rat, kmax: usize) -> Result<CoefficientTable> {
    let mut entries = vec![Rat::one()];
    for k in 1..=kmax {
        let pivot = w - rat_int(k as i64);
        if pivot.is_zero() {
            return Err(Error::PivotZero { k });
        }
        let mut acc = Rat::zero();
        for (j, a) in entries.iter().enumerate() {
            acc += rational_binomial(&(w - rat_int(j as i64)), 2 * k + 1 - 2 * j) * a;
        }
        entries.push(-acc / pivot);
    }
    Ok(CoefficientTable { w: w.clone(), entries })
}

/// The full table at a given w. Non-integer w goes through the recurrence;
/// integer w = m fills the degenerate diagonal entry A_m^(m) = B_{2m}
/// explicitly and continues the recurrence above it (those entries vanish).
pub fn table(w: &Rat, kmax: usize) -> CoefficientTable {
    if let Some(m) = integer_w(w) {
        let mut entries = vec![Rat::one()];
        for k in 1..=kmax {
            if k == m {
                entries.push(bernoulli_number(2 * m));
                continue;
            }
            let mut acc = Rat::zero();
            for (j, a) in entries.iter().enumerate() {
                acc += rational_binomial(&(w - rat_int(j as i64)), 2 * k + 1 - 2 * j) * a;
            }
            entries.push(-acc / (w - rat_int(k as i64)));
        }
        CoefficientTable { w: w.clone(), entries }
    } else {
        by_recurrence(w, kmax).expect("non-integer w has no zero pivot")
    }
}

fn integer_w(w: &Rat) -> Option<usize> {
    (is_integer(w) && !w.is_negative()).then(|| w.numer().to_usize())?
}

/// A_k^(w) as an exact polynomial in w of degree 2k, solving the recurrence
/// with a symbolic upper argument. The division by w - k is exact.
pub fn symbolic(k: usize) -> Poly {
    let mut polys = vec![Poly::one(Var::W)];
    let w = Poly::identity(Var::W);
    for kk in 1..=k {
        let mut acc = Poly::zero(Var::W);
        for (j, a) in polys.iter().enumerate() {
            let shifted = w
                .try_sub(&Poly::constant(Var::W, rat_int(j as i64)))
                .expect("same variable");
            acc = acc
                .try_add(&poly_binomial(&shifted, 2 * kk + 1 - 2 * j).try_mul(a).unwrap())
                .unwrap();
        }
        let pivot = Poly::new(Var::W, vec![rat_int(-(kk as i64)), Rat::one()]);
        polys.push(acc.neg().exact_div(&pivot).expect("recurrence divides exactly"));
    }
    polys.pop().unwrap()
}

/// C(p, c) with a polynomial upper argument.
fn poly_binomial(p: &Poly, c: usize) -> Poly {
    let mut acc = Poly::one(p.var());
    for i in 0..c {
        let term = p
            .try_sub(&Poly::constant(p.var(), rat_int(i as i64)))
            .expect("same variable");
        acc = acc.try_mul(&term).unwrap();
    }
    acc.scale(&Rat::from_integer(factorial(c)).recip())
}

/// Jacobi's recurrence
/// (2w-2k)(2w-2k-1) A_k^(w) + (w-k+1)(w-k) A_{k-1}^(w) = 2w(2w-1) A_k^(w-1).
///
/// For integer w the whole ladder is climbed from w = 0, using only the
/// recurrence itself: each row is filled below the diagonal, A_{v-1}^(v) = 0
/// drops out of the constant-term bookkeeping, and the previous row's
/// diagonal follows from the step (w, k) = (v, v-1). For non-integer w the
/// base table at w - 1 is seeded by the defining recurrence and one ladder
/// step is taken.
pub fn by_jacobi(w: &Rat, kmax: usize) -> Result<CoefficientTable> {
    if let Some(m) = integer_w(w) {
        let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::one()]];
        for v in 1..=m + 1 {
            let vi = v as i64;
            let mut row = vec![Rat::one()];
            for k in 1..=v.saturating_sub(2) {
                let ki = k as i64;
                let numer = rat_int(2 * vi) * rat_int(2 * vi - 1) * &rows[v - 1][k]
                    - rat_int(vi - ki + 1) * rat_int(vi - ki) * &row[k - 1];
                let denom = rat_int(2 * vi - 2 * ki) * rat_int(2 * vi - 2 * ki - 1);
                row.push(numer / denom);
            }
            if v >= 2 {
                // A_{v-1}^(v) = 0: the u^1 coefficient of an odd power sum
                row.push(Rat::zero());
            }
            // diagonal of the previous row via the step at (w, k) = (v, v-1):
            // 2 A_{v-1}^(v) + 2 A_{v-2}^(v) = 2v(2v-1) A_{v-1}^(v-1)
            if v >= 2 {
                let diag = (&row[v - 1] + &row[v - 2]) / (rat_int(vi) * rat_int(2 * vi - 1));
                rows[v - 1].push(diag);
            }
            rows.push(row);
        }
        let mut entries = rows.swap_remove(m);
        entries.resize(kmax + 1, Rat::zero());
        entries.truncate(kmax + 1);
        return Ok(CoefficientTable { w: w.clone(), entries });
    }

    let base = by_recurrence(&(w - Rat::one()), kmax)?;
    let two_w = rat_int(2) * w;
    let mut entries = vec![Rat::one()];
    for k in 1..=kmax {
        let ki = rat_int(k as i64);
        let denom = (&two_w - rat_int(2) * &ki) * (&two_w - rat_int(2) * &ki - Rat::one());
        if denom.is_zero() {
            return Err(Error::ZeroFactor(format!(
                "(2w-2k)(2w-2k-1) = 0 at w = {w}, k = {k}"
            )));
        }
        let numer = &two_w * (&two_w - Rat::one()) * base.get(k)
            - (w - &ki + Rat::one()) * (w - &ki) * &entries[k - 1];
        entries.push(numer / denom);
    }
    Ok(CoefficientTable { w: w.clone(), entries })
}

/// The Gessel-Viennot explicit sum for integer order m:
/// A_k^(m) = (-1)^(m-k) sum_j C(2m, m-k-j) C(m-k+j, j)
///           ((m-k-j)/(m-k+j)) B_{m+k+j},  0 <= k < m.
pub fn explicit_integer(m: usize, k: usize) -> Result<Rat> {
    if k >= m {
        return Err(Error::OutOfRange(format!(
            "explicit formula needs 0 <= k < m, got k = {k}, m = {m}"
        )));
    }
    let mut acc = Rat::zero();
    for j in 0..m - k {
        let c1 = binomial(2 * m as u64, m - k - j);
        let c2 = binomial((m - k + j) as u64, j);
        let frac = Rat::new(Int::from(m - k - j), Int::from(m - k + j));
        acc += Rat::from_integer(c1 * c2) * frac * bernoulli_number(m + k + j);
    }
    if (m - k) % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}

/// The k x k binomial determinant D(w, k): row i holds C(w-k+i, 2i-2j+3)
/// across columns j, so A_k^(w) = D(w, k) / ((1-w)(2-w)...(k-w)).
pub fn determinant_d(w: &Rat, k: usize) -> Rat {
    assert!(k >= 1);
    let mut m = vec![vec![Rat::zero(); k]; k];
    for (i, row) in m.iter_mut().enumerate() {
        let upper = w - rat_int(k as i64) + rat_int(i as i64 + 1);
        for (j, cell) in row.iter_mut().enumerate() {
            let lower = 2 * (i as i64 + 1) - 2 * (j as i64 + 1) + 3;
            if lower >= 0 {
                *cell = rational_binomial(&upper, lower as usize);
            }
        }
    }
    determinant(m)
}

/// A_k^(w) through the determinant. When the prefactor vanishes (integer w
/// in 1..=k) the determinant itself is reported in the error.
pub fn by_determinant(w: &Rat, k: usize) -> Result<Rat> {
    let d = determinant_d(w, k);
    let mut pre = Rat::one();
    for i in 1..=k {
        pre *= rat_int(i as i64) - w;
    }
    if pre.is_zero() {
        return Err(Error::PrefactorZero { w: w.clone(), determinant: d });
    }
    Ok(d / pre)
}

/// Exhaustively count the triple-staircase fillings whose number equals
/// D(w, k): positive rows a_{3j-2} < a_{3j-1} < a_{3j} <= w-k+j with the
/// column constraints a_{3j-2} < a_{3j+2} and a_{3j-1} < a_{3j+3}.
/// Backtracking with a node cap; this is a small-instance oracle only.
pub fn staircase_count(w: u32, k: u32, cap: u64) -> Result<Int> {
    assert!(w > k && k >= 1);
    let mut nodes = 0u64;
    let mut total = Int::zero();
    // (prev1, prev2) are the first two entries of the previous row
    fn rows(
        j: u32,
        k: u32,
        w: u32,
        prev1: u32,
        prev2: u32,
        nodes: &mut u64,
        total: &mut Int,
        cap: u64,
    ) -> Result<()> {
        if j > k {
            *total += 1;
            return Ok(());
        }
        let bound = w - k + j;
        for b1 in 1..=bound {
            for b2 in (b1 + 1).max(prev1 + 1)..=bound {
                for _b3 in (b2 + 1).max(prev2 + 1)..=bound {
                    *nodes += 1;
                    if *nodes > cap {
                        return Err(Error::InstanceTooLarge { cap });
                    }
                    rows(j + 1, k, w, b1, b2, nodes, total, cap)?;
                }
            }
        }
        Ok(())
    }
    rows(1, k, w, 0, 0, &mut nodes, &mut total, cap)?;
    Ok(total)
}

pub const STAIRCASE_DEFAULT_CAP: u64 = 10_000_000;

/// Verify, as a polynomial identity in n with u = n^2 + n, that
/// sum_{k=0}^m A_k^(m) u^(m-k) = B_{2m}(n+1).
pub fn closed_form_check(m: usize) -> bool {
    let t = table(&rat_int(m as i64), m);
    let u = Poly::new(Var::N, vec![Rat::zero(), Rat::one(), Rat::one()]);
    let mut lhs = Poly::zero(Var::N);
    for k in 0..=m {
        lhs = lhs.try_add(&u.pow(m - k).scale(&t.get(k))).unwrap();
    }
    let rhs = bernoulli_polynomial(2 * m).shift(&Rat::one()).with_var(Var::N);
    lhs == rhs
}

/// Expand (z/2) cosh(sqrt(1+4u) z/2) / sinh(z/2) as a series in z with
/// polynomial coefficients in u and compare the z^(2m)/(2m)! coefficient
/// with sum_k A_k^(m) u^(m-k) for every m <= order. Everything is computed
/// in t = (z/2)^2, so no square root appears.
pub fn gf_check_faulhaber(order: usize) -> bool {
    let one_plus_4u = Poly::new(Var::U, vec![Rat::one(), rat_int(4)]);
    // numerator: cosh(sqrt(1+4u) z/2) = sum_j (1+4u)^j t^j/(2j)!
    let numer: Vec<Poly> = (0..=order)
        .map(|j| one_plus_4u.pow(j).scale(&Rat::from_integer(factorial(2 * j)).recip()))
        .collect();
    // denominator: sinh(z/2)/(z/2) = sum_j t^j/(2j+1)!
    let denom: Vec<Rat> = (0..=order)
        .map(|j| Rat::from_integer(factorial(2 * j + 1)).recip())
        .collect();
    // quotient by back-substitution; the constant term of denom is 1
    let mut quot: Vec<Poly> = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let mut c = numer[i].clone();
        for j in 0..i {
            c = c.try_sub(&quot[j].scale(&denom[i - j])).unwrap();
        }
        quot.push(c);
    }
    for m in 1..=order {
        let t = table(&rat_int(m as i64), m);
        let mut expect = Poly::zero(Var::U);
        for k in 0..=m {
            expect = expect
                .try_add(&Poly::monomial(Var::U, t.get(k), m - k))
                .unwrap();
        }
        let scale = Rat::from_integer(factorial(2 * m)) / Rat::from_integer(Int::from(4).pow(m as u32));
        if quot[m].scale(&scale) != expect {
            return false;
        }
    }
    // keep series_mul linked in for the central check; both expansions share it
    let _ = series_mul;
    true
}
