//! Central factorial numbers T(2m, 2k), the integer polynomial bases T_k and
//! U_k, central-factorial expansions of power sums, the Stirling-number
//! comparison forms, and the cosh(2x sinh(y/2)) generating-function check.

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::number::{factorial, rat, Int, Rat};
use crate::poly::{Poly, Var};

/// T(2m, 2k) by the recurrence T(2m+2, 2k) = k^2 T(2m, 2k) + T(2m, 2k-2)
/// with T(2, 2) = 1; always an integer.
pub fn central_factorial(m: u32, k: u32) -> Result<Int> {
    if k < 1 || k > m {
        return Err(Error::OutOfRange(format!(
            "T(2m, 2k) needs 1 <= k <= m, got m = {m}, k = {k}"
        )));
    }
    let mut row = vec![Int::zero(); m as usize + 1];
    row[1] = Int::one();
    for _ in 1..m {
        let mut next = vec![Int::zero(); m as usize + 1];
        for j in 1..=m as usize {
            next[j] = Int::from(j * j) * &row[j] + if j >= 2 { row[j - 1].clone() } else { Int::zero() };
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// T_k(n) = C(n+k+1, 2k+1) + C(n+k, 2k+1). The k = 0 case is 2n+1, which
/// is what the expansion over T_0, U_1, T_1, U_2, ... requires.
pub fn basis_t(k: u32) -> Poly {
    let k = k as usize;
    Poly::binomial(Var::N, k as i64 + 1, 2 * k + 1)
        .try_add(&Poly::binomial(Var::N, k as i64, 2 * k + 1))
        .expect("same variable")
}

/// U_k(n) = (n/k) C(n+k-1, 2k-1) = C(n+k, 2k) + C(n+k-1, 2k) for k >= 1.
pub fn basis_u(k: u32) -> Poly {
    assert!(k >= 1);
    let k = k as usize;
    Poly::binomial(Var::N, k as i64, 2 * k)
        .try_add(&Poly::binomial(Var::N, k as i64 - 1, 2 * k))
        .expect("same variable")
}

/// Coefficients (2k-1)! T(2m, 2k) of C(n+k, 2k) in
/// Sigma n^(2m-1) = sum_{k=1}^m (2k-1)! T(2m,2k) C(n+k, 2k),
/// indexed by k = 1..m.
pub fn odd_powersum_cf(m: u32) -> Vec<Int> {
    (1..=m)
        .map(|k| factorial(2 * k as usize - 1) * central_factorial(m, k).unwrap())
        .collect()
}

/// Coefficients k (2k-1)! T(2m, 2k) of T_k in
/// Sigma n^(2m) = sum_{k=1}^m k (2k-1)! T(2m,2k) T_k(n), indexed by k = 1..m.
/// These also expand n^(2m) over the U_k basis, and summing term by term
/// with nabla T_k = U_k gives the T_k form.
pub fn even_powersum_cf(m: u32) -> Vec<Int> {
    (1..=m)
        .map(|k| Int::from(k) * factorial(2 * k as usize - 1) * central_factorial(m, k).unwrap())
        .collect()
}

/// The even/odd transfer: Sigma n^(2m) / (2n+1) = sum a_k C(n+k, 2k) holds
/// iff Sigma n^(2m-1) = sum ((2k+1)/k) a_k C(n+k, 2k). Input and output are
/// indexed by k = 1..m.
pub fn even_odd_cf_dual(a: &[Rat]) -> Vec<Rat> {
    a.iter()
        .enumerate()
        .map(|(i, ak)| {
            let k = (i + 1) as i64;
            ak * rat(2 * k + 1, k)
        })
        .collect()
}

/// The a-list of [`even_odd_cf_dual`] for Sigma n^(2m): the T_k coefficient
/// divided by 2k+1.
pub fn even_cf_over_binomials(m: u32) -> Vec<Rat> {
    even_powersum_cf(m)
        .into_iter()
        .enumerate()
        .map(|(i, c)| Rat::new(c, Int::from(2 * (i as i64 + 1) + 1)))
        .collect()
}

/// Stirling numbers of the second kind, {m k} with {0 0} = 1.
pub fn stirling2(m: u32, k: u32) -> Int {
    if k > m {
        return Int::zero();
    }
    if m == 0 {
        return Int::one();
    }
    if k == 0 {
        return Int::zero();
    }
    let mut row = vec![Int::zero(); m as usize + 1];
    row[0] = Int::one(); // row for m = 0
    for i in 1..=m as usize {
        let mut next = vec![Int::zero(); m as usize + 1];
        for j in 1..=i {
            next[j] = Int::from(j) * &row[j] + &row[j - 1];
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Both Stirling-basis expansions of Sigma n^m: the coefficients k! {m k}
/// of C(n+1, k+1), and the signed coefficients (-1)^(m-k) k! {m k} of
/// C(n+k, k+1), indexed by k = 1..m.
pub fn stirling_expansion(m: u32) -> (Vec<Int>, Vec<Int>) {
    let plain: Vec<Int> = (1..=m)
        .map(|k| factorial(k as usize) * stirling2(m, k))
        .collect();
    let signed = plain
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if (m - (i as u32 + 1)) % 2 == 1 {
                -c
            } else {
                c.clone()
            }
        })
        .collect();
    (plain, signed)
}

/// Expand the odd central-factorial form into a polynomial in n.
pub fn odd_powersum_poly(m: u32) -> Poly {
    let mut acc = Poly::zero(Var::N);
    for (i, c) in odd_powersum_cf(m).iter().enumerate() {
        let k = i + 1;
        let term = Poly::binomial(Var::N, k as i64, 2 * k).scale(&Rat::from_integer(c.clone()));
        acc = acc.try_add(&term).expect("same variable");
    }
    acc
}

/// Expand the even central-factorial form into a polynomial in n.
pub fn even_powersum_poly(m: u32) -> Poly {
    let mut acc = Poly::zero(Var::N);
    for (i, c) in even_powersum_cf(m).iter().enumerate() {
        let term = basis_t(i as u32 + 1).scale(&Rat::from_integer(c.clone()));
        acc = acc.try_add(&term).expect("same variable");
    }
    acc
}

/// The r-fold odd sum by shifting the central-factorial expansion:
/// Sigma^r n^(2m-1) = sum_k (2k-1)! T(2m,2k) C(n+k-1+r, 2k-1+r).
pub fn repeated_odd_powersum_poly(m: u32, r: u32) -> Poly {
    let mut acc = Poly::zero(Var::N);
    for (i, c) in odd_powersum_cf(m).iter().enumerate() {
        let k = (i + 1) as i64;
        let term = Poly::binomial(Var::N, k - 1 + r as i64, (2 * k - 1) as usize + r as usize)
            .scale(&Rat::from_integer(c.clone()));
        acc = acc.try_add(&term).expect("same variable");
    }
    acc
}

/// Compare the table against cosh(2x sinh(y/2)) =
/// sum_m (sum_k T(2m,2k) x^(2k)) y^(2m)/(2m)! through order M.
pub fn gf_check_central(order: u32) -> bool {
    let order = order as usize;
    // s(y) = 2x sinh(y/2): odd series in y with monomial coefficients in x
    let top = 2 * order;
    let mut s = vec![Poly::zero(Var::X); top + 1];
    for i in 0..=order {
        let j = 2 * i + 1;
        if j > top {
            break;
        }
        // 2x (y/2)^(2i+1)/(2i+1)!
        let c = Rat::new(Int::from(2), Int::from(2).pow(j as u32) * factorial(j));
        s[j] = Poly::monomial(Var::X, c, 1);
    }
    // cosh(s) = sum_j (s^2)^j / (2j)!
    let s2 = series_mul(&s, &s, top);
    let mut acc = vec![Poly::zero(Var::X); top + 1];
    acc[0] = Poly::one(Var::X);
    let mut power = {
        let mut unit = vec![Poly::zero(Var::X); top + 1];
        unit[0] = Poly::one(Var::X);
        unit
    };
    for j in 1..=order {
        power = series_mul(&power, &s2, top);
        let inv = Rat::from_integer(factorial(2 * j)).recip();
        for (a, p) in acc.iter_mut().zip(&power) {
            *a = a.try_add(&p.scale(&inv)).expect("same variable");
        }
    }
    for m in 1..=order as u32 {
        let mut expect = Poly::zero(Var::X);
        for k in 1..=m {
            expect = expect
                .try_add(&Poly::monomial(
                    Var::X,
                    Rat::from_integer(central_factorial(m, k).unwrap()),
                    2 * k as usize,
                ))
                .unwrap();
        }
        if m == 0 {
            expect = Poly::one(Var::X);
        }
        let got = acc[2 * m as usize].scale(&Rat::from_integer(factorial(2 * m as usize)));
        if got != expect {
            return false;
        }
    }
    true
}

/// Truncated product of series with polynomial coefficients.
pub(crate) fn series_mul(a: &[Poly], b: &[Poly], top: usize) -> Vec<Poly> {
    let var = a
        .iter()
        .chain(b)
        .map(|p| p.var())
        .next()
        .unwrap_or(Var::X);
    let mut out = vec![Poly::zero(var); top + 1];
    for (i, pa) in a.iter().enumerate().take(top + 1) {
        if pa.is_zero() {
            continue;
        }
        for (j, pb) in b.iter().enumerate() {
            if i + j > top {
                break;
            }
            let t = pa.try_mul(pb).expect("same variable");
            out[i + j] = out[i + j].try_add(&t).expect("same variable");
        }
    }
    out
}
