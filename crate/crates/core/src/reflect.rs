//! The reflective-function calculus: predicates, the summation-constant
//! rules, decomposition into an r-reflective plus an anti-s-reflective part,
//! and the integer-basis expansions over shifted binomials and over the
//! T_k/U_k polynomials.
//!
//! A function is r-reflective when f(x) = f(y) whenever x + y + r = 0, and
//! anti-r-reflective when f(x) = -f(y) there; r = 0 gives even and odd
//! functions.

use num::traits::{One, Zero};

use crate::centralfact::{basis_t, basis_u};
use crate::error::{Error, Result};
use crate::linalg;
use crate::number::{binomial, pow2, rat, rat_int, Rat};
use crate::poly::{antidifference, Poly, Var};

/// A function on the integers: either a polynomial (window-free) or a table
/// of values on a contiguous window.
#[derive(Clone, Debug, PartialEq)]
pub enum TabulatedFunction {
    Polynomial(Poly),
    Table { lo: i64, values: Vec<Rat> },
}

impl TabulatedFunction {
    /// Table on the symmetric window [-half, half].
    pub fn symmetric(values: Vec<Rat>) -> Self {
        assert!(values.len() % 2 == 1, "symmetric window needs odd length");
        let half = (values.len() / 2) as i64;
        TabulatedFunction::Table { lo: -half, values }
    }

    pub fn window(&self) -> Option<(i64, i64)> {
        match self {
            TabulatedFunction::Polynomial(_) => None,
            TabulatedFunction::Table { lo, values } => {
                Some((*lo, lo + values.len() as i64 - 1))
            }
        }
    }

    pub fn value(&self, x: i64) -> Option<Rat> {
        match self {
            TabulatedFunction::Polynomial(p) => Some(p.evaluate(&rat_int(x))),
            TabulatedFunction::Table { lo, values } => {
                let idx = x.checked_sub(*lo)?;
                usize::try_from(idx).ok().and_then(|i| values.get(i)).cloned()
            }
        }
    }

    fn require(&self, x: i64, what: &str) -> Result<Rat> {
        self.value(x).ok_or_else(|| {
            let (lo, hi) = self.window().unwrap_or((0, 0));
            Error::WindowTooSmall {
                lo,
                hi,
                reason: format!("{what} needs the value at {x}"),
            }
        })
    }
}

/// f(-x - r) as a polynomial.
fn reflected(f: &Poly, r: i64) -> Poly {
    f.compose(&Poly::new(f.var(), vec![rat_int(-r), rat_int(-1)]))
}

/// f(x) = f(y) whenever x + y + r = 0.
pub fn is_reflective(f: &Poly, r: i64) -> bool {
    *f == reflected(f, r)
}

/// f(x) = -f(y) whenever x + y + r = 0.
pub fn is_anti_reflective(f: &Poly, r: i64) -> bool {
    f.neg() == reflected(f, r)
}

/// The summation constant of an r-reflective polynomial: the unique C such
/// that C + antidifference(f) is anti-(r+1)-reflective. For anti-reflective
/// input every C works and `Any` is returned.
#[derive(Clone, Debug, PartialEq)]
pub enum SigmaConstant {
    Unique(Rat),
    Any,
}

pub fn sigma_constant(f: &Poly, r: i64) -> Result<SigmaConstant> {
    if is_anti_reflective(f, r) && !f.is_zero() {
        return Ok(SigmaConstant::Any);
    }
    if !is_reflective(f, r) {
        return Err(Error::NotReflective(f.to_string(), r));
    }
    let q = antidifference(f);
    let c = if r.rem_euclid(2) == 1 {
        // anchor: (q + C)(-(r+1)/2) = 0
        -q.evaluate(&rat(-(r + 1), 2))
    } else {
        // anchor: (q + C)(-r/2) = f(-r/2)/2
        f.evaluate(&rat_int(-r / 2)) / rat_int(2) - q.evaluate(&rat_int(-r / 2))
    };
    Ok(SigmaConstant::Unique(c))
}

/// Result of splitting f into an r-reflective g plus an anti-s-reflective h.
#[derive(Clone, Debug, PartialEq)]
pub enum Decomposition {
    Polynomials { g: Poly, h: Poly },
    Tables { lo: i64, g: Vec<Rat>, h: Vec<Rat> },
}

/// Decompose f = g + h with g r-reflective and h anti-s-reflective. The
/// split is unique except when r is even and s is odd; there the free
/// constant is pinned by h(0) = anchor (default 0).
///
/// Polynomial input is solved exactly in the bases (x(x+r))^k and
/// (x + s/2)(x(x+s))^k; no window is involved. Tabulated input is solved on
/// its own window only, and underdetermination beyond the legitimate free
/// constant is reported rather than extrapolated.
pub fn decompose(
    f: &TabulatedFunction,
    r: i64,
    s: i64,
    anchor: Option<Rat>,
) -> Result<Decomposition> {
    match f {
        TabulatedFunction::Polynomial(p) => decompose_poly(p, r, s).map(|(g, h)| {
            // the polynomial split is always unique, so the anchor is unused
            Decomposition::Polynomials { g, h }
        }),
        TabulatedFunction::Table { lo, values } => {
            decompose_table(*lo, values, r, s, anchor.unwrap_or_else(Rat::zero))
        }
    }
}

fn decompose_poly(p: &Poly, r: i64, s: i64) -> Result<(Poly, Poly)> {
    let var = p.var();
    let d = p.degree().unwrap_or(0);
    // columns: (x(x+r))^k for 2k <= d, then (x+s/2)(x(x+s))^k for 2k+1 <= d
    let mut basis = Vec::new();
    let vr = Poly::new(var, vec![Rat::zero(), rat_int(r), Rat::one()]);
    let vs = Poly::new(var, vec![Rat::zero(), rat_int(s), Rat::one()]);
    let half_s = Poly::new(var, vec![rat(s, 2), Rat::one()]);
    let mut g_count = 0;
    for k in 0..=d / 2 {
        basis.push(vr.pow(k));
        g_count += 1;
    }
    if d >= 1 {
        for k in 0..=(d - 1) / 2 {
            basis.push(half_s.try_mul(&vs.pow(k))?);
        }
    }
    let rows = d + 1;
    let mut a = vec![vec![Rat::zero(); basis.len()]; rows];
    for (j, b) in basis.iter().enumerate() {
        for (i, row) in a.iter_mut().enumerate() {
            row[j] = b.coeff(i);
        }
    }
    let b: Vec<Rat> = (0..rows).map(|i| p.coeff(i)).collect();
    let sol = linalg::solve(&a, &b)
        .ok_or_else(|| Error::BadShape("no reflective decomposition".into()))?;
    debug_assert!(sol.kernel.is_empty(), "polynomial split is unique");
    let mut g = Poly::zero(var);
    let mut h = Poly::zero(var);
    for (j, (c, bp)) in sol.particular.iter().zip(&basis).enumerate() {
        let t = bp.scale(c);
        if j < g_count {
            g = g.try_add(&t)?;
        } else {
            h = h.try_add(&t)?;
        }
    }
    Ok((g, h))
}

fn decompose_table(
    lo: i64,
    values: &[Rat],
    r: i64,
    s: i64,
    anchor: Rat,
) -> Result<Decomposition> {
    let hi = lo + values.len() as i64 - 1;
    let n = values.len();
    let idx = |x: i64| -> Option<usize> {
        (lo..=hi).contains(&x).then(|| (x - lo) as usize)
    };
    // unknowns: h(x) for x on the window; g(x) = f(x) - h(x).
    // reflection of g:  h(x) - h(-r-x) = f(x) - f(-r-x)
    // anti-reflection:  h(x) + h(-s-x) = 0
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for x in lo..=hi {
        if let Some(j) = idx(-r - x) {
            let i = idx(x).unwrap();
            let mut row = vec![Rat::zero(); n];
            row[i] += Rat::one();
            row[j] -= Rat::one();
            rows.push(row);
            rhs.push(&values[i] - &values[j]);
        }
        if let Some(j) = idx(-s - x) {
            let i = idx(x).unwrap();
            let mut row = vec![Rat::zero(); n];
            row[i] += Rat::one();
            row[j] += Rat::one();
            rows.push(row);
            rhs.push(Rat::zero());
        }
    }
    let sol = linalg::solve(&rows, &rhs)
        .ok_or_else(|| Error::BadShape("no reflective decomposition on this window".into()))?;
    let free_constant_expected = r.rem_euclid(2) == 0 && s.rem_euclid(2) == 1;
    let mut h = sol.particular;
    match (free_constant_expected, sol.kernel.len()) {
        (false, 0) => {}
        (true, 1) => {
            let k = &sol.kernel[0];
            let at0 = idx(0).ok_or(Error::WindowTooSmall {
                lo,
                hi,
                reason: "anchor point 0 is outside the window".into(),
            })?;
            if k[at0].is_zero() {
                return Err(Error::WindowTooSmall {
                    lo,
                    hi,
                    reason: "free direction cannot be anchored at 0".into(),
                });
            }
            let t = (&anchor - &h[at0]) / &k[at0];
            for (hv, kv) in h.iter_mut().zip(k) {
                *hv += &t * kv;
            }
        }
        _ => {
            return Err(Error::WindowTooSmall {
                lo,
                hi,
                reason: format!(
                    "{} undetermined directions remain (expected {})",
                    sol.kernel.len(),
                    usize::from(free_constant_expected)
                ),
            });
        }
    }
    let g = values
        .iter()
        .zip(&h)
        .map(|(f, hv)| f - hv)
        .collect();
    Ok(Decomposition::Tables { lo, g, h })
}

/// Coefficients of f over the shifted binomial basis C(n + floor(k/2), k):
/// a_k = (iterated backward difference)^k f evaluated at floor(k/2).
/// Needs f on [-ceil(kmax/2), floor(kmax/2)].
pub fn shifted_binomial_coeffs(f: &TabulatedFunction, kmax: usize) -> Result<Vec<Rat>> {
    let mut out = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let at = (k / 2) as i64;
        let mut acc = Rat::zero();
        for i in 0..=k {
            let v = f.require(at - i as i64, "shifted binomial expansion")?;
            let c = Rat::from_integer(binomial(k as u64, i));
            if i % 2 == 0 {
                acc += c * v;
            } else {
                acc -= c * v;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Rebuild sum_k a_k C(n + floor(k/2), k) as a polynomial.
pub fn shifted_binomial_poly(a: &[Rat]) -> Poly {
    let mut acc = Poly::zero(Var::N);
    for (k, c) in a.iter().enumerate() {
        if !c.is_zero() {
            acc = acc
                .try_add(&Poly::binomial(Var::N, (k / 2) as i64, k).scale(c))
                .expect("same variable");
        }
    }
    acc
}

/// Convert shifted-binomial coefficients to T/U-basis coefficients via
/// a_k = 2 b_{k-1} + (-1)^k b_k.
pub fn shifted_to_tu(a: &[Rat]) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(a.len());
    for (k, ak) in a.iter().enumerate() {
        let prev = if k == 0 { Rat::zero() } else { b[k - 1].clone() };
        let diff = ak - prev * rat_int(2);
        b.push(if k % 2 == 0 { diff } else { -diff });
    }
    b
}

/// Inverse conversion, reading the b-list as shifted-binomial coefficients:
/// a_k = 2 b_{k-1} + (-1)^k b_k.
pub fn tu_to_shifted(b: &[Rat]) -> Vec<Rat> {
    b.iter()
        .enumerate()
        .map(|(k, bk)| {
            let prev = if k == 0 { Rat::zero() } else { b[k - 1].clone() };
            let signed = if k % 2 == 0 { bk.clone() } else { -bk };
            prev * rat_int(2) + signed
        })
        .collect()
}

/// The closed form of the inverse conversion:
/// b_k = sum_j (-1)^(ceil(j/2) + floor(k/2)) 2^(k-j) a_j.
pub fn shifted_to_tu_closed_form(a: &[Rat]) -> Vec<Rat> {
    (0..a.len())
        .map(|k| {
            let mut acc = Rat::zero();
            for (j, aj) in a.iter().enumerate().take(k + 1) {
                let e = j.div_ceil(2) + k / 2;
                let term = Rat::from_integer(pow2(k - j)) * aj;
                if e % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// Coefficients of f over T_0, U_1, T_1, U_2, T_2, ...: even indices hold
/// T-coefficients, odd indices U-coefficients.
pub fn tu_coeffs(f: &TabulatedFunction, kmax: usize) -> Result<Vec<Rat>> {
    Ok(shifted_to_tu(&shifted_binomial_coeffs(f, kmax)?))
}

/// Rebuild sum b_0 T_0 + b_1 U_1 + b_2 T_1 + b_3 U_2 + ... as a polynomial.
pub fn tu_poly(b: &[Rat]) -> Poly {
    let mut acc = Poly::zero(Var::N);
    for (k, c) in b.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let basis = if k % 2 == 0 {
            basis_t(k as u32 / 2)
        } else {
            basis_u((k as u32 + 1) / 2)
        };
        acc = acc.try_add(&basis.scale(c)).expect("same variable");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powersum::power_sum;

    fn poly_f(p: &Poly) -> TabulatedFunction {
        TabulatedFunction::Polynomial(p.clone())
    }

    #[test]
    fn predicate_basics() {
        for r in -3..=3i64 {
            // x(x+r) is r-reflective
            let p = Poly::new(Var::X, vec![Rat::zero(), rat_int(r), Rat::one()]);
            assert!(is_reflective(&p, r));
            assert!(!is_anti_reflective(&p, r) || p.is_zero());
            // x + r/2 is anti-r-reflective
            let q = Poly::new(Var::X, vec![rat(r, 2), Rat::one()]);
            assert!(is_anti_reflective(&q, r));
        }
        let z = Poly::zero(Var::X);
        assert!(is_reflective(&z, 2) && is_anti_reflective(&z, 2));
    }

    #[test]
    fn lemma_nabla_swaps_parity() {
        use crate::poly::nabla;
        // h(x(x+r)) is r-reflective; its difference is anti-(r-1)-reflective
        for r in 0..=4i64 {
            let base = Poly::new(Var::N, vec![Rat::zero(), rat_int(r), Rat::one()]);
            let f = base
                .pow(3)
                .try_add(&base.scale(&rat(7, 2)))
                .unwrap()
                .try_add(&Poly::constant(Var::N, rat_int(1)))
                .unwrap();
            assert!(is_reflective(&f, r));
            assert!(is_anti_reflective(&nabla(&f), r - 1));
            // and dually for an anti-r-reflective input
            let half = Poly::new(Var::N, vec![rat(r, 2), Rat::one()]);
            let g = half.try_mul(&base.pow(2)).unwrap();
            assert!(is_anti_reflective(&g, r));
            assert!(is_reflective(&nabla(&g), r - 1));
        }
    }

    #[test]
    fn sigma_constant_even_rule() {
        // f = 1 is 0-reflective; C = 1/2 makes the sum anti-1-reflective
        let one = Poly::one(Var::N);
        assert_eq!(sigma_constant(&one, 0).unwrap(), SigmaConstant::Unique(rat(1, 2)));
    }

    #[test]
    fn sigma_constant_odd_rule() {
        // f = x(x+1) is 1-reflective and its antidifference already
        // vanishes at -1, so C = 0
        let f = Poly::new(Var::N, vec![Rat::zero(), Rat::one(), Rat::one()]);
        assert_eq!(sigma_constant(&f, 1).unwrap(), SigmaConstant::Unique(Rat::zero()));
    }

    #[test]
    fn sigma_constant_anti_input() {
        let f = Poly::identity(Var::N);
        assert_eq!(sigma_constant(&f, 0).unwrap(), SigmaConstant::Any);
        let g = Poly::new(Var::N, vec![Rat::one(), Rat::one(), Rat::one()]);
        assert!(sigma_constant(&g, 0).is_err());
    }

    #[test]
    fn sigma_constant_makes_sum_anti_reflective() {
        for r in 0..=3i64 {
            let base = Poly::new(Var::N, vec![Rat::zero(), rat_int(r), Rat::one()]);
            let f = base.pow(2).try_add(&base.scale(&rat_int(3))).unwrap();
            let SigmaConstant::Unique(c) = sigma_constant(&f, r).unwrap() else {
                panic!("expected unique constant");
            };
            let q = antidifference(&f)
                .try_add(&Poly::constant(Var::N, c))
                .unwrap();
            assert!(is_anti_reflective(&q, r + 1), "r = {r}");
        }
    }

    #[test]
    fn decompose_even_odd_parts() {
        // r = s = 0 splits into even and odd parts
        let f = Poly::new(Var::N, vec![rat_int(1), rat_int(2), rat_int(3), rat_int(4)]);
        let Decomposition::Polynomials { g, h } = decompose(&poly_f(&f), 0, 0, None).unwrap()
        else {
            panic!()
        };
        assert_eq!(g, Poly::new(Var::N, vec![rat_int(1), rat_int(0), rat_int(3)]));
        assert_eq!(h, Poly::new(Var::N, vec![rat_int(0), rat_int(2), rat_int(0), rat_int(4)]));
        // pure odd input decomposes trivially
        let cube = Poly::monomial(Var::N, Rat::one(), 3);
        let Decomposition::Polynomials { g, h } = decompose(&poly_f(&cube), 0, 0, None).unwrap()
        else {
            panic!()
        };
        assert!(g.is_zero());
        assert_eq!(h, cube);
    }

    #[test]
    fn decompose_r1_s1() {
        // f = n^2 gives g = n^2 + n + 1/2, h = -(2n+1)/2
        let f = Poly::monomial(Var::N, Rat::one(), 2);
        let Decomposition::Polynomials { g, h } = decompose(&poly_f(&f), 1, 1, None).unwrap()
        else {
            panic!()
        };
        assert_eq!(g, Poly::new(Var::N, vec![rat(1, 2), Rat::one(), Rat::one()]));
        assert_eq!(h, Poly::new(Var::N, vec![rat(-1, 2), rat_int(-1)]));
        assert!(is_reflective(&g, 1));
        assert!(is_anti_reflective(&h, 1));
    }

    #[test]
    fn decompose_polynomials_general() {
        let samples = [
            (Poly::new(Var::N, vec![rat(1, 3), rat_int(2), rat(5, 7), Rat::one()]), 2, 1),
            (Poly::new(Var::N, vec![rat_int(4), rat_int(-1), rat_int(2)]), 3, 0),
            (power_sum(5, 2), 0, 3),
            (power_sum(4, 1), 1, 2),
        ];
        for (f, r, s) in samples {
            let Decomposition::Polynomials { g, h } =
                decompose(&poly_f(&f), r, s, None).unwrap()
            else {
                panic!()
            };
            assert_eq!(g.try_add(&h).unwrap(), f, "r = {r}, s = {s}");
            assert!(is_reflective(&g, r));
            assert!(is_anti_reflective(&h, s));
        }
    }

    #[test]
    fn decompose_table_matches_polynomial_route() {
        let f = Poly::new(Var::N, vec![rat_int(2), rat(1, 2), rat_int(1)]);
        let values: Vec<Rat> = (-6..=6).map(|x| f.evaluate(&rat_int(x))).collect();
        let table = TabulatedFunction::symmetric(values);
        let Decomposition::Tables { lo, g, h } = decompose(&table, 1, 0, None).unwrap() else {
            panic!()
        };
        let Decomposition::Polynomials { g: gp, h: hp } =
            decompose(&poly_f(&f), 1, 0, None).unwrap()
        else {
            panic!()
        };
        for (i, x) in (lo..).take(g.len()).enumerate() {
            assert_eq!(g[i], gp.evaluate(&rat_int(x)));
            assert_eq!(h[i], hp.evaluate(&rat_int(x)));
        }
    }

    #[test]
    fn decompose_table_free_constant_case() {
        // r even, s odd: the split is a one-parameter family anchored at h(0)
        let f = Poly::new(Var::N, vec![rat_int(1), rat_int(1)]);
        let values: Vec<Rat> = (-5..=5).map(|x| f.evaluate(&rat_int(x))).collect();
        let table = TabulatedFunction::symmetric(values);
        let Decomposition::Tables { lo, g, h } = decompose(&table, 0, 1, None).unwrap() else {
            panic!()
        };
        assert_eq!(h[(-lo) as usize], Rat::zero());
        // anchored differently, both remain valid decompositions
        let Decomposition::Tables { g: g2, h: h2, .. } =
            decompose(&table, 0, 1, Some(rat_int(3))).unwrap()
        else {
            panic!()
        };
        assert_eq!(h2[(-lo) as usize], rat_int(3));
        for i in 0..g.len() {
            let x = lo + i as i64;
            assert_eq!(&g[i] + &h[i], f.evaluate(&rat_int(x)));
            assert_eq!(&g2[i] + &h2[i], f.evaluate(&rat_int(x)));
        }
    }

    #[test]
    fn decompose_window_too_small() {
        // a 3-point window cannot pin down the r=2 reflection of a cubic's values
        let table = TabulatedFunction::Table {
            lo: -1,
            values: vec![rat_int(1), rat_int(5), rat_int(9)],
        };
        assert!(matches!(
            decompose(&table, 4, 3, None),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn shifted_binomial_expansion_of_cube() {
        // n^3 = 6 C(n+1, 3) + C(n, 1)
        let cube = Poly::monomial(Var::N, Rat::one(), 3);
        let a = shifted_binomial_coeffs(&poly_f(&cube), 5).unwrap();
        assert_eq!(
            a,
            vec![Rat::zero(), Rat::one(), Rat::zero(), rat_int(6), Rat::zero(), Rat::zero()]
        );
        assert_eq!(shifted_binomial_poly(&a), cube);
    }

    #[test]
    fn shifted_binomial_expansion_of_fifth_power() {
        // n^5 = 120 C(n+2, 5) + 30 C(n+1, 3) + C(n, 1)
        let p = Poly::monomial(Var::N, Rat::one(), 5);
        let a = shifted_binomial_coeffs(&poly_f(&p), 5).unwrap();
        assert_eq!(a[1], Rat::one());
        assert_eq!(a[3], rat_int(30));
        assert_eq!(a[5], rat_int(120));
        assert!(a[0].is_zero() && a[2].is_zero() && a[4].is_zero());
    }

    #[test]
    fn first_coefficients_are_differences() {
        let f = Poly::new(Var::N, vec![rat(1, 3), rat_int(2), rat_int(-1)]);
        let a = shifted_binomial_coeffs(&poly_f(&f), 1).unwrap();
        let f0 = f.evaluate(&Rat::zero());
        let fm1 = f.evaluate(&rat_int(-1));
        assert_eq!(a[0], f0);
        assert_eq!(a[1], f0 - fm1);
    }

    #[test]
    fn window_requirements_reported() {
        let table = TabulatedFunction::Table {
            lo: 0,
            values: vec![rat_int(1), rat_int(2)],
        };
        assert!(matches!(
            shifted_binomial_coeffs(&table, 3),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn constant_function_tu_coefficients() {
        // f = 1 gives b_k = (-1)^floor(k/2) 2^k
        let one = Poly::one(Var::N);
        let b = tu_coeffs(&poly_f(&one), 6).unwrap();
        let expect: Vec<Rat> = (0..=6)
            .map(|k| {
                let v = Rat::from_integer(pow2(k));
                if (k / 2) % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        assert_eq!(b, expect);
    }

    #[test]
    fn tu_expansion_of_square_pyramid() {
        // Sigma n^2 = T_1, so only the T_1 slot (index 2) is set
        let b = tu_coeffs(&poly_f(&power_sum(2, 1)), 6).unwrap();
        assert_eq!(b[2], Rat::one());
        for (k, v) in b.iter().enumerate() {
            if k != 2 {
                assert!(v.is_zero(), "slot {k}");
            }
        }
    }

    #[test]
    fn tu_round_trip_on_integer_lists() {
        let a: Vec<Rat> = [3i64, -1, 4, 1, -5, 9, 2, -6]
            .iter()
            .map(|&v| rat_int(v))
            .collect();
        assert_eq!(tu_to_shifted(&shifted_to_tu(&a)), a);
        let b: Vec<Rat> = [2i64, 7, -1, -8, 2, 8].iter().map(|&v| rat_int(v)).collect();
        assert_eq!(shifted_to_tu(&tu_to_shifted(&b)), b);
        // the triangular solve agrees with the alternating closed form
        assert_eq!(shifted_to_tu(&a), shifted_to_tu_closed_form(&a));
    }

    #[test]
    fn tu_poly_reconstructs() {
        // power sums lie in the span, so reconstruction is exact
        for p in [power_sum(2, 1), power_sum(4, 1), power_sum(6, 1)] {
            let b = tu_coeffs(&poly_f(&p), 13).unwrap();
            assert_eq!(tu_poly(&b), p);
        }
        // the constant 1 has an infinite expansion; truncation agrees
        // pointwise where the omitted basis elements vanish
        let b = tu_coeffs(&poly_f(&Poly::one(Var::N)), 10).unwrap();
        let approx = tu_poly(&b);
        for n in -5..=5 {
            assert_eq!(approx.evaluate(&rat_int(n)), Rat::one(), "n = {n}");
        }
    }

    #[test]
    fn parity_zeroing_of_coefficients() {
        // odd f has zero even-indexed shifted-binomial coefficients
        let odd = Poly::new(Var::N, vec![Rat::zero(), rat_int(2), Rat::zero(), rat_int(5)]);
        let a = shifted_binomial_coeffs(&poly_f(&odd), 7).unwrap();
        for k in (0..=7).step_by(2) {
            assert!(a[k].is_zero(), "a_{k}");
        }
        // 1-reflective f has zero odd-indexed coefficients
        let base = Poly::new(Var::N, vec![Rat::zero(), Rat::one(), Rat::one()]);
        let refl = base.pow(2).try_add(&base.scale(&rat_int(3))).unwrap();
        assert!(is_reflective(&refl, 1));
        let a = shifted_binomial_coeffs(&poly_f(&refl), 7).unwrap();
        for k in (1..=7).step_by(2) {
            assert!(a[k].is_zero(), "a_{k}");
        }
    }

    #[test]
    fn integrality_tracks_values() {
        let int_valued = Poly::binomial(Var::N, 1, 3).scale(&rat_int(3));
        let a = shifted_binomial_coeffs(&poly_f(&int_valued), 6).unwrap();
        assert!(a.iter().all(|c| c.denom().is_one()));
        let not_int = Poly::new(Var::N, vec![rat(1, 3)]);
        let a = shifted_binomial_coeffs(&poly_f(&not_int), 2).unwrap();
        assert!(a.iter().any(|c| !c.denom().is_one()));
    }
}
