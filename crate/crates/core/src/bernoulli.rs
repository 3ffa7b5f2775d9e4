//! Bernoulli numbers under the B_1 = -1/2 convention, Bernoulli polynomials,
//! and the generalized B_z(x) expansion for rational index.
//!
//! The convention is forced by the uniform power-sum formula: with
//! B_1 = -1/2 we get (1/2)(B_0 n^2 - 2 B_1 n) = (n^2+n)/2 for the first
//! power sum.

use std::sync::{Mutex, OnceLock};

use num::traits::{One, Zero};

use crate::ladder::LadderSeries;
use crate::number::{binomial, rat_int, rational_binomial, Rat};
use crate::poly::{Poly, Var};

/// Memoized prefix of B_0, B_1, ... Values extend monotonically.
pub struct BernoulliCache {
    values: Mutex<Vec<Rat>>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            values: Mutex::new(vec![Rat::one()]),
        }
    }

    /// B_m, computed eagerly up to the requested index by the triangular
    /// recurrence sum_{j<=m} C(m+1, j) B_j = 0.
    pub fn get(&self, m: usize) -> Rat {
        let mut values = self.values.lock().unwrap();
        while values.len() <= m {
            let k = values.len();
            let mut acc = Rat::zero();
            for (j, b) in values.iter().enumerate() {
                acc += Rat::from_integer(binomial((k + 1) as u64, j)) * b;
            }
            let next = -acc / rat_int((k + 1) as i64);
            values.push(next);
        }
        values[m].clone()
    }
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

fn global_cache() -> &'static BernoulliCache {
    static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
    CACHE.get_or_init(BernoulliCache::new)
}

/// B_m with B_1 = -1/2.
pub fn bernoulli_number(m: usize) -> Rat {
    global_cache().get(m)
}

/// B_m(x) = sum_k C(m,k) B_k x^(m-k).
pub fn bernoulli_polynomial(m: usize) -> Poly {
    let mut coeffs = vec![Rat::zero(); m + 1];
    for k in 0..=m {
        coeffs[m - k] = Rat::from_integer(binomial(m as u64, k)) * bernoulli_number(k);
    }
    Poly::new(Var::X, coeffs)
}

/// Truncated expansion of B_z(x) = x^z sum_{k=0..p} C(z,k) x^(-k) B_k as a
/// series on the half-integer ladder (integer steps embed with zero odd
/// coefficients).
pub fn generalized_bernoulli(z: &Rat, p: usize) -> LadderSeries {
    let mut coeffs = vec![Rat::zero(); 2 * p + 1];
    for k in 0..=p {
        coeffs[2 * k] = rational_binomial(z, k) * bernoulli_number(k);
    }
    LadderSeries::truncated(z.clone(), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rat;
    use crate::poly::{antidifference, Poly};

    #[test]
    fn bernoulli_numbers_small() {
        assert_eq!(bernoulli_number(0), Rat::one());
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
        for k in 1..=8 {
            assert_eq!(bernoulli_number(2 * k + 1), Rat::zero());
        }
    }

    #[test]
    fn cache_is_consistent_across_threads() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| bernoulli_number(40)))
            .collect();
        let expect = bernoulli_number(40);
        for h in handles {
            assert_eq!(h.join().unwrap(), expect);
        }
    }

    #[test]
    fn bernoulli_polynomial_small() {
        assert_eq!(bernoulli_polynomial(0), Poly::one(Var::X));
        // B_2(x) = x^2 - x + 1/6
        assert_eq!(
            bernoulli_polynomial(2),
            Poly::new(Var::X, vec![rat(1, 6), rat(-1, 1), rat(1, 1)])
        );
    }

    #[test]
    fn difference_identity() {
        // B_m(x+1) - B_m(x) = m x^(m-1)
        for m in 1..=12usize {
            let b = bernoulli_polynomial(m);
            let lhs = b.shift(&Rat::one()).try_sub(&b).unwrap();
            let rhs = Poly::monomial(Var::X, rat_int(m as i64), m - 1);
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    #[test]
    fn derivative_identity() {
        // B_m'(x) = m B_{m-1}(x)
        for m in 1..=12usize {
            assert_eq!(
                bernoulli_polynomial(m).derivative(),
                bernoulli_polynomial(m - 1).scale(&rat_int(m as i64))
            );
        }
    }

    #[test]
    fn reflection_identity() {
        // B_m(x+1) = (-1)^m B_m(-x)
        for m in 0..=12usize {
            let lhs = bernoulli_polynomial(m).shift(&Rat::one());
            let minus_x = Poly::new(Var::X, vec![Rat::zero(), rat_int(-1)]);
            let mut rhs = bernoulli_polynomial(m).compose(&minus_x);
            if m % 2 == 1 {
                rhs = rhs.neg();
            }
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    #[test]
    fn uniform_power_sum_formula() {
        // (1/(m+1)) (B_{m+1}(n+1) - B_{m+1}(0)) equals the antidifference
        // of n^m, our independently computed power sum
        for m in 1..=12usize {
            let b = bernoulli_polynomial(m + 1);
            let at_n_plus_1 = b.shift(&Rat::one()).with_var(Var::N);
            let b0 = b.evaluate(&Rat::zero());
            let lhs = at_n_plus_1
                .try_sub(&Poly::constant(Var::N, b0))
                .unwrap()
                .scale(&rat(1, (m + 1) as i64));
            let rhs = antidifference(&Poly::monomial(Var::N, Rat::one(), m));
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    #[test]
    fn generalized_matches_integer_index() {
        // z = 3: coefficients on the ladder must be those of B_3(x) read
        // from the top: x^3 - (3/2)x^2 + (1/2)x + 0
        let s = generalized_bernoulli(&rat_int(3), 5);
        assert_eq!(s.base(), &rat_int(3));
        let b3 = bernoulli_polynomial(3);
        for k in 0..=3usize {
            assert_eq!(s.coeff_at(&rat_int((3 - k) as i64)).unwrap(), b3.coeff(3 - k));
        }
        assert_eq!(s.coeff_at(&rat_int(-1)).unwrap(), Rat::zero());
        // odd half-steps are zero padding
        assert_eq!(s.coeff(1), Rat::zero());
    }

    #[test]
    fn generalized_two_thirds_leading_terms() {
        let s = generalized_bernoulli(&rat(2, 3), 4);
        assert_eq!(s.coeff_at(&rat(2, 3)).unwrap(), Rat::one());
        assert_eq!(s.coeff_at(&rat(-1, 3)).unwrap(), rat(-1, 3));
        // C(2/3,2) B_2 = (-1/9)(1/6) = -1/54 on x^(-4/3)
        assert_eq!(s.coeff_at(&rat(-4, 3)).unwrap(), rat(-1, 54));
    }
}
