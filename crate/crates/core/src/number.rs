//! Arbitrary-precision integers and exact rationals.
//!
//! `Int` and `Rat` are the scalars of every computation in this crate.
//! Rationals are kept in canonical form (reduced, positive denominator,
//! zero as 0/1); `Rat::new` enforces this at construction. Values
//! serialize as `p/q`, or just `p` when the denominator is 1.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for p/q from machine integers. Panics when q = 0.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// k! as an exact integer.
pub fn factorial(k: usize) -> Int {
    let mut acc = Int::one();
    for i in 2..=k {
        acc *= Int::from(i);
    }
    acc
}

/// Binomial coefficient C(n, k) for integer n (possibly negative).
pub fn binomial_int(n: &Int, k: usize) -> Int {
    let mut acc = Int::one();
    for i in 0..k {
        acc *= n - Int::from(i);
        acc /= Int::from(i + 1);
    }
    acc
}

/// C(n, k) for small nonnegative arguments.
pub fn binomial(n: u64, k: usize) -> Int {
    binomial_int(&Int::from(n), k)
}

/// Binomial coefficient C(x, k) = x(x-1)...(x-k+1)/k! with rational upper
/// argument; C(x, 0) = 1.
pub fn rational_binomial(x: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= x - rat_int(i as i64);
    }
    acc / Rat::from_integer(factorial(k))
}

/// True when the rational is an integer.
pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// 2^k as an Int.
pub fn pow2(k: usize) -> Int {
    Int::one() << k
}

/// Least common multiple of two positive integers.
pub fn lcm(a: &Int, b: &Int) -> Int {
    num::integer::lcm(a.clone(), b.clone())
}

/// Greatest common divisor (nonnegative).
pub fn gcd(a: &Int, b: &Int) -> Int {
    num::integer::gcd(a.clone(), b.clone())
}

/// Least common multiple of a set of positive rationals' generators:
/// the smallest positive rational t such that t is an integer multiple of
/// every input. For inputs p_i/q_i in lowest terms this is
/// lcm(p_i)/gcd(q_i).
pub fn rational_lcm(values: &[Rat]) -> Rat {
    assert!(!values.is_empty());
    let mut num_acc = values[0].numer().abs();
    let mut den_acc = values[0].denom().clone();
    for v in &values[1..] {
        num_acc = lcm(&num_acc, &v.numer().abs());
        den_acc = gcd(&den_acc, v.denom());
    }
    Rat::new(num_acc, den_acc)
}
