//! Mechanical solution of the cryptographic exercise closing Faulhaber's
//! 1631 Academia Algebrae: five numbers extracted from the coefficients of
//! power sums up to the 25th, decoded as letters. The c-coefficients need
//! an extra factor of 1/4 for the published formulas to come out integral,
//! and the fifth formula fails under every scaling tried.

use num::traits::{One, Signed, Zero};

use crate::number::{gcd, pow2, rational_lcm, Int, Rat};
use crate::poly::{Poly, Var};
use crate::powersum::{power_sum, to_faulhaber_form};

/// The 23-letter Latin alphabet (no J, V, W); x = 9, 5, 18, 20 spell IESU.
pub const ALPHABET: [char; 23] = [
    'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'K', 'L', 'M', 'N', 'O', 'P', 'Q', 'R', 'S',
    'T', 'U', 'X', 'Y', 'Z',
];

/// Integer coefficient list of a power sum over its minimal denominator:
/// p = (a_deg x^deg + ... + a_1 x)/d with gcd(a_i) = 1. For a power sum the
/// value at 1 is 1, so d equals the coefficient sum.
fn integer_normal_form(p: &Poly) -> (Vec<Int>, Int) {
    let (den, nums) = p.common_denominator();
    let mut g = Int::zero();
    for n in &nums {
        g = gcd(&g, n);
    }
    if g.is_one() || g.is_zero() {
        return (nums, den);
    }
    let a = nums.iter().map(|n| n / &g).collect();
    (a, den / g)
}

/// Sigma^9 n^8 = (a_17 n^17 + ... + a_1 n)/d with coprime integer a's.
/// Returns the a-list indexed by power of n (index 0 unused and zero).
pub fn sigma9_n8() -> (Vec<Int>, Int) {
    integer_normal_form(&power_sum(8, 9))
}

/// The leading data of Sigma n^25 under the same normalization: (A_26, D).
pub fn sigma_n25_leading() -> (Int, Int) {
    let (a, d) = integer_normal_form(&power_sum(25, 1));
    (a[26].clone(), d)
}

/// A coefficient list rescaled so entry k is an integer multiple of 2^k,
/// by the smallest positive rational multiplier.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledCoefficients {
    pub scale: Rat,
    /// scale * coefficient of N^k, signed
    pub signed: Vec<Int>,
    /// the magnitudes, as the 1631 displays write them
    pub magnitudes: Vec<Int>,
}

/// Smallest positive t with t * coeff_k divisible by 2^k for every k.
/// Valid multipliers form the intersection of the groups (2^k/coeff_k) Z,
/// whose generator is the rational lcm of the individual generators.
pub fn minimal_pow2_scaling(coeffs: &[Rat]) -> ScaledCoefficients {
    let generators: Vec<Rat> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| Rat::from_integer(pow2(k)) / c.clone())
        .collect();
    assert!(!generators.is_empty(), "all-zero coefficient list");
    let scale = rational_lcm(&generators);
    let signed: Vec<Int> = coeffs
        .iter()
        .map(|c| {
            let v = c * &scale;
            debug_assert!(v.denom().is_one());
            v.numer().clone()
        })
        .collect();
    let magnitudes = signed.iter().map(|v| v.abs()).collect();
    ScaledCoefficients { scale, signed, magnitudes }
}

/// The four Faulhaber-form coefficient lists the riddle draws on, in the
/// 1631 normalization.
pub struct RiddleTables {
    /// Sigma n^22 / Sigma n^2 over N^0..N^10
    pub b: ScaledCoefficients,
    /// Sigma n^23 / Sigma n^3 over N^0..N^10
    pub c: ScaledCoefficients,
    /// Sigma n^24 / Sigma n^2 over N^0..N^11
    pub d: ScaledCoefficients,
    /// Sigma n^25 / Sigma n^3 over N^0..N^11
    pub e: ScaledCoefficients,
}

pub fn riddle_tables() -> RiddleTables {
    let even_quotient = |m: u32| {
        let f = to_faulhaber_form(m, 1).expect("m, r >= 1");
        minimal_pow2_scaling(f.g.coeffs())
    };
    // odd sums divide by Sigma n^3 = N^2: drop two powers of N
    let odd_quotient = |m: u32| {
        let full = to_faulhaber_form(m, 1)
            .expect("m, r >= 1")
            .collapsed_n_polynomial()
            .expect("odd exponent, r = 1");
        let n_sq = Poly::monomial(Var::CapN, Rat::one(), 2);
        let q = full.exact_div(&n_sq).expect("odd power sums vanish to order 2 in N");
        minimal_pow2_scaling(q.coeffs())
    };
    RiddleTables {
        b: even_quotient(22),
        c: odd_quotient(23),
        d: even_quotient(24),
        e: odd_quotient(25),
    }
}

/// Everything the riddle produces: the published coefficient values, the
/// five x-numbers under a chosen c-rescaling, their letters, and the
/// speculative alternate fifth formula.
#[derive(Clone, Debug)]
pub struct RiddleReport {
    /// coefficients of Sigma^9 n^8, indexed by power of n
    pub a: Vec<Int>,
    pub d: Int,
    pub a26: Int,
    pub dd: Int,
    pub tables: Vec<(char, Vec<Int>)>,
    /// extra factor applied to the c-list in the x-formulas
    pub c_scale: Rat,
    pub x: [Rat; 5],
    pub integral: [bool; 5],
    /// letter per x-value, when integral and in alphabet range
    pub letters: [Option<char>; 5],
    /// the concealed name, completing the failed x_5 from context
    pub concealed_name: String,
    /// value of the alternate reading A_26 a_11 / D in place of
    /// A_26 a_11 - D; reported, never asserted correct
    pub x5_alternate: Rat,
}

struct RiddleData {
    a: Vec<Int>,
    d: Int,
    a26: Int,
    dd: Int,
    tables: RiddleTables,
}

fn riddle_data() -> RiddleData {
    let (a, d) = sigma9_n8();
    let (a26, dd) = sigma_n25_leading();
    RiddleData { a, d, a26, dd, tables: riddle_tables() }
}

fn letter_for(x: &Rat) -> Option<char> {
    if !x.denom().is_one() {
        return None;
    }
    let idx: usize = x.numer().try_into().ok()?;
    (1..=23).contains(&idx).then(|| ALPHABET[idx - 1])
}

/// Compute the riddle with the c-list multiplied by `c_scale`; the paper's
/// repair is c_scale = 1/4, while 1 reproduces the raw tables.
pub fn solve(c_scale: &Rat) -> RiddleReport {
    let data = riddle_data();
    let a = &data.a;
    let b = &data.tables.b.magnitudes;
    let c = &data.tables.c.magnitudes;
    let dl = &data.tables.d.magnitudes;
    let el = &data.tables.e.magnitudes;
    let ci = |k: usize| Rat::from_integer(c[k].clone()) * c_scale;
    let ai = |k: usize| Rat::from_integer(a[k].clone());
    let bi = |k: usize| Rat::from_integer(b[k].clone());

    let x1 = (ci(3) - ai(12)) / Rat::from_integer(Int::from(7924252));
    let x2 = (bi(5) + ai(10)) / Rat::from_integer(Int::from(112499648));
    let x3 = (ai(11) - bi(9) - ci(1)) / Rat::from_integer(Int::from(2945002));
    let x4 = (ai(14) + ci(7)) / Rat::from_integer(Int::from(120964));
    let x5_num = Rat::from_integer(&data.a26 * &a[11] - &data.dd + &a[13] + &dl[11] + &el[11]);
    let x5 = x5_num / Rat::from_integer(Int::from(199444));
    let x5_alt = (Rat::from_integer(&data.a26 * &a[11]) / Rat::from_integer(data.dd.clone())
        + ai(13)
        + Rat::from_integer(dl[11].clone())
        + Rat::from_integer(el[11].clone()))
        / Rat::from_integer(Int::from(199444));

    let x = [x1, x2, x3, x4, x5];
    let integral = std::array::from_fn(|i| x[i].denom().is_one());
    let letters = std::array::from_fn(|i| letter_for(&x[i]));
    let concealed_name: String = letters
        .iter()
        .map(|l| l.unwrap_or('S'))
        .collect();
    RiddleReport {
        a: data.a.clone(),
        d: data.d.clone(),
        a26: data.a26.clone(),
        dd: data.dd.clone(),
        tables: vec![
            ('b', b.clone()),
            ('c', c.clone()),
            ('d', dl.clone()),
            ('e', el.clone()),
        ],
        c_scale: c_scale.clone(),
        x,
        integral,
        letters,
        concealed_name,
        x5_alternate: x5_alt,
    }
}
