//! Exact computation of r-fold power sums and everything that hangs off them:
//! Faulhaber forms in N_r = (n^2+rn)/2, the Faulhaber coefficients A_k^(w) by
//! several independent routes, the reflective-function calculus, central
//! factorial expansions, asymptotic series for noninteger exponents, and the
//! 1631 cryptographic riddle.
//!
//! All core arithmetic is exact over arbitrary-precision rationals. The only
//! approximate arithmetic in the crate is the fixed-point evaluator used by
//! [`asymptotic::telescope_check`], and it reports its working precision.

pub mod asymptotic;
pub mod bernoulli;
pub mod centralfact;
pub mod coeffs;
pub mod error;
pub mod fixed;
pub mod ladder;
pub mod linalg;
pub mod number;
pub mod poly;
pub mod powersum;
pub mod reflect;
pub mod riddle;
pub mod suite;

pub use error::{Error, Result};
pub use ladder::LadderSeries;
pub use number::{Int, Rat};
pub use poly::{Poly, Var};
pub use powersum::FaulhaberForm;
