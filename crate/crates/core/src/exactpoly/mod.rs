//! Exact univariate polynomial arithmetic over `Z` and the decision
//! procedures built on it: Sturm counting, root isolation, interlacing,
//! and (ultra-)log-concavity.

mod concavity;
mod interlace;
mod poly;
mod roots;
mod sturm;

pub use concavity::{is_log_concave, is_ultra_log_concave, is_unimodal};
pub use interlace::{interlaces, is_interlacing_sequence};
pub use poly::IntPolynomial;
pub use roots::{
    is_real_rooted, isolate_roots, refine_real_roots, IsolatedRoot, RationalInterval,
    RootednessReport,
};
pub use sturm::{
    squarefree_decomposition, squarefree_part, sturm_real_root_count, sturm_real_root_count_in,
    Bound, SturmChain,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

/// Clears denominators: returns the integer polynomial `L * p` where `L` is
/// the least common multiple of the denominators, together with `L`.
pub fn clear_denominators(coeffs: &[BigRational]) -> (IntPolynomial, BigInt) {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    (IntPolynomial::new(ints), lcm)
}
