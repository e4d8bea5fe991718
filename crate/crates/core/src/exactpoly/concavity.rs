use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::IntPolynomial;
use crate::{Error, Result};

fn nonnegative(p: &IntPolynomial) -> Result<&[BigInt]> {
    if let Some(degree) = p.coeffs().iter().position(Signed::is_negative) {
        return Err(Error::NegativeCoefficient { degree });
    }
    Ok(p.coeffs())
}

fn binomial_row(d: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..d {
        let next = &row[k] * BigInt::from(d - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// `a_k^2 >= a_{k-1} a_{k+1}` for every interior index.
pub fn is_log_concave(p: &IntPolynomial) -> Result<bool> {
    let a = nonnegative(p)?;
    Ok(a.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2]))
}

/// Log-concavity of `a_k / C(d, k)` with `d = deg p`, by cross-multiplication.
pub fn is_ultra_log_concave(p: &IntPolynomial) -> Result<bool> {
    let a = nonnegative(p)?;
    if a.len() < 3 {
        return Ok(true);
    }
    let c = binomial_row(a.len() - 1);
    Ok((1..a.len() - 1).all(|k| {
        &a[k] * &a[k] * &c[k - 1] * &c[k + 1] >= &a[k - 1] * &a[k + 1] * &c[k] * &c[k]
    }))
}

/// Coefficients weakly increase and then weakly decrease.
pub fn is_unimodal(p: &IntPolynomial) -> Result<bool> {
    let a = nonnegative(p)?;
    let mut k = 1;
    while k < a.len() && a[k] >= a[k - 1] {
        k += 1;
    }
    while k < a.len() && a[k] <= a[k - 1] {
        k += 1;
    }
    Ok(k >= a.len())
}
