use super::FerrersBoard;
use crate::{Error, IntPolynomial, Result};

/// One step of the row-and-column insertion recursion.
///
/// `lower` is the refined family `(Q^λ_1, ..., Q^λ_{λ_1})` of a board `λ`; the
/// result is the refined family of `λ⁺ = (m, λ_1 + 1, ..., λ_n + 1)`:
/// `Q^{λ⁺}_i = Σ_{j<i} Q^λ_j + t Σ_{j>=i} Q^λ_j` for `i = 1..=m`.
pub fn recursion_step(lower: &[IntPolynomial], m: usize) -> Result<Vec<IntPolynomial>> {
    let lambda1 = lower.len();
    if m == 0 || m > lambda1 + 1 {
        return Err(Error::OutOfRange(format!(
            "first part m = {m} must lie in 1..={}",
            lambda1 + 1
        )));
    }
    let total: IntPolynomial = lower.iter().sum();
    let mut below = IntPolynomial::zero();
    let mut out = Vec::with_capacity(m);
    for i in 1..=m {
        if i >= 2 {
            below = &below + &lower[i - 2];
        }
        let above = &total - &below;
        out.push(&below + &above.shift(1));
    }
    Ok(out)
}

/// The `m x λ_1` transfer matrix as displayed: row `r` (from the top)
/// produces `Q^{λ⁺}_{m-r}`, column `c` (from the left) multiplies `Q^λ_{λ_1-c}`.
/// `true` marks an entry `t`, `false` an entry `1`.
///
/// With rows numbered `i = 1..=m` from the bottom and columns `j = 1..=λ_1`
/// from the left, the entry is `t` exactly when `j <= λ_1 - (i - 1)`.
pub fn transfer_matrix(lambda1: usize, m: usize) -> Vec<Vec<bool>> {
    (0..m)
        .map(|r| {
            let i = m - r;
            (1..=lambda1).map(|j| j + i <= lambda1 + 1).collect()
        })
        .collect()
}

/// Applies [`transfer_matrix`] to the reversed family `(Q^λ_{λ_1}, ..., Q^λ_1)`,
/// returning `(Q^{λ⁺}_m, ..., Q^{λ⁺}_1)`.
pub fn apply_transfer_matrix(lower: &[IntPolynomial], m: usize) -> Result<Vec<IntPolynomial>> {
    let lambda1 = lower.len();
    if m == 0 || m > lambda1 + 1 {
        return Err(Error::OutOfRange(format!(
            "first part m = {m} must lie in 1..={}",
            lambda1 + 1
        )));
    }
    let reversed: Vec<&IntPolynomial> = lower.iter().rev().collect();
    Ok(transfer_matrix(lambda1, m)
        .into_iter()
        .map(|row| {
            row.iter()
                .zip(&reversed)
                .map(|(&is_t, q)| if is_t { q.shift(1) } else { (*q).clone() })
                .sum()
        })
        .collect())
}

/// `(Q^λ, refined family)` built from a single row by repeated
/// [`recursion_step`], peeling the first row and first column at each level.
pub fn rook_eulerian_recursive(board: &FerrersBoard) -> Result<(IntPolynomial, Vec<IntPolynomial>)> {
    let parts = board.parts();
    let n = parts.len();
    // Level k of the peeling is (λ_{k+1} - k, ..., λ_n - k).
    let base = parts[n - 1] - (n - 1);
    let mut family = vec![IntPolynomial::one(); base];
    for k in (0..n - 1).rev() {
        let m = parts[k] - k;
        family = recursion_step(&family, m)?;
    }
    let total = family.iter().sum();
    Ok((total, family))
}
