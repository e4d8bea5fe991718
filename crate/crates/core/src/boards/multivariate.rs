use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{enumerate_row_complete, FerrersBoard};
use crate::exactpoly::{clear_denominators, is_real_rooted};
use crate::{Error, IntPolynomial, Result};

/// A positive direction `μ = (μ_1, ..., μ_{n-1})`, one weight per ascent position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayDirection {
    weights: Vec<BigRational>,
}

impl RayDirection {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        if let Some(w) = weights.iter().find(|w| !w.is_positive()) {
            return Err(Error::OutOfRange(format!("ray weight {w} is not positive")));
        }
        Ok(Self { weights })
    }

    pub fn from_integers(weights: &[i64]) -> Result<Self> {
        Self::new(
            weights
                .iter()
                .map(|&w| BigRational::from_integer(BigInt::from(w)))
                .collect(),
        )
    }

    pub fn ones(len: usize) -> Self {
        Self {
            weights: vec![BigRational::one(); len],
        }
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }
}

impl fmt::Display for RayDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.weights.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(", "))
    }
}

/// Number of row-complete placements per ascent set; bit `i - 1` marks ascent position `i`.
pub fn ascent_set_distribution(board: &FerrersBoard) -> BTreeMap<u64, u64> {
    assert!(board.rows() <= 64, "ascent masks hold at most 64 rows");
    let mut dist = BTreeMap::new();
    for p in enumerate_row_complete(board) {
        let mask = p
            .word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1])
            .fold(0u64, |m, (i, _)| m | (1 << i));
        *dist.entry(mask).or_insert(0) += 1;
    }
    dist
}

fn restrict(dist: &BTreeMap<u64, u64>, dir: &RayDirection, degree: usize) -> Vec<BigRational> {
    let mut coeffs = vec![BigRational::zero(); degree + 1];
    for (&mask, &count) in dist {
        let mut w = BigRational::from_integer(BigInt::from(count));
        for (i, mu) in dir.weights.iter().enumerate() {
            if mask >> i & 1 == 1 {
                w *= mu;
            }
        }
        coeffs[mask.count_ones() as usize] += w;
    }
    coeffs
}

/// `Σ_σ ∏_{i ∈ Asc(σ)} μ_i t` over row-complete placements, as rational
/// coefficients in increasing degree.
pub fn multivariate_ray_restriction(
    board: &FerrersBoard,
    dir: &RayDirection,
) -> Result<Vec<BigRational>> {
    let n = board.rows();
    if dir.weights.len() + 1 != n {
        return Err(Error::SizeMismatch {
            left: n.saturating_sub(1),
            right: dir.weights.len(),
        });
    }
    let dist = ascent_set_distribution(board);
    let mut coeffs = restrict(&dist, dir, n - 1);
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    Ok(coeffs)
}

#[derive(Clone, Debug)]
pub struct SamePhaseReport {
    pub board: FerrersBoard,
    pub trials: usize,
    pub passed: usize,
    pub failures: Vec<(RayDirection, IntPolynomial)>,
}

impl SamePhaseReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tests real-rootedness of the restriction along `trials` random positive
/// directions with weights `p/q`, `1 <= p, q <= 16`. A failure disproves
/// same-phase stability; passing proves nothing.
pub fn same_phase_stability_probe(
    board: &FerrersBoard,
    trials: usize,
    seed: u64,
) -> Result<SamePhaseReport> {
    if trials == 0 {
        return Err(Error::OutOfRange("trials must be at least 1".into()));
    }
    let n = board.rows();
    let dist = ascent_set_distribution(board);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..trials {
        let weights = (0..n - 1)
            .map(|_| {
                let p: i64 = rng.gen_range(1..=16);
                let q: i64 = rng.gen_range(1..=16);
                BigRational::new(p.into(), q.into())
            })
            .collect();
        let dir = RayDirection { weights };
        let (poly, _) = clear_denominators(&restrict(&dist, &dir, n - 1));
        if !is_real_rooted(&poly)?.is_real_rooted {
            failures.push((dir, poly));
        }
    }
    Ok(SamePhaseReport {
        board: board.clone(),
        trials,
        passed: trials - failures.len(),
        failures,
    })
}
