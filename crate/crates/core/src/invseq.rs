//! s-inversion sequences and s-Eulerian polynomials.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::boards::parse_int_list;
use crate::{Error, IntPolynomial, Result};

pub const DEFAULT_PRODUCT_LIMIT: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SVector(Vec<u64>);

impl SVector {
    pub fn new(s: Vec<u64>) -> Result<Self> {
        if s.is_empty() || s.contains(&0) {
            return Err(Error::OutOfRange(format!(
                "{s:?}: an s-vector needs at least one entry, all positive"
            )));
        }
        Ok(Self(s))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `∏ s_i`, saturating at `u128::MAX`.
    pub fn product(&self) -> u128 {
        self.0
            .iter()
            .try_fold(1u128, |acc, &s| acc.checked_mul(s as u128))
            .unwrap_or(u128::MAX)
    }
}

impl fmt::Display for SVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for SVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v = parse_int_list(s).map_err(Error::OutOfRange)?;
        SVector::new(v.into_iter().map(|x| x as u64).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InversionSequence {
    e: Vec<u64>,
    s: SVector,
}

impl InversionSequence {
    pub fn new(e: Vec<u64>, s: SVector) -> Result<Self> {
        if e.len() != s.len() {
            return Err(Error::SizeMismatch {
                left: e.len(),
                right: s.len(),
            });
        }
        if let Some(i) = e.iter().zip(s.entries()).position(|(x, y)| x >= y) {
            return Err(Error::OutOfRange(format!(
                "e_{} = {} is not below s_{} = {}",
                i + 1,
                e[i],
                i + 1,
                s.entries()[i]
            )));
        }
        Ok(Self { e, s })
    }

    pub fn entries(&self) -> &[u64] {
        &self.e
    }
}

fn ratio_less(e_a: u64, s_a: u64, e_b: u64, s_b: u64) -> bool {
    (e_a as u128) * (s_b as u128) < (e_b as u128) * (s_a as u128)
}

/// `|{i ∈ 0..n-1 : e_i / s_i < e_{i+1} / s_{i+1}}|` with `e_0 = 0`, `s_0 = 1`.
pub fn ascent_statistic(seq: &InversionSequence) -> usize {
    let s = seq.s.entries();
    let mut prev = (0u64, 1u64);
    let mut count = 0;
    for (&e, &si) in seq.e.iter().zip(s) {
        if ratio_less(prev.0, prev.1, e, si) {
            count += 1;
        }
        prev = (e, si);
    }
    count
}

/// `E^{(s)}(t)` with the default product guard.
pub fn s_eulerian(s: &SVector) -> Result<IntPolynomial> {
    s_eulerian_with_limit(s, DEFAULT_PRODUCT_LIMIT)
}

/// Transfer over positions: the ascent at `i` only depends on `(e_i, e_{i+1})`,
/// so the polynomial is accumulated per value of the last entry.
pub fn s_eulerian_with_limit(s: &SVector, limit: u128) -> Result<IntPolynomial> {
    let size = s.product();
    if size > limit {
        return Err(Error::GuardExceeded {
            what: "s-vector product",
            size,
            limit,
        });
    }
    let entries = s.entries();
    let n = entries.len();
    // state[v][k]: sequences so far ending in v with k ascents
    let mut state: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    let mut prev_s = 1u64;
    for &si in entries {
        let mut next = vec![vec![BigInt::zero(); n + 1]; si as usize];
        for (v, poly) in state.iter().enumerate() {
            for (w, slot) in next.iter_mut().enumerate() {
                let up = usize::from(ratio_less(v as u64, prev_s, w as u64, si));
                for (k, c) in poly.iter().enumerate() {
                    if !c.is_zero() {
                        slot[k + up] += c;
                    }
                }
            }
        }
        state = next;
        prev_s = si;
    }
    let mut total = vec![BigInt::zero(); n + 1];
    for poly in &state {
        for (k, c) in poly.iter().enumerate() {
            total[k] += c;
        }
    }
    Ok(IntPolynomial::new(total))
}

/// Every s-inversion sequence, odometer order with the last entry fastest.
pub fn inversion_sequences(s: &SVector) -> impl Iterator<Item = InversionSequence> + '_ {
    let n = s.len();
    let mut current = Some(vec![0u64; n]);
    std::iter::from_fn(move || {
        let e = current.take()?;
        let mut next = e.clone();
        for i in (0..n).rev() {
            next[i] += 1;
            if next[i] < s.entries()[i] {
                current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(InversionSequence { e, s: s.clone() })
    })
}

/// Collapses every run of 1s to a single 1.
pub fn reduce_consecutive_ones(s: &SVector) -> SVector {
    let mut out: Vec<u64> = Vec::with_capacity(s.len());
    for &x in s.entries() {
        if x == 1 && out.last() == Some(&1) {
            continue;
        }
        out.push(x);
    }
    SVector(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSearchOutcome {
    pub found: Option<SVector>,
    pub candidates_tested: u64,
    pub product: u128,
}

fn prime_factor_count(mut n: u128) -> usize {
    let mut count = 0;
    let mut p = 2u128;
    while p * p <= n {
        while n.is_multiple_of(p) {
            n /= p;
            count += 1;
        }
        p += 1;
    }
    count + usize::from(n > 1)
}

/// Ordered factorizations of `n` into factors `>= 2`, lexicographic.
fn ordered_factorizations(n: u128, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if n == 1 {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        return;
    }
    for d in 2..=n {
        if n.is_multiple_of(d) {
            prefix.push(d as u64);
            ordered_factorizations(n / d, prefix, out);
            prefix.pop();
        }
    }
}

/// Candidate s-vectors for a target value `n = E(1)`: every ordered
/// factorization into parts `>= 2` with an optional single 1 in each interior
/// gap, of length at most `max_len`. Leading and trailing 1s never change
/// `E^{(s)}` and longer runs of 1s collapse, so for `n > 1` this covers every
/// s-vector up to equivalence.
pub fn s_candidates(n: u128, max_len: usize) -> Vec<SVector> {
    if n == 1 {
        return vec![SVector(vec![1])];
    }
    let mut facts = Vec::new();
    ordered_factorizations(n, &mut Vec::new(), &mut facts);
    let mut out = Vec::new();
    for f in facts {
        let gaps = f.len() - 1;
        for mask in 0u64..(1 << gaps) {
            let mut s = Vec::with_capacity(f.len() + gaps);
            for (i, &x) in f.iter().enumerate() {
                if i > 0 && mask >> (i - 1) & 1 == 1 {
                    s.push(1);
                }
                s.push(x);
            }
            if s.len() <= max_len {
                out.push(SVector(s));
            }
        }
    }
    out.sort();
    out
}

/// Default candidate length bound `2 Ω(n) + 1`.
pub fn default_max_len(n: u128) -> usize {
    2 * prime_factor_count(n) + 1
}

/// Searches the candidate s-vectors for one with `E^{(s)} = target`.
pub fn search_s_match(target: &IntPolynomial, max_len: Option<usize>) -> Result<SSearchOutcome> {
    if let Some(d) = target.coeffs().iter().position(|c| c < &BigInt::zero()) {
        return Err(Error::NegativeCoefficient { degree: d });
    }
    let n = target
        .value_at_one()
        .to_u128()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::OutOfRange("target(1) must be a positive integer".into()))?;
    let max_len = max_len.unwrap_or_else(|| default_max_len(n));
    let mut tested = 0;
    for s in s_candidates(n, max_len) {
        tested += 1;
        // E has degree at most len(s) and constant term 1.
        if target.degree().unwrap_or(0) > s.len() {
            continue;
        }
        if &s_eulerian_with_limit(&s, u128::MAX)? == target {
            return Ok(SSearchOutcome {
                found: Some(s),
                candidates_tested: tested,
                product: n,
            });
        }
    }
    Ok(SSearchOutcome {
        found: None,
        candidates_tested: tested,
        product: n,
    })
}
