//! Finite posets on `1..=n`, permutation posets, linear extensions and the
//! descent polynomial `W_P`.
//!
//! `permutation_poset(π)` labels elements by value: `i ≺ j` iff `i < j` and
//! `i` occurs before `j` in `π`. With this labelling the Jordan-Hölder set
//! of `P_π` is exactly the right weak interval `[id, π]`.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactpoly::is_ultra_log_concave;
use crate::perms::{lower_interval_with_limit, OrderKind, Permutation, StatKind};
use crate::{Error, IntPolynomial, Result};

pub const DEFAULT_EXTENSION_LIMIT: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    /// Row-major closed relation: `leq[(a-1) * n + (b-1)]` iff `a ⪯ b`.
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Validates a relation matrix as a partial order.
    pub fn from_matrix(n: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != n * n {
            return Err(Error::SizeMismatch {
                left: n * n,
                right: leq.len(),
            });
        }
        let p = Self { n, leq };
        for a in 1..=n {
            if !p.leq(a, a) {
                return Err(Error::InvalidPoset(format!("{a} is not related to itself")));
            }
            for b in 1..=n {
                if a != b && p.leq(a, b) && p.leq(b, a) {
                    return Err(Error::InvalidPoset(format!("{a} and {b} violate antisymmetry")));
                }
                for c in 1..=n {
                    if p.leq(a, b) && p.leq(b, c) && !p.leq(a, c) {
                        return Err(Error::InvalidPoset(format!(
                            "{a} <= {b} <= {c} but not {a} <= {c}"
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Reflexive-transitive closure of the given pairs `(a, b)` meaning `a ⪯ b`.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidPoset(format!("pair ({a}, {b}) outside 1..={n}")));
            }
            leq[(a - 1) * n + (b - 1)] = true;
        }
        for k in 0..n {
            for a in 0..n {
                if leq[a * n + k] {
                    for b in 0..n {
                        if leq[k * n + b] {
                            leq[a * n + b] = true;
                        }
                    }
                }
            }
        }
        Self::from_matrix(n, leq)
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_relations(n, &pairs).expect("chains are posets")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_relations(n, &[]).expect("antichains are posets")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[(a - 1) * self.n + (b - 1)]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// `a ⪯ b` implies `a <= b` as integers.
    pub fn is_naturally_labeled(&self) -> bool {
        (1..=self.n).all(|a| (1..a).all(|b| !self.leq(a, b)))
    }

    /// Bitmask of elements strictly below each element (bit `a-1` for `a`).
    fn down_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::OutOfRange(format!(
                "linear extensions are supported for at most 64 elements, got {}",
                self.n
            )));
        }
        Ok((1..=self.n)
            .map(|b| {
                (1..=self.n)
                    .filter(|&a| self.less(a, b))
                    .fold(0u64, |m, a| m | 1 << (a - 1))
            })
            .collect())
    }
}

/// `i ≺ j` iff `i < j` and `i` precedes `j` in `p`.
pub fn permutation_poset(p: &Permutation) -> FinitePoset {
    let n = p.len();
    let pos = p.inverse();
    let mut leq = vec![false; n * n];
    for i in 1..=n {
        for j in i..=n {
            if pos.word()[i - 1] <= pos.word()[j - 1] {
                leq[(i - 1) * n + (j - 1)] = true;
            }
        }
    }
    FinitePoset { n, leq }
}

/// Number of linear extensions, by memoised counting over order ideals.
pub fn count_linear_extensions(poset: &FinitePoset) -> Result<u128> {
    let down = poset.down_masks()?;
    let full = if poset.n == 64 { u64::MAX } else { (1u64 << poset.n) - 1 };
    let mut memo = HashMap::new();
    fn go(ideal: u64, full: u64, down: &[u64], memo: &mut HashMap<u64, u128>) -> u128 {
        if ideal == full {
            return 1;
        }
        if let Some(&c) = memo.get(&ideal) {
            return c;
        }
        let mut total = 0u128;
        for (a, &d) in down.iter().enumerate() {
            let bit = 1u64 << a;
            if ideal & bit == 0 && d & !ideal == 0 {
                total = total.saturating_add(go(ideal | bit, full, down, memo));
            }
        }
        memo.insert(ideal, total);
        total
    }
    Ok(go(0, full, &down, &mut memo))
}

/// Calls `f` on every linear extension word, lexicographic order.
fn for_each_extension(poset: &FinitePoset, limit: u128, mut f: impl FnMut(&[usize])) -> Result<()> {
    let count = count_linear_extensions(poset)?;
    if count > limit {
        return Err(Error::GuardExceeded {
            what: "Jordan-Hölder set",
            size: count,
            limit,
        });
    }
    let down = poset.down_masks()?;
    let n = poset.n;
    let mut word = Vec::with_capacity(n);
    fn rec(ideal: u64, n: usize, down: &[u64], word: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if word.len() == n {
            f(word);
            return;
        }
        for (a, &d) in down.iter().enumerate() {
            let bit = 1u64 << a;
            if ideal & bit == 0 && d & !ideal == 0 {
                word.push(a + 1);
                rec(ideal | bit, n, down, word, f);
                word.pop();
            }
        }
    }
    rec(0, n, &down, &mut word, &mut f);
    Ok(())
}

/// `𝓛(P)`: every word listing the elements in an order compatible with `P`.
pub fn jordan_holder_set(poset: &FinitePoset) -> Result<BTreeSet<Permutation>> {
    jordan_holder_set_with_limit(poset, DEFAULT_EXTENSION_LIMIT)
}

pub fn jordan_holder_set_with_limit(
    poset: &FinitePoset,
    limit: u128,
) -> Result<BTreeSet<Permutation>> {
    let mut out = BTreeSet::new();
    for_each_extension(poset, limit, |w| {
        out.insert(Permutation::new(w.to_vec()).expect("extensions are permutations"));
    })?;
    Ok(out)
}

/// Generating polynomial of `kind` over `𝓛(P)`.
pub fn extension_stat_polynomial(
    poset: &FinitePoset,
    kind: StatKind,
    limit: u128,
) -> Result<IntPolynomial> {
    let mut counts = vec![0u64; poset.n.max(1)];
    for_each_extension(poset, limit, |w| {
        let p = Permutation::new(w.to_vec()).expect("extensions are permutations");
        counts[p.stat(kind)] += 1;
    })?;
    Ok(IntPolynomial::from_counts(&counts))
}

/// `W_P(t) = Σ_{σ ∈ 𝓛(P)} t^{des(σ)}`.
pub fn w_polynomial(poset: &FinitePoset) -> Result<IntPolynomial> {
    extension_stat_polynomial(poset, StatKind::Descent, DEFAULT_EXTENSION_LIMIT)
}

/// Whether `𝓛(P_p)` equals the weak interval below `p` found by the cover search.
pub fn verify_jordan_holder_is_weak_interval(p: &Permutation) -> Result<bool> {
    let lhs = jordan_holder_set(&permutation_poset(p))?;
    let rhs = lower_interval_with_limit(p, OrderKind::Weak, DEFAULT_EXTENSION_LIMIT as usize)?;
    Ok(lhs == rhs)
}

/// `Σ_{σ ∈ [id, p]_W} t^{stat(σ)}`, enumerated through the linear extensions of `P_p`.
pub fn weak_interval_stat_polynomial(p: &Permutation, kind: StatKind) -> Result<IntPolynomial> {
    weak_interval_stat_polynomial_with_limit(p, kind, DEFAULT_EXTENSION_LIMIT)
}

pub fn weak_interval_stat_polynomial_with_limit(
    p: &Permutation,
    kind: StatKind,
    limit: u128,
) -> Result<IntPolynomial> {
    extension_stat_polynomial(&permutation_poset(p), kind, limit)
}

/// Permutations for the ultra-log-concavity probe: all of `S_n` for
/// `n <= max_n`, then `random_trials` seeded uniform samples with
/// `max_n < n <= max_random_n` (or `n <= max_random_n` when that range is empty).
pub fn conjecture1_candidates(
    max_n: usize,
    random_trials: usize,
    max_random_n: usize,
    seed: u64,
) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = (1..=max_n).flat_map(Permutation::all).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lo = if max_n < max_random_n { max_n + 1 } else { 1 };
    if max_random_n >= 1 {
        for _ in 0..random_trials {
            let n = rng.gen_range(lo..=max_random_n);
            let mut w: Vec<usize> = (1..=n).collect();
            w.shuffle(&mut rng);
            out.push(Permutation::new(w).expect("shuffled identity"));
        }
    }
    out
}

/// `Some(W)` when the weak descent polynomial below `p` is not ultra-log-concave.
pub fn conjecture1_check(p: &Permutation, limit: u128) -> Result<Option<IntPolynomial>> {
    let w = weak_interval_stat_polynomial_with_limit(p, StatKind::Descent, limit)?;
    Ok((!is_ultra_log_concave(&w)?).then_some(w))
}

/// Minimum chain cover by bipartite matching on the strict relation.
/// Returns the chains, each listed bottom to top.
pub fn chain_decomposition(poset: &FinitePoset) -> Vec<Vec<usize>> {
    let n = poset.n;
    // matched_up[a] = b means a is followed directly by b in its chain.
    let mut match_right: Vec<Option<usize>> = vec![None; n + 1];
    fn augment(
        a: usize,
        poset: &FinitePoset,
        seen: &mut [bool],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for b in 1..=poset.n {
            if poset.less(a, b) && !seen[b] {
                seen[b] = true;
                if match_right[b].is_none_or(|a2| augment(a2, poset, seen, match_right)) {
                    match_right[b] = Some(a);
                    return true;
                }
            }
        }
        false
    }
    for a in 1..=n {
        let mut seen = vec![false; n + 1];
        augment(a, poset, &mut seen, &mut match_right);
    }
    let mut next = vec![None; n + 1];
    for b in 1..=n {
        if let Some(a) = match_right[b] {
            next[a] = Some(b);
        }
    }
    let mut chains = Vec::new();
    for start in 1..=n {
        if match_right[start].is_none() {
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(b) = next[cur] {
                chain.push(b);
                cur = b;
            }
            chains.push(chain);
        }
    }
    chains
}

/// Size of a largest antichain (Dilworth).
pub fn poset_width(poset: &FinitePoset) -> usize {
    chain_decomposition(poset).len()
}

/// A permutation whose permutation poset is exactly `poset`, which must be
/// naturally labelled of width at most two.
pub fn width_two_to_permutation(poset: &FinitePoset) -> Result<Permutation> {
    if !poset.is_naturally_labeled() {
        return Err(Error::InvalidPoset("poset is not naturally labelled".into()));
    }
    let width = poset_width(poset);
    if width > 2 {
        return Err(Error::InvalidPoset(format!("poset has width {width}, need at most 2")));
    }
    let n = poset.n;
    // a precedes b iff (a < b and a ≺ b) or (a > b and b ⊀ a).
    let precedes = |a: usize, b: usize| if a < b { poset.less(a, b) } else { !poset.less(b, a) };
    let mut word = vec![0; n];
    for a in 1..=n {
        let rank = (1..=n).filter(|&b| b != a && precedes(b, a)).count();
        if word[rank] != 0 {
            return Err(Error::InvalidPoset("poset is not a permutation poset".into()));
        }
        word[rank] = a;
    }
    let p = Permutation::new(word)?;
    if permutation_poset(&p) != *poset {
        return Err(Error::InvalidPoset("poset is not a permutation poset".into()));
    }
    Ok(p)
}
