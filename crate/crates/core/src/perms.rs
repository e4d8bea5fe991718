//! Permutations, their statistics, 312 patterns, and the Bruhat and right
//! weak orders.
//!
//! The weak order here is the right weak order: covers swap adjacent
//! positions. Its lower interval below `π` is exactly the set of linear
//! extensions read off the value-labelled permutation poset of `π`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::exactpoly::is_real_rooted;
use crate::boards::{enumerate_row_complete, parse_int_list, FerrersBoard};
use crate::{Error, IntPolynomial, Result};

pub const DEFAULT_INTERVAL_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a rearrangement of 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self { word })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n).collect(),
        }
    }

    /// `ω₀ = n ... 2 1`.
    pub fn longest(n: usize) -> Self {
        Self {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.word.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Self { word: inv }
    }

    pub fn inversions(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn stat(&self, kind: StatKind) -> usize {
        let w = &self.word;
        match kind {
            StatKind::Ascent => w.windows(2).filter(|p| p[0] < p[1]).count(),
            StatKind::Descent => w.windows(2).filter(|p| p[0] > p[1]).count(),
            StatKind::Excedance => w.iter().enumerate().filter(|&(i, &x)| x > i + 1).count(),
            StatKind::Peak => w.windows(3).filter(|p| p[0] < p[1] && p[1] > p[2]).count(),
        }
    }

    /// First `(i, j, k)` in lexicographic order (1-based positions) with
    /// `i < j < k` and `σ_j < σ_k < σ_i`.
    pub fn contains_312(&self) -> Option<(usize, usize, usize)> {
        let w = &self.word;
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                if w[j] >= w[i] {
                    continue;
                }
                for k in j + 1..n {
                    if w[j] < w[k] && w[k] < w[i] {
                        return Some((i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        None
    }

    /// Every permutation of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::boards::write_list(f, &self.word)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        Permutation::new(parse_int_list(s).map_err(Error::InvalidPermutation)?)
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.clone();
        if let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) {
            let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
            w.swap(i - 1, j);
            w[i..].reverse();
            self.next = Some(w);
        }
        Some(Permutation { word: current })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StatKind {
    Ascent,
    Descent,
    Excedance,
    /// Interior peaks: `σ_{i-1} < σ_i > σ_{i+1}` with `2 <= i <= n-1`.
    Peak,
}

impl FromStr for StatKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "asc" | "ascent" => Ok(Self::Ascent),
            "des" | "descent" => Ok(Self::Descent),
            "exc" | "excedance" => Ok(Self::Excedance),
            "peak" => Ok(Self::Peak),
            _ => Err(Error::OutOfRange(format!("unknown statistic {s:?}"))),
        }
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Ascent => "asc",
            Self::Descent => "des",
            Self::Excedance => "exc",
            Self::Peak => "peak",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Bruhat,
    Weak,
}

impl FromStr for OrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bruhat" | "strong" => Ok(Self::Bruhat),
            "weak" => Ok(Self::Weak),
            _ => Err(Error::OutOfRange(format!("unknown order {s:?}"))),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Bruhat => "bruhat",
            Self::Weak => "weak",
        })
    }
}

/// Tableau criterion: for every `k`, the sorted first `k` entries of `u`
/// are entrywise at most those of `v`.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let mut a = Vec::with_capacity(u.len());
    let mut b = Vec::with_capacity(v.len());
    for (&x, &y) in u.word.iter().zip(&v.word) {
        let pa = a.partition_point(|&z| z < x);
        a.insert(pa, x);
        let pb = b.partition_point(|&z| z < y);
        b.insert(pb, y);
        if a.iter().zip(&b).any(|(p, q)| p > q) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lower interval `[id, top]` with the default size guard.
pub fn lower_interval(top: &Permutation, order: OrderKind) -> Result<BTreeSet<Permutation>> {
    lower_interval_with_limit(top, order, DEFAULT_INTERVAL_LIMIT)
}

/// Downward search from `top`: every transposition that lowers the inversion
/// count (Bruhat) or every adjacent descent swap (weak). Errors once more
/// than `limit` elements are found.
pub fn lower_interval_with_limit(
    top: &Permutation,
    order: OrderKind,
    limit: usize,
) -> Result<BTreeSet<Permutation>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(top.clone());
    queue.push_back(top.clone());
    while let Some(p) = queue.pop_front() {
        let w = &p.word;
        let n = w.len();
        let mut visit = |i: usize, j: usize| -> Result<()> {
            let mut next = w.clone();
            next.swap(i, j);
            let next = Permutation { word: next };
            if !seen.contains(&next) {
                if seen.len() >= limit {
                    return Err(Error::GuardExceeded {
                        what: "interval",
                        size: seen.len() as u128 + 1,
                        limit: limit as u128,
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
            Ok(())
        };
        match order {
            OrderKind::Bruhat => {
                for i in 0..n {
                    for j in i + 1..n {
                        if w[i] > w[j] {
                            visit(i, j)?;
                        }
                    }
                }
            }
            OrderKind::Weak => {
                for i in 0..n.saturating_sub(1) {
                    if w[i] > w[i + 1] {
                        visit(i, i + 1)?;
                    }
                }
            }
        }
    }
    Ok(seen)
}

/// `Σ_{σ ∈ [id, top]} t^{stat(σ)}`.
pub fn interval_stat_polynomial(
    top: &Permutation,
    order: OrderKind,
    kind: StatKind,
) -> Result<IntPolynomial> {
    interval_stat_polynomial_with_limit(top, order, kind, DEFAULT_INTERVAL_LIMIT)
}

pub fn interval_stat_polynomial_with_limit(
    top: &Permutation,
    order: OrderKind,
    kind: StatKind,
    limit: usize,
) -> Result<IntPolynomial> {
    let interval = lower_interval_with_limit(top, order, limit)?;
    Ok(stat_polynomial(interval.iter(), kind))
}

/// Generating polynomial of `kind` over a collection of permutations.
pub fn stat_polynomial<'a>(
    perms: impl IntoIterator<Item = &'a Permutation>,
    kind: StatKind,
) -> IntPolynomial {
    let mut counts: Vec<u64> = Vec::new();
    for p in perms {
        let k = p.stat(kind);
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    IntPolynomial::from_counts(&counts)
}

/// `Some(poly)` when the Bruhat excedance polynomial below `p` is not real-rooted.
pub fn excedance_check(p: &Permutation, limit: usize) -> Result<Option<IntPolynomial>> {
    let poly = interval_stat_polynomial_with_limit(p, OrderKind::Bruhat, StatKind::Excedance, limit)?;
    Ok((!is_real_rooted(&poly)?.is_real_rooted).then_some(poly))
}

fn check_square_ended(board: &FerrersBoard) -> Result<()> {
    let n = board.rows();
    if board.parts()[n - 1] != n {
        return Err(Error::InvalidBoard(format!(
            "{board}: the last row must have exactly {n} cells"
        )));
    }
    Ok(())
}

/// The 312-avoiding permutation of a board with `λ_n = n`: each row, top to
/// bottom, takes the rightmost free column.
pub fn board_to_permutation(board: &FerrersBoard) -> Result<Permutation> {
    check_square_ended(board)?;
    let n = board.rows();
    let mut used = vec![false; n + 1];
    let mut word = Vec::with_capacity(n);
    for &l in board.parts() {
        let c = (1..=l).rev().find(|&c| !used[c]).ok_or_else(|| {
            Error::InvalidBoard(format!("{board}: no free column in a row of length {l}"))
        })?;
        used[c] = true;
        word.push(c);
    }
    let p = Permutation::new(word)?;
    if let Some(w) = p.contains_312() {
        return Err(Error::Contains312(w));
    }
    Ok(p)
}

/// Inverse of [`board_to_permutation`]: `λ_i = max(σ_1, ..., σ_i)`.
pub fn permutation_to_board(p: &Permutation) -> Result<FerrersBoard> {
    if let Some(w) = p.contains_312() {
        return Err(Error::Contains312(w));
    }
    let parts = p
        .word
        .iter()
        .scan(0, |m, &x| {
            *m = (*m).max(x);
            Some(*m)
        })
        .collect();
    FerrersBoard::new(parts)
}

/// Whether the Bruhat interval below the board's permutation is exactly the
/// set of complete placements on the board.
pub fn verify_interval_equals_placements(board: &FerrersBoard) -> Result<bool> {
    let top = board_to_permutation(board)?;
    let interval = lower_interval(&top, OrderKind::Bruhat)?;
    let placements: BTreeSet<Permutation> = enumerate_row_complete(board)
        .filter(|p| p.is_complete())
        .map(|p| Permutation { word: p.word })
        .collect();
    Ok(interval == placements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Reflexive-transitive closure of inversion-lowering transpositions.
    fn closure_leq(u: &Permutation, v: &Permutation) -> bool {
        lower_interval(v, OrderKind::Bruhat).unwrap().contains(u)
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!(perm("[4,6,2,1,7,3,5]").word(), &[4, 6, 2, 1, 7, 3, 5]);
        assert_eq!(perm("2341").to_string(), "2341");
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("3,1".parse::<Permutation>().is_err());
    }

    #[test]
    fn statistics() {
        assert_eq!(Permutation::identity(5).stat(StatKind::Excedance), 0);
        assert_eq!(Permutation::longest(6).stat(StatKind::Descent), 5);
        assert_eq!(perm("31524687").stat(StatKind::Ascent), 4);
        assert_eq!(perm("13254").stat(StatKind::Peak), 2);
        assert_eq!(perm("3124").stat(StatKind::Excedance), 1);
    }

    #[test]
    fn pattern_312() {
        let w = perm("4,6,2,1,7,3,5").contains_312().unwrap();
        let p = perm("4,6,2,1,7,3,5");
        let v = |i: usize| p.word()[i - 1];
        assert_eq!((v(w.0), v(w.1), v(w.2)), (4, 2, 3));
        assert!(perm("45362871").contains_312().is_none());
        assert!(Permutation::identity(6).contains_312().is_none());
    }

    #[test]
    fn catalan_counts() {
        let catalan = [1, 2, 5, 14, 42, 132, 429, 1430];
        for n in 1..=8 {
            let count = Permutation::all(n).filter(|p| p.contains_312().is_none()).count();
            assert_eq!(count, catalan[n - 1], "n = {n}");
        }
    }

    #[test]
    fn all_is_lexicographic() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&perm("2341"), &perm("2431")).unwrap());
        assert!(!bruhat_leq(&perm("2431"), &perm("2341")).unwrap());
        assert!(bruhat_leq(&Permutation::identity(4), &perm("3142")).unwrap());
        assert!(bruhat_leq(&Permutation::identity(3), &Permutation::identity(4)).is_err());
    }

    #[test]
    fn tableau_criterion_matches_closure() {
        for n in 1..=5 {
            let all: Vec<_> = Permutation::all(n).collect();
            for v in &all {
                let below = lower_interval(v, OrderKind::Bruhat).unwrap();
                for u in &all {
                    assert_eq!(bruhat_leq(u, v).unwrap(), below.contains(u), "{u} vs {v}");
                }
            }
        }
        assert!(closure_leq(&perm("2341"), &perm("2431")));
    }

    #[test]
    fn intervals() {
        assert_eq!(lower_interval(&Permutation::identity(4), OrderKind::Bruhat).unwrap().len(), 1);
        assert_eq!(lower_interval(&Permutation::longest(5), OrderKind::Bruhat).unwrap().len(), 120);
        assert_eq!(lower_interval(&Permutation::longest(5), OrderKind::Weak).unwrap().len(), 120);
        assert_eq!(lower_interval(&perm("2341"), OrderKind::Bruhat).unwrap().len(), 8);
        assert!(matches!(
            lower_interval_with_limit(&Permutation::longest(5), OrderKind::Bruhat, 100),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn weak_interval_is_inversion_set_containment() {
        // Right weak order: σ <= π iff the value-inversions of σ are among those of π.
        let inv = |p: &Permutation| -> BTreeSet<(usize, usize)> {
            let w = p.word();
            let mut s = BTreeSet::new();
            for i in 0..w.len() {
                for j in i + 1..w.len() {
                    if w[i] > w[j] {
                        s.insert((w[j], w[i]));
                    }
                }
            }
            s
        };
        for pi in Permutation::all(5) {
            let below = lower_interval(&pi, OrderKind::Weak).unwrap();
            let ip = inv(&pi);
            for s in Permutation::all(5) {
                assert_eq!(below.contains(&s), inv(&s).is_subset(&ip));
            }
        }
    }

    #[test]
    fn interval_polynomials() {
        let descents = interval_stat_polynomial(&perm("4,6,2,1,7,3,5"), OrderKind::Bruhat, StatKind::Descent);
        assert_eq!(descents.unwrap(), IntPolynomial::from_i64s(&[1, 43, 196, 168, 23, 1]));
        let excedances =
            interval_stat_polynomial(&perm("4,1,5,6,8,2,3,7"), OrderKind::Bruhat, StatKind::Excedance);
        assert_eq!(excedances.unwrap(), IntPolynomial::from_i64s(&[1, 21, 140, 290, 127, 5]));
        let small = interval_stat_polynomial(&perm("21"), OrderKind::Weak, StatKind::Descent);
        assert_eq!(small.unwrap(), IntPolynomial::from_i64s(&[1, 1]));
    }

    #[test]
    fn board_bijection_examples() {
        let b: FerrersBoard = "45566888".parse().unwrap();
        assert_eq!(board_to_permutation(&b).unwrap(), perm("45362871"));
        assert_eq!(permutation_to_board(&perm("45362871")).unwrap(), b);
        let b: FerrersBoard = "2344".parse().unwrap();
        assert_eq!(board_to_permutation(&b).unwrap(), perm("2341"));
        assert_eq!(permutation_to_board(&perm("2341")).unwrap(), b);
        assert_eq!(
            board_to_permutation(&FerrersBoard::staircase(6)).unwrap(),
            Permutation::identity(6)
        );
        assert!(board_to_permutation(&"2345".parse().unwrap()).is_err());
        assert!(matches!(
            permutation_to_board(&perm("312")),
            Err(Error::Contains312((1, 2, 3)))
        ));
    }

    #[test]
    fn round_trips() {
        for n in 1..=7 {
            for p in Permutation::all(n).filter(|p| p.contains_312().is_none()) {
                let b = permutation_to_board(&p).unwrap();
                assert_eq!(board_to_permutation(&b).unwrap(), p);
            }
        }
        for b in FerrersBoard::all_within(6, 6) {
            if b.parts()[b.rows() - 1] == b.rows() {
                let p = board_to_permutation(&b).unwrap();
                assert_eq!(permutation_to_board(&p).unwrap(), b);
            }
        }
    }

    #[test]
    fn excedance_examples() {
        assert!(excedance_check(&perm("4,1,5,6,8,2,3,7"), DEFAULT_INTERVAL_LIMIT).unwrap().is_some());
        for p in Permutation::all(5).filter(|p| p.contains_312().is_none()) {
            assert!(excedance_check(&p, DEFAULT_INTERVAL_LIMIT).unwrap().is_none(), "{p}");
        }
    }

    #[test]
    fn intervals_are_placements() {
        assert!(verify_interval_equals_placements(&"2344".parse().unwrap()).unwrap());
        assert!(verify_interval_equals_placements(&FerrersBoard::staircase(4)).unwrap());
    }

    proptest! {
        #[test]
        fn inverse_is_involution(p in Just((1..=7usize).collect::<Vec<_>>()).prop_shuffle()) {
            let p = Permutation::new(p).unwrap();
            prop_assert_eq!(p.inverse().inverse(), p.clone());
            prop_assert_eq!(p.inverse().inversions(), p.inversions());
        }

        #[test]
        fn asc_plus_des(p in Just((1..=9usize).collect::<Vec<_>>()).prop_shuffle()) {
            let p = Permutation::new(p).unwrap();
            prop_assert_eq!(p.stat(StatKind::Ascent) + p.stat(StatKind::Descent), 8);
        }
    }
}
