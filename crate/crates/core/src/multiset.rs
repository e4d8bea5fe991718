//! Multiset rook-Eulerian polynomials: words with prescribed content on
//! (skew) Ferrers boards.
//!
//! Row `i` of `λ/μ` admits letters `μ_i < w_i <= λ_i`. Rows are listed top to
//! bottom with `λ` weakly increasing; a shorter `μ` is padded with leading
//! zeros so that it sits against the bottom rows.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boards::{write_list, Shape};
use crate::exactpoly::{is_interlacing_sequence, is_real_rooted};
use crate::{Error, IntPolynomial, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewBoard {
    outer: Shape,
    inner: Vec<usize>,
}

impl SkewBoard {
    pub fn new(outer: Shape, inner: Vec<usize>) -> Result<Self> {
        let n = outer.rows();
        if inner.len() > n {
            return Err(Error::InvalidBoard(format!(
                "inner shape has {} rows, outer only {n}",
                inner.len()
            )));
        }
        let mut padded = vec![0; n - inner.len()];
        padded.extend(inner);
        if padded.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidBoard(format!(
                "inner shape {padded:?} is not weakly increasing"
            )));
        }
        if let Some(i) = (0..n).find(|&i| padded[i] >= outer.parts()[i]) {
            return Err(Error::InvalidBoard(format!(
                "row {} has inner part {} not below outer part {}",
                i + 1,
                padded[i],
                outer.parts()[i]
            )));
        }
        Ok(Self {
            outer,
            inner: padded,
        })
    }

    pub fn straight(outer: Shape) -> Self {
        let n = outer.rows();
        Self {
            outer,
            inner: vec![0; n],
        }
    }

    /// Builds the board from weakly decreasing row lists (longest row first),
    /// with `inner` padded by trailing zeros, by listing the rows in reverse.
    pub fn from_decreasing(outer: &[usize], inner: &[usize]) -> Result<Self> {
        if inner.len() > outer.len() {
            return Err(Error::InvalidBoard("inner shape has more rows than outer".into()));
        }
        let mut mu = inner.to_vec();
        mu.resize(outer.len(), 0);
        mu.reverse();
        let lambda: Vec<usize> = outer.iter().rev().copied().collect();
        Self::new(Shape::new(lambda)?, mu)
    }

    pub fn outer(&self) -> &Shape {
        &self.outer
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.outer.rows()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&m| m == 0)
    }
}

impl fmt::Display for SkewBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.outer)?;
        if !self.is_straight() {
            f.write_str("/")?;
            write_list(f, &self.inner)?;
        }
        Ok(())
    }
}

/// Letter multiplicities `α_1, ..., α_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Content(Vec<usize>);

impl Content {
    pub fn new(alpha: Vec<usize>) -> Self {
        Self(alpha)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn alphabet(&self) -> usize {
        self.0.len()
    }

    /// `α + e_i` (1-based), extending the alphabet if needed.
    pub fn plus_letter(&self, i: usize) -> Self {
        let mut a = self.0.clone();
        if a.len() < i {
            a.resize(i, 0);
        }
        a[i - 1] += 1;
        Self(a)
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

fn check(board: &SkewBoard, content: &Content) -> Result<()> {
    if content.total() != board.rows() {
        return Err(Error::InvalidContent(format!(
            "content {content} has {} letters for {} rows",
            content.total(),
            board.rows()
        )));
    }
    Ok(())
}

/// Depth-first walk over valid words; `f` receives each complete word.
fn for_each_word(board: &SkewBoard, content: &Content, f: &mut dyn FnMut(&[usize])) {
    fn rec(
        board: &SkewBoard,
        remaining: &mut [usize],
        word: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        let row = word.len();
        if row == board.rows() {
            f(word);
            return;
        }
        let lo = board.inner[row] + 1;
        let hi = board.outer.parts()[row].min(remaining.len());
        for letter in lo..=hi {
            if remaining[letter - 1] > 0 {
                remaining[letter - 1] -= 1;
                word.push(letter);
                rec(board, remaining, word, f);
                word.pop();
                remaining[letter - 1] += 1;
            }
        }
    }
    let mut remaining = content.0.clone();
    rec(board, &mut remaining, &mut Vec::with_capacity(board.rows()), f);
}

/// Every word in `𝒲(λ/μ, α)`, lexicographic order.
pub fn enumerate_words(board: &SkewBoard, content: &Content) -> Result<Vec<Vec<usize>>> {
    check(board, content)?;
    let mut out = Vec::new();
    for_each_word(board, content, &mut |w| out.push(w.to_vec()));
    Ok(out)
}

fn ascents(w: &[usize]) -> usize {
    w.windows(2).filter(|p| p[0] < p[1]).count()
}

/// `R(λ/μ, α; t)`.
pub fn multiset_rook_eulerian(board: &SkewBoard, content: &Content) -> Result<IntPolynomial> {
    check(board, content)?;
    let mut counts = vec![0u64; board.rows()];
    for_each_word(board, content, &mut |w| counts[ascents(w)] += 1);
    Ok(IntPolynomial::from_counts(&counts))
}

/// `R_j(λ/μ, α; t)` for `j = 1..=λ_1`; `None` where no word starts with `j`.
pub fn multiset_refined(board: &SkewBoard, content: &Content) -> Result<Vec<Option<IntPolynomial>>> {
    check(board, content)?;
    let lambda1 = board.outer.first();
    let mut counts = vec![vec![0u64; board.rows()]; lambda1];
    let mut present = vec![false; lambda1];
    for_each_word(board, content, &mut |w| {
        present[w[0] - 1] = true;
        counts[w[0] - 1][ascents(w)] += 1;
    });
    Ok(counts
        .iter()
        .zip(present)
        .map(|(c, p)| p.then(|| IntPolynomial::from_counts(c)))
        .collect())
}

/// `R_i(λ⁺, α + e_i) = Σ_{j<=i} R_j(λ, α) + t Σ_{j>i} R_j(λ, α)` for
/// `λ⁺ = (m, λ_1, ..., λ_n)` and `i <= m <= λ_1`.
pub fn multiset_recursion_step(
    lower: &[Option<IntPolynomial>],
    m: usize,
    i: usize,
) -> Result<IntPolynomial> {
    let lambda1 = lower.len();
    if i == 0 || i > m || m > lambda1 {
        return Err(Error::OutOfRange(format!(
            "need 1 <= i <= m <= λ_1, got i = {i}, m = {m}, λ_1 = {lambda1}"
        )));
    }
    let sum = |r: &[Option<IntPolynomial>]| -> IntPolynomial { r.iter().flatten().sum() };
    Ok(&sum(&lower[..i]) + &sum(&lower[i..]).shift(1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjecture2Counterexample {
    pub shape: Shape,
    pub content: Content,
    pub total: IntPolynomial,
    pub real_rooted: bool,
    pub interlacing: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Conjecture2Report {
    pub instances: u64,
    pub counterexamples: Vec<Conjecture2Counterexample>,
}

fn weak_compositions(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() + 1 == parts {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for x in 0..=total {
        prefix.push(x);
        weak_compositions(total - x, parts, prefix, out);
        prefix.pop();
    }
}

/// Real-rootedness of `R` and interlacing of `(R_{λ_1}, ..., R_1)` for one
/// straight board; `Ok(None)` when it holds or no word fits.
pub fn conjecture2_check(shape: &Shape, content: &Content) -> Result<Option<Conjecture2Counterexample>> {
    let board = SkewBoard::straight(shape.clone());
    let refined = multiset_refined(&board, content)?;
    let present: Vec<IntPolynomial> = refined.into_iter().rev().flatten().collect();
    if present.is_empty() {
        return Ok(None);
    }
    let total: IntPolynomial = present.iter().sum();
    let real_rooted = is_real_rooted(&total)?.is_real_rooted;
    let interlacing = is_interlacing_sequence(&present)?;
    Ok((!real_rooted || !interlacing).then(|| Conjecture2Counterexample {
        shape: shape.clone(),
        content: content.clone(),
        total,
        real_rooted,
        interlacing,
    }))
}

/// Instances for the interlacing probe: every straight shape with at most
/// `side` rows and parts at most `side` with every content on letters
/// `1..=λ_n`, then `trials` random instances with up to `side + 2` rows.
/// Skew boards are excluded.
pub fn conjecture2_instances(side: usize, seed: u64, trials: usize) -> Vec<(Shape, Content)> {
    let mut out = Vec::new();
    for shape in straight_shapes(side, side) {
        let mut comps = Vec::new();
        weak_compositions(shape.rows(), shape.last(), &mut Vec::new(), &mut comps);
        for alpha in comps {
            out.push((shape.clone(), Content::new(alpha)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let big = side + 2;
    for _ in 0..trials {
        let n = rng.gen_range(1..=big);
        let mut parts: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=big)).collect();
        parts.sort_unstable();
        let shape = Shape::new(parts).expect("sorted positive parts");
        let mut alpha = vec![0; shape.last()];
        for _ in 0..n {
            let letter = rng.gen_range(0..alpha.len());
            alpha[letter] += 1;
        }
        out.push((shape, Content::new(alpha)));
    }
    out
}

pub fn conjecture2_probe(side: usize, seed: u64, trials: usize) -> Result<Conjecture2Report> {
    let mut report = Conjecture2Report::default();
    for (shape, content) in conjecture2_instances(side, seed, trials) {
        report.instances += 1;
        if let Some(c) = conjecture2_check(&shape, &content)? {
            report.counterexamples.push(c);
        }
    }
    Ok(report)
}

/// Weakly increasing shapes with at most `rows` rows and parts at most `max_part`.
pub fn straight_shapes(rows: usize, max_part: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    fn rec(parts: &mut Vec<usize>, rows: usize, max_part: usize, out: &mut Vec<Shape>) {
        if !parts.is_empty() {
            out.push(Shape::new(parts.clone()).expect("generated valid"));
        }
        if parts.len() == rows {
            return;
        }
        for p in parts.last().copied().unwrap_or(1)..=max_part {
            parts.push(p);
            rec(parts, rows, max_part, out);
            parts.pop();
        }
    }
    rec(&mut Vec::new(), rows, max_part, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boards::{rook_eulerian_brute, FerrersBoard};

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn content(a: &[usize]) -> Content {
        Content::new(a.to_vec())
    }

    #[test]
    fn word_counts() {
        let b = SkewBoard::straight(shape("22233"));
        assert_eq!(enumerate_words(&b, &content(&[2, 2, 1])).unwrap().len(), 12);
        let free = SkewBoard::straight(shape("55555"));
        assert_eq!(enumerate_words(&free, &content(&[2, 2, 1])).unwrap().len(), 30);
        let b = SkewBoard::straight(shape("11"));
        assert_eq!(enumerate_words(&b, &content(&[2])).unwrap(), vec![vec![1, 1]]);
        assert!(enumerate_words(&b, &content(&[1])).is_err());
    }

    #[test]
    fn words_are_lexicographic_and_valid() {
        let b = SkewBoard::new(shape("123333"), vec![1, 1]).unwrap();
        let ws = enumerate_words(&b, &content(&[2, 2, 2])).unwrap();
        assert!(ws.windows(2).all(|w| w[0] < w[1]));
        for w in &ws {
            for (i, &x) in w.iter().enumerate() {
                assert!(b.inner()[i] < x && x <= b.outer().parts()[i]);
            }
        }
    }

    #[test]
    fn polynomial_examples() {
        let b = SkewBoard::straight(shape("22233"));
        assert_eq!(multiset_rook_eulerian(&b, &content(&[2, 2, 1])).unwrap(), p(&[0, 3, 8, 1]));
        let b = SkewBoard::straight(shape("11"));
        assert_eq!(multiset_rook_eulerian(&b, &content(&[2])).unwrap(), p(&[1]));
    }

    #[test]
    fn skew_counterexample() {
        let b = SkewBoard::from_decreasing(&[3, 3, 3, 3, 2, 1], &[1, 1]).unwrap();
        assert_eq!(b.outer().parts(), &[1, 2, 3, 3, 3, 3]);
        assert_eq!(b.inner(), &[0, 0, 0, 0, 1, 1]);
        assert_eq!(b, SkewBoard::new(shape("123333"), vec![1, 1]).unwrap());
        let r = multiset_rook_eulerian(&b, &content(&[2, 2, 2])).unwrap();
        assert_eq!(r, p(&[0, 1, 6, 4, 1]));
        assert!(!is_real_rooted(&r).unwrap().is_real_rooted);
        assert_eq!(enumerate_words(&b, &content(&[2, 2, 2])).unwrap().len(), 12);
    }

    #[test]
    fn board_validation() {
        assert!(SkewBoard::new(shape("22"), vec![2]).is_err());
        assert!(SkewBoard::new(shape("33"), vec![2, 1]).is_err());
        assert!(SkewBoard::new(shape("3"), vec![1, 1]).is_err());
    }

    #[test]
    fn refined_examples() {
        let b = SkewBoard::straight(shape("22233"));
        let r = multiset_refined(&b, &content(&[2, 2, 1])).unwrap();
        assert_eq!(r.len(), 2);
        let total: IntPolynomial = r.iter().flatten().sum();
        assert_eq!(total, p(&[0, 3, 8, 1]));
        let b = SkewBoard::straight(shape("11"));
        assert_eq!(multiset_refined(&b, &content(&[2])).unwrap(), vec![Some(p(&[1]))]);
        let b = SkewBoard::straight(shape("33"));
        let r = multiset_refined(&b, &content(&[0, 1, 1])).unwrap();
        assert_eq!(r[0], None);
    }

    #[test]
    fn recursion_examples() {
        let lower = multiset_refined(&SkewBoard::straight(shape("22233")), &content(&[2, 2, 1])).unwrap();
        let upper = multiset_refined(&SkewBoard::straight(shape("222233")), &content(&[3, 2, 1])).unwrap();
        let got = multiset_recursion_step(&lower, 2, 1).unwrap();
        assert_eq!(Some(got), upper[0]);

        let lower = multiset_refined(&SkewBoard::straight(shape("1")), &content(&[1])).unwrap();
        assert_eq!(multiset_recursion_step(&lower, 1, 1).unwrap(), p(&[1]));
        assert!(multiset_recursion_step(&lower, 2, 1).is_err());
        assert!(multiset_recursion_step(&lower, 1, 2).is_err());
    }

    #[test]
    fn recursion_matches_brute_force() {
        for sh in straight_shapes(4, 4) {
            let l1 = sh.first();
            let mut comps = Vec::new();
            weak_compositions(sh.rows(), sh.last(), &mut Vec::new(), &mut comps);
            for alpha in comps {
                let alpha = Content::new(alpha);
                let lower = multiset_refined(&SkewBoard::straight(sh.clone()), &alpha).unwrap();
                for m in 1..=l1 {
                    let mut up = vec![m];
                    up.extend_from_slice(sh.parts());
                    let up = Shape::new(up).unwrap();
                    for i in 1..=m {
                        let got = multiset_recursion_step(&lower, m, i).unwrap();
                        let upper = multiset_refined(&SkewBoard::straight(up.clone()), &alpha.plus_letter(i)).unwrap();
                        let want = upper[i - 1].clone().unwrap_or_else(IntPolynomial::zero);
                        assert_eq!(got, want, "{up} {alpha} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn distinct_letters_recover_rook_polynomial() {
        for b in FerrersBoard::all_within(5, 5) {
            let n = b.rows();
            if b.shape().last() > n {
                continue;
            }
            let r = multiset_rook_eulerian(&SkewBoard::straight(b.shape().clone()), &Content::new(vec![1; n])).unwrap();
            assert_eq!(r, rook_eulerian_brute(&b), "{b}");
        }
    }

    #[test]
    fn multinomial_count_on_free_board() {
        let alpha = content(&[2, 1, 3]);
        let free = SkewBoard::straight(Shape::new(vec![3; 6]).unwrap());
        assert_eq!(enumerate_words(&free, &alpha).unwrap().len(), 60);
    }

    #[test]
    fn small_probe_finds_nothing() {
        let report = conjecture2_probe(3, 0, 20).unwrap();
        assert!(report.instances > 0);
        assert!(report.counterexamples.is_empty(), "{:?}", report.counterexamples);
    }

    #[test]
    fn rectangles_are_real_rooted() {
        for (rows, cols) in [(4, 2), (5, 3), (6, 3), (4, 4)] {
            let sh = Shape::new(vec![cols; rows]).unwrap();
            let mut comps = Vec::new();
            weak_compositions(rows, cols, &mut Vec::new(), &mut comps);
            for alpha in comps {
                let r = multiset_rook_eulerian(&SkewBoard::straight(sh.clone()), &Content::new(alpha)).unwrap();
                assert!(is_real_rooted(&r).unwrap().is_real_rooted);
            }
        }
    }
}
