use super::FerrersBoard;
use crate::IntPolynomial;

/// A row-complete rook placement, as the word of rook columns read top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RookPlacement {
    pub word: Vec<usize>,
}

impl RookPlacement {
    /// Complete placements use exactly the columns `1..=n`.
    pub fn is_complete(&self) -> bool {
        let n = self.word.len();
        self.word.iter().all(|&c| c <= n)
    }

    pub fn ascents(&self) -> usize {
        ascent_count(&self.word)
    }
}

/// Positions `i` (1-based) with `w_i < w_{i+1}`.
pub fn ascent_set<T: Ord>(word: &[T]) -> Vec<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] < w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn ascent_count<T: Ord>(word: &[T]) -> usize {
    word.windows(2).filter(|w| w[0] < w[1]).count()
}

/// Lexicographic stream of row-complete placements.
pub struct RowCompletePlacements<'a> {
    parts: &'a [usize],
    word: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl RowCompletePlacements<'_> {
    /// Extends the current prefix depth-first, beginning with column `start`
    /// at the current depth. Returns false once the search space is exhausted.
    fn advance(&mut self, mut start: usize) -> bool {
        loop {
            let depth = self.word.len();
            if depth == self.parts.len() {
                return true;
            }
            let limit = self.parts[depth];
            match (start..=limit).find(|&c| !self.used[c]) {
                Some(c) => {
                    self.used[c] = true;
                    self.word.push(c);
                    start = 1;
                }
                None => match self.word.pop() {
                    Some(prev) => {
                        self.used[prev] = false;
                        start = prev + 1;
                    }
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for RowCompletePlacements<'_> {
    type Item = RookPlacement;

    fn next(&mut self) -> Option<RookPlacement> {
        if self.done {
            return None;
        }
        let found = if self.started {
            let last = self.word.pop().expect("a full word was yielded");
            self.used[last] = false;
            self.advance(last + 1)
        } else {
            self.started = true;
            self.advance(1)
        };
        if found {
            Some(RookPlacement {
                word: self.word.clone(),
            })
        } else {
            self.done = true;
            None
        }
    }
}

/// Every row-complete placement on `board`, rows top to bottom with columns ascending.
pub fn enumerate_row_complete(board: &FerrersBoard) -> RowCompletePlacements<'_> {
    let parts = board.parts();
    RowCompletePlacements {
        parts,
        word: Vec::with_capacity(parts.len()),
        used: vec![false; board.shape().last() + 2],
        started: false,
        done: false,
    }
}

/// `Q^λ(t)` by enumeration.
pub fn rook_eulerian_brute(board: &FerrersBoard) -> IntPolynomial {
    let mut counts = vec![0u64; board.rows()];
    for p in enumerate_row_complete(board) {
        counts[p.ascents()] += 1;
    }
    IntPolynomial::from_counts(&counts)
}

/// Descent-generating polynomial over the same placements; equals the
/// ascent polynomial of the board read bottom to top.
pub fn rook_descent_polynomial(board: &FerrersBoard) -> IntPolynomial {
    let mut counts = vec![0u64; board.rows()];
    for p in enumerate_row_complete(board) {
        counts[p.word.windows(2).filter(|w| w[0] > w[1]).count()] += 1;
    }
    IntPolynomial::from_counts(&counts)
}

/// `Q^λ_i(t)` for `i = 1..=λ_1`, by enumeration; entry `i - 1` holds `Q^λ_i`.
pub fn rook_eulerian_refined(board: &FerrersBoard) -> Vec<IntPolynomial> {
    let mut counts = vec![vec![0u64; board.rows()]; board.first_part()];
    for p in enumerate_row_complete(board) {
        counts[p.word[0] - 1][p.ascents()] += 1;
    }
    counts.iter().map(|c| IntPolynomial::from_counts(c)).collect()
}
