//! Ferrers boards and rook-Eulerian polynomials.
//!
//! Boards use the increasing-parts convention: row `i` (counted from the
//! top) has `parts[i-1]` cells and `parts` is weakly increasing.

mod multivariate;
mod placements;
mod recursion;

use std::fmt;
use std::str::FromStr;

pub use multivariate::{
    ascent_set_distribution, multivariate_ray_restriction, same_phase_stability_probe,
    RayDirection, SamePhaseReport,
};
pub use placements::{
    ascent_count, ascent_set, enumerate_row_complete, rook_descent_polynomial, rook_eulerian_brute,
    rook_eulerian_refined, RookPlacement, RowCompletePlacements,
};
pub use recursion::{apply_transfer_matrix, recursion_step, rook_eulerian_recursive, transfer_matrix};

use crate::{Error, Result};

/// Parses `3,4,4,6,7` or, when every part is a single digit, `34467`.
pub fn parse_int_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') || s.contains(' ') {
        s.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
            .collect()
    } else if s.chars().all(|c| c.is_ascii_digit()) {
        Ok(s.chars().map(|c| c as usize - '0' as usize).collect())
    } else {
        Err(format!("cannot parse {s:?} as a list of integers"))
    }
}

/// A weakly increasing sequence of positive row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidBoard("a board needs at least one row".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidBoard(format!("{parts:?} has an empty row")));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidBoard(format!(
                "{parts:?} is not weakly increasing"
            )));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    if xs.iter().all(|&x| x < 10) {
        for x in xs {
            write!(f, "{x}")?;
        }
        Ok(())
    } else {
        let s: Vec<String> = xs.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Shape::new(parse_int_list(s).map_err(Error::InvalidBoard)?)
    }
}

/// A Ferrers board admitting row-complete rook placements: `λ_i >= i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FerrersBoard {
    shape: Shape,
}

impl FerrersBoard {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        Self::from_shape(Shape::new(parts)?)
    }

    pub fn from_shape(shape: Shape) -> Result<Self> {
        if let Some(i) = shape.parts().iter().enumerate().position(|(i, &p)| p < i + 1) {
            return Err(Error::InvalidBoard(format!(
                "{shape}: row {} has {} cells, needs at least {}",
                i + 1,
                shape.parts()[i],
                i + 1
            )));
        }
        Ok(Self { shape })
    }

    /// The `n x n` square board, whose rook-Eulerian polynomial is `A_n(t)`.
    pub fn square(n: usize) -> Self {
        Self::new(vec![n; n]).expect("square boards are valid")
    }

    /// The staircase `(1, 2, ..., n)`, which admits only the identity placement.
    pub fn staircase(n: usize) -> Self {
        Self::new((1..=n).collect()).expect("staircases are valid")
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn parts(&self) -> &[usize] {
        self.shape.parts()
    }

    pub fn rows(&self) -> usize {
        self.shape.rows()
    }

    pub fn first_part(&self) -> usize {
        self.shape.first()
    }

    /// `∏ (λ_i - i + 1)`, the number of row-complete placements.
    pub fn placement_count(&self) -> u128 {
        self.parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| (p - i) as u128)
            .product()
    }

    /// Every valid board with at most `max_rows` rows and parts at most `max_part`.
    pub fn all_within(max_rows: usize, max_part: usize) -> Vec<FerrersBoard> {
        let mut out = Vec::new();
        let mut parts = Vec::new();
        fn rec(parts: &mut Vec<usize>, max_rows: usize, max_part: usize, out: &mut Vec<FerrersBoard>) {
            if !parts.is_empty() {
                out.push(FerrersBoard::new(parts.clone()).expect("generated valid"));
            }
            if parts.len() == max_rows {
                return;
            }
            let lo = parts.last().copied().unwrap_or(1).max(parts.len() + 1);
            for p in lo..=max_part {
                parts.push(p);
                rec(parts, max_rows, max_part, out);
                parts.pop();
            }
        }
        rec(&mut parts, max_rows, max_part, &mut out);
        out
    }
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.shape.fmt(f)
    }
}

impl FromStr for FerrersBoard {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::from_shape(s.parse()?)
    }
}
