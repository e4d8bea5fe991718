use num_traits::Signed;

use super::poly::IntPolynomial;
use super::roots::CommonRoots;
use crate::{Error, Result};

fn check_input(p: &IntPolynomial) -> Result<()> {
    match p.leading_coefficient() {
        None => Err(Error::ZeroPolynomial),
        Some(lc) if !lc.is_positive() => Err(Error::NonPositiveLeadingCoefficient),
        Some(_) => Ok(()),
    }
}

/// Roots of one polynomial as indices into the descending common root list,
/// each repeated by multiplicity. Smaller index means larger root.
fn expanded(mult: &[usize]) -> Vec<usize> {
    mult.iter()
        .enumerate()
        .flat_map(|(r, &m)| std::iter::repeat_n(r, m))
        .collect()
}

/// `f ⪯ g` on expanded root lists: `b1 >= a1 >= b2 >= a2 >= ...`.
fn chain_holds(a: &[usize], b: &[usize]) -> bool {
    if b.len() != a.len() && b.len() != a.len() + 1 {
        return false;
    }
    for k in 0..a.len() {
        if b[k] > a[k] {
            return false;
        }
        if let Some(&next) = b.get(k + 1) {
            if a[k] > next {
                return false;
            }
        }
    }
    true
}

struct Family {
    roots: CommonRoots,
}

impl Family {
    fn new(polys: &[&IntPolynomial]) -> Result<Self> {
        for p in polys {
            check_input(p)?;
        }
        Ok(Self {
            roots: CommonRoots::new(polys)?,
        })
    }

    /// All members real-rooted with nonpositive roots.
    fn admissible(&self) -> bool {
        self.roots.deficient.iter().all(Option::is_none) && !self.roots.has_positive_root()
    }

    fn interlaces(&self, f: usize, g: usize) -> bool {
        let a = expanded(&self.roots.multiplicities[f]);
        let b = expanded(&self.roots.multiplicities[g]);
        chain_holds(&a, &b)
    }
}

/// Weak interlacing `f ⪯ g`: both real-rooted with nonpositive roots
/// `... <= a2 <= b2 <= a1 <= b1 <= 0`, where `a` are the roots of `f` and `b`
/// those of `g`. Shared roots are compared exactly through the common
/// isolation of `f * g`.
pub fn interlaces(f: &IntPolynomial, g: &IntPolynomial) -> Result<bool> {
    let family = Family::new(&[f, g])?;
    Ok(family.admissible() && family.interlaces(0, 1))
}

/// `fs[i] ⪯ fs[j]` for every `i < j`.
pub fn is_interlacing_sequence(fs: &[IntPolynomial]) -> Result<bool> {
    let refs: Vec<&IntPolynomial> = fs.iter().collect();
    if refs.is_empty() {
        return Ok(true);
    }
    let family = Family::new(&refs)?;
    if !family.admissible() {
        return Ok(false);
    }
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            if !family.interlaces(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
