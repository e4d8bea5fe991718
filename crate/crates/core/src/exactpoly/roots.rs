use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPolynomial;
use super::sturm::{squarefree_decomposition, squarefree_part, Bound, SturmChain};
use crate::{Error, Result};

/// Closed rational interval `[lo, hi]`.
///
/// Isolating intervals produced by this module are either a single exact
/// rational point (`lo == hi`) or have their root strictly inside `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::OutOfRange(format!("interval with lo {lo} > hi {hi}")));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "({}, {})", self.lo, self.hi)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub interval: RationalInterval,
    pub multiplicity: usize,
}

/// Outcome of the real-rootedness decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootednessReport {
    pub degree: usize,
    pub is_real_rooted: bool,
    /// Real roots counted with multiplicity.
    pub real_root_count: usize,
    /// Real roots in descending order.
    pub roots: Vec<IsolatedRoot>,
    /// For failures: a squarefree factor with fewer real roots than its degree.
    pub witness: Option<IntPolynomial>,
}

/// Squarefree polynomial with its Sturm chain, used for repeated counting.
pub(crate) struct Isolator {
    poly: IntPolynomial,
    chain: SturmChain,
}

impl Isolator {
    pub(crate) fn new(squarefree: IntPolynomial) -> Self {
        let chain = SturmChain::new(&squarefree).expect("nonzero");
        Self {
            poly: squarefree,
            chain,
        }
    }

    /// Roots inside an isolating interval: the point itself when degenerate,
    /// otherwise the open interval `(lo, hi)`.
    pub(crate) fn count_in(&self, iv: &RationalInterval) -> usize {
        if iv.is_point() {
            return usize::from(self.poly.sign_at(&iv.lo) == Ordering::Equal);
        }
        self.count_open(&iv.lo, &iv.hi)
    }

    /// Roots in the open interval `(lo, hi)`.
    fn count_open(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let c = self
            .chain
            .count_half_open(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
        c - usize::from(self.poly.sign_at(hi) == Ordering::Equal)
    }

    /// Isolating intervals for every real root, in descending order.
    pub(crate) fn isolate(&self) -> Vec<RationalInterval> {
        if self.poly.is_constant() || self.chain.count_all() == 0 {
            return Vec::new();
        }
        let bound = BigRational::from_integer(cauchy_bound(&self.poly));
        let mut out = Vec::new();
        // (lo, hi] with a known root count; processed high-to-low.
        let mut stack = vec![(-bound.clone(), bound.clone())];
        while let Some((lo, hi)) = stack.pop() {
            let n = self
                .chain
                .count_half_open(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
            if n == 0 {
                continue;
            }
            let hi_is_root = self.poly.sign_at(&hi) == Ordering::Equal;
            if n == 1 {
                if hi_is_root {
                    out.push(RationalInterval::point(hi));
                } else {
                    out.push(RationalInterval { lo, hi });
                }
                continue;
            }
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            // Push the lower half first so the upper half is processed next.
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        out
    }

    /// Shrinks an isolating interval until its width is at most `width`.
    pub(crate) fn refine(&self, iv: &RationalInterval, width: &BigRational) -> RationalInterval {
        let mut iv = iv.clone();
        while !iv.is_point() && iv.width() > *width {
            let mid = iv.midpoint();
            if self.poly.sign_at(&mid) == Ordering::Equal {
                return RationalInterval::point(mid);
            }
            if self.count_open(&mid, &iv.hi) == 1 {
                iv.lo = mid;
            } else {
                iv.hi = mid;
            }
        }
        iv
    }
}

/// `1 + max |a_i / a_n|`, rounded up: every root lies strictly inside `(-B, B)`.
fn cauchy_bound(p: &IntPolynomial) -> BigInt {
    let lc = p.leading_coefficient().unwrap().abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len() - 1)
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let (q, r) = (&max / &lc, &max % &lc);
    q + BigInt::one() + if r.is_zero() { BigInt::zero() } else { BigInt::one() }
}

/// Joint root structure of several polynomials: the distinct real roots of
/// their product, isolated once, with each polynomial's multiplicity at
/// every root.
pub(crate) struct CommonRoots {
    pub(crate) intervals: Vec<RationalInterval>,
    /// `multiplicities[k][r]` is the multiplicity of root `r` in poly `k`.
    pub(crate) multiplicities: Vec<Vec<usize>>,
    pub(crate) isolator: Isolator,
    /// Per poly: the first squarefree factor missing real roots, if any.
    pub(crate) deficient: Vec<Option<IntPolynomial>>,
}

impl CommonRoots {
    pub(crate) fn new(polys: &[&IntPolynomial]) -> Result<Self> {
        if polys.iter().any(|p| p.is_zero()) {
            return Err(Error::ZeroPolynomial);
        }
        let product = polys
            .iter()
            .fold(IntPolynomial::one(), |acc, p| &acc * &p.primitive_part());
        let isolator = Isolator::new(squarefree_part(&product)?);
        let intervals = isolator.isolate();

        let mut multiplicities = Vec::with_capacity(polys.len());
        let mut deficient = Vec::with_capacity(polys.len());
        for p in polys {
            let mut mult = vec![0usize; intervals.len()];
            let mut witness = None;
            for (factor, k) in squarefree_decomposition(p)? {
                let local = Isolator::new(factor.clone());
                let mut found = 0;
                for (r, iv) in intervals.iter().enumerate() {
                    if local.count_in(iv) > 0 {
                        mult[r] += k;
                        found += 1;
                    }
                }
                if witness.is_none() && found < factor.degree().unwrap() {
                    witness = Some(factor);
                }
            }
            multiplicities.push(mult);
            deficient.push(witness);
        }
        Ok(Self {
            intervals,
            multiplicities,
            isolator,
            deficient,
        })
    }

    /// Whether any root of the product is strictly positive.
    pub(crate) fn has_positive_root(&self) -> bool {
        self.isolator
            .chain
            .count_half_open(&Bound::Finite(BigRational::zero()), &Bound::PosInfinity)
            > 0
    }
}

/// Decides real-rootedness exactly and isolates every real root.
pub fn is_real_rooted(p: &IntPolynomial) -> Result<RootednessReport> {
    let common = CommonRoots::new(&[p])?;
    let degree = p.degree().unwrap();
    let mult = &common.multiplicities[0];
    let roots: Vec<IsolatedRoot> = common
        .intervals
        .iter()
        .zip(mult)
        .filter(|(_, &m)| m > 0)
        .map(|(iv, &m)| IsolatedRoot {
            interval: iv.clone(),
            multiplicity: m,
        })
        .collect();
    let real_root_count = roots.iter().map(|r| r.multiplicity).sum();
    Ok(RootednessReport {
        degree,
        is_real_rooted: real_root_count == degree,
        real_root_count,
        roots,
        witness: common.deficient[0].clone(),
    })
}

/// Isolating intervals with multiplicities, descending; errors unless `p` is real-rooted.
pub fn isolate_roots(p: &IntPolynomial) -> Result<Vec<IsolatedRoot>> {
    let report = is_real_rooted(p)?;
    if !report.is_real_rooted {
        return Err(Error::NotRealRooted(Box::new(report)));
    }
    Ok(report.roots)
}

/// Approximates every real root of `p` to within `width`, descending.
/// Each entry is an interval of width at most `width` (or an exact point).
pub fn refine_real_roots(p: &IntPolynomial, width: &BigRational) -> Result<Vec<IsolatedRoot>> {
    let report = is_real_rooted(p)?;
    let isolator = Isolator::new(squarefree_part(p)?);
    Ok(report
        .roots
        .into_iter()
        .map(|r| IsolatedRoot {
            interval: isolator.refine(&r.interval, width),
            multiplicity: r.multiplicity,
        })
        .collect())
}
