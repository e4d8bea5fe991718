use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed};

use super::poly::{subresultant_h, IntPolynomial};
use super::RationalInterval;
use crate::{Error, Result};

/// An endpoint of a half-open counting interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

impl From<BigRational> for Bound {
    fn from(x: BigRational) -> Self {
        Bound::Finite(x)
    }
}

/// Sturm sequence of a nonzero polynomial.
///
/// Built from the subresultant pseudo-remainder sequence of `p` and `p'`.
/// Every subresultant remainder differs from the corresponding Sturm
/// remainder by a nonzero scalar whose sign is tracked step by step, so all
/// intermediates stay in `Z[t]` and no content is ever divided out.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<IntPolynomial>,
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_negative() {
        -1
    } else if x.is_positive() {
        1
    } else {
        0
    }
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dp = p.derivative();
        let mut polys = vec![p.clone()];
        if dp.is_zero() {
            return Ok(Self { polys });
        }
        polys.push(dp.clone());

        // (a, b) is the raw subresultant pair; (eps_a, eps_b) are the signs
        // relating each raw remainder to its Sturm counterpart.
        let (mut a, mut b) = (p.clone(), dp);
        let (mut eps_a, mut eps_b) = (1i8, 1i8);
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            if db == 0 {
                break;
            }
            let delta = da - db;
            let r = a.pseudo_remainder(&b);
            if r.is_zero() {
                break;
            }
            let beta = &g * Pow::pow(&h, delta);
            let next = r.div_scalar_exact(&beta);

            // prem = lc(b)^(delta+1) * rem, and next = prem / beta.
            let lc_sign = sign_of(b.leading_coefficient().unwrap());
            let lc_pow_sign = if (delta + 1) % 2 == 0 { 1 } else { lc_sign };
            let eps_next = -eps_a * lc_pow_sign * sign_of(&beta);
            polys.push(if eps_next > 0 { next.clone() } else { -&next });

            g = b.leading_coefficient().unwrap().clone();
            h = subresultant_h(&h, &g, delta);
            a = b;
            b = next;
            eps_a = eps_b;
            eps_b = eps_next;
        }
        Ok(Self { polys })
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }

    fn sign_at(p: &IntPolynomial, x: &Bound) -> Ordering {
        let lc = p.leading_coefficient().expect("chain entries are nonzero");
        let deg = p.degree().unwrap();
        let pos = if lc.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        match x {
            Bound::Finite(v) => p.sign_at(v),
            Bound::PosInfinity => pos,
            Bound::NegInfinity => {
                if deg.is_multiple_of(2) {
                    pos
                } else {
                    pos.reverse()
                }
            }
        }
    }

    /// Number of sign changes along the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Bound) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for p in &self.polys {
            let s = Self::sign_at(p, x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_half_open(&self, lo: &Bound, hi: &Bound) -> usize {
        let (vl, vh) = (self.variations(lo), self.variations(hi));
        vl.saturating_sub(vh)
    }

    pub fn count_all(&self) -> usize {
        self.count_half_open(&Bound::NegInfinity, &Bound::PosInfinity)
    }
}

/// Number of distinct real roots of `p` on the whole real line.
pub fn sturm_real_root_count(p: &IntPolynomial) -> Result<usize> {
    Ok(SturmChain::new(p)?.count_all())
}

/// Number of distinct real roots of `p` in the closed interval `[lo, hi]`.
pub fn sturm_real_root_count_in(p: &IntPolynomial, interval: &RationalInterval) -> Result<usize> {
    let chain = SturmChain::new(p)?;
    let lo = Bound::Finite(interval.lo.clone());
    let hi = Bound::Finite(interval.hi.clone());
    let at_lo = usize::from(p.sign_at(&interval.lo) == Ordering::Equal);
    Ok(chain.count_half_open(&lo, &hi) + at_lo)
}

/// `p / gcd(p, p')` as a primitive polynomial with positive leading coefficient.
pub fn squarefree_part(p: &IntPolynomial) -> Result<IntPolynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let pp = p.primitive_part();
    let g = pp.gcd(&pp.derivative());
    Ok(pp.div_exact(&g).expect("gcd divides its argument").primitive_part())
}

/// Squarefree decomposition `p = c * prod f_k^k`, returned as `(f_k, k)`
/// pairs with `deg f_k > 0`. The factors are primitive, pairwise coprime and
/// squarefree.
pub fn squarefree_decomposition(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // c_k = gcd(c_{k-1}, c_{k-1}'), d_k = c_{k-1} / c_k collects every factor of
    // multiplicity >= k, so d_k / d_{k+1} is the factor of multiplicity exactly k.
    let mut factors = Vec::new();
    let mut c = p.primitive_part();
    let mut d_prev: Option<IntPolynomial> = None;
    let mut k = 0;
    while !c.is_constant() {
        let c_next = c.gcd(&c.derivative());
        let d = c.div_exact(&c_next).expect("gcd divides").primitive_part();
        if let Some(dp) = d_prev.take() {
            let e = dp.div_exact(&d).expect("nested squarefree kernels").primitive_part();
            if !e.is_constant() {
                factors.push((e, k));
            }
        }
        d_prev = Some(d);
        c = c_next;
        k += 1;
    }
    if let Some(dp) = d_prev {
        if !dp.is_constant() {
            factors.push((dp, k));
        }
    }
    Ok(factors)
}
