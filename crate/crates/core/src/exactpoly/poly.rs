use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`. The representation is canonical:
/// the last stored coefficient is nonzero, and the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from a table of counts, e.g. a statistic histogram.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation over the rationals.
    pub fn evaluate_at(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)`, computed on the homogenised numerator so that no
    /// rational arithmetic is needed.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        // p(n/d) * d^deg has the sign of p(n/d) since d > 0.
        let (n, d) = (x.numer(), x.denom());
        homogeneous_sign(&self.coeffs, n, d)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Greatest common divisor of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and normalises the leading coefficient to be positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        self.div_scalar_exact(&g)
    }

    pub(crate) fn div_scalar_exact(&self, d: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Pseudo-remainder `prem(self, divisor) = lc(divisor)^(deg self - deg divisor + 1) * self mod divisor`.
    pub fn pseudo_remainder(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "pseudo-division by zero polynomial");
        if self.is_zero() || self.deg() < divisor.deg() {
            // lc^(delta+1) with delta < 0 is conventionally treated as multiplying by 1.
            return self.clone();
        }
        let db = divisor.deg();
        let lb = divisor.lc().clone();
        let mut r = self.coeffs.clone();
        let mut steps = self.deg() - db + 1;
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1;
            let lr = r[k].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (j, bc) in divisor.coeffs.iter().enumerate() {
                r[k - db + j] -= &lr * bc;
            }
            r.pop();
            steps -= 1;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        // Remaining multiplications keep the result equal to the textbook definition.
        let mut out = Self::new(r);
        if steps > 0 {
            out = out.scale(&Pow::pow(&lb, steps));
        }
        out
    }

    /// Quotient `self / divisor` when the division is exact in `Z[t]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.deg() < divisor.deg() {
            return None;
        }
        let db = divisor.deg();
        let lb = divisor.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.deg() - db + 1];
        for k in (db..=self.deg()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let (qc, rem) = r[k].div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (j, bc) in divisor.coeffs.iter().enumerate() {
                r[k - db + j] -= &qc * bc;
            }
            q[k - db] = qc;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// Primitive gcd with positive leading coefficient, computed with the
    /// subresultant pseudo-remainder sequence. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Self::zero(),
            (true, false) => return other.primitive_part(),
            (false, true) => return self.primitive_part(),
            _ => {}
        }
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            if b.deg() == 0 {
                return Self::one();
            }
            let delta = a.deg() - b.deg();
            let r = a.pseudo_remainder(&b);
            if r.is_zero() {
                return b.primitive_part();
            }
            let beta = &g * Pow::pow(&h, delta);
            a = b;
            b = r.div_scalar_exact(&beta);
            g = a.lc().clone();
            h = subresultant_h(&h, &g, delta);
        }
    }

    /// Exponent-wise sum of coefficients, i.e. `p(1)`.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Reverses the coefficient order relative to degree `d`: `t^d p(1/t)`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut coeffs: Vec<BigInt> = (0..=d).map(|k| self.coeff(k)).collect();
        coeffs.reverse();
        Self::new(coeffs)
    }
}

fn homogeneous_sign(coeffs: &[BigInt], n: &BigInt, d: &BigInt) -> Ordering {
    // Horner on the homogenised form: acc_k = acc_{k+1} * n + a_k * d^(deg-k)
    let deg = coeffs.len() - 1;
    let mut dpows = Vec::with_capacity(deg + 1);
    let mut p = BigInt::one();
    for _ in 0..=deg {
        dpows.push(p.clone());
        p *= d;
    }
    let mut acc = BigInt::zero();
    for (k, c) in coeffs.iter().enumerate().rev() {
        acc = acc * n + c * &dpows[deg - k];
    }
    match acc.sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

/// `h^(1 - delta) * g^delta`, exact for subresultant sequences.
pub(crate) fn subresultant_h(h: &BigInt, g: &BigInt, delta: usize) -> BigInt {
    match delta {
        0 => h.clone(),
        1 => g.clone(),
        _ => {
            let num: BigInt = Pow::pow(g, delta);
            let den: BigInt = Pow::pow(h, delta - 1);
            let (q, r) = num.div_rem(&den);
            debug_assert!(r.is_zero(), "inexact subresultant update");
            q
        }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl<'a> Sum<&'a IntPolynomial> for IntPolynomial {
    fn sum<I: Iterator<Item = &'a IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + p)
    }
}

impl Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}

/// Descending-power notation, e.g. `t^3 + 9t^2 + 13t + 1`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}
