//! Floating-point root approximations for display. Real roots come from
//! exact isolation and refinement; only the non-real roots are found
//! numerically (Aberth iteration on each squarefree factor).

use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use rook_eulerian::exactpoly::{refine_real_roots, squarefree_decomposition};
use rook_eulerian::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproxRoot {
    pub re: String,
    pub im: String,
    pub multiplicity: usize,
}

fn fmt7(x: f64) -> String {
    let x = if x.abs() < 5e-8 { 0.0 } else { x };
    format!("{x:.7}")
}

impl ApproxRoot {
    fn new(z: Complex64, multiplicity: usize) -> Self {
        Self {
            re: fmt7(z.re),
            im: fmt7(z.im),
            multiplicity,
        }
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(
            self.re.parse().unwrap_or(f64::NAN),
            self.im.parse().unwrap_or(f64::NAN),
        )
    }

    pub fn is_real(&self) -> bool {
        self.value().im == 0.0
    }
}

impl fmt::Display for ApproxRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = self.value();
        if z.im == 0.0 {
            write!(f, "{}", self.re)?;
        } else if z.im < 0.0 {
            write!(f, "{} - {}i", self.re, fmt7(-z.im))?;
        } else {
            write!(f, "{} + {}i", self.re, self.im)?;
        }
        if self.multiplicity > 1 {
            write!(f, " (multiplicity {})", self.multiplicity)?;
        }
        Ok(())
    }
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of a squarefree polynomial with ascending `coeffs`.
pub fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lc = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lc).collect();
    let radius = (0..n)
        .filter(|&i| monic[i] != 0.0)
        .map(|i| (2.0 * monic[i].abs()).powf(1.0 / (n - i) as f64))
        .fold(1e-3, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner(&monic, z[k]);
            if p == Complex64::zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| Complex64::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if w.is_finite() {
                z[k] -= w;
                worst = worst.max(w.norm() / z[k].norm().max(1.0));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    for zk in &mut z {
        for _ in 0..3 {
            let (p, dp) = horner(&monic, *zk);
            let step = p / dp;
            if step.is_finite() {
                *zk -= step;
            }
        }
    }
    z
}

fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Every root of `p` with multiplicity: real roots descending, then
/// non-real roots by descending real part with positive imaginary part first.
pub fn approximate_roots(p: &IntPolynomial) -> rook_eulerian::Result<Vec<ApproxRoot>> {
    let width = BigRational::new(1.into(), 1_000_000_000_000i64.into());
    let mut real = Vec::new();
    let mut complex = Vec::new();
    for (factor, k) in squarefree_decomposition(p)? {
        let reals = refine_real_roots(&factor, &width)?;
        for r in &reals {
            real.push((rational_to_f64(&r.interval.midpoint()), k));
        }
        let degree = factor.degree().unwrap_or(0);
        if degree > reals.len() {
            let coeffs: Vec<f64> = factor.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
            let mut zs = aberth(&coeffs);
            zs.sort_by(|a, b| a.im.abs().total_cmp(&b.im.abs()));
            for z in zs.into_iter().skip(reals.len()) {
                complex.push((z, k));
            }
        }
    }
    real.sort_by(|a, b| b.0.total_cmp(&a.0));
    complex.sort_by(|a, b| b.0.re.total_cmp(&a.0.re).then(b.0.im.total_cmp(&a.0.im)));
    Ok(real
        .into_iter()
        .map(|(x, k)| ApproxRoot::new(Complex64::new(x, 0.0), k))
        .chain(complex.into_iter().map(|(z, k)| ApproxRoot::new(z, k)))
        .collect())
}
