//! Closed-form evaluation through the roots of the characteristic polynomial
//! `p(z) = 1 - λz - z² - … - z^k`.
//!
//! With the `k` distinct roots `r_j` of `p`,
//!
//! ```text
//! a[k][n+1] = Σ_j  -1 / p'(r_j) · r_j^-(n+1)          (n >= k)
//! det(A_n)  = Σ_j   1 / p'(r_j) · (-1/r_j)^(n+1)       (n >= k)
//! ```
//!
//! where `A_n` is the Toeplitz matrix of
//! [`build_toeplitz_a`](crate::families::build_toeplitz_a). Roots come from a
//! simultaneous (Durand–Kerner) iteration; everything is generic over the
//! float type.

use num_complex::Complex;
use num_traits::Float;

use crate::error::{Error, Result};

/// Integer coefficients `a_0 = 1, a_1, …, a_k` of `p(z) = Σ a_j z^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicPolynomial {
    k: usize,
    lambda: u64,
    coeffs: Vec<i64>,
}

impl CharacteristicPolynomial {
    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    /// Ascending coefficients, length `k + 1`.
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    fn coeff<F: Float>(&self, j: usize) -> F {
        F::from(self.coeffs[j]).expect("coefficient representable")
    }

    pub fn eval<F: Float>(&self, z: Complex<F>) -> Complex<F> {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(F::zero(), F::zero()), |acc, &c| acc * z + F::from(c).unwrap())
    }

    /// `p'(z)` from the exact coefficients `j·a_j`.
    pub fn eval_derivative<F: Float>(&self, z: Complex<F>) -> Complex<F> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex::new(F::zero(), F::zero()), |acc, (j, &c)| {
                acc * z + F::from(j as i64 * c).unwrap()
            })
    }

    /// Largest coefficient magnitude.
    pub fn max_coefficient(&self) -> i64 {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// Sum of the roots, `-a_{k-1} / a_k`.
    pub fn root_sum<F: Float>(&self) -> F {
        -self.coeff::<F>(self.k - 1) / self.coeff::<F>(self.k)
    }

    /// Product of the roots, `(-1)^k a_0 / a_k`.
    pub fn root_product<F: Float>(&self) -> F {
        let sign = if self.k % 2 == 0 { F::one() } else { -F::one() };
        sign * self.coeff::<F>(0) / self.coeff::<F>(self.k)
    }
}

/// `1 - λz - z² - … - z^k`.
pub fn char_poly(k: usize, lambda: u64) -> Result<CharacteristicPolynomial> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("order k must be >= 2, got {k}")));
    }
    if lambda < 1 {
        return Err(Error::InvalidParams(format!("weight lambda must be >= 1, got {lambda}")));
    }
    let lambda_coeff = i64::try_from(lambda)
        .map_err(|_| Error::InvalidParams(format!("weight lambda {lambda} too large")))?;
    let mut coeffs = vec![-1; k + 1];
    coeffs[0] = 1;
    coeffs[1] = -lambda_coeff;
    Ok(CharacteristicPolynomial { k, lambda, coeffs })
}

/// Stopping and acceptance thresholds for [`find_roots`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootConfig<F> {
    /// Converged once every root moves less than this (relative to `max(1, |r|)`).
    pub update_tol: F,
    pub max_iterations: usize,
    /// Largest acceptable `|p(r)|` when the iteration cap is hit.
    pub residual_tol: F,
    /// Roots closer than this are reported as a suspected multiple root.
    pub separation_tol: F,
}

impl<F: Float> Default for RootConfig<F> {
    fn default() -> Self {
        let eps = F::epsilon();
        let c = |v: f64| F::from(v).unwrap();
        Self {
            update_tol: c(1e-13).max(c(64.0) * eps),
            max_iterations: 500,
            residual_tol: c(1e-9).max(c(4096.0) * eps),
            separation_tol: c(1e-8),
        }
    }
}

/// The `k` roots of a characteristic polynomial and how well they were found.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet<F> {
    pub roots: Vec<Complex<F>>,
    /// `|p(r_j)|` for each root.
    pub residuals: Vec<F>,
    pub min_separation: F,
    pub iterations: usize,
}

impl<F: Float> RootSet<F> {
    pub fn max_residual(&self) -> F {
        self.residuals.iter().fold(F::zero(), |a, &b| a.max(b))
    }

    pub fn sum(&self) -> Complex<F> {
        self.roots.iter().fold(Complex::new(F::zero(), F::zero()), |a, &b| a + b)
    }

    pub fn product(&self) -> Complex<F> {
        self.roots.iter().fold(Complex::new(F::one(), F::zero()), |a, &b| a * b)
    }
}

fn min_pairwise_distance<F: Float>(roots: &[Complex<F>]) -> F {
    let mut best = F::infinity();
    for (a, ra) in roots.iter().enumerate() {
        for rb in &roots[a + 1..] {
            best = best.min((*ra - *rb).norm());
        }
    }
    best
}

/// All roots of `p` by Durand–Kerner iteration.
///
/// Starts from points on the circle of radius `1 + max|a_j / a_k|` with a
/// fixed angular offset, and updates roots in place (Gauss–Seidel order).
pub fn find_roots<F: Float>(p: &CharacteristicPolynomial, config: &RootConfig<F>) -> Result<RootSet<F>> {
    let k = p.degree();
    let lead = p.coeff::<F>(k);
    let monic: Vec<F> = (0..=k).map(|j| p.coeff::<F>(j) / lead).collect();
    let eval_monic = |z: Complex<F>| {
        monic
            .iter()
            .rev()
            .fold(Complex::new(F::zero(), F::zero()), |acc, &c| acc * z + c)
    };

    let radius = F::one() + monic[..k].iter().fold(F::zero(), |a, c| a.max(c.abs()));
    let two_pi = F::from(std::f64::consts::TAU).unwrap();
    let offset = F::from(0.4).unwrap();
    let mut roots: Vec<Complex<F>> = (0..k)
        .map(|j| {
            let theta = two_pi * F::from(j).unwrap() / F::from(k).unwrap() + offset;
            Complex::from_polar(radius, theta)
        })
        .collect();

    let mut iterations = 0;
    let mut converged = false;
    while iterations < config.max_iterations {
        iterations += 1;
        let mut max_step = F::zero();
        for j in 0..k {
            let zj = roots[j];
            let denom = roots
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != j)
                .fold(Complex::new(F::one(), F::zero()), |acc, (_, &zl)| acc * (zj - zl));
            let step = eval_monic(zj) / denom;
            roots[j] = zj - step;
            let scale = F::one().max(roots[j].norm());
            max_step = max_step.max(step.norm() / scale);
        }
        if !max_step.is_finite() {
            break;
        }
        if max_step < config.update_tol {
            converged = true;
            break;
        }
    }

    let residuals: Vec<F> = roots.iter().map(|&r| p.eval(r).norm()).collect();
    let max_residual = residuals.iter().fold(F::zero(), |a, &b| a.max(b));
    if !converged && !(max_residual <= config.residual_tol) {
        return Err(Error::NoConvergence {
            iterations,
            max_residual: max_residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    let min_separation = min_pairwise_distance(&roots);
    if min_separation < config.separation_tol {
        return Err(Error::MultipleRootSuspected {
            separation: min_separation.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(RootSet { roots, residuals, min_separation, iterations })
}

/// Minimum root separation for `1 - λz - … - z^k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparationReport {
    pub k: usize,
    pub lambda: u64,
    pub min_separation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Numerically checks that `p` has `k` distinct roots at tolerance `1e-8`.
pub fn check_distinct_roots(k: usize, lambda: u64) -> Result<SeparationReport> {
    let p = char_poly(k, lambda)?;
    let tolerance = 1e-8;
    // report the separation rather than fail on it
    let config = RootConfig::<f64> { separation_tol: 0.0, ..RootConfig::default() };
    let roots = find_roots(&p, &config)?;
    Ok(SeparationReport {
        k,
        lambda,
        min_separation: roots.min_separation,
        tolerance,
        pass: roots.min_separation > tolerance,
    })
}

/// Closed-form evaluator for one `(k, λ)`, holding the roots and the
/// reciprocal derivative weights `1 / p'(r_j)`.
#[derive(Debug, Clone)]
pub struct BinetEvaluator<F> {
    poly: CharacteristicPolynomial,
    roots: RootSet<F>,
    weights: Vec<Complex<F>>,
}

impl<F: Float> BinetEvaluator<F> {
    pub fn new(k: usize, lambda: u64) -> Result<Self> {
        Self::with_config(char_poly(k, lambda)?, &RootConfig::default())
    }

    pub fn with_config(poly: CharacteristicPolynomial, config: &RootConfig<F>) -> Result<Self> {
        let roots = find_roots(&poly, config)?;
        let weights = roots
            .roots
            .iter()
            .map(|&r| poly.eval_derivative(r).inv())
            .collect();
        Ok(Self { poly, roots, weights })
    }

    pub fn polynomial(&self) -> &CharacteristicPolynomial {
        &self.poly
    }

    pub fn roots(&self) -> &RootSet<F> {
        &self.roots
    }

    fn k(&self) -> usize {
        self.poly.degree()
    }

    fn require_n(&self, n: i64) -> Result<i32> {
        let k = self.k() as i64;
        if n < k {
            return Err(Error::OutOfValidityRange(format!("need n >= k = {k}, got n = {n}")));
        }
        i32::try_from(n + 1).map_err(|_| Error::OutOfValidityRange(format!("n = {n} too large")))
    }

    fn real(sum: Complex<F>) -> Result<F> {
        let tol = F::from(1e-6).unwrap().max(F::from(64.0).unwrap() * F::epsilon());
        if sum.im.abs() > tol * F::one().max(sum.re.abs()) {
            return Err(Error::ImaginaryResidue {
                re: sum.re.to_f64().unwrap_or(f64::NAN),
                im: sum.im.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(sum.re)
    }

    fn power_sum(&self, base: impl Fn(Complex<F>) -> Complex<F>, exponent: i32) -> Complex<F> {
        self.roots
            .roots
            .iter()
            .zip(&self.weights)
            .fold(Complex::new(F::zero(), F::zero()), |acc, (&r, &w)| acc + w * base(r).powi(exponent))
    }

    /// `Σ_j 1/p'(r_j) · (-1/r_j)^(n+1)`, the determinant of the Toeplitz
    /// matrix of dimension `n >= k`.
    pub fn inselberg_det(&self, n: i64) -> Result<F> {
        let e = self.require_n(n)?;
        Self::real(self.power_sum(|r| -r.inv(), e))
    }

    /// Estimate of `a[k][n+1]` for `n >= k`.
    pub fn kth(&self, n: i64) -> Result<F> {
        let e = self.require_n(n)?;
        Self::real(-self.power_sum(|r| r.inv(), e))
    }

    /// Estimate of `a[i][n]`. For `i >= 2` this is `Σ_{m=1}^{k-i+1} a[k][n-m+1]`
    /// with each term from [`kth`](Self::kth); for `i = 1` it is `a[k][n+1]`,
    /// which the sum only matches at `λ = 1`. Requires `n - k + i - 1 >= k`.
    pub fn ith(&self, i: usize, n: i64) -> Result<F> {
        let k = self.k();
        if i == 0 || i > k {
            return Err(Error::IndexOutOfRange { k, i, n });
        }
        let lowest = n - (k - i + 1) as i64;
        if lowest < k as i64 {
            return Err(Error::OutOfValidityRange(format!(
                "need n - k + i - 1 >= k (k = {k}, i = {i}, n = {n})"
            )));
        }
        if i == 1 {
            return self.kth(n);
        }
        (1..=(k - i + 1) as i64).try_fold(F::zero(), |acc, m| Ok(acc + self.kth(n - m)?))
    }
}

/// See [`BinetEvaluator::inselberg_det`].
pub fn inselberg_det<F: Float>(p: &CharacteristicPolynomial, n: i64) -> Result<F> {
    BinetEvaluator::<F>::with_config(p.clone(), &RootConfig::default())?.inselberg_det(n)
}

/// See [`BinetEvaluator::kth`].
pub fn binet_kth<F: Float>(k: usize, lambda: u64, n: i64) -> Result<F> {
    BinetEvaluator::<F>::new(k, lambda)?.kth(n)
}

/// See [`BinetEvaluator::ith`].
pub fn binet_ith<F: Float>(k: usize, lambda: u64, i: usize, n: i64) -> Result<F> {
    BinetEvaluator::<F>::new(k, lambda)?.ith(i, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1.0)
    }

    fn sorted_real(roots: &RootSet<f64>) -> Vec<f64> {
        let mut v: Vec<f64> = roots.roots.iter().map(|r| r.re).collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    #[test]
    fn char_poly_coefficients() {
        assert_eq!(char_poly(2, 2).unwrap().coefficients(), &[1, -2, -1]);
        assert_eq!(char_poly(3, 1).unwrap().coefficients(), &[1, -1, -1, -1]);
        assert_eq!(char_poly(4, 3).unwrap().coefficients(), &[1, -3, -1, -1, -1]);
        assert!(char_poly(1, 2).is_err());
        assert!(char_poly(3, 0).is_err());
    }

    #[test]
    fn derivative_is_exact() {
        let p = char_poly(4, 3).unwrap();
        // p'(z) = -3 - 2z - 3z² - 4z³ at z = 2: -3 - 4 - 12 - 32
        assert_eq!(p.eval_derivative(Complex::new(2.0, 0.0)), Complex::new(-51.0, 0.0));
        assert_eq!(p.eval(Complex::new(2.0, 0.0)), Complex::new(1.0 - 6.0 - 4.0 - 8.0 - 16.0, 0.0));
    }

    #[test]
    fn quadratic_roots_match_closed_form() {
        let pell = find_roots::<f64>(&char_poly(2, 2).unwrap(), &RootConfig::default()).unwrap();
        let want = [-1.0 - 2f64.sqrt(), -1.0 + 2f64.sqrt()];
        for (got, want) in sorted_real(&pell).iter().zip(want) {
            assert!((got - want).abs() < 1e-12);
        }
        assert!(pell.roots.iter().all(|r| r.im.abs() < 1e-12));

        let fib = find_roots::<f64>(&char_poly(2, 1).unwrap(), &RootConfig::default()).unwrap();
        let s5 = 5f64.sqrt();
        let want = [(-1.0 - s5) / 2.0, (-1.0 + s5) / 2.0];
        for (got, want) in sorted_real(&fib).iter().zip(want) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn vieta_and_residuals() {
        for k in 2..=12 {
            for lambda in 1..=3 {
                let p = char_poly(k, lambda).unwrap();
                let rs = find_roots::<f64>(&p, &RootConfig::default()).unwrap();
                assert_eq!(rs.roots.len(), k);
                let sum = rs.sum();
                let prod = rs.product();
                assert!((sum.re - p.root_sum::<f64>()).abs() < 1e-10 && sum.im.abs() < 1e-10, "k={k}");
                assert!((prod.re - p.root_product::<f64>()).abs() < 1e-10 && prod.im.abs() < 1e-10, "k={k}");
                let bound = 1e-10 * p.max_coefficient() as f64;
                assert!(rs.max_residual() <= bound, "k={k} λ={lambda} residual {}", rs.max_residual());
            }
        }
        // product of roots is (-1)^k · 1 / (-1)
        assert_eq!(char_poly(3, 2).unwrap().root_product::<f64>(), 1.0);
        assert_eq!(char_poly(4, 2).unwrap().root_product::<f64>(), -1.0);
    }

    #[test]
    fn separation_examples() {
        let r = check_distinct_roots(2, 2).unwrap();
        assert!(r.pass);
        assert!((r.min_separation - 2.0 * 2f64.sqrt()).abs() < 1e-12);
        assert!(check_distinct_roots(5, 2).unwrap().pass);
        assert!(check_distinct_roots(3, 1).unwrap().pass);
    }

    #[test]
    fn inselberg_examples() {
        let d = inselberg_det::<f64>(&char_poly(2, 2).unwrap(), 5).unwrap();
        assert!(close(d, -70.0, 1e-12), "{d}");
        let d = inselberg_det::<f64>(&char_poly(3, 2).unwrap(), 3).unwrap();
        assert!(close(d, -13.0, 1e-12), "{d}");
        let d = inselberg_det::<f64>(&char_poly(2, 1).unwrap(), 2).unwrap();
        assert!(close(d, 2.0, 1e-12), "{d}");
        assert!(matches!(
            inselberg_det::<f64>(&char_poly(3, 2).unwrap(), 2),
            Err(Error::OutOfValidityRange(_))
        ));
    }

    #[test]
    fn binet_examples() {
        assert!(close(binet_kth::<f64>(2, 2, 4).unwrap(), 29.0, 1e-12));
        assert!(close(binet_kth::<f64>(5, 2, 9).unwrap(), 4116.0, 1e-12));
        assert!(close(binet_kth::<f64>(3, 2, 3).unwrap(), 13.0, 1e-12));
        assert!(close(binet_ith::<f64>(5, 2, 2, 10).unwrap(), 6531.0, 1e-12));
        // a[1][8] for k = 3, λ = 2 from the recurrence: 2, 5, 13, 33, 84, 214, 545, 1388
        assert!(close(binet_ith::<f64>(3, 2, 1, 8).unwrap(), 1388.0, 1e-12));
        let ev = BinetEvaluator::<f64>::new(4, 3).unwrap();
        assert_eq!(ev.ith(4, 9).unwrap(), ev.kth(8).unwrap());
        assert!(matches!(ev.kth(3), Err(Error::OutOfValidityRange(_))));
        assert!(matches!(ev.ith(2, 6), Err(Error::OutOfValidityRange(_))));
        assert!(matches!(ev.ith(0, 20), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(ev.ith(5, 20), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn single_precision() {
        let v = binet_kth::<f32>(2, 2, 4).unwrap();
        assert!((v - 29.0).abs() < 1e-3, "{v}");
        let rs = find_roots::<f32>(&char_poly(3, 1).unwrap(), &RootConfig::default()).unwrap();
        assert_eq!(rs.roots.len(), 3);
    }

    #[test]
    fn no_convergence_is_reported() {
        let config = RootConfig::<f64> { max_iterations: 1, ..RootConfig::default() };
        let err = find_roots(&char_poly(6, 2).unwrap(), &config).unwrap_err();
        assert!(matches!(err, Error::NoConvergence { iterations: 1, .. }));
    }
}
