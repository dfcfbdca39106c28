//! Phase-space phenomenology: scale constants, Gaussian smearing widths,
//! a numerical check of the convolution variances, and the extended
//! generalised uncertainty bound ΔxΔp = (ħ/2)(1 + αΔx² + ηΔp²).
//!
//! Everything here is `f64`; these are order-of-magnitude physics values.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::parallel::{map_indexed, Execution};

/// Inputs in cgs units.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RawConstants {
    /// cm³ g⁻¹ s⁻²
    pub g: f64,
    /// cm s⁻¹
    pub c: f64,
    /// erg s
    pub hbar: f64,
    /// cm⁻²
    pub lambda: f64,
}

impl RawConstants {
    pub fn cgs_default() -> Self {
        Self { g: 6.674e-8, c: 2.998e10, hbar: 1.0546e-27, lambda: 1e-56 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PhysicalConstants {
    pub raw: RawConstants,
    pub l_pl: f64,
    pub m_pl: f64,
    pub l_ds: f64,
    pub m_ds: f64,
    /// Λc²/(8πG)
    pub rho_lambda: f64,
    /// m_Pl / l_Pl³
    pub rho_pl: f64,
    /// 2ħ√(ρ_Λ/ρ_Pl)
    pub beta: f64,
    pub delta: f64,
}

impl PhysicalConstants {
    pub fn derive(raw: RawConstants) -> Result<Self> {
        for (name, v) in [("G", raw.g), ("c", raw.c), ("hbar", raw.hbar), ("Lambda", raw.lambda)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")));
            }
        }
        let RawConstants { g, c, hbar, lambda } = raw;
        let l_pl = (hbar * g / c.powi(3)).sqrt();
        let m_pl = (hbar * c / g).sqrt();
        let l_ds = (3.0 / lambda).sqrt();
        let m_ds = hbar / c * (lambda / 3.0).sqrt();
        let rho_lambda = lambda * c * c / (8.0 * PI * g);
        let rho_pl = m_pl / l_pl.powi(3);
        let beta = 2.0 * hbar * (rho_lambda / rho_pl).sqrt();
        Ok(Self { raw, l_pl, m_pl, l_ds, m_ds, rho_lambda, rho_pl, beta, delta: beta / hbar })
    }

    pub fn delta_log10(&self) -> f64 {
        self.delta.log10()
    }

    /// Nearest decade of δ.
    pub fn delta_order_of_magnitude(&self) -> i32 {
        self.delta_log10().round() as i32
    }

    /// α = 4G/(ħc³), η = Λ/6 of the observable-uncertainty bound.
    pub fn egup_coefficients(&self) -> (f64, f64) {
        let r = self.raw;
        (4.0 * r.g / (r.hbar * r.c.powi(3)), r.lambda / 6.0)
    }

    /// Heuristic forms: α₀·2G/(ħc³) multiplies Δp² in the GUP, 2η₀Λ
    /// multiplies Δx² in the EUP. No conversion to (α, η) is implied.
    pub fn heuristic_coefficients(&self, alpha0: f64, eta0: f64) -> (f64, f64) {
        let r = self.raw;
        (alpha0 * 2.0 * r.g / (r.hbar * r.c.powi(3)), 2.0 * eta0 * r.lambda)
    }
}

/// √(a² + b²), the width of the sum of two independent variables.
pub fn quadrature(a: f64, b: f64) -> f64 {
    a.hypot(b)
}

/// Matter wave packet and smearing function, both Gaussian.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GaussianSmearedState {
    pub sigma_psi: f64,
    /// Momentum width of the matter state.
    pub sigma_psi_p: f64,
    pub sigma_g: f64,
    pub sigma_g_tilde: f64,
}

impl GaussianSmearedState {
    /// Minimum-uncertainty matter state (σ_p = ħ/2σ) and σ̃_g = β/(2σ_g).
    pub fn minimal(sigma_psi: f64, sigma_g: f64, hbar: f64, beta: f64) -> Result<Self> {
        if !(sigma_psi > 0.0 && sigma_g > 0.0 && hbar > 0.0 && beta >= 0.0) {
            return Err(Error::InvalidParameter("widths and hbar must be positive, beta nonnegative".into()));
        }
        Ok(Self { sigma_psi, sigma_psi_p: hbar / (2.0 * sigma_psi), sigma_g, sigma_g_tilde: beta / (2.0 * sigma_g) })
    }
}

/// (Δx′, Δp′) = (√(σ_ψ² + σ_g²), √(σ_ψp² + σ̃_g²)).
pub fn smeared_uncertainties(s: &GaussianSmearedState) -> Result<(f64, f64)> {
    if !(s.sigma_psi > 0.0 && s.sigma_psi_p > 0.0 && s.sigma_g >= 0.0 && s.sigma_g_tilde >= 0.0) {
        return Err(Error::InvalidParameter("matter widths must be positive, smearing widths nonnegative".into()));
    }
    Ok((quadrature(s.sigma_psi, s.sigma_g), quadrature(s.sigma_psi_p, s.sigma_g_tilde)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Grid {
    /// Half-width in units of the larger σ.
    pub extent_sigmas: f64,
    pub points: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Self { extent_sigmas: 12.0, points: 4096 }
    }
}

/// Fewest grid points per smallest σ accepted by [`convolve_std`].
pub const MIN_POINTS_PER_SIGMA: f64 = 8.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConvolutionResult {
    pub numeric_std: f64,
    pub analytic_std: f64,
    pub relative_error: f64,
}

fn gauss(x: f64, s: f64) -> f64 {
    (-0.5 * (x / s).powi(2)).exp() / (s * (2.0 * PI).sqrt())
}

/// Standard deviation of |ψ|² ∗ |g|² for centred Gaussians of widths `a` and
/// `b`, by direct quadrature on a uniform grid.
pub fn convolve_std(a: f64, b: f64, grid: Grid, exec: Execution) -> Result<ConvolutionResult> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::InvalidParameter(format!("widths must be positive, got {a}, {b}")));
    }
    if grid.points < 3 || !(grid.extent_sigmas > 0.0) {
        return Err(Error::InvalidParameter("grid needs at least 3 points and a positive extent".into()));
    }
    let half = grid.extent_sigmas * a.max(b);
    let h = 2.0 * half / (grid.points - 1) as f64;
    let per_sigma = a.min(b) / h;
    if per_sigma < MIN_POINTS_PER_SIGMA {
        return Err(Error::UnderResolved(format!(
            "{per_sigma:.2} points per sigma, need {MIN_POINTS_PER_SIGMA}"
        )));
    }
    let xs: Vec<f64> = (0..grid.points).map(|k| -half + k as f64 * h).collect();
    let f: Vec<f64> = xs.iter().map(|&x| gauss(x, a)).collect();
    let conv = map_indexed(grid.points, exec, |m| {
        let xm = xs[m];
        f.iter().zip(&xs).map(|(fk, xk)| fk * gauss(xm - xk, b)).sum::<f64>() * h
    });
    // moments in index order: the same result for any thread count
    let (mut m0, mut m1, mut m2) = (0.0, 0.0, 0.0);
    for (c, x) in conv.iter().zip(&xs) {
        m0 += c;
        m1 += c * x;
        m2 += c * x * x;
    }
    let mean = m1 / m0;
    let numeric_std = (m2 / m0 - mean * mean).sqrt();
    let analytic_std = quadrature(a, b);
    Ok(ConvolutionResult { numeric_std, analytic_std, relative_error: (numeric_std - analytic_std).abs() / analytic_std })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConvolutionReport {
    pub position: ConvolutionResult,
    pub momentum: ConvolutionResult,
}

/// Both position and momentum convolutions of a smeared state.
pub fn convolution_check(s: &GaussianSmearedState, grid: Grid, exec: Execution) -> Result<ConvolutionReport> {
    Ok(ConvolutionReport {
        position: convolve_std(s.sigma_psi, s.sigma_g, grid, exec)?,
        momentum: convolve_std(s.sigma_psi_p, s.sigma_g_tilde, grid, exec)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundSample {
    pub dx: f64,
    /// Smaller root; `None` where the bound has no real solution.
    pub dp: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCurve {
    pub alpha: f64,
    pub eta: f64,
    pub hbar: f64,
    pub samples: Vec<BoundSample>,
}

impl BoundCurve {
    pub fn feasible(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.samples.iter().filter_map(|s| s.dp.map(|p| (s.dx, p)))
    }
    pub fn infeasible_count(&self) -> usize {
        self.samples.iter().filter(|s| s.dp.is_none()).count()
    }
}

/// Smaller positive Δp with ΔxΔp = (ħ/2)(1 + αΔx² + ηΔp²).
pub fn egup_dp(dx: f64, alpha: f64, eta: f64, hbar: f64) -> Option<f64> {
    let c = 0.5 * hbar * (1.0 + alpha * dx * dx);
    let disc = dx * dx - hbar * hbar * eta * (1.0 + alpha * dx * dx);
    // rationalized form of (dx − √disc)/(ħη); also exact at η = 0
    (disc >= 0.0).then(|| 2.0 * c / (dx + disc.sqrt()))
}

pub fn egup_bound(alpha: f64, eta: f64, hbar: f64, dx: &[f64]) -> Result<BoundCurve> {
    if !(alpha >= 0.0 && eta >= 0.0 && hbar > 0.0) {
        return Err(Error::InvalidParameter("need alpha, eta >= 0 and hbar > 0".into()));
    }
    if let Some(bad) = dx.iter().find(|&&x| !(x > 0.0 && x.is_finite())) {
        return Err(Error::InvalidParameter(format!("dx samples must be positive, got {bad}")));
    }
    let samples = dx.iter().map(|&x| BoundSample { dx: x, dp: egup_dp(x, alpha, eta, hbar) }).collect();
    Ok(BoundCurve { alpha, eta, hbar, samples })
}

/// Smallest Δx with a real bound, ħ√η/√(1 − ħ²αη); `None` when no Δx works
/// (ħ²αη ≥ 1).
pub fn feasibility_threshold(alpha: f64, eta: f64, hbar: f64) -> Option<f64> {
    let k = 1.0 - hbar * hbar * alpha * eta;
    (k > 0.0).then(|| hbar * eta.sqrt() / k.sqrt())
}

/// `points` evenly spaced values from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![lo],
        n => (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_orders_of_magnitude() {
        let k = PhysicalConstants::derive(RawConstants::cgs_default()).unwrap();
        assert_eq!(k.l_pl.log10().round(), -33.0);
        assert_eq!(k.m_pl.log10().round(), -5.0);
        assert_eq!(k.l_ds.log10().round(), 28.0);
        assert_eq!(k.m_ds.log10().round(), -66.0);
        assert!((-62.0..=-60.0).contains(&k.delta_log10()));
        assert_eq!(k.delta_order_of_magnitude(), -61);
        let bad = RawConstants { g: 0.0, ..RawConstants::cgs_default() };
        assert!(PhysicalConstants::derive(bad).is_err());
    }

    #[test]
    fn quadrature_widths() {
        let s = GaussianSmearedState { sigma_psi: 3.0, sigma_psi_p: 0.3, sigma_g: 4.0, sigma_g_tilde: 0.4 };
        let (x, p) = smeared_uncertainties(&s).unwrap();
        assert_eq!(x, 5.0);
        assert!((p - 0.5).abs() < 1e-15);
        let s0 = GaussianSmearedState { sigma_g: 0.0, ..s };
        assert_eq!(smeared_uncertainties(&s0).unwrap().0, 3.0);
        let m = GaussianSmearedState::minimal(2.0, 0.5, 1.0, 0.1).unwrap();
        assert_eq!(m.sigma_psi_p, 0.25);
        assert!((m.sigma_g_tilde * m.sigma_g - 0.05).abs() < 1e-16);
    }

    #[test]
    fn convolution_matches_quadrature() {
        for (a, b) in [(1.0, 1.0), (0.5, 2.0), (1.0, 0.1)] {
            let r = convolve_std(a, b, Grid::default(), Execution::Parallel).unwrap();
            assert!(r.relative_error < 1e-6, "{a} {b}: {r:?}");
        }
        let e = convolve_std(1.0, 0.01, Grid::default(), Execution::Sequential);
        assert!(matches!(e, Err(Error::UnderResolved(_))));
    }

    #[test]
    fn convolution_bit_stable() {
        let g = Grid { extent_sigmas: 12.0, points: 1024 };
        let a = convolve_std(0.7, 1.3, g, Execution::Sequential).unwrap();
        let b = convolve_std(0.7, 1.3, g, Execution::Parallel).unwrap();
        assert_eq!(a.numeric_std.to_bits(), b.numeric_std.to_bits());
    }

    #[test]
    fn bound_limits() {
        let xs = linspace(0.1, 5.0, 50);
        for (x, p) in egup_bound(0.0, 0.0, 1.0, &xs).unwrap().feasible() {
            assert!((x * p - 0.5).abs() < 1e-15);
        }
        for (x, p) in egup_bound(1.0, 0.0, 1.0, &xs).unwrap().feasible() {
            assert!((p - (1.0 + x * x) / (2.0 * x)).abs() < 1e-14);
        }
        // α = 0: Δp solves ΔpΔx = (1/2)(1 + ηΔp²)
        for (x, p) in egup_bound(0.0, 0.3, 1.0, &xs).unwrap().feasible() {
            assert!((p * x - 0.5 * (1.0 + 0.3 * p * p)).abs() < 1e-13);
        }
    }

    #[test]
    fn feasibility() {
        let c = egup_bound(1.0, 1.0, 1.0, &linspace(0.01, 100.0, 200)).unwrap();
        assert_eq!(c.infeasible_count(), 200);
        assert_eq!(feasibility_threshold(1.0, 1.0, 1.0), None);
        let t = feasibility_threshold(0.25, 0.25, 1.0).unwrap();
        assert!(egup_dp(t * 1.0001, 0.25, 0.25, 1.0).is_some());
        assert!(egup_dp(t * 0.9999, 0.25, 0.25, 1.0).is_none());
        assert!(egup_bound(-1.0, 0.0, 1.0, &[1.0]).is_err());
        assert!(egup_bound(0.0, 0.0, 1.0, &[0.0]).is_err());
    }
}
