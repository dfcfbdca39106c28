//! Spin uncertainty relations: the variance of each Sᵢ split over its matter,
//! geometry and interaction parts, and the rescaled Robertson bound.
//!
//! (ΔSᵢ)² = (Δ𝒮ᵢ)² + (Δ𝒮′ᵢ)² + (Δ𝕊ᵢ)² + cov(𝒮ᵢ,𝕊ᵢ) + cov(𝕊ᵢ,𝒮ᵢ)
//!        + cov(𝒮′ᵢ,𝕊ᵢ) + cov(𝕊ᵢ,𝒮′ᵢ) + cov(𝒮ᵢ,𝒮′ᵢ) + cov(𝒮′ᵢ,𝒮ᵢ).
//!
//! The commonly quoted form stops before the last two terms. They vanish for
//! product states but not in general, so both sums are reported.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{covariance, expectation, variance, Ket};
use crate::parallel::{map_indexed, Execution};
use crate::pauli::Axis;
use crate::random::random_ket4;
use crate::scalar::Real;
use crate::spin_one::SpinOperatorSet;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxisUncertainty {
    pub axis: Axis,
    /// ΔSᵢ
    pub delta_s: f64,
    /// (ΔSᵢ)² from Sᵢ directly.
    pub variance: f64,
    pub var_matter: f64,
    pub var_geometry: f64,
    pub var_interaction: f64,
    /// cov(𝒮ᵢ,𝕊ᵢ) + cov(𝕊ᵢ,𝒮ᵢ)
    pub cov_matter_interaction: f64,
    /// cov(𝒮′ᵢ,𝕊ᵢ) + cov(𝕊ᵢ,𝒮′ᵢ)
    pub cov_geometry_interaction: f64,
    /// cov(𝒮ᵢ,𝒮′ᵢ) + cov(𝒮′ᵢ,𝒮ᵢ), the terms missing from the short form.
    pub cov_matter_geometry: f64,
    /// Short form: three variances and four covariances.
    pub short_sum: f64,
    pub full_sum: f64,
    /// |variance − full_sum|; zero up to rounding for every state.
    pub full_residual: f64,
    /// |variance − short_sum| = |cov_matter_geometry|.
    pub short_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RobertsonCheck {
    pub i: Axis,
    pub j: Axis,
    /// ΔSᵢΔSⱼ
    pub product: f64,
    /// ((ħ+β)/2)|⟨Sₖ⟩|
    pub bound: f64,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UncertaintyReport {
    pub axes: Vec<AxisUncertainty>,
    pub robertson: Vec<RobertsonCheck>,
}

impl UncertaintyReport {
    pub fn max_full_residual(&self) -> f64 {
        self.axes.iter().map(|a| a.full_residual).fold(0.0, f64::max)
    }
    pub fn max_matter_geometry(&self) -> f64 {
        self.axes.iter().map(|a| a.cov_matter_geometry.abs()).fold(0.0, f64::max)
    }
    pub fn robertson_holds(&self) -> bool {
        self.robertson.iter().all(|r| r.satisfied)
    }
}

/// The decomposition for every axis and the bound for every cyclic pair.
/// `tol` is the normalization tolerance and the slack allowed in the
/// Robertson comparison (exact backends compare exactly).
pub fn gur_report<R: Real>(state: &Ket<R>, ops: &SpinOperatorSet<R>, tol: f64) -> Result<UncertaintyReport> {
    state.require_normalized(tol)?;
    let sym = |a, b| -> Result<R> { Ok(covariance(a, b, state, tol)?.re + covariance(b, a, state, tol)?.re) };
    let mut axes = Vec::with_capacity(3);
    let mut vars = Vec::with_capacity(3);
    for axis in Axis::ALL {
        let i = axis.index();
        let (m, g, x) = (&ops.sub_s[i], &ops.sub_s_prime[i], &ops.sub_cross[i]);
        let direct = variance(&ops.s[i], state, tol)?;
        let vm = variance(m, state, tol)?;
        let vg = variance(g, state, tol)?;
        let vx = variance(x, state, tol)?;
        let cmx = sym(m, x)?;
        let cgx = sym(g, x)?;
        let cmg = sym(m, g)?;
        let short = vm.clone() + vg.clone() + vx.clone() + cmx.clone() + cgx.clone();
        let full = short.clone() + cmg.clone();
        axes.push(AxisUncertainty {
            axis,
            delta_s: direct.to_f64().max(0.0).sqrt(),
            variance: direct.to_f64(),
            var_matter: vm.to_f64(),
            var_geometry: vg.to_f64(),
            var_interaction: vx.to_f64(),
            cov_matter_interaction: cmx.to_f64(),
            cov_geometry_interaction: cgx.to_f64(),
            cov_matter_geometry: cmg.to_f64(),
            short_sum: short.to_f64(),
            full_sum: full.to_f64(),
            full_residual: (direct.clone() - full).abs_val().to_f64(),
            short_residual: (direct.clone() - short).abs_val().to_f64(),
        });
        vars.push(direct);
    }
    let mut robertson = Vec::with_capacity(3);
    for axis in Axis::ALL {
        let (i, j, k) = axis.cyclic();
        let sk = expectation(&ops.s[k.index()], state, tol)?.re;
        let half_total = ops.half_total();
        // compare squares so the exact backend needs no square roots
        let lhs = vars[i.index()].clone() * vars[j.index()].clone();
        let rhs = half_total.clone() * half_total.clone() * sk.clone() * sk.clone();
        let satisfied = if R::EXACT { lhs >= rhs } else { lhs.to_f64() - rhs.to_f64() >= -tol };
        robertson.push(RobertsonCheck {
            i,
            j,
            product: lhs.to_f64().max(0.0).sqrt(),
            bound: (half_total * sk).abs_val().to_f64(),
            satisfied,
        });
    }
    Ok(UncertaintyReport { axes, robertson })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GurBatchSummary {
    pub states: usize,
    pub seed: u64,
    pub max_full_residual: f64,
    pub robertson_violations: usize,
    /// Largest |cov(𝒮ᵢ,𝒮′ᵢ) + cov(𝒮′ᵢ,𝒮ᵢ)| seen; informational.
    pub max_matter_geometry: f64,
}

/// `gur_report` over `n` random normalized states.
pub fn gur_batch(ops: &SpinOperatorSet<f64>, n: usize, seed: u64, tol: f64, exec: Execution) -> Result<GurBatchSummary> {
    let reports = map_indexed(n, exec, |k| gur_report(&random_ket4(seed, k as u64), ops, tol));
    let mut s = GurBatchSummary { states: n, seed, max_full_residual: 0.0, robertson_violations: 0, max_matter_geometry: 0.0 };
    for r in reports {
        let r = r?;
        s.max_full_residual = s.max_full_residual.max(r.max_full_residual());
        s.max_matter_geometry = s.max_matter_geometry.max(r.max_matter_geometry());
        s.robertson_violations += r.robertson.iter().filter(|c| !c.satisfied).count();
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::SmearingParams;
    use crate::scalar::ci;
    use crate::spin_one::{build_one_particle, eigenbasis};
    use num_rational::BigRational as Q;

    #[test]
    fn up_z_saturates_xy_bound() {
        let p = SmearingParams::<Q>::from_delta(Q::ratio(1, 4)).unwrap();
        let ops = build_one_particle(&p);
        let r = gur_report(&eigenbasis(&p, Axis::Z).up, &ops, 0.0).unwrap();
        let z = &r.axes[2];
        assert_eq!(z.variance, 0.0);
        assert_eq!(z.full_sum, 0.0);
        let xy = r.robertson.iter().find(|c| c.i == Axis::X).unwrap();
        // ΔSxΔSy = ((ħ+β)/2)² = (5/8)²
        assert_eq!(xy.bound, 25.0 / 64.0);
        assert_eq!(xy.product, 25.0 / 64.0);
        assert!(r.robertson_holds());
        assert_eq!(r.max_full_residual(), 0.0);
    }

    #[test]
    fn entangled_state_needs_matter_geometry_terms() {
        let p = SmearingParams::<Q>::from_delta(Q::ratio(1, 4)).unwrap();
        let ops = build_one_particle(&p);
        // (|↑↑⟩ + |↓↓⟩)/√2 in matter ⊗ geometry
        let psi = Ket::with_radicand(vec![ci(1, 0), ci(0, 0), ci(0, 0), ci(1, 0)], Q::from_i64(2));
        let r = gur_report(&psi, &ops, 0.0).unwrap();
        assert_eq!(r.max_full_residual(), 0.0);
        assert!(r.max_matter_geometry() > 0.0);
        assert!(r.axes.iter().any(|a| a.short_residual > 0.0));
    }

    #[test]
    fn batch_is_clean() {
        let ops = build_one_particle(&SmearingParams::from_delta(0.3).unwrap());
        let s = gur_batch(&ops, 200, 11, 1e-12, Execution::Parallel).unwrap();
        assert!(s.max_full_residual <= 1e-12);
        assert_eq!(s.robertson_violations, 0);
        assert_eq!(s, gur_batch(&ops, 200, 11, 1e-12, Execution::Sequential).unwrap());
    }
}
