//! The Σᵢ generators and the four-dimensional representation
//! 𝔘 = u₀𝕀 + i u·Σ of the unit quaternions.

use num_traits::Zero;
use serde::Serialize;

use crate::check::Residual;
use crate::error::{Error, Result};
use crate::fixtures::printed_group_element;
use crate::linalg::Matrix;
use crate::parallel::{map_indexed, Execution};
use crate::params::SmearingParams;
use crate::pauli::{levi_civita, pauli, Axis};
use crate::random::random_quaternion;
use crate::scalar::{ci, cr, Real, C};

#[derive(Clone, Debug, PartialEq)]
pub struct SigmaSet<R: Real> {
    pub delta: R,
    pub sigma: [Matrix<R>; 3],
}

/// Σᵢ = (1+δ)⁻¹(σᵢ⊗𝕀 + δ 𝕀⊗σᵢ + √δ εᵢⱼₖ σⱼ⊗σₖ).
pub fn build_sigma<R: Real>(params: &SmearingParams<R>) -> SigmaSet<R> {
    let d = params.delta().clone();
    let r = params.sqrt_delta().clone();
    let inv = R::one() / params.one_plus_delta();
    let p = Axis::ALL.map(pauli::<R>);
    let i2 = Matrix::<R>::identity(2);
    let sigma = std::array::from_fn(|i| {
        let mut m = p[i].kron(&i2).add(&i2.kron(&p[i]).scale_real(&d)).expect("shape");
        for j in 0..3 {
            for k in 0..3 {
                let e = levi_civita(i, j, k);
                if e != 0 {
                    m = m.add(&p[j].kron(&p[k]).scale(&C::new(R::from_i64(e) * r.clone(), R::zero()))).expect("shape");
                }
            }
        }
        m.scale_real(&inv)
    });
    SigmaSet { delta: d, sigma }
}

/// The ħ → 0, β → ħ substitution: all spin is carried by geometry, Σᵢ = 𝕀⊗σᵢ.
pub fn geometry_limit<R: Real>() -> SigmaSet<R> {
    let i2 = Matrix::<R>::identity(2);
    SigmaSet { delta: R::zero(), sigma: Axis::ALL.map(|a| i2.kron(&pauli(a))) }
}

/// Σᵢ with the interaction term dropped: (1+δ)⁻¹(σᵢ⊗𝕀 + δ 𝕀⊗σᵢ).
pub fn interaction_free<R: Real>(params: &SmearingParams<R>) -> [Matrix<R>; 3] {
    let d = params.delta().clone();
    let inv = R::one() / params.one_plus_delta();
    let i2 = Matrix::<R>::identity(2);
    Axis::ALL.map(|a| {
        let p = pauli::<R>(a);
        p.kron(&i2).add(&i2.kron(&p).scale_real(&d)).expect("shape").scale_real(&inv)
    })
}

/// The scalar c with interaction-free Σᵢ = c(σᵢ⊗𝕀 + 𝕀⊗σᵢ) at β = ħ, read off
/// the matrices and checked for every entry; `None` if no such c exists.
pub fn interaction_free_prefactor<R: Real>() -> Option<R> {
    let params = SmearingParams::from_delta(R::one()).ok()?;
    let free = interaction_free(&params);
    let i2 = Matrix::<R>::identity(2);
    let mut c: Option<R> = None;
    for a in Axis::ALL {
        let p = pauli::<R>(a);
        let sum = p.kron(&i2).add(&i2.kron(&p)).ok()?;
        for (x, y) in free[a.index()].entries().iter().zip(sum.entries()) {
            if y.is_zero() {
                if !x.is_zero() {
                    return None;
                }
                continue;
            }
            let q = x / y;
            if !q.im.is_zero() {
                return None;
            }
            match &c {
                None => c = Some(q.re),
                Some(v) if *v == q.re => {}
                Some(_) => return None,
            }
        }
    }
    c
}

/// ΣᵢΣⱼ = δᵢⱼ𝕀 + iεᵢⱼₖΣₖ, max residual over (i, j).
pub fn fundamental_relation_check<R: Real>(s: &SigmaSet<R>) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let mut rhs = if i == j { Matrix::identity(4) } else { Matrix::zeros(4, 4) };
            for k in 0..3 {
                let e = levi_civita(i, j, k);
                if e != 0 {
                    rhs = rhs.add(&s.sigma[k].scale(&ci(0, e))).expect("shape");
                }
            }
            worst = worst.max(s.sigma[i].matmul(&s.sigma[j]).expect("square").max_diff(&rhs));
        }
    }
    worst
}

/// Traceless, Hermitian, unitary (hence involutive) and unit determinant.
pub fn sigma_structure<R: Real>(s: &SigmaSet<R>) -> Vec<Residual> {
    let id = Matrix::<R>::identity(4);
    let one = C::<R>::from(R::one());
    let mut tr = 0.0f64;
    let mut herm = 0.0f64;
    let mut unit = 0.0f64;
    let mut det = 0.0f64;
    for m in &s.sigma {
        tr = tr.max(m.trace().map_or(f64::INFINITY, |t| t.norm_sqr().to_f64().sqrt()));
        herm = herm.max(m.max_diff(&m.dagger()));
        unit = unit.max(m.dagger().matmul(m).expect("square").max_diff(&id));
        det = det.max(m.det().map_or(f64::INFINITY, |d| (d - &one).norm_sqr().to_f64().sqrt()));
    }
    vec![
        Residual::new("tr Sigma_i = 0", "generator structure", tr),
        Residual::new("Sigma_i Hermitian", "generator structure", herm),
        Residual::new("Sigma_i^dagger Sigma_i = I", "generator structure", unit),
        Residual::new("det Sigma_i = 1", "generator structure", det),
    ]
}

/// Σᵢ against 2Sᵢ/(ħ+β) built from the spin operators.
pub fn spin_consistency<R: Real>(s: &SigmaSet<R>, ops: &crate::spin_one::SpinOperatorSet<R>) -> f64 {
    Axis::ALL.iter().map(|&a| s.sigma[a.index()].max_diff(&ops.sigma(a))).fold(0.0, f64::max)
}

/// Hamilton product of (a₀, a) and (b₀, b).
pub fn hamilton<R: Real>(a: &[R; 4], b: &[R; 4]) -> [R; 4] {
    let [a0, a1, a2, a3] = a.clone();
    let [b0, b1, b2, b3] = b.clone();
    [
        a0.clone() * b0.clone() - a1.clone() * b1.clone() - a2.clone() * b2.clone() - a3.clone() * b3.clone(),
        a0.clone() * b1.clone() + a1.clone() * b0.clone() + a2.clone() * b3.clone() - a3.clone() * b2.clone(),
        a0.clone() * b2.clone() - a1.clone() * b3.clone() + a2.clone() * b0.clone() + a3.clone() * b1.clone(),
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]
}

pub fn conjugate<R: Real>(u: &[R; 4]) -> [R; 4] {
    let [u0, u1, u2, u3] = u.clone();
    [u0, -u1, -u2, -u3]
}

pub fn norm_sqr<R: Real>(u: &[R; 4]) -> R {
    u.iter().fold(R::zero(), |a, x| a + x.clone() * x.clone())
}

/// Rotation by `theta` about the unit axis `n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AxisAngle {
    pub n: [f64; 3],
    pub theta: f64,
}

impl AxisAngle {
    /// u₀ = cos(θ/2), uᵢ = −sin(θ/2)nᵢ.
    pub fn to_quaternion(&self) -> [f64; 4] {
        let (s, c) = (self.theta / 2.0).sin_cos();
        [c, -s * self.n[0], -s * self.n[1], -s * self.n[2]]
    }
}

/// u₀𝕀 + i u·Σ, without checking the unit constraint.
pub fn group_element_unchecked<R: Real>(u: &[R; 4], s: &SigmaSet<R>) -> Matrix<R> {
    let mut m = Matrix::identity(4).scale_real(&u[0]);
    for k in 0..3 {
        m = m.add(&s.sigma[k].scale(&C::new(R::zero(), u[k + 1].clone()))).expect("shape");
    }
    m
}

/// 𝔘(u) for a unit quaternion (|Σu² − 1| ≤ tol, exactly 1 when exact).
pub fn group_element<R: Real>(u: &[R; 4], s: &SigmaSet<R>, tol: f64) -> Result<Matrix<R>> {
    let n = norm_sqr(u);
    let ok = if R::EXACT { n == R::one() } else { (n.to_f64() - 1.0).abs() <= tol };
    if !ok {
        return Err(Error::InvalidParameter(format!("quaternion is not unit: |u|^2 = {n}")));
    }
    Ok(group_element_unchecked(u, s))
}

/// cos(θ/2)𝕀 − i sin(θ/2) n·Σ.
pub fn group_element_axis_angle(aa: &AxisAngle, s: &SigmaSet<f64>) -> Result<Matrix<f64>> {
    let nn: f64 = aa.n.iter().map(|x| x * x).sum();
    if (nn - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter(format!("rotation axis is not unit: |n|^2 = {nn}")));
    }
    let (sn, cs) = (aa.theta / 2.0).sin_cos();
    let mut m = Matrix::identity(4).scale_real(&cs);
    for k in 0..3 {
        m = m.add(&s.sigma[k].scale(&C::new(0.0, -sn * aa.n[k]))).expect("shape");
    }
    Ok(m)
}

/// ‖𝔘(u)𝔘(v) − 𝔘(w)‖ with w = v∘u from the Hamilton product. With the
/// +i convention the map reverses products: 𝔘(u)𝔘(v) = 𝔘(v∘u).
pub fn closure_check<R: Real>(u: &[R; 4], v: &[R; 4], s: &SigmaSet<R>) -> f64 {
    let prod = group_element_unchecked(u, s).matmul(&group_element_unchecked(v, s)).expect("square");
    prod.max_diff(&group_element_unchecked(&hamilton(v, u), s))
}

/// Constructed 𝔘(u) against the printed matrix.
pub fn printed_element_check<R: Real>(u: &[R; 4], params: &SmearingParams<R>) -> f64 {
    group_element_unchecked(u, &build_sigma(params)).max_diff(&printed_group_element(u, params))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Su2BatchSummary {
    pub samples: usize,
    pub seed: u64,
    /// max |det 𝔘 − 1|
    pub max_det: f64,
    /// max |tr 𝔘 − 4u₀|
    pub max_trace: f64,
    /// max ‖𝔘†𝔘 − 𝕀‖
    pub max_unitarity: f64,
    /// max closure residual against the Hamilton-product oracle
    pub max_closure: f64,
    /// max distance to the cos/sin closed form
    pub max_closed_form: f64,
}

/// Identity checks over `n` random unit quaternions (pairs for closure).
pub fn su2_batch(s: &SigmaSet<f64>, n: usize, seed: u64, exec: Execution) -> Su2BatchSummary {
    let id = Matrix::<f64>::identity(4);
    let rows = map_indexed(n, exec, |k| {
        let u = random_quaternion(seed, 2 * k as u64);
        let v = random_quaternion(seed, 2 * k as u64 + 1);
        let g = group_element_unchecked(&u, s);
        let det = g.det().map_or(f64::INFINITY, |d| (d - cr(1.0)).norm());
        let tr = g.trace().map_or(f64::INFINITY, |t| (t - cr(4.0 * u[0])).norm());
        let unit = g.dagger().matmul(&g).expect("square").max_diff(&id);
        let closure = closure_check(&u, &v, s);
        // u₀ = cos(θ/2) ∈ [−1, 1], θ ∈ [0, 2π]
        let theta = 2.0 * u[0].clamp(-1.0, 1.0).acos();
        let sn = (theta / 2.0).sin();
        let closed = if sn.abs() < 1e-9 {
            0.0
        } else {
            let aa = AxisAngle { n: [-u[1] / sn, -u[2] / sn, -u[3] / sn], theta };
            group_element_axis_angle(&aa, s).map_or(f64::INFINITY, |m| m.max_diff(&g))
        };
        [det, tr, unit, closure, closed]
    });
    let mut m = [0.0f64; 5];
    for r in rows {
        for (a, b) in m.iter_mut().zip(r) {
            *a = a.max(if b.is_nan() { f64::INFINITY } else { b });
        }
    }
    Su2BatchSummary {
        samples: n,
        seed,
        max_det: m[0],
        max_trace: m[1],
        max_unitarity: m[2],
        max_closure: m[3],
        max_closed_form: m[4],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin_one::build_one_particle;
    use num_rational::BigRational as Q;
    use num_traits::One;

    fn quarter() -> SmearingParams<Q> {
        SmearingParams::from_delta(Q::ratio(1, 4)).unwrap()
    }

    #[test]
    fn canonical_sigma_is_pauli_on_matter() {
        let s = build_sigma(&SmearingParams::<Q>::canonical());
        for a in Axis::ALL {
            assert_eq!(s.sigma[a.index()], pauli::<Q>(a).kron(&Matrix::identity(2)));
        }
        assert_eq!(fundamental_relation_check(&s), 0.0);
    }

    #[test]
    fn structure_exact() {
        let p = quarter();
        let s = build_sigma(&p);
        assert_eq!(fundamental_relation_check(&s), 0.0);
        for r in sigma_structure(&s) {
            assert_eq!(r.value, 0.0, "{}", r.label);
        }
        assert_eq!(spin_consistency(&s, &build_one_particle(&p)), 0.0);
        for r in sigma_structure(&geometry_limit::<Q>()) {
            assert_eq!(r.value, 0.0, "{}", r.label);
        }
        assert_eq!(fundamental_relation_check(&geometry_limit::<Q>()), 0.0);
    }

    #[test]
    fn interaction_free_limit_has_half_prefactor() {
        assert_eq!(interaction_free_prefactor::<Q>(), Some(Q::ratio(1, 2)));
    }

    #[test]
    fn identity_and_half_turn() {
        let s = build_sigma(&SmearingParams::<Q>::canonical());
        let one = [Q::one(), Q::zero(), Q::zero(), Q::zero()];
        assert_eq!(group_element(&one, &s, 0.0).unwrap(), Matrix::identity(4));
        let sf = build_sigma(&SmearingParams::<f64>::canonical());
        let g = group_element_axis_angle(&AxisAngle { n: [0.0, 0.0, 1.0], theta: std::f64::consts::PI }, &sf).unwrap();
        let expect = pauli::<f64>(Axis::Z).kron(&Matrix::identity(2)).scale(&C::new(0.0, -1.0));
        assert!(g.max_diff(&expect) < 1e-15);
    }

    #[test]
    fn trace_det_and_closure_exact() {
        let p = quarter();
        let s = build_sigma(&p);
        // (1/2, 1/2, 1/2, 1/2) and (0, 3/5, 0, 4/5) are unit
        let u = [Q::ratio(1, 2), Q::ratio(1, 2), Q::ratio(1, 2), Q::ratio(1, 2)];
        let v = [Q::zero(), Q::ratio(3, 5), Q::zero(), Q::ratio(4, 5)];
        let g = group_element(&u, &s, 0.0).unwrap();
        assert_eq!(g.trace().unwrap(), cr(Q::from_i64(2)));
        assert_eq!(g.det().unwrap(), cr(Q::one()));
        assert_eq!(closure_check(&u, &v, &s), 0.0);
        let inv = group_element(&conjugate(&u), &s, 0.0).unwrap();
        assert_eq!(g.matmul(&inv).unwrap(), Matrix::identity(4));
        // the forward order fails for noncommuting u, v
        let fwd = group_element_unchecked(&hamilton(&u, &v), &s);
        assert!(g.matmul(&group_element_unchecked(&v, &s)).unwrap().max_diff(&fwd) > 0.1);
    }

    #[test]
    fn non_unit_rejected_and_det_scales() {
        let s = build_sigma(&quarter());
        let u = [Q::one(), Q::one(), Q::zero(), Q::zero()];
        assert!(group_element(&u, &s, 0.0).is_err());
        // det = (Σu²)² = 4
        assert_eq!(group_element_unchecked(&u, &s).det().unwrap(), cr(Q::from_i64(4)));
    }

    #[test]
    fn printed_matrix_matches() {
        for p in [quarter(), SmearingParams::from_delta(Q::ratio(9, 16)).unwrap(), SmearingParams::canonical()] {
            let u = [Q::ratio(1, 2), Q::ratio(-1, 2), Q::ratio(1, 2), Q::ratio(1, 2)];
            assert_eq!(printed_element_check(&u, &p), 0.0);
        }
    }

    #[test]
    fn batch_float() {
        let s = build_sigma(&SmearingParams::from_delta(0.37).unwrap());
        let b = su2_batch(&s, 300, 5, Execution::Parallel);
        assert!(b.max_det < 1e-10 && b.max_trace < 1e-12 && b.max_unitarity < 1e-12);
        assert!(b.max_closure < 1e-10 && b.max_closed_form < 1e-12, "{b:?}");
        assert_eq!(b, su2_batch(&s, 300, 5, Execution::Sequential));
    }
}
