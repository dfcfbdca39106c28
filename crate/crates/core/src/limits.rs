//! β → 0: every smeared operator against its canonical counterpart embedded
//! on the matter factor (geometry acted on by the identity).

use num_traits::Zero;

use crate::canonical::{build_canonical, CanonicalOperators};
use crate::check::Residual;
use crate::error::{Error, Result};
use crate::linalg::{Ket, Matrix};
use crate::params::SmearingParams;
use crate::pauli::Axis;
use crate::scalar::{Real, C};
use crate::spin_one::{build_one_particle, eigenbasis};
use crate::spin_two::{bell_states, build_two_particle, BellCoefficients};
use crate::su2::build_sigma;

const ANCHOR: &str = "canonical limit";

/// O ↦ O ⊗ 𝕀 on matter ⊗ geometry.
pub fn embed_one<R: Real>(op: &Matrix<R>) -> Matrix<R> {
    op.kron(&Matrix::identity(2))
}

/// A two-qubit matter operator on (m_A m_B) lifted to (m_A g_A)(m_B g_B).
pub fn embed_two<R: Real>(op: &Matrix<R>) -> Matrix<R> {
    let mut out = Matrix::zeros(16, 16);
    let idx = |ma: usize, ga: usize, mb: usize, gb: usize| 4 * (2 * ma + ga) + 2 * mb + gb;
    for ma in 0..2 {
        for mb in 0..2 {
            for na in 0..2 {
                for nb in 0..2 {
                    let v = op.get(2 * ma + mb, 2 * na + nb);
                    if v.is_zero() {
                        continue;
                    }
                    for ga in 0..2 {
                        for gb in 0..2 {
                            out.set(idx(ma, ga, mb, gb), idx(na, ga, nb, gb), v.clone());
                        }
                    }
                }
            }
        }
    }
    out
}

/// A two-qubit matter ket with both geometry factors fixed to `g` (0 = ↑, 1 = ↓).
fn embed_two_ket<R: Real>(k: &Ket<R>, ga: usize, gb: usize) -> Ket<R> {
    let mut raw = vec![C::<R>::zero(); 16];
    for ma in 0..2 {
        for mb in 0..2 {
            raw[4 * (2 * ma + ga) + 2 * mb + gb] = k.raw()[2 * ma + mb].clone();
        }
    }
    Ket::with_radicand(raw, k.radicand().clone())
}

/// All limit residuals. Requires δ = 0.
pub fn canonical_limit_residuals<R: Real>(params: &SmearingParams<R>) -> Result<Vec<Residual>> {
    if !params.is_canonical() {
        return Err(Error::InvalidParameter(format!("canonical limit needs delta = 0, got {}", params.delta())));
    }
    let canon: CanonicalOperators<R> = build_canonical(params.hbar().clone())?;
    let one = build_one_particle(params);
    let two = build_two_particle(params);
    let sigma = build_sigma(params);
    let mut out = Vec::new();
    let mut push = |label: String, v: f64| out.push(Residual::new(label, ANCHOR, v));

    for a in Axis::ALL {
        let i = a.index();
        push(format!("S_{a} = s_{a} (x) I"), one.s[i].max_diff(&embed_one(&canon.s[i])));
        push(format!("S_{a} matter part = s_{a} (x) I"), one.sub_s[i].max_diff(&embed_one(&canon.s[i])));
        push(format!("S'_{a} = 0"), one.sub_s_prime[i].max_abs());
        push(format!("X_{a} = 0"), one.sub_cross[i].max_abs());
        push(format!("Sigma_{a} = sigma_{a} (x) I"), sigma.sigma[i].max_diff(&embed_one(&canon.pauli[i])));
        push(format!("two-particle S_{a} = embedded s_{a}"), two.s[i].max_diff(&embed_two(&canon.two.s[i])));
    }
    push("S^2 = s^2 (x) I".into(), one.s2.max_diff(&embed_one(&canon.s2)));
    push("S+ = s+ (x) I".into(), one.s_plus.max_diff(&embed_one(&canon.s_plus)));
    push("S- = s- (x) I".into(), one.s_minus.max_diff(&embed_one(&canon.s_minus)));
    push("two-particle S^2 = embedded s^2".into(), two.s2.max_diff(&embed_two(&canon.two.s2)));
    push("two-particle S+ = embedded s+".into(), two.s_plus.max_diff(&embed_two(&canon.two.s_plus)));
    push("two-particle S- = embedded s-".into(), two.s_minus.max_diff(&embed_two(&canon.two.s_minus)));

    // z eigenvectors: |up> = |↑↑g>, |down> = |↓↓g>, |up'> = |↑↓g>, |down'> = |↓↑g>
    let b = eigenbasis(params, Axis::Z);
    for (label, k, idx) in [("up", &b.up, 0), ("down", &b.down, 3), ("up'", &b.up_prime, 1), ("down'", &b.down_prime, 2)] {
        push(format!("|{label}_z> = canonical product state"), k.distance(&Ket::basis(4, idx))?);
    }

    // Bell states: Ψ± pair |↑′⟩|↓⟩ (geometry ↓ on both), Φ± pair |↑⟩|↓⟩
    let canon_bell = canon.two.bell(Axis::Z);
    let bell = bell_states(&two, Axis::Z, &BellCoefficients::default(), 0.0)?;
    let pairs = [
        ("Psi+", &bell.psi_plus, embed_two_ket(&canon_bell.psi_plus, 1, 1)),
        ("Psi-", &bell.psi_minus, embed_two_ket(&canon_bell.psi_minus, 1, 1)),
    ];
    for (label, k, target) in pairs {
        push(format!("{label}_z = canonical Bell state"), k.distance(&target)?);
    }
    // Φ± mix |↑↑g↑↑g⟩ and |↓↓g↓↓g⟩, so the geometry follows the matter
    for (label, k, c) in [("Phi+", &bell.phi_plus, &canon_bell.phi_plus), ("Phi-", &bell.phi_minus, &canon_bell.phi_minus)] {
        let mut raw = vec![C::<R>::zero(); 16];
        raw[0] = c.raw()[0].clone();
        raw[15] = c.raw()[3].clone();
        push(format!("{label}_z = canonical Bell state"), k.distance(&Ket::with_radicand(raw, c.radicand().clone()))?);
    }
    Ok(out)
}
