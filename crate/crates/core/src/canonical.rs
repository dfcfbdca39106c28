//! Canonical spin-1/2 quantum mechanics: the β → 0 reference for every
//! smeared construction.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Ket, Matrix};
use crate::pauli::{pauli, Axis};
use crate::scalar::{ci, cr, half, Real, C};

#[derive(Clone, Debug)]
pub struct CanonicalOperators<R: Real> {
    pub hbar: R,
    pub pauli: [Matrix<R>; 3],
    /// sᵢ = (ħ/2)σᵢ
    pub s: [Matrix<R>; 3],
    pub s2: Matrix<R>,
    pub s_plus: Matrix<R>,
    pub s_minus: Matrix<R>,
    pub two: CanonicalTwoParticle<R>,
}

#[derive(Clone, Debug)]
pub struct CanonicalTwoParticle<R: Real> {
    pub hbar: R,
    /// Totals sᵢ⊗𝕀 + 𝕀⊗sᵢ.
    pub s: [Matrix<R>; 3],
    pub s2: Matrix<R>,
    pub s_plus: Matrix<R>,
    pub s_minus: Matrix<R>,
    /// |↑↑⟩, |↓↓⟩, (|↑↓⟩+|↓↑⟩)/√2.
    pub triplet: [Ket<R>; 3],
    /// (0,−1,1,0)/√2.
    pub singlet: Ket<R>,
}

/// The four Bell states along one axis.
#[derive(Clone, Debug, PartialEq)]
pub struct BellStates<R: Real> {
    pub psi_plus: Ket<R>,
    pub psi_minus: Ket<R>,
    pub phi_plus: Ket<R>,
    pub phi_minus: Ket<R>,
}

impl<R: Real> BellStates<R> {
    pub fn as_array(&self) -> [(&'static str, &Ket<R>); 4] {
        [
            ("psi_plus", &self.psi_plus),
            ("psi_minus", &self.psi_minus),
            ("phi_plus", &self.phi_plus),
            ("phi_minus", &self.phi_minus),
        ]
    }
}

pub fn build_canonical<R: Real>(hbar: R) -> Result<CanonicalOperators<R>> {
    if hbar <= R::zero() {
        return Err(Error::InvalidParameter(format!("hbar must be positive, got {hbar}")));
    }
    let p = Axis::ALL.map(pauli::<R>);
    let h2 = hbar.clone() * half::<R>();
    let s = p.clone().map(|m| m.scale_real(&h2));
    let s2 = sum_of_squares(&s);
    let (s_plus, s_minus) = ladder(&s);
    let two = canonical_two_particle(hbar.clone())?;
    Ok(CanonicalOperators { hbar, pauli: p, s, s2, s_plus, s_minus, two })
}

pub(crate) fn sum_of_squares<R: Real>(s: &[Matrix<R>; 3]) -> Matrix<R> {
    let n = s[0].rows();
    s.iter().fold(Matrix::zeros(n, n), |acc, m| acc.add(&m.matmul(m).expect("square")).expect("shape"))
}

/// (sₓ + i s_y, sₓ − i s_y)
pub(crate) fn ladder<R: Real>(s: &[Matrix<R>; 3]) -> (Matrix<R>, Matrix<R>) {
    let iy = s[1].scale(&ci(0, 1));
    (s[0].add(&iy).expect("shape"), s[0].sub(&iy).expect("shape"))
}

/// `(up, +ħ/2)` and `(down, −ħ/2)` along `axis`.
pub fn canonical_eigenbasis<R: Real>(axis: Axis, hbar: &R) -> [(Ket<R>, R); 2] {
    let two = R::from_i64(2);
    let (up, down) = match axis {
        Axis::Z => (Ket::basis(2, 0), Ket::basis(2, 1)),
        Axis::X => (
            Ket::with_radicand(vec![ci(1, 0), ci(1, 0)], two.clone()),
            Ket::with_radicand(vec![ci(1, 0), ci(-1, 0)], two),
        ),
        Axis::Y => (
            Ket::with_radicand(vec![ci(1, 0), ci(0, 1)], two.clone()),
            Ket::with_radicand(vec![ci(1, 0), ci(0, -1)], two),
        ),
    };
    let e = hbar.clone() * half::<R>();
    [(up, e.clone()), (down, -e)]
}

pub fn canonical_two_particle<R: Real>(hbar: R) -> Result<CanonicalTwoParticle<R>> {
    if hbar <= R::zero() {
        return Err(Error::InvalidParameter(format!("hbar must be positive, got {hbar}")));
    }
    let i2 = Matrix::<R>::identity(2);
    let h2 = hbar.clone() * half::<R>();
    let s = Axis::ALL.map(|a| {
        let one = pauli::<R>(a).scale_real(&h2);
        one.kron(&i2).add(&i2.kron(&one)).expect("shape")
    });
    let s2 = sum_of_squares(&s);
    let (s_plus, s_minus) = ladder(&s);
    let two = R::from_i64(2);
    let triplet = [
        Ket::basis(4, 0),
        Ket::basis(4, 3),
        Ket::with_radicand(vec![ci(0, 0), ci(1, 0), ci(1, 0), ci(0, 0)], two.clone()),
    ];
    let singlet = Ket::with_radicand(vec![ci(0, 0), ci(-1, 0), ci(1, 0), ci(0, 0)], two);
    Ok(CanonicalTwoParticle { hbar, s, s2, s_plus, s_minus, triplet, singlet })
}

impl<R: Real> CanonicalTwoParticle<R> {
    /// Bell states built from the one-particle eigenbasis along `axis`.
    pub fn bell(&self, axis: Axis) -> BellStates<R> {
        let [(up, _), (down, _)] = canonical_eigenbasis::<R>(axis, &self.hbar);
        let two = R::from_i64(2);
        let comb = |a: Ket<R>, b: Ket<R>, sign: i64| {
            a.try_add(&b.scale(&ci(sign, 0))).expect("equal radicands").div_sqrt(&two)
        };
        BellStates {
            psi_plus: comb(up.kron(&down), down.kron(&up), 1),
            psi_minus: comb(up.kron(&down), down.kron(&up), -1),
            phi_plus: comb(up.kron(&up), down.kron(&down), 1),
            phi_minus: comb(up.kron(&up), down.kron(&down), -1),
        }
    }

    /// s²-eigenvalue of the triplet, 2ħ².
    pub fn triplet_s2(&self) -> R {
        R::from_i64(2) * self.hbar.clone() * self.hbar.clone()
    }
}

/// Canonical sz eigenvalue for each triplet member: +ħ, −ħ, 0.
pub fn triplet_sz<R: Real>(hbar: &R) -> [C<R>; 3] {
    [cr(hbar.clone()), cr(-hbar.clone()), C::zero()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eigen_residual;
    use crate::pauli::levi_civita;
    use num_rational::BigRational as Q;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Q {
        Q::ratio(n, d)
    }

    #[test]
    fn one_particle_matrices() {
        let c = build_canonical(Q::from_i64(1)).unwrap();
        assert_eq!(c.s[2], Matrix::from_rows(vec![vec![cr(q(1, 2)), ci(0, 0)], vec![ci(0, 0), cr(q(-1, 2))]]));
        assert_eq!(c.s2, Matrix::identity(2).scale_real(&q(3, 4)));
        assert!(build_canonical(Q::from_i64(0)).is_err());
    }

    #[test]
    fn lie_and_clifford_exact() {
        let h = Q::from_i64(2);
        let c = build_canonical(h.clone()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut rhs = Matrix::zeros(2, 2);
                for k in 0..3 {
                    let e = levi_civita(i, j, k);
                    if e != 0 {
                        rhs = rhs.add(&c.s[k].scale(&C::new(Q::zero(), h.clone() * Q::from_i64(e)))).unwrap();
                    }
                }
                assert_eq!(c.s[i].commutator(&c.s[j]).unwrap(), rhs);
                let anti = if i == j {
                    Matrix::identity(2).scale_real(&(h.clone() * h.clone() / Q::from_i64(2)))
                } else {
                    Matrix::zeros(2, 2)
                };
                assert_eq!(c.s[i].anticommutator(&c.s[j]).unwrap(), anti);
            }
        }
        // hbar = 2: [sx, sy] = 2i sz
        assert_eq!(c.s[0].commutator(&c.s[1]).unwrap(), c.s[2].scale(&ci(0, 2)));
    }

    #[test]
    fn eigenbasis_and_braket() {
        let h = Q::from_i64(1);
        let c = build_canonical(h.clone()).unwrap();
        for a in Axis::ALL {
            let b = canonical_eigenbasis(a, &h);
            for (v, e) in &b {
                assert_eq!(eigen_residual(&c.s[a.index()], v, &cr(e.clone())).unwrap(), 0.0);
                assert_eq!(v.norm_sqr(), Q::one());
            }
            assert_eq!(b[0].0.inner(&b[1].0).unwrap(), C::zero());
        }
        // y-up = (|↑z⟩ + i|↓z⟩)/√2
        let y = &canonical_eigenbasis::<Q>(Axis::Y, &h)[0].0;
        let re = Ket::basis(2, 0).try_add(&Ket::basis(2, 1).scale(&ci(0, 1))).unwrap().div_sqrt(&Q::from_i64(2));
        assert_eq!(y.distance(&re).unwrap(), 0.0);
    }

    #[test]
    fn two_particle_spectrum_and_flips() {
        let h = Q::from_i64(1);
        let t = canonical_two_particle(h.clone()).unwrap();
        let sz = triplet_sz(&h);
        for (k, v) in t.triplet.iter().enumerate() {
            assert_eq!(eigen_residual(&t.s[2], v, &sz[k]).unwrap(), 0.0);
            assert_eq!(eigen_residual(&t.s2, v, &cr(t.triplet_s2())).unwrap(), 0.0);
        }
        assert_eq!(eigen_residual(&t.s2, &t.singlet, &C::zero()).unwrap(), 0.0);
        assert_eq!(eigen_residual(&t.s[2], &t.singlet, &C::zero()).unwrap(), 0.0);
        // s₋|↑↑⟩ = ħ(|↑↓⟩ + |↓↑⟩), s₊|↑↑⟩ = 0
        let uu = Ket::<Q>::basis(4, 0);
        let target = Ket::new(vec![ci(0, 0), ci(1, 0), ci(1, 0), ci(0, 0)]);
        assert_eq!(uu.apply(&t.s_minus).unwrap(), target);
        assert_eq!(uu.apply(&t.s_plus).unwrap().norm_sqr(), Q::zero());
        assert_eq!(Ket::<Q>::basis(4, 1).apply(&t.s_minus).unwrap(), Ket::basis(4, 3));
        assert_eq!(Ket::<Q>::basis(4, 3).apply(&t.s_minus).unwrap().norm_sqr(), Q::zero());
    }

    #[test]
    fn bell_states_relations() {
        let h = Q::from_i64(1);
        let t = canonical_two_particle(h.clone()).unwrap();
        let z = t.bell(Axis::Z);
        assert_eq!(z.psi_plus.distance(&t.triplet[2]).unwrap(), 0.0);
        // Ψ₋ equals the singlet up to a global sign.
        assert_eq!(z.psi_minus.distance(&t.singlet.scale(&ci(-1, 0))).unwrap(), 0.0);
        for a in Axis::ALL {
            let b = t.bell(a);
            assert_eq!(eigen_residual(&t.s2, &b.psi_minus, &C::zero()).unwrap(), 0.0);
            for (_, k) in [("", &b.psi_plus), ("", &b.phi_plus), ("", &b.phi_minus)] {
                assert_eq!(eigen_residual(&t.s2, k, &cr(t.triplet_s2())).unwrap(), 0.0);
            }
        }
    }
}
