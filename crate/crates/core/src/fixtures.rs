//! Matrices and amplitude lists exactly as printed, used as golden fixtures
//! against the definitional constructions.

use num_traits::{One, Zero};

use crate::linalg::{Ket, Matrix};
use crate::params::SmearingParams;
use crate::scalar::{ci, cr, half, Real, C};

/// Printed Sₓ, S_y, S_z for one particle, written in ħ, β and √(ħβ).
pub fn printed_one_particle<R: Real>(p: &SmearingParams<R>) -> [Matrix<R>; 3] {
    let h = p.hbar().clone();
    let b = p.beta();
    let s = p.sqrt_hbar_beta();
    let hf = half::<R>();
    let z = C::<R>::zero();
    // (re + i·im)/2
    let e = |re: R, im: R| C::new(re * hf.clone(), im * hf.clone());
    let n = |v: R| -v;
    let sx = Matrix::from_rows(vec![
        vec![z.clone(), e(b.clone(), s.clone()), e(h.clone(), n(s.clone())), z.clone()],
        vec![e(b.clone(), n(s.clone())), z.clone(), z.clone(), e(h.clone(), s.clone())],
        vec![e(h.clone(), s.clone()), z.clone(), z.clone(), e(b.clone(), n(s.clone()))],
        vec![z.clone(), e(h.clone(), n(s.clone())), e(b.clone(), s.clone()), z.clone()],
    ]);
    // −(iβ − s)/2 = (s − iβ)/2, etc.
    let sy = Matrix::from_rows(vec![
        vec![z.clone(), e(s.clone(), n(b.clone())), e(n(s.clone()), n(h.clone())), z.clone()],
        vec![e(s.clone(), b.clone()), z.clone(), z.clone(), e(s.clone(), n(h.clone()))],
        vec![e(n(s.clone()), h.clone()), z.clone(), z.clone(), e(n(s.clone()), n(b.clone()))],
        vec![z.clone(), e(s.clone(), h.clone()), e(n(s.clone()), b.clone()), z.clone()],
    ]);
    let sz = Matrix::from_rows(vec![
        vec![e(h.clone() + b.clone(), R::zero()), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), e(h.clone() - b.clone(), R::zero()), C::new(R::zero(), s.clone()), z.clone()],
        vec![z.clone(), C::new(R::zero(), n(s.clone())), e(b.clone() - h.clone(), R::zero()), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), e(n(h + b), R::zero())],
    ]);
    [sx, sy, sz]
}

/// Printed 4×4 group element u₀𝕀 + i u·Σ, entry by entry.
pub fn printed_group_element<R: Real>(u: &[R; 4], p: &SmearingParams<R>) -> Matrix<R> {
    let [u0, u1, u2, u3] = u.clone().map(cr);
    let i = ci::<R>(0, 1);
    let r = cr(p.sqrt_delta().clone());
    let d = cr(p.delta().clone());
    let one = C::<R>::one();
    let two = ci::<R>(2, 0);
    let opd = &one + &d;
    let omd = &one - &d;
    let mi_r = &r - &i; // −i + √δ
    let pi_r = &r + &i; // i + √δ
    let z = C::<R>::zero();
    Matrix::from_rows(vec![
        vec![
            &u0 + &i * &u3,
            (&u2 + &i * &u1) * &r / &mi_r,
            (&u1 - &i * &u2) / &mi_r,
            z.clone(),
        ],
        vec![
            (-&u2 + &i * &u1) * &r / &pi_r,
            &u0 + &i * &omd / &opd * &u3,
            -(&two * &u3 * &r) / &opd,
            -(&u1 - &i * &u2) / &pi_r,
        ],
        vec![
            -(&u1 + &i * &u2) / &pi_r,
            &two * &u3 * &r / &opd,
            &u0 - &i * &omd / &opd * &u3,
            (&u2 + &i * &u1) * &r / &pi_r,
        ],
        vec![
            z,
            (&u1 + &i * &u2) / &mi_r,
            (-&u2 + &i * &u1) * &r / &mi_r,
            &u0 - &i * &u3,
        ],
    ])
}

/// Which printed two-particle matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrintedTwo {
    Sz,
    S2,
    SPlus,
    SMinus,
}

/// `(row, col, numerator)`; the numerator lists Gaussian-integer coefficients
/// of 1, √δ, δ, δ^{3/2}, δ². The printed entry is
/// `(ħ+β)^k · numerator / (1+δ)²`, with k = 2 for S² and 1 otherwise.
pub(crate) type Entry = (usize, usize, [(i64, i64); 5]);

/// Entries of the printed S² that differ from the definitional construction:
/// three are complex conjugates of the constructed value and (13, 7) is
/// missing from its row.
pub const S2_MISPRINTS: [(usize, usize); 4] = [(3, 6), (6, 12), (9, 3), (13, 7)];

pub fn printed_two_particle<R: Real>(which: PrintedTwo, p: &SmearingParams<R>) -> Matrix<R> {
    let (table, power) = match which {
        PrintedTwo::Sz => (PRINTED_SZ, 1),
        PrintedTwo::S2 => (PRINTED_S2, 2),
        PrintedTwo::SPlus => (PRINTED_SP, 1),
        PrintedTwo::SMinus => (PRINTED_SM, 1),
    };
    let r = p.sqrt_delta().clone();
    let d = p.one_plus_delta();
    let mut pref = R::one() / (d.clone() * d);
    for _ in 0..power {
        pref = pref * p.total();
    }
    let mut m = Matrix::zeros(16, 16);
    for (i, j, coef) in table {
        let mut acc = C::<R>::zero();
        let mut rk = R::one();
        for (re, im) in coef {
            acc = acc + ci::<R>(*re, *im) * cr(rk.clone());
            rk = rk * r.clone();
        }
        m.set(*i, *j, acc * cr(pref.clone()));
    }
    m
}

/// Printed amplitude lists of the sixteen two-particle eigenvectors.
/// Each amplitude is a coefficient list over 1, √δ, δ; the normaliser is
/// `1/√(radicand)` with radicand one of 1, 1+δ, (1+δ)², 2(1+δ), 2(1+δ)².
pub fn printed_family_ket<R: Real>(label: &str, p: &SmearingParams<R>) -> Option<Ket<R>> {
    let (norm, amps): (u8, &[(usize, [(i64, i64); 3])]) = match label {
        "psi1a" => (0, &[(0, [(1, 0), (0, 0), (0, 0)])]),
        "psi1b" => (1, &[(4, ONE), (8, MIR)]),
        "psi1c" => (1, &[(1, ONE), (2, MIR)]),
        "psi1d" => (2, &[(5, ONE), (6, MIR), (9, MIR), (10, MD)]),
        "psi2a" => (0, &[(15, ONE)]),
        "psi2b" => (1, &[(7, MIR), (11, ONE)]),
        "psi2c" => (1, &[(13, MIR), (14, ONE)]),
        "psi2d" => (2, &[(5, MD), (6, MIR), (9, MIR), (10, ONE)]),
        "psi3a" => (3, &[(7, ONE), (11, MIR), (13, ONE), (14, MIR)]),
        "psi3b" => (3, &[(1, MIR), (2, ONE), (4, MIR), (8, ONE)]),
        "psi3c" => (4, &[(5, MIR), (6, ONE), (9, MD), (10, MIR), (12, SQ)]),
        "psi3d" => (4, &[(3, SQ), (5, MIR), (6, MD), (9, ONE), (10, MIR)]),
        "phia" => (3, &[(7, ONE), (11, MIR), (13, NEG), (14, IR)]),
        "phib" => (3, &[(1, MIR), (2, ONE), (4, IR), (8, NEG)]),
        "phic" => (4, &[(5, MIR), (6, ONE), (9, MD), (10, MIR), (12, NSQ)]),
        "phid" => (4, &[(3, NSQ), (5, MIR), (6, MD), (9, ONE), (10, MIR)]),
        _ => return None,
    };
    let r = p.sqrt_delta().clone();
    let d = p.one_plus_delta();
    let mut v = vec![C::<R>::zero(); 16];
    for (idx, coef) in amps {
        let mut acc = C::<R>::zero();
        let mut rk = R::one();
        for (re, im) in coef {
            acc = acc + ci::<R>(*re, *im) * cr(rk.clone());
            rk = rk * r.clone();
        }
        v[*idx] = acc;
    }
    let two = R::from_i64(2);
    let radicand = match norm {
        0 => R::one(),
        1 => d,
        2 => d.clone() * d,
        3 => two * d,
        _ => two * d.clone() * d,
    };
    Some(Ket::with_radicand(v, radicand))
}

const ONE: [(i64, i64); 3] = [(1, 0), (0, 0), (0, 0)];
const NEG: [(i64, i64); 3] = [(-1, 0), (0, 0), (0, 0)];
const MIR: [(i64, i64); 3] = [(0, 0), (0, -1), (0, 0)];
const IR: [(i64, i64); 3] = [(0, 0), (0, 1), (0, 0)];
const MD: [(i64, i64); 3] = [(0, 0), (0, 0), (-1, 0)];
/// (1 − i√δ)²
const SQ: [(i64, i64); 3] = [(1, 0), (0, -2), (-1, 0)];
const NSQ: [(i64, i64); 3] = [(-1, 0), (0, 2), (1, 0)];

pub(crate) const PRINTED_SZ: &[Entry] = &[
    (0, 0, [(1, 0), (0, 0), (2, 0), (0, 0), (1, 0)]),
    (1, 1, [(1, 0), (0, 0), (1, 0), (0, 0), (0, 0)]),
    (1, 2, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (2, 1, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (2, 2, [(0, 0), (0, 0), (1, 0), (0, 0), (1, 0)]),
    (4, 4, [(1, 0), (0, 0), (1, 0), (0, 0), (0, 0)]),
    (4, 8, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (5, 5, [(1, 0), (0, 0), (0, 0), (0, 0), (-1, 0)]),
    (5, 6, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (5, 9, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (6, 5, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (6, 10, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (7, 7, [(0, 0), (0, 0), (-1, 0), (0, 0), (-1, 0)]),
    (7, 11, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (8, 4, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (8, 8, [(0, 0), (0, 0), (1, 0), (0, 0), (1, 0)]),
    (9, 5, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (9, 10, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (10, 6, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (10, 9, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (10, 10, [(-1, 0), (0, 0), (0, 0), (0, 0), (1, 0)]),
    (11, 7, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (11, 11, [(-1, 0), (0, 0), (-1, 0), (0, 0), (0, 0)]),
    (13, 13, [(0, 0), (0, 0), (-1, 0), (0, 0), (-1, 0)]),
    (13, 14, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (14, 13, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (14, 14, [(-1, 0), (0, 0), (-1, 0), (0, 0), (0, 0)]),
    (15, 15, [(-1, 0), (0, 0), (-2, 0), (0, 0), (-1, 0)]),
];

pub(crate) const PRINTED_S2: &[Entry] = &[
    (0, 0, [(2, 0), (0, 0), (4, 0), (0, 0), (2, 0)]),
    (1, 1, [(2, 0), (0, 0), (3, 0), (0, 0), (1, 0)]),
    (1, 2, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (1, 4, [(0, 0), (0, 0), (1, 0), (0, 0), (1, 0)]),
    (1, 8, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (2, 1, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (2, 2, [(1, 0), (0, 0), (3, 0), (0, 0), (2, 0)]),
    (2, 4, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (2, 8, [(1, 0), (0, 0), (1, 0), (0, 0), (0, 0)]),
    (3, 3, [(1, 0), (0, 0), (2, 0), (0, 0), (1, 0)]),
    (3, 5, [(0, 0), (0, 1), (2, 0), (0, -1), (0, 0)]),
    (3, 6, [(0, 0), (0, 0), (-1, 0), (0, -2), (1, 0)]),
    (3, 9, [(1, 0), (0, -2), (-1, 0), (0, 0), (0, 0)]),
    (3, 10, [(0, 0), (0, 1), (2, 0), (0, -1), (0, 0)]),
    (4, 1, [(0, 0), (0, 0), (1, 0), (0, 0), (1, 0)]),
    (4, 2, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (4, 4, [(2, 0), (0, 0), (3, 0), (0, 0), (1, 0)]),
    (4, 8, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (5, 3, [(0, 0), (0, -1), (2, 0), (0, 1), (0, 0)]),
    (5, 5, [(2, 0), (0, 0), (2, 0), (0, 0), (2, 0)]),
    (5, 6, [(0, 0), (0, 1), (0, 0), (0, -1), (0, 0)]),
    (5, 9, [(0, 0), (0, 1), (0, 0), (0, -1), (0, 0)]),
    (5, 10, [(0, 0), (0, 0), (-2, 0), (0, 0), (0, 0)]),
    (5, 12, [(0, 0), (0, -1), (2, 0), (0, 1), (0, 0)]),
    (6, 3, [(0, 0), (0, 0), (-1, 0), (0, -2), (1, 0)]),
    (6, 5, [(0, 0), (0, -1), (0, 0), (0, 1), (0, 0)]),
    (6, 6, [(1, 0), (0, 0), (4, 0), (0, 0), (1, 0)]),
    (6, 9, [(0, 0), (0, 0), (2, 0), (0, 0), (0, 0)]),
    (6, 10, [(0, 0), (0, -1), (0, 0), (0, 1), (0, 0)]),
    (6, 12, [(1, 0), (0, -2), (-1, 0), (0, 0), (0, 0)]),
    (7, 7, [(1, 0), (0, 0), (3, 0), (0, 0), (2, 0)]),
    (7, 11, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (7, 13, [(1, 0), (0, 0), (1, 0), (0, 0), (0, 0)]),
    (7, 14, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (8, 1, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (8, 2, [(1, 0), (0, 0), (1, 0), (0, 0), (0, 0)]),
    (8, 4, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (8, 8, [(1, 0), (0, 0), (3, 0), (0, 0), (2, 0)]),
    (9, 3, [(1, 0), (0, -2), (-1, 0), (0, 0), (0, 0)]),
    (9, 5, [(0, 0), (0, -1), (0, 0), (0, 1), (0, 0)]),
    (9, 6, [(0, 0), (0, 0), (2, 0), (0, 0), (0, 0)]),
    (9, 9, [(1, 0), (0, 0), (4, 0), (0, 0), (1, 0)]),
    (9, 10, [(0, 0), (0, -1), (0, 0), (0, 1), (0, 0)]),
    (9, 12, [(0, 0), (0, 0), (-1, 0), (0, -2), (1, 0)]),
    (10, 3, [(0, 0), (0, -1), (2, 0), (0, 1), (0, 0)]),
    (10, 5, [(0, 0), (0, 0), (-2, 0), (0, 0), (0, 0)]),
    (10, 6, [(0, 0), (0, 1), (0, 0), (0, -1), (0, 0)]),
    (10, 9, [(0, 0), (0, 1), (0, 0), (0, -1), (0, 0)]),
    (10, 10, [(2, 0), (0, 0), (2, 0), (0, 0), (2, 0)]),
    (10, 12, [(0, 0), (0, -1), (2, 0), (0, 1), (0, 0)]),
    (11, 7, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (11, 11, [(2, 0), (0, 0), (3, 0), (0, 0), (1, 0)]),
    (11, 13, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (11, 14, [(0, 0), (0, 0), (1, 0), (0, 0), (1, 0)]),
    (12, 5, [(0, 0), (0, 1), (2, 0), (0, -1), (0, 0)]),
    (12, 6, [(1, 0), (0, -2), (-1, 0), (0, 0), (0, 0)]),
    (12, 9, [(0, 0), (0, 0), (-1, 0), (0, 2), (1, 0)]),
    (12, 10, [(0, 0), (0, 1), (2, 0), (0, -1), (0, 0)]),
    (12, 12, [(1, 0), (0, 0), (2, 0), (0, 0), (1, 0)]),
    (13, 11, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (13, 13, [(1, 0), (0, 0), (3, 0), (0, 0), (2, 0)]),
    (13, 14, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (14, 7, [(0, 0), (0, -1), (0, 0), (0, -1), (0, 0)]),
    (14, 11, [(0, 0), (0, 0), (1, 0), (0, 0), (1, 0)]),
    (14, 13, [(0, 0), (0, 1), (0, 0), (0, 1), (0, 0)]),
    (14, 14, [(2, 0), (0, 0), (3, 0), (0, 0), (1, 0)]),
    (15, 15, [(2, 0), (0, 0), (4, 0), (0, 0), (2, 0)]),
];

pub(crate) const PRINTED_SP: &[Entry] = &[
    (0, 1, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (0, 2, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (0, 4, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (0, 8, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (1, 3, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (1, 5, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (1, 9, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (2, 3, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (2, 6, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (2, 10, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (3, 7, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (3, 11, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (4, 5, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (4, 6, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (4, 12, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (5, 7, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (5, 13, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (6, 7, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (6, 14, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (7, 15, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (8, 9, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (8, 10, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (8, 12, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (9, 11, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (9, 13, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (10, 11, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (10, 14, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (11, 15, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (12, 13, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (12, 14, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (13, 15, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (14, 15, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
];

pub(crate) const PRINTED_SM: &[Entry] = &[
    (1, 0, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (2, 0, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (3, 1, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (3, 2, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (4, 0, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (5, 1, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (5, 4, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (6, 2, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (6, 4, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (7, 3, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (7, 5, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (7, 6, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (8, 0, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (9, 1, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (9, 8, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (10, 2, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (10, 8, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (11, 3, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (11, 9, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (11, 10, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (12, 4, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (12, 8, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (13, 5, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (13, 9, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (13, 12, [(0, 0), (0, -1), (1, 0), (0, -1), (1, 0)]),
    (14, 6, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (14, 10, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (14, 12, [(1, 0), (0, 1), (1, 0), (0, 1), (0, 0)]),
    (15, 7, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (15, 11, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
    (15, 13, [(1, 0), (0, -1), (1, 0), (0, -1), (0, 0)]),
    (15, 14, [(0, 0), (0, 1), (1, 0), (0, 1), (1, 0)]),
];
