//! One-particle smeared spin: Sᵢ = 𝒮ᵢ + 𝒮′ᵢ + 𝕊ᵢ on the 4-dim matter ⊗
//! geometry space.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::canonical::{ladder, sum_of_squares};
use crate::check::Residual;
use crate::error::Result;
use crate::linalg::{eigen_residual, Ket, Matrix};
use crate::params::SmearingParams;
use crate::pauli::{levi_civita, pauli, Axis};
use crate::scalar::{ci, cr, half, Real, C};

#[derive(Clone, Debug)]
pub struct SpinOperatorSet<R: Real> {
    pub params: SmearingParams<R>,
    pub s: [Matrix<R>; 3],
    pub s2: Matrix<R>,
    pub s_plus: Matrix<R>,
    pub s_minus: Matrix<R>,
    /// 𝒮ᵢ = (ħ/2)σᵢ⊗𝕀
    pub sub_s: [Matrix<R>; 3],
    /// 𝒮′ᵢ = (β/2)𝕀⊗σᵢ
    pub sub_s_prime: [Matrix<R>; 3],
    /// 𝕊ᵢ = (√(ħβ)/2)εᵢⱼₖσⱼ⊗σₖ
    pub sub_cross: [Matrix<R>; 3],
}

impl<R: Real> SpinOperatorSet<R> {
    /// +(ħ+β)/2
    pub fn half_total(&self) -> R {
        self.params.total() * half::<R>()
    }

    /// Σᵢ = 2Sᵢ/(ħ+β)
    pub fn sigma(&self, axis: Axis) -> Matrix<R> {
        self.s[axis.index()].scale_real(&(R::from_i64(2) / self.params.total()))
    }
}

pub fn build_one_particle<R: Real>(params: &SmearingParams<R>) -> SpinOperatorSet<R> {
    let i2 = Matrix::<R>::identity(2);
    let p = Axis::ALL.map(pauli::<R>);
    let h2 = params.hbar().clone() * half::<R>();
    let b2 = params.beta() * half::<R>();
    let x2 = params.sqrt_hbar_beta() * half::<R>();

    let sub_s = p.clone().map(|m| m.kron(&i2).scale_real(&h2));
    let sub_s_prime = p.clone().map(|m| i2.kron(&m).scale_real(&b2));
    let sub_cross = std::array::from_fn(|i| {
        let mut acc = Matrix::zeros(4, 4);
        for j in 0..3 {
            for k in 0..3 {
                let e = levi_civita(i, j, k);
                if e != 0 {
                    acc = acc.add(&p[j].kron(&p[k]).scale(&ci(e, 0))).expect("shape");
                }
            }
        }
        acc.scale_real(&x2)
    });
    let s = std::array::from_fn(|i| {
        sub_s[i].add(&sub_s_prime[i]).and_then(|m| m.add(&sub_cross[i])).expect("shape")
    });
    let s2 = sum_of_squares(&s);
    let (s_plus, s_minus) = ladder(&s);
    SpinOperatorSet { params: params.clone(), s, s2, s_plus, s_minus, sub_s, sub_s_prime, sub_cross }
}

/// Σₖ εᵢⱼₖ·coef·Mₖ
fn eps_sum<R: Real>(i: usize, j: usize, m: &[Matrix<R>; 3], coef: &C<R>) -> Matrix<R> {
    let n = m[0].rows();
    (0..3).fold(Matrix::zeros(n, n), |acc, k| {
        let e = levi_civita(i, j, k);
        if e == 0 {
            acc
        } else {
            acc.add(&m[k].scale(&(coef * ci(e, 0)))).expect("shape")
        }
    })
}

fn kd<R: Real>(i: usize, j: usize, n: usize, v: &R) -> Matrix<R> {
    if i == j {
        Matrix::identity(n).scale_real(v)
    } else {
        Matrix::zeros(n, n)
    }
}

/// Residual of every subcomponent commutator/anticommutator identity and of
/// the combined rescaled Lie and Clifford algebras. Each entry is the max
/// elementwise residual over all (i, j).
pub fn verify_subalgebras<R: Real>(ops: &SpinOperatorSet<R>) -> Vec<Residual> {
    let p = &ops.params;
    let (a, b, x) = (&ops.sub_s, &ops.sub_s_prime, &ops.sub_cross);
    let ih = C::new(R::zero(), p.hbar().clone());
    let ib = C::new(R::zero(), p.beta());
    let it = C::new(R::zero(), p.total());
    let hh = p.hbar().clone() * p.hbar().clone() * half::<R>();
    let bb = p.beta() * p.beta() * half::<R>();
    let hb = p.hbar().clone() * p.beta();
    let tt = p.total() * p.total() * half::<R>();
    let n = 4;

    type Ident<'a, R> = (&'a str, &'a str, Box<dyn Fn(usize, usize) -> (Matrix<R>, Matrix<R>) + 'a>);
    let comm = |m: &Matrix<R>, k: &Matrix<R>| m.commutator(k).expect("square");
    let anti = |m: &Matrix<R>, k: &Matrix<R>| m.anticommutator(k).expect("square");
    let idents: Vec<Ident<R>> = vec![
        ("[S_i,S_j] = i hbar eps S_k", "matter subalgebra", Box::new(|i, j| (comm(&a[i], &a[j]), eps_sum(i, j, a, &ih)))),
        ("[S'_i,S'_j] = i beta eps S'_k", "geometry subalgebra", Box::new(|i, j| (comm(&b[i], &b[j]), eps_sum(i, j, b, &ib)))),
        ("[S_i,S'_j] = 0", "matter/geometry commute", Box::new(|i, j| (comm(&a[i], &b[j]), Matrix::zeros(n, n)))),
        (
            "[S_i,X_j] - [S_j,X_i] = i hbar eps X_k",
            "matter/interaction mixed commutator",
            Box::new(|i, j| (comm(&a[i], &x[j]).sub(&comm(&a[j], &x[i])).unwrap(), eps_sum(i, j, x, &ih))),
        ),
        (
            "[S'_i,X_j] - [S'_j,X_i] = i beta eps X_k",
            "geometry/interaction mixed commutator",
            Box::new(|i, j| (comm(&b[i], &x[j]).sub(&comm(&b[j], &x[i])).unwrap(), eps_sum(i, j, x, &ib))),
        ),
        (
            "[X_i,X_j] = i beta eps S_k + i hbar eps S'_k",
            "interaction commutator",
            Box::new(|i, j| (comm(&x[i], &x[j]), eps_sum(i, j, a, &ib).add(&eps_sum(i, j, b, &ih)).unwrap())),
        ),
        ("{S_i,S_j} = hbar^2/2 delta_ij", "matter Clifford", Box::new(|i, j| (anti(&a[i], &a[j]), kd(i, j, n, &hh)))),
        ("{S'_i,S'_j} = beta^2/2 delta_ij", "geometry Clifford", Box::new(|i, j| (anti(&b[i], &b[j]), kd(i, j, n, &bb)))),
        (
            "{S_i,X_j} + {S_j,X_i} = 0",
            "matter/interaction Clifford",
            Box::new(|i, j| (anti(&a[i], &x[j]).add(&anti(&a[j], &x[i])).unwrap(), Matrix::zeros(n, n))),
        ),
        (
            "{S'_i,X_j} + {S'_j,X_i} = 0",
            "geometry/interaction Clifford",
            Box::new(|i, j| (anti(&b[i], &x[j]).add(&anti(&b[j], &x[i])).unwrap(), Matrix::zeros(n, n))),
        ),
        (
            "{X_i,X_j} = hbar beta delta_ij - {S_i,S'_j} - {S_j,S'_i}",
            "interaction Clifford",
            Box::new(|i, j| {
                let rhs = kd(i, j, n, &hb).sub(&anti(&a[i], &b[j])).unwrap().sub(&anti(&a[j], &b[i])).unwrap();
                (anti(&x[i], &x[j]), rhs)
            }),
        ),
        (
            "[S_i,S_j] = i(hbar+beta) eps S_k",
            "rescaled Lie algebra",
            Box::new(|i, j| (comm(&ops.s[i], &ops.s[j]), eps_sum(i, j, &ops.s, &it))),
        ),
        ("[S_i,S^2] = 0", "Casimir", Box::new(|i, _| (comm(&ops.s[i], &ops.s2), Matrix::zeros(n, n)))),
        (
            "{S_i,S_j} = (hbar+beta)^2/2 delta_ij",
            "rescaled Clifford algebra",
            Box::new(|i, j| (anti(&ops.s[i], &ops.s[j]), kd(i, j, n, &tt))),
        ),
    ];
    idents
        .into_iter()
        .map(|(label, anchor, f)| {
            let worst = (0..3)
                .flat_map(|i| (0..3).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let (l, r) = f(i, j);
                    l.max_diff(&r)
                })
                .fold(0.0, f64::max);
            Residual::new(label, anchor, worst)
        })
        .collect()
}

/// Hermiticity, tracelessness, the Casimir value of S² and the S± definitions.
pub fn verify_operator_structure<R: Real>(ops: &SpinOperatorSet<R>) -> Vec<Residual> {
    let mut out = Vec::new();
    let herm = ops.s.iter().map(|m| m.max_diff(&m.dagger())).fold(0.0, f64::max);
    out.push(Residual::new("S_i Hermitian", "operator structure", herm));
    let tr = ops.s.iter().map(|m| m.trace().map_or(f64::INFINITY, |t| t.norm_sqr().to_f64().sqrt())).fold(0.0, f64::max);
    out.push(Residual::new("tr S_i = 0", "operator structure", tr));
    let cas = Matrix::identity(4).scale_real(&(R::from_i64(3) * ops.half_total() * ops.half_total()));
    out.push(Residual::new("S^2 = 3(hbar+beta)^2/4 I", "Casimir", ops.s2.max_diff(&cas)));
    let sum = ops.sub_s[2].add(&ops.sub_s_prime[2]).and_then(|m| m.add(&ops.sub_cross[2])).unwrap();
    out.push(Residual::new("S_z = S_z + S'_z + X_z", "subcomponent split", ops.s[2].max_diff(&sum)));
    out
}

/// up, down, up′, down′ along one axis; eigenvalues ±(ħ+β)/2.
#[derive(Clone, Debug, PartialEq)]
pub struct QubitBasis<R: Real> {
    pub axis: Axis,
    pub up: Ket<R>,
    pub down: Ket<R>,
    pub up_prime: Ket<R>,
    pub down_prime: Ket<R>,
    /// +(ħ+β)/2
    pub eigenvalue: R,
}

pub const BASIS_LABELS: [&str; 4] = ["up", "down", "up'", "down'"];

impl<R: Real> QubitBasis<R> {
    pub fn kets(&self) -> [&Ket<R>; 4] {
        [&self.up, &self.down, &self.up_prime, &self.down_prime]
    }

    /// Eigenvalue carried by each of [`Self::kets`].
    pub fn eigenvalues(&self) -> [R; 4] {
        let e = self.eigenvalue.clone();
        [e.clone(), -e.clone(), e.clone(), -e]
    }

    /// The pair of same-sign eigenvectors (unprimed, primed).
    pub fn pair(&self, up: bool) -> (&Ket<R>, &Ket<R>) {
        if up {
            (&self.up, &self.up_prime)
        } else {
            (&self.down, &self.down_prime)
        }
    }
}

/// Closed-form eigenvectors of Sᵢ.
pub fn eigenbasis<R: Real>(params: &SmearingParams<R>, axis: Axis) -> QubitBasis<R> {
    let r = params.sqrt_delta().clone();
    let d = params.one_plus_delta();
    let two_d = R::from_i64(2) * d.clone();
    let z = C::<R>::zero();
    let c = |re: i64, im_r: i64| C::new(R::from_i64(re), R::from_i64(im_r) * r.clone());
    let rr = |re_r: i64, im: i64| C::new(R::from_i64(re_r) * r.clone(), R::from_i64(im));
    let k = |v: [C<R>; 4], rad: &R| Ket::with_radicand(v.to_vec(), rad.clone());
    let (up, down, up_prime, down_prime) = match axis {
        Axis::Z => (
            Ket::basis(4, 0),
            Ket::basis(4, 3),
            k([z.clone(), C::one(), c(0, -1), z.clone()], &d),
            k([z.clone(), c(0, -1), C::one(), z], &d),
        ),
        Axis::Y => (
            k([c(-1, 1), rr(-1, 0), ci(0, -1), z.clone()], &two_d),
            k([c(1, -1), rr(-1, 0), ci(0, -1), z.clone()], &two_d),
            k([c(0, -1), rr(1, -1), z.clone(), C::one()], &two_d),
            k([c(0, -1), rr(-1, 1), z, C::one()], &two_d),
        ),
        Axis::X => (
            k([c(1, -1), c(0, -1), C::one(), z.clone()], &two_d),
            k([c(1, -1), c(0, 1), ci(-1, 0), z.clone()], &two_d),
            k([c(0, -1), c(-1, -1), z.clone(), ci(-1, 0)], &two_d),
            k([c(0, -1), c(1, 1), z, ci(-1, 0)], &two_d),
        ),
    };
    QubitBasis { axis, up, down, up_prime, down_prime, eigenvalue: params.total() * half::<R>() }
}

/// Eigen-residual of each basis vector against Sᵢ and S².
pub fn eigen_residuals<R: Real>(ops: &SpinOperatorSet<R>, basis: &QubitBasis<R>) -> Vec<Residual> {
    let s = &ops.s[basis.axis.index()];
    let cas = cr(R::from_i64(3) * ops.half_total() * ops.half_total());
    basis
        .kets()
        .iter()
        .zip(basis.eigenvalues())
        .zip(BASIS_LABELS)
        .flat_map(|((v, e), l)| {
            [
                Residual::new(
                    format!("S_{} |{l}_{}> = {}(hbar+beta)/2", basis.axis, basis.axis, if e >= R::zero() { "+" } else { "-" }),
                    "one-particle eigenvectors",
                    eigen_residual(s, v, &cr(e)).unwrap_or(f64::INFINITY),
                ),
                Residual::new(
                    format!("S^2 |{l}_{}> = 3(hbar+beta)^2/4", basis.axis),
                    "one-particle eigenvectors",
                    eigen_residual(&ops.s2, v, &cas).unwrap_or(f64::INFINITY),
                ),
            ]
        })
        .collect()
}

/// The x/y eigenvectors rebuilt from z-basis states; each entry is the
/// distance between the closed form and its re-expression.
pub fn reexpression_residuals<R: Real>(params: &SmearingParams<R>) -> Result<Vec<Residual>> {
    let z = eigenbasis(params, Axis::Z);
    let r = params.sqrt_delta().clone();
    let d = params.one_plus_delta();
    let two = R::from_i64(2);
    let cz = |re: i64, im_r: i64| C::new(R::from_i64(re), R::from_i64(im_r) * r.clone());
    let cr_ = |re_r: i64, im: i64| C::new(R::from_i64(re_r) * r.clone(), R::from_i64(im));
    // |↑′z⟩ + i√δ|↓′z⟩
    let prime_mix = z.up_prime.try_add(&z.down_prime.scale(&C::new(R::zero(), r.clone())))?;
    let mut out = Vec::new();
    for axis in [Axis::Y, Axis::X] {
        let target = eigenbasis(params, axis);
        // unprimed: (a/√(1+δ)|↑z⟩ ± b|↓′z⟩)/√2
        let (a, b) = match axis {
            Axis::Y => (cz(-1, 1), ci::<R>(0, -1)),
            _ => (cz(1, -1), ci::<R>(1, 0)),
        };
        let lead = z.up.scale(&a).div_sqrt(&d);
        let up = lead.try_add(&z.down_prime.scale(&b))?.div_sqrt(&two);
        let down = lead.scale(&ci(-1, 0)).try_add(&z.down_prime.scale(&b))?.div_sqrt(&two);
        let down = if axis == Axis::X { down.scale(&ci(-1, 0)) } else { down };
        // primed: (−i√δ|↑z⟩ ± |↓z⟩ ∓ c/√(1+δ)(|↑′z⟩ + i√δ|↓′z⟩))/√(2(1+δ))
        let (sign_dn, cc) = match axis {
            Axis::Y => (1, cr_(-1, 1)),
            _ => (-1, cz(1, 1)),
        };
        let head = z.up.scale(&C::new(R::zero(), -r.clone())).try_add(&z.down.scale(&ci(sign_dn, 0)))?;
        let tail = prime_mix.scale(&cc).div_sqrt(&d);
        let up_p = head.try_sub(&tail)?.div_sqrt(&(two.clone() * d.clone()));
        let down_p = head.try_add(&tail)?.div_sqrt(&(two.clone() * d.clone()));
        for (label, built, closed) in [
            ("up", up, &target.up),
            ("down", down, &target.down),
            ("up'", up_p, &target.up_prime),
            ("down'", down_p, &target.down_prime),
        ] {
            out.push(Residual::new(
                format!("|{label}_{axis}> in the z basis"),
                "z-basis re-expression",
                built.distance(closed)?,
            ));
        }
    }
    Ok(out)
}

/// √(1+δ)(ħ ± i√(ħβ)) returned as (1+δ, ħ ± i√(ħβ)).
pub fn flip_coefficient<R: Real>(params: &SmearingParams<R>, plus: bool) -> (R, C<R>) {
    let im = if plus { params.sqrt_hbar_beta() } else { -params.sqrt_hbar_beta() };
    (params.one_plus_delta(), C::new(params.hbar().clone(), im))
}

/// One-particle spin flips and S± annihilation.
pub fn spin_flip_check<R: Real>(ops: &SpinOperatorSet<R>, basis: &QubitBasis<R>) -> Result<Vec<Residual>> {
    let (d, cp) = flip_coefficient(&ops.params, true);
    let (_, cm) = flip_coefficient(&ops.params, false);
    let target = |k: &Ket<R>, c: &C<R>| k.scale(c).scale_sqrt(&d);
    let b = basis;
    let flips = [
        ("S- |up_z> = sqrt(1+delta)(hbar + i sqrt(hbar beta)) |down'_z>", &ops.s_minus, &b.up, target(&b.down_prime, &cp)),
        ("S- |up'_z> = sqrt(1+delta)(hbar - i sqrt(hbar beta)) |down_z>", &ops.s_minus, &b.up_prime, target(&b.down, &cm)),
        ("S+ |down_z> = sqrt(1+delta)(hbar + i sqrt(hbar beta)) |up'_z>", &ops.s_plus, &b.down, target(&b.up_prime, &cp)),
        ("S+ |down'_z> = sqrt(1+delta)(hbar - i sqrt(hbar beta)) |up_z>", &ops.s_plus, &b.down_prime, target(&b.up, &cm)),
    ];
    let mut out = Vec::new();
    for (label, op, from, to) in flips {
        out.push(Residual::new(label, "one-particle spin flips", from.apply(op)?.distance(&to)?));
    }
    for (label, op, v) in [
        ("S+ |up_z> = 0", &ops.s_plus, &b.up),
        ("S+ |up'_z> = 0", &ops.s_plus, &b.up_prime),
        ("S- |down_z> = 0", &ops.s_minus, &b.down),
        ("S- |down'_z> = 0", &ops.s_minus, &b.down_prime),
    ] {
        out.push(Residual::new(label, "ladder annihilation", v.apply(op)?.norm_sqr().to_f64().sqrt()));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct BraketEntry {
    pub bra: &'static str,
    pub ket: &'static str,
    pub re: f64,
    pub im: f64,
    /// Value the orthonormality table asserts (1 or 0).
    pub claimed: f64,
    /// |⟨bra|ket⟩ − claimed|
    pub deviation: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BraketTable {
    pub axis: Axis,
    pub entries: Vec<BraketEntry>,
}

impl BraketTable {
    pub fn max_deviation(&self) -> f64 {
        self.entries.iter().map(|e| e.deviation).fold(0.0, f64::max)
    }

    /// Entries of the given kind: both unprimed, both primed, or mixed.
    pub fn max_deviation_where(&self, pred: impl Fn(&BraketEntry) -> bool) -> f64 {
        self.entries.iter().filter(|e| pred(e)).map(|e| e.deviation).fold(0.0, f64::max)
    }
}

/// All 16 overlaps of a basis against the orthonormality claim. Deviations
/// are computed from exact squared overlaps, so zero means exactly zero.
pub fn braket_table<R: Real>(basis: &QubitBasis<R>) -> Result<BraketTable> {
    let kets = basis.kets();
    let mut entries = Vec::with_capacity(16);
    for (i, a) in kets.iter().enumerate() {
        for (j, b) in kets.iter().enumerate() {
            let v = a.inner_c64(b)?;
            let claimed = if i == j { 1.0 } else { 0.0 };
            let deviation = if i == j {
                // a normalized vector has ⟨a|a⟩ = norm² exactly
                (a.norm_sqr().to_f64() - 1.0).abs()
            } else {
                a.overlap_sqr(b)?.to_f64().sqrt()
            };
            entries.push(BraketEntry { bra: BASIS_LABELS[i], ket: BASIS_LABELS[j], re: v.re, im: v.im, claimed, deviation });
        }
    }
    Ok(BraketTable { axis: basis.axis, entries })
}
