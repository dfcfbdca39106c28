use num_complex::Complex64;
use num_rational::BigRational as Q;
use proptest::prelude::*;

use smearlab::gur::gur_report;
use smearlab::measurement::{conditional_probability, outcomes, sample_counts, wilson_interval};
use smearlab::parallel::Execution;
use smearlab::phase_space::{egup_dp, quadrature};
use smearlab::scalar::{parse_rational, Real, C};
use smearlab::spin_one::{build_one_particle, verify_operator_structure, verify_subalgebras};
use smearlab::spin_two::{build_two_particle, verify_two_particle_algebra};
use smearlab::su2::{build_sigma, closure_check, fundamental_relation_check, group_element_unchecked};
use smearlab::{check::worst, Axis, Ket, Matrix, SmearingParams};

fn delta() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), 1e-9..1e-3f64, 0.0..4.0f64]
}

/// δ = (n/d)², so √δ is rational.
fn square_delta() -> impl Strategy<Value = Q> {
    (0i64..6, 1i64..6).prop_map(|(n, d)| Q::ratio(n * n, d * d))
}

fn unit4() -> impl Strategy<Value = [f64; 4]> {
    prop::array::uniform4(-1.0..1.0f64)
        .prop_filter("nonzero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-3)
        .prop_map(|v| {
            let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.map(|x| x / n)
        })
}

fn state() -> impl Strategy<Value = Ket<f64>> {
    prop::array::uniform8(-1.0..1.0f64)
        .prop_filter("nonzero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-3)
        .prop_map(|v| {
            let amps = (0..4).map(|k| C::new(v[2 * k], v[2 * k + 1])).collect();
            Ket::new(amps).normalized().unwrap()
        })
}

/// Quaternion → 2×2 complex matrix u₀𝕀 + i(u·σ); the product of two such
/// matrices read back as a quaternion. Independent of the library.
fn quat_matrix(u: &[f64; 4]) -> [[Complex64; 2]; 2] {
    let i = Complex64::i();
    let [a, b, c, d] = *u;
    [[a + i * d, i * b + c], [i * b - c, a - i * d]]
}

fn matrix_quat(m: &[[Complex64; 2]; 2]) -> [f64; 4] {
    [m[0][0].re, m[0][1].im, m[0][1].re, m[0][0].im]
}

fn mul2(a: &[[Complex64; 2]; 2], b: &[[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn one_particle_algebra_holds(d in delta()) {
        let ops = build_one_particle(&SmearingParams::from_delta(d).unwrap());
        let scale = (1.0 + d) * (1.0 + d);
        prop_assert!(worst(&verify_subalgebras(&ops)) <= 1e-12 * scale);
        prop_assert!(worst(&verify_operator_structure(&ops)) <= 1e-12 * scale);
    }

    #[test]
    fn casimir_is_scalar(d in delta()) {
        let ops = build_one_particle(&SmearingParams::from_delta(d).unwrap());
        let c = 0.75 * (1.0 + d) * (1.0 + d);
        prop_assert!(ops.s2.max_diff(&Matrix::identity(4).scale_real(&c)) <= 1e-12 * c);
    }

    #[test]
    fn sigma_generators_square_to_identity(d in delta()) {
        let s = build_sigma(&SmearingParams::from_delta(d).unwrap());
        prop_assert!(fundamental_relation_check(&s) <= 1e-12);
    }

    #[test]
    fn variance_decomposition_and_robertson(d in delta(), psi in state()) {
        let ops = build_one_particle(&SmearingParams::from_delta(d).unwrap());
        let r = gur_report(&psi, &ops, 1e-9).unwrap();
        prop_assert!(r.max_full_residual() <= 1e-12 * (1.0 + d) * (1.0 + d));
        prop_assert!(r.robertson_holds());
        for a in &r.axes {
            // short form misses exactly the matter–geometry covariance
            prop_assert!((a.short_residual - a.cov_matter_geometry.abs()).abs() <= 1e-12 * (1.0 + d) * (1.0 + d));
        }
    }

    #[test]
    fn cross_axis_conditional_is_half(d in delta(), m in unit4(), i in 0usize..3, j in 1usize..3, fu: bool, su: bool) {
        let ops = build_one_particle(&SmearingParams::from_delta(d).unwrap());
        let first = Axis::from_index(i);
        let second = Axis::from_index((i + j) % 3);
        let mix = (C::new(m[0], m[1]), C::new(m[2], m[3]));
        let p = conditional_probability(&ops, first, fu, second, su, mix, 1e-12).unwrap();
        prop_assert!((p.probability - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn luders_outcomes_are_complete(d in delta(), psi in state(), i in 0usize..3) {
        let ops = build_one_particle(&SmearingParams::from_delta(d).unwrap());
        let axis = Axis::from_index(i);
        let recs = outcomes(&psi, &ops, axis, 1e-9).unwrap();
        let total: f64 = recs.iter().map(|r| r.probability).sum();
        prop_assert!((total - 1.0).abs() <= 1e-12);
        for r in &recs {
            // the post-measurement state is an eigenvector with the recorded eigenvalue
            let moved = r.post_state.apply(&ops.s[axis.index()]).unwrap();
            let want = r.post_state.scale(&C::new(r.eigenvalue, 0.0));
            prop_assert!(moved.distance(&want).unwrap() <= 1e-10 * (1.0 + d));
            // and measuring again along the same axis is certain
            let again = outcomes(&r.post_state, &ops, axis, 1e-9).unwrap();
            prop_assert!(again.iter().any(|x| x.up == r.up && (x.probability - 1.0).abs() <= 1e-10));
        }
    }

    #[test]
    fn closure_matches_quaternion_matrices(d in delta(), u in unit4(), v in unit4()) {
        let s = build_sigma(&SmearingParams::from_delta(d).unwrap());
        prop_assert!(closure_check(&u, &v, &s) <= 1e-12);
        // Σ obeys the Pauli relations, so 𝔘 multiplies like the 2×2 matrices
        let w = matrix_quat(&mul2(&quat_matrix(&u), &quat_matrix(&v)));
        let prod = group_element_unchecked(&u, &s).matmul(&group_element_unchecked(&v, &s)).unwrap();
        prop_assert!(prod.max_diff(&group_element_unchecked(&w, &s)) <= 1e-12);
    }

    #[test]
    fn sampling_is_conserved_and_mode_independent(p in 0.0..1.0f64, shots in 0u64..20_000, seed: u64) {
        let probs = [p, 1.0 - p];
        let a = sample_counts(&probs, shots, seed, Execution::Parallel);
        prop_assert_eq!(a.iter().sum::<u64>(), shots);
        prop_assert_eq!(a, sample_counts(&probs, shots, seed, Execution::Sequential));
    }

    #[test]
    fn wilson_contains_frequency(trials in 1u64..100_000, frac in 0.0..=1.0f64) {
        let hits = ((trials as f64) * frac).floor() as u64;
        let (lo, hi) = wilson_interval(hits, trials, 1.96);
        let f = hits as f64 / trials as f64;
        prop_assert!(0.0 <= lo && lo <= f + 1e-12 && f <= hi + 1e-12 && hi <= 1.0);
    }

    #[test]
    fn egup_root_solves_the_bound(dx in 0.01..50.0f64, alpha in 0.0..2.0f64, eta in 0.0..0.01f64, hbar in 0.1..2.0f64) {
        if let Some(dp) = egup_dp(dx, alpha, eta, hbar) {
            let lhs = dx * dp;
            let rhs = 0.5 * hbar * (1.0 + alpha * dx * dx + eta * dp * dp);
            prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs);
            prop_assert!(dp > 0.0);
        }
    }

    #[test]
    fn quadrature_dominates(a in 0.0..1e3f64, b in 0.0..1e3f64) {
        let q = quadrature(a, b);
        prop_assert!(q >= a.max(b) && q <= a + b + 1e-9);
    }

    #[test]
    fn fractions_parse_exactly(n in -1000i64..1000, d in 1i64..1000) {
        prop_assert_eq!(parse_rational(&format!("{n}/{d}")).unwrap(), Q::ratio(n, d));
    }
}

proptest! {
    // exact builds are slower; fewer cases
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn exact_algebra_is_exact(d in square_delta()) {
        let p = SmearingParams::from_delta(d).unwrap();
        let ops = build_one_particle(&p);
        prop_assert_eq!(worst(&verify_subalgebras(&ops)), 0.0);
        prop_assert_eq!(worst(&verify_operator_structure(&ops)), 0.0);
        prop_assert_eq!(fundamental_relation_check(&build_sigma(&p)), 0.0);
    }

    #[test]
    fn exact_two_particle_algebra(d in square_delta()) {
        let two = build_two_particle(&SmearingParams::from_delta(d).unwrap());
        prop_assert_eq!(worst(&verify_two_particle_algebra(&two)), 0.0);
    }

    #[test]
    fn exact_normalization(v in prop::array::uniform4((-9i64..10, -9i64..10))) {
        prop_assume!(v.iter().any(|&(a, b)| a != 0 || b != 0));
        let k = Ket::new(v.iter().map(|&(a, b)| C::new(Q::from_i64(a), Q::from_i64(b))).collect()).normalized().unwrap();
        prop_assert_eq!(k.norm_sqr(), Q::from_i64(1));
    }
}
