//! Acceptance run: one PASS/FAIL line per criterion, each under its own
//! time budget. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational as Q;
use smearlab::canonical::build_canonical;
use smearlab::check::worst;
use smearlab::fixtures::printed_one_particle;
use smearlab::gur::gur_batch;
use smearlab::limits::canonical_limit_residuals;
use smearlab::measurement::{conditional_probability, parse_state, simulate_sequence};
use smearlab::parallel::Execution;
use smearlab::phase_space::{convolution_check, egup_bound, linspace, GaussianSmearedState, Grid, PhysicalConstants, RawConstants};
use smearlab::random::random_mixing;
use smearlab::scalar::{cr, Real, C};
use smearlab::spin_one::{braket_table, build_one_particle, eigen_residuals, eigenbasis, spin_flip_check, verify_operator_structure, verify_subalgebras};
use smearlab::spin_two::{build_two_particle, eigenfamilies, family_residuals, gram_residual, two_particle_flips, verify_two_particle_algebra};
use smearlab::su2::{build_sigma, fundamental_relation_check, su2_batch};
use smearlab::{Axis, Matrix, SmearingParams};

const FLOAT_DELTAS: [f64; 4] = [0.0, 1e-6, 0.25, 1.0];
const EXEC: Execution = Execution::Parallel;

fn exact_deltas() -> [Q; 3] {
    [Q::from_i64(0), Q::ratio(1, 4), Q::from_i64(1)]
}

/// (pass, detail)
type Outcome = Result<(bool, String), smearlab::Error>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn fixtures() -> Outcome {
    let mut float_worst = 0.0f64;
    for d in [1e-6, 0.25, 1.0, 9.0 / 16.0] {
        let p = SmearingParams::from_delta(d)?;
        let ops = build_one_particle(&p);
        let printed = printed_one_particle(&p);
        for a in 0..3 {
            float_worst = float_worst.max(ops.s[a].max_diff(&printed[a]));
        }
    }
    let p = SmearingParams::from_delta(Q::ratio(1, 4))?;
    let ops = build_one_particle(&p);
    let printed = printed_one_particle(&p);
    let exact = (0..3).map(|a| ops.s[a].max_diff(&printed[a])).fold(0.0, f64::max);
    // (ħ+β)²·3/4 with ħ = 1, β = 1/4
    let cas = Matrix::identity(4).scale(&cr(Q::ratio(75, 64)));
    let casimir = ops.s2.max_diff(&cas);
    Ok((
        float_worst <= 1e-15 && exact == 0.0 && casimir == 0.0,
        format!("float max {float_worst:.1e}, exact max {exact}, S^2 - 3(hbar+beta)^2/4 I = {casimir}"),
    ))
}

fn algebra() -> Outcome {
    let mut fw = 0.0f64;
    for d in FLOAT_DELTAS {
        let p = SmearingParams::from_delta(d)?;
        let ops = build_one_particle(&p);
        fw = fw.max(worst(&verify_subalgebras(&ops))).max(worst(&verify_operator_structure(&ops)));
        fw = fw.max(worst(&verify_two_particle_algebra(&build_two_particle(&p))));
    }
    let mut ew = 0.0f64;
    for d in exact_deltas() {
        let p = SmearingParams::from_delta(d)?;
        let ops = build_one_particle(&p);
        ew = ew.max(worst(&verify_subalgebras(&ops))).max(worst(&verify_operator_structure(&ops)));
        ew = ew.max(worst(&verify_two_particle_algebra(&build_two_particle(&p))));
    }
    Ok((fw <= 1e-12 && ew == 0.0, format!("float max {fw:.1e}, exact max {ew}")))
}

fn eigen_at<R: Real>(delta: R) -> Result<(usize, usize, f64, f64), smearlab::Error> {
    let p = SmearingParams::from_delta(delta)?;
    let ops = build_one_particle(&p);
    let two = build_two_particle(&p);
    // one residual against Sᵢ and one against S² per vector
    let mut n_one = 0;
    let mut res = 0.0f64;
    for axis in Axis::ALL {
        let rs = eigen_residuals(&ops, &eigenbasis(&p, axis));
        n_one += rs.len();
        res = res.max(worst(&rs));
    }
    let fams = eigenfamilies(&two, Axis::Z)?;
    res = res.max(worst(&family_residuals(&two, Axis::Z, &fams)));
    let gram = braket_table(&eigenbasis(&p, Axis::Z))?.max_deviation().max(gram_residual(&fams)?);
    Ok((n_one, fams.len(), res, gram))
}

fn eigen() -> Outcome {
    let mut res = 0.0f64;
    let mut gram = 0.0f64;
    let mut counts = (0, 0);
    for d in FLOAT_DELTAS {
        let (a, b, r, g) = eigen_at(d)?;
        counts = (a / 2, b);
        res = res.max(r);
        gram = gram.max(g);
    }
    let (_, _, er, eg) = eigen_at(Q::ratio(1, 4))?;
    Ok((
        counts.1 == 16 && res <= 1e-12 && gram <= 1e-12 && er == 0.0 && eg == 0.0,
        format!("{} one-particle and {} two-particle eigenvectors, float max {res:.1e}, Gram {gram:.1e}; exact {er}/{eg}", counts.0, counts.1),
    ))
}

fn measurement() -> Outcome {
    let mut analytic = 0.0f64;
    for d in [1e-6, 0.25, 1.0] {
        let ops = build_one_particle(&SmearingParams::from_delta(d)?);
        for k in 0..100 {
            let mix = random_mixing(2024, k);
            for first in Axis::ALL {
                for second in Axis::ALL.into_iter().filter(|&s| s != first) {
                    for (fu, su) in [(true, true), (true, false), (false, true), (false, false)] {
                        let p = conditional_probability(&ops, first, fu, second, su, mix, 1e-12)?.probability;
                        analytic = analytic.max((p - 0.5).abs());
                    }
                }
            }
        }
    }
    let ops = build_one_particle(&SmearingParams::from_delta(0.25)?);
    let mut mc = 0.0f64;
    for (state, axes) in [("up_z", [Axis::Z, Axis::X]), ("up'_z", [Axis::Z, Axis::Y]), ("down_x", [Axis::X, Axis::Z])] {
        let s = parse_state(&ops, state)?;
        let stats = simulate_sequence(&s, &ops, &axes, 100_000, 42, EXEC, 1e-12)?;
        for c in stats.conditionals.iter().filter(|c| c.step == 1 && c.trials > 0) {
            mc = mc.max((c.frequency - 0.5).abs());
        }
    }
    Ok((analytic <= 1e-12 && mc <= 0.01, format!("analytic max |P - 1/2| {analytic:.1e} over 100 mixings; Monte Carlo max {mc:.4}")))
}

fn flips() -> Outcome {
    let mut fw = 0.0f64;
    for d in FLOAT_DELTAS {
        let p = SmearingParams::from_delta(d)?;
        let ops = build_one_particle(&p);
        fw = fw.max(worst(&spin_flip_check(&ops, &eigenbasis(&p, Axis::Z))?));
        fw = fw.max(worst(&two_particle_flips(&build_two_particle(&p))?));
    }
    let mut ew = 0.0f64;
    for d in [Q::ratio(1, 4), Q::ratio(9, 16)] {
        let p = SmearingParams::from_delta(d)?;
        let ops = build_one_particle(&p);
        ew = ew.max(worst(&spin_flip_check(&ops, &eigenbasis(&p, Axis::Z))?));
        ew = ew.max(worst(&two_particle_flips(&build_two_particle(&p))?));
    }
    // ⟨down'_z|S₋|up_z⟩ at δ = 9/16 is √(1+δ)(ħ + i√(ħβ)) = (5/4)(1 + 3i/4)
    let p = SmearingParams::from_delta(Q::ratio(9, 16))?;
    let ops = build_one_particle(&p);
    let b = eigenbasis(&p, Axis::Z);
    let got = b.down_prime.inner(&b.up.apply(&ops.s_minus)?)?;
    let coeff_ok = got == C::new(Q::ratio(5, 4), Q::ratio(15, 16));
    Ok((fw <= 1e-12 && ew == 0.0 && coeff_ok, format!("float max {fw:.1e}, exact max {ew}, coefficient <down'|S-|up> = {got}")))
}

fn gur() -> Outcome {
    let mut full = 0.0f64;
    let mut violations = 0;
    let mut missing = 0.0f64;
    for d in [1e-6, 0.25, 1.0] {
        let ops = build_one_particle(&SmearingParams::from_delta(d)?);
        let s = gur_batch(&ops, 10_000, 7, 1e-12, EXEC)?;
        full = full.max(s.max_full_residual);
        violations += s.robertson_violations;
        missing = missing.max(s.max_matter_geometry);
    }
    Ok((
        full <= 1e-12 && violations == 0,
        format!("10^4 states per delta: max full-expansion residual {full:.1e}, {violations} Robertson violations; max omitted matter-geometry covariance {missing:.3} (informational)"),
    ))
}

fn su2() -> Outcome {
    let mut m = [0.0f64; 4];
    for d in [1e-6, 0.25, 1.0] {
        let b = su2_batch(&build_sigma(&SmearingParams::from_delta(d)?), 10_000, 99, EXEC);
        for (a, v) in m.iter_mut().zip([b.max_det, b.max_trace, b.max_unitarity, b.max_closure]) {
            *a = a.max(v);
        }
    }
    let mut exact = 0.0f64;
    for d in exact_deltas() {
        exact = exact.max(fundamental_relation_check(&build_sigma(&SmearingParams::from_delta(d)?)));
    }
    Ok((
        m[0] <= 1e-10 && m[1] <= 1e-12 && m[2] <= 1e-12 && m[3] <= 1e-10 && exact == 0.0,
        format!("det {:.1e}, trace {:.1e}, unitarity {:.1e}, closure {:.1e}; exact fundamental relation {exact}", m[0], m[1], m[2], m[3]),
    ))
}

fn limits() -> Outcome {
    let fw = worst(&canonical_limit_residuals(&SmearingParams::<f64>::canonical())?);
    let ew = worst(&canonical_limit_residuals(&SmearingParams::<Q>::canonical())?);
    // the oracle itself: sᵢ = (ħ/2)σᵢ with ħ = 1
    let canon = build_canonical(1.0)?;
    let oracle = Axis::ALL.iter().map(|&a| canon.s[a.index()].max_diff(&canon.pauli[a.index()].scale_real(&0.5))).fold(0.0, f64::max);
    Ok((fw <= 1e-15 && ew == 0.0 && oracle == 0.0, format!("float max {fw:.1e}, exact max {ew}")))
}

fn phase_space() -> Outcome {
    let mut rel = 0.0f64;
    for (sp, sg, beta) in [(1.0, 0.5, 0.25), (1.0, 1.0, 1.0), (2.0, 0.7, 0.1)] {
        let r = convolution_check(&GaussianSmearedState::minimal(sp, sg, 1.0, beta)?, Grid { extent_sigmas: 12.0, points: 4096 }, EXEC)?;
        rel = rel.max(r.position.relative_error).max(r.momentum.relative_error);
    }
    let k = PhysicalConstants::derive(RawConstants::cgs_default())?;
    let delta_ok = (1e-62..=1e-60).contains(&k.delta);
    let mut hyper = 0.0f64;
    for hbar in [1.0, 0.5, 2.0] {
        let c = egup_bound(0.0, 0.0, hbar, &linspace(0.01, 100.0, 1000))?;
        for s in &c.samples {
            hyper = hyper.max(s.dp.map_or(f64::INFINITY, |p| (s.dx * p - hbar / 2.0).abs()));
        }
    }
    Ok((
        rel <= 1e-6 && delta_ok && hyper <= 1e-12,
        format!("convolution max relative error {rel:.1e}; beta/hbar = {:.2e}; |dx dp - hbar/2| max {hyper:.1e}", k.delta),
    ))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "golden fixtures", budget: Duration::from_secs(1), run: fixtures },
        Criterion { id: 2, name: "algebra suites", budget: Duration::from_secs(2), run: algebra },
        Criterion { id: 3, name: "eigenstate suite", budget: Duration::from_secs(2), run: eigen },
        Criterion { id: 4, name: "measurement statistics", budget: Duration::from_secs(10), run: measurement },
        Criterion { id: 5, name: "spin flips", budget: Duration::from_secs(10), run: flips },
        Criterion { id: 6, name: "uncertainty decomposition", budget: Duration::from_secs(10), run: gur },
        Criterion { id: 7, name: "SU(2) representation", budget: Duration::from_secs(10), run: su2 },
        Criterion { id: 8, name: "canonical limit", budget: Duration::from_secs(10), run: limits },
        Criterion { id: 9, name: "phase space", budget: Duration::from_secs(5), run: phase_space },
    ];
    let mut failed = 0;
    for c in criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok((ok, d)) => (ok && elapsed <= c.budget, d),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} - {} ({} ms, budget {} ms) {}",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.name,
            elapsed.as_millis(),
            c.budget.as_millis(),
            detail
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
