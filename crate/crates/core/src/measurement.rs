//! Projective spin measurement on one smeared particle.
//!
//! Each outcome ±(ħ+β)/2 is twofold degenerate. The projector onto an outcome
//! is (𝕀 ± Σᵢ)/2 with Σᵢ = 2Sᵢ/(ħ+β), which is exact in both backends, and the
//! post-measurement state is the normalized projection (Lüders rule).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Ket, Matrix};
use crate::parallel::{map_indexed, Execution};
use crate::pauli::Axis;
use crate::scalar::{half, Real, C};
use crate::spin_one::{eigenbasis, SpinOperatorSet};

/// Shots drawn from one RNG stream. Chunk `k` uses stream `k` of the seeded
/// generator, so counts are identical for any thread count.
pub const SHOTS_PER_CHUNK: u64 = 4096;

#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementRecord<R: Real> {
    pub axis: Axis,
    /// `true` for +(ħ+β)/2.
    pub up: bool,
    pub eigenvalue: R,
    pub probability: R,
    pub post_state: Ket<R>,
    pub subspace_dim: usize,
}

/// (𝕀 ± Σᵢ)/2.
pub fn projector<R: Real>(ops: &SpinOperatorSet<R>, axis: Axis, up: bool) -> Matrix<R> {
    let sigma = ops.sigma(axis);
    let id = Matrix::identity(4);
    let m = if up { id.add(&sigma) } else { id.sub(&sigma) };
    m.expect("4x4").scale_real(&half::<R>())
}

fn check_state<R: Real>(state: &Ket<R>, tol: f64) -> Result<()> {
    if state.dim() != 4 {
        return Err(Error::Dimension(format!("one-particle state must have dim 4, got {}", state.dim())));
    }
    state.require_normalized(tol)
}

/// Both outcomes with their exact probabilities; outcomes of probability zero
/// are omitted since they have no post-measurement state.
pub fn outcomes<R: Real>(
    state: &Ket<R>,
    ops: &SpinOperatorSet<R>,
    axis: Axis,
    tol: f64,
) -> Result<Vec<MeasurementRecord<R>>> {
    check_state(state, tol)?;
    let mut out = Vec::with_capacity(2);
    for up in [true, false] {
        let projected = state.apply(&projector(ops, axis, up))?;
        let probability = projected.norm_sqr();
        if probability.is_zero() {
            continue;
        }
        let e = ops.half_total();
        out.push(MeasurementRecord {
            axis,
            up,
            eigenvalue: if up { e } else { -e },
            probability,
            post_state: projected.normalized()?,
            subspace_dim: 2,
        });
    }
    Ok(out)
}

/// One measurement. With a seed, a single outcome is sampled; without one,
/// every outcome of nonzero probability is returned.
pub fn measure<R: Real>(
    state: &Ket<R>,
    ops: &SpinOperatorSet<R>,
    axis: Axis,
    seed: Option<u64>,
    tol: f64,
) -> Result<Vec<MeasurementRecord<R>>> {
    let all = outcomes(state, ops, axis, tol)?;
    let Some(seed) = seed else { return Ok(all) };
    let u: f64 = ChaCha8Rng::seed_from_u64(seed).gen();
    let mut acc = 0.0;
    for rec in &all {
        acc += rec.probability.to_f64();
        if u < acc {
            return Ok(vec![rec.clone()]);
        }
    }
    Ok(all.into_iter().last().into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionalProbability<R: Real> {
    pub probability: R,
    /// Both measurements along the same axis: the answer is trivially 0 or 1.
    pub same_axis: bool,
}

/// Probability that a measurement along `second` gives `second_up`, starting
/// from the post-measurement state α|sⱼ⟩ + α′|s′ⱼ⟩ of a first measurement
/// along `first` with sign `first_up`.
///
/// The x and y eigenvector pairs are not mutually orthogonal, so the mixture
/// is renormalized before the second measurement.
pub fn conditional_probability<R: Real>(
    ops: &SpinOperatorSet<R>,
    first: Axis,
    first_up: bool,
    second: Axis,
    second_up: bool,
    mixing: (C<R>, C<R>),
    tol: f64,
) -> Result<ConditionalProbability<R>> {
    let (a, b) = mixing;
    let w = (a.norm_sqr() + b.norm_sqr()).to_f64();
    if (w - 1.0).abs() > tol.max(if R::EXACT { 0.0 } else { 1e-12 }) {
        return Err(Error::NotNormalized(w));
    }
    let basis = eigenbasis(&ops.params, first);
    let (v, vp) = basis.pair(first_up);
    let state = v.scale(&a).try_add(&vp.scale(&b))?.normalized()?;
    let p = state.apply(&projector(ops, second, second_up))?.norm_sqr();
    Ok(ConditionalProbability { probability: p, same_axis: first == second })
}

/// A leaf of the enumerated outcome tree of a measurement sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch<R: Real> {
    pub outcomes: Vec<bool>,
    pub probability: R,
    pub state: Ket<R>,
}

/// All outcome sequences of measuring along `axes` in order, with exact
/// joint probabilities. Zero-probability branches are pruned.
pub fn sequence_tree<R: Real>(
    state: &Ket<R>,
    ops: &SpinOperatorSet<R>,
    axes: &[Axis],
    tol: f64,
) -> Result<Vec<Branch<R>>> {
    check_state(state, tol)?;
    let mut level = vec![Branch { outcomes: Vec::new(), probability: R::one(), state: state.clone() }];
    for &axis in axes {
        let mut next = Vec::with_capacity(level.len() * 2);
        for br in level {
            // post states are exactly normalized, so `tol` never matters here
            for rec in outcomes(&br.state, ops, axis, tol)? {
                let mut seq = br.outcomes.clone();
                seq.push(rec.up);
                next.push(Branch {
                    outcomes: seq,
                    probability: br.probability.clone() * rec.probability,
                    state: rec.post_state,
                });
            }
        }
        level = next;
    }
    Ok(level)
}

/// Shot counts per leaf, sampled from the leaf probabilities.
pub fn sample_counts(probabilities: &[f64], shots: u64, seed: u64, exec: Execution) -> Vec<u64> {
    let mut cdf = Vec::with_capacity(probabilities.len());
    let mut acc = 0.0;
    for p in probabilities {
        acc += p;
        cdf.push(acc);
    }
    let total = acc;
    let n_chunks = shots.div_ceil(SHOTS_PER_CHUNK) as usize;
    let per_chunk = map_indexed(n_chunks, exec, |c| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(c as u64);
        let start = c as u64 * SHOTS_PER_CHUNK;
        let n = SHOTS_PER_CHUNK.min(shots - start);
        let mut counts = vec![0u64; cdf.len()];
        for _ in 0..n {
            let u = rng.gen::<f64>() * total;
            let k = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
            counts[k] += 1;
        }
        counts
    });
    per_chunk.into_iter().fold(vec![0u64; probabilities.len()], |mut acc, c| {
        for (a, b) in acc.iter_mut().zip(c) {
            *a += b;
        }
        acc
    })
}

/// Wilson score interval for `hits` successes in `trials` at normal quantile `z`.
pub fn wilson_interval(hits: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = hits as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Empirical and analytic probability of one outcome at `step`, given the
/// outcomes `prefix` of the earlier steps.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionalStat {
    pub step: usize,
    pub axis: Axis,
    pub prefix: Vec<bool>,
    pub up: bool,
    pub analytic: f64,
    pub hits: u64,
    pub trials: u64,
    pub frequency: f64,
    pub wilson_low: f64,
    pub wilson_high: f64,
}

impl ConditionalStat {
    pub fn contains_analytic(&self) -> bool {
        self.wilson_low <= self.analytic && self.analytic <= self.wilson_high
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SequenceStats {
    pub axes: Vec<Axis>,
    pub shots: u64,
    pub seed: u64,
    pub conditionals: Vec<ConditionalStat>,
}

/// Monte Carlo over a measurement sequence, with each conditional frequency
/// reported alongside its exact value and a 95% Wilson interval.
pub fn simulate_sequence<R: Real>(
    state: &Ket<R>,
    ops: &SpinOperatorSet<R>,
    axes: &[Axis],
    shots: u64,
    seed: u64,
    exec: Execution,
    tol: f64,
) -> Result<SequenceStats> {
    let leaves = sequence_tree(state, ops, axes, tol)?;
    let probs: Vec<f64> = leaves.iter().map(|b| b.probability.to_f64()).collect();
    let counts = sample_counts(&probs, shots, seed, exec);
    let mass = |prefix: &[bool]| -> (f64, u64) {
        leaves.iter().zip(&probs).zip(&counts).filter(|((b, _), _)| b.outcomes.starts_with(prefix)).fold(
            (0.0, 0),
            |(p, n), ((_, q), c)| (p + q, n + c),
        )
    };
    let mut conditionals = Vec::new();
    for (step, &axis) in axes.iter().enumerate() {
        let mut prefixes: Vec<Vec<bool>> = leaves.iter().map(|b| b.outcomes[..step].to_vec()).collect();
        prefixes.dedup();
        for prefix in prefixes {
            let (p_parent, trials) = mass(&prefix);
            for up in [true, false] {
                let mut seq = prefix.clone();
                seq.push(up);
                let (p, hits) = mass(&seq);
                let (wilson_low, wilson_high) = wilson_interval(hits, trials, 1.96);
                conditionals.push(ConditionalStat {
                    step,
                    axis,
                    prefix: prefix.clone(),
                    up,
                    analytic: if p_parent > 0.0 { p / p_parent } else { 0.0 },
                    hits,
                    trials,
                    frequency: if trials > 0 { hits as f64 / trials as f64 } else { 0.0 },
                    wilson_low,
                    wilson_high,
                });
            }
        }
    }
    Ok(SequenceStats { axes: axes.to_vec(), shots, seed, conditionals })
}

/// A named eigenvector such as `up_z`, `down'_x` (`downp_x` also accepted),
/// or a comma-separated amplitude list like `1,0,0,1` or `1+2i,0,-i,0.5`.
/// Amplitude lists are normalized.
pub fn parse_state<R: Real>(ops: &SpinOperatorSet<R>, spec: &str) -> Result<Ket<R>> {
    let spec = spec.trim();
    if let Some((name, axis)) = spec.rsplit_once('_') {
        if let Ok(axis) = axis.parse::<Axis>() {
            let b = eigenbasis(&ops.params, axis);
            return match name {
                "up" => Ok(b.up),
                "down" => Ok(b.down),
                "up'" | "upp" => Ok(b.up_prime),
                "down'" | "downp" => Ok(b.down_prime),
                _ => Err(Error::Parse(spec.to_string())),
            };
        }
    }
    let amps = spec.split(',').map(parse_complex::<R>).collect::<Result<Vec<_>>>()?;
    if amps.len() != 4 {
        return Err(Error::Dimension(format!("expected 4 amplitudes, got {}", amps.len())));
    }
    Ket::new(amps).normalized()
}

/// `re`, `im i`, `re+im i`, `re-im i`, `i`, `-i`.
pub fn parse_complex<R: Real>(s: &str) -> Result<C<R>> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(s.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(C::new(R::parse_literal(&t)?, R::zero()));
    };
    // split at the last sign that is not a leading sign or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (R::parse_literal(&body[..k])?, &body[k..]),
        None => (R::zero(), body),
    };
    let im = match im {
        "" | "+" => R::one(),
        "-" => -R::one(),
        x => R::parse_literal(x)?,
    };
    Ok(C::new(re, im))
}
