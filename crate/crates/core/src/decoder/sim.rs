use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ConcatDecoder, DepolarizingChannel, PauliError};
use crate::error::{invalid, Error, Result};
use crate::gf4::{SymplecticVec, F4};

/// Monte Carlo logical failure statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationStats {
    pub trials: u64,
    pub failures: u64,
    pub rate: f64,
    /// Wilson 95% interval for the failure rate.
    pub ci_low: f64,
    pub ci_high: f64,
    pub wall_time: Duration,
}

/// The generator for trial `t`: the seed fixes the key and the trial index
/// selects the ChaCha stream, so trials are independent of scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Wilson score interval for `failures` out of `trials` at normal quantile `z`.
pub fn wilson_interval(failures: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = failures as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// Decode `trials` channel samples. `threads = None` uses the global pool.
/// Counts depend only on `(code, p, trials, seed)`.
pub fn simulate(
    decoder: &ConcatDecoder,
    channel: &DepolarizingChannel,
    trials: u64,
    seed: u64,
    threads: Option<usize>,
) -> Result<SimulationStats> {
    if trials == 0 {
        return invalid("at least one trial is required");
    }
    let n = decoder.code().stab().n();
    let start = Instant::now();
    let run = || -> Result<u64> {
        (0..trials)
            .into_par_iter()
            .map(|t| {
                let e = channel.sample(n, &mut trial_rng(seed, t));
                decoder.decode(&e).map(|r| u64::from(!r.success))
            })
            .try_reduce(|| 0, |a, b| Ok(a + b))
    };
    let failures = match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let (ci_low, ci_high) = wilson_interval(failures, trials, 1.959_963_984_540_054);
    Ok(SimulationStats {
        trials,
        failures,
        rate: failures as f64 / trials as f64,
        ci_low,
        ci_high,
        wall_time: start.elapsed(),
    })
}

/// `Σ_{1≤w≤t} 3^w C(N, w)`: nonzero errors of weight at most `t`.
pub fn correctability_count(n: usize, t: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    let mut pow3 = 1u128;
    for w in 1..=t.min(n) {
        binom = binom * (n - w + 1) as u128 / w as u128;
        pow3 = pow3.saturating_mul(3);
        total = total.saturating_add(binom.saturating_mul(pow3));
    }
    total
}

/// Decode every error of weight `1..=t`. Returns the first failing error
/// in enumeration order (by weight, then support, then Pauli types), or
/// `None` if all are corrected.
pub fn verify_correctability(decoder: &ConcatDecoder, t: usize, budget: u128) -> Result<Option<PauliError>> {
    let n = decoder.code().stab().n();
    let required = correctability_count(n, t);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    for w in 1..=t.min(n) {
        let failure = crate::addcode::combinations(n, w)
            .into_par_iter()
            .map(|support| first_failure_on(decoder, n, &support))
            .find_map_first(|r| r.transpose());
        if let Some(r) = failure {
            return r.map(Some);
        }
    }
    Ok(None)
}

fn first_failure_on(decoder: &ConcatDecoder, n: usize, support: &[usize]) -> Result<Option<PauliError>> {
    let w = support.len();
    let mut types = vec![1usize; w];
    loop {
        let mut e = SymplecticVec::zeros(n);
        for (&i, &x) in support.iter().zip(&types) {
            e.set(i, F4::ALL[x]);
        }
        if !decoder.decode(&e)?.success {
            return Ok(Some(e));
        }
        let Some(i) = (0..w).rev().find(|&i| types[i] < 3) else {
            return Ok(None);
        };
        types[i] += 1;
        for x in &mut types[i + 1..] {
            *x = 1;
        }
    }
}
