use rand::Rng;

use crate::error::{invalid, Result};
use crate::gf4::{SymplecticVec, F4};

/// Each qubit independently stays untouched with probability `1 − p` and
/// otherwise suffers X, Y or Z with probability `p/3` each.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepolarizingChannel {
    p: f64,
}

impl DepolarizingChannel {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return invalid(format!("error probability must lie in [0, 1] (got {p})"));
        }
        Ok(DepolarizingChannel { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Draw an error on `n` qubits.
    pub fn sample<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> SymplecticVec {
        let mut e = SymplecticVec::zeros(n);
        for i in 0..n {
            if rng.gen::<f64>() < self.p {
                e.set(i, F4::ALL[1 + rng.gen_range(0..3)]);
            }
        }
        e
    }
}

/// Free-function form of [`DepolarizingChannel::sample`].
pub fn sample_error<R: Rng + ?Sized>(ch: &DepolarizingChannel, n: usize, rng: &mut R) -> SymplecticVec {
    ch.sample(n, rng)
}
