//! Seeded randomized search for (nested) stabilizer codes at small lengths.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AdditiveCode, StabilizerCode, DEFAULT_BUDGET};
use crate::error::{invalid, Error, Result};
use crate::gf4::SymplecticVec;

const MAX_SEARCH_LENGTH: usize = 12;
const SUBCODE_ATTEMPTS: usize = 64;

fn random_combination<R: Rng>(gens: &[SymplecticVec], n: usize, rng: &mut R) -> SymplecticVec {
    let mut v = SymplecticVec::zeros(n);
    for g in gens {
        if rng.gen::<bool>() {
            v += g;
        }
    }
    v
}

/// A random self-orthogonal additive code of length `n` and dimension `dim`,
/// grown one vector at a time from the dual of the current code.
pub fn random_self_orthogonal<R: Rng>(n: usize, dim: usize, rng: &mut R) -> Result<AdditiveCode> {
    if dim > n {
        return invalid(format!("self-orthogonal codes have dimension <= n (n={n}, dim={dim})"));
    }
    let mut c = AdditiveCode::zero(n);
    while c.dim() < dim {
        let dual = c.dual();
        let v = random_combination(dual.generators(), n, rng);
        if !c.contains(&v) {
            let mut gens = c.generators().to_vec();
            gens.push(v);
            c = AdditiveCode::new(n, gens)?;
        }
    }
    Ok(c)
}

fn random_subcode<R: Rng>(parent: &AdditiveCode, dim: usize, rng: &mut R) -> AdditiveCode {
    let n = parent.len();
    let mut c = AdditiveCode::zero(n);
    while c.dim() < dim {
        let v = random_combination(parent.generators(), n, rng);
        if !c.contains(&v) {
            let mut gens = c.generators().to_vec();
            gens.push(v);
            c = AdditiveCode::new(n, gens).expect("checked independent");
        }
    }
    c
}

/// Parameters for [`find_nested_chain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainRequest {
    pub n: usize,
    /// Strictly ascending numbers of encoded qubits `k_1 < … < k_s`.
    pub ks: Vec<usize>,
    /// Required distance of each `Q_j`.
    pub min_dists: Vec<u32>,
    pub seed: u64,
    pub max_trials: usize,
}

impl ChainRequest {
    pub fn new(n: usize, ks: Vec<usize>, min_dists: Vec<u32>) -> Self {
        ChainRequest {
            n,
            ks,
            min_dists,
            seed: 0,
            max_trials: 20_000,
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

fn certified(c: AdditiveCode, min_dist: u32) -> Result<Option<StabilizerCode>> {
    let q = StabilizerCode::from_stabilizers(c)?.certify(DEFAULT_BUDGET)?;
    Ok((q.d_lower() >= min_dist).then_some(q))
}

/// Search for stabilizer codes `Q_1, …, Q_s` of length `n` with `k_j`
/// encoded qubits whose stabilizers are nested, `C_s ⊆ … ⊆ C_1`, and whose
/// distances meet the requested minima. Every returned distance is exact.
///
/// Exhausting the trial budget is not a proof that no such chain exists.
pub fn find_nested_chain(req: &ChainRequest) -> Result<Vec<StabilizerCode>> {
    let ChainRequest {
        n,
        ref ks,
        ref min_dists,
        seed,
        max_trials,
    } = *req;
    if n == 0 || n > MAX_SEARCH_LENGTH {
        return invalid(format!("chain search supports 1 <= n <= {MAX_SEARCH_LENGTH} (got {n})"));
    }
    if ks.is_empty() || ks.len() != min_dists.len() {
        return invalid("dimension and distance lists must be nonempty and of equal length");
    }
    if ks.windows(2).any(|w| w[0] >= w[1]) {
        return invalid("encoded dimensions must be strictly ascending");
    }
    if ks[0] == 0 || *ks.last().unwrap() > n {
        return invalid(format!("encoded dimensions must lie in 1..={n}"));
    }
    if min_dists.iter().any(|&d| d as usize > n) {
        return Err(Error::SearchExhausted { trials: 0 });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trials = 0;
    while trials < max_trials {
        trials += 1;
        let c1 = random_self_orthogonal(n, n - ks[0], &mut rng)?;
        let Some(q1) = certified(c1, min_dists[0])? else {
            continue;
        };
        let mut chain = vec![q1];
        for j in 1..ks.len() {
            let parent = chain[j - 1].c().clone();
            let mut next = None;
            for _ in 0..SUBCODE_ATTEMPTS {
                trials += 1;
                let cj = random_subcode(&parent, n - ks[j], &mut rng);
                if let Some(q) = certified(cj, min_dists[j])? {
                    next = Some(q);
                    break;
                }
            }
            match next {
                Some(q) => chain.push(q),
                None => break,
            }
        }
        if chain.len() == ks.len() {
            return Ok(chain);
        }
    }
    Err(Error::SearchExhausted { trials })
}
