//! Two-stage decoding of concatenated codes: coset-leader decoding of each
//! inner block, then CSS Reed–Solomon (or table) decoding of the logical
//! word, judged by stabilizer equivalence of the total residual. Also Pauli
//! channel sampling, Monte Carlo simulation and exhaustive verification.

mod channel;
mod sim;
mod table;

pub use channel::{sample_error, DepolarizingChannel};
pub use sim::{correctability_count, simulate, trial_rng, verify_correctability, wilson_interval, SimulationStats};
pub use table::{SyndromeTable, MAX_SYNDROME_BITS};

use crate::addcode::{StabilizerCode, DEFAULT_BUDGET};
use crate::concat::ConcatenatedCode;
use crate::error::{Error, Result};
use crate::gf4::SymplecticVec;
use crate::qrs::QuantumRsCode;

/// A Pauli error on `N` qubits; symbol 0 is the identity.
pub type PauliError = SymplecticVec;

/// Outcome of decoding one error pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    /// The residual `e + correction` is a stabilizer.
    pub success: bool,
    /// Blocks whose inner decoding left a nonzero logical symbol.
    pub inner_failures: usize,
    pub residual: PauliError,
}

/// `s_j = ⟨e, g_j⟩` over the generator list of `inner`.
pub fn inner_syndrome(inner: &StabilizerCode, block_error: &SymplecticVec) -> Result<Vec<bool>> {
    if block_error.len() != inner.n() {
        return Err(Error::LengthMismatch {
            expected: inner.n(),
            got: block_error.len(),
        });
    }
    Ok(inner.c().generators().iter().map(|g| g.inner(block_error)).collect())
}

/// Decode a logical word of a quantum RS code: both CSS parts are decoded
/// against the dual RS code. Returns the corrected word, a member of `C⊥`.
pub fn outer_decode(outer: &QuantumRsCode, word: &SymplecticVec) -> Result<SymplecticVec> {
    if word.len() != outer.stab().n() {
        return Err(Error::LengthMismatch {
            expected: outer.stab().n(),
            got: word.len(),
        });
    }
    Ok(word + &outer.css_correction(word)?)
}

#[derive(Debug, Clone)]
enum OuterStage {
    Css,
    Table(SyndromeTable),
}

/// Decoder for an order-1 concatenated code. Tables are built once and
/// shared read-only, so one decoder can serve many threads.
#[derive(Debug, Clone)]
pub struct ConcatDecoder {
    code: ConcatenatedCode,
    inner: SyndromeTable,
    outer: OuterStage,
}

impl ConcatDecoder {
    /// Quantum RS outers use CSS Berlekamp–Massey decoding; other outers get
    /// a blockwise coset-leader table.
    pub fn new(code: &ConcatenatedCode) -> Result<Self> {
        if code.order() != 1 {
            return Err(Error::Unsupported(format!(
                "decoding generalized concatenation of order {}",
                code.order()
            )));
        }
        let inner = SyndromeTable::build(code.inner(), DEFAULT_BUDGET)?;
        let outer_code = &code.outers()[0];
        let outer = match outer_code.qrs() {
            Some(_) => OuterStage::Css,
            None => OuterStage::Table(SyndromeTable::build_blockwise(
                outer_code.stab(),
                outer_code.block(),
                DEFAULT_BUDGET,
            )?),
        };
        Ok(ConcatDecoder {
            code: code.clone(),
            inner,
            outer,
        })
    }

    pub fn code(&self) -> &ConcatenatedCode {
        &self.code
    }

    /// Weight up to which decoding provably succeeds: with `t₁` outer blocks
    /// and `t₂` inner errors correctable, an outer failure needs at least
    /// `(t₁+1)(t₂+1)` physical errors.
    pub fn guaranteed_radius(&self) -> usize {
        let outer = &self.code.outers()[0];
        let t1 = match outer.qrs() {
            Some(q) => q.k() / 2,
            None => (outer.block_distance() as usize - 1) / 2,
        };
        let t2 = (self.code.inner().d_lower() as usize).saturating_sub(1) / 2;
        (t1 + 1) * (t2 + 1) - 1
    }

    pub fn inner_table(&self) -> &SyndromeTable {
        &self.inner
    }

    /// Correct one inner block: returns the coset leader `ê` and the
    /// logical symbol `λ = ρ⁻¹(e + ê)`.
    pub fn inner_decode(&self, block_error: &SymplecticVec) -> Result<(SymplecticVec, SymplecticVec)> {
        let s = self.inner.syndrome(block_error)?;
        let leader = self.inner.leader(s);
        let lambda = self.code.rho().invert_unchecked(&(block_error + &leader));
        Ok((leader, lambda))
    }

    /// Correction `ĉ` with `word + ĉ ∈ C₁⊥`, or `None` when the outer
    /// decoder reports failure.
    pub fn outer_correction(&self, word: &SymplecticVec) -> Result<Option<SymplecticVec>> {
        let outer = &self.code.outers()[0];
        match &self.outer {
            OuterStage::Css => {
                let q = outer.qrs().expect("CSS stage has a quantum RS outer");
                match q.css_correction(word) {
                    Ok(c) => Ok(Some(c)),
                    Err(Error::DecodeFailure(_)) => Ok(None),
                    Err(e) => Err(e),
                }
            }
            OuterStage::Table(t) => Ok(Some(t.leader(t.syndrome(word)?))),
        }
    }

    pub fn decode(&self, e: &PauliError) -> Result<DecodeResult> {
        let n = self.code.stab().n();
        if e.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: e.len(),
            });
        }
        let (n1, n2, m) = (self.code.outer_blocks(), self.code.inner_len(), self.code.family().m());
        let mut residual = e.clone();
        let mut word = SymplecticVec::zeros(n1 * m);
        let mut inner_failures = 0;
        for p in 0..n1 {
            let (leader, lambda) = self.inner_decode(&e.slice(p * n2, n2))?;
            let mut block = residual.slice(p * n2, n2);
            block += &leader;
            residual.write_slice(p * n2, &block);
            if !lambda.is_zero() {
                inner_failures += 1;
            }
            word.write_slice(p * m, &lambda);
        }
        if let Some(c) = self.outer_correction(&word)? {
            residual += &self.code.lift_outer(&c);
        }
        Ok(DecodeResult {
            success: self.code.stab().c().contains(&residual),
            inner_failures,
            residual,
        })
    }
}
