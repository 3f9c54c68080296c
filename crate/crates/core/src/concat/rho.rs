use super::symplectic::SymplecticBasis;
use crate::addcode::AdditiveCode;
use crate::error::{Error, Result};
use crate::gf4::{SymplecticVec, F4};

/// The inner-product-preserving lift `ρ(x) = Σ a_i g_i + b_i h_i` from
/// GF(4)^w into `C⊥`, where `x_i = a_i ω + b_i ω̄`.
#[derive(Debug, Clone)]
pub struct RhoMap {
    basis: SymplecticBasis,
    stabilizers: AdditiveCode,
}

impl RhoMap {
    /// `stabilizers` is the code the pairs are taken modulo; it is used to
    /// check that inputs of [`invert`](Self::invert) lie in its dual.
    pub fn new(basis: SymplecticBasis, stabilizers: AdditiveCode) -> Self {
        RhoMap { basis, stabilizers }
    }

    /// Symbol width `w`.
    pub fn width(&self) -> usize {
        self.basis.len()
    }

    /// Output length `n₂`.
    pub fn n(&self) -> usize {
        self.stabilizers.len()
    }

    pub fn basis(&self) -> &SymplecticBasis {
        &self.basis
    }

    pub fn stabilizers(&self) -> &AdditiveCode {
        &self.stabilizers
    }

    pub fn apply(&self, x: &SymplecticVec) -> Result<SymplecticVec> {
        if x.len() != self.width() {
            return Err(Error::LengthMismatch {
                expected: self.width(),
                got: x.len(),
            });
        }
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &SymplecticVec) -> SymplecticVec {
        let mut out = SymplecticVec::zeros(self.n());
        for (i, (g, h)) in self.basis.pairs().iter().enumerate() {
            if x.a_bit(i) {
                out += g;
            }
            if x.b_bit(i) {
                out += h;
            }
        }
        out
    }

    /// The symbol `λ` with `r ∈ ρ(λ) + C`: `a_i = ⟨r, h_i⟩`, `b_i = ⟨r, g_i⟩`.
    pub fn invert(&self, r: &SymplecticVec) -> Result<SymplecticVec> {
        if r.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: r.len(),
            });
        }
        if self.stabilizers.generators().iter().any(|s| s.inner(r)) {
            return Err(Error::NotInDual);
        }
        Ok(self.invert_unchecked(r))
    }

    pub(crate) fn invert_unchecked(&self, r: &SymplecticVec) -> SymplecticVec {
        let mut x = SymplecticVec::zeros(self.width());
        for (i, (g, h)) in self.basis.pairs().iter().enumerate() {
            x.set(i, F4::from_parts(r.inner(h), r.inner(g)));
        }
        x
    }
}
