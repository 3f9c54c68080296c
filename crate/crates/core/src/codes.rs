//! Small named codes used as building blocks and fixtures.

use crate::addcode::{AdditiveCode, StabilizerCode, DEFAULT_BUDGET};
use crate::error::Result;
use crate::gf4::SymplecticVec;

/// Stabilizer code from Pauli strings such as `"XZZXI"`.
pub fn from_pauli_strings(stabilizers: &[&str]) -> Result<StabilizerCode> {
    let n = stabilizers.first().map_or(0, |s| s.len());
    let gens = stabilizers
        .iter()
        .map(|s| SymplecticVec::from_pauli(s))
        .collect::<Result<Vec<_>>>()?;
    StabilizerCode::from_stabilizers(AdditiveCode::new(n, gens)?)
}

/// The [[5,1,3]] code with stabilizers the cyclic shifts of `XZZXI`.
pub fn five_qubit() -> StabilizerCode {
    from_pauli_strings(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])
        .and_then(|q| q.certify(DEFAULT_BUDGET))
        .expect("five-qubit code is a valid [[5,1,3]] code")
}

/// The [[7,1,3]] Steane code.
pub fn steane() -> StabilizerCode {
    from_pauli_strings(&["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"])
        .and_then(|q| q.certify(DEFAULT_BUDGET))
        .expect("Steane code is a valid [[7,1,3]] code")
}

/// The trivial [[m,m,1]] code with `C = {0}`.
pub fn trivial(m: usize) -> StabilizerCode {
    StabilizerCode::from_stabilizers(AdditiveCode::zero(m))
        .expect("zero code is self-orthogonal")
        .with_d_lower(1)
}

/// The [[n,n-2,2]] code `<X^n, Z^n>` for even `n`.
pub fn even_weight(n: usize) -> Result<StabilizerCode> {
    let x = "X".repeat(n);
    let z = "Z".repeat(n);
    from_pauli_strings(&[&x, &z])?.certify(DEFAULT_BUDGET)
}
