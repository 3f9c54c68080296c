//! Concatenation of stabilizer codes through the symplectic lift `ρ`:
//! plain concatenation with an outer code over GF(4)^m blocks, and
//! generalized concatenation of order `s` over a nested inner chain.

mod rho;
mod symplectic;

pub use rho::RhoMap;
pub use symplectic::{NestedInnerFamily, SymplecticBasis};

use crate::addcode::{min_block_weight_outside, AdditiveCode, StabilizerCode};
use crate::error::{invalid, Error, Result};
use crate::gf4::SymplecticVec;
use crate::qrs::QuantumRsCode;

/// An outer code whose coordinates are grouped into blocks of `block`
/// symbols, with a certified lower bound on its blockwise distance.
#[derive(Debug, Clone)]
pub struct OuterCode {
    stab: StabilizerCode,
    block: usize,
    block_distance: u32,
    qrs: Option<QuantumRsCode>,
}

impl OuterCode {
    /// A quantum RS code: blocks of `m` symbols, blockwise distance `k+1`.
    pub fn from_qrs(q: QuantumRsCode) -> Self {
        OuterCode {
            stab: q.stab().clone(),
            block: q.m(),
            block_distance: q.k() as u32 + 1,
            qrs: Some(q),
        }
    }

    /// Any stabilizer code with a claimed blockwise distance.
    pub fn new(stab: StabilizerCode, block: usize, block_distance: u32) -> Result<Self> {
        if block == 0 || stab.n() % block != 0 {
            return invalid(format!("block size {block} does not divide length {}", stab.n()));
        }
        if block_distance == 0 {
            return invalid("blockwise distance must be positive");
        }
        Ok(OuterCode {
            stab,
            block,
            block_distance,
            qrs: None,
        })
    }

    /// Any stabilizer code, with its blockwise distance computed exactly.
    pub fn certified(stab: StabilizerCode, block: usize, budget: u128) -> Result<Self> {
        let (d, _) = min_block_weight_outside(&stab, block, budget)?;
        Self::new(stab, block, d)
    }

    pub fn stab(&self) -> &StabilizerCode {
        &self.stab
    }

    /// Symbols per block.
    pub fn block(&self) -> usize {
        self.block
    }

    /// Number of blocks.
    pub fn blocks(&self) -> usize {
        self.stab.n() / self.block
    }

    pub fn block_distance(&self) -> u32 {
        self.block_distance
    }

    pub fn qrs(&self) -> Option<&QuantumRsCode> {
        self.qrs.as_ref()
    }
}

/// `(n₁n₂, k, d₁d₂)`: parameters guaranteed by concatenating an outer
/// `[[n₁, k, d₁]]` code over GF(4)^m blocks with an inner `[[n₂, m, d₂]]`.
pub fn product_params(n1: usize, k: usize, d1: u32, n2: usize, m: usize, d2: u32) -> Result<(usize, usize, u32)> {
    if m == 0 || m > n2 {
        return invalid(format!("inner code [[{n2},{m}]] is not valid"));
    }
    if k > n1 * m {
        return invalid(format!("outer code encodes {k} > {} symbols", n1 * m));
    }
    Ok((n1 * n2, k, d1 * d2))
}

/// Design rate of order-`s` generalized concatenation with inner rate
/// `r = s·m/n₂` and outer rates `r'_j = k_j/n₁`: `r - (2r/s) Σ r'_j`.
pub fn generalized_rate(s: usize, m: usize, n1: usize, n2: usize, ks: &[usize]) -> f64 {
    let r = (s * m) as f64 / n2 as f64;
    let sum: f64 = ks.iter().map(|&k| k as f64 / n1 as f64).sum();
    r - 2.0 * r / s as f64 * sum
}

/// A concatenated (order 1) or generalized concatenated (order `s`) code.
#[derive(Debug, Clone)]
pub struct ConcatenatedCode {
    outers: Vec<OuterCode>,
    family: NestedInnerFamily,
    rho: RhoMap,
    stab: StabilizerCode,
}

/// Plain concatenation: every block of the outer code is lifted through the
/// inner code's `ρ`. Requires `inner.k` to equal the outer block size.
pub fn concatenate(outer: OuterCode, inner: StabilizerCode) -> Result<ConcatenatedCode> {
    if inner.k() != outer.block() {
        return invalid(format!(
            "inner code encodes {} qubits but outer blocks have {} symbols",
            inner.k(),
            outer.block()
        ));
    }
    generalized_concatenate(vec![outer], NestedInnerFamily::new(vec![inner])?)
}

/// Order-`s` generalized concatenation: column `p` of the `s × n₁` matrix
/// of outer blocks is stacked into GF(4)^{sm} and lifted through the
/// nested `ρ` into `C_s⊥`.
pub fn generalized_concatenate(outers: Vec<OuterCode>, family: NestedInnerFamily) -> Result<ConcatenatedCode> {
    let s = outers.len();
    if s == 0 || s != family.levels() {
        return invalid(format!("{s} outer codes for {} inner levels", family.levels()));
    }
    let m = family.m();
    let n1 = outers[0].blocks();
    for (j, o) in outers.iter().enumerate() {
        if o.block() != m {
            return invalid(format!(
                "outer code {} has blocks of {} symbols, inner levels have {m}",
                j + 1,
                o.block()
            ));
        }
        if o.blocks() != n1 {
            return invalid(format!("outer code {} has {} blocks, expected {n1}", j + 1, o.blocks()));
        }
        if s > 1 && o.qrs().is_none() {
            return Err(Error::Unsupported(
                "generalized concatenation of order s >= 2 needs quantum RS outer codes".into(),
            ));
        }
    }
    let inner_d: Vec<u32> = family.codes().iter().map(StabilizerCode::d_lower).collect();
    if inner_d.windows(2).any(|w| w[0] < w[1]) {
        return invalid(format!(
            "inner distances must be nonincreasing along the chain (got {inner_d:?})"
        ));
    }

    let rho = RhoMap::new(family.basis().clone(), family.innermost().c().clone());
    let n2 = family.n();
    let total = n1 * n2;
    let lift = |level: usize, v: &SymplecticVec| -> SymplecticVec {
        let mut out = SymplecticVec::zeros(total);
        let mut stack = SymplecticVec::zeros(s * m);
        for p in 0..n1 {
            stack.write_slice(level * m, &v.slice(p * m, m));
            let col = rho.apply_unchecked(&stack);
            out.write_slice(p * n2, &col);
        }
        out
    };
    let embedded: Vec<SymplecticVec> = (0..n1)
        .flat_map(|p| {
            family
                .innermost()
                .c()
                .generators()
                .iter()
                .map(move |g| g.embed(total, p * n2))
        })
        .collect();
    let build = |pick: fn(&StabilizerCode) -> &AdditiveCode| -> Result<AdditiveCode> {
        let mut gens = Vec::new();
        for (j, o) in outers.iter().enumerate() {
            gens.extend(pick(o.stab()).generators().iter().map(|g| lift(j, g)));
        }
        gens.extend(embedded.iter().cloned());
        AdditiveCode::new(total, gens)
    };
    let c = build(StabilizerCode::c)?;
    let c_perp = build(StabilizerCode::c_perp)?;
    let dim_c: usize = outers.iter().map(|o| o.stab().c().dim()).sum::<usize>() + n1 * family.innermost().c().dim();
    if c.dim() != dim_c {
        return Err(Error::Invariant(format!("dim C = {}, expected {dim_c}", c.dim())));
    }
    let d_lower = outers
        .iter()
        .zip(&inner_d)
        .map(|(o, &d)| o.block_distance() * d)
        .min()
        .expect("s >= 1");
    let stab = StabilizerCode::from_pair(c, c_perp)?.with_d_lower(d_lower);
    Ok(ConcatenatedCode {
        outers,
        family,
        rho,
        stab,
    })
}

impl ConcatenatedCode {
    pub fn stab(&self) -> &StabilizerCode {
        &self.stab
    }

    pub fn into_stab(self) -> StabilizerCode {
        self.stab
    }

    pub fn d_lower(&self) -> u32 {
        self.stab.d_lower()
    }

    /// Order `s`.
    pub fn order(&self) -> usize {
        self.outers.len()
    }

    pub fn outers(&self) -> &[OuterCode] {
        &self.outers
    }

    pub fn family(&self) -> &NestedInnerFamily {
        &self.family
    }

    pub fn inner(&self) -> &StabilizerCode {
        self.family.innermost()
    }

    pub fn rho(&self) -> &RhoMap {
        &self.rho
    }

    /// Number of outer blocks `n₁`.
    pub fn outer_blocks(&self) -> usize {
        self.outers[0].blocks()
    }

    /// Inner length `n₂`.
    pub fn inner_len(&self) -> usize {
        self.family.n()
    }

    pub fn rate(&self) -> f64 {
        self.stab.k() as f64 / self.stab.n() as f64
    }

    /// Replace the stabilizer code, e.g. after certifying its distance.
    pub fn with_stab(mut self, stab: StabilizerCode) -> Self {
        self.stab = stab;
        self
    }

    /// Number of inner blocks on which `v` is not a stabilizer of `C_s`.
    pub fn blocks_outside_inner(&self, v: &SymplecticVec) -> usize {
        let n2 = self.inner_len();
        (0..self.outer_blocks())
            .filter(|&p| !self.inner().c().contains(&v.slice(p * n2, n2)))
            .count()
    }

    /// Lift a level-1 outer word (`n₁ m` symbols) into the code's length.
    pub fn lift_outer(&self, v: &SymplecticVec) -> SymplecticVec {
        let (m, n2, n1) = (self.family.m(), self.inner_len(), self.outer_blocks());
        let mut out = SymplecticVec::zeros(n1 * n2);
        let mut stack = SymplecticVec::zeros(self.rho.width());
        for p in 0..n1 {
            stack.write_slice(0, &v.slice(p * m, m));
            out.write_slice(p * n2, &self.rho.apply_unchecked(&stack));
        }
        out
    }

    /// `[[n,k]] d_lower=d` summary.
    pub fn describe(&self) -> String {
        self.stab.describe()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::addcode::{find_nested_chain, min_weight_outside_witness, ChainRequest, DEFAULT_BUDGET};
    use crate::codes;

    fn five_outer() -> OuterCode {
        OuterCode::new(codes::five_qubit(), 1, 3).unwrap()
    }

    #[test]
    fn five_qubit_self_concatenation_parameters() {
        let cc = concatenate(five_outer(), codes::five_qubit()).unwrap();
        assert_eq!(cc.describe(), "[[25,1]] d_lower=9");
        assert_eq!(cc.stab().c().dim(), 24);
        assert_eq!(product_params(5, 1, 3, 5, 1, 3).unwrap(), (25, 1, 9));
        assert!(product_params(5, 1, 3, 1, 2, 1).is_err());
    }

    #[test]
    fn trivial_inner_code_reproduces_the_outer_code() {
        let q = QuantumRsCode::new(2, 1).unwrap();
        let outer = OuterCode::from_qrs(q.clone());
        let cc = concatenate(outer, codes::trivial(2)).unwrap();
        assert_eq!(cc.stab().n(), q.stab().n());
        // ρ is an invertible change of basis on each block here, so ρ⁻¹
        // applied blockwise maps the member sets onto the outer code's.
        let back = |v: &SymplecticVec| {
            let parts: Vec<SymplecticVec> = (0..3).map(|p| cc.rho().invert(&v.slice(2 * p, 2)).unwrap()).collect();
            SymplecticVec::concat(&parts)
        };
        for g in cc.stab().c().generators() {
            assert!(q.stab().c().contains(&back(g)));
        }
        for g in cc.stab().c_perp().generators() {
            assert!(q.stab().c_perp().contains(&back(g)));
        }
        assert_eq!(cc.stab().c().dim(), q.stab().c().dim());
    }

    #[test]
    fn qrs_outer_with_searched_inner() {
        let inner = find_nested_chain(&ChainRequest::new(6, vec![2], vec![2]))
            .unwrap()
            .remove(0);
        let outer = OuterCode::from_qrs(QuantumRsCode::new(2, 1).unwrap());
        let cc = concatenate(outer, inner).unwrap();
        assert_eq!(cc.describe(), "[[18,2]] d_lower=4");
        let (d, w) = min_weight_outside_witness(cc.stab(), DEFAULT_BUDGET).unwrap();
        assert!(d >= 4, "exact distance {d}");
        assert!(cc.blocks_outside_inner(&w) >= 2);
    }

    #[test]
    fn size_mismatches_are_rejected() {
        let outer = OuterCode::from_qrs(QuantumRsCode::new(2, 1).unwrap());
        assert!(concatenate(outer, codes::five_qubit()).is_err());
        assert!(OuterCode::new(codes::five_qubit(), 2, 3).is_err());
    }

    #[test]
    fn generalized_order_two() {
        let chain = find_nested_chain(&ChainRequest::new(6, vec![2, 4], vec![2, 2])).unwrap();
        let fam = NestedInnerFamily::new(chain).unwrap();
        let outers = vec![
            OuterCode::from_qrs(QuantumRsCode::new(2, 1).unwrap()),
            OuterCode::from_qrs(QuantumRsCode::new(2, 1).unwrap()),
        ];
        let cc = generalized_concatenate(outers, fam).unwrap();
        assert_eq!((cc.stab().n(), cc.stab().k()), (18, 4));
        assert!((cc.rate() - generalized_rate(2, 2, 3, 6, &[1, 1])).abs() < 1e-12);
        assert!((cc.rate() - 2.0 / 9.0).abs() < 1e-12);
        assert_eq!(cc.d_lower(), 4);
        let (d, _) = min_weight_outside_witness(cc.stab(), DEFAULT_BUDGET).unwrap();
        assert!(d >= cc.d_lower());
    }

    #[test]
    fn order_one_generalized_matches_plain() {
        let inner = codes::five_qubit();
        let a = concatenate(five_outer(), inner.clone()).unwrap();
        let b = generalized_concatenate(vec![five_outer()], NestedInnerFamily::new(vec![inner]).unwrap()).unwrap();
        assert!(a.stab().c().same_members(b.stab().c()));
        assert!(a.stab().c_perp().same_members(b.stab().c_perp()));
    }

    #[test]
    fn increasing_inner_distances_are_rejected() {
        let chain = find_nested_chain(&ChainRequest::new(6, vec![2, 4], vec![1, 2])).unwrap();
        let mut codes = chain;
        codes[0] = codes[0].clone().with_d_lower(1);
        let fam = NestedInnerFamily::new(codes).unwrap();
        let outers = vec![
            OuterCode::from_qrs(QuantumRsCode::new(2, 1).unwrap()),
            OuterCode::from_qrs(QuantumRsCode::new(2, 1).unwrap()),
        ];
        assert!(generalized_concatenate(outers, fam).is_err());
    }
}
