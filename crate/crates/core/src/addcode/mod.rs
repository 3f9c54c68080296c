//! Additive codes over GF(4), their trace duals, and stabilizer codes.

mod counting;
mod distance;
mod search;

pub use counting::{gv_exists, nested_gv_exists, sigma_count, tau_count};
pub(crate) use distance::combinations;
pub use distance::{
    min_block_weight_outside, min_nonzero_weight, min_weight_outside, min_weight_outside_witness,
    outside_enumeration_count, DEFAULT_BUDGET,
};
pub use search::{find_nested_chain, random_self_orthogonal, ChainRequest};

use crate::error::{Error, Result};
use crate::gf2::{self, Echelon};
use crate::gf4::SymplecticVec;

/// A GF(2)-linear subgroup of GF(4)^n given by independent generators.
#[derive(Clone)]
pub struct AdditiveCode {
    n: usize,
    generators: Vec<SymplecticVec>,
    echelon: Echelon,
}

impl std::fmt::Debug for AdditiveCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AdditiveCode")
            .field("n", &self.n)
            .field("dim", &self.dim())
            .field("generators", &self.generators)
            .finish()
    }
}

impl AdditiveCode {
    /// Code generated by `generators`, which must be independent.
    pub fn new(n: usize, generators: Vec<SymplecticVec>) -> Result<Self> {
        let mut echelon = Echelon::new(2 * gf2::words_for(n));
        for g in &generators {
            if g.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
            if !echelon.insert(g.words()) {
                return Err(Error::DependentGenerators);
            }
        }
        Ok(AdditiveCode { n, generators, echelon })
    }

    /// Code spanned by `vectors`; dependent vectors are dropped.
    pub fn span(n: usize, vectors: impl IntoIterator<Item = SymplecticVec>) -> Result<Self> {
        let mut echelon = Echelon::new(2 * gf2::words_for(n));
        let mut generators = Vec::new();
        for v in vectors {
            if v.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
            if echelon.insert(v.words()) {
                generators.push(v);
            }
        }
        Ok(AdditiveCode { n, generators, echelon })
    }

    pub fn zero(n: usize) -> Self {
        AdditiveCode::new(n, Vec::new()).expect("empty generator set")
    }

    /// All of GF(4)^n.
    pub fn full(n: usize) -> Self {
        let mut gens = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut v = SymplecticVec::zeros(n);
            v.set(i, crate::gf4::F4::OMEGA);
            gens.push(v);
        }
        for i in 0..n {
            let mut v = SymplecticVec::zeros(n);
            v.set(i, crate::gf4::F4::OMEGA_BAR);
            gens.push(v);
        }
        AdditiveCode::new(n, gens).expect("unit vectors are independent")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `log2 |C|`.
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[SymplecticVec] {
        &self.generators
    }

    pub fn contains(&self, v: &SymplecticVec) -> bool {
        v.len() == self.n && self.echelon.contains(v.words())
    }

    /// Coefficients over the generators expressing `v`, if `v ∈ C`.
    pub fn coordinates(&self, v: &SymplecticVec) -> Option<Vec<bool>> {
        if v.len() != self.n {
            return None;
        }
        self.echelon.solve(v.words())
    }

    /// Reduce `v` modulo the code: a canonical coset representative.
    pub fn reduce(&self, v: &SymplecticVec) -> SymplecticVec {
        let mut w = v.words().to_vec();
        self.echelon.reduce(&mut w);
        SymplecticVec::from_words(self.n, w)
    }

    /// Trace dual `C⊥ = {u : ⟨u, c⟩ = 0 for all c ∈ C}`.
    pub fn dual(&self) -> AdditiveCode {
        let half = gf2::words_for(self.n);
        // ⟨u, g⟩ = u_a·g_b + u_b·g_a, i.e. the dot product of u with the
        // conjugated generator.
        let rows: Vec<Vec<u64>> = self.generators.iter().map(|g| g.conj().words().to_vec()).collect();
        let mut mask = vec![0u64; 2 * half];
        for i in 0..self.n {
            gf2::flip_bit(&mut mask, i);
            gf2::flip_bit(&mut mask[half..], i);
        }
        let basis = gf2::null_space(&rows, &mask)
            .into_iter()
            .map(|w| SymplecticVec::from_words(self.n, w));
        AdditiveCode::new(self.n, basis.collect()).expect("null space basis is independent")
    }

    /// `⟨g_i, g_j⟩ = 0` for all generator pairs.
    pub fn is_self_orthogonal(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, g)| self.generators[i + 1..].iter().all(|h| !g.inner(h)))
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &AdditiveCode) -> bool {
        self.n == other.n && self.generators.iter().all(|g| other.contains(g))
    }

    /// Same member set.
    pub fn same_members(&self, other: &AdditiveCode) -> bool {
        self.dim() == other.dim() && self.is_subcode_of(other)
    }

    /// Every generator of `self` is trace-orthogonal to every generator of `other`.
    pub fn is_orthogonal_to(&self, other: &AdditiveCode) -> bool {
        self.generators
            .iter()
            .all(|g| other.generators.iter().all(|h| !g.inner(h)))
    }

    /// Vectors of `larger` completing `self`'s generators to a basis of
    /// `larger`; these represent the cosets of `self` in `larger`.
    pub fn complement_in(&self, larger: &AdditiveCode) -> Result<Vec<SymplecticVec>> {
        if !self.is_subcode_of(larger) {
            return Err(Error::NotNested("code is not contained in the larger code".into()));
        }
        let mut e = self.echelon.clone();
        Ok(larger
            .generators
            .iter()
            .filter(|g| e.insert(g.words()))
            .cloned()
            .collect())
    }

    /// Iterate over all `2^dim` members; only sensible for small dimensions.
    pub fn members(&self) -> impl Iterator<Item = SymplecticVec> + '_ {
        assert!(self.dim() < 40, "refusing to enumerate 2^{} members", self.dim());
        (0u64..1 << self.dim()).map(move |mask| {
            let mut v = SymplecticVec::zeros(self.n);
            for (i, g) in self.generators.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v += g;
                }
            }
            v
        })
    }
}

/// A stabilizer code: a self-orthogonal `C` together with `C⊥`.
#[derive(Debug, Clone)]
pub struct StabilizerCode {
    n: usize,
    k: usize,
    c: AdditiveCode,
    c_perp: AdditiveCode,
    logicals: Vec<SymplecticVec>,
    d_lower: u32,
    d_exact: Option<u32>,
}

impl StabilizerCode {
    /// Stabilizer code of the self-orthogonal code `c`; the dual is computed.
    /// The distance lower bound starts at the trivial value 1.
    pub fn from_stabilizers(c: AdditiveCode) -> Result<Self> {
        if !c.is_self_orthogonal() {
            return Err(Error::NotSelfOrthogonal);
        }
        let c_perp = c.dual();
        Self::assemble(c, c_perp)
    }

    /// Stabilizer code from an explicitly given pair; verifies that
    /// `c_perp` is exactly the dual of `c` (mutual orthogonality plus
    /// `dim c + dim c_perp = 2n`).
    pub fn from_pair(c: AdditiveCode, c_perp: AdditiveCode) -> Result<Self> {
        if c.len() != c_perp.len() {
            return Err(Error::LengthMismatch {
                expected: c.len(),
                got: c_perp.len(),
            });
        }
        if c.dim() + c_perp.dim() != 2 * c.len() {
            return Err(Error::Invariant(format!(
                "dim C + dim C⊥ = {} + {} != 2n = {}",
                c.dim(),
                c_perp.dim(),
                2 * c.len()
            )));
        }
        if !c.is_orthogonal_to(&c_perp) {
            return Err(Error::Invariant("C and C⊥ are not mutually orthogonal".into()));
        }
        if !c.is_subcode_of(&c_perp) {
            return Err(Error::NotSelfOrthogonal);
        }
        Self::assemble(c, c_perp)
    }

    fn assemble(c: AdditiveCode, c_perp: AdditiveCode) -> Result<Self> {
        let n = c.len();
        let k = n - c.dim();
        let logicals = c.complement_in(&c_perp)?;
        debug_assert_eq!(logicals.len(), 2 * k);
        Ok(StabilizerCode {
            n,
            k,
            c,
            c_perp,
            logicals,
            d_lower: 1,
            d_exact: None,
        })
    }

    /// Record a certified lower bound on the distance.
    pub fn with_d_lower(mut self, d: u32) -> Self {
        self.d_lower = d;
        self
    }

    /// Compute the exact distance by enumeration and use it as the bound.
    pub fn certify(mut self, budget: u128) -> Result<Self> {
        let d = min_weight_outside(&self, budget)?;
        if d < self.d_lower {
            return Err(Error::Invariant(format!(
                "exact distance {d} is below the claimed lower bound {}",
                self.d_lower
            )));
        }
        self.d_exact = Some(d);
        self.d_lower = d;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn c(&self) -> &AdditiveCode {
        &self.c
    }

    pub fn c_perp(&self) -> &AdditiveCode {
        &self.c_perp
    }

    /// Representatives of the nontrivial cosets' generators: `2k` vectors
    /// that together with `C` span `C⊥`.
    pub fn logicals(&self) -> &[SymplecticVec] {
        &self.logicals
    }

    pub fn d_lower(&self) -> u32 {
        self.d_lower
    }

    pub fn d_exact(&self) -> Option<u32> {
        self.d_exact
    }

    /// `[[n,k]] d_lower=d` summary.
    pub fn describe(&self) -> String {
        format!("[[{},{}]] d_lower={}", self.n, self.k, self.d_lower)
    }
}
