//! Hyperbolic bases of `C⊥/C` and their extension along nested chains.

use crate::addcode::{AdditiveCode, StabilizerCode};
use crate::error::{invalid, Error, Result};
use crate::gf4::SymplecticVec;

/// Pairs `(g_i, h_i)` in `C⊥` with `⟨g_i,h_j⟩ = δ_ij` and
/// `⟨g_i,g_j⟩ = ⟨h_i,h_j⟩ = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticBasis {
    pairs: Vec<(SymplecticVec, SymplecticVec)>,
}

/// Make `u` orthogonal to the pair `(g, h)` by adding multiples of it.
fn project(u: &mut SymplecticVec, g: &SymplecticVec, h: &SymplecticVec) {
    let (ug, uh) = (u.inner(g), u.inner(h));
    if uh {
        *u += g;
    }
    if ug {
        *u += h;
    }
}

/// Split `vectors` into hyperbolic pairs: take the first vector, pair it
/// with the first later vector it does not commute with, and project the
/// rest off the new pair. Vectors left without a partner are returned as
/// the radical part.
fn hyperbolic_pairs(mut pending: Vec<SymplecticVec>) -> (Vec<(SymplecticVec, SymplecticVec)>, Vec<SymplecticVec>) {
    let mut pairs = Vec::new();
    let mut radical = Vec::new();
    pending.reverse();
    while let Some(v) = pending.pop() {
        // `pending` is reversed, so search from the back for the first match.
        let Some(pos) = pending.iter().rposition(|w| v.inner(w)) else {
            radical.push(v);
            continue;
        };
        let w = pending.remove(pos);
        for u in pending.iter_mut() {
            project(u, &v, &w);
        }
        pairs.push((v, w));
    }
    (pairs, radical)
}

impl SymplecticBasis {
    /// A hyperbolic basis of `C⊥` modulo `C` with `k` pairs.
    pub fn for_code(q: &StabilizerCode) -> Result<Self> {
        if q.k() == 0 {
            return invalid("a k = 0 code has no logical pairs");
        }
        let (pairs, _) = hyperbolic_pairs(q.logicals().to_vec());
        let basis = SymplecticBasis { pairs };
        basis.check_spans(q, q.k())?;
        Ok(basis)
    }

    /// A basis from explicit pairs; fails unless the Gram pattern is exact.
    pub fn from_pairs(pairs: Vec<(SymplecticVec, SymplecticVec)>) -> Result<Self> {
        let basis = SymplecticBasis { pairs };
        basis.check_gram()?;
        Ok(basis)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(SymplecticVec, SymplecticVec)] {
        &self.pairs
    }

    /// Vector length.
    pub fn n(&self) -> usize {
        self.pairs.first().map_or(0, |(g, _)| g.len())
    }

    /// Gram matrix in the order `g_1..g_m, h_1..h_m`.
    pub fn gram(&self) -> Vec<Vec<bool>> {
        let vs: Vec<&SymplecticVec> = self
            .pairs
            .iter()
            .map(|(g, _)| g)
            .chain(self.pairs.iter().map(|(_, h)| h))
            .collect();
        vs.iter().map(|u| vs.iter().map(|v| u.inner(v)).collect()).collect()
    }

    /// The Gram matrix equals `[[0, I], [I, 0]]`.
    pub fn check_gram(&self) -> Result<()> {
        let m = self.pairs.len();
        for (i, row) in self.gram().iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x != (i + m == j || j + m == i) {
                    return Err(Error::Invariant(format!("Gram entry ({i},{j}) is {}", x as u8)));
                }
            }
        }
        Ok(())
    }

    /// Gram pattern, `pairs ⊆ C⊥`, and `C` plus the first `pairs` vectors
    /// span `C⊥`.
    fn check_spans(&self, q: &StabilizerCode, expected: usize) -> Result<()> {
        if self.pairs.len() != expected {
            return Err(Error::Invariant(format!(
                "found {} hyperbolic pairs, expected {expected}",
                self.pairs.len()
            )));
        }
        self.check_gram()?;
        if self
            .pairs
            .iter()
            .any(|(g, h)| !q.c_perp().contains(g) || !q.c_perp().contains(h))
        {
            return Err(Error::NotInDual);
        }
        let span = AdditiveCode::span(
            q.n(),
            q.c()
                .generators()
                .iter()
                .cloned()
                .chain(self.pairs.iter().flat_map(|(g, h)| [g.clone(), h.clone()])),
        )?;
        if span.dim() != q.c_perp().dim() {
            return Err(Error::Invariant("C and the pairs do not span C⊥".into()));
        }
        Ok(())
    }
}

/// A nested chain `C_s ⊆ … ⊆ C_1` of inner stabilizer codes with `k_j = j·m`,
/// and one hyperbolic basis whose pairs `(j-1)m .. jm` form level `j`.
#[derive(Debug, Clone)]
pub struct NestedInnerFamily {
    codes: Vec<StabilizerCode>,
    basis: SymplecticBasis,
    m: usize,
}

impl NestedInnerFamily {
    /// Build the level bases: a hyperbolic basis for `C_1⊥/C_1`, then at each
    /// level `j` the logicals of `Q_j` projected off all earlier pairs and
    /// split into `m` fresh pairs. Every level is re-verified.
    pub fn new(codes: Vec<StabilizerCode>) -> Result<Self> {
        let first = codes
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty inner family".into()))?;
        let m = first.k();
        let n = first.n();
        if m == 0 {
            return invalid("inner codes must encode at least one qubit");
        }
        for (j, q) in codes.iter().enumerate() {
            if q.n() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: q.n(),
                });
            }
            if q.k() != (j + 1) * m {
                return Err(Error::NotNested(format!(
                    "level {} encodes {} qubits, expected {}",
                    j + 1,
                    q.k(),
                    (j + 1) * m
                )));
            }
            if j > 0 && !q.c().is_subcode_of(codes[j - 1].c()) {
                return Err(Error::NotNested(format!("C_{} is not contained in C_{}", j + 1, j)));
            }
        }

        let mut pairs: Vec<(SymplecticVec, SymplecticVec)> = Vec::new();
        for (j, q) in codes.iter().enumerate() {
            let candidates: Vec<SymplecticVec> = q
                .logicals()
                .iter()
                .map(|l| {
                    let mut u = l.clone();
                    for (g, h) in &pairs {
                        project(&mut u, g, h);
                    }
                    u
                })
                .collect();
            let (fresh, _) = hyperbolic_pairs(candidates);
            pairs.extend(fresh);
            let level = SymplecticBasis { pairs: pairs.clone() };
            level.check_spans(q, (j + 1) * m)?;
        }
        Ok(NestedInnerFamily {
            codes,
            basis: SymplecticBasis { pairs },
            m,
        })
    }

    /// Number of levels `s`.
    pub fn levels(&self) -> usize {
        self.codes.len()
    }

    /// Pairs per level.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.codes[0].n()
    }

    pub fn codes(&self) -> &[StabilizerCode] {
        &self.codes
    }

    /// The innermost (smallest) stabilizer `C_s`'s code.
    pub fn innermost(&self) -> &StabilizerCode {
        self.codes.last().expect("nonempty family")
    }

    pub fn basis(&self) -> &SymplecticBasis {
        &self.basis
    }

    /// Pairs of level `j` (0-based).
    pub fn level_pairs(&self, j: usize) -> &[(SymplecticVec, SymplecticVec)] {
        &self.basis.pairs[j * self.m..(j + 1) * self.m]
    }
}
