use super::RsCode;
use crate::addcode::{AdditiveCode, StabilizerCode};
use crate::error::{invalid, Result};
use crate::gf2m::{binary_expansion, collapse_word, expand_word, Elem, Gf2mField, SelfDualBasis};
use crate::gf4::SymplecticVec;

/// The `[[mn, m(n-2k)]]` quantum Reed–Solomon code with
/// `C = ω𝔅(C_RS) + ω̄𝔅(C_RS)` and `C⊥ = ω𝔅(C_RS⊥) + ω̄𝔅(C_RS⊥)`.
///
/// Outer coordinate `i` occupies qubits `i·m .. i·m + m`, in basis order.
#[derive(Debug, Clone)]
pub struct QuantumRsCode {
    m: usize,
    k: usize,
    basis: SelfDualBasis,
    crs: RsCode,
    crs_dual: RsCode,
    stab: StabilizerCode,
}

fn css_pair(rows: &[Vec<bool>]) -> Result<AdditiveCode> {
    let len = rows.first().map_or(0, Vec::len);
    let zeros = vec![false; len];
    let mut gens = Vec::with_capacity(2 * rows.len());
    for r in rows {
        gens.push(SymplecticVec::from_bits(r, &zeros)?);
        gens.push(SymplecticVec::from_bits(&zeros, r)?);
    }
    AdditiveCode::new(len, gens)
}

impl QuantumRsCode {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if !(2..=8).contains(&m) {
            return invalid(format!("quantum RS codes need 2 <= m <= 8 (got m={m})"));
        }
        let kmax = (1usize << (m - 1)) - 1;
        if k < 1 || k > kmax {
            return invalid(format!("k exceeds 2^{{m-1}}-1: need 1 <= k <= {kmax} (got k={k})"));
        }
        let field = Gf2mField::new(m as u32)?;
        let basis = SelfDualBasis::find(&field)?;
        let n = field.order();
        let crs = RsCode::build(&field, n - k + 1)?;
        let crs_dual = crs.dual()?;
        let c = css_pair(&binary_expansion(&field, &basis, &crs.generator_rows()))?;
        let c_perp = css_pair(&binary_expansion(&field, &basis, &crs_dual.generator_rows()))?;
        let stab = StabilizerCode::from_pair(c, c_perp)?.with_d_lower(k as u32 + 1);
        Ok(QuantumRsCode {
            m,
            k,
            basis,
            crs,
            crs_dual,
            stab,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Outer length `n = 2^m - 1`.
    pub fn outer_len(&self) -> usize {
        self.crs.n()
    }

    pub fn basis(&self) -> &SelfDualBasis {
        &self.basis
    }

    pub fn field(&self) -> &Gf2mField {
        self.crs.field()
    }

    pub fn crs(&self) -> &RsCode {
        &self.crs
    }

    pub fn crs_dual(&self) -> &RsCode {
        &self.crs_dual
    }

    pub fn stab(&self) -> &StabilizerCode {
        &self.stab
    }

    pub fn into_stab(self) -> StabilizerCode {
        self.stab
    }

    /// Split `v` into its ω-part and ω̄-part as words over GF(2^m).
    pub fn split(&self, v: &SymplecticVec) -> (Vec<Elem>, Vec<Elem>) {
        let len = v.len();
        let a: Vec<bool> = (0..len).map(|i| v.a_bit(i)).collect();
        let b: Vec<bool> = (0..len).map(|i| v.b_bit(i)).collect();
        (collapse_word(&self.basis, &a), collapse_word(&self.basis, &b))
    }

    /// Inverse of [`split`](Self::split).
    pub fn join(&self, a: &[Elem], b: &[Elem]) -> SymplecticVec {
        let f = self.field();
        SymplecticVec::from_bits(&expand_word(f, &self.basis, a), &expand_word(f, &self.basis, b))
            .expect("both parts have the same length")
    }

    /// CSS decoding of an error pattern: each part is decoded as a received
    /// word of `C_RS⊥` and the returned correction moves `v` into `C⊥`.
    pub fn css_correction(&self, v: &SymplecticVec) -> Result<SymplecticVec> {
        let (a, b) = self.split(v);
        let da = self.crs_dual.decode_bm(&a)?;
        let db = self.crs_dual.decode_bm(&b)?;
        let ea: Vec<Elem> = a.iter().zip(&da).map(|(x, y)| x ^ y).collect();
        let eb: Vec<Elem> = b.iter().zip(&db).map(|(x, y)| x ^ y).collect();
        Ok(self.join(&ea, &eb))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::addcode::{min_block_weight_outside, DEFAULT_BUDGET};
    use crate::gf4::F4;

    #[test]
    fn parameters_for_all_small_cases() {
        for m in 2..=4 {
            for k in 1..(1 << (m - 1)) {
                let q = QuantumRsCode::new(m, k).unwrap();
                let n = (1 << m) - 1;
                assert_eq!(q.stab().n(), m * n);
                assert_eq!(q.stab().k(), m * (n - 2 * k));
                assert_eq!(q.stab().d_lower() as usize, k + 1);
                assert!(q.stab().c().is_self_orthogonal());
                assert_eq!(q.stab().c_perp().dim() - q.stab().c().dim(), 2 * m * (n - 2 * k));
            }
        }
        assert_eq!(QuantumRsCode::new(2, 1).unwrap().stab().describe(), "[[6,2]] d_lower=2");
        assert!(QuantumRsCode::new(3, 4).is_err());
        assert!(QuantumRsCode::new(3, 0).is_err());
        assert!(QuantumRsCode::new(1, 1).is_err());
    }

    #[test]
    fn css_view_agrees_with_additive_membership() {
        let q = QuantumRsCode::new(3, 2).unwrap();
        for g in q.stab().c().generators() {
            let (a, b) = q.split(g);
            assert!(q.crs().is_codeword(&a) && q.crs().is_codeword(&b));
            assert_eq!(&q.join(&a, &b), g);
        }
        for g in q.stab().c_perp().generators() {
            let (a, b) = q.split(g);
            assert!(q.crs_dual().is_codeword(&a) && q.crs_dual().is_codeword(&b));
        }
    }

    #[test]
    fn blockwise_distance_is_k_plus_one() {
        for (m, k) in [(2, 1), (3, 1), (3, 2), (3, 3)] {
            let q = QuantumRsCode::new(m, k).unwrap();
            let (d, w) = min_block_weight_outside(q.stab(), m, DEFAULT_BUDGET).unwrap();
            assert_eq!(d as usize, k + 1, "m={m} k={k}");
            assert!(q.stab().c_perp().contains(&w) && !q.stab().c().contains(&w));
        }
    }

    #[test]
    fn single_block_errors_are_corrected() {
        let q = QuantumRsCode::new(3, 3).unwrap();
        let n = q.stab().n();
        for block in 0..7 {
            for val in 1u32..64 {
                let mut e = SymplecticVec::zeros(n);
                for j in 0..3 {
                    let x = F4::from_parts(val >> j & 1 == 1, val >> (3 + j) & 1 == 1);
                    e.set(block * 3 + j, x);
                }
                assert_eq!(q.css_correction(&e).unwrap(), e);
            }
        }
    }
}
