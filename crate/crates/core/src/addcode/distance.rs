//! Exact minimum weight of `C⊥ \ C` by coset-wise Gray-code enumeration.
//!
//! Only the `2^{2k} - 1` nontrivial cosets `v + C` of `C` in `C⊥` are visited,
//! each by a Gray code over the generators of `C`, so one vector addition
//! and one popcount pass per element.

use rayon::prelude::*;

use super::{AdditiveCode, StabilizerCode};
use crate::error::{Error, Result};
use crate::gf2::xor_into;
use crate::gf4::SymplecticVec;

/// Default enumeration budget (elements visited).
pub const DEFAULT_BUDGET: u128 = 1 << 32;

/// Number of elements of `C⊥ \ C`, i.e. the enumeration cost.
pub fn outside_enumeration_count(q: &StabilizerCode) -> u128 {
    let dim_c = q.c().dim() as u32;
    let k2 = 2 * q.k() as u32;
    if dim_c + k2 >= 127 {
        return u128::MAX;
    }
    (1u128 << dim_c) * ((1u128 << k2) - 1)
}

fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

#[inline]
fn symbol_weight(words: &[u64], half: usize) -> u32 {
    let (a, b) = words.split_at(half);
    a.iter().zip(b).map(|(x, y)| (x | y).count_ones()).sum()
}

/// Minimum over one chunk: start at `start`, then walk the Gray code over
/// `gens`. Returns the smallest weight and the first vector attaining it.
fn gray_min<F>(start: Vec<u64>, gens: &[Vec<u64>], half: usize, weight: &F) -> (u32, Vec<u64>)
where
    F: Fn(&[u64], usize) -> u32,
{
    let mut cur = start;
    let mut best = weight(&cur, half);
    let mut best_vec = cur.clone();
    if gens.is_empty() || best <= 1 {
        return (best, best_vec);
    }
    let steps: u64 = 1 << gens.len();
    for t in 1..steps {
        xor_into(&mut cur, &gens[t.trailing_zeros() as usize]);
        let w = weight(&cur, half);
        if w < best {
            best = w;
            best_vec.copy_from_slice(&cur);
            if best <= 1 {
                break;
            }
        }
    }
    (best, best_vec)
}

fn search_outside<F>(q: &StabilizerCode, budget: u128, weight: F) -> Result<(u32, SymplecticVec)>
where
    F: Fn(&[u64], usize) -> u32 + Sync,
{
    if q.k() == 0 {
        return Err(Error::Unsupported(
            "minimum weight of C⊥ \\ C is undefined for k = 0 codes".into(),
        ));
    }
    check_budget(outside_enumeration_count(q), budget)?;

    let n = q.n();
    let gens: Vec<Vec<u64>> = q.c().generators().iter().map(|g| g.words().to_vec()).collect();
    let logicals: Vec<Vec<u64>> = q.logicals().iter().map(|g| g.words().to_vec()).collect();
    let width = 2 * crate::gf2::words_for(n);
    let half = width / 2;
    let dim_c = gens.len();
    let k2 = logicals.len();

    // Split the Gray walk over C by fixing its top `prefix` generators.
    let prefix = dim_c.min(8usize.saturating_sub(k2));
    let low = dim_c - prefix;
    let cosets = (1usize << k2) - 1;
    let chunks = cosets << prefix;

    let best = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let coset = (chunk >> prefix) + 1;
            let pre = chunk & ((1 << prefix) - 1);
            let mut start = vec![0u64; width];
            for (i, l) in logicals.iter().enumerate() {
                if coset >> i & 1 == 1 {
                    xor_into(&mut start, l);
                }
            }
            for i in 0..prefix {
                if pre >> i & 1 == 1 {
                    xor_into(&mut start, &gens[low + i]);
                }
            }
            let (w, v) = gray_min(start, &gens[..low], half, &weight);
            (w, chunk, v)
        })
        .min_by_key(|(w, chunk, _)| (*w, *chunk))
        .expect("at least one nontrivial coset");
    Ok((best.0, SymplecticVec::from_words(n, best.2)))
}

/// Exact minimum weight over `C⊥ \ C`.
pub fn min_weight_outside(q: &StabilizerCode, budget: u128) -> Result<u32> {
    min_weight_outside_witness(q, budget).map(|(d, _)| d)
}

/// Exact minimum weight over `C⊥ \ C` with a vector attaining it.
pub fn min_weight_outside_witness(q: &StabilizerCode, budget: u128) -> Result<(u32, SymplecticVec)> {
    search_outside(q, budget, symbol_weight)
}

/// Minimum number of nonzero `block`-symbol blocks over `C⊥ \ C`, with a
/// witness. Blocks are consecutive runs of `block` symbols.
///
/// Block supports are visited in increasing size; for each support the
/// subspace of `C⊥` living on it is found by linear algebra and tested
/// against `C`. The budget bounds the number of supports examined.
pub fn min_block_weight_outside(q: &StabilizerCode, block: usize, budget: u128) -> Result<(u32, SymplecticVec)> {
    let n = q.n();
    if block == 0 || n % block != 0 {
        return Err(Error::InvalidParameter(format!(
            "block size {block} does not divide length {n}"
        )));
    }
    if q.k() == 0 {
        return Err(Error::Unsupported(
            "minimum weight of C⊥ \\ C is undefined for k = 0 codes".into(),
        ));
    }
    let nb = n / block;
    let half = crate::gf2::words_for(n);
    let rows: Vec<Vec<u64>> = q.c().generators().iter().map(|g| g.conj().words().to_vec()).collect();
    let mut examined = 0u128;
    let mut binom = 1u128;
    for w in 1..=nb {
        binom = binom * (nb - w + 1) as u128 / w as u128;
        examined = examined.saturating_add(binom);
        check_budget(examined, budget)?;
        let found = combinations(nb, w).into_par_iter().find_map_first(|support| {
            let mut mask = vec![0u64; 2 * half];
            for &b in &support {
                for i in b * block..(b + 1) * block {
                    crate::gf2::flip_bit(&mut mask, i);
                    crate::gf2::flip_bit(&mut mask[half..], i);
                }
            }
            crate::gf2::null_space(&rows, &mask)
                .into_iter()
                .map(|v| SymplecticVec::from_words(n, v))
                .find(|v| !q.c().contains(v))
        });
        if let Some(v) = found {
            return Ok((w as u32, v));
        }
    }
    Err(Error::Invariant("C⊥ \\ C is empty although k > 0".into()))
}

/// All `w`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, w: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..w).collect();
    if w > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..w).rev().find(|&i| cur[i] < n - w + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..w {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Minimum weight of a nonzero member of `c` (used for `k = 0` fixtures).
pub fn min_nonzero_weight(c: &AdditiveCode, budget: u128) -> Result<u32> {
    let dim = c.dim();
    if dim == 0 {
        return Err(Error::InvalidParameter("the zero code has no nonzero member".into()));
    }
    let required = if dim >= 127 { u128::MAX } else { (1u128 << dim) - 1 };
    check_budget(required, budget)?;
    let gens: Vec<Vec<u64>> = c.generators().iter().map(|g| g.words().to_vec()).collect();
    let width = gens[0].len();
    let half = width / 2;
    // Fix the top generator on, then walk the rest; repeat for each top index.
    let best = (0..dim)
        .into_par_iter()
        .map(|top| gray_min(gens[top].clone(), &gens[..top], half, &symbol_weight).0)
        .min()
        .expect("dim > 0");
    Ok(best)
}
