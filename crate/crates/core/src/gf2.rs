//! Dense GF(2) linear algebra on word-packed rows.
//!
//! Rows are `Vec<u64>` of a fixed word width. Column `c` lives in word
//! `c / 64`, bit `c % 64`. Callers that use padded layouts pass a column mask
//! so that padding bits never become free variables.

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
pub(crate) fn get_bit(row: &[u64], c: usize) -> bool {
    (row[c / 64] >> (c % 64)) & 1 == 1
}

#[inline]
pub(crate) fn flip_bit(row: &mut [u64], c: usize) {
    row[c / 64] ^= 1 << (c % 64);
}

#[inline]
pub(crate) fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

#[inline]
pub(crate) fn is_zero(row: &[u64]) -> bool {
    row.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn dot(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum::<u32>() & 1 == 1
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

/// Incrementally built semi-echelon basis of a subspace.
///
/// Every stored row has a pivot (its lowest set bit after reduction) that is
/// clear in all rows inserted after it. Each row also records which inserted
/// vectors it is a combination of, so membership queries can return
/// coefficients.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    width: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<u64>>,
    inserted: usize,
}

impl Echelon {
    pub(crate) fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` in place; returns the combination of accepted vectors used.
    fn reduce_tracked(&self, v: &mut [u64]) -> Vec<u64> {
        let mut combo = vec![0u64; words_for(self.inserted.max(1))];
        for ((row, &p), c) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if get_bit(v, p) {
                xor_into(v, row);
                xor_into(&mut combo[..c.len()], c);
            }
        }
        combo
    }

    pub(crate) fn reduce(&self, v: &mut [u64]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if get_bit(v, p) {
                xor_into(v, row);
            }
        }
    }

    pub(crate) fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero(&w)
    }

    /// Insert `v`; returns `false` (and stores nothing) if it is dependent.
    pub(crate) fn insert(&mut self, v: &[u64]) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let mut w = v.to_vec();
        let mut combo = self.reduce_tracked(&mut w);
        match lowest_bit(&w) {
            None => false,
            Some(p) => {
                let idx = self.inserted;
                self.inserted += 1;
                combo.resize(words_for(self.inserted), 0);
                flip_bit(&mut combo, idx);
                self.rows.push(w);
                self.pivots.push(p);
                self.combos.push(combo);
                true
            }
        }
    }

    /// Coefficients (over accepted vectors, in insertion order) expressing
    /// `v`, or `None` when `v` is outside the span.
    pub(crate) fn solve(&self, v: &[u64]) -> Option<Vec<bool>> {
        let mut w = v.to_vec();
        let combo = self.reduce_tracked(&mut w);
        if !is_zero(&w) {
            return None;
        }
        Some((0..self.inserted).map(|i| get_bit(&combo, i)).collect())
    }
}

/// Basis of `{x : dot(x, r) = 0 for all rows r}` restricted to the columns
/// set in `mask`.
pub(crate) fn null_space(rows: &[Vec<u64>], mask: &[u64]) -> Vec<Vec<u64>> {
    let width = mask.len();
    let ncols = width * 64;
    // Full reduced row echelon form.
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().zip(mask).map(|(a, b)| a & b).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if !get_bit(mask, c) {
            continue;
        }
        let Some(sel) = (r..m.len()).find(|&i| get_bit(&m[i], c)) else {
            continue;
        };
        m.swap(r, sel);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && get_bit(row, c) {
                xor_into(row, &pivot_row);
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for c in 0..ncols {
        if !get_bit(mask, c) || pivot_cols.contains(&c) {
            continue;
        }
        let mut v = vec![0u64; width];
        flip_bit(&mut v, c);
        for (row, &pc) in m.iter().zip(&pivot_cols) {
            if get_bit(row, c) {
                flip_bit(&mut v, pc);
            }
        }
        basis.push(v);
    }
    basis
}
