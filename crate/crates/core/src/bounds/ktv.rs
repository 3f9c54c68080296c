use crate::error::{invalid, Error, Result};

/// One inner code `[[n, k, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRecord {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

/// Inner codes available for concatenation with algebraic-geometry outer
/// codes. Every record has `k` even, `0 < k ≤ n` and `1 ≤ d ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerCodeTable {
    records: Vec<TableRecord>,
}

impl InnerCodeTable {
    pub fn new(records: Vec<TableRecord>) -> Result<Self> {
        if records.is_empty() {
            return invalid("inner code table is empty");
        }
        for r in &records {
            if r.k == 0 || r.k > r.n || r.d == 0 || r.d > r.n || r.k % 2 == 1 {
                return Err(Error::Parse(format!(
                    "malformed record [[{}, {}, {}]]: need 0 < k <= n, k even, 1 <= d <= n",
                    r.n, r.k, r.d
                )));
            }
        }
        Ok(InnerCodeTable { records })
    }

    pub fn records(&self) -> &[TableRecord] {
        &self.records
    }
}

/// `δ₂((1 − r₁)/2 − g/n)` for outer rate `r₁` and genus ratio `g/n`.
pub fn ktv_finite(delta2: f64, r1: f64, genus_ratio: f64) -> f64 {
    delta2 * ((1.0 - r1) / 2.0 - genus_ratio)
}

/// The finite form with the limiting genus ratio `1/(q−1)`.
pub fn ktv_asymptotic(delta2: f64, r1: f64, q: f64) -> f64 {
    ktv_finite(delta2, r1, 1.0 / (q - 1.0))
}

/// The asymptotic form written in the overall rate `R = r₁r₂`:
/// `δ₂((r₂ − R)/(2r₂) − 1/(q−1))`.
pub fn ktv_rate_form(delta2: f64, r2: f64, rate: f64, q: f64) -> f64 {
    delta2 * ((r2 - rate) / (2.0 * r2) - 1.0 / (q - 1.0))
}

/// Best relative distance at `rate` over the table's inner codes. A record
/// `[[n, k, d]]` gives `m = k/2`, `q = 2^m`, `r₂ = k/n`, `δ₂ = d/n` and is
/// usable when `q ≥ 4` and `R ≤ r₂(q−3)/(q−1)`. Returns 0 when no record
/// is usable.
pub fn ktv_delta(rate: f64, table: &InnerCodeTable) -> Result<f64> {
    if !(0.0..=1.0).contains(&rate) {
        return invalid(format!("rate must lie in [0, 1] (got {rate})"));
    }
    let best = table
        .records
        .iter()
        .filter(|r| r.k >= 4)
        .filter_map(|r| {
            let q = 2f64.powi((r.k / 2) as i32);
            let r2 = r.k as f64 / r.n as f64;
            let delta2 = r.d as f64 / r.n as f64;
            ((q - 1.0) / (q - 3.0) * rate <= r2).then(|| ktv_rate_form(delta2, r2, rate, q))
        })
        .fold(0.0f64, f64::max);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn table(rs: &[(usize, usize, usize)]) -> InnerCodeTable {
        InnerCodeTable::new(rs.iter().map(|&(n, k, d)| TableRecord { n, k, d }).collect()).unwrap()
    }

    #[test]
    fn single_record_arithmetic() {
        let t = table(&[(10, 4, 3)]);
        assert!((ktv_delta(0.0, &t).unwrap() - 0.05).abs() < 1e-15);
        // q = 4: usable only while 3R <= 0.4.
        assert!(ktv_delta(0.13, &t).unwrap() > 0.0);
        assert_eq!(ktv_delta(0.14, &t).unwrap(), 0.0);
    }

    #[test]
    fn envelope_of_two_records() {
        let a = table(&[(10, 4, 3)]);
        let b = table(&[(20, 8, 5)]);
        let both = table(&[(10, 4, 3), (20, 8, 5)]);
        for i in 0..20 {
            let r = i as f64 / 50.0;
            let e = ktv_delta(r, &a).unwrap().max(ktv_delta(r, &b).unwrap());
            assert_eq!(ktv_delta(r, &both).unwrap(), e);
        }
    }

    #[test]
    fn malformed_records_are_rejected() {
        let bad = |n, k, d| InnerCodeTable::new(vec![TableRecord { n, k, d }]).is_err();
        assert!(bad(5, 3, 2));
        assert!(bad(5, 6, 2));
        assert!(bad(5, 2, 0));
        assert!(bad(5, 2, 6));
        assert!(InnerCodeTable::new(Vec::new()).is_err());
        // k = 2 is well formed but gives q = 2, which the bound cannot use.
        assert_eq!(ktv_delta(0.0, &table(&[(5, 2, 3)])).unwrap(), 0.0);
    }

    #[test]
    fn finite_asymptotic_and_rate_forms_agree() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..1000 {
            let (d2, r1, r2) = (rng.gen::<f64>(), rng.gen::<f64>(), rng.gen_range(0.01..1.0));
            let q = 2f64.powi(rng.gen_range(2..10));
            assert_eq!(ktv_asymptotic(d2, r1, q), ktv_finite(d2, r1, 1.0 / (q - 1.0)));
            assert!((ktv_asymptotic(d2, r1, q) - ktv_rate_form(d2, r2, r1 * r2, q)).abs() <= 1e-12);
        }
    }
}
