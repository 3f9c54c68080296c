//! Exact counts of self-orthogonal additive codes and the Gilbert–Varshamov
//! style existence inequalities built from them.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

fn pow2_minus_1(e: usize) -> BigUint {
    (BigUint::one() << e) - BigUint::one()
}

/// Number of self-orthogonal additive codes of length `n` and dimension `k`
/// that contain a fixed nonzero vector:
/// `Π_{i=1}^{k-1} (2^{2(n-i)} - 1) / (2^i - 1)`.
pub fn sigma_count(n: usize, k: usize) -> Result<BigUint> {
    if k < 1 || k > n {
        return invalid(format!("sigma_count needs 1 <= k <= n (n={n}, k={k})"));
    }
    let mut acc = BigUint::one();
    for i in 1..k {
        // Every partial product is itself a count, so each division is exact.
        acc *= pow2_minus_1(2 * (n - i));
        let den = pow2_minus_1(i);
        debug_assert!((&acc % &den).is_zero());
        acc /= den;
    }
    Ok(acc)
}

/// Number of self-orthogonal additive codes `C` of length `n` and dimension
/// `k` with a fixed nonzero vector in `C⊥ \ C`; equals `2^k σ_{k+1}`.
pub fn tau_count(n: usize, k: usize) -> Result<BigUint> {
    if k < 1 || k + 1 > n {
        return invalid(format!("tau_count needs 1 <= k <= n-1 (n={n}, k={k})"));
    }
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= pow2_minus_1(2 * (n - i));
        let den = pow2_minus_1(i);
        debug_assert!((&acc % &den).is_zero());
        acc /= den;
    }
    Ok(acc << k)
}

/// `Σ_{i=1}^{d-1} 3^i C(n, i)`: nonzero vectors of weight below `d`.
pub(crate) fn ball_count(n: usize, d: usize) -> BigUint {
    let mut total = BigUint::zero();
    let mut binom = BigUint::one();
    let mut three_pow = BigUint::one();
    for i in 1..d.min(n + 1) {
        binom = binom * BigUint::from(n - i + 1) / BigUint::from(i);
        three_pow *= 3u32;
        total += &binom * &three_pow;
    }
    total
}

/// Whether `Σ_{i=1}^{d-1} 3^i C(n,i) < (2^{2n} - 1)/(2^{n+k} - 1)`, which
/// guarantees an `[[n, k]]` code whose `C⊥` has minimum distance ≥ d.
pub fn gv_exists(n: usize, k: usize, d: usize) -> bool {
    assert!(k <= n, "gv_exists needs k <= n");
    let lhs = ball_count(n, d);
    lhs * pow2_minus_1(n + k) < pow2_minus_1(2 * n)
}

/// Whether `Σ_{i=1}^{d-1} 3^i C(n,i) < (2^{n-k1} - 1)/(2^{k2-k1} - 1)`,
/// which lets an `[[n, k1]]` code be extended to a nested `[[n, k2]]` code
/// of distance ≥ d.
///
/// When `k1 == k2` the chain extends trivially (take the same code), so the
/// predicate is `true`; the distance is then inherited from the given code.
pub fn nested_gv_exists(n: usize, k1: usize, k2: usize, d: usize) -> bool {
    assert!(k1 <= k2 && k2 <= n, "nested_gv_exists needs k1 <= k2 <= n");
    if k1 == k2 {
        return true;
    }
    let lhs = ball_count(n, d);
    lhs * pow2_minus_1(k2 - k1) < pow2_minus_1(n - k1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_small_values() {
        for n in 1..8 {
            assert_eq!(sigma_count(n, 1).unwrap(), BigUint::one());
        }
        assert_eq!(sigma_count(2, 2).unwrap(), BigUint::from(3u32));
        assert_eq!(sigma_count(3, 2).unwrap(), BigUint::from(15u32));
        assert!(sigma_count(3, 0).is_err());
        assert!(sigma_count(3, 4).is_err());
    }

    #[test]
    fn tau_small_values() {
        assert_eq!(tau_count(2, 1).unwrap(), BigUint::from(6u32));
        assert!(tau_count(1, 1).is_err());
        for n in 2..=6 {
            for k in 1..n {
                assert_eq!(tau_count(n, k).unwrap(), sigma_count(n, k + 1).unwrap() << k);
            }
        }
    }

    #[test]
    fn gv_examples() {
        for n in 1..10 {
            for k in 0..n {
                assert!(gv_exists(n, k, 1));
            }
        }
        assert_eq!(ball_count(5, 3), BigUint::from(105u32));
        assert!(!gv_exists(5, 1, 3));
    }

    #[test]
    fn nested_degenerate_and_reduced_forms() {
        assert!(nested_gv_exists(6, 2, 2, 4));
        assert!(nested_gv_exists(10, 0, 3, 1));
        // n=10, k1=0, k2=3: RHS = 1023/7 ≈ 146.1; ball(10,2) = 30.
        assert!(nested_gv_exists(10, 0, 3, 2));
        // ball(10,3) = 30 + 9·45 = 435 > 146.
        assert!(!nested_gv_exists(10, 0, 3, 3));
    }
}
