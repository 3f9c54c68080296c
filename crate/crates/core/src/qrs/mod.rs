//! Reed–Solomon codes over GF(2^m) with Berlekamp–Massey decoding, and the
//! quantum Reed–Solomon construction built from their binary expansions.

mod quantum;

pub use quantum::QuantumRsCode;

use crate::error::{invalid, Error, Result};
use crate::gf2m::{Elem, Gf2mField};

/// Polynomials are coefficient vectors, lowest degree first, without
/// trailing zeros (the zero polynomial is empty).
type Poly = Vec<Elem>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_mul(f: &Gf2mField, a: &[Elem], b: &[Elem]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] ^= f.mul(x, y);
        }
    }
    trim(out)
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
fn poly_divmod(f: &Gf2mField, a: &[Elem], b: &[Elem]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = f.inv(*b.last().unwrap());
    let mut quot = vec![0; rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = f.mul(*rem.last().unwrap(), lead_inv);
        quot[shift] = c;
        for (i, &y) in b.iter().enumerate() {
            rem[shift + i] ^= f.mul(c, y);
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn poly_eval(f: &Gf2mField, p: &[Elem], x: Elem) -> Elem {
    p.iter().rev().fold(0, |acc, &c| f.mul(acc, x) ^ c)
}

/// Formal derivative: in characteristic 2 only odd-degree terms survive.
fn poly_deriv(p: &[Elem]) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| if i % 2 == 1 { c } else { 0 })
            .collect(),
    )
}

/// A cyclic Reed–Solomon code of length `2^m - 1` whose generator has the
/// consecutive roots `α^b, α^{b+1}, …, α^{b+n-k-1}`.
#[derive(Debug, Clone)]
pub struct RsCode {
    field: Gf2mField,
    n: usize,
    k: usize,
    g: Poly,
    root_offset: usize,
}

impl RsCode {
    /// The `[n, n-d+1, d]` code with generator `Π_{i=0}^{d-2} (x - α^i)`.
    pub fn build(field: &Gf2mField, d: usize) -> Result<Self> {
        let n = field.order();
        if d < 2 || d > n {
            return invalid(format!("RS distance must satisfy 2 <= d <= {n} (got {d})"));
        }
        let mut g: Poly = vec![1];
        for i in 0..d - 1 {
            g = poly_mul(field, &g, &[field.alpha_pow(i as i64), 1]);
        }
        Ok(RsCode {
            field: field.clone(),
            n,
            k: n - (d - 1),
            g,
            root_offset: 0,
        })
    }

    /// Cyclic code with generator `g`, which must divide `x^n - 1` and have
    /// a run of consecutive roots; the run's offset is found by scanning.
    pub fn from_generator(field: &Gf2mField, g: Poly) -> Result<Self> {
        let n = field.order();
        let g = trim(g);
        let deg = g
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::InvalidParameter("zero generator".into()))?;
        if deg >= n {
            return invalid(format!("generator degree {deg} leaves no information symbols"));
        }
        let mut xn1 = vec![0; n + 1];
        xn1[0] = 1;
        xn1[n] = 1;
        if !poly_divmod(field, &xn1, &g).1.is_empty() {
            return invalid("generator does not divide x^n - 1");
        }
        let is_root: Vec<bool> = (0..n)
            .map(|i| poly_eval(field, &g, field.alpha_pow(i as i64)) == 0)
            .collect();
        let root_offset = if deg == 0 {
            0
        } else {
            (0..n)
                .find(|&b| (0..deg).all(|j| is_root[(b + j) % n]))
                .ok_or_else(|| Error::InvalidParameter("generator roots are not consecutive powers of α".into()))?
        };
        Ok(RsCode {
            field: field.clone(),
            n,
            k: n - deg,
            g,
            root_offset,
        })
    }

    /// The dual cyclic code `[n, n-k, k+1]`, generated by the monic
    /// reciprocal of the check polynomial `(x^n - 1)/g`.
    pub fn dual(&self) -> Result<Self> {
        let f = &self.field;
        let mut xn1 = vec![0; self.n + 1];
        xn1[0] = 1;
        xn1[self.n] = 1;
        let (h, rem) = poly_divmod(f, &xn1, &self.g);
        debug_assert!(rem.is_empty());
        let mut recip: Poly = h.iter().rev().copied().collect();
        recip = trim(recip);
        let lead_inv = f.inv(*recip.last().expect("h is nonzero"));
        let recip: Poly = recip.iter().map(|&c| f.mul(c, lead_inv)).collect();
        Self::from_generator(f, recip)
    }

    pub fn field(&self) -> &Gf2mField {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Designed (and, being MDS, exact) minimum distance `n - k + 1`.
    pub fn d(&self) -> usize {
        self.n - self.k + 1
    }

    pub fn generator(&self) -> &[Elem] {
        &self.g
    }

    pub fn root_offset(&self) -> usize {
        self.root_offset
    }

    /// Exponents of the generator's roots, in run order.
    pub fn roots(&self) -> Vec<usize> {
        (0..self.n - self.k).map(|j| (self.root_offset + j) % self.n).collect()
    }

    /// Non-systematic encoding `m(x) g(x)`.
    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if msg.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                got: msg.len(),
            });
        }
        let mut word = poly_mul(&self.field, msg, &self.g);
        word.resize(self.n, 0);
        Ok(word)
    }

    /// The `k` cyclic shifts of `g`, a generator matrix over GF(2^m).
    pub fn generator_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.k)
            .map(|s| {
                let mut row = vec![0; self.n];
                row[s..s + self.g.len()].copy_from_slice(&self.g);
                row
            })
            .collect()
    }

    /// `S_j = r(α^{b+j})` for `j < n - k`.
    pub fn syndromes(&self, word: &[Elem]) -> Vec<Elem> {
        self.roots()
            .into_iter()
            .map(|e| poly_eval(&self.field, word, self.field.alpha_pow(e as i64)))
            .collect()
    }

    pub fn is_codeword(&self, word: &[Elem]) -> bool {
        word.len() == self.n && self.syndromes(word).iter().all(|&s| s == 0)
    }

    /// Errors-only Berlekamp–Massey decoding. Returns the corrected codeword
    /// or [`Error::DecodeFailure`]; any result that does not re-check as a
    /// codeword is reported as a failure.
    pub fn decode_bm(&self, received: &[Elem]) -> Result<Vec<Elem>> {
        if received.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: received.len(),
            });
        }
        let f = &self.field;
        let synd = self.syndromes(received);
        if synd.iter().all(|&s| s == 0) {
            return Ok(received.to_vec());
        }
        let nsyn = synd.len();
        let lambda = berlekamp_massey(f, &synd);
        let nerr = lambda.len() - 1;
        if 2 * nerr > nsyn {
            return Err(Error::DecodeFailure(format!(
                "error locator degree {nerr} exceeds capacity"
            )));
        }

        // Chien search: position i is in error iff Λ(α^{-i}) = 0.
        let positions: Vec<usize> = (0..self.n)
            .filter(|&i| poly_eval(f, &lambda, f.alpha_pow(-(i as i64))) == 0)
            .collect();
        if positions.len() != nerr {
            return Err(Error::DecodeFailure(format!(
                "locator of degree {nerr} has {} roots in the field",
                positions.len()
            )));
        }

        let mut omega = poly_mul(f, &synd, &lambda);
        omega.truncate(nsyn);
        let omega = trim(omega);
        let dlambda = poly_deriv(&lambda);
        let mut word = received.to_vec();
        for &i in &positions {
            let x_inv = f.alpha_pow(-(i as i64));
            let den = poly_eval(f, &dlambda, x_inv);
            if den == 0 {
                return Err(Error::DecodeFailure("repeated error locator root".into()));
            }
            let scale = f.alpha_pow(i as i64 * (1 - self.root_offset as i64));
            let e = f.mul(scale, f.div(poly_eval(f, &omega, x_inv), den));
            word[i] ^= e;
        }
        if !self.is_codeword(&word) {
            return Err(Error::DecodeFailure("correction is not a codeword".into()));
        }
        Ok(word)
    }
}

/// Shortest LFSR (connection polynomial `Λ`, with `Λ_0 = 1`) generating
/// the syndrome sequence.
fn berlekamp_massey(f: &Gf2mField, s: &[Elem]) -> Poly {
    let mut c: Poly = vec![1];
    let mut b: Poly = vec![1];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut last = 1 as Elem;
    for r in 0..s.len() {
        let mut disc = s[r];
        for i in 1..=l.min(c.len() - 1) {
            disc ^= f.mul(c[i], s[r - i]);
        }
        if disc == 0 {
            shift += 1;
            continue;
        }
        let coef = f.div(disc, last);
        let mut next = c.clone();
        if next.len() < b.len() + shift {
            next.resize(b.len() + shift, 0);
        }
        for (i, &y) in b.iter().enumerate() {
            next[i + shift] ^= f.mul(coef, y);
        }
        if 2 * l <= r {
            b = c;
            l = r + 1 - l;
            last = disc;
            shift = 1;
        } else {
            shift += 1;
        }
        c = next;
    }
    let mut c = trim(c);
    c.resize(l + 1, 0);
    c
}
