//! GF(4) symbols and length-n vectors in the two-bit (ω, ω̄) representation.
//!
//! A symbol `x = a·ω + b·ω̄` is stored as the bit pair `(a, b)`, so
//! `0 = (0,0)`, `ω = (1,0)`, `ω̄ = (0,1)` and `1 = ω + ω̄ = (1,1)`. Read as a
//! Pauli operator, `a` is the X part and `b` the Z part: `ω ↔ X`, `ω̄ ↔ Z`,
//! `1 ↔ Y`. Under this split the trace inner product is the binary
//! symplectic form.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};
use crate::gf2;

/// An element of GF(4).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const OMEGA: F4 = F4(1);
    pub const OMEGA_BAR: F4 = F4(2);
    pub const ONE: F4 = F4(3);

    pub const ALL: [F4; 4] = [F4::ZERO, F4::OMEGA, F4::OMEGA_BAR, F4::ONE];

    pub fn from_parts(a: bool, b: bool) -> F4 {
        F4(a as u8 | (b as u8) << 1)
    }

    /// Coefficient of ω.
    pub fn a(self) -> bool {
        self.0 & 1 == 1
    }

    /// Coefficient of ω̄.
    pub fn b(self) -> bool {
        self.0 & 2 == 2
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `x̄ = x²`; swaps the ω and ω̄ coordinates.
    pub fn conj(self) -> F4 {
        F4::from_parts(self.b(), self.a())
    }

    /// Absolute trace GF(4) → GF(2), `Tr(x) = x + x²`.
    pub fn trace(self) -> bool {
        // Tr(ω) = Tr(ω̄) = 1, Tr(1) = 0.
        self.a() ^ self.b()
    }

    // Polynomial basis {1, ω}: x = b + (a + b)ω.
    fn to_poly(self) -> (bool, bool) {
        (self.b(), self.a() ^ self.b())
    }

    fn from_poly(c0: bool, c1: bool) -> F4 {
        F4::from_parts(c0 ^ c1, c0)
    }

    pub fn to_char(self) -> char {
        match self.0 {
            0 => '0',
            1 => 'w',
            2 => 'W',
            _ => '1',
        }
    }

    /// Pauli letter for this symbol (`I`, `X`, `Z`, `Y`).
    pub fn to_pauli(self) -> char {
        match self.0 {
            0 => 'I',
            1 => 'X',
            2 => 'Z',
            _ => 'Y',
        }
    }

    pub fn from_pauli(c: char) -> Option<F4> {
        match c {
            'I' | 'i' | '_' | '0' => Some(F4::ZERO),
            'X' | 'x' => Some(F4::OMEGA),
            'Z' | 'z' => Some(F4::OMEGA_BAR),
            'Y' | 'y' => Some(F4::ONE),
            _ => None,
        }
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl Add for F4 {
    type Output = F4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, rhs: F4) -> F4 {
        let (c0, c1) = self.to_poly();
        let (d0, d1) = rhs.to_poly();
        // ω² = ω + 1
        let e0 = (c0 & d0) ^ (c1 & d1);
        let e1 = (c0 & d1) ^ (c1 & d0) ^ (c1 & d1);
        F4::from_poly(e0, e1)
    }
}

/// A vector in GF(4)^n stored as two packed n-bit halves.
///
/// The word layout is `[a_0 .. a_{W-1}, b_0 .. b_{W-1}]` with `W = ⌈n/64⌉`;
/// bits at positions ≥ n are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticVec {
    n: usize,
    words: Vec<u64>,
}

impl SymplecticVec {
    pub fn zeros(n: usize) -> Self {
        SymplecticVec {
            n,
            words: vec![0; 2 * gf2::words_for(n)],
        }
    }

    pub fn from_symbols(symbols: &[F4]) -> Self {
        let mut v = SymplecticVec::zeros(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            v.set(i, s);
        }
        v
    }

    /// Build from explicit ω-part and ω̄-part bits.
    pub fn from_bits(a: &[bool], b: &[bool]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
        let mut v = SymplecticVec::zeros(a.len());
        for i in 0..a.len() {
            v.set(i, F4::from_parts(a[i], b[i]));
        }
        Ok(v)
    }

    /// Parse a Pauli string such as `"XZZXI"`.
    pub fn from_pauli(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| F4::from_pauli(c).ok_or_else(|| Error::Parse(format!("bad Pauli letter {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymplecticVec::from_symbols(&symbols))
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), 2 * gf2::words_for(n));
        SymplecticVec { n, words }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub(crate) fn half(&self) -> usize {
        self.words.len() / 2
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn a_bit(&self, i: usize) -> bool {
        gf2::get_bit(&self.words, i)
    }

    pub fn b_bit(&self, i: usize) -> bool {
        gf2::get_bit(&self.words[self.half()..], i)
    }

    pub fn symbol(&self, i: usize) -> F4 {
        assert!(i < self.n, "index {i} out of range for length {}", self.n);
        F4::from_parts(self.a_bit(i), self.b_bit(i))
    }

    pub fn set(&mut self, i: usize, x: F4) {
        assert!(i < self.n, "index {i} out of range for length {}", self.n);
        let h = self.half();
        if self.a_bit(i) != x.a() {
            gf2::flip_bit(&mut self.words, i);
        }
        if self.b_bit(i) != x.b() {
            gf2::flip_bit(&mut self.words[h..], i);
        }
    }

    pub fn symbols(&self) -> Vec<F4> {
        (0..self.n).map(|i| self.symbol(i)).collect()
    }

    pub fn weight(&self) -> usize {
        let h = self.half();
        self.words[..h]
            .iter()
            .zip(&self.words[h..])
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        gf2::is_zero(&self.words)
    }

    /// Trace inner product `Σ (u_i v̄_i + ū_i v_i)`; panics on length mismatch.
    pub fn inner(&self, other: &SymplecticVec) -> bool {
        assert_eq!(self.n, other.n, "trace inner product of unequal lengths");
        let h = self.half();
        let (ua, ub) = self.words.split_at(h);
        let (va, vb) = other.words.split_at(h);
        gf2::dot(ua, vb) ^ gf2::dot(ub, va)
    }

    /// The vector with ω and ω̄ parts exchanged (componentwise conjugation).
    pub fn conj(&self) -> SymplecticVec {
        let h = self.half();
        let mut words = self.words[h..].to_vec();
        words.extend_from_slice(&self.words[..h]);
        SymplecticVec { n: self.n, words }
    }

    /// Symbols `start .. start + len` as a new vector.
    pub fn slice(&self, start: usize, len: usize) -> SymplecticVec {
        let mut out = SymplecticVec::zeros(len);
        for i in 0..len {
            out.set(i, self.symbol(start + i));
        }
        out
    }

    /// Overwrite symbols `start .. start + part.len()` with `part`.
    pub fn write_slice(&mut self, start: usize, part: &SymplecticVec) {
        for i in 0..part.len() {
            self.set(start + i, part.symbol(i));
        }
    }

    pub fn concat(parts: &[SymplecticVec]) -> SymplecticVec {
        let n = parts.iter().map(|p| p.len()).sum();
        let mut out = SymplecticVec::zeros(n);
        let mut at = 0;
        for p in parts {
            out.write_slice(at, p);
            at += p.len();
        }
        out
    }

    /// Place `self` at symbol offset `start` inside a zero vector of length `n`.
    pub fn embed(&self, n: usize, start: usize) -> SymplecticVec {
        let mut out = SymplecticVec::zeros(n);
        out.write_slice(start, self);
        out
    }

    pub fn to_pauli_string(&self) -> String {
        self.symbols().into_iter().map(F4::to_pauli).collect()
    }
}

impl fmt::Debug for SymplecticVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymplecticVec({})", self.to_pauli_string())
    }
}

impl fmt::Display for SymplecticVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pauli_string())
    }
}

impl AddAssign<&SymplecticVec> for SymplecticVec {
    fn add_assign(&mut self, rhs: &SymplecticVec) {
        assert_eq!(self.n, rhs.n, "adding vectors of unequal lengths");
        gf2::xor_into(&mut self.words, &rhs.words);
    }
}

impl Add<&SymplecticVec> for &SymplecticVec {
    type Output = SymplecticVec;
    fn add(self, rhs: &SymplecticVec) -> SymplecticVec {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

/// Trace inner product with a length check.
pub fn trace_inner(u: &SymplecticVec, v: &SymplecticVec) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            got: v.len(),
        });
    }
    Ok(u.inner(v))
}
