//! Binary extension fields GF(2^m) with exp/log tables, the absolute trace,
//! self-dual bases and binary expansion of codes.

use crate::error::{invalid, Error, Result};

/// Field element in the polynomial basis: bit `i` is the coefficient of `x^i`.
pub type Elem = u16;

/// Default primitive polynomials, indexed by degree (entry 0 unused).
pub const DEFAULT_PRIMITIVE_POLYS: [u32; 17] = [
    0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
];

#[derive(Clone, PartialEq, Eq)]
pub struct Gf2mField {
    m: u32,
    poly: u32,
    // exp[i] = α^i for 0 ≤ i < 2(q-1), doubled to skip a modulo in `mul`.
    exp: Vec<Elem>,
    log: Vec<u32>,
    trace_mask: Elem,
}

impl std::fmt::Debug for Gf2mField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF(2^{}) mod {:#x}", self.m, self.poly)
    }
}

impl Gf2mField {
    /// Build GF(2^m) with the default primitive polynomial.
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=16).contains(&m) {
            return invalid(format!("extension degree m={m} outside 1..=16"));
        }
        Self::with_poly(m, DEFAULT_PRIMITIVE_POLYS[m as usize])
    }

    /// Build GF(2^m) modulo `poly`; rejects polynomials whose root is not
    /// a primitive element.
    pub fn with_poly(m: u32, poly: u32) -> Result<Self> {
        if !(1..=16).contains(&m) {
            return invalid(format!("extension degree m={m} outside 1..=16"));
        }
        if poly >> m != 1 {
            return Err(Error::NotPrimitive { m, poly });
        }
        let order = (1usize << m) - 1;
        let mut exp = vec![0 as Elem; 2 * order];
        let mut log = vec![0u32; order + 1];
        let mut x: u32 = 1;
        for i in 0..order {
            if i > 0 && x == 1 {
                return Err(Error::NotPrimitive { m, poly });
            }
            exp[i] = x as Elem;
            log[x as usize] = i as u32;
            x <<= 1;
            if x >> m & 1 == 1 {
                x ^= poly;
            }
        }
        if x != 1 {
            return Err(Error::NotPrimitive { m, poly });
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        let mut field = Gf2mField {
            m,
            poly,
            exp,
            log,
            trace_mask: 0,
        };
        let mut mask = 0;
        for i in 0..m {
            if field.trace_slow(1 << i) {
                mask |= 1 << i;
            }
        }
        field.trace_mask = mask;
        Ok(field)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn poly(&self) -> u32 {
        self.poly
    }

    /// Number of elements, `2^m`.
    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// Multiplicative order `2^m - 1`.
    pub fn order(&self) -> usize {
        self.size() - 1
    }

    /// The primitive element α (class of x).
    pub fn alpha(&self) -> Elem {
        self.exp[1 % self.order()]
    }

    pub fn alpha_pow(&self, e: i64) -> Elem {
        let q = self.order() as i64;
        self.exp[e.rem_euclid(q) as usize]
    }

    pub fn log(&self, x: Elem) -> Option<u32> {
        (x != 0).then(|| self.log[x as usize])
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x == 0 || y == 0 {
            0
        } else {
            self.exp[(self.log[x as usize] + self.log[y as usize]) as usize]
        }
    }

    pub fn inv(&self, x: Elem) -> Elem {
        assert!(x != 0, "inverse of zero");
        let q = self.order() as u32;
        self.exp[((q - self.log[x as usize]) % q) as usize]
    }

    pub fn div(&self, x: Elem, y: Elem) -> Elem {
        self.mul(x, self.inv(y))
    }

    pub fn pow(&self, x: Elem, e: i64) -> Elem {
        if x == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let q = self.order() as i64;
        self.exp[(self.log[x as usize] as i64 * e).rem_euclid(q) as usize]
    }

    fn trace_slow(&self, x: Elem) -> bool {
        let mut acc = 0;
        let mut y = x;
        for _ in 0..self.m {
            acc ^= y;
            y = self.mul(y, y);
        }
        debug_assert!(acc <= 1);
        acc == 1
    }

    /// Absolute trace `x + x² + … + x^{2^{m-1}}`.
    pub fn trace(&self, x: Elem) -> bool {
        (x & self.trace_mask).count_ones() & 1 == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size() as Elem
    }
}

/// A basis `{b_1..b_m}` of GF(2^m) over GF(2) with `Tr(b_i b_j) = δ_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfDualBasis {
    elements: Vec<Elem>,
}

impl SelfDualBasis {
    /// Lexicographically first self-dual basis (as a sequence of element
    /// codes), found by depth-first search over orthonormal prefixes.
    pub fn find(field: &Gf2mField) -> Result<Self> {
        let m = field.m() as usize;
        if m > 8 {
            return Err(Error::Unsupported(format!(
                "self-dual basis search is limited to m <= 8 (got {m})"
            )));
        }
        let mut chosen = Vec::with_capacity(m);
        if extend_orthonormal(field, &mut chosen, m) {
            let basis = SelfDualBasis { elements: chosen };
            basis.check(field)?;
            Ok(basis)
        } else {
            Err(Error::Invariant("no self-dual basis found".into()))
        }
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn m(&self) -> usize {
        self.elements.len()
    }

    /// Gram matrix `Tr(b_i b_j)`.
    pub fn gram(&self, field: &Gf2mField) -> Vec<Vec<bool>> {
        self.elements
            .iter()
            .map(|&x| self.elements.iter().map(|&y| field.trace(field.mul(x, y))).collect())
            .collect()
    }

    fn check(&self, field: &Gf2mField) -> Result<()> {
        let g = self.gram(field);
        for (i, row) in g.iter().enumerate() {
            for (j, &t) in row.iter().enumerate() {
                if t != (i == j) {
                    return Err(Error::Invariant("basis Gram matrix is not the identity".into()));
                }
            }
        }
        Ok(())
    }

    /// Coordinates of `x`: bit `j` is `c_j` with `x = Σ c_j b_j`.
    ///
    /// For a self-dual basis the coordinates are `c_j = Tr(x b_j)`.
    pub fn coords(&self, field: &Gf2mField, x: Elem) -> Vec<bool> {
        self.elements.iter().map(|&b| field.trace(field.mul(x, b))).collect()
    }

    pub fn from_coords(&self, coords: &[bool]) -> Elem {
        coords
            .iter()
            .zip(&self.elements)
            .filter(|(&c, _)| c)
            .fold(0, |acc, (_, &b)| acc ^ b)
    }
}

fn extend_orthonormal(field: &Gf2mField, chosen: &mut Vec<Elem>, m: usize) -> bool {
    if chosen.len() == m {
        return true;
    }
    for x in 1..field.size() as Elem {
        if !field.trace(field.mul(x, x)) {
            continue;
        }
        if chosen.iter().any(|&b| field.trace(field.mul(x, b))) {
            continue;
        }
        // Orthonormal vectors are automatically independent.
        chosen.push(x);
        if extend_orthonormal(field, chosen, m) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Binary expansion of one word: symbol `i` becomes bits `i*m .. i*m + m`.
pub fn expand_word(field: &Gf2mField, basis: &SelfDualBasis, word: &[Elem]) -> Vec<bool> {
    word.iter().flat_map(|&c| basis.coords(field, c)).collect()
}

/// Inverse of [`expand_word`].
pub fn collapse_word(basis: &SelfDualBasis, bits: &[bool]) -> Vec<Elem> {
    bits.chunks(basis.m()).map(|c| basis.from_coords(c)).collect()
}

/// Binary generator set of the expansion of the code generated by `rows`.
///
/// Each row `g` contributes `α^t · g` for `t < m`, so a rank-k generator
/// matrix over GF(2^m) yields `k·m` binary rows.
pub fn binary_expansion(field: &Gf2mField, basis: &SelfDualBasis, rows: &[Vec<Elem>]) -> Vec<Vec<bool>> {
    let mut out = Vec::with_capacity(rows.len() * field.m() as usize);
    for row in rows {
        for t in 0..field.m() as i64 {
            let s = field.alpha_pow(t);
            let scaled: Vec<Elem> = row.iter().map(|&c| field.mul(c, s)).collect();
            out.push(expand_word(field, basis, &scaled));
        }
    }
    out
}
