use crate::addcode::StabilizerCode;
use crate::error::{Error, Result};
use crate::gf4::SymplecticVec;

/// Largest number of syndrome bits a table will hold.
pub const MAX_SYNDROME_BITS: usize = 22;

/// Largest length verified exhaustively on construction.
const VERIFY_ON_BUILD: usize = 12;

/// Coset-leader table: for every syndrome of the stabilizer generators, a
/// representative of minimum weight. Weight counts nonzero blocks of
/// `block` symbols (ordinary Hamming weight for `block = 1`); ties go to
/// the lexicographically smallest bit string `a₀…a_{n−1} b₀…b_{n−1}`.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    n: usize,
    block: usize,
    gens: Vec<(u64, u64)>,
    leaders: Vec<(u64, u64)>,
}

fn parts(v: &SymplecticVec) -> (u64, u64) {
    let w = v.words();
    (w[0], w[1])
}

fn lex_key(a: u64, b: u64) -> (u64, u64) {
    (a.reverse_bits(), b.reverse_bits())
}

impl SyndromeTable {
    /// Table under Hamming weight.
    pub fn build(code: &StabilizerCode, budget: u128) -> Result<Self> {
        Self::build_blockwise(code, 1, budget)
    }

    /// Table under blockwise weight. `budget` bounds the number of error
    /// patterns examined.
    pub fn build_blockwise(code: &StabilizerCode, block: usize, budget: u128) -> Result<Self> {
        let n = code.n();
        if n == 0 || n > 64 {
            return Err(Error::Unsupported(format!(
                "syndrome tables need 1 <= n <= 64 (got {n})"
            )));
        }
        if block == 0 || n % block != 0 {
            return Err(Error::InvalidParameter(format!(
                "block size {block} does not divide length {n}"
            )));
        }
        let r = code.c().dim();
        if r > MAX_SYNDROME_BITS {
            return Err(Error::BudgetExceeded {
                required: 1u128 << r,
                budget: 1u128 << MAX_SYNDROME_BITS,
            });
        }
        let gens: Vec<(u64, u64)> = code.c().generators().iter().map(parts).collect();
        let mut table = SyndromeTable {
            n,
            block,
            gens,
            leaders: Vec::new(),
        };
        table.fill(budget)?;
        if n <= VERIFY_ON_BUILD {
            table.verify_minimal()?;
        }
        Ok(table)
    }

    fn fill(&mut self, budget: u128) -> Result<()> {
        let size = 1usize << self.gens.len();
        let mut best: Vec<Option<(u64, u64)>> = vec![None; size];
        best[0] = Some((0, 0));
        let mut covered = 1usize;
        let nb = self.n / self.block;
        let per_block = (1u128 << (2 * self.block)) - 1;
        let mut examined = 1u128;
        let mut level = 0;
        while covered < size {
            level += 1;
            if level > nb {
                return Err(Error::Invariant("syndrome map is not surjective".into()));
            }
            let count = binomial(nb, level).saturating_mul(per_block.saturating_pow(level as u32));
            examined = examined.saturating_add(count);
            if examined > budget {
                return Err(Error::BudgetExceeded {
                    required: examined,
                    budget,
                });
            }
            let mut found: Vec<Option<(u64, u64)>> = vec![None; size];
            for support in crate::addcode::combinations(nb, level) {
                self.for_each_on_blocks(&support, |a, b| {
                    let s = self.syndrome_parts(a, b) as usize;
                    if best[s].is_some() {
                        return;
                    }
                    match found[s] {
                        Some((fa, fb)) if lex_key(fa, fb) <= lex_key(a, b) => {}
                        _ => found[s] = Some((a, b)),
                    }
                });
            }
            for (s, f) in found.into_iter().enumerate() {
                if let Some(v) = f {
                    best[s] = Some(v);
                    covered += 1;
                }
            }
        }
        self.leaders = best.into_iter().map(|v| v.expect("all syndromes covered")).collect();
        Ok(())
    }

    /// Every vector whose nonzero blocks are exactly `support`.
    fn for_each_on_blocks<F: FnMut(u64, u64)>(&self, support: &[usize], mut f: F) {
        let bits = 2 * self.block;
        let per = (1u64 << bits) - 1;
        let mut digits = vec![1u64; support.len()];
        loop {
            let (mut a, mut b) = (0u64, 0u64);
            for (&blk, &d) in support.iter().zip(&digits) {
                let lo = blk * self.block;
                let mask = (1u64 << self.block) - 1;
                a |= (d & mask) << lo;
                b |= ((d >> self.block) & mask) << lo;
            }
            f(a, b);
            let Some(i) = (0..digits.len()).rev().find(|&i| digits[i] < per) else {
                return;
            };
            digits[i] += 1;
            for d in &mut digits[i + 1..] {
                *d = 1;
            }
        }
    }

    fn syndrome_parts(&self, a: u64, b: u64) -> u64 {
        self.gens.iter().enumerate().fold(0u64, |s, (j, &(ga, gb))| {
            s | ((((a & gb) ^ (b & ga)).count_ones() as u64 & 1) << j)
        })
    }

    fn block_weight(&self, a: u64, b: u64) -> u32 {
        let support = a | b;
        if self.block == 1 {
            return support.count_ones();
        }
        let mask = (1u64 << self.block) - 1;
        (0..self.n / self.block)
            .filter(|&i| (support >> (i * self.block)) & mask != 0)
            .count() as u32
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block(&self) -> usize {
        self.block
    }

    /// Number of syndrome bits.
    pub fn syndrome_bits(&self) -> usize {
        self.gens.len()
    }

    /// Number of entries, `2^r`.
    pub fn len(&self) -> usize {
        self.leaders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaders.is_empty()
    }

    /// Bit `j` is `⟨e, g_j⟩` for the `j`-th stabilizer generator.
    pub fn syndrome(&self, e: &SymplecticVec) -> Result<u64> {
        if e.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: e.len(),
            });
        }
        let (a, b) = parts(e);
        Ok(self.syndrome_parts(a, b))
    }

    /// The coset leader for syndrome `s`.
    pub fn leader(&self, s: u64) -> SymplecticVec {
        let (a, b) = self.leaders[s as usize];
        SymplecticVec::from_words(self.n, vec![a, b])
    }

    /// Weight of the leader for syndrome `s`.
    pub fn leader_weight(&self, s: u64) -> u32 {
        let (a, b) = self.leaders[s as usize];
        self.block_weight(a, b)
    }

    /// Exhaustive check over all `4^n` vectors that every entry has the
    /// right syndrome and is the minimum-weight, lexicographically first
    /// member of its coset.
    pub fn verify_minimal(&self) -> Result<()> {
        if self.n > 16 {
            return Err(Error::BudgetExceeded {
                required: 1u128 << (2 * self.n),
                budget: 1u128 << 32,
            });
        }
        for (s, &(a, b)) in self.leaders.iter().enumerate() {
            if self.syndrome_parts(a, b) != s as u64 {
                return Err(Error::Invariant(format!("table entry {s} has the wrong syndrome")));
            }
        }
        let n = self.n;
        let unit: Vec<u64> = (0..2 * n)
            .map(|i| {
                if i < n {
                    self.syndrome_parts(1 << i, 0)
                } else {
                    self.syndrome_parts(0, 1 << (i - n))
                }
            })
            .collect();
        let low = (1u64 << n) - 1;
        let (mut gray, mut s) = (0u64, 0u64);
        for step in 1u64..(1u64 << (2 * n)) {
            let bit = step.trailing_zeros() as usize;
            gray ^= 1 << bit;
            s ^= unit[bit];
            let (a, b) = (gray & low, gray >> n);
            let (la, lb) = self.leaders[s as usize];
            let (wl, wv) = (self.block_weight(la, lb), self.block_weight(a, b));
            if wv < wl || (wv == wl && lex_key(a, b) < lex_key(la, lb)) {
                return Err(Error::Invariant(format!(
                    "syndrome {s}: a vector of weight {wv} precedes the stored leader of weight {wl}"
                )));
            }
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
