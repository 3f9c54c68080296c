//! Desk-scale verification suites: each check recomputes a structural
//! property with an independent method and reports pass or fail.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::addcode::{
    find_nested_chain, min_block_weight_outside, min_weight_outside, random_self_orthogonal, sigma_count, tau_count,
    ChainRequest, StabilizerCode, DEFAULT_BUDGET,
};
use crate::codes;
use crate::concat::{concatenate, NestedInnerFamily, OuterCode, RhoMap, SymplecticBasis};
use crate::decoder::{correctability_count, verify_correctability, ConcatDecoder, SyndromeTable};
use crate::error::{Error, Result};
use crate::gf4::{SymplecticVec, F4};
use crate::qrs::QuantumRsCode;

/// A named group of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Counting,
    Symplectic,
    Rho,
    Distance,
    Decoder,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Counting,
        Suite::Symplectic,
        Suite::Rho,
        Suite::Distance,
        Suite::Decoder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counting => "counting",
            Suite::Symplectic => "symplectic",
            Suite::Rho => "rho",
            Suite::Distance => "distance",
            Suite::Decoder => "decoder",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::All]
            .into_iter()
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// One verified property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{}] {}: {}", self.suite, self.name, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, suite: &'static str, name: impl Into<String>, outcome: Result<String>) {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(Check {
            suite,
            name: name.into(),
            passed,
            detail,
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Suite options. `max_n` bounds the code length of enumerated families.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    pub max_n: Option<usize>,
    pub seed: u64,
}

pub fn run(suite: Suite, opts: &Options) -> Report {
    let mut report = Report::default();
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    for s in suites {
        match s {
            Suite::Counting => counting(&mut report, opts.max_n.unwrap_or(3)),
            Suite::Symplectic => symplectic(&mut report, opts.max_n.unwrap_or(10), opts.seed),
            Suite::Rho => rho(&mut report),
            Suite::Distance => distance(&mut report),
            Suite::Decoder => decoder(&mut report),
            Suite::All => unreachable!("expanded above"),
        }
    }
    report
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Invariant(msg()))
    }
}

/// Every self-orthogonal code of length `n`, as a bitmask over the `4^n`
/// vectors (vector index `a | b << n`), grouped by dimension.
pub fn enumerate_self_orthogonal(n: usize) -> Result<Vec<Vec<u128>>> {
    if n == 0 || n > 3 {
        return Err(Error::Unsupported(format!(
            "self-orthogonal enumeration needs 1 <= n <= 3 (got {n})"
        )));
    }
    let size = 1usize << (2 * n);
    let low = (1usize << n) - 1;
    let inner = |u: usize, v: usize| {
        let (ua, ub, va, vb) = (u & low, u >> n, v & low, v >> n);
        ((ua & vb) ^ (ub & va)).count_ones() & 1 == 1
    };
    let mut levels: Vec<Vec<u128>> = vec![vec![1u128]];
    for _ in 0..n {
        let mut next = HashSet::new();
        for &code in levels.last().expect("nonempty") {
            let members: Vec<usize> = (0..size).filter(|&x| code >> x & 1 == 1).collect();
            for v in 1..size {
                if code >> v & 1 == 1 || members.iter().any(|&c| inner(c, v)) {
                    continue;
                }
                let grown = members.iter().fold(code, |acc, &c| acc | 1u128 << (c ^ v));
                next.insert(grown);
            }
        }
        let mut sorted: Vec<u128> = next.into_iter().collect();
        sorted.sort_unstable();
        levels.push(sorted);
    }
    Ok(levels)
}

fn counting(report: &mut Report, max_n: usize) {
    const S: &str = "counting";
    let max_n = max_n.min(3);
    for n in 1..=max_n {
        let levels = match enumerate_self_orthogonal(n) {
            Ok(l) => l,
            Err(e) => return report.push(S, format!("enumeration n={n}"), Err(e)),
        };
        let size = 1usize << (2 * n);
        let low = (1usize << n) - 1;
        let inner = |u: usize, v: usize| ((u & low & (v >> n)) ^ ((u >> n) & v & low)).count_ones() & 1 == 1;
        let in_dual = |code: u128, v: usize| (0..size).all(|c| code >> c & 1 == 0 || !inner(c, v));
        for k in 1..=n {
            let outcome = (|| {
                let codes = &levels[k];
                for v in 1..size {
                    let sigma = codes.iter().filter(|&&c| c >> v & 1 == 1).count();
                    let expected = sigma_count(n, k)?;
                    ensure(BigUint::from(sigma) == expected, || {
                        format!("sigma_{k}({n}) enumerates to {sigma}, formula gives {expected} (v={v})")
                    })?;
                    if k < n {
                        let tau = codes.iter().filter(|&&c| c >> v & 1 == 0 && in_dual(c, v)).count();
                        let expected = tau_count(n, k)?;
                        ensure(BigUint::from(tau) == expected, || {
                            format!("tau_{k}({n}) enumerates to {tau}, formula gives {expected} (v={v})")
                        })?;
                    }
                }
                let sigma = sigma_count(n, k)?;
                let tau = if k < n { tau_count(n, k)? } else { BigUint::from(0u32) };
                Ok(format!(
                    "sigma={sigma} tau={tau} over {} codes, all {} vectors v",
                    codes.len(),
                    size - 1
                ))
            })();
            report.push(S, format!("sigma/tau match enumeration (n={n}, k={k})"), outcome);
        }
        for k in 0..n {
            let dim = n - k;
            let outcome = (|| {
                let phi = BigUint::from(levels[dim].len());
                let sigma = sigma_count(n, dim)?;
                let tau = if dim < n {
                    tau_count(n, dim)?
                } else {
                    BigUint::from(0u32)
                };
                let lhs = (&sigma + &tau) * ((BigUint::from(1u32) << (2 * n)) - 1u32);
                let rhs = &phi * ((BigUint::from(1u32) << (n + k)) - 1u32);
                ensure(lhs == rhs, || format!("{lhs} != {rhs}"))?;
                Ok(format!("({sigma} + {tau})(2^{} - 1) = {phi}(2^{} - 1)", 2 * n, n + k))
            })();
            report.push(S, format!("pair-counting identity (n={n}, k={k})"), outcome);
        }
    }
}

fn symplectic(report: &mut Report, max_n: usize, seed: u64) {
    const S: &str = "symplectic";
    let max_n = max_n.clamp(1, 10);
    let outcome = (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for trial in 0..100 {
            let n = rng.gen_range(1..=max_n);
            let dim = rng.gen_range(0..n);
            let c = random_self_orthogonal(n, dim, &mut rng)?;
            let q = StabilizerCode::from_stabilizers(c)?;
            let basis = SymplecticBasis::for_code(&q)?;
            basis
                .check_gram()
                .map_err(|e| Error::Invariant(format!("trial {trial} (n={n}): {e}")))?;
            ensure(basis.len() == q.k(), || {
                format!("trial {trial}: {} pairs for k={}", basis.len(), q.k())
            })?;
        }
        Ok(format!("100 random codes with n <= {max_n}"))
    })();
    report.push(S, "symplectic basis has the standard Gram pattern", outcome);

    let outcome = (|| {
        let chain = find_nested_chain(&ChainRequest::new(6, vec![2, 4], vec![2, 2]).seed(seed))?;
        let fam = NestedInnerFamily::new(chain)?;
        fam.basis().check_gram()?;
        ensure(fam.level_pairs(0).len() == 2 && fam.level_pairs(1).len() == 2, || {
            "level sizes".into()
        })?;
        Ok("two-level chain [[6,2]] ⊂ [[6,4]]".into())
    })();
    report.push(S, "nested chain basis has the standard Gram pattern", outcome);
}

fn all_symbols(w: usize) -> Vec<SymplecticVec> {
    (0..1usize << (2 * w))
        .map(|c| SymplecticVec::from_symbols(&(0..w).map(|i| F4::ALL[c >> (2 * i) & 3]).collect::<Vec<_>>()))
        .collect()
}

fn rho(report: &mut Report) {
    const S: &str = "rho";
    let cases: Vec<(&str, Result<StabilizerCode>)> = vec![
        ("five-qubit", Ok(codes::five_qubit())),
        ("trivial m=1", Ok(codes::trivial(1))),
        ("trivial m=2", Ok(codes::trivial(2))),
        (
            "quantum RS m=2 k=1",
            QuantumRsCode::new(2, 1).map(QuantumRsCode::into_stab),
        ),
        (
            "searched [[6,2]]",
            find_nested_chain(&ChainRequest::new(6, vec![2], vec![2])).map(|mut c| c.remove(0)),
        ),
    ];
    for (name, q) in cases {
        let outcome = (|| {
            let q = q?;
            let rho = RhoMap::new(SymplecticBasis::for_code(&q)?, q.c().clone());
            let syms = all_symbols(rho.width());
            for u in &syms {
                let ru = rho.apply(u)?;
                ensure(q.c_perp().contains(&ru), || format!("rho({u}) is not in the dual"))?;
                ensure(&rho.invert(&ru)? == u, || format!("rho is not inverted at {u}"))?;
                for v in &syms {
                    ensure(ru.inner(&rho.apply(v)?) == u.inner(v), || {
                        format!("inner product at ({u}, {v})")
                    })?;
                }
            }
            Ok(format!("all {} symbol pairs", syms.len() * syms.len()))
        })();
        report.push(S, format!("rho preserves inner products and inverts ({name})"), outcome);
    }
}

fn distance(report: &mut Report) {
    const S: &str = "distance";
    let exact = |q: &StabilizerCode, want: u32| -> Result<String> {
        let d = min_weight_outside(q, DEFAULT_BUDGET)?;
        ensure(d == want, || format!("distance {d}, expected {want}"))?;
        Ok(format!("{} distance {d}", q.describe()))
    };
    report.push(S, "five-qubit code", exact(&codes::five_qubit(), 3));
    report.push(
        S,
        "single-error witness code",
        codes::from_pauli_strings(&["XX"]).and_then(|q| exact(&q, 1)),
    );
    let outcome = (|| {
        let outer = OuterCode::new(codes::five_qubit(), 1, 3)?;
        let cc = concatenate(outer, codes::five_qubit())?;
        ensure(cc.d_lower() == 9, || format!("d_lower {}", cc.d_lower()))?;
        exact(cc.stab(), 9)
    })();
    report.push(S, "five-qubit self-concatenation meets the product bound", outcome);
    for m in 2..=3usize {
        for k in 1..(1usize << (m - 1)) {
            let outcome = (|| {
                let q = QuantumRsCode::new(m, k)?;
                let n = (1usize << m) - 1;
                let s = q.stab();
                ensure(s.c().is_self_orthogonal(), || "C is not self-orthogonal".into())?;
                ensure(s.n() == m * n && s.k() == m * (n - 2 * k), || {
                    format!("parameters {}", s.describe())
                })?;
                let (d, _) = min_block_weight_outside(s, m, DEFAULT_BUDGET)?;
                ensure(d as usize == k + 1, || {
                    format!("blockwise distance {d}, expected {}", k + 1)
                })?;
                Ok(format!("[[{},{}]] blockwise distance {d}", s.n(), s.k()))
            })();
            report.push(S, format!("quantum RS m={m} k={k}"), outcome);
        }
    }
}

fn decoder(report: &mut Report) {
    const S: &str = "decoder";
    for (name, q) in [("five-qubit", codes::five_qubit()), ("Steane", codes::steane())] {
        let outcome = SyndromeTable::build(&q, DEFAULT_BUDGET).and_then(|t| {
            t.verify_minimal()?;
            Ok(format!("{} syndromes, leaders minimal", t.len()))
        });
        report.push(S, format!("coset-leader table ({name})"), outcome);
    }
    let cc = OuterCode::new(codes::five_qubit(), 1, 3).and_then(|o| concatenate(o, codes::five_qubit()));
    let outcome = (|| {
        let cc = cc.as_ref().map_err(Clone::clone)?;
        let dec = ConcatDecoder::new(cc)?;
        let t = cc.d_lower() as usize / 4;
        if let Some(e) = verify_correctability(&dec, t, DEFAULT_BUDGET)? {
            return Err(Error::Invariant(format!("error {e} is not corrected")));
        }
        Ok(format!(
            "all {} errors of weight <= {t}",
            correctability_count(cc.stab().n(), t)
        ))
    })();
    report.push(S, "[[25,1]] corrects every error up to a quarter of d_lower", outcome);
    let outcome = (|| {
        let cc = cc.as_ref().map_err(Clone::clone)?;
        let dec = ConcatDecoder::new(cc)?;
        let t = dec.guaranteed_radius();
        if let Some(e) = verify_correctability(&dec, t, DEFAULT_BUDGET)? {
            return Err(Error::Invariant(format!("error {e} is not corrected")));
        }
        Ok(format!(
            "all {} errors of weight <= {t}",
            correctability_count(cc.stab().n(), t)
        ))
    })();
    report.push(S, "[[25,1]] corrects every error within the two-stage radius", outcome);
}
