//! Named verification suites over a Weyl group or the rank-one block.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::block::{check_k0_cross, RankOne};
use crate::error::Result;
use crate::hecke::HeckeAlgebra;
use crate::k0::K0Model;
use crate::report::{Check, VerificationReport};
use crate::weyl::{CartanDatum, CartanLetter, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Weyl,
    Hecke,
    K0,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Weyl => "weyl",
            Suite::Hecke => "hecke",
            Suite::K0 => "k0",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "weyl" => Ok(Suite::Weyl),
            "hecke" => Ok(Suite::Hecke),
            "k0" => Ok(Suite::K0),
            "all" => Ok(Suite::All),
            _ => Err(format!(
                "unknown suite `{s}` (expected weyl, hecke, k0 or all)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockSuite {
    All,
    Adjunctions,
    Equivalence,
    Tilting,
}

impl BlockSuite {
    pub fn name(self) -> &'static str {
        match self {
            BlockSuite::All => "all",
            BlockSuite::Adjunctions => "adjunctions",
            BlockSuite::Equivalence => "equivalence",
            BlockSuite::Tilting => "tilting",
        }
    }
}

impl FromStr for BlockSuite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(BlockSuite::All),
            "adjunctions" => Ok(BlockSuite::Adjunctions),
            "equivalence" => Ok(BlockSuite::Equivalence),
            "tilting" => Ok(BlockSuite::Tilting),
            _ => Err(format!(
                "unknown block suite `{s}` (expected all, adjunctions, equivalence or tilting)"
            )),
        }
    }
}

/// Groups up to this order also get the brute-force subword check of the
/// Bruhat order.
const SUBWORD_ORACLE_MAX_ORDER: usize = 48;

fn expected_order(d: CartanDatum) -> u128 {
    let n = d.rank() as u128;
    let fact = |k: u128| (1..=k).product::<u128>();
    match d.letter() {
        CartanLetter::A => fact(n + 1),
        CartanLetter::B | CartanLetter::C => (1u128 << n) * fact(n),
        CartanLetter::D => (1u128 << (n - 1)) * fact(n),
        CartanLetter::F => 1152,
        CartanLetter::G => 12,
    }
}

pub fn weyl_checks(g: &WeylGroup) -> Vec<Check> {
    let n = g.order();
    let mut checks = Vec::new();

    let want = expected_order(g.datum());
    checks.push(Check::new(
        "weyl.order",
        n as u128 == want,
        format!("order {n}, expected {want}"),
    ));

    let mut f = Vec::new();
    let w0 = g.w0_idx();
    if g.len_idx(w0) != g.datum().positive_root_count() {
        f.push(format!("l(w0) = {}", g.len_idx(w0)));
    }
    if g.mul_idx(w0, w0) != 0 {
        f.push("w0 is not an involution".into());
    }
    let ends = (0..n)
        .filter(|&x| g.len_idx(x) == 0 || g.len_idx(x) == g.len_idx(w0))
        .count();
    if ends != 2.min(n) {
        f.push("identity or w0 is not unique in its length".into());
    }
    for x in 0..n {
        if !g.leq_idx(0, x) || !g.leq_idx(x, w0) {
            f.push(format!("{} is not between e and w0", g.name(g.elt(x))));
        }
    }
    checks.push(Check::from_failures("weyl.longest_element", n + 3, f));

    let mut f = Vec::new();
    for x in 0..n {
        for s in 0..g.rank() {
            let (l, ls, lr) = (
                g.len_idx(x),
                g.len_idx(g.lmul_idx(x, s)),
                g.len_idx(g.rmul_idx(x, s)),
            );
            if l.abs_diff(ls) != 1 || l.abs_diff(lr) != 1 {
                f.push(format!("{} with s{}", g.name(g.elt(x)), s + 1));
            }
        }
    }
    checks.push(Check::from_failures("weyl.exchange", n * g.rank(), f));

    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let trials = 200;
    for _ in 0..trials {
        let (x, y, z) = (
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(0..n),
        );
        let l = g.mul_idx(x, g.mul_idx(y, z));
        let r = g.mul_idx(g.mul_idx(x, y), z);
        if l != r {
            f.push(format!(
                "({}, {}, {})",
                g.name(g.elt(x)),
                g.name(g.elt(y)),
                g.name(g.elt(z))
            ));
        }
        let lxy = g.len_idx(g.mul_idx(x, y));
        if lxy > g.len_idx(x) + g.len_idx(y) {
            f.push("length is not subadditive".into());
        }
        if g.mul_idx(x, g.inv_idx(x)) != 0 {
            f.push("inverse".into());
        }
    }
    checks.push(Check::from_failures("weyl.multiplication", trials, f));

    let mut f = Vec::new();
    for x in 0..n {
        let word = g.word_idx(x);
        if word.len() != g.len_idx(x) {
            f.push(format!("word of {} has the wrong length", g.name(g.elt(x))));
        }
        let prod = word.iter().fold(0, |acc, &s| g.rmul_idx(acc, s as usize));
        if prod != x {
            f.push(format!(
                "word of {} multiplies to something else",
                g.name(g.elt(x))
            ));
        }
        // lexicographically least: the first letter is the least left descent
        if let Some(&first) = word.first() {
            let least = (0..g.rank()).find(|&s| g.len_idx(g.lmul_idx(x, s)) < g.len_idx(x));
            if least != Some(first as usize) {
                f.push(format!(
                    "word of {} is not lexicographically least",
                    g.name(g.elt(x))
                ));
            }
        }
    }
    checks.push(Check::from_failures("weyl.reduced_words", n, f));

    let mut f = Vec::new();
    let mut cases = 0;
    for x in 0..n {
        for y in 0..n {
            let le = g.leq_idx(x, y);
            if le && x != y && g.len_idx(x) >= g.len_idx(y) {
                f.push(format!(
                    "{} < {} without a length increase",
                    g.name(g.elt(x)),
                    g.name(g.elt(y))
                ));
            }
            if le && x != y && g.leq_idx(y, x) {
                f.push("not antisymmetric".into());
            }
            if n <= SUBWORD_ORACLE_MAX_ORDER {
                cases += 1;
                if le != subword_leq(g, x, y) {
                    f.push(format!(
                        "subword property fails for ({}, {})",
                        g.name(g.elt(x)),
                        g.name(g.elt(y))
                    ));
                }
            }
        }
    }
    checks.push(Check::from_failures("weyl.bruhat", n * n + cases, f));
    checks
}

fn subword_leq(g: &WeylGroup, x: usize, y: usize) -> bool {
    let word = g.word_idx(y);
    let k = word.len();
    (0u32..(1 << k)).any(|mask| {
        let p = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .fold(0, |acc, i| g.rmul_idx(acc, word[i] as usize));
        p == x
    })
}

pub fn hecke_checks(alg: &HeckeAlgebra) -> Vec<Check> {
    vec![
        Check::timed(|| alg.verify_quadratic()),
        Check::timed(|| alg.verify_braid()),
        Check::timed(|| alg.verify_involutions()),
        Check::timed(|| alg.verify_kl_properties()),
        Check::timed(|| alg.verify_kl_oracle()),
        Check::timed(|| alg.verify_dual_bases()),
        Check::timed(|| alg.verify_hw0_identity()),
    ]
}

pub fn k0_checks(model: &K0Model) -> Vec<Check> {
    let mut checks = vec![
        Check::timed(|| model.verify_pairing()),
        Check::timed(|| model.verify_bott()),
        Check::timed(|| model.verify_module_axioms()),
        Check::timed(|| model.verify_duality()),
        Check::timed(|| model.verify_unitriangular()),
        Check::timed(|| model.verify_tilting_switch()),
        Check::timed(|| model.verify_wall_crossing()),
    ];
    checks.extend(model.verify_characters());
    checks
}

/// Runs a suite on the Weyl group of `datum`, enumerated under `cap`.
pub fn run(datum: CartanDatum, suite: Suite, cap: u128) -> Result<VerificationReport> {
    let g = Arc::new(WeylGroup::with_cap(datum, cap)?);
    let mut checks = Vec::new();
    if matches!(suite, Suite::Weyl | Suite::All) {
        checks.extend(weyl_checks(&g));
    }
    if matches!(suite, Suite::Hecke | Suite::All) {
        checks.extend(hecke_checks(&HeckeAlgebra::new(Arc::clone(&g))));
    }
    if matches!(suite, Suite::K0 | Suite::All) {
        checks.extend(k0_checks(&K0Model::new(Arc::clone(&g))));
    }
    Ok(VerificationReport::new(
        format!("{}:{datum}", suite.name()),
        checks,
    ))
}

/// Runs a suite of the rank-one block.
pub fn run_block(block: &RankOne, suite: BlockSuite) -> VerificationReport {
    let mut checks = Vec::new();
    let adjunctions = matches!(suite, BlockSuite::All | BlockSuite::Adjunctions);
    let equivalence = matches!(suite, BlockSuite::All | BlockSuite::Equivalence);
    if suite == BlockSuite::All {
        checks.push(Check::timed(|| block.check_algebra()));
        checks.push(Check::timed(|| block.check_catalog()));
        checks.push(Check::timed(|| block.check_translation()));
        checks.push(Check::timed(|| check_k0_cross(block)));
    }
    if adjunctions {
        checks.push(Check::timed(|| block.check_triangles()));
        checks.push(Check::timed(|| block.check_nonvanishing()));
        checks.push(Check::timed(|| block.check_injective()));
        checks.push(Check::timed(|| block.check_transposes()));
    }
    if equivalence {
        checks.push(Check::timed(|| block.check_complexes()));
        checks.push(Check::timed(|| block.check_theta_homology()));
        checks.push(Check::timed(|| block.check_complexes_adjoint()));
        checks.push(Check::timed(|| block.check_derived_equivalence()));
        checks.push(Check::timed(|| block.check_ext()));
    }
    if matches!(suite, BlockSuite::All | BlockSuite::Tilting) {
        checks.push(Check::timed(|| block.check_tilting_switch()));
    }
    VerificationReport::new(format!("block:{}", suite.name()), checks)
}

/// Convenience for a fresh block; fails only if the adjunction data cannot
/// be solved or the catalog is inconsistent.
pub fn run_block_fresh(suite: BlockSuite) -> Result<VerificationReport> {
    Ok(run_block(&RankOne::new()?, suite))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn weyl_suite_passes() {
        for t in ["A1", "A2", "A3", "B2", "B3", "G2", "C3", "D4"] {
            let r = run(t.parse().unwrap(), Suite::Weyl, 40320).unwrap();
            assert!(r.pass(), "{t}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!("K0".parse::<Suite>().unwrap(), Suite::K0);
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(
            "tilting".parse::<BlockSuite>().unwrap(),
            BlockSuite::Tilting
        );
        let r = run("A2".parse().unwrap(), Suite::All, 40320).unwrap();
        assert!(r.pass());
        assert_eq!(r.suite, "all:A2");
        assert!(r.checks.windows(2).all(|w| w[0].name <= w[1].name));
    }

    #[test]
    fn cap_is_enforced() {
        let e = run("A4".parse().unwrap(), Suite::Weyl, 100).unwrap_err();
        assert!(matches!(e, Error::CapExceeded { .. }));
    }

    #[test]
    fn block_suites() {
        let b = RankOne::new().unwrap();
        let all = run_block(&b, BlockSuite::All);
        assert!(all.pass(), "{:?}", all.failures().collect::<Vec<_>>());
        assert_eq!(run_block(&b, BlockSuite::Tilting).checks.len(), 1);
    }
}
