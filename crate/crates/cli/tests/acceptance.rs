//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero on failure.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use klcat_core::block::{Cat, FunctorComplex, Obj};
use klcat_core::kl_oracle::solve_kl;
use klcat_core::{
    BasisKind, DualVariant, HeckeAlgebra, HeckeElt, K0Model, KlVariant, LaurentPoly, RankOne,
    WeylElt, WeylGroup,
};
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn group(t: &str) -> Arc<WeylGroup> {
    Arc::new(WeylGroup::new(t.parse().expect("Cartan type")).expect("group"))
}

fn sign_pow(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn mul(g: &WeylGroup, x: WeylElt, y: WeylElt) -> WeylElt {
    g.multiply(x, y).expect("same group")
}

fn fails(what: &str, failures: Vec<String>, checked: usize) -> Outcome {
    if failures.is_empty() {
        Ok(format!("{checked} {what}"))
    } else {
        Err(format!(
            "{} of {checked} {what} failed, first: {}",
            failures.len(),
            failures[0]
        ))
    }
}

/// Quadratic relation per simple reflection, `H_x H_y = H_xy` per
/// length-additive pair.
fn hecke_relations() -> Outcome {
    let mut f = Vec::new();
    let mut n = 0;
    for t in ["A1", "A2", "A3", "B2", "G2"] {
        let g = group(t);
        let alg = HeckeAlgebra::new(Arc::clone(&g));
        let v = HeckeElt::scalar(&g, LaurentPoly::v_pow(1));
        let vinv = HeckeElt::scalar(&g, LaurentPoly::v_pow(-1));
        for s in 1..=g.rank() {
            let hs = alg.h_simple(s).unwrap();
            n += 1;
            if !(&(&hs + &v) * &(&hs - &vinv)).is_zero() {
                f.push(format!("{t}: quadratic relation at s{s}"));
            }
        }
        for x in g.elements() {
            for y in g.elements() {
                let xy = mul(&g, x, y);
                if g.length(xy) != g.length(x) + g.length(y) {
                    continue;
                }
                n += 1;
                if &alg.h(x).unwrap() * &alg.h(y).unwrap() != alg.h(xy).unwrap() {
                    f.push(format!(
                        "{t}: H_{} H_{} != H_{}",
                        g.name(x),
                        g.name(y),
                        g.name(xy)
                    ));
                }
            }
        }
    }
    fails("relations", f, n)
}

fn kl_oracle() -> Outcome {
    let mut f = Vec::new();
    let mut n = 0;
    for t in ["A3", "B2"] {
        let g = group(t);
        let alg = HeckeAlgebra::new(Arc::clone(&g));
        for x in g.elements() {
            n += 1;
            match solve_kl(&g, x.index()) {
                Ok(c) if c == alg.kl_element(x, KlVariant::C).unwrap() => {}
                Ok(c) => f.push(format!("{t}: C_{} differs, oracle {c}", g.name(x))),
                Err(e) => f.push(format!("{t}: C_{}: {e}", g.name(x))),
            }
        }
    }
    fails("elements", f, n)
}

/// `H_w0 C_x = Q_{w0 x}`, with `Q` checked to be dual to `b(C)` first.
fn hw0_identity() -> Outcome {
    let mut f = Vec::new();
    let mut n = 0;
    for t in ["A1", "A2", "A3", "B2"] {
        let g = group(t);
        let alg = HeckeAlgebra::new(Arc::clone(&g));
        let w0 = g.longest();
        let hw0 = alg.h(w0).unwrap();
        for x in g.elements() {
            let q = alg.dual_element(x, DualVariant::DualToBC).unwrap();
            for y in g.elements() {
                let pairing = q
                    .pairing(&alg.kl_element(y, KlVariant::C).unwrap().b_twist())
                    .unwrap();
                let want = if x == y {
                    LaurentPoly::one()
                } else {
                    LaurentPoly::zero()
                };
                if pairing != want {
                    f.push(format!(
                        "{t}: <Q_{}, b(C_{})> = {pairing}",
                        g.name(x),
                        g.name(y)
                    ));
                }
            }
            n += 1;
            let lhs = &hw0 * &alg.kl_element(x, KlVariant::C).unwrap();
            let rhs = alg
                .dual_element(mul(&g, w0, x), DualVariant::DualToBC)
                .unwrap();
            if lhs != rhs {
                f.push(format!("{t}: x = {}", g.name(x)));
            }
        }
    }
    fails("elements", f, n)
}

fn bott() -> Outcome {
    let mut f = Vec::new();
    let mut n = 0;
    for t in ["A2", "A3"] {
        let g = group(t);
        let k0 = K0Model::new(Arc::clone(&g));
        let w0 = g.longest();
        let lw0 = k0.class_of(w0, BasisKind::Simple).unwrap();
        for x in g.elements() {
            n += 1;
            let got = k0
                .ext_pairing(&k0.class_of(x, BasisKind::Verma).unwrap(), &lw0)
                .unwrap();
            let want = LaurentPoly::monomial(-1, -1).pow(g.length(mul(&g, x, w0)) as u32);
            if got != want {
                f.push(format!("{t}: x = {}: {got}", g.name(x)));
            }
        }
    }
    let block = RankOne::new().map_err(|e| e.to_string())?;
    let ext =
        block
            .module("Delta_e")
            .unwrap()
            .ext_dims(block.module("L_s").unwrap(), block.algebra(), 4);
    n += 1;
    if ext != [0, 1, 0, 0, 0] {
        f.push(format!("Ext^i(Delta_e, L_s) = {ext:?}"));
    }
    fails("pairings", f, n)
}

fn weyl_character() -> Outcome {
    let mut f = Vec::new();
    let mut n = 0;
    for t in ["A2", "A3"] {
        let g = group(t);
        let k0 = K0Model::new(Arc::clone(&g));
        let w0 = g.longest();
        let lw0 = k0.class_of(w0, BasisKind::Simple).unwrap().at_one();
        for x in g.elements() {
            n += 1;
            let want = BigInt::from(sign_pow(g.length(mul(&g, x, w0))));
            let got = lw0.get(&x.index()).cloned().unwrap_or_default();
            if got != want {
                f.push(format!("{t}: coefficient of Delta_{} is {got}", g.name(x)));
            }
        }
    }
    fails("coefficients", f, n)
}

/// Tilting coefficients against projective ones under `v -> v^-1`; the
/// Delta-in-L coefficients, read with the same inversion, lie in `Z>=0[v]`
/// and off the diagonal are divisible by `v`.
fn tilting_and_positivity() -> Outcome {
    let mut f = Vec::new();
    let mut n = 0;
    for t in ["A2", "A3", "B2"] {
        let g = group(t);
        let k0 = K0Model::new(Arc::clone(&g));
        let w0 = g.longest();
        for x in g.elements() {
            let tx = k0.class_of(x, BasisKind::Tilting).unwrap();
            let p = k0.class_of(mul(&g, w0, x), BasisKind::Projective).unwrap();
            for y in g.elements() {
                n += 1;
                if tx.coord(y).bar() != p.coord(mul(&g, w0, y)) {
                    f.push(format!("{t}: T_{} at {} vs P", g.name(x), g.name(y)));
                }
            }
            let delta = k0.class_of(x, BasisKind::Verma).unwrap();
            for (y, c) in k0.expand(&delta, BasisKind::Simple).unwrap() {
                n += 1;
                let c = c.bar();
                let ok = c.has_nonnegative_coeffs()
                    && if y == x.index() {
                        c.is_one()
                    } else {
                        c.min_degree().is_some_and(|d| d >= 1)
                    };
                if !ok {
                    f.push(format!(
                        "{t}: [Delta_{} : L_{}] = {c}",
                        g.name(x),
                        g.name(g.elt(y))
                    ));
                }
            }
        }
    }
    fails("coefficients", f, n)
}

fn rank_one_categorical() -> Outcome {
    let block = RankOne::new().map_err(|e| e.to_string())?;
    let mut f = Vec::new();
    for c in [block.check_triangles(), block.check_transposes()] {
        if !c.pass {
            f.push(format!("{}: {}", c.name, c.detail));
        }
    }
    let (ev, coev) = (block.ev(), block.coev());
    let id = FunctorComplex::identity(Cat::Mod);
    let alg = block.algebra();
    let mut n = 2;
    for entry in block.catalog() {
        let o = Obj::Mod(entry.module.clone());
        let one = id.evaluate(alg, &o);
        n += 2;
        if !ev
            .source
            .evaluate(alg, &o)
            .is_quasi_iso(&one, &ev.evaluate(alg, &o))
        {
            f.push(format!("ev at {}", entry.name));
        }
        if !one.is_quasi_iso(&coev.target.evaluate(alg, &o), &coev.evaluate(alg, &o)) {
            f.push(format!("coev at {}", entry.name));
        }
    }
    let star = block.theta_star();
    for (d, p) in [("D_e", "P_s"), ("D_s", "P_e")] {
        n += 1;
        let c = block.apply(&star, block.module(d).unwrap());
        let h = c.homology_dims();
        if h.keys().ne([0].iter()) || !c.homology(0).module.is_isomorphic(block.module(p).unwrap())
        {
            f.push(format!("Theta* {d} is not {p}"));
        }
    }
    fails("checks", f, n)
}

fn cross_oracle() -> Outcome {
    let block = RankOne::new().map_err(|e| e.to_string())?;
    let c = klcat_core::block::check_k0_cross(&block);
    if c.pass {
        Ok(c.detail)
    } else {
        Err(c.detail)
    }
}

fn determinism() -> Outcome {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_klcat"))
            .args(["verify", "--type", "A3", "--suite", "all"])
            .env_remove("KLCAT_CONFIG")
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!(
                "exit {:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            ));
        }
        Ok(out.stdout)
    };
    let (a, b) = (run()?, run()?);
    serde_json::from_slice::<serde_json::Value>(&a).map_err(|e| format!("not JSON: {e}"))?;
    if a == b {
        Ok(format!("{} identical bytes", a.len()))
    } else {
        Err("outputs differ".into())
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "Hecke relations",
            hecke_relations,
            Some(Duration::from_secs(10)),
        ),
        (
            "KL oracle equivalence",
            kl_oracle,
            Some(Duration::from_secs(60)),
        ),
        ("H_w0 C_x = Q_w0x", hw0_identity, None),
        ("Bott Euler form and rank-one Ext", bott, None),
        ("Weyl character formula", weyl_character, None),
        (
            "tilting character and positivity",
            tilting_and_positivity,
            None,
        ),
        (
            "rank-one categorical suite",
            rank_one_categorical,
            Some(Duration::from_secs(5)),
        ),
        ("cross-module oracle", cross_oracle, None),
        ("determinism", determinism, None),
    ];
    let mut all = true;
    for (i, (title, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut res = f();
        let took = start.elapsed();
        if let (Ok(_), Some(l)) = (&res, limit) {
            if took > *l {
                res = Err(format!("took {took:.2?}, limit {l:?}"));
            }
        }
        let (tag, detail) = match &res {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        all &= res.is_ok();
        println!("criterion {} {tag} {title} ({took:.2?}): {detail}", i + 1);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
