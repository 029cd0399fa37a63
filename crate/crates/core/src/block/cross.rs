//! Comparison of the rank-one block with the Grothendieck group model of
//! type A1, after forgetting the grading.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;

use super::algebra::{BlockModule, Vertex};
use super::complex::ChainComplex;
use super::rank_one::RankOne;
use crate::error::Result;
use crate::hecke::HeckeElt;
use crate::k0::{BasisKind, K0Class, K0Model, WallVariant};
use crate::report::Check;
use crate::weyl::{CartanDatum, WeylGroup};

type Coords = BTreeMap<usize, BigInt>;

struct Dict {
    k0: K0Model,
    e: usize,
    s: usize,
}

impl Dict {
    fn new() -> Result<Self> {
        let g = Arc::new(WeylGroup::new("A1".parse::<CartanDatum>()?)?);
        let e = g.identity().index();
        let s = g.simple(1)?.index();
        Ok(Dict {
            k0: K0Model::new(g),
            e,
            s,
        })
    }

    fn idx(&self, v: Vertex) -> usize {
        match v {
            Vertex::E => self.e,
            Vertex::S => self.s,
        }
    }

    fn class(&self, v: Vertex, kind: BasisKind) -> K0Class {
        let g = self.k0.group();
        self.k0
            .class_of(g.elt(self.idx(v)), kind)
            .expect("element of A1")
    }

    /// Verma coordinates from a dimension vector.
    fn coords(&self, e: i64, s: i64) -> Coords {
        [(self.e, BigInt::from(e - s)), (self.s, BigInt::from(s))]
            .into_iter()
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect()
    }

    fn module_coords(&self, m: &BlockModule) -> Coords {
        self.coords(m.dim_e() as i64, m.dim_s() as i64)
    }

    fn euler_coords(&self, c: &ChainComplex) -> Coords {
        let (e, s) = c.euler_dims();
        self.coords(e, s)
    }

    fn hs(&self) -> HeckeElt {
        self.k0.algebra().h_simple(1).expect("rank one")
    }
}

/// Every block computation that has a shadow in the Grothendieck group is
/// compared with the value computed there.
pub fn check_k0_cross(block: &RankOne) -> Check {
    let dict = match Dict::new() {
        Ok(d) => d,
        Err(e) => return Check::new("block.k0_cross", false, e.to_string()),
    };
    let alg = block.algebra();
    let k0 = &dict.k0;
    let (star, shriek) = (block.theta_star(), block.theta_shriek());
    let mut f = Vec::new();
    let mut n = 0;
    let mut expect = |ok: bool, what: String| {
        n += 1;
        if !ok {
            f.push(what);
        }
    };
    for c in block.catalog() {
        let m = &c.module;
        let class = dict.class(c.vertex, c.kind);
        let mc = dict.module_coords(m);
        expect(mc == class.at_one(), format!("class of {}", c.name));
        let th = block.apply(&star, m).objs[&0].as_module();
        let wall = k0.wall_crossing(1, &class, WallVariant::Theta).expect("A1");
        expect(
            dict.module_coords(&th) == wall.at_one(),
            format!("theta {}", c.name),
        );
        let hs = k0.hecke_act(&dict.hs(), &class).expect("A1").at_one();
        expect(
            dict.euler_coords(&block.apply(&star, m)) == hs,
            format!("Euler characteristic of Theta* {}", c.name),
        );
        expect(
            dict.euler_coords(&block.apply(&shriek, m)) == hs,
            format!("Euler characteristic of Theta! {}", c.name),
        );
        let simple = k0.expand(&class, BasisKind::Simple).expect("A1");
        for v in [Vertex::E, Vertex::S] {
            let want = simple
                .get(&dict.idx(v))
                .map_or(BigInt::from(0), |p| p.eval_at_one());
            expect(
                BigInt::from(m.dim(v)) == want,
                format!("[{} : L_{}]", c.name, v.name()),
            );
            let proj = dict.class(v, BasisKind::Projective);
            let hom = block
                .catalog()
                .iter()
                .find(|p| p.kind == BasisKind::Projective && p.vertex == v);
            let hom = hom.expect("projective").module.hom(m).len();
            let pairing = k0.ext_pairing(&proj, &class).expect("A1").eval_at_one();
            expect(
                BigInt::from(hom) == pairing,
                format!("dim Hom(P_{}, {})", v.name(), c.name),
            );
        }
    }
    let w0 = k0.algebra().h(k0.group().longest()).expect("A1");
    for v in [Vertex::E, Vertex::S] {
        let tilt = dict.class(v, BasisKind::Tilting);
        let want = k0.hecke_act(&w0, &tilt).expect("A1").at_one();
        let m = block
            .catalog()
            .iter()
            .find(|c| c.kind == BasisKind::Tilting && c.vertex == v)
            .expect("tilting");
        let h = block.apply(&star, &m.module).homology(0).module;
        expect(
            dict.module_coords(&h) == want,
            format!("Theta* D_{} against H_w0 T_{}", v.name(), v.name()),
        );
        for w in [Vertex::E, Vertex::S] {
            let delta = &block
                .catalog()
                .iter()
                .find(|c| c.kind == BasisKind::Verma && c.vertex == v)
                .expect("Verma")
                .module;
            for kind in [BasisKind::Simple, BasisKind::DualVerma] {
                let target = &block
                    .catalog()
                    .iter()
                    .find(|c| c.kind == kind && c.vertex == w)
                    .expect("entry")
                    .module;
                let ext = delta.ext_dims(target, alg, 3);
                let euler: i64 = ext
                    .iter()
                    .enumerate()
                    .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
                    .sum();
                let want = k0
                    .ext_pairing(&dict.class(v, BasisKind::Verma), &dict.class(w, kind))
                    .expect("A1")
                    .eval_at_one();
                expect(
                    BigInt::from(euler) == want,
                    format!("Euler form (Delta_{}, {} {})", v.name(), kind, w.name()),
                );
            }
        }
    }
    Check::from_failures("block.k0_cross", n, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_matches_grothendieck_group() {
        let b = RankOne::new().unwrap();
        let c = check_k0_cross(&b);
        assert!(c.pass, "{}", c.detail);
    }
}
