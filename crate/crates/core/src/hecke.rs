//! The Hecke algebra of a finite Weyl group over `Z[v, v^-1]`, in the
//! normalization where `(H_s + v)(H_s - v^-1) = 0`.
//!
//! Elements are always stored in the standard basis `{H_x}`. The
//! Kazhdan-Lusztig bases and the dual bases are computed on demand and
//! cached per [`HeckeAlgebra`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::Check;
use crate::ring::{LaurentPoly, Substitution};
use crate::weyl::{WeylElt, WeylGroup};

pub(crate) type Coeffs = BTreeMap<usize, LaurentPoly>;

pub(crate) fn add_to(map: &mut Coeffs, key: usize, c: &LaurentPoly) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key).or_default();
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// `v^-1 - v`
fn quadratic_defect() -> LaurentPoly {
    LaurentPoly::from_terms([(-1, 1), (1, -1)])
}

#[derive(Clone)]
pub struct HeckeElt {
    group: Arc<WeylGroup>,
    coeffs: Coeffs,
}

impl HeckeElt {
    pub fn zero(group: &Arc<WeylGroup>) -> Self {
        HeckeElt {
            group: Arc::clone(group),
            coeffs: Coeffs::new(),
        }
    }

    pub fn one(group: &Arc<WeylGroup>) -> Self {
        Self::from_index(group, 0)
    }

    /// The standard basis element `H_x`.
    pub fn standard(group: &Arc<WeylGroup>, x: WeylElt) -> Result<Self> {
        let i = group.check(x)?;
        Ok(Self::from_index(group, i))
    }

    /// A scalar multiple of `H_e`.
    pub fn scalar(group: &Arc<WeylGroup>, c: LaurentPoly) -> Self {
        Self::from_coeffs(group, Coeffs::from([(0, c)]))
    }

    pub(crate) fn from_index(group: &Arc<WeylGroup>, i: usize) -> Self {
        Self::from_coeffs(group, Coeffs::from([(i, LaurentPoly::one())]))
    }

    pub(crate) fn from_coeffs(group: &Arc<WeylGroup>, mut coeffs: Coeffs) -> Self {
        coeffs.retain(|_, c| !c.is_zero());
        HeckeElt {
            group: Arc::clone(group),
            coeffs,
        }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub(crate) fn coeffs(&self) -> &Coeffs {
        &self.coeffs
    }

    pub(crate) fn into_coeffs(self) -> Coeffs {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `H_x`; zero for elements of other groups.
    pub fn coeff(&self, x: WeylElt) -> LaurentPoly {
        match self.group.check(x) {
            Ok(i) => self.coeff_idx(i),
            Err(_) => LaurentPoly::zero(),
        }
    }

    pub(crate) fn coeff_idx(&self, i: usize) -> LaurentPoly {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    /// Nonzero terms in element order.
    pub fn terms(&self) -> impl Iterator<Item = (WeylElt, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(&i, c)| (self.group.elt(i), c))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let coeffs = self.coeffs.iter().map(|(&i, p)| (i, p * c)).collect();
        Self::from_coeffs(&self.group, coeffs)
    }

    fn same_group(&self, other: &HeckeElt) -> Result<()> {
        if self.group.id() == other.group.id() {
            Ok(())
        } else {
            Err(Error::MixedGroups)
        }
    }

    pub fn try_add(&self, other: &HeckeElt) -> Result<Self> {
        self.same_group(other)?;
        let mut coeffs = self.coeffs.clone();
        for (&i, c) in &other.coeffs {
            add_to(&mut coeffs, i, c);
        }
        Ok(Self::from_coeffs(&self.group, coeffs))
    }

    pub fn try_sub(&self, other: &HeckeElt) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &HeckeElt) -> Result<Self> {
        self.same_group(other)?;
        let g = &self.group;
        let mut out = Coeffs::new();
        for (&y, c) in &other.coeffs {
            let mut acc = self.coeffs.clone();
            for &s in g.word_idx(y) {
                acc = right_mul_simple(g, &acc, s as usize);
            }
            for (z, p) in acc {
                add_to(&mut out, z, &(&p * c));
            }
        }
        Ok(Self::from_coeffs(g, out))
    }

    /// `self * H_s` for the simple reflection with 0-based index `s`.
    pub(crate) fn mul_simple_right(&self, s: usize) -> Self {
        Self::from_coeffs(&self.group, right_mul_simple(&self.group, &self.coeffs, s))
    }

    /// `H_s * self` for the simple reflection with 0-based index `s`.
    pub(crate) fn mul_simple_left(&self, s: usize) -> Self {
        Self::from_coeffs(&self.group, left_mul_simple(&self.group, &self.coeffs, s))
    }

    /// The twist `b`: `v -> -v^-1` on coefficients, fixing every `H_x`.
    pub fn b_twist(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&i, c)| (i, c.substitute(Substitution::VToNegVInv)))
            .collect();
        Self::from_coeffs(&self.group, coeffs)
    }

    /// The anti-automorphism `i`: `H_x -> H_{x^-1}`, fixing `v`.
    pub fn iota(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&i, c)| (self.group.inv_idx(i), c.clone()))
            .collect();
        Self::from_coeffs(&self.group, coeffs)
    }

    /// The bilinear form with `<H_x, H_y> = delta_{x,y}`.
    pub fn pairing(&self, other: &HeckeElt) -> Result<LaurentPoly> {
        self.same_group(other)?;
        let mut acc = LaurentPoly::zero();
        for (i, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(i) {
                acc += &(c * d);
            }
        }
        Ok(acc)
    }

    /// Standard-basis coefficients keyed by element name, in element order.
    pub fn to_named(&self) -> Vec<NamedCoeff> {
        self.coeffs
            .iter()
            .map(|(&i, c)| NamedCoeff {
                x: self.group.name(self.group.elt(i)),
                coeff: c.clone(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCoeff {
    pub x: String,
    pub coeff: LaurentPoly,
}

fn right_mul_simple(g: &WeylGroup, coeffs: &Coeffs, s: usize) -> Coeffs {
    mul_simple(g, coeffs, s, WeylGroup::rmul_idx)
}

fn left_mul_simple(g: &WeylGroup, coeffs: &Coeffs, s: usize) -> Coeffs {
    mul_simple(g, coeffs, s, WeylGroup::lmul_idx)
}

fn mul_simple(
    g: &WeylGroup,
    coeffs: &Coeffs,
    s: usize,
    act: fn(&WeylGroup, usize, usize) -> usize,
) -> Coeffs {
    let defect = quadratic_defect();
    let mut out = Coeffs::new();
    for (&x, c) in coeffs {
        let xs = act(g, x, s);
        add_to(&mut out, xs, c);
        if g.len_idx(xs) < g.len_idx(x) {
            add_to(&mut out, x, &(c * &defect));
        }
    }
    out
}

impl PartialEq for HeckeElt {
    fn eq(&self, other: &Self) -> bool {
        self.group.id() == other.group.id() && self.coeffs == other.coeffs
    }
}

impl Eq for HeckeElt {}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (x, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let name = self.group.name(x);
            if c.is_one() {
                write!(f, "H_{name}")?;
            } else {
                write!(f, "({c}) H_{name}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElt({self})")
    }
}

// Operators panic on mixed groups; use the `try_*` methods to get an error instead.

impl Add<&HeckeElt> for &HeckeElt {
    type Output = HeckeElt;
    fn add(self, rhs: &HeckeElt) -> HeckeElt {
        self.try_add(rhs)
            .expect("Hecke elements of different groups")
    }
}

impl Sub<&HeckeElt> for &HeckeElt {
    type Output = HeckeElt;
    fn sub(self, rhs: &HeckeElt) -> HeckeElt {
        self.try_sub(rhs)
            .expect("Hecke elements of different groups")
    }
}

impl std::ops::Mul<&HeckeElt> for &HeckeElt {
    type Output = HeckeElt;
    fn mul(self, rhs: &HeckeElt) -> HeckeElt {
        self.try_mul(rhs)
            .expect("Hecke elements of different groups")
    }
}

impl Neg for &HeckeElt {
    type Output = HeckeElt;
    fn neg(self) -> HeckeElt {
        let coeffs = self.coeffs.iter().map(|(&i, c)| (i, -c)).collect();
        HeckeElt::from_coeffs(&self.group, coeffs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KlVariant {
    /// `C_x`, congruent to `H_x` modulo `vZ[v]`.
    C,
    /// `C'_x = b(C_x)`, congruent to `H_x` modulo `v^-1 Z[v^-1]`.
    Cprime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualVariant {
    /// `Q_x` with `<Q_x, b(C_y)> = delta`.
    DualToBC,
    /// `Q'_x` with `<Q'_x, C_y> = delta`.
    DualToC,
}

/// A Hecke algebra together with its lazily built tables.
pub struct HeckeAlgebra {
    group: Arc<WeylGroup>,
    bar_table: OnceLock<Vec<HeckeElt>>,
    kl_table: OnceLock<Vec<HeckeElt>>,
    dual_bc: OnceLock<Vec<HeckeElt>>,
    dual_c: OnceLock<Vec<HeckeElt>>,
}

impl HeckeAlgebra {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        HeckeAlgebra {
            group,
            bar_table: OnceLock::new(),
            kl_table: OnceLock::new(),
            dual_bc: OnceLock::new(),
            dual_c: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn h(&self, x: WeylElt) -> Result<HeckeElt> {
        HeckeElt::standard(&self.group, x)
    }

    pub(crate) fn h_idx(&self, i: usize) -> HeckeElt {
        HeckeElt::from_index(&self.group, i)
    }

    /// `H_s` for a 1-based simple index.
    pub fn h_simple(&self, i: usize) -> Result<HeckeElt> {
        self.h(self.group.simple(i)?)
    }

    fn check_group(&self, h: &HeckeElt) -> Result<()> {
        if h.group.id() == self.group.id() {
            Ok(())
        } else {
            Err(Error::MixedGroups)
        }
    }

    // d(H_x) = d(H_{xs}) (H_s + v - v^-1) for a right descent s of x.
    fn bar_table(&self) -> &[HeckeElt] {
        self.bar_table.get_or_init(|| {
            let g = &self.group;
            let shift = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
            let mut table: Vec<HeckeElt> = Vec::with_capacity(g.order());
            table.push(self.h_idx(0));
            for x in 1..g.order() {
                let s = g.first_right_descent(x);
                let prev = &table[g.rmul_idx(x, s)];
                let next = &prev.mul_simple_right(s) + &prev.scale(&shift);
                table.push(next);
            }
            table
        })
    }

    /// The bar involution `d`: `v -> v^-1`, `H_x -> H_{x^-1}^-1`.
    pub fn bar(&self, h: &HeckeElt) -> Result<HeckeElt> {
        self.check_group(h)?;
        let table = self.bar_table();
        let mut out = Coeffs::new();
        for (&x, c) in &h.coeffs {
            let c = c.bar();
            for (&z, p) in &table[x].coeffs {
                add_to(&mut out, z, &(p * &c));
            }
        }
        Ok(HeckeElt::from_coeffs(&self.group, out))
    }

    // C_x = (H_s + v) C_{sx} - sum of mu C_z over lower z, for a left descent s.
    fn kl_table(&self) -> &[HeckeElt] {
        self.kl_table.get_or_init(|| {
            let g = &self.group;
            let v = LaurentPoly::v_pow(1);
            let mut table: Vec<HeckeElt> = Vec::with_capacity(g.order());
            table.push(self.h_idx(0));
            for x in 1..g.order() {
                let s = g.word_idx(x)[0] as usize;
                let y = &table[g.lmul_idx(x, s)];
                let mut c = &y.mul_simple_left(s) + &y.scale(&v);
                let lower: Vec<usize> = c.coeffs.keys().copied().filter(|&z| z != x).collect();
                for &z in lower.iter().rev() {
                    let mu = c.coeff_idx(z).coeff(0);
                    if mu != 0.into() {
                        c = &c - &table[z].scale(&LaurentPoly::constant(mu));
                    }
                }
                table.push(c);
            }
            table
        })
    }

    pub fn kl_element(&self, x: WeylElt, variant: KlVariant) -> Result<HeckeElt> {
        let i = self.group.check(x)?;
        Ok(self.kl_idx(i, variant))
    }

    pub(crate) fn kl_idx(&self, i: usize, variant: KlVariant) -> HeckeElt {
        let c = &self.kl_table()[i];
        match variant {
            KlVariant::C => c.clone(),
            KlVariant::Cprime => c.b_twist(),
        }
    }

    /// The family dual to `{b(C_y)}` (resp. `{C_y}`) under the pairing,
    /// indexed by element index.
    pub fn dual_basis(&self, variant: DualVariant) -> &[HeckeElt] {
        let (cell, kl) = match variant {
            DualVariant::DualToBC => (&self.dual_bc, KlVariant::Cprime),
            DualVariant::DualToC => (&self.dual_c, KlVariant::C),
        };
        cell.get_or_init(|| {
            let cols: Vec<Coeffs> = (0..self.group.order())
                .map(|y| self.kl_idx(y, kl).into_coeffs())
                .collect();
            let inv = invert_unitriangular(&cols);
            // Q_x = sum_z (B^-1)_{x,z} H_z, i.e. row x of the inverse
            let mut rows = vec![Coeffs::new(); cols.len()];
            for (z, col) in inv.iter().enumerate() {
                for (&x, c) in col {
                    rows[x].insert(z, c.clone());
                }
            }
            rows.into_iter()
                .map(|r| HeckeElt::from_coeffs(&self.group, r))
                .collect()
        })
    }

    pub fn dual_element(&self, x: WeylElt, variant: DualVariant) -> Result<HeckeElt> {
        let i = self.group.check(x)?;
        Ok(self.dual_basis(variant)[i].clone())
    }

    pub fn verify_quadratic(&self) -> Check {
        let g = &self.group;
        let v = HeckeElt::scalar(g, LaurentPoly::v_pow(1));
        let vinv = HeckeElt::scalar(g, LaurentPoly::v_pow(-1));
        let mut failures = Vec::new();
        for s in 0..g.rank() {
            let hs = self.h_idx(g.rmul_idx(0, s));
            let prod = &(&hs + &v) * &(&hs - &vinv);
            if !prod.is_zero() {
                failures.push(format!("s{}: {prod}", s + 1));
            }
        }
        Check::from_failures("hecke.quadratic", g.rank(), failures)
    }

    pub fn verify_braid(&self) -> Check {
        let g = &self.group;
        let mut failures = Vec::new();
        let mut checked = 0;
        for x in 0..g.order() {
            for y in 0..g.order() {
                let xy = g.mul_idx(x, y);
                if g.len_idx(xy) != g.len_idx(x) + g.len_idx(y) {
                    continue;
                }
                checked += 1;
                let prod = &self.h_idx(x) * &self.h_idx(y);
                if prod != self.h_idx(xy) {
                    failures.push(format!(
                        "H_{} H_{} = {prod}",
                        g.name(g.elt(x)),
                        g.name(g.elt(y))
                    ));
                }
            }
        }
        Check::from_failures("hecke.braid", checked, failures)
    }

    /// `d`, `b` multiplicative on `h H_s`, `i` anti-multiplicative, all three
    /// involutive and pairwise commuting, tested on `v H_x` for every `x`.
    pub fn verify_involutions(&self) -> Check {
        let g = &self.group;
        let v = LaurentPoly::v_pow(1);
        let bar = |h: &HeckeElt| self.bar(h).expect("same group");
        let mut failures = Vec::new();
        let mut checked = 0;
        for x in 0..g.order() {
            let h = self.h_idx(x).scale(&v);
            checked += 1;
            if bar(&bar(&h)) != h || h.b_twist().b_twist() != h || h.iota().iota() != h {
                failures.push(format!("not involutive at {}", g.name(g.elt(x))));
            }
            if bar(&h.b_twist()) != bar(&h).b_twist()
                || bar(&h.iota()) != bar(&h).iota()
                || h.b_twist().iota() != h.iota().b_twist()
            {
                failures.push(format!("do not commute at {}", g.name(g.elt(x))));
            }
            for s in 0..g.rank() {
                let hs = self.h_idx(g.rmul_idx(0, s));
                let prod = &h * &hs;
                if bar(&prod) != &bar(&h) * &bar(&hs) {
                    failures.push(format!("d not multiplicative at {}", g.name(g.elt(x))));
                }
                if prod.b_twist() != &h.b_twist() * &hs {
                    failures.push(format!("b not multiplicative at {}", g.name(g.elt(x))));
                }
                if prod.iota() != &hs.iota() * &h.iota() {
                    failures.push(format!("i not anti-multiplicative at {}", g.name(g.elt(x))));
                }
            }
        }
        Check::from_failures("hecke.involutions", checked, failures)
    }

    /// Self-duality and degree bounds of `C_x` and `C'_x`.
    pub fn verify_kl_properties(&self) -> Check {
        let g = &self.group;
        let mut failures = Vec::new();
        for x in 0..g.order() {
            let c = self.kl_idx(x, KlVariant::C);
            let cp = self.kl_idx(x, KlVariant::Cprime);
            let name = g.name(g.elt(x));
            if self.bar(&c).ok().as_ref() != Some(&c) {
                failures.push(format!("C_{name} not self-dual"));
            }
            if self.bar(&cp).ok().as_ref() != Some(&cp) {
                failures.push(format!("C'_{name} not self-dual"));
            }
            if !c.coeff_idx(x).is_one() {
                failures.push(format!(
                    "C_{name} has leading coefficient {}",
                    c.coeff_idx(x)
                ));
            }
            for (&y, p) in &c.coeffs {
                if y == x {
                    continue;
                }
                let bound = (g.len_idx(x) - g.len_idx(y)) as i32;
                if !g.leq_idx(y, x) || !p.degrees_within(1, bound) {
                    failures.push(format!("C_{name} coefficient {p} at {}", g.name(g.elt(y))));
                }
                if !cp.coeff_idx(y).degrees_within(-bound, -1) {
                    failures.push(format!("C'_{name} coefficient at {}", g.name(g.elt(y))));
                }
            }
        }
        Check::from_failures("hecke.kl_basis", g.order(), failures)
    }

    /// `<Q_x, b(C_y)> = delta` and `<Q'_x, C_y> = delta`.
    pub fn verify_dual_bases(&self) -> Check {
        let g = &self.group;
        let mut failures = Vec::new();
        for (variant, kl) in [
            (DualVariant::DualToBC, KlVariant::Cprime),
            (DualVariant::DualToC, KlVariant::C),
        ] {
            let q = self.dual_basis(variant);
            for (x, qx) in q.iter().enumerate() {
                for y in 0..g.order() {
                    let p = qx.pairing(&self.kl_idx(y, kl)).expect("same group");
                    let want = if x == y {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    };
                    if p != want {
                        failures.push(format!(
                            "{variant:?} pairing at ({}, {}) is {p}",
                            g.name(g.elt(x)),
                            g.name(g.elt(y))
                        ));
                    }
                }
            }
        }
        Check::from_failures("hecke.dual_bases", 2 * g.order() * g.order(), failures)
    }

    /// `H_{w0} C_x = Q_{w0 x}` for every `x`.
    pub fn verify_hw0_identity(&self) -> Check {
        let g = &self.group;
        let w0 = g.w0_idx();
        let hw0 = self.h_idx(w0);
        let q = self.dual_basis(DualVariant::DualToBC);
        let mut failures = Vec::new();
        for x in 0..g.order() {
            let lhs = &hw0 * &self.kl_idx(x, KlVariant::C);
            let rhs = &q[g.mul_idx(w0, x)];
            if &lhs != rhs {
                failures.push(format!("x = {}: {lhs} vs {rhs}", g.name(g.elt(x))));
            }
        }
        Check::from_failures("hecke.hw0_tilting_identity", g.order(), failures)
    }

    /// Agreement of the recursive KL basis with [`crate::kl_oracle`].
    pub fn verify_kl_oracle(&self) -> Check {
        let g = &self.group;
        let mut failures = Vec::new();
        for x in 0..g.order() {
            let name = g.name(g.elt(x));
            match crate::kl_oracle::solve_kl(&self.group, x) {
                Ok(c) if c == self.kl_idx(x, KlVariant::C) => {}
                Ok(c) => failures.push(format!("C_{name}: oracle gives {c}")),
                Err(e) => failures.push(format!("C_{name}: {e}")),
            }
        }
        Check::from_failures("hecke.kl_oracle", g.order(), failures)
    }
}

/// Inverts a matrix given by columns `F_y = e_y + sum_{z < y} B_{z,y} e_z`.
/// Returns the columns of the inverse, so `e_y = sum_z N_{z,y} F_z`.
pub(crate) fn invert_unitriangular(cols: &[Coeffs]) -> Vec<Coeffs> {
    let mut inv: Vec<Coeffs> = Vec::with_capacity(cols.len());
    for (y, col) in cols.iter().enumerate() {
        debug_assert!(col.get(&y).is_some_and(LaurentPoly::is_one));
        let mut out = Coeffs::from([(y, LaurentPoly::one())]);
        for (&z, b) in col {
            if z == y {
                continue;
            }
            assert!(z < y, "matrix is not unitriangular");
            for (&w, n) in &inv[z] {
                add_to(&mut out, w, &-(b * n));
            }
        }
        inv.push(out);
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::CartanDatum;
    use proptest::prelude::*;

    fn alg(t: &str) -> HeckeAlgebra {
        HeckeAlgebra::new(Arc::new(WeylGroup::new(t.parse().unwrap()).unwrap()))
    }

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn named(a: &HeckeAlgebra, terms: &[(&str, LaurentPoly)]) -> HeckeElt {
        let g = a.group();
        terms.iter().fold(HeckeElt::zero(g), |acc, (w, c)| {
            &acc + &a.h(g.parse_word(w).unwrap()).unwrap().scale(c)
        })
    }

    #[test]
    fn products() {
        let a = alg("A2");
        let g = a.group();
        let h1 = a.h_simple(1).unwrap();
        let h2 = a.h_simple(2).unwrap();
        assert_eq!(&h1 * &h2, a.h(g.parse_word("1.2").unwrap()).unwrap());
        assert_eq!(&HeckeElt::one(g) * &h1, h1);
        let sq = named(&a, &[("e", p(&[(0, 1)])), ("1", p(&[(-1, 1), (1, -1)]))]);
        assert_eq!(&h1 * &h1, sq);
    }

    #[test]
    fn bar_examples() {
        let a = alg("A2");
        let g = a.group();
        let hs = a.h_simple(1).unwrap();
        let want = named(&a, &[("1", p(&[(0, 1)])), ("e", p(&[(1, 1), (-1, -1)]))]);
        assert_eq!(a.bar(&hs).unwrap(), want);
        assert_eq!(a.bar(&HeckeElt::one(g)).unwrap(), HeckeElt::one(g));
        let h12 = a.h(g.parse_word("1.2").unwrap()).unwrap();
        assert_eq!(a.bar(&a.bar(&h12).unwrap()).unwrap(), h12);
        // d(H_x) is the inverse of H_{x^-1}
        for x in g.elements() {
            let prod = &a.bar(&a.h(x).unwrap()).unwrap() * &a.h(g.inverse(x)).unwrap();
            assert_eq!(prod, HeckeElt::one(g));
        }
    }

    #[test]
    fn twists() {
        let a = alg("A2");
        let g = a.group();
        let vh = HeckeElt::scalar(g, p(&[(1, 1)]));
        assert_eq!(vh.b_twist(), HeckeElt::scalar(g, p(&[(-1, -1)])));
        let h12 = a.h(g.parse_word("1.2").unwrap()).unwrap();
        assert_eq!(h12.iota(), a.h(g.parse_word("2.1").unwrap()).unwrap());
    }

    #[test]
    fn kl_examples() {
        let a = alg("A2");
        let g = a.group();
        assert_eq!(
            a.kl_element(g.identity(), KlVariant::C).unwrap(),
            HeckeElt::one(g)
        );
        let cs = a.kl_element(g.simple(1).unwrap(), KlVariant::C).unwrap();
        assert_eq!(cs, named(&a, &[("1", p(&[(0, 1)])), ("e", p(&[(1, 1)]))]));
        let c12 = a
            .kl_element(g.parse_word("1.2").unwrap(), KlVariant::C)
            .unwrap();
        let want = named(
            &a,
            &[
                ("1.2", p(&[(0, 1)])),
                ("1", p(&[(1, 1)])),
                ("2", p(&[(1, 1)])),
                ("e", p(&[(2, 1)])),
            ],
        );
        assert_eq!(c12, want);
        // C_{w0} = sum_x v^{l(w0) - l(x)} H_x
        let cw0 = a.kl_element(g.longest(), KlVariant::C).unwrap();
        for x in g.elements() {
            assert_eq!(cw0.coeff(x), LaurentPoly::v_pow(3 - g.length(x) as i32));
        }
    }

    #[test]
    fn pairing_examples() {
        let a = alg("A1");
        let g = a.group();
        let cs = a.kl_element(g.simple(1).unwrap(), KlVariant::C).unwrap();
        assert_eq!(cs.pairing(&HeckeElt::one(g)).unwrap(), p(&[(1, 1)]));
        assert!(HeckeElt::zero(g).pairing(&cs).unwrap().is_zero());
        let other = alg("A1");
        assert_eq!(
            cs.pairing(&HeckeElt::one(other.group())),
            Err(Error::MixedGroups)
        );
        assert!(cs.try_mul(&HeckeElt::one(other.group())).is_err());
    }

    #[test]
    fn dual_basis_a1() {
        let a = alg("A1");
        let g = a.group();
        let q = a.dual_basis(DualVariant::DualToBC);
        assert_eq!(q[1], a.h_simple(1).unwrap());
        assert_eq!(
            q[0],
            named(&a, &[("e", p(&[(0, 1)])), ("s", p(&[(-1, 1)]))])
        );
        for alg_name in ["A2", "B2"] {
            let b = alg(alg_name);
            let q = b.dual_basis(DualVariant::DualToBC);
            assert!(q[0].coeff(b.group().identity()).is_one());
        }
        let _ = g;
    }

    #[test]
    fn hw0_examples() {
        let a = alg("A1");
        let g = a.group();
        let hs = a.h_simple(1).unwrap();
        assert_eq!(
            &hs * &HeckeElt::one(g),
            a.dual_basis(DualVariant::DualToBC)[1]
        );
        let cs = a.kl_element(g.simple(1).unwrap(), KlVariant::C).unwrap();
        assert_eq!(&hs * &cs, a.dual_basis(DualVariant::DualToBC)[0]);
        assert!(alg("A2").verify_hw0_identity().pass);
    }

    #[test]
    fn verifiers_pass() {
        for t in ["A1", "A2", "A3", "B2", "G2"] {
            let a = alg(t);
            for c in [
                a.verify_quadratic(),
                a.verify_braid(),
                a.verify_involutions(),
                a.verify_kl_properties(),
                a.verify_dual_bases(),
                a.verify_hw0_identity(),
            ] {
                assert!(c.pass, "{t} {}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn b3_kl_is_self_dual() {
        let a = HeckeAlgebra::new(Arc::new(
            WeylGroup::new(CartanDatum::new(crate::weyl::CartanLetter::B, 3).unwrap()).unwrap(),
        ));
        assert!(a.verify_kl_properties().pass);
    }

    fn arb_elt(order: usize) -> impl Strategy<Value = Vec<(usize, i32, i64)>> {
        prop::collection::vec((0..order, -2i32..3, -3i64..4), 0..5)
    }

    fn build(a: &HeckeAlgebra, terms: &[(usize, i32, i64)]) -> HeckeElt {
        let mut c = Coeffs::new();
        for &(x, e, k) in terms {
            add_to(&mut c, x, &LaurentPoly::monomial(k, e));
        }
        HeckeElt::from_coeffs(a.group(), c)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_laws(x in arb_elt(8), y in arb_elt(8), z in arb_elt(8)) {
            let a = alg("B2");
            let (x, y, z) = (build(&a, &x), build(&a, &y), build(&a, &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(a.bar(&(&x * &y)).unwrap(), &a.bar(&x).unwrap() * &a.bar(&y).unwrap());
            prop_assert_eq!((&x * &y).b_twist(), &x.b_twist() * &y.b_twist());
            prop_assert_eq!((&x * &y).iota(), &y.iota() * &x.iota());
            prop_assert!(x.coeffs().values().all(|c| !c.is_zero()));
        }
    }
}
