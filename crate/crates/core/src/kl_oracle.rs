//! Slow independent computation of `C_x` by solving the self-duality
//! equations `d(C) = C` directly over the rationals.
//!
//! The unknowns are the coefficients `a_{y,k}` of
//! `C = H_x + sum_{l(y) < l(x)} sum_{k=1}^{l(x)-l(y)} a_{y,k} v^k H_y`.
//! The bar images of the `H_y` are obtained by multiplying out the images of
//! the generators, without using the cached tables of [`crate::hecke`].

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::hecke::HeckeElt;
use crate::linalg::{Matrix, Q};
use crate::ring::LaurentPoly;
use crate::weyl::WeylGroup;

fn bar_standard(group: &Arc<WeylGroup>, y: usize) -> HeckeElt {
    let bar_s = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    group
        .word_idx(y)
        .iter()
        .fold(HeckeElt::one(group), |acc, &s| {
            let hs = HeckeElt::from_index(group, group.rmul_idx(0, s as usize));
            let dhs = &hs + &HeckeElt::scalar(group, bar_s.clone());
            &acc * &dhs
        })
}

/// Solves for `C_x` (by element index). Fails if the system is inconsistent,
/// underdetermined or has a non-integral solution.
pub fn solve_kl(group: &Arc<WeylGroup>, x: usize) -> Result<HeckeElt, String> {
    let lx = group.len_idx(x);
    let mut vars: Vec<(usize, i32)> = Vec::new();
    for y in 0..group.order() {
        let ly = group.len_idx(y);
        if ly < lx {
            for k in 1..=(lx - ly) as i32 {
                vars.push((y, k));
            }
        }
    }
    let var_index: BTreeMap<(usize, i32), usize> =
        vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // row key (z, m): coefficient of v^m H_z in d(C) - C
    let mut rows: BTreeMap<(usize, i32), (BTreeMap<usize, BigInt>, BigInt)> = BTreeMap::new();
    let mut bump = |key: (usize, i32), var: Option<usize>, c: &BigInt| {
        let row = rows.entry(key).or_default();
        match var {
            Some(j) => *row.0.entry(j).or_insert_with(BigInt::zero) += c,
            None => row.1 += c,
        }
    };

    for (z, p) in bar_standard(group, x).terms() {
        for (e, c) in p.terms() {
            bump((z.index(), e), None, c);
        }
    }
    bump((x, 0), None, &BigInt::from(-1));

    let mut bar_cache: BTreeMap<usize, HeckeElt> = BTreeMap::new();
    for (j, &(y, k)) in vars.iter().enumerate() {
        let dy = bar_cache.entry(y).or_insert_with(|| bar_standard(group, y));
        // d(a v^k H_y) = a v^-k d(H_y)
        for (z, p) in dy.terms() {
            for (e, c) in p.terms() {
                bump((z.index(), e - k), Some(j), c);
            }
        }
        bump((y, k), Some(j), &BigInt::from(-1));
    }

    let n = vars.len();
    let mut a = Matrix::zeros(rows.len(), n);
    let mut rhs = Vec::with_capacity(rows.len());
    for (r, (_, (coeffs, constant))) in rows.iter().enumerate() {
        for (&j, c) in coeffs {
            a.set(r, j, Q::from_integer(c.clone()));
        }
        rhs.push(Q::from_integer(-constant.clone()));
    }
    let sol = a.solve(&rhs).ok_or("self-duality system is inconsistent")?;
    if a.rank() != n {
        return Err(format!("solution not unique (rank {} < {n})", a.rank()));
    }

    let mut out = HeckeElt::from_index(group, x);
    for (&(y, k), j) in &var_index {
        let q = &sol[*j];
        if !q.is_integer() {
            return Err(format!("non-integral coefficient {q}"));
        }
        let term = HeckeElt::from_index(group, y).scale(&LaurentPoly::monomial(q.to_integer(), k));
        out = &out + &term;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{HeckeAlgebra, KlVariant};

    #[test]
    fn agrees_with_recursion_in_small_groups() {
        for t in ["A1", "A2", "G2"] {
            let g = Arc::new(WeylGroup::new(t.parse().unwrap()).unwrap());
            let alg = HeckeAlgebra::new(Arc::clone(&g));
            for x in g.elements() {
                let want = alg.kl_element(x, KlVariant::C).unwrap();
                assert_eq!(solve_kl(&g, x.index()).unwrap(), want, "{t} {}", g.name(x));
            }
        }
    }
}
