//! Bounded complexes of functors, their composition and evaluation, and
//! homology of the resulting complexes of modules.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::algebra::{express, null_basis, BlockAlgebra, BlockModule, Vertex};
use super::functor::{Adjunctions, Cat, Nat, Obj, Word};
use crate::linalg::{q, Matrix, Q};

/// `(degree, index)` of each factor of a composite.
pub type Label = Vec<(i32, usize)>;

/// A summand of a functor complex. Labels record the (degree, index) of
/// each factor in a composite and decide the ordering within a degree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Component {
    pub label: Label,
    pub word: Word,
}

/// Matrix of natural transformations, `entries[t][s]` from source summand
/// `s` to target summand `t`.
pub type NatMatrix = Vec<Vec<Nat>>;

#[derive(Clone, Debug)]
pub struct FunctorComplex {
    source: Cat,
    target: Cat,
    terms: BTreeMap<i32, Vec<Component>>,
    // d[i]: terms[i] -> terms[i + 1]
    d: BTreeMap<i32, NatMatrix>,
}

fn zero_matrix(src: &[Component], tgt: &[Component]) -> NatMatrix {
    tgt.iter()
        .map(|t| {
            src.iter()
                .map(|s| Nat::zero(s.word.clone(), t.word.clone()))
                .collect()
        })
        .collect()
}

fn sign(i: i32) -> Q {
    if i.rem_euclid(2) == 0 {
        q(1)
    } else {
        q(-1)
    }
}

impl FunctorComplex {
    /// Builds a complex from summands and differentials; missing
    /// differentials are zero. Summands within a degree are sorted by label.
    pub fn new(
        source: Cat,
        target: Cat,
        terms: BTreeMap<i32, Vec<Component>>,
        d: BTreeMap<i32, NatMatrix>,
    ) -> Self {
        for comps in terms.values() {
            assert!(
                comps.windows(2).all(|w| w[0].label < w[1].label),
                "labels must be sorted and distinct"
            );
            for c in comps {
                assert_eq!((c.word.source(), c.word.target()), (source, target));
            }
        }
        let mut full = BTreeMap::new();
        for (&i, src) in &terms {
            let Some(tgt) = terms.get(&(i + 1)) else {
                continue;
            };
            let m = d.get(&i).cloned().unwrap_or_else(|| zero_matrix(src, tgt));
            assert_eq!(m.len(), tgt.len());
            for (row, t) in m.iter().zip(tgt) {
                assert_eq!(row.len(), src.len());
                for (n, s) in row.iter().zip(src) {
                    assert_eq!((n.source(), n.target()), (s.word.clone(), t.word.clone()));
                }
            }
            full.insert(i, m);
        }
        FunctorComplex {
            source,
            target,
            terms,
            d: full,
        }
    }

    /// The identity functor in degree 0, with an empty label.
    pub fn identity(cat: Cat) -> Self {
        let terms = BTreeMap::from([(
            0,
            vec![Component {
                label: vec![],
                word: Word::id(cat),
            }],
        )]);
        Self::new(cat, cat, terms, BTreeMap::new())
    }

    /// A two-term complex `w0 -> w1` in degrees `deg`, `deg + 1`.
    pub fn two_term(deg: i32, w0: Word, w1: Word, d: Nat) -> Self {
        let (s, t) = (w0.source(), w0.target());
        let terms = BTreeMap::from([
            (
                deg,
                vec![Component {
                    label: vec![(deg, 0)],
                    word: w0,
                }],
            ),
            (
                deg + 1,
                vec![Component {
                    label: vec![(deg + 1, 0)],
                    word: w1,
                }],
            ),
        ]);
        Self::new(s, t, terms, BTreeMap::from([(deg, vec![vec![d]])]))
    }

    pub fn source(&self) -> Cat {
        self.source
    }

    pub fn target(&self) -> Cat {
        self.target
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.terms.keys().copied()
    }

    pub fn terms(&self, i: i32) -> &[Component] {
        self.terms.get(&i).map_or(&[], Vec::as_slice)
    }

    pub fn differential(&self, i: i32) -> Option<&NatMatrix> {
        self.d.get(&i)
    }

    /// Same degrees, labels and words.
    pub fn same_shape(&self, other: &FunctorComplex) -> bool {
        self.source == other.source && self.target == other.target && self.terms == other.terms
    }

    /// The composite `self o inner`, with differential
    /// `d_F * 1 + (-1)^i 1_{F^i} * d_G`.
    pub fn compose(&self, inner: &FunctorComplex) -> FunctorComplex {
        assert_eq!(self.source, inner.target, "complexes do not compose");
        let mut terms: BTreeMap<i32, Vec<Component>> = BTreeMap::new();
        // (i, a, j, b) for each summand
        let mut keys: BTreeMap<(i32, usize, i32, usize), (i32, Label)> = BTreeMap::new();
        for (&i, fs) in &self.terms {
            for (a, f) in fs.iter().enumerate() {
                for (&j, gs) in &inner.terms {
                    for (b, g) in gs.iter().enumerate() {
                        let mut label = f.label.clone();
                        label.extend_from_slice(&g.label);
                        let comp = Component {
                            label: label.clone(),
                            word: f.word.after(&g.word),
                        };
                        terms.entry(i + j).or_default().push(comp);
                        keys.insert((i, a, j, b), (i + j, label));
                    }
                }
            }
        }
        for comps in terms.values_mut() {
            comps.sort();
        }
        let pos = |n: i32, label: &[(i32, usize)]| -> usize {
            terms[&n]
                .iter()
                .position(|c| c.label == label)
                .expect("summand present")
        };
        let mut d: BTreeMap<i32, NatMatrix> = BTreeMap::new();
        for (&n, src) in &terms {
            if let Some(tgt) = terms.get(&(n + 1)) {
                d.insert(n, zero_matrix(src, tgt));
            }
        }
        for (&(i, a, j, b), (n, label)) in &keys {
            let s = pos(*n, label);
            let f = &self.terms[&i][a];
            let g = &inner.terms[&j][b];
            if let Some(df) = self.d.get(&i) {
                for (a2, row) in df.iter().enumerate() {
                    let (_, l2) = &keys[&(i + 1, a2, j, b)];
                    let t = pos(n + 1, l2);
                    let entry = Nat::right(row[a].clone(), &g.word);
                    add_entry(&mut d, *n, t, s, entry);
                }
            }
            if let Some(dg) = inner.d.get(&j) {
                for (b2, row) in dg.iter().enumerate() {
                    let (_, l2) = &keys[&(i, a, j + 1, b2)];
                    let t = pos(n + 1, l2);
                    let entry = Nat::left(&f.word, row[b].clone()).scaled(sign(i));
                    add_entry(&mut d, *n, t, s, entry);
                }
            }
        }
        FunctorComplex::new(inner.source, self.target, terms, d)
    }

    /// The complex of objects obtained by evaluating at `x`.
    pub fn evaluate(&self, alg: &BlockAlgebra, x: &Obj) -> ChainComplex {
        let mut objs = BTreeMap::new();
        let mut perms = BTreeMap::new();
        let mut parts: BTreeMap<i32, Vec<Obj>> = BTreeMap::new();
        for (&i, comps) in &self.terms {
            let ps: Vec<Obj> = comps.iter().map(|c| c.word.apply(alg, x)).collect();
            let (o, p) = Obj::direct_sum(self.target, &ps);
            objs.insert(i, o);
            perms.insert(i, p);
            parts.insert(i, ps);
        }
        let mut d = BTreeMap::new();
        for (&i, m) in &self.d {
            let block = nat_block(alg, m, &parts[&i], &parts[&(i + 1)], x);
            d.insert(i, &(&perms[&(i + 1)] * &block) * &perms[&i].transpose());
        }
        ChainComplex::new(self.target, objs, d)
    }

    /// Applies the complex to a complex of objects, giving the total complex
    /// with differential `d_F + (-1)^i F^i(d_C)`.
    pub fn apply_complex(&self, alg: &BlockAlgebra, c: &ChainComplex) -> ChainComplex {
        assert_eq!(c.cat, self.source);
        // summands (i, a, j) in degree i + j, ordered by (i, a, j)
        let mut layout: BTreeMap<i32, Vec<(i32, usize, i32)>> = BTreeMap::new();
        let mut parts: BTreeMap<i32, Vec<Obj>> = BTreeMap::new();
        for (&i, comps) in &self.terms {
            for (a, comp) in comps.iter().enumerate() {
                for (&j, x) in &c.objs {
                    layout.entry(i + j).or_default().push((i, a, j));
                    parts
                        .entry(i + j)
                        .or_default()
                        .push(comp.word.apply(alg, x));
                }
            }
        }
        let offsets = |n: i32| -> Vec<usize> {
            let mut acc = 0;
            parts[&n]
                .iter()
                .map(|o| {
                    let s = acc;
                    acc += o.total();
                    s
                })
                .collect()
        };
        let mut objs = BTreeMap::new();
        let mut perms = BTreeMap::new();
        for (&n, ps) in &parts {
            let (o, p) = Obj::direct_sum(self.target, ps);
            objs.insert(n, o);
            perms.insert(n, p);
        }
        let mut d = BTreeMap::new();
        for (&n, src) in &layout {
            let Some(tgt) = layout.get(&(n + 1)) else {
                continue;
            };
            let (so, to) = (offsets(n), offsets(n + 1));
            let rows: usize = parts[&(n + 1)].iter().map(Obj::total).sum();
            let cols: usize = parts[&n].iter().map(Obj::total).sum();
            let mut block = Matrix::zeros(rows, cols);
            for (si, &(i, a, j)) in src.iter().enumerate() {
                let x = &c.objs[&j];
                if let Some(df) = self.d.get(&i) {
                    for (a2, row) in df.iter().enumerate() {
                        let ti = tgt
                            .iter()
                            .position(|&k| k == (i + 1, a2, j))
                            .expect("summand");
                        block.put(to[ti], so[si], &row[a].component(alg, x));
                    }
                }
                if let Some(dc) = c.d.get(&j) {
                    let ti = tgt
                        .iter()
                        .position(|&k| k == (i, a, j + 1))
                        .expect("summand");
                    let word = &self.terms[&i][a].word;
                    let m = word
                        .apply_mor(alg, dc, x, &c.objs[&(j + 1)])
                        .scale(&sign(i));
                    block.put(to[ti], so[si], &m);
                }
            }
            d.insert(n, &(&perms[&(n + 1)] * &block) * &perms[&n].transpose());
        }
        ChainComplex::new(self.target, objs, d)
    }
}

fn add_entry(d: &mut BTreeMap<i32, NatMatrix>, n: i32, t: usize, s: usize, entry: Nat) {
    let slot = &mut d.get_mut(&n).expect("differential slot")[t][s];
    let old = std::mem::replace(slot, Nat::zero(entry.source(), entry.target()));
    *slot = if matches!(old, Nat::Zero { .. }) {
        entry
    } else {
        old.plus(entry)
    };
}

fn nat_block(alg: &BlockAlgebra, m: &NatMatrix, src: &[Obj], tgt: &[Obj], x: &Obj) -> Matrix {
    let rows: usize = tgt.iter().map(Obj::total).sum();
    let cols: usize = src.iter().map(Obj::total).sum();
    let mut block = Matrix::zeros(rows, cols);
    let mut r0 = 0;
    for (t, row) in m.iter().enumerate() {
        let mut c0 = 0;
        for (s, n) in row.iter().enumerate() {
            if !matches!(n, Nat::Zero { .. }) {
                block.put(r0, c0, &n.component(alg, x));
            }
            c0 += src[s].total();
        }
        r0 += tgt[t].total();
    }
    block
}

/// A degree-zero morphism of functor complexes.
#[derive(Clone, Debug)]
pub struct ComplexMap {
    pub source: FunctorComplex,
    pub target: FunctorComplex,
    maps: BTreeMap<i32, NatMatrix>,
}

impl ComplexMap {
    /// Missing degrees are zero.
    pub fn new(
        source: FunctorComplex,
        target: FunctorComplex,
        maps: BTreeMap<i32, NatMatrix>,
    ) -> Self {
        let mut full = BTreeMap::new();
        for (&i, src) in &source.terms {
            let Some(tgt) = target.terms.get(&i) else {
                continue;
            };
            let m = maps
                .get(&i)
                .cloned()
                .unwrap_or_else(|| zero_matrix(src, tgt));
            assert_eq!(m.len(), tgt.len());
            for (row, t) in m.iter().zip(tgt) {
                assert_eq!(row.len(), src.len());
                for (n, s) in row.iter().zip(src) {
                    assert_eq!((n.source(), n.target()), (s.word.clone(), t.word.clone()));
                }
            }
            full.insert(i, m);
        }
        ComplexMap {
            source,
            target,
            maps: full,
        }
    }

    pub fn identity(f: &FunctorComplex) -> Self {
        let maps = f
            .terms
            .iter()
            .map(|(&i, comps)| {
                let m = comps
                    .iter()
                    .map(|t| {
                        comps
                            .iter()
                            .map(|s| {
                                if s == t {
                                    Nat::Identity(s.word.clone())
                                } else {
                                    Nat::zero(s.word.clone(), t.word.clone())
                                }
                            })
                            .collect()
                    })
                    .collect();
                (i, m)
            })
            .collect();
        ComplexMap::new(f.clone(), f.clone(), maps)
    }

    /// `self` after `inner`; the target of `inner` must have the same shape
    /// as the source of `self`.
    pub fn after(&self, inner: &ComplexMap) -> ComplexMap {
        assert!(
            self.source.same_shape(&inner.target),
            "complex maps do not compose"
        );
        let mut maps = BTreeMap::new();
        for (&i, outer) in &self.maps {
            let Some(inn) = inner.maps.get(&i) else {
                continue;
            };
            let src = inner.source.terms(i);
            let tgt = self.target.terms(i);
            let mut m = zero_matrix(src, tgt);
            for (t, row) in outer.iter().enumerate() {
                for (s, cell) in m[t].iter_mut().enumerate() {
                    for (k, o) in row.iter().enumerate() {
                        let n = &inn[k][s];
                        if matches!(o, Nat::Zero { .. }) || matches!(n, Nat::Zero { .. }) {
                            continue;
                        }
                        let term = o.clone().after(n.clone());
                        let old = std::mem::replace(cell, Nat::zero(term.source(), term.target()));
                        *cell = if matches!(old, Nat::Zero { .. }) {
                            term
                        } else {
                            old.plus(term)
                        };
                    }
                }
            }
            maps.insert(i, m);
        }
        ComplexMap::new(inner.source.clone(), self.target.clone(), maps)
    }

    /// `1_F * self`.
    pub fn whisker_left(f: &FunctorComplex, phi: &ComplexMap) -> ComplexMap {
        Self::whisker(f, phi, None)
    }

    /// `self * 1_H`.
    pub fn whisker_right(phi: &ComplexMap, h: &FunctorComplex) -> ComplexMap {
        Self::whisker(h, phi, Some(()))
    }

    fn whisker(other: &FunctorComplex, phi: &ComplexMap, on_right: Option<()>) -> ComplexMap {
        let (src, tgt) = match on_right {
            None => (other.compose(&phi.source), other.compose(&phi.target)),
            Some(()) => (phi.source.compose(other), phi.target.compose(other)),
        };
        let mut maps: BTreeMap<i32, NatMatrix> = BTreeMap::new();
        for (&n, comps) in &src.terms {
            if let Some(tc) = tgt.terms.get(&n) {
                maps.insert(n, zero_matrix(comps, tc));
            }
        }
        for (&i, oc) in &other.terms {
            for oth in oc {
                for (&j, m) in &phi.maps {
                    let (ps, pt) = (phi.source.terms(j), phi.target.terms(j));
                    for (t, row) in m.iter().enumerate() {
                        for (s, n) in row.iter().enumerate() {
                            if matches!(n, Nat::Zero { .. }) {
                                continue;
                            }
                            let (sl, tl, entry) = match on_right {
                                None => (
                                    [oth.label.clone(), ps[s].label.clone()].concat(),
                                    [oth.label.clone(), pt[t].label.clone()].concat(),
                                    Nat::left(&oth.word, n.clone()),
                                ),
                                Some(()) => (
                                    [ps[s].label.clone(), oth.label.clone()].concat(),
                                    [pt[t].label.clone(), oth.label.clone()].concat(),
                                    Nat::right(n.clone(), &oth.word),
                                ),
                            };
                            let deg = i + j;
                            let si = src.terms[&deg]
                                .iter()
                                .position(|c| c.label == sl)
                                .expect("summand");
                            let ti = tgt.terms[&deg]
                                .iter()
                                .position(|c| c.label == tl)
                                .expect("summand");
                            maps.get_mut(&deg).expect("degree")[ti][si] = entry;
                        }
                    }
                }
            }
        }
        ComplexMap::new(src, tgt, maps)
    }

    /// Components at `x`, one matrix per degree.
    pub fn evaluate(&self, alg: &BlockAlgebra, x: &Obj) -> BTreeMap<i32, Matrix> {
        let mut out = BTreeMap::new();
        for (&i, m) in &self.maps {
            let sp: Vec<Obj> = self
                .source
                .terms(i)
                .iter()
                .map(|c| c.word.apply(alg, x))
                .collect();
            let tp: Vec<Obj> = self
                .target
                .terms(i)
                .iter()
                .map(|c| c.word.apply(alg, x))
                .collect();
            let (_, ps) = Obj::direct_sum(self.source.target, &sp);
            let (_, pt) = Obj::direct_sum(self.target.target, &tp);
            let block = nat_block(alg, m, &sp, &tp, x);
            out.insert(i, &(&pt * &block) * &ps.transpose());
        }
        out
    }
}

/// Sign attached to the `i`-th term of ev and coev.
fn ev_sign(i: i32) -> Q {
    sign(i.div_euclid(2))
}

/// For a complex of right adjoints with one summand per degree, the complex
/// of left adjoints with the term of degree `i` moved to degree `-i` and
/// transposed differentials.
pub fn left_adjoint_complex(adj: &Adjunctions, f: &FunctorComplex) -> FunctorComplex {
    let mut terms = BTreeMap::new();
    let mut d = BTreeMap::new();
    for (&i, comps) in &f.terms {
        assert_eq!(comps.len(), 1, "one summand per degree");
        terms.insert(
            -i,
            vec![Component {
                label: vec![(-i, 0)],
                word: comps[0].word.left_adjoint(),
            }],
        );
    }
    for (&i, m) in &f.d {
        // d_i: f_i => f_{i+1} becomes f_{i+1}^L => f_i^L, from degree -i-1 to -i
        d.insert(-i - 1, vec![vec![adj.transpose(&m[0][0])]]);
    }
    FunctorComplex::new(f.target, f.source, terms, d)
}

/// `ev: F^L F => id`, with `F^L` the left adjoint complex of `f`.
pub fn evaluation(adj: &Adjunctions, f: &FunctorComplex) -> ComplexMap {
    let fl = left_adjoint_complex(adj, f);
    let src = fl.compose(f);
    let tgt = FunctorComplex::identity(f.source);
    let row: Vec<Nat> = src
        .terms(0)
        .iter()
        .map(|c| {
            let i = c.label[1].0;
            let w = &f.terms(i)[0].word;
            adj.counit(w).scaled(ev_sign(i))
        })
        .collect();
    ComplexMap::new(src, tgt, BTreeMap::from([(0, vec![row])]))
}

/// `coev: id => F F^L`.
pub fn coevaluation(adj: &Adjunctions, f: &FunctorComplex) -> ComplexMap {
    let fl = left_adjoint_complex(adj, f);
    let src = FunctorComplex::identity(f.target);
    let tgt = f.compose(&fl);
    let col: NatMatrix = tgt
        .terms(0)
        .iter()
        .map(|c| {
            let i = c.label[0].0;
            let w = &f.terms(i)[0].word;
            vec![adj.unit(w).scaled(ev_sign(i))]
        })
        .collect();
    ComplexMap::new(src, tgt, BTreeMap::from([(0, col)]))
}

/// A bounded complex of objects in one category, in canonical coordinates.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub cat: Cat,
    pub objs: BTreeMap<i32, Obj>,
    pub d: BTreeMap<i32, Matrix>,
}

/// `H_i` of a complex, with the data to read off classes of cycles.
#[derive(Clone, Debug)]
pub struct Homology {
    pub module: BlockModule,
    // per vertex: basis of boundaries and of a chosen complement in cycles
    parts: [(Matrix, Matrix); 2],
    offsets: [usize; 2],
}

impl Homology {
    pub fn dim(&self) -> usize {
        self.module.total()
    }

    /// Coordinates of the class of a cycle (given in the term's coordinates).
    pub fn class_of(&self, v: &[Q]) -> Vec<Q> {
        let mut out = Vec::new();
        for (k, (b, c)) in self.parts.iter().enumerate() {
            let n = b.rows();
            let piece: Vec<Q> = v[self.offsets[k]..self.offsets[k] + n].to_vec();
            let basis = b.hstack(c);
            let x = if basis.cols() == 0 {
                Vec::new()
            } else {
                basis.solve(&piece).expect("vector is a cycle")
            };
            out.extend_from_slice(&x[b.cols()..]);
        }
        out
    }

    /// Representatives of the homology basis, in the term's coordinates.
    pub fn representatives(&self, total: usize) -> Vec<Vec<Q>> {
        let mut out = Vec::new();
        for (k, (_, c)) in self.parts.iter().enumerate() {
            for j in 0..c.cols() {
                let mut v = vec![Q::zero(); total];
                for r in 0..c.rows() {
                    v[self.offsets[k] + r] = c.get(r, j).clone();
                }
                out.push(v);
            }
        }
        out
    }
}

impl ChainComplex {
    pub fn new(cat: Cat, objs: BTreeMap<i32, Obj>, d: BTreeMap<i32, Matrix>) -> Self {
        ChainComplex { cat, objs, d }
    }

    /// A single object in degree `deg`.
    pub fn single(x: Obj, deg: i32) -> Self {
        ChainComplex::new(x.cat(), BTreeMap::from([(deg, x)]), BTreeMap::new())
    }

    fn obj(&self, i: i32) -> Obj {
        self.objs.get(&i).cloned().unwrap_or(match self.cat {
            Cat::Mod => Obj::Mod(BlockModule::zero()),
            Cat::Wall => Obj::Wall(0),
        })
    }

    fn diff(&self, i: i32) -> Matrix {
        self.d
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.obj(i + 1).total(), self.obj(i).total()))
    }

    pub fn squares_to_zero(&self) -> bool {
        self.d.keys().all(|&i| {
            self.d
                .get(&(i + 1))
                .is_none_or(|d2| (d2 * &self.d[&i]).is_zero())
        })
    }

    /// Whether every differential is a module map.
    pub fn differentials_are_maps(&self) -> bool {
        self.d.iter().all(|(i, m)| {
            self.obj(*i)
                .as_module()
                .is_hom(&self.obj(i + 1).as_module(), m)
        })
    }

    pub fn homology(&self, i: i32) -> Homology {
        let m = self.obj(i).as_module();
        let prev = self.obj(i - 1).as_module();
        let next = self.obj(i + 1).as_module();
        let (dout, din) = (self.diff(i), self.diff(i - 1));
        let mut parts = Vec::new();
        for v in [Vertex::E, Vertex::S] {
            let (o, n) = (m.offset(v), m.dim(v));
            let z = null_basis(&dout.block(next.offset(v), o, next.dim(v), n));
            let z = if z.rows() == 0 {
                Matrix::zeros(n, 0)
            } else {
                z
            };
            let bsrc = din.block(o, prev.offset(v), n, prev.dim(v));
            let b = super::algebra::column_basis(&bsrc);
            let b = if b.rows() == 0 {
                Matrix::zeros(n, 0)
            } else {
                b
            };
            let in_z = z.hstack(&b).rank() == z.cols();
            assert!(in_z, "boundaries are cycles");
            // extend b by cycles
            let mut c_cols = Vec::new();
            let mut cur = b.clone();
            for j in 0..z.cols() {
                let col = z.column(j);
                let ext = cur.hstack(&Matrix::from_columns(n, std::slice::from_ref(&col)));
                if ext.rank() > cur.cols() {
                    cur = ext;
                    c_cols.push(col);
                }
            }
            parts.push((b, Matrix::from_columns(n, &c_cols)));
        }
        let [(be, ce), (bs, cs)] = [parts[0].clone(), parts[1].clone()];
        let arrow = |map: &Matrix, bt: &Matrix, ct: &Matrix, cs_src: &Matrix| -> Matrix {
            let basis = bt.hstack(ct);
            let imgs = map * cs_src;
            if basis.cols() == 0 || cs_src.cols() == 0 {
                return Matrix::zeros(ct.cols(), cs_src.cols());
            }
            let x = express(&basis, &imgs).expect("cycles closed under arrows");
            x.block(bt.cols(), 0, ct.cols(), cs_src.cols())
        };
        let a = arrow(m.arrow_a(), &bs, &cs, &ce);
        let b = arrow(m.arrow_b(), &be, &ce, &cs);
        let module = BlockModule::new(ce.cols(), cs.cols(), a, b).expect("homology is a module");
        Homology {
            module,
            parts: [(be, ce), (bs, cs)],
            offsets: [m.offset(Vertex::E), m.offset(Vertex::S)],
        }
    }

    /// Degrees that may carry homology.
    pub fn support(&self) -> BTreeSet<i32> {
        self.objs.keys().copied().collect()
    }

    pub fn homology_dims(&self) -> BTreeMap<i32, usize> {
        self.support()
            .into_iter()
            .map(|i| (i, self.homology(i).dim()))
            .filter(|&(_, d)| d > 0)
            .collect()
    }

    /// Euler characteristic as a dimension vector `(e, s)`.
    pub fn euler_dims(&self) -> (i64, i64) {
        let mut e = 0;
        let mut s = 0;
        for (&i, o) in &self.objs {
            let m = o.as_module();
            let sg = if i.rem_euclid(2) == 0 { 1 } else { -1 };
            e += sg * m.dim_e() as i64;
            s += sg * m.dim_s() as i64;
        }
        (e, s)
    }

    /// Whether `f: self -> other` (one matrix per degree) is a chain map.
    pub fn is_chain_map(&self, other: &ChainComplex, f: &BTreeMap<i32, Matrix>) -> bool {
        let degrees: BTreeSet<i32> = self.support().union(&other.support()).copied().collect();
        let fm = |i: i32| {
            f.get(&i)
                .cloned()
                .unwrap_or_else(|| Matrix::zeros(other.obj(i).total(), self.obj(i).total()))
        };
        degrees
            .iter()
            .all(|&i| &other.diff(i) * &fm(i) == &fm(i + 1) * &self.diff(i))
    }

    /// Whether a chain map induces isomorphisms on all homology.
    pub fn is_quasi_iso(&self, other: &ChainComplex, f: &BTreeMap<i32, Matrix>) -> bool {
        if !self.is_chain_map(other, f) {
            return false;
        }
        let degrees: BTreeSet<i32> = self.support().union(&other.support()).copied().collect();
        degrees.iter().all(|&i| {
            let (hs, ht) = (self.homology(i), other.homology(i));
            if hs.dim() != ht.dim() {
                return false;
            }
            if hs.dim() == 0 {
                return true;
            }
            let fi = f
                .get(&i)
                .cloned()
                .unwrap_or_else(|| Matrix::zeros(other.obj(i).total(), self.obj(i).total()));
            let cols: Vec<Vec<Q>> = hs
                .representatives(self.obj(i).total())
                .iter()
                .map(|r| ht.class_of(&fi.apply(r)))
                .collect();
            Matrix::from_columns(ht.dim(), &cols).rank() == hs.dim()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::functor::{Atom, Letter};

    fn adj() -> Adjunctions {
        let mut z = vec![q(0); 9];
        z[2] = q(1);
        z[3] = q(1);
        z[7] = q(1);
        Adjunctions {
            counit_pull_push: vec![q(1), q(0)],
            unit_push_pull: vec![q(1), q(0)],
            counit_push_pull: vec![q(0), q(1)],
            unit_pull_push: z,
        }
    }

    #[test]
    fn theta_shriek_on_simples() {
        let alg = BlockAlgebra::rank_one();
        let a = adj();
        let eta = Nat::atom(Atom::IdToPullPush(a.unit_pull_push.clone()));
        let shriek = FunctorComplex::two_term(-1, Word::id(Cat::Mod), Word::theta(), eta);
        let ls = Obj::Mod(BlockModule::simple(Vertex::S));
        let c = shriek.evaluate(&alg, &ls);
        assert!(c.squares_to_zero());
        assert_eq!(c.homology_dims(), BTreeMap::from([(-1, 1)]));
        let le = Obj::Mod(BlockModule::simple(Vertex::E));
        let c = shriek.evaluate(&alg, &le);
        let h = c.homology(0);
        assert_eq!(c.homology_dims(), BTreeMap::from([(0, 2)]));
        assert_eq!((h.module.dim_e(), h.module.dim_s()), (1, 1));
        let _ = Letter::Push;
    }

    #[test]
    fn composite_differentials_square_to_zero() {
        let alg = BlockAlgebra::rank_one();
        let a = adj();
        let eps = Nat::atom(Atom::PullPushToId(a.counit_pull_push.clone()));
        let star = FunctorComplex::two_term(0, Word::theta(), Word::id(Cat::Mod), eps);
        let sq = star.compose(&star);
        assert_eq!(sq.terms(1).len(), 2);
        for m in [
            alg.projective(Vertex::E),
            alg.projective(Vertex::S),
            BlockModule::simple(Vertex::S),
        ] {
            let c = sq.evaluate(&alg, &Obj::Mod(m));
            assert!(c.squares_to_zero());
            assert!(c.differentials_are_maps());
        }
    }

    #[test]
    fn zigzags_for_theta_shriek() {
        let alg = BlockAlgebra::rank_one();
        let a = adj();
        let eta = Nat::atom(Atom::IdToPullPush(a.unit_pull_push.clone()));
        let shriek = FunctorComplex::two_term(-1, Word::id(Cat::Mod), Word::theta(), eta);
        let star = left_adjoint_complex(&a, &shriek);
        let ev = evaluation(&a, &shriek);
        let coev = coevaluation(&a, &shriek);
        let z1 = ComplexMap::whisker_left(&shriek, &ev)
            .after(&ComplexMap::whisker_right(&coev, &shriek));
        let z2 =
            ComplexMap::whisker_right(&ev, &star).after(&ComplexMap::whisker_left(&star, &coev));
        let id1 = ComplexMap::identity(&shriek);
        let id2 = ComplexMap::identity(&star);
        for m in [alg.projective(Vertex::E), BlockModule::simple(Vertex::S)] {
            let x = Obj::Mod(m);
            assert_eq!(z1.evaluate(&alg, &x), id1.evaluate(&alg, &x));
            assert_eq!(z2.evaluate(&alg, &x), id2.evaluate(&alg, &x));
        }
    }
}
