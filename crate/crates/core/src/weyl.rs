//! Finite Weyl groups built from their Cartan matrix.
//!
//! Elements are enumerated through their action on the simple roots (written
//! in simple-root coordinates), which works uniformly for every type. Each
//! element gets a dense index; indices are sorted by length and then by the
//! lexicographically least reduced word, so index order refines the Bruhat
//! order and all tables are reproducible.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

use serde::Serialize;

use crate::error::{Error, Result};

/// Default enumeration cap on the group order (8!).
pub const DEFAULT_ORDER_CAP: u128 = 40320;

/// Groups up to this order keep a full Bruhat bitset table.
const BRUHAT_TABLE_LIMIT: usize = 5040;

static NEXT_GROUP_ID: AtomicU32 = AtomicU32::new(1);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanLetter {
    A,
    B,
    C,
    D,
    F,
    G,
}

impl CartanLetter {
    fn as_char(self) -> char {
        match self {
            CartanLetter::A => 'A',
            CartanLetter::B => 'B',
            CartanLetter::C => 'C',
            CartanLetter::D => 'D',
            CartanLetter::F => 'F',
            CartanLetter::G => 'G',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    letter: CartanLetter,
    rank: usize,
}

impl CartanDatum {
    pub fn new(letter: CartanLetter, rank: usize) -> Result<Self> {
        let ok = match letter {
            CartanLetter::A => rank >= 1,
            CartanLetter::B | CartanLetter::C => rank >= 2,
            CartanLetter::D => rank >= 4,
            CartanLetter::F => rank == 4,
            CartanLetter::G => rank == 2,
        };
        if ok {
            Ok(CartanDatum { letter, rank })
        } else {
            Err(Error::Inadmissible {
                letter: letter.as_char(),
                rank,
            })
        }
    }

    pub fn letter(&self) -> CartanLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `a[i][j] = <alpha_i^vee, alpha_j>` (Bourbaki numbering).
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.letter {
            CartanLetter::A => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1, -1, -1);
                }
            }
            CartanLetter::B => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 2, n - 1, -1, -2);
            }
            CartanLetter::C => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 2, n - 1, -2, -1);
            }
            CartanLetter::D => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 3, n - 1, -1, -1);
            }
            CartanLetter::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            CartanLetter::G => {
                link(0, 1, -3, -1);
            }
        }
        a
    }

    /// Order of the Weyl group from the classification.
    pub fn expected_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.letter {
            CartanLetter::A => fact(n + 1),
            CartanLetter::B | CartanLetter::C => (1u128 << n) * fact(n),
            CartanLetter::D => (1u128 << (n - 1)) * fact(n),
            CartanLetter::F => 1152,
            CartanLetter::G => 12,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.letter {
            CartanLetter::A => n * (n + 1) / 2,
            CartanLetter::B | CartanLetter::C => n * n,
            CartanLetter::D => n * (n - 1),
            CartanLetter::F => 24,
            CartanLetter::G => 6,
        }
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

impl FromStr for CartanDatum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => CartanLetter::A,
            Some('B') => CartanLetter::B,
            Some('C') => CartanLetter::C,
            Some('D') => CartanLetter::D,
            Some('F') => CartanLetter::F,
            Some('G') => CartanLetter::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanDatum::new(letter, rank)
    }
}

/// An element of a particular [`WeylGroup`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    group: u32,
    index: u32,
}

impl WeylElt {
    /// Dense index inside the owning group; index order refines Bruhat order.
    pub fn index(self) -> usize {
        self.index as usize
    }
}

#[derive(Debug)]
pub struct WeylGroup {
    id: u32,
    datum: CartanDatum,
    rank: usize,
    length: Vec<u32>,
    // [w * rank + i] -> index of w s_i (resp. s_i w)
    right: Vec<u32>,
    left: Vec<u32>,
    inverse: Vec<u32>,
    words: Vec<Vec<u8>>,
    w0: u32,
    bruhat: Option<Vec<Vec<u64>>>,
}

impl WeylGroup {
    pub fn new(datum: CartanDatum) -> Result<Self> {
        Self::with_cap(datum, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(datum: CartanDatum, cap: u128) -> Result<Self> {
        let order = datum.expected_order();
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        let n = datum.rank;
        let a = datum.cartan_matrix();

        // element = images of the simple roots, flattened (n x n)
        let identity: Vec<i64> = (0..n * n).map(|k| i64::from(k / n == k % n)).collect();
        let mut seen: HashMap<Vec<i64>, u32> = HashMap::new();
        let mut elems: Vec<Vec<i64>> = vec![identity.clone()];
        let mut bfs_len: Vec<u32> = vec![0];
        seen.insert(identity, 0);
        let mut queue = VecDeque::from([0u32]);
        let mut right_bfs: Vec<Vec<u32>> = vec![vec![u32::MAX; n]];

        while let Some(w) = queue.pop_front() {
            for i in 0..n {
                if right_bfs[w as usize][i] != u32::MAX {
                    continue;
                }
                let img = &elems[w as usize];
                // (w s_i)(alpha_j) = w(alpha_j) - a[i][j] w(alpha_i)
                let mut next = img.clone();
                for j in 0..n {
                    for k in 0..n {
                        next[j * n + k] -= a[i][j] * img[i * n + k];
                    }
                }
                let id = match seen.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = elems.len() as u32;
                        seen.insert(next.clone(), id);
                        elems.push(next);
                        bfs_len.push(bfs_len[w as usize] + 1);
                        right_bfs.push(vec![u32::MAX; n]);
                        queue.push_back(id);
                        id
                    }
                };
                right_bfs[w as usize][i] = id;
                right_bfs[id as usize][i] = w;
            }
        }
        assert_eq!(
            elems.len() as u128,
            order,
            "enumeration disagrees with the classification"
        );

        // left multiplication: s_i beta = beta - <alpha_i^vee, beta> alpha_i
        let mut left_bfs = vec![vec![0u32; n]; elems.len()];
        for (w, img) in elems.iter().enumerate() {
            for i in 0..n {
                let mut next = img.clone();
                for j in 0..n {
                    let pairing: i64 = (0..n).map(|k| img[j * n + k] * a[i][k]).sum();
                    next[j * n + i] -= pairing;
                }
                left_bfs[w][i] = seen[&next];
            }
        }

        // lexicographically least reduced words, by increasing length
        let mut by_len: Vec<usize> = (0..elems.len()).collect();
        by_len.sort_by_key(|&w| bfs_len[w]);
        let mut words_bfs: Vec<Vec<u8>> = vec![Vec::new(); elems.len()];
        for &w in &by_len {
            if bfs_len[w] == 0 {
                continue;
            }
            let first = (0..n)
                .find(|&i| bfs_len[left_bfs[w][i] as usize] < bfs_len[w])
                .expect("nonidentity element has a left descent");
            let mut word = vec![first as u8];
            word.extend_from_slice(&words_bfs[left_bfs[w][first] as usize]);
            words_bfs[w] = word;
        }

        let mut order_idx: Vec<usize> = (0..elems.len()).collect();
        order_idx.sort_by(|&x, &y| {
            bfs_len[x]
                .cmp(&bfs_len[y])
                .then_with(|| words_bfs[x].cmp(&words_bfs[y]))
        });
        let mut relabel = vec![0u32; elems.len()];
        for (new, &old) in order_idx.iter().enumerate() {
            relabel[old] = new as u32;
        }

        let size = elems.len();
        let mut length = vec![0u32; size];
        let mut right = vec![0u32; size * n];
        let mut left = vec![0u32; size * n];
        let mut words = vec![Vec::new(); size];
        for old in 0..size {
            let new = relabel[old] as usize;
            length[new] = bfs_len[old];
            words[new] = words_bfs[old].clone();
            for i in 0..n {
                right[new * n + i] = relabel[right_bfs[old][i] as usize];
                left[new * n + i] = relabel[left_bfs[old][i] as usize];
            }
        }
        let w0 = (size - 1) as u32;

        let mut inverse = vec![0u32; size];
        for w in 0..size {
            let mut x = 0u32;
            for &i in words[w].iter().rev() {
                x = right[x as usize * n + i as usize];
            }
            inverse[w] = x;
        }

        let mut group = WeylGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            datum,
            rank: n,
            length,
            right,
            left,
            inverse,
            words,
            w0,
            bruhat: None,
        };
        if size <= BRUHAT_TABLE_LIMIT {
            group.bruhat = Some(group.build_bruhat_table());
        }
        Ok(group)
    }

    fn build_bruhat_table(&self) -> Vec<Vec<u64>> {
        let size = self.order();
        let blocks = size.div_ceil(64);
        let mut below: Vec<Vec<u64>> = vec![vec![0u64; blocks]; size];
        below[0][0] = 1;
        // indices are sorted by length, so ys is always done before y
        for y in 1..size {
            let s = self.first_right_descent(y);
            let ys = self.rmul_idx(y, s);
            let mut set = below[ys].clone();
            for x in 0..size {
                if below[ys][x / 64] >> (x % 64) & 1 == 1 {
                    let xs = self.rmul_idx(x, s);
                    set[xs / 64] |= 1 << (xs % 64);
                }
            }
            below[y] = set;
        }
        below
    }

    pub fn datum(&self) -> CartanDatum {
        self.datum
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.length.len()
    }

    pub fn elt(&self, index: usize) -> WeylElt {
        assert!(index < self.order(), "element index out of range");
        WeylElt {
            group: self.id,
            index: index as u32,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElt> + '_ {
        (0..self.order()).map(move |i| self.elt(i))
    }

    pub fn identity(&self) -> WeylElt {
        self.elt(0)
    }

    pub fn longest(&self) -> WeylElt {
        self.elt(self.w0 as usize)
    }

    /// Simple reflection `s_i`, with `i` counted from 1.
    pub fn simple(&self, i: usize) -> Result<WeylElt> {
        if i == 0 || i > self.rank {
            return Err(Error::NotSimple {
                index: i,
                rank: self.rank,
            });
        }
        Ok(self.elt(self.right[i - 1] as usize))
    }

    pub fn owns(&self, x: WeylElt) -> bool {
        x.group == self.id
    }

    pub(crate) fn check(&self, x: WeylElt) -> Result<usize> {
        if self.owns(x) {
            Ok(x.index())
        } else {
            Err(Error::MixedGroups)
        }
    }

    pub fn length(&self, x: WeylElt) -> usize {
        self.length[x.index()] as usize
    }

    pub fn longest_length(&self) -> usize {
        self.length[self.w0 as usize] as usize
    }

    pub fn multiply(&self, x: WeylElt, y: WeylElt) -> Result<WeylElt> {
        let (x, y) = (self.check(x)?, self.check(y)?);
        Ok(self.elt(self.mul_idx(x, y)))
    }

    pub fn inverse(&self, x: WeylElt) -> WeylElt {
        self.elt(self.inverse[x.index()] as usize)
    }

    pub fn bruhat_leq(&self, x: WeylElt, y: WeylElt) -> Result<bool> {
        let (x, y) = (self.check(x)?, self.check(y)?);
        Ok(self.leq_idx(x, y))
    }

    /// Lexicographically least reduced word, letters counted from 1.
    pub fn reduced_word(&self, x: WeylElt) -> Vec<usize> {
        self.words[x.index()]
            .iter()
            .map(|&i| i as usize + 1)
            .collect()
    }

    /// Multiplies out a word of simple reflections (letters counted from 1).
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElt> {
        let mut x = 0usize;
        for &i in word {
            if i == 0 || i > self.rank {
                return Err(Error::NotSimple {
                    index: i,
                    rank: self.rank,
                });
            }
            x = self.rmul_idx(x, i - 1);
        }
        Ok(self.elt(x))
    }

    /// Canonical CLI name: `e` or the reduced word joined by dots.
    pub fn name(&self, x: WeylElt) -> String {
        let word = self.reduced_word(x);
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Parses `e`, `s` (rank one), or dot-separated letters such as `1.2.1`
    /// or `s1.s2`. Non-reduced words are accepted and multiplied out.
    pub fn parse_word(&self, text: &str) -> Result<WeylElt> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "1_W" {
            return Ok(self.identity());
        }
        let mut word = Vec::new();
        for tok in t.split('.') {
            let tok = tok.trim();
            let idx = if tok == "s" && self.rank == 1 {
                1
            } else {
                tok.strip_prefix('s')
                    .unwrap_or(tok)
                    .parse::<usize>()
                    .map_err(|_| Error::MalformedWord(text.to_string()))?
            };
            if idx == 0 || idx > self.rank {
                return Err(Error::MalformedWord(text.to_string()));
            }
            word.push(idx);
        }
        self.from_word(&word)
    }

    /// Right descents as 0-based indices.
    pub fn right_descents(&self, x: WeylElt) -> Vec<usize> {
        let w = x.index();
        (0..self.rank)
            .filter(|&i| self.length[self.rmul_idx(w, i)] < self.length[w])
            .collect()
    }

    /// Left descents as 0-based indices.
    pub fn left_descents(&self, x: WeylElt) -> Vec<usize> {
        let w = x.index();
        (0..self.rank)
            .filter(|&i| self.length[self.lmul_idx(w, i)] < self.length[w])
            .collect()
    }

    /// Bruhat cover relations `(x, y)` with `x < y` and `l(y) = l(x) + 1`.
    pub fn covers(&self) -> Vec<(WeylElt, WeylElt)> {
        let mut out = Vec::new();
        for y in 0..self.order() {
            for x in 0..self.order() {
                if self.length[x] + 1 == self.length[y] && self.leq_idx(x, y) {
                    out.push((self.elt(x), self.elt(y)));
                }
            }
        }
        out
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            cartan_type: self.datum.to_string(),
            order: self.order(),
            longest_length: self.longest_length(),
            longest_word: self.name(self.longest()),
        }
    }

    pub fn export(&self) -> GroupExport {
        GroupExport {
            cartan_type: self.datum.to_string(),
            order: self.order(),
            longest_length: self.longest_length(),
            elements: self
                .elements()
                .map(|x| ElementExport {
                    word: self.name(x),
                    length: self.length(x),
                })
                .collect(),
            covers: self
                .covers()
                .into_iter()
                .map(|(x, y)| (self.name(x), self.name(y)))
                .collect(),
        }
    }

    // index-level helpers used by the algebra modules

    pub(crate) fn id(&self) -> u32 {
        self.id
    }

    pub(crate) fn len_idx(&self, w: usize) -> usize {
        self.length[w] as usize
    }

    pub(crate) fn rmul_idx(&self, w: usize, i: usize) -> usize {
        self.right[w * self.rank + i] as usize
    }

    pub(crate) fn lmul_idx(&self, w: usize, i: usize) -> usize {
        self.left[w * self.rank + i] as usize
    }

    pub(crate) fn inv_idx(&self, w: usize) -> usize {
        self.inverse[w] as usize
    }

    pub(crate) fn word_idx(&self, w: usize) -> &[u8] {
        &self.words[w]
    }

    pub(crate) fn w0_idx(&self) -> usize {
        self.w0 as usize
    }

    pub(crate) fn mul_idx(&self, x: usize, y: usize) -> usize {
        self.words[y]
            .iter()
            .fold(x, |acc, &i| self.rmul_idx(acc, i as usize))
    }

    pub(crate) fn first_right_descent(&self, w: usize) -> usize {
        (0..self.rank)
            .find(|&i| self.length[self.rmul_idx(w, i)] < self.length[w])
            .expect("identity has no descents")
    }

    pub(crate) fn leq_idx(&self, x: usize, y: usize) -> bool {
        if let Some(table) = &self.bruhat {
            return table[y][x / 64] >> (x % 64) & 1 == 1;
        }
        self.leq_by_descent(x, y)
    }

    // lifting property: for ys < y, x <= y iff (xs <= ys if xs < x, else x <= ys)
    fn leq_by_descent(&self, mut x: usize, mut y: usize) -> bool {
        loop {
            let (lx, ly) = (self.length[x], self.length[y]);
            if lx >= ly {
                return x == y;
            }
            let s = self.first_right_descent(y);
            let xs = self.rmul_idx(x, s);
            if self.length[xs] < lx {
                x = xs;
            }
            y = self.rmul_idx(y, s);
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub order: usize,
    pub longest_length: usize,
    pub longest_word: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementExport {
    pub word: String,
    pub length: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupExport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub order: usize,
    pub longest_length: usize,
    pub elements: Vec<ElementExport>,
    pub covers: Vec<(String, String)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(t.parse().unwrap()).unwrap()
    }

    // Independent order oracle: orbit of a strictly dominant vector under the
    // reflection representation on the weight lattice.
    fn orbit_size(t: &str) -> usize {
        let datum: CartanDatum = t.parse().unwrap();
        let a = datum.cartan_matrix();
        let n = datum.rank();
        // vector in fundamental weight coordinates; s_i(lambda) = lambda - lambda_i alpha_i,
        // alpha_i = sum_j a[j][i] omega_j
        let start: Vec<i64> = vec![1; n];
        let mut seen = std::collections::HashSet::from([start.clone()]);
        let mut stack = vec![start];
        while let Some(lam) = stack.pop() {
            for i in 0..n {
                let mut next = lam.clone();
                for j in 0..n {
                    next[j] -= lam[i] * a[j][i];
                }
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn orders_match_orbit_oracle() {
        for (t, order, l0) in [
            ("A1", 2, 1),
            ("A2", 6, 3),
            ("A3", 24, 6),
            ("B2", 8, 4),
            ("C3", 48, 9),
            ("D4", 192, 12),
            ("G2", 12, 6),
            ("F4", 1152, 24),
        ] {
            let w = group(t);
            assert_eq!(w.order(), order, "{t}");
            assert_eq!(orbit_size(t), order, "{t}");
            assert_eq!(w.longest_length(), l0, "{t}");
            assert_eq!(w.longest_length(), w.datum().positive_root_count());
        }
    }

    #[test]
    fn inadmissible_and_cap_errors() {
        assert!(matches!(
            "G3".parse::<CartanDatum>(),
            Err(Error::Inadmissible { .. })
        ));
        assert!(matches!(
            "D3".parse::<CartanDatum>(),
            Err(Error::Inadmissible { .. })
        ));
        assert!(matches!(
            "B1".parse::<CartanDatum>(),
            Err(Error::Inadmissible { .. })
        ));
        assert!(matches!(
            "E6".parse::<CartanDatum>(),
            Err(Error::UnknownType(_))
        ));
        assert!(matches!(
            "A".parse::<CartanDatum>(),
            Err(Error::UnknownType(_))
        ));
        let a8: CartanDatum = "A8".parse().unwrap();
        assert!(matches!(WeylGroup::new(a8), Err(Error::CapExceeded { .. })));
        let a3: CartanDatum = "A3".parse().unwrap();
        assert!(matches!(
            WeylGroup::with_cap(a3, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn multiply_examples() {
        let a1 = group("A1");
        let s = a1.simple(1).unwrap();
        assert_eq!(a1.multiply(s, s).unwrap(), a1.identity());
        let a2 = group("A2");
        let (s1, s2) = (a2.simple(1).unwrap(), a2.simple(2).unwrap());
        for x in a2.elements() {
            assert_eq!(a2.multiply(a2.identity(), x).unwrap(), x);
        }
        assert_eq!(a2.length(a2.multiply(s1, s2).unwrap()), 2);
        assert_eq!(a1.multiply(s, s1), Err(Error::MixedGroups));
    }

    #[test]
    fn reduced_word_examples() {
        let a2 = group("A2");
        assert!(a2.reduced_word(a2.identity()).is_empty());
        assert_eq!(a2.reduced_word(a2.longest()), vec![1, 2, 1]);
        for i in 1..=2 {
            assert_eq!(a2.reduced_word(a2.simple(i).unwrap()), vec![i]);
        }
        assert_eq!(a2.name(a2.longest()), "1.2.1");
        assert_eq!(a2.parse_word("2.1.2").unwrap(), a2.longest());
        assert_eq!(
            a2.parse_word("s1.s2").unwrap(),
            a2.parse_word("1.2").unwrap()
        );
        assert!(a2.parse_word("3").is_err());
        assert!(a2.parse_word("1..2").is_err());
        let a1 = group("A1");
        assert_eq!(a1.parse_word("s").unwrap(), a1.simple(1).unwrap());
    }

    #[test]
    fn reduced_words_multiply_back() {
        for t in ["A3", "B3", "G2", "D4"] {
            let w = group(t);
            for x in w.elements() {
                let word = w.reduced_word(x);
                assert_eq!(word.len(), w.length(x));
                assert_eq!(w.from_word(&word).unwrap(), x);
            }
        }
    }

    #[test]
    fn length_and_longest_element() {
        for t in ["A1", "A3", "B2", "G2", "C3"] {
            let w = group(t);
            let w0 = w.longest();
            let l0 = w.longest_length();
            assert_eq!(w.multiply(w0, w0).unwrap(), w.identity());
            assert_eq!(w.elements().filter(|&x| w.length(x) == 0).count(), 1);
            assert_eq!(w.elements().filter(|&x| w.length(x) == l0).count(), 1);
            for x in w.elements() {
                let w0x = w.multiply(w0, x).unwrap();
                assert_eq!(w.length(w0x), l0 - w.length(x));
                for i in 1..=w.rank() {
                    let s = w.simple(i).unwrap();
                    let sx = w.multiply(s, x).unwrap();
                    assert_eq!(w.length(sx).abs_diff(w.length(x)), 1);
                }
                assert_eq!(w.length(w.inverse(x)), w.length(x));
                assert_eq!(w.multiply(x, w.inverse(x)).unwrap(), w.identity());
            }
        }
    }

    #[test]
    fn associativity_exhaustive_small() {
        let w = group("B2");
        for x in w.elements() {
            for y in w.elements() {
                let xy = w.multiply(x, y).unwrap();
                assert!(w.length(xy) <= w.length(x) + w.length(y));
                for z in w.elements() {
                    let lhs = w.multiply(x, w.multiply(y, z).unwrap()).unwrap();
                    let rhs = w.multiply(xy, z).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    fn is_subword(small: &[usize], big: &[usize]) -> bool {
        let mut it = big.iter();
        small.iter().all(|c| it.any(|b| b == c))
    }

    // x <= y iff some subword of a reduced word of y multiplies to x.
    fn bruhat_by_subwords(w: &WeylGroup, x: WeylElt, y: WeylElt) -> bool {
        let word = w.reduced_word(y);
        let k = word.len();
        (0u32..1 << k).any(|mask| {
            let sub: Vec<usize> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| word[i])
                .collect();
            w.from_word(&sub).unwrap() == x
        })
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for t in ["A2", "A3", "B2", "G2"] {
            let w = group(t);
            for x in w.elements() {
                for y in w.elements() {
                    let fast = w.bruhat_leq(x, y).unwrap();
                    assert_eq!(fast, bruhat_by_subwords(&w, x, y), "{t}");
                    assert_eq!(fast, w.leq_by_descent(x.index(), y.index()));
                    let sub = w.reduced_word(x);
                    let some_word = is_subword(&sub, &w.reduced_word(y));
                    if some_word {
                        assert!(fast);
                    }
                }
            }
        }
        let a2 = group("A2");
        let s1 = a2.simple(1).unwrap();
        let s1s2 = a2.parse_word("1.2").unwrap();
        assert!(a2.bruhat_leq(s1, s1s2).unwrap());
    }

    #[test]
    fn bruhat_is_partial_order_refining_length() {
        let w = group("A3");
        for x in w.elements() {
            assert!(w.bruhat_leq(w.identity(), x).unwrap());
            assert!(w.bruhat_leq(x, w.longest()).unwrap());
            for y in w.elements() {
                let xy = w.bruhat_leq(x, y).unwrap();
                if xy && x != y {
                    assert!(w.length(x) < w.length(y));
                    assert!(!w.bruhat_leq(y, x).unwrap());
                }
                for z in w.elements() {
                    if xy && w.bruhat_leq(y, z).unwrap() {
                        assert!(w.bruhat_leq(x, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn export_lists_covers() {
        let a2 = group("A2");
        let ex = a2.export();
        assert_eq!(ex.order, 6);
        assert_eq!(ex.elements[0].word, "e");
        // A2 Bruhat graph: 2 + 4 + 2 cover edges
        assert_eq!(ex.covers.len(), 8);
    }
}
