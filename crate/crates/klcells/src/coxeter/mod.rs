//! Finite Coxeter systems realised as permutation groups on their root
//! systems.
//!
//! [`CoxeterSystem::build`] constructs the roots exactly, enumerates the group
//! breadth-first by length and stores, for every element, its length, its
//! ShortLex-minimal reduced word, its inverse and the tables of left and
//! right multiplication by generators. Everything downstream works with
//! these tables.

mod cyclotomic;
mod dihedral;
mod matrix;
mod weights;

use std::collections::HashMap;
use std::fmt;

pub use cyclotomic::CyclotomicRing;
pub use dihedral::{DihedralData, TMultiset};
pub use matrix::{CoxeterMatrix, CoxeterType};
pub use weights::WeightFunction;

use crate::error::{Error, Result};

/// Default enumeration limit for [`CoxeterSystem::build`].
pub const DEFAULT_ELEMENT_CAP: usize = 1_200_000;

const ROOT_CAP: usize = 1 << 16;

/// Handle to an element of a [`CoxeterSystem`]. Index 0 is the identity and
/// handles are ordered by length, then by ShortLex reduced word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub struct Element(u32);

impl Element {
    pub const IDENTITY: Element = Element(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Self {
        Element(i as u32)
    }
}

/// A set of generators, as a bitmask over generator indices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSet(pub u64);

impl GeneratorSet {
    pub fn empty() -> Self {
        GeneratorSet(0)
    }

    pub fn full(rank: usize) -> Self {
        GeneratorSet(if rank == 64 { u64::MAX } else { (1u64 << rank) - 1 })
    }

    pub fn singleton(s: usize) -> Self {
        GeneratorSet(1 << s)
    }

    pub fn contains(self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: GeneratorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&s| self.contains(s))
    }
}

impl FromIterator<usize> for GeneratorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut g = GeneratorSet::empty();
        for s in iter {
            g.insert(s);
        }
        g
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// Root system of a Coxeter matrix with exact coordinates.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ring: CyclotomicRing,
    /// Positive roots first, then their negatives in the same order.
    roots: Vec<Vec<Vec<i64>>>,
    /// `actions[s][i]` is the index of `s(root_i)`.
    actions: Vec<Vec<u32>>,
}

impl RootSystem {
    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn ring(&self) -> &CyclotomicRing {
        &self.ring
    }

    /// Coordinates of a root in the basis of simple roots.
    pub fn root(&self, i: usize) -> &[Vec<i64>] {
        &self.roots[i]
    }

    pub fn generator_action(&self, s: usize) -> &[u32] {
        &self.actions[s]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    fn build(matrix: &CoxeterMatrix, element_cap: usize) -> Result<Self> {
        let rank = matrix.rank();
        let (ring, cartan) = matrix.cartan()?;
        let d = ring.dim();
        let reflect = |s: usize, v: &[Vec<i64>]| -> Vec<Vec<i64>> {
            // s(v) = v - <v, alpha_s^vee> alpha_s, <alpha_t, alpha_s^vee> = a_{s t}
            let mut pairing = ring.zero();
            for (t, vt) in v.iter().enumerate() {
                if !CyclotomicRing::is_zero(vt) {
                    pairing = ring.add(&pairing, &ring.mul(vt, &cartan[s][t]));
                }
            }
            let mut out = v.to_vec();
            out[s] = ring.sub(&v[s], &pairing);
            out
        };

        let unit = |s: usize| -> Vec<Vec<i64>> {
            (0..rank)
                .map(|t| if s == t { ring.from_int(1) } else { vec![0; d] })
                .collect()
        };
        let mut positive: Vec<Vec<Vec<i64>>> = (0..rank).map(unit).collect();
        let mut index: HashMap<Vec<Vec<i64>>, usize> =
            positive.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut head = 0;
        while head < positive.len() {
            for s in 0..rank {
                let image = reflect(s, &positive[head]);
                if root_sign(&ring, &image) > 0 && !index.contains_key(&image) {
                    index.insert(image.clone(), positive.len());
                    positive.push(image);
                    // N positive roots force |W| > N
                    if positive.len() > ROOT_CAP.min(element_cap) {
                        return Err(Error::GroupTooLarge { cap: element_cap });
                    }
                }
            }
            head += 1;
        }
        let n = positive.len();
        let mut roots = positive.clone();
        for r in &positive {
            let neg: Vec<Vec<i64>> = r.iter().map(|c| c.iter().map(|x| -x).collect()).collect();
            index.insert(neg.clone(), roots.len());
            roots.push(neg);
        }
        let mut actions = vec![vec![0u32; 2 * n]; rank];
        for (s, action) in actions.iter_mut().enumerate() {
            for (i, r) in roots.iter().enumerate() {
                let image = reflect(s, r);
                let j = *index
                    .get(&image)
                    .ok_or_else(|| Error::InvalidMatrix("root system is not closed under reflections".into()))?;
                action[i] = j as u32;
            }
        }
        Ok(Self { ring, roots, actions })
    }
}

fn root_sign(ring: &CyclotomicRing, v: &[Vec<i64>]) -> i32 {
    v.iter().map(|c| ring.sign(c)).find(|&x| x != 0).unwrap_or(0)
}

/// A finite Coxeter group with all elements enumerated.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    roots: RootSystem,
    lengths: Vec<u16>,
    right: Vec<u32>,
    left: Vec<u32>,
    inverses: Vec<u32>,
    right_descents: Vec<u64>,
    left_descents: Vec<u64>,
    words: Vec<Vec<u8>>,
}

impl CoxeterSystem {
    /// Builds the group with the default element cap.
    pub fn new(matrix: CoxeterMatrix) -> Result<Self> {
        Self::build(matrix, DEFAULT_ELEMENT_CAP)
    }

    pub fn from_type(ty: CoxeterType) -> Result<Self> {
        Self::new(CoxeterMatrix::from_type(ty)?)
    }

    /// Realises the root system exactly and enumerates the group
    /// breadth-first, failing once more than `element_cap` elements appear.
    pub fn build(matrix: CoxeterMatrix, element_cap: usize) -> Result<Self> {
        let rank = matrix.rank();
        if rank > 64 {
            return Err(Error::InvalidMatrix("rank above 64 is not supported".into()));
        }
        let roots = RootSystem::build(&matrix, element_cap)?;
        let nroots = roots.len();

        // an element is determined by the images of the simple roots
        let key_of = |perm: &[u32]| -> Vec<u32> { perm[..rank].to_vec() };

        let identity: Vec<u32> = (0..nroots as u32).collect();
        let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
        ids.insert(key_of(&identity), 0);
        let mut lengths: Vec<u16> = vec![0];
        let mut right: Vec<u32> = Vec::new();
        let mut left: Vec<u32> = Vec::new();

        let mut layer: Vec<(u32, Vec<u32>)> = vec![(0, identity)];
        let mut len = 0u16;
        while !layer.is_empty() {
            let mut next: Vec<(u32, Vec<u32>)> = Vec::new();
            for (w, perm) in &layer {
                let w = *w as usize;
                if right.len() < (w + 1) * rank {
                    right.resize((w + 1) * rank, u32::MAX);
                    left.resize((w + 1) * rank, u32::MAX);
                }
                for s in 0..rank {
                    let act = roots.generator_action(s);
                    let ws: Vec<u32> = act.iter().map(|&i| perm[i as usize]).collect();
                    let sw: Vec<u32> = perm.iter().map(|&i| act[i as usize]).collect();
                    for (product, table) in [(ws, &mut right), (sw, &mut left)] {
                        let key = key_of(&product);
                        let id = match ids.get(&key) {
                            Some(&id) => id,
                            None => {
                                let id = lengths.len() as u32;
                                if lengths.len() >= element_cap {
                                    return Err(Error::GroupTooLarge { cap: element_cap });
                                }
                                ids.insert(key, id);
                                lengths.push(len + 1);
                                next.push((id, product));
                                id
                            }
                        };
                        table[w * rank + s] = id;
                    }
                }
            }
            layer = next;
            len += 1;
        }
        drop(ids);
        let size = lengths.len();
        debug_assert!(right.iter().all(|&x| x != u32::MAX));

        // ShortLex words: first letter is the smallest left descent
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); size];
        let mut by_length: Vec<usize> = (0..size).collect();
        by_length.sort_by_key(|&w| lengths[w]);
        for &w in &by_length {
            if w == 0 {
                continue;
            }
            let s = (0..rank)
                .find(|&s| lengths[left[w * rank + s] as usize] < lengths[w])
                .expect("non-identity element without left descent");
            let rest = &words[left[w * rank + s] as usize];
            let mut word = Vec::with_capacity(rest.len() + 1);
            word.push(s as u8);
            word.extend_from_slice(rest);
            words[w] = word;
        }

        // renumber by (length, word)
        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by(|&a, &b| (lengths[a], &words[a]).cmp(&(lengths[b], &words[b])));
        let mut new_id = vec![0u32; size];
        for (new, &old) in order.iter().enumerate() {
            new_id[old] = new as u32;
        }
        let remap = |table: &[u32]| -> Vec<u32> {
            let mut out = vec![0u32; table.len()];
            for (new, &old) in order.iter().enumerate() {
                for s in 0..rank {
                    out[new * rank + s] = new_id[table[old * rank + s] as usize];
                }
            }
            out
        };
        let right = remap(&right);
        let left = remap(&left);
        let lengths: Vec<u16> = order.iter().map(|&o| lengths[o]).collect();
        let mut words_sorted = Vec::with_capacity(size);
        for &o in &order {
            words_sorted.push(std::mem::take(&mut words[o]));
        }
        let words = words_sorted;

        let descents = |table: &[u32]| -> Vec<u64> {
            (0..size)
                .map(|w| {
                    (0..rank)
                        .filter(|&s| lengths[table[w * rank + s] as usize] < lengths[w])
                        .fold(0u64, |acc, s| acc | 1 << s)
                })
                .collect()
        };
        let right_descents = descents(&right);
        let left_descents = descents(&left);

        // w = s (sw)  =>  w^-1 = (sw)^-1 s
        let mut inverses = vec![0u32; size];
        for w in 1..size {
            let s = words[w][0] as usize;
            let sw = left[w * rank + s] as usize;
            inverses[w] = right[inverses[sw] as usize * rank + s];
        }

        Ok(Self {
            matrix,
            roots,
            lengths,
            right,
            left,
            inverses,
            right_descents,
            left_descents,
            words,
        })
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn size(&self) -> usize {
        self.lengths.len()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.num_positive()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size()).map(Element::from_index)
    }

    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    pub fn generator(&self, s: usize) -> Element {
        self.right_mul(Element::IDENTITY, s)
    }

    pub fn generators(&self) -> GeneratorSet {
        GeneratorSet::full(self.rank())
    }

    pub fn longest_element(&self) -> Element {
        Element::from_index(self.size() - 1)
    }

    pub fn length(&self, w: Element) -> usize {
        self.lengths[w.index()] as usize
    }

    /// `ws` for a generator `s`.
    pub fn right_mul(&self, w: Element, s: usize) -> Element {
        Element(self.right[w.index() * self.rank() + s])
    }

    /// `sw` for a generator `s`.
    pub fn left_mul(&self, s: usize, w: Element) -> Element {
        Element(self.left[w.index() * self.rank() + s])
    }

    pub fn inverse(&self, w: Element) -> Element {
        Element(self.inverses[w.index()])
    }

    /// `x * y`, following the reduced word of `y`.
    pub fn multiply(&self, x: Element, y: Element) -> Element {
        self.check(x);
        self.check(y);
        self.word(y).iter().fold(x, |acc, &s| self.right_mul(acc, s as usize))
    }

    /// Evaluates a word in the generators (not necessarily reduced).
    pub fn from_word(&self, word: &[usize]) -> Result<Element> {
        word.iter().try_fold(Element::IDENTITY, |acc, &s| {
            if s >= self.rank() {
                Err(Error::GeneratorOutOfRange(s))
            } else {
                Ok(self.right_mul(acc, s))
            }
        })
    }

    /// ShortLex-minimal reduced word.
    pub fn word(&self, w: Element) -> &[u8] {
        &self.words[w.index()]
    }

    pub fn right_descents(&self, w: Element) -> GeneratorSet {
        GeneratorSet(self.right_descents[w.index()])
    }

    pub fn left_descents(&self, w: Element) -> GeneratorSet {
        GeneratorSet(self.left_descents[w.index()])
    }

    pub fn is_right_descent(&self, w: Element, s: usize) -> bool {
        self.right_descents[w.index()] >> s & 1 == 1
    }

    pub fn is_left_descent(&self, s: usize, w: Element) -> bool {
        self.left_descents[w.index()] >> s & 1 == 1
    }

    fn check(&self, w: Element) {
        assert!(w.index() < self.size(), "element {w:?} does not belong to this system");
    }

    /// Bruhat order via the lifting property: for `s` in `R(y)`,
    /// `x <= y` iff `xs <= ys` (when `xs < x`) or `x <= ys` (otherwise).
    pub fn bruhat_leq(&self, x: Element, y: Element) -> bool {
        self.check(x);
        self.check(y);
        let (mut x, mut y) = (x, y);
        loop {
            if x == y || x == Element::IDENTITY {
                return true;
            }
            if self.length(x) >= self.length(y) {
                return false;
            }
            let s = self.right_descents(y).0.trailing_zeros() as usize;
            if self.is_right_descent(x, s) {
                x = self.right_mul(x, s);
            }
            y = self.right_mul(y, s);
        }
    }

    /// Writes `w = x u` with `u` in the parabolic subgroup `W_I` and `x` the
    /// distinguished (minimal) left coset representative.
    pub fn coset_decompose(&self, w: Element, subset: GeneratorSet) -> (Element, Element) {
        let mut x = w;
        let mut u = Element::IDENTITY;
        while let Some(s) = subset.iter().find(|&s| self.is_right_descent(x, s)) {
            x = self.right_mul(x, s);
            u = self.left_mul(s, u);
        }
        (x, u)
    }

    /// Permutation of root indices induced by `w`.
    pub fn root_permutation(&self, w: Element) -> Vec<u32> {
        let mut perm: Vec<u32> = (0..self.roots.len() as u32).collect();
        for &s in self.word(w) {
            let act = self.roots.generator_action(s as usize);
            perm = act.iter().map(|&i| perm[i as usize]).collect();
        }
        perm
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, w: Element) -> usize {
        let npos = self.roots.num_positive();
        self.root_permutation(w)[..npos]
            .iter()
            .filter(|&&i| i as usize >= npos)
            .count()
    }

    /// The parabolic subgroup `W_I` as a Coxeter system of its own, with the
    /// embedding of its elements into `W`.
    pub fn parabolic(&self, subset: GeneratorSet) -> Result<Parabolic> {
        let gens: Vec<usize> = subset.iter().filter(|&s| s < self.rank()).collect();
        if gens.len() != subset.len() {
            return Err(Error::GeneratorOutOfRange(subset.iter().last().unwrap_or(0)));
        }
        let sub_matrix = self.matrix.restrict(&gens);
        let system = if gens.is_empty() {
            CoxeterSystem::trivial()
        } else {
            CoxeterSystem::new(sub_matrix)?
        };
        let embedding: Vec<Element> = system
            .elements()
            .map(|u| {
                system
                    .word(u)
                    .iter()
                    .fold(Element::IDENTITY, |acc, &s| self.right_mul(acc, gens[s as usize]))
            })
            .collect();
        let restriction = embedding
            .iter()
            .enumerate()
            .map(|(i, &w)| (w, Element::from_index(i)))
            .collect();
        Ok(Parabolic {
            gens,
            system,
            embedding,
            restriction,
        })
    }

    /// The rank-zero group.
    pub fn trivial() -> Self {
        Self {
            matrix: CoxeterMatrix::new(vec![]).expect("empty matrix"),
            roots: RootSystem {
                ring: CyclotomicRing::new(1),
                roots: vec![],
                actions: vec![],
            },
            lengths: vec![0],
            right: vec![],
            left: vec![],
            inverses: vec![0],
            right_descents: vec![0],
            left_descents: vec![0],
            words: vec![vec![]],
        }
    }

    /// Renders `w` as a word of generator labels. The identity is written
    /// as [`identity_token`].
    pub fn format_word(&self, w: Element, labels: &[String]) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return identity_token(labels).into();
        }
        let single = labels.iter().all(|l| l.chars().count() == 1);
        let parts: Vec<&str> = word.iter().map(|&s| labels[s as usize].as_str()).collect();
        if single {
            parts.concat()
        } else {
            parts.join(".")
        }
    }

    /// Parses a word written with `labels` (concatenated single-character
    /// labels, or `.`-separated labels).
    pub fn parse_word(&self, text: &str, labels: &[String]) -> Result<Element> {
        let text = text.trim();
        if text == identity_token(labels) || text.is_empty() {
            return Ok(Element::IDENTITY);
        }
        let lookup = |tok: &str| -> Result<usize> {
            labels
                .iter()
                .position(|l| l == tok)
                .ok_or_else(|| Error::Parse(crate::error::ParseError::new(format!("unknown generator {tok:?}"))))
        };
        let letters: Vec<usize> = if text.contains('.') {
            text.split('.').map(lookup).collect::<Result<_>>()?
        } else if labels.iter().all(|l| l.chars().count() == 1) {
            text.chars().map(|c| lookup(&c.to_string())).collect::<Result<_>>()?
        } else {
            vec![lookup(text)?]
        };
        self.from_word(&letters)
    }

    pub fn default_labels(&self) -> Vec<String> {
        (0..self.rank()).map(|s| s.to_string()).collect()
    }
}

/// How the identity is written in words over `labels`: `1`, or `e` when
/// some generator is itself labelled `1`.
pub fn identity_token(labels: &[String]) -> &'static str {
    if labels.iter().any(|l| l == "1") {
        "e"
    } else {
        "1"
    }
}

/// A standard parabolic subgroup `W_I` realised as its own system.
#[derive(Debug, Clone)]
pub struct Parabolic {
    /// Ambient generator indices, in increasing order; sub-generator `i`
    /// corresponds to `gens[i]`.
    pub gens: Vec<usize>,
    pub system: CoxeterSystem,
    embedding: Vec<Element>,
    restriction: HashMap<Element, Element>,
}

impl Parabolic {
    pub fn subset(&self) -> GeneratorSet {
        self.gens.iter().copied().collect()
    }

    /// Sub-system element to ambient element.
    pub fn embed(&self, u: Element) -> Element {
        self.embedding[u.index()]
    }

    /// Ambient element of `W_I` to sub-system element.
    pub fn restrict(&self, w: Element) -> Option<Element> {
        self.restriction.get(&w).copied()
    }

    pub fn ambient_elements(&self) -> &[Element] {
        &self.embedding
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(ty: CoxeterType) -> CoxeterSystem {
        CoxeterSystem::from_type(ty).unwrap()
    }

    #[test]
    fn small_orders() {
        let a2 = sys(CoxeterType::A(2));
        assert_eq!(a2.size(), 6);
        assert_eq!(a2.length(a2.longest_element()), 3);
        let b2 = sys(CoxeterType::B(2));
        assert_eq!(b2.size(), 8);
        assert_eq!(b2.length(b2.longest_element()), 4);
    }

    #[test]
    fn h3_order_and_roots() {
        let h3 = sys(CoxeterType::H3);
        assert_eq!(h3.size(), 2 * 6 * 10);
        assert_eq!(h3.num_positive_roots(), 15);
        assert_eq!(h3.length(h3.longest_element()), 15);
    }

    #[test]
    fn multiplication_examples() {
        let a2 = sys(CoxeterType::A(2));
        let (s, t) = (a2.generator(0), a2.generator(1));
        let st = a2.multiply(s, t);
        assert_eq!(a2.word(st), &[0, 1]);
        assert_eq!(a2.length(st), 2);
        let ts = a2.multiply(t, s);
        assert_eq!(a2.inverse(st), ts);

        let b2 = sys(CoxeterType::B(2));
        let sts = b2.from_word(&[0, 1, 0]).unwrap();
        assert_eq!(b2.multiply(sts, sts), Element::IDENTITY);
    }

    #[test]
    fn descent_examples() {
        let a2 = sys(CoxeterType::A(2));
        assert!(a2.right_descents(Element::IDENTITY).is_empty());
        assert_eq!(a2.right_descents(a2.longest_element()), GeneratorSet::full(2));
        let ts = a2.from_word(&[1, 0]).unwrap();
        assert_eq!(a2.right_descents(ts), GeneratorSet::singleton(0));
        assert_eq!(a2.left_descents(ts), GeneratorSet::singleton(1));
    }

    #[test]
    fn bruhat_examples() {
        let a2 = sys(CoxeterType::A(2));
        let s = a2.generator(0);
        let sts = a2.from_word(&[0, 1, 0]).unwrap();
        let st = a2.from_word(&[0, 1]).unwrap();
        let ts = a2.from_word(&[1, 0]).unwrap();
        assert!(a2.elements().all(|w| a2.bruhat_leq(Element::IDENTITY, w)));
        assert!(a2.bruhat_leq(s, sts));
        assert!(!a2.bruhat_leq(st, ts));
        assert!(!a2.bruhat_leq(ts, st));
    }

    #[test]
    fn coset_examples() {
        let a2 = sys(CoxeterType::A(2));
        let s_only = GeneratorSet::singleton(0);
        for w in a2.elements() {
            assert_eq!(a2.coset_decompose(w, GeneratorSet::full(2)), (Element::IDENTITY, w));
        }
        assert_eq!(
            a2.coset_decompose(Element::IDENTITY, s_only),
            (Element::IDENTITY, Element::IDENTITY)
        );
        let ts = a2.from_word(&[1, 0]).unwrap();
        assert_eq!(a2.coset_decompose(ts, s_only), (a2.generator(1), a2.generator(0)));
    }

    #[test]
    fn parabolic_embedding() {
        let b3 = sys(CoxeterType::B(3));
        let par = b3.parabolic(GeneratorSet(0b110)).unwrap();
        assert_eq!(par.system.size(), 6);
        for u in par.system.elements() {
            let w = par.embed(u);
            assert_eq!(b3.length(w), par.system.length(u));
            assert_eq!(par.restrict(w), Some(u));
        }
        let trivial = b3.parabolic(GeneratorSet::empty()).unwrap();
        assert_eq!(trivial.system.size(), 1);
    }

    #[test]
    fn words_round_trip() {
        let b3 = sys(CoxeterType::B(3));
        let labels: Vec<String> = ["b", "a1", "a2"].iter().map(|s| s.to_string()).collect();
        for w in b3.elements() {
            let text = b3.format_word(w, &labels);
            assert_eq!(b3.parse_word(&text, &labels).unwrap(), w);
        }
        let labels = b3.default_labels();
        assert_eq!(b3.format_word(b3.from_word(&[2, 1]).unwrap(), &labels), "21");
    }

    #[test]
    fn cap_is_enforced() {
        // affine A2 is infinite
        let m = CoxeterMatrix::new(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert!(matches!(
            CoxeterSystem::build(m, 5000),
            Err(Error::GroupTooLarge { .. })
        ));
    }
}
