//! Generalised τ-invariants.
//!
//! A labelling `ρ` whose fibres are unions of left cells is refined along a
//! family of left cellular maps until it stabilises: `x ≈_n y` iff
//! `x ≈_{n-1} y` and `δ^L(x) ≈_{n-1} δ^L(y)` for every map. The stable
//! classes are the left Vogan `(Δ, ρ)`-classes. Vogan's original relation,
//! built from the multivalued operators `T_{s,t}` for `m_{st} ∈ {3, 4}`, is
//! available as [`classic_tau_classes`].

use std::collections::HashMap;
use std::hash::Hash;

use rayon::prelude::*;

use crate::cellmaps::{delta2_family, left_extend, LeftExtension};
use crate::cells::{CellPartition, CellSet};
use crate::coxeter::{CoxeterSystem, Element};
use crate::error::{Error, Result};
use crate::hecke::KLTable;

/// A labelling of `W`; labels are bit sets over some list of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoMap {
    pub name: String,
    /// `elements[i]` is the meaning of bit `i` in a label.
    pub elements: Vec<Element>,
    labels: Vec<u64>,
}

impl RhoMap {
    pub fn label(&self, w: Element) -> u64 {
        self.labels[w.index()]
    }

    /// Label as the list of elements it contains.
    pub fn label_set(&self, w: Element) -> Vec<Element> {
        let l = self.label(w);
        self.elements
            .iter()
            .enumerate()
            .filter(|(i, _)| l >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    }

    /// Every left cell lies inside a single fibre.
    pub fn fibers_are_unions_of(&self, left: &CellPartition) -> bool {
        left.blocks()
            .iter()
            .all(|b| b.iter().all(|&w| self.label(w) == self.label(b[0])))
    }

    fn from_elements(system: &CoxeterSystem, name: &str, elements: Vec<Element>) -> Self {
        assert!(elements.len() <= 64);
        let labels = system
            .elements()
            .map(|w| {
                elements
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| system.length(system.multiply(w, x)) < system.length(w))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Self {
            name: name.into(),
            elements,
            labels,
        }
    }
}

/// `ρ = R`, the right descent set.
pub fn rho_descent(table: &KLTable) -> RhoMap {
    let sys = table.system();
    RhoMap::from_elements(sys, "descent", (0..sys.rank()).map(|s| sys.generator(s)).collect())
}

/// `S^p = S ∪ {sts : p_s < p_t}`, without repetitions.
pub fn enhanced_generators(table: &KLTable) -> Vec<Element> {
    let sys = table.system();
    let p = table.weights();
    let mut out: Vec<Element> = (0..sys.rank()).map(|s| sys.generator(s)).collect();
    for s in 0..sys.rank() {
        for t in 0..sys.rank() {
            if p.get(s) < p.get(t) {
                let sts = sys.from_word(&[s, t, s]).expect("generators in range");
                if !out.contains(&sts) {
                    out.push(sts);
                }
            }
        }
    }
    out
}

/// `ρ = R^p`: `x ∈ S^p` with `ℓ(wx) < ℓ(w)`.
pub fn rho_enhanced(table: &KLTable) -> RhoMap {
    RhoMap::from_elements(table.system(), "enhanced", enhanced_generators(table))
}

/// The stable refinement and the number of rounds it took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoganPartition {
    class_of: Vec<u32>,
    num_classes: usize,
    /// First `n` with `≈_n = ≈_{n+1}`.
    pub n0: usize,
}

impl VoganPartition {
    pub fn class_of(&self, w: Element) -> usize {
        self.class_of[w.index()] as usize
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    /// Classes by increasing id; each class sorted.
    pub fn classes(&self) -> Vec<Vec<Element>> {
        let mut out = vec![Vec::new(); self.num_classes];
        for (w, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(Element::from_index(w));
        }
        out
    }

    pub fn as_sets(&self) -> std::collections::BTreeSet<Vec<Element>> {
        self.classes().into_iter().collect()
    }
}

/// Renumbers a labelling so that class ids follow the smallest element.
fn canonical_ids<K: Eq + Hash>(keys: Vec<K>) -> (Vec<u32>, usize) {
    let mut ids: HashMap<K, u32> = HashMap::new();
    let mut out = Vec::with_capacity(keys.len());
    for k in keys {
        let next = ids.len() as u32;
        out.push(*ids.entry(k).or_insert(next));
    }
    (out, ids.len())
}

/// Moore-style refinement driven by a signature function.
fn refine<I, K, F>(initial: Vec<I>, signature: F) -> VoganPartition
where
    I: Eq + Hash,
    K: Eq + Hash + Send,
    F: Fn(&[u32], usize) -> K + Sync,
{
    let (mut class_of, mut num_classes) = canonical_ids(initial);
    let mut n0 = 0;
    loop {
        let keys: Vec<K> = (0..class_of.len())
            .into_par_iter()
            .map(|w| signature(&class_of, w))
            .collect();
        let (next, count) = canonical_ids(keys);
        if count == num_classes {
            return VoganPartition {
                class_of,
                num_classes,
                n0,
            };
        }
        class_of = next;
        num_classes = count;
        n0 += 1;
    }
}

/// Left Vogan `(Δ, ρ)`-classes.
pub fn tau_refine(deltas: &[LeftExtension], rho: &RhoMap) -> VoganPartition {
    refine(rho.labels.clone(), |class_of, w| {
        let mut sig = Vec::with_capacity(deltas.len() + 1);
        sig.push(class_of[w]);
        sig.extend(deltas.iter().map(|d| class_of[d.as_slice()[w].index()]));
        sig
    })
}

/// Vogan's `≈_n` with the operators `T_{s,t}`, `m_{st} ∈ {3, 4}`; equal
/// parameters only.
pub fn classic_tau_classes(table: &KLTable) -> Result<VoganPartition> {
    if !table.weights().is_equal_parameter() {
        return Err(Error::InvalidWeights(
            "the classical tau-invariant needs equal parameters".into(),
        ));
    }
    let sys = table.system();
    let mut pairs = Vec::new();
    for s in 0..sys.rank() {
        for t in s + 1..sys.rank() {
            if matches!(sys.matrix().get(s, t), 3 | 4) {
                pairs.push((s, t));
            }
        }
    }
    // T_{s,t}(w) for every w in D_R(s,t), per pair
    let ops: Vec<Vec<Option<[Element; 2]>>> = pairs
        .iter()
        .map(|&(s, t)| sys.elements().map(|w| sys.t_operator(w, s, t).ok()).collect())
        .collect();
    let initial = sys.elements().map(|w| sys.right_descents(w)).collect();
    Ok(refine(initial, |class_of, w| {
        let mut sig = vec![class_of[w]];
        for op in &ops {
            if let Some([a, b]) = op[w] {
                let (x, y) = (class_of[a.index()], class_of[b.index()]);
                sig.push(x.min(y));
                sig.push(x.max(y));
            }
        }
        sig
    }))
}

/// Every left cell lies inside one class.
pub fn coarseness_check(partition: &VoganPartition, left: &CellPartition) -> bool {
    left.blocks()
        .iter()
        .all(|b| b.iter().all(|&w| partition.class_of(w) == partition.class_of(b[0])))
}

/// Outcome of comparing left cells with two-sided cells ∧ Vogan classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub holds: bool,
    pub num_left_cells: usize,
    pub num_two_sided_cells: usize,
    pub num_vogan_classes: usize,
    pub num_meet_classes: usize,
    pub n0: usize,
    /// Left cells are inside Vogan classes, as they must be.
    pub coarse: bool,
    /// Pairs `(x, y)` in the same meet class but different left cells.
    pub witnesses: Vec<(Element, Element)>,
}

/// Left Vogan `(Δ₂, R^p)`-classes of the table's group.
pub fn delta2_vogan_classes(table: &KLTable) -> Result<VoganPartition> {
    let sys = table.system();
    let exts: Vec<LeftExtension> = delta2_family(sys, table.weights())?
        .iter()
        .map(|pair| left_extend(pair, sys))
        .collect::<Result<_>>()?;
    Ok(tau_refine(&exts, &rho_enhanced(table)))
}

/// `x ~_L y` iff `x ~_LR y` and `x`, `y` have the same `τ^{Δ₂,R^p}`.
pub fn verify_conjecture(table: &KLTable) -> Result<ConjectureReport> {
    verify_conjecture_with(table, &CellSet::compute(table))
}

pub fn verify_conjecture_with(table: &KLTable, cells: &CellSet) -> Result<ConjectureReport> {
    let vogan = delta2_vogan_classes(table)?;
    let sys = table.system();
    let (meet, num_meet) = canonical_ids(
        sys.elements()
            .map(|w| (cells.two_sided.block_of(w), vogan.class_of(w)))
            .collect(),
    );
    let mut first_left_of_meet: HashMap<u32, Element> = HashMap::new();
    let mut witnesses = Vec::new();
    for block in cells.left.blocks() {
        let rep = block[0];
        let m = meet[rep.index()];
        match first_left_of_meet.get(&m) {
            Some(&other) => witnesses.push((other, rep)),
            None => {
                first_left_of_meet.insert(m, rep);
            }
        }
    }
    let coarse = coarseness_check(&vogan, &cells.left);
    Ok(ConjectureReport {
        holds: coarse && witnesses.is_empty() && num_meet == cells.left.num_blocks(),
        num_left_cells: cells.left.num_blocks(),
        num_two_sided_cells: cells.two_sided.num_blocks(),
        num_vogan_classes: vogan.num_classes(),
        num_meet_classes: num_meet,
        n0: vogan.n0,
        coarse,
        witnesses,
    })
}
