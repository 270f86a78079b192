//! Left, right and two-sided cells as strongly connected components of the
//! Kazhdan–Lusztig preorder graphs, together with cell modules `[Γ]_A`.
//!
//! The left graph has an edge `y -> x` whenever `h_{s,y,x} != 0` for some
//! generator `s`, so `x <=_L y` iff `x` is reachable from `y`. Right edges
//! are the left edges transported by inversion, and the two-sided graph is
//! the union of both.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::coxeter::{Element, GeneratorSet};
use crate::error::{Error, Result};
use crate::hecke::KLTable;
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellKind {
    Left,
    Right,
    TwoSided,
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellKind::Left => "left",
            CellKind::Right => "right",
            CellKind::TwoSided => "two-sided",
        })
    }
}

/// A partition of `W` into cells with the induced order on blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPartition {
    kind: CellKind,
    blocks: Vec<Vec<Element>>,
    block_of: Vec<u32>,
    /// `below[b]`: blocks reached from `b` by one edge (strictly lower).
    below: Vec<Vec<u32>>,
}

impl CellPartition {
    /// Condenses a directed graph on `W` into its SCCs. Blocks are numbered
    /// by their smallest element.
    pub fn from_graph(kind: CellKind, adj: &[Vec<Element>]) -> Self {
        let comp = tarjan_scc(adj);
        let n = adj.len();
        let ncomp = comp.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut first = vec![u32::MAX; ncomp];
        for w in 0..n {
            let c = comp[w] as usize;
            first[c] = first[c].min(w as u32);
        }
        let mut order: Vec<usize> = (0..ncomp).collect();
        order.sort_by_key(|&c| first[c]);
        let mut relabel = vec![0u32; ncomp];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new as u32;
        }
        let block_of: Vec<u32> = comp.iter().map(|&c| relabel[c as usize]).collect();
        let mut blocks = vec![Vec::new(); ncomp];
        for w in 0..n {
            blocks[block_of[w] as usize].push(Element::from_index(w));
        }
        let mut below: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); ncomp];
        for (y, targets) in adj.iter().enumerate() {
            for x in targets {
                let (a, b) = (block_of[y], block_of[x.index()]);
                if a != b {
                    below[a as usize].insert(b);
                }
            }
        }
        Self {
            kind,
            blocks,
            block_of,
            below: below.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    pub fn kind(&self) -> CellKind {
        self.kind
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<Element>] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &[Element] {
        &self.blocks[b]
    }

    pub fn block_of(&self, w: Element) -> usize {
        self.block_of[w.index()] as usize
    }

    pub fn same_block(&self, x: Element, y: Element) -> bool {
        self.block_of[x.index()] == self.block_of[y.index()]
    }

    /// Cover-ish edges of the condensation (`b -> c` means `c < b`).
    pub fn order_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.below
            .iter()
            .enumerate()
            .flat_map(|(b, cs)| cs.iter().map(move |&c| (b, c as usize)))
    }

    /// Blocks `c` with `c <= b`, including `b`.
    pub fn down_set(&self, b: usize) -> Vec<bool> {
        let mut seen = vec![false; self.num_blocks()];
        let mut stack = vec![b];
        seen[b] = true;
        while let Some(c) = stack.pop() {
            for &d in &self.below[c] {
                if !seen[d as usize] {
                    seen[d as usize] = true;
                    stack.push(d as usize);
                }
            }
        }
        seen
    }

    /// Block order: `a <= b` iff `a` is reachable from `b`.
    pub fn block_leq(&self, a: usize, b: usize) -> bool {
        self.down_set(b)[a]
    }

    /// Preorder on elements.
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.block_leq(self.block_of(x), self.block_of(y))
    }

    /// Blocks as sorted element sets, sorted; convenient for comparisons.
    pub fn as_sets(&self) -> BTreeSet<Vec<Element>> {
        self.blocks.iter().cloned().collect()
    }
}

/// Iterative Tarjan; returns a component id per vertex.
fn tarjan_scc(adj: &[Vec<Element>]) -> Vec<u32> {
    let n = adj.len();
    const UNSEEN: u32 = u32::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut next_index = 0u32;
    let mut next_comp = 0u32;
    // (vertex, position in its adjacency list)
    let mut call: Vec<(u32, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root as u32, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root as u32);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let v = v as usize;
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
                let w = w.index();
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w as u32);
                    on_stack[w] = true;
                    call.push((w as u32, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    let p = parent as usize;
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack") as usize;
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

/// Adjacency of `<-_L`: `y -> x` for every `x` with `h_{s,y,x} != 0`.
pub fn left_preorder_edges(table: &KLTable) -> Vec<Vec<Element>> {
    let sys = table.system();
    sys.elements()
        .map(|y| {
            let mut targets: Vec<Element> = (0..sys.rank())
                .flat_map(|s| table.h_row(s, y).into_iter().map(|(x, _)| x))
                .collect();
            targets.sort();
            targets.dedup();
            targets
        })
        .collect()
}

fn right_edges_from_left(table: &KLTable, left: &[Vec<Element>]) -> Vec<Vec<Element>> {
    let sys = table.system();
    let mut adj = vec![Vec::new(); left.len()];
    for (y, targets) in left.iter().enumerate() {
        let yi = sys.inverse(Element::from_index(y));
        adj[yi.index()] = targets.iter().map(|&x| sys.inverse(x)).collect();
    }
    adj
}

pub fn cells(table: &KLTable, kind: CellKind) -> CellPartition {
    let left = left_preorder_edges(table);
    match kind {
        CellKind::Left => CellPartition::from_graph(kind, &left),
        CellKind::Right => CellPartition::from_graph(kind, &right_edges_from_left(table, &left)),
        CellKind::TwoSided => {
            let right = right_edges_from_left(table, &left);
            let union: Vec<Vec<Element>> = left
                .into_iter()
                .zip(right)
                .map(|(mut a, b)| {
                    a.extend(b);
                    a.sort();
                    a.dedup();
                    a
                })
                .collect();
            CellPartition::from_graph(kind, &union)
        }
    }
}

/// Left, right and two-sided cells of one table, sharing the edge scan.
#[derive(Debug, Clone)]
pub struct CellSet {
    pub left: CellPartition,
    pub right: CellPartition,
    pub two_sided: CellPartition,
}

impl CellSet {
    pub fn compute(table: &KLTable) -> Self {
        let left_edges = left_preorder_edges(table);
        let right_edges = right_edges_from_left(table, &left_edges);
        let union: Vec<Vec<Element>> = left_edges
            .iter()
            .zip(&right_edges)
            .map(|(a, b)| {
                let mut u = a.clone();
                u.extend_from_slice(b);
                u.sort();
                u.dedup();
                u
            })
            .collect();
        Self {
            left: CellPartition::from_graph(CellKind::Left, &left_edges),
            right: CellPartition::from_graph(CellKind::Right, &right_edges),
            two_sided: CellPartition::from_graph(CellKind::TwoSided, &union),
        }
    }
}

/// `Γ` is a union of left cells that is convex for `<=_L`.
pub fn is_left_closed(gamma: &[Element], left: &CellPartition) -> Result<bool> {
    if gamma.is_empty() {
        return Err(Error::EmptySet);
    }
    let members: HashSet<Element> = gamma.iter().copied().collect();
    let blocks: BTreeSet<usize> = gamma.iter().map(|&w| left.block_of(w)).collect();
    for &b in &blocks {
        if !left.block(b).iter().all(|w| members.contains(w)) {
            return Ok(false);
        }
    }
    // below[c] for some member block and above some member block => member
    let n = left.num_blocks();
    let mut below_gamma = vec![false; n];
    for &b in &blocks {
        for (c, &r) in left.down_set(b).iter().enumerate() {
            below_gamma[c] |= r;
        }
    }
    for c in 0..n {
        if below_gamma[c] && !blocks.contains(&c) {
            let down = left.down_set(c);
            if blocks.iter().any(|&b| down[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The module `[Γ]_A` for a left-closed `Γ`: for each generator `s`, the
/// matrix of `C'_s` in the basis `(e_x)`, with `matrices[s][i][j]` the
/// coefficient of `e_{basis[i]}` in `C'_s e_{basis[j]}` (column `j` is the
/// image of the `j`th basis vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellModule {
    pub basis: Vec<Element>,
    pub matrices: Vec<Vec<Vec<LaurentPoly>>>,
}

impl CellModule {
    pub fn new(gamma: &[Element], table: &KLTable, left: &CellPartition) -> Result<Self> {
        if !is_left_closed(gamma, left)? {
            return Err(Error::NotLeftClosed);
        }
        let pos: HashMap<Element, usize> = gamma.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let n = gamma.len();
        let rank = table.system().rank();
        let mut matrices = vec![vec![vec![LaurentPoly::zero(); n]; n]; rank];
        for (s, mat) in matrices.iter_mut().enumerate() {
            for (j, &x) in gamma.iter().enumerate() {
                for (y, c) in table.h_row(s, x) {
                    if let Some(&i) = pos.get(&y) {
                        mat[i][j] = c;
                    }
                }
            }
        }
        Ok(Self {
            basis: gamma.to_vec(),
            matrices,
        })
    }

    pub fn entry(&self, s: usize, row: usize, col: usize) -> &LaurentPoly {
        &self.matrices[s][row][col]
    }
}

/// First structure constant that breaks a proposed module isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoMismatch {
    pub generator: usize,
    pub x: Element,
    pub y: Element,
    /// `h_{s,x,y}`.
    pub source: LaurentPoly,
    /// `h_{s,σ(x),σ(y)}`.
    pub target: LaurentPoly,
}

/// Checks `h_{s,x,y} = h_{s,σ(x),σ(y)}` for all generators `s` and all
/// `x, y` in `Γ1`, where `sigma[i]` is the image of `gamma1[i]`.
///
/// The `C'_s` generate `H`, so equality on generator rows is equivalent to
/// `σ` inducing an isomorphism `[Γ1]_A ≅ [Γ2]_A`.
pub fn check_isomorphism(
    gamma1: &[Element],
    sigma: &[Element],
    table: &KLTable,
) -> std::result::Result<(), IsoMismatch> {
    let map: HashMap<Element, Element> = gamma1.iter().copied().zip(sigma.iter().copied()).collect();
    let target_set: HashSet<Element> = sigma.iter().copied().collect();
    for s in 0..table.system().rank() {
        for &x in gamma1 {
            let src: HashMap<Element, LaurentPoly> = table
                .h_row(s, x)
                .into_iter()
                .filter_map(|(y, c)| map.get(&y).map(|&sy| (sy, (y, c))))
                .map(|(sy, (_, c))| (sy, c))
                .collect();
            let tgt: HashMap<Element, LaurentPoly> = table
                .h_row(s, map[&x])
                .into_iter()
                .filter(|(y, _)| target_set.contains(y))
                .collect();
            if src != tgt {
                // report the first differing pair in basis order
                for (i, &y) in gamma1.iter().enumerate() {
                    let a = src.get(&sigma[i]).cloned().unwrap_or_default();
                    let b = tgt.get(&sigma[i]).cloned().unwrap_or_default();
                    if a != b {
                        return Err(IsoMismatch {
                            generator: s,
                            x,
                            y,
                            source: a,
                            target: b,
                        });
                    }
                }
                unreachable!("row maps differ but no entry differs");
            }
        }
    }
    Ok(())
}

pub fn modules_isomorphic_via(gamma1: &[Element], sigma: &[Element], table: &KLTable) -> bool {
    gamma1.len() == sigma.len() && check_isomorphism(gamma1, sigma, table).is_ok()
}

/// Outcome of the parabolic induction check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionReport {
    /// `pr_I` respects `<=_L` along every edge.
    pub preorder_ok: bool,
    /// `X_I Γ'` is a union of left cells for every left cell `Γ'` of `W_I`.
    pub union_ok: bool,
}

impl InductionReport {
    pub fn holds(&self) -> bool {
        self.preorder_ok && self.union_ok
    }
}

/// Verifies that `x <=_L y` implies `pr_I(x) <=_{L,I} pr_I(y)` and that every
/// `X_I Γ'` is a union of left cells. The left cells of `W_I` come from a
/// table built on the parabolic system with the restricted weights.
pub fn induced_cells_check(subset: GeneratorSet, table: &KLTable, left: &CellPartition) -> Result<InductionReport> {
    let sys = table.system();
    let par = sys.parabolic(subset)?;
    let sub_table = KLTable::build(
        std::sync::Arc::new(par.system.clone()),
        table.weights().restrict(&par.gens),
    )?;
    let sub_left = cells(&sub_table, CellKind::Left);
    let pr: Vec<usize> = sys
        .elements()
        .map(|w| {
            let (_, u) = sys.coset_decompose(w, subset);
            sub_left.block_of(par.restrict(u).expect("u lies in W_I"))
        })
        .collect();
    let edges = left_preorder_edges(table);
    let mut preorder_ok = true;
    let mut reach_cache: HashMap<usize, Vec<bool>> = HashMap::new();
    'outer: for (y, targets) in edges.iter().enumerate() {
        for x in targets {
            let (bx, by) = (pr[x.index()], pr[y]);
            let down = reach_cache.entry(by).or_insert_with(|| sub_left.down_set(by));
            if !down[bx] {
                preorder_ok = false;
                break 'outer;
            }
        }
    }
    let union_ok = left.blocks().iter().all(|block| {
        let b = pr[block[0].index()];
        block.iter().all(|w| pr[w.index()] == b)
    });
    Ok(InductionReport { preorder_ok, union_ok })
}

/// `x <=_L y` implies `R(y) ⊆ R(x)`, and left cells have constant `R`.
pub fn descent_invariance_check(table: &KLTable, left: &CellPartition) -> bool {
    let sys = table.system();
    let edges = left_preorder_edges(table);
    let monotone = edges.iter().enumerate().all(|(y, targets)| {
        let ry = sys.right_descents(Element::from_index(y));
        targets.iter().all(|&x| ry.is_subset(sys.right_descents(x)))
    });
    let constant = left.blocks().iter().all(|b| {
        let r = sys.right_descents(b[0]);
        b.iter().all(|&w| sys.right_descents(w) == r)
    });
    monotone && constant
}
