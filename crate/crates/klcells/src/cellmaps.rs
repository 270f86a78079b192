//! Left cellular maps.
//!
//! A pair `(I, δ)` consists of a parabolic subgroup `W_I` and a permutation
//! `δ` of `W_I`. It is KL-admissible when `δ` maps left cells of `W_I` to
//! left cells with identical structure constants (A1, A2), and strongly so
//! when in addition `u ~_R δ(u)` in `W_I` (A3). Its left extension
//! `δ^L(xu) = x δ(u)` is then a left cellular map of `W`.
//!
//! The dihedral maps used for the `Δ₂` family live here, together with
//! checkers for the conditions above and the order of the permutation group
//! generated by a family of left extensions.

use std::collections::HashSet;
use std::sync::Arc;

use crate::cells::{check_isomorphism, CellPartition, CellSet, IsoMismatch};
use crate::coxeter::{CoxeterSystem, Element, GeneratorSet, Parabolic, WeightFunction};
use crate::error::{Error, Result};
use crate::hecke::KLTable;
use crate::schreier::{permutation_group_order, GroupOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapKind {
    /// `δ_{s,t}`, equal weights.
    DeltaEqual,
    /// `δ^<_{s,t}`, `p_s < p_t`, even order.
    DeltaUnequal,
    /// String reversal `w -> w~` on `W_{s,t}`.
    Tilde,
    Identity,
    Explicit,
}

/// Outcome of checking (A1), (A2), (A3).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AdmissibleFlags {
    pub a1: bool,
    pub a2: bool,
    pub a3: bool,
}

impl AdmissibleFlags {
    pub fn admissible(&self) -> bool {
        self.a1 && self.a2
    }

    pub fn strongly_admissible(&self) -> bool {
        self.a1 && self.a2 && self.a3
    }
}

/// Why a permutation fails to be left cellular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellularFailure {
    /// Two elements share an image.
    NotBijective { element: Element },
    /// The image of this left cell (block id) is not a left cell.
    NotACell { cell: usize },
    /// Structure constants differ on this left cell.
    ModuleMismatch { cell: usize, mismatch: IsoMismatch },
}

/// Result of a cellularity check, with a witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellularReport {
    pub failure: Option<CellularFailure>,
}

impl CellularReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Full report of [`verify_admissible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleReport {
    pub flags: AdmissibleFlags,
    /// Witness for a failure of (A1) or (A2).
    pub cellular: CellularReport,
    /// An element `u` with `u` and `δ(u)` in different right cells.
    pub a3_witness: Option<Element>,
}

/// A pair `(I, δ)` with `δ` a permutation of `W_I`.
#[derive(Debug, Clone)]
pub struct AdmissiblePair {
    pub kind: MapKind,
    /// The oriented generators `(s, t)` of a dihedral pair.
    pub generators: Option<(usize, usize)>,
    parabolic: Arc<Parabolic>,
    ambient_size: usize,
    /// Indexed by elements of `parabolic.system`.
    delta: Vec<Element>,
    pub flags: Option<AdmissibleFlags>,
}

impl AdmissiblePair {
    pub fn subset(&self) -> GeneratorSet {
        self.parabolic.subset()
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    /// `δ` on `W_I`, in the numbering of the parabolic system.
    pub fn table(&self) -> &[Element] {
        &self.delta
    }

    /// `δ(u)` for an element `u` of `W` lying in `W_I`.
    pub fn apply(&self, u: Element) -> Option<Element> {
        let sub = self.parabolic.restrict(u)?;
        Some(self.parabolic.embed(self.delta[sub.index()]))
    }

    pub fn identity(system: &CoxeterSystem, subset: GeneratorSet) -> Result<Self> {
        let parabolic = system.parabolic(subset)?;
        let delta = parabolic.system.elements().collect();
        Ok(Self::from_parts(MapKind::Identity, None, parabolic, system, delta))
    }

    /// A map given on ambient elements of `W_I`; must be a bijection of `W_I`.
    pub fn explicit(system: &CoxeterSystem, subset: GeneratorSet, map: &[(Element, Element)]) -> Result<Self> {
        let parabolic = system.parabolic(subset)?;
        let n = parabolic.system.size();
        let mut delta = vec![None; n];
        for &(a, b) in map {
            let (sa, sb) = match (parabolic.restrict(a), parabolic.restrict(b)) {
                (Some(x), Some(y)) => (x, y),
                _ => {
                    return Err(Error::Precondition(format!(
                        "map entry {} -> {} leaves the parabolic subgroup {subset}",
                        a.index(),
                        b.index()
                    )))
                }
            };
            if delta[sa.index()].replace(sb).is_some_and(|old| old != sb) {
                return Err(Error::Precondition(format!("element {} is mapped twice", a.index())));
            }
        }
        let delta: Vec<Element> = delta
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                d.ok_or_else(|| {
                    Error::Precondition(format!(
                        "no image for {}",
                        parabolic.embed(Element::from_index(i)).index()
                    ))
                })
            })
            .collect::<Result<_>>()?;
        if delta.iter().collect::<HashSet<_>>().len() != n {
            return Err(Error::Precondition("map is not a bijection of W_I".into()));
        }
        Ok(Self::from_parts(MapKind::Explicit, None, parabolic, system, delta))
    }

    fn from_parts(
        kind: MapKind,
        generators: Option<(usize, usize)>,
        parabolic: Parabolic,
        system: &CoxeterSystem,
        delta: Vec<Element>,
    ) -> Self {
        Self {
            kind,
            generators,
            parabolic: Arc::new(parabolic),
            ambient_size: system.size(),
            delta,
            flags: None,
        }
    }

    /// KL table of `(W_I, p|_I)`.
    pub fn parabolic_table(&self, weights: &WeightFunction) -> Result<KLTable> {
        KLTable::build(
            Arc::new(self.parabolic.system.clone()),
            weights.restrict(&self.parabolic.gens),
        )
    }

    /// Builds the parabolic table, runs [`verify_admissible`] and records
    /// the flags on the pair.
    pub fn verify(&mut self, weights: &WeightFunction) -> Result<AdmissibleReport> {
        let table = self.parabolic_table(weights)?;
        let report = verify_admissible(self, &table)?;
        self.flags = Some(report.flags);
        Ok(report)
    }
}

/// Parabolic `W_{s,t}` plus the sub-indices of `s` and `t` and `m_{st}`.
fn dihedral(system: &CoxeterSystem, s: usize, t: usize) -> Result<(Parabolic, usize, usize, u32)> {
    for g in [s, t] {
        if g >= system.rank() {
            return Err(Error::GeneratorOutOfRange(g));
        }
    }
    if s == t {
        return Err(Error::SameGenerator);
    }
    let subset: GeneratorSet = [s, t].into_iter().collect();
    let parabolic = system.parabolic(subset)?;
    let (a, b) = if s < t { (0, 1) } else { (1, 0) };
    Ok((parabolic, a, b, system.matrix().get(s, t)))
}

/// `δ_{s,t}`: fixes `1` and `w_{s,t}`, sends `w` to `σ(w) w_{s,t}` otherwise,
/// where `σ` swaps `s` and `t`.
pub fn delta_equal(system: &CoxeterSystem, weights: &WeightFunction, s: usize, t: usize) -> Result<AdmissiblePair> {
    let (parabolic, _, _, _) = dihedral(system, s, t)?;
    if weights.get(s) != weights.get(t) {
        return Err(Error::WrongDihedralMap(format!(
            "delta_equal needs p_{s} = p_{t}, got {} and {}",
            weights.get(s),
            weights.get(t)
        )));
    }
    let sub = &parabolic.system;
    let w0 = sub.longest_element();
    let delta = sub
        .elements()
        .map(|u| {
            if u == Element::IDENTITY || u == w0 {
                u
            } else {
                let swapped: Vec<usize> = sub.word(u).iter().map(|&g| 1 - g as usize).collect();
                let sigma = sub.from_word(&swapped).expect("rank two word");
                sub.multiply(sigma, w0)
            }
        })
        .collect();
    Ok(AdmissiblePair::from_parts(
        MapKind::DeltaEqual,
        Some((s.min(t), s.max(t))),
        parabolic,
        system,
        delta,
    ))
}

/// `δ^<_{s,t}` for `p_s < p_t` and `m_{st}` even: fixes `1, w_{s,t}, s,
/// w_{s,t}s` and sends `w` to `ws` otherwise.
pub fn delta_unequal(system: &CoxeterSystem, weights: &WeightFunction, s: usize, t: usize) -> Result<AdmissiblePair> {
    let (parabolic, a, _, m) = dihedral(system, s, t)?;
    if m < 4 || m % 2 == 1 {
        return Err(Error::Precondition(format!(
            "delta_unequal needs an even order >= 4, m_({s},{t}) = {m}"
        )));
    }
    if weights.get(s) >= weights.get(t) {
        return Err(Error::WrongDihedralMap(format!(
            "delta_unequal needs p_{s} < p_{t}, got {} and {}",
            weights.get(s),
            weights.get(t)
        )));
    }
    let sub = &parabolic.system;
    let w0 = sub.longest_element();
    let fixed = [Element::IDENTITY, w0, sub.generator(a), sub.right_mul(w0, a)];
    let delta = sub
        .elements()
        .map(|u| if fixed.contains(&u) { u } else { sub.right_mul(u, a) })
        .collect();
    Ok(AdmissiblePair::from_parts(
        MapKind::DeltaUnequal,
        Some((s, t)),
        parabolic,
        system,
        delta,
    ))
}

/// The string reversal `w -> w~` on `W_{s,t}` (fixing `1` and `w_{s,t}`),
/// for `p_s = p_t` and `m_{st} >= 3`.
pub fn tilde_pair(system: &CoxeterSystem, weights: &WeightFunction, s: usize, t: usize) -> Result<AdmissiblePair> {
    let (parabolic, _, _, m) = dihedral(system, s, t)?;
    if weights.get(s) != weights.get(t) {
        return Err(Error::WrongDihedralMap(format!(
            "tilde_pair needs p_{s} = p_{t}, got {} and {}",
            weights.get(s),
            weights.get(t)
        )));
    }
    if m < 3 {
        return Err(Error::Precondition(format!("tilde_pair needs m_({s},{t}) >= 3")));
    }
    let sub = &parabolic.system;
    let w0 = sub.longest_element();
    let delta = sub
        .elements()
        .map(|u| {
            if u == Element::IDENTITY || u == w0 {
                u
            } else {
                sub.tilde(u, 0, 1).expect("every other element lies in D_R(s,t)")
            }
        })
        .collect();
    Ok(AdmissiblePair::from_parts(
        MapKind::Tilde,
        Some((s.min(t), s.max(t))),
        parabolic,
        system,
        delta,
    ))
}

/// Checks (A1) and (A2) for a permutation of the elements of `table`'s group.
pub fn verify_cellular(perm: &[Element], table: &KLTable, left: &CellPartition) -> CellularReport {
    let n = table.system().size();
    assert_eq!(perm.len(), n, "permutation of the wrong size");
    let mut seen = vec![false; n];
    for &y in perm {
        if std::mem::replace(&mut seen[y.index()], true) {
            let element = perm
                .iter()
                .position(|&z| z == y)
                .map(Element::from_index)
                .expect("image");
            return CellularReport {
                failure: Some(CellularFailure::NotBijective { element }),
            };
        }
    }
    for (b, block) in left.blocks().iter().enumerate() {
        let images: Vec<Element> = block.iter().map(|w| perm[w.index()]).collect();
        let c = left.block_of(images[0]);
        if left.block(c).len() != block.len() || images.iter().any(|&y| left.block_of(y) != c) {
            return CellularReport {
                failure: Some(CellularFailure::NotACell { cell: b }),
            };
        }
        if let Err(mismatch) = check_isomorphism(block, &images, table) {
            return CellularReport {
                failure: Some(CellularFailure::ModuleMismatch { cell: b, mismatch }),
            };
        }
    }
    CellularReport { failure: None }
}

/// Checks (A1), (A2), (A3) against the table of `(W_I, p|_I)`.
pub fn verify_admissible(pair: &AdmissiblePair, table_i: &KLTable) -> Result<AdmissibleReport> {
    let sub = &pair.parabolic.system;
    if table_i.system().size() != sub.size() || table_i.system().matrix() != sub.matrix() {
        return Err(Error::Precondition(
            "table does not belong to the parabolic subgroup of the pair".into(),
        ));
    }
    let cells = CellSet::compute(table_i);
    let cellular = verify_cellular(&pair.delta, table_i, &cells.left);
    let (a1, a2) = match &cellular.failure {
        None => (true, true),
        Some(CellularFailure::ModuleMismatch { .. }) => (true, false),
        Some(_) => (false, false),
    };
    let a3_witness = sub
        .elements()
        .find(|&u| !cells.right.same_block(u, pair.delta[u.index()]));
    Ok(AdmissibleReport {
        flags: AdmissibleFlags {
            a1,
            a2,
            a3: a3_witness.is_none(),
        },
        cellular,
        a3_witness,
    })
}

/// `δ^L` as a permutation of `W`.
#[derive(Debug, Clone)]
pub struct LeftExtension {
    pub pair: AdmissiblePair,
    perm: Vec<Element>,
}

impl LeftExtension {
    pub fn apply(&self, w: Element) -> Element {
        self.perm[w.index()]
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, w)| w.index() == i)
    }

    pub fn to_perm(&self) -> Vec<u32> {
        self.perm.iter().map(|w| w.index() as u32).collect()
    }
}

/// `δ^L(xu) = x δ(u)` for `x` in `X_I` and `u` in `W_I`.
pub fn left_extend(pair: &AdmissiblePair, system: &CoxeterSystem) -> Result<LeftExtension> {
    if pair.ambient_size != system.size() || pair.subset().iter().any(|s| s >= system.rank()) {
        return Err(Error::Precondition("pair was built for a different group".into()));
    }
    let subset = pair.subset();
    let perm: Vec<Element> = system
        .elements()
        .map(|w| {
            let (x, u) = system.coset_decompose(w, subset);
            let d = pair.apply(u).expect("u lies in W_I");
            system.multiply(x, d)
        })
        .collect();
    let distinct: HashSet<Element> = perm.iter().copied().collect();
    assert_eq!(distinct.len(), perm.len(), "left extension is not a bijection");
    Ok(LeftExtension {
        pair: pair.clone(),
        perm,
    })
}

/// `w ~_R δ^L(w)` for every `w`; returns the first counterexample.
pub fn right_preservation_witness(ext: &LeftExtension, right: &CellPartition) -> Option<Element> {
    ext.perm
        .iter()
        .enumerate()
        .map(|(i, &y)| (Element::from_index(i), y))
        .find(|&(w, y)| !right.same_block(w, y))
        .map(|(w, _)| w)
}

pub fn verify_right_preservation(ext: &LeftExtension, right: &CellPartition) -> bool {
    right_preservation_witness(ext, right).is_none()
}

/// `Δ₂`: one verified pair per generator pair with `m_{st} >= 3`, using
/// `δ_{s,t}` for equal weights and `δ^<_{s,t}` (smaller weight first)
/// otherwise.
pub fn delta2_family(system: &CoxeterSystem, weights: &WeightFunction) -> Result<Vec<AdmissiblePair>> {
    let mut out = Vec::new();
    for s in 0..system.rank() {
        for t in s + 1..system.rank() {
            if system.matrix().get(s, t) < 3 {
                continue;
            }
            let (ps, pt) = (weights.get(s), weights.get(t));
            let mut pair = if ps == pt {
                delta_equal(system, weights, s, t)?
            } else if ps < pt {
                delta_unequal(system, weights, s, t)?
            } else {
                delta_unequal(system, weights, t, s)?
            };
            pair.verify(weights)?;
            out.push(pair);
        }
    }
    Ok(out)
}

/// `|V_Δ|` for the group generated by the given extensions.
pub fn generated_group_order(extensions: &[LeftExtension]) -> GroupOrder {
    let degree = extensions.first().map_or(0, |e| e.perm.len());
    let gens: Vec<Vec<u32>> = extensions.iter().map(LeftExtension::to_perm).collect();
    permutation_group_order(degree, &gens)
}

/// Pairs each `w` in `gamma1` with the unique element of `gamma2` in the
/// same right cell. Both must be left cells of one two-sided cell.
pub fn right_cell_pairing(gamma1: &[Element], gamma2: &[Element], cells: &CellSet) -> Result<Vec<Element>> {
    let (Some(&a), Some(&b)) = (gamma1.first(), gamma2.first()) else {
        return Err(Error::EmptySet);
    };
    if !cells.two_sided.same_block(a, b) {
        return Err(Error::Precondition(
            "left cells lie in different two-sided cells".into(),
        ));
    }
    let mut image = Vec::with_capacity(gamma1.len());
    for &w in gamma1 {
        let hits: Vec<Element> = gamma2
            .iter()
            .copied()
            .filter(|&y| cells.right.same_block(w, y))
            .collect();
        match hits.as_slice() {
            [y] => image.push(*y),
            _ => {
                return Err(Error::AmbiguousPairing(format!(
                    "right cell of element {} meets the target in {} elements",
                    w.index(),
                    hits.len()
                )))
            }
        }
    }
    if image.iter().collect::<HashSet<_>>().len() != gamma2.len() || gamma1.len() != gamma2.len() {
        return Err(Error::AmbiguousPairing("pairing is not a bijection".into()));
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::{cells, modules_isomorphic_via, CellKind};
    use crate::coxeter::CoxeterType;
    use num_bigint::BigUint;

    fn setup(ty: CoxeterType, weights: Vec<i32>) -> (Arc<CoxeterSystem>, WeightFunction) {
        let sys = Arc::new(CoxeterSystem::from_type(ty).unwrap());
        let w = WeightFunction::new(sys.matrix(), weights).unwrap();
        (sys, w)
    }

    #[test]
    fn delta_equal_m3() {
        let (sys, p) = setup(CoxeterType::A(2), vec![1, 1]);
        let w = |word: &[usize]| sys.from_word(word).unwrap();
        let d = delta_equal(&sys, &p, 0, 1).unwrap();
        assert_eq!(d.apply(w(&[0])), Some(w(&[0, 1])));
        assert_eq!(d.apply(w(&[1, 0])), Some(w(&[1])));
        assert_eq!(d.apply(Element::IDENTITY), Some(Element::IDENTITY));
        assert_eq!(d.apply(sys.longest_element()), Some(sys.longest_element()));
    }

    #[test]
    fn delta_equal_m4() {
        let (sys, p) = setup(CoxeterType::B(2), vec![1, 1]);
        let w = |word: &[usize]| sys.from_word(word).unwrap();
        let d = delta_equal(&sys, &p, 0, 1).unwrap();
        assert_eq!(d.apply(w(&[1])), Some(w(&[1, 0, 1])));
        let (sys2, q) = setup(CoxeterType::B(2), vec![1, 2]);
        assert!(matches!(delta_equal(&sys2, &q, 0, 1), Err(Error::WrongDihedralMap(_))));
    }

    #[test]
    fn delta_unequal_b2() {
        let (sys, p) = setup(CoxeterType::B(2), vec![1, 2]);
        let w = |word: &[usize]| sys.from_word(word).unwrap();
        let d = delta_unequal(&sys, &p, 0, 1).unwrap();
        assert_eq!(d.apply(w(&[1, 0])), Some(w(&[1])));
        assert_eq!(d.apply(w(&[0, 1, 0])), Some(w(&[0, 1])));
        assert_eq!(d.apply(w(&[0])), Some(w(&[0])));
        for u in sys.elements() {
            assert_eq!(d.apply(d.apply(u).unwrap()), Some(u));
        }
        assert!(delta_unequal(&sys, &p, 1, 0).is_err());
        let (a2, q) = setup(CoxeterType::A(2), vec![1, 1]);
        assert!(matches!(delta_unequal(&a2, &q, 0, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn tilde_m4() {
        let (sys, p) = setup(CoxeterType::B(2), vec![1, 1]);
        let w = |word: &[usize]| sys.from_word(word).unwrap();
        let d = tilde_pair(&sys, &p, 0, 1).unwrap();
        assert_eq!(d.apply(w(&[0])), Some(w(&[0, 1, 0])));
        assert_eq!(d.apply(w(&[0, 1])), Some(w(&[0, 1])));
        let (a2, q) = setup(CoxeterType::A(2), vec![1, 1]);
        let t = tilde_pair(&a2, &q, 0, 1).unwrap();
        let e = delta_equal(&a2, &q, 0, 1).unwrap();
        assert_eq!(t.table(), e.table());
    }

    #[test]
    fn admissibility_of_dihedral_maps() {
        let (sys, p) = setup(CoxeterType::A(2), vec![1, 1]);
        let mut d = delta_equal(&sys, &p, 0, 1).unwrap();
        assert!(d.verify(&p).unwrap().flags.strongly_admissible());
        let (sys, p) = setup(CoxeterType::B(2), vec![1, 2]);
        let mut d = delta_unequal(&sys, &p, 0, 1).unwrap();
        assert!(d.verify(&p).unwrap().flags.strongly_admissible());
        let mut id = AdmissiblePair::identity(&sys, GeneratorSet::full(2)).unwrap();
        assert!(id.verify(&p).unwrap().flags.strongly_admissible());
    }

    #[test]
    fn bad_maps_fail() {
        let (sys, p) = setup(CoxeterType::A(2), vec![1, 1]);
        let kl = KLTable::build(sys.clone(), p.clone()).unwrap();
        let left = cells(&kl, CellKind::Left);
        let w = |word: &[usize]| sys.from_word(word).unwrap();
        // swap 1 and s: different descent sets, different cells
        let mut perm: Vec<Element> = sys.elements().collect();
        perm.swap(0, w(&[0]).index());
        let report = verify_cellular(&perm, &kl, &left);
        assert!(matches!(report.failure, Some(CellularFailure::NotACell { .. })));
        // the wrong bijection Γ_s -> Γ_t breaks (A2)
        let mut perm: Vec<Element> = sys.elements().collect();
        for (a, b) in [(w(&[0]), w(&[1])), (w(&[1, 0]), w(&[0, 1]))] {
            perm[a.index()] = b;
            perm[b.index()] = a;
        }
        let report = verify_cellular(&perm, &kl, &left);
        assert!(matches!(report.failure, Some(CellularFailure::ModuleMismatch { .. })));
        let identity: Vec<Element> = sys.elements().collect();
        assert!(verify_cellular(&identity, &kl, &left).holds());
    }

    #[test]
    fn extension_on_a3() {
        let (sys, p) = setup(CoxeterType::A(3), vec![1, 1, 1]);
        let kl = KLTable::build(sys.clone(), p.clone()).unwrap();
        let cs = CellSet::compute(&kl);
        for pair in delta2_family(&sys, &p).unwrap() {
            assert!(pair.flags.unwrap().strongly_admissible());
            let ext = left_extend(&pair, &sys).unwrap();
            assert!(verify_cellular(ext.as_slice(), &kl, &cs.left).holds());
            assert!(verify_right_preservation(&ext, &cs.right));
        }
        // B3 sub-case of the definition: δ^L(x s) = x st
        let (b3, q) = setup(CoxeterType::B(3), vec![1, 1, 1]);
        let pair = delta_equal(&b3, &q, 1, 2).unwrap();
        let ext = left_extend(&pair, &b3).unwrap();
        let subset: GeneratorSet = [1, 2].into_iter().collect();
        for x in b3
            .elements()
            .filter(|&x| b3.coset_decompose(x, subset).1 == Element::IDENTITY)
        {
            let xs = b3.right_mul(x, 1);
            assert_eq!(ext.apply(xs), b3.right_mul(xs, 2));
        }
    }

    #[test]
    fn family_sizes() {
        let (a2, p) = setup(CoxeterType::A(2), vec![1, 1]);
        assert_eq!(delta2_family(&a2, &p).unwrap().len(), 1);
        let (b3, q) = setup(CoxeterType::B(3), vec![2, 1, 1]);
        let fam = delta2_family(&b3, &q).unwrap();
        let kinds: Vec<MapKind> = fam.iter().map(|f| f.kind).collect();
        assert_eq!(kinds, vec![MapKind::DeltaUnequal, MapKind::DeltaEqual]);
        assert_eq!(fam[0].generators, Some((1, 0)));
    }

    #[test]
    fn a2_group_order() {
        let (sys, p) = setup(CoxeterType::A(2), vec![1, 1]);
        let exts: Vec<LeftExtension> = delta2_family(&sys, &p)
            .unwrap()
            .iter()
            .map(|pair| left_extend(pair, &sys).unwrap())
            .collect();
        assert_eq!(generated_group_order(&exts).order, BigUint::from(2u32));
    }

    #[test]
    fn pairing_in_a2() {
        let (sys, p) = setup(CoxeterType::A(2), vec![1, 1]);
        let kl = KLTable::build(sys.clone(), p).unwrap();
        let cs = CellSet::compute(&kl);
        let w = |word: &[usize]| sys.from_word(word).unwrap();
        let gs = [w(&[0]), w(&[1, 0])];
        let gt = [w(&[1]), w(&[0, 1])];
        assert_eq!(right_cell_pairing(&gs, &gs, &cs).unwrap(), gs.to_vec());
        let sigma = right_cell_pairing(&gs, &gt, &cs).unwrap();
        assert_eq!(sigma, vec![w(&[0, 1]), w(&[1])]);
        assert!(modules_isomorphic_via(&gs, &sigma, &kl));
        assert!(matches!(
            right_cell_pairing(&gs, &[Element::IDENTITY], &cs),
            Err(Error::Precondition(_))
        ));
    }
}
