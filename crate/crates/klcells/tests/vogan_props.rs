mod common;

use klcells::cellmaps::{delta2_family, left_extend, tilde_pair, LeftExtension};
use klcells::cells::left_preorder_edges;
use klcells::vogan::{classic_tau_classes, coarseness_check, rho_descent, rho_enhanced, tau_refine, verify_conjecture};
use klcells::{CellSet, KLTable};

fn delta2(kl: &KLTable) -> Vec<LeftExtension> {
    delta2_family(kl.system(), kl.weights())
        .unwrap()
        .iter()
        .map(|p| left_extend(p, kl.system()).unwrap())
        .collect()
}

#[test]
fn enhanced_descents_are_monotone() {
    for (ty, w) in [
        ("B2", vec![1, 2]),
        ("B3", vec![2, 1, 1]),
        ("B3", vec![1, 3, 3]),
        ("G2", vec![2, 1]),
        ("I2(6)", vec![1, 4]),
    ] {
        let kl = common::table(ty, &w);
        let rho = rho_enhanced(&kl);
        let cs = CellSet::compute(&kl);
        assert!(rho.fibers_are_unions_of(&cs.left));
        for (y, targets) in left_preorder_edges(&kl).iter().enumerate() {
            let ly = rho.label(klcells::Element::from_index(y));
            for &x in targets {
                assert_eq!(ly & !rho.label(x), 0, "{ty}: R^p({y}) not inside R^p({x:?})");
            }
        }
    }
}

#[test]
fn refinement_is_monotone_and_order_free() {
    let kl = common::table("B4", &[2, 1, 1, 1]);
    let rho = rho_enhanced(&kl);
    let mut exts = delta2(&kl);
    let v = tau_refine(&exts, &rho);
    for c in v.classes() {
        assert!(c.iter().all(|&w| rho.label(w) == rho.label(c[0])));
    }
    exts.reverse();
    assert_eq!(tau_refine(&exts, &rho), v);
    let cs = CellSet::compute(&kl);
    assert!(coarseness_check(&v, &cs.left));
}

#[test]
fn classic_tau_is_coarser_than_left_cells() {
    for ty in ["A3", "A4", "B3", "D4", "H3"] {
        let rank = common::system(ty).rank();
        let kl = common::table(ty, &vec![1; rank]);
        let cs = CellSet::compute(&kl);
        let classic = classic_tau_classes(&kl).unwrap();
        assert!(coarseness_check(&classic, &cs.left), "{ty}");
        if ty.starts_with('A') {
            assert_eq!(classic.as_sets(), cs.left.as_sets());
        }
    }
}

#[test]
fn tilde_family_in_equal_parameters() {
    // Δ of tilde maps with ρ = R is the any-order variant of Vogan's invariant
    let kl = common::table("H3", &[1, 1, 1]);
    let sys = kl.system();
    let exts: Vec<LeftExtension> = [(0, 1), (1, 2)]
        .iter()
        .map(|&(s, t)| left_extend(&tilde_pair(sys, kl.weights(), s, t).unwrap(), sys).unwrap())
        .collect();
    let v = tau_refine(&exts, &rho_descent(&kl));
    assert!(coarseness_check(&v, &CellSet::compute(&kl).left));
}

#[test]
fn conjecture_on_small_groups() {
    for (ty, w) in [
        ("A3", vec![1, 1, 1]),
        ("B3", vec![2, 1, 1]),
        ("G2", vec![1, 3]),
        ("H3", vec![1, 1, 1]),
    ] {
        let kl = common::table(ty, &w);
        let report = verify_conjecture(&kl).unwrap();
        assert!(report.holds, "{ty} {w:?}: {report:?}");
        assert!(report.witnesses.is_empty());
        assert_eq!(report.num_meet_classes, report.num_left_cells);
    }
}
