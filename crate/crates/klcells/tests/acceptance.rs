//! End-to-end checks of the library's headline results. Runs with its own
//! harness so every check prints one PASS/FAIL line under `cargo test`.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use klcells::cellmaps::{
    delta2_family, generated_group_order, left_extend, tilde_pair, verify_cellular, verify_right_preservation,
    LeftExtension,
};
use klcells::cells::{descent_invariance_check, induced_cells_check, CellModule};
use klcells::schreier::GroupOrder;
use klcells::vogan::{classic_tau_classes, coarseness_check, delta2_vogan_classes, verify_conjecture_with};
use klcells::{CellSet, CoxeterSystem, Element, GeneratorSet, KLTable, LaurentPoly, WeightFunction};
use num_bigint::BigUint;

type Check = Result<String, String>;
type CheckFn = fn(&mut Lab) -> Check;
type Computed = Arc<(KLTable, CellSet)>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("{what} took {t:.2?} (limit {limit:?})"))
}

/// KL tables and cells shared between checks.
struct Lab {
    tables: BTreeMap<(String, Vec<i32>), Computed>,
}

impl Lab {
    fn get(&mut self, ty: &str, w: &[i32]) -> Computed {
        self.tables
            .entry((ty.to_string(), w.to_vec()))
            .or_insert_with(|| {
                let kl = common::table(ty, w);
                let cs = CellSet::compute(&kl);
                Arc::new((kl, cs))
            })
            .clone()
    }
}

/// Groups and weights on which the `Δ₂` results are checked.
fn delta2_suite() -> Vec<(&'static str, Vec<i32>)> {
    vec![
        ("A3", vec![1, 1, 1]),
        ("B3", vec![1, 1, 1]),
        ("B3", vec![2, 1, 1]),
        ("B3", vec![3, 1, 1]),
        ("B4", vec![1, 1, 1, 1]),
        ("B4", vec![2, 1, 1, 1]),
        ("F4", vec![1, 1, 1, 1]),
        ("F4", vec![2, 2, 1, 1]),
        ("F4", vec![3, 3, 1, 1]),
    ]
}

fn dihedral_equal(_: &mut Lab) -> Check {
    for m in 3..=8 {
        let start = Instant::now();
        let kl = common::table(&format!("I2({m})"), &[1, 1]);
        let sys = kl.system();
        let cs = CellSet::compute(&kl);
        let d = sys.dihedral_data(0, 1).map_err(|e| e.to_string())?;
        let expected: BTreeSet<Vec<Element>> = [
            vec![Element::IDENTITY],
            vec![d.longest],
            d.gamma_s.clone(),
            d.gamma_t.clone(),
        ]
        .into_iter()
        .collect();
        ensure(cs.left.as_sets() == expected, || {
            format!("m={m}: got {} blocks", cs.left.num_blocks())
        })?;
        within(Duration::from_secs(1), start, &format!("m={m}"))?;
    }
    Ok("m = 3..8: {1}, {w_st}, Γ_s, Γ_t".into())
}

fn dihedral_unequal(_: &mut Lab) -> Check {
    for m in [4u32, 6, 8] {
        for (ps, pt) in [(1, 2), (1, 3), (2, 5)] {
            let start = Instant::now();
            let kl = common::table(&format!("I2({m})"), &[ps, pt]);
            let sys = kl.system();
            let cs = CellSet::compute(&kl);
            let d = sys.dihedral_data(0, 1).map_err(|e| e.to_string())?;
            let s = sys.generator(0);
            let w0s = sys.right_mul(d.longest, 0);
            let gs: Vec<Element> = d.gamma_s.iter().copied().filter(|&w| w != s).collect();
            let gt: Vec<Element> = d.gamma_t.iter().copied().filter(|&w| w != w0s).collect();
            let expected: BTreeSet<Vec<Element>> =
                [vec![Element::IDENTITY], vec![d.longest], vec![s], vec![w0s], gs, gt]
                    .into_iter()
                    .collect();
            ensure(cs.left.as_sets() == expected, || {
                format!("m={m} p=({ps},{pt}): got {} blocks", cs.left.num_blocks())
            })?;
            within(Duration::from_secs(1), start, &format!("m={m} p=({ps},{pt})"))?;
        }
    }
    Ok("m ∈ {4,6,8}, p ∈ {(1,2),(1,3),(2,5)}: six blocks each".into())
}

fn a2_module(lab: &mut Lab) -> Check {
    let entry = lab.get("A2", &[1, 1]);
    let (kl, cs) = &*entry;
    let sys = kl.system();
    let basis = [sys.generator(0), sys.from_word(&[1, 0]).unwrap()];
    let module = CellModule::new(&basis, kl, &cs.left).map_err(|e| e.to_string())?;
    let vv: LaurentPoly = "v + v^-1".parse().unwrap();
    let (one, zero) = (LaurentPoly::one(), LaurentPoly::zero());
    let cs_expected = vec![vec![vv.clone(), one.clone()], vec![zero.clone(), zero.clone()]];
    let ct_expected = vec![vec![zero.clone(), zero], vec![one, vv]];
    ensure(module.matrices[0] == cs_expected, || {
        format!("C'_s: {:?}", module.matrices[0])
    })?;
    ensure(module.matrices[1] == ct_expected, || {
        format!("C'_t: {:?}", module.matrices[1])
    })?;
    Ok("C'_s ↦ [[v+v^-1, 1], [0, 0]], C'_t ↦ [[0, 0], [1, v+v^-1]]".into())
}

fn canonical_basis(_: &mut Lab) -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for (ty, w) in [
        ("A3", vec![1, 1, 1]),
        ("B3", vec![1, 1, 1]),
        ("B2", vec![1, 2]),
        ("G2", vec![1, 1]),
        ("G2", vec![1, 2]),
    ] {
        let kl = common::table(ty, &w);
        let sys = kl.system();
        let alg = kl.algebra();
        for y in sys.elements() {
            let c = kl.kl_basis_element(y);
            ensure(alg.bar(&c) == c, || format!("{ty}{w:?}: C'_{y:?} not bar-invariant"))?;
            ensure(c.coeff(y).is_one(), || {
                format!("{ty}{w:?}: leading coefficient of C'_{y:?}")
            })?;
            for (x, a) in c.support() {
                ensure(x == y || a.is_strictly_negative(), || {
                    format!("{ty}{w:?}: p_({x:?},{y:?}) = {a}")
                })?;
            }
            for s in 0..sys.rank() {
                let mut prod = alg.left_mul_generator(s, &c);
                prod.add_scaled(&c, &LaurentPoly::monomial(1, -kl.weights().get(s)));
                let mut expected = klcells::HeckeElement::zero();
                for (x, h) in kl.h_row(s, y) {
                    expected.add_term(x, &h);
                }
                ensure(kl.to_kl_basis(&prod) == expected, || {
                    format!("{ty}{w:?}: C'_{s} C'_{y:?}")
                })?;
            }
            checked += 1;
        }
    }
    within(Duration::from_secs(30), start, "canonical basis oracle")?;
    Ok(format!(
        "{checked} basis elements over A3, B3, B2(1,2), G2(1,1), G2(1,2)"
    ))
}

fn robinson_schensted(lab: &mut Lab) -> Check {
    let start = Instant::now();
    for (ty, w, count) in [("A3", vec![1, 1, 1], 10), ("A4", vec![1, 1, 1, 1], 26)] {
        let entry = lab.get(ty, &w);
        let (kl, cs) = &*entry;
        let sys = kl.system();
        let mut groups: BTreeMap<Vec<Vec<usize>>, Vec<Element>> = BTreeMap::new();
        for x in sys.elements() {
            groups
                .entry(common::rs(&common::one_line(sys, x)).1)
                .or_default()
                .push(x);
        }
        let oracle: BTreeSet<Vec<Element>> = groups.into_values().collect();
        ensure(cs.left.num_blocks() == count, || {
            format!("{ty}: {} left cells", cs.left.num_blocks())
        })?;
        ensure(cs.left.as_sets() == oracle, || {
            format!("{ty}: differs from recording tableaux")
        })?;
    }
    within(Duration::from_secs(60), start, "type A")?;
    Ok("A3: 10, A4: 26 left cells, equal to recording-tableau classes".into())
}

fn extensions(kl: &KLTable) -> Result<Vec<LeftExtension>, String> {
    delta2_family(kl.system(), kl.weights())
        .map_err(|e| e.to_string())?
        .iter()
        .map(|p| left_extend(p, kl.system()).map_err(|e| e.to_string()))
        .collect()
}

fn strong_admissibility(_: &mut Lab) -> Check {
    let mut pairs = 0;
    for (ty, w) in delta2_suite() {
        let sys = common::system(ty);
        let p = WeightFunction::new(sys.matrix(), w.clone()).map_err(|e| e.to_string())?;
        for pair in delta2_family(&sys, &p).map_err(|e| e.to_string())? {
            let flags = pair.flags.ok_or("unverified pair")?;
            ensure(flags.strongly_admissible(), || {
                format!("{ty}{w:?} {:?}: {flags:?}", pair.generators)
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs over A3, B3 ×3, B4 ×2, F4 ×3 satisfy (A1)-(A3)"))
}

fn left_extension_theorem(lab: &mut Lab) -> Check {
    let mut maps = 0;
    for (ty, w) in delta2_suite() {
        let entry = lab.get(ty, &w);
        let (kl, cs) = &*entry;
        for ext in extensions(kl)? {
            let report = verify_cellular(ext.as_slice(), kl, &cs.left);
            ensure(report.holds(), || {
                format!("{ty}{w:?} {:?}: {:?}", ext.pair.generators, report.failure)
            })?;
            ensure(verify_right_preservation(&ext, &cs.right), || {
                format!(
                    "{ty}{w:?} {:?}: w and δ^L(w) in different right cells",
                    ext.pair.generators
                )
            })?;
            maps += 1;
        }
    }
    Ok(format!("{maps} left extensions are left cellular and keep right cells"))
}

fn tilde_corollary(lab: &mut Lab) -> Check {
    let entry = lab.get("B3", &[1, 1, 1]);
    let (kl, cs) = &*entry;
    let pair = tilde_pair(kl.system(), kl.weights(), 0, 1).map_err(|e| e.to_string())?;
    let ext = left_extend(&pair, kl.system()).map_err(|e| e.to_string())?;
    let report = verify_cellular(ext.as_slice(), kl, &cs.left);
    ensure(report.holds(), || format!("{:?}", report.failure))?;
    Ok("B3, order-4 edge: string reversal is left cellular".into())
}

fn vogan_coarseness(lab: &mut Lab) -> Check {
    let mut classes = 0;
    for (ty, w) in delta2_suite() {
        let entry = lab.get(ty, &w);
        let (kl, cs) = &*entry;
        let v = delta2_vogan_classes(kl).map_err(|e| e.to_string())?;
        ensure(coarseness_check(&v, &cs.left), || {
            format!("{ty}{w:?}: a left cell is split")
        })?;
        classes += v.num_classes();
    }
    Ok(format!(
        "every left cell inside one (Δ₂, R^p)-class ({classes} classes in total)"
    ))
}

fn classic_tau(lab: &mut Lab) -> Check {
    let start = Instant::now();
    for (ty, w) in [("B2", vec![1, 1]), ("B3", vec![1, 1, 1])] {
        let entry = lab.get(ty, &w);
        let (kl, cs) = &*entry;
        let classic = classic_tau_classes(kl).map_err(|e| e.to_string())?;
        ensure(classic.as_sets() == cs.left.as_sets(), || {
            format!(
                "{ty}: {} classes vs {} left cells",
                classic.num_classes(),
                cs.left.num_blocks()
            )
        })?;
    }
    within(Duration::from_secs(60), start, "classical τ")?;
    Ok("B2, B3: classical τ-classes are the left cells".into())
}

fn conjecture(lab: &mut Lab) -> Check {
    let mut cases: Vec<(&str, Vec<i32>)> = vec![
        ("A3", vec![1, 1, 1]),
        ("F4", vec![1, 1, 1, 1]),
        ("F4", vec![2, 2, 1, 1]),
        ("F4", vec![3, 3, 1, 1]),
    ];
    for b in 1..=4 {
        cases.push(("B3", vec![b, 1, 1]));
        cases.push(("B4", vec![b, 1, 1, 1]));
    }
    let mut summary = Vec::new();
    for (ty, w) in cases {
        let start = Instant::now();
        let entry = lab.get(ty, &w);
        let (kl, cs) = &*entry;
        let report = verify_conjecture_with(kl, cs).map_err(|e| e.to_string())?;
        ensure(report.holds, || format!("{ty}{w:?}: witnesses {:?}", report.witnesses))?;
        let limit = if ty == "F4" { 600 } else { 900 };
        within(Duration::from_secs(limit), start, &format!("{ty}{w:?}"))?;
        summary.push(format!("{ty}{w:?}:{}", report.num_left_cells));
    }
    Ok(format!("holds; left cells {}", summary.join(" ")))
}

fn closure_order(perms: &[Vec<u32>]) -> usize {
    let n = perms[0].len();
    let id: Vec<u32> = (0..n as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(p) = stack.pop() {
        for g in perms {
            let q: Vec<u32> = p.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    seen.len()
}

fn group_orders(lab: &mut Lab) -> Check {
    let a2 = lab.get("A2", &[1, 1]);
    let order = generated_group_order(&extensions(&a2.0)?).order;
    ensure(order == BigUint::from(2u32), || format!("A2: {order}"))?;
    let a3 = lab.get("A3", &[1, 1, 1]);
    let exts = extensions(&a3.0)?;
    let perms: Vec<Vec<u32>> = exts.iter().map(LeftExtension::to_perm).collect();
    let brute = closure_order(&perms);
    let order = generated_group_order(&exts).order;
    ensure(order == BigUint::from(brute), || {
        format!("A3: {order} vs closure {brute}")
    })?;
    let mut msg = format!("A2: 2, A3: {brute} (closure agrees)");

    if std::env::var_os("KLCELLS_SKIP_H4").is_none() {
        let sys = CoxeterSystem::from_type("H4".parse().unwrap()).map_err(|e| e.to_string())?;
        let p = WeightFunction::equal(sys.matrix());
        let exts: Vec<LeftExtension> = delta2_family(&sys, &p)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|pair| left_extend(pair, &sys).unwrap())
            .collect();
        let h4 = generated_group_order(&exts);
        let expected = GroupOrder::from_factorization(&[(2, 40), (3, 20), (5, 8), (7, 4), (11, 2)]);
        ensure(h4.order == expected, || format!("H4: {h4}"))?;
        msg.push_str(&format!(", H4: {h4}"));
    } else {
        msg.push_str(", H4 skipped");
    }
    Ok(msg)
}

fn induction(lab: &mut Lab) -> Check {
    let mut cases = vec![("A3", vec![1, 1, 1])];
    cases.extend(
        [vec![1, 1, 1], vec![2, 1, 1], vec![3, 1, 1]]
            .into_iter()
            .map(|w| ("B3", w)),
    );
    let mut subsets = 0;
    for (ty, w) in cases {
        let entry = lab.get(ty, &w);
        let (kl, cs) = &*entry;
        for mask in 0..1u64 << kl.system().rank() {
            let report = induced_cells_check(GeneratorSet(mask), kl, &cs.left).map_err(|e| e.to_string())?;
            ensure(report.holds(), || {
                format!("{ty}{w:?} I={}: {report:?}", GeneratorSet(mask))
            })?;
            subsets += 1;
        }
        ensure(descent_invariance_check(kl, &cs.left), || {
            format!("{ty}{w:?}: descent sets")
        })?;
    }
    Ok(format!(
        "{subsets} parabolic subsets; descent sets constant on left cells"
    ))
}

fn main() {
    let checks: Vec<(&str, CheckFn)> = vec![
        ("dihedral cells, equal parameters", dihedral_equal),
        ("dihedral cells, unequal parameters", dihedral_unequal),
        ("A2 cell module matrices", a2_module),
        ("canonical basis oracle", canonical_basis),
        ("type A against Robinson-Schensted", robinson_schensted),
        ("strong admissibility of Δ₂", strong_admissibility),
        ("left extensions are left cellular", left_extension_theorem),
        ("string reversal with p_s = p_t", tilde_corollary),
        ("left cells inside Vogan classes", vogan_coarseness),
        ("classical τ-invariant in type B", classic_tau),
        ("cells = two-sided cells ∧ Vogan classes", conjecture),
        ("order of V_Δ₂", group_orders),
        ("induction of cells from parabolics", induction),
    ];
    let mut lab = Lab {
        tables: BTreeMap::new(),
    };
    let mut failed = 0;
    let hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    for (i, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(|| check(&mut lab))).unwrap_or_else(|e| {
            Err(format!(
                "panic: {:?}",
                e.downcast_ref::<String>()
                    .map(String::as_str)
                    .or(e.downcast_ref::<&str>().copied())
            ))
        });
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:02} {name} [{t:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:02} {name} [{t:.2?}]: {why}", i + 1);
            }
        }
    }
    panic::set_hook(hook);
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
