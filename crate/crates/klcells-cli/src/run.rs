use anyhow::Context;
use klcells::cellmaps::{
    delta2_family, generated_group_order, left_extend, tilde_pair, verify_cellular, verify_right_preservation, MapKind,
};
use klcells::vogan::{
    classic_tau_classes, coarseness_check, rho_descent, rho_enhanced, tau_refine, verify_conjecture_with,
};
use klcells::{AdmissiblePair, CellPartition, CellSet, Element, KLTable, LeftExtension};

use crate::cache::Status;
use crate::job::{input_err, Command, DeltaFamily, Job, Kind, Rho};
use crate::report::Report;

/// Where the KL table comes from.
pub struct Source<'a> {
    pub cache: &'a crate::cache::Cache,
    pub verify_cache: bool,
}

pub fn run(job: &Job, src: &Source) -> anyhow::Result<Report> {
    let mut report = Report::default();
    report.summary("command", job.command);
    report.summary("group", &job.group_name);
    report.summary("weights", format!("{:?}", job.weights.as_slice()));
    report.summary("labels", job.labels.join(","));
    report.summary("size", job.system.size());

    if job.command == Command::GroupOrder {
        group_order(job, &mut report)?;
        return Ok(report);
    }

    let (table, cells, status) = src
        .cache
        .load_or_compute(&job.system, &job.weights, src.verify_cache)
        .context("computing the KL table")?;
    if status != Status::Disabled {
        eprintln!("cache: {status}");
    }
    match job.command {
        Command::Cells => cells_report(job, &cells, &mut report),
        Command::Klpolys => klpolys(job, &table, &mut report)?,
        Command::Vogan => vogan(job, &table, &cells, &mut report)?,
        Command::AdmissibleCheck => admissible_check(job, &table, &cells, &mut report)?,
        Command::VerifyConjecture => conjecture(job, &table, &cells, &mut report)?,
        Command::GroupOrder => unreachable!(),
    }
    Ok(report)
}

fn words(job: &Job, elements: &[Element]) -> String {
    elements.iter().map(|&w| job.word(w)).collect::<Vec<_>>().join(",")
}

/// Blocks with sorted contents, ordered by their smallest element.
fn sorted_blocks(blocks: impl IntoIterator<Item = Vec<Element>>) -> Vec<Vec<Element>> {
    let mut out: Vec<Vec<Element>> = blocks
        .into_iter()
        .map(|mut b| {
            b.sort();
            b
        })
        .collect();
    out.sort();
    out
}

fn partition(cells: &CellSet, kind: Kind) -> (&'static str, &CellPartition) {
    match kind {
        Kind::Left => ("left", &cells.left),
        Kind::Right => ("right", &cells.right),
        Kind::TwoSided => ("two-sided", &cells.two_sided),
    }
}

fn cells_report(job: &Job, cells: &CellSet, report: &mut Report) {
    let mut kinds = job.options.kinds.clone().unwrap_or_else(|| vec![Kind::Left]);
    kinds.sort();
    kinds.dedup();
    for kind in kinds {
        let (name, p) = partition(cells, kind);
        let blocks = sorted_blocks(p.blocks().iter().cloned());
        for (i, b) in blocks.iter().enumerate() {
            report.record(&["cell", name, &i.to_string(), &b.len().to_string(), &words(job, b)]);
        }
        report.summary(&format!("{name}-cells"), blocks.len());
    }
}

fn klpolys(job: &Job, table: &KLTable, report: &mut Report) -> anyhow::Result<()> {
    let targets: Vec<Element> = match &job.options.elements {
        Some(list) => list.iter().map(|w| job.parse_word(w)).collect::<anyhow::Result<_>>()?,
        None => job.system.elements().collect(),
    };
    let (mut np, mut nm) = (0usize, 0usize);
    for &w in &targets {
        for (y, p) in table.p_row(w) {
            if y != w && !p.is_zero() {
                report.record(&["p", &job.word(y), &job.word(w), &p.to_string()]);
                np += 1;
            }
        }
        if job.options.mu {
            for s in 0..job.system.rank() {
                for (z, m) in table.m_row(s, w) {
                    report.record(&["m", &job.labels[s], &job.word(z), &job.word(w), &m.to_string()]);
                    nm += 1;
                }
            }
        }
    }
    report.summary("elements", targets.len());
    report.summary("nonzero-p", np);
    if job.options.mu {
        report.summary("nonzero-m", nm);
    }
    Ok(())
}

fn map_kind(kind: MapKind) -> &'static str {
    match kind {
        MapKind::DeltaEqual => "delta",
        MapKind::DeltaUnequal => "delta<",
        MapKind::Tilde => "tilde",
        MapKind::Identity => "identity",
        MapKind::Explicit => "explicit",
    }
}

fn pair_name(job: &Job, pair: &AdmissiblePair) -> String {
    match pair.generators {
        Some((s, t)) => format!("{},{}", job.labels[s], job.labels[t]),
        None => pair
            .subset()
            .iter()
            .map(|s| job.labels[s].as_str())
            .collect::<Vec<_>>()
            .join(","),
    }
}

/// The requested family of admissible pairs, each with its flags set.
fn family(job: &Job, which: DeltaFamily) -> anyhow::Result<Vec<AdmissiblePair>> {
    let sys = &job.system;
    let p = &job.weights;
    let mut out = Vec::new();
    match which {
        DeltaFamily::Delta2 => out = delta2_family(sys, p)?,
        DeltaFamily::Tilde => {
            for s in 0..sys.rank() {
                for t in s + 1..sys.rank() {
                    if sys.matrix().get(s, t) >= 3 && p.get(s) == p.get(t) {
                        let mut pair = tilde_pair(sys, p, s, t)?;
                        pair.verify(p)?;
                        out.push(pair);
                    }
                }
            }
        }
        DeltaFamily::Explicit => {
            for entry in &job.options.maps {
                let subset = job.subset(&entry.generators)?;
                let map = entry
                    .images
                    .iter()
                    .map(|[a, b]| Ok((job.parse_word(a)?, job.parse_word(b)?)))
                    .collect::<anyhow::Result<Vec<_>>>()?;
                let mut pair = AdmissiblePair::explicit(sys, subset, &map)
                    .map_err(|e| input_err(format!("map on {}: {e}", entry.generators.join(","))))?;
                pair.verify(p)?;
                out.push(pair);
            }
        }
    }
    Ok(out)
}

fn extend_all(job: &Job, pairs: &[AdmissiblePair]) -> anyhow::Result<Vec<LeftExtension>> {
    Ok(pairs
        .iter()
        .map(|pair| left_extend(pair, &job.system))
        .collect::<klcells::Result<_>>()?)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn vogan(job: &Job, table: &KLTable, cells: &CellSet, report: &mut Report) -> anyhow::Result<()> {
    let o = &job.options;
    let classes = if o.classic {
        report.summary("maps", "classic");
        classic_tau_classes(table)?
    } else {
        let which = o.delta.unwrap_or(DeltaFamily::Delta2);
        let rho = match o.rho.unwrap_or(Rho::Enhanced) {
            Rho::Descent => rho_descent(table),
            Rho::Enhanced => rho_enhanced(table),
        };
        let pairs = family(job, which)?;
        for pair in &pairs {
            let flags = pair.flags.unwrap_or_default();
            report.record(&[
                "map",
                &pair_name(job, pair),
                map_kind(pair.kind),
                yes(flags.strongly_admissible()),
            ]);
        }
        report.summary("maps", format!("{which:?}").to_lowercase());
        report.summary("rho", &rho.name);
        tau_refine(&extend_all(job, &pairs)?, &rho)
    };
    let blocks = sorted_blocks(classes.classes());
    for (i, b) in blocks.iter().enumerate() {
        report.record(&["class", &i.to_string(), &b.len().to_string(), &words(job, b)]);
    }
    report.summary("classes", blocks.len());
    report.summary("rounds", classes.n0);
    report.summary("left-cells", cells.left.num_blocks());
    report.summary(
        "left-cells-inside-classes",
        yes(coarseness_check(&classes, &cells.left)),
    );
    Ok(())
}

fn admissible_check(job: &Job, table: &KLTable, cells: &CellSet, report: &mut Report) -> anyhow::Result<()> {
    let which = job.options.delta.unwrap_or(DeltaFamily::Delta2);
    let pairs = family(job, which)?;
    for pair in &pairs {
        let name = pair_name(job, pair);
        let flags = pair.flags.unwrap_or_default();
        let ext = left_extend(pair, &job.system)?;
        let cellular = verify_cellular(ext.as_slice(), table, &cells.left);
        let right = verify_right_preservation(&ext, &cells.right);
        report.record(&[
            "pair",
            &name,
            map_kind(pair.kind),
            yes(flags.a1),
            yes(flags.a2),
            yes(flags.a3),
            yes(cellular.holds()),
            yes(right),
        ]);
        if !flags.strongly_admissible() {
            report.fail(format!("{name}: not strongly admissible ({flags:?})"));
        }
        if let Some(f) = cellular.failure {
            report.fail(format!("{name}: extension is not left cellular ({f:?})"));
        }
        if !right {
            report.fail(format!("{name}: extension moves an element to another right cell"));
        }
    }
    report.summary("maps", format!("{which:?}").to_lowercase());
    report.summary("pairs", pairs.len());
    Ok(())
}

fn conjecture(job: &Job, table: &KLTable, cells: &CellSet, report: &mut Report) -> anyhow::Result<()> {
    let r = verify_conjecture_with(table, cells)?;
    for (x, y) in &r.witnesses {
        report.record(&["witness", &job.word(*x), &job.word(*y)]);
    }
    report.summary("left-cells", r.num_left_cells);
    report.summary("two-sided-cells", r.num_two_sided_cells);
    report.summary("vogan-classes", r.num_vogan_classes);
    report.summary("meet-classes", r.num_meet_classes);
    report.summary("rounds", r.n0);
    report.summary("left-cells-inside-classes", yes(r.coarse));
    report.summary("conjecture", if r.holds { "holds" } else { "fails" });
    if !r.holds {
        report.fail("left cells differ from two-sided cells ∧ Vogan classes");
    }
    Ok(())
}

fn group_order(job: &Job, report: &mut Report) -> anyhow::Result<()> {
    let which = job.options.delta.unwrap_or(DeltaFamily::Delta2);
    let pairs = family(job, which)?;
    let exts = extend_all(job, &pairs)?;
    let order = generated_group_order(&exts);
    for pair in &pairs {
        report.record(&["generator", &pair_name(job, pair), map_kind(pair.kind)]);
    }
    report.summary("maps", format!("{which:?}").to_lowercase());
    report.summary("order", &order.order);
    report.summary("factorization", &order);
    if let Some(expect) = &job.options.expect {
        let e = expect.trim();
        if e != order.order.to_string() && e != order.to_string() {
            report.fail(format!("expected order {e}, got {order}"));
        }
    }
    Ok(())
}
