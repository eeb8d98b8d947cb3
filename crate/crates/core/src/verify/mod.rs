//! Verification harness: compares the exact searches with the closed forms,
//! audits the constructions, and runs seeded property checks. Every run
//! produces a [`VerificationReport`]; individual failures are recorded in
//! it rather than returned as errors.

mod report;
mod rng;

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coloring::EdgeColoring;
use crate::constructions::{
    ar_c4multi_value, build_ar_lower_coloring, build_turan_c3_c4multi, build_turan_c4multi, f_value,
    turan_c3_c4multi_value, turan_c4multi_value,
};
use crate::error::{Error, Result};
use crate::graph::{PartSizes, PartitionedGraph, VertexRef};
use crate::patterns::{
    contains_c3, contains_c4multi, contains_pattern, enumerate_c4multi, find_disjoint_triangles,
    find_rainbow_copy, find_rainbow_family_f, PatternKind, DEFAULT_CYCLE_CAP, FAMILY_F,
};
use crate::search::space::EdgeSpace;
use crate::search::{
    exact_anti_ramsey_with, exact_turan_with, lemma1_bound, ForbiddenSet, Lemma1Variant, SearchConfig,
};

pub use report::{Environment, ReportEntry, Status, Summary, VerificationReport};

use rng::Rng;

/// Largest host accepted by [`lemma1_exhaustive`]; every subgraph is visited.
pub const LEMMA1_EDGE_CAP: usize = 21;
/// Largest host accepted by [`conjecture1_probe`].
pub const PROBE_EDGE_CAP: usize = 64;
/// Counterexamples recorded in full before the rest are only counted.
const MAX_RECORDED: usize = 10;

fn instance(parts: &PartSizes) -> String {
    format!("K({parts})")
}

fn environment(caps: &[(&str, usize)]) -> Environment {
    let mut env = Environment::default();
    for &(name, value) in caps {
        env.caps.insert(name.to_string(), value);
    }
    env
}

/// Triples `n1 >= n2 >= n3 >= 1` with `n1 + n2 + n3 <= max_sum`, in
/// lexicographic order.
pub fn triples(max_sum: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n1 in 1..max_sum {
        for n2 in 1..=n1 {
            for n3 in 1..=n2 {
                if n1 + n2 + n3 <= max_sum {
                    out.push((n1, n2, n3));
                }
            }
        }
    }
    out
}

/// Runs every closed-form check on each triple with `n1+n2+n3 <= max_sum`.
///
/// Instances run concurrently on `config`'s pool; entries appear in
/// [`triples`] order.
pub fn verify_theorems(max_sum: usize, config: &SearchConfig) -> Result<VerificationReport> {
    if max_sum > config.vertex_cap {
        return Err(Error::CapExceeded {
            what: "max-sum",
            cap: config.vertex_cap,
            required: max_sum,
        });
    }
    let inner = SearchConfig {
        threads: 0,
        ..config.clone()
    };
    let list = triples(max_sum);
    let per_triple: Vec<Vec<ReportEntry>> =
        config.install(|| list.par_iter().map(|&(a, b, c)| check_triple(a, b, c, &inner)).collect())?;
    let mut report = VerificationReport::new(environment(&[
        ("max_sum", max_sum),
        ("vertex_cap", config.vertex_cap),
        ("edge_cap", config.edge_cap),
        ("copy_cap", config.copy_cap),
    ]));
    for entry in per_triple.into_iter().flatten() {
        report.push(entry);
    }
    Ok(report)
}

fn search_failure(claim: &str, inst: &str, expected: usize, err: Error, elapsed: Duration) -> ReportEntry {
    let status = if err.is_cap() { Status::Skipped } else { Status::Fail };
    let computed = if err.is_cap() {
        format!("skipped: {err}")
    } else {
        format!("error: {err}")
    };
    ReportEntry::new(claim, inst, expected.to_string(), computed, status, elapsed)
}

fn check_triple(n1: usize, n2: usize, n3: usize, config: &SearchConfig) -> Vec<ReportEntry> {
    let parts = PartSizes::tripartite(n1, n2, n3).expect("sorted triple");
    let inst = instance(&parts);
    let mut out = Vec::new();

    let ex_c4 = turan_c4multi_value(n1, n2, n3).expect("sorted triple");
    let ex_c3c4 = turan_c3_c4multi_value(n1, n2, n3).expect("sorted triple");
    let ar = ar_c4multi_value(n1, n2, n3).expect("sorted triple");

    let mut computed_ex = None;
    let mut ex_witness = None;
    for (claim, forbid, expected) in [
        ("ex-c4multi", ForbiddenSet::C4MULTI, ex_c4),
        ("ex-c3-c4multi", ForbiddenSet::C3_C4MULTI, ex_c3c4),
    ] {
        let t = Instant::now();
        match exact_turan_with(&parts, forbid, config) {
            Ok(cert) => {
                if forbid == ForbiddenSet::C4MULTI {
                    computed_ex = Some(cert.value);
                    if let crate::search::Witness::Graph(g) = &cert.witness {
                        ex_witness = Some(g.clone());
                    }
                }
                out.push(ReportEntry::compare(claim, &inst, expected, cert.value, t.elapsed()));
            }
            Err(e) => out.push(search_failure(claim, &inst, expected, e, t.elapsed())),
        }
    }

    let t = Instant::now();
    let computed_ar = match exact_anti_ramsey_with(&parts, config) {
        Ok(cert) => {
            out.push(ReportEntry::compare("ar-c4multi", &inst, ar, cert.value, t.elapsed()));
            Some(cert.value)
        }
        Err(e) => {
            out.push(search_failure("ar-c4multi", &inst, ar, e, t.elapsed()));
            None
        }
    };

    let t = Instant::now();
    let g = build_turan_c4multi(n1, n2, n3).expect("sorted triple");
    out.push(ReportEntry::compare(
        "construction-c4multi",
        &inst,
        format!("{ex_c4} edges, C4-multi-free"),
        format!("{} edges, {}", g.edge_count(), freeness(&g, false)),
        t.elapsed(),
    ));

    let t = Instant::now();
    let g = build_turan_c3_c4multi(n1, n2, n3).expect("sorted triple");
    out.push(ReportEntry::compare(
        "construction-c3-c4multi",
        &inst,
        format!("{ex_c3c4} edges, C3-free, C4-multi-free"),
        format!("{} edges, {}", g.edge_count(), freeness(&g, true)),
        t.elapsed(),
    ));

    let t = Instant::now();
    out.push(lower_coloring_entry(n1, n2, n3, t));

    if let (Some(a), Some(e)) = (computed_ar, computed_ex) {
        let status = if a <= e { Status::Pass } else { Status::Fail };
        out.push(ReportEntry::new(
            "ar-at-most-ex",
            &inst,
            "ar <= ex(C4-multi)",
            format!("ar = {a}, ex = {e}"),
            status,
            Duration::ZERO,
        ));
    }

    if let Some(g) = ex_witness {
        let t = Instant::now();
        let computed = match find_disjoint_triangles(&g) {
            Some((a, b)) => format!("{a} and {b}"),
            None => "none".to_string(),
        };
        out.push(ReportEntry::new(
            "disjoint-triangles-probe",
            &inst,
            "two vertex-disjoint triangles in the extremal witness",
            computed,
            Status::Info,
            t.elapsed(),
        ));
    }
    out
}

fn freeness(g: &PartitionedGraph, with_c3: bool) -> String {
    let mut found = Vec::new();
    if with_c3 {
        found.push(match contains_c3(g) {
            Some(copy) => format!("contains {copy}"),
            None => "C3-free".to_string(),
        });
    }
    found.push(match contains_c4multi(g) {
        Some(copy) => format!("contains {copy}"),
        None => "C4-multi-free".to_string(),
    });
    found.join(", ")
}

/// Colour count and an exhaustive rainbow audit over every multipartite
/// 4-cycle of the host.
pub(crate) fn lower_coloring_entry(n1: usize, n2: usize, n3: usize, started: Instant) -> ReportEntry {
    let parts = PartSizes::tripartite(n1, n2, n3).expect("sorted triple");
    let ar = ar_c4multi_value(n1, n2, n3).expect("sorted triple");
    let c = build_ar_lower_coloring(n1, n2, n3).expect("sorted triple");
    let rainbow = enumerate_c4multi(c.host()).into_iter().find(|k| k.is_rainbow(&c));
    ReportEntry::compare(
        "ar-lower-coloring",
        instance(&parts),
        format!("{ar} colours, no rainbow C4-multi"),
        format!(
            "{} colours, {}",
            c.color_count(),
            match rainbow {
                Some(copy) => format!("rainbow {copy}"),
                None => "no rainbow C4-multi".to_string(),
            }
        ),
        started.elapsed(),
    )
}

enum Trial {
    RainbowC4,
    /// No rainbow member; carries the colour count.
    NoRainbowMember(usize),
    Counterexample(String),
}

/// Random colourings of the complete host: whenever no multipartite 4-cycle
/// is rainbow, no other member of the family may be rainbow either.
///
/// Two seeded generators feed the check, both drawing from one ChaCha8
/// stream seeded by `seed`, so reports replay exactly.
///
/// * i.i.d.: trial `t` draws a palette size `k` uniformly from
///   `1..=max_colors`, then colours every host edge (canonical order)
///   uniformly from `0..k`.
/// * merging: start from the rainbow colouring; while some multipartite
///   4-cycle is rainbow, pick one uniformly (canonical copy order), pick two
///   of its edges uniformly, and recolour the second edge's class with the
///   first edge's colour. These end with many colours and no rainbow
///   4-cycle, which is where the property has content.
///
/// Colour ids are renumbered by first use before checking.
pub fn lemma2_property(parts: &PartSizes, trials: usize, max_colors: usize, seed: u64) -> Result<VerificationReport> {
    parts.require_tripartite()?;
    if max_colors == 0 {
        return Err(Error::Precondition("max-colors must be positive".into()));
    }
    let m = parts.complete_edge_count();
    let mut rng = Rng::new(seed);
    let mut report = VerificationReport::new(environment(&[("trials", trials), ("max_colors", max_colors)]));

    let started = Instant::now();
    let draws: Vec<Vec<u32>> = (0..trials)
        .map(|_| {
            let k = 1 + rng.below(max_colors);
            (0..m).map(|_| rng.below(k) as u32).collect()
        })
        .collect();
    let inst = format!("{} seed={seed} trials={trials} colours<={max_colors}", instance(parts));
    lemma2_tally(&mut report, "lemma2", &inst, parts, &draws, started);

    let started = Instant::now();
    let host = PartitionedGraph::complete(parts.clone());
    let rainbow = EdgeColoring::rainbow(parts.clone());
    let quads: Vec<[usize; 4]> = enumerate_c4multi(&host)
        .iter()
        .map(|c| std::array::from_fn(|i| rainbow.edge_index(c.edges[i]).expect("host edge")))
        .collect();
    let merged: Vec<Vec<u32>> = (0..trials).map(|_| merge_until_safe(m, &quads, &mut rng)).collect();
    let inst = format!("{} seed={seed} trials={trials} merging", instance(parts));
    lemma2_tally(&mut report, "lemma2-merging", &inst, parts, &merged, started);
    Ok(report)
}

fn merge_until_safe(m: usize, quads: &[[usize; 4]], rng: &mut Rng) -> Vec<u32> {
    let mut colors: Vec<u32> = (0..m as u32).collect();
    loop {
        let live: Vec<&[usize; 4]> = quads
            .iter()
            .filter(|q| {
                let c = q.map(|e| colors[e]);
                (0..4).all(|i| (i + 1..4).all(|j| c[i] != c[j]))
            })
            .collect();
        if live.is_empty() {
            return colors;
        }
        let q = live[rng.below(live.len())];
        let a = rng.below(4);
        let b = (a + 1 + rng.below(3)) % 4;
        let (keep, drop) = (colors[q[a]], colors[q[b]]);
        for c in &mut colors {
            if *c == drop {
                *c = keep;
            }
        }
    }
}

fn lemma2_tally(
    report: &mut VerificationReport,
    claim: &str,
    inst: &str,
    parts: &PartSizes,
    draws: &[Vec<u32>],
    started: Instant,
) {
    let outcomes: Vec<Trial> = draws
        .par_iter()
        .map(|colors| {
            let c = EdgeColoring::from_colors(parts.clone(), colors).expect("total colouring");
            lemma2_trial(&c)
        })
        .collect();
    let mut without_c4 = 0;
    // the smallest member besides the 4-cycle, two triangles sharing a vertex, has 6 edges
    let mut rich = 0;
    let mut most = 0;
    let mut failures = Vec::new();
    for (t, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Trial::RainbowC4 => {}
            Trial::NoRainbowMember(colors) => {
                without_c4 += 1;
                rich += usize::from(colors >= 6);
                most = most.max(colors);
            }
            Trial::Counterexample(text) => {
                without_c4 += 1;
                failures.push((t, text));
            }
        }
    }
    let status = if failures.is_empty() { Status::Pass } else { Status::Fail };
    report.push(ReportEntry::new(
        claim,
        inst,
        "0 counterexamples",
        format!(
            "{} counterexamples; {without_c4} of {} colourings had no rainbow C4-multi, \
             {rich} of those with at least 6 colours (most {most})",
            failures.len(),
            draws.len()
        ),
        status,
        started.elapsed(),
    ));
    for (t, text) in failures.into_iter().take(MAX_RECORDED) {
        report.push(ReportEntry::new(
            format!("{claim}-counterexample"),
            format!("{inst} trial={t}"),
            "a rainbow C4-multi",
            text,
            Status::Fail,
            Duration::ZERO,
        ));
    }
}

fn lemma2_trial(c: &EdgeColoring) -> Trial {
    let found = find_rainbow_copy(c.host(), c, PatternKind::C4Multi).expect("same parts");
    if found.is_some() {
        return Trial::RainbowC4;
    }
    match find_rainbow_family_f(c, &FAMILY_F[1..]) {
        None => Trial::NoRainbowMember(c.color_count()),
        Some((kind, copy)) => Trial::Counterexample(format!("rainbow {kind} {copy}\n{}", c.to_text())),
    }
}

/// Visits every subgraph of the complete host, keeps those meeting the
/// premise for `x_part` and the freeness `variant` asks for, and checks the
/// edge bound on each. Each kept subgraph is also handed to
/// [`lemma1_bound`], which must accept exactly the kept ones.
pub fn lemma1_exhaustive(parts: &PartSizes, x_part: usize, variant: Lemma1Variant) -> Result<VerificationReport> {
    parts.require_tripartite()?;
    if x_part >= 3 {
        return Err(Error::Precondition(format!("part {x_part} does not exist")));
    }
    let m = parts.complete_edge_count();
    if m > LEMMA1_EDGE_CAP {
        return Err(Error::CapExceeded {
            what: "host edge count for exhaustive subgraph enumeration",
            cap: LEMMA1_EDGE_CAP,
            required: m,
        });
    }
    let started = Instant::now();
    let space = EdgeSpace::new(parts)?;
    let mut copies = space.c4_masks(usize::MAX)?;
    if variant == Lemma1Variant::C3C4Free {
        copies.extend(space.c3_masks());
    }
    let (y, z) = match x_part {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let sizes = parts.sizes();
    let bound = sizes[y] * sizes[z]
        + sizes[x_part]
            * match variant {
                Lemma1Variant::C4Free => 2,
                Lemma1Variant::C3C4Free => 1,
            };
    // per X vertex: its edges into Y and into Z
    let premise: Vec<(u64, u64)> = (0..sizes[x_part])
        .map(|i| {
            let x = VertexRef::new(x_part, i);
            let into = |p: usize| {
                space
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.touches(x) && (e.u.part == p || e.v.part == p))
                    .fold(0u64, |acc, (k, _)| acc | 1 << k)
            };
            (into(y), into(z))
        })
        .collect();
    let cross_check_all = m <= 16;

    #[derive(Default)]
    struct Tally {
        admissible: u64,
        max_edges: u32,
        violations: Vec<u64>,
        disagreements: Vec<u64>,
    }
    let tally = (0..1u64 << m)
        .into_par_iter()
        .fold(Tally::default, |mut acc, mask| {
            let kept = premise.iter().all(|&(a, b)| mask & a != 0 && mask & b != 0)
                && copies.iter().all(|&c| mask & c != c);
            if kept {
                acc.admissible += 1;
                acc.max_edges = acc.max_edges.max(mask.count_ones());
                if mask.count_ones() as usize > bound {
                    acc.violations.push(mask);
                }
            }
            if kept || cross_check_all {
                let agrees = match lemma1_bound(&space.graph_of(mask), x_part, variant) {
                    Ok(out) => kept && out.bound == bound && out.edges == mask.count_ones() as usize,
                    Err(_) => !kept,
                };
                if !agrees {
                    acc.disagreements.push(mask);
                }
            }
            acc
        })
        .reduce(Tally::default, |mut a, b| {
            a.admissible += b.admissible;
            a.max_edges = a.max_edges.max(b.max_edges);
            a.violations.extend(b.violations);
            a.disagreements.extend(b.disagreements);
            a
        });

    let mut report = VerificationReport::new(environment(&[("lemma1_edge_cap", LEMMA1_EDGE_CAP)]));
    let inst = format!("{} X=V{} ({variant})", instance(parts), x_part + 1);
    let mut violations = tally.violations;
    violations.sort_unstable();
    let mut disagreements = tally.disagreements;
    disagreements.sort_unstable();
    let status = if violations.is_empty() && disagreements.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    report.push(ReportEntry::new(
        format!("lemma1-{variant}"),
        &inst,
        format!("0 violations of e <= {bound}"),
        format!(
            "{} violations over {} subgraphs ({} admissible, largest {} edges, {} detector disagreements)",
            violations.len(),
            1u64 << m,
            tally.admissible,
            tally.max_edges,
            disagreements.len()
        ),
        status,
        started.elapsed(),
    ));
    for (claim, masks) in [("lemma1-violation", &violations), ("lemma1-disagreement", &disagreements)] {
        for &mask in masks.iter().take(MAX_RECORDED) {
            report.push(ReportEntry::new(
                claim,
                &inst,
                format!("e <= {bound} and detectors agree"),
                space.graph_of(mask).to_text(),
                Status::Fail,
                Duration::ZERO,
            ));
        }
    }
    Ok(report)
}

/// Samples subgraphs with `f + 1` edges and looks for a multipartite cycle
/// of length at most `floor(3r/2)` in each.
///
/// Samples without one are re-checked by plain exhaustive path search and
/// reported. For three parts every sample must contain one; for more parts
/// the count is only recorded, with [`Status::Info`].
pub fn conjecture1_probe(parts: &PartSizes, samples: usize, seed: u64) -> Result<VerificationReport> {
    let r = parts.count();
    let m = parts.complete_edge_count();
    if m > PROBE_EDGE_CAP {
        return Err(Error::CapExceeded {
            what: "host edge count for the cycle probe",
            cap: PROBE_EDGE_CAP,
            required: m,
        });
    }
    let max_len = 3 * r / 2;
    if max_len > DEFAULT_CYCLE_CAP {
        return Err(Error::CapExceeded {
            what: "cycle length floor(3r/2)",
            cap: DEFAULT_CYCLE_CAP,
            required: max_len,
        });
    }
    let f = f_value(parts)?;
    let mut report = VerificationReport::new(environment(&[("probe_edge_cap", PROBE_EDGE_CAP)]));
    if samples == 0 {
        return Ok(report);
    }
    let started = Instant::now();
    let inst = format!("{} seed={seed} samples={samples}", instance(parts));
    let asserted = r == 3;
    if f + 1 > m {
        report.push(ReportEntry::new(
            "conjecture1",
            &inst,
            format!("subgraphs with {} edges", f + 1),
            format!("none: the host has only {m} edges"),
            Status::Skipped,
            started.elapsed(),
        ));
        return Ok(report);
    }
    let host_edges: Vec<_> = PartitionedGraph::complete(parts.clone()).edges().collect();
    let mut rng = Rng::new(seed);
    let picks: Vec<Vec<usize>> = (0..samples).map(|_| rng.sample(m, f + 1)).collect();
    let found: Vec<Option<(bool, PartitionedGraph)>> = picks
        .par_iter()
        .map(|pick| {
            let g = PartitionedGraph::from_edges(parts.clone(), pick.iter().map(|&k| host_edges[k]))
                .expect("host edges");
            let hit = (3..=max_len).any(|len| contains_pattern(&g, PatternKind::MultiCycle(len)).is_some());
            if hit {
                None
            } else {
                // a brute-force hit here means the detector missed a cycle
                Some((brute_force_multicycle(&g, max_len), g))
            }
        })
        .collect();

    let mut candidates = Vec::new();
    let mut misses = Vec::new();
    for (s, item) in found.into_iter().enumerate() {
        match item {
            Some((false, g)) => candidates.push((s, g)),
            Some((true, g)) => misses.push((s, g)),
            None => {}
        }
    }
    let computed = format!(
        "{} candidates among {samples} samples with {} edges (cycle length <= {max_len})",
        candidates.len(),
        f + 1
    );
    let status = match (asserted, candidates.is_empty() && misses.is_empty()) {
        (_, false) if !misses.is_empty() => Status::Fail,
        (true, true) => Status::Pass,
        (true, false) => Status::Fail,
        (false, _) => Status::Info,
    };
    let expected = if asserted {
        "0 candidates".to_string()
    } else {
        "exploratory; no expected count".to_string()
    };
    report.push(ReportEntry::new("conjecture1", &inst, expected, computed, status, started.elapsed()));
    for (s, g) in misses.into_iter().take(MAX_RECORDED) {
        report.push(ReportEntry::new(
            "conjecture1-detector-miss",
            format!("{inst} sample={s}"),
            "detector agrees with exhaustive search",
            g.to_text(),
            Status::Fail,
            Duration::ZERO,
        ));
    }
    for (s, g) in candidates.into_iter().take(MAX_RECORDED) {
        report.push(ReportEntry::new(
            "conjecture1-candidate",
            format!("{inst} sample={s}"),
            format!("a multipartite cycle of length <= {max_len}"),
            g.to_text(),
            if asserted { Status::Fail } else { Status::Info },
            Duration::ZERO,
        ));
    }
    Ok(report)
}

/// Exhaustive search over simple paths from every start vertex, with no
/// canonical-form or symmetry pruning.
fn brute_force_multicycle(g: &PartitionedGraph, max_len: usize) -> bool {
    fn extend(g: &PartitionedGraph, path: &mut Vec<VertexRef>, max_len: usize) -> bool {
        let last = *path.last().expect("nonempty path");
        for v in g.vertices() {
            if !g.has_edge(last, v) {
                continue;
            }
            if v == path[0] && path.len() >= 3 {
                let mut seen: Vec<usize> = path.iter().map(|p| p.part).collect();
                seen.sort_unstable();
                seen.dedup();
                if seen.len() >= 3 {
                    return true;
                }
            }
            if path.len() < max_len && !path.contains(&v) {
                path.push(v);
                if extend(g, path, max_len) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    g.vertices().any(|s| extend(g, &mut vec![s], max_len))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(s: &[usize]) -> PartSizes {
        PartSizes::new(s).unwrap()
    }

    #[test]
    fn triple_listing() {
        assert_eq!(triples(3), vec![(1, 1, 1)]);
        assert_eq!(triples(5), vec![(1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 1, 1)]);
    }

    #[test]
    fn closed_forms_smallest_host() {
        let report = verify_theorems(3, &SearchConfig::default()).unwrap();
        assert_eq!(report.summary().fail, 0);
        assert!(report.entries().iter().all(|e| e.instance == "K(1,1,1)"));
        assert_eq!(report.summary().pass, 7);
    }

    #[test]
    fn closed_forms_mark_skips() {
        let config = SearchConfig {
            edge_cap: 5,
            ..SearchConfig::default()
        };
        let report = verify_theorems(5, &config).unwrap();
        assert!(!report.failed());
        let ar: Vec<_> = report.entries().iter().filter(|e| e.claim == "ar-c4multi").collect();
        assert_eq!(ar.len(), 4);
        // K(1,1,1) and K(2,1,1) have at most 5 edges
        assert!(ar[..2].iter().all(|e| e.status == Status::Pass));
        assert!(ar[2..].iter().all(|e| e.status == Status::Skipped));
        assert!(verify_theorems(13, &SearchConfig::default()).unwrap_err().is_cap());
    }

    #[test]
    fn rainbow_property_small_and_replayable() {
        let a = lemma2_property(&parts(&[2, 2, 2]), 300, 12, 7).unwrap();
        assert!(!a.failed(), "{}", a.to_table());
        let b = lemma2_property(&parts(&[2, 2, 2]), 300, 12, 7).unwrap();
        assert_eq!(a.without_timings(), b.without_timings());
    }

    #[test]
    fn rainbow_property_monochromatic_is_vacuous() {
        let c = EdgeColoring::monochromatic(parts(&[3, 2, 2]));
        assert!(matches!(lemma2_trial(&c), Trial::NoRainbowMember(1)));
        let report = lemma2_property(&parts(&[3, 2, 2]), 20, 1, 0).unwrap();
        assert!(report.entries()[0].computed.contains("20 of 20"));
    }

    #[test]
    fn edge_bound_examples() {
        for (p, x, v) in [
            (&[2, 2, 2][..], 0, Lemma1Variant::C4Free),
            (&[2, 2, 1][..], 2, Lemma1Variant::C3C4Free),
            (&[1, 1, 1][..], 0, Lemma1Variant::C4Free),
        ] {
            let report = lemma1_exhaustive(&parts(p), x, v).unwrap();
            assert!(!report.failed(), "{}", report.to_table());
        }
        let report = lemma1_exhaustive(&parts(&[2, 2, 2]), 0, Lemma1Variant::C4Free).unwrap();
        assert!(report.entries()[0].computed.contains("over 4096 subgraphs"));
        assert!(lemma1_exhaustive(&parts(&[4, 4, 1]), 0, Lemma1Variant::C4Free).unwrap_err().is_cap());
    }

    #[test]
    fn probe_examples() {
        let report = conjecture1_probe(&parts(&[2, 2, 2]), 200, 3).unwrap();
        assert_eq!(report.summary().pass, 1, "{}", report.to_table());
        assert!(conjecture1_probe(&parts(&[2, 2, 2]), 0, 3).unwrap().entries().is_empty());
        let four = conjecture1_probe(&parts(&[2, 2, 2, 2]), 50, 3).unwrap();
        assert!(!four.failed());
        assert_eq!(four.entries()[0].status, Status::Info);
    }

    #[test]
    fn brute_force_cycles() {
        let p = parts(&[2, 2, 2]);
        assert!(brute_force_multicycle(&PartitionedGraph::complete(p.clone()), 3));
        assert!(!brute_force_multicycle(&PartitionedGraph::empty(p.clone()), 9));
        // a 4-cycle inside two parts is not multipartite
        let e = |a: (usize, usize), b: (usize, usize)| {
            crate::graph::Edge::new(VertexRef::new(a.0, a.1), VertexRef::new(b.0, b.1)).unwrap()
        };
        let g = PartitionedGraph::from_edges(
            p,
            [e((0, 0), (1, 0)), e((1, 0), (0, 1)), e((0, 1), (1, 1)), e((1, 1), (0, 0))],
        )
        .unwrap();
        assert!(!brute_force_multicycle(&g, 9));
    }
}
