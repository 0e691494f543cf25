//! Instance corpora for property sweeps and the conjecture verifier.
//!
//! Every corpus is deterministic: exhaustive families are deduplicated up to
//! isomorphism, random families are driven by a seeded ChaCha stream.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chordal::{dual_is_cm, is_chordal, property_star_exists, MAX_PEO_SEARCH};
use crate::cm::{cm_auto, construction_shape, is_cm_graph_oracle, ConstructionHint, ConstructionKind};
use crate::covers::is_unmixed;
use crate::error::{Error, Result};
use crate::graph::{add_whiskers, SourceWeights, VoGraph, WhiskerRule};
use crate::simplicial::Field;

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub graph: VoGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Exhaustive,
    Cycles,
    Paths,
    Whiskers,
    Random,
}

#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub family: Family,
    pub max_n: usize,
    pub max_w: u32,
    pub count: usize,
    pub seed: u64,
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn build(n: usize, weights: Vec<u32>, arcs: Vec<(usize, usize)>) -> VoGraph {
    VoGraph::from_indexed(labels(n), weights, arcs, SourceWeights::Normalize).expect("generated graph is valid")
}

/// Lexicographically least relabelling of weights and arcs.
pub fn canonical_key(g: &VoGraph) -> (Vec<u32>, Vec<(usize, usize)>) {
    let n = g.n();
    (0..n)
        .permutations(n)
        .map(|p| {
            let w: Vec<u32> = {
                let mut w = vec![0; n];
                for i in 0..n {
                    w[p[i]] = g.weight(i);
                }
                w
            };
            let mut a: Vec<(usize, usize)> = g.arcs().iter().map(|&(u, v)| (p[u], p[v])).collect();
            a.sort_unstable();
            (w, a)
        })
        .min()
        .unwrap_or_default()
}

/// Every orientation and weighting (weights `1..=max_w`) of each edge set,
/// up to isomorphism. Sources keep weight 1.
fn orient_all(n: usize, edge_sets: &[Vec<(usize, usize)>], max_w: u32, prefix: &str) -> Vec<Instance> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for edges in edge_sets {
        let m = edges.len();
        for mask in 0u32..(1 << m) {
            let arcs: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(k, &(u, v))| if mask >> k & 1 == 1 { (v, u) } else { (u, v) })
                .collect();
            let has_in: Vec<bool> = (0..n).map(|i| arcs.iter().any(|&(_, v)| v == i)).collect();
            let free: Vec<usize> = (0..n).filter(|&i| has_in[i]).collect();
            for ws in (0..free.len()).map(|_| 1..=max_w).multi_cartesian_product() {
                let mut weights = vec![1; n];
                for (&i, &w) in free.iter().zip(&ws) {
                    weights[i] = w;
                }
                let g = build(n, weights, arcs.clone());
                if seen.insert(canonical_key(&g)) {
                    out.push(Instance { id: format!("{prefix}-{}", out.len()), graph: g });
                }
            }
            if free.is_empty() {
                let g = build(n, vec![1; n], arcs.clone());
                if seen.insert(canonical_key(&g)) {
                    out.push(Instance { id: format!("{prefix}-{}", out.len()), graph: g });
                }
            }
        }
    }
    out
}

/// All graphs on `2..=max_n` vertices without isolated vertices.
pub fn exhaustive(max_n: usize, max_w: u32) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let sets: Vec<Vec<(usize, usize)>> = (0u32..(1 << pairs.len()))
            .map(|mask| pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect::<Vec<_>>())
            .filter(|e: &Vec<(usize, usize)>| (0..n).all(|i| e.iter().any(|&(u, v)| u == i || v == i)))
            .collect();
        out.extend(orient_all(n, &sets, max_w, &format!("exh{n}")));
    }
    out
}

/// Oriented weighted cycles `C_min_n..=C_max_n`.
pub fn cycles(min_n: usize, max_n: usize, max_w: u32) -> Vec<Instance> {
    (min_n.max(3)..=max_n)
        .flat_map(|n| {
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            orient_all(n, &[edges], max_w, &format!("c{n}"))
        })
        .collect()
}

/// Oriented weighted paths on `2..=max_vertices` vertices.
pub fn paths(max_vertices: usize, max_w: u32) -> Vec<Instance> {
    (2..=max_vertices)
        .flat_map(|n| {
            let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            orient_all(n, &[edges], max_w, &format!("p{n}"))
        })
        .collect()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, max_w: u32, allow_isolated: bool) -> VoGraph {
    loop {
        let mut arcs = Vec::new();
        for (u, v) in (0..n).tuple_combinations() {
            if rng.gen_bool(0.5) {
                arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
        let touched = |i: usize| arcs.iter().any(|&(u, v)| u == i || v == i);
        if !allow_isolated && (arcs.is_empty() || !(0..n).all(touched)) {
            continue;
        }
        let weights = (0..n).map(|_| rng.gen_range(1..=max_w)).collect();
        return build(n, weights, arcs);
    }
}

/// `count` graphs on `2..=max_n` vertices, no isolated vertices.
pub fn random(count: usize, max_n: usize, max_w: u32, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let n = rng.gen_range(2..=max_n.max(2));
            Instance { id: format!("rand{seed}-{k}"), graph: random_graph(&mut rng, n, max_w, false) }
        })
        .collect()
}

/// `count` whiskered graphs over random bases on `1..=max_base_n` vertices.
pub fn whiskered(count: usize, max_base_n: usize, max_w: u32, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let n = rng.gen_range(1..=max_base_n.max(1));
            let base = random_graph(&mut rng, n, max_w, true);
            let mut rule = WhiskerRule::default();
            for l in base.labels() {
                if rng.gen_bool(0.5) {
                    rule.outward.insert(l.clone());
                    rule.leaf_weights.insert(l.clone(), rng.gen_range(1..=max_w));
                }
            }
            let graph = add_whiskers(&base, &rule).expect("rule names base vertices");
            Instance { id: format!("wh{seed}-{k}"), graph }
        })
        .collect()
}

pub fn corpus(cfg: &CorpusSpec) -> Vec<Instance> {
    match cfg.family {
        Family::Exhaustive => exhaustive(cfg.max_n, cfg.max_w),
        Family::Cycles => cycles(3, cfg.max_n, cfg.max_w),
        Family::Paths => paths(cfg.max_n, cfg.max_w),
        Family::Whiskers => whiskered(cfg.count, cfg.max_n, cfg.max_w, cfg.seed),
        Family::Random => random(cfg.count, cfg.max_n, cfg.max_w, cfg.seed),
    }
}

/// One CSV row of sweep evidence.
#[derive(Clone, Debug, Serialize)]
pub struct Evidence {
    pub instance_id: String,
    pub n: usize,
    pub weights: String,
    pub arcs: String,
    pub unmixed: bool,
    pub cm_oracle: bool,
    pub cm_underlying: bool,
    pub conjecture_ok: bool,
    pub dual_cm: bool,
    pub gbar_chordal: bool,
    pub star_exists: Option<bool>,
}

/// A designated subgraph that failed to be Cohen-Macaulay although the
/// constructed graph is.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructionViolation {
    pub instance_id: String,
    pub rule: String,
    pub z: String,
    pub y: Option<String>,
    pub subgraph: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ConjectureReport {
    pub instances: usize,
    pub skipped: Vec<String>,
    pub violations: Vec<String>,
    pub cm_not_unmixed: Vec<String>,
    pub classifier_disagreements: Vec<String>,
    pub field_instabilities: Vec<String>,
    pub construction_checks: usize,
    pub construction_violations: Vec<ConstructionViolation>,
    /// Instances with a Cohen-Macaulay dual and chordal complement where no
    /// ordering has property (∗).
    pub star_converse_witnesses: Vec<String>,
    #[serde(skip)]
    pub evidence: Vec<Evidence>,
}

fn render_weights(g: &VoGraph) -> String {
    g.weights().iter().join(";")
}

fn render_arcs(g: &VoGraph) -> String {
    g.arcs().iter().map(|&(u, v)| format!("{}>{}", g.label(u), g.label(v))).join(";")
}

/// The construction implications checked on a Cohen-Macaulay graph `h`:
/// `(rule, hint, which subgraph)` for every designated shape.
fn designated_shapes(h: &VoGraph) -> Vec<(&'static str, ConstructionHint, bool)> {
    let mut out = Vec::new();
    for z in 0..h.n() {
        if h.degree(z) < 2 {
            continue;
        }
        let zl = h.label(z).to_owned();
        for y in h.neighbors(z).iter().filter(|&y| h.degree(y) == 1) {
            let hint = ConstructionHint { kind: ConstructionKind::First, z: zl.clone(), y: Some(h.label(y).to_owned()) };
            out.push(("first", hint, false));
        }
        if h.neighbors(z).iter().all(|x| h.degree(x) >= 2) {
            let hint = ConstructionHint { kind: ConstructionKind::Second, z: zl, y: None };
            out.push(("second", hint, false));
        }
    }
    out
}

fn check_constructions(inst: &Instance, field: Field) -> Result<(usize, Vec<ConstructionViolation>)> {
    let h = &inst.graph;
    let mut checks = 0;
    let mut bad = Vec::new();
    for (kind, hint, _) in designated_shapes(h) {
        let Ok(shape) = construction_shape(h, &hint) else { continue };
        let arc_ok = shape.arc_condition();
        // (rule, subgraph name, subgraph)
        let mut targets: Vec<(&str, &str, &VoGraph)> = Vec::new();
        match (kind, shape.general) {
            ("first", true) => {
                targets.push(("first construction inherits", "G", &shape.g));
                targets.push(("first construction inherits", "F", &shape.f));
            }
            ("first", false) => {
                targets.push(("mixed first construction inherits", "G", &shape.g));
                if arc_ok {
                    targets.push(("mixed first construction inherits", "F", &shape.f));
                }
            }
            (_, true) => targets.push(("second construction inherits", "F", &shape.f)),
            (_, false) => {
                if arc_ok {
                    targets.push(("mixed second construction inherits", "F", &shape.f));
                }
            }
        }
        for (rule, name, sub) in targets {
            checks += 1;
            if !cm_of(sub, field)? {
                bad.push(ConstructionViolation {
                    instance_id: inst.id.clone(),
                    rule: rule.into(),
                    z: hint.z.clone(),
                    y: hint.y.clone(),
                    subgraph: name.into(),
                });
            }
        }
    }
    Ok((checks, bad))
}

fn cm_of(g: &VoGraph, field: Field) -> Result<bool> {
    Ok(is_cm_graph_oracle(g, field)?.is_cm)
}

struct Outcome {
    evidence: Evidence,
    disagreement: bool,
    unstable: bool,
    checks: usize,
    construction: Vec<ConstructionViolation>,
}

fn examine(inst: &Instance, field: Field) -> Result<Outcome> {
    let g = &inst.graph;
    let cm = cm_of(g, field)?;
    let unmixed = is_unmixed(g)?;
    let cm_underlying = cm_of(&g.unweighted(), field)?;
    let other = match field {
        Field::Rationals => Field::Prime(2),
        Field::Prime(_) => Field::Rationals,
    };
    let unstable = cm_of(g, other)? != cm;
    let disagreement = cm_auto(g, field)?.is_cm != cm;
    let dual_cm = dual_is_cm(g)?;
    let gbar_chordal = is_chordal(&g.underlying().complement());
    let star_exists = if g.n() <= MAX_PEO_SEARCH { Some(property_star_exists(g)?.is_some()) } else { None };
    let (checks, construction) = if cm { check_constructions(inst, field)? } else { (0, Vec::new()) };
    let evidence = Evidence {
        instance_id: inst.id.clone(),
        n: g.n(),
        weights: render_weights(g),
        arcs: render_arcs(g),
        unmixed,
        cm_oracle: cm,
        cm_underlying,
        conjecture_ok: cm == (unmixed && cm_underlying),
        dual_cm,
        gbar_chordal,
        star_exists,
    };
    Ok(Outcome { evidence, disagreement, unstable, checks, construction })
}

/// Tests `CM <=> unmixed and I(G) CM` on every instance, together with the
/// construction implications, classifier agreement and field stability.
/// Instances beyond the oracle's size cap are listed as skipped.
pub fn verify_conjecture(instances: &[Instance], field: Field) -> Result<ConjectureReport> {
    let outcomes: Vec<(String, Result<Outcome>)> = instances
        .par_iter()
        .map(|inst| (inst.id.clone(), examine(inst, field)))
        .collect();
    let mut report = ConjectureReport { instances: instances.len(), ..Default::default() };
    for (id, outcome) in outcomes {
        let o = match outcome {
            Ok(o) => o,
            Err(e) if e.is_size_cap() => {
                report.skipped.push(id);
                continue;
            }
            Err(e) => return Err(e),
        };
        let ev = &o.evidence;
        if !ev.conjecture_ok {
            report.violations.push(id.clone());
        }
        if ev.cm_oracle && !ev.unmixed {
            report.cm_not_unmixed.push(id.clone());
        }
        if o.disagreement {
            report.classifier_disagreements.push(id.clone());
        }
        if o.unstable {
            report.field_instabilities.push(id.clone());
        }
        if ev.dual_cm && ev.gbar_chordal && ev.star_exists == Some(false) {
            report.star_converse_witnesses.push(id.clone());
        }
        report.construction_checks += o.checks;
        report.construction_violations.extend(o.construction);
        report.evidence.push(o.evidence);
    }
    Ok(report)
}

/// Writes the evidence table as CSV.
pub fn write_csv<W: std::io::Write>(rows: &[Evidence], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}
