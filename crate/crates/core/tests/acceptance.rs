//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use woedge::alexander::{
    alexander_dual, dual_edge_intersection, dual_from_components, dual_via_decomposition, irreducible_components,
};
use woedge::chordal::{
    dual_is_cm, find_peo, is_chordal, is_simplicial_label, ordering_from_labels, property_star, property_star_exists,
    verify_peo,
};
use woedge::cm::{
    classify_cycle_cm, classify_cycle_unmixed, classify_path, classify_whisker, is_cm_graph_oracle, is_cm_oracle,
};
use woedge::covers::is_unmixed;
use woedge::decomp::{ass_oracle, associated_primes, primary_decomposition};
use woedge::ideal::{edge_ideal, intersect_all, MonomialIdeal};
use woedge::polarize::{g_superscript_d, polarize_ideal, simple_edge_ideal};
use woedge::samples::{ex6, ex6b, oriented_cycle, simplicial_example, unmixed_not_cm};
use woedge::simplicial::Field;
use woedge::sweep::{cycles, exhaustive, paths, random, verify_conjecture, whiskered, Instance};
use woedge::VoGraph;

const RANDOM_SEED: u64 = 0x5EED_0001;
const CONJECTURE_SEED: u64 = 0x5EED_0002;
const WHISKER_SEED: u64 = 0x5EED_0003;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn strings(v: &[&str]) -> Vec<String> {
    sorted(v.iter().map(|s| s.to_string()).collect())
}

fn main_corpus() -> Vec<Instance> {
    let mut c = exhaustive(4, 2);
    c.extend(random(200, 6, 3, RANDOM_SEED));
    c
}

fn ex6_worked_example() -> Outcome {
    let g = ex6();
    let i = edge_ideal(&g);
    let comps = sorted(primary_decomposition(&g).map_err(|e| e.to_string())?.ideals().iter().map(|q| q.to_string()).collect());
    let want = strings(&[
        "⟨x2, x5, x6⟩",
        "⟨x1, x4^4, x6⟩",
        "⟨x1^2, x2, x6⟩",
        "⟨x1, x3^2, x4, x5^3⟩",
        "⟨x2^3, x4^4, x5, x6⟩",
        "⟨x1^2, x2^3, x4^4, x6⟩",
    ]);
    check(comps == want, || format!("components {comps:?}"))?;
    let a = i.lcm_exponent().map_err(|e| e.to_string())?;
    check(a == [2, 3, 2, 4, 3, 1], || format!("lcm exponent {a:?}"))?;
    let dual = alexander_dual(&i, None).map_err(|e| e.to_string())?;
    let want_dual = strings(&[
        "x2^3*x5^3*x6",
        "x1^2*x4*x6",
        "x1*x2^3*x6",
        "x1^2*x3*x4^4*x5",
        "x2*x4*x5^3*x6",
        "x1*x2*x4*x6",
    ]);
    check(sorted(dual.render_gens()) == want_dual, || format!("dual {dual}"))?;
    let vars: Vec<String> = g.labels().to_vec();
    let seven = [
        [2, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 3, 0],
        [2, 0, 0, 0, 0, 1],
        [0, 3, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 1],
        [0, 0, 0, 4, 0, 1],
        [0, 0, 0, 0, 1, 1],
    ];
    let pieces: Vec<MonomialIdeal> = seven.iter().map(|b| MonomialIdeal::irreducible(vars.clone(), b).unwrap()).collect();
    let inter = intersect_all(&pieces).map_err(|e| e.to_string())?;
    check(inter == dual, || format!("seven-fold intersection {inter}"))?;
    Ok("6 components, a_I = (2,3,2,4,3,1), 6 dual generators, 7-fold intersection".into())
}

fn ex6b_final_example() -> Outcome {
    let g = ex6b();
    let gbar = g.underlying().complement();
    check(is_chordal(&gbar), || "complement not chordal".into())?;
    let order = ordering_from_labels(&gbar, &["x1", "x3", "x6", "x2", "x4", "x5"]).map_err(|e| e.to_string())?;
    check(verify_peo(&gbar, &order).unwrap(), || "ordering is not a PEO".into())?;
    check(property_star(&g, &order).map_err(|e| e.to_string())?, || "(∗) fails".into())?;
    check(dual_is_cm(&g).map_err(|e| e.to_string())?, || "dual-cm false".into())?;
    Ok("complement chordal, PEO verified, (∗) holds, dual CM".into())
}

fn simplicial_vertices() -> Outcome {
    let g = simplicial_example();
    let order = ordering_from_labels(&g, &["1", "3", "4", "2", "5"]).map_err(|e| e.to_string())?;
    check(verify_peo(&g, &order).unwrap(), || "ordering rejected".into())?;
    for (v, want) in [("1", false), ("2", true), ("3", false), ("4", false), ("5", true)] {
        check(is_simplicial_label(&g, v).unwrap() == want, || format!("vertex {v}"))?;
    }
    Ok("PEO (1,3,4,2,5); simplicial {2,5}".into())
}

fn bump(a: &[u32]) -> Vec<u32> {
    a.iter().map(|x| x + 1).collect()
}

fn duality_paths(corpus: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    for inst in corpus {
        let g = &inst.graph;
        let i = edge_ideal(g);
        let r = (|| -> woedge::Result<bool> {
            let a = i.lcm_exponent()?;
            let prop = alexander_dual(&i, None)?;
            let def = dual_from_components(&i, None, &irreducible_components(&i)?)?;
            let strong = dual_via_decomposition(g, None)?;
            let edges = dual_edge_intersection(g)?;
            let double = alexander_dual(&prop, Some(&a))?;
            let big = bump(&a);
            let double_big = alexander_dual(&alexander_dual(&i, Some(&big))?, Some(&big))?;
            Ok(prop == def && prop == strong && prop == edges && double == i && double_big == i)
        })();
        if !matches!(r, Ok(true)) {
            failures.push(format!("{} {r:?}", inst.id));
        }
    }
    check(failures.is_empty(), || format!("{} failures, first {:?}", failures.len(), failures.first()))?;
    Ok(format!("{} instances", corpus.len()))
}

fn decomposition_identity(corpus: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    for inst in corpus {
        let g = &inst.graph;
        let r = (|| -> woedge::Result<bool> {
            let d = primary_decomposition(g)?;
            let identity = d.intersection() == edge_ideal(g);
            let ass = associated_primes(g)? == ass_oracle(&edge_ideal(g))?;
            Ok(identity && ass)
        })();
        if !matches!(r, Ok(true)) {
            failures.push(format!("{} {r:?}", inst.id));
        }
    }
    check(failures.is_empty(), || format!("{} failures, first {:?}", failures.len(), failures.first()))?;
    Ok(format!("{} instances", corpus.len()))
}

fn gd_identity(corpus: &[Instance]) -> Outcome {
    let mut failures = Vec::new();
    for inst in corpus {
        let g = &inst.graph;
        let r = (|| -> woedge::Result<bool> {
            let dual = alexander_dual(&edge_ideal(g), None)?;
            let back = alexander_dual(&polarize_ideal(&dual)?, None)?;
            let gd = simple_edge_ideal(&g_superscript_d(g)?);
            Ok(back.label_terms() == gd.label_terms())
        })();
        if !matches!(r, Ok(true)) {
            failures.push(format!("{} {r:?}", inst.id));
        }
    }
    check(failures.is_empty(), || format!("{} failures, first {:?}", failures.len(), failures.first()))?;
    Ok(format!("{} instances", corpus.len()))
}

fn oracle(g: &VoGraph) -> bool {
    is_cm_graph_oracle(g, Field::Rationals).expect("within oracle limits").is_cm
}

fn cycle_path_classification() -> Outcome {
    let mut bad = Vec::new();
    let cyc = cycles(3, 5, 2);
    for inst in &cyc {
        let g = &inst.graph;
        let cm = oracle(g);
        if classify_cycle_cm(g).unwrap().is_cm != cm {
            bad.push(format!("{} cm", inst.id));
        }
        if classify_cycle_unmixed(g).unwrap() != is_unmixed(g).unwrap() {
            bad.push(format!("{} unmixed", inst.id));
        }
        if cm && ![3, 5].contains(&g.n()) {
            bad.push(format!("{} CM cycle of length {}", inst.id, g.n()));
        }
    }
    let pth = paths(5, 2);
    for inst in &pth {
        let g = &inst.graph;
        let cm = oracle(g);
        if classify_path(g).unwrap().is_cm != cm {
            bad.push(format!("{} path cm", inst.id));
        }
        if is_unmixed(g).unwrap() != cm {
            bad.push(format!("{} path unmixed", inst.id));
        }
    }
    check(bad.is_empty(), || format!("disagreements {bad:?}"))?;
    Ok(format!("{} cycles, {} paths", cyc.len(), pth.len()))
}

fn whisker_criterion() -> Outcome {
    let corpus = whiskered(100, 4, 2, WHISKER_SEED);
    let mut bad = Vec::new();
    let mut cm_count = 0;
    for inst in &corpus {
        let g = &inst.graph;
        let c = classify_whisker(g).map_err(|e| format!("{}: {e}", inst.id))?.is_cm;
        let a = oracle(g);
        let b = is_unmixed(g).unwrap();
        cm_count += a as usize;
        if a != b || b != c {
            bad.push(format!("{} (a={a}, b={b}, c={c})", inst.id));
        }
    }
    check(bad.is_empty(), || format!("failures {bad:?}"))?;
    Ok(format!("{} instances, {cm_count} Cohen-Macaulay", corpus.len()))
}

fn dual_cm_properties(corpus: &[Instance]) -> Outcome {
    let mut bad = Vec::new();
    let mut witnesses = Vec::new();
    let mut oracle_checked = 0;
    for inst in corpus {
        let g = &inst.graph;
        let dual_cm = dual_is_cm(g).unwrap();
        let chordal = is_chordal(&g.underlying().complement());
        let star = property_star_exists(g).unwrap().is_some();
        if dual_cm && !chordal {
            bad.push(format!("{} dual CM, complement not chordal", inst.id));
        }
        if chordal && star && !dual_cm {
            bad.push(format!("{} (∗) without dual CM", inst.id));
        }
        if dual_cm && chordal && !star {
            witnesses.push(inst.id.clone());
        }
        // independent route: the Reisner oracle on the dual itself
        let dual = alexander_dual(&edge_ideal(g), None).unwrap();
        if let Ok(r) = is_cm_oracle(&dual, Field::Rationals) {
            oracle_checked += 1;
            if r.is_cm != dual_cm {
                bad.push(format!("{} dual-cm {dual_cm} but oracle {}", inst.id, r.is_cm));
            }
        }
    }
    check(bad.is_empty(), || format!("failures {bad:?}"))?;
    if !witnesses.is_empty() {
        println!("  converse witnesses (dual CM, complement chordal, no ordering with (∗)): {witnesses:?}");
    }
    Ok(format!(
        "{} instances, {oracle_checked} cross-checked by oracle, {} converse witnesses",
        corpus.len(),
        witnesses.len()
    ))
}

fn conjecture_sweep() -> Outcome {
    let mut corpus = cycles(3, 5, 2);
    corpus.extend(paths(5, 2));
    corpus.extend(random(100, 5, 3, CONJECTURE_SEED));
    let r = verify_conjecture(&corpus, Field::Rationals).map_err(|e| e.to_string())?;
    check(r.skipped.is_empty(), || format!("skipped {:?}", r.skipped))?;
    check(r.violations.is_empty(), || format!("violations {:?}", r.violations))?;
    check(r.cm_not_unmixed.is_empty(), || format!("CM but mixed {:?}", r.cm_not_unmixed))?;
    if !r.field_instabilities.is_empty() {
        println!("  field instabilities: {:?}", r.field_instabilities);
    }
    if !r.construction_violations.is_empty() {
        println!("  construction implication failures: {:?}", r.construction_violations);
    }
    let outside = verify_conjecture(&[Instance { id: "unmixed_not_cm".into(), graph: unmixed_not_cm() }], Field::Rationals)
        .map_err(|e| e.to_string())?;
    if !outside.violations.is_empty() {
        println!("  note: counterexample outside this corpus: unmixed_not_cm (unmixed, I(G) CM, D_G not CM)");
    }
    let cm = r.evidence.iter().filter(|e| e.cm_oracle).count();
    Ok(format!(
        "{} instances, {cm} Cohen-Macaulay, 0 violations; {} construction checks, {} failures; {} field instabilities",
        r.instances,
        r.construction_checks,
        r.construction_violations.len(),
        r.field_instabilities.len()
    ))
}

fn reisner_baseline() -> Outcome {
    let mut verdicts = BTreeSet::new();
    for n in 3..=7 {
        let cm = oracle(&oriented_cycle(&vec![1; n]));
        check(cm == (n == 3 || n == 5), || format!("C{n}: {cm}"))?;
        if cm {
            verdicts.insert(n);
        }
    }
    Ok(format!("CM exactly for n in {verdicts:?}"))
}

fn main() -> ExitCode {
    let corpus = main_corpus();
    let criteria: Vec<Criterion> = vec![
        ("EX6 decomposition, lcm exponent and dual", Box::new(ex6_worked_example)),
        ("EX6B chordal complement, PEO, (∗), dual CM", Box::new(ex6b_final_example)),
        ("simplicial vertices and PEO of the 5-vertex example", Box::new(simplicial_vertices)),
        ("double duality and agreement of the dual routes", Box::new(|| duality_paths(&corpus))),
        ("decomposition identity and associated primes oracle", Box::new(|| decomposition_identity(&corpus))),
        ("dual of polarized dual is I(G^D)", Box::new(|| gd_identity(&corpus))),
        ("cycle and path classifiers against the oracle", Box::new(cycle_path_classification)),
        ("whiskered graphs: CM, unmixed and the leaf-arc condition agree", Box::new(whisker_criterion)),
        ("dual CM, chordal complement and (∗)", Box::new(|| dual_cm_properties(&corpus))),
        ("conjecture sweep", Box::new(conjecture_sweep)),
        ("square-free cycles under the Reisner oracle", Box::new(reisner_baseline)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.2}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.2}s]", k + 1);
            }
        }
    }
    // keep the PEO helper honest on the sample too
    debug_assert!(find_peo(&simplicial_example()).is_some());
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
