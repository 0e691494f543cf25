//! The `woedge` command line.
//!
//! Every command reads one graph in JSON (a path or `-` for stdin), writes
//! JSON on stdout (or text with `--pretty`) and reports failures as
//! `{"error": code, "detail": message}` on stderr. Exit status is 0 on
//! success, 2 on bad input and 3 when a size cap is hit.

use std::fs::File;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::alexander::alexander_dual;
use crate::chordal::{dual_is_cm, is_chordal, property_star_exists, MAX_PEO_SEARCH};
use crate::cm::{
    classify_construction, classify_cycle_cm, classify_cycle_unmixed, classify_path, cm_auto, is_cm_graph_oracle,
    CmReport, ConstructionHint, ConstructionKind,
};
use crate::covers::{heights, is_unmixed};
use crate::decomp::{ass_oracle, associated_primes, primary_decomposition};
use crate::error::{Error, Result};
use crate::graph::{first_construction, second_construction, Attachment, GraphJson, Leaf, SourceWeights, VoGraph};
use crate::ideal::{edge_ideal, MonomialIdeal};
use crate::polarize::{g_superscript_d, polarize_ideal};
use crate::simplicial::Field;
use crate::sweep::{corpus, verify_conjecture, write_csv, CorpusSpec, Family};

#[derive(Parser, Debug)]
#[command(name = "woedge", version, about = "Edge ideals of weighted oriented graphs")]
struct Cli {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Reset source vertices to weight 1 instead of rejecting them.
    #[arg(long, global = true)]
    normalize_sources: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Graph JSON file, or `-` for stdin.
    input: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Oracle,
    Auto,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldArg {
    Q,
    F2,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::Q => Field::Rationals,
            FieldArg::F2 => Field::Prime(2),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    First,
    Second,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate and echo a graph.
    Show(Input),
    /// Primary decomposition from the strong vertex covers.
    Decompose(Input),
    /// Associated primes as vertex covers.
    Ass {
        #[command(flatten)]
        input: Input,
        /// Use the colon-ideal oracle instead of strong covers.
        #[arg(long)]
        oracle: bool,
    },
    IsUnmixed(Input),
    /// Alexander dual of the edge ideal.
    Dual {
        #[command(flatten)]
        input: Input,
        /// Dualizing vector, comma separated; defaults to the lcm exponent.
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<u32>>,
    },
    /// Polarization of the edge ideal.
    Polarize(Input),
    /// The copy-vertex graph G^D.
    Gd(Input),
    /// Whether the dual of the edge ideal is Cohen-Macaulay.
    DualCm(Input),
    IsCm {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "oracle")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "q")]
        field: FieldArg,
    },
    ClassifyCycle(Input),
    ClassifyPath(Input),
    /// Attach a new vertex z (and for `first` a leaf y) and print the graph.
    Construct {
        #[arg(value_enum)]
        kind: KindArg,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        z: String,
        #[arg(long, default_value_t = 1)]
        z_weight: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        attach: Vec<String>,
        /// Attached vertices that receive an arc from z.
        #[arg(long, value_delimiter = ',')]
        from_z: Vec<String>,
        #[arg(long, default_value = "y")]
        y: String,
        #[arg(long, default_value_t = 1)]
        y_weight: u32,
        /// Orient the leaf arc z -> y.
        #[arg(long)]
        leaf_from_z: bool,
        /// Also report the construction rule that certifies CM, if any.
        #[arg(long)]
        classify: bool,
    },
    /// Sweep a corpus and test the conjecture on every instance.
    Verify {
        #[arg(long, value_enum, default_value = "cycles")]
        family: Family,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_w: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances for the random and whiskers families.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, value_enum, default_value = "q")]
        field: FieldArg,
        /// Write the evidence table here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

struct Output {
    json: Value,
    text: String,
}

fn read_graph(path: &PathBuf, mode: SourceWeights) -> Result<VoGraph> {
    let mut raw = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut raw).map_err(|e| Error::Io(e.to_string()))?;
    } else {
        File::open(path)
            .and_then(|mut f| f.read_to_string(&mut raw))
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    let json: GraphJson = serde_json::from_str(&raw).map_err(|e| Error::Parse(e.to_string()))?;
    VoGraph::from_json(&json, mode)
}

fn labels_of(g: &VoGraph, s: crate::vset::VertexSet) -> Vec<String> {
    g.set_labels(s)
}

fn ideal_json(i: &MonomialIdeal) -> Value {
    json!({ "vars": i.vars(), "generators": i.render_gens() })
}

fn report_output(r: &CmReport) -> Output {
    let method = serde_json::to_value(r.method).expect("serializable");
    Output {
        json: serde_json::to_value(r).expect("serializable"),
        text: format!("cohen-macaulay: {} ({}: {})", r.is_cm, method.as_str().unwrap_or(""), r.certificate),
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let mode = if cli.normalize_sources { SourceWeights::Normalize } else { SourceWeights::Reject };
    let load = |i: &Input| read_graph(&i.input, mode);
    match &cli.command {
        Command::Show(i) => {
            let g = load(i)?;
            let json = serde_json::to_value(g.to_json()).expect("serializable");
            let arcs: Vec<String> = g.arcs().iter().map(|&(u, v)| format!("{} -> {}", g.label(u), g.label(v))).collect();
            let verts: Vec<String> = (0..g.n()).map(|i| format!("{}(w={})", g.label(i), g.weight(i))).collect();
            Ok(Output { json, text: format!("vertices: {}\narcs: {}", verts.join(" "), arcs.join(", ")) })
        }
        Command::Decompose(i) => {
            let g = load(i)?;
            let d = primary_decomposition(&g)?;
            let comps: Vec<Value> = d
                .components
                .iter()
                .zip(d.ideals())
                .map(|(c, q)| json!({ "cover": labels_of(&g, c.cover), "b": c.b, "ideal": q.to_string() }))
                .collect();
            let text = d.ideals().iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" ∩ ");
            Ok(Output { json: json!({ "components": comps }), text })
        }
        Command::Ass { input, oracle } => {
            let g = load(input)?;
            let primes = if *oracle { ass_oracle(&edge_ideal(&g))? } else { associated_primes(&g)? };
            let sets: Vec<Vec<String>> = primes.iter().map(|&p| labels_of(&g, p)).collect();
            let text = sets.iter().map(|s| format!("({})", s.join(", "))).collect::<Vec<_>>().join("\n");
            Ok(Output { json: json!({ "associated_primes": sets }), text })
        }
        Command::IsUnmixed(i) => {
            let g = load(i)?;
            let u = is_unmixed(&g)?;
            let h = heights(&g)?;
            Ok(Output {
                json: json!({ "unmixed": u, "min_height": h.min_height, "max_height": h.max_height }),
                text: format!("unmixed: {u} (heights {}..{})", h.min_height, h.max_height),
            })
        }
        Command::Dual { input, a } => {
            let g = load(input)?;
            let i = edge_ideal(&g);
            let a_used = match a {
                Some(a) => a.clone(),
                None => i.lcm_exponent()?,
            };
            let d = alexander_dual(&i, Some(&a_used))?;
            let mut json = ideal_json(&d);
            json["a"] = json!(a_used);
            Ok(Output { json, text: d.to_string() })
        }
        Command::Polarize(i) => {
            let g = load(i)?;
            let p = polarize_ideal(&edge_ideal(&g))?;
            Ok(Output { json: ideal_json(&p), text: p.to_string() })
        }
        Command::Gd(i) => {
            let g = load(i)?;
            let h = g_superscript_d(&g)?;
            let edges: Vec<String> = h.edges().iter().map(|&(u, v)| format!("{}-{}", h.label(u), h.label(v))).collect();
            Ok(Output {
                json: serde_json::to_value(h.to_json()).expect("serializable"),
                text: format!("{} vertices, edges: {}", h.n(), edges.join(" ")),
            })
        }
        Command::DualCm(i) => {
            let g = load(i)?;
            let dual_cm = dual_is_cm(&g)?;
            let gbar = g.underlying().complement();
            let chordal = is_chordal(&gbar);
            let star = if g.n() <= MAX_PEO_SEARCH && chordal {
                property_star_exists(&g)?.map(|o| o.iter().map(|&v| g.label(v).to_owned()).collect::<Vec<_>>())
            } else {
                None
            };
            let text = format!(
                "dual cohen-macaulay: {dual_cm}\ncomplement chordal: {chordal}\nordering with (∗): {}",
                star.as_ref().map(|s| s.join(" ")).unwrap_or_else(|| "none".into())
            );
            Ok(Output { json: json!({ "dual_cm": dual_cm, "gbar_chordal": chordal, "star_ordering": star }), text })
        }
        Command::IsCm { input, method, field } => {
            let g = load(input)?;
            let r = match method {
                MethodArg::Oracle => is_cm_graph_oracle(&g, (*field).into())?,
                MethodArg::Auto => cm_auto(&g, (*field).into())?,
            };
            Ok(report_output(&r))
        }
        Command::ClassifyCycle(i) => {
            let g = load(i)?;
            let unmixed = classify_cycle_unmixed(&g)?;
            let r = classify_cycle_cm(&g)?;
            let mut out = report_output(&r);
            out.json["unmixed"] = json!(unmixed);
            out.text = format!("unmixed: {unmixed}\n{}", out.text);
            Ok(out)
        }
        Command::ClassifyPath(i) => Ok(report_output(&classify_path(&load(i)?)?)),
        Command::Construct { kind, input, z, z_weight, attach, from_z, y, y_weight, leaf_from_z, classify } => {
            let g = load(input)?;
            let att = Attachment {
                z: z.clone(),
                z_weight: *z_weight,
                attach: attach.clone(),
                from_z: from_z.iter().cloned().collect(),
            };
            let (h, hint) = match kind {
                KindArg::First => {
                    let leaf = Leaf { label: y.clone(), weight: *y_weight, toward_z: !leaf_from_z };
                    let hint = ConstructionHint { kind: ConstructionKind::First, z: z.clone(), y: Some(y.clone()) };
                    (first_construction(&g, &att, &leaf)?, hint)
                }
                KindArg::Second => {
                    let hint = ConstructionHint { kind: ConstructionKind::Second, z: z.clone(), y: None };
                    (second_construction(&g, &att)?, hint)
                }
            };
            let graph = serde_json::to_value(h.to_json()).expect("serializable");
            if !classify {
                return Ok(Output { json: graph.clone(), text: graph.to_string() });
            }
            let r = classify_construction(&h, &hint, Field::Rationals)?;
            let text = match &r {
                Some(r) => format!("{graph}\ncohen-macaulay by {}", r.certificate),
                None => format!("{graph}\nno construction rule applies"),
            };
            Ok(Output { json: json!({ "graph": graph, "construction": r }), text })
        }
        Command::Verify { family, max_n, max_w, seed, count, field, csv } => {
            let cfg = CorpusSpec { family: *family, max_n: *max_n, max_w: *max_w, count: *count, seed: *seed };
            let instances = corpus(&cfg);
            let report = verify_conjecture(&instances, (*field).into())?;
            if let Some(path) = csv {
                let f = File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                write_csv(&report.evidence, f)?;
            }
            let mut json = serde_json::to_value(&report).expect("serializable");
            json["family"] = json!(family);
            json["seed"] = json!(seed);
            json["max_n"] = json!(max_n);
            json["max_w"] = json!(max_w);
            let text = format!(
                "{} instances ({} skipped), {} conjecture violations, {} construction checks with {} violations, {} field instabilities",
                report.instances,
                report.skipped.len(),
                report.violations.len(),
                report.construction_checks,
                report.construction_violations.len(),
                report.field_instabilities.len()
            );
            Ok(Output { json, text })
        }
    }
}

fn emit_error(err: &mut dyn Write, code: &str, detail: &str) {
    let _ = writeln!(err, "{}", json!({ "error": code, "detail": detail }));
}

/// Runs the command line with explicit output streams; returns the exit
/// status.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            emit_error(err, "UsageError", e.to_string().trim());
            return 2;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let body = if cli.pretty { o.text } else { o.json.to_string() };
            let _ = writeln!(out, "{body}");
            0
        }
        Err(e) => {
            emit_error(err, e.code(), &e.to_string());
            if e.is_size_cap() {
                3
            } else {
                2
            }
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}
