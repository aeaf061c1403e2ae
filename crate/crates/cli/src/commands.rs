//! `gen`, `cut` and `oracle`.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, ValueEnum};
use dcn_core::cuts::{construct_cut, predicted_kappa, verify_cut};
use dcn_core::format::{csv_row, write_cut, write_dot, write_edge_list, CSV_HEADER};
use dcn_core::search::{exists_cut_of_size, g_extra_connectivity, min_structure_cut, CutSearch};
use dcn_core::{Error, ShapeSpec, StructureCut};

use crate::instance::{BudgetArgs, ShapeArgs, TopologyArgs};
use crate::manifest::{self, CaseResult, OracleEcho, RunManifest, Status, Timing, Totals};
use crate::Exit;

/// Writes to `path`, or stdout when absent.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Edgelist,
    Dot,
}

/// Write a topology as an edge list or DOT graph.
#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(flatten)]
    pub topology: TopologyArgs,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: GraphFormat,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn gen(args: &GenArgs) -> Result<Exit> {
    let topo = args.topology.topology()?;
    let g = topo.build(args.topology.max_vertices)?;
    let text = match args.format {
        GraphFormat::Edgelist => write_edge_list(&g, topo.name(), &topo.params()),
        GraphFormat::Dot => write_dot(&g, &format!("{} {}", topo.name(), topo.params())),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(Exit::Ok)
}

/// Build the explicit cut, verify it, and write the cut file and CSV row.
#[derive(Args, Debug)]
pub struct CutArgs {
    #[command(flatten)]
    pub topology: TopologyArgs,
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Cut file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Verification CSV, header plus one row (stdout when omitted).
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

pub fn cut(args: &CutArgs) -> Result<Exit> {
    let topo = args.topology.topology()?;
    let family = topo.family()?;
    let Some(shape) = args.shape.spec()? else {
        bail!(Error::OutOfRange("cut needs --shape".into()));
    };
    let mode = args.shape.mode();
    let predicted = predicted_kappa(family, shape, mode)?.value;
    let cut = construct_cut(family, shape, mode)?;
    let g = topo.build(args.topology.max_vertices)?;
    let report = verify_cut(&g, &cut, shape, mode);
    emit(args.out.as_deref(), &write_cut(topo.name(), &topo.params(), shape, &cut))?;
    let csv = format!("{CSV_HEADER}\n{}\n", csv_row(topo.name(), &topo.params(), Some(predicted), &report));
    emit(args.csv.as_deref(), &csv)?;
    if !report.pass {
        eprintln!("verification failed: components {:?}", report.component_sizes());
        return Ok(Exit::Failed);
    }
    if cut.len() != predicted {
        eprintln!("cut has {} members, predicted {predicted}", cut.len());
        return Ok(Exit::Failed);
    }
    Ok(Exit::Ok)
}

/// Exhaustive certification: bounded existence, minimum cut, or g-extra
/// connectivity.
#[derive(Args, Debug)]
#[command(group(ArgGroup::new("query").required(true).args(["bound", "prove_min", "g_extra"])))]
pub struct OracleArgs {
    #[command(flatten)]
    pub topology: TopologyArgs,
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Is there a cut with at most this many members?
    #[arg(long)]
    pub bound: Option<usize>,
    /// Find the minimum cut size.
    #[arg(long)]
    pub prove_min: bool,
    /// Minimum vertex set leaving every component with more than H vertices.
    #[arg(long, value_name = "H")]
    pub g_extra: Option<usize>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Write the witness here instead of stdout.
    #[arg(long)]
    pub witness: Option<PathBuf>,
    /// Run manifest (JSON; timings go to `<path>.timing.json`).
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

pub fn oracle(args: &OracleArgs) -> Result<Exit> {
    let start = Instant::now();
    let topo = args.topology.topology()?;
    let shape = args.shape.spec()?;
    let mode = args.shape.mode();
    let budget = args.budget.budget();
    let g = topo.build(args.topology.max_vertices)?;
    let instance = format!("{} {}", topo.name(), topo.params());

    let (echo, witness_text, case) = if let Some(h) = args.g_extra {
        if shape.is_some() {
            bail!(Error::OutOfRange("--g-extra takes no --shape".into()));
        }
        let r = g_extra_connectivity(&g, h, &budget)?;
        let text = r.witness.as_ref().map(|w| {
            let labels: Vec<&str> = w.iter().map(|&v| g.label(v)).collect();
            format!("# extra {} {} h={h}\n{}\n", topo.name(), topo.params(), labels.join(","))
        });
        let outcome = match (r.value, &r.budget_note) {
            (Some(_), _) => "certified",
            (None, Some(_)) => "budget",
            (None, None) => "none",
        };
        let echo = OracleEcho {
            query: format!("g-extra {h}"),
            outcome: outcome.into(),
            value: r.value,
            lower_bound: r.lower_bound,
            subsets_checked: r.subsets_checked,
            note: r.budget_note,
        };
        (echo, text, format!("{instance} g-extra {h}"))
    } else {
        let Some(shape) = shape else {
            bail!(Error::OutOfRange("--bound and --prove-min need --shape".into()));
        };
        let case = format!("{instance} {shape} {mode}");
        let (echo, witness) = if let Some(b) = args.bound {
            match exists_cut_of_size(&g, shape, mode, b, &budget)? {
                CutSearch::Found(cut) => (echo(format!("bound {b}"), "found", Some(cut.len()), cut.len(), 0, None), Some(cut)),
                CutSearch::NotFound => (echo(format!("bound {b}"), "none", None, b + 1, 0, None), None),
                CutSearch::BudgetExceeded { lower_bound, reason } => {
                    (echo(format!("bound {b}"), "budget", None, lower_bound, 0, Some(reason)), None)
                }
            }
        } else {
            let r = min_structure_cut(&g, shape, mode, &budget)?;
            let outcome = if r.value.is_some() { "certified" } else { "budget" };
            (echo("min".into(), outcome, r.value, r.lower_bound, r.subsets_checked, r.budget_note), r.witness)
        };
        if let Some(cut) = &witness {
            check_witness(&g, cut, shape)?;
        }
        (echo, witness.map(|c| write_cut(topo.name(), &topo.params(), shape, &c)), case)
    };

    let mut out = match (echo.outcome.as_str(), args.bound) {
        ("found", _) => format!("yes {}\n", echo.value.unwrap_or_default()),
        ("none", Some(_)) => "no\n".to_owned(),
        ("none", None) => "none\n".to_owned(),
        ("budget", _) => format!(">= {}\n", echo.lower_bound),
        _ => format!("{}\n", echo.value.unwrap_or_default()),
    };
    if let Some(text) = &witness_text {
        match &args.witness {
            Some(p) => emit(Some(p), text)?,
            None => out.push_str(text),
        }
    }
    emit(None, &out)?;

    let predicted = topo.family().ok().zip(shape).and_then(|(f, s)| predicted_kappa(f, s, mode).ok()).map(|p| p.value);
    match (&echo.note, echo.outcome.as_str()) {
        (Some(note), "budget") => eprintln!("budget exceeded: {note}; no cut below {} members", echo.lower_bound),
        (_, "none") if args.bound.is_some() => eprintln!("no cut with at most {} members", echo.lower_bound - 1),
        _ => {}
    }
    if let (Some(p), "certified") = (predicted, echo.outcome.as_str()) {
        if echo.value != Some(p) {
            eprintln!("note: closed-form value is {p}");
        }
    }
    let status = if echo.outcome == "budget" { Status::SkippedBudget } else { Status::Pass };
    if let Some(path) = &args.manifest {
        let mut outputs = BTreeMap::new();
        if let Some(w) = &args.witness {
            outputs.insert("witness".to_owned(), w.clone());
        }
        let results = vec![CaseResult {
            case: case.clone(),
            predicted,
            constructed: None,
            verified: None,
            oracle: Some(echo.clone()),
            status,
            note: None,
        }];
        let m = RunManifest {
            command: manifest::command_echo(),
            grid: vec![case.clone()],
            budget: (&budget).into(),
            outputs,
            totals: Totals::tally(&results),
            results,
        };
        let secs = start.elapsed().as_secs_f64();
        manifest::write(path, &m, &Timing { total_secs: secs, cases: vec![(case, secs)] })?;
    }
    Ok(if status == Status::SkippedBudget { Exit::Budget } else { Exit::Ok })
}

fn echo(query: String, outcome: &str, value: Option<usize>, lower_bound: usize, checked: u64, note: Option<String>) -> OracleEcho {
    OracleEcho {
        query,
        outcome: outcome.into(),
        value,
        lower_bound,
        subsets_checked: checked,
        note,
    }
}

/// Every witness is re-checked by the independent verifier before it is reported.
fn check_witness(g: &dcn_core::Graph, cut: &StructureCut, shape: ShapeSpec) -> Result<()> {
    let report = verify_cut(g, cut, shape, cut.mode);
    if !report.pass {
        bail!("oracle witness failed verification: components {:?}", report.component_sizes());
    }
    Ok(())
}

