//! The reproduction table: closed-form value, explicit cut, verification and
//! (for small instances) exhaustive certification, one row per case.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use dcn_core::cuts::{construct_cut, predicted_kappa, verify_cut, Family};
use dcn_core::format::{csv_row, CSV_HEADER};
use dcn_core::search::{min_structure_cut, SearchBudget};
use dcn_core::{dcell, Error, Mode, ShapeSpec};

use crate::commands::emit;
use crate::manifest::{self, CaseResult, OracleEcho, RunManifest, Status, Timing, Totals};
use crate::instance::BudgetArgs;
use crate::Exit;

/// One grid row. Written and parsed as
/// `<family> <k=v>... <shape> <mode> [oracle]`, e.g. `bcdc n=5 star(2) structure oracle`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Case {
    pub family: Family,
    pub shape: ShapeSpec,
    pub mode: Mode,
    pub oracle: bool,
}

impl Case {
    fn new(family: Family, shape: ShapeSpec, mode: Mode, oracle: bool) -> Self {
        Case { family, shape, mode, oracle }
    }

    fn id(&self) -> String {
        format!("{} {} {} {}", self.family, self.family.params(), self.shape, self.mode)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())?;
        if self.oracle {
            f.write_str(" oracle")?;
        }
        Ok(())
    }
}

impl FromStr for Case {
    type Err = anyhow::Error;

    fn from_str(line: &str) -> Result<Self> {
        let words: Vec<&str> = line.split_whitespace().collect();
        let mut params = BTreeMap::new();
        let mut rest = Vec::new();
        for w in words.iter().skip(1) {
            match w.split_once('=') {
                Some((k, v)) => {
                    params.insert(k, v.parse::<usize>().with_context(|| format!("parameter {w}"))?);
                }
                None => rest.push(*w),
            }
        }
        let get = |k: &str| params.get(k).copied().ok_or_else(|| anyhow!("missing {k}= in `{line}`"));
        let family = match words.first() {
            Some(&"dcell") => Family::DCell { m: get("m")?, n: get("n")? },
            Some(&"bcdc") => Family::Bcdc { n: get("n")? },
            _ => bail!("unknown family in `{line}`"),
        };
        let (shape, mode, oracle) = match rest.as_slice() {
            [s, m] => (s, m, false),
            [s, m, "oracle"] => (s, m, true),
            _ => bail!("expected `<shape> <mode> [oracle]` in `{line}`"),
        };
        Ok(Case::new(family, shape.parse()?, mode.parse()?, oracle))
    }
}

/// Every case the acceptance checks rely on, with oracle certification on the
/// instances small enough for exhaustive search.
pub fn default_grid() -> Vec<Case> {
    use Mode::{Structure, Substructure};
    let mut grid = Vec::new();
    let dcell_star_oracle = [(0, 4, 1), (0, 5, 1), (0, 5, 2), (1, 4, 1), (1, 4, 2)];
    let dcell_clique_oracle = [(0, 5, 3), (1, 4, 3), (1, 5, 3), (1, 5, 4)];
    for m in 0..=2 {
        for n in 2..=6 {
            let family = Family::DCell { m, n };
            for t in 1..=(m + n).saturating_sub(2) {
                for mode in [Structure, Substructure] {
                    let oracle = dcell_star_oracle.contains(&(m, n, t));
                    grid.push(Case::new(family, ShapeSpec::Star(t), mode, oracle));
                }
            }
            for s in 3..n {
                let oracle = dcell_clique_oracle.contains(&(m, n, s));
                grid.push(Case::new(family, ShapeSpec::Clique(s), Structure, oracle));
            }
        }
    }
    for n in 4..=6 {
        let family = Family::Bcdc { n };
        for t in 1..=2 * n - 3 {
            let oracle = [(4, 1), (5, 1), (5, 2)].contains(&(n, t));
            grid.push(Case::new(family, ShapeSpec::Star(t), Structure, oracle));
        }
        for k in 4..=2 * n - 1 {
            let oracle = [(5, 4), (5, 9)].contains(&(n, k));
            grid.push(Case::new(family, ShapeSpec::Path(k), Structure, oracle));
        }
        if n >= 5 {
            if n == 5 {
                grid.push(Case::new(family, ShapeSpec::Cycle(5), Structure, true));
            }
            for k in 6..=2 * n {
                grid.push(Case::new(family, ShapeSpec::Cycle(k), Structure, (n, k) == (5, 10)));
            }
        }
        for k in 4..=2 * n - 1 {
            grid.push(Case::new(family, ShapeSpec::Cycle(k), Substructure, false));
        }
    }
    grid
}

/// Build, verify and certify a grid of cases.
#[derive(Args, Debug)]
pub struct TableArgs {
    /// Grid file, one case per line (`#` comments allowed); the built-in grid when omitted.
    #[arg(long)]
    pub grid: Option<PathBuf>,
    /// Print the built-in grid in the grid-file format and exit.
    #[arg(long)]
    pub print_grid: bool,
    /// Skip exhaustive certification.
    #[arg(long)]
    pub no_oracle: bool,
    /// CSV output (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Run manifest (JSON; timings go to `<path>.timing.json`).
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Refuse to build graphs with more vertices than this.
    #[arg(long, default_value_t = dcell::DEFAULT_VERTEX_BUDGET)]
    pub max_vertices: usize,
}

pub const TABLE_HEADER_EXTRA: &str = ",oracle,status";

pub fn table(args: &TableArgs) -> Result<Exit> {
    if args.print_grid {
        let text: String = default_grid().iter().map(|c| format!("{c}\n")).collect();
        emit(args.out.as_deref(), &text)?;
        return Ok(Exit::Ok);
    }
    let grid = match &args.grid {
        Some(p) => parse_grid(&std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?)?,
        None => default_grid(),
    };
    let budget = args.budget.budget();
    let start = Instant::now();
    let mut csv = format!("{CSV_HEADER}{TABLE_HEADER_EXTRA}\n");
    let mut results = Vec::with_capacity(grid.len());
    let mut timing = Timing::default();
    for case in &grid {
        let t0 = Instant::now();
        let (row, result) = run_case(case, !args.no_oracle, &budget, args.max_vertices);
        timing.cases.push((case.id(), t0.elapsed().as_secs_f64()));
        csv.push_str(&row);
        csv.push('\n');
        results.push(result);
    }
    timing.total_secs = start.elapsed().as_secs_f64();
    emit(args.out.as_deref(), &csv)?;
    let totals = Totals::tally(&results);
    if args.out.is_some() {
        println!("{totals}");
    } else {
        eprintln!("{totals}");
    }
    for r in results.iter().filter(|r| matches!(r.status, Status::Fail | Status::RejectedRange)) {
        eprintln!("{}: {} ({})", r.case, r.status, r.note.as_deref().unwrap_or(""));
    }
    if let Some(path) = &args.manifest {
        let mut outputs = BTreeMap::new();
        if let Some(out) = &args.out {
            outputs.insert("csv".to_owned(), out.clone());
        }
        let m = RunManifest {
            command: manifest::command_echo(),
            grid: grid.iter().map(Case::to_string).collect(),
            budget: (&budget).into(),
            outputs,
            results,
            totals: totals.clone(),
        };
        manifest::write(path, &m, &timing)?;
    }
    Ok(if totals.ok() { Exit::Ok } else { Exit::Failed })
}

pub fn parse_grid(text: &str) -> Result<Vec<Case>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

/// Runs one case; returns the CSV row and the manifest entry.
pub fn run_case(case: &Case, with_oracle: bool, budget: &SearchBudget, max_vertices: usize) -> (String, CaseResult) {
    let (family, shape, mode) = (case.family, case.shape, case.mode);
    let name = family.to_string();
    let params = family.params();
    let mut result = CaseResult {
        case: case.id(),
        predicted: None,
        constructed: None,
        verified: None,
        oracle: None,
        status: Status::Pass,
        note: None,
    };
    let bare = |predicted: Option<usize>, oracle: &str, status: Status| {
        let p = predicted.map_or_else(String::new, |p| p.to_string());
        format!("{name},{params},{shape},{mode},{p},,,,,,{oracle},{status}")
    };

    let predicted = match predicted_kappa(family, shape, mode) {
        Ok(p) => p.value,
        Err(e) => {
            result.status = Status::RejectedRange;
            result.note = Some(e.to_string());
            return (bare(None, "", result.status), result);
        }
    };
    result.predicted = Some(predicted);
    let g = match family.build(max_vertices) {
        Ok(g) => g,
        Err(e) => {
            result.status = if matches!(e, Error::BudgetExceeded { .. }) { Status::SkippedBudget } else { Status::Fail };
            result.note = Some(e.to_string());
            return (bare(Some(predicted), "", result.status), result);
        }
    };

    let mut problems = Vec::new();
    let report = match construct_cut(family, shape, mode) {
        Ok(cut) => {
            result.constructed = Some(cut.len());
            let report = verify_cut(&g, &cut, shape, mode);
            let ok = report.pass && cut.len() == predicted;
            result.verified = Some(report.pass);
            if !report.pass {
                problems.push(format!("verification failed, components {:?}", report.component_sizes()));
            } else if !ok {
                problems.push(format!("constructed {} members", cut.len()));
            }
            Some(report)
        }
        Err(e) => {
            problems.push(e.to_string());
            None
        }
    };

    let mut oracle_col = String::new();
    let mut budget_tripped = false;
    if case.oracle && with_oracle {
        let echo = match min_structure_cut(&g, shape, mode, budget) {
            Ok(r) => {
                if let Some(v) = r.value {
                    oracle_col = v.to_string();
                    if v != predicted {
                        problems.push(format!("oracle minimum {v}"));
                    }
                    let witness_ok = r.witness.as_ref().is_some_and(|w| verify_cut(&g, w, shape, mode).pass);
                    if !witness_ok {
                        problems.push("oracle witness failed verification".into());
                    }
                } else {
                    oracle_col = format!(">={}", r.lower_bound);
                    budget_tripped = true;
                }
                OracleEcho {
                    query: "min".into(),
                    outcome: if r.value.is_some() { "certified" } else { "budget" }.into(),
                    value: r.value,
                    lower_bound: r.lower_bound,
                    subsets_checked: r.subsets_checked,
                    note: r.budget_note,
                }
            }
            Err(e) => {
                problems.push(format!("oracle: {e}"));
                OracleEcho {
                    query: "min".into(),
                    outcome: "error".into(),
                    value: None,
                    lower_bound: 0,
                    subsets_checked: 0,
                    note: Some(e.to_string()),
                }
            }
        };
        result.oracle = Some(echo);
    }

    result.status = if !problems.is_empty() {
        Status::Fail
    } else if budget_tripped {
        Status::SkippedBudget
    } else {
        Status::Pass
    };
    if !problems.is_empty() {
        result.note = Some(problems.join("; "));
    } else if budget_tripped {
        result.note = result.oracle.as_ref().and_then(|o| o.note.clone());
    }
    let row = match &report {
        Some(r) => format!("{},{oracle_col},{}", csv_row(&name, &params, Some(predicted), r), result.status),
        None => bare(Some(predicted), &oracle_col, result.status),
    };
    (row, result)
}
