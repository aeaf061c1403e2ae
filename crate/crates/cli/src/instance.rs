//! Turning command-line parameters into topologies, shapes and budgets.

use std::time::Duration;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use dcn_core::cuts::Family;
use dcn_core::search::SearchBudget;
use dcn_core::{bcdc, dcell, Error, Graph, Mode, ShapeSpec};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Dcell,
    Cq,
    Bcdc,
}

#[derive(Args, Debug, Clone)]
pub struct TopologyArgs {
    #[arg(value_enum)]
    pub family: FamilyArg,
    /// DCell level (DCell only).
    #[arg(long)]
    pub m: Option<usize>,
    /// DCell cell size, or crossed cube / BCDC dimension.
    #[arg(long)]
    pub n: usize,
    /// Refuse to build graphs with more vertices than this.
    #[arg(long, default_value_t = dcell::DEFAULT_VERTEX_BUDGET)]
    pub max_vertices: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Topology {
    DCell { m: usize, n: usize },
    Cq { n: usize },
    Bcdc { n: usize },
}

impl TopologyArgs {
    pub fn topology(&self) -> Result<Topology> {
        Ok(match (self.family, self.m) {
            (FamilyArg::Dcell, Some(m)) => Topology::DCell { m, n: self.n },
            (FamilyArg::Dcell, None) => bail!(Error::OutOfRange("dcell needs --m".into())),
            (_, Some(_)) => bail!(Error::OutOfRange("--m only applies to dcell".into())),
            (FamilyArg::Cq, None) => Topology::Cq { n: self.n },
            (FamilyArg::Bcdc, None) => Topology::Bcdc { n: self.n },
        })
    }
}

impl Topology {
    pub fn name(self) -> &'static str {
        match self {
            Topology::DCell { .. } => "dcell",
            Topology::Cq { .. } => "cq",
            Topology::Bcdc { .. } => "bcdc",
        }
    }

    pub fn params(self) -> String {
        match self {
            Topology::DCell { m, n } => format!("m={m} n={n}"),
            Topology::Cq { n } | Topology::Bcdc { n } => format!("n={n}"),
        }
    }

    pub fn build(self, max_vertices: usize) -> Result<Graph> {
        Ok(match self {
            Topology::DCell { m, n } => dcell::build_dcell(m, n, max_vertices)?,
            Topology::Cq { n } => bcdc::build_crossed_cube(n, max_vertices)?,
            Topology::Bcdc { n } => bcdc::build_bcdc(n, max_vertices)?,
        })
    }

    /// The family carrying closed-form values and explicit cuts.
    pub fn family(self) -> Result<Family> {
        match self {
            Topology::DCell { m, n } => Ok(Family::DCell { m, n }),
            Topology::Bcdc { n } => Ok(Family::Bcdc { n }),
            Topology::Cq { .. } => bail!(Error::OutOfRange("crossed cubes have no explicit cuts; use dcell or bcdc".into())),
        }
    }
}

impl From<Family> for Topology {
    fn from(f: Family) -> Self {
        match f {
            Family::DCell { m, n } => Topology::DCell { m, n },
            Family::Bcdc { n } => Topology::Bcdc { n },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ShapeKind {
    Star,
    Path,
    Cycle,
    Clique,
    Single,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Structure,
    Substructure,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Structure => Mode::Structure,
            ModeArg::Substructure => Mode::Substructure,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct ShapeArgs {
    #[arg(long, value_enum)]
    pub shape: Option<ShapeKind>,
    /// Star leaves.
    #[arg(long)]
    pub t: Option<usize>,
    /// Path or cycle length.
    #[arg(long)]
    pub k: Option<usize>,
    /// Clique order.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long, value_enum, default_value = "structure")]
    pub mode: ModeArg,
}

impl ShapeArgs {
    /// The requested shape, or `None` when `--shape` was not given.
    pub fn spec(&self) -> Result<Option<ShapeSpec>> {
        let Some(kind) = self.shape else {
            if self.t.or(self.k).or(self.s).is_some() {
                bail!(Error::OutOfRange("--t/--k/--s need --shape".into()));
            }
            return Ok(None);
        };
        let (needed, value, stray) = match kind {
            ShapeKind::Star => ("--t", self.t, self.k.or(self.s)),
            ShapeKind::Path | ShapeKind::Cycle => ("--k", self.k, self.t.or(self.s)),
            ShapeKind::Clique => ("--s", self.s, self.t.or(self.k)),
            ShapeKind::Single => ("", Some(1), self.t.or(self.k).or(self.s)),
        };
        if stray.is_some() {
            bail!(Error::OutOfRange(format!("only {needed} applies to {kind:?}").to_lowercase()));
        }
        let Some(v) = value else {
            bail!(Error::OutOfRange(format!("{kind:?} needs {needed}").to_lowercase()));
        };
        let spec = match kind {
            ShapeKind::Star => ShapeSpec::Star(v),
            ShapeKind::Path => ShapeSpec::Path(v),
            ShapeKind::Cycle => ShapeSpec::Cycle(v),
            ShapeKind::Clique => ShapeSpec::Clique(v),
            ShapeKind::Single => ShapeSpec::Single,
        };
        Ok(Some(spec.validate()?))
    }

    pub fn mode(&self) -> Mode {
        self.mode.into()
    }
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Member subsets examined per oracle call before giving up.
    #[arg(long, default_value_t = 100_000_000)]
    pub max_subsets: u64,
    /// Wall-clock seconds per oracle call.
    #[arg(long, env = dcn_core::search::BUDGET_SECS_ENV, default_value_t = 600,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub time_cap: u64,
    /// Largest cut size tried.
    #[arg(long, default_value_t = 64)]
    pub max_members: usize,
    /// Distinct shape copies kept in memory.
    #[arg(long, default_value_t = 5_000_000)]
    pub max_candidates: usize,
}

impl BudgetArgs {
    pub fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_members: self.max_members,
            max_candidates: self.max_candidates,
            max_subsets: self.max_subsets,
            time_cap: Duration::from_secs(self.time_cap),
        }
    }
}

/// Budget as echoed into manifests.
#[derive(Clone, Debug, Serialize)]
pub struct BudgetEcho {
    pub max_members: usize,
    pub max_candidates: usize,
    pub max_subsets: u64,
    pub time_cap_secs: u64,
}

impl From<&SearchBudget> for BudgetEcho {
    fn from(b: &SearchBudget) -> Self {
        BudgetEcho {
            max_members: b.max_members,
            max_candidates: b.max_candidates,
            max_subsets: b.max_subsets,
            time_cap_secs: b.time_cap.as_secs(),
        }
    }
}
