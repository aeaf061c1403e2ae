//! Exhaustive oracles: smallest structure cuts and g-extra connectivity by
//! brute-force enumeration of member subsets.
//!
//! Candidates (shape copies, or single vertices) are stored as vertex
//! bitsets and deduplicated by vertex set. Sizes are searched in increasing
//! order, so a "no" at size `s` means no family of at most `s` members works.
//! Any cap trip turns the answer into a budget report carrying the bound
//! proven so far; "no" is never reported from a partial enumeration.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::connectivity::min_vertex_cut;
use crate::graph::{Graph, VertexId};
use crate::shape::{for_each_copy, CutMember, Mode, ShapeSpec, StructureCut};
use crate::{Error, Result};

/// Caps on one oracle call.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest family size tried.
    pub max_members: usize,
    /// Largest number of distinct candidate vertex sets kept in memory.
    pub max_candidates: usize,
    /// Largest number of member subsets examined.
    pub max_subsets: u64,
    pub time_cap: Duration,
}

/// Environment variable overriding [`SearchBudget::time_cap`] in seconds.
pub const BUDGET_SECS_ENV: &str = "DCN_BUDGET_SECS";

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_members: 64,
            max_candidates: 5_000_000,
            max_subsets: 100_000_000,
            time_cap: Duration::from_secs(600),
        }
    }
}

impl SearchBudget {
    /// Applies `DCN_BUDGET_SECS` when it holds a positive integer.
    pub fn with_env_override(mut self) -> Self {
        if let Some(secs) = std::env::var(BUDGET_SECS_ENV).ok().and_then(|s| s.trim().parse::<u64>().ok()) {
            if secs > 0 {
                self.time_cap = Duration::from_secs(secs);
            }
        }
        self
    }
}

/// Answer of a bounded existence query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutSearch {
    Found(StructureCut),
    NotFound,
    /// No cut with fewer than `lower_bound` members exists; larger sizes
    /// were not settled.
    BudgetExceeded { lower_bound: usize, reason: String },
}

/// Result of a minimum search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCut {
    /// The certified minimum, when the search completed.
    pub value: Option<usize>,
    /// Every family smaller than this was ruled out.
    pub lower_bound: usize,
    pub witness: Option<StructureCut>,
    /// Why the search stopped early.
    pub budget_note: Option<String>,
    pub subsets_checked: u64,
    pub candidates: usize,
}

/// Result of a g-extra connectivity search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtraConnectivity {
    pub value: Option<usize>,
    pub lower_bound: usize,
    pub witness: Option<Vec<VertexId>>,
    pub budget_note: Option<String>,
    pub subsets_checked: u64,
}

/// What a removed set must achieve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Goal {
    /// Disconnected, or at most one vertex left.
    Cut,
    /// Disconnected with every component larger than `h`.
    Extra(usize),
}

enum SizeOutcome {
    Found(Vec<usize>),
    None,
    Aborted(String),
}

/// Does any family of at most `size_bound` members of the given shape cut `g`?
pub fn exists_cut_of_size(
    g: &Graph,
    shape: ShapeSpec,
    mode: Mode,
    size_bound: usize,
    budget: &SearchBudget,
) -> Result<CutSearch> {
    check_input(g)?;
    if size_bound == 0 {
        return Err(Error::OutOfRange("size bound must be at least 1".into()));
    }
    let run = |s: &mut dyn Searcher| -> CutSearch {
        for size in 1..=size_bound {
            match s.try_size(size) {
                SizeOutcome::Found(idx) => return CutSearch::Found(s.witness(&idx)),
                SizeOutcome::None => {}
                SizeOutcome::Aborted(reason) => return CutSearch::BudgetExceeded { lower_bound: size, reason },
            }
        }
        CutSearch::NotFound
    };
    with_searcher(g, shape, mode, Goal::Cut, budget, |s| Ok(run(s)))
}

/// Smallest number of members of a cut, found by increasing the size from 1.
pub fn min_structure_cut(g: &Graph, shape: ShapeSpec, mode: Mode, budget: &SearchBudget) -> Result<MinCut> {
    check_input(g)?;
    with_searcher(g, shape, mode, Goal::Cut, budget, |s| {
        let mut size = 1;
        loop {
            let outcome = if size > budget.max_members {
                SizeOutcome::Aborted(format!("member cap {} reached", budget.max_members))
            } else {
                s.try_size(size)
            };
            match outcome {
                SizeOutcome::Found(idx) => {
                    return Ok(MinCut {
                        value: Some(size),
                        lower_bound: size,
                        witness: Some(s.witness(&idx)),
                        budget_note: None,
                        subsets_checked: s.checked(),
                        candidates: s.candidate_count(),
                    })
                }
                SizeOutcome::None => size += 1,
                SizeOutcome::Aborted(reason) => {
                    return Ok(MinCut {
                        value: None,
                        lower_bound: size,
                        witness: None,
                        budget_note: Some(reason),
                        subsets_checked: s.checked(),
                        candidates: s.candidate_count(),
                    })
                }
            }
        }
    })
}

/// `κ_h(g)`: fewest vertices whose removal leaves at least two components,
/// each with more than `h` vertices. `None` when no such set exists.
pub fn g_extra_connectivity(g: &Graph, h: usize, budget: &SearchBudget) -> Result<ExtraConnectivity> {
    check_input(g)?;
    let start = if h == 0 { 1 } else { min_vertex_cut(g)?.max(1) };
    with_searcher(g, ShapeSpec::Single, Mode::Structure, Goal::Extra(h), budget, |s| {
        let n = g.vertex_count();
        let mut size = start;
        while size + 2 * (h + 1) <= n {
            let outcome = if size > budget.max_members {
                SizeOutcome::Aborted(format!("member cap {} reached", budget.max_members))
            } else {
                s.try_size(size)
            };
            match outcome {
                SizeOutcome::Found(idx) => {
                    let mut w: Vec<VertexId> = s.witness(&idx).members.iter().map(|m| g.id(&m.vertices[0]).unwrap()).collect();
                    w.sort_unstable();
                    return Ok(ExtraConnectivity {
                        value: Some(size),
                        lower_bound: size,
                        witness: Some(w),
                        budget_note: None,
                        subsets_checked: s.checked(),
                    });
                }
                SizeOutcome::None => size += 1,
                SizeOutcome::Aborted(reason) => {
                    return Ok(ExtraConnectivity {
                        value: None,
                        lower_bound: size,
                        witness: None,
                        budget_note: Some(reason),
                        subsets_checked: s.checked(),
                    })
                }
            }
        }
        Ok(ExtraConnectivity {
            value: None,
            lower_bound: size,
            witness: None,
            budget_note: None,
            subsets_checked: s.checked(),
        })
    })
}

fn check_input(g: &Graph) -> Result<()> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Object-safe view of [`Search`] so callers need not be generic over the
/// bitset width.
trait Searcher {
    fn try_size(&mut self, size: usize) -> SizeOutcome;
    fn witness(&self, idx: &[usize]) -> StructureCut;
    fn checked(&self) -> u64;
    fn candidate_count(&self) -> usize;
}

fn with_searcher<T>(
    g: &Graph,
    shape: ShapeSpec,
    mode: Mode,
    goal: Goal,
    budget: &SearchBudget,
    f: impl FnOnce(&mut dyn Searcher) -> Result<T>,
) -> Result<T> {
    shape.validate()?;
    match g.vertex_count().div_ceil(64) {
        1 => f(&mut Search::<1>::new(g, shape, mode, goal, budget)),
        2 => f(&mut Search::<2>::new(g, shape, mode, goal, budget)),
        3..=4 => f(&mut Search::<4>::new(g, shape, mode, goal, budget)),
        5..=8 => f(&mut Search::<8>::new(g, shape, mode, goal, budget)),
        9..=16 => f(&mut Search::<16>::new(g, shape, mode, goal, budget)),
        _ => Err(Error::OutOfRange(format!(
            "exhaustive search handles at most 1024 vertices, got {}",
            g.vertex_count()
        ))),
    }
}

type Bits<const W: usize> = [u64; W];

fn set_bit<const W: usize>(b: &mut Bits<W>, v: usize) {
    b[v / 64] |= 1 << (v % 64);
}

fn or<const W: usize>(a: &Bits<W>, b: &Bits<W>) -> Bits<W> {
    std::array::from_fn(|i| a[i] | b[i])
}

fn count<const W: usize>(b: &Bits<W>) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

fn first_bit<const W: usize>(b: &Bits<W>) -> Option<usize> {
    b.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn clear_below<const W: usize>(b: &mut Bits<W>, v: usize) {
    for (i, w) in b.iter_mut().enumerate() {
        let lo = i * 64;
        if v >= lo + 64 {
            *w = 0;
        } else if v > lo {
            *w &= !0 << (v - lo);
        }
    }
}

/// Removes and returns the lowest set bit.
fn pop_bit<const W: usize>(b: &mut Bits<W>) -> Option<usize> {
    for (i, w) in b.iter_mut().enumerate() {
        if *w != 0 {
            let t = w.trailing_zeros() as usize;
            *w &= *w - 1;
            return Some(i * 64 + t);
        }
    }
    None
}

/// Bitset view of the host graph.
struct Host<const W: usize> {
    adj: Vec<Bits<W>>,
    full: Bits<W>,
    /// The same adjacency as single words when there are at most 128
    /// vertices; the articulation-point pass runs on these.
    adj128: Option<Vec<u128>>,
}

impl<const W: usize> Host<W> {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.vertex_count())
            .map(|v| {
                let mut b = [0; W];
                for &u in g.neighbors(v) {
                    set_bit(&mut b, u);
                }
                b
            })
            .collect();
        let mut full = [0; W];
        for v in 0..g.vertex_count() {
            set_bit(&mut full, v);
        }
        let adj128 = (g.vertex_count() <= 128).then(|| {
            (0..g.vertex_count()).map(|v| g.neighbors(v).iter().fold(0u128, |b, &u| b | 1 << u)).collect()
        });
        Host { adj, full, adj128 }
    }

    fn alive(&self, removed: &Bits<W>) -> Bits<W> {
        std::array::from_fn(|i| self.full[i] & !removed[i])
    }

    /// Vertices reachable from `root` inside `alive`.
    fn reach(&self, alive: &Bits<W>, root: usize) -> Bits<W> {
        let mut seen = [0; W];
        set_bit(&mut seen, root);
        let mut frontier = seen;
        while let Some(v) = pop_bit(&mut frontier) {
            for i in 0..W {
                let new = self.adj[v][i] & alive[i] & !seen[i];
                seen[i] |= new;
                frontier[i] |= new;
            }
        }
        seen
    }

    fn meets(&self, goal: Goal, removed: &Bits<W>) -> bool {
        let alive = self.alive(removed);
        match goal {
            Goal::Cut => {
                let Some(root) = first_bit(&alive) else { return true };
                if count(&alive) <= 1 {
                    return true;
                }
                self.reach(&alive, root) != alive
            }
            Goal::Extra(h) => {
                let mut rest = alive;
                let mut components = 0;
                while let Some(root) = first_bit(&rest) {
                    let comp = self.reach(&rest, root);
                    if count(&comp) <= h {
                        return false;
                    }
                    components += 1;
                    for i in 0..W {
                        rest[i] &= !comp[i];
                    }
                }
                components >= 2
            }
        }
    }

    /// Articulation points of the subgraph induced by `alive`, provided it
    /// is connected; `None` otherwise.
    ///
    /// Iterative DFS keeping, per open vertex, its subtree and the union of
    /// the subtree's neighborhoods. Edges leave a subtree only towards
    /// ancestors, so a non-root parent `p` separates the subtree of child `v`
    /// exactly when that union reaches nothing outside the subtree but `p`.
    fn articulation_points(&self, alive: &Bits<W>, scratch: &mut Scratch<W>) -> Option<Bits<W>> {
        if let Some(adj) = &self.adj128 {
            let alive = alive.iter().take(2).enumerate().fold(0u128, |b, (i, &w)| b | (w as u128) << (64 * i));
            let points = articulation_points_128(adj, alive)?;
            return Some(std::array::from_fn(|i| if i < 2 { (points >> (64 * i)) as u64 } else { 0 }));
        }
        let root = first_bit(alive)?;
        let Scratch { frames } = scratch;
        let mut visited = [0; W];
        set_bit(&mut visited, root);
        let mut points = [0; W];
        let mut root_children = 0;
        let mut depth = 0;
        frames[0] = Frame::open(root, &self.adj[root]);
        loop {
            let v = frames[depth].vertex;
            let mut next = [0; W];
            for i in 0..W {
                next[i] = self.adj[v][i] & alive[i] & !visited[i];
            }
            if let Some(x) = first_bit(&next) {
                set_bit(&mut visited, x);
                if depth == 0 {
                    root_children += 1;
                }
                depth += 1;
                frames[depth] = Frame::open(x, &self.adj[x]);
            } else {
                if depth == 0 {
                    break;
                }
                let done = frames[depth];
                depth -= 1;
                let parent = &mut frames[depth];
                if depth > 0 {
                    let mut escapes = false;
                    for i in 0..W {
                        let mut out = done.reach[i] & alive[i] & !done.subtree[i];
                        if i == parent.vertex / 64 {
                            out &= !(1 << (parent.vertex % 64));
                        }
                        escapes |= out != 0;
                    }
                    if !escapes {
                        set_bit(&mut points, parent.vertex);
                    }
                }
                for i in 0..W {
                    parent.subtree[i] |= done.subtree[i];
                    parent.reach[i] |= done.reach[i];
                }
            }
        }
        if visited != *alive {
            return None;
        }
        if root_children >= 2 {
            set_bit(&mut points, root);
        }
        Some(points)
    }
}

/// [`Host::articulation_points`] on single-word bitsets.
fn articulation_points_128(adj: &[u128], alive: u128) -> Option<u128> {
    if alive == 0 {
        return None;
    }
    // (vertex, subtree, reach) per open vertex; depth never exceeds 128.
    let mut vertex = [0u8; 128];
    let mut subtree = [0u128; 128];
    let mut reach = [0u128; 128];
    let root = alive.trailing_zeros() as usize;
    let mut visited = 1u128 << root;
    let mut points = 0u128;
    let mut root_children = 0;
    let mut depth = 0;
    vertex[0] = root as u8;
    subtree[0] = visited;
    reach[0] = adj[root];
    loop {
        let v = vertex[depth] as usize;
        let next = adj[v] & alive & !visited;
        if next != 0 {
            let x = next.trailing_zeros() as usize;
            let bit = 1u128 << x;
            visited |= bit;
            if depth == 0 {
                root_children += 1;
            }
            depth += 1;
            vertex[depth] = x as u8;
            subtree[depth] = bit;
            reach[depth] = adj[x];
        } else {
            if depth == 0 {
                break;
            }
            let (sub, out) = (subtree[depth], reach[depth]);
            depth -= 1;
            let p = vertex[depth] as usize;
            if depth > 0 && out & alive & !sub & !(1u128 << p) == 0 {
                points |= 1 << p;
            }
            subtree[depth] |= sub;
            reach[depth] |= out;
        }
    }
    if visited != alive {
        return None;
    }
    if root_children >= 2 {
        points |= 1 << root;
    }
    Some(points)
}

#[derive(Clone, Copy)]
struct Frame<const W: usize> {
    vertex: usize,
    subtree: Bits<W>,
    /// Union of the neighborhoods of `subtree`.
    reach: Bits<W>,
}

impl<const W: usize> Frame<W> {
    fn open(v: usize, adj: &Bits<W>) -> Self {
        let mut subtree = [0; W];
        set_bit(&mut subtree, v);
        Frame { vertex: v, subtree, reach: *adj }
    }
}

struct Scratch<const W: usize> {
    frames: Vec<Frame<W>>,
}

impl<const W: usize> Scratch<W> {
    fn new(n: usize) -> Self {
        Scratch { frames: vec![Frame { vertex: 0, subtree: [0; W], reach: [0; W] }; n] }
    }
}

struct Search<'g, const W: usize> {
    g: &'g Graph,
    host: Host<W>,
    shape: ShapeSpec,
    mode: Mode,
    goal: Goal,
    budget: SearchBudget,
    started: Instant,
    /// Distinct candidate vertex sets in enumeration order, with the first
    /// vertex list realizing each.
    sets: Vec<Bits<W>>,
    members: Vec<Vec<VertexId>>,
    /// Whether `sets` holds every candidate (false until size 1 has streamed
    /// them all, or when the candidate cap tripped).
    complete: bool,
    /// Every candidate is a single vertex, and candidate `i` is vertex `i`.
    singles: bool,
    checked: u64,
}

impl<'g, const W: usize> Search<'g, W> {
    fn new(g: &'g Graph, shape: ShapeSpec, mode: Mode, goal: Goal, budget: &SearchBudget) -> Self {
        Search {
            g,
            host: Host::new(g),
            shape,
            mode,
            goal,
            budget: budget.clone(),
            started: Instant::now(),
            sets: Vec::new(),
            members: Vec::new(),
            complete: false,
            singles: shape == ShapeSpec::Single,
            checked: 0,
        }
    }

    fn out_of_time(&self) -> bool {
        self.started.elapsed() > self.budget.time_cap
    }

    /// Size 1: stream copies, checking each and collecting distinct sets.
    fn stream_singletons(&mut self) -> SizeOutcome {
        let mut index: HashMap<Bits<W>, usize> = HashMap::new();
        let mut sets = Vec::new();
        let mut members = Vec::new();
        let mut overflow = false;
        let mut found = None;
        let mut aborted = None;
        let mut checked = 0u64;
        let host = &self.host;
        let (goal, cap, max_subsets) = (self.goal, self.budget.max_candidates, self.budget.max_subsets);
        let started = self.started;
        let time_cap = self.budget.time_cap;
        let _ = for_each_copy(self.g, self.shape, self.mode, |ids| {
            let mut b = [0; W];
            for &v in ids {
                set_bit(&mut b, v);
            }
            if index.contains_key(&b) {
                return ControlFlow::Continue(());
            }
            checked += 1;
            if host.meets(goal, &b) {
                found = Some(ids.to_vec());
                return ControlFlow::Break(());
            }
            if checked > max_subsets {
                aborted = Some(format!("subset cap {max_subsets} reached at size 1"));
                return ControlFlow::Break(());
            }
            if checked % 4096 == 0 && started.elapsed() > time_cap {
                aborted = Some(format!("time cap {}s reached at size 1", time_cap.as_secs()));
                return ControlFlow::Break(());
            }
            if !overflow {
                if sets.len() >= cap {
                    overflow = true;
                    index.clear();
                    sets.clear();
                    members.clear();
                } else {
                    index.insert(b, sets.len());
                    sets.push(b);
                    members.push(ids.to_vec());
                }
            }
            ControlFlow::Continue(())
        });
        self.checked += checked;
        if let Some(ids) = found {
            self.sets = vec![[0; W]];
            self.members = vec![ids];
            return SizeOutcome::Found(vec![0]);
        }
        if let Some(reason) = aborted {
            return SizeOutcome::Aborted(reason);
        }
        self.sets = sets;
        self.members = members;
        self.complete = !overflow;
        SizeOutcome::None
    }

    fn collect_all(&mut self) -> Option<String> {
        if self.complete {
            return None;
        }
        let mut index: HashMap<Bits<W>, ()> = HashMap::new();
        let mut sets = Vec::new();
        let mut members = Vec::new();
        let cap = self.budget.max_candidates;
        let mut overflow = false;
        let _ = for_each_copy(self.g, self.shape, self.mode, |ids| {
            let mut b = [0; W];
            for &v in ids {
                set_bit(&mut b, v);
            }
            if index.insert(b, ()).is_none() {
                if sets.len() >= cap {
                    overflow = true;
                    return ControlFlow::Break(());
                }
                sets.push(b);
                members.push(ids.to_vec());
            }
            ControlFlow::Continue(())
        });
        if overflow {
            return Some(format!("more than {cap} distinct candidates"));
        }
        self.sets = sets;
        self.members = members;
        self.complete = true;
        None
    }

    fn combos(&mut self, size: usize) -> SizeOutcome {
        if let Some(reason) = self.collect_all() {
            return SizeOutcome::Aborted(reason);
        }
        let c = self.sets.len();
        if c < size {
            return SizeOutcome::None;
        }
        let stop = AtomicBool::new(false);
        let counter = AtomicU64::new(self.checked);
        let abort_reason = std::sync::Mutex::new(None::<String>);
        let ctx = ComboCtx {
            host: &self.host,
            sets: &self.sets,
            goal: self.goal,
            singles: self.singles && self.goal == Goal::Cut,
            size,
            stop: &stop,
            counter: &counter,
            max_subsets: self.budget.max_subsets,
            started: self.started,
            time_cap: self.budget.time_cap,
            abort_reason: &abort_reason,
        };
        let found = (0..=c - size).into_par_iter().find_map_first(|first| {
            if ctx.stop.load(Ordering::Relaxed) {
                return None;
            }
            let mut scratch = Scratch::new(ctx.host.adj.len());
            let mut chosen = vec![first];
            let mut local = 0u64;
            let r = ctx.descend(first + 1, self.sets[first], &mut chosen, &mut local, &mut scratch);
            ctx.flush(&mut local);
            r.then_some(chosen)
        });
        self.checked = counter.load(Ordering::Relaxed);
        if let Some(idx) = found {
            return SizeOutcome::Found(idx);
        }
        if let Some(reason) = abort_reason.into_inner().unwrap() {
            return SizeOutcome::Aborted(reason);
        }
        if self.out_of_time() {
            return SizeOutcome::Aborted(format!("time cap {}s reached at size {size}", self.budget.time_cap.as_secs()));
        }
        SizeOutcome::None
    }
}

struct ComboCtx<'a, const W: usize> {
    host: &'a Host<W>,
    sets: &'a [Bits<W>],
    goal: Goal,
    singles: bool,
    size: usize,
    stop: &'a AtomicBool,
    counter: &'a AtomicU64,
    max_subsets: u64,
    started: Instant,
    time_cap: Duration,
    abort_reason: &'a std::sync::Mutex<Option<String>>,
}

const FLUSH_EVERY: u64 = 1 << 14;

impl<const W: usize> ComboCtx<'_, W> {
    fn abort(&self, reason: String) {
        let mut slot = self.abort_reason.lock().unwrap();
        slot.get_or_insert(reason);
        self.stop.store(true, Ordering::Relaxed);
    }

    /// Publishes the local count and checks the caps; false means stop.
    fn flush(&self, local: &mut u64) -> bool {
        let total = self.counter.fetch_add(*local, Ordering::Relaxed) + *local;
        *local = 0;
        if total > self.max_subsets {
            self.abort(format!("subset cap {} reached at size {}", self.max_subsets, self.size));
        } else if self.started.elapsed() > self.time_cap {
            self.abort(format!("time cap {}s reached at size {}", self.time_cap.as_secs(), self.size));
        }
        !self.stop.load(Ordering::Relaxed)
    }

    /// Extends `chosen` (whose union is `acc`) with indices from `start`;
    /// true when `chosen` ends up a witness.
    fn descend(&self, start: usize, acc: Bits<W>, chosen: &mut Vec<usize>, local: &mut u64, scratch: &mut Scratch<W>) -> bool {
        let c = self.sets.len();
        let left = self.size - chosen.len();
        if left == 1 {
            return self.last_level(start, &acc, chosen, local, scratch);
        }
        for j in start..=c - left {
            if self.stop.load(Ordering::Relaxed) {
                return false;
            }
            chosen.push(j);
            if self.descend(j + 1, or(&acc, &self.sets[j]), chosen, local, scratch) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn last_level(&self, start: usize, acc: &Bits<W>, chosen: &mut Vec<usize>, local: &mut u64, scratch: &mut Scratch<W>) -> bool {
        let c = self.sets.len();
        if *local >= FLUSH_EVERY && !self.flush(local) {
            return false;
        }
        *local += (c - start) as u64;
        if self.singles {
            // One articulation-point pass settles every last vertex at once.
            let alive = self.host.alive(acc);
            let hit = if count(&alive) <= 2 {
                (start < c).then_some(start)
            } else {
                match self.host.articulation_points(&alive, scratch) {
                    Some(points) => {
                        let mut later = points;
                        clear_below(&mut later, start);
                        first_bit(&later).filter(|&j| j < c)
                    }
                    None => (start..c).find(|&j| self.host.meets(Goal::Cut, &or(acc, &self.sets[j]))),
                }
            };
            if let Some(j) = hit {
                chosen.push(j);
                return true;
            }
            return false;
        }
        for j in start..c {
            let s = &self.sets[j];
            // A member inside the union adds nothing; that union was
            // already rejected at a smaller size.
            if (0..W).all(|i| s[i] & !acc[i] == 0) {
                continue;
            }
            if self.host.meets(self.goal, &or(acc, s)) {
                chosen.push(j);
                return true;
            }
        }
        false
    }
}

impl<const W: usize> Searcher for Search<'_, W> {
    fn try_size(&mut self, size: usize) -> SizeOutcome {
        if self.out_of_time() {
            return SizeOutcome::Aborted(format!("time cap {}s reached before size {size}", self.budget.time_cap.as_secs()));
        }
        if size == 1 && !self.complete {
            return self.stream_singletons();
        }
        self.combos(size)
    }

    fn witness(&self, idx: &[usize]) -> StructureCut {
        let members = idx
            .iter()
            .map(|&i| CutMember::from_ids(self.g, self.shape, &self.members[i]))
            .collect();
        StructureCut::new(members, self.mode)
    }

    fn checked(&self) -> u64 {
        self.checked
    }

    fn candidate_count(&self) -> usize {
        self.members.len()
    }
}

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(x) => x / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}
