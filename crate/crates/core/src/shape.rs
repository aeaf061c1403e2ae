//! Fault shapes, cut members and canonical enumeration of shaped subgraphs.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::graph::{Graph, VertexId};
use crate::{Error, Result};

/// The shape `H` every cut member must realize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeSpec {
    /// `K_{1,t}` with `t >= 1` leaves.
    Star(usize),
    /// `P_k` on `k >= 1` vertices.
    Path(usize),
    /// `C_k` on `k >= 3` vertices.
    Cycle(usize),
    /// `K_s` on `s >= 1` vertices.
    Clique(usize),
    /// `K_1`.
    Single,
}

impl ShapeSpec {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            ShapeSpec::Star(t) => t >= 1,
            ShapeSpec::Path(k) => k >= 1,
            ShapeSpec::Cycle(k) => k >= 3,
            ShapeSpec::Clique(s) => s >= 1,
            ShapeSpec::Single => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::OutOfRange(format!("invalid shape {self}")))
        }
    }

    /// Vertex count of the full shape.
    pub fn order(self) -> usize {
        match self {
            ShapeSpec::Star(t) => t + 1,
            ShapeSpec::Path(k) | ShapeSpec::Cycle(k) | ShapeSpec::Clique(k) => k,
            ShapeSpec::Single => 1,
        }
    }
}

impl fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeSpec::Star(t) => write!(f, "star({t})"),
            ShapeSpec::Path(k) => write!(f, "path({k})"),
            ShapeSpec::Cycle(k) => write!(f, "cycle({k})"),
            ShapeSpec::Clique(s) => write!(f, "clique({s})"),
            ShapeSpec::Single => f.write_str("single"),
        }
    }
}

impl FromStr for ShapeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadLabel(s.to_owned());
        if s == "single" {
            return Ok(ShapeSpec::Single);
        }
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let arg: usize = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let shape = match name {
            "star" => ShapeSpec::Star(arg),
            "path" => ShapeSpec::Path(arg),
            "cycle" => ShapeSpec::Cycle(arg),
            "clique" => ShapeSpec::Clique(arg),
            _ => return Err(bad()),
        };
        shape.validate()
    }
}

/// Whether members must be isomorphic to `H` or may be any connected subgraph of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Structure,
    Substructure,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Structure => "structure",
            Mode::Substructure => "substructure",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "structure" => Ok(Mode::Structure),
            "substructure" => Ok(Mode::Substructure),
            _ => Err(Error::BadLabel(s.to_owned())),
        }
    }
}

/// One subgraph of a cut. Stars list the center first; paths and cycles list
/// vertices in traversal order; cliques in any order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutMember {
    pub shape: ShapeSpec,
    pub vertices: Vec<String>,
}

impl CutMember {
    pub fn new<I, S>(shape: ShapeSpec, vertices: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        CutMember {
            shape,
            vertices: vertices.into_iter().map(Into::into).collect(),
        }
    }

    pub(crate) fn from_ids(g: &Graph, shape: ShapeSpec, ids: &[VertexId]) -> Self {
        CutMember::new(shape, ids.iter().map(|&v| g.label(v).to_owned()))
    }
}

/// A family of subgraphs whose joint removal should disconnect the host.
/// Members may share vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCut {
    pub members: Vec<CutMember>,
    pub mode: Mode,
}

impl StructureCut {
    pub fn new(members: Vec<CutMember>, mode: Mode) -> Self {
        StructureCut { members, mode }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Re-tag every member with `shape` under `mode`.
    pub fn retagged(mut self, shape: ShapeSpec, mode: Mode) -> Self {
        for m in &mut self.members {
            m.shape = shape;
        }
        self.mode = mode;
        self
    }

    /// `V(F)`: the distinct labels over all members, sorted.
    pub fn vertex_union(&self) -> Vec<String> {
        let mut all: Vec<String> = self.members.iter().flat_map(|m| m.vertices.iter().cloned()).collect();
        all.sort();
        all.dedup();
        all
    }
}

/// Does `member` realize its shape in `g` under `mode`?
pub fn is_shape(g: &Graph, member: &CutMember, mode: Mode) -> Result<bool> {
    let mut ids = Vec::with_capacity(member.vertices.len());
    for l in &member.vertices {
        let v = g.require(l)?;
        if ids.contains(&v) {
            return Err(Error::DuplicateMemberVertex(l.clone()));
        }
        ids.push(v);
    }
    Ok(is_shape_ids(g, member.shape, &ids, mode))
}

/// [`is_shape`] on distinct vertex ids.
pub fn is_shape_ids(g: &Graph, shape: ShapeSpec, ids: &[VertexId], mode: Mode) -> bool {
    let len = ids.len();
    if len == 0 {
        return false;
    }
    let chain = || ids.windows(2).all(|w| g.has_edge(w[0], w[1]));
    let star = || ids[1..].iter().all(|&l| g.has_edge(ids[0], l));
    match (shape, mode) {
        (ShapeSpec::Single, _) => len == 1,
        (ShapeSpec::Star(t), Mode::Structure) => len == t + 1 && star(),
        (ShapeSpec::Star(t), Mode::Substructure) => len <= t + 1 && star(),
        (ShapeSpec::Path(k), Mode::Structure) => len == k && chain(),
        (ShapeSpec::Path(k), Mode::Substructure) => len <= k && chain(),
        (ShapeSpec::Cycle(k), Mode::Structure) => {
            len == k && k >= 3 && chain() && g.has_edge(ids[len - 1], ids[0])
        }
        // C_k itself, or any P_j with j <= k; both are chains.
        (ShapeSpec::Cycle(k), Mode::Substructure) => len <= k && chain(),
        (ShapeSpec::Clique(s), Mode::Structure) => {
            len == s && ids.iter().enumerate().all(|(i, &a)| ids[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        }
        (ShapeSpec::Clique(s), Mode::Substructure) => len <= s && induces_connected(g, ids),
    }
}

fn induces_connected(g: &Graph, ids: &[VertexId]) -> bool {
    let mut reached = vec![false; ids.len()];
    reached[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for (j, &b) in ids.iter().enumerate() {
            if !reached[j] && g.has_edge(ids[i], b) {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    reached.into_iter().all(|r| r)
}

/// Every canonical copy of `shape` (or of its connected subgraphs, in
/// substructure mode) as a [`CutMember`] tagged with `shape`.
pub fn enumerate_shape_copies(g: &Graph, shape: ShapeSpec, mode: Mode) -> Vec<CutMember> {
    let mut out = Vec::new();
    let _ = for_each_copy(g, shape, mode, |ids| {
        out.push(CutMember::from_ids(g, shape, ids));
        ControlFlow::Continue(())
    });
    out
}

/// Streams canonical copies as vertex-id lists in a fixed order; stops early
/// when `visit` breaks.
///
/// Canonical forms: stars are center then sorted leaves (for `K_{1,1}` the
/// smaller id is the center); paths start at the smaller endpoint; cycles
/// start at their minimum id and continue toward the smaller of its two
/// neighbors on the cycle; cliques and connected sets are sorted. In
/// substructure mode smaller shapes come first.
pub fn for_each_copy<F>(g: &Graph, shape: ShapeSpec, mode: Mode, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[VertexId]) -> ControlFlow<()>,
{
    match (shape, mode) {
        (ShapeSpec::Single, _) => singles(g, &mut visit),
        (ShapeSpec::Star(t), Mode::Structure) => stars(g, t, &mut visit),
        (ShapeSpec::Star(t), Mode::Substructure) => {
            singles(g, &mut visit)?;
            (1..=t).try_for_each(|leaves| stars(g, leaves, &mut visit))
        }
        (ShapeSpec::Path(k), Mode::Structure) => paths(g, k, &mut visit),
        (ShapeSpec::Path(k), Mode::Substructure) => (1..=k).try_for_each(|j| paths(g, j, &mut visit)),
        (ShapeSpec::Cycle(k), Mode::Structure) => cycles(g, k, &mut visit),
        // A canonical C_k listing is already a canonical P_k listing.
        (ShapeSpec::Cycle(k), Mode::Substructure) => (1..=k).try_for_each(|j| paths(g, j, &mut visit)),
        (ShapeSpec::Clique(s), Mode::Structure) => cliques(g, s, &mut visit),
        (ShapeSpec::Clique(s), Mode::Substructure) => connected_sets(g, s, &mut visit),
    }
}

type Visit<'a> = dyn FnMut(&[VertexId]) -> ControlFlow<()> + 'a;

fn singles(g: &Graph, visit: &mut Visit<'_>) -> ControlFlow<()> {
    (0..g.vertex_count()).try_for_each(|v| visit(&[v]))
}

fn stars(g: &Graph, t: usize, visit: &mut Visit<'_>) -> ControlFlow<()> {
    let mut buf = Vec::with_capacity(t + 1);
    for c in 0..g.vertex_count() {
        let nbrs: Vec<VertexId> = if t == 1 {
            g.neighbors(c).iter().copied().filter(|&x| x > c).collect()
        } else {
            g.neighbors(c).to_vec()
        };
        buf.clear();
        buf.push(c);
        combos(&nbrs, t, 0, &mut buf, visit)?;
    }
    ControlFlow::Continue(())
}

fn combos(pool: &[VertexId], k: usize, from: usize, buf: &mut Vec<VertexId>, visit: &mut Visit<'_>) -> ControlFlow<()> {
    if k == 0 {
        return visit(buf);
    }
    for i in from..pool.len() {
        if pool.len() - i < k {
            break;
        }
        buf.push(pool[i]);
        let r = combos(pool, k - 1, i + 1, buf, visit);
        buf.pop();
        r?;
    }
    ControlFlow::Continue(())
}

fn paths(g: &Graph, k: usize, visit: &mut Visit<'_>) -> ControlFlow<()> {
    if k == 1 {
        return singles(g, visit);
    }
    let mut on = vec![false; g.vertex_count()];
    let mut buf = Vec::with_capacity(k);
    for s in 0..g.vertex_count() {
        buf.clear();
        buf.push(s);
        on[s] = true;
        let r = extend_path(g, k, &mut on, &mut buf, visit);
        on[s] = false;
        r?;
    }
    ControlFlow::Continue(())
}

fn extend_path(g: &Graph, k: usize, on: &mut [bool], buf: &mut Vec<VertexId>, visit: &mut Visit<'_>) -> ControlFlow<()> {
    let last = *buf.last().unwrap();
    for &y in g.neighbors(last) {
        if on[y] {
            continue;
        }
        if buf.len() + 1 == k {
            if y > buf[0] {
                buf.push(y);
                let r = visit(buf);
                buf.pop();
                r?;
            }
            continue;
        }
        on[y] = true;
        buf.push(y);
        let r = extend_path(g, k, on, buf, visit);
        buf.pop();
        on[y] = false;
        r?;
    }
    ControlFlow::Continue(())
}

fn cycles(g: &Graph, k: usize, visit: &mut Visit<'_>) -> ControlFlow<()> {
    if k < 3 {
        return ControlFlow::Continue(());
    }
    let mut on = vec![false; g.vertex_count()];
    let mut buf = Vec::with_capacity(k);
    for s in 0..g.vertex_count() {
        buf.clear();
        buf.push(s);
        on[s] = true;
        let r = extend_cycle(g, k, &mut on, &mut buf, visit);
        on[s] = false;
        r?;
    }
    ControlFlow::Continue(())
}

fn extend_cycle(g: &Graph, k: usize, on: &mut [bool], buf: &mut Vec<VertexId>, visit: &mut Visit<'_>) -> ControlFlow<()> {
    let start = buf[0];
    let last = *buf.last().unwrap();
    for &y in g.neighbors(last) {
        if y <= start || on[y] {
            continue;
        }
        if buf.len() + 1 == k {
            if y > buf[1] && g.has_edge(y, start) {
                buf.push(y);
                let r = visit(buf);
                buf.pop();
                r?;
            }
            continue;
        }
        on[y] = true;
        buf.push(y);
        let r = extend_cycle(g, k, on, buf, visit);
        buf.pop();
        on[y] = false;
        r?;
    }
    ControlFlow::Continue(())
}

fn cliques(g: &Graph, s: usize, visit: &mut Visit<'_>) -> ControlFlow<()> {
    fn grow(g: &Graph, s: usize, cands: &[VertexId], buf: &mut Vec<VertexId>, visit: &mut Visit<'_>) -> ControlFlow<()> {
        if buf.len() == s {
            return visit(buf);
        }
        for (i, &c) in cands.iter().enumerate() {
            let next: Vec<VertexId> = cands[i + 1..].iter().copied().filter(|&x| g.has_edge(c, x)).collect();
            if buf.len() + 1 + next.len() < s {
                continue;
            }
            buf.push(c);
            let r = grow(g, s, &next, buf, visit);
            buf.pop();
            r?;
        }
        ControlFlow::Continue(())
    }
    let all: Vec<VertexId> = (0..g.vertex_count()).collect();
    grow(g, s, &all, &mut Vec::with_capacity(s), visit)
}

/// Connected vertex sets of size `1..=max`, each emitted once (ESU scheme),
/// sorted within, ordered by size then by first discovery.
fn connected_sets(g: &Graph, max: usize, visit: &mut Visit<'_>) -> ControlFlow<()> {
    for size in 1..=max {
        for v in 0..g.vertex_count() {
            let ext: Vec<VertexId> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
            let mut sub = vec![v];
            esu(g, size, v, &mut sub, ext, visit)?;
        }
    }
    ControlFlow::Continue(())
}

fn esu(g: &Graph, size: usize, root: VertexId, sub: &mut Vec<VertexId>, mut ext: Vec<VertexId>, visit: &mut Visit<'_>) -> ControlFlow<()> {
    if sub.len() == size {
        let mut sorted = sub.clone();
        sorted.sort_unstable();
        return visit(&sorted);
    }
    while let Some(w) = ext.pop() {
        let mut next = ext.clone();
        for &u in g.neighbors(w) {
            if u > root
                && !sub.contains(&u)
                && !next.contains(&u)
                && !sub.iter().any(|&s| g.has_edge(s, u))
            {
                next.push(u);
            }
        }
        sub.push(w);
        let r = esu(g, size, root, sub, next, visit);
        sub.pop();
        r?;
    }
    ControlFlow::Continue(())
}
