//! Crossed cubes `CQ_n` and BCDC graphs `B_n`.
//!
//! A `CQ_n` vertex is an `n`-bit string `b_{n-1}…b_0`; a `B_n` vertex is an
//! edge `[a, b]` of `CQ_n` rendered `a|b` with `a < b`. `B_n` is the line
//! graph of `CQ_n`; [`build_bcdc`] follows the recursive definition and
//! [`build_bcdc_via_line_graph`] the line-graph characterization, so the two
//! can be checked against each other.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, VertexId};
use crate::{Error, Result};

/// Largest dimension handled (labels are packed into a `u64`).
pub const MAX_DIMENSION: usize = 40;

/// The pair relation on 2-bit strings: `00~00`, `10~10`, `01~11`, `11~01`.
pub fn pair_related(x: &str, y: &str) -> Result<bool> {
    let parse = |s: &str| -> Result<u64> {
        if s.len() != 2 || !s.bytes().all(|c| c == b'0' || c == b'1') {
            return Err(Error::BadLabel(s.to_owned()));
        }
        Ok(u64::from_str_radix(s, 2).unwrap())
    };
    Ok(pair_related_bits(parse(x)?, parse(y)?))
}

/// The pair relation on the low two bits of `x` and `y`.
fn pair_related_bits(x: u64, y: u64) -> bool {
    matches!((x & 3, y & 3), (0b00, 0b00) | (0b10, 0b10) | (0b01, 0b11) | (0b11, 0b01))
}

/// The unique `y` with `x ~ y`: low bit kept, high bit flipped iff the low bit is set.
fn pair_image(x: u64) -> u64 {
    if x & 1 == 1 {
        x ^ 0b10
    } else {
        x
    }
}

/// An `n`-bit crossed-cube vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CqVertex {
    n: usize,
    bits: u64,
}

impl CqVertex {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n == 0 || n > MAX_DIMENSION || bits >> n != 0 {
            return Err(Error::BadLabel(format!("{bits:#b} as a {n}-bit vertex")));
        }
        Ok(CqVertex { n, bits })
    }

    pub fn zero(n: usize) -> Self {
        CqVertex { n, bits: 0 }
    }

    pub fn dimension(self) -> usize {
        self.n
    }

    pub fn bits(self) -> u64 {
        self.bits
    }
}

impl fmt::Display for CqVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.n)
    }
}

impl FromStr for CqVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|c| c == b'0' || c == b'1') {
            return Err(Error::BadLabel(s.to_owned()));
        }
        CqVertex::new(s.len(), u64::from_str_radix(s, 2).map_err(|_| Error::BadLabel(s.to_owned()))?)
    }
}

/// The `d`-dimensional neighbor `u^d`: bits above `d` kept, bit `d` flipped,
/// bit `d-1` kept when `d` is odd, and each lower pair `(2i+1, 2i)` with
/// `i < ⌊d/2⌋` mapped through the pair relation.
pub fn dim_neighbor(u: CqVertex, d: usize) -> Result<CqVertex> {
    if d >= u.n {
        return Err(Error::OutOfRange(format!("dimension {d} not in 0..{}", u.n)));
    }
    let mut bits = u.bits ^ (1 << d);
    for i in 0..d / 2 {
        let shift = 2 * i;
        let pair = (u.bits >> shift) & 3;
        bits = (bits & !(3 << shift)) | (pair_image(pair) << shift);
    }
    Ok(CqVertex { n: u.n, bits })
}

/// `(u^a)^b`, and so on for longer index lists.
pub fn iterated_neighbor(u: CqVertex, dims: &[usize]) -> Result<CqVertex> {
    dims.iter().try_fold(u, |x, &d| dim_neighbor(x, d))
}

/// Are `u` and `v` adjacent in `CQ_n`? Only the highest differing bit can be
/// the connecting dimension.
pub fn cq_adjacent(u: CqVertex, v: CqVertex) -> bool {
    let diff = u.bits ^ v.bits;
    if u.n != v.n || diff == 0 {
        return false;
    }
    let d = 63 - diff.leading_zeros() as usize;
    dim_neighbor(u, d).map(|x| x == v).unwrap_or(false)
}

/// The neighbors of `x` other than `partner`, in increasing dimension. This
/// fixes the indexing `x^0, …, x^{n-2}` used when `x` is an endpoint of the
/// `B_n` vertex `[x, partner]`.
pub fn indexed_neighbors(x: CqVertex, partner: CqVertex) -> Vec<CqVertex> {
    (0..x.n)
        .map(|d| dim_neighbor(x, d).unwrap())
        .filter(|&y| y != partner)
        .collect()
}

/// A `B_n` vertex: a `CQ_n` edge with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BnVertex {
    a: CqVertex,
    b: CqVertex,
}

impl BnVertex {
    /// Orders the endpoints; fails unless they are adjacent in `CQ_n`.
    pub fn new(x: CqVertex, y: CqVertex) -> Result<Self> {
        if !cq_adjacent(x, y) {
            return Err(Error::BadLabel(format!("[{x},{y}] is not a crossed-cube edge")));
        }
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        Ok(BnVertex { a, b })
    }

    pub fn endpoints(self) -> (CqVertex, CqVertex) {
        (self.a, self.b)
    }

    pub fn dimension(self) -> usize {
        self.a.n
    }

    /// The endpoint other than `x`.
    pub fn other(self, x: CqVertex) -> CqVertex {
        if x == self.a {
            self.b
        } else {
            self.a
        }
    }

    /// `N(u)` by structure: `[x, x^i]` for both endpoints `x`.
    pub fn neighbors(self) -> Vec<BnVertex> {
        let mut out = Vec::with_capacity(2 * self.a.n - 2);
        for (x, y) in [(self.a, self.b), (self.b, self.a)] {
            for z in indexed_neighbors(x, y) {
                out.push(BnVertex::new(x, z).unwrap());
            }
        }
        out.sort();
        out
    }

    pub fn contains(self, x: CqVertex) -> bool {
        self.a == x || self.b == x
    }
}

impl fmt::Display for BnVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.a, self.b)
    }
}

impl FromStr for BnVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (x, y) = s.split_once('|').ok_or_else(|| Error::BadLabel(s.to_owned()))?;
        let (x, y): (CqVertex, CqVertex) = (x.parse()?, y.parse()?);
        if x.n != y.n || x >= y {
            return Err(Error::BadLabel(s.to_owned()));
        }
        BnVertex::new(x, y)
    }
}

fn check_budget(required: u128, budget: usize) -> Result<()> {
    if required > budget as u128 {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// Cross-edge rule between `0u` and `1v` in `CQ_n`: `u_{n-2} = v_{n-2}` when
/// `n` is even, and `u_{2i+1}u_{2i} ~ v_{2i+1}v_{2i}` for `i < ⌊(n-1)/2⌋`.
fn cross_edge(n: usize, u: u64, v: u64) -> bool {
    if n % 2 == 0 && ((u >> (n - 2)) & 1) != ((v >> (n - 2)) & 1) {
        return false;
    }
    (0..(n - 1) / 2).all(|i| pair_related_bits(u >> (2 * i), v >> (2 * i)))
}

/// `CQ_n` edges as value pairs, built recursively from `CQ_1 = K_2`.
fn crossed_cube_edges(n: usize) -> Vec<(u64, u64)> {
    if n == 1 {
        return vec![(0, 1)];
    }
    let lower = crossed_cube_edges(n - 1);
    let top = 1u64 << (n - 1);
    let half = top;
    let mut edges: Vec<(u64, u64)> = lower.iter().copied().chain(lower.iter().map(|&(a, b)| (a | top, b | top))).collect();
    for u in 0..half {
        for v in 0..half {
            if cross_edge(n, u, v) {
                edges.push((u, v | top));
            }
        }
    }
    edges
}

/// `CQ_n` with labels sorted (ids equal the bit values).
pub fn build_crossed_cube(n: usize, budget: usize) -> Result<Graph> {
    if n < 1 || n > MAX_DIMENSION {
        return Err(Error::OutOfRange(format!("crossed cube needs 1 <= n <= {MAX_DIMENSION}, got {n}")));
    }
    check_budget(1u128 << n, budget)?;
    let labels = (0..1u64 << n).map(|b| CqVertex { n, bits: b }.to_string());
    let edges = crossed_cube_edges(n).into_iter().map(|(a, b)| (a as usize, b as usize));
    Graph::from_id_edges(labels, edges)
}

/// Number of `B_n` vertices, `n·2^{n-1}`.
pub fn bcdc_order(n: usize) -> u128 {
    (n as u128) << (n - 1)
}

/// `B_n` from the recursive definition: `B_2` is the 4-cycle on
/// `[00,01],[00,10],[01,11],[10,11]`; `B_n` joins prefixed copies `B^0_{n-1}`,
/// `B^1_{n-1}` through the independent set `S_n` of `CQ_n` cross edges.
pub fn build_bcdc(n: usize, budget: usize) -> Result<Graph> {
    if n < 2 || n > MAX_DIMENSION {
        return Err(Error::OutOfRange(format!("BCDC needs 2 <= n <= {MAX_DIMENSION}, got {n}")));
    }
    check_budget(bcdc_order(n), budget)?;
    let (vertices, edges) = bcdc_recursive(n);
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    order.sort_by_key(|&i| vertices[i]);
    let mut rank = vec![0; vertices.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let labels = order.iter().map(|&i| {
        let (a, b) = vertices[i];
        format!("{}|{}", CqVertex { n, bits: a }, CqVertex { n, bits: b })
    });
    Graph::from_id_edges(labels, edges.into_iter().map(|(x, y)| (rank[x], rank[y])))
}

type PairList = Vec<(u64, u64)>;

/// Vertex pairs (smaller first) and index edges of `B_n`.
fn bcdc_recursive(n: usize) -> (PairList, Vec<(usize, usize)>) {
    if n == 2 {
        let v = vec![(0b00, 0b01), (0b00, 0b10), (0b01, 0b11), (0b10, 0b11)];
        let e = vec![(0, 1), (0, 2), (1, 3), (2, 3)];
        return (v, e);
    }
    let (lower_v, lower_e) = bcdc_recursive(n - 1);
    let top = 1u64 << (n - 1);
    let k = lower_v.len();
    let mut vertices: PairList = lower_v.clone();
    vertices.extend(lower_v.iter().map(|&(a, b)| (a | top, b | top)));
    let mut edges: Vec<(usize, usize)> = lower_e.clone();
    edges.extend(lower_e.iter().map(|&(x, y)| (x + k, y + k)));

    // Which copy vertices contain a given CQ vertex.
    let mut containing: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, &(a, b)) in vertices.iter().enumerate() {
        containing.entry(a).or_default().push(i);
        containing.entry(b).or_default().push(i);
    }
    for c in 0..top {
        for d0 in 0..top {
            if !cross_edge(n, c, d0) {
                continue;
            }
            let d = d0 | top;
            let s = vertices.len();
            vertices.push((c, d));
            // [a,b] in B^0 with a = c or b = c; [e,f] in B^1 with e = d or f = d.
            for &x in containing.get(&c).into_iter().flatten() {
                edges.push((x, s));
            }
            for &x in containing.get(&d).into_iter().flatten() {
                edges.push((s, x));
            }
        }
    }
    (vertices, edges)
}

/// `B_n` as the line graph of `CQ_n`.
pub fn build_bcdc_via_line_graph(n: usize, budget: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("BCDC needs n >= 2, got {n}")));
    }
    check_budget(bcdc_order(n), budget)?;
    Ok(build_crossed_cube(n, budget)?.line_graph())
}

/// The two cliques partitioning `N(u)` for `u = [v, w]`: `[v, v^i]` and
/// `[w, w^i]` for `0 <= i <= n-2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodSplit {
    pub low_side: Vec<VertexId>,
    pub high_side: Vec<VertexId>,
}

/// Splits `N(u)` in the `B_n` graph `g` by endpoint of `u`.
pub fn neighborhood_decomposition(g: &Graph, u: BnVertex) -> Result<NeighborhoodSplit> {
    g.require(&u.to_string())?;
    let side = |x: CqVertex, partner: CqVertex| -> Result<Vec<VertexId>> {
        indexed_neighbors(x, partner)
            .into_iter()
            .map(|y| g.require(&BnVertex::new(x, y)?.to_string()))
            .collect()
    };
    let (v, w) = u.endpoints();
    Ok(NeighborhoodSplit {
        low_side: side(v, w)?,
        high_side: side(w, v)?,
    })
}
