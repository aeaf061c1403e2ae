//! Edge, star, path and cycle cuts isolating `u = [0…0, 10…0]` in `B_n`.
//!
//! Throughout, `v = 0…0`, `w = 10…0`, and `x^i` is the `i`-th neighbor of an
//! endpoint `x` of `u` other than its partner (see
//! [`indexed_neighbors`](crate::bcdc::indexed_neighbors)). For the base vertex
//! this re-indexing is the identity on dimensions `0..=n-2`. Superscripts on
//! other crossed-cube vertices are raw dimensions.

use crate::bcdc::{dim_neighbor, indexed_neighbors, BnVertex, CqVertex};
use crate::shape::{CutMember, Mode, ShapeSpec, StructureCut};
use crate::{Error, Result};

use super::predicted::{predicted_kappa, Family};

/// `[0…0, 10…0]`.
pub fn bcdc_base(n: usize) -> Result<BnVertex> {
    let v = CqVertex::new(n, 0)?;
    let w = CqVertex::new(n, 1 << (n - 1))?;
    BnVertex::new(v, w)
}

/// `[1…10, 1…11]`, which stays outside every cut built here.
pub fn bcdc_far(n: usize) -> Result<BnVertex> {
    let ones = (1u64 << n) - 1;
    BnVertex::new(CqVertex::new(n, ones ^ 1)?, CqVertex::new(n, ones)?)
}

/// Crossed-cube vertices around the base vertex.
struct Frame {
    n: usize,
    u: BnVertex,
    vs: Vec<CqVertex>,
    ws: Vec<CqVertex>,
    v: CqVertex,
    w: CqVertex,
}

impl Frame {
    fn new(n: usize) -> Result<Self> {
        let u = bcdc_base(n)?;
        let (v, w) = u.endpoints();
        Ok(Frame {
            n,
            u,
            vs: indexed_neighbors(v, w),
            ws: indexed_neighbors(w, v),
            v,
            w,
        })
    }

    /// `[v, v^i]`.
    fn vv(&self, i: usize) -> BnVertex {
        BnVertex::new(self.v, self.vs[i]).unwrap()
    }

    /// `[w, w^i]`.
    fn ww(&self, i: usize) -> BnVertex {
        BnVertex::new(self.w, self.ws[i]).unwrap()
    }

    /// `[v^{n-2}, w^{n-2}]`.
    fn bridge(&self) -> Result<BnVertex> {
        BnVertex::new(self.vs[self.n - 2], self.ws[self.n - 2])
    }

    /// `[v^1, w^1]`.
    fn low_bridge(&self) -> Result<BnVertex> {
        BnVertex::new(self.vs[1], self.ws[1])
    }

    fn side(&self, high: bool) -> Side<'_> {
        Side { frame: self, high }
    }
}

/// One endpoint of `u` with its indexed neighbors: `v` (low) or `w` (high).
#[derive(Clone, Copy)]
struct Side<'a> {
    frame: &'a Frame,
    high: bool,
}

impl Side<'_> {
    fn apex(self) -> CqVertex {
        if self.high {
            self.frame.w
        } else {
            self.frame.v
        }
    }

    fn nb(self, i: usize) -> CqVertex {
        if self.high {
            self.frame.ws[i]
        } else {
            self.frame.vs[i]
        }
    }

    /// `[x, x^i]` for the apex `x`.
    fn edge(self, i: usize) -> BnVertex {
        if self.high {
            self.frame.ww(i)
        } else {
            self.frame.vv(i)
        }
    }

    fn edges(self, dims: impl IntoIterator<Item = usize>) -> Vec<BnVertex> {
        dims.into_iter().map(|i| self.edge(i)).collect()
    }
}

fn edge(x: CqVertex, y: CqVertex) -> Result<BnVertex> {
    BnVertex::new(x, y)
}

/// `x^d` for a raw dimension `d`.
fn at(x: CqVertex, d: usize) -> CqVertex {
    dim_neighbor(x, d).expect("dimension in range")
}

/// `[x, x^d]` for each listed raw dimension.
fn spokes(x: CqVertex, dims: impl IntoIterator<Item = usize>) -> Vec<BnVertex> {
    dims.into_iter().map(|d| edge(x, at(x, d)).unwrap()).collect()
}

/// The `count` smallest candidates not already in `taken` and not `u`.
fn pick(mut candidates: Vec<BnVertex>, count: usize, taken: &[BnVertex], u: BnVertex) -> Result<Vec<BnVertex>> {
    candidates.sort();
    candidates.dedup();
    let chosen: Vec<BnVertex> = candidates
        .into_iter()
        .filter(|c| *c != u && !taken.contains(c))
        .take(count)
        .collect();
    if chosen.len() < count {
        return Err(Error::NoConstruction(format!("only {} of {count} free vertices available", chosen.len())));
    }
    Ok(chosen)
}

fn to_member(shape: ShapeSpec, vertices: &[BnVertex]) -> CutMember {
    CutMember::new(shape, vertices.iter().map(|x| x.to_string()))
}

fn finish(shape: ShapeSpec, members: Vec<Vec<BnVertex>>, expected: usize) -> StructureCut {
    debug_assert_eq!(members.len(), expected, "{shape}");
    StructureCut::new(members.iter().map(|m| to_member(shape, m)).collect(), Mode::Structure)
}

/// Edge cut: consecutive-dimension pairs on each side of `u`; `n-1` members
/// for odd `n`, `n` for even `n`.
pub fn k11_cut_bcdc(n: usize) -> Result<StructureCut> {
    let shape = ShapeSpec::Star(1);
    let expected = predicted_kappa(Family::Bcdc { n }, shape, Mode::Structure)?.value;
    let f = Frame::new(n)?;
    let mut members = Vec::new();
    for j in 0..(n - 1) / 2 {
        for s in [f.side(false), f.side(true)] {
            members.push(vec![s.edge(2 * j), s.edge(2 * j + 1)]);
        }
    }
    if n % 2 == 0 {
        // [x, x^{n-2}] and [x^{n-2}, x^{n-2,n-1}]; both sides end on the
        // bridge [v^{n-2}, w^{n-2}].
        for s in [f.side(false), f.side(true)] {
            let y = s.nb(n - 2);
            members.push(vec![s.edge(n - 2), edge(y, at(y, n - 1))?]);
        }
    }
    Ok(finish(shape, members, expected))
}

/// `K_{1,t}` cut for `1 <= t <= 2n-3` (`t = 1` is [`k11_cut_bcdc`]).
pub fn star_cut_bcdc(n: usize, t: usize) -> Result<StructureCut> {
    if t == 1 {
        return k11_cut_bcdc(n);
    }
    let shape = ShapeSpec::Star(t);
    let expected = predicted_kappa(Family::Bcdc { n }, shape, Mode::Structure)?.value;
    let f = Frame::new(n)?;
    let sides = [f.side(false), f.side(true)];
    let mut members = Vec::new();
    if t + 2 >= n {
        // Two stars centered at [x, x^0] with every other [x, x^i] as a leaf,
        // topped up from the far clique of the center.
        for s in sides {
            let center = s.edge(0);
            let mut star = vec![center];
            star.extend(s.edges(1..n - 1));
            let far = s.nb(0);
            let extra = spokes(far, (0..n).filter(|&d| at(far, d) != s.apex()));
            star.extend(pick(extra, t + 2 - n, &star, f.u)?);
            members.push(star);
        }
        return Ok(finish(shape, members, expected));
    }
    let q = (n - 1) / (1 + t);
    let r = (n - 1) % (1 + t);
    for i in 1..=q {
        let c = (i - 1) * (t + 1);
        for s in sides {
            members.push(s.edges(c..=c + t));
        }
    }
    if r == 1 {
        // Centered at the bridge, with [v, v^{n-2}], [w, w^{n-2}] and t-2
        // further neighbors.
        let center = f.bridge()?;
        let mut star = vec![center, f.vv(n - 2), f.ww(n - 2)];
        star.extend(pick(center.neighbors(), t - 2, &star, f.u)?);
        members.push(star);
    } else if r >= 2 {
        // Centered at [x, x^{n-2}] with leaves [x, x^i], n-r-1 <= i <= n-3,
        // and t-r+1 neighbors across x^{n-2}.
        for s in sides {
            let mut star = vec![s.edge(n - 2)];
            star.extend(s.edges(n - r - 1..n - 2));
            let across = s.nb(n - 2);
            let extra = spokes(across, (0..n).filter(|&d| at(across, d) != s.apex()));
            star.extend(pick(extra, t + 1 - r, &star, f.u)?);
            members.push(star);
        }
    }
    Ok(finish(shape, members, expected))
}

/// `P_{n-1}(x) = ⟨[x, x^0], …, [x, x^{n-2}]⟩`.
fn side_path(s: Side<'_>, n: usize) -> Vec<BnVertex> {
    s.edges(0..n - 1)
}

/// `P_{2n-1} = ⟨P_{n-1}(v), [v^{n-2}, w^{n-2}], P_{n-1}(w) reversed⟩`.
fn long_path(f: &Frame) -> Result<Vec<BnVertex>> {
    let mut p = side_path(f.side(false), f.n);
    p.push(f.bridge()?);
    p.extend(side_path(f.side(true), f.n).into_iter().rev());
    Ok(p)
}

/// `P_k` cut for `4 <= k <= 2n-1`.
pub fn path_cut_bcdc(n: usize, k: usize) -> Result<StructureCut> {
    let shape = ShapeSpec::Path(k);
    let expected = predicted_kappa(Family::Bcdc { n }, shape, Mode::Structure)?.value;
    let f = Frame::new(n)?;
    let members = if k == 2 * n - 1 {
        vec![long_path(&f)?]
    } else if k >= n {
        // P_{n-1}(x) continued through the clique at x^{n-2}, with the edge
        // back to x replaced by [x^{n-2}, x^{n-2,n-1}].
        let mut out = Vec::new();
        for s in [f.side(false), f.side(true)] {
            let mut p = side_path(s, n);
            let y = s.nb(n - 2);
            p.extend(spokes(y, (0..n - 2).chain([n - 1]).filter(|&d| at(y, d) != s.apex())));
            p.truncate(k);
            out.push(p);
        }
        out
    } else if (n - 1) % k == 0 {
        let mut out = Vec::new();
        for s in [f.side(false), f.side(true)] {
            out.extend(side_path(s, n).chunks(k).map(<[BnVertex]>::to_vec));
        }
        out
    } else {
        // P_{3n-2}: P_{2n-1} continued through the clique at z = w^0,
        // starting with [z, z^{n-1}].
        let mut p = long_path(&f)?;
        let z = f.ws[0];
        let rest = std::iter::once(n - 1).chain(1..n - 1).filter(|&d| at(z, d) != f.w);
        p.extend(spokes(z, rest));
        p.chunks(k).take((2 * n - 1).div_ceil(k)).map(<[BnVertex]>::to_vec).collect()
    };
    Ok(finish(shape, members, expected))
}

/// `κ^s(B_n; C_k)` cut: the `P_k` cut, whose paths are connected subgraphs of `C_k`.
pub fn substructure_cycle_cut_bcdc(n: usize, k: usize) -> Result<StructureCut> {
    predicted_kappa(Family::Bcdc { n }, ShapeSpec::Cycle(k), Mode::Substructure)?;
    Ok(path_cut_bcdc(n, k)?.retagged(ShapeSpec::Cycle(k), Mode::Substructure))
}

/// `⟨[x, x^1], [x, x^0], [x, x^2], …, [x, x^{n-2}]⟩`.
fn cycle_side_path(s: Side<'_>, n: usize) -> Vec<BnVertex> {
    s.edges([1, 0].into_iter().chain(2..n - 1))
}

/// `C_k` structure cut for `n >= 5`, `6 <= k <= 2n`.
pub fn cycle_cut_bcdc(n: usize, k: usize) -> Result<StructureCut> {
    let shape = ShapeSpec::Cycle(k);
    if n >= 5 && k < 6 && k != n {
        return Err(Error::NoConstruction(format!(
            "cycle length k={k}: no explicit cut construction for k < 6"
        )));
    }
    let expected = predicted_kappa(Family::Bcdc { n }, shape, Mode::Structure)?.value;
    let f = Frame::new(n)?;
    let sides = [f.side(false), f.side(true)];
    let mut members: Vec<Vec<BnVertex>> = Vec::new();
    if k == 2 * n {
        let mut c = vec![f.low_bridge()?];
        c.extend(cycle_side_path(sides[0], n));
        c.push(f.bridge()?);
        c.extend(cycle_side_path(sides[1], n).into_iter().rev());
        members.push(c);
    } else if k > n {
        // ⟨P(x), [x^{n-2}, x^{n-2,1}], [x^{n-2,1}, x^1], fillers at x^1⟩.
        for s in sides {
            let mut c = cycle_side_path(s, n);
            let y = s.nb(n - 2);
            let y1 = at(y, 1);
            c.push(edge(y, y1)?);
            c.push(edge(y1, s.nb(1))?);
            let x1 = s.nb(1);
            let fill = spokes(x1, [0, n - 1].into_iter().chain(2..n - 2));
            c.extend(pick(fill, k - n - 1, &c, f.u)?);
            members.push(c);
        }
    } else if k == n {
        members = order_cycles(&f, k)?;
    } else {
        members = short_cycles(&f, k)?;
    }
    Ok(finish(shape, members, expected))
}

/// `k = n`: one cycle per side through `n-2` clique vertices and a detour
/// via `x^{n-3,1}`, and a third cycle through both bridges.
fn order_cycles(f: &Frame, k: usize) -> Result<Vec<Vec<BnVertex>>> {
    let n = f.n;
    if k < 6 {
        return Err(Error::NoConstruction(format!(
            "C_{k} with k = n = {n}: the cycle through both bridges needs at least 6 vertices"
        )));
    }
    let mut members = Vec::new();
    for s in [f.side(false), f.side(true)] {
        let mut c = cycle_side_path(s, n);
        c.pop();
        let y = s.nb(n - 3);
        let y1 = at(y, 1);
        c.push(edge(y, y1)?);
        c.push(edge(y1, s.nb(1))?);
        members.push(c);
    }
    let mut c = vec![f.vv(n - 2), f.bridge()?, f.ww(n - 2), f.ww(1), f.low_bridge()?, f.vv(1)];
    let fill = f.side(false).edges(2..n - 1);
    c.extend(pick(fill, k - 6, &c, f.u)?);
    members.push(c);
    Ok(members)
}

/// `6 <= k <= n-1`: `k`-blocks of each clique plus remainder cycles.
fn short_cycles(f: &Frame, k: usize) -> Result<Vec<Vec<BnVertex>>> {
    let n = f.n;
    let q = (n - 1) / k;
    let r = (n - 1) % k;
    let sides = [f.side(false), f.side(true)];
    // The paper-style remainder cycles need k >= 2r+4 (small r) or
    // k >= r+3 (large r). At the boundary the remainder dimensions are
    // taken as {1} ∪ [n-r, n-2] instead, which saves one clique vertex per
    // side; the blocks then cover the other dimensions.
    let small = r >= 1 && r < k / 2;
    let shifted = (small && k < 2 * r + 4) || (!small && r >= 1 && r + 1 < k && k < r + 3);
    let block_dims: Vec<usize> = if shifted {
        std::iter::once(0).chain(2..n - r).collect()
    } else {
        (0..q * k).collect()
    };
    let mut members = Vec::new();
    for chunk in block_dims.chunks(k) {
        for s in sides {
            members.push(s.edges(chunk.iter().copied()));
        }
    }
    if r == 0 {
        return Ok(members);
    }
    let (v, w) = (sides[0], sides[1]);
    if small {
        let mut c = Vec::new();
        let tail_start = if shifted { n - r } else { n - r - 1 };
        if !shifted {
            c.push(f.ww(1));
        }
        c.push(f.low_bridge()?);
        c.push(f.vv(1));
        let mut tail = v.edges(tail_start..n - 1);
        tail.push(f.bridge()?);
        tail.extend(w.edges((tail_start..n - 1).rev()));
        if shifted {
            tail.push(f.ww(1));
        }
        let fill_pool = if shifted {
            v.edges(block_dims.iter().copied())
        } else {
            v.edges(2..n - r - 1)
        };
        let taken: Vec<BnVertex> = c.iter().chain(&tail).copied().collect();
        let fill = pick(fill_pool, k - taken.len(), &taken, f.u)?;
        c.extend(fill);
        c.extend(tail);
        members.push(c);
    } else if r + 1 < k {
        for s in sides {
            let y = s.nb(n - 2);
            let y1 = at(y, 1);
            let tail_start = if shifted { n - r } else { n - r - 1 };
            let mut c = vec![s.edge(1)];
            c.extend(s.edges(tail_start..n - 1));
            let closing = [edge(y, y1)?, edge(y1, s.nb(1))?];
            let taken: Vec<BnVertex> = c.iter().chain(&closing).copied().collect();
            // Fillers [x^{n-2}, x^{n-2,i}]: 0 <= i <= n-3 for v, 1 <= i <= n-3 for w.
            let first = usize::from(s.high);
            let pool = spokes(y, first..n - 2);
            c.extend(pick(pool, k - taken.len(), &taken, f.u)?);
            c.extend(closing);
            members.push(c);
        }
    } else {
        for s in sides {
            let mut c = vec![s.edge(0)];
            c.extend(s.edges(n - k..n - 1));
            members.push(c);
        }
    }
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(cut: &StructureCut) -> Vec<String> {
        cut.members.iter().map(|m| m.vertices.join(" ")).collect()
    }

    #[test]
    fn base_and_far() {
        assert_eq!(bcdc_base(5).unwrap().to_string(), "00000|10000");
        assert_eq!(bcdc_far(5).unwrap().to_string(), "11110|11111");
    }

    #[test]
    fn k11_even_members_share_the_bridge() {
        let cut = k11_cut_bcdc(4).unwrap();
        assert_eq!(
            labels(&cut),
            [
                "0000|0001 0000|0010",
                "1000|1001 1000|1010",
                "0000|0100 0100|1100",
                "1000|1100 0100|1100",
            ]
        );
    }

    #[test]
    fn k11_odd_layout() {
        let cut = k11_cut_bcdc(5).unwrap();
        assert_eq!(cut.len(), 4);
        assert_eq!(cut.members[2].vertices, ["00000|00100", "00000|01000"]);
    }

    #[test]
    fn member_counts_follow_the_formulas() {
        for n in 4..=8 {
            for t in 1..=2 * n - 3 {
                let want = predicted_kappa(Family::Bcdc { n }, ShapeSpec::Star(t), Mode::Structure).unwrap().value;
                assert_eq!(star_cut_bcdc(n, t).unwrap().len(), want, "star n={n} t={t}");
            }
            for k in 4..=2 * n - 1 {
                let want = predicted_kappa(Family::Bcdc { n }, ShapeSpec::Path(k), Mode::Structure).unwrap().value;
                assert_eq!(path_cut_bcdc(n, k).unwrap().len(), want, "path n={n} k={k}");
            }
        }
        for n in 6..=14 {
            for k in 6..=2 * n {
                let want = predicted_kappa(Family::Bcdc { n }, ShapeSpec::Cycle(k), Mode::Structure).unwrap().value;
                assert_eq!(cycle_cut_bcdc(n, k).unwrap().len(), want, "cycle n={n} k={k}");
            }
        }
    }

    #[test]
    fn member_sizes_match_the_shape() {
        for n in 5..=14 {
            for k in 6..=2 * n {
                for m in &cycle_cut_bcdc(n, k).unwrap().members {
                    assert_eq!(m.vertices.len(), k, "n={n} k={k} {:?}", m.vertices);
                }
            }
            for t in 1..=2 * n - 3 {
                for m in &star_cut_bcdc(n, t).unwrap().members {
                    assert_eq!(m.vertices.len(), t + 1, "n={n} t={t}");
                }
            }
        }
    }

    #[test]
    fn short_cycles_are_rejected() {
        for k in 3..=4 {
            assert!(matches!(cycle_cut_bcdc(5, k), Err(Error::NoConstruction(_))));
        }
        assert!(cycle_cut_bcdc(5, 11).is_err());
        assert!(path_cut_bcdc(5, 3).is_err());
    }
}
