//! Vertex connectivity by unit-capacity max flow on the vertex-split network.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexId};
use crate::{Error, Result};

/// Residual network where every vertex `v` becomes `v_in = 2v -> v_out = 2v+1`
/// with capacity one, and every edge `uv` becomes `u_out -> v_in` and
/// `v_out -> u_in`.
struct SplitNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let nodes = 2 * g.vertex_count();
        let mut net = SplitNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        };
        for v in 0..g.vertex_count() {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (a, b) in g.edges() {
            net.arc(2 * a + 1, 2 * b, 1);
            net.arc(2 * b + 1, 2 * a, 1);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.head[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.head[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    fn reset(&mut self, pristine: &[u32]) {
        self.cap.copy_from_slice(pristine);
    }

    /// Augments along shortest paths until `limit` units flow or none remain.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut parent = vec![usize::MAX; self.head.len()];
        let mut queue = VecDeque::new();
        while flow < limit {
            parent.fill(usize::MAX);
            parent[source] = usize::MAX - 1;
            queue.clear();
            queue.push_back(source);
            'bfs: while let Some(x) = queue.pop_front() {
                for &arc in &self.head[x] {
                    let y = self.to[arc];
                    if self.cap[arc] > 0 && parent[y] == usize::MAX {
                        parent[y] = arc;
                        if y == sink {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let arc = parent[y];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                y = self.to[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths for a
/// non-adjacent pair, i.e. the size of a minimum `s`–`t` vertex separator.
pub fn local_vertex_connectivity(g: &Graph, s: VertexId, t: VertexId) -> usize {
    assert!(s != t && !g.has_edge(s, t), "pair must be distinct and non-adjacent");
    let mut net = SplitNetwork::new(g);
    net.max_flow(2 * s + 1, 2 * t, usize::MAX)
}

/// Vertex connectivity `κ(g)`: the fewest vertices whose removal disconnects
/// `g` or leaves a single vertex. Complete graphs give `n - 1`.
///
/// Local connectivities are taken over non-adjacent pairs `{a, b}` with
/// `min(a, b) <= k`, where `k` is the best bound found so far (Even's
/// restriction; any minimum separator misses one of the first `k + 1` ids).
pub fn min_vertex_cut(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best = (0..n).map(|v| g.degree(v)).min().unwrap_or(0).min(n - 1);
    if g.is_complete() {
        return Ok(n - 1);
    }
    let mut net = SplitNetwork::new(g);
    let pristine = net.cap.clone();
    let mut a = 0;
    while a <= best && a < n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            net.reset(&pristine);
            let f = net.max_flow(2 * a + 1, 2 * b, best);
            best = best.min(f);
        }
        a += 1;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    #[test]
    fn complete_graphs() {
        for n in 2..=8 {
            assert_eq!(min_vertex_cut(&complete_graph(n)).unwrap(), n - 1);
        }
    }

    #[test]
    fn cycles_and_paths() {
        assert_eq!(min_vertex_cut(&cycle_graph(6)).unwrap(), 2);
        assert_eq!(min_vertex_cut(&path_graph(5)).unwrap(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        let two = Graph::build(["a", "b", "c", "d"], [("a", "b"), ("c", "d")]).unwrap();
        assert_eq!(min_vertex_cut(&two), Err(Error::Disconnected));
        assert_eq!(min_vertex_cut(&complete_graph(1)), Err(Error::TooFewVertices));
    }

    #[test]
    fn local_connectivity_on_c6() {
        assert_eq!(local_vertex_connectivity(&cycle_graph(6), 0, 3), 2);
    }

    #[test]
    fn two_cliques_joined_at_a_vertex() {
        // K4 and K4 sharing vertex "x".
        let labels = ["a", "b", "c", "x", "d", "e", "f"];
        let mut edges = Vec::new();
        for grp in [["a", "b", "c", "x"], ["x", "d", "e", "f"]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push((grp[i], grp[j]));
                }
            }
        }
        let g = Graph::build(labels, edges).unwrap();
        assert_eq!(min_vertex_cut(&g).unwrap(), 1);
    }
}
