//! Immutable undirected simple graphs with string labels.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::{Error, Result};

/// Dense vertex id in `0..g.vertex_count()`.
pub type VertexId = usize;

/// An undirected simple graph whose vertices carry unique string labels.
///
/// Ids are dense and follow the order in which labels were supplied; every
/// family generator in this crate supplies labels in a canonical order, so ids
/// are reproducible across runs. Neighbor lists are kept sorted.
#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    adj: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from labels and label-pair edges. Parallel edges are
    /// collapsed; duplicate labels, unknown endpoints and self-loops are errors.
    pub fn build<L, E, A, B>(labels: L, edges: E) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = index_labels(&labels)?;
        let mut id_edges = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| Error::UnknownVertex(a.to_owned()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.to_owned()))?;
            id_edges.push((ia, ib));
        }
        Self::assemble(labels, index, id_edges)
    }

    /// Builds a graph from labels and id-pair edges.
    pub fn from_id_edges<L>(labels: L, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let index = index_labels(&labels)?;
        let n = labels.len();
        let edges: Vec<_> = edges.into_iter().collect();
        for &(a, b) in &edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::UnknownVertex(format!("#{v}")));
                }
            }
        }
        Self::assemble(labels, index, edges)
    }

    fn assemble(
        labels: Vec<String>,
        index: HashMap<String, VertexId>,
        edges: Vec<(VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); labels.len()];
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(labels[a].clone()));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            labels,
            index,
            adj,
            edge_count: edge_count / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    /// Like [`Graph::id`] but reports the missing label as an error.
    pub fn require(&self, label: &str) -> Result<VertexId> {
        self.id(label).ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `G - S` for a set of labels.
    pub fn delete_vertices<S: AsRef<str>>(&self, labels: &[S]) -> Result<Graph> {
        let ids = labels
            .iter()
            .map(|l| self.require(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.without(&ids))
    }

    /// `G - S` for a set of ids. Surviving vertices keep their relative order.
    pub fn without(&self, removed: &[VertexId]) -> Graph {
        let mut gone = vec![false; self.vertex_count()];
        for &v in removed {
            gone[v] = true;
        }
        let mut remap = vec![usize::MAX; self.vertex_count()];
        let mut labels = Vec::new();
        for v in 0..self.vertex_count() {
            if !gone[v] {
                remap[v] = labels.len();
                labels.push(self.labels[v].clone());
            }
        }
        let edges = self
            .edges()
            .filter(|&(a, b)| !gone[a] && !gone[b])
            .map(|(a, b)| (remap[a], remap[b]));
        Graph::from_id_edges(labels, edges).expect("subgraph of a valid graph")
    }

    /// Edge set keyed by labels, each pair ordered by label.
    pub fn labeled_edges(&self) -> BTreeSet<(String, String)> {
        self.edges()
            .map(|(a, b)| {
                let (x, y) = (&self.labels[a], &self.labels[b]);
                if x <= y {
                    (x.clone(), y.clone())
                } else {
                    (y.clone(), x.clone())
                }
            })
            .collect()
    }

    /// Equality of labeled vertex and edge sets, ignoring ids.
    pub fn same_labeled_graph(&self, other: &Graph) -> bool {
        let mine: BTreeSet<&String> = self.labels.iter().collect();
        let theirs: BTreeSet<&String> = other.labels.iter().collect();
        mine == theirs && self.labeled_edges() == other.labeled_edges()
    }

    /// Line graph: one vertex `a|b` per edge (smaller label first), adjacent
    /// when the underlying edges share an endpoint. Vertices are sorted by label.
    pub fn line_graph(&self) -> Graph {
        let mut named: Vec<(String, VertexId, VertexId)> = self
            .edges()
            .map(|(a, b)| {
                let (x, y) = if self.labels[a] <= self.labels[b] { (a, b) } else { (b, a) };
                (format!("{}|{}", self.labels[x], self.labels[y]), a, b)
            })
            .collect();
        named.sort();
        let mut incident: Vec<Vec<VertexId>> = vec![Vec::new(); self.vertex_count()];
        for (id, (_, a, b)) in named.iter().enumerate() {
            incident[*a].push(id);
            incident[*b].push(id);
        }
        let mut edges = Vec::new();
        for list in &incident {
            for (i, &x) in list.iter().enumerate() {
                for &y in &list[i + 1..] {
                    edges.push((x, y));
                }
            }
        }
        Graph::from_id_edges(named.into_iter().map(|(l, _, _)| l), edges)
            .expect("line graph of a simple graph is simple")
    }
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, VertexId>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

/// `K_n` on labels `0..n`.
pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    Graph::from_id_edges((0..n).map(|i| i.to_string()), edges).unwrap()
}

/// `C_n` on labels `0..n` (`n >= 3`).
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    Graph::from_id_edges((0..n).map(|i| i.to_string()), (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// `P_n` on labels `0..n`.
pub fn path_graph(n: usize) -> Graph {
    Graph::from_id_edges((0..n).map(|i| i.to_string()), (1..n).map(|i| (i - 1, i))).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_small_graphs() {
        let k2 = Graph::build(["a", "b"], [("a", "b")]).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));

        let k1 = Graph::build(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(k1.is_connected());

        let c4 = Graph::build(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "a")],
        )
        .unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.regular_degree(), Some(2));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::build(["a", "a"], Vec::<(&str, &str)>::new()).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert_eq!(
            Graph::build(["a"], [("a", "z")]).unwrap_err(),
            Error::UnknownVertex("z".into())
        );
        assert_eq!(Graph::build(["a"], [("a", "a")]).unwrap_err(), Error::SelfLoop("a".into()));
    }

    #[test]
    fn components_and_connectivity() {
        assert!(complete_graph(5).is_connected());
        assert_eq!(complete_graph(5).components().len(), 1);

        let two = Graph::build(["a", "b", "c", "d"], [("a", "b"), ("c", "d")]).unwrap();
        let comps = two.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3]]);
        assert!(!two.is_connected());

        let empty = Graph::build(Vec::<String>::new(), Vec::<(&str, &str)>::new()).unwrap();
        assert!(empty.is_connected());
    }

    #[test]
    fn delete_vertices_cases() {
        let k4 = complete_graph(4);
        let same = k4.delete_vertices::<&str>(&[]).unwrap();
        assert!(same.same_labeled_graph(&k4));

        let none = k4.delete_vertices(&["0", "1", "2", "3"]).unwrap();
        assert!(none.is_empty());

        let k3 = k4.delete_vertices(&["2"]).unwrap();
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 3));
        assert!(k3.is_complete());

        assert!(matches!(k4.delete_vertices(&["9"]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn line_graph_small() {
        let lp = path_graph(3).line_graph();
        assert_eq!((lp.vertex_count(), lp.edge_count()), (2, 1));
        assert_eq!(lp.labels(), ["0|1", "1|2"]);

        let lk = complete_graph(3).line_graph();
        assert!(lk.is_complete());
        assert_eq!(lk.vertex_count(), 3);
    }

    #[test]
    fn line_graph_counts_on_star_plus_triangle() {
        let g = Graph::build(
            ["a", "b", "c", "d", "e"],
            [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("d", "e")],
        )
        .unwrap();
        let l = g.line_graph();
        let expected: usize = (0..g.vertex_count())
            .map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2)
            .sum();
        assert_eq!(l.vertex_count(), g.edge_count());
        assert_eq!(l.edge_count(), expected);
    }
}
