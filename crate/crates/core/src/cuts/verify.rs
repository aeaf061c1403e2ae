//! Checking that a family of subgraphs really is a structure cut.

use std::collections::HashMap;

use crate::graph::{Graph, VertexId};
use crate::shape::{is_shape_ids, Mode, ShapeSpec, StructureCut};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberCheck {
    pub valid: bool,
    /// Why the member was rejected, when it was.
    pub problem: Option<String>,
    /// Shares at least one vertex with another member.
    pub overlaps: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub shape: ShapeSpec,
    pub mode: Mode,
    pub members: Vec<MemberCheck>,
    /// `|V(F)|`.
    pub vertices_removed: usize,
    /// Components of `G - V(F)`, each sorted, ordered by smallest id.
    pub components: Vec<Vec<VertexId>>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn member_count(&self) -> usize {
        self.members.len()
    }

    pub fn all_members_valid(&self) -> bool {
        self.members.iter().all(|m| m.valid)
    }

    pub fn any_overlap(&self) -> bool {
        self.members.iter().any(|m| m.overlaps)
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Size of the smallest component (0 when nothing remains).
    pub fn min_component(&self) -> usize {
        self.components.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Sizes in ascending order.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.components.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    /// Index of the component holding `v`, if `v` survived.
    pub fn component_of(&self, v: VertexId) -> Option<usize> {
        self.components.iter().position(|c| c.binary_search(&v).is_ok())
    }

    /// Is `v` left as a component on its own?
    pub fn is_singleton(&self, v: VertexId) -> bool {
        self.components.iter().any(|c| c.as_slice() == [v])
    }
}

/// Validates every member against `shape` under `mode`, deletes `V(F)` and
/// reports the remaining components. Passes when every member is valid and
/// the remainder is disconnected or has at most one vertex.
pub fn verify_cut(g: &Graph, cut: &StructureCut, shape: ShapeSpec, mode: Mode) -> VerificationReport {
    let mut owner: HashMap<VertexId, usize> = HashMap::new();
    let mut members = Vec::with_capacity(cut.members.len());
    let mut shared = vec![false; cut.members.len()];
    let mut removed: Vec<VertexId> = Vec::new();
    for (idx, member) in cut.members.iter().enumerate() {
        let mut ids = Vec::with_capacity(member.vertices.len());
        let mut problem = None;
        for label in &member.vertices {
            match g.id(label) {
                Some(v) if ids.contains(&v) => problem = Some(format!("vertex {label} repeated")),
                Some(v) => ids.push(v),
                None => problem = Some(format!("unknown vertex {label}")),
            }
        }
        if problem.is_none() && !is_shape_ids(g, shape, &ids, mode) {
            problem = Some(format!("does not realize {shape} ({mode})"));
        }
        for &v in &ids {
            match owner.get(&v) {
                Some(&other) if other != idx => {
                    shared[idx] = true;
                    shared[other] = true;
                }
                Some(_) => {}
                None => {
                    owner.insert(v, idx);
                    removed.push(v);
                }
            }
        }
        members.push(MemberCheck {
            valid: problem.is_none(),
            problem,
            overlaps: false,
        });
    }
    for (m, s) in members.iter_mut().zip(shared) {
        m.overlaps = s;
    }
    let components = remaining_components(g, &removed);
    let remaining: usize = components.iter().map(Vec::len).sum();
    let pass = members.iter().all(|m| m.valid) && (components.len() >= 2 || remaining <= 1);
    VerificationReport {
        shape,
        mode,
        members,
        vertices_removed: removed.len(),
        components,
        pass,
    }
}

/// Components of `g - removed` in original ids.
fn remaining_components(g: &Graph, removed: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut gone = vec![false; g.vertex_count()];
    for &v in removed {
        gone[v] = true;
    }
    let mut seen = gone.clone();
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &y in g.neighbors(comp[i]) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};
    use crate::shape::CutMember;

    #[test]
    fn empty_cut_on_connected_graph_fails() {
        let g = cycle_graph(5);
        let r = verify_cut(&g, &StructureCut::new(vec![], Mode::Structure), ShapeSpec::Star(1), Mode::Structure);
        assert!(!r.pass);
        assert_eq!((r.component_count(), r.min_component()), (1, 5));
    }

    #[test]
    fn two_edges_split_a_cycle() {
        let g = cycle_graph(6);
        let cut = StructureCut::new(
            vec![CutMember::new(ShapeSpec::Star(1), ["0", "1"]), CutMember::new(ShapeSpec::Star(1), ["3", "4"])],
            Mode::Structure,
        );
        let r = verify_cut(&g, &cut, ShapeSpec::Star(1), Mode::Structure);
        assert!(r.pass && !r.any_overlap());
        assert_eq!(r.component_sizes(), [1, 1]);
        assert!(r.is_singleton(2));
    }

    #[test]
    fn reports_invalid_and_overlapping_members() {
        let g = cycle_graph(6);
        let cut = StructureCut::new(
            vec![CutMember::new(ShapeSpec::Star(1), ["0", "2"]), CutMember::new(ShapeSpec::Star(1), ["2", "3"])],
            Mode::Structure,
        );
        let r = verify_cut(&g, &cut, ShapeSpec::Star(1), Mode::Structure);
        assert!(!r.pass);
        assert!(!r.members[0].valid && r.members[1].valid);
        assert!(r.members[0].overlaps && r.members[1].overlaps);
        assert_eq!(r.vertices_removed, 3);
    }

    #[test]
    fn trivial_remainder_counts_as_a_cut() {
        let g = complete_graph(3);
        let cut = StructureCut::new(vec![CutMember::new(ShapeSpec::Star(1), ["0", "1"])], Mode::Structure);
        assert!(verify_cut(&g, &cut, ShapeSpec::Star(1), Mode::Structure).pass);
        let unknown = StructureCut::new(vec![CutMember::new(ShapeSpec::Single, ["x"])], Mode::Structure);
        let r = verify_cut(&g, &unknown, ShapeSpec::Single, Mode::Structure);
        assert!(!r.pass);
        assert!(r.members[0].problem.as_deref().unwrap().contains("unknown"));
    }
}
