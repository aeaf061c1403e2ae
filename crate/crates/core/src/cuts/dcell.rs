//! Star and clique cuts isolating the all-zero DCell server.

use crate::dcell::{DCellLabel, DCellParams};
use crate::shape::{CutMember, Mode, ShapeSpec, StructureCut};
use crate::Result;

use super::predicted::{predicted_kappa, Family};

/// `0…00`, the vertex every DCell cut isolates.
pub fn dcell_base(m: usize, n: usize) -> Result<String> {
    Ok(DCellParams::new(m, n)?.unit_label(0, 0).to_string())
}

/// `1…11`, which stays outside the cut in another component.
pub fn dcell_far(m: usize, n: usize) -> Result<String> {
    DCellParams::new(m, n)?;
    Ok(DCellLabel::from_msd(&vec![1; m + 1]).to_string())
}

/// `0…0i`.
fn clique_vertex(p: &DCellParams, i: usize) -> DCellLabel {
    p.unit_label(0, i)
}

fn member(shape: ShapeSpec, labels: impl IntoIterator<Item = DCellLabel>) -> CutMember {
    CutMember::new(shape, labels.into_iter().map(|l| l.to_string()))
}

/// The `t` smallest neighbors of `center` outside `exclude`, in id order.
fn smallest_neighbors(p: &DCellParams, center: &DCellLabel, exclude: &[DCellLabel], t: usize) -> Vec<DCellLabel> {
    let mut nbrs = p.neighbors(center);
    nbrs.sort_by_key(|l| p.id_of(l));
    nbrs.into_iter().filter(|l| !exclude.contains(l)).take(t).collect()
}

/// `⌈(n-1)/(1+t)⌉` stars covering the clique neighbors `0…0i` of the base
/// vertex, then one star per level centered at its outside-link neighbor.
pub fn star_cut_dcell(m: usize, n: usize, t: usize) -> Result<StructureCut> {
    let expected = predicted_kappa(Family::DCell { m, n }, ShapeSpec::Star(t), Mode::Structure)?;
    let p = DCellParams::new(m, n)?;
    let shape = ShapeSpec::Star(t);
    let u = p.unit_label(0, 0);
    let blocks = (n - 1) / (1 + t);
    let mut members = Vec::new();
    for i in 1..=blocks {
        let center = (i - 1) * (t + 1) + 1;
        members.push(member(shape, (center..=center + t).map(|x| clique_vertex(&p, x))));
    }
    if (n - 1) % (1 + t) != 0 {
        // Center 0…0(n-1) with leaves n-t-1..n-2. When t > n-2 that range
        // would reach u, so it is clipped at 1 and topped up with the
        // smallest remaining neighbors of the center.
        let center = clique_vertex(&p, n - 1);
        let low = (n - 1).saturating_sub(t).max(1);
        let mut leaves: Vec<DCellLabel> = (low..n - 1).map(|x| clique_vertex(&p, x)).collect();
        let mut exclude = leaves.clone();
        exclude.push(u.clone());
        leaves.extend(smallest_neighbors(&p, &center, &exclude, t - leaves.len()));
        members.push(member(shape, std::iter::once(center).chain(leaves)));
    }
    // Leaves avoid 1…1 so it stays in the other component, unless the center
    // has no other neighbor left (m = 1, t = n-1).
    let far = DCellLabel::from_msd(&vec![1; m + 1]);
    for j in 1..=m {
        let center = p.unit_label(j, 1);
        let mut leaves = smallest_neighbors(&p, &center, &[u.clone(), far.clone()], t);
        if leaves.len() < t {
            leaves = smallest_neighbors(&p, &center, std::slice::from_ref(&u), t);
        }
        members.push(member(shape, std::iter::once(center).chain(leaves)));
    }
    debug_assert_eq!(members.len(), expected.value);
    Ok(StructureCut::new(members, Mode::Structure))
}

/// `⌈(n-1)/s⌉` cliques covering `0…0i`, then for each level `j` the
/// level-0 cell `{x_j = 1, x_0 = k | k < s}` holding the base vertex's
/// level-`j` neighbor.
pub fn clique_cut_dcell(m: usize, n: usize, s: usize) -> Result<StructureCut> {
    let expected = predicted_kappa(Family::DCell { m, n }, ShapeSpec::Clique(s), Mode::Structure)?;
    let p = DCellParams::new(m, n)?;
    let shape = ShapeSpec::Clique(s);
    let blocks = (n - 1) / s;
    let mut members = Vec::new();
    for i in 1..=blocks {
        members.push(member(shape, (0..s).map(|k| clique_vertex(&p, (i - 1) * s + k + 1))));
    }
    if (n - 1) % s != 0 {
        members.push(member(shape, (n - s..n).map(|k| clique_vertex(&p, k))));
    }
    for j in 1..=m {
        members.push(member(
            shape,
            (0..s).map(|k| with_last_digit(&p, &p.unit_label(j, 1), k)),
        ));
    }
    debug_assert_eq!(members.len(), expected.value);
    Ok(StructureCut::new(members, Mode::Structure))
}

fn with_last_digit(p: &DCellParams, l: &DCellLabel, x0: usize) -> DCellLabel {
    let msd: Vec<usize> = (0..=p.m()).rev().map(|i| if i == 0 { x0 } else { l.digit(i) }).collect();
    DCellLabel::from_msd(&msd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_star_cut_layout() {
        let cut = star_cut_dcell(0, 5, 1).unwrap();
        let v: Vec<_> = cut.members.iter().map(|m| m.vertices.join(",")).collect();
        assert_eq!(v, ["1,2", "3,4"]);
        let cut = star_cut_dcell(1, 4, 1).unwrap();
        let v: Vec<_> = cut.members.iter().map(|m| m.vertices.join(",")).collect();
        assert_eq!(v, ["0.1,0.2", "0.3,0.2", "1.0,1.2"]);
    }

    #[test]
    fn wide_last_star_stays_off_the_base() {
        // t = 3 > n-2 = 2: leaves 0.1, 0.2 and the outside neighbor 4.0.
        let cut = star_cut_dcell(1, 4, 3).unwrap();
        assert_eq!(cut.members[0].vertices, ["0.3", "0.1", "0.2", "4.0"]);
        assert!(cut.members.iter().all(|m| !m.vertices.contains(&"0.0".to_owned())));
    }

    #[test]
    fn clique_cut_layout() {
        let cut = clique_cut_dcell(1, 5, 3).unwrap();
        let v: Vec<_> = cut.members.iter().map(|m| m.vertices.join(",")).collect();
        assert_eq!(v, ["0.1,0.2,0.3", "0.2,0.3,0.4", "1.0,1.1,1.2"]);
    }

    #[test]
    fn base_and_far_labels() {
        assert_eq!(dcell_base(2, 3).unwrap(), "0.0.0");
        assert_eq!(dcell_far(2, 3).unwrap(), "1.1.1");
    }
}
