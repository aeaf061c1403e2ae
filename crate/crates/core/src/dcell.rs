//! DCell `D(m,n)`: level-0 cells are `K_n`; level `m` joins `t_{m-1,n} + 1`
//! copies of `D(m-1,n)` with exactly one link per pair of copies.
//!
//! Labels are digit strings `x_m.….x_1.x_0` (most significant first) with
//! `x_0 < n` and `x_i <= t_{i-1,n}`. A vertex's id is its mixed-radix value,
//! so ids follow the lexicographic order of digit tuples.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, VertexId};
use crate::{Error, Result};

/// Default cap on generated vertices.
pub const DEFAULT_VERTEX_BUDGET: usize = 100_000;

/// `t_{m,n}`: the number of servers in `D(m,n)`. Overflow is an error.
pub fn t_size(m: u32, n: u64) -> Result<u64> {
    Ok(*t_table(m, n)?.last().unwrap())
}

/// `[t_{0,n}, …, t_{m,n}]`.
pub fn t_table(m: u32, n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("DCell needs n >= 2, got n={n}")));
    }
    let mut t = Vec::with_capacity(m as usize + 1);
    t.push(n);
    for level in 1..=m {
        let prev = t[level as usize - 1];
        let next = prev
            .checked_add(1)
            .and_then(|p| p.checked_mul(prev))
            .ok_or(Error::Overflow { level })?;
        t.push(next);
    }
    Ok(t)
}

/// Validated DCell parameters with the per-level size table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCellParams {
    m: usize,
    n: usize,
    t: Vec<usize>,
}

impl DCellParams {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let m32 = u32::try_from(m).map_err(|_| Error::OutOfRange(format!("level m={m} too large")))?;
        let t = t_table(m32, n as u64)?
            .into_iter()
            .enumerate()
            .map(|(level, v)| usize::try_from(v).map_err(|_| Error::Overflow { level: level as u32 }))
            .collect::<Result<Vec<_>>>()?;
        Ok(DCellParams { m, n, t })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `t_{i,n}`.
    pub fn t(&self, level: usize) -> usize {
        self.t[level]
    }

    pub fn vertex_count(&self) -> usize {
        self.t[self.m]
    }

    /// Exclusive upper bound of digit `x_i`.
    fn radix(&self, i: usize) -> usize {
        if i == 0 {
            self.n
        } else {
            self.t[i - 1] + 1
        }
    }

    /// `x_0 + Σ_{i=1}^{level-1} x_i·t_{i-1,n}`: the position of the label
    /// inside its copy of `D(level-1, n)`.
    fn index_below(&self, label: &DCellLabel, level: usize) -> usize {
        let mut idx = label.digits[0];
        for i in 1..level {
            idx += label.digits[i] * self.t[i - 1];
        }
        idx
    }

    pub fn id_of(&self, label: &DCellLabel) -> VertexId {
        self.index_below(label, self.m + 1)
    }

    pub fn label_of(&self, mut id: VertexId) -> DCellLabel {
        let mut digits = Vec::with_capacity(self.m + 1);
        for i in 0..=self.m {
            let r = self.radix(i);
            digits.push(id % r);
            id /= r;
        }
        DCellLabel { digits }
    }

    /// The label whose suffix below `level` has position `idx`, keeping the
    /// digits at and above `level` from `prefix_src`.
    fn with_index_below(&self, prefix_src: &DCellLabel, level: usize, mut idx: usize) -> DCellLabel {
        let mut digits = prefix_src.digits.clone();
        for (i, d) in digits.iter_mut().enumerate().take(level) {
            let r = self.radix(i);
            *d = idx % r;
            idx /= r;
        }
        DCellLabel { digits }
    }

    /// The unique neighbor reached over a level-`level` link (`1 <= level <= m`).
    pub fn level_neighbor(&self, label: &DCellLabel, level: usize) -> DCellLabel {
        assert!((1..=self.m).contains(&level));
        let own = label.digits[level];
        let idx = self.index_below(label, level);
        // Lower endpoint u (u_j <= idx(u)) links to v with v_j = idx(u)+1, idx(v) = u_j.
        let (their_digit, their_idx) = if own <= idx { (idx + 1, own) } else { (idx, own - 1) };
        let mut out = self.with_index_below(label, level, their_idx);
        out.digits[level] = their_digit;
        out
    }

    /// All neighbors: the rest of the level-0 clique, then one per level.
    pub fn neighbors(&self, label: &DCellLabel) -> Vec<DCellLabel> {
        let mut out = Vec::with_capacity(self.n - 1 + self.m);
        for x0 in 0..self.n {
            if x0 != label.digits[0] {
                let mut d = label.digits.clone();
                d[0] = x0;
                out.push(DCellLabel { digits: d });
            }
        }
        for level in 1..=self.m {
            out.push(self.level_neighbor(label, level));
        }
        out
    }

    /// Parses `x_m.….x_0` and checks digit count and ranges.
    pub fn parse_label(&self, s: &str) -> Result<DCellLabel> {
        let label: DCellLabel = s.parse()?;
        self.check(&label)?;
        Ok(label)
    }

    pub fn check(&self, label: &DCellLabel) -> Result<()> {
        if label.digits.len() != self.m + 1
            || label.digits.iter().enumerate().any(|(i, &d)| d >= self.radix(i))
        {
            return Err(Error::BadLabel(label.to_string()));
        }
        Ok(())
    }

    /// Label with every digit zero except `x_pos = value`.
    pub fn unit_label(&self, pos: usize, value: usize) -> DCellLabel {
        let mut digits = vec![0; self.m + 1];
        digits[pos] = value;
        DCellLabel { digits }
    }
}

/// A DCell server label; `digits[i]` is `x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DCellLabel {
    digits: Vec<usize>,
}

impl DCellLabel {
    /// From digits ordered most significant first.
    pub fn from_msd(msd: &[usize]) -> Self {
        DCellLabel {
            digits: msd.iter().rev().copied().collect(),
        }
    }

    /// `x_i`.
    pub fn digit(&self, i: usize) -> usize {
        self.digits[i]
    }

    /// The top-level copy this label belongs to.
    pub fn copy_index(&self) -> usize {
        *self.digits.last().unwrap()
    }
}

impl fmt::Display for DCellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DCellLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let msd = s
            .split('.')
            .map(|p| p.parse::<usize>().map_err(|_| Error::BadLabel(s.to_owned())))
            .collect::<Result<Vec<_>>>()?;
        Ok(DCellLabel::from_msd(&msd))
    }
}

/// Builds `D(m,n)`; refuses instances larger than `budget` vertices.
pub fn build_dcell(m: usize, n: usize, budget: usize) -> Result<Graph> {
    let params = match DCellParams::new(m, n) {
        Ok(p) => p,
        Err(Error::Overflow { .. }) => {
            return Err(Error::BudgetExceeded {
                required: u128::MAX,
                budget,
            })
        }
        Err(e) => return Err(e),
    };
    if params.vertex_count() > budget {
        return Err(Error::BudgetExceeded {
            required: params.vertex_count() as u128,
            budget,
        });
    }
    Ok(build_from_params(&params))
}

pub(crate) fn build_from_params(params: &DCellParams) -> Graph {
    let count = params.vertex_count();
    let mut labels = Vec::with_capacity(count);
    let mut edges = Vec::with_capacity(count * (params.n - 1 + params.m) / 2);
    for id in 0..count {
        let label = params.label_of(id);
        labels.push(label.to_string());
        for nb in params.neighbors(&label) {
            let other = params.id_of(&nb);
            if other > id {
                edges.push((id, other));
            }
        }
    }
    Graph::from_id_edges(labels, edges).expect("DCell generation yields a simple graph")
}

/// The neighbor of `label` in a different top-level copy of `D(m-1,n)`.
pub fn outside_neighbor(label: &DCellLabel, params: &DCellParams) -> Result<DCellLabel> {
    if params.m == 0 {
        return Err(Error::OutOfRange("D(0,n) has no outside neighbors".into()));
    }
    params.check(label)?;
    Ok(params.level_neighbor(label, params.m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_values() {
        assert_eq!(t_size(0, 4).unwrap(), 4);
        assert_eq!(t_size(1, 4).unwrap(), 20);
        assert_eq!(t_size(2, 2).unwrap(), 42);
        assert_eq!(t_size(3, 2).unwrap(), 1806);
    }

    #[test]
    fn t_overflow_names_level() {
        // 2 -> 6 -> 42 -> 1806 -> 3263442 -> 10650056950806 -> ~1.1e26 overflows u64
        assert_eq!(t_size(5, 2), Ok(10_650_056_950_806));
        assert_eq!(t_size(6, 2), Err(Error::Overflow { level: 6 }));
        assert!(matches!(t_size(1, 1), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn d0_is_complete() {
        let g = build_dcell(0, 5, DEFAULT_VERTEX_BUDGET).unwrap();
        assert!(g.is_complete());
        assert_eq!(g.vertex_count(), 5);
    }

    #[test]
    fn d14_link_example() {
        let g = build_dcell(1, 4, DEFAULT_VERTEX_BUDGET).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (20, 40));
        assert!(g.has_edge(g.id("0.0").unwrap(), g.id("1.0").unwrap()));
    }

    #[test]
    fn labels_round_trip_through_ids() {
        let p = DCellParams::new(2, 3).unwrap();
        for id in 0..p.vertex_count() {
            let l = p.label_of(id);
            assert_eq!(p.id_of(&l), id);
            assert_eq!(p.parse_label(&l.to_string()).unwrap(), l);
        }
    }

    #[test]
    fn outside_neighbor_examples() {
        let p = DCellParams::new(1, 4).unwrap();
        let u = p.parse_label("0.0").unwrap();
        assert_eq!(outside_neighbor(&u, &p).unwrap().to_string(), "1.0");
        for id in 0..p.vertex_count() {
            let l = p.label_of(id);
            let o = outside_neighbor(&l, &p).unwrap();
            assert_ne!(o.copy_index(), l.copy_index());
            assert_eq!(outside_neighbor(&o, &p).unwrap(), l);
        }
        let p0 = DCellParams::new(0, 4).unwrap();
        assert!(outside_neighbor(&p0.label_of(0), &p0).is_err());
    }

    #[test]
    fn label_validation() {
        let p = DCellParams::new(1, 4).unwrap();
        assert!(p.parse_label("4.3").is_ok());
        assert!(p.parse_label("5.0").is_err());
        assert!(p.parse_label("0.4").is_err());
        assert!(p.parse_label("0").is_err());
        assert!(p.parse_label("a.b").is_err());
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            build_dcell(2, 4, 100).unwrap_err(),
            Error::BudgetExceeded { required: 420, budget: 100 }
        );
    }
}
