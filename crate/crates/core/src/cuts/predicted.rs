//! Closed-form structure connectivity values.

use std::fmt;

use crate::graph::Graph;
use crate::shape::{Mode, ShapeSpec};
use crate::{Error, Result};

/// A topology family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    DCell { m: usize, n: usize },
    Bcdc { n: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::DCell { .. } => f.write_str("dcell"),
            Family::Bcdc { .. } => f.write_str("bcdc"),
        }
    }
}

impl Family {
    /// The host graph, subject to a vertex budget.
    pub fn build(&self, budget: usize) -> Result<Graph> {
        match *self {
            Family::DCell { m, n } => crate::dcell::build_dcell(m, n, budget),
            Family::Bcdc { n } => crate::bcdc::build_bcdc(n, budget),
        }
    }

    /// Space-separated parameter echo, e.g. `m=1 n=4`.
    pub fn params(&self) -> String {
        match self {
            Family::DCell { m, n } => format!("m={m} n={n}"),
            Family::Bcdc { n } => format!("n={n}"),
        }
    }
}

/// Which formula case produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `κ` of the host: `n+m-1` for DCell, `2n-2` for BCDC.
    VertexConnectivity,
    /// DCell stars: `⌈(n-1)/(1+t)⌉ + m`.
    DCellStar,
    /// DCell cliques: `⌈(n-1)/s⌉ + m`.
    DCellClique,
    /// BCDC edges, odd `n`: `n-1`.
    BcdcEdgeOdd,
    /// BCDC edges, even `n`: `n`.
    BcdcEdgeEven,
    /// BCDC stars, `2 <= t <= n-3` and `r = 1`: `(2n-4)/(1+t) + 1`.
    BcdcStarRemainderOne,
    /// BCDC stars otherwise: `2⌈(n-1)/(1+t)⌉`.
    BcdcStarGeneral,
    /// BCDC paths with `k <= n-1` and `k | n-1`: `(2n-2)/k`.
    BcdcPathDivisible,
    /// BCDC paths otherwise: `⌈(2n-1)/k⌉`.
    BcdcPathGeneral,
    /// BCDC cycles, small remainder or `k = 2n`: `2⌈(n-1)/k⌉ - 1`.
    BcdcCycleShort,
    /// BCDC cycles with `k = n`: `3`.
    BcdcCycleOrder,
    /// BCDC cycles otherwise: `2⌈(n-1)/k⌉`.
    BcdcCycleGeneral,
}

impl Branch {
    pub fn tag(self) -> &'static str {
        match self {
            Branch::VertexConnectivity => "vertex-connectivity",
            Branch::DCellStar => "dcell-star",
            Branch::DCellClique => "dcell-clique",
            Branch::BcdcEdgeOdd => "bcdc-edge-odd",
            Branch::BcdcEdgeEven => "bcdc-edge-even",
            Branch::BcdcStarRemainderOne => "bcdc-star-r1",
            Branch::BcdcStarGeneral => "bcdc-star",
            Branch::BcdcPathDivisible => "bcdc-path-divisible",
            Branch::BcdcPathGeneral => "bcdc-path",
            Branch::BcdcCycleShort => "bcdc-cycle-short",
            Branch::BcdcCycleOrder => "bcdc-cycle-k-eq-n",
            Branch::BcdcCycleGeneral => "bcdc-cycle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedValue {
    pub value: usize,
    pub branch: Branch,
    pub family: Family,
    pub shape: ShapeSpec,
    pub mode: Mode,
    /// The remainder the branch depends on, if any.
    pub remainder: Option<usize>,
}

fn range_error(what: &str, bound: &str) -> Error {
    Error::OutOfRange(format!("{what}: requires {bound}"))
}

/// The closed-form `κ(G; H)` (structure) or `κ^s(G; H)` (substructure).
pub fn predicted_kappa(family: Family, shape: ShapeSpec, mode: Mode) -> Result<PredictedValue> {
    let (value, branch, remainder) = match family {
        Family::DCell { m, n } => dcell_value(m, n, shape, mode)?,
        Family::Bcdc { n } => bcdc_value(n, shape, mode)?,
    };
    Ok(PredictedValue {
        value,
        branch,
        family,
        shape,
        mode,
        remainder,
    })
}

type Value = (usize, Branch, Option<usize>);

fn dcell_value(m: usize, n: usize, shape: ShapeSpec, mode: Mode) -> Result<Value> {
    if n < 2 {
        return Err(range_error("DCell", "n >= 2"));
    }
    match shape {
        ShapeSpec::Single => Ok((n + m - 1, Branch::VertexConnectivity, None)),
        ShapeSpec::Star(t) => {
            if t == m + n - 1 && t >= 1 {
                return Err(Error::OutOfRange(format!(
                    "DCell star t={t}: the matching lower bound reaches t = m+n-1 but the value is only established for t <= m+n-2 = {}",
                    m + n - 2
                )));
            }
            if t < 1 || t > m + n - 2 {
                return Err(range_error(&format!("DCell star t={t}"), &format!("1 <= t <= m+n-2 = {}", m + n - 2)));
            }
            Ok(((n - 1).div_ceil(1 + t) + m, Branch::DCellStar, Some((n - 1) % (1 + t))))
        }
        ShapeSpec::Clique(s) => {
            if mode == Mode::Substructure {
                return Err(Error::OutOfRange("DCell cliques: only the structure value is established".into()));
            }
            if s < 3 || s + 1 > n {
                return Err(range_error(&format!("DCell clique s={s}"), &format!("3 <= s <= n-1 = {}", n - 1)));
            }
            Ok(((n - 1).div_ceil(s) + m, Branch::DCellClique, Some((n - 1) % s)))
        }
        ShapeSpec::Path(_) | ShapeSpec::Cycle(_) => {
            Err(Error::OutOfRange(format!("DCell {shape}: no closed form")))
        }
    }
}

fn bcdc_value(n: usize, shape: ShapeSpec, mode: Mode) -> Result<Value> {
    if n < 2 {
        return Err(range_error("BCDC", "n >= 2"));
    }
    match shape {
        ShapeSpec::Single => Ok((2 * n - 2, Branch::VertexConnectivity, None)),
        ShapeSpec::Star(1) => {
            if n % 2 == 1 && n >= 5 {
                Ok((n - 1, Branch::BcdcEdgeOdd, None))
            } else if n % 2 == 0 && n >= 4 {
                Ok((n, Branch::BcdcEdgeEven, None))
            } else {
                Err(range_error(&format!("BCDC star t=1, n={n}"), "odd n >= 5 or even n >= 4"))
            }
        }
        ShapeSpec::Star(t) => {
            if n < 4 || t < 2 || t > 2 * n - 3 {
                return Err(range_error(&format!("BCDC star t={t}, n={n}"), "n >= 4 and 2 <= t <= 2n-3"));
            }
            let r = (n - 1) % (1 + t);
            if t + 3 <= n && r == 1 {
                Ok(((2 * n - 4) / (1 + t) + 1, Branch::BcdcStarRemainderOne, Some(r)))
            } else {
                Ok((2 * (n - 1).div_ceil(1 + t), Branch::BcdcStarGeneral, Some(r)))
            }
        }
        ShapeSpec::Path(k) => path_value(n, k),
        ShapeSpec::Cycle(k) => match mode {
            Mode::Substructure => path_value(n, k),
            Mode::Structure => {
                if n >= 5 && (3..6).contains(&k) && k != n {
                    return Err(Error::OutOfRange(format!(
                        "BCDC cycle k={k}, n={n}: no construction for cycle lengths below 6 (requires 6 <= k <= 2n, or k = n); use the oracle"
                    )));
                }
                if n < 5 || !(6..=2 * n).contains(&k) && k != n {
                    return Err(range_error(&format!("BCDC cycle k={k}, n={n}"), "n >= 5 and 6 <= k <= 2n"));
                }
                let r = (n - 1) % k;
                let q = (n - 1).div_ceil(k);
                if k == 2 * n || (k < n && 1 <= r && r < k / 2) {
                    Ok((2 * q - 1, Branch::BcdcCycleShort, Some(r)))
                } else if k == n {
                    Ok((3, Branch::BcdcCycleOrder, Some(r)))
                } else {
                    Ok((2 * q, Branch::BcdcCycleGeneral, Some(r)))
                }
            }
        },
        ShapeSpec::Clique(_) => Err(Error::OutOfRange(format!("BCDC {shape}: no closed form"))),
    }
}

fn path_value(n: usize, k: usize) -> Result<Value> {
    if n < 4 || k < 4 || k > 2 * n - 1 {
        return Err(range_error(&format!("BCDC path k={k}, n={n}"), "n >= 4 and 4 <= k <= 2n-1"));
    }
    if k < n && (n - 1) % k == 0 {
        Ok(((2 * n - 2) / k, Branch::BcdcPathDivisible, Some(0)))
    } else {
        Ok(((2 * n - 1).div_ceil(k), Branch::BcdcPathGeneral, Some((n - 1) % k)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(family: Family, shape: ShapeSpec, mode: Mode) -> usize {
        predicted_kappa(family, shape, mode).unwrap().value
    }

    #[test]
    fn worked_values() {
        let s = Mode::Structure;
        assert_eq!(value(Family::DCell { m: 1, n: 4 }, ShapeSpec::Star(1), s), 3);
        assert_eq!(value(Family::DCell { m: 0, n: 5 }, ShapeSpec::Clique(3), s), 2);
        assert_eq!(value(Family::Bcdc { n: 5 }, ShapeSpec::Star(2), s), 3);
        assert_eq!(value(Family::Bcdc { n: 5 }, ShapeSpec::Star(7), s), 2);
        assert_eq!(value(Family::Bcdc { n: 6 }, ShapeSpec::Star(2), s), 4);
        assert_eq!(value(Family::Bcdc { n: 5 }, ShapeSpec::Path(4), s), 2);
        assert_eq!(value(Family::Bcdc { n: 5 }, ShapeSpec::Path(9), s), 1);
        assert_eq!(value(Family::Bcdc { n: 6 }, ShapeSpec::Path(4), s), 3);
        assert_eq!(value(Family::Bcdc { n: 5 }, ShapeSpec::Cycle(10), s), 1);
        assert_eq!(value(Family::Bcdc { n: 5 }, ShapeSpec::Cycle(6), s), 2);
        assert_eq!(value(Family::Bcdc { n: 5 }, ShapeSpec::Cycle(5), s), 3);
        assert_eq!(value(Family::Bcdc { n: 4 }, ShapeSpec::Star(1), s), 4);
        assert_eq!(value(Family::Bcdc { n: 5 }, ShapeSpec::Star(1), s), 4);
        assert_eq!(value(Family::Bcdc { n: 5 }, ShapeSpec::Cycle(4), Mode::Substructure), 2);
    }

    #[test]
    fn branch_tags() {
        let p = predicted_kappa(Family::Bcdc { n: 5 }, ShapeSpec::Star(2), Mode::Structure).unwrap();
        assert_eq!((p.branch, p.remainder), (Branch::BcdcStarRemainderOne, Some(1)));
        let p = predicted_kappa(Family::Bcdc { n: 6 }, ShapeSpec::Star(2), Mode::Structure).unwrap();
        assert_eq!((p.branch, p.remainder), (Branch::BcdcStarGeneral, Some(2)));
    }

    #[test]
    fn rejections() {
        let s = Mode::Structure;
        for (f, shape) in [
            (Family::DCell { m: 1, n: 4 }, ShapeSpec::Star(4)),
            (Family::DCell { m: 1, n: 4 }, ShapeSpec::Star(5)),
            (Family::DCell { m: 1, n: 4 }, ShapeSpec::Clique(4)),
            (Family::Bcdc { n: 3 }, ShapeSpec::Star(1)),
            (Family::Bcdc { n: 5 }, ShapeSpec::Star(8)),
            (Family::Bcdc { n: 5 }, ShapeSpec::Path(3)),
            (Family::Bcdc { n: 5 }, ShapeSpec::Path(10)),
            (Family::Bcdc { n: 5 }, ShapeSpec::Cycle(4)),
            (Family::Bcdc { n: 5 }, ShapeSpec::Cycle(11)),
            (Family::Bcdc { n: 4 }, ShapeSpec::Cycle(6)),
        ] {
            assert!(predicted_kappa(f, shape, s).is_err(), "{f:?} {shape}");
        }
        let msg = predicted_kappa(Family::DCell { m: 1, n: 4 }, ShapeSpec::Star(4), s).unwrap_err();
        assert!(format!("{msg}").contains("m+n-2"));
    }
}
