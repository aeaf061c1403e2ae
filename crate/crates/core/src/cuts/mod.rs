//! Explicit structure cuts around a fixed base vertex, their predicted sizes,
//! and cut verification.

mod bcdc;
mod dcell;
mod predicted;
mod verify;

pub use bcdc::{
    bcdc_base, bcdc_far, cycle_cut_bcdc, k11_cut_bcdc, path_cut_bcdc, star_cut_bcdc, substructure_cycle_cut_bcdc,
};
pub use dcell::{clique_cut_dcell, dcell_base, dcell_far, star_cut_dcell};
pub use predicted::{predicted_kappa, Branch, Family, PredictedValue};
pub use verify::{verify_cut, MemberCheck, VerificationReport};

use crate::shape::{Mode, ShapeSpec, StructureCut};
use crate::{Error, Result};

/// The explicit cut for `(family, shape, mode)`, whichever constructor
/// applies. Substructure requests reuse the structure cut where the two
/// values coincide.
pub fn construct_cut(family: Family, shape: ShapeSpec, mode: Mode) -> Result<StructureCut> {
    predicted_kappa(family, shape, mode)?;
    let cut = match (family, shape, mode) {
        (Family::DCell { m, n }, ShapeSpec::Star(t), _) => star_cut_dcell(m, n, t)?,
        (Family::DCell { m, n }, ShapeSpec::Clique(s), Mode::Structure) => clique_cut_dcell(m, n, s)?,
        (Family::Bcdc { n }, ShapeSpec::Star(t), _) => star_cut_bcdc(n, t)?,
        (Family::Bcdc { n }, ShapeSpec::Path(k), _) => path_cut_bcdc(n, k)?,
        (Family::Bcdc { n }, ShapeSpec::Cycle(k), Mode::Structure) => cycle_cut_bcdc(n, k)?,
        (Family::Bcdc { n }, ShapeSpec::Cycle(k), Mode::Substructure) => return substructure_cycle_cut_bcdc(n, k),
        _ => return Err(Error::NoConstruction(format!("no explicit {shape} cut for {family}"))),
    };
    Ok(cut.retagged(shape, mode))
}

/// Label of the vertex the constructions isolate.
pub fn base_label(family: Family) -> Result<String> {
    match family {
        Family::DCell { m, n } => dcell_base(m, n),
        Family::Bcdc { n } => Ok(bcdc_base(n)?.to_string()),
    }
}

/// Label of a vertex the constructions leave in another component.
pub fn far_label(family: Family) -> Result<String> {
    match family {
        Family::DCell { m, n } => dcell_far(m, n),
        Family::Bcdc { n } => Ok(bcdc_far(n)?.to_string()),
    }
}
