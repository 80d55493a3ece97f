//! Rank conditions, rectangle diagrams and quiver coefficients.

mod coeffs;
mod flag;
mod rank;
mod sweep;

pub use flag::{expand_gw, flag_quiver, flag_rank_conditions, non_hook_terms};
pub use rank::{RankConditions, RectangleDiagram};
pub use sweep::{all_rank_conditions, conjecture_sweep, SweepReport, Violation};

use crate::engine::Engine;
use crate::error::Result;
use crate::QuiverElement;

/// `P_r` through the global engine.
pub fn quiver_coeffs(r: &RankConditions) -> Result<QuiverElement> {
    Ok((*Engine::global().quiver_coeffs(r)?).clone())
}

/// The rook strip formula through the global engine.
pub fn complexes_coeffs(r: &RankConditions) -> Result<QuiverElement> {
    Engine::global().complexes_coeffs(r)
}
