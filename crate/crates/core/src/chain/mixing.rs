use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bounds on the mixing time of a reversible chain, in steps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixingBounds {
    /// `ln 2 · (1/δ − 1)`.
    pub lower: f64,
    /// `(1/δ) · ln(4/π_min)`.
    pub upper: f64,
}

pub fn mixing_time_bounds(delta: f64, pi_min: f64) -> Result<MixingBounds> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::OutOfRange(format!("gap {delta} outside (0, 1]")));
    }
    if !(pi_min > 0.0 && pi_min <= 1.0) {
        return Err(Error::OutOfRange(format!(
            "minimum mass {pi_min} outside (0, 1]"
        )));
    }
    Ok(MixingBounds {
        lower: std::f64::consts::LN_2 * (1.0 / delta - 1.0),
        upper: (4.0 / pi_min).ln() / delta,
    })
}
