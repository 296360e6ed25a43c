use std::path::PathBuf;

use thiserror::Error;

use crate::geometry::{Digit, Violation};

/// Chord fault raised when a servo command asks the tendon for more travel
/// than the guide triangle can supply, or feeds out more than it can absorb.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ChordFault {
    #[error("over-retracted: chord {chord_m:.6} m is below the minimum {min_m:.6} m")]
    OverRetracted { chord_m: f64, min_m: f64 },
    #[error("slack: chord {chord_m:.6} m is above the maximum {max_m:.6} m")]
    Slack { chord_m: f64, max_m: f64 },
}

/// Requested driven-joint angle outside the closed interval covered by the
/// guide triangle, `[0, alpha]`.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("driven angle {angle_rad:.6} rad outside [0, {max_rad:.6}] rad")]
pub struct DrivenAngleOutOfRange {
    pub angle_rad: f64,
    pub max_rad: f64,
}

#[derive(Debug, Error)]
pub enum HandError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("invalid geometry:\n{}", render_violations(violations))]
    InvalidGeometry { violations: Vec<Violation> },

    /// Servo command geometrically infeasible. `servo` is 0-based.
    #[error("servo {} infeasible: {fault}", servo + 1)]
    Infeasible {
        servo: usize,
        #[source]
        fault: ChordFault,
    },

    #[error("{digit} driven joint: {source}")]
    DrivenAngle {
        digit: Digit,
        #[source]
        source: DrivenAngleOutOfRange,
    },

    /// Joint targets that break the digit's fixed coupling ratios where an
    /// exactly coupled vector is required.
    #[error(
        "{digit} target breaks the coupling ratio at {joint_label}: \
         got {actual_rad:.9} rad, expected {expected_rad:.9} rad"
    )]
    OffManifold {
        digit: Digit,
        joint_label: &'static str,
        expected_rad: f64,
        actual_rad: f64,
    },

    /// Transmission parameters so extreme that a distal joint's net drive
    /// gain is no longer positive.
    #[error("{digit} coupling response is not positive; transmission parameters are unusable")]
    DegenerateCoupling { digit: Digit },

    /// Per-joint travel limits that admit no common driven angle.
    #[error("{digit} workspace leaves no admissible driven angle")]
    EmptyDrivenRange { digit: Digit },

    #[error("sweep for servo {} needs at least 2 samples and positive travel", servo + 1)]
    DegenerateSweep { servo: usize },

    #[error("stiffness fit cannot reach {target_mae_deg:.4} deg (maximum reachable {max_mae_deg:.4} deg)")]
    FitOutOfRange {
        target_mae_deg: f64,
        max_mae_deg: f64,
    },

    #[error("sweep csv: {message}")]
    SweepFormat { message: String },

    #[error("pose library: {message}")]
    PoseFormat { message: String },

    #[error("unknown pose preset '{name}'")]
    UnknownPose { name: String },
}

fn render_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| format!("  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}
