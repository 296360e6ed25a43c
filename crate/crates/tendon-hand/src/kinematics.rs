//! Ideal (rigid-tendon) mapping between servo angles and joint angles.
//!
//! Each digit servo spools `pulley_radius * servo_angle` of tendon, which
//! shortens the chord spanning the driven joint's guide pair. The driven
//! angle follows from the guide triangle in closed form, and tendon-length
//! conservation couples the remaining joints of the digit at fixed ratios.
//! The CMC servo bypasses the tendon run entirely and drives q15 directly.

use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{ChordFault, DrivenAngleOutOfRange, HandError};
use crate::geometry::{
    joint, Digit, DigitGeometry, GuideGeometry, HandGeometry, CMC_SERVO, JOINT_COUNT, SERVO_COUNT,
};

/// Servo angles u1..u6 (rad), 0-based storage.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ServoVector(pub [f64; SERVO_COUNT]);

impl ServoVector {
    pub fn zeros() -> Self {
        ServoVector([0.0; SERVO_COUNT])
    }

    pub fn as_array(&self) -> &[f64; SERVO_COUNT] {
        &self.0
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for ServoVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for ServoVector {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

/// Joint angles q1..q15 (rad), 0-based storage.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JointVector(pub [f64; JOINT_COUNT]);

impl JointVector {
    pub fn zeros() -> Self {
        JointVector([0.0; JOINT_COUNT])
    }

    pub fn as_array(&self) -> &[f64; JOINT_COUNT] {
        &self.0
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for JointVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for JointVector {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

/// Slack on chord-length feasibility checks (m); absorbs rounding at the
/// exact ends of the admissible interval.
const CHORD_SLACK_M: f64 = 1e-12;

/// Slack on driven-angle domain checks (rad).
const ANGLE_SLACK_RAD: f64 = 1e-12;

/// Driven-joint angle produced by retracting `pulley_radius * servo_angle`
/// of tendon from the guide chord. Zero at zero command, strictly increasing
/// while the chord stays inside the guide pair's reachable interval.
pub fn driven_angle_from_servo(
    guide: &GuideGeometry,
    pulley_radius: f64,
    servo_angle: f64,
) -> Result<f64, ChordFault> {
    // anchor the rest configuration: the closed form is exactly zero at
    // u = 0, but evaluating acos there leaves ~1e-16 of cancellation noise
    if servo_angle == 0.0 {
        return Ok(0.0);
    }
    let chord = guide.chord_at_rest() - pulley_radius * servo_angle;
    if chord < guide.min_chord() - CHORD_SLACK_M {
        return Err(ChordFault::OverRetracted {
            chord_m: chord,
            min_m: guide.min_chord(),
        });
    }
    if chord > guide.max_chord() + CHORD_SLACK_M {
        return Err(ChordFault::Slack {
            chord_m: chord,
            max_m: guide.max_chord(),
        });
    }
    let GuideGeometry { d1, d2, alpha } = *guide;
    let cos_included = (d1 * d1 + d2 * d2 - chord * chord) / (2.0 * d1 * d2);
    Ok(alpha - cos_included.clamp(-1.0, 1.0).acos())
}

/// Exact inverse of [`driven_angle_from_servo`] on `[0, alpha]`.
pub fn servo_from_driven_angle(
    guide: &GuideGeometry,
    pulley_radius: f64,
    driven_angle: f64,
) -> Result<f64, DrivenAngleOutOfRange> {
    if !(-ANGLE_SLACK_RAD..=guide.alpha + ANGLE_SLACK_RAD).contains(&driven_angle) {
        return Err(DrivenAngleOutOfRange {
            angle_rad: driven_angle,
            max_rad: guide.alpha,
        });
    }
    let GuideGeometry { d1, d2, alpha } = *guide;
    let included = alpha - driven_angle;
    let chord = (d1 * d1 + d2 * d2 - 2.0 * d1 * d2 * included.cos()).sqrt();
    Ok((guide.chord_at_rest() - chord) / pulley_radius)
}

/// Limit of `d(driven angle)/d(servo angle)` at zero command; keeps the
/// mapping matrix total where the ratio `angle / command` is 0/0.
pub fn driven_rate_at_zero(guide: &GuideGeometry, pulley_radius: f64) -> f64 {
    let GuideGeometry { d1, d2, alpha } = *guide;
    pulley_radius * guide.chord_at_rest() / (d1 * d2 * alpha.sin())
}

/// Per-joint angles of one digit given its driven-joint angle, distal to
/// proximal, under the rigid-tendon coupling ratios.
pub fn couple_digit(digit: &DigitGeometry, driven_angle: f64) -> Vec<f64> {
    digit
        .coupling_gains()
        .into_iter()
        .map(|gain| gain * driven_angle)
        .collect()
}

/// Rigid-tendon forward map: joint angles for a full servo command.
pub fn forward_ideal(g: &HandGeometry, u: &ServoVector) -> Result<JointVector, HandError> {
    let mut q = JointVector::zeros();
    for digit in Digit::ALL {
        let dg = g.digit(digit);
        let servo = digit.servo();
        let driven = driven_angle_from_servo(&dg.guide, dg.servo_pulley_radius, u[servo])
            .map_err(|fault| HandError::Infeasible { servo, fault })?;
        for (&index, angle) in digit.joints().iter().zip(couple_digit(dg, driven)) {
            q[index] = angle;
        }
    }
    q[joint::THUMB_CMC] = g.cmc_gain * u[CMC_SERVO];
    Ok(q)
}

/// Block-sparse joint-per-servo gain matrix. Every digit servo contributes
/// one column with entries only in that digit's rows; the CMC servo
/// contributes a single direct-drive entry. 15 structural non-zeros total.
#[derive(Debug, Clone, PartialEq)]
pub struct MappingMatrix {
    entries: [[f64; SERVO_COUNT]; JOINT_COUNT],
}

impl MappingMatrix {
    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.entries[row][col]
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries
            .iter()
            .flatten()
            .filter(|v| **v != 0.0)
            .count()
    }

    /// `q = H u`.
    pub fn apply(&self, u: &ServoVector) -> JointVector {
        let mut q = JointVector::zeros();
        for (row, out) in self.entries.iter().zip(q.0.iter_mut()) {
            *out = row.iter().zip(&u.0).map(|(h, uj)| h * uj).sum();
        }
        q
    }
}

/// Secant gain matrix `H(u)` of the rigid-tendon map: `H(u) u` reproduces
/// [`forward_ideal`] exactly, with analytic limit gains where a command
/// component is zero.
pub fn mapping_matrix(g: &HandGeometry, u: &ServoVector) -> Result<MappingMatrix, HandError> {
    let mut entries = [[0.0; SERVO_COUNT]; JOINT_COUNT];
    for digit in Digit::ALL {
        let dg = g.digit(digit);
        let servo = digit.servo();
        let command = u[servo];
        let driven_gain = if command == 0.0 {
            driven_rate_at_zero(&dg.guide, dg.servo_pulley_radius)
        } else {
            let driven = driven_angle_from_servo(&dg.guide, dg.servo_pulley_radius, command)
                .map_err(|fault| HandError::Infeasible { servo, fault })?;
            driven / command
        };
        for (&index, gain) in digit.joints().iter().zip(dg.coupling_gains()) {
            entries[index][servo] = gain * driven_gain;
        }
    }
    entries[joint::THUMB_CMC][CMC_SERVO] = g.cmc_gain;
    Ok(MappingMatrix { entries })
}

/// Largest admissible command for one servo: the driven joint's travel limit
/// mapped through the exact inverse (or the CMC limit over the drive ratio).
pub fn servo_sweep_max(g: &HandGeometry, servo: usize) -> Result<f64, HandError> {
    match Digit::for_servo(servo) {
        Some(digit) => {
            let dg = g.digit(digit);
            let limit = g.workspace.q_max[digit.driven_joint()];
            servo_from_driven_angle(&dg.guide, dg.servo_pulley_radius, limit)
                .map_err(|source| HandError::DrivenAngle { digit, source })
        }
        None => Ok(g.workspace.q_max[joint::THUMB_CMC] / g.cmc_gain),
    }
}
