//! Quasi-static tendon-elasticity model.
//!
//! A return spring preloads each digit's tendon with tension proportional to
//! the wrapped arc length, and the tendon stretches by tension over EA along
//! the path it has to traverse to reach a joint. Distal joints therefore sag
//! below their ideal coupled angles while the driven joint, actuated through
//! a rigid pulley, does not. The sag is linear in the driven angle, which
//! makes the per-digit equilibrium a small linear system with a closed-form
//! rank-one solve.

use nalgebra::{DMatrix, DVector};

use crate::error::HandError;
use crate::geometry::{joint, Digit, HandGeometry, TransmissionParams, CMC_SERVO};
use crate::kinematics::{driven_angle_from_servo, JointVector, ServoVector};

/// Spring tension (N) in one digit's tendon at the given posture:
/// stiffness times the total tendon length wrapped onto the joints.
pub fn spring_tension(g: &HandGeometry, digit: Digit, q: &JointVector) -> f64 {
    let dg = g.digit(digit);
    let wrapped: f64 = digit
        .joints()
        .iter()
        .zip(&dg.joint_radii)
        .map(|(&index, radius)| radius * q[index])
        .sum();
    g.transmission(digit).k_s * wrapped
}

/// Per-digit elastic equilibrium `M q = A s`, ordered driven joint first,
/// then outward to the fingertip.
///
/// Row zero pins the driven joint to the commanded angle. Each distal row
/// states that the joint reaches its coupled share `A_i s` minus the stretch
/// the spring tension induces over the tendon path leading to it, giving
/// `M = I + c r^T` with `r` the wrap radii and `c` the per-joint sag
/// coefficients (zero at the driven joint).
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingSystem {
    digit: Digit,
    /// Global joint indices, driven joint first.
    joint_order: Vec<usize>,
    matrix: DMatrix<f64>,
    drive_gains: DVector<f64>,
    radii: DVector<f64>,
    compliance: DVector<f64>,
    unit_response: DVector<f64>,
}

impl CouplingSystem {
    pub fn digit(&self) -> Digit {
        self.digit
    }

    /// Global joint indices in system order (driven joint first).
    pub fn joint_order(&self) -> &[usize] {
        &self.joint_order
    }

    /// The equilibrium matrix `M`.
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Ideal coupling gains `A` (right-hand-side direction).
    pub fn drive_gains(&self) -> &DVector<f64> {
        &self.drive_gains
    }

    /// Wrap radii in system order.
    pub fn radii(&self) -> &DVector<f64> {
        &self.radii
    }

    /// Sag coefficient per joint (1/m): spring stiffness times tendon path
    /// from the driven joint, over EA and the joint's wrap radius.
    pub fn compliance(&self) -> &DVector<f64> {
        &self.compliance
    }

    /// Joint angles per unit driven angle, `M^{-1} A`. Equals `A` when the
    /// spring is off.
    pub fn unit_response(&self) -> &DVector<f64> {
        &self.unit_response
    }
}

/// Build the elastic equilibrium system for one digit.
pub fn coupling_system(g: &HandGeometry, digit: Digit) -> CouplingSystem {
    let dg = g.digit(digit);
    let t: &TransmissionParams = g.transmission(digit);
    let n = dg.joint_count();

    // Digit storage is distal-first; the system wants the driven joint first.
    let joint_order: Vec<usize> = digit.joints().iter().rev().copied().collect();
    let radii = DVector::from_iterator(n, dg.joint_radii.iter().rev().copied());
    let drive_gains = DVector::from_iterator(n, dg.coupling_gains().into_iter().rev());
    let compliance = DVector::from_iterator(
        n,
        dg.cumulative_paths()
            .into_iter()
            .rev()
            .zip(radii.iter())
            .map(|(path, radius)| t.k_s * path / (t.ea * radius)),
    );

    let matrix = DMatrix::identity(n, n) + &compliance * radii.transpose();

    // Rank-one closed-form solve of M x = A (Sherman-Morrison); the
    // denominator is at least 1 for non-negative stiffness.
    let denom = 1.0 + radii.dot(&compliance);
    debug_assert!(denom >= 1.0);
    let factor = radii.dot(&drive_gains) / denom;
    let unit_response = &drive_gains - &compliance * factor;

    CouplingSystem {
        digit,
        joint_order,
        matrix,
        drive_gains,
        radii,
        compliance,
        unit_response,
    }
}

/// Equilibrium joint angles for one digit at the given driven angle, in
/// system order (driven joint first). Linear in the driven angle.
pub fn solve_compensated(system: &CouplingSystem, driven_angle: f64) -> Vec<f64> {
    system
        .unit_response()
        .iter()
        .map(|gain| gain * driven_angle)
        .collect()
}

/// Per-joint sag of an ideally coupled posture: how far each joint falls
/// short of its rigid-tendon angle once the elastic equilibrium settles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompensationBias(pub JointVector);

impl CompensationBias {
    pub fn values(&self) -> &JointVector {
        &self.0
    }
}

/// Absolute floor of the coupling-ratio check in [`bias`] (rad); a relative
/// term of the same scale is added for large angles.
const COUPLING_CHECK_RAD: f64 = 1e-9;

/// Sag vector for a posture on the rigid-tendon coupling surface.
///
/// The input must honour each digit's fixed coupling ratios (the form every
/// rigid-tendon reachable posture has); anything else is a contract breach
/// reported against the offending digit. Driven joints, the thumb CMC, and
/// finger MCP rows always carry zero sag.
pub fn bias(g: &HandGeometry, q_ideal: &JointVector) -> Result<CompensationBias, HandError> {
    let mut b = JointVector::zeros();
    for digit in Digit::ALL {
        let dg = g.digit(digit);
        let driven_angle = q_ideal[digit.driven_joint()];
        let gains = dg.coupling_gains();
        for (&index, gain) in digit.joints().iter().zip(&gains) {
            let expected = gain * driven_angle;
            let tolerance = COUPLING_CHECK_RAD * (1.0 + driven_angle.abs());
            if (q_ideal[index] - expected).abs() > tolerance {
                return Err(HandError::OffManifold {
                    digit,
                    joint_label: joint::label(index),
                    expected_rad: expected,
                    actual_rad: q_ideal[index],
                });
            }
        }
        let system = coupling_system(g, digit);
        for (&index, (ideal_gain, net_gain)) in system
            .joint_order()
            .iter()
            .zip(system.drive_gains().iter().zip(system.unit_response().iter()))
        {
            b[index] = (ideal_gain - net_gain) * driven_angle;
        }
    }
    Ok(CompensationBias(b))
}

/// Elastic forward map: joint angles for a full servo command once the
/// spring-tendon equilibrium settles. The CMC stays direct-driven.
pub fn forward_compensated(g: &HandGeometry, u: &ServoVector) -> Result<JointVector, HandError> {
    let mut q = JointVector::zeros();
    for digit in Digit::ALL {
        let dg = g.digit(digit);
        let servo = digit.servo();
        let driven = driven_angle_from_servo(&dg.guide, dg.servo_pulley_radius, u[servo])
            .map_err(|fault| HandError::Infeasible { servo, fault })?;
        let system = coupling_system(g, digit);
        for (&index, angle) in system.joint_order().iter().zip(solve_compensated(&system, driven))
        {
            q[index] = angle;
        }
    }
    q[joint::THUMB_CMC] = g.cmc_gain * u[CMC_SERVO];
    Ok(q)
}
