//! Joint-space targeting: clip a desired posture to the travel limits,
//! invert the elastic forward map digit by digit, and report the posture the
//! model will actually settle at.
//!
//! Per digit the reachable set is a line through the origin with direction
//! given by the elastic unit response, so the best command under per-joint
//! weights is the scalar least-squares fit of the target onto that line,
//! clamped to the driven-angle interval every joint's travel limit allows.
//! The CMC channel is inverted exactly.

use crate::compensation::{coupling_system, forward_compensated};
use crate::error::HandError;
use crate::geometry::{joint, Digit, HandGeometry, Workspace, CMC_SERVO, JOINT_COUNT};
use crate::kinematics::{servo_from_driven_angle, JointVector, ServoVector};

/// Desired posture plus per-joint weights for the digit-wise fit. Weights
/// must be non-negative; a digit whose weights are all zero rests at zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlTarget {
    pub desired: JointVector,
    pub weights: [f64; JOINT_COUNT],
}

impl ControlTarget {
    pub fn new(desired: JointVector) -> Self {
        ControlTarget {
            desired,
            weights: [1.0; JOINT_COUNT],
        }
    }

    pub fn with_weights(desired: JointVector, weights: [f64; JOINT_COUNT]) -> Self {
        ControlTarget { desired, weights }
    }
}

/// Result of planning a posture: what was asked for after clipping, the
/// command, and what the elastic model reaches under that command.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanResult {
    pub clipped: JointVector,
    /// Joints the clip actually moved, 0-based.
    pub clipped_joints: Vec<usize>,
    pub command: ServoVector,
    pub achieved: JointVector,
    /// `clipped - achieved`, per joint.
    pub residual: JointVector,
}

/// Clamp every joint of a posture into its travel limits. Idempotent.
pub fn clip_to_workspace(workspace: &Workspace, q: &JointVector) -> JointVector {
    let mut clipped = *q;
    for i in 0..JOINT_COUNT {
        clipped[i] = workspace.clamp(i, q[i]);
    }
    clipped
}

/// Joints that [`clip_to_workspace`] would move, 0-based.
pub fn out_of_range_joints(workspace: &Workspace, q: &JointVector) -> Vec<usize> {
    (0..JOINT_COUNT)
        .filter(|&i| !workspace.contains(i, q[i]))
        .collect()
}

/// Servo command whose elastic forward map best reaches `target` under the
/// given per-joint weights.
///
/// Exact on elastically reachable postures; off that set each digit gets the
/// weighted least-squares driven angle, clamped so no joint of the digit can
/// leave its travel limits.
pub fn inverse_map(
    g: &HandGeometry,
    target: &JointVector,
    weights: &[f64; JOINT_COUNT],
) -> Result<ServoVector, HandError> {
    debug_assert!(weights.iter().all(|w| *w >= 0.0));
    let mut u = ServoVector::zeros();
    for digit in Digit::ALL {
        let system = coupling_system(g, digit);
        let gains = system.unit_response();
        if gains.iter().any(|gain| *gain <= 0.0) {
            return Err(HandError::DegenerateCoupling { digit });
        }

        let mut num = 0.0;
        let mut den = 0.0;
        let mut lo = 0.0f64; // tendons cannot push the digit past extension
        let mut hi = f64::INFINITY;
        for (local, &index) in system.joint_order().iter().enumerate() {
            let w = weights[index];
            num += w * gains[local] * target[index];
            den += w * gains[local] * gains[local];
            lo = lo.max(g.workspace.q_min[index] / gains[local]);
            hi = hi.min(g.workspace.q_max[index] / gains[local]);
        }
        if lo > hi {
            return Err(HandError::EmptyDrivenRange { digit });
        }
        let fitted = if den > 0.0 { num / den } else { 0.0 };
        let driven = fitted.clamp(lo, hi);

        let dg = g.digit(digit);
        u[digit.servo()] = servo_from_driven_angle(&dg.guide, dg.servo_pulley_radius, driven)
            .map_err(|source| HandError::DrivenAngle { digit, source })?;
    }
    u[CMC_SERVO] = target[joint::THUMB_CMC] / g.cmc_gain;
    Ok(u)
}

/// Clip, invert, and predict: the full joint-space targeting pipeline.
pub fn plan_to_pose(g: &HandGeometry, target: &ControlTarget) -> Result<PlanResult, HandError> {
    let clipped = clip_to_workspace(&g.workspace, &target.desired);
    let clipped_joints = out_of_range_joints(&g.workspace, &target.desired);
    let command = inverse_map(g, &clipped, &target.weights)?;
    let achieved = forward_compensated(g, &command)?;
    let mut residual = JointVector::zeros();
    for i in 0..JOINT_COUNT {
        residual[i] = clipped[i] - achieved[i];
    }
    Ok(PlanResult {
        clipped,
        clipped_joints,
        command,
        achieved,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::servo_sweep_max;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn default_hand() -> HandGeometry {
        HandGeometry::default()
    }

    /// Weighted objective the digit-wise fit minimises, evaluated directly.
    fn digit_objective(
        g: &HandGeometry,
        digit: Digit,
        target: &JointVector,
        weights: &[f64; JOINT_COUNT],
        driven: f64,
    ) -> f64 {
        let system = coupling_system(g, digit);
        system
            .joint_order()
            .iter()
            .enumerate()
            .map(|(local, &index)| {
                let miss = target[index] - system.unit_response()[local] * driven;
                weights[index] * miss * miss
            })
            .sum()
    }

    #[test]
    fn clip_clamps_to_the_travel_limits() {
        let g = default_hand();
        let mut q = JointVector::zeros();
        q[joint::INDEX_PIP] = 2.0;
        q[joint::THUMB_IP] = -0.3;
        let clipped = clip_to_workspace(&g.workspace, &q);
        assert_eq!(clipped[joint::INDEX_PIP], 1.61);
        assert_eq!(clipped[joint::THUMB_IP], 0.0);
        assert_eq!(
            out_of_range_joints(&g.workspace, &q),
            vec![joint::THUMB_IP, joint::INDEX_PIP]
        );
        // idempotent
        assert_eq!(clip_to_workspace(&g.workspace, &clipped), clipped);
    }

    #[test]
    fn inverse_undoes_the_elastic_forward_map() {
        let g = default_hand();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let limits: Vec<f64> = (0..6).map(|j| servo_sweep_max(&g, j).unwrap()).collect();
        let weights = [1.0; JOINT_COUNT];
        let mut worst = 0.0f64;
        for _ in 0..200 {
            let mut u = ServoVector::zeros();
            for j in 0..6 {
                u[j] = rng.gen::<f64>() * limits[j];
            }
            let q = forward_compensated(&g, &u).unwrap();
            let back = inverse_map(&g, &q, &weights).unwrap();
            worst = worst.max(back.max_abs_diff(&u));
        }
        assert!(worst < 1e-9, "worst roundtrip error {worst}");
    }

    #[test]
    fn off_axis_target_matches_grid_search() {
        let g = default_hand();
        let mut target = JointVector::zeros();
        target[joint::INDEX_DIP] = 1.0;
        let weights = [1.0; JOINT_COUNT];
        let u = inverse_map(&g, &target, &weights).unwrap();
        let dg = g.digit(Digit::Index);
        let fitted = crate::kinematics::driven_angle_from_servo(
            &dg.guide,
            dg.servo_pulley_radius,
            u[Digit::Index.servo()],
        )
        .unwrap();

        let steps = 1_000_000;
        let mut best = (f64::INFINITY, 0.0);
        for k in 0..=steps {
            let driven = dg.guide.alpha * k as f64 / steps as f64;
            let value = digit_objective(&g, Digit::Index, &target, &weights, driven);
            if value < best.0 {
                best = (value, driven);
            }
        }
        let step = dg.guide.alpha / steps as f64;
        assert!(
            (fitted - best.1).abs() <= 2.0 * step,
            "closed form {fitted} vs grid {}",
            best.1
        );
        let closed = digit_objective(&g, Digit::Index, &target, &weights, fitted);
        assert!(closed <= best.0 + 1e-12);
        assert!((closed - best.0).abs() < 1e-6);
    }

    #[test]
    fn silent_digits_rest_at_zero() {
        let g = default_hand();
        let mut target = JointVector::zeros();
        target[joint::MIDDLE_MCP] = 0.9;
        target[joint::MIDDLE_PIP] = 1.1;
        let mut weights = [0.0; JOINT_COUNT];
        weights[joint::MIDDLE_MCP] = 1.0;
        weights[joint::MIDDLE_PIP] = 1.0;
        let u = inverse_map(&g, &target, &weights).unwrap();
        for digit in [Digit::Thumb, Digit::Index, Digit::Ring, Digit::Pinky] {
            assert_eq!(u[digit.servo()], 0.0, "{digit}");
        }
        assert!(u[Digit::Middle.servo()] > 0.0);
        assert_eq!(u[CMC_SERVO], 0.0);
    }

    #[test]
    fn cmc_channel_is_exact() {
        let g = default_hand();
        let mut target = JointVector::zeros();
        target[joint::THUMB_CMC] = 1.0;
        let u = inverse_map(&g, &target, &[1.0; JOINT_COUNT]).unwrap();
        assert_eq!(u.0, [0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let plan = plan_to_pose(&g, &ControlTarget::new(target)).unwrap();
        assert_eq!(plan.achieved[joint::THUMB_CMC], 1.0);
        assert_eq!(plan.residual[joint::THUMB_CMC], 0.0);
    }

    #[test]
    fn full_flexion_target_stays_inside_the_sweep_range() {
        let g = default_hand();
        let target = JointVector(g.workspace.q_max);
        let plan = plan_to_pose(&g, &ControlTarget::new(target)).unwrap();
        for j in 0..6 {
            let u_max = servo_sweep_max(&g, j).unwrap();
            assert!(
                plan.command[j] <= u_max + 1e-12 && plan.command[j] >= 0.0,
                "servo {j} command {} outside [0, {u_max}]",
                plan.command[j]
            );
        }
        assert!(plan.residual.0.iter().all(|r| r.is_finite()));
    }

    #[test]
    fn planned_postures_never_leave_the_workspace() {
        let g = default_hand();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let mut desired = JointVector::zeros();
            for i in 0..JOINT_COUNT {
                desired[i] = rng.gen_range(-3.0..4.0);
            }
            let plan = plan_to_pose(&g, &ControlTarget::new(desired)).unwrap();
            for i in 0..JOINT_COUNT {
                assert!(
                    plan.achieved[i] >= g.workspace.q_min[i] - 1e-12
                        && plan.achieved[i] <= g.workspace.q_max[i] + 1e-12,
                    "joint {i} at {} outside limits",
                    plan.achieved[i]
                );
            }
        }
    }

    proptest! {
        #[test]
        fn fitted_driven_angle_is_a_weighted_minimum(
            mcp in 0.0f64..1.2,
            pip in 0.0f64..1.5,
            dip in 0.0f64..1.2,
            w_mcp in 0.01f64..10.0,
            w_pip in 0.01f64..10.0,
            w_dip in 0.01f64..10.0,
        ) {
            let g = default_hand();
            let mut target = JointVector::zeros();
            target[joint::RING_MCP] = mcp;
            target[joint::RING_PIP] = pip;
            target[joint::RING_DIP] = dip;
            let mut weights = [0.0; JOINT_COUNT];
            weights[joint::RING_MCP] = w_mcp;
            weights[joint::RING_PIP] = w_pip;
            weights[joint::RING_DIP] = w_dip;
            let u = inverse_map(&g, &target, &weights).unwrap();
            let dg = g.digit(Digit::Ring);
            let fitted = crate::kinematics::driven_angle_from_servo(
                &dg.guide, dg.servo_pulley_radius, u[Digit::Ring.servo()],
            ).unwrap();
            // only assert interior optima, away from the travel-limit clamp
            let delta = 1e-4;
            let limit = g.workspace.q_max[joint::RING_MCP];
            if fitted > 2.0 * delta && fitted < limit - 2.0 * delta {
                let here = digit_objective(&g, Digit::Ring, &target, &weights, fitted);
                prop_assert!(digit_objective(&g, Digit::Ring, &target, &weights, fitted + delta) >= here);
                prop_assert!(digit_objective(&g, Digit::Ring, &target, &weights, fitted - delta) >= here);
            }
        }

        #[test]
        fn weight_scale_does_not_change_the_command(
            scale in 0.1f64..50.0,
            mcp in 0.0f64..1.2,
            pip in 0.0f64..1.5,
        ) {
            let g = default_hand();
            let mut target = JointVector::zeros();
            target[joint::PINKY_MCP] = mcp;
            target[joint::PINKY_PIP] = pip;
            let base = inverse_map(&g, &target, &[1.0; JOINT_COUNT]).unwrap();
            let scaled = inverse_map(&g, &target, &[scale; JOINT_COUNT]).unwrap();
            prop_assert!(base.max_abs_diff(&scaled) < 1e-12);
        }

        #[test]
        fn clipping_is_idempotent(
            q in proptest::collection::vec(-2.0f64..3.0, JOINT_COUNT),
        ) {
            let g = default_hand();
            let raw = JointVector(q.try_into().unwrap());
            let once = clip_to_workspace(&g.workspace, &raw);
            prop_assert_eq!(clip_to_workspace(&g.workspace, &once), once);
            prop_assert!(out_of_range_joints(&g.workspace, &once).is_empty());
        }
    }
}
