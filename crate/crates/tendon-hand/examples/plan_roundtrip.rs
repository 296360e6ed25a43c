//! Round-trip demo: predict the elastic posture for a servo command, then
//! plan a command that reproduces that posture.

use tendon_hand::{
    forward_compensated, plan_to_pose, ControlTarget, HandGeometry, JointVector, ServoVector,
};

fn main() {
    let hand = HandGeometry::default();

    // posture the elastic model predicts for a servo command
    let u = ServoVector([0.4, 0.5, 0.3, 0.2, 0.6, 0.9]);
    let q = forward_compensated(&hand, &u).unwrap();

    // and back: plan a command for that posture
    let plan = plan_to_pose(&hand, &ControlTarget::new(q)).unwrap();
    assert!(plan.residual.max_abs_diff(&JointVector::zeros()) < 1e-9);

    for (i, (cmd, back)) in u.as_array().iter().zip(plan.command.as_array()).enumerate() {
        println!("u{}  sent {:+.6}  recovered {:+.6}", i + 1, cmd, back);
    }
}
