//! Actuator-to-joint stack for a 6-servo, 15-joint tendon-driven hand.
//!
//! One servo drives each digit through a figure-eight tendon loop whose
//! length is conserved, so every joint of a digit follows the driven joint
//! at a fixed pulley-radius ratio. The crate models that chain end to end:
//!
//! * [`kinematics`]: closed-form servo-to-joint maps, their inverses, and
//!   the sparse joint/servo sensitivity matrix.
//! * [`compensation`]: equilibrium posture of the elastic tendon loop and
//!   the rank-one correction that makes the sag exactly linear in the
//!   driven angle.
//! * [`control`]: workspace clipping and a weighted least-squares inverse
//!   that plans servo commands for arbitrary joint targets.
//! * [`plant`] and [`report`]: a synthetic hand with seedable noise and
//!   servo lag, sweep recording, stiffness calibration, and per-joint
//!   model-error scoring with stable CSV/JSON formats.
//! * [`poses`]: named gesture and grasp presets plus user pose files.
//!
//! Angles are radians and lengths metres throughout the API; degrees and
//! 1-based joint/servo numbering appear only in reports and files meant
//! for humans.

pub mod compensation;
pub mod control;
pub mod error;
pub mod geometry;
pub mod kinematics;
pub mod plant;
pub mod poses;
pub mod report;

pub use compensation::{
    bias, coupling_system, forward_compensated, solve_compensated, spring_tension,
    CompensationBias, CouplingSystem,
};
pub use control::{
    clip_to_workspace, inverse_map, out_of_range_joints, plan_to_pose, ControlTarget, PlanResult,
};
pub use error::HandError;
pub use geometry::{
    joint, load_geometry, validate_geometry, Digit, DigitGeometry, GuideGeometry, HandGeometry,
    TransmissionParams, Violation, Workspace, CMC_SERVO, DEFAULT_HAND_JSON, JOINT_COUNT,
    SERVO_COUNT,
};
pub use kinematics::{
    driven_angle_from_servo, driven_rate_at_zero, forward_ideal, mapping_matrix,
    servo_from_driven_angle, servo_sweep_max, JointVector, MappingMatrix, ServoVector,
};
pub use plant::{
    fit_transmission, run_sweep, simulate_measurement, FitOutcome, PlantConfig, PlantPhysics,
    SweepRecord, SweepSample,
};
pub use poses::{
    builtin_pose_library, load_pose_library, pose_library_from_json, pose_library_json,
    resolve_pose, PoseCategory, PoseLibrary, PosePreset, PoseViolation,
};
pub use report::{
    compute_report, read_sweep_csv, report_json, sweep_csv_string, write_sweep_csv, JointReport,
    SweepReport, SWEEP_CSV_HEADER,
};
