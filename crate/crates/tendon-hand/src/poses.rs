//! Named joint-space presets: static gestures, counting poses, and grasp
//! pre-shapes, plus file-based loading of user-defined poses.
//!
//! Preset angles are authored on the elastic coupling manifold (one scalar
//! flexion per digit plus the thumb base rotation), so the planner can hit
//! them exactly; they are illustrative postures, not measured data.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::compensation::{coupling_system, solve_compensated, CouplingSystem};
use crate::control::{plan_to_pose, ControlTarget, PlanResult};
use crate::error::HandError;
use crate::geometry::{joint, Digit, HandGeometry, Workspace, JOINT_COUNT};
use crate::kinematics::JointVector;

/// Broad use of a preset; grasp categories follow the usual power /
/// precision / tool split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PoseCategory {
    Opposition,
    Gesture,
    Digit,
    PowerGrasp,
    PrecisionGrasp,
    ToolGrasp,
}

impl PoseCategory {
    pub const ALL: [PoseCategory; 6] = [
        PoseCategory::Opposition,
        PoseCategory::Gesture,
        PoseCategory::Digit,
        PoseCategory::PowerGrasp,
        PoseCategory::PrecisionGrasp,
        PoseCategory::ToolGrasp,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PoseCategory::Opposition => "opposition",
            PoseCategory::Gesture => "gesture",
            PoseCategory::Digit => "digit",
            PoseCategory::PowerGrasp => "power-grasp",
            PoseCategory::PrecisionGrasp => "precision-grasp",
            PoseCategory::ToolGrasp => "tool-grasp",
        }
    }

    pub fn is_grasp(&self) -> bool {
        matches!(
            self,
            PoseCategory::PowerGrasp | PoseCategory::PrecisionGrasp | PoseCategory::ToolGrasp
        )
    }
}

impl fmt::Display for PoseCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One named target posture.
#[derive(Debug, Clone, PartialEq)]
pub struct PosePreset {
    pub name: String,
    pub category: PoseCategory,
    pub q_d: JointVector,
    pub description: String,
}

/// A workspace limit exceeded by a preset joint value.
#[derive(Debug, Clone, PartialEq)]
pub struct PoseViolation {
    pub preset: String,
    /// 0-based joint index.
    pub joint: usize,
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
}

impl fmt::Display for PoseViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pose \"{}\": q{} = {} outside [{}, {}]",
            self.preset,
            self.joint + 1,
            self.value,
            self.lo,
            self.hi
        )
    }
}

/// Loaded presets plus any workspace violations found in them. Violating
/// presets stay in the library; the planner clips them at execution time.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PoseLibrary {
    pub presets: Vec<PosePreset>,
    pub violations: Vec<PoseViolation>,
}

impl PoseLibrary {
    pub fn get(&self, name: &str) -> Result<&PosePreset, HandError> {
        self.presets
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| HandError::UnknownPose {
                name: name.to_string(),
            })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PoseFileEntry {
    name: String,
    category: PoseCategory,
    q_d_rad: Vec<f64>,
    description: String,
}

fn validate_presets(presets: &[PosePreset], workspace: &Workspace) -> Vec<PoseViolation> {
    let mut violations = Vec::new();
    for preset in presets {
        for j in 0..JOINT_COUNT {
            let value = preset.q_d[j];
            let (lo, hi) = (workspace.q_min[j], workspace.q_max[j]);
            if value < lo || value > hi {
                violations.push(PoseViolation {
                    preset: preset.name.clone(),
                    joint: j,
                    value,
                    lo,
                    hi,
                });
            }
        }
    }
    violations
}

/// Parse a pose library from JSON text and validate it against a workspace.
/// Blank input is an empty library.
pub fn pose_library_from_json(
    text: &str,
    workspace: &Workspace,
) -> Result<PoseLibrary, HandError> {
    if text.trim().is_empty() {
        return Ok(PoseLibrary::default());
    }
    let entries: Vec<PoseFileEntry> =
        serde_json::from_str(text).map_err(|err| HandError::PoseFormat {
            message: err.to_string(),
        })?;
    let mut presets = Vec::with_capacity(entries.len());
    for entry in entries {
        if entry.q_d_rad.len() != JOINT_COUNT {
            return Err(HandError::PoseFormat {
                message: format!(
                    "preset \"{}\": q_d_rad has {} entries, expected {JOINT_COUNT}",
                    entry.name,
                    entry.q_d_rad.len()
                ),
            });
        }
        if let Some(j) = entry.q_d_rad.iter().position(|v| !v.is_finite()) {
            return Err(HandError::PoseFormat {
                message: format!("preset \"{}\": q_d_rad[{j}] is not finite", entry.name),
            });
        }
        if presets.iter().any(|p: &PosePreset| p.name == entry.name) {
            return Err(HandError::PoseFormat {
                message: format!("duplicate preset name \"{}\"", entry.name),
            });
        }
        let mut q_d = JointVector::zeros();
        for (j, v) in entry.q_d_rad.iter().enumerate() {
            q_d[j] = *v;
        }
        presets.push(PosePreset {
            name: entry.name,
            category: entry.category,
            q_d,
            description: entry.description,
        });
    }
    let violations = validate_presets(&presets, workspace);
    Ok(PoseLibrary {
        presets,
        violations,
    })
}

/// Load a pose library file (JSON array of presets).
pub fn load_pose_library(
    path: impl AsRef<Path>,
    workspace: &Workspace,
) -> Result<PoseLibrary, HandError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| HandError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    pose_library_from_json(&text, workspace)
}

/// Serialize presets in the pose file schema (pretty JSON, trailing newline).
pub fn pose_library_json(presets: &[PosePreset]) -> String {
    let entries: Vec<PoseFileEntry> = presets
        .iter()
        .map(|p| PoseFileEntry {
            name: p.name.clone(),
            category: p.category,
            q_d_rad: p.q_d.as_array().to_vec(),
            description: p.description.clone(),
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&entries).expect("pose library serializes");
    text.push('\n');
    text
}

/// Plan the command for a preset: clip, invert, and report the posture the
/// elastic model predicts for that command.
pub fn resolve_pose(g: &HandGeometry, preset: &PosePreset) -> Result<PlanResult, HandError> {
    plan_to_pose(g, &ControlTarget::new(preset.q_d))
}

/// Largest driven angle whose coupled posture stays inside the workspace.
fn max_driven_angle(g: &HandGeometry, system: &CouplingSystem) -> f64 {
    let mut hi = f64::INFINITY;
    for (k, &j) in system.joint_order().iter().enumerate() {
        let gain = system.unit_response()[k];
        if gain > 0.0 {
            hi = hi.min(g.workspace.q_max[j] / gain);
        }
    }
    hi
}

/// Built-in preset library for a given hand: counting digits 0-8, common
/// gestures, thumb oppositions, and a 16-entry grasp taxonomy.
pub fn builtin_pose_library(g: &HandGeometry) -> PoseLibrary {
    let systems: Vec<CouplingSystem> = Digit::ALL
        .iter()
        .map(|&d| coupling_system(g, d))
        .collect();
    let travel: Vec<f64> = systems.iter().map(|s| max_driven_angle(g, s)).collect();

    // digit flexions are fractions of each digit's full in-workspace travel,
    // ordered thumb, index, middle, ring, pinky; cmc is a fraction of the
    // thumb base rotation limit
    let flex = |fractions: [f64; 5], cmc: f64| -> JointVector {
        let mut q = JointVector::zeros();
        for (d, system) in systems.iter().enumerate() {
            let driven = fractions[d] * travel[d];
            let values = solve_compensated(system, driven);
            for (k, &j) in system.joint_order().iter().enumerate() {
                q[j] = values[k];
            }
        }
        q[joint::THUMB_CMC] = cmc * g.workspace.q_max[joint::THUMB_CMC];
        q
    };

    let preset = |name: &str, category: PoseCategory, q_d: JointVector, description: &str| {
        PosePreset {
            name: name.to_string(),
            category,
            q_d,
            description: description.to_string(),
        }
    };

    // PoseCategory::Digit collides with the finger enum, so bind the
    // categories to short locals instead of glob-importing the variants
    let (opp, ges, dig, pow, pre, tool) = (
        PoseCategory::Opposition,
        PoseCategory::Gesture,
        PoseCategory::Digit,
        PoseCategory::PowerGrasp,
        PoseCategory::PrecisionGrasp,
        PoseCategory::ToolGrasp,
    );
    let mut cmc_abduct = JointVector::zeros();
    cmc_abduct[joint::THUMB_CMC] = 1.0;

    let presets = vec![
        // oppositions
        preset(
            "thumb-index-opposition",
            opp,
            flex([0.85, 0.75, 0.25, 0.25, 0.25], 0.90),
            "thumb pad meets the index fingertip",
        ),
        preset(
            "thumb-middle-opposition",
            opp,
            flex([0.85, 0.30, 0.75, 0.25, 0.25], 0.75),
            "thumb pad meets the middle fingertip",
        ),
        preset(
            "thumb-pinky-opposition",
            opp,
            flex([0.90, 0.30, 0.30, 0.35, 0.80], 0.55),
            "thumb pad reaches across to the pinky",
        ),
        // gestures
        preset("open", ges, JointVector::zeros(), "flat open hand"),
        preset(
            "fist",
            ges,
            JointVector(g.workspace.q_max),
            "every joint at its travel limit",
        ),
        preset(
            "point",
            ges,
            flex([0.80, 0.0, 0.90, 0.90, 0.90], 0.50),
            "index extended, everything else curled",
        ),
        preset(
            "peace",
            ges,
            flex([0.80, 0.0, 0.0, 0.90, 0.90], 0.50),
            "index and middle extended",
        ),
        preset(
            "rock",
            ges,
            flex([0.80, 0.0, 0.90, 0.90, 0.0], 0.40),
            "index and pinky extended",
        ),
        preset(
            "cmc-abduct",
            ges,
            cmc_abduct,
            "thumb base rotated one radian, all other joints at rest",
        ),
        // one-handed counting, 0 through 8
        preset(
            "digit-0",
            dig,
            flex([0.90, 0.95, 0.95, 0.95, 0.95], 0.30),
            "closed hand for zero",
        ),
        preset(
            "digit-1",
            dig,
            flex([0.85, 0.0, 0.95, 0.95, 0.95], 0.40),
            "index up",
        ),
        preset(
            "digit-2",
            dig,
            flex([0.85, 0.0, 0.0, 0.95, 0.95], 0.40),
            "index and middle up",
        ),
        preset(
            "digit-3",
            dig,
            flex([0.85, 0.0, 0.0, 0.0, 0.95], 0.40),
            "index, middle, and ring up",
        ),
        preset(
            "digit-4",
            dig,
            flex([0.85, 0.0, 0.0, 0.0, 0.0], 0.60),
            "four fingers up, thumb across the palm",
        ),
        preset(
            "digit-5",
            dig,
            flex([0.0, 0.0, 0.0, 0.0, 0.0], 0.15),
            "all five digits extended",
        ),
        preset(
            "digit-6",
            dig,
            flex([0.70, 0.0, 0.0, 0.0, 0.75], 0.50),
            "thumb touches the pinky tip",
        ),
        preset(
            "digit-7",
            dig,
            flex([0.70, 0.0, 0.0, 0.75, 0.0], 0.55),
            "thumb touches the ring fingertip",
        ),
        preset(
            "digit-8",
            dig,
            flex([0.70, 0.0, 0.75, 0.0, 0.0], 0.60),
            "thumb touches the middle fingertip",
        ),
        // power grasps
        preset(
            "power-cylinder",
            pow,
            flex([0.65, 0.70, 0.70, 0.70, 0.70], 0.70),
            "full-palm wrap around a cylinder",
        ),
        preset(
            "power-sphere",
            pow,
            flex([0.50, 0.55, 0.55, 0.55, 0.55], 0.80),
            "cupped wrap around a ball",
        ),
        preset(
            "power-hook",
            pow,
            flex([0.10, 0.85, 0.85, 0.85, 0.85], 0.10),
            "finger hook with the thumb out of the way",
        ),
        preset(
            "power-hammer",
            pow,
            flex([0.75, 0.90, 0.90, 0.90, 0.90], 0.45),
            "tight wrap for a handle under load",
        ),
        preset(
            "power-disk",
            pow,
            flex([0.45, 0.45, 0.45, 0.45, 0.45], 0.85),
            "splayed wrap over a disk or lid",
        ),
        preset(
            "power-club",
            pow,
            flex([0.60, 0.75, 0.80, 0.85, 0.90], 0.50),
            "graded wrap, tighter toward the pinky",
        ),
        // precision grasps
        preset(
            "precision-pinch",
            pre,
            flex([0.60, 0.55, 0.20, 0.20, 0.20], 0.85),
            "thumb-index pad pinch",
        ),
        preset(
            "precision-tripod",
            pre,
            flex([0.60, 0.50, 0.50, 0.15, 0.15], 0.80),
            "thumb, index, and middle on the object",
        ),
        preset(
            "precision-lateral",
            pre,
            flex([0.35, 0.60, 0.50, 0.50, 0.50], 0.20),
            "thumb presses on the side of the index (key grip)",
        ),
        preset(
            "precision-tip",
            pre,
            flex([0.75, 0.70, 0.30, 0.30, 0.30], 0.90),
            "fingertip-to-fingertip pick of a small object",
        ),
        preset(
            "precision-five-jaw",
            pre,
            flex([0.55, 0.45, 0.45, 0.45, 0.45], 0.75),
            "all five fingertips on the object",
        ),
        // tool grasps
        preset(
            "tool-pen",
            tool,
            flex([0.55, 0.60, 0.50, 0.30, 0.30], 0.80),
            "dynamic tripod around a pen",
        ),
        preset(
            "tool-scissors",
            tool,
            flex([0.30, 0.40, 0.45, 0.60, 0.60], 0.60),
            "thumb and index through scissor handles",
        ),
        preset(
            "tool-screwdriver",
            tool,
            flex([0.60, 0.65, 0.65, 0.65, 0.65], 0.60),
            "cylinder wrap with the index steering the shaft",
        ),
        preset(
            "tool-chopsticks",
            tool,
            flex([0.50, 0.45, 0.55, 0.70, 0.75], 0.70),
            "paired-stick hold between thumb, index, and middle",
        ),
        preset(
            "tool-trigger",
            tool,
            flex([0.55, 0.35, 0.70, 0.70, 0.70], 0.55),
            "handle wrap with the index on a trigger",
        ),
    ];
    let violations = validate_presets(&presets, &g.workspace);
    PoseLibrary {
        presets,
        violations,
    }
}
