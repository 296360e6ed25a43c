//! Structural description of the hand: per-digit joint layout, tendon guide
//! triangles, transmission constants, and joint travel limits.
//!
//! Lengths are metres and angles are radians throughout the crate; degrees
//! appear only at reporting boundaries. Joint numbering is frozen: q1 thumb
//! IP, q2 thumb MP, q3..q5 index DIP/PIP/MCP, q6..q8 middle, q9..q11 ring,
//! q12..q14 pinky, q15 thumb CMC. Servos u1..u5 drive the five digit flexion
//! tendons (thumb, index, middle, ring, pinky); u6 direct-drives the CMC.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::HandError;

/// Number of modelled joints (q1..q15).
pub const JOINT_COUNT: usize = 15;

/// Number of servos (u1..u6).
pub const SERVO_COUNT: usize = 6;

/// 0-based index of the servo that direct-drives the thumb CMC joint.
pub const CMC_SERVO: usize = 5;

/// 0-based joint indices and display labels.
pub mod joint {
    pub const THUMB_IP: usize = 0;
    pub const THUMB_MP: usize = 1;
    pub const INDEX_DIP: usize = 2;
    pub const INDEX_PIP: usize = 3;
    pub const INDEX_MCP: usize = 4;
    pub const MIDDLE_DIP: usize = 5;
    pub const MIDDLE_PIP: usize = 6;
    pub const MIDDLE_MCP: usize = 7;
    pub const RING_DIP: usize = 8;
    pub const RING_PIP: usize = 9;
    pub const RING_MCP: usize = 10;
    pub const PINKY_DIP: usize = 11;
    pub const PINKY_PIP: usize = 12;
    pub const PINKY_MCP: usize = 13;
    pub const THUMB_CMC: usize = 14;

    /// Short labels, indexed 0-based; label text uses the 1-based numbering.
    pub const LABELS: [&str; super::JOINT_COUNT] = [
        "thumb_ip", "thumb_mp", "index_dip", "index_pip", "index_mcp", "middle_dip", "middle_pip",
        "middle_mcp", "ring_dip", "ring_pip", "ring_mcp", "pinky_dip", "pinky_pip", "pinky_mcp",
        "thumb_cmc",
    ];

    /// Joints whose tracking error the reports score: every IP/PIP/DIP,
    /// excluding the directly driven MCP and thumb MP rows and the CMC.
    pub const TARGET_JOINTS: [usize; 9] = [
        THUMB_IP, INDEX_DIP, INDEX_PIP, MIDDLE_DIP, MIDDLE_PIP, RING_DIP, RING_PIP, PINKY_DIP,
        PINKY_PIP,
    ];

    pub fn label(index: usize) -> &'static str {
        LABELS[index]
    }
}

/// The five tendon-driven digits. The thumb CMC joint is not part of any
/// digit's tendon run; it is direct-driven by its own servo.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Digit {
    Thumb,
    Index,
    Middle,
    Ring,
    Pinky,
}

impl Digit {
    pub const ALL: [Digit; 5] = [
        Digit::Thumb,
        Digit::Index,
        Digit::Middle,
        Digit::Ring,
        Digit::Pinky,
    ];

    /// Joint indices of this digit, ordered distal to proximal, matching the
    /// order of [`DigitGeometry::joint_radii`].
    pub fn joints(self) -> &'static [usize] {
        match self {
            Digit::Thumb => &[joint::THUMB_IP, joint::THUMB_MP],
            Digit::Index => &[joint::INDEX_DIP, joint::INDEX_PIP, joint::INDEX_MCP],
            Digit::Middle => &[joint::MIDDLE_DIP, joint::MIDDLE_PIP, joint::MIDDLE_MCP],
            Digit::Ring => &[joint::RING_DIP, joint::RING_PIP, joint::RING_MCP],
            Digit::Pinky => &[joint::PINKY_DIP, joint::PINKY_PIP, joint::PINKY_MCP],
        }
    }

    /// Joint index of the directly actuated joint (MCP, or MP on the thumb).
    pub fn driven_joint(self) -> usize {
        *self.joints().last().unwrap()
    }

    /// 0-based index of the servo that drives this digit's flexion tendon.
    pub fn servo(self) -> usize {
        match self {
            Digit::Thumb => 0,
            Digit::Index => 1,
            Digit::Middle => 2,
            Digit::Ring => 3,
            Digit::Pinky => 4,
        }
    }

    /// Digit whose tendon hangs off the given servo; `None` for the CMC servo.
    pub fn for_servo(servo: usize) -> Option<Digit> {
        Digit::ALL.into_iter().find(|d| d.servo() == servo)
    }

    /// Digit owning the given joint; `None` for the CMC joint.
    pub fn for_joint(index: usize) -> Option<Digit> {
        Digit::ALL.into_iter().find(|d| d.joints().contains(&index))
    }

    pub fn name(self) -> &'static str {
        match self {
            Digit::Thumb => "thumb",
            Digit::Index => "index",
            Digit::Middle => "middle",
            Digit::Ring => "ring",
            Digit::Pinky => "pinky",
        }
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Two tendon guides at distances `d1` and `d2` from a joint's centre of
/// rotation, separated by the joint's opening angle `alpha` at full
/// extension. The tendon spans the straight chord between them, so pulling
/// the chord short flexes the joint.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GuideGeometry {
    #[serde(rename = "d1_m")]
    pub d1: f64,
    #[serde(rename = "d2_m")]
    pub d2: f64,
    #[serde(rename = "alpha_rad")]
    pub alpha: f64,
}

impl GuideGeometry {
    /// Chord length between the guides at full extension. Always derived
    /// from `d1`, `d2`, `alpha`; never stored.
    pub fn chord_at_rest(&self) -> f64 {
        let GuideGeometry { d1, d2, alpha } = *self;
        (d1 * d1 + d2 * d2 - 2.0 * d1 * d2 * alpha.cos()).sqrt()
    }

    /// Shortest chord the guide pair can realise: the guides collinear with
    /// the joint centre on the same side.
    pub fn min_chord(&self) -> f64 {
        (self.d1 - self.d2).abs()
    }

    /// Longest chord the guide pair can realise.
    pub fn max_chord(&self) -> f64 {
        self.d1 + self.d2
    }
}

/// Series-elastic transmission constants shared by one digit's tendon run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransmissionParams {
    /// Return-spring stiffness (N/m). Zero switches the elasticity model off.
    #[serde(rename = "k_s_n_per_m")]
    pub k_s: f64,
    /// Tendon axial stiffness EA (N): tension per unit strain.
    #[serde(rename = "ea_n")]
    pub ea: f64,
}

/// Tendon-side geometry of one digit.
///
/// `joint_radii` and `path_lengths` are ordered distal to proximal, matching
/// [`Digit::joints`]: fingers are `[DIP, PIP, MCP]` with path lengths
/// `[PIP-to-DIP, MCP-to-PIP]`, the thumb is `[IP, MP]` with `[MP-to-IP]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DigitGeometry {
    pub digit: Digit,
    /// Tendon wrap radius at each joint (m).
    pub joint_radii: Vec<f64>,
    /// Inter-joint tendon path lengths (m); entry `i` connects joint `i` to
    /// joint `i + 1` of the distal-to-proximal list.
    pub path_lengths: Vec<f64>,
    pub guide: GuideGeometry,
    /// Radius of the servo pulley spooling this digit's tendon (m).
    pub servo_pulley_radius: f64,
    /// Index of the directly actuated joint within `joint_radii`. The
    /// transmission model requires it to be the proximal-most entry.
    pub driven_joint_index: usize,
    /// Optional declared radius ratio (e.g. `[5, 4, 5]`) cross-checked
    /// against `joint_radii` during validation.
    pub radius_ratio: Option<Vec<f64>>,
}

impl DigitGeometry {
    pub fn joint_count(&self) -> usize {
        self.joint_radii.len()
    }

    /// Wrap radius of the directly actuated joint.
    pub fn driven_radius(&self) -> f64 {
        self.joint_radii[self.driven_joint_index]
    }

    /// Ideal per-joint flexion per unit driven-joint flexion, distal to
    /// proximal. Tendon-length conservation across equal wrap arcs fixes
    /// each entry at `driven_radius / joint_radius`.
    pub fn coupling_gains(&self) -> Vec<f64> {
        let rd = self.driven_radius();
        self.joint_radii.iter().map(|r| rd / r).collect()
    }

    /// Tendon path length from the driven joint out to each joint, distal to
    /// proximal; zero at the driven joint itself.
    pub fn cumulative_paths(&self) -> Vec<f64> {
        (0..self.joint_count())
            .map(|i| self.path_lengths[i..self.driven_joint_index].iter().sum())
            .collect()
    }
}

/// Per-joint travel limits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Workspace {
    #[serde(rename = "q_min_rad")]
    pub q_min: [f64; JOINT_COUNT],
    #[serde(rename = "q_max_rad")]
    pub q_max: [f64; JOINT_COUNT],
}

impl Workspace {
    pub fn contains(&self, index: usize, angle: f64) -> bool {
        angle >= self.q_min[index] && angle <= self.q_max[index]
    }

    pub fn clamp(&self, index: usize, angle: f64) -> f64 {
        angle.clamp(self.q_min[index], self.q_max[index])
    }

    /// True when every joint is inside its limits, allowing `slack` rad of
    /// tolerance at both ends.
    pub fn contains_all(&self, q: &[f64; JOINT_COUNT], slack: f64) -> bool {
        (0..JOINT_COUNT).all(|i| q[i] >= self.q_min[i] - slack && q[i] <= self.q_max[i] + slack)
    }
}

impl Default for Workspace {
    /// Travel limits measured on the shipped hand model.
    fn default() -> Self {
        Workspace {
            q_min: [0.0; JOINT_COUNT],
            q_max: [
                0.99, 1.25, // thumb IP, MP
                1.31, 1.61, 1.27, // index DIP, PIP, MCP
                1.28, 1.58, 1.24, // middle
                1.29, 1.59, 1.25, // ring
                1.25, 1.55, 1.23, // pinky
                1.57, // thumb CMC
            ],
        }
    }
}

/// Complete structural model: five digits plus the direct-driven CMC.
#[derive(Debug, Clone, PartialEq)]
pub struct HandGeometry {
    /// Ordered thumb, index, middle, ring, pinky.
    pub digits: [DigitGeometry; 5],
    /// Transmission constants per digit, same order as `digits`.
    pub transmission: [TransmissionParams; 5],
    /// Direct drive ratio from servo 6 to the thumb CMC joint.
    pub cmc_gain: f64,
    pub workspace: Workspace,
}

/// Return-spring stiffness of the shipped model (N/m), calibrated so that
/// ignoring tendon elasticity mispredicts the index DIP joint by 1.15 deg on
/// average over a full flexion sweep. See `plant::fit_transmission`.
pub const DEFAULT_SPRING_STIFFNESS: f64 = 135.498046875;

/// Tendon axial stiffness of the shipped model (N).
pub const DEFAULT_TENDON_STIFFNESS: f64 = 1000.0;

impl Default for HandGeometry {
    /// The shipped configuration, also available as `data/default_hand.json`.
    /// Link lengths and radii are plausible adult-hand values; they are
    /// design stand-ins, not measurements of a physical build.
    fn default() -> Self {
        let finger_guide = GuideGeometry {
            d1: 0.010,
            d2: 0.010,
            alpha: std::f64::consts::FRAC_PI_2,
        };
        let finger = |digit, path_lengths: [f64; 2]| DigitGeometry {
            digit,
            joint_radii: vec![0.005, 0.004, 0.005],
            path_lengths: path_lengths.to_vec(),
            guide: finger_guide,
            servo_pulley_radius: 0.005,
            driven_joint_index: 2,
            radius_ratio: Some(vec![5.0, 4.0, 5.0]),
        };
        let thumb = DigitGeometry {
            digit: Digit::Thumb,
            joint_radii: vec![0.005, 0.004],
            path_lengths: vec![0.040],
            guide: GuideGeometry {
                d1: 0.009,
                d2: 0.011,
                alpha: 1.45,
            },
            servo_pulley_radius: 0.005,
            driven_joint_index: 1,
            radius_ratio: Some(vec![5.0, 4.0]),
        };
        let transmission = TransmissionParams {
            k_s: DEFAULT_SPRING_STIFFNESS,
            ea: DEFAULT_TENDON_STIFFNESS,
        };
        HandGeometry {
            digits: [
                thumb,
                finger(Digit::Index, [0.030, 0.045]),
                finger(Digit::Middle, [0.032, 0.047]),
                finger(Digit::Ring, [0.029, 0.044]),
                finger(Digit::Pinky, [0.026, 0.040]),
            ],
            transmission: [transmission; 5],
            cmc_gain: 1.0,
            workspace: Workspace::default(),
        }
    }
}

impl HandGeometry {
    pub fn digit(&self, digit: Digit) -> &DigitGeometry {
        &self.digits[digit as usize]
    }

    pub fn transmission(&self, digit: Digit) -> &TransmissionParams {
        &self.transmission[digit as usize]
    }

    /// Same geometry with every digit's transmission replaced.
    pub fn with_transmission(&self, params: TransmissionParams) -> Self {
        let mut g = self.clone();
        g.transmission = [params; 5];
        g
    }

    /// Load and fully validate a geometry file.
    pub fn load(path: impl AsRef<Path>) -> Result<Self, HandError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| HandError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text).map_err(|e| match e {
            HandError::Parse { source, .. } => HandError::Parse {
                path: path.to_path_buf(),
                source,
            },
            other => other,
        })
    }

    /// Parse and fully validate a geometry document.
    pub fn from_json(text: &str) -> Result<Self, HandError> {
        let file: HandFile = serde_json::from_str(text).map_err(|source| HandError::Parse {
            path: "<inline>".into(),
            source,
        })?;
        let geometry = file.into_geometry()?;
        let violations = geometry.validate();
        if violations.is_empty() {
            Ok(geometry)
        } else {
            Err(HandError::InvalidGeometry { violations })
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&HandFile::from_geometry(self))
            .expect("geometry serialization cannot fail");
        out.push('\n');
        out
    }

    /// Check every structural invariant; an empty list means the geometry is
    /// usable. Paths in the violations mirror the JSON document layout.
    pub fn validate(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        for (i, dg) in self.digits.iter().enumerate() {
            let base = format!("digits[{i}]");
            let expected = Digit::ALL[i];
            if dg.digit != expected {
                v.push(Violation::new(
                    format!("{base}.name"),
                    format!("expected '{}', found '{}'", expected, dg.digit),
                ));
            }
            let want_joints = expected.joints().len();
            if dg.joint_radii.len() != want_joints {
                v.push(Violation::new(
                    format!("{base}.joint_radii_m"),
                    format!("{} needs {} entries, found {}", expected, want_joints, dg.joint_radii.len()),
                ));
            }
            if dg.path_lengths.len() + 1 != dg.joint_radii.len() {
                v.push(Violation::new(
                    format!("{base}.path_lengths_m"),
                    format!(
                        "needs one entry per joint pair ({} for {} joints), found {}",
                        dg.joint_radii.len().saturating_sub(1),
                        dg.joint_radii.len(),
                        dg.path_lengths.len()
                    ),
                ));
            }
            for (k, r) in dg.joint_radii.iter().enumerate() {
                if !(r.is_finite() && *r > 0.0) {
                    v.push(Violation::new(
                        format!("{base}.joint_radii_m[{k}]"),
                        "must be finite and positive".to_string(),
                    ));
                }
            }
            for (k, l) in dg.path_lengths.iter().enumerate() {
                if !(l.is_finite() && *l > 0.0) {
                    v.push(Violation::new(
                        format!("{base}.path_lengths_m[{k}]"),
                        "must be finite and positive".to_string(),
                    ));
                }
            }
            if !(dg.guide.d1.is_finite() && dg.guide.d1 > 0.0) {
                v.push(Violation::new(
                    format!("{base}.guide.d1_m"),
                    "must be finite and positive".to_string(),
                ));
            }
            if !(dg.guide.d2.is_finite() && dg.guide.d2 > 0.0) {
                v.push(Violation::new(
                    format!("{base}.guide.d2_m"),
                    "must be finite and positive".to_string(),
                ));
            }
            if !(dg.guide.alpha.is_finite()
                && dg.guide.alpha > 0.0
                && dg.guide.alpha < std::f64::consts::PI)
            {
                v.push(Violation::new(
                    format!("{base}.guide.alpha_rad"),
                    "must lie strictly between 0 and pi".to_string(),
                ));
            }
            if !(dg.servo_pulley_radius.is_finite() && dg.servo_pulley_radius > 0.0) {
                v.push(Violation::new(
                    format!("{base}.servo_pulley_radius_m"),
                    "must be finite and positive".to_string(),
                ));
            }
            if dg.driven_joint_index + 1 != dg.joint_radii.len() {
                v.push(Violation::new(
                    format!("{base}.driven_joint_index"),
                    format!(
                        "must be the proximal-most joint ({}); the elasticity model \
                         propagates outward from the driven joint",
                        dg.joint_radii.len().saturating_sub(1)
                    ),
                ));
            }
            if let Some(ratio) = &dg.radius_ratio {
                if ratio.len() != dg.joint_radii.len() {
                    v.push(Violation::new(
                        format!("{base}.radius_ratio"),
                        format!(
                            "needs {} entries to match joint_radii_m, found {}",
                            dg.joint_radii.len(),
                            ratio.len()
                        ),
                    ));
                } else if ratio.iter().all(|x| x.is_finite() && *x > 0.0)
                    && !dg.joint_radii.is_empty()
                {
                    let scale = dg.joint_radii[0] / ratio[0];
                    for (k, (r, want)) in dg.joint_radii.iter().zip(ratio).enumerate().skip(1) {
                        let expected = want * scale;
                        if (r - expected).abs() > 1e-9 * expected.abs().max(1e-12) {
                            v.push(Violation::new(
                                format!("{base}.joint_radii_m[{k}]"),
                                format!(
                                    "breaks the declared radius ratio: expected {expected:.6e} m, \
                                     found {r:.6e} m"
                                ),
                            ));
                        }
                    }
                }
            }
            // A full driven-joint sweep must stay inside the guide opening.
            let driven = expected.driven_joint();
            if dg.driven_joint_index + 1 == dg.joint_radii.len()
                && self.workspace.q_max[driven] > dg.guide.alpha
            {
                v.push(Violation::new(
                    format!("{base}.guide.alpha_rad"),
                    format!(
                        "must be at least the driven joint's travel limit \
                         ({:.3} rad) for a full-range sweep",
                        self.workspace.q_max[driven]
                    ),
                ));
            }
        }
        for (i, t) in self.transmission.iter().enumerate() {
            let base = format!("digits[{i}].transmission");
            if !(t.k_s.is_finite() && t.k_s >= 0.0) {
                v.push(Violation::new(
                    format!("{base}.k_s_n_per_m"),
                    "must be finite and non-negative".to_string(),
                ));
            }
            if !(t.ea.is_finite() && t.ea > 0.0) {
                v.push(Violation::new(
                    format!("{base}.ea_n"),
                    "must be finite and positive".to_string(),
                ));
            }
        }
        if !(self.cmc_gain.is_finite() && self.cmc_gain > 0.0) {
            v.push(Violation::new(
                "cmc_gain".to_string(),
                "must be finite and positive".to_string(),
            ));
        }
        for i in 0..JOINT_COUNT {
            let (lo, hi) = (self.workspace.q_min[i], self.workspace.q_max[i]);
            if !(lo.is_finite() && hi.is_finite()) {
                v.push(Violation::new(
                    format!("workspace.q_min_rad[{i}]"),
                    "limits must be finite".to_string(),
                ));
            } else if lo > hi {
                v.push(Violation::new(
                    format!("workspace.q_min_rad[{i}]"),
                    format!("lower limit {lo} exceeds upper limit {hi}"),
                ));
            }
        }
        v
    }
}

/// Load and fully validate a geometry file.
pub fn load_geometry(path: impl AsRef<Path>) -> Result<HandGeometry, HandError> {
    HandGeometry::load(path)
}

/// Check every structural invariant of an already-built geometry.
pub fn validate_geometry(geometry: &HandGeometry) -> Vec<Violation> {
    geometry.validate()
}

/// One failed structural invariant, with the JSON path of the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: String,
    pub message: String,
}

impl Violation {
    pub fn new(path: String, message: String) -> Self {
        Violation { path, message }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

// File-layer representation. Kept separate from the domain types so the JSON
// document can nest transmission under each digit and carry digit names.

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HandFile {
    digits: Vec<DigitFile>,
    cmc_gain: f64,
    workspace: Workspace,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DigitFile {
    name: String,
    joint_radii_m: Vec<f64>,
    path_lengths_m: Vec<f64>,
    guide: GuideGeometry,
    servo_pulley_radius_m: f64,
    driven_joint_index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    radius_ratio: Option<Vec<f64>>,
    transmission: TransmissionParams,
}

impl HandFile {
    fn into_geometry(self) -> Result<HandGeometry, HandError> {
        let mut violations = Vec::new();
        if self.digits.len() != 5 {
            violations.push(Violation::new(
                "digits".to_string(),
                format!("expected 5 digit records, found {}", self.digits.len()),
            ));
            return Err(HandError::InvalidGeometry { violations });
        }
        let mut digits = Vec::with_capacity(5);
        let mut transmission = Vec::with_capacity(5);
        for (i, df) in self.digits.into_iter().enumerate() {
            let expected = Digit::ALL[i];
            if df.name != expected.name() {
                violations.push(Violation::new(
                    format!("digits[{i}].name"),
                    format!("expected '{}', found '{}'", expected.name(), df.name),
                ));
            }
            transmission.push(df.transmission);
            digits.push(DigitGeometry {
                digit: expected,
                joint_radii: df.joint_radii_m,
                path_lengths: df.path_lengths_m,
                guide: df.guide,
                servo_pulley_radius: df.servo_pulley_radius_m,
                driven_joint_index: df.driven_joint_index,
                radius_ratio: df.radius_ratio,
            });
        }
        if !violations.is_empty() {
            return Err(HandError::InvalidGeometry { violations });
        }
        Ok(HandGeometry {
            digits: digits.try_into().expect("checked length"),
            transmission: transmission.try_into().expect("checked length"),
            cmc_gain: self.cmc_gain,
            workspace: self.workspace,
        })
    }

    fn from_geometry(g: &HandGeometry) -> Self {
        HandFile {
            digits: g
                .digits
                .iter()
                .zip(&g.transmission)
                .map(|(dg, t)| DigitFile {
                    name: dg.digit.name().to_string(),
                    joint_radii_m: dg.joint_radii.clone(),
                    path_lengths_m: dg.path_lengths.clone(),
                    guide: dg.guide,
                    servo_pulley_radius_m: dg.servo_pulley_radius,
                    driven_joint_index: dg.driven_joint_index,
                    radius_ratio: dg.radius_ratio.clone(),
                    transmission: *t,
                })
                .collect(),
            cmc_gain: g.cmc_gain,
            workspace: g.workspace.clone(),
        }
    }
}

/// The shipped configuration document; parses to `HandGeometry::default()`.
pub const DEFAULT_HAND_JSON: &str = include_str!("../data/default_hand.json");
