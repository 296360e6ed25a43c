//! Sweep scoring and on-disk formats.
//!
//! A sweep is persisted as CSV with one row per (sample, joint) pair so it
//! can be inspected with ordinary tooling; the report summarises per-joint
//! model errors as JSON. Joint and servo indices are 1-based in both formats.

use std::io;

use serde::{Deserialize, Serialize};

use crate::error::HandError;
use crate::geometry::{joint, JOINT_COUNT};
use crate::kinematics::JointVector;
use crate::plant::{SweepRecord, SweepSample};

/// Residual series and summary errors for one joint.
#[derive(Debug, Clone, PartialEq)]
pub struct JointReport {
    /// 0-based joint index.
    pub joint: usize,
    pub n_samples: usize,
    /// Measured minus rigid-model prediction, per sample (rad).
    pub residual_ideal_rad: Vec<f64>,
    /// Measured minus elastic-model prediction, per sample (rad).
    pub residual_comp_rad: Vec<f64>,
    pub mae_ideal_deg: f64,
    pub mae_comp_deg: f64,
}

/// Per-joint scoring of one sweep, restricted to the joints the elastic
/// model is meant to improve (thumb IP plus every finger DIP and PIP).
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    /// 0-based swept servo index.
    pub servo: usize,
    pub joints: Vec<JointReport>,
}

fn mae_deg(residuals: &[f64]) -> f64 {
    let total: f64 = residuals.iter().map(|r| r.abs()).sum();
    (total / residuals.len() as f64).to_degrees()
}

/// Score a sweep: residual series and mean absolute errors, in degrees, of
/// both models against the recorded measurements.
pub fn compute_report(record: &SweepRecord) -> SweepReport {
    let joints = joint::TARGET_JOINTS
        .iter()
        .map(|&j| {
            let residual_ideal_rad: Vec<f64> = record
                .samples
                .iter()
                .map(|s| s.measured[j] - s.ideal[j])
                .collect();
            let residual_comp_rad: Vec<f64> = record
                .samples
                .iter()
                .map(|s| s.measured[j] - s.compensated[j])
                .collect();
            JointReport {
                joint: j,
                n_samples: record.samples.len(),
                mae_ideal_deg: mae_deg(&residual_ideal_rad),
                mae_comp_deg: mae_deg(&residual_comp_rad),
                residual_ideal_rad,
                residual_comp_rad,
            }
        })
        .collect();
    SweepReport {
        servo: record.servo,
        joints,
    }
}

/// Exact column set of the sweep CSV, in order.
pub const SWEEP_CSV_HEADER: &str =
    "servo_index,u_rad,joint_index,q_meas_rad,q_ideal_rad,q_comp_rad,residual_ideal_deg,residual_comp_deg";

#[derive(Debug, Serialize, Deserialize)]
struct SweepCsvRow {
    servo_index: usize,
    u_rad: f64,
    joint_index: usize,
    q_meas_rad: f64,
    q_ideal_rad: f64,
    q_comp_rad: f64,
    residual_ideal_deg: f64,
    residual_comp_deg: f64,
}

fn csv_error(err: csv::Error) -> HandError {
    HandError::SweepFormat {
        message: err.to_string(),
    }
}

/// Write a sweep as CSV: 15 rows per sample, one per joint, indices 1-based.
pub fn write_sweep_csv<W: io::Write>(record: &SweepRecord, writer: W) -> Result<(), HandError> {
    let mut out = csv::Writer::from_writer(writer);
    for sample in &record.samples {
        for j in 0..JOINT_COUNT {
            out.serialize(SweepCsvRow {
                servo_index: record.servo + 1,
                u_rad: sample.servo_angle,
                joint_index: j + 1,
                q_meas_rad: sample.measured[j],
                q_ideal_rad: sample.ideal[j],
                q_comp_rad: sample.compensated[j],
                residual_ideal_deg: (sample.measured[j] - sample.ideal[j]).to_degrees(),
                residual_comp_deg: (sample.measured[j] - sample.compensated[j]).to_degrees(),
            })
            .map_err(csv_error)?;
        }
    }
    out.flush().map_err(|err| HandError::SweepFormat {
        message: err.to_string(),
    })?;
    Ok(())
}

/// CSV text for a sweep; the writer is deterministic, so equal records give
/// byte-identical output.
pub fn sweep_csv_string(record: &SweepRecord) -> String {
    let mut buf = Vec::new();
    write_sweep_csv(record, &mut buf).expect("in-memory write cannot fail");
    String::from_utf8(buf).expect("csv output is ASCII")
}

/// Parse a sweep CSV back into a record. The angle columns round-trip
/// exactly; the derived residual columns are validated for presence only.
pub fn read_sweep_csv<R: io::Read>(reader: R) -> Result<SweepRecord, HandError> {
    let mut input = csv::Reader::from_reader(reader);
    {
        let headers = input.headers().map_err(csv_error)?;
        let expected: Vec<&str> = SWEEP_CSV_HEADER.split(',').collect();
        if headers.iter().collect::<Vec<_>>() != expected {
            return Err(HandError::SweepFormat {
                message: format!("unexpected header {:?}", headers),
            });
        }
    }

    let mut servo: Option<usize> = None;
    let mut samples = Vec::new();
    let mut pending: Option<SweepSample> = None;
    let mut next_joint = 0usize;
    for (line, row) in input.deserialize().enumerate() {
        let row: SweepCsvRow = row.map_err(csv_error)?;
        let bad = |message: String| HandError::SweepFormat {
            message: format!("row {}: {message}", line + 2),
        };
        if !(1..=JOINT_COUNT).contains(&row.joint_index) {
            return Err(bad(format!("joint_index {} out of range", row.joint_index)));
        }
        match servo {
            None => {
                if row.servo_index < 1 {
                    return Err(bad(format!("servo_index {} out of range", row.servo_index)));
                }
                servo = Some(row.servo_index - 1);
            }
            Some(s) => {
                if row.servo_index != s + 1 {
                    return Err(bad(format!(
                        "servo_index changed from {} to {}",
                        s + 1,
                        row.servo_index
                    )));
                }
            }
        }
        if row.joint_index != next_joint + 1 {
            return Err(bad(format!(
                "expected joint_index {}, found {}",
                next_joint + 1,
                row.joint_index
            )));
        }
        let sample = pending.get_or_insert_with(|| SweepSample {
            servo_angle: row.u_rad,
            measured: JointVector::zeros(),
            ideal: JointVector::zeros(),
            compensated: JointVector::zeros(),
        });
        if row.u_rad != sample.servo_angle {
            return Err(bad(format!(
                "u_rad changed mid-sample from {} to {}",
                sample.servo_angle, row.u_rad
            )));
        }
        sample.measured[next_joint] = row.q_meas_rad;
        sample.ideal[next_joint] = row.q_ideal_rad;
        sample.compensated[next_joint] = row.q_comp_rad;
        next_joint += 1;
        if next_joint == JOINT_COUNT {
            samples.push(pending.take().expect("sample in progress"));
            next_joint = 0;
        }
    }
    if next_joint != 0 {
        return Err(HandError::SweepFormat {
            message: format!("truncated sample: {next_joint} of {JOINT_COUNT} joints present"),
        });
    }
    let servo = servo.ok_or_else(|| HandError::SweepFormat {
        message: "no data rows".to_string(),
    })?;
    Ok(SweepRecord { servo, samples })
}

#[derive(Serialize)]
struct ReportJointDoc {
    joint_index: usize,
    label: &'static str,
    mae_ideal_deg: f64,
    mae_comp_deg: f64,
    n_samples: usize,
}

#[derive(Serialize)]
struct ReportDoc {
    servo_index: usize,
    joints: Vec<ReportJointDoc>,
}

/// Report summary as pretty-printed JSON (1-based indices, trailing newline).
pub fn report_json(report: &SweepReport) -> String {
    let doc = ReportDoc {
        servo_index: report.servo + 1,
        joints: report
            .joints
            .iter()
            .map(|j| ReportJointDoc {
                joint_index: j.joint + 1,
                label: joint::label(j.joint),
                mae_ideal_deg: j.mae_ideal_deg,
                mae_comp_deg: j.mae_comp_deg,
                n_samples: j.n_samples,
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}
