//! Command-line front end for the tendon-hand stack: forward/inverse
//! evaluation, plant sweeps, sweep reports, geometry validation, pose
//! execution, and stiffness calibration.
//!
//! Angles cross this boundary in radians unless `--deg` is given; joint and
//! servo numbering is 1-based everywhere a human sees it. Exit codes: 0
//! success, 1 usage or I/O, 2 validation failure, 3 infeasible command.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tendon_hand::control::{plan_to_pose, ControlTarget, PlanResult};
use tendon_hand::geometry::{joint, HandGeometry, JOINT_COUNT, SERVO_COUNT};
use tendon_hand::kinematics::{forward_ideal, JointVector, ServoVector};
use tendon_hand::plant::{fit_transmission, run_sweep, PlantConfig, PlantPhysics};
use tendon_hand::poses::{builtin_pose_library, load_pose_library, PoseCategory, PoseLibrary};
use tendon_hand::report::{compute_report, read_sweep_csv, report_json, write_sweep_csv};
use tendon_hand::{forward_compensated, load_geometry, resolve_pose, HandError};

#[derive(Parser)]
#[command(
    name = "tendon-hand",
    version,
    about = "Kinematics, elasticity compensation, and simulation tools for a \
             6-servo, 15-joint tendon-driven hand"
)]
struct Cli {
    /// Geometry file; defaults to $TENDON_HAND_CONFIG, then the built-in hand
    #[arg(long, global = true, env = "TENDON_HAND_CONFIG", value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Joint angles a servo command produces
    Fk(FkArgs),
    /// Servo command for a target posture, with clipping and residual
    Ik(IkArgs),
    /// Sweep one servo on the synthetic plant and record samples as CSV
    Sweep(SweepArgs),
    /// Score a recorded sweep: per-joint model errors
    Report(ReportArgs),
    /// Check the geometry against the model's structural rules
    Validate,
    /// List, inspect, or execute named pose presets
    Pose(PoseArgs),
    /// Calibrate the return-spring stiffness to a target rigid-model error
    Fit(FitArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    /// Rigid tendons, pure coupling ratios
    Ideal,
    /// Elastic tendons, sag included
    Comp,
}

#[derive(Args)]
struct FkArgs {
    /// Six comma-separated servo angles
    #[arg(long, value_name = "U1,..,U6")]
    u: String,
    #[arg(long, value_enum, default_value_t = Model::Comp)]
    model: Model,
    /// Accept and print degrees instead of radians
    #[arg(long)]
    deg: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("target").required(true).args(["q", "pose_file"]))]
struct IkArgs {
    /// Fifteen comma-separated joint angles
    #[arg(long, value_name = "Q1,..,Q15")]
    q: Option<String>,
    /// JSON file holding an array of fifteen joint angles
    #[arg(long, value_name = "PATH")]
    pose_file: Option<PathBuf>,
    /// Fifteen comma-separated per-joint weights (default: all 1)
    #[arg(long, value_name = "W1,..,W15")]
    weights: Option<String>,
    /// Accept and print degrees instead of radians
    #[arg(long)]
    deg: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlantModel {
    Ideal,
    Compensated,
}

#[derive(Args)]
struct SweepArgs {
    /// Servo to sweep, 1-based
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=SERVO_COUNT as i64))]
    servo: u8,
    /// Number of samples, endpoints included
    #[arg(long, default_value_t = 100)]
    k: usize,
    #[arg(long, value_enum, default_value_t = PlantModel::Compensated)]
    plant: PlantModel,
    /// Measurement noise standard deviation (deg)
    #[arg(long, default_value_t = 0.0)]
    noise_sigma_deg: f64,
    /// First-order servo lag coefficient in [0, 1)
    #[arg(long, default_value_t = 0.0)]
    servo_lag: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output CSV path; stdout when omitted
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    /// Sweep CSV produced by `sweep`
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Also export the per-sample residual series as CSV
    #[arg(long, value_name = "PATH")]
    residuals: Option<PathBuf>,
}

#[derive(Args)]
struct PoseArgs {
    /// Pose file to use instead of the built-in preset library
    #[arg(long, value_name = "PATH")]
    library: Option<PathBuf>,
    #[command(subcommand)]
    action: PoseAction,
}

#[derive(Subcommand)]
enum PoseAction {
    /// Names, categories, and descriptions of the available presets
    List {
        /// Restrict to one category
        #[arg(long)]
        category: Option<String>,
    },
    /// Joint targets of one preset
    Show { name: String },
    /// Plan and print the servo command for one preset
    Run {
        name: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
}

#[derive(Args)]
struct FitArgs {
    /// Index-DIP mean error (deg) the rigid model should show
    #[arg(long)]
    target_mae: f64,
    /// Sweep samples per calibration evaluation
    #[arg(long, default_value_t = 100)]
    k: usize,
    /// Write the geometry with the fitted transmission to this path
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

enum Failure {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Hand(HandError),
    /// Message already printed; just exit with this code.
    Silent(u8),
}

impl From<HandError> for Failure {
    fn from(err: HandError) -> Self {
        Failure::Hand(err)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "{msg}"),
            Failure::Io(path, err) => write!(f, "{}: {err}", path.display()),
            Failure::Hand(err) => write!(f, "{err}"),
            Failure::Silent(_) => Ok(()),
        }
    }
}

fn exit_code(failure: &Failure) -> u8 {
    match failure {
        Failure::Usage(_) | Failure::Io(..) => 1,
        Failure::Silent(code) => *code,
        Failure::Hand(err) => match err {
            HandError::InvalidGeometry { .. }
            | HandError::Parse { .. }
            | HandError::PoseFormat { .. }
            | HandError::SweepFormat { .. }
            | HandError::UnknownPose { .. }
            | HandError::OffManifold { .. }
            | HandError::FitOutOfRange { .. } => 2,
            HandError::Infeasible { .. }
            | HandError::DrivenAngle { .. }
            | HandError::DegenerateCoupling { .. }
            | HandError::EmptyDrivenRange { .. }
            | HandError::DegenerateSweep { .. } => 3,
            HandError::Io { .. } => 1,
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if !matches!(failure, Failure::Silent(_)) {
                eprintln!("error: {failure}");
            }
            ExitCode::from(exit_code(&failure))
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Fk(args) => cmd_fk(&cli.config, args),
        Command::Ik(args) => cmd_ik(&cli.config, args),
        Command::Sweep(args) => cmd_sweep(&cli.config, args),
        Command::Report(args) => cmd_report(args),
        Command::Validate => cmd_validate(&cli.config),
        Command::Pose(args) => cmd_pose(&cli.config, args),
        Command::Fit(args) => cmd_fit(&cli.config, args),
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<HandGeometry, Failure> {
    match path {
        Some(p) => Ok(load_geometry(p)?),
        None => Ok(HandGeometry::default()),
    }
}

fn parse_numbers(text: &str, expected: usize, what: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != expected {
        return Err(Failure::Usage(format!(
            "{what} needs {expected} comma-separated values, got {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<f64>()
                .map_err(|_| Failure::Usage(format!("{what}: '{p}' is not a number")))
        })
        .collect()
}

fn unit_name(deg: bool) -> &'static str {
    if deg {
        "deg"
    } else {
        "rad"
    }
}

fn from_unit(value: f64, deg: bool) -> f64 {
    if deg {
        value.to_radians()
    } else {
        value
    }
}

fn to_unit(value: f64, deg: bool) -> f64 {
    if deg {
        value.to_degrees()
    } else {
        value
    }
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|err| Failure::Io(path.clone(), err))
}

fn cmd_fk(config: &Option<PathBuf>, args: FkArgs) -> Result<(), Failure> {
    let g = load_config(config)?;
    let values = parse_numbers(&args.u, SERVO_COUNT, "--u")?;
    let mut u = ServoVector::zeros();
    for (j, v) in values.iter().enumerate() {
        u[j] = from_unit(*v, args.deg);
    }
    let (model_name, q) = match args.model {
        Model::Ideal => ("ideal", forward_ideal(&g, &u)?),
        Model::Comp => ("comp", forward_compensated(&g, &u)?),
    };
    match args.format {
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "unit": unit_name(args.deg),
                "model": model_name,
                "u": (0..SERVO_COUNT).map(|j| to_unit(u[j], args.deg)).collect::<Vec<_>>(),
                "q": (0..JOINT_COUNT).map(|i| to_unit(q[i], args.deg)).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        OutputFormat::Table => {
            println!("model {model_name}, angles in {}", unit_name(args.deg));
            for i in 0..JOINT_COUNT {
                println!(
                    "q{:<3} {:<12} {:>14.9}",
                    i + 1,
                    joint::label(i),
                    to_unit(q[i], args.deg)
                );
            }
        }
    }
    Ok(())
}

fn plan_output(plan: &PlanResult, deg: bool, format: OutputFormat) {
    let clipped: Vec<String> = plan
        .clipped_joints
        .iter()
        .map(|&i| format!("q{}", i + 1))
        .collect();
    let residual_max = (0..JOINT_COUNT)
        .map(|i| plan.residual[i].abs())
        .fold(0.0, f64::max);
    match format {
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "unit": unit_name(deg),
                "u": (0..SERVO_COUNT).map(|j| to_unit(plan.command[j], deg)).collect::<Vec<_>>(),
                "clipped_joints": clipped,
                "achieved": (0..JOINT_COUNT).map(|i| to_unit(plan.achieved[i], deg)).collect::<Vec<_>>(),
                "residual": (0..JOINT_COUNT).map(|i| to_unit(plan.residual[i], deg)).collect::<Vec<_>>(),
                "residual_max": to_unit(residual_max, deg),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        OutputFormat::Table => {
            println!("angles in {}", unit_name(deg));
            if clipped.is_empty() {
                println!("clipped: none");
            } else {
                println!("clipped: {}", clipped.join(" "));
            }
            for j in 0..SERVO_COUNT {
                println!("u{:<3} {:>14.9}", j + 1, to_unit(plan.command[j], deg));
            }
            println!("residual max {:.3e} {}", to_unit(residual_max, deg), unit_name(deg));
        }
    }
}

fn cmd_ik(config: &Option<PathBuf>, args: IkArgs) -> Result<(), Failure> {
    let g = load_config(config)?;
    let values = if let Some(text) = &args.q {
        parse_numbers(text, JOINT_COUNT, "--q")?
    } else {
        let path = args.pose_file.as_ref().expect("clap enforces the group");
        let text =
            fs::read_to_string(path).map_err(|err| Failure::Io(path.clone(), err))?;
        let parsed: Vec<f64> = serde_json::from_str(&text).map_err(|err| {
            Failure::Usage(format!("{}: {err}", path.display()))
        })?;
        if parsed.len() != JOINT_COUNT {
            return Err(Failure::Usage(format!(
                "{}: expected {JOINT_COUNT} joint angles, found {}",
                path.display(),
                parsed.len()
            )));
        }
        parsed
    };
    let mut desired = JointVector::zeros();
    for (i, v) in values.iter().enumerate() {
        desired[i] = from_unit(*v, args.deg);
    }
    let mut target = ControlTarget::new(desired);
    if let Some(text) = &args.weights {
        let weights = parse_numbers(text, JOINT_COUNT, "--weights")?;
        for (i, w) in weights.iter().enumerate() {
            if *w < 0.0 {
                return Err(Failure::Usage(format!("--weights: w{} is negative", i + 1)));
            }
            target.weights[i] = *w;
        }
    }
    let plan = plan_to_pose(&g, &target)?;
    plan_output(&plan, args.deg, args.format);
    Ok(())
}

fn cmd_sweep(config: &Option<PathBuf>, args: SweepArgs) -> Result<(), Failure> {
    let g = load_config(config)?;
    if !(0.0..1.0).contains(&args.servo_lag) {
        return Err(Failure::Usage(format!(
            "--servo-lag must be in [0, 1), got {}",
            args.servo_lag
        )));
    }
    if args.noise_sigma_deg < 0.0 {
        return Err(Failure::Usage("--noise-sigma-deg must be >= 0".into()));
    }
    let plant = PlantConfig {
        physics: match args.plant {
            PlantModel::Ideal => PlantPhysics::Ideal,
            PlantModel::Compensated => PlantPhysics::Compensated,
        },
        noise_sigma: args.noise_sigma_deg.to_radians(),
        servo_lag: args.servo_lag,
        seed: args.seed,
    };
    let record = run_sweep(&g, &plant, usize::from(args.servo) - 1, args.k)?;
    match &args.out {
        Some(path) => {
            let file = fs::File::create(path).map_err(|err| Failure::Io(path.clone(), err))?;
            write_sweep_csv(&record, file)?;
            println!(
                "wrote {} samples for servo {} to {}",
                record.samples.len(),
                args.servo,
                path.display()
            );
        }
        None => {
            let stdout = std::io::stdout();
            write_sweep_csv(&record, stdout.lock())?;
        }
    }
    Ok(())
}

fn cmd_report(args: ReportArgs) -> Result<(), Failure> {
    let file = fs::File::open(&args.input).map_err(|err| Failure::Io(args.input.clone(), err))?;
    let record = read_sweep_csv(file)?;
    let report = compute_report(&record);
    match args.format {
        OutputFormat::Json => print!("{}", report_json(&report)),
        OutputFormat::Table => {
            println!(
                "servo {}, {} samples per joint",
                report.servo + 1,
                report.joints.first().map_or(0, |j| j.n_samples)
            );
            println!("{:<5} {:<12} {:>14} {:>14}", "joint", "label", "mae_ideal_deg", "mae_comp_deg");
            for j in &report.joints {
                println!(
                    "q{:<4} {:<12} {:>14.6} {:>14.6}",
                    j.joint + 1,
                    joint::label(j.joint),
                    j.mae_ideal_deg,
                    j.mae_comp_deg
                );
            }
        }
    }
    if let Some(path) = &args.residuals {
        let mut out = Vec::new();
        writeln!(
            out,
            "joint_index,label,sample_index,residual_ideal_deg,residual_comp_deg"
        )
        .unwrap();
        for j in &report.joints {
            for (s, (ri, rc)) in j
                .residual_ideal_rad
                .iter()
                .zip(&j.residual_comp_rad)
                .enumerate()
            {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    j.joint + 1,
                    joint::label(j.joint),
                    s,
                    ri.to_degrees(),
                    rc.to_degrees()
                )
                .unwrap();
            }
        }
        write_file(path, &out)?;
        println!("wrote residual series to {}", path.display());
    }
    Ok(())
}

fn cmd_validate(config: &Option<PathBuf>) -> Result<(), Failure> {
    match load_config(config) {
        Ok(_) => {
            println!("0 violations");
            Ok(())
        }
        Err(Failure::Hand(HandError::InvalidGeometry { violations })) => {
            for v in &violations {
                println!("{v}");
            }
            println!("{} violations", violations.len());
            Err(Failure::Silent(2))
        }
        Err(other) => Err(other),
    }
}

fn load_library(
    g: &HandGeometry,
    library: &Option<PathBuf>,
) -> Result<PoseLibrary, Failure> {
    match library {
        Some(path) => Ok(load_pose_library(path, &g.workspace)?),
        None => Ok(builtin_pose_library(g)),
    }
}

fn cmd_pose(config: &Option<PathBuf>, args: PoseArgs) -> Result<(), Failure> {
    let g = load_config(config)?;
    let library = load_library(&g, &args.library)?;
    match args.action {
        PoseAction::List { category } => {
            let filter = match &category {
                None => None,
                Some(text) => Some(
                    PoseCategory::ALL
                        .iter()
                        .copied()
                        .find(|c| c.as_str() == text)
                        .ok_or_else(|| {
                            Failure::Usage(format!(
                                "unknown category '{text}'; expected one of {}",
                                PoseCategory::ALL.map(|c| c.as_str()).join(", ")
                            ))
                        })?,
                ),
            };
            for preset in &library.presets {
                if filter.is_some_and(|c| c != preset.category) {
                    continue;
                }
                println!(
                    "{:<24} {:<16} {}",
                    preset.name, preset.category, preset.description
                );
            }
            if !library.violations.is_empty() {
                println!("{} workspace violations; see `pose show`", library.violations.len());
            }
        }
        PoseAction::Show { name } => {
            let preset = library.get(&name)?;
            println!("{} ({})", preset.name, preset.category);
            println!("{}", preset.description);
            for i in 0..JOINT_COUNT {
                println!("q{:<3} {:<12} {:>14.9}", i + 1, joint::label(i), preset.q_d[i]);
            }
            for v in library.violations.iter().filter(|v| v.preset == preset.name) {
                println!("warning: {v}");
            }
        }
        PoseAction::Run { name, format } => {
            let preset = library.get(&name)?;
            let plan = resolve_pose(&g, preset)?;
            plan_output(&plan, false, format);
        }
    }
    Ok(())
}

fn cmd_fit(config: &Option<PathBuf>, args: FitArgs) -> Result<(), Failure> {
    let g = load_config(config)?;
    let outcome = fit_transmission(&g, args.target_mae, args.k)?;
    match args.format {
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "k_s_n_per_m": outcome.params.k_s,
                "ea_n": outcome.params.ea,
                "achieved_mae_deg": outcome.achieved_mae_deg,
                "iterations": outcome.iterations,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        OutputFormat::Table => {
            println!("k_s {:.9} N/m (EA {} N)", outcome.params.k_s, outcome.params.ea);
            println!(
                "verification mae {:.4} deg after {} bisection steps",
                outcome.achieved_mae_deg, outcome.iterations
            );
        }
    }
    if let Some(path) = &args.out {
        let fitted = g.with_transmission(outcome.params);
        write_file(path, fitted.to_json().as_bytes())?;
        println!("wrote fitted geometry to {}", path.display());
    }
    Ok(())
}
