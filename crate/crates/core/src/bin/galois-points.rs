use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use galois_points::runner::{
    load_scenario, parse_curve_arg, parse_field_arg, parse_qs_arg, run_loaded, CandidateSpec, FermatTarget,
    RunOptions, Scenario, ScanSpec, ScenarioFile, DEFAULT_EXT_BOUND, SCENARIO_VERSION,
};
use galois_points::{geometry::DEFAULT_GROUP_CAP, Error, Result};

#[derive(Parser)]
#[command(version, about = "Exact verification of Galois points on plane curves over finite fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Report path (written atomically).
    #[arg(long)]
    out: PathBuf,
    /// Largest extension degree over the base field a run may use.
    #[arg(long, default_value_t = DEFAULT_EXT_BOUND)]
    ext_bound: u32,
    /// Largest group a closure may reach.
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    group_cap: usize,
    /// Overrides every seed in the scenario.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run any scenario file.
    Run {
        #[arg(long)]
        scenario: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Galois-point census of a curve.
    Scan {
        #[arg(long, conflicts_with_all = ["curve", "field"])]
        scenario: Option<PathBuf>,
        /// `fermat:D` or `hermitian:Q`.
        #[arg(long, requires = "field")]
        curve: Option<String>,
        /// `P` or `P^N`.
        #[arg(long, requires = "curve")]
        field: Option<String>,
        /// all, on-curve or off-curve.
        #[arg(long, default_value = "all")]
        candidates: String,
        #[command(flatten)]
        common: Common,
    },
    /// Orbit condition for three Galois points.
    FermatCheck {
        #[arg(long, conflicts_with_all = ["curve", "field", "hermitian_model"])]
        scenario: Option<PathBuf>,
        /// `fermat:D` or `hermitian:Q`; centers are the coordinate vertices.
        #[arg(long, requires = "field", conflicts_with = "hermitian_model")]
        curve: Option<String>,
        #[arg(long, requires = "curve")]
        field: Option<String>,
        /// `Q:S`, the plane model of the Hermitian scenario.
        #[arg(long)]
        hermitian_model: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn wrap(scenario: Scenario) -> ScenarioFile {
    ScenarioFile { version: SCENARIO_VERSION, scenario }
}

fn expect_kind(file: Result<ScenarioFile>, want: &str, ok: fn(&Scenario) -> bool) -> Result<ScenarioFile> {
    let f = file?;
    if ok(&f.scenario) {
        Ok(f)
    } else {
        Err(Error::Scenario(format!("scenario is not a {want} scenario")))
    }
}

fn missing(what: &str) -> Error {
    Error::Scenario(format!("give --scenario or {what}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (file, common) = match cli.cmd {
        Cmd::Run { scenario, common } => (load_scenario(&scenario), common),
        Cmd::Scan { scenario, curve, field, candidates, common } => {
            let seed = common.seed.unwrap_or(0);
            let file = match (scenario, curve, field) {
                (Some(p), _, _) => expect_kind(load_scenario(&p), "scan", |s| matches!(s, Scenario::Scan(_))),
                (None, Some(c), Some(f)) => (|| {
                    let candidates = match candidates.as_str() {
                        "all" => CandidateSpec::All,
                        "on-curve" => CandidateSpec::OnCurve,
                        "off-curve" => CandidateSpec::OffCurve,
                        o => return Err(Error::Parse(format!("unknown candidate set `{o}`"))),
                    };
                    let spec =
                        ScanSpec { field: parse_field_arg(&f, seed)?, curve: parse_curve_arg(&c)?, candidates, expect: None };
                    Ok(wrap(Scenario::Scan(spec)))
                })(),
                _ => Err(missing("--curve and --field")),
            };
            (file, common)
        }
        Cmd::FermatCheck { scenario, curve, field, hermitian_model, common } => {
            let seed = common.seed.unwrap_or(0);
            let file = match (scenario, curve, field, hermitian_model) {
                (Some(p), ..) => {
                    expect_kind(load_scenario(&p), "fermat-check", |s| matches!(s, Scenario::FermatCheck { .. }))
                }
                (None, Some(c), Some(f), None) => (|| {
                    let target = FermatTarget::Plane { field: parse_field_arg(&f, seed)?, curve: parse_curve_arg(&c)?, centers: None };
                    Ok(wrap(Scenario::FermatCheck { target }))
                })(),
                (None, None, None, Some(m)) => parse_qs_arg(&m)
                    .map(|(q, s)| wrap(Scenario::FermatCheck { target: FermatTarget::HermitianModel { q, s, seed } })),
                _ => Err(missing("--curve and --field, or --hermitian-model")),
            };
            (file, common)
        }
    };
    let opts = RunOptions { ext_bound: common.ext_bound, group_cap: common.group_cap, seed: common.seed };
    match run_loaded(file, &common.out, &opts) {
        Ok(outcome) => {
            eprintln!("{}: {}", common.out.display(), serde_json::to_value(outcome).unwrap().as_str().unwrap_or("?"));
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
