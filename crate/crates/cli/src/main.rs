use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fataci_core::betti::resolve_fat_aci;
use fataci_core::kernel::{check_power_equality, FieldConfig, PowerReport};
use fataci_core::verify::{sweep_params, verify_against, InstanceReport};
use fataci_core::{normalize, AciParams, BettiTable, BiDegree, Error};

mod render;

use render::{instance_json, table_csv, TableJson};

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_BOX: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fataci",
    version,
    about = "Betti tables of fat almost complete intersections in P1 x P1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the predicted Betti table.
    Predict {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute the table with exact linear algebra and compare.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write one CSV row per swept instance to this file.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Fixed verification box instead of the default one.
        #[arg(long, num_args = 2, value_names = ["A", "B"], conflicts_with = "sweep")]
        bound: Vec<u32>,
        /// Add a cancelling pair to the prediction before comparing.
        #[arg(long, hide = true)]
        inject_corruption: bool,
    },
    /// Compare the ordinary and symbolic powers.
    Powers {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        sweep: SweepArgs,
        /// The exponent m in I^m and I^(m).
        #[arg(long, default_value_t = 2)]
        power: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// Row block widths.
    #[arg(long, num_args = 2, value_names = ["A1", "A2"])]
    alpha: Vec<u32>,
    /// Column block widths.
    #[arg(long, num_args = 2, value_names = ["B1", "B2"])]
    beta: Vec<u32>,
    /// Multiplicities of the three blocks.
    #[arg(long = "m", num_args = 3, value_names = ["M11", "M12", "M21"])]
    mults: Vec<u32>,
}

impl ParamArgs {
    fn params(&self) -> Result<AciParams, Failure> {
        if self.alpha.is_empty() || self.beta.is_empty() || self.mults.is_empty() {
            return Err(Failure(
                EXIT_USAGE,
                "--alpha, --beta and --m are required unless --sweep is given".into(),
            ));
        }
        Ok(AciParams::new(
            [self.alpha[0], self.alpha[1]],
            [self.beta[0], self.beta[1]],
            [self.mults[0], self.mults[1], self.mults[2]],
        )?)
    }
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long, env = "FATACI_PRIME", default_value_t = 32003)]
    prime: u32,
    /// 0 places the lines at 1, 2, 3, ...; other seeds draw them at random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl FieldArgs {
    fn config(&self) -> FieldConfig {
        FieldConfig::new(self.prime, self.seed)
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Run every normalized instance up to the given sizes.
    #[arg(long, conflicts_with_all = ["alpha", "beta", "mults"])]
    sweep: bool,
    #[arg(long, default_value_t = 2, requires = "sweep")]
    max_alpha: u32,
    #[arg(long, default_value_t = 3, requires = "sweep")]
    max_m: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// A failure with its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoxTooSmall { .. } => EXIT_BOX,
            Error::NotFree(_) | Error::EulerMismatch(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            // the reader went away; nothing left to report
            return Failure(0, String::new());
        }
        Failure(EXIT_USAGE, e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = io::stdout().lock();
    let result = match cli.command {
        Command::Predict { params, format } => predict(&mut out, &params, format),
        Command::Verify {
            params,
            field,
            sweep,
            format,
            csv,
            bound,
            inject_corruption,
        } => {
            let bound = (!bound.is_empty()).then(|| BiDegree::new(bound[0], bound[1]));
            verify(
                &mut out,
                &params,
                &field,
                &sweep,
                format,
                csv,
                bound,
                inject_corruption,
            )
        }
        Command::Powers {
            params,
            field,
            sweep,
            power,
            format,
        } => powers(&mut out, &params, &field, &sweep, power, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                let _ = out.flush();
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}

fn predict(out: &mut impl Write, args: &ParamArgs, format: Format) -> Result<u8, Failure> {
    let p = args.params()?;
    let table = resolve_fat_aci(&p);
    let record = normalize(&p).1;
    match format {
        Format::Text => write!(out, "{table}")?,
        Format::Json => {
            let json = TableJson::new(&table, record);
            writeln!(out, "{}", serde_json::to_string(&json).expect("plain data"))?;
        }
        Format::Csv => table_csv(out, &table)?,
    }
    Ok(0)
}

fn corrupt(table: &mut BettiTable) {
    let d = table.max_corner().shift(1, 1);
    table.beta1.insert(d, 1);
    table.beta2.insert(d, 1);
}

fn verify_one(
    p: &AciParams,
    cfg: &FieldConfig,
    bound: Option<BiDegree>,
    corrupted: bool,
) -> Result<InstanceReport, Error> {
    let mut predicted = resolve_fat_aci(p);
    if corrupted {
        corrupt(&mut predicted);
    }
    verify_against(p, predicted, cfg, bound)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    out: &mut impl Write,
    args: &ParamArgs,
    field: &FieldArgs,
    sweep: &SweepArgs,
    format: Format,
    csv_path: Option<PathBuf>,
    bound: Option<BiDegree>,
    corrupted: bool,
) -> Result<u8, Failure> {
    let cfg = field.config();
    cfg.field()?;
    if !sweep.sweep {
        let p = args.params()?;
        let r = verify_one(&p, &cfg, bound, corrupted)?;
        match format {
            Format::Json => writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&instance_json(&r)).expect("plain data")
            )?,
            Format::Text | Format::Csv => render::instance_text(out, &r)?,
        }
        return Ok(if r.passed() { 0 } else { EXIT_MISMATCH });
    }

    let mut rows = Vec::new();
    let (mut failed, mut box_errors) = (0, 0);
    for p in sweep_params(sweep.max_alpha, sweep.max_m) {
        let row = match verify_one(&p, &cfg, None, corrupted) {
            Ok(r) => {
                if !r.passed() {
                    failed += 1;
                }
                render::SweepRow::new(&p, if r.passed() { "pass" } else { "fail" }, r.millis)
            }
            Err(e @ Error::BoxTooSmall { .. }) => {
                box_errors += 1;
                eprintln!("{p}: {e}");
                render::SweepRow::new(&p, "box", 0)
            }
            Err(e) => {
                failed += 1;
                eprintln!("{p}: {e}");
                render::SweepRow::new(&p, "error", 0)
            }
        };
        rows.push(row);
    }
    if let Some(path) = csv_path {
        render::sweep_csv(std::fs::File::create(path)?, &rows)?;
    }
    match format {
        Format::Csv => render::sweep_csv(&mut *out, &rows)?,
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&rows).expect("plain data")
        )?,
        Format::Text => {
            for r in rows.iter().filter(|r| r.status != "pass") {
                writeln!(out, "{} {}", r.status.to_uppercase(), r.label())?;
            }
        }
    }
    let passed = rows.len() - failed - box_errors;
    let summary = format!(
        "sweep: {} instances, {passed} passed, {failed} failed, {box_errors} box errors",
        rows.len()
    );
    if format == Format::Text {
        writeln!(out, "{summary}")?;
    } else {
        eprintln!("{summary}");
    }
    Ok(if box_errors > 0 {
        EXIT_BOX
    } else if failed > 0 {
        EXIT_MISMATCH
    } else {
        0
    })
}

fn powers(
    out: &mut impl Write,
    args: &ParamArgs,
    field: &FieldArgs,
    sweep: &SweepArgs,
    m: u32,
    format: Format,
) -> Result<u8, Failure> {
    let cfg = field.config();
    cfg.field()?;
    let list = if sweep.sweep {
        sweep_params(sweep.max_alpha, sweep.max_m)
    } else {
        vec![args.params()?]
    };
    let mut reports: Vec<PowerReport> = Vec::with_capacity(list.len());
    for p in &list {
        reports.push(check_power_equality(p, m, &cfg)?);
    }
    match format {
        Format::Json if sweep.sweep => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&reports).expect("plain data")
        )?,
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&reports[0]).expect("plain data")
        )?,
        Format::Csv => render::powers_csv(&mut *out, &reports)?,
        Format::Text if sweep.sweep => {
            for r in reports.iter().filter(|r| !r.equal) {
                writeln!(out, "UNEQUAL {}", r.params.expect("block params"))?;
            }
            let bad = reports.iter().filter(|r| !r.equal).count();
            writeln!(
                out,
                "powers m={m}: {} instances, {} equal, {bad} unequal",
                reports.len(),
                reports.len() - bad
            )?;
        }
        Format::Text => render::powers_text(out, &reports[0])?,
    }
    Ok(if reports.iter().all(|r| r.equal) {
        0
    } else {
        EXIT_MISMATCH
    })
}
