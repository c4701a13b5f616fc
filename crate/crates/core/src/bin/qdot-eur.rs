use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qdot_eur::dot_model::DotParams;
use qdot_eur::sweep::{
    evaluate_point, first_ordering_violation, format_value, plot_script, run_sweep, to_csv, SweepParameter,
    SweepRow, SweepSpec,
};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Concurrence, discord and entropic uncertainty bounds of the thermal quantum-dot state.
#[derive(Parser)]
#[command(name = "qdot-eur", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single parameter point.
    Point {
        #[arg(long = "t")]
        t: f64,
        #[arg(long)]
        k0: f64,
        #[arg(long)]
        b0: f64,
        #[arg(long, default_value_t = 1.0)]
        gamma: f64,
        /// Exit with status 1 unless berta <= adabi <= lhs.
        #[arg(long)]
        verify: bool,
    },
    /// Sweep one parameter over a uniform grid and write CSV.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// temperature, k0 or b0
    #[arg(long)]
    param: SweepParameter,
    #[arg(long)]
    start: f64,
    #[arg(long)]
    stop: f64,
    #[arg(long)]
    steps: usize,
    #[arg(long = "t")]
    t: Option<f64>,
    #[arg(long)]
    k0: Option<f64>,
    #[arg(long)]
    b0: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    gamma: f64,
    /// CSV destination (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a gnuplot script that reads the CSV.
    #[arg(long)]
    plot_script: Option<PathBuf>,
    /// Exit with status 1 if any row violates berta <= adabi <= lhs.
    #[arg(long)]
    verify: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Point {
            t,
            k0,
            b0,
            gamma,
            verify,
        } => point(t, k0, b0, gamma, verify),
        Command::Sweep(args) => sweep(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn point(t: f64, k0: f64, b0: f64, gamma: f64, verify: bool) -> Result<ExitCode, String> {
    let params = DotParams::new(k0, gamma, b0, t).map_err(|e| e.to_string())?;
    let report = evaluate_point(&params).map_err(|e| e.to_string())?;
    let c = &report.correlations;
    let u = &report.uncertainty;
    let lines = [
        ("concurrence", c.concurrence),
        ("discord", c.discord),
        ("mutual_information", c.mutual_information),
        ("lhs", u.lhs),
        ("berta_bound", u.berta_bound),
        ("adabi_bound", u.adabi_bound),
        ("delta", u.delta),
        ("holevo_x", u.holevo_x),
        ("holevo_z", u.holevo_z),
        ("conditional_entropy", u.conditional_entropy),
    ];
    let mut out = String::new();
    for (name, value) in lines {
        out.push_str(&format!("{name} = {}\n", format_value(value)));
    }
    out.push_str(&format!("discord_branch = {:?}\n", c.discord_branch));
    io::stdout().write_all(out.as_bytes()).map_err(|e| e.to_string())?;

    let row = SweepRow::from_report(t, &report);
    if verify && !row.bounds_ordered() {
        eprintln!("verification failed: berta <= adabi <= lhs violated");
        return Ok(ExitCode::from(EXIT_VERIFY));
    }
    Ok(ExitCode::SUCCESS)
}

fn sweep(args: SweepArgs) -> Result<ExitCode, String> {
    let fixed = |name: &str, value: Option<f64>, swept: bool| -> Result<f64, String> {
        match (value, swept) {
            (Some(v), _) => Ok(v),
            (None, true) => Ok(0.0),
            (None, false) => Err(format!("--{name} is required when sweeping {}", args.param)),
        }
    };
    let t = fixed("t", args.t, args.param == SweepParameter::Temperature)?;
    let k0 = fixed("k0", args.k0, args.param == SweepParameter::K0)?;
    let b0 = fixed("b0", args.b0, args.param == SweepParameter::B0)?;
    let base = DotParams::new(k0, args.gamma, b0, t).map_err(|e| e.to_string())?;
    let spec = SweepSpec::new(args.param, args.start, args.stop, args.steps, base).map_err(|e| e.to_string())?;
    if args.plot_script.is_some() && args.out.is_none() {
        return Err("--plot-script needs --out so the script has a CSV to read".into());
    }

    let rows = run_sweep(&spec).map_err(|e| e.to_string())?;
    let csv = to_csv(&rows).map_err(|e| e.to_string())?;
    match &args.out {
        Some(path) => fs::write(path, &csv).map_err(|e| format!("{}: {e}", path.display()))?,
        None => io::stdout().write_all(csv.as_bytes()).map_err(|e| e.to_string())?,
    }

    if let (Some(script), Some(out)) = (&args.plot_script, &args.out) {
        let text = plot_script(&rows, spec.param(), &relative_csv_path(script, out))
            .map_err(|e| e.to_string())?;
        fs::write(script, text).map_err(|e| format!("{}: {e}", script.display()))?;
    }

    if args.verify {
        if let Some(row) = first_ordering_violation(&rows) {
            eprintln!(
                "verification failed at {} = {}: berta {} adabi {} lhs {}",
                spec.param(),
                row.param,
                row.berta_bound,
                row.adabi_bound,
                row.lhs
            );
            return Ok(ExitCode::from(EXIT_VERIFY));
        }
    }
    Ok(ExitCode::SUCCESS)
}

// The script is run from its own directory, so point at the CSV relative to it.
fn relative_csv_path(script: &Path, csv: &Path) -> String {
    let script_dir = script.parent().unwrap_or(Path::new(""));
    let csv_dir = csv.parent().unwrap_or(Path::new(""));
    if script_dir == csv_dir {
        if let Some(name) = csv.file_name() {
            return name.to_string_lossy().into_owned();
        }
    }
    if let Ok(rest) = csv.strip_prefix(script_dir) {
        return rest.to_string_lossy().into_owned();
    }
    csv.to_string_lossy().into_owned()
}
