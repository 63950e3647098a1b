mod commands;
mod render;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{CliError, Outcome};

#[derive(Parser)]
#[command(name = "weylscope", version, about = "Compactified apartments, type prefans and relevant parabolics")]
struct Cli {
    /// Print the JSON report to standard output instead of the summary.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct DatumArgs {
    /// Named datum such as A3, B2, G2 or A1xA1.
    #[arg(long, required_unless_present = "datum_file", conflicts_with = "datum_file")]
    pub datum: Option<String>,
    /// JSON datum file.
    #[arg(long, value_name = "PATH")]
    pub datum_file: Option<PathBuf>,
}

#[derive(Args, Clone)]
pub struct TypedArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    /// Type as a list of simple roots, e.g. `a1,a2`; empty for the Borel type.
    #[arg(long = "type", default_value = "", allow_hyphen_values = true)]
    pub t: String,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, roots and Weyl group order.
    DatumInfo(DatumArgs),
    /// The Weyl fan.
    Fan(DatumArgs),
    /// The prefan F_t with its stratum labels.
    Prefan(TypedArgs),
    /// t-relevant parabolics.
    Relevant {
        #[command(flatten)]
        args: TypedArgs,
        /// List every parabolic containing the torus, not only standard ones.
        #[arg(long)]
        all: bool,
    },
    /// The cone C_t(Q) of a standard parabolic Q.
    Cone {
        #[command(flatten)]
        args: TypedArgs,
        /// Simple roots of the Levi of Q, e.g. `a2`.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        levi: String,
    },
    /// Limit of the ray u0 + n v in the compactified apartment.
    Limit {
        #[command(flatten)]
        args: TypedArgs,
        #[arg(long, allow_hyphen_values = true)]
        u0: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Evaluate a tropical polynomial at a point in a big-cell chart.
    Seminorm {
        #[command(flatten)]
        args: TypedArgs,
        #[arg(long, value_name = "PATH")]
        point: PathBuf,
        #[arg(long, value_name = "PATH")]
        poly: PathBuf,
        /// Chart index; defaults to the first chart containing the point.
        #[arg(long)]
        chart: Option<usize>,
    },
    /// Stabilizer profile of a point.
    Stabilizer {
        #[command(flatten)]
        args: TypedArgs,
        #[arg(long, value_name = "PATH")]
        point: PathBuf,
    },
    /// Project a point to the compactification of a larger type.
    Project {
        #[command(flatten)]
        args: TypedArgs,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        to_type: String,
        #[arg(long, value_name = "PATH")]
        point: PathBuf,
    },
    /// Diagonal seminorm classes on k^{d+1} and the A_d dictionary.
    Pgl {
        /// Comma separated log-magnitudes, e.g. `-inf,0,-1`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "seminorm", required_unless_present = "seminorm")]
        values: Option<String>,
        #[arg(long, value_name = "PATH")]
        seminorm: Option<PathBuf>,
    },
    /// SVG picture of a rank-2 compactified apartment.
    Render {
        #[command(flatten)]
        args: TypedArgs,
        #[arg(long, short, value_name = "PATH")]
        output: PathBuf,
    },
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cap = commands::enum_cap()?;
    match &cli.command {
        Command::DatumInfo(d) => commands::datum_info(d, cap),
        Command::Fan(d) => commands::fan(d, cap),
        Command::Prefan(a) => commands::prefan(a, cap),
        Command::Relevant { args, all } => commands::relevant(args, *all, cap),
        Command::Cone { args, levi } => commands::cone(args, levi),
        Command::Limit { args, u0, v } => commands::limit(args, u0, v, cap),
        Command::Seminorm { args, point, poly, chart } => commands::seminorm(args, point, poly, *chart, cap),
        Command::Stabilizer { args, point } => commands::stabilizer(args, point, cap),
        Command::Project { args, to_type, point } => commands::project(args, to_type, point, cap),
        Command::Pgl { values, seminorm } => commands::pgl(values.as_deref(), seminorm.as_deref(), cap),
        Command::Render { args, output } => commands::render(args, output, cap),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        let text = serde_json::to_string_pretty(&out.report).expect("serializable report");
        if let Some(path) = &cli.report {
            std::fs::write(path, format!("{text}\n")).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
        }
        let body = if cli.json { format!("{text}\n") } else { out.summary };
        match io::stdout().lock().write_all(body.as_bytes()) {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(CliError::Validation(format!("stdout: {e}"))),
            _ => Ok(()),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
