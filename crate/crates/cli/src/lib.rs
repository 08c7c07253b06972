//! Command-line front end for the tri-pants graph.
//!
//! [`run`] takes the argument vector and two output sinks and returns the
//! process exit status, so the whole CLI can be driven from tests.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use tripants::explorer::{self, EdgeFilter, ExplorationBall, ExploreError};
use tripants::{FareyError, FareyTriangle, MoveKind, MoveLabel, PushWord, TriArc, TriArcError};

pub mod verify;

#[derive(Debug, Parser)]
#[command(name = "tripants", version, about = "Explore the tri-pants graph of the twice-punctured torus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Big,
    Small1,
    Small2,
}

impl From<KindArg> for MoveKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Big => MoveKind::Big,
            KindArg::Small1 => MoveKind::SmallFirst,
            KindArg::Small2 => MoveKind::SmallSecond,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FilterArg {
    All,
    Big,
    Small,
}

impl From<FilterArg> for EdgeFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => EdgeFilter::All,
            FilterArg::Big => EdgeFilter::BigOnly,
            FilterArg::Small => EdgeFilter::SmallOnly,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Dot,
    Jsonl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the nine neighbours of a tri-arc.
    Neighbors { triarc: String },
    /// Apply one flip.
    Flip {
        #[arg(long)]
        arc: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        triarc: String,
    },
    /// Print the Farey triangle a tri-arc projects to.
    Project { triarc: String },
    /// Apply a point push, written over a/A/b/B.
    Push { pushword: String, triarc: String },
    /// Graph distance, or the dual-tree lower bound.
    Distance {
        #[arg(long, default_value_t = 6, conflicts_with = "lower_bound")]
        max: usize,
        #[arg(long)]
        lower_bound: bool,
        from: String,
        to: String,
    },
    /// Distance between two triangles in the dual tree.
    FareyDistance { from: String, to: String },
    /// Dump a ball as DOT or JSON lines.
    Explore {
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value = "all")]
        filter: FilterArg,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: FormatArg,
        triarc: String,
    },
    /// Construct a move sequence between two tri-arcs.
    Path {
        #[arg(long, default_value_t = 10_000)]
        fiber_cap: usize,
        from: String,
        to: String,
    },
    /// Run verification suites.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure of one invocation, with the exit status it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input: status 2.
    Parse(String),
    /// A domain error from the library: status 1.
    Domain { name: &'static str, message: String },
    /// The command ran but its result is negative (failed checks, no path).
    Negative,
}

impl CliError {
    pub fn status(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain { .. } | CliError::Negative => 1,
        }
    }
}

impl From<TriArcError> for CliError {
    fn from(e: TriArcError) -> Self {
        match e {
            TriArcError::Word(_) | TriArcError::WrongArity(_) | TriArcError::UnknownMoveKind(_) => {
                CliError::Parse(e.to_string())
            }
            _ => CliError::Domain { name: e.name(), message: e.to_string() },
        }
    }
}

impl From<FareyError> for CliError {
    fn from(e: FareyError) -> Self {
        match e {
            FareyError::Parse(_) => CliError::Parse(e.to_string()),
            _ => CliError::Domain { name: e.name(), message: e.to_string() },
        }
    }
}

impl From<ExploreError> for CliError {
    fn from(e: ExploreError) -> Self {
        CliError::Domain { name: e.name(), message: e.to_string() }
    }
}

fn triarc(s: &str) -> Result<TriArc, CliError> {
    Ok(s.parse::<TriArc>()?)
}

fn triangle(s: &str) -> Result<FareyTriangle, CliError> {
    Ok(s.parse::<FareyTriangle>()?)
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let _ = if status == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return status;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            match &e {
                CliError::Parse(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                }
                CliError::Domain { name, message } => {
                    let _ = writeln!(err, "error: {name}: {message}");
                }
                CliError::Negative => {}
            }
            e.status()
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Domain { name: "Io", message: e.to_string() })
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Neighbors { triarc: t } => {
            let t = triarc(t)?;
            let mut text = String::new();
            for (n, label) in t.neighbors() {
                text.push_str(&format!("{label}\t{n}\n"));
            }
            write_out(out, &text)
        }
        Command::Flip { arc, kind, triarc: t } => {
            let t = triarc(t)?;
            let label = MoveLabel { arc: arc.parse()?, kind: (*kind).into() };
            let next = t.apply(&label)?;
            write_out(out, &format!("{next}\n"))
        }
        Command::Project { triarc: t } => {
            let t = triarc(t)?;
            write_out(out, &format!("{}\n", FareyTriangle::project(&t)))
        }
        Command::Push { pushword, triarc: t } => {
            let theta: PushWord = pushword
                .parse()
                .map_err(|e: tripants::freegroup::ParseWordError| CliError::Parse(e.to_string()))?;
            let t = triarc(t)?;
            write_out(out, &format!("{}\n", theta.apply(&t)))
        }
        Command::Distance { max, lower_bound, from, to } => {
            let (t1, t2) = (triarc(from)?, triarc(to)?);
            if *lower_bound {
                return write_out(out, &format!("{}\n", explorer::lower_bound_distance(&t1, &t2)));
            }
            match explorer::exact_distance(&t1, &t2, *max)? {
                Some(d) => write_out(out, &format!("{d}\n")),
                None => {
                    write_out(out, "not-found\n")?;
                    Err(CliError::Negative)
                }
            }
        }
        Command::FareyDistance { from, to } => {
            let (a, b) = (triangle(from)?, triangle(to)?);
            write_out(out, &format!("{}\n", a.dual_distance(&b)))
        }
        Command::Explore { radius, filter, format, triarc: t } => {
            let t = triarc(t)?;
            let ball = ExplorationBall::explore(&t, *radius, (*filter).into())?;
            let text = match format {
                FormatArg::Dot => ball.to_dot(),
                FormatArg::Jsonl => jsonl(&ball),
            };
            write_out(out, &text)
        }
        Command::Path { fiber_cap, from, to } => {
            let (t1, t2) = (triarc(from)?, triarc(to)?);
            let report = explorer::find_path(&t1, &t2, *fiber_cap)?;
            write_out(out, &report.to_string())
        }
        Command::Verify { suite, radius, seed } => {
            let config = verify::VerifyConfig { radius: *radius, seed: *seed };
            let reports = verify::run(suite, &config).map_err(CliError::Parse)?;
            let mut ok = true;
            for r in &reports {
                write_out(out, &r.render())?;
                ok &= r.all_passed();
            }
            if ok {
                Ok(())
            } else {
                Err(CliError::Negative)
            }
        }
    }
}

/// One JSON object per vertex, then one per edge.
pub fn jsonl(ball: &ExplorationBall) -> String {
    let mut text = String::new();
    for (t, depth) in ball.vertices() {
        let record = serde_json::json!({
            "vertex": t.to_string(),
            "depth": depth,
            "triangle": FareyTriangle::project(t).to_string(),
        });
        text.push_str(&record.to_string());
        text.push('\n');
    }
    for e in ball.edges() {
        let record = serde_json::json!({
            "from": ball.vertex(e.from).to_string(),
            "to": ball.vertex(e.to).to_string(),
            "kind": e.label.kind.name(),
            "arc": e.label.arc.to_string(),
        });
        text.push_str(&record.to_string());
        text.push('\n');
    }
    text
}
