use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use invsg_cli::commands::DEFAULT_GRAPH;
use invsg_cli::{
    cmd_close, cmd_criterion, cmd_germs, cmd_props, cmd_symbolic, CliError, FamilyKind, GermSource, Options, RunReport,
    SymbolicQuery,
};

/// Finite inverse semigroups, groupoids of germs and finite-cover Hausdorffness checks.
#[derive(Debug, Parser)]
#[command(name = "invsg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalArgs,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Element cap for closures.
    #[arg(long, global = true, env = "INVSG_BUDGET", default_value_t = invsg::DEFAULT_CLOSURE_BUDGET)]
    budget: usize,
    /// Cap on compatible subsets visited by the completeness check.
    #[arg(long, global = true, env = "INVSG_SUBSET_BUDGET", default_value_t = invsg::DEFAULT_SUBSET_BUDGET)]
    subset_budget: usize,
    /// Re-run independent oracles and report each check.
    #[arg(long, global = true)]
    verify: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include wall-clock time in the report. Output is then no longer reproducible.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Munn,
    Graph,
    AtomFlip,
}

impl From<FamilyArg> for FamilyKind {
    fn from(value: FamilyArg) -> Self {
        match value {
            FamilyArg::Munn => FamilyKind::Munn,
            FamilyArg::Graph => FamilyKind::Graph,
            FamilyArg::AtomFlip => FamilyKind::AtomFlip,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Close a generator set (or load a table) and verify the result.
    Close { input: PathBuf },
    /// Unitarity, completeness and distributivity flags.
    Props { input: PathBuf },
    /// Build the groupoid of germs of an action.
    Germs {
        /// Semigroup file, used with --self.
        input: Option<PathBuf>,
        /// Use the left-translation action of the semigroup on itself.
        #[arg(long = "self", requires = "input", conflicts_with = "action")]
        self_action: bool,
        /// Action file naming its own semigroup.
        #[arg(long, conflicts_with = "input")]
        action: Option<PathBuf>,
    },
    /// Finite-cover criterion for every element, or the listed ones.
    Criterion {
        #[arg(required_unless_present = "family", conflicts_with = "family")]
        input: Option<PathBuf>,
        /// Element label or index; repeatable. With --family, exactly one.
        #[arg(long)]
        element: Vec<String>,
        #[command(flatten)]
        symbolic: SymbolicArgs,
    },
    /// Criterion verdict for an element of a countable family.
    Symbolic {
        #[arg(long)]
        element: String,
        #[command(flatten)]
        symbolic: SymbolicArgs,
    },
}

#[derive(Debug, Args)]
struct SymbolicArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Free generator count for Munn trees; inferred from the word when absent.
    #[arg(long)]
    rank: Option<u32>,
    /// Directed graph as `1>2, 2>2, ..`, vertices numbered from 1.
    #[arg(long, default_value = DEFAULT_GRAPH)]
    graph: String,
    /// Atom count of the atom-flip truncation; omit for the infinite family.
    #[arg(long)]
    truncation: Option<u64>,
}

impl SymbolicArgs {
    fn query(self, element: String) -> Result<SymbolicQuery, CliError> {
        let family = self.family.ok_or_else(|| CliError::Parse("--family is required".into()))?;
        Ok(SymbolicQuery {
            family: family.into(),
            element,
            rank: self.rank,
            graph: self.graph,
            truncation: self.truncation,
        })
    }
}

fn run(command: Command, opts: &Options) -> Result<RunReport, CliError> {
    match command {
        Command::Close { input } => cmd_close(&input, opts),
        Command::Props { input } => cmd_props(&input, opts),
        Command::Germs { input, self_action, action } => {
            let source = match (input, action) {
                (Some(input), None) if self_action => GermSource::SelfAction(input),
                (None, Some(action)) => GermSource::ActionFile(action),
                _ => return Err(CliError::Parse("give a semigroup file with --self, or --action FILE".into())),
            };
            cmd_germs(&source, opts)
        }
        Command::Criterion { input: Some(input), element, .. } => cmd_criterion(&input, &element, opts),
        Command::Criterion { input: None, mut element, symbolic } => {
            if element.len() != 1 {
                return Err(CliError::Parse("--family needs exactly one --element".into()));
            }
            cmd_symbolic("criterion", &symbolic.query(element.remove(0))?, opts)
        }
        Command::Symbolic { element, symbolic } => cmd_symbolic("symbolic", &symbolic.query(element)?, opts),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let g = &cli.global;
    let opts = Options { budget: g.budget, subset_budget: g.subset_budget, verify: g.verify };
    let (format, timing) = (g.format, g.timing);
    let start = Instant::now();
    match run(cli.command, &opts) {
        Ok(mut report) => {
            if timing {
                report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Structured => print!("{}", report.to_json()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("invsg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
