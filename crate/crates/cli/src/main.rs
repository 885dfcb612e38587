use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monster_cli::ascii::ChainView;
use monster_cli::{commands, truncation_order_override, CliError, Format};
use monster_core::ChartString;

/// Exact computations on the prolonged nodal family x1 x2 = t.
#[derive(Parser)]
#[command(name = "monster", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Dot,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Ascii => Format::Ascii,
            FormatArg::Dot => Format::Dot,
            FormatArg::Json => Format::Json,
        }
    }
}

fn chart_arg(s: &str) -> Result<ChartString, String> {
    s.parse().map_err(|e: monster_core::tower::TowerError| e.to_string())
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BinomialTarget {
    /// Print B(prefix) for every prefix of this chart string.
    #[arg(long, value_parser = chart_arg)]
    chart: Option<ChartString>,
    /// Print B(c) for every chart up to --level.
    #[arg(long, requires = "level")]
    all: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Node binomials.
    Binomials {
        #[command(flatten)]
        target: BinomialTarget,
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=12))]
        level: Option<u64>,
        /// Prefix each line with B(label) =.
        #[arg(long)]
        labeled: bool,
    },
    /// The twig chain of the central fiber.
    Chain {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=12))]
        level: u64,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
        /// Show node and twig words.
        #[arg(long)]
        words: bool,
        /// Show twig multiplicities.
        #[arg(long)]
        multiplicities: bool,
    },
    /// All code words of a given length.
    Codewords {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=15))]
        level: u64,
        /// Show the codimension of each locus.
        #[arg(long)]
        codim: bool,
    },
    /// The node word of a node, by both algorithms.
    Nodeword {
        #[arg(value_parser = chart_arg)]
        label: ChartString,
        /// Show the recursion level by level.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
    },
    /// Lift a parametrized curve through the tower.
    Prolong {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        levels: usize,
    },
    /// Cross-check every chart at a level.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=12))]
        level: u64,
    },
}

fn run(cli: Cli) -> Result<(String, u8), CliError> {
    let ok = |text: String| Ok((text, 0));
    match cli.command {
        Command::Binomials {
            target,
            level,
            labeled,
        } => match (target.chart, level) {
            (Some(chart), _) => ok(commands::binomials_for_chart(&chart, labeled)),
            (None, Some(level)) => ok(commands::all_binomials(level as usize, labeled)),
            (None, None) => Err(CliError::Usage("--all needs --level".to_string())),
        },
        Command::Chain {
            level,
            format,
            words,
            multiplicities,
        } => ok(commands::chain(
            level as usize,
            format.into(),
            ChainView {
                words,
                multiplicities,
            },
        )?),
        Command::Codewords { level, codim } => ok(commands::codewords(level as usize, codim)),
        Command::Nodeword {
            label,
            trace,
            format,
        } => ok(commands::nodeword(&label, trace, format.into())?),
        Command::Prolong { file, levels } => {
            let order = truncation_order_override()?;
            ok(commands::prolong_file(&file, levels, order)?)
        }
        Command::Verify { level } => {
            let v = commands::verify(level as usize);
            Ok((v.report, if v.failures == 0 { 0 } else { 1 }))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("monster: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
