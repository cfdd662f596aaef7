mod commands;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mealy::Error;

#[derive(Parser, Debug)]
#[command(
    name = "mealy",
    version,
    about = "Explore Mealy automata: predicates, powers, Nerode classes, growth and lemma checks",
    after_help = "Exit status: 0 success, 1 a property failed, 2 usage or input error, 3 budget exceeded."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; `dot` applies to commands that produce an automaton.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Node budget for every component, power and enumeration.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,

    /// Worker threads; output does not depend on this.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Dot,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Automaton file in the line format `state letter -> state letter`.
    pub file: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report whether the automaton is invertible, reversible, coreversible and bireversible.
    Check(Input),
    /// Print the inverse automaton, where p --i|j--> q becomes p' --j|i--> q'.
    Invert(Input),
    /// Print the automaton together with its inverse and an identity state.
    Augment(Input),
    /// Print the n-th power, whose states are the words of length n.
    Power {
        #[command(flatten)]
        input: Input,
        /// Word length.
        #[arg(short = 'n', long = "length")]
        n: usize,
    },
    /// Print the connected component of a state word in its power.
    Component {
        #[command(flatten)]
        input: Input,
        /// Seed word such as `xyz` or `x.y.z`.
        #[arg(long, conflicts_with = "state")]
        word: Option<String>,
        /// Seed state; the seed word is this state repeated n times.
        #[arg(short = 'q', long)]
        state: Option<String>,
        /// Repetitions of the seed state.
        #[arg(short = 'n', long = "length", default_value_t = 1)]
        n: usize,
    },
    /// Tabulate component sizes of q^n and the sequence of ratios between them.
    Ratios {
        #[command(flatten)]
        input: Input,
        /// State to follow; every state when omitted.
        #[arg(short = 'q', long)]
        state: Option<String>,
        /// Largest n for which the ratio #cc(q^(n+1))/#cc(q^n) is reported.
        #[arg(long, default_value_t = 4)]
        horizon: usize,
    },
    /// Print the minimal automaton (one state per Nerode class) and the class of every state.
    Minimize {
        #[command(flatten)]
        input: Input,
        /// Also write the `state -> class` map to this file.
        #[arg(long)]
        classes: Option<PathBuf>,
    },
    /// Tabulate N_q(n): the words of the restricted Nerode class of q^n that end with q.
    Nq {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'q', long)]
        state: String,
        #[arg(long, default_value_t = 4)]
        horizon: usize,
    },
    /// Decide whether two words over states, inverses (x') and the identity (1) act identically.
    Equal {
        #[command(flatten)]
        input: Input,
        /// The two words to compare, e.g. --word "xx'" --word 1.
        #[arg(long, num_args = 1, required = true)]
        word: Vec<String>,
    },
    /// Count group elements of length at most n, for n up to the radius.
    Growth {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        /// Count semigroup elements (no inverses) instead.
        #[arg(long)]
        semigroup: bool,
    },
    /// Look for the first repetition among the actions of q, q^2, ... up to the horizon.
    Order {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'q', long)]
        state: String,
        #[arg(long, default_value_t = 8)]
        horizon: usize,
    },
    /// Build the exponential-growth witness for a state: rebase to a constant ratio, then
    /// tabulate minimization sizes, N_q sizes and the bounds that sandwich them.
    Witness {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'q', long)]
        state: String,
        #[arg(long, default_value_t = 6)]
        horizon: usize,
    },
    /// Check every structural lemma on a corpus of automata and report pass, fail or skip.
    Props {
        /// Automaton files to include.
        files: Vec<PathBuf>,
        /// Include every `*.mealy` file of this directory.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Include all bireversible automata with 1..=Q states over S letters, given as `Q,S`.
        #[arg(long)]
        enumerate: Option<String>,
        /// Keep one automaton per isomorphism class of the enumeration.
        #[arg(long)]
        dedup: bool,
        /// Include the built-in corpus: identity, Aleshin, its square and its augmentation.
        #[arg(long)]
        builtin: bool,
        #[arg(long, default_value_t = 4)]
        horizon: usize,
        /// Comma-separated property ids, e.g. L1,P11,EQ2.
        #[arg(long)]
        only: Option<String>,
    },
    /// Print the automaton in Graphviz DOT.
    ExportDot(Input),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e
                .chain()
                .any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::BudgetExceeded { .. })));
            ExitCode::from(if budget { 3 } else { 2 })
        }
    }
}
