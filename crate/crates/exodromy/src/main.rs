//! Command-line front end for the classification pipelines.

use clap::{Parser, Subcommand};

use exodromy::run::{self, Output, RunError};
use exodromy_core::rewrite::DEFAULT_REWRITE_BUDGET;

#[derive(Parser)]
#[command(
    name = "exodromy",
    about = "Orbit categories, stratified quotients and exit-path classification for finite group actions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a finite permutation group (builtin name or JSON file).
    Group {
        /// Builtin name (C2, C3, C4, K4, S3, D4) or a JSON file path.
        group: String,
    },
    /// Build the orbit category of a group.
    OrbitCat {
        group: String,
        /// Write the category diagram to this DOT file.
        #[arg(long)]
        dot: Option<String>,
        /// Render identity arrows in the DOT output too.
        #[arg(long)]
        identities: bool,
    },
    /// Operate on a stratified complex with a group action.
    Space {
        /// One of: validate, quotient, strat, subdivide, cone.
        op: String,
        /// Curated model name or a JSON file path.
        model: String,
        /// Write the resulting complex to this JSON file.
        #[arg(long)]
        out: Option<String>,
    },
    /// Build the exit-path category of a model.
    ExitCat {
        model: String,
        /// Rewriting budget, counted in rule applications.
        #[arg(long, default_value_t = DEFAULT_REWRITE_BUDGET)]
        budget: usize,
        /// Write the materialized category diagram to this DOT file.
        #[arg(long)]
        dot: Option<String>,
        /// Build the exit category of the quotient instead.
        #[arg(long)]
        quotient: bool,
    },
    /// Lift an exit word from the quotient of a model.
    Lift {
        model: String,
        /// Start vertex of the quotient word.
        start: usize,
        /// Signed steps, e.g. "+0,-1" (bare numbers are forward).
        steps: String,
        /// The chosen lift of the word's endpoint.
        #[arg(long)]
        end_lift: usize,
    },
    /// Run the full classification pipeline on one model.
    Classify {
        model: String,
        #[arg(long, default_value_t = DEFAULT_REWRITE_BUDGET)]
        budget: usize,
        /// Word-length bound for the presented-route corroboration.
        #[arg(long, default_value_t = 4)]
        bound: usize,
        /// Write the verification report to this JSON file.
        #[arg(long)]
        report: Option<String>,
    },
    /// Classify every curated model and run the seeded round trips.
    Suite {
        #[arg(long, default_value_t = DEFAULT_REWRITE_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 4)]
        bound: usize,
        /// Seed for the randomized presheaf round trips.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of seeded round trips.
        #[arg(long, default_value_t = 100)]
        rounds: usize,
        #[arg(long)]
        report: Option<String>,
    },
}

fn dispatch(cli: Cli) -> Result<Output, RunError> {
    match cli.command {
        Command::Group { group } => run::group_info(&group),
        Command::OrbitCat {
            group,
            dot,
            identities,
        } => run::orbit_cat(&group, dot.as_deref(), identities),
        Command::Space { op, model, out } => run::space(&op, &model, out.as_deref()),
        Command::ExitCat {
            model,
            budget,
            dot,
            quotient,
        } => run::exit_cat(&model, budget, dot.as_deref(), quotient),
        Command::Lift {
            model,
            start,
            steps,
            end_lift,
        } => run::lift(&model, start, &steps, end_lift),
        Command::Classify {
            model,
            budget,
            bound,
            report,
        } => run::classify_model(&model, budget, bound, report.as_deref()),
        Command::Suite {
            budget,
            bound,
            seed,
            rounds,
            report,
        } => run::suite(budget, bound, seed, rounds, report.as_deref()),
    }
}

fn main() {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(out) => {
            print!("{}", out.text);
            std::process::exit(i32::from(out.status));
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(i32::from(e.status()));
        }
    }
}
