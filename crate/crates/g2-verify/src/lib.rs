//! Verification driver: grids of instances, closed formulas against oracles,
//! and machine-readable reports.

pub mod checks;
pub mod config;
pub mod report;
pub mod table;

pub use config::{Cli, Command, ConfigError, Format, RunConfig};
pub use report::{Check, Outcome, Provenance, Report, EXIT_BUDGET, EXIT_CONFIG, EXIT_FAILURE, EXIT_OK};

/// Run `f` on a pool of `jobs` threads, or on the global pool.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Run one check subcommand into a report.
pub fn run(command: Command, cfg: &RunConfig) -> Report {
    let outcomes = with_jobs(cfg.jobs, || match command {
        Command::CheckIdentity => checks::check_identity(cfg),
        Command::CheckLemmas => checks::check_lemmas(cfg),
        Command::CheckLfactor => checks::check_lfactor(cfg),
        Command::Table => Vec::new(),
    });
    Report::new(cfg.clone(), outcomes)
}
