use clap::Parser;
use g2_verify::{run, table, Cli, Command, RunConfig, EXIT_CONFIG};
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(err) => {
            eprintln!("g2-verify: {err}");
            return ExitCode::from(EXIT_CONFIG as u8);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = if cli.command == Command::Table {
        let rows = g2_verify::with_jobs(cfg.jobs, || table::rows(&cfg));
        table::write(&rows, cfg.format, &mut out).map(|_| 0)
    } else {
        let report = run(cli.command, &cfg);
        for c in report.failures() {
            eprintln!("FAIL {} {} [{:?}]: {} != {}", c.id, c.instance, c.provenance, c.lhs, c.rhs);
        }
        for s in &report.summary.over_budget {
            eprintln!("BUDGET {} {}: {}", s.id, s.instance, s.detail);
        }
        report.write(cfg.format, &mut out).map(|_| report.summary.exit_code)
    };
    let _ = out.flush();
    match code {
        Ok(c) => ExitCode::from(c as u8),
        Err(err) => {
            eprintln!("g2-verify: {err}");
            ExitCode::FAILURE
        }
    }
}
