//! `klcells run job.toml`: one batch computation per job file.
//!
//! Exit status: 0 success, 1 a verification failed, 2 bad input,
//! 3 internal error.

mod cache;
mod job;
mod report;
mod run;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand};

use crate::cache::{Cache, CacheMismatch};
use crate::job::{InputError, JobSpec};

#[derive(Parser)]
#[command(
    name = "klcells",
    version,
    about = "Kazhdan-Lusztig cells and Vogan classes for finite Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the job described by a TOML file.
    Run {
        job: PathBuf,
        /// Write the tab-separated report here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Cache directory (default: $KLCELLS_CACHE_DIR, else ~/.cache/klcells).
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long, conflicts_with = "cache_dir")]
        no_cache: bool,
        /// Recompute and require a present cache entry to match byte for byte.
        #[arg(long)]
        verify_cache: bool,
        /// Suppress the human-readable summary on stderr.
        #[arg(short, long)]
        quiet: bool,
    },
    /// Check a job file without computing anything.
    Check { job: PathBuf },
}

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(2)
            } else if e.downcast_ref::<CacheMismatch>().is_some() {
                ExitCode::from(1)
            } else {
                ExitCode::from(3)
            }
        }
    }
}

fn execute(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Cmd::Check { job } => {
            let job = JobSpec::from_path(&job)?.load()?;
            println!(
                "ok\t{}\t{}\t{} elements",
                job.command,
                job.describe(),
                job.system.size()
            );
            Ok(Outcome::Ok)
        }
        Cmd::Run {
            job,
            output,
            threads,
            cache_dir,
            no_cache,
            verify_cache,
            quiet,
        } => {
            if let Some(n) = threads {
                if n == 0 {
                    return Err(job::input_err("--threads must be positive"));
                }
                rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
            }
            let start = Instant::now();
            let job = JobSpec::from_path(&job)?.load()?;
            let dir = if no_cache {
                None
            } else {
                cache_dir.or_else(cache::default_dir)
            };
            let cache = Cache::new(dir);
            let src = run::Source {
                cache: &cache,
                verify_cache,
            };
            let report = run::run(&job, &src)?;
            match output {
                Some(path) => {
                    let mut f = std::fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    report.write_tsv(&mut f)?;
                }
                None => report.write_tsv(&mut std::io::stdout().lock())?,
            }
            if !quiet {
                let mut err = std::io::stderr().lock();
                writeln!(err, "{} on {}", job.command, job.describe())?;
                report.write_human(&mut err)?;
                writeln!(err, "  time  {:.2?}", start.elapsed())?;
            }
            Ok(if report.failed() { Outcome::Failed } else { Outcome::Ok })
        }
    }
}
