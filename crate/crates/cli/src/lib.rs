//! The `twinllt` command line, callable in-process through [`run`].

pub mod args;
mod commands;
mod gkm;
mod output;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;
use twinllt_core::{enumerate_hessenberg, Engine, HessFn, MemoCache, Recursion};
use twinllt_gkm::Mode;

use args::{Cli, Command, Global, Targets};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Failure(String),
    /// The reader went away; nothing more to say.
    Closed,
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            CliError::Closed
        } else {
            CliError::Failure(e.to_string())
        }
    }
}

impl From<twinllt_core::Error> for CliError {
    fn from(e: twinllt_core::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

impl From<twinllt_gkm::Error> for CliError {
    fn from(e: twinllt_gkm::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

pub(crate) type CliResult = Result<i32, CliError>;

/// Parse `argv` (program name first), run the command and return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            let _ = writeln!(err, "error: --jobs must be at least 1");
            return EXIT_USAGE;
        }
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_VIOLATION
        }
        Err(CliError::Closed) => EXIT_OK,
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let g = &cli.global;
    match &cli.command {
        Command::Llt(a) => commands::engine(Engine::Llt, a, g, out),
        Command::Csf(a) => commands::engine(Engine::Csf, a, g, out),
        Command::Poincare { targets, json, csv } => commands::poincare(targets, *json, *csv, out),
        Command::Triples { h, role, r, json } => commands::triples(h, *role, *r, *json, out),
        Command::Decompose { h, json } => commands::decompose(h, *json, out),
        Command::Transpose { h, json } => commands::transpose(h, *json, out),
        Command::Enumerate { n, json } => commands::enumerate(*n, *json, out),
        Command::Gkm { command } => gkm::run(command, g, out, err),
        Command::Verify {
            suite,
            n_max,
            report,
        } => verify::run(*suite, *n_max, *report, g, out),
    }
}

impl Targets {
    pub(crate) fn resolve(&self) -> Result<Vec<HessFn>, CliError> {
        let mut out = self.h.clone();
        if let Some(n) = self.all {
            if n == 0 {
                return Err(CliError::Usage("--all needs n >= 1".into()));
            }
            out.extend(enumerate_hessenberg(n));
        }
        if out.is_empty() {
            return Err(CliError::Usage("give at least one --h or --all".into()));
        }
        Ok(out)
    }
}

impl Global {
    pub(crate) fn mode(&self) -> Mode {
        if self.exact {
            Mode::Exact
        } else {
            Mode::ModP { seed: self.seed }
        }
    }

    pub(crate) fn cache(&self) -> Option<MemoCache> {
        if self.no_cache {
            return None;
        }
        let dir = self.cache_dir.clone().or_else(default_cache_dir)?;
        Some(MemoCache::new(dir))
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME").filter(|x| !x.is_empty()) {
        return Some(PathBuf::from(x).join("twinllt"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("twinllt"))
}

/// A recursion seeded from the cache. Unreadable or mismatched files are
/// skipped with a warning.
pub(crate) fn recursion(engine: Engine, cache: Option<&MemoCache>, n_max: usize) -> Recursion {
    let Some(cache) = cache else {
        return Recursion::new(engine);
    };
    match cache.load(engine, n_max) {
        Ok((memo, _)) => Recursion::with_memo(engine, memo),
        Err(e) => {
            log::warn!("ignoring memo cache: {e}");
            Recursion::new(engine)
        }
    }
}

pub(crate) fn persist(cache: Option<&MemoCache>, rec: &Recursion) {
    if let Some(cache) = cache {
        if let Err(e) = cache.store(rec.engine(), rec.memo()) {
            log::warn!("could not write memo cache: {e}");
        }
    }
}
