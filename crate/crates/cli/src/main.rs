//! `trade-kernel`: command-line front end.
//!
//! Every command prints a JSON report (or, with `--text`, the plain-text
//! artifact). Exit status is 0 on success, 1 on a negative result
//! (NotInSpan, NotAdmissible, SpanDeficient, ScheduleFailure, search
//! failure) and 2 on usage or input errors.

mod cycles_cmd;
mod json;
mod latin_cmd;
mod linalg_cmd;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use trade_kernel::cycles::{Mode, DEFAULT_NODE_BUDGET};

#[derive(Parser, Debug)]
#[command(name = "trade-kernel", version, about = "Exact linear algebra for latin trades and 4-cycle trades")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Seed for stochastic operations.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Node budget for backtracking (overrides TRADE_KERNEL_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Transform mode.
    #[arg(long, global = true, default_value = "lifted", value_parser = parse_mode)]
    pub mode: Mode,
    /// Print the JSON report (default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Print the plain-text artifact instead of the report.
    #[arg(long, global = true)]
    pub text: bool,
    /// Threads for independent restarts.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Latin squares, trades and intercalates.
    #[command(subcommand)]
    Latin(latin_cmd::LatinCommand),
    /// 4-cycle systems and double-diamonds.
    #[command(subcommand)]
    Cycles(cycles_cmd::CyclesCommand),
    /// Exact linear algebra on matrix dump files.
    #[command(subcommand)]
    Linalg(linalg_cmd::LinalgCommand),
}

/// Shared state for one invocation.
pub struct Ctx {
    pub global: GlobalArgs,
    inputs: Vec<u8>,
    seed_used: Option<u64>,
}

impl Ctx {
    /// Reads an input file and folds it into the report digest.
    pub fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.inputs.extend_from_slice(&bytes);
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
    }

    pub fn budget(&self) -> Result<u64> {
        if let Some(b) = self.global.budget {
            return Ok(b);
        }
        match std::env::var("TRADE_KERNEL_BUDGET") {
            Ok(v) => v
                .trim()
                .parse()
                .with_context(|| format!("TRADE_KERNEL_BUDGET=`{v}` is not a number")),
            Err(_) => Ok(DEFAULT_NODE_BUDGET),
        }
    }

    /// Seed for a stochastic command; recorded in the report.
    pub fn seed(&mut self, default: u64) -> u64 {
        let s = self.global.seed.unwrap_or(default);
        self.seed_used = Some(s);
        s
    }
}

/// Writes an artifact when `--out` was given.
pub fn write_out(out: &Option<PathBuf>, text: &str) -> Result<()> {
    if let Some(p) = out {
        std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

/// Result of a command: JSON payload, text rendering, and whether it is a
/// negative result.
pub struct Output {
    pub payload: Value,
    pub text: String,
    pub negative: bool,
}

impl Output {
    pub fn ok(payload: Value, text: impl Into<String>) -> Self {
        Output {
            payload,
            text: text.into(),
            negative: false,
        }
    }

    pub fn negative(status: &str, message: String) -> Self {
        Output {
            payload: json!({ "status": status, "message": message }),
            text: format!("{status}: {message}\n"),
            negative: true,
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut ctx = Ctx {
        global: cli.global.clone(),
        inputs: Vec::new(),
        seed_used: None,
    };
    let start = Instant::now();
    let res = match cli.command {
        Command::Latin(c) => latin_cmd::run(c, &mut ctx),
        Command::Cycles(c) => cycles_cmd::run(c, &mut ctx),
        Command::Linalg(c) => linalg_cmd::run(c, &mut ctx),
    };
    let elapsed = start.elapsed();
    let out = match res {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if ctx.global.text {
        print!("{}", out.text);
    } else {
        let echo = argv[1..].join(" ");
        let digest_src: &[u8] = if ctx.inputs.is_empty() { echo.as_bytes() } else { &ctx.inputs };
        let report = json!({
            "command": echo,
            "input_digest": format!("sha256:{:x}", Sha256::digest(digest_src)),
            "result": out.payload,
            "elapsed_ms": elapsed.as_secs_f64() * 1e3,
            "seed": ctx.seed_used,
            "version": env!("CARGO_PKG_VERSION"),
        });
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable report"));
    }
    ExitCode::from(if out.negative { 1 } else { 0 })
}
