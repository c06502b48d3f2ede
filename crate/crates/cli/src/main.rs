//! `spectral-lab`: exhaustive and closed-form checks of p-energy bounds.
//!
//! Exit status: 0 when the report has no violations, 1 when it has some
//! (the report is still written), 2 on usage or I/O errors.

mod cache;
mod checkpoint;
mod commands;
mod config;
mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spectral_lab::par::{self, Execution};
use spectral_lab::verify::{Side, DEFAULT_SAMPLES, DEFAULT_SEED, SIGN_MAX_ORDER, CHAIN_MAX_S};
use spectral_lab::FamilyKind;

use crate::config::{resolve_threads, Format, Range, RunConfig};
use crate::render::Document;

#[derive(Parser)]
#[command(name = "spectral-lab", version, about = "Check positive and negative p-energy bounds of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Output {
    /// Report format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Leave out the timing section, making reports byte-identical across reruns.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    #[value(alias = "negative")]
    Neg,
    #[value(alias = "positive")]
    Pos,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    CompleteMinusEdge,
    #[value(alias = "pendant")]
    CompletePlusPendant,
    #[value(alias = "clique-k2-gadget")]
    CliqueK2,
    SubdividedStar,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> FamilyKind {
        match f {
            FamilyArg::CompleteMinusEdge => FamilyKind::CompleteMinusEdge,
            FamilyArg::CompletePlusPendant => FamilyKind::CompletePlusPendant,
            FamilyArg::CliqueK2 => FamilyKind::CliqueK2Gadget,
            FamilyArg::SubdividedStar => FamilyKind::SubdividedStar,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check every connected graph in an order range against the energy bounds.
    Verify {
        #[arg(long, value_enum)]
        side: SideArg,
        /// Orders to check, `lo..hi` (inclusive) or a single `n`.
        #[arg(long = "n")]
        range: Range,
        /// Energy exponent (the positive side always uses 3).
        #[arg(long, default_value_t = 3.0)]
        p: f64,
        /// Worker threads; overridden by SPECTRAL_LAB_THREADS.
        #[arg(long)]
        shards: Option<usize>,
        /// Generation-tree depth at which large orders are split into shards.
        #[arg(long)]
        depth: Option<usize>,
        /// Run everything on the calling thread.
        #[arg(long)]
        sequential: bool,
        /// Newline-delimited checkpoint; an interrupted run resumes from it.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Added to every bound (for exercising the failure path).
        #[arg(long, hide = true, default_value_t = 0.0, allow_negative_numbers = true)]
        bound_shift: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Recompute the tabulated spectra and negative 3-energies of small graphs.
    Table1 {
        #[command(flatten)]
        out: Output,
    },
    /// Closed-form versus numeric checks for a parameterised family.
    Family {
        #[arg(value_enum)]
        kind: FamilyArg,
        #[arg(long = "n")]
        range: Range,
        /// Subdivided edges for subdivided stars (default: all admissible).
        #[arg(long)]
        t: Option<Range>,
        /// Append-only spectrum cache file.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Tabulated case-analysis values and their monotonicity chains.
    Bounds {
        #[arg(long, default_value_t = CHAIN_MAX_S)]
        max_s: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Count connected graphs per order.
    Enumerate {
        #[arg(long = "n")]
        range: Range,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        shards: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Dump the small-graph catalog as graph6.
    Gadgets {
        #[command(flatten)]
        out: Output,
    },
    /// Sign checks of the quotient polynomials over a range of orders.
    Appendix {
        #[arg(long, default_value_t = SIGN_MAX_ORDER)]
        n_max: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Random structural witnesses for the negative-energy configurations.
    Witnesses {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[command(flatten)]
        out: Output,
    },
}

fn base_config(name: &str, out: &Output) -> RunConfig {
    let mut c = RunConfig::new(name, out.format);
    c.output = out.output.clone();
    c.timing = !out.no_timing;
    c
}

fn set_threads(flag: Option<usize>) -> anyhow::Result<usize> {
    let t = resolve_threads(flag).map_err(anyhow::Error::msg)?;
    if !par::configure_threads(t) {
        log::debug!("worker pool already configured");
    }
    Ok(t)
}

fn run(cli: Cli) -> anyhow::Result<(RunConfig, Document)> {
    match cli.command {
        Command::Verify {
            side,
            range,
            p,
            shards,
            depth,
            sequential,
            checkpoint,
            bound_shift,
            out,
        } => {
            let side = match side {
                SideArg::Neg => Side::Negative,
                SideArg::Pos => Side::Positive,
            };
            let mut c = base_config("verify", &out);
            c.n = Some(range);
            c.exponent = Some(if side == Side::Positive { 3.0 } else { p });
            c.shards = Some(if sequential { 1 } else { set_threads(shards)? });
            c.validate().map_err(anyhow::Error::msg)?;
            let args = commands::VerifyArgs {
                side,
                range,
                exponent: p,
                depth,
                execution: if sequential { Execution::Sequential } else { Execution::Parallel },
                checkpoint,
                bound_shift,
            };
            let doc = commands::verify(&c, &args)?;
            Ok((c, doc))
        }
        Command::Table1 { out } => {
            let c = base_config("table1", &out);
            let doc = commands::table1(&c)?;
            Ok((c, doc))
        }
        Command::Family {
            kind,
            range,
            t,
            cache,
            out,
        } => {
            let mut c = base_config("family", &out);
            c.n = Some(range);
            c.exponent = Some(3.0);
            c.cache = cache;
            let doc = commands::family(&c, kind.into(), range, t)?;
            Ok((c, doc))
        }
        Command::Bounds { max_s, out } => {
            let c = base_config("bounds", &out);
            let doc = commands::bounds(&c, max_s)?;
            Ok((c, doc))
        }
        Command::Enumerate {
            range,
            depth,
            shards,
            out,
        } => {
            let mut c = base_config("enumerate", &out);
            c.n = Some(range);
            c.shards = Some(set_threads(shards)?);
            c.validate().map_err(anyhow::Error::msg)?;
            let doc = commands::enumerate(&c, range, depth, Execution::Parallel)?;
            Ok((c, doc))
        }
        Command::Gadgets { out } => {
            let c = base_config("gadgets", &out);
            let doc = commands::gadgets(&c)?;
            Ok((c, doc))
        }
        Command::Appendix { n_max, out } => {
            let c = base_config("appendix", &out);
            let doc = commands::appendix(&c, n_max)?;
            Ok((c, doc))
        }
        Command::Witnesses { seed, samples, out } => {
            let c = base_config("witnesses", &out);
            let doc = commands::witnesses(&c, seed, samples)?;
            Ok((c, doc))
        }
    }
}

fn write_report(config: &RunConfig, doc: &Document) -> anyhow::Result<()> {
    let mut sink: Box<dyn Write> = match &config.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| anyhow::anyhow!("creating {}: {e}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match config.format {
        Format::Json => render::write_json(doc, &mut sink)?,
        Format::Csv => render::write_csv(doc, &mut sink)?,
        Format::Text => render::write_text(doc, &mut sink)?,
    }
    sink.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let (config, doc) = match run(cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = write_report(&config, &doc) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if doc.passed() {
        ExitCode::SUCCESS
    } else {
        if config.output.is_some() || config.format != Format::Text {
            eprintln!("{} violations", doc.violations.len());
        }
        ExitCode::from(1)
    }
}
