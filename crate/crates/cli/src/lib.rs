//! Command-line front end: `encode`, `decode`, `inspect`, `bench` and `gen`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use nhuff::bench::{render_report, run_bench, BenchConfig, DecoderVariant, ReportFormat};
use nhuff::corpusgen::{generate, CorpusSpec};
use nhuff::{decode_file_with, encode_file, inspect, DecoderKind, TreeDegree};

#[derive(Parser, Debug)]
#[command(
    name = "nhuff",
    version,
    about = "n-ary Huffman compression, tree degrees 2 through 16"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compress IN into the container file OUT.
    Encode {
        #[arg(long, value_parser = parse_degree)]
        degree: TreeDegree,
        input: PathBuf,
        output: PathBuf,
    },
    /// Restore the original bytes of container IN into OUT.
    Decode {
        #[arg(long, value_enum, default_value = "fsm")]
        decoder: DecoderArg,
        input: PathBuf,
        output: PathBuf,
    },
    /// Print header fields, code table, WPL and compression ratio of a container.
    Inspect { input: PathBuf },
    /// Measure every requested degree on IN and print a report.
    Bench {
        #[arg(long, value_delimiter = ',', value_parser = parse_degree,
              default_value = "2,3,4,5,6,7,8,16")]
        degrees: Vec<TreeDegree>,
        #[arg(long, default_value_t = nhuff::bench::DEFAULT_REPETITIONS,
              value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
        #[arg(long, value_enum, default_value = "md")]
        format: FormatArg,
        #[arg(long, value_enum, default_value = "both")]
        decoder: VariantArg,
        input: PathBuf,
    },
    /// Write a random English-like word corpus.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        size: u64,
        output: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DecoderArg {
    Reference,
    Fsm,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VariantArg {
    Reference,
    Fsm,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Csv,
    Md,
}

fn parse_degree(s: &str) -> std::result::Result<TreeDegree, String> {
    let n: u8 = s.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
    TreeDegree::new(n).map_err(|e| e.to_string())
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Encode {
            degree,
            input,
            output,
        } => {
            let file = encode_file(&read(&input)?, degree)
                .with_context(|| format!("encoding {}", input.display()))?;
            write(&output, &file)
        }
        Command::Decode {
            decoder,
            input,
            output,
        } => {
            let kind = match decoder {
                DecoderArg::Reference => DecoderKind::Reference,
                DecoderArg::Fsm => DecoderKind::Fsm,
            };
            let message = decode_file_with(&read(&input)?, kind)
                .with_context(|| format!("decoding {}", input.display()))?;
            write(&output, &message)
        }
        Command::Inspect { input } => {
            let info = inspect(&read(&input)?)
                .with_context(|| format!("inspecting {}", input.display()))?;
            write!(out, "{info}")?;
            Ok(())
        }
        Command::Bench {
            degrees,
            reps,
            format,
            decoder,
            input,
        } => {
            let cfg = BenchConfig {
                degrees,
                repetitions: reps,
                decoder: match decoder {
                    VariantArg::Reference => DecoderVariant::Reference,
                    VariantArg::Fsm => DecoderVariant::Fsm,
                    VariantArg::Both => DecoderVariant::Both,
                },
                input: read(&input)?,
            };
            let reports = run_bench(&cfg)?;
            let format = match format {
                FormatArg::Csv => ReportFormat::Csv,
                FormatArg::Md => ReportFormat::Markdown,
            };
            write!(out, "{}", render_report(&reports, format))?;
            Ok(())
        }
        Command::Gen { seed, size, output } => {
            let size = usize::try_from(size).context("corpus size does not fit in memory")?;
            let corpus = generate(&CorpusSpec::english(seed, size))?;
            write(&output, &corpus)
        }
    }
}

/// Parses `argv` (program name first) and runs the subcommand, writing
/// normal output to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}
