//! Per-degree measurement of compression ratio, WPL and codec timing.
//!
//! Timing uses [`Instant`] (monotonic), runs single-threaded, excludes file
//! I/O and reports the mean over the configured repetitions after one
//! untimed warm-up run.

use std::fmt::Write as _;
use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

use crate::container::{build_container, decode_file_with, encode_file, Container, DecoderKind};
use crate::error::{Error, Result};
use crate::huffman::{build_tree, histogram, weighted_path_length, TreeDegree};

pub const DEFAULT_REPETITIONS: u32 = 100;

const BYTES_PER_MB: f64 = 1024.0 * 1024.0;
const BYTES_PER_KB: f64 = 1024.0;
/// Cap on the run count when doubling to escape a zero-duration reading.
const MAX_RUNS: u32 = 1 << 20;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DecoderVariant {
    Reference,
    Fsm,
    #[default]
    Both,
}

impl DecoderVariant {
    fn includes(self, kind: DecoderKind) -> bool {
        matches!(
            (self, kind),
            (DecoderVariant::Both, _)
                | (DecoderVariant::Reference, DecoderKind::Reference)
                | (DecoderVariant::Fsm, DecoderKind::Fsm)
        )
    }
}

impl FromStr for DecoderVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reference" => Ok(Self::Reference),
            "fsm" => Ok(Self::Fsm),
            "both" => Ok(Self::Both),
            other => Err(Error::InvalidArgument(format!(
                "unknown decoder variant {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub degrees: Vec<TreeDegree>,
    pub repetitions: u32,
    pub decoder: DecoderVariant,
    pub input: Vec<u8>,
}

impl BenchConfig {
    /// The eight benchmark degrees, 100 repetitions, both decoders.
    pub fn new(input: Vec<u8>) -> Self {
        Self {
            degrees: TreeDegree::BENCHMARK_SET
                .iter()
                .map(|&n| TreeDegree::new(n).expect("benchmark degrees are valid"))
                .collect(),
            repetitions: DEFAULT_REPETITIONS,
            decoder: DecoderVariant::Both,
            input,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeReport {
    pub degree: u8,
    pub original_size: usize,
    pub container_size: usize,
    pub payload_size: usize,
    pub compression_ratio: f64,
    pub wpl: u64,
    pub encode_time_s: f64,
    pub decode_reference_time_s: Option<f64>,
    pub decode_fsm_time_s: Option<f64>,
}

impl DegreeReport {
    fn throughput(&self, seconds: f64) -> f64 {
        self.original_size as f64 / BYTES_PER_MB / seconds
    }

    pub fn encode_throughput(&self) -> f64 {
        self.throughput(self.encode_time_s)
    }

    pub fn decode_reference_throughput(&self) -> Option<f64> {
        self.decode_reference_time_s.map(|t| self.throughput(t))
    }

    pub fn decode_fsm_throughput(&self) -> Option<f64> {
        self.decode_fsm_time_s.map(|t| self.throughput(t))
    }

    pub fn compressed_kb(&self) -> f64 {
        self.container_size as f64 / BYTES_PER_KB
    }
}

pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<DegreeReport>> {
    if cfg.input.is_empty() {
        return Err(Error::InvalidArgument("benchmark input is empty".into()));
    }
    if cfg.degrees.is_empty() || cfg.repetitions == 0 {
        return Err(Error::InvalidArgument(
            "benchmark needs at least one degree and one repetition".into(),
        ));
    }
    let input = cfg.input.as_slice();
    let hist = histogram(input);

    cfg.degrees
        .iter()
        .map(|&degree| {
            let wpl = weighted_path_length(&build_tree(&hist, degree)?);
            let container = build_container(input, degree)?;
            let file = container.to_bytes()?;

            // warm-up doubles as a correctness check
            for kind in [DecoderKind::Reference, DecoderKind::Fsm] {
                if cfg.decoder.includes(kind) && decode_file_with(&file, kind)? != input {
                    return Err(Error::RoundTripMismatch(degree.get()));
                }
            }

            let encode_time_s = mean_seconds(cfg.repetitions, || {
                black_box(encode_file(black_box(input), degree)?);
                Ok(())
            })?;
            let decode_time = |kind: DecoderKind| -> Result<Option<f64>> {
                if !cfg.decoder.includes(kind) {
                    return Ok(None);
                }
                // table parse, decoder construction and payload decode
                mean_seconds(cfg.repetitions, || {
                    black_box(Container::parse(black_box(&file))?.decode(kind)?);
                    Ok(())
                })
                .map(Some)
            };
            let decode_reference_time_s = decode_time(DecoderKind::Reference)?;
            let decode_fsm_time_s = decode_time(DecoderKind::Fsm)?;

            Ok(DegreeReport {
                degree: degree.get(),
                original_size: input.len(),
                container_size: file.len(),
                payload_size: container.payload.len(),
                compression_ratio: input.len() as f64 / file.len() as f64,
                wpl,
                encode_time_s,
                decode_reference_time_s,
                decode_fsm_time_s,
            })
        })
        .collect()
}

/// Mean wall time of `f` over `repetitions` runs. If the clock reports zero
/// elapsed time the run count is doubled and the measurement repeated.
fn mean_seconds(repetitions: u32, mut f: impl FnMut() -> Result<()>) -> Result<f64> {
    let mut runs = repetitions;
    loop {
        let start = Instant::now();
        for _ in 0..runs {
            f()?;
        }
        let elapsed = start.elapsed();
        if !elapsed.is_zero() || runs >= MAX_RUNS {
            return Ok(elapsed.as_secs_f64() / f64::from(runs));
        }
        runs = runs.saturating_mul(2).min(MAX_RUNS);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "md" | "markdown" => Ok(Self::Markdown),
            other => Err(Error::InvalidArgument(format!(
                "unknown report format {other:?}"
            ))),
        }
    }
}

pub const CSV_COLUMNS: [&str; 11] = [
    "degree",
    "compression_ratio",
    "compressed_bytes",
    "compressed_kb",
    "wpl",
    "encode_time_s",
    "encode_mb_s",
    "decode_reference_time_s",
    "decode_reference_mb_s",
    "decode_fsm_time_s",
    "decode_fsm_mb_s",
];

const MARKDOWN_COLUMNS: [&str; 10] = [
    "Tree Degree",
    "Compression Ratio",
    "Compressed Size (KB)",
    "WPL",
    "Encode Time (s)",
    "Encode Throughput (MB/s)",
    "Decode Time, reference (s)",
    "Decode Throughput, reference (MB/s)",
    "Decode Time, FSM (s)",
    "Decode Throughput, FSM (MB/s)",
];

/// Renders one row per report. Times use 4 decimals, ratios 3, throughputs 2.
pub fn render_report(reports: &[DegreeReport], format: ReportFormat) -> String {
    let time = |t: Option<f64>| t.map(|v| format!("{v:.4}"));
    let rate = |t: Option<f64>| t.map(|v| format!("{v:.2}"));
    let mut out = String::new();
    match format {
        ReportFormat::Csv => {
            out.push_str(&CSV_COLUMNS.join(","));
            out.push('\n');
            for r in reports {
                let cells = [
                    r.degree.to_string(),
                    format!("{:.3}", r.compression_ratio),
                    r.container_size.to_string(),
                    format!("{:.0}", r.compressed_kb()),
                    r.wpl.to_string(),
                    format!("{:.4}", r.encode_time_s),
                    format!("{:.2}", r.encode_throughput()),
                    time(r.decode_reference_time_s).unwrap_or_default(),
                    rate(r.decode_reference_throughput()).unwrap_or_default(),
                    time(r.decode_fsm_time_s).unwrap_or_default(),
                    rate(r.decode_fsm_throughput()).unwrap_or_default(),
                ];
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        ReportFormat::Markdown => {
            let _ = writeln!(out, "| {} |", MARKDOWN_COLUMNS.join(" | "));
            let _ = writeln!(out, "|{}", "---|".repeat(MARKDOWN_COLUMNS.len()));
            let dash = || "-".to_string();
            for r in reports {
                let cells = [
                    format!("{}-ary", r.degree),
                    format!("{:.3}", r.compression_ratio),
                    format!("{:.0}", r.compressed_kb()),
                    r.wpl.to_string(),
                    format!("{:.4}", r.encode_time_s),
                    format!("{:.2}", r.encode_throughput()),
                    time(r.decode_reference_time_s).unwrap_or_else(dash),
                    rate(r.decode_reference_throughput()).unwrap_or_else(dash),
                    time(r.decode_fsm_time_s).unwrap_or_else(dash),
                    rate(r.decode_fsm_throughput()).unwrap_or_else(dash),
                ];
                let _ = writeln!(out, "| {} |", cells.join(" | "));
            }
        }
    }
    out
}
