use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, ValueEnum};
use ordercert_core::report::{certify, CertificationReport, CertifyOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Certify the cyclic Nakayama algebra Lambda_r, its semiorthogonal
/// decompositions, the local hereditary order and the skew group algebra.
#[derive(Debug, Parser)]
#[command(name = "ordercert", version)]
struct Args {
    /// Number of vertices of the cyclic quiver.
    #[arg(long)]
    r: usize,
    /// Prime modulus; defaults to the smallest prime >= 101 that is 1 mod r.
    #[arg(long)]
    p: Option<u64>,
    /// Resolution and Ext depth; defaults to 2r + 4.
    #[arg(long)]
    depth: Option<usize>,
    /// Ramification data n1,n2,...; defaults to r ones.
    #[arg(long, value_delimiter = ',')]
    data: Option<Vec<usize>>,
    /// Truncation t^N of the order.
    #[arg(long)]
    trunc: Option<usize>,
    /// Seed for the randomized checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random complex pairs for the duality check.
    #[arg(long)]
    serre_pairs: Option<usize>,
    /// Number of random module pairs for the Ext cross-check.
    #[arg(long)]
    cross_pairs: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn render(report: &CertificationReport, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(report)? + "\n",
        Format::Text => report.to_text(),
    })
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };
    let opts = CertifyOptions {
        r: args.r,
        p: args.p,
        depth: args.depth,
        trunc: args.trunc,
        data: args.data.clone(),
        seed: args.seed,
        serre_pairs: args.serre_pairs,
        cross_pairs: args.cross_pairs,
    };
    let params = match opts.resolve() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = certify(&params);
    let written = render(&report, args.format).and_then(|text| match &args.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    for c in report.failures() {
        eprintln!("failed: {} ({})", c.id, c.anchor);
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
