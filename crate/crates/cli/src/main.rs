use std::path::PathBuf;
use std::sync::OnceLock;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use netcentral_core::{
    analyze_network, batch, emit_reports, load_edgelist, write_manifest, BatchOutcome,
    PartitionSource, RunConfig, DEFINITION_VERSIONS,
};

fn long_version() -> &'static str {
    static VERSION: OnceLock<String> = OnceLock::new();
    VERSION.get_or_init(|| {
        let mut s = String::from(env!("CARGO_PKG_VERSION"));
        s.push_str("\ndefinition versions:");
        for (name, version) in DEFINITION_VERSIONS {
            s.push_str(&format!("\n  {name} {version}"));
        }
        s
    })
}

#[derive(Parser)]
#[command(
    name = "netcentral",
    about = "Classical and community-aware centrality correlation over edge-list networks",
    version = env!("CARGO_PKG_VERSION"),
    long_version = long_version()
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one edge-list network and write its reports
    Analyze {
        /// Whitespace-separated edge list, one edge per line
        edgelist: PathBuf,
        /// Node-to-community file; omitted means seeded Louvain
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Seed for community detection
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Katz attenuation factor; omitted means 0.9 / spectral radius
        #[arg(long = "katz-s", allow_negative_numbers = true)]
        katz_s: Option<f64>,
        /// Output directory
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Analyze every edge-list file in a directory
    Batch {
        /// Directory of edge-list files (.edges, .edgelist, .txt, .tsv)
        corpus_dir: PathBuf,
        /// Directory with one <network-id>.part file per network
        #[arg(long)]
        partitions: Option<PathBuf>,
        /// Seed for community detection
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Comma-separated measure names; default is all seventeen
        #[arg(long, value_delimiter = ',')]
        measures: Option<Vec<String>>,
    },
}

fn run_analyze(
    edgelist: PathBuf,
    partition: Option<PathBuf>,
    seed: u64,
    katz_s: Option<f64>,
    out: PathBuf,
) -> Result<()> {
    let id = edgelist
        .file_stem()
        .and_then(|s| s.to_str())
        .map(str::to_string)
        .with_context(|| format!("cannot derive a network id from {}", edgelist.display()))?;
    let mut cfg = RunConfig {
        corpus_dir: edgelist
            .parent()
            .map_or_else(|| PathBuf::from("."), |p| p.to_path_buf()),
        partition_source: partition.map_or(PartitionSource::Louvain, PartitionSource::ExternalFile),
        seed,
        output_dir: out,
        ..RunConfig::default()
    };
    cfg.classical.katz_s = katz_s;

    let (g, load) = load_edgelist(&edgelist)?;
    if load.self_loops_dropped + load.duplicates_dropped > 0 {
        eprintln!(
            "note: dropped {} self-loops and {} duplicate edges",
            load.self_loops_dropped, load.duplicates_dropped
        );
    }
    let report = analyze_network(&id, &g, &cfg)?;
    println!(
        "{id}: {} nodes, {} edges, {} communities",
        report.node_count, report.edge_count, report.community_count
    );
    let outcome = BatchOutcome {
        reports: vec![report],
        skipped: Vec::new(),
    };
    let written = emit_reports(&outcome, &cfg)?;
    println!("wrote {} files to {}", written.len(), cfg.output_dir.display());
    Ok(())
}

fn run_batch(
    corpus_dir: PathBuf,
    partitions: Option<PathBuf>,
    seed: u64,
    out: PathBuf,
    measures: Option<Vec<String>>,
) -> Result<()> {
    let mut cfg = RunConfig {
        corpus_dir,
        partition_source: partitions.map_or(PartitionSource::Louvain, PartitionSource::ExternalDir),
        seed,
        output_dir: out,
        ..RunConfig::default()
    };
    if let Some(names) = measures {
        cfg.set_measures(&names)?;
    }

    let outcome = batch(&cfg)?;
    for skipped in &outcome.skipped {
        eprintln!("skipped {}: {}", skipped.id, skipped.error);
    }
    if outcome.reports.is_empty() {
        write_manifest(&outcome, &cfg)?;
        bail!(
            "all {} networks failed; see {}",
            outcome.skipped.len(),
            cfg.output_dir.join("manifest.json").display()
        );
    }
    let written = emit_reports(&outcome, &cfg)?;
    println!(
        "analyzed {} networks ({} skipped), wrote {} files to {}",
        outcome.reports.len(),
        outcome.skipped.len(),
        written.len(),
        cfg.output_dir.display()
    );
    Ok(())
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            edgelist,
            partition,
            seed,
            katz_s,
            out,
        } => run_analyze(edgelist, partition, seed, katz_s, out),
        Command::Batch {
            corpus_dir,
            partitions,
            seed,
            out,
            measures,
        } => run_batch(corpus_dir, partitions, seed, out, measures),
    }
}
