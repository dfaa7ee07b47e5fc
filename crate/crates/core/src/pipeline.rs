//! Corpus orchestration: run detection, centralities, correlations and
//! topology per network, aggregate cross-network tables and write the CSV
//! and manifest outputs. All emission is deterministic: networks sorted by
//! id, measures in catalog order, floats at six significant digits.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::classical::{classical_by_name, katz_attenuation, ClassicalConfig};
use crate::community::{community_by_name, CommunityConfig, CommunityContext};
use crate::error::{Error, Result};
use crate::graph::{largest_connected_component, load_edgelist, Graph};
use crate::measure::{CentralityVector, Classical, CommunityAware, Measure};
use crate::partition::{louvain, read_partition_records, Partition};
use crate::stats::{
    kendall_tau, ols_fit, pairwise_network_consistency, summarize, DistributionSummary, OlsFit,
};
use crate::topology::{macroscopic, mesoscopic_with, CommunityMean, MacroscopicSummary,
    MesoscopicSummary};

/// Version tags for every definition choice that is not forced by a formula,
/// so output consumers can detect when a convention changes.
pub const DEFINITION_VERSIONS: [(&str, &str); 12] = [
    ("component-reduction", "largest-connected/1"),
    ("partition", "louvain-seeded/1"),
    ("modularity", "newman-girvan/1"),
    ("rank-correlation", "kendall-tau-b/1"),
    ("quantiles", "linear-interpolation/1"),
    ("regression-p", "two-sided-t/1"),
    ("katz-default-s", "0.9-over-spectral-radius/1"),
    ("degree-exponent", "discrete-mle-ks-xmin/1"),
    ("odf-family", "per-community-mean/1"),
    ("embeddedness", "node-mean-intra-ratio/1"),
    ("hub-dominance", "max-intra-over-size-minus-one/1"),
    ("internal-distance", "community-mean-geodesic/1"),
];

/// Topology feature names in report order.
pub const FEATURE_NAMES: [&str; 16] = [
    "density",
    "transitivity",
    "assortativity",
    "avg_distance",
    "diameter",
    "efficiency",
    "gamma",
    "modularity",
    "mu",
    "internal_distance",
    "internal_density",
    "max_odf",
    "avg_odf",
    "flake_odf",
    "embeddedness",
    "hub_dominance",
];

/// Where node-to-community assignments come from.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum PartitionSource {
    /// Seeded Louvain on each network.
    #[default]
    Louvain,
    /// One `<network-id>.part` file per network in this directory.
    ExternalDir(PathBuf),
    /// A single partition file (single-network runs).
    ExternalFile(PathBuf),
}

/// Everything a corpus run needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub corpus_dir: PathBuf,
    pub partition_source: PartitionSource,
    pub seed: u64,
    pub classical: ClassicalConfig,
    pub community: CommunityConfig,
    pub community_mean: CommunityMean,
    pub output_dir: PathBuf,
    /// Classical measures to run, catalog order. Empty means none.
    pub classical_measures: Vec<Classical>,
    /// Community-aware measures to run, catalog order. Empty means none.
    pub community_measures: Vec<CommunityAware>,
    pub parallel: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            corpus_dir: PathBuf::from("."),
            partition_source: PartitionSource::Louvain,
            seed: 0,
            classical: ClassicalConfig::default(),
            community: CommunityConfig::default(),
            community_mean: CommunityMean::default(),
            output_dir: PathBuf::from("out"),
            classical_measures: Classical::ALL.to_vec(),
            community_measures: CommunityAware::ALL.to_vec(),
            parallel: true,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        self.classical.validate()?;
        self.community.validate()
    }

    /// Restrict to the named measures, keeping catalog order.
    pub fn set_measures(&mut self, names: &[String]) -> Result<()> {
        let mut classical = Vec::new();
        let mut community = Vec::new();
        for name in names {
            match name.parse::<Measure>()? {
                Measure::Classical(m) => {
                    if !classical.contains(&m) {
                        classical.push(m);
                    }
                }
                Measure::CommunityAware(m) => {
                    if !community.contains(&m) {
                        community.push(m);
                    }
                }
            }
        }
        self.classical_measures = Classical::ALL
            .into_iter()
            .filter(|m| classical.contains(m))
            .collect();
        self.community_measures = CommunityAware::ALL
            .into_iter()
            .filter(|m| community.contains(m))
            .collect();
        Ok(())
    }
}

/// One classical-by-community rank correlation. `tau` is absent when either
/// score vector is constant (and they are not identical), which makes the
/// coefficient undefined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationRecord {
    pub classical: Classical,
    pub community_aware: CommunityAware,
    pub tau: Option<f64>,
}

/// Everything computed for one network.
#[derive(Debug, Clone)]
pub struct NetworkReport {
    pub id: String,
    /// Node count before component reduction.
    pub original_node_count: usize,
    pub node_count: usize,
    pub edge_count: usize,
    pub community_count: usize,
    /// Partition-file records naming nodes outside the analyzed component.
    pub partition_records_dropped: usize,
    pub single_community: bool,
    pub labels: Vec<String>,
    pub centralities: Vec<CentralityVector>,
    pub correlations: Vec<CorrelationRecord>,
    pub macroscopic: MacroscopicSummary,
    pub mesoscopic: MesoscopicSummary,
    /// Distribution of each community-aware measure's correlations.
    pub beta_summaries: Vec<(CommunityAware, Option<DistributionSummary>)>,
    /// Mean correlation per community-aware measure, the regression response.
    pub beta_mean_tau: Vec<(CommunityAware, Option<f64>)>,
    /// Katz attenuation actually used, when Katz ran.
    pub katz_s: Option<f64>,
    pub seed: u64,
}

impl NetworkReport {
    pub fn feature(&self, name: &str) -> Option<f64> {
        match name {
            "density" => Some(self.macroscopic.density),
            "transitivity" => Some(self.macroscopic.transitivity),
            "assortativity" => self.macroscopic.assortativity,
            "avg_distance" => Some(self.macroscopic.avg_distance),
            "diameter" => Some(self.macroscopic.diameter),
            "efficiency" => Some(self.macroscopic.efficiency),
            "gamma" => self.macroscopic.degree_exponent,
            "modularity" => Some(self.mesoscopic.modularity),
            "mu" => Some(self.mesoscopic.mixing_parameter),
            "internal_distance" => self.mesoscopic.internal_distance,
            "internal_density" => self.mesoscopic.internal_density,
            "max_odf" => Some(self.mesoscopic.max_odf),
            "avg_odf" => Some(self.mesoscopic.avg_odf),
            "flake_odf" => Some(self.mesoscopic.flake_odf),
            "embeddedness" => Some(self.mesoscopic.embeddedness),
            "hub_dominance" => self.mesoscopic.hub_dominance,
            _ => None,
        }
    }
}

/// Correlation of two score vectors. Identical vectors correlate perfectly
/// even when constant (equal scores are equal rankings); otherwise constant
/// input leaves the coefficient undefined.
fn score_tau(x: &[f64], y: &[f64]) -> Option<f64> {
    if x == y {
        return Some(1.0);
    }
    kendall_tau(x, y).ok()
}

fn resolve_partition(id: &str, g: &Graph, cfg: &RunConfig) -> Result<(Partition, usize)> {
    let records = match &cfg.partition_source {
        PartitionSource::Louvain => {
            let (p, _) = louvain(g, cfg.seed)?;
            return Ok((p, 0));
        }
        PartitionSource::ExternalFile(path) => read_partition_records(path)?,
        PartitionSource::ExternalDir(dir) => {
            let path = dir.join(format!("{id}.part"));
            if !path.is_file() {
                return Err(Error::MissingPartitionFile(id.to_string()));
            }
            read_partition_records(&path)?
        }
    };
    // records may cover nodes outside the analyzed component; drop them
    let (kept, dropped): (Vec<_>, Vec<_>) = records
        .into_iter()
        .partition(|(label, _)| g.index_of(label).is_some());
    let p = Partition::from_labeled(g, &kept)?;
    Ok((p, dropped.len()))
}

/// Run the full single-network analysis: component reduction, partition,
/// centralities, correlations and topology.
pub fn analyze_network(id: &str, g: &Graph, cfg: &RunConfig) -> Result<NetworkReport> {
    analyze_inner(id, g, cfg).map_err(|e| e.for_network(id))
}

fn analyze_inner(id: &str, g: &Graph, cfg: &RunConfig) -> Result<NetworkReport> {
    cfg.validate()?;
    let original_node_count = g.node_count();
    let lcc = largest_connected_component(g)?;
    let (partition, partition_records_dropped) = resolve_partition(id, &lcc, cfg)?;

    let katz_s = if cfg.classical_measures.contains(&Classical::Katz) {
        Some(katz_attenuation(&lcc, &cfg.classical)?)
    } else {
        None
    };

    let mut centralities = Vec::new();
    for &m in &cfg.classical_measures {
        centralities.push(classical_by_name(m, &lcc, &cfg.classical)?);
    }
    let ctx = CommunityContext::new(&lcc, &partition)?;
    for &m in &cfg.community_measures {
        centralities.push(community_by_name(m, &ctx, &cfg.community)?);
    }

    let scores_of = |measure: Measure| {
        centralities
            .iter()
            .find(|v| v.measure == measure)
            .map(|v| v.scores.as_slice())
            .expect("measure computed above")
    };

    let mut correlations = Vec::new();
    for &alpha in &cfg.classical_measures {
        let x = scores_of(Measure::Classical(alpha));
        for &beta in &cfg.community_measures {
            let y = scores_of(Measure::CommunityAware(beta));
            correlations.push(CorrelationRecord {
                classical: alpha,
                community_aware: beta,
                tau: score_tau(x, y),
            });
        }
    }

    let mut beta_summaries = Vec::new();
    let mut beta_mean_tau = Vec::new();
    for &beta in &cfg.community_measures {
        let taus: Vec<f64> = correlations
            .iter()
            .filter(|r| r.community_aware == beta)
            .filter_map(|r| r.tau)
            .collect();
        let summary = summarize(&taus).ok();
        beta_mean_tau.push((beta, summary.map(|s| s.mean)));
        beta_summaries.push((beta, summary));
    }

    let macro_summary = macroscopic(&lcc)?;
    let meso_summary = mesoscopic_with(&lcc, &partition, cfg.community_mean)?;

    Ok(NetworkReport {
        id: id.to_string(),
        original_node_count,
        node_count: lcc.node_count(),
        edge_count: lcc.edge_count(),
        community_count: partition.community_count(),
        partition_records_dropped,
        single_community: partition.community_count() == 1,
        labels: lcc.labels().to_vec(),
        centralities,
        correlations,
        macroscopic: macro_summary,
        mesoscopic: meso_summary,
        beta_summaries,
        beta_mean_tau,
        katz_s,
        seed: cfg.seed,
    })
}

/// A network that failed, with the reason.
#[derive(Debug, Clone, Serialize)]
pub struct SkippedNetwork {
    pub id: String,
    pub error: String,
}

/// Batch results: successful reports sorted by id plus the failures.
#[derive(Debug, Clone)]
pub struct BatchOutcome {
    pub reports: Vec<NetworkReport>,
    pub skipped: Vec<SkippedNetwork>,
}

const EDGELIST_EXTENSIONS: [&str; 4] = ["edges", "edgelist", "txt", "tsv"];

fn list_corpus(dir: &Path) -> Result<Vec<(String, PathBuf)>> {
    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut found = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let path = entry.path();
        if !path.is_file() {
            continue;
        }
        let Some(ext) = path.extension().and_then(|e| e.to_str()) else {
            continue;
        };
        if !EDGELIST_EXTENSIONS.contains(&ext) {
            continue;
        }
        let Some(stem) = path.file_stem().and_then(|s| s.to_str()) else {
            continue;
        };
        if stem.starts_with('.') {
            continue;
        }
        found.push((stem.to_string(), path));
    }
    found.sort();
    for pair in found.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(Error::InvalidConfig(format!(
                "duplicate network id `{}` in corpus",
                pair[0].0
            )));
        }
    }
    if found.is_empty() {
        return Err(Error::EmptyCorpus(dir.to_path_buf()));
    }
    Ok(found)
}

/// Analyze every edge-list file in the corpus directory. Individual network
/// failures are collected, not fatal; an empty corpus is an error.
pub fn batch(cfg: &RunConfig) -> Result<BatchOutcome> {
    cfg.validate()?;
    let networks = list_corpus(&cfg.corpus_dir)?;

    let run_one = |(id, path): &(String, PathBuf)| -> (String, Result<NetworkReport>) {
        let result = load_edgelist(path)
            .map_err(|e| e.for_network(id))
            .and_then(|(g, _)| analyze_network(id, &g, cfg));
        (id.clone(), result)
    };

    let mut results: Vec<(String, Result<NetworkReport>)> = if cfg.parallel {
        networks.par_iter().map(run_one).collect()
    } else {
        networks.iter().map(run_one).collect()
    };
    results.sort_by(|a, b| a.0.cmp(&b.0));

    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for (id, result) in results {
        match result {
            Ok(report) => reports.push(report),
            Err(Error::Network { id, source }) => skipped.push(SkippedNetwork {
                id,
                error: source.to_string(),
            }),
            Err(other) => skipped.push(SkippedNetwork {
                id,
                error: other.to_string(),
            }),
        }
    }
    Ok(BatchOutcome { reports, skipped })
}

/// Cross-network mean and spread of one measure pair.
#[derive(Debug, Clone, Copy)]
pub struct PairSummaryRow {
    pub classical: Classical,
    pub community_aware: CommunityAware,
    pub mean_tau: Option<f64>,
    pub std_tau: Option<f64>,
    pub n_networks: usize,
}

/// Per-pair mean and standard deviation of tau across networks.
pub fn pair_summary(reports: &[NetworkReport]) -> Vec<PairSummaryRow> {
    let mut rows = Vec::new();
    for alpha in Classical::ALL {
        for beta in CommunityAware::ALL {
            let taus: Vec<f64> = reports
                .iter()
                .flat_map(|r| &r.correlations)
                .filter(|c| c.classical == alpha && c.community_aware == beta)
                .filter_map(|c| c.tau)
                .collect();
            let summary = summarize(&taus).ok();
            rows.push(PairSummaryRow {
                classical: alpha,
                community_aware: beta,
                mean_tau: summary.map(|s| s.mean),
                std_tau: summary.map(|s| s.std),
                n_networks: taus.len(),
            });
        }
    }
    rows
}

/// One regression of a community-aware measure's mean tau on a topology
/// feature. `fit` is absent when fewer than 3 networks have both values or
/// the feature is constant across them.
#[derive(Debug, Clone)]
pub struct RegressionRow {
    pub community_aware: CommunityAware,
    pub feature: &'static str,
    pub fit: Option<OlsFit>,
    pub n: usize,
}

impl RegressionRow {
    pub fn significance(&self) -> &'static str {
        match &self.fit {
            Some(f) if f.p_value <= 0.01 => "P*",
            Some(f) if f.p_value <= 0.05 => "P",
            _ => "",
        }
    }
}

/// Regress each community-aware measure's per-network mean tau on each
/// topology feature across the corpus.
pub fn regression_table(reports: &[NetworkReport]) -> Vec<RegressionRow> {
    let mut rows = Vec::new();
    for beta in CommunityAware::ALL {
        for feature in FEATURE_NAMES {
            let mut xs = Vec::new();
            let mut ys = Vec::new();
            for report in reports {
                let x = report.feature(feature);
                let y = report
                    .beta_mean_tau
                    .iter()
                    .find(|(b, _)| *b == beta)
                    .and_then(|(_, v)| *v);
                if let (Some(x), Some(y)) = (x, y) {
                    xs.push(x);
                    ys.push(y);
                }
            }
            rows.push(RegressionRow {
                community_aware: beta,
                feature,
                fit: ols_fit(&xs, &ys).ok(),
                n: xs.len(),
            });
        }
    }
    rows
}

/// Network-by-network agreement of correlation profiles: the Pearson matrix
/// over per-network tau vectors, restricted to pairs defined on every
/// network. `None` with a note when no usable matrix exists.
pub struct ConsistencyResult {
    pub matrix: Option<Vec<Vec<f64>>>,
    pub pairs_used: usize,
    pub note: Option<String>,
}

pub fn consistency_matrix(reports: &[NetworkReport]) -> ConsistencyResult {
    let Some(first) = reports.first() else {
        return ConsistencyResult {
            matrix: None,
            pairs_used: 0,
            note: Some("no networks".to_string()),
        };
    };
    let pair_count = first.correlations.len();
    let mask: Vec<usize> = (0..pair_count)
        .filter(|&i| reports.iter().all(|r| r.correlations[i].tau.is_some()))
        .collect();
    let vectors: Vec<Vec<f64>> = reports
        .iter()
        .map(|r| mask.iter().map(|&i| r.correlations[i].tau.unwrap()).collect())
        .collect();
    match pairwise_network_consistency(&vectors) {
        Ok(matrix) => ConsistencyResult {
            matrix: Some(matrix),
            pairs_used: mask.len(),
            note: None,
        },
        Err(e) => ConsistencyResult {
            matrix: None,
            pairs_used: mask.len(),
            note: Some(e.to_string()),
        },
    }
}

/// Format with six significant digits, trimming trailing zeros. Large and
/// tiny magnitudes switch to scientific notation.
pub fn format_sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{v:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("float in scientific form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..=5).contains(&exp) {
        let m = mantissa.trim_end_matches('0').trim_end_matches('.');
        return format!("{m}e{exp}");
    }
    let decimals = (5 - exp).max(0) as usize;
    let fixed = format!("{v:.decimals$}");
    if fixed.contains('.') {
        fixed.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        fixed
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_string(), format_sig6)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| Error::io(&path, e))?;
    Ok(path)
}

#[derive(Serialize)]
struct ManifestNetwork {
    id: String,
    nodes: usize,
    edges: usize,
    communities: usize,
    original_nodes: usize,
    partition_records_dropped: usize,
    single_community: bool,
    katz_s: Option<f64>,
}

#[derive(Serialize)]
struct ManifestConsistency {
    pairs_used: usize,
    summary: Option<DistributionSummary>,
    note: Option<String>,
}

#[derive(Serialize)]
struct ManifestConfig {
    partition_source: String,
    community_mean: String,
    pagerank_damping: f64,
    diffusion_varpi: f64,
    kshell_delta: f64,
    comm_r: f64,
    mediator_log_base: f64,
    mv_absolute: bool,
    measures: Vec<String>,
}

#[derive(Serialize)]
struct Manifest {
    seed: u64,
    config: ManifestConfig,
    definition_versions: BTreeMap<&'static str, &'static str>,
    networks: Vec<ManifestNetwork>,
    skipped: Vec<SkippedNetwork>,
    consistency: Option<ManifestConsistency>,
    notes: Vec<String>,
}

fn build_manifest(outcome: &BatchOutcome, cfg: &RunConfig) -> Manifest {
    let consistency = if outcome.reports.is_empty() {
        None
    } else {
        let result = consistency_matrix(&outcome.reports);
        let summary = result.matrix.as_ref().and_then(|m| {
            let mut off_diagonal = Vec::new();
            for (i, row) in m.iter().enumerate() {
                for &v in &row[i + 1..] {
                    off_diagonal.push(v);
                }
            }
            summarize(&off_diagonal).ok()
        });
        Some(ManifestConsistency {
            pairs_used: result.pairs_used,
            summary,
            note: result.note,
        })
    };

    let measures: Vec<String> = cfg
        .classical_measures
        .iter()
        .map(|m| m.name().to_string())
        .chain(cfg.community_measures.iter().map(|m| m.name().to_string()))
        .collect();

    Manifest {
        seed: cfg.seed,
        config: ManifestConfig {
            partition_source: match &cfg.partition_source {
                PartitionSource::Louvain => "louvain".to_string(),
                PartitionSource::ExternalDir(d) => format!("external-dir:{}", d.display()),
                PartitionSource::ExternalFile(f) => format!("external-file:{}", f.display()),
            },
            community_mean: match cfg.community_mean {
                CommunityMean::Unweighted => "unweighted".to_string(),
                CommunityMean::SizeWeighted => "size-weighted".to_string(),
            },
            pagerank_damping: cfg.classical.pagerank_d,
            diffusion_varpi: cfg.classical.diffusion_varpi,
            kshell_delta: cfg.community.kshell_delta,
            comm_r: cfg.community.comm_r,
            mediator_log_base: cfg.community.log_base,
            mv_absolute: cfg.community.mv_absolute,
            measures,
        },
        definition_versions: DEFINITION_VERSIONS.into_iter().collect(),
        networks: outcome
            .reports
            .iter()
            .map(|r| ManifestNetwork {
                id: r.id.clone(),
                nodes: r.node_count,
                edges: r.edge_count,
                communities: r.community_count,
                original_nodes: r.original_node_count,
                partition_records_dropped: r.partition_records_dropped,
                single_community: r.single_community,
                katz_s: r.katz_s,
            })
            .collect(),
        skipped: outcome.skipped.clone(),
        consistency,
        notes: vec![
            "analysis runs on the largest connected component of each network".to_string(),
            "all 10 x 7 (classical, community-aware) measure pairs are correlated, \
             70 per network; summaries that count 35 halve this by treating the \
             pair grid as unordered, which does not apply here"
                .to_string(),
            "tau is NA when a score vector is constant and not identical to its \
             partner; NA values are excluded from means, summaries and regressions"
                .to_string(),
        ],
    }
}

/// Write `manifest.json` describing the run.
pub fn write_manifest(outcome: &BatchOutcome, cfg: &RunConfig) -> Result<PathBuf> {
    fs::create_dir_all(&cfg.output_dir).map_err(|e| Error::io(&cfg.output_dir, e))?;
    let manifest = build_manifest(outcome, cfg);
    let json = serde_json::to_string_pretty(&manifest)
        .map_err(|e| Error::InvalidConfig(format!("manifest serialization failed: {e}")))?;
    write_file(&cfg.output_dir, "manifest.json", &format!("{json}\n"))
}

/// Write the six CSV reports plus the manifest. Requires at least one
/// successful report.
pub fn emit_reports(outcome: &BatchOutcome, cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    if outcome.reports.is_empty() {
        return Err(Error::InsufficientData {
            what: "emit_reports",
            min: 1,
            got: 0,
        });
    }
    fs::create_dir_all(&cfg.output_dir).map_err(|e| Error::io(&cfg.output_dir, e))?;
    let reports = &outcome.reports;
    let mut written = Vec::new();

    let mut centrality = String::from("network,node,measure,score\n");
    for r in reports {
        for v in &r.centralities {
            for (i, score) in v.scores.iter().enumerate() {
                centrality.push_str(&format!(
                    "{},{},{},{}\n",
                    csv_field(&r.id),
                    csv_field(&r.labels[i]),
                    v.measure.name(),
                    format_sig6(*score)
                ));
            }
        }
    }
    written.push(write_file(&cfg.output_dir, "centrality.csv", &centrality)?);

    let mut correlations = String::from("network,classical,community_aware,tau\n");
    for r in reports {
        for c in &r.correlations {
            correlations.push_str(&format!(
                "{},{},{},{}\n",
                csv_field(&r.id),
                c.classical.name(),
                c.community_aware.name(),
                fmt_opt(c.tau)
            ));
        }
    }
    written.push(write_file(&cfg.output_dir, "correlations.csv", &correlations)?);

    let mut topology = String::from("network,feature,value\n");
    for r in reports {
        for feature in FEATURE_NAMES {
            topology.push_str(&format!(
                "{},{},{}\n",
                csv_field(&r.id),
                feature,
                fmt_opt(r.feature(feature))
            ));
        }
    }
    written.push(write_file(&cfg.output_dir, "topology.csv", &topology)?);

    let mut pairs = String::from("classical,community_aware,mean_tau,std_tau,n_networks\n");
    for row in pair_summary(reports) {
        pairs.push_str(&format!(
            "{},{},{},{},{}\n",
            row.classical.name(),
            row.community_aware.name(),
            fmt_opt(row.mean_tau),
            fmt_opt(row.std_tau),
            row.n_networks
        ));
    }
    written.push(write_file(&cfg.output_dir, "pair_summary.csv", &pairs)?);

    let mut consistency = String::from("network_a,network_b,pearson\n");
    if let Some(matrix) = consistency_matrix(reports).matrix {
        for (i, row) in matrix.iter().enumerate() {
            for (j, &value) in row.iter().enumerate() {
                consistency.push_str(&format!(
                    "{},{},{}\n",
                    csv_field(&reports[i].id),
                    csv_field(&reports[j].id),
                    format_sig6(value)
                ));
            }
        }
    }
    written.push(write_file(&cfg.output_dir, "consistency.csv", &consistency)?);

    let mut regression =
        String::from("community_aware,feature,slope,intercept,r_squared,p_value,n,significance\n");
    for row in regression_table(reports) {
        regression.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.community_aware.name(),
            row.feature,
            fmt_opt(row.fit.as_ref().map(|f| f.slope)),
            fmt_opt(row.fit.as_ref().map(|f| f.intercept)),
            fmt_opt(row.fit.as_ref().map(|f| f.r_squared)),
            fmt_opt(row.fit.as_ref().map(|f| f.p_value)),
            row.n,
            row.significance()
        ));
    }
    written.push(write_file(&cfg.output_dir, "regression.csv", &regression)?);

    written.push(write_manifest(outcome, cfg)?);
    Ok(written)
}
