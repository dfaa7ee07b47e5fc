//! Centrality correlation toolkit: classical and community-aware node
//! centralities, network topology descriptors and a rank-correlation
//! pipeline over edge-list corpora.

pub mod classical;
pub mod community;
pub mod error;
pub mod graph;
pub mod measure;
pub mod partition;
pub mod pipeline;
pub mod stats;
pub mod topology;

pub use classical::{
    all_classical, betweenness, classical_by_name, closeness, degree, diffusion_degree, katz,
    katz_attenuation, laplacian, leverage, max_neighborhood_component, pagerank,
    spectral_radius_estimate, subgraph, ClassicalConfig,
};
pub use community::{
    all_community, comm_centrality, community_based_centrality, community_based_mediator,
    community_by_name, community_hub_bridge, kshell_with_community, modularity_vitality,
    participation_coefficient, CommunityConfig, CommunityContext,
};
pub use error::{Error, Result};
pub use measure::{CentralityVector, Classical, CommunityAware, Measure};
pub use graph::{
    bfs_distances, connected_components, core_decomposition, edge_filtered_graphs,
    induced_subgraph, largest_connected_component, load_edgelist, parse_edgelist,
    CoreDecomposition, DistanceMatrix, Graph, LoadReport,
};
pub use partition::{
    degree_split, load_partition, louvain, modularity, read_partition_records, save_partition,
    DegreeSplit, Partition,
};
pub use pipeline::{
    analyze_network, batch, consistency_matrix, emit_reports, format_sig6, pair_summary,
    regression_table, write_manifest, BatchOutcome, ConsistencyResult, CorrelationRecord,
    NetworkReport, PairSummaryRow, PartitionSource, RegressionRow, RunConfig, SkippedNetwork,
    DEFINITION_VERSIONS, FEATURE_NAMES,
};
pub use stats::{
    kendall_tau, ols_fit, pairwise_network_consistency, pearson, student_t_two_sided_p, summarize,
    tau_b_from_counts, DistributionSummary, OlsFit,
};
pub use topology::{
    fit_degree_exponent, macroscopic, mesoscopic, mesoscopic_with, CommunityMean,
    MacroscopicSummary, MesoscopicSummary,
};
