//! The seven community-aware centrality measures, each a function of the
//! graph, a partition and the per-node degree split.

use crate::error::{Error, Result};
use crate::graph::{core_decomposition, edge_filtered_graphs, Graph};
use crate::measure::{CentralityVector, CommunityAware, Measure};
use crate::partition::{degree_split, DegreeSplit, Partition};

/// Tunables for the parameterized community-aware measures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommunityConfig {
    /// Mixing weight between intra and inter core numbers.
    pub kshell_delta: f64,
    /// Scale constant of Comm centrality.
    pub comm_r: f64,
    /// Logarithm base of the mediator entropy.
    pub log_base: f64,
    /// Report |MV| instead of the signed modularity vitality.
    pub mv_absolute: bool,
}

impl Default for CommunityConfig {
    fn default() -> Self {
        CommunityConfig {
            kshell_delta: 0.5,
            comm_r: 1.0,
            log_base: std::f64::consts::E,
            mv_absolute: false,
        }
    }
}

impl CommunityConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.kshell_delta) {
            return Err(Error::InvalidConfig(format!(
                "k-shell delta must lie in [0,1], got {}",
                self.kshell_delta
            )));
        }
        if !(self.comm_r > 0.0 && self.comm_r.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "comm scale R must be positive, got {}",
                self.comm_r
            )));
        }
        if !(self.log_base > 1.0 && self.log_base.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "entropy log base must exceed 1, got {}",
                self.log_base
            )));
        }
        Ok(())
    }
}

/// Precomputed view shared by all seven measures: the degree split plus the
/// per-community inter-link proportion and each node's count of distinct
/// neighboring communities.
pub struct CommunityContext<'a> {
    pub graph: &'a Graph,
    pub partition: &'a Partition,
    pub split: DegreeSplit,
    community_mu: Vec<f64>,
    nnc: Vec<usize>,
}

impl<'a> CommunityContext<'a> {
    pub fn new(graph: &'a Graph, partition: &'a Partition) -> Result<CommunityContext<'a>> {
        let split = degree_split(graph, partition)?;
        let nc = partition.community_count();
        let mut inter = vec![0usize; nc];
        let mut total = vec![0usize; nc];
        for i in 0..graph.node_count() {
            let c = partition.community_of(i);
            inter[c] += split.k_inter(i);
            total[c] += graph.degree(i);
        }
        let community_mu = (0..nc)
            .map(|c| {
                if total[c] == 0 {
                    0.0
                } else {
                    inter[c] as f64 / total[c] as f64
                }
            })
            .collect();
        let nnc = (0..graph.node_count())
            .map(|i| {
                let own = partition.community_of(i);
                split
                    .neighbor_communities(i)
                    .iter()
                    .filter(|&&(c, _)| c != own)
                    .count()
            })
            .collect();
        Ok(CommunityContext {
            graph,
            partition,
            split,
            community_mu,
            nnc,
        })
    }

    /// Proportion of the community's degree that crosses its boundary.
    pub fn community_mu(&self, community: usize) -> f64 {
        self.community_mu[community]
    }

    /// Number of distinct foreign communities among the node's neighbors.
    pub fn nnc(&self, node: usize) -> usize {
        self.nnc[node]
    }
}

fn vector(measure: CommunityAware, scores: Vec<f64>) -> Result<CentralityVector> {
    CentralityVector::new(Measure::CommunityAware(measure), scores)
}

/// `|c_k| * k_intra + |NNC| * k_inter`: community size weights the hub term,
/// the neighboring-community count weights the bridge term.
pub fn community_hub_bridge(ctx: &CommunityContext) -> Result<CentralityVector> {
    let p = ctx.partition;
    let scores = (0..ctx.graph.node_count())
        .map(|i| {
            let size = p.size(p.community_of(i)) as f64;
            size * ctx.split.k_intra(i) as f64 + ctx.nnc(i) as f64 * ctx.split.k_inter(i) as f64
        })
        .collect();
    vector(CommunityAware::Chb, scores)
}

/// `1 - sum_c (k_ic / k_i)^2`.
pub fn participation_coefficient(ctx: &CommunityContext) -> Result<CentralityVector> {
    let mut scores = Vec::with_capacity(ctx.graph.node_count());
    for i in 0..ctx.graph.node_count() {
        let k = ctx.graph.degree(i) as f64;
        if k == 0.0 {
            return Err(Error::IsolatedNode(ctx.graph.label(i).to_string()));
        }
        let sum: f64 = ctx
            .split
            .neighbor_communities(i)
            .iter()
            .map(|&(_, kic)| {
                let frac = kic as f64 / k;
                frac * frac
            })
            .sum();
        scores.push(1.0 - sum);
    }
    vector(CommunityAware::Pc, scores)
}

/// `H_i * k_i / 2m` with the two-term entropy of the intra/inter link
/// proportions; `0 log 0 := 0`.
pub fn community_based_mediator(
    ctx: &CommunityContext,
    cfg: &CommunityConfig,
) -> Result<CentralityVector> {
    cfg.validate()?;
    let ln_base = cfg.log_base.ln();
    let two_m = 2.0 * ctx.graph.edge_count() as f64;
    if two_m == 0.0 {
        return Err(Error::EdgelessGraph("community_based_mediator"));
    }
    let plogp = |p: f64| if p == 0.0 { 0.0 } else { p * p.ln() / ln_base };
    let mut scores = Vec::with_capacity(ctx.graph.node_count());
    for i in 0..ctx.graph.node_count() {
        let k = ctx.graph.degree(i) as f64;
        if k == 0.0 {
            return Err(Error::IsolatedNode(ctx.graph.label(i).to_string()));
        }
        let rho_intra = ctx.split.k_intra(i) as f64 / k;
        let rho_inter = ctx.split.k_inter(i) as f64 / k;
        let h = -plogp(rho_intra) - plogp(rho_inter);
        scores.push(h * k / two_m);
    }
    vector(CommunityAware::Cbm, scores)
}

/// `(1 + mu_c) * chi + (1 - mu_c) * phi^2` where chi and phi scale the
/// intra/inter degrees by their community maxima (and R). A community with
/// no intra or no inter links contributes 0 to the respective term.
pub fn comm_centrality(ctx: &CommunityContext, cfg: &CommunityConfig) -> Result<CentralityVector> {
    cfg.validate()?;
    let p = ctx.partition;
    let nc = p.community_count();
    let mut max_intra = vec![0usize; nc];
    let mut max_inter = vec![0usize; nc];
    for i in 0..ctx.graph.node_count() {
        let c = p.community_of(i);
        max_intra[c] = max_intra[c].max(ctx.split.k_intra(i));
        max_inter[c] = max_inter[c].max(ctx.split.k_inter(i));
    }
    let r = cfg.comm_r;
    let mut scores = Vec::with_capacity(ctx.graph.node_count());
    for i in 0..ctx.graph.node_count() {
        let c = p.community_of(i);
        let mu = ctx.community_mu(c);
        let chi = if max_intra[c] == 0 {
            0.0
        } else {
            r * ctx.split.k_intra(i) as f64 / max_intra[c] as f64
        };
        let phi = if max_inter[c] == 0 {
            0.0
        } else {
            r * ctx.split.k_inter(i) as f64 / max_inter[c] as f64
        };
        scores.push((1.0 + mu) * chi + (1.0 - mu) * phi * phi);
    }
    vector(CommunityAware::Comm, scores)
}

/// Signed modularity loss when a node is deleted while the rest of the
/// assignment stays fixed: `M(G) - M(G_i)`. Local hubs come out positive,
/// bridges negative.
pub fn modularity_vitality(
    ctx: &CommunityContext,
    cfg: &CommunityConfig,
) -> Result<CentralityVector> {
    cfg.validate()?;
    let g = ctx.graph;
    let p = ctx.partition;
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::EdgelessGraph("modularity_vitality"));
    }
    let nc = p.community_count();
    let mut l = vec![0.0f64; nc];
    let mut d = vec![0.0f64; nc];
    for i in 0..g.node_count() {
        d[p.community_of(i)] += g.degree(i) as f64;
    }
    for (i, j) in g.edges() {
        let ci = p.community_of(i);
        if ci == p.community_of(j) {
            l[ci] += 1.0;
        }
    }
    let mf = m as f64;
    let l_total: f64 = l.iter().sum();
    let d2_total: f64 = d.iter().map(|x| x * x).sum();
    let base_q = l_total / mf - d2_total / (4.0 * mf * mf);

    let mut scores = Vec::with_capacity(g.node_count());
    for i in 0..g.node_count() {
        let k = g.degree(i) as f64;
        let m_removed = mf - k;
        if m_removed == 0.0 {
            return Err(Error::EmptiesEdgeSet(g.label(i).to_string()));
        }
        let ci = p.community_of(i);
        // only the node's own community and its neighbors' communities
        // change; adjust the two global sums by those deltas
        let l_removed = l_total - ctx.split.k_intra(i) as f64;
        let mut d2_removed = d2_total;
        let mut own_adjusted = false;
        for &(c, kic) in ctx.split.neighbor_communities(i) {
            let dc = d[c];
            let d_new = if c == ci {
                own_adjusted = true;
                dc - kic as f64 - k
            } else {
                dc - kic as f64
            };
            d2_removed += d_new * d_new - dc * dc;
        }
        if !own_adjusted {
            let dc = d[ci];
            let d_new = dc - k;
            d2_removed += d_new * d_new - dc * dc;
        }
        let q_removed = l_removed / m_removed - d2_removed / (4.0 * m_removed * m_removed);
        let mv = base_q - q_removed;
        scores.push(if cfg.mv_absolute { mv.abs() } else { mv });
    }
    vector(CommunityAware::Mv, scores)
}

/// `sum_c k_ic * (n_c / N)`.
pub fn community_based_centrality(ctx: &CommunityContext) -> Result<CentralityVector> {
    let p = ctx.partition;
    let n = ctx.graph.node_count() as f64;
    let scores = (0..ctx.graph.node_count())
        .map(|i| {
            ctx.split
                .neighbor_communities(i)
                .iter()
                .map(|&(c, kic)| kic as f64 * p.size(c) as f64 / n)
                .sum()
        })
        .collect();
    vector(CommunityAware::Cbc, scores)
}

/// `delta * core_intra + (1 - delta) * core_inter`, core numbers taken on
/// the intra-only and inter-only edge graphs (all nodes retained).
pub fn kshell_with_community(
    ctx: &CommunityContext,
    cfg: &CommunityConfig,
) -> Result<CentralityVector> {
    cfg.validate()?;
    let (intra, inter) = edge_filtered_graphs(ctx.graph, ctx.partition)?;
    let core_intra = core_decomposition(&intra);
    let core_inter = core_decomposition(&inter);
    let delta = cfg.kshell_delta;
    let scores = (0..ctx.graph.node_count())
        .map(|i| {
            delta * core_intra.core[i] as f64 + (1.0 - delta) * core_inter.core[i] as f64
        })
        .collect();
    vector(CommunityAware::Ksc, scores)
}

/// Every community-aware measure in catalog order.
pub fn all_community(
    ctx: &CommunityContext,
    cfg: &CommunityConfig,
) -> Result<Vec<CentralityVector>> {
    CommunityAware::ALL
        .into_iter()
        .map(|m| community_by_name(m, ctx, cfg))
        .collect()
}

/// Dispatch a single community-aware measure.
pub fn community_by_name(
    measure: CommunityAware,
    ctx: &CommunityContext,
    cfg: &CommunityConfig,
) -> Result<CentralityVector> {
    match measure {
        CommunityAware::Chb => community_hub_bridge(ctx),
        CommunityAware::Pc => participation_coefficient(ctx),
        CommunityAware::Cbm => community_based_mediator(ctx, cfg),
        CommunityAware::Comm => comm_centrality(ctx, cfg),
        CommunityAware::Mv => modularity_vitality(ctx, cfg),
        CommunityAware::Cbc => community_based_centrality(ctx),
        CommunityAware::Ksc => kshell_with_community(ctx, cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_subgraph, parse_edgelist};
    use crate::partition::modularity;
    use approx::assert_relative_eq;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn two_triangles_bridge() -> Graph {
        parse_edgelist("a b\nb c\na c\nd e\ne f\nd f\nc d\n", "test").unwrap().0
    }

    fn split_partition() -> Partition {
        Partition::from_assignment(vec![0, 0, 0, 1, 1, 1]).unwrap()
    }

    fn cfg() -> CommunityConfig {
        CommunityConfig::default()
    }

    #[test]
    fn context_mu_and_nnc() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        assert_relative_eq!(ctx.community_mu(0), 1.0 / 7.0, epsilon = 1e-15);
        assert_relative_eq!(ctx.community_mu(1), 1.0 / 7.0, epsilon = 1e-15);
        let c = g.index_of("c").unwrap();
        let a = g.index_of("a").unwrap();
        assert_eq!(ctx.nnc(c), 1);
        assert_eq!(ctx.nnc(a), 0);
    }

    #[test]
    fn chb_examples() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = community_hub_bridge(&ctx).unwrap().scores;
        assert_eq!(scores[g.index_of("a").unwrap()], 6.0);
        assert_eq!(scores[g.index_of("c").unwrap()], 7.0);
    }

    #[test]
    fn chb_single_community_is_size_times_degree() {
        let g = two_triangles_bridge();
        let p = Partition::trivial(6).unwrap();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = community_hub_bridge(&ctx).unwrap().scores;
        for (i, &s) in scores.iter().enumerate() {
            assert_eq!(s, 6.0 * g.degree(i) as f64);
        }
    }

    #[test]
    fn pc_examples() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = participation_coefficient(&ctx).unwrap().scores;
        assert_relative_eq!(scores[g.index_of("a").unwrap()], 0.0, epsilon = 1e-15);
        assert_relative_eq!(
            scores[g.index_of("c").unwrap()],
            4.0 / 9.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn pc_uniform_spread() {
        // center in its own community, each leaf in a distinct one
        let g = Graph::from_index_pairs(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let p = Partition::from_assignment(vec![0, 1, 2, 3, 4]).unwrap();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = participation_coefficient(&ctx).unwrap().scores;
        assert_relative_eq!(scores[0], 1.0 - 0.25, epsilon = 1e-15);
    }

    #[test]
    fn pc_zero_iff_no_external_links() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = participation_coefficient(&ctx).unwrap().scores;
        for (i, &s) in scores.iter().enumerate() {
            assert_eq!(s == 0.0, ctx.split.k_inter(i) == 0, "node {i}");
        }
    }

    #[test]
    fn cbm_examples() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = community_based_mediator(&ctx, &cfg()).unwrap().scores;
        assert_relative_eq!(scores[g.index_of("a").unwrap()], 0.0, epsilon = 1e-15);
        let h = -(2.0 / 3.0) * (2.0f64 / 3.0).ln() - (1.0 / 3.0) * (1.0f64 / 3.0).ln();
        assert_relative_eq!(
            scores[g.index_of("c").unwrap()],
            h * 3.0 / 14.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn cbm_equal_split_reduces_to_scaled_degree() {
        // square with a 2+2 partition: every node has one link in, one out
        let g = Graph::from_index_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let p = Partition::from_assignment(vec![0, 0, 1, 1]).unwrap();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let natural = community_based_mediator(&ctx, &cfg()).unwrap().scores;
        for v in natural {
            assert_relative_eq!(v, 2.0f64.ln() * 2.0 / 8.0, epsilon = 1e-12);
        }
        let base2 = CommunityConfig {
            log_base: 2.0,
            ..cfg()
        };
        for v in community_based_mediator(&ctx, &base2).unwrap().scores {
            assert_relative_eq!(v, 2.0 / 8.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn comm_examples() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = comm_centrality(&ctx, &cfg()).unwrap().scores;
        assert_relative_eq!(scores[g.index_of("c").unwrap()], 2.0, epsilon = 1e-12);
        assert_relative_eq!(
            scores[g.index_of("a").unwrap()],
            8.0 / 7.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn comm_single_community_pure_hub_term() {
        let g = two_triangles_bridge();
        let p = Partition::trivial(6).unwrap();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = comm_centrality(&ctx, &cfg()).unwrap().scores;
        for (i, &s) in scores.iter().enumerate() {
            assert_relative_eq!(s, g.degree(i) as f64 / 3.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn comm_scale_constant_shifts_rankings() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let r2 = CommunityConfig {
            comm_r: 2.0,
            ..cfg()
        };
        let scores = comm_centrality(&ctx, &r2).unwrap().scores;
        let c = g.index_of("c").unwrap();
        // chi doubles, phi^2 quadruples
        assert_relative_eq!(scores[c], (8.0 / 7.0) * 2.0 + (6.0 / 7.0) * 4.0, epsilon = 1e-12);
    }

    #[test]
    fn mv_triangle_single_community_is_zero() {
        let g = Graph::from_index_pairs(3, &[(0, 1), (1, 2), (0, 2)]);
        let p = Partition::trivial(3).unwrap();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        for v in modularity_vitality(&ctx, &cfg()).unwrap().scores {
            assert_relative_eq!(v, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn mv_two_triangle_fixture() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = modularity_vitality(&ctx, &cfg()).unwrap().scores;
        let base = 5.0 / 14.0;
        assert_relative_eq!(
            scores[g.index_of("a").unwrap()],
            base - 0.22,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            scores[g.index_of("c").unwrap()],
            base - 0.375,
            epsilon = 1e-12
        );
    }

    #[test]
    fn mv_absolute_toggle() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let signed = modularity_vitality(&ctx, &cfg()).unwrap().scores;
        let abs_cfg = CommunityConfig {
            mv_absolute: true,
            ..cfg()
        };
        let unsigned = modularity_vitality(&ctx, &abs_cfg).unwrap().scores;
        for (s, u) in signed.iter().zip(&unsigned) {
            assert_eq!(s.abs(), *u);
        }
        assert!(signed.iter().any(|&v| v < 0.0));
    }

    #[test]
    fn mv_rejects_edge_emptying_removal() {
        let g = Graph::from_index_pairs(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let p = Partition::trivial(5).unwrap();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        assert!(matches!(
            modularity_vitality(&ctx, &cfg()),
            Err(Error::EmptiesEdgeSet(_))
        ));
    }

    #[test]
    fn mv_matches_naive_recomputation() {
        let mut rng = StdRng::seed_from_u64(11);
        for case in 0..300 {
            let n = rng.gen_range(4..=10);
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.45) {
                        pairs.push((i, j));
                    }
                }
            }
            let g = Graph::from_index_pairs(n, &pairs);
            if g.edge_count() < 2 {
                continue;
            }
            // every node must leave at least one edge behind
            if (0..n).any(|i| g.degree(i) == g.edge_count()) {
                continue;
            }
            let assignment: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let p = Partition::from_assignment(assignment.clone()).unwrap();
            let ctx = CommunityContext::new(&g, &p).unwrap();
            let fast = modularity_vitality(&ctx, &cfg()).unwrap().scores;
            let base = modularity(&g, &p).unwrap();
            for (i, &fast_i) in fast.iter().enumerate() {
                let kept: Vec<usize> = (0..n).filter(|&v| v != i).collect();
                let sub = induced_subgraph(&g, &kept).unwrap();
                let sub_assignment: Vec<usize> =
                    kept.iter().map(|&v| p.community_of(v)).collect();
                let sub_p = Partition::from_assignment(sub_assignment).unwrap();
                let naive = base - modularity(&sub, &sub_p).unwrap();
                assert!(
                    (fast_i - naive).abs() < 1e-12,
                    "case {case} node {i}: {fast_i} vs {naive}"
                );
            }
        }
    }

    #[test]
    fn cbc_examples() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = community_based_centrality(&ctx).unwrap().scores;
        assert_relative_eq!(scores[g.index_of("c").unwrap()], 1.5, epsilon = 1e-15);
        assert_relative_eq!(scores[g.index_of("a").unwrap()], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn cbc_single_community_equals_degree() {
        let g = two_triangles_bridge();
        let p = Partition::trivial(6).unwrap();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = community_based_centrality(&ctx).unwrap().scores;
        for (i, &s) in scores.iter().enumerate() {
            assert_eq!(s, g.degree(i) as f64);
        }
    }

    #[test]
    fn ksc_examples() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = kshell_with_community(&ctx, &cfg()).unwrap().scores;
        assert_relative_eq!(scores[g.index_of("a").unwrap()], 1.0, epsilon = 1e-15);
        assert_relative_eq!(scores[g.index_of("c").unwrap()], 1.5, epsilon = 1e-15);
    }

    #[test]
    fn ksc_delta_boundaries() {
        let g = two_triangles_bridge();
        let p = split_partition();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let (intra, inter) = edge_filtered_graphs(&g, &p).unwrap();
        let delta1 = CommunityConfig {
            kshell_delta: 1.0,
            ..cfg()
        };
        let delta0 = CommunityConfig {
            kshell_delta: 0.0,
            ..cfg()
        };
        let s1 = kshell_with_community(&ctx, &delta1).unwrap().scores;
        let s0 = kshell_with_community(&ctx, &delta0).unwrap().scores;
        let ci = core_decomposition(&intra);
        let ce = core_decomposition(&inter);
        for i in 0..6 {
            assert_eq!(s1[i], ci.core[i] as f64);
            assert_eq!(s0[i], ce.core[i] as f64);
        }
    }

    #[test]
    fn ksc_single_community_halves_core() {
        let g = two_triangles_bridge();
        let p = Partition::trivial(6).unwrap();
        let ctx = CommunityContext::new(&g, &p).unwrap();
        let scores = kshell_with_community(&ctx, &cfg()).unwrap().scores;
        let cores = core_decomposition(&g);
        for (i, &s) in scores.iter().enumerate() {
            assert_eq!(s, 0.5 * cores.core[i] as f64);
        }
    }

    #[test]
    fn scalar_formula_oracle_random_graphs() {
        // re-evaluate every formula from raw counts, node by node
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..200 {
            let n = rng.gen_range(3..=12);
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.4) {
                        pairs.push((i, j));
                    }
                }
            }
            let g = Graph::from_index_pairs(n, &pairs);
            if g.edge_count() == 0 || (0..n).any(|i| g.degree(i) == 0) {
                continue;
            }
            let assignment: Vec<usize> = (0..n).map(|_| rng.gen_range(0..4)).collect();
            let p = Partition::from_assignment(assignment).unwrap();
            let ctx = CommunityContext::new(&g, &p).unwrap();

            let chb = community_hub_bridge(&ctx).unwrap().scores;
            let pc = participation_coefficient(&ctx).unwrap().scores;
            let cbc = community_based_centrality(&ctx).unwrap().scores;
            let cbm = community_based_mediator(&ctx, &cfg()).unwrap().scores;
            let comm = comm_centrality(&ctx, &cfg()).unwrap().scores;

            let nc = p.community_count();
            let two_m = 2.0 * g.edge_count() as f64;
            for i in 0..n {
                let ci = p.community_of(i);
                let k = g.degree(i) as f64;
                let kic = |c: usize| -> f64 {
                    g.neighbors(i)
                        .iter()
                        .filter(|&&j| p.community_of(j) == c)
                        .count() as f64
                };
                let k_intra = kic(ci);
                let k_inter = k - k_intra;

                let foreign = (0..nc)
                    .filter(|&c| c != ci && kic(c) > 0.0)
                    .count() as f64;
                assert_eq!(chb[i], p.size(ci) as f64 * k_intra + foreign * k_inter);

                let spread: f64 = (0..nc).map(|c| (kic(c) / k) * (kic(c) / k)).sum();
                assert!((pc[i] - (1.0 - spread)).abs() < 1e-12);

                let weighted: f64 = (0..nc).map(|c| kic(c) * p.size(c) as f64 / n as f64).sum();
                assert!((cbc[i] - weighted).abs() < 1e-12);

                let mut h = 0.0;
                for rho in [k_intra / k, k_inter / k] {
                    if rho > 0.0 {
                        h -= rho * rho.ln();
                    }
                }
                assert!((cbm[i] - h * k / two_m).abs() < 1e-12);

                let members = p.members(ci);
                let max_intra = members.iter().map(|&j| kic_of(&g, &p, j, ci)).fold(0.0, f64::max);
                let max_inter = members
                    .iter()
                    .map(|&j| g.degree(j) as f64 - kic_of(&g, &p, j, ci))
                    .fold(0.0, f64::max);
                let chi = if max_intra == 0.0 { 0.0 } else { k_intra / max_intra };
                let phi = if max_inter == 0.0 { 0.0 } else { k_inter / max_inter };
                let mu = ctx.community_mu(ci);
                let expected = (1.0 + mu) * chi + (1.0 - mu) * phi * phi;
                assert!((comm[i] - expected).abs() < 1e-12);
            }
        }
    }

    fn kic_of(g: &Graph, p: &Partition, i: usize, c: usize) -> f64 {
        g.neighbors(i)
            .iter()
            .filter(|&&j| p.community_of(j) == c)
            .count() as f64
    }

    #[test]
    fn all_measures_permutation_equivariant() {
        let g = two_triangles_bridge();
        let p = split_partition();
        // same structure, reversed insertion order and flipped community ids
        let h = parse_edgelist("f e\nf d\ne d\nc d\nc a\nc b\na b\n", "test").unwrap().0;
        let q_raw: Vec<usize> = (0..6)
            .map(|i| {
                let label = h.label(i);
                let orig = g.index_of(label).unwrap();
                1 - p.community_of(orig)
            })
            .collect();
        let q = Partition::from_assignment(q_raw).unwrap();

        let ctx_g = CommunityContext::new(&g, &p).unwrap();
        let ctx_h = CommunityContext::new(&h, &q).unwrap();
        let sg = all_community(&ctx_g, &cfg()).unwrap();
        let sh = all_community(&ctx_h, &cfg()).unwrap();
        for (vg, vh) in sg.iter().zip(&sh) {
            assert_eq!(vg.measure, vh.measure);
            for i in 0..6 {
                let j = h.index_of(g.label(i)).unwrap();
                assert_relative_eq!(vg.scores[i], vh.scores[j], epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn nnc_invariants_random() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..50 {
            let n = rng.gen_range(3..=12);
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.4) {
                        pairs.push((i, j));
                    }
                }
            }
            let g = Graph::from_index_pairs(n, &pairs);
            let p = Partition::from_assignment((0..n).map(|_| rng.gen_range(0..3)).collect())
                .unwrap();
            let ctx = CommunityContext::new(&g, &p).unwrap();
            for i in 0..n {
                assert!(ctx.nnc(i) <= g.degree(i).min(p.community_count().saturating_sub(1)));
                assert_eq!(ctx.nnc(i) == 0, ctx.split.k_inter(i) == 0);
            }
            for c in 0..p.community_count() {
                let mu = ctx.community_mu(c);
                assert!((0.0..=1.0).contains(&mu));
            }
        }
    }
}
