//! Macroscopic and mesoscopic network descriptors used as regression
//! predictors: density, transitivity, assortativity, distances, efficiency,
//! a discrete power-law degree exponent, and the community-quality family
//! (mixing parameter, ODF variants, embeddedness, hub dominance).

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, induced_subgraph, Graph};
use crate::partition::{degree_split, modularity, Partition};

/// Whole-graph structural features. Assortativity is undefined on graphs
/// with no degree variance and the power-law fit can fail; both are `None`
/// in that case and excluded from regressions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MacroscopicSummary {
    pub density: f64,
    pub transitivity: f64,
    pub assortativity: Option<f64>,
    pub avg_distance: f64,
    pub diameter: f64,
    pub efficiency: f64,
    pub degree_exponent: Option<f64>,
}

/// Partition-relative features. Internal distance/density need at least one
/// community of size >= 2 and hub dominance skips singleton communities;
/// they are `None` when no community qualifies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MesoscopicSummary {
    pub modularity: f64,
    pub mixing_parameter: f64,
    pub internal_distance: Option<f64>,
    pub internal_density: Option<f64>,
    pub max_odf: f64,
    pub avg_odf: f64,
    pub flake_odf: f64,
    pub embeddedness: f64,
    pub hub_dominance: Option<f64>,
}

/// How per-community terms are averaged into one summary value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CommunityMean {
    /// Every community counts once.
    #[default]
    Unweighted,
    /// Communities weighted by node count.
    SizeWeighted,
}

fn community_mean(terms: &[(f64, usize)], mode: CommunityMean) -> Option<f64> {
    if terms.is_empty() {
        return None;
    }
    match mode {
        CommunityMean::Unweighted => {
            Some(terms.iter().map(|&(v, _)| v).sum::<f64>() / terms.len() as f64)
        }
        CommunityMean::SizeWeighted => {
            let total: usize = terms.iter().map(|&(_, w)| w).sum();
            Some(
                terms
                    .iter()
                    .map(|&(v, w)| v * w as f64)
                    .sum::<f64>()
                    / total as f64,
            )
        }
    }
}

/// Whole-graph features of a connected graph with at least 3 nodes.
pub fn macroscopic(g: &Graph) -> Result<MacroscopicSummary> {
    let n = g.node_count();
    if n < 3 {
        return Err(Error::InsufficientData {
            what: "macroscopic features",
            min: 3,
            got: n,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected("macroscopic features"));
    }
    let m = g.edge_count() as f64;
    let nf = n as f64;
    let density = 2.0 * m / (nf * (nf - 1.0));

    // triangles: each closed triangle appears once per edge
    let mut closed = 0u64;
    for (i, j) in g.edges() {
        closed += sorted_intersection_size(g.neighbors(i), g.neighbors(j));
    }
    let triads: u64 = (0..n)
        .map(|i| {
            let k = g.degree(i) as u64;
            k * (k - 1) / 2
        })
        .sum();
    let transitivity = if triads == 0 {
        0.0
    } else {
        closed as f64 / triads as f64
    };

    // degree correlation over edge stubs, both orientations
    let mut sx = 0.0;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (i, j) in g.edges() {
        let ki = g.degree(i) as f64;
        let kj = g.degree(j) as f64;
        sx += ki + kj;
        sxx += ki * ki + kj * kj;
        sxy += 2.0 * ki * kj;
    }
    let stubs = 2.0 * m;
    let mean = sx / stubs;
    let var = sxx / stubs - mean * mean;
    let cov = sxy / stubs - mean * mean;
    let assortativity = if var <= 1e-12 { None } else { Some(cov / var) };

    let mut dist_sum = 0u64;
    let mut inv_sum = 0.0f64;
    let mut diameter = 0u32;
    for i in 0..n {
        let d = bfs_distances(g, i)?;
        for v in 0..n {
            if v == i {
                continue;
            }
            let h = d.get(v).ok_or(Error::Disconnected("macroscopic features"))?;
            dist_sum += h as u64;
            inv_sum += 1.0 / h as f64;
            diameter = diameter.max(h);
        }
    }
    let ordered_pairs = nf * (nf - 1.0);
    let avg_distance = dist_sum as f64 / ordered_pairs;
    let efficiency = inv_sum / ordered_pairs;

    let degrees: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let degree_exponent = fit_degree_exponent(&degrees);

    Ok(MacroscopicSummary {
        density,
        transitivity,
        assortativity,
        avg_distance,
        diameter: diameter as f64,
        efficiency,
        degree_exponent,
    })
}

fn sorted_intersection_size(a: &[usize], b: &[usize]) -> u64 {
    let mut count = 0;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Partition-relative features with unweighted community means.
pub fn mesoscopic(g: &Graph, p: &Partition) -> Result<MesoscopicSummary> {
    mesoscopic_with(g, p, CommunityMean::Unweighted)
}

/// Partition-relative features with an explicit community-averaging mode.
pub fn mesoscopic_with(
    g: &Graph,
    p: &Partition,
    mode: CommunityMean,
) -> Result<MesoscopicSummary> {
    let q = modularity(g, p)?;
    let split = degree_split(g, p)?;
    let n = g.node_count();
    let nc = p.community_count();

    let total_degree: usize = (0..n).map(|i| g.degree(i)).sum();
    let total_inter: usize = (0..n).map(|i| split.k_inter(i)).sum();
    let mixing_parameter = total_inter as f64 / total_degree as f64;

    let odf = |i: usize| split.k_inter(i) as f64 / g.degree(i) as f64;

    let mut internal_distance_terms: Vec<(f64, usize)> = Vec::new();
    let mut internal_density_terms: Vec<(f64, usize)> = Vec::new();
    let mut max_odf_terms: Vec<(f64, usize)> = Vec::new();
    let mut avg_odf_terms: Vec<(f64, usize)> = Vec::new();
    let mut flake_terms: Vec<(f64, usize)> = Vec::new();
    let mut hub_terms: Vec<(f64, usize)> = Vec::new();

    for c in 0..nc {
        let members = p.members(c);
        let size = members.len();

        let max_o = members.iter().map(|&i| odf(i)).fold(0.0, f64::max);
        max_odf_terms.push((max_o, size));
        let mean_o = members.iter().map(|&i| odf(i)).sum::<f64>() / size as f64;
        avg_odf_terms.push((mean_o, size));
        let flake = members
            .iter()
            .filter(|&&i| (split.k_intra(i) as f64) < g.degree(i) as f64 / 2.0)
            .count() as f64
            / size as f64;
        flake_terms.push((flake, size));

        if size >= 2 {
            let sub = induced_subgraph(g, members)?;
            let possible = size * (size - 1) / 2;
            internal_density_terms.push((sub.edge_count() as f64 / possible as f64, size));

            let mut sum = 0u64;
            let mut pairs = 0u64;
            for v in 0..size {
                let d = bfs_distances(&sub, v)?;
                for w in 0..size {
                    if w == v {
                        continue;
                    }
                    if let Some(h) = d.get(w) {
                        sum += h as u64;
                        pairs += 1;
                    }
                }
            }
            if pairs > 0 {
                internal_distance_terms.push((sum as f64 / pairs as f64, size));
            }

            let max_intra = members.iter().map(|&i| split.k_intra(i)).max().unwrap_or(0);
            hub_terms.push((max_intra as f64 / (size - 1) as f64, size));
        }
    }

    let embeddedness = (0..n)
        .map(|i| split.k_intra(i) as f64 / g.degree(i) as f64)
        .sum::<f64>()
        / n as f64;

    Ok(MesoscopicSummary {
        modularity: q,
        mixing_parameter,
        internal_distance: community_mean(&internal_distance_terms, mode),
        internal_density: community_mean(&internal_density_terms, mode),
        max_odf: community_mean(&max_odf_terms, mode).unwrap_or(0.0),
        avg_odf: community_mean(&avg_odf_terms, mode).unwrap_or(0.0),
        flake_odf: community_mean(&flake_terms, mode).unwrap_or(0.0),
        embeddedness,
        hub_dominance: community_mean(&hub_terms, mode),
    })
}

/// Hurwitz zeta `sum_{k>=0} (q+k)^(-alpha)` for `alpha > 1`, by direct
/// summation plus an Euler-Maclaurin tail.
fn hurwitz_zeta(alpha: f64, q: f64) -> f64 {
    const DIRECT: usize = 1000;
    let mut sum = 0.0;
    for k in 0..DIRECT {
        sum += (q + k as f64).powf(-alpha);
    }
    let edge = q + DIRECT as f64;
    sum += edge.powf(1.0 - alpha) / (alpha - 1.0);
    sum += 0.5 * edge.powf(-alpha);
    sum += alpha * edge.powf(-alpha - 1.0) / 12.0;
    sum -= alpha * (alpha + 1.0) * (alpha + 2.0) * edge.powf(-alpha - 3.0) / 720.0;
    sum
}

/// Discrete power-law exponent by maximum likelihood, with the lower cutoff
/// chosen to minimize the Kolmogorov-Smirnov distance. Cutoffs whose tail
/// holds fewer than 10 points are not considered; `None` when no cutoff
/// qualifies or the likelihood runs away to a boundary.
pub fn fit_degree_exponent(degrees: &[usize]) -> Option<f64> {
    const MIN_TAIL: usize = 10;
    let mut candidates: Vec<usize> = degrees.iter().copied().filter(|&d| d > 0).collect();
    candidates.sort_unstable();
    candidates.dedup();

    let mut best: Option<(f64, f64)> = None; // (ks, alpha)
    for &xmin in &candidates {
        let tail: Vec<usize> = degrees.iter().copied().filter(|&d| d >= xmin).collect();
        if tail.len() < MIN_TAIL {
            continue;
        }
        let n = tail.len() as f64;
        let sum_ln: f64 = tail.iter().map(|&d| (d as f64).ln()).sum();
        let qf = xmin as f64;
        let nll = |alpha: f64| n * hurwitz_zeta(alpha, qf).ln() + alpha * sum_ln;

        // the log-likelihood is strictly concave in alpha
        let (mut lo, mut hi) = (1.000_001f64, 20.0f64);
        for _ in 0..200 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if nll(m1) < nll(m2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        let alpha = 0.5 * (lo + hi);
        if alpha <= 1.001 || alpha >= 19.5 {
            continue;
        }

        let z = hurwitz_zeta(alpha, qf);
        let mut uniq = tail.clone();
        uniq.sort_unstable();
        uniq.dedup();
        let mut ks = 0.0f64;
        for &x in &uniq {
            let model_survival = hurwitz_zeta(alpha, x as f64) / z;
            let empirical_survival =
                tail.iter().filter(|&&d| d >= x).count() as f64 / n;
            ks = ks.max((model_survival - empirical_survival).abs());
        }
        if best.is_none_or(|(bks, _)| ks < bks) {
            best = Some((ks, alpha));
        }
    }
    best.map(|(_, alpha)| alpha)
}
