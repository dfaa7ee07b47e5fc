//! The ten classical centrality measures: degree, leverage, Laplacian,
//! diffusion degree, maximum neighborhood component, betweenness, closeness,
//! Katz, PageRank and subgraph centrality.

use std::collections::VecDeque;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, connected_components, induced_subgraph, Graph};
use crate::measure::{CentralityVector, Classical, Measure};

/// Tunables for the parameterized classical measures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalConfig {
    /// Katz attenuation factor; `None` picks `0.9 / lambda_max` per graph.
    pub katz_s: Option<f64>,
    pub pagerank_d: f64,
    pub pagerank_tol: f64,
    /// Propagation probability of the diffusion degree.
    pub diffusion_varpi: f64,
    /// Refuse full eigendecomposition above this many nodes.
    pub subgraph_node_cap: usize,
}

impl Default for ClassicalConfig {
    fn default() -> Self {
        ClassicalConfig {
            katz_s: None,
            pagerank_d: 0.85,
            pagerank_tol: 1e-10,
            diffusion_varpi: 1.0,
            subgraph_node_cap: 25_000,
        }
    }
}

impl ClassicalConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(s) = self.katz_s {
            if !s.is_finite() || s <= 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "katz s must be positive and finite, got {s}"
                )));
            }
        }
        if !(0.0 < self.pagerank_d && self.pagerank_d < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "pagerank damping must lie in (0,1), got {}",
                self.pagerank_d
            )));
        }
        if self.pagerank_tol.is_nan() || self.pagerank_tol <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "pagerank tolerance must be positive, got {}",
                self.pagerank_tol
            )));
        }
        if !(0.0 < self.diffusion_varpi && self.diffusion_varpi <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "diffusion propagation probability must lie in (0,1], got {}",
                self.diffusion_varpi
            )));
        }
        Ok(())
    }
}

fn vector(measure: Classical, scores: Vec<f64>) -> Result<CentralityVector> {
    CentralityVector::new(Measure::Classical(measure), scores)
}

/// Node degree.
pub fn degree(g: &Graph) -> Result<CentralityVector> {
    let scores = (0..g.node_count()).map(|i| g.degree(i) as f64).collect();
    vector(Classical::Degree, scores)
}

/// Mean relative degree advantage over the neighbors:
/// `(1/k_i) * sum_j (k_i - k_j) / (k_i + k_j)`.
pub fn leverage(g: &Graph) -> Result<CentralityVector> {
    let mut scores = Vec::with_capacity(g.node_count());
    for i in 0..g.node_count() {
        let ki = g.degree(i) as f64;
        if ki == 0.0 {
            return Err(Error::IsolatedNode(g.label(i).to_string()));
        }
        let sum: f64 = g
            .neighbors(i)
            .iter()
            .map(|&j| {
                let kj = g.degree(j) as f64;
                (ki - kj) / (ki + kj)
            })
            .sum();
        scores.push(sum / ki);
    }
    vector(Classical::Leverage, scores)
}

/// `k_i^2 + k_i + 2 * sum_{j in N(i)} k_j`.
pub fn laplacian(g: &Graph) -> Result<CentralityVector> {
    let mut scores = Vec::with_capacity(g.node_count());
    for i in 0..g.node_count() {
        let ki = g.degree(i) as f64;
        let neighbor_sum: f64 = g.neighbors(i).iter().map(|&j| g.degree(j) as f64).sum();
        scores.push(ki * ki + ki + 2.0 * neighbor_sum);
    }
    vector(Classical::Laplacian, scores)
}

/// `varpi * k_i + sum_{j in N(i)} varpi * k_j`.
pub fn diffusion_degree(g: &Graph, cfg: &ClassicalConfig) -> Result<CentralityVector> {
    cfg.validate()?;
    let w = cfg.diffusion_varpi;
    let mut scores = Vec::with_capacity(g.node_count());
    for i in 0..g.node_count() {
        let ki = g.degree(i) as f64;
        let neighbor_sum: f64 = g.neighbors(i).iter().map(|&j| g.degree(j) as f64).sum();
        scores.push(w * ki + w * neighbor_sum);
    }
    vector(Classical::Diffusion, scores)
}

/// Size of the largest connected component of the subgraph induced by the
/// node's neighborhood (the node itself excluded).
pub fn max_neighborhood_component(g: &Graph) -> Result<CentralityVector> {
    let mut scores = Vec::with_capacity(g.node_count());
    for i in 0..g.node_count() {
        let nbrs = g.neighbors(i);
        if nbrs.is_empty() {
            scores.push(0.0);
            continue;
        }
        let sub = induced_subgraph(g, nbrs)?;
        let largest = connected_components(&sub)[0].len();
        scores.push(largest as f64);
    }
    vector(Classical::Mnc, scores)
}

/// Brandes betweenness: unordered pairs, endpoints excluded, unnormalized.
pub fn betweenness(g: &Graph) -> Result<CentralityVector> {
    let n = g.node_count();
    let mut bc = vec![0.0f64; n];
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![-1i64; n];
    let mut delta = vec![0.0f64; n];
    let mut queue = VecDeque::with_capacity(n);

    for s in 0..n {
        stack.clear();
        for v in 0..n {
            pred[v].clear();
            sigma[v] = 0.0;
            dist[v] = -1;
            delta[v] = 0.0;
        }
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in g.neighbors(v) {
                if dist[w] < 0 {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    pred[w].push(v);
                }
            }
        }
        while let Some(w) = stack.pop() {
            for &v in &pred[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    // the source loop visits each unordered pair from both endpoints
    for b in &mut bc {
        *b /= 2.0;
    }
    vector(Classical::Betweenness, bc)
}

/// `(N-1) / sum_j d(i,j)`; requires a connected graph.
pub fn closeness(g: &Graph) -> Result<CentralityVector> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::InsufficientData {
            what: "closeness",
            min: 2,
            got: n,
        });
    }
    let mut scores = Vec::with_capacity(n);
    for i in 0..n {
        let d = bfs_distances(g, i)?;
        let mut sum = 0u64;
        for v in 0..n {
            match d.get(v) {
                Some(h) => sum += h as u64,
                None => return Err(Error::Disconnected("closeness")),
            }
        }
        scores.push((n - 1) as f64 / sum as f64);
    }
    vector(Classical::Closeness, scores)
}

/// Dominant-eigenvalue estimate by shifted power iteration (`A + I` avoids
/// oscillation on bipartite graphs).
pub fn spectral_radius_estimate(g: &Graph) -> f64 {
    let n = g.node_count();
    if n == 0 || g.edge_count() == 0 {
        return 0.0;
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut lambda = 0.0f64;
    for _ in 0..5000 {
        // y = (A + I) x
        let mut y = x.clone();
        for (i, yi) in y.iter_mut().enumerate() {
            for &j in g.neighbors(i) {
                *yi += x[j];
            }
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        for v in &mut y {
            *v /= norm;
        }
        let next = norm; // Rayleigh quotient of the unit iterate
        x = y;
        if (next - lambda).abs() <= 1e-12 * next.max(1.0) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    (lambda - 1.0).max(0.0)
}

/// The attenuation factor Katz centrality will use under `cfg`: the
/// configured value (validated against the spectral radius) or the default
/// `0.9 / lambda_max`.
pub fn katz_attenuation(g: &Graph, cfg: &ClassicalConfig) -> Result<f64> {
    cfg.validate()?;
    let lambda = spectral_radius_estimate(g);
    if lambda == 0.0 {
        return Err(Error::EdgelessGraph("katz"));
    }
    let limit = 1.0 / lambda;
    match cfg.katz_s {
        Some(s) if s >= limit => Err(Error::KatzDivergence { s, limit }),
        Some(s) => Ok(s),
        None => Ok(0.9 * limit),
    }
}

/// Katz centrality: row sums of `sum_{p>=1} s^p A^p`, obtained by solving
/// `(I - sA) x = sA·1` by conjugate gradient to residual below `1e-10`.
pub fn katz(g: &Graph, cfg: &ClassicalConfig) -> Result<CentralityVector> {
    let s = katz_attenuation(g, cfg)?;
    let n = g.node_count();
    let b: Vec<f64> = (0..n).map(|i| s * g.degree(i) as f64).collect();

    // (I - sA) v
    let apply = |v: &[f64]| -> Vec<f64> {
        let mut out = v.to_vec();
        for (i, oi) in out.iter_mut().enumerate() {
            let mut acc = 0.0;
            for &j in g.neighbors(i) {
                acc += v[j];
            }
            *oi -= s * acc;
        }
        out
    };
    let dot = |a: &[f64], b: &[f64]| -> f64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };

    let target = 1e-10f64;
    let mut x = vec![0.0f64; n];
    let mut r = b.clone();
    let mut p = r.clone();
    let mut rs = dot(&r, &r);
    let cap = 20 * n + 100;
    for _ in 0..cap {
        if rs.sqrt() < target {
            return vector(Classical::Katz, x);
        }
        let mp = apply(&p);
        let alpha = rs / dot(&p, &mp);
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * mp[i];
        }
        let rs_next = dot(&r, &r);
        let beta = rs_next / rs;
        for i in 0..n {
            p[i] = r[i] + beta * p[i];
        }
        rs = rs_next;
    }
    Err(Error::NonConvergence {
        what: "katz conjugate gradient",
        iterations: cap,
        residual: rs.sqrt(),
    })
}

/// PageRank by power iteration on the undirected graph, damping `d`,
/// stopping when the L1 change drops below `pagerank_tol`.
pub fn pagerank(g: &Graph, cfg: &ClassicalConfig) -> Result<CentralityVector> {
    cfg.validate()?;
    let n = g.node_count();
    if n == 0 {
        return Err(Error::InsufficientData {
            what: "pagerank",
            min: 1,
            got: 0,
        });
    }
    let d = cfg.pagerank_d;
    let base = (1.0 - d) / n as f64;
    let mut x = vec![1.0 / n as f64; n];
    let mut next = vec![0.0f64; n];
    let cap = 100_000;
    let mut change = f64::INFINITY;
    for _ in 0..cap {
        for v in next.iter_mut() {
            *v = base;
        }
        for (j, &xj) in x.iter().enumerate() {
            let deg = g.degree(j);
            if deg == 0 {
                continue; // no outgoing probability; node keeps only the base share
            }
            let share = d * xj / deg as f64;
            for &i in g.neighbors(j) {
                next[i] += share;
            }
        }
        change = x
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>();
        std::mem::swap(&mut x, &mut next);
        if change < cfg.pagerank_tol {
            return vector(Classical::Pagerank, x);
        }
    }
    Err(Error::NonConvergence {
        what: "pagerank power iteration",
        iterations: cap,
        residual: change,
    })
}

/// Subgraph centrality: the diagonal of `exp(A)` via full symmetric
/// eigendecomposition, `score(i) = sum_j (v_j^i)^2 e^{lambda_j}`.
pub fn subgraph(g: &Graph, cfg: &ClassicalConfig) -> Result<CentralityVector> {
    cfg.validate()?;
    let n = g.node_count();
    if n > cfg.subgraph_node_cap {
        return Err(Error::NodeCapExceeded {
            what: "subgraph centrality eigendecomposition",
            node_count: n,
            cap: cfg.subgraph_node_cap,
        });
    }
    if n == 0 {
        return vector(Classical::Subgraph, Vec::new());
    }
    let mut a = DMatrix::<f64>::zeros(n, n);
    for (i, j) in g.edges() {
        a[(i, j)] = 1.0;
        a[(j, i)] = 1.0;
    }
    let eigen = SymmetricEigen::new(a);
    let mut scores = vec![0.0f64; n];
    for j in 0..n {
        let w = eigen.eigenvalues[j].exp();
        let col = eigen.eigenvectors.column(j);
        for i in 0..n {
            scores[i] += col[i] * col[i] * w;
        }
    }
    if !scores.iter().all(|v| v.is_finite()) {
        return Err(Error::EigenFailure);
    }
    vector(Classical::Subgraph, scores)
}

/// Every classical measure in catalog order.
pub fn all_classical(g: &Graph, cfg: &ClassicalConfig) -> Result<Vec<CentralityVector>> {
    Classical::ALL
        .into_iter()
        .map(|m| classical_by_name(m, g, cfg))
        .collect()
}

/// Dispatch a single classical measure.
pub fn classical_by_name(
    measure: Classical,
    g: &Graph,
    cfg: &ClassicalConfig,
) -> Result<CentralityVector> {
    match measure {
        Classical::Degree => degree(g),
        Classical::Leverage => leverage(g),
        Classical::Laplacian => laplacian(g),
        Classical::Diffusion => diffusion_degree(g, cfg),
        Classical::Mnc => max_neighborhood_component(g),
        Classical::Betweenness => betweenness(g),
        Classical::Closeness => closeness(g),
        Classical::Katz => katz(g, cfg),
        Classical::Pagerank => pagerank(g, cfg),
        Classical::Subgraph => subgraph(g, cfg),
    }
}
