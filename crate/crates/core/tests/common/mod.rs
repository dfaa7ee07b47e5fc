//! Independent reference implementations used by the acceptance suite.
//! Everything here is deliberately naive: exhaustive enumeration, series
//! expansion and rational arithmetic instead of the library's algorithms.

use netcentral_core::{modularity, pearson, tau_b_from_counts, Graph, Partition, Result};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random connected graph: a random recursive tree plus independent extra
/// edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n_min: usize, n_max: usize) -> Graph {
    let n = rng.gen_range(n_min..=n_max);
    let mut pairs = Vec::new();
    for i in 1..n {
        pairs.push((rng.gen_range(0..i), i));
    }
    let p: f64 = rng.gen_range(0.1..0.7);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_index_pairs(n, &pairs)
}

fn bfs_counts(g: &Graph, source: usize) -> (Vec<u32>, Vec<u128>) {
    let n = g.node_count();
    let mut dist = vec![u32::MAX; n];
    let mut sigma = vec![0u128; n];
    let mut queue = std::collections::VecDeque::new();
    dist[source] = 0;
    sigma[source] = 1;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == u32::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
            if dist[v] == dist[u] + 1 {
                sigma[v] += sigma[u];
            }
        }
    }
    (dist, sigma)
}

/// Betweenness by enumerating, for every unordered pair, the fraction of
/// geodesics through each interior node, in exact rational arithmetic.
pub fn betweenness_oracle(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let per_source: Vec<(Vec<u32>, Vec<u128>)> = (0..n).map(|s| bfs_counts(g, s)).collect();
    let zero = || Ratio::<BigInt>::from_integer(BigInt::from(0));
    let mut score = vec![zero(); n];
    for s in 0..n {
        for t in s + 1..n {
            let d = per_source[s].0[t];
            if d == u32::MAX {
                continue;
            }
            let total = per_source[s].1[t];
            for (v, sv) in score.iter_mut().enumerate() {
                if v == s || v == t {
                    continue;
                }
                let ds = per_source[s].0[v];
                let dt = per_source[t].0[v];
                if ds != u32::MAX && dt != u32::MAX && ds + dt == d {
                    let through = per_source[s].1[v] * per_source[t].1[v];
                    *sv += Ratio::new(BigInt::from(through), BigInt::from(total));
                }
            }
        }
    }
    score.iter().map(|r| r.to_f64().unwrap()).collect()
}

/// Katz scores by direct series expansion: sum of the first `terms` powers
/// of `s A` applied to the all-ones vector.
pub fn katz_series(g: &Graph, s: f64, terms: usize) -> Vec<f64> {
    let n = g.node_count();
    let mut v = vec![1.0f64; n];
    let mut acc = vec![0.0f64; n];
    for _ in 0..terms {
        let mut next = vec![0.0f64; n];
        for (i, ni) in next.iter_mut().enumerate() {
            for &j in g.neighbors(i) {
                *ni += v[j];
            }
            *ni *= s;
        }
        for (a, x) in acc.iter_mut().zip(&next) {
            *a += x;
        }
        v = next;
    }
    acc
}

/// Diagonal of the matrix exponential by truncated Taylor expansion.
pub fn subgraph_taylor(g: &Graph, terms: usize) -> Vec<f64> {
    let n = g.node_count();
    let mut a = vec![vec![0.0f64; n]; n];
    for (i, j) in g.edges() {
        a[i][j] = 1.0;
        a[j][i] = 1.0;
    }
    let mut power = vec![vec![0.0f64; n]; n];
    for (i, row) in power.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let mut diag = vec![1.0f64; n];
    let mut factorial = 1.0f64;
    for k in 1..=terms {
        let mut next = vec![vec![0.0f64; n]; n];
        for i in 0..n {
            for l in 0..n {
                let p = power[i][l];
                if p == 0.0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += p * a[l][j];
                }
            }
        }
        power = next;
        factorial *= k as f64;
        for i in 0..n {
            diag[i] += power[i][i] / factorial;
        }
    }
    diag
}

/// Modularity vitality by full recomputation: rebuild the graph without the
/// node and re-evaluate modularity from scratch.
pub fn mv_naive(g: &Graph, p: &Partition) -> Result<Vec<f64>> {
    let base = modularity(g, p)?;
    let n = g.node_count();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let remap = |v: usize| if v < i { v } else { v - 1 };
        let pairs: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(a, b)| a != i && b != i)
            .map(|(a, b)| (remap(a), remap(b)))
            .collect();
        let gi = Graph::from_index_pairs(n - 1, &pairs);
        let pi = Partition::from_assignment(
            (0..n).filter(|&v| v != i).map(|v| p.community_of(v)).collect(),
        )?;
        out.push(base - modularity(&gi, &pi)?);
    }
    Ok(out)
}

/// Tau-b by O(n^2) pair enumeration, sharing the library's final expression
/// so matching integer counts force bit-identical results. `None` when a
/// vector is constant, except that identical vectors correlate perfectly.
pub fn tau_oracle(x: &[f64], y: &[f64]) -> Option<f64> {
    if x == y {
        return Some(1.0);
    }
    let constant = |v: &[f64]| v.iter().all(|&a| a == v[0]);
    if x.len() < 2 || constant(x) || constant(y) {
        return None;
    }
    let n = x.len() as i64;
    let n0 = n * (n - 1) / 2;
    let (mut concordant, mut discordant, mut tie_x, mut tie_y) = (0i64, 0i64, 0i64, 0i64);
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let dx = x[i].partial_cmp(&x[j]).unwrap();
            let dy = y[i].partial_cmp(&y[j]).unwrap();
            if dx == std::cmp::Ordering::Equal {
                tie_x += 1;
            }
            if dy == std::cmp::Ordering::Equal {
                tie_y += 1;
            }
            if dx == std::cmp::Ordering::Equal || dy == std::cmp::Ordering::Equal {
                continue;
            }
            if dx == dy {
                concordant += 1;
            } else {
                discordant += 1;
            }
        }
    }
    Some(tau_b_from_counts(concordant - discordant, n0, tie_x, tie_y))
}

/// All set partitions of `n` elements as restricted-growth assignments.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, used: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for c in 0..=used {
            current[i] = c;
            rec(i + 1, used.max(c + 1), current, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut current = vec![0usize; n];
    rec(1, 1, &mut current, &mut out);
    out
}

/// Canonical form of a partition for equality up to community relabeling.
pub fn canonical_members(p: &Partition) -> Vec<Vec<usize>> {
    let mut communities: Vec<Vec<usize>> = (0..p.community_count())
        .map(|c| p.members(c).to_vec())
        .collect();
    for c in &mut communities {
        c.sort_unstable();
    }
    communities.sort();
    communities
}

/// Standard normal sample by the Box-Muller transform.
pub fn normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Two-sided Monte-Carlo permutation p-value for zero association, using
/// |Pearson r| as the test statistic (equivalent to |t| at fixed n).
pub fn permutation_p(x: &[f64], y: &[f64], iterations: usize, rng: &mut ChaCha8Rng) -> f64 {
    let observed = pearson(x, y).unwrap().abs();
    let mut shuffled = y.to_vec();
    let mut hits = 0usize;
    for _ in 0..iterations {
        shuffled.shuffle(rng);
        if pearson(x, &shuffled).unwrap().abs() >= observed - 1e-12 {
            hits += 1;
        }
    }
    hits as f64 / iterations as f64
}
