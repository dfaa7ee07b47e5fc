//! Node partitions: community assignments, modularity, seeded Louvain
//! detection, per-node degree splits and partition file round-trips.

use std::collections::HashMap;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A partition of nodes `0..n` into communities with dense ids `0..k`.
/// Community ids follow first appearance in node-index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    assignment: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl Partition {
    /// Build from a raw per-node assignment. Ids may be arbitrary and are
    /// renumbered densely by first appearance.
    pub fn from_assignment(raw: Vec<usize>) -> Result<Partition> {
        if raw.is_empty() {
            return Err(Error::InsufficientData {
                what: "partition assignment",
                min: 1,
                got: 0,
            });
        }
        let mut dense: HashMap<usize, usize> = HashMap::new();
        let mut assignment = Vec::with_capacity(raw.len());
        let mut members: Vec<Vec<usize>> = Vec::new();
        for (node, &id) in raw.iter().enumerate() {
            let next = members.len();
            let c = *dense.entry(id).or_insert(next);
            if c == members.len() {
                members.push(Vec::new());
            }
            members[c].push(node);
            assignment.push(c);
        }
        Ok(Partition { assignment, members })
    }

    /// Single community holding every node. Handy as a degenerate baseline.
    pub fn trivial(n: usize) -> Result<Partition> {
        Partition::from_assignment(vec![0; n])
    }

    pub fn node_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn community_count(&self) -> usize {
        self.members.len()
    }

    pub fn community_of(&self, node: usize) -> usize {
        self.assignment[node]
    }

    pub fn members(&self, community: usize) -> &[usize] {
        &self.members[community]
    }

    pub fn size(&self, community: usize) -> usize {
        self.members[community].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub(crate) fn check_covers(&self, g: &Graph) -> Result<()> {
        if self.node_count() == g.node_count() {
            Ok(())
        } else {
            Err(Error::PartitionCoverage(format!(
                "partition covers {} nodes but the graph has {}",
                self.node_count(),
                g.node_count()
            )))
        }
    }

    /// Build from `(node_label, community_token)` records against a graph.
    /// Every graph node must appear exactly once; community tokens are
    /// renumbered densely by node-index order.
    pub fn from_labeled(g: &Graph, records: &[(String, String)]) -> Result<Partition> {
        let n = g.node_count();
        let mut token_of: Vec<Option<&str>> = vec![None; n];
        for (label, token) in records {
            let Some(i) = g.index_of(label) else {
                return Err(Error::UnknownNode(label.clone()));
            };
            match token_of[i] {
                None => token_of[i] = Some(token),
                Some(prev) if prev == token => {}
                Some(prev) => {
                    return Err(Error::PartitionCoverage(format!(
                        "node `{label}` assigned to both `{prev}` and `{token}`"
                    )))
                }
            }
        }
        let missing = token_of.iter().filter(|t| t.is_none()).count();
        if missing > 0 {
            let example = (0..n)
                .find(|&i| token_of[i].is_none())
                .map(|i| g.label(i).to_string())
                .unwrap_or_default();
            return Err(Error::PartitionCoverage(format!(
                "{missing} graph node(s) missing from the partition, e.g. `{example}`"
            )));
        }
        let mut dense: HashMap<&str, usize> = HashMap::new();
        let mut raw = Vec::with_capacity(n);
        for t in token_of.iter().map(|t| t.unwrap()) {
            let next = dense.len();
            raw.push(*dense.entry(t).or_insert(next));
        }
        Partition::from_assignment(raw)
    }
}

/// Read raw `(node_label, community_token)` records from a partition file.
/// One node per line, two whitespace-separated tokens, `#` comments ignored.
pub fn read_partition_records(path: impl AsRef<Path>) -> Result<Vec<(String, String)>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut records = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => records.push((a.to_string(), b.to_string())),
            _ => {
                return Err(Error::Parse {
                    path: path.to_path_buf(),
                    line: lineno + 1,
                    message: format!("expected `node community`, got `{line}`"),
                })
            }
        }
    }
    Ok(records)
}

/// Load a partition file and bind it to `g`, requiring exact node coverage.
pub fn load_partition(path: impl AsRef<Path>, g: &Graph) -> Result<Partition> {
    let records = read_partition_records(path.as_ref())?;
    Partition::from_labeled(g, &records)
}

/// Write `label community_id` lines sorted by node label.
pub fn save_partition(path: impl AsRef<Path>, g: &Graph, p: &Partition) -> Result<()> {
    p.check_covers(g)?;
    let path = path.as_ref();
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.sort_by(|&a, &b| g.label(a).cmp(g.label(b)));
    let mut out = String::new();
    for i in order {
        out.push_str(g.label(i));
        out.push(' ');
        out.push_str(&p.community_of(i).to_string());
        out.push('\n');
    }
    std::fs::write(path, out).map_err(|e| Error::io(path, e))
}

/// Newman-Girvan modularity: sum over communities of
/// `l_c / m - (d_c / 2m)^2`.
pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    p.check_covers(g)?;
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::EdgelessGraph("modularity"));
    }
    let k = p.community_count();
    let mut intra = vec![0usize; k];
    let mut total_degree = vec![0usize; k];
    for i in 0..g.node_count() {
        total_degree[p.community_of(i)] += g.degree(i);
    }
    for (i, j) in g.edges() {
        let ci = p.community_of(i);
        if ci == p.community_of(j) {
            intra[ci] += 1;
        }
    }
    let m = m as f64;
    let mut q = 0.0;
    for c in 0..k {
        let lc = intra[c] as f64;
        let dc = total_degree[c] as f64;
        q += lc / m - (dc / (2.0 * m)).powi(2);
    }
    Ok(q)
}

/// Per-node degree decomposition relative to a partition: intra degree,
/// inter degree and the full neighbor count per community.
#[derive(Debug, Clone)]
pub struct DegreeSplit {
    intra: Vec<usize>,
    inter: Vec<usize>,
    per_community: Vec<Vec<(usize, usize)>>,
}

impl DegreeSplit {
    pub fn k_intra(&self, i: usize) -> usize {
        self.intra[i]
    }

    pub fn k_inter(&self, i: usize) -> usize {
        self.inter[i]
    }

    pub fn k(&self, i: usize) -> usize {
        self.intra[i] + self.inter[i]
    }

    /// Neighbor counts per community as sorted `(community, count)` pairs,
    /// including the node's own community when it has internal neighbors.
    pub fn neighbor_communities(&self, i: usize) -> &[(usize, usize)] {
        &self.per_community[i]
    }
}

/// Split every node's degree into intra- and inter-community parts.
pub fn degree_split(g: &Graph, p: &Partition) -> Result<DegreeSplit> {
    p.check_covers(g)?;
    let n = g.node_count();
    let mut intra = vec![0usize; n];
    let mut inter = vec![0usize; n];
    let mut per_community = Vec::with_capacity(n);
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for i in 0..n {
        counts.clear();
        let ci = p.community_of(i);
        for &j in g.neighbors(i) {
            let cj = p.community_of(j);
            *counts.entry(cj).or_insert(0) += 1;
            if cj == ci {
                intra[i] += 1;
            } else {
                inter[i] += 1;
            }
        }
        let mut pairs: Vec<(usize, usize)> = counts.iter().map(|(&c, &k)| (c, k)).collect();
        pairs.sort_unstable();
        per_community.push(pairs);
    }
    Ok(DegreeSplit {
        intra,
        inter,
        per_community,
    })
}

/// Weighted multigraph view used internally by Louvain levels. Degrees count
/// self-loops twice; `total` is the sum of edge weights with self-loops
/// counted once, so it is invariant under aggregation.
struct LevelGraph {
    adj: Vec<Vec<(usize, f64)>>,
    self_loop: Vec<f64>,
    total: f64,
}

impl LevelGraph {
    fn from_graph(g: &Graph) -> LevelGraph {
        let n = g.node_count();
        let adj = (0..n)
            .map(|i| g.neighbors(i).iter().map(|&j| (j, 1.0)).collect())
            .collect();
        LevelGraph {
            adj,
            self_loop: vec![0.0; n],
            total: g.edge_count() as f64,
        }
    }

    fn node_count(&self) -> usize {
        self.adj.len()
    }

    fn weighted_degree(&self, i: usize) -> f64 {
        let link: f64 = self.adj[i].iter().map(|&(_, w)| w).sum();
        link + 2.0 * self.self_loop[i]
    }
}

/// One Louvain level: greedy local moving on the level graph. Returns the
/// node-to-community map (dense ids) and whether any node moved.
fn local_moving(lg: &LevelGraph, rng: &mut ChaCha8Rng) -> (Vec<usize>, bool) {
    let n = lg.node_count();
    let two_m = 2.0 * lg.total;
    let mut comm: Vec<usize> = (0..n).collect();
    let mut comm_total: Vec<f64> = (0..n).map(|i| lg.weighted_degree(i)).collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);

    let mut moved_any = false;
    let mut links: HashMap<usize, f64> = HashMap::new();
    loop {
        let mut moved_this_sweep = false;
        for &i in &order {
            let ki = lg.weighted_degree(i);
            let current = comm[i];
            links.clear();
            for &(j, w) in &lg.adj[i] {
                *links.entry(comm[j]).or_insert(0.0) += w;
            }
            comm_total[current] -= ki;

            // staying put is the baseline; moving needs a strictly larger
            // gain, and candidates are scanned in community-id order so
            // equal gains resolve to the smallest id
            let stay_w = links.get(&current).copied().unwrap_or(0.0);
            let mut best = current;
            let mut best_gain = stay_w - ki * comm_total[current] / two_m;
            let mut candidates: Vec<(usize, f64)> = links
                .iter()
                .filter(|&(&c, _)| c != current)
                .map(|(&c, &w)| (c, w))
                .collect();
            candidates.sort_unstable_by_key(|c| c.0);
            for (c, w) in candidates {
                let gain = w - ki * comm_total[c] / two_m;
                if gain > best_gain {
                    best_gain = gain;
                    best = c;
                }
            }

            comm_total[best] += ki;
            if best != current {
                comm[i] = best;
                moved_this_sweep = true;
                moved_any = true;
            }
        }
        if !moved_this_sweep {
            break;
        }
    }

    // renumber densely by first appearance in node order
    let mut dense: HashMap<usize, usize> = HashMap::new();
    let map: Vec<usize> = comm
        .iter()
        .map(|&c| {
            let next = dense.len();
            *dense.entry(c).or_insert(next)
        })
        .collect();
    (map, moved_any)
}

/// Collapse communities into single nodes, merging parallel edge weights and
/// folding internal weight into self-loops.
fn aggregate(lg: &LevelGraph, map: &[usize]) -> LevelGraph {
    let k = map.iter().copied().max().map_or(0, |m| m + 1);
    let mut self_loop = vec![0.0; k];
    let mut weights: HashMap<(usize, usize), f64> = HashMap::new();
    for i in 0..lg.node_count() {
        let ci = map[i];
        self_loop[ci] += lg.self_loop[i];
        for &(j, w) in &lg.adj[i] {
            if j < i {
                continue; // count undirected links once
            }
            let cj = map[j];
            if ci == cj {
                self_loop[ci] += w;
            } else {
                let key = (ci.min(cj), ci.max(cj));
                *weights.entry(key).or_insert(0.0) += w;
            }
        }
    }
    let mut adj = vec![Vec::new(); k];
    let mut entries: Vec<((usize, usize), f64)> = weights.into_iter().collect();
    entries.sort_by_key(|e| e.0);
    for ((a, b), w) in entries {
        adj[a].push((b, w));
        adj[b].push((a, w));
    }
    for list in &mut adj {
        list.sort_by_key(|e| e.0);
    }
    LevelGraph {
        adj,
        self_loop,
        total: lg.total,
    }
}

/// Seeded Louvain community detection. Returns the detected partition and
/// the modularity trace, one value per completed level.
///
/// Node visit order is shuffled once per level from a ChaCha8 stream, so a
/// given `(graph, seed)` pair always yields the same partition.
pub fn louvain(g: &Graph, seed: u64) -> Result<(Partition, Vec<f64>)> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph("louvain"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment: Vec<usize> = (0..g.node_count()).collect();
    let mut level = LevelGraph::from_graph(g);
    let mut trace = Vec::new();
    let mut last_q = f64::NEG_INFINITY;

    loop {
        let (map, moved) = local_moving(&level, &mut rng);
        if !moved && !trace.is_empty() {
            // identity level: the partition is unchanged from the last one
            return Ok((Partition::from_assignment(assignment)?, trace));
        }
        for slot in assignment.iter_mut() {
            *slot = map[*slot];
        }
        let partition = Partition::from_assignment(assignment.clone())?;
        let q = modularity(g, &partition)?;
        trace.push(q);

        let communities = map.iter().copied().max().map_or(0, |c| c + 1);
        if !moved || q <= last_q + 1e-9 || communities == level.node_count() {
            return Ok((partition, trace));
        }
        last_q = q;
        level = aggregate(&level, &map);
    }
}
