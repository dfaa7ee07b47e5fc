//! Simple undirected graph: construction, edge-list parsing and the shared
//! structural primitives (BFS distances, connected components, k-core
//! decomposition, induced subgraphs, intra/inter edge filtering).

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Immutable simple undirected graph.
///
/// Nodes carry dense indices `0..n` plus an external string label kept from
/// the input file. Self-loops and duplicate edges are dropped at
/// construction; adjacency lists are sorted.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Records dropped while building a graph from raw edge records.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
    /// Lines that carried a third (weight) column, which is ignored.
    pub weight_columns_ignored: usize,
}

impl LoadReport {
    pub fn dropped(&self) -> usize {
        self.self_loops_dropped + self.duplicates_dropped
    }
}

impl Graph {
    /// Build a graph from labeled edge records in first-seen label order.
    pub fn from_edges<I, S>(edges: I) -> (Graph, LoadReport)
    where
        I: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut report = LoadReport::default();

        for (a, b) in edges {
            let a = a.into();
            let b = b.into();
            if a == b {
                // self-loop: still register the node
                if !index.contains_key(&a) {
                    index.insert(a.clone(), labels.len());
                    labels.push(a);
                }
                report.self_loops_dropped += 1;
                continue;
            }
            let i = match index.get(&a) {
                Some(&i) => i,
                None => {
                    let i = labels.len();
                    index.insert(a.clone(), i);
                    labels.push(a);
                    i
                }
            };
            let j = match index.get(&b) {
                Some(&j) => j,
                None => {
                    let j = labels.len();
                    index.insert(b.clone(), j);
                    labels.push(b);
                    j
                }
            };
            pairs.push((i.min(j), i.max(j)));
        }

        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        report.duplicates_dropped = before - pairs.len();

        let mut adj = vec![Vec::new(); labels.len()];
        for &(i, j) in &pairs {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        (
            Graph {
                labels,
                index,
                adj,
                m: pairs.len(),
            },
            report,
        )
    }

    /// Build from index pairs over `n` nodes labeled `"0".."n-1"`.
    /// Convenient for tests and generated graphs.
    pub fn from_index_pairs(n: usize, pairs: &[(usize, usize)]) -> Graph {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Graph::with_labels_and_edges(labels, pairs.iter().copied())
    }

    /// Build with a fixed node set (including possibly isolated nodes).
    pub(crate) fn with_labels_and_edges<I>(labels: Vec<String>, pairs: I) -> Graph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let index: HashMap<String, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let mut edge_set: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|&(i, j)| i != j)
            .map(|(i, j)| (i.min(j), i.max(j)))
            .collect();
        edge_set.sort_unstable();
        edge_set.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &edge_set {
            assert!(i < n && j < n, "edge endpoint out of range");
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            labels,
            index,
            adj,
            m: edge_set.len(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(i, j)` with `i < j`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, nbrs)| nbrs.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if i < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                index: i,
                node_count: self.node_count(),
            })
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.node_count(), self.m)
    }
}

/// Hop distances from one source node. Unreachable nodes are `None`.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    pub source: usize,
    pub dist: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn get(&self, v: usize) -> Option<u32> {
        self.dist[v]
    }
}

/// Per-node shell index from iterative minimum-degree peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub core: Vec<u32>,
}

impl CoreDecomposition {
    pub fn core_number(&self, i: usize) -> u32 {
        self.core[i]
    }
}

/// Parse an edge-list file: one edge per line, two whitespace-separated
/// labels, `#` comments ignored, optional third column ignored.
pub fn load_edgelist(path: impl AsRef<Path>) -> Result<(Graph, LoadReport)> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_edgelist(&text, path)
}

/// Parse edge-list text. `origin` is only used in error messages.
pub fn parse_edgelist(text: &str, origin: impl AsRef<Path>) -> Result<(Graph, LoadReport)> {
    let mut records: Vec<(String, String)> = Vec::new();
    let mut weight_columns = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let a = tokens.next();
        let b = tokens.next();
        match (a, b) {
            (Some(a), Some(b)) => {
                if tokens.next().is_some() {
                    weight_columns += 1;
                }
                records.push((a.to_string(), b.to_string()));
            }
            _ => {
                return Err(Error::Parse {
                    path: origin.as_ref().to_path_buf(),
                    line: lineno + 1,
                    message: format!("expected two whitespace-separated node labels, got `{line}`"),
                })
            }
        }
    }
    let (graph, mut report) = Graph::from_edges(records);
    report.weight_columns_ignored = weight_columns;
    Ok((graph, report))
}

/// Connected components as node-index lists, largest first; ties broken by
/// smallest minimum node index. Node order inside a component is ascending.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut comp = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut nodes = vec![start];
        comp[start] = id;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    nodes.push(w);
                    stack.push(w);
                }
            }
        }
        nodes.sort_unstable();
        components.push(nodes);
    }
    // components are discovered in order of their minimum node index, so a
    // stable sort by descending size preserves the tie rule
    components.sort_by_key(|c| std::cmp::Reverse(c.len()));
    components
}

/// Induced subgraph on the largest connected component, original labels kept.
pub fn largest_connected_component(g: &Graph) -> Result<Graph> {
    if g.node_count() == 0 {
        return Err(Error::InsufficientData {
            what: "largest_connected_component",
            min: 1,
            got: 0,
        });
    }
    let components = connected_components(g);
    induced_subgraph(g, &components[0])
}

/// BFS hop distances from `source`.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<DistanceMatrix> {
    g.check_node(source)?;
    let n = g.node_count();
    let mut dist: Vec<Option<u32>> = vec![None; n];
    dist[source] = Some(0);
    let mut queue = std::collections::VecDeque::with_capacity(n);
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(DistanceMatrix { source, dist })
}

/// K-core decomposition by bucketed minimum-degree peeling.
pub fn core_decomposition(g: &Graph) -> CoreDecomposition {
    let n = g.node_count();
    if n == 0 {
        return CoreDecomposition { core: Vec::new() };
    }
    let mut degree: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let max_deg = g.max_degree();

    // nodes bucketed by current degree, positions tracked for O(1) swaps
    let mut bin_count = vec![0usize; max_deg + 1];
    for &d in &degree {
        bin_count[d] += 1;
    }
    let mut bin_start = vec![0usize; max_deg + 2];
    for d in 0..=max_deg {
        bin_start[d + 1] = bin_start[d] + bin_count[d];
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| degree[v]);
    let mut pos = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let mut bin = bin_start.clone();

    let mut core = vec![0u32; n];
    for p in 0..n {
        let v = order[p];
        core[v] = degree[v] as u32;
        for idx in 0..g.neighbors(v).len() {
            let u = g.neighbors(v)[idx];
            if degree[u] > degree[v] {
                // move u to the front of its bin, then shrink its degree
                let du = degree[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = order[pw];
                if u != w {
                    order.swap(pu, pw);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }
    CoreDecomposition { core }
}

/// Subgraph induced by `nodes`: exactly the edges of `g` with both endpoints
/// in the set, original labels retained. Node order follows `nodes` with
/// duplicates ignored.
pub fn induced_subgraph(g: &Graph, nodes: &[usize]) -> Result<Graph> {
    let n = g.node_count();
    let mut new_index = vec![usize::MAX; n];
    let mut labels = Vec::with_capacity(nodes.len());
    for &v in nodes {
        g.check_node(v)?;
        if new_index[v] == usize::MAX {
            new_index[v] = labels.len();
            labels.push(g.label(v).to_string());
        }
    }
    let mut pairs = Vec::new();
    for &v in nodes {
        let vi = new_index[v];
        for &w in g.neighbors(v) {
            if w > v && new_index[w] != usize::MAX {
                pairs.push((vi, new_index[w]));
            }
        }
    }
    Ok(Graph::with_labels_and_edges(labels, pairs))
}

/// Split `g` into the intra-community and inter-community edge graphs.
/// Both keep all nodes of `g`; their edge sets partition `g`'s edges.
pub fn edge_filtered_graphs(g: &Graph, p: &Partition) -> Result<(Graph, Graph)> {
    p.check_covers(g)?;
    let mut intra = Vec::new();
    let mut inter = Vec::new();
    for (i, j) in g.edges() {
        if p.community_of(i) == p.community_of(j) {
            intra.push((i, j));
        } else {
            inter.push((i, j));
        }
    }
    let labels = g.labels().to_vec();
    Ok((
        Graph::with_labels_and_edges(labels.clone(), intra),
        Graph::with_labels_and_edges(labels, inter),
    ))
}
