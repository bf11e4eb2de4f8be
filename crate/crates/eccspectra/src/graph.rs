//! Labeled simple undirected graphs, edge-list parsing, breadth-first
//! distances and eccentricity profiles.
//!
//! Vertices are the integers `1..=n` taken from the input; all derived
//! structures keep neighbor lists sorted so that every downstream
//! construction is a deterministic function of the labeled input.

use std::collections::VecDeque;

use crate::{Error, Result};

/// 1-based vertex label.
pub type Vertex = usize;

/// A simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity and label range.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::Invalid("vertex count must be positive".into()));
        }
        let mut norm: Vec<(Vertex, Vertex)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(Error::LabelRange { v: w, n });
                }
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted ascending.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u - 1].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([1]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Relabels vertices: vertex `v` becomes `perm[v - 1]`.
    /// `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Invalid("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p < 1 || p > self.n || seen[p - 1] {
                return Err(Error::Invalid("not a permutation of 1..=n".into()));
            }
            seen[p - 1] = true;
        }
        Graph::from_edges(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])),
        )
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Single-source shortest-path distances by breadth-first search.
    /// Unreachable vertices are reported as `None`.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[source - 1] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u - 1].unwrap();
            for &w in self.neighbors(u) {
                if dist[w - 1].is_none() {
                    dist[w - 1] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Parses the edge-list text format: a header line `n m` followed by `m`
/// lines `u v` with `1 <= u < v <= n`. Lines starting with `#` are comments.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut edge_lines = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Syntax {
                col: 1,
                msg: format!("expected two fields, found {}", fields.len()),
            }
            .at_line(line_no));
        }
        let parse_field = |i: usize| -> Result<usize> {
            fields[i].parse::<usize>().map_err(|_| {
                Error::Syntax {
                    col: raw.find(fields[i]).map_or(1, |c| c + 1),
                    msg: format!("invalid integer `{}`", fields[i]),
                }
                .at_line(line_no)
            })
        };
        let a = parse_field(0)?;
        let b = parse_field(1)?;
        match header {
            None => {
                if a == 0 {
                    return Err(Error::Syntax {
                        col: 1,
                        msg: "vertex count must be positive".into(),
                    }
                    .at_line(line_no));
                }
                header = Some((a, b, line_no));
            }
            Some((n, m, _)) => {
                edge_lines += 1;
                if edge_lines > m {
                    return Err(Error::Syntax {
                        col: 1,
                        msg: format!("more than the declared {m} edges"),
                    }
                    .at_line(line_no));
                }
                if a == b {
                    return Err(Error::LoopEdge(a).at_line(line_no));
                }
                for w in [a, b] {
                    if w < 1 || w > n {
                        return Err(Error::LabelRange { v: w, n }.at_line(line_no));
                    }
                }
                if a > b {
                    return Err(Error::EdgeOrder { u: a, v: b }.at_line(line_no));
                }
                if edges.contains(&(a, b)) {
                    return Err(Error::DuplicateEdge(a, b).at_line(line_no));
                }
                edges.push((a, b));
            }
        }
    }

    let (n, m, header_line) = header.ok_or(Error::Syntax {
        col: 1,
        msg: "missing header line `n m`".into(),
    })?;
    if edge_lines != m {
        return Err(Error::Syntax {
            col: 1,
            msg: format!("header declares {m} edges, found {edge_lines}"),
        }
        .at_line(header_line));
    }
    Graph::from_edges(n, edges)
}

/// Dense matrix of pairwise shortest-path distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub(crate) fn from_rows(n: usize, d: Vec<u32>) -> Self {
        debug_assert_eq!(d.len(), n * n);
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between vertices `u` and `v` (1-based labels).
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[(u - 1) * self.n + (v - 1)]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[(u - 1) * self.n..u * self.n]
    }
}

/// All-pairs shortest-path distances via one breadth-first search per source.
///
/// Fails on disconnected input; the whole library assumes connectivity.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut d = vec![0u32; n * n];
    for s in g.vertices() {
        let dist = g.bfs_distances(s);
        for (i, dv) in dist.iter().enumerate() {
            match dv {
                Some(x) => d[(s - 1) * n + i] = *x,
                None => return Err(Error::Disconnected),
            }
        }
    }
    Ok(DistanceMatrix::from_rows(n, d))
}

/// Per-vertex eccentricities with radius, diameter and center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccProfile {
    /// `ecc[v - 1]` is the eccentricity of vertex `v`.
    pub ecc: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    /// Vertices attaining the radius, sorted ascending.
    pub center: Vec<Vertex>,
}

impl EccProfile {
    pub fn ecc_of(&self, v: Vertex) -> u32 {
        self.ecc[v - 1]
    }
}

/// Eccentricity profile of a connected graph, read off a distance matrix.
pub fn ecc_profile(d: &DistanceMatrix) -> EccProfile {
    let n = d.n();
    let ecc: Vec<u32> = (1..=n)
        .map(|v| d.row(v).iter().copied().max().unwrap_or(0))
        .collect();
    let radius = ecc.iter().copied().min().unwrap();
    let diameter = ecc.iter().copied().max().unwrap();
    let center = (1..=n).filter(|&v| ecc[v - 1] == radius).collect();
    EccProfile {
        ecc,
        radius,
        diameter,
        center,
    }
}
