//! Biconnected-component decomposition, cut vertices, complete-bipartite
//! block recognition, and membership in the bi-block class the theorems
//! are stated for.
//!
//! A block is a maximal 2-connected subgraph or a single edge. The class
//! accepted by `classify` as `ClassB` consists of the connected graphs whose
//! blocks are all complete bipartite, with at least two blocks and at most
//! two cut vertices per block; it contains every tree on three or more
//! vertices.

use std::collections::HashMap;
use std::fmt;

use crate::graph::{Graph, Vertex};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// Exactly one cut vertex.
    Leaf,
    /// Exactly two cut vertices.
    Bridge,
    /// Three or more cut vertices.
    Internal,
    /// No cut vertex (single-block graph).
    Isolated,
}

impl BlockKind {
    fn from_cut_count(c: usize) -> Self {
        match c {
            0 => BlockKind::Isolated,
            1 => BlockKind::Leaf,
            2 => BlockKind::Bridge,
            _ => BlockKind::Internal,
        }
    }
}

/// One block of the decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Vertex set, sorted ascending.
    pub vertices: Vec<Vertex>,
    /// Edge set with `u < v`, sorted ascending.
    pub edges: Vec<(Vertex, Vertex)>,
    /// Bipartition `(V1, V2)` when the block is complete bipartite.
    /// `V1` is the part containing the block's minimum-label vertex;
    /// both parts are sorted ascending.
    pub bipartition: Option<(Vec<Vertex>, Vec<Vertex>)>,
    /// Number of cut vertices of the host graph lying in this block.
    pub cut_count: usize,
    pub kind: BlockKind,
}

impl Block {
    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// The part of the bipartition containing `v`, as `(index, part)`.
    pub fn part_of(&self, v: Vertex) -> Option<(usize, &[Vertex])> {
        let (v1, v2) = self.bipartition.as_ref()?;
        if v1.binary_search(&v).is_ok() {
            Some((0, v1))
        } else if v2.binary_search(&v).is_ok() {
            Some((1, v2))
        } else {
            None
        }
    }
}

/// Full block–cut-vertex decomposition of a connected graph.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    /// Blocks sorted by minimum contained vertex label (ties broken by the
    /// lexicographic order of the sorted vertex sets).
    pub blocks: Vec<Block>,
    /// Cut vertices, sorted ascending.
    pub cut_vertices: Vec<Vertex>,
    /// Index into `blocks` for every edge `(u, v)` with `u < v`.
    pub block_of_edge: HashMap<(Vertex, Vertex), usize>,
    /// For each vertex `v`, the indices of the blocks containing it.
    vertex_blocks: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Indices of the blocks containing `v`, sorted ascending.
    pub fn blocks_of_vertex(&self, v: Vertex) -> &[usize] {
        &self.vertex_blocks[v - 1]
    }

    /// Cut vertices of the host graph lying in block `b`, sorted ascending.
    pub fn cuts_in_block(&self, b: usize) -> Vec<Vertex> {
        self.blocks[b]
            .vertices
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }
}

/// Decomposes a connected graph into blocks and cut vertices using an
/// iterative depth-first low-link search.
pub fn decompose(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut visited = vec![false; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(Vertex, Vertex)>> = Vec::new();

    // frame: (vertex, parent, next neighbor index)
    let mut frames: Vec<(Vertex, Vertex, usize)> = vec![(1, 0, 0)];
    let mut timer = 1u32;
    visited[0] = true;
    disc[0] = timer;
    low[0] = timer;
    let mut root_children = 0usize;

    while let Some(&mut (u, pu, ref mut idx)) = frames.last_mut() {
        if *idx < g.neighbors(u).len() {
            let w = g.neighbors(u)[*idx];
            *idx += 1;
            if !visited[w - 1] {
                visited[w - 1] = true;
                timer += 1;
                disc[w - 1] = timer;
                low[w - 1] = timer;
                edge_stack.push((u, w));
                frames.push((w, u, 0));
            } else if w != pu && disc[w - 1] < disc[u - 1] {
                edge_stack.push((u, w));
                low[u - 1] = low[u - 1].min(disc[w - 1]);
            }
        } else {
            frames.pop();
            if pu == 0 {
                break;
            }
            low[pu - 1] = low[pu - 1].min(low[u - 1]);
            if low[u - 1] >= disc[pu - 1] {
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push(e);
                    if e == (pu, u) {
                        break;
                    }
                }
                raw_blocks.push(block);
                if pu == 1 {
                    root_children += 1;
                } else {
                    is_cut[pu - 1] = true;
                }
            }
        }
    }
    if root_children >= 2 {
        is_cut[0] = true;
    }
    debug_assert!(edge_stack.is_empty());

    let cut_vertices: Vec<Vertex> = (1..=n).filter(|&v| is_cut[v - 1]).collect();

    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|raw| {
            let mut edges: Vec<(Vertex, Vertex)> =
                raw.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
            edges.sort_unstable();
            let mut vertices: Vec<Vertex> =
                edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            let bipartition = bipartition_of(&vertices, &edges);
            let cut_count = vertices.iter().filter(|&&v| is_cut[v - 1]).count();
            Block {
                vertices,
                edges,
                bipartition,
                cut_count,
                kind: BlockKind::from_cut_count(cut_count),
            }
        })
        .collect();
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let mut block_of_edge = HashMap::new();
    let mut vertex_blocks = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &e in &b.edges {
            block_of_edge.insert(e, i);
        }
        for &v in &b.vertices {
            vertex_blocks[v - 1].push(i);
        }
    }

    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        block_of_edge,
        vertex_blocks,
    })
}

/// Two-colors the block by breadth-first search and confirms completeness
/// by the edge count `|V1| * |V2|`.
pub fn recognize_bipartite_block(b: &Block) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    bipartition_of(&b.vertices, &b.edges)
}

fn bipartition_of(
    vertices: &[Vertex],
    edges: &[(Vertex, Vertex)],
) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let index: HashMap<Vertex, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = vec![Vec::new(); vertices.len()];
    for &(u, v) in edges {
        let (iu, iv) = (index[&u], index[&v]);
        adj[iu].push(iv);
        adj[iv].push(iu);
    }
    let mut color = vec![None; vertices.len()];
    color[0] = Some(0u8);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let c = color[i].unwrap();
        for &j in &adj[i] {
            match color[j] {
                None => {
                    color[j] = Some(1 - c);
                    queue.push_back(j);
                }
                Some(cj) if cj == c => return None,
                _ => {}
            }
        }
    }
    let v1: Vec<Vertex> = vertices
        .iter()
        .enumerate()
        .filter(|(i, _)| color[*i] == Some(0))
        .map(|(_, &v)| v)
        .collect();
    let v2: Vec<Vertex> = vertices
        .iter()
        .enumerate()
        .filter(|(i, _)| color[*i] == Some(1))
        .map(|(_, &v)| v)
        .collect();
    if v1.is_empty() || v2.is_empty() {
        return None;
    }
    if v1.len() * v2.len() != edges.len() {
        return None;
    }
    // The block's minimum vertex is vertices[0], colored 0, so V1 already
    // contains it.
    Some((v1, v2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    /// All blocks are single edges (reported only when not in class B,
    /// i.e. for the two-vertex tree).
    Tree,
    /// Bi-block, at least two blocks, at most two cut vertices per block.
    ClassB,
    /// Bi-block but outside class B.
    BiBlockNotB,
    /// Some block is not complete bipartite.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassWitness {
    NonBipartiteBlock { block: usize },
    SingleBlock,
    NoBlocks,
    TooManyCutVertices { block: usize, count: usize },
}

impl fmt::Display for ClassWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassWitness::NonBipartiteBlock { block } => {
                write!(f, "block {block} is not complete bipartite")
            }
            ClassWitness::SingleBlock => write!(f, "only one block"),
            ClassWitness::NoBlocks => write!(f, "no blocks (single vertex)"),
            ClassWitness::TooManyCutVertices { block, count } => {
                write!(f, "block {block} has {count} cut vertices")
            }
        }
    }
}

/// Classification of a connected graph relative to the bi-block class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClass {
    pub kind: ClassKind,
    /// Set when every block is a single edge and `n >= 2`; trees on at
    /// least three vertices carry both this flag and `kind == ClassB`.
    pub is_tree: bool,
    pub witness: Option<ClassWitness>,
}

impl GraphClass {
    pub fn is_class_b(&self) -> bool {
        self.kind == ClassKind::ClassB
    }
}

/// Classifies a connected graph. See `classify_decomposition` for the rules.
pub fn classify(g: &Graph) -> Result<GraphClass> {
    let bd = decompose(g)?;
    Ok(classify_decomposition(g, &bd))
}

/// Classification rules:
/// - every block complete bipartite, at least two blocks, at most two cut
///   vertices per block → `ClassB`;
/// - some block not complete bipartite → `Other`;
/// - bi-block but a single block or a block with three or more cut
///   vertices → `BiBlockNotB`;
/// - the two-vertex tree (one block, all blocks single edges) → `Tree`.
pub fn classify_decomposition(g: &Graph, bd: &BlockDecomposition) -> GraphClass {
    let is_tree = g.n() >= 2 && bd.blocks.iter().all(|b| b.vertices.len() == 2);
    if let Some((i, _)) = bd
        .blocks
        .iter()
        .enumerate()
        .find(|(_, b)| b.bipartition.is_none())
    {
        return GraphClass {
            kind: ClassKind::Other,
            is_tree,
            witness: Some(ClassWitness::NonBipartiteBlock { block: i }),
        };
    }
    if bd.blocks.is_empty() {
        return GraphClass {
            kind: ClassKind::BiBlockNotB,
            is_tree,
            witness: Some(ClassWitness::NoBlocks),
        };
    }
    if bd.blocks.len() == 1 {
        return GraphClass {
            kind: if is_tree {
                ClassKind::Tree
            } else {
                ClassKind::BiBlockNotB
            },
            is_tree,
            witness: if is_tree {
                None
            } else {
                Some(ClassWitness::SingleBlock)
            },
        };
    }
    if let Some((i, b)) = bd
        .blocks
        .iter()
        .enumerate()
        .find(|(_, b)| b.cut_count > 2)
    {
        return GraphClass {
            kind: ClassKind::BiBlockNotB,
            is_tree,
            witness: Some(ClassWitness::TooManyCutVertices {
                block: i,
                count: b.cut_count,
            }),
        };
    }
    GraphClass {
        kind: ClassKind::ClassB,
        is_tree,
        witness: None,
    }
}
