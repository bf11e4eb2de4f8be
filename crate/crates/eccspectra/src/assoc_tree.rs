//! The associated tree of a class-B graph: an induced subgraph on all cut
//! vertices plus selected minimum-label non-cut vertices, one to three per
//! block. The tree preserves distances, diameter and eccentricities of its
//! vertices, and its center locates the center of the host graph.

use std::collections::VecDeque;

use crate::blocks::{classify_decomposition, BlockDecomposition, BlockKind};
use crate::graph::{all_pairs_distances, ecc_profile, EccProfile, Graph, Vertex};
use crate::{Error, Result};

/// Why a vertex was taken into the associated tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectReason {
    CutVertex,
    /// Minimum-label non-cut pick for the given block index.
    BlockPick { block: usize },
}

/// Induced subtree `G[S ∪ C_G]` of the host graph.
#[derive(Debug, Clone)]
pub struct AssocTree {
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
    reasons: Vec<SelectReason>,
    adj: Vec<Vec<usize>>,
}

impl AssocTree {
    /// Host-graph labels of the tree vertices, sorted ascending.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Induced edges in host labels, sorted ascending.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn reason_of(&self, v: Vertex) -> Option<SelectReason> {
        self.vertices
            .binary_search(&v)
            .ok()
            .map(|i| self.reasons[i])
    }

    fn index_of(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// BFS distances within the tree from `v`, indexed like `vertices()`.
    pub fn distances_from(&self, v: Vertex) -> Option<Vec<Option<u32>>> {
        let s = self.index_of(v)?;
        let mut dist = vec![None; self.vertices.len()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            let di = dist[i].unwrap();
            for &j in &self.adj[i] {
                if dist[j].is_none() {
                    dist[j] = Some(di + 1);
                    queue.push_back(j);
                }
            }
        }
        Some(dist)
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices.first() {
            None => false,
            Some(&v) => self
                .distances_from(v)
                .map_or(false, |d| d.iter().all(|x| x.is_some())),
        }
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.vertices.len()
    }

    /// Per-vertex eccentricities within the tree, `(vertex, ecc)` pairs in
    /// ascending vertex order. Requires connectivity.
    pub fn eccentricities(&self) -> Option<Vec<(Vertex, u32)>> {
        let mut out = Vec::with_capacity(self.vertices.len());
        for &v in &self.vertices {
            let dist = self.distances_from(v)?;
            let ecc = dist.iter().copied().collect::<Option<Vec<u32>>>()?;
            out.push((v, ecc.into_iter().max().unwrap_or(0)));
        }
        Some(out)
    }

    pub fn diameter(&self) -> Option<u32> {
        self.eccentricities()
            .map(|e| e.iter().map(|&(_, x)| x).max().unwrap_or(0))
    }

    /// Center of the tree (host labels, sorted).
    pub fn center(&self) -> Option<Vec<Vertex>> {
        let ecc = self.eccentricities()?;
        let radius = ecc.iter().map(|&(_, e)| e).min()?;
        Some(
            ecc.iter()
                .filter(|&&(_, e)| e == radius)
                .map(|&(v, _)| v)
                .collect(),
        )
    }

    /// The tree as a standalone graph with vertices relabeled `1..=k` in
    /// ascending original-label order, together with the label map
    /// (`map[i]` is the original label of new vertex `i + 1`).
    pub fn to_relabeled_graph(&self) -> (Graph, Vec<Vertex>) {
        let map = self.vertices.clone();
        let edges = self.edges.iter().map(|&(u, v)| {
            (
                self.index_of(u).unwrap() + 1,
                self.index_of(v).unwrap() + 1,
            )
        });
        (
            Graph::from_edges(map.len(), edges).expect("induced edges are simple"),
            map,
        )
    }
}

/// Builds the associated tree of a class-B graph.
///
/// Per block the selected non-cut vertices are: both endpoints of a single
/// edge when they are not cut vertices; the minimum-label non-cut vertex of
/// the opposite part when one part holds two cut vertices; the minimum-label
/// non-cut vertex of each part for a leaf block; nothing for a bridge block
/// whose cut vertices sit in different parts. Their union with the cut
/// vertices induces the tree.
pub fn build_tg(g: &Graph, bd: &BlockDecomposition) -> Result<AssocTree> {
    let class = classify_decomposition(g, bd);
    if !class.is_class_b() {
        return Err(Error::NotClassB(
            class
                .witness
                .map_or_else(|| format!("{:?}", class.kind), |w| w.to_string()),
        ));
    }

    let mut selected: Vec<(Vertex, SelectReason)> = bd
        .cut_vertices
        .iter()
        .map(|&v| (v, SelectReason::CutVertex))
        .collect();

    for (bi, block) in bd.blocks.iter().enumerate() {
        let (v1, v2) = block
            .bipartition
            .as_ref()
            .expect("class-B blocks are complete bipartite");
        let min_noncut = |part: &[Vertex]| -> Option<Vertex> {
            part.iter().copied().find(|&v| !bd.is_cut_vertex(v))
        };
        let cuts_in = |part: &[Vertex]| -> usize {
            part.iter().filter(|&&v| bd.is_cut_vertex(v)).count()
        };
        let picks: Vec<Vertex> = if cuts_in(v1) == 2 {
            min_noncut(v2).into_iter().collect()
        } else if cuts_in(v2) == 2 {
            min_noncut(v1).into_iter().collect()
        } else if block.kind == BlockKind::Leaf {
            min_noncut(v1).into_iter().chain(min_noncut(v2)).collect()
        } else {
            Vec::new()
        };
        for p in picks {
            selected.push((p, SelectReason::BlockPick { block: bi }));
        }
    }

    selected.sort_by_key(|&(v, _)| v);
    selected.dedup_by_key(|&mut (v, _)| v);
    let vertices: Vec<Vertex> = selected.iter().map(|&(v, _)| v).collect();
    let reasons: Vec<SelectReason> = selected.iter().map(|&(_, r)| r).collect();

    let edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            vertices.binary_search(&u).is_ok() && vertices.binary_search(&v).is_ok()
        })
        .collect();

    let mut adj = vec![Vec::new(); vertices.len()];
    for &(u, v) in &edges {
        let iu = vertices.binary_search(&u).unwrap();
        let iv = vertices.binary_search(&v).unwrap();
        adj[iu].push(iv);
        adj[iv].push(iu);
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    Ok(AssocTree {
        vertices,
        edges,
        reasons,
        adj,
    })
}

#[derive(Debug, Clone)]
pub struct TgCheck {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Outcome of the associated-tree verification, one entry per check.
#[derive(Debug, Clone)]
pub struct TgReport {
    pub checks: Vec<TgCheck>,
}

impl TgReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks that the associated tree is a tree, preserves distances between
/// its vertices, and has the host's diameter and eccentricities.
pub fn verify_tg(g: &Graph, tg: &AssocTree) -> TgReport {
    let mut checks = Vec::new();

    checks.push(TgCheck {
        name: "tree",
        pass: tg.is_tree(),
        witness: (!tg.is_tree()).then(|| {
            format!(
                "{} vertices, {} edges, connected: {}",
                tg.vertices().len(),
                tg.edges().len(),
                tg.is_connected()
            )
        }),
    });

    let mut dist_witness = None;
    let mut ecc_witness = None;
    for &a in tg.vertices() {
        let dg = g.bfs_distances(a);
        let dt = tg.distances_from(a).unwrap_or_default();
        let mut max_g = 0;
        for (i, val) in dg.iter().enumerate() {
            let b = i + 1;
            let v = val.unwrap_or(u32::MAX);
            max_g = max_g.max(v);
            if dist_witness.is_none() {
                if let Some(ib) = tg.index_of(b) {
                    match dt.get(ib).copied().flatten() {
                        Some(t) if t == v => {}
                        other => {
                            dist_witness = Some(format!(
                                "d_G({a},{b}) = {v} but d_T({a},{b}) = {other:?}"
                            ));
                        }
                    }
                }
            }
        }
        let max_t = dt.iter().map(|x| x.unwrap_or(u32::MAX)).max().unwrap_or(0);
        if max_g != max_t && ecc_witness.is_none() {
            ecc_witness = Some(format!("e_G({a}) = {max_g} but e_T({a}) = {max_t}"));
        }
    }
    checks.push(TgCheck {
        name: "distance-preservation",
        pass: dist_witness.is_none(),
        witness: dist_witness,
    });

    let diam_g = {
        let d = all_pairs_distances(g);
        match d {
            Ok(d) => ecc_profile(&d).diameter,
            Err(_) => u32::MAX,
        }
    };
    let diam_t = tg.diameter().unwrap_or(u32::MAX);
    checks.push(TgCheck {
        name: "equal-diameter",
        pass: diam_g == diam_t,
        witness: (diam_g != diam_t).then(|| format!("diam(G) = {diam_g}, diam(T) = {diam_t}")),
    });

    checks.push(TgCheck {
        name: "equal-eccentricity",
        pass: ecc_witness.is_none(),
        witness: ecc_witness,
    });

    TgReport { checks }
}

/// Which branch of the center theorem applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterCase {
    /// Even diameter, the tree center is a cut vertex: `C(G) = {z}`.
    EvenZCut { z: Vertex },
    /// Even diameter, the tree center is not a cut vertex: `C(G)` is the
    /// whole part of the central block containing it.
    EvenZNoncut { z: Vertex },
    /// Odd diameter, both tree-center vertices are cut vertices.
    OddBothCut { z1: Vertex, z2: Vertex },
    /// Odd diameter, only `z1` (in part 1 of the central block) is a cut
    /// vertex: `C(G) = {z1} ∪ V2(B)`.
    OddZ1Cut { z1: Vertex, z2: Vertex },
    /// Odd diameter, only `z2` (in part 2 of the central block) is a cut
    /// vertex: `C(G) = {z2} ∪ V1(B)`.
    OddZ2Cut { z1: Vertex, z2: Vertex },
}

impl CenterCase {
    pub fn tag(&self) -> &'static str {
        match self {
            CenterCase::EvenZCut { .. } => "even/z-cut",
            CenterCase::EvenZNoncut { .. } => "even/z-noncut",
            CenterCase::OddBothCut { .. } => "odd/both-cut",
            CenterCase::OddZ1Cut { .. } => "odd/z1-cut",
            CenterCase::OddZ2Cut { .. } => "odd/z2-cut",
        }
    }

    pub fn is_odd(&self) -> bool {
        matches!(
            self,
            CenterCase::OddBothCut { .. }
                | CenterCase::OddZ1Cut { .. }
                | CenterCase::OddZ2Cut { .. }
        )
    }
}

/// Centers of the host graph and of its associated tree.
#[derive(Debug, Clone)]
pub struct CenterInfo {
    pub center_g: Vec<Vertex>,
    pub center_tg: Vec<Vertex>,
    pub case: CenterCase,
    /// Block carrying the center, absent in the even/z-cut case.
    pub central_block: Option<usize>,
}

/// Derives the center of a class-B graph with diameter at least four from
/// the center of its associated tree, by the case analysis of the center
/// theorem. The result must equal the brute-force center; tests assert it.
pub fn center_of_g(g: &Graph, tg: &AssocTree, bd: &BlockDecomposition) -> Result<CenterInfo> {
    let class = classify_decomposition(g, bd);
    if !class.is_class_b() {
        return Err(Error::NotClassB(
            class
                .witness
                .map_or_else(|| format!("{:?}", class.kind), |w| w.to_string()),
        ));
    }
    let d = all_pairs_distances(g)?;
    let profile = ecc_profile(&d);
    if profile.diameter < 4 {
        return Err(Error::DiameterTooSmall {
            diameter: profile.diameter,
            required: 4,
        });
    }

    let center_tg = tg
        .center()
        .ok_or_else(|| Error::Invalid("associated tree is not connected".into()))?;

    match center_tg.as_slice() {
        &[z] => {
            if bd.is_cut_vertex(z) {
                Ok(CenterInfo {
                    center_g: vec![z],
                    center_tg,
                    case: CenterCase::EvenZCut { z },
                    central_block: None,
                })
            } else {
                let b = bd.blocks_of_vertex(z)[0];
                let (_, part) = bd.blocks[b]
                    .part_of(z)
                    .ok_or_else(|| Error::Invalid("central block is not bipartite".into()))?;
                Ok(CenterInfo {
                    center_g: part.to_vec(),
                    center_tg,
                    case: CenterCase::EvenZNoncut { z },
                    central_block: Some(b),
                })
            }
        }
        &[za, zb] => {
            let key = (za.min(zb), za.max(zb));
            let &b = bd
                .block_of_edge
                .get(&key)
                .ok_or_else(|| Error::Invalid("tree center vertices are not adjacent".into()))?;
            let block = &bd.blocks[b];
            let (side_a, _) = block
                .part_of(za)
                .ok_or_else(|| Error::Invalid("central block is not bipartite".into()))?;
            let (z1, z2) = if side_a == 0 { (za, zb) } else { (zb, za) };
            let (v1, v2) = block.bipartition.as_ref().unwrap();
            let (cut1, cut2) = (bd.is_cut_vertex(z1), bd.is_cut_vertex(z2));
            let (case, mut center_g) = match (cut1, cut2) {
                (true, true) => (CenterCase::OddBothCut { z1, z2 }, vec![z1, z2]),
                (true, false) => {
                    let mut c = v2.clone();
                    c.push(z1);
                    (CenterCase::OddZ1Cut { z1, z2 }, c)
                }
                (false, true) => {
                    let mut c = v1.clone();
                    c.push(z2);
                    (CenterCase::OddZ2Cut { z1, z2 }, c)
                }
                (false, false) => {
                    return Err(Error::Invalid(
                        "both central tree vertices are non-cut; impossible in class B".into(),
                    ))
                }
            };
            center_g.sort_unstable();
            center_g.dedup();
            Ok(CenterInfo {
                center_g,
                center_tg,
                case,
                central_block: Some(b),
            })
        }
        _ => Err(Error::Invalid(format!(
            "tree center has {} vertices; a tree has one or two",
            center_tg.len()
        ))),
    }
}

/// Predicts the eccentricity of a non-cut vertex `u` of a leaf or bridge
/// block from the eccentricities of the block's cut vertices.
///
/// Bridge block with cut vertices `v1`, `v2` ordered so `e(v1) <= e(v2)`:
/// `e(u) = e(v2)` when all three share a part; `e(v2) - 1` when the cuts
/// share a part and `u` is opposite; `e(v2) + 1` when `u` shares a part
/// with `v1` only; `e(v1) + 1` when `u` shares a part with `v2` only.
/// Leaf block with cut vertex `v`: `e(v) + 2` on the same part, `e(v) + 1`
/// opposite.
pub fn ecc_by_lemma(
    profile: &EccProfile,
    bd: &BlockDecomposition,
    block: usize,
    u: Vertex,
) -> Result<u32> {
    if profile.diameter < 4 {
        return Err(Error::DiameterTooSmall {
            diameter: profile.diameter,
            required: 4,
        });
    }
    let b = bd
        .blocks
        .get(block)
        .ok_or_else(|| Error::Invalid(format!("no block with index {block}")))?;
    if !b.contains(u) {
        return Err(Error::Invalid(format!("vertex {u} not in block {block}")));
    }
    if bd.is_cut_vertex(u) {
        return Err(Error::Invalid(format!("vertex {u} is a cut vertex")));
    }
    let (side_u, _) = b
        .part_of(u)
        .ok_or_else(|| Error::Invalid("block is not bipartite".into()))?;
    match b.kind {
        BlockKind::Leaf => {
            let v = bd.cuts_in_block(block)[0];
            let (side_v, _) = b.part_of(v).unwrap();
            Ok(if side_u == side_v {
                profile.ecc_of(v) + 2
            } else {
                profile.ecc_of(v) + 1
            })
        }
        BlockKind::Bridge => {
            let cuts = bd.cuts_in_block(block);
            let (mut a, mut c) = (cuts[0], cuts[1]);
            if profile.ecc_of(a) > profile.ecc_of(c) {
                std::mem::swap(&mut a, &mut c);
            }
            let (side_a, _) = b.part_of(a).unwrap();
            let (side_c, _) = b.part_of(c).unwrap();
            Ok(if side_a == side_c {
                if side_u == side_a {
                    profile.ecc_of(c)
                } else {
                    profile.ecc_of(c) - 1
                }
            } else if side_u == side_a {
                profile.ecc_of(c) + 1
            } else {
                profile.ecc_of(a) + 1
            })
        }
        _ => Err(Error::Invalid(
            "block is neither a leaf nor a bridge block".into(),
        )),
    }
}
