//! Seeded random generators for class-B graphs and independent brute-force
//! oracles used to cross-check the fast paths.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::blocks::classify;
use crate::graph::{all_pairs_distances, ecc_profile, DistanceMatrix, Graph, Vertex};
use crate::spectral::SquareMatrix;
use crate::{Error, Result};

/// xorshift64* generator: the state update is
/// `x ^= x >> 12; x ^= x << 25; x ^= x >> 27`, and the output is
/// `x * 0x2545F4914F6CDD1D`. A zero seed is replaced by a fixed nonzero
/// constant since the all-zero state is a fixed point.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng {
            state: if seed == 0 { 0x9E3779B97F4A7C15 } else { seed },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Draw from `0..bound` by plain modulo reduction; the reduction rule
    /// is part of the documented stream.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }

    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below((hi - lo + 1) as u64) as usize
    }

    /// In-place Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below((i + 1) as u64) as usize;
            items.swap(i, j);
        }
    }
}

/// Requested diameter parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Any,
    Odd,
    Even,
}

impl Parity {
    pub fn accepts(&self, diameter: u32) -> bool {
        match self {
            Parity::Any => true,
            Parity::Odd => diameter % 2 == 1,
            Parity::Even => diameter % 2 == 0,
        }
    }
}

/// Parameters of the class-B generator.
#[derive(Debug, Clone)]
pub struct GenParams {
    pub seed: u64,
    /// Inclusive range for the number of blocks.
    pub blocks: (usize, usize),
    /// Inclusive range each part size of a block is drawn from.
    pub parts: (usize, usize),
    pub parity: Parity,
    pub min_diameter: u32,
    pub max_vertices: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            seed: 1,
            blocks: (2, 8),
            parts: (1, 4),
            parity: Parity::Any,
            min_diameter: 4,
            max_vertices: 60,
        }
    }
}

impl GenParams {
    pub fn with_seed(seed: u64) -> Self {
        GenParams {
            seed,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.blocks.0 > self.blocks.1 || self.parts.0 > self.parts.1 {
            return Err(Error::Invalid("empty parameter range".into()));
        }
        if self.blocks.0 < 1 || self.parts.0 < 1 {
            return Err(Error::Invalid("ranges must start at 1".into()));
        }
        Ok(())
    }
}

const RETRY_BUDGET: usize = 10_000;

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Per recorded block: vertex list and cut set.
    block_vertices: Vec<Vec<usize>>,
    block_cuts: Vec<Vec<usize>>,
    /// Blocks containing each vertex.
    vertex_blocks: Vec<Vec<usize>>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            n: 0,
            edges: Vec::new(),
            block_vertices: Vec::new(),
            block_cuts: Vec::new(),
            vertex_blocks: Vec::new(),
        }
    }

    fn fresh_vertex(&mut self) -> usize {
        self.n += 1;
        self.vertex_blocks.push(Vec::new());
        self.n - 1
    }

    /// A vertex can host a new block when every block already containing it
    /// either counts it as a cut vertex already or still has room for one.
    fn eligible(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| {
                self.vertex_blocks[v].iter().all(|&b| {
                    self.block_cuts[b].contains(&v) || self.block_cuts[b].len() < 2
                })
            })
            .collect()
    }

    /// Adds a complete bipartite block; `attach` joins its first part when
    /// `side` is 0, its second when 1. Part sizes count the attach vertex.
    fn add_block(&mut self, l: usize, m: usize, attach: Option<(usize, u8)>) {
        let bi = self.block_vertices.len();
        let mut part1 = Vec::new();
        let mut part2 = Vec::new();
        if let Some((v, side)) = attach {
            if side == 0 {
                part1.push(v);
            } else {
                part2.push(v);
            }
        }
        while part1.len() < l {
            let v = self.fresh_vertex();
            part1.push(v);
        }
        while part2.len() < m {
            let v = self.fresh_vertex();
            part2.push(v);
        }
        for &u in &part1 {
            for &w in &part2 {
                self.edges.push((u.min(w), u.max(w)));
            }
        }
        let mut cuts = Vec::new();
        if let Some((v, _)) = attach {
            // The attach vertex becomes a cut vertex of every block it was
            // already in, and of the new one.
            for &b in &self.vertex_blocks[v] {
                if !self.block_cuts[b].contains(&v) {
                    self.block_cuts[b].push(v);
                }
            }
            cuts.push(v);
        }
        for &v in part1.iter().chain(part2.iter()) {
            self.vertex_blocks[v].push(bi);
        }
        let mut vertices = part1;
        vertices.extend(part2);
        self.block_vertices.push(vertices);
        self.block_cuts.push(cuts);
    }
}

/// Draws a complete-bipartite block shape from the part range. A shape with
/// exactly one singleton part cannot occur as a block (it is not
/// 2-connected), so the singleton side is widened to 2.
fn draw_block_shape(rng: &mut Rng, parts: (usize, usize)) -> (usize, usize) {
    let mut l = rng.range_inclusive(parts.0, parts.1);
    let mut m = rng.range_inclusive(parts.0, parts.1);
    if l == 1 && m > 1 {
        l = 2;
    } else if m == 1 && l > 1 {
        m = 2;
    }
    (l, m)
}

/// Deterministic seeded generator for class-B graphs: grows a block tree,
/// each new block a random complete bipartite graph attached at an existing
/// vertex that still permits a new incidence, then rejection-samples until
/// the diameter and parity constraints hold.
pub fn random_class_b(params: &GenParams) -> Result<Graph> {
    params.validate()?;
    if params.blocks.1 < 2 {
        // Class B needs at least two blocks; no retry can fix that.
        return Err(Error::Infeasible { attempts: 0 });
    }
    let mut rng = Rng::new(params.seed);
    for _ in 0..RETRY_BUDGET {
        let target_blocks = rng.range_inclusive(params.blocks.0.max(2), params.blocks.1);
        let mut builder = Builder::new();
        let (l, m) = draw_block_shape(&mut rng, params.parts);
        builder.add_block(l, m, None);
        let mut feasible = true;
        for _ in 1..target_blocks {
            let eligible = builder.eligible();
            if eligible.is_empty() {
                feasible = false;
                break;
            }
            let v = eligible[rng.below(eligible.len() as u64) as usize];
            let (l, m) = draw_block_shape(&mut rng, params.parts);
            let side = (rng.below(2)) as u8;
            builder.add_block(l, m, Some((v, side)));
            if builder.n > params.max_vertices {
                feasible = false;
                break;
            }
        }
        if !feasible || builder.n > params.max_vertices {
            continue;
        }

        // Random relabeling so structural roles are not tied to label order.
        let mut labels: Vec<Vertex> = (1..=builder.n).collect();
        rng.shuffle(&mut labels);
        let g = Graph::from_edges(
            builder.n,
            builder.edges.iter().map(|&(u, v)| (labels[u], labels[v])),
        )?;

        if classify(&g)?.kind != crate::blocks::ClassKind::ClassB {
            continue;
        }
        let d = all_pairs_distances(&g)?;
        let profile = ecc_profile(&d);
        if profile.diameter < params.min_diameter || !params.parity.accepts(profile.diameter) {
            continue;
        }
        return Ok(g);
    }
    Err(Error::Infeasible {
        attempts: RETRY_BUDGET,
    })
}

/// Floyd–Warshall all-pairs distances: the independent triple-loop oracle.
/// The input must be connected.
pub fn oracle_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    const INF: u64 = u64::MAX / 4;
    let mut d = vec![INF; n * n];
    for v in 0..n {
        d[v * n + v] = 0;
    }
    for &(u, v) in g.edges() {
        d[(u - 1) * n + (v - 1)] = 1;
        d[(v - 1) * n + (u - 1)] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i * n + k];
            if dik == INF {
                continue;
            }
            for j in 0..n {
                let via = dik + d[k * n + j];
                if via < d[i * n + j] {
                    d[i * n + j] = via;
                }
            }
        }
    }
    DistanceMatrix::from_rows(n, d.into_iter().map(|x| x as u32).collect())
}

const MINOR_ORACLE_BOUND: usize = 8;

fn det_cofactor(m: &SquareMatrix<BigInt>) -> BigInt {
    let n = m.n();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut det = BigInt::zero();
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let rest: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = SquareMatrix::from_fn(n - 1, |r, c| m.get(r + 1, rest[c]).clone());
        let term = m.get(0, j) * det_cofactor(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// Exact sum of all order-`r` principal minors by subset enumeration and
/// cofactor expansion. Bounded to order 8; beyond that the enumeration
/// explodes.
pub fn oracle_minor_sums(m: &SquareMatrix<BigInt>, r: usize) -> Result<BigInt> {
    let n = m.n();
    if n > MINOR_ORACLE_BOUND {
        return Err(Error::OracleBound {
            n,
            bound: MINOR_ORACLE_BOUND,
        });
    }
    if r > n {
        return Err(Error::Invalid(format!(
            "minor order {r} exceeds matrix order {n}"
        )));
    }
    let mut sum = BigInt::zero();
    for subset in (0..n).combinations(r) {
        sum += det_cofactor(&m.principal_submatrix(&subset));
    }
    Ok(sum)
}
