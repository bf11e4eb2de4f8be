//! The eccentricity matrix: the distance matrix with an entry kept exactly
//! when it equals the smaller of the two endpoint eccentricities, and its
//! support-graph irreducibility test.

use crate::graph::{all_pairs_distances, ecc_profile, DistanceMatrix, EccProfile, Graph, Vertex};
use crate::Result;

/// Dense symmetric nonnegative integer matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccMatrix {
    n: usize,
    e: Vec<u32>,
    /// Source eccentricities, `ecc[v - 1]` for vertex `v`.
    ecc: Vec<u32>,
}

impl EccMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry for the vertex pair `(u, v)` (1-based labels).
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.e[(u - 1) * self.n + (v - 1)]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.e[(u - 1) * self.n..u * self.n]
    }

    pub fn ecc_of(&self, v: Vertex) -> u32 {
        self.ecc[v - 1]
    }

    pub fn nonzero_count(&self) -> usize {
        self.e.iter().filter(|&&x| x != 0).count()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.e
            .iter()
            .map(|&x| (x as f64) * (x as f64))
            .sum::<f64>()
            .sqrt()
    }

    /// One row per line, space-separated integers.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for u in 1..=self.n {
            let row: Vec<String> = self.row(u).iter().map(|x| x.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Builds a matrix from explicit rows; intended for fixtures and tests.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<EccMatrix> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(crate::Error::Invalid("matrix must be square".into()));
        }
        for i in 0..n {
            if rows[i][i] != 0 {
                return Err(crate::Error::Invalid("diagonal must be zero".into()));
            }
            for j in 0..n {
                if rows[i][j] != rows[j][i] {
                    return Err(crate::Error::Invalid("matrix must be symmetric".into()));
                }
            }
        }
        let ecc = rows
            .iter()
            .map(|r| r.iter().copied().max().unwrap_or(0))
            .collect();
        Ok(EccMatrix {
            n,
            e: rows.iter().flatten().copied().collect(),
            ecc,
        })
    }
}

/// Eccentricity matrix of a connected graph.
pub fn eccentricity_matrix(g: &Graph) -> Result<EccMatrix> {
    let d = all_pairs_distances(g)?;
    let profile = ecc_profile(&d);
    Ok(eccentricity_matrix_from(&d, &profile))
}

/// Same as `eccentricity_matrix` but reusing precomputed distances.
pub fn eccentricity_matrix_from(d: &DistanceMatrix, profile: &EccProfile) -> EccMatrix {
    let n = d.n();
    let mut e = vec![0u32; n * n];
    for u in 1..=n {
        for v in 1..=n {
            let duv = d.get(u, v);
            if u != v && duv == profile.ecc_of(u).min(profile.ecc_of(v)) {
                e[(u - 1) * n + (v - 1)] = duv;
            }
        }
    }
    EccMatrix {
        n,
        e,
        ecc: profile.ecc.clone(),
    }
}

/// Graph on the same vertex set with an edge wherever the matrix entry is
/// nonzero. May be disconnected.
pub fn support_graph(e: &EccMatrix) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=e.n() {
        for v in (u + 1)..=e.n() {
            if e.get(u, v) != 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(e.n(), edges).expect("support edges are simple by construction")
}

/// A nonnegative symmetric matrix is irreducible exactly when its support
/// graph is connected; a 1x1 matrix counts as irreducible.
pub fn is_irreducible(e: &EccMatrix) -> bool {
    support_graph(e).is_connected()
}
