//! Shared fixtures: the worked example graphs and a precomputed analysis
//! bundle.

#![allow(dead_code)]

use eccspectra::{
    all_pairs_distances, decompose, ecc_profile, eccentricity_matrix_from, BlockDecomposition,
    DistanceMatrix, EccMatrix, EccProfile, Graph,
};

/// Five-vertex graph H: a 4-cycle block K_{2,2} with a pendant edge,
/// diameter 3.
pub fn graph_h() -> Graph {
    Graph::from_edges(5, [(1, 3), (1, 4), (2, 3), (2, 4), (4, 5)]).unwrap()
}

/// 16-vertex graph with three leaf blocks (two single edges and a K_{2,3})
/// and three bridge blocks (K_{2,2}, a single edge, K_{3,3}); diameter 7.
pub fn graph16() -> Graph {
    Graph::from_edges(
        16,
        [
            (1, 3),
            (2, 3),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 7),
            (7, 10),
            (7, 11),
            (7, 12),
            (8, 10),
            (8, 11),
            (8, 12),
            (9, 10),
            (9, 11),
            (9, 12),
            (9, 13),
            (9, 14),
            (13, 15),
            (13, 16),
            (14, 15),
            (14, 16),
        ],
    )
    .unwrap()
}

/// Nine-vertex bi-block graph outside class B: two 4-cycles sharing a
/// vertex that carries three cut vertices in one block, plus two pendant
/// edges.
pub fn graph9() -> Graph {
    Graph::from_edges(
        9,
        [
            (1, 2),
            (1, 3),
            (1, 6),
            (1, 7),
            (2, 4),
            (3, 4),
            (3, 5),
            (4, 8),
            (6, 9),
            (7, 9),
        ],
    )
    .unwrap()
}

/// 13-vertex even-diameter witness with a non-cut tree center: a K_{3,2}
/// bridge block whose part {1,2,3} is the whole center, four pendant
/// leaves on each cut vertex. Diameter 4, center size 3.
pub fn witness13() -> Graph {
    Graph::from_edges(
        13,
        [
            (1, 4),
            (1, 5),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 6),
            (4, 7),
            (4, 8),
            (4, 9),
            (5, 10),
            (5, 11),
            (5, 12),
            (5, 13),
        ],
    )
    .unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).unwrap()
}

/// Spider with three legs of length two from the center.
pub fn spider3() -> Graph {
    Graph::from_edges(7, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)]).unwrap()
}

/// Everything the checks keep reaching for, computed once per graph.
pub struct Ctx {
    pub g: Graph,
    pub d: DistanceMatrix,
    pub profile: EccProfile,
    pub bd: BlockDecomposition,
    pub e: EccMatrix,
}

impl Ctx {
    pub fn new(g: Graph) -> Ctx {
        let d = all_pairs_distances(&g).unwrap();
        let profile = ecc_profile(&d);
        let bd = decompose(&g).unwrap();
        let e = eccentricity_matrix_from(&d, &profile);
        Ctx {
            g,
            d,
            profile,
            bd,
            e,
        }
    }
}
