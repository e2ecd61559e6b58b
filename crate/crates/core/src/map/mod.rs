//! Rooted planar maps encoded as rotation systems on half-edges.
//!
//! A map with `E` edges has half-edges `0..2E`. `alpha` pairs the two halves
//! of each edge, `sigma` gives the cyclic order of half-edges around each
//! vertex, and `root` is the root half-edge, pointing away from the root
//! vertex. The face to the left of `h` is traced by `h -> sigma(alpha(h))`,
//! and the root face is the orbit of `root` under that permutation.

mod canonical;
mod descriptor;
pub mod format;

use thiserror::Error;

pub use canonical::canonical_code_of;
pub use descriptor::PatternDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("alpha and sigma have different lengths ({alpha} vs {sigma})")]
    LengthMismatch { alpha: usize, sigma: usize },
    #[error("half-edge count {0} is odd")]
    OddHalfEdgeCount(usize),
    #[error("{which} is not a permutation of 0..{len}")]
    NotPermutation { which: &'static str, len: usize },
    #[error("alpha is not a fixed-point-free involution at half-edge {0}")]
    NotInvolution(usize),
    #[error("root half-edge {root} is out of range for {len} half-edges")]
    RootOutOfRange { root: usize, len: usize },
    #[error("the map is not connected")]
    NotConnected,
    #[error("Euler relation fails: V - E + F = {euler} (genus {genus}), the map is not planar")]
    NotPlanar { euler: i64, genus: i64 },
    #[error("the empty map has no half-edges")]
    EmptyMap,
    #[error("map file: {0}")]
    Parse(String),
}

/// A validated rooted planar map, or the empty map (no edges, one vertex).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombinatorialMap {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    root: usize,
}

/// A face as the cyclic sequence of half-edges having it on their left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub half_edges: Vec<usize>,
}

impl Face {
    pub fn valency(&self) -> usize {
        self.half_edges.len()
    }
}

/// Orbit index of every point under `perm`, and the number of orbits.
pub(crate) fn orbits(perm: &[usize]) -> (Vec<usize>, usize) {
    let mut id = vec![usize::MAX; perm.len()];
    let mut count = 0;
    for start in 0..perm.len() {
        if id[start] != usize::MAX {
            continue;
        }
        let mut h = start;
        while id[h] == usize::MAX {
            id[h] = count;
            h = perm[h];
        }
        count += 1;
    }
    (id, count)
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

impl CombinatorialMap {
    /// Validates raw permutation data: involution, connectivity, planarity.
    pub fn new(alpha: Vec<usize>, sigma: Vec<usize>, root: usize) -> Result<Self, MapError> {
        validate(&alpha, &sigma, root)?;
        Ok(CombinatorialMap { alpha, sigma, root })
    }

    /// The map with no edges.
    pub fn empty() -> Self {
        CombinatorialMap { alpha: Vec::new(), sigma: Vec::new(), root: 0 }
    }

    /// Builds a map from vertex rotations. Edge `i` consists of half-edges
    /// `2i` and `2i + 1`; each inner list is the cyclic order of half-edges
    /// around one vertex.
    pub fn from_rotations(rotations: &[Vec<usize>], root: usize) -> Result<Self, MapError> {
        let len: usize = rotations.iter().map(Vec::len).sum();
        let mut sigma = vec![usize::MAX; len];
        for cycle in rotations {
            for (i, &h) in cycle.iter().enumerate() {
                if h >= len || sigma[h] != usize::MAX {
                    return Err(MapError::NotPermutation { which: "sigma", len });
                }
                sigma[h] = cycle[(i + 1) % cycle.len()];
            }
        }
        let alpha = (0..len).map(|h| h ^ 1).collect();
        Self::new(alpha, sigma, root)
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn half_edge_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn edge_count(&self) -> usize {
        self.alpha.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        if self.is_empty() {
            1
        } else {
            orbits(&self.sigma).1
        }
    }

    /// Face successor: the next half-edge along the face on the left of `h`.
    pub fn phi(&self, h: usize) -> usize {
        self.sigma[self.alpha[h]]
    }

    pub fn face_permutation(&self) -> Vec<usize> {
        (0..self.half_edge_count()).map(|h| self.phi(h)).collect()
    }

    /// All faces, the root face first; the others in order of their smallest half-edge.
    pub fn faces(&self) -> Vec<Face> {
        if self.is_empty() {
            return vec![Face { half_edges: Vec::new() }];
        }
        let mut seen = vec![false; self.half_edge_count()];
        let mut faces = Vec::new();
        let starts = std::iter::once(self.root).chain(0..self.half_edge_count());
        for start in starts {
            if seen[start] {
                continue;
            }
            let mut half_edges = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                half_edges.push(h);
                h = self.phi(h);
            }
            faces.push(Face { half_edges });
        }
        faces
    }

    pub fn root_face(&self) -> Face {
        self.faces().swap_remove(0)
    }

    pub fn face_count(&self) -> usize {
        if self.is_empty() {
            1
        } else {
            orbits(&self.face_permutation()).1
        }
    }

    /// Vertex index of every half-edge (its origin).
    pub fn vertex_of(&self) -> Vec<usize> {
        orbits(&self.sigma).0
    }

    /// Edges whose two sides lie on the same face, as their smaller half-edge.
    pub fn bridges(&self) -> Vec<usize> {
        let (face_id, _) = orbits(&self.face_permutation());
        self.edge_representatives().into_iter().filter(|&h| face_id[h] == face_id[self.alpha[h]]).collect()
    }

    /// The smaller half-edge of every edge, in increasing order.
    pub fn edge_representatives(&self) -> Vec<usize> {
        (0..self.half_edge_count()).filter(|&h| h < self.alpha[h]).collect()
    }

    /// Same map rerooted at half-edge `h`.
    pub fn rerooted(&self, h: usize) -> Self {
        assert!(h < self.half_edge_count(), "root out of range");
        CombinatorialMap { alpha: self.alpha.clone(), sigma: self.sigma.clone(), root: h }
    }

    /// Applies the relabeling `h -> perm[h]` to all half-edges.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert!(is_permutation(perm) && perm.len() == self.half_edge_count());
        let n = perm.len();
        let mut alpha = vec![0; n];
        let mut sigma = vec![0; n];
        for h in 0..n {
            alpha[perm[h]] = perm[self.alpha[h]];
            sigma[perm[h]] = perm[self.sigma[h]];
        }
        let root = if n == 0 { 0 } else { perm[self.root] };
        CombinatorialMap { alpha, sigma, root }
    }

    /// Byte code identifying the rooted map up to isomorphism.
    pub fn canonical_code(&self) -> Vec<u8> {
        canonical::canonical_code_of(&self.alpha, &self.sigma, self.root).expect("validated maps are connected")
    }

    /// Relabeling in canonical breadth-first order; the root becomes half-edge 0.
    pub fn normalized(&self) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let order = canonical::bfs_order(&self.alpha, &self.sigma, self.root);
        let mut perm = vec![0; order.len()];
        for (label, &h) in order.iter().enumerate() {
            perm[h] = label;
        }
        self.relabeled(&perm)
    }

    pub fn is_isomorphic(&self, other: &CombinatorialMap) -> bool {
        self.canonical_code() == other.canonical_code()
    }

    /// Number of rootings on the root face (face on the left of the new root)
    /// that give a rooted map isomorphic to this one. Always at least 1.
    pub fn rotational_iso_count(&self) -> usize {
        if self.is_empty() {
            return 1;
        }
        let code = self.canonical_code();
        self.root_face()
            .half_edges
            .iter()
            .filter(|&&r| canonical::canonical_code_of(&self.alpha, &self.sigma, r).as_ref() == Some(&code))
            .count()
    }

    pub fn descriptor(&self) -> Result<PatternDescriptor, MapError> {
        PatternDescriptor::of_map(self)
    }
}

/// Checks the three structural invariants of a rooted planar map.
pub fn validate(alpha: &[usize], sigma: &[usize], root: usize) -> Result<(), MapError> {
    if alpha.len() != sigma.len() {
        return Err(MapError::LengthMismatch { alpha: alpha.len(), sigma: sigma.len() });
    }
    let len = alpha.len();
    if len == 0 {
        return Err(MapError::EmptyMap);
    }
    if len % 2 == 1 {
        return Err(MapError::OddHalfEdgeCount(len));
    }
    if !is_permutation(alpha) {
        return Err(MapError::NotPermutation { which: "alpha", len });
    }
    if !is_permutation(sigma) {
        return Err(MapError::NotPermutation { which: "sigma", len });
    }
    if let Some(h) = (0..len).find(|&h| alpha[h] == h || alpha[alpha[h]] != h) {
        return Err(MapError::NotInvolution(h));
    }
    if root >= len {
        return Err(MapError::RootOutOfRange { root, len });
    }
    if canonical::bfs_order(alpha, sigma, root).len() != len {
        return Err(MapError::NotConnected);
    }
    let v = orbits(sigma).1 as i64;
    let phi: Vec<usize> = (0..len).map(|h| sigma[alpha[h]]).collect();
    let f = orbits(&phi).1 as i64;
    let e = (len / 2) as i64;
    let euler = v - e + f;
    if euler != 2 {
        return Err(MapError::NotPlanar { euler, genus: (2 - euler) / 2 });
    }
    Ok(())
}

/// Small maps used throughout the tests and documentation.
pub mod examples {
    use super::CombinatorialMap;

    /// One edge, one vertex.
    pub fn loop_map() -> CombinatorialMap {
        CombinatorialMap::from_rotations(&[vec![0, 1]], 0).unwrap()
    }

    /// One edge, two vertices.
    pub fn bridge() -> CombinatorialMap {
        CombinatorialMap::from_rotations(&[vec![0], vec![1]], 0).unwrap()
    }

    /// Simple cycle of length `ell >= 2`.
    pub fn cycle(ell: usize) -> CombinatorialMap {
        assert!(ell >= 2);
        // Edge i runs from vertex i (half-edge 2i) to vertex i+1 (half-edge 2i+1).
        let rotations: Vec<Vec<usize>> = (0..ell)
            .map(|v| {
                let out = 2 * v;
                let inc = 2 * ((v + ell - 1) % ell) + 1;
                vec![out, inc]
            })
            .collect();
        CombinatorialMap::from_rotations(&rotations, 0).unwrap()
    }

    /// Quadrilateral ABCD with diagonal AC, rooted at A -> B on the outer face.
    pub fn quad_with_diagonal() -> CombinatorialMap {
        // AB = (0,1), BC = (2,3), CD = (4,5), DA = (6,7), AC = (8,9)
        CombinatorialMap::from_rotations(&[vec![0, 8, 7], vec![1, 2], vec![3, 4, 9], vec![5, 6]], 0).unwrap()
    }

    /// Hexagon with one chord and a pendant edge in the outer face:
    /// root face valency 8, one inner edge, one outer edge.
    pub fn hexagon_chord_pendant() -> CombinatorialMap {
        // Hexagon edges i = 0..6 from v_i (2i) to v_{i+1} (2i+1); chord v0-v3 is
        // edge 6 (12 at v0, 13 at v3); pendant edge 7 from v1 (14) to v6 (15).
        CombinatorialMap::from_rotations(
            &[vec![0, 12, 11], vec![2, 1, 14], vec![4, 3], vec![6, 13, 5], vec![8, 7], vec![10, 9], vec![15]],
            0,
        )
        .unwrap()
    }

    /// Two parallel edges.
    pub fn digon() -> CombinatorialMap {
        cycle(2)
    }

    /// Triangle with an extra edge parallel to the root edge inside it.
    pub fn triangle_with_chord() -> CombinatorialMap {
        // Triangle A(0)B(1)C(2): AB = (0,1), BC = (2,3), CA = (4,5);
        // inner parallel AB' = (6,7).
        CombinatorialMap::from_rotations(&[vec![0, 6, 5], vec![1, 2, 7], vec![3, 4]], 0).unwrap()
    }

    /// Triangle with a pendant edge attached in its outer face.
    pub fn triangle_with_pendant() -> CombinatorialMap {
        // Triangle as above plus pendant edge (6,7) from A to a new vertex.
        CombinatorialMap::from_rotations(&[vec![0, 5, 6], vec![1, 2], vec![3, 4], vec![7]], 0).unwrap()
    }

    /// Path with two edges, rooted at an end.
    pub fn path2() -> CombinatorialMap {
        CombinatorialMap::from_rotations(&[vec![0], vec![1, 2], vec![3]], 0).unwrap()
    }

    /// The genus-one map with one vertex and two edges (rotation a b a' b').
    pub fn torus_square_raw() -> (Vec<usize>, Vec<usize>) {
        (vec![1, 0, 3, 2], vec![2, 3, 1, 0])
    }
}
