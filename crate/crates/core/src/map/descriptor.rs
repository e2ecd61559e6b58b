use serde::{Deserialize, Serialize};

use super::{orbits, CombinatorialMap, MapError};

/// The statistics of a pattern map that the occurrence formulas depend on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternDescriptor {
    /// Valency of the root face.
    pub ell: usize,
    /// Edges not incident to the root face.
    pub inner_edges: usize,
    /// Bridges incident to the root face.
    pub outer_edges: usize,
    /// Sum of the valencies of all faces other than the root face.
    pub inner_valency_sum: usize,
    /// Valencies of the faces other than the root face, sorted.
    pub inner_valencies: Vec<usize>,
    /// Rotational reroots giving an isomorphic rooted map (at least 1).
    pub rotational_count: usize,
}

impl PatternDescriptor {
    pub fn of_map(m: &CombinatorialMap) -> Result<Self, MapError> {
        if m.is_empty() {
            return Err(MapError::EmptyMap);
        }
        let phi = m.face_permutation();
        let (face_id, _) = orbits(&phi);
        let root_face = face_id[m.root()];
        let faces = m.faces();
        let ell = faces[0].valency();
        let mut inner_valencies: Vec<usize> = faces[1..].iter().map(|f| f.valency()).collect();
        inner_valencies.sort_unstable();

        let mut inner_edges = 0;
        let mut outer_edges = 0;
        for h in m.edge_representatives() {
            let a = m.alpha()[h];
            let on_root = (face_id[h] == root_face, face_id[a] == root_face);
            match on_root {
                (false, false) => inner_edges += 1,
                (true, true) => outer_edges += 1,
                _ => {}
            }
        }
        Ok(PatternDescriptor {
            ell,
            inner_edges,
            outer_edges,
            inner_valency_sum: inner_valencies.iter().sum(),
            inner_valencies,
            rotational_count: m.rotational_iso_count(),
        })
    }

    /// Number of edges of the described map: half the total face valency.
    pub fn edge_count(&self) -> usize {
        (self.ell + self.inner_valency_sum) / 2
    }

    /// The exponent `k - s` relating occurrences at the root to pure polygons.
    pub fn shift(&self) -> i64 {
        self.inner_edges as i64 - self.outer_edges as i64
    }
}

#[cfg(test)]
mod tests {
    use super::super::examples::*;
    use super::*;

    #[test]
    fn quad_with_diagonal() {
        let d = super::super::examples::quad_with_diagonal().descriptor().unwrap();
        assert_eq!(
            d,
            PatternDescriptor {
                ell: 4,
                inner_edges: 1,
                outer_edges: 0,
                inner_valency_sum: 6,
                inner_valencies: vec![3, 3],
                rotational_count: 2,
            }
        );
        assert_eq!(d.edge_count(), 5);
    }

    #[test]
    fn hexagon_with_chord_and_pendant() {
        let d = hexagon_chord_pendant().descriptor().unwrap();
        assert_eq!((d.ell, d.inner_edges, d.outer_edges), (8, 1, 1));
        assert_eq!(d.inner_valencies, vec![4, 4]);
    }

    #[test]
    fn loop_descriptor() {
        let d = loop_map().descriptor().unwrap();
        assert_eq!((d.ell, d.inner_edges, d.outer_edges, d.inner_valency_sum, d.rotational_count), (1, 0, 0, 1, 1));
        assert_eq!(d.inner_valencies, vec![1]);
    }

    #[test]
    fn bridge_descriptor() {
        let d = bridge().descriptor().unwrap();
        assert_eq!((d.ell, d.inner_edges, d.outer_edges, d.rotational_count), (2, 0, 1, 2));
        assert!(d.inner_valencies.is_empty());
        assert_eq!(d.shift(), -1);
    }

    #[test]
    fn empty_is_rejected() {
        assert_eq!(CombinatorialMap::empty().descriptor(), Err(MapError::EmptyMap));
    }

    #[test]
    fn valency_total_is_twice_edges() {
        for m in [triangle_with_chord(), triangle_with_pendant(), path2(), cycle(6)] {
            let d = m.descriptor().unwrap();
            assert_eq!(d.ell + d.inner_valency_sum, 2 * m.edge_count());
            let on_root = m.edge_count() - d.inner_edges;
            assert!(on_root >= 1 && d.outer_edges <= on_root);
        }
    }
}
