//! Generation of every rooted planar map with at most `n` edges.
//!
//! Half-edges are labeled in the order a traversal from the root discovers
//! them: edge `e` owns half-edges `2e` and `2e + 1`, the root is 0, and
//! half-edges are processed in label order. Processing `h` chooses
//! `sigma(h)`, either an already labeled half-edge that has no
//! `sigma`-preimage yet or the first half of a brand new edge. Every rooted
//! map (of any genus) has exactly one such labeling, so each one appears
//! exactly once as a leaf of the search; planar ones are kept.

use rayon::prelude::*;

use crate::map::{CombinatorialMap, MapError};
use crate::{Error, Result};

const UNSET: usize = usize::MAX;

/// Largest edge count the search will attempt.
pub const HARD_LIMIT: usize = 7;
/// Largest edge count attempted unless a caller raises it.
pub const DEFAULT_LIMIT: usize = 6;

/// All rooted planar maps with exactly `n` edges and their basic statistics.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub n: usize,
    /// Sorted by canonical code, no two isomorphic.
    pub maps: Vec<CombinatorialMap>,
    /// `root_valency[k]` = number of maps whose root face has valency `k`.
    pub root_valency: Vec<u64>,
    /// `pure_gon[ℓ]` = number of maps whose root face is a pure `ℓ`-gon.
    pub pure_gon: Vec<u64>,
}

impl EnumerationResult {
    pub fn count(&self) -> usize {
        self.maps.len()
    }

    pub(crate) fn from_maps(n: usize, mut maps: Vec<CombinatorialMap>) -> Self {
        let mut keyed: Vec<(Vec<u8>, CombinatorialMap)> = maps.drain(..).map(|m| (m.canonical_code(), m)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        assert!(keyed.windows(2).all(|w| w[0].0 != w[1].0), "enumeration produced two isomorphic maps");
        let maps: Vec<CombinatorialMap> = keyed.into_iter().map(|(_, m)| m).collect();
        let mut root_valency = vec![0u64; 2 * n + 1];
        let mut pure_gon = vec![0u64; 2 * n + 1];
        for m in &maps {
            let face = m.root_face();
            root_valency[face.valency()] += 1;
            if is_pure_gon(m, &face.half_edges) {
                pure_gon[face.valency()] += 1;
            }
        }
        EnumerationResult { n, maps, root_valency, pure_gon }
    }

    pub fn pure_gon_count(&self, ell: usize) -> u64 {
        self.pure_gon.get(ell).copied().unwrap_or(0)
    }
}

/// A face bounded by exactly as many distinct edges and distinct vertices as
/// its valency.
pub(crate) fn is_pure_gon(m: &CombinatorialMap, face: &[usize]) -> bool {
    if m.is_empty() {
        return false;
    }
    let vertex = m.vertex_of();
    let mut edges: Vec<usize> = face.iter().map(|&h| h.min(m.alpha()[h])).collect();
    let mut vertices: Vec<usize> = face.iter().map(|&h| vertex[h]).collect();
    edges.sort_unstable();
    edges.dedup();
    vertices.sort_unstable();
    vertices.dedup();
    edges.len() == face.len() && vertices.len() == face.len()
}

#[derive(Clone)]
struct State {
    sigma: Vec<usize>,
    has_pred: Vec<bool>,
    labeled: usize,
    next: usize,
}

impl State {
    fn root(max_edges: usize) -> Self {
        let len = 2 * max_edges.max(1);
        State { sigma: vec![UNSET; len], has_pred: vec![false; len], labeled: 2, next: 0 }
    }

    fn is_leaf(&self) -> bool {
        self.next == self.labeled
    }

    /// Children in a fixed order: existing targets by label, then a new edge.
    fn children(&self, max_edges: usize) -> Vec<State> {
        let h = self.next;
        let mut out = Vec::new();
        for t in 0..self.labeled {
            if !self.has_pred[t] {
                let mut s = self.clone();
                s.sigma[h] = t;
                s.has_pred[t] = true;
                s.next += 1;
                out.push(s);
            }
        }
        if self.labeled / 2 < max_edges {
            let mut s = self.clone();
            let t = self.labeled;
            s.sigma[h] = t;
            s.has_pred[t] = true;
            s.labeled += 2;
            s.next += 1;
            out.push(s);
        }
        out
    }

    fn visit_leaves(&self, max_edges: usize, emit: &mut impl FnMut(&State)) {
        if self.is_leaf() {
            emit(self);
            return;
        }
        for child in self.children(max_edges) {
            child.visit_leaves(max_edges, emit);
        }
    }
}

fn planar_leaf(s: &State) -> Option<CombinatorialMap> {
    let len = s.labeled;
    let sigma = s.sigma[..len].to_vec();
    let alpha: Vec<usize> = (0..len).map(|h| h ^ 1).collect();
    match CombinatorialMap::new(alpha, sigma, 0) {
        Ok(m) => Some(m),
        Err(MapError::NotPlanar { .. }) => None,
        Err(e) => panic!("search produced an invalid map: {e}"),
    }
}

/// All rooted planar maps with `0..=max_edges` edges, indexed by edge count.
pub fn enumerate_up_to(max_edges: usize, limit: usize) -> Result<Vec<EnumerationResult>> {
    let limit = limit.min(HARD_LIMIT);
    if max_edges > limit {
        return Err(Error::SizeLimitExceeded { requested: max_edges, limit });
    }
    let mut buckets: Vec<Vec<CombinatorialMap>> = vec![Vec::new(); max_edges + 1];
    buckets[0].push(CombinatorialMap::empty());
    if max_edges > 0 {
        // Expand breadth-first until there is enough independent work.
        let mut frontier = vec![State::root(max_edges)];
        let mut leaves = Vec::new();
        for _ in 0..6 {
            let mut next = Vec::new();
            for s in frontier {
                if s.is_leaf() {
                    leaves.push(s);
                } else {
                    next.extend(s.children(max_edges));
                }
            }
            frontier = next;
        }
        let mut found: Vec<CombinatorialMap> = leaves.iter().filter_map(planar_leaf).collect();
        let shards: Vec<Vec<CombinatorialMap>> = frontier
            .par_iter()
            .map(|s| {
                let mut out = Vec::new();
                s.visit_leaves(max_edges, &mut |leaf| out.extend(planar_leaf(leaf)));
                out
            })
            .collect();
        found.extend(shards.into_iter().flatten());
        for m in found {
            buckets[m.edge_count()].push(m);
        }
    }
    Ok(buckets.into_iter().enumerate().map(|(n, maps)| EnumerationResult::from_maps(n, maps)).collect())
}

/// All rooted planar maps with exactly `n` edges, refusing `n` above
/// [`DEFAULT_LIMIT`].
pub fn enumerate_maps(n: usize) -> Result<EnumerationResult> {
    enumerate_maps_with_limit(n, DEFAULT_LIMIT)
}

/// As [`enumerate_maps`] with a caller-chosen limit (capped at [`HARD_LIMIT`]).
pub fn enumerate_maps_with_limit(n: usize, limit: usize) -> Result<EnumerationResult> {
    Ok(enumerate_up_to(n, limit)?.swap_remove(n))
}
