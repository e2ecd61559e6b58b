//! Brute-force occurrence counting inside enumerated maps.
//!
//! A copy of the pattern in `M` is a connected edge subset `S` whose
//! induced embedding (each vertex keeps the cyclic order of its surviving
//! half-edges) is isomorphic to the pattern for some choice of root. The
//! copy's outer face is the face of `S` that contains the root face of `M`;
//! the remaining faces of `S` are its inner faces. A copy is
//!
//! * a submap occurrence if a root of `S` with the outer face on its left
//!   makes it isomorphic to the pattern;
//! * a pattern occurrence if, in addition, every inner face of `S` is a face
//!   of `M`.
//!
//! Each edge subset contributes at most one marked occurrence: rotating the
//! root along the outer face is the identification the marking forgets.

use rayon::prelude::*;

use super::enumerate::EnumerationResult;
use crate::map::{canonical_code_of, CombinatorialMap};

/// The embedding induced by a subset of edges, relabeled compactly.
struct Induced {
    /// Half-edges of `M` in the order of their new labels.
    original: Vec<usize>,
    alpha: Vec<usize>,
    sigma: Vec<usize>,
}

impl Induced {
    fn new(m: &CombinatorialMap, edges: &[usize]) -> Self {
        let mut label = vec![usize::MAX; m.half_edge_count()];
        let mut original = Vec::with_capacity(2 * edges.len());
        for &h in edges {
            for x in [h, m.alpha()[h]] {
                label[x] = original.len();
                original.push(x);
            }
        }
        let alpha = original.iter().map(|&h| label[m.alpha()[h]]).collect();
        let sigma = original
            .iter()
            .map(|&h| {
                let mut t = m.sigma()[h];
                while label[t] == usize::MAX {
                    t = m.sigma()[t];
                }
                label[t]
            })
            .collect();
        Induced { original, alpha, sigma }
    }

    fn len(&self) -> usize {
        self.alpha.len()
    }

    fn phi(&self, h: usize) -> usize {
        self.sigma[self.alpha[h]]
    }

    fn faces(&self) -> (Vec<usize>, usize) {
        let phi: Vec<usize> = (0..self.len()).map(|h| self.phi(h)).collect();
        crate::map::orbits(&phi)
    }

    fn is_connected(&self) -> bool {
        canonical_code_of(&self.alpha, &self.sigma, 0).is_some()
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Face of `S` (as an orbit index of the induced face permutation) that
/// contains the root face of `M`.
fn outer_face_of(m: &CombinatorialMap, s: &Induced, face_m: &[usize], face_count_m: usize, in_s: &[bool]) -> usize {
    let mut parent: Vec<usize> = (0..face_count_m).collect();
    for h in 0..m.half_edge_count() {
        if !in_s[h] {
            let a = find(&mut parent, face_m[h]);
            let b = find(&mut parent, face_m[m.alpha()[h]]);
            parent[a] = b;
        }
    }
    let root_component = find(&mut parent, face_m[m.root()]);
    let (face_s, _) = s.faces();
    for (i, &h) in s.original.iter().enumerate() {
        if find(&mut parent, face_m[h]) == root_component {
            return face_s[i];
        }
    }
    unreachable!("every face of M lies in some face of S")
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Pattern,
    Submap,
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn occurrences_in(m: &CombinatorialMap, pattern: &CombinatorialMap, code: &[u8], kind: Kind) -> u64 {
    let k = pattern.edge_count();
    let reps = m.edge_representatives();
    let (face_m, face_count_m) = crate::map::orbits(&m.face_permutation());
    let mut total = 0;
    combinations(reps.len(), k, |chosen| {
        let edges: Vec<usize> = chosen.iter().map(|&i| reps[i]).collect();
        let s = Induced::new(m, &edges);
        if !s.is_connected() {
            return;
        }
        let mut in_s = vec![false; m.half_edge_count()];
        for &h in &s.original {
            in_s[h] = true;
        }
        let outer = outer_face_of(m, &s, &face_m, face_count_m, &in_s);
        let (face_s, _) = s.faces();
        if kind == Kind::Pattern {
            // an inner face of S is a face of M iff S and M agree on phi along it
            let inner_ok =
                (0..s.len()).filter(|&h| face_s[h] != outer).all(|h| m.phi(s.original[h]) == s.original[s.phi(h)]);
            if !inner_ok {
                return;
            }
        }
        let matches = (0..s.len())
            .filter(|&r| face_s[r] == outer)
            .any(|r| canonical_code_of(&s.alpha, &s.sigma, r).as_deref() == Some(code));
        if matches {
            total += 1;
        }
    });
    total
}

fn count(maps: &EnumerationResult, pattern: &CombinatorialMap, kind: Kind) -> u64 {
    assert!(!pattern.is_empty(), "the empty map is not a pattern");
    let code = pattern.canonical_code();
    maps.maps.par_iter().map(|m| occurrences_in(m, pattern, &code, kind)).sum()
}

/// Marked pattern occurrences summed over all maps in `maps`.
pub fn count_marked_patterns(maps: &EnumerationResult, pattern: &CombinatorialMap) -> u64 {
    count(maps, pattern, Kind::Pattern)
}

/// Marked submap occurrences summed over all maps in `maps`.
pub fn count_marked_submaps(maps: &EnumerationResult, pattern: &CombinatorialMap) -> u64 {
    count(maps, pattern, Kind::Submap)
}

/// Number of (map, edge subset) pairs in which the pattern sits at the root:
/// the subset contains the root edge of `M`, rooting it there gives the
/// pattern, and its inner faces are faces of `M`.
pub fn count_at_root(maps: &EnumerationResult, pattern: &CombinatorialMap) -> u64 {
    assert!(!pattern.is_empty(), "the empty map is not a pattern");
    let code = pattern.canonical_code();
    let k = pattern.edge_count();
    maps.maps
        .par_iter()
        .map(|m| {
            let mut total = 0;
            let reps = m.edge_representatives();
            let root_edge = reps.iter().position(|&h| h == m.root() || m.alpha()[h] == m.root());
            let Some(root_edge) = root_edge else { return 0 };
            combinations(reps.len(), k, |chosen| {
                if !chosen.contains(&root_edge) {
                    return;
                }
                let edges: Vec<usize> = chosen.iter().map(|&i| reps[i]).collect();
                let s = Induced::new(m, &edges);
                let r = s.original.iter().position(|&h| h == m.root()).unwrap();
                if canonical_code_of(&s.alpha, &s.sigma, r).as_deref() != Some(&code[..]) {
                    return;
                }
                let (face_s, _) = s.faces();
                let inner_ok = (0..s.len())
                    .filter(|&h| face_s[h] != face_s[r])
                    .all(|h| m.phi(s.original[h]) == s.original[s.phi(h)]);
                if inner_ok {
                    total += 1;
                }
            });
            total
        })
        .sum()
}
