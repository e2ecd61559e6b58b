//! Canonical labeling of rooted maps.
//!
//! Rooted maps have no nontrivial automorphisms, so a breadth-first traversal
//! from the root that always explores `alpha(h)` before `sigma(h)` assigns
//! labels independent of the input labeling. The code lists, for each label,
//! the labels of its `sigma` and `alpha` images.

use std::collections::VecDeque;

/// Half-edges reachable from `root`, in canonical order.
pub(crate) fn bfs_order(alpha: &[usize], sigma: &[usize], root: usize) -> Vec<usize> {
    let mut seen = vec![false; alpha.len()];
    let mut order = Vec::with_capacity(alpha.len());
    let mut queue = VecDeque::new();
    seen[root] = true;
    order.push(root);
    queue.push_back(root);
    while let Some(h) = queue.pop_front() {
        for next in [alpha[h], sigma[h]] {
            if !seen[next] {
                seen[next] = true;
                order.push(next);
                queue.push_back(next);
            }
        }
    }
    order
}

/// Canonical code of the rooted map `(alpha, sigma, root)`, or `None` if some
/// half-edge is unreachable from the root.
pub fn canonical_code_of(alpha: &[usize], sigma: &[usize], root: usize) -> Option<Vec<u8>> {
    if alpha.is_empty() {
        return Some(0u32.to_le_bytes().to_vec());
    }
    let order = bfs_order(alpha, sigma, root);
    if order.len() != alpha.len() {
        return None;
    }
    let mut label = vec![0u32; alpha.len()];
    for (i, &h) in order.iter().enumerate() {
        label[h] = i as u32;
    }
    let mut code = Vec::with_capacity(4 + 8 * order.len());
    code.extend_from_slice(&((alpha.len() / 2) as u32).to_le_bytes());
    for &h in &order {
        code.extend_from_slice(&label[sigma[h]].to_le_bytes());
        code.extend_from_slice(&label[alpha[h]].to_le_bytes());
    }
    Some(code)
}
