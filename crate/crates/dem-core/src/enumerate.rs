//! Exhaustive enumeration of small labeled graphs as edge bitmasks, for
//! sweep-style tests ("over every connected graph on ≤ 6 vertices…").
//!
//! A graph on `n` vertices is a mask over the `C(n, 2)` vertex pairs in
//! lexicographic order — the same order [`Graph`] assigns edge ids, so bit
//! `i` of a mask is edge id `i` of the decoded graph.

use crate::graph::{Graph, VertexId};

/// Largest `n` whose pair count fits a `u64` mask.
pub const MAX_MASK_ORDER: usize = 11;

/// The `C(n, 2)` vertex pairs in mask-bit order.
pub fn edge_slots(n: usize) -> Vec<(VertexId, VertexId)> {
    assert!(n <= MAX_MASK_ORDER, "masks support at most {MAX_MASK_ORDER} vertices");
    let mut slots = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            slots.push((u, v));
        }
    }
    slots
}

/// Decodes a mask over [`edge_slots`] into a graph on `n` vertices.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let slots = edge_slots(n);
    assert!(
        mask == 0 || (mask >> (slots.len() - 1)) >> 1 == 0,
        "mask has bits beyond the {} pair slots",
        slots.len()
    );
    let pairs: Vec<_> = slots
        .iter()
        .enumerate()
        .filter(|(b, _)| mask >> b & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::new(n, &pairs).expect("pair slots are loop-free and distinct")
}

/// Does the mask's graph connect all `n` vertices?
pub fn is_connected_mask(n: usize, mask: u64, slots: &[(VertexId, VertexId)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adjacency = [0u16; MAX_MASK_ORDER];
    let mut rest = mask;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = slots[b];
        adjacency[u] |= 1 << v;
        adjacency[v] |= 1 << u;
    }
    let everyone: u16 = (1 << n) - 1;
    let mut reached: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next: u16 = 0;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            next |= adjacency[v];
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached == everyone
}

/// All masks over `n` labeled vertices whose graph is connected, ascending.
pub fn connected_masks(n: usize) -> impl Iterator<Item = u64> {
    let slots = edge_slots(n);
    let total: u64 = 1 << slots.len();
    (0..total).filter(move |&mask| is_connected_mask(n, mask, &slots))
}

/// Connected masks with exactly `m` edges, in ascending mask order.
pub fn connected_masks_with_edges(n: usize, m: usize) -> impl Iterator<Item = u64> {
    let slots = edge_slots(n);
    let slot_count = slots.len();
    assert!(m <= slot_count, "cannot place {m} edges into {slot_count} pair slots");
    let first: u64 = if m == 0 { 0 } else { (1 << m) - 1 };
    std::iter::successors(Some(first), move |&mask| next_same_popcount(mask, slot_count))
        .filter(move |&mask| is_connected_mask(n, mask, &slots))
}

/// Next mask with the same popcount within `width` bits (Gosper's hack), or
/// `None` past the last one.
fn next_same_popcount(mask: u64, width: usize) -> Option<u64> {
    if mask == 0 {
        return None;
    }
    let carry = mask & mask.wrapping_neg();
    let ripple = mask.wrapping_add(carry);
    if ripple == 0 {
        return None;
    }
    let next = (((ripple ^ mask) >> 2) / carry) | ripple;
    if next >> width == 0 {
        Some(next)
    } else {
        None
    }
}
