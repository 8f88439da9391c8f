//! Classical invariants: vertex cover number, feedback edge count, shape flags.

use crate::bits::Bits;
use crate::graph::{component_ids, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInvariants {
    pub n: usize,
    pub m: usize,
    pub component_count: usize,
    pub is_tree: bool,
    pub is_forest: bool,
    /// Exact minimum vertex cover size.
    pub beta: usize,
    /// Feedback edge set size, m − n + components.
    pub fes: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

pub fn graph_invariants(g: &Graph) -> GraphInvariants {
    let n = g.order();
    let m = g.size();
    let (_, component_count) = component_ids(g);
    let fes = m + component_count - n;
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    GraphInvariants {
        n,
        m,
        component_count,
        is_tree: component_count == 1 && fes == 0,
        is_forest: fes == 0,
        beta: vertex_cover_number(g),
        fes,
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
    }
}

/// Exact minimum vertex cover via branch and bound with degree-1 reduction
/// and a greedy-matching lower bound.
pub fn vertex_cover_number(g: &Graph) -> usize {
    let n = g.order();
    let mut adj: Vec<Bits> = (0..n)
        .map(|v| {
            let mut b = Bits::new(n);
            for &w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect();
    let mut best = n;
    branch(&mut adj, 0, &mut best);
    best
}

fn degree_of(adj: &[Bits], v: usize) -> usize {
    adj[v].count()
}

fn delete_vertex(adj: &mut [Bits], v: usize) {
    let nbrs: Vec<usize> = adj[v].iter_ones().collect();
    for w in nbrs {
        adj[w].remove(v);
    }
    adj[v].clear();
}

fn matching_lower_bound(adj: &[Bits]) -> usize {
    let n = adj.len();
    let mut used = Bits::new(n);
    let mut size = 0;
    for (v, nbrs) in adj.iter().enumerate() {
        if used.contains(v) {
            continue;
        }
        if let Some(w) = nbrs.iter_ones().find(|&w| !used.contains(w)) {
            used.insert(v);
            used.insert(w);
            size += 1;
        }
    }
    size
}

fn branch(adj: &mut [Bits], taken: usize, best: &mut usize) {
    let mut taken = taken;
    // degree-1 reduction: covering via the neighbor is always at least as good
    loop {
        let mut changed = false;
        for v in 0..adj.len() {
            if degree_of(adj, v) == 1 {
                let w = adj[v].iter_ones().next().unwrap();
                delete_vertex(adj, w);
                taken += 1;
                changed = true;
                if taken >= *best {
                    return;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let Some(v) = (0..adj.len()).max_by_key(|&v| degree_of(adj, v)).filter(|&v| degree_of(adj, v) > 0)
    else {
        *best = (*best).min(taken);
        return;
    };
    if taken + matching_lower_bound(adj) >= *best {
        return;
    }
    // branch: v in the cover, or all of N(v) in the cover
    let mut with_v = adj.to_vec();
    delete_vertex(&mut with_v, v);
    branch(&mut with_v, taken + 1, best);

    let nbrs: Vec<usize> = adj[v].iter_ones().collect();
    let mut without_v = adj.to_vec();
    for &w in &nbrs {
        delete_vertex(&mut without_v, w);
    }
    branch(&mut without_v, taken + nbrs.len(), best);
}
