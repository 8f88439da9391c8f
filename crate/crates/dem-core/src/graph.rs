//! Immutable simple-graph representation with canonical edge ids.
//!
//! Vertices are dense indices `0..n`. Edges are stored lexicographically
//! sorted with `u < v`; an edge's position in that list is its [`EdgeId`],
//! which stays stable for the lifetime of the value. Every graph carries a
//! content fingerprint so that derived artifacts (edge sets, monitor maps)
//! can assert they are used against the graph they were computed for.

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<VertexId>>,
    fingerprint: u64,
}

/// FNV-1a over the order and the canonical edge list.
fn fingerprint_of(n: usize, edges: &[(usize, usize)]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x1000_0000_01b3;
    let mut h = OFFSET;
    let mut mix = |x: u64| {
        for byte in x.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(PRIME);
        }
    };
    mix(n as u64);
    for &(u, v) in edges {
        mix(u as u64);
        mix(v as u64);
    }
    h
}

impl Graph {
    /// Builds a graph from an order and unordered endpoint pairs.
    /// Loops are rejected; duplicate pairs (in either orientation) are rejected.
    pub fn new(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Graph> {
        Self::build(n, pairs, false)
    }

    /// Like [`Graph::new`] but collapses duplicate pairs instead of rejecting them.
    pub fn new_collapsing(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Graph> {
        Self::build(n, pairs, true)
    }

    fn build(n: usize, pairs: &[(VertexId, VertexId)], collapse: bool) -> Result<Graph> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, order: n });
                }
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] && !collapse {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        edges.dedup();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let fingerprint = fingerprint_of(n, &edges);
        Ok(Graph { n, edges, adjacency, fingerprint })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonically sorted edge list; an edge's index here is its [`EdgeId`].
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    /// Sorted neighbor list. Panics on an out-of-range vertex, like slice indexing.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.edges
            .get(e)
            .copied()
            .ok_or(Error::EdgeOutOfRange { edge: e, size: self.edges.len() })
    }

    /// Canonical id of the edge between `u` and `v`, if present.
    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u == v || u >= self.n || v >= self.n {
            return None;
        }
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Content hash of `(order, canonical edge list)`.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    /// BFS distances from `source`, optionally ignoring one edge
    /// (i.e. distances in G − uv without materializing the derived graph).
    /// Unreachable vertices get `None`.
    pub(crate) fn bfs(&self, source: VertexId, skip: Option<(VertexId, VertexId)>) -> Vec<Option<u32>> {
        let skip = skip.map(|(a, b)| (a.min(b), a.max(b)));
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::with_capacity(self.n);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for &w in &self.adjacency[u] {
                if let Some((a, b)) = skip {
                    if (u.min(w), u.max(w)) == (a, b) {
                        continue;
                    }
                }
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Deletes one edge by id, keeping the vertex set.
    pub fn remove_edge(&self, e: EdgeId) -> Result<Graph> {
        let _ = self.endpoints(e)?;
        let pairs: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &p)| p)
            .collect();
        Graph::new(self.n, &pairs)
    }

    /// Deletes a set of edges by id, keeping the vertex set.
    pub fn remove_edges(&self, es: &[EdgeId]) -> Result<Graph> {
        let mut drop = vec![false; self.edges.len()];
        for &e in es {
            let _ = self.endpoints(e)?;
            drop[e] = true;
        }
        let pairs: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| !drop[i])
            .map(|(_, &p)| p)
            .collect();
        Graph::new(self.n, &pairs)
    }

    /// Deletes a vertex; remaining vertices are renumbered densely, keeping
    /// their relative order. Returns the graph and the old-to-new vertex map.
    pub fn remove_vertex(&self, v: VertexId) -> Result<(Graph, Vec<Option<VertexId>>)> {
        self.check_vertex(v)?;
        let map: Vec<Option<VertexId>> = (0..self.n)
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let pairs: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (map[a].unwrap(), map[b].unwrap()))
            .collect();
        let g = Graph::new(self.n - 1, &pairs)?;
        Ok((g, map))
    }
}

/// BFS distance profile from one source. `None` marks unreachable vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistVector {
    pub source: VertexId,
    pub dist: Vec<Option<u32>>,
}

impl DistVector {
    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.dist[v]
    }

    pub fn reachable(&self, v: VertexId) -> bool {
        self.dist[v].is_some()
    }
}

/// Single-source shortest-path distances (every edge has length 1).
pub fn distances_from(g: &Graph, source: VertexId) -> Result<DistVector> {
    g.check_vertex(source)?;
    Ok(DistVector { source, dist: g.bfs(source, None) })
}

/// Vertex sets of the connected components, each sorted ascending, ordered by
/// their smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<VertexId>> {
    let (ids, count) = component_ids(g);
    let mut comps = vec![Vec::new(); count];
    for v in 0..g.order() {
        comps[ids[v]].push(v);
    }
    comps
}

/// Component index per vertex (indices ordered by smallest contained vertex)
/// plus the component count.
pub(crate) fn component_ids(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.order();
    let mut ids = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if ids[start] != usize::MAX {
            continue;
        }
        ids[start] = count;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if ids[w] == usize::MAX {
                    ids[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (ids, count)
}

/// Fixed point of simultaneously deleting all current degree-1 vertices,
/// round by round. Order-independent by construction; may be empty. Returns
/// the reduced graph and the old-to-new vertex map.
pub fn base_graph(g: &Graph) -> (Graph, Vec<Option<VertexId>>) {
    let n = g.order();
    let mut keep = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let round: Vec<VertexId> = (0..n).filter(|&v| keep[v] && degree[v] == 1).collect();
        if round.is_empty() {
            break;
        }
        for &v in &round {
            keep[v] = false;
        }
        for &v in &round {
            for &w in g.neighbors(v) {
                if keep[w] {
                    degree[w] -= 1;
                }
            }
            degree[v] = 0;
        }
    }
    let mut map = vec![None; n];
    let mut next = 0;
    for v in 0..n {
        if keep[v] {
            map[v] = Some(next);
            next += 1;
        }
    }
    let pairs: Vec<_> = g
        .edges()
        .iter()
        .filter(|&&(a, b)| keep[a] && keep[b])
        .map(|&(a, b)| (map[a].unwrap(), map[b].unwrap()))
        .collect();
    let base = Graph::new(next, &pairs).expect("relabeled edges stay valid");
    (base, map)
}

/// Cartesian product G □ H; vertex (u, v) gets index `u * |V(H)| + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyFactor);
    }
    let hn = h.order();
    let idx = |u: usize, v: usize| u * hn + v;
    let mut pairs = Vec::with_capacity(g.order() * h.size() + h.order() * g.size());
    for u in 0..g.order() {
        for &(a, b) in h.edges() {
            pairs.push((idx(u, a), idx(u, b)));
        }
    }
    for &(a, b) in g.edges() {
        for v in 0..hn {
            pairs.push((idx(a, v), idx(b, v)));
        }
    }
    Graph::new(g.order() * hn, &pairs)
}

/// Join G ∨ H: disjoint union (H shifted by |V(G)|) plus all cross edges.
pub fn join_graphs(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let mut pairs: Vec<_> = g.edges().to_vec();
    pairs.extend(h.edges().iter().map(|&(a, b)| (a + shift, b + shift)));
    for u in 0..g.order() {
        for v in 0..h.order() {
            pairs.push((u, v + shift));
        }
    }
    Graph::new(shift + h.order(), &pairs).expect("join of simple graphs is simple")
}
