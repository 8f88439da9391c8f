//! Distance-edge monitoring: which edges a vertex monitors, whether a vertex
//! set monitors every edge, and minimum monitoring sets.
//!
//! A vertex `x` *monitors* an edge `e` when `G` and `G − e` disagree on the
//! distance from `x` to some vertex (a distance turning into "unreachable"
//! counts as disagreement). `EM(x)` is the set of edges `x` monitors. A set
//! `M` is a *monitoring set* when every edge lies in some `EM(x)`, `x ∈ M`,
//! and `dem(G)` is the smallest size of such a set.
//!
//! All searches are exact and deterministic: the reported basis is the
//! lexicographically smallest minimum monitoring set.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{component_ids, Graph, EdgeId, VertexId};

/// A set of edges of one specific graph, identified by its fingerprint.
///
/// Carrying the fingerprint catches the classic mistake of reusing edge sets
/// across a deletion: `EM` sets computed on `G` must never be combined with
/// sets computed on `G − e`, whose edge ids mean different pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSet {
    fingerprint: u64,
    bits: Bits,
}

impl EdgeSet {
    pub fn empty(g: &Graph) -> EdgeSet {
        EdgeSet { fingerprint: g.fingerprint(), bits: Bits::new(g.size()) }
    }

    pub fn full(g: &Graph) -> EdgeSet {
        EdgeSet { fingerprint: g.fingerprint(), bits: Bits::full(g.size()) }
    }

    pub fn from_edge_ids(g: &Graph, ids: &[EdgeId]) -> Result<EdgeSet> {
        let mut set = EdgeSet::empty(g);
        for &e in ids {
            g.endpoints(e)?;
            set.bits.insert(e);
        }
        Ok(set)
    }

    /// Fingerprint of the graph this set belongs to.
    pub fn graph_fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn matches(&self, g: &Graph) -> bool {
        self.fingerprint == g.fingerprint()
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        e < self.bits.len() && self.bits.contains(e)
    }

    /// Panics if `e` is not an edge id of the underlying graph.
    pub fn insert(&mut self, e: EdgeId) {
        self.bits.insert(e);
    }

    /// Panics if the sets belong to different graphs.
    pub fn union_with(&mut self, other: &EdgeSet) {
        self.check_same(other);
        self.bits.union_with(&other.bits);
    }

    /// Panics if the sets belong to different graphs.
    pub fn subtract(&mut self, other: &EdgeSet) {
        self.check_same(other);
        self.bits.subtract(&other.bits);
    }

    /// Panics if the sets belong to different graphs.
    pub fn is_superset_of(&self, other: &EdgeSet) -> bool {
        self.check_same(other);
        self.bits.is_superset_of(&other.bits)
    }

    /// Member edge ids in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.iter_ones()
    }

    /// Member edges as endpoint pairs, in edge-id order.
    /// Panics if `g` is not the graph this set was built from.
    pub fn to_pairs(&self, g: &Graph) -> Vec<(VertexId, VertexId)> {
        assert!(
            self.matches(g),
            "edge set belongs to a different graph (fingerprint mismatch)"
        );
        self.iter().map(|e| g.edges()[e]).collect()
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.bits
    }

    fn check_same(&self, other: &EdgeSet) {
        assert_eq!(
            self.fingerprint, other.fingerprint,
            "edge sets belong to different graphs (fingerprint mismatch)"
        );
    }
}

/// `EM(x)` for every vertex of one graph.
#[derive(Clone, Debug)]
pub struct MonitorMap {
    fingerprint: u64,
    per_vertex: Vec<EdgeSet>,
}

impl MonitorMap {
    pub fn build(g: &Graph) -> MonitorMap {
        let per_vertex = g
            .vertices()
            .map(|x| monitored_edges(g, x).expect("vertex ids from the graph are in range"))
            .collect();
        MonitorMap { fingerprint: g.fingerprint(), per_vertex }
    }

    pub fn graph_fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn matches(&self, g: &Graph) -> bool {
        self.fingerprint == g.fingerprint()
    }

    pub fn len(&self) -> usize {
        self.per_vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_vertex.is_empty()
    }

    /// Panics if `x` is out of range.
    pub fn get(&self, x: VertexId) -> &EdgeSet {
        &self.per_vertex[x]
    }
}

/// Edges monitored by `x`: one breadth-first pass, then a local test per edge.
///
/// From the BFS tree rooted at `x`, an edge `uv` with `d(u) = d(v)` is never
/// monitored (each endpoint keeps a shortest path avoiding `uv`). With
/// `d(v) = d(u) + 1`, deleting `uv` moves `v` (and only then anything) exactly
/// when `u` is the unique neighbor of `v` on level `d(v) − 1`, i.e. when every
/// shortest `x`–`v` path ends with `uv`. Equality with the definitional
/// re-BFS strategy ([`monitored_edges_naive`]) is enforced by property tests
/// rather than assumed.
pub fn monitored_edges(g: &Graph, x: VertexId) -> Result<EdgeSet> {
    g.check_vertex(x)?;
    let dist = g.bfs(x, None);
    let mut set = EdgeSet::empty(g);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (du, dv) = match (dist[u], dist[v]) {
            (Some(du), Some(dv)) => (du, dv),
            _ => continue, // edge in another component: nothing changes
        };
        if du == dv {
            continue;
        }
        let (near, far, dfar) = if du < dv { (u, v, dv) } else { (v, u, du) };
        let sole_parent = g
            .neighbors(far)
            .iter()
            .all(|&w| w == near || dist[w] != Some(dfar - 1));
        if sole_parent {
            set.insert(e);
        }
    }
    Ok(set)
}

/// Reference strategy for [`monitored_edges`]: for each edge, re-run BFS in
/// `G − e` and compare every distance. Quadratically slower; kept as the
/// definitional oracle for tests.
pub fn monitored_edges_naive(g: &Graph, x: VertexId) -> Result<EdgeSet> {
    g.check_vertex(x)?;
    let base = g.bfs(x, None);
    let mut set = EdgeSet::empty(g);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if g.bfs(x, Some((u, v))) != base {
            set.insert(e);
        }
    }
    Ok(set)
}

/// One observed distance change: deleting the edge moves `d(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    pub x: VertexId,
    pub y: VertexId,
    pub d_before: Option<u32>,
    pub d_after: Option<u32>,
}

/// The pairs `(x, y)` with `x ∈ monitors` whose distance changes when edge
/// `e` is deleted; empty exactly when no monitor sees the deletion. At most
/// `limit` pairs are returned (`limit = 0` means no cap), in ascending
/// `(x, y)` order over the sorted, deduplicated monitor list.
pub fn witnesses(
    g: &Graph,
    monitors: &[VertexId],
    e: EdgeId,
    limit: usize,
) -> Result<Vec<WitnessPair>> {
    let (u, v) = g.endpoints(e)?;
    let monitors = sorted_vertices(g, monitors)?;
    let mut pairs = Vec::new();
    for x in monitors {
        let before = g.bfs(x, None);
        let after = g.bfs(x, Some((u, v)));
        for y in g.vertices() {
            if before[y] != after[y] {
                pairs.push(WitnessPair { x, y, d_before: before[y], d_after: after[y] });
                if limit != 0 && pairs.len() == limit {
                    return Ok(pairs);
                }
            }
        }
    }
    Ok(pairs)
}

/// Verdict of a coverage check, with the edges left unmonitored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub verdict: bool,
    pub uncovered: EdgeSet,
}

/// Does `monitors` monitor every edge of `g`?
pub fn is_dem_set(g: &Graph, monitors: &[VertexId]) -> Result<Coverage> {
    let monitors = sorted_vertices(g, monitors)?;
    let mut covered = EdgeSet::empty(g);
    for x in monitors {
        covered.union_with(&monitored_edges(g, x)?);
    }
    let mut uncovered = EdgeSet::full(g);
    uncovered.subtract(&covered);
    Ok(Coverage { verdict: uncovered.is_empty(), uncovered })
}

/// Knobs for the exact subset search.
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Hard cap on complete-subset coverage tests per call; exceeding it is
    /// an error, never a silent fallback to a heuristic.
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: 100_000_000 }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: u64) -> Self {
        SearchConfig { budget }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exact,
    Greedy,
}

/// A monitoring number together with one canonical witness set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemResult {
    pub value: usize,
    /// For [`Method::Exact`]: the lexicographically smallest minimum
    /// monitoring set. For [`Method::Greedy`]: the greedy pick, sorted.
    pub basis: Vec<VertexId>,
    /// Complete subsets whose coverage was tested (0 for the greedy method).
    pub subsets_examined: u64,
    pub method: Method,
}

/// Exact minimum monitoring set size with default budget; see
/// [`dem_number_with`].
pub fn dem_number(g: &Graph) -> Result<DemResult> {
    dem_number_with(g, &SearchConfig::default())
}

/// Exact `dem(g)`, computed per connected component and summed.
///
/// Tree components cost 1 with the component's smallest vertex as basis (in a
/// tree every vertex monitors every edge); edgeless components cost 0. Each
/// remaining component is solved by enumerating candidate subsets in
/// (size, lexicographic) order, so the first hit is the canonical basis.
/// Edges monitored by two vertices only force one of them into every
/// monitoring set; a greedy disjoint matching over those pairs gives the
/// starting cardinality, and subtrees that have priced out such a pair are
/// pruned. The search always halts: a minimum vertex cover monitors every
/// edge, so a covering subset exists at size β at the latest.
pub fn dem_number_with(g: &Graph, cfg: &SearchConfig) -> Result<DemResult> {
    let (comp_of, comp_count) = component_ids(g);
    let mut comp_vertices: Vec<Vec<VertexId>> = vec![Vec::new(); comp_count];
    for v in g.vertices() {
        comp_vertices[comp_of[v]].push(v);
    }
    let mut comp_edges: Vec<Bits> = vec![Bits::new(g.size()); comp_count];
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        comp_edges[comp_of[u]].insert(e);
    }

    let mut map: Option<MonitorMap> = None;
    let mut basis = Vec::new();
    let mut value = 0;
    let mut tests: u64 = 0;
    for (vertices, target) in comp_vertices.iter().zip(&comp_edges) {
        let m = target.count();
        if m == 0 {
            continue;
        }
        if m == vertices.len() - 1 {
            value += 1;
            basis.push(vertices[0]);
            continue;
        }
        let map = map.get_or_insert_with(|| MonitorMap::build(g));
        let covers: Vec<Bits> = vertices
            .iter()
            .map(|&x| {
                let mut c = map.get(x).bits().clone();
                c.intersect_with(target);
                c
            })
            .collect();
        let mut search = CoverSearch::new(&covers, target, cfg.budget - tests);
        let chosen = search.run().map_err(|_| Error::BudgetExceeded {
            component_order: vertices.len(),
            tests: tests + search.tests,
        })?;
        tests += search.tests;
        value += chosen.len();
        basis.extend(chosen.into_iter().map(|i| vertices[i]));
    }
    basis.sort_unstable();
    Ok(DemResult { value, basis, subsets_examined: tests, method: Method::Exact })
}

/// `dem(g)` computed through the degree-1 reduction: the monitoring number of
/// the base graph, plus 1 per tree component with at least one edge (those
/// components vanish under the reduction but still need a monitor each).
/// Value only — the reduction does not produce a basis of `g`.
pub fn dem_value_by_base_reduction(g: &Graph, cfg: &SearchConfig) -> Result<usize> {
    let (reduced, _) = crate::graph::base_graph(g);
    let from_base = dem_number_with(&reduced, cfg)?.value;
    let (comp_of, comp_count) = component_ids(g);
    let mut vert_count = vec![0usize; comp_count];
    let mut edge_count = vec![0usize; comp_count];
    for v in g.vertices() {
        vert_count[comp_of[v]] += 1;
    }
    for &(u, _) in g.edges() {
        edge_count[comp_of[u]] += 1;
    }
    let tree_components = (0..comp_count)
        .filter(|&c| edge_count[c] >= 1 && edge_count[c] == vert_count[c] - 1)
        .count();
    Ok(from_base + tree_components)
}

/// Edges `uv` for which every common or adjacent vertex `w ∉ {u, v}` keeps
/// both `d(w, u)` and `d(w, v)` when `uv` is deleted. Such an edge is
/// monitored by no vertex outside `{u, v}`, so every monitoring set must pick
/// an endpoint.
pub fn forced_endpoint_edges(g: &Graph) -> EdgeSet {
    let mut set = EdgeSet::empty(g);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let du_before = g.bfs(u, None);
        let dv_before = g.bfs(v, None);
        let du_after = g.bfs(u, Some((u, v)));
        let dv_after = g.bfs(v, Some((u, v)));
        let neighborhood_stable = g
            .neighbors(u)
            .iter()
            .chain(g.neighbors(v))
            .filter(|&&w| w != u && w != v)
            .all(|&w| du_before[w] == du_after[w] && dv_before[w] == dv_after[w]);
        if neighborhood_stable {
            set.insert(e);
        }
    }
    set
}

/// Minimum `M ⊆ V(H)` monitoring every edge of `H`, where `H` is given by
/// `sub_edges` (pairs that must be edges of `g`) and monitoring is judged in
/// the ambient graph `g`, not in `H`.
pub fn restrict_dem(
    g: &Graph,
    sub_edges: &[(VertexId, VertexId)],
    cfg: &SearchConfig,
) -> Result<DemResult> {
    let mut target = Bits::new(g.size());
    let mut candidates = Vec::new();
    for &(u, v) in sub_edges {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        let e = g.edge_id(u, v).ok_or(Error::MissingEdge(u, v))?;
        target.insert(e);
        candidates.push(u.min(v));
        candidates.push(u.max(v));
    }
    candidates.sort_unstable();
    candidates.dedup();

    let covers: Vec<Bits> = candidates
        .iter()
        .map(|&x| {
            let mut c = monitored_edges(g, x)
                .expect("candidate vertices were range-checked")
                .bits()
                .clone();
            c.intersect_with(&target);
            c
        })
        .collect();
    let mut search = CoverSearch::new(&covers, &target, cfg.budget);
    let chosen = search.run().map_err(|_| Error::BudgetExceeded {
        component_order: candidates.len(),
        tests: search.tests,
    })?;
    let mut basis: Vec<VertexId> = chosen.into_iter().map(|i| candidates[i]).collect();
    basis.sort_unstable();
    Ok(DemResult {
        value: basis.len(),
        basis,
        subsets_examined: search.tests,
        method: Method::Exact,
    })
}

/// Greedy set cover over the `EM` sets: repeatedly take the vertex adding the
/// most unmonitored edges, smallest id on ties. Always a valid monitoring
/// set (re-checked), never smaller than the exact optimum.
pub fn greedy_dem(g: &Graph) -> DemResult {
    let map = MonitorMap::build(g);
    let mut covered = Bits::new(g.size());
    let mut basis = Vec::new();
    while covered.count() < g.size() {
        let (mut best, mut best_gain) = (usize::MAX, 0);
        for x in g.vertices() {
            let gain = map.get(x).bits().difference_count(&covered);
            if gain > best_gain {
                best = x;
                best_gain = gain;
            }
        }
        debug_assert!(best_gain > 0, "every edge is monitored by its endpoints");
        if best_gain == 0 {
            break;
        }
        covered.union_with(map.get(best).bits());
        basis.push(best);
    }
    basis.sort_unstable();
    let coverage = is_dem_set(g, &basis).expect("greedy picks are valid vertices");
    debug_assert!(coverage.verdict);
    DemResult {
        value: basis.len(),
        basis,
        subsets_examined: 0,
        method: Method::Greedy,
    }
}

fn sorted_vertices(g: &Graph, vertices: &[VertexId]) -> Result<Vec<VertexId>> {
    let mut out = Vec::with_capacity(vertices.len());
    for &v in vertices {
        g.check_vertex(v)?;
        out.push(v);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Budget overrun sentinel for [`CoverSearch`].
struct BudgetHit;

/// Minimum-cardinality, lexicographically-first cover of `target` by unions
/// of `covers`, enumerated in (size, lex) order over candidate indices.
struct CoverSearch<'a> {
    covers: &'a [Bits],
    target: &'a Bits,
    /// For each candidate index `q`: target bits coverable only by candidates
    /// `≤ q`. Once the enumeration passes `q` without covering such a bit,
    /// every sibling subtree is dead.
    expire_at: Vec<Vec<usize>>,
    /// Size of a greedy disjoint matching over two-coverer targets — a valid
    /// lower bound on the cover size.
    lower_bound: usize,
    budget: u64,
    tests: u64,
}

impl<'a> CoverSearch<'a> {
    fn new(covers: &'a [Bits], target: &'a Bits, budget: u64) -> CoverSearch<'a> {
        let mut expire_at = vec![Vec::new(); covers.len()];
        let mut used = vec![false; covers.len()];
        let mut lower_bound = 0;
        for t in target.iter_ones() {
            let mut coverers = covers
                .iter()
                .enumerate()
                .filter(|(_, c)| c.contains(t))
                .map(|(i, _)| i);
            let (first, second) = (coverers.next(), coverers.next());
            if coverers.next().is_some() {
                continue; // three or more coverers: no pruning leverage
            }
            let first = first.expect("every target edge has a coverer");
            let last = second.unwrap_or(first);
            expire_at[last].push(t);
            if !used[first] && !used[last] {
                used[first] = true;
                used[last] = true;
                lower_bound += 1;
            }
        }
        CoverSearch { covers, target, expire_at, lower_bound: lower_bound.max(usize::from(!target.is_empty())), budget, tests: 0 }
    }

    /// First covering subset in (size, lex) order, or `None` if even the full
    /// candidate set does not cover the target.
    fn run(&mut self) -> std::result::Result<Vec<usize>, BudgetHit> {
        let empty = Bits::new(self.target.len());
        if self.target.is_empty() {
            return Ok(Vec::new());
        }
        for size in self.lower_bound..=self.covers.len() {
            let mut chosen = Vec::with_capacity(size);
            if let Some(hit) = self.descend(0, size, &empty, &mut chosen)? {
                return Ok(hit);
            }
        }
        Ok(Vec::new())
    }

    fn descend(
        &mut self,
        start: usize,
        slots: usize,
        covered: &Bits,
        chosen: &mut Vec<usize>,
    ) -> std::result::Result<Option<Vec<usize>>, BudgetHit> {
        if slots == 0 {
            self.tests += 1;
            if self.tests > self.budget {
                return Err(BudgetHit);
            }
            if covered.is_superset_of(self.target) {
                return Ok(Some(chosen.clone()));
            }
            return Ok(None);
        }
        for q in start..=(self.covers.len() - slots) {
            chosen.push(q);
            let mut extended = covered.clone();
            extended.union_with(&self.covers[q]);
            if let Some(hit) = self.descend(q + 1, slots - 1, &extended, chosen)? {
                return Ok(Some(hit));
            }
            chosen.pop();
            // q is excluded from every later sibling: bits only coverable up
            // to q must already be covered, or the whole node is dead.
            if self.expire_at[q].iter().any(|&t| !covered.contains(t)) {
                return Ok(None);
            }
        }
        Ok(None)
    }
}
