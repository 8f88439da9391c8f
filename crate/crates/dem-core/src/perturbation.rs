//! What happens to the monitoring number when an edge or vertex disappears:
//! single-deletion records, whole-graph scans, revalidation of an existing
//! monitor set after an edge failure, and searches for largest deletions that
//! keep the monitoring number unchanged.
//!
//! Deltas are always `dem(after) − dem(before)`, signed.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{component_ids, EdgeId, Graph, VertexId};
use crate::monitoring::{dem_number_with, monitored_edges, EdgeSet, SearchConfig};

/// The deleted element, with enough context to classify the deletion
/// (endpoint degrees for edges, degree for vertices — all in the intact
/// graph; degrees are reported smaller-first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Element {
    Edge {
        id: EdgeId,
        endpoints: (VertexId, VertexId),
        degrees: (usize, usize),
    },
    Vertex {
        id: VertexId,
        degree: usize,
    },
}

impl Element {
    pub fn id(&self) -> usize {
        match *self {
            Element::Edge { id, .. } | Element::Vertex { id, .. } => id,
        }
    }
}

/// Monitoring number before and after one deletion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerturbationRecord {
    pub element: Element,
    pub dem_before: usize,
    pub dem_after: usize,
    /// `dem_after − dem_before`.
    pub delta: i64,
    /// Whether the deletion increased the number of connected components.
    pub disconnects: bool,
    /// Verdict of [`revalidate_after_edge_deletion`] when a monitor set was
    /// supplied (edge deletions only).
    pub revalidation: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanMode {
    Edges,
    Vertices,
}

/// Deltas achieving the extremes of a scan, by element id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremes {
    pub max_delta: i64,
    pub max_elements: Vec<usize>,
    pub min_delta: i64,
    pub min_elements: Vec<usize>,
}

/// One record per deletable element, in element-id order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerturbationReport {
    pub graph_fingerprint: u64,
    pub mode: ScanMode,
    pub records: Vec<PerturbationRecord>,
    pub extremes: Option<Extremes>,
}

impl PerturbationReport {
    /// Tab-separated table, one row per record.
    pub fn to_tsv(&self) -> String {
        let mut out =
            String::from("element\tkind\tdegrees\tdem_before\tdem_after\tdelta\tdisconnects\trevalidation\n");
        for r in &self.records {
            let (kind, degrees) = match r.element {
                Element::Edge { degrees: (a, b), .. } => ("edge", format!("{a},{b}")),
                Element::Vertex { degree, .. } => ("vertex", degree.to_string()),
            };
            let revalidation = match r.revalidation {
                None => "-".to_string(),
                Some(v) => v.to_string(),
            };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.element.id(),
                kind,
                degrees,
                r.dem_before,
                r.dem_after,
                r.delta,
                r.disconnects,
                revalidation
            ));
        }
        out
    }
}

/// Outcome of re-checking a monitor set after an edge deletion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Revalidation {
    pub verdict: bool,
    /// Edges of `G − e` (as endpoint pairs; labels are unchanged by edge
    /// deletion) that no supplied monitor still watches.
    pub uncovered: Vec<(VertexId, VertexId)>,
}

/// Is `monitors` still a monitoring set of `G − e`? Monitored-edge sets are
/// recomputed in the reduced graph — distances there differ from `g`'s, so
/// reusing `g`'s sets would be wrong. Costs `|monitors|` EM computations.
pub fn revalidate_after_edge_deletion(
    g: &Graph,
    monitors: &[VertexId],
    e: EdgeId,
) -> Result<Revalidation> {
    let reduced = g.remove_edge(e)?;
    let mut covered = EdgeSet::empty(&reduced);
    for &x in monitors {
        covered.union_with(&monitored_edges(&reduced, x)?);
    }
    let mut uncovered = EdgeSet::full(&reduced);
    uncovered.subtract(&covered);
    Ok(Revalidation {
        verdict: uncovered.is_empty(),
        uncovered: uncovered.to_pairs(&reduced),
    })
}

/// Exact before/after record for deleting edge `e`. When `monitors` is
/// supplied, the record also carries the revalidation verdict for that set.
pub fn edge_deletion_record(
    g: &Graph,
    e: EdgeId,
    monitors: Option<&[VertexId]>,
    cfg: &SearchConfig,
) -> Result<PerturbationRecord> {
    let (u, v) = g.endpoints(e)?;
    let dem_before = dem_number_with(g, cfg)?.value;
    let reduced = g.remove_edge(e)?;
    let dem_after = dem_number_with(&reduced, cfg)?.value;
    let revalidation = match monitors {
        Some(m) => Some(revalidate_after_edge_deletion(g, m, e)?.verdict),
        None => None,
    };
    let (da, db) = (g.degree(u), g.degree(v));
    Ok(PerturbationRecord {
        element: Element::Edge {
            id: e,
            endpoints: (u, v),
            degrees: (da.min(db), da.max(db)),
        },
        dem_before,
        dem_after,
        delta: dem_after as i64 - dem_before as i64,
        disconnects: component_ids(&reduced).1 > component_ids(g).1,
        revalidation,
    })
}

/// Exact before/after record for deleting vertex `v` (and its incident
/// edges). The after-value sums over the components of `G \ v`.
pub fn vertex_deletion_record(
    g: &Graph,
    v: VertexId,
    cfg: &SearchConfig,
) -> Result<PerturbationRecord> {
    let dem_before = dem_number_with(g, cfg)?.value;
    let (reduced, _) = g.remove_vertex(v)?;
    let dem_after = dem_number_with(&reduced, cfg)?.value;
    Ok(PerturbationRecord {
        element: Element::Vertex { id: v, degree: g.degree(v) },
        dem_before,
        dem_after,
        delta: dem_after as i64 - dem_before as i64,
        disconnects: component_ids(&reduced).1 > component_ids(g).1,
        revalidation: None,
    })
}

/// One record per edge (or per vertex), in id order. `monitors` feeds the
/// revalidation column and applies to edge scans only.
pub fn scan(
    g: &Graph,
    mode: ScanMode,
    monitors: Option<&[VertexId]>,
    cfg: &SearchConfig,
) -> Result<PerturbationReport> {
    let records = match mode {
        ScanMode::Edges => (0..g.size())
            .map(|e| edge_deletion_record(g, e, monitors, cfg))
            .collect::<Result<Vec<_>>>()?,
        ScanMode::Vertices => g
            .vertices()
            .map(|v| vertex_deletion_record(g, v, cfg))
            .collect::<Result<Vec<_>>>()?,
    };
    let extremes = summarize(&records);
    Ok(PerturbationReport { graph_fingerprint: g.fingerprint(), mode, records, extremes })
}

fn summarize(records: &[PerturbationRecord]) -> Option<Extremes> {
    let max_delta = records.iter().map(|r| r.delta).max()?;
    let min_delta = records.iter().map(|r| r.delta).min()?;
    let ids_with = |d: i64| {
        records
            .iter()
            .filter(|r| r.delta == d)
            .map(|r| r.element.id())
            .collect()
    };
    Some(Extremes {
        max_delta,
        max_elements: ids_with(max_delta),
        min_delta,
        min_elements: ids_with(min_delta),
    })
}

/// Verdict of deleting a whole edge set at once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Preservation {
    /// True iff `dem(G − E) = dem(G)`.
    pub preserved: bool,
    pub dem_before: usize,
    pub dem_after: usize,
}

/// Does deleting all of `edge_ids` keep the monitoring number unchanged?
pub fn verify_preserving_set(
    g: &Graph,
    edge_ids: &[EdgeId],
    cfg: &SearchConfig,
) -> Result<Preservation> {
    let dem_before = dem_number_with(g, cfg)?.value;
    let reduced = g.remove_edges(edge_ids)?;
    let dem_after = dem_number_with(&reduced, cfg)?.value;
    Ok(Preservation { preserved: dem_before == dem_after, dem_before, dem_after })
}

/// Options for [`max_preserving_deletion`].
#[derive(Clone, Copy, Debug)]
pub struct PreservationOptions {
    /// Cap on candidate edge subsets evaluated; hitting it truncates the
    /// search (reported via [`DeletionPlan::exhaustive`], never an error).
    pub budget: u64,
    /// Demand that the deletion not increase the component count. Off by
    /// default: the known extremal deletions strand isolated vertices.
    pub require_connected: bool,
}

impl Default for PreservationOptions {
    fn default() -> Self {
        PreservationOptions { budget: 1 << 20, require_connected: false }
    }
}

/// Best preserving deletion found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionPlan {
    /// Largest edge set (ties: lexicographically smallest by edge ids) whose
    /// deletion keeps the monitoring number; empty when nothing bigger than
    /// the trivial `E = ∅` was confirmed.
    pub edges: Vec<EdgeId>,
    /// The preserved value, `dem(G)`.
    pub preserved_dem: usize,
    /// True iff every larger candidate was ruled out before this plan was
    /// accepted; false means the subset budget truncated the search.
    pub exhaustive: bool,
}

/// Searches edge subsets by decreasing size (lexicographic within a size)
/// for the largest deletion with `dem(G − E) = dem(G)`. Exhaustive for small
/// graphs; the subset budget merely truncates — the empty deletion always
/// preserves, so there is always a plan to return.
pub fn max_preserving_deletion(
    g: &Graph,
    opts: &PreservationOptions,
    cfg: &SearchConfig,
) -> Result<DeletionPlan> {
    let target = dem_number_with(g, cfg)?.value;
    let base_components = component_ids(g).1;
    let m = g.size();
    let mut evaluated: u64 = 0;
    for size in (1..=m).rev() {
        let mut subset: Vec<EdgeId> = (0..size).collect();
        loop {
            if evaluated == opts.budget {
                return Ok(DeletionPlan {
                    edges: Vec::new(),
                    preserved_dem: target,
                    exhaustive: false,
                });
            }
            evaluated += 1;
            let reduced = g.remove_edges(&subset)?;
            let admissible =
                !opts.require_connected || component_ids(&reduced).1 <= base_components;
            if admissible && dem_number_with(&reduced, cfg)?.value == target {
                return Ok(DeletionPlan { edges: subset, preserved_dem: target, exhaustive: true });
            }
            if !next_combination(&mut subset, m) {
                break;
            }
        }
    }
    Ok(DeletionPlan { edges: Vec::new(), preserved_dem: target, exhaustive: true })
}

/// Advances `subset` to the next k-combination of `0..n` in lexicographic
/// order; false when `subset` was the last one.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::monitoring::dem_number;

    fn graph(spec: &str) -> Graph {
        generate(&spec.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn revalidation_examples() {
        // P_4, M = {v1}: deleting v2v3 strands v3v4 in the far component
        let p4 = graph("path:4");
        let r = revalidate_after_edge_deletion(&p4, &[0], p4.edge_id(1, 2).unwrap()).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.uncovered, vec![(2, 3)]);

        // C_4 minus an edge is a tree: any monitor sees everything
        let c4 = graph("cycle:4");
        let r = revalidate_after_edge_deletion(&c4, &[0, 1], c4.edge_id(2, 3).unwrap()).unwrap();
        assert!(r.verdict);
        assert!(r.uncovered.is_empty());

        // losing the chord pushes the demand to 8, so no 6-set survives
        let g8 = graph("g8_star");
        let basis = dem_number(&g8).unwrap().basis;
        assert_eq!(basis.len(), 6);
        let r =
            revalidate_after_edge_deletion(&g8, &basis, g8.edge_id(0, 4).unwrap()).unwrap();
        assert!(!r.verdict);
    }

    #[test]
    fn edge_records() {
        let c5 = graph("cycle:5");
        let r = edge_deletion_record(&c5, 0, None, &cfg()).unwrap();
        assert_eq!((r.dem_before, r.dem_after, r.delta), (2, 1, -1));
        assert!(!r.disconnects);

        let g8 = graph("g8_star");
        let chord = g8.edge_id(0, 4).unwrap();
        let r = edge_deletion_record(&g8, chord, None, &cfg()).unwrap();
        assert_eq!((r.dem_before, r.dem_after, r.delta), (6, 8, 2));

        let g6 = graph("g6_prime");
        let e = g6.edge_id(2, 3).unwrap(); // v3v4
        let r = edge_deletion_record(&g6, e, None, &cfg()).unwrap();
        assert_eq!((r.dem_before, r.dem_after, r.delta), (4, 2, -2));

        let k33 = graph("complete_bipartite:3,3");
        let r = edge_deletion_record(&k33, 0, None, &cfg()).unwrap();
        assert_eq!((r.dem_before, r.dem_after, r.delta), (3, 3, 0));

        // a bridge: P_3's first edge, with degrees and disconnection flagged
        let p3 = graph("path:3");
        let r = edge_deletion_record(&p3, 0, Some(&[0]), &cfg()).unwrap();
        assert!(r.disconnects);
        assert_eq!(r.revalidation, Some(false));
        assert_eq!(
            r.element,
            Element::Edge { id: 0, endpoints: (0, 1), degrees: (1, 2) }
        );
    }

    #[test]
    fn vertex_records() {
        let kipas = graph("kipas:8");
        let r = vertex_deletion_record(&kipas, 0, &cfg()).unwrap();
        assert_eq!((r.dem_before, r.dem_after, r.delta), (4, 1, -3));

        let spider = graph("spider:3");
        let r = vertex_deletion_record(&spider, 0, &cfg()).unwrap();
        assert_eq!((r.dem_before, r.dem_after, r.delta), (1, 4, 3));
        assert!(r.disconnects);
        assert_eq!(r.element, Element::Vertex { id: 0, degree: 4 });

        let p6 = graph("path:6");
        let r = vertex_deletion_record(&p6, 2, &cfg()).unwrap();
        assert_eq!((r.dem_before, r.dem_after, r.delta), (1, 2, 1));

        let k6 = graph("complete:6");
        let r = vertex_deletion_record(&k6, 3, &cfg()).unwrap();
        assert_eq!((r.dem_before, r.dem_after, r.delta), (5, 4, -1));
    }

    #[test]
    fn scans() {
        let p5 = graph("path:5");
        let report = scan(&p5, ScanMode::Edges, None, &cfg()).unwrap();
        let deltas: Vec<i64> = report.records.iter().map(|r| r.delta).collect();
        assert_eq!(deltas, vec![0, 1, 1, 0]);
        let ex = report.extremes.unwrap();
        assert_eq!((ex.max_delta, ex.max_elements), (1, vec![1, 2]));
        assert_eq!((ex.min_delta, ex.min_elements), (0, vec![0, 3]));

        let c6 = graph("cycle:6");
        let report = scan(&c6, ScanMode::Edges, None, &cfg()).unwrap();
        assert!(report.records.iter().all(|r| r.delta == -1));

        let k4 = graph("complete:4");
        let report = scan(&k4, ScanMode::Vertices, None, &cfg()).unwrap();
        assert!(report.records.iter().all(|r| r.delta == -1));
        assert_eq!(report.mode, ScanMode::Vertices);
        assert_eq!(report.graph_fingerprint, k4.fingerprint());
    }

    #[test]
    fn tsv_layout_is_stable() {
        let p3 = graph("path:3");
        let report = scan(&p3, ScanMode::Edges, Some(&[0]), &cfg()).unwrap();
        let tsv = report.to_tsv();
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(
            lines[0],
            "element\tkind\tdegrees\tdem_before\tdem_after\tdelta\tdisconnects\trevalidation"
        );
        assert_eq!(lines[1], "0\tedge\t1,2\t1\t1\t0\ttrue\tfalse");
        assert_eq!(lines.len(), 3);
    }

    #[test]
    fn preserving_set_examples() {
        // stripping a book down to a triangle plus isolated pages keeps dem
        let book = graph("book:7");
        let ids: Vec<EdgeId> = (3..7)
            .flat_map(|page| [book.edge_id(0, page).unwrap(), book.edge_id(1, page).unwrap()])
            .collect();
        assert_eq!(ids.len(), 8); // 2n − 6 for n = 7
        let p = verify_preserving_set(&book, &ids, &cfg()).unwrap();
        assert!(p.preserved);
        assert_eq!((p.dem_before, p.dem_after), (2, 2));

        let c5 = graph("cycle:5");
        let p = verify_preserving_set(&c5, &[0], &cfg()).unwrap();
        assert!(!p.preserved);
        assert_eq!((p.dem_before, p.dem_after), (2, 1));

        let p = verify_preserving_set(&c5, &[], &cfg()).unwrap();
        assert!(p.preserved);
    }

    /// Brute-force reference: scan every subset mask, largest-then-lex best.
    fn best_preserving_by_masks(g: &Graph, require_connected: bool) -> Vec<EdgeId> {
        let target = dem_number(g).unwrap().value;
        let base_components = component_ids(g).1;
        let m = g.size();
        let mut best: Option<Vec<EdgeId>> = None;
        for mask in 0u64..(1 << m) {
            let subset: Vec<EdgeId> = (0..m).filter(|e| mask >> e & 1 == 1).collect();
            let reduced = g.remove_edges(&subset).unwrap();
            if require_connected && component_ids(&reduced).1 > base_components {
                continue;
            }
            if dem_number(&reduced).unwrap().value != target {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => subset.len() > b.len() || (subset.len() == b.len() && subset < *b),
            };
            if better {
                best = Some(subset);
            }
        }
        best.expect("the empty subset always preserves")
    }

    #[test]
    fn max_preserving_agrees_with_brute_force() {
        let samples: Vec<(Graph, bool)> = vec![
            (graph("complete:4"), false),
            (graph("book:6"), false),
            (graph("book:6"), true),
            (graph("path:4"), false),
            (graph("path:4"), true),
            (graph("star:5"), false),
            (graph("cycle:5"), false),
        ];
        for (g, require_connected) in samples {
            let opts = PreservationOptions { require_connected, ..Default::default() };
            let plan = max_preserving_deletion(&g, &opts, &cfg()).unwrap();
            assert!(plan.exhaustive);
            assert_eq!(
                plan.edges,
                best_preserving_by_masks(&g, require_connected),
                "connected={require_connected}"
            );
        }
    }

    #[test]
    fn max_preserving_frozen_values() {
        // book over 6 vertices: keep two disjoint K_2s, shed the other 7 edges
        let plan = max_preserving_deletion(&graph("book:6"), &Default::default(), &cfg()).unwrap();
        assert_eq!(plan.edges, vec![0, 1, 2, 3, 5, 6, 8]);
        assert_eq!(plan.preserved_dem, 2);

        // connected variant: down to the unique cycle rank
        let opts = PreservationOptions { require_connected: true, ..Default::default() };
        let plan = max_preserving_deletion(&graph("book:6"), &opts, &cfg()).unwrap();
        assert_eq!(plan.edges, vec![0, 1, 2]);

        // K_4 tolerates nothing
        let plan = max_preserving_deletion(&graph("complete:4"), &Default::default(), &cfg()).unwrap();
        assert!(plan.edges.is_empty());
        assert!(plan.exhaustive);

        // a tree keeps its value while any single edge survives
        let plan = max_preserving_deletion(&graph("path:4"), &Default::default(), &cfg()).unwrap();
        assert_eq!(plan.edges, vec![0, 1]);
        let opts = PreservationOptions { require_connected: true, ..Default::default() };
        let plan = max_preserving_deletion(&graph("path:4"), &opts, &cfg()).unwrap();
        assert!(plan.edges.is_empty());
    }

    #[test]
    fn truncated_search_reports_itself() {
        let opts = PreservationOptions { budget: 3, require_connected: false };
        let plan = max_preserving_deletion(&graph("cycle:5"), &opts, &cfg()).unwrap();
        assert!(!plan.exhaustive);
        assert!(plan.edges.is_empty());
    }

    #[test]
    fn combination_stepper_is_lexicographic() {
        let mut c = vec![0, 1, 2];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 5) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4], vec![0, 2, 3], vec![0, 2, 4],
                vec![0, 3, 4], vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4],
            ]
        );
    }
}
