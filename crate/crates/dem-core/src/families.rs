//! Named graph families with frozen vertex labelings and, where available,
//! closed-form monitoring numbers.
//!
//! Labelings are part of the contract: tests and reports refer to vertices by
//! their family names (`u1`, `v3`, the hub `c`, ...), and [`vertex_names`]
//! publishes the name-to-index table for each spec.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Path P_n on vertices 0..n in order.
    Path { n: usize },
    /// Cycle C_n on vertices 0..n in ring order.
    Cycle { n: usize },
    /// Complete graph K_n.
    Complete { n: usize },
    /// K_{a,b}; part A is 0..a, part B is a..a+b.
    CompleteBipartite { a: usize, b: usize },
    /// Star of order n: center 0, leaves 1..n.
    Star { n: usize },
    /// Kite K(r, n): K_{r+1} on 0..=r with the path r, r+1, ..., n−1 hanging
    /// off vertex r (shared vertex, n vertices in total).
    Kite { r: usize, n: usize },
    /// Kipas (fan) on n+1 vertices: apex 0 joined to the path 1..=n.
    Kipas { n: usize },
    /// Friendship graph: n triangles sharing the hub. Same labeled graph as
    /// `Sequence { k: n, i: n }`.
    Friendship { n: usize },
    /// Wheel: hub 0 joined to the cycle 1..=k.
    Wheel { k: usize },
    /// Conical graph: hub 0, `layers` concentric k-cycles, radial paths from
    /// the hub through all layers. Position p of layer l is `(l−1)·k + p`.
    Conical { layers: usize, k: usize },
    /// Prism C_k □ P_l with product labeling (cycle position u, layer v) = u·l + v.
    Prism { k: usize, l: usize },
    /// Grid P_a □ P_b with product labeling (i, j) = i·b + j.
    Grid { a: usize, b: usize },
    /// 16-vertex gadget: the prism C_8 □ K_2 (rails u1..u8 and v1..v8, rungs
    /// u_i v_i) plus the chord u1 u5. u_i = i−1, v_i = 7+i.
    G8Star,
    /// 6-vertex gadget: triangles v1 v3 v5 and v2 v4 v6 plus the perfect
    /// matching v1 v2, v3 v4, v5 v6 (a labeled triangular prism); v_i = i−1.
    G6Prime,
    /// Spider tree on 2k+3 vertices: center 0 with k+1 legs of length 2;
    /// middle vertices 1..=k+1, leaf of leg i is k+1+i.
    Spider { k: usize },
    /// Book: hubs 0, 1 joined to each other and to the n−2 page vertices 2..n.
    Book { n: usize },
    /// Star with 2k leaves (hub 0, u_j = j, v_j = k+j) plus the matching
    /// edges u_j v_j for j ≤ i.
    Sequence { k: usize, i: usize },
}

use FamilySpec::*;

impl FamilySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            Path { .. } => "path",
            Cycle { .. } => "cycle",
            Complete { .. } => "complete",
            CompleteBipartite { .. } => "complete_bipartite",
            Star { .. } => "star",
            Kite { .. } => "kite",
            Kipas { .. } => "kipas",
            Friendship { .. } => "friendship",
            Wheel { .. } => "wheel",
            Conical { .. } => "conical",
            Prism { .. } => "prism",
            Grid { .. } => "grid",
            G8Star => "g8_star",
            G6Prime => "g6_prime",
            Spider { .. } => "spider",
            Book { .. } => "book",
            Sequence { .. } => "sequence",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::InvalidFamily { family: self.kind(), reason })
        };
        match *self {
            Path { n } | Complete { n } if n < 1 => fail(format!("n = {n}, need n >= 1")),
            Cycle { n } if n < 3 => fail(format!("n = {n}, need n >= 3")),
            CompleteBipartite { a, b } if a < 1 || b < 1 => {
                fail(format!("(a, b) = ({a}, {b}), need a, b >= 1"))
            }
            Star { n } if n < 1 => fail(format!("n = {n}, need n >= 1")),
            Kite { r, n } if r < 1 || n < r + 1 => {
                fail(format!("(r, n) = ({r}, {n}), need 1 <= r <= n - 1"))
            }
            Kipas { n } if n < 3 => fail(format!("n = {n}, need n >= 3")),
            Friendship { n } if n < 1 => fail(format!("n = {n}, need n >= 1")),
            Wheel { k } if k < 3 => fail(format!("k = {k}, need k >= 3")),
            Conical { layers, k } if layers < 1 || k < 3 => {
                fail(format!("(layers, k) = ({layers}, {k}), need layers >= 1 and k >= 3"))
            }
            Prism { k, l } if k < 3 || l < 1 => {
                fail(format!("(k, l) = ({k}, {l}), need k >= 3 and l >= 1"))
            }
            Grid { a, b } if a < 1 || b < 1 => {
                fail(format!("(a, b) = ({a}, {b}), need a, b >= 1"))
            }
            Spider { k } if k < 1 => fail(format!("k = {k}, need k >= 1")),
            Book { n } if n < 2 => fail(format!("n = {n}, need n >= 2")),
            Sequence { k, i } if k < 1 || i > k => {
                fail(format!("(k, i) = ({k}, {i}), need k >= 1 and 0 <= i <= k"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Path { n } | Cycle { n } | Complete { n } | Star { n } | Kipas { n }
            | Friendship { n } | Book { n } => write!(f, "{}:{}", self.kind(), n),
            Wheel { k } | Spider { k } => write!(f, "{}:{}", self.kind(), k),
            CompleteBipartite { a, b } => write!(f, "{}:{},{}", self.kind(), a, b),
            Kite { r, n } => write!(f, "{}:{},{}", self.kind(), r, n),
            Conical { layers, k } => write!(f, "{}:{},{}", self.kind(), layers, k),
            Prism { k, l } => write!(f, "{}:{},{}", self.kind(), k, l),
            Grid { a, b } => write!(f, "{}:{},{}", self.kind(), a, b),
            Sequence { k, i } => write!(f, "{}:{},{}", self.kind(), k, i),
            G8Star | G6Prime => write!(f, "{}", self.kind()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `kind` or `kind:p1[,p2]`, e.g. `kite:7,12`, `g8_star`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let bad = |family: &'static str, reason: String| Error::InvalidFamily { family, reason };
        let (kind, params) = match s.split_once(':') {
            Some((k, p)) => (k, p),
            None => (s, ""),
        };
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| bad("family", format!("`{t}` is not a number")))
                })
                .collect::<Result<_>>()?
        };
        let arity = |want: usize| -> Result<()> {
            if nums.len() == want {
                Ok(())
            } else {
                Err(bad("family", format!("`{s}` takes {want} parameter(s), got {}", nums.len())))
            }
        };
        let spec = match kind {
            "path" => { arity(1)?; Path { n: nums[0] } }
            "cycle" => { arity(1)?; Cycle { n: nums[0] } }
            "complete" => { arity(1)?; Complete { n: nums[0] } }
            "complete_bipartite" => { arity(2)?; CompleteBipartite { a: nums[0], b: nums[1] } }
            "star" => { arity(1)?; Star { n: nums[0] } }
            "kite" => { arity(2)?; Kite { r: nums[0], n: nums[1] } }
            "kipas" => { arity(1)?; Kipas { n: nums[0] } }
            "friendship" => { arity(1)?; Friendship { n: nums[0] } }
            "wheel" => { arity(1)?; Wheel { k: nums[0] } }
            "conical" => { arity(2)?; Conical { layers: nums[0], k: nums[1] } }
            "prism" => { arity(2)?; Prism { k: nums[0], l: nums[1] } }
            "grid" => { arity(2)?; Grid { a: nums[0], b: nums[1] } }
            "g8_star" => { arity(0)?; G8Star }
            "g6_prime" => { arity(0)?; G6Prime }
            "spider" => { arity(1)?; Spider { k: nums[0] } }
            "book" => { arity(1)?; Book { n: nums[0] } }
            "sequence" => { arity(2)?; Sequence { k: nums[0], i: nums[1] } }
            other => return Err(bad("family", format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the labeled graph for a validated spec.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let g = match *spec {
        Path { n } => Graph::new(n, &path_pairs(0, n))?,
        Cycle { n } => Graph::new(n, &cycle_pairs(n))?,
        Complete { n } => Graph::new(n, &complete_pairs(n))?,
        CompleteBipartite { a, b } => {
            let mut pairs = Vec::with_capacity(a * b);
            for u in 0..a {
                for v in 0..b {
                    pairs.push((u, a + v));
                }
            }
            Graph::new(a + b, &pairs)?
        }
        Star { n } => {
            let pairs: Vec<_> = (1..n).map(|v| (0, v)).collect();
            Graph::new(n, &pairs)?
        }
        Kite { r, n } => {
            let mut pairs = complete_pairs(r + 1);
            for s in r..n.saturating_sub(1) {
                pairs.push((s, s + 1));
            }
            Graph::new(n, &pairs)?
        }
        Kipas { n } => {
            let mut pairs: Vec<_> = (1..=n).map(|v| (0, v)).collect();
            pairs.extend(path_pairs(1, n));
            Graph::new(n + 1, &pairs)?
        }
        Friendship { n } => generate(&Sequence { k: n, i: n })?,
        Wheel { k } => conical_graph(1, k)?,
        Conical { layers, k } => conical_graph(layers, k)?,
        Prism { k, l } => cartesian_product(
            &generate(&Cycle { n: k })?,
            &generate(&Path { n: l })?,
        )?,
        Grid { a, b } => cartesian_product(
            &generate(&Path { n: a })?,
            &generate(&Path { n: b })?,
        )?,
        G8Star => {
            let u = |i: usize| i - 1; // u1..u8 -> 0..7
            let v = |i: usize| 7 + i; // v1..v8 -> 8..15
            let mut pairs = Vec::with_capacity(25);
            for i in 1..=8 {
                pairs.push((u(i), v(i)));
            }
            for i in 1..=7 {
                pairs.push((u(i), u(i + 1)));
                pairs.push((v(i), v(i + 1)));
            }
            pairs.push((u(1), u(8)));
            pairs.push((v(1), v(8)));
            pairs.push((u(1), u(5)));
            Graph::new(16, &pairs)?
        }
        G6Prime => {
            let v = |i: usize| i - 1;
            let pairs = [
                (v(1), v(2)), (v(3), v(4)), (v(5), v(6)),
                (v(1), v(3)), (v(1), v(5)), (v(3), v(5)),
                (v(2), v(4)), (v(2), v(6)), (v(4), v(6)),
            ];
            Graph::new(6, &pairs)?
        }
        Spider { k } => {
            let legs = k + 1;
            let mut pairs = Vec::with_capacity(2 * legs);
            for i in 1..=legs {
                pairs.push((0, i));
                pairs.push((i, legs + i));
            }
            Graph::new(2 * k + 3, &pairs)?
        }
        Book { n } => {
            let mut pairs = vec![(0, 1)];
            for p in 2..n {
                pairs.push((0, p));
                pairs.push((1, p));
            }
            Graph::new(n, &pairs)?
        }
        Sequence { k, i } => {
            let mut pairs = Vec::with_capacity(2 * k + i);
            for j in 1..=k {
                pairs.push((0, j));
                pairs.push((0, k + j));
            }
            for j in 1..=i {
                pairs.push((j, k + j));
            }
            Graph::new(2 * k + 1, &pairs)?
        }
    };
    Ok(g)
}

fn path_pairs(start: usize, len: usize) -> Vec<(usize, usize)> {
    (start..start + len.saturating_sub(1)).map(|v| (v, v + 1)).collect()
}

fn cycle_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = path_pairs(0, n);
    pairs.push((0, n - 1));
    pairs
}

fn complete_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn conical_graph(layers: usize, k: usize) -> Result<Graph> {
    let idx = |p: usize, l: usize| (l - 1) * k + p; // p in 1..=k, l in 1..=layers
    let mut pairs = Vec::with_capacity(2 * k * layers);
    for l in 1..=layers {
        for p in 1..k {
            pairs.push((idx(p, l), idx(p + 1, l)));
        }
        pairs.push((idx(1, l), idx(k, l)));
    }
    for p in 1..=k {
        pairs.push((0, idx(p, 1)));
        for l in 1..layers {
            pairs.push((idx(p, l), idx(p, l + 1)));
        }
    }
    Graph::new(k * layers + 1, &pairs)
}

/// Family name of each vertex index, in index order.
pub fn vertex_names(spec: &FamilySpec) -> Result<Vec<String>> {
    spec.validate()?;
    let names = match *spec {
        Path { n } | Cycle { n } | Star { n } | Book { n } => {
            (1..=n).map(|i| format!("v{i}")).collect()
        }
        Complete { n } => (0..n).map(|i| format!("v{i}")).collect(),
        CompleteBipartite { a, b } => (1..=a)
            .map(|i| format!("u{i}"))
            .chain((1..=b).map(|i| format!("v{i}")))
            .collect(),
        Kite { n, .. } => (0..n).map(|i| format!("u{i}")).collect(),
        Kipas { n } => (0..=n).map(|i| format!("v{i}")).collect(),
        Friendship { n } => vertex_names(&Sequence { k: n, i: n })?,
        Wheel { k } => std::iter::once("c".to_string())
            .chain((1..=k).map(|i| format!("u{i}")))
            .collect(),
        Conical { layers, k } => {
            let mut names = vec!["c".to_string()];
            for l in 1..=layers {
                for p in 1..=k {
                    names.push(format!("u{p}^{l}"));
                }
            }
            names
        }
        Prism { k, l } => {
            let mut names = Vec::with_capacity(k * l);
            for u in 0..k {
                for v in 0..l {
                    names.push(format!("({u},{v})"));
                }
            }
            names
        }
        Grid { a, b } => {
            let mut names = Vec::with_capacity(a * b);
            for i in 0..a {
                for j in 0..b {
                    names.push(format!("({i},{j})"));
                }
            }
            names
        }
        G8Star => (1..=8)
            .map(|i| format!("u{i}"))
            .chain((1..=8).map(|i| format!("v{i}")))
            .collect(),
        G6Prime => (1..=6).map(|i| format!("v{i}")).collect(),
        Spider { k } => std::iter::once("v0".to_string())
            .chain((1..=k + 1).map(|i| format!("u{i}")))
            .chain((1..=k + 1).map(|i| format!("v{i}")))
            .collect(),
        Sequence { k, .. } => std::iter::once("c".to_string())
            .chain((1..=k).map(|j| format!("u{j}")))
            .chain((1..=k).map(|j| format!("v{j}")))
            .collect(),
    };
    Ok(names)
}

/// A closed-form prediction for the monitoring number, if one applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub value: Option<usize>,
    /// The claim (or the unmet hypothesis) gating the prediction.
    pub condition: &'static str,
}

impl ClosedForm {
    pub fn applicable(&self) -> bool {
        self.value.is_some()
    }

    fn some(value: usize, condition: &'static str) -> ClosedForm {
        ClosedForm { value: Some(value), condition }
    }

    fn none(condition: &'static str) -> ClosedForm {
        ClosedForm { value: None, condition }
    }
}

const TREE_RULE: &str = "a connected graph with an edge has dem 1 iff it is a tree";
const SINGLETON_RULE: &str = "an isolated vertex monitors nothing: dem(K_1) = 0";
const UNICYCLIC_RULE: &str = "fes <= 1 forces dem = fes + 1; a cycle has fes 1, so dem = 2";

/// Closed-form dem where a formula's hypotheses hold; inapplicable otherwise.
pub fn predicted_dem(spec: &FamilySpec) -> ClosedForm {
    if spec.validate().is_err() {
        return ClosedForm::none("invalid parameters");
    }
    match *spec {
        Path { n } | Star { n } => {
            if n == 1 {
                ClosedForm::some(0, SINGLETON_RULE)
            } else {
                ClosedForm::some(1, TREE_RULE)
            }
        }
        Spider { .. } => ClosedForm::some(1, TREE_RULE),
        Cycle { .. } => ClosedForm::some(2, UNICYCLIC_RULE),
        Complete { n } => ClosedForm::some(n - 1, "dem(K_n) = n - 1"),
        CompleteBipartite { a, b } => {
            ClosedForm::some(a.min(b), "dem(K_{a,b}) = min(a, b) for a, b >= 1")
        }
        Kite { r, .. } => {
            ClosedForm::some(r, "dem(kite(r, n)) = r: the base graph is K_{r+1}")
        }
        Kipas { n } => {
            if n >= 7 {
                ClosedForm::some(n / 2, "dem(kipas_n) = floor(n/2) for n >= 7")
            } else {
                ClosedForm::none("kipas formula floor(n/2) requires n >= 7")
            }
        }
        Friendship { n } => match n {
            1 => ClosedForm::some(2, "one triangle is K_3: dem = 2"),
            _ => ClosedForm::some(n, "dem(friendship_n) = n for n >= 2"),
        },
        Wheel { .. } => ClosedForm::none(
            "no closed form: a one-layer cone falls outside the conical formula (needs >= 2 layers)",
        ),
        Conical { layers, k } => {
            if layers >= 2 && k >= 9 {
                ClosedForm::some(
                    conical_formula(layers, k),
                    "dem(conical(l, k)) = sum of ceil(k/(4i-2)) over saturating layers \
                     plus 2 per layer beyond, for k >= 9 and l >= 2",
                )
            } else {
                ClosedForm::none("conical formula requires k >= 9 and at least 2 layers")
            }
        }
        Prism { k, l } => {
            if l == 1 {
                ClosedForm::some(2, UNICYCLIC_RULE)
            } else {
                ClosedForm::some(
                    if k > 2 * l { k } else { 2 * l },
                    "dem(C_k x P_l) = k if k >= 2l + 1, else 2l",
                )
            }
        }
        Grid { a, b } => {
            let (lo, hi) = (a.min(b), a.max(b));
            if lo >= 2 {
                ClosedForm::some(hi, "dem(P_a x P_b) = max(a, b) for a, b >= 2")
            } else if hi >= 2 {
                ClosedForm::some(1, TREE_RULE)
            } else {
                ClosedForm::some(0, SINGLETON_RULE)
            }
        }
        G8Star => ClosedForm::none("no closed form; the exact solver gives 6"),
        G6Prime => ClosedForm::none("no closed form; the exact solver gives 4"),
        Book { .. } => ClosedForm::none("no closed form; the exact solver gives 2 for n >= 3"),
        Sequence { i, .. } => match i {
            0 => ClosedForm::some(1, TREE_RULE),
            1 => ClosedForm::some(2, UNICYCLIC_RULE),
            _ => ClosedForm::some(i, "dem(sequence(k, i)) = i for 2 <= i <= k"),
        },
    }
}

/// Number of inner layers of a k-ringed cone whose rings are still "small"
/// enough that a single probe sees 4i−2 ring edges on ring i.
pub fn conical_layer_threshold(k: usize) -> usize {
    (k + k % 2) / 4
}

fn conical_formula(layers: usize, k: usize) -> usize {
    let a = conical_layer_threshold(k);
    let saturating: usize = (1..=layers.min(a)).map(|i| k.div_ceil(4 * i - 2)).sum();
    saturating + 2 * layers.saturating_sub(a)
}

/// How many of C_n's own edges one vertex on the cycle monitors:
/// n−1 when n is odd, n−2 when n is even.
pub fn cycle_em_count(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::InvalidFamily {
            family: "cycle",
            reason: format!("n = {n}, need n >= 3"),
        });
    }
    Ok(if n % 2 == 1 { n - 1 } else { n - 2 })
}

/// How many edges of its own ring a layer-i vertex of a k-ringed cone
/// monitors: 4i−2 up to the layer threshold, then k−2 (even k) or k−1 (odd k).
pub fn conical_layer_em_count(i: usize, k: usize) -> Result<usize> {
    if i < 1 || k < 3 {
        return Err(Error::InvalidFamily {
            family: "conical",
            reason: format!("(i, k) = ({i}, {k}), need i >= 1 and k >= 3"),
        });
    }
    Ok(if i <= conical_layer_threshold(k) {
        4 * i - 2
    } else if k.is_multiple_of(2) {
        k - 2
    } else {
        k - 1
    })
}
