//! Plain-text graph format.
//!
//! Line 1: `n m`. Then `m` lines `u v` with 0-based endpoints. Lines starting
//! with `#` are comments; blank lines are skipped. The writer always emits the
//! canonical sorted edge order, so `write(parse(t))` is a canonical form of `t`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = content
        .next()
        .ok_or(Error::Parse { line: 1, reason: "missing `n m` header".into() })?;
    let mut it = header.split_whitespace();
    let n = parse_field(it.next(), line, "n")?;
    let m = parse_field(it.next(), line, "m")?;
    if it.next().is_some() {
        return Err(Error::Parse { line, reason: "expected exactly `n m`".into() });
    }

    let mut pairs = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = line;
    for (line, text) in content {
        if pairs.len() == m {
            return Err(Error::Parse {
                line,
                reason: format!("found more than the {m} edges announced in the header"),
            });
        }
        let mut it = text.split_whitespace();
        let u: usize = parse_field(it.next(), line, "u")?;
        let v: usize = parse_field(it.next(), line, "v")?;
        if it.next().is_some() {
            return Err(Error::Parse { line, reason: "expected exactly `u v`".into() });
        }
        if u == v {
            return Err(Error::Parse { line, reason: format!("loop edge ({u}, {v})") });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                reason: format!("edge ({u}, {v}) out of range for {n} vertices"),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse { line, reason: format!("duplicate edge ({u}, {v})") });
        }
        pairs.push((u, v));
        last_line = line;
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: last_line,
            reason: format!("header announced {m} edges, found {}", pairs.len()),
        });
    }
    Graph::new(n, &pairs)
}

fn parse_field(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or(Error::Parse { line, reason: format!("missing field `{what}`") })?
        .parse()
        .map_err(|_| Error::Parse { line, reason: format!("field `{what}` is not a number") })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(8 + g.size() * 8);
    out.push_str(&format!("{} {}\n", g.order(), g.size()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
