//! Text formats for graphs and labelings.
//!
//! Graph edge-list format: a header line `order edge-count`, then one `u v`
//! pair per line, 0-based. Lines starting with `#` are comments. Serialization
//! emits edges in ascending canonical order and is byte-stable.
//!
//! Labeling format: one `vertex label` pair per line, 0-based vertex,
//! 1-based label.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::labeling::Labeling;

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let parse_pair = || -> Result<(usize, usize)> {
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected two integers, got `{content}`"),
                });
            }
            let a = fields[0].parse().map_err(|_| Error::Parse {
                line,
                msg: format!("`{}` is not an integer", fields[0]),
            })?;
            let b = fields[1].parse().map_err(|_| Error::Parse {
                line,
                msg: format!("`{}` is not an integer", fields[1]),
            })?;
            Ok((a, b))
        };
        match header {
            None => header = Some(parse_pair()?),
            Some((order, _)) => {
                let (u, v) = parse_pair()?;
                if u == v {
                    return Err(Error::Parse {
                        line,
                        msg: format!("loop at vertex {u}"),
                    });
                }
                if u >= order || v >= order {
                    return Err(Error::Parse {
                        line,
                        msg: format!("vertex index out of range for order {order}"),
                    });
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::Parse {
                        line,
                        msg: format!("duplicate edge ({u}, {v})"),
                    });
                }
                edges.push((u, v));
            }
        }
    }
    let (order, count) = header.ok_or(Error::Parse {
        line: last_line.max(1),
        msg: "missing header line `order edge-count`".into(),
    })?;
    if edges.len() != count {
        return Err(Error::Parse {
            line: last_line.max(1),
            msg: format!("header declares {count} edges but {} were given", edges.len()),
        });
    }
    Graph::from_edges(order, edges)
}

pub fn serialize_labeling(f: &Labeling) -> String {
    let mut out = String::new();
    for (v, &label) in f.labels().iter().enumerate() {
        out.push_str(&format!("{v} {label}\n"));
    }
    out
}

/// Parses a labeling file for a graph of the given order.
pub fn parse_labeling(text: &str, order: usize) -> Result<Labeling> {
    let mut assignment = vec![0usize; order];
    let mut seen = vec![false; order];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected `vertex label`, got `{content}`"),
            });
        }
        let v: usize = fields[0].parse().map_err(|_| Error::Parse {
            line,
            msg: format!("`{}` is not an integer", fields[0]),
        })?;
        let label: usize = fields[1].parse().map_err(|_| Error::Parse {
            line,
            msg: format!("`{}` is not an integer", fields[1]),
        })?;
        if v >= order {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} out of range for order {order}"),
            });
        }
        if seen[v] {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} labeled twice"),
            });
        }
        seen[v] = true;
        assignment[v] = label;
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::NotBijective {
            order,
            msg: format!("vertex {v} has no label"),
        });
    }
    Labeling::new(assignment)
}
