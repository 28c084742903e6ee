//! Named graph families and the descriptor grammar used by the CLI.

use crate::error::{Error, Result};
use crate::graph::{Graph, SymmetryHint, Vertex, VertexTag};

/// Descriptor for a named family.
///
/// The token grammar accepted by [`FamilySpec::parse_tokens`] is
/// `name arg...` for atomic families plus the prefix operators
/// `join <spec> <spec>` and `lexi <spec> <spec>`, e.g.
/// `lexi cycle 5 empty 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// Star `K_{1,q}` with `q` leaves.
    Star(usize),
    /// Two adjacent centers with `m` and `n` leaves.
    Bistar(usize, usize),
    /// `k` triangles sharing one hub vertex.
    Friendship(usize),
    /// Cycle of length `m` joined to a hub.
    Wheel(usize),
    /// Path of length `m` joined to a hub.
    Fan(usize),
    /// `k` disjoint edges.
    Matching(usize),
    /// Complete multipartite graph with the given part sizes.
    Multipartite(Vec<usize>),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Lexicographic(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    /// Parses a whitespace-tokenized descriptor, consuming all tokens.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        Self::parse_tokens(&tokens)
    }

    pub fn parse_tokens(tokens: &[&str]) -> Result<FamilySpec> {
        let (spec, rest) = Self::parse_prefix(tokens)?;
        if !rest.is_empty() {
            return Err(Error::InvalidFamily(format!(
                "trailing tokens after descriptor: {}",
                rest.join(" ")
            )));
        }
        Ok(spec)
    }

    fn parse_prefix<'a>(tokens: &'a [&'a str]) -> Result<(FamilySpec, &'a [&'a str])> {
        let bad = |msg: &str| Error::InvalidFamily(msg.to_string());
        let (&name, rest) = tokens
            .split_first()
            .ok_or_else(|| bad("empty family descriptor"))?;
        let int = |rest: &[&str], i: usize| -> Result<usize> {
            rest.get(i)
                .ok_or_else(|| bad(&format!("`{name}` is missing an argument")))?
                .parse()
                .map_err(|_| bad(&format!("`{name}` expects integer arguments")))
        };
        match name {
            "join" | "lexi" => {
                let (left, rest) = Self::parse_prefix(rest)?;
                let (right, rest) = Self::parse_prefix(rest)?;
                let spec = if name == "join" {
                    FamilySpec::Join(Box::new(left), Box::new(right))
                } else {
                    FamilySpec::Lexicographic(Box::new(left), Box::new(right))
                };
                Ok((spec, rest))
            }
            "bistar" => Ok((FamilySpec::Bistar(int(rest, 0)?, int(rest, 1)?), &rest[2..])),
            "multipartite" => {
                let sizes = rest
                    .first()
                    .ok_or_else(|| bad("`multipartite` expects comma-separated part sizes"))?
                    .split(',')
                    .map(|s| {
                        s.parse()
                            .map_err(|_| bad("`multipartite` expects comma-separated part sizes"))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                Ok((FamilySpec::Multipartite(sizes), &rest[1..]))
            }
            _ => {
                let arg = int(rest, 0)?;
                let spec = match name {
                    "path" => FamilySpec::Path(arg),
                    "cycle" => FamilySpec::Cycle(arg),
                    "complete" => FamilySpec::Complete(arg),
                    "empty" => FamilySpec::Empty(arg),
                    "star" => FamilySpec::Star(arg),
                    "friendship" => FamilySpec::Friendship(arg),
                    "wheel" => FamilySpec::Wheel(arg),
                    "fan" => FamilySpec::Fan(arg),
                    "matching" => FamilySpec::Matching(arg),
                    _ => return Err(bad(&format!("unknown family `{name}`"))),
                };
                Ok((spec, &rest[1..]))
            }
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path {n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle {n}"),
            FamilySpec::Complete(n) => write!(f, "complete {n}"),
            FamilySpec::Empty(n) => write!(f, "empty {n}"),
            FamilySpec::Star(n) => write!(f, "star {n}"),
            FamilySpec::Bistar(m, n) => write!(f, "bistar {m} {n}"),
            FamilySpec::Friendship(n) => write!(f, "friendship {n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel {n}"),
            FamilySpec::Fan(n) => write!(f, "fan {n}"),
            FamilySpec::Matching(n) => write!(f, "matching {n}"),
            FamilySpec::Multipartite(sizes) => {
                let joined: Vec<String> = sizes.iter().map(ToString::to_string).collect();
                write!(f, "multipartite {}", joined.join(","))
            }
            FamilySpec::Join(a, b) => write!(f, "join {a} {b}"),
            FamilySpec::Lexicographic(a, b) => write!(f, "lexi {a} {b}"),
        }
    }
}

/// Constructs the canonical graph of a family descriptor.
pub fn gen_family(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path(n) => path(*n),
        FamilySpec::Cycle(m) => cycle(*m),
        FamilySpec::Complete(n) => complete(*n),
        FamilySpec::Empty(n) => empty(*n),
        FamilySpec::Star(q) => star(*q),
        FamilySpec::Bistar(m, n) => bistar(*m, *n),
        FamilySpec::Friendship(k) => friendship(*k),
        FamilySpec::Wheel(m) => wheel(*m),
        FamilySpec::Fan(m) => fan(*m),
        FamilySpec::Matching(k) => matching(*k),
        FamilySpec::Multipartite(sizes) => multipartite(sizes),
        FamilySpec::Join(a, b) => Ok(crate::ops::join(&gen_family(a)?, &gen_family(b)?)),
        FamilySpec::Lexicographic(a, b) => {
            Ok(crate::ops::lexicographic(&gen_family(a)?, &gen_family(b)?))
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    cond.then_some(()).ok_or_else(|| Error::InvalidFamily(msg.to_string()))
}

/// Path `0-1-...-(n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    require(n >= 2, "path needs at least 2 vertices")?;
    let g = Graph::from_edges(n, (0..n - 1).map(|v| (v, v + 1)))?;
    let (a, b) = split_by_parity(n);
    Ok(g.with_symmetry(SymmetryHint::PathReversal).with_parts(a, b))
}

/// Cycle `0-1-...-(m-1)-0`.
pub fn cycle(m: usize) -> Result<Graph> {
    require(m >= 3, "cycle needs at least 3 vertices")?;
    let g = Graph::from_edges(m, (0..m).map(|v| (v, (v + 1) % m)))?
        .with_symmetry(SymmetryHint::CycleDihedral);
    if m % 2 == 0 {
        let (a, b) = split_by_parity(m);
        Ok(g.with_parts(a, b))
    } else {
        Ok(g)
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, "complete graph needs at least 1 vertex")?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn empty(n: usize) -> Result<Graph> {
    require(n >= 1, "empty graph needs at least 1 vertex")?;
    Graph::from_edges(n, [])
}

/// Star `K_{1,q}`: center 0, leaves `1..=q`.
pub fn star(q: usize) -> Result<Graph> {
    require(q >= 1, "star needs at least 1 leaf")?;
    let g = Graph::from_edges(q + 1, (1..=q).map(|v| (0, v)))?;
    let mut tags = vec![VertexTag::Leaf; q + 1];
    tags[0] = VertexTag::Center;
    Ok(g.with_tags(tags).with_parts(vec![0], (1..=q).collect()))
}

/// Bistar: centers 0 and 1 adjacent, with `m` and `n` leaves respectively.
pub fn bistar(m: usize, n: usize) -> Result<Graph> {
    require(m >= 2 && n >= 2, "bistar needs at least 2 leaves per center")?;
    let mut edges = vec![(0, 1)];
    edges.extend((0..m).map(|i| (0, 2 + i)));
    edges.extend((0..n).map(|i| (1, 2 + m + i)));
    let g = Graph::from_edges(m + n + 2, edges)?;
    let mut tags = vec![VertexTag::Leaf; m + n + 2];
    tags[0] = VertexTag::Center;
    tags[1] = VertexTag::Center;
    let mut a = vec![0];
    a.extend(2 + m..2 + m + n);
    let mut b = vec![1];
    b.extend(2..2 + m);
    Ok(g.with_tags(tags).with_parts(a, b))
}

/// Friendship graph: `k` triangles sharing the hub, which sits at index `2k`
/// so that the layout agrees with `join(matching(k), complete(1))`.
pub fn friendship(k: usize) -> Result<Graph> {
    require(k >= 1, "friendship graph needs at least 1 triangle")?;
    let hub = 2 * k;
    let mut edges: Vec<(Vertex, Vertex)> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
    edges.extend((0..hub).map(|v| (v, hub)));
    let g = Graph::from_edges(2 * k + 1, edges)?;
    let mut tags = vec![VertexTag::Plain; 2 * k + 1];
    tags[hub] = VertexTag::Center;
    Ok(g.with_tags(tags))
}

/// Wheel: cycle `0..m` plus a hub at index `m`, matching `join(cycle(m), complete(1))`.
pub fn wheel(m: usize) -> Result<Graph> {
    require(m >= 3, "wheel needs a rim of at least 3 vertices")?;
    let mut edges: Vec<(Vertex, Vertex)> = (0..m).map(|v| (v, (v + 1) % m)).collect();
    edges.extend((0..m).map(|v| (v, m)));
    let g = Graph::from_edges(m + 1, edges)?;
    let mut tags = vec![VertexTag::Plain; m + 1];
    tags[m] = VertexTag::Center;
    Ok(g.with_tags(tags))
}

/// Fan: path `0..m` plus a hub at index `m`, matching `join(path(m), complete(1))`.
pub fn fan(m: usize) -> Result<Graph> {
    require(m >= 2, "fan needs a path of at least 2 vertices")?;
    let mut edges: Vec<(Vertex, Vertex)> = (0..m - 1).map(|v| (v, v + 1)).collect();
    edges.extend((0..m).map(|v| (v, m)));
    let g = Graph::from_edges(m + 1, edges)?;
    let mut tags = vec![VertexTag::Plain; m + 1];
    tags[m] = VertexTag::Center;
    Ok(g.with_tags(tags))
}

/// `k` disjoint edges `(2i, 2i+1)`.
pub fn matching(k: usize) -> Result<Graph> {
    require(k >= 1, "matching needs at least 1 edge")?;
    let g = Graph::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1)))?;
    let (a, b) = split_by_parity(2 * k);
    Ok(g.with_parts(a, b))
}

/// Complete multipartite graph; parts occupy consecutive index ranges.
pub fn multipartite(sizes: &[usize]) -> Result<Graph> {
    require(sizes.len() >= 2, "multipartite needs at least 2 parts")?;
    require(sizes.iter().all(|&s| s >= 1), "multipartite parts must be nonempty")?;
    let order: usize = sizes.iter().sum();
    let mut part_of = Vec::with_capacity(order);
    let mut tags = Vec::with_capacity(order);
    for (p, &s) in sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, s));
        tags.extend(std::iter::repeat_n(VertexTag::Part(p), s));
    }
    let edges = (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v]);
    let g = Graph::from_edges(order, edges)?.with_tags(tags);
    if sizes.len() == 2 {
        let a = (0..sizes[0]).collect();
        let b = (sizes[0]..order).collect();
        Ok(g.with_parts(a, b))
    } else {
        Ok(g)
    }
}

fn split_by_parity(n: usize) -> (Vec<Vertex>, Vec<Vertex>) {
    ((0..n).step_by(2).collect(), (1..n).step_by(2).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::join;

    #[test]
    fn family_orders_and_edge_counts() {
        // Edge counts per family, checked against an independent formula table.
        assert_eq!(path(5).unwrap().size(), 4);
        assert_eq!(cycle(4).unwrap().size(), 4);
        assert_eq!(complete(6).unwrap().size(), 15);
        assert_eq!(empty(4).unwrap().size(), 0);
        assert_eq!(star(4).unwrap().size(), 4);
        assert_eq!(bistar(2, 2).unwrap().size(), 5);
        assert_eq!(friendship(2).unwrap().size(), 6);
        assert_eq!(wheel(5).unwrap().size(), 10);
        assert_eq!(fan(5).unwrap().size(), 9);
        assert_eq!(matching(3).unwrap().size(), 3);
        let sizes = [2usize, 3, 4];
        let order: usize = sizes.iter().sum();
        let expected = (order * order - sizes.iter().map(|s| s * s).sum::<usize>()) / 2;
        assert_eq!(multipartite(&sizes).unwrap().size(), expected);
    }

    #[test]
    fn cycle_4_is_2_regular() {
        let g = cycle(4).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.regularity(), Some(2));
    }

    #[test]
    fn friendship_2_has_hub_of_degree_4() {
        let g = friendship(2).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 6);
        assert_eq!(g.degree(4), 4);
        assert_eq!(g.tag(4), VertexTag::Center);
    }

    #[test]
    fn bistar_2_2_centers_have_degree_3() {
        let g = bistar(2, 2).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.size(), 5);
        assert!(g.has_edge(0, 1));
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
    }

    #[test]
    fn hub_families_match_their_join_form() {
        assert_eq!(
            wheel(5).unwrap(),
            join(&cycle(5).unwrap(), &complete(1).unwrap())
        );
        assert_eq!(
            fan(4).unwrap(),
            join(&path(4).unwrap(), &complete(1).unwrap())
        );
        assert_eq!(
            friendship(3).unwrap(),
            join(&matching(3).unwrap(), &complete(1).unwrap())
        );
    }

    #[test]
    fn descriptor_grammar_round_trips() {
        for text in [
            "cycle 6",
            "bistar 2 3",
            "multipartite 2,2,2",
            "join friendship 2 empty 2",
            "lexi cycle 5 empty 3",
            "lexi join path 3 complete 1 empty 2",
        ] {
            let spec = FamilySpec::parse(text).unwrap();
            assert_eq!(spec.to_string(), text);
            gen_family(&spec).unwrap();
        }
        assert!(FamilySpec::parse("cycle").is_err());
        assert!(FamilySpec::parse("cycle 2").and_then(|s| gen_family(&s)).is_err());
        assert!(FamilySpec::parse("blob 3").is_err());
        assert!(FamilySpec::parse("cycle 4 5").is_err());
    }

    #[test]
    fn generated_orders_match_descriptors() {
        let g = gen_family(&FamilySpec::parse("lexi cycle 5 empty 3").unwrap()).unwrap();
        assert_eq!(g.order(), 15);
        let g = gen_family(&FamilySpec::parse("join friendship 2 empty 2").unwrap()).unwrap();
        assert_eq!(g.order(), 7);
    }
}
