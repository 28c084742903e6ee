//! Vertex labelings, neighbor-sum weights, and the local distance antimagic
//! predicate.
//!
//! A labeling is a bijection from the vertices onto `1..=order`. The weight of
//! a vertex is the sum of the labels over its open neighborhood; a labeling is
//! local distance antimagic when adjacent vertices never share a weight, and
//! the distinct weights act as proper colors.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A bijection from vertices onto `1..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let order = labels.len();
        let mut seen = vec![false; order + 1];
        for (v, &label) in labels.iter().enumerate() {
            if label < 1 || label > order {
                return Err(Error::NotBijective {
                    order,
                    msg: format!("vertex {v} has label {label}"),
                });
            }
            if seen[label] {
                return Err(Error::NotBijective {
                    order,
                    msg: format!("label {label} used twice"),
                });
            }
            seen[label] = true;
        }
        Ok(Labeling { labels })
    }

    /// `f(v) = v + 1`.
    pub fn identity(order: usize) -> Self {
        Labeling {
            labels: (1..=order).collect(),
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> usize {
        self.labels[v]
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }
}

/// Per-vertex weights plus the diagnostics the verifier reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    /// `weights[v]` is the sum of labels over `N(v)`.
    pub weights: Vec<u64>,
    pub distinct_count: usize,
    /// Edges whose endpoints share a weight, in canonical edge order.
    pub conflicts: Vec<(Vertex, Vertex)>,
}

impl WeightProfile {
    pub fn is_valid(&self) -> bool {
        self.conflicts.is_empty()
    }
}

/// Computes the full weight profile. Invalid labelings still produce every
/// conflict so callers can display them all.
pub fn weigh(g: &Graph, f: &Labeling) -> Result<WeightProfile> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch {
            expected: g.order(),
            got: f.order(),
        });
    }
    let weights: Vec<u64> = (0..g.order())
        .map(|v| g.neighbors(v).iter().map(|&u| f.label(u) as u64).sum())
        .collect();
    let mut distinct: Vec<u64> = weights.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let conflicts = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| weights[u] == weights[v])
        .collect();
    Ok(WeightProfile {
        weights,
        distinct_count: distinct.len(),
        conflicts,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    /// Number of distinct weights, reported for diagnostics even when invalid.
    pub colors: usize,
}

/// Is `f` a local distance antimagic labeling of `g`?
pub fn is_ldal(g: &Graph, f: &Labeling) -> Result<Verdict> {
    let profile = weigh(g, f)?;
    Ok(Verdict {
        valid: profile.is_valid(),
        colors: profile.distinct_count,
    })
}

/// Size of the symmetric difference `N(u) △ N(v)`.
pub fn symdiff_size(g: &Graph, u: Vertex, v: Vertex) -> usize {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                count += 1;
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                count += 1;
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    count + (a.len() - i) + (b.len() - j)
}

/// True when `|N(u) △ N(v)| ∈ {1, 2}`, in which case every bijection gives
/// `w(u) != w(v)`: the weight difference reduces to `±f(x)` or `f(x) - f(y)`
/// (or `f(x) + f(y)`) over the symmetric difference, which is never zero.
/// Used as a forced-distinct constraint when bounding search.
pub fn symdiff_rule(g: &Graph, u: Vertex, v: Vertex) -> bool {
    debug_assert_ne!(u, v);
    matches!(symdiff_size(g, u, v), 1 | 2)
}

/// Lower bound for trees: one more than the number of distinct support
/// vertices (neighbors of leaves).
pub fn tree_leaf_lower_bound(g: &Graph) -> Result<usize> {
    if !g.is_tree() {
        return Err(Error::NotATree(format!(
            "order {} with {} edges",
            g.order(),
            g.size()
        )));
    }
    if g.order() < 3 {
        return Err(Error::NotATree("tree bound needs order >= 3".into()));
    }
    let mut supports: Vec<Vertex> = (0..g.order())
        .filter(|&v| g.degree(v) == 1)
        .map(|leaf| g.neighbors(leaf)[0])
        .collect();
    supports.sort_unstable();
    supports.dedup();
    Ok(supports.len() + 1)
}

/// A greedily grown clique, as a cheap chromatic lower bound.
pub fn clique_lower_bound(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let mut verts: Vec<Vertex> = (0..g.order()).collect();
    verts.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut best = 1;
    for &start in &verts {
        let mut clique = vec![start];
        for &v in &verts {
            if v != start && clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{bistar, complete, cycle, multipartite, path, star};

    #[test]
    fn weights_on_small_examples() {
        let p3 = path(3).unwrap();
        let profile = weigh(&p3, &Labeling::new(vec![1, 2, 3]).unwrap()).unwrap();
        assert_eq!(profile.weights, vec![2, 4, 2]);
        assert!(profile.conflicts.is_empty());

        let k2 = complete(2).unwrap();
        let profile = weigh(&k2, &Labeling::new(vec![1, 2]).unwrap()).unwrap();
        assert_eq!(profile.weights, vec![2, 1]);

        let c4 = cycle(4).unwrap();
        let verdict = is_ldal(&c4, &Labeling::new(vec![1, 2, 3, 4]).unwrap()).unwrap();
        assert!(verdict.valid);
        assert_eq!(verdict.colors, 2);
        let profile = weigh(&c4, &Labeling::new(vec![1, 2, 3, 4]).unwrap()).unwrap();
        assert_eq!(profile.weights, vec![6, 4, 6, 4]);
    }

    #[test]
    fn endpoints_of_p3_may_share_a_weight() {
        let p3 = path(3).unwrap();
        let f = Labeling::new(vec![2, 1, 3]).unwrap();
        let profile = weigh(&p3, &f).unwrap();
        assert_eq!(profile.weights, vec![1, 5, 1]);
        let verdict = is_ldal(&p3, &f).unwrap();
        assert!(verdict.valid);
        assert_eq!(verdict.colors, 2);
    }

    #[test]
    fn invalid_labelings_report_all_conflicts() {
        let p3 = path(3).unwrap();
        // f(b)=3 makes every weight 3: both edges conflict.
        let profile = weigh(&p3, &Labeling::new(vec![1, 3, 2]).unwrap()).unwrap();
        assert_eq!(profile.conflicts, vec![(0, 1), (1, 2)]);
        assert!(!is_ldal(&p3, &Labeling::new(vec![1, 3, 2]).unwrap()).unwrap().valid);
    }

    #[test]
    fn bijection_and_order_checks() {
        assert!(Labeling::new(vec![1, 1, 3]).is_err());
        assert!(Labeling::new(vec![0, 1]).is_err());
        assert!(Labeling::new(vec![2, 3]).is_err());
        let p3 = path(3).unwrap();
        assert!(matches!(
            weigh(&p3, &Labeling::identity(4)),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn symdiff_rule_examples() {
        let p4 = path(4).unwrap();
        assert!(symdiff_rule(&p4, 1, 3));
        let p3 = path(3).unwrap();
        assert!(!symdiff_rule(&p3, 0, 2));
        let c4 = cycle(4).unwrap();
        assert!(!symdiff_rule(&c4, 0, 2));
        assert_eq!(symdiff_size(&c4, 0, 2), 0);
    }

    #[test]
    fn tree_bound_counts_support_vertices() {
        assert_eq!(tree_leaf_lower_bound(&star(4).unwrap()).unwrap(), 2);
        assert_eq!(tree_leaf_lower_bound(&bistar(2, 2).unwrap()).unwrap(), 3);
        assert_eq!(tree_leaf_lower_bound(&path(4).unwrap()).unwrap(), 3);
        assert!(tree_leaf_lower_bound(&cycle(4).unwrap()).is_err());
    }

    #[test]
    fn clique_bound_examples() {
        assert_eq!(clique_lower_bound(&complete(5).unwrap()), 5);
        assert_eq!(clique_lower_bound(&cycle(5).unwrap()), 2);
        assert_eq!(clique_lower_bound(&multipartite(&[3, 3]).unwrap()), 2);
    }
}
