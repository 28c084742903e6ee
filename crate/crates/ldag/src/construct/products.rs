//! Labelers for lexicographic products with edgeless graphs: the general
//! lift, the bipartite matrix constructions, complete-graph products, and
//! hub compositions built from the join distributivity of the product.

use super::{certify, check_closed_form, Claim};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::family;
use crate::graph::{Graph, Vertex};
use crate::labeling::{clique_lower_bound, is_ldal, weigh, Labeling};
use crate::ops::{lexicographic, product_index};
use crate::oracle::chi_exact;
use crate::rect::{
    build_magic_rectangle, build_matrix_a, build_matrix_b, build_matrix_c, RectangularArray,
};

use super::joins::label_join_with_empty;

/// Lifts a valid labeling of `G` to `G[empty(n)]` by blocks:
/// slot `i` of copy `j` takes `i + (f(j) - 1) n` (1-based). The lifted weight
/// of every vertex in copy `j` is `n(n+1)/2 deg(j) + (w_f(j) - deg(j)) n^2`,
/// which must differ across every edge of `G`.
pub fn label_lexi_lift(g: &Graph, f: &Labeling, n: usize) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::Hypothesis(format!("blow-up factor must exceed 1, got {n}")));
    }
    let verdict = is_ldal(g, f)?;
    if !verdict.valid {
        return Err(Error::Hypothesis("ingredient labeling must be valid".into()));
    }
    let wf = weigh(g, f)?.weights;
    let lifted: Vec<u64> = (0..g.order())
        .map(|v| {
            let d = g.degree(v) as u64;
            (n * (n + 1) / 2) as u64 * d + (wf[v] - d) * (n * n) as u64
        })
        .collect();
    for &(u, v) in g.edges() {
        if lifted[u] == lifted[v] {
            return Err(Error::Hypothesis(format!(
                "lifted weights coincide on edge ({u}, {v}): both {}",
                lifted[u]
            )));
        }
    }
    let product = lexicographic(g, &family::empty(n)?);
    let mut labels = vec![0; product.order()];
    for copy in 0..g.order() {
        for slot in 0..n {
            labels[product_index(copy, slot, n)] = (slot + 1) + (f.label(copy) - 1) * n;
        }
    }
    let labeling = Labeling::new(labels.clone())?;
    let predicted: Vec<u64> = (0..product.order()).map(|v| lifted[v / n]).collect();
    let provenance = format!("lexi-lift(|G|={}, n={n})", g.order());
    check_closed_form(&product, &labeling, &predicted, &provenance)?;
    certify(&product, labels, provenance, Claim::AtMost(verdict.colors))
}

fn uniform_degree(g: &Graph, part: &[Vertex]) -> Option<usize> {
    let d = g.degree(*part.first()?);
    part.iter().all(|&v| g.degree(v) == d).then_some(d)
}

/// Labels `G[empty(n)]` for a regular bipartite `G` with balanced parts:
/// 2 colors. Even `n` places one alternating block per part (second part
/// shifted); odd `n` gives the parts the two complementary constant-column
/// blocks.
pub fn label_regular_bipartite_lexi(g: &Graph, n: usize) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::Hypothesis(format!("blow-up factor must exceed 1, got {n}")));
    }
    let r = g
        .regularity()
        .ok_or_else(|| Error::Hypothesis("base graph is not regular".into()))?;
    if r == 0 {
        return Err(Error::Hypothesis("base graph has no edges".into()));
    }
    let (part_a, part_b) = g
        .bipartition()
        .ok_or_else(|| Error::Hypothesis("base graph is not bipartite".into()))?;
    if part_a.len() != part_b.len() {
        return Err(Error::Hypothesis(format!(
            "parts must be balanced, got {} and {}",
            part_a.len(),
            part_b.len()
        )));
    }
    let s = part_a.len();
    let product = lexicographic(g, &family::empty(n)?);
    let mut labels = vec![0; product.order()];
    let (wa, wb): (u64, u64);
    if n % 2 == 0 {
        let block = build_matrix_a(n, s)?;
        place_columns(&mut labels, n, &part_a, &block, 0);
        place_columns(&mut labels, n, &part_b, &block, n * s);
        let colsum = (n * (n * s + 1) / 2) as u64;
        wa = (colsum + (n * n * s) as u64) * r as u64;
        wb = colsum * r as u64;
    } else {
        let low = build_matrix_b(n, s)?;
        let high = build_matrix_c(n, s)?;
        place_columns(&mut labels, n, &part_a, &low, 0);
        place_columns(&mut labels, n, &part_b, &high, 0);
        wa = ((s * n * n + 4 * s + n - 2) * r) as u64;
        wb = ((s * n * n - 4 * s + 2) * r) as u64;
    }
    let labeling = Labeling::new(labels.clone())?;
    let in_a = part_membership(g.order(), &part_a);
    let predicted: Vec<u64> = (0..product.order())
        .map(|v| if in_a[v / n] { wa } else { wb })
        .collect();
    let provenance = format!(
        "regular-bipartite-lexi(order={}, r={r}, n={n})",
        g.order()
    );
    check_closed_form(&product, &labeling, &predicted, &provenance)?;
    certify(&product, labels, provenance, Claim::Exactly(2))
}

/// Labels `G[empty(n)]` for a bipartite `G` whose parts each have a uniform
/// degree, the two degrees differing: 2 colors. Even `n` runs one block over
/// all columns; odd `n` needs either an odd base order (equal-column-sum
/// rectangle) or a complete bipartite base (explicit block formula).
pub fn label_biregular_bipartite_lexi(g: &Graph, n: usize) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::Hypothesis(format!("blow-up factor must exceed 1, got {n}")));
    }
    let (part_u, part_v) = g
        .bipartition()
        .ok_or_else(|| Error::Hypothesis("base graph is not bipartite".into()))?;
    if part_u.is_empty() || part_v.is_empty() {
        return Err(Error::Hypothesis("both parts must be nonempty".into()));
    }
    let a = uniform_degree(g, &part_u)
        .ok_or_else(|| Error::Hypothesis("degrees differ inside the first part".into()))?;
    let b = uniform_degree(g, &part_v)
        .ok_or_else(|| Error::Hypothesis("degrees differ inside the second part".into()))?;
    if a == 0 || b == 0 {
        return Err(Error::Hypothesis("base graph has isolated vertices".into()));
    }
    if a == b {
        return Err(Error::Hypothesis(
            "parts share a degree; use the regular bipartite construction".into(),
        ));
    }
    let m = g.order();
    let product = lexicographic(g, &family::empty(n)?);
    let mut labels = vec![0; product.order()];
    let (wu, wv): (u64, u64);
    let route;
    let complete_bipartite = a == part_v.len() && b == part_u.len();
    if n % 2 == 0 {
        let block = build_matrix_a(n, m)?;
        place_split_columns(&mut labels, n, &part_u, &part_v, &block);
        let colsum = (n * (n * m + 1) / 2) as u64;
        wu = a as u64 * colsum;
        wv = b as u64 * colsum;
        route = "alternating block";
    } else if complete_bipartite {
        // Low labels on the first part, high labels on the second.
        let (alpha, beta) = (part_u.len(), part_v.len());
        for (j, &u) in part_u.iter().enumerate() {
            for i in 0..n {
                labels[product_index(u, i, n)] = i * alpha + j + 1;
            }
        }
        for (j, &v) in part_v.iter().enumerate() {
            for i in 0..n {
                labels[product_index(v, i, n)] = alpha * n + i * beta + j + 1;
            }
        }
        wu = ((beta * n) * (beta * n + 1) / 2 + alpha * beta * n * n) as u64;
        wv = ((alpha * n) * (alpha * n + 1) / 2) as u64;
        route = "complete bipartite split";
    } else if m % 2 == 1 {
        let block = build_magic_rectangle(n, m)?;
        place_split_columns(&mut labels, n, &part_u, &part_v, &block);
        let colsum = (n * (n * m + 1) / 2) as u64;
        wu = a as u64 * colsum;
        wv = b as u64 * colsum;
        route = "equal-column-sum rectangle";
    } else {
        return Err(Error::NotCovered(format!(
            "biregular base of even order {m} with odd blow-up {n} is only covered for complete bipartite bases"
        )));
    }
    let labeling = Labeling::new(labels.clone())?;
    let in_u = part_membership(m, &part_u);
    let predicted: Vec<u64> = (0..product.order())
        .map(|v| if in_u[v / n] { wu } else { wv })
        .collect();
    let provenance = format!(
        "biregular-bipartite-lexi(order={m}, degrees=({a}, {b}), n={n}, route={route})"
    );
    check_closed_form(&product, &labeling, &predicted, &provenance)?;
    certify(&product, labels, provenance, Claim::Exactly(2))
}

fn part_membership(order: usize, part: &[Vertex]) -> Vec<bool> {
    let mut mask = vec![false; order];
    for &v in part {
        mask[v] = true;
    }
    mask
}

fn place_columns(
    labels: &mut [usize],
    n: usize,
    part: &[Vertex],
    block: &RectangularArray,
    offset: usize,
) {
    for (j, &v) in part.iter().enumerate() {
        for i in 0..n {
            labels[product_index(v, i, n)] = block.entry(i, j) + offset;
        }
    }
}

fn place_split_columns(
    labels: &mut [usize],
    n: usize,
    part_u: &[Vertex],
    part_v: &[Vertex],
    block: &RectangularArray,
) {
    for (j, &v) in part_u.iter().chain(part_v.iter()).enumerate() {
        for i in 0..n {
            labels[product_index(v, i, n)] = block.entry(i, j);
        }
    }
}

fn without_vertex(g: &Graph, v: Vertex) -> Graph {
    let reindex = |u: Vertex| if u > v { u - 1 } else { u };
    let edges = g
        .edges()
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .map(|&(a, b)| (reindex(a), reindex(b)));
    Graph::from_edges(g.order() - 1, edges).expect("vertex deletion keeps the graph valid")
}

fn has_nested_pair(g: &Graph, part: &[Vertex]) -> bool {
    part.iter().any(|&x| {
        part.iter().any(|&y| {
            x != y && g.degree(x) < g.degree(y) && is_subset(g.neighbors(x), g.neighbors(y))
        })
    })
}

fn is_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

/// Lower bound for the color count of `G[empty(n)]`, for any blow-up `n > 1`:
/// 3 when `G` is bipartite with a same-part strictly nested neighborhood
/// pair; 4 when `G` is such a graph joined with a single hub; otherwise the
/// chromatic number of `G` (exact at small orders, clique bound above that).
pub fn nested_neighborhood_bound(g: &Graph, n: usize) -> usize {
    debug_assert!(n > 1);
    for hub in 0..g.order() {
        if g.degree(hub) == g.order() - 1 && g.order() >= 3 {
            let rest = without_vertex(g, hub);
            if let Some((pa, pb)) = rest.bipartition() {
                if has_nested_pair(&rest, &pa) || has_nested_pair(&rest, &pb) {
                    return 4;
                }
            }
        }
    }
    if let Some((pa, pb)) = g.bipartition() {
        if has_nested_pair(g, &pa) || has_nested_pair(g, &pb) {
            return 3;
        }
    }
    chi_exact(g, 14).unwrap_or_else(|_| clique_lower_bound(g))
}

/// Labels `complete(m)[H]` for a regular `H` with a valid labeling `f`:
/// copy `j` takes `f + jn`. The weight of slot `i` in copy `j` is
/// `n(m-1)(nm+n+1)/2 + w_f(i) - j n (n-r)`; at most `m` times the ingredient
/// color count, and exactly `m` when `H` is edgeless.
pub fn label_complete_lexi(m: usize, h: &Graph, f: &Labeling) -> Result<Certificate> {
    if m < 1 {
        return Err(Error::Hypothesis("needs at least 1 copy".into()));
    }
    let n = h.order();
    if n < 2 {
        return Err(Error::Hypothesis("the substituted graph needs order above 1".into()));
    }
    let r = h
        .regularity()
        .ok_or_else(|| Error::Hypothesis("the substituted graph must be regular".into()))?;
    let verdict = is_ldal(h, f)?;
    if !verdict.valid {
        return Err(Error::Hypothesis("ingredient labeling must be valid".into()));
    }
    let product = lexicographic(&family::complete(m)?, h);
    let mut labels = vec![0; product.order()];
    for copy in 0..m {
        for slot in 0..n {
            labels[product_index(copy, slot, n)] = f.label(slot) + copy * n;
        }
    }
    let labeling = Labeling::new(labels.clone())?;
    let wf = weigh(h, f)?.weights;
    let base = (n * (m - 1) * (n * m + n + 1) / 2) as u64;
    let predicted: Vec<u64> = (0..product.order())
        .map(|v| {
            let (copy, slot) = (v / n, v % n);
            base + wf[slot] - (copy * n * (n - r)) as u64
        })
        .collect();
    let provenance = format!("complete-lexi(m={m}, |H|={n}, r={r})");
    check_closed_form(&product, &labeling, &predicted, &provenance)?;
    let claim = if h.size() == 0 {
        Claim::Exactly(m)
    } else {
        Claim::AtMost(m * verdict.colors)
    };
    certify(&product, labels, provenance, claim)
}

/// Labels `(G + K1)[empty(n)]` from a certificate for `G[empty(n)]`, using
/// the fact that the product distributes over the join: the result equals
/// `G[empty(n)] + empty(n)`.
///
/// The hub block is the smaller join side, so the empty-side corollary
/// layout applies: the inner labels stay put and the hub copies take the top
/// labels. Every inner weight then shifts by the same constant, so the inner
/// color classes survive intact and the hub class is forced apart from all
/// of them: exactly one more color. (Shifting the hub below the inner labels
/// instead adds `n * deg` to each inner weight, which can merge two adjacent
/// inner classes; the first such pair is an order-8 path with blow-up 3.)
pub fn label_lexi_join_plus_one(
    base: &Graph,
    n: usize,
    inner: &Certificate,
) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::Hypothesis(format!("blow-up factor must exceed 1, got {n}")));
    }
    let m = base.order();
    let expected_inner = lexicographic(base, &family::empty(n)?);
    if inner.graph()? != expected_inner {
        return Err(Error::Hypothesis(
            "inner certificate does not label the blow-up of the base graph".into(),
        ));
    }
    if !inner.valid {
        return Err(Error::Hypothesis("inner certificate must be valid".into()));
    }
    let composed = label_join_with_empty(&expected_inner, &inner.labeling()?, n)?;
    certify(
        &composed.graph()?,
        composed.labeling,
        format!("lexi-join-plus-one(base order {m}, n={n})"),
        Claim::Exactly(inner.colors + 1),
    )
}

/// Wheel blow-up `wheel(m)[empty(n)]` for even rims: exactly 3 colors.
pub fn label_wheel_product(m: usize, n: usize) -> Result<Certificate> {
    if m < 4 || m % 2 != 0 {
        return Err(Error::NotCovered(format!(
            "wheel blow-up is covered for even rims of length >= 4, got {m}"
        )));
    }
    let rim = family::cycle(m)?;
    let inner = label_regular_bipartite_lexi(&rim, n)?;
    let composed = label_lexi_join_plus_one(&rim, n, &inner)?;
    certify(
        &composed.graph()?,
        composed.labeling,
        format!("wheel-product(m={m}, n={n})"),
        Claim::Exactly(3),
    )
}

/// Friendship blow-up `friendship(m)[empty(n)]`: exactly 3 colors, via the
/// 1-regular bipartite product of the pair edges plus the hub copies.
pub fn label_friendship_product(m: usize, n: usize) -> Result<Certificate> {
    if m < 2 {
        return Err(Error::Hypothesis(format!(
            "friendship blow-up needs at least 2 triangles, got {m}"
        )));
    }
    let pairs = family::matching(m)?;
    let inner = label_regular_bipartite_lexi(&pairs, n)?;
    let composed = label_lexi_join_plus_one(&pairs, n, &inner)?;
    certify(
        &composed.graph()?,
        composed.labeling,
        format!("friendship-product(m={m}, n={n})"),
        Claim::Exactly(3),
    )
}

/// Fan blow-up `fan(m)[empty(n)]`: at most 5 colors (and at least 4, by the
/// nested-neighborhood bound applied to the underlying path).
pub fn label_fan_product(m: usize, n: usize) -> Result<Certificate> {
    if m < 4 {
        return Err(Error::Hypothesis(format!(
            "fan blow-up needs a path of length >= 4, got {m}"
        )));
    }
    let spine = family::path(m)?;
    let inner = super::path_cycle::label_path_lexi(m, n)?;
    let composed = label_lexi_join_plus_one(&spine, n, &inner)?;
    certify(
        &composed.graph()?,
        composed.labeling,
        format!("fan-product(m={m}, n={n})"),
        Claim::AtMost(5),
    )
}
