//! Graph operators: join and lexicographic product.

use crate::graph::{Graph, Vertex, VertexTag};

/// Index of the product vertex sitting in copy `copy` of the left factor at
/// slot `slot` of the right factor, when the right factor has order `n`.
///
/// Keeping copies contiguous makes matrix-column labelings contiguous.
pub fn product_index(copy: usize, slot: usize, n: usize) -> Vertex {
    copy * n + slot
}

/// Join `G + H`: disjoint union plus every cross edge. `G` keeps its vertex
/// indices; `H` vertices are shifted by `|G|`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.order();
    let order = n + h.order();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + n, v + n)));
    edges.extend((0..n).flat_map(|u| (n..order).map(move |v| (u, v))));
    let mut tags = g.tags().to_vec();
    tags.extend_from_slice(h.tags());
    let joined = Graph::from_edges(order, edges)
        .expect("join of valid graphs is valid")
        .with_tags(tags);
    if g.size() == 0 && h.size() == 0 {
        // Join of two edgeless graphs is complete bipartite.
        joined.with_parts((0..n).collect(), (n..order).collect())
    } else {
        joined
    }
}

/// Lexicographic product `G[H]`: one copy of `H` per vertex of `G`, with
/// copies of adjacent `G`-vertices fully joined. `(g, h) ~ (g', h')` iff
/// `g ~ g'` in `G`, or `g = g'` and `h ~ h'` in `H`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Graph {
    let n = h.order();
    let order = g.order() * n;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(g.size() * n * n + g.order() * h.size());
    for copy in 0..g.order() {
        for &(x, y) in h.edges() {
            edges.push((product_index(copy, x, n), product_index(copy, y, n)));
        }
    }
    for &(a, b) in g.edges() {
        for i in 0..n {
            for j in 0..n {
                edges.push((product_index(a, i, n), product_index(b, j, n)));
            }
        }
    }
    let tags = (0..g.order())
        .flat_map(|copy| (0..n).map(move |slot| VertexTag::Slot { copy, slot }))
        .collect();
    let product = Graph::from_edges(order, edges)
        .expect("product of valid graphs is valid")
        .with_tags(tags);
    if h.size() == 0 {
        // Blowing up by an edgeless factor preserves bipartiteness.
        if let Some((a, b)) = g.bipartition() {
            let expand = |part: &[Vertex]| {
                part.iter()
                    .flat_map(|&copy| (0..n).map(move |slot| product_index(copy, slot, n)))
                    .collect::<Vec<_>>()
            };
            let (mut pa, mut pb) = (expand(&a), expand(&b));
            pa.sort_unstable();
            pb.sort_unstable();
            return product.with_parts(pa, pb);
        }
    }
    product
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, cycle, empty, path};

    #[test]
    fn join_edge_and_degree_counts() {
        // K2 + empty(2): 1 + 4 cross edges.
        let g = join(&complete(2).unwrap(), &empty(2).unwrap());
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 5);
        // empty(1) + empty(1) = K2.
        let k2 = join(&empty(1).unwrap(), &empty(1).unwrap());
        assert_eq!((k2.order(), k2.size()), (2, 1));
        // C4 + K1 is the wheel: hub degree 4.
        let w4 = join(&cycle(4).unwrap(), &complete(1).unwrap());
        assert_eq!(w4.degree(4), 4);
        assert_eq!(w4, crate::family::wheel(4).unwrap());
    }

    #[test]
    fn lexicographic_small_products() {
        // C4[empty(2)]: 8 vertices, 4-regular.
        let p = lexicographic(&cycle(4).unwrap(), &empty(2).unwrap());
        assert_eq!(p.order(), 8);
        assert_eq!(p.regularity(), Some(4));
        // complete(1)[H] = H.
        let h = cycle(5).unwrap();
        assert_eq!(lexicographic(&complete(1).unwrap(), &h), h);
        // P3[empty(2)]: 2 path edges x 4 cross pairs.
        let p = lexicographic(&path(3).unwrap(), &empty(2).unwrap());
        assert_eq!((p.order(), p.size()), (6, 8));
    }

    #[test]
    fn product_tags_record_copy_and_slot() {
        let p = lexicographic(&path(3).unwrap(), &empty(2).unwrap());
        assert_eq!(p.tag(product_index(2, 1, 2)), VertexTag::Slot { copy: 2, slot: 1 });
    }

    #[test]
    fn product_of_bipartite_base_keeps_parts() {
        let p = lexicographic(&path(3).unwrap(), &empty(2).unwrap());
        let (a, b) = p.bipartition().unwrap();
        assert_eq!(a, vec![0, 1, 4, 5]);
        assert_eq!(b, vec![2, 3]);
    }
}
