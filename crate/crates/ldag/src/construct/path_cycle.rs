//! Block labelings of path and cycle blow-ups, and the tri-partition labeler
//! for 2r-regular 3-chromatic base graphs.
//!
//! Two of the case formulas use non-integral column indices under a
//! literal reading; the consistent readings (noted in each certificate's
//! provenance) are `(j+2)/3` for the first-class columns when the cycle
//! length is 1 mod 6, and `(j+2)/4` for the low-block columns of the path
//! case with odd blow-up and length 1 mod 4. With an odd blow-up the two
//! complementary blocks jointly cover one contiguous range, so both receive
//! the same shift. Self-verification is the gate for every case.

use super::{certify, check_closed_form, Claim};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::family;
use crate::graph::{Graph, Vertex};
use crate::labeling::Labeling;
use crate::ops::{lexicographic, product_index};
use crate::oracle::{chi_ld_exact, OracleValue, SearchBudget};
use crate::rect::{
    build_magic_rectangle, build_matrix_a, build_matrix_b, build_matrix_c, RectangularArray,
};

fn place(
    labels: &mut [usize],
    n: usize,
    copy: usize,
    block: &RectangularArray,
    col: usize,
    offset: usize,
) {
    for i in 0..n {
        labels[product_index(copy, i, n)] = block.entry(i, col) + offset;
    }
}

/// Color count the path construction attains for each parameter pair.
pub fn expected_path_colors(m: usize, n: usize) -> usize {
    if m == 3 {
        // No interior vertex of the scarce parity class: one class is empty.
        2
    } else if n % 2 == 0 {
        if m % 2 == 1 {
            3
        } else {
            4
        }
    } else {
        match m % 4 {
            3 => 3,
            _ => 4,
        }
    }
}

/// Labels `path(m)[empty(n)]` with 3 or 4 colors depending on the parities.
pub fn label_path_lexi(m: usize, n: usize) -> Result<Certificate> {
    if m < 3 {
        return Err(Error::Hypothesis(format!("path blow-up needs m >= 3, got {m}")));
    }
    if n < 2 {
        return Err(Error::Hypothesis(format!("blow-up factor must exceed 1, got {n}")));
    }
    let product = lexicographic(&family::path(m)?, &family::empty(n)?);
    let mut labels = vec![0; m * n];
    let case;
    if n % 2 == 0 {
        if m % 2 == 1 {
            let k = (m - 1) / 2;
            let odd_block = build_matrix_a(n, k + 1)?;
            let even_block = build_matrix_a(n, k)?;
            for j in 1..=m {
                if j % 2 == 1 {
                    place(&mut labels, n, j - 1, &odd_block, (j + 1) / 2 - 1, 0);
                } else {
                    place(&mut labels, n, j - 1, &even_block, j / 2 - 1, n * (k + 1));
                }
            }
            case = "even x odd";
        } else {
            let k = m / 2;
            let block = build_matrix_a(n, k)?;
            for j in 1..=m {
                if j % 2 == 1 {
                    place(&mut labels, n, j - 1, &block, (j + 1) / 2 - 1, 0);
                } else {
                    place(&mut labels, n, j - 1, &block, j / 2 - 1, n * k);
                }
            }
            case = "even x even";
        }
    } else if m % 4 == 1 {
        let k = (m - 1) / 4;
        let rect = build_magic_rectangle(n, 2 * k + 1)?;
        let low = build_matrix_b(n, k)?;
        let high = build_matrix_c(n, k)?;
        for j in 1..=m {
            if j % 2 == 1 {
                place(&mut labels, n, j - 1, &rect, (j + 1) / 2 - 1, 2 * n * k);
            } else if j % 4 == 2 {
                place(&mut labels, n, j - 1, &low, (j + 2) / 4 - 1, 0);
            } else {
                place(&mut labels, n, j - 1, &high, j / 4 - 1, 0);
            }
        }
        case = "odd x 1mod4, low-column (j+2)/4";
    } else if m % 4 == 3 {
        let k = (m - 3) / 4;
        let rect = build_magic_rectangle(n, 2 * k + 1)?;
        let low = build_matrix_b(n, k + 1)?;
        let high = build_matrix_c(n, k + 1)?;
        for j in 1..=m {
            if j % 2 == 0 {
                place(&mut labels, n, j - 1, &rect, j / 2 - 1, 2 * n * (k + 1));
            } else if j % 4 == 1 {
                place(&mut labels, n, j - 1, &low, (j + 3) / 4 - 1, 0);
            } else {
                place(&mut labels, n, j - 1, &high, (j + 1) / 4 - 1, 0);
            }
        }
        case = "odd x 3mod4";
    } else {
        let k = m / 2;
        let low = build_matrix_b(n, k)?;
        let high = build_matrix_c(n, k)?;
        for j in 1..=m {
            if j % 2 == 1 {
                place(&mut labels, n, j - 1, &low, (j + 1) / 2 - 1, 0);
            } else {
                place(&mut labels, n, j - 1, &high, j / 2 - 1, 0);
            }
        }
        case = "odd x even";
    }
    certify(
        &product,
        labels,
        format!("path-lexi(m={m}, n={n}, case={case})"),
        Claim::Exactly(expected_path_colors(m, n)),
    )
}

/// Color count the cycle construction attains, or `None` where no block
/// construction applies (odd length not divisible by 3 with blow-up 2).
pub fn expected_cycle_colors(m: usize, n: usize) -> Option<usize> {
    if m % 3 == 0 {
        if n % 2 == 0 || (m / 3) % 2 == 1 {
            Some(3)
        } else {
            Some(2)
        }
    } else if m % 2 == 0 {
        Some(2)
    } else if n >= 3 {
        Some(3)
    } else {
        None
    }
}

/// The proper 3-coloring of a cycle whose length is divisible by 3, by
/// residue of the vertex index.
pub(crate) fn cycle_tri_classes(m: usize) -> [Vec<Vertex>; 3] {
    let class = |c: usize| (0..m).filter(|v| v % 3 == c).collect();
    [class(0), class(1), class(2)]
}

/// Labels `cycle(m)[empty(n)]`, dispatching on the length:
/// even lengths not divisible by 3 use the bipartite construction
/// (2 colors); lengths divisible by 3 use the tri-partition (3 colors, or
/// the bipartite 2 when an odd blow-up rules the partition out); odd lengths
/// with `n >= 3` use the block constructions (3 colors). Odd lengths with
/// `n = 2` fall back to exact search when the product fits the default cap.
pub fn label_cycle_lexi(m: usize, n: usize) -> Result<Certificate> {
    if m < 3 {
        return Err(Error::Hypothesis(format!("cycle blow-up needs m >= 3, got {m}")));
    }
    if n < 2 {
        return Err(Error::Hypothesis(format!("blow-up factor must exceed 1, got {n}")));
    }
    let base = family::cycle(m)?;
    if m % 3 == 0 {
        if n % 2 == 0 || (m / 3) % 2 == 1 {
            let classes = cycle_tri_classes(m);
            let inner = label_2r_regular_3chromatic_lexi(&base, &classes, n)?;
            return certify(
                &inner.graph()?,
                inner.labeling,
                format!("cycle-lexi(m={m}, n={n}, route=tri-partition)"),
                Claim::Exactly(3),
            );
        }
        let inner = super::products::label_regular_bipartite_lexi(&base, n)?;
        return certify(
            &inner.graph()?,
            inner.labeling,
            format!("cycle-lexi(m={m}, n={n}, route=bipartite)"),
            Claim::Exactly(2),
        );
    }
    if m % 2 == 0 {
        let inner = super::products::label_regular_bipartite_lexi(&base, n)?;
        return certify(
            &inner.graph()?,
            inner.labeling,
            format!("cycle-lexi(m={m}, n={n}, route=bipartite)"),
            Claim::Exactly(2),
        );
    }
    if n == 2 {
        // Outside the proven constructions; settle tiny orders exactly.
        let product = lexicographic(&base, &family::empty(n)?);
        let budget = SearchBudget::default();
        if product.order() > budget.max_order {
            return Err(Error::NotCovered(format!(
                "odd cycle length {m} with blow-up 2 has no construction and order {} exceeds the search cap",
                product.order()
            )));
        }
        let result = chi_ld_exact(&product, &budget)?;
        return match (result.value, result.witness) {
            (OracleValue::Exact(k), Some(w)) => certify(
                &product,
                w.labels().to_vec(),
                format!("cycle-lexi(m={m}, n={n}, route=exact-search)"),
                Claim::Exactly(k),
            ),
            _ => Err(Error::NotCovered(format!(
                "search budget expired on the odd cycle blow-up ({m}, {n})"
            ))),
        };
    }

    // Odd m >= 5 not divisible by 3, n >= 3: three block layouts per parity.
    let (width, narrow) = match m % 12 {
        1 | 7 => ((m + 2) / 3, (m - 1) / 3),
        5 => ((m + 1) / 2, (m - 1) / 4),
        11 => ((m - 1) / 2, (m + 1) / 4),
        _ => unreachable!("m odd, not divisible by 3"),
    };
    let (main, low, high, off_high, parity_note): (
        RectangularArray,
        RectangularArray,
        RectangularArray,
        usize,
        &str,
    ) = if n % 2 == 0 {
        (
            build_matrix_a(n, width)?,
            build_matrix_a(n, narrow)?,
            build_matrix_a(n, narrow)?,
            n * width + n * narrow,
            "stacked blocks",
        )
    } else {
        (
            build_magic_rectangle(n, width)?,
            build_matrix_b(n, narrow)?,
            build_matrix_c(n, narrow)?,
            // The complementary blocks jointly cover one range: same shift.
            n * width,
            "unified low/high offset",
        )
    };
    let off_low = n * width;
    let mut labels = vec![0; m * n];
    let case = match m % 6 {
        1 => {
            for j in 1..=m {
                match j % 3 {
                    1 => place(&mut labels, n, j - 1, &main, (j + 2) / 3 - 1, 0),
                    2 => place(&mut labels, n, j - 1, &low, (j + 1) / 3 - 1, off_low),
                    _ => place(&mut labels, n, j - 1, &high, j / 3 - 1, off_high),
                }
            }
            "1mod6, main-column (j+2)/3"
        }
        _ => {
            // m = 5 mod 6, split by residue mod 4.
            let wrap_to_last = m % 4 == 1;
            for j in 1..=m {
                if wrap_to_last && j == m {
                    place(&mut labels, n, j - 1, &main, width - 1, 0);
                    continue;
                }
                match j % 4 {
                    1 => place(&mut labels, n, j - 1, &low, (j + 3) / 4 - 1, off_low),
                    2 => place(&mut labels, n, j - 1, &high, (j + 2) / 4 - 1, off_high),
                    3 => place(&mut labels, n, j - 1, &main, (j + 1) / 4 - 1, 0),
                    _ => place(&mut labels, n, j - 1, &main, narrow + j / 4 - 1, 0),
                }
            }
            if wrap_to_last {
                "5mod6 1mod4"
            } else {
                "5mod6 3mod4"
            }
        }
    };
    let product = lexicographic(&base, &family::empty(n)?);
    certify(
        &product,
        labels,
        format!("cycle-lexi(m={m}, n={n}, case={case}, {parity_note})"),
        Claim::Exactly(3),
    )
}

fn validate_split_classes(
    g: &Graph,
    classes: &[Vec<Vertex>; 3],
    n: usize,
) -> Result<usize> {
    let deg = g
        .regularity()
        .ok_or_else(|| Error::Hypothesis("base graph is not regular".into()))?;
    if deg == 0 || deg % 2 != 0 {
        return Err(Error::Hypothesis(format!(
            "base graph must be 2r-regular, got degree {deg}"
        )));
    }
    let r = deg / 2;
    let mut class_of = vec![usize::MAX; g.order()];
    for (c, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::Hypothesis(format!("color class {c} is empty")));
        }
        for &v in class {
            if v >= g.order() || class_of[v] != usize::MAX {
                return Err(Error::Hypothesis(format!(
                    "classes do not partition the vertices (vertex {v})"
                )));
            }
            class_of[v] = c;
        }
    }
    if class_of.contains(&usize::MAX) {
        return Err(Error::Hypothesis("classes do not cover every vertex".into()));
    }
    for v in 0..g.order() {
        let mut counts = [0usize; 3];
        for &u in g.neighbors(v) {
            counts[class_of[u]] += 1;
        }
        if counts[class_of[v]] != 0 {
            return Err(Error::Hypothesis(format!(
                "class {} is not independent at vertex {v}",
                class_of[v]
            )));
        }
        if counts.iter().any(|&c| c != 0 && c != r) {
            return Err(Error::Hypothesis(format!(
                "vertex {v} does not split its neighborhood {r}/{r} across two classes"
            )));
        }
    }
    if n % 2 == 1 && classes.iter().any(|c| c.len() % 2 == 0) {
        return Err(Error::Hypothesis(
            "odd blow-up requires every color class to have odd size".into(),
        ));
    }
    Ok(r)
}

/// Labels `G[empty(n)]` for a 2r-regular base with a proper 3-coloring in
/// which every neighborhood splits r/r across the two other classes: exactly
/// 3 colors. Classes take consecutive column blocks; an odd blow-up needs
/// odd class sizes (equal-column-sum rectangles replace the alternating
/// blocks).
pub fn label_2r_regular_3chromatic_lexi(
    g: &Graph,
    classes: &[Vec<Vertex>; 3],
    n: usize,
) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::Hypothesis(format!("blow-up factor must exceed 1, got {n}")));
    }
    let r = validate_split_classes(g, classes, n)?;
    let sizes = [classes[0].len(), classes[1].len(), classes[2].len()];
    let offsets = [0, n * sizes[0], n * (sizes[0] + sizes[1])];
    let product = lexicographic(g, &family::empty(n)?);
    let mut labels = vec![0; product.order()];
    let mut colsums = [0u64; 3];
    for c in 0..3 {
        let block = if n % 2 == 0 {
            build_matrix_a(n, sizes[c])?
        } else {
            build_magic_rectangle(n, sizes[c])?
        };
        let mut sorted = classes[c].clone();
        sorted.sort_unstable();
        place_class(&mut labels, n, &sorted, &block, offsets[c]);
        colsums[c] = (n * (n * sizes[c] + 1) / 2) as u64;
    }
    let mut class_of = vec![0usize; g.order()];
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            class_of[v] = c;
        }
    }
    let class_weight = |own: usize| -> u64 {
        (0..3)
            .filter(|&c| c != own)
            .map(|c| r as u64 * (colsums[c] + (n * offsets[c]) as u64))
            .sum()
    };
    let predicted: Vec<u64> = (0..product.order())
        .map(|v| class_weight(class_of[v / n]))
        .collect();
    let labeling = Labeling::new(labels.clone())?;
    let provenance = format!(
        "three-chromatic-lexi(order={}, r={r}, sizes={sizes:?}, n={n})",
        g.order()
    );
    check_closed_form(&product, &labeling, &predicted, &provenance)?;
    certify(&product, labels, provenance, Claim::Exactly(3))
}

fn place_class(
    labels: &mut [usize],
    n: usize,
    class: &[Vertex],
    block: &RectangularArray,
    offset: usize,
) {
    for (col, &v) in class.iter().enumerate() {
        place(labels, n, v, block, col, offset);
    }
}

/// Searches for a proper 3-coloring satisfying the split hypotheses of the
/// tri-partition labeler. Intended for small bases (order at most 15).
pub fn derive_split_3coloring(g: &Graph, n: usize) -> Option<[Vec<Vertex>; 3]> {
    if g.order() > 15 {
        return None;
    }
    let mut colors = vec![usize::MAX; g.order()];
    fn backtrack(
        g: &Graph,
        n: usize,
        colors: &mut Vec<usize>,
        v: usize,
    ) -> Option<[Vec<Vertex>; 3]> {
        if v == g.order() {
            let mut classes: [Vec<Vertex>; 3] = Default::default();
            for (u, &c) in colors.iter().enumerate() {
                classes[c].push(u);
            }
            return (validate_split_classes(g, &classes, n).is_ok()).then_some(classes);
        }
        for c in 0..3 {
            if g.neighbors(v).iter().all(|&u| colors[u] != c) {
                colors[v] = c;
                if let Some(found) = backtrack(g, n, colors, v + 1) {
                    return Some(found);
                }
                colors[v] = usize::MAX;
            }
        }
        None
    }
    backtrack(g, n, &mut colors, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{cycle, multipartite};

    #[test]
    fn path_blowup_small_cases() {
        // m=3, n=2: labels (1,4 | 5,6 | 2,3), weights 11/10.
        let cert = label_path_lexi(3, 2).unwrap();
        assert_eq!(cert.labeling, vec![1, 4, 5, 6, 2, 3]);
        assert_eq!(cert.weights, vec![11, 11, 10, 10, 11, 11]);
        assert_eq!(cert.colors, 2);

        assert_eq!(label_path_lexi(5, 2).unwrap().colors, 3);
        let cert = label_path_lexi(4, 3).unwrap();
        assert_eq!(cert.colors, 4);
        let mut weights = cert.weights.clone();
        weights.sort_unstable();
        weights.dedup();
        // k=2, n=3: {kn^2-4k+2, kn^2+4k+n-2, and their doubles}.
        assert_eq!(weights, vec![12, 24, 27, 54]);

        assert!(label_path_lexi(2, 2).is_err());
        assert!(label_path_lexi(4, 1).is_err());
    }

    #[test]
    fn path_blowup_all_parity_cases_verify() {
        for m in 3..=9 {
            for n in 2..=5 {
                let cert = label_path_lexi(m, n).unwrap();
                assert_eq!(cert.colors, expected_path_colors(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn cycle_blowup_routes() {
        // Tri-partition route for lengths divisible by 3.
        assert_eq!(label_cycle_lexi(6, 2).unwrap().colors, 3);
        assert_eq!(label_cycle_lexi(3, 3).unwrap().colors, 3);
        // Odd blow-up with even class sizes: bipartite route, 2 colors.
        assert_eq!(label_cycle_lexi(6, 3).unwrap().colors, 2);
        // Even length not divisible by 3.
        assert_eq!(label_cycle_lexi(4, 2).unwrap().colors, 2);
        // The six block cases.
        assert_eq!(label_cycle_lexi(7, 3).unwrap().colors, 3);
        assert_eq!(label_cycle_lexi(7, 4).unwrap().colors, 3);
        assert_eq!(label_cycle_lexi(5, 3).unwrap().colors, 3);
        assert_eq!(label_cycle_lexi(5, 4).unwrap().colors, 3);
        assert_eq!(label_cycle_lexi(11, 3).unwrap().colors, 3);
        assert_eq!(label_cycle_lexi(11, 4).unwrap().colors, 3);
        // Odd length, blow-up 2, too big for the search cap.
        assert!(matches!(
            label_cycle_lexi(7, 2),
            Err(Error::NotCovered(_))
        ));
    }

    #[test]
    fn tri_partition_labeler_on_octahedron() {
        let g = multipartite(&[2, 2, 2]).unwrap();
        let classes = [vec![0, 1], vec![2, 3], vec![4, 5]];
        let cert = label_2r_regular_3chromatic_lexi(&g, &classes, 2).unwrap();
        assert_eq!(cert.colors, 3);
        // Odd blow-up rejects the even class sizes.
        assert!(label_2r_regular_3chromatic_lexi(&g, &classes, 3).is_err());
    }

    #[test]
    fn tri_partition_labeler_on_odd_cycle() {
        let g = cycle(9).unwrap();
        let classes = cycle_tri_classes(9);
        let cert = label_2r_regular_3chromatic_lexi(&g, &classes, 3).unwrap();
        assert_eq!(cert.colors, 3);
    }

    #[test]
    fn split_coloring_derivation() {
        let g = cycle(6).unwrap();
        let classes = derive_split_3coloring(&g, 2).unwrap();
        assert!(label_2r_regular_3chromatic_lexi(&g, &classes, 2).is_ok());
        // A path is not regular: no split coloring exists.
        assert!(derive_split_3coloring(&crate::family::path(4).unwrap(), 2).is_none());
    }

    #[test]
    fn bad_partitions_are_rejected() {
        let g = cycle(6).unwrap();
        let classes = [vec![0, 1], vec![2, 3], vec![4, 5]];
        assert!(label_2r_regular_3chromatic_lexi(&g, &classes, 2).is_err());
    }
}
