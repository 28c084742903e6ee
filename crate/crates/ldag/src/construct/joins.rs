//! Join labelers: the general sum construction and the friendship-graph
//! compositions built on it.

use super::basic::{canonical_bistar_labels, canonical_friendship_labels};
use super::{certify, check_closed_form, Claim};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::family;
use crate::graph::Graph;
use crate::labeling::{is_ldal, weigh, Labeling};
use crate::ops::join;

/// The join feasibility inequality, evaluated exactly: with `n = |G| <= m = |H|`,
/// `d` the maximum degree of `H` and `e` the minimum degree of `G`, tests
///
/// ```text
/// d(m+n) - d(d-1)/2 - e(e+1)/2  <  2nm + (m-n)(m+n+1)/2.
/// ```
pub fn check_join_condition(n: usize, m: usize, max_deg_h: usize, min_deg_g: usize) -> Result<bool> {
    if n > m {
        return Err(Error::Hypothesis(format!(
            "join condition expects the smaller order first, got n={n} > m={m}"
        )));
    }
    let (n, m, d, e) = (n as i128, m as i128, max_deg_h as i128, min_deg_g as i128);
    let lhs = d * (m + n) - d * (d - 1) / 2 - e * (e + 1) / 2;
    let rhs = 2 * n * m + (m - n) * (m + n + 1) / 2;
    Ok(lhs < rhs)
}

/// Labels `G + H` from valid labelings of the parts: `G` keeps its labels,
/// `H` labels shift by `|G|`. Weights become
/// `w(v) = w_G(v) + m(m+1)/2 + nm` on the `G` side and
/// `w(x) = w_H(x) + n(n+1)/2 + n deg_H(x)` on the `H` side.
pub fn label_join(g: &Graph, f: &Labeling, h: &Graph, fh: &Labeling) -> Result<Certificate> {
    let (n, m) = (g.order(), h.order());
    if n > m {
        return Err(Error::Hypothesis(format!(
            "join labeler expects |G| <= |H|, got {n} > {m}"
        )));
    }
    if g.isolated_vertex().is_some() && h.isolated_vertex().is_some() {
        return Err(Error::Hypothesis(
            "join labeler rejects isolated vertices on both sides".into(),
        ));
    }
    let verdict_g = is_ldal(g, f)?;
    let verdict_h = is_ldal(h, fh)?;
    if !verdict_g.valid || !verdict_h.valid {
        return Err(Error::Hypothesis("ingredient labelings must be valid".into()));
    }
    if !check_join_condition(n, m, h.max_degree(), g.min_degree())? {
        return Err(Error::Hypothesis(format!(
            "join condition fails for orders ({n}, {m}) with max H-degree {} and min G-degree {}",
            h.max_degree(),
            g.min_degree()
        )));
    }
    let joined = join(g, h);
    let mut labels = f.labels().to_vec();
    labels.extend(fh.labels().iter().map(|&l| l + n));
    let labeling = Labeling::new(labels.clone())?;
    let wg = weigh(g, f)?.weights;
    let wh = weigh(h, fh)?.weights;
    let g_shift = (m * (m + 1) / 2 + n * m) as u64;
    let predicted: Vec<u64> = (0..n + m)
        .map(|v| {
            if v < n {
                wg[v] + g_shift
            } else {
                wh[v - n] + (n * (n + 1) / 2) as u64 + (n * h.degree(v - n)) as u64
            }
        })
        .collect();
    let provenance = format!("join(|G|={n}, |H|={m})");
    check_closed_form(&joined, &labeling, &predicted, &provenance)?;
    certify(
        &joined,
        labels,
        provenance,
        Claim::AtMost(verdict_g.colors + verdict_h.colors),
    )
}

/// Labels `G + empty(m)` with `G`'s labels first, for either size order.
/// When `m < |G|` the reversed-size feasibility inequality must hold.
/// Exactly one more color than the ingredient labeling.
pub fn label_join_with_empty(g: &Graph, f: &Labeling, m: usize) -> Result<Certificate> {
    let n = g.order();
    if m == 0 {
        return Err(Error::Hypothesis("the empty side needs at least 1 vertex".into()));
    }
    if g.isolated_vertex().is_some() {
        return Err(Error::Hypothesis(
            "join with an empty graph rejects isolated vertices in G".into(),
        ));
    }
    let verdict = is_ldal(g, f)?;
    if !verdict.valid {
        return Err(Error::Hypothesis("ingredient labeling must be valid".into()));
    }
    let feasible = if n <= m {
        // The empty side has maximum degree 0, so the condition always holds.
        check_join_condition(n, m, 0, g.min_degree())?
    } else {
        check_join_condition(m, n, g.max_degree(), 0)?
    };
    if !feasible {
        return Err(Error::Hypothesis(format!(
            "join condition fails for G of order {n} against {m} empty vertices"
        )));
    }
    let joined = join(g, &family::empty(m)?);
    let mut labels = f.labels().to_vec();
    labels.extend(n + 1..=n + m);
    let labeling = Labeling::new(labels.clone())?;
    let wg = weigh(g, f)?.weights;
    let empty_sum = (n * m + m * (m + 1) / 2) as u64;
    let predicted: Vec<u64> = (0..n + m)
        .map(|v| {
            if v < n {
                wg[v] + empty_sum
            } else {
                (n * (n + 1) / 2) as u64
            }
        })
        .collect();
    let provenance = format!("join-with-empty(|G|={n}, m={m})");
    check_closed_form(&joined, &labeling, &predicted, &provenance)?;
    certify(&joined, labels, provenance, Claim::Exactly(verdict.colors + 1))
}

/// Friendship graph joined with an empty graph: exactly `2k + 2` colors.
pub fn label_friendship_join_empty(k: usize, m: usize) -> Result<Certificate> {
    if k < 2 || m < 1 {
        return Err(Error::Hypothesis(format!(
            "needs k >= 2 triangles and m >= 1 empty vertices, got ({k}, {m})"
        )));
    }
    let g = family::friendship(k)?;
    let f = Labeling::new(canonical_friendship_labels(k))?;
    let inner = label_join_with_empty(&g, &f, m)?;
    certify(
        &inner.graph()?,
        inner.labeling,
        format!("friendship-join-empty(k={k}, m={m})"),
        Claim::Exactly(2 * k + 2),
    )
}

/// Friendship graph joined with the balanced bistar: exactly `2k + 5` colors.
pub fn label_friendship_join_bistar(k: usize) -> Result<Certificate> {
    if k < 2 {
        return Err(Error::Hypothesis(format!(
            "needs k >= 2 triangles, got {k}"
        )));
    }
    let g = family::friendship(k)?;
    let h = family::bistar(k, k)?;
    // The friendship side is smaller: 2k+1 against 2k+2. The bistar's
    // maximum degree k+1 stays below the friendship order, which is the
    // sufficient hypothesis for the join condition.
    if h.max_degree() > g.order() {
        return Err(Error::Hypothesis(
            "bistar maximum degree exceeds the friendship order".into(),
        ));
    }
    let f = Labeling::new(canonical_friendship_labels(k))?;
    let fh = Labeling::new(canonical_bistar_labels(k, k).0)?;
    let inner = label_join(&g, &f, &h, &fh)?;
    certify(
        &inner.graph()?,
        inner.labeling,
        format!("friendship-join-bistar(k={k})"),
        Claim::Exactly(2 * k + 5),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, empty};

    #[test]
    fn join_condition_examples() {
        // (n=2, m=2, d=0, e=1): -1 < 8.
        assert!(check_join_condition(2, 2, 0, 1).unwrap());
        assert!(check_join_condition(3, 2, 0, 0).is_err());
    }

    #[test]
    fn join_condition_holds_whenever_max_h_degree_is_small() {
        // Sweep: max H-degree at most |G| implies the inequality.
        for n in 1..=50usize {
            for m in n..=50 {
                for d in 0..=n.min(m.saturating_sub(1)) {
                    for e in [0, n.saturating_sub(1)] {
                        assert!(
                            check_join_condition(n, m, d, e).unwrap(),
                            "failed at n={n} m={m} d={d} e={e}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn k2_join_empty2_weights() {
        let g = complete(2).unwrap();
        let h = empty(2).unwrap();
        let cert = label_join(
            &g,
            &Labeling::identity(2),
            &h,
            &Labeling::identity(2),
        )
        .unwrap();
        assert_eq!(cert.labeling, vec![1, 2, 3, 4]);
        assert_eq!(cert.weights, vec![9, 8, 3, 3]);
        assert_eq!(cert.colors, 3);
    }

    #[test]
    fn join_rejects_two_edgeless_sides() {
        let e2 = empty(2).unwrap();
        let err = label_join(&e2, &Labeling::identity(2), &e2, &Labeling::identity(2));
        assert!(matches!(err, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn friendship_join_empty_examples() {
        // k=2, m=2: friendship labels 1..5, empty labels 6..7.
        let cert = label_friendship_join_empty(2, 2).unwrap();
        assert_eq!(cert.colors, 6);
        let mut weights = cert.weights.clone();
        weights.sort_unstable();
        weights.dedup();
        assert_eq!(weights, vec![15, 16, 17, 18, 19, 27]);

        assert_eq!(label_friendship_join_empty(2, 1).unwrap().colors, 6);
        assert_eq!(label_friendship_join_empty(3, 4).unwrap().colors, 8);
        assert!(label_friendship_join_empty(1, 1).is_err());
    }

    #[test]
    fn friendship_join_bistar_examples() {
        let cert = label_friendship_join_bistar(2).unwrap();
        assert_eq!(cert.colors, 9);
        assert_eq!(cert.graph().unwrap().order(), 11);
        assert_eq!(label_friendship_join_bistar(3).unwrap().colors, 11);
    }

    #[test]
    fn friendship_join_bistar_is_optimal_at_order_11() {
        // Exact search over the 11-vertex join confirms the constructed
        // certificate cannot be beaten.
        use crate::oracle::{chi_ld_exact, OracleValue, SearchBudget};
        let cert = label_friendship_join_bistar(2).unwrap();
        let g = cert.graph().unwrap();
        let result = chi_ld_exact(&g, &SearchBudget::default().with_max_order(11)).unwrap();
        assert_eq!(result.value, OracleValue::Exact(9));
        assert_eq!(cert.colors, 9);
    }
}
