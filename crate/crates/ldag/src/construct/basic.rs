//! Labelers that hit every color count from 2 to the order, plus fixed
//! labelings for friendship graphs and bistars.

use super::{certify, check_closed_form, Claim};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::family;
use crate::labeling::Labeling;
use crate::ops::join;
use crate::oracle::{chi_ld_exact, OracleValue, SearchBudget};

/// Labels `K_{p-1} + empty(n-p+1)`: the clique takes `1..p`, the independent
/// set takes `p..=n`. Every independent vertex weighs `p(p-1)/2`; clique
/// vertex `v` weighs `p(p-1)/2 - f(v) + (n-p+1)(n+p)/2`. Exactly `p` colors.
pub fn label_clique_plus_empty(n: usize, p: usize) -> Result<Certificate> {
    if p < 2 || p > n {
        return Err(Error::Hypothesis(format!(
            "target color count must satisfy 2 <= p <= n, got p={p}, n={n}"
        )));
    }
    let g = join(&family::complete(p - 1)?, &family::empty(n - p + 1)?);
    let f = Labeling::identity(n);
    let clique_base = (p * (p - 1) / 2) as u64;
    let empty_sum = ((n - p + 1) * (n + p) / 2) as u64;
    let predicted: Vec<u64> = (0..n)
        .map(|v| {
            if v < p - 1 {
                clique_base - f.label(v) as u64 + empty_sum
            } else {
                clique_base
            }
        })
        .collect();
    let provenance = format!("clique-plus-empty(n={n}, p={p})");
    check_closed_form(&g, &f, &predicted, &provenance)?;
    certify(&g, f.labels().to_vec(), provenance, Claim::Exactly(p))
}

/// Builds the complete multipartite graph with parts `sizes` plus a final
/// part absorbing the remaining vertices, then finds a minimum labeling by
/// exact search; its color count must equal the part count.
pub fn label_multipartite_solution2(
    n: usize,
    sizes: &[usize],
    budget: &SearchBudget,
) -> Result<Certificate> {
    let taken: usize = sizes.iter().sum();
    if sizes.is_empty() || sizes.contains(&0) || taken >= n {
        return Err(Error::Hypothesis(format!(
            "part sizes must be positive and sum below n={n}, got {sizes:?}"
        )));
    }
    let p = sizes.len() + 1;
    let mut full = sizes.to_vec();
    full.push(n - taken);
    let g = family::multipartite(&full)?;
    let result = chi_ld_exact(&g, budget)?;
    let provenance = format!("multipartite(n={n}, parts={full:?}) via exact search");
    match (result.value, result.witness) {
        (OracleValue::Exact(k), Some(w)) => {
            if k != p {
                return Err(Error::SelfCheck(format!(
                    "{provenance}: search found {k} colors, the part count is {p}"
                )));
            }
            certify(&g, w.labels().to_vec(), provenance, Claim::Exactly(p))
        }
        _ => Err(Error::OrderCap {
            order: n,
            cap: budget.max_order,
        }),
    }
}

pub(crate) fn canonical_friendship_labels(k: usize) -> Vec<usize> {
    // Hub takes 1, the pair vertices take 2.. in index order.
    let mut labels: Vec<usize> = (0..2 * k).map(|v| v + 2).collect();
    labels.push(1);
    labels
}

/// Fixed labeling of the friendship graph with `k` triangles: hub gets 1,
/// pair vertices get `2..`. Any bijection works here; this one is the
/// deterministic choice, and the verifier confirms `2k+1` colors.
pub fn label_friendship(k: usize) -> Result<Certificate> {
    if k < 2 {
        return Err(Error::Hypothesis(format!(
            "friendship labeling needs at least 2 triangles, got {k}"
        )));
    }
    let g = family::friendship(k)?;
    certify(
        &g,
        canonical_friendship_labels(k),
        format!("friendship(k={k})"),
        Claim::Exactly(2 * k + 1),
    )
}

pub(crate) fn canonical_bistar_labels(m: usize, n: usize) -> (Vec<usize>, bool) {
    let mut labels = vec![0; m + n + 2];
    for (i, slot) in labels.iter_mut().enumerate().skip(2) {
        *slot = i + 1;
    }
    let leaf_sum_a: usize = (3..m + 3).sum();
    let leaf_sum_b: usize = (m + 3..m + n + 3).sum();
    // Centers take {1, 2}; swap them if the straight choice ties the two
    // center weights (both orders cannot tie at once).
    let swapped = 2 + leaf_sum_a == 1 + leaf_sum_b;
    if swapped {
        labels[0] = 2;
        labels[1] = 1;
    } else {
        labels[0] = 1;
        labels[1] = 2;
    }
    (labels, swapped)
}

/// Fixed labeling of the bistar with `m` and `n` leaves: centers take
/// `{1, 2}`, leaves take the rest in index order. Exactly 4 colors.
pub fn label_bistar(m: usize, n: usize) -> Result<Certificate> {
    if m < 2 || n < 2 {
        return Err(Error::Hypothesis(format!(
            "bistar labeling needs at least 2 leaves per center, got ({m}, {n})"
        )));
    }
    let g = family::bistar(m, n)?;
    let (labels, swapped) = canonical_bistar_labels(m, n);
    let note = if swapped { ", centers swapped" } else { "" };
    certify(
        &g,
        labels,
        format!("bistar(m={m}, n={n}{note})"),
        Claim::Exactly(4),
    )
}
