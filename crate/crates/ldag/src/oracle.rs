//! Exact computation of the minimum color count over all valid labelings of a
//! small graph, plus an exact chromatic number for the lower-bound side.
//!
//! The labeling search is a depth-first branch and bound over bijections.
//! Vertices are visited in an order that finalizes weights early; a branch
//! dies as soon as two adjacent finalized vertices tie, or the finalized
//! weights already use as many colors as the best complete labeling found.
//! Pairs forced distinct by the neighborhood symmetric-difference rule
//! tighten the lower bound, which both brackets budget-exhausted runs and
//! stops the search once the bound is attained. Either the search completes
//! (exact value, or certified nonexistence) or it reports a bracket; it never
//! guesses.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, SymmetryHint, Vertex};
use crate::labeling::{clique_lower_bound, is_ldal, symdiff_rule, tree_leaf_lower_bound, Labeling};

/// Resource limits for the exact search.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Refuse graphs larger than this outright.
    pub max_order: usize,
    /// Maximum label assignments explored before bracketing.
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
    pub threads: usize,
    /// Tighten the lower bound with symmetric-difference forced pairs.
    pub use_symdiff_pruning: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_order: 10,
            max_nodes: 500_000_000,
            time_limit: None,
            threads: 1,
            use_symdiff_pruning: true,
        }
    }
}

impl SearchBudget {
    pub fn with_max_order(mut self, cap: usize) -> Self {
        self.max_order = cap;
        self
    }

    pub fn with_max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = nodes;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_symdiff_pruning(mut self, on: bool) -> Self {
        self.use_symdiff_pruning = on;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleValue {
    Exact(usize),
    /// Budget expired: the answer lies in `lower..=upper` (no upper when no
    /// valid labeling was found before the budget ran out).
    Bracket { lower: usize, upper: Option<usize> },
    /// The search completed without finding any valid labeling.
    NoValidLabeling,
}

#[derive(Debug, Clone)]
pub struct SearchStats {
    pub nodes: u64,
    pub completed: bool,
    pub elapsed: Duration,
    pub lower_bound: usize,
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub value: OracleValue,
    /// A labeling attaining the exact value (or the bracket upper bound).
    pub witness: Option<Labeling>,
    pub stats: SearchStats,
}

/// Exact chromatic number by iterative-deepening backtracking.
pub fn chi_exact(g: &Graph, cap: usize) -> Result<usize> {
    if g.order() > cap {
        return Err(Error::OrderCap {
            order: g.order(),
            cap,
        });
    }
    if g.order() == 0 {
        return Ok(0);
    }
    if g.size() == 0 {
        return Ok(1);
    }
    let mut verts: Vec<Vertex> = (0..g.order()).collect();
    verts.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![usize::MAX; g.order()];
    for k in clique_lower_bound(g)..=g.order() {
        if k_colorable(g, &verts, k, 0, 0, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("every graph is order-colorable")
}

fn k_colorable(
    g: &Graph,
    order: &[Vertex],
    k: usize,
    depth: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&u| colors[u] != c) {
            colors[v] = c;
            if k_colorable(g, order, k, depth + 1, used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// The graph whose edges are exactly the pairs every valid labeling must
/// color differently: the edges of `g` plus the symmetric-difference forced
/// pairs. Its chromatic number lower-bounds the minimum color count.
pub fn forced_distinct_graph(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if g.has_edge(u, v) || symdiff_rule(g, u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(g.order(), edges).expect("pair graph is valid")
}

fn lower_bound(g: &Graph, use_symdiff: bool) -> Result<usize> {
    let mut lb = if use_symdiff {
        chi_exact(&forced_distinct_graph(g), usize::MAX)?
    } else {
        chi_exact(g, usize::MAX)?
    };
    if g.order() >= 3 && g.is_tree() {
        lb = lb.max(tree_leaf_lower_bound(g)?);
    }
    Ok(lb)
}

/// Exact minimum number of distinct weights over all valid labelings.
pub fn chi_ld_exact(g: &Graph, budget: &SearchBudget) -> Result<OracleResult> {
    if g.order() == 0 {
        return Err(Error::InvalidGraph("cannot search the empty graph".into()));
    }
    if g.order() > budget.max_order {
        return Err(Error::OrderCap {
            order: g.order(),
            cap: budget.max_order,
        });
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let start = Instant::now();
    let lb = lower_bound(g, budget.use_symdiff_pruning)?;
    let shared = SharedState {
        best: AtomicUsize::new(usize::MAX),
        stop: AtomicBool::new(false),
        exhausted: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
        max_nodes: budget.max_nodes,
        deadline: budget.time_limit.map(|t| start + t),
        lower_bound: lb,
    };
    let template = Dfs::new(g, &shared);
    let prefixes = root_prefixes(&template, budget.threads);
    let outcomes: Vec<(usize, Option<Vec<usize>>)> = if budget.threads <= 1 {
        prefixes
            .iter()
            .map(|prefix| run_prefix(&template, prefix))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(budget.threads)
            .build()
            .map_err(|e| Error::InvalidGraph(format!("thread pool: {e}")))?;
        pool.install(|| {
            prefixes
                .par_iter()
                .map(|prefix| run_prefix(&template, prefix))
                .collect()
        })
    };

    let completed = !shared.exhausted.load(Ordering::SeqCst);
    let nodes = shared.nodes.load(Ordering::SeqCst);
    let best = shared.best.load(Ordering::SeqCst);
    let witness = outcomes
        .iter()
        .find(|(count, w)| *count == best && w.is_some())
        .and_then(|(_, w)| w.clone())
        .map(Labeling::new)
        .transpose()?;
    let value = match (completed, best) {
        (true, usize::MAX) => OracleValue::NoValidLabeling,
        (true, k) => OracleValue::Exact(k),
        (false, usize::MAX) => OracleValue::Bracket {
            lower: lb,
            upper: None,
        },
        (false, k) => OracleValue::Bracket {
            lower: lb,
            upper: Some(k),
        },
    };
    Ok(OracleResult {
        value,
        witness,
        stats: SearchStats {
            nodes,
            completed,
            elapsed: start.elapsed(),
            lower_bound: lb,
        },
    })
}

/// Re-checks an oracle answer: the witness must verify with exactly the
/// reported color count.
pub fn min_colors_witness_check(result: &OracleResult, g: &Graph) -> bool {
    let target = match (&result.value, &result.witness) {
        (OracleValue::Exact(k), Some(_)) => *k,
        (OracleValue::Bracket { upper: Some(k), .. }, Some(_)) => *k,
        (OracleValue::Bracket { upper: None, .. }, None) => return true,
        (OracleValue::NoValidLabeling, None) => return true,
        _ => return false,
    };
    let witness = result.witness.as_ref().expect("checked above");
    match is_ldal(g, witness) {
        Ok(verdict) => verdict.valid && verdict.colors == target,
        Err(_) => false,
    }
}

struct SharedState {
    best: AtomicUsize,
    stop: AtomicBool,
    exhausted: AtomicBool,
    nodes: AtomicU64,
    max_nodes: u64,
    deadline: Option<Instant>,
    lower_bound: usize,
}

#[derive(Clone, Copy)]
enum Constraint {
    Free,
    /// Reversal symmetry: force `f(first) < f(last)`.
    Path { first: Vertex, last: Vertex },
    /// Dihedral symmetry: force `f(v0) = 1` and `f(v1) < f(vlast)`.
    Cycle { v0: Vertex, v1: Vertex, vlast: Vertex },
}

#[derive(Clone)]
struct Dfs<'a> {
    g: &'a Graph,
    n: usize,
    order: Vec<Vertex>,
    constraint: Constraint,
    label_of: Vec<usize>,
    used: Vec<bool>,
    wsum: Vec<u64>,
    pending: Vec<usize>,
    finalized: Vec<bool>,
    weight_counts: Vec<(u64, u32)>,
    distinct: usize,
    best_local: usize,
    witness_local: Option<Vec<usize>>,
    local_nodes: u64,
    shared: &'a SharedState,
}

impl<'a> Dfs<'a> {
    fn new(g: &'a Graph, shared: &'a SharedState) -> Self {
        let n = g.order();
        let constraint = match g.symmetry() {
            SymmetryHint::PathReversal if n >= 2 => Constraint::Path { first: 0, last: n - 1 },
            SymmetryHint::CycleDihedral if n >= 3 => Constraint::Cycle {
                v0: 0,
                v1: 1,
                vlast: n - 1,
            },
            _ => Constraint::Free,
        };
        let order = match constraint {
            Constraint::Free => bfs_order(g),
            _ => (0..n).collect(),
        };
        Dfs {
            g,
            n,
            order,
            constraint,
            label_of: vec![0; n],
            used: vec![false; n + 1],
            wsum: vec![0; n],
            pending: (0..n).map(|v| g.degree(v)).collect(),
            finalized: vec![false; n],
            weight_counts: Vec::with_capacity(n),
            distinct: 0,
            best_local: usize::MAX,
            witness_local: None,
            local_nodes: 0,
            shared,
        }
    }

    fn allows(&self, v: Vertex, label: usize) -> bool {
        match self.constraint {
            Constraint::Free => true,
            Constraint::Path { first, last } => {
                // `first` is visited before `last` in natural order.
                v != last || label > self.label_of[first]
            }
            Constraint::Cycle { v0, v1, vlast } => {
                if v == v0 {
                    label == 1
                } else if v == vlast {
                    label > self.label_of[v1]
                } else {
                    true
                }
            }
        }
    }

    fn bound(&self) -> usize {
        self.best_local.min(self.shared.best.load(Ordering::Relaxed))
    }

    /// Applies the assignment; false means the branch is dead (the caller
    /// must still undo).
    fn assign(&mut self, v: Vertex, label: usize) -> bool {
        self.label_of[v] = label;
        self.used[label] = true;
        let mut alive = true;
        for idx in 0..self.g.neighbors(v).len() {
            let u = self.g.neighbors(v)[idx];
            self.wsum[u] += label as u64;
            self.pending[u] -= 1;
            if self.pending[u] == 0 {
                // u's weight just became final.
                self.finalized[u] = true;
                let w = self.wsum[u];
                if self
                    .g
                    .neighbors(u)
                    .iter()
                    .any(|&x| self.finalized[x] && self.wsum[x] == w)
                {
                    alive = false;
                }
                match self.weight_counts.iter_mut().find(|(cw, _)| *cw == w) {
                    Some((_, c)) => *c += 1,
                    None => {
                        self.weight_counts.push((w, 1));
                        self.distinct += 1;
                    }
                }
            }
        }
        alive && self.distinct < self.bound()
    }

    fn unassign(&mut self, v: Vertex, label: usize) {
        for idx in 0..self.g.neighbors(v).len() {
            let u = self.g.neighbors(v)[idx];
            if self.pending[u] == 0 {
                self.finalized[u] = false;
                let w = self.wsum[u];
                let pos = self
                    .weight_counts
                    .iter()
                    .position(|(cw, _)| *cw == w)
                    .expect("finalized weight present");
                self.weight_counts[pos].1 -= 1;
                if self.weight_counts[pos].1 == 0 {
                    self.weight_counts.swap_remove(pos);
                    self.distinct -= 1;
                }
            }
            self.pending[u] += 1;
            self.wsum[u] -= label as u64;
        }
        self.used[label] = false;
        self.label_of[v] = 0;
    }

    fn charge_node(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes % 1024 == 0 {
            let total = self.shared.nodes.fetch_add(1024, Ordering::Relaxed) + 1024;
            let timed_out = self
                .shared
                .deadline
                .is_some_and(|d| Instant::now() >= d);
            if total > self.shared.max_nodes || timed_out {
                self.shared.exhausted.store(true, Ordering::SeqCst);
                self.shared.stop.store(true, Ordering::SeqCst);
            }
        }
        !self.shared.stop.load(Ordering::Relaxed)
    }

    fn record_leaf(&mut self) {
        let count = self.distinct;
        if count < self.best_local {
            self.best_local = count;
            self.witness_local = Some(self.label_of.clone());
        }
        let mut current = self.shared.best.load(Ordering::SeqCst);
        while count < current {
            match self.shared.best.compare_exchange(
                current,
                count,
                Ordering::SeqCst,
                Ordering::SeqCst,
            ) {
                Ok(_) => break,
                Err(now) => current = now,
            }
        }
        if self.shared.best.load(Ordering::SeqCst) <= self.shared.lower_bound {
            self.shared.stop.store(true, Ordering::SeqCst);
        }
    }

    fn search(&mut self, depth: usize) {
        if depth == self.n {
            self.record_leaf();
            return;
        }
        let v = self.order[depth];
        for label in 1..=self.n {
            if self.used[label] || !self.allows(v, label) {
                continue;
            }
            if !self.charge_node() {
                return;
            }
            if self.assign(v, label) {
                self.search(depth + 1);
            }
            self.unassign(v, label);
            if self.shared.stop.load(Ordering::Relaxed) {
                return;
            }
        }
    }

    fn flush_nodes(&mut self) {
        self.shared
            .nodes
            .fetch_add(self.local_nodes % 1024, Ordering::Relaxed);
    }
}

/// Splits the root of the search tree into independent label prefixes, one
/// task each. Splitting descends past vertices whose label is forced.
fn root_prefixes(template: &Dfs<'_>, threads: usize) -> Vec<Vec<(Vertex, usize)>> {
    let mut prefixes: Vec<Vec<(Vertex, usize)>> = vec![Vec::new()];
    if threads <= 1 || template.n < 2 {
        return prefixes;
    }
    for depth in 0..2.min(template.n) {
        let v = template.order[depth];
        let mut expanded = Vec::new();
        for prefix in &prefixes {
            let labels_taken: Vec<usize> = prefix.iter().map(|&(_, l)| l).collect();
            for label in 1..=template.n {
                if !labels_taken.contains(&label) {
                    let mut longer = prefix.clone();
                    longer.push((v, label));
                    expanded.push(longer);
                }
            }
        }
        prefixes = expanded;
        if prefixes.len() >= threads * 4 {
            break;
        }
    }
    prefixes
}

fn run_prefix(template: &Dfs<'_>, prefix: &[(Vertex, usize)]) -> (usize, Option<Vec<usize>>) {
    let mut dfs = template.clone();
    let mut alive = true;
    for &(v, label) in prefix {
        if !dfs.allows(v, label) || !dfs.assign(v, label) {
            alive = false;
            break;
        }
    }
    if alive && !dfs.shared.stop.load(Ordering::Relaxed) {
        dfs.search(prefix.len());
    }
    dfs.flush_nodes();
    (dfs.best_local, dfs.witness_local)
}

fn bfs_order(g: &Graph) -> Vec<Vertex> {
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let by_degree = |a: &Vertex, b: &Vertex| g.degree(*b).cmp(&g.degree(*a)).then(a.cmp(b));
    let mut roots: Vec<Vertex> = (0..n).collect();
    roots.sort_by(by_degree);
    for &root in &roots {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut nbrs: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&u| !seen[u]).collect();
            nbrs.sort_by(by_degree);
            for u in nbrs {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, cycle, multipartite, path, star, wheel};

    fn exact(g: &Graph) -> usize {
        let result = chi_ld_exact(g, &SearchBudget::default()).unwrap();
        assert!(min_colors_witness_check(&result, g));
        match result.value {
            OracleValue::Exact(k) => k,
            other => panic!("expected exact value, got {other:?}"),
        }
    }

    #[test]
    fn small_cycle_and_path_values() {
        assert_eq!(exact(&cycle(4).unwrap()), 2);
        assert_eq!(exact(&cycle(5).unwrap()), 5);
        assert_eq!(exact(&path(3).unwrap()), 2);
        assert_eq!(exact(&path(5).unwrap()), 3);
    }

    #[test]
    fn cliques_need_order_many_colors() {
        assert_eq!(exact(&complete(3).unwrap()), 3);
        assert_eq!(exact(&complete(5).unwrap()), 5);
    }

    #[test]
    fn stars_and_multipartite() {
        assert_eq!(exact(&star(4).unwrap()), 2);
        assert_eq!(exact(&multipartite(&[2, 2]).unwrap()), 2);
        assert_eq!(exact(&multipartite(&[1, 2, 2]).unwrap()), 3);
        assert_eq!(exact(&multipartite(&[2, 2, 2]).unwrap()), 3);
        assert_eq!(exact(&multipartite(&[1, 1, 3]).unwrap()), 3);
    }

    #[test]
    fn chi_exact_examples() {
        assert_eq!(chi_exact(&cycle(5).unwrap(), 10).unwrap(), 3);
        assert_eq!(chi_exact(&multipartite(&[3, 3]).unwrap(), 10).unwrap(), 2);
        assert_eq!(chi_exact(&wheel(4).unwrap(), 10).unwrap(), 3);
        assert!(matches!(
            chi_exact(&cycle(5).unwrap(), 4),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn budget_exhaustion_reports_a_bracket() {
        let g = cycle(9).unwrap();
        let budget = SearchBudget::default().with_max_nodes(64);
        let result = chi_ld_exact(&g, &budget).unwrap();
        assert!(!result.stats.completed);
        match result.value {
            OracleValue::Bracket { lower, .. } => assert!(lower >= 3),
            other => panic!("expected bracket, got {other:?}"),
        }
        assert!(min_colors_witness_check(&result, &g));
    }

    #[test]
    fn oracle_rejects_isolated_vertices_and_oversize() {
        let lonely = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            chi_ld_exact(&lonely, &SearchBudget::default()),
            Err(Error::IsolatedVertex(2))
        ));
        let big = cycle(12).unwrap();
        assert!(matches!(
            chi_ld_exact(&big, &SearchBudget::default()),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn parallel_search_agrees_with_sequential() {
        for g in [cycle(7).unwrap(), path(7).unwrap(), wheel(5).unwrap()] {
            let seq = chi_ld_exact(&g, &SearchBudget::default()).unwrap();
            let par = chi_ld_exact(&g, &SearchBudget::default().with_threads(4)).unwrap();
            assert_eq!(seq.value, par.value);
            assert!(min_colors_witness_check(&par, &g));
        }
    }

    #[test]
    fn symdiff_pruning_does_not_change_values() {
        for g in [cycle(6).unwrap(), path(6).unwrap(), star(4).unwrap()] {
            let with = chi_ld_exact(&g, &SearchBudget::default()).unwrap();
            let without =
                chi_ld_exact(&g, &SearchBudget::default().with_symdiff_pruning(false)).unwrap();
            assert_eq!(with.value, without.value);
        }
    }

    #[test]
    fn forced_pairs_make_p4_a_clique() {
        let d = forced_distinct_graph(&path(4).unwrap());
        assert_eq!(d.size(), 6);
    }
}
