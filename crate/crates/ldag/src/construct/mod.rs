//! One labeler per constructive result. Every labeler rebuilds the target
//! graph, computes the labeling from its formula, and re-verifies the output
//! through the weight checker before returning a certificate: a failed
//! self-check is an internal error, never a silent certificate.

mod basic;
mod joins;
mod path_cycle;
mod products;

pub use basic::{
    label_bistar, label_clique_plus_empty, label_friendship, label_multipartite_solution2,
};
pub use joins::{
    check_join_condition, label_friendship_join_bistar, label_friendship_join_empty, label_join,
    label_join_with_empty,
};
pub use path_cycle::{
    derive_split_3coloring, expected_cycle_colors, expected_path_colors,
    label_2r_regular_3chromatic_lexi, label_cycle_lexi, label_path_lexi,
};
pub use products::{
    label_biregular_bipartite_lexi, label_complete_lexi, label_fan_product,
    label_friendship_product, label_lexi_join_plus_one, label_lexi_lift,
    label_regular_bipartite_lexi, label_wheel_product, nested_neighborhood_bound,
};

use std::collections::BTreeMap;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{weigh, Labeling};
use crate::oracle::{chi_ld_exact, OracleValue, SearchBudget};

/// What the theorem promises about the verified color count.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Claim {
    Exactly(usize),
    AtMost(usize),
}

/// Verifies a constructed labeling and wraps it into a certificate.
pub(crate) fn certify(
    g: &Graph,
    labels: Vec<usize>,
    provenance: String,
    claim: Claim,
) -> Result<Certificate> {
    let f = Labeling::new(labels)
        .map_err(|e| Error::SelfCheck(format!("{provenance}: {e}")))?;
    let profile = weigh(g, &f)?;
    if let Some(&(u, v)) = profile.conflicts.first() {
        return Err(Error::SelfCheck(format!(
            "{provenance}: adjacent vertices {u} and {v} share weight {}",
            profile.weights[u]
        )));
    }
    match claim {
        Claim::Exactly(k) if profile.distinct_count != k => Err(Error::SelfCheck(format!(
            "{provenance}: expected exactly {k} colors, verifier counted {}",
            profile.distinct_count
        ))),
        Claim::AtMost(k) if profile.distinct_count > k => Err(Error::SelfCheck(format!(
            "{provenance}: expected at most {k} colors, verifier counted {}",
            profile.distinct_count
        ))),
        _ => Certificate::build(g, &f, provenance),
    }
}

/// Checks that the direct weight computation reproduces a stated closed form
/// at every vertex, exactly.
pub(crate) fn check_closed_form(
    g: &Graph,
    f: &Labeling,
    predicted: &[u64],
    provenance: &str,
) -> Result<()> {
    let profile = weigh(g, f)?;
    for v in 0..g.order() {
        if profile.weights[v] != predicted[v] {
            return Err(Error::SelfCheck(format!(
                "{provenance}: closed form gives {} at vertex {v}, direct weighing gives {}",
                predicted[v], profile.weights[v]
            )));
        }
    }
    Ok(())
}

/// A valid labeling for an ingredient graph: edgeless graphs take the
/// identity (vacuously valid), anything else is searched exactly.
pub(crate) fn ingredient_labeling(g: &Graph, budget: &SearchBudget) -> Result<Labeling> {
    if g.size() == 0 {
        return Ok(Labeling::identity(g.order()));
    }
    let result = chi_ld_exact(g, budget)?;
    match (result.value, result.witness) {
        (OracleValue::Exact(_), Some(w)) => Ok(w),
        (OracleValue::Bracket { .. }, Some(w)) => Ok(w),
        _ => Err(Error::NotCovered(format!(
            "no labeling found for an ingredient graph of order {}",
            g.order()
        ))),
    }
}

/// Identifier of a constructive theorem, as exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    CliquePlusEmpty,
    Multipartite,
    Friendship,
    Bistar,
    Join,
    FriendshipJoinEmpty,
    FriendshipJoinBistar,
    LexiLift,
    RegularBipartite,
    BiregularBipartite,
    Path,
    Cycle,
    ThreeChromatic,
    CompleteLexi,
    WheelProduct,
    FriendshipProduct,
    FanProduct,
}

impl TheoremId {
    pub const ALL: [(&'static str, TheoremId); 17] = [
        ("clique-plus-empty", TheoremId::CliquePlusEmpty),
        ("multipartite", TheoremId::Multipartite),
        ("friendship", TheoremId::Friendship),
        ("bistar", TheoremId::Bistar),
        ("join", TheoremId::Join),
        ("friendship-join-empty", TheoremId::FriendshipJoinEmpty),
        ("friendship-join-bistar", TheoremId::FriendshipJoinBistar),
        ("lexi-lift", TheoremId::LexiLift),
        ("regular-bipartite", TheoremId::RegularBipartite),
        ("biregular-bipartite", TheoremId::BiregularBipartite),
        ("path", TheoremId::Path),
        ("cycle", TheoremId::Cycle),
        ("three-chromatic", TheoremId::ThreeChromatic),
        ("complete-lexi", TheoremId::CompleteLexi),
        ("wheel-product", TheoremId::WheelProduct),
        ("friendship-product", TheoremId::FriendshipProduct),
        ("fan-product", TheoremId::FanProduct),
    ];

    pub fn name(&self) -> &'static str {
        Self::ALL
            .iter()
            .find(|(_, id)| id == self)
            .map(|(name, _)| *name)
            .expect("every id is listed")
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .find(|(name, _)| *name == s)
            .map(|(_, id)| *id)
            .ok_or_else(|| {
                let names: Vec<&str> = Self::ALL.iter().map(|(n, _)| *n).collect();
                Error::NotCovered(format!(
                    "unknown theorem `{s}`; available: {}",
                    names.join(", ")
                ))
            })
    }
}

/// A typed parameter passed to the dispatcher.
#[derive(Debug, Clone)]
pub enum ParamValue {
    Int(usize),
    Sizes(Vec<usize>),
    Graph(Graph),
    Labels(Vec<usize>),
}

/// Theorem id plus named parameters; the CLI builds one of these from
/// `--theorem` and repeated `--params k=v` flags.
#[derive(Debug, Clone)]
pub struct ConstructionRequest {
    pub theorem: TheoremId,
    pub params: BTreeMap<String, ParamValue>,
}

impl ConstructionRequest {
    pub fn new(theorem: TheoremId) -> Self {
        ConstructionRequest {
            theorem,
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: ParamValue) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    fn missing(&self, key: &str) -> Error {
        Error::Hypothesis(format!(
            "theorem `{}` needs parameter `{key}`",
            self.theorem.name()
        ))
    }

    fn int(&self, key: &str) -> Result<usize> {
        match self.params.get(key) {
            Some(ParamValue::Int(v)) => Ok(*v),
            Some(_) => Err(Error::Hypothesis(format!("parameter `{key}` must be an integer"))),
            None => Err(self.missing(key)),
        }
    }

    fn sizes(&self, key: &str) -> Result<Vec<usize>> {
        match self.params.get(key) {
            Some(ParamValue::Sizes(v)) => Ok(v.clone()),
            Some(ParamValue::Int(v)) => Ok(vec![*v]),
            Some(_) => Err(Error::Hypothesis(format!(
                "parameter `{key}` must be a size list"
            ))),
            None => Err(self.missing(key)),
        }
    }

    fn graph(&self, key: &str) -> Result<Graph> {
        match self.params.get(key) {
            Some(ParamValue::Graph(g)) => Ok(g.clone()),
            Some(_) => Err(Error::Hypothesis(format!("parameter `{key}` must be a graph"))),
            None => Err(self.missing(key)),
        }
    }

    /// A labeling for the graph under `graph_key`: explicit labels if given,
    /// otherwise an oracle-searched one.
    fn labeling_for(&self, key: &str, g: &Graph, budget: &SearchBudget) -> Result<Labeling> {
        match self.params.get(key) {
            Some(ParamValue::Labels(raw)) => Labeling::new(raw.clone()),
            Some(_) => Err(Error::Hypothesis(format!(
                "parameter `{key}` must be a labeling"
            ))),
            None => ingredient_labeling(g, budget),
        }
    }

    /// Runs the requested construction. The budget only matters for theorems
    /// that fall back to the exact search for an ingredient labeling.
    pub fn run(&self, budget: &SearchBudget) -> Result<Certificate> {
        match self.theorem {
            TheoremId::CliquePlusEmpty => {
                label_clique_plus_empty(self.int("n")?, self.int("p")?)
            }
            TheoremId::Multipartite => {
                label_multipartite_solution2(self.int("n")?, &self.sizes("sizes")?, budget)
            }
            TheoremId::Friendship => label_friendship(self.int("n")?),
            TheoremId::Bistar => label_bistar(self.int("m")?, self.int("n")?),
            TheoremId::Join => {
                let g = self.graph("g")?;
                let h = self.graph("h")?;
                let f = self.labeling_for("fg", &g, budget)?;
                let fh = self.labeling_for("fh", &h, budget)?;
                label_join(&g, &f, &h, &fh)
            }
            TheoremId::FriendshipJoinEmpty => {
                label_friendship_join_empty(self.int("n")?, self.int("m")?)
            }
            TheoremId::FriendshipJoinBistar => label_friendship_join_bistar(self.int("n")?),
            TheoremId::LexiLift => {
                let g = self.graph("g")?;
                let f = self.labeling_for("f", &g, budget)?;
                label_lexi_lift(&g, &f, self.int("n")?)
            }
            TheoremId::RegularBipartite => {
                label_regular_bipartite_lexi(&self.graph("g")?, self.int("n")?)
            }
            TheoremId::BiregularBipartite => {
                label_biregular_bipartite_lexi(&self.graph("g")?, self.int("n")?)
            }
            TheoremId::Path => label_path_lexi(self.int("m")?, self.int("n")?),
            TheoremId::Cycle => label_cycle_lexi(self.int("m")?, self.int("n")?),
            TheoremId::ThreeChromatic => {
                let g = self.graph("g")?;
                let n = self.int("n")?;
                let classes = derive_split_3coloring(&g, n).ok_or_else(|| {
                    Error::Hypothesis(
                        "no proper 3-coloring with the required neighborhood split exists".into(),
                    )
                })?;
                label_2r_regular_3chromatic_lexi(&g, &classes, n)
            }
            TheoremId::CompleteLexi => {
                let h = self.graph("h")?;
                let f = self.labeling_for("f", &h, budget)?;
                label_complete_lexi(self.int("m")?, &h, &f)
            }
            TheoremId::WheelProduct => label_wheel_product(self.int("m")?, self.int("n")?),
            TheoremId::FriendshipProduct => {
                label_friendship_product(self.int("m")?, self.int("n")?)
            }
            TheoremId::FanProduct => label_fan_product(self.int("m")?, self.int("n")?),
        }
    }
}
