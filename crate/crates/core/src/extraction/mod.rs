//! Witness extraction: the constructive steps behind the Ramsey-type
//! statements for connected graphs, run on concrete inputs.
//!
//! The guaranteed thresholds are far too large to reach at desk scale, so
//! every pipeline is best-effort: it runs the constructive stages on whatever
//! structure the input actually has and returns either a [`Witness`] or an
//! [`ExtractionOutcome::Failed`] naming the stage that came up short. A
//! returned witness always passes [`verify_witness`] against the input.
//!
//! [`verify_witness`]: crate::families::verify_witness

mod independence;
mod induced_matching;
mod lemma;
mod matching;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::Witness;
use crate::graph::GraphError;

pub use independence::{extract_independence_witness, extract_path_clique_star};
pub use induced_matching::{expand_contracted_path, expand_hairy, expand_star, extract_induced_matching_witness};
pub use lemma::{pendant_extension, prune_keep};
pub use matching::{
    color_matching_pairs, extract_matching_witness, monochromatic_clique, ColorQuad, ColoredCompleteGraph,
    MonochromaticClique,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("size parameter must be at least 1")]
    ZeroParameter,
    #[error("r = {r} must be at least n = {n}")]
    RBelowN { n: usize, r: usize },
    #[error("pendant extension precondition fails at pivot {pivot}: {reason}")]
    PendantPrecondition { pivot: usize, reason: &'static str },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Pipeline stage that could not deliver the structure it needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    PathCliqueStar,
    InducedMatching,
    CaseAnalysis,
    HairyExpansion,
    StarExpansion,
    MonochromaticClique,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::PathCliqueStar => "path-clique-star",
            Stage::InducedMatching => "induced-matching",
            Stage::CaseAnalysis => "case-analysis",
            Stage::HairyExpansion => "hairy-expansion",
            Stage::StarExpansion => "star-expansion",
            Stage::MonochromaticClique => "monochromatic-clique",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub stage: Stage,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ExtractionOutcome {
    Found { witness: Witness },
    Failed(Failure),
}

impl ExtractionOutcome {
    pub(crate) fn failed(stage: Stage, reason: impl Into<String>) -> Self {
        ExtractionOutcome::Failed(Failure { stage, reason: reason.into() })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            ExtractionOutcome::Found { witness } => Some(witness),
            ExtractionOutcome::Failed(_) => None,
        }
    }

    pub fn into_witness(self) -> Option<Witness> {
        match self {
            ExtractionOutcome::Found { witness } => Some(witness),
            ExtractionOutcome::Failed(_) => None,
        }
    }

    /// Parameter of the witness, or 0 on failure.
    pub fn parameter(&self) -> usize {
        self.witness().map_or(0, |w| w.spec.parameter())
    }

    /// Rewrites the embedding through `map` (local index → host index).
    pub(crate) fn remap(self, map: &[usize]) -> Self {
        match self {
            ExtractionOutcome::Found { witness } => ExtractionOutcome::Found { witness: remap(witness, map) },
            failed => failed,
        }
    }
}

impl From<Witness> for ExtractionOutcome {
    fn from(witness: Witness) -> Self {
        ExtractionOutcome::Found { witness }
    }
}

pub(crate) fn remap(mut w: Witness, map: &[usize]) -> Witness {
    for v in &mut w.embedding {
        *v = map[*v];
    }
    w
}

fn require_connected(g: &crate::graph::Graph) -> Result<(), ExtractionError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(GraphError::Disconnected.into())
    }
}

/// Largest-parameter candidate, ties going to the lower `rank` and then to
/// the earlier candidate. Fails at `stage` when nothing reaches `n`.
pub(crate) fn best_of(
    n: usize,
    stage: Stage,
    candidates: Vec<Witness>,
    rank: impl Fn(&crate::families::FamilySpec) -> usize,
) -> ExtractionOutcome {
    let mut best: Option<Witness> = None;
    for w in &candidates {
        let better = match &best {
            None => true,
            Some(b) => {
                let (p, q) = (w.spec.parameter(), b.spec.parameter());
                p > q || (p == q && rank(&w.spec) < rank(&b.spec))
            }
        };
        if better {
            best = Some(w.clone());
        }
    }
    match best {
        Some(w) if w.spec.parameter() >= n => w.into(),
        _ => {
            let mut found: Vec<String> = candidates.iter().map(|w| w.spec.label()).collect();
            found.sort();
            found.dedup();
            let reason = if found.is_empty() {
                format!("no candidate structure; need parameter {n}")
            } else {
                format!("best candidates {} fall short of parameter {n}", found.join(", "))
            };
            ExtractionOutcome::failed(stage, reason)
        }
    }
}
