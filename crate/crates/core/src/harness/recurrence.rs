use serde::{Deserialize, Serialize};

use crate::graph::{GlueKind, SquareSequence};

/// Bookkeeping for one gluing step `i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceStep {
    pub index: usize,
    pub kind: GlueKind,
    /// `|A_i|`, the common neighbours of `u` and `v` in `H_{i-1}`; corner
    /// steps only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub common_neighbors: Option<usize>,
    pub increment: i64,
    pub gamma: i64,
}

/// The sphere counts `γ_1 = 0, γ_2, ..` predicted for `Cliq_3(H_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceTrace {
    pub steps: Vec<RecurrenceStep>,
}

impl RecurrenceTrace {
    /// `γ_n` for the full sequence.
    pub fn gamma(&self) -> i64 {
        self.steps.last().map_or(0, |s| s.gamma)
    }

    /// `[γ_1, .., γ_n]`.
    pub fn gammas(&self) -> Vec<i64> {
        std::iter::once(0)
            .chain(self.steps.iter().map(|s| s.gamma))
            .collect()
    }
}

/// Edge step `i` adds `i - 1`; corner step `i` adds `(i - 1) - |A_i| + 1`.
pub fn gamma_recurrence(seq: &SquareSequence) -> RecurrenceTrace {
    let mut gamma = 0i64;
    let mut steps = Vec::new();
    for i in 2..=seq.len() {
        let sq = seq.square(i);
        let kind = sq.kind.expect("glued square");
        let (common, increment) = match kind {
            GlueKind::Edge => (None, i as i64 - 1),
            GlueKind::Corner => {
                let a = seq.graph(i - 1).common_neighbors(sq.u, sq.v).len();
                (Some(a), i as i64 - 1 - a as i64 + 1)
            }
        };
        gamma += increment;
        steps.push(RecurrenceStep {
            index: i,
            kind,
            common_neighbors: common,
            increment,
            gamma,
        });
    }
    RecurrenceTrace { steps }
}
