//! Measuring a logical operator by attaching a cone to the code.
//!
//! For an X-type logical `X(ℓ)` of a CSS code `D = (Z-checks → qubits →
//! X-checks)` the pipeline is
//!
//! 1. the measurement graph `G` of `ℓ` (one vertex per qubit of `ℓ`, one edge
//!    per overlap pair of each Z-check), augmented with unattributed edges
//!    until its Cheeger constant is certified;
//! 2. the cellulated cone `C ⊇ G`, whose vertices become new X-checks, edges
//!    new qubits and faces new Z-checks;
//! 3. the attachment `g⊤ = f⊤π : C⊤ → D⊤`, where `f⊤` sends a graph vertex to
//!    its qubit and a graph edge to the check it came from, and `π` projects
//!    the cone onto the graph;
//! 4. the deformed code `M`, the mapping cone of `g`: data cells first, then
//!    the cone's cells (labelled with an `a:` prefix).
//!
//! Arbitrary Pauli logicals of non-CSS stabilizer codes are first turned into
//! `X(ℓ)` by local Cliffords; the same ancilla is attached in that frame and
//! the adjoint Cliffords restore the original bases afterwards.
//!
//! Every run produces an [`AuditReport`]: commutation, the chain-map checks,
//! `k ↦ k − 1`, membership of the measured logical in the new stabilizer
//! group, the weight bounds and, where small enough, exhaustive distance
//! checks against the expansion bound.

mod attachment;
mod audit;
mod deform;

pub use attachment::{build_attachment, AttachmentCheck, AttachmentMaps};
pub use audit::{
    AuditOptions, AuditReport, CheckStatus, CheegerReport, CodeKind, DistanceCheck, DistanceReport,
    HomologyReport, WeightsReport,
};
pub use deform::{
    deform, deform_css, deform_stabilizer, prepare_measurement_graph, verify_deformed, z_shadow,
    DeformOptions, DeformedCode, DeformedForm, Measured, Provenance, ANCILLA_PREFIX,
};

use std::fmt;

use cs_codes::CodeError;
use cs_cones::ConeError;
use cs_core::ChainError;
use cs_meshgraph::GraphError;
use thiserror::Error;

/// Pipeline stage at which an error was raised.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Input,
    Reduction,
    MeasurementGraph,
    Augmentation,
    Cone,
    Attachment,
    MappingCone,
    Assembly,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Input => "input",
            Stage::Reduction => "x-type reduction",
            Stage::MeasurementGraph => "measurement graph",
            Stage::Augmentation => "expander augmentation",
            Stage::Cone => "cellulated cone",
            Stage::Attachment => "attachment",
            Stage::MappingCone => "mapping cone",
            Stage::Assembly => "deformed generators",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SurgeryError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("the operator anticommutes with check {0}, so it is not a logical")]
    NotALogical(usize),
    #[error("the operator is a stabilizer; measuring it would leave the code unchanged")]
    IsStabilizer,
    #[error("{stage}: {source}")]
    Code { stage: Stage, source: CodeError },
    #[error("{stage}: {source}")]
    Graph { stage: Stage, source: GraphError },
    #[error("{stage}: {source}")]
    Cone { stage: Stage, source: ConeError },
    #[error("{stage}: {source}")]
    Chain { stage: Stage, source: ChainError },
    #[error("attachment maps fail verification: {0}")]
    Attachment(String),
    #[error("strict mode: {}", .0.join("; "))]
    Strict(Vec<String>),
}

impl SurgeryError {
    /// The stage that failed, when the error carries one.
    pub fn stage(&self) -> Option<Stage> {
        match self {
            SurgeryError::Code { stage, .. }
            | SurgeryError::Graph { stage, .. }
            | SurgeryError::Cone { stage, .. }
            | SurgeryError::Chain { stage, .. } => Some(*stage),
            SurgeryError::Attachment(_) => Some(Stage::Attachment),
            _ => None,
        }
    }
}

/// Tags lower-level errors with the stage they came from.
pub(crate) trait AtStage<T> {
    fn at(self, stage: Stage) -> Result<T, SurgeryError>;
}

macro_rules! at_stage {
    ($err:ty, $variant:ident) => {
        impl<T> AtStage<T> for Result<T, $err> {
            fn at(self, stage: Stage) -> Result<T, SurgeryError> {
                self.map_err(|source| SurgeryError::$variant { stage, source })
            }
        }
    };
}

at_stage!(CodeError, Code);
at_stage!(GraphError, Graph);
at_stage!(ConeError, Cone);
at_stage!(ChainError, Chain);

impl<T> AtStage<T> for Result<T, cs_core::F2Error> {
    fn at(self, stage: Stage) -> Result<T, SurgeryError> {
        self.map_err(ChainError::F2).at(stage)
    }
}
