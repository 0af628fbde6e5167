//! The maps that glue a cone onto the data code.
//!
//! All maps are stored in the cochain direction, as columns indexed by the
//! source cells:
//!
//! ```text
//!         C⁰ ──δ──▶ C¹
//!         │π₀       │π₁
//!         ▼         ▼
//!         V  ──δ──▶ E
//!         │f₀       │f₁
//!         ▼         ▼
//!  D⁰ ──▶ D¹ ──δ──▶ D²
//! ```
//!
//! `π = ιᵀ` for the inclusion `ι : G → C`, and `g = f·π`. Commutation of the
//! lower square (and of the composite) is checked with [`verify_chain_map`]
//! after regrading: the cocomplex of a complex is its transpose, and `D¹ → D²`
//! is placed in degrees 2 and 1 so that the maps become degree-preserving.

use cs_cones::ConeResult;
use cs_core::{
    transpose_complex, verify_chain_map, CellComplex, ChainError, ChainMap, ConeMap, F2Matrix,
};
use cs_meshgraph::MeasurementGraph;

use crate::{AtStage, Stage, SurgeryError};

/// `f⊤`, `ι` (so `π = ιᵀ`) and `g⊤ = f⊤π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachmentMaps {
    /// `f⊤₀`: the qubit of each graph vertex (`D₁ × V`).
    pub f0: F2Matrix,
    /// `f⊤₁`: the check of each graph edge, zero for augmentation edges
    /// (`D₂ × E`).
    pub f1: F2Matrix,
    /// The inclusion of the graph into the cone.
    pub inclusion: ChainMap,
    /// `g⊤₀ = f⊤₀π₀` (`D₁ × C₀`).
    pub g0: F2Matrix,
    /// `g⊤₁ = f⊤₁π₁` (`D₂ × C₁`).
    pub g1: F2Matrix,
}

/// Outcome of [`AttachmentMaps::check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AttachmentCheck {
    /// `ι : G → C` is a chain map.
    pub inclusion: bool,
    /// `f⊤ : G⊤ → D⊤` is a cochain map.
    pub graph_map: bool,
    /// `g⊤ : C⊤ → D⊤` is a cochain map.
    pub cone_map: bool,
    /// `g⊤ = f⊤ιᵀ`.
    pub factorization: bool,
}

impl AttachmentCheck {
    pub fn ok(&self) -> bool {
        self.inclusion && self.graph_map && self.cone_map && self.factorization
    }

    /// Names of the failed checks.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.inclusion, "inclusion G → C"),
            (self.graph_map, "f: G⊤ → D⊤"),
            (self.cone_map, "g: C⊤ → D⊤"),
            (self.factorization, "g = f·π"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

/// `D¹ → D²` placed in degrees 2 and 1 (nothing in degree 0).
fn upper_cochains(data: &CellComplex) -> Result<CellComplex, ChainError> {
    CellComplex::new(
        data.labels(1).to_vec(),
        data.labels(2).to_vec(),
        Vec::new(),
        data.d2().transpose(),
        F2Matrix::zeros(0, data.dim(2)),
    )
}

impl AttachmentMaps {
    /// The degree-lowering map `D → C[−1]` whose mapping cone is the
    /// deformed code: `g2 = g⊤₁ᵀ : D₂ → C₁`, `g1 = g⊤₀ᵀ : D₁ → C₀`.
    pub fn cone_map(&self) -> ConeMap {
        ConeMap {
            g2: self.g1.transpose(),
            g1: self.g0.transpose(),
        }
    }

    /// Checks every square of the attachment diagram.
    pub fn check(
        &self,
        graph: &CellComplex,
        cone: &CellComplex,
        data: &CellComplex,
    ) -> Result<AttachmentCheck, ChainError> {
        let inclusion = verify_chain_map(&self.inclusion, graph, cone)?;
        let target = upper_cochains(data)?;
        let f = ChainMap {
            g2: self.f0.clone(),
            g1: self.f1.clone(),
            g0: F2Matrix::zeros(0, graph.dim(2)),
        };
        let graph_map = verify_chain_map(&f, &transpose_complex(graph), &target)?;
        let g = ChainMap {
            g2: self.g0.clone(),
            g1: self.g1.clone(),
            g0: F2Matrix::zeros(0, cone.dim(2)),
        };
        let cone_map = verify_chain_map(&g, &transpose_complex(cone), &target)?;
        let factorization = self.f0.mul(&self.inclusion.g0.transpose())? == self.g0
            && self.f1.mul(&self.inclusion.g1.transpose())? == self.g1;
        Ok(AttachmentCheck {
            inclusion,
            graph_map,
            cone_map,
            factorization,
        })
    }
}

/// Builds `f⊤`, `ι` and `g⊤` for a cone containing the measurement graph.
///
/// `data` is the complex the edges' checks live in: degree 2 holds the
/// checks edges are attributed to and degree 1 the qubits (for a CSS code,
/// [`CssCode::to_complex`](cs_codes::CssCode::to_complex)). The maps are
/// verified before they are returned.
pub fn build_attachment(
    cone: &ConeResult,
    mg: &MeasurementGraph,
    data: &CellComplex,
) -> Result<AttachmentMaps, SurgeryError> {
    let g = mg.graph();
    if cone.deformation.base.edges() != g.edges()
        || cone.deformation.base.n_vertices() != g.n_vertices()
    {
        return Err(SurgeryError::Attachment(
            "the cone was built for a different graph".into(),
        ));
    }
    if !cone.embeds_base() {
        return Err(SurgeryError::Attachment(
            "the cone does not contain the graph as a subgraph".into(),
        ));
    }
    if data.dim(1) != mg.n_qubits() {
        return Err(SurgeryError::Attachment(format!(
            "{} data qubits but the graph lives on {}",
            data.dim(1),
            mg.n_qubits()
        )));
    }
    if let Some(c) = mg
        .edge_checks()
        .iter()
        .flatten()
        .find(|&&c| c >= data.dim(2))
    {
        return Err(SurgeryError::Attachment(format!(
            "edge attributed to check {c}, but there are {} checks",
            data.dim(2)
        )));
    }
    let stage = Stage::Attachment;
    let f0 = F2Matrix::from_columns(data.dim(1), mg.qubits().iter().map(|&q| vec![q]).collect())
        .at(stage)?;
    let f1 = F2Matrix::from_columns(
        data.dim(2),
        mg.edge_checks()
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect(),
    )
    .at(stage)?;
    let c = &cone.complex;
    let inclusion = ChainMap {
        g2: F2Matrix::zeros(c.dim(2), 0),
        g1: F2Matrix::from_columns(
            c.dim(1),
            cone.edge_cells
                .iter()
                .map(|e| e.iter().copied().collect())
                .collect(),
        )
        .at(stage)?,
        g0: F2Matrix::from_columns(
            c.dim(0),
            cone.deformation
                .vertex_images
                .iter()
                .map(|&v| vec![v])
                .collect(),
        )
        .at(stage)?,
    };
    let g0 = f0.mul(&inclusion.g0.transpose()).at(stage)?;
    let g1 = f1.mul(&inclusion.g1.transpose()).at(stage)?;
    let maps = AttachmentMaps {
        f0,
        f1,
        inclusion,
        g0,
        g1,
    };
    let graph = g.to_complex(None).at(stage)?;
    let check = maps.check(&graph, c, data).at(stage)?;
    if !check.ok() {
        return Err(SurgeryError::Attachment(check.failures().join(", ")));
    }
    Ok(maps)
}
