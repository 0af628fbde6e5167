//! The measurement pipeline and the deformed code.

use cs_codes::{pauli_to_xtype, CodeError, CssCode, PauliOp, Side, StabilizerCode, XTypeReduction};
use cs_cones::{cellulated_cone_with, ConeResult, Variant};
use cs_core::{
    homology_dims, mapping_cone, verify_complex, weight_audit, CellComplex, ChainError, F2Matrix,
    F2Vector,
};
use cs_meshgraph::{
    augment_expander, build_measurement_graph, build_measurement_graph_css, default_degree_cap,
    AugmentOptions, CheegerCertificate, CheegerMethod, MeasurementGraph,
};
use num_rational::Ratio;

use crate::audit::distance_report;
use crate::{
    build_attachment, AtStage, AttachmentMaps, AuditOptions, AuditReport, CheegerReport, CodeKind,
    DistanceReport, HomologyReport, Stage, SurgeryError, WeightsReport,
};

/// Prefix of every ancilla cell label in a deformed CSS complex.
pub const ANCILLA_PREFIX: &str = "a:";

/// Pipeline parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeformOptions {
    pub seed: u64,
    /// Augmentation degree cap; by default `max(w·q, Δ + 1)` from the
    /// check weight and qubit degree of the measured checks.
    pub degree_cap: Option<usize>,
    /// Cheeger value the augmented graph must certify.
    pub target_h: Ratio<u64>,
    /// Skip augmentation entirely (the distance guarantee then lapses).
    pub augment: bool,
    pub variant: Variant,
    pub audit: AuditOptions,
    /// Turn any audit failure into an error.
    pub strict: bool,
}

impl Default for DeformOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            degree_cap: None,
            target_h: Ratio::from_integer(1),
            augment: true,
            variant: Variant::PrunedStar,
            audit: AuditOptions::default(),
            strict: false,
        }
    }
}

/// The logical being measured, with its code.
#[derive(Clone, Copy, Debug)]
pub enum Measured<'a> {
    /// `X(ℓ)` in a CSS code.
    Css {
        code: &'a CssCode,
        ell: &'a F2Vector,
    },
    /// An arbitrary Pauli logical of a stabilizer code.
    Stabilizer {
        code: &'a StabilizerCode,
        logical: &'a PauliOp,
    },
}

/// The deformed code in the form it was built in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeformedForm {
    /// `Z-checks → qubits → X-checks` with the data cells first in every
    /// degree, followed by the cone's faces, edges and vertices.
    Css(CellComplex),
    /// Qubits: data, then cone edges. Generators: the (extended) data
    /// generators, then one per cone vertex, then one per cone face.
    Stabilizer(StabilizerCode),
}

/// Cell counts per degree `[0, 1, 2]` contributed by the data code and by the
/// cone. For stabilizer outputs degree 1 counts qubits and degree 2 the data
/// generators; the cone's vertices and faces are both generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub data: [usize; 3],
    pub ancilla: [usize; 3],
}

impl Provenance {
    fn new(data: &CellComplex, cone: &CellComplex) -> Self {
        Self {
            data: [data.dim(0), data.dim(1), data.dim(2)],
            ancilla: [cone.dim(0), cone.dim(1), cone.dim(2)],
        }
    }

    /// True iff cell `i` of the given degree of a CSS output is an ancilla
    /// cell.
    pub fn is_ancilla(&self, degree: usize, i: usize) -> bool {
        i >= self.data[degree]
    }
}

#[derive(Clone, Debug)]
pub struct DeformedCode {
    pub form: DeformedForm,
    pub provenance: Provenance,
    /// The augmented, certified measurement graph (in the X-type frame).
    pub measurement_graph: MeasurementGraph,
    pub cone: ConeResult,
    pub attachment: AttachmentMaps,
    /// The local Cliffords used for a stabilizer input.
    pub reduction: Option<XTypeReduction>,
    pub audit: AuditReport,
}

impl DeformedCode {
    /// The CSS form of a CSS output.
    pub fn css(&self) -> Option<CssCode> {
        match &self.form {
            DeformedForm::Css(m) => CssCode::from_complex(m).ok(),
            DeformedForm::Stabilizer(_) => None,
        }
    }

    /// The output as a stabilizer code.
    pub fn stabilizer(&self) -> Option<StabilizerCode> {
        match &self.form {
            DeformedForm::Css(_) => self.css().map(|c| c.to_stabilizer()),
            DeformedForm::Stabilizer(s) => Some(s.clone()),
        }
    }

    pub fn n(&self) -> usize {
        self.provenance.data[1] + self.provenance.ancilla[1]
    }
}

/// The checks-and-qubits complex of a stabilizer code's Y/Z parts: generators
/// in degree 2, qubits in degree 1, nothing in degree 0. The attachment of a
/// stabilizer code is built against it.
pub fn z_shadow(code: &StabilizerCode) -> CellComplex {
    let gens = code.generators();
    let d2 = F2Matrix::from_columns(
        code.n(),
        gens.iter().map(|g| g.z().support().to_vec()).collect(),
    )
    .expect("supports lie within n");
    CellComplex::new(
        (0..gens.len()).map(|i| format!("g{i}")).collect(),
        (0..code.n()).map(|q| format!("q{q}")).collect(),
        Vec::new(),
        d2,
        F2Matrix::zeros(0, code.n()),
    )
    .expect("shapes agree by construction")
}

fn prefixed(c: &CellComplex) -> Result<CellComplex, ChainError> {
    let names = |d: usize| {
        c.labels(d)
            .iter()
            .map(|l| format!("{ANCILLA_PREFIX}{l}"))
            .collect()
    };
    CellComplex::new(names(2), names(1), names(0), c.d2().clone(), c.d1().clone())
}

/// Augments (or just certifies) the graph, given the check weight and qubit
/// degree of the complex its edges are attributed to.
fn augment(
    mg: MeasurementGraph,
    data: &CellComplex,
    opts: &DeformOptions,
) -> Result<MeasurementGraph, SurgeryError> {
    let stage = Stage::Augmentation;
    if mg.graph().n_vertices() < 2 {
        return Ok(mg);
    }
    if !opts.augment {
        return mg.certified().at(stage);
    }
    let w = weight_audit(data);
    let cap = opts
        .degree_cap
        .unwrap_or_else(|| default_degree_cap(w.w21, w.q21, mg.graph().max_degree()));
    augment_expander(&mg, &AugmentOptions::new(cap, opts.target_h, opts.seed)).at(stage)
}

fn check_css_input(code: &CssCode, ell: &F2Vector) -> Result<(), SurgeryError> {
    if ell.len() != code.n() {
        return Err(SurgeryError::Input(format!(
            "logical has {} positions for {} qubits",
            ell.len(),
            code.n()
        )));
    }
    if ell.is_zero() {
        return Err(SurgeryError::Input("the logical is empty".into()));
    }
    let syndrome = code.hz().mul_vec(ell).at(Stage::Input)?;
    if let Some(&check) = syndrome.support().first() {
        return Err(SurgeryError::NotALogical(check));
    }
    if code.is_stabilizer(Side::X, ell).at(Stage::Input)? {
        return Err(SurgeryError::IsStabilizer);
    }
    Ok(())
}

fn check_stabilizer_input(code: &StabilizerCode, logical: &PauliOp) -> Result<(), SurgeryError> {
    if logical.n() != code.n() {
        return Err(SurgeryError::Input(format!(
            "logical acts on {} qubits, the code has {}",
            logical.n(),
            code.n()
        )));
    }
    if logical.is_identity() {
        return Err(SurgeryError::Input("the logical is the identity".into()));
    }
    if let Some(i) = code.first_anticommuting(logical).at(Stage::Input)? {
        return Err(SurgeryError::NotALogical(i));
    }
    if code.in_group(logical).at(Stage::Input)? {
        return Err(SurgeryError::IsStabilizer);
    }
    Ok(())
}

/// The certified measurement graph exactly as [`deform`] builds it, without
/// attaching anything. For a stabilizer input the graph lives in the X-type
/// frame of the returned reduction.
pub fn prepare_measurement_graph(
    measured: Measured<'_>,
    opts: &DeformOptions,
) -> Result<(MeasurementGraph, Option<XTypeReduction>), SurgeryError> {
    match measured {
        Measured::Css { code, ell } => {
            check_css_input(code, ell)?;
            let mg = build_measurement_graph_css(code, ell).at(Stage::MeasurementGraph)?;
            Ok((augment(mg, &code.to_complex(), opts)?, None))
        }
        Measured::Stabilizer { code, logical } => {
            check_stabilizer_input(code, logical)?;
            let reduction = pauli_to_xtype(code, logical).at(Stage::Reduction)?;
            let mg = build_measurement_graph(&reduction.code, &reduction.ell)
                .at(Stage::MeasurementGraph)?;
            let mg = augment(mg, &z_shadow(&reduction.code), opts)?;
            Ok((mg, Some(reduction)))
        }
    }
}

/// `d ↦ ⌈min(h, 1)·d⌉` for the certified value `h` (a lower bound when the
/// certificate is spectral). A single vertex has no cuts, so the bound is
/// `d` itself.
fn expansion_bound(cert: Option<&CheegerCertificate>) -> impl Fn(usize) -> usize {
    let cert = cert.copied();
    move |d| match cert {
        None => d,
        Some(CheegerCertificate { exact: Some(h), .. }) => {
            let h = h.min(Ratio::from_integer(1));
            (d as u64 * h.numer()).div_ceil(*h.denom()) as usize
        }
        Some(c) => (c.capped() * d as f64 - 1e-9).ceil().max(0.0) as usize,
    }
}

fn cheeger_report(mg: &MeasurementGraph) -> CheegerReport {
    match mg.certificate() {
        None => CheegerReport {
            method: "trivial".into(),
            value: None,
            exact: None,
        },
        Some(c) => CheegerReport {
            method: match c.method {
                CheegerMethod::Exact => "exact",
                CheegerMethod::Spectral => "spectral",
            }
            .into(),
            value: Some(c.value),
            exact: c.exact.map(|r| r.to_string()),
        },
    }
}

fn finish(out: DeformedCode, strict: bool) -> Result<DeformedCode, SurgeryError> {
    if strict {
        let failures = out.audit.failures();
        if !failures.is_empty() {
            return Err(SurgeryError::Strict(failures));
        }
    }
    Ok(out)
}

/// Runs the pipeline for whichever kind of logical is given.
pub fn deform(measured: Measured<'_>, opts: &DeformOptions) -> Result<DeformedCode, SurgeryError> {
    match measured {
        Measured::Css { code, ell } => deform_css(code, ell, opts),
        Measured::Stabilizer { code, logical } => deform_stabilizer(code, logical, opts),
    }
}

/// Measures `X(ℓ)` in a CSS code.
pub fn deform_css(
    code: &CssCode,
    ell: &F2Vector,
    opts: &DeformOptions,
) -> Result<DeformedCode, SurgeryError> {
    let (mg, _) = prepare_measurement_graph(Measured::Css { code, ell }, opts)?;
    let data = code.to_complex();
    let cone = cellulated_cone_with(mg.graph(), opts.variant).at(Stage::Cone)?;
    let attachment = build_attachment(&cone, &mg, &data)?;
    let ancilla = prefixed(&cone.complex).at(Stage::MappingCone)?;
    let complex = mapping_cone(&data, &ancilla, &attachment.cone_map()).at(Stage::MappingCone)?;
    let mut out = DeformedCode {
        form: DeformedForm::Css(complex),
        provenance: Provenance::new(&data, &cone.complex),
        measurement_graph: mg,
        cone,
        attachment,
        reduction: None,
        audit: placeholder(),
    };
    out.audit = verify_deformed(&out, Measured::Css { code, ell }, &opts.audit);
    finish(out, opts.strict)
}

/// The deformed generators in the X-type frame.
fn assemble(
    reduced: &StabilizerCode,
    cone: &CellComplex,
    maps: &AttachmentMaps,
) -> Result<Vec<PauliOp>, CodeError> {
    let n = reduced.n();
    let total = n + cone.dim(1);
    let edges_of_check = maps.g1.row_supports();
    let edges_at_vertex = cone.d1().row_supports();
    let shifted = |es: &[usize]| es.iter().map(|&e| n + e).collect::<Vec<_>>();
    let mut gens = Vec::with_capacity(reduced.generators().len() + cone.dim(0) + cone.dim(2));
    for (i, g) in reduced.generators().iter().enumerate() {
        let z = g
            .z()
            .support()
            .iter()
            .copied()
            .chain(shifted(&edges_of_check[i]));
        gens.push(PauliOp::new(
            g.x().padded(total)?,
            F2Vector::from_support(total, z)?,
        )?);
    }
    for (v, edges) in edges_at_vertex.iter().enumerate() {
        let x = maps.g0.column(v).iter().copied().chain(shifted(edges));
        gens.push(PauliOp::x_type(F2Vector::from_support(total, x)?));
    }
    for f in 0..cone.dim(2) {
        gens.push(PauliOp::z_type(F2Vector::from_support(
            total,
            shifted(cone.d2().column(f)),
        )?));
    }
    Ok(gens)
}

/// Measures an arbitrary Pauli logical of a stabilizer code: reduce it to
/// `X(ℓ)` by local Cliffords, attach the cone in that frame (each data
/// generator gains `Z` on the edges of its overlap pairs), and conjugate the
/// data qubits back.
pub fn deform_stabilizer(
    code: &StabilizerCode,
    logical: &PauliOp,
    opts: &DeformOptions,
) -> Result<DeformedCode, SurgeryError> {
    let (mg, reduction) = prepare_measurement_graph(Measured::Stabilizer { code, logical }, opts)?;
    let reduction = reduction.expect("stabilizer inputs are always reduced");
    let data = z_shadow(&reduction.code);
    let cone = cellulated_cone_with(mg.graph(), opts.variant).at(Stage::Cone)?;
    let attachment = build_attachment(&cone, &mg, &data)?;
    let gens = assemble(&reduction.code, &cone.complex, &attachment).at(Stage::Assembly)?;
    let framed = StabilizerCode::new(code.n() + cone.complex.dim(1), gens).at(Stage::Assembly)?;
    let restored = reduction.restore(&framed).at(Stage::Assembly)?;
    let mut out = DeformedCode {
        form: DeformedForm::Stabilizer(restored),
        provenance: Provenance {
            data: [0, code.n(), code.generators().len()],
            ancilla: [
                cone.complex.dim(0),
                cone.complex.dim(1),
                cone.complex.dim(2),
            ],
        },
        measurement_graph: mg,
        cone,
        attachment,
        reduction: Some(reduction),
        audit: placeholder(),
    };
    out.audit = verify_deformed(&out, Measured::Stabilizer { code, logical }, &opts.audit);
    finish(out, opts.strict)
}

fn placeholder() -> AuditReport {
    AuditReport {
        schema: 1,
        kind: CodeKind::Css,
        n_before: 0,
        n_after: 0,
        k_before: 0,
        k_after: None,
        complex_ok: false,
        chain_map_ok: false,
        chain_map_failures: Vec::new(),
        logical_is_stabilizer: false,
        stabilizer_witness: None,
        bases_restored: None,
        css_detected: None,
        weights: WeightsReport::new(&[]),
        homology: None,
        distance: DistanceReport::skipped(0, "not audited"),
        cheeger: CheegerReport {
            method: "none".into(),
            value: None,
            exact: None,
        },
    }
}

/// Audits a deformed code against the data code and the measured logical,
/// using the maps stored in `m` (so a corrupted map is reported, not
/// rebuilt). Never fails: every problem is a field of the report.
pub fn verify_deformed(
    m: &DeformedCode,
    measured: Measured<'_>,
    opts: &AuditOptions,
) -> AuditReport {
    match (&m.form, measured) {
        (DeformedForm::Css(complex), Measured::Css { code, ell }) => {
            audit_css(m, complex, code, ell, opts)
        }
        (DeformedForm::Stabilizer(out), Measured::Stabilizer { code, logical }) => {
            audit_stabilizer(m, out, code, logical, opts)
        }
        _ => {
            let mut r = placeholder();
            r.chain_map_failures = vec!["input kind does not match the deformed code".into()];
            r
        }
    }
}

fn audit_css(
    m: &DeformedCode,
    complex: &CellComplex,
    code: &CssCode,
    ell: &F2Vector,
    opts: &AuditOptions,
) -> AuditReport {
    let data = code.to_complex();
    let cone = &m.cone.complex;
    let mut report = placeholder();
    report.kind = CodeKind::Css;
    report.n_before = code.n();
    report.n_after = complex.dim(1);
    report.k_before = code.k();
    report.complex_ok = verify_complex(complex);
    report.cheeger = cheeger_report(&m.measurement_graph);

    let mut failures = Vec::new();
    match m.measurement_graph.graph().to_complex(None) {
        Ok(graph) => match m.attachment.check(&graph, cone, &data) {
            Ok(c) => failures.extend(c.failures().into_iter().map(String::from)),
            Err(e) => failures.push(e.to_string()),
        },
        Err(e) => failures.push(e.to_string()),
    }
    let rebuilt = prefixed(cone).and_then(|a| mapping_cone(&data, &a, &m.attachment.cone_map()));
    match rebuilt {
        Ok(c) if &c == complex => {}
        Ok(_) => failures.push("complex differs from the mapping cone of g".into()),
        Err(e) => failures.push(e.to_string()),
    }
    report.chain_map_ok = failures.is_empty();
    report.chain_map_failures = failures;

    let dw = weight_audit(&data);
    let (w_z, q_z, q_x, w_x) = (dw.w21, dw.q21, dw.w10, dw.q10);
    let p_max = m.attachment.f1.row_weights().into_iter().max().unwrap_or(0);
    let mw = weight_audit(complex);
    report.weights = WeightsReport::new(&[
        ("w21", mw.w21, (w_z + p_max).max(5)),
        ("q21", mw.q21, 5 + w_z * q_z),
        ("w10", mw.w10, (q_x + 1).max(2)),
        ("q10", mw.q10, w_x.max(10 + w_z * q_z)),
    ]);

    if !report.complex_ok {
        report.distance = DistanceReport::skipped(opts.distance_cap, "not a complex");
        return report;
    }
    report.homology = Some(HomologyReport {
        data: homology_dims(&data),
        cone: homology_dims(cone),
        deformed: homology_dims(complex),
    });
    let deformed = match CssCode::from_complex(complex) {
        Ok(c) => c,
        Err(_) => return report,
    };
    report.k_after = Some(deformed.k());
    if let Ok(padded) = ell.padded(deformed.n()) {
        if let Ok(Some(w)) = deformed.hx().transpose().solve(&padded) {
            report.logical_is_stabilizer = true;
            report.stabilizer_witness = Some(w.support().to_vec());
        }
    }
    report.distance = distance_report(
        code,
        &deformed,
        Side::X,
        expansion_bound(m.measurement_graph.certificate()),
        opts,
    );
    report
}

fn all_commute(code: &StabilizerCode) -> bool {
    let gens = code.generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes(b).unwrap_or(false)))
}

fn audit_stabilizer(
    m: &DeformedCode,
    out: &StabilizerCode,
    code: &StabilizerCode,
    logical: &PauliOp,
    opts: &AuditOptions,
) -> AuditReport {
    let n = code.n();
    let mut report = placeholder();
    report.kind = CodeKind::Stabilizer;
    report.n_before = n;
    report.n_after = out.n();
    report.k_before = code.k();
    report.complex_ok = all_commute(out);
    report.cheeger = cheeger_report(&m.measurement_graph);

    let mut failures = Vec::new();
    match &m.reduction {
        None => failures.push("no X-type reduction recorded".into()),
        Some(red) => {
            let shadow = z_shadow(&red.code);
            match m.measurement_graph.graph().to_complex(None) {
                Ok(graph) => match m.attachment.check(&graph, &m.cone.complex, &shadow) {
                    Ok(c) => failures.extend(c.failures().into_iter().map(String::from)),
                    Err(e) => failures.push(e.to_string()),
                },
                Err(e) => failures.push(e.to_string()),
            }
            let expected = assemble(&red.code, &m.cone.complex, &m.attachment)
                .and_then(|g| StabilizerCode::new(out.n(), g))
                .and_then(|c| red.restore(&c));
            match expected {
                Ok(e) if e.generators() == out.generators() => {}
                Ok(_) => failures.push("generators differ from those the maps define".into()),
                Err(e) => failures.push(e.to_string()),
            }
        }
    }
    report.chain_map_ok = failures.is_empty();
    report.chain_map_failures = failures;

    let data_gens = code.generators().len();
    let restored = out.generators().len() >= data_gens
        && code
            .generators()
            .iter()
            .zip(out.generators())
            .all(|(a, b)| &b.restricted(n) == a)
        && (0..m.cone.complex.dim(0)).all(|v| {
            let data_part = out.generators()[data_gens + v].restricted(n);
            let mut want = PauliOp::identity(n);
            for &q in m.attachment.g0.column(v) {
                want = want.with(q, logical.get(q));
            }
            data_part == want
        });
    report.bases_restored = Some(restored);
    report.css_detected = Some(out.as_css().is_some());

    let support_weight = |g: &PauliOp| g.weight();
    let max_weight =
        |c: &StabilizerCode| c.generators().iter().map(support_weight).max().unwrap_or(0);
    let max_degree = |c: &StabilizerCode| {
        let mut deg = vec![0usize; c.n()];
        for g in c.generators() {
            for q in g.support() {
                deg[q] += 1;
            }
        }
        deg.into_iter().max().unwrap_or(0)
    };
    let shadow = m
        .reduction
        .as_ref()
        .map(|r| weight_audit(&z_shadow(&r.code)))
        .unwrap_or_else(|| weight_audit(&z_shadow(code)));
    let wq = shadow.w21 * shadow.q21;
    let p_max = m.attachment.f1.row_weights().into_iter().max().unwrap_or(0);
    report.weights = WeightsReport::new(&[
        (
            "generator_weight",
            max_weight(out),
            (max_weight(code) + p_max).max(5).max(10 + wq),
        ),
        (
            "qubit_degree",
            max_degree(out),
            (max_degree(code) + 1).max(7 + wq),
        ),
    ]);

    report.k_after = Some(out.k());
    if let Ok(p) = logical.padded(out.n()) {
        let solved = out.symplectic_matrix().transpose().solve(&p.symplectic());
        if let Ok(Some(w)) = solved {
            report.logical_is_stabilizer = true;
            report.stabilizer_witness = Some(w.support().to_vec());
        }
    }

    let measured_side = if logical.is_x_type() {
        Some(Side::X)
    } else if logical.is_z_type() {
        Some(Side::Z)
    } else {
        None
    };
    report.distance = match (code.as_css(), out.as_css(), measured_side) {
        (Some(before), Some(after), Some(side)) => distance_report(
            &before,
            &after,
            side,
            expansion_bound(m.measurement_graph.certificate()),
            opts,
        ),
        _ => DistanceReport::skipped(opts.distance_cap, "non-CSS code"),
    };
    report
}
