//! End-to-end certification of one link.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::cover::{self, check_f1_connected, decompose_arcs, reorient_curves, CoverError};
use crate::graph_manifold::{
    build_jsj_graph, compute_boundary_slopes, solve_general, solve_wang_yu, verify_semibundle,
    wang_yu_matrix, BasisChange, GraphError,
};
use crate::report::Check;
use crate::seifert::{self, SeifertError, SeifertInvariants};
use crate::tangle::{
    component_count, validate_theorem_hypotheses, ApplicabilityReport, CaseTag, MontesinosLink,
    NotApplicableReason,
};
use crate::transversality::{
    assemble_certificate, build_gamma, build_l_curves, compute_intersections, singular_point_profile,
    verify_sign_remarks, CertificateParts, FibrationCertificate, TransversalityError,
};

/// Largest denominator the combinatorial model is built for.
pub const MAX_P: usize = 101;
/// Largest number of tangles the combinatorial model is built for.
pub const MAX_N: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("model too large: p = {p}, n = {n} (limits p <= {MAX_P}, n <= {MAX_N})")]
    ModelTooLarge { p: BigInt, n: usize },
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Transversality(#[from] TransversalityError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

#[derive(Clone, Debug)]
pub struct NotApplicable {
    pub reason: NotApplicableReason,
    pub report: ApplicabilityReport,
    /// Present whenever the denominators agree.
    pub seifert: Option<SeifertInvariants>,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Certified(Box<FibrationCertificate>),
    NotApplicable(NotApplicable),
}

pub fn certify(link: &MontesinosLink) -> Result<Outcome, PipelineError> {
    let applicability = validate_theorem_hypotheses(link);
    if let CaseTag::NotApplicable(reason) = &applicability.case {
        return Ok(Outcome::NotApplicable(NotApplicable {
            reason: reason.clone(),
            seifert: seifert::seifert_invariants(link).ok(),
            report: applicability,
        }));
    }
    let p_big = link.common_denominator().expect("gated").clone();
    let n = link.n();
    let p = match p_big.to_usize() {
        Some(p) if p <= MAX_P && n <= MAX_N => p,
        _ => return Err(PipelineError::ModelTooLarge { p: p_big, n }),
    };

    let class = component_count(link);
    let seifert = seifert::seifert_invariants(link)?;
    let cover_euler = seifert::cover_euler_data(link)?;
    let tower = cover::build_cover_tower(link)?;

    let system = cover::build_curve_system(&tower);
    system.check_incidences().map_err(PipelineError::Internal)?;
    let original = decompose_arcs(&system);
    original.check_closed().map_err(PipelineError::Internal)?;
    let arcs = reorient_curves(&original);
    arcs.check_closed().map_err(PipelineError::Internal)?;
    let connectivity = check_f1_connected(&original);

    let basis = BasisChange::for_class(class);
    let e_tilde = &cover_euler.e_tilde;
    let single = build_jsj_graph(p, &basis, e_tilde, false)?;
    let doubled = build_jsj_graph(p, &basis, e_tilde, true)?;
    let general = solve_general(&wang_yu_matrix(&single)?)?;
    let closed = solve_wang_yu(p, &basis.c, &cover_euler.e)?;
    let graph_checks = vec![
        Check::new(
            "doubled vertices",
            doubled.vertex_count() == 2 * p + 2,
            format!("{}", doubled.vertex_count()),
        ),
        Check::new(
            "doubled edges",
            doubled.edge_count() == 4 * p,
            format!("{}", doubled.edge_count()),
        ),
        Check::new(
            "free involution",
            doubled.check_involution(),
            "sheet swap is a fixed-point-free automorphism".to_string(),
        ),
        Check::new(
            "projection",
            doubled.check_projection(&single),
            "doubled graph covers the single graph".to_string(),
        ),
        Check::new(
            "connected",
            single.is_connected() && doubled.is_connected(),
            "both JSJ graphs are connected".to_string(),
        ),
        Check::new(
            "solvers agree",
            general == closed,
            format!(
                "row reduction ({}, {}), closed form ({}, {})",
                general.lambda, general.lambda_bar, closed.lambda, closed.lambda_bar
            ),
        ),
    ];
    let horizontal = compute_boundary_slopes(class, p, &basis, e_tilde, &closed)?;
    let semibundle = verify_semibundle(&horizontal);

    let singular = horizontal
        .singular_points
        .to_usize()
        .ok_or_else(|| PipelineError::Internal("singular point count out of range".into()))?;
    let profile = singular_point_profile(&arcs, class, singular);
    let gamma = build_gamma(&arcs, build_l_curves(&arcs)?)?;
    let records = compute_intersections(&arcs, &gamma);
    let remarks = verify_sign_remarks(&arcs, &gamma, &records);

    Ok(Outcome::Certified(Box::new(assemble_certificate(CertificateParts {
        link: link.clone(),
        class,
        applicability,
        seifert,
        cover_euler,
        tower,
        connectivity,
        horizontal,
        semibundle,
        graph_checks,
        profile,
        gamma,
        records,
        remarks,
    }))))
}
