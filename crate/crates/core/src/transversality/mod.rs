//! Transversality of the twisted fibration to the lifted link, in the
//! combinatorial model: auxiliary curves `l_1, l_2`, the vertical-torus
//! family `Γ`, signed arc–torus crossings and the resulting certificate.

pub mod certificate;
pub mod gamma;
pub mod intersections;
pub mod lcurves;
pub mod profile;

use thiserror::Error;

pub use certificate::{assemble_certificate, CertificateParts, FibrationCertificate, Verdict};
pub use gamma::{build_gamma, Gamma, TorusKind, VerticalTorusSpec};
pub use intersections::{compute_intersections, verify_sign_remarks, ArcRef, IntersectionRecord, RemarkVerdict};
pub use lcurves::{build_l_curves, fan, Connector, Hand, LCurve, Lane, SegmentKind};
pub use profile::{singular_point_profile, ArcFamily, ProfileReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransversalityError {
    #[error("curves must be reoriented before building the l-curves")]
    NotReoriented,
    #[error("combinatorial model inconsistency: {0}")]
    Model(String),
}
