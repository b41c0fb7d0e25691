//! The fibration certificate: every fragment of the pipeline plus an
//! overall verdict, serialized to byte-stable JSON.
//!
//! Keys are sorted (the JSON map is ordered) and every number, including
//! counts and signs, is written as a string so that big integers and
//! rationals share one format.

use serde::Serialize;
use serde_json::{json, Value};

use super::gamma::{Gamma, TorusKind};
use super::intersections::{IntersectionRecord, RemarkVerdict};
use super::profile::ProfileReport;
use crate::cover::{ConnectivityReport, CoverTower};
use crate::graph_manifold::{HorizontalSolution, SemibundleReport};
use crate::report::Check;
use crate::seifert::{CoverEulerData, Geometry, SeifertInvariants};
use crate::tangle::{ApplicabilityReport, CaseTag, LinkClass, MontesinosLink};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Everything the certificate aggregates.
#[derive(Clone, Debug)]
pub struct CertificateParts {
    pub link: MontesinosLink,
    pub class: LinkClass,
    pub applicability: ApplicabilityReport,
    pub seifert: SeifertInvariants,
    pub cover_euler: CoverEulerData,
    pub tower: CoverTower,
    pub connectivity: ConnectivityReport,
    pub horizontal: HorizontalSolution,
    pub semibundle: SemibundleReport,
    /// Structural checks on the JSJ graphs and the cross-checked solvers.
    pub graph_checks: Vec<Check>,
    pub profile: ProfileReport,
    pub gamma: Gamma,
    pub records: Vec<IntersectionRecord>,
    pub remarks: Vec<RemarkVerdict>,
}

#[derive(Clone, Debug)]
pub struct FibrationCertificate {
    pub parts: CertificateParts,
    /// Named sub-verdicts in a fixed order.
    pub gates: Vec<Check>,
    pub verdict: Verdict,
    /// Set for two-component links with more than three tangles, where
    /// the link slopes are combined with the four-torus family by analogy.
    pub extrapolated: bool,
}

const ANCHORS: &[(&str, &str)] = &[
    ("applicability", "equal odd denominators p >= 3, nonzero numerator sum, and n = 3 only with p >= 5"),
    ("geometry", "double branched cover is Seifert fibred with nonzero Euler number over a hyperbolic base orbifold"),
    ("cover", "p^2-fold cover of the base orbifold by a smooth surface, through a p-fold sphere orbifold"),
    ("connectivity", "complement of the bands around the core curves is connected"),
    ("graph", "JSJ graph of the cover and of its double, with the sheet-swapping involution"),
    ("semibundle", "horizontal surfaces whose hub slopes carry opposite signs, making a semi-bundle"),
    ("singular_profile", "lifted link arcs cross each block between its two hub tori in alternating directions"),
    ("gamma", "vertical tori along which the semi-bundle fibration is Dehn twisted"),
    ("remark_verdicts", "every arc meets the twisting tori with the sign pattern that lets enough twists make the fibration transverse"),
];

pub fn assemble_certificate(parts: CertificateParts) -> FibrationCertificate {
    let mut gates = Vec::new();
    gates.push(Check::new(
        "applicability",
        parts.applicability.is_applicable(),
        format!("{:?}", parts.applicability.case),
    ));
    gates.push(Check::new(
        "geometry",
        parts.seifert.geometry == Geometry::SL2Tilde,
        format!("{:?}", parts.seifert.geometry),
    ));
    let c = &parts.connectivity;
    gates.push(Check::new(
        "connectivity",
        c.connected && c.witness_connected,
        format!(
            "{} nodes, {} components, witness {}",
            c.nodes,
            c.components,
            if c.witness_connected { "connected" } else { "disconnected" }
        ),
    ));
    let graph_ok = parts.graph_checks.iter().all(|c| c.passed);
    gates.push(Check::new(
        "graph",
        graph_ok,
        format!("{} structural checks", parts.graph_checks.len()),
    ));
    gates.push(Check::new(
        "semibundle",
        parts.semibundle.passed && parts.semibundle.semibundle,
        format!("ε = ({}, {})", parts.horizontal.epsilon1, parts.horizontal.epsilon2),
    ));
    gates.push(Check::new(
        "singular_profile",
        parts.profile.passed,
        format!("{} singular points per annulus", parts.profile.singular_points_per_annulus),
    ));
    gates.push(Check::new("gamma", !parts.gamma.is_empty(), format!("{} tori", parts.gamma.len())));
    let failed: Vec<&str> = parts.remarks.iter().filter(|r| !r.passed).map(|r| r.id.as_str()).collect();
    gates.push(Check::new(
        "remark_verdicts",
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} remarks hold", parts.remarks.len())
        } else {
            format!("failed: {}", failed.join(", "))
        },
    ));
    let verdict = if gates.iter().all(|g| g.passed) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let extrapolated =
        parts.class == LinkClass::TwoComponentLink && parts.applicability.case == CaseTag::Case2;
    FibrationCertificate {
        parts,
        gates,
        verdict,
        extrapolated,
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("certificate fragments serialize")
}

/// Replace every JSON number by its decimal string.
fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(a) => Value::Array(a.into_iter().map(stringify_numbers).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, stringify_numbers(v))).collect()),
        other => other,
    }
}

fn gamma_value(gamma: &Gamma) -> Value {
    Value::Array(
        gamma
            .tori
            .iter()
            .map(|t| {
                let mut v = to_value(t);
                if let TorusKind::LCurve { index } = t.kind {
                    let l = &gamma.l_curves[(index - 1) as usize];
                    v["l_curve"] = json!({
                        "step": l.step,
                        "visits": l.visits,
                        "connectors": l.connectors,
                    });
                }
                v
            })
            .collect(),
    )
}

/// One record with every number as a string; fields are declared in
/// sorted order so the output matches the sorted-map form.
#[derive(Serialize)]
struct RecordJson<'a> {
    arc: ArcJson,
    count: String,
    signs: Vec<String>,
    torus: &'a str,
}

#[derive(Serialize)]
struct ArcJson {
    copy: String,
    i: String,
    k: String,
    sheet: String,
    slot: String,
}

impl<'a> From<&'a IntersectionRecord> for RecordJson<'a> {
    fn from(r: &'a IntersectionRecord) -> Self {
        RecordJson {
            arc: ArcJson {
                copy: r.arc.copy.to_string(),
                i: r.arc.i.to_string(),
                k: r.arc.k.to_string(),
                sheet: r.arc.sheet.to_string(),
                slot: r.arc.slot.to_string(),
            },
            count: r.count.to_string(),
            signs: r.signs.iter().map(|s| s.to_string()).collect(),
            torus: &r.torus,
        }
    }
}

struct Records<'a>(&'a [IntersectionRecord]);

impl Serialize for Records<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(RecordJson::from))
    }
}

/// Top-level document, fields in sorted order. Records are streamed so
/// large certificates never exist as one in-memory tree.
#[derive(Serialize)]
struct Document<'a> {
    anchors: Value,
    applicability: Value,
    connectivity: Value,
    gamma: Value,
    input: Value,
    invariants: Value,
    records: Records<'a>,
    remark_verdicts: Value,
    semibundle: Value,
    singular_profile: Value,
    verdict: Value,
}

impl FibrationCertificate {
    fn document(&self) -> Document<'_> {
        let p = &self.parts;
        let s = |v: Value| stringify_numbers(v);
        Document {
            anchors: ANCHORS
                .iter()
                .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
                .collect::<serde_json::Map<_, _>>()
                .into(),
            applicability: s(json!({
                "report": p.applicability,
                "extrapolated": self.extrapolated,
                "extrapolation_note": if self.extrapolated {
                    "two-component link in the n > 3 case: link-case slope coefficients combined with the four-torus family"
                } else {
                    ""
                },
                "chirality": "β1^j lies on the left of the oriented core curve of band j",
            })),
            connectivity: s(to_value(&p.connectivity)),
            gamma: s(gamma_value(&p.gamma)),
            input: s(json!({
                "notation": p.link.to_string(),
                "tangles": p.link.tangles,
                "p": p.tower.p,
                "n": p.tower.n,
                "class": p.class,
            })),
            invariants: s(json!({
                "seifert": p.seifert,
                "cover_euler": p.cover_euler,
                "cover_tower": p.tower,
            })),
            records: Records(&p.records),
            remark_verdicts: s(to_value(&p.remarks)),
            semibundle: s(json!({
                "solution": p.horizontal,
                "report": p.semibundle,
                "graph_checks": p.graph_checks,
            })),
            singular_profile: s(to_value(&p.profile)),
            verdict: s(json!({
                "overall": self.verdict,
                "gates": self.gates,
            })),
        }
    }

    /// The whole certificate as a JSON tree (fine for small inputs).
    pub fn to_json_value(&self) -> Value {
        to_value(&self.document())
    }

    /// Pretty JSON with a trailing newline, streamed into `w`.
    pub fn write_json<W: std::io::Write>(&self, mut w: W) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut w, &self.document())?;
        w.write_all(b"\n")
    }

    pub fn to_json_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_json(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("utf-8")
    }
}
