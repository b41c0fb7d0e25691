//! Rational-tangle notation for classic Montesinos links.
//!
//! A link is written `(q_1/p_1, ..., q_n/p_n)`. Fractions are stored
//! exactly as typed: `2/6` stays `2/6`, and numerators may be negative or
//! larger than the denominator. Only `Σq_i` and residues mod `p` are used
//! downstream.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{self, is_odd};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TangleFraction {
    #[serde(with = "crate::exact::int_string")]
    pub q: BigInt,
    #[serde(with = "crate::exact::int_string")]
    pub p: BigInt,
}

impl TangleFraction {
    pub fn new(q: impl Into<BigInt>, p: impl Into<BigInt>) -> Self {
        Self {
            q: q.into(),
            p: p.into(),
        }
    }
}

impl fmt::Display for TangleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.q, self.p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MontesinosLink {
    pub tangles: Vec<TangleFraction>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LinkClass {
    Knot,
    TwoComponentLink,
}

impl MontesinosLink {
    pub fn new(tangles: Vec<TangleFraction>) -> Self {
        Self { tangles }
    }

    /// Convenience constructor for the equal-denominator case.
    pub fn equal_denominator(p: i64, qs: &[i64]) -> Self {
        Self::new(qs.iter().map(|&q| TangleFraction::new(q, p)).collect())
    }

    pub fn n(&self) -> usize {
        self.tangles.len()
    }

    pub fn q_sum(&self) -> BigInt {
        self.tangles.iter().map(|t| &t.q).sum()
    }

    /// The shared denominator, if every tangle has the same one.
    pub fn common_denominator(&self) -> Option<&BigInt> {
        let first = &self.tangles.first()?.p;
        self.tangles
            .iter()
            .all(|t| &t.p == first)
            .then_some(first)
    }
}

impl fmt::Display for MontesinosLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, t) in self.tangles.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for MontesinosLink {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_montesinos(s)
    }
}

/// Parse failure. `position` is a byte offset into the original text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: expected {expected}, found {found}")]
    Syntax {
        position: usize,
        expected: &'static str,
        found: String,
    },
    #[error("denominator {p} at position {position} is less than 2")]
    DenominatorTooSmall { position: usize, p: BigInt },
    #[error("empty tangle list")]
    Empty,
}

impl ParseError {
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { position, .. }
            | ParseError::DenominatorTooSmall { position, .. } => Some(*position),
            ParseError::Empty => None,
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        }
    }

    fn error(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            expected,
            found: self.found(),
        }
    }

    fn expect(&mut self, c: char, expected: &'static str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("digit"));
        }
        Ok(self.text[start..self.pos].parse().expect("ascii digits"))
    }

    fn fraction(&mut self) -> Result<TangleFraction, ParseError> {
        self.skip_ws();
        let negative = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut q = self.digits()?;
        if negative {
            q = -q;
        }
        self.expect('/', "'/'")?;
        self.skip_ws();
        let p_pos = self.pos;
        let p = self.digits()?;
        if p < BigInt::from(2) {
            return Err(ParseError::DenominatorTooSmall { position: p_pos, p });
        }
        Ok(TangleFraction { q, p })
    }
}

/// Parse `(q_1/p_1, ..., q_n/p_n)`. Whitespace is ignored everywhere
/// except inside a number.
pub fn parse_montesinos(text: &str) -> Result<MontesinosLink, ParseError> {
    let mut cur = Cursor { text, pos: 0 };
    cur.expect('(', "'('")?;
    cur.skip_ws();
    if cur.peek() == Some(')') {
        return Err(ParseError::Empty);
    }
    let mut tangles = vec![cur.fraction()?];
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(',') => {
                cur.pos += 1;
                tangles.push(cur.fraction()?);
            }
            Some(')') => {
                cur.pos += 1;
                break;
            }
            _ => return Err(cur.error("',' or ')'")),
        }
    }
    cur.skip_ws();
    if cur.pos != text.len() {
        return Err(cur.error("end of input"));
    }
    Ok(MontesinosLink { tangles })
}

/// Knot iff `Σq_i` is odd. Only meaningful for equal odd denominators.
pub fn component_count(link: &MontesinosLink) -> LinkClass {
    if is_odd(&link.q_sum()) {
        LinkClass::Knot
    } else {
        LinkClass::TwoComponentLink
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NotApplicableReason {
    TooFewTangles { n: usize },
    UnequalDenominators,
    EvenDenominator,
    DenominatorBelowThree,
    ZeroNumeratorSum,
    ThreeTanglesNeedDenominatorFive,
}

impl fmt::Display for NotApplicableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooFewTangles { n } => write!(f, "n = {n}, at least 3 tangles are required"),
            Self::UnequalDenominators => f.write_str("denominators are not all equal"),
            Self::EvenDenominator => f.write_str("common denominator is even"),
            Self::DenominatorBelowThree => f.write_str("common denominator is below 3"),
            Self::ZeroNumeratorSum => {
                f.write_str("numerator sum is zero, so e(W_K) = 0 and the base orbifold is not SL2-tilde")
            }
            Self::ThreeTanglesNeedDenominatorFive => {
                f.write_str("n = 3 needs p >= 5; p = 3 gives a Euclidean base orbifold")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseTag {
    /// `n = 3`, `p >= 5`.
    Case1,
    /// `n > 3`.
    Case2,
    NotApplicable(NotApplicableReason),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApplicabilityReport {
    pub equal_denominators: bool,
    pub p_odd: bool,
    pub p_at_least_3: bool,
    pub case: CaseTag,
}

impl ApplicabilityReport {
    pub fn is_applicable(&self) -> bool {
        !matches!(self.case, CaseTag::NotApplicable(_))
    }
}

/// Decide which branch of the construction applies. Reasons are checked
/// in a fixed order so the reported reason is deterministic.
pub fn validate_theorem_hypotheses(link: &MontesinosLink) -> ApplicabilityReport {
    let common = link.common_denominator();
    let equal_denominators = common.is_some();
    let p_odd = common.is_some_and(is_odd);
    let p_at_least_3 = common.is_some_and(|p| *p >= BigInt::from(3));

    let case = if link.n() < 3 {
        CaseTag::NotApplicable(NotApplicableReason::TooFewTangles { n: link.n() })
    } else if !equal_denominators {
        CaseTag::NotApplicable(NotApplicableReason::UnequalDenominators)
    } else if !p_odd {
        CaseTag::NotApplicable(NotApplicableReason::EvenDenominator)
    } else if !p_at_least_3 {
        CaseTag::NotApplicable(NotApplicableReason::DenominatorBelowThree)
    } else if link.q_sum().is_zero() {
        CaseTag::NotApplicable(NotApplicableReason::ZeroNumeratorSum)
    } else if link.n() == 3 && common.is_some_and(|p| *p < BigInt::from(5)) {
        CaseTag::NotApplicable(NotApplicableReason::ThreeTanglesNeedDenominatorFive)
    } else if link.n() == 3 {
        CaseTag::Case1
    } else {
        CaseTag::Case2
    };

    ApplicabilityReport {
        equal_denominators,
        p_odd,
        p_at_least_3,
        case,
    }
}

/// Every tangle's numerator residue mod `p`, in order.
pub fn residues(link: &MontesinosLink, p: u64) -> Vec<u64> {
    link.tangles
        .iter()
        .map(|t| exact::residue(&t.q, p))
        .collect()
}

/// True if every numerator is non-negative and below its denominator.
pub fn is_reduced_form(link: &MontesinosLink) -> bool {
    link.tangles
        .iter()
        .all(|t| !t.q.is_negative() && t.q < t.p)
}
