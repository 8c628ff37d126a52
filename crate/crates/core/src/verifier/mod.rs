//! Identity registry, sweeps and reports.
//!
//! Every registered identity pairs a direct computation (left-hand side) with
//! a closed form (right-hand side). A sweep evaluates both at every
//! `(identity, params, n)` point and records an exact verdict; mismatches
//! carry both values as a witness. There is no tolerance anywhere.

pub mod expectations;
pub mod registry;
pub mod report;
pub mod sweep;

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value as Json};

use crate::dual::DualElem;
use crate::dual_horadam::DualOct;
use crate::horadam::HoradamParams;
use crate::scalar::{fmt_rat, BigRat};

pub use expectations::{Domain, Drift, DriftReport, Expectations};
pub use registry::{builtin, find, Identity, Source};
pub use report::{render, Format};
pub use sweep::{judge, run_sweep, ParamGrid, PointContext, SweepConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    Inapplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An exact value on either side of an identity.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Value {
    Rat(BigRat),
    Oct(crate::Octonion<BigRat>),
    DualRat(DualElem<BigRat>),
    DualOct(DualOct),
    /// A closed form that kept a nonzero `√D` component.
    Irrational(String),
}

impl Value {
    pub fn to_json(&self) -> Json {
        let oct = |o: &crate::Octonion<BigRat>| Json::Array(o.c.iter().map(|x| Json::String(fmt_rat(x))).collect());
        match self {
            Value::Rat(x) => Json::String(fmt_rat(x)),
            Value::Oct(o) => oct(o),
            Value::DualRat(d) => json!({ "re": fmt_rat(&d.re), "du": fmt_rat(&d.du) }),
            Value::DualOct(d) => json!({ "re": oct(&d.re), "du": oct(&d.du) }),
            Value::Irrational(s) => json!({ "irrational": s }),
        }
    }

    pub fn is_rational(&self) -> bool {
        !matches!(self, Value::Irrational(_))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rat(x) => write!(f, "{x}"),
            Value::Oct(o) => write!(f, "{o}"),
            Value::DualRat(d) => write!(f, "{d}"),
            Value::DualOct(d) => write!(f, "{d}"),
            Value::Irrational(s) => write!(f, "irrational: {s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub identity_id: String,
    pub params: HoradamParams,
    pub n: u64,
    pub status: Status,
    /// Present iff `status == Mismatch`.
    pub witness: Option<Witness>,
    /// The violated precondition, present iff `status == Inapplicable`.
    pub reason: Option<String>,
}

impl Verdict {
    /// `"a,b,p,q@n"`.
    pub fn point_key(&self) -> String {
        point_key(&self.params, self.n)
    }
}

pub fn point_key(params: &HoradamParams, n: u64) -> String {
    format!("{}@{}", params.key(), n)
}
