//! Registry of dilogarithm identities, closed forms and ladders, each paired with a
//! residual evaluator (left side minus right side) and a source anchor.

mod entries;
mod terms;
mod verify;

#[cfg(test)]
mod tests;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::ComplexValue;

pub use verify::{verify_all, verify_entry, Status, VerificationReport, VerifyOptions};

/// Identity group, printed as `G1` … `G14`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Group(pub u8);

impl Group {
    pub const ALL: [Group; 14] = [
        Group(1), Group(2), Group(3), Group(4), Group(5), Group(6), Group(7),
        Group(8), Group(9), Group(10), Group(11), Group(12), Group(13), Group(14),
    ];

    pub fn title(self) -> &'static str {
        match self.0 {
            1 => "foundations",
            2 => "generating identities",
            3 => "classical identities",
            4 => "golden-ratio closed forms",
            5 => "Ramanujan-type identities",
            6 => "cubic golden-ratio connections",
            7 => "Pisot-number ladders",
            8 => "trinomial constants and N-step ladders",
            9 => "complex domain",
            10 => "forms of Li2(-1/2)",
            11 => "area ratios, medians and inverse pairs",
            12 => "scale factor",
            13 => "applications",
            _ => "solids of revolution and curvature",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}", self.0)
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n: u8 = s
            .strip_prefix(['G', 'g'])
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| Error::Domain(format!("unknown group {s:?}, expected G1..G14")))?;
        if (1..=14).contains(&n) {
            Ok(Group(n))
        } else {
            domain(format!("unknown group {s:?}, expected G1..G14"))
        }
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    ClosedForm,
    Parametric,
    /// A limiting statement checked at a far-out parameter value.
    Limit,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sampling {
    Linear,
    Log,
    /// A fixed list of values; no random draws.
    Points(&'static [f64]),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamDomain {
    pub name: &'static str,
    pub lo: f64,
    pub hi: f64,
    pub sampling: Sampling,
    /// Grid points along this axis.
    pub count: usize,
}

impl ParamDomain {
    pub fn linear(name: &'static str, lo: f64, hi: f64) -> Self {
        ParamDomain { name, lo, hi, sampling: Sampling::Linear, count: 32 }
    }

    pub fn log(name: &'static str, lo: f64, hi: f64) -> Self {
        ParamDomain { name, lo, hi, sampling: Sampling::Log, count: 32 }
    }

    pub fn points(name: &'static str, values: &'static [f64]) -> Self {
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        ParamDomain { name, lo, hi, sampling: Sampling::Points(values), count: values.len() }
    }

    pub fn with_count(mut self, count: usize) -> Self {
        self.count = count;
        self
    }

    pub fn contains(&self, v: f64) -> bool {
        match self.sampling {
            Sampling::Points(vals) => vals.contains(&v),
            _ => v >= self.lo && v <= self.hi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Anchor {
    /// Short descriptive label of where the identity lives.
    pub section: &'static str,
    /// Verbatim phrase from the source text near the identity.
    pub quote: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Holds,
    /// Printed form is suspected or known to contain a typo.
    Flagged,
}

pub type ResidualFn = fn(&[f64]) -> Result<ComplexValue>;

#[derive(Clone, Serialize)]
pub struct IdentityEntry {
    pub id: &'static str,
    pub group: Group,
    pub kind: Kind,
    pub params: Vec<ParamDomain>,
    #[serde(skip)]
    pub residual: ResidualFn,
    pub anchor: Anchor,
    pub expected: Expected,
    /// Entry-specific tolerance that replaces the requested one when larger
    /// (printed decimals, limits evaluated at a finite point).
    pub tol_floor: Option<f64>,
    /// Branch convention for Li₂ on (1, ∞) when the entry depends on it.
    pub convention: Option<&'static str>,
    pub note: Option<&'static str>,
}

impl fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("group", &self.group)
            .field("kind", &self.kind)
            .field("params", &self.params)
            .field("anchor", &self.anchor)
            .field("expected", &self.expected)
            .finish()
    }
}

impl IdentityEntry {
    pub(crate) fn closed(id: &'static str, group: u8, anchor: (&'static str, &'static str), f: ResidualFn) -> Self {
        IdentityEntry {
            id,
            group: Group(group),
            kind: Kind::ClosedForm,
            params: Vec::new(),
            residual: f,
            anchor: Anchor { section: anchor.0, quote: anchor.1 },
            expected: Expected::Holds,
            tol_floor: None,
            convention: None,
            note: None,
        }
    }

    pub(crate) fn param(
        id: &'static str,
        group: u8,
        anchor: (&'static str, &'static str),
        params: Vec<ParamDomain>,
        f: ResidualFn,
    ) -> Self {
        IdentityEntry { kind: Kind::Parametric, params, ..Self::closed(id, group, anchor, f) }
    }

    pub(crate) fn limit(mut self, tol: f64) -> Self {
        self.kind = Kind::Limit;
        self.tol_floor = Some(tol);
        self
    }

    pub(crate) fn tol_floor(mut self, tol: f64) -> Self {
        self.tol_floor = Some(tol);
        self
    }

    pub(crate) fn flagged(mut self, note: &'static str) -> Self {
        self.expected = Expected::Flagged;
        self.note = Some(note);
        self
    }

    pub(crate) fn lower_lip(mut self) -> Self {
        self.convention = Some("lower-lip");
        self
    }

    pub fn is_fixed(&self) -> bool {
        self.params.is_empty()
    }
}

/// Residual of `entry` at `params` (one value per declared parameter, in order).
pub fn residual(entry: &IdentityEntry, params: &[f64]) -> Result<ComplexValue> {
    if params.len() != entry.params.len() {
        return domain(format!(
            "{} takes {} parameter(s), got {}",
            entry.id,
            entry.params.len(),
            params.len()
        ));
    }
    for (d, &v) in entry.params.iter().zip(params) {
        if !v.is_finite() || !d.contains(v) {
            return domain(format!("{}: {} = {v} outside [{}, {}]", entry.id, d.name, d.lo, d.hi));
        }
    }
    (entry.residual)(params)
}

/// Every built-in entry, sorted by id.
pub fn builtin_catalog() -> &'static [IdentityEntry] {
    static CATALOG: OnceLock<Vec<IdentityEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut all = entries::all();
        all.sort_by(|a, b| a.id.cmp(b.id));
        all
    })
}

pub fn find_entry(id: &str) -> Option<&'static IdentityEntry> {
    builtin_catalog().iter().find(|e| e.id == id)
}
