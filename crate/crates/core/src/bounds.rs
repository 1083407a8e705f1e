//! Exact-rational evaluation of code-size, distance and list-size bounds.
//!
//! Each function returns a [`BoundReport`]. A bound whose hypothesis fails is
//! still a successful call: the report says why and carries no value. Errors
//! are reserved for inputs outside the statement altogether (a non-local ring
//! for the overweight Plotkin bound, `ρ > γ` for Johnson, ...).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::geometry::ball_volume_overweight;
use crate::rational::{self, int, Rational, RationalRepr};
use crate::ring::{prime_power, FiniteRing};
use crate::weights::eta;
use crate::{Error, Result};

/// What a bound constrains, which fixes how the integer corollary is rounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// `|C| ≤ value`; rounded down.
    SizeUpper,
    /// Some code has `|C| ≥ value`; rounded up.
    SizeLower,
    /// `d ≤ value`; rounded down.
    DistanceUpper,
    /// At most `value` codewords in any ball; rounded down.
    ListSize,
}

impl BoundKind {
    pub fn relation(&self) -> &'static str {
        match self {
            BoundKind::SizeUpper => "M ≤",
            BoundKind::SizeLower => "M ≥",
            BoundKind::DistanceUpper => "d ≤",
            BoundKind::ListSize => "L =",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applicability {
    Applicable,
    HypothesisFailed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub name: &'static str,
    pub kind: BoundKind,
    /// Parameter name → rendered exact value; sorted for stable output.
    pub params: BTreeMap<String, String>,
    pub applicability: Applicability,
    pub value: Option<Rational>,
    pub integer_bound: Option<BigInt>,
    pub notes: Vec<String>,
}

impl BoundReport {
    fn new(name: &'static str, kind: BoundKind) -> Self {
        BoundReport {
            name,
            kind,
            params: BTreeMap::new(),
            applicability: Applicability::Applicable,
            value: None,
            integer_bound: None,
            notes: Vec::new(),
        }
    }

    fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    fn rparam(self, key: &str, value: &Rational) -> Self {
        let rendered = rational::render(value);
        self.param(key, rendered)
    }

    fn with_value(mut self, value: Rational) -> Self {
        self.integer_bound = Some(match self.kind {
            BoundKind::SizeLower => rational::ceil(&value),
            _ => rational::floor(&value),
        });
        self.value = Some(value);
        self.applicability = Applicability::Applicable;
        self
    }

    fn failed(mut self, reason: impl Into<String>) -> Self {
        self.applicability = Applicability::HypothesisFailed(reason.into());
        self.value = None;
        self.integer_bound = None;
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// A placeholder row for a bound that could not be evaluated at all.
    pub fn unavailable(name: &'static str, kind: BoundKind, reason: impl Into<String>) -> Self {
        BoundReport::new(name, kind).failed(reason)
    }

    pub fn is_applicable(&self) -> bool {
        self.applicability == Applicability::Applicable
    }

    pub fn reason(&self) -> Option<&str> {
        match &self.applicability {
            Applicability::Applicable => None,
            Applicability::HypothesisFailed(r) => Some(r),
        }
    }

    /// `M ≤ 16/5 (3)` or `n/a (d ≤ nη)`.
    pub fn summary(&self) -> String {
        match (&self.value, &self.integer_bound) {
            (Some(v), Some(i)) if v.is_integer() => format!("{} {}", self.kind.relation(), i),
            (Some(v), Some(i)) => {
                format!("{} {} ({})", self.kind.relation(), rational::render(v), i)
            }
            _ => format!("n/a ({})", self.reason().unwrap_or("not applicable")),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(BoundReportJson::from(self)).expect("report serializes")
    }
}

#[derive(Serialize)]
struct BoundReportJson<'a> {
    name: &'a str,
    kind: BoundKind,
    params: &'a BTreeMap<String, String>,
    applicable: bool,
    reason: Option<&'a str>,
    value: Option<RationalRepr>,
    integer_bound: Option<String>,
    notes: &'a [String],
}

impl<'a> From<&'a BoundReport> for BoundReportJson<'a> {
    fn from(r: &'a BoundReport) -> Self {
        BoundReportJson {
            name: r.name,
            kind: r.kind,
            params: &r.params,
            applicable: r.is_applicable(),
            reason: r.reason(),
            value: r.value.as_ref().map(RationalRepr::from),
            integer_bound: r.integer_bound.as_ref().map(|i| i.to_string()),
            notes: &r.notes,
        }
    }
}

impl Serialize for BoundReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BoundReportJson::from(self).serialize(s)
    }
}

fn need_positive_length(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: "0".into(),
            range: "[1, ∞)".into(),
        });
    }
    Ok(())
}

/// Classical Plotkin bound over `F_q` with the Hamming distance:
/// `M ≤ d / (d − (q−1)n/q)` when `d > (q−1)n/q`.
pub fn plotkin_field(q: u64, n: usize, d: usize) -> Result<BoundReport> {
    need_positive_length(n)?;
    if prime_power(q).is_none() {
        return Err(Error::InvalidArgument(format!(
            "q = {q} is not a prime power"
        )));
    }
    if d > n {
        return Err(Error::OutOfRange {
            name: "d",
            value: d.to_string(),
            range: format!("[0, {n}]"),
        });
    }
    let threshold = rational::ratio((q as i64 - 1) * n as i64, q as i64);
    let d = int(d as i64);
    let report = BoundReport::new("plotkin_field", BoundKind::SizeUpper)
        .param("q", q)
        .param("n", n)
        .rparam("d", &d);
    Ok(if d > threshold {
        let value = &d / (&d - threshold);
        report.with_value(value)
    } else {
        report.failed("d ≤ (q−1)n/q")
    })
}

/// Plotkin bound for a homogeneous weight of average `γ`: `M ≤ d / (d − γn)` when `d > γn`.
pub fn plotkin_homogeneous(gamma: &Rational, n: usize, d: &Rational) -> Result<BoundReport> {
    need_positive_length(n)?;
    if !gamma.is_positive() {
        return Err(Error::OutOfRange {
            name: "gamma",
            value: rational::render(gamma),
            range: "(0, ∞)".into(),
        });
    }
    let gn = gamma * int(n as i64);
    let report = BoundReport::new("plotkin_homogeneous", BoundKind::SizeUpper)
        .rparam("gamma", gamma)
        .param("n", n)
        .rparam("d", d);
    Ok(if *d > gn {
        report.with_value(d / (d - gn))
    } else {
        report.failed("d ≤ γn")
    })
}

/// Plotkin bound for the overweight on a local ring with `|J| ≥ 2`:
/// `M ≤ d / (d − nη)` when `d > nη`, with `η = 2(1 − 1/|J|)`.
pub fn plotkin_overweight(ring: &FiniteRing, n: usize, d: usize) -> Result<BoundReport> {
    need_positive_length(n)?;
    let eta = eta(ring)?;
    let n_eta = &eta * int(n as i64);
    let d = int(d as i64);
    let report = BoundReport::new("plotkin_overweight", BoundKind::SizeUpper)
        .param("ring", ring.name())
        .rparam("eta", &eta)
        .param("n", n)
        .rparam("d", &d);
    Ok(if d > n_eta {
        report.with_value(&d / (&d - n_eta))
    } else {
        report.failed("d ≤ nη")
    })
}

/// Distance form of the overweight Plotkin bound: `d ≤ Mnη / (M − 1)` for any `M ≥ 2`.
pub fn plotkin_distance_corollary(ring: &FiniteRing, n: usize, m: usize) -> Result<BoundReport> {
    need_positive_length(n)?;
    if m < 2 {
        return Err(Error::OutOfRange {
            name: "M",
            value: m.to_string(),
            range: "[2, ∞)".into(),
        });
    }
    let eta = eta(ring)?;
    let m_q = int(m as i64);
    let value = &m_q * int(n as i64) * &eta / (&m_q - int(1));
    Ok(
        BoundReport::new("plotkin_distance_corollary", BoundKind::DistanceUpper)
            .param("ring", ring.name())
            .rparam("eta", &eta)
            .param("n", n)
            .param("M", m)
            .with_value(value),
    )
}

/// Sphere-packing bound for the overweight: `|C| ≤ |R|^n / |B_e(0)|` with
/// `e = ⌊(d−1)/2⌋`.
pub fn sphere_packing_overweight(ring: &FiniteRing, n: usize, d: usize) -> Result<BoundReport> {
    need_positive_length(n)?;
    if d == 0 {
        return Err(Error::OutOfRange {
            name: "d",
            value: "0".into(),
            range: "[1, ∞)".into(),
        });
    }
    let e = (d - 1) / 2;
    let volume = ball_volume_overweight(ring, n, e);
    let space = BigInt::from(ring.order()).pow(n as u32);
    let mut report = BoundReport::new("sphere_packing_overweight", BoundKind::SizeUpper)
        .param("ring", ring.name())
        .param("n", n)
        .param("d", d)
        .param("e", e)
        .param("ball_volume", &volume)
        .with_value(Rational::new(space, BigInt::from(volume)));
    if d.is_multiple_of(2) {
        report = report.note(format!(
            "even d: packing radius taken as e = ⌊(d−1)/2⌋ = {e}"
        ));
    }
    Ok(report)
}

/// Gilbert–Varshamov bound for the overweight: some code with minimum
/// distance at least `d` has `|C| ≥ |R|^n / |B_{d−1}(0)|`, for `d ∈ [0, 2n]`.
pub fn gilbert_varshamov_overweight(ring: &FiniteRing, n: usize, d: usize) -> Result<BoundReport> {
    need_positive_length(n)?;
    if d > 2 * n {
        return Err(Error::OutOfRange {
            name: "d",
            value: d.to_string(),
            range: format!("[0, {}]", 2 * n),
        });
    }
    let space = BigInt::from(ring.order()).pow(n as u32);
    let report = BoundReport::new("gilbert_varshamov_overweight", BoundKind::SizeLower)
        .param("ring", ring.name())
        .param("n", n)
        .param("d", d);
    if d == 0 {
        return Ok(report
            .param("ball_volume", 0)
            .with_value(Rational::from_integer(space))
            .note("d = 0: every code qualifies, so the whole space R^n attains the bound"));
    }
    let volume = ball_volume_overweight(ring, n, d - 1);
    Ok(report
        .param("ball_volume", &volume)
        .with_value(Rational::new(space, BigInt::from(volume))))
}

/// Which sufficient conditions of the homogeneous Johnson bound hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JohnsonConditions {
    /// `γn(d − γn) ≥ 1`.
    pub first: bool,
    /// `A = (γ − d/n)γ + 1/n²`; the second condition needs `A ≥ 0`.
    pub discriminant: Rational,
    /// `ρ ≤ γ − √A`, decided as `(γ − ρ)² ≥ A`; `None` when `A < 0`.
    pub second: Option<bool>,
}

impl JohnsonConditions {
    pub fn any(&self) -> bool {
        self.first || self.second == Some(true)
    }

    pub fn label(&self) -> &'static str {
        match (self.first, self.second == Some(true)) {
            (true, true) => "i+ii",
            (true, false) => "i",
            (false, true) => "ii",
            (false, false) => "none",
        }
    }
}

fn johnson_inputs(n: usize, d: &Rational, gamma: &Rational, rho: &Rational) -> Result<()> {
    need_positive_length(n)?;
    if !gamma.is_positive() {
        return Err(Error::OutOfRange {
            name: "gamma",
            value: rational::render(gamma),
            range: "(0, ∞)".into(),
        });
    }
    if d.is_negative() {
        return Err(Error::OutOfRange {
            name: "d",
            value: rational::render(d),
            range: "[0, ∞)".into(),
        });
    }
    if rho.is_negative() || rho > gamma {
        return Err(Error::OutOfRange {
            name: "rho",
            value: rational::render(rho),
            range: format!("[0, γ] = [0, {}]", rational::render(gamma)),
        });
    }
    Ok(())
}

/// Evaluates both Johnson conditions in exact arithmetic (no square roots).
pub fn johnson_conditions(
    n: usize,
    d: &Rational,
    gamma: &Rational,
    rho: &Rational,
) -> Result<JohnsonConditions> {
    johnson_inputs(n, d, gamma, rho)?;
    let n_q = int(n as i64);
    let gn = gamma * &n_q;
    let first = &gn * (d - &gn) >= int(1);
    let discriminant = (gamma - d / &n_q) * gamma + Rational::one() / (&n_q * &n_q);
    let second = (!discriminant.is_negative()).then(|| {
        let slack = gamma - rho;
        &slack * &slack >= discriminant
    });
    Ok(JohnsonConditions {
        first,
        discriminant,
        second,
    })
}

/// Johnson bound for a homogeneous weight: a code of minimum distance `d` is
/// `(ρ, dγn)` list decodable when `ρ ≤ γ` and either condition holds.
pub fn johnson_homogeneous(
    n: usize,
    d: &Rational,
    gamma: &Rational,
    rho: &Rational,
) -> Result<BoundReport> {
    let conditions = johnson_conditions(n, d, gamma, rho)?;
    let report = BoundReport::new("johnson_homogeneous", BoundKind::ListSize)
        .param("n", n)
        .rparam("d", d)
        .rparam("gamma", gamma)
        .rparam("rho", rho)
        .rparam("A", &conditions.discriminant)
        .param("condition", conditions.label());
    Ok(if conditions.any() {
        report.with_value(d * gamma * int(n as i64))
    } else if conditions.second.is_none() {
        report.failed("γn(d−γn) < 1 and A < 0")
    } else {
        report.failed("γn(d−γn) < 1 and ρ > γ − √A")
    })
}

/// Every overweight bound for `(ring, n, d)`; bounds that cannot be evaluated
/// on this ring become `unavailable` rows.
pub fn all_overweight_bounds(ring: &FiniteRing, n: usize, d: usize) -> Vec<BoundReport> {
    let row = |name, kind, r: Result<BoundReport>| {
        r.unwrap_or_else(|e| BoundReport::unavailable(name, kind, e.to_string()))
    };
    vec![
        row(
            "plotkin_overweight",
            BoundKind::SizeUpper,
            plotkin_overweight(ring, n, d),
        ),
        row(
            "sphere_packing_overweight",
            BoundKind::SizeUpper,
            sphere_packing_overweight(ring, n, d),
        ),
        row(
            "gilbert_varshamov_overweight",
            BoundKind::SizeLower,
            gilbert_varshamov_overweight(ring, n, d),
        ),
    ]
}
