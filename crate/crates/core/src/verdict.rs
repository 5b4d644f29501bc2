//! The comparison-theorem decision procedure and its report.

use crate::error::{Error, Result};
use crate::gauss_manin::{self, monodromy_info, obstruction_membership, Spectrum, ObstructionVariant, Truncation};
use crate::local::{is_quasihomogeneous_with, milnor_data};
use crate::logder::{log_residue, default_degree_bound, derlog_generators, linear_part};
use crate::poly::{parse_polynomial, Polynomial};
use crate::quasihom::{detect_weights, holland_mond_verdict, HollandMond};
use crate::selfcheck::{checks_for, Check};
use crate::rational::{deserialize_text_opt, format_rational, serialize_text_opt, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    LctHolds,
    LctFails,
    Unknown,
    Smooth,
    QhCoordinateLimit,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::LctHolds => "LCT_HOLDS",
            Verdict::LctFails => "LCT_FAILS",
            Verdict::Unknown => "UNKNOWN",
            Verdict::Smooth => "SMOOTH",
            Verdict::QhCoordinateLimit => "QH_COORDINATE_LIMIT",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionStatus {
    Fired,
    NotFired,
    NotApplicable,
}

impl std::fmt::Display for ConditionStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ConditionStatus::Fired => "fired",
            ConditionStatus::NotFired => "not-fired",
            ConditionStatus::NotApplicable => "not-applicable",
        })
    }
}

impl ConditionStatus {
    fn from_bool(b: bool) -> Self {
        if b {
            ConditionStatus::Fired
        } else {
            ConditionStatus::NotFired
        }
    }
}

/// Obstruction conditions for nonquasihomogeneous germs:
/// (a) no monodromy eigenvalue one, (b) `alpha_1 > 0`,
/// (c) `alpha_1 < 0` and `[u dx]_0 in H_0 + N(C^0)` for a unit `u`,
/// (d) `alpha_1 < 0 = alpha_2` and `[dx]_0 in H_0 + N(C^0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    pub a: ConditionStatus,
    pub b: ConditionStatus,
    pub c: ConditionStatus,
    pub d: ConditionStatus,
}

impl Conditions {
    const NONE: Conditions = Conditions {
        a: ConditionStatus::NotApplicable,
        b: ConditionStatus::NotApplicable,
        c: ConditionStatus::NotApplicable,
        d: ConditionStatus::NotApplicable,
    };

    pub fn fired(&self) -> Vec<char> {
        [('a', self.a), ('b', self.b), ('c', self.c), ('d', self.d)]
            .into_iter()
            .filter(|(_, s)| *s == ConditionStatus::Fired)
            .map(|(c, _)| c)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogderSummary {
    /// each generator as its coefficient list, one polynomial per variable
    pub generators: Vec<Vec<String>>,
    pub cofactors: Vec<String>,
    /// `None` when the generator has a constant coefficient
    pub traces: Vec<Option<String>>,
    pub nilpotent_flags: Vec<Option<bool>>,
    pub residues: Vec<String>,
    pub degree_bound: u32,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LctReport {
    pub schema: u32,
    pub version: String,
    pub input: String,
    pub vars: Vec<String>,
    pub f: String,
    pub mu: usize,
    pub quasihomogeneous: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    pub spectrum: Spectrum,
    #[serde(serialize_with = "serialize_text_opt", deserialize_with = "deserialize_text_opt")]
    pub alpha1: Option<Rational>,
    #[serde(serialize_with = "serialize_text_opt", deserialize_with = "deserialize_text_opt")]
    pub alpha2: Option<Rational>,
    pub monodromy_eigenvalue_one: Option<bool>,
    pub conditions: Conditions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holland_mond: Option<HollandMond>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub logder: Option<LogderSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selfcheck: Option<Vec<Check>>,
    pub verdict: Verdict,
    pub justification: Vec<String>,
    pub notes: Vec<String>,
    pub params: Option<Truncation>,
}

impl LctReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Options {
    pub truncation: Option<usize>,
    pub x_degree: Option<u32>,
    pub degree_bound: Option<u32>,
    pub logder: bool,
    pub selfcheck: bool,
}

impl Options {
    fn start(&self, f: &Polynomial) -> Option<Truncation> {
        if self.truncation.is_none() && self.x_degree.is_none() {
            return None;
        }
        let k = self.truncation.unwrap_or_else(|| gauss_manin::default_truncation(f).k);
        Some(Truncation { k, dx: self.x_degree.unwrap_or_else(|| gauss_manin::dx_for(f, k)) })
    }
}

/// Parses `text` over `vars` and runs [`analyze`].
pub fn analyze_text(text: &str, vars: &[String], opts: &Options) -> Result<LctReport> {
    let f = parse_polynomial(text, vars)?;
    analyze(&f, text.trim(), vars, opts)
}

const NOTE_NORMALIZATION: &str =
    "monodromy logarithm taken as the nilpotent part of t d_t; the factor -2 pi i is dropped";
const NOTE_INDEXING: &str = "spectral numbers are indexed alpha_1 <= alpha_2 <= ... <= alpha_mu";
const NOTE_HM: &str =
    "Holland–Mond degrees are i r - (w_0 + ... + w_n) for 1 <= i <= n - 1, with all n + 1 weights";
const NOTE_COORDS: &str = "logarithmic vector field diagnostics are in the input coordinates";

pub fn analyze(f: &Polynomial, input: &str, vars: &[String], opts: &Options) -> Result<LctReport> {
    if !f.evaluate_at_zero().is_zero() {
        return Err(Error::NotThroughOrigin);
    }
    let mut report = LctReport {
        schema: SCHEMA_VERSION,
        version: TOOL_VERSION.to_string(),
        input: input.to_string(),
        vars: vars.to_vec(),
        f: f.to_text(vars),
        mu: 0,
        quasihomogeneous: None,
        weights: None,
        r: None,
        spectrum: Spectrum::from_values([]),
        alpha1: None,
        alpha2: None,
        monodromy_eigenvalue_one: None,
        conditions: Conditions::NONE,
        holland_mond: None,
        logder: None,
        selfcheck: None,
        verdict: Verdict::Smooth,
        justification: vec![],
        notes: vec![],
        params: None,
    };
    match f.m_adic_order() {
        None => return Err(Error::NonIsolated),
        Some(1) => {
            report.justification.push("f has a nonzero linear term, so D is smooth at 0".into());
            return Ok(report);
        }
        _ => {}
    }
    let md = milnor_data(f)?;
    let nvars = f.nvars();
    report.mu = md.mu;
    let gm = gauss_manin::analyze(f, &md, opts.start(f))?;
    let mono = monodromy_info(&gm.spectrum);
    report.params = Some(gm.params);
    report.alpha1 = Some(mono.alpha1.clone());
    report.alpha2 = Some(mono.alpha2.clone());
    report.monodromy_eigenvalue_one = Some(mono.has_eigenvalue_one);
    report.spectrum = gm.spectrum.clone();
    report.notes.push(NOTE_INDEXING.into());
    report.notes.push(NOTE_NORMALIZATION.into());
    if opts.selfcheck {
        report.selfcheck = Some(checks_for(f, &md, &gm.spectrum));
    }

    let qh = is_quasihomogeneous_with(f, &md);
    report.quasihomogeneous = Some(qh);
    if qh {
        match detect_weights(f) {
            Some(ws) => {
                report.notes.push(NOTE_HM.into());
                report.weights = Some(ws.weights.clone());
                report.r = Some(ws.degree);
                let hm = if nvars < 2 {
                    HollandMond { holds: true, checks: vec![] }
                } else {
                    holland_mond_verdict(f, &md, &ws)?
                };
                if hm.holds {
                    report.verdict = Verdict::LctHolds;
                    report.justification.push(
                        "f is weighted homogeneous; the Milnor algebra vanishes in every Holland–Mond degree, so LCT holds"
                            .into(),
                    );
                } else {
                    report.verdict = Verdict::LctFails;
                    for w in hm.witnesses() {
                        report.justification.push(format!(
                            "Holland–Mond witness: i = {}, degree {} has dimension {} in the Milnor algebra, so LCT fails",
                            w.i, w.degree, w.dim
                        ));
                    }
                }
                report.holland_mond = Some(hm);
            }
            None => {
                report.verdict = Verdict::QhCoordinateLimit;
                report.justification.push(
                    "f lies in its Jacobian ideal (quasihomogeneous after a coordinate change) but no weights make it weighted homogeneous in the given coordinates".into(),
                );
            }
        }
    } else {
        let zero = Rational::zero();
        let (a1, a2) = (&mono.alpha1, &mono.alpha2);
        let mut c = Conditions {
            a: ConditionStatus::from_bool(!mono.has_eigenvalue_one),
            b: ConditionStatus::from_bool(*a1 > zero),
            c: ConditionStatus::NotApplicable,
            d: ConditionStatus::NotApplicable,
        };
        if *a1 < zero && *a2 == zero {
            c.d = ConditionStatus::from_bool(obstruction_membership(&gm.c0, ObstructionVariant::D)?);
        }
        if *a1 < zero {
            c.c = ConditionStatus::from_bool(obstruction_membership(&gm.c0, ObstructionVariant::C)?);
        }
        report.conditions = c;
        let fired = c.fired();
        report.justification.push("f does not lie in its Jacobian ideal, so D is not quasihomogeneous (verified)".into());
        if fired.is_empty() {
            report.verdict = Verdict::Unknown;
            if *a1 == zero {
                report.justification.push(
                    "alpha_1 = 0: the spectral obstruction does not give a statement in this case".into(),
                );
            } else {
                report.justification.push("no obstruction condition applies".into());
            }
        } else {
            report.verdict = Verdict::LctFails;
            for ch in &fired {
                report.justification.push(format!("condition ({ch}) holds: {}", describe(*ch, a1, a2)));
            }
            report.justification.push(
                "under any of these conditions LCT can hold only if D is quasihomogeneous; assuming nonquasihomogeneity, which was verified, LCT fails".into(),
            );
        }
    }

    if opts.logder {
        report.notes.push(NOTE_COORDS.into());
        report.logder = Some(logder_summary(f, vars, opts.degree_bound));
    }
    Ok(report)
}

fn describe(ch: char, a1: &Rational, a2: &Rational) -> String {
    match ch {
        'a' => "the monodromy has no eigenvalue 1".into(),
        'b' => format!("alpha_1 = {} > 0", format_rational(a1)),
        'c' => format!("alpha_1 = {} < 0 and [u dx]_0 lies in H_0 + N(C^0) for a unit u", format_rational(a1)),
        _ => format!(
            "alpha_1 = {} < 0 = alpha_2 = {} and [dx]_0 lies in H_0 + N(C^0)",
            format_rational(a1),
            format_rational(a2)
        ),
    }
}

fn logder_summary(f: &Polynomial, vars: &[String], bound: Option<u32>) -> LogderSummary {
    let degree_bound = bound.unwrap_or_else(|| default_degree_bound(f));
    let (gens, complete) = derlog_generators(f, degree_bound);
    let mut s = LogderSummary {
        generators: vec![],
        cofactors: vec![],
        traces: vec![],
        nilpotent_flags: vec![],
        residues: vec![],
        degree_bound,
        complete,
    };
    for d in &gens {
        s.generators.push(d.coeffs.iter().map(|g| g.to_text(vars)).collect());
        s.cofactors.push(d.cofactor.to_text(vars));
        let lp = linear_part(d).ok();
        s.traces.push(lp.as_ref().map(|l| format_rational(&l.trace)));
        s.nilpotent_flags.push(lp.as_ref().map(|l| l.nilpotent));
        s.residues.push(format_rational(&log_residue(d)));
    }
    s
}

/// Human-readable rendering of a report.
pub fn render_text(r: &LctReport) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    let _ = writeln!(s, "f = {}  [{}]", r.f, r.vars.join(", "));
    let _ = writeln!(s, "verdict: {}", r.verdict);
    if r.verdict != Verdict::Smooth {
        let _ = writeln!(s, "mu = {}", r.mu);
        if let Some(q) = r.quasihomogeneous {
            let _ = writeln!(s, "quasihomogeneous: {q}");
        }
        if let (Some(w), Some(d)) = (&r.weights, r.r) {
            let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "weights: ({}) degree {}", ws.join(", "), d);
        }
        let sp: Vec<String> =
            r.spectrum.entries().iter().map(|e| format!("{}:{}", format_rational(&e.alpha), e.mult)).collect();
        let _ = writeln!(s, "spectrum: {}", sp.join(" "));
        if let Some(e) = r.monodromy_eigenvalue_one {
            let _ = writeln!(s, "monodromy eigenvalue 1: {e}");
        }
        let c = &r.conditions;
        let _ = writeln!(s, "conditions: a={} b={} c={} d={}", c.a, c.b, c.c, c.d);
        if let Some(p) = r.params {
            let _ = writeln!(s, "truncation: K={} Dx={}", p.k, p.dx);
        }
    }
    if let Some(l) = &r.logder {
        let _ = writeln!(s, "logarithmic vector fields ({}, degree bound {}):", l.generators.len(), l.degree_bound);
        for (i, g) in l.generators.iter().enumerate() {
            let _ = writeln!(
                s,
                "  ({}) trace {} nilpotent {} residue {}",
                g.join(", "),
                l.traces[i].as_deref().unwrap_or("-"),
                l.nilpotent_flags[i].map_or("-".to_string(), |b| b.to_string()),
                l.residues[i]
            );
        }
    }
    for c in r.selfcheck.iter().flatten() {
        let _ = writeln!(s, "check {}: {} ({})", c.name, if c.passed { "PASS" } else { "FAIL" }, c.detail);
    }
    for j in &r.justification {
        let _ = writeln!(s, "  - {j}");
    }
    s
}

#[cfg(test)]
mod tests;
