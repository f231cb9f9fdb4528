//! Analysis reports: a serde model, the pipeline that fills it, and a text
//! rendering computed from the JSON alone.

use conekit::classify::{self, Certificate, Verdict, Witness};
use conekit::ideals::{self, IdealConstruction, Invariance, Properness};
use conekit::irreducibility::{self, IrreducibilityCertificate, IrreducibilityVerdict};
use conekit::spectral::{self, QuasinilpotenceFinding, WeightedShift};
use conekit::{Error, ExactSpec, IndexSet};
use serde::{Deserialize, Serialize};

use crate::document::{self, OperatorDoc, PermutationDoc, SequenceDoc, SpaceDoc};

pub const REPORT_VERSION: u32 = 1;
pub const DEFAULT_WINDOW: usize = ideals::DEFAULT_WINDOW;
pub const DEFAULT_SPECTRAL_MAX_N: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sections {
    pub classification: bool,
    pub ideals: bool,
    pub irreducibility: bool,
    pub spectral: bool,
}

impl Sections {
    pub const ALL: Sections = Sections { classification: true, ideals: true, irreducibility: true, spectral: true };
    pub const NONE: Sections = Sections { classification: false, ideals: false, irreducibility: false, spectral: false };
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectralParameters {
    pub start: usize,
    pub max_n: usize,
    pub epsilon: f64,
}

/// Fully resolved analysis parameters, echoed into the report.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Parameters {
    pub window: usize,
    pub max_power: usize,
    pub edge_budget: usize,
    pub p: f64,
    pub sections: Sections,
    pub spectral: SpectralParameters,
}

/// Command-line overrides; `None` falls back to the document, then to the
/// defaults.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub window: Option<usize>,
    pub max_power: Option<usize>,
    pub edge_budget: Option<usize>,
    pub default_window: Option<usize>,
    pub sections: Option<Sections>,
}

impl Parameters {
    pub fn resolve(parsed: &document::Parsed, overrides: &Overrides) -> Parameters {
        let a = &parsed.analysis;
        let window = overrides.window.or(a.window).or(overrides.default_window).unwrap_or(DEFAULT_WINDOW);
        let max_power = overrides.max_power.or(a.max_power).unwrap_or(2 * window);
        let edge_budget = overrides.edge_budget.or(a.edge_budget).unwrap_or(irreducibility::EDGE_BUDGET);
        let s = a.sections.clone().unwrap_or_default();
        let sections = overrides.sections.unwrap_or(Sections {
            classification: s.classification.unwrap_or(true),
            ideals: s.ideals.unwrap_or(true),
            irreducibility: s.irreducibility.unwrap_or(true),
            spectral: s.spectral.unwrap_or(a.spectral.is_some()),
        });
        let sp = a.spectral.clone().unwrap_or_default();
        let spectral = SpectralParameters {
            start: sp.start.unwrap_or(1),
            max_n: sp.max_n.unwrap_or(DEFAULT_SPECTRAL_MAX_N),
            epsilon: sp.epsilon.unwrap_or(spectral::DEFAULT_EPSILON),
        };
        Parameters { window, max_power, edge_budget, p: parsed.p, sections, spectral }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Tool {
    pub name: String,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub report_version: u32,
    pub tool: Tool,
    pub parameters: Parameters,
    pub space: SpaceDoc,
    pub operator: OperatorDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideals: Option<Vec<IdealEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducibility: Option<Irreducibility>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectral: Option<Spectral>,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    pub lattice_homomorphism: VerdictEntry,
    pub injective_homomorphism: VerdictEntry,
    pub weighted_permutation: VerdictEntry,
    pub interval_preserving: VerdictEntry,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerdictEntry {
    /// `holds`, `fails` or `notApplicable`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<PermutationForm>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CertificateEntry {
    pub description: String,
    pub checked_below: usize,
    pub tail_start: usize,
    pub period: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessEntry {
    pub kind: String,
    pub indices: Vec<usize>,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PermutationForm {
    pub permutation: PermutationDoc,
    pub weights: SequenceDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealEntry {
    pub constructor: String,
    /// `constructed`, `absent` or `failed`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealReport {
    pub method: String,
    pub method_detail: String,
    pub zero_set: ZeroSet,
    pub properness: Qualifier,
    pub verification: Qualifier,
}

/// A claim and its qualifier: `kind` is `exact`/`exactYes` or a window
/// form carrying the window it was checked on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Qualifier {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub excluded: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ZeroSet {
    /// `exact` or `windowEnumerated`.
    pub kind: String,
    pub finite: Vec<usize>,
    pub tails: Vec<Tail>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified_up_to: Option<usize>,
    pub display: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tail {
    pub start: usize,
    pub step: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Irreducibility {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<IrreducibilityCertificateEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_power: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IrreducibilityCertificateEntry {
    pub tag: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_power: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positive_offsets: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Spectral {
    /// `computed` or `notApplicable`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<Sample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub last: Option<Sample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finding: Option<Finding>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub n: usize,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Finding {
    pub tag: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound_seen: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fitted_limit: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slope: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub final_value: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Diagnostic {
    pub section: String,
    pub kind: String,
    pub message: String,
}

impl Report {
    /// A budget ran out somewhere.
    pub fn budget_exhausted(&self) -> bool {
        self.diagnostics.iter().any(|d| d.kind == "budgetExhausted")
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NegativeEntry { .. } => "negativeEntry",
        Error::EmptyPeriod => "emptyPeriod",
        Error::InvalidPermutation(_) => "invalidPermutation",
        Error::InvalidOperator(_) => "invalidOperator",
        Error::PreconditionViolated(_) => "preconditionViolated",
        Error::NotTridiagonal => "notTridiagonal",
        Error::ExtractionFailure(_) => "extractionFailure",
        Error::VerificationFailed { .. } => "verificationFailed",
        Error::SizeLimit { .. } => "sizeLimit",
        Error::BetaZero { .. } => "betaZero",
        Error::BetaNotNormalized => "betaNotNormalized",
        Error::BudgetExhausted(_) => "budgetExhausted",
    }
}

fn diagnostic(section: &str, e: &Error) -> Diagnostic {
    Diagnostic { section: section.into(), kind: error_kind(e).into(), message: e.to_string() }
}

fn certificate_entry(c: &Certificate) -> CertificateEntry {
    CertificateEntry {
        description: c.description.clone(),
        checked_below: c.checked_below,
        tail_start: c.tail_start,
        period: c.period,
    }
}

fn witness_entry(w: &Witness) -> WitnessEntry {
    let (kind, indices) = match *w {
        Witness::RowWithTwoEntries { row, columns: (a, b) } => ("rowWithTwoEntries", vec![row, a, b]),
        Witness::ColumnWithTwoEntries { column, rows: (a, b) } => ("columnWithTwoEntries", vec![column, a, b]),
        Witness::NullColumn { column } => ("nullColumn", vec![column]),
        Witness::RowHitTwice { row, columns: (a, b) } => ("rowHitTwice", vec![row, a, b]),
        Witness::RowNeverHit { row } => ("rowNeverHit", vec![row]),
    };
    WitnessEntry { kind: kind.into(), indices, description: w.to_string() }
}

fn verdict_entry<T>(v: &Verdict<T>) -> VerdictEntry {
    match v {
        Verdict::Holds { certificate, .. } => VerdictEntry {
            status: "holds".into(),
            certificate: Some(certificate_entry(certificate)),
            witness: None,
            reason: None,
            form: None,
        },
        Verdict::Fails { witness } => VerdictEntry {
            status: "fails".into(),
            certificate: None,
            witness: Some(witness_entry(witness)),
            reason: None,
            form: None,
        },
    }
}

fn not_applicable(reason: String) -> VerdictEntry {
    VerdictEntry { status: "notApplicable".into(), certificate: None, witness: None, reason: Some(reason), form: None }
}

fn classification(spec: &ExactSpec, diagnostics: &mut Vec<Diagnostic>) -> Classification {
    let lattice = classify::is_lattice_homomorphism(spec);
    let injective = match classify::is_injective_homomorphism(spec) {
        Ok(v) => verdict_entry(&v),
        Err(Error::PreconditionViolated(reason)) => not_applicable(reason),
        Err(e) => {
            diagnostics.push(diagnostic("classification", &e));
            not_applicable(e.to_string())
        }
    };
    let weighted = match classify::detect_weighted_permutation(spec) {
        Ok(v) => {
            let mut entry = verdict_entry(&v);
            if let Some((perm, weights)) = v.value() {
                let map = perm.as_map();
                entry.form = Some(PermutationForm {
                    permutation: PermutationDoc {
                        head: map.head().to_vec(),
                        modulus: map.modulus(),
                        offsets: map.offsets().to_vec(),
                    },
                    weights: document::sequence_doc(weights),
                });
            }
            entry
        }
        Err(e) => {
            diagnostics.push(diagnostic("classification", &e));
            not_applicable(e.to_string())
        }
    };
    Classification {
        lattice_homomorphism: verdict_entry(&lattice),
        injective_homomorphism: injective,
        weighted_permutation: weighted,
        interval_preserving: verdict_entry(&classify::is_interval_preserving_candidate(spec)),
    }
}

fn zero_set(set: &IndexSet) -> ZeroSet {
    match set {
        IndexSet::Exact(e) => ZeroSet {
            kind: "exact".into(),
            finite: e.finite_part().iter().copied().collect(),
            tails: e.tails().iter().map(|t| Tail { start: t.start, step: t.step }).collect(),
            verified_up_to: None,
            display: display_exact(e),
        },
        IndexSet::WindowEnumerated { members, verified_up_to } => ZeroSet {
            kind: "windowEnumerated".into(),
            finite: members.iter().copied().collect(),
            tails: vec![],
            verified_up_to: Some(*verified_up_to),
            display: format!("{} member(s) in 1..={verified_up_to}", members.len()),
        },
    }
}

fn display_exact(e: &conekit::ExactSet) -> String {
    if e.is_empty() {
        return "{}".into();
    }
    let mut parts: Vec<String> = e.finite_part().iter().map(usize::to_string).collect();
    for t in e.tails() {
        parts.push(match t.step {
            1 => format!("{}, {}, ...", t.start, t.start + 1),
            s => format!("{}, {}, ... (step {s})", t.start, t.start + s),
        });
    }
    format!("{{{}}}", parts.join(", "))
}

fn ideal_report(c: &IdealConstruction) -> IdealReport {
    let properness = match c.properness {
        Properness::Exact { excluded } => Qualifier { kind: "exact".into(), excluded: Some(excluded), window: None },
        Properness::VerifiedUpToWindow(w) => {
            Qualifier { kind: "verifiedUpToWindow".into(), excluded: None, window: Some(w) }
        }
    };
    let verification = match c.verification {
        Invariance::ExactYes => Qualifier { kind: "exactYes".into(), excluded: None, window: None },
        Invariance::WindowYes(w) => Qualifier { kind: "windowYes".into(), excluded: None, window: Some(w) },
        Invariance::No { .. } => unreachable!("constructions are verified"),
    };
    IdealReport {
        method: c.method.tag().into(),
        method_detail: c.method.to_string(),
        zero_set: zero_set(c.zero_set()),
        properness,
        verification,
    }
}

fn ideal_entry(constructor: &str, outcome: conekit::Result<Option<IdealConstruction>>, absent: impl FnOnce() -> String, diagnostics: &mut Vec<Diagnostic>) -> IdealEntry {
    let entry = |status: &str, reason: Option<String>, ideal| IdealEntry {
        constructor: constructor.into(),
        status: status.into(),
        reason,
        ideal,
    };
    match outcome {
        Ok(Some(c)) => entry("constructed", None, Some(ideal_report(&c))),
        Ok(None) => entry("absent", Some(absent()), None),
        Err(Error::PreconditionViolated(reason)) => entry("absent", Some(reason), None),
        Err(Error::NotTridiagonal) => entry("absent", Some("not tridiagonal".into()), None),
        Err(e) => {
            diagnostics.push(diagnostic("ideals", &e));
            entry("failed", Some(e.to_string()), None)
        }
    }
}

fn ideal_list(spec: &ExactSpec, window: usize, diagnostics: &mut Vec<Diagnostic>) -> Vec<IdealEntry> {
    let null = ideals::null_columns(spec);
    let kernel = ideal_entry(
        "kernel",
        ideals::kernel_ideal(spec),
        || if null.is_empty() { "no column is null".into() } else { "every column is null".into() },
        diagnostics,
    );
    let null_row = ideal_entry("nullRow", ideals::null_row_ideal(spec), || "no row is null".into(), diagnostics);
    let orbit_xi = match classify::detect_weighted_permutation(spec) {
        Ok(Verdict::Holds { value: (perm, weights), .. }) => {
            ideal_entry("orbitXi", ideals::orbit_xi_ideal(&perm, &weights, 0, 1, window).map(Some), String::new, diagnostics)
        }
        Ok(Verdict::Fails { witness }) => ideal_entry(
            "orbitXi",
            Err(Error::PreconditionViolated(format!("not a weighted permutation: {witness}"))),
            String::new,
            diagnostics,
        ),
        Err(e) => ideal_entry("orbitXi", Err(e), String::new, diagnostics),
    };
    let orbit_phi = ideal_entry("orbitPhi", ideals::orbit_phi_ideal(spec, 0, 1, window).map(Some), String::new, diagnostics);
    let tridiagonal = ideal_entry(
        "tridiagonalZero",
        ideals::tridiagonal_zero_ideal(spec),
        || "off-diagonals are everywhere positive".into(),
        diagnostics,
    );
    let transpose = ideal_entry(
        "transposeComplement",
        ideals::transpose_complement_ideal(spec, window),
        || "the transpose has no exact invariant ideal".into(),
        diagnostics,
    );
    vec![kernel, null_row, orbit_xi, orbit_phi, tridiagonal, transpose]
}

fn irreducibility_section(spec: &ExactSpec, params: &Parameters, diagnostics: &mut Vec<Diagnostic>) -> Irreducibility {
    let empty = Irreducibility { verdict: String::new(), certificate: None, ideal: None, window: None, max_power: None, reason: None };
    match irreducibility::rt_reachability_with_budget(spec, params.window, params.max_power, params.edge_budget) {
        Ok(IrreducibilityVerdict::Irreducible { certificate }) => {
            let entry = match &certificate {
                IrreducibilityCertificate::TridiagonalCorollary => IrreducibilityCertificateEntry {
                    tag: certificate.tag().into(),
                    window: None,
                    max_power: None,
                    positive_offsets: None,
                },
                IrreducibilityCertificate::ReachabilityTable { window, max_power, positive_offsets } => {
                    IrreducibilityCertificateEntry {
                        tag: certificate.tag().into(),
                        window: Some(*window),
                        max_power: Some(*max_power),
                        positive_offsets: Some(positive_offsets.clone()),
                    }
                }
            };
            Irreducibility { verdict: "irreducible".into(), certificate: Some(entry), ..empty }
        }
        Ok(IrreducibilityVerdict::Reducible { ideal }) => {
            Irreducibility { verdict: "reducible".into(), ideal: Some(ideal_report(&ideal)), ..empty }
        }
        Ok(IrreducibilityVerdict::Unknown { window, max_power }) => {
            Irreducibility { verdict: "unknown".into(), window: Some(window), max_power: Some(max_power), ..empty }
        }
        Err(e) => {
            diagnostics.push(diagnostic("irreducibility", &e));
            Irreducibility { verdict: "unknown".into(), reason: Some(e.to_string()), ..empty }
        }
    }
}

/// `1, 2, 5, 10, 20, 50, ...` up to `max_n`.
fn sample_points(max_n: usize) -> Vec<usize> {
    let mut points = vec![];
    let mut decade = 1usize;
    while decade <= max_n {
        for m in [1, 2, 5] {
            if decade * m <= max_n {
                points.push(decade * m);
            }
        }
        decade = decade.saturating_mul(10);
    }
    points
}

fn spectral_section(spec: &ExactSpec, params: &Parameters, diagnostics: &mut Vec<Diagnostic>) -> Spectral {
    let shift = match WeightedShift::from_spec(spec) {
        Ok(shift) => shift,
        Err(e) => {
            if !matches!(e, Error::PreconditionViolated(_) | Error::InvalidOperator(_)) {
                diagnostics.push(diagnostic("spectral", &e));
            }
            return Spectral { status: "notApplicable".into(), reason: Some(e.to_string()), samples: vec![], last: None, finding: None };
        }
    };
    let sp = params.spectral;
    let seq = spectral::radius_sequence(&shift, sp.start, sp.max_n, params.p);
    let samples = sample_points(sp.max_n).into_iter().map(|n| Sample { n, value: seq.entries[n - 1].1 }).collect();
    let last = seq.last().map(|(n, value)| Sample { n, value });
    let finding = match spectral::quasinilpotence_finding(&seq, sp.epsilon) {
        f @ QuasinilpotenceFinding::EvidenceNotQuasinilpotent { lower_bound_seen } => {
            Finding { tag: f.tag().into(), lower_bound_seen: Some(lower_bound_seen), fitted_limit: None, slope: None, final_value: None }
        }
        f @ QuasinilpotenceFinding::EvidenceQuasinilpotent { decay } => Finding {
            tag: f.tag().into(),
            lower_bound_seen: None,
            fitted_limit: None,
            slope: Some(decay.slope),
            final_value: Some(decay.final_value),
        },
        f @ QuasinilpotenceFinding::Inconclusive { fitted_limit, decay } => Finding {
            tag: f.tag().into(),
            lower_bound_seen: None,
            fitted_limit: Some(fitted_limit),
            slope: Some(decay.slope),
            final_value: Some(decay.final_value),
        },
    };
    Spectral { status: "computed".into(), reason: None, samples, last, finding: Some(finding) }
}

fn take<T>(section: Option<(T, Vec<Diagnostic>)>, diagnostics: &mut Vec<Diagnostic>) -> Option<T> {
    section.map(|(value, d)| {
        diagnostics.extend(d);
        value
    })
}

/// Runs the enabled sections concurrently; each keeps its own diagnostics
/// and the report lists them in section order.
pub fn analyze(parsed: &document::Parsed, params: &Parameters) -> Report {
    let spec = &parsed.spec;
    let s = params.sections;
    let (classification, ideals, irreducibility, spectral) = std::thread::scope(|scope| {
        let c = scope.spawn(move || {
            let mut d = vec![];
            s.classification.then(|| (classification(spec, &mut d), d))
        });
        let i = scope.spawn(move || {
            let mut d = vec![];
            s.ideals.then(|| (ideal_list(spec, params.window, &mut d), d))
        });
        let r = scope.spawn(move || {
            let mut d = vec![];
            s.irreducibility.then(|| (irreducibility_section(spec, params, &mut d), d))
        });
        let sp = scope.spawn(move || {
            let mut d = vec![];
            s.spectral.then(|| (spectral_section(spec, params, &mut d), d))
        });
        (c.join().unwrap(), i.join().unwrap(), r.join().unwrap(), sp.join().unwrap())
    });
    let mut diagnostics = vec![];
    let classification = take(classification, &mut diagnostics);
    let ideals = take(ideals, &mut diagnostics);
    let irreducibility = take(irreducibility, &mut diagnostics);
    let spectral = take(spectral, &mut diagnostics);
    Report {
        report_version: REPORT_VERSION,
        tool: Tool { name: "conekit".into(), version: env!("CARGO_PKG_VERSION").into() },
        parameters: *params,
        space: SpaceDoc { kind: "lp".into(), p: parsed.p },
        operator: document::operator_doc(spec),
        classification,
        ideals,
        irreducibility,
        spectral,
        diagnostics,
    }
}
