//! Local spectral radius sequences `‖W^n x‖^{1/n}` of weighted shifts
//! `W e_n = w_n e_{n+1}`.
//!
//! All products are accumulated as sums of logarithms. Verdicts drawn from
//! these sequences are numerical evidence, not proofs.

use crate::error::{Error, Result};
use crate::operator::OperatorSpec;
use crate::scalar::Scalar;
use crate::sequence::{NamedSequence, WeightSequence};
use crate::vector::FiniteVector;

/// Default threshold below which a radius sequence counts as decayed.
pub const DEFAULT_EPSILON: f64 = 1e-3;

/// Log-log slope at or below which a sequence counts as still decaying.
pub const DECAY_SLOPE: f64 = -0.25;

/// Compensated (Neumaier) summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// `W e_n = w_n e_{n+1}` with strictly positive weights.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedShift {
    weights: WeightSequence<f64>,
}

impl WeightedShift {
    pub fn new(weights: WeightSequence<f64>) -> Result<Self> {
        if !weights.is_everywhere_positive() {
            let n = weights.first_zero().unwrap_or(1);
            return Err(Error::InvalidOperator(format!("weight {n} of a weighted shift must be positive")));
        }
        Ok(WeightedShift { weights })
    }

    pub fn named(named: NamedSequence) -> Self {
        WeightedShift { weights: WeightSequence::Named(named) }
    }

    /// Reads a spec whose only nonzero diagonal is the sub-diagonal `a_{n+1,n}`.
    pub fn from_spec<S: Scalar>(spec: &OperatorSpec<S>) -> Result<Self> {
        let band = spec
            .to_banded()
            .ok_or_else(|| Error::PreconditionViolated("spec has no band form".into()))?;
        match band.diagonals().iter().collect::<Vec<_>>().as_slice() {
            [(1, weights)] => WeightedShift::new(weights.to_f64()),
            _ => Err(Error::PreconditionViolated("not a weighted shift e_n -> w_n e_(n+1)".into())),
        }
    }

    pub fn weights(&self) -> &WeightSequence<f64> {
        &self.weights
    }

    pub fn weight(&self, n: usize) -> f64 {
        self.weights.value(n)
    }

    pub fn ln_weight(&self, n: usize) -> f64 {
        self.weights.ln_value(n)
    }

    pub fn to_spec(&self) -> OperatorSpec<f64> {
        OperatorSpec::banded(1, 0, [(1, self.weights.clone())]).expect("offset 1 fits the band")
    }
}

/// A sequence `β_0 = 1, β_1, β_2, ...` of positive numbers; the shift it
/// induces has weights `β_{k+1} / β_k`, placed at index `k + 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum BetaSequence {
    /// `β_k = exp(sqrt(k))`.
    ExpSqrt,
    /// `β_k = 1/k!`.
    FactorialReciprocal,
    /// `β_k` is the value at index `k + 1`.
    Periodic(WeightSequence<f64>),
}

/// Weighted shift induced by `beta`.
pub fn shift_from_beta(beta: &BetaSequence) -> Result<WeightedShift> {
    match beta {
        BetaSequence::ExpSqrt => Ok(WeightedShift::named(NamedSequence::QuasiAnalyticSqrt)),
        BetaSequence::FactorialReciprocal => Ok(WeightedShift::named(NamedSequence::FactorialReciprocal)),
        BetaSequence::Periodic(values) => {
            let seq = values
                .as_periodic()
                .ok_or_else(|| Error::PreconditionViolated("named sequences are weights, not beta values".into()))?;
            if let Some(n) = values.first_zero() {
                return Err(Error::BetaZero { index: n - 1 });
            }
            if values.value(1) != 1.0 {
                return Err(Error::BetaNotNormalized);
            }
            let (p, l) = (seq.prefix().len(), seq.period().len());
            let ratio = |n: usize| values.value(n + 1) / values.value(n);
            let weights = WeightSequence::periodic((1..=p).map(ratio).collect(), (p + 1..=p + l).map(ratio).collect())?;
            WeightedShift::new(weights)
        }
    }
}

/// Weights `β_{k+1} / β_k` for a finite list `β_0, β_1, ...`.
pub fn weights_from_beta_values(beta: &[f64]) -> Result<Vec<f64>> {
    if let Some(index) = beta.iter().position(|&b| b <= 0.0 || b.is_nan()) {
        return Err(Error::BetaZero { index });
    }
    if beta.first() != Some(&1.0) {
        return Err(Error::BetaNotNormalized);
    }
    Ok(beta.windows(2).map(|w| w[1] / w[0]).collect())
}

/// Starting vector of a radius sequence.
#[derive(Clone, Debug, PartialEq)]
pub enum RadiusInput {
    Basis(usize),
    Vector(Vec<(usize, f64)>),
}

/// `entries[n-1] = (n, ‖W^n x‖^{1/n})` for `n = 1..=max_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct RadiusSequence {
    pub input: RadiusInput,
    pub p: f64,
    pub entries: Vec<(usize, f64)>,
}

impl RadiusSequence {
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().map(|&(_, v)| v)
    }

    pub fn last(&self) -> Option<(usize, f64)> {
        self.entries.last().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Radius sequence at `e_start`. The norm of a multiple of a basis vector
/// is its coefficient in every `ℓ^p`, so `p` only labels the result.
pub fn radius_sequence(shift: &WeightedShift, start: usize, max_n: usize, p: f64) -> RadiusSequence {
    assert!(start >= 1 && max_n >= 1, "start and length must be positive");
    assert!(p >= 1.0, "ℓ^p needs p >= 1");
    let mut log_product = CompensatedSum::default();
    let entries = (1..=max_n)
        .map(|n| {
            log_product.add(shift.ln_weight(start + n - 1));
            (n, (log_product.value() / n as f64).exp())
        })
        .collect();
    RadiusSequence { input: RadiusInput::Basis(start), p, entries }
}

/// Radius sequence at a finitely supported vector: `W^n x` has coordinate
/// `x_m w_m ... w_{m+n-1}` at `m + n`, and its `ℓ^p` norm is combined
/// from those logarithms by log-sum-exp.
pub fn radius_sequence_vector(shift: &WeightedShift, x: &FiniteVector<f64>, max_n: usize, p: f64) -> Result<RadiusSequence> {
    assert!(max_n >= 1 && p >= 1.0, "length must be positive and p >= 1");
    if x.is_zero() {
        return Err(Error::PreconditionViolated("the zero vector has no radius sequence".into()));
    }
    let support: Vec<(usize, f64)> = x.iter().map(|(m, &v)| (m, v)).collect();
    let mut logs: Vec<(usize, f64, CompensatedSum)> = support
        .iter()
        .map(|&(m, v)| {
            let mut s = CompensatedSum::default();
            s.add(v.abs().ln());
            (m, 0.0, s)
        })
        .collect();
    let mut entries = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        for (m, log, sum) in &mut logs {
            sum.add(shift.ln_weight(*m + n - 1));
            *log = sum.value();
        }
        let scaled: Vec<f64> = logs.iter().map(|&(_, log, _)| p * log).collect();
        let top = scaled.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let log_norm = (top + scaled.iter().map(|s| (s - top).exp()).sum::<f64>().ln()) / p;
        entries.push((n, (log_norm / n as f64).exp()));
    }
    Ok(RadiusSequence { input: RadiusInput::Vector(support), p, entries })
}

/// Least-squares slope of `ln value` against `ln n`, with the final value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecayFit {
    pub slope: f64,
    pub final_value: f64,
}

/// Numerical evidence about `lim ‖W^n x‖^{1/n}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum QuasinilpotenceFinding {
    /// The last quarter of the values stays above `lower_bound_seen > ε`
    /// and has flattened out.
    EvidenceNotQuasinilpotent { lower_bound_seen: f64 },
    /// The values fell below `ε` and kept decreasing over the last quarter.
    EvidenceQuasinilpotent { decay: DecayFit },
    Inconclusive { fitted_limit: f64, decay: DecayFit },
}

impl QuasinilpotenceFinding {
    pub fn tag(&self) -> &'static str {
        match self {
            QuasinilpotenceFinding::EvidenceNotQuasinilpotent { .. } => "evidenceNotQuasinilpotent",
            QuasinilpotenceFinding::EvidenceQuasinilpotent { .. } => "evidenceQuasinilpotent",
            QuasinilpotenceFinding::Inconclusive { .. } => "inconclusive",
        }
    }
}

fn log_log_slope(points: &[(usize, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(n, v)| ((n as f64).ln(), v.ln())).collect();
    if pts.len() < 2 || pts.iter().any(|&(_, y)| !y.is_finite()) {
        return 0.0;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

/// Reads a radius sequence. The fitted limit is the minimum over the last
/// quarter of the values: above `epsilon` with a flat tail it is reported
/// as a lower bound, below `epsilon` with a non-increasing tail as decay,
/// and anything else is inconclusive.
pub fn quasinilpotence_finding(seq: &RadiusSequence, epsilon: f64) -> QuasinilpotenceFinding {
    assert!(!seq.is_empty(), "empty radius sequence");
    let quarter = seq.len().div_ceil(4);
    let tail = &seq.entries[seq.len() - quarter..];
    let fitted_limit = tail.iter().map(|&(_, v)| v).fold(f64::INFINITY, f64::min);
    let final_value = tail[tail.len() - 1].1;
    let decay = DecayFit { slope: log_log_slope(tail), final_value };
    let non_increasing = tail.windows(2).all(|w| w[1].1 <= w[0].1);
    if fitted_limit > epsilon && decay.slope > DECAY_SLOPE {
        QuasinilpotenceFinding::EvidenceNotQuasinilpotent { lower_bound_seen: fitted_limit }
    } else if final_value < epsilon && non_increasing {
        QuasinilpotenceFinding::EvidenceQuasinilpotent { decay }
    } else {
        QuasinilpotenceFinding::Inconclusive { fitted_limit, decay }
    }
}
