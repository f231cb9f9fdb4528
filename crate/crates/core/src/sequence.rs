//! Weight sequences indexed by the positive integers.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Closed-form weight sequences that are not eventually periodic.
///
/// Indices are 1-based: the value at index `n` is the weight the classical
/// 0-based weighted-shift literature attaches to `e_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedSequence {
    /// `w_n = exp(sqrt(n) - sqrt(n - 1))`, the quasi-analytic shift whose
    /// cumulative products are `exp(sqrt(n))`.
    QuasiAnalyticSqrt,
    /// `w_n = 1/n`, cumulative products `1/n!`.
    FactorialReciprocal,
}

impl NamedSequence {
    pub fn name(self) -> &'static str {
        match self {
            NamedSequence::QuasiAnalyticSqrt => "quasiAnalyticSqrt",
            NamedSequence::FactorialReciprocal => "factorialReciprocal",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "quasiAnalyticSqrt" => Some(NamedSequence::QuasiAnalyticSqrt),
            "factorialReciprocal" => Some(NamedSequence::FactorialReciprocal),
            _ => None,
        }
    }

    /// Natural logarithm of the weight at `n >= 1`.
    pub fn ln_value(self, n: usize) -> f64 {
        assert!(n >= 1, "sequence indices start at 1");
        let x = n as f64;
        match self {
            // sqrt(n) - sqrt(n-1) without cancellation.
            NamedSequence::QuasiAnalyticSqrt => 1.0 / (x.sqrt() + (x - 1.0).sqrt()),
            NamedSequence::FactorialReciprocal => -x.ln(),
        }
    }

    pub fn value_f64(self, n: usize) -> f64 {
        match self {
            NamedSequence::FactorialReciprocal => 1.0 / n as f64,
            NamedSequence::QuasiAnalyticSqrt => self.ln_value(n).exp(),
        }
    }

    /// Weight converted into `S`. Exact for `FactorialReciprocal`; the
    /// quasi-analytic weights are transcendental and go through `f64`.
    pub fn value<S: Scalar>(self, n: usize) -> S {
        match self {
            NamedSequence::FactorialReciprocal => {
                S::one() / S::from_usize(n).expect("index representable in scalar")
            }
            NamedSequence::QuasiAnalyticSqrt => {
                S::from_f64(self.value_f64(n)).expect("finite weight representable in scalar")
            }
        }
    }
}

/// Eventually periodic nonnegative sequence: `prefix` is read first, then
/// `period` repeats forever. Stored in canonical form (shortest period,
/// then shortest prefix), so structural equality is value equality.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicSequence<S> {
    prefix: Vec<S>,
    period: Vec<S>,
}

impl<S: Scalar> PeriodicSequence<S> {
    pub fn new(prefix: Vec<S>, period: Vec<S>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        if let Some(position) = prefix.iter().chain(period.iter()).position(|v| v.is_negative()) {
            return Err(Error::NegativeEntry { position: position + 1 });
        }
        let mut seq = PeriodicSequence { prefix, period };
        seq.canonicalize();
        Ok(seq)
    }

    pub fn constant(value: S) -> Result<Self> {
        Self::new(Vec::new(), vec![value])
    }

    pub fn zero() -> Self {
        PeriodicSequence { prefix: Vec::new(), period: vec![S::zero()] }
    }

    /// Sequence that takes `values[t-1]` for `t <= values.len()` and is zero afterwards.
    pub fn finite(values: Vec<S>) -> Result<Self> {
        Self::new(values, vec![S::zero()])
    }

    pub fn prefix(&self) -> &[S] {
        &self.prefix
    }

    pub fn period(&self) -> &[S] {
        &self.period
    }

    pub fn value(&self, n: usize) -> S {
        assert!(n >= 1, "sequence indices start at 1");
        if n <= self.prefix.len() {
            self.prefix[n - 1].clone()
        } else {
            self.period[(n - 1 - self.prefix.len()) % self.period.len()].clone()
        }
    }

    pub fn is_zero_sequence(&self) -> bool {
        self.prefix.is_empty() && self.period.len() == 1 && self.period[0].is_zero()
    }

    fn canonicalize(&mut self) {
        let len = self.period.len();
        let shortest = (1..=len)
            .filter(|d| len % d == 0)
            .find(|&d| (0..len).all(|i| self.period[i] == self.period[i % d]))
            .unwrap_or(len);
        self.period.truncate(shortest);
        while let Some(last) = self.prefix.last() {
            if *last != self.period[self.period.len() - 1] {
                break;
            }
            self.prefix.pop();
            self.period.rotate_right(1);
        }
    }
}

/// Weights along a diagonal or of a weighted permutation.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightSequence<S> {
    Periodic(PeriodicSequence<S>),
    Named(NamedSequence),
}

impl<S: Scalar> WeightSequence<S> {
    pub fn periodic(prefix: Vec<S>, period: Vec<S>) -> Result<Self> {
        PeriodicSequence::new(prefix, period).map(WeightSequence::Periodic)
    }

    pub fn constant(value: S) -> Result<Self> {
        PeriodicSequence::constant(value).map(WeightSequence::Periodic)
    }

    pub fn zero() -> Self {
        WeightSequence::Periodic(PeriodicSequence::zero())
    }

    pub fn value(&self, n: usize) -> S {
        match self {
            WeightSequence::Periodic(seq) => seq.value(n),
            WeightSequence::Named(named) => named.value(n),
        }
    }

    pub fn is_nonzero(&self, n: usize) -> bool {
        match self {
            WeightSequence::Periodic(seq) => !seq.value(n).is_zero(),
            WeightSequence::Named(_) => true,
        }
    }

    /// Length of the part before the zero pattern becomes periodic.
    pub fn pattern_prefix_len(&self) -> usize {
        match self {
            WeightSequence::Periodic(seq) => seq.prefix.len(),
            WeightSequence::Named(_) => 0,
        }
    }

    /// Period of the values (not only of the zero pattern). Named
    /// sequences are never periodic in value and report `None`.
    pub fn value_period(&self) -> Option<usize> {
        match self {
            WeightSequence::Periodic(seq) => Some(seq.period.len()),
            WeightSequence::Named(_) => None,
        }
    }

    /// Period of the zero pattern.
    pub fn pattern_period(&self) -> usize {
        self.value_period().unwrap_or(1)
    }

    /// Smallest index carrying a zero, decided over prefix plus one period.
    pub fn first_zero(&self) -> Option<usize> {
        match self {
            WeightSequence::Periodic(seq) => {
                (1..=seq.prefix.len() + seq.period.len()).find(|&n| seq.value(n).is_zero())
            }
            WeightSequence::Named(_) => None,
        }
    }

    pub fn is_everywhere_positive(&self) -> bool {
        self.first_zero().is_none()
    }

    pub fn is_zero_sequence(&self) -> bool {
        matches!(self, WeightSequence::Periodic(seq) if seq.is_zero_sequence())
    }

    pub fn as_periodic(&self) -> Option<&PeriodicSequence<S>> {
        match self {
            WeightSequence::Periodic(seq) => Some(seq),
            WeightSequence::Named(_) => None,
        }
    }

    pub fn to_f64(&self) -> WeightSequence<f64> {
        match self {
            WeightSequence::Periodic(seq) => WeightSequence::Periodic(PeriodicSequence {
                prefix: seq.prefix.iter().map(Scalar::to_f64_lossy).collect(),
                period: seq.period.iter().map(Scalar::to_f64_lossy).collect(),
            }),
            WeightSequence::Named(named) => WeightSequence::Named(*named),
        }
    }
}

impl WeightSequence<f64> {
    /// Natural logarithm of the weight at `n`; `-inf` for zero weights.
    pub fn ln_value(&self, n: usize) -> f64 {
        match self {
            WeightSequence::Periodic(seq) => seq.value(n).ln(),
            WeightSequence::Named(named) => named.ln_value(n),
        }
    }
}

impl<S> From<NamedSequence> for WeightSequence<S> {
    fn from(named: NamedSequence) -> Self {
        WeightSequence::Named(named)
    }
}
