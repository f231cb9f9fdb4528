//! Finitely presented infinite nonnegative matrices.
//!
//! Entry `a_{n,m}` sits in row `n`, column `m`; `T e_m = sum_n a_{n,m} e_n`.
//! All indices are 1-based.
//!
//! Every presentation here is *eventually translation periodic*: there are
//! `start` and `period` such that for `m >= start` the nonzero pattern of
//! column `m + period` is the pattern of column `m` moved down by `period`
//! rows. Structural questions about the infinite matrix therefore reduce to
//! finitely many columns or rows (see [`TailStructure`]).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::permutation::ModularPermutation;
use crate::scalar::{lcm, Scalar};
use crate::sequence::{PeriodicSequence, WeightSequence};
use crate::vector::FiniteVector;

/// Nonzero entries of one column (as `(row, value)`) or row (as `(column, value)`),
/// sorted by index.
pub type Entries<S> = Vec<(usize, S)>;

/// Band of diagonals. The diagonal with offset `o = row - column` is given by
/// a sequence read along the diagonal: its `t`-th value is the entry at
/// `(t + o, t)` for `o >= 0` and at `(t, t - o)` for `o < 0`, that is
/// `t = min(row, column)`.
///
/// `lower` bounds the offsets below the main diagonal (`o > 0`), `upper`
/// those above it (`o < 0`). Offsets within the band that have no diagonal
/// are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Banded<S> {
    lower: usize,
    upper: usize,
    diagonals: BTreeMap<i64, WeightSequence<S>>,
}

impl<S: Scalar> Banded<S> {
    pub fn new(lower: usize, upper: usize, diagonals: BTreeMap<i64, WeightSequence<S>>) -> Result<Self> {
        if let Some(&o) = diagonals.keys().find(|&&o| o > lower as i64 || o < -(upper as i64)) {
            return Err(Error::InvalidOperator(format!(
                "diagonal offset {o} lies outside the band [-{upper}, {lower}]"
            )));
        }
        let diagonals = diagonals.into_iter().filter(|(_, seq)| !seq.is_zero_sequence()).collect();
        Ok(Banded { lower, upper, diagonals })
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn diagonals(&self) -> &BTreeMap<i64, WeightSequence<S>> {
        &self.diagonals
    }

    pub fn diagonal(&self, offset: i64) -> Option<&WeightSequence<S>> {
        self.diagonals.get(&offset)
    }

    pub fn entry(&self, row: usize, col: usize) -> S {
        let offset = row as i64 - col as i64;
        self.diagonals
            .get(&offset)
            .map_or_else(S::zero, |seq| seq.value(row.min(col)))
    }

    pub fn is_tridiagonal(&self) -> bool {
        self.diagonals.keys().all(|&o| (-1..=1).contains(&o))
    }

    fn column(&self, m: usize) -> Entries<S> {
        let mut out = Vec::new();
        for (&o, seq) in &self.diagonals {
            let row = m as i64 + o;
            if row < 1 {
                continue;
            }
            let row = row as usize;
            let value = seq.value(row.min(m));
            if !value.is_zero() {
                out.push((row, value));
            }
        }
        out
    }

    fn row(&self, n: usize) -> Entries<S> {
        let mut out = Vec::new();
        for (&o, seq) in self.diagonals.iter().rev() {
            let col = n as i64 - o;
            if col < 1 {
                continue;
            }
            let col = col as usize;
            let value = seq.value(n.min(col));
            if !value.is_zero() {
                out.push((col, value));
            }
        }
        out
    }

    fn transpose(&self) -> Self {
        Banded {
            lower: self.upper,
            upper: self.lower,
            diagonals: self.diagonals.iter().map(|(&o, seq)| (-o, seq.clone())).collect(),
        }
    }

    fn structure(&self) -> TailStructure {
        let prefix = self.diagonals.values().map(WeightSequence::pattern_prefix_len).max().unwrap_or(0);
        let period = self.diagonals.values().fold(1, |acc, seq| lcm(acc, seq.pattern_period()));
        let above = self.diagonals.keys().map(|&o| (-o).max(0) as usize).max().unwrap_or(0);
        let reach = self.diagonals.keys().map(|o| o.unsigned_abs() as usize).max().unwrap_or(0);
        TailStructure {
            start: prefix + above + 1,
            period,
            reach,
            values_periodic: self.diagonals.values().all(|seq| seq.value_period().is_some()),
        }
    }
}

/// `T e_n = w_n e_{ξ(n)}` with strictly positive, eventually periodic weights.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedPermutation<S> {
    perm: ModularPermutation,
    weights: PeriodicSequence<S>,
    inverse: ModularPermutation,
}

impl<S: Scalar> WeightedPermutation<S> {
    pub fn new(perm: ModularPermutation, weights: WeightSequence<S>) -> Result<Self> {
        let weights = match weights {
            WeightSequence::Periodic(seq) => seq,
            WeightSequence::Named(named) => {
                return Err(Error::InvalidOperator(format!(
                    "weighted permutation weights must be eventually periodic, got named sequence {}",
                    named.name()
                )))
            }
        };
        if let Some(n) = WeightSequence::Periodic(weights.clone()).first_zero() {
            return Err(Error::InvalidOperator(format!(
                "weighted permutation weight at index {n} is zero"
            )));
        }
        let inverse = perm.inverse();
        Ok(WeightedPermutation { perm, weights, inverse })
    }

    pub fn permutation(&self) -> &ModularPermutation {
        &self.perm
    }

    pub fn inverse_permutation(&self) -> &ModularPermutation {
        &self.inverse
    }

    pub fn weights(&self) -> &PeriodicSequence<S> {
        &self.weights
    }

    pub fn weight_sequence(&self) -> WeightSequence<S> {
        WeightSequence::Periodic(self.weights.clone())
    }

    fn column(&self, m: usize) -> Entries<S> {
        vec![(self.perm.apply(m), self.weights.value(m))]
    }

    fn row(&self, n: usize) -> Entries<S> {
        let m = self.inverse.apply(n);
        vec![(m, self.weights.value(m))]
    }

    /// `(ξ^{-1}, w ∘ ξ^{-1})`.
    fn transpose(&self) -> Self {
        let inv = &self.inverse;
        let q = self.weights.period().len();
        let first_periodic = self.weights.prefix().len() + 1;
        let start = inv.as_map().tail_start().max(first_periodic + inv.reach());
        let period = lcm(inv.as_map().modulus(), q);
        let value = |m: usize| self.weights.value(inv.apply(m));
        let prefix = (1..start).map(value).collect();
        let cycle = (start..start + period).map(value).collect();
        let weights = PeriodicSequence::new(prefix, cycle).expect("weights stay positive");
        WeightedPermutation { perm: inv.clone(), weights, inverse: self.perm.clone() }
    }

    fn structure(&self) -> TailStructure {
        let map = self.perm.as_map();
        TailStructure {
            start: map.tail_start().max(self.weights.prefix().len() + 1),
            period: lcm(map.modulus(), self.weights.period().len()),
            reach: self.perm.reach(),
            values_periodic: true,
        }
    }
}

/// Finitely presented infinite nonnegative matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorSpec<S> {
    Banded(Banded<S>),
    WeightedPermutation(WeightedPermutation<S>),
    Sum(Vec<OperatorSpec<S>>),
}

/// Eventual translation periodicity of the columns of a spec.
///
/// For every `m >= start`, the rows of the nonzero entries of column
/// `m + period` are those of column `m` plus `period`; when
/// `values_periodic` holds the values agree as well. Every nonzero entry
/// `a_{n,m}` satisfies `|n - m| <= reach`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TailStructure {
    pub start: usize,
    pub period: usize,
    pub reach: usize,
    pub values_periodic: bool,
}

impl TailStructure {
    fn combine(self, other: TailStructure) -> TailStructure {
        TailStructure {
            start: self.start.max(other.start),
            period: lcm(self.period, other.period),
            reach: self.reach.max(other.reach),
            values_periodic: self.values_periodic && other.values_periodic,
        }
    }

    /// Indices `1..bound` decide every translation-invariant column property.
    pub fn decisive_bound(&self) -> usize {
        self.start + self.period
    }
}

impl<S: Scalar> OperatorSpec<S> {
    pub fn banded(lower: usize, upper: usize, diagonals: impl IntoIterator<Item = (i64, WeightSequence<S>)>) -> Result<Self> {
        Banded::new(lower, upper, diagonals.into_iter().collect()).map(OperatorSpec::Banded)
    }

    /// Diagonal operator `e_n -> d_n e_n`.
    pub fn diagonal(weights: WeightSequence<S>) -> Self {
        OperatorSpec::banded(0, 0, [(0, weights)]).expect("offset 0 is always in the band")
    }

    /// Tridiagonal operator from its sub-diagonal `a_{n+1,n}`, main diagonal
    /// and super-diagonal `a_{n,n+1}`.
    pub fn tridiagonal(sub: WeightSequence<S>, main: WeightSequence<S>, sup: WeightSequence<S>) -> Self {
        OperatorSpec::banded(1, 1, [(1, sub), (0, main), (-1, sup)]).expect("offsets within the band")
    }

    /// Unilateral shift `e_n -> e_{n+1}`.
    pub fn shift() -> Self {
        OperatorSpec::banded(1, 0, [(1, WeightSequence::constant(S::one()).unwrap())]).unwrap()
    }

    /// Backward shift `e_1 -> 0`, `e_n -> e_{n-1}`.
    pub fn backward_shift() -> Self {
        OperatorSpec::shift().transpose()
    }

    pub fn weighted_permutation(perm: ModularPermutation, weights: WeightSequence<S>) -> Result<Self> {
        WeightedPermutation::new(perm, weights).map(OperatorSpec::WeightedPermutation)
    }

    pub fn sum(terms: Vec<OperatorSpec<S>>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidOperator("sum needs at least one term".into()));
        }
        Ok(OperatorSpec::Sum(terms))
    }

    /// Nonzero entries of column `m`, i.e. of `T e_m`.
    pub fn column(&self, m: usize) -> Entries<S> {
        assert!(m >= 1, "indices start at 1");
        match self {
            OperatorSpec::Banded(b) => b.column(m),
            OperatorSpec::WeightedPermutation(w) => w.column(m),
            OperatorSpec::Sum(terms) => merge(terms.iter().map(|t| t.column(m))),
        }
    }

    /// Nonzero entries of row `n`.
    pub fn row(&self, n: usize) -> Entries<S> {
        assert!(n >= 1, "indices start at 1");
        match self {
            OperatorSpec::Banded(b) => b.row(n),
            OperatorSpec::WeightedPermutation(w) => w.row(n),
            OperatorSpec::Sum(terms) => merge(terms.iter().map(|t| t.row(n))),
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> S {
        match self {
            OperatorSpec::Banded(b) => b.entry(row, col),
            _ => self
                .column(col)
                .into_iter()
                .find(|&(n, _)| n == row)
                .map_or_else(S::zero, |(_, v)| v),
        }
    }

    pub fn apply(&self, x: &FiniteVector<S>) -> FiniteVector<S> {
        let mut out = FiniteVector::zero();
        for (m, xm) in x.iter() {
            for (n, a) in self.column(m) {
                out.add_at(n, a * xm.clone());
            }
        }
        out
    }

    /// `T^power e_col`.
    pub fn power_column(&self, power: usize, col: usize) -> FiniteVector<S> {
        let mut v = FiniteVector::basis(col);
        for _ in 0..power {
            v = self.apply(&v);
        }
        v
    }

    /// `(T^power e_i)_j`, computed exactly by repeated application.
    pub fn matrix_power_entry(&self, power: usize, i: usize, j: usize) -> S {
        assert!(power >= 1, "power starts at 1");
        self.power_column(power, i).get(j)
    }

    pub fn transpose(&self) -> Self {
        match self {
            OperatorSpec::Banded(b) => OperatorSpec::Banded(b.transpose()),
            OperatorSpec::WeightedPermutation(w) => OperatorSpec::WeightedPermutation(w.transpose()),
            OperatorSpec::Sum(terms) => OperatorSpec::Sum(terms.iter().map(OperatorSpec::transpose).collect()),
        }
    }

    /// Column periodicity data.
    pub fn tail_structure(&self) -> TailStructure {
        match self {
            OperatorSpec::Banded(b) => b.structure(),
            OperatorSpec::WeightedPermutation(w) => w.structure(),
            OperatorSpec::Sum(terms) => terms
                .iter()
                .map(OperatorSpec::tail_structure)
                .reduce(TailStructure::combine)
                .expect("sums are nonempty"),
        }
    }

    /// Row periodicity data (the column structure of the transpose).
    pub fn row_structure(&self) -> TailStructure {
        self.transpose().tail_structure()
    }

    /// Nested sums replaced by one flat list of non-sum terms.
    pub fn flatten(&self) -> Self {
        fn collect<S: Scalar>(spec: &OperatorSpec<S>, out: &mut Vec<OperatorSpec<S>>) {
            match spec {
                OperatorSpec::Sum(terms) => terms.iter().for_each(|t| collect(t, out)),
                other => out.push(other.clone()),
            }
        }
        let mut terms = Vec::new();
        collect(self, &mut terms);
        if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            OperatorSpec::Sum(terms)
        }
    }

    /// Single band presentation of the same matrix, when one exists: always
    /// for value-periodic specs, and for named diagonals as long as no two
    /// terms of a sum put weight on the same diagonal.
    pub fn to_banded(&self) -> Option<Banded<S>> {
        match self {
            OperatorSpec::Banded(b) => Some(b.clone()),
            _ if self.tail_structure().values_periodic => Some(self.periodic_to_banded()),
            OperatorSpec::WeightedPermutation(_) => unreachable!("weighted permutations are value periodic"),
            OperatorSpec::Sum(terms) => {
                let mut diagonals: BTreeMap<i64, WeightSequence<S>> = BTreeMap::new();
                let (mut lower, mut upper) = (0, 0);
                for term in terms {
                    let band = term.to_banded()?;
                    lower = lower.max(band.lower);
                    upper = upper.max(band.upper);
                    for (o, seq) in band.diagonals {
                        let merged = match diagonals.remove(&o) {
                            None => seq,
                            Some(prev) => add_sequences(&prev, &seq)?,
                        };
                        diagonals.insert(o, merged);
                    }
                }
                Banded::new(lower, upper, diagonals).ok()
            }
        }
    }

    fn periodic_to_banded(&self) -> Banded<S> {
        let s = self.tail_structure();
        let mut offsets = std::collections::BTreeSet::new();
        for m in 1..s.decisive_bound() {
            offsets.extend(self.column(m).into_iter().map(|(n, _)| n as i64 - m as i64));
        }
        let first_periodic = s.start + s.reach;
        let position = |o: i64, t: usize| {
            if o >= 0 {
                (t + o as usize, t)
            } else {
                (t, t + o.unsigned_abs() as usize)
            }
        };
        let diagonals: BTreeMap<i64, WeightSequence<S>> = offsets
            .into_iter()
            .map(|o| {
                let value = |t: usize| {
                    let (row, col) = position(o, t);
                    self.entry(row, col)
                };
                let prefix = (1..first_periodic).map(value).collect();
                let cycle = (first_periodic..first_periodic + s.period).map(value).collect();
                (o, WeightSequence::periodic(prefix, cycle).expect("entries are nonnegative"))
            })
            .collect();
        let lower = diagonals.keys().map(|&o| o.max(0) as usize).max().unwrap_or(0);
        let upper = diagonals.keys().map(|&o| (-o).max(0) as usize).max().unwrap_or(0);
        Banded::new(lower, upper, diagonals).expect("offsets fit their band")
    }

    /// Tridiagonal band form (offsets within `[-1, 1]`), if the operator has one.
    pub fn as_tridiagonal(&self) -> Option<Banded<S>> {
        self.to_banded().filter(Banded::is_tridiagonal)
    }

    /// Every entry multiplied by `factor > 0`. `None` for specs with named
    /// weights, whose scaled values have no presentation.
    pub fn scaled(&self, factor: &S) -> Option<Self> {
        assert!(factor.is_positive(), "scaling factor must be positive");
        let scale_seq = |seq: &PeriodicSequence<S>| {
            PeriodicSequence::new(
                seq.prefix().iter().map(|v| v.clone() * factor.clone()).collect(),
                seq.period().iter().map(|v| v.clone() * factor.clone()).collect(),
            )
            .expect("scaling keeps entries nonnegative")
        };
        match self {
            OperatorSpec::Banded(b) => {
                let diagonals = b
                    .diagonals
                    .iter()
                    .map(|(&o, seq)| seq.as_periodic().map(|p| (o, WeightSequence::Periodic(scale_seq(p)))))
                    .collect::<Option<BTreeMap<_, _>>>()?;
                Some(OperatorSpec::Banded(Banded { lower: b.lower, upper: b.upper, diagonals }))
            }
            OperatorSpec::WeightedPermutation(w) => Some(OperatorSpec::WeightedPermutation(
                WeightedPermutation::new(w.perm.clone(), WeightSequence::Periodic(scale_seq(&w.weights))).ok()?,
            )),
            OperatorSpec::Sum(terms) => terms.iter().map(|t| t.scaled(factor)).collect::<Option<Vec<_>>>().map(OperatorSpec::Sum),
        }
    }

    /// Short human-readable description of the presentation.
    pub fn kind(&self) -> &'static str {
        match self {
            OperatorSpec::Banded(_) => "banded",
            OperatorSpec::WeightedPermutation(_) => "weightedPermutation",
            OperatorSpec::Sum(_) => "sum",
        }
    }
}

fn merge<S: Scalar>(parts: impl Iterator<Item = Entries<S>>) -> Entries<S> {
    let mut acc: BTreeMap<usize, S> = BTreeMap::new();
    for (i, v) in parts.flatten() {
        let slot = acc.entry(i).or_insert_with(S::zero);
        *slot = slot.clone() + v;
    }
    acc.into_iter().collect()
}

fn add_sequences<S: Scalar>(a: &WeightSequence<S>, b: &WeightSequence<S>) -> Option<WeightSequence<S>> {
    let (a, b) = (a.as_periodic()?, b.as_periodic()?);
    let prefix_len = a.prefix().len().max(b.prefix().len());
    let period = lcm(a.period().len(), b.period().len());
    let value = |n: usize| a.value(n) + b.value(n);
    WeightSequence::periodic(
        (1..=prefix_len).map(value).collect(),
        (prefix_len + 1..=prefix_len + period).map(value).collect(),
    )
    .ok()
}
