//! Exact lattice-structural classification.
//!
//! A positive operator is a lattice homomorphism iff every row of its matrix
//! has at most one nonzero entry, and an injective one iff in addition no
//! column is null. Because specs are eventually translation periodic (see
//! [`TailStructure`]), checking the rows or columns below
//! [`TailStructure::decisive_bound`] settles the whole infinite matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::operator::{OperatorSpec, TailStructure};
use crate::permutation::{ModularMap, ModularPermutation};
use crate::scalar::Scalar;
use crate::sequence::WeightSequence;
use crate::vector::FiniteVector;

/// What was checked to reach a `Holds` verdict: indices `1..checked_below`
/// were examined directly, and beyond `tail_start` the pattern repeats with
/// `period`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub description: String,
    pub checked_below: usize,
    pub tail_start: usize,
    pub period: usize,
}

impl Certificate {
    fn new(description: impl Into<String>, structure: &TailStructure) -> Self {
        Certificate {
            description: description.into(),
            checked_below: structure.decisive_bound(),
            tail_start: structure.start,
            period: structure.period,
        }
    }
}

/// Concrete indices exhibiting a failed property; reproducible with
/// [`OperatorSpec::row`] and [`OperatorSpec::column`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    RowWithTwoEntries { row: usize, columns: (usize, usize) },
    ColumnWithTwoEntries { column: usize, rows: (usize, usize) },
    NullColumn { column: usize },
    RowHitTwice { row: usize, columns: (usize, usize) },
    RowNeverHit { row: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::RowWithTwoEntries { row, columns: (a, b) } => {
                write!(f, "row {row} has nonzero entries in columns {a} and {b}")
            }
            Witness::ColumnWithTwoEntries { column, rows: (a, b) } => {
                write!(f, "column {column} has nonzero entries in rows {a} and {b}")
            }
            Witness::NullColumn { column } => write!(f, "column {column} is null"),
            Witness::RowHitTwice { row, columns: (a, b) } => {
                write!(f, "columns {a} and {b} both map to row {row}")
            }
            Witness::RowNeverHit { row } => write!(f, "row {row} is null"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict<T = ()> {
    Holds { certificate: Certificate, value: T },
    Fails { witness: Witness },
}

pub type ClassificationVerdict = Verdict<()>;

/// Extracted `(ξ, w)` with `T e_n = w_n e_{ξ(n)}`.
pub type PermutationForm<S> = (ModularPermutation, WeightSequence<S>);

impl<T> Verdict<T> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn witness(&self) -> Option<Witness> {
        match self {
            Verdict::Holds { .. } => None,
            Verdict::Fails { witness } => Some(*witness),
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Verdict::Holds { value, .. } => Some(value),
            Verdict::Fails { .. } => None,
        }
    }
}

/// Every row has at most one nonzero entry.
pub fn is_lattice_homomorphism<S: Scalar>(spec: &OperatorSpec<S>) -> ClassificationVerdict {
    let rows = spec.row_structure();
    for n in 1..rows.decisive_bound() {
        let row = spec.row(n);
        if row.len() >= 2 {
            return Verdict::Fails { witness: Witness::RowWithTwoEntries { row: n, columns: (row[0].0, row[1].0) } };
        }
    }
    Verdict::Holds { certificate: Certificate::new("every row has at most one nonzero entry", &rows), value: () }
}

/// No null column; requires a lattice homomorphism.
pub fn is_injective_homomorphism<S: Scalar>(spec: &OperatorSpec<S>) -> Result<ClassificationVerdict> {
    if let Verdict::Fails { witness } = is_lattice_homomorphism(spec) {
        return Err(Error::PreconditionViolated(format!("not a lattice homomorphism: {witness}")));
    }
    let cols = spec.tail_structure();
    Ok(match first_null_column(spec) {
        Some(column) => Verdict::Fails { witness: Witness::NullColumn { column } },
        None => Verdict::Holds { certificate: Certificate::new("no column is null", &cols), value: () },
    })
}

pub(crate) fn first_null_column<S: Scalar>(spec: &OperatorSpec<S>) -> Option<usize> {
    (1..spec.tail_structure().decisive_bound()).find(|&m| spec.column(m).is_empty())
}

pub(crate) fn first_null_row<S: Scalar>(spec: &OperatorSpec<S>) -> Option<usize> {
    (1..spec.row_structure().decisive_bound()).find(|&n| spec.row(n).is_empty())
}

/// Every column has exactly one nonzero entry and the induced index map is
/// a bijection; on success returns the extracted `(ξ, w)`.
pub fn detect_weighted_permutation<S: Scalar>(spec: &OperatorSpec<S>) -> Result<Verdict<PermutationForm<S>>> {
    if let OperatorSpec::WeightedPermutation(w) = spec {
        let certificate = Certificate::new("presented as a weighted permutation", &spec.tail_structure());
        return Ok(Verdict::Holds { certificate, value: (w.permutation().clone(), w.weight_sequence()) });
    }
    let cols = spec.tail_structure();
    let bound = cols.decisive_bound();
    let mut targets = Vec::with_capacity(bound);
    for m in 1..bound {
        let column = spec.column(m);
        match column.as_slice() {
            [] => return Ok(Verdict::Fails { witness: Witness::NullColumn { column: m } }),
            [(n, v)] => targets.push((*n, v.clone())),
            [(a, _), (b, _), ..] => {
                return Ok(Verdict::Fails { witness: Witness::ColumnWithTwoEntries { column: m, rows: (*a, *b) } })
            }
        }
    }
    let head: Vec<usize> = targets[..cols.start - 1].iter().map(|(n, _)| *n).collect();
    let mut offsets = vec![0i64; cols.period];
    for m in cols.start..bound {
        offsets[m % cols.period] = targets[m - 1].0 as i64 - m as i64;
    }
    let map = ModularMap::new(head, cols.period, offsets).map_err(|e| Error::ExtractionFailure(e.to_string()))?;
    let perm = match ModularPermutation::from_map(map) {
        Ok(perm) => perm,
        Err(_) => return Ok(Verdict::Fails { witness: first_row_defect(spec) }),
    };
    if !cols.values_periodic {
        return Err(Error::ExtractionFailure(
            "the induced map is a bijection but the weights are not eventually periodic".into(),
        ));
    }
    let weights = WeightSequence::periodic(
        targets[..cols.start - 1].iter().map(|(_, v)| v.clone()).collect(),
        targets[cols.start - 1..].iter().map(|(_, v)| v.clone()).collect(),
    )
    .expect("entries are nonnegative");
    let certificate = Certificate::new("every column has one nonzero entry and the induced map is a bijection", &cols);
    Ok(Verdict::Holds { certificate, value: (perm, weights) })
}

fn first_row_defect<S: Scalar>(spec: &OperatorSpec<S>) -> Witness {
    let rows = spec.row_structure();
    (1..rows.decisive_bound())
        .find_map(|n| match spec.row(n).as_slice() {
            [] => Some(Witness::RowNeverHit { row: n }),
            [(a, _), (b, _), ..] => Some(Witness::RowHitTwice { row: n, columns: (*a, *b) }),
            [_] => None,
        })
        .expect("a non-bijective column map leaves some row empty or doubly hit")
}

/// Candidate for an interval preserving operator: its transpose is a lattice
/// homomorphism, i.e. every column has at most one nonzero entry.
pub fn is_interval_preserving_candidate<S: Scalar>(spec: &OperatorSpec<S>) -> ClassificationVerdict {
    match is_lattice_homomorphism(&spec.transpose()) {
        Verdict::Holds { certificate, .. } => Verdict::Holds {
            certificate: Certificate { description: "every column has at most one nonzero entry".into(), ..certificate },
            value: (),
        },
        Verdict::Fails { witness: Witness::RowWithTwoEntries { row, columns } } => {
            Verdict::Fails { witness: Witness::ColumnWithTwoEntries { column: row, rows: columns } }
        }
        Verdict::Fails { witness } => Verdict::Fails { witness },
    }
}

/// Semantic check `T(x ∨ y) = Tx ∨ Ty`, exact in the scalar type.
pub fn lattice_operation_check<S: Scalar>(spec: &OperatorSpec<S>, x: &FiniteVector<S>, y: &FiniteVector<S>) -> bool {
    spec.apply(&x.sup(y)) == spec.apply(x).sup(&spec.apply(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn ones() -> WeightSequence<Rational> {
        WeightSequence::constant(r(1)).unwrap()
    }

    fn example_one() -> OperatorSpec<Rational> {
        OperatorSpec::tridiagonal(ones(), WeightSequence::zero(), ones())
    }

    /// `T e_1 = e_1 + e_2`, `T e_n = e_{n+1}` for `n >= 2`.
    fn split_first() -> OperatorSpec<Rational> {
        let main = WeightSequence::periodic(vec![r(1)], vec![r(0)]).unwrap();
        OperatorSpec::banded(1, 0, [(0, main), (1, ones())]).unwrap()
    }

    #[test]
    fn weighted_permutations_are_homomorphisms() {
        let xi = ModularPermutation::new(vec![3, 1], 2, vec![-2, 2]).unwrap();
        let spec = OperatorSpec::weighted_permutation(xi, ones()).unwrap();
        assert!(is_lattice_homomorphism(&spec).holds());
        assert!(is_lattice_homomorphism(&OperatorSpec::diagonal(ones())).holds());
    }

    #[test]
    fn example_one_fails_at_row_two() {
        let verdict = is_lattice_homomorphism(&example_one());
        assert_eq!(verdict.witness(), Some(Witness::RowWithTwoEntries { row: 2, columns: (1, 3) }));
    }

    #[test]
    fn injectivity() {
        let shift = OperatorSpec::<Rational>::shift();
        assert!(is_injective_homomorphism(&shift).unwrap().holds());
        let d = OperatorSpec::diagonal(WeightSequence::periodic(vec![r(0)], vec![r(1)]).unwrap());
        assert_eq!(is_injective_homomorphism(&d).unwrap().witness(), Some(Witness::NullColumn { column: 1 }));
        assert!(is_injective_homomorphism(&split_first()).unwrap().holds());
        assert!(matches!(is_injective_homomorphism(&example_one()), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn weighted_permutation_detection() {
        let xi = ModularPermutation::new(vec![3, 1], 2, vec![-2, 2]).unwrap();
        let w = WeightSequence::periodic(vec![r(2)], vec![r(3), r(5)]).unwrap();
        let spec = OperatorSpec::weighted_permutation(xi.clone(), w.clone()).unwrap();
        let verdict = detect_weighted_permutation(&spec).unwrap();
        assert_eq!(verdict.value(), Some(&(xi.clone(), w.clone())));
        // the same operator presented as a band is recognised too
        let band = OperatorSpec::Banded(spec.to_banded().unwrap());
        assert_eq!(detect_weighted_permutation(&band).unwrap().value(), Some(&(xi, w)));

        assert_eq!(
            detect_weighted_permutation(&split_first()).unwrap().witness(),
            Some(Witness::ColumnWithTwoEntries { column: 1, rows: (1, 2) })
        );
        assert!(!detect_weighted_permutation(&example_one()).unwrap().holds());
        assert_eq!(
            detect_weighted_permutation(&OperatorSpec::<Rational>::shift()).unwrap().witness(),
            Some(Witness::RowNeverHit { row: 1 })
        );
    }

    #[test]
    fn interval_preserving() {
        assert_eq!(
            is_interval_preserving_candidate(&example_one().transpose()).witness(),
            Some(Witness::ColumnWithTwoEntries { column: 2, rows: (1, 3) })
        );
        assert!(is_interval_preserving_candidate(&OperatorSpec::diagonal(ones())).holds());
        assert!(is_interval_preserving_candidate(&OperatorSpec::<Rational>::shift()).holds());
        assert!(is_interval_preserving_candidate(&OperatorSpec::<Rational>::backward_shift()).holds());
    }

    #[test]
    fn lattice_operation() {
        let d = OperatorSpec::diagonal(WeightSequence::constant(r(2)).unwrap());
        assert!(lattice_operation_check(&d, &FiniteVector::basis(1), &FiniteVector::basis(2)));
        let t = example_one();
        let (x, y) = (FiniteVector::basis(1), FiniteVector::basis(3));
        assert!(!lattice_operation_check(&t, &x, &y));
        assert_eq!(t.apply(&x.sup(&y)).get(2), r(2));
        assert_eq!(t.apply(&x).sup(&t.apply(&y)).get(2), r(1));
    }
}
