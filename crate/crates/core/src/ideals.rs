//! Non-trivial closed invariant coordinate ideals.
//!
//! An ideal is encoded by its zero set `Z`: `I_Z = {x : x_m = 0 for m in Z}`.
//! `I_Z` is invariant under `T` iff no column outside `Z` has a nonzero
//! entry in a row inside `Z`. Each construction below is checked against
//! that criterion before it is returned.

use std::fmt;

use crate::classify::{self, Verdict};
use crate::error::{Error, Result};
use crate::index_set::{CoordinateIdeal, ExactSet, IndexSet, Progression};
use crate::operator::OperatorSpec;
use crate::permutation::{ModularMap, ModularPermutation};
use crate::scalar::{lcm, Scalar};
use crate::sequence::WeightSequence;

/// Window used when a zero set can only be enumerated.
pub const DEFAULT_WINDOW: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    /// Span of the null columns, mapped to zero.
    Kernel,
    /// `{x : x_row = 0}` for a null row.
    NullRow { row: usize },
    /// Zero set `{ξ^{-(k+1)}(n), ξ^{-(k+2)}(n), ...}` of a weighted permutation.
    OrbitXi { k: usize, n: usize },
    /// Zero set `{φ^{k+1}(n), φ^{k+2}(n), ...}` where `φ` sends a row to the
    /// column owning its only nonzero entry.
    OrbitPhi { k: usize, n: usize },
    /// Zero super-diagonal entry `a_{n0, n0+1}`: zero set `{1, ..., n0}`.
    TridiagonalHead { n0: usize },
    /// Zero sub-diagonal entry `a_{n0+1, n0}`: zero set `{n0+1, n0+2, ...}`.
    TridiagonalTail { n0: usize },
    /// Complement of an ideal built for the transpose.
    TransposeComplement { inner: Box<Method> },
    /// `T e_column` is a multiple of `e_column`: span of that basis vector.
    SingleColumn { column: usize },
    /// No column beyond `n0` reaches a row up to `n0`: zero set `{1, ..., n0}`.
    HeadCut { n0: usize },
    /// No column up to `n0` reaches a row beyond `n0`: zero set `{n0+1, ...}`.
    TailCut { n0: usize },
    /// Zero set: `target` and every index with a path to it.
    BackwardClosure { target: usize },
    /// Zero set: everything except `source` and the indices it reaches.
    ForwardClosure { source: usize },
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::Kernel => "kernel",
            Method::NullRow { .. } => "nullRow",
            Method::OrbitXi { .. } => "orbitXi",
            Method::OrbitPhi { .. } => "orbitPhi",
            Method::TridiagonalHead { .. } => "tridiagonalHead",
            Method::TridiagonalTail { .. } => "tridiagonalTail",
            Method::TransposeComplement { .. } => "transposeComplement",
            Method::SingleColumn { .. } => "singleColumn",
            Method::HeadCut { .. } => "headCut",
            Method::TailCut { .. } => "tailCut",
            Method::BackwardClosure { .. } => "backwardClosure",
            Method::ForwardClosure { .. } => "forwardClosure",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Kernel | Method::TransposeComplement { .. } => {}
            Method::NullRow { row } => return write!(f, "nullRow(row={row})"),
            Method::OrbitXi { k, n } => return write!(f, "orbitXi(k={k}, n={n})"),
            Method::OrbitPhi { k, n } => return write!(f, "orbitPhi(k={k}, n={n})"),
            Method::TridiagonalHead { n0 } => return write!(f, "tridiagonalHead(n0={n0})"),
            Method::TridiagonalTail { n0 } => return write!(f, "tridiagonalTail(n0={n0})"),
            Method::SingleColumn { column } => return write!(f, "singleColumn(column={column})"),
            Method::HeadCut { n0 } => return write!(f, "headCut(n0={n0})"),
            Method::TailCut { n0 } => return write!(f, "tailCut(n0={n0})"),
            Method::BackwardClosure { target } => return write!(f, "backwardClosure(target={target})"),
            Method::ForwardClosure { source } => return write!(f, "forwardClosure(source={source})"),
        }
        match self {
            Method::TransposeComplement { inner } => write!(f, "transposeComplement({inner})"),
            _ => f.write_str(self.tag()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Properness {
    /// `excluded` is outside the zero set (and the zero set is nonempty).
    Exact { excluded: usize },
    /// Only enumerated up to the window.
    VerifiedUpToWindow(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariance {
    ExactYes,
    WindowYes(usize),
    /// Column `column` lies outside the zero set but has a nonzero entry in
    /// row `row`, which lies inside it.
    No { column: usize, row: usize },
}

impl Invariance {
    pub fn is_exact_yes(&self) -> bool {
        matches!(self, Invariance::ExactYes)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdealConstruction {
    pub ideal: CoordinateIdeal,
    pub method: Method,
    pub properness: Properness,
    pub verification: Invariance,
}

impl IdealConstruction {
    pub(crate) fn build<S: Scalar>(spec: &OperatorSpec<S>, zero_set: IndexSet, method: Method, window: usize) -> Result<Self> {
        let ideal = CoordinateIdeal::new(zero_set);
        let verification = verify_ideal_invariance(spec, &ideal, window);
        if let Invariance::No { column, row } = verification {
            return Err(Error::VerificationFailed { column, row });
        }
        let properness = match ideal.zero_set.first_excluded() {
            Some((excluded, true)) if !ideal.zero_set.is_empty() => Properness::Exact { excluded },
            _ => Properness::VerifiedUpToWindow(window),
        };
        Ok(IdealConstruction { ideal, method, properness, verification })
    }

    /// Exactly proven proper and invariant.
    pub fn is_exact(&self) -> bool {
        matches!(self.properness, Properness::Exact { .. }) && self.verification.is_exact_yes()
    }

    pub fn zero_set(&self) -> &IndexSet {
        &self.ideal.zero_set
    }
}

/// Decides whether `ideal` is invariant. Exact zero sets are decided
/// exactly: the invariance predicate of column `m` is periodic in `m` once
/// both the operator and the zero set are in their periodic regime, so finitely
/// many columns settle it. Enumerated zero sets are checked on columns
/// `1..=window` only.
pub fn verify_ideal_invariance<S: Scalar>(spec: &OperatorSpec<S>, ideal: &CoordinateIdeal, window: usize) -> Invariance {
    assert!(window >= 1, "window must be positive");
    match &ideal.zero_set {
        IndexSet::Exact(zero) => {
            let s = spec.tail_structure();
            let first = s.start.max(zero.threshold() + s.reach);
            let bound = first + lcm(s.period, zero.period());
            first_violation(spec, 1..bound, |n| zero.contains(n))
                .map_or(Invariance::ExactYes, |(column, row)| Invariance::No { column, row })
        }
        IndexSet::WindowEnumerated { members, .. } => {
            first_violation(spec, 1..window + 1, |n| n <= window && members.contains(&n))
                .map_or(Invariance::WindowYes(window), |(column, row)| Invariance::No { column, row })
        }
    }
}

fn first_violation<S: Scalar>(
    spec: &OperatorSpec<S>,
    columns: std::ops::Range<usize>,
    in_zero_set: impl Fn(usize) -> bool,
) -> Option<(usize, usize)> {
    columns
        .filter(|&m| !in_zero_set(m))
        .find_map(|m| spec.column(m).into_iter().find(|&(n, _)| in_zero_set(n)).map(|(n, _)| (m, n)))
}

/// Null columns as an exact set.
pub fn null_columns<S: Scalar>(spec: &OperatorSpec<S>) -> ExactSet {
    let s = spec.tail_structure();
    let null = |m: usize| spec.column(m).is_empty();
    ExactSet::new(
        (1..s.start).filter(|&m| null(m)),
        (s.start..s.start + s.period).filter(|&m| null(m)).map(|m| Progression::new(m, s.period)),
    )
}

/// Ideal spanned by the null columns, i.e. the kernel when `spec` is a
/// lattice homomorphism. Absent when there is no null column, or when every
/// column is null (the kernel is then the whole space).
pub fn kernel_ideal<S: Scalar>(spec: &OperatorSpec<S>) -> Result<Option<IdealConstruction>> {
    let null = null_columns(spec);
    if null.is_empty() || null.is_everything() {
        return Ok(None);
    }
    IdealConstruction::build(spec, IndexSet::Exact(null.complement()), Method::Kernel, DEFAULT_WINDOW).map(Some)
}

/// `{x : x_{n0} = 0}` for the first null row `n0`.
pub fn null_row_ideal<S: Scalar>(spec: &OperatorSpec<S>) -> Result<Option<IdealConstruction>> {
    match classify::first_null_row(spec) {
        None => Ok(None),
        Some(row) => IdealConstruction::build(
            spec,
            IndexSet::Exact(ExactSet::finite([row])),
            Method::NullRow { row },
            DEFAULT_WINDOW,
        )
        .map(Some),
    }
}

/// Orbit ideal of the weighted permutation `e_m -> w_m e_{ξ(m)}`: zero set
/// `A_k(n) = {ξ^{-(k+1)}(n), ξ^{-(k+2)}(n), ...}`.
pub fn orbit_xi_ideal<S: Scalar>(
    perm: &ModularPermutation,
    weights: &WeightSequence<S>,
    k: usize,
    n: usize,
    window: usize,
) -> Result<IdealConstruction> {
    assert!(n >= 1, "indices start at 1");
    let spec = OperatorSpec::weighted_permutation(perm.clone(), weights.clone())?;
    let zero_set = perm.inverse().as_map().orbit(k, n, window);
    IdealConstruction::build(&spec, zero_set, Method::OrbitXi { k, n }, window)
}

/// The map sending each row index to the column holding that row's unique
/// nonzero entry. Needs a lattice homomorphism without null rows or null
/// columns; it is then total and surjective.
pub fn phi_map<S: Scalar>(spec: &OperatorSpec<S>) -> Result<ModularMap> {
    if let Verdict::Fails { witness } = classify::is_lattice_homomorphism(spec) {
        return Err(Error::PreconditionViolated(format!("not a lattice homomorphism: {witness}")));
    }
    if let Some(row) = classify::first_null_row(spec) {
        return Err(Error::PreconditionViolated(format!("row {row} is null")));
    }
    if let Some(column) = classify::first_null_column(spec) {
        return Err(Error::PreconditionViolated(format!("column {column} is null")));
    }
    let rows = spec.row_structure();
    let owner = |k: usize| spec.row(k)[0].0;
    let head = (1..rows.start).map(owner).collect();
    let mut offsets = vec![0i64; rows.period];
    for k in rows.start..rows.decisive_bound() {
        offsets[k % rows.period] = owner(k) as i64 - k as i64;
    }
    ModularMap::new(head, rows.period, offsets)
}

/// Zero set `Ã_k(n) = {φ^{k+1}(n), φ^{k+2}(n), ...}`.
pub fn orbit_phi_ideal<S: Scalar>(spec: &OperatorSpec<S>, k: usize, n: usize, window: usize) -> Result<IdealConstruction> {
    assert!(n >= 1, "indices start at 1");
    let phi = phi_map(spec)?;
    let zero_set = phi.orbit(k, n, window);
    IdealConstruction::build(spec, zero_set, Method::OrbitPhi { k, n }, window)
}

/// Ideal from the first zero off-diagonal entry of a tridiagonal spec: a
/// zero `a_{n0, n0+1}` gives the span of `e_j, j > n0`; otherwise a zero
/// `a_{n0+1, n0}` gives the span of `e_1, ..., e_{n0}`.
pub fn tridiagonal_zero_ideal<S: Scalar>(spec: &OperatorSpec<S>) -> Result<Option<IdealConstruction>> {
    let band = spec.as_tridiagonal().ok_or(Error::NotTridiagonal)?;
    let first_zero = |offset: i64| band.diagonal(offset).map_or(Some(1), WeightSequence::first_zero);
    let (zero_set, method) = if let Some(n0) = first_zero(-1) {
        (ExactSet::up_to(n0), Method::TridiagonalHead { n0 })
    } else if let Some(n0) = first_zero(1) {
        (ExactSet::from_index(n0 + 1), Method::TridiagonalTail { n0 })
    } else {
        return Ok(None);
    };
    IdealConstruction::build(spec, IndexSet::Exact(zero_set), method, DEFAULT_WINDOW).map(Some)
}

/// The constructive route for a lattice homomorphism: kernel, then a null
/// row, then the orbit ideal of the weighted-permutation form, then the
/// `φ`-orbit ideal, all with `k = 0` and `n = 1`.
pub fn lattice_invariant_ideal<S: Scalar>(spec: &OperatorSpec<S>, window: usize) -> Result<Option<IdealConstruction>> {
    if let Verdict::Fails { witness } = classify::is_lattice_homomorphism(spec) {
        return Err(Error::PreconditionViolated(format!("not a lattice homomorphism: {witness}")));
    }
    if let Some(found) = kernel_ideal(spec)? {
        return Ok(Some(found));
    }
    if let Some(found) = null_row_ideal(spec)? {
        return Ok(Some(found));
    }
    if let Verdict::Holds { value: (perm, weights), .. } = classify::detect_weighted_permutation(spec)? {
        let found = orbit_xi_ideal(&perm, &weights, 0, 1, window)?;
        // orbit_xi_ideal verifies against the extracted form; recheck on the operator itself
        return IdealConstruction::build(spec, found.ideal.zero_set, found.method, window).map(Some);
    }
    orbit_phi_ideal(spec, 0, 1, window).map(Some)
}

/// For a spec whose transpose is a lattice homomorphism: build an invariant
/// ideal for the transpose and return the complementary one, re-verified
/// against `spec` itself.
pub fn transpose_complement_ideal<S: Scalar>(spec: &OperatorSpec<S>, window: usize) -> Result<Option<IdealConstruction>> {
    if let Verdict::Fails { witness } = classify::is_interval_preserving_candidate(spec) {
        return Err(Error::PreconditionViolated(format!("not an interval preserving candidate: {witness}")));
    }
    let Some(inner) = lattice_invariant_ideal(&spec.transpose(), window)? else {
        return Ok(None);
    };
    let Some(zero) = inner.ideal.zero_set.as_exact() else {
        // complement of an enumerated set is not known outside the window
        return Ok(None);
    };
    let method = Method::TransposeComplement { inner: Box::new(inner.method.clone()) };
    IdealConstruction::build(spec, IndexSet::Exact(zero.complement()), method, window).map(Some)
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

    fn two_chain() -> ModularPermutation {
        ModularPermutation::new(vec![3, 1], 2, vec![-2, 2]).unwrap()
    }

    fn split_first() -> OperatorSpec<Rational> {
        let main = WeightSequence::periodic(vec![r(1)], vec![r(0)]).unwrap();
        OperatorSpec::banded(1, 0, [(0, main), (1, ones())]).unwrap()
    }

    fn exact(set: ExactSet) -> IndexSet {
        IndexSet::Exact(set)
    }

    #[test]
    fn kernel() {
        let d = OperatorSpec::diagonal(WeightSequence::periodic(vec![r(0)], vec![r(1)]).unwrap());
        let k = kernel_ideal(&d).unwrap().unwrap();
        assert_eq!(k.zero_set(), &exact(ExactSet::from_index(2)));
        assert!(k.is_exact());
        assert!(kernel_ideal(&OperatorSpec::<Rational>::shift()).unwrap().is_none());
        let wp = OperatorSpec::weighted_permutation(two_chain(), ones()).unwrap();
        assert!(kernel_ideal(&wp).unwrap().is_none());
    }

    #[test]
    fn null_row() {
        let found = null_row_ideal(&OperatorSpec::<Rational>::shift()).unwrap().unwrap();
        assert_eq!(found.zero_set(), &exact(ExactSet::finite([1])));
        assert_eq!(found.method, Method::NullRow { row: 1 });
        assert!(null_row_ideal(&example_one()).unwrap().is_none());
        assert!(null_row_ideal(&OperatorSpec::diagonal(ones())).unwrap().is_none());
    }

    #[test]
    fn orbit_xi() {
        let t = ModularPermutation::transposition(1, 2);
        let found = orbit_xi_ideal(&t, &ones(), 0, 1, 100).unwrap();
        assert_eq!(found.zero_set(), &exact(ExactSet::finite([1, 2])));

        let found = orbit_xi_ideal(&two_chain(), &ones(), 0, 1, 100).unwrap();
        assert_eq!(found.zero_set(), &exact(ExactSet::new([], [Progression::new(2, 2)])));
        assert!(found.is_exact());

        let found = orbit_xi_ideal(&ModularPermutation::identity(), &ones(), 0, 5, 100).unwrap();
        assert_eq!(found.zero_set(), &exact(ExactSet::finite([5])));
    }

    #[test]
    fn phi() {
        let phi = phi_map(&split_first()).unwrap();
        let got: Vec<_> = (1..=8).map(|k| phi.apply(k)).collect();
        assert_eq!(got, vec![1, 1, 2, 3, 4, 5, 6, 7]);

        let wp = OperatorSpec::weighted_permutation(two_chain(), ones()).unwrap();
        assert_eq!(&phi_map(&wp).unwrap(), two_chain().inverse().as_map());
        assert!(phi_map(&OperatorSpec::diagonal(ones())).unwrap().is_identity());
        assert!(matches!(phi_map(&OperatorSpec::<Rational>::shift()), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn orbit_phi() {
        let found = orbit_phi_ideal(&split_first(), 0, 1, 100).unwrap();
        assert_eq!(found.zero_set(), &exact(ExactSet::finite([1])));
        assert!(found.is_exact());

        let wp = OperatorSpec::weighted_permutation(two_chain(), ones()).unwrap();
        let via_phi = orbit_phi_ideal(&wp, 0, 1, 100).unwrap();
        let via_xi = orbit_xi_ideal(&two_chain(), &ones(), 0, 1, 100).unwrap();
        assert_eq!(via_phi.zero_set(), via_xi.zero_set());
    }

    #[test]
    fn tridiagonal_zero() {
        let sup = WeightSequence::periodic(vec![r(1), r(1), r(0)], vec![r(1)]).unwrap();
        let t = OperatorSpec::tridiagonal(ones(), ones(), sup);
        let found = tridiagonal_zero_ideal(&t).unwrap().unwrap();
        assert_eq!(found.method, Method::TridiagonalHead { n0: 3 });
        assert_eq!(found.zero_set(), &exact(ExactSet::up_to(3)));
        for k in 1..=20 {
            for i in 1..=3 {
                for j in 4..=12 {
                    assert_eq!(t.matrix_power_entry(k, j, i), r(0));
                }
            }
        }

        let shift = tridiagonal_zero_ideal(&OperatorSpec::<Rational>::shift()).unwrap().unwrap();
        assert_eq!(shift.zero_set(), &exact(ExactSet::finite([1])));
        assert!(tridiagonal_zero_ideal(&example_one()).unwrap().is_none());

        let sub = WeightSequence::periodic(vec![r(2), r(0)], vec![r(1)]).unwrap();
        let t = OperatorSpec::tridiagonal(sub, ones(), ones());
        let found = tridiagonal_zero_ideal(&t).unwrap().unwrap();
        assert_eq!(found.method, Method::TridiagonalTail { n0: 2 });
        assert_eq!(found.zero_set(), &exact(ExactSet::from_index(3)));

        let wide: OperatorSpec<Rational> = OperatorSpec::banded(2, 0, [(2, ones())]).unwrap();
        assert_eq!(tridiagonal_zero_ideal(&wide), Err(Error::NotTridiagonal));
    }

    #[test]
    fn transpose_complement() {
        let d = OperatorSpec::diagonal(ones());
        let found = transpose_complement_ideal(&d, 100).unwrap().unwrap();
        assert_eq!(found.zero_set(), &exact(ExactSet::from_index(2)));

        let back = OperatorSpec::<Rational>::backward_shift();
        let found = transpose_complement_ideal(&back, 100).unwrap().unwrap();
        assert_eq!(found.zero_set(), &exact(ExactSet::from_index(2)));
        assert!(found.is_exact());
        assert_eq!(back.column(1), vec![]);

        let wp = OperatorSpec::weighted_permutation(two_chain(), ones()).unwrap();
        let found = transpose_complement_ideal(&wp.transpose(), 100).unwrap().unwrap();
        assert_eq!(found.zero_set(), &exact(ExactSet::new([], [Progression::new(1, 2)])));

        assert!(matches!(transpose_complement_ideal(&example_one(), 100), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn invariance_checks() {
        let one = CoordinateIdeal::from_exact(ExactSet::finite([1]));
        assert_eq!(verify_ideal_invariance(&example_one(), &one, 50), Invariance::No { column: 2, row: 1 });
        assert_eq!(verify_ideal_invariance(&OperatorSpec::<Rational>::shift(), &one, 50), Invariance::ExactYes);
        let evens = CoordinateIdeal::from_exact(ExactSet::new([], [Progression::new(2, 2)]));
        let wp = OperatorSpec::weighted_permutation(two_chain(), ones()).unwrap();
        assert_eq!(verify_ideal_invariance(&wp, &evens, 50), Invariance::ExactYes);
        let window = CoordinateIdeal::new(IndexSet::WindowEnumerated { members: [1].into(), verified_up_to: 30 });
        assert_eq!(verify_ideal_invariance(&OperatorSpec::<Rational>::shift(), &window, 30), Invariance::WindowYes(30));
    }

    #[test]
    fn lattice_invariant_route() {
        let wp = OperatorSpec::weighted_permutation(two_chain(), ones()).unwrap();
        let found = lattice_invariant_ideal(&wp, 100).unwrap().unwrap();
        assert_eq!(found.method, Method::OrbitXi { k: 0, n: 1 });
        let found = lattice_invariant_ideal(&split_first(), 100).unwrap().unwrap();
        assert_eq!(found.method, Method::OrbitPhi { k: 0, n: 1 });
        assert!(lattice_invariant_ideal(&example_one(), 100).is_err());
    }
}
