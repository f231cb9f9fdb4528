//! Ideal-irreducibility: reachability on the support digraph, the
//! tridiagonal characterization, and exhaustive search on finite matrices.
//!
//! The support digraph has an edge `m -> n` whenever `a_{n,m} > 0`. A
//! coordinate ideal with zero set `Z` is invariant iff `Z` is closed under
//! taking predecessors, so `T` has no non-trivial invariant ideal iff every
//! index reaches every other one.

use std::collections::{BTreeMap, VecDeque};

use crate::classify;
use crate::error::{Error, Result};
use crate::finite::FiniteMatrix;
use crate::ideals::{self, IdealConstruction, Method, DEFAULT_WINDOW};
use crate::index_set::{ExactSet, IndexSet, Progression};
use crate::operator::{Banded, OperatorSpec};
use crate::scalar::Scalar;
use crate::sequence::WeightSequence;

/// Largest matrix size accepted by [`brute_force_invariant_zero_sets`].
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Default number of edge visits allowed to one reachability computation.
pub const EDGE_BUDGET: usize = 200_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// Both off-diagonals of a tridiagonal matrix are everywhere positive.
    TridiagonalCorollary,
    /// Every pair in `1..=window` is connected by a path of length at most
    /// `max_power`, and the diagonals at `positive_offsets` are everywhere
    /// positive. Those offsets have both signs and coprime magnitudes,
    /// which connects every pair of the infinite graph.
    ReachabilityTable { window: usize, max_power: usize, positive_offsets: Vec<i64> },
}

impl IrreducibilityCertificate {
    pub fn tag(&self) -> &'static str {
        match self {
            IrreducibilityCertificate::TridiagonalCorollary => "tridiagonalCorollary",
            IrreducibilityCertificate::ReachabilityTable { .. } => "reachabilityTable",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum IrreducibilityVerdict {
    Irreducible { certificate: IrreducibilityCertificate },
    Reducible { ideal: IdealConstruction },
    /// Nothing could be proved with these bounds.
    Unknown { window: usize, max_power: usize },
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Irreducible { .. })
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Reducible { .. })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            IrreducibilityVerdict::Irreducible { .. } => "irreducible",
            IrreducibilityVerdict::Reducible { .. } => "reducible",
            IrreducibilityVerdict::Unknown { .. } => "unknown",
        }
    }

    fn reducible(ideal: IdealConstruction) -> Option<Self> {
        ideal.is_exact().then_some(IrreducibilityVerdict::Reducible { ideal })
    }
}

/// Whether the support digraph has the edge `m -> n`, i.e. `a_{n,m} > 0`.
pub fn support_digraph_edge<S: Scalar>(spec: &OperatorSpec<S>, m: usize, n: usize) -> bool {
    assert!(m >= 1 && n >= 1, "indices start at 1");
    spec.entry(n, m).is_positive()
}

/// Tridiagonal criterion: irreducible iff neither off-diagonal has a zero;
/// otherwise reducible through the ideal of the first zero.
pub fn tridiagonal_irreducibility<S: Scalar>(spec: &OperatorSpec<S>) -> Result<IrreducibilityVerdict> {
    spec.as_tridiagonal().ok_or(Error::NotTridiagonal)?;
    match ideals::tridiagonal_zero_ideal(spec)? {
        None => Ok(IrreducibilityVerdict::Irreducible { certificate: IrreducibilityCertificate::TridiagonalCorollary }),
        Some(ideal) => Ok(IrreducibilityVerdict::Reducible { ideal }),
    }
}

/// Splits `spec` into its main diagonal `D` and the rest `Q`, with
/// `spec = D + Q` entrywise. `D` leaves every coordinate ideal invariant.
pub fn central_decompose<S: Scalar>(spec: &OperatorSpec<S>) -> (OperatorSpec<S>, OperatorSpec<S>) {
    match spec {
        OperatorSpec::Sum(terms) => {
            let (d, q): (Vec<_>, Vec<_>) = terms.iter().map(central_decompose).unzip();
            (OperatorSpec::Sum(d), OperatorSpec::Sum(q))
        }
        _ => {
            let band = spec.to_banded().expect("non-sum specs have a band form");
            let mut rest = band.diagonals().clone();
            let main = rest.remove(&0).unwrap_or_else(WeightSequence::zero);
            let q = OperatorSpec::banded(band.lower(), band.upper(), rest).expect("offsets stay in the band");
            (OperatorSpec::diagonal(main), q)
        }
    }
}

/// Offsets of the diagonals that are everywhere positive, when they prove
/// that every index reaches every other: both signs occur and the gcd of
/// the magnitudes is 1.
pub fn closure_offsets<S: Scalar>(band: &Banded<S>) -> Option<Vec<i64>> {
    let offsets: Vec<i64> = band
        .diagonals()
        .iter()
        .filter(|(&o, seq)| o != 0 && seq.is_everywhere_positive())
        .map(|(&o, _)| o)
        .collect();
    let both_signs = offsets.iter().any(|&o| o > 0) && offsets.iter().any(|&o| o < 0);
    let gcd = offsets.iter().fold(0, |g, &o| num_integer::gcd(g, o.abs()));
    (both_signs && gcd == 1).then_some(offsets)
}

/// Lazily built adjacency of the infinite support digraph.
struct SupportGraph<'a, S> {
    spec: &'a OperatorSpec<S>,
    forward: Vec<Vec<usize>>,
    backward: Vec<Vec<usize>>,
    visits: usize,
    budget: usize,
}

impl<'a, S: Scalar> SupportGraph<'a, S> {
    fn new(spec: &'a OperatorSpec<S>, budget: usize) -> Self {
        SupportGraph { spec, forward: vec![Vec::new()], backward: vec![Vec::new()], visits: 0, budget }
    }

    fn successors(&mut self, m: usize) -> Result<&[usize]> {
        while self.forward.len() <= m {
            let next = self.forward.len();
            self.forward.push(self.spec.column(next).into_iter().map(|(n, _)| n).collect());
        }
        self.charge(self.forward[m].len())?;
        Ok(&self.forward[m])
    }

    fn predecessors(&mut self, n: usize) -> Result<&[usize]> {
        while self.backward.len() <= n {
            let next = self.backward.len();
            self.backward.push(self.spec.row(next).into_iter().map(|(m, _)| m).collect());
        }
        self.charge(self.backward[n].len())?;
        Ok(&self.backward[n])
    }

    fn charge(&mut self, edges: usize) -> Result<()> {
        self.visits += edges.max(1);
        if self.visits > self.budget {
            return Err(Error::BudgetExhausted(format!("more than {} edge visits", self.budget)));
        }
        Ok(())
    }

    /// Distances (in steps, at least one) from `source` to targets in
    /// `1..=window`, along paths that stay inside `1..=window`.
    fn restricted_distances(&mut self, source: usize, window: usize) -> Result<Vec<Option<usize>>> {
        let mut dist = vec![None; window + 1];
        let mut queue = VecDeque::from([(source, 0usize)]);
        let mut seen = vec![false; window + 1];
        seen[source] = true;
        while let Some((m, d)) = queue.pop_front() {
            for n in self.successors(m)?.to_vec() {
                if n > window {
                    continue;
                }
                if dist[n].is_none() {
                    dist[n] = Some(d + 1);
                }
                if !seen[n] {
                    seen[n] = true;
                    queue.push_back((n, d + 1));
                }
            }
        }
        Ok(dist)
    }

    /// Targets in `1..=window` reached from `source` by a path of length
    /// `1..=max_power` in the full graph, i.e. those `j` with
    /// `(T^k e_source)_j > 0` for some `k <= max_power`.
    fn powered_reach(&mut self, source: usize, window: usize, max_power: usize) -> Result<Vec<bool>> {
        let reach = self.spec.tail_structure().reach;
        let mut hit = vec![false; window + 1];
        let mut remaining = window;
        let mut best: BTreeMap<usize, usize> = BTreeMap::from([(source, 0)]);
        let mut queue = VecDeque::from([(source, 0usize)]);
        while let Some((m, d)) = queue.pop_front() {
            if d == max_power || remaining == 0 {
                continue;
            }
            for n in self.successors(m)?.to_vec() {
                if n <= window && !hit[n] {
                    hit[n] = true;
                    remaining -= 1;
                }
                // nodes too far out can no longer come back in time
                let slack = (max_power - d - 1).saturating_mul(reach);
                if n > window.saturating_add(slack) {
                    continue;
                }
                if !best.contains_key(&n) {
                    best.insert(n, d + 1);
                    queue.push_back((n, d + 1));
                }
            }
        }
        Ok(hit)
    }

    /// `{target}` together with every index up to `bound` having a path to
    /// it through indices up to `2 * bound`.
    fn backward_closure(&mut self, target: usize, bound: usize) -> Result<Vec<bool>> {
        self.closure(target, bound, true)
    }

    fn forward_closure(&mut self, source: usize, bound: usize) -> Result<Vec<bool>> {
        self.closure(source, bound, false)
    }

    fn closure(&mut self, start: usize, bound: usize, backward: bool) -> Result<Vec<bool>> {
        let limit = 2 * bound;
        let mut seen = vec![false; limit + 1];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(m) = queue.pop_front() {
            let next = if backward { self.predecessors(m)?.to_vec() } else { self.successors(m)?.to_vec() };
            for n in next {
                if n <= limit && !seen[n] {
                    seen[n] = true;
                    queue.push_back(n);
                }
            }
        }
        seen.truncate(bound + 1);
        Ok(seen)
    }
}

/// Smallest eventually periodic set agreeing with `members[1..]`, provided
/// the periodic regime is visible in the first half of the data.
fn fit_eventually_periodic(members: &[bool]) -> Option<ExactSet> {
    let bound = members.len() - 1;
    for q in 1..=(bound / 4).max(1) {
        let mut threshold = 1;
        for n in (1..=bound - q).rev() {
            if members[n] != members[n + q] {
                threshold = n + 1;
                break;
            }
        }
        if threshold + 2 * q <= bound && threshold <= bound / 2 {
            let finite = (1..threshold).filter(|&n| members[n]);
            let tails = (threshold..threshold + q).filter(|&n| members[n]).map(|n| Progression::new(n, q));
            return Some(ExactSet::new(finite, tails));
        }
    }
    None
}

/// Searches for an ideal by reachability. Tridiagonal specs use the
/// tridiagonal criterion and lattice homomorphisms the orbit constructions;
/// otherwise pairwise reachability on `1..=window` is tabulated twice (paths
/// inside the window, and paths of length at most `max_power` in the whole
/// graph) and an irreducibility claim needs an everywhere-positive band
/// closure on top of a full table. Unreachable pairs suggest zero sets,
/// which are returned only after exact verification.
pub fn rt_reachability<S: Scalar>(spec: &OperatorSpec<S>, window: usize, max_power: usize) -> Result<IrreducibilityVerdict> {
    rt_reachability_with_budget(spec, window, max_power, EDGE_BUDGET)
}

/// [`rt_reachability`] with an explicit edge-visit budget; running out
/// gives [`Error::BudgetExhausted`].
pub fn rt_reachability_with_budget<S: Scalar>(
    spec: &OperatorSpec<S>,
    window: usize,
    max_power: usize,
    edge_budget: usize,
) -> Result<IrreducibilityVerdict> {
    assert!(window >= 2, "window must be at least 2");
    assert!(max_power >= 1, "max power must be positive");
    if spec.as_tridiagonal().is_some() {
        return tridiagonal_irreducibility(spec);
    }
    if classify::is_lattice_homomorphism(spec).holds() {
        if let Some(found) = ideals::lattice_invariant_ideal(spec, window)?.and_then(IrreducibilityVerdict::reducible) {
            return Ok(found);
        }
    }
    if let Some(found) = quick_ideal(spec)? {
        return Ok(found);
    }

    let mut graph = SupportGraph::new(spec, edge_budget);
    let mut unreachable = Vec::new();
    for i in 1..=window {
        let restricted = graph.restricted_distances(i, window)?;
        let powered = graph.powered_reach(i, window, max_power)?;
        for j in 1..=window {
            if let Some(d) = restricted[j] {
                assert!(d > max_power || powered[j], "path {i} -> {j} of length {d} missed by the powered search");
            }
            if i != j && !powered[j] {
                unreachable.push((i, j));
            }
        }
    }

    if unreachable.is_empty() {
        let closure = spec.to_banded().as_ref().and_then(closure_offsets);
        return Ok(match closure {
            Some(positive_offsets) => IrreducibilityVerdict::Irreducible {
                certificate: IrreducibilityCertificate::ReachabilityTable { window, max_power, positive_offsets },
            },
            None => IrreducibilityVerdict::Unknown { window, max_power },
        });
    }

    if let Some(found) = cut_ideal(spec, window)? {
        return Ok(found);
    }
    let bound = window.max(16);
    let mut targets: Vec<usize> = unreachable.iter().map(|&(_, j)| j).collect();
    let mut sources: Vec<usize> = unreachable.iter().map(|&(i, _)| i).collect();
    for list in [&mut targets, &mut sources] {
        list.sort_unstable();
        list.dedup();
        list.truncate(8);
    }
    for &target in &targets {
        let members = graph.backward_closure(target, bound)?;
        if let Some(found) = try_zero_set(spec, fit_eventually_periodic(&members), Method::BackwardClosure { target }) {
            return Ok(found);
        }
    }
    for &source in &sources {
        let members = graph.forward_closure(source, bound)?;
        let fitted = fit_eventually_periodic(&members).map(|set| set.complement());
        if let Some(found) = try_zero_set(spec, fitted, Method::ForwardClosure { source }) {
            return Ok(found);
        }
    }
    Ok(IrreducibilityVerdict::Unknown { window, max_power })
}

fn try_zero_set<S: Scalar>(spec: &OperatorSpec<S>, zero: Option<ExactSet>, method: Method) -> Option<IrreducibilityVerdict> {
    let zero = zero?;
    IdealConstruction::build(spec, IndexSet::Exact(zero), method, DEFAULT_WINDOW)
        .ok()
        .and_then(IrreducibilityVerdict::reducible)
}

/// Null rows and columns mapped into their own span.
fn quick_ideal<S: Scalar>(spec: &OperatorSpec<S>) -> Result<Option<IrreducibilityVerdict>> {
    if let Some(found) = ideals::null_row_ideal(spec)?.and_then(IrreducibilityVerdict::reducible) {
        return Ok(Some(found));
    }
    let bound = spec.tail_structure().decisive_bound();
    let column = (1..bound).find(|&m| spec.column(m).iter().all(|&(n, _)| n == m));
    Ok(column.and_then(|column| {
        try_zero_set(spec, Some(ExactSet::finite([column]).complement()), Method::SingleColumn { column })
    }))
}

/// Head `{1..n0}` and tail `{n0+1..}` zero sets for `n0 < window`.
fn cut_ideal<S: Scalar>(spec: &OperatorSpec<S>, window: usize) -> Result<Option<IrreducibilityVerdict>> {
    let reach = spec.tail_structure().reach;
    for n0 in 1..window {
        // only columns within `reach` of the cut can cross it
        let nearby = n0.saturating_sub(reach).max(1)..=n0 + reach;
        let columns: Vec<_> = nearby.map(|m| (m, spec.column(m))).collect();
        let head_closed = columns.iter().filter(|(m, _)| *m > n0).all(|(_, c)| c.iter().all(|&(n, _)| n > n0));
        if head_closed {
            if let Some(found) = try_zero_set(spec, Some(ExactSet::up_to(n0)), Method::HeadCut { n0 }) {
                return Ok(Some(found));
            }
        }
        let tail_closed = columns.iter().filter(|(m, _)| *m <= n0).all(|(_, c)| c.iter().all(|&(n, _)| n <= n0));
        if tail_closed {
            if let Some(found) = try_zero_set(spec, Some(ExactSet::from_index(n0 + 1)), Method::TailCut { n0 }) {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}

/// Verdict for a genuine finite operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteIrreducibility {
    Irreducible,
    /// `zero_set` is a non-trivial invariant zero set.
    Reducible { zero_set: Vec<usize> },
}

fn finite_successors<S: Scalar>(matrix: &FiniteMatrix<S>) -> Vec<Vec<usize>> {
    let n = matrix.size();
    (1..=n).map(|m| (1..=n).filter(|&r| matrix.is_nonzero(r, m)).collect()).collect()
}

fn finite_reachable(successors: &[Vec<usize>], source: usize) -> Vec<bool> {
    let mut seen = vec![false; successors.len() + 1];
    let mut queue = VecDeque::from([source]);
    while let Some(m) = queue.pop_front() {
        for &n in &successors[m - 1] {
            if !seen[n] {
                seen[n] = true;
                queue.push_back(n);
            }
        }
    }
    seen
}

/// Whether every index reaches every other one in the support digraph.
pub fn is_strongly_connected<S: Scalar>(matrix: &FiniteMatrix<S>) -> bool {
    let successors = finite_successors(matrix);
    (1..=matrix.size()).all(|i| {
        let seen = finite_reachable(&successors, i);
        (1..=matrix.size()).all(|j| i == j || seen[j])
    })
}

/// `table[i-1][j-1]` holds iff `(A^k)_{j,i} > 0` for some `1 <= k <= max_power`,
/// by repeated boolean multiplication.
pub fn powered_reachability<S: Scalar>(matrix: &FiniteMatrix<S>, max_power: usize) -> Vec<Vec<bool>> {
    let n = matrix.size();
    let step: Vec<Vec<bool>> = (1..=n).map(|i| (1..=n).map(|j| matrix.is_nonzero(j, i)).collect()).collect();
    let mut current = step.clone();
    let mut table = step.clone();
    for _ in 1..max_power {
        current = (0..n)
            .map(|i| (0..n).map(|j| (0..n).any(|t| current[i][t] && step[t][j])).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                table[i][j] |= current[i][j];
            }
        }
    }
    table
}

/// Decides irreducibility of a finite matrix, cross-checking breadth-first
/// search against powers up to `max_power` (at least the size minus one).
pub fn rt_reachability_finite<S: Scalar>(matrix: &FiniteMatrix<S>, max_power: usize) -> FiniteIrreducibility {
    let n = matrix.size();
    assert!(max_power + 1 >= n, "paths may need up to {} steps", n.saturating_sub(1));
    let successors = finite_successors(matrix);
    let table = powered_reachability(matrix, max_power);
    for i in 1..=n {
        let seen = finite_reachable(&successors, i);
        for j in 1..=n {
            assert_eq!(seen[j], table[i - 1][j - 1], "search and powers disagree on {i} -> {j}");
            if i != j && !seen[j] {
                // `j` with everything that reaches it
                let zero_set = (1..=n).filter(|&m| m == j || table[m - 1][j - 1]).collect();
                return FiniteIrreducibility::Reducible { zero_set };
            }
        }
    }
    FiniteIrreducibility::Irreducible
}

/// Every `Z ⊆ {1..N}` whose coordinate ideal is invariant, in increasing
/// order of the bitmask `sum 2^(i-1)`.
pub fn brute_force_invariant_zero_sets<S: Scalar>(matrix: &FiniteMatrix<S>) -> Result<Vec<Vec<usize>>> {
    let n = matrix.size();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit { size: n, limit: BRUTE_FORCE_LIMIT });
    }
    let column_masks: Vec<u32> = (1..=n)
        .map(|m| (1..=n).filter(|&r| matrix.is_nonzero(r, m)).fold(0, |mask, r| mask | 1 << (r - 1)))
        .collect();
    let sets = (0u32..1 << n)
        .filter(|&z| (0..n).all(|m| z & 1 << m != 0 || column_masks[m] & z == 0))
        .map(|z| (1..=n).filter(|&i| z & 1 << (i - 1) != 0).collect())
        .collect();
    Ok(sets)
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

    fn matrix(rows: &[&[i64]]) -> FiniteMatrix<Rational> {
        FiniteMatrix::new(rows.iter().map(|row| row.iter().map(|&v| r(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn edges() {
        let t = example_one();
        assert!(support_digraph_edge(&t, 1, 2));
        assert!(!support_digraph_edge(&t, 1, 3));
        let d = OperatorSpec::diagonal(WeightSequence::periodic(vec![r(0)], vec![r(2)]).unwrap());
        assert!(!support_digraph_edge(&d, 1, 1));
        assert!(support_digraph_edge(&d, 2, 2));
    }

    #[test]
    fn example_one_is_irreducible() {
        let verdict = rt_reachability(&example_one(), 50, 100).unwrap();
        assert_eq!(
            verdict,
            IrreducibilityVerdict::Irreducible { certificate: IrreducibilityCertificate::TridiagonalCorollary }
        );
    }

    #[test]
    fn shift_is_reducible_at_first_coordinate() {
        let verdict = rt_reachability(&OperatorSpec::<Rational>::shift(), 20, 40).unwrap();
        let IrreducibilityVerdict::Reducible { ideal } = verdict else { panic!("{verdict:?}") };
        assert_eq!(ideal.zero_set(), &IndexSet::Exact(ExactSet::finite([1])));
    }

    #[test]
    fn tridiagonal_cases() {
        let sup = WeightSequence::periodic(vec![r(1), r(1), r(0)], vec![r(1)]).unwrap();
        let verdict = tridiagonal_irreducibility(&OperatorSpec::tridiagonal(ones(), ones(), sup)).unwrap();
        let IrreducibilityVerdict::Reducible { ideal } = verdict else { panic!() };
        assert_eq!(ideal.zero_set(), &IndexSet::Exact(ExactSet::up_to(3)));

        let a = WeightSequence::periodic(vec![], vec![r(1), r(0)]).unwrap();
        let b = WeightSequence::periodic(vec![], vec![r(0), r(1)]).unwrap();
        assert!(tridiagonal_irreducibility(&OperatorSpec::tridiagonal(a, ones(), b)).unwrap().is_reducible());
        let wide = OperatorSpec::<Rational>::banded(2, 0, [(2, ones())]).unwrap();
        assert_eq!(tridiagonal_irreducibility(&wide), Err(Error::NotTridiagonal));
    }

    #[test]
    fn band_closure() {
        let band = |pairs: &[(i64, WeightSequence<Rational>)], l, u| {
            OperatorSpec::banded(l, u, pairs.iter().cloned()).unwrap()
        };
        let coprime = band(&[(2, ones()), (-3, ones())], 2, 3);
        let verdict = rt_reachability(&coprime, 30, 60).unwrap();
        assert!(verdict.is_irreducible(), "{verdict:?}");

        let parity = band(&[(2, ones()), (-2, ones())], 2, 2);
        let verdict = rt_reachability(&parity, 30, 60).unwrap();
        let IrreducibilityVerdict::Reducible { ideal } = verdict else { panic!("{verdict:?}") };
        assert!(ideal.is_exact());

        let lower_only = band(&[(1, ones()), (2, ones())], 2, 0);
        assert!(rt_reachability(&lower_only, 30, 60).unwrap().is_reducible());
    }

    #[test]
    fn central_parts() {
        let five = WeightSequence::constant(r(5)).unwrap();
        let t = OperatorSpec::tridiagonal(ones(), five.clone(), ones());
        let (d, q) = central_decompose(&t);
        assert_eq!(d, OperatorSpec::diagonal(five));
        assert_eq!(q, OperatorSpec::banded(1, 1, [(1, ones()), (-1, ones())]).unwrap());
        let (d, q) = central_decompose(&example_one());
        assert!((1..50).all(|m| d.column(m).is_empty()));
        assert!((1..50).all(|m| q.column(m) == example_one().column(m)));
    }

    #[test]
    fn finite_block() {
        let a = matrix(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert!(is_strongly_connected(&a));
        assert_eq!(rt_reachability_finite(&a, 2), FiniteIrreducibility::Irreducible);
        assert_eq!(brute_force_invariant_zero_sets(&a).unwrap(), vec![vec![], vec![1, 2, 3]]);
    }

    #[test]
    fn brute_force() {
        let d = matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(brute_force_invariant_zero_sets(&d).unwrap().len(), 8);
        let s = matrix(&[&[0, 0], &[1, 0]]);
        // the invariant ideal span{e_2} has zero set {1}
        assert_eq!(brute_force_invariant_zero_sets(&s).unwrap(), vec![vec![], vec![1], vec![1, 2]]);
        assert_eq!(rt_reachability_finite(&s, 2), FiniteIrreducibility::Reducible { zero_set: vec![1] });
        let big = FiniteMatrix::new(vec![vec![r(0); 21]; 21]).unwrap();
        assert_eq!(brute_force_invariant_zero_sets(&big), Err(Error::SizeLimit { size: 21, limit: 20 }));
    }
}
