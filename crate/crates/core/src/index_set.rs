//! Decidable subsets of the positive integers and the coordinate ideals they define.

use std::collections::BTreeSet;
use std::fmt;

use crate::scalar::lcm;

/// `{start + k * step : k >= 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Progression {
    pub start: usize,
    pub step: usize,
}

impl Progression {
    pub fn new(start: usize, step: usize) -> Self {
        assert!(start >= 1 && step >= 1, "progressions live in the positive integers");
        Progression { start, step }
    }

    pub fn contains(&self, n: usize) -> bool {
        n >= self.start && (n - self.start) % self.step == 0
    }
}

/// Answer to a membership query on a set that may only be known on a window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    NotMember,
    /// Not found among the enumerated members; only meaningful up to the bound.
    NotSeenUpTo(usize),
}

/// Subset of `{1, 2, 3, ...}`.
#[derive(Clone, Debug)]
pub enum IndexSet {
    /// Finite part plus arithmetic-progression tails; every query is exact.
    Exact(ExactSet),
    /// Members found by enumeration, claimed only inside `[1, verified_up_to]`.
    WindowEnumerated { members: BTreeSet<usize>, verified_up_to: usize },
}

/// Canonical eventually-periodic set: below `threshold` the members are
/// listed, from `threshold` on membership repeats with `period`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactSet {
    finite: BTreeSet<usize>,
    tails: Vec<Progression>,
}

impl ExactSet {
    pub fn new(finite: impl IntoIterator<Item = usize>, tails: impl IntoIterator<Item = Progression>) -> Self {
        let finite: BTreeSet<usize> = finite.into_iter().collect();
        assert!(!finite.contains(&0), "indices start at 1");
        let raw = ExactSet { finite, tails: tails.into_iter().collect() };
        raw.canonical()
    }

    pub fn empty() -> Self {
        ExactSet { finite: BTreeSet::new(), tails: Vec::new() }
    }

    pub fn all() -> Self {
        ExactSet::new([], [Progression::new(1, 1)])
    }

    pub fn finite(members: impl IntoIterator<Item = usize>) -> Self {
        ExactSet::new(members, [])
    }

    /// `{from, from + 1, ...}`.
    pub fn from_index(from: usize) -> Self {
        ExactSet::new([], [Progression::new(from, 1)])
    }

    /// `{1, ..., to}`.
    pub fn up_to(to: usize) -> Self {
        ExactSet::finite(1..=to)
    }

    pub fn finite_part(&self) -> &BTreeSet<usize> {
        &self.finite
    }

    pub fn tails(&self) -> &[Progression] {
        &self.tails
    }

    pub fn contains(&self, n: usize) -> bool {
        n >= 1 && (self.finite.contains(&n) || self.tails.iter().any(|t| t.contains(n)))
    }

    /// Period of membership beyond [`ExactSet::threshold`].
    pub fn period(&self) -> usize {
        self.tails.iter().fold(1, |acc, t| lcm(acc, t.step))
    }

    /// From this index on, `contains(n) == contains(n + period())`.
    pub fn threshold(&self) -> usize {
        let after_finite = self.finite.iter().next_back().map_or(1, |m| m + 1);
        self.tails.iter().map(|t| t.start).fold(after_finite, usize::max)
    }

    pub fn is_empty(&self) -> bool {
        self.finite.is_empty() && self.tails.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.tails.is_empty()
    }

    /// Smallest index outside the set.
    pub fn first_excluded(&self) -> Option<usize> {
        let bound = self.threshold() + self.period();
        (1..bound).find(|&n| !self.contains(n))
    }

    pub fn first_member(&self) -> Option<usize> {
        let bound = self.threshold() + self.period();
        (1..bound).find(|&n| self.contains(n))
    }

    pub fn is_everything(&self) -> bool {
        self.first_excluded().is_none()
    }

    pub fn complement(&self) -> ExactSet {
        self.rebuild(|member| !member)
    }

    pub fn union(&self, other: &ExactSet) -> ExactSet {
        let mut finite = self.finite.clone();
        finite.extend(other.finite.iter().copied());
        let mut tails = self.tails.clone();
        tails.extend(other.tails.iter().copied());
        ExactSet::new(finite, tails)
    }

    /// Members inside `[1, bound]`.
    pub fn members_up_to(&self, bound: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=bound).filter(move |&n| self.contains(n))
    }

    fn rebuild(&self, keep: impl Fn(bool) -> bool) -> ExactSet {
        let threshold = self.threshold();
        let period = self.period();
        let finite = (1..threshold).filter(|&n| keep(self.contains(n)));
        let tails: Vec<_> = (threshold..threshold + period)
            .filter(|&n| keep(self.contains(n)))
            .map(|n| Progression::new(n, period))
            .collect();
        let raw = ExactSet { finite: finite.collect(), tails };
        raw.canonical()
    }

    fn canonical(&self) -> ExactSet {
        let period = self.period();
        let mut threshold = self.threshold();
        let shortest = (1..=period)
            .filter(|d| period % d == 0)
            .find(|&d| (threshold..threshold + period).all(|n| self.contains(n) == self.contains(n + d)))
            .unwrap_or(period);
        while threshold > 1 && self.contains(threshold - 1) == self.contains(threshold - 1 + shortest) {
            threshold -= 1;
        }
        let finite = (1..threshold).filter(|&n| self.contains(n)).collect();
        let tails = (threshold..threshold + shortest)
            .filter(|&n| self.contains(n))
            .map(|n| Progression::new(n, shortest))
            .collect();
        ExactSet { finite, tails }
    }
}

impl fmt::Display for ExactSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.finite.iter().map(ToString::to_string).collect();
        for tail in &self.tails {
            if tail.step == 1 {
                parts.push(format!("{}, {}, ...", tail.start, tail.start + 1));
            } else {
                parts.push(format!("{} + {}k", tail.start, tail.step));
            }
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl IndexSet {
    pub fn exact(set: ExactSet) -> Self {
        IndexSet::Exact(set)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, IndexSet::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&ExactSet> {
        match self {
            IndexSet::Exact(set) => Some(set),
            IndexSet::WindowEnumerated { .. } => None,
        }
    }

    pub fn membership(&self, n: usize) -> Membership {
        match self {
            IndexSet::Exact(set) => {
                if set.contains(n) {
                    Membership::Member
                } else {
                    Membership::NotMember
                }
            }
            IndexSet::WindowEnumerated { members, verified_up_to } => {
                if members.contains(&n) {
                    Membership::Member
                } else {
                    Membership::NotSeenUpTo(*verified_up_to)
                }
            }
        }
    }

    pub fn contains(&self, n: usize) -> bool {
        self.membership(n) == Membership::Member
    }

    pub fn is_empty(&self) -> bool {
        match self {
            IndexSet::Exact(set) => set.is_empty(),
            IndexSet::WindowEnumerated { members, .. } => members.is_empty(),
        }
    }

    /// Smallest index outside the set, and whether that answer is exact.
    pub fn first_excluded(&self) -> Option<(usize, bool)> {
        match self {
            IndexSet::Exact(set) => set.first_excluded().map(|n| (n, true)),
            IndexSet::WindowEnumerated { members, verified_up_to } => {
                (1..=*verified_up_to).find(|n| !members.contains(n)).map(|n| (n, false))
            }
        }
    }
}

impl PartialEq for IndexSet {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (IndexSet::Exact(a), IndexSet::Exact(b)) => a == b,
            (
                IndexSet::WindowEnumerated { members: a, verified_up_to: wa },
                IndexSet::WindowEnumerated { members: b, verified_up_to: wb },
            ) => a == b && wa == wb,
            _ => false,
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexSet::Exact(set) => set.fmt(f),
            IndexSet::WindowEnumerated { members, verified_up_to } => {
                let listed: Vec<String> = members.iter().map(ToString::to_string).collect();
                write!(f, "{{{}}} (enumerated up to {})", listed.join(", "), verified_up_to)
            }
        }
    }
}

/// The closed ideal `{x : x_m = 0 for every m in zero_set}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordinateIdeal {
    pub zero_set: IndexSet,
}

impl CoordinateIdeal {
    pub fn new(zero_set: IndexSet) -> Self {
        CoordinateIdeal { zero_set }
    }

    pub fn from_exact(zero_set: ExactSet) -> Self {
        CoordinateIdeal { zero_set: IndexSet::Exact(zero_set) }
    }

    /// Non-trivial iff both the zero set and its complement are nonempty.
    /// `None` when the zero set is only known on a window and no excluded
    /// index was found there.
    pub fn is_nontrivial(&self) -> Option<bool> {
        if self.zero_set.is_empty() {
            return Some(false);
        }
        match &self.zero_set {
            IndexSet::Exact(set) => Some(!set.is_everything()),
            IndexSet::WindowEnumerated { .. } => self.zero_set.first_excluded().map(|_| true),
        }
    }
}
