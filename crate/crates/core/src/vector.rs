use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Finitely supported vector `x = sum x_n e_n`; zero coordinates are not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteVector<S> {
    entries: BTreeMap<usize, S>,
}

impl<S: Scalar> Default for FiniteVector<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> FiniteVector<S> {
    pub fn zero() -> Self {
        FiniteVector { entries: BTreeMap::new() }
    }

    pub fn basis(index: usize) -> Self {
        Self::from_entries([(index, S::one())])
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, S)>) -> Self {
        let mut v = Self::zero();
        for (i, value) in entries {
            v.add_at(i, value);
        }
        v
    }

    pub fn get(&self, index: usize) -> S {
        self.entries.get(&index).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_at(&mut self, index: usize, value: S) {
        assert!(index >= 1, "indices start at 1");
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry(index).or_insert_with(S::zero);
        *slot = slot.clone() + value;
        if slot.is_zero() {
            self.entries.remove(&index);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &S)> {
        self.entries.iter().map(|(&i, v)| (i, v))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coordinatewise maximum `x ∨ y`.
    pub fn sup(&self, other: &Self) -> Self {
        let indices: std::collections::BTreeSet<usize> = self.support().chain(other.support()).collect();
        Self::from_entries(indices.into_iter().map(|i| (i, S::max_of(&self.get(i), &other.get(i)))))
    }

    /// Canonical ℓ^p norm, evaluated in floating point.
    pub fn lp_norm(&self, p: f64) -> f64 {
        assert!(p >= 1.0, "ℓ^p needs p >= 1");
        self.entries
            .values()
            .map(|v| v.to_f64_lossy().abs().powf(p))
            .sum::<f64>()
            .powf(1.0 / p)
    }
}
