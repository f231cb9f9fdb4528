use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, ToPrimitive};

/// Entry type for operator matrices and vectors.
///
/// Structural questions (lattice homomorphism, invariant ideals,
/// irreducibility) only look at which entries are zero, so every analysis in
/// this crate is generic over the scalar. Exact verdicts use [`Rational`];
/// the spectral estimates use `f64`.
///
/// [`Rational`]: crate::Rational
pub trait Scalar:
    Num + Clone + Debug + PartialOrd + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }

    /// Lossy conversion used when handing exact data to floating-point code.
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn max_of(a: &Self, b: &Self) -> Self {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }
}

impl<T> Scalar for T where
    T: Num + Clone + Debug + PartialOrd + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    num_integer::lcm(a.max(1), b.max(1))
}
