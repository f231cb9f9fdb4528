//! Random structured operators, vectors and matrices for property and
//! acceptance tests. Every generator draws from the supplied RNG only, so a
//! seed reproduces the whole instance.

use conekit::{
    ExactMatrix, ExactSpec, ExactVector, FiniteMatrix, ModularPermutation, OperatorSpec, Rational, WeightSequence,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Positive rational `a/b` with `a, b` in `1..=9`.
pub fn positive_rational(rng: &mut impl Rng) -> Rational {
    int(rng.random_range(1..=9)) / int(rng.random_range(1..=9))
}

/// Nonnegative rational, zero with probability `zero_prob`.
pub fn rational(rng: &mut impl Rng, zero_prob: f64) -> Rational {
    if rng.random_bool(zero_prob) {
        int(0)
    } else {
        positive_rational(rng)
    }
}

/// Signed rational with numerator in `-9..=9`.
pub fn signed_rational(rng: &mut impl Rng) -> Rational {
    int(rng.random_range(-9..=9)) / int(rng.random_range(1..=9))
}

/// Eventually periodic sequence, short prefix and period, entries zero
/// with probability `zero_prob`.
pub fn sequence(rng: &mut impl Rng, zero_prob: f64) -> WeightSequence<Rational> {
    let prefix = (0..rng.random_range(0..=4)).map(|_| rational(rng, zero_prob)).collect();
    let period = (0..rng.random_range(1..=3)).map(|_| rational(rng, zero_prob)).collect();
    WeightSequence::periodic(prefix, period).expect("nonnegative entries")
}

/// Eventually periodic sequence without zeros.
pub fn positive_sequence(rng: &mut impl Rng) -> WeightSequence<Rational> {
    sequence(rng, 0.0)
}

/// Valid modular permutation: a residue permutation `σ`, offsets
/// `d_r = σ(r) - r + p t_r` with `Σ t_r = 0`, and a random head filling
/// the indices the tail misses.
pub fn modular_permutation(rng: &mut impl Rng) -> ModularPermutation {
    let p = rng.random_range(1..=4usize);
    let mut sigma: Vec<usize> = (0..p).collect();
    sigma.shuffle(rng);
    let mut t: Vec<i64> = vec![0; p];
    for _ in 0..rng.random_range(0..=2) {
        let (a, b) = (rng.random_range(0..p), rng.random_range(0..p));
        t[a] += 1;
        t[b] -= 1;
    }
    let offsets: Vec<i64> = (0..p).map(|r| sigma[r] as i64 - r as i64 + p as i64 * t[r]).collect();
    let max_d = offsets.iter().map(|d| d.unsigned_abs() as usize).max().unwrap_or(0);
    let tail_start = max_d + 1 + rng.random_range(0..=3);
    let horizon = tail_start + 2 * max_d + 2 * p + 2;
    let tail_images: std::collections::BTreeSet<usize> =
        (tail_start..horizon + 2 * max_d).map(|n| (n as i64 + offsets[n % p]) as usize).collect();
    let mut missing: Vec<usize> = (1..horizon).filter(|m| !tail_images.contains(m)).collect();
    assert_eq!(missing.len(), tail_start - 1, "offsets balance the residue classes");
    missing.shuffle(rng);
    ModularPermutation::new(missing, p, offsets).expect("generated permutation is a bijection")
}

/// Weighted permutation with positive eventually periodic weights.
pub fn weighted_permutation(rng: &mut impl Rng) -> ExactSpec {
    OperatorSpec::weighted_permutation(modular_permutation(rng), positive_sequence(rng)).unwrap()
}

/// Banded spec with bandwidths up to 2 and sparse random diagonals.
pub fn banded(rng: &mut impl Rng) -> ExactSpec {
    let (lower, upper) = (rng.random_range(0..=2usize), rng.random_range(0..=2usize));
    let mut diagonals = Vec::new();
    for o in -(upper as i64)..=lower as i64 {
        if rng.random_bool(0.6) {
            diagonals.push((o, sequence(rng, 0.3)));
        }
    }
    OperatorSpec::banded(lower, upper, diagonals).unwrap()
}

/// Tridiagonal spec; off-diagonals are everywhere positive half the time.
pub fn tridiagonal(rng: &mut impl Rng) -> ExactSpec {
    fn off(rng: &mut impl Rng) -> WeightSequence<Rational> {
        if rng.random_bool(0.5) {
            positive_sequence(rng)
        } else {
            sequence(rng, 0.25)
        }
    }
    let sub = off(rng);
    let sup = off(rng);
    let main = sequence(rng, 0.5);
    OperatorSpec::tridiagonal(sub, main, sup)
}

/// Banded lattice homomorphism: each row holds at most one entry, chosen by
/// eventually periodic per-row data.
pub fn lattice_homomorphism_banded(rng: &mut impl Rng, null_prob: f64) -> ExactSpec {
    let (lower, upper) = (rng.random_range(0..=2usize), rng.random_range(0..=2usize));
    let prefix_len = lower + rng.random_range(0..=3);
    let period = rng.random_range(1..=3usize);
    // row n gets (offset row - col, value), or nothing
    let mut rows: Vec<Option<(i64, Rational)>> = Vec::new();
    for row in 1..=prefix_len + period {
        let o = rng.random_range(-(upper as i64)..=lower as i64);
        let skip = rng.random_bool(null_prob) || o >= row as i64;
        rows.push((!skip).then(|| (o, positive_rational(rng))));
    }
    let value = |o: i64, t: usize| {
        let row = t + o.max(0) as usize;
        let slot = if row <= prefix_len { row - 1 } else { prefix_len + (row - prefix_len - 1) % period };
        match &rows[slot] {
            Some((ro, v)) if *ro == o => v.clone(),
            _ => int(0),
        }
    };
    let diagonals: Vec<(i64, WeightSequence<Rational>)> = (-(upper as i64)..=lower as i64)
        .map(|o| {
            let prefix = (1..=prefix_len).map(|t| value(o, t)).collect();
            let cycle = (prefix_len + 1..=prefix_len + period).map(|t| value(o, t)).collect();
            (o, WeightSequence::periodic(prefix, cycle).unwrap())
        })
        .collect();
    OperatorSpec::banded(lower, upper, diagonals).unwrap()
}

/// Lattice homomorphism from a mix of presentations: banded with and
/// without null rows or columns, weighted permutations, and injective
/// non-surjective ones such as weighted shifts.
pub fn lattice_homomorphism(rng: &mut impl Rng) -> ExactSpec {
    match rng.random_range(0..4) {
        0 => weighted_permutation(rng),
        1 => lattice_homomorphism_banded(rng, 0.3),
        2 => lattice_homomorphism_banded(rng, 0.0),
        _ => {
            let o = rng.random_range(1..=2i64);
            OperatorSpec::banded(o as usize, 0, [(o, positive_sequence(rng))]).unwrap()
        }
    }
}

/// Any structured spec: banded, weighted permutation, lattice homomorphism
/// or a sum of two of those.
pub fn structured(rng: &mut impl Rng) -> ExactSpec {
    match rng.random_range(0..5) {
        0 => banded(rng),
        1 => weighted_permutation(rng),
        2 => lattice_homomorphism(rng),
        3 => tridiagonal(rng),
        _ => {
            let a = if rng.random_bool(0.5) { weighted_permutation(rng) } else { lattice_homomorphism_banded(rng, 0.5) };
            let b = if rng.random_bool(0.5) { banded(rng) } else { lattice_homomorphism_banded(rng, 0.5) };
            OperatorSpec::sum(vec![a, b]).unwrap()
        }
    }
}

/// Signed vector supported in `1..=bound`.
pub fn vector(rng: &mut impl Rng, bound: usize) -> ExactVector {
    let size = rng.random_range(1..=4);
    ExactVector::from_entries((0..size).map(|_| (rng.random_range(1..=bound), signed_rational(rng))))
}

/// `n × n` matrix with the given zero pattern (bit `(i-1) n + (j-1)` set
/// means a nonzero at row `i`, column `j`) and random positive magnitudes.
pub fn matrix_with_pattern(rng: &mut impl Rng, n: usize, pattern: u64) -> ExactMatrix {
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if pattern >> (i * n + j) & 1 == 1 { positive_rational(rng) } else { int(0) })
                .collect()
        })
        .collect();
    FiniteMatrix::new(rows).unwrap()
}

/// `n × n` matrix, each entry nonzero with probability `density`.
pub fn matrix(rng: &mut impl Rng, n: usize, density: f64) -> ExactMatrix {
    let pattern = (0..n * n).fold(0u64, |acc, bit| acc | (rng.random_bool(density) as u64) << bit);
    matrix_with_pattern(rng, n, pattern)
}
