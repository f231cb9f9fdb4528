use conekit::spectral::{
    self, BetaSequence, CompensatedSum, QuasinilpotenceFinding, RadiusInput, RadiusSequence, WeightedShift,
    DEFAULT_EPSILON,
};
use conekit::{FloatVector, NamedSequence, WeightSequence};
use proptest::prelude::*;
use statrs::function::gamma::ln_gamma;

fn quasi_analytic() -> WeightedShift {
    WeightedShift::named(NamedSequence::QuasiAnalyticSqrt)
}

#[test]
fn beta_examples() {
    let w = spectral::shift_from_beta(&BetaSequence::ExpSqrt).unwrap();
    for n in 0..200usize {
        // β_n sits at weight index n + 1
        let expected = ((n as f64 + 1.0).sqrt() - (n as f64).sqrt()).exp();
        assert!((w.weight(n + 1) - expected).abs() < 1e-12 * expected);
    }
    let ones = spectral::shift_from_beta(&BetaSequence::Periodic(WeightSequence::constant(1.0).unwrap())).unwrap();
    assert!((1..50).all(|n| ones.weight(n) == 1.0));
    let f = spectral::shift_from_beta(&BetaSequence::FactorialReciprocal).unwrap();
    let beta: Vec<f64> = (0..30).map(|k| if k == 0 { 1.0 } else { (-ln_gamma(k as f64 + 1.0)).exp() }).collect();
    let from_values = spectral::weights_from_beta_values(&beta).unwrap();
    for (k, w) in from_values.iter().enumerate() {
        assert!((w - f.weight(k + 1)).abs() < 1e-12);
        assert!((w - 1.0 / (k as f64 + 1.0)).abs() < 1e-12);
    }
}

#[test]
fn radius_examples() {
    let seq = spectral::radius_sequence(&quasi_analytic(), 1, 100, 2.0);
    assert!((seq.entries[99].1 - 1.105170918).abs() < 1e-9);
    let half = WeightedShift::new(WeightSequence::constant(0.5).unwrap()).unwrap();
    let seq = spectral::radius_sequence(&half, 7, 100, 2.0);
    assert!(seq.values().all(|v| (v - 0.5).abs() <= 4.0 * f64::EPSILON));
    let f = WeightedShift::named(NamedSequence::FactorialReciprocal);
    let seq = spectral::radius_sequence(&f, 1, 10, 2.0);
    assert!((seq.entries[9].1 - 0.2208125213).abs() < 1e-9);
}

#[test]
fn finding_examples() {
    let seq = spectral::radius_sequence(&quasi_analytic(), 1, 1000, 2.0);
    let QuasinilpotenceFinding::EvidenceNotQuasinilpotent { lower_bound_seen } =
        spectral::quasinilpotence_finding(&seq, DEFAULT_EPSILON)
    else {
        panic!()
    };
    assert!(lower_bound_seen > 1.0);
    let f = WeightedShift::named(NamedSequence::FactorialReciprocal);
    let seq = spectral::radius_sequence(&f, 1, 10_000, 2.0);
    assert!(matches!(
        spectral::quasinilpotence_finding(&seq, DEFAULT_EPSILON),
        QuasinilpotenceFinding::EvidenceQuasinilpotent { .. }
    ));
    let flat = RadiusSequence { input: RadiusInput::Basis(1), p: 2.0, entries: (1..=40).map(|n| (n, 1e-3)).collect() };
    assert!(matches!(spectral::quasinilpotence_finding(&flat, 1e-3), QuasinilpotenceFinding::Inconclusive { .. }));
}

#[test]
fn quasi_analytic_closed_form() {
    let seq = spectral::radius_sequence(&quasi_analytic(), 1, 10_000, 2.0);
    for &(n, v) in &seq.entries {
        assert!((v - (1.0 / (n as f64).sqrt()).exp()).abs() < 1e-9, "n={n}");
        assert!(v > 1.0);
    }
    assert!(seq.entries.windows(2).all(|w| w[1].1 < w[0].1));
}

#[test]
fn compensated_sum_beats_naive_sum() {
    let mut c = CompensatedSum::default();
    let mut naive = 0.0;
    for x in [1e16, 1.0, -1e16, 1.0] {
        c.add(x);
        naive += x;
    }
    assert_eq!(c.value(), 2.0);
    assert_ne!(naive, 2.0);
}

proptest! {
    #[test]
    fn log_products_match_compensated_oracle(
        prefix in prop::collection::vec(0.01f64..50.0, 0..5),
        period in prop::collection::vec(0.01f64..50.0, 1..4),
        start in 1usize..20,
        len in 1usize..400,
    ) {
        let w = WeightedShift::new(WeightSequence::periodic(prefix, period).unwrap()).unwrap();
        let seq = spectral::radius_sequence(&w, start, len, 2.0);
        let mut oracle = CompensatedSum::default();
        for n in 1..=len {
            oracle.add(w.weight(start + n - 1).ln());
            let expected = oracle.value() / n as f64;
            let got = seq.entries[n - 1].1.ln();
            prop_assert!((got - expected).abs() <= 1e-12 * expected.abs().max(1.0));
        }
    }

    #[test]
    fn basis_sequences_ignore_p(start in 1usize..50, len in 1usize..200) {
        for w in [quasi_analytic(), WeightedShift::named(NamedSequence::FactorialReciprocal)] {
            let reference = spectral::radius_sequence(&w, start, len, 2.0);
            for p in [1.0, 4.0] {
                prop_assert_eq!(&spectral::radius_sequence(&w, start, len, p).entries, &reference.entries);
            }
            let x = FloatVector::basis(start);
            for p in [1.0, 2.0, 4.0] {
                let general = spectral::radius_sequence_vector(&w, &x, len, p).unwrap();
                for (a, b) in general.values().zip(reference.values()) {
                    prop_assert!((a - b).abs() <= 1e-12 * b);
                }
            }
        }
    }

    #[test]
    fn beta_round_trip(weights in prop::collection::vec(0.05f64..20.0, 1..60)) {
        let beta: Vec<f64> = std::iter::once(1.0)
            .chain(weights.iter().scan(1.0, |acc, w| { *acc *= w; Some(*acc) }))
            .collect();
        let back = spectral::weights_from_beta_values(&beta).unwrap();
        for (a, b) in back.iter().zip(&weights) {
            prop_assert!((a - b).abs() <= 1e-12 * b);
        }
    }
}
