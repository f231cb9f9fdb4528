mod common;

use conekit_cli::document::validate;
use conekit_cli::{analyze, Overrides, Parameters, Report, Sections};
use conekit_testkit as kit;
use proptest::prelude::*;

fn params(seed: u64) -> (conekit_cli::Parsed, Parameters) {
    let mut rng = kit::seeded(seed);
    let parsed = validate(&common::document(&mut rng)).unwrap();
    let overrides = Overrides { default_window: Some(25), sections: Some(Sections::ALL), ..Overrides::default() };
    let params = Parameters::resolve(&parsed, &overrides);
    (parsed, params)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn disabling_a_section_leaves_the_others_alone(seed in any::<u64>(), mask in 0u8..16) {
        let (parsed, full) = params(seed);
        let mut partial = full;
        partial.sections = Sections {
            classification: mask & 1 != 0,
            ideals: mask & 2 != 0,
            irreducibility: mask & 4 != 0,
            spectral: mask & 8 != 0,
        };
        let a = analyze(&parsed, &full);
        let b = analyze(&parsed, &partial);
        let s = partial.sections;
        prop_assert_eq!(b.classification.is_some(), s.classification);
        prop_assert_eq!(b.ideals.is_some(), s.ideals);
        prop_assert_eq!(b.irreducibility.is_some(), s.irreducibility);
        prop_assert_eq!(b.spectral.is_some(), s.spectral);
        if s.classification { prop_assert_eq!(&a.classification, &b.classification); }
        if s.ideals { prop_assert_eq!(&a.ideals, &b.ideals); }
        if s.irreducibility { prop_assert_eq!(&a.irreducibility, &b.irreducibility); }
        if s.spectral { prop_assert_eq!(&a.spectral, &b.spectral); }
        let kept: Vec<_> = a.diagnostics.iter().filter(|d| match d.section.as_str() {
            "classification" => s.classification,
            "ideals" => s.ideals,
            "irreducibility" => s.irreducibility,
            _ => s.spectral,
        }).cloned().collect();
        prop_assert_eq!(kept, b.diagnostics);
    }

    #[test]
    fn reports_survive_json(seed in any::<u64>()) {
        let (parsed, params) = params(seed);
        let report = analyze(&parsed, &params);
        let back: Report = serde_json::from_str(&report.to_json()).unwrap();
        prop_assert_eq!(back, report);
    }
}
