mod common;

use fq_scales::{
    read_scale_descriptor, write_scale_descriptor, write_scl, CustomSteps, Precision, ScaleFamily, ScaleSpec,
    SclDocument,
};
use proptest::prelude::*;

use common::{bundled_families, config};

fn family() -> impl Strategy<Value = ScaleFamily> {
    prop_oneof![
        Just(ScaleFamily::EqualTemperament),
        Just(ScaleFamily::Log),
        Just(ScaleFamily::Sqrt),
        Just(ScaleFamily::Sine),
        (0.05f64..8.0).prop_map(|a| ScaleFamily::power(a).unwrap()),
        (0.05f64..5.0).prop_map(|a| ScaleFamily::power2(a).unwrap()),
    ]
}

fn v_ref() -> impl Strategy<Value = f64> {
    prop_oneof![Just(1.0), Just(1.2), 0.5f64..2.0]
}

fn precision() -> impl Strategy<Value = Precision> {
    prop_oneof![Just(Precision::Single), Just(Precision::Double)]
}

fn custom_steps() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.01f64..1.0, 1..24).prop_map(|gaps| {
        let total: f64 = gaps.iter().sum();
        let mut acc = 0.0;
        let mut steps = vec![0.0];
        for g in &gaps[..gaps.len() - 1] {
            acc += g / total;
            steps.push(acc);
        }
        steps.push(1.0);
        steps
    })
}

proptest! {
    #[test]
    fn octave_shift_adds_v_ref(f in family(), r in v_ref(), v in -8.0f64..8.0, k in -3i32..4) {
        let c = config(f, r, Precision::Double);
        let shifted = c.quantize(v + k as f64 * r).unwrap();
        let base = c.quantize(v).unwrap();
        // the shifted input may land on the other side of a step edge
        let idx = c.step_index(v).unwrap();
        let idx_k = c.step_index(v + k as f64 * r).unwrap();
        if idx.step == idx_k.step {
            prop_assert!((shifted - base - k as f64 * r).abs() <= 1e-9);
        }
    }

    #[test]
    fn output_is_monotone(f in family(), r in v_ref(), p in precision(), a in -6.0f64..6.0, b in -6.0f64..6.0) {
        let c = config(f, r, p);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(c.quantize(lo).unwrap() <= c.quantize(hi).unwrap());
    }

    #[test]
    fn constant_within_a_step(f in family(), r in v_ref(), k in -4i64..5, n in 0u32..12, u in 0.05f64..0.95, w in 0.05f64..0.95) {
        let c = config(f, r, Precision::Double);
        let at = |t: f64| c.quantize(r * (k as f64 + (n as f64 + t) / 12.0)).unwrap();
        prop_assert_eq!(at(u), at(w));
    }

    #[test]
    fn output_stays_in_its_octave(f in family(), r in v_ref(), p in precision(), v in -10.0f64..10.0) {
        let c = config(f, r, p);
        let q = c.quantize(v).unwrap();
        let octave = c.step_index(v).unwrap().octave as f64;
        let tol = if p == Precision::Single { 1e-5 } else { 1e-12 };
        prop_assert!(q >= r * octave - tol && q < r * (octave + 1.0) + tol);
    }

    #[test]
    fn descriptor_round_trip(f in family(), tones in 1u32..48) {
        let spec = ScaleSpec::new(f, tones).unwrap();
        let back = read_scale_descriptor(&write_scale_descriptor(&spec)).unwrap();
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn custom_descriptor_round_trip(steps in custom_steps()) {
        let spec = ScaleSpec::from(ScaleFamily::Custom(CustomSteps::new(steps).unwrap()));
        prop_assert!(spec.validate().is_valid());
        let back = read_scale_descriptor(&write_scale_descriptor(&spec)).unwrap();
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn scl_reparses_to_step_table(f in family(), tones in 1u32..48, banner in any::<bool>()) {
        let spec = ScaleSpec::new(f, tones).unwrap();
        let doc = SclDocument::parse(&write_scl(&spec, "round trip", banner).unwrap()).unwrap();
        let cents = spec.step_table().unwrap().cents();
        prop_assert_eq!(doc.note_count(), tones as usize);
        prop_assert_eq!(doc.description.as_str(), "round trip");
        for (got, want) in doc.pitches.iter().zip(&cents[1..]) {
            prop_assert!((got - want).abs() <= 5e-7);
        }
    }
}

#[test]
fn every_bundled_scale_survives_both_exports() {
    for f in bundled_families() {
        let spec = ScaleSpec::from(f);
        assert_eq!(read_scale_descriptor(&write_scale_descriptor(&spec)).unwrap(), spec);
        let doc = SclDocument::parse(&write_scl(&spec, "x", true).unwrap()).unwrap();
        assert_eq!(doc.pitches.last().copied(), Some(1200.0));
    }
}
