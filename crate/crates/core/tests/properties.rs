use proptest::prelude::*;

use ringbounds::bounds::johnson_conditions;
use ringbounds::geometry::{
    ball_volume, ball_volume_overweight, min_distance, sphere_size_overweight, Code, LoadedCode,
};
use ringbounds::rational::{self, int, ratio};
use ringbounds::search::{greedy_gv, list_profile, max_code, MaxCodeOptions, WordOrdering};
use ringbounds::verify::pair_sum_suite;
use ringbounds::weights::{homogeneous, overweight, DistanceOracle, WeightFunction};
use ringbounds::{FiniteRing, Word};

const RINGS: [&str; 10] = [
    "Z2",
    "Z4",
    "Z6",
    "Z8",
    "Z9",
    "GF(4)",
    "Z2xZ2",
    "Z2xZ4",
    "Z4[x]/(x^2+2)",
    "GF(8)",
];

fn ring_strategy() -> impl Strategy<Value = FiniteRing> {
    prop::sample::select(RINGS.to_vec()).prop_map(|s| FiniteRing::parse(s).unwrap())
}

fn words(r: &FiniteRing, n: usize, count: usize) -> impl Strategy<Value = Vec<Word>> {
    prop::collection::vec(prop::collection::vec(0..r.order(), n), count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn overweight_is_a_metric((r, ws) in ring_strategy().prop_flat_map(|r| {
        let n = 5;
        let w = words(&r, n, 3);
        (Just(r), w)
    })) {
        let w = overweight(&r);
        let d = DistanceOracle::new(&r, &w);
        let (x, y, z) = (&ws[0], &ws[1], &ws[2]);
        prop_assert_eq!(d.scaled_distance(x, y), d.scaled_distance(y, x));
        prop_assert_eq!(d.scaled_distance(x, y) == 0, x == y);
        prop_assert!(d.scaled_distance(x, y) <= d.scaled_distance(x, z) + d.scaled_distance(z, y));
    }

    #[test]
    fn homogeneous_weight_invariants(m in 2u64..40) {
        let r = FiniteRing::parse(&format!("Z{m}")).unwrap();
        let h = homogeneous(&r, &int(1)).unwrap().unwrap();
        prop_assert_eq!(h.weight(0), &int(0));
        // Constant on associates, average γ on every nonzero ideal.
        for x in 0..r.order() {
            for &u in r.units() {
                prop_assert_eq!(h.weight(x), h.weight(r.mul(u, x)));
            }
        }
        for ideal in r.left_ideals().iter().filter(|i| i.len() > 1) {
            let sum: ringbounds::Rational = ideal.iter().map(|&x| h.weight(x)).sum();
            prop_assert_eq!(sum, int(ideal.len() as i64));
        }
    }

    #[test]
    fn sphere_sizes_partition_the_space(r in ring_strategy(), n in 1usize..8) {
        let total: num_bigint::BigUint = (0..=2 * n).map(|t| sphere_size_overweight(&r, n, t).unwrap()).sum();
        prop_assert_eq!(total, num_bigint::BigUint::from(r.order()).pow(n as u32));
    }

    #[test]
    fn ball_formula_matches_distribution(r in ring_strategy(), n in 1usize..7, e in 0usize..14) {
        let w = overweight(&r);
        prop_assert_eq!(ball_volume_overweight(&r, n, e), ball_volume(&w, n, &int(e as i64)));
    }

    #[test]
    fn code_file_round_trip((r, ws) in ring_strategy().prop_flat_map(|r| {
        let w = words(&r, 3, 6);
        (Just(r), w)
    })) {
        let code = Code::new(&r, 3, ws).unwrap();
        let loaded = LoadedCode::from_json(&code.to_json(&r), 512).unwrap();
        prop_assert_eq!(loaded.ring.name(), r.name());
        prop_assert_eq!(loaded.code.words(), code.words());
    }

    #[test]
    fn weight_csv_round_trip(r in ring_strategy(), seed in any::<u64>()) {
        let table: Vec<_> = (0..r.order())
            .map(|x| if x == r.zero() { int(0) } else { ratio(((seed >> (x % 60)) % 7) as i64, 1 + (x % 3) as i64) })
            .collect();
        let w = WeightFunction::new(ringbounds::weights::WeightKind::Custom, &r, table).unwrap();
        let back = WeightFunction::from_csv(&r, &w.to_csv(&r)).unwrap();
        prop_assert_eq!(back.table(), w.table());
    }

    #[test]
    fn rational_render_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let v = ratio(p, q);
        prop_assert_eq!(rational::parse(&rational::render(&v)).unwrap(), v);
    }

    #[test]
    fn greedy_codes_have_target_distance(r in ring_strategy(), n in 1usize..3, d in 1i64..5) {
        let w = overweight(&r);
        let res = greedy_gv(&r, &w, n, &int(d), WordOrdering::WeightThenLex, &[], 10_000).unwrap();
        if res.code.len() > 1 {
            prop_assert!(min_distance(&r, &res.code, &w).unwrap() >= int(d));
        }
        let best = max_code(&r, &w, n, &int(d), &MaxCodeOptions::default()).unwrap();
        prop_assert!(best.certified_optimal);
        prop_assert!(best.code.len() >= res.code.len());
    }

    #[test]
    fn list_profile_bounds((r, ws) in ring_strategy().prop_flat_map(|r| {
        let w = words(&r, 2, 5);
        (Just(r), w)
    }), radius in 0i64..5) {
        let code = Code::new(&r, 2, ws).unwrap();
        let w = overweight(&r);
        let p = list_profile(&r, &code, &w, &int(radius), 10_000).unwrap();
        prop_assert!(p.max_list_size >= 1 && p.max_list_size <= code.len());
    }

    #[test]
    fn johnson_condition_matches_float_oracle(
        n in 1usize..12, dn in 0i64..200, gn in 1i64..50, rn in 0i64..50, den in 1i64..20,
    ) {
        let gamma = ratio(gn, den);
        let rho = ratio(rn.min(gn), den);
        let d = ratio(dn, den);
        let c = johnson_conditions(n, &d, &gamma, &rho).unwrap();
        let (g, r, dd, nf) = (gn as f64 / den as f64, rn.min(gn) as f64 / den as f64, dn as f64 / den as f64, n as f64);
        let a = (g - dd / nf) * g + 1.0 / (nf * nf);
        if a.abs() > 1e-9 {
            prop_assert_eq!(c.second.is_some(), a > 0.0);
            if a > 0.0 {
                let margin = (g - r) - a.sqrt();
                if margin.abs() > 1e-9 {
                    prop_assert_eq!(c.second.unwrap(), margin >= 0.0);
                }
            }
        }
        let first = g * nf * (dd - g * nf);
        if (first - 1.0).abs() > 1e-9 {
            prop_assert_eq!(c.first, first >= 1.0);
        }
    }
}

#[test]
fn suites_do_not_depend_on_worker_count() {
    let r = FiniteRing::parse("Z9").unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| pair_sum_suite(&r, 200, 99, 2, 6).unwrap())
    };
    assert_eq!(run(1), run(3));
}
