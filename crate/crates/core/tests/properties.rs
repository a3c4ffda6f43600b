use narayana::{
    build_table, fast_narayana, mirror, narayana_matrix, parse_csv, pq_identity_eval, reduce_to_base, render,
    skip_eval, thirds_eval, verify, BigInt, IdentityId, Ranges, SequenceEngine, Strategy, TableFormat,
};
use proptest::prelude::*;

#[test]
fn base_recurrence_over_wide_window() {
    let mut e = SequenceEngine::new();
    for m in -10_000..=10_000 {
        let lhs = e.narayana(m + 1).unwrap();
        let rhs = e.narayana(m).unwrap() + e.get(m - 2).unwrap();
        assert_eq!(lhs, rhs, "m = {m}");
    }
}

#[test]
fn matrix_agrees_with_memo() {
    let mut e = SequenceEngine::new();
    for m in -2_000..=5_000 {
        assert_eq!(narayana_matrix(m).unwrap(), e.narayana(m).unwrap(), "m = {m}");
    }
}

#[test]
fn digit_count_is_monotone_from_30() {
    let mut e = SequenceEngine::new();
    let mut prev = 0;
    for m in 30..=3_000 {
        let digits = e.narayana(m).unwrap().to_string().len();
        assert!(digits >= prev, "digits dropped at m = {m}");
        prev = digits;
    }
}

#[test]
fn skip_recurrence_on_stated_domain() {
    let mut e = SequenceEngine::new();
    for a in 1..=50 {
        for m in a + 1..=2_000 {
            assert_eq!(skip_eval(&mut e, m, a).unwrap(), e.narayana(m).unwrap(), "m = {m}, a = {a}");
        }
    }
}

#[test]
fn two_three_four_step_identities_on_all_integers() {
    let mut e = SequenceEngine::new();
    for a in 2..=4 {
        for m in -500..=1_500 {
            assert_eq!(skip_eval(&mut e, m, a).unwrap(), e.narayana(m).unwrap(), "m = {m}, a = {a}");
        }
    }
}

#[test]
fn reduction_triples_reproduce_n() {
    let mut e = SequenceEngine::new();
    for a in 1..=30 {
        for m in a + 1..=1_000 {
            let t = reduce_to_base(&mut e, m, a).unwrap();
            let b = t.b;
            let combo = &t.alpha * e.get(2 * a + b).unwrap() + &t.beta * e.get(a + b).unwrap()
                + &t.gamma * e.get(b).unwrap();
            assert_eq!(combo, e.narayana(m).unwrap(), "m = {m}, a = {a}");
        }
    }
}

#[test]
fn thirds_over_range() {
    let mut e = SequenceEngine::new();
    for m in 3..=2_000 {
        assert_eq!(thirds_eval(&mut e, m).unwrap(), e.narayana(m).unwrap(), "m = {m}");
    }
}

#[test]
fn mirror_identities() {
    let mut e = SequenceEngine::new();
    for m in 1..=1_000 {
        let pair = mirror(&mut e, m).unwrap();
        let two = BigInt::from(2);
        assert_eq!((&pair.p + &pair.q) % &two, BigInt::from(0));
        assert_eq!((&pair.p - &pair.q) % &two, BigInt::from(0));
        assert_eq!(pq_identity_eval(&mut e, m).unwrap(), e.narayana(m).unwrap());
        if m >= 5 {
            let rhs = mirror(&mut e, m - 3).unwrap().p + mirror(&mut e, m - 2).unwrap().q + e.get(m - 4).unwrap();
            assert_eq!(pair.p, rhs, "m = {m}");
        }
    }
}

#[test]
fn verification_is_deterministic() {
    let ranges = Ranges { m: (-50, 120), a: (1, 10), r: (0, 30) };
    for id in [IdentityId::ReductionBase, IdentityId::StrategyAgreement, IdentityId::SumRecurrence4b] {
        assert_eq!(verify(id, &ranges).unwrap(), verify(id, &ranges).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strategies_agree(m in -3_000i64..6_000) {
        let mut e = SequenceEngine::new();
        let want = e.narayana(m).unwrap();
        for s in Strategy::ALL {
            prop_assert_eq!(fast_narayana(&mut e, m, s).unwrap(), want.clone());
        }
    }

    #[test]
    fn csv_round_trips(a in 1i64..12, rows in 1i64..12) {
        let mut e = SequenceEngine::new();
        let t = build_table(&mut e, a, rows).unwrap();
        let parsed = parse_csv(&render(&t, TableFormat::Csv)).unwrap();
        prop_assert_eq!(&parsed, &t.entries);
        let rebuilt = build_table(&mut e, parsed[0].len() as i64, parsed.len() as i64).unwrap();
        prop_assert_eq!(rebuilt.entries, parsed);
    }

    #[test]
    fn table_rows_concatenate_to_range(a in 1i64..15, rows in 1i64..15) {
        let mut e = SequenceEngine::new();
        let t = build_table(&mut e, a, rows).unwrap();
        let flat: Vec<BigInt> = t.entries.concat();
        prop_assert_eq!(flat, e.narayana_range(1, a * rows).unwrap());
    }

    #[test]
    fn json_table_entries_are_decimal_strings(a in 1i64..8, rows in 1i64..8) {
        let mut e = SequenceEngine::new();
        let t = build_table(&mut e, a, rows).unwrap();
        let v: serde_json::Value = serde_json::from_str(&render(&t, TableFormat::Json)).unwrap();
        prop_assert_eq!(v["a"].as_i64(), Some(a));
        prop_assert_eq!(v["rows"].as_i64(), Some(rows));
        let last = v["entries"][(rows - 1) as usize][(a - 1) as usize].as_str().unwrap().to_owned();
        prop_assert_eq!(last, e.narayana(a * rows).unwrap().to_string());
    }
}
