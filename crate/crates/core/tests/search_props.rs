use proptest::prelude::*;
use supercong::search::*;
use supercong::sequences::{recur_eval, RecurrenceParams};
use supercong::Exec;

fn rational_first_failure(params: RecurrenceParams, n_max: u64) -> Integrality {
    match recur_eval(params, n_max)
        .iter()
        .position(|x| !x.is_integer())
    {
        Some(n) => Integrality::FailsAt(n as u64),
        None => Integrality::Integral,
    }
}

proptest! {
    // the integer prefilter rejects exactly the tuples the rational
    // recurrence rejects, and at the same index
    #[test]
    fn prefilter_is_sound_cubic(a in 0i64..25, b in 0i64..10, c in -250i64..250, d in -20i64..20) {
        let p = RecurrenceParams::cubic(a, b, c, d);
        prop_assert_eq!(integrality(p, 30), rational_first_failure(p, 30));
    }

    #[test]
    fn prefilter_is_sound_quadratic(a in 0i64..25, b in 0i64..10, c in -120i64..120) {
        let p = RecurrenceParams::quadratic(a, b, c);
        prop_assert_eq!(integrality(p, 30), rational_first_failure(p, 30));
    }
}

#[test]
fn big_integer_continuation() {
    // the Apery recurrence leaves i128 well before n = 200
    let p = RecurrenceParams::cubic(17, 5, 1, 0);
    assert_eq!(integrality(p, 200), Integrality::Integral);
    assert_eq!(
        integrality(RecurrenceParams::cubic(17, 5, 1, 1), 200),
        rational_first_failure(RecurrenceParams::cubic(17, 5, 1, 1), 200)
    );
}

#[test]
fn deep_hits_survive_double_depth() {
    let r = |s: &str| s.parse::<IntRange>().unwrap();
    let hits = search_cubic(
        r("0..12"),
        r("0..4"),
        r("-40..40"),
        r("-4..4"),
        15,
        true,
        Exec::default(),
    )
    .unwrap();
    assert!(!hits.is_empty());
    for h in &hits {
        assert_eq!(h.n_checked, 30);
        assert_eq!(integrality(h.params, 30), Integrality::Integral);
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let r = |s: &str| s.parse::<IntRange>().unwrap();
    let run =
        |exec| search_quadratic(r("0..12"), r("0..5"), r("-60..60"), 20, false, exec).unwrap();
    let seq = run(Exec::Sequential);
    assert_eq!(seq, run(Exec::default()));
    let mut sorted = seq.clone();
    sorted.sort_by_key(|h| h.params);
    assert_eq!(seq, sorted);
}
