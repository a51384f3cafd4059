use zipfkit_web::{analyze, monkey, segment};

const REM1020: &str = include_str!("../../core/data/rank_tables/REM1020.tsv");

#[test]
fn rank_table_fit_matches_core() {
    let a = analyze(REM1020, "rank-table", false, "truncated", "min-chisq").unwrap();
    assert_eq!((a.tokens(), a.types()), (36.0, 31));
    assert!((a.a() - 0.37).abs() < 0.01);
    assert_eq!(a.df(), Some(20));
    let observed = a.observed();
    let expected = a.expected();
    assert_eq!(observed.len(), 31);
    assert_eq!(expected.len(), 31);
    assert!((expected.iter().sum::<f64>() - 36.0).abs() < 1e-9);
    assert!(expected.windows(2).all(|w| w[0] >= w[1]));
}

#[test]
fn corpus_fit_respects_bound_morphemes() {
    let text = "qes : qesli : qes : qesli : qes : qesli : wosi";
    let plain = analyze(text, "corpus", false, "truncated", "mle").unwrap();
    let bm = analyze(text, "corpus", true, "truncated", "mle").unwrap();
    assert_eq!((plain.tokens(), plain.types()), (7.0, 3));
    assert_eq!((bm.tokens(), bm.types()), (10.0, 3));
    assert_eq!(bm.surfaces()[0], "qes");
}

#[test]
fn bad_arguments_are_reported_as_messages() {
    assert!(analyze(REM1020, "rank-table", false, "lognormal", "mle").unwrap_err().contains("lognormal"));
    assert!(analyze(REM1020, "xml", false, "truncated", "mle").is_err());
    assert!(analyze(REM1020, "rank-table", false, "truncated", "bayes").is_err());
    assert!(analyze("1\t1\t3\n3\t3\t1\n", "rank-table", false, "truncated", "mle")
        .unwrap_err()
        .contains("gap"));
    // two types cannot carry a power law
    assert!(analyze("a a b", "corpus", false, "power", "mle").is_err());
}

#[test]
fn segment_lists_each_token() {
    let out = segment("telowi : qesli ab?r");
    assert_eq!(out, "telowi\tte + lo + wi\nqesli\tqes + li\nab?r\tab?r\n");
}

#[test]
fn monkey_is_seeded() {
    let a = monkey(5, 0.3, 20_000, 9).unwrap();
    let b = monkey(5, 0.3, 20_000, 9).unwrap();
    assert_eq!(a.frequencies(), b.frequencies());
    assert_eq!(a.types(), a.frequencies().len());
    assert!(a.slope() < 0.0 && a.r2() > 0.0 && a.r2() <= 1.0);
    assert!(monkey(5, 0.0, 100, 1).is_err());
}
