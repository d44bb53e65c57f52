use braidforge::exchange::{iterated_exchange, ExchangePresentation};
use braidforge::garside::{self, conjugate_test, SummitCache, DEFAULT_SSS_CAP};
use braidforge::lamination::EntropySettings;
use braidforge::BraidWord;
use braidforge_cli::experiment::{decide_pair, run_experiment, Basis, Verdict};
use braidforge_cli::output::{write_json, write_pairs_csv, write_rows_csv, CSV_HEADER, PAIRS_HEADER};
use braidforge_cli::ExperimentConfig;

fn config(a: &str, b: &str, k_min: i64, k_max: i64) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::new(ExchangePresentation::parse(4, a, b).unwrap(), k_min, k_max).unwrap();
    cfg.entropy = EntropySettings {
        max_iters: 400,
        tol: 1e-9,
        seeds: 2,
    };
    cfg
}

#[test]
fn headline_report_structure() {
    let cfg = config("1", "3", -3, 3);
    let report = run_experiment(&cfg).unwrap();
    assert_eq!(report.rows.len(), 7);
    assert_eq!(report.pairs.len(), 21);
    assert_eq!(report.count(Verdict::Undecided), 0);
    for (a, row) in report.matrix.iter().enumerate() {
        assert_eq!(row[a], Verdict::Conjugate);
        for (b, v) in row.iter().enumerate() {
            assert_eq!(*v, report.matrix[b][a]);
        }
    }
    assert!(!report.degeneracy.degenerate && report.degeneracy.agree);
    assert!(report.checks.all_pass());
    assert_eq!(report.checks.twist_sign.as_deref(), Some("printed"));
    assert_eq!(report.settings.seeds.len(), 2);

    // Estimates grow with |k|.
    let by_abs = |k: i64| report.rows.iter().find(|r| r.k == k).unwrap().ent_est;
    assert!(by_abs(0) <= by_abs(2) && by_abs(2) <= by_abs(3));
    assert!(by_abs(-3) >= by_abs(-2));
}

#[test]
fn mirror_pairs_are_conjugate() {
    // Conjugating by Δ swaps σ1 and σ3 and fixes τ, and a cyclic shift then
    // carries ex^k(σ1 σ3) to ex^{-k}(σ1 σ3).
    let report = run_experiment(&config("1", "3", -3, 3)).unwrap();
    for k in 1..=3 {
        let e = report.pair(-k, k).unwrap();
        assert_eq!(e.verdict, Verdict::Conjugate, "k={k}");
        assert!(!e.traces_differ);
    }
    for e in report.pairs.iter().filter(|e| e.j != -e.k) {
        assert_eq!(e.verdict, Verdict::NonConjugate, "({},{})", e.j, e.k);
        assert!(e.basis.is_summit());
        assert!(e.traces_differ);
    }
}

#[test]
fn entries_reproduce_in_isolation() {
    let cfg = config("1", "3", -2, 2);
    let report = run_experiment(&cfg).unwrap();
    for e in &report.pairs {
        let u = iterated_exchange(&cfg.presentation, e.j);
        let v = iterated_exchange(&cfg.presentation, e.k);
        let alone = conjugate_test(&u, &v, DEFAULT_SSS_CAP).unwrap();
        assert_eq!(alone.is_conjugate(), e.verdict == Verdict::Conjugate);
        if let Some(w) = &e.witness {
            let g = BraidWord::parse(4, w).unwrap();
            assert!(garside::equal(&u.conjugate_by(&g).unwrap(), &v).unwrap());
        }
    }
}

#[test]
fn degenerate_family_is_one_class() {
    let report = run_experiment(&config("2", "3", -2, 2)).unwrap();
    assert!(report.degeneracy.degenerate && report.degeneracy.agree);
    assert_eq!(report.count(Verdict::Conjugate), 10);
    assert!(report.pairs.iter().all(|e| e.basis == Basis::TwistPower));
}

#[test]
fn cap_exhaustion_is_undecided_or_trace() {
    let mut cfg = config("1", "3", 2, 3);
    cfg.cap = 2;
    let report = run_experiment(&cfg).unwrap();
    assert!(report.rows.iter().all(|r| r.sss_size.is_none()));
    let e = report.pair(2, 3).unwrap();
    assert_eq!((e.verdict, e.basis), (Verdict::NonConjugate, Basis::Trace));

    let mut cache = SummitCache::new(2);
    let e = decide_pair(&cfg.presentation, -3, 3, &mut cache).unwrap();
    assert_eq!((e.verdict, e.basis), (Verdict::Undecided, Basis::ResourceCap));
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    let cfg = config("1", "3", -2, 2);
    std::env::set_var("BRAIDFORGE_THREADS", "1");
    let one = run_experiment(&cfg).unwrap();
    std::env::set_var("BRAIDFORGE_THREADS", "4");
    let four = run_experiment(&cfg).unwrap();
    std::env::remove_var("BRAIDFORGE_THREADS");
    assert_eq!(one, four);
}

#[test]
fn serialized_formats() {
    let report = run_experiment(&config("1", "3", 0, 1)).unwrap();
    let mut rows = Vec::new();
    write_rows_csv(&report, &mut rows).unwrap();
    let rows = String::from_utf8(rows).unwrap();
    assert_eq!(rows.lines().next(), Some(CSV_HEADER));
    assert!(rows.lines().nth(1).unwrap().starts_with("0,\"1,3\",2,2,0,1,1,"));

    let mut pairs = Vec::new();
    write_pairs_csv(&report, &mut pairs).unwrap();
    let pairs = String::from_utf8(pairs).unwrap();
    assert_eq!(pairs.lines().next(), Some(PAIRS_HEADER));
    assert_eq!(pairs.lines().nth(1), Some("0,1,non-conjugate,summit-bounds,true,"));

    let mut json = Vec::new();
    write_json(&report, &mut json).unwrap();
    let value: serde_json::Value = serde_json::from_slice(&json).unwrap();
    let row = &value["rows"][0];
    for key in CSV_HEADER.split(',') {
        assert!(row.get(key).is_some(), "missing {key}");
    }
    assert_eq!(value["pairs"][0]["verdict"], "non-conjugate");
    assert_eq!(value["matrix"][0][0], "conjugate");
    assert_eq!(value["settings"]["A"], "1");
}

#[test]
fn shipped_configs_parse() {
    for text in [
        include_str!("../configs/headline.cfg"),
        include_str!("../configs/degenerate.cfg"),
    ] {
        let cfg: ExperimentConfig = text.parse().unwrap();
        assert!(cfg.out.is_some());
    }
}
