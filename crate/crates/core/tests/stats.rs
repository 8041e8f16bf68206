mod common;

use approx::assert_abs_diff_eq;
use common::{doc_with_lengths, fixture_corpus};
use nilcmetrix::stats::{compare_corpora, welch_t, Direction, FeatureMatrix, StatsError, ABSENT_IN_B, DEFAULT_ALPHA};
use nilcmetrix::{compute_all, export_features, Document, MetricVector, ResourceBundle};
use proptest::prelude::*;
use statrs::distribution::{ContinuousCDF, StudentsT};
use statrs::function::gamma::ln_gamma;

/// Two-sided p from statrs' Student t CDF.
fn p_statrs(t: f64, df: f64) -> f64 {
    let dist = StudentsT::new(0.0, 1.0, df).unwrap();
    2.0 * dist.cdf(-t.abs())
}

/// Two-sided p by Simpson integration of the t density over [0, |t|].
fn p_integrated(t: f64, df: f64) -> f64 {
    let c = (ln_gamma((df + 1.0) / 2.0) - ln_gamma(df / 2.0)).exp() / (df * std::f64::consts::PI).sqrt();
    let f = |x: f64| c * (1.0 + x * x / df).powf(-(df + 1.0) / 2.0);
    let n = 20_000;
    let h = t.abs() / n as f64;
    let mut sum = f(0.0) + f(t.abs());
    for i in 1..n {
        sum += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h);
    }
    1.0 - 2.0 * sum * h / 3.0
}

/// Welch statistic and Satterthwaite df computed directly.
fn welch_oracle(a: &[f64], b: &[f64]) -> (f64, f64) {
    let stats = |xs: &[f64]| {
        let n = xs.len() as f64;
        let m = xs.iter().sum::<f64>() / n;
        (m, xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (n - 1.0), n)
    };
    let (ma, va, na) = stats(a);
    let (mb, vb, nb) = stats(b);
    let se2 = va / na + vb / nb;
    let df = se2 * se2 / ((va / na).powi(2) / (na - 1.0) + (vb / nb).powi(2) / (nb - 1.0));
    ((ma - mb) / se2.sqrt(), df)
}

#[test]
fn welch_examples() {
    let r = welch_t(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap();
    assert_eq!((r.t, r.p), (0.0, 1.0));
    let r = welch_t(&[1.0, 2.0, 3.0, 4.0, 5.0], &[2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
    assert_abs_diff_eq!(r.t, -1.0, epsilon = 1e-12);
    assert_abs_diff_eq!(r.df, 8.0, epsilon = 1e-12);
    assert_abs_diff_eq!(r.p, 0.3466, epsilon = 5e-4);
    assert_abs_diff_eq!(r.p, p_statrs(-1.0, 8.0), epsilon = 1e-10);
    assert_abs_diff_eq!(r.p, p_integrated(-1.0, 8.0), epsilon = 1e-8);
}

#[test]
fn welch_errors() {
    assert!(matches!(welch_t(&[1.0], &[1.0, 2.0]), Err(StatsError::InsufficientData { n_a: 1, n_b: 2 })));
    assert!(matches!(welch_t(&[1.0, f64::NAN], &[1.0, 2.0]), Err(StatsError::NonFinite)));
}

#[test]
fn welch_matches_both_routes_on_fixed_samples() {
    let a = [12.1, 14.3, 11.8, 15.2, 13.9, 12.7, 14.8];
    let b = [10.2, 9.8, 11.5, 10.9, 12.4];
    let r = welch_t(&a, &b).unwrap();
    let (t, df) = welch_oracle(&a, &b);
    assert_abs_diff_eq!(r.t, t, epsilon = 1e-12);
    assert_abs_diff_eq!(r.df, df, epsilon = 1e-9);
    assert_abs_diff_eq!(r.p, p_statrs(t, df), epsilon = 1e-10);
    assert_abs_diff_eq!(r.p, p_integrated(t, df), epsilon = 1e-8);
}

fn sample() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-50.0f64..50.0, 2..25)
}

proptest! {
    #[test]
    fn welch_agrees_with_oracles(a in sample(), b in sample()) {
        let r = welch_t(&a, &b).unwrap();
        prop_assume!(!r.degenerate);
        let (t, df) = welch_oracle(&a, &b);
        prop_assert!((r.t - t).abs() <= 1e-9 * t.abs().max(1.0));
        prop_assert!((r.df - df.min((a.len() + b.len() - 2) as f64)).abs() < 1e-6);
        prop_assert!((r.p - p_statrs(r.t, r.df)).abs() < 1e-8);
        prop_assert!((r.p - p_integrated(r.t, r.df)).abs() < 1e-6);
    }

    #[test]
    fn welch_is_antisymmetric(a in sample(), b in sample()) {
        let ab = welch_t(&a, &b).unwrap();
        let ba = welch_t(&b, &a).unwrap();
        prop_assert_eq!(ab.t, -ba.t);
        prop_assert_eq!(ab.df, ba.df);
        prop_assert_eq!(ab.p, ba.p);
        prop_assert!((0.0..=1.0).contains(&ab.p));
    }

    #[test]
    fn equal_sizes_and_variances_give_pooled_df(a in prop::collection::vec(-10.0f64..10.0, 2..20), shift in -5.0f64..5.0) {
        let b: Vec<f64> = a.iter().map(|x| x + shift).collect();
        let r = welch_t(&a, &b).unwrap();
        prop_assume!(!r.degenerate);
        prop_assert!((r.df - (2 * a.len() - 2) as f64).abs() < 1e-6);
    }

    #[test]
    fn p_decreases_with_shift(a in prop::collection::vec(-10.0f64..10.0, 3..20), s1 in 0.0f64..5.0, extra in 0.1f64..5.0) {
        let near: Vec<f64> = a.iter().map(|x| x + s1).collect();
        let far: Vec<f64> = a.iter().map(|x| x + s1 + extra).collect();
        let pn = welch_t(&a, &near).unwrap();
        let pf = welch_t(&a, &far).unwrap();
        prop_assume!(!pn.degenerate);
        prop_assert!(pf.p <= pn.p);
    }
}

fn vectors(docs: &[Document]) -> Vec<MetricVector> {
    docs.iter().map(|d| compute_all(d, &ResourceBundle::default())).collect()
}

fn renamed(mut d: Document, id: String) -> Document {
    d.id = id;
    d
}

/// `docs` documents of four noun sentences of `length` to `length + 2` words.
fn corpus(prefix: &str, length: usize, docs: usize) -> FeatureMatrix {
    let corpus: Vec<Document> = (0..docs)
        .map(|i| {
            let lengths: Vec<usize> = (0..4).map(|j| length + (i + j) % 3).collect();
            renamed(doc_with_lengths(&lengths), format!("{prefix}{i}"))
        })
        .collect();
    FeatureMatrix::from_vectors(&vectors(&corpus), None).unwrap()
}

#[test]
fn compare_detects_sentence_length() {
    let short = corpus("a", 5, 12);
    let long = corpus("b", 20, 12);
    let report = compare_corpora(&short, &long, DEFAULT_ALPHA).unwrap();
    let e = report.entry("words_per_sentence").unwrap();
    assert!(e.significant);
    assert_eq!(e.direction, Direction::BGreater);
    assert!(report.significant().any(|e| e.metric == "words"));

    let same = compare_corpora(&short, &short, DEFAULT_ALPHA).unwrap();
    assert_eq!(same.significant().count(), 0);
}

#[test]
fn compare_skips_columns_present_on_one_side() {
    let a = corpus("a", 5, 3);
    let mut b = corpus("b", 5, 3);
    b.metric_ids.truncate(5);
    for row in &mut b.rows {
        row.values.truncate(5);
    }
    let report = compare_corpora(&a, &b, 0.05).unwrap();
    assert_eq!(report.entries.len(), 5);
    assert!(report.skipped.iter().any(|s| s.reason == ABSENT_IN_B));
    assert!(report.to_tsv().lines().count() > 5);
}

#[test]
fn export_layout() {
    let one = vec![renamed(doc_with_lengths(&[3]), "solo".into())];
    let m = export_features(&one, &ResourceBundle::default(), None).unwrap();
    let tsv = m.to_tsv();
    assert_eq!(tsv.lines().count(), 2);
    assert!(tsv.starts_with("doc_id\twords\t"));
    assert!(tsv.lines().nth(1).unwrap().starts_with("solo\t3.000000\t"));

    let two = vec![renamed(doc_with_lengths(&[3]), "x".into()), renamed(doc_with_lengths(&[4]), "y".into())];
    let labels = vec!["easy".to_string(), "hard".to_string()];
    let m = export_features(&two, &ResourceBundle::default(), Some(&labels)).unwrap();
    let tsv = m.to_tsv();
    assert!(tsv.starts_with("doc_id\tlabel\twords\t"));
    assert!(tsv.lines().nth(2).unwrap().starts_with("y\thard\t4.000000"));
    assert_eq!(FeatureMatrix::from_tsv(&tsv).unwrap().to_tsv(), tsv);

    let dup = vec![renamed(doc_with_lengths(&[3]), "x".into()), renamed(doc_with_lengths(&[4]), "x".into())];
    assert!(matches!(export_features(&dup, &ResourceBundle::default(), None), Err(StatsError::DuplicateDocId(id)) if id == "x"));
    assert!(matches!(export_features(&two, &ResourceBundle::default(), Some(&labels[..1])), Err(StatsError::LabelCount { .. })));
    assert!(matches!(export_features(&[], &ResourceBundle::default(), None), Err(StatsError::EmptyCorpus)));
}

#[test]
fn fixture_export_round_trips() {
    let m = export_features(&fixture_corpus(), &ResourceBundle::default(), None).unwrap();
    let back = FeatureMatrix::from_tsv(&m.to_tsv()).unwrap();
    assert_eq!(back.to_tsv(), m.to_tsv());
    assert_eq!(back.rows.len(), 3);
}
