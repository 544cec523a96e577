use hecke_core::heckealg::{Element, HeckeAlgebra};
use hecke_core::inductive::Inductive;
use hecke_core::verify::{
    dimension_check, oracle::matrix_is_invertible, run_suite, LabelFamily, SuiteError,
    SuiteOptions, SUITES,
};

fn opts() -> SuiteOptions {
    SuiteOptions::default()
}

#[test]
fn relations_suite_checks_six_families() {
    let r = run_suite("relations", 2, 3, &opts()).unwrap();
    assert!(r.pass);
    assert_eq!(r.checks, 6);
    assert!(r.violations.is_empty());
}

#[test]
fn specializations_cover_every_monomial() {
    let r = run_suite("specializations", 2, 2, &opts()).unwrap();
    assert!(r.pass, "{}", r.to_json());
    assert!(r.checks >= 8);
}

#[test]
fn normalized_symmetry_is_exhaustive_on_two_strands() {
    let r = run_suite("tr-symmetry", 2, 2, &opts()).unwrap();
    assert!(r.pass);
    assert_eq!(r.checks, 64);
    assert_eq!(r.samples, 64);
}

#[test]
fn dimension_examples() {
    assert_eq!(HeckeAlgebra::new(2).basis(3).len(), 48);
    assert_eq!(HeckeAlgebra::new(3).basis(2).len(), 18);
    for n in 1..=4 {
        assert_eq!(
            HeckeAlgebra::new(1).basis(n).len(),
            (1..=n).product::<usize>()
        );
        assert!(dimension_check(1, n, 3).pass);
    }
}

#[test]
fn oracle_matrix_is_square_and_invertible() {
    let alg = HeckeAlgebra::new(2);
    let ind = Inductive::new(&alg);
    for family in [LabelFamily::J, LabelFamily::T] {
        assert!(matrix_is_invertible(&ind, 3, family).unwrap());
    }
    let x = Element::monomial(2, alg.basis(3)[17].clone());
    let d = hecke_core::verify::oracle_decompose(&ind, &x, LabelFamily::J).unwrap();
    assert_eq!(d, ind.decompose_j(&x).unwrap());
}

#[test]
fn suite_errors() {
    assert!(matches!(
        run_suite("bogus", 2, 2, &opts()),
        Err(SuiteError::UnknownSuite(_))
    ));
    assert!(matches!(
        run_suite("relations", 0, 2, &opts()),
        Err(SuiteError::Degenerate)
    ));
    assert!(matches!(
        run_suite("relations", 3, 6, &opts()),
        Err(SuiteError::TooLarge(_))
    ));
}

#[test]
fn all_suite_aggregates_the_others() {
    let all = run_suite("all", 2, 2, &opts()).unwrap();
    let mut checks = 0;
    for name in SUITES.iter().filter(|s| **s != "all") {
        checks += run_suite(name, 2, 2, &opts()).unwrap().checks;
    }
    assert_eq!(all.checks, checks);
    assert!(!all.pass);
    assert!(all
        .violations
        .iter()
        .all(|v| v.description.starts_with("[lemmas-2") || v.description.starts_with("[Tr-rules")));
}

#[test]
fn report_json_schema() {
    let r = run_suite("dimension", 2, 2, &SuiteOptions::with_seed(9)).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in [
        "suite",
        "m",
        "n",
        "seed",
        "samples",
        "checks",
        "pass",
        "violations",
    ] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["seed"], 9);
    assert_eq!(
        doc["pass"],
        doc["violations"].as_array().unwrap().is_empty()
    );
}

#[test]
fn seeds_change_samples_but_not_verdicts() {
    let a = run_suite("Tr-symmetry", 1, 3, &SuiteOptions::with_seed(1)).unwrap();
    let b = run_suite("Tr-symmetry", 1, 3, &SuiteOptions::with_seed(2)).unwrap();
    assert!(a.pass && b.pass);
    let c = run_suite("tr-rules", 2, 4, &SuiteOptions::with_seed(1)).unwrap();
    let d = run_suite("tr-rules", 2, 4, &SuiteOptions::with_seed(2)).unwrap();
    assert!(c.pass && d.pass);
}
