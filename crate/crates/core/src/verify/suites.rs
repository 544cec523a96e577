//! Named, seeded verification suites.

use super::oracle::{matrix_is_invertible, oracle_decompose_many, LabelFamily, OracleError};
use super::{lemmas, traces, Report, Violation};
use crate::coeffring::{Bindings, CoeffError, Polynomial, Rational, Var, VarTable};
use crate::heckealg::{check_relations, AlgebraError, Element, HeckeAlgebra, Monomial};
use crate::inductive::Inductive;
use crate::markov::{tau_bk, tr0, NonNormalizedTrace, NormalizedTrace, TraceError, TraceParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20240;
/// Random draws per randomized family when none is given.
pub const DEFAULT_SAMPLES: usize = 50;
/// Largest `m^n n!` any suite accepts.
pub const MAX_DIMENSION: usize = 10_000;
/// Exhaustive scans run up to this dimension; larger algebras are sampled.
const EXHAUSTIVE_DIMENSION: usize = 48;
/// Random monomials checked by the inductive suite above the exhaustive range.
const INDUCTIVE_SAMPLES: usize = 25;
/// The oracle matrix is only built up to this size.
const ORACLE_DIMENSION: usize = 400;

pub const SUITES: [&str; 10] = [
    "relations",
    "dimension",
    "lemmas-2",
    "inductive",
    "tr-rules",
    "tr-symmetry",
    "Tr-rules",
    "Tr-symmetry",
    "specializations",
    "all",
];

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`; expected one of {list}", list = SUITES.join(", "))]
    UnknownSuite(String),
    #[error("m^n n! = {0} exceeds the supported size {MAX_DIMENSION}")]
    TooLarge(usize),
    #[error("m and n must be at least 1")]
    Degenerate,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

impl SuiteOptions {
    pub fn with_seed(seed: u64) -> Self {
        SuiteOptions {
            seed,
            ..Self::default()
        }
    }
}

/// `count` indices drawn uniformly from `0..len`, reproducible from `seed`.
pub fn sample_indices(len: usize, count: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.gen_range(0..len)).collect()
}

/// Run one named suite. `all` runs every other suite and merges their reports.
pub fn run_suite(
    name: &str,
    m: usize,
    n: usize,
    opts: &SuiteOptions,
) -> Result<Report, SuiteError> {
    if !SUITES.contains(&name) {
        return Err(SuiteError::UnknownSuite(name.to_string()));
    }
    if m == 0 || n == 0 {
        return Err(SuiteError::Degenerate);
    }
    let alg = HeckeAlgebra::new(m);
    let dim = alg.dimension(n);
    if dim > MAX_DIMENSION {
        return Err(SuiteError::TooLarge(dim));
    }
    let seed = opts.seed;
    let samples = opts.samples;
    let mut report = Report::new(name, m, n, seed);
    match name {
        "relations" => {
            let mut inner = check_relations(&alg, n)?;
            inner.seed = seed;
            report = inner;
        }
        "dimension" => report = dimension_check(m, n, seed),
        "lemmas-2" => {
            lemmas::s_j_lemma(&alg, n, &mut report)?;
            lemmas::s_t_lemma(&alg, n, &mut report)?;
            lemmas::t_commutator(&alg, n, &mut report)?;
        }
        "inductive" => inductive(&alg, n, seed, &mut report)?,
        "tr-rules" => traces::normalized_rules(&alg, n, samples, seed, &mut report)?,
        "tr-symmetry" => {
            let exhaustive = dim <= EXHAUSTIVE_DIMENSION;
            traces::symmetry(
                &alg,
                n,
                traces::Which::Normalized,
                exhaustive,
                seed,
                &mut report,
            )?
        }
        "Tr-rules" => traces::raw_rules(&alg, n, samples, seed, &mut report)?,
        "Tr-symmetry" => {
            let exhaustive = n <= 2 || dim * dim <= traces::SYMMETRY_PAIRS;
            traces::symmetry(
                &alg,
                n,
                traces::Which::NonNormalized,
                exhaustive,
                seed,
                &mut report,
            )?
        }
        "specializations" => specializations(&alg, n, samples, seed, &mut report)?,
        _ => {
            for sub in SUITES.iter().filter(|s| **s != "all") {
                report.absorb(run_suite(sub, m, n, opts)?);
            }
        }
    }
    Ok(report)
}

/// Census of the standard basis plus random products that must stay inside it.
pub fn dimension_check(m: usize, n: usize, seed: u64) -> Report {
    let alg = HeckeAlgebra::new(m);
    let mut report = Report::new("dimension", m, n, seed);
    let basis = alg.basis(n);
    let expected = m.pow(n as u32) * (1..=n).product::<usize>();
    report.check_eq(
        || "|basis| = m^n n!".into(),
        || json!({ "m": m, "n": n }),
        &basis.len(),
        &expected,
    );
    let distinct: std::collections::BTreeSet<&Monomial> = basis.iter().collect();
    report.check_eq(
        || "basis monomials are distinct".into(),
        || json!({}),
        &distinct.len(),
        &basis.len(),
    );
    let in_range = |mono: &Monomial| mono.n() == n && mono.exp.iter().all(|&a| (a as usize) < m);
    let draws = sample_indices(basis.len(), 2 * DEFAULT_SAMPLES, seed);
    report.samples += DEFAULT_SAMPLES;
    for pair in draws.chunks(2) {
        let (a, b) = (&basis[pair[0]], &basis[pair[1]]);
        let product = alg.mul(
            &Element::monomial(m, a.clone()),
            &Element::monomial(m, b.clone()),
        );
        let ok =
            matches!(&product, Ok(p) if p.n() == n && p.terms().all(|(mono, _)| in_range(mono)));
        report.check(ok, || Violation {
            description: "product of basis monomials stays in the standard span".into(),
            inputs: json!({ "a": a.render("J"), "b": b.render("J") }),
            lhs: match &product {
                Ok(p) => p.to_string(),
                Err(e) => e.to_string(),
            },
            rhs: "standard form".into(),
        });
    }
    if m == 1 && n >= 1 {
        let t = alg.tk(1, n).expect("t exists");
        let u1 = Element::scalar(1, n, Polynomial::var(1, Var::U(1)));
        report.check_eq(|| "t = u1 when m = 1".into(), || json!({}), &t, &u1);
    }
    report
}

fn inductive(
    alg: &HeckeAlgebra,
    n: usize,
    seed: u64,
    report: &mut Report,
) -> Result<(), SuiteError> {
    let m = alg.m();
    let ind = Inductive::new(alg);
    let basis = alg.basis(n);
    let chosen: Vec<Monomial> = if basis.len() <= EXHAUSTIVE_DIMENSION {
        basis
    } else {
        sample_indices(basis.len(), INDUCTIVE_SAMPLES, seed)
            .into_iter()
            .map(|i| basis[i].clone())
            .collect()
    };
    report.samples += chosen.len();
    let xs: Vec<Element> = chosen
        .into_iter()
        .map(|b| Element::monomial(m, b))
        .collect();
    for x in &xs {
        let inputs = || json!({ "x": x.to_string() });
        let t = ind.to_t_basis(x)?;
        report.check_eq(
            || "t-basis round trip".into(),
            inputs,
            &ind.from_t_basis(&t)?,
            x,
        );
    }
    if n < 2 {
        return Ok(());
    }
    for family in [LabelFamily::J, LabelFamily::T] {
        let oracle = oracle_decompose_many(&ind, &xs, family)?;
        for (x, expected) in xs.iter().zip(oracle) {
            let d = match family {
                LabelFamily::J => ind.decompose_j(x)?,
                LabelFamily::T => ind.decompose_t(x)?,
            };
            let inputs = || json!({ "x": x.to_string(), "family": format!("{family:?}") });
            report.check_eq(
                || "recompose(decompose(x)) = x".into(),
                inputs,
                &ind.recompose(&d)?,
                x,
            );
            report.check(d == expected, || Violation {
                description: "constructive decomposition matches the oracle".into(),
                inputs: inputs(),
                lhs: d.to_json().to_string(),
                rhs: expected.to_json().to_string(),
            });
        }
        if alg.dimension(n) <= ORACLE_DIMENSION {
            let ok = matrix_is_invertible(&ind, n, family)?;
            report.check(ok, || Violation {
                description: "change-of-basis matrix is invertible".into(),
                inputs: json!({ "family": format!("{family:?}") }),
                lhs: "singular".into(),
                rhs: "invertible".into(),
            });
        }
    }
    Ok(())
}

/// `Tr(J_1^(a_1) ... J_n^(a_n))` at `z = 0` against the product of the moments `M(i, a_i)`,
/// for every exponent vector with entries in `1..m`.
pub fn zero_z_factorization(
    alg: &HeckeAlgebra,
    n: usize,
    report: &mut Report,
) -> Result<(), SuiteError> {
    let m = alg.m();
    let at_zero = TraceParams::symbolic(m)
        .specialize(&Bindings::new().bind(Var::Z, Rational::from_integer(0.into())))?;
    let tr = NonNormalizedTrace::new(alg, at_zero);
    for mono in alg.basis(n) {
        if !mono.perm.is_identity() || mono.exp.contains(&0) {
            continue;
        }
        let mut expected = Polynomial::one(m);
        for (i, &a) in mono.exp.iter().enumerate() {
            expected = &expected * &tr.moment(i + 1, a as usize)?;
        }
        let mut word = alg.one(n);
        for (i, &a) in mono.exp.iter().enumerate() {
            word = alg.mul(&word, &alg.pow(&alg.jm(i + 1, n)?, a as usize)?)?;
        }
        let value = tr.eval(&word)?;
        report.check_eq(
            || "Tr(J_1^a_1 ... J_n^a_n) = prod M(i, a_i) at z = 0".into(),
            || json!({ "exponents": mono.exp.to_vec() }),
            &value,
            &expected,
        );
    }
    Ok(())
}

fn specializations(
    alg: &HeckeAlgebra,
    n: usize,
    samples: usize,
    seed: u64,
    report: &mut Report,
) -> Result<(), SuiteError> {
    let m = alg.m();
    let ind = Inductive::new(alg);
    let zero = Polynomial::zero(m);
    let one = Polynomial::one(m);
    let canonical = NormalizedTrace::new(alg, TraceParams::canonical0(m));
    let z_zero = Bindings::new().bind(Var::Z, Rational::from_integer(0.into()));
    let vanishing = NormalizedTrace::new(alg, TraceParams::symbolic(m).specialize(&z_zero)?);
    for mono in alg.basis(n) {
        let word = ind.from_t_basis(&Element::monomial(m, mono.clone()))?;
        let inputs = || json!({ "t_word": mono.render("t") });
        let indicator = if mono.is_identity() { &one } else { &zero };
        report.check_eq(
            || "tr_0 is the identity indicator on the t-basis".into(),
            inputs,
            &tr0(&ind, &word)?,
            indicator,
        );
        report.check_eq(
            || "tr_0 from the Markov recursion".into(),
            inputs,
            &canonical.eval(&word)?,
            indicator,
        );
        if !mono.perm.is_identity() {
            report.check_eq(
                || "tr(t-word w) = 0 at z = 0 for w != 1".into(),
                inputs,
                &vanishing.eval(&word)?,
                &zero,
            );
        }
    }
    if m >= 2 {
        let bk = NonNormalizedTrace::new(alg, TraceParams::bk01(m));
        for mono in alg.basis(n) {
            let x = Element::monomial(m, mono.clone());
            report.check_eq(
                || "Tr_(0,1) = tau_BK".into(),
                || json!({ "x": x.to_string() }),
                &bk.eval(&x)?,
                &tau_bk(&x),
            );
        }
    }
    zero_z_factorization(alg, n, report)?;
    specialization_commutes(alg, n, samples, seed, report)
}

/// Specializing parameters after evaluation agrees with evaluating the specialized trace.
fn specialization_commutes(
    alg: &HeckeAlgebra,
    n: usize,
    samples: usize,
    seed: u64,
    report: &mut Report,
) -> Result<(), SuiteError> {
    let m = alg.m();
    let vt = VarTable::new(m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = alg.basis(n);
    let params = TraceParams::symbolic(m);
    let normalized = NormalizedTrace::new(alg, params.clone());
    let raw = NonNormalizedTrace::new(alg, params.clone());
    let draws = samples.min(basis.len()).max(1);
    for _ in 0..draws.div_ceil(10) {
        let mut bindings = Bindings::new();
        for v in vt.vars().filter(|v| !matches!(v, Var::U(_))) {
            let value = Rational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into());
            bindings.set(v, value);
        }
        let special = params.specialize(&bindings)?;
        let normalized_at = NormalizedTrace::new(alg, special.clone());
        let raw_at = NonNormalizedTrace::new(alg, special);
        for _ in 0..10 {
            let mono = basis[rng.gen_range(0..basis.len())].clone();
            let x = Element::monomial(m, mono);
            let inputs = || json!({ "x": x.to_string() });
            report.samples += 1;
            report.check_eq(
                || "specialize(tr(x)) = tr_specialized(x)".into(),
                inputs,
                &normalized.eval(&x)?.substitute(&bindings)?,
                &normalized_at.eval(&x)?,
            );
            report.check_eq(
                || "specialize(Tr(x)) = Tr_specialized(x)".into(),
                inputs,
                &raw.eval(&x)?.substitute(&bindings)?,
                &raw_at.eval(&x)?,
            );
        }
    }
    Ok(())
}
