//! Markov traces on the tower `H_1 ⊂ H_2 ⊂ ...`.
//!
//! The normalized trace `tr` is evaluated in t-coordinates:
//! `tr(α t_n^k) = y_k tr(α)` and `tr(α s_(n-1) β) = z tr(αβ)` for `α, β` in `H_(n-1)`,
//! with `tr(1) = 1`.
//!
//! The non-normalized trace `Tr` is evaluated in J-coordinates on the
//! decomposition `H_n = H_(n-1) s_(n-1) H_(n-1) ⊕ ⊕_k H_(n-1) J_n^k`:
//! `Tr_n(a s_(n-1) b) = z Tr_(n-1)(ab)` and `Tr_n(α J_n^k) = M(n, k) Tr_(n-1)(α)`,
//! where `M(n, k)` comes from the moment recursion, `M(n, 0) = Tr(1) = 0` and
//! `Tr_0` is the identity on scalars, so that `Tr_1(J_1^k) = y_k`.

use crate::coeffring::{Bindings, CoeffError, Polynomial, Rational, Var};
use crate::heckealg::{AlgebraError, Element, HeckeAlgebra, Monomial};
use crate::inductive::Inductive;
use crate::symgroup::Permutation;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("moment exponent {k} must be below m = {m}; reduce the power first")]
    MomentExponent { k: usize, m: usize },
    #[error("moment strand index must be at least 1")]
    MomentStrand,
    #[error("specialized trace {evaluated} disagrees with the direct functional {direct}")]
    Disagreement { evaluated: String, direct: String },
    #[error("unknown trace kind `{0}`")]
    UnknownKind(String),
}

/// The parameters `z, y_1, ..., y_(m-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceParams {
    pub z: Polynomial,
    pub y: Vec<Polynomial>,
}

impl TraceParams {
    pub fn symbolic(m: usize) -> Self {
        TraceParams {
            z: Polynomial::var(m, Var::Z),
            y: (1..m).map(|k| Polynomial::var(m, Var::Y(k))).collect(),
        }
    }

    pub fn constant(m: usize, z: Rational, y: &[Rational]) -> Self {
        assert_eq!(y.len(), m - 1, "expected m - 1 values for y");
        TraceParams {
            z: Polynomial::constant(m, z),
            y: y.iter()
                .map(|c| Polynomial::constant(m, c.clone()))
                .collect(),
        }
    }

    /// `z = y_1 = ... = y_(m-1) = 0`.
    pub fn canonical0(m: usize) -> Self {
        Self::constant(m, Rational::zero(), &vec![Rational::zero(); m - 1])
    }

    /// `z = y_1 = ... = y_(m-2) = 0`, `y_(m-1) = 1`.
    pub fn bk01(m: usize) -> Self {
        let mut y = vec![Rational::zero(); m - 1];
        if let Some(last) = y.last_mut() {
            *last = Rational::one();
        }
        Self::constant(m, Rational::zero(), &y)
    }

    pub fn m(&self) -> usize {
        self.z.m()
    }

    /// Substitute rational values into every parameter.
    pub fn specialize(&self, bindings: &Bindings) -> Result<Self, CoeffError> {
        Ok(TraceParams {
            z: self.z.substitute(bindings)?,
            y: self
                .y
                .iter()
                .map(|p| p.substitute(bindings))
                .collect::<Result<_, _>>()?,
        })
    }

    /// `y_k` for `1 <= k < m`.
    pub fn y(&self, k: usize) -> &Polynomial {
        &self.y[k - 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceKind {
    Normalized,
    NonNormalized,
    Canonical0,
    BK01,
    DirectBK,
}

impl TraceKind {
    pub const ALL: [TraceKind; 5] = [
        TraceKind::Normalized,
        TraceKind::NonNormalized,
        TraceKind::Canonical0,
        TraceKind::BK01,
        TraceKind::DirectBK,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TraceKind::Normalized => "normalized",
            TraceKind::NonNormalized => "raw",
            TraceKind::Canonical0 => "canonical0",
            TraceKind::BK01 => "bk01",
            TraceKind::DirectBK => "bk",
        }
    }
}

impl fmt::Display for TraceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TraceKind {
    type Err = TraceError;
    fn from_str(s: &str) -> Result<Self, TraceError> {
        match s {
            "normalized" => Ok(TraceKind::Normalized),
            "raw" | "nonnormalized" | "non-normalized" => Ok(TraceKind::NonNormalized),
            "canonical0" | "tr0" => Ok(TraceKind::Canonical0),
            "bk01" => Ok(TraceKind::BK01),
            "bk" | "direct-bk" => Ok(TraceKind::DirectBK),
            other => Err(TraceError::UnknownKind(other.to_string())),
        }
    }
}

/// Memoized evaluator for the normalized trace `tr`.
pub struct NormalizedTrace<'a> {
    alg: &'a HeckeAlgebra,
    ind: Inductive<'a>,
    params: TraceParams,
    on_j: RwLock<HashMap<Monomial, Polynomial>>,
    on_t: RwLock<HashMap<Monomial, Polynomial>>,
}

impl<'a> NormalizedTrace<'a> {
    pub fn new(alg: &'a HeckeAlgebra, params: TraceParams) -> Self {
        assert_eq!(alg.m(), params.m(), "parameters live over a different m");
        NormalizedTrace {
            alg,
            ind: Inductive::new(alg),
            params,
            on_j: RwLock::new(HashMap::new()),
            on_t: RwLock::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &TraceParams {
        &self.params
    }

    pub fn eval(&self, x: &Element) -> Result<Polynomial, TraceError> {
        let mut out = Polynomial::zero(self.alg.m());
        for (mono, c) in x.terms() {
            out.add_assign_ref(&(c * &self.eval_monomial(mono)?));
        }
        Ok(out)
    }

    /// Value on a standard (J-basis) monomial.
    pub fn eval_monomial(&self, mono: &Monomial) -> Result<Polynomial, TraceError> {
        if let Some(v) = self.on_j.read().unwrap().get(mono) {
            return Ok(v.clone());
        }
        let as_t = self
            .ind
            .to_t_basis(&Element::monomial(self.alg.m(), mono.clone()))?;
        let mut out = Polynomial::zero(self.alg.m());
        for (t_mono, c) in as_t.terms() {
            out.add_assign_ref(&(c * &self.eval_t_monomial(t_mono)?));
        }
        self.on_j.write().unwrap().insert(mono.clone(), out.clone());
        Ok(out)
    }

    /// Value on a t-basis word `t_1^a_1 ... t_n^a_n w`.
    pub fn eval_t_monomial(&self, mono: &Monomial) -> Result<Polynomial, TraceError> {
        let m = self.alg.m();
        let n = mono.n();
        if n == 0 {
            return Ok(Polynomial::one(m));
        }
        if let Some(v) = self.on_t.read().unwrap().get(mono) {
            return Ok(v.clone());
        }
        let (head, tail) = mono.perm.last_strand_factor();
        let k = mono.exp[n - 1] as usize;
        let inner = Monomial::new(&mono.exp[..n - 1], head);
        let out = match tail {
            None => {
                let rest = self.eval_t_monomial(&inner)?;
                if k == 0 {
                    rest
                } else {
                    self.params.y(k) * &rest
                }
            }
            Some(j) => {
                // t^a' t_n^k w' s_(n-1) ... s_j = (t^a' w') s_(n-1) (t_(n-1)^k s_(n-2) ... s_j)
                let left = self.ind.from_t_monomial(&inner)?;
                let t = self.alg.tk(n - 1, n - 1)?;
                let right = self
                    .alg
                    .pow(&t, k)?
                    .right_mul_perm(&Permutation::descending(n - 2, j, n - 1))?;
                let product = self.alg.mul(&left, &right)?;
                &self.params.z * &self.eval(&product)?
            }
        };
        self.on_t.write().unwrap().insert(mono.clone(), out.clone());
        Ok(out)
    }
}

/// Memoized evaluator for the non-normalized trace `Tr`.
pub struct NonNormalizedTrace<'a> {
    alg: &'a HeckeAlgebra,
    params: TraceParams,
    overrides: HashMap<(usize, usize), Polynomial>,
    moments: RwLock<HashMap<(usize, usize), Polynomial>>,
    on_j: RwLock<HashMap<Monomial, Polynomial>>,
}

impl<'a> NonNormalizedTrace<'a> {
    pub fn new(alg: &'a HeckeAlgebra, params: TraceParams) -> Self {
        assert_eq!(alg.m(), params.m(), "parameters live over a different m");
        NonNormalizedTrace {
            alg,
            params,
            overrides: HashMap::new(),
            moments: RwLock::new(HashMap::new()),
            on_j: RwLock::new(HashMap::new()),
        }
    }

    /// Replace the recursion's value of `M(n, k)` by `value`; later moments build on it.
    pub fn with_moment(mut self, n: usize, k: usize, value: Polynomial) -> Self {
        self.overrides.insert((n, k), value);
        self.moments.write().unwrap().clear();
        self.on_j.write().unwrap().clear();
        self
    }

    pub fn params(&self) -> &TraceParams {
        &self.params
    }

    /// The moment `M(n, k)` attached to `J_n^k`, `0 <= k < m`.
    pub fn moment(&self, n: usize, k: usize) -> Result<Polynomial, TraceError> {
        let m = self.alg.m();
        if k >= m {
            return Err(TraceError::MomentExponent { k, m });
        }
        if n == 0 {
            return Err(TraceError::MomentStrand);
        }
        Ok(self.moment_unchecked(n, k))
    }

    fn moment_unchecked(&self, n: usize, k: usize) -> Polynomial {
        let m = self.alg.m();
        if let Some(v) = self.overrides.get(&(n, k)) {
            return v.clone();
        }
        if k == 0 {
            return Polynomial::zero(m);
        }
        if n == 1 {
            return self.params.y(k).clone();
        }
        if let Some(v) = self.moments.read().unwrap().get(&(n, k)) {
            return v.clone();
        }
        let z = &self.params.z;
        let prev = |j: usize| self.moment_unchecked(n - 1, j);
        let same = |j: usize| self.moment_unchecked(n, j);
        let mut out = prev(k);
        out.add_assign_ref(&(z * &prev(k - 1)));
        if k >= 2 {
            out.add_assign_ref(&(z * &prev(k - 2)).scale(&Rational::from_integer((k - 1).into())));
            for i in 0..=k - 2 {
                for j in 0..=k - 2 - i {
                    out.add_assign_ref(&(&same(k - 2 - i - j) * &prev(i + j)));
                }
                out.add_assign_ref(&(&same(k - 2 - i) * &prev(i)));
            }
        }
        self.moments.write().unwrap().insert((n, k), out.clone());
        out
    }

    pub fn eval(&self, x: &Element) -> Result<Polynomial, TraceError> {
        let mut out = Polynomial::zero(self.alg.m());
        for (mono, c) in x.terms() {
            out.add_assign_ref(&(c * &self.eval_monomial(mono)?));
        }
        Ok(out)
    }

    pub fn eval_monomial(&self, mono: &Monomial) -> Result<Polynomial, TraceError> {
        let m = self.alg.m();
        let n = mono.n();
        if n == 0 {
            return Ok(Polynomial::one(m));
        }
        if let Some(v) = self.on_j.read().unwrap().get(mono) {
            return Ok(v.clone());
        }
        let (head, tail) = mono.perm.last_strand_factor();
        let k = mono.exp[n - 1] as usize;
        let inner = Monomial::new(&mono.exp[..n - 1], head);
        let out = match tail {
            None => {
                let weight = self.moment_unchecked(n, k);
                if weight.is_zero() {
                    weight
                } else {
                    &weight * &self.eval_monomial(&inner)?
                }
            }
            Some(j) => {
                // J^a' w' J_n^k s_(n-1) β with β = s_(n-2) ... s_j, and
                // J_n^k s_(n-1) = s_(n-1) J_(n-1)^k + sum_i J_n^(k-1-i) J_(n-1)^i.
                let beta = Permutation::descending(n - 2, j, n - 1);
                let base = Element::monomial(m, inner);
                let with_power = |p: usize| -> Result<Element, TraceError> {
                    let jp = self.alg.pow(&self.alg.jm(n - 1, n - 1)?, p)?;
                    Ok(self.alg.mul(&base, &jp)?.right_mul_perm(&beta)?)
                };
                let mut out = &self.params.z * &self.eval(&with_power(k)?)?;
                for i in 0..k {
                    let weight = self.moment_unchecked(n, k - 1 - i);
                    if !weight.is_zero() {
                        out.add_assign_ref(&(&weight * &self.eval(&with_power(i)?)?));
                    }
                }
                out
            }
        };
        self.on_j.write().unwrap().insert(mono.clone(), out.clone());
        Ok(out)
    }
}

/// Coefficient of `J_1^(m-1) ... J_n^(m-1)` (identity permutation).
pub fn tau_bk(x: &Element) -> Polynomial {
    let top = (x.m() - 1) as u16;
    let exp = vec![top; x.n()];
    x.coeff(&Monomial::from_exp(&exp))
}

/// Coefficient of the identity t-word.
pub fn tr0(ind: &Inductive, x: &Element) -> Result<Polynomial, TraceError> {
    Ok(ind.to_t_basis(x)?.coeff(&Monomial::identity(x.n())))
}

/// Evaluate `x` under the given kind. `params` is used by the two symbolic kinds.
pub fn specialize_trace(
    alg: &HeckeAlgebra,
    kind: TraceKind,
    x: &Element,
    params: &TraceParams,
) -> Result<Polynomial, TraceError> {
    let m = alg.m();
    match kind {
        TraceKind::Normalized => NormalizedTrace::new(alg, params.clone()).eval(x),
        TraceKind::NonNormalized => NonNormalizedTrace::new(alg, params.clone()).eval(x),
        TraceKind::Canonical0 => NormalizedTrace::new(alg, TraceParams::canonical0(m)).eval(x),
        TraceKind::BK01 => {
            let evaluated = NonNormalizedTrace::new(alg, TraceParams::bk01(m)).eval(x)?;
            let direct = tau_bk(x);
            if evaluated != direct {
                return Err(TraceError::Disagreement {
                    evaluated: evaluated.to_string(),
                    direct: direct.to_string(),
                });
            }
            Ok(evaluated)
        }
        TraceKind::DirectBK => Ok(tau_bk(x)),
    }
}

/// An evaluator for any trace kind with cached state, for evaluating many elements.
pub enum Evaluator<'a> {
    Normalized(NormalizedTrace<'a>),
    NonNormalized(NonNormalizedTrace<'a>),
    Bk01(NonNormalizedTrace<'a>),
    Direct,
}

impl<'a> Evaluator<'a> {
    pub fn new(alg: &'a HeckeAlgebra, kind: TraceKind, params: &TraceParams) -> Self {
        let m = alg.m();
        match kind {
            TraceKind::Normalized => {
                Evaluator::Normalized(NormalizedTrace::new(alg, params.clone()))
            }
            TraceKind::NonNormalized => {
                Evaluator::NonNormalized(NonNormalizedTrace::new(alg, params.clone()))
            }
            TraceKind::Canonical0 => {
                Evaluator::Normalized(NormalizedTrace::new(alg, TraceParams::canonical0(m)))
            }
            TraceKind::BK01 => Evaluator::Bk01(NonNormalizedTrace::new(alg, TraceParams::bk01(m))),
            TraceKind::DirectBK => Evaluator::Direct,
        }
    }

    pub fn eval(&self, x: &Element) -> Result<Polynomial, TraceError> {
        match self {
            Evaluator::Normalized(t) => t.eval(x),
            Evaluator::NonNormalized(t) => t.eval(x),
            Evaluator::Bk01(t) => {
                let evaluated = t.eval(x)?;
                let direct = tau_bk(x);
                if evaluated != direct {
                    return Err(TraceError::Disagreement {
                        evaluated: evaluated.to_string(),
                        direct: direct.to_string(),
                    });
                }
                Ok(evaluated)
            }
            Evaluator::Direct => Ok(tau_bk(x)),
        }
    }
}

#[cfg(test)]
mod tests;
