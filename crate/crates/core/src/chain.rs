//! Hopf-power Markov chains: the Doob transform of `a^{-n} Ψ^a`.
//!
//! Given a state space basis (non-negative structure constants, no primitive
//! basis elements of degree > 1), the rescaling function
//! `η(x) = Σ coefficients of Δ̄^{[n]}(x) over degree-one tensors` is a
//! strictly positive eigenvector of the dual power map, and
//! `K̂(x,y) = a^{-n} · (coeff of y in Ψ^a(x)) · η(y)/η(x)` is a stochastic
//! matrix. Left eigenfunctions of `K̂` correspond to eigenvectors of `Ψ^a`
//! on the algebra, right eigenfunctions to eigenvectors on the dual.

use crate::hopf::{
    hopf_power, iterated_coproduct, iterated_product, reduced_coproduct_iter, Degree, EigVector,
    HopfAlgebra, HopfError,
};
use crate::keys::BasisKey;
use crate::lincomb::{KeyComb, KeyTensor};
use crate::matrix::ExactMatrix;
use crate::rational::{binomial, factorial, multinomial, Rational};
use crate::words::multiset_permutations;
use num::BigInt;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ChainError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("invalid state space basis for {algebra}: {detail}")]
    InvalidStateBasis { algebra: String, detail: String },
    #[error("power a must be at least 2, got {0}")]
    PowerTooSmall(usize),
    #[error("{0}")]
    Unsupported(String),
    #[error("transition matrix defect: {0}")]
    MatrixDefect(String),
}

/// Outcome of checking the state-space-basis conditions at a degree
/// (non-negative structure constants and no primitive elements of degree
/// greater than one, checked at the degree and everything below it).
#[derive(Debug, Clone)]
pub struct BasisValidation {
    pub algebra: String,
    pub degree: Degree,
    pub negative_product_constants: Vec<String>,
    pub negative_coproduct_constants: Vec<String>,
    pub primitive_elements: Vec<BasisKey>,
}

impl BasisValidation {
    pub fn is_valid(&self) -> bool {
        self.negative_product_constants.is_empty()
            && self.negative_coproduct_constants.is_empty()
            && self.primitive_elements.is_empty()
    }

    pub fn diagnostic(&self) -> String {
        if self.is_valid() {
            return "valid state space basis".into();
        }
        let mut parts = Vec::new();
        if !self.primitive_elements.is_empty() {
            let list: Vec<String> =
                self.primitive_elements.iter().map(|k| k.to_string()).collect();
            parts.push(format!(
                "primitive basis elements of degree > 1: {} (rescaling cannot make rows sum to 1)",
                list.join(", ")
            ));
        }
        if !self.negative_product_constants.is_empty() {
            parts.push(format!(
                "negative product structure constants: {}",
                self.negative_product_constants.join("; ")
            ));
        }
        if !self.negative_coproduct_constants.is_empty() {
            parts.push(format!(
                "negative coproduct structure constants: {}",
                self.negative_coproduct_constants.join("; ")
            ));
        }
        parts.join("; ")
    }
}

fn degrees_below(alg: &dyn HopfAlgebra, degree: &Degree) -> Result<Vec<Vec<BasisKey>>, HopfError> {
    match degree {
        Degree::Plain(n) => (1..=*n).map(|d| alg.basis(d)).collect(),
        Degree::Multi(nu) => {
            // All multidegrees componentwise below nu.
            let mut out: Vec<Vec<usize>> = vec![Vec::new()];
            for &c in nu {
                let mut next = Vec::new();
                for v in &out {
                    for i in 0..=c {
                        let mut v2 = v.clone();
                        v2.push(i);
                        next.push(v2);
                    }
                }
                out = next;
            }
            let mut result = Vec::new();
            for mut m in out {
                while m.last() == Some(&0) {
                    m.pop();
                }
                if m.iter().sum::<usize>() == 0 {
                    continue;
                }
                result.push(alg.basis_multi(&m)?);
            }
            Ok(result)
        }
    }
}

/// Check the state-space-basis conditions at `degree` and below.
pub fn validate_state_space_basis(
    alg: &dyn HopfAlgebra,
    degree: &Degree,
) -> Result<BasisValidation, HopfError> {
    let mut report = BasisValidation {
        algebra: alg.name().to_string(),
        degree: degree.clone(),
        negative_product_constants: Vec::new(),
        negative_coproduct_constants: Vec::new(),
        primitive_elements: Vec::new(),
    };
    let components = degrees_below(alg, degree)?;
    let all_keys: Vec<BasisKey> = components.iter().flatten().cloned().collect();
    for x in &all_keys {
        for (pair, c) in alg.coproduct(x).iter() {
            if c.is_negative() {
                report
                    .negative_coproduct_constants
                    .push(format!("coeff of {}⊗{} in Δ({x}) is {c}", pair[0], pair[1]));
            }
        }
        if alg.degree(x) > 1
            && reduced_coproduct_iter(alg, 2, &KeyComb::singleton(x.clone())).is_zero()
        {
            report.primitive_elements.push(x.clone());
        }
    }
    let total = degree.total();
    for w in &all_keys {
        for z in &all_keys {
            if alg.degree(w) + alg.degree(z) > total {
                continue;
            }
            for (y, c) in alg.product(w, z).iter() {
                if c.is_negative() {
                    report
                        .negative_product_constants
                        .push(format!("coeff of {y} in {w}·{z} is {c}"));
                }
            }
        }
    }
    Ok(report)
}

/// A Hopf-power Markov chain: algebra, power, and the degree-n state space
/// with its rescaling function.
pub struct Chain {
    pub algebra: Arc<dyn HopfAlgebra>,
    pub a: usize,
    pub degree: Degree,
    pub states: Vec<BasisKey>,
    etas: Vec<Rational>,
    matrix_memo: Mutex<Option<ExactMatrix>>,
}

/// `η(x)`: the coefficient sum of `Δ̄^{[deg x]}(x)` (the number of ways to
/// break `x` into degree-one pieces, with multiplicity).
pub fn eta(alg: &dyn HopfAlgebra, x: &BasisKey) -> Rational {
    let n = alg.degree(x);
    if n == 0 {
        return Rational::one();
    }
    reduced_coproduct_iter(alg, n, &KeyComb::singleton(x.clone())).coeff_sum()
}

impl Chain {
    pub fn new(
        algebra: Arc<dyn HopfAlgebra>,
        a: usize,
        degree: Degree,
    ) -> Result<Chain, ChainError> {
        if a < 2 {
            return Err(ChainError::PowerTooSmall(a));
        }
        let states = algebra.basis_of(&degree)?;
        let mut etas = Vec::with_capacity(states.len());
        for x in &states {
            let e = eta(algebra.as_ref(), x);
            if e.is_zero() || e.is_negative() {
                let validation = validate_state_space_basis(algebra.as_ref(), &degree)?;
                return Err(ChainError::InvalidStateBasis {
                    algebra: algebra.name().to_string(),
                    detail: format!("η({x}) = {e}; {}", validation.diagnostic()),
                });
            }
            etas.push(e);
        }
        Ok(Chain { algebra, a, degree, states, etas, matrix_memo: Mutex::new(None) })
    }

    pub fn n(&self) -> usize {
        self.degree.total()
    }

    pub fn state_index(&self, x: &BasisKey) -> Option<usize> {
        self.states.iter().position(|k| k == x)
    }

    pub fn eta_of(&self, x: &BasisKey) -> Rational {
        self.etas[self.state_index(x).expect("state not in chain")].clone()
    }

    pub fn etas(&self) -> &[Rational] {
        &self.etas
    }

    /// The transition matrix `K̂(x,y) = a^{-n}·coeff_y(Ψ^a(x))·η(y)/η(x)`.
    /// Aborts on a negative entry or a row that does not sum to exactly 1.
    pub fn transition_matrix(&self) -> Result<ExactMatrix, ChainError> {
        if let Some(hit) = self.matrix_memo.lock().unwrap().as_ref() {
            return Ok(hit.clone());
        }
        let n = self.n();
        let scale = Rational::from_int(self.a as i64).pow(n as i64).recip();
        let mut m = ExactMatrix::zero(self.states.clone(), self.states.clone());
        let index: BTreeMap<&BasisKey, usize> = self.states.iter().zip(0..).collect();
        for (i, x) in self.states.iter().enumerate() {
            let psi = hopf_power(self.algebra.as_ref(), self.a, &KeyComb::singleton(x.clone()));
            let mut row_sum = Rational::zero();
            for (y, c) in psi.iter() {
                let Some(&j) = index.get(y) else {
                    return Err(ChainError::MatrixDefect(format!(
                        "Ψ^a({x}) leaves the state space at {y}"
                    )));
                };
                let entry = &(&scale * c) * &(&self.etas[j] / &self.etas[i]);
                if entry.is_negative() {
                    return Err(ChainError::MatrixDefect(format!(
                        "negative entry K({x},{y}) = {entry}"
                    )));
                }
                row_sum += &entry;
                m.set(i, j, entry);
            }
            if !row_sum.is_one() {
                return Err(ChainError::MatrixDefect(format!("row {x} sums to {row_sum}")));
            }
        }
        *self.matrix_memo.lock().unwrap() = Some(m.clone());
        Ok(m)
    }

    /// The degree-one letters that the stationary distributions are indexed
    /// by (for a multidegree, the multiset is fixed by the degree).
    fn degree_one_basis(&self) -> Result<Vec<BasisKey>, ChainError> {
        match &self.degree {
            Degree::Plain(_) => Ok(self.algebra.basis(1)?),
            Degree::Multi(nu) => {
                let mut b = Vec::new();
                for i in 0..nu.len() {
                    let mut unit = vec![0usize; i + 1];
                    unit[i] = 1;
                    b.extend(self.algebra.basis_multi(&unit)?);
                }
                Ok(b)
            }
        }
    }
}

/// One stationary distribution per multiset of degree-one elements:
/// `π(x) = η(x)/n!² · Σ_σ ξ^x_{c_σ(1),…,c_σ(n)}`.
pub struct StationaryDistribution {
    /// The multiset of degree-one elements indexing this distribution.
    pub label: Vec<BasisKey>,
    /// Probabilities aligned with the chain's state list.
    pub probabilities: Vec<Rational>,
    /// Whether this is the unique stationary distribution of the chain.
    pub unique: bool,
}

pub fn stationary_distributions(chain: &Chain) -> Result<Vec<StationaryDistribution>, ChainError> {
    let alg = chain.algebra.as_ref();
    let n = chain.n();
    let multisets: Vec<Vec<BasisKey>> = match &chain.degree {
        Degree::Plain(_) => {
            let b1 = chain.degree_one_basis()?;
            // All multisets of size n from b1.
            fn rec(
                b1: &[BasisKey],
                start: usize,
                left: usize,
                acc: &mut Vec<BasisKey>,
                out: &mut Vec<Vec<BasisKey>>,
            ) {
                if left == 0 {
                    out.push(acc.clone());
                    return;
                }
                for i in start..b1.len() {
                    acc.push(b1[i].clone());
                    rec(b1, i, left - 1, acc, out);
                    acc.pop();
                }
            }
            let mut out = Vec::new();
            rec(&b1, 0, n, &mut Vec::new(), &mut out);
            out
        }
        Degree::Multi(nu) => {
            let mut m = Vec::new();
            for (i, &count) in nu.iter().enumerate() {
                if count == 0 {
                    continue;
                }
                let mut unit = vec![0usize; i + 1];
                unit[i] = 1;
                let letters = alg.basis_multi(&unit)?;
                for _ in 0..count {
                    m.push(letters[0].clone());
                }
            }
            vec![m]
        }
    };
    let unique = multisets.len() == 1;
    let nfact2 = Rational::from_bigint(factorial(n) * factorial(n));
    let mut out = Vec::new();
    for multiset in multisets {
        // Σ_σ ξ^x over all n! orderings = (copies per distinct arrangement)
        // × Σ over distinct arrangements.
        let arrangements = multiset_permutations(&multiset);
        let copies = factorial(n) / BigInt::from(arrangements.len());
        let mut totals: HashMap<BasisKey, Rational> = HashMap::new();
        for arr in &arrangements {
            let prod = iterated_product(alg, arr);
            for (x, c) in prod.iter() {
                *totals.entry(x.clone()).or_insert_with(Rational::zero) += c.clone();
            }
        }
        let copies = Rational::from_bigint(copies);
        let probabilities: Vec<Rational> = chain
            .states
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let xi = totals.get(x).cloned().unwrap_or_else(Rational::zero);
                &(&chain.etas()[i] * &(&copies * &xi)) / &nfact2
            })
            .collect();
        // Exactness checks: a probability vector fixed by the chain.
        let m = chain.transition_matrix()?;
        let again = m.transpose().apply(&probabilities).expect("dimension");
        if again != probabilities {
            return Err(ChainError::MatrixDefect("πK != π".into()));
        }
        let total: Rational = probabilities.iter().cloned().sum();
        if !total.is_one() {
            return Err(ChainError::MatrixDefect(format!("π sums to {total}")));
        }
        out.push(StationaryDistribution { label: multiset, probabilities, unique });
    }
    Ok(out)
}

/// Which side a chain eigenfunction acts on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// An eigenfunction of the chain with eigenvalue `a^{exponent−n}`.
#[derive(Clone, Debug)]
pub struct EigFunction {
    pub side: Side,
    pub exponent: usize,
    pub values: BTreeMap<BasisKey, Rational>,
    pub label: String,
}

impl EigFunction {
    pub fn value(&self, x: &BasisKey) -> Rational {
        self.values.get(x).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exact check of the eigenvalue equation against the transition matrix.
    pub fn satisfies(&self, chain: &Chain) -> Result<bool, ChainError> {
        let m = chain.transition_matrix()?;
        let n = chain.n();
        let eigenvalue = Rational::from_int(chain.a as i64).pow(self.exponent as i64 - n as i64);
        let vec: Vec<Rational> = chain.states.iter().map(|x| self.value(x)).collect();
        let image = match self.side {
            Side::Right => m.apply(&vec).expect("dimension"),
            Side::Left => m.transpose().apply(&vec).expect("dimension"),
        };
        let scaled: Vec<Rational> = vec.iter().map(|v| &eigenvalue * v).collect();
        Ok(image == scaled)
    }
}

/// Convert `Ψ^a` eigenvectors to chain eigenfunctions. Left: the vector
/// lives in the algebra and `g(x) = η(x)·(coeff of x)`. Right: the vector
/// lives in the dual (same keys, dual reading) and `f(x) = (coeff of x*)/η(x)`.
pub fn eigenfunctions_from_eigvectors(
    chain: &Chain,
    vectors: &[EigVector],
    side: Side,
) -> Vec<EigFunction> {
    vectors
        .iter()
        .map(|v| {
            let mut values = BTreeMap::new();
            for (i, x) in chain.states.iter().enumerate() {
                let c = v.vector.coeff(x);
                if c.is_zero() {
                    continue;
                }
                let value = match side {
                    Side::Left => &chain.etas()[i] * &c,
                    Side::Right => &c / &chain.etas()[i],
                };
                values.insert(x.clone(), value);
            }
            EigFunction { side, exponent: v.exponent, values, label: v.label.to_string() }
        })
        .collect()
}

/// `Σ_x f(x) g(x)` over the common state space.
pub fn duality_pairing(f: &EigFunction, g: &EigFunction, states: &[BasisKey]) -> Rational {
    states.iter().map(|x| &f.value(x) * &g.value(x)).sum()
}

/// Right eigenfunctions attached to the states of a free-commutative basis:
/// `f_y(x) = (1/(l! η(x))) Σ over distinct arrangements (c_1,…,c_l) of the
/// generator factors of y of η_x^{c_1,…,c_l}`, with eigenvalue `a^{l(y)−n}`.
/// These are dual to the left eigenfunctions from the commutative algorithm.
pub fn right_eigenfunctions_free_commutative(
    chain: &Chain,
) -> Result<Vec<EigFunction>, ChainError> {
    let alg = chain.algebra.as_ref();
    let mut out = Vec::new();
    for y in &chain.states {
        let factors = alg.factor_generators(y).ok_or_else(|| {
            ChainError::Unsupported(format!("{} has no free-commutative structure", alg.name()))
        })?;
        let l = factors.len();
        let lfact = Rational::from_bigint(factorial(l));
        let mut values = BTreeMap::new();
        for (i, x) in chain.states.iter().enumerate() {
            let delta = iterated_coproduct(alg, l, x);
            let mut total = Rational::zero();
            for arrangement in multiset_permutations(&factors) {
                total += delta.coeff(&arrangement);
            }
            if total.is_zero() {
                continue;
            }
            values.insert(x.clone(), &total / &(&lfact * &chain.etas()[i]));
        }
        out.push(EigFunction { side: Side::Right, exponent: l, values, label: format!("f{y}") });
    }
    Ok(out)
}

/// Report of a lumping (projection) check.
#[derive(Debug)]
pub struct LumpingReport {
    /// Dynkin criterion: merged-column sums depend only on the image state,
    /// and agree with the target chain's rows.
    pub dynkin_holds: bool,
    /// Largest absolute violation found (exactly 0 when the check passes).
    pub max_violation: Rational,
}

/// Check that `theta` projects `source` onto `target` as Markov chains:
/// `Σ_{y: θ(y)=ȳ} K(x,y)` must equal `K̄(θ(x),ȳ)` for every x, ȳ. This is
/// simultaneously the Dynkin criterion and the intertwining
/// `K̂_source·R = R·K̂_target` for the 0/1 matrix R of θ.
pub fn check_lumping(
    theta: &dyn Fn(&BasisKey) -> BasisKey,
    source: &Chain,
    target: &Chain,
) -> Result<LumpingReport, ChainError> {
    let images: Vec<BasisKey> = source.states.iter().map(theta).collect();
    for img in &images {
        if target.state_index(img).is_none() {
            return Err(ChainError::Unsupported(format!("θ image {img} is not a target state")));
        }
    }
    for t in &target.states {
        if !images.contains(t) {
            return Err(ChainError::Unsupported(format!("θ misses the target state {t}")));
        }
    }
    let ks = source.transition_matrix()?;
    let kt = target.transition_matrix()?;
    let mut max_violation = Rational::zero();
    let mut dynkin_holds = true;
    for (i, _) in source.states.iter().enumerate() {
        let ti = target.state_index(&images[i]).unwrap();
        for (tj, ybar) in target.states.iter().enumerate() {
            let mut sum = Rational::zero();
            for (j, _) in source.states.iter().enumerate() {
                if &images[j] == ybar {
                    sum += ks.get(i, j).clone();
                }
            }
            let expected = kt.get(ti, tj).clone();
            if sum != expected {
                dynkin_holds = false;
                let viol = (&sum - &expected).abs();
                if viol > max_violation {
                    max_violation = viol;
                }
            }
        }
    }
    Ok(LumpingReport { dynkin_holds, max_violation })
}

/// Time-reversal `K*(x,y) = π(y) K(y,x) / π(x)`; requires the unique
/// stationary distribution to be everywhere positive.
pub fn time_reversal(chain: &Chain) -> Result<ExactMatrix, ChainError> {
    let pis = stationary_distributions(chain)?;
    let pi = pis
        .iter()
        .find(|p| p.unique)
        .ok_or_else(|| ChainError::Unsupported("no unique stationary distribution".into()))?;
    if pi.probabilities.iter().any(|p| p.is_zero()) {
        return Err(ChainError::Unsupported(
            "stationary distribution has a zero entry; time-reversal undefined".into(),
        ));
    }
    let k = chain.transition_matrix()?;
    let mut out = ExactMatrix::zero(chain.states.clone(), chain.states.clone());
    for i in 0..chain.states.len() {
        for j in 0..chain.states.len() {
            let v = &(&pi.probabilities[j] * k.get(j, i)) / &pi.probabilities[i];
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// Detailed balance `π(x)K(x,y) = π(y)K(y,x)`, checked exactly.
pub fn is_reversible(chain: &Chain) -> Result<bool, ChainError> {
    let pis = stationary_distributions(chain)?;
    let Some(pi) = pis.iter().find(|p| p.unique) else {
        return Ok(false);
    };
    let k = chain.transition_matrix()?;
    for i in 0..chain.states.len() {
        for j in 0..chain.states.len() {
            if &pi.probabilities[i] * k.get(i, j) != &pi.probabilities[j] * k.get(j, i) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `K̂^m` through the spectral decomposition `Σ_i β_i^m f_i(x) g_i(y)`;
/// the supplied bases must be biorthogonal (`⟨f_i, g_j⟩ = δ_ij`), which is
/// verified exactly first.
pub fn matrix_power_via_spectrum(
    chain: &Chain,
    m: usize,
    rights: &[EigFunction],
    lefts: &[EigFunction],
) -> Result<ExactMatrix, ChainError> {
    let dim = chain.states.len();
    if rights.len() != dim || lefts.len() != dim {
        return Err(ChainError::Unsupported("need full dual eigenbases".into()));
    }
    for (i, f) in rights.iter().enumerate() {
        for (j, g) in lefts.iter().enumerate() {
            let pair = duality_pairing(f, g, &chain.states);
            let expected = if i == j { Rational::one() } else { Rational::zero() };
            if pair != expected {
                return Err(ChainError::Unsupported(format!(
                    "bases not dual: <f_{i}, g_{j}> = {pair}"
                )));
            }
        }
    }
    let n = chain.n();
    let a = Rational::from_int(chain.a as i64);
    let mut out = ExactMatrix::zero(chain.states.clone(), chain.states.clone());
    for (idx, f) in rights.iter().enumerate() {
        let g = &lefts[idx];
        if f.exponent != g.exponent {
            return Err(ChainError::Unsupported(
                "paired eigenfunctions disagree on exponent".into(),
            ));
        }
        let beta_m = a.pow((f.exponent as i64 - n as i64) * m as i64);
        for (i, x) in chain.states.iter().enumerate() {
            let fx = f.value(x);
            if fx.is_zero() {
                continue;
            }
            for (j, y) in chain.states.iter().enumerate() {
                let gy = g.value(y);
                if gy.is_zero() {
                    continue;
                }
                let v = out.get(i, j) + &(&(&beta_m * &fx) * &gy);
                out.set(i, j, v);
            }
        }
    }
    Ok(out)
}

/// Probability that a chain on a free-commutative basis is absorbed in one
/// step from `x0` (reaches a state of full length). Computed directly from
/// the transition row and cross-checked against the quasisymmetric
/// evaluation `[n!/η(x₀) · χ^ζ(x₀)]_{1/a}` built from reduced coproducts.
pub fn absorption_probability(chain: &Chain, x0: &BasisKey) -> Result<Rational, ChainError> {
    let alg = chain.algebra.as_ref();
    let n = chain.n();
    if alg.length(x0).is_none() {
        return Err(ChainError::Unsupported(format!(
            "{} is not a free-commutative basis",
            alg.name()
        )));
    }
    let i = chain
        .state_index(x0)
        .ok_or_else(|| ChainError::Unsupported(format!("{x0} is not a state")))?;
    let k = chain.transition_matrix()?;
    let mut direct = Rational::zero();
    for (j, y) in chain.states.iter().enumerate() {
        if alg.length(y) == Some(n) {
            direct += k.get(i, j).clone();
        }
    }
    // Quasisymmetric cross-check: Σ_l C(a,l)·a^{-n}·(mass of Δ̄^{[l]}(x₀)
    // supported on absorbing tensors), scaled by n!/η(x₀).
    let is_absorbing =
        |key: &BasisKey| alg.length(key).map(|l| l == alg.degree(key)).unwrap_or(false);
    let mut qsym_value = Rational::zero();
    for l in 1..=n {
        let choose = binomial(chain.a, l);
        if choose == BigInt::from(0) {
            continue;
        }
        let reduced = reduced_coproduct_iter(alg, l, &KeyComb::singleton(x0.clone()));
        let mut mass = Rational::zero();
        for (keys, c) in reduced.iter() {
            if keys.iter().all(|key| is_absorbing(key)) {
                mass += c.clone();
            }
        }
        qsym_value += &Rational::from_bigint(choose) * &mass;
    }
    let a_pow = Rational::from_int(chain.a as i64).pow(n as i64).recip();
    let scale = &Rational::from_bigint(factorial(n)) / &chain.etas()[i];
    let via_qsym = &(&qsym_value * &a_pow) * &scale;
    if via_qsym != direct {
        return Err(ChainError::MatrixDefect(format!(
            "absorption mismatch at {x0}: direct {direct}, quasisymmetric {via_qsym}"
        )));
    }
    Ok(direct)
}

/// The dual eigenvector identity `Σ_y coeff_y(Ψ^a(x))·η(y) = a^n η(x)`,
/// checked exactly for every state; used by the invariant batteries.
pub fn eta_is_dual_eigenvector(chain: &Chain) -> Result<bool, ChainError> {
    let alg = chain.algebra.as_ref();
    let n = chain.n();
    let a_pow = Rational::from_int(chain.a as i64).pow(n as i64);
    let index: BTreeMap<&BasisKey, usize> = chain.states.iter().zip(0..).collect();
    for (i, x) in chain.states.iter().enumerate() {
        let psi = hopf_power(alg, chain.a, &KeyComb::singleton(x.clone()));
        let mut total = Rational::zero();
        for (y, c) in psi.iter() {
            let Some(&j) = index.get(y) else {
                return Ok(false);
            };
            total += c * &chain.etas()[j];
        }
        if total != &a_pow * &chain.etas()[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// η of a product: `η(x₁x₂) = C(deg x₁ + deg x₂, deg x₁)·η(x₁)·η(x₂)` for a
/// single-term product (free-commutative bases).
pub fn eta_product_identity(alg: &dyn HopfAlgebra, x1: &BasisKey, x2: &BasisKey) -> bool {
    let prod = alg.product(x1, x2);
    let lhs: Rational = prod.iter().map(|(y, c)| c * &eta(alg, y)).sum();
    let d1 = alg.degree(x1);
    let d2 = alg.degree(x2);
    let rhs = &(&Rational::from_bigint(multinomial(&[d1, d2])) * &eta(alg, x1)) * &eta(alg, x2);
    lhs == rhs
}

/// The exact transition row out of a given state.
pub fn transition_row(
    chain: &Chain,
    x: &BasisKey,
) -> Result<Vec<(BasisKey, Rational)>, ChainError> {
    let i = chain
        .state_index(x)
        .ok_or_else(|| ChainError::Unsupported(format!("{x} is not a state")))?;
    let k = chain.transition_matrix()?;
    Ok(chain
        .states
        .iter()
        .enumerate()
        .map(|(j, y)| (y.clone(), k.get(i, j).clone()))
        .collect())
}

/// The full iterated coproduct of a state (helper for oracles in tests).
pub fn state_coproduct(chain: &Chain, x: &BasisKey, arity: usize) -> KeyTensor {
    iterated_coproduct(chain.algebra.as_ref(), arity, x)
}
