//! The graded connected Hopf algebra abstraction and the Hopf-power map.
//!
//! An instance supplies the structure constants (product and coproduct of
//! basis keys); everything else — iterated (co)products, reduced coproducts,
//! the power maps `Ψ^a = m^{[a]} Δ^{[a]}`, Eulerian idempotents, and the
//! eigenbasis algorithms — is generic. Instances memoize internally, so all
//! operations here are pure and safe to call concurrently.

mod dual;
mod eigenbasis;

pub use dual::DualAlgebra;
pub use eigenbasis::{
    eigenbasis_cocommutative, eigenbasis_commutative, eigenbasis_free_basis,
    eigenbasis_free_basis_bracket, eigenbasis_shuffle_basis, eigenvalue_multiplicity,
    interleavings, top_eigenspace, vectors_as_rows, EigLabel, EigVector, Generator, LetterSpec,
};

use crate::keys::BasisKey;
use crate::lincomb::{KeyComb, KeyTensor};
use crate::rational::Rational;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("unknown algebra instance {0:?}")]
    UnknownInstance(String),
    #[error("{algebra}: plain-degree basis enumeration unsupported ({reason})")]
    PlainDegreeUnsupported { algebra: String, reason: String },
    #[error("{algebra}: multidegree not supported")]
    MultidegreeUnsupported { algebra: String },
    #[error("eigenbasis construction failed: {0}")]
    Eigenbasis(String),
    #[error("{0}")]
    Invalid(String),
}

/// Plain or multigraded degree of a chain state space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Degree {
    Plain(usize),
    Multi(Vec<usize>),
}

impl Degree {
    pub fn total(&self) -> usize {
        match self {
            Degree::Plain(n) => *n,
            Degree::Multi(nu) => nu.iter().sum(),
        }
    }
}

impl std::fmt::Display for Degree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Degree::Plain(n) => write!(f, "{n}"),
            Degree::Multi(nu) => {
                write!(f, "(")?;
                for (i, c) in nu.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A graded connected Hopf algebra with a distinguished basis.
pub trait HopfAlgebra: Send + Sync {
    fn name(&self) -> &str;
    fn is_commutative(&self) -> bool;
    fn is_cocommutative(&self) -> bool;
    fn unit(&self) -> BasisKey;
    fn degree(&self, x: &BasisKey) -> usize;

    /// Ordered basis of the degree-n component.
    fn basis(&self, n: usize) -> Result<Vec<BasisKey>, HopfError>;

    /// Product of two basis elements, expanded in the basis.
    fn product(&self, x: &BasisKey, y: &BasisKey) -> KeyComb;

    /// Coproduct of a basis element (arity-2 tensor).
    fn coproduct(&self, x: &BasisKey) -> KeyTensor;

    /// Multidegree, for multigraded algebras.
    fn multidegree(&self, _x: &BasisKey) -> Option<Vec<usize>> {
        None
    }

    /// Ordered basis of a multidegree component.
    fn basis_multi(&self, _nu: &[usize]) -> Result<Vec<BasisKey>, HopfError> {
        Err(HopfError::MultidegreeUnsupported { algebra: self.name().to_string() })
    }

    /// For free-commutative bases: the factorization of a basis element into
    /// generators. `None` when the basis carries no such structure.
    fn factor_generators(&self, _x: &BasisKey) -> Option<Vec<BasisKey>> {
        None
    }

    /// Length of a basis element (number of generator factors), when defined.
    fn length(&self, x: &BasisKey) -> Option<usize> {
        self.factor_generators(x).map(|f| f.len())
    }

    fn basis_of(&self, degree: &Degree) -> Result<Vec<BasisKey>, HopfError> {
        match degree {
            Degree::Plain(n) => self.basis(*n),
            Degree::Multi(nu) => self.basis_multi(nu),
        }
    }
}

/// Sum of two multidegrees (componentwise with padding, trailing zeros kept
/// trimmed).
pub fn multidegree_add(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v = vec![0usize; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        v[i] += x;
    }
    for (i, &x) in b.iter().enumerate() {
        v[i] += x;
    }
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Bilinear extension of the product to linear combinations.
pub fn product_combs(alg: &dyn HopfAlgebra, a: &KeyComb, b: &KeyComb) -> KeyComb {
    let mut out = KeyComb::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            let prod = alg.product(x, y);
            for (z, cz) in prod.iter() {
                out.add_term(z.clone(), &(cx * cy) * cz);
            }
        }
    }
    out
}

/// Left-nested iterated product of basis keys: `m^{[a]}`.
pub fn iterated_product(alg: &dyn HopfAlgebra, keys: &[BasisKey]) -> KeyComb {
    assert!(!keys.is_empty(), "iterated product of nothing");
    let mut acc = KeyComb::singleton(keys[0].clone());
    for k in &keys[1..] {
        acc = product_combs(alg, &acc, &KeyComb::singleton(k.clone()));
    }
    acc
}

/// Iterated product of linear combinations.
pub fn iterated_product_combs(alg: &dyn HopfAlgebra, factors: &[KeyComb]) -> KeyComb {
    assert!(!factors.is_empty(), "iterated product of nothing");
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = product_combs(alg, &acc, f);
    }
    acc
}

/// Collapse an arity-a tensor with `m^{[a]}`.
pub fn multiply_out(alg: &dyn HopfAlgebra, t: &KeyTensor) -> KeyComb {
    let mut out = KeyComb::zero();
    for (keys, c) in t.iter() {
        let prod = iterated_product(alg, keys);
        for (z, cz) in prod.iter() {
            out.add_term(z.clone(), c * cz);
        }
    }
    out
}

/// `Δ^{[a]}(x)`: the arity-a iterated coproduct, expanding the last factor
/// at each step; `Δ^{[1]}` is the identity.
pub fn iterated_coproduct(alg: &dyn HopfAlgebra, a: usize, x: &BasisKey) -> KeyTensor {
    assert!(a >= 1, "coproduct arity must be >= 1");
    let mut acc = KeyTensor::singleton(vec![x.clone()]);
    for step in 2..=a {
        let mut next = KeyTensor::zero(step);
        for (keys, c) in acc.iter() {
            let last = keys.last().unwrap();
            let delta = alg.coproduct(last);
            for (pair, cd) in delta.iter() {
                let mut t = keys[..keys.len() - 1].to_vec();
                t.extend(pair.iter().cloned());
                next.add_term(t, c * cd);
            }
        }
        acc = next;
    }
    acc
}

/// Iterated coproduct of a linear combination.
pub fn iterated_coproduct_comb(alg: &dyn HopfAlgebra, a: usize, x: &KeyComb) -> KeyTensor {
    let mut acc = KeyTensor::zero(a);
    for (k, c) in x.iter() {
        acc.add_assign(&iterated_coproduct(alg, a, k).scale(c));
    }
    acc
}

/// The reduced coproduct `Δ̄(x) = Δ(x) − 1⊗x − x⊗1`: exactly the terms with
/// both tensor factors of positive degree.
pub fn reduced_coproduct(alg: &dyn HopfAlgebra, x: &BasisKey) -> KeyTensor {
    let mut out = KeyTensor::zero(2);
    for (pair, c) in alg.coproduct(x).iter() {
        if alg.degree(&pair[0]) > 0 && alg.degree(&pair[1]) > 0 {
            out.add_term(pair.clone(), c.clone());
        }
    }
    out
}

/// `Δ̄^{[r]}` applied to a linear combination: keeps the terms of `Δ^{[r]}`
/// with all r factors of strictly positive degree. Vanishes when r exceeds
/// the degree.
pub fn reduced_coproduct_iter(alg: &dyn HopfAlgebra, r: usize, x: &KeyComb) -> KeyTensor {
    assert!(r >= 1, "reduced coproduct arity must be >= 1");
    let mut acc = KeyTensor::zero(1);
    for (k, c) in x.iter() {
        if alg.degree(k) > 0 {
            acc.add_term(vec![k.clone()], c.clone());
        }
    }
    for step in 2..=r {
        let mut next = KeyTensor::zero(step);
        for (keys, c) in acc.iter() {
            let last = keys.last().unwrap();
            for (pair, cd) in reduced_coproduct(alg, last).iter() {
                let mut t = keys[..keys.len() - 1].to_vec();
                t.extend(pair.iter().cloned());
                next.add_term(t, c * cd);
            }
        }
        acc = next;
    }
    acc
}

/// The a-th Hopf-power `Ψ^a = m^{[a]} Δ^{[a]}`, extended linearly.
pub fn hopf_power(alg: &dyn HopfAlgebra, a: usize, x: &KeyComb) -> KeyComb {
    assert!(a >= 1, "Hopf power needs a >= 1");
    if a == 1 {
        return x.clone();
    }
    let mut out = KeyComb::zero();
    for (k, c) in x.iter() {
        let delta = iterated_coproduct(alg, a, k);
        let collapsed = multiply_out(alg, &delta);
        out.add_assign(&collapsed.scale(c));
    }
    out
}

/// The (first) Eulerian idempotent
/// `e(x) = Σ_{r≥1} ((−1)^{r−1}/r) m^{[r]} Δ̄^{[r]}(x)`,
/// truncated at `r = deg x` by conilpotence.
pub fn eulerian_idempotent(alg: &dyn HopfAlgebra, x: &KeyComb) -> KeyComb {
    let max_deg = x.keys().map(|k| alg.degree(k)).max().unwrap_or(0);
    let mut out = KeyComb::zero();
    for r in 1..=max_deg.max(1) {
        let reduced = reduced_coproduct_iter(alg, r, x);
        if reduced.is_zero() {
            continue;
        }
        let collapsed = multiply_out(alg, &reduced);
        let sign = if r % 2 == 1 { Rational::one() } else { -Rational::one() };
        let coeff = &sign * &Rational::from_int(r as i64).recip();
        out.add_assign(&collapsed.scale(&coeff));
    }
    out
}

/// Higher Eulerian idempotents `e_i = (1/i!) m^{[i]} (e⊗…⊗e) Δ^{[i]}`;
/// `e_0` projects to degree 0.
pub fn higher_eulerian(alg: &dyn HopfAlgebra, i: usize, x: &KeyComb) -> KeyComb {
    if i == 0 {
        let mut out = KeyComb::zero();
        for (k, c) in x.iter() {
            if alg.degree(k) == 0 {
                out.add_term(k.clone(), c.clone());
            }
        }
        return out;
    }
    if i == 1 {
        return eulerian_idempotent(alg, x);
    }
    let mut out = KeyComb::zero();
    for (k, c) in x.iter() {
        let delta = iterated_coproduct(alg, i, k);
        for (keys, cd) in delta.iter() {
            let factors: Vec<KeyComb> = keys
                .iter()
                .map(|t| eulerian_idempotent(alg, &KeyComb::singleton(t.clone())))
                .collect();
            if factors.iter().any(|f| f.is_zero()) {
                continue;
            }
            let prod = iterated_product_combs(alg, &factors);
            out.add_assign(&prod.scale(&(c * cd)));
        }
    }
    out.scale(&Rational::from_bigint(crate::rational::factorial(i)).recip())
}

/// Componentwise product of two arity-2 tensors, `(a⊗b)(c⊗d) = ac⊗bd`;
/// used by the compatibility-axiom checks.
pub fn tensor_product2(alg: &dyn HopfAlgebra, s: &KeyTensor, t: &KeyTensor) -> KeyTensor {
    assert_eq!(s.arity(), 2);
    assert_eq!(t.arity(), 2);
    let mut out = KeyTensor::zero(2);
    for (ks, cs) in s.iter() {
        for (kt, ct) in t.iter() {
            let left = alg.product(&ks[0], &kt[0]);
            let right = alg.product(&ks[1], &kt[1]);
            let c = cs * ct;
            for (l, cl) in left.iter() {
                for (r, cr) in right.iter() {
                    out.add_term(vec![l.clone(), r.clone()], &(&c * cl) * cr);
                }
            }
        }
    }
    out
}
