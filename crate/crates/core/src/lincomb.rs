//! Sparse linear combinations and tensors over an ordered key type.
//!
//! `LinComb` is the universal value of every Hopf computation here: a finite
//! formal sum `Σ cᵢ·kᵢ` with exact rational coefficients. Zero coefficients
//! are pruned on every operation, so equality is plain map equality, and the
//! `BTreeMap` storage gives deterministic iteration order.

use crate::keys::BasisKey;
use crate::rational::Rational;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord + Clone> {
    terms: BTreeMap<K, Rational>,
}

pub type KeyComb = LinComb<BasisKey>;
pub type KeyTensor = TensorComb<BasisKey>;

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn singleton(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `α·x + y` with zero terms pruned.
    pub fn axpy(alpha: &Rational, x: &Self, y: &Self) -> Self {
        let mut out = y.clone();
        for (k, c) in x.iter() {
            out.add_term(k.clone(), alpha * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::axpy(&Rational::one(), other, self)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::axpy(&-Rational::one(), other, self)
    }

    pub fn scale(&self, alpha: &Rational) -> Self {
        if alpha.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (k, c) in self.iter() {
            out.add_term(k.clone(), alpha * c);
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// True when `other == α·self` for some nonzero scalar α (or both zero).
    pub fn scalar_multiple_of(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.len() != other.len() {
            return false;
        }
        let (k0, c0) = self.iter().next().unwrap();
        let d0 = other.coeff(k0);
        if d0.is_zero() {
            return false;
        }
        let alpha = &d0 / c0;
        self.iter().all(|(k, c)| other.coeff(k) == &alpha * c)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.iter() {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{k}")?;
        }
        Ok(())
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A linear combination of key tuples, all of the same length (`arity`).
/// Houses iterated coproducts `Δ^{[a]}(x)` and reduced coproducts.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorComb<K: Ord + Clone> {
    arity: usize,
    terms: BTreeMap<Vec<K>, Rational>,
}

impl<K: Ord + Clone> TensorComb<K> {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be positive");
        TensorComb { arity, terms: BTreeMap::new() }
    }

    pub fn singleton(keys: Vec<K>) -> Self {
        let arity = keys.len();
        let mut t = Self::zero(arity);
        t.add_term(keys, Rational::one());
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, keys: &[K]) -> Rational {
        self.terms.get(keys).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<K>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, keys: Vec<K>, coeff: Rational) {
        assert_eq!(keys.len(), self.arity, "tensor term of wrong arity");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(keys);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.arity, other.arity);
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&self, alpha: &Rational) -> Self {
        let mut out = Self::zero(self.arity);
        if alpha.is_zero() {
            return out;
        }
        for (k, c) in self.iter() {
            out.add_term(k.clone(), alpha * c);
        }
        out
    }

    /// Distributive concatenation of tensor factors: the arity of the result
    /// is the sum of the parts' arities.
    pub fn merge(parts: &[&TensorComb<K>]) -> Self {
        assert!(!parts.is_empty(), "merge of no tensors");
        let arity = parts.iter().map(|p| p.arity).sum();
        let mut acc = TensorComb::zero(arity);
        // Seed with the first part, then distribute the rest.
        let mut current: Vec<(Vec<K>, Rational)> =
            parts[0].iter().map(|(k, c)| (k.clone(), c.clone())).collect();
        for part in &parts[1..] {
            let mut next = Vec::new();
            for (keys, coeff) in &current {
                for (k2, c2) in part.iter() {
                    let mut merged = keys.clone();
                    merged.extend(k2.iter().cloned());
                    next.push((merged, coeff * c2));
                }
            }
            current = next;
        }
        for (k, c) in current {
            acc.add_term(k, c);
        }
        acc
    }

    /// Total sum of coefficients.
    pub fn coeff_sum(&self) -> Rational {
        self.iter().map(|(_, c)| c.clone()).sum()
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for TensorComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (keys, c) in self.iter() {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{c}·")?;
            for (i, k) in keys.iter().enumerate() {
                if i > 0 {
                    write!(f, "⊗")?;
                }
                write!(f, "{k}")?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Debug for TensorComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
