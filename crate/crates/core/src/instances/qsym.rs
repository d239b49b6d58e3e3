//! Quasisymmetric functions in the fundamental basis `F_I`, indexed by
//! compositions. Structure constants are computed through distinct-letter
//! representative words: the descent map `w ↦ F_{Des(w)}` is a Hopf morphism
//! from the shuffle algebra, so shuffling (resp. deconcatenating) any
//! distinct-letter representative and reading off descent compositions gives
//! the product (resp. coproduct). Commutative, not cocommutative.

use crate::hopf::{HopfAlgebra, HopfError};
use crate::keys::BasisKey;
use crate::lincomb::{KeyComb, KeyTensor, LinComb};
use crate::rational::{factorial, Rational};
use crate::words::{descent_composition, Composition, Letter, Word};
use std::collections::HashMap;
use std::sync::Mutex;

/// The descent map on distinct-letter words: `θ(w) = Des(w)`. Errors on
/// repeated letters, where the clean formula fails.
pub fn theta_descent(w: &Word) -> Result<Composition, String> {
    let mut seen = std::collections::BTreeSet::new();
    for &l in w.letters() {
        if !seen.insert(l) {
            return Err(format!("theta needs distinct letters, got {w}"));
        }
    }
    Ok(descent_composition(w))
}

/// A distinct-letter word with the given descent composition, using letters
/// `offset+1 ..= offset+n`: runs are filled back to front with increasing
/// blocks, which forces a descent at exactly each division.
pub fn representative_word(i: &Composition, offset: Letter) -> Word {
    let n = i.size();
    let mut blocks: Vec<Vec<Letter>> = Vec::new();
    let mut next = offset + 1;
    for &part in i.parts().iter().rev() {
        let block: Vec<Letter> = (next..next + part).collect();
        next += part;
        blocks.push(block);
    }
    blocks.reverse();
    let letters: Vec<Letter> = blocks.concat();
    assert_eq!(letters.len(), n);
    let w = Word::new(letters);
    debug_assert_eq!(&descent_composition(&w), i);
    w
}

pub struct QSymF {
    product_memo: Mutex<HashMap<(Composition, Composition), KeyComb>>,
    coproduct_memo: Mutex<HashMap<Composition, KeyTensor>>,
}

impl QSymF {
    pub fn new() -> Self {
        QSymF {
            product_memo: Mutex::new(HashMap::new()),
            coproduct_memo: Mutex::new(HashMap::new()),
        }
    }
}

impl Default for QSymF {
    fn default() -> Self {
        Self::new()
    }
}

/// All compositions of n.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::new(Vec::new())];
    }
    let mut out = Vec::new();
    // Compositions correspond to subsets of division points 1..n-1.
    for mask in 0u64..(1u64 << (n - 1)) {
        let points: Vec<usize> = (1..n).filter(|&p| mask >> (p - 1) & 1 == 1).collect();
        out.push(Composition::from_division_points(n, &points));
    }
    out.sort();
    out
}

impl HopfAlgebra for QSymF {
    fn name(&self) -> &str {
        "qsym_F"
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn is_cocommutative(&self) -> bool {
        false
    }

    fn unit(&self) -> BasisKey {
        BasisKey::Composition(Composition::new(Vec::new()))
    }

    fn degree(&self, x: &BasisKey) -> usize {
        x.as_composition().size()
    }

    fn basis(&self, n: usize) -> Result<Vec<BasisKey>, HopfError> {
        Ok(compositions_of(n).into_iter().map(BasisKey::Composition).collect())
    }

    fn product(&self, x: &BasisKey, y: &BasisKey) -> KeyComb {
        let (i, j) = (x.as_composition().clone(), y.as_composition().clone());
        if let Some(hit) = self.product_memo.lock().unwrap().get(&(i.clone(), j.clone())) {
            return hit.clone();
        }
        let out = if i.size() == 0 {
            KeyComb::singleton(BasisKey::Composition(j.clone()))
        } else if j.size() == 0 {
            KeyComb::singleton(BasisKey::Composition(i.clone()))
        } else {
            let wi = representative_word(&i, 0);
            let wj = representative_word(&j, i.size() as Letter);
            let mut out = KeyComb::zero();
            for v in crate::hopf::interleavings(&wi, &wj) {
                out.add_term(
                    BasisKey::Composition(descent_composition(&v)),
                    Rational::one(),
                );
            }
            out
        };
        self.product_memo.lock().unwrap().insert((i, j), out.clone());
        out
    }

    fn coproduct(&self, x: &BasisKey) -> KeyTensor {
        let i = x.as_composition().clone();
        if let Some(hit) = self.coproduct_memo.lock().unwrap().get(&i) {
            return hit.clone();
        }
        let mut out = KeyTensor::zero(2);
        if i.size() == 0 {
            out.add_term(vec![self.unit(), self.unit()], Rational::one());
        } else {
            let w = representative_word(&i, 0);
            let s = w.letters();
            for cut in 0..=s.len() {
                let left = if cut == 0 {
                    Composition::new(Vec::new())
                } else {
                    descent_composition(&Word::new(s[..cut].to_vec()))
                };
                let right = if cut == s.len() {
                    Composition::new(Vec::new())
                } else {
                    descent_composition(&Word::new(s[cut..].to_vec()))
                };
                out.add_term(
                    vec![BasisKey::Composition(left), BasisKey::Composition(right)],
                    Rational::one(),
                );
            }
        }
        self.coproduct_memo.lock().unwrap().insert(i, out.clone());
        out
    }
}

/// The monomial quasisymmetric function `M_J` in the fundamental basis:
/// `M_J = Σ_{K refines J} (−1)^{ℓ(K)−ℓ(J)} F_K`.
pub fn monomial_in_fundamental(j: &Composition) -> LinComb<Composition> {
    let mut out = LinComb::zero();
    for k in j.refinements() {
        let sign = if (k.num_parts() - j.num_parts()) % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        out.add_term(k, sign);
    }
    out
}

/// The free-commutative `P` basis of quasisymmetric functions:
/// `P_I = Σ_{J coarser than I} (∏_r ℓ(I_r)!)^{−1} M_J`, where `(I_r)` is the
/// decomposition of `I` relative to `J`. Under `I ↦ P_I` the algebra is
/// isomorphic (as an algebra) to the shuffle algebra.
pub fn p_basis_in_fundamental(i: &Composition) -> KeyComb {
    let mut in_m: LinComb<Composition> = LinComb::zero();
    for j in i.coarsenings() {
        let dec = i.decompose_relative(&j);
        let mut denom = num::BigInt::from(1);
        for part in &dec {
            denom *= factorial(part.num_parts());
        }
        in_m.add_term(j, Rational::from_big(num::BigInt::from(1), denom));
    }
    let mut out = KeyComb::zero();
    for (j, c) in in_m.iter() {
        for (k, d) in monomial_in_fundamental(j).iter() {
            out.add_term(BasisKey::Composition(k.clone()), c * d);
        }
    }
    out
}
