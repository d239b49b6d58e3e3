//! The free associative algebra: words under concatenation, with the
//! deshuffle coproduct (sum over subsets of positions). Cocommutative, not
//! commutative; the graded dual of the shuffle algebra.

use crate::hopf::{HopfAlgebra, HopfError};
use crate::keys::BasisKey;
use crate::lincomb::{KeyComb, KeyTensor};
use crate::rational::Rational;
use crate::words::{multiset_permutations, Letter, Word};
use std::collections::HashMap;
use std::sync::Mutex;

pub struct FreeAssocAlgebra {
    coproduct_memo: Mutex<HashMap<Word, KeyTensor>>,
}

impl FreeAssocAlgebra {
    pub fn new() -> Self {
        FreeAssocAlgebra { coproduct_memo: Mutex::new(HashMap::new()) }
    }
}

impl Default for FreeAssocAlgebra {
    fn default() -> Self {
        Self::new()
    }
}

impl HopfAlgebra for FreeAssocAlgebra {
    fn name(&self) -> &str {
        "free_assoc"
    }

    fn is_commutative(&self) -> bool {
        false
    }

    fn is_cocommutative(&self) -> bool {
        true
    }

    fn unit(&self) -> BasisKey {
        BasisKey::Word(Word::empty())
    }

    fn degree(&self, x: &BasisKey) -> usize {
        x.as_word().len()
    }

    fn multidegree(&self, x: &BasisKey) -> Option<Vec<usize>> {
        Some(x.as_word().multidegree())
    }

    fn basis(&self, n: usize) -> Result<Vec<BasisKey>, HopfError> {
        if n == 0 {
            return Ok(vec![self.unit()]);
        }
        Err(HopfError::PlainDegreeUnsupported {
            algebra: "free_assoc".into(),
            reason: "disconnected state space; use a multidegree".into(),
        })
    }

    fn basis_multi(&self, nu: &[usize]) -> Result<Vec<BasisKey>, HopfError> {
        let mut letters: Vec<Letter> = Vec::new();
        for (i, &count) in nu.iter().enumerate() {
            for _ in 0..count {
                letters.push((i + 1) as Letter);
            }
        }
        Ok(multiset_permutations(&letters)
            .into_iter()
            .map(|l| BasisKey::Word(Word::new(l)))
            .collect())
    }

    fn product(&self, x: &BasisKey, y: &BasisKey) -> KeyComb {
        KeyComb::singleton(BasisKey::Word(x.as_word().concat(y.as_word())))
    }

    fn coproduct(&self, x: &BasisKey) -> KeyTensor {
        let w = x.as_word().clone();
        if let Some(hit) = self.coproduct_memo.lock().unwrap().get(&w) {
            return hit.clone();
        }
        let s = w.letters();
        let n = s.len();
        let mut out = KeyTensor::zero(2);
        for mask in 0u64..(1u64 << n) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (i, &l) in s.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(l);
                } else {
                    right.push(l);
                }
            }
            out.add_term(
                vec![BasisKey::Word(Word::new(left)), BasisKey::Word(Word::new(right))],
                Rational::one(),
            );
        }
        self.coproduct_memo.lock().unwrap().insert(w, out.clone());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> BasisKey {
        BasisKey::Word(s.parse().unwrap())
    }

    #[test]
    fn concatenation_product() {
        let alg = FreeAssocAlgebra::new();
        let p = alg.product(&k("(12)"), &k("(231)"));
        assert_eq!(p, KeyComb::singleton(k("(12231)")));
    }

    #[test]
    fn deshuffle_coproduct_of_316() {
        let alg = FreeAssocAlgebra::new();
        let d = alg.coproduct(&k("(316)"));
        // Eight terms, including (6)⊗(31).
        assert_eq!(d.len(), 8);
        assert_eq!(d.coeff(&[k("(6)"), k("(31)")]), Rational::one());
        assert_eq!(d.coeff(&[k("(31)"), k("(6)")]), Rational::one());
        assert_eq!(d.coeff(&[k("()"), k("(316)")]), Rational::one());
    }

    #[test]
    fn matches_the_dual_of_the_shuffle_algebra() {
        use crate::hopf::DualAlgebra;
        use crate::instances::ShuffleAlgebra;
        use std::sync::Arc;
        let fa = FreeAssocAlgebra::new();
        let dual = DualAlgebra::new(Arc::new(ShuffleAlgebra::new()));
        for (x, y) in [("(12)", "(1)"), ("(21)", "(13)"), ("(1)", "(12)")] {
            assert_eq!(fa.product(&k(x), &k(y)), dual.product(&k(x), &k(y)));
        }
        for x in ["(121)", "(312)"] {
            assert_eq!(fa.coproduct(&k(x)), dual.coproduct(&k(x)));
        }
    }
}
