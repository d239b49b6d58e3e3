//! The shuffle algebra: words under interleaving product and deconcatenation
//! coproduct. Commutative, not cocommutative. Graded by word length, with
//! the multidegree (letter counts) refining it; plain-degree components mix
//! letter multisets that no amount of shuffling connects, so plain basis
//! enumeration is refused.

use crate::hopf::{HopfAlgebra, HopfError};
use crate::keys::BasisKey;
use crate::lincomb::{KeyComb, KeyTensor};
use crate::rational::Rational;
use crate::words::{multiset_permutations, Letter, Word};
use std::collections::HashMap;
use std::sync::Mutex;

pub struct ShuffleAlgebra {
    product_memo: Mutex<HashMap<(Word, Word), KeyComb>>,
}

impl ShuffleAlgebra {
    pub fn new() -> Self {
        ShuffleAlgebra { product_memo: Mutex::new(HashMap::new()) }
    }
}

impl Default for ShuffleAlgebra {
    fn default() -> Self {
        Self::new()
    }
}

fn shuffle_words(u: &[Letter], v: &[Letter], acc: &mut Vec<Letter>, out: &mut KeyComb) {
    if u.is_empty() && v.is_empty() {
        out.add_term(BasisKey::Word(Word::new(acc.clone())), Rational::one());
        return;
    }
    if !u.is_empty() {
        acc.push(u[0]);
        shuffle_words(&u[1..], v, acc, out);
        acc.pop();
    }
    if !v.is_empty() {
        acc.push(v[0]);
        shuffle_words(u, &v[1..], acc, out);
        acc.pop();
    }
}

impl HopfAlgebra for ShuffleAlgebra {
    fn name(&self) -> &str {
        "shuffle"
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn is_cocommutative(&self) -> bool {
        false
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
            algebra: "shuffle".into(),
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
        let (u, v) = (x.as_word().clone(), y.as_word().clone());
        if let Some(hit) = self.product_memo.lock().unwrap().get(&(u.clone(), v.clone())) {
            return hit.clone();
        }
        let mut out = KeyComb::zero();
        shuffle_words(u.letters(), v.letters(), &mut Vec::new(), &mut out);
        self.product_memo.lock().unwrap().insert((u, v), out.clone());
        out
    }

    fn coproduct(&self, x: &BasisKey) -> KeyTensor {
        let w = x.as_word();
        let s = w.letters();
        let mut out = KeyTensor::zero(2);
        for i in 0..=s.len() {
            out.add_term(
                vec![
                    BasisKey::Word(Word::new(s[..i].to_vec())),
                    BasisKey::Word(Word::new(s[i..].to_vec())),
                ],
                Rational::one(),
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{hopf_power, iterated_coproduct};

    fn k(s: &str) -> BasisKey {
        BasisKey::Word(s.parse().unwrap())
    }

    #[test]
    fn interleaving_product_examples() {
        let alg = ShuffleAlgebra::new();
        // (13)(52) has six interleavings, all distinct.
        let p = alg.product(&k("(13)"), &k("(52)"));
        for t in ["(1352)", "(1532)", "(1523)", "(5132)", "(5123)", "(5213)"] {
            assert_eq!(p.coeff(&k(t)), Rational::one(), "{t}");
        }
        assert_eq!(p.len(), 6);
        // (15)(52) collides: 2(1552) + (1525) + (5152) + (5125) + (5215).
        let p = alg.product(&k("(15)"), &k("(52)"));
        assert_eq!(p.coeff(&k("(1552)")), Rational::from_int(2));
        for t in ["(1525)", "(5152)", "(5125)", "(5215)"] {
            assert_eq!(p.coeff(&k(t)), Rational::one(), "{t}");
        }
        assert_eq!(p.len(), 5);
        // x · unit = x.
        let p = alg.product(&k("(123)"), &alg.unit());
        assert_eq!(p, KeyComb::singleton(k("(123)")));
    }

    #[test]
    fn deconcatenation_coproduct() {
        let alg = ShuffleAlgebra::new();
        let d = iterated_coproduct(&alg, 2, &k("(336)"));
        assert_eq!(d.coeff(&[k("()"), k("(336)")]), Rational::one());
        assert_eq!(d.coeff(&[k("(3)"), k("(36)")]), Rational::one());
        assert_eq!(d.coeff(&[k("(33)"), k("(6)")]), Rational::one());
        assert_eq!(d.coeff(&[k("(336)"), k("()")]), Rational::one());
        assert_eq!(d.len(), 4);
        // Arity 1 is the identity.
        let d1 = iterated_coproduct(&alg, 1, &k("(12)"));
        assert_eq!(d1.coeff(&[k("(12)")]), Rational::one());
    }

    #[test]
    fn power_rule_on_small_words() {
        let alg = ShuffleAlgebra::new();
        for w in ["(12)", "(112)", "(1234)", "(1212)"] {
            let x = KeyComb::singleton(k(w));
            let psi6 = hopf_power(&alg, 6, &x);
            let psi23 = hopf_power(&alg, 2, &hopf_power(&alg, 3, &x));
            assert_eq!(psi6, psi23, "power rule fails on {w}");
            assert_eq!(hopf_power(&alg, 1, &x), x);
        }
    }

    #[test]
    fn eulerian_idempotent_examples() {
        let alg = ShuffleAlgebra::new();
        let e12 = crate::hopf::eulerian_idempotent(&alg, &KeyComb::singleton(k("(12)")));
        assert_eq!(e12.coeff(&k("(12)")), Rational::new(1, 2));
        assert_eq!(e12.coeff(&k("(21)")), Rational::new(-1, 2));
        assert_eq!(e12.len(), 2);

        let e123 = crate::hopf::eulerian_idempotent(&alg, &KeyComb::singleton(k("(123)")));
        assert_eq!(e123.coeff(&k("(123)")), Rational::new(1, 3));
        assert_eq!(e123.coeff(&k("(132)")), Rational::new(-1, 6));
        assert_eq!(e123.coeff(&k("(312)")), Rational::new(-1, 6));
        assert_eq!(e123.coeff(&k("(213)")), Rational::new(-1, 6));
        assert_eq!(e123.coeff(&k("(231)")), Rational::new(-1, 6));
        assert_eq!(e123.coeff(&k("(321)")), Rational::new(1, 3));

        // Degree-one keys are fixed.
        let e1 = crate::hopf::eulerian_idempotent(&alg, &KeyComb::singleton(k("(7)")));
        assert_eq!(e1, KeyComb::singleton(k("(7)")));
    }
}
