//! The Connes-Kreimer algebra of rooted forests: product is disjoint union,
//! and the coproduct of a tree sums `T\S ⊗ S` over trunks `S` (subtrees
//! containing the root, including the empty one and all of `T`), where the
//! cut branches `T\S` form a forest. Commutative, not cocommutative; the
//! trees freely generate. The associated chain prunes branches.

use crate::hopf::{HopfAlgebra, HopfError};
use crate::keys::{BasisKey, Forest, Tree};
use crate::lincomb::{KeyComb, KeyTensor};
use crate::rational::Rational;
use std::collections::HashMap;
use std::sync::Mutex;

/// Coproduct terms of a single tree: (cut branches, trunk forest, coeff).
/// The trunk side is empty or a single tree.
type TreeTerms = Vec<(Forest, Forest, Rational)>;

pub struct ForestAlgebra {
    coproduct_memo: Mutex<HashMap<Tree, TreeTerms>>,
}

impl ForestAlgebra {
    pub fn new() -> Self {
        ForestAlgebra { coproduct_memo: Mutex::new(HashMap::new()) }
    }

    fn tree_coproduct(&self, t: &Tree) -> TreeTerms {
        if let Some(hit) = self.coproduct_memo.lock().unwrap().get(t) {
            return hit.clone();
        }
        let mut collected: HashMap<(Forest, Forest), Rational> = HashMap::new();
        // Empty trunk: the whole tree is a single cut branch.
        collected.insert((Forest::single(t.clone()), Forest::empty()), Rational::one());
        // Nonempty trunks: the root together with a trunk (possibly empty)
        // of each child subtree; the children's cut branches accumulate.
        let mut partial: Vec<(Forest, Vec<Tree>, Rational)> =
            vec![(Forest::empty(), Vec::new(), Rational::one())];
        for child in t.children() {
            let child_terms = self.tree_coproduct(child);
            let mut next = Vec::new();
            for (branches, trunks, coeff) in &partial {
                for (cb, ct, cc) in &child_terms {
                    let mut trunks2 = trunks.clone();
                    trunks2.extend(ct.trees().iter().cloned());
                    next.push((branches.union(cb), trunks2, coeff * cc));
                }
            }
            partial = next;
        }
        for (branches, trunks, coeff) in partial {
            let trunk = Forest::single(Tree::node(trunks));
            *collected.entry((branches, trunk)).or_insert_with(Rational::zero) += coeff;
        }
        let out: TreeTerms =
            collected.into_iter().map(|((b, s), c)| (b, s, c)).collect();
        self.coproduct_memo.lock().unwrap().insert(t.clone(), out.clone());
        out
    }

    /// The rooted trees of each degree: the free generating set.
    pub fn trees(n: usize) -> Vec<Tree> {
        Tree::all_of(n)
    }
}

impl Default for ForestAlgebra {
    fn default() -> Self {
        Self::new()
    }
}

impl HopfAlgebra for ForestAlgebra {
    fn name(&self) -> &str {
        "ck_forests"
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn is_cocommutative(&self) -> bool {
        false
    }

    fn unit(&self) -> BasisKey {
        BasisKey::Forest(Forest::empty())
    }

    fn degree(&self, x: &BasisKey) -> usize {
        x.as_forest().degree()
    }

    fn basis(&self, n: usize) -> Result<Vec<BasisKey>, HopfError> {
        Ok(Forest::all_of(n).into_iter().map(BasisKey::Forest).collect())
    }

    fn product(&self, x: &BasisKey, y: &BasisKey) -> KeyComb {
        KeyComb::singleton(BasisKey::Forest(x.as_forest().union(y.as_forest())))
    }

    fn coproduct(&self, x: &BasisKey) -> KeyTensor {
        let forest = x.as_forest();
        let mut terms: Vec<(Forest, Forest, Rational)> =
            vec![(Forest::empty(), Forest::empty(), Rational::one())];
        for tree in forest.trees() {
            let tree_terms = self.tree_coproduct(tree);
            let mut next = Vec::new();
            for (b, s, c) in &terms {
                for (tb, ts, tc) in &tree_terms {
                    next.push((b.union(tb), s.union(ts), c * tc));
                }
            }
            terms = next;
        }
        let mut out = KeyTensor::zero(2);
        for (b, s, c) in terms {
            out.add_term(vec![BasisKey::Forest(b), BasisKey::Forest(s)], c);
        }
        out
    }

    fn factor_generators(&self, x: &BasisKey) -> Option<Vec<BasisKey>> {
        Some(
            x.as_forest()
                .trees()
                .iter()
                .map(|t| BasisKey::Forest(Forest::single(t.clone())))
                .collect(),
        )
    }
}


impl From<Forest> for BasisKey {
    fn from(f: Forest) -> Self {
        BasisKey::Forest(f)
    }
}
