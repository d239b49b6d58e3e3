//! The Hopf algebra of simple graphs (isomorphism classes): product is
//! disjoint union, coproduct sums induced subgraphs over vertex subsets.
//! Commutative and cocommutative; graphs form a free-commutative basis with
//! the connected graphs as generators. The associated chain removes edges
//! between differently coloured vertices.

use crate::hopf::{HopfAlgebra, HopfError};
use crate::keys::{BasisKey, GraphKey};
use crate::lincomb::{KeyComb, KeyTensor};
use crate::rational::Rational;
use std::collections::HashMap;
use std::sync::Mutex;

pub struct GraphAlgebra {
    coproduct_memo: Mutex<HashMap<GraphKey, KeyTensor>>,
}

impl GraphAlgebra {
    pub fn new() -> Self {
        GraphAlgebra { coproduct_memo: Mutex::new(HashMap::new()) }
    }

    /// Connected graphs of each degree: the free generating set.
    pub fn connected_graphs(n: usize) -> Vec<GraphKey> {
        GraphKey::all_of(n).into_iter().filter(|g| g.is_connected()).collect()
    }
}

impl Default for GraphAlgebra {
    fn default() -> Self {
        Self::new()
    }
}

impl HopfAlgebra for GraphAlgebra {
    fn name(&self) -> &str {
        "graphs"
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn is_cocommutative(&self) -> bool {
        true
    }

    fn unit(&self) -> BasisKey {
        BasisKey::Graph(GraphKey::edgeless(0))
    }

    fn degree(&self, x: &BasisKey) -> usize {
        x.as_graph().n()
    }

    fn basis(&self, n: usize) -> Result<Vec<BasisKey>, HopfError> {
        Ok(GraphKey::all_of(n).into_iter().map(BasisKey::Graph).collect())
    }

    fn product(&self, x: &BasisKey, y: &BasisKey) -> KeyComb {
        KeyComb::singleton(BasisKey::Graph(x.as_graph().disjoint_union(y.as_graph())))
    }

    fn coproduct(&self, x: &BasisKey) -> KeyTensor {
        let g = x.as_graph().clone();
        if let Some(hit) = self.coproduct_memo.lock().unwrap().get(&g) {
            return hit.clone();
        }
        let n = g.n();
        let mut out = KeyTensor::zero(2);
        for mask in 0u64..(1u64 << n) {
            let mut inside = Vec::new();
            let mut outside = Vec::new();
            for v in 0..n {
                if mask >> v & 1 == 1 {
                    inside.push(v as u8);
                } else {
                    outside.push(v as u8);
                }
            }
            out.add_term(
                vec![BasisKey::Graph(g.induced(&inside)), BasisKey::Graph(g.induced(&outside))],
                Rational::one(),
            );
        }
        self.coproduct_memo.lock().unwrap().insert(g, out.clone());
        out
    }

    fn factor_generators(&self, x: &BasisKey) -> Option<Vec<BasisKey>> {
        Some(x.as_graph().components().into_iter().map(BasisKey::Graph).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::hopf_power;

    #[test]
    fn coproduct_of_path3() {
        let alg = GraphAlgebra::new();
        let p3 = BasisKey::Graph(GraphKey::path(3));
        let p2 = GraphKey::path(2);
        let dot = GraphKey::edgeless(1);
        let dot2 = GraphKey::edgeless(2);
        let unit = GraphKey::edgeless(0);
        let d = alg.coproduct(&p3);
        // Δ(P₃) = P₃⊗1 + 2P₂⊗• + •²⊗• + 2•⊗P₂ + •⊗•² + 1⊗P₃
        let gk = |g: &GraphKey| BasisKey::Graph(g.clone());
        assert_eq!(d.coeff(&[p3.clone(), gk(&unit)]), Rational::one());
        assert_eq!(d.coeff(&[gk(&p2), gk(&dot)]), Rational::from_int(2));
        assert_eq!(d.coeff(&[gk(&dot2), gk(&dot)]), Rational::one());
        assert_eq!(d.coeff(&[gk(&dot), gk(&p2)]), Rational::from_int(2));
        assert_eq!(d.coeff(&[gk(&dot), gk(&dot2)]), Rational::one());
        assert_eq!(d.coeff(&[gk(&unit), p3.clone()]), Rational::one());
    }

    #[test]
    fn hopf_square_of_path3() {
        // Ψ²(P₃) = 2P₃ + 4P₂• + 2•³.
        let alg = GraphAlgebra::new();
        let p3 = BasisKey::Graph(GraphKey::path(3));
        let psi = hopf_power(&alg, 2, &KeyComb::singleton(p3.clone()));
        assert_eq!(psi.coeff(&p3), Rational::from_int(2));
        let p2dot = GraphKey::path(2).disjoint_union(&GraphKey::edgeless(1));
        assert_eq!(psi.coeff(&BasisKey::Graph(p2dot)), Rational::from_int(4));
        assert_eq!(
            psi.coeff(&BasisKey::Graph(GraphKey::edgeless(3))),
            Rational::from_int(2)
        );
        assert_eq!(psi.len(), 3);
    }

    #[test]
    fn coproduct_counts_match_subset_enumeration() {
        // The total coefficient mass of Δ(G) is 2^n: one term per subset.
        let alg = GraphAlgebra::new();
        for n in 0..=4usize {
            for g in GraphKey::all_of(n) {
                let d = alg.coproduct(&BasisKey::Graph(g));
                assert_eq!(d.coeff_sum(), Rational::from_int(1i64 << n));
            }
        }
    }
}
