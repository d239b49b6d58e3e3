//! The graded dual of a Hopf algebra, computed from structure constants:
//! dualising swaps product and coproduct, so
//! `x*·y* = Σ_z η_z^{xy} z*` and `Δ(z*) = Σ ξ^z_{xy} x*⊗y*`.
//!
//! Keys of the dual are the same `BasisKey`s, read as dual functionals.

use super::{multidegree_add, HopfAlgebra, HopfError};
use crate::keys::BasisKey;
use crate::lincomb::{KeyComb, KeyTensor};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub struct DualAlgebra {
    primal: Arc<dyn HopfAlgebra>,
    name: String,
    product_memo: Mutex<HashMap<(BasisKey, BasisKey), KeyComb>>,
    coproduct_memo: Mutex<HashMap<BasisKey, KeyTensor>>,
}

// Keep one dual per primal name so memo tables are shared across calls.
static DUAL_REGISTRY: Lazy<Mutex<HashMap<String, Arc<DualAlgebra>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

impl DualAlgebra {
    pub fn new(primal: Arc<dyn HopfAlgebra>) -> Arc<DualAlgebra> {
        let mut registry = DUAL_REGISTRY.lock().unwrap();
        if let Some(hit) = registry.get(primal.name()) {
            return hit.clone();
        }
        let name = format!("dual({})", primal.name());
        let dual = Arc::new(DualAlgebra {
            primal: primal.clone(),
            name,
            product_memo: Mutex::new(HashMap::new()),
            coproduct_memo: Mutex::new(HashMap::new()),
        });
        registry.insert(primal.name().to_string(), dual.clone());
        dual
    }

    pub fn primal(&self) -> &Arc<dyn HopfAlgebra> {
        &self.primal
    }

    fn ambient_basis(&self, x: &BasisKey, y: &BasisKey) -> Result<Vec<BasisKey>, HopfError> {
        match (self.primal.multidegree(x), self.primal.multidegree(y)) {
            (Some(mx), Some(my)) => self.primal.basis_multi(&multidegree_add(&mx, &my)),
            _ => self.primal.basis(self.primal.degree(x) + self.primal.degree(y)),
        }
    }
}

impl HopfAlgebra for DualAlgebra {
    fn name(&self) -> &str {
        &self.name
    }

    fn is_commutative(&self) -> bool {
        self.primal.is_cocommutative()
    }

    fn is_cocommutative(&self) -> bool {
        self.primal.is_commutative()
    }

    fn unit(&self) -> BasisKey {
        self.primal.unit()
    }

    fn degree(&self, x: &BasisKey) -> usize {
        self.primal.degree(x)
    }

    fn multidegree(&self, x: &BasisKey) -> Option<Vec<usize>> {
        self.primal.multidegree(x)
    }

    fn basis(&self, n: usize) -> Result<Vec<BasisKey>, HopfError> {
        self.primal.basis(n)
    }

    fn basis_multi(&self, nu: &[usize]) -> Result<Vec<BasisKey>, HopfError> {
        self.primal.basis_multi(nu)
    }

    fn product(&self, x: &BasisKey, y: &BasisKey) -> KeyComb {
        let memo_key = (x.clone(), y.clone());
        if let Some(hit) = self.product_memo.lock().unwrap().get(&memo_key) {
            return hit.clone();
        }
        let mut out = KeyComb::zero();
        let ambient = self
            .ambient_basis(x, y)
            .expect("dual product needs an enumerable primal component");
        let pair = [x.clone(), y.clone()];
        for z in ambient {
            let c = self.primal.coproduct(&z).coeff(&pair);
            if !c.is_zero() {
                out.add_term(z, c);
            }
        }
        self.product_memo.lock().unwrap().insert(memo_key, out.clone());
        out
    }

    fn coproduct(&self, z: &BasisKey) -> KeyTensor {
        if let Some(hit) = self.coproduct_memo.lock().unwrap().get(z) {
            return hit.clone();
        }
        let mut out = KeyTensor::zero(2);
        let n = self.primal.degree(z);
        // Split the multidegree (or plain degree) of z over the two factors.
        let halves: Vec<(Vec<BasisKey>, Vec<BasisKey>)> = match self.primal.multidegree(z) {
            Some(mz) => split_multidegrees(&mz)
                .into_iter()
                .filter_map(|(ma, mb)| {
                    let a = self.primal.basis_multi(&ma).ok()?;
                    let b = self.primal.basis_multi(&mb).ok()?;
                    Some((a, b))
                })
                .collect(),
            None => (0..=n)
                .filter_map(|i| {
                    let a = self.primal.basis(i).ok()?;
                    let b = self.primal.basis(n - i).ok()?;
                    Some((a, b))
                })
                .collect(),
        };
        for (left, right) in halves {
            for x in &left {
                for y in &right {
                    let c = self.primal.product(x, y).coeff(z);
                    if !c.is_zero() {
                        out.add_term(vec![x.clone(), y.clone()], c);
                    }
                }
            }
        }
        self.coproduct_memo.lock().unwrap().insert(z.clone(), out.clone());
        out
    }
}

/// All ways to split a multidegree into an ordered pair summing to it.
fn split_multidegrees(nu: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for &c in nu {
        let mut next = Vec::new();
        for (a, b) in &out {
            for i in 0..=c {
                let mut a2 = a.clone();
                let mut b2 = b.clone();
                a2.push(i);
                b2.push(c - i);
                next.push((a2, b2));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(mut a, mut b)| {
            while a.last() == Some(&0) {
                a.pop();
            }
            while b.last() == Some(&0) {
                b.pop();
            }
            (a, b)
        })
        .collect()
}
