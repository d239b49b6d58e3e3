//! Symmetric functions: the complete basis `h_λ` (free-commutative, the
//! rock-breaking state space), the Schur basis `s_λ` (irreducible symmetric
//! group representations; restriction-then-induction chain), and the
//! power-sum basis `p_λ` (kept only to demonstrate why primitive basis
//! elements break the Doob transform).
//!
//! Schur structure constants are computed through the `h` basis with
//! Kostka-matrix changes of basis: `h_μ = Σ_λ K_{λμ} s_λ` where `K_{λμ}`
//! counts semistandard tableaux of shape λ and content μ.

use crate::hopf::{HopfAlgebra, HopfError};
use crate::keys::{BasisKey, Partition};
use crate::lincomb::{KeyComb, KeyTensor, LinComb};
use crate::rational::Rational;
use num::BigInt;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

fn merge_parts(a: &Partition, b: &Partition) -> Partition {
    let mut parts = a.parts().to_vec();
    parts.extend_from_slice(b.parts());
    Partition::new(parts)
}

/// Complete symmetric functions `h_λ`, indexed by partitions.
pub struct SymH;

impl SymH {
    pub fn new() -> Self {
        SymH
    }
}

impl Default for SymH {
    fn default() -> Self {
        Self::new()
    }
}

impl HopfAlgebra for SymH {
    fn name(&self) -> &str {
        "sym_h"
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn is_cocommutative(&self) -> bool {
        true
    }

    fn unit(&self) -> BasisKey {
        BasisKey::Partition(Partition::empty())
    }

    fn degree(&self, x: &BasisKey) -> usize {
        x.as_partition().size()
    }

    fn basis(&self, n: usize) -> Result<Vec<BasisKey>, HopfError> {
        Ok(Partition::all_of(n).into_iter().map(BasisKey::Partition).collect())
    }

    fn product(&self, x: &BasisKey, y: &BasisKey) -> KeyComb {
        KeyComb::singleton(BasisKey::Partition(merge_parts(x.as_partition(), y.as_partition())))
    }

    fn coproduct(&self, x: &BasisKey) -> KeyTensor {
        // Δ(h_(p)) = Σ h_(i) ⊗ h_(p−i), extended multiplicatively over parts.
        let mut terms: Vec<(Vec<u32>, Vec<u32>, Rational)> =
            vec![(Vec::new(), Vec::new(), Rational::one())];
        for &p in x.as_partition().parts() {
            let mut next = Vec::new();
            for (l, r, c) in &terms {
                for i in 0..=p {
                    let mut l2 = l.clone();
                    let mut r2 = r.clone();
                    if i > 0 {
                        l2.push(i);
                    }
                    if p - i > 0 {
                        r2.push(p - i);
                    }
                    next.push((l2, r2, c.clone()));
                }
            }
            terms = next;
        }
        let mut out = KeyTensor::zero(2);
        for (l, r, c) in terms {
            out.add_term(
                vec![
                    BasisKey::Partition(Partition::new(l)),
                    BasisKey::Partition(Partition::new(r)),
                ],
                c,
            );
        }
        out
    }

    fn factor_generators(&self, x: &BasisKey) -> Option<Vec<BasisKey>> {
        Some(
            x.as_partition()
                .parts()
                .iter()
                .map(|&p| BasisKey::Partition(Partition::new(vec![p])))
                .collect(),
        )
    }
}

/// Power sums `p_λ`. The one-part elements are primitive, which is exactly
/// what disqualifies this basis as a chain state space.
pub struct SymP;

impl SymP {
    pub fn new() -> Self {
        SymP
    }
}

impl Default for SymP {
    fn default() -> Self {
        Self::new()
    }
}

impl HopfAlgebra for SymP {
    fn name(&self) -> &str {
        "sym_p"
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn is_cocommutative(&self) -> bool {
        true
    }

    fn unit(&self) -> BasisKey {
        BasisKey::Partition(Partition::empty())
    }

    fn degree(&self, x: &BasisKey) -> usize {
        x.as_partition().size()
    }

    fn basis(&self, n: usize) -> Result<Vec<BasisKey>, HopfError> {
        Ok(Partition::all_of(n).into_iter().map(BasisKey::Partition).collect())
    }

    fn product(&self, x: &BasisKey, y: &BasisKey) -> KeyComb {
        KeyComb::singleton(BasisKey::Partition(merge_parts(x.as_partition(), y.as_partition())))
    }

    fn coproduct(&self, x: &BasisKey) -> KeyTensor {
        // Each p_(n) is primitive; extend multiplicatively (subsets of parts).
        let parts = x.as_partition().parts();
        let mut out = KeyTensor::zero(2);
        for mask in 0u64..(1u64 << parts.len()) {
            let mut l = Vec::new();
            let mut r = Vec::new();
            for (i, &p) in parts.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    l.push(p);
                } else {
                    r.push(p);
                }
            }
            out.add_term(
                vec![
                    BasisKey::Partition(Partition::new(l)),
                    BasisKey::Partition(Partition::new(r)),
                ],
                Rational::one(),
            );
        }
        out
    }

    fn factor_generators(&self, x: &BasisKey) -> Option<Vec<BasisKey>> {
        Some(
            x.as_partition()
                .parts()
                .iter()
                .map(|&p| BasisKey::Partition(Partition::new(vec![p])))
                .collect(),
        )
    }
}

/// Number of semistandard Young tableaux of shape `shape` and content
/// `content` (content entry i gives the multiplicity of letter i+1).
/// Computed by peeling horizontal strips for the largest letter.
pub fn kostka_number(shape: &[u32], content: &[u32]) -> BigInt {
    static MEMO: Lazy<Mutex<HashMap<(Vec<u32>, Vec<u32>), BigInt>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    let shape_sum: u32 = shape.iter().sum();
    let content_sum: u32 = content.iter().sum();
    if shape_sum != content_sum {
        return BigInt::from(0);
    }
    if shape.is_empty() {
        return BigInt::from(1);
    }
    let mut content = content.to_vec();
    while content.last() == Some(&0) {
        content.pop();
    }
    if content.is_empty() {
        return BigInt::from(if shape.is_empty() { 1 } else { 0 });
    }
    let key = (shape.to_vec(), content.clone());
    if let Some(hit) = MEMO.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let last = *content.last().unwrap();
    let rest = &content[..content.len() - 1];
    // Remove a horizontal strip of size `last`: inner shape ρ with
    // ρ_i ≤ λ_i, ρ_i ≥ λ_{i+1}, Σ(λ_i − ρ_i) = last.
    fn strips(shape: &[u32], row: usize, remaining: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if row == shape.len() {
            if remaining == 0 {
                let mut inner = acc.clone();
                while inner.last() == Some(&0) {
                    inner.pop();
                }
                out.push(inner);
            }
            return;
        }
        let lo = if row + 1 < shape.len() { shape[row + 1] } else { 0 };
        for keep in lo.max(shape[row].saturating_sub(remaining))..=shape[row] {
            acc.push(keep);
            strips(shape, row + 1, remaining - (shape[row] - keep), acc, out);
            acc.pop();
        }
    }
    let mut inners = Vec::new();
    strips(shape, 0, last, &mut Vec::new(), &mut inners);
    let mut total = BigInt::from(0);
    for inner in inners {
        total += kostka_number(&inner, rest);
    }
    MEMO.lock().unwrap().insert(key, total.clone());
    total
}

type Conversion = HashMap<Partition, LinComb<Partition>>;

struct SchurTables {
    /// `s_λ` expanded in the `h` basis.
    s_in_h: Conversion,
    /// `h_ν` expanded in the `s` basis.
    h_in_s: Conversion,
}

fn schur_tables(n: usize) -> &'static SchurTables {
    static TABLES: Lazy<Mutex<HashMap<usize, &'static SchurTables>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    let mut guard = TABLES.lock().unwrap();
    if let Some(hit) = guard.get(&n) {
        return hit;
    }
    let parts = Partition::all_of(n);
    let dim = parts.len();
    // K[i][j] = #SSYT(shape λ_i, content λ_j), so h_{λ_j} = Σ_i K[i][j] s_{λ_i}.
    let mut kostka = vec![vec![Rational::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            kostka[i][j] =
                Rational::from_bigint(kostka_number(parts[i].parts(), parts[j].parts()));
        }
    }
    let inv = invert(&kostka);
    let mut s_in_h = HashMap::new();
    let mut h_in_s = HashMap::new();
    for (j, lam) in parts.iter().enumerate() {
        // s_{λ_j} = Σ_μ (K^{-1})_{μ λ_j} h_μ
        let mut comb = LinComb::zero();
        for (i, mu) in parts.iter().enumerate() {
            comb.add_term(mu.clone(), inv[i][j].clone());
        }
        s_in_h.insert(lam.clone(), comb);
        // h_{λ_j} = Σ_ρ K_{ρ λ_j} s_ρ
        let mut comb = LinComb::zero();
        for (i, rho) in parts.iter().enumerate() {
            comb.add_term(rho.clone(), kostka[i][j].clone());
        }
        h_in_s.insert(lam.clone(), comb);
    }
    let leaked: &'static SchurTables = Box::leak(Box::new(SchurTables { s_in_h, h_in_s }));
    guard.insert(n, leaked);
    leaked
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !a[i][c].is_zero()).expect("singular Kostka matrix");
        a.swap(c, piv);
        inv.swap(c, piv);
        let f = a[c][c].recip();
        for j in 0..n {
            a[c][j] = &a[c][j] * &f;
            inv[c][j] = &inv[c][j] * &f;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..n {
                    let s = &a[c][j] * &f;
                    a[i][j] = &a[i][j] - &s;
                    let s = &inv[c][j] * &f;
                    inv[i][j] = &inv[i][j] - &s;
                }
            }
        }
    }
    inv
}

/// `s_λ` in the `h` basis (for oracles and eigenfunction work).
pub fn schur_in_h(lam: &Partition) -> LinComb<Partition> {
    schur_tables(lam.size()).s_in_h[lam].clone()
}

/// Schur functions `s_λ` as the basis of irreducible symmetric-group
/// representations: product is induction, coproduct restriction.
pub struct SymSchur {
    product_memo: Mutex<HashMap<(Partition, Partition), KeyComb>>,
    coproduct_memo: Mutex<HashMap<Partition, KeyTensor>>,
}

impl SymSchur {
    pub fn new() -> Self {
        SymSchur {
            product_memo: Mutex::new(HashMap::new()),
            coproduct_memo: Mutex::new(HashMap::new()),
        }
    }

    fn h_comb_to_s(&self, comb: &LinComb<Partition>) -> LinComb<Partition> {
        let mut out = LinComb::zero();
        for (nu, c) in comb.iter() {
            if nu.size() == 0 {
                out.add_term(nu.clone(), c.clone());
                continue;
            }
            let conv = &schur_tables(nu.size()).h_in_s[nu];
            for (rho, d) in conv.iter() {
                out.add_term(rho.clone(), c * d);
            }
        }
        out
    }
}

impl Default for SymSchur {
    fn default() -> Self {
        Self::new()
    }
}

impl HopfAlgebra for SymSchur {
    fn name(&self) -> &str {
        "sym_schur"
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn is_cocommutative(&self) -> bool {
        true
    }

    fn unit(&self) -> BasisKey {
        BasisKey::Schur(Partition::empty())
    }

    fn degree(&self, x: &BasisKey) -> usize {
        x.as_partition().size()
    }

    fn basis(&self, n: usize) -> Result<Vec<BasisKey>, HopfError> {
        Ok(Partition::all_of(n).into_iter().map(BasisKey::Schur).collect())
    }

    fn product(&self, x: &BasisKey, y: &BasisKey) -> KeyComb {
        let (lam, mu) = (x.as_partition().clone(), y.as_partition().clone());
        if let Some(hit) = self.product_memo.lock().unwrap().get(&(lam.clone(), mu.clone())) {
            return hit.clone();
        }
        // Expand in h, multiply (free), convert back.
        let (sl, sm) = (schur_expand(&lam), schur_expand(&mu));
        let mut in_h: LinComb<Partition> = LinComb::zero();
        for (a, ca) in sl.iter() {
            for (b, cb) in sm.iter() {
                in_h.add_term(merge_parts(a, b), ca * cb);
            }
        }
        let in_s = self.h_comb_to_s(&in_h);
        let out: KeyComb = in_s.map_keys(|p| BasisKey::Schur(p.clone()));
        self.product_memo.lock().unwrap().insert((lam, mu), out.clone());
        out
    }

    fn coproduct(&self, x: &BasisKey) -> KeyTensor {
        let lam = x.as_partition().clone();
        if let Some(hit) = self.coproduct_memo.lock().unwrap().get(&lam) {
            return hit.clone();
        }
        let symh = SymH::new();
        let mut out = KeyTensor::zero(2);
        if lam.size() == 0 {
            out.add_term(vec![self.unit(), self.unit()], Rational::one());
        } else {
            for (nu, c) in schur_expand(&lam).iter() {
                let d = symh.coproduct(&BasisKey::Partition(nu.clone()));
                for (pair, cd) in d.iter() {
                    // Convert each leg back to the Schur basis.
                    let left = self
                        .h_comb_to_s(&LinComb::singleton(pair[0].as_partition().clone()));
                    let right = self
                        .h_comb_to_s(&LinComb::singleton(pair[1].as_partition().clone()));
                    for (l, cl) in left.iter() {
                        for (r, cr) in right.iter() {
                            out.add_term(
                                vec![BasisKey::Schur(l.clone()), BasisKey::Schur(r.clone())],
                                &(&(c * cd) * cl) * cr,
                            );
                        }
                    }
                }
            }
        }
        self.coproduct_memo.lock().unwrap().insert(lam, out.clone());
        out
    }
}

fn schur_expand(lam: &Partition) -> LinComb<Partition> {
    if lam.size() == 0 {
        return LinComb::singleton(Partition::empty());
    }
    schur_in_h(lam)
}
