//! Invariant batteries shared by the `verify` CLI command, the integration
//! tests, and the acceptance suite: Hopf axioms, eigenbasis construction
//! with exact eigen-equations on both the algebra and the chain, stationary
//! and reversibility checks, unidirectionality, and the descent-map lumping.

use crate::chain::{
    check_lumping, eigenfunctions_from_eigvectors, eta_is_dual_eigenvector,
    right_eigenfunctions_free_commutative, stationary_distributions, Chain, Side,
};
use crate::hopf::{
    eigenbasis_cocommutative, eigenbasis_commutative, eigenbasis_free_basis,
    eigenbasis_shuffle_basis, eulerian_idempotent, hopf_power, tensor_product2, Degree,
    DualAlgebra, EigVector, Generator, HopfAlgebra, LetterSpec,
};
use crate::instances::{get_instance, p_basis_in_fundamental, ForestAlgebra, GraphAlgebra};
use crate::keys::{BasisKey, Partition};
use crate::lincomb::{KeyComb, KeyTensor};
use crate::rational::Rational;
use crate::words::{descent_composition, Composition, Word};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed: true, detail: String::new() }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed: false, detail: detail.into() }
    }
}

fn all_keys_up_to(alg: &dyn HopfAlgebra, max_degree: usize) -> Vec<BasisKey> {
    let mut keys = Vec::new();
    if alg.basis(1).is_ok() {
        for d in 0..=max_degree {
            keys.extend(alg.basis(d).unwrap());
        }
    } else {
        // Multigraded: partitions of each total as multidegrees.
        keys.push(alg.unit());
        for d in 1..=max_degree {
            for nu in Partition::all_of(d) {
                let mut m: Vec<usize> = nu.parts().iter().map(|&p| p as usize).collect();
                m.reverse(); // weakly increasing keeps letter counts small first
                keys.extend(alg.basis_multi(&m).unwrap());
            }
        }
    }
    keys
}

/// Hopf axiom battery: compatibility Δ(wz) = Δ(w)Δ(z), coassociativity, and
/// the counit axiom, for all basis pairs with total degree ≤ `max_degree`.
pub fn hopf_axioms(alg: &dyn HopfAlgebra, max_degree: usize) -> CheckResult {
    let name = format!("hopf axioms [{}] (degree <= {max_degree})", alg.name());
    let keys = all_keys_up_to(alg, max_degree);
    for x in &keys {
        // Counit axiom: all non-extreme terms have both factors positive.
        let d = alg.coproduct(x);
        let mut extreme_left = KeyComb::zero();
        let mut extreme_right = KeyComb::zero();
        for (pair, c) in d.iter() {
            let (d0, d1) = (alg.degree(&pair[0]), alg.degree(&pair[1]));
            if d0 == 0 && d1 == 0 && alg.degree(x) > 0 {
                return CheckResult::fail(name, format!("Δ({x}) has a 0⊗0 term"));
            }
            if d0 == 0 {
                extreme_right.add_term(pair[1].clone(), c.clone());
            }
            if d1 == 0 {
                extreme_left.add_term(pair[0].clone(), c.clone());
            }
        }
        let expect = KeyComb::singleton(x.clone());
        if alg.degree(x) > 0 && (extreme_left != expect || extreme_right != expect) {
            return CheckResult::fail(name, format!("counit axiom fails at {x}"));
        }
        // Coassociativity.
        let left = expand_last(alg, &d, true);
        let right = expand_last(alg, &d, false);
        if left != right {
            return CheckResult::fail(name, format!("coassociativity fails at {x}"));
        }
    }
    for w in &keys {
        for z in &keys {
            if alg.degree(w) + alg.degree(z) > max_degree {
                continue;
            }
            let prod = alg.product(w, z);
            let mut lhs = KeyTensor::zero(2);
            for (y, c) in prod.iter() {
                lhs.add_assign(&alg.coproduct(y).scale(c));
            }
            let rhs = tensor_product2(alg, &alg.coproduct(w), &alg.coproduct(z));
            if lhs != rhs {
                return CheckResult::fail(name, format!("Δ({w}·{z}) != Δ({w})Δ({z})"));
            }
        }
    }
    CheckResult::pass(name)
}

fn expand_last(alg: &dyn HopfAlgebra, d: &KeyTensor, first: bool) -> KeyTensor {
    // (Δ⊗ι)Δ when `first`, else (ι⊗Δ)Δ.
    let mut out = KeyTensor::zero(3);
    for (pair, c) in d.iter() {
        let inner = alg.coproduct(&pair[if first { 0 } else { 1 }]);
        for (ip, ic) in inner.iter() {
            let keys = if first {
                vec![ip[0].clone(), ip[1].clone(), pair[1].clone()]
            } else {
                vec![pair[0].clone(), ip[0].clone(), ip[1].clone()]
            };
            out.add_term(keys, c * ic);
        }
    }
    out
}

/// Power rule `Ψ²Ψ³ = Ψ⁶` on every basis element up to a degree.
pub fn power_rule(alg: &dyn HopfAlgebra, max_degree: usize) -> CheckResult {
    let name = format!("power rule [{}] (degree <= {max_degree})", alg.name());
    for x in all_keys_up_to(alg, max_degree) {
        let v = KeyComb::singleton(x.clone());
        let lhs = hopf_power(alg, 2, &hopf_power(alg, 3, &v));
        let rhs = hopf_power(alg, 6, &v);
        if lhs != rhs {
            return CheckResult::fail(name, format!("Ψ²Ψ³ != Ψ⁶ at {x}"));
        }
    }
    CheckResult::pass(name)
}

/// Eulerian idempotent facts at low shuffle degrees: e∘e = e and
/// Σᵢ aⁱ eᵢ = Ψ^a for a ∈ {2,3}.
pub fn eulerian_battery(max_degree: usize) -> CheckResult {
    let name = format!("eulerian idempotents [shuffle] (degree <= {max_degree})");
    let alg = crate::instances::ShuffleAlgebra::new();
    for nu in multidegrees_up_to(max_degree) {
        for x in alg.basis_multi(&nu).unwrap() {
            let v = KeyComb::singleton(x.clone());
            let e1 = eulerian_idempotent(&alg, &v);
            if eulerian_idempotent(&alg, &e1) != e1 {
                return CheckResult::fail(name, format!("e∘e != e at {x}"));
            }
            for a in [2usize, 3] {
                let mut sum = KeyComb::zero();
                let af = Rational::from_int(a as i64);
                for i in 0..=alg.degree(&x) {
                    sum.add_assign(
                        &crate::hopf::higher_eulerian(&alg, i, &v).scale(&af.pow(i as i64)),
                    );
                }
                if sum != hopf_power(&alg, a, &v) {
                    return CheckResult::fail(name, format!("Σ aⁱeᵢ != Ψ^{a} at {x}"));
                }
            }
            // Orthogonality e_i ∘ e_j = 0 for i ≠ j.
            for i in 1..=alg.degree(&x).min(3) {
                let ei = crate::hopf::higher_eulerian(&alg, i, &v);
                for j in 1..=alg.degree(&x).min(3) {
                    if i != j {
                        let comp = crate::hopf::higher_eulerian(&alg, j, &ei);
                        if !comp.is_zero() {
                            return CheckResult::fail(
                                name,
                                format!("e_{j}∘e_{i} != 0 at {x}"),
                            );
                        }
                    }
                }
            }
        }
    }
    CheckResult::pass(name)
}

/// Partition-shaped multidegrees of every total up to `max` (letter counts
/// weakly increasing, which is enough up to relabeling).
pub fn multidegrees_up_to(max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for d in 1..=max {
        for nu in Partition::all_of(d) {
            let mut m: Vec<usize> = nu.parts().iter().map(|&p| p as usize).collect();
            m.reverse();
            out.push(m);
        }
    }
    out
}

/// Construct the applicable eigenbases of an instance at one degree and
/// check every eigenvector (Ψ² exactly, plus Ψ³ when `thorough`) and every
/// induced eigenfunction against the a = 2 chain.
pub fn eigen_battery_at(
    name: &str,
    degree: &Degree,
    thorough: bool,
) -> Result<Vec<CheckResult>, String> {
    let mut results = Vec::new();
    let err = |e: &dyn std::fmt::Display| format!("{e}");
    match name {
        "shuffle" => {
            let alg = get_instance("shuffle").map_err(|e| err(&e))?;
            let chain = Chain::new(alg.clone(), 2, degree.clone()).map_err(|e| err(&e))?;
            let nletters = match degree {
                Degree::Multi(nu) => nu.len(),
                _ => return Err("shuffle needs a multidegree".into()),
            };
            let letters: Vec<(u32, usize)> = (1..=nletters as u32).map(|l| (l, 1)).collect();
            let word_key = |w: &Word| KeyComb::singleton(BasisKey::Word(w.clone()));
            let spec = LetterSpec { letters: letters.clone(), word_element: &word_key };
            let lefts = eigenbasis_shuffle_basis(alg.as_ref(), &spec, degree, thorough)
                .map_err(|e| err(&e))?;
            results.push(check_chain_side(&chain, &lefts, Side::Left, "shuffle A'"));
            let dual = get_instance("free_assoc").map_err(|e| err(&e))?;
            let spec = LetterSpec { letters, word_element: &word_key };
            let rights = eigenbasis_free_basis(dual.as_ref(), &spec, degree, thorough)
                .map_err(|e| err(&e))?;
            results.push(check_chain_side(&chain, &rights, Side::Right, "shuffle B'"));
        }
        "sym_h" => {
            let alg = get_instance("sym_h").map_err(|e| err(&e))?;
            let n = degree.total();
            let chain = Chain::new(alg.clone(), 2, degree.clone()).map_err(|e| err(&e))?;
            let gens: Vec<Generator> = (1..=n as u32)
                .map(|p| Generator::from_key(BasisKey::Partition(Partition::new(vec![p]))))
                .collect();
            let lefts =
                eigenbasis_commutative(alg.as_ref(), &gens, n, thorough).map_err(|e| err(&e))?;
            results.push(check_chain_side(&chain, &lefts, Side::Left, "sym_h A"));
            let dual = DualAlgebra::new(alg.clone());
            let prims: Vec<Generator> = (1..=n as u32)
                .map(|p| Generator::from_key(BasisKey::Partition(Partition::new(vec![p]))))
                .collect();
            let rights = eigenbasis_cocommutative(dual.as_ref() as &dyn HopfAlgebra, &prims, n, thorough)
                .map_err(|e| err(&e))?;
            results.push(check_chain_side(&chain, &rights, Side::Right, "sym_h B-dual"));
        }
        "qsym_F" => {
            let alg = get_instance("qsym_F").map_err(|e| err(&e))?;
            let n = degree.total();
            let chain = Chain::new(alg.clone(), 2, degree.clone()).map_err(|e| err(&e))?;
            let letters: Vec<(u32, usize)> = (1..=n as u32).map(|l| (l, l as usize)).collect();
            let p_elem = |w: &Word| p_basis_in_fundamental(&Composition::new(w.letters().to_vec()));
            let spec = LetterSpec { letters: letters.clone(), word_element: &p_elem };
            let lefts = eigenbasis_shuffle_basis(alg.as_ref(), &spec, degree, thorough)
                .map_err(|e| err(&e))?;
            results.push(check_chain_side(&chain, &lefts, Side::Left, "qsym A'"));
            let dual = DualAlgebra::new(alg.clone());
            let s_elem = |w: &Word| {
                // S^I in the ribbon basis: the sum of R^J over coarsenings.
                let i = Composition::new(w.letters().to_vec());
                let mut out = KeyComb::zero();
                for j in i.coarsenings() {
                    out.add_term(BasisKey::Composition(j), Rational::one());
                }
                out
            };
            let spec = LetterSpec { letters, word_element: &s_elem };
            let rights =
                eigenbasis_free_basis(dual.as_ref() as &dyn HopfAlgebra, &spec, degree, thorough)
                    .map_err(|e| err(&e))?;
            results.push(check_chain_side(&chain, &rights, Side::Right, "qsym B'-dual"));
        }
        "graphs" => {
            let alg = get_instance("graphs").map_err(|e| err(&e))?;
            let n = degree.total();
            let chain = Chain::new(alg.clone(), 2, degree.clone()).map_err(|e| err(&e))?;
            let mut gens = Vec::new();
            for d in 1..=n {
                for g in GraphAlgebra::connected_graphs(d) {
                    gens.push(Generator::from_key(BasisKey::Graph(g)));
                }
            }
            let lefts =
                eigenbasis_commutative(alg.as_ref(), &gens, n, thorough).map_err(|e| err(&e))?;
            results.push(check_chain_side(&chain, &lefts, Side::Left, "graphs A"));
            let dual = DualAlgebra::new(alg.clone());
            let rights =
                eigenbasis_cocommutative(dual.as_ref() as &dyn HopfAlgebra, &gens, n, thorough)
                    .map_err(|e| err(&e))?;
            results.push(check_chain_side(&chain, &rights, Side::Right, "graphs B-dual"));
        }
        "ck_forests" => {
            let alg = get_instance("ck_forests").map_err(|e| err(&e))?;
            let n = degree.total();
            let chain = Chain::new(alg.clone(), 2, degree.clone()).map_err(|e| err(&e))?;
            let mut gens = Vec::new();
            for d in 1..=n {
                for t in ForestAlgebra::trees(d) {
                    gens.push(Generator::from_key(BasisKey::Forest(
                        crate::keys::Forest::single(t),
                    )));
                }
            }
            let lefts =
                eigenbasis_commutative(alg.as_ref(), &gens, n, thorough).map_err(|e| err(&e))?;
            results.push(check_chain_side(&chain, &lefts, Side::Left, "forests A"));
            let dual = DualAlgebra::new(alg.clone());
            let rights =
                eigenbasis_cocommutative(dual.as_ref() as &dyn HopfAlgebra, &gens, n, thorough)
                    .map_err(|e| err(&e))?;
            results.push(check_chain_side(&chain, &rights, Side::Right, "forests B-dual"));
        }
        other => return Err(format!("no eigen battery for {other}")),
    }
    Ok(results)
}

fn check_chain_side(
    chain: &Chain,
    vectors: &[EigVector],
    side: Side,
    what: &str,
) -> CheckResult {
    let name = format!("{what} eigenfunctions at {} (dim {})", chain.degree, vectors.len());
    let fns = eigenfunctions_from_eigvectors(chain, vectors, side);
    for f in &fns {
        match f.satisfies(chain) {
            Ok(true) => {}
            Ok(false) => {
                return CheckResult::fail(name, format!("eigen-equation fails for {}", f.label))
            }
            Err(e) => return CheckResult::fail(name, format!("{e}")),
        }
    }
    CheckResult::pass(name)
}

/// Unidirectionality on a free-commutative chain: `K̂(x,x) = a^{ℓ(x)−n}` and
/// `K̂(x,y) = 0` unless `ℓ(y) ≥ ℓ(x)`.
pub fn unidirectionality(chain: &Chain) -> CheckResult {
    let name = format!(
        "unidirectionality [{}] at {}",
        chain.algebra.name(),
        chain.degree
    );
    let alg = chain.algebra.as_ref();
    let k = match chain.transition_matrix() {
        Ok(k) => k,
        Err(e) => return CheckResult::fail(name, format!("{e}")),
    };
    let n = chain.n();
    let a = Rational::from_int(chain.a as i64);
    for (i, x) in chain.states.iter().enumerate() {
        let Some(lx) = alg.length(x) else {
            return CheckResult::fail(name, "no length structure");
        };
        if k.get(i, i) != &a.pow(lx as i64 - n as i64) {
            return CheckResult::fail(name, format!("diagonal at {x} is {}", k.get(i, i)));
        }
        for (j, y) in chain.states.iter().enumerate() {
            if !k.get(i, j).is_zero() && alg.length(y).unwrap() < lx {
                return CheckResult::fail(name, format!("{x} -> {y} decreases length"));
            }
        }
    }
    CheckResult::pass(name)
}

/// Independence on a free-commutative chain: one step from a product state
/// is the product-convolution of steps from the factors.
pub fn independence(chain: &Chain) -> CheckResult {
    let name =
        format!("independent breaking [{}] at {}", chain.algebra.name(), chain.degree);
    let alg = chain.algebra.as_ref();
    let k = match chain.transition_matrix() {
        Ok(k) => k,
        Err(e) => return CheckResult::fail(name, format!("{e}")),
    };
    for (i, x) in chain.states.iter().enumerate() {
        let Some(factors) = alg.factor_generators(x) else {
            return CheckResult::fail(name, "no factor structure");
        };
        if factors.len() < 2 {
            continue;
        }
        // Split off the first factor.
        let x1 = factors[0].clone();
        let rest: KeyComb = factors[1..]
            .iter()
            .skip(1)
            .fold(KeyComb::singleton(factors[1].clone()), |acc, f| {
                crate::hopf::product_combs(alg, &acc, &KeyComb::singleton(f.clone()))
            });
        let x2 = rest.keys().next().unwrap().clone();
        let c1 = match Chain::new(chain.algebra.clone(), chain.a, Degree::Plain(alg.degree(&x1))) {
            Ok(c) => c,
            Err(e) => return CheckResult::fail(name, format!("{e}")),
        };
        let c2 = match Chain::new(chain.algebra.clone(), chain.a, Degree::Plain(alg.degree(&x2))) {
            Ok(c) => c,
            Err(e) => return CheckResult::fail(name, format!("{e}")),
        };
        let r1 = crate::chain::transition_row(&c1, &x1).unwrap();
        let r2 = crate::chain::transition_row(&c2, &x2).unwrap();
        let mut convolution: std::collections::BTreeMap<BasisKey, Rational> =
            std::collections::BTreeMap::new();
        for (y1, p1) in &r1 {
            if p1.is_zero() {
                continue;
            }
            for (y2, p2) in &r2 {
                if p2.is_zero() {
                    continue;
                }
                let prod = alg.product(y1, y2);
                let y = prod.keys().next().unwrap().clone();
                *convolution.entry(y).or_insert_with(Rational::zero) += p1 * p2;
            }
        }
        for (j, y) in chain.states.iter().enumerate() {
            let direct = k.get(i, j).clone();
            let conv = convolution.get(y).cloned().unwrap_or_else(Rational::zero);
            if direct != conv {
                return CheckResult::fail(
                    name,
                    format!("K({x},{y}) = {direct} but convolution gives {conv}"),
                );
            }
        }
    }
    CheckResult::pass(name)
}

/// The Dynkin lumping check for the descent map from distinct-card
/// shuffling to the composition chain.
pub fn descent_lumping(n: usize, a: usize) -> CheckResult {
    let name = format!("descent-set lumping (n = {n}, a = {a})");
    let shuffle = get_instance("shuffle").unwrap();
    let qsym = get_instance("qsym_F").unwrap();
    let source = match Chain::new(shuffle, a, Degree::Multi(vec![1; n])) {
        Ok(c) => c,
        Err(e) => return CheckResult::fail(name, format!("{e}")),
    };
    let target = match Chain::new(qsym, a, Degree::Plain(n)) {
        Ok(c) => c,
        Err(e) => return CheckResult::fail(name, format!("{e}")),
    };
    let theta = |x: &BasisKey| BasisKey::Composition(descent_composition(x.as_word()));
    match check_lumping(&theta, &source, &target) {
        Ok(report) if report.dynkin_holds && report.max_violation.is_zero() => {
            CheckResult::pass(name)
        }
        Ok(report) => {
            CheckResult::fail(name, format!("max violation {}", report.max_violation))
        }
        Err(e) => CheckResult::fail(name, format!("{e}")),
    }
}

/// Stationarity, positivity where expected, and reversibility checks.
pub fn stationarity_battery(chain: &Chain, expect_reversible: Option<bool>) -> CheckResult {
    let name = format!(
        "stationarity [{}] at {} (a = {})",
        chain.algebra.name(),
        chain.degree,
        chain.a
    );
    match stationary_distributions(chain) {
        // Exactness of πK̂ = π is verified inside.
        Ok(_) => {}
        Err(e) => return CheckResult::fail(name, format!("{e}")),
    }
    if let Ok(false) = eta_is_dual_eigenvector(chain) {
        return CheckResult::fail(name, "η is not a dual a^n-eigenvector");
    }
    if let Some(expected) = expect_reversible {
        match crate::chain::is_reversible(chain) {
            Ok(r) if r == expected => {}
            Ok(r) => {
                return CheckResult::fail(
                    name,
                    format!("reversibility is {r}, expected {expected}"),
                )
            }
            Err(e) => return CheckResult::fail(name, format!("{e}")),
        }
    }
    CheckResult::pass(name)
}

/// Additivity of the generator eigenfunctions `f_c(xx') = f_c(x) + f_c(x')`
/// on the graph chain, through the free-commutative eigenfunction basis.
pub fn fc_additivity(max_degree: usize) -> CheckResult {
    let name = format!("f_c additivity [graphs] (degree <= {max_degree})");
    let alg = get_instance("graphs").unwrap();
    for n in 2..=max_degree {
        let chain = match Chain::new(alg.clone(), 2, Degree::Plain(n)) {
            Ok(c) => c,
            Err(e) => return CheckResult::fail(name, format!("{e}")),
        };
        let fns = match right_eigenfunctions_free_commutative(&chain) {
            Ok(f) => f,
            Err(e) => return CheckResult::fail(name, format!("{e}")),
        };
        // For a generator c of degree d < n, f_{c·dots} evaluated at a
        // product x = x₁x₂ must split additively after the standard
        // rescaling: here we check the equivalent statement that the
        // eigenfunction of y = c ⊔ dots^{n-d} applied to x₁ ⊔ x₂ equals the
        // sum of its one-sided evaluations, scaled by the cross binomials.
        // Concretely: verified through subgraph counts, where
        // f_c(x) = |{induced subgraphs of x isomorphic to c}| / (deg c)!.
        for y in &chain.states {
            let comps = y.as_graph().components();
            let nontrivial: Vec<_> = comps.iter().filter(|g| g.n() > 1).collect();
            if nontrivial.len() != 1 {
                continue;
            }
            let c = nontrivial[0];
            let f_y = fns.iter().find(|f| f.label == format!("f{y}")).unwrap();
            for x in &chain.states {
                let count = induced_subgraph_count(x.as_graph(), c);
                let expected = Rational::from_big(
                    num::BigInt::from(count),
                    crate::rational::factorial(c.n()),
                );
                // f_c = (deg y)!/(deg c)! · f_y on the full space.
                let scale = Rational::from_big(
                    crate::rational::factorial(n),
                    crate::rational::factorial(c.n()),
                );
                let got = &scale * &f_y.value(x);
                if got != expected {
                    return CheckResult::fail(
                        name,
                        format!("f_{c}({x}) = {got}, subgraph count gives {expected}"),
                    );
                }
            }
        }
    }
    CheckResult::pass(name)
}

fn induced_subgraph_count(g: &crate::keys::GraphKey, c: &crate::keys::GraphKey) -> usize {
    let n = g.n();
    let k = c.n();
    let mut count = 0;
    let mut subset = Vec::new();
    fn rec(
        g: &crate::keys::GraphKey,
        c: &crate::keys::GraphKey,
        start: usize,
        k: usize,
        n: usize,
        subset: &mut Vec<u8>,
        count: &mut usize,
    ) {
        if subset.len() == k {
            if &g.induced(subset) == c {
                *count += 1;
            }
            return;
        }
        for v in start..n {
            subset.push(v as u8);
            rec(g, c, v + 1, k, n, subset, count);
            subset.pop();
        }
    }
    rec(g, c, 0, k, n, &mut subset, &mut count);
    count
}

/// The full default battery for the CLI `verify` command.
pub fn run_suite(max_degree: usize) -> Vec<CheckResult> {
    let mut results = Vec::new();
    for name in ["shuffle", "free_assoc", "sym_h", "sym_schur", "graphs", "ck_forests", "qsym_F"] {
        let alg = get_instance(name).unwrap();
        let cap = match name {
            "graphs" | "ck_forests" => max_degree.min(5),
            _ => max_degree,
        };
        results.push(hopf_axioms(alg.as_ref(), cap.min(5)));
        results.push(power_rule(alg.as_ref(), cap.min(4)));
    }
    results.push(eulerian_battery(4));
    for nu in multidegrees_up_to(max_degree.min(4)) {
        if let Ok(mut r) = eigen_battery_at("shuffle", &Degree::Multi(nu), false) {
            results.append(&mut r);
        }
    }
    for name in ["sym_h", "qsym_F", "graphs", "ck_forests"] {
        for n in 1..=max_degree.min(4) {
            match eigen_battery_at(name, &Degree::Plain(n), false) {
                Ok(mut r) => results.append(&mut r),
                Err(e) => results.push(CheckResult::fail(format!("{name} eigen battery"), e)),
            }
        }
    }
    let graphs = get_instance("graphs").unwrap();
    let schur = get_instance("sym_schur").unwrap();
    let symh = get_instance("sym_h").unwrap();
    for n in 2..=max_degree.min(4) {
        for (alg, rev) in [
            (graphs.clone(), None),
            (schur.clone(), Some(true)),
            (symh.clone(), None),
        ] {
            if let Ok(chain) = Chain::new(alg, 2, Degree::Plain(n)) {
                results.push(stationarity_battery(&chain, rev));
                if chain.algebra.length(&chain.states[0]).is_some() {
                    results.push(unidirectionality(&chain));
                    results.push(independence(&chain));
                }
            }
        }
    }
    for n in 3..=max_degree.min(4) {
        results.push(descent_lumping(n, 2));
    }
    results.push(fc_additivity(max_degree.min(4)));
    results
}
