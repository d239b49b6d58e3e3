//! Closed-form eigenfunctions and probability formulas for the four worked
//! chains: rock-breaking (partitions), tree-pruning (rooted forests),
//! riffle-shuffling (words), and the descent-set chain (compositions).
//! Everything here is exact and cross-checked in tests against the generic
//! spectral machinery.

use crate::chain::{Chain, ChainError, EigFunction};
use crate::hopf::{eulerian_idempotent, product_combs};
use crate::instances::{p_basis_in_fundamental, QSymF};
use crate::keys::{BasisKey, Forest, Partition, Tree};
use crate::lincomb::KeyComb;
use crate::rational::{binomial, factorial, multinomial, Rational};
use crate::words::{
    ascents, descents, inversions, peaks, shuffle_right_eigenfunction, valleys, Composition, Word,
};
use num::BigInt;
use std::collections::BTreeSet;

/// All ways to distribute the parts of `fine` into `coarse.num_parts()`
/// groups so that group j sums to the j-th part of `coarse`; each group is
/// returned as a partition. Distinct distributions only.
pub fn part_distributions(fine: &Partition, coarse: &Partition) -> Vec<Vec<Partition>> {
    if fine.size() != coarse.size() {
        return Vec::new();
    }
    let targets: Vec<u32> = coarse.parts().to_vec();
    let parts: Vec<u32> = fine.parts().to_vec();
    let mut results: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    fn rec(
        parts: &[u32],
        idx: usize,
        groups: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<u32>,
        results: &mut BTreeSet<Vec<Vec<u32>>>,
    ) {
        if idx == parts.len() {
            if remaining.iter().all(|&r| r == 0) {
                let mut sorted: Vec<Vec<u32>> = groups.clone();
                for g in &mut sorted {
                    g.sort_unstable_by(|a, b| b.cmp(a));
                }
                results.insert(sorted);
            }
            return;
        }
        let p = parts[idx];
        for g in 0..groups.len() {
            if remaining[g] >= p {
                groups[g].push(p);
                remaining[g] -= p;
                rec(parts, idx + 1, groups, remaining, results);
                groups[g].pop();
                remaining[g] += p;
            }
        }
    }
    let mut groups: Vec<Vec<u32>> = targets.iter().map(|_| Vec::new()).collect();
    let mut remaining = targets;
    rec(&parts, 0, &mut groups, &mut remaining, &mut results);
    results
        .into_iter()
        .map(|gs| gs.into_iter().map(Partition::new).collect())
        .collect()
}

/// Right eigenfunction of rock-breaking:
/// `f_μ(λ) = multinomial(λ)^{-1} Σ ∏_j 1/Z(μ^j)` over distributions of the
/// parts of μ into groups summing to the parts of λ. Zero unless μ refines λ.
pub fn rock_f(mu: &Partition, lambda: &Partition) -> Rational {
    assert_eq!(mu.size(), lambda.size(), "rock_f needs |μ| = |λ|");
    let mut total = Rational::zero();
    for groups in part_distributions(mu, lambda) {
        let mut term = Rational::one();
        for g in &groups {
            term = term * Rational::from_bigint(g.stabilizer_size()).recip();
        }
        total += term;
    }
    &total / &Rational::from_bigint(lambda.multinomial())
}

/// Left eigenfunction of rock-breaking:
/// `g_μ(λ) = (−1)^{ℓ(μ)−ℓ(λ)} multinomial(λ) Σ ∏_j (ℓ(λ^j)−1)!/Z(λ^j)` over
/// distributions of the parts of λ into groups summing to the parts of μ.
pub fn rock_g(mu: &Partition, lambda: &Partition) -> Rational {
    assert_eq!(mu.size(), lambda.size(), "rock_g needs |μ| = |λ|");
    let mut total = Rational::zero();
    for groups in part_distributions(lambda, mu) {
        let mut term = Rational::one();
        for g in &groups {
            let num = factorial(g.num_parts() - 1);
            term = term * Rational::from_big(num, g.stabilizer_size());
        }
        total += term;
    }
    let sign = if (mu.num_parts() + lambda.num_parts()) % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    };
    &(&sign * &Rational::from_bigint(lambda.multinomial())) * &total
}

/// A rooted forest with distinguishable vertices, for subtree bookkeeping.
pub struct LabeledForest {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    pub roots: Vec<usize>,
}

impl LabeledForest {
    pub fn from_forest(f: &Forest) -> LabeledForest {
        let mut lf = LabeledForest { parent: Vec::new(), children: Vec::new(), roots: Vec::new() };
        fn add(lf: &mut LabeledForest, t: &Tree, parent: Option<usize>) -> usize {
            let id = lf.parent.len();
            lf.parent.push(parent);
            lf.children.push(Vec::new());
            for c in t.children() {
                let cid = add(lf, c, Some(id));
                lf.children[id].push(cid);
            }
            id
        }
        for t in f.trees() {
            let rid = add(&mut lf, t, None);
            lf.roots.push(rid);
        }
        lf
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of descendants of v, including v.
    pub fn desc_count(&self, v: usize) -> usize {
        1 + self.children[v].iter().map(|&c| self.desc_count(c)).sum::<usize>()
    }

    /// Ancestors of v including v, up to the component root.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            out.push(p);
            cur = p;
        }
        out
    }

    /// The canonical tree on a vertex subset that is connected (the unique
    /// minimal-depth vertex is its root).
    pub fn subtree_shape(&self, subset: &BTreeSet<usize>, root: usize) -> Tree {
        let children: Vec<Tree> = self.children[root]
            .iter()
            .filter(|c| subset.contains(c))
            .map(|&c| self.subtree_shape(subset, c))
            .collect();
        Tree::node(children)
    }

    /// All connected vertex subsets of a given size, each tagged with its
    /// root (its unique vertex whose parent is outside the subset).
    pub fn connected_subsets(&self, size: usize) -> Vec<(usize, BTreeSet<usize>)> {
        let mut out = Vec::new();
        for root in 0..self.len() {
            // Connected subsets containing `root` within its own subtree.
            let mut partials: Vec<BTreeSet<usize>> =
                vec![[root].into_iter().collect::<BTreeSet<usize>>()];
            // Grow by repeatedly attaching children of included vertices.
            let mut results: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
            while let Some(s) = partials.pop() {
                if s.len() == size {
                    results.insert(s);
                    continue;
                }
                // Frontier: children of members not yet in s.
                let frontier: Vec<usize> = s
                    .iter()
                    .flat_map(|&v| self.children[v].iter().cloned())
                    .filter(|c| !s.contains(c))
                    .collect();
                for c in frontier {
                    let mut s2 = s.clone();
                    s2.insert(c);
                    partials.push(s2);
                }
            }
            for s in results {
                out.push((root, s));
            }
        }
        out
    }
}

/// Tree factorial `T! = ∏_{v∈T} desc_T(v)`; panics on non-tree forests.
pub fn tree_factorial(t: &Tree) -> BigInt {
    let mut total = BigInt::from(1);
    fn rec(t: &Tree, total: &mut BigInt) -> usize {
        let mut size = 1usize;
        for c in t.children() {
            size += rec(c, total);
        }
        *total *= BigInt::from(size);
        size
    }
    rec(t, &mut total);
    total
}

/// The hook-length form of the rescaling function on a tree:
/// `η(T) = deg(T)!/T!`, extended multiplicatively to forests.
pub fn forest_eta_hook(f: &Forest) -> Rational {
    let mut acc = Rational::one();
    for t in f.trees() {
        acc = acc * Rational::from_big(factorial(t.degree()), tree_factorial(t));
    }
    // Interleave the component breakings.
    let parts: Vec<usize> = f.trees().iter().map(|t| t.degree()).collect();
    acc * Rational::from_bigint(multinomial(&parts))
}

/// The right eigenfunction `f_C` of tree-pruning, for a tree `C ≠ •`:
/// a weighted count of the subtrees of `T` isomorphic to `C`, additive over
/// forest components. Eigenvalue `a^{1−deg C}`.
pub fn tree_fc(c: &Tree, t: &Forest) -> Rational {
    assert!(c.degree() >= 2, "f_C needs deg C >= 2");
    let lf = LabeledForest::from_forest(t);
    let deg_c = c.degree();
    let mut total = Rational::zero();
    for (root, subset) in lf.connected_subsets(deg_c) {
        if &lf.subtree_shape(&subset, root) != c {
            continue;
        }
        let mut term = Rational::one();
        for v in lf.ancestors(root) {
            let d = lf.desc_count(v) as i64;
            term = term * Rational::new(d, d - deg_c as i64 + 1);
        }
        for &v in &subset {
            if v != root {
                term = term * Rational::from_int(lf.desc_count(v) as i64);
            }
        }
        total += term;
    }
    &total / &Rational::from_bigint(factorial(deg_c))
}

/// Number of subtrees of `T` isomorphic to `C` (any root).
pub fn subtree_count(c: &Tree, t: &Forest) -> usize {
    let lf = LabeledForest::from_forest(t);
    lf.connected_subsets(c.degree())
        .into_iter()
        .filter(|(root, subset)| &lf.subtree_shape(subset, *root) == c)
        .count()
}

/// Named statistics on decks that are one-step eigenfunctions of shuffling.
#[derive(Clone, Debug)]
pub enum ShuffleStatistic {
    /// `asc(w) − des(w)`; right eigenfunction of eigenvalue 1/a.
    Descents,
    /// `peak(w) − vall(w)`; right eigenfunction of eigenvalue a^{-2}.
    PeaksMinusValleys,
    /// `½C(|ν|,2) − ½ΣᵢC(νᵢ,2) − inv(w)`; left eigenfunction of eigenvalue 1/a.
    InversionsLeft,
    /// Σ of the hedgerow eigenfunction of `u` over consecutive subwords of
    /// matching letter content; right eigenfunction of eigenvalue a^{1−|u|}.
    Pattern(Word),
}

pub fn shuffle_statistic_eigenfunction(kind: &ShuffleStatistic, w: &Word) -> Rational {
    match kind {
        ShuffleStatistic::Descents => {
            Rational::from_int(ascents(w) as i64 - descents(w) as i64)
        }
        ShuffleStatistic::PeaksMinusValleys => {
            Rational::from_int(peaks(w) as i64 - valleys(w) as i64)
        }
        ShuffleStatistic::InversionsLeft => {
            let nu = w.multidegree();
            let total = binomial(w.len(), 2);
            let same: BigInt = nu.iter().map(|&c| binomial(c, 2)).sum();
            let half = Rational::new(1, 2);
            &(&half * &Rational::from_bigint(total - same))
                - &Rational::from_int(inversions(w) as i64)
        }
        ShuffleStatistic::Pattern(u) => {
            let mut target = u.letters().to_vec();
            target.sort_unstable();
            let lu = u.len();
            let mut total = Rational::zero();
            if w.len() >= lu {
                for start in 0..=(w.len() - lu) {
                    let sub = Word::new(w.letters()[start..start + lu].to_vec());
                    if sub.sorted_letters() == target {
                        total += shuffle_right_eigenfunction(u, &sub);
                    }
                }
            }
            total
        }
    }
}

/// Expected number of descents after m a-handed shuffles of n distinct,
/// initially ascending cards: `(1 − a^{−m})·(n−1)/2`.
pub fn expected_descents_from_ascending(n: usize, a: usize, m: usize) -> Rational {
    let decay = Rational::from_int(a as i64).pow(m as i64).recip();
    &(&Rational::one() - &decay) * &Rational::new(n as i64 - 1, 2)
}

/// Expected number of peaks after m a-handed shuffles of n distinct,
/// initially ascending cards: `(1 − a^{−2m})·(n−2)/3`.
pub fn expected_peaks_from_ascending(n: usize, a: usize, m: usize) -> Rational {
    let decay = Rational::from_int(a as i64).pow(2 * m as i64).recip();
    &(&Rational::one() - &decay) * &Rational::new(n as i64 - 2, 3)
}

/// The building block of the descent-chain right eigenfunctions:
/// `f(J) = (1/|J|) · (−1)^{ℓ(J)−1} / C(|J|−1, ℓ(J)−1)`.
pub fn ribbon_weight(j: &Composition) -> Rational {
    let n = j.size();
    let l = j.num_parts();
    let sign = if (l - 1) % 2 == 0 { Rational::one() } else { -Rational::one() };
    &sign / &Rational::from_bigint(BigInt::from(n) * binomial(n - 1, l - 1))
}

/// The partition-indexed right eigenfunction in its product form:
/// `f_I(J) = (1/ℓ(I)!) Σ_{I': λ(I')=λ(I)} ∏_r f(J_r)`, splitting the diagram
/// of J into pieces sized by I'. Agrees with [`qsym_right_f`] on partitions.
pub fn qsym_right_f_partition(i: &Partition, j: &Composition) -> Rational {
    assert_eq!(i.size(), j.size(), "needs |I| = |J|");
    let comp = i.as_composition();
    let mut total = Rational::zero();
    for arrangement in crate::words::multiset_permutations(comp.parts()) {
        let i_prime = Composition::new(arrangement);
        let mut term = Rational::one();
        for jr in j.decompose_relative(&i_prime) {
            term = term * ribbon_weight(&jr);
        }
        total += term;
    }
    &total / &Rational::from_bigint(factorial(i.num_parts()))
}

/// Right eigenfunction of the descent-set chain:
/// `f_I(J) = (1/∏ i_r) Σ_{I': λ(I')=λ(I)} f^Sh_I(I') ∏_r (−1)^{ℓ(J_r)−1}/C(|J_r|−1, ℓ(J_r)−1)`,
/// where `(J_r)` is the decomposition of J relative to I'. For partitions I
/// this reduces to the `1/ℓ(I)!`-scaled product formula whose values are the
/// descent-algebra idempotent coefficients.
pub fn qsym_right_f(i: &Composition, j: &Composition) -> Rational {
    assert_eq!(i.size(), j.size(), "qsym_right_f needs |I| = |J|");
    let word = i.as_word();
    let mut total = Rational::zero();
    for arrangement in crate::words::multiset_permutations(i.parts()) {
        let i_prime = Composition::new(arrangement);
        let fsh = shuffle_right_eigenfunction(&word, &i_prime.as_word());
        if fsh.is_zero() {
            continue;
        }
        let mut term = fsh;
        for jr in j.decompose_relative(&i_prime) {
            let l = jr.num_parts();
            let sign = if (l - 1) % 2 == 0 { Rational::one() } else { -Rational::one() };
            term = term * (&sign / &Rational::from_bigint(binomial(jr.size() - 1, l - 1)));
        }
        total += term;
    }
    let mut denom = BigInt::from(1);
    for &p in i.parts() {
        denom *= BigInt::from(p);
    }
    &total / &Rational::from_bigint(denom)
}

/// The fillings of the ribbon shape of `j` with content `mu` (all copies of
/// each value in adjacent cells, rows and columns weakly increasing), summed
/// with weight `(−1)^{Σ_r (l_r − 1)}` where `l_r` counts the rows containing
/// r. This computes the ribbon character `χ^J` at cycle type μ.
pub fn ribbon_character(j: &Composition, mu: &Partition) -> Rational {
    assert_eq!(j.size(), mu.size(), "ribbon character needs |J| = |μ|");
    let n = j.size();
    // Walk the ribbon from the bottom-left cell: within a row move right,
    // between rows move up. Row index of each cell, and step type into the
    // next cell.
    let mut row_of = Vec::with_capacity(n);
    let mut step_up = Vec::with_capacity(n.saturating_sub(1)); // step i -> i+1
    for (r, &part) in j.parts().iter().enumerate() {
        for c in 0..part {
            row_of.push(r);
            if !(r + 1 == j.num_parts() && c + 1 == part) {
                step_up.push(c + 1 == part);
            }
        }
    }
    let values = mu.parts().len();
    let mut counts: Vec<u32> = mu.parts().to_vec();
    // DFS over cells; contiguity means a value other than the previous one
    // must be brand new.
    fn rec(
        pos: usize,
        n: usize,
        prev: usize,
        used: u64,
        counts: &mut Vec<u32>,
        row_of: &[usize],
        step_up: &[bool],
        rows_touched: &mut Vec<BTreeSet<usize>>,
        total: &mut i64,
    ) {
        if pos == n {
            let mut sign_exp = 0usize;
            for rows in rows_touched.iter() {
                sign_exp += rows.len() - 1;
            }
            *total += if sign_exp % 2 == 0 { 1 } else { -1 };
            return;
        }
        let nvals = counts.len();
        for v in 0..nvals {
            if counts[v] == 0 {
                continue;
            }
            if pos > 0 {
                let up = step_up[pos - 1];
                if v == prev {
                    // same value continues; fine on both step types
                } else if used >> v & 1 == 1 {
                    continue; // contiguity broken
                } else if up {
                    // column weakly increasing downward: upper cell ≤ lower
                    if v > prev {
                        continue;
                    }
                } else {
                    // row weakly increasing: next ≥ prev, and v ≠ prev
                    if v < prev {
                        continue;
                    }
                }
            }
            counts[v] -= 1;
            let newly = rows_touched[v].insert(row_of[pos]);
            rec(pos + 1, n, v, used | 1 << v, counts, row_of, step_up, rows_touched, total);
            if newly {
                rows_touched[v].remove(&row_of[pos]);
            }
            counts[v] += 1;
        }
    }
    let mut rows_touched: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); values];
    let mut total = 0i64;
    rec(0, n, usize::MAX, 0, &mut counts, &row_of, &step_up, &mut rows_touched, &mut total);
    Rational::from_int(total)
}

/// Left eigenfunction of the descent-set chain: for a partition I it is the
/// ribbon character `χ^J(I)`; for general I, the coefficient of `F_J` in
/// `e(P_{I_(1)})…e(P_{I_(k)})` over the Lyndon factors of I.
pub fn qsym_left_g(i: &Composition, j: &Composition) -> Rational {
    assert_eq!(i.size(), j.size(), "qsym_left_g needs |I| = |J|");
    if i.is_partition() {
        return ribbon_character(j, &Partition::new(i.parts().to_vec()));
    }
    qsym_left_g_vector(i).coeff(&BasisKey::Composition(j.clone()))
}

/// The eigenvector `e(P_{I_(1)})…e(P_{I_(k)})` inside the fundamental basis.
pub fn qsym_left_g_vector(i: &Composition) -> KeyComb {
    let alg = QSymF::new();
    let factors = crate::words::lyndon_factorization(&i.as_word());
    let mut acc: Option<KeyComb> = None;
    for u in &factors {
        let p = p_basis_in_fundamental(&Composition::new(u.letters().to_vec()));
        let e = eulerian_idempotent(&alg, &p);
        acc = Some(match acc {
            None => e,
            Some(prev) => product_combs(&alg, &prev, &e),
        });
    }
    acc.expect("composition has at least one Lyndon factor")
}

/// Exact probability that the descent composition is `J` after m a-handed
/// shuffles of n distinct cards starting in ascending order:
/// `(1/n!) Σ_σ a^{m(ℓ(σ)−n)} χ^J(cycle type of σ)`, summed over cycle types
/// with class sizes `n!/(Z(λ)·∏λᵢ)`.
pub fn descent_probability_from_identity(
    n: usize,
    a: usize,
    m: usize,
    j: &Composition,
) -> Rational {
    assert_eq!(j.size(), n, "composition size must be n");
    let base = Rational::from_int(a as i64);
    let mut total = Rational::zero();
    for lambda in Partition::all_of(n) {
        let mut denom = lambda.stabilizer_size();
        for &p in lambda.parts() {
            denom *= BigInt::from(p);
        }
        let class_size = Rational::from_big(factorial(n), denom);
        let beta = base.pow((lambda.num_parts() as i64 - n as i64) * m as i64);
        total += &(&class_size * &beta) * &ribbon_character(j, &lambda);
    }
    &total / &Rational::from_bigint(factorial(n))
}

/// Upper bounds on the probability that a chain on a free-commutative basis
/// can still reach the state `y` after m steps.
#[derive(Debug, Clone)]
pub struct ReachabilityBounds {
    /// `a^{(ℓ(y)−n)m} f_y(x₀) / min_{x→y} f_y(x)`.
    pub from_start: Rational,
    /// Looser integral variant: `a^{(ℓ(y)−n)m} f_y(x₀) · ℓ(y)! · max_{x→y} η(x)`.
    pub from_start_integral: Rational,
    /// Start-independent variant:
    /// `a^{(ℓ(y)−n)m} / (min f_y · Z(y)) · (1/η(y)) · C(n; deg c₁…deg c_ℓ)`.
    pub any_start: Rational,
}

/// Compute the reachability bounds from the eigenfunction `f_y` of the
/// chain's free-commutative structure. Errors when `y` is unreachable.
pub fn reachability_bound(
    chain: &Chain,
    y: &BasisKey,
    x0: &BasisKey,
    m: usize,
    f_y: &EigFunction,
) -> Result<ReachabilityBounds, ChainError> {
    let alg = chain.algebra.as_ref();
    let n = chain.n();
    let l = alg
        .length(y)
        .ok_or_else(|| ChainError::Unsupported("no free-commutative structure".into()))?;
    let decay = Rational::from_int(chain.a as i64).pow((l as i64 - n as i64) * m as i64);
    let reachable: Vec<&BasisKey> =
        chain.states.iter().filter(|x| !f_y.value(x).is_zero()).collect();
    if reachable.is_empty() {
        return Err(ChainError::Unsupported(format!("{y} is unreachable")));
    }
    let min_f = reachable.iter().map(|x| f_y.value(x)).min().unwrap();
    let max_eta = reachable
        .iter()
        .map(|x| chain.etas()[chain.state_index(x).unwrap()].clone())
        .max()
        .unwrap();
    let f_x0 = f_y.value(x0);
    let from_start = &(&decay * &f_x0) / &min_f;
    let from_start_integral =
        &(&decay * &f_x0) * &(&Rational::from_bigint(factorial(l)) * &max_eta);
    let factors = alg.factor_generators(y).unwrap();
    let degs: Vec<usize> = factors.iter().map(|c| alg.degree(c)).collect();
    let z_y = {
        let mut sorted: Vec<BasisKey> = factors.clone();
        sorted.sort();
        let mut z = BigInt::from(1);
        let mut run = 1usize;
        for t in 1..=sorted.len() {
            if t < sorted.len() && sorted[t] == sorted[t - 1] {
                run += 1;
            } else {
                z *= factorial(run);
                run = 1;
            }
        }
        z
    };
    let eta_y = chain.etas()[chain.state_index(y).unwrap()].clone();
    let any_start = &(&decay / &(&min_f * &Rational::from_bigint(z_y)))
        * &(&Rational::from_bigint(multinomial(&degs)) / &eta_y);
    Ok(ReachabilityBounds { from_start, from_start_integral, any_start })
}

/// Rock-breaking expected-count bound: after m steps from λ, the expected
/// number of rocks of size ≥ j is at most `a^{(1−j)m} Σᵢ C(λᵢ, j)`.
pub fn rock_large_piece_bound(lambda: &Partition, j: usize, a: usize, m: usize) -> Rational {
    let decay = Rational::from_int(a as i64).pow((1 - j as i64) * m as i64);
    let count: BigInt = lambda.parts().iter().map(|&p| binomial(p as usize, j)).sum();
    &decay * &Rational::from_bigint(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn rock_f_worked_values() {
        // Distributions of {2,1,1,1} over (3,2): {(2,1),(1,1)} and
        // {(1,1,1),(2)}, giving (1/2 + 1/6)/multinomial(3,2) = 1/15. (The
        // eigen-equation, the n = 4 table, and biorthogonality all pin this
        // value; see the integration tests.)
        assert_eq!(rock_f(&part("(2,1,1,1)"), &part("(3,2)")), Rational::new(1, 15));
        assert_eq!(rock_f(&part("(2,2)"), &part("(4)")), Rational::new(1, 2));
        assert_eq!(rock_f(&part("(4)"), &part("(4)")), Rational::one());
        // Zero unless μ refines λ.
        assert_eq!(rock_f(&part("(3,1)"), &part("(2,2)")), Rational::zero());
    }

    #[test]
    fn rock_g_worked_values() {
        // η((2,1,1,1))·(coefficient of h₍₂,₁,₁,₁₎ in e(h₃)e(h₂)) = 60·5/6.
        assert_eq!(rock_g(&part("(3,2)"), &part("(2,1,1,1)")), Rational::from_int(50));
        // The λ = (4) row of the left eigenfunction table.
        let lam: Vec<(&str, i64)> =
            vec![("(4)", 1), ("(3,1)", -4), ("(2,2)", -3), ("(2,1,1)", 12), ("(1,1,1,1)", -6)];
        for (l, v) in lam {
            assert_eq!(rock_g(&part("(4)"), &part(l)), Rational::from_int(v), "{l}");
        }
        assert_eq!(rock_g(&part("(3,1)"), &part("(2,2)")), Rational::zero());
    }

    #[test]
    fn tree_factorial_values() {
        let t: Forest = "[*[**]]".parse().unwrap();
        assert_eq!(tree_factorial(&t.trees()[0]), BigInt::from(15));
        assert_eq!(tree_factorial(&Tree::leaf()), BigInt::from(1));
        assert_eq!(tree_factorial(&Tree::path(4)), BigInt::from(24));
        assert_eq!(tree_factorial(&Tree::star(4)), BigInt::from(4));
    }

    #[test]
    fn hook_length_eta() {
        // η([•Q₃]) = 5!/15 = 8.
        let t: Forest = "[*[**]]".parse().unwrap();
        assert_eq!(forest_eta_hook(&t), Rational::from_int(8));
        // Equality with the coproduct definition of η.
        let alg = crate::instances::ForestAlgebra::new();
        for n in 1..=5usize {
            for f in Forest::all_of(n) {
                assert_eq!(
                    forest_eta_hook(&f),
                    crate::chain::eta(&alg, &BasisKey::Forest(f.clone())),
                    "{f}"
                );
            }
        }
    }

    #[test]
    fn tree_fc_worked_value() {
        let q3 = Tree::star(3);
        let t: Forest = "[*[**]]".parse().unwrap();
        assert_eq!(tree_fc(&q3, &t), Rational::new(5, 3));
        // C ⊄ T gives an empty sum.
        let q4 = Tree::star(4);
        let p3: Forest = "[[*]]".parse().unwrap();
        assert_eq!(tree_fc(&q4, &p3), Rational::zero());
    }

    #[test]
    fn tree_fc_matches_coproduct_oracle() {
        // Independent oracle from structure constants:
        // f_C(T) = C(n, deg C)/(η(T)(n−deg C+1)) Σ_{w,z} η(w)η(z)η_T^{w,C,z}.
        use crate::hopf::iterated_coproduct;
        let alg = crate::instances::ForestAlgebra::new();
        for n in 2..=5usize {
            for t in Forest::all_of(n) {
                let key = BasisKey::Forest(t.clone());
                let eta_t = crate::chain::eta(&alg, &key);
                for degc in 2..=n {
                    for c in Tree::all_of(degc) {
                        let c_forest = Forest::single(c.clone());
                        let d3 = iterated_coproduct(&alg, 3, &key);
                        let mut mass = Rational::zero();
                        for (keys, coeff) in d3.iter() {
                            if keys[1].as_forest() == &c_forest {
                                let ew = crate::chain::eta(&alg, &keys[0]);
                                let ez = crate::chain::eta(&alg, &keys[2]);
                                mass += &(&ew * &ez) * coeff;
                            }
                        }
                        let oracle = &(&Rational::from_bigint(binomial(n, degc)) * &mass)
                            / &(&eta_t * &Rational::from_int((n - degc + 1) as i64));
                        assert_eq!(tree_fc(&c, &t), oracle, "C={c} T={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn tree_fc_sandwich_bounds() {
        // C!·#{C⊆T}/(deg C!·deg C) ≤ f_C(T) ≤ C(n', deg C)·#{C⊆T}/(n'−deg C+1),
        // with n' the largest component degree.
        let mut checked = 0;
        for n in 2..=6usize {
            for t in Forest::all_of(n) {
                let n_prime = t.trees().iter().map(|x| x.degree()).max().unwrap();
                for degc in 2..=n_prime {
                    for c in Tree::all_of(degc) {
                        let count = subtree_count(&c, &t);
                        if count == 0 {
                            assert_eq!(tree_fc(&c, &t), Rational::zero());
                            continue;
                        }
                        let f = tree_fc(&c, &t);
                        let lower = Rational::from_big(
                            tree_factorial(&c) * BigInt::from(count),
                            factorial(degc) * BigInt::from(degc),
                        );
                        let upper = Rational::from_big(
                            binomial(n_prime, degc) * BigInt::from(count),
                            BigInt::from(n_prime - degc + 1),
                        );
                        assert!(lower <= f && f <= upper, "C={c} T={t}");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked >= 50, "only {checked} bound checks ran");
    }

    #[test]
    fn shuffle_statistics() {
        let w: Word = "(1233212)".parse().unwrap();
        assert_eq!(
            shuffle_statistic_eigenfunction(&ShuffleStatistic::Descents, &w),
            Rational::one()
        );
        // Pattern (12) sums the two-letter hedgerow values over consecutive
        // subwords with letters {1,2}: +1 −1 +1 = 1.
        assert_eq!(
            shuffle_statistic_eigenfunction(
                &ShuffleStatistic::Pattern("(12)".parse().unwrap()),
                &w
            ),
            Rational::one()
        );
        let asc: Word = "(123456)".parse().unwrap();
        assert_eq!(
            shuffle_statistic_eigenfunction(&ShuffleStatistic::Descents, &asc),
            Rational::from_int(5)
        );
        assert_eq!(
            shuffle_statistic_eigenfunction(&ShuffleStatistic::PeaksMinusValleys, &asc),
            Rational::zero()
        );
        assert_eq!(
            expected_descents_from_ascending(8, 2, 1).to_string(),
            "7/4" // (1 − 1/2)·7/2
        );
        assert_eq!(expected_peaks_from_ascending(8, 2, 1), Rational::new(3, 2));
    }

    #[test]
    fn partition_normalizations_agree() {
        // The 1/ℓ(I)! product recipe and the general hedgerow-weighted
        // formula coincide on partitions.
        for n in 2..=5usize {
            for i in Partition::all_of(n) {
                for j in crate::instances::compositions_of(n) {
                    assert_eq!(
                        qsym_right_f(&i.as_composition(), &j),
                        qsym_right_f_partition(&i, &j),
                        "I={i} J={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn qsym_right_f_worked_values() {
        assert_eq!(
            qsym_right_f(&comp("(4,4,3)"), &comp("(3,5,2,1)")),
            "7/5184".parse().unwrap()
        );
        assert_eq!(
            qsym_right_f_partition(&part("(4,4,3)"), &comp("(3,5,2,1)")),
            "7/5184".parse().unwrap()
        );
        assert_eq!(qsym_right_f(&comp("(1,2,1)"), &comp("(3,1)")), Rational::new(-1, 2));
        // At the one-part state: 1/(Z(I)·∏ i_r) for partitions, else 0.
        assert_eq!(qsym_right_f(&comp("(2,2)"), &comp("(4)")), Rational::new(1, 8));
        assert_eq!(qsym_right_f(&comp("(1,2,1)"), &comp("(4)")), Rational::zero());
        assert_eq!(qsym_right_f(&comp("(1,3)"), &comp("(4)")), Rational::zero());
    }

    #[test]
    fn ribbon_character_worked_values() {
        assert_eq!(ribbon_character(&comp("(3,5,2,1)"), &part("(4,4,3)")), Rational::one());
        // One-row fillings: χ^J at the n-cycle is (−1)^{ℓ(J)−1}.
        for j in ["(4)", "(1,3)", "(2,2)", "(1,2,1)", "(1,1,1,1)"] {
            let j = comp(j);
            let expect = if (j.num_parts() - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(ribbon_character(&j, &part("(4)")), Rational::from_int(expect), "{j}");
        }
        // χ^J at the identity counts permutations with descent composition J.
        let counts = [("(4)", 1), ("(1,3)", 3), ("(3,1)", 3), ("(2,2)", 5), ("(1,2,1)", 5),
            ("(2,1,1)", 3), ("(1,1,2)", 3), ("(1,1,1,1)", 1)];
        for (j, v) in counts {
            assert_eq!(
                ribbon_character(&comp(j), &part("(1,1,1,1)")),
                Rational::from_int(v),
                "{j}"
            );
        }
    }

    #[test]
    fn qsym_left_g_worked_values() {
        assert_eq!(qsym_left_g(&comp("(4,4,3)"), &comp("(3,5,2,1)")), Rational::one());
        assert_eq!(qsym_left_g(&comp("(1,2,1)"), &comp("(3,1)")), Rational::new(-1, 2));
        // Partition case agrees with the general Lyndon-factor product.
        for n in 2..=5usize {
            for i in crate::instances::compositions_of(n) {
                if !i.is_partition() {
                    continue;
                }
                let via_vector = qsym_left_g_vector(&i);
                for j in crate::instances::compositions_of(n) {
                    assert_eq!(
                        via_vector.coeff(&BasisKey::Composition(j.clone())),
                        ribbon_character(&j, &Partition::new(i.parts().to_vec())),
                        "I={i} J={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn descent_probability_small_cases() {
        // m = 0: point mass at (n).
        assert_eq!(descent_probability_from_identity(4, 2, 0, &comp("(4)")), Rational::one());
        assert_eq!(
            descent_probability_from_identity(4, 2, 0, &comp("(2,2)")),
            Rational::zero()
        );
        // One shuffle of 4 cards: P{Des = (4)} = 5/16.
        assert_eq!(
            descent_probability_from_identity(4, 2, 1, &comp("(4)")),
            Rational::new(5, 16)
        );
    }

    #[test]
    fn rock_bound_formula() {
        // From (n), the bound for pieces of size ≥ j is a^{-m(j-1)}·C(n,j).
        assert_eq!(rock_large_piece_bound(&part("(6)"), 2, 2, 3), Rational::new(15, 8));
    }
}
