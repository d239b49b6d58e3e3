//! The four eigenbasis algorithms for the Hopf-power map, the eigenvalue
//! multiplicity generating function, and the top eigenspace.
//!
//! On a commutative algebra, products of Eulerian-idempotent images of free
//! generators form an eigenbasis (one eigenvector per multiset of
//! generators, eigenvalue `a^k` for k factors). On a cocommutative algebra,
//! symmetrised products of primitives do. The two Lyndon refinements handle
//! bases with a shuffle product law and free bases: eigenvectors are indexed
//! by words, with eigenvalue exponent the number of Lyndon factors.

use super::{
    eulerian_idempotent, hopf_power, iterated_product_combs, product_combs, reduced_coproduct_iter,
    Degree, HopfAlgebra, HopfError,
};
use crate::keys::BasisKey;
use crate::lincomb::KeyComb;
use crate::matrix::rank;
use crate::rational::{binomial, factorial, Rational};
use crate::words::{
    is_lyndon, lyndon_factorization, multiset_permutations, shuffle_right_eigenfunction, Letter,
    Word,
};
use num::BigInt;
use std::collections::BTreeMap;

/// Structured tag naming an eigenvector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum EigLabel {
    /// Multiset of generator (or primitive) names, sorted.
    Multiset(Vec<String>),
    /// Word over the instance's letter alphabet.
    Word(Word),
}

impl std::fmt::Display for EigLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EigLabel::Multiset(names) => {
                write!(f, "{{")?;
                for (i, n) in names.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{n}")?;
                }
                write!(f, "}}")
            }
            EigLabel::Word(w) => write!(f, "{w}"),
        }
    }
}

/// An eigenvector of `Ψ^a` with eigenvalue `a^exponent`.
#[derive(Clone, Debug)]
pub struct EigVector {
    pub label: EigLabel,
    pub exponent: usize,
    pub vector: KeyComb,
}

/// A named homogeneous element fed to the eigenbasis algorithms (a free
/// generator, or a primitive).
#[derive(Clone)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
    pub element: KeyComb,
}

impl Generator {
    pub fn from_key(key: BasisKey) -> Self {
        Generator {
            name: key.to_string(),
            degree: key.degree(),
            element: KeyComb::singleton(key),
        }
    }
}

fn verify_eigenvector(
    alg: &dyn HopfAlgebra,
    v: &EigVector,
    thorough: bool,
) -> Result<(), HopfError> {
    for a in if thorough { vec![2usize, 3] } else { vec![2] } {
        let lhs = hopf_power(alg, a, &v.vector);
        let rhs = v.vector.scale(&Rational::from_int(a as i64).pow(v.exponent as i64));
        if lhs != rhs {
            return Err(HopfError::Eigenbasis(format!(
                "vector {} is not a Psi^{a} eigenvector of exponent {}",
                v.label, v.exponent
            )));
        }
    }
    Ok(())
}

fn check_rank_and_count(
    alg: &dyn HopfAlgebra,
    degree: &Degree,
    vectors: &[EigVector],
    what: &str,
) -> Result<(), HopfError> {
    let basis = alg.basis_of(degree)?;
    if vectors.len() != basis.len() {
        return Err(HopfError::Eigenbasis(format!(
            "{what}: produced {} vectors for a dimension-{} space",
            vectors.len(),
            basis.len()
        )));
    }
    let index: BTreeMap<&BasisKey, usize> = basis.iter().zip(0..).collect();
    let rows: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![Rational::zero(); basis.len()];
            for (k, c) in v.vector.iter() {
                let Some(&j) = index.get(k) else {
                    return Vec::new();
                };
                row[j] = c.clone();
            }
            row
        })
        .collect();
    if rows.iter().any(|r| r.is_empty()) {
        return Err(HopfError::Eigenbasis(format!("{what}: eigenvector leaves the component")));
    }
    if rank(&rows) != basis.len() {
        return Err(HopfError::Eigenbasis(format!("{what}: rank deficient")));
    }
    Ok(())
}

/// Multisets (as index vectors, weakly increasing) of generators whose
/// degrees sum to `n`.
fn multisets_with_degree_sum(degrees: &[usize], n: usize) -> Vec<Vec<usize>> {
    fn rec(
        degrees: &[usize],
        start: usize,
        remaining: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        for i in start..degrees.len() {
            if degrees[i] <= remaining && degrees[i] > 0 {
                acc.push(i);
                rec(degrees, i, remaining - degrees[i], acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(degrees, 0, n, &mut Vec::new(), &mut out);
    out
}

/// Algorithm for commutative algebras: one eigenvector `e(c₁)…e(c_k)` per
/// multiset of free generators with degrees summing to `n`; eigenvalue `a^k`.
pub fn eigenbasis_commutative(
    alg: &dyn HopfAlgebra,
    generators: &[Generator],
    n: usize,
    thorough: bool,
) -> Result<Vec<EigVector>, HopfError> {
    if !alg.is_commutative() {
        return Err(HopfError::Eigenbasis(format!("{} is not commutative", alg.name())));
    }
    let degrees: Vec<usize> = generators.iter().map(|g| g.degree).collect();
    let e_images: Vec<KeyComb> =
        generators.iter().map(|g| eulerian_idempotent(alg, &g.element)).collect();
    let mut out = Vec::new();
    for multiset in multisets_with_degree_sum(&degrees, n) {
        let factors: Vec<KeyComb> = multiset.iter().map(|&i| e_images[i].clone()).collect();
        let vector = iterated_product_combs(alg, &factors);
        let label = EigLabel::Multiset(multiset.iter().map(|&i| generators[i].name.clone()).collect());
        let v = EigVector { label, exponent: multiset.len(), vector };
        verify_eigenvector(alg, &v, thorough)?;
        out.push(v);
    }
    check_rank_and_count(alg, &Degree::Plain(n), &out, "commutative eigenbasis")?;
    Ok(out)
}

/// Symmetrised product `(1/k!) Σ_σ p_{σ(1)}…p_{σ(k)}` of a multiset of
/// elements (indices into `elements`).
fn symmetrized_product(
    alg: &dyn HopfAlgebra,
    elements: &[KeyComb],
    multiset: &[usize],
) -> KeyComb {
    let k = multiset.len();
    let mut acc = KeyComb::zero();
    let arrangements = multiset_permutations(multiset);
    let copies = factorial(k) / BigInt::from(arrangements.len());
    for arrangement in &arrangements {
        let factors: Vec<KeyComb> = arrangement.iter().map(|&i| elements[i].clone()).collect();
        acc.add_assign(&iterated_product_combs(alg, &factors));
    }
    acc.scale(&Rational::from_big(copies, factorial(k)))
}

/// Algorithm for cocommutative algebras: symmetrised products of primitives.
pub fn eigenbasis_cocommutative(
    alg: &dyn HopfAlgebra,
    primitives: &[Generator],
    n: usize,
    thorough: bool,
) -> Result<Vec<EigVector>, HopfError> {
    if !alg.is_cocommutative() {
        return Err(HopfError::Eigenbasis(format!("{} is not cocommutative", alg.name())));
    }
    for p in primitives {
        if !reduced_coproduct_iter(alg, 2, &p.element).is_zero() {
            return Err(HopfError::Eigenbasis(format!("element {} is not primitive", p.name)));
        }
    }
    let degrees: Vec<usize> = primitives.iter().map(|g| g.degree).collect();
    let elements: Vec<KeyComb> = primitives.iter().map(|g| g.element.clone()).collect();
    let mut out = Vec::new();
    for multiset in multisets_with_degree_sum(&degrees, n) {
        let vector = symmetrized_product(alg, &elements, &multiset);
        let label = EigLabel::Multiset(multiset.iter().map(|&i| primitives[i].name.clone()).collect());
        let v = EigVector { label, exponent: multiset.len(), vector };
        verify_eigenvector(alg, &v, thorough)?;
        out.push(v);
    }
    check_rank_and_count(alg, &Degree::Plain(n), &out, "cocommutative eigenbasis")?;
    Ok(out)
}

/// A graded, totally ordered letter alphabet together with the map from
/// letters (and words over them) to elements of the algebra.
pub struct LetterSpec<'a> {
    /// `(letter, degree of that letter)`, in increasing letter order.
    pub letters: Vec<(Letter, usize)>,
    /// The basis element `P_w` resp. `S_w` attached to a word.
    pub word_element: &'a dyn Fn(&Word) -> KeyComb,
}

impl LetterSpec<'_> {
    /// All words over the alphabet matching the requested degree.
    fn words_of(&self, degree: &Degree) -> Vec<Word> {
        match degree {
            Degree::Multi(nu) => {
                let mut letters: Vec<Letter> = Vec::new();
                for (i, &count) in nu.iter().enumerate() {
                    for _ in 0..count {
                        letters.push((i + 1) as Letter);
                    }
                }
                multiset_permutations(&letters).into_iter().map(Word::new).collect()
            }
            Degree::Plain(n) => {
                // All words with letter degrees summing to n.
                fn rec(
                    letters: &[(Letter, usize)],
                    remaining: usize,
                    acc: &mut Vec<Letter>,
                    out: &mut Vec<Word>,
                ) {
                    if remaining == 0 {
                        out.push(Word::new(acc.clone()));
                        return;
                    }
                    for &(l, d) in letters {
                        if d <= remaining && d > 0 {
                            acc.push(l);
                            rec(letters, remaining - d, acc, out);
                            acc.pop();
                        }
                    }
                }
                let mut out = Vec::new();
                rec(&self.letters, *n, &mut Vec::new(), &mut out);
                out
            }
        }
    }
}

/// Validate the shuffle product law `P_u P_v = Σ interleavings P_w` on a
/// sample of word pairs (full validation from structure constants alone is
/// not possible).
fn validate_shuffle_law(
    alg: &dyn HopfAlgebra,
    spec: &LetterSpec,
    words: &[Word],
) -> Result<(), HopfError> {
    let sample: Vec<&Word> = words.iter().filter(|w| w.len() >= 1 && w.len() <= 3).collect();
    let mut checked = 0;
    'outer: for u in &sample {
        for v in &sample {
            if u.len() + v.len() > 4 {
                continue;
            }
            let lhs = product_combs(alg, &(spec.word_element)(u), &(spec.word_element)(v));
            let mut rhs = KeyComb::zero();
            for w in interleavings(u, v) {
                rhs.add_assign(&(spec.word_element)(&w));
            }
            if lhs != rhs {
                return Err(HopfError::Eigenbasis(format!(
                    "shuffle product law fails on P_{u} · P_{v}"
                )));
            }
            checked += 1;
            if checked >= 12 {
                break 'outer;
            }
        }
    }
    Ok(())
}

/// All interleavings of two words, with multiplicity.
pub fn interleavings(u: &Word, v: &Word) -> Vec<Word> {
    fn rec(u: &[Letter], v: &[Letter], acc: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if u.is_empty() && v.is_empty() {
            out.push(Word::new(acc.clone()));
            return;
        }
        if !u.is_empty() {
            acc.push(u[0]);
            rec(&u[1..], v, acc, out);
            acc.pop();
        }
        if !v.is_empty() {
            acc.push(v[0]);
            rec(u, &v[1..], acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(u.letters(), v.letters(), &mut Vec::new(), &mut out);
    out
}

/// Algorithm for bases with a shuffle product law: `g_w = ∏ e(P_{uᵢ})` over
/// the Lyndon factors of `w`; eigenvalue exponent `k(w)`.
pub fn eigenbasis_shuffle_basis(
    alg: &dyn HopfAlgebra,
    spec: &LetterSpec,
    degree: &Degree,
    thorough: bool,
) -> Result<Vec<EigVector>, HopfError> {
    let words = spec.words_of(degree);
    validate_shuffle_law(alg, spec, &words)?;
    let mut e_cache: BTreeMap<Word, KeyComb> = BTreeMap::new();
    let mut out = Vec::new();
    for w in words {
        let factors = lyndon_factorization(&w);
        let images: Vec<KeyComb> = factors
            .iter()
            .map(|u| {
                e_cache
                    .entry(u.clone())
                    .or_insert_with(|| eulerian_idempotent(alg, &(spec.word_element)(u)))
                    .clone()
            })
            .collect();
        let vector = iterated_product_combs(alg, &images);
        let v = EigVector { label: EigLabel::Word(w), exponent: factors.len(), vector };
        verify_eigenvector(alg, &v, thorough)?;
        out.push(v);
    }
    check_rank_and_count(alg, degree, &out, "shuffle-basis eigenbasis")?;
    Ok(out)
}

/// Algorithm for cocommutative algebras with a free basis, in the
/// symmetrised formulation driven by the shuffle right eigenfunction:
/// `g_w = Σ_{w'} f_w(w') · e(S_{w'_1}) … e(S_{w'_l})`, summing over words
/// `w'` with the same letters as `w`.
pub fn eigenbasis_free_basis(
    alg: &dyn HopfAlgebra,
    spec: &LetterSpec,
    degree: &Degree,
    thorough: bool,
) -> Result<Vec<EigVector>, HopfError> {
    if !alg.is_cocommutative() {
        return Err(HopfError::Eigenbasis(format!("{} is not cocommutative", alg.name())));
    }
    let words = spec.words_of(degree);
    let mut e_letter: BTreeMap<Letter, KeyComb> = BTreeMap::new();
    for &(l, _) in &spec.letters {
        let single = Word::new(vec![l]);
        e_letter.insert(l, eulerian_idempotent(alg, &(spec.word_element)(&single)));
    }
    let mut out = Vec::new();
    for w in &words {
        let mut vector = KeyComb::zero();
        for w_prime in multiset_permutations(w.letters()) {
            let w_prime = Word::new(w_prime);
            let coeff = shuffle_right_eigenfunction(w, &w_prime);
            if coeff.is_zero() {
                continue;
            }
            let factors: Vec<KeyComb> =
                w_prime.letters().iter().map(|l| e_letter[l].clone()).collect();
            let prod = iterated_product_combs(alg, &factors);
            vector.add_assign(&prod.scale(&coeff));
        }
        let v = EigVector {
            label: EigLabel::Word(w.clone()),
            exponent: lyndon_factorization(w).len(),
            vector,
        };
        verify_eigenvector(alg, &v, thorough)?;
        out.push(v);
    }
    check_rank_and_count(alg, degree, &out, "free-basis eigenbasis")?;
    Ok(out)
}

/// The literal bracketing form of the free-basis algorithm: standard
/// bracketings of Lyndon words, symmetrised over Lyndon factors. Differs
/// from [`eigenbasis_free_basis`] by a per-word scalar.
pub fn eigenbasis_free_basis_bracket(
    alg: &dyn HopfAlgebra,
    spec: &LetterSpec,
    degree: &Degree,
) -> Result<Vec<EigVector>, HopfError> {
    if !alg.is_cocommutative() {
        return Err(HopfError::Eigenbasis(format!("{} is not cocommutative", alg.name())));
    }
    fn g_of(
        alg: &dyn HopfAlgebra,
        spec: &LetterSpec,
        w: &Word,
        memo: &mut BTreeMap<Word, KeyComb>,
    ) -> KeyComb {
        if let Some(hit) = memo.get(w) {
            return hit.clone();
        }
        let result = if w.len() == 1 {
            eulerian_idempotent(alg, &(spec.word_element)(w))
        } else if is_lyndon(w) {
            let (u1, u2) = crate::words::standard_factorization(w);
            let g1 = g_of(alg, spec, &u1, memo);
            let g2 = g_of(alg, spec, &u2, memo);
            product_combs(alg, &g1, &g2).sub(&product_combs(alg, &g2, &g1))
        } else {
            let factors = lyndon_factorization(w);
            let k = factors.len();
            let arrangements = multiset_permutations(&factors);
            let copies = factorial(k) / BigInt::from(arrangements.len());
            let mut acc = KeyComb::zero();
            for arr in &arrangements {
                let gs: Vec<KeyComb> = arr.iter().map(|u| g_of(alg, spec, u, memo)).collect();
                acc.add_assign(&iterated_product_combs(alg, &gs));
            }
            acc.scale(&Rational::from_big(copies, factorial(k)))
        };
        memo.insert(w.clone(), result.clone());
        result
    }
    let mut memo = BTreeMap::new();
    let mut out = Vec::new();
    for w in spec.words_of(degree) {
        let vector = g_of(alg, spec, &w, &mut memo);
        let exponent = lyndon_factorization(&w).len();
        out.push(EigVector { label: EigLabel::Word(w), exponent, vector });
    }
    Ok(out)
}

/// Algebraic multiplicity of the eigenvalue `a^k` of `Ψ^a` on the degree-n
/// component: the coefficient of `xⁿyᵏ` in `∏ᵢ (1−yxⁱ)^{−bᵢ}`, where the
/// `bᵢ` satisfy `∏ᵢ (1−xⁱ)^{−bᵢ} = Σ dim(H_n) xⁿ`.
pub fn eigenvalue_multiplicity(
    alg: &dyn HopfAlgebra,
    n: usize,
    k: usize,
) -> Result<BigInt, HopfError> {
    if k > n {
        return Err(HopfError::Invalid(format!("exponent {k} exceeds degree {n}")));
    }
    let dims: Vec<BigInt> =
        (0..=n).map(|d| alg.basis(d).map(|b| BigInt::from(b.len()))).collect::<Result<_, _>>()?;
    // Solve for b_i iteratively: once (1-x^j)^{-b_j} is known for j < i, the
    // discrepancy at x^i is exactly b_i.
    let mut b = vec![BigInt::from(0); n + 1];
    let mut product = vec![BigInt::from(0); n + 1];
    product[0] = BigInt::from(1);
    for i in 1..=n {
        b[i] = &dims[i] - &product[i];
        if b[i] != BigInt::from(0) {
            // multiply `product` by (1-x^i)^{-b_i} = Σ_j C(b_i+j-1, j) x^{ij}
            let mut next = vec![BigInt::from(0); n + 1];
            for (d, coeff) in product.iter().enumerate() {
                if coeff == &BigInt::from(0) {
                    continue;
                }
                let mut j = 0usize;
                while d + i * j <= n {
                    let ways = multichoose(&b[i], j);
                    next[d + i * j] += coeff * ways;
                    j += 1;
                }
            }
            product = next;
        }
    }
    // Bivariate expansion of ∏ (1-yx^i)^{-b_i}: poly[d][k].
    let mut poly: Vec<Vec<BigInt>> = vec![vec![BigInt::from(0); n + 1]; n + 1];
    poly[0][0] = BigInt::from(1);
    for i in 1..=n {
        if b[i] == BigInt::from(0) {
            continue;
        }
        let mut next: Vec<Vec<BigInt>> = vec![vec![BigInt::from(0); n + 1]; n + 1];
        for d in 0..=n {
            for kk in 0..=n {
                if poly[d][kk] == BigInt::from(0) {
                    continue;
                }
                let mut j = 0usize;
                while d + i * j <= n && kk + j <= n {
                    let ways = multichoose(&b[i], j);
                    next[d + i * j][kk + j] += &poly[d][kk] * ways;
                    j += 1;
                }
            }
        }
        poly = next;
    }
    Ok(poly[n][k].clone())
}

/// `C(b + j - 1, j)` for a BigInt b.
fn multichoose(b: &BigInt, j: usize) -> BigInt {
    if j == 0 {
        return BigInt::from(1);
    }
    let mut num = BigInt::from(1);
    for t in 0..j {
        num *= b + BigInt::from(t);
    }
    num / factorial(j)
}

/// Basis of the top (`a^n`) eigenspace: symmetrised products of degree-one
/// basis elements `Σ_σ c_{σ(1)}…c_{σ(n)}`, one per multiset from the
/// degree-one basis. Errors when the degree-one component is empty.
pub fn top_eigenspace(alg: &dyn HopfAlgebra, degree: &Degree) -> Result<Vec<EigVector>, HopfError> {
    let b1 = match degree {
        Degree::Plain(_) => alg.basis(1)?,
        Degree::Multi(nu) => {
            // Unit multidegrees single out the individual letters.
            let mut b = Vec::new();
            for i in 0..nu.len() {
                let mut unit = vec![0usize; i + 1];
                unit[i] = 1;
                b.extend(alg.basis_multi(&unit)?);
            }
            b
        }
    };
    if b1.is_empty() {
        return Err(HopfError::Invalid("degree-one component is empty".into()));
    }
    let n = degree.total();
    let multisets: Vec<Vec<usize>> = match degree {
        Degree::Plain(_) => multisets_with_degree_sum(&vec![1usize; b1.len()], n)
            .into_iter()
            .filter(|m| m.len() == n)
            .collect(),
        Degree::Multi(nu) => {
            let mut m = Vec::new();
            for (i, &count) in nu.iter().enumerate() {
                for _ in 0..count {
                    m.push(i);
                }
            }
            vec![m]
        }
    };
    if matches!(degree, Degree::Plain(_)) {
        // The multiset count is the dimension of the top eigenspace.
        assert_eq!(BigInt::from(multisets.len()), top_eigenspace_size(b1.len(), n));
    }
    let elements: Vec<KeyComb> = b1.iter().map(|k| KeyComb::singleton(k.clone())).collect();
    let mut out = Vec::new();
    for multiset in multisets {
        // Full symmetrisation Σ_σ (not divided by n!): scale the (1/k!)
        // symmetrized product back up.
        let vector =
            symmetrized_product(alg, &elements, &multiset).scale(&Rational::from_bigint(factorial(n)));
        let label = EigLabel::Multiset(multiset.iter().map(|&i| b1[i].to_string()).collect());
        out.push(EigVector { label, exponent: n, vector });
    }
    Ok(out)
}

/// Expand an eigenvector list against an ordered basis as coefficient rows.
pub fn vectors_as_rows(vectors: &[EigVector], basis: &[BasisKey]) -> Vec<Vec<Rational>> {
    let index: BTreeMap<&BasisKey, usize> = basis.iter().zip(0..).collect();
    vectors
        .iter()
        .map(|v| {
            let mut row = vec![Rational::zero(); basis.len()];
            for (k, c) in v.vector.iter() {
                if let Some(&j) = index.get(k) {
                    row[j] = c.clone();
                }
            }
            row
        })
        .collect()
}

/// Count multisets of generators for a dimension sanity check:
/// `C(|B₁|+n−1, n)` for the top eigenspace.
pub fn top_eigenspace_size(b1: usize, n: usize) -> BigInt {
    binomial(b1 + n - 1, n)
}
