//! Words, Lyndon factorisations, descent compositions, and the graphical
//! right eigenfunction of riffle-shuffling.
//!
//! A word is Lyndon when it is lexicographically strictly smaller than all of
//! its nontrivial cyclic rotations. Every word factors uniquely as a
//! concatenation of weakly decreasing Lyndon words; `k(w)` denotes the number
//! of factors. The standard factorisation of a Lyndon word splits off its
//! longest proper Lyndon suffix; iterating it yields the binary trees
//! ("decreasing Lyndon hedgerows") whose signed branch-swap counts compute
//! the shuffle right eigenfunctions `f_w`.

use crate::lincomb::LinComb;
use crate::rational::{factorial, Rational};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

pub type Letter = u32;

/// A word over the positive integers (or any totally ordered graded alphabet
/// encoded as integers). The empty word is the unit of the shuffle algebra.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        assert!(letters.iter().all(|&l| l > 0), "letters must be positive");
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reverse(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// Multidegree: component i-1 counts occurrences of letter i; trailing
    /// zeros trimmed so equal multisets compare equal.
    pub fn multidegree(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for &l in &self.0 {
            let i = l as usize - 1;
            if v.len() <= i {
                v.resize(i + 1, 0);
            }
            v[i] += 1;
        }
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn sorted_letters(&self) -> Vec<Letter> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.0.iter().all(|&l| l <= 9) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
        } else {
            for (i, l) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{l}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `(31421)` (single-digit letters) or `(10,2,1)` (comma form).
impl FromStr for Word {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| format!("word must be parenthesized: {s:?}"))?;
        if inner.is_empty() {
            return Ok(Word::empty());
        }
        let letters: Vec<Letter> = if inner.contains(',') {
            inner
                .split(',')
                .map(|t| t.trim().parse::<Letter>().map_err(|_| format!("bad letter {t:?}")))
                .collect::<Result<_, _>>()?
        } else {
            inner
                .chars()
                .map(|c| c.to_digit(10).filter(|&d| d > 0).ok_or(format!("bad digit {c:?}")))
                .collect::<Result<_, _>>()?
        };
        Ok(Word::new(letters))
    }
}

/// A composition: a finite list of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "composition parts must be positive");
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    /// The parts as a weakly decreasing multiset.
    pub fn sorted_parts(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// View the parts as the letters of a word.
    pub fn as_word(&self) -> Word {
        Word::new(self.0.clone())
    }

    /// Division points of the diagram: partial sums excluding the total.
    pub fn division_points(&self) -> Vec<usize> {
        let mut acc = 0usize;
        let mut pts = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p as usize;
            pts.push(acc);
        }
        pts
    }

    pub fn from_division_points(n: usize, points: &[usize]) -> Self {
        let mut parts = Vec::new();
        let mut prev = 0usize;
        for &p in points {
            assert!(p > prev && p < n);
            parts.push((p - prev) as u32);
            prev = p;
        }
        parts.push((n - prev) as u32);
        Composition(parts)
    }

    /// `self` refines `other` when the divisions of `other` are a subset of
    /// the divisions of `self`.
    pub fn refines(&self, other: &Composition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let fine: std::collections::BTreeSet<_> = self.division_points().into_iter().collect();
        other.division_points().iter().all(|p| fine.contains(p))
    }

    /// All compositions coarser than or equal to `self`.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let pts = self.division_points();
        let n = self.size();
        subsets(&pts).into_iter().map(|s| Composition::from_division_points(n, &s)).collect()
    }

    /// All compositions finer than or equal to `self`.
    pub fn refinements(&self) -> Vec<Composition> {
        let own: std::collections::BTreeSet<_> = self.division_points().into_iter().collect();
        let n = self.size();
        let others: Vec<usize> = (1..n).filter(|p| !own.contains(p)).collect();
        subsets(&others)
            .into_iter()
            .map(|extra| {
                let mut pts: Vec<usize> = own.iter().cloned().chain(extra).collect();
                pts.sort_unstable();
                Composition::from_division_points(n, &pts)
            })
            .collect()
    }

    /// The decomposition of `self` relative to `coarse`: split the diagram of
    /// `self` at the division points of `coarse`. Requires equal sizes.
    pub fn decompose_relative(&self, coarse: &Composition) -> Vec<Composition> {
        assert_eq!(self.size(), coarse.size(), "decomposition of unequal sizes");
        let own: Vec<usize> = self.division_points();
        let n = self.size();
        let mut segment_starts = vec![0usize];
        segment_starts.extend(coarse.division_points());
        let mut ends = coarse.division_points();
        ends.push(n);
        let mut out = Vec::new();
        for (&start, &end) in segment_starts.iter().zip(ends.iter()) {
            let inner: Vec<usize> =
                own.iter().filter(|&&d| d > start && d < end).map(|&d| d - start).collect();
            out.push(Composition::from_division_points(end - start, &inner));
        }
        out
    }
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &it in items {
        let mut extended: Vec<Vec<usize>> = out
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.push(it);
                t
            })
            .collect();
        out.append(&mut extended);
    }
    out
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Composition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| format!("composition must be parenthesized: {s:?}"))?;
        if inner.is_empty() {
            return Ok(Composition(Vec::new()));
        }
        let parts: Vec<u32> = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| format!("bad part {t:?}")))
            .collect::<Result<_, _>>()?;
        Ok(Composition::new(parts))
    }
}

/// True iff `w` is strictly smaller than every nontrivial cyclic rotation.
/// Panics on the empty word.
pub fn is_lyndon(w: &Word) -> bool {
    assert!(!w.is_empty(), "is_lyndon on the empty word");
    let s = w.letters();
    let n = s.len();
    for r in 1..n {
        let rotation = s[r..].iter().chain(s[..r].iter());
        if !(s.iter().lt(rotation)) {
            return false;
        }
    }
    true
}

/// Duval's factorisation: `w` as a weakly decreasing concatenation of Lyndon
/// words. Panics on the empty word.
pub fn lyndon_factorization(w: &Word) -> Vec<Word> {
    assert!(!w.is_empty(), "factorization of the empty word");
    let s = w.letters();
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(Word::new(s[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    out
}

/// Number of Lyndon factors.
pub fn lyndon_factor_count(w: &Word) -> usize {
    lyndon_factorization(w).len()
}

/// Size of the stabiliser of the symmetric group permuting the Lyndon factors.
pub fn lyndon_stabilizer_size(w: &Word) -> Rational {
    let factors = lyndon_factorization(w);
    let mut counts: HashMap<&Word, usize> = HashMap::new();
    for f in &factors {
        *counts.entry(f).or_insert(0) += 1;
    }
    let mut z = num::BigInt::from(1);
    for (_, c) in counts {
        z *= factorial(c);
    }
    Rational::from_bigint(z)
}

/// Standard factorisation of a Lyndon word of length ≥ 2: the split before
/// its longest proper Lyndon suffix. Panics if `u` is not Lyndon or has a
/// single letter.
pub fn standard_factorization(u: &Word) -> (Word, Word) {
    assert!(u.len() >= 2, "standard factorization needs length >= 2");
    assert!(is_lyndon(u), "standard factorization of a non-Lyndon word");
    let s = u.letters();
    for i in 1..s.len() {
        let tail = Word::new(s[i..].to_vec());
        if is_lyndon(&tail) {
            return (Word::new(s[..i].to_vec()), tail);
        }
    }
    unreachable!("a Lyndon word always has a Lyndon last letter");
}

/// Descent composition: run lengths between descents. Panics on empty words.
pub fn descent_composition(w: &Word) -> Composition {
    assert!(!w.is_empty(), "descent composition of the empty word");
    let s = w.letters();
    let mut parts = Vec::new();
    let mut run = 1u32;
    for i in 1..s.len() {
        if s[i - 1] > s[i] {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    Composition::new(parts)
}

pub fn descents(w: &Word) -> usize {
    w.letters().windows(2).filter(|p| p[0] > p[1]).count()
}

pub fn ascents(w: &Word) -> usize {
    w.letters().windows(2).filter(|p| p[0] < p[1]).count()
}

pub fn inversions(w: &Word) -> usize {
    let s = w.letters();
    let mut inv = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                inv += 1;
            }
        }
    }
    inv
}

pub fn peaks(w: &Word) -> usize {
    w.letters().windows(3).filter(|t| t[1] > t[0] && t[1] > t[2]).count()
}

pub fn valleys(w: &Word) -> usize {
    w.letters().windows(3).filter(|t| t[1] < t[0] && t[1] < t[2]).count()
}

/// All distinct permutations of a multiset of items.
pub fn multiset_permutations<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut sorted = items.to_vec();
    sorted.sort();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(items.len());
    fn rec<T: Ord + Clone>(pool: &mut Vec<Option<T>>, current: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if current.len() == pool.len() {
            out.push(current.clone());
            return;
        }
        let mut last: Option<T> = None;
        for i in 0..pool.len() {
            if let Some(item) = pool[i].clone() {
                if last.as_ref() == Some(&item) {
                    continue;
                }
                last = Some(item.clone());
                pool[i] = None;
                current.push(item);
                rec(pool, current, out);
                current.pop();
                pool[i] = last.clone();
            }
        }
    }
    let mut pool: Vec<Option<T>> = sorted.into_iter().map(Some).collect();
    rec(&mut pool, &mut current, &mut out);
    out
}

static FSH_CACHE: Lazy<Mutex<HashMap<Word, LinComb<Word>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn concat_combs(a: &LinComb<Word>, b: &LinComb<Word>) -> LinComb<Word> {
    let mut out = LinComb::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            out.add_term(u.concat(v), cu * cv);
        }
    }
    out
}

/// The expansion of the right-eigenvector functional `f_w` in the word basis
/// of the free associative algebra. For Lyndon `w` this is the standard
/// bracketing `[f_{u1}, f_{u2}]`; in general the Lyndon factors are
/// symmetrised, with repeated factors identified (division by `Z(w)`):
/// `f_w = (1/k!) Σ over distinct factor arrangements of the concatenations`.
pub fn shuffle_eigenfunction_expansion(w: &Word) -> LinComb<Word> {
    if let Some(hit) = FSH_CACHE.lock().unwrap().get(w) {
        return hit.clone();
    }
    let result = if w.len() == 1 {
        LinComb::singleton(w.clone())
    } else if is_lyndon(w) {
        let (u1, u2) = standard_factorization(w);
        let f1 = shuffle_eigenfunction_expansion(&u1);
        let f2 = shuffle_eigenfunction_expansion(&u2);
        concat_combs(&f1, &f2).sub(&concat_combs(&f2, &f1))
    } else {
        let factors = lyndon_factorization(w);
        let k = factors.len();
        let mut acc: LinComb<Word> = LinComb::zero();
        for arrangement in multiset_permutations(&factors) {
            let mut prod = shuffle_eigenfunction_expansion(&arrangement[0]);
            for u in &arrangement[1..] {
                prod = concat_combs(&prod, &shuffle_eigenfunction_expansion(u));
            }
            acc.add_assign(&prod);
        }
        acc.scale(&Rational::from_bigint(factorial(k)).recip())
    };
    FSH_CACHE.lock().unwrap().insert(w.clone(), result.clone());
    result
}

/// The shuffle right eigenfunction `f_{w'}(w)`: the signed number of
/// rearrangements of the decreasing Lyndon hedgerow of `w'` spelling `w`
/// (branch swaps signed, tree permutations unsigned, repeated identical
/// trees not distinguished), divided by `k(w')!`. Returns 0 when the letter
/// multisets disagree.
pub fn shuffle_right_eigenfunction(w_prime: &Word, w: &Word) -> Rational {
    if w_prime.sorted_letters() != w.sorted_letters() {
        return Rational::zero();
    }
    shuffle_eigenfunction_expansion(w_prime).coeff(w)
}
