//! Canonical basis keys for the concrete Hopf algebras: partitions, Schur
//! labels, compositions, words, graphs (isomorphism-class representatives),
//! and rooted forests.

use crate::rational::{factorial, Rational};
use crate::words::{Composition, Word};
use num::BigInt;
use once_cell::sync::Lazy;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
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

    /// Size of the stabiliser of the symmetric group permuting the parts:
    /// the product of the factorials of the multiplicities.
    pub fn stabilizer_size(&self) -> BigInt {
        let mut z = BigInt::from(1);
        let mut run = 1usize;
        for i in 1..=self.0.len() {
            if i < self.0.len() && self.0[i] == self.0[i - 1] {
                run += 1;
            } else {
                z *= factorial(run);
                run = 1;
            }
        }
        z
    }

    /// Multinomial coefficient `|λ|! / ∏ λᵢ!`.
    pub fn multinomial(&self) -> BigInt {
        let parts: Vec<usize> = self.0.iter().map(|&p| p as usize).collect();
        crate::rational::multinomial(&parts)
    }

    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(acc.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                acc.push(p as u32);
                rec(n - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn as_composition(&self) -> Composition {
        Composition::new(self.0.clone())
    }

    /// True when the parts of `self` can be grouped so the groups sum to the
    /// parts of `coarser` (i.e. `self` refines `coarser` as a partition).
    pub fn refines(&self, coarser: &Partition) -> bool {
        !crate::named::part_distributions(self, coarser).is_empty()
    }
}

impl fmt::Display for Partition {
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

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let c: Composition = s.parse()?;
        Ok(Partition::new(c.parts().to_vec()))
    }
}

/// A rooted tree in canonical form: the children are stored sorted, so two
/// isomorphic rooted trees are structurally equal. Plane embeddings carry no
/// information.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    children: Vec<Tree>,
    degree: usize,
}

impl Tree {
    pub fn leaf() -> Self {
        Tree { children: Vec::new(), degree: 1 }
    }

    /// Root a forest of subtrees. Children are canonically sorted.
    pub fn node(mut children: Vec<Tree>) -> Self {
        children.sort();
        let degree = 1 + children.iter().map(|c| c.degree).sum::<usize>();
        Tree { children, degree }
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// The path `P_n` (each vertex one child).
    pub fn path(n: usize) -> Self {
        assert!(n >= 1);
        let mut t = Tree::leaf();
        for _ in 1..n {
            t = Tree::node(vec![t]);
        }
        t
    }

    /// The star `Q_n` (root with `n-1` leaf children).
    pub fn star(n: usize) -> Self {
        assert!(n >= 1);
        Tree::node(vec![Tree::leaf(); n - 1])
    }

    /// All rooted trees with `n` vertices, canonical forms.
    pub fn all_of(n: usize) -> Vec<Tree> {
        assert!(n >= 1);
        if n == 1 {
            return vec![Tree::leaf()];
        }
        // A tree of degree n is a root with a forest of degree n-1 attached.
        Forest::all_of(n - 1).into_iter().map(|f| Tree::node(f.trees().to_vec())).collect()
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.children.cmp(&other.children))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_leaf() {
            write!(f, "*")
        } else {
            write!(f, "[")?;
            for c in &self.children {
                write!(f, "{c}")?;
            }
            write!(f, "]")
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A rooted forest in canonical form: a sorted multiset of canonical trees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest(Vec<Tree>);

impl Forest {
    pub fn new(mut trees: Vec<Tree>) -> Self {
        trees.sort();
        Forest(trees)
    }

    pub fn empty() -> Self {
        Forest(Vec::new())
    }

    pub fn single(tree: Tree) -> Self {
        Forest(vec![tree])
    }

    pub fn trees(&self) -> &[Tree] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|t| t.degree()).sum()
    }

    pub fn num_trees(&self) -> usize {
        self.0.len()
    }

    pub fn union(&self, other: &Forest) -> Forest {
        let mut trees = self.0.clone();
        trees.extend(other.0.iter().cloned());
        Forest::new(trees)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Product of factorials of tree multiplicities (stabiliser size).
    pub fn stabilizer_size(&self) -> BigInt {
        let mut z = BigInt::from(1);
        let mut run = 1usize;
        for i in 1..=self.0.len() {
            if i < self.0.len() && self.0[i] == self.0[i - 1] {
                run += 1;
            } else {
                z *= factorial(run);
                run = 1;
            }
        }
        z
    }

    /// All forests with `n` vertices (canonical multisets of trees).
    pub fn all_of(n: usize) -> Vec<Forest> {
        if n == 0 {
            return vec![Forest::empty()];
        }
        // Multisets of trees of total degree n, built with a weakly
        // decreasing canonical-order constraint to avoid duplicates.
        fn rec(remaining: usize, max_tree: Option<&Tree>, acc: &mut Vec<Tree>, out: &mut Vec<Forest>) {
            if remaining == 0 {
                out.push(Forest::new(acc.clone()));
                return;
            }
            for d in (1..=remaining).rev() {
                for t in Tree::all_of(d) {
                    if let Some(m) = max_tree {
                        if &t > m {
                            continue;
                        }
                    }
                    acc.push(t.clone());
                    rec(remaining - d, Some(&t), acc, out);
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(n, None, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for t in &self.0 {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses bracket notation: `*` is a single vertex, `[...]` a root with the
/// bracketed forest attached, juxtaposition a forest. `()` is the empty forest.
impl FromStr for Forest {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Ok(Forest::empty());
        }
        fn parse_forest(chars: &[char], mut i: usize, stop_at_close: bool) -> Result<(Vec<Tree>, usize), String> {
            let mut trees = Vec::new();
            while i < chars.len() {
                match chars[i] {
                    '*' => {
                        trees.push(Tree::leaf());
                        i += 1;
                    }
                    '[' => {
                        let (children, ni) = parse_forest(chars, i + 1, true)?;
                        i = ni;
                        trees.push(Tree::node(children));
                    }
                    ']' => {
                        if stop_at_close {
                            return Ok((trees, i + 1));
                        }
                        return Err("unmatched ']'".into());
                    }
                    c if c.is_whitespace() => i += 1,
                    c => return Err(format!("unexpected character {c:?} in forest")),
                }
            }
            if stop_at_close {
                return Err("unmatched '['".into());
            }
            Ok((trees, i))
        }
        let chars: Vec<char> = s.chars().collect();
        let (trees, end) = parse_forest(&chars, 0, false)?;
        if end != chars.len() {
            return Err("trailing input in forest".into());
        }
        Ok(Forest::new(trees))
    }
}

/// A simple graph up to isomorphism: vertex count plus the lexicographically
/// minimal edge list over all vertex relabelings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphKey {
    n: usize,
    edges: Vec<(u8, u8)>, // 0-based, each (a,b) with a < b, sorted
}

static GRAPH_CANON_CACHE: Lazy<Mutex<HashMap<(usize, Vec<(u8, u8)>), GraphKey>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

impl GraphKey {
    /// Canonicalize an edge list on `n` vertices (0-based endpoints) by
    /// minimising over all vertex permutations. Loops and repeated edges are
    /// rejected. Supported for n ≤ 9.
    pub fn canonicalize(n: usize, edges: &[(u8, u8)]) -> Result<GraphKey, String> {
        assert!(n <= 9, "graph canonicalization supported for n <= 9");
        let mut norm: Vec<(u8, u8)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err("loop edge".into());
            }
            if a as usize >= n || b as usize >= n {
                return Err("edge endpoint out of range".into());
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err("repeated edge".into());
        }
        let cache_key = (n, norm.clone());
        if let Some(hit) = GRAPH_CANON_CACHE.lock().unwrap().get(&cache_key) {
            return Ok(hit.clone());
        }
        let mut best: Option<Vec<(u8, u8)>> = None;
        let mut perm: Vec<u8> = (0..n as u8).collect();
        permute_all(&mut perm, 0, &mut |p| {
            let mut mapped: Vec<(u8, u8)> = norm
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (p[a as usize], p[b as usize]);
                    (x.min(y), x.max(y))
                })
                .collect();
            mapped.sort_unstable();
            if best.as_ref().map_or(true, |b| &mapped < b) {
                best = Some(mapped);
            }
        });
        let key = GraphKey { n, edges: best.unwrap_or_default() };
        GRAPH_CANON_CACHE.lock().unwrap().insert(cache_key, key.clone());
        Ok(key)
    }

    pub fn edgeless(n: usize) -> GraphKey {
        GraphKey { n, edges: Vec::new() }
    }

    /// The path graph on `n` vertices.
    pub fn path(n: usize) -> GraphKey {
        let edges: Vec<(u8, u8)> = (1..n).map(|i| ((i - 1) as u8, i as u8)).collect();
        GraphKey::canonicalize(n, &edges).unwrap()
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> GraphKey {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a as u8, b as u8));
            }
        }
        GraphKey::canonicalize(n, &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Disjoint union (second block of vertices shifted), canonicalized.
    pub fn disjoint_union(&self, other: &GraphKey) -> GraphKey {
        let n = self.n + other.n;
        let mut edges = self.edges.clone();
        for &(a, b) in &other.edges {
            edges.push((a + self.n as u8, b + self.n as u8));
        }
        GraphKey::canonicalize(n, &edges).unwrap()
    }

    /// Induced subgraph on a 0-based vertex subset, canonicalized.
    pub fn induced(&self, subset: &[u8]) -> GraphKey {
        let mut index = [u8::MAX; 9];
        for (i, &v) in subset.iter().enumerate() {
            index[v as usize] = i as u8;
        }
        let edges: Vec<(u8, u8)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a as usize] != u8::MAX && index[b as usize] != u8::MAX)
            .map(|&(a, b)| (index[a as usize], index[b as usize]))
            .collect();
        GraphKey::canonicalize(subset.len(), &edges).unwrap()
    }

    /// Connected components as canonical graphs.
    pub fn components(&self) -> Vec<GraphKey> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v as u8);
                for &(a, b) in &self.edges {
                    let (a, b) = (a as usize, b as usize);
                    if a == v && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    } else if b == v && !seen[a] {
                        seen[a] = true;
                        stack.push(a);
                    }
                }
            }
            comp.sort_unstable();
            out.push(self.induced(&comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// All graphs on `n` vertices up to isomorphism (memoized).
    pub fn all_of(n: usize) -> Vec<GraphKey> {
        static CACHE: Lazy<Mutex<HashMap<usize, Vec<GraphKey>>>> =
            Lazy::new(|| Mutex::new(HashMap::new()));
        if let Some(hit) = CACHE.lock().unwrap().get(&n) {
            return hit.clone();
        }
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                pairs.push((a as u8, b as u8));
            }
        }
        let mut set = std::collections::BTreeSet::new();
        for mask in 0u64..(1u64 << pairs.len()) {
            let edges: Vec<(u8, u8)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            set.insert(GraphKey::canonicalize(n, &edges).unwrap());
        }
        let out: Vec<GraphKey> = set.into_iter().collect();
        CACHE.lock().unwrap().insert(n, out.clone());
        out
    }
}

fn permute_all(perm: &mut Vec<u8>, k: usize, visit: &mut impl FnMut(&[u8])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

impl fmt::Display for GraphKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}-{}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GraphKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `n=5; 1-2,2-3` (1-based vertices; empty edge list allowed).
impl FromStr for GraphKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let rest = s.strip_prefix("n=").ok_or("graph must start with n=")?;
        let (n_str, edges_str) = rest.split_once(';').ok_or("missing ';' in graph")?;
        let n: usize = n_str.trim().parse().map_err(|_| "bad vertex count")?;
        let edges_str = edges_str.trim();
        let mut edges = Vec::new();
        if !edges_str.is_empty() {
            for e in edges_str.split(',') {
                let (a, b) = e.trim().split_once('-').ok_or(format!("bad edge {e:?}"))?;
                let a: usize = a.trim().parse().map_err(|_| format!("bad endpoint in {e:?}"))?;
                let b: usize = b.trim().parse().map_err(|_| format!("bad endpoint in {e:?}"))?;
                if a == 0 || b == 0 || a > n || b > n {
                    return Err(format!("edge {e:?} out of range"));
                }
                edges.push(((a - 1) as u8, (b - 1) as u8));
            }
        }
        GraphKey::canonicalize(n, &edges)
    }
}

/// The tagged union of all basis-element kinds. A single algebra instance
/// only ever uses one variant; the shared type lets the Hopf machinery stay
/// object-safe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BasisKey {
    Word(Word),
    Partition(Partition),
    Schur(Partition),
    Composition(Composition),
    Graph(GraphKey),
    Forest(Forest),
}

impl BasisKey {
    pub fn degree(&self) -> usize {
        match self {
            BasisKey::Word(w) => w.len(),
            BasisKey::Partition(p) | BasisKey::Schur(p) => p.size(),
            BasisKey::Composition(c) => c.size(),
            BasisKey::Graph(g) => g.n(),
            BasisKey::Forest(f) => f.degree(),
        }
    }

    pub fn as_word(&self) -> &Word {
        match self {
            BasisKey::Word(w) => w,
            _ => panic!("expected a word key, got {self}"),
        }
    }

    pub fn as_partition(&self) -> &Partition {
        match self {
            BasisKey::Partition(p) | BasisKey::Schur(p) => p,
            _ => panic!("expected a partition key, got {self}"),
        }
    }

    pub fn as_composition(&self) -> &Composition {
        match self {
            BasisKey::Composition(c) => c,
            _ => panic!("expected a composition key, got {self}"),
        }
    }

    pub fn as_graph(&self) -> &GraphKey {
        match self {
            BasisKey::Graph(g) => g,
            _ => panic!("expected a graph key, got {self}"),
        }
    }

    pub fn as_forest(&self) -> &Forest {
        match self {
            BasisKey::Forest(f) => f,
            _ => panic!("expected a forest key, got {self}"),
        }
    }

    fn variant_rank(&self) -> u8 {
        match self {
            BasisKey::Word(_) => 0,
            BasisKey::Partition(_) => 1,
            BasisKey::Schur(_) => 2,
            BasisKey::Composition(_) => 3,
            BasisKey::Graph(_) => 4,
            BasisKey::Forest(_) => 5,
        }
    }
}

/// Canonical key order: degree first, then the serialization-compatible
/// structural order within a kind. Deterministic iteration everywhere
/// depends on this.
impl Ord for BasisKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.variant_rank().cmp(&other.variant_rank()))
            .then_with(|| match (self, other) {
                (BasisKey::Word(a), BasisKey::Word(b)) => a.cmp(b),
                (BasisKey::Partition(a), BasisKey::Partition(b)) => a.cmp(b),
                (BasisKey::Schur(a), BasisKey::Schur(b)) => a.cmp(b),
                (BasisKey::Composition(a), BasisKey::Composition(b)) => a.cmp(b),
                (BasisKey::Graph(a), BasisKey::Graph(b)) => a.cmp(b),
                (BasisKey::Forest(a), BasisKey::Forest(b)) => a.cmp(b),
                _ => unreachable!(),
            })
    }
}

impl PartialOrd for BasisKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKey::Word(w) => write!(f, "{w}"),
            BasisKey::Partition(p) | BasisKey::Schur(p) => write!(f, "{p}"),
            BasisKey::Composition(c) => write!(f, "{c}"),
            BasisKey::Graph(g) => write!(f, "{g}"),
            BasisKey::Forest(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Debug for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Helper for stationary-distribution displays and probabilities.
pub fn rational_from_bigints(num: BigInt, den: BigInt) -> Rational {
    Rational::from_big(num, den)
}
