//! Monte-Carlo samplers for the four named chains, with statistical
//! validation of the exact spectral predictions.
//!
//! Reproducibility: the generator is ChaCha8 (a counter-based stream
//! cipher RNG). Trial `t` of a run with seed `s` always draws from
//! `ChaCha8Rng::seed_from_u64(s)` switched to stream `t`, so results are
//! bit-identical regardless of how trials are scheduled across workers;
//! parallel reduction only sums per-trial outputs.

use crate::chain::{transition_row, Chain};
use crate::keys::{BasisKey, Forest, GraphKey, Partition, Tree};
use crate::rational::Rational;
use crate::words::{Letter, Word};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashMap;

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// One a-handed riffle of a deck: every card is dealt an independent
/// uniform pile label; the label multiset realises the multinomial cut
/// (pile j gets the j-th consecutive block), and reading the labels in
/// order realises a uniform interleaving of the piles.
pub fn riffle_step(deck: &Word, a: usize, rng: &mut impl Rng) -> Word {
    assert!(a >= 2, "riffle needs a >= 2");
    let n = deck.len();
    if n <= 1 {
        return deck.clone();
    }
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..a)).collect();
    let mut counts = vec![0usize; a];
    for &l in &labels {
        counts[l] += 1;
    }
    let mut starts = vec![0usize; a];
    for j in 1..a {
        starts[j] = starts[j - 1] + counts[j - 1];
    }
    let mut next = starts.clone();
    let mut out = Vec::with_capacity(n);
    let letters = deck.letters();
    for &l in &labels {
        out.push(letters[next[l]]);
        next[l] += 1;
    }
    Word::new(out)
}

/// Test-only oracle formulation of the same step: cut multinomially, then
/// pick an interleaving uniformly at random.
pub fn riffle_step_cut_then_interleave(deck: &Word, a: usize, rng: &mut impl Rng) -> Word {
    let n = deck.len();
    let mut cuts = vec![0usize; a];
    for _ in 0..n {
        cuts[rng.gen_range(0..a)] += 1;
    }
    let mut piles: Vec<Vec<Letter>> = Vec::with_capacity(a);
    let mut pos = 0usize;
    for &c in &cuts {
        piles.push(deck.letters()[pos..pos + c].to_vec());
        pos += c;
    }
    // Drop cards pile by pile with probability proportional to pile size.
    let mut out = Vec::with_capacity(n);
    let mut remaining: Vec<usize> = piles.iter().map(|p| p.len()).collect();
    let mut fronts = vec![0usize; a];
    for _ in 0..n {
        let total: usize = remaining.iter().sum();
        let mut draw = rng.gen_range(0..total);
        for j in 0..a {
            if draw < remaining[j] {
                out.push(piles[j][fronts[j]]);
                fronts[j] += 1;
                remaining[j] -= 1;
                break;
            }
            draw -= remaining[j];
        }
    }
    Word::new(out)
}

/// One rock-breaking step: each part splits multinomially into a pieces
/// (empty pieces vanish).
pub fn rock_step(lambda: &Partition, a: usize, rng: &mut impl Rng) -> Partition {
    let mut parts = Vec::new();
    for &p in lambda.parts() {
        let mut pieces = vec![0u32; a];
        for _ in 0..p {
            pieces[rng.gen_range(0..a)] += 1;
        }
        parts.extend(pieces.into_iter().filter(|&x| x > 0));
    }
    Partition::new(parts)
}

/// One edge-removal step: colour the vertices independently and uniformly
/// with a colours, delete edges between different colours.
pub fn graph_step(g: &GraphKey, a: usize, rng: &mut impl Rng) -> GraphKey {
    let colors: Vec<usize> = (0..g.n()).map(|_| rng.gen_range(0..a)).collect();
    let edges: Vec<(u8, u8)> = g
        .edges()
        .iter()
        .filter(|&&(x, y)| colors[x as usize] == colors[y as usize])
        .cloned()
        .collect();
    GraphKey::canonicalize(g.n(), &edges).expect("filtered edge list stays simple")
}

/// Mutable rooted forest for the pruning sampler.
struct SimForest {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    roots: Vec<usize>,
}

impl SimForest {
    fn from_forest(f: &Forest) -> SimForest {
        let lf = crate::named::LabeledForest::from_forest(f);
        SimForest { parent: lf.parent, children: lf.children, roots: lf.roots }
    }

    fn component(&self, root: usize) -> Vec<usize> {
        let mut out = vec![root];
        let mut i = 0;
        while i < out.len() {
            let v = out[i];
            out.extend(self.children[v].iter().cloned());
            i += 1;
        }
        out
    }

    fn descendants_strict(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack: Vec<usize> = self.children[v].clone();
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children[u].iter().cloned());
        }
        out
    }

}

/// One tree-pruning step: colour the vertices uniformly, then promote — if
/// a component root missed the working colour, it swaps with a uniform
/// colour-bearer; then level by level, each vertex missing the colour but
/// with coloured descendants swaps with a uniform one of them. The colour
/// classes split off as trunks, and the leftover branches repeat with the
/// next colour down.
pub fn tree_prune_step(f: &Forest, a: usize, rng: &mut impl Rng) -> Forest {
    let sim = SimForest::from_forest(f);
    let nv = sim.parent.len();
    if nv == 0 {
        return Forest::empty();
    }
    let mut colors: Vec<usize> = (0..nv).map(|_| rng.gen_range(1..=a)).collect();
    let mut out_trees: Vec<Tree> = Vec::new();
    let mut components: Vec<usize> = sim.roots.clone();
    for color in (1..=a).rev() {
        let mut next_components = Vec::new();
        for &root in &components {
            let comp = sim.component(root);
            let holders: Vec<usize> =
                comp.iter().cloned().filter(|&v| colors[v] == color).collect();
            if holders.is_empty() {
                // Earlier stages removed every higher colour, so this can
                // only happen above colour 1.
                next_components.push(root);
                continue;
            }
            // Root exchange.
            if colors[root] != color {
                let pick = holders[rng.gen_range(0..holders.len())];
                colors.swap(root, pick);
            }
            // Promotion sweeps by depth.
            let mut by_depth: Vec<Vec<usize>> = Vec::new();
            for &v in &comp {
                let d = sim.depth_within(v, root);
                if by_depth.len() <= d {
                    by_depth.resize(d + 1, Vec::new());
                }
                by_depth[d].push(v);
            }
            for level in by_depth.iter().skip(1) {
                for &v in level {
                    if colors[v] == color {
                        continue;
                    }
                    let descs: Vec<usize> = sim
                        .descendants_within(v, &comp)
                        .into_iter()
                        .filter(|&u| colors[u] == color)
                        .collect();
                    if !descs.is_empty() {
                        let pick = descs[rng.gen_range(0..descs.len())];
                        colors.swap(v, pick);
                    }
                }
            }
            // The colour class is now a trunk; extract it and re-root the
            // cut branches.
            let in_trunk: Vec<usize> =
                comp.iter().cloned().filter(|&v| colors[v] == color).collect();
            let trunk_set: std::collections::BTreeSet<usize> = in_trunk.iter().cloned().collect();
            out_trees.push(sim.shape_subset(root, &trunk_set));
            for &v in &comp {
                if !trunk_set.contains(&v) {
                    let parent_in_trunk =
                        sim.parent[v].map(|p| trunk_set.contains(&p)).unwrap_or(false);
                    if parent_in_trunk {
                        next_components.push(v);
                    }
                }
            }
        }
        components = next_components;
        if components.is_empty() {
            break;
        }
    }
    Forest::new(out_trees)
}

impl SimForest {
    fn depth_within(&self, v: usize, root: usize) -> usize {
        let mut d = 0;
        let mut cur = v;
        while cur != root {
            cur = self.parent[cur].expect("vertex below root");
            d += 1;
        }
        d
    }

    fn descendants_within(&self, v: usize, comp: &[usize]) -> Vec<usize> {
        let set: std::collections::BTreeSet<usize> = comp.iter().cloned().collect();
        self.descendants_strict(v).into_iter().filter(|u| set.contains(u)).collect()
    }

    fn shape_subset(&self, root: usize, subset: &std::collections::BTreeSet<usize>) -> Tree {
        fn rec(
            sim: &SimForest,
            v: usize,
            subset: &std::collections::BTreeSet<usize>,
        ) -> Tree {
            let children: Vec<Tree> = sim.children[v]
                .iter()
                .filter(|c| subset.contains(c))
                .map(|&c| rec(sim, c, subset))
                .collect();
            Tree::node(children)
        }
        rec(self, root, subset)
    }
}

/// Which chain a simulation runs.
#[derive(Clone, Debug)]
pub enum SimChain {
    Riffle { start: Word },
    Rock { start: Partition },
    Graph { start: GraphKey },
    Tree { start: Forest },
}

impl SimChain {
    pub fn start_key(&self) -> BasisKey {
        match self {
            SimChain::Riffle { start } => BasisKey::Word(start.clone()),
            SimChain::Rock { start } => BasisKey::Partition(start.clone()),
            SimChain::Graph { start } => BasisKey::Graph(start.clone()),
            SimChain::Tree { start } => BasisKey::Forest(start.clone()),
        }
    }

    fn run(&self, a: usize, m: usize, rng: &mut impl Rng) -> BasisKey {
        match self {
            SimChain::Riffle { start } => {
                let mut w = start.clone();
                for _ in 0..m {
                    w = riffle_step(&w, a, rng);
                }
                BasisKey::Word(w)
            }
            SimChain::Rock { start } => {
                let mut p = start.clone();
                for _ in 0..m {
                    p = rock_step(&p, a, rng);
                }
                BasisKey::Partition(p)
            }
            SimChain::Graph { start } => {
                let mut g = start.clone();
                for _ in 0..m {
                    g = graph_step(&g, a, rng);
                }
                BasisKey::Graph(g)
            }
            SimChain::Tree { start } => {
                let mut f = start.clone();
                for _ in 0..m {
                    f = tree_prune_step(&f, a, rng);
                }
                BasisKey::Forest(f)
            }
        }
    }
}

/// A statistic evaluated on sampled states, with its exact m-step
/// prediction from the spectral theory.
pub struct Statistic {
    pub name: String,
    pub eval: Box<dyn Fn(&BasisKey) -> f64 + Sync + Send>,
    pub prediction: Box<dyn Fn(usize) -> Rational + Sync + Send>,
}

/// Report of a Monte-Carlo expectation test.
#[derive(Clone, Debug)]
pub struct TrialReport {
    pub statistic: String,
    pub m: usize,
    pub trials: usize,
    pub empirical_mean: f64,
    pub exact_prediction: Rational,
    pub standard_error: f64,
    pub z_score: f64,
}

impl TrialReport {
    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{:.6}\t{}\t{:.6}\t{:.3}",
            self.statistic,
            self.m,
            self.trials,
            self.empirical_mean,
            self.exact_prediction,
            self.standard_error,
            self.z_score
        )
    }

    pub const TSV_HEADER: &'static str =
        "statistic\tm\ttrials\tempirical_mean\texact\tstderr\tz";
}

/// Run `trials` independent m-step trajectories and compare the empirical
/// mean of the statistic with its exact prediction.
pub fn expectation_test(
    chain: &SimChain,
    a: usize,
    m: usize,
    statistic: &Statistic,
    trials: usize,
    seed: u64,
) -> TrialReport {
    let values: Vec<f64> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let state = chain.run(a, m, &mut rng);
            (statistic.eval)(&state)
        })
        .collect();
    let n = trials as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    let stderr = (var / n).sqrt();
    let exact = (statistic.prediction)(m);
    let z = if stderr > 0.0 { (mean - exact.to_f64()) / stderr } else { 0.0 };
    TrialReport {
        statistic: statistic.name.clone(),
        m,
        trials,
        empirical_mean: mean,
        exact_prediction: exact,
        standard_error: stderr,
        z_score: z,
    }
}

/// Histogram of one-step results.
pub fn one_step_histogram(
    chain: &SimChain,
    a: usize,
    trials: usize,
    seed: u64,
) -> HashMap<BasisKey, u64> {
    (0..trials as u64)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<BasisKey, u64>, t| {
            let mut rng = trial_rng(seed, t);
            let state = chain.run(a, 1, &mut rng);
            *acc.entry(state).or_insert(0) += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// Chi-square goodness-of-fit report against an exact transition row.
#[derive(Clone, Debug)]
pub struct ChiSquareReport {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
    /// Trials that landed on exact-zero-probability states (must be 0).
    pub impossible_hits: u64,
}

/// Compare the empirical one-step distribution against the exact row of the
/// transition matrix.
pub fn chi_square_one_step(
    sim: &SimChain,
    exact: &Chain,
    trials: usize,
    seed: u64,
) -> Result<ChiSquareReport, crate::chain::ChainError> {
    let hist = one_step_histogram(sim, exact.a, trials, seed);
    let row = transition_row(exact, &sim.start_key())?;
    let mut statistic = 0.0;
    let mut dof = 0usize;
    let mut impossible = 0u64;
    let mut seen_mass = 0u64;
    for (y, p) in &row {
        let observed = hist.get(y).cloned().unwrap_or(0);
        seen_mass += observed;
        if p.is_zero() {
            impossible += observed;
            continue;
        }
        let expected = p.to_f64() * trials as f64;
        let diff = observed as f64 - expected;
        statistic += diff * diff / expected;
        dof += 1;
    }
    assert_eq!(seen_mass, trials as u64, "sampler left the exact state space");
    let dof = dof.saturating_sub(1);
    let p_value = chi_square_sf(statistic, dof as f64);
    Ok(ChiSquareReport { statistic, dof, p_value, impossible_hits: impossible })
}

/// Survival function of the chi-square distribution.
fn chi_square_sf(x: f64, dof: f64) -> f64 {
    if dof == 0.0 {
        return 1.0;
    }
    use statrs::distribution::{ChiSquared, ContinuousCDF};
    let d = ChiSquared::new(dof).expect("positive dof");
    1.0 - d.cdf(x)
}
