//! Chain-level properties: the worked transition matrices, rescaling
//! function values, stationarity, reversibility, time reversal, projection,
//! absorption, and the structural consequences of free-commutative bases.

use hopfchain::chain::{
    absorption_probability, check_lumping, eta, stationary_distributions, time_reversal,
    transition_row, validate_state_space_basis, Chain, ChainError,
};
use hopfchain::hopf::Degree;
use hopfchain::instances::get_instance;
use hopfchain::keys::{BasisKey, Forest, GraphKey, Partition};
use hopfchain::rational::Rational;
use hopfchain::words::{descent_composition, Composition, Word};
use hopfchain::Rational as Q;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

#[test]
fn restriction_induction_matrix_n3() {
    // States in the worked order: trivial (3), sign (1,1,1), 2-dim (2,1).
    let alg = get_instance("sym_schur").unwrap();
    let chain = Chain::new(alg, 2, Degree::Plain(3)).unwrap();
    let k = chain.transition_matrix().unwrap();
    let s = |p: &str| BasisKey::Schur(p.parse::<Partition>().unwrap());
    let expected = [
        ("(3)", "(3)", "1/2"),
        ("(3)", "(1,1,1)", "0"),
        ("(3)", "(2,1)", "1/2"),
        ("(1,1,1)", "(3)", "0"),
        ("(1,1,1)", "(1,1,1)", "1/2"),
        ("(1,1,1)", "(2,1)", "1/2"),
        ("(2,1)", "(3)", "1/8"),
        ("(2,1)", "(1,1,1)", "1/8"),
        ("(2,1)", "(2,1)", "3/4"),
    ];
    for (x, y, v) in expected {
        assert_eq!(k.entry(&s(x), &s(y)).unwrap(), &q(v), "K({x},{y})");
    }
}

#[test]
fn schur_eta_is_dimension() {
    let alg = get_instance("sym_schur").unwrap();
    // η of an irreducible is its dimension: 1, 1, 2 at degree 3.
    assert_eq!(eta(alg.as_ref(), &BasisKey::Schur("(3)".parse().unwrap())), Q::one());
    assert_eq!(eta(alg.as_ref(), &BasisKey::Schur("(1,1,1)".parse().unwrap())), Q::one());
    assert_eq!(eta(alg.as_ref(), &BasisKey::Schur("(2,1)".parse().unwrap())), Q::from_int(2));
    // Pre-rescale matrix times the dimension vector: eigenvalue 1.
    // (The rescaled chain has constant right eigenvector 1 instead.)
    let chain = Chain::new(alg, 2, Degree::Plain(3)).unwrap();
    let k = chain.transition_matrix().unwrap();
    let ones = vec![Q::one(), Q::one(), Q::one()];
    assert_eq!(k.apply(&ones).unwrap(), ones);
}

#[test]
fn eta_worked_values() {
    let sh = get_instance("shuffle").unwrap();
    for w in ["(1)", "(312)", "(1122)", "(54321)"] {
        assert_eq!(eta(sh.as_ref(), &BasisKey::Word(w.parse::<Word>().unwrap())), Q::one(), "{w}");
    }
    let symh = get_instance("sym_h").unwrap();
    assert_eq!(
        eta(symh.as_ref(), &BasisKey::Partition("(2,1)".parse().unwrap())),
        Q::from_int(3)
    );
    let forests = get_instance("ck_forests").unwrap();
    assert_eq!(
        eta(forests.as_ref(), &BasisKey::Forest("[*[**]]".parse::<Forest>().unwrap())),
        Q::from_int(8)
    );
}

#[test]
fn rock_breaking_matrix_n4() {
    let alg = get_instance("sym_h").unwrap();
    let chain = Chain::new(alg, 2, Degree::Plain(4)).unwrap();
    let k = chain.transition_matrix().unwrap();
    let p = |s: &str| BasisKey::Partition(s.parse::<Partition>().unwrap());
    let expected = [
        ("(4)", vec![("(4)", "1/8"), ("(3,1)", "1/2"), ("(2,2)", "3/8")]),
        ("(3,1)", vec![("(3,1)", "1/4"), ("(2,1,1)", "3/4")]),
        ("(2,2)", vec![("(2,2)", "1/4"), ("(2,1,1)", "1/2"), ("(1,1,1,1)", "1/4")]),
        ("(2,1,1)", vec![("(2,1,1)", "1/2"), ("(1,1,1,1)", "1/2")]),
        ("(1,1,1,1)", vec![("(1,1,1,1)", "1")]),
    ];
    for (x, row) in expected {
        let mut mass = Q::zero();
        for (y, v) in &row {
            assert_eq!(k.entry(&p(x), &p(y)).unwrap(), &q(v), "K({x},{y})");
            mass += q(v);
        }
        assert!(mass.is_one(), "row {x} listed mass {mass}");
    }
}

#[test]
fn descent_chain_matrix_16k_n4() {
    let alg = get_instance("qsym_F").unwrap();
    let chain = Chain::new(alg, 2, Degree::Plain(4)).unwrap();
    let k = chain.transition_matrix().unwrap();
    let c = |s: &str| BasisKey::Composition(s.parse::<Composition>().unwrap());
    let order =
        ["(4)", "(1,3)", "(3,1)", "(2,2)", "(1,2,1)", "(2,1,1)", "(1,1,2)", "(1,1,1,1)"];
    let rows: [[i64; 8]; 8] = [
        [5, 3, 3, 4, 1, 0, 0, 0],
        [1, 5, 2, 3, 2, 1, 2, 0],
        [1, 2, 5, 3, 2, 2, 1, 0],
        [1, 2, 2, 6, 3, 1, 1, 0],
        [0, 1, 1, 3, 6, 2, 2, 1],
        [0, 1, 2, 2, 3, 5, 2, 1],
        [0, 2, 1, 2, 3, 2, 5, 1],
        [0, 0, 0, 1, 4, 3, 3, 5],
    ];
    let sixteen = Q::from_int(16);
    for (i, x) in order.iter().enumerate() {
        for (j, y) in order.iter().enumerate() {
            let got = &sixteen * k.entry(&c(x), &c(y)).unwrap();
            assert_eq!(got, Q::from_int(rows[i][j]), "16K({x},{y})");
        }
    }
}

#[test]
fn power_basis_is_rejected_with_primitivity_diagnostic() {
    let alg = get_instance("sym_p").unwrap();
    let report = validate_state_space_basis(alg.as_ref(), &Degree::Plain(3)).unwrap();
    assert!(!report.is_valid());
    assert_eq!(report.primitive_elements.len(), 2); // p_(2) and p_(3)
    let err = match Chain::new(alg, 2, Degree::Plain(3)) {
        Err(e) => e,
        Ok(_) => panic!("p basis unexpectedly accepted"),
    };
    match err {
        ChainError::InvalidStateBasis { detail, .. } => {
            assert!(detail.contains("primitive"), "{detail}");
        }
        other => panic!("expected InvalidStateBasis, got {other}"),
    }
    // The h basis passes the same validation.
    let alg = get_instance("sym_h").unwrap();
    assert!(validate_state_space_basis(alg.as_ref(), &Degree::Plain(3)).unwrap().is_valid());
    // Shuffle multidegrees pass too.
    let alg = get_instance("shuffle").unwrap();
    assert!(validate_state_space_basis(alg.as_ref(), &Degree::Multi(vec![2, 1]))
        .unwrap()
        .is_valid());
}

#[test]
fn stationary_distributions_worked_examples() {
    // Riffle-shuffling of distinct cards: uniform.
    let sh = get_instance("shuffle").unwrap();
    let chain = Chain::new(sh, 2, Degree::Multi(vec![1, 1, 1, 1])).unwrap();
    let pis = stationary_distributions(&chain).unwrap();
    assert_eq!(pis.len(), 1);
    assert!(pis[0].unique);
    assert!(pis[0].probabilities.iter().all(|p| p == &Q::new(1, 24)));

    // Restriction-then-induction: squared-dimension law (1/6, 1/6, 2/3).
    let schur = get_instance("sym_schur").unwrap();
    let chain = Chain::new(schur, 2, Degree::Plain(3)).unwrap();
    let pis = stationary_distributions(&chain).unwrap();
    assert_eq!(pis.len(), 1);
    let by_state: Vec<(String, String)> = chain
        .states
        .iter()
        .zip(pis[0].probabilities.iter())
        .map(|(s, p)| (s.to_string(), p.to_string()))
        .collect();
    for (state, prob) in [("(3)", "1/6"), ("(1,1,1)", "1/6"), ("(2,1)", "2/3")] {
        assert!(
            by_state.contains(&(state.to_string(), prob.to_string())),
            "missing {state}:{prob} in {by_state:?}"
        );
    }

    // Graphs: point mass at the edgeless graph.
    let graphs = get_instance("graphs").unwrap();
    let chain = Chain::new(graphs, 2, Degree::Plain(4)).unwrap();
    let pis = stationary_distributions(&chain).unwrap();
    assert_eq!(pis.len(), 1);
    for (state, p) in chain.states.iter().zip(pis[0].probabilities.iter()) {
        if state.as_graph().num_edges() == 0 {
            assert!(p.is_one());
        } else {
            assert!(p.is_zero());
        }
    }
}

#[test]
fn schur_chain_is_reversible_and_detailed_balance_holds() {
    for n in 2..=4usize {
        let alg = get_instance("sym_schur").unwrap();
        let chain = Chain::new(alg, 2, Degree::Plain(n)).unwrap();
        assert!(hopfchain::chain::is_reversible(&chain).unwrap(), "n = {n}");
        let k = chain.transition_matrix().unwrap();
        let rev = time_reversal(&chain).unwrap();
        assert_eq!(k, rev, "time reversal differs at n = {n}");
    }
}

#[test]
fn shuffle_time_reversal_is_the_free_associative_chain() {
    let sh = get_instance("shuffle").unwrap();
    let chain = Chain::new(sh, 2, Degree::Multi(vec![1, 1, 1, 1])).unwrap();
    let rev = time_reversal(&chain).unwrap();
    let fa = get_instance("free_assoc").unwrap();
    let fa_chain = Chain::new(fa, 2, Degree::Multi(vec![1, 1, 1, 1])).unwrap();
    let k_fa = fa_chain.transition_matrix().unwrap();
    for x in &chain.states {
        for y in &chain.states {
            assert_eq!(rev.entry(x, y), k_fa.entry(x, y), "K*({x},{y})");
        }
    }
}

#[test]
fn descent_lumping_passes_and_perturbed_map_fails() {
    let sh = get_instance("shuffle").unwrap();
    let qs = get_instance("qsym_F").unwrap();
    let source = Chain::new(sh, 2, Degree::Multi(vec![1, 1, 1])).unwrap();
    let target = Chain::new(qs, 2, Degree::Plain(3)).unwrap();
    let theta = |x: &BasisKey| BasisKey::Composition(descent_composition(x.as_word()));
    let report = check_lumping(&theta, &source, &target).unwrap();
    assert!(report.dynkin_holds);
    assert!(report.max_violation.is_zero());

    // The identity map trivially lumps a chain onto itself.
    let id = |x: &BasisKey| x.clone();
    let target2 = Chain::new(get_instance("qsym_F").unwrap(), 2, Degree::Plain(3)).unwrap();
    let report = check_lumping(&id, &target2, &target).unwrap();
    assert!(report.dynkin_holds);

    // A deliberately wrong map must fail. (Swapping (3) with (1,2) is not
    // an automorphism of the target chain; note that swapping (3) with
    // (1,1,1) would be one, by the reversal symmetry.)
    let bad = |x: &BasisKey| {
        let c = descent_composition(x.as_word());
        let swapped: Composition = match c.to_string().as_str() {
            "(3)" => "(1,2)".parse().unwrap(),
            "(1,2)" => "(3)".parse().unwrap(),
            _ => c,
        };
        BasisKey::Composition(swapped)
    };
    let report = check_lumping(&bad, &source, &target).unwrap();
    assert!(!report.dynkin_holds);
    assert!(!report.max_violation.is_zero());
}

#[test]
fn absorption_probabilities_on_graphs() {
    let alg = get_instance("graphs").unwrap();
    // Single edge: both monochromatic colourings of the two vertices keep
    // the edge; absorption (losing it) has probability 1/2.
    let chain = Chain::new(alg.clone(), 2, Degree::Plain(2)).unwrap();
    let p2 = BasisKey::Graph(GraphKey::path(2));
    assert_eq!(absorption_probability(&chain, &p2).unwrap(), Q::new(1, 2));
    // Path on three vertices: 1/4.
    let chain = Chain::new(alg.clone(), 2, Degree::Plain(3)).unwrap();
    let p3 = BasisKey::Graph(GraphKey::path(3));
    assert_eq!(absorption_probability(&chain, &p3).unwrap(), Q::new(1, 4));
    // An already absorbed state stays put.
    let dots = BasisKey::Graph(GraphKey::edgeless(3));
    assert_eq!(absorption_probability(&chain, &dots).unwrap(), Q::one());
}

#[test]
fn rock_chain_rows_match_multinomial_breaking() {
    // Row (4) of the degree-4 rock chain: (1/8, 1/2, 3/8, 0, 0).
    let alg = get_instance("sym_h").unwrap();
    let chain = Chain::new(alg, 2, Degree::Plain(4)).unwrap();
    let x = BasisKey::Partition("(4)".parse().unwrap());
    let row = transition_row(&chain, &x).unwrap();
    let lookup = |s: &str| {
        row.iter()
            .find(|(y, _)| y == &BasisKey::Partition(s.parse::<Partition>().unwrap()))
            .unwrap()
            .1
            .clone()
    };
    assert_eq!(lookup("(4)"), q("1/8"));
    assert_eq!(lookup("(3,1)"), q("1/2"));
    assert_eq!(lookup("(2,2)"), q("3/8"));
    assert_eq!(lookup("(2,1,1)"), Q::zero());
    assert_eq!(lookup("(1,1,1,1)"), Q::zero());
}

#[test]
fn tree_chain_row_from_dot_q3() {
    // From the 5-vertex tree with a leaf child and a star child, the a = 2
    // chain can reach both the star-plus-edge and dots-plus-edge forests;
    // the row must sum to 1 exactly.
    let alg = get_instance("ck_forests").unwrap();
    let chain = Chain::new(alg, 2, Degree::Plain(5)).unwrap();
    let x = BasisKey::Forest("[*[**]]".parse::<Forest>().unwrap());
    let row = transition_row(&chain, &x).unwrap();
    let total: Rational = row.iter().map(|(_, p)| p.clone()).sum();
    assert!(total.is_one());
    let q3p2 = BasisKey::Forest("[**][*]".parse::<Forest>().unwrap());
    let dots3p2 = BasisKey::Forest("***[*]".parse::<Forest>().unwrap());
    let find = |k: &BasisKey| row.iter().find(|(y, _)| y == k).unwrap().1.clone();
    assert!(!find(&q3p2).is_zero());
    assert!(!find(&dots3p2).is_zero());
}
