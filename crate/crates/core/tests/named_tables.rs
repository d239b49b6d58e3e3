//! The n = 4 rock-breaking and descent-set tables, entry for entry, against
//! hardcoded transcriptions — plus byte-identity of the rendered TSV tables
//! with the checked-in golden files.

use hopfchain::chain::{Chain, EigFunction, Side};
use hopfchain::hopf::Degree;
use hopfchain::instances::get_instance;
use hopfchain::keys::Partition;
use hopfchain::named::{qsym_left_g, qsym_right_f, rock_f, rock_g};
use hopfchain::rational::Rational;
use hopfchain::tables::*;
use hopfchain::words::Composition;
use std::collections::BTreeMap;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

const COMP_ORDER: [&str; 8] =
    ["(4)", "(1,3)", "(3,1)", "(2,2)", "(1,2,1)", "(2,1,1)", "(1,1,2)", "(1,1,1,1)"];
const PART_ORDER: [&str; 5] = ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"];

#[test]
fn rock_right_table_n4() {
    // Columns f_μ, rows λ.
    let expected: [[&str; 5]; 5] = [
        ["1", "1", "1/2", "1/2", "1/24"],
        ["0", "1/4", "0", "1/4", "1/24"],
        ["0", "0", "1/6", "1/6", "1/24"],
        ["0", "0", "0", "1/12", "1/24"],
        ["0", "0", "0", "0", "1/24"],
    ];
    for (i, lam) in PART_ORDER.iter().enumerate() {
        for (j, mu) in PART_ORDER.iter().enumerate() {
            let lam: Partition = lam.parse().unwrap();
            let mu: Partition = mu.parse().unwrap();
            assert_eq!(rock_f(&mu, &lam), q(expected[i][j]), "f_{mu}({lam})");
        }
    }
}

#[test]
fn rock_left_table_n4() {
    // Rows g_μ, columns λ.
    let expected: [[i64; 5]; 5] = [
        [1, -4, -3, 12, -6],
        [0, 4, 0, -12, 8],
        [0, 0, 6, -12, 6],
        [0, 0, 0, 12, -12],
        [0, 0, 0, 0, 24],
    ];
    for (i, mu) in PART_ORDER.iter().enumerate() {
        for (j, lam) in PART_ORDER.iter().enumerate() {
            let mu: Partition = mu.parse().unwrap();
            let lam: Partition = lam.parse().unwrap();
            assert_eq!(rock_g(&mu, &lam), Rational::from_int(expected[i][j]), "g_{mu}({lam})");
        }
    }
}

#[test]
fn descent_right_table_n4() {
    let expected: [[&str; 8]; 8] = [
        ["1/4", "0", "1/3", "1/8", "0", "1/4", "0", "1/24"],
        ["-1/12", "1/2", "1/12", "-1/8", "1/2", "1/12", "-1", "1/24"],
        ["-1/12", "-1/2", "1/12", "-1/8", "-1/2", "1/12", "-1", "1/24"],
        ["-1/12", "0", "-1/6", "1/8", "0", "1/12", "2", "1/24"],
        ["1/12", "0", "-1/6", "1/8", "0", "-1/12", "-2", "1/24"],
        ["1/12", "1/2", "1/12", "-1/8", "-1/2", "-1/12", "1", "1/24"],
        ["1/12", "-1/2", "1/12", "-1/8", "1/2", "-1/12", "1", "1/24"],
        ["-1/4", "0", "1/3", "1/8", "0", "-1/4", "0", "1/24"],
    ];
    for (row, j_str) in COMP_ORDER.iter().enumerate() {
        for (col, i_str) in COMP_ORDER.iter().enumerate() {
            let j: Composition = j_str.parse().unwrap();
            let i: Composition = i_str.parse().unwrap();
            assert_eq!(qsym_right_f(&i, &j), q(expected[row][col]), "f_{i}({j})");
        }
    }
}

#[test]
fn descent_left_table_n4() {
    // Rows g_I, columns J. The (g_{(1,1,2)}, (1,2,1)) entry is −1/6: the
    // row must satisfy g·K̂ = 2^{1−4}·g, which pins the sign (checked below
    // for every row).
    let expected: [[&str; 8]; 8] = [
        ["1", "-1", "-1", "-1", "1", "1", "1", "-1"],
        ["0", "1/2", "-1/2", "0", "0", "1/2", "-1/2", "0"],
        ["1", "0", "0", "-1", "-1", "0", "0", "1"],
        ["1", "-1", "-1", "1", "1", "-1", "-1", "1"],
        ["0", "1/2", "-1/2", "0", "0", "-1/2", "1/2", "0"],
        ["1", "1", "1", "1", "-1", "-1", "-1", "-1"],
        ["0", "-1/12", "-1/12", "1/6", "-1/6", "1/12", "1/12", "0"],
        ["1", "3", "3", "5", "5", "3", "3", "1"],
    ];
    let chain = Chain::new(get_instance("qsym_F").unwrap(), 2, Degree::Plain(4)).unwrap();
    for (row, i_str) in COMP_ORDER.iter().enumerate() {
        let i: Composition = i_str.parse().unwrap();
        let mut values = BTreeMap::new();
        for (col, j_str) in COMP_ORDER.iter().enumerate() {
            let j: Composition = j_str.parse().unwrap();
            let v = qsym_left_g(&i, &j);
            assert_eq!(v, q(expected[row][col]), "g_{i}({j})");
            values.insert(hopfchain::BasisKey::Composition(j), v);
        }
        // Each hardcoded row really is a left eigenfunction.
        let exponent = hopfchain::words::lyndon_factor_count(&i.as_word());
        let f = EigFunction { side: Side::Left, exponent, values, label: format!("g{i}") };
        assert!(f.satisfies(&chain).unwrap(), "row g_{i} fails the eigen-equation");
    }
}

#[test]
fn descent_right_rows_satisfy_the_chain_equation() {
    let chain = Chain::new(get_instance("qsym_F").unwrap(), 2, Degree::Plain(4)).unwrap();
    for i_str in COMP_ORDER {
        let i: Composition = i_str.parse().unwrap();
        let mut values = BTreeMap::new();
        for j_str in COMP_ORDER {
            let j: Composition = j_str.parse().unwrap();
            values.insert(hopfchain::BasisKey::Composition(j.clone()), qsym_right_f(&i, &j));
        }
        let exponent = hopfchain::words::lyndon_factor_count(&i.as_word());
        let f = EigFunction { side: Side::Right, exponent, values, label: format!("f{i}") };
        assert!(f.satisfies(&chain).unwrap(), "column f_{i} fails the eigen-equation");
    }
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn golden_files_byte_identical() {
    let schur = Chain::new(get_instance("sym_schur").unwrap(), 2, Degree::Plain(3)).unwrap();
    assert_eq!(render_transition_matrix(&schur).unwrap(), golden("schur_n3_matrix.tsv"));
    let rock = Chain::new(get_instance("sym_h").unwrap(), 2, Degree::Plain(4)).unwrap();
    assert_eq!(render_transition_matrix(&rock).unwrap(), golden("rock_n4_matrix.tsv"));
    assert_eq!(render_rock_right(4), golden("rock_n4_right.tsv"));
    assert_eq!(render_rock_left(4), golden("rock_n4_left.tsv"));
    let qsym = Chain::new(get_instance("qsym_F").unwrap(), 2, Degree::Plain(4)).unwrap();
    assert_eq!(render_transition_matrix(&qsym).unwrap(), golden("descent_n4_matrix.tsv"));
    assert_eq!(render_qsym_right(4), golden("descent_n4_right.tsv"));
    assert_eq!(render_qsym_left(4), golden("descent_n4_left.tsv"));
}

#[test]
fn renders_are_stable_across_repeated_calls() {
    let first = render_qsym_left(4);
    let second = render_qsym_left(4);
    assert_eq!(first, second);
    let rock1 = render_rock_right(4);
    let rock2 = render_rock_right(4);
    assert_eq!(rock1, rock2);
}
