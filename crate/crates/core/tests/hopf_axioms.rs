//! The Hopf axiom battery over all instances, the power rule, Eulerian
//! idempotent identities, and consistency of the generic dual construction.

use hopfchain::hopf::{Degree, DualAlgebra, HopfAlgebra};
use hopfchain::instances::get_instance;
use hopfchain::verify::{eulerian_battery, hopf_axioms, power_rule};

#[test]
fn axioms_hold_for_all_instances() {
    for (name, degree) in [
        ("shuffle", 5),
        ("free_assoc", 5),
        ("sym_h", 5),
        ("sym_schur", 5),
        ("sym_p", 5),
        ("graphs", 5),
        ("ck_forests", 5),
        ("qsym_F", 5),
    ] {
        let alg = get_instance(name).unwrap();
        let result = hopf_axioms(alg.as_ref(), degree);
        assert!(result.passed, "{}: {}", result.name, result.detail);
    }
}

#[test]
fn power_rule_on_all_instances() {
    for name in ["shuffle", "free_assoc", "sym_h", "sym_schur", "graphs", "ck_forests", "qsym_F"] {
        let alg = get_instance(name).unwrap();
        let result = power_rule(alg.as_ref(), 4);
        assert!(result.passed, "{}: {}", result.name, result.detail);
    }
}

#[test]
fn eulerian_identities_on_shuffle() {
    let result = eulerian_battery(4);
    assert!(result.passed, "{}: {}", result.name, result.detail);
}

#[test]
fn dual_of_dual_structure_matches() {
    // The dual of sym_h is the monomial-basis algebra; its own dual must
    // reproduce sym_h structure constants.
    let symh = get_instance("sym_h").unwrap();
    let dual = DualAlgebra::new(symh.clone());
    let double = DualAlgebra::new(dual.clone() as std::sync::Arc<dyn HopfAlgebra>);
    for n in 0..=4usize {
        for x in symh.basis(n).unwrap() {
            assert_eq!(symh.coproduct(&x), double.coproduct(&x), "Δ({x})");
        }
    }
    for x in symh.basis(2).unwrap() {
        for y in symh.basis(2).unwrap() {
            assert_eq!(symh.product(&x, &y), double.product(&x, &y));
        }
    }
}

#[test]
fn dual_algebras_satisfy_axioms_too() {
    for name in ["sym_h", "graphs", "qsym_F", "ck_forests"] {
        let alg = get_instance(name).unwrap();
        let dual = DualAlgebra::new(alg);
        let result = hopf_axioms(dual.as_ref(), 4);
        assert!(result.passed, "{}: {}", result.name, result.detail);
    }
}

#[test]
fn multigraded_components_are_consistent() {
    // Every shuffle basis element of a multidegree has that multidegree,
    // and coproducts split it additively.
    let alg = get_instance("shuffle").unwrap();
    for nu in [vec![1usize, 1, 1], vec![2, 1], vec![3], vec![2, 0, 1]] {
        for x in alg.basis_multi(&nu).unwrap() {
            let mut trimmed = nu.clone();
            while trimmed.last() == Some(&0) {
                trimmed.pop();
            }
            assert_eq!(alg.multidegree(&x).unwrap(), trimmed);
            for (pair, _) in alg.coproduct(&x).iter() {
                let a = alg.multidegree(&pair[0]).unwrap();
                let b = alg.multidegree(&pair[1]).unwrap();
                assert_eq!(hopfchain::hopf::multidegree_add(&a, &b), trimmed);
            }
        }
    }
    let _ = Degree::Multi(vec![1, 1]);
}
