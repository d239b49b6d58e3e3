//! Concrete combinatorial Hopf algebras: the shuffle algebra, the free
//! associative algebra, symmetric functions in the complete (`h`), Schur,
//! and power-sum bases, graphs under disjoint-union/induced-subgraph,
//! Connes-Kreimer rooted forests, and quasisymmetric functions in the
//! fundamental basis.

mod forests;
mod free_assoc;
mod graphs;
mod qsym;
mod shuffle;
mod sym;

pub use forests::ForestAlgebra;
pub use free_assoc::FreeAssocAlgebra;
pub use graphs::GraphAlgebra;
pub use qsym::{
    compositions_of, monomial_in_fundamental, p_basis_in_fundamental, representative_word,
    theta_descent, QSymF,
};
pub use shuffle::ShuffleAlgebra;
pub use sym::{kostka_number, schur_in_h, SymH, SymP, SymSchur};

use crate::hopf::{HopfAlgebra, HopfError};
use std::sync::Arc;

/// Look up a named algebra instance. `sym_p` is included so that the
/// power-sum basis can be fed to the state-space validator (it fails, by
/// design: its higher-degree generators are primitive).
pub fn get_instance(name: &str) -> Result<Arc<dyn HopfAlgebra>, HopfError> {
    match name {
        "shuffle" => Ok(Arc::new(ShuffleAlgebra::new())),
        "free_assoc" => Ok(Arc::new(FreeAssocAlgebra::new())),
        "sym_h" => Ok(Arc::new(SymH::new())),
        "sym_schur" => Ok(Arc::new(SymSchur::new())),
        "sym_p" => Ok(Arc::new(SymP::new())),
        "graphs" => Ok(Arc::new(GraphAlgebra::new())),
        "ck_forests" => Ok(Arc::new(ForestAlgebra::new())),
        "qsym_F" => Ok(Arc::new(QSymF::new())),
        other => Err(HopfError::UnknownInstance(other.to_string())),
    }
}

/// Names accepted by [`get_instance`].
pub const INSTANCE_NAMES: [&str; 8] =
    ["shuffle", "free_assoc", "sym_h", "sym_schur", "sym_p", "graphs", "ck_forests", "qsym_F"];
