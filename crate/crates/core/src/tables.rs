//! TSV rendering of the standard tables: transition matrices, stationary
//! vectors, and the named right/left eigenfunction tables of rock-breaking
//! and the descent-set chain, laid out the way the worked n = 4 examples
//! are usually displayed (these layouts are pinned by golden files).

use crate::chain::{Chain, ChainError};
use crate::keys::{BasisKey, Partition};
use crate::named::{qsym_left_g, qsym_right_f, rock_f, rock_g};
use crate::rational::Rational;
use crate::words::Composition;

/// Render a labelled grid as TSV: corner label, column header row, then one
/// row per row label.
pub fn render_grid(
    corner: &str,
    col_labels: &[String],
    row_labels: &[String],
    entries: &[Vec<Rational>],
) -> String {
    let mut out = String::new();
    out.push_str(corner);
    for c in col_labels {
        out.push('\t');
        out.push_str(c);
    }
    out.push('\n');
    for (r, row) in row_labels.iter().zip(entries.iter()) {
        out.push_str(r);
        for v in row {
            out.push('\t');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

/// Partitions of n in the display order of the worked tables: by number of
/// parts, then lexicographically decreasing.
pub fn partition_table_order(n: usize) -> Vec<Partition> {
    let mut parts = Partition::all_of(n);
    parts.sort_by(|a, b| {
        a.num_parts()
            .cmp(&b.num_parts())
            .then_with(|| b.parts().cmp(a.parts()))
    });
    parts
}

/// Compositions of n in display order. The n = 4 order is pinned to the
/// worked descent-set tables; other degrees sort by number of parts and
/// then lexicographically.
pub fn composition_table_order(n: usize) -> Vec<Composition> {
    if n == 4 {
        return ["(4)", "(1,3)", "(3,1)", "(2,2)", "(1,2,1)", "(2,1,1)", "(1,1,2)", "(1,1,1,1)"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
    }
    let mut comps = crate::instances::compositions_of(n);
    comps.sort_by(|a, b| {
        a.num_parts()
            .cmp(&b.num_parts())
            .then_with(|| a.parts().cmp(b.parts()))
    });
    comps
}

/// Schur-basis states of degree 3 in the worked order
/// (trivial, sign, two-dimensional); otherwise partition table order.
pub fn schur_table_order(n: usize) -> Vec<Partition> {
    if n == 3 {
        return ["(3)", "(1,1,1)", "(2,1)"].iter().map(|s| s.parse().unwrap()).collect();
    }
    partition_table_order(n)
}

/// Display order of a chain's states for tables.
pub fn chain_table_order(chain: &Chain) -> Vec<BasisKey> {
    match chain.algebra.name() {
        "sym_h" | "sym_p" => {
            partition_table_order(chain.n()).into_iter().map(BasisKey::Partition).collect()
        }
        "sym_schur" => schur_table_order(chain.n()).into_iter().map(BasisKey::Schur).collect(),
        "qsym_F" => {
            composition_table_order(chain.n()).into_iter().map(BasisKey::Composition).collect()
        }
        _ => chain.states.clone(),
    }
}

/// The transition matrix in display order.
pub fn render_transition_matrix(chain: &Chain) -> Result<String, ChainError> {
    let order = chain_table_order(chain);
    let k = chain.transition_matrix()?;
    let labels: Vec<String> = order.iter().map(|s| s.to_string()).collect();
    let entries: Vec<Vec<Rational>> = order
        .iter()
        .map(|x| order.iter().map(|y| k.entry(x, y).cloned().unwrap()).collect())
        .collect();
    Ok(render_grid("state", &labels, &labels, &entries))
}

/// The stationary distribution(s) in display order, one row each.
pub fn render_stationary(chain: &Chain) -> Result<String, ChainError> {
    let order = chain_table_order(chain);
    let labels: Vec<String> = order.iter().map(|s| s.to_string()).collect();
    let pis = crate::chain::stationary_distributions(chain)?;
    let mut rows = Vec::new();
    let mut row_labels = Vec::new();
    for pi in &pis {
        let by_key: std::collections::BTreeMap<&BasisKey, &Rational> =
            chain.states.iter().zip(pi.probabilities.iter()).collect();
        rows.push(order.iter().map(|x| (*by_key.get(x).unwrap()).clone()).collect());
        let label: Vec<String> = pi.label.iter().map(|k| k.to_string()).collect();
        row_labels.push(format!("pi{{{}}}", label.join(",")));
    }
    Ok(render_grid("distribution", &labels, &row_labels, &rows))
}

/// Rock-breaking right eigenfunctions as columns (states × eigenfunctions).
pub fn render_rock_right(n: usize) -> String {
    let order = partition_table_order(n);
    let col_labels: Vec<String> = order.iter().map(|mu| format!("f{mu}")).collect();
    let row_labels: Vec<String> = order.iter().map(|l| l.to_string()).collect();
    let entries: Vec<Vec<Rational>> = order
        .iter()
        .map(|lambda| order.iter().map(|mu| rock_f(mu, lambda)).collect())
        .collect();
    render_grid("state", &col_labels, &row_labels, &entries)
}

/// Rock-breaking left eigenfunctions as rows (eigenfunctions × states).
pub fn render_rock_left(n: usize) -> String {
    let order = partition_table_order(n);
    let col_labels: Vec<String> = order.iter().map(|l| l.to_string()).collect();
    let row_labels: Vec<String> = order.iter().map(|mu| format!("g{mu}")).collect();
    let entries: Vec<Vec<Rational>> = order
        .iter()
        .map(|mu| order.iter().map(|lambda| rock_g(mu, lambda)).collect())
        .collect();
    render_grid("eigenfn", &col_labels, &row_labels, &entries)
}

fn qsym_label(i: &Composition, left: bool) -> String {
    if i.is_partition() {
        if left {
            format!("chi{i}")
        } else {
            format!("E{i}")
        }
    } else if left {
        format!("g{i}")
    } else {
        format!("f{i}")
    }
}

/// Descent-set chain right eigenfunctions as columns; partition-indexed
/// columns are the descent-algebra idempotent coefficient vectors.
pub fn render_qsym_right(n: usize) -> String {
    let order = composition_table_order(n);
    let col_labels: Vec<String> = order.iter().map(|i| qsym_label(i, false)).collect();
    let row_labels: Vec<String> = order.iter().map(|j| j.to_string()).collect();
    let entries: Vec<Vec<Rational>> = order
        .iter()
        .map(|j| order.iter().map(|i| qsym_right_f(i, j)).collect())
        .collect();
    render_grid("state", &col_labels, &row_labels, &entries)
}

/// Descent-set chain left eigenfunctions as rows; partition-indexed rows
/// are ribbon character values.
pub fn render_qsym_left(n: usize) -> String {
    let order = composition_table_order(n);
    let col_labels: Vec<String> = order.iter().map(|j| j.to_string()).collect();
    let row_labels: Vec<String> = order.iter().map(|i| qsym_label(i, true)).collect();
    let entries: Vec<Vec<Rational>> = order
        .iter()
        .map(|i| order.iter().map(|j| qsym_left_g(i, j)).collect())
        .collect();
    render_grid("eigenfn", &col_labels, &row_labels, &entries)
}
