use hopfchain::chain::Chain;
use hopfchain::hopf::Degree;
use hopfchain::instances::get_instance;
use hopfchain::tables::*;
use std::fs;

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "golden_out".into());
    fs::create_dir_all(&dir).unwrap();
    let schur = Chain::new(get_instance("sym_schur").unwrap(), 2, Degree::Plain(3)).unwrap();
    fs::write(format!("{dir}/schur_n3_matrix.tsv"), render_transition_matrix(&schur).unwrap()).unwrap();
    let rock = Chain::new(get_instance("sym_h").unwrap(), 2, Degree::Plain(4)).unwrap();
    fs::write(format!("{dir}/rock_n4_matrix.tsv"), render_transition_matrix(&rock).unwrap()).unwrap();
    fs::write(format!("{dir}/rock_n4_right.tsv"), render_rock_right(4)).unwrap();
    fs::write(format!("{dir}/rock_n4_left.tsv"), render_rock_left(4)).unwrap();
    let qsym = Chain::new(get_instance("qsym_F").unwrap(), 2, Degree::Plain(4)).unwrap();
    fs::write(format!("{dir}/descent_n4_matrix.tsv"), render_transition_matrix(&qsym).unwrap()).unwrap();
    fs::write(format!("{dir}/descent_n4_right.tsv"), render_qsym_right(4)).unwrap();
    fs::write(format!("{dir}/descent_n4_left.tsv"), render_qsym_left(4)).unwrap();
    println!("done");
}
