//! The q-Lie bracket on the group algebra of Z^r, a Jacobi spot check, and
//! PBW normal forms in the three deformations of the tensor algebra.
//!
//! ```bash
//! cargo run -p qskein --example qlie_pbw
//! ```

use qskein::poly::HPoly;
use qskein::qlie::{
    confluence_check, jacobi_defect, normal_form, qbracket_lie, render_group_elem, render_word_sum,
    Deformation, FormMatrix, GroupAlgElem, TensorWordSum,
};

fn main() {
    // the standard symplectic form on Z^2
    let f = FormMatrix::new(vec![vec![0, 1], vec![-1, 0]]).unwrap();

    let g = GroupAlgElem::basis(vec![2, 0]);
    let h = GroupAlgElem::basis(vec![0, 1]);
    println!(
        "[g, h]_q = {}",
        render_group_elem(&qbracket_lie(&g, &h, &f).unwrap())
    );

    let x = GroupAlgElem::basis(vec![1, -2]);
    let defect = jacobi_defect(&g, &h, &x, &f).unwrap();
    println!(
        "jacobi defect on a sample triple: {}",
        render_group_elem(&defect)
    );
    assert!(defect.is_zero());

    // normal forms of the out-of-order word (0,1) (x) (1,0)
    let word = TensorWordSum::word(vec![vec![0, 1], vec![1, 0]], HPoly::one()).unwrap();
    for (name, mode) in [
        ("sym_q ", Deformation::SymQ),
        ("env_q ", Deformation::EnvQ),
        ("env_qz", Deformation::EnvQz),
    ] {
        let nf = normal_form(&word, &f, mode).unwrap();
        println!("{name} normal form: {}", render_word_sum(&nf));
    }

    // confluence: the two maximal rewriting strategies agree on a
    // fully reversed triple, the diamond behind the q-PBW theorem
    let ok = confluence_check(&[1, 1], &[0, 1], &[1, 0], &f, Deformation::EnvQz).unwrap();
    println!("confluence on a reversed triple: {ok}");
    assert!(ok);
}
