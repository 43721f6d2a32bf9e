//! Compute the homotopy polynomial of a link from its linking matrix.
//!
//! ```bash
//! cargo run -p qskein --example homotopy_polynomial
//! ```

use qskein::link::{coefficient_w, homotopy_polynomial, LinkingMatrix};
use qskein::poly::{render_grouped, render_qlaurent, QSubst};

fn main() {
    // Two 3-component links with the same HOMFLYPT polynomial but
    // different homotopy polynomials: linking numbers (4, -1, 0) and
    // (2, 3, -2).
    let link_a = LinkingMatrix::from_upper(3, &[4, -1, 0]).unwrap();
    let link_b = LinkingMatrix::from_upper(3, &[2, 3, -2]).unwrap();

    for (name, m) in [("A (4,-1,0)", &link_a), ("B (2,3,-2)", &link_b)] {
        let hp = homotopy_polynomial(m);
        println!("link {name}:");
        println!("  HP      = {}", render_grouped(&hp));
        println!(
            "  w0      = {}",
            render_qlaurent(&coefficient_w(&hp, 0).unwrap(), 'q')
        );
        println!(
            "  w1      = {}",
            render_qlaurent(&coefficient_w(&hp, 1).unwrap(), 'q')
        );
        println!(
            "  q := 1  : {}",
            render_grouped(&hp.substitute_q(QSubst::One))
        );
        println!(
            "  mirror  : {}",
            render_grouped(&homotopy_polynomial(&m.mirror()))
        );
    }

    // The mirror identity: negating the matrix is the substitution
    // q := -q^-1.
    let hp = homotopy_polynomial(&link_b);
    assert_eq!(
        homotopy_polynomial(&link_b.mirror()),
        hp.substitute_q(QSubst::NegInverse)
    );
    println!("mirror identity holds for link B");
}
