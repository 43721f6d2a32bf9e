//! Convert the dichromatic polynomial of a plane signed graph into the
//! HOMFLYPT polynomial of its matched diagram and back.
//!
//! ```bash
//! cargo run -p qskein --example homflypt_bridge
//! ```

use qskein::dichromatic::r_recursive;
use qskein::homfly::{homflypt_to_r, r_to_homflypt, render_homfly, HomflyPoly};
use qskein::link::{graph_of_link, LinkingMatrix};
use qskein::poly::{parse_hpoly, render_grouped, QLaurent};

fn main() {
    // positive Hopf link: R of a single positive edge
    let r = parse_hpoly("q^2 t^2 + q t z").unwrap();
    let p = r_to_homflypt(&r, 1).unwrap();
    println!("R  = {}", render_grouped(&r));
    println!("P  = {}", render_homfly(&p));

    // the same value falls out of the skein relation
    // v^-1 P+ - v P- = z P0 applied to the unknot and two-unlink
    let from_skein = HomflyPoly::unlink(2).scale(&QLaurent::q_power(2))
        + HomflyPoly::one().scale(&QLaurent::q_power(1)).shift_z(1);
    assert_eq!(p, from_skein);
    println!("matches the skein computation");

    // round trip through a 3-component link's graph
    let m = LinkingMatrix::from_upper(3, &[2, 3, -2]).unwrap();
    let r = r_recursive(&graph_of_link(&m));
    let p = r_to_homflypt(&r, 2).unwrap();
    println!("3-component P = {}", render_homfly(&p));
    assert_eq!(homflypt_to_r(&p, 2).unwrap(), r);
    println!("round trip is the identity");
}
