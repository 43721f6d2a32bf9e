//! Decode linking data back out of a homotopy polynomial: the component
//! count, the total linking number, the multiset of nonzero linking
//! numbers (via Young-diagram duality on the w1 coefficient), and the
//! number of zero pairs.
//!
//! ```bash
//! cargo run -p qskein --example recover_linking
//! ```

use qskein::link::{homotopy_polynomial, LinkingMatrix};
use qskein::poly::{parse_qlaurent, render_grouped};
use qskein::young::{recover_from_w1, recover_linking, unimodal_check, w1_from_linking};

fn main() {
    let m = LinkingMatrix::from_upper(4, &[2, 0, -1, 3, 0, -1]).unwrap();
    let hp = homotopy_polynomial(&m);
    println!("HP = {}", render_grouped(&hp));

    let recovered = recover_linking(&hp).unwrap();
    println!(
        "recovered: n = {}, lk = {}, nonzero = {:?}, zero pairs = {}",
        recovered.components,
        recovered.total_linking,
        recovered.nonzero.iter().collect::<Vec<_>>(),
        recovered.zero_pairs
    );

    // w1 alone determines the nonzero linking numbers once lk is known
    let w1 = w1_from_linking(&m);
    assert_eq!(
        recover_from_w1(&w1, m.total_linking()).unwrap(),
        recovered.nonzero
    );
    assert_eq!(unimodal_check(&w1), Ok(true));
    println!("w1 decodes to the same multiset and is unimodal");

    // a w1 can also be decoded on its own; this one belongs to a
    // 3-component link with lk = 0 and linking numbers {1, 1, -2}
    let w1 = parse_qlaurent("-q^3 - q + 2 q^-1").unwrap();
    let nonzero = recover_from_w1(&w1, 0).unwrap();
    println!(
        "standalone w1 decodes to {:?}",
        nonzero.iter().collect::<Vec<_>>()
    );
}
