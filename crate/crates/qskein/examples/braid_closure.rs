//! From a braid word to the linking matrix of its closure, and on to the
//! homotopy polynomial.
//!
//! ```bash
//! cargo run -p qskein --example braid_closure
//! ```

use qskein::link::{homotopy_polynomial, BraidWord};
use qskein::poly::render_grouped;

fn main() {
    let braids = [
        ("hopf link", BraidWord::new(2, vec![1, 1]).unwrap()),
        ("reverse hopf", BraidWord::new(2, vec![-1, -1]).unwrap()),
        ("cancelling word", BraidWord::new(2, vec![1, -1]).unwrap()),
        // a 3-strand word whose closure has three components
        ("chain", BraidWord::new(3, vec![1, 1, 2, 2]).unwrap()),
        ("identity on 3 strands", BraidWord::new(3, vec![]).unwrap()),
    ];

    for (name, braid) in braids {
        let m = braid.linking_matrix();
        println!(
            "{name}: {} strand(s), word {:?}",
            braid.strands(),
            braid.word()
        );
        println!("  matrix = {}", serde_json::to_string(&m).unwrap());
        println!("  HP     = {}", render_grouped(&homotopy_polynomial(&m)));
    }
}
