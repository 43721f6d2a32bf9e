//! One signed multigraph pushed through every dichromatic route: the
//! signed recursion, the subset state sum, the weighted recursion after
//! simplification, the doubled-graph recursion, and the spanning-tree and
//! forest activity expansions. They all agree, exactly.
//!
//! ```bash
//! cargo run -p qskein --example graph_polynomials
//! ```

use qskein::dichromatic::{
    r1_forest_expansion, r1_recursive, r1_tree_expansion, r2_recursive, r_recursive, r_statesum,
};
use qskein::graph::{EdgeOrder, Sign, SignedEdge, SignedMultigraph};
use qskein::poly::render_grouped;

fn main() {
    // two parallel positive edges, a negative edge, and a positive loop
    let g = SignedMultigraph::new(
        3,
        vec![
            SignedEdge {
                u: 0,
                v: 1,
                sign: Sign::Plus,
            },
            SignedEdge {
                u: 0,
                v: 1,
                sign: Sign::Plus,
            },
            SignedEdge {
                u: 1,
                v: 2,
                sign: Sign::Minus,
            },
            SignedEdge {
                u: 2,
                v: 2,
                sign: Sign::Plus,
            },
        ],
    )
    .unwrap();

    let r = r_recursive(&g);
    println!("signed recursion     : {}", render_grouped(&r));
    println!(
        "state sum            : {}",
        render_grouped(&r_statesum(&g).unwrap())
    );

    let w = g.simplify_to_weighted();
    println!(
        "weighted recursion   : {}",
        render_grouped(&r1_recursive(&w))
    );
    println!(
        "doubled recursion    : {}",
        render_grouped(&r2_recursive(&g.double()).unwrap())
    );

    for seed in [0u64, 1, 2] {
        let order = EdgeOrder::random(w.edges().len(), seed);
        let tree = r1_tree_expansion(&w, &order).unwrap();
        let forest = r1_forest_expansion(&w, &order).unwrap();
        assert_eq!(tree, r);
        assert_eq!(forest, r);
        println!("activity expansions agree under random edge order {seed}");
    }
}
