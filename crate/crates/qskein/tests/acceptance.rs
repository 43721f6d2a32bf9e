//! Acceptance suite: one test per criterion, exact symbolic equality
//! everywhere, with the stated runtime budgets enforced. Each criterion
//! prints a single pass line (visible with `--nocapture`); a failure
//! panics with the criterion number.

use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qskein::dichromatic::{
    r1_forest_expansion, r1_recursive, r1_tree_expansion, r2_recursive, r_recursive, r_statesum,
};
use qskein::graph::EdgeOrder;
use qskein::homfly::{homflypt_to_r, parse_homfly, r_to_homflypt, HomflyPoly};
use qskein::link::{coefficient_w, homotopy_polynomial, hp_via_dichromatic, LinkingMatrix};
use qskein::poly::{parse_hpoly, parse_qlaurent, QLaurent, QSubst};
use qskein::qlie::{
    confluence_check, jacobi_defect, normal_form, Deformation, FormMatrix, GroupAlgElem,
    TensorWordSum,
};
use qskein::verify::{random_matrix, random_signed_graph};
use qskein::young::{recover_from_w1, recover_linking, unimodal_check, w1_from_linking};

fn finish(number: u32, description: &str, started: Instant, budget: Option<Duration>) {
    let elapsed = started.elapsed();
    if let Some(budget) = budget {
        assert!(
            elapsed <= budget,
            "criterion {number} exceeded its {budget:?} budget: {elapsed:?}"
        );
    }
    println!("criterion {number:02} PASS ({elapsed:?}): {description}");
}

const MATRIX_SUITE_SEED: u64 = 427;
const GRAPH_SUITE_SEED: u64 = 99;

#[test]
fn criterion_01_three_component_fixture_b() {
    let started = Instant::now();
    let m = LinkingMatrix::from_upper(3, &[2, 3, -2]).unwrap();
    let hp = homotopy_polynomial(&m);
    let expect =
        parse_hpoly("q^6 t^3 + (q + 2 q^3 + 2 q^5 - q^7 - q^9) t^2 z - (q^4 + 2 q^6 + q^8) t z^2")
            .unwrap();
    assert_eq!(hp, expect, "criterion 1: printed polynomial");
    assert_eq!(
        coefficient_w(&hp, 2).unwrap(),
        -(QLaurent::q_power(4) + QLaurent::monomial(6, 2) + QLaurent::q_power(8)),
        "criterion 1: z^2 t coefficient"
    );
    finish(
        1,
        "linking numbers (2,3,-2) give the printed polynomial",
        started,
        Some(Duration::from_secs(1)),
    );
}

#[test]
fn criterion_02_three_component_fixture_a_by_recovery() {
    let started = Instant::now();
    let printed =
        parse_hpoly("q^6 t^3 + (q^-1 + q + q^3 + q^5 - q^7) t^2 z - (1 + q^2 + q^4 + q^6) t z^2")
            .unwrap();
    // recover the linking data from the printed polynomial...
    let r = recover_linking(&printed).unwrap();
    assert_eq!(r.components, 3);
    assert_eq!(r.total_linking, 3);
    assert_eq!(r.nonzero, [4, -1].into_iter().collect());
    assert_eq!(r.zero_pairs, 1);
    // ...assign the recovered numbers to pairs and verify forwards
    let m = LinkingMatrix::from_upper(3, &[4, -1, 0]).unwrap();
    assert_eq!(
        homotopy_polynomial(&m),
        printed,
        "criterion 2: forward verification"
    );

    let other = homotopy_polynomial(&LinkingMatrix::from_upper(3, &[2, 3, -2]).unwrap());
    assert_ne!(printed, other, "criterion 2: the two links differ");
    for hp in [&printed, &other] {
        let w1_at_one = coefficient_w(&hp.substitute_q(QSubst::One), 1).unwrap();
        assert_eq!(w1_at_one, QLaurent::constant(3), "criterion 2: w1(1) = 3");
    }
    finish(
        2,
        "recovered matrix (4,-1,0) reproduces its printed polynomial",
        started,
        None,
    );
}

#[test]
fn criterion_03_w1_closed_formula() {
    let started = Instant::now();
    let m = LinkingMatrix::from_upper(3, &[2, 3, -2]).unwrap();
    assert_eq!(
        w1_from_linking(&m),
        parse_qlaurent("q + 2 q^3 + 2 q^5 - q^7 - q^9").unwrap()
    );
    finish(3, "closed w1 formula for (2,3,-2)", started, None);
}

#[test]
fn criterion_04_w1_decoding_and_mirror() {
    let started = Instant::now();
    let w1 = parse_qlaurent("-q^3 - q + 2 q^-1").unwrap();
    assert_eq!(
        recover_from_w1(&w1, 0).unwrap(),
        [1, 1, -2].into_iter().collect()
    );
    assert_eq!(
        w1.subst_neg_inverse(),
        parse_qlaurent("q^-3 + q^-1 - 2 q").unwrap()
    );
    finish(
        4,
        "w1 decodes to {1,1,-2} and mirrors correctly",
        started,
        None,
    );
}

#[test]
fn criterion_05_unit_trees() {
    let started = Instant::now();
    let expect = parse_hpoly("t").unwrap() * parse_hpoly("q^2 t + q z").unwrap().pow(3);

    // every labeled tree on 4 vertices, realized as spanning trees of the
    // unit-weight complete graph
    let complete = qskein::graph::WeightedGraph::new(
        4,
        vec![
            (0, 1, 1),
            (0, 2, 1),
            (0, 3, 1),
            (1, 2, 1),
            (1, 3, 1),
            (2, 3, 1),
        ],
    )
    .unwrap();
    let trees = complete.spanning_trees().unwrap();
    assert_eq!(trees.len(), 16);
    for tree in trees {
        let mut entries = vec![vec![0i64; 4]; 4];
        for e in tree {
            let edge = complete.edges()[e];
            entries[edge.u][edge.v] = 1;
            entries[edge.v][edge.u] = 1;
        }
        let m = LinkingMatrix::new(entries).unwrap();
        assert_eq!(
            homotopy_polynomial(&m),
            expect,
            "criterion 5: tree polynomial"
        );
    }

    // the path and the star in particular share the polynomial
    let path = LinkingMatrix::from_upper(4, &[1, 0, 0, 1, 0, 1]).unwrap();
    let star = LinkingMatrix::from_upper(4, &[1, 1, 1, 0, 0, 0]).unwrap();
    assert_eq!(homotopy_polynomial(&path), homotopy_polynomial(&star));
    finish(
        5,
        "all unit 4-vertex trees give t (q^2 t + q z)^3",
        started,
        None,
    );
}

#[test]
fn criterion_06_five_way_oracle() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(GRAPH_SUITE_SEED);
    for i in 0..200 {
        let g = random_signed_graph(&mut rng, 6, 8);
        let r = r_recursive(&g);
        assert_eq!(r, r_statesum(&g).unwrap(), "graph {i}: state sum");
        let w = g.simplify_to_weighted();
        assert_eq!(r, r1_recursive(&w), "graph {i}: weighted recursion");
        assert_eq!(
            r,
            r2_recursive(&g.double()).unwrap(),
            "graph {i}: doubled recursion"
        );
        for k in 0..3u64 {
            let order = EdgeOrder::random(w.edges().len(), GRAPH_SUITE_SEED + 1000 * i + k);
            assert_eq!(
                r,
                r1_tree_expansion(&w, &order).unwrap(),
                "graph {i}: tree order {k}"
            );
            assert_eq!(
                r,
                r1_forest_expansion(&w, &order).unwrap(),
                "graph {i}: forest order {k}"
            );
        }
    }
    finish(
        6,
        "five-way agreement on 200 random signed graphs",
        started,
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_07_hp_oracle_suite() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(MATRIX_SUITE_SEED);
    for i in 0..500 {
        let m = random_matrix(&mut rng, 5, 4);
        let n = m.components();
        let hp = homotopy_polynomial(&m);
        assert_eq!(
            hp,
            hp_via_dichromatic(&m),
            "matrix {i}: formula vs graph route"
        );
        assert_eq!(
            coefficient_w(&hp, 0).unwrap(),
            QLaurent::q_power(2 * m.total_linking()),
            "matrix {i}: w0"
        );
        if n >= 2 {
            let w1 = coefficient_w(&hp, 1).unwrap();
            assert_eq!(
                w1.eval_at_one(),
                m.total_linking().into(),
                "matrix {i}: w1(1) = lk"
            );
        }
        assert_eq!(
            homotopy_polynomial(&m.mirror()),
            hp.substitute_q(QSubst::NegInverse),
            "matrix {i}: mirror identity"
        );
        let r = recover_linking(&hp).unwrap();
        let expected: qskein::young::IntMultiset =
            m.nonzero_pairs().iter().map(|&(_, _, l)| l).collect();
        assert_eq!(r.components, n, "matrix {i}: component count");
        assert_eq!(r.total_linking, m.total_linking(), "matrix {i}: lk");
        assert_eq!(r.nonzero, expected, "matrix {i}: multiset");
        assert_eq!(
            r.zero_pairs,
            n * n.saturating_sub(1) / 2 - expected.len(),
            "matrix {i}: zero count"
        );
    }
    finish(
        7,
        "hp oracle suite on 500 random matrices",
        started,
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_08_homflypt_bridge() {
    let started = Instant::now();
    // positive Hopf link, recomputed from the skein relation
    // v^-1 P+ - v P- = z P0 out of the unknot and the two-unlink
    let from_skein = HomflyPoly::unlink(2).scale(&QLaurent::q_power(2))
        + HomflyPoly::one().scale(&QLaurent::q_power(1)).shift_z(1);
    assert_eq!(from_skein, parse_homfly("(v - v^3) z^-1 + v z").unwrap());
    let converted = r_to_homflypt(&parse_hpoly("q^2 t^2 + q t z").unwrap(), 1).unwrap();
    assert_eq!(converted, from_skein, "criterion 8: Hopf fixture");

    let mut rng = ChaCha8Rng::seed_from_u64(MATRIX_SUITE_SEED + 1);
    for i in 0..100 {
        let g = random_signed_graph(&mut rng, 5, 7);
        let r = r_recursive(&g);
        let m = g.vertices() - 1;
        let p = r_to_homflypt(&r, m).unwrap();
        assert_eq!(homflypt_to_r(&p, m).unwrap(), r, "graph {i}: r -> p -> r");
        assert_eq!(
            r_to_homflypt(&homflypt_to_r(&p, m).unwrap(), m).unwrap(),
            p,
            "graph {i}: p -> r -> p"
        );
    }
    finish(
        8,
        "HOMFLYPT bridge fixture and 100 round trips",
        started,
        None,
    );
}

#[test]
fn criterion_09_qlie_suite() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(MATRIX_SUITE_SEED + 2);

    fn random_form(rng: &mut impl Rng, rank: usize) -> FormMatrix {
        let mut entries = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in (i + 1)..rank {
                let v = rng.gen_range(-5..=5);
                entries[i][j] = v;
                entries[j][i] = -v;
            }
        }
        FormMatrix::new(entries).unwrap()
    }

    fn random_elem(rng: &mut impl Rng, rank: usize) -> GroupAlgElem {
        let mut e = GroupAlgElem::zero(rank);
        for _ in 0..rng.gen_range(1..=2) {
            let v: Vec<i64> = (0..rank).map(|_| rng.gen_range(-5..=5)).collect();
            e.add_term(v, &QLaurent::constant(rng.gen_range(-3..=3i64)));
        }
        e
    }

    for rank in 1..=4usize {
        for i in 0..100 {
            let f = random_form(&mut rng, rank);
            let (x, y, z) = (
                random_elem(&mut rng, rank),
                random_elem(&mut rng, rank),
                random_elem(&mut rng, rank),
            );
            let defect = jacobi_defect(&x, &y, &z, &f).unwrap();
            assert!(defect.is_zero(), "rank {rank} triple {i}: jacobi defect");
        }
    }

    for mode in [Deformation::SymQ, Deformation::EnvQ, Deformation::EnvQz] {
        for i in 0..100 {
            let rank = rng.gen_range(1..=3);
            let f = random_form(&mut rng, rank);
            let letters: Vec<Vec<i64>> = (0..3)
                .map(|_| (0..rank).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            assert!(
                confluence_check(&letters[0], &letters[1], &letters[2], &f, mode).unwrap(),
                "mode {mode:?} word {i}: confluence"
            );
            if mode == Deformation::EnvQz {
                let w = TensorWordSum::word(letters, qskein::poly::HPoly::one()).unwrap();
                let sym = normal_form(&w, &f, Deformation::SymQ).unwrap();
                let qz = normal_form(&w, &f, Deformation::EnvQz).unwrap();
                assert_eq!(
                    sym,
                    qz.substitute_z_zero(),
                    "word {i}: sym_q = env_qz at z = 0"
                );
            }
        }
    }
    finish(
        9,
        "jacobi, confluence and quantization checks",
        started,
        Some(Duration::from_secs(30)),
    );
}

#[test]
fn criterion_10_unimodality_over_the_matrix_suite() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(MATRIX_SUITE_SEED);
    for i in 0..500 {
        let m = random_matrix(&mut rng, 5, 4);
        if m.components() < 2 {
            continue;
        }
        let w1 = w1_from_linking(&m);
        assert_eq!(unimodal_check(&w1), Ok(true), "matrix {i}: unimodal w1");
    }
    finish(
        10,
        "w1 unimodal for every matrix of the random suite",
        started,
        None,
    );
}
