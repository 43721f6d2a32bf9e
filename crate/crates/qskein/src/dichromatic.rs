//! Dichromatic polynomials of signed, weighted and doubled graphs, each by
//! its own route: deletion-contraction on signed multigraphs, a subset state
//! sum, the weighted recursion, spanning-tree and forest activity
//! expansions, and the recursion on doubled graphs. All routes agree; the
//! test suite and the `verify` module exercise that agreement.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{
    refinement_permutation, EdgeOrder, GraphError, Sign, SignedMultigraph, UnionFind, WeightedGraph,
};
use crate::poly::{qbracket2, HPoly, QLaurent};

/// The subset state sum walks all `2^|E|` edge subsets.
pub const STATESUM_EDGE_CAP: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DichromaticError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("state sum supports at most {cap} edges, got {edges}")]
    TooManyEdges { edges: usize, cap: usize },
    #[error("input is not a doubled graph: {0}")]
    NotDoubled(String),
}

/// Edge-selection strategy for the recursions. The result is the same for
/// every strategy; the choice only shapes the recursion tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivot {
    First,
    Last,
    Random(u64),
}

// ---------------------------------------------------------------------------
// R on signed multigraphs, by deletion-contraction
// ---------------------------------------------------------------------------

/// Internal minor state: parallel classes keyed by endpoint pair, loops
/// already dropped.
#[derive(Clone, PartialEq, Eq, Hash)]
struct ClassMinor {
    vertices: usize,
    /// `(u, v, positive count, negative count)` with `u < v`, sorted.
    classes: Vec<(usize, usize, u32, u32)>,
}

impl ClassMinor {
    fn from_signed(g: &SignedMultigraph) -> Self {
        let mut map: HashMap<(usize, usize), (u32, u32)> = HashMap::new();
        for e in g.edges() {
            if e.u == e.v {
                continue; // loops evaluate to nothing
            }
            let key = (e.u.min(e.v), e.u.max(e.v));
            let entry = map.entry(key).or_insert((0, 0));
            match e.sign {
                Sign::Plus => entry.0 += 1,
                Sign::Minus => entry.1 += 1,
            }
        }
        let mut classes: Vec<_> = map
            .into_iter()
            .map(|((u, v), (p, n))| (u, v, p, n))
            .collect();
        classes.sort_unstable();
        Self {
            vertices: g.vertices(),
            classes,
        }
    }

    fn canonical(&self) -> Self {
        let edges: Vec<(usize, usize, i64, i64)> = self
            .classes
            .iter()
            .map(|&(u, v, p, n)| (u, v, p as i64, n as i64))
            .collect();
        let perm = refinement_permutation(self.vertices, &edges);
        let mut classes: Vec<_> = self
            .classes
            .iter()
            .map(|&(u, v, p, n)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b), p, n)
            })
            .collect();
        classes.sort_unstable();
        Self {
            vertices: self.vertices,
            classes,
        }
    }

    /// Remove one edge of the given sign from class `idx`.
    fn delete_one(&self, idx: usize, sign: Sign) -> Self {
        let mut out = self.clone();
        {
            let c = &mut out.classes[idx];
            match sign {
                Sign::Plus => c.2 -= 1,
                Sign::Minus => c.3 -= 1,
            }
        }
        if out.classes[idx].2 == 0 && out.classes[idx].3 == 0 {
            out.classes.remove(idx);
        }
        out
    }

    /// Contract one edge of class `idx`: the endpoints merge, the rest of
    /// the class becomes loops and vanishes, other classes are remapped and
    /// merged.
    fn contract(&self, idx: usize) -> Self {
        let (u, v, _, _) = self.classes[idx];
        let remap = |x: usize| {
            if x == v {
                u
            } else if x > v {
                x - 1
            } else {
                x
            }
        };
        let mut map: HashMap<(usize, usize), (u32, u32)> = HashMap::new();
        for (i, &(a, b, p, n)) in self.classes.iter().enumerate() {
            if i == idx {
                continue;
            }
            let (a, b) = (remap(a), remap(b));
            if a == b {
                continue;
            }
            let entry = map.entry((a.min(b), a.max(b))).or_insert((0, 0));
            entry.0 += p;
            entry.1 += n;
        }
        let mut classes: Vec<_> = map
            .into_iter()
            .map(|((a, b), (p, n))| (a, b, p, n))
            .collect();
        classes.sort_unstable();
        Self {
            vertices: self.vertices - 1,
            classes,
        }
    }
}

/// Dichromatic polynomial of a signed multigraph by deletion-contraction:
/// `R(G) = q^2 R(G-e+) + q z R(G/e+)` on positive edges,
/// `R(G) = q^-2 R(G-e-) - q^-1 z R(G/e-)` on negative ones, loops are
/// dropped, `n` isolated vertices give `t^n`.
pub fn r_recursive(g: &SignedMultigraph) -> HPoly {
    r_recursive_with(g, Pivot::First)
}

pub fn r_recursive_with(g: &SignedMultigraph, pivot: Pivot) -> HPoly {
    let mut memo = HashMap::new();
    let mut rng = match pivot {
        Pivot::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    r_rec(ClassMinor::from_signed(g), pivot, &mut rng, &mut memo)
}

fn r_rec(
    state: ClassMinor,
    pivot: Pivot,
    rng: &mut Option<ChaCha8Rng>,
    memo: &mut HashMap<ClassMinor, HPoly>,
) -> HPoly {
    if state.classes.is_empty() {
        return HPoly::t_power(state.vertices as u32);
    }
    let key = state.canonical();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let idx = match pivot {
        Pivot::First => 0,
        Pivot::Last => state.classes.len() - 1,
        Pivot::Random(_) => rng.as_mut().unwrap().gen_range(0..state.classes.len()),
    };
    let sign = if state.classes[idx].2 > 0 {
        Sign::Plus
    } else {
        Sign::Minus
    };
    let deleted = r_rec(state.delete_one(idx, sign), pivot, rng, memo);
    let contracted = r_rec(state.contract(idx), pivot, rng, memo);
    let result = match sign {
        Sign::Plus => {
            deleted.scale(&QLaurent::q_power(2))
                + contracted.scale(&QLaurent::q_power(1)).shift(0, 1)
        }
        Sign::Minus => {
            deleted.scale(&QLaurent::q_power(-2))
                - contracted.scale(&QLaurent::q_power(-1)).shift(0, 1)
        }
    };
    memo.insert(key, result.clone());
    result
}

// ---------------------------------------------------------------------------
// R by the subset state sum
// ---------------------------------------------------------------------------

/// Dichromatic polynomial by the sum over all edge subsets `S`:
/// `t^{p0(G:S)} ((q^-1 - q)/z)^{p1(G:S)} (-1)^{|S|-} z^{|S|}
///  q^{2(|E-S|+ - |E-S|-) + |S|+ - |S|-}`.
/// Since `p1(G:S) <= |S|` the `z` exponent never goes negative.
pub fn r_statesum(g: &SignedMultigraph) -> Result<HPoly, DichromaticError> {
    let m = g.edges().len();
    if m > STATESUM_EDGE_CAP {
        return Err(DichromaticError::TooManyEdges {
            edges: m,
            cap: STATESUM_EDGE_CAP,
        });
    }
    let total_pos = g.edges().iter().filter(|e| e.sign == Sign::Plus).count() as i64;
    let total_neg = m as i64 - total_pos;
    let mut dpow = Vec::with_capacity(m + 1);
    dpow.push(QLaurent::one());
    for k in 1..=m {
        dpow.push(&dpow[k - 1] * &QLaurent::qinv_minus_q());
    }

    let mut acc = HPoly::zero();
    let mut uf = UnionFind::new(g.vertices());
    statesum_rec(
        g, 0, 0, 0, 0, &mut uf, &dpow, total_pos, total_neg, &mut acc,
    );
    Ok(acc)
}

#[allow(clippy::too_many_arguments)]
fn statesum_rec(
    g: &SignedMultigraph,
    idx: usize,
    pos_in: i64,
    neg_in: i64,
    merges: usize,
    uf: &mut UnionFind,
    dpow: &[QLaurent],
    total_pos: i64,
    total_neg: i64,
    acc: &mut HPoly,
) {
    if idx == g.edges().len() {
        let n = g.vertices();
        let size = pos_in + neg_in;
        let p0 = n - merges;
        let p1 = size as usize - merges;
        let qexp = 2 * ((total_pos - pos_in) - (total_neg - neg_in)) + pos_in - neg_in;
        let mut coeff = &dpow[p1] * &QLaurent::q_power(qexp);
        if neg_in % 2 == 1 {
            coeff = -coeff;
        }
        acc.add_term(p0 as u32, merges as u32, &coeff);
        return;
    }
    let e = g.edges()[idx];

    // edge left out of S
    statesum_rec(
        g,
        idx + 1,
        pos_in,
        neg_in,
        merges,
        uf,
        dpow,
        total_pos,
        total_neg,
        acc,
    );

    // edge included in S
    let (dp, dn) = match e.sign {
        Sign::Plus => (1, 0),
        Sign::Minus => (0, 1),
    };
    match uf.union(e.u, e.v) {
        Some(token) => {
            statesum_rec(
                g,
                idx + 1,
                pos_in + dp,
                neg_in + dn,
                merges + 1,
                uf,
                dpow,
                total_pos,
                total_neg,
                acc,
            );
            uf.undo(token);
        }
        None => {
            statesum_rec(
                g,
                idx + 1,
                pos_in + dp,
                neg_in + dn,
                merges,
                uf,
                dpow,
                total_pos,
                total_neg,
                acc,
            );
        }
    }
}

// ---------------------------------------------------------------------------
// R1 on weighted graphs
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Hash)]
struct WeightedKey {
    vertices: usize,
    edges: Vec<(usize, usize, i64)>,
}

fn weighted_key(g: &WeightedGraph) -> WeightedKey {
    let edges: Vec<(usize, usize, i64, i64)> =
        g.edges().iter().map(|e| (e.u, e.v, e.weight, 0)).collect();
    let perm = refinement_permutation(g.vertices(), &edges);
    let mut relabeled: Vec<(usize, usize, i64)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (perm[e.u], perm[e.v]);
            (a.min(b), a.max(b), e.weight)
        })
        .collect();
    relabeled.sort_unstable();
    WeightedKey {
        vertices: g.vertices(),
        edges: relabeled,
    }
}

/// Weighted dichromatic polynomial by the recursion
/// `R1(G) = q^{2f(e)} R1(G-e) + ((q^{2f(e)}-1)/(q-q^-1)) z R1(G/e)`.
pub fn r1_recursive(g: &WeightedGraph) -> HPoly {
    let mut memo = HashMap::new();
    r1_rec(g, &mut memo)
}

fn r1_rec(g: &WeightedGraph, memo: &mut HashMap<WeightedKey, HPoly>) -> HPoly {
    if g.edges().is_empty() {
        return HPoly::t_power(g.vertices() as u32);
    }
    let key = weighted_key(g);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let f = g.edges()[0].weight;
    let (deleted, contracted) = g.reduce(0).expect("edge 0 exists");
    let result = r1_rec(&deleted, memo).scale(&QLaurent::q_power(2 * f))
        + r1_rec(&contracted, memo).scale(&qbracket2(f)).shift(0, 1);
    memo.insert(key, result.clone());
    result
}

/// Spanning-tree activity expansion:
/// `t * sum over trees T of  prod_{EI} q^{2f}  prod_{II} z (q^{2f}-1)/(q-q^-1)
///  prod_{IA} (t q^{2f} + z (q^{2f}-1)/(q-q^-1))`,
/// externally active edges contributing the factor 1. Disconnected graphs
/// are handled componentwise and multiplied.
pub fn r1_tree_expansion(g: &WeightedGraph, order: &EdgeOrder) -> Result<HPoly, DichromaticError> {
    let mut total = HPoly::one();
    for comp in g.components() {
        let (sub, ids) = g.induced(&comp);
        let mut seq: Vec<usize> = (0..sub.edges().len()).collect();
        seq.sort_by_key(|&k| order.rank(ids[k]));
        let sub_order = EdgeOrder::from_sequence(seq, sub.edges().len())?;
        total = total * connected_tree_sum(&sub, &sub_order)?;
    }
    Ok(total)
}

fn connected_tree_sum(g: &WeightedGraph, order: &EdgeOrder) -> Result<HPoly, DichromaticError> {
    let mut sum = HPoly::zero();
    for tree in g.spanning_trees()? {
        let act = g.classify_activity(order, &tree)?;
        let mut term = HPoly::one();
        let mut q_factor = QLaurent::one();
        for &e in &act.externally_inactive {
            q_factor = q_factor * QLaurent::q_power(2 * g.edges()[e].weight);
        }
        term = term.scale(&q_factor);
        for &e in &act.internally_inactive {
            term = term.scale(&qbracket2(g.edges()[e].weight)).shift(0, 1);
        }
        for &e in &act.internally_active {
            let f = g.edges()[e].weight;
            let factor = HPoly::monomial(1, 0, QLaurent::q_power(2 * f))
                + HPoly::monomial(0, 1, qbracket2(f));
            term = term * factor;
        }
        sum += &term;
    }
    Ok(sum.shift(1, 0))
}

/// Forest activity expansion:
/// `sum over forests S of  t^{n-|S|} z^{|S|}  prod_{A_S} q^{2f}
///  prod_{S} (q^{2f}-1)/(q-q^-1)`.
pub fn r1_forest_expansion(
    g: &WeightedGraph,
    order: &EdgeOrder,
) -> Result<HPoly, DichromaticError> {
    let n = g.vertices();
    let mut sum = HPoly::zero();
    for forest in g.forests() {
        let inactive = g.forest_external_inactive(order, &forest)?;
        let mut qexp = 0i64;
        for &e in &inactive {
            qexp += 2 * g.edges()[e].weight;
        }
        let mut coeff = QLaurent::q_power(qexp);
        for &e in &forest {
            coeff = coeff * qbracket2(g.edges()[e].weight);
        }
        sum.add_term((n - forest.len()) as u32, forest.len() as u32, &coeff);
    }
    Ok(sum)
}

// ---------------------------------------------------------------------------
// R2 on doubled graphs
// ---------------------------------------------------------------------------

/// State for the doubled recursion: one entry per surviving edge pair.
#[derive(Clone, PartialEq, Eq, Hash)]
struct PairMinor {
    vertices: usize,
    pairs: Vec<(usize, usize, Sign)>,
}

impl PairMinor {
    fn canonical(&self) -> Self {
        let edges: Vec<(usize, usize, i64, i64)> = self
            .pairs
            .iter()
            .map(|&(u, v, s)| (u, v, s.value(), 0))
            .collect();
        let perm = refinement_permutation(self.vertices, &edges);
        let mut pairs: Vec<_> = self
            .pairs
            .iter()
            .map(|&(u, v, s)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b), s)
            })
            .collect();
        pairs.sort_unstable();
        Self {
            vertices: self.vertices,
            pairs,
        }
    }
}

/// Dichromatic polynomial of a doubled graph by the rule
/// `R2(G2) = q^{2e(e)} R2(G2 with e's sign flipped) + e(e) q^{e(e)} z R2(G2/e)`.
///
/// Flipping one member of a same-sign pair creates an opposite-sign parallel
/// pair, which is deleted outright; contracting turns the partner edge into
/// a loop, which rule (iii) drops. Both branches strictly shrink the pair
/// list, so the evaluation terminates.
///
/// The input must carry the doubled-pair structure: edges `2k` and `2k+1`
/// share endpoints and sign.
pub fn r2_recursive(g2: &SignedMultigraph) -> Result<HPoly, DichromaticError> {
    if g2.edges().len() % 2 != 0 {
        return Err(DichromaticError::NotDoubled("odd edge count".into()));
    }
    let mut pairs = Vec::new();
    for k in 0..g2.edges().len() / 2 {
        let a = g2.edges()[2 * k];
        let b = g2.edges()[2 * k + 1];
        let same_endpoints = (a.u, a.v) == (b.u, b.v) || (a.u, a.v) == (b.v, b.u);
        if !same_endpoints || a.sign != b.sign {
            return Err(DichromaticError::NotDoubled(format!(
                "edges {} and {} are not a parallel same-sign pair",
                2 * k,
                2 * k + 1
            )));
        }
        if a.u == a.v {
            continue; // a doubled loop is two loops; both vanish
        }
        pairs.push((a.u.min(a.v), a.u.max(a.v), a.sign));
    }
    let state = PairMinor {
        vertices: g2.vertices(),
        pairs,
    };
    let mut memo = HashMap::new();
    Ok(r2_rec(state, &mut memo))
}

fn r2_rec(state: PairMinor, memo: &mut HashMap<PairMinor, HPoly>) -> HPoly {
    if state.pairs.is_empty() {
        return HPoly::t_power(state.vertices as u32);
    }
    let key = state.canonical();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let (u, v, sign) = state.pairs[0];

    // flip branch: the pair turns opposite-signed and cancels
    let mut flipped = state.clone();
    flipped.pairs.remove(0);

    // contraction branch: endpoints merge, the partner becomes a loop
    let remap = |x: usize| {
        if x == v {
            u
        } else if x > v {
            x - 1
        } else {
            x
        }
    };
    let contracted_pairs: Vec<_> = state.pairs[1..]
        .iter()
        .filter_map(|&(a, b, s)| {
            let (a, b) = (remap(a), remap(b));
            if a == b {
                None
            } else {
                Some((a.min(b), a.max(b), s))
            }
        })
        .collect();
    let contracted = PairMinor {
        vertices: state.vertices - 1,
        pairs: contracted_pairs,
    };

    let s = sign.value();
    let flipped_val = r2_rec(flipped, memo).scale(&QLaurent::q_power(2 * s));
    let mut contracted_val = r2_rec(contracted, memo)
        .scale(&QLaurent::q_power(s))
        .shift(0, 1);
    if sign == Sign::Minus {
        contracted_val = -contracted_val;
    }
    let result = flipped_val + contracted_val;
    memo.insert(key, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SignedEdge;
    use crate::poly::parse_hpoly;

    fn signed(vertices: usize, edges: &[(usize, usize, i64)]) -> SignedMultigraph {
        SignedMultigraph::new(
            vertices,
            edges
                .iter()
                .map(|&(u, v, s)| SignedEdge {
                    u,
                    v,
                    sign: Sign::of(s).unwrap(),
                })
                .collect(),
        )
        .unwrap()
    }

    fn hp(s: &str) -> HPoly {
        parse_hpoly(s).unwrap()
    }

    #[test]
    fn r_single_edges() {
        assert_eq!(r_recursive(&signed(2, &[(0, 1, 1)])), hp("q^2 t^2 + q t z"));
        assert_eq!(
            r_recursive(&signed(2, &[(0, 1, -1)])),
            hp("q^-2 t^2 - q^-1 t z")
        );
        // a loop contributes nothing
        assert_eq!(r_recursive(&signed(1, &[(0, 0, 1)])), hp("t"));
        // opposite-sign parallel pair cancels
        assert_eq!(r_recursive(&signed(2, &[(0, 1, 1), (0, 1, -1)])), hp("t^2"));
    }

    #[test]
    fn statesum_matches_hand_expansion() {
        assert_eq!(
            r_statesum(&signed(2, &[(0, 1, 1)])).unwrap(),
            hp("q^2 t^2 + q t z")
        );
        assert_eq!(r_statesum(&signed(1, &[(0, 0, 1)])).unwrap(), hp("t"));
        assert_eq!(
            r_statesum(&SignedMultigraph::edgeless(4)).unwrap(),
            hp("t^4")
        );
    }

    #[test]
    fn statesum_cap() {
        let edges: Vec<(usize, usize, i64)> = (0..31).map(|_| (0, 1, 1)).collect();
        let g = signed(2, &edges);
        assert_eq!(
            r_statesum(&g),
            Err(DichromaticError::TooManyEdges { edges: 31, cap: 30 })
        );
    }

    #[test]
    fn r1_single_edges() {
        let g = WeightedGraph::new(2, vec![(0, 1, 2)]).unwrap();
        assert_eq!(r1_recursive(&g), hp("q^4 t^2 + (q^3 + q) t z"));
        let g = WeightedGraph::new(2, vec![(0, 1, -2)]).unwrap();
        assert_eq!(r1_recursive(&g), hp("q^-4 t^2 - (q^-1 + q^-3) t z"));
        assert_eq!(r1_recursive(&WeightedGraph::edgeless(3)), hp("t^3"));
    }

    #[test]
    fn tree_expansion_examples() {
        // single edge of weight f: the edge is internally active
        for f in [-3i64, 1, 2] {
            let g = WeightedGraph::new(2, vec![(0, 1, f)]).unwrap();
            let order = EdgeOrder::by_id(1);
            let expect = (HPoly::monomial(1, 0, QLaurent::q_power(2 * f))
                + HPoly::monomial(0, 1, qbracket2(f)))
            .shift(1, 0);
            assert_eq!(r1_tree_expansion(&g, &order).unwrap(), expect);
            assert_eq!(r1_tree_expansion(&g, &order).unwrap(), r1_recursive(&g));
        }

        // triangle with unit weights agrees with the recursion
        let g = WeightedGraph::new(3, vec![(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap();
        let order = EdgeOrder::lex(&g);
        assert_eq!(r1_tree_expansion(&g, &order).unwrap(), r1_recursive(&g));

        // two-vertex graph of weight 1 equals R of a single positive edge
        let g = WeightedGraph::new(2, vec![(0, 1, 1)]).unwrap();
        assert_eq!(
            r1_tree_expansion(&g, &EdgeOrder::by_id(1)).unwrap(),
            r_recursive(&signed(2, &[(0, 1, 1)]))
        );
    }

    #[test]
    fn forest_expansion_examples() {
        assert_eq!(
            r1_forest_expansion(&WeightedGraph::edgeless(3), &EdgeOrder::by_id(0)).unwrap(),
            hp("t^3")
        );

        let g = WeightedGraph::new(2, vec![(0, 1, 3)]).unwrap();
        assert_eq!(
            r1_forest_expansion(&g, &EdgeOrder::by_id(1)).unwrap(),
            hp("q^6 t^2 + (q^5 + q^3 + q) t z")
        );

        // triangle (2, 3, -2): the z^2 t coefficient printed in the link
        // computation below
        let g = WeightedGraph::new(3, vec![(0, 1, 2), (0, 2, 3), (1, 2, -2)]).unwrap();
        let p = r1_forest_expansion(&g, &EdgeOrder::lex(&g)).unwrap();
        assert_eq!(
            p.coeff(1, 2),
            -(QLaurent::q_power(4) + QLaurent::monomial(6, 2) + QLaurent::q_power(8))
        );
        assert_eq!(p, r1_recursive(&g));
    }

    #[test]
    fn r2_doubles() {
        let plus = signed(2, &[(0, 1, 1)]);
        assert_eq!(r2_recursive(&plus.double()).unwrap(), hp("q^2 t^2 + q t z"));
        let minus = signed(2, &[(0, 1, -1)]);
        assert_eq!(
            r2_recursive(&minus.double()).unwrap(),
            hp("q^-2 t^2 - q^-1 t z")
        );
        assert_eq!(
            r2_recursive(&SignedMultigraph::edgeless(3).double()).unwrap(),
            hp("t^3")
        );
        // a doubled loop is two loops and vanishes
        assert_eq!(
            r2_recursive(&signed(1, &[(0, 0, -1)]).double()).unwrap(),
            hp("t")
        );
        // not a doubled graph
        assert!(r2_recursive(&signed(2, &[(0, 1, 1)])).is_err());
        assert!(r2_recursive(&signed(2, &[(0, 1, 1), (0, 1, -1)])).is_err());
    }

    #[test]
    fn pivot_strategies_agree() {
        let g = signed(
            4,
            &[
                (0, 1, 1),
                (0, 1, 1),
                (1, 2, -1),
                (2, 3, 1),
                (0, 3, -1),
                (1, 3, 1),
            ],
        );
        let first = r_recursive_with(&g, Pivot::First);
        assert_eq!(first, r_recursive_with(&g, Pivot::Last));
        assert_eq!(first, r_recursive_with(&g, Pivot::Random(7)));
        assert_eq!(first, r_recursive_with(&g, Pivot::Random(8)));
    }

    #[test]
    fn disjoint_union_multiplies() {
        let a = signed(2, &[(0, 1, 1), (0, 1, 1)]);
        let b = signed(3, &[(0, 1, -1), (1, 2, 1)]);
        let ab = a.disjoint_union(&b);
        assert_eq!(r_recursive(&ab), r_recursive(&a) * r_recursive(&b));
    }

    #[test]
    fn opposite_pair_deletion_preserves_r() {
        let g = signed(3, &[(0, 1, 1), (1, 2, -1)]);
        let mut edges: Vec<SignedEdge> = g.edges().to_vec();
        edges.push(SignedEdge {
            u: 0,
            v: 2,
            sign: Sign::Plus,
        });
        edges.push(SignedEdge {
            u: 0,
            v: 2,
            sign: Sign::Minus,
        });
        let with_pair = SignedMultigraph::new(3, edges).unwrap();
        assert_eq!(r_recursive(&with_pair), r_recursive(&g));
    }

    #[test]
    fn all_routes_agree_on_small_graphs() {
        let samples = [
            signed(1, &[]),
            signed(2, &[(0, 1, 1)]),
            signed(3, &[(0, 1, 1), (0, 1, 1), (1, 2, -1), (0, 2, 1)]),
            signed(
                4,
                &[
                    (0, 1, 1),
                    (1, 2, 1),
                    (2, 3, -1),
                    (0, 3, -1),
                    (0, 2, 1),
                    (1, 1, 1),
                ],
            ),
        ];
        for g in &samples {
            let r = r_recursive(g);
            assert_eq!(r, r_statesum(g).unwrap());
            assert_eq!(r, r1_recursive(&g.simplify_to_weighted()));
            assert_eq!(r, r2_recursive(&g.double()).unwrap());
            let w = g.simplify_to_weighted();
            for seed in 0..3 {
                let order = EdgeOrder::random(w.edges().len(), seed);
                assert_eq!(r, r1_tree_expansion(&w, &order).unwrap());
                assert_eq!(r, r1_forest_expansion(&w, &order).unwrap());
            }
        }
    }
}
