//! Links in the 3-sphere presented by linking matrices or braid words, and
//! the homotopy polynomial `HP_L(q, t, z)` computed two ways: the direct
//! acyclic-subset formula, and deletion-contraction on the associated
//! signed graph.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dichromatic::r_recursive;
use crate::graph::{EdgeOrder, Sign, SignedEdge, SignedMultigraph, WeightedGraph};
use crate::poly::{qbracket2, HPoly, QLaurent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("linking matrix is not square: row {row} has length {len}, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("linking matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("linking matrix has nonzero diagonal entry at {0}")]
    NonzeroDiagonal(usize),
    #[error("declared component count {declared} does not match matrix size {actual}")]
    SizeMismatch { declared: usize, actual: usize },
    #[error("braid letter {letter} at position {index} out of range for {strands} strands")]
    BadBraidLetter {
        index: usize,
        letter: i64,
        strands: usize,
    },
    #[error("braid must have at least one strand")]
    NoStrands,
    #[error("coefficient index {k} out of range for a {n}-component polynomial")]
    CoefficientOutOfRange { k: usize, n: usize },
    #[error("the zero polynomial is not a homotopy polynomial")]
    ZeroPolynomial,
}

// ---------------------------------------------------------------------------
// Linking matrices
// ---------------------------------------------------------------------------

/// Symmetric integer matrix with zero diagonal; entry `(i, j)` is the
/// linking number of components `i` and `j`. This is the complete input
/// datum for the homotopy polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct LinkingMatrix {
    entries: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    n: usize,
    matrix: Vec<Vec<i64>>,
}

impl TryFrom<RawMatrix> for LinkingMatrix {
    type Error = LinkError;
    fn try_from(raw: RawMatrix) -> Result<Self, LinkError> {
        if raw.matrix.len() != raw.n {
            return Err(LinkError::SizeMismatch {
                declared: raw.n,
                actual: raw.matrix.len(),
            });
        }
        LinkingMatrix::new(raw.matrix)
    }
}

impl From<LinkingMatrix> for RawMatrix {
    fn from(m: LinkingMatrix) -> Self {
        RawMatrix {
            n: m.entries.len(),
            matrix: m.entries,
        }
    }
}

impl LinkingMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, LinkError> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(LinkError::NotSquare {
                    row: i,
                    len: row.len(),
                    n,
                });
            }
        }
        for i in 0..n {
            if entries[i][i] != 0 {
                return Err(LinkError::NonzeroDiagonal(i));
            }
            for j in (i + 1)..n {
                if entries[i][j] != entries[j][i] {
                    return Err(LinkError::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self { entries })
    }

    /// Matrix from the strictly-upper-triangular entries, row by row.
    pub fn from_upper(n: usize, upper: &[i64]) -> Result<Self, LinkError> {
        assert_eq!(
            upper.len(),
            n * n.saturating_sub(1) / 2,
            "upper triangle size"
        );
        let mut entries = vec![vec![0i64; n]; n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in (i + 1)..n {
                let v = *it.next().unwrap();
                entries[i][j] = v;
                entries[j][i] = v;
            }
        }
        Self::new(entries)
    }

    pub fn zero(n: usize) -> Self {
        Self {
            entries: vec![vec![0; n]; n],
        }
    }

    pub fn components(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Total linking number: the sum over unordered pairs.
    pub fn total_linking(&self) -> i64 {
        let n = self.components();
        let mut lk = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                lk += self.entries[i][j];
            }
        }
        lk
    }

    /// Pairs `i < j` with nonzero linking number, lexicographically.
    pub fn nonzero_pairs(&self) -> Vec<(usize, usize, i64)> {
        let n = self.components();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.entries[i][j] != 0 {
                    out.push((i, j, self.entries[i][j]));
                }
            }
        }
        out
    }

    /// The linking matrix of the mirror image: entrywise negation.
    pub fn mirror(&self) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|&x| -x).collect())
                .collect(),
        }
    }

    /// Simultaneous row/column relabeling; `perm[i]` is the new index of
    /// component `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.components();
        let mut entries = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                entries[perm[i]][perm[j]] = self.entries[i][j];
            }
        }
        Self { entries }
    }
}

// ---------------------------------------------------------------------------
// Braid words
// ---------------------------------------------------------------------------

/// Braid word on `strands` strands; letter `g > 0` is the positive
/// generator crossing positions `g` and `g+1`, `g < 0` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBraid", into = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    word: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawBraid {
    strands: usize,
    word: Vec<i64>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = LinkError;
    fn try_from(raw: RawBraid) -> Result<Self, LinkError> {
        BraidWord::new(raw.strands, raw.word)
    }
}

impl From<BraidWord> for RawBraid {
    fn from(b: BraidWord) -> Self {
        RawBraid {
            strands: b.strands,
            word: b.word,
        }
    }
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i64>) -> Result<Self, LinkError> {
        if strands == 0 {
            return Err(LinkError::NoStrands);
        }
        for (index, &letter) in word.iter().enumerate() {
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(LinkError::BadBraidLetter {
                    index,
                    letter,
                    strands,
                });
            }
        }
        Ok(Self { strands, word })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i64] {
        &self.word
    }

    /// Linking matrix of the braid closure. Components are the cycles of
    /// the underlying permutation, numbered by smallest strand; each linking
    /// number is half the signed count of crossings between the two
    /// components, which is always even.
    pub fn linking_matrix(&self) -> LinkingMatrix {
        let k = self.strands;
        // position -> strand currently occupying it; strands are named by
        // their starting position
        let mut occupant: Vec<usize> = (0..k).collect();
        let mut counts: std::collections::BTreeMap<(usize, usize), i64> =
            std::collections::BTreeMap::new();
        for &letter in &self.word {
            let i = letter.unsigned_abs() as usize; // crossing at positions i-1, i
            let (a, b) = (occupant[i - 1], occupant[i]);
            *counts.entry((a.min(b), a.max(b))).or_insert(0) += letter.signum();
            occupant.swap(i - 1, i);
        }
        // closure joins the strand ending at position p to the strand
        // starting there
        let mut uf = crate::graph::UnionFind::new(k);
        for (p, &s) in occupant.iter().enumerate() {
            uf.union(s, p);
        }
        let mut comp_of = vec![usize::MAX; k];
        let mut n = 0;
        for s in 0..k {
            if uf.find(s) == s {
                comp_of[s] = n;
                n += 1;
            }
        }
        let comp = |s: usize| comp_of[uf.find(s)];

        let mut signed = vec![vec![0i64; n]; n];
        for (&(a, b), &c) in &counts {
            let (ca, cb) = (comp(a), comp(b));
            if ca != cb {
                signed[ca][cb] += c;
                signed[cb][ca] += c;
            }
        }
        let entries: Vec<Vec<i64>> = signed
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| {
                        debug_assert!(x % 2 == 0, "mixed crossing count must be even");
                        x / 2
                    })
                    .collect()
            })
            .collect();
        LinkingMatrix::new(entries).expect("closure matrix is symmetric with zero diagonal")
    }
}

// ---------------------------------------------------------------------------
// Homotopy polynomial
// ---------------------------------------------------------------------------

/// The signed graph of a link: one vertex per component, `|l_ij|` parallel
/// edges of sign `sgn(l_ij)` between components `i` and `j`.
pub fn graph_of_link(m: &LinkingMatrix) -> SignedMultigraph {
    let mut edges = Vec::new();
    for (i, j, l) in m.nonzero_pairs() {
        let sign = if l > 0 { Sign::Plus } else { Sign::Minus };
        for _ in 0..l.unsigned_abs() {
            edges.push(SignedEdge { u: i, v: j, sign });
        }
    }
    SignedMultigraph::new(m.components(), edges).expect("matrix indices are in range")
}

fn weighted_graph_of(m: &LinkingMatrix) -> WeightedGraph {
    WeightedGraph::new(m.components(), m.nonzero_pairs()).expect("pairs are valid edges")
}

/// `HP_L(q, t, z)` by the direct formula: the sum over all acyclic subsets
/// `S` of the pair set of
/// `q^{sum of 2 l_ij over the externally inactive pairs} z^|S| t^{n-|S|}
///  prod_{S} (q^{2 l_ij} - 1)/(q - q^-1)`,
/// pairs ordered lexicographically. Zero-linking pairs drop out of both the
/// subsets and the exponent, so only the nonzero pairs are walked.
pub fn homotopy_polynomial(m: &LinkingMatrix) -> HPoly {
    let n = m.components();
    let g = weighted_graph_of(m);
    let order = EdgeOrder::by_id(g.edges().len()); // construction order is lexicographic
    let mut hp = HPoly::zero();
    for forest in g.forests() {
        let inactive = g
            .forest_external_inactive(&order, &forest)
            .expect("enumerated forests are valid");
        let mut qexp = 0i64;
        for &e in &inactive {
            qexp += 2 * g.edges()[e].weight;
        }
        let mut coeff = QLaurent::q_power(qexp);
        for &e in &forest {
            coeff = coeff * qbracket2(g.edges()[e].weight);
        }
        hp.add_term((n - forest.len()) as u32, forest.len() as u32, &coeff);
    }
    hp
}

/// `HP_L` through the dichromatic polynomial of the signed graph; agrees
/// with `homotopy_polynomial` exactly and serves as its oracle.
pub fn hp_via_dichromatic(m: &LinkingMatrix) -> HPoly {
    r_recursive(&graph_of_link(m))
}

/// The `q = 1` specialization, computed directly:
/// `sum over acyclic S of z^|S| t^{n-|S|} prod_S l_ij`.
pub fn hp_q1(m: &LinkingMatrix) -> HPoly {
    let n = m.components();
    let g = weighted_graph_of(m);
    let mut hp = HPoly::zero();
    for forest in g.forests() {
        let mut coeff = num_bigint::BigInt::from(1);
        for &e in &forest {
            coeff *= g.edges()[e].weight;
        }
        hp.add_term(
            (n - forest.len()) as u32,
            forest.len() as u32,
            &QLaurent::constant(coeff),
        );
    }
    hp
}

/// `w_k(q)`: the coefficient of `z^k t^{n-k}` where `n` is the `t`-degree.
pub fn coefficient_w(p: &HPoly, k: usize) -> Result<QLaurent, LinkError> {
    if p.is_zero() {
        return Err(LinkError::ZeroPolynomial);
    }
    let n = p.deg_t().unwrap() as usize;
    if n == 0 || k >= n {
        return Err(LinkError::CoefficientOutOfRange { k, n });
    }
    Ok(p.coeff((n - k) as u32, k as u32))
}
