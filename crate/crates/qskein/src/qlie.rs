//! The q-Lie bracket on the group algebra of `Z^r` with an antisymmetric
//! form, Jacobi verification, and ordered normal forms in the q-symmetric
//! algebra, its enveloping deformation, and the two-parameter quantized
//! enveloping algebra. Confluence of the rewriting is the computational
//! content of the q-PBW theorem.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{qint, HPoly, QLaurent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QlieError {
    #[error("form matrix is not square: row {row} has length {len} for rank {rank}")]
    NotSquare { row: usize, len: usize, rank: usize },
    #[error("form matrix is not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("rank mismatch: expected vectors of length {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
}

/// Antisymmetric integer bilinear form on `Z^r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawForm", into = "RawForm")]
pub struct FormMatrix {
    entries: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct RawForm {
    r: usize,
    #[serde(rename = "F")]
    form: Vec<Vec<i64>>,
}

impl TryFrom<RawForm> for FormMatrix {
    type Error = QlieError;
    fn try_from(raw: RawForm) -> Result<Self, QlieError> {
        if raw.form.len() != raw.r {
            return Err(QlieError::NotSquare {
                row: 0,
                len: raw.form.len(),
                rank: raw.r,
            });
        }
        FormMatrix::new(raw.form)
    }
}

impl From<FormMatrix> for RawForm {
    fn from(f: FormMatrix) -> Self {
        RawForm {
            r: f.entries.len(),
            form: f.entries,
        }
    }
}

impl FormMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, QlieError> {
        let rank = entries.len();
        for (row, r) in entries.iter().enumerate() {
            if r.len() != rank {
                return Err(QlieError::NotSquare {
                    row,
                    len: r.len(),
                    rank,
                });
            }
        }
        for i in 0..rank {
            for j in i..rank {
                if entries[i][j] != -entries[j][i] {
                    return Err(QlieError::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            entries: vec![vec![0; rank]; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// `f(g, h) = g^T F h`.
    pub fn eval(&self, g: &[i64], h: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &gi) in g.iter().enumerate() {
            for (j, &hj) in h.iter().enumerate() {
                acc += gi * self.entries[i][j] * hj;
            }
        }
        acc
    }

    fn check_rank(&self, len: usize) -> Result<(), QlieError> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(QlieError::RankMismatch {
                expected: self.rank(),
                got: len,
            })
        }
    }
}

/// Letters are compared coordinate-wise from the last entry, so the basis
/// vectors come in their natural order `e1 < e2 < ... < er`. Any fixed
/// total order works; this one is pinned so normal forms are reproducible.
pub fn letter_cmp(a: &[i64], b: &[i64]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

// ---------------------------------------------------------------------------
// Group algebra and the q-Lie bracket
// ---------------------------------------------------------------------------

/// Element of the group algebra `Z[q^{±1}] H` for `H = Z^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgElem {
    rank: usize,
    terms: BTreeMap<Vec<i64>, QLaurent>,
}

impl GroupAlgElem {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element of a single group member.
    pub fn basis(v: Vec<i64>) -> Self {
        let rank = v.len();
        let mut e = Self::zero(rank);
        e.add_term(v, &QLaurent::one());
        e
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, v: Vec<i64>, coeff: &QLaurent) {
        assert_eq!(v.len(), self.rank, "vector length must match rank");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(v.clone()).or_insert_with(QLaurent::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &QLaurent)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self, QlieError> {
        if self.rank != other.rank {
            return Err(QlieError::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        let mut out = self.clone();
        for (v, c) in other.iter() {
            out.add_term(v.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QLaurent) -> Self {
        let mut out = Self::zero(self.rank);
        for (v, coeff) in self.iter() {
            out.add_term(v.clone(), &(coeff * c));
        }
        out
    }
}

/// `[g, h]_q = [f(g, h)]_q (g + h)`, extended bilinearly.
pub fn qbracket_lie(
    x: &GroupAlgElem,
    y: &GroupAlgElem,
    f: &FormMatrix,
) -> Result<GroupAlgElem, QlieError> {
    f.check_rank(x.rank())?;
    f.check_rank(y.rank())?;
    let mut out = GroupAlgElem::zero(f.rank());
    for (g, cg) in x.iter() {
        for (h, ch) in y.iter() {
            let coeff = &(cg * ch) * &qint(f.eval(g, h));
            let sum: Vec<i64> = g.iter().zip(h).map(|(a, b)| a + b).collect();
            out.add_term(sum, &coeff);
        }
    }
    Ok(out)
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`; identically zero because the
/// bracket satisfies the Jacobi identity.
pub fn jacobi_defect(
    x: &GroupAlgElem,
    y: &GroupAlgElem,
    z: &GroupAlgElem,
    f: &FormMatrix,
) -> Result<GroupAlgElem, QlieError> {
    let a = qbracket_lie(x, &qbracket_lie(y, z, f)?, f)?;
    let b = qbracket_lie(y, &qbracket_lie(z, x, f)?, f)?;
    let c = qbracket_lie(z, &qbracket_lie(x, y, f)?, f)?;
    a.add(&b)?.add(&c)
}

// ---------------------------------------------------------------------------
// Tensor words and normal forms
// ---------------------------------------------------------------------------

/// Which quotient of the tensor algebra the rewriting works in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Deformation {
    /// q-symmetric algebra: `g (x) h = q^{2f(g,h)} h (x) g`.
    SymQ,
    /// Enveloping deformation: the bracket term enters with coefficient 1.
    EnvQ,
    /// Two-parameter quantization: the bracket term carries the formal `z`.
    EnvQz,
}

/// Which adjacent inversion a rewriting step picks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Formal sum of tensor words over `Z^r` with coefficients in `Z[q^{±1}, z]`
/// (polynomials in `z`; the `t` slot of [`HPoly`] is never used).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorWordSum {
    rank: usize,
    terms: BTreeMap<Vec<Vec<i64>>, HPoly>,
}

impl TensorWordSum {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// Single word with a coefficient.
    pub fn word(letters: Vec<Vec<i64>>, coeff: HPoly) -> Result<Self, QlieError> {
        let rank = letters.first().map(|l| l.len()).unwrap_or(0);
        let mut w = Self::zero(rank);
        w.add_word(letters, &coeff)?;
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_word(&mut self, letters: Vec<Vec<i64>>, coeff: &HPoly) -> Result<(), QlieError> {
        for l in &letters {
            if l.len() != self.rank {
                return Err(QlieError::RankMismatch {
                    expected: self.rank,
                    got: l.len(),
                });
            }
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self
            .terms
            .entry(letters.clone())
            .or_insert_with(HPoly::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&letters);
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Vec<i64>>, &HPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self, QlieError> {
        if self.rank != other.rank {
            return Err(QlieError::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_word(w.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, QlieError> {
        self.add(&other.scale(&HPoly::constant(-QLaurent::one())))
    }

    pub fn scale(&self, c: &HPoly) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, coeff) in self.iter() {
            out.add_word(w.clone(), &(coeff * c)).expect("same rank");
        }
        out
    }

    /// Substitute `z := 0` in every coefficient.
    pub fn substitute_z_zero(&self) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, coeff) in self.iter() {
            out.add_word(w.clone(), &coeff.substitute_z_zero())
                .expect("same rank");
        }
        out
    }

    /// Substitute on `q` in every coefficient.
    pub fn substitute_q(&self, mode: crate::poly::QSubst) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, coeff) in self.iter() {
            out.add_word(w.clone(), &coeff.substitute_q(mode))
                .expect("same rank");
        }
        out
    }
}

fn first_inversion(word: &[Vec<i64>], strategy: Strategy) -> Option<usize> {
    let mut found = None;
    for i in 0..word.len().saturating_sub(1) {
        if letter_cmp(&word[i], &word[i + 1]) == Ordering::Greater {
            match strategy {
                Strategy::Leftmost => return Some(i),
                Strategy::Rightmost => found = Some(i),
            }
        }
    }
    found
}

/// Rewrites every word into weakly increasing letter order using
/// `g (x) h = q^{2f(g,h)} h (x) g + z q^{f(g,h)} [f(g,h)]_q (g + h)`
/// on out-of-order adjacent pairs, with `z` read as the formal variable,
/// the constant 1, or 0 according to the deformation. Each step either
/// shortens the word or lowers its inversion count, so the rewriting
/// terminates; the result is strategy-independent and idempotent.
pub fn normal_form(
    w: &TensorWordSum,
    f: &FormMatrix,
    deformation: Deformation,
) -> Result<TensorWordSum, QlieError> {
    normal_form_with_strategy(w, f, deformation, Strategy::Leftmost)
}

pub fn normal_form_with_strategy(
    w: &TensorWordSum,
    f: &FormMatrix,
    deformation: Deformation,
    strategy: Strategy,
) -> Result<TensorWordSum, QlieError> {
    if !w.is_zero() {
        f.check_rank(w.rank())?;
    }
    let mut out = TensorWordSum::zero(w.rank());
    let mut stack: Vec<(Vec<Vec<i64>>, HPoly)> = w
        .iter()
        .map(|(word, c)| (word.clone(), c.clone()))
        .collect();
    while let Some((word, coeff)) = stack.pop() {
        let Some(i) = first_inversion(&word, strategy) else {
            out.add_word(word, &coeff)?;
            continue;
        };
        let fgh = f.eval(&word[i], &word[i + 1]);

        let mut swapped = word.clone();
        swapped.swap(i, i + 1);
        stack.push((swapped, coeff.scale(&QLaurent::q_power(2 * fgh))));

        let bracket = qint(fgh);
        if !bracket.is_zero() && deformation != Deformation::SymQ {
            let mut merged = word.clone();
            let sum: Vec<i64> = word[i]
                .iter()
                .zip(&word[i + 1])
                .map(|(a, b)| a + b)
                .collect();
            merged.splice(i..=i + 1, [sum]);
            let mut c = coeff.scale(&(QLaurent::q_power(fgh) * bracket));
            if deformation == Deformation::EnvQz {
                c = c.shift(0, 1); // the formal z
            }
            stack.push((merged, c));
        }
    }
    Ok(out)
}

/// Normalizes `a (x) b (x) c` under the leftmost-first and rightmost-first
/// strategies and compares the results: always true, which is the diamond
/// condition behind the q-PBW theorem.
pub fn confluence_check(
    a: &[i64],
    b: &[i64],
    c: &[i64],
    f: &FormMatrix,
    deformation: Deformation,
) -> Result<bool, QlieError> {
    let word = TensorWordSum::word(vec![a.to_vec(), b.to_vec(), c.to_vec()], HPoly::one())?;
    let left = normal_form_with_strategy(&word, f, deformation, Strategy::Leftmost)?;
    let right = normal_form_with_strategy(&word, f, deformation, Strategy::Rightmost)?;
    Ok(left == right)
}

/// The coefficient-twisted product `a *^ b = q^{-f(a, b)} a (x) b`, where
/// `f` of two words sums the form over all letter pairs.
pub fn twisted_product(
    a: &TensorWordSum,
    b: &TensorWordSum,
    f: &FormMatrix,
) -> Result<TensorWordSum, QlieError> {
    if !a.is_zero() {
        f.check_rank(a.rank())?;
    }
    if !b.is_zero() {
        f.check_rank(b.rank())?;
    }
    let mut out = TensorWordSum::zero(f.rank());
    for (u, cu) in a.iter() {
        for (w, cw) in b.iter() {
            let mut pairing = 0;
            for x in u {
                for y in w {
                    pairing += f.eval(x, y);
                }
            }
            let mut word = u.clone();
            word.extend(w.iter().cloned());
            out.add_word(word, &(cu * cw).scale(&QLaurent::q_power(-pairing)))?;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn render_vector(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// `(coeff) (v1)(x)(v2)...`; the empty word renders as `1`.
pub fn render_word_sum(w: &TensorWordSum) -> String {
    if w.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = w
        .iter()
        .map(|(word, coeff)| {
            let letters = if word.is_empty() {
                "1".to_string()
            } else {
                word.iter()
                    .map(|v| render_vector(v))
                    .collect::<Vec<_>>()
                    .join("(x)")
            };
            format!("({}) {}", crate::poly::render_flat(coeff), letters)
        })
        .collect();
    parts.join(" + ")
}

pub fn render_group_elem(e: &GroupAlgElem) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = e
        .iter()
        .map(|(v, coeff)| {
            format!(
                "({}) {}",
                crate::poly::render_qlaurent(coeff, 'q'),
                render_vector(v)
            )
        })
        .collect();
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn form2() -> FormMatrix {
        FormMatrix::new(vec![vec![0, 1], vec![-1, 0]]).unwrap()
    }

    fn random_form(rng: &mut impl Rng, rank: usize, max: i64) -> FormMatrix {
        let mut entries = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in (i + 1)..rank {
                let v = rng.gen_range(-max..=max);
                entries[i][j] = v;
                entries[j][i] = -v;
            }
        }
        FormMatrix::new(entries).unwrap()
    }

    fn random_elem(rng: &mut impl Rng, rank: usize) -> GroupAlgElem {
        let mut e = GroupAlgElem::zero(rank);
        for _ in 0..rng.gen_range(1..=2) {
            let v: Vec<i64> = (0..rank).map(|_| rng.gen_range(-3..=3)).collect();
            e.add_term(v, &QLaurent::constant(rng.gen_range(-2..=2i64)));
        }
        e
    }

    #[test]
    fn bracket_examples() {
        let f = form2();
        let g = GroupAlgElem::basis(vec![1, 0]);
        let h = GroupAlgElem::basis(vec![0, 1]);
        assert_eq!(
            qbracket_lie(&g, &h, &f).unwrap(),
            GroupAlgElem::basis(vec![1, 1])
        );

        let g2 = GroupAlgElem::basis(vec![2, 0]);
        let expect =
            GroupAlgElem::basis(vec![2, 1]).scale(&(QLaurent::q_power(1) + QLaurent::q_power(-1)));
        assert_eq!(qbracket_lie(&g2, &h, &f).unwrap(), expect);

        // [x, x] = 0 even for composite x
        let mut x = GroupAlgElem::basis(vec![1, 2]);
        x.add_term(vec![0, -1], &QLaurent::constant(3));
        assert!(qbracket_lie(&x, &x, &f).unwrap().is_zero());

        // antisymmetry
        let gh = qbracket_lie(&g, &h, &f).unwrap();
        let hg = qbracket_lie(&h, &g, &f).unwrap();
        assert!(gh.add(&hg).unwrap().is_zero());
    }

    #[test]
    fn rank_mismatch_rejected() {
        let f = form2();
        let x = GroupAlgElem::basis(vec![1, 0, 0]);
        assert!(qbracket_lie(&x, &x, &f).is_err());
    }

    #[test]
    fn jacobi_holds() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for rank in 1..=3 {
            let f = random_form(&mut rng, rank, 5);
            for _ in 0..20 {
                let x = random_elem(&mut rng, rank);
                let y = random_elem(&mut rng, rank);
                let z = random_elem(&mut rng, rank);
                assert!(jacobi_defect(&x, &y, &z, &f).unwrap().is_zero());
            }
        }
        // degenerate triple
        let f = form2();
        let x = GroupAlgElem::basis(vec![2, -1]);
        let y = GroupAlgElem::basis(vec![0, 3]);
        assert!(jacobi_defect(&x, &x, &y, &f).unwrap().is_zero());
    }

    #[test]
    fn letter_order_is_by_last_coordinate() {
        assert_eq!(letter_cmp(&[1, 0], &[0, 1]), Ordering::Less);
        assert_eq!(letter_cmp(&[0, 1], &[1, 0]), Ordering::Greater);
        assert_eq!(letter_cmp(&[2, 5], &[2, 5]), Ordering::Equal);
    }

    #[test]
    fn normal_form_single_step() {
        let f = form2();
        // (0,1) (x) (1,0) with f((0,1),(1,0)) = -1
        let w = TensorWordSum::word(vec![vec![0, 1], vec![1, 0]], HPoly::one()).unwrap();

        let nf = normal_form(&w, &f, Deformation::EnvQz).unwrap();
        let mut expect = TensorWordSum::zero(2);
        expect
            .add_word(
                vec![vec![1, 0], vec![0, 1]],
                &HPoly::constant(QLaurent::q_power(-2)),
            )
            .unwrap();
        expect
            .add_word(
                vec![vec![1, 1]],
                &HPoly::monomial(0, 1, -QLaurent::q_power(-1)),
            )
            .unwrap();
        assert_eq!(nf, expect);

        // sym_q drops the bracket term
        let nf = normal_form(&w, &f, Deformation::SymQ).unwrap();
        let expect = TensorWordSum::word(
            vec![vec![1, 0], vec![0, 1]],
            HPoly::constant(QLaurent::q_power(-2)),
        )
        .unwrap();
        assert_eq!(nf, expect);

        // ordered words are fixed points
        let sorted = TensorWordSum::word(vec![vec![1, 0], vec![0, 1]], HPoly::one()).unwrap();
        assert_eq!(
            normal_form(&sorted, &f, Deformation::EnvQz).unwrap(),
            sorted
        );
    }

    #[test]
    fn confluence_trivial_cases() {
        let f = form2();
        // already ordered: both strategies are no-ops
        let letters = [vec![1i64, 0], vec![0, 1], vec![1, 1]];
        assert_eq!(letter_cmp(&letters[0], &letters[1]), Ordering::Less);
        assert_eq!(letter_cmp(&letters[1], &letters[2]), Ordering::Less);
        assert!(confluence_check(
            &letters[0],
            &letters[1],
            &letters[2],
            &f,
            Deformation::EnvQz
        )
        .unwrap());
        let word = TensorWordSum::word(letters.to_vec(), HPoly::one()).unwrap();
        assert_eq!(normal_form(&word, &f, Deformation::EnvQz).unwrap(), word);

        // rank 1: the form is identically zero and everything commutes
        let f1 = FormMatrix::zero(1);
        assert!(confluence_check(&[2], &[1], &[0], &f1, Deformation::EnvQz).unwrap());
        let word = TensorWordSum::word(vec![vec![2], vec![1], vec![0]], HPoly::one()).unwrap();
        let sorted = TensorWordSum::word(vec![vec![0], vec![1], vec![2]], HPoly::one()).unwrap();
        assert_eq!(normal_form(&word, &f1, Deformation::EnvQz).unwrap(), sorted);
    }

    #[test]
    fn normal_form_idempotent_and_confluent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let rank = rng.gen_range(1..=3);
            let f = random_form(&mut rng, rank, 3);
            let letters: Vec<Vec<i64>> = (0..3)
                .map(|_| (0..rank).map(|_| rng.gen_range(-2..=2)).collect())
                .collect();
            for mode in [Deformation::SymQ, Deformation::EnvQ, Deformation::EnvQz] {
                let w = TensorWordSum::word(letters.clone(), HPoly::one()).unwrap();
                let nf = normal_form(&w, &f, mode).unwrap();
                assert_eq!(normal_form(&nf, &f, mode).unwrap(), nf, "idempotence");
                assert!(confluence_check(&letters[0], &letters[1], &letters[2], &f, mode).unwrap());
            }
        }
    }

    #[test]
    fn symq_is_envqz_at_z_zero() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let rank = rng.gen_range(1..=3);
            let f = random_form(&mut rng, rank, 3);
            let letters: Vec<Vec<i64>> = (0..3)
                .map(|_| (0..rank).map(|_| rng.gen_range(-2..=2)).collect())
                .collect();
            let w = TensorWordSum::word(letters, HPoly::one()).unwrap();
            let sym = normal_form(&w, &f, Deformation::SymQ).unwrap();
            let qz = normal_form(&w, &f, Deformation::EnvQz).unwrap();
            assert_eq!(sym, qz.substitute_z_zero());
        }
    }

    #[test]
    fn q_one_degenerates_to_classical_relation() {
        // at q = 1 the relation reads g (x) h - h (x) g = z f(g,h) (g + h)
        let f = form2();
        let g = vec![0, 1];
        let h = vec![1, 0];
        let gh = TensorWordSum::word(vec![g.clone(), h.clone()], HPoly::one()).unwrap();
        let hg = TensorWordSum::word(vec![h.clone(), g.clone()], HPoly::one()).unwrap();
        let nf = normal_form(&gh, &f, Deformation::EnvQz).unwrap();
        let lhs = nf.substitute_q(crate::poly::QSubst::One).sub(&hg).unwrap();
        // f(g, h) = -1, g + h = (1, 1)
        let rhs = TensorWordSum::word(
            vec![vec![1, 1]],
            HPoly::monomial(0, 1, QLaurent::constant(-1)),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn twisted_product_recovers_classical_bracket_shape() {
        // nf(g *^ h) - nf(h *^ g) = z [g, h]_q for single letters
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let rank = rng.gen_range(1..=3);
            let f = random_form(&mut rng, rank, 3);
            let g: Vec<i64> = (0..rank).map(|_| rng.gen_range(-2..=2)).collect();
            let h: Vec<i64> = (0..rank).map(|_| rng.gen_range(-2..=2)).collect();
            let wg = TensorWordSum::word(vec![g.clone()], HPoly::one()).unwrap();
            let wh = TensorWordSum::word(vec![h.clone()], HPoly::one()).unwrap();
            let gh = normal_form(
                &twisted_product(&wg, &wh, &f).unwrap(),
                &f,
                Deformation::EnvQz,
            )
            .unwrap();
            let hg = normal_form(
                &twisted_product(&wh, &wg, &f).unwrap(),
                &f,
                Deformation::EnvQz,
            )
            .unwrap();
            let sum: Vec<i64> = g.iter().zip(&h).map(|(a, b)| a + b).collect();
            let bracket =
                TensorWordSum::word(vec![sum], HPoly::monomial(0, 1, qint(f.eval(&g, &h))))
                    .unwrap();
            assert_eq!(gh.sub(&hg).unwrap(), bracket);
        }
    }

    #[test]
    fn form_validation_and_schema() {
        assert!(FormMatrix::new(vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(FormMatrix::new(vec![vec![1]]).is_err());
        assert!(FormMatrix::new(vec![vec![0, 1]]).is_err());
        let f: FormMatrix = serde_json::from_str(r#"{"r":2,"F":[[0,3],[-3,0]]}"#).unwrap();
        assert_eq!(f.eval(&[1, 0], &[0, 1]), 3);
    }
}
