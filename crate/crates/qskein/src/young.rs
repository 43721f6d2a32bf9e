//! Young-diagram duality between a multiset of integers and the column
//! heights of `Sigma(q) = sum (q^{2a_i} - 1)/(q - q^-1)`, the direct `w_1`
//! formula, the decoding of linking numbers from a homotopy polynomial, and
//! the unimodality check.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::Serialize;
use thiserror::Error;

use crate::link::LinkingMatrix;
use crate::poly::{qbracket2, HPoly, QLaurent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YoungError {
    #[error("multiset values must be nonzero")]
    ZeroValue,
    #[error("column {j} has height {b}, wrong sign for its side")]
    ColumnSign { j: i64, b: i64 },
    #[error("column heights are not weakly decreasing: |b_{j}| jumps to {b}")]
    ColumnMonotonicity { j: i64, b: i64 },
    #[error("coefficient at q^{exp} does not fit a column height")]
    HeightOverflow { exp: i64 },
    #[error("q^{exp} cannot appear in a column decomposition (even exponent)")]
    EvenExponent { exp: i64 },
    #[error("the zero polynomial is not a homotopy polynomial")]
    ZeroPolynomial,
    #[error("term t^{dt} z^{dz} breaks the homotopy-polynomial shape for {n} components")]
    BadShape { dt: u32, dz: u32, n: usize },
    #[error("leading coefficient w_0 = {0} is not a monic power q^(2 lk)")]
    BadLeading(String),
    #[error("{pairs} nonzero linking numbers cannot fit {n} components")]
    TooManyPairs { pairs: usize, n: usize },
    #[error("recovered linking numbers sum to {sum}, but w_0 gives lk = {lk}")]
    InconsistentTotal { sum: i64, lk: i64 },
}

// ---------------------------------------------------------------------------
// Multisets and column functions
// ---------------------------------------------------------------------------

/// Finite multiset of nonzero integers (the rows of the Young diagram; for
/// links, the nonzero linking numbers).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntMultiset {
    counts: BTreeMap<i64, usize>,
}

impl IntMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Panics on a zero value; zero is not a valid row length.
    pub fn insert(&mut self, value: i64, multiplicity: usize) {
        assert!(value != 0, "multiset values must be nonzero");
        if multiplicity > 0 {
            *self.counts.entry(value).or_insert(0) += multiplicity;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.counts.iter().map(|(&v, &m)| (v, m))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total size counting multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn sum(&self) -> i64 {
        self.iter().map(|(v, m)| v * m as i64).sum()
    }

    pub fn negated(&self) -> Self {
        Self {
            counts: self.iter().map(|(v, m)| (-v, m)).collect(),
        }
    }
}

impl FromIterator<i64> for IntMultiset {
    fn from_iter<T: IntoIterator<Item = i64>>(iter: T) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v, 1);
        }
        s
    }
}

impl Serialize for IntMultiset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.counts.len()))?;
        for (v, m) in self.iter() {
            seq.serialize_element(&(v, m))?;
        }
        seq.end()
    }
}

/// Column heights of a (two-quadrant) Young diagram: `b_j > 0` for `j > 0`,
/// `b_j < 0` for `j < 0`, magnitudes weakly decreasing outward on each side.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColumnFunction {
    heights: BTreeMap<i64, i64>,
}

impl ColumnFunction {
    pub fn new(heights: BTreeMap<i64, i64>) -> Result<Self, YoungError> {
        for (&j, &b) in &heights {
            if j == 0 {
                return Err(YoungError::ZeroValue);
            }
            if (j > 0 && b <= 0) || (j < 0 && b >= 0) {
                return Err(YoungError::ColumnSign { j, b });
            }
        }
        // each side must be contiguous from 1 with weakly decreasing |b|
        let check_side = |side: i64| -> Result<(), YoungError> {
            let max = heights
                .keys()
                .filter(|&&j| j.signum() == side)
                .map(|j| j.abs())
                .max()
                .unwrap_or(0);
            let mut prev = i64::MAX;
            for a in 1..=max {
                let j = side * a;
                let b = heights.get(&j).copied().unwrap_or(0);
                if b == 0 || b.abs() > prev {
                    return Err(YoungError::ColumnMonotonicity { j, b });
                }
                prev = b.abs();
            }
            Ok(())
        };
        check_side(1)?;
        check_side(-1)?;
        Ok(Self { heights })
    }

    pub fn height(&self, j: i64) -> i64 {
        self.heights.get(&j).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.heights.iter().map(|(&j, &b)| (j, b))
    }
}

/// Column heights of the Young diagram whose rows are the multiset:
/// `b_j` counts the values `>= j` on the positive side and (negatively)
/// the values `<= j` on the negative side.
pub fn dual_columns(rows: &IntMultiset) -> ColumnFunction {
    let mut heights = BTreeMap::new();
    let max_pos = rows.iter().map(|(v, _)| v).max().unwrap_or(0);
    for j in 1..=max_pos.max(0) {
        let count: usize = rows.iter().filter(|&(v, _)| v >= j).map(|(_, m)| m).sum();
        if count > 0 {
            heights.insert(j, count as i64);
        }
    }
    let min_neg = rows.iter().map(|(v, _)| v).min().unwrap_or(0);
    for j in 1..=(-min_neg).max(0) {
        let count: usize = rows.iter().filter(|&(v, _)| v <= -j).map(|(_, m)| m).sum();
        if count > 0 {
            heights.insert(-j, -(count as i64));
        }
    }
    ColumnFunction::new(heights).expect("conjugate of a multiset is valid")
}

/// Inverse of [`dual_columns`]: conjugate the column heights back into rows.
pub fn to_rows(columns: &ColumnFunction) -> IntMultiset {
    let mut rows = IntMultiset::new();
    let max_pos = columns.iter().map(|(j, _)| j).max().unwrap_or(0);
    for v in 1..=max_pos.max(0) {
        let count = columns.height(v) - columns.height(v + 1);
        if count > 0 {
            rows.insert(v, count as usize);
        }
    }
    let min_neg = columns.iter().map(|(j, _)| j).min().unwrap_or(0);
    for v in 1..=(-min_neg).max(0) {
        let count = -columns.height(-v) + columns.height(-v - 1);
        if count > 0 {
            rows.insert(-v, count as usize);
        }
    }
    rows
}

/// `Sigma(q) = sum_i (q^{2 a_i} - 1)/(q - q^-1)` over the multiset.
pub fn sigma_of(rows: &IntMultiset) -> QLaurent {
    let mut sum = QLaurent::zero();
    for (v, m) in rows.iter() {
        let b = qbracket2(v);
        for _ in 0..m {
            sum += &b;
        }
    }
    sum
}

// ---------------------------------------------------------------------------
// w_1 and recovery
// ---------------------------------------------------------------------------

/// `w_1(q) = -q^{2 lk} sum_{(i,j)} (q^{-2 l_ij} - 1)/(q - q^-1)` directly
/// from the linking numbers.
pub fn w1_from_linking(m: &LinkingMatrix) -> QLaurent {
    let negated: IntMultiset = m.nonzero_pairs().iter().map(|&(_, _, l)| -l).collect();
    -(QLaurent::q_power(2 * m.total_linking()) * sigma_of(&negated))
}

/// Decodes `Sigma(q)` into column heights: the coefficient of
/// `q^{2j - sgn(j)}` is `b_j`; any even exponent is a hard error.
fn decode_sigma(sigma: &QLaurent) -> Result<ColumnFunction, YoungError> {
    let mut heights = BTreeMap::new();
    for (exp, coeff) in sigma.iter() {
        if exp.rem_euclid(2) == 0 {
            return Err(YoungError::EvenExponent { exp });
        }
        let j = if exp > 0 {
            (exp + 1) / 2
        } else {
            (exp - 1) / 2
        };
        let b: i64 = coeff
            .try_into()
            .map_err(|_| YoungError::HeightOverflow { exp })?;
        heights.insert(j, b);
    }
    ColumnFunction::new(heights)
}

/// Everything the homotopy polynomial reveals about the linking numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Recovered {
    /// Number of link components.
    #[serde(rename = "n")]
    pub components: usize,
    /// Total linking number, read off `w_0 = q^{2 lk}`.
    #[serde(rename = "lk")]
    pub total_linking: i64,
    /// The nonzero linking numbers with multiplicity.
    pub nonzero: IntMultiset,
    /// How many component pairs have linking number zero.
    #[serde(rename = "zeros")]
    pub zero_pairs: usize,
}

/// Recovers the multiset of nonzero linking numbers from `w_1` and the
/// total linking number.
pub fn recover_from_w1(w1: &QLaurent, lk: i64) -> Result<IntMultiset, YoungError> {
    let sigma = -(QLaurent::q_power(-2 * lk) * w1);
    let columns = decode_sigma(&sigma)?;
    let nonzero = to_rows(&columns).negated();
    let sum = nonzero.sum();
    if sum != lk {
        return Err(YoungError::InconsistentTotal { sum, lk });
    }
    Ok(nonzero)
}

/// Recovers the component count, total linking number, nonzero linking
/// numbers and zero-pair count from a homotopy polynomial.
pub fn recover_linking(p: &HPoly) -> Result<Recovered, YoungError> {
    if p.is_zero() {
        return Err(YoungError::ZeroPolynomial);
    }
    let n = p.deg_t().unwrap() as usize;
    for ((dt, dz), _) in p.iter() {
        if dt as usize + dz as usize != n || (n > 0 && dt == 0) {
            return Err(YoungError::BadShape { dt, dz, n });
        }
    }
    let w0 = p.coeff(n as u32, 0);
    let lk = match w0.as_monomial() {
        Some((exp, c)) if c == &num_bigint::BigInt::from(1) && exp % 2 == 0 => exp / 2,
        _ => {
            return Err(YoungError::BadLeading(crate::poly::render_qlaurent(
                &w0, 'q',
            )));
        }
    };
    if n == 0 {
        // the empty link: HP = 1
        return Ok(Recovered {
            components: 0,
            total_linking: 0,
            nonzero: IntMultiset::new(),
            zero_pairs: 0,
        });
    }
    let w1 = p.coeff(n as u32 - 1, 1);
    let nonzero = recover_from_w1(&w1, lk)?;
    let max_pairs = n * (n - 1) / 2;
    if nonzero.len() > max_pairs {
        return Err(YoungError::TooManyPairs {
            pairs: nonzero.len(),
            n,
        });
    }
    Ok(Recovered {
        components: n,
        total_linking: lk,
        nonzero: nonzero.clone(),
        zero_pairs: max_pairs - nonzero.len(),
    })
}

/// Whether the coefficient magnitudes of `w_1` rise to a single peak and
/// fall afterwards (zero gaps inside the exponent range count). Errors on
/// an even exponent: a homotopy-polynomial `w_1` is supported on odd
/// powers only.
pub fn unimodal_check(w1: &QLaurent) -> Result<bool, YoungError> {
    if w1.is_zero() {
        return Ok(true);
    }
    for (exp, _) in w1.iter() {
        if exp.rem_euclid(2) == 0 {
            return Err(YoungError::EvenExponent { exp });
        }
    }
    let lo = w1.min_exp().unwrap();
    let hi = w1.max_exp().unwrap();
    let mags: Vec<num_bigint::BigInt> = (lo..=hi)
        .step_by(2)
        .map(|e| num_traits::Signed::abs(&w1.coeff(e)))
        .collect();
    let mut i = 0;
    while i + 1 < mags.len() && mags[i] <= mags[i + 1] {
        i += 1;
    }
    while i + 1 < mags.len() && mags[i] >= mags[i + 1] {
        i += 1;
    }
    Ok(i + 1 == mags.len())
}
