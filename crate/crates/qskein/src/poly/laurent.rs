use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in `q` with exact integer coefficients.
///
/// The map never stores a zero coefficient, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * q^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `q^exp`.
    pub fn q_power(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    /// `q^-1 - q`, the unit-free factor appearing in the state sum and the
    /// HOMFLYPT conversion.
    pub fn qinv_minus_q() -> Self {
        Self::monomial(-1, 1) - Self::monomial(1, 1)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((exp, coeff))` when the polynomial is a single monomial.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, c)| (e, c))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, exp: i64, coeff: impl Into<BigInt>) {
        let c = coeff.into();
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Term-wise `q^k -> (-1)^k q^-k`, i.e. the substitution `q := -q^-1`.
    pub fn subst_neg_inverse(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| {
            let c = if e.rem_euclid(2) == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            (-e, c)
        }))
    }

    /// Exact division; `None` when `self` is not a multiple of `d`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Long division from the top term; exponent width plays the role of
        // degree so the loop terminates for non-multiples as well.
        let d_deg = d.max_exp().unwrap() - d.min_exp().unwrap();
        let (d_top, d_lead) = {
            let (e, c) = d.terms.iter().next_back().unwrap();
            (*e, c.clone())
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let r_deg = rem.max_exp().unwrap() - rem.min_exp().unwrap();
            if r_deg < d_deg {
                return None;
            }
            let (r_top, r_lead) = {
                let (e, c) = rem.terms.iter().next_back().unwrap();
                (*e, c.clone())
            };
            if (&r_lead % &d_lead) != BigInt::zero() {
                return None;
            }
            let t = Self::monomial(r_top - d_top, &r_lead / &d_lead);
            rem = rem - &t * d;
            quot = quot + t;
        }
        Some(quot)
    }
}

impl std::fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::poly::text::render_qlaurent(self, 'q'))
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: QLaurent) -> QLaurent {
        &self + &rhs
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: QLaurent) -> QLaurent {
        &self - &rhs
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -&self
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: QLaurent) -> QLaurent {
        &self * &rhs
    }
}

impl Mul<&QLaurent> for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        &self * rhs
    }
}

/// Signs of a coefficient polynomial, used by the grouped renderer.
pub(crate) fn all_negative(p: &QLaurent) -> bool {
    !p.is_zero() && p.terms.values().all(|c| c.is_negative())
}
