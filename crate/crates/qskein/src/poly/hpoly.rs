use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::laurent::QLaurent;

/// Substitutions on the `q` variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QSubst {
    /// `q := 1`.
    One,
    /// `q := -q^-1`, the mirror-image substitution.
    NegInverse,
}

/// Polynomial in `t` and `z` with `QLaurent` coefficients.
///
/// `t` and `z` never carry negative exponents; only `q` is Laurent.
/// Stored coefficients are never the zero polynomial.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HPoly {
    terms: BTreeMap<(u32, u32), QLaurent>,
}

impl HPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, QLaurent::one())
    }

    /// `c(q) * t^deg_t * z^deg_z`.
    pub fn monomial(deg_t: u32, deg_z: u32, coeff: QLaurent) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((deg_t, deg_z), coeff);
        }
        Self { terms }
    }

    pub fn constant(coeff: QLaurent) -> Self {
        Self::monomial(0, 0, coeff)
    }

    pub fn t_power(n: u32) -> Self {
        Self::monomial(n, 0, QLaurent::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `((deg_t, deg_z), coeff)` in ascending key order.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &QLaurent)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, deg_t: u32, deg_z: u32) -> QLaurent {
        self.terms
            .get(&(deg_t, deg_z))
            .cloned()
            .unwrap_or_else(QLaurent::zero)
    }

    /// Highest power of `t` appearing, `None` for the zero polynomial.
    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|&(dt, _)| dt).max()
    }

    pub fn deg_z(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, dz)| dz).max()
    }

    pub fn add_term(&mut self, deg_t: u32, deg_z: u32, coeff: &QLaurent) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((deg_t, deg_z))
            .or_insert_with(QLaurent::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(deg_t, deg_z));
        }
    }

    pub fn scale(&self, c: &QLaurent) -> Self {
        let mut out = Self::zero();
        for (&(dt, dz), coeff) in &self.terms {
            out.add_term(dt, dz, &(coeff * c));
        }
        out
    }

    /// Multiply by `t^dt * z^dz`.
    pub fn shift(&self, dt: u32, dz: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + dt, b + dz), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Apply a substitution to `q` inside every coefficient.
    pub fn substitute_q(&self, mode: QSubst) -> Self {
        let mut out = Self::zero();
        for (&(dt, dz), coeff) in &self.terms {
            let c = match mode {
                QSubst::One => QLaurent::constant(coeff.eval_at_one()),
                QSubst::NegInverse => coeff.subst_neg_inverse(),
            };
            out.add_term(dt, dz, &c);
        }
        out
    }

    /// Set `z := 0` (keeps only the `deg_z = 0` part).
    pub fn substitute_z_zero(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, dz), _)| dz == 0)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// Set `z := 1` (collapses the `z` grading).
    pub fn substitute_z_one(&self) -> Self {
        let mut out = Self::zero();
        for (&(dt, _), coeff) in &self.terms {
            out.add_term(dt, 0, coeff);
        }
        out
    }
}

impl std::fmt::Debug for HPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::poly::text::render_flat(self))
    }
}

impl Add for &HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (&(dt, dz), c) in &rhs.terms {
            out.add_term(dt, dz, c);
        }
        out
    }
}

impl Add for HPoly {
    type Output = HPoly;
    fn add(self, rhs: HPoly) -> HPoly {
        &self + &rhs
    }
}

impl AddAssign<&HPoly> for HPoly {
    fn add_assign(&mut self, rhs: &HPoly) {
        for (&(dt, dz), c) in &rhs.terms {
            self.add_term(dt, dz, c);
        }
    }
}

impl Sub for &HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (&(dt, dz), c) in &rhs.terms {
            out.add_term(dt, dz, &-c);
        }
        out
    }
}

impl Sub for HPoly {
    type Output = HPoly;
    fn sub(self, rhs: HPoly) -> HPoly {
        &self - &rhs
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        -&self
    }
}

impl Mul for &HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        let mut out = HPoly::zero();
        for (&(at, az), ac) in &self.terms {
            for (&(bt, bz), bc) in &rhs.terms {
                out.add_term(at + bt, az + bz, &(ac * bc));
            }
        }
        out
    }
}

impl Mul for HPoly {
    type Output = HPoly;
    fn mul(self, rhs: HPoly) -> HPoly {
        &self * &rhs
    }
}

impl Mul<&HPoly> for HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        &self * rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitute_one_sums_coefficients() {
        // q^2 t^2 + q z t  ->  t^2 + z t
        let p = HPoly::monomial(2, 0, QLaurent::q_power(2))
            + HPoly::monomial(1, 1, QLaurent::q_power(1));
        let expect =
            HPoly::monomial(2, 0, QLaurent::one()) + HPoly::monomial(1, 1, QLaurent::one());
        assert_eq!(p.substitute_q(QSubst::One), expect);
    }

    #[test]
    fn substitute_on_zero() {
        assert_eq!(HPoly::zero().substitute_q(QSubst::One), HPoly::zero());
        assert_eq!(
            HPoly::zero().substitute_q(QSubst::NegInverse),
            HPoly::zero()
        );
    }

    #[test]
    fn neg_inverse_is_involution() {
        let p = HPoly::monomial(2, 1, QLaurent::from_terms([(3, 2.into()), (-1, 5.into())]))
            + HPoly::monomial(0, 2, QLaurent::q_power(-4));
        assert_eq!(
            p.substitute_q(QSubst::NegInverse)
                .substitute_q(QSubst::NegInverse),
            p
        );
    }
}
