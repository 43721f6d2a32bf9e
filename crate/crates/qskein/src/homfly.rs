//! The matched-diagram bridge: converting the dichromatic polynomial `R(G)`
//! of a plane signed graph into the Jones-Conway (HOMFLYPT) polynomial of
//! its matched diagram and back. The conversion is the substitution
//! `P(v, z) = t^-1 R` at `v = q`, `t = (v^-1 - v)/z`; the reverse divides
//! each `z`-coefficient exactly by the matching power of `q^-1 - q`.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign};

use num_traits::Signed;
use thiserror::Error;

use crate::poly::text::{assemble, monomial_body, parse_monomials, var_factor, ParseError};
use crate::poly::{HPoly, QLaurent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomflyError {
    #[error("term t^{dt} z^{dz} does not fit an R-polynomial with m = {m}")]
    DegreeShape { dt: u32, dz: u32, m: usize },
    #[error("z-exponent {exp} is outside the band [-m, m] of parity m, m = {m}")]
    BadZExponent { exp: i64, m: usize },
    #[error("coefficient of z^{exp} is not divisible by (q^-1 - q)^{power}")]
    NotDivisible { exp: i64, power: usize },
}

/// Laurent polynomial in `z` whose coefficients are Laurent polynomials in
/// `v`. For the HOMFLYPT polynomial of a diagram with `m + 1` components
/// all `z`-exponents lie in `[-m, m]` and share the parity of `m`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HomflyPoly {
    terms: BTreeMap<i64, QLaurent>,
}

impl HomflyPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, QLaurent::one())
    }

    /// `c(v) * z^exp`.
    pub fn monomial(z_exp: i64, coeff: QLaurent) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(z_exp, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, z_exp: i64, coeff: &QLaurent) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(z_exp).or_insert_with(QLaurent::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&z_exp);
        }
    }

    pub fn coeff(&self, z_exp: i64) -> QLaurent {
        self.terms
            .get(&z_exp)
            .cloned()
            .unwrap_or_else(QLaurent::zero)
    }

    /// Iterates `(z_exp, coeff)` ascending.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &QLaurent)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn scale(&self, c: &QLaurent) -> Self {
        let mut out = Self::zero();
        for (e, coeff) in self.iter() {
            out.add_term(e, &(coeff * c));
        }
        out
    }

    /// Multiply by `z^k` (k may be negative).
    pub fn shift_z(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// HOMFLYPT value of the `n`-component unlink: `((v^-1 - v)/z)^{n-1}`.
    pub fn unlink(n: usize) -> Self {
        assert!(n >= 1);
        let m = (n - 1) as u32;
        Self::monomial(-(m as i64), QLaurent::qinv_minus_q().pow(m))
    }
}

impl std::fmt::Debug for HomflyPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", render_homfly(self))
    }
}

impl Add for &HomflyPoly {
    type Output = HomflyPoly;
    fn add(self, rhs: &HomflyPoly) -> HomflyPoly {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(e, c);
        }
        out
    }
}

impl Add for HomflyPoly {
    type Output = HomflyPoly;
    fn add(self, rhs: HomflyPoly) -> HomflyPoly {
        &self + &rhs
    }
}

impl AddAssign<&HomflyPoly> for HomflyPoly {
    fn add_assign(&mut self, rhs: &HomflyPoly) {
        for (e, c) in rhs.iter() {
            self.add_term(e, c);
        }
    }
}

/// Canonical text in `v` and `z`: groups by ascending `z`-exponent, the
/// `v`-coefficient parenthesized when it has several terms.
pub fn render_homfly(p: &HomflyPoly) -> String {
    let mut terms: Vec<(bool, String)> = Vec::new();
    for (e, coeff) in p.iter() {
        let zfac: Vec<String> = var_factor('z', e).into_iter().collect();
        if let Some((ve, c)) = coeff.as_monomial() {
            let mut factors: Vec<String> = var_factor('v', ve).into_iter().collect();
            factors.extend(zfac);
            terms.push((c.is_negative(), monomial_body(&c.abs(), &factors)));
        } else {
            let (neg, body) = if coeff.iter().all(|(_, c)| c.is_negative()) {
                (true, crate::poly::render_qlaurent(&-coeff, 'v'))
            } else {
                (false, crate::poly::render_qlaurent(coeff, 'v'))
            };
            let mut s = format!("({body})");
            for f in zfac {
                s.push(' ');
                s.push_str(&f);
            }
            terms.push((neg, s));
        }
    }
    assemble(&terms)
}

/// Parses the `v,z` grammar; both variables may carry negative exponents.
pub fn parse_homfly(src: &str) -> Result<HomflyPoly, ParseError> {
    let monomials = parse_monomials(src, &[('v', true), ('z', true)])?;
    let mut out = HomflyPoly::zero();
    for (c, exps) in monomials {
        let v = exps.get(&'v').copied().unwrap_or(0);
        let z = exps.get(&'z').copied().unwrap_or(0);
        out.add_term(z, &QLaurent::monomial(v, c));
    }
    Ok(out)
}

/// `P(v, z) = t^-1 R` with `t` substituted by `(v^-1 - v)/z`. The input
/// must have the degree shape of an `R(G)` on `m + 1` vertices: every
/// monomial carries at least one `t` and `deg_t + deg_z = m + 1`.
pub fn r_to_homflypt(r: &HPoly, m: usize) -> Result<HomflyPoly, HomflyError> {
    for ((dt, dz), _) in r.iter() {
        if dt == 0 || dt as usize + dz as usize != m + 1 {
            return Err(HomflyError::DegreeShape { dt, dz, m });
        }
    }
    let mut out = HomflyPoly::zero();
    for ((_, dz), c) in r.iter() {
        let i = dz as usize; // deg_t - 1 = m - i
        let factor = QLaurent::qinv_minus_q().pow((m - i) as u32);
        out.add_term(2 * i as i64 - m as i64, &(c * &factor));
    }
    Ok(out)
}

/// Inverse substitution: `R(G) = t sum_i a_{-m+2i}(q)/(q^-1 - q)^{m-i}
/// t^{m-i} z^i`. Exact divisibility of every coefficient is required;
/// anything else is rejected, never truncated.
pub fn homflypt_to_r(p: &HomflyPoly, m: usize) -> Result<HPoly, HomflyError> {
    let mut out = HPoly::zero();
    for (exp, a) in p.iter() {
        if exp.abs() > m as i64 || (exp - m as i64).rem_euclid(2) != 0 {
            return Err(HomflyError::BadZExponent { exp, m });
        }
        let i = ((exp + m as i64) / 2) as usize;
        let divisor = QLaurent::qinv_minus_q().pow((m - i) as u32);
        let c = a
            .div_exact(&divisor)
            .ok_or(HomflyError::NotDivisible { exp, power: m - i })?;
        out.add_term((m + 1 - i) as u32, i as u32, &c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dichromatic::r_recursive;
    use crate::graph::{Sign, SignedEdge, SignedMultigraph};
    use crate::link::{graph_of_link, LinkingMatrix};
    use crate::poly::parse_hpoly;

    /// Positive Hopf link HOMFLYPT from the skein relation
    /// `v^-1 P+ - v P- = z P0`: switching one crossing gives the two-unlink,
    /// smoothing gives the unknot, so `P+ = v^2 P(unlink_2) + v z P(unknot)`.
    fn hopf_from_skein() -> HomflyPoly {
        let p_minus = HomflyPoly::unlink(2);
        let p_zero = HomflyPoly::one();
        p_minus.scale(&QLaurent::q_power(2)) + p_zero.scale(&QLaurent::q_power(1)).shift_z(1)
    }

    #[test]
    fn hopf_fixture() {
        let r = parse_hpoly("q^2 t^2 + q t z").unwrap();
        let p = r_to_homflypt(&r, 1).unwrap();
        assert_eq!(p, hopf_from_skein());
        assert_eq!(p, parse_homfly("(v - v^3) z^-1 + v z").unwrap());
        assert_eq!(render_homfly(&p), "(v - v^3) z^-1 + v z");
        assert_eq!(homflypt_to_r(&p, 1).unwrap(), r);
    }

    #[test]
    fn unlinks_are_edgeless_graphs() {
        for n in 1..=5usize {
            let p = r_to_homflypt(&HPoly::t_power(n as u32), n - 1).unwrap();
            assert_eq!(p, HomflyPoly::unlink(n));
            assert_eq!(homflypt_to_r(&p, n - 1).unwrap(), HPoly::t_power(n as u32));
        }
    }

    #[test]
    fn three_component_band() {
        let m = LinkingMatrix::from_upper(3, &[2, 3, -2]).unwrap();
        let r = r_recursive(&graph_of_link(&m));
        let p = r_to_homflypt(&r, 2).unwrap();
        let exps: Vec<i64> = p.iter().map(|(e, _)| e).collect();
        assert_eq!(exps, vec![-2, 0, 2]);
        assert_eq!(homflypt_to_r(&p, 2).unwrap(), r);
    }

    #[test]
    fn roundtrip_on_random_graphs() {
        let g = SignedMultigraph::new(
            4,
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
                    v: 3,
                    sign: Sign::Plus,
                },
                SignedEdge {
                    u: 0,
                    v: 3,
                    sign: Sign::Minus,
                },
            ],
        )
        .unwrap();
        let r = r_recursive(&g);
        let m = g.vertices() - 1;
        let p = r_to_homflypt(&r, m).unwrap();
        assert_eq!(homflypt_to_r(&p, m).unwrap(), r);
        // and back the other way
        assert_eq!(r_to_homflypt(&homflypt_to_r(&p, m).unwrap(), m).unwrap(), p);
    }

    #[test]
    fn shape_and_divisibility_errors() {
        // z-only monomial: no t factor
        let bad = parse_hpoly("q^2 t^2 + z^2").unwrap();
        assert!(matches!(
            r_to_homflypt(&bad, 1),
            Err(HomflyError::DegreeShape { .. })
        ));
        // wrong total degree for the declared m
        let bad = parse_hpoly("t^3").unwrap();
        assert!(r_to_homflypt(&bad, 1).is_err());

        // perturbing a coefficient breaks exact divisibility
        let p = parse_homfly("(v - v^3 + 1) z^-1 + v z").unwrap();
        assert!(matches!(
            homflypt_to_r(&p, 1),
            Err(HomflyError::NotDivisible { exp: -1, power: 1 })
        ));
        // z-exponent outside the band
        let p = parse_homfly("v z^3").unwrap();
        assert!(matches!(
            homflypt_to_r(&p, 1),
            Err(HomflyError::BadZExponent { .. })
        ));
        // wrong parity
        let p = parse_homfly("v").unwrap();
        assert!(homflypt_to_r(&p, 1).is_err());
    }
}
