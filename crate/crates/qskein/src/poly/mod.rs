//! Exact polynomial arithmetic: Laurent polynomials in `q`, polynomials in
//! `t` and `z` over them, canonical text form, and the two q-integer
//! families the recursions are built from.

mod hpoly;
mod laurent;
pub mod text;

pub use hpoly::{HPoly, QSubst};
pub use laurent::QLaurent;
pub use text::{
    parse_hpoly, parse_qlaurent, render_flat, render_grouped, render_qlaurent, ParseError,
};

/// The balanced q-integer `[n]_q = (q^n - q^-n)/(q - q^-1)`, produced
/// directly in expanded form `q^{n-1} + q^{n-3} + ... + q^{1-n}`.
pub fn qint(n: i64) -> QLaurent {
    if n == 0 {
        return QLaurent::zero();
    }
    if n < 0 {
        return -qint(-n);
    }
    let mut p = QLaurent::zero();
    let mut e = n - 1;
    while e >= 1 - n {
        p.add_term(e, 1);
        e -= 2;
    }
    p
}

/// `(q^{2n} - 1)/(q - q^-1)`: the edge-weight coefficient of the weighted
/// recursion. Expands to `q^{2n-1} + q^{2n-3} + ... + q` for `n > 0` and to
/// `-q^{2n+1} - q^{2n+3} - ... - q^-1` for `n < 0`.
pub fn qbracket2(n: i64) -> QLaurent {
    if n == 0 {
        return QLaurent::zero();
    }
    let mut p = QLaurent::zero();
    if n > 0 {
        let mut e = 2 * n - 1;
        while e >= 1 {
            p.add_term(e, 1);
            e -= 2;
        }
    } else {
        let mut e = 2 * n + 1;
        while e <= -1 {
            p.add_term(e, -1);
            e += 2;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_values() {
        assert_eq!(qint(0), QLaurent::zero());
        assert_eq!(qint(1), QLaurent::one());
        // [3]_q = q^2 + 1 + q^-2
        assert_eq!(
            qint(3),
            QLaurent::q_power(2) + QLaurent::one() + QLaurent::q_power(-2)
        );
        // [-2]_q = -q - q^-1
        assert_eq!(qint(-2), -(QLaurent::q_power(1) + QLaurent::q_power(-1)));
    }

    #[test]
    fn qbracket2_values() {
        assert_eq!(qbracket2(2), QLaurent::q_power(3) + QLaurent::q_power(1));
        assert_eq!(
            qbracket2(-2),
            -(QLaurent::q_power(-1) + QLaurent::q_power(-3))
        );
        assert_eq!(qbracket2(0), QLaurent::zero());
    }

    #[test]
    fn qint_addition_identity() {
        // [m+n]_q = q^n [m]_q + q^-m [n]_q
        for m in -10..=10 {
            for n in -10..=10 {
                let lhs = qint(m + n);
                let rhs = QLaurent::q_power(n) * qint(m) + QLaurent::q_power(-m) * qint(n);
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn qbracket2_is_shifted_qint() {
        for n in -10..=10 {
            assert_eq!(qbracket2(n), QLaurent::q_power(n) * qint(n), "n={n}");
        }
    }

    #[test]
    fn defining_quotients() {
        // (q - q^-1) [n]_q = q^n - q^-n  and  (q - q^-1) qbracket2(n) = q^2n - 1
        let d = QLaurent::q_power(1) - QLaurent::q_power(-1);
        for n in -8..=8 {
            assert_eq!(&d * &qint(n), QLaurent::q_power(n) - QLaurent::q_power(-n));
            assert_eq!(
                &d * &qbracket2(n),
                QLaurent::q_power(2 * n) - QLaurent::one()
            );
        }
    }
}
