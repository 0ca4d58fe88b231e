//! q-integers, Gaussian binomials and the skew binomial theorem.
//!
//! Ordering convention used everywhere in the crate: in a ring where
//! `v u = q u v`, monomials are written with `u`-powers to the left of
//! `v`-powers, and
//!
//! ```text
//! (u + v)^a = Σ_r  binom(a, r)_q  u^(a-r) v^r
//! ```

use crate::scalars::{CycloScalar, QPolynomial, Rational};

/// `[n]_q = 1 + q + … + q^(n-1)`; `[0]_q = 0`.
pub fn q_integer(n: u32) -> QPolynomial {
    QPolynomial::from_coeffs(vec![Rational::ONE; n as usize])
}

/// Gaussian binomial `binom(a, r)_q`, zero for `r` outside `[0, a]`.
///
/// Product formula `Π_{i=1}^{r} (1 - q^(a-r+i)) / (1 - q^i)` with exact
/// polynomial division.
pub fn gauss_binomial(a: u32, r: i64) -> QPolynomial {
    if r < 0 || r > a as i64 {
        return QPolynomial::zero();
    }
    let r = r as u32;
    let one_minus = |k: u32| QPolynomial::one().sub(&QPolynomial::monomial(Rational::ONE, k as usize));
    let mut num = QPolynomial::one();
    let mut den = QPolynomial::one();
    for i in 1..=r {
        num = num.mul(&one_minus(a - r + i));
        den = den.mul(&one_minus(i));
    }
    num.exact_div(&den).expect("Gaussian binomial is a polynomial")
}

/// `binom(a, r)_ξ` for every `0 < r < a` vanishes.
///
/// Computed both by evaluation and through the order of `ξ` (the two agree
/// exactly when `ξ` is a primitive `a`-th root of unity); a disagreement is a
/// bug and panics.
pub fn vanishes_at(a: u32, xi: &CycloScalar) -> bool {
    assert!(a >= 2, "vanishing criterion needs a >= 2");
    let by_eval = (1..a as i64).all(|r| gauss_binomial(a, r).eval(xi).is_zero());
    let by_order = xi.order_of_unity() == Some(a as u64);
    assert_eq!(
        by_eval, by_order,
        "Gaussian binomial vanishing disagrees with order test at a={a}, xi={xi}"
    );
    by_eval
}

/// Coefficients `c_r`, `0 ≤ r ≤ a`, of `(u + v)^a = Σ c_r u^(a-r) v^r` when
/// `v u = q u v`.
pub fn skew_binomial_expand(a: u32, q: &CycloScalar) -> Vec<CycloScalar> {
    (0..=a as i64).map(|r| gauss_binomial(a, r).eval(q)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::root_of_unity;

    #[test]
    fn q_integers() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), QPolynomial::one());
        assert_eq!(q_integer(4), QPolynomial::from_ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn small_binomials() {
        for a in 0..6 {
            assert_eq!(gauss_binomial(a, 0), QPolynomial::one());
        }
        assert_eq!(gauss_binomial(2, 1), QPolynomial::from_ints(&[1, 1]));
        assert_eq!(gauss_binomial(4, 2), QPolynomial::from_ints(&[1, 1, 2, 1, 1]));
        assert!(gauss_binomial(3, 4).is_zero());
        assert!(gauss_binomial(3, -1).is_zero());
    }

    #[test]
    fn vanishing_examples() {
        assert!(vanishes_at(2, &CycloScalar::from_int(-1)));
        assert!(!vanishes_at(4, &CycloScalar::from_int(-1)));
        assert!(vanishes_at(5, &root_of_unity(5, 1)));
        assert!(!vanishes_at(3, &CycloScalar::from_int(2)));
    }

    #[test]
    fn skew_expansions() {
        let one = CycloScalar::one();
        assert_eq!(skew_binomial_expand(0, &one), vec![one.clone()]);
        let z3 = root_of_unity(3, 1);
        let c = skew_binomial_expand(3, &z3);
        assert_eq!(c, vec![one.clone(), CycloScalar::zero(), CycloScalar::zero(), one.clone()]);
        let z7 = root_of_unity(7, 1);
        let c = skew_binomial_expand(2, &z7);
        assert_eq!(c[1], one.add(&z7));
    }
}
