//! The Hirzebruch L-sequence: the multiplicative sequence of the power
//! series sqrt(z)/tanh(sqrt(z)), generated algorithmically.
//!
//! `l_polynomials(k)` returns `L_1..L_k` as polynomials in abstract
//! Pontrjagin variables `p1..pk` (variable `pi` carrying weight `i`), via
//! exact Bernoulli numbers, a formal logarithm, and Newton's identities.
//! Nothing is hardcoded beyond the defining series.

use std::sync::Arc;

use num_traits::Zero;

use crate::polyring::{coef_int, coef_ratio, Coef, Poly, VarSet};

/// Bernoulli numbers B_0..B_n (B_1 = -1/2 convention) by the defining
/// recurrence sum_j C(m+1, j) B_j = 0.
pub fn bernoulli_numbers(n: usize) -> Vec<Coef> {
    let mut b: Vec<Coef> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(coef_int(1));
            continue;
        }
        // C(m+1, j) as exact rationals
        let mut acc = Coef::zero();
        let mut binom = coef_int(1); // C(m+1, 0)
        for (j, bj) in b.iter().enumerate().take(m) {
            acc += &binom * bj;
            binom *= coef_ratio(m as i64 + 1 - j as i64, j as i64 + 1);
        }
        // C(m+1, m) = m+1
        b.push(-acc / coef_int(m as i64 + 1));
    }
    b
}

/// Coefficients a_0..a_k of sqrt(z)/tanh(sqrt(z)) = sum a_k z^k, with
/// a_k = 2^(2k) B_{2k} / (2k)!.
pub fn characteristic_series(k: usize) -> Vec<Coef> {
    let b = bernoulli_numbers(2 * k);
    let mut out = Vec::with_capacity(k + 1);
    let mut pow4 = coef_int(1);
    let mut fact = coef_int(1);
    for s in 0..=k {
        if s > 0 {
            pow4 *= coef_int(4);
            fact = fact * coef_int((2 * s - 1) as i64) * coef_int((2 * s) as i64);
        }
        out.push(&pow4 * &b[2 * s] / &fact);
    }
    out
}

/// Formal log of a series with constant term 1.
fn series_log(a: &[Coef]) -> Vec<Coef> {
    let n = a.len() - 1;
    let mut l: Vec<Coef> = vec![Coef::zero(); n + 1];
    for m in 1..=n {
        let mut acc = a[m].clone();
        for k in 1..m {
            acc -= coef_ratio(k as i64, m as i64) * &l[k] * &a[m - k];
        }
        l[m] = acc;
    }
    l
}

/// Power sums of the formal Chern-root squares in terms of the elementary
/// symmetric variables p1..pk, by Newton's identities.
fn power_sums(vars: &Arc<VarSet>, upto: usize) -> Vec<Poly> {
    let n = vars.len();
    let e = |i: usize| -> Option<Poly> {
        if i >= 1 && i <= n {
            Some(Poly::var(i - 1, vars))
        } else {
            None
        }
    };
    let mut p: Vec<Poly> = vec![Poly::constant(coef_int(n as i64), vars)];
    for k in 1..=upto {
        let mut acc = Poly::zero(vars);
        if let Some(ek) = e(k) {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&ek.scale(&coef_int(sign * k as i64)));
        }
        for i in 1..k {
            if let Some(ei) = e(i) {
                let term = ei.mul(&p[k - i]);
                acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
            }
        }
        p.push(acc);
    }
    p
}

/// `L_1..L_kmax` in the Pontrjagin variables `p1..pkmax`.
pub fn l_polynomials(kmax: usize) -> Vec<Poly> {
    let vars = VarSet::new(
        (1..=kmax).map(|i| format!("p{i}")).collect(),
        (1..=kmax as u64).collect(),
    );
    let ell = series_log(&characteristic_series(kmax));
    let ps = power_sums(&vars, kmax);
    // exp of sum_s ell_s P_s, truncated at weight kmax
    let mut w = Poly::zero(&vars);
    for s in 1..=kmax {
        w = w.add(&ps[s].scale(&ell[s]));
    }
    let mut acc = Poly::one(&vars);
    let mut term = Poly::one(&vars);
    let mut k: i64 = 1;
    loop {
        term = term.mul(&w).truncate_above(kmax as u64).scale(&coef_ratio(1, k));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
        k += 1;
    }
    (1..=kmax as u64).map(|d| acc.component(d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[0], coef_int(1));
        assert_eq!(b[1], coef_ratio(-1, 2));
        assert_eq!(b[2], coef_ratio(1, 6));
        assert_eq!(b[4], coef_ratio(-1, 30));
        assert_eq!(b[6], coef_ratio(1, 42));
        assert_eq!(b[8], coef_ratio(-1, 30));
        assert!(b[3].is_zero() && b[5].is_zero() && b[7].is_zero());
    }

    #[test]
    fn series_coefficients() {
        let a = characteristic_series(4);
        assert_eq!(a[0], coef_int(1));
        assert_eq!(a[1], coef_ratio(1, 3));
        assert_eq!(a[2], coef_ratio(-1, 45));
        assert_eq!(a[3], coef_ratio(2, 945));
        assert_eq!(a[4], coef_ratio(-1, 4725));
    }

    #[test]
    fn first_l_polynomials() {
        let ls = l_polynomials(3);
        let vars = ls[0].vars().clone();
        let p1 = Poly::var(0, &vars);
        let p2 = Poly::var(1, &vars);
        let p3 = Poly::var(2, &vars);

        // L1 = p1/3
        assert_eq!(ls[0], p1.scale(&coef_ratio(1, 3)));
        // L2 = (7 p2 - p1^2)/45
        let l2 = p2.scale(&coef_int(7)).sub(&p1.pow(2)).scale(&coef_ratio(1, 45));
        assert_eq!(ls[1], l2);
        // L3 = (62 p3 - 13 p1 p2 + 2 p1^3)/945
        let l3 = p3
            .scale(&coef_int(62))
            .sub(&p1.mul(&p2).scale(&coef_int(13)))
            .add(&p1.pow(3).scale(&coef_int(2)))
            .scale(&coef_ratio(1, 945));
        assert_eq!(ls[2], l3);
    }
}
