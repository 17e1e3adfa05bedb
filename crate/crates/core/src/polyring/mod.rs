//! Exact-rational graded multivariate polynomial arithmetic.
//!
//! Polynomials are sparse maps from exponent vectors to `BigRational`
//! coefficients over a shared [`VarSet`]. Every variable carries a
//! topological degree weight (2 for a degree-2 cohomology generator,
//! 4 for a symplectic class, and so on); the grading of a monomial is
//! the weight-dot-exponent sum. Monomials are ordered by graded
//! reverse-lexicographic order, which is also the order used by the
//! Groebner-basis layer in [`groebner`].

pub mod groebner;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use groebner::{buchberger, normal_form, quotient_monomial_basis, GroebnerBasis};

/// Exact rational coefficient type used throughout the crate.
pub type Coef = BigRational;

/// Build a `Coef` from an integer.
pub fn coef_int(n: i64) -> Coef {
    BigRational::from_integer(BigInt::from(n))
}

/// Build a `Coef` from a numerator/denominator pair.
pub fn coef_ratio(num: i64, den: i64) -> Coef {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A named, weighted variable set shared (via `Arc`) by the polynomials
/// of one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
    weights: Vec<u64>,
}

impl VarSet {
    pub fn new(names: Vec<String>, weights: Vec<u64>) -> Arc<Self> {
        assert_eq!(names.len(), weights.len());
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        Arc::new(VarSet { names, weights })
    }

    /// `n` variables named `prefix1..prefixn`, all of the same weight.
    pub fn uniform(prefix: &str, n: usize, weight: u64) -> Arc<Self> {
        Self::new(
            (1..=n).map(|i| format!("{prefix}{i}")).collect(),
            vec![weight; n],
        )
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }
}

type Exps = SmallVec<[u16; 8]>;

/// A monomial: exponent vector plus cached weighted degree.
///
/// `Ord` is graded reverse-lexicographic: compare weighted degrees first;
/// on a tie the monomial whose exponent vector has the *smaller* entry at
/// the last position where they differ is the larger monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono {
    degree: u64,
    exps: Exps,
}

impl Mono {
    pub fn new(exps: &[u16], vars: &VarSet) -> Self {
        assert_eq!(exps.len(), vars.len());
        let degree = exps
            .iter()
            .zip(vars.weights())
            .map(|(&e, &w)| e as u64 * w)
            .sum();
        Mono {
            degree,
            exps: Exps::from_slice(exps),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Mono {
            degree: 0,
            exps: Exps::from_elem(0, vars.len()),
        }
    }

    pub fn var(i: usize, vars: &VarSet) -> Self {
        let mut exps = Exps::from_elem(0, vars.len());
        exps[i] = 1;
        Mono {
            degree: vars.weight(i),
            exps,
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Mono {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.degree <= other.degree
            && self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a <= b)
    }

    /// `other / self`; caller must have checked divisibility.
    pub fn div_into(&self, other: &Mono) -> Mono {
        let exps = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(&b, &a)| b - a)
            .collect();
        Mono {
            degree: other.degree - self.degree,
            exps,
        }
    }

    pub fn lcm(&self, other: &Mono, vars: &VarSet) -> Mono {
        let exps: Exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.max(b))
            .collect();
        let degree = exps
            .iter()
            .zip(vars.weights())
            .map(|(&e, &w)| e as u64 * w)
            .sum();
        Mono { degree, exps }
    }

    pub fn coprime(&self, other: &Mono) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {
                for (a, b) in self.exps.iter().zip(other.exps.iter()).rev() {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        // smaller exponent late in the vector = larger monomial
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            o => o,
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial with exact rational coefficients.
///
/// Invariant: no stored zero coefficients. Two polynomials can be combined
/// only when they share structurally equal variable sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Mono, Coef>,
}

impl Poly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        Poly {
            vars: Arc::clone(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(coef_int(1), vars)
    }

    pub fn constant(c: Coef, vars: &Arc<VarSet>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(vars), c);
        }
        Poly {
            vars: Arc::clone(vars),
            terms,
        }
    }

    pub fn var(i: usize, vars: &Arc<VarSet>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(i, vars), coef_int(1));
        Poly {
            vars: Arc::clone(vars),
            terms,
        }
    }

    pub fn from_terms(terms: Vec<(Mono, Coef)>, vars: &Arc<VarSet>) -> Self {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn monomial(m: Mono, c: Coef, vars: &Arc<VarSet>) -> Self {
        let mut p = Poly::zero(vars);
        p.add_term(m, c);
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Coef)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Mono) -> Coef {
        self.terms.get(m).cloned().unwrap_or_else(Coef::zero)
    }

    /// Leading (largest) term in grevlex order.
    pub fn leading(&self) -> Option<(&Mono, &Coef)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Mono, c: Coef) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Poly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(format!(
                "{:?} vs {:?}",
                self.vars.names, other.vars.names
            )))
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_vars(other).expect("variable set mismatch in add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            vars: Arc::clone(&self.vars),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coef) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: Arc::clone(&self.vars),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Mono, c: &Coef) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_vars(other).expect("variable set mismatch in mul");
        let mut out = Poly::zero(&self.vars);
        // iterate over the smaller operand
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m, c) in &small.terms {
            for (lm, lc) in &large.terms {
                out.add_term(m.mul(lm), c * lc);
            }
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.vars);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Weighted degree of the polynomial, `None` for 0.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Mono::degree).max()
    }

    /// `Some(d)` when all terms share weighted degree `d`
    /// (the zero polynomial is homogeneous of any degree).
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(0),
            Some(m) => m.degree(),
        };
        if it.all(|m| m.degree() == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// The degree-`d` homogeneous component.
    pub fn component(&self, d: u64) -> Poly {
        Poly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop every term of weighted degree above `d`.
    pub fn truncate_above(&self, d: u64) -> Poly {
        Poly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitute `images[i]` for variable `i`. The images live in a
    /// possibly different ring.
    pub fn substitute(&self, images: &[Poly], target: &Arc<VarSet>) -> Poly {
        assert_eq!(images.len(), self.vars.len());
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone(), target);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e as u32));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Divide every coefficient so that the leading coefficient becomes 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coef = !mag.is_one() || m.is_one();
            if show_coef {
                write!(f, "{mag}")?;
            }
            let mut shown = false;
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if shown || show_coef {
                    write!(f, "*")?;
                }
                shown = true;
                write!(f, "{}", self.vars.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// All monomials of the given weighted degree, in ascending grevlex order.
pub fn monomials_of_degree(vars: &Arc<VarSet>, degree: u64) -> Vec<Mono> {
    fn rec(i: usize, remaining: u64, exps: &mut Vec<u16>, vars: &VarSet, out: &mut Vec<Mono>) {
        if i == vars.len() {
            if remaining == 0 {
                out.push(Mono::new(exps, vars));
            }
            return;
        }
        let w = vars.weight(i);
        for e in 0..=(remaining / w).min(u16::MAX as u64) {
            exps[i] = e as u16;
            rec(i + 1, remaining - e * w, exps, vars, out);
        }
        exps[i] = 0;
    }
    let mut out = Vec::new();
    let mut exps = vec![0u16; vars.len()];
    rec(0, degree, &mut exps, vars, &mut out);
    out.sort();
    out
}

/// The `j`-th elementary symmetric polynomial in all variables of `vars`.
pub fn elementary_symmetric(j: usize, vars: &Arc<VarSet>) -> Result<Poly> {
    let n = vars.len();
    if j > n {
        return Err(Error::IndexOutOfRange { index: j, nvars: n });
    }
    let mut out = Poly::zero(vars);
    let mut subset: Vec<usize> = (0..j).collect();
    loop {
        let mut exps = vec![0u16; n];
        for &i in &subset {
            exps[i] = 1;
        }
        out.add_term(Mono::new(&exps, vars), coef_int(1));
        // next j-subset of 0..n in lexicographic order
        if j == 0 {
            break;
        }
        let mut k = j;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if subset[k] != k + n - j {
                break;
            }
            if k == 0 {
                return Ok(out);
            }
        }
        subset[k] += 1;
        for t in k + 1..j {
            subset[t] = subset[t - 1] + 1;
        }
    }
    Ok(out)
}

/// `sigma_j(x_1^2, ..., x_n^2)`: the elementary symmetric polynomial
/// evaluated at the squared variables.
pub fn symmetric_in_squares(j: usize, vars: &Arc<VarSet>) -> Result<Poly> {
    let e = elementary_symmetric(j, vars)?;
    let squared = e
        .terms
        .iter()
        .map(|(m, c)| {
            let exps: Vec<u16> = m.exps().iter().map(|&x| x * 2).collect();
            (Mono::new(&exps, vars), c.clone())
        })
        .collect();
    Ok(Poly {
        vars: Arc::clone(vars),
        terms: squared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> Arc<VarSet> {
        VarSet::uniform("x", 3, 2)
    }

    #[test]
    fn elementary_symmetric_basics() {
        let vs = xyz();
        let e0 = elementary_symmetric(0, &vs).unwrap();
        assert_eq!(e0, Poly::one(&vs));
        let e1 = elementary_symmetric(1, &vs).unwrap();
        let expect = Poly::var(0, &vs).add(&Poly::var(1, &vs)).add(&Poly::var(2, &vs));
        assert_eq!(e1, expect);
        let e2 = elementary_symmetric(2, &vs).unwrap();
        assert_eq!(e2.num_terms(), 3);
        assert_eq!(e2.homogeneous_degree(), Some(4));
        assert!(elementary_symmetric(4, &vs).is_err());
    }

    #[test]
    fn newton_sigma1_squared_minus_2_sigma2() {
        // sigma1^2 - 2 sigma2 = sum of squares = lambda1, for 2..=8 variables
        for n in 2..=8usize {
            let vs = VarSet::uniform("x", n, 2);
            let s1 = elementary_symmetric(1, &vs).unwrap();
            let s2 = elementary_symmetric(2, &vs).unwrap();
            let lhs = s1.mul(&s1).sub(&s2.scale(&coef_int(2)));
            let rhs = symmetric_in_squares(1, &vs).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn symmetric_in_squares_examples() {
        let vs = VarSet::uniform("x", 2, 2);
        let l1 = symmetric_in_squares(1, &vs).unwrap();
        let x = Poly::var(0, &vs);
        let y = Poly::var(1, &vs);
        assert_eq!(l1, x.mul(&x).add(&y.mul(&y)));
        let l2 = symmetric_in_squares(2, &vs).unwrap();
        assert_eq!(l2, x.mul(&x).mul(&y).mul(&y));
        // grading doubles per factor
        assert_eq!(l1.homogeneous_degree(), Some(4));
        assert_eq!(l2.homogeneous_degree(), Some(8));
    }

    #[test]
    fn grevlex_order() {
        // weights 1 so degrees are plain totals
        let vs = VarSet::uniform("x", 3, 1);
        let m = |e: &[u16]| Mono::new(e, &vs);
        // degree dominates
        assert!(m(&[2, 0, 0]) > m(&[1, 0, 0]));
        // same degree: smaller exponent in the last variable wins
        assert!(m(&[2, 0, 0]) > m(&[1, 1, 0]));
        assert!(m(&[1, 1, 0]) > m(&[1, 0, 1]));
        assert!(m(&[0, 2, 0]) > m(&[1, 0, 1]));
    }

    fn arb_poly(vs: Arc<VarSet>) -> impl Strategy<Value = Poly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(0u16..3, vs.len()),
                -4i64..=4,
            ),
            0..5,
        )
        .prop_map(move |terms| {
            let mut p = Poly::zero(&vs);
            for (exps, c) in terms {
                p.add_term(Mono::new(&exps, &vs), coef_int(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in (arb_poly(xyz()), arb_poly(xyz()), arb_poly(xyz()))) {
            // commutativity and associativity of both operations, distributivity
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            // units and negation
            prop_assert_eq!(a.mul(&Poly::one(&xyz())), a.clone());
            prop_assert!(a.add(&a.neg()).is_zero());
        }

        #[test]
        fn grading_respected((a, b) in (arb_poly(xyz()), arb_poly(xyz()))) {
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                let prod = a.mul(&b);
                if !prod.is_zero() {
                    prop_assert!(prod.degree().unwrap() <= da + db);
                }
                if a.is_homogeneous() && b.is_homogeneous() && !prod.is_zero() {
                    prop_assert_eq!(prod.homogeneous_degree(), Some(da + db));
                }
            }
        }
    }
}
