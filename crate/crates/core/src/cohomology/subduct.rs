//! Invariant-theoretic machinery for the ambient-construction spaces:
//! Weyl groups as rational matrices, the Reynolds averaging operator, and
//! subduction (expressing an invariant polynomial in a set of fundamental
//! invariants by exact linear algebra per degree).

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{coef_int, monomials_of_degree, Coef, Mono, Poly, VarSet};
use crate::rootsys::RootSystem;

/// Dense rational matrix; `entry[r][c]` is row r, column c.
pub type Matrix = Vec<Vec<Coef>>;

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { coef_int(1) } else { coef_int(0) })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut s = Coef::zero();
                    for k in 0..n {
                        s += &a[r][k] * &b[k][c];
                    }
                    s
                })
                .collect()
        })
        .collect()
}

fn mat_key(m: &Matrix) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    for row in m {
        for e in row {
            let _ = write!(s, "{e};");
        }
    }
    s
}

/// Reflection matrix in the hyperplane orthogonal to `alpha`.
fn reflection_matrix(alpha: &[i64], n: usize) -> Matrix {
    let norm: i64 = alpha.iter().map(|a| a * a).sum();
    let mut m = identity(n);
    for (r, row) in m.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            // x_r -> x_r - 2 alpha_r (alpha . x) / |alpha|^2 picks up
            // the coefficient of x_c
            let delta = crate::polyring::coef_ratio(2 * alpha[r] * alpha[c], norm);
            *entry -= delta;
        }
    }
    m
}

/// The full Weyl group generated by the simple reflections, as matrices
/// acting on the ambient coordinates.
pub fn weyl_matrices(rs: &RootSystem) -> Vec<Matrix> {
    let n = rs.ambient_dim();
    let gens: Vec<Matrix> = rs
        .simple_roots()
        .iter()
        .map(|a| reflection_matrix(a, n))
        .collect();
    let mut seen = HashSet::new();
    let id = identity(n);
    seen.insert(mat_key(&id));
    let mut group = vec![id];
    let mut frontier = vec![0usize];
    while let Some(idx) = frontier.pop() {
        let current = group[idx].clone();
        for g in &gens {
            let next = mat_mul(g, &current);
            if seen.insert(mat_key(&next)) {
                group.push(next);
                frontier.push(group.len() - 1);
            }
        }
    }
    group
}

/// Substitute `x_i -> sum_r m[r][i] x_r`, the pullback of the linear map.
pub fn apply_matrix(p: &Poly, m: &Matrix) -> Poly {
    let vars = p.vars();
    let images: Vec<Poly> = (0..vars.len())
        .map(|i| {
            let mut img = Poly::zero(vars);
            for (r, row) in m.iter().enumerate() {
                img = img.add(&Poly::var(r, vars).scale(&row[i]));
            }
            img
        })
        .collect();
    p.substitute(&images, vars)
}

/// Group average: (1/|G|) sum over the group of the pulled-back polynomial.
pub fn reynolds(p: &Poly, group: &[Matrix]) -> Poly {
    let mut sum = Poly::zero(p.vars());
    for m in group {
        sum = sum.add(&apply_matrix(p, m));
    }
    sum.scale(&crate::polyring::coef_ratio(1, group.len() as i64))
}

/// Expresses polynomials lying in the subring generated by `gen_polys`
/// as polynomials in formal generator variables, degree by degree.
pub struct Subductor {
    gen_vars: Arc<VarSet>,
    gen_polys: Vec<Poly>,
    expansions: HashMap<Mono, Poly>,
    /// Echelonized expansions per degree: (pivot monomial, reduced ambient
    /// polynomial, expression in generator variables).
    echelon: HashMap<u64, Vec<(Mono, Poly, Poly)>>,
}

impl Subductor {
    /// `gen_polys[i]` is the ambient expansion of generator variable `i`;
    /// the generator weights must equal the ambient weighted degrees.
    pub fn new(gen_vars: Arc<VarSet>, gen_polys: Vec<Poly>) -> Self {
        for (i, g) in gen_polys.iter().enumerate() {
            debug_assert_eq!(g.homogeneous_degree(), Some(gen_vars.weight(i)));
        }
        Subductor {
            gen_vars,
            gen_polys,
            expansions: HashMap::new(),
            echelon: HashMap::new(),
        }
    }

    pub fn gen_vars(&self) -> &Arc<VarSet> {
        &self.gen_vars
    }

    fn expand(&mut self, m: &Mono) -> Poly {
        if let Some(p) = self.expansions.get(m) {
            return p.clone();
        }
        let ambient = self.gen_polys[0].vars().clone();
        let result = match m.exps().iter().position(|&e| e > 0) {
            None => Poly::one(&ambient),
            Some(i) => {
                let mut reduced = m.exps().to_vec();
                reduced[i] -= 1;
                let rest = self.expand(&Mono::new(&reduced, &self.gen_vars));
                rest.mul(&self.gen_polys[i])
            }
        };
        self.expansions.insert(m.clone(), result.clone());
        result
    }

    /// Reduce an ambient polynomial against the echelon of expanded
    /// generator monomials of its degree, returning the accumulated
    /// generator-variable expression and the residual.
    fn eliminate(&mut self, degree: u64, target: &Poly) -> (Poly, Poly) {
        if !self.echelon.contains_key(&degree) {
            let monos = monomials_of_degree(&self.gen_vars, degree);
            let mut rows: Vec<(Mono, Poly, Poly)> = Vec::new();
            for gm in monos {
                let mut amb = self.expand(&gm);
                let mut expr = Poly::monomial(gm.clone(), coef_int(1), &self.gen_vars);
                for (pivot, row_amb, row_expr) in &rows {
                    let c = amb.coefficient(pivot);
                    if !c.is_zero() {
                        amb = amb.sub(&row_amb.scale(&c));
                        expr = expr.sub(&row_expr.scale(&c));
                    }
                }
                if let Some((pm, pc)) = amb.leading() {
                    let pm = pm.clone();
                    let inv = pc.recip();
                    rows.push((pm, amb.scale(&inv), expr.scale(&inv)));
                }
            }
            self.echelon.insert(degree, rows);
        }
        let rows = self.echelon.get(&degree).unwrap();
        let mut amb = target.clone();
        let mut expr = Poly::zero(&self.gen_vars);
        for (pivot, row_amb, row_expr) in rows {
            let c = amb.coefficient(pivot);
            if !c.is_zero() {
                amb = amb.sub(&row_amb.scale(&c));
                expr = expr.add(&row_expr.scale(&c));
            }
        }
        (expr, amb)
    }

    /// Express a homogeneous ambient polynomial in the generators.
    /// Fails when the target is not in the generated subring.
    pub fn subduct(&mut self, target: &Poly) -> Result<Poly> {
        if target.is_zero() {
            return Ok(Poly::zero(&self.gen_vars));
        }
        let degree = target.homogeneous_degree().ok_or_else(|| {
            Error::NonHomogeneousInput("subduction target must be homogeneous".into())
        })?;
        let (expr, residual) = self.eliminate(degree, target);
        if residual.is_zero() {
            Ok(expr)
        } else {
            Err(Error::Internal(format!(
                "polynomial of degree {degree} is not in the invariant subring"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{elementary_symmetric, symmetric_in_squares};
    use crate::rootsys::{build_root_system, TypeLabel};

    #[test]
    fn weyl_group_orders() {
        let g2 = build_root_system(TypeLabel::G2, 2).unwrap();
        assert_eq!(weyl_matrices(&g2).len(), 12);
        let b2 = build_root_system(TypeLabel::B, 2).unwrap();
        assert_eq!(weyl_matrices(&b2).len(), 8);
        let a2 = build_root_system(TypeLabel::A, 2).unwrap();
        assert_eq!(weyl_matrices(&a2).len(), 6);
    }

    #[test]
    fn reynolds_produces_invariants() {
        let g2 = build_root_system(TypeLabel::G2, 2).unwrap();
        let group = weyl_matrices(&g2);
        let vs = VarSet::uniform("x", 3, 2);
        let x1 = Poly::var(0, &vs);
        let inv = reynolds(&x1.pow(2), &group);
        assert!(!inv.is_zero());
        for m in &group {
            assert_eq!(apply_matrix(&inv, m), inv);
        }
    }

    #[test]
    fn subduction_of_symmetric_polynomials() {
        // power sum x^4+y^4+z^4 in terms of the elementary symmetrics
        let vs = VarSet::uniform("x", 3, 2);
        let gens: Vec<Poly> = (1..=3)
            .map(|j| elementary_symmetric(j, &vs).unwrap())
            .collect();
        let gv = VarSet::new(
            vec!["s1".into(), "s2".into(), "s3".into()],
            vec![2, 4, 6],
        );
        let mut sub = Subductor::new(gv.clone(), gens);
        let p4: Poly = (0..3).fold(Poly::zero(&vs), |acc, i| acc.add(&Poly::var(i, &vs).pow(4)));
        let expr = sub.subduct(&p4).unwrap();
        // p4 = s1^4 - 4 s1^2 s2 + 2 s2^2 + 4 s1 s3
        let s1 = Poly::var(0, &gv);
        let s2 = Poly::var(1, &gv);
        let s3 = Poly::var(2, &gv);
        let expect = s1
            .pow(4)
            .sub(&s1.pow(2).mul(&s2).scale(&coef_int(4)))
            .add(&s2.pow(2).scale(&coef_int(2)))
            .add(&s1.mul(&s3).scale(&coef_int(4)));
        assert_eq!(expr, expect);
        // sigma_j of squares subducts as well
        let l2 = symmetric_in_squares(2, &vs).unwrap();
        assert!(sub.subduct(&l2).is_ok());
        // a non-symmetric polynomial does not
        let bad = Poly::var(0, &vs).pow(2);
        assert!(sub.subduct(&bad).is_err());
    }
}
