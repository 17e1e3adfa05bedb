//! Rational cohomology of equal-rank compact symmetric spaces as explicit
//! quotient rings, with Hirsch Poincare polynomials, Euler characteristics
//! and calibrated integration against the fundamental class.
//!
//! Presentations by family:
//! - `DIII(p)`: generators the elementary symmetric classes `s1..sp`
//!   (degrees 2..2p), relations the squared-alphabet symmetric functions
//!   `lambda_1..lambda_{p-1}` together with `s_p`.
//! - `CI(p)`: the same generators with relations `lambda_1..lambda_p`.
//! - `AIII(p,q)`: Chern generators `c1..cp`, relations the complete
//!   homogeneous classes `h_{q+1}..h_{q+p}` of the inverse series.
//! - `CII(p,q)`: the same shape with degree-4 symplectic generators.
//! - `BDI` (equal rank), `G2/SO(4)`, `F4/Spin(9)`: the generic
//!   construction — fundamental invariants of the isotropy Weyl group as
//!   generators, subducted full-group invariants as relations.
//!
//! The fundamental-class calibration fixes the orientation by requiring
//! the integral of the Euler class (the product of the positive
//! complementary roots) to equal the Euler characteristic.

pub mod subduct;

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{
    coef_int, coef_ratio, elementary_symmetric, normal_form, quotient_monomial_basis,
    symmetric_in_squares, Coef, GroebnerBasis, Mono, Poly, VarSet,
};
use crate::polyring::groebner::buchberger;
use crate::rootsys::TypeLabel;
use crate::spaces::{self, DualPair, KPiece, SpaceId};
use subduct::{reynolds, weyl_matrices, Subductor};

/// How the complementary roots of a presentation are encoded; drives the
/// characteristic-class layer.
#[derive(Debug, Clone)]
pub enum ClassData {
    /// Roots `x_i + x_j` over the sigma-alphabet, `i < j`, optionally with
    /// the diagonal `2x_i` included (CI).
    SigmaPairs { p: usize, include_diagonal: bool },
    /// Roots `x_i - y_j` with the y-alphabet eliminated by the inverse
    /// series (AIII).
    TwoAlphabet { p: usize, q: usize },
    /// Roots `x_i +- y_j` in squared alphabets (CII); only even power
    /// sums exist in the ring.
    TwoAlphabetSquares { p: usize, q: usize },
    /// Explicit ambient coordinates with subduction into the generators.
    Ambient(AmbientData),
}

/// Ambient-coordinate data for the generic construction.
#[derive(Debug, Clone)]
pub struct AmbientData {
    pub ambient_vars: Arc<VarSet>,
    pub gen_vars: Arc<VarSet>,
    /// Ambient expansion of each ring generator.
    pub gen_polys: Vec<Poly>,
    /// Positive complementary roots as ambient linear forms.
    pub comp_roots: Vec<Poly>,
}

impl AmbientData {
    pub fn subductor(&self) -> Subductor {
        Subductor::new(self.gen_vars.clone(), self.gen_polys.clone())
    }
}

/// An explicit presentation of `H*(U/K; Q)` as a graded quotient ring.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub space: SpaceId,
    vars: Arc<VarSet>,
    relations: Vec<Poly>,
    gb: GroebnerBasis,
    top_degree: u64,
    poincare: Vec<i64>,
    top_monomial: Mono,
    calibration: Option<Coef>,
    hermitian: bool,
    class_data: ClassData,
}

impl Presentation {
    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn top_degree(&self) -> u64 {
        self.top_degree
    }

    /// Coefficients of the Poincare polynomial, indexed by topological
    /// degree, computed from the Groebner quotient dimensions.
    pub fn poincare(&self) -> &[i64] {
        &self.poincare
    }

    pub fn top_monomial(&self) -> &Mono {
        &self.top_monomial
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn class_data(&self) -> &ClassData {
        &self.class_data
    }

    pub fn calibration(&self) -> Option<&Coef> {
        self.calibration.as_ref()
    }

    /// Normal form in the quotient ring.
    pub fn nf(&self, p: &Poly) -> Result<Poly> {
        normal_form(p, &self.gb)
    }

    /// Fix the fundamental class: writes the reduced Euler class as
    /// `mu * m0` for the top basis monomial `m0` and sets the calibration
    /// so that the Euler class integrates to the Euler characteristic.
    pub fn calibrate(mut self, euler_class: &Poly) -> Result<Self> {
        let e = self.nf(euler_class)?;
        if e.is_zero() {
            return Err(Error::DegenerateEulerClass(self.space.to_string()));
        }
        if e.homogeneous_degree() != Some(self.top_degree) {
            return Err(Error::DegenerateEulerClass(format!(
                "{}: Euler class of degree {:?}, expected {}",
                self.space,
                e.homogeneous_degree(),
                self.top_degree
            )));
        }
        let mu = e.coefficient(&self.top_monomial);
        if mu.is_zero() || e.num_terms() != 1 {
            return Err(Error::Internal(format!(
                "{}: reduced Euler class is not a multiple of the top basis monomial",
                self.space
            )));
        }
        let chi = euler_characteristic(&self.space)? as i64;
        self.calibration = Some(coef_int(chi) / mu);
        Ok(self)
    }

    /// Integrate a class against the calibrated fundamental class:
    /// the coefficient of the top basis monomial times the calibration.
    /// Classes of degree below the top integrate to zero; components
    /// above the top are an error.
    pub fn integrate(&self, omega: &Poly) -> Result<Coef> {
        let c = self
            .calibration
            .as_ref()
            .ok_or_else(|| Error::Internal("presentation is not calibrated".into()))?;
        if let Some(d) = omega.degree() {
            if d > self.top_degree {
                return Err(Error::DegreeAboveTop {
                    degree: d,
                    top: self.top_degree,
                });
            }
        }
        let nf = self.nf(&omega.component(self.top_degree))?;
        Ok(nf.coefficient(&self.top_monomial) * c)
    }

    /// exp of a constant-term-free element of the quotient ring; the sum
    /// terminates because everything above the top degree reduces to zero.
    pub fn exp_nf(&self, w: &Poly) -> Result<Poly> {
        let w = self.nf(w)?;
        debug_assert!(w.coefficient(&Mono::one(&self.vars)).is_zero());
        let mut acc = Poly::one(&self.vars);
        let mut term = Poly::one(&self.vars);
        let mut k: i64 = 1;
        loop {
            term = self.nf(&term.mul(&w))?.scale(&coef_ratio(1, k));
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
            k += 1;
        }
        Ok(acc)
    }
}

// ---------------------------------------------------------------------
// family presentations
// ---------------------------------------------------------------------

/// `h_m` of the inverse series in the generators `vars` (treated as the
/// elementary symmetric classes), by the Jacobi-Trudi recurrence.
fn complete_homogeneous(m: usize, vars: &Arc<VarSet>) -> Poly {
    let p = vars.len();
    let mut h: Vec<Poly> = vec![Poly::one(vars)];
    for k in 1..=m {
        let mut acc = Poly::zero(vars);
        for i in 1..=k.min(p) {
            let term = h[k - i].mul(&Poly::var(i - 1, vars));
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        h.push(acc);
    }
    h.pop().unwrap()
}

/// `lambda_j = sigma_j(x^2)` written in the elementary symmetric classes:
/// `(-1)^j sum_k (-1)^k sigma_k sigma_{2j-k}`.
fn lambda_in_elementary(j: usize, vars: &Arc<VarSet>) -> Poly {
    let p = vars.len();
    let sigma = |k: usize| -> Option<Poly> {
        if k == 0 {
            Some(Poly::one(vars))
        } else if k <= p {
            Some(Poly::var(k - 1, vars))
        } else {
            None
        }
    };
    let mut acc = Poly::zero(vars);
    for k in 0..=2 * j {
        let (Some(a), Some(b)) = (sigma(k), sigma(2 * j - k)) else {
            continue;
        };
        let term = a.mul(&b);
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    if j % 2 == 1 {
        acc = acc.neg();
    }
    acc
}

fn finish_presentation(
    space: SpaceId,
    vars: Arc<VarSet>,
    relations: Vec<Poly>,
    hermitian: bool,
    class_data: ClassData,
) -> Result<Presentation> {
    let expected_top = spaces::dimension(&space)? as u64;
    let gb = buchberger(&relations)?;
    let dims = gb.quotient_dimensions().ok_or_else(|| {
        Error::Internal(format!("{space}: quotient ring is not finite-dimensional"))
    })?;
    let top_degree = (dims.len() - 1) as u64;
    if top_degree != expected_top {
        return Err(Error::Internal(format!(
            "{space}: top degree {top_degree} does not match dimension {expected_top}"
        )));
    }
    if *dims.last().unwrap() != 1 {
        return Err(Error::Internal(format!(
            "{space}: top cohomology has dimension {}",
            dims.last().unwrap()
        )));
    }
    let top_monomial = quotient_monomial_basis(&gb, top_degree)
        .pop()
        .ok_or_else(|| Error::Internal(format!("{space}: empty top basis")))?;
    let poincare = dims.iter().map(|&d| d as i64).collect();
    Ok(Presentation {
        space,
        vars,
        relations,
        gb,
        top_degree,
        poincare,
        top_monomial,
        calibration: None,
        hermitian,
        class_data,
    })
}

fn sigma_presentation(space: SpaceId, p: usize, ci: bool) -> Result<Presentation> {
    let vars = VarSet::new(
        (1..=p).map(|j| format!("s{j}")).collect(),
        (1..=p as u64).map(|j| 2 * j).collect(),
    );
    let mut relations: Vec<Poly> = Vec::new();
    let last = if ci { p } else { p - 1 };
    for j in 1..=last {
        relations.push(lambda_in_elementary(j, &vars));
    }
    if !ci {
        relations.push(Poly::var(p - 1, &vars));
    }
    finish_presentation(
        space,
        vars,
        relations,
        true,
        ClassData::SigmaPairs {
            p,
            include_diagonal: ci,
        },
    )
}

fn grassmann_presentation(space: SpaceId, p: usize, q: usize, weight: u64) -> Result<Presentation> {
    let prefix = if weight == 2 { "c" } else { "f" };
    let vars = VarSet::new(
        (1..=p).map(|j| format!("{prefix}{j}")).collect(),
        (1..=p as u64).map(|j| weight * j).collect(),
    );
    let relations: Vec<Poly> = (q + 1..=q + p)
        .map(|m| complete_homogeneous(m, &vars))
        .collect();
    let class_data = if weight == 2 {
        ClassData::TwoAlphabet { p, q }
    } else {
        ClassData::TwoAlphabetSquares { p, q }
    };
    finish_presentation(space, vars, relations, weight == 2, class_data)
}

/// Ambient fundamental invariants of one K-piece, as (name, poly) pairs.
fn k_piece_generators(piece: &KPiece, f: usize, ambient: &Arc<VarSet>) -> Vec<(String, Poly)> {
    let coord_poly = |c: usize| Poly::var(c, ambient);
    let direction_poly = |v: &[i64]| {
        let mut p = Poly::zero(ambient);
        for (i, &a) in v.iter().enumerate() {
            if a != 0 {
                p = p.add(&coord_poly(i).scale(&coef_int(a)));
            }
        }
        p
    };
    // elementary symmetric in the squares of a coordinate subset
    let lambda = |j: usize, coords: &[usize]| {
        let picked = VarSet::uniform("z", coords.len(), 2);
        let e = symmetric_in_squares(j, &picked).unwrap();
        let images: Vec<Poly> = coords.iter().map(|&c| coord_poly(c)).collect();
        e.substitute(&images, ambient)
    };
    match piece {
        KPiece::TorusCoord(c) => vec![(format!("t{f}"), coord_poly(*c))],
        KPiece::TorusDirection(v) => vec![(format!("t{f}"), direction_poly(v))],
        KPiece::A1Direction(v) => {
            let l = direction_poly(v);
            vec![(format!("w{f}"), l.mul(&l))]
        }
        KPiece::TypeA(coords) => (1..=coords.len())
            .map(|j| {
                let picked = VarSet::uniform("z", coords.len(), 2);
                let e = elementary_symmetric(j, &picked).unwrap();
                let images: Vec<Poly> = coords.iter().map(|&c| coord_poly(c)).collect();
                (format!("s{f}_{j}"), e.substitute(&images, ambient))
            })
            .collect(),
        KPiece::TypeBC(coords) => (1..=coords.len())
            .map(|j| (format!("l{f}_{j}"), lambda(j, coords)))
            .collect(),
        KPiece::TypeD(coords) => {
            let r = coords.len();
            let mut gens: Vec<(String, Poly)> = (1..r)
                .map(|j| (format!("l{f}_{j}"), lambda(j, coords)))
                .collect();
            let prod = coords
                .iter()
                .fold(Poly::one(ambient), |acc, &c| acc.mul(&coord_poly(c)));
            gens.push((format!("e{f}"), prod));
            gens
        }
    }
}

/// Full-group fundamental invariants of U in ambient coordinates.
fn u_invariants(dual: &DualPair, ambient: &Arc<VarSet>) -> Result<Vec<Poly>> {
    let rs = &dual.u_root_system;
    let all: Vec<usize> = (0..rs.ambient_dim()).collect();
    let lambda_all = |j: usize| symmetric_in_squares(j, ambient).unwrap();
    match rs.label() {
        TypeLabel::B | TypeLabel::C => Ok((1..=rs.rank()).map(lambda_all).collect()),
        TypeLabel::D => {
            let mut inv: Vec<Poly> = (1..rs.rank()).map(lambda_all).collect();
            let prod = all
                .iter()
                .fold(Poly::one(ambient), |acc, &c| acc.mul(&Poly::var(c, ambient)));
            inv.push(prod);
            Ok(inv)
        }
        TypeLabel::G2 | TypeLabel::F4 => {
            let group = weyl_matrices(rs);
            let sum_sq = (0..rs.ambient_dim()).fold(Poly::zero(ambient), |acc, i| {
                acc.add(&Poly::var(i, ambient).pow(2))
            });
            let mut inv = Vec::new();
            if rs.label() == TypeLabel::G2 {
                // the fixed line contributes the degree-1 invariant
                let sigma1 = (0..3).fold(Poly::zero(ambient), |acc, i| {
                    acc.add(&Poly::var(i, ambient))
                });
                inv.push(sigma1);
                inv.push(sum_sq);
                inv.push(reynolds(&Poly::var(0, ambient).pow(6), &group));
            } else {
                inv.push(sum_sq);
                for d in [6u32, 8, 12] {
                    inv.push(reynolds(&Poly::var(0, ambient).pow(d), &group));
                }
            }
            Ok(inv)
        }
        other => Err(Error::Internal(format!(
            "no generic invariants implemented for type {}",
            other.as_str()
        ))),
    }
}

fn ambient_presentation(space: SpaceId, dual: &DualPair) -> Result<Presentation> {
    let n = dual.u_root_system.ambient_dim();
    let ambient = VarSet::uniform("x", n, 2);

    let mut names = Vec::new();
    let mut gen_polys = Vec::new();
    for (f, piece) in dual.k_pieces.iter().enumerate() {
        for (name, poly) in k_piece_generators(piece, f + 1, &ambient) {
            names.push(name);
            gen_polys.push(poly);
        }
    }
    if names.len() != n {
        return Err(Error::Internal(format!(
            "{space}: {} isotropy invariants for {n} coordinates",
            names.len()
        )));
    }
    let weights: Vec<u64> = gen_polys
        .iter()
        .map(|g| g.homogeneous_degree().expect("homogeneous generator"))
        .collect();
    let gen_vars = VarSet::new(names, weights);

    let mut sub = Subductor::new(gen_vars.clone(), gen_polys.clone());
    let relations: Vec<Poly> = u_invariants(dual, &ambient)?
        .iter()
        .map(|inv| sub.subduct(inv))
        .collect::<Result<_>>()?;

    // For a Hermitian space the complementary roots must be taken as the
    // weights of the holomorphic tangent space: orient each root so its
    // pairing with the torus circle is positive. Sign-insensitive
    // computations (Pontrjagin, calibrated Euler) are unaffected.
    let torus_coord = dual.k_pieces.iter().find_map(|p| match p {
        KPiece::TorusCoord(c) => Some(*c),
        _ => None,
    });
    let comp_roots: Vec<Poly> = dual
        .complementary_roots()
        .iter()
        .map(|r| {
            let mut r = r.clone();
            if dual.hermitian {
                let c = torus_coord.expect("Hermitian ambient space has a torus piece");
                if r[c] < 0 {
                    for a in r.iter_mut() {
                        *a = -*a;
                    }
                }
            }
            let mut f = Poly::zero(&ambient);
            for (i, &a) in r.iter().enumerate() {
                if a != 0 {
                    f = f.add(&Poly::var(i, &ambient).scale(&coef_int(a)));
                }
            }
            f
        })
        .collect();

    finish_presentation(
        space,
        gen_vars.clone(),
        relations,
        dual.hermitian,
        ClassData::Ambient(AmbientData {
            ambient_vars: ambient,
            gen_vars,
            gen_polys,
            comp_roots,
        }),
    )
}

/// Build the cohomology presentation of an equal-rank supported space.
pub fn presentation(space: &SpaceId) -> Result<Presentation> {
    let dual = spaces::validate(space)?;
    if !dual.equal_rank {
        return Err(Error::UnsupportedSpace(format!(
            "{space}: rank(K) < rank(U), no Borel presentation"
        )));
    }
    match *space {
        SpaceId::DIII(n) => sigma_presentation(*space, n as usize, false),
        SpaceId::CI(n) => sigma_presentation(*space, n as usize, true),
        SpaceId::AIII(p, q) => grassmann_presentation(*space, p as usize, q as usize, 2),
        SpaceId::CII(p, q) => grassmann_presentation(*space, p as usize, q as usize, 4),
        SpaceId::BDI(_, _) | SpaceId::G2SO4 | SpaceId::FII => ambient_presentation(*space, &dual),
        SpaceId::EIII | SpaceId::EVII => Err(Error::UnsupportedSpace(format!(
            "{space}: exceptional Hermitian presentation not built"
        ))),
        _ => Err(Error::UnsupportedSpace(space.to_string())),
    }
}

// ---------------------------------------------------------------------
// Hirsch formula and Euler characteristics
// ---------------------------------------------------------------------

fn poly1_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly1_div_exact(num: &[i64], den: &[i64]) -> Result<Vec<i64>> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    if rem.len() < den.len() {
        return Err(Error::Internal("inexact Hirsch division".into()));
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        if c % lead != 0 {
            return Err(Error::Internal("inexact Hirsch division".into()));
        }
        let q = c / lead;
        quot[k] = q;
        if q != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= q * d;
            }
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return Err(Error::Internal("inexact Hirsch division".into()));
    }
    while quot.len() > 1 && *quot.last().unwrap() == 0 {
        quot.pop();
    }
    Ok(quot)
}

fn one_minus_t_pow(k: u64) -> Vec<i64> {
    let mut v = vec![0i64; k as usize + 1];
    v[0] = 1;
    v[k as usize] = -1;
    v
}

/// The Poincare polynomial of an equal-rank space by Hirsch's formula:
/// the ratio of the products `(1 - t^(2 d_i))` over the invariant degrees
/// of U and of K (each torus factor of K contributing `(1 - t^2)`).
/// Coefficients indexed by topological degree.
pub fn hirsch_poincare(space: &SpaceId) -> Result<Vec<i64>> {
    let dual = spaces::validate(space)?;
    if !dual.equal_rank {
        return Err(Error::NotEqualRank(space.to_string()));
    }
    let mut num = vec![1i64];
    for &d in dual.u_root_system.invariant_degrees() {
        num = poly1_mul(&num, &one_minus_t_pow(2 * d));
    }
    let mut den = vec![1i64];
    for _ in 0..dual.k_torus_rank {
        den = poly1_mul(&den, &one_minus_t_pow(2));
    }
    for factor in &dual.k_factor_degrees {
        for &d in factor {
            den = poly1_mul(&den, &one_minus_t_pow(2 * d));
        }
    }
    let p = poly1_div_exact(&num, &den)?;
    // pad to the real dimension for a degree-indexed vector
    let mut out = p;
    out.resize(dual.real_dimension + 1, 0);
    Ok(out)
}

/// Euler characteristic: 0 for non-equal-rank spaces, otherwise the Weyl
/// order ratio |W(U)| / |W(K)|.
pub fn euler_characteristic(space: &SpaceId) -> Result<u64> {
    let dual = spaces::validate(space)?;
    if !dual.equal_rank {
        return Ok(0);
    }
    let wu = dual.u_root_system.weyl_order();
    let wk = dual.k_weyl_order();
    if wu % wk != 0 {
        return Err(Error::Internal(format!(
            "{space}: |W(U)| = {wu} not divisible by |W(K)| = {wk}"
        )));
    }
    Ok(wu / wk)
}
