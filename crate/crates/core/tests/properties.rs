//! Cross-module consistency: the characteristic-class engine against an
//! independent "big ring" oracle, and the quaternionic/complex
//! degree-doubling correspondence.
//!
//! The oracle works in the full coinvariant-style quotient of the ambient
//! coordinate ring by the invariants of the big Weyl group. There the
//! complementary roots are literal linear forms, so the total Pontrjagin
//! and Chern classes can be computed the pedestrian way, one factor at a
//! time, and integrated by proportionality against the literal Euler
//! class. No power sums, no Newton identities, no per-family formulas.

use std::sync::Arc;

use num_traits::Zero;

use symspace::charclass::Engine;
use symspace::cohomology::subduct::{reynolds, weyl_matrices};
use symspace::cohomology::{euler_characteristic, hirsch_poincare, presentation};
use symspace::error::Result;
use symspace::polyring::{
    buchberger, coef_int, elementary_symmetric, symmetric_in_squares, Coef, GroebnerBasis,
    Poly, VarSet,
};
use symspace::rootsys::{build_root_system, TypeLabel};
use symspace::spaces::SpaceId;

/// Quotient of the ambient polynomial ring by the big-group invariants.
struct BigModel {
    vars: Arc<VarSet>,
    gb: GroebnerBasis,
    comp: Vec<Poly>,
    chi: i64,
    euler_nf: Poly,
}

impl BigModel {
    fn new(invariants: Vec<Poly>, comp: Vec<Poly>, chi: i64) -> Result<Self> {
        let vars = invariants[0].vars().clone();
        let gb = buchberger(&invariants)?;
        let euler = comp.iter().fold(Poly::one(&vars), |acc, b| acc.mul(b));
        let euler_nf = symspace::polyring::normal_form(&euler, &gb)?;
        assert!(!euler_nf.is_zero(), "degenerate oracle Euler class");
        Ok(BigModel {
            vars,
            gb,
            comp,
            chi,
            euler_nf,
        })
    }

    fn nf(&self, p: &Poly) -> Poly {
        symspace::polyring::normal_form(p, &self.gb).unwrap()
    }

    /// Integral by proportionality against the Euler class: the top piece
    /// of the invariant subring is one-dimensional, so the normal form of
    /// a top-degree class must be a rational multiple of the reduced
    /// Euler class.
    fn integrate(&self, w: &Poly) -> Coef {
        let top = self.euler_nf.homogeneous_degree().unwrap();
        let w = self.nf(&w.component(top));
        if w.is_zero() {
            return Coef::zero();
        }
        let (m0, c0) = self.euler_nf.leading().unwrap();
        let mu = w.coefficient(m0) / c0;
        assert_eq!(
            w,
            self.euler_nf.scale(&mu),
            "top class is not proportional to the Euler class"
        );
        mu * coef_int(self.chi)
    }

    /// Product of (1 + beta^2) over the complementary roots, reduced
    /// after every factor.
    fn total_pontrjagin(&self) -> Poly {
        let mut acc = Poly::one(&self.vars);
        for b in &self.comp {
            let factor = Poly::one(&self.vars).add(&b.mul(b));
            acc = self.nf(&acc.mul(&factor));
        }
        acc
    }

    /// Product of (1 + beta), reduced after every factor.
    fn total_chern(&self) -> Poly {
        let mut acc = Poly::one(&self.vars);
        for b in &self.comp {
            let factor = Poly::one(&self.vars).add(b);
            acc = self.nf(&acc.mul(&factor));
        }
        acc
    }
}

fn linear_form(coeffs: &[i64], vars: &Arc<VarSet>) -> Poly {
    let mut p = Poly::zero(vars);
    for (i, &a) in coeffs.iter().enumerate() {
        if a != 0 {
            p = p.add(&Poly::var(i, vars).scale(&coef_int(a)));
        }
    }
    p
}

/// Oracle data per space: ambient invariants of the big group and the
/// complementary roots, written out by hand from the root data.
fn big_model(space: &SpaceId) -> BigModel {
    let dual = symspace::spaces::validate(space).unwrap();
    let n = dual.u_root_system.ambient_dim();
    let vars = VarSet::uniform("x", n, 2);
    let chi = euler_characteristic(space).unwrap() as i64;
    let comp: Vec<Poly> = dual
        .complementary_roots()
        .iter()
        .map(|r| linear_form(r, &vars))
        .collect();
    let invariants: Vec<Poly> = match dual.u_root_system.label() {
        TypeLabel::A => (1..=n)
            .map(|j| elementary_symmetric(j, &vars).unwrap())
            .collect(),
        TypeLabel::B | TypeLabel::C => (1..=n)
            .map(|j| symmetric_in_squares(j, &vars).unwrap())
            .collect(),
        TypeLabel::D => {
            let mut inv: Vec<Poly> = (1..n)
                .map(|j| symmetric_in_squares(j, &vars).unwrap())
                .collect();
            inv.push((0..n).fold(Poly::one(&vars), |acc, i| acc.mul(&Poly::var(i, &vars))));
            inv
        }
        TypeLabel::G2 => {
            let group = weyl_matrices(&build_root_system(TypeLabel::G2, 2).unwrap());
            vec![
                linear_form(&[1, 1, 1], &vars),
                (0..3).fold(Poly::zero(&vars), |acc, i| {
                    acc.add(&Poly::var(i, &vars).pow(2))
                }),
                reynolds(&Poly::var(0, &vars).pow(6), &group),
            ]
        }
        other => panic!("no oracle for {other:?}"),
    };
    BigModel::new(invariants, comp, chi).unwrap()
}

/// Engine and oracle agree on every Pontrjagin number and, for Hermitian
/// spaces, on the Chern numbers built from c1.
fn check_space(space: SpaceId) {
    let oracle = big_model(&space);
    let engine = Engine::new(&space).unwrap();
    let pres = engine.presentation();
    let dim = pres.top_degree();

    // Euler class integral is the Euler characteristic on both sides
    let chi = coef_int(euler_characteristic(&space).unwrap() as i64);
    assert_eq!(oracle.integrate(&oracle.euler_nf.clone()), chi, "{space}");
    assert_eq!(pres.integrate(engine.euler_class()).unwrap(), chi, "{space}");

    if dim % 4 == 0 {
        let k = dim / 4;
        // all Pontrjagin numbers, via partitions of k
        let parts = partitions(k as u32);
        let big_p = oracle.total_pontrjagin();
        for part in parts {
            let mut big_class = Poly::one(&oracle.vars);
            for &i in &part {
                big_class = oracle.nf(&big_class.mul(&big_p.component(4 * i as u64)));
            }
            let expect = oracle.integrate(&big_class);
            let got = engine.pontrjagin_number(&part).unwrap();
            assert_eq!(got, expect, "{space}: p_{part:?}");
        }
    }

    if pres.is_hermitian() {
        // c1^(dim/2) both ways
        let big_c1 = oracle.total_chern().component(2);
        let mut big_pow = Poly::one(&oracle.vars);
        for _ in 0..dim / 2 {
            big_pow = oracle.nf(&big_pow.mul(&big_c1));
        }
        let expect = oracle.integrate(&big_pow);
        let c1 = engine.chern_class(1).unwrap();
        let mut small_pow = Poly::one(pres.vars());
        for _ in 0..dim / 2 {
            small_pow = pres.nf(&small_pow.mul(&c1)).unwrap();
        }
        let got = pres.integrate(&small_pow).unwrap();
        assert_eq!(got, expect, "{space}: c1 top power");
    }
}

fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[test]
fn big_ring_oracle_complex_projective_plane() {
    check_space(SpaceId::AIII(1, 2));
}

#[test]
fn big_ring_oracle_complex_grassmannian_2_2() {
    check_space(SpaceId::AIII(2, 2));
}

#[test]
fn big_ring_oracle_diii_3() {
    check_space(SpaceId::DIII(3));
}

#[test]
fn big_ring_oracle_ci_2() {
    check_space(SpaceId::CI(2));
}

#[test]
fn big_ring_oracle_ci_3() {
    check_space(SpaceId::CI(3));
}

#[test]
fn big_ring_oracle_quaternionic_projective_plane() {
    check_space(SpaceId::CII(1, 2));
}

#[test]
fn big_ring_oracle_quadric_q3() {
    check_space(SpaceId::BDI(2, 3));
}

#[test]
fn big_ring_oracle_quadric_q4() {
    check_space(SpaceId::BDI(2, 4));
}

#[test]
fn big_ring_oracle_g2so4() {
    check_space(SpaceId::G2SO4);
}

/// The integral cohomology rings of the complex and quaternionic
/// Grassmannians are isomorphic by a degree-doubling isomorphism; used
/// here purely as an oracle for the quaternionic presentations.
#[test]
fn degree_doubling_oracle() {
    for (p, q) in [(1u32, 1u32), (1, 2), (2, 2), (1, 3), (2, 3)] {
        let c = presentation(&SpaceId::AIII(p, q)).unwrap();
        let h = presentation(&SpaceId::CII(p, q)).unwrap();
        // Betti numbers match with degree doubled
        let cp = c.poincare();
        let hp = h.poincare();
        assert_eq!(hp.len(), 2 * cp.len() - 1, "({p},{q})");
        for (d, &b) in cp.iter().enumerate() {
            assert_eq!(hp[2 * d], b, "({p},{q}) degree {d}");
        }
        for (d, &b) in hp.iter().enumerate() {
            if d % 2 == 1 {
                assert_eq!(b, 0);
            }
        }
        // top self-intersection of the first generator matches:
        // the tableau count of the p x q rectangle on both sides
        let ce = Engine::new(&SpaceId::AIII(p, q)).unwrap();
        let he = Engine::new(&SpaceId::CII(p, q)).unwrap();
        let c1 = Poly::var(0, ce.presentation().vars());
        let f1 = Poly::var(0, he.presentation().vars());
        let ci = ce.presentation().integrate(&c1.pow(p * q)).unwrap();
        let hi = he.presentation().integrate(&f1.pow(p * q)).unwrap();
        assert_eq!(ci, hi, "({p},{q})");
    }
}

/// Obstruction soundness: an OP verdict on a computable space must be
/// backed by a nonzero signature or Pontrjagin number, and an OR verdict
/// may never coexist with a nonzero Pontrjagin number (orientation
/// reversal kills the whole oriented cobordism class).
#[test]
fn obstruction_soundness() {
    use symspace::charclass::{lgenus_signature, signature_closed_form, ClosedFormSignature};
    use symspace::decide::{classify, Justification, Verdict};

    let mut spaces = vec![SpaceId::G2SO4, SpaceId::FII];
    for p in 1..=4u32 {
        for q in 1..=4u32 {
            spaces.push(SpaceId::AIII(p, q));
        }
    }
    for p in 1..=3u32 {
        for q in 1..=3u32 {
            spaces.push(SpaceId::CII(p, q));
        }
    }
    for p in 2..=6u32 {
        for q in 2..=6u32 {
            if p + q > 4 && (p % 2 == 0 || q % 2 == 0) {
                spaces.push(SpaceId::BDI(p, q));
            }
        }
    }
    for n in 3..=6u32 {
        spaces.push(SpaceId::DIII(n));
    }
    for n in 2..=5u32 {
        spaces.push(SpaceId::CI(n));
    }

    for space in spaces {
        let verdict = classify(&space).unwrap();
        let engine = Engine::new(&space).unwrap();
        let dim = engine.presentation().top_degree();
        match verdict.verdict {
            Verdict::OP => {
                // at least one obstruction must actually be nonzero
                let confirmed = match &verdict.justification {
                    Justification::NonzeroPontrjaginNumber(part) => {
                        !engine.pontrjagin_number(part).unwrap().is_zero()
                    }
                    Justification::NonzeroSignature => {
                        let closed = signature_closed_form(&space).unwrap();
                        match closed {
                            Some(ClosedFormSignature::Value(v)) => {
                                v != 0 && lgenus_signature(&space).unwrap() != 0
                            }
                            Some(ClosedFormSignature::Nonzero) => {
                                lgenus_signature(&space).unwrap() != 0
                            }
                            _ => false,
                        }
                    }
                    other => panic!("{space}: OP with non-obstruction {other:?}"),
                };
                assert!(confirmed, "{space}: OP obstruction did not verify");
            }
            Verdict::OR => {
                // every Pontrjagin number must vanish
                if dim % 4 == 0 {
                    for part in partitions((dim / 4) as u32) {
                        let v = engine.pontrjagin_number(&part).unwrap();
                        assert!(
                            v.is_zero(),
                            "{space}: OR verdict but p_{part:?} = {v}"
                        );
                    }
                }
            }
        }
    }
}

/// The displayed product identity behind the Pontrjagin computation:
/// (1 - p1 + p2 - ...) = prod(1 + beta) * prod(1 - beta). Checked both as
/// a raw polynomial identity over an explicit alphabet and inside the
/// quotient ring for every small Hermitian space.
#[test]
fn chern_pontrjagin_product_identity() {
    // pre-reduction, literal alphabet
    {
        let dual = symspace::spaces::validate(&SpaceId::AIII(2, 2)).unwrap();
        let vars = VarSet::uniform("x", 4, 2);
        let forms: Vec<Poly> = dual
            .complementary_roots()
            .iter()
            .map(|r| linear_form(r, &vars))
            .collect();
        let one = Poly::one(&vars);
        let plus = forms.iter().fold(one.clone(), |acc, b| acc.mul(&one.add(b)));
        let minus = forms.iter().fold(one.clone(), |acc, b| acc.mul(&one.sub(b)));
        let squares = forms
            .iter()
            .fold(one.clone(), |acc, b| acc.mul(&one.sub(&b.mul(b))));
        assert_eq!(plus.mul(&minus), squares);
    }

    // in-ring, for the Hermitian catalog with parameters <= 5
    let mut spaces = vec![SpaceId::EIII];
    for p in 1..=5u32 {
        for q in 1..=5u32 {
            spaces.push(SpaceId::AIII(p, q));
            if (p == 2 || q == 2) && p > 1 && q > 1 && p + q > 4 {
                spaces.push(SpaceId::BDI(p, q));
            }
        }
    }
    for n in 3..=5u32 {
        spaces.push(SpaceId::DIII(n));
        spaces.push(SpaceId::CI(n));
    }
    spaces.push(SpaceId::CI(2));
    for space in spaces {
        let engine = match Engine::new(&space) {
            Ok(e) => e,
            Err(_) => continue, // stretch families
        };
        let pres = engine.presentation();
        let c = engine.total_chern().unwrap();
        let alternate = |p: &Poly, step: u64| {
            let mut out = Poly::zero(pres.vars());
            let mut d = 0;
            let mut sign = 1i64;
            while d <= pres.top_degree() {
                out = out.add(&p.component(d).scale(&coef_int(sign)));
                d += step;
                sign = -sign;
            }
            out
        };
        let cbar = alternate(&c, 2);
        let p_alt = alternate(&engine.total_pontrjagin().unwrap(), 4);
        assert_eq!(
            pres.nf(&c.mul(&cbar)).unwrap(),
            pres.nf(&p_alt).unwrap(),
            "{space}"
        );
    }
}

/// First Chern classes of the small Hermitian spaces: (p-1) sigma1 for
/// SO(2p)/U(p), (p+1) sigma1 for Sp(p)/U(p), q x1 for the quadrics.
#[test]
fn first_chern_classes() {
    for (space, mult) in [
        (SpaceId::DIII(3), 2i64),
        (SpaceId::DIII(4), 3),
        (SpaceId::CI(2), 3),
        (SpaceId::CI(3), 4),
        (SpaceId::AIII(1, 1), 2),
        (SpaceId::AIII(1, 2), 3),
    ] {
        let engine = Engine::new(&space).unwrap();
        let pres = engine.presentation();
        let c1 = engine.chern_class(1).unwrap();
        let gen1 = Poly::var(0, pres.vars());
        assert_eq!(c1, gen1.scale(&coef_int(mult)), "{space}");
    }
}

/// Signature vanishes whenever the middle Betti number does.
#[test]
fn middle_betti_forces_zero_signature() {
    let mut spaces = Vec::new();
    for p in 1..=3u32 {
        for q in 1..=3u32 {
            spaces.push(SpaceId::CII(p, q));
        }
    }
    spaces.push(SpaceId::BDI(3, 4));
    spaces.push(SpaceId::AIII(2, 2));
    for space in spaces {
        let pres = presentation(&space).unwrap();
        if pres.top_degree() % 4 != 0 {
            continue;
        }
        let middle = pres.poincare()[pres.top_degree() as usize / 2];
        if middle == 0 {
            let sig = Engine::new(&space).unwrap().lgenus_signature().unwrap();
            assert_eq!(sig, 0, "{space}");
        }
    }
}

/// SO(8)/U(4) is the six-dimensional quadric in disguise; their
/// signatures agree (and vanish), giving the closed form by
/// identification.
#[test]
fn hermitian_identification_diii4_is_q6() {
    let a = Engine::new(&SpaceId::DIII(4)).unwrap();
    let b = Engine::new(&SpaceId::BDI(2, 6)).unwrap();
    assert_eq!(a.presentation().poincare(), b.presentation().poincare());
    assert_eq!(a.lgenus_signature().unwrap(), 0);
    assert_eq!(b.lgenus_signature().unwrap(), 0);
}

/// Complementary-root counts per family.
#[test]
fn complementary_root_counts() {
    use symspace::charclass::complementary_roots;
    for p in 3..=6u32 {
        assert_eq!(
            complementary_roots(&SpaceId::DIII(p)).unwrap().len() as u32,
            p * (p - 1) / 2
        );
        assert_eq!(
            complementary_roots(&SpaceId::CI(p)).unwrap().len() as u32,
            p * (p + 1) / 2
        );
    }
    for (p, q) in [(1u32, 2u32), (2, 2), (2, 3)] {
        assert_eq!(
            complementary_roots(&SpaceId::CII(p, q)).unwrap().len() as u32,
            2 * p * q
        );
        assert_eq!(
            complementary_roots(&SpaceId::AIII(p, q)).unwrap().len() as u32,
            p * q
        );
    }
    assert!(complementary_roots(&SpaceId::AI(5)).is_err());
    assert!(complementary_roots(&SpaceId::BDI(3, 3)).is_err());
}

/// Calibrated integration edge cases.
#[test]
fn integration_edges() {
    let engine = Engine::new(&SpaceId::AIII(2, 2)).unwrap();
    let pres = engine.presentation();
    let vars = pres.vars();
    // integral of the top basis monomial is the calibration constant
    let m0 = Poly::monomial(pres.top_monomial().clone(), coef_int(1), vars);
    assert_eq!(pres.integrate(&m0).unwrap(), *pres.calibration().unwrap());
    // zero and below-top classes integrate to zero
    assert!(pres.integrate(&Poly::zero(vars)).unwrap().is_zero());
    let c1 = Poly::var(0, vars);
    assert!(pres.integrate(&c1).unwrap().is_zero());
    // above-top degree is an error
    let too_big = c1.pow(5);
    assert!(matches!(
        pres.integrate(&too_big),
        Err(symspace::error::Error::DegreeAboveTop { .. })
    ));
    // linearity
    let a = pres.nf(&c1.pow(4)).unwrap();
    let b = Poly::monomial(pres.top_monomial().clone(), coef_int(3), vars);
    let lhs = pres.integrate(&a.add(&b)).unwrap();
    let rhs = pres.integrate(&a).unwrap() + pres.integrate(&b).unwrap();
    assert_eq!(lhs, rhs);
}

/// Betti-sum, palindrome and Hirsch agreement on a quick sample; the
/// full parameter sweep lives in the acceptance suite.
#[test]
fn hirsch_agreement_sample() {
    for space in [
        SpaceId::AIII(3, 2),
        SpaceId::BDI(4, 4),
        SpaceId::BDI(5, 4),
        SpaceId::CII(2, 2),
        SpaceId::DIII(5),
        SpaceId::CI(4),
        SpaceId::FII,
    ] {
        let pres = presentation(&space).unwrap();
        let hirsch = hirsch_poincare(&space).unwrap();
        assert_eq!(pres.poincare(), hirsch.as_slice(), "{space}");
        let n = hirsch.len();
        for d in 0..n {
            assert_eq!(hirsch[d], hirsch[n - 1 - d], "{space}: palindrome at {d}");
        }
        let total: i64 = hirsch.iter().sum();
        assert_eq!(total as u64, euler_characteristic(&space).unwrap(), "{space}");
    }
}
