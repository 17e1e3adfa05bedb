//! Characteristic classes from complementary roots, Pontrjagin numbers,
//! L-genus signatures, and the published closed-form signature values.
//!
//! For an equal-rank pair the complementary positive roots are the weights
//! of the isotropy representation, so the total Pontrjagin class is the
//! reduced product of `(1 + beta^2)` and, for a Hermitian space, the total
//! Chern class is the reduced product of `(1 + beta)`. Both are computed
//! through power sums of the root multiset (exactly expressible in every
//! presentation) and the exponential series in the quotient ring, which
//! keeps every intermediate at or below the top degree.

pub mod lgenus;

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cohomology::{self, subduct::Subductor, ClassData, Presentation};
use crate::error::{Error, Result};
use crate::polyring::{coef_int, coef_ratio, Coef, Poly};
use crate::spaces::{self, SpaceId};

fn binomial(n: u64, k: u64) -> Coef {
    if k > n {
        return Coef::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Coef::new(num, den)
}

fn binomial_i64(n: u64, k: u64) -> i64 {
    coef_to_i64(&binomial(n, k)).expect("catalog binomial fits i64")
}

/// The positive complementary roots of an equal-rank space as ambient
/// integer linear forms.
pub fn complementary_roots(space: &SpaceId) -> Result<Vec<Vec<i64>>> {
    let dual = spaces::validate(space)?;
    if !dual.equal_rank {
        return Err(Error::UnsupportedSpace(format!(
            "{space}: complementary roots need an equal-rank pair"
        )));
    }
    Ok(dual.complementary_roots())
}

/// Characteristic-class engine over one calibrated presentation.
pub struct Engine {
    pres: Presentation,
    euler: Poly,
    subductor: RefCell<Option<Subductor>>,
    total_pontrjagin: RefCell<Option<Poly>>,
}

impl Engine {
    pub fn new(space: &SpaceId) -> Result<Engine> {
        let pres = cohomology::presentation(space)?;
        let raw = Engine {
            pres,
            euler: Poly::zero(&crate::polyring::VarSet::uniform("z", 1, 1)),
            subductor: RefCell::new(None),
            total_pontrjagin: RefCell::new(None),
        };
        let euler = raw.euler_class_raw()?;
        let Engine {
            pres, subductor, ..
        } = raw;
        let pres = pres.calibrate(&euler)?;
        Ok(Engine {
            pres,
            euler,
            subductor,
            total_pontrjagin: RefCell::new(None),
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    /// The reduced Euler class, the product of the positive complementary
    /// roots.
    pub fn euler_class(&self) -> &Poly {
        &self.euler
    }

    fn with_subductor<T>(&self, f: impl FnOnce(&mut Subductor) -> Result<T>) -> Result<T> {
        let ClassData::Ambient(data) = self.pres.class_data() else {
            return Err(Error::Internal("no ambient data for this space".into()));
        };
        let mut cell = self.subductor.borrow_mut();
        if cell.is_none() {
            *cell = Some(data.subductor());
        }
        f(cell.as_mut().unwrap())
    }

    /// Power sums of the generator alphabet by Newton's identities,
    /// reduced in the quotient ring. Entry 0 is the alphabet size.
    fn alphabet_power_sums(&self, upto: usize) -> Result<Vec<Poly>> {
        let vars = self.pres.vars();
        let n = vars.len();
        let e = |i: usize| -> Option<Poly> {
            if i >= 1 && i <= n {
                Some(Poly::var(i - 1, vars))
            } else {
                None
            }
        };
        let mut ps: Vec<Poly> = vec![Poly::constant(coef_int(n as i64), vars)];
        for k in 1..=upto {
            let mut acc = Poly::zero(vars);
            if let Some(ek) = e(k) {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc = acc.add(&ek.scale(&coef_int(sign * k as i64)));
            }
            for i in 1..k {
                if let Some(ei) = e(i) {
                    let term = ei.mul(&ps[k - i]);
                    acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
            ps.push(self.pres.nf(&acc)?);
        }
        Ok(ps)
    }

    /// Sum of the m-th powers of the positive complementary roots as an
    /// element of the quotient ring. Odd power sums exist only for the
    /// Hermitian families.
    pub fn comp_power_sum(&self, m: u64) -> Result<Poly> {
        if m % 2 == 1 && !self.pres.is_hermitian() {
            return Err(Error::NotHermitian(self.pres.space.to_string()));
        }
        let vars = self.pres.vars();
        match self.pres.class_data() {
            ClassData::SigmaPairs { include_diagonal, .. } => {
                // roots x_i + x_j (i < j), plus 2x_i on the diagonal for
                // CI: 2 S_m = sum_k C(m,k) PX_k PX_{m-k} -+ 2^m PX_m
                let px = self.alphabet_power_sums(m as usize)?;
                let mut acc = Poly::zero(vars);
                for k in 0..=m {
                    let term = px[k as usize].mul(&px[(m - k) as usize]);
                    acc = acc.add(&term.scale(&binomial(m, k)));
                }
                let two_pow = Coef::from_integer(num_traits::pow(BigInt::from(2), m as usize));
                let diag = px[m as usize].scale(&two_pow);
                acc = if *include_diagonal {
                    acc.add(&diag)
                } else {
                    acc.sub(&diag)
                };
                self.pres.nf(&acc.scale(&coef_ratio(1, 2)))
            }
            ClassData::TwoAlphabet { q, .. } => {
                // roots x_i - y_j; sigma(y) is the inverse series, so the
                // y power sums are the negatives of the x power sums
                let px = self.alphabet_power_sums(m as usize)?;
                let py: Vec<Poly> = (0..=m as usize)
                    .map(|l| {
                        if l == 0 {
                            Poly::constant(coef_int(*q as i64), vars)
                        } else {
                            px[l].neg()
                        }
                    })
                    .collect();
                let mut acc = Poly::zero(vars);
                for k in 0..=m {
                    let sign = if (m - k) % 2 == 0 { 1 } else { -1 };
                    let b = binomial(m, k) * coef_int(sign);
                    let term = px[k as usize].mul(&py[(m - k) as usize]);
                    acc = acc.add(&term.scale(&b));
                }
                self.pres.nf(&acc)
            }
            ClassData::TwoAlphabetSquares { q, .. } => {
                // roots x_i +- y_j: S_{2s} = 2 sum C(2s,2k) PX_k PY_{s-k}
                // over the squared alphabets, PY_u = -PX_u for u >= 1
                let s = (m / 2) as usize;
                let px = self.alphabet_power_sums(s)?;
                let py: Vec<Poly> = (0..=s)
                    .map(|u| {
                        if u == 0 {
                            Poly::constant(coef_int(*q as i64), vars)
                        } else {
                            px[u].neg()
                        }
                    })
                    .collect();
                let mut acc = Poly::zero(vars);
                for k in 0..=s {
                    let term = px[k].mul(&py[s - k]);
                    acc = acc.add(&term.scale(&binomial(m, 2 * k as u64)));
                }
                self.pres.nf(&acc.scale(&coef_int(2)))
            }
            ClassData::Ambient(data) => {
                let mut sum = Poly::zero(&data.ambient_vars);
                for beta in &data.comp_roots {
                    sum = sum.add(&beta.pow(m as u32));
                }
                let expr = self.with_subductor(|sub| sub.subduct(&sum))?;
                self.pres.nf(&expr)
            }
        }
    }

    /// Total Pontrjagin class: the reduced product of `(1 + beta^2)`.
    pub fn total_pontrjagin(&self) -> Result<Poly> {
        if let Some(p) = self.total_pontrjagin.borrow().as_ref() {
            return Ok(p.clone());
        }
        let vars = self.pres.vars();
        let top = self.pres.top_degree();
        let mut w = Poly::zero(vars);
        let mut s = 1u64;
        while 4 * s <= top {
            let ps = self.comp_power_sum(2 * s)?;
            let sign = if s % 2 == 1 { 1 } else { -1 };
            w = w.add(&ps.scale(&coef_ratio(sign, s as i64)));
            s += 1;
        }
        let result = self.pres.exp_nf(&w)?;
        *self.total_pontrjagin.borrow_mut() = Some(result.clone());
        Ok(result)
    }

    /// Total Chern class of a Hermitian space: the reduced product of
    /// `(1 + beta)`.
    pub fn total_chern(&self) -> Result<Poly> {
        if !self.pres.is_hermitian() {
            return Err(Error::NotHermitian(self.pres.space.to_string()));
        }
        let vars = self.pres.vars();
        let top = self.pres.top_degree();
        let mut w = Poly::zero(vars);
        let mut m = 1u64;
        while 2 * m <= top {
            let ps = self.comp_power_sum(m)?;
            let sign = if m % 2 == 1 { 1 } else { -1 };
            w = w.add(&ps.scale(&coef_ratio(sign, m as i64)));
            m += 1;
        }
        self.pres.exp_nf(&w)
    }

    /// Degree-4k piece of the total Pontrjagin class.
    pub fn pontrjagin_class(&self, k: u64) -> Result<Poly> {
        Ok(self.total_pontrjagin()?.component(4 * k))
    }

    /// Degree-2k piece of the total Chern class.
    pub fn chern_class(&self, k: u64) -> Result<Poly> {
        Ok(self.total_chern()?.component(2 * k))
    }

    fn euler_class_raw(&self) -> Result<Poly> {
        match self.pres.class_data() {
            ClassData::SigmaPairs { .. } | ClassData::TwoAlphabet { .. } => {
                // Hermitian: the Euler class is the top Chern class.
                // total_chern checks calibration nowhere, so this works on
                // the uncalibrated presentation.
                let c = self.total_chern_uncalibrated()?;
                Ok(c.component(self.pres.top_degree()))
            }
            ClassData::TwoAlphabetSquares { p, q } => self.cii_euler(*p, *q),
            ClassData::Ambient(data) => {
                let prod = data
                    .comp_roots
                    .iter()
                    .fold(Poly::one(&data.ambient_vars), |acc, b| acc.mul(b));
                let expr = self.with_subductor(|sub| sub.subduct(&prod))?;
                self.pres.nf(&expr)
            }
        }
    }

    fn total_chern_uncalibrated(&self) -> Result<Poly> {
        self.total_chern()
    }

    /// Euler class of the quaternionic Grassmannian: the resultant of the
    /// characteristic polynomials of the two squared alphabets,
    /// prod (T - x_i^2) and prod (T - y_j^2), via the Sylvester
    /// determinant with quotient-ring entries.
    fn cii_euler(&self, p: usize, q: usize) -> Result<Poly> {
        let vars = self.pres.vars();
        // inverse-series classes of the y-alphabet
        let mut eprime: Vec<Poly> = vec![Poly::one(vars)];
        for v in 1..=q {
            let mut acc = Poly::zero(vars);
            for u in 1..=v.min(p) {
                acc = acc.sub(&Poly::var(u - 1, vars).mul(&eprime[v - u]));
            }
            eprime.push(self.pres.nf(&acc)?);
        }
        // coefficient lists from the leading power down
        let sign = |k: usize, f: Poly| if k % 2 == 0 { f } else { f.neg() };
        let pc: Vec<Poly> = (0..=p)
            .map(|u| {
                if u == 0 {
                    Poly::one(vars)
                } else {
                    sign(u, Poly::var(u - 1, vars))
                }
            })
            .collect();
        let qc: Vec<Poly> = (0..=q).map(|v| sign(v, eprime[v].clone())).collect();

        // Sylvester matrix: q shifted rows of pc, then p shifted rows of qc
        let n = p + q;
        let zero = Poly::zero(vars);
        let mut matrix: Vec<Vec<Poly>> = Vec::with_capacity(n);
        for i in 0..q {
            let mut row = vec![zero.clone(); n];
            for (u, c) in pc.iter().enumerate() {
                row[i + u] = c.clone();
            }
            matrix.push(row);
        }
        for j in 0..p {
            let mut row = vec![zero.clone(); n];
            for (v, c) in qc.iter().enumerate() {
                row[j + v] = c.clone();
            }
            matrix.push(row);
        }
        self.det_nf(&matrix)
    }

    /// Determinant of a matrix of ring elements by column-subset dynamic
    /// programming (no division), reducing after each multiplication.
    fn det_nf(&self, m: &[Vec<Poly>]) -> Result<Poly> {
        let n = m.len();
        let vars = self.pres.vars();
        let mut minors: std::collections::HashMap<u32, Poly> = std::collections::HashMap::new();
        minors.insert(0, Poly::one(vars));
        for (row_idx, row) in m.iter().enumerate() {
            let mut next: std::collections::HashMap<u32, Poly> = std::collections::HashMap::new();
            for (mask, minor) in &minors {
                for (col, entry) in row.iter().enumerate() {
                    let bit = 1u32 << col;
                    if mask & bit != 0 || entry.is_zero() {
                        continue;
                    }
                    let term = self.pres.nf(&minor.mul(entry))?;
                    if term.is_zero() {
                        continue;
                    }
                    // inversions added: previously chosen columns to the right
                    let inversions = (mask >> (col + 1)).count_ones();
                    let signed = if inversions % 2 == 0 { term } else { term.neg() };
                    let key = mask | bit;
                    match next.entry(key) {
                        std::collections::hash_map::Entry::Vacant(e) => {
                            e.insert(signed);
                        }
                        std::collections::hash_map::Entry::Occupied(mut e) => {
                            let merged = e.get().add(&signed);
                            *e.get_mut() = merged;
                        }
                    }
                }
            }
            minors = next;
            if minors.is_empty() {
                return Ok(Poly::zero(vars));
            }
            let _ = row_idx;
        }
        let full = (1u64 << n) as u32 - 1;
        Ok(minors.remove(&full).unwrap_or_else(|| Poly::zero(vars)))
    }

    /// Pontrjagin number for a partition of dim/4: the calibrated integral
    /// of the product of the p_{k_i}.
    pub fn pontrjagin_number(&self, partition: &[u32]) -> Result<Coef> {
        let dim = self.pres.top_degree();
        if dim % 4 != 0 {
            return Err(Error::DimensionNotDivisibleBy4 {
                space: self.pres.space.to_string(),
                dim: dim as usize,
            });
        }
        let want = dim / 4;
        let total: u64 = partition.iter().map(|&k| k as u64).sum();
        if total != want {
            return Err(Error::InvalidParameters {
                space: self.pres.space.to_string(),
                bound: format!("partition must sum to dim/4 = {want}, got {total}"),
            });
        }
        let mut prod = Poly::one(self.pres.vars());
        for &k in partition {
            prod = self.pres.nf(&prod.mul(&self.pontrjagin_class(k as u64)?))?;
        }
        self.pres.integrate(&prod)
    }

    /// Signature by the Hirzebruch signature theorem: the calibrated
    /// integral of the top L-polynomial evaluated at the Pontrjagin
    /// classes. Exact; asserts integrality.
    pub fn lgenus_signature(&self) -> Result<i64> {
        let dim = self.pres.top_degree();
        if dim % 4 != 0 {
            return Err(Error::DimensionNotDivisibleBy4 {
                space: self.pres.space.to_string(),
                dim: dim as usize,
            });
        }
        let k = (dim / 4) as usize;
        let ls = lgenus::l_polynomials(k);
        let top_l = &ls[k - 1];
        let images: Vec<Poly> = (1..=k as u64)
            .map(|i| self.pontrjagin_class(i))
            .collect::<Result<_>>()?;
        let evaluated = top_l.substitute(&images, self.pres.vars());
        let value = self.pres.integrate(&self.pres.nf(&evaluated)?)?;
        if !value.is_integer() {
            return Err(Error::Internal(format!(
                "{}: non-integral signature {value}",
                self.pres.space
            )));
        }
        coef_to_i64(&value)
    }
}

fn coef_to_i64(c: &Coef) -> Result<i64> {
    if !c.is_integer() {
        return Err(Error::Internal(format!("expected integer, got {c}")));
    }
    let n = c.numer();
    let digits = n.abs().to_u64_digits();
    let mag = match digits.1.len() {
        0 => 0u64,
        1 => digits.1[0],
        _ => return Err(Error::Internal(format!("integer {c} out of range"))),
    };
    let v = mag as i64;
    Ok(if n.is_negative() { -v } else { v })
}

/// Published closed-form signature knowledge for a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosedFormSignature {
    /// An exact quoted value.
    Value(i64),
    /// Quoted as zero without an exact formula (Mong's criterion).
    Zero,
    /// Quoted as nonzero without an exact value (Mong's criterion).
    Nonzero,
}

/// The quoted closed-form signature, when the family has one. `None` for
/// families without a quoted form or when the dimension is not a multiple
/// of four.
pub fn signature_closed_form(space: &SpaceId) -> Result<Option<ClosedFormSignature>> {
    let dim = spaces::dimension(space)?;
    if dim % 4 != 0 {
        return Ok(None);
    }
    Ok(match *space {
        SpaceId::AIII(p, q) => {
            // signature of the complex Grassmannian, pq even
            Some(ClosedFormSignature::Value(binomial_i64(
                ((p + q) / 2) as u64,
                (p / 2) as u64,
            )))
        }
        SpaceId::BDI(p, q) => {
            if p % 2 == 0 && q % 2 == 0 {
                if (p * q) % 8 == 0 {
                    Some(ClosedFormSignature::Value(binomial_i64(
                        ((p + q) / 4) as u64,
                        (p / 4) as u64,
                    )))
                } else {
                    Some(ClosedFormSignature::Value(0))
                }
            } else {
                // one parameter odd: quoted as zero
                Some(ClosedFormSignature::Value(0))
            }
        }
        SpaceId::CII(p, q) => {
            if p % 2 == 1 && q % 2 == 1 {
                Some(ClosedFormSignature::Zero)
            } else {
                Some(ClosedFormSignature::Nonzero)
            }
        }
        SpaceId::EIII => Some(ClosedFormSignature::Value(3)),
        SpaceId::G2SO4 => Some(ClosedFormSignature::Value(1)),
        SpaceId::FII => Some(ClosedFormSignature::Value(1)),
        _ => None,
    })
}

/// Aggregated characteristic-class report for one space.
#[derive(Debug, Clone)]
pub struct CharClassReport {
    pub space: SpaceId,
    pub total_chern: Option<Poly>,
    pub total_pontrjagin: Poly,
    pub pontrjagin_numbers: BTreeMap<Vec<u32>, Coef>,
    pub signature_lgenus: Option<i64>,
    pub signature_closed_form: Option<ClosedFormSignature>,
}

/// Build a full report; `partitions` selects the Pontrjagin numbers.
pub fn report(space: &SpaceId, partitions: &[Vec<u32>]) -> Result<CharClassReport> {
    let engine = Engine::new(space)?;
    let total_pontrjagin = engine.total_pontrjagin()?;
    let total_chern = if engine.presentation().is_hermitian() {
        Some(engine.total_chern()?)
    } else {
        None
    };
    let mut pontrjagin_numbers = BTreeMap::new();
    for part in partitions {
        pontrjagin_numbers.insert(part.clone(), engine.pontrjagin_number(part)?);
    }
    let signature_lgenus = if engine.presentation().top_degree() % 4 == 0 {
        Some(engine.lgenus_signature()?)
    } else {
        None
    };
    Ok(CharClassReport {
        space: *space,
        total_chern,
        total_pontrjagin,
        pontrjagin_numbers,
        signature_lgenus,
        signature_closed_form: signature_closed_form(space)?,
    })
}

/// Total Pontrjagin class of a space (engine convenience wrapper).
pub fn total_pontrjagin(space: &SpaceId) -> Result<Poly> {
    Engine::new(space)?.total_pontrjagin()
}

/// Total Chern class of a Hermitian space.
pub fn total_chern(space: &SpaceId) -> Result<Poly> {
    Engine::new(space)?.total_chern()
}

/// One Pontrjagin number.
pub fn pontrjagin_number(space: &SpaceId, partition: &[u32]) -> Result<Coef> {
    Engine::new(space)?.pontrjagin_number(partition)
}

/// L-genus signature.
pub fn lgenus_signature(space: &SpaceId) -> Result<i64> {
    Engine::new(space)?.lgenus_signature()
}
