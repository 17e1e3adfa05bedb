//! Buchberger's algorithm, normal forms and quotient monomial bases.
//!
//! All ideals in this crate are homogeneous, so S-pairs are processed in
//! ascending degree of their lcm (normal selection). The product and chain
//! criteria prune the pair queue. The final basis is inter-reduced and
//! monic, hence canonical for the grevlex order.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::{Coef, Mono, Poly, VarSet};
use crate::error::{Error, Result};

/// An inter-reduced monic Groebner basis under graded reverse-lexicographic
/// order, together with its variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    vars: Arc<VarSet>,
    gens: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Mono> {
        self.gens.iter().map(|g| g.leading().expect("nonzero").0)
    }

    /// Monomial order descriptor.
    pub fn order(&self) -> &'static str {
        "grevlex"
    }

    /// True when the ideal contains a pure power of every variable, which
    /// for a graded ideal means the quotient is finite-dimensional.
    pub fn is_zero_dimensional(&self) -> bool {
        if self.gens.iter().any(|g| g.leading().map(|(m, _)| m.is_one()).unwrap_or(false)) {
            return true; // unit ideal
        }
        (0..self.vars.len()).all(|i| {
            self.leading_monomials().any(|m| {
                m.exps()
                    .iter()
                    .enumerate()
                    .all(|(j, &e)| if j == i { e > 0 } else { e == 0 })
            })
        })
    }

    /// Dimension of the graded quotient piece in each weighted degree
    /// `0..=top`, where `top` is the largest degree with a nonzero piece.
    /// `None` when the quotient is not finite-dimensional.
    pub fn quotient_dimensions(&self) -> Option<Vec<usize>> {
        if !self.is_zero_dimensional() {
            return None;
        }
        // Bound on the top degree: each variable exponent is capped by the
        // pure-power leading term for that variable.
        let n = self.vars.len();
        let mut cap = vec![0u16; n];
        for (i, c) in cap.iter_mut().enumerate() {
            let e = self
                .leading_monomials()
                .filter(|m| {
                    m.exps()
                        .iter()
                        .enumerate()
                        .all(|(j, &e)| if j == i { e > 0 } else { e == 0 })
                })
                .map(|m| m.exps()[i])
                .min()
                .unwrap_or(0);
            if e == 0 {
                return Some(vec![if self.gens.is_empty() { 1 } else { 0 }]);
            }
            *c = e - 1;
        }
        let mut dims: BTreeMap<u64, usize> = BTreeMap::new();
        let lms: Vec<Mono> = self.leading_monomials().cloned().collect();
        let mut exps = vec![0u16; n];
        loop {
            let m = Mono::new(&exps, &self.vars);
            if !lms.iter().any(|lm| lm.divides(&m)) {
                *dims.entry(m.degree()).or_insert(0) += 1;
            }
            // odometer over the capped box
            let mut i = 0;
            loop {
                if i == n {
                    let top = dims.keys().max().copied().unwrap_or(0);
                    let mut out = vec![0usize; top as usize + 1];
                    for (d, k) in dims {
                        out[d as usize] = k;
                    }
                    return Some(out);
                }
                if exps[i] < cap[i] {
                    exps[i] += 1;
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Total dimension of the quotient, when finite.
    pub fn quotient_dimension(&self) -> Option<usize> {
        self.quotient_dimensions().map(|d| d.iter().sum())
    }
}

/// Compressed divisibility mask: 4 exponent-threshold bits for each of
/// the first 8 variables. `a` can divide `b` only if
/// `mask(a) & !mask(b) == 0`, giving a cheap rejection test.
fn divmask(m: &Mono) -> u32 {
    let mut mask = 0u32;
    for (i, &e) in m.exps().iter().take(8).enumerate() {
        let bits = match e {
            0 => 0u32,
            1 => 1,
            2..=3 => 3,
            4..=7 => 7,
            _ => 15,
        };
        mask |= bits << (4 * i);
    }
    mask
}

/// Fully reduce `p` modulo the (not necessarily complete) basis `gens`.
fn reduce(p: &Poly, gens: &[Poly]) -> Poly {
    let vars = p.vars().clone();
    let leads: Vec<(&Mono, &Coef, u32)> = gens
        .iter()
        .map(|g| {
            let (m, c) = g.leading().expect("nonzero");
            (m, c, divmask(m))
        })
        .collect();
    let mut work: BTreeMap<Mono, Coef> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let mut rem = Poly::zero(&vars);
    while let Some((m, c)) = work.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        work.remove(&m);
        let mmask = divmask(&m);
        let hit = leads
            .iter()
            .position(|(lm, _, gmask)| gmask & !mmask == 0 && lm.divides(&m));
        match hit {
            None => rem.add_term(m, c),
            Some(i) => {
                let (lm, lc, _) = leads[i];
                let qm = lm.div_into(&m);
                let factor = &c / lc;
                for (gm, gc) in gens[i].terms() {
                    if gm == lm {
                        continue;
                    }
                    let key = gm.mul(&qm);
                    let delta = gc * &factor;
                    match work.entry(key) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(-delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() -= delta;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
        }
    }
    rem
}

fn s_poly(f: &Poly, g: &Poly, vars: &VarSet) -> Poly {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm, vars);
    let f_part = f.mul_term(&fm.div_into(&l), &fc.recip());
    let g_part = g.mul_term(&gm.div_into(&l), &gc.recip());
    f_part.sub(&g_part)
}

/// Compute the reduced Groebner basis of the homogeneous ideal generated
/// by `generators` under grevlex order.
pub fn buchberger(generators: &[Poly]) -> Result<GroebnerBasis> {
    let vars = match generators.first() {
        None => {
            return Err(Error::NonHomogeneousInput(
                "empty generator list has no variable set".into(),
            ))
        }
        Some(g) => g.vars().clone(),
    };
    for g in generators {
        if g.vars() != &vars {
            return Err(Error::VariableMismatch(
                "ideal generators from different rings".into(),
            ));
        }
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneousInput(format!("{g}")));
        }
    }

    let mut basis: Vec<Poly> = Vec::new();
    for g in generators {
        if !g.is_zero() {
            let r = reduce(&g.monic(), &basis);
            if !r.is_zero() {
                basis.push(r.monic());
            }
        }
    }

    // pair queue: smallest lcm first (normal strategy); the coprime
    // criterion prunes at insertion, the chain criterion at extraction
    use std::cmp::Reverse;
    use std::collections::{BinaryHeap, HashSet};
    let mut queue: BinaryHeap<Reverse<(Mono, usize, usize)>> = BinaryHeap::new();
    let mut in_queue: HashSet<(usize, usize)> = HashSet::new();
    let add_pairs = |queue: &mut BinaryHeap<Reverse<(Mono, usize, usize)>>,
                         in_queue: &mut HashSet<(usize, usize)>,
                         basis: &[Poly],
                         t: usize| {
        let (tm, _) = basis[t].leading().unwrap();
        for (i, g) in basis.iter().enumerate().take(t) {
            let (im, _) = g.leading().unwrap();
            if im.coprime(tm) {
                continue;
            }
            queue.push(Reverse((im.lcm(tm, &vars), i, t)));
            in_queue.insert((i, t));
        }
    };
    for t in 0..basis.len() {
        add_pairs(&mut queue, &mut in_queue, &basis, t);
    }

    while let Some(Reverse((lcm, i, j))) = queue.pop() {
        in_queue.remove(&(i, j));
        // chain criterion: a third generator divides the lcm and both
        // linking pairs have already been handled
        let lmask = divmask(&lcm);
        let chained = basis.iter().enumerate().any(|(k, g)| {
            if k == i || k == j {
                return false;
            }
            let (km, _) = g.leading().unwrap();
            divmask(km) & !lmask == 0
                && km.divides(&lcm)
                && !in_queue.contains(&(i.min(k), i.max(k)))
                && !in_queue.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        let s = s_poly(&basis[i], &basis[j], &vars);
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            add_pairs(&mut queue, &mut in_queue, &basis, basis.len() - 1);
        }
    }

    // inter-reduce: drop generators whose lead is divisible by another lead,
    // then tail-reduce each survivor against the rest
    let mut keep: Vec<Poly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let (gm, _) = g.leading().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && {
                let (hm, _) = h.leading().unwrap();
                hm.divides(gm) && (hm != gm || j < i)
            }
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced: Vec<Poly> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<Poly> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = reduce(&keep[i], &others);
        debug_assert!(!r.is_zero(), "inter-reduction must keep leading terms");
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));

    Ok(GroebnerBasis {
        vars,
        gens: reduced,
    })
}

/// Fully reduced remainder of `p` modulo `gb`; linear and idempotent.
pub fn normal_form(p: &Poly, gb: &GroebnerBasis) -> Result<Poly> {
    if p.vars() != &gb.vars {
        return Err(Error::VariableMismatch(
            "polynomial and basis from different rings".into(),
        ));
    }
    Ok(reduce(p, &gb.gens))
}

/// Monomials of the given weighted degree not divisible by any leading
/// term of `gb`; a basis of the degree-`degree` piece of the quotient.
pub fn quotient_monomial_basis(gb: &GroebnerBasis, degree: u64) -> Vec<Mono> {
    let n = gb.vars.len();
    let lms: Vec<Mono> = gb.leading_monomials().cloned().collect();
    if lms.iter().any(|m| m.is_one()) {
        return Vec::new(); // unit ideal
    }
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    // enumerate exponent vectors of exact weighted degree
    fn rec(
        i: usize,
        remaining: u64,
        exps: &mut Vec<u16>,
        vars: &VarSet,
        lms: &[Mono],
        out: &mut Vec<Mono>,
    ) {
        if i == vars.len() {
            if remaining == 0 {
                let m = Mono::new(exps, vars);
                if !lms.iter().any(|lm| lm.divides(&m)) {
                    out.push(m);
                }
            }
            return;
        }
        let w = vars.weight(i);
        let max = remaining / w;
        for e in 0..=max.min(u16::MAX as u64) {
            exps[i] = e as u16;
            rec(i + 1, remaining - e * w, exps, vars, lms, out);
        }
        exps[i] = 0;
    }
    rec(0, degree, &mut exps, &gb.vars, &lms, &mut out);
    out.sort();
    out
}
