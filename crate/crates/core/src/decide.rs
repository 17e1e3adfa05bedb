//! The orientation-reversal classifier, Brouwer-degree sets, minimal-index
//! arithmetic, and the fixed-point certificate.
//!
//! Verdicts: `OR` means the space admits an orientation-reversing isometry,
//! `OP` that every isometry preserves orientation. Every `OR` carries an
//! existence-type justification (an explicit isometry or a dimension/parity
//! reason); every `OP` carries an obstruction (a nonzero signature or
//! Pontrjagin number, or parity exhaustion of the diagram automorphisms).

use serde::{Deserialize, Serialize};

use crate::cohomology;
use crate::error::{Error, Result};
use crate::rootsys;
use crate::spaces::{self, SpaceId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    /// Admits an orientation-reversing isometry.
    OR,
    /// Every isometry is orientation-preserving.
    OP,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::OR => write!(f, "OR"),
            Verdict::OP => write!(f, "OP"),
        }
    }
}

/// Machine-checkable reason for a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Justification {
    /// The space has odd real dimension, so minus-identity-type maps
    /// reverse orientation.
    OddDimension,
    /// Hermitian space of odd complex dimension: the conjugate complex
    /// structure is realized by an orientation-reversing isometry.
    HermitianOddComplexDim,
    /// Some Dynkin diagram automorphism induces an odd node permutation.
    DiagramParityOdd,
    /// A named explicit isometry reverses orientation.
    ExplicitIsometryRule(String),
    /// The Pontrjagin number for this partition is nonzero, so every
    /// diffeomorphism preserves orientation.
    NonzeroPontrjaginNumber(Vec<u32>),
    /// The signature is nonzero, so every diffeomorphism preserves
    /// orientation.
    NonzeroSignature,
    /// Exhaustion: all candidate outer isometries preserve orientation.
    AllAutomorphismsPreserve(String),
}

impl Justification {
    /// OR verdicts need existence-type reasons, OP verdicts obstructions.
    pub fn is_existence(&self) -> bool {
        matches!(
            self,
            Justification::OddDimension
                | Justification::HermitianOddComplexDim
                | Justification::DiagramParityOdd
                | Justification::ExplicitIsometryRule(_)
        )
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Justification::OddDimension => "OddDimension",
            Justification::HermitianOddComplexDim => "HermitianOddComplexDim",
            Justification::DiagramParityOdd => "DiagramParityOdd",
            Justification::ExplicitIsometryRule(_) => "ExplicitIsometryRule",
            Justification::NonzeroPontrjaginNumber(_) => "NonzeroPontrjaginNumber",
            Justification::NonzeroSignature => "NonzeroSignature",
            Justification::AllAutomorphismsPreserve(_) => "AllAutomorphismsPreserve",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub justification: Justification,
}

impl Classification {
    fn or(justification: Justification) -> Self {
        debug_assert!(justification.is_existence());
        Classification {
            verdict: Verdict::OR,
            justification,
        }
    }

    fn op(justification: Justification) -> Self {
        debug_assert!(!justification.is_existence());
        Classification {
            verdict: Verdict::OP,
            justification,
        }
    }
}

fn ones(k: u32) -> Vec<u32> {
    vec![1; k as usize]
}

/// Classify a symmetric space: does it admit an orientation-reversing
/// isometry?
pub fn classify(space: &SpaceId) -> Result<Classification> {
    spaces::dimension(space)?; // parameter validation
    Ok(match *space {
        SpaceId::AI(n) => match n % 4 {
            0 | 3 => Classification::or(Justification::OddDimension),
            2 => Classification::or(Justification::ExplicitIsometryRule(
                "conjugation by diag(1,...,1,-1)".into(),
            )),
            _ => Classification::op(Justification::AllAutomorphismsPreserve(
                "outer automorphisms generated by the Cartan involution, which preserves \
                 orientation when n = 1 mod 4"
                    .into(),
            )),
        },
        SpaceId::AII(n) => {
            if n % 2 == 0 {
                Classification::or(Justification::OddDimension)
            } else {
                Classification::op(Justification::AllAutomorphismsPreserve(
                    "outer automorphisms generated by the Cartan involution, which preserves \
                     orientation in even dimension"
                        .into(),
                ))
            }
        }
        SpaceId::AIII(p, q) => {
            if (p * q) % 2 == 1 {
                Classification::or(Justification::HermitianOddComplexDim)
            } else {
                Classification::op(Justification::NonzeroSignature)
            }
        }
        SpaceId::BDI(p, q) => {
            let both_even = p % 2 == 0 && q % 2 == 0;
            if p % 2 == 1 && q % 2 == 1 {
                Classification::or(Justification::OddDimension)
            } else if !both_even {
                Classification::or(Justification::ExplicitIsometryRule(
                    "conjugation by diag(1,...,1,-1): B -> B D on the tangent space".into(),
                ))
            } else if p == q && p % 4 == 2 {
                Classification::or(Justification::ExplicitIsometryRule(
                    "conjugation by the block swap J: B -> -B^T on the tangent space".into(),
                ))
            } else if (p * q) % 8 == 0 {
                Classification::op(Justification::NonzeroSignature)
            } else {
                // p = q = 2 mod 4 with p != q
                Classification::op(Justification::NonzeroPontrjaginNumber(ones(p * q / 4)))
            }
        }
        SpaceId::DIII(n) => {
            let d = n * (n - 1) / 2;
            if d % 2 == 1 {
                Classification::or(Justification::HermitianOddComplexDim)
            } else {
                Classification::op(Justification::NonzeroPontrjaginNumber(ones(d / 2)))
            }
        }
        SpaceId::CI(n) => {
            let d = n * (n + 1) / 2;
            if d % 2 == 1 {
                Classification::or(Justification::HermitianOddComplexDim)
            } else {
                Classification::op(Justification::NonzeroPontrjaginNumber(ones(d / 2)))
            }
        }
        SpaceId::CII(p, q) => {
            if p == q && p % 2 == 1 {
                Classification::or(Justification::ExplicitIsometryRule(
                    "conjugation by the block swap J of the two quaternionic factors".into(),
                ))
            } else if (p * q) % 2 == 0 {
                Classification::op(Justification::NonzeroSignature)
            } else {
                Classification::op(Justification::NonzeroPontrjaginNumber(ones(p * q)))
            }
        }
        SpaceId::EIII => Classification::op(Justification::NonzeroSignature),
        SpaceId::EVII => Classification::or(Justification::HermitianOddComplexDim),
        SpaceId::FII => Classification::op(Justification::NonzeroPontrjaginNumber(vec![4])),
        SpaceId::G2SO4 => Classification::op(Justification::NonzeroPontrjaginNumber(vec![2])),
        SpaceId::TypeIV(label, rank) => rootsys::classify_type4(label, rank as usize)?,
    })
}

/// The set of degrees maps can have: {0}, {0, +d, -d}, or {0, ed} with a
/// single undetermined sign e.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignMode {
    /// delta = 0: only the zero degree occurs.
    ZeroOnly,
    /// Both +delta and -delta occur.
    Both,
    /// Exactly one of +delta, -delta occurs; which one is not determined
    /// by the input data.
    OneIndeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSet {
    pub delta: u64,
    pub signs: SignMode,
}

impl DegreeSet {
    /// The explicitly representable degrees; the indeterminate case lists
    /// only 0 and reports the magnitude separately.
    pub fn known_degrees(&self) -> Vec<i64> {
        match self.signs {
            SignMode::ZeroOnly => vec![0],
            SignMode::Both => vec![0, self.delta as i64, -(self.delta as i64)],
            SignMode::OneIndeterminate => vec![0],
        }
    }

    /// True when `other`'s resolved degrees are contained in `self`'s,
    /// for any resolution of the indeterminate sign.
    pub fn contains(&self, other: &DegreeSet) -> bool {
        match other.signs {
            SignMode::ZeroOnly => true,
            SignMode::Both => self.signs == SignMode::Both && self.delta == other.delta,
            SignMode::OneIndeterminate => self.delta == other.delta && self.signs != SignMode::ZeroOnly,
        }
    }
}

impl std::fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.signs {
            SignMode::ZeroOnly => write!(f, "{{0}}"),
            SignMode::Both => write!(f, "{{0, +{}, -{}}}", self.delta, self.delta),
            SignMode::OneIndeterminate => write!(f, "{{0, e*{}}} with e in {{+1,-1}} unknown", self.delta),
        }
    }
}

/// Admissible Brouwer degrees given the forced covering index `delta` and
/// the orientation verdict of the source space.
pub fn degree_set(delta: u64, or_status: Verdict) -> DegreeSet {
    if delta == 0 {
        DegreeSet {
            delta: 0,
            signs: SignMode::ZeroOnly,
        }
    } else {
        DegreeSet {
            delta,
            signs: match or_status {
                Verdict::OR => SignMode::Both,
                Verdict::OP => SignMode::OneIndeterminate,
            },
        }
    }
}

/// The only possible index of a finite-index subgroup of Lambda isomorphic
/// to Gamma, from the Euler-characteristic relation
/// chi(Lambda) [Lambda : Lambda'] = chi(Lambda'). Returns 0 when the ratio
/// is not a positive integer (no such subgroup can exist). A positive
/// return is a candidate only: existence of the subgroup is not decided.
pub fn minimal_index_candidate(chi_gamma: i64, chi_lambda: i64) -> Result<u64> {
    if chi_gamma == 0 || chi_lambda == 0 {
        return Err(Error::ZeroEulerCharacteristic);
    }
    if chi_gamma % chi_lambda == 0 && chi_gamma.signum() == chi_lambda.signum() {
        Ok((chi_gamma / chi_lambda) as u64)
    } else {
        Ok(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FixedPointStatus {
    /// Every continuous self-map has a fixed point.
    HasFPP,
    /// The identity is homotopic to a fixed-point-free diffeomorphism.
    AdmitsFixedPointFreeDiffeo,
    /// The supplied hypotheses do not decide the question.
    Unknown,
}

/// Fixed-point certificate for a compact locally symmetric space modeled
/// on `space`. The group-theoretic hypotheses are caller-supplied flags:
/// real rank at least 2, Aut(G) = G, the lattice cocompact, and the
/// normalizer of the lattice equal to the lattice.
pub fn fixed_point_certificate(
    space: &SpaceId,
    rank_at_least_2: bool,
    out_trivial: bool,
    cocompact: bool,
    normalizer_equals_lattice: bool,
) -> Result<FixedPointStatus> {
    let chi = cohomology::euler_characteristic(space)?;
    if chi == 0 {
        // flow along a nowhere-vanishing vector field
        return Ok(FixedPointStatus::AdmitsFixedPointFreeDiffeo);
    }
    if rank_at_least_2 && out_trivial && cocompact && normalizer_equals_lattice {
        return Ok(FixedPointStatus::HasFPP);
    }
    if !normalizer_equals_lattice {
        // a nontrivial deck transformation of the normalizer covering
        return Ok(FixedPointStatus::AdmitsFixedPointFreeDiffeo);
    }
    Ok(FixedPointStatus::Unknown)
}

/// The golden classification table: a flat transcription of the published
/// per-family congruence conditions, kept independent of [`classify`]'s
/// rule dispatch so that regressions in either are caught.
///
/// One published row is corrected here: for the oriented Grassmannians the
/// table's "OP iff 2|p, 2|q, 8|pq" contradicts the text it summarizes
/// (and the Hermitian rule at p = 2), which also obstructs the case
/// p = q = 2 mod 4 with p distinct from q via a nonzero power of the first
/// Pontrjagin class. The golden table carries the corrected row: OP exactly
/// when both parameters are even and not(p = q = 2 mod 4).
pub fn golden_verdict(space: &SpaceId) -> Option<Verdict> {
    let or = Some(Verdict::OR);
    let op = Some(Verdict::OP);
    match *space {
        SpaceId::AI(n) => {
            if n % 4 == 1 {
                op
            } else {
                or
            }
        }
        SpaceId::AII(n) => {
            if n % 2 == 0 {
                or
            } else {
                op
            }
        }
        SpaceId::AIII(p, q) => {
            if (p * q) % 2 == 1 {
                or
            } else {
                op
            }
        }
        SpaceId::BDI(p, q) => {
            let both_even = p % 2 == 0 && q % 2 == 0;
            if both_even && !(p == q && p % 4 == 2) {
                op
            } else {
                or
            }
        }
        SpaceId::DIII(n) => {
            if n % 4 == 2 || n % 4 == 3 {
                or
            } else {
                op
            }
        }
        SpaceId::CI(n) => {
            if n % 4 == 1 || n % 4 == 2 {
                or
            } else {
                op
            }
        }
        SpaceId::CII(p, q) => {
            if p == q && p % 2 == 1 {
                or
            } else {
                op
            }
        }
        SpaceId::EIII => op,
        SpaceId::EVII => or,
        SpaceId::FII => op,
        SpaceId::G2SO4 => op,
        SpaceId::TypeIV(label, rank) => {
            // the complex-type characterization, with closed-form group
            // dimensions so the golden row stays independent of the
            // reflection-closure machinery
            let r = rank as usize;
            let dim = match label {
                crate::rootsys::TypeLabel::A => r * (r + 2),
                crate::rootsys::TypeLabel::B | crate::rootsys::TypeLabel::C => r * (2 * r + 1),
                crate::rootsys::TypeLabel::D => r * (2 * r - 1),
                crate::rootsys::TypeLabel::G2 => 14,
                crate::rootsys::TypeLabel::F4 => 52,
                crate::rootsys::TypeLabel::E6 => 78,
                crate::rootsys::TypeLabel::E7 => 133,
                crate::rootsys::TypeLabel::E8 => 248,
            };
            let n = r + 1;
            let su_rule =
                label == crate::rootsys::TypeLabel::A && (n % 4 == 0 || n % 4 == 3);
            let so_rule = label == crate::rootsys::TypeLabel::D && r >= 3; // so(6) = su(4)
            if dim % 2 == 1 || su_rule || so_rule {
                or
            } else {
                op
            }
        }
    }
}

/// Default parameter sweep for the table reproduction: smallest valid
/// values plus enough cases to hit every congruence class of every row.
pub fn table1_default_sweep() -> Vec<SpaceId> {
    let mut out = Vec::new();
    for n in 3..=10 {
        out.push(SpaceId::AI(n));
    }
    for n in 2..=5 {
        out.push(SpaceId::AII(n));
    }
    for p in 1..=3 {
        for q in p..=4 {
            out.push(SpaceId::AIII(p, q));
        }
    }
    for p in 2..=6 {
        for q in 2..=6 {
            if p + q > 4 {
                out.push(SpaceId::BDI(p, q));
            }
        }
    }
    for n in 3..=10 {
        out.push(SpaceId::DIII(n));
    }
    for n in 2..=9 {
        out.push(SpaceId::CI(n));
    }
    for p in 1..=3 {
        for q in p..=4 {
            out.push(SpaceId::CII(p, q));
        }
    }
    out.push(SpaceId::EIII);
    out.push(SpaceId::EVII);
    out.push(SpaceId::FII);
    out.push(SpaceId::G2SO4);
    // the complex-type block: every label, all residues of the su rule
    for r in 1..=8 {
        out.push(SpaceId::TypeIV(crate::rootsys::TypeLabel::A, r));
    }
    for r in 2..=3 {
        out.push(SpaceId::TypeIV(crate::rootsys::TypeLabel::B, r));
        out.push(SpaceId::TypeIV(crate::rootsys::TypeLabel::C, r));
    }
    for r in 3..=5 {
        out.push(SpaceId::TypeIV(crate::rootsys::TypeLabel::D, r));
    }
    out.push(SpaceId::TypeIV(crate::rootsys::TypeLabel::G2, 2));
    out.push(SpaceId::TypeIV(crate::rootsys::TypeLabel::F4, 4));
    out.push(SpaceId::TypeIV(crate::rootsys::TypeLabel::E6, 6));
    out.push(SpaceId::TypeIV(crate::rootsys::TypeLabel::E7, 7));
    out.push(SpaceId::TypeIV(crate::rootsys::TypeLabel::E8, 8));
    out
}
