//! Catalog of irreducible symmetric-space families: parameter validation,
//! dimensions, and the root-theoretic description of the compact dual
//! pair (U, K).
//!
//! `BDI(p, q)` denotes the oriented real Grassmannian of p-planes in
//! (p+q)-space throughout. Type IV spaces are identified by their compact
//! form alone.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, RootSystem, TypeLabel};

/// Identifier of a symmetric-space family with its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpaceId {
    /// SU(n)/SO(n), n > 2.
    AI(u32),
    /// SU(2n)/Sp(n), n >= 2.
    AII(u32),
    /// Complex Grassmannian of p-planes in C^(p+q).
    AIII(u32, u32),
    /// Oriented real Grassmannian of p-planes in R^(p+q).
    BDI(u32, u32),
    /// SO(2n)/U(n), n >= 3.
    DIII(u32),
    /// Sp(n)/U(n), n >= 2.
    CI(u32),
    /// Quaternionic Grassmannian of p-planes in H^(p+q).
    CII(u32, u32),
    /// E6/(Spin(10) x U(1)).
    EIII,
    /// E7/(E6 x U(1)).
    EVII,
    /// The Cayley plane F4/Spin(9).
    FII,
    /// G2/SO(4).
    G2SO4,
    /// Complex-type space with compact form of the given simple type.
    TypeIV(TypeLabel, u32),
}

impl SpaceId {
    pub fn family(&self) -> &'static str {
        match self {
            SpaceId::AI(_) => "AI",
            SpaceId::AII(_) => "AII",
            SpaceId::AIII(_, _) => "AIII",
            SpaceId::BDI(_, _) => "BDI",
            SpaceId::DIII(_) => "DIII",
            SpaceId::CI(_) => "CI",
            SpaceId::CII(_, _) => "CII",
            SpaceId::EIII => "EIII",
            SpaceId::EVII => "EVII",
            SpaceId::FII => "FII",
            SpaceId::G2SO4 => "G",
            SpaceId::TypeIV(_, _) => "TypeIV",
        }
    }

    pub fn params(&self) -> Vec<u32> {
        match *self {
            SpaceId::AI(n) | SpaceId::AII(n) | SpaceId::DIII(n) | SpaceId::CI(n) => vec![n],
            SpaceId::AIII(p, q) | SpaceId::BDI(p, q) | SpaceId::CII(p, q) => vec![p, q],
            SpaceId::TypeIV(_, r) => vec![r],
            _ => vec![],
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpaceId::AI(n) => write!(f, "AI:{n}"),
            SpaceId::AII(n) => write!(f, "AII:{n}"),
            SpaceId::AIII(p, q) => write!(f, "AIII:{p},{q}"),
            SpaceId::BDI(p, q) => write!(f, "BDI:{p},{q}"),
            SpaceId::DIII(n) => write!(f, "DIII:{n}"),
            SpaceId::CI(n) => write!(f, "CI:{n}"),
            SpaceId::CII(p, q) => write!(f, "CII:{p},{q}"),
            SpaceId::EIII => write!(f, "EIII"),
            SpaceId::EVII => write!(f, "EVII"),
            SpaceId::FII => write!(f, "FII"),
            SpaceId::G2SO4 => write!(f, "G"),
            SpaceId::TypeIV(l, r) => write!(f, "TypeIV:{},{r}", l.as_str()),
        }
    }
}

/// Parse the CLI grammar `FAMILY[:param[,param]]` (case-insensitive tags).
impl FromStr for SpaceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpaceId> {
        let bad = |msg: &str| Error::InvalidType(format!("cannot parse space '{s}': {msg}"));
        let (tag, rest) = match s.split_once(':') {
            Some((t, r)) => (t.trim(), Some(r.trim())),
            None => (s.trim(), None),
        };
        let params: Vec<&str> = match rest {
            None | Some("") => vec![],
            Some(r) => r.split(',').map(str::trim).collect(),
        };
        let int = |i: usize| -> Result<u32> {
            params
                .get(i)
                .ok_or_else(|| bad("missing parameter"))?
                .parse::<u32>()
                .map_err(|_| bad("parameter is not a positive integer"))
        };
        let arity = |n: usize| -> Result<()> {
            if params.len() == n {
                Ok(())
            } else {
                Err(bad(&format!("expected {n} parameter(s), got {}", params.len())))
            }
        };
        match tag.to_ascii_uppercase().as_str() {
            "AI" => {
                arity(1)?;
                Ok(SpaceId::AI(int(0)?))
            }
            "AII" => {
                arity(1)?;
                Ok(SpaceId::AII(int(0)?))
            }
            "AIII" => {
                arity(2)?;
                Ok(SpaceId::AIII(int(0)?, int(1)?))
            }
            "BDI" => {
                arity(2)?;
                Ok(SpaceId::BDI(int(0)?, int(1)?))
            }
            "DIII" => {
                arity(1)?;
                Ok(SpaceId::DIII(int(0)?))
            }
            "CI" => {
                arity(1)?;
                Ok(SpaceId::CI(int(0)?))
            }
            "CII" => {
                arity(2)?;
                Ok(SpaceId::CII(int(0)?, int(1)?))
            }
            "EIII" => {
                arity(0)?;
                Ok(SpaceId::EIII)
            }
            "EVII" => {
                arity(0)?;
                Ok(SpaceId::EVII)
            }
            "FII" => {
                arity(0)?;
                Ok(SpaceId::FII)
            }
            "G" | "G2SO4" => {
                arity(0)?;
                Ok(SpaceId::G2SO4)
            }
            "TYPEIV" => {
                arity(2)?;
                let label = TypeLabel::parse(params[0])
                    .ok_or_else(|| bad("unknown simple type label"))?;
                Ok(SpaceId::TypeIV(label, int(1)?))
            }
            _ => Err(bad("unknown family tag")),
        }
    }
}

/// One irreducible building block of the isotropy group K, with the
/// ambient coordinates (or root directions) it acts on. Orthogonal pieces
/// tensor to the full K-invariant ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KPiece {
    /// U(1) factor along a single ambient coordinate.
    TorusCoord(usize),
    /// U(1) factor along an arbitrary integer direction.
    TorusDirection(Vec<i64>),
    /// Rank-1 factor whose Weyl reflection flips the given root direction.
    A1Direction(Vec<i64>),
    /// Special-unitary factor permuting the listed coordinates.
    TypeA(Vec<usize>),
    /// B- or C-type factor: all signed permutations of the coordinates.
    TypeBC(Vec<usize>),
    /// D-type factor: evenly-signed permutations of the coordinates.
    TypeD(Vec<usize>),
}

/// Root data of the compact dual pair (U, K).
#[derive(Debug, Clone)]
pub struct DualPair {
    pub space: SpaceId,
    pub u_root_system: RootSystem,
    /// Positive roots of K as a subset of the positive roots of U, in U's
    /// ambient coordinates. Empty when rank(K) < rank(U).
    pub k_positive_roots: Vec<Vec<i64>>,
    /// Fundamental invariant degrees of each simple factor of K.
    pub k_factor_degrees: Vec<Vec<u64>>,
    pub k_torus_rank: usize,
    /// Structured description of K for the invariant-theoretic
    /// constructions; populated for the ambient-construction families
    /// (BDI equal rank, G2SO4, FII).
    pub k_pieces: Vec<KPiece>,
    pub equal_rank: bool,
    pub real_dimension: usize,
    pub complex_dimension: Option<usize>,
    pub hermitian: bool,
}

impl DualPair {
    pub fn k_weyl_order(&self) -> u64 {
        self.k_factor_degrees
            .iter()
            .map(|d| d.iter().product::<u64>())
            .product()
    }

    /// Positive roots of U not in K, as ambient linear forms.
    pub fn complementary_roots(&self) -> Vec<Vec<i64>> {
        self.u_root_system
            .positive_roots()
            .iter()
            .filter(|r| !self.k_positive_roots.contains(r))
            .cloned()
            .collect()
    }
}

fn invalid(space: &SpaceId, bound: &str) -> Error {
    Error::InvalidParameters {
        space: space.to_string(),
        bound: bound.to_string(),
    }
}

fn degrees_a(rank: usize) -> Vec<u64> {
    (2..=rank as u64 + 1).collect()
}

fn degrees_bc(rank: usize) -> Vec<u64> {
    (1..=rank as u64).map(|i| 2 * i).collect()
}

fn degrees_d(rank: usize) -> Vec<u64> {
    let mut d: Vec<u64> = (1..rank as u64).map(|i| 2 * i).collect();
    d.push(rank as u64);
    d.sort();
    d
}

/// Positive roots e_i - e_j (i < j) over the listed coordinates.
fn a_type_roots(coords: &[usize], dim: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for (a, &i) in coords.iter().enumerate() {
        for &j in &coords[a + 1..] {
            let mut v = vec![0i64; dim];
            v[i] = 1;
            v[j] = -1;
            out.push(v);
        }
    }
    out
}

/// D-type positive roots e_i +- e_j (i < j) over the listed coordinates.
fn d_type_roots(coords: &[usize], dim: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for (a, &i) in coords.iter().enumerate() {
        for &j in &coords[a + 1..] {
            for s in [-1i64, 1] {
                let mut v = vec![0i64; dim];
                v[i] = 1;
                v[j] = s;
                out.push(v);
            }
        }
    }
    out
}

/// B-type positive roots over the listed coordinates: e_i +- e_j and e_i.
fn b_type_roots(coords: &[usize], dim: usize) -> Vec<Vec<i64>> {
    let mut out = d_type_roots(coords, dim);
    for &i in coords {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        out.push(v);
    }
    out
}

/// C-type positive roots over the listed coordinates: e_i +- e_j and 2e_i.
fn c_type_roots(coords: &[usize], dim: usize) -> Vec<Vec<i64>> {
    let mut out = d_type_roots(coords, dim);
    for &i in coords {
        let mut v = vec![0i64; dim];
        v[i] = 2;
        out.push(v);
    }
    out
}

/// Append the K-factor data of one special-orthogonal block SO(m) acting
/// on `coords` (m = 2|coords| or 2|coords|+1 according to `odd`).
fn push_so_factor(
    coords: &[usize],
    odd: bool,
    dim: usize,
    roots: &mut Vec<Vec<i64>>,
    factor_degrees: &mut Vec<Vec<u64>>,
    torus_rank: &mut usize,
    pieces: &mut Vec<KPiece>,
) {
    let r = coords.len();
    if odd {
        // SO(2r+1) = B_r; SO(1) is trivial
        if r >= 1 {
            roots.extend(b_type_roots(coords, dim));
            factor_degrees.push(degrees_bc(r));
            pieces.push(KPiece::TypeBC(coords.to_vec()));
        }
    } else if r == 1 {
        // SO(2) is a torus
        *torus_rank += 1;
        pieces.push(KPiece::TorusCoord(coords[0]));
    } else if r >= 2 {
        roots.extend(d_type_roots(coords, dim));
        factor_degrees.push(degrees_d(r));
        pieces.push(KPiece::TypeD(coords.to_vec()));
    }
}

/// Validate the parameters of a space and return its dual-pair root data.
pub fn validate(space: &SpaceId) -> Result<DualPair> {
    let real_dimension = dimension(space)?;
    match *space {
        SpaceId::AI(n) => {
            let u = build_root_system(TypeLabel::A, n as usize - 1)?;
            Ok(DualPair {
                space: *space,
                u_root_system: u,
                k_positive_roots: vec![],
                k_factor_degrees: vec![if n % 2 == 1 {
                    degrees_bc((n as usize - 1) / 2)
                } else {
                    degrees_d(n as usize / 2)
                }],
                k_torus_rank: 0,
                k_pieces: vec![],
                equal_rank: false,
                real_dimension,
                complex_dimension: None,
                hermitian: false,
            })
        }
        SpaceId::AII(n) => {
            let u = build_root_system(TypeLabel::A, 2 * n as usize - 1)?;
            Ok(DualPair {
                space: *space,
                u_root_system: u,
                k_positive_roots: vec![],
                k_factor_degrees: vec![degrees_bc(n as usize)],
                k_torus_rank: 0,
                k_pieces: vec![],
                equal_rank: false,
                real_dimension,
                complex_dimension: None,
                hermitian: false,
            })
        }
        SpaceId::AIII(p, q) => {
            let (p, q) = (p as usize, q as usize);
            let u = build_root_system(TypeLabel::A, p + q - 1)?;
            let dim = p + q;
            let left: Vec<usize> = (0..p).collect();
            let right: Vec<usize> = (p..p + q).collect();
            let mut k_roots = a_type_roots(&left, dim);
            k_roots.extend(a_type_roots(&right, dim));
            let mut k_factor_degrees = Vec::new();
            if p >= 2 {
                k_factor_degrees.push(degrees_a(p - 1));
            }
            if q >= 2 {
                k_factor_degrees.push(degrees_a(q - 1));
            }
            Ok(DualPair {
                space: *space,
                u_root_system: u,
                k_positive_roots: k_roots,
                k_factor_degrees,
                k_torus_rank: 1,
                k_pieces: vec![],
                equal_rank: true,
                real_dimension,
                complex_dimension: Some(p * q),
                hermitian: true,
            })
        }
        SpaceId::BDI(p, q) => {
            let (p, q) = (p as usize, q as usize);
            let total = p + q;
            let both_odd = p % 2 == 1 && q % 2 == 1;
            let u = if total % 2 == 0 {
                build_root_system(TypeLabel::D, total / 2)?
            } else {
                build_root_system(TypeLabel::B, (total - 1) / 2)?
            };
            let dim = u.ambient_dim();
            let mut k_roots = Vec::new();
            let mut k_factor_degrees = Vec::new();
            let mut torus = 0usize;
            let mut pieces = Vec::new();
            let equal_rank = !both_odd;
            if equal_rank {
                // even block on the leading coordinates, odd block trailing
                let (even_m, odd_m) = if p % 2 == 0 { (p, q) } else { (q, p) };
                let a = even_m / 2;
                let first: Vec<usize> = (0..a).collect();
                let rest: Vec<usize> = (a..dim).collect();
                push_so_factor(
                    &first,
                    false,
                    dim,
                    &mut k_roots,
                    &mut k_factor_degrees,
                    &mut torus,
                    &mut pieces,
                );
                if odd_m % 2 == 1 {
                    push_so_factor(
                        &rest,
                        true,
                        dim,
                        &mut k_roots,
                        &mut k_factor_degrees,
                        &mut torus,
                        &mut pieces,
                    );
                } else {
                    push_so_factor(
                        &rest,
                        false,
                        dim,
                        &mut k_roots,
                        &mut k_factor_degrees,
                        &mut torus,
                        &mut pieces,
                    );
                }
            } else {
                // rank deficit: K-roots are not a subsystem of U's
                k_factor_degrees.push(degrees_bc((p - 1) / 2));
                k_factor_degrees.push(degrees_bc((q - 1) / 2));
            }
            let hermitian = p == 2 || q == 2;
            Ok(DualPair {
                space: *space,
                u_root_system: u,
                k_positive_roots: k_roots,
                k_factor_degrees,
                k_torus_rank: torus,
                k_pieces: pieces,
                equal_rank,
                real_dimension,
                complex_dimension: if hermitian { Some(real_dimension / 2) } else { None },
                hermitian,
            })
        }
        SpaceId::DIII(n) => {
            let n = n as usize;
            let u = build_root_system(TypeLabel::D, n)?;
            let coords: Vec<usize> = (0..n).collect();
            Ok(DualPair {
                space: *space,
                u_root_system: u,
                k_positive_roots: a_type_roots(&coords, n),
                k_factor_degrees: vec![degrees_a(n - 1)],
                k_torus_rank: 1,
                k_pieces: vec![],
                equal_rank: true,
                real_dimension,
                complex_dimension: Some(n * (n - 1) / 2),
                hermitian: true,
            })
        }
        SpaceId::CI(n) => {
            let n = n as usize;
            let u = build_root_system(TypeLabel::C, n)?;
            let coords: Vec<usize> = (0..n).collect();
            Ok(DualPair {
                space: *space,
                u_root_system: u,
                k_positive_roots: a_type_roots(&coords, n),
                k_factor_degrees: vec![degrees_a(n - 1)],
                k_torus_rank: 1,
                k_pieces: vec![],
                equal_rank: true,
                real_dimension,
                complex_dimension: Some(n * (n + 1) / 2),
                hermitian: true,
            })
        }
        SpaceId::CII(p, q) => {
            let (p, q) = (p as usize, q as usize);
            let u = build_root_system(TypeLabel::C, p + q)?;
            let dim = p + q;
            let left: Vec<usize> = (0..p).collect();
            let right: Vec<usize> = (p..p + q).collect();
            let mut k_roots = c_type_roots(&left, dim);
            k_roots.extend(c_type_roots(&right, dim));
            Ok(DualPair {
                space: *space,
                u_root_system: u,
                k_positive_roots: k_roots,
                k_factor_degrees: vec![degrees_bc(p), degrees_bc(q)],
                k_torus_rank: 0,
                k_pieces: vec![KPiece::TypeBC(left), KPiece::TypeBC(right)],
                equal_rank: true,
                real_dimension,
                complex_dimension: None,
                hermitian: false,
            })
        }
        SpaceId::EIII => {
            let u = build_root_system(TypeLabel::E6, 6)?;
            // K = Spin(10) x U(1): the D5 subsystem spanned by all simple
            // roots except the first
            let k_roots = subsystem_omitting(&u, 0);
            Ok(DualPair {
                space: *space,
                u_root_system: u,
                k_positive_roots: k_roots,
                k_factor_degrees: vec![degrees_d(5)],
                k_torus_rank: 1,
                k_pieces: vec![],
                equal_rank: true,
                real_dimension,
                complex_dimension: Some(16),
                hermitian: true,
            })
        }
        SpaceId::EVII => {
            let u = build_root_system(TypeLabel::E7, 7)?;
            let k_roots = subsystem_omitting(&u, 6);
            Ok(DualPair {
                space: *space,
                u_root_system: u,
                k_positive_roots: k_roots,
                k_factor_degrees: vec![vec![2, 5, 6, 8, 9, 12]],
                k_torus_rank: 1,
                k_pieces: vec![],
                equal_rank: true,
                real_dimension,
                complex_dimension: Some(27),
                hermitian: true,
            })
        }
        SpaceId::FII => {
            let u = build_root_system(TypeLabel::F4, 4)?;
            // K = Spin(9) = B4: the roots with all coordinates even in the
            // doubled realization (long roots and the short e_i)
            let k_roots: Vec<Vec<i64>> = u
                .positive_roots()
                .iter()
                .filter(|r| r.iter().all(|&c| c % 2 == 0))
                .cloned()
                .collect();
            Ok(DualPair {
                space: *space,
                u_root_system: u,
                k_positive_roots: k_roots,
                k_factor_degrees: vec![degrees_bc(4)],
                k_torus_rank: 0,
                k_pieces: vec![KPiece::TypeBC((0..4).collect())],
                equal_rank: true,
                real_dimension,
                complex_dimension: None,
                hermitian: false,
            })
        }
        SpaceId::G2SO4 => {
            let u = build_root_system(TypeLabel::G2, 2)?;
            // K = SO(4): the A1 x A1 subsystem of a long and an orthogonal
            // short root; alpha1 = e1-e2 and the long root 2e3-e1-e2
            let short = vec![1i64, -1, 0];
            let long = vec![-1i64, -1, 2];
            let k_roots = vec![short.clone(), long.clone()];
            Ok(DualPair {
                space: *space,
                u_root_system: u,
                k_positive_roots: k_roots,
                k_factor_degrees: vec![vec![2], vec![2]],
                k_torus_rank: 0,
                k_pieces: vec![
                    KPiece::A1Direction(short),
                    KPiece::A1Direction(long),
                    KPiece::TorusDirection(vec![1, 1, 1]),
                ],
                equal_rank: true,
                real_dimension,
                complex_dimension: None,
                hermitian: false,
            })
        }
        SpaceId::TypeIV(label, rank) => {
            let k = build_root_system(label, rank as usize)?;
            Ok(DualPair {
                space: *space,
                u_root_system: k,
                k_positive_roots: vec![],
                k_factor_degrees: vec![],
                k_torus_rank: 0,
                k_pieces: vec![],
                equal_rank: false,
                real_dimension,
                complex_dimension: None,
                hermitian: false,
            })
        }
    }
}

/// Positive roots supported away from one simple root: the subsystem
/// generated by the remaining nodes.
fn subsystem_omitting(u: &RootSystem, node: usize) -> Vec<Vec<i64>> {
    u.positive_roots()
        .iter()
        .zip(u.simple_coordinates())
        .filter(|(_, sc)| sc[node] == 0)
        .map(|(r, _)| r.clone())
        .collect()
}

/// Real dimension of the space, by the closed forms; validates parameters.
pub fn dimension(space: &SpaceId) -> Result<usize> {
    match *space {
        SpaceId::AI(n) => {
            if n <= 2 {
                return Err(invalid(space, "requires n > 2"));
            }
            let n = n as usize;
            Ok((n + 2) * (n - 1) / 2)
        }
        SpaceId::AII(n) => {
            if n < 2 {
                return Err(invalid(space, "requires n >= 2"));
            }
            let n = n as usize;
            Ok((n - 1) * (2 * n + 1))
        }
        SpaceId::AIII(p, q) => {
            if p < 1 || q < 1 {
                return Err(invalid(space, "requires p, q >= 1"));
            }
            Ok(2 * (p * q) as usize)
        }
        SpaceId::BDI(p, q) => {
            if p <= 1 || q <= 1 || p + q <= 4 {
                return Err(invalid(space, "requires p, q > 1 and p + q > 4"));
            }
            Ok((p * q) as usize)
        }
        SpaceId::DIII(n) => {
            if n < 3 {
                return Err(invalid(space, "requires n >= 3"));
            }
            let n = n as usize;
            Ok(n * (n - 1))
        }
        SpaceId::CI(n) => {
            if n < 2 {
                return Err(invalid(space, "requires n >= 2"));
            }
            let n = n as usize;
            Ok(n * (n + 1))
        }
        SpaceId::CII(p, q) => {
            if p < 1 || q < 1 {
                return Err(invalid(space, "requires p, q >= 1"));
            }
            Ok(4 * (p * q) as usize)
        }
        SpaceId::EIII => Ok(32),
        SpaceId::EVII => Ok(54),
        SpaceId::FII => Ok(16),
        SpaceId::G2SO4 => Ok(8),
        SpaceId::TypeIV(label, rank) => {
            let k = build_root_system(label, rank as usize)?;
            Ok(k.group_dimension())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "AI:5", "AII:3", "AIII:2,3", "BDI:4,4", "DIII:6", "CI:3", "CII:1,2", "EIII", "EVII",
            "FII", "G", "TypeIV:A,6",
        ] {
            let id: SpaceId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        // case-insensitive tags, optional trailing colon on no-param families
        assert_eq!("diii:6".parse::<SpaceId>().unwrap(), SpaceId::DIII(6));
        assert_eq!("EIII:".parse::<SpaceId>().unwrap(), SpaceId::EIII);
        assert_eq!("g2so4".parse::<SpaceId>().unwrap(), SpaceId::G2SO4);
        assert!("AIII:2".parse::<SpaceId>().is_err());
        assert!("XY:1".parse::<SpaceId>().is_err());
        assert!("AIII:2,x".parse::<SpaceId>().is_err());
    }

    #[test]
    fn parameter_bounds() {
        assert!(validate(&SpaceId::AI(2)).is_err());
        assert!(validate(&SpaceId::AI(3)).is_ok());
        assert!(validate(&SpaceId::AII(1)).is_err());
        assert!(validate(&SpaceId::AIII(0, 2)).is_err());
        assert!(validate(&SpaceId::BDI(1, 5)).is_err());
        assert!(validate(&SpaceId::BDI(2, 2)).is_err());
        assert!(validate(&SpaceId::BDI(2, 3)).is_ok());
        assert!(validate(&SpaceId::DIII(2)).is_err());
        assert!(validate(&SpaceId::DIII(3)).is_ok());
        assert!(validate(&SpaceId::CI(1)).is_err());
        assert!(validate(&SpaceId::CI(2)).is_ok());
        assert!(validate(&SpaceId::CII(0, 1)).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&SpaceId::EVII).unwrap(), 54);
        assert_eq!(validate(&SpaceId::EVII).unwrap().complex_dimension, Some(27));
        assert_eq!(dimension(&SpaceId::AII(2)).unwrap(), 5);
        assert_eq!(dimension(&SpaceId::AI(3)).unwrap(), 5);
        assert_eq!(dimension(&SpaceId::AIII(2, 2)).unwrap(), 8);
        assert_eq!(dimension(&SpaceId::DIII(4)).unwrap(), 12);
        assert_eq!(validate(&SpaceId::DIII(4)).unwrap().complex_dimension, Some(6));
    }

    #[test]
    fn spec_validate_examples() {
        let d = validate(&SpaceId::AIII(2, 2)).unwrap();
        assert!(d.equal_rank);
        assert_eq!(d.real_dimension, 8);
        assert_eq!(d.complex_dimension, Some(4));

        let d = validate(&SpaceId::BDI(3, 2)).unwrap();
        assert!(d.equal_rank);
        assert_eq!(d.real_dimension, 6);

        let d = validate(&SpaceId::BDI(3, 3)).unwrap();
        assert!(!d.equal_rank);
    }

    #[test]
    fn equal_rank_dimension_bookkeeping() {
        // real dimension = 2 |complementary positive roots| for every
        // equal-rank catalog space with parameters <= 6
        let mut spaces: Vec<SpaceId> = vec![
            SpaceId::EIII,
            SpaceId::EVII,
            SpaceId::FII,
            SpaceId::G2SO4,
        ];
        for p in 1..=6u32 {
            for q in 1..=6u32 {
                spaces.push(SpaceId::AIII(p, q));
                spaces.push(SpaceId::CII(p, q));
                if p > 1 && q > 1 && p + q > 4 && (p % 2 == 0 || q % 2 == 0) {
                    spaces.push(SpaceId::BDI(p, q));
                }
            }
        }
        for n in 3..=6u32 {
            spaces.push(SpaceId::DIII(n));
            spaces.push(SpaceId::CI(n));
        }
        for s in spaces {
            let d = validate(&s).unwrap();
            assert!(d.equal_rank, "{s}");
            assert_eq!(
                d.real_dimension,
                2 * d.complementary_roots().len(),
                "space {s}"
            );
            // K positive roots really are positive roots of U
            for r in &d.k_positive_roots {
                assert!(
                    d.u_root_system.positive_roots().contains(r),
                    "space {s}: {r:?} not a positive root of U"
                );
            }
        }
    }

    #[test]
    fn hermitian_flags() {
        assert!(validate(&SpaceId::AIII(1, 1)).unwrap().hermitian);
        assert!(validate(&SpaceId::DIII(4)).unwrap().hermitian);
        assert!(validate(&SpaceId::CI(2)).unwrap().hermitian);
        assert!(validate(&SpaceId::BDI(2, 5)).unwrap().hermitian);
        assert!(validate(&SpaceId::BDI(4, 2)).unwrap().hermitian);
        assert!(validate(&SpaceId::EIII).unwrap().hermitian);
        assert!(validate(&SpaceId::EVII).unwrap().hermitian);
        assert!(!validate(&SpaceId::BDI(4, 4)).unwrap().hermitian);
        assert!(!validate(&SpaceId::CII(2, 2)).unwrap().hermitian);
        assert!(!validate(&SpaceId::G2SO4).unwrap().hermitian);
        assert!(!validate(&SpaceId::FII).unwrap().hermitian);
        assert!(!validate(&SpaceId::AI(5)).unwrap().hermitian);
    }
}
