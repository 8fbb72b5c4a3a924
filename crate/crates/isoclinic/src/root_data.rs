//! Root-system data per simple type: root counts, exponents, Coxeter numbers,
//! affine marks, regular and elliptic numbers, and slopes.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::ParityClass;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("rank {rank} is not allowed for family {family}")]
    BadRank { family: Family, rank: usize },
    #[error("unknown Lie type `{0}`")]
    UnknownType(String),
    #[error("invalid slope `{0}`")]
    BadSlope(String),
    #[error("{m} is not a regular number of {ty}")]
    NotRegular { ty: LieType, m: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl FromStr for Family {
    type Err = RootDataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "G2" => Family::G2,
            "F4" => Family::F4,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            _ => return Err(RootDataError::UnknownType(s.to_string())),
        })
    }
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }
}

/// A simple Lie type. Type A of rank `r` is the almost-simple group of `sl(r+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLieType", into = "RawLieType")]
pub struct LieType {
    family: Family,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct RawLieType {
    family: Family,
    rank: usize,
}

impl TryFrom<RawLieType> for LieType {
    type Error = RootDataError;
    fn try_from(r: RawLieType) -> Result<Self, Self::Error> {
        LieType::new(r.family, r.rank)
    }
}

impl From<LieType> for RawLieType {
    fn from(t: LieType) -> Self {
        RawLieType { family: t.family, rank: t.rank }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => write!(f, "{}{}", self.family, self.rank),
            other => write!(f, "{}", other),
        }
    }
}

impl FromStr for LieType {
    type Err = RootDataError;
    /// Accepts `B4`, `b4`, `F4`, `E8`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Ok(f) = s.parse::<Family>() {
            if let Some(r) = f.fixed_rank() {
                return LieType::new(f, r);
            }
        }
        let (head, tail) = s.split_at(1.min(s.len()));
        let family: Family = head.parse()?;
        let rank = tail
            .parse::<usize>()
            .map_err(|_| RootDataError::UnknownType(s.to_string()))?;
        LieType::new(family, rank)
    }
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDataError> {
        let ok = match family.fixed_rank() {
            Some(r) => rank == r,
            None => match family {
                Family::A => rank >= 1,
                Family::B | Family::C => rank >= 2,
                Family::D => rank >= 3,
                _ => unreachable!(),
            },
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(RootDataError::BadRank { family, rank })
        }
    }

    /// Panicking constructor for literals in tests and examples.
    pub fn of(family: Family, rank: usize) -> Self {
        LieType::new(family, rank).expect("valid Lie type")
    }

    pub fn exceptional(family: Family) -> Self {
        LieType::of(family, family.fixed_rank().expect("exceptional family"))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_classical(&self) -> bool {
        self.family.is_classical()
    }

    /// D3 is isogenous to A3.
    pub fn is_flagged(&self) -> bool {
        self.family == Family::D && self.rank == 3
    }

    /// The `n` of `A_{n−1}`, `B_n`, `C_n`, `D_n`.
    pub fn n(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// Dimension of the defining representation.
    pub fn natural_dim(&self) -> Option<usize> {
        let n = self.n();
        match self.family {
            Family::A => Some(n),
            Family::B => Some(2 * n + 1),
            Family::C | Family::D => Some(2 * n),
            _ => None,
        }
    }

    pub fn parity_class(&self) -> Option<ParityClass> {
        match self.family {
            Family::B => Some(ParityClass::B),
            Family::C => Some(ParityClass::C),
            Family::D => Some(ParityClass::D),
            _ => None,
        }
    }

    pub fn phi_count(&self) -> usize {
        let n = self.n();
        match self.family {
            Family::A => n * (n - 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::G2 => 12,
            Family::F4 => 48,
            Family::E6 => 72,
            Family::E7 => 126,
            Family::E8 => 240,
        }
    }

    pub fn dim(&self) -> usize {
        self.phi_count() + self.rank
    }

    pub fn exponents(&self) -> Vec<usize> {
        let n = self.n();
        match self.family {
            Family::A => (1..n).collect(),
            Family::B | Family::C => (0..n).map(|i| 2 * i + 1).collect(),
            Family::D => {
                let mut e: Vec<usize> = (0..n - 1).map(|i| 2 * i + 1).collect();
                e.push(n - 1);
                e
            }
            Family::G2 => vec![1, 5],
            Family::F4 => vec![1, 5, 7, 11],
            Family::E6 => vec![1, 4, 5, 7, 8, 11],
            Family::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            Family::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
        }
    }

    pub fn coxeter_number(&self) -> usize {
        self.exponents().into_iter().max().unwrap_or(0) + 1
    }

    pub fn is_regular(&self, m: u64) -> bool {
        if m == 0 {
            return false;
        }
        let n = self.n() as u64;
        let divides = |x: u64| x > 0 && x % m == 0;
        match self.family {
            Family::A => divides(n) || divides(n - 1),
            Family::B | Family::C => divides(2 * n) || divides(n),
            Family::D => divides(n) || divides(2 * n - 2) || divides(n - 1),
            _ => exceptional_regular(self.family).contains(&m),
        }
    }

    pub fn is_elliptic_regular(&self, m: u64) -> Result<bool, RootDataError> {
        if !self.is_regular(m) {
            return Err(RootDataError::NotRegular { ty: *self, m });
        }
        let n = self.n() as u64;
        Ok(match self.family {
            Family::A => m == n,
            Family::B | Family::C => m % 2 == 0 && (2 * n) % m == 0,
            Family::D => {
                (m % 2 == 0 && n % m == 0) || ((2 * n - 2) % m == 0 && ((2 * n - 2) / m) % 2 == 1)
            }
            _ => exceptional_elliptic(self.family).contains(&m),
        })
    }

    /// dim 𝔱^w for `w` regular of order `m`: the exponents divisible by `m`.
    pub fn dim_tw(&self, m: u64) -> usize {
        self.exponents().iter().filter(|&&e| e as u64 % m == 0).count()
    }

    /// Regular numbers up to the Coxeter number, ascending.
    pub fn regular_numbers(&self) -> Vec<u64> {
        (1..=2 * self.coxeter_number() as u64)
            .filter(|&m| self.is_regular(m))
            .collect()
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_matrix(self.family, self.rank)
    }

    pub fn affine_diagram(&self) -> AffineDiagram {
        AffineDiagram::new(*self)
    }
}

fn exceptional_regular(f: Family) -> &'static [u64] {
    match f {
        Family::G2 => &[1, 2, 3, 6],
        Family::F4 => &[1, 2, 3, 4, 6, 8, 12],
        Family::E6 => &[1, 2, 3, 4, 6, 8, 9, 12],
        Family::E7 => &[1, 2, 3, 6, 7, 9, 14, 18],
        Family::E8 => &[1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30],
        _ => &[],
    }
}

fn exceptional_elliptic(f: Family) -> &'static [u64] {
    match f {
        Family::G2 => &[2, 3, 6],
        Family::F4 => &[2, 3, 4, 6, 8, 12],
        Family::E6 => &[3, 6, 9, 12],
        Family::E7 => &[2, 6, 14, 18],
        Family::E8 => &[2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30],
        _ => &[],
    }
}

/// Cartan matrix `a_ij = ⟨α_i^∨, α_j⟩` in Bourbaki numbering (0-based indices).
pub fn cartan_matrix(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        Family::A | Family::B | Family::C => {
            for i in 0..rank - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..rank - 2 {
                link(i, i + 1);
            }
            link(rank - 3, rank - 1);
        }
        Family::G2 => link(0, 1),
        Family::F4 => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::E6 | Family::E7 | Family::E8 => {
            link(0, 2);
            link(1, 3);
            for i in 2..rank - 1 {
                link(i, i + 1);
            }
        }
    }
    match family {
        Family::B => a[rank - 1][rank - 2] = -2,
        Family::C => a[rank - 2][rank - 1] = -2,
        Family::F4 => a[2][1] = -2,
        Family::G2 => a[1][0] = -3,
        _ => {}
    }
    a
}

/// Positive roots as coefficient vectors in the simple roots, by height.
pub fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for j in 0..r {
                // ⟨β, α_j^∨⟩ = Σ_i c_i a_{ji}
                let pairing: i64 = (0..r).map(|i| beta[i] * cartan[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[j] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[j] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up.clone());
                        roots.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    roots
}

/// Symmetrizing weights: `d_i a_ij = d_j a_ji`, smallest positive integers.
/// Long simple roots carry the largest weight.
pub fn root_length_weights(cartan: &[Vec<i64>]) -> Vec<i64> {
    let r = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; r];
    for start in 0..r {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..r {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].expect("visited");
                    d[j] = Some(di * Ratio::new(cartan[i][j], cartan[j][i]));
                    stack.push(j);
                }
            }
        }
    }
    let lcm = d
        .iter()
        .map(|x| *x.expect("set").denom())
        .fold(1i64, |a, b| a.lcm(&b));
    d.into_iter()
        .map(|x| (x.expect("set") * lcm).to_integer())
        .collect()
}

/// The affine Dynkin diagram with marks. Node 0 is α₀; nodes 1..=r are simple.
#[derive(Debug, Clone)]
pub struct AffineDiagram {
    pub ty: LieType,
    /// `marks[0] = 1`, `marks[i]` the coefficient of `α_i` in the highest root.
    pub marks: Vec<u64>,
    pub cartan: Vec<Vec<i64>>,
    /// True for long simple roots (all true when simply laced).
    pub long: Vec<bool>,
}

impl AffineDiagram {
    pub fn new(ty: LieType) -> Self {
        let cartan = ty.cartan_matrix();
        let roots = positive_roots(&cartan);
        let highest = roots
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .expect("nonempty root system");
        let mut marks = vec![1u64];
        marks.extend(highest.iter().map(|&c| c as u64));
        let w = root_length_weights(&cartan);
        let top = *w.iter().max().expect("nonempty");
        let long = w.iter().map(|&x| x == top).collect();
        AffineDiagram { ty, marks, cartan, long }
    }

    pub fn node_count(&self) -> usize {
        self.marks.len()
    }

    /// Simple nodes adjacent to simple node `i` (1-based labels).
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (1..self.node_count()).filter(move |&j| j != i && self.cartan[i - 1][j - 1] != 0)
    }
}

/// A slope `ν = d/m` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    d: u64,
    m: u64,
}

impl Slope {
    pub fn new(d: u64, m: u64) -> Result<Self, RootDataError> {
        if d == 0 || m == 0 {
            return Err(RootDataError::BadSlope(format!("{}/{}", d, m)));
        }
        let g = d.gcd(&m);
        Ok(Slope { d: d / g, m: m / g })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn value(&self) -> Ratio<i64> {
        Ratio::new(self.d as i64, self.m as i64)
    }

    pub fn at_least_one(&self) -> bool {
        self.d >= self.m
    }

    /// `x·ν` when it is an integer.
    pub fn times(&self, x: u64) -> Option<u64> {
        (x * self.d % self.m == 0).then(|| x * self.d / self.m)
    }

    /// `k = ⌊m/d⌋` and `d′ = m − kd`.
    pub fn k_dprime(&self) -> (u64, u64) {
        let k = self.m / self.d;
        (k, self.m - k * self.d)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.d, self.m)
    }
}

impl FromStr for Slope {
    type Err = RootDataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootDataError::BadSlope(s.to_string());
        let (d, m) = match s.trim().split_once('/') {
            Some((d, m)) => (d.trim(), m.trim()),
            None => (s.trim(), "1"),
        };
        Slope::new(d.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?)
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for (f, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 3)] {
            for r in lo..=max_rank {
                out.push(LieType::of(f, r));
            }
        }
        for f in [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8] {
            out.push(LieType::exceptional(f));
        }
        out
    }

    #[test]
    fn root_counts_match_generated_roots() {
        for t in all_types(8) {
            let roots = positive_roots(&t.cartan_matrix());
            assert_eq!(2 * roots.len(), t.phi_count(), "{t}");
        }
        assert_eq!(LieType::of(Family::B, 2).phi_count(), 8);
        assert_eq!(LieType::of(Family::A, 3).phi_count(), 12);
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(LieType::of(Family::C, 2).exponents(), vec![1, 3]);
        assert_eq!(LieType::of(Family::D, 4).exponents(), vec![1, 3, 5, 3]);
        assert_eq!(LieType::of(Family::A, 4).exponents(), vec![1, 2, 3, 4]);
        assert_eq!(LieType::exceptional(Family::E8).coxeter_number(), 30);
        assert_eq!(LieType::of(Family::B, 2).coxeter_number(), 4);
    }

    #[test]
    fn exponents_sum_to_positive_roots() {
        for t in all_types(9) {
            assert_eq!(t.exponents().len(), t.rank());
            assert_eq!(2 * t.exponents().iter().sum::<usize>(), t.phi_count(), "{t}");
        }
    }

    #[test]
    fn marks_sum_to_coxeter_number() {
        for t in all_types(10) {
            let dia = t.affine_diagram();
            assert_eq!(dia.marks[0], 1);
            assert_eq!(dia.marks.iter().sum::<u64>() as usize, t.coxeter_number(), "{t}");
        }
        assert_eq!(LieType::exceptional(Family::G2).affine_diagram().marks, vec![1, 2, 3]);
        assert_eq!(LieType::exceptional(Family::F4).affine_diagram().marks, vec![1, 2, 3, 4, 2]);
        assert!(LieType::of(Family::A, 5).affine_diagram().marks.iter().all(|&x| x == 1));
    }

    #[test]
    fn long_roots() {
        let f4 = LieType::exceptional(Family::F4).affine_diagram();
        assert_eq!(f4.long, vec![true, true, false, false]);
        let g2 = LieType::exceptional(Family::G2).affine_diagram();
        assert_eq!(g2.long, vec![true, false]);
        let b3 = LieType::of(Family::B, 3).affine_diagram();
        assert_eq!(b3.long, vec![true, true, false]);
        let c3 = LieType::of(Family::C, 3).affine_diagram();
        assert_eq!(c3.long, vec![false, false, true]);
    }

    #[test]
    fn regular_examples() {
        assert!(LieType::of(Family::D, 4).is_regular(3));
        assert!(!LieType::of(Family::C, 3).is_regular(4));
        assert!(LieType::of(Family::B, 2).is_regular(4));
        assert!(LieType::of(Family::A, 4).is_elliptic_regular(5).unwrap());
        assert!(!LieType::of(Family::D, 4).is_elliptic_regular(3).unwrap());
        assert!(LieType::of(Family::C, 4).is_elliptic_regular(8).unwrap());
        assert!(LieType::of(Family::C, 3).is_elliptic_regular(4).is_err());
    }

    /// Regular numbers via the degree/codegree criterion for real reflection
    /// groups: `m` is regular iff as many degrees as codegrees (= degrees − 2)
    /// are divisible by `m`.
    fn regular_by_degrees(t: &LieType, m: u64) -> bool {
        let degrees: Vec<u64> = t.exponents().iter().map(|&e| e as u64 + 1).collect();
        let a = degrees.iter().filter(|&&x| x % m == 0).count();
        let b = degrees.iter().filter(|&&x| (x - 2) % m == 0).count();
        a == b
    }

    #[test]
    fn regular_numbers_agree_with_degree_criterion() {
        for t in all_types(12) {
            for m in 1..=2 * t.coxeter_number() as u64 + 2 {
                assert_eq!(t.is_regular(m), regular_by_degrees(&t, m), "{t} m={m}");
            }
        }
    }

    #[test]
    fn elliptic_means_no_fixed_vectors() {
        for t in all_types(12) {
            for m in t.regular_numbers() {
                let ell = t.is_elliptic_regular(m).unwrap();
                assert_eq!(ell, t.dim_tw(m) == 0, "{t} m={m}");
            }
        }
    }

    #[test]
    fn slope_parsing() {
        let s: Slope = "6/8".parse().unwrap();
        assert_eq!((s.d(), s.m()), (3, 4));
        assert_eq!(s.to_string(), "3/4");
        assert!("0/3".parse::<Slope>().is_err());
        assert_eq!(Slope::new(7, 3).unwrap().k_dprime(), (0, 3));
        assert_eq!(Slope::new(2, 7).unwrap().k_dprime(), (3, 1));
    }

    #[test]
    fn lie_type_json() {
        let t = LieType::of(Family::B, 4);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"family":"B","rank":4}"#);
        assert_eq!(serde_json::from_str::<LieType>(&s).unwrap(), t);
        assert!(serde_json::from_str::<LieType>(r#"{"family":"D","rank":2}"#).is_err());
        assert_eq!("E7".parse::<LieType>().unwrap().rank(), 7);
        assert_eq!("c3".parse::<LieType>().unwrap(), LieType::of(Family::C, 3));
    }
}
