//! The rigidity index Δ_{ν,𝒪} and the cohomological-rigidity test.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exceptional::{self, RIGID_NUMERICS};
use crate::orbits::{dim_centralizer, AdjointOrbit, NilpotentOrbit, Orbit, OrbitError};
use crate::root_data::{Family, LieType, RootDataError, Slope};
use crate::solver::{self, SolverError};

type R = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RigidityError {
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("the DS verdict for {0} at slope {1} is not affirmative")]
    NotAffirmative(LieType, Slope),
    #[error("cannot decide resonance: {0}")]
    Indeterminate(String),
    #[error("no closed-form row for {ty} at slope {slope}")]
    NoRow { ty: LieType, slope: Slope },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Preconditions {
    pub m_elliptic: bool,
    pub orbit_nonresonant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidityReport {
    #[serde(serialize_with = "ser_ratio")]
    pub delta: R,
    #[serde(serialize_with = "ser_ratio")]
    pub nu_phi: R,
    pub dim_c: usize,
    pub dim_tw: usize,
    pub rigid: bool,
    pub preconditions_met: Preconditions,
}

fn ser_ratio<S: serde::Serializer>(r: &R, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&solver::ratio_string(r))
}

fn check_regular(t: &LieType, s: Slope) -> Result<(), RigidityError> {
    if t.is_regular(s.m()) {
        Ok(())
    } else {
        Err(RootDataError::NotRegular { ty: *t, m: s.m() }.into())
    }
}

/// Δ_{ν,𝒪} = ½(ν|Φ| − dim C(𝒪) + dim 𝔱^w).
pub fn delta(t: &LieType, s: Slope, o: &NilpotentOrbit) -> Result<R, RigidityError> {
    check_regular(t, s)?;
    let nu_phi = s.value() * t.phi_count() as i64;
    let dim_c = dim_centralizer(o)? as i64;
    Ok((nu_phi - dim_c + t.dim_tw(s.m()) as i64) / 2)
}

pub fn delta_orbit(t: &LieType, s: Slope, orbit: &Orbit) -> Result<R, RigidityError> {
    delta(t, s, &solver::nilpotent_part(orbit)?)
}

/// A linear form in symbolic eigenvalue tags plus a rational constant.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Eig {
    sym: BTreeMap<String, i64>,
    c: R,
}

impl Eig {
    fn of_tag(tag: &str) -> Self {
        match crate::orbits::parse_rational(tag) {
            Some(c) => Eig { sym: BTreeMap::new(), c },
            None => Eig { sym: [(tag.to_string(), 1)].into(), c: R::zero() },
        }
    }

    fn combine(&self, a: i64, other: &Eig, b: i64) -> Eig {
        let mut sym = BTreeMap::new();
        for (k, v) in self.sym.iter().map(|(k, v)| (k, a * v)).chain(other.sym.iter().map(|(k, v)| (k, b * v))) {
            *sym.entry(k.clone()).or_insert(0) += v;
        }
        sym.retain(|_, v| *v != 0);
        Eig { sym, c: self.c * a + other.c * b }
    }
}

/// Is this root value a nonzero integer? `Err` when a symbolic part meets a rational one.
fn integral(e: &Eig) -> Result<bool, String> {
    if e.sym.is_empty() {
        return Ok(!e.c.is_zero() && e.c.is_integer());
    }
    if e.c.is_zero() {
        Ok(false)
    } else {
        let syms: Vec<&str> = e.sym.keys().map(String::as_str).collect();
        Err(format!("{} against rational {}", syms.join(","), solver::ratio_string(&e.c.abs())))
    }
}

/// No two ad-eigenvalues of an element of the orbit differ by a nonzero integer.
pub fn non_resonant(a: &AdjointOrbit) -> Result<bool, RigidityError> {
    let t = a.lie_type();
    // distinct coordinate values of the diagonal part with multiplicities
    let mut coords: Vec<(Eig, usize)> = a.blocks().iter().map(|b| (Eig::of_tag(&b.eig), b.mult)).collect();
    let zeros = if t.family() == Family::A { a.zero_block().total() } else { a.zero_block().total() / 2 };
    if zeros > 0 {
        coords.push((Eig::default(), zeros));
    }
    let mut roots = Vec::new();
    for (i, (x, cx)) in coords.iter().enumerate() {
        for (y, _) in coords.iter().skip(i + 1) {
            roots.push(x.combine(1, y, -1));
            if t.family() != Family::A {
                roots.push(x.combine(1, y, 1));
            }
        }
        match t.family() {
            Family::A => {}
            f => {
                if *cx >= 2 || f == Family::C {
                    roots.push(x.combine(2, x, 0));
                }
                if f == Family::B {
                    roots.push(x.clone());
                }
            }
        }
    }
    for r in &roots {
        if integral(r).map_err(RigidityError::Indeterminate)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn orbit_non_resonant(orbit: &Orbit) -> Result<bool, RigidityError> {
    match orbit {
        Orbit::Nilpotent(_) => Ok(true),
        Orbit::Adjoint(a) => non_resonant(a),
    }
}

/// All the numbers behind the rigidity test, without checking the DS verdict.
pub fn report(t: &LieType, s: Slope, orbit: &Orbit) -> Result<RigidityReport, RigidityError> {
    check_regular(t, s)?;
    let o = solver::nilpotent_part(orbit)?;
    let dim_c = dim_centralizer(&o)?;
    let dim_tw = t.dim_tw(s.m());
    let nu_phi = s.value() * t.phi_count() as i64;
    let delta = (nu_phi - dim_c as i64 + dim_tw as i64) / 2;
    let m_elliptic = t.is_elliptic_regular(s.m())?;
    let orbit_nonresonant = orbit_non_resonant(orbit)?;
    Ok(RigidityReport {
        delta,
        nu_phi,
        dim_c,
        dim_tw,
        rigid: m_elliptic && orbit_nonresonant && delta.is_zero(),
        preconditions_met: Preconditions { m_elliptic, orbit_nonresonant },
    })
}

pub fn is_cohomologically_rigid(t: &LieType, s: Slope, orbit: &Orbit) -> Result<bool, RigidityError> {
    if !solver::ds_solve(t, s, orbit)?.affirmative.is_yes() {
        return Err(RigidityError::NotAffirmative(*t, s));
    }
    Ok(report(t, s, orbit)?.rigid)
}

fn r(n: i64) -> R {
    R::from_integer(n)
}

/// Δ_ν for `ν ≥ 1`, where 𝒪_ν is the zero orbit.
pub fn zero_orbit_delta(t: &LieType, s: Slope) -> R {
    (s.value() * t.phi_count() as i64 - t.dim() as i64 + t.dim_tw(s.m()) as i64) / 2
}

/// The classical index-of-rigidity table evaluated at `(t, ν)`.
pub fn index_rig_delta(t: &LieType, s: Slope) -> Result<R, RigidityError> {
    check_regular(t, s)?;
    if s.at_least_one() {
        return Ok(zero_orbit_delta(t, s));
    }
    let no_row = || RigidityError::NoRow { ty: *t, slope: s };
    let (d, m) = (s.d() as i64, s.m() as i64);
    let k = m / d;
    let dp = m - k * d;
    let n = t.n() as i64;
    let k_even = k % 2 == 0;
    let cross = |l: i64, den: i64| R::new(l * (l - 1), den) * (dp * (d - dp));
    let quarter = |l: i64, x: i64| R::new(l, 4) * x;
    // the two "ℓ even" shapes, with offset −2 or −1
    let even_pair = |l: i64, off: i64, cross_part: R| {
        if k_even {
            cross_part + quarter(l, (dp - 2) * (d - dp - 1) - off)
        } else {
            cross_part + quarter(l, (dp - 1) * (d - dp - 2) - off)
        }
    };
    let odd_pair = |l: i64| {
        if k_even {
            cross(l, 4) + quarter(l, dp * (d - dp - 1))
        } else {
            cross(l, 4) + quarter(l, (dp + 1) * (d - dp - 2)) + R::new(l - 1, 2)
        }
    };
    let val = match t.family() {
        Family::A => {
            let l = if n % m == 0 { n / m } else if (n - 1) % m == 0 { (n - 1) / m } else { return Err(no_row()) };
            cross(l, 2) + R::new(l, 2) * ((dp - 1) * (d - dp - 1))
        }
        Family::B | Family::C => {
            let l = 2 * n / m;
            if (2 * n) % m != 0 {
                return Err(no_row());
            }
            match (t.family(), m % 2 == 0) {
                (Family::B, true) if l % 2 == 0 => {
                    if d == 1 {
                        r(0)
                    } else {
                        even_pair(l, 2, cross(l, 4))
                    }
                }
                (Family::B, true) => odd_pair(l),
                (Family::B, false) => even_pair(l, 1, cross(l, 4)),
                (_, m_even) => {
                    let tw = if m_even { 0 } else { 1 };
                    if k_even {
                        cross(l, 4) + quarter(l, dp * (d - dp - 1) + tw)
                    } else {
                        cross(l, 4) + quarter(l, (dp - 1) * (d - dp) + tw)
                    }
                }
            }
        }
        Family::D => {
            if n % m == 0 {
                let l = 2 * n / m;
                if m % 2 == 0 {
                    if d == 1 {
                        r(0)
                    } else {
                        even_pair(l, 2, cross(l, 4))
                    }
                } else {
                    even_pair(l, 1, cross(l, 4))
                }
            } else if (2 * n - 2) % m == 0 {
                let l = (2 * n - 2) / m;
                if (n - 1) % m != 0 {
                    odd_pair(l)
                } else if m % 2 == 0 {
                    if d == 1 {
                        r(0)
                    } else {
                        even_pair(l, 2, cross(l, 4))
                    }
                } else {
                    even_pair(l, 1, cross(l, 4))
                }
            } else {
                return Err(no_row());
            }
        }
        _ => return Err(no_row()),
    };
    Ok(val)
}

/// The Δ column of the classical Coxeter table (`m = h`); past `d = h` the
/// threshold is zero and Δ is that of the zero orbit.
pub fn coxeter_delta(t: &LieType, d: u64) -> Result<R, RigidityError> {
    let h = t.coxeter_number() as u64;
    let s = Slope::new(d, h)?;
    if s.at_least_one() {
        return Ok(zero_orbit_delta(t, s));
    }
    let d = d as i64;
    let n = t.n() as i64;
    let split = |size: i64| (size / d, size % d);
    let bd = |size: i64| {
        let (k, dp) = split(size);
        if k % 2 == 0 {
            R::new((dp - 1) * (d - dp), 4)
        } else {
            R::new(dp * (d - dp - 1), 4)
        }
    };
    match t.family() {
        Family::A => {
            let (_, dp) = split(n);
            Ok(R::new((dp - 1) * (d - dp - 1), 2))
        }
        Family::B => Ok(bd(2 * n + 1)),
        Family::D => Ok(bd(2 * n - 1)),
        Family::C => {
            let (k, dp) = split(2 * n);
            Ok(if k % 2 == 0 { R::new(dp * (d - dp - 1), 4) } else { R::new((dp - 1) * (d - dp), 4) })
        }
        _ => Err(RigidityError::NoRow { ty: *t, slope: s }),
    }
}

/// Δ_ν from the tables: the classical index formulas, or the exceptional Δ columns.
pub fn closed_form_delta(t: &LieType, s: Slope) -> Result<R, RigidityError> {
    if t.is_classical() {
        return index_rig_delta(t, s);
    }
    check_regular(t, s)?;
    if s.at_least_one() {
        return Ok(zero_orbit_delta(t, s));
    }
    let no_row = RigidityError::NoRow { ty: *t, slope: s };
    if s.m() == t.coxeter_number() as u64 {
        return exceptional::exc_coxeter_row(t.family(), s.d()).map(|(_, dl)| r(dl as i64)).ok_or(no_row);
    }
    if t.family() == Family::F4 {
        return exceptional::f4_row(s).map(|(_, dl)| r(dl as i64)).ok_or(no_row);
    }
    Err(no_row)
}

/// Elliptic classical slopes with Δ_ν = 0, as a predicate on `(t, ν)`.
pub fn table_rigid(t: &LieType, s: Slope) -> bool {
    let (d, m) = (s.d(), s.m());
    let n = t.n() as u64;
    let h = t.coxeter_number() as u64;
    if d > m && !(m == h && d == h + 1) {
        return false;
    }
    let div = |a: u64, b: u64| b % a == 0;
    match t.family() {
        Family::A => m == n && (div(d, n + 1) || div(d, n - 1)),
        Family::B => {
            (m == 2 * n && (div(d, n + 1) || div(d, 2 * n + 1)))
                || (m == n && m % 2 == 0 && d == 3)
                || (div(m, 2 * n) && m % 2 == 0 && d == 1)
        }
        Family::C => (m == 2 * n && (div(d, m + 1) || div(d, m - 1))) || (div(m, 2 * n) && m % 2 == 0 && d == 1),
        Family::D => {
            (div(m, n) && m % 2 == 0 && d == 1)
                || (m == n && m % 2 == 0 && d == 3)
                || (div(m, 2 * n - 2) && !div(m, n - 1) && d == 1)
                || (m == 2 * n - 2 && (div(d, 2 * n) || div(d, 2 * n - 1)))
        }
        _ => false,
    }
}

/// The same predicate with the uncorrected rows: C is `m | 2n` even with
/// `d | m ± 1`, and D has no `m = n` row.
pub fn printed_table_rigid(t: &LieType, s: Slope) -> bool {
    let (d, m) = (s.d(), s.m());
    let n = t.n() as u64;
    let h = t.coxeter_number() as u64;
    if d > m && !(m == h && d == h + 1) {
        return false;
    }
    let div = |a: u64, b: u64| b % a == 0;
    match t.family() {
        Family::C => div(m, 2 * n) && m % 2 == 0 && (div(d, m + 1) || div(d, m - 1)),
        Family::D => {
            (div(m, n) && m % 2 == 0 && d == 1)
                || (div(m, 2 * n - 2) && !div(m, n - 1) && d == 1)
                || (m == 2 * n - 2 && (div(d, 2 * n) || div(d, 2 * n - 1)))
        }
        _ => table_rigid(t, s),
    }
}

/// One row of a rigidity scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidRow {
    pub lie_type: LieType,
    pub slope: Slope,
    pub orbit: NilpotentOrbit,
    /// `Some` when existence is settled; `None` means numerics only.
    pub exists: Option<bool>,
}

/// Elliptic slopes `d/m` (d < 2m) whose threshold orbit has Δ_ν = 0.
pub fn scan_rigid(family: Family, max_rank: usize) -> Vec<RigidRow> {
    if !family.is_classical() {
        return scan_exceptional(family);
    }
    let cells: Vec<(LieType, Slope)> = (1..=max_rank)
        .filter_map(|rk| LieType::new(family, rk).ok())
        .flat_map(|t| {
            t.regular_numbers()
                .into_iter()
                .filter(move |&m| t.is_elliptic_regular(m).unwrap_or(false))
                .flat_map(move |m| {
                    (1..2 * m).filter_map(move |d| Slope::new(d, m).ok().filter(|s| s.m() == m).map(|s| (t, s)))
                })
        })
        .collect();
    let mut rows: Vec<RigidRow> = cells
        .par_iter()
        .filter_map(|&(t, s)| {
            let th = solver::o_nu(&t, s).ok()?;
            let dl = delta(&t, s, &th.orbit).ok()?;
            dl.is_zero().then(|| RigidRow { lie_type: t, slope: s, orbit: th.orbit, exists: Some(true) })
        })
        .collect();
    rows.sort_by_key(|r| (r.lie_type, r.slope.m(), r.slope.d()));
    rows
}

fn scan_exceptional(family: Family) -> Vec<RigidRow> {
    let t = LieType::exceptional(family);
    let mut rows = Vec::new();
    let h = t.coxeter_number() as u64;
    for s in [1, h + 1].into_iter().filter_map(|d| Slope::new(d, h).ok()) {
        if let Ok(th) = solver::o_nu(&t, s) {
            if delta(&t, s, &th.orbit).map_or(false, |d| d.is_zero()) {
                rows.push(RigidRow { lie_type: t, slope: s, orbit: th.orbit, exists: Some(true) });
            }
        }
    }
    for row in RIGID_NUMERICS.iter().filter(|r| r.family == family) {
        let Ok(s) = Slope::new(row.d, row.m) else { continue };
        let orbit = NilpotentOrbit::labelled_unchecked(t, row.label);
        if delta(&t, s, &orbit).map_or(false, |d| d.is_zero()) {
            rows.push(RigidRow { lie_type: t, slope: s, orbit, exists: row.exists });
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::EigenBlock;
    use crate::partitions::Partition;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn sl(s: &str) -> Slope {
        s.parse().unwrap()
    }

    fn nil(t: &str, v: &[usize]) -> Orbit {
        Orbit::Nilpotent(NilpotentOrbit::classical(ty(t), Partition::new(v.to_vec())).unwrap())
    }

    fn adj(t: &str, blocks: &[(&str, &[usize])], zero: &[usize]) -> AdjointOrbit {
        let blocks = blocks
            .iter()
            .map(|(e, v)| EigenBlock { eig: e.to_string(), mult: v.iter().sum(), partition: Partition::new(v.to_vec()) })
            .collect();
        AdjointOrbit::new(ty(t), blocks, Partition::new(zero.to_vec())).unwrap()
    }

    #[test]
    fn delta_examples() {
        let b2 = nil("B2", &[2, 2, 1]);
        assert_eq!(delta_orbit(&ty("B2"), sl("3/4"), &b2).unwrap(), r(0));
        let f4 = LieType::exceptional(Family::F4);
        let a1 = NilpotentOrbit::exceptional(f4, "A1").unwrap();
        assert_eq!(delta(&f4, sl("5/6"), &a1).unwrap(), r(2));
        let e8 = LieType::exceptional(Family::E8);
        let o = NilpotentOrbit::exceptional(e8, "A4+2A1").unwrap();
        assert_eq!(delta(&e8, sl("7/30"), &o).unwrap(), r(0));
    }

    #[test]
    fn rigid_examples() {
        assert!(is_cohomologically_rigid(&ty("C2"), sl("1/4"), &nil("C2", &[4])).unwrap());
        assert!(is_cohomologically_rigid(&ty("B2"), sl("3/4"), &nil("B2", &[2, 2, 1])).unwrap());
        assert!(is_cohomologically_rigid(&ty("A2"), sl("2/3"), &nil("A2", &[2, 1])).unwrap());
        assert!(matches!(
            is_cohomologically_rigid(&ty("B2"), sl("3/4"), &nil("B2", &[1, 1, 1, 1, 1])),
            Err(RigidityError::NotAffirmative(..))
        ));
        // regular but not elliptic: reported, not an error
        let rep = report(&ty("A3"), sl("1/3"), &nil("A3", &[4])).unwrap();
        assert!(!rep.preconditions_met.m_elliptic);
        assert!(!rep.rigid);
    }

    #[test]
    fn resonance() {
        assert!(non_resonant(&adj("A2", &[("a", &[1])], &[1, 1])).unwrap());
        assert!(!non_resonant(&adj("A1", &[("1", &[1])], &[1])).unwrap());
        assert!(!non_resonant(&adj("C2", &[("1/2", &[1])], &[1, 1])).unwrap());
        assert!(non_resonant(&adj("C2", &[("1/3", &[1])], &[1, 1])).unwrap());
        assert!(!non_resonant(&adj("D4", &[("1/2", &[1, 1])], &[1, 1, 1, 1])).unwrap());
        assert!(non_resonant(&adj("B2", &[("a", &[1]), ("b", &[1])], &[1])).unwrap());
        assert!(matches!(
            non_resonant(&adj("A2", &[("a", &[1]), ("1/2", &[1])], &[1])),
            Err(RigidityError::Indeterminate(_))
        ));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_delta(&ty("A6"), sl("2/7")).unwrap(), r(0));
        assert_eq!(closed_form_delta(&ty("B2"), sl("3/4")).unwrap(), r(0));
        assert_eq!(coxeter_delta(&ty("B2"), 3).unwrap(), r(0));
        let e7 = LieType::exceptional(Family::E7);
        assert_eq!(closed_form_delta(&e7, sl("7/18")).unwrap(), r(0));
        assert_eq!(exceptional::exc_coxeter_row(Family::E7, 7).unwrap().0, "A2+3A1");
    }

    #[test]
    fn coxeter_column_matches_direct() {
        for f in [Family::A, Family::B, Family::C, Family::D] {
            for rk in 2..=10 {
                let Ok(t) = LieType::new(f, rk) else { continue };
                let h = t.coxeter_number() as u64;
                for d in (1..h).filter(|d| num_integer::gcd(*d, h) == 1) {
                    let s = Slope::new(d, h).unwrap();
                    let th = solver::o_nu(&t, s).unwrap();
                    assert_eq!(coxeter_delta(&t, d).unwrap(), delta(&t, s, &th.orbit).unwrap(), "{} {}", t, s);
                }
            }
        }
    }

    #[test]
    fn scan_small() {
        let b4: Vec<_> = scan_rigid(Family::B, 4).into_iter().filter(|r| r.lie_type == ty("B4")).collect();
        assert!(b4.iter().any(|r| r.slope == sl("3/4")));
        let e7 = scan_rigid(Family::E7, 0);
        assert!(e7.iter().any(|r| r.slope == sl("7/18") && r.exists == Some(true)));
    }
}
