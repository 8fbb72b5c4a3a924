//! Slopes `d/h`: d-allowable subsets of the affine diagram, the orbits
//! `𝒪_{J,reg}` they carry, and the threshold orbit as their closure-minimum.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::exceptional;
use crate::levi;
use crate::orbits::{closure_le, NilpotentOrbit, OrbitError, VeryEven};
use crate::partitions::{is_very_even, lambda_evenly, Partition};
use crate::root_data::{Family, LieType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("d = {d} is not coprime to the Coxeter number {h}")]
    NotCoprime { d: u64, h: u64 },
    #[error("d = {d} shares a factor with the mark {mark}; stabilizers need not be parabolic")]
    NotGood { d: u64, mark: u64 },
    #[error("subset {0:?} is not inside the finite diagram")]
    AffineNode(Vec<usize>),
    #[error("no closure-minimum among {0:?}")]
    NoUniqueMinimum(Vec<String>),
    #[error("{ty} with d = {d}: candidates {candidates:?} need closure data and no table row applies")]
    NeedsHasse { ty: LieType, d: u64, candidates: Vec<String> },
    #[error(transparent)]
    Orbit(#[from] OrbitError),
}

/// A proper subset of affine nodes (0 = α₀) with positive weights on the
/// complement satisfying `Σ k_α n_α = d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AllowableSubset {
    pub nodes: BTreeSet<usize>,
    pub witness: BTreeMap<usize, u64>,
    pub is_minimal: bool,
}

impl AllowableSubset {
    pub fn is_finite(&self) -> bool {
        !self.nodes.contains(&0)
    }

    /// The witness equation, checked against the marks.
    pub fn verify(&self, marks: &[u64], d: u64) -> bool {
        let complement: BTreeSet<usize> = (0..marks.len()).filter(|i| !self.nodes.contains(i)).collect();
        complement.len() == self.witness.len()
            && complement.iter().all(|i| self.witness.get(i).is_some_and(|&k| k > 0))
            && self.witness.iter().map(|(&i, &k)| k * marks[i]).sum::<u64>() == d
    }
}

/// Positive weights on `nodes` with `Σ k_i marks[i] = d`, if any.
fn witness(marks: &[u64], nodes: &[usize], d: u64) -> Option<BTreeMap<usize, u64>> {
    let base: u64 = nodes.iter().map(|&i| marks[i]).sum();
    if nodes.is_empty() || base > d {
        return None;
    }
    // Nonnegative extra weight summing to rest: reachability table over values.
    let rest = (d - base) as usize;
    let mut via: Vec<Option<usize>> = vec![None; rest + 1];
    let mut ok = vec![false; rest + 1];
    ok[0] = true;
    for v in 1..=rest {
        for &i in nodes {
            let m = marks[i] as usize;
            if m <= v && ok[v - m] {
                ok[v] = true;
                via[v] = Some(i);
                break;
            }
        }
    }
    if !ok[rest] {
        return None;
    }
    let mut w: BTreeMap<usize, u64> = nodes.iter().map(|&i| (i, 1)).collect();
    let mut v = rest;
    while v > 0 {
        let i = via[v].expect("reachable");
        *w.get_mut(&i).expect("node") += 1;
        v -= marks[i] as usize;
    }
    Some(w)
}

/// All d-allowable proper subsets of the affine diagram, ordered by bitmask.
pub fn enumerate_d_allowable(t: &LieType, d: u64) -> Vec<AllowableSubset> {
    let marks = t.affine_diagram().marks;
    let n = marks.len();
    let full = (1u32 << n) - 1;
    let mut found: Vec<(u32, BTreeMap<usize, u64>)> = Vec::new();
    for mask in 0..full {
        let complement: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        if let Some(w) = witness(&marks, &complement, d) {
            found.push((mask, w));
        }
    }
    let allowable: BTreeSet<u32> = found.iter().map(|(m, _)| *m).collect();
    found
        .into_iter()
        .map(|(mask, witness)| {
            // Minimal: no allowable proper submask.
            let mut sub = mask;
            let mut is_minimal = true;
            while sub > 0 {
                sub = (sub - 1) & mask;
                if allowable.contains(&sub) {
                    is_minimal = false;
                    break;
                }
            }
            let nodes = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            AllowableSubset { nodes, witness, is_minimal }
        })
        .collect()
}

/// In type A the affine diagram is a cycle: rotate `j` so it avoids α₀.
pub fn rotate_into_finite(t: &LieType, j: &BTreeSet<usize>) -> Option<BTreeSet<usize>> {
    if !j.contains(&0) {
        return Some(j.clone());
    }
    if t.family() != Family::A {
        return None;
    }
    let n = t.rank() + 1;
    let gap = (0..n).find(|i| !j.contains(i))?;
    Some(j.iter().map(|&i| (i + n - gap) % n).collect())
}

/// 𝒪_{J,reg}: the regular nilpotent of the Levi subalgebra with simple roots `j ⊆ Δ`.
pub fn orbit_j_reg(t: &LieType, j: &BTreeSet<usize>) -> Result<NilpotentOrbit, CoxeterError> {
    if j.contains(&0) || j.iter().any(|&i| i > t.rank()) {
        return Err(CoxeterError::AffineNode(j.iter().copied().collect()));
    }
    if !t.is_classical() {
        let label = levi::label(t, j);
        return Ok(NilpotentOrbit::exceptional(*t, &label)?);
    }
    let n = t.n();
    // Coordinates 1..=n; α_i = e_i − e_{i+1} links i and i+1 for i < n (type A: i < n too).
    let linked = |i: usize| -> bool {
        match t.family() {
            Family::D if i == n - 1 => j.contains(&(n - 1)) || j.contains(&n),
            _ => i < n && j.contains(&i),
        }
    };
    let mut runs: Vec<(usize, usize)> = Vec::new();
    let mut start = 1;
    for i in 1..=n {
        if i == n || !linked(i) {
            runs.push((start, i));
            start = i + 1;
        }
    }
    let tail = match t.family() {
        Family::B | Family::C => j.contains(&n),
        Family::D => j.contains(&(n - 1)) && j.contains(&n),
        _ => false,
    };
    let mut parts = Vec::new();
    for (k, &(a, b)) in runs.iter().enumerate() {
        let size = b - a + 1;
        let last = k + 1 == runs.len();
        match t.family() {
            Family::A => parts.push(size),
            Family::B if last && tail => parts.push(2 * size + 1),
            Family::C if last && tail => parts.push(2 * size),
            Family::D if last && tail => parts.extend([2 * size - 1, 1]),
            _ => parts.extend([size, size]),
        }
    }
    if t.family() == Family::B && !tail {
        parts.push(1);
    }
    let p = Partition::new(parts);
    if t.family() == Family::D && is_very_even(&p) {
        let label = if j.contains(&(n - 1)) { VeryEven::I } else { VeryEven::II };
        return Ok(NilpotentOrbit::very_even(*t, p, label)?);
    }
    Ok(NilpotentOrbit::classical(*t, p)?)
}

/// Result of the d-allowable route.
#[derive(Debug, Clone, Serialize)]
pub struct CoxeterSolution {
    pub orbit: NilpotentOrbit,
    /// `coxeter-derived` or `table:t_excCox`.
    pub path: String,
    /// Distinct 𝒪_{J,reg} over minimal d-allowable `J ⊆ Δ`, with one `J` each.
    pub candidates: Vec<(BTreeSet<usize>, NilpotentOrbit)>,
}

/// Distinct orbits from minimal d-allowable subsets inside Δ.
pub fn minimal_candidates(t: &LieType, d: u64) -> Result<Vec<(BTreeSet<usize>, NilpotentOrbit)>, CoxeterError> {
    let mut out: Vec<(BTreeSet<usize>, NilpotentOrbit)> = Vec::new();
    for s in enumerate_d_allowable(t, d) {
        if !s.is_minimal || !s.is_finite() {
            continue;
        }
        let o = orbit_j_reg(t, &s.nodes)?;
        if !out.iter().any(|(_, x)| *x == o) {
            out.push((s.nodes, o));
        }
    }
    Ok(out)
}

/// Threshold orbit for `ν = d/h` from the d-allowable criterion.
pub fn coxeter_solve(t: &LieType, d: u64) -> Result<CoxeterSolution, CoxeterError> {
    let h = t.coxeter_number() as u64;
    if d.gcd(&h) != 1 {
        return Err(CoxeterError::NotCoprime { d, h });
    }
    let marks = t.affine_diagram().marks;
    if let Some(&mark) = marks.iter().find(|&&m| d.gcd(&m) != 1) {
        return Err(CoxeterError::NotGood { d, mark });
    }
    let candidates = minimal_candidates(t, d)?;
    match closure_minimum(&candidates) {
        Ok(Some(orbit)) => Ok(CoxeterSolution { orbit, path: "coxeter-derived".into(), candidates }),
        Ok(None) => Err(CoxeterError::NoUniqueMinimum(candidates.iter().map(|(_, o)| o.to_string()).collect())),
        Err(OrbitError::UnsupportedComparison(_)) => {
            let row = exceptional::exc_coxeter_row(t.family(), d);
            match row {
                Some((label, _)) if candidates.iter().any(|(_, o)| o.label() == Some(label)) => Ok(CoxeterSolution {
                    orbit: NilpotentOrbit::exceptional(*t, label)?,
                    path: "table:t_excCox".into(),
                    candidates,
                }),
                _ => Err(CoxeterError::NeedsHasse {
                    ty: *t,
                    d,
                    candidates: candidates.iter().map(|(_, o)| o.to_string()).collect(),
                }),
            }
        }
        Err(e) => Err(e.into()),
    }
}

/// The candidate below all others, `None` if there is none.
fn closure_minimum(candidates: &[(BTreeSet<usize>, NilpotentOrbit)]) -> Result<Option<NilpotentOrbit>, OrbitError> {
    if candidates.len() == 1 {
        return Ok(Some(candidates[0].1.clone()));
    }
    for (_, c) in candidates {
        let mut below_all = true;
        for (_, x) in candidates {
            if !closure_le(c, x)? {
                below_all = false;
                break;
            }
        }
        if below_all {
            return Ok(Some(c.clone()));
        }
    }
    Ok(None)
}

/// The classical closed form for `ν = d/h`: λ^{N,d}, with `N = 2n − 1` plus a
/// trailing `1` in type D.
pub fn coxeter_closed_form(t: &LieType, d: u64) -> Option<Partition> {
    let n = t.n();
    let d = d as usize;
    match t.family() {
        Family::A => Some(lambda_evenly(n, d)),
        Family::B => Some(lambda_evenly(2 * n + 1, d)),
        Family::C => Some(lambda_evenly(2 * n, d)),
        Family::D => Some(lambda_evenly(2 * n - 1, d).with_ones(1)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{dom, lambda_evenly};
    use proptest::prelude::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn g2_five() {
        let g2 = LieType::exceptional(Family::G2);
        let all = enumerate_d_allowable(&g2, 5);
        let nodes: Vec<BTreeSet<usize>> = all.iter().map(|s| s.nodes.clone()).collect();
        assert_eq!(nodes, vec![set(&[0]), set(&[1]), set(&[2]), set(&[1, 2])]);
        let minimal: Vec<bool> = all.iter().map(|s| s.is_minimal).collect();
        assert_eq!(minimal, vec![true, true, true, false]);
        let marks = g2.affine_diagram().marks;
        assert!(all.iter().all(|s| s.verify(&marks, 5)));
        let sol = coxeter_solve(&g2, 5).unwrap();
        assert_eq!(sol.orbit.label(), Some("A1"));
        assert_eq!(sol.path, "coxeter-derived");
    }

    #[test]
    fn f4_five_minimal_subsets() {
        let f4 = LieType::exceptional(Family::F4);
        let minimal: Vec<BTreeSet<usize>> = enumerate_d_allowable(&f4, 5)
            .into_iter()
            .filter(|s| s.is_minimal && s.is_finite())
            .map(|s| s.nodes)
            .collect();
        assert_eq!(minimal, vec![set(&[2, 3]), set(&[1, 2, 4]), set(&[1, 3, 4])]);
        assert_eq!(coxeter_solve(&f4, 5).unwrap().orbit.label(), Some("A2+~A1"));
    }

    #[test]
    fn f4_seven_minimal_subsets() {
        let f4 = LieType::exceptional(Family::F4);
        let minimal: BTreeSet<BTreeSet<usize>> = enumerate_d_allowable(&f4, 7)
            .into_iter()
            .filter(|s| s.is_minimal && s.is_finite())
            .map(|s| s.nodes)
            .collect();
        let want: BTreeSet<BTreeSet<usize>> =
            [set(&[1, 2]), set(&[1, 3]), set(&[2, 3]), set(&[2, 4]), set(&[3, 4])].into_iter().collect();
        assert_eq!(minimal, want);
    }

    #[test]
    fn orbit_examples() {
        // B4 with an isolated GL(2) and an SO(5) tail.
        let o = orbit_j_reg(&ty("B4"), &set(&[1, 3, 4])).unwrap();
        assert_eq!(o.partition().unwrap(), &Partition::new(vec![5, 2, 2]));
        let o = orbit_j_reg(&ty("A4"), &set(&[1, 2, 4])).unwrap();
        assert_eq!(o.partition().unwrap(), &Partition::new(vec![3, 2]));
        let o = orbit_j_reg(&LieType::exceptional(Family::F4), &set(&[1, 2, 4])).unwrap();
        assert_eq!(o.label(), Some("A2+~A1"));
        let o = orbit_j_reg(&ty("D4"), &set(&[1, 3])).unwrap();
        assert_eq!(o.very_even_label(), Some(VeryEven::I));
        let o = orbit_j_reg(&ty("D4"), &set(&[1, 4])).unwrap();
        assert_eq!(o.very_even_label(), Some(VeryEven::II));
        let o = orbit_j_reg(&ty("D4"), &set(&[3, 4])).unwrap();
        assert_eq!(o.partition().unwrap(), &Partition::new(vec![3, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn classical_examples() {
        assert_eq!(coxeter_solve(&ty("B2"), 3).unwrap().orbit.partition().unwrap(), &Partition::new(vec![2, 2, 1]));
        assert!(matches!(coxeter_solve(&ty("B2"), 2), Err(CoxeterError::NotCoprime { .. })));
        // d > h: ∅ is allowable and the threshold is zero.
        assert!(coxeter_solve(&ty("C3"), 7).unwrap().orbit.is_zero());
    }

    #[test]
    fn closed_form_matches_route() {
        for name in ["A4", "B3", "C4", "D5", "D4"] {
            let t = ty(name);
            let h = t.coxeter_number() as u64;
            for d in (1..3 * h).filter(|d| d.gcd(&h) == 1) {
                let route = coxeter_solve(&t, d).unwrap().orbit;
                assert_eq!(route.partition(), coxeter_closed_form(&t, d).as_ref(), "{} d={}", name, d);
            }
        }
        assert_eq!(coxeter_closed_form(&ty("D4"), 5), Some(Partition::new(vec![2, 2, 1, 1, 1, 1])));
    }

    #[test]
    fn type_a_rotation() {
        let a3 = ty("A3");
        assert_eq!(rotate_into_finite(&a3, &set(&[0, 1])), Some(set(&[2, 3])));
        assert_eq!(rotate_into_finite(&ty("B3"), &set(&[0, 1])), None);
    }

    #[test]
    fn exceptional_candidates_contain_table_rows() {
        for &(f, d, label, _) in exceptional::EXC_COXETER {
            let t = LieType::exceptional(f);
            let c = minimal_candidates(&t, d).unwrap();
            assert!(c.iter().any(|(_, o)| o.label() == Some(label)), "{f} {d}: {:?}", c);
            assert_eq!(coxeter_solve(&t, d).unwrap().orbit.label(), Some(label));
        }
    }

    #[test]
    fn e7_primes_in_candidates() {
        let e7 = LieType::exceptional(Family::E7);
        let labels = |d| -> Vec<String> { minimal_candidates(&e7, d).unwrap().into_iter().map(|(_, o)| o.to_string()).collect() };
        assert!(labels(5).contains(&"(A5)'".to_string()));
        assert!(!labels(5).contains(&"(A5)''".to_string()));
        assert!(!labels(7).contains(&"(A3+A1)''".to_string()));
        assert!(!labels(11).contains(&"(3A1)''".to_string()));
    }

    fn classical() -> impl Strategy<Value = LieType> {
        prop_oneof![
            (1usize..=8).prop_map(|r| LieType::of(Family::A, r)),
            (2usize..=8).prop_map(|r| LieType::of(Family::B, r)),
            (2usize..=8).prop_map(|r| LieType::of(Family::C, r)),
            (4usize..=8).prop_map(|r| LieType::of(Family::D, r)),
        ]
    }

    proptest! {
        #[test]
        fn sub_levis_give_smaller_orbits(t in classical(), mask in 0u32..512, sub in 0u32..512) {
            let r = t.rank();
            let m = mask & ((1 << r) - 1);
            let s = m & sub;
            let j: BTreeSet<usize> = (1..=r).filter(|i| m & (1 << (i - 1)) != 0).collect();
            let js: BTreeSet<usize> = (1..=r).filter(|i| s & (1 << (i - 1)) != 0).collect();
            let (o, os) = (orbit_j_reg(&t, &j).unwrap(), orbit_j_reg(&t, &js).unwrap());
            prop_assert!(dom(os.partition().unwrap(), o.partition().unwrap()));
        }

        #[test]
        fn type_a_threshold_is_evenly_distributed(n in 2usize..=9, d in 1u64..27) {
            let t = LieType::of(Family::A, n - 1);
            prop_assume!(d.gcd(&(n as u64)) == 1);
            let sol = coxeter_solve(&t, d).unwrap();
            prop_assert_eq!(sol.orbit.partition().unwrap(), &lambda_evenly(n, d as usize));
        }
    }
}
