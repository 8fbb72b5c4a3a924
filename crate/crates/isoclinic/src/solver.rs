//! Threshold orbits 𝒪_ν, the DS verdict `𝒪_ν ≼ 𝒪^nil`, and the refined
//! verdict for a fixed characteristic polynomial.

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exceptional;
use crate::orbits::{closure_le_with, ls_induction, AdjointOrbit, HasseDiagram, NilpotentOrbit, Orbit, OrbitError};
use crate::partitions::{dom, is_valid, is_very_even, lambda_evenly, lambda_tilde, Partition, PartitionError};
use crate::rigidity::{self, RigidityError};
use crate::root_data::{Family, LieType, RootDataError, Slope};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("slope {slope} is not supported for {ty}: {reason}")]
    UnsupportedSlope { ty: LieType, slope: Slope, reason: String },
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// 𝒪_ν together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub orbit: NilpotentOrbit,
    pub path: String,
}

fn unsupported(ty: LieType, slope: Slope, reason: impl Into<String>) -> SolverError {
    SolverError::UnsupportedSlope { ty, slope, reason: reason.into() }
}

fn lam(n: usize, r: usize) -> Partition {
    lambda_evenly(n, r.max(1))
}

/// `(m+1, m, …, m, m−1)` with `ℓ` parts, followed by `ones` parts equal to 1.
fn epipelagic(m: usize, ell: usize, ones: usize) -> Partition {
    let mut parts = vec![m + 1];
    parts.extend(std::iter::repeat(m).take(ell - 2));
    parts.push(m - 1);
    Partition::new(parts).with_ones(ones)
}

/// One row of the complete classical table: an id and the partition it prescribes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalRow {
    pub id: &'static str,
    pub partition: Partition,
}

/// Every row of the complete classical table whose conditions hold for `(t, ν)`, `ν < 1`.
pub fn classical_rows(t: &LieType, s: Slope) -> Vec<ClassicalRow> {
    let (d, m) = (s.d() as usize, s.m() as usize);
    let n = t.n();
    let divides = |a: usize, b: usize| b % a == 0;
    let times = |x: usize| s.times(x as u64).map(|v| v as usize);
    let mut rows = Vec::new();
    let mut push = |id, partition| rows.push(ClassicalRow { id, partition });
    match t.family() {
        Family::A => {
            if divides(m, n) {
                push("A1", lam(n, times(n).unwrap()));
            }
            if divides(m, n - 1) {
                push("A2", lam(n - 1, times(n - 1).unwrap()).with_ones(1));
            }
        }
        Family::B if divides(m, 2 * n) => {
            let r = times(2 * n).unwrap();
            if r % 2 == 1 {
                push("B1", lam(2 * n + 1, r));
            } else if d > 1 || m % 2 == 1 {
                push("B2", lam(2 * n, r).with_ones(1));
            } else {
                push("B3", epipelagic(m, 2 * n / m, 1));
            }
        }
        Family::C if divides(m, 2 * n) => push("C1", lam(2 * n, times(2 * n).unwrap())),
        Family::D => {
            if divides(m, n) {
                if d > 1 || m % 2 == 1 {
                    push("D1", lam(2 * n, times(2 * n).unwrap()));
                } else {
                    push("D2", epipelagic(m, 2 * n / m, 0));
                }
            }
            if divides(m, 2 * n - 2) && times(2 * n - 2).unwrap() % 2 == 1 {
                push("D3", lam(2 * n - 1, times(2 * n - 2).unwrap()).with_ones(1));
            }
            if divides(m, n - 1) {
                if d > 1 || m % 2 == 1 {
                    push("D4", lam(2 * n - 2, times(2 * n - 2).unwrap()).with_ones(2));
                } else {
                    push("D5", epipelagic(m, (2 * n - 2) / m, 2));
                }
            }
        }
        _ => {}
    }
    rows
}

/// The threshold orbit 𝒪_ν.
pub fn o_nu(t: &LieType, s: Slope) -> Result<Threshold, SolverError> {
    if !t.is_regular(s.m()) {
        return Err(RootDataError::NotRegular { ty: *t, m: s.m() }.into());
    }
    if s.at_least_one() {
        return Ok(Threshold { orbit: NilpotentOrbit::zero(*t), path: "corollary:nu_ge_1".into() });
    }
    if t.is_classical() {
        let row = classical_rows(t, s)
            .into_iter()
            .next()
            .ok_or_else(|| unsupported(*t, s, "no row of the complete classical table applies"))?;
        let c = t.parity_class();
        assert!(
            c.map_or(true, |c| is_valid(&row.partition, c))
                && !(t.family() == Family::D && is_very_even(&row.partition)),
            "threshold {} for {} {} must be valid and not very even",
            row.partition,
            t,
            s
        );
        return Ok(Threshold {
            orbit: NilpotentOrbit::classical(*t, row.partition)?,
            path: format!("table:t_completecl:{}", row.id),
        });
    }
    let f = t.family();
    let h = t.coxeter_number() as u64;
    if s.m() == h {
        let (label, _) = exceptional::exc_coxeter_row(f, s.d())
            .ok_or_else(|| unsupported(*t, s, "missing from table t_excCox"))?;
        return Ok(Threshold { orbit: NilpotentOrbit::exceptional(*t, label)?, path: "table:t_excCox".into() });
    }
    if f == Family::F4 {
        if let Some((label, _)) = exceptional::f4_row(s) {
            return Ok(Threshold { orbit: NilpotentOrbit::exceptional(*t, label)?, path: "table:DSsolnF4".into() });
        }
        return Err(unsupported(*t, s, "table DSsolnF4 covers only 5/6, 5/8 and 7/8"));
    }
    Err(unsupported(*t, s, "exceptional slopes need m = h"))
}

/// `true`, `false`, or `"unknown-needs-hasse"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    UnknownNeedsHasse,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::Yes => s.serialize_bool(true),
            Verdict::No => s.serialize_bool(false),
            Verdict::UnknownNeedsHasse => s.serialize_str("unknown-needs-hasse"),
        }
    }
}

/// `true`, `false`, or `"n/a"` when the verdict is not affirmative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rigid {
    Yes,
    No,
    NotApplicable,
}

impl Serialize for Rigid {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Rigid::Yes => s.serialize_bool(true),
            Rigid::No => s.serialize_bool(false),
            Rigid::NotApplicable => s.serialize_str("n/a"),
        }
    }
}

pub(crate) fn ratio_string(r: &Ratio<i64>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn serialize_delta<S: Serializer>(d: &Option<Ratio<i64>>, s: S) -> Result<S::Ok, S::Error> {
    match d {
        Some(r) => s.serialize_str(&ratio_string(r)),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DSAnswer {
    pub affirmative: Verdict,
    pub o_nu: NilpotentOrbit,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub o_nil: Option<NilpotentOrbit>,
    #[serde(serialize_with = "serialize_delta")]
    pub delta: Option<Ratio<i64>>,
    pub rigid: Rigid,
    pub path: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// 𝒪^nil for either kind of orbit.
pub fn nilpotent_part(orbit: &Orbit) -> Result<NilpotentOrbit, SolverError> {
    match orbit {
        Orbit::Nilpotent(o) => Ok(o.clone()),
        Orbit::Adjoint(a) => {
            if !a.lie_type().is_classical() {
                return Err(OrbitError::NotClassical(a.lie_type()).into());
            }
            Ok(ls_induction(a))
        }
    }
}

fn is_regular_nilpotent(o: &NilpotentOrbit) -> bool {
    match o.partition() {
        Some(p) => match o.lie_type().family() {
            Family::D => p.parts().len() == 2 && p.part(1) == 1,
            _ => p.parts().len() == 1,
        },
        None => o.label() == Some(&o.lie_type().to_string()),
    }
}

/// DS(ν, 𝒪): is 𝒪_ν in the closure of 𝒪^nil?
pub fn ds_solve(t: &LieType, s: Slope, orbit: &Orbit) -> Result<DSAnswer, SolverError> {
    ds_solve_with(t, s, orbit, None)
}

pub fn ds_solve_with(t: &LieType, s: Slope, orbit: &Orbit, hasse: Option<&HasseDiagram>) -> Result<DSAnswer, SolverError> {
    if orbit.lie_type() != *t {
        return Err(OrbitError::TypeMismatch(*t, orbit.lie_type()).into());
    }
    let threshold = o_nu(t, s)?;
    let o_nil = nilpotent_part(orbit)?;
    let mut notes = Vec::new();
    let mut path = threshold.path.clone();
    let affirmative = if s.at_least_one() {
        Verdict::Yes
    } else if is_regular_nilpotent(&o_nil) {
        path = "corollary:regular_orbit".into();
        Verdict::Yes
    } else {
        match closure_le_with(&threshold.orbit, &o_nil, hasse) {
            Ok(b) => Verdict::from_bool(b),
            Err(OrbitError::UnsupportedComparison(_)) => Verdict::UnknownNeedsHasse,
            Err(e) => return Err(e.into()),
        }
    };
    if o_nil.is_unresolved_very_even() {
        notes.push(format!("very even {} compared by dominance only", o_nil));
    }
    let delta = rigidity::delta(t, s, &o_nil).ok();
    let rigid = if affirmative.is_yes() {
        match rigidity::report(t, s, orbit) {
            Ok(r) => {
                if r.rigid {
                    Rigid::Yes
                } else {
                    Rigid::No
                }
            }
            Err(RigidityError::Indeterminate(msg)) => {
                notes.push(format!("resonance undecided: {}", msg));
                Rigid::NotApplicable
            }
            Err(_) => Rigid::NotApplicable,
        }
    } else {
        Rigid::NotApplicable
    };
    Ok(DSAnswer { affirmative, o_nu: threshold.orbit, o_nil: Some(o_nil), delta, rigid, path, notes })
}

/// A candidate orbit in `Orb_q`: one partition per linear factor, then the tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QCandidate {
    pub linear: Vec<Partition>,
    pub tail: Option<Partition>,
}

/// Factor sizes of the Levi `L_q`: linear multiplicities and the tail total.
struct Factors {
    linear: Vec<usize>,
    /// `2m_s + ε` in B/C/D; absent in type A.
    tail: Option<usize>,
}

fn factors(a: &AdjointOrbit) -> Factors {
    let mut linear: Vec<usize> = a.blocks().iter().map(|b| b.mult).collect();
    if a.lie_type().family() == Family::A {
        if !a.zero_block().is_empty() {
            linear.push(a.zero_block().total());
        }
        Factors { linear, tail: None }
    } else {
        Factors { linear, tail: Some(a.zero_block().total()) }
    }
}

/// λ̃^{n,r}, or the next partition above `1^n` when `n ≤ r`.
fn tilde(n: usize, r: usize) -> Result<Partition, PartitionError> {
    if n <= r && n >= 2 {
        return Ok(lambda_evenly(n, n - 1));
    }
    lambda_tilde(n, r)
}

/// One factor of a candidate: `λ^{core,ℓ}` followed by `ones` parts equal to 1.
#[derive(Debug, Clone, Copy)]
struct Entry {
    core: usize,
    ones: usize,
}

/// The `λ^{·,ℓ}` candidate over `entries` (tail last when `has_tail`), or its
/// λ̃ substitutions when every core is a multiple of `ℓ` and the factor
/// carrying the extra ones is nonempty.
fn ell_candidates(entries: &[Entry], has_tail: bool, ell: usize) -> Result<Vec<QCandidate>, PartitionError> {
    let build = |sub: Option<usize>| -> Result<QCandidate, PartitionError> {
        let mut parts = entries
            .iter()
            .enumerate()
            .map(|(i, e)| Ok(if sub == Some(i) { tilde(e.core, ell)? } else { lam(e.core, ell) }.with_ones(e.ones)))
            .collect::<Result<Vec<_>, PartitionError>>()?;
        let tail = if has_tail { parts.pop() } else { None };
        Ok(QCandidate { linear: parts, tail })
    };
    let rectangular = entries.iter().all(|e| e.core % ell == 0 && (e.ones == 0 || e.core > 0));
    if !rectangular {
        return Ok(vec![build(None)?]);
    }
    (0..entries.len()).filter(|&i| entries[i].core > 0).map(|i| build(Some(i))).collect()
}

fn plain(sizes: &[usize]) -> impl Iterator<Item = Entry> + '_ {
    sizes.iter().map(|&core| Entry { core, ones: 0 })
}

/// The explicit orbits `𝒪_ν^{q,j}` for the characteristic polynomial of `a`.
pub fn q_candidates(t: &LieType, s: Slope, a: &AdjointOrbit) -> Result<(Vec<QCandidate>, String), SolverError> {
    let (d, m) = (s.d() as usize, s.m() as usize);
    let n = t.n();
    let f = factors(a);
    let times = |x: usize| s.times(x as u64).map(|v| v as usize);
    let divides = |a: usize, b: usize| b % a == 0;
    let evenly = |r: usize| f.linear.iter().map(|&mi| lam(mi, r)).collect::<Vec<_>>();
    // j-variants: factor j drops to m_j − 1 and gains a part 1.
    let j_variants = |r: usize, tail: Option<Partition>| -> Vec<QCandidate> {
        (0..f.linear.len())
            .map(|j| {
                let mut linear = evenly(r);
                linear[j] = lam(f.linear[j] - 1, r).with_ones(1);
                QCandidate { linear, tail: tail.clone() }
            })
            .collect()
    };
    let tail_size = f.tail.unwrap_or(0);
    let mut id = "";
    let mut cands = Vec::new();
    match t.family() {
        Family::A => {
            if divides(m, n) {
                id = "A1";
                cands.push(QCandidate { linear: evenly(times(n).unwrap()), tail: None });
            } else if divides(m, n - 1) {
                id = "A2";
                cands = j_variants(times(n - 1).unwrap(), None);
            }
        }
        Family::C if divides(m, 2 * n) => {
            let r = times(2 * n).unwrap();
            id = "C1";
            cands.push(QCandidate { linear: evenly(r), tail: Some(lam(tail_size, r)) });
        }
        Family::B if divides(m, 2 * n) => {
            let r = times(2 * n).unwrap();
            if r % 2 == 1 {
                id = "B1";
                cands.push(QCandidate { linear: evenly(r), tail: Some(lam(tail_size, r)) });
            } else if d > 1 || m % 2 == 1 {
                id = "B2";
                cands.push(QCandidate { linear: evenly(r), tail: Some(lam(tail_size - 1, r).with_ones(1)) });
            } else {
                id = "B3";
                let entries: Vec<Entry> = plain(&f.linear).chain([Entry { core: tail_size - 1, ones: 1 }]).collect();
                cands = ell_candidates(&entries, true, 2 * n / m)?;
            }
        }
        Family::D => {
            if divides(m, n) {
                let r = times(2 * n).unwrap();
                if d > 1 || m % 2 == 1 {
                    id = "D1";
                    cands.push(QCandidate { linear: evenly(r), tail: Some(lam(tail_size, r)) });
                } else {
                    id = "D2";
                    let entries: Vec<Entry> = plain(&f.linear).chain([Entry { core: tail_size, ones: 0 }]).collect();
                    cands = ell_candidates(&entries, true, 2 * n / m)?;
                }
            } else if divides(m, 2 * n - 2) && times(2 * n - 2).unwrap() % 2 == 1 {
                id = "D3";
                let r = times(2 * n - 2).unwrap();
                let tail = if tail_size == 0 { Partition::empty() } else { lam(tail_size - 1, r).with_ones(1) };
                cands.push(QCandidate { linear: evenly(r), tail: Some(tail) });
            } else if divides(m, n - 1) {
                let r = times(2 * n - 2).unwrap();
                if d > 1 || m % 2 == 1 {
                    id = "D4";
                    cands = j_variants(r, Some(lam(tail_size, r)));
                    if tail_size >= 2 {
                        cands.push(QCandidate { linear: evenly(r), tail: Some(lam(tail_size - 2, r).with_ones(2)) });
                    }
                } else {
                    id = "D5";
                    let ell = (2 * n - 2) / m;
                    for j in 0..f.linear.len() {
                        let mut entries: Vec<Entry> = plain(&f.linear).chain([Entry { core: tail_size, ones: 0 }]).collect();
                        entries[j] = Entry { core: f.linear[j] - 1, ones: 1 };
                        cands.extend(ell_candidates(&entries, true, ell)?);
                    }
                    if tail_size >= 2 {
                        let entries: Vec<Entry> =
                            plain(&f.linear).chain([Entry { core: tail_size - 2, ones: 2 }]).collect();
                        cands.extend(ell_candidates(&entries, true, ell)?);
                    }
                }
            }
        }
        _ => return Err(OrbitError::NotClassical(*t).into()),
    }
    if cands.is_empty() {
        return Err(unsupported(*t, s, "no row of the fixed-polynomial table applies"));
    }
    Ok((cands, format!("table:t_clq:{}", id)))
}

/// Candidate `c` lies below the orbit of `a` in `Orb_q`, factor by factor.
fn candidate_below(c: &QCandidate, a: &AdjointOrbit) -> bool {
    let mut linear: Vec<&Partition> = a.blocks().iter().map(|b| &b.partition).collect();
    if a.lie_type().family() == Family::A && !a.zero_block().is_empty() {
        linear.push(a.zero_block());
    }
    let lin_ok = c.linear.iter().zip(linear).all(|(x, y)| x.total() == y.total() && dom(x, y));
    let tail_ok = match &c.tail {
        Some(x) => x.total() == a.zero_block().total() && dom(x, a.zero_block()),
        None => true,
    };
    lin_ok && tail_ok
}

/// DS(ν, 𝒪, q) via the explicit candidate orbits.
pub fn ds_solve_q(t: &LieType, s: Slope, a: &AdjointOrbit) -> Result<DSAnswer, SolverError> {
    let threshold = o_nu(t, s)?;
    let o_nil = ls_induction(a);
    let (affirmative, path) = if s.at_least_one() {
        (true, threshold.path.clone())
    } else {
        let (cands, path) = q_candidates(t, s, a)?;
        (cands.iter().any(|c| candidate_below(c, a)), path)
    };
    let affirmative = Verdict::from_bool(affirmative);
    let delta = rigidity::delta(t, s, &o_nil).ok();
    let rigid = if affirmative.is_yes() {
        rigidity::report(t, s, &Orbit::Adjoint(a.clone()))
            .map(|r| if r.rigid { Rigid::Yes } else { Rigid::No })
            .unwrap_or(Rigid::NotApplicable)
    } else {
        Rigid::NotApplicable
    };
    Ok(DSAnswer { affirmative, o_nu: threshold.orbit, o_nil: Some(o_nil), delta, rigid, path, notes: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::EigenBlock;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn sl(s: &str) -> Slope {
        s.parse().unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(o_nu(&ty("C3"), sl("5/6")).unwrap().orbit.partition().unwrap(), &p(&[2, 1, 1, 1, 1]));
        assert_eq!(o_nu(&ty("D5"), sl("1/4")).unwrap().orbit.partition().unwrap(), &p(&[5, 3, 1, 1]));
        let f4 = o_nu(&LieType::exceptional(Family::F4), sl("5/8")).unwrap();
        assert_eq!(f4.orbit.label(), Some("~A1"));
        assert_eq!(f4.path, "table:DSsolnF4");
        let b4 = o_nu(&ty("B4"), sl("3/8")).unwrap();
        assert_eq!(b4.path, "table:t_completecl:B1");
        assert!(o_nu(&ty("B2"), sl("7/6")).is_err());
        assert!(o_nu(&ty("A5"), sl("7/6")).unwrap().orbit.is_zero());
        assert!(matches!(
            o_nu(&LieType::exceptional(Family::E6), sl("1/9")),
            Err(SolverError::UnsupportedSlope { .. })
        ));
    }

    #[test]
    fn row_overlap_example() {
        let rows = classical_rows(&ty("D4"), sl("1/2"));
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.partition == p(&[3, 2, 2, 1])));
    }

    #[test]
    fn verdict_examples() {
        let b2 = ty("B2");
        let nil = |v: &[usize]| Orbit::Nilpotent(NilpotentOrbit::classical(b2, p(v)).unwrap());
        assert!(ds_solve(&b2, sl("3/4"), &nil(&[3, 1, 1])).unwrap().affirmative.is_yes());
        assert_eq!(ds_solve(&b2, sl("3/4"), &nil(&[1, 1, 1, 1, 1])).unwrap().affirmative, Verdict::No);
        let a5 = ty("A5");
        let zero = Orbit::Nilpotent(NilpotentOrbit::zero(a5));
        let ans = ds_solve(&a5, sl("7/6"), &zero).unwrap();
        assert!(ans.affirmative.is_yes());
        assert_eq!(ans.path, "corollary:nu_ge_1");
    }

    #[test]
    fn needs_hasse_for_e_types() {
        let e6 = LieType::exceptional(Family::E6);
        let o = Orbit::Nilpotent(NilpotentOrbit::exceptional(e6, "2A1").unwrap());
        let ans = ds_solve(&e6, sl("7/12"), &o).unwrap();
        assert_eq!(ans.affirmative, Verdict::UnknownNeedsHasse);
        let h = HasseDiagram::from_json(r#"[{"from":"A1","to":"2A1"},{"from":"2A1","to":"3A1"}]"#).unwrap();
        let ans = ds_solve_with(&e6, sl("7/12"), &o, Some(&h)).unwrap();
        assert_eq!(ans.affirmative, Verdict::No);
    }

    #[test]
    fn json_shape() {
        let b2 = ty("B2");
        let o = Orbit::Nilpotent(NilpotentOrbit::classical(b2, p(&[2, 2, 1])).unwrap());
        let ans = ds_solve(&b2, sl("3/4"), &o).unwrap();
        let v: serde_json::Value = serde_json::to_value(&ans).unwrap();
        assert_eq!(v["affirmative"], true);
        assert_eq!(v["o_nu"], serde_json::json!([2, 2, 1]));
        assert_eq!(v["delta"], "0");
        assert_eq!(v["rigid"], true);
    }

    #[test]
    fn q_examples() {
        let a3 = ty("A3");
        let blk = |e: &str, v: &[usize]| EigenBlock { eig: e.into(), mult: v.iter().sum(), partition: p(v) };
        for (x, y) in [(&[1, 1][..], &[2][..]), (&[2], &[1, 1]), (&[2], &[2])] {
            let a = AdjointOrbit::new(a3, vec![blk("a", x), blk("b", y)], Partition::empty()).unwrap();
            let (c, _) = q_candidates(&a3, sl("3/4"), &a).unwrap();
            assert_eq!(c[0].linear, vec![p(&[1, 1]), p(&[1, 1])]);
            assert!(ds_solve_q(&a3, sl("3/4"), &a).unwrap().affirmative.is_yes());
        }
        let b4 = ty("B4");
        let a = AdjointOrbit::new(b4, vec![blk("a", &[2]), blk("b", &[1])], p(&[3])).unwrap();
        let (c, path) = q_candidates(&b4, sl("3/8"), &a).unwrap();
        assert_eq!(path, "table:t_clq:B1");
        assert_eq!(c, vec![QCandidate { linear: vec![p(&[1, 1]), p(&[1])], tail: Some(p(&[1, 1, 1])) }]);
    }
}
