//! Cross-validation sweeps: each compares two independent routes to the same
//! answer and reports the first disagreements.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{coxeter_closed_form, coxeter_solve};
use crate::rigidity::{closed_form_delta, coxeter_delta, delta, scan_rigid, table_rigid};
use crate::root_data::{Family, LieType, Slope};
use crate::skeleton::minimal_jordan_type;
use crate::solver::{classical_rows, o_nu};

const CLASSICAL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];
const SHOWN: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cells: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("{} {} ({} cells)", status, self.name, self.cells);
        if !self.passed() {
            let shown: Vec<&str> = self.failures.iter().take(SHOWN).map(String::as_str).collect();
            s.push_str(&format!(": {} failures, e.g. {}", self.failures.len(), shown.join("; ")));
        }
        s
    }
}

fn outcome(name: &'static str, results: Vec<Option<String>>) -> CheckOutcome {
    let cells = results.len();
    CheckOutcome { name, cells, failures: results.into_iter().flatten().collect() }
}

pub fn classical_types(min_rank: usize, max_rank: usize) -> Vec<LieType> {
    CLASSICAL
        .iter()
        .flat_map(|&f| (min_rank..=max_rank).filter_map(move |r| LieType::new(f, r).ok()))
        .collect()
}

/// Reduced slopes `d/m` with `d < d_bound(m)` for each `m` allowed by `keep`.
pub fn slopes(t: &LieType, keep: impl Fn(u64) -> bool, d_bound: impl Fn(u64) -> u64) -> Vec<Slope> {
    t.regular_numbers()
        .into_iter()
        .filter(|&m| keep(m))
        .flat_map(|m| {
            (1..d_bound(m))
                .filter(move |d| d.gcd(&m) == 1)
                .map(move |d| Slope::new(d, m).expect("positive"))
        })
        .collect()
}

/// d-allowable route against the λ^{N,d} closed form and its Δ column.
pub fn coxeter_classical(max_rank: usize) -> CheckOutcome {
    let cells: Vec<(LieType, u64)> = classical_types(2, max_rank)
        .into_iter()
        .flat_map(|t| {
            let h = t.coxeter_number() as u64;
            (1..3 * h).filter(move |d| d.gcd(&h) == 1).map(move |d| (t, d))
        })
        .collect();
    let results = cells
        .par_iter()
        .map(|&(t, d)| {
            let route = match coxeter_solve(&t, d) {
                Ok(c) => c.orbit,
                Err(e) => return Some(format!("{} d={}: {}", t, d, e)),
            };
            let closed = coxeter_closed_form(&t, d);
            if route.partition() != closed.as_ref() {
                return Some(format!("{} d={}: route {} vs closed form {:?}", t, d, route, closed));
            }
            let s = Slope::new(d, t.coxeter_number() as u64).expect("positive");
            let direct = delta(&t, s, &route).ok()?;
            match coxeter_delta(&t, d) {
                Ok(c) if c == direct => None,
                other => Some(format!("{} d={}: Δ {:?} vs direct {}", t, d, other, direct)),
            }
        })
        .collect();
    outcome("coxeter-classical", results)
}

/// Lattice-model minimum against the threshold table for elliptic slopes.
pub fn skeleton_equivalence(max_rank: usize, budget: usize, seed: u64) -> CheckOutcome {
    let cells: Vec<(LieType, Slope)> = classical_types(1, max_rank)
        .into_iter()
        .flat_map(|t| slopes(&t, |m| t.is_elliptic_regular(m).unwrap_or(false), |m| 2 * m).into_iter().map(move |s| (t, s)))
        .collect();
    let results = cells
        .par_iter()
        .map(|&(t, s)| {
            let got = match minimal_jordan_type(&t, s, budget, seed) {
                Ok(g) => g,
                Err(e) => return Some(format!("{} {}: {}", t, s, e)),
            };
            let want = o_nu(&t, s).ok()?.orbit;
            if want.partition() != Some(&got.partition) {
                Some(format!("{} {}: oracle {} vs table {}", t, s, got.partition, want))
            } else if !got.certified {
                Some(format!("{} {}: not certified", t, s))
            } else {
                None
            }
        })
        .collect();
    outcome("skeleton-equivalence", results)
}

/// Closed-form Δ against ½(ν|Φ| − dim C(𝒪_ν) + dim 𝔱^w) on every regular slope.
pub fn delta_agreement(max_rank: usize) -> CheckOutcome {
    let cells: Vec<(LieType, Slope)> = classical_types(1, max_rank)
        .into_iter()
        .flat_map(|t| slopes(&t, |_| true, |m| 2 * m).into_iter().map(move |s| (t, s)))
        .collect();
    let results = cells
        .par_iter()
        .map(|&(t, s)| {
            let th = match o_nu(&t, s) {
                Ok(th) => th,
                Err(e) => return Some(format!("{} {}: {}", t, s, e)),
            };
            let direct = delta(&t, s, &th.orbit);
            let closed = closed_form_delta(&t, s);
            match (closed, direct) {
                (Ok(a), Ok(b)) if a == b => None,
                (a, b) => Some(format!("{} {}: closed {:?} vs direct {:?}", t, s, a, b)),
            }
        })
        .collect();
    outcome("delta-agreement", results)
}

/// No two applicable rows of the complete classical table disagree.
pub fn row_overlap(max_rank: usize) -> CheckOutcome {
    let cells: Vec<(LieType, Slope)> = classical_types(1, max_rank)
        .into_iter()
        .flat_map(|t| slopes(&t, |_| true, |m| m).into_iter().map(move |s| (t, s)))
        .collect();
    let results = cells
        .par_iter()
        .map(|&(t, s)| {
            let rows = classical_rows(&t, s);
            if rows.is_empty() {
                return Some(format!("{} {}: no row applies", t, s));
            }
            rows.windows(2).find(|w| w[0].partition != w[1].partition).map(|w| {
                format!("{} {}: {} gives {} but {} gives {}", t, s, w[0].id, w[0].partition, w[1].id, w[1].partition)
            })
        })
        .collect();
    outcome("row-overlap", results)
}

/// Rigid cells from the direct scan against the classification predicate.
pub fn rigid_classification(max_rank: usize, predicate: fn(&LieType, Slope) -> bool) -> CheckOutcome {
    let mut results = Vec::new();
    for f in CLASSICAL {
        let scanned = scan_rigid(f, max_rank);
        for t in (1..=max_rank).filter_map(|r| LieType::new(f, r).ok()) {
            for s in slopes(&t, |m| t.is_elliptic_regular(m).unwrap_or(false), |m| 2 * m) {
                let direct = scanned.iter().any(|r| r.lie_type == t && r.slope == s);
                let pred = predicate(&t, s);
                results.push((direct != pred).then(|| format!("{} {}: scan {} vs predicate {}", t, s, direct, pred)));
            }
        }
    }
    outcome("rigid-classification", results)
}

/// The full suite run by `ds check`.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        coxeter_classical(10),
        skeleton_equivalence(6, 1000, 0),
        delta_agreement(10),
        row_overlap(12),
        rigid_classification(10, table_rigid),
    ]
}
