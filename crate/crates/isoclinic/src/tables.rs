//! CSV regeneration of the threshold, rigidity and numerics tables.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use thiserror::Error;

use crate::coxeter::{coxeter_closed_form, coxeter_solve, minimal_candidates};
use crate::exceptional::{self, EXC_COXETER, F4_SLOPES, RIGID_NUMERICS};
use crate::orbits::{dim_centralizer, AdjointOrbit, NilpotentOrbit};
use crate::rigidity::{coxeter_delta, delta, index_rig_delta, printed_table_rigid, table_rigid};
use crate::root_data::{Family, LieType, Slope};
use crate::solver::{self, classical_rows, ds_solve_q, o_nu, q_candidates, ratio_string};

#[derive(Debug, Error)]
pub enum TableError {
    #[error("unknown table `{0}`")]
    UnknownTable(String),
    #[error("table {0} needs {1}")]
    MissingArgument(TableName, &'static str),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    ClCox,
    ExcCox,
    CompleteCl,
    ClQ,
    ClIndexRig,
    ClEllRig,
    DsSolnF4,
    PotigExc,
}

impl TableName {
    pub const ALL: [TableName; 8] = [
        TableName::ClCox,
        TableName::ExcCox,
        TableName::CompleteCl,
        TableName::ClQ,
        TableName::ClIndexRig,
        TableName::ClEllRig,
        TableName::DsSolnF4,
        TableName::PotigExc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableName::ClCox => "t_clCox",
            TableName::ExcCox => "t_excCox",
            TableName::CompleteCl => "t_completecl",
            TableName::ClQ => "t_clq",
            TableName::ClIndexRig => "t_cl_index_rig",
            TableName::ClEllRig => "t_cl_ell_rig",
            TableName::DsSolnF4 => "DSsolnF4",
            TableName::PotigExc => "potigexc",
        }
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableName {
    type Err = TableError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().trim_end_matches("-numerics");
        TableName::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(key))
            .ok_or_else(|| TableError::UnknownTable(s.to_string()))
    }
}

/// What to regenerate. Classical tables sweep `family` (all four when absent)
/// up to `max_rank`; `t_clq` needs a fixed type and adjoint orbit.
#[derive(Debug, Clone)]
pub struct TableRequest {
    pub name: TableName,
    pub family: Option<Family>,
    pub max_rank: usize,
    pub orbit: Option<AdjointOrbit>,
}

impl TableRequest {
    pub fn new(name: TableName, family: Option<Family>, max_rank: usize) -> Self {
        TableRequest { name, family, max_rank, orbit: None }
    }
}

type Rows = Vec<Vec<String>>;

pub fn render(req: &TableRequest) -> Result<String, TableError> {
    let (header, rows): (&[&str], Rows) = match req.name {
        TableName::ClCox => (
            &["type", "d", "h", "closed_form", "coxeter_route", "delta_closed", "delta_direct", "agree"],
            cl_cox(&classical_types(req)),
        ),
        TableName::ExcCox => (
            &["type", "d", "orbit", "delta", "nu_phi", "dim_c", "delta_direct", "route_path", "candidates"],
            exc_cox(),
        ),
        TableName::CompleteCl => (&["type", "m", "d", "rows", "orbit"], complete_cl(&classical_types(req))),
        TableName::ClQ => {
            let a = req.orbit.as_ref().ok_or(TableError::MissingArgument(req.name, "an adjoint orbit"))?;
            (&["type", "slope", "row", "candidate", "linear", "tail", "verdict"], cl_q(a))
        }
        TableName::ClIndexRig => (
            &["type", "m", "d", "delta_closed", "delta_direct", "agree"],
            cl_index_rig(&classical_types(req)),
        ),
        TableName::ClEllRig => (
            &["type", "m", "d", "orbit", "delta", "rigid_direct", "predicate", "printed_predicate"],
            cl_ell_rig(&classical_types(req)),
        ),
        TableName::DsSolnF4 => (&["slope", "orbit", "delta", "nu_phi", "dim_c", "delta_direct"], ds_soln_f4()),
        TableName::PotigExc => (
            &["type", "slope", "orbit", "exists", "printed", "nu_phi", "dim_c", "delta"],
            potig_exc(),
        ),
    };
    write_csv(header, rows)
}

fn write_csv(header: &[&str], rows: Rows) -> Result<String, TableError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn classical_types(req: &TableRequest) -> Vec<LieType> {
    let families = match req.family {
        Some(f) => vec![f],
        None => vec![Family::A, Family::B, Family::C, Family::D],
    };
    families
        .into_iter()
        .flat_map(|f| (1..=req.max_rank).filter_map(move |r| LieType::new(f, r).ok()))
        .filter(|t| t.is_classical())
        .collect()
}

/// Every `d/m` in lowest terms with `m` regular and `d < 2m`.
fn regular_cells(types: &[LieType], elliptic_only: bool) -> Vec<(LieType, Slope)> {
    let mut out = Vec::new();
    for t in types {
        for m in t.regular_numbers() {
            if elliptic_only && !t.is_elliptic_regular(m).unwrap_or(false) {
                continue;
            }
            for d in (1..2 * m).filter(|d| d.gcd(&m) == 1) {
                out.push((*t, Slope::new(d, m).expect("d, m positive")));
            }
        }
    }
    out
}

fn err_cell<E: fmt::Display>(e: E) -> String {
    format!("error: {}", e)
}

fn cl_cox(types: &[LieType]) -> Rows {
    let cells: Vec<(LieType, u64)> = types
        .iter()
        .flat_map(|t| {
            let h = t.coxeter_number() as u64;
            (1..3 * h).filter(move |d| d.gcd(&h) == 1).map(move |d| (*t, d))
        })
        .collect();
    cells
        .par_iter()
        .map(|&(t, d)| {
            let h = t.coxeter_number() as u64;
            let closed = coxeter_closed_form(&t, d);
            let route = coxeter_solve(&t, d).map(|c| c.orbit);
            let closed_delta = coxeter_delta(&t, d);
            let direct = route
                .as_ref()
                .ok()
                .and_then(|o| Slope::new(d, h).ok().and_then(|s| delta(&t, s, o).ok()));
            let agree = match (&closed, &route, &closed_delta, &direct) {
                (Some(p), Ok(o), Ok(a), Some(b)) => o.partition() == Some(p) && a == b,
                _ => false,
            };
            vec![
                t.to_string(),
                d.to_string(),
                h.to_string(),
                closed.map_or_else(|| "-".into(), |p| p.to_string()),
                route.map_or_else(err_cell, |o| o.to_string()),
                closed_delta.map_or_else(err_cell, |r| ratio_string(&r)),
                direct.map_or_else(|| "-".into(), |r| ratio_string(&r)),
                agree.to_string(),
            ]
        })
        .collect()
}

fn nu_phi(t: &LieType, s: Slope) -> String {
    ratio_string(&(s.value() * t.phi_count() as i64))
}

fn exc_cox() -> Rows {
    EXC_COXETER
        .par_iter()
        .map(|&(family, d, label, dl)| {
            let t = LieType::exceptional(family);
            let s = Slope::new(d, t.coxeter_number() as u64).expect("positive");
            let orbit = NilpotentOrbit::labelled_unchecked(t, label);
            let (path, candidates) = match coxeter_solve(&t, d) {
                Ok(c) => (c.path, c.candidates.iter().map(|(_, o)| o.to_string()).collect::<Vec<_>>()),
                Err(e) => (
                    err_cell(&e),
                    minimal_candidates(&t, d)
                        .map(|c| c.iter().map(|(_, o)| o.to_string()).collect())
                        .unwrap_or_default(),
                ),
            };
            vec![
                t.to_string(),
                d.to_string(),
                label.to_string(),
                dl.to_string(),
                nu_phi(&t, s),
                exceptional::dim_centralizer(family, label).map_or_else(|| "-".into(), |x| x.to_string()),
                delta(&t, s, &orbit).map_or_else(err_cell, |r| ratio_string(&r)),
                path,
                candidates.join(";"),
            ]
        })
        .collect()
}

fn complete_cl(types: &[LieType]) -> Rows {
    regular_cells(types, false)
        .par_iter()
        .map(|&(t, s)| {
            let ids = if s.at_least_one() {
                "nu_ge_1".to_string()
            } else {
                classical_rows(&t, s).iter().map(|r| r.id).collect::<Vec<_>>().join(";")
            };
            vec![
                t.to_string(),
                s.m().to_string(),
                s.d().to_string(),
                ids,
                o_nu(&t, s).map_or_else(err_cell, |th| th.orbit.to_string()),
            ]
        })
        .collect()
}

fn cl_q(a: &AdjointOrbit) -> Rows {
    let t = a.lie_type();
    let mut rows = Vec::new();
    for (_, s) in regular_cells(&[t], false).into_iter().filter(|(_, s)| !s.at_least_one()) {
        let verdict = ds_solve_q(&t, s, a).map_or_else(err_cell, |ans| verdict_string(ans.affirmative));
        match q_candidates(&t, s, a) {
            Ok((cands, path)) => {
                let row = path.rsplit(':').next().unwrap_or(&path).to_string();
                for (i, c) in cands.iter().enumerate() {
                    let linear: Vec<String> = c.linear.iter().map(|p| p.to_string()).collect();
                    rows.push(vec![
                        t.to_string(),
                        s.to_string(),
                        row.clone(),
                        i.to_string(),
                        linear.join(";"),
                        c.tail.as_ref().map_or_else(|| "-".into(), |p| p.to_string()),
                        verdict.clone(),
                    ]);
                }
            }
            Err(e) => rows.push(vec![
                t.to_string(),
                s.to_string(),
                "-".into(),
                "-".into(),
                "-".into(),
                "-".into(),
                err_cell(e),
            ]),
        }
    }
    rows
}

fn verdict_string(v: solver::Verdict) -> String {
    serde_json::to_value(v).map_or_else(err_cell, |j| match j {
        serde_json::Value::String(s) => s,
        other => other.to_string(),
    })
}

fn cl_index_rig(types: &[LieType]) -> Rows {
    regular_cells(types, false)
        .par_iter()
        .map(|&(t, s)| {
            let closed = index_rig_delta(&t, s);
            let direct = o_nu(&t, s).ok().and_then(|th| delta(&t, s, &th.orbit).ok());
            let agree = matches!((&closed, &direct), (Ok(a), Some(b)) if a == b);
            vec![
                t.to_string(),
                s.m().to_string(),
                s.d().to_string(),
                closed.map_or_else(err_cell, |r| ratio_string(&r)),
                direct.map_or_else(|| "-".into(), |r| ratio_string(&r)),
                agree.to_string(),
            ]
        })
        .collect()
}

fn cl_ell_rig(types: &[LieType]) -> Rows {
    regular_cells(types, true)
        .par_iter()
        .filter_map(|&(t, s)| {
            let th = o_nu(&t, s).ok()?;
            let dl = delta(&t, s, &th.orbit).ok()?;
            let direct = dl == num_rational::Ratio::from_integer(0);
            let (pred, printed) = (table_rigid(&t, s), printed_table_rigid(&t, s));
            (direct || pred || printed).then(|| {
                vec![
                    t.to_string(),
                    s.m().to_string(),
                    s.d().to_string(),
                    th.orbit.to_string(),
                    ratio_string(&dl),
                    direct.to_string(),
                    pred.to_string(),
                    printed.to_string(),
                ]
            })
        })
        .collect()
}

fn exceptional_row(t: &LieType, s: Slope, label: &str) -> (String, String, String) {
    let orbit = NilpotentOrbit::labelled_unchecked(*t, label);
    let dim = dim_centralizer(&orbit).map_or_else(err_cell, |x| x.to_string());
    let dl = delta(t, s, &orbit).map_or_else(err_cell, |r| ratio_string(&r));
    (nu_phi(t, s), dim, dl)
}

fn ds_soln_f4() -> Rows {
    let t = LieType::exceptional(Family::F4);
    F4_SLOPES
        .iter()
        .map(|&(d, m, label, dl)| {
            let s = Slope::new(d, m).expect("positive");
            let (np, dim, direct) = exceptional_row(&t, s, label);
            vec![s.to_string(), label.to_string(), dl.to_string(), np, dim, direct]
        })
        .collect()
}

fn potig_exc() -> Rows {
    RIGID_NUMERICS
        .iter()
        .map(|row| {
            let t = LieType::exceptional(row.family);
            let s = Slope::new(row.d, row.m).expect("positive");
            let (np, dim, dl) = exceptional_row(&t, s, row.label);
            let exists = match row.exists {
                Some(true) => "yes",
                Some(false) => "no",
                None => "open",
            };
            vec![
                t.to_string(),
                s.to_string(),
                row.label.to_string(),
                exists.to_string(),
                row.printed.unwrap_or("-").to_string(),
                np,
                dim,
                dl,
            ]
        })
        .collect()
}
