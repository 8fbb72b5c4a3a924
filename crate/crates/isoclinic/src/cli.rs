//! The `ds` command line.
//!
//! Exit codes: 0 decided, 1 a `check` sweep failed, 2 invalid input,
//! 3 the verdict needs Hasse data, 4 the oracle result is not certified.

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::checks;
use crate::coxeter::{coxeter_closed_form, coxeter_solve, CoxeterError};
use crate::orbits::{HasseDiagram, Orbit, OrbitSpec};
use crate::rigidity::{report, scan_rigid};
use crate::root_data::{Family, LieType, Slope};
use crate::skeleton::minimal_jordan_type;
use crate::solver::{ds_solve_q, ds_solve_with, Verdict};
use crate::tables::{render, TableName, TableRequest};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NEEDS_HASSE: i32 = 3;
pub const EXIT_NOT_CERTIFIED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "ds", version, about = "Isoclinic Deligne-Simpson solver and table checker")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide DS(ν, 𝒪) for a nilpotent or adjoint orbit.
    Solve(SolveArgs),
    /// Decide via the candidate orbits of a fixed characteristic polynomial.
    SolveQ(SolveQArgs),
    /// Threshold orbit for ν = d/h from d-allowable subsets.
    Coxeter(CoxeterArgs),
    /// Index of rigidity and cohomological rigidity.
    Delta(DeltaArgs),
    /// Classical or exceptional slopes with Δ_ν = 0.
    Rigid(RigidArgs),
    /// Minimal Jordan type from the lattice models.
    Oracle(OracleArgs),
    /// Regenerate a table as CSV.
    Tables(TablesArgs),
    /// Run the cross-validation sweeps.
    Check,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Family (`A`..`D`, `G2`, `F4`, `E6`..`E8`) or a full type such as `B4`.
    #[arg(long = "type")]
    pub ty: String,
    #[arg(long)]
    pub rank: Option<usize>,
}

impl TypeArgs {
    fn lie_type(&self) -> Result<LieType, String> {
        match self.rank {
            Some(r) => {
                let f: Family = self.ty.parse().map_err(|e| format!("{}", e))?;
                LieType::new(f, r).map_err(|e| e.to_string())
            }
            None => self.ty.parse().map_err(|e| format!("{}", e)),
        }
    }
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    /// `[3,1,1]`, `[2,2,2,2]II`, a label such as `A1`, or orbit JSON.
    #[arg(long, conflicts_with = "orbit_file")]
    pub orbit: Option<String>,
    #[arg(long)]
    pub orbit_file: Option<String>,
}

impl OrbitArgs {
    fn resolve(&self, t: LieType) -> Result<Orbit, String> {
        let text = match (&self.orbit, &self.orbit_file) {
            (Some(s), _) => s.clone(),
            (None, Some(path)) => fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e))?,
            (None, None) => return Err("--orbit or --orbit-file is required".into()),
        };
        let spec = OrbitSpec::parse(&text).map_err(|e| e.to_string())?;
        spec.resolve(t).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long)]
    pub slope: String,
    #[command(flatten)]
    pub orbit: OrbitArgs,
    /// Hasse diagram JSON for exceptional closure comparisons.
    #[arg(long)]
    pub hasse: Option<String>,
}

#[derive(Debug, Args)]
pub struct SolveQArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long)]
    pub slope: String,
    #[command(flatten)]
    pub orbit: OrbitArgs,
}

#[derive(Debug, Args)]
pub struct CoxeterArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long)]
    pub d: u64,
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long)]
    pub slope: String,
    #[command(flatten)]
    pub orbit: OrbitArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct RigidArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value_t = 10)]
    pub max_rank: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long)]
    pub slope: String,
    #[arg(long, default_value_t = 1000)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long)]
    pub name: String,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, default_value_t = 10)]
    pub max_rank: usize,
    /// For `t_clq`: the group.
    #[arg(long = "type")]
    pub ty: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// For `t_clq`: adjoint orbit JSON.
    #[arg(long)]
    pub orbit: Option<String>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{}", e) } else { write!(out, "{}", e) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {}", msg);
            EXIT_INVALID
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<(), String> {
    let s = serde_json::to_string_pretty(v).map_err(|e| e.to_string())?;
    writeln!(out, "{}", s).map_err(|e| e.to_string())
}

fn slope(s: &str) -> Result<Slope, String> {
    s.parse().map_err(|e: crate::root_data::RootDataError| e.to_string())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, String> {
    match cmd {
        Command::Solve(a) => {
            let t = a.ty.lie_type()?;
            let s = slope(&a.slope)?;
            let orbit = a.orbit.resolve(t)?;
            let hasse = match &a.hasse {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e))?;
                    Some(HasseDiagram::from_json(&text).map_err(|e| e.to_string())?)
                }
                None => None,
            };
            let ans = ds_solve_with(&t, s, &orbit, hasse.as_ref()).map_err(|e| e.to_string())?;
            emit_json(out, &ans)?;
            Ok(verdict_code(ans.affirmative))
        }
        Command::SolveQ(a) => {
            let t = a.ty.lie_type()?;
            let s = slope(&a.slope)?;
            let adjoint = match a.orbit.resolve(t)? {
                Orbit::Adjoint(x) => x,
                Orbit::Nilpotent(_) => return Err("solve-q needs an adjoint orbit".into()),
            };
            let ans = ds_solve_q(&t, s, &adjoint).map_err(|e| e.to_string())?;
            emit_json(out, &ans)?;
            Ok(verdict_code(ans.affirmative))
        }
        Command::Coxeter(a) => {
            let t = a.ty.lie_type()?;
            match coxeter_solve(&t, a.d) {
                Ok(sol) => {
                    #[derive(Serialize)]
                    struct Reply<'a> {
                        #[serde(flatten)]
                        solution: &'a crate::coxeter::CoxeterSolution,
                        closed_form: Option<crate::partitions::Partition>,
                    }
                    emit_json(out, &Reply { solution: &sol, closed_form: coxeter_closed_form(&t, a.d) })?;
                    Ok(EXIT_OK)
                }
                Err(CoxeterError::NeedsHasse { candidates, .. }) => {
                    emit_json(out, &serde_json::json!({ "verdict": "unknown-needs-hasse", "candidates": candidates }))?;
                    Ok(EXIT_NEEDS_HASSE)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Delta(a) => {
            let t = a.ty.lie_type()?;
            let s = slope(&a.slope)?;
            let orbit = a.orbit.resolve(t)?;
            let rep = report(&t, s, &orbit).map_err(|e| e.to_string())?;
            emit_json(out, &rep)?;
            Ok(EXIT_OK)
        }
        Command::Rigid(a) => {
            let family: Family = a.family.parse().map_err(|e: crate::root_data::RootDataError| e.to_string())?;
            let rows = scan_rigid(family, a.max_rank);
            match a.format {
                Format::Json => emit_json(out, &rows)?,
                Format::Csv => {
                    let mut w = csv::WriterBuilder::new()
                        .terminator(csv::Terminator::Any(b'\n'))
                        .from_writer(Vec::new());
                    let csv_err = |e: csv::Error| e.to_string();
                    w.write_record(["type", "slope", "orbit", "exists"]).map_err(csv_err)?;
                    for r in &rows {
                        let exists = match r.exists {
                            Some(true) => "yes",
                            Some(false) => "no",
                            None => "open",
                        };
                        w.write_record([r.lie_type.to_string(), r.slope.to_string(), r.orbit.to_string(), exists.into()])
                            .map_err(csv_err)?;
                    }
                    let bytes = w.into_inner().map_err(|e| e.to_string())?;
                    out.write_all(&bytes).map_err(|e| e.to_string())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Oracle(a) => {
            let t = a.ty.lie_type()?;
            let s = slope(&a.slope)?;
            let res = minimal_jordan_type(&t, s, a.budget, a.seed).map_err(|e| e.to_string())?;
            emit_json(out, &res)?;
            Ok(if res.certified { EXIT_OK } else { EXIT_NOT_CERTIFIED })
        }
        Command::Tables(a) => {
            let name: TableName = a.name.parse().map_err(|e: crate::tables::TableError| e.to_string())?;
            let family = match &a.family {
                Some(f) => Some(f.parse::<Family>().map_err(|e| e.to_string())?),
                None => None,
            };
            let mut req = TableRequest::new(name, family, a.max_rank);
            if let Some(text) = &a.orbit {
                let ty = a.ty.clone().ok_or("t_clq needs --type")?;
                let t = TypeArgs { ty, rank: a.rank }.lie_type()?;
                match OrbitSpec::parse(text).and_then(|s| s.resolve(t)).map_err(|e| e.to_string())? {
                    Orbit::Adjoint(x) => req.orbit = Some(x),
                    Orbit::Nilpotent(n) => {
                        req.orbit = Some(crate::orbits::AdjointOrbit::from_nilpotent(&n).map_err(|e| e.to_string())?)
                    }
                }
            }
            let csv = render(&req).map_err(|e| e.to_string())?;
            out.write_all(csv.as_bytes()).map_err(|e| e.to_string())?;
            Ok(EXIT_OK)
        }
        Command::Check => {
            let results = checks::run_all();
            for r in &results {
                writeln!(out, "{}", r.line()).map_err(|e| e.to_string())?;
            }
            Ok(if results.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::UnknownNeedsHasse => EXIT_NEEDS_HASSE,
        _ => EXIT_OK,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["ds"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn solve_b2() {
        let (code, out, _) = call(&["solve", "--type", "B", "--rank", "2", "--slope", "3/4", "--orbit", "[3,1,1]"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["affirmative"], true);
    }

    #[test]
    fn delta_f4() {
        let (code, out, _) = call(&["delta", "--type", "F4", "--slope", "5/6", "--orbit", "A1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["delta"], "2");
        assert_eq!(v["rigid"], false);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["solve", "--type", "B", "--rank", "2", "--slope", "7/6", "--orbit", "[3,1,1]"]).0, 2);
        assert_eq!(call(&["solve", "--type", "Q", "--slope", "1/2", "--orbit", "[1]"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["solve", "--type", "E6", "--slope", "7/12", "--orbit", "2A1"]).0, 3);
        assert_eq!(call(&["oracle", "--type", "B", "--rank", "4", "--slope", "1/4", "--seed", "7"]).0, 0);
    }

    #[test]
    fn emitted_json_reparses() {
        let (_, out, _) = call(&["oracle", "--type", "D", "--rank", "4", "--slope", "1/4"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let again: serde_json::Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
        assert_eq!(v["partition"], serde_json::json!([5, 3]));
    }

    #[test]
    fn tables_csv() {
        let (code, out, _) = call(&["tables", "--name", "t_clCox", "--family", "B", "--max-rank", "3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("type,d,h,"));
        let (code, out, _) = call(&["rigid", "--family", "C", "--max-rank", "4", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("type,slope,orbit,exists\n"));
    }
}
