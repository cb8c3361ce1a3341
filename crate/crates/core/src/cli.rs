//! Command-line front end: `qchar <command> [flags]`.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 an identity failed to hold.

use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::haar::{self, HaarError};
use crate::heckealg::{primitive_idempotent, CharacterTable, Permutation};
use crate::partitions::{partitions_of, syt, Partition};
use crate::qmatrix::{random_diagonal, FrtAlgebra, MatrixPoint, QMatrixError};
use crate::rmatrix::{quantum_rank, HeckeSymmetry, RMatrixError, RhoTable};
use crate::scalar::{Rational, Scalar};
use crate::symfunc::SymFunc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

const CHAR_TABLE_LIMIT: usize = 6;
const CAYLEY_POINTS: usize = 5;

#[derive(Parser, Debug)]
#[command(
    name = "qchar",
    version,
    about = "Exact character theory of type-A quantum groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Drinfel'd–Jimbo R-matrix of rank R (default 2)
    #[arg(long, value_name = "R", global = true, conflicts_with = "rmatrix")]
    pub dj: Option<usize>,

    /// R-matrix JSON file
    #[arg(long, value_name = "PATH", global = true)]
    pub rmatrix: Option<PathBuf>,

    /// Degree
    #[arg(short = 'n', value_name = "N", global = true)]
    pub n: Option<usize>,

    /// Partition, e.g. 2,1
    #[arg(short = 'l', value_name = "PARTITION", global = true)]
    pub shape: Option<Partition>,

    /// Seed for random diagonal points
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,

    /// Also evaluate every scalar at p = P0 (a rational such as 3/2)
    #[arg(long, value_name = "P0", global = true)]
    pub p0: Option<String>,

    /// Cross-check against an independent computation
    #[arg(long, global = true)]
    pub check: bool,

    /// JSON file with diagonal points: [["1","p^2"],["3/2","1"]]
    #[arg(long, value_name = "PATH", global = true)]
    pub points: Option<PathBuf>,

    /// Monomial for `integral`: I;J;K;L with 1-based comma lists
    #[arg(long, value_name = "I;J;K;L", global = true)]
    pub monomial: Option<String>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Yang–Baxter, Hecke, closure, CD and even-rank checks
    Verify,
    /// Irreducible characters χ^λ(T_w) of the Hecke algebra
    CharTable,
    /// Quantum rank of M_λ
    Qdim,
    /// q-HCIZ identity at diagonal points
    Hciz,
    /// Characteristic equation of the quantum matrix
    Cayley,
    /// Quantum Schur function S_λ, symbolic and at a point
    Schur,
    /// Haar integral: character Gram matrix or a single monomial
    Integral,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::CharTable => "char-table",
            Command::Qdim => "qdim",
            Command::Hciz => "hciz",
            Command::Cayley => "cayley",
            Command::Schur => "schur",
            Command::Integral => "integral",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug)]
pub struct UsageError(pub String);

impl From<RMatrixError> for UsageError {
    fn from(e: RMatrixError) -> Self {
        UsageError(e.to_string())
    }
}

impl From<QMatrixError> for UsageError {
    fn from(e: QMatrixError) -> Self {
        UsageError(e.to_string())
    }
}

impl From<HaarError> for UsageError {
    fn from(e: HaarError) -> Self {
        UsageError(e.to_string())
    }
}

/// Validated configuration of one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub r: usize,
    pub n: Option<usize>,
    pub shape: Option<Partition>,
    pub seed: u64,
    pub format: Format,
    pub rmatrix: Option<PathBuf>,
    pub p0: Option<Rational>,
    pub check: bool,
    pub points: Option<PathBuf>,
    pub monomial: Option<String>,
}

/// A command's result: a JSON object plus an optional table for CSV output.
pub struct Report {
    pub body: Map<String, Value>,
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
    pub ok: bool,
}

struct Ctx {
    cfg: RunConfig,
    h: HeckeSymmetry,
}

impl Ctx {
    fn scalar(&self, s: &Scalar) -> Value {
        match &self.cfg.p0 {
            None => Value::String(s.to_string()),
            Some(p0) => {
                let at = match s.eval_at(p0) {
                    Ok(v) => v.to_string(),
                    Err(_) => "undefined".to_string(),
                };
                json!({"exact": s.to_string(), "at_p0": at})
            }
        }
    }

    fn scalars(&self, v: &[Scalar]) -> Value {
        Value::Array(v.iter().map(|s| self.scalar(s)).collect())
    }

    fn need_n(&self) -> Result<usize, UsageError> {
        match self.cfg.n {
            Some(n) if n >= 1 => Ok(n),
            _ => Err(UsageError(format!(
                "{} needs -n N with N >= 1",
                self.cfg.command.name()
            ))),
        }
    }

    fn need_shape(&self) -> Result<Partition, UsageError> {
        match &self.cfg.shape {
            Some(s) if s.size() >= 1 => Ok(s.clone()),
            _ => Err(UsageError(format!(
                "{} needs -l PARTITION",
                self.cfg.command.name()
            ))),
        }
    }

    /// Diagonal points from --points, or seeded random ones.
    fn diagonals(&self, count: usize) -> Result<Vec<Vec<Scalar>>, UsageError> {
        let r = self.cfg.r;
        let pts = match &self.cfg.points {
            Some(path) => read_points(path)?,
            None => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
                (0..count).map(|_| random_diagonal(&mut rng, r)).collect()
            }
        };
        if pts.len() < count {
            return Err(UsageError(format!(
                "need {count} points, found {}",
                pts.len()
            )));
        }
        if let Some(p) = pts.iter().find(|p| p.len() != r) {
            return Err(UsageError(format!(
                "point of length {} for r = {r}",
                p.len()
            )));
        }
        Ok(pts)
    }

    fn point(&self, d: &[Scalar]) -> Result<MatrixPoint, UsageError> {
        Ok(MatrixPoint::diagonal(&self.h, d)?)
    }
}

fn read_points(path: &PathBuf) -> Result<Vec<Vec<Scalar>>, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| UsageError(format!("points: {e}")))?;
    let lists = v
        .as_array()
        .ok_or_else(|| UsageError("points: expected a list".into()))?;
    lists
        .iter()
        .map(|l| {
            l.as_array()
                .ok_or_else(|| UsageError("points: expected a list of lists".into()))?
                .iter()
                .map(|x| {
                    let s = match x {
                        Value::String(s) => s.clone(),
                        Value::Number(n) => n.to_string(),
                        _ => return Err(UsageError(format!("points: bad entry {x}"))),
                    };
                    Scalar::from_str(&s).map_err(|e| UsageError(format!("points: {s}: {e}")))
                })
                .collect()
        })
        .collect()
}

fn load_symmetry(cli: &Cli) -> Result<HeckeSymmetry, UsageError> {
    match (&cli.rmatrix, cli.dj) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            Ok(HeckeSymmetry::from_json(&text)?)
        }
        (None, Some(0)) => Err(UsageError("--dj needs R >= 1".into())),
        (None, Some(r)) => Ok(HeckeSymmetry::dj(r)),
        (None, None) => Ok(HeckeSymmetry::dj(2)),
    }
}

fn config_of(cli: &Cli, r: usize) -> Result<RunConfig, UsageError> {
    let p0 = match &cli.p0 {
        None => None,
        Some(s) => Some(Rational::from_str(s).map_err(|e| UsageError(format!("--p0 {s}: {e}")))?),
    };
    Ok(RunConfig {
        command: cli.command,
        r,
        n: cli.n,
        shape: cli.shape.clone(),
        seed: cli.seed,
        format: cli.format,
        rmatrix: cli.rmatrix.clone(),
        p0,
        check: cli.check,
        points: cli.points.clone(),
        monomial: cli.monomial.clone(),
    })
}

fn obj(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn cmd_verify(ctx: &Ctx) -> Result<Report, UsageError> {
    let h = &ctx.h;
    let r = h.r();
    let ax = h.verify_axioms();
    let twist = Scalar::q_pow(-(r as i64) - 1);
    let cd_ok = ax.cd_scalar.as_ref() == Some(&twist);
    let even = ax.closed && h.even_rank_check(r);
    let ok = ax.all_pass() && cd_ok && even;
    let body = obj(vec![
        ("r", json!(r)),
        ("yang_baxter", json!(ax.yang_baxter)),
        ("hecke", json!(ax.hecke)),
        ("closed", json!(ax.closed)),
        (
            "cd_scalar",
            ax.cd_scalar.as_ref().map_or(Value::Null, |s| ctx.scalar(s)),
        ),
        ("cd_equals_q_pow_minus_r_minus_1", json!(cd_ok)),
        ("even_rank", json!(even)),
        ("match", json!(ok)),
    ]);
    Ok(Report {
        body,
        table: None,
        ok,
    })
}

fn perm_string(w: &Permutation) -> String {
    w.one_line()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn shape_string(s: &Partition) -> String {
    s.parts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_char_table(ctx: &Ctx) -> Result<Report, UsageError> {
    let n = ctx.need_n()?;
    if n > CHAR_TABLE_LIMIT {
        return Err(UsageError(format!(
            "char-table supports n <= {CHAR_TABLE_LIMIT}"
        )));
    }
    let table = CharacterTable::new(n);
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for shape in table.shapes() {
        for w in table.perms() {
            let v = table.value(shape, w);
            rows.push(vec![shape_string(shape), perm_string(w), v.to_string()]);
            entries.push(json!({
                "partition": shape.parts(),
                "permutation": w.one_line(),
                "value": ctx.scalar(&v),
            }));
        }
    }
    let mut body = obj(vec![("n", json!(n)), ("table", Value::Array(entries))]);
    let mut ok = true;
    if ctx.cfg.check {
        ok = haar::char_table_check(n);
        body.insert("match".into(), json!(ok));
    }
    let header = ["partition", "permutation", "value"]
        .map(String::from)
        .to_vec();
    Ok(Report {
        body,
        table: Some((header, rows)),
        ok,
    })
}

fn cmd_qdim(ctx: &Ctx) -> Result<Report, UsageError> {
    let shape = ctx.need_shape()?;
    let r = ctx.cfg.r;
    let rank = quantum_rank(&shape, r);
    let mut body = obj(vec![
        ("partition", json!(shape.parts())),
        ("r", json!(r)),
        ("quantum_rank", ctx.scalar(&rank)),
    ]);
    let mut ok = true;
    if ctx.cfg.check {
        let t = &syt(&shape)[0];
        let f = RhoTable::new(&ctx.h, shape.size()).apply(&primitive_idempotent(t));
        let bt = ctx.h.braided_trace(&f)?;
        ok = bt == rank;
        body.insert("braided_trace".into(), ctx.scalar(&bt));
        body.insert("match".into(), json!(ok));
    }
    Ok(Report {
        body,
        table: None,
        ok,
    })
}

fn cmd_hciz(ctx: &Ctx) -> Result<Report, UsageError> {
    let n = ctx.need_n()?;
    let pts = ctx.diagonals(2)?;
    let (m, nn) = (ctx.point(&pts[0])?, ctx.point(&pts[1])?);
    let rep = haar::hciz(&ctx.h, &m, &nn, n)?;
    let ok = rep.matches();
    let body = obj(vec![
        ("n", json!(n)),
        ("r", json!(ctx.cfg.r)),
        ("seed", json!(ctx.cfg.seed)),
        ("mu", ctx.scalars(&pts[0])),
        ("nu", ctx.scalars(&pts[1])),
        ("lhs", ctx.scalar(&rep.lhs)),
        ("rhs", ctx.scalar(&rep.rhs)),
        ("match", json!(ok)),
    ]);
    Ok(Report {
        body,
        table: None,
        ok,
    })
}

fn cmd_cayley(ctx: &Ctx) -> Result<Report, UsageError> {
    let r = ctx.cfg.r;
    let alg = FrtAlgebra::new(ctx.h.clone());
    let m = alg.characteristic_matrix(r, false)?;
    let symbolic = m.iter().flatten().all(|p| p.is_zero());
    let entries: Vec<Value> = m
        .iter()
        .map(|row| Value::Array(row.iter().map(|p| json!(p.to_string())).collect()))
        .collect();
    let literal = alg.characteristic_matrix(r, true)?;
    let literal_zero = literal.iter().flatten().all(|p| p.is_zero());
    let pts = ctx.diagonals(CAYLEY_POINTS)?;
    let mut at_points = true;
    for d in &pts {
        let v = alg.cayley_hamilton_at(&ctx.point(d)?)?;
        at_points &= (0..r).all(|i| (0..r).all(|j| v[(i, j)].is_zero()));
    }
    let ok = symbolic && at_points;
    let body = obj(vec![
        ("r", json!(r)),
        ("seed", json!(ctx.cfg.seed)),
        ("characteristic_matrix", Value::Array(entries)),
        ("symbolic_zero", json!(symbolic)),
        ("points_zero", json!(at_points)),
        ("points", json!(pts.len())),
        ("literal_signs_zero", json!(literal_zero)),
        ("match", json!(ok)),
    ]);
    Ok(Report {
        body,
        table: None,
        ok,
    })
}

fn cmd_schur(ctx: &Ctx) -> Result<Report, UsageError> {
    let shape = ctx.need_shape()?;
    let r = ctx.cfg.r;
    let n = shape.size();
    let alg = FrtAlgebra::new(ctx.h.clone());
    let symbolic = alg.schur_element(&shape)?;
    let pts = ctx.diagonals(1)?;
    let a = &pts[0];
    let value = alg.char_at_point(&shape, &ctx.point(a)?)?;
    // t^n s_λ(D_ii a_i)
    let d = ctx.h.closure()?.d().clone();
    let weighted: Vec<Scalar> = (0..r).map(|i| &d[(i, i)] * &a[i]).collect();
    let s = SymFunc::schur(shape.clone());
    let expected = &s.specialize(&weighted) * &Scalar::p_pow(((r + 1) * n) as i64);
    let claimed_at: Vec<Scalar> = (0..r)
        .map(|i| &a[i] * &Scalar::q_pow(i as i64 + 1))
        .collect();
    let claimed = s.specialize(&claimed_at);
    let ok = value == expected;
    let body = obj(vec![
        ("partition", json!(shape.parts())),
        ("r", json!(r)),
        ("seed", json!(ctx.cfg.seed)),
        ("symbolic", json!(symbolic.to_string())),
        ("point", ctx.scalars(a)),
        ("value", ctx.scalar(&value)),
        ("weighted_schur", ctx.scalar(&expected)),
        ("schur_at_q_i_a_i", ctx.scalar(&claimed)),
        ("equals_schur_at_q_i_a_i", json!(value == claimed)),
        ("match", json!(ok)),
    ]);
    Ok(Report {
        body,
        table: None,
        ok,
    })
}

fn parse_monomial(s: &str) -> Result<Vec<Vec<usize>>, UsageError> {
    let parts: Vec<&str> = s.split(';').collect();
    if parts.len() != 4 {
        return Err(UsageError("--monomial needs four lists I;J;K;L".into()));
    }
    parts
        .iter()
        .map(|p| {
            p.split(',')
                .filter(|w| !w.trim().is_empty())
                .map(|w| match w.trim().parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(i - 1),
                    _ => Err(UsageError(format!("--monomial: bad index {w}"))),
                })
                .collect()
        })
        .collect()
}

fn cmd_integral(ctx: &Ctx) -> Result<Report, UsageError> {
    let r = ctx.cfg.r;
    if let Some(m) = &ctx.cfg.monomial {
        let idx = parse_monomial(m)?;
        let v = haar::integral_monomial(&ctx.h, &idx[0], &idx[1], &idx[2], &idx[3])?;
        let one_based = |v: &Vec<usize>| json!(v.iter().map(|i| i + 1).collect::<Vec<_>>());
        let body = obj(vec![
            ("r", json!(r)),
            ("i", one_based(&idx[0])),
            ("j", one_based(&idx[1])),
            ("k", one_based(&idx[2])),
            ("l", one_based(&idx[3])),
            ("value", ctx.scalar(&v)),
        ]);
        return Ok(Report {
            body,
            table: None,
            ok: true,
        });
    }
    let n = ctx.need_n()?;
    let shapes: Vec<Partition> = partitions_of(n)
        .into_iter()
        .filter(|s| s.length() <= r)
        .collect();
    let gram = haar::orthogonality_matrix(&ctx.h, n)?;
    let mut ok = true;
    let mut rows = Vec::new();
    for (a, row) in gram.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            ok &= *v
                == if a == b {
                    Scalar::one()
                } else {
                    Scalar::zero()
                };
            rows.push(vec![
                shape_string(&shapes[a]),
                shape_string(&shapes[b]),
                v.to_string(),
            ]);
        }
    }
    let body = obj(vec![
        ("n", json!(n)),
        ("r", json!(r)),
        (
            "partitions",
            json!(shapes
                .iter()
                .map(|s| s.parts().to_vec())
                .collect::<Vec<_>>()),
        ),
        (
            "gram",
            Value::Array(gram.iter().map(|row| ctx.scalars(row)).collect()),
        ),
        ("match", json!(ok)),
    ]);
    let header = ["lambda", "mu", "value"].map(String::from).to_vec();
    Ok(Report {
        body,
        table: Some((header, rows)),
        ok,
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

pub fn render(
    command: Command,
    report: &Report,
    format: Format,
    elapsed_ms: Option<u128>,
) -> String {
    let mut body = report.body.clone();
    body.insert("command".into(), json!(command.name()));
    let value = Value::Object(body);
    match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
        Format::Csv => {
            let mut s = String::new();
            match &report.table {
                Some((header, rows)) => {
                    s += &header.join(",");
                    s.push('\n');
                    for row in rows {
                        s += &row
                            .iter()
                            .map(|c| csv_field(c))
                            .collect::<Vec<_>>()
                            .join(",");
                        s.push('\n');
                    }
                }
                None => {
                    let mut pairs = Vec::new();
                    flatten("", &value, &mut pairs);
                    s += "key,value\n";
                    for (k, v) in pairs {
                        s += &format!("{},{}\n", csv_field(&k), csv_field(&v));
                    }
                }
            }
            s
        }
        Format::Pretty => {
            let mut pairs = Vec::new();
            let skip_table = report.table.is_some();
            let mut s = String::new();
            if let (true, Some((header, rows))) = (skip_table, &report.table) {
                let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
                for row in rows {
                    for (i, c) in row.iter().enumerate() {
                        widths[i] = widths[i].max(c.chars().count());
                    }
                }
                let line = |cells: &[String]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                s += &line(header);
                s.push('\n');
                for row in rows {
                    s += &line(row);
                    s.push('\n');
                }
            }
            if let Value::Object(m) = &value {
                for (k, v) in m {
                    if skip_table && (k == "table" || k == "gram") {
                        continue;
                    }
                    flatten(k, v, &mut pairs);
                }
            }
            for (k, v) in pairs {
                s += &format!("{k}: {v}\n");
            }
            if let Some(ms) = elapsed_ms {
                s += &format!("elapsed: {ms} ms\n");
            }
            s
        }
    }
}

/// Runs a parsed command line; returns the exit code and the text for stdout
/// (or stderr when the code is 1).
pub fn run(cli: &Cli) -> (i32, String) {
    let start = Instant::now();
    let result = (|| -> Result<(RunConfig, Report), UsageError> {
        let h = load_symmetry(cli)?;
        let cfg = config_of(cli, h.r())?;
        let ctx = Ctx {
            cfg: cfg.clone(),
            h,
        };
        let report = match cfg.command {
            Command::Verify => cmd_verify(&ctx),
            Command::CharTable => cmd_char_table(&ctx),
            Command::Qdim => cmd_qdim(&ctx),
            Command::Hciz => cmd_hciz(&ctx),
            Command::Cayley => cmd_cayley(&ctx),
            Command::Schur => cmd_schur(&ctx),
            Command::Integral => cmd_integral(&ctx),
        }?;
        Ok((cfg, report))
    })();
    match result {
        Err(UsageError(msg)) => (EXIT_USAGE, format!("error: {msg}\n")),
        Ok((cfg, report)) => {
            let elapsed = (cfg.format == Format::Pretty).then(|| start.elapsed().as_millis());
            let code = if report.ok { EXIT_OK } else { EXIT_FAILED };
            (code, render(cfg.command, &report, cfg.format, elapsed))
        }
    }
}

/// Parses arguments and runs; clap's own usage errors map to exit code 1.
pub fn run_from_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            (code, e.render().to_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_parsing() {
        assert_eq!(
            parse_monomial("1,2;2,1;1;2").unwrap(),
            vec![vec![0, 1], vec![1, 0], vec![0], vec![1]]
        );
        assert!(parse_monomial("0;1;1;1").is_err());
        assert!(parse_monomial("1;1;1").is_err());
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("p^2"), "p^2");
    }
}
