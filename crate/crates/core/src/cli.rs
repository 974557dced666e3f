//! Command-line front end. `run` does all the work and returns the exit
//! code with the captured output, so `main` only prints.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::arrangement::{Arrangement, Family, Flat};
use crate::complex::{
    h_polynomial, hilbert_function, hilbert_series, link_f_vector, reverse_h, FVector,
};
use crate::identities::{default_catalog, number, run_all, verify_input, Catalog, Identity, VerificationReport, VerifyInputError};
use crate::io::{parse_input, parse_json, AnyArrangement, Input, InputError};
use crate::polyseries::IntPolynomial;
use crate::shelling::{check_shelling, shell_link, shell_link_faces, ShellingError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Largest `n` enumerated without `--force`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub a: usize,
    pub b: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self { a: 8, b: 5 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot read ARRLAB_BUDGET `{0}`: expected `N` or `A=N,B=M`")]
pub struct BudgetError(String);

impl Budget {
    /// `N` caps both families; `A=N,B=M` caps each (either may be omitted).
    pub fn parse(text: &str) -> Result<Self, BudgetError> {
        let bad = || BudgetError(text.to_string());
        let text = text.trim();
        if let Ok(n) = text.parse::<usize>() {
            return Ok(Self { a: n, b: n });
        }
        let mut budget = Self::default();
        for part in text.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: usize = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "A" | "a" => budget.a = value,
                "B" | "b" => budget.b = value,
                _ => return Err(bad()),
            }
        }
        Ok(budget)
    }

    pub fn from_env() -> Result<Self, BudgetError> {
        match std::env::var("ARRLAB_BUDGET") {
            Ok(text) => Self::parse(&text),
            Err(_) => Ok(Self::default()),
        }
    }

    fn limit(&self, family: Family) -> usize {
        match family {
            Family::TypeA => self.a,
            Family::TypeB => self.b,
        }
    }

    fn check(&self, family: Family, n: usize) -> Result<(), CliError> {
        let limit = self.limit(family);
        if n > limit {
            return Err(CliError::Budget { family, n, limit });
        }
        Ok(())
    }
}

#[derive(Parser, Debug)]
#[command(name = "arrlab", version, about = "Link complexes of subspace arrangements in the type A and B Coxeter arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input document: a file, `-` for stdin, or inline JSON. Defaults to stdin.
    #[arg(long, global = true)]
    pub input: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Ignore the enumeration budget.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Characteristic polynomial.
    Chi,
    /// Tail polynomial x^dim - chi.
    Tail,
    /// f-vector of the link complex.
    Fvector,
    /// h-polynomial and reverse h-polynomial of the link.
    Hpoly,
    /// Hilbert series of the face ring of the link, with its first values.
    Hilbert,
    /// Shelling order of the link of a hyperplane arrangement, checked.
    Shell,
    /// Verify one identity on the input.
    Verify { identity: String },
    /// Run every identity over a catalog (the built-in one without --input).
    Report,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read input: {0}")]
    Read(String),
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("refusing to enumerate type {family} faces with n = {n} (budget {limit}); use --force or ARRLAB_BUDGET")]
    Budget { family: Family, n: usize, limit: usize },
    #[error(transparent)]
    BudgetEnv(#[from] BudgetError),
    #[error(transparent)]
    Verify(#[from] VerifyInputError),
    #[error(transparent)]
    Shelling(#[from] ShellingError),
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let budget = if cli.force {
        Ok(Budget { a: usize::MAX, b: usize::MAX })
    } else {
        Budget::from_env()
    };
    let document = if cli.command == Command::Report && cli.input.is_none() {
        Ok(None)
    } else {
        read_document(cli.input.as_deref(), stdin).map(Some)
    };
    let result = budget.map_err(CliError::from).and_then(|budget| {
        let document = document?;
        match cli.threads {
            Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
                Ok(pool) => pool.install(|| dispatch(&cli, budget, document.as_deref())),
                Err(e) => Err(CliError::Usage(e.to_string())),
            },
            None => dispatch(&cli, budget, document.as_deref()),
        }
    });
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read_document(input: Option<&str>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match input {
        None | Some("-") => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(|e| CliError::Read(e.to_string()))?;
            Ok(text)
        }
        Some(inline) if inline.trim_start().starts_with('{') => Ok(inline.to_string()),
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Read(format!("{path}: {e}"))),
    }
}

pub fn parse_catalog(text: &str) -> Result<Catalog, InputError> {
    let value = parse_json(text)?;
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        InputError::Validation { field: if path == "." { String::new() } else { path }, message: e.into_inner().to_string() }
    })
}

fn catalog_within(catalog: &Catalog, budget: Budget) -> Result<(), CliError> {
    let mut sizes: Vec<(Family, usize)> = Vec::new();
    sizes.extend(catalog.graphs.iter().map(|g| (Family::TypeA, g.n())));
    sizes.extend(catalog.hypergraphs.iter().map(|h| (Family::TypeA, h.n())));
    sizes.extend(catalog.signed_graphs.iter().map(|s| (Family::TypeB, s.n())));
    for a in catalog.arrangements.iter().chain(&catalog.singles).chain(catalog.fixtures.iter().map(|f| &f.arrangement)) {
        let ambient = a.ambient();
        sizes.push((ambient.family, ambient.n));
    }
    sizes.extend(catalog.eulerian_a.iter().map(|&n| (Family::TypeA, n)));
    sizes.extend(catalog.eulerian_b.iter().map(|&n| (Family::TypeB, n)));
    sizes.into_iter().try_for_each(|(family, n)| budget.check(family, n))
}

/// `document` is `None` only for `report` without `--input`.
fn dispatch(cli: &Cli, budget: Budget, document: Option<&str>) -> Result<(i32, String), CliError> {
    if cli.command == Command::Report {
        let catalog = match document {
            None => default_catalog(),
            Some(text) => parse_catalog(text)?,
        };
        catalog_within(&catalog, budget)?;
        return Ok(report_lines(&run_all(&catalog)));
    }
    let input = parse_input(document.unwrap_or_default())?;
    let arrangement = || input.to_arrangement().map_err(CliError::from);
    let enumerable = |a: &AnyArrangement| {
        let ambient = a.ambient();
        budget.check(ambient.family, ambient.n)
    };
    let out = match &cli.command {
        Command::Chi => polynomial_output("chi", &arrangement()?.char_poly(), cli.json),
        Command::Tail => polynomial_output("tail", &arrangement()?.tail_poly(), cli.json),
        Command::Fvector => {
            let a = arrangement()?;
            enumerable(&a)?;
            fvector_output(&a.link_f_vector(), cli.json)
        }
        Command::Hpoly => {
            let a = arrangement()?;
            enumerable(&a)?;
            hpoly_output(&a.link_f_vector(), cli.json)
        }
        Command::Hilbert => {
            let a = arrangement()?;
            enumerable(&a)?;
            hilbert_output(&a.link_f_vector(), cli.json)
        }
        Command::Shell => {
            let a = arrangement()?;
            enumerable(&a)?;
            return match &a {
                AnyArrangement::A(a) => shell_output(a, cli.json),
                AnyArrangement::B(a) => shell_output(a, cli.json),
            };
        }
        Command::Verify { identity } => {
            let identity: Identity = identity.parse().map_err(|e: crate::identities::UnknownIdentity| CliError::Usage(e.to_string()))?;
            if identity != Identity::DeletionRestriction {
                let (family, n) = input_size(&input);
                budget.check(family, n)?;
            }
            let reports = verify_input(identity, &input)?;
            return Ok(if cli.json { report_lines(&reports) } else { report_text(&reports) });
        }
        Command::Report => unreachable!("handled above"),
    };
    Ok((EXIT_OK, out))
}

fn input_size(input: &Input) -> (Family, usize) {
    match input {
        Input::Arrangement(a) => (a.ambient().family, a.ambient().n),
        Input::Graph(g) => (Family::TypeA, g.n()),
        Input::Hypergraph(h) => (Family::TypeA, h.n()),
        Input::SignedGraph(s) => (Family::TypeB, s.n()),
    }
}

fn exit_for(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.pass) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn report_lines(reports: &[VerificationReport]) -> (i32, String) {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("reports serialize"));
        out.push('\n');
    }
    (exit_for(reports), out)
}

fn report_text(reports: &[VerificationReport]) -> (i32, String) {
    let mut out = String::new();
    for r in reports {
        let verdict = if r.pass { "pass" } else { "FAIL" };
        let _ = writeln!(out, "{}: {verdict}", r.identity);
        let _ = writeln!(out, "  lhs: {}", r.lhs);
        let _ = writeln!(out, "  rhs: {}", r.rhs);
    }
    (exit_for(reports), out)
}

fn poly_json(p: &IntPolynomial) -> Value {
    json!({ "human": p.to_human(), "coeffs": p })
}

fn to_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn polynomial_output(key: &str, p: &IntPolynomial, as_json: bool) -> String {
    if as_json {
        to_line(&json!({ key: poly_json(p) }))
    } else {
        format!("{}\n", p.to_human())
    }
}

fn fvector_output(f: &FVector, as_json: bool) -> String {
    if as_json {
        to_line(&json!({ "f_vector": f, "d": f.d() }))
    } else {
        let counts: Vec<String> = f.counts().iter().map(u64::to_string).collect();
        format!("({})\n", counts.join(", "))
    }
}

fn hpoly_output(f: &FVector, as_json: bool) -> String {
    let h = h_polynomial(f);
    let hbar = reverse_h(f);
    if as_json {
        to_line(&json!({ "h": poly_json(&h), "h_reverse": poly_json(&hbar), "d": f.d() }))
    } else {
        format!("h = {}\nh_reverse = {}\n", h.to_human(), hbar.to_human())
    }
}

fn hilbert_output(f: &FVector, as_json: bool) -> String {
    let series = hilbert_series(f);
    let d = f.d().unwrap_or(0);
    let values: Vec<Value> = (0..=2 * d + 4).map(|m| number(&hilbert_function(f, m))).collect();
    if as_json {
        to_line(&json!({ "series": series, "values": values }))
    } else {
        let shown: Vec<String> = values.iter().map(Value::to_string).collect();
        format!("{series}\nH(0..) = {}\n", shown.join(", "))
    }
}

fn shell_output<S: Flat>(a: &Arrangement<S>, as_json: bool) -> Result<(i32, String), CliError> {
    let faces = shell_link_faces(a)?;
    let (complex, order) = shell_link(a)?;
    let verdict = check_shelling(complex.complex(), &order)?;
    let code = if verdict.is_shelling { EXIT_OK } else { EXIT_FAILED };
    let labels: Vec<String> = faces.iter().map(|f| format!("{f:?}")).collect();
    let out = if as_json {
        to_line(&json!({
            "facets": labels,
            "order": order,
            "is_shelling": verdict.is_shelling,
            "first_violation": verdict.first_violation,
        }))
    } else {
        let mut out = String::new();
        for (i, label) in labels.iter().enumerate() {
            let _ = writeln!(out, "{:>4} {label}", i + 1);
        }
        let _ = writeln!(out, "is_shelling: {}", verdict.is_shelling);
        if let Some(j) = verdict.first_violation {
            let _ = writeln!(out, "first_violation: {j}");
        }
        out
    };
    Ok((code, out))
}

impl AnyArrangement {
    pub fn char_poly(&self) -> IntPolynomial {
        match self {
            Self::A(a) => a.char_poly(),
            Self::B(a) => a.char_poly(),
        }
    }

    pub fn tail_poly(&self) -> IntPolynomial {
        match self {
            Self::A(a) => a.tail_poly(),
            Self::B(a) => a.tail_poly(),
        }
    }

    pub fn link_f_vector(&self) -> FVector {
        match self {
            Self::A(a) => link_f_vector(a),
            Self::B(a) => link_f_vector(a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const K3: &str = r#"{"n":3,"edges":[[1,2],[1,3],[2,3]]}"#;

    fn go(args: &[&str], stdin: &str) -> Outcome {
        let mut argv = vec!["arrlab"];
        argv.extend_from_slice(args);
        run(argv, &mut stdin.as_bytes())
    }

    #[test]
    fn chi_on_k3() {
        let out = go(&["chi"], K3);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "x^2 - 3x + 2\n");
        let out = go(&["chi", "--json", "--input", K3], "");
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["chi"]["human"], json!("x^2 - 3x + 2"));
        assert_eq!(v["chi"]["coeffs"], json!([2, -3, 1]));
    }

    #[test]
    fn tail_and_fvector() {
        assert_eq!(go(&["tail"], K3).stdout, "3x - 2\n");
        assert_eq!(go(&["fvector"], K3).stdout, "(1, 6)\n");
        let v: Value = serde_json::from_str(&go(&["hpoly", "--json"], K3).stdout).unwrap();
        assert_eq!(v["h_reverse"]["coeffs"], json!([1, 5]));
        let v: Value = serde_json::from_str(&go(&["hilbert", "--json"], K3).stdout).unwrap();
        assert_eq!(v["values"], json!([1, 6, 6, 6, 6, 6, 6]));
    }

    #[test]
    fn verify_steingrimsson_on_k3() {
        let out = go(&["verify", "steingrimsson"], K3);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.starts_with("Steingrimsson: pass"));
        let out = go(&["verify", "theorem-sn", "--json"], K3);
        let r: VerificationReport = serde_json::from_str(out.stdout.trim()).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn shell_on_k3() {
        let out = go(&["shell", "--json"], K3);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["is_shelling"], json!(true));
        assert_eq!(v["facets"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn input_errors_exit_2() {
        assert_eq!(go(&["chi"], "{").code, 2);
        let out = go(&["chi"], r#"{"n":3,"hyperedges":[[1,2],[1,2,3]]}"#);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("hyperedges"), "{}", out.stderr);
        assert_eq!(go(&["verify", "nonsense"], K3).code, 2);
        assert_eq!(go(&["bogus"], K3).code, 2);
        let mixed = r#"{"ambient":{"family":"A","n":3},"subspaces":[{"blocks":[[1,2,3]]}]}"#;
        assert_eq!(go(&["shell"], mixed).code, 2);
        assert_eq!(go(&["verify", "theorem-bn"], K3).code, 2);
    }

    #[test]
    fn budget_guard() {
        let big = r#"{"ambient":{"family":"B","n":6},"subspaces":[{"zero":[1],"signed_blocks":[]}]}"#;
        let out = go(&["fvector"], big);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("--force"));
        assert_eq!(go(&["chi"], big).code, 0);
        assert_eq!(Budget::parse("3").unwrap(), Budget { a: 3, b: 3 });
        assert_eq!(Budget::parse("A=4,B=2").unwrap(), Budget { a: 4, b: 2 });
        assert_eq!(Budget::parse("B=2").unwrap(), Budget { a: 8, b: 2 });
        assert!(Budget::parse("C=1").is_err());
    }

    #[test]
    fn small_report() {
        let catalog = r#"{"eulerian_a":[3],"eulerian_b":[2]}"#;
        let out = go(&["report", "--input", catalog, "--threads", "2"], "");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout.lines().count(), 2);
        let bad = r#"{"fixtures":[{"arrangement":{"n":3,"edges":[[1,2]]},"f_vector":[1]}]}"#;
        assert_eq!(go(&["report", "--input", bad], "").code, 2);
    }

    #[test]
    fn output_is_deterministic() {
        let a = go(&["shell", "--json"], K3);
        let b = go(&["shell", "--json", "--threads", "3"], K3);
        assert_eq!(a, b);
    }
}
