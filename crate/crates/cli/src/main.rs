//! `hpp`: JSON-in, JSON-out front end for the exact checkers, certificates,
//! and generators of `hpp-core`.
//!
//! Exit codes: 0 = true / proves-stable, 1 = false / proves-unstable,
//! 2 = inconclusive, 64 = usage error, 65 = bad input data, 70 = an
//! expansion guard (term cap) tripped. Every emitted JSON document is
//! accepted back by the matching reader.

use clap::{Args, Parser, Subcommand};
use hpp_core::dfunc::{self, DiscreteFunction, MaxReport};
use hpp_core::generators::{self, ScaledPsd, WeightedGraph};
use hpp_core::lattice::{self, PointSet};
use hpp_core::puiseux::PuiseuxNumber;
use hpp_core::rat::parse_ratio;
use hpp_core::stability::{self, CertVerdict, StabilityCertificate, UnivariatePoly};
use hpp_core::tpoly::{PuiseuxPolynomial, DEFAULT_TERM_CAP};
use hpp_core::{CheckReport, Error};
use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::Serialize;
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "hpp",
    version,
    about = "Exact checkers and certificates for discrete concavity and stable polynomials",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Axiom checks for point sets, discrete functions, and hives
    Check {
        #[command(subcommand)]
        target: CheckTarget,
    },
    /// Tropicalize a polynomial: the valuation of each coefficient
    Trop(PolyIn),
    /// Build certified stable polynomials from discrete data
    Construct {
        #[command(subcommand)]
        target: ConstructTarget,
    },
    /// Stability certificates and falsifiers
    Certify {
        #[command(subcommand)]
        target: CertifyTarget,
    },
    /// Example generators: graph polynomials, determinants, Fano, randoms
    Gen {
        #[command(subcommand)]
        target: GenTarget,
    },
    /// Maximization of discrete functions
    Max {
        #[command(subcommand)]
        target: MaxTarget,
    },
}

/// Shared input plumbing: a path (default stdin) and the schema switch.
#[derive(Args)]
struct Io {
    /// Read input from this file instead of stdin
    #[arg(short = 'i', long = "input", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Print the JSON shapes this command reads and writes, then exit
    #[arg(long)]
    schema: bool,
}

#[derive(Args)]
struct SetIn {
    #[command(flatten)]
    io: Io,
    /// Include the witness (offending points, tried steps) in the output
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct FuncIn {
    #[command(flatten)]
    io: Io,
    /// Include the witness in the output
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct PolyIn {
    #[command(flatten)]
    io: Io,
}

#[derive(Subcommand)]
enum CheckTarget {
    /// Two-step exchange axiom for a finite point set
    JumpSystem(SetIn),
    /// Equivalent exchange axiom in its second form
    J2(SetIn),
    /// Single-step variant of the exchange axiom
    JNatural(SetIn),
    /// Jump system inside the 0/1 cube
    DeltaMatroid(SetIn),
    /// Constant-sum 0/1 basis-exchange check
    Matroid(SetIn),
    /// Exchange concavity of a discrete function
    M(FuncIn),
    /// Local (distance-4) form of exchange concavity
    MLoc(FuncIn),
    /// Concavity of the slack homogenization
    MNatural(FuncIn),
    /// Rhombus inequalities on a full discrete triangle
    Hive {
        #[command(flatten)]
        func: FuncIn,
        /// Require strict inequalities
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Subcommand)]
enum ConstructTarget {
    /// Stable univariate polynomial from a concave sequence
    Onevar(PolyFuncIn),
    /// Puiseux polynomial t^h(a) x^a1 y^a2 z^a3 from a strict hive
    StrictHive {
        #[command(flatten)]
        io: Io,
        /// Comma-separated exponents m for the slice parameters t^m
        #[arg(long = "mu-samples", value_name = "LIST")]
        mu_samples: Option<String>,
    },
    /// Positive polynomial Q^(h0+h) from an integer hive
    QuantB {
        #[command(flatten)]
        io: Io,
        /// Quotient base (default: the sufficient bound 2(n-1), at least 1)
        #[arg(long = "Q", value_name = "RATIONAL")]
        q: Option<String>,
        /// Accept a base below the sufficient bound
        #[arg(long)]
        force: bool,
        /// Comma-separated positive rationals for the slice harness
        #[arg(long = "lambda-samples", value_name = "LIST")]
        lambda_samples: Option<String>,
    },
}

#[derive(Args)]
struct PolyFuncIn {
    #[command(flatten)]
    io: Io,
}

#[derive(Subcommand)]
enum CertifyTarget {
    /// Newton's inequalities (necessary for real-rootedness)
    Newton {
        #[command(flatten)]
        io: Io,
        /// Degree bound n (default: the degree of the input)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Concavity of a valuation sequence on an integer interval
    ValNewton {
        #[command(flatten)]
        io: Io,
        /// Require strict concavity
        #[arg(long)]
        strict: bool,
    },
    /// Sufficient coefficient condition a_k^2 >= 4 a_(k-1) a_(k+1)
    Hutchinson {
        #[command(flatten)]
        io: Io,
        /// Also certify that no nonzero root is multiple
        #[arg(long)]
        strict: bool,
    },
    /// Exact real-root count by Sturm chains
    Sturm(PolyIn),
    /// Sampled falsifier dP/dzi dP/dzj - d2P/dzidzj P >= 0 for multiaffine P
    Sr(PolyIn),
    /// Trivariate slice harness: every sampled restriction real-rooted
    LemmaBasic {
        #[command(flatten)]
        io: Io,
        /// Comma-separated positive rationals for the slice parameter
        #[arg(long = "lambda-samples", value_name = "LIST")]
        lambda_samples: Option<String>,
    },
    /// Rhombus quotient bound (l+1)/(2l) for positive triangle polynomials
    Rhombus(PolyIn),
}

#[derive(Subcommand)]
enum GenTarget {
    /// Degree-sequence polynomial of a weighted graph
    GraphPoly {
        #[command(flatten)]
        io: Io,
        /// Abort if the expansion exceeds this many terms
        #[arg(long = "term-cap", value_name = "N")]
        term_cap: Option<usize>,
    },
    /// Matching polynomial of a weighted graph
    Matching(PolyIn),
    /// det(z1 A1 + ... + zn An) for symmetric PSD matrices
    PsdDet(PolyIn),
    /// Sum of squared maximal minors of an r x n matrix
    BasisPoly(PolyIn),
    /// Valuations of principal minors of a skew-symmetric matrix
    Skew(PolyIn),
    /// The Fano matroid: distance function (default) or basis set
    Fano {
        #[command(flatten)]
        io: Io,
        /// Emit the 28 basis indicator points instead of the distance function
        #[arg(long)]
        bases: bool,
    },
    /// Seeded random integer hive on the level-n triangle
    RandomHive {
        #[command(flatten)]
        io: Io,
        /// Triangle level
        #[arg(long)]
        n: i64,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Make every rhombus inequality strict
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Subcommand)]
enum MaxTarget {
    /// Exhaustive maximum and argmax over the support
    Brute(PolyFuncIn),
}

/// A diagnostic plus the process exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TermCapExceeded { .. } => 70,
            _ => 65,
        };
        fail(code, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        fail(65, format!("invalid JSON: {e}"))
    }
}

fn main() {
    let code = match Cli::try_parse() {
        Ok(cli) => match dispatch(cli.command) {
            Ok(code) => code,
            Err(f) => {
                eprintln!("error: {}", f.message);
                f.code
            }
        },
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    64
                }
            }
        }
    };
    std::process::exit(code);
}

fn read_input(io: &Io) -> Result<String, Failure> {
    match &io.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| fail(65, format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| fail(65, format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse_input<T: DeserializeOwned>(io: &Io) -> Result<T, Failure> {
    let raw = read_input(io)?;
    Ok(serde_json::from_str(&raw)?)
}

fn emit<T: Serialize>(value: &T) -> Result<(), Failure> {
    let js = serde_json::to_string(value)
        .map_err(|e| fail(70, format!("serialization failed: {e}")))?;
    println!("{js}");
    Ok(())
}

/// Print a report (optionally stripped of its witness) and map the verdict
/// to an exit code.
fn finish_report(mut report: CheckReport, witness: bool) -> Result<i32, Failure> {
    if !witness {
        report.witness = None;
    }
    emit(&report)?;
    Ok(if report.verdict { 0 } else { 1 })
}

fn verdict_exit(v: CertVerdict) -> i32 {
    match v {
        CertVerdict::ProvesStable => 0,
        CertVerdict::ProvesUnstable => 1,
        CertVerdict::Inconclusive => 2,
    }
}

/// Parse a comma-separated list of rationals from a flag value (usage error
/// when malformed).
fn parse_list(raw: &Option<String>, flag: &str) -> Result<Option<Vec<BigRational>>, Failure> {
    match raw {
        None => Ok(None),
        Some(s) => s
            .split(',')
            .map(|part| {
                parse_ratio(part.trim())
                    .map_err(|e| fail(64, format!("--{flag}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Some),
    }
}

fn parse_flag_ratio(raw: &Option<String>, flag: &str) -> Result<Option<BigRational>, Failure> {
    match raw {
        None => Ok(None),
        Some(s) => parse_ratio(s.trim())
            .map(Some)
            .map_err(|e| fail(64, format!("--{flag}: {e}"))),
    }
}

const SCHEMA_SET: &str = r#"input (point set): {"dim": 2, "points": [[0, 0], [1, 1]]}
output: {"verdict": bool, "witness"?: {...}, "notes"?: [string]}"#;

const SCHEMA_FUNC: &str = r#"input (discrete function): {"points": [{"alpha": [0, 0], "value": "p/q"}, ...]}
output: {"verdict": bool, "witness"?: {...}, "notes"?: [string]}"#;

const SCHEMA_POLY: &str = r#"input (polynomial): {"nvars": 3, "terms": [{"alpha": [1, 0, 0], "coeff": [{"exp": "0", "c": "p/q"}, ...]}, ...]}
 (a coefficient is a sum of rational powers of t: exponent "exp", rational coefficient "c")"#;

const SCHEMA_UNIVARIATE: &str =
    r#"input (univariate polynomial, constant term first): {"coeffs": ["1", "2", "1"]}"#;

const SCHEMA_GRAPH: &str = r#"input (weighted loopless graph, 1-based vertices):
 {"n": 3, "edges": [{"u": 1, "v": 2, "w": "p/q", "c": 1}, ...]}  ("c" optional, default 1)"#;

const SCHEMA_PSD: &str = r#"input (list of symmetric PSD matrices, rationals as strings):
 [{"a": [["1", "0"], ["0", "1"]], "tpow": "1"}, ...]  ("tpow" optional: scale by t^tpow)"#;

const SCHEMA_MATRIX: &str =
    r#"input (r x n rational matrix, row-major): [["1", "0", "1"], ["0", "1", "1"]]"#;

const SCHEMA_SKEW: &str = r#"input (skew-symmetric matrix of Puiseux scalars):
 [[[], [{"exp": "1", "c": "1"}]], [[{"exp": "1", "c": "-1"}], []]]  (each entry a term list)"#;

fn schema(io: &Io, text: &str) -> Option<Result<i32, Failure>> {
    if io.schema {
        println!("{text}");
        Some(Ok(0))
    } else {
        None
    }
}

fn dispatch(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Check { target } => run_check(target),
        Command::Trop(args) => {
            if let Some(r) = schema(&args.io, &format!("{SCHEMA_POLY}\noutput: discrete function")) {
                return r;
            }
            let poly: PuiseuxPolynomial = parse_input(&args.io)?;
            let trop = poly.tropicalize()?;
            emit(&trop)?;
            Ok(0)
        }
        Command::Construct { target } => run_construct(target),
        Command::Certify { target } => run_certify(target),
        Command::Gen { target } => run_gen(target),
        Command::Max { target } => match target {
            MaxTarget::Brute(args) => {
                if let Some(r) =
                    schema(&args.io, &format!("{SCHEMA_FUNC}\noutput: {{\"max\": \"p/q\", \"argmax\": point set}}"))
                {
                    return r;
                }
                let f: DiscreteFunction = parse_input(&args.io)?;
                let (max, argmax) = dfunc::brute_max(&f);
                emit(&MaxReport { max, argmax })?;
                Ok(0)
            }
        },
    }
}

fn run_check(target: CheckTarget) -> Result<i32, Failure> {
    match target {
        CheckTarget::JumpSystem(a) => {
            if let Some(r) = schema(&a.io, SCHEMA_SET) {
                return r;
            }
            let s: PointSet = parse_input(&a.io)?;
            finish_report(lattice::is_jump_system(&s), a.witness)
        }
        CheckTarget::J2(a) => {
            if let Some(r) = schema(&a.io, SCHEMA_SET) {
                return r;
            }
            let s: PointSet = parse_input(&a.io)?;
            finish_report(lattice::check_J2(&s), a.witness)
        }
        CheckTarget::JNatural(a) => {
            if let Some(r) = schema(&a.io, SCHEMA_SET) {
                return r;
            }
            let s: PointSet = parse_input(&a.io)?;
            finish_report(lattice::check_J_natural(&s), a.witness)
        }
        CheckTarget::DeltaMatroid(a) => {
            if let Some(r) = schema(&a.io, SCHEMA_SET) {
                return r;
            }
            let s: PointSet = parse_input(&a.io)?;
            finish_report(lattice::is_delta_matroid(&s), a.witness)
        }
        CheckTarget::Matroid(a) => {
            if let Some(r) = schema(&a.io, SCHEMA_SET) {
                return r;
            }
            let s: PointSet = parse_input(&a.io)?;
            finish_report(lattice::is_matroid_basis_set(&s)?, a.witness)
        }
        CheckTarget::M(a) => {
            if let Some(r) = schema(&a.io, SCHEMA_FUNC) {
                return r;
            }
            let f: DiscreteFunction = parse_input(&a.io)?;
            finish_report(dfunc::check_M(&f), a.witness)
        }
        CheckTarget::MLoc(a) => {
            if let Some(r) = schema(&a.io, SCHEMA_FUNC) {
                return r;
            }
            let f: DiscreteFunction = parse_input(&a.io)?;
            finish_report(dfunc::check_M_loc(&f)?, a.witness)
        }
        CheckTarget::MNatural(a) => {
            if let Some(r) = schema(&a.io, SCHEMA_FUNC) {
                return r;
            }
            let f: DiscreteFunction = parse_input(&a.io)?;
            finish_report(dfunc::check_M_natural(&f)?, a.witness)
        }
        CheckTarget::Hive { func, strict } => {
            if let Some(r) = schema(&func.io, SCHEMA_FUNC) {
                return r;
            }
            let f: DiscreteFunction = parse_input(&func.io)?;
            finish_report(dfunc::is_hive(&f, strict)?, func.witness)
        }
    }
}

fn run_construct(target: ConstructTarget) -> Result<i32, Failure> {
    match target {
        ConstructTarget::Onevar(a) => {
            if let Some(r) = schema(
                &a.io,
                &format!("{SCHEMA_FUNC}\n (one-dimensional, gap-free interval)\noutput: {{\"poly\": ..., \"certificate\": ...}}"),
            ) {
                return r;
            }
            let f: DiscreteFunction = parse_input(&a.io)?;
            let out = stability::onevar_hpp_construct(&f)?;
            emit(&out)?;
            Ok(verdict_exit(out.certificate.verdict))
        }
        ConstructTarget::StrictHive { io, mu_samples } => {
            if let Some(r) = schema(
                &io,
                &format!("{SCHEMA_FUNC}\n (a strict hive on a full triangle)\noutput: {{\"poly\": ..., \"certificate\": ...}}"),
            ) {
                return r;
            }
            let mus = parse_list(&mu_samples, "mu-samples")?
                .unwrap_or_else(stability::default_mus);
            let h: DiscreteFunction = parse_input(&io)?;
            let out = stability::strict_hive_to_puiseux_hpp(&h, &mus)?;
            emit(&out)?;
            Ok(verdict_exit(out.certificate.verdict))
        }
        ConstructTarget::QuantB { io, q, force, lambda_samples } => {
            if let Some(r) = schema(
                &io,
                &format!("{SCHEMA_FUNC}\n (an integer-valued hive on a full triangle)\noutput: {{\"poly\": ..., \"certificate\": ..., \"harness\": ...}}"),
            ) {
                return r;
            }
            let lambdas = parse_list(&lambda_samples, "lambda-samples")?
                .unwrap_or_else(stability::default_lambdas);
            let q = parse_flag_ratio(&q, "Q")?;
            let h: DiscreteFunction = parse_input(&io)?;
            let q = match q {
                Some(v) => v,
                None => {
                    let n = h.iter().next().map(|(p, _)| p.coord_sum()).unwrap_or(0);
                    BigRational::from_integer((2 * (n - 1)).max(1).into())
                }
            };
            let out = stability::quant_b_construct(&h, &q, force, &lambdas)?;
            emit(&out)?;
            Ok(verdict_exit(out.certificate.verdict))
        }
    }
}

fn run_certify(target: CertifyTarget) -> Result<i32, Failure> {
    match target {
        CertifyTarget::Newton { io, n } => {
            if let Some(r) = schema(&io, SCHEMA_UNIVARIATE) {
                return r;
            }
            let p: UnivariatePoly = parse_input(&io)?;
            let bound = match n {
                Some(v) => v,
                None => p.degree().ok_or_else(|| {
                    fail(65, "the zero polynomial has no degree; pass --n")
                })?,
            };
            let report = stability::newton_check(&p, bound)?;
            emit(&report)?;
            Ok(if report.verdict { 0 } else { 1 })
        }
        CertifyTarget::ValNewton { io, strict } => {
            if let Some(r) = schema(&io, &format!("{SCHEMA_FUNC}\n (one-dimensional interval)")) {
                return r;
            }
            let f: DiscreteFunction = parse_input(&io)?;
            let report = stability::val_newton_check(&f, strict)?;
            emit(&report)?;
            Ok(if report.verdict { 0 } else { 1 })
        }
        CertifyTarget::Hutchinson { io, strict } => {
            if let Some(r) = schema(&io, SCHEMA_UNIVARIATE) {
                return r;
            }
            let p: UnivariatePoly = parse_input(&io)?;
            let cert = stability::hutchinson_check(&p, strict)?;
            emit(&cert)?;
            Ok(verdict_exit(cert.verdict))
        }
        CertifyTarget::Sturm(a) => {
            if let Some(r) = schema(
                &a.io,
                &format!("{SCHEMA_UNIVARIATE}\noutput: {{\"all_real\": bool, \"distinct_real_roots\": n, \"multiple_nonzero_root\": bool}}"),
            ) {
                return r;
            }
            let p: UnivariatePoly = parse_input(&a.io)?;
            let report = stability::sturm_real_rooted(&p)?;
            emit(&report)?;
            Ok(if report.all_real { 0 } else { 1 })
        }
        CertifyTarget::Sr(a) => {
            if let Some(r) = schema(
                &a.io,
                &format!("{SCHEMA_POLY}\n (multiaffine, constant coefficients; sampled on a fixed rational grid)"),
            ) {
                return r;
            }
            let p: PuiseuxPolynomial = parse_input(&a.io)?;
            let samples = stability::default_samples(p.nvars());
            let report = stability::sr_falsifier(&p, &samples)?;
            emit(&report)?;
            // A clean pass is only "no violation found": inconclusive.
            Ok(if report.verdict { 2 } else { 1 })
        }
        CertifyTarget::LemmaBasic { io, lambda_samples } => {
            if let Some(r) = schema(
                &io,
                &format!("{SCHEMA_POLY}\n (trivariate, homogeneous, nonnegative constant coefficients)"),
            ) {
                return r;
            }
            let lambdas = parse_list(&lambda_samples, "lambda-samples")?
                .unwrap_or_else(stability::default_lambdas);
            let p: PuiseuxPolynomial = parse_input(&io)?;
            let cert: StabilityCertificate = stability::lemma_basic_harness(&p, &lambdas)?;
            emit(&cert)?;
            Ok(verdict_exit(cert.verdict))
        }
        CertifyTarget::Rhombus(a) => {
            if let Some(r) = schema(
                &a.io,
                &format!("{SCHEMA_POLY}\n (positive constant coefficients on a full triangle)"),
            ) {
                return r;
            }
            let p: PuiseuxPolynomial = parse_input(&a.io)?;
            let report = stability::rhombus_quotient_check(&p)?;
            emit(&report)?;
            Ok(if report.verdict { 0 } else { 1 })
        }
    }
}

fn run_gen(target: GenTarget) -> Result<i32, Failure> {
    match target {
        GenTarget::GraphPoly { io, term_cap } => {
            if let Some(r) = schema(&io, &format!("{SCHEMA_GRAPH}\noutput: polynomial")) {
                return r;
            }
            let g: WeightedGraph = parse_input(&io)?;
            let p = generators::degree_sequence_poly(&g, term_cap.unwrap_or(DEFAULT_TERM_CAP))?;
            emit(&p)?;
            Ok(0)
        }
        GenTarget::Matching(a) => {
            if let Some(r) = schema(&a.io, &format!("{SCHEMA_GRAPH}\noutput: polynomial")) {
                return r;
            }
            let g: WeightedGraph = parse_input(&a.io)?;
            emit(&generators::matching_poly(&g))?;
            Ok(0)
        }
        GenTarget::PsdDet(a) => {
            if let Some(r) = schema(&a.io, &format!("{SCHEMA_PSD}\noutput: polynomial")) {
                return r;
            }
            let mats: Vec<ScaledPsd> = parse_input(&a.io)?;
            emit(&generators::psd_det_poly(&mats)?)?;
            Ok(0)
        }
        GenTarget::BasisPoly(a) => {
            if let Some(r) = schema(&a.io, &format!("{SCHEMA_MATRIX}\noutput: polynomial")) {
                return r;
            }
            let raw: Vec<Vec<String>> = parse_input(&a.io)?;
            let m = raw
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| parse_ratio(s).map_err(Failure::from))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            emit(&generators::basis_generating_poly(&m)?)?;
            Ok(0)
        }
        GenTarget::Skew(a) => {
            if let Some(r) = schema(&a.io, &format!("{SCHEMA_SKEW}\noutput: discrete function")) {
                return r;
            }
            let m: Vec<Vec<PuiseuxNumber>> = parse_input(&a.io)?;
            emit(&generators::skew_minors_function(&m)?)?;
            Ok(0)
        }
        GenTarget::Fano { io, bases } => {
            if let Some(r) = schema(
                &io,
                "no input\noutput: distance function on the level-3 triangle in dimension 7 \
                 (with --bases: the 28 basis indicator points)",
            ) {
                return r;
            }
            if bases {
                emit(&generators::fano_bases())?;
            } else {
                emit(&generators::fano_distance())?;
            }
            Ok(0)
        }
        GenTarget::RandomHive { io, n, seed, strict } => {
            if let Some(r) = schema(&io, "no input\noutput: discrete function (a verified hive)") {
                return r;
            }
            if n < 0 {
                return Err(fail(64, "--n must be nonnegative"));
            }
            let h = if strict {
                generators::random_strict_hive(n, seed)
            } else {
                generators::random_hive(n, seed)
            };
            emit(&h)?;
            Ok(0)
        }
    }
}
