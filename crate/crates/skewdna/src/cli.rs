//! Command-line surface.
//!
//! Every subcommand is a pure function of its arguments: no timestamps, no
//! randomness, so identical invocations produce byte-identical output. Two
//! output modes: `--format text` for reading, `--format structured` for one
//! self-describing JSON document per run (each carries a versioned `schema`
//! field).
//!
//! Exit codes: 0 success; 1 domain errors (non-divisor, guard exceeded, …)
//! with a one-line `error: <code>: <message>` on stderr; 2 usage and parse
//! errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::codes::SkewCyclicCode;
use crate::dna;
use crate::gf::FieldDescriptor;
use crate::search::{
    factor_odd_length_with_guard, find_right_divisors_with_guard, sweep_and_classify, DivisorKind,
    DivisorQuery, SweepReport,
};
use crate::skewpoly::{x_pow_n_minus_one, PalindromeKind, SkewPolynomial};
use crate::{Error, ParseError, DEFAULT_ENUM_GUARD, DEFAULT_SEARCH_GUARD};

const ENUM_GUARD_ENV: &str = "SKEWDNA_ENUM_GUARD";
const SEARCH_GUARD_ENV: &str = "SKEWDNA_SEARCH_GUARD";

#[derive(Parser)]
#[command(
    name = "skewdna",
    version,
    about = "Skew cyclic codes over F_(4^2s) and their DNA images",
    after_help = "Polynomials use the grammar '1 + a^7*x + x^3' with 'a' the primitive element.\n\
                  Exit codes: 0 success, 1 domain error, 2 usage/parse error."
)]
pub struct Cli {
    /// Field size parameter: the alphabet is F_(4^2s), so q = 16, 256, 4096, 65536
    #[arg(long, global = true, default_value_t = 1)]
    s: u32,

    /// Override the F_2 modulus for the field, as a hex bit mask (e.g. 0x13)
    #[arg(long, global = true, value_parser = parse_hex_u32)]
    modulus: Option<u32>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on exhaustive codeword enumeration, in codewords
    /// [default: 2^24; env SKEWDNA_ENUM_GUARD]
    #[arg(long, global = true)]
    enum_guard: Option<u64>,

    /// Cap on divisor-search candidate spaces, in candidates
    /// [default: 2^24; env SKEWDNA_SEARCH_GUARD]
    #[arg(long, global = true)]
    search_guard: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Right,
    Left,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Any,
    Palindromic,
    ThetaPalindromic,
}

impl KindArg {
    fn to_kind(self) -> DivisorKind {
        match self {
            KindArg::Any => DivisorKind::Any,
            KindArg::Palindromic => DivisorKind::Palindromic,
            KindArg::ThetaPalindromic => DivisorKind::ThetaPalindromic,
        }
    }

    fn name(self) -> &'static str {
        match self {
            KindArg::Any => "any",
            KindArg::Palindromic => "palindromic",
            KindArg::ThetaPalindromic => "theta-palindromic",
        }
    }
}

/// Exactly one polynomial source: inline or a file with one polynomial per
/// line (blank lines and lines starting with '#' are skipped).
#[derive(Args)]
#[group(required = true, multiple = false)]
struct PolySource {
    /// The polynomial, e.g. "1 + a^7*x + a^13*x^2 + x^3"
    #[arg(long)]
    g: Option<String>,

    /// File of polynomials, one per line, for a batch run
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Describe the field: modulus, automorphism, fixed subfield
    FieldInfo {
        /// Also list every element with its bit pattern and additive form
        #[arg(long)]
        table: bool,
    },
    /// Multiply two skew polynomials (the twist is x*a = a^(4^s)*x)
    PolyMul {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Divide f by g and print quotient and remainder
    PolyDivmod {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// Division side: right solves f = q*g + r, left solves f = g*q + r
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
    },
    /// Check whether g right-divides x^n - 1 and print the cofactor
    CheckDivisor {
        /// Code length n
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        source: PolySource,
    },
    /// Print the skew reciprocal of a polynomial and its shape flags
    Reciprocal {
        #[arg(long)]
        g: String,
    },
    /// List all monic right divisors of x^n - 1 of one degree
    Search {
        /// Code length n
        #[arg(long)]
        n: usize,
        /// Divisor degree m, with 1 <= m < n
        #[arg(long)]
        degree: usize,
        /// Restrict to a palindromic shape
        #[arg(long, value_enum, default_value_t = KindArg::Any)]
        kind: KindArg,
        /// Report at most this many divisors (after sorting)
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Factor x^n - 1 over the fixed subfield F_(4^s), for odd n
    FactorOdd {
        /// Code length n (odd, at most 63)
        #[arg(long)]
        n: usize,
    },
    /// Parameters and shape flags of the code generated by g
    CodeInfo {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: String,
    },
    /// Generator of the dual code
    Dual {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: String,
    },
    /// Dump the field-to-DNA correspondence table as TSV
    DnaTable,
    /// Write every codeword of <g> as a DNA string
    DnaExport {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: String,
        /// FASTA framing: a ">cw<i>" header line before each word
        #[arg(long)]
        fasta: bool,
    },
    /// Decide whether <g> is a reversible DNA code, structurally and by
    /// exhaustion
    VerifyReversible {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        source: PolySource,
    },
    /// Find every right divisor of x^n - 1 and classify all the codes
    Sweep {
        #[arg(long)]
        n: usize,
    },
}

/// A failed run: domain errors exit 1, usage errors exit 2.
enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn parse_hex_u32(text: &str) -> Result<u32, String> {
    let t = text
        .trim()
        .trim_start_matches("0x")
        .trim_start_matches("0X");
    u32::from_str_radix(t, 16).map_err(|e| format!("expected a hex bit mask like 0x13: {e}"))
}

fn resolve_guard(flag: Option<u64>, env_key: &str, default: u64) -> Result<u64, Failure> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var(env_key) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|e| Failure::Usage(format!("{env_key} must be an integer: {e}"))),
        Err(_) => Ok(default),
    }
}

/// Entry point for the binary: parse, run, translate failures to exit codes.
pub fn main_entry() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version print to stdout and exit 0; real parse errors
            // go to stderr and exit 2.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: usage: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.code());
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let field = match cli.modulus {
        Some(m) => FieldDescriptor::build_with_modulus(cli.s, m)?,
        None => FieldDescriptor::build(cli.s)?,
    };
    let enum_guard = resolve_guard(cli.enum_guard, ENUM_GUARD_ENV, DEFAULT_ENUM_GUARD)?;
    let search_guard = resolve_guard(cli.search_guard, SEARCH_GUARD_ENV, DEFAULT_SEARCH_GUARD)?;
    let format = cli.format;
    match &cli.command {
        Command::FieldInfo { table } => field_info(&field, format, *table),
        Command::PolyMul { f, g } => poly_mul(&field, format, f, g),
        Command::PolyDivmod { f, g, side } => poly_divmod(&field, format, f, g, *side),
        Command::CheckDivisor { n, source } => check_divisor(&field, format, *n, source),
        Command::Reciprocal { g } => reciprocal(&field, format, g),
        Command::Search {
            n,
            degree,
            kind,
            limit,
        } => search(&field, format, *n, *degree, *kind, *limit, search_guard),
        Command::FactorOdd { n } => factor_odd(&field, format, *n, search_guard),
        Command::CodeInfo { n, g } => code_info(&field, format, *n, g, enum_guard),
        Command::Dual { n, g } => dual(&field, format, *n, g),
        Command::DnaTable => dna_table(&field, format),
        Command::DnaExport { n, g, fasta } => dna_export(&field, format, *n, g, *fasta, enum_guard),
        Command::VerifyReversible { n, source } => {
            verify_reversible(&field, format, *n, source, enum_guard)
        }
        Command::Sweep { n } => sweep(&field, format, *n, enum_guard, search_guard),
    }
}

fn emit(doc: Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&doc).expect("JSON serialization")
    );
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_yn(b: Option<bool>) -> String {
    match b {
        Some(v) => yn(v).to_string(),
        None => "skipped:guard".to_string(),
    }
}

fn parse_poly(field: &Arc<FieldDescriptor>, text: &str) -> Result<SkewPolynomial, Failure> {
    Ok(SkewPolynomial::parse(field, text)?)
}

/// The polynomials of a batch source: the single inline one, or every
/// non-blank non-comment line of the file.
fn source_polys(
    field: &Arc<FieldDescriptor>,
    source: &PolySource,
) -> Result<(Vec<SkewPolynomial>, bool), Failure> {
    if let Some(text) = &source.g {
        return Ok((vec![parse_poly(field, text)?], false));
    }
    let path = source
        .file
        .as_ref()
        .expect("clap group guarantees one source");
    let content = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut polys = Vec::new();
    for (lineno, line) in content.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let poly = SkewPolynomial::parse(field, line)
            .map_err(|e| Failure::Usage(format!("{}:{}: {e}", path.display(), lineno + 1)))?;
        polys.push(poly);
    }
    Ok((polys, true))
}

fn field_info(field: &Arc<FieldDescriptor>, format: Format, table: bool) -> Result<(), Failure> {
    match format {
        Format::Text => {
            println!("s = {}", field.s());
            println!("q = {}", field.q());
            println!(
                "modulus = {} ({:#x})",
                field.modulus_text(),
                field.modulus()
            );
            println!("automorphism = a -> a^{}", field.theta_exponent());
            println!("fixed subfield order = {}", field.fixed_subfield_order());
            if table {
                println!("element\tbits\tadditive");
                for v in field.elements() {
                    println!("{v}\t{}\t{}", field.additive_hex(v), field.additive_text(v));
                }
            }
        }
        Format::Structured => {
            let mut doc = json!({
                "schema": "skewdna/field-info/1",
                "s": field.s(),
                "q": field.q(),
                "modulus": field.modulus_text(),
                "modulus_hex": format!("{:#x}", field.modulus()),
                "theta_exponent": field.theta_exponent(),
                "fixed_subfield_order": field.fixed_subfield_order(),
            });
            if table {
                let rows: Vec<Value> = field
                    .elements()
                    .map(|v| {
                        json!({
                            "element": v.to_string(),
                            "bits": field.additive_hex(v),
                            "additive": field.additive_text(v),
                        })
                    })
                    .collect();
                doc["elements"] = Value::Array(rows);
            }
            emit(doc);
        }
    }
    Ok(())
}

fn poly_mul(field: &Arc<FieldDescriptor>, format: Format, f: &str, g: &str) -> Result<(), Failure> {
    let f = parse_poly(field, f)?;
    let g = parse_poly(field, g)?;
    let product = f.mul(&g);
    match format {
        Format::Text => println!("{product}"),
        Format::Structured => emit(json!({
            "schema": "skewdna/poly-mul/1",
            "s": field.s(),
            "f": f.to_string(),
            "g": g.to_string(),
            "product": product.to_string(),
        })),
    }
    Ok(())
}

fn poly_divmod(
    field: &Arc<FieldDescriptor>,
    format: Format,
    f: &str,
    g: &str,
    side: Side,
) -> Result<(), Failure> {
    let f = parse_poly(field, f)?;
    let g = parse_poly(field, g)?;
    let (side_name, (quotient, remainder)) = match side {
        Side::Right => ("right", f.right_divmod(&g)?),
        Side::Left => ("left", f.left_divmod(&g)?),
    };
    match format {
        Format::Text => {
            println!("quotient = {quotient}");
            println!("remainder = {remainder}");
        }
        Format::Structured => emit(json!({
            "schema": "skewdna/poly-divmod/1",
            "s": field.s(),
            "side": side_name,
            "f": f.to_string(),
            "g": g.to_string(),
            "quotient": quotient.to_string(),
            "remainder": remainder.to_string(),
        })),
    }
    Ok(())
}

fn check_divisor(
    field: &Arc<FieldDescriptor>,
    format: Format,
    n: usize,
    source: &PolySource,
) -> Result<(), Failure> {
    if n == 0 {
        return Err(Error::LengthZero.into());
    }
    let (polys, batch) = source_polys(field, source)?;
    let mut results = Vec::new();
    for g in polys {
        let (cofactor, rem) = x_pow_n_minus_one(field, n).right_divmod(&g)?;
        results.push((
            g,
            if rem.is_zero() {
                Ok(cofactor)
            } else {
                Err(rem)
            },
        ));
    }
    if !batch {
        // Single mode: a non-divisor is a domain error.
        let (g, outcome) = results.pop().expect("one inline polynomial");
        let cofactor = match outcome {
            Ok(c) => c,
            Err(remainder) => return Err(Error::NotARightDivisor { n, remainder }.into()),
        };
        match format {
            Format::Text => println!("{cofactor}"),
            Format::Structured => emit(json!({
                "schema": "skewdna/check-divisor/1",
                "s": field.s(),
                "n": n,
                "g": g.to_string(),
                "divides": true,
                "cofactor": cofactor.to_string(),
            })),
        }
        return Ok(());
    }
    // Batch mode: verdicts are results, not errors.
    match format {
        Format::Text => {
            for (g, outcome) in &results {
                match outcome {
                    Ok(cofactor) => println!("{g}\tdivides\t{cofactor}"),
                    Err(remainder) => println!("{g}\tnot-a-divisor\t{remainder}"),
                }
            }
        }
        Format::Structured => {
            let rows: Vec<Value> = results
                .iter()
                .map(|(g, outcome)| match outcome {
                    Ok(cofactor) => json!({
                        "g": g.to_string(),
                        "divides": true,
                        "cofactor": cofactor.to_string(),
                    }),
                    Err(remainder) => json!({
                        "g": g.to_string(),
                        "divides": false,
                        "remainder": remainder.to_string(),
                    }),
                })
                .collect();
            emit(json!({
                "schema": "skewdna/check-divisor/1",
                "s": field.s(),
                "n": n,
                "results": rows,
            }));
        }
    }
    Ok(())
}

fn reciprocal(field: &Arc<FieldDescriptor>, format: Format, g: &str) -> Result<(), Failure> {
    let f = parse_poly(field, g)?;
    let rec = f.skew_reciprocal()?;
    let self_reciprocal = rec == f;
    match format {
        Format::Text => {
            println!("reciprocal = {rec}");
            println!("palindromic = {}", yn(f.is_palindromic()));
            println!("theta-palindromic = {}", yn(f.is_theta_palindromic()));
            println!("self-reciprocal = {}", yn(self_reciprocal));
        }
        Format::Structured => emit(json!({
            "schema": "skewdna/reciprocal/1",
            "s": field.s(),
            "f": f.to_string(),
            "reciprocal": rec.to_string(),
            "palindromic": f.is_palindromic(),
            "theta_palindromic": f.is_theta_palindromic(),
            "self_reciprocal": self_reciprocal,
        })),
    }
    Ok(())
}

fn search(
    field: &Arc<FieldDescriptor>,
    format: Format,
    n: usize,
    degree: usize,
    kind: KindArg,
    limit: Option<usize>,
    search_guard: u64,
) -> Result<(), Failure> {
    let query = DivisorQuery {
        n,
        degree,
        kind: kind.to_kind(),
        limit,
    };
    let hits = find_right_divisors_with_guard(field, &query, search_guard)?;
    match format {
        Format::Text => {
            for g in &hits {
                println!("{g}");
            }
        }
        Format::Structured => emit(json!({
            "schema": "skewdna/search/1",
            "s": field.s(),
            "n": n,
            "degree": degree,
            "kind": kind.name(),
            "count": hits.len(),
            "divisors": hits.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })),
    }
    Ok(())
}

fn factor_odd(
    field: &Arc<FieldDescriptor>,
    format: Format,
    n: usize,
    search_guard: u64,
) -> Result<(), Failure> {
    let factors = factor_odd_length_with_guard(field, n, search_guard)?;
    match format {
        Format::Text => {
            for f in &factors {
                println!("{f}");
            }
        }
        Format::Structured => emit(json!({
            "schema": "skewdna/factor-odd/1",
            "s": field.s(),
            "n": n,
            "factors": factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        })),
    }
    Ok(())
}

fn code_info(
    field: &Arc<FieldDescriptor>,
    format: Format,
    n: usize,
    g: &str,
    enum_guard: u64,
) -> Result<(), Failure> {
    let g = parse_poly(field, g)?;
    let code = SkewCyclicCode::build(&g, n)?;
    let min_distance = if code.dimension() > 0 && code.codeword_count() <= enum_guard as u128 {
        Some(code.minimum_distance_with_guard(enum_guard)?)
    } else {
        None
    };
    let scalar = code
        .generator()
        .normalize_kind(PalindromeKind::ThetaPalindromic)
        .map(|(scalar, _)| scalar);
    let structural = dna::is_reversible_dna_by_generator(&code);
    match format {
        Format::Text => {
            let d = min_distance.map_or("?".to_string(), |d| d.to_string());
            println!("[{},{},{}]", code.length(), code.dimension(), d);
            println!("generator = {}", code.generator());
            println!("cofactor = {}", code.cofactor());
            println!(
                "minimum-distance = {}",
                min_distance.map_or("skipped:guard".to_string(), |d| d.to_string())
            );
            println!("palindromic = {}", yn(code.generator().is_palindromic()));
            println!(
                "theta-palindromic-scalar = {}",
                scalar.map_or("none".to_string(), |v| v.to_string())
            );
            println!("reversible-dna-structural = {}", yn(structural));
        }
        Format::Structured => emit(json!({
            "schema": "skewdna/code-info/1",
            "s": field.s(),
            "n": code.length(),
            "k": code.dimension(),
            "min_distance": min_distance,
            "generator": code.generator().to_string(),
            "cofactor": code.cofactor().to_string(),
            "palindromic": code.generator().is_palindromic(),
            "theta_palindromic_scalar": scalar.map(|v| v.to_string()),
            "reversible_dna_structural": structural,
        })),
    }
    Ok(())
}

fn dual(field: &Arc<FieldDescriptor>, format: Format, n: usize, g: &str) -> Result<(), Failure> {
    let g = parse_poly(field, g)?;
    let code = SkewCyclicCode::build(&g, n)?;
    let dual = code.dual()?;
    match format {
        Format::Text => {
            println!("dual generator = {}", dual.generator());
            println!("dual dimension = {}", dual.dimension());
        }
        Format::Structured => emit(json!({
            "schema": "skewdna/dual/1",
            "s": field.s(),
            "n": n,
            "generator": code.generator().to_string(),
            "dual_generator": dual.generator().to_string(),
            "dual_dimension": dual.dimension(),
        })),
    }
    Ok(())
}

fn dna_table(field: &Arc<FieldDescriptor>, format: Format) -> Result<(), Failure> {
    let table = dna::DnaTable::build(field);
    match format {
        Format::Text => print!("{}", table.dump_tsv()),
        Format::Structured => {
            let rows: Vec<Value> = field
                .elements()
                .map(|v| {
                    json!({
                        "word": table.tau(v).to_string(),
                        "element": v.to_string(),
                        "additive": field.additive_text(v),
                    })
                })
                .collect();
            emit(json!({
                "schema": "skewdna/dna-table/1",
                "s": field.s(),
                "rows": rows,
            }));
        }
    }
    Ok(())
}

fn dna_export(
    field: &Arc<FieldDescriptor>,
    format: Format,
    n: usize,
    g: &str,
    fasta: bool,
    enum_guard: u64,
) -> Result<(), Failure> {
    let g = parse_poly(field, g)?;
    let code = SkewCyclicCode::build(&g, n)?;
    let table = dna::DnaTable::build(field);
    let words: Vec<String> = code
        .enumerate_codewords_with_guard(enum_guard)?
        .map(|c| table.phi(&c).to_string())
        .collect();
    match format {
        Format::Text => {
            for (i, w) in words.iter().enumerate() {
                if fasta {
                    println!(">cw{i}");
                }
                println!("{w}");
            }
        }
        Format::Structured => emit(json!({
            "schema": "skewdna/dna-export/1",
            "s": field.s(),
            "n": n,
            "generator": code.generator().to_string(),
            "count": words.len(),
            "words": words,
        })),
    }
    Ok(())
}

fn verify_reversible(
    field: &Arc<FieldDescriptor>,
    format: Format,
    n: usize,
    source: &PolySource,
    enum_guard: u64,
) -> Result<(), Failure> {
    let (polys, batch) = source_polys(field, source)?;
    let table = dna::DnaTable::build(field);
    let mut rows = Vec::new();
    for g in polys {
        let code = SkewCyclicCode::build(&g, n)?;
        let structural = dna::is_reversible_dna_by_generator(&code);
        let exhaustive = if code.codeword_count() <= enum_guard as u128 {
            Some(dna::is_reversible_dna_code_with_guard(
                &code, &table, enum_guard,
            )?)
        } else {
            None
        };
        rows.push((code.generator().clone(), structural, exhaustive));
    }
    match format {
        Format::Text => {
            if batch {
                for (g, structural, exhaustive) in &rows {
                    println!(
                        "{g}\tstructural={}\texhaustive={}",
                        yn(*structural),
                        opt_yn(*exhaustive)
                    );
                }
            } else {
                let (g, structural, exhaustive) = &rows[0];
                println!("generator = {g}");
                println!("structural = {}", yn(*structural));
                println!("exhaustive = {}", opt_yn(*exhaustive));
            }
        }
        Format::Structured => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(g, structural, exhaustive)| {
                    json!({
                        "g": g.to_string(),
                        "structural": structural,
                        "exhaustive": exhaustive,
                    })
                })
                .collect();
            emit(json!({
                "schema": "skewdna/verify-reversible/1",
                "s": field.s(),
                "n": n,
                "results": rows,
            }));
        }
    }
    Ok(())
}

fn sweep(
    field: &Arc<FieldDescriptor>,
    format: Format,
    n: usize,
    enum_guard: u64,
    search_guard: u64,
) -> Result<(), Failure> {
    let report = sweep_and_classify(field, n, enum_guard, search_guard)?;
    match format {
        Format::Text => print!("{}", render_sweep_table(&report)),
        Format::Structured => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "degree": r.degree,
                        "generator": r.generator.to_string(),
                        "palindromic": r.palindromic,
                        "theta_palindromic_scalar":
                            r.theta_palindromic_scalar.map(|v| v.to_string()),
                        "n": r.n,
                        "k": r.k,
                        "min_distance": r.min_distance,
                        "reversible_classical": r.reversible_classical,
                        "reversible_dna_structural": r.reversible_dna_structural,
                        "reversible_dna_exhaustive": r.reversible_dna_exhaustive,
                        "dual_generator": r.dual_generator.to_string(),
                        "dual_reversible_dna": r.dual_reversible_dna,
                    })
                })
                .collect();
            emit(json!({
                "schema": "skewdna/sweep/1",
                "s": report.s,
                "n": report.n,
                "rows": rows,
            }));
        }
    }
    Ok(())
}

/// Aligned text table for a sweep report. Shape flags: P = palindromic,
/// T = has a θ-palindromic scalar multiple.
fn render_sweep_table(report: &SweepReport) -> String {
    let header = [
        "degree",
        "generator",
        "shape",
        "n",
        "k",
        "d",
        "rev-classical",
        "dna-structural",
        "dna-exhaustive",
        "dual-generator",
        "dual-dna",
    ];
    let mut cells: Vec<Vec<String>> = vec![header.iter().map(|h| h.to_string()).collect()];
    for r in &report.rows {
        let shape = match (r.palindromic, r.theta_palindromic_scalar.is_some()) {
            (true, true) => "PT",
            (true, false) => "P",
            (false, true) => "T",
            (false, false) => "-",
        };
        cells.push(vec![
            r.degree.to_string(),
            r.generator.to_string(),
            shape.to_string(),
            r.n.to_string(),
            r.k.to_string(),
            r.min_distance
                .map_or("skipped:guard".to_string(), |d| d.to_string()),
            opt_yn(r.reversible_classical),
            yn(r.reversible_dna_structural).to_string(),
            opt_yn(r.reversible_dna_exhaustive),
            r.dual_generator.to_string(),
            opt_yn(r.dual_reversible_dna),
        ]);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|col| cells.iter().map(|row| row[col].len()).max().unwrap())
        .collect();
    let mut out = format!(
        "sweep s={} n={}: {} divisors\n",
        report.s,
        report.n,
        report.rows.len()
    );
    for row in &cells {
        let mut line = String::new();
        for (cell, width) in row.iter().zip(&widths) {
            if !line.is_empty() {
                line.push_str("  ");
            }
            let _ = write!(line, "{cell:<width$}");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
