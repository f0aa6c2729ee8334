//! `skewcode`: command-line front end for skew cyclic codes over
//! `F_q + vF_q + v^2F_q`.
//!
//! Exit codes: 0 ok, 2 invalid input, 3 unmet precondition, 4 enumeration cap.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use skewcode::analysis::{self, DEFAULT_ENUMERATION_CAP};
use skewcode::divisor_search::{self, DEFAULT_DIVISOR_CAP};
use skewcode::skew_codes_r::split_poly;
use skewcode::text::{self, CodeSpec, FieldSpec};
use skewcode::{Error, FieldCtx, RSkewCode, SkewCyclicCodeFq, SkewPoly, SkewRing};

#[derive(Parser)]
#[command(name = "skewcode", version, about = "Skew cyclic codes over F_q + vF_q + v^2F_q (v^3 = v)")]
struct Cli {
    #[command(flatten)]
    field: FieldArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArgs {
    /// Whole field description, e.g. "p=3 m=2 modulus=1,0,1"
    #[arg(long, global = true, conflicts_with_all = ["p", "m", "modulus"])]
    field: Option<String>,
    /// Odd prime characteristic
    #[arg(long, global = true, default_value_t = 3)]
    p: u64,
    /// Extension degree
    #[arg(long, global = true, default_value_t = 2)]
    m: u32,
    /// Monic irreducible modulus, coefficients low to high (default: least
    /// irreducible in lexicographic order)
    #[arg(long, global = true)]
    modulus: Option<String>,
}

impl FieldArgs {
    fn build(&self) -> Result<FieldCtx, Error> {
        let spec = match &self.field {
            Some(s) => FieldSpec::parse(s)?,
            None => FieldSpec {
                p: self.p,
                m: self.m,
                modulus: self.modulus.as_deref().map(text::parse_u32_list).transpose()?,
            },
        };
        spec.build()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Field description, element legend and Frobenius table
    Field {
        #[arg(long, default_value_t = 1)]
        t: u32,
    },
    /// Right divisors of x^n - 1, by search or by commutative factorization
    Factor {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        t: u32,
        /// Degrees to search (comma separated); default all
        #[arg(long, value_delimiter = ',', conflicts_with = "max_deg")]
        deg: Vec<usize>,
        /// Search degrees 0..=max-deg
        #[arg(long)]
        max_deg: Option<usize>,
        #[arg(long, value_enum, default_value_t = FactorMode::Auto)]
        mode: FactorMode,
        /// Maximum candidates per degree for the search
        #[arg(long, default_value_t = DEFAULT_DIVISOR_CAP)]
        cap: u128,
    },
    /// Number of skew cyclic codes of length n over R
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        t: u32,
    },
    /// Build and query a code over F_q (g=) or over R (g1= g2= g3=)
    Code {
        #[arg(value_enum)]
        action: CodeAction,
        #[command(flatten)]
        spec: CodeArgs,
        /// Message: F_q coefficients for an F_q code, a:b:c coefficients for an R code
        #[arg(long, allow_hyphen_values = true)]
        msg: Option<String>,
        /// Component messages for an R code
        #[arg(long)]
        m1: Option<String>,
        #[arg(long)]
        m2: Option<String>,
        #[arg(long)]
        m3: Option<String>,
        /// Word to test with `contains`
        #[arg(long)]
        word: Option<String>,
        /// Maximum number of enumerated codewords
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FactorMode {
    /// Commutative factorization when gcd(n, m/t) = 1, search otherwise
    Auto,
    /// Exhaustive search for monic right divisors
    Search,
    /// Factorization over the fixed field (requires gcd(n, m/t) = 1)
    Commutative,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CodeAction {
    New,
    Params,
    Dual,
    Idempotent,
    Gray,
    Matrix,
    Encode,
    Contains,
}

#[derive(Args)]
struct CodeArgs {
    /// Code description, e.g. "n=4 t=1 g1=6,1 g2=6,1 g3=6,1"; "-" reads stdin
    #[arg(long, conflicts_with_all = ["n", "g", "g1", "g2", "g3"])]
    spec: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    g1: Option<String>,
    #[arg(long)]
    g2: Option<String>,
    #[arg(long)]
    g3: Option<String>,
}

impl CodeArgs {
    fn parse(&self) -> Result<CodeSpec, Error> {
        if let Some(s) = &self.spec {
            if s == "-" {
                let mut buf = String::new();
                io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::Parse(e.to_string()))?;
                return CodeSpec::parse(&buf);
            }
            return CodeSpec::parse(s);
        }
        let mut parts = Vec::new();
        let n = self.n.ok_or_else(|| Error::Parse("code needs --n or --spec".into()))?;
        parts.push(format!("n={n}"));
        parts.push(format!("t={}", self.t.unwrap_or(1)));
        for (k, v) in [("g", &self.g), ("g1", &self.g1), ("g2", &self.g2), ("g3", &self.g3)] {
            if let Some(v) = v {
                parts.push(format!("{k}={v}"));
            }
        }
        CodeSpec::parse(&parts.join(" "))
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 4,
            Error::GcdConditionViolated { .. }
            | Error::NotCoprimeToQ { .. }
            | Error::NotRightDivisor { .. }
            | Error::NotMonic
            | Error::DegreeTooLarge { .. }
            | Error::NonUnitLeadingCoeff
            | Error::ZeroDivisor => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn precondition(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

type Out = Vec<String>;

fn cmd_field(field: &FieldCtx, t: u32) -> Result<Out, Failure> {
    let aut = field.aut(t)?;
    let mut out = vec![
        format!("field: {}", text::format_field(field)),
        format!("q = {}", field.q()),
        format!("t = {} (theta: x -> x^{}, order {})", t, field.p().pow(t), aut.order()),
        "encoding  element  theta(element)".to_string(),
    ];
    for x in field.elements() {
        let y = field.frobenius(aut, x);
        out.push(format!(
            "{:>8}  {:<7}  {}",
            x.value(),
            text::fe_symbolic(field, x),
            text::fe_symbolic(field, y)
        ));
    }
    Ok(out)
}

fn poly_line(field: &FieldCtx, p: &SkewPoly<skewcode::Fe>) -> String {
    format!("{}  {}", text::format_poly(p), text::poly_symbolic(field, p))
}

fn cmd_factor(
    field: &FieldCtx,
    n: usize,
    t: u32,
    degrees: &[usize],
    mode: FactorMode,
    cap: u128,
) -> Result<Out, Failure> {
    if n == 0 {
        return Err(Error::ZeroLength.into());
    }
    let ring = SkewRing::new(field.clone(), field.aut(t)?)?;
    let coprime = divisor_search::check_gcd_condition(ring.aut(), n).is_ok();
    let mut out = vec![format!("field: {}", text::format_field(field))];
    let commutative = match mode {
        FactorMode::Commutative => true,
        FactorMode::Search => false,
        FactorMode::Auto => coprime && degrees.is_empty(),
    };
    if commutative {
        let fact = divisor_search::factor_commutative(&ring, n)?;
        out.push(format!(
            "x^{n} - 1 over the fixed field of theta_{t} (order {}), gcd condition holds",
            ring.aut().order()
        ));
        let product: String = fact
            .factors
            .iter()
            .map(|(g, s)| {
                let base = format!("({})", text::poly_symbolic(field, g));
                if *s > 1 {
                    format!("{base}^{s}")
                } else {
                    base
                }
            })
            .collect();
        out.push(format!("factorization: {product}"));
        for (g, s) in &fact.factors {
            out.push(format!("factor: {}  multiplicity {s}", poly_line(field, g)));
        }
        let lattice = divisor_search::component_divisor_lattice(field, &fact);
        out.push(format!("monic right divisors: {}", lattice.len()));
        for g in &lattice {
            out.push(format!("  {}", poly_line(field, g)));
        }
    } else {
        let degrees: Vec<usize> = if degrees.is_empty() {
            (0..=n).collect()
        } else {
            degrees.to_vec()
        };
        out.push(format!("monic right divisors of x^{n} - 1 in F_{}[x; theta_{t}] by search", field.q()));
        let found = divisor_search::enumerate_right_divisors(&ring, n, &degrees, cap)?;
        for d in degrees.iter().filter(|&&d| d <= n) {
            let of_degree: Vec<_> = found.iter().filter(|g| g.degree() == Some(*d)).collect();
            out.push(format!("degree {d}: {}", of_degree.len()));
            for g in of_degree {
                out.push(format!("  {}", poly_line(field, g)));
            }
        }
    }
    Ok(out)
}

fn cmd_count(field: &FieldCtx, n: usize, t: u32) -> Result<Out, Failure> {
    let ring = SkewRing::new(field.clone(), field.aut(t)?)?;
    match divisor_search::count_r_skew_cyclic(&ring, n) {
        Ok(c) => Ok(vec![
            format!("field: {}", text::format_field(field)),
            format!("n = {n}, t = {t}"),
            format!("total: {}", c.total),
            format!("nonzero: {}", c.nonzero),
        ]),
        Err(e @ Error::GcdConditionViolated { .. }) => Err(precondition(format!(
            "{e}: x^{n} - 1 has no unique factorization in the skew ring, so the number of codes is not determined"
        ))),
        Err(e) => Err(e.into()),
    }
}

fn size_line(label: &str, q: u32, exp: usize) -> String {
    format!("{label} = {q}^{exp}")
}

fn direct_line(field: &FieldCtx, k: usize, cap: u128, result: Result<Option<usize>, Error>) -> String {
    match result {
        Ok(Some(d)) => format!("gray d (direct enumeration): {d}"),
        Ok(None) => "gray d (direct enumeration): -".to_string(),
        Err(Error::CapExceeded { .. }) => format!(
            "gray d (direct enumeration): skipped, {}^{k} words exceed cap {cap}",
            field.q()
        ),
        Err(e) => format!("gray d (direct enumeration): error: {e}"),
    }
}

struct CodeRequest<'a> {
    action: CodeAction,
    msg: Option<&'a str>,
    comps: [Option<&'a str>; 3],
    word: Option<&'a str>,
    cap: u128,
}

fn fq_code_report(field: &FieldCtx, code: &SkewCyclicCodeFq, req: &CodeRequest) -> Result<Out, Failure> {
    let q = field.q();
    let mut out = Vec::new();
    match req.action {
        CodeAction::New => out.push(text::format_fq_code(code)),
        CodeAction::Params => {
            out.push(format!("field: {}", text::format_field(field)));
            out.push(format!("code: {}", text::format_fq_code(code)));
            out.push(format!("g = {}", poly_line(field, code.generator())));
            out.push(format!("h = {}", poly_line(field, code.cofactor())));
            out.push(format!("params: {}", analysis::fq_params(code, req.cap)?));
            out.push(size_line("|C|", q, code.dimension()));
            out.push(size_line("|C^perp|", q, code.len() - code.dimension()));
            out.push(format!("self-dual: {}", code.is_self_dual()));
        }
        CodeAction::Dual => {
            let dual = code.dual();
            out.push(text::format_fq_code(&dual));
            out.push(format!("# hbar = {}", poly_line(field, &code.reciprocal_cofactor())));
        }
        CodeAction::Idempotent => {
            let e = code.idempotent()?;
            out.push(format!("e = {}", poly_line(field, &e)));
        }
        CodeAction::Gray => return Err(precondition("gray image is defined for codes over R (use g1= g2= g3=)")),
        CodeAction::Matrix => {
            for row in code.generator_matrix() {
                out.push(text::format_word(&row));
            }
        }
        CodeAction::Encode => {
            let msg = req.msg.ok_or_else(|| Error::Parse("encode needs --msg".into()))?;
            let msg = text::parse_fq_poly(field, msg)?;
            out.push(text::format_word(&code.encode(&msg)?));
        }
        CodeAction::Contains => {
            let word = req.word.ok_or_else(|| Error::Parse("contains needs --word".into()))?;
            out.push(code.contains(&text::parse_fq_word(field, word)?)?.to_string());
        }
    }
    Ok(out)
}

fn r_code_report(field: &FieldCtx, code: &RSkewCode, req: &CodeRequest) -> Result<Out, Failure> {
    let q = field.q();
    let ext = code.ext();
    let mut out = Vec::new();
    match req.action {
        CodeAction::New => out.push(text::format_r_code(code)),
        CodeAction::Params => {
            out.push(format!("field: {}", text::format_field(field)));
            out.push(format!("code: {}", text::format_r_code(code)));
            out.push(format!("g = {}", text::format_poly(code.generator())));
            for (i, c) in code.components().iter().enumerate() {
                out.push(format!(
                    "C{}: g{} = {}  {}",
                    i + 1,
                    i + 1,
                    text::poly_symbolic(field, c.generator()),
                    analysis::fq_params(c, req.cap)?
                ));
            }
            out.push(size_line("|C|", q, code.size_exponent()));
            out.push(size_line("|C^perp|", q, 3 * code.len() - code.size_exponent()));
            let gray = analysis::gray_params(code, req.cap)?;
            out.push(format!("gray: {gray}"));
            let direct = analysis::gray_min_distance_direct(code, req.cap);
            out.push(direct_line(field, code.size_exponent(), req.cap, direct));
            out.push(format!("self-dual: {}", code.is_self_dual()));
        }
        CodeAction::Dual => {
            let dual = code.dual();
            out.push(text::format_r_code(&dual));
            out.push(format!("# g = {}", text::format_poly(&code.dual_generator_unnormalized())));
        }
        CodeAction::Idempotent => {
            let e = code.idempotent()?;
            out.push(format!("e = {}", text::format_poly(&e)));
            for (i, part) in split_poly(ext, &e).iter().enumerate() {
                out.push(format!("e{} = {}", i + 1, poly_line(field, part)));
            }
        }
        CodeAction::Gray => {
            out.push(format!("# gray: {}", analysis::gray_params(code, req.cap)?));
            out.push("# layout: blockwise (a | a+b+c | a-b+c)".to_string());
            for row in code.gray_image() {
                out.push(text::format_word(&row));
            }
        }
        CodeAction::Matrix => {
            for row in code.generator_matrix() {
                out.push(text::format_word(&row));
            }
        }
        CodeAction::Encode => {
            let word = match (req.msg, req.comps) {
                (Some(m), [None, None, None]) => code.encode(&text::parse_r_poly(ext, m)?),
                (None, [Some(a), Some(b), Some(c)]) => code.encode_components([
                    &text::parse_fq_poly(field, a)?,
                    &text::parse_fq_poly(field, b)?,
                    &text::parse_fq_poly(field, c)?,
                ])?,
                _ => return Err(Error::Parse("encode needs --msg or all of --m1 --m2 --m3".into()).into()),
            };
            out.push(text::format_word(&word));
        }
        CodeAction::Contains => {
            let word = req.word.ok_or_else(|| Error::Parse("contains needs --word".into()))?;
            out.push(code.contains(&text::parse_r_word(ext, word)?)?.to_string());
        }
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<Out, Failure> {
    let field = cli.field.build()?;
    match &cli.command {
        Command::Field { t } => cmd_field(&field, *t),
        Command::Factor {
            n,
            t,
            deg,
            max_deg,
            mode,
            cap,
        } => {
            let degrees: Vec<usize> = match max_deg {
                Some(d) => (0..=*d).collect(),
                None => deg.clone(),
            };
            cmd_factor(&field, *n, *t, &degrees, *mode, *cap)
        }
        Command::Count { n, t } => cmd_count(&field, *n, *t),
        Command::Code {
            action,
            spec,
            msg,
            m1,
            m2,
            m3,
            word,
            cap,
        } => {
            let spec = spec.parse()?;
            let req = CodeRequest {
                action: *action,
                msg: msg.as_deref(),
                comps: [m1.as_deref(), m2.as_deref(), m3.as_deref()],
                word: word.as_deref(),
                cap: *cap,
            };
            match spec {
                CodeSpec::Fq { .. } => fq_code_report(&field, &text::build_fq_code(&field, &spec)?, &req),
                CodeSpec::R { .. } => r_code_report(&field, &text::build_r_code(&field, &spec)?, &req),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(lines) => {
            let mut stdout = io::stdout().lock();
            for line in lines {
                if writeln!(stdout, "{line}").is_err() {
                    return ExitCode::FAILURE;
                }
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
