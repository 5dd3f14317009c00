use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use surreal::arith::{self, GeneticArith};
use surreal::genetic::{builtin, Evaluator, DEFAULT_MEMO_CAP};
use surreal::lab::{
    check_concat_sequences, concat_sequences, initiality_report, sign_change_census,
    sup_escape_experiment, CensusTarget, FiniteSurrealSet, Report, SurrealOp,
};
use surreal::nimber::{
    is_closed_field_segment, is_initial_nim, mex_add_table, mex_mul_table, nim_add, nim_closure,
    nim_inverse, nim_mul, nim_pow, simplest_irreducible, subfield_bits, NimOp, Nimber,
};
use surreal::poly::{
    find_root_genetic, reciprocal, root_sign_expansion, sqrt, RootResult, SurrealPolynomial,
};
use surreal::{Dyadic, Error, ExtendedBound, PeriodicSigns, SignSequence};

const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Surreal numbers of finite birthday, genetic definitions, polynomial roots and nimbers.
#[derive(Parser, Debug)]
#[command(name = "surreal", version, about)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Use only enumerated samples. Every command is deterministic with or without it.
    #[arg(long, global = true)]
    seedless: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sign expansion of a dyadic rational.
    Signs {
        #[arg(allow_hyphen_values = true)]
        value: Dyadic,
    },
    /// Dyadic value of a sign string.
    Dyadic {
        #[arg(allow_hyphen_values = true, value_parser = parse_signs)]
        signs: SignSequence,
    },
    /// Evaluates a builtin genetic definition.
    Eval {
        name: String,
        #[arg(allow_hyphen_values = true, num_args = 0..)]
        args: Vec<SignSequence>,
    },
    /// Sum of two numbers.
    Add(BinaryArgs),
    /// Product of two numbers.
    Mul(BinaryArgs),
    /// Negation.
    Neg {
        #[arg(allow_hyphen_values = true)]
        x: SignSequence,
        /// Evaluate through the recursive definition.
        #[arg(long)]
        genetic: bool,
    },
    /// Sign expansion of the root of p(x) = target in an interval.
    Root(RootArgs),
    /// Sign expansion of 1/a.
    Recip {
        #[arg(allow_hyphen_values = true)]
        a: SignSequence,
        #[arg(long, default_value_t = 32)]
        max_signs: usize,
    },
    /// Sign expansion of the square root of a.
    Sqrt {
        #[arg(allow_hyphen_values = true)]
        a: SignSequence,
        #[arg(long, default_value_t = 32)]
        max_signs: usize,
    },
    /// Nimber arithmetic.
    #[command(subcommand)]
    Nim(NimCommand),
    /// Experiments.
    #[command(subcommand)]
    Lab(LabCommand),
}

#[derive(Args, Debug)]
struct BinaryArgs {
    #[arg(allow_hyphen_values = true)]
    x: SignSequence,
    #[arg(allow_hyphen_values = true)]
    y: SignSequence,
    /// Evaluate through the recursive definition.
    #[arg(long)]
    genetic: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Walk,
    Genetic,
}

#[derive(Args, Debug)]
struct RootArgs {
    /// Coefficients from the constant term up, e.g. `[-2,0,1]`.
    #[arg(long, allow_hyphen_values = true)]
    poly: SurrealPolynomial,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    target: SignSequence,
    /// Open interval `a,b`; `-inf` and `+inf` are allowed.
    #[arg(long, allow_hyphen_values = true, default_value = "-inf,+inf", value_parser = parse_interval)]
    interval: (ExtendedBound, ExtendedBound),
    #[arg(long, default_value_t = 32)]
    max_signs: usize,
    #[arg(long, value_enum, default_value_t = Method::Walk)]
    method: Method,
    /// Options the genetic method may add beyond the interval ends.
    #[arg(long, default_value_t = 16)]
    budget: usize,
}

#[derive(Subcommand, Debug)]
enum NimCommand {
    /// Nim sum.
    Add { a: Nimber, b: Nimber },
    /// Nim product.
    Mul { a: Nimber, b: Nimber },
    /// Multiplicative inverse.
    Inv { a: Nimber },
    /// Nim power `a^e`.
    Pow { a: Nimber, e: u128 },
    /// Operation table computed by the mex recursion.
    Table {
        #[arg(long, value_enum, default_value_t = TableOp::Mul)]
        op: TableOp,
        #[arg(long, default_value_t = 16)]
        size: usize,
    },
    /// Whether {0, …, n−1} is a subfield.
    Subfield { n: u128 },
    /// Least monic polynomial without small roots.
    Irreducible {
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = 4)]
        coeff_bound: u128,
        #[arg(long, default_value_t = 1 << 16)]
        root_bound: u128,
    },
    /// Closure of a comma-separated seed under the given operations.
    Closure {
        #[arg(value_parser = parse_nim_list)]
        seed: BTreeSet<Nimber>,
        #[arg(long, default_value = "add,mul", value_parser = parse_list::<NimOp>)]
        ops: List<NimOp>,
        #[arg(long, default_value_t = 1 << 16)]
        cap: u128,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableOp {
    Add,
    Mul,
}

#[derive(Subcommand, Debug)]
enum LabCommand {
    /// The sequences a_n, b_n, c_n around 2/3 and their inequalities.
    ConcatSeq {
        #[arg(long, default_value_t = 20)]
        n: usize,
    },
    /// Order changes of f(x) against d over sorted samples.
    Census {
        /// Unary builtin.
        #[arg(long)]
        f: String,
        /// Finite value, or an eventually periodic sign string `head(period)`; `2/3` is `(+-)`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_target)]
        d: CensusTarget,
        /// Samples are every number of birthday at most this, in increasing order.
        #[arg(long, default_value_t = 6)]
        birthday: usize,
        /// Explicit comma-separated samples, used in the given order.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list::<SignSequence>)]
        samples: Option<List<SignSequence>>,
    },
    /// Largest x < 2/3 with x:1 > 2/3 per birthday cap.
    SupEscape {
        /// Inclusive range `a..b`, or a comma-separated list.
        #[arg(long, default_value = "2..16")]
        caps: String,
        /// Step for a range of caps.
        #[arg(long, default_value_t = 2)]
        step: usize,
    },
    /// Closure of a seed under operations, with its prefix violations.
    Initiality {
        /// Comma-separated values, or `tree:N` for every number of birthday at most N.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_seed)]
        seed: FiniteSurrealSet,
        #[arg(long, default_value = "add", value_parser = parse_list::<SurrealOp>)]
        ops: List<SurrealOp>,
        #[arg(long, default_value_t = 5)]
        cap: usize,
    },
}

fn parse_signs(s: &str) -> Result<SignSequence, Error> {
    if s == "0" {
        return Ok(SignSequence::zero());
    }
    SignSequence::parse_signs(s)
}

fn parse_bound(s: &str) -> Result<ExtendedBound, Error> {
    match s.trim() {
        "-inf" => Ok(ExtendedBound::NegInf),
        "inf" | "+inf" => Ok(ExtendedBound::PosInf),
        v => Ok(ExtendedBound::Finite(v.parse()?)),
    }
}

fn parse_interval(s: &str) -> Result<(ExtendedBound, ExtendedBound), Error> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("interval must be `a,b`: `{s}`")))?;
    Ok((parse_bound(a)?, parse_bound(b)?))
}

/// A comma-separated list taken as one argument.
#[derive(Clone, Debug)]
struct List<T>(Vec<T>);

fn parse_list<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<List<T>, Error> {
    s.split(',')
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map(List)
}

fn parse_nim_list(s: &str) -> Result<BTreeSet<Nimber>, Error> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

fn parse_seed(s: &str) -> Result<FiniteSurrealSet, Error> {
    if let Some(n) = s.trim().strip_prefix("tree:") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("not a birthday: `{n}`")))?;
        return Ok(SignSequence::all_up_to(n).into_iter().collect());
    }
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

fn parse_target(s: &str) -> Result<CensusTarget, Error> {
    let s = s.trim();
    if s == "2/3" {
        return Ok(CensusTarget::Periodic(PeriodicSigns::two_thirds()));
    }
    if let Some((head, rest)) = s.split_once('(') {
        let period = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unclosed period in `{s}`")))?;
        let head = SignSequence::parse_signs(head)?;
        let period = SignSequence::parse_signs(period)?;
        if period.birthday() == 0 {
            return Err(Error::Parse("empty period".into()));
        }
        return Ok(CensusTarget::Periodic(PeriodicSigns::new(
            head.signs().to_vec(),
            period.signs().to_vec(),
        )));
    }
    Ok(CensusTarget::Finite(s.parse()?))
}

fn parse_caps(s: &str, step: usize) -> Result<Vec<usize>, Error> {
    let bad = || Error::Parse(format!("caps must be `a..b` or a list: `{s}`"));
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if step == 0 {
            return Err(Error::Parse("step must be positive".into()));
        }
        return Ok((a..=b).step_by(step).collect());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect()
}

fn memo_cap() -> Result<usize, Failure> {
    match std::env::var("SURREAL_MEMO_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("SURREAL_MEMO_CAP must be a count, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MEMO_CAP),
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// A command's result in both output forms.
struct Output {
    text: String,
    json: Value,
    partial: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            partial: false,
        }
    }
}

fn value_json(x: &SignSequence) -> Value {
    json!({
        "signs": x.to_string(),
        "dyadic": x.to_dyadic().to_string(),
        "birthday": x.birthday(),
    })
}

fn value_output(x: &SignSequence) -> Output {
    Output::new(x.to_dyadic().to_string(), value_json(x))
}

fn root_output(r: &RootResult, extra: Value) -> Output {
    let e = r.enclosure();
    let mut j = value_json(r.signs());
    let obj = j.as_object_mut().expect("object");
    obj.insert(
        "kind".into(),
        json!(if r.is_exact() { "exact" } else { "prefix" }),
    );
    obj.insert(
        "enclosure".into(),
        json!({ "low": e.low.to_string(), "high": e.high.to_string() }),
    );
    if let Value::Object(m) = extra {
        obj.extend(m);
    }
    let text = match r {
        RootResult::Exact(x) => format!("exact {} ({x})", x.to_dyadic()),
        RootResult::Prefix(e) => format!("prefix {}\nenclosure [{}, {}]", e.prefix, e.low, e.high),
    };
    Output {
        text,
        json: j,
        partial: !r.is_exact(),
    }
}

fn nim_output(v: Nimber) -> Output {
    Output::new(v.to_string(), json!({ "nimber": v.to_string() }))
}

fn report_output(r: &Report) -> Output {
    let mut text = format!("{}: {}", r.name, r.verdict);
    for w in &r.witnesses {
        text.push_str(&format!("\n  {w}"));
    }
    Output::new(text, serde_json::to_value(r).expect("report serializes"))
}

fn binary(
    args: &BinaryArgs,
    op: fn(&mut GeneticArith, &SignSequence, &SignSequence) -> surreal::Result<SignSequence>,
    fast: fn(&SignSequence, &SignSequence) -> SignSequence,
) -> Result<Output, Failure> {
    let z = if args.genetic {
        op(&mut GeneticArith::with_cap(memo_cap()?), &args.x, &args.y)?
    } else {
        fast(&args.x, &args.y)
    };
    Ok(value_output(&z))
}

fn run_root(args: &RootArgs) -> Result<Output, Failure> {
    let (a, b) = &args.interval;
    match args.method {
        Method::Walk => {
            let r = root_sign_expansion(&args.poly, &args.target, a, b, args.max_signs)?;
            Ok(root_output(&r, json!({ "method": "walk" })))
        }
        Method::Genetic => {
            let g = find_root_genetic(&args.poly, &args.target, a, b, args.budget)?;
            Ok(root_output(
                &g.result,
                json!({ "method": "genetic", "budget_used": g.budget_used, "saturated": g.saturated }),
            ))
        }
    }
}

fn run_nim(cmd: &NimCommand) -> Result<Output, Failure> {
    match cmd {
        NimCommand::Add { a, b } => Ok(nim_output(nim_add(*a, *b))),
        NimCommand::Mul { a, b } => Ok(nim_output(nim_mul(*a, *b))),
        NimCommand::Inv { a } => Ok(nim_output(nim_inverse(*a)?)),
        NimCommand::Pow { a, e } => Ok(nim_output(nim_pow(*a, *e))),
        NimCommand::Table { op, size } => {
            if *op == TableOp::Mul && *size > 1 << 16 {
                return Err(Failure::Usage(
                    "mul tables are limited to size 65536".into(),
                ));
            }
            let t = match op {
                TableOp::Add => mex_add_table(*size),
                TableOp::Mul => mex_mul_table(*size),
            };
            let rows: Vec<Vec<u128>> = (0..*size)
                .map(|a| (0..*size).map(|b| t.get(a, b).0).collect())
                .collect();
            let text = rows
                .iter()
                .map(|r| r.iter().map(u128::to_string).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n");
            let op = match op {
                TableOp::Add => "add",
                TableOp::Mul => "mul",
            };
            Ok(Output::new(
                text,
                json!({ "op": op, "size": size, "rows": rows }),
            ))
        }
        NimCommand::Subfield { n } => {
            let closed = is_closed_field_segment(*n);
            let smallest = n.checked_sub(1).map(|m| subfield_bits(Nimber(m)));
            Ok(Output::new(
                closed.to_string(),
                json!({ "n": n.to_string(), "closed": closed, "enclosing_subfield_bits": smallest }),
            ))
        }
        NimCommand::Irreducible {
            degree,
            coeff_bound,
            root_bound,
        } => {
            let p = simplest_irreducible(*degree, *coeff_bound, *root_bound)?;
            let coeffs: Vec<String> = p.coeffs().iter().map(Nimber::to_string).collect();
            Ok(Output::new(
                p.to_string(),
                json!({ "polynomial": p.to_string(), "coeffs": coeffs }),
            ))
        }
        NimCommand::Closure { seed, ops, cap } => {
            let set = nim_closure(seed, &ops.0, *cap)?;
            let initial = is_initial_nim(&set);
            let items: Vec<String> = set.iter().map(Nimber::to_string).collect();
            Ok(Output::new(
                format!("{{{}}}\ninitial: {initial}", items.join(", ")),
                json!({ "set": items, "size": set.len(), "initial": initial }),
            ))
        }
    }
}

fn run_lab(cmd: &LabCommand) -> Result<Output, Failure> {
    match cmd {
        LabCommand::ConcatSeq { n } => {
            let seqs = concat_sequences(*n);
            let failures = check_concat_sequences(&seqs);
            let verdict = if failures.is_empty() {
                "all inequalities hold".to_string()
            } else {
                format!("{} failures", failures.len())
            };
            let report = Report {
                name: "concat_sequences".into(),
                parameters: json!({ "n": n }),
                verdict,
                witnesses: seqs
                    .iter()
                    .map(|s| json!({ "n": s.n, "a": s.a.to_string(), "b": s.b.to_string(), "c": s.c.to_string() }))
                    .chain(failures.iter().map(|f| json!({ "failure": f })))
                    .collect(),
            };
            Ok(report_output(&report))
        }
        LabCommand::Census {
            f,
            d,
            birthday,
            samples,
        } => {
            let def = builtin(f)?;
            let samples = match samples {
                Some(s) => s.0.clone(),
                None => {
                    let mut all = SignSequence::all_up_to(*birthday);
                    all.sort();
                    all
                }
            };
            let r = sign_change_census(&def, d, &samples)?;
            Ok(report_output(&r.to_report(f, d)))
        }
        LabCommand::SupEscape { caps, step } => {
            let caps = parse_caps(caps, *step).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(report_output(&sup_escape_experiment(&caps).to_report()))
        }
        LabCommand::Initiality { seed, ops, cap } => Ok(report_output(
            &initiality_report(seed, &ops.0, *cap).to_report(),
        )),
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Signs { value } => {
            let x = SignSequence::from_dyadic(value);
            Ok(Output::new(x.to_string(), value_json(&x)))
        }
        Command::Dyadic { signs } => Ok(value_output(signs)),
        Command::Eval { name, args } => {
            let def = builtin(name)?;
            let mut ev = Evaluator::with_cap(memo_cap()?);
            Ok(value_output(&ev.eval(&def, args)?))
        }
        Command::Add(args) => binary(args, GeneticArith::add, arith::add),
        Command::Mul(args) => binary(args, GeneticArith::mul, arith::mul),
        Command::Neg { x, genetic } => {
            let z = if *genetic {
                GeneticArith::with_cap(memo_cap()?).neg(x)?
            } else {
                arith::neg(x)
            };
            Ok(value_output(&z))
        }
        Command::Root(args) => run_root(args),
        Command::Recip { a, max_signs } => Ok(root_output(&reciprocal(a, *max_signs)?, json!({}))),
        Command::Sqrt { a, max_signs } => Ok(root_output(&sqrt(a, *max_signs)?, json!({}))),
        Command::Nim(cmd) => run_nim(cmd),
        Command::Lab(cmd) => run_lab(cmd),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            if out.partial {
                ExitCode::from(EXIT_BUDGET)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::MemoCapExceeded { .. } | Error::CapTooSmall { .. } => {
                    ExitCode::from(EXIT_BUDGET)
                }
                _ => ExitCode::from(EXIT_DOMAIN),
            }
        }
    }
}
