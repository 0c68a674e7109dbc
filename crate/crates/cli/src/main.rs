use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use ranumeral::cylinders::{classify_coincidences, Cylinder, Interval};
use ranumeral::fractal::{
    cantor_cover, cantor_dimension, dimension_report, enumerate_preimages, level_set_dimension,
    level_set_value, CantorSpec,
};
use ranumeral::function::{
    default_jump_prefix, jump_at_binary, nonmonotone_witness, sample_graph, SourcePoint,
    WitnessCase,
};
use ranumeral::output::{cover_csv, graph_csv, graph_svg, preimage_csv};
use ranumeral::verify::{self, Status, Suite};
use ranumeral::{DigitStream, DigitWord, Error, ExactReal, Result, SystemParams};

#[derive(Parser, Debug)]
#[command(name = "ranumeral", version, about = "Exact arithmetic for r_a numeral systems")]
struct Cli {
    /// Digits after the point in decimal approximations.
    #[arg(long, global = true, default_value_t = 20)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SystemArgs {
    /// Base: integer, fraction, `(A+B*sqrtD)/W` or `phi`.
    #[arg(long)]
    base: String,
    /// Largest digit.
    #[arg(long)]
    r: u32,
}

impl SystemArgs {
    fn system(&self) -> Result<SystemParams> {
        SystemParams::new(self.base.parse()?, self.r)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algo {
    Greedy,
    Lazy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact value of a digit stream.
    Eval {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        digits: String,
    },
    /// Greedy or lazy expansion of an exact value.
    Expand {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value = "greedy")]
        algo: Algo,
        /// Number of digits to produce.
        #[arg(long)]
        digits: usize,
    },
    /// Cylinder interval, subdivision and adjacent overlap.
    Cyl {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long)]
        children: bool,
        #[arg(long)]
        overlap: Option<u32>,
    },
    /// Special coincidences of the system.
    Special {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 8)]
        max_m: u32,
    },
    /// The digit-transplant function f.
    F {
        #[command(subcommand)]
        op: FOp,
    },
    /// Cantor-type set over digits {0, 2} (r = 2).
    Cantor {
        #[command(subcommand)]
        op: CantorOp,
    },
    /// Level set of f at the golden base.
    Levelset {
        #[command(subcommand)]
        op: LevelsetOp,
    },
    /// Run the self-check suites that apply to the system.
    Verify {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand, Debug)]
enum FOp {
    /// f and its left limit at a source stream.
    Eval {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        digits: String,
    },
    /// Jump f(x-) - f(x) at the binary point with the given rank-k prefix.
    Jump {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        k: usize,
        /// Defaults to 0...01.
        #[arg(long)]
        prefix: Option<String>,
    },
    /// Non-monotonicity witness inside a source cylinder.
    Witness {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value = "")]
        word: String,
    },
    /// f sampled on the grid m / (r+1)^depth.
    Graph {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 500)]
        height: u32,
    },
}

#[derive(Subcommand, Debug)]
enum CantorOp {
    /// Covers of levels 1..=n.
    Cover {
        #[arg(long)]
        base: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Similarity dimension log 2 / log a.
    Dim {
        #[arg(long)]
        base: String,
        /// Accepted for symmetry with `cover`; the dimension does not depend on it.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum LevelsetOp {
    /// All 2^len preimages with the given tail block.
    Enum {
        #[arg(long)]
        len: usize,
        #[arg(long)]
        tail: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

struct Out {
    body: String,
    ok: bool,
}

impl Out {
    fn json(v: Value) -> Self {
        Out {
            body: serde_json::to_string_pretty(&v).expect("json") + "\n",
            ok: true,
        }
    }
    fn text(body: String) -> Self {
        Out { body, ok: true }
    }
}

struct Ctx {
    precision: usize,
}

impl Ctx {
    fn num(&self, x: &ExactReal) -> Result<Value> {
        Ok(json!({ "exact": x.to_string(), "decimal": x.approx(self.precision)? }))
    }
    fn rat(&self, x: &BigRational) -> Result<Value> {
        self.num(&ExactReal::rational(x.clone()))
    }
    fn interval(&self, iv: &Interval) -> Result<Value> {
        Ok(json!({
            "lo": self.num(iv.lo())?,
            "hi": self.num(iv.hi())?,
            "length": self.num(&iv.length())?,
        }))
    }
}

fn system_json(sys: &SystemParams) -> Value {
    serde_json::to_value(sys.summary()).expect("json")
}

fn unsupported(format: Format, what: &str) -> Error {
    Error::Parse(ranumeral::ParseError {
        what: "format",
        input: format!("{format:?}").to_lowercase(),
        reason: format!("{what} supports json and csv only"),
    })
}

fn run(cli: Cli) -> Result<Out> {
    let ctx = Ctx {
        precision: cli.precision,
    };
    match cli.command {
        Command::Eval { sys, digits } => {
            let s = sys.system()?;
            let stream = DigitStream::parse(&digits, s.max_digit())?;
            let v = s.eval_stream(&stream)?;
            Ok(Out::json(json!({
                "system": system_json(&s),
                "digits": stream.to_literal(s.max_digit()),
                "value": ctx.num(&v)?,
            })))
        }
        Command::Expand {
            sys,
            x,
            algo,
            digits,
        } => {
            let s = sys.system()?;
            let x: ExactReal = x.parse()?;
            let e = match algo {
                Algo::Greedy => s.greedy_expand(&x, digits)?,
                Algo::Lazy => s.lazy_expand(&x, digits)?,
            };
            Ok(Out::json(json!({
                "system": system_json(&s),
                "x": ctx.num(&x)?,
                "algo": format!("{algo:?}").to_lowercase(),
                "word": e.word.to_literal(s.max_digit()),
                "remainder": ctx.num(&e.remainder)?,
                "reconstructed": ctx.num(&s.reconstruct(&e))?,
            })))
        }
        Command::Cyl {
            sys,
            word,
            children,
            overlap,
        } => {
            let s = sys.system()?;
            let c = Cylinder::new(&s, DigitWord::parse(&word, s.max_digit())?)?;
            let mut doc = json!({
                "system": system_json(&s),
                "word": c.base().to_literal(s.max_digit()),
                "rank": c.rank(),
                "interval": ctx.interval(&c.interval())?,
            });
            if children {
                let kids = c
                    .subdivide()
                    .iter()
                    .map(|k| {
                        Ok(json!({
                            "word": k.base().to_literal(s.max_digit()),
                            "interval": ctx.interval(&k.interval())?,
                        }))
                    })
                    .collect::<Result<Vec<_>>>()?;
                doc["children"] = Value::Array(kids);
            }
            if let Some(j) = overlap {
                let iv = c.adjacent_overlap(j)?;
                doc["overlap"] = json!({ "j": j, "interval": ctx.interval(&iv)? });
            }
            Ok(Out::json(doc))
        }
        Command::Special { sys, max_m } => {
            let s = sys.system()?;
            let report = classify_coincidences(&s, max_m.max(1));
            Ok(Out::json(json!({
                "system": system_json(&s),
                "report": serde_json::to_value(report).expect("json"),
            })))
        }
        Command::F { op } => run_f(&ctx, op),
        Command::Cantor { op } => run_cantor(&ctx, op),
        Command::Levelset { op } => run_levelset(&ctx, op),
        Command::Verify { sys, suite } => {
            let s = sys.system()?;
            let suite: Suite = suite.parse()?;
            let outcomes = verify::run(&s, suite);
            let count = |st: Status| outcomes.iter().filter(|o| o.status == st).count();
            let failed = count(Status::Failed);
            let mut out = Out::json(json!({
                "system": system_json(&s),
                "suite": suite.to_string(),
                "passed": count(Status::Passed),
                "failed": failed,
                "skipped": count(Status::Skipped),
                "checks": serde_json::to_value(&outcomes).expect("json"),
            }));
            out.ok = failed == 0;
            Ok(out)
        }
    }
}

fn run_f(ctx: &Ctx, op: FOp) -> Result<Out> {
    match op {
        FOp::Eval { sys, digits } => {
            let s = sys.system()?;
            let r = s.max_digit();
            let p = SourcePoint::new(&s, DigitStream::parse(&digits, r)?)?;
            Ok(Out::json(json!({
                "system": system_json(&s),
                "digits": p.digits().to_literal(r),
                "x": ctx.rat(&p.value())?,
                "binary": p.is_binary(),
                "f": ctx.num(&p.f())?,
                "f_left": ctx.num(&p.f_left())?,
            })))
        }
        FOp::Jump { sys, k, prefix } => {
            let s = sys.system()?;
            let r = s.max_digit();
            let prefix = match prefix {
                Some(w) => DigitWord::parse(&w, r)?,
                None => default_jump_prefix(k),
            };
            let jump = jump_at_binary(&s, &prefix, k)?;
            let point = DigitStream::terminating(prefix.digits());
            Ok(Out::json(json!({
                "system": system_json(&s),
                "k": k,
                "prefix": prefix.to_literal(r),
                "point": point.to_literal(r),
                "x": ctx.rat(&SourcePoint::new(&s, point)?.value())?,
                "jump": ctx.num(&jump)?,
            })))
        }
        FOp::Witness { sys, word } => {
            let s = sys.system()?;
            let r = s.max_digit();
            let base = DigitWord::parse(&word, r)?;
            let t = nonmonotone_witness(&s, &base)?;
            let (case, n) = match t.case {
                WitnessCase::LowBase => ("low_base", None),
                WitnessCase::NearClassical { n } => ("near_classical", Some(n)),
            };
            let points = (0..3)
                .map(|i| {
                    Ok(json!({
                        "digits": t.points[i].to_literal(r),
                        "x": ctx.rat(&t.xs[i])?,
                        "f": ctx.num(&t.fs[i])?,
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Out::json(json!({
                "system": system_json(&s),
                "word": base.to_literal(r),
                "case": case,
                "n": n,
                "points": points,
                "valid": t.is_valid(),
            })))
        }
        FOp::Graph {
            sys,
            depth,
            format,
            width,
            height,
        } => {
            let s = sys.system()?;
            let rows = sample_graph(&s, depth)?;
            match format {
                Format::Csv => Ok(Out::text(graph_csv(&rows, ctx.precision)?)),
                Format::Svg => Ok(Out::text(graph_svg(&rows, s.upper(), width, height))),
                Format::Json => {
                    let r = s.max_digit();
                    let pts = rows
                        .iter()
                        .map(|row| {
                            Ok(json!({
                                "x": ctx.rat(&row.x)?,
                                "digits": row.digits.to_literal(r),
                                "y": ctx.num(&row.y)?,
                                "side": row.side.as_str(),
                            }))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Out::json(json!({
                        "system": system_json(&s),
                        "depth": depth,
                        "rows": pts,
                    })))
                }
            }
        }
    }
}

fn run_cantor(ctx: &Ctx, op: CantorOp) -> Result<Out> {
    match op {
        CantorOp::Cover { base, n, format } => {
            let spec = CantorSpec::new(base.parse()?)?;
            let levels = (1..=n)
                .map(|k| Ok((k, cantor_cover(&spec, k)?)))
                .collect::<Result<Vec<_>>>()?;
            match format {
                Format::Csv => Ok(Out::text(cover_csv(&levels, ctx.precision)?)),
                Format::Svg => Err(unsupported(format, "cantor cover")),
                Format::Json => {
                    let docs = levels
                        .iter()
                        .map(|(k, cover)| {
                            let ivs = cover
                                .iter()
                                .map(|iv| ctx.interval(iv))
                                .collect::<Result<Vec<_>>>()?;
                            Ok(json!({ "level": k, "count": cover.len(), "intervals": ivs }))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Out::json(json!({
                        "system": system_json(spec.system()),
                        "levels": docs,
                    })))
                }
            }
        }
        CantorOp::Dim { base, .. } => {
            let spec = CantorSpec::new(base.parse()?)?;
            let dim = cantor_dimension(&spec);
            let mut doc = serde_json::to_value(dimension_report(&dim)).expect("json");
            doc["exact"] = json!(dim.exact().map(|q| q.to_string()));
            doc["system"] = system_json(spec.system());
            Ok(Out::json(doc))
        }
    }
}

fn run_levelset(ctx: &Ctx, op: LevelsetOp) -> Result<Out> {
    match op {
        LevelsetOp::Enum { len, tail, format } => {
            let g = SystemParams::golden();
            let preimages = enumerate_preimages(&g, len, tail)?;
            match format {
                Format::Csv => Ok(Out::text(preimage_csv(&preimages, ctx.precision)?)),
                Format::Svg => Err(unsupported(format, "levelset enum")),
                Format::Json => {
                    let pts = preimages
                        .iter()
                        .map(|p| {
                            Ok(json!({
                                "word": p.labels.iter().map(u32::to_string).collect::<String>(),
                                "digits": p.digits.to_literal(1),
                                "x": ctx.rat(&p.x)?,
                            }))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Out::json(json!({
                        "system": system_json(&g),
                        "y0": ctx.num(&level_set_value())?,
                        "len": len,
                        "tail": tail,
                        "dimension_lower_bound": level_set_dimension().to_string(),
                        "preimages": pts,
                    })))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.body.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}
