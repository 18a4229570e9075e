//! `trainyard`: net train counts, expansions and structure scans for signed rod sets.

mod args;
mod render;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use trainyard::json::{big, bigs};
use trainyard::*;

use args::RodArg;

const DEFAULT_HORIZON: usize = 64;

#[derive(Parser)]
#[command(name = "trainyard", version, about = "Exact arithmetic for signed rod sets and their train counts")]
#[command(after_help = "Rod sets: [1,2] or [1^3,-2^2]. Quote literals with minus signs in most shells.\n\
Sources (where noted): a literal, arith:FIRST,STEP,SIGN or trains:LITERAL (trains:-LITERAL negates).\n\
Any literal argument may be @FILE, a text file with one literal per line.")]
struct Cli {
    /// Number of terms to compute or check.
    #[arg(short = 'n', long, global = true, env = "TRAINYARD_HORIZON",
          value_parser = clap::value_parser!(u64).range(1..))]
    horizon: Option<u64>,

    #[arg(long, global = true, env = "TRAINYARD_FORMAT", value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Most trains an enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Net train counts F(0..=n).
    Counts {
        #[arg(value_parser = args::rod_arg, allow_hyphen_values = true,
              required_unless_present_any = ["arith", "trains"], conflicts_with_all = ["arith", "trains"])]
        rodset: Option<RodArg>,
        /// Rods FIRST, FIRST+STEP, ... all with SIGN, e.g. 1,2,-.
        #[arg(long, value_parser = args::arith, allow_hyphen_values = true, conflicts_with = "trains")]
        arith: Option<RodSource>,
        /// One rod per train of the given rod set.
        #[arg(long, value_parser = args::rod_arg, allow_hyphen_values = true)]
        trains: Option<RodArg>,
    },
    /// Discrepancies D(1..=n) between the counts of R and S.
    Discrep {
        #[arg(value_parser = args::source_arg, allow_hyphen_values = true)]
        r: RodSource,
        #[arg(value_parser = args::source_arg, allow_hyphen_values = true)]
        s: RodSource,
    },
    /// The result S of expanding R by Q.
    Expand {
        #[arg(value_parser = args::rod_arg, allow_hyphen_values = true)]
        r: RodArg,
        #[arg(value_parser = args::rod_arg, allow_hyphen_values = true)]
        q: RodArg,
    },
    /// The Q with R expanding to S, and whether it is finite.
    Solveq {
        #[arg(value_parser = args::source_arg, allow_hyphen_values = true)]
        r: RodSource,
        #[arg(value_parser = args::source_arg, allow_hyphen_values = true)]
        s: RodSource,
    },
    /// The R that Q expands into S.
    Solver {
        #[arg(value_parser = args::source_arg, allow_hyphen_values = true)]
        q: RodSource,
        #[arg(value_parser = args::source_arg, allow_hyphen_values = true)]
        s: RodSource,
    },
    /// The dual of Q.
    Dual {
        #[arg(value_parser = args::source_arg, allow_hyphen_values = true)]
        q: RodSource,
    },
    /// Q1 followed by Q2 as a single expansion.
    Compose {
        #[arg(value_parser = args::rod_arg, allow_hyphen_values = true)]
        q1: RodArg,
        #[arg(value_parser = args::rod_arg, allow_hyphen_values = true)]
        q2: RodArg,
    },
    /// The rod set whose train counts begin v0,v1,... (v0 = 1).
    Fromseq {
        #[arg(value_parser = args::seq_arg, allow_hyphen_values = true)]
        values: CountSeq,
    },
    /// Whether the counts of R are periodic, and the least period.
    Period {
        #[arg(value_parser = args::rod_arg, allow_hyphen_values = true)]
        rodset: RodArg,
    },
    /// Expansions of R into a single length a ≤ B.
    Scan1 {
        #[arg(value_parser = args::rod_arg, allow_hyphen_values = true)]
        rodset: RodArg,
        #[arg(short = 'b', long)]
        bound: usize,
    },
    /// Expansions of R into two lengths a < b ≤ B.
    Scan2 {
        #[arg(value_parser = args::rod_arg, allow_hyphen_values = true)]
        rodset: RodArg,
        #[arg(short = 'b', long)]
        bound: usize,
    },
    /// Divisibility checks for [1^s,2^t] or [-1^s,2^t].
    Lucas {
        s: u64,
        t: u64,
        #[arg(value_parser = args::sign_arg, allow_hyphen_values = true)]
        sign: Sign,
    },
    /// Predicted two-length expansions of [±1^s,2^t].
    LucasShapes {
        s: u64,
        t: u64,
        #[arg(value_parser = args::sign_arg, allow_hyphen_values = true)]
        sign: Sign,
        /// adjacent:FROM..TO, skip:FROM..TO or multiple:D,KMAX.
        #[arg(long, value_parser = args::kind_arg)]
        kind: ShapeKind,
    },
    /// Trinomials reached from [1,-2] and [-1,-2], grouped by residue class.
    Borwein {
        #[arg(short = 'b', long)]
        bound: usize,
    },
    /// Every train of length n, counted with signs.
    Enumerate {
        #[arg(value_parser = args::rod_arg, allow_hyphen_values = true)]
        rodset: RodArg,
        length: usize,
        /// Print each train, one per line.
        #[arg(long)]
        list: bool,
    },
    /// F(n) for a two-length rod set as a binomial sum.
    Binom {
        #[arg(value_parser = args::rod_arg, allow_hyphen_values = true)]
        rodset: RodArg,
        length: usize,
    },
    /// Polynomial product or exact quotient.
    Poly {
        op: PolyOp,
        #[arg(value_parser = args::poly_arg, allow_hyphen_values = true)]
        p1: Poly,
        #[arg(value_parser = args::poly_arg, allow_hyphen_values = true)]
        p2: Poly,
    },
    /// The cyclotomic polynomial Φ_d.
    Cyclo {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
    },
    /// Shape, extent and sign structure of a rod set.
    Describe {
        #[arg(value_parser = args::rod_arg, allow_hyphen_values = true)]
        rodset: RodArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyOp {
    Mul,
    Div,
}

/// A result in both output forms.
struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Output {
        Output { text: text.into(), json }
    }

    /// One result per input, as lines or a JSON array.
    fn batch(outputs: Vec<Output>) -> Output {
        if outputs.len() == 1 {
            return outputs.into_iter().next().expect("one");
        }
        let (text, json): (Vec<String>, Vec<Value>) = outputs.into_iter().map(|o| (o.text, o.json)).unzip();
        Output::new(text.join("\n"), Value::Array(json))
    }
}

fn usage_error(msg: String) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

/// The single rod set in an argument that may name a file.
fn single(arg: RodArg) -> RodSet {
    let mut sets = arg.0;
    if sets.len() != 1 {
        usage_error(format!("expected one rod set but the file holds {}", sets.len()));
    }
    sets.pop().expect("one")
}

fn each(arg: RodArg, f: impl Fn(&RodSet) -> Result<Output>) -> Result<Output> {
    arg.0.iter().map(f).collect::<Result<Vec<_>>>().map(Output::batch)
}

fn counts_output(seq: &CountSeq) -> Output {
    Output::new(seq.to_string(), seq.to_json())
}

fn run(cli: Cli) -> Result<Output> {
    let horizon = cli.horizon.map(|h| h as usize);
    let n = horizon.unwrap_or(DEFAULT_HORIZON);
    let cap = cli.cap;
    Ok(match cli.command {
        Command::Counts { rodset, arith, trains } => match (rodset, arith, trains) {
            (Some(r), _, _) => each(r, |r| Ok(counts_output(&train_counts(&RodSource::Finite(r.clone()), n)?)))?,
            (_, Some(src), _) => counts_output(&train_counts(&src, n)?),
            (_, _, Some(base)) => {
                let src = RodSource::TrainsOf { base: single(base), sign: Sign::Plus };
                counts_output(&train_counts(&src, n)?)
            }
            _ => unreachable!("clap requires one input"),
        },
        Command::Discrep { r, s } => counts_output(&discrepancies(&r, &s, n)?),
        Command::Expand { r, q } => {
            let e = expand(&single(r), &single(q), n);
            Output::new(render::expansion(&e), e.to_json())
        }
        Command::Solveq { r, s } => {
            let e = solve_q(&r, &s, n)?;
            Output::new(render::expansion(&e), e.to_json())
        }
        Command::Solver { q, s } => {
            let e = solve_r(&q, &s, n)?;
            Output::new(render::expansion(&e), e.to_json())
        }
        Command::Dual { q } => {
            let d = dual(&q, n)?;
            Output::new(render::dual(&d), d.to_json())
        }
        Command::Compose { q1, q2 } => {
            let q = compose(&single(q1), &single(q2));
            Output::new(q.to_string(), q.to_json())
        }
        Command::Fromseq { values } => {
            let available = values.values.len().saturating_sub(1);
            let c = rodset_from_counts(&values, horizon.unwrap_or(available))?;
            let r = c.to_rodset();
            Output::new(r.to_string(), json!({"R": r.to_json(), "counts": c.to_json()}))
        }
        Command::Period { rodset } => each(rodset, |r| {
            let p = detect_period(r)?;
            Ok(Output::new(render::period(&p), p.to_json()))
        })?,
        Command::Scan1 { rodset, bound } => {
            let hits = scan_one_expansions(&single(rodset), bound)?;
            Output::new(render::hits(&hits), hits.to_json())
        }
        Command::Scan2 { rodset, bound } => {
            let hits = scan_two_expansions(&single(rodset), bound)?;
            Output::new(render::hits(&hits), hits.to_json())
        }
        Command::Lucas { s, t, sign } => {
            let rep = lucas_check(s, t, sign, n)?;
            Output::new(render::lucas(&rep), rep.to_json())
        }
        Command::LucasShapes { s, t, sign, kind } => {
            let hits = lucas_two_shapes(s, t, sign, kind)?;
            Output::new(render::hits(&hits), hits.to_json())
        }
        Command::Borwein { bound } => {
            let table = borwein_classify(bound)?;
            Output::new(render::borwein(&table), table.to_json())
        }
        Command::Enumerate { rodset, length, list } => {
            let e = enumerate_trains(&single(rodset), length, cap)?;
            let mut j = json!({"net": big(&e.net), "total": e.trains.len()});
            if list {
                j["trains"] = e.trains.iter().map(ToString::to_string).collect();
            }
            Output::new(render::enumeration(&e, list), j)
        }
        Command::Binom { rodset, length } => each(rodset, |r| {
            let v = binomial_count(r, length)?;
            Ok(Output::new(v.to_string(), big(&v)))
        })?,
        Command::Poly { op, p1, p2 } => {
            let p = match op {
                PolyOp::Mul => poly_mul(&p1, &p2),
                PolyOp::Div => poly_divexact(&p1, &p2)?
                    .ok_or_else(|| Error::Invalid(format!("{p2} does not divide {p1}")))?,
            };
            Output::new(p.to_string(), p.to_json())
        }
        Command::Cyclo { d } => {
            let p = cyclotomic(d as usize);
            Output::new(p.to_string(), bigs(p.coeffs()))
        }
        Command::Describe { rodset } => each(rodset, |r| {
            let d = r.describe();
            Ok(Output::new(render::describe(&d), d.to_json()))
        })?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", out.json),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
