//! `nestforms` command-line front end.
//!
//! Exit codes: 0 success or true, 1 mathematical false, 2 parse error,
//! 3 violated precondition.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nestforms::sweep::{self, SweepConfig};
use nestforms::{nesting, reduction, Error, Form, Int, IntMatrix2, LiftIndex};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "nestforms", version, about = "Binary quadratic forms of nested discriminants")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Discriminant b^2 - 4ac of a form.
    #[command(allow_negative_numbers = true)]
    Disc { form: String },
    /// Reduced representative and a witness U with q.U = reduced.
    #[command(allow_negative_numbers = true)]
    Reduce { form: String },
    /// Witness U with q1.U = q2, or "inequivalent" (exit 1).
    #[command(allow_negative_numbers = true)]
    Equiv { q1: String, q2: String },
    /// Reduced primitive forms of discriminant D < 0.
    #[command(allow_negative_numbers = true)]
    Classgroup { d: String },
    /// The lift q.R_g for 0 <= g <= f.
    #[command(allow_negative_numbers = true)]
    Lift { form: String, f: String, g: String },
    /// All primitive lifts q.R_g.
    #[command(allow_negative_numbers = true)]
    Lifts { form: String, f: String },
    /// Reduced base form of discriminant D and a determinant-f matrix M with base.M = Q.
    #[command(allow_negative_numbers = true)]
    Descend { form: String, f: String },
    /// Exit 0 if the two forms of discriminant D f^2 are semi-equivalent, 1 otherwise.
    #[command(allow_negative_numbers = true)]
    Semiequiv { q1: String, q2: String, f: String },
    /// Classes of the primitive lifts of q, with their lift indices.
    #[command(allow_negative_numbers = true)]
    Fiber { form: String, f: String },
    /// Oracle cross-check sweep over a discriminant range.
    #[command(allow_negative_numbers = true)]
    Selftest {
        #[arg(long, default_value_t = -200)]
        dmin: Int,
        #[arg(long, default_value_t = -3)]
        dmax: Int,
        #[arg(long, value_delimiter = ',', default_values_t = [3, 5, 7])]
        primes: Vec<Int>,
    },
}

enum Failure {
    Parse(String),
    Precondition(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Parse(msg),
            other => Failure::Precondition(other),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    truth: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, truth: true }
    }
}

fn parse_form(s: &str) -> Result<Form, Failure> {
    Ok(s.parse::<Form>()?)
}

fn parse_int(s: &str, what: &str) -> Result<Int, Failure> {
    s.trim()
        .parse::<Int>()
        .map_err(|_| Failure::Parse(format!("expected an integer {what}, got {s:?}")))
}

fn matrix_json(m: &IntMatrix2) -> Value {
    json!([[m.p, m.r], [m.s, m.t]])
}

fn form_json(q: &Form) -> Value {
    json!([q.a(), q.b(), q.c()])
}

fn run(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Disc { form } => {
            let q = parse_form(&form)?;
            Output::ok(q.disc().to_string(), json!({ "form": form_json(&q), "discriminant": q.disc() }))
        }
        Command::Reduce { form } => {
            let q = parse_form(&form)?;
            let (r, w) = reduction::reduce(&q)?;
            Output::ok(
                format!("{r}\n{w}"),
                json!({ "reduced": form_json(r.form()), "witness": matrix_json(w.matrix()) }),
            )
        }
        Command::Equiv { q1, q2 } => {
            let (q1, q2) = (parse_form(&q1)?, parse_form(&q2)?);
            match reduction::equivalent(&q1, &q2)? {
                Some(w) => Output::ok(
                    w.to_string(),
                    json!({ "equivalent": true, "witness": matrix_json(w.matrix()) }),
                ),
                None => Output {
                    text: "inequivalent".into(),
                    json: json!({ "equivalent": false, "witness": null }),
                    truth: false,
                },
            }
        }
        Command::Classgroup { d } => {
            let d = parse_int(&d, "discriminant")?;
            let h = reduction::class_set(d)?;
            let mut text: Vec<String> = h.iter().map(Form::to_string).collect();
            text.push(format!("count: {}", h.len()));
            Output::ok(
                text.join("\n"),
                json!({
                    "discriminant": d,
                    "forms": h.iter().map(form_json).collect::<Vec<_>>(),
                    "count": h.len(),
                }),
            )
        }
        Command::Lift { form, f, g } => {
            let q = parse_form(&form)?;
            let idx = LiftIndex::new(parse_int(&g, "index g")?, parse_int(&f, "conductor f")?)?;
            let lifted = nesting::lift_g(&q, idx)?;
            Output::ok(
                lifted.to_string(),
                json!({ "f": idx.conductor(), "g": idx.g(), "lift": form_json(&lifted) }),
            )
        }
        Command::Lifts { form, f } => {
            let q = parse_form(&form)?;
            let f = parse_int(&f, "conductor f")?;
            let mut rows = Vec::new();
            let mut text = Vec::new();
            for idx in nesting::primitive_lift_indices(&q, f)? {
                let lifted = nesting::lift_g(&q, idx)?;
                text.push(format!("g = {idx}: {lifted}"));
                rows.push(json!({ "g": idx.g(), "lift": form_json(&lifted) }));
            }
            text.push(format!("count: {}", rows.len()));
            let count = rows.len();
            Output::ok(text.join("\n"), json!({ "lifts": rows, "count": count }))
        }
        Command::Descend { form, f } => {
            let q = parse_form(&form)?;
            let r = nesting::descend(&q, parse_int(&f, "conductor f")?)?;
            Output::ok(
                format!("{}\n{}", r.base, r.lift),
                json!({ "base": form_json(&r.base), "matrix": matrix_json(&r.lift) }),
            )
        }
        Command::Semiequiv { q1, q2, f } => {
            let (q1, q2) = (parse_form(&q1)?, parse_form(&q2)?);
            let same = nesting::semi_equivalent(&q1, &q2, parse_int(&f, "conductor f")?)?;
            Output {
                text: if same { "semi-equivalent" } else { "not semi-equivalent" }.into(),
                json: json!({ "semi_equivalent": same }),
                truth: same,
            }
        }
        Command::Fiber { form, f } => {
            let q = parse_form(&form)?;
            let classes = nesting::fiber(&q, parse_int(&f, "conductor f")?)?;
            let mut text = Vec::new();
            let mut rows = Vec::new();
            for c in &classes {
                let gs: Vec<Int> = c.indices.iter().map(LiftIndex::g).collect();
                let listed: Vec<String> = gs.iter().map(Int::to_string).collect();
                text.push(format!("{}: g = {}", c.class, listed.join(", ")));
                rows.push(json!({ "class": form_json(c.class.form()), "indices": gs }));
            }
            text.push(format!("count: {}", classes.len()));
            Output::ok(text.join("\n"), json!({ "classes": rows, "count": classes.len() }))
        }
        Command::Selftest { dmin, dmax, primes } => {
            if let Some(&bad) = primes.iter().find(|&&p| !nestforms::arith::is_odd_prime(p)) {
                return Err(Failure::Precondition(Error::UnsupportedModulus(bad)));
            }
            let cfg = SweepConfig { dmin, dmax, primes, ..SweepConfig::default() };
            let rows = sweep::selftest(&cfg);
            let passed = rows.iter().all(|r| r.passed());
            let mut text = vec![format!("{:<22} {:>7} {:>9}  status", "check", "cases", "failures")];
            for r in &rows {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                text.push(format!("{:<22} {:>7} {:>9}  {status}", r.name, r.cases, r.failures));
                if let Some(first) = &r.first_failure {
                    text.push(format!("  first failure: {first}"));
                }
            }
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "cases": r.cases,
                        "failures": r.failures,
                        "passed": r.passed(),
                        "first_failure": r.first_failure,
                    })
                })
                .collect();
            Output { text: text.join("\n"), json: json!({ "checks": json_rows, "passed": passed }), truth: passed }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(if out.truth { 0 } else { 1 })
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(e)) => {
            eprintln!("precondition failed: {e}");
            ExitCode::from(3)
        }
    }
}
