//! The `cubiq` command line, as a function from arguments to output so it
//! can be tested without spawning processes.

use std::ffi::OsString;
use std::fs::File;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cubiq::arith;
use cubiq::brute;
use cubiq::census::{self, CHECKS};
use cubiq::decomp::{count_all_vectors, count_primitive_vectors};
use cubiq::error::Error;
use cubiq::lattice::{self, format_vector, parse_vec3, Budget, Vec3};
use cubiq::pythagoras::{euler_param, quadruples_with_d, PythQuadruple};
use cubiq::twins::{self, Certificate};

#[derive(Debug, Parser)]
#[command(
    name = "cubiq",
    version,
    about = "Twin vectors, cubic lattices and Hurwitz quaternions"
)]
struct Cli {
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also compute the answer by exhaustive search and compare.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All vectors orthogonal to x with the same norm.
    Twins {
        #[arg(allow_hyphen_values = true, value_name = "X,Y,Z")]
        vector: String,
    },
    /// Complete a twin pair of integer length to an icube.
    Extend {
        #[arg(allow_hyphen_values = true, value_name = "X,Y,Z")]
        x: String,
        #[arg(allow_hyphen_values = true, value_name = "U,V,W")]
        y: String,
    },
    /// The largest cubic lattice containing a primitive vector.
    Lattice {
        #[arg(allow_hyphen_values = true, value_name = "X,Y,Z")]
        vector: String,
    },
    /// The four Euler parameterizations of a primitive quadruple.
    #[command(allow_negative_numbers = true)]
    Param { a: i64, b: i64, c: i64, d: i64 },
    /// Number of ordered twin pairs of norm M.
    #[command(name = "count-twins", allow_negative_numbers = true)]
    CountTwins { m: i64 },
    /// Number of vectors, and of primitive vectors, of norm M.
    #[command(name = "count-vectors", allow_negative_numbers = true)]
    CountVectors { m: i64 },
    /// Decide whether every vector of norm N has a twin.
    #[command(name = "twin-complete", allow_negative_numbers = true)]
    TwinComplete { n: i64 },
    /// Primitive quadruples a² + b² + c² = d² for odd d.
    #[command(allow_negative_numbers = true)]
    Pyth { d: i64 },
    /// Compare the closed-form counts with enumeration.
    Census {
        /// One of jacobi, twin-counts, vector-counts, hurwitz-counts,
        /// twin-completeness; all when omitted.
        #[arg(long)]
        check: Option<String>,
        /// Upper end of the range (defaults to each check's limit).
        #[arg(long)]
        max: Option<i64>,
        /// Also write every row to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Look for twinless vectors in dimension 5 or 7.
    Explore {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        max: i64,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// What a command produced before formatting.
struct Answer {
    name: &'static str,
    input: Value,
    result: Value,
    text: String,
    /// `(oracle, match)` when `--verify` was given.
    oracle: Option<(Value, bool)>,
    /// A result that is well formed but reports a failure, e.g. a census
    /// mismatch.
    failed: bool,
}

impl Answer {
    fn new(name: &'static str, input: Value, result: Value, text: String) -> Self {
        Answer {
            name,
            input,
            result,
            text,
            oracle: None,
            failed: false,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            // a malformed vector or quadruple is a usage problem
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Reads the optional `CUBIQ_BUDGET` multiplier.
fn budget_factor() -> Res<i64> {
    match std::env::var("CUBIQ_BUDGET") {
        Err(_) => Ok(1),
        Ok(s) => match s.trim().parse::<i64>() {
            Ok(f) if f >= 1 => Ok(f),
            _ => Err(Failure::Usage(format!(
                "CUBIQ_BUDGET must be a positive integer, got {s:?}"
            ))),
        },
    }
}

fn vectors_json(vs: &[Vec3]) -> Value {
    json!(vs.iter().map(|v| v.to_vec()).collect::<Vec<_>>())
}

fn lines(vs: &[Vec3]) -> String {
    vs.iter().map(|v| format_vector(v)).collect::<Vec<_>>().join("\n")
}

/// Exhaustive oracles enumerate vectors of norm `n`; refuse beyond the budget.
fn oracle_budget(n: i64, budget: &Budget) -> Res<()> {
    let limit = budget.limit(3)?;
    if n > limit {
        return Err(Error::BudgetExceeded { norm: n, dim: 3, limit }.into());
    }
    Ok(())
}

fn verified(mut a: Answer, oracle: Value) -> Answer {
    let matched = a.result == oracle;
    a.oracle = Some((oracle, matched));
    a
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli.command, cli.verify) {
        Ok(a) => render(a, cli.json),
        Err(Failure::Domain(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn render(a: Answer, as_json: bool) -> Outcome {
    let mismatch = matches!(a.oracle, Some((_, false)));
    let code = if a.failed || mismatch { 1 } else { 0 };
    let stdout = if as_json {
        let mut obj = json!({ "command": a.name, "input": a.input, "result": a.result });
        if let Some((oracle, matched)) = a.oracle {
            obj["oracle"] = oracle;
            obj["match"] = json!(matched);
        }
        format!("{obj}\n")
    } else {
        let mut s = a.text;
        if let Some((oracle, matched)) = a.oracle {
            s.push_str(&format!("\noracle: {oracle}\nmatch: {matched}"));
        }
        s.push('\n');
        s
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn dispatch(cmd: &Command, verify: bool) -> Res<Answer> {
    let budget = Budget::scaled(budget_factor()?);
    match cmd {
        Command::Twins { vector } => {
            let x = parse_vec3(vector)?;
            let ys = twins::twins_of_with(&x, &budget)?;
            let text = if ys.is_empty() {
                "no twins".to_string()
            } else {
                lines(&ys)
            };
            let a = Answer::new("twins", json!(x), vectors_json(&ys), text);
            if !verify {
                return Ok(a);
            }
            oracle_budget(lattice::norm(&x), &budget)?;
            Ok(verified(a, vectors_json(&brute::twins(&x))))
        }
        Command::Extend { x, y } => {
            let (x, y) = (parse_vec3(x)?, parse_vec3(y)?);
            let z = twins::extend_to_icube(&x, &y)?;
            let a = Answer::new("extend", json!([x, y]), json!(z), format_vector(&z));
            if !verify {
                return Ok(a);
            }
            oracle_budget(lattice::norm(&x), &budget)?;
            // the third edge is determined up to sign; orientation picks one
            let det = lattice::dot(&lattice::cross(&x, &y), &z);
            let candidates: Vec<Vec3> = brute::vectors(lattice::norm(&x))
                .into_iter()
                .filter(|w| lattice::dot(w, &x) == 0 && lattice::dot(w, &y) == 0)
                .filter(|w| lattice::dot(&lattice::cross(&x, &y), w) * det > 0)
                .collect();
            Ok(verified(a, candidates.first().map_or(Value::Null, |w| json!(w))))
        }
        Command::Lattice { vector } => {
            let x = parse_vec3(vector)?;
            let lat = twins::max_cubic_lattice(&x)?;
            let edge = lat.edge().expect("primitive vectors have lattices of integer edge");
            let mut text = format!("edge {edge}\n");
            if let Some(g) = lat.generator {
                text.push_str(&format!("alpha {g}\n"));
            }
            text.push_str(&lines(&lat.basis));
            let result = json!({
                "edge": edge,
                "basis": vectors_json(&lat.basis),
                "alpha": lat.generator.map(|g| g.to_string()),
            });
            let mut a = Answer::new("lattice", json!(x), result, text);
            if verify {
                oracle_budget(edge * edge, &budget)?;
                let found: Vec<_> = brute::cubic_lattices(edge)
                    .into_iter()
                    .filter(|six| brute::lattice_contains(&[six[0], six[1], six[2]], &x))
                    .collect();
                let matched = found.len() == 1 && found[0].iter().all(|v| lat.contains(v));
                let oracle = json!(found.iter().map(|six| vectors_json(six)).collect::<Vec<_>>());
                a.oracle = Some((oracle, matched));
            }
            Ok(a)
        }
        Command::Param { a, b, c, d } => {
            let q = PythQuadruple::new(*a, *b, *c, *d)?;
            let params = euler_param(&q)?;
            let mut rows: Vec<[i64; 4]> = params.iter().map(|p| p.0).collect();
            let text = params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n");
            let ans = Answer::new("param", json!([a, b, c, d]), json!(rows), text);
            if !verify {
                return Ok(ans);
            }
            oracle_budget(*d, &budget)?;
            // compare as sets; the listing order follows the unit order
            let mut oracle = brute::euler_params(*a, *b, *c, *d);
            oracle.sort();
            rows.sort();
            let matched = rows == oracle;
            let mut ans = ans;
            ans.oracle = Some((json!(oracle), matched));
            Ok(ans)
        }
        Command::CountTwins { m } => {
            let n = twins::twin_count(*m)?;
            let a = Answer::new("count-twins", json!(m), json!(n), n.to_string());
            if !verify {
                return Ok(a);
            }
            oracle_budget(*m, &budget)?;
            Ok(verified(a, json!(brute::twin_pair_count(*m))))
        }
        Command::CountVectors { m } => {
            let all = count_all_vectors(*m)?;
            let (n, k) = arith::squarefree_split(*m);
            let prim = count_primitive_vectors(n, k)?;
            let result = json!({ "all": all, "primitive": prim });
            let a = Answer::new(
                "count-vectors",
                json!(m),
                result,
                format!("all {all}\nprimitive {prim}"),
            );
            if !verify {
                return Ok(a);
            }
            oracle_budget(*m, &budget)?;
            let (all, prim) = brute::vector_counts(*m);
            Ok(verified(a, json!({ "all": all, "primitive": prim })))
        }
        Command::TwinComplete { n } => {
            let t = twins::is_twin_complete(*n)?;
            let (why, cert) = match &t.certificate {
                Certificate::NoVectors => (format!("no vector has norm {n}"), json!({ "kind": "no-vectors" })),
                Certificate::TwoSquares { a, b } => (
                    format!("squarefree part {} = {a}² + {b}²", t.squarefree_part),
                    json!({ "kind": "two-squares", "a": a, "b": b }),
                ),
                Certificate::Witness { base, vector } if base == vector => (
                    format!("{} has no twin", format_vector(vector)),
                    json!({ "kind": "witness", "base": base, "vector": vector }),
                ),
                Certificate::Witness { base, vector } => (
                    format!(
                        "{} has no twin (lifted from {})",
                        format_vector(vector),
                        format_vector(base)
                    ),
                    json!({ "kind": "witness", "base": base, "vector": vector }),
                ),
            };
            let verdict = if t.verdict {
                "twin-complete"
            } else {
                "not twin-complete"
            };
            let result = json!({
                "twin_complete": t.verdict,
                "squarefree_part": t.squarefree_part,
                "certificate": cert,
            });
            let mut a = Answer::new("twin-complete", json!(n), result, format!("{n}: {verdict}; {why}"));
            if verify {
                oracle_budget(*n, &budget)?;
                let oracle = brute::twin_complete(*n);
                a.oracle = Some((json!(oracle), oracle == t.verdict));
            }
            Ok(a)
        }
        Command::Pyth { d } => {
            let qs = quadruples_with_d(*d)?;
            let rows: Vec<[i64; 3]> = qs.iter().map(|q| [q.a, q.b, q.c]).collect();
            let text = qs.iter().map(|q| q.to_string()).collect::<Vec<_>>().join("\n");
            let a = Answer::new("pyth", json!(d), json!(rows), text);
            if !verify {
                return Ok(a);
            }
            // the oracle scans a d³ cube
            oracle_budget(d * d, &budget)?;
            Ok(verified(a, json!(brute::quadruple_representatives(*d))))
        }
        Command::Census { check, max, csv } => {
            let chosen: Vec<_> = match check {
                None => CHECKS.iter().collect(),
                Some(name) => vec![census::find_check(name).ok_or_else(|| {
                    let names: Vec<_> = CHECKS.iter().map(|c| c.name).collect();
                    Failure::Usage(format!("unknown check {name:?}; expected one of {}", names.join(", ")))
                })?],
            };
            let factor = budget_factor()?;
            let mut reports = Vec::new();
            for c in chosen {
                reports.push(c.run(max.unwrap_or(c.max), factor)?);
            }
            if let Some(path) = csv {
                let file = File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                census::write_csv(&reports, file)?;
            }
            let passed = reports.iter().all(|r| r.passed());
            let mut text = Vec::new();
            for r in &reports {
                text.push(r.to_string());
                for row in r.mismatches() {
                    text.push(format!(
                        "  mismatch at {}: formula {} oracle {}",
                        row.input, row.formula, row.oracle
                    ));
                }
            }
            let result = json!(reports
                .iter()
                .map(|r| json!({
                    "check": r.check_name,
                    "range": [r.range.0, r.range.1],
                    "rows": r.rows.len(),
                    "mismatches": r.mismatches().iter().map(|m| json!({
                        "input": m.input, "formula": m.formula, "oracle": m.oracle
                    })).collect::<Vec<_>>(),
                    "passed": r.passed(),
                }))
                .collect::<Vec<_>>());
            let input = json!({ "check": check, "max": max });
            let mut a = Answer::new("census", input, result, text.join("\n"));
            a.failed = !passed;
            if verify {
                // every census row already is a formula/oracle comparison
                a.oracle = Some((json!("enumeration"), passed));
            }
            Ok(a)
        }
        Command::Explore { dim, max } => {
            let found = lattice::explore_twin_conjecture_with(*dim, *max, &budget)?;
            let mut text = format!(
                "dimension {dim}, norms 1..={max}: {} twinless vectors with an even coordinate",
                found.len()
            );
            for v in &found {
                text.push_str(&format!("\n{}", format_vector(v)));
            }
            let mut a = Answer::new("explore", json!({ "dim": dim, "max": max }), json!(found), text);
            if verify {
                let oracle = explore_all_vectors(*dim, *max, &budget)?;
                a.oracle = Some((json!(oracle), oracle == found));
            }
            Ok(a)
        }
    }
}

/// The explorer's question without its symmetry reduction: every vector
/// is tested, and the twinless ones are reported by representative.
fn explore_all_vectors(dim: usize, max: i64, budget: &Budget) -> Res<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for d in 1..=max {
        let all = lattice::enumerate_norm_vectors_with(d, dim, budget)?;
        let mut found = std::collections::BTreeSet::new();
        for x in &all {
            if x.iter().any(|c| c % 2 == 0) && !all.iter().any(|y| lattice::dot(x, y) == 0) {
                let mut r: Vec<i64> = x.iter().map(|c| c.abs()).collect();
                r.sort();
                found.insert(r);
            }
        }
        out.extend(found);
    }
    Ok(out)
}
