//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a computation is rejected, 2 for
//! malformed input.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra4::A4;
use crate::analysis::{diff_probe, differential_candidate, geometric_radii, identity, q2, uniform_directions};
use crate::class::GClass;
use crate::division::{self, DivisionResult};
use crate::embedding::{bullet, key, psi};
use crate::error::Error;
use crate::expr;
use crate::linprog::{solve_with_tol, IntervalLp};
use crate::metric::neighborhood_vertices;
use crate::text::{fmt_num, parse_a4, parse_class, parse_num, render_a4, render_class};
use crate::DEFAULT_TOL;

#[derive(Debug, Parser)]
#[command(name = "ivspace", version, about = "Arithmetic on generalized intervals")]
struct Cli {
    /// Absolute tolerance for sign tests and comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Machine-readable output (eval, mul, div, euclid).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression such as "[2,4] + dual[6,1]".
    Eval { expr: String },
    /// Bullet product of two classes, and the classical product when both are proper.
    Mul {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Exact division Y / X.
    Div {
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Division with remainder, Y = X * Z + R.
    Euclid {
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Inspect an element "(x1,x2,x3,x4)" of the algebra.
    A4 {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Solve a linear program given as JSON.
    Lp { file: PathBuf },
    /// Differentiability ratios around x0 for five radii from eps down to eps * 1e-4, as CSV.
    Probe {
        #[arg(value_enum)]
        function: ProbeFn,
        #[arg(allow_hyphen_values = true)]
        x0: String,
        #[arg(allow_hyphen_values = true)]
        eps: String,
    },
    /// Vertices of the eps-ball around a positive class, as CSV.
    Neighborhood {
        #[arg(allow_hyphen_values = true)]
        x0: String,
        #[arg(allow_hyphen_values = true)]
        eps: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProbeFn {
    Q2,
    Identity,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn class_json(c: GClass, tol: f64) -> serde_json::Value {
    json!({"inf": c.inf(), "sup": c.sup(), "text": render_class(c, tol)})
}

fn division_text(r: &DivisionResult, tol: f64, as_json: bool) -> String {
    if as_json {
        let v = json!({
            "quotient": class_json(r.quotient, tol),
            "remainder": class_json(r.remainder, tol),
            "exact": r.exact,
        });
        format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
    } else {
        format!(
            "quotient: {}\nremainder: {}\nexact: {}\n",
            render_class(r.quotient, tol),
            render_class(r.remainder, tol),
            r.exact
        )
    }
}

fn exact_division(y: GClass, x: GClass, tol: f64) -> crate::Result<DivisionResult> {
    let quotient = if x.inf() < -tol && x.sup() > tol {
        division::div_exact_zero_containing_with_tol(y, x, tol)?
    } else {
        division::div_exact_positive_with_tol(y, x, tol)?
    };
    Ok(DivisionResult {
        quotient,
        remainder: GClass::ZERO,
        exact: true,
    })
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let tol = cli.tol;
    let show = |c: GClass| render_class(c, tol);
    Ok(match &cli.command {
        Command::Eval { expr } => {
            let v = expr::eval(expr)?.into_class();
            if cli.json {
                format!("{}\n", class_json(v, tol))
            } else {
                format!("{}\n", show(v))
            }
        }
        Command::Mul { x, y } => {
            let (x, y) = (parse_class(x)?, parse_class(y)?);
            let b = bullet(x, y);
            let classical = x.as_interval().zip(y.as_interval()).map(|(a, b)| (a * b).to_class());
            if cli.json {
                let c = classical.map(|c| class_json(c, tol));
                format!("{}\n", json!({"bullet": class_json(b, tol), "classical": c}))
            } else {
                let mut s = format!("bullet: {}\n", show(b));
                if let Some(c) = classical {
                    s.push_str(&format!("classical: {}\n", show(c)));
                }
                s
            }
        }
        Command::Div { y, x } => {
            let r = exact_division(parse_class(y)?, parse_class(x)?, tol)?;
            division_text(&r, tol, cli.json)
        }
        Command::Euclid { y, x } => {
            let r = division::divide_with_tol(parse_class(y)?, parse_class(x)?, tol)?;
            division_text(&r, tol, cli.json)
        }
        Command::A4 { element } => {
            let x: A4 = parse_a4(element)?;
            let inverse = x
                .inverse_with_tol(tol)
                .map(render_a4)
                .unwrap_or_else(|_| "none".into());
            let k = key(x);
            format!(
                "element: {}\ninvertible: {}\ninverse: {}\nkey: ({},{})\npsi: {}\n",
                render_a4(x),
                x.is_invertible_with_tol(tol),
                inverse,
                fmt_num(k.u),
                fmt_num(k.v),
                show(psi(x))
            )
        }
        Command::Lp { file } => {
            let src = std::fs::read_to_string(file)
                .map_err(|e| Failure::Usage(format!("cannot read `{}`: {e}", file.display())))?;
            let lp = IntervalLp::from_json(&src)?;
            let sol = solve_with_tol(&lp, tol)?;
            format!("{}\n", serde_json::to_string_pretty(&sol).expect("json"))
        }
        Command::Probe { function, x0, eps } => {
            let (x0, eps) = (parse_class(x0)?, positive(eps)?);
            let radii = geometric_radii(eps, eps * 1e-4, 5);
            let dirs = uniform_directions(64);
            let report = match function {
                ProbeFn::Q2 => diff_probe(q2, x0, differential_candidate(x0), &radii, &dirs),
                ProbeFn::Identity => diff_probe(identity, x0, identity, &radii, &dirs),
            };
            report.to_csv()
        }
        Command::Neighborhood { x0, eps } => {
            let p = neighborhood_vertices(parse_class(x0)?, positive(eps)?)?;
            let mut s = String::from("vertex,inf,sup\n");
            for (i, (u, v)) in p.vertices.iter().enumerate() {
                s.push_str(&format!("A{},{},{}\n", i + 1, fmt_num(*u), fmt_num(*v)));
            }
            s
        }
    })
}

fn positive(token: &str) -> Result<f64, Failure> {
    let v = parse_num(token)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(Failure::Usage(format!("cannot parse `{token}`: expected a positive radius")))
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<O: Write, E: Write>(args: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    if !(cli.tol >= 0.0 && cli.tol.is_finite()) {
        let _ = writeln!(err, "error: --tol must be a non-negative number, got {}", cli.tol);
        return 2;
    }
    match execute(&cli) {
        Ok(text) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => out.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot write output: {e}");
                    1
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}
