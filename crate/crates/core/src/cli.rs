//! Command-line front end.
//!
//! Exit codes: 0 success, 1 precondition or verification failure, 2 usage
//! error, 3 I/O failure.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::check_density;
use crate::constants::{check_constants, optimize_for_density, ConstantsPair, ConstraintSystem};
use crate::error::Error;
use crate::gen::GenSpec;
use crate::graph::Graph;
use crate::io::{read_graph, write_graph, Format};
use crate::oracle::{max_independent_set_exact, SOFT_VERTEX_LIMIT};
use crate::reducer::{reduce, verify_certificate, Certificate, Verdict};
use crate::scalar::{parse_scalar, ExactScalar};
use crate::structure::{find_forbidden, GraphClass};
use crate::BigRational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "indratio", version, about = "Certified large independent sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Graph6,
    Edges,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Edges => Format::EdgeList,
        }
    }
}

#[derive(clap::Args, Debug)]
struct Input {
    /// Graph file, or `-` for standard input.
    #[arg(default_value = "-")]
    graph: String,
    /// Override format detection.
    #[arg(long, value_enum)]
    input_format: Option<FormatArg>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the graph against a class; prints OK or a witness.
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "T4", value_parser = parse_class)]
        class: GraphClass,
    },
    /// Extract a certified independent set.
    Reduce {
        #[command(flatten)]
        input: Input,
        /// Constants `a b` as fractions.
        #[arg(long, num_args = 2, value_names = ["A", "B"], value_parser = parse_fraction)]
        constants: Option<Vec<BigRational>>,
    },
    /// Re-check a stored certificate against a stored graph.
    Verify {
        graph: String,
        certificate: String,
        #[arg(long, value_enum)]
        input_format: Option<FormatArg>,
    },
    /// Exact independence number.
    Alpha {
        #[command(flatten)]
        input: Input,
    },
    /// Check a constants pair or optimize for an edge density.
    Constants {
        #[arg(long, num_args = 2, value_names = ["A", "B"], value_parser = parse_fraction, conflicts_with = "optimize")]
        check: Option<Vec<BigRational>>,
        #[arg(long, value_name = "DENSITY", value_parser = parse_fraction)]
        optimize: Option<BigRational>,
    },
    /// Planar edge-density report.
    Bound {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "T4", value_parser = parse_class)]
        class: GraphClass,
        /// The input is promised to be planar.
        #[arg(long)]
        planar: bool,
    },
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, value_enum, default_value = "graph6", global = true)]
        format: FormatArg,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    Figure1,
    /// Cycle of length K times path on M vertices.
    Prism { k: usize, m: usize },
    Random {
        n: usize,
        p: f64,
        #[arg(long, default_value = "T4", value_parser = parse_class)]
        class: GraphClass,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_class(s: &str) -> Result<GraphClass, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_fraction(s: &str) -> Result<BigRational, String> {
    parse_scalar(s).ok_or_else(|| format!("`{s}` is not a fraction"))
}

enum Failure {
    Io(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

/// Run with the process's standard input.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with_stdin(argv, || {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map(|_| text)
    })
}

/// Run with `stdin` supplying the text for `-` inputs.
pub fn run_with_stdin<I, S, F>(argv: I, stdin: F) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
    F: FnOnce() -> std::io::Result<String>,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = Outcome::default();
    let mut stdin = Some(stdin);
    let mut read = |path: &str| -> Result<String, Failure> {
        if path == "-" {
            let f = stdin.take().ok_or_else(|| Failure::Io("standard input already consumed".into()))?;
            f().map_err(|e| Failure::Io(format!("standard input: {e}")))
        } else {
            std::fs::read_to_string(PathBuf::from(path)).map_err(|e| Failure::Io(format!("{path}: {e}")))
        }
    };
    match execute(cli.command, &mut read, &mut out) {
        Ok(code) => out.code = code,
        Err(Failure::Io(msg)) => {
            out.code = EXIT_IO;
            let _ = writeln!(out.stderr, "error: {msg}");
        }
        Err(Failure::Precondition(msg)) => {
            out.code = EXIT_FAILURE;
            let _ = writeln!(out.stderr, "error: {msg}");
        }
    }
    out
}

fn load(read: &mut impl FnMut(&str) -> Result<String, Failure>, path: &str, format: Option<FormatArg>) -> Result<Graph, Failure> {
    let text = read(path)?;
    Ok(read_graph(&text, format.map(Format::from))?)
}

fn execute(
    command: Command,
    read: &mut impl FnMut(&str) -> Result<String, Failure>,
    out: &mut Outcome,
) -> Result<i32, Failure> {
    let o = &mut out.stdout;
    match command {
        Command::Validate { input, class } => {
            let g = load(read, &input.graph, input.input_format)?;
            match find_forbidden(&g, class) {
                None => {
                    let _ = writeln!(o, "OK");
                    Ok(EXIT_OK)
                }
                Some(w) => {
                    let _ = writeln!(o, "{w}");
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Reduce { input, constants } => {
            let g = load(read, &input.graph, input.input_format)?;
            let c = match constants {
                Some(v) => ConstantsPair::new(v[0].clone(), v[1].clone())?,
                None => ConstantsPair::reference(),
            };
            let cert = reduce(&g, &c)?;
            let _ = writeln!(o, "{}", cert.to_json());
            Ok(EXIT_OK)
        }
        Command::Verify { graph, certificate, input_format } => {
            let g = load(read, &graph, input_format)?;
            let cert = Certificate::<BigRational>::from_json(&read(&certificate)?)?;
            let verdict = verify_certificate(&g, &cert);
            let _ = writeln!(o, "{verdict}");
            Ok(match verdict {
                Verdict::Valid => EXIT_OK,
                Verdict::Invalid(_) => EXIT_FAILURE,
            })
        }
        Command::Alpha { input } => {
            let g = load(read, &input.graph, input.input_format)?;
            if g.vertex_count() > SOFT_VERTEX_LIMIT {
                let _ = writeln!(
                    out.stderr,
                    "warning: {} vertices exceeds {SOFT_VERTEX_LIMIT}; exact search may be slow",
                    g.vertex_count()
                );
            }
            let r = max_independent_set_exact(&g);
            let o = &mut out.stdout;
            let _ = writeln!(o, "alpha: {}", r.alpha);
            let _ = writeln!(o, "witness: {}", r.witness);
            if r.alpha > 0 {
                let ratio = BigRational::ratio(g.vertex_count() as i64, r.alpha as i64);
                let _ = writeln!(o, "ratio: {ratio}");
            } else {
                let _ = writeln!(o, "ratio: undefined");
            }
            Ok(EXIT_OK)
        }
        Command::Constants { check, optimize } => {
            if let Some(density) = optimize {
                let lp = optimize_for_density(&density)?;
                let _ = writeln!(o, "a: {}", lp.constants.a);
                let _ = writeln!(o, "b: {}", lp.constants.b);
                let _ = writeln!(o, "objective: {}", lp.objective);
                let all: Vec<String> = lp.optimal_vertices.iter().map(|c| format!("({}, {})", c.a, c.b)).collect();
                let _ = writeln!(o, "optimal: {}", all.join(", "));
                if let Some((c, v)) = lp.boundary_optimum {
                    let _ = writeln!(o, "boundary: ({}, {}) attains {v} with a zero constant", c.a, c.b);
                }
                return Ok(EXIT_OK);
            }
            let c = match check {
                Some(v) => ConstantsPair::new(v[0].clone(), v[1].clone())?,
                None => ConstantsPair::reference(),
            };
            let report = check_constants(&c)?;
            let system = ConstraintSystem::<BigRational>::standard();
            let _ = writeln!(o, "{c}");
            for (k, slack) in system.constraints().iter().zip(&report.slacks) {
                let _ = writeln!(o, "{k}  slack {slack}");
            }
            let set = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ");
            let _ = writeln!(o, "{}", if report.feasible { "feasible" } else { "infeasible" });
            let _ = writeln!(o, "tight: {{{}}}", set(&report.tight));
            if !report.feasible {
                let _ = writeln!(o, "violated: {{{}}}", set(&report.violated));
                return Ok(EXIT_FAILURE);
            }
            Ok(EXIT_OK)
        }
        Command::Bound { input, class, planar } => {
            let g = load(read, &input.graph, input.input_format)?;
            let report = check_density::<BigRational>(&g, class, planar)?;
            let _ = writeln!(o, "{report}");
            Ok(EXIT_OK)
        }
        Command::Gen { kind, format } => {
            let spec = match kind {
                GenKind::Figure1 => GenSpec::Figure1,
                GenKind::Prism { k, m } => GenSpec::Prism { k, m },
                GenKind::Random { n, p, class, seed } => GenSpec::Random { n, p, class, seed },
            };
            let g = spec.generate()?;
            o.push_str(&write_graph(&g, format.into())?);
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_in(args: &[&str], input: &str) -> Outcome {
        let input = input.to_string();
        run_with_stdin(std::iter::once("indratio").chain(args.iter().copied()), move || Ok(input))
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_in(&[], "").code, EXIT_USAGE);
        assert_eq!(run_in(&["frobnicate"], "").code, EXIT_USAGE);
        assert_eq!(run_in(&["constants", "--check", "x", "1"], "").code, EXIT_USAGE);
        assert_eq!(run_in(&["validate", "--class", "T9"], "").code, EXIT_USAGE);
    }

    #[test]
    fn missing_file_exits_three() {
        let out = run_in(&["alpha", "/nonexistent/graph.g6"], "");
        assert_eq!(out.code, EXIT_IO);
        assert!(out.stderr.contains("/nonexistent/graph.g6"));
    }

    #[test]
    fn alpha_of_five_cycle() {
        let out = run_in(&["alpha"], "Dhc\n");
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("alpha: 2"));
        assert!(out.stdout.contains("ratio: 5/2"));
    }

    #[test]
    fn gen_edges_round_trips_through_alpha() {
        let gen = run_in(&["gen", "figure1", "--format", "edges"], "");
        assert_eq!(gen.code, EXIT_OK);
        let out = run_in(&["alpha"], &gen.stdout);
        assert!(out.stdout.contains("alpha: 5"));
        assert!(out.stdout.contains("ratio: 16/5"));
    }

    #[test]
    fn constants_optimize_reports_vertex() {
        let out = run_in(&["constants", "--optimize", "15/7"], "");
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("a: 19/34"));
        assert!(out.stdout.contains("objective: 30/119"));
        let out = run_in(&["constants", "--optimize", "0"], "");
        assert!(out.stdout.contains("boundary: (0, 1)"));
    }

    #[test]
    fn infeasible_constants_exit_one() {
        let out = run_in(&["constants", "--check", "1/10", "1/10"], "");
        assert_eq!(out.code, EXIT_FAILURE);
        assert!(out.stdout.contains("infeasible"));
        let out = run_in(&["constants", "--check", "0", "1"], "");
        assert_eq!(out.code, EXIT_FAILURE);
    }

    #[test]
    fn bound_flags_non_planar_input() {
        let k33 = "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
        let out = run_in(&["bound", "--planar"], k33);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("satisfied: false"));
        assert!(out.stdout.contains("cannot be planar"));
    }

    #[test]
    fn bad_graph_is_a_precondition_failure() {
        let out = run_in(&["alpha", "--input-format", "edges"], "2 1\n0 0\n");
        assert_eq!(out.code, EXIT_FAILURE);
        assert!(out.stderr.contains("error:"));
    }
}
