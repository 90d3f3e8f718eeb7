//! `geomnum` — exact lattice geometry over JSON body files.
//!
//! Every command reads a body file (stdin unless `--input`), answers one
//! question, and writes a byte-deterministic report (stdout unless
//! `--output`).  Exit code 0 means a verdict was delivered — a verdict of
//! "avoidable" or "not minimal" is still a delivered verdict.  Exit code 1
//! means a mathematical check failed, which would falsify a certified
//! inequality and demands attention.  Exit code 2 means the command could
//! not run to a verdict: unreadable input, a malformed or non-convex body,
//! an unmet precondition, an exhausted search budget.

mod text;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use geomnum::critical::critical_lattice_symmetric;
use geomnum::descent::{descend, descend_all_paths};
use geomnum::geom::ConvexPolygon;
use geomnum::invariants::{inequality_battery, CheckStatus};
use geomnum::geom::Point2;
use geomnum::io::{
    avoidance_certificate_value, body_digest, descent_certificate_value, invariant_report_value,
    parse_body, scalar_value, serialize_body, systolic_report_value, BodyFile, BodyKind,
};
use geomnum::lattice::{
    is_unavoidable, minkowski_witness, reduced_basis, shortest_vector, Lattice2,
};
use geomnum::random::{random_body, BodyConstraint, RandomBodySpec};
use geomnum::scalar;
use geomnum::simplex::{basic_simplex, dual_simplex, unavoidable_simplex, SimplexN};
use geomnum::svg::{render_svg, SvgScene};
use geomnum::torus::{bh_area, ht_area, systole, systolic_check, zoll_check, FlatTorusMetric};
use serde_json::{Map, Value};

#[derive(Parser)]
#[command(
    name = "geomnum",
    version,
    about = "Exact lattice geometry: duality, certified area descent, invariants, flat tori"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable lines.
    Text,
    /// JSON with exact scalars as strings.
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    /// One canonical descent path.
    Deterministic,
    /// Every admissible slide at every step, deduplicated.
    AllPaths,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Constraint {
    /// Any strictly convex polygon.
    None,
    /// Origin strictly inside.
    OriginInterior,
    /// Centrally symmetric about the origin.
    Symmetric,
    /// Meets every integer line, minimally scaled to do so.
    Unavoidable,
}

impl From<Constraint> for BodyConstraint {
    fn from(c: Constraint) -> BodyConstraint {
        match c {
            Constraint::None => BodyConstraint::None,
            Constraint::OriginInterior => BodyConstraint::OriginInterior,
            Constraint::Symmetric => BodyConstraint::Symmetric,
            Constraint::Unavoidable => BodyConstraint::Unavoidable,
        }
    }
}

#[derive(Args)]
struct IoArgs {
    /// Input body file; stdin if omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output file; stdout if omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Polar dual of a body with the origin interior.
    Dual {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Avoidance verdict: met integer lines, witness, dual certificate.
    CheckUnavoidable {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Run the area descent and print the certificate.
    Descend {
        #[command(flatten)]
        io: IoArgs,
        /// Descent strategy.
        #[arg(long, value_enum, default_value_t = Strategy::Deterministic)]
        strategy: Strategy,
        /// Cap on executed steps; a generous type-derived default if omitted.
        #[arg(long)]
        step_budget: Option<usize>,
    },
    /// The full inequality battery for one body.
    Invariants {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Exact critical determinant and an admissible basis.
    CriticalLattice {
        #[command(flatten)]
        io: IoArgs,
        /// Positive rational tolerance for the numerically-toleranced
        /// interfaces (validated; the result itself is exact).
        #[arg(long, default_value = "1/1000000")]
        tol: String,
    },
    /// Flat-torus quantities for a ball (plus the file's lattice, if any).
    Torus {
        #[command(subcommand)]
        which: TorusCommand,
    },
    /// Gauge-reduced basis of the integer lattice and successive minima.
    Reduce {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Nonzero integer point in a symmetric body of area at least 4.
    Minkowski {
        #[command(flatten)]
        io: IoArgs,
    },
    /// The n-dimensional extremal integer simplices and their checks.
    Simplex {
        #[command(subcommand)]
        which: SimplexCommand,
    },
    /// Deterministic seeded body generation; always emits a body file.
    Random {
        #[command(flatten)]
        io: IoArgs,
        /// Generator seed; equal seeds give byte-identical bodies.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Constraint the generated body satisfies.
        #[arg(long, value_enum, default_value_t = Constraint::None)]
        constraint: Constraint,
    },
    /// SVG picture of a body, an integer-line family, or a descent trace.
    Render {
        #[command(flatten)]
        io: IoArgs,
        /// Draw the integer lines m·x + n·y = 1 with |m|, |n| bounded by M.
        #[arg(long, value_name = "M")]
        max_coeff: Option<i64>,
        /// Overlay the body's descent trace, one frame per step.
        #[arg(long)]
        trace: bool,
    },
    /// Invariant battery over a seeded random corpus.
    Battery {
        #[command(flatten)]
        io: IoArgs,
        /// How many bodies to generate and check.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Base seed; body i uses seed + i and cycles the constraints.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum TorusCommand {
    /// Shortest noncontractible geodesic length.
    Systole {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Exact q with Holmes–Thompson area q/π.
    HtArea {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Exact q' with Busemann–Hausdorff area q'·π (reversible only).
    BhArea {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Full systolic report with both sharp-inequality verdicts.
    Check {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Whether the geodesic flow is totally periodic.
    Zoll {
        #[command(flatten)]
        io: IoArgs,
    },
}

#[derive(Subcommand)]
enum SimplexCommand {
    /// Emit the dimension-n extremal integer simplex as a body file.
    Basic {
        /// Dimension (at least 1).
        dim: usize,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Polar dual simplex, as a body file.
    Dual {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Decide whether the simplex meets every integer hyperplane.
    Verify {
        #[command(flatten)]
        io: IoArgs,
    },
}

/// A command that could not deliver its verdict (code 2), or delivered a
/// failed mathematical check (code 1).
struct Failure {
    code: u8,
    message: String,
}

impl From<geomnum::Error> for Failure {
    fn from(e: geomnum::Error) -> Failure {
        let code = match e {
            geomnum::Error::CertificateInvalid(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("geomnum: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(io: &IoArgs) -> Result<String, Failure> {
    match &io.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| usage(format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn emit(io: &IoArgs, content: &str) -> Result<(), Failure> {
    match &io.output {
        Some(path) => fs::write(path, content)
            .map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit_value(io: &IoArgs, value: &Value) -> Result<(), Failure> {
    let rendered = serde_json::to_string_pretty(value).expect("reports serialize");
    emit(io, &format!("{rendered}\n"))
}

fn emit_body_file(io: &IoArgs, file: &BodyFile) -> Result<(), Failure> {
    emit(io, &format!("{}\n", serialize_body(file)))
}

fn input_file(io: &IoArgs) -> Result<BodyFile, Failure> {
    Ok(parse_body(&read_input(io)?)?)
}

fn input_polygon(io: &IoArgs) -> Result<(ConvexPolygon, Option<Lattice2>), Failure> {
    let file = input_file(io)?;
    match file.body {
        BodyKind::Polygon(p) => Ok((p, file.lattice)),
        BodyKind::Simplex(_) => {
            Err(usage("this command needs a planar body (dim 2)"))
        }
    }
}

fn input_simplex(io: &IoArgs) -> Result<SimplexN, Failure> {
    let file = input_file(io)?;
    match file.body {
        BodyKind::Simplex(s) => Ok(s),
        // A dim-2 file parses as a polygon; a triangle is still a simplex.
        BodyKind::Polygon(p) => {
            if p.vertex_count() == 3 {
                let rows = p
                    .vertices()
                    .iter()
                    .map(|v| vec![v.x.clone(), v.y.clone()])
                    .collect();
                Ok(SimplexN::new(rows)?)
            } else {
                Err(usage("a planar simplex needs exactly 3 vertices"))
            }
        }
    }
}

fn basis_row(p: &Point2) -> Value {
    Value::from(vec![scalar::to_string(&p.x), scalar::to_string(&p.y)])
}

fn torus_metric(io: &IoArgs) -> Result<FlatTorusMetric, Failure> {
    let (ball, lattice) = input_polygon(io)?;
    Ok(match lattice {
        Some(l) => FlatTorusMetric::new(ball, l)?,
        None => FlatTorusMetric::standard(ball)?,
    })
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Dual { io } => {
            let (p, _) = input_polygon(&io)?;
            let dual = p.polar_dual()?;
            match io.format {
                Format::Text => emit(&io, &text::dual_report(&dual))?,
                Format::Structured => emit_body_file(&io, &BodyFile::polygon(dual))?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckUnavoidable { io } => {
            let (p, _) = input_polygon(&io)?;
            let cert = is_unavoidable(&p)?;
            match io.format {
                Format::Text => emit(&io, &text::avoidance(&cert))?,
                Format::Structured => emit_value(&io, &avoidance_certificate_value(&cert))?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Descend { io, strategy, step_budget } => {
            let (p, _) = input_polygon(&io)?;
            match strategy {
                Strategy::Deterministic => {
                    let cert = descend(&p, step_budget)?;
                    match io.format {
                        Format::Text => emit(&io, &text::descent(&cert))?,
                        Format::Structured => {
                            emit_value(&io, &descent_certificate_value(&cert))?
                        }
                    }
                }
                Strategy::AllPaths => {
                    let certs = descend_all_paths(&p, step_budget)?;
                    match io.format {
                        Format::Text => emit(&io, &text::all_paths(&certs))?,
                        Format::Structured => {
                            let values: Vec<Value> =
                                certs.iter().map(descent_certificate_value).collect();
                            emit_value(&io, &Value::from(values))?
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { io } => {
            let (p, _) = input_polygon(&io)?;
            let report = inequality_battery(&p);
            let failed = report
                .entries
                .iter()
                .any(|e| e.status == CheckStatus::Fail);
            match io.format {
                Format::Text => emit(&io, &text::invariants(&report))?,
                Format::Structured => emit_value(&io, &invariant_report_value(&report))?,
            }
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::CriticalLattice { io, tol } => {
            let (p, _) = input_polygon(&io)?;
            let tol = scalar::parse(&tol)?;
            let (lattice, delta) = critical_lattice_symmetric(&p, &tol)?;
            let (z, gauge) = shortest_vector(&p, &lattice)?;
            match io.format {
                Format::Text => emit(&io, &text::critical(&delta, &lattice, z, &gauge))?,
                Format::Structured => {
                    let (b1, b2) = lattice.basis();
                    let mut m = Map::new();
                    m.insert(
                        "basis".into(),
                        Value::from(vec![basis_row(b1), basis_row(b2)]),
                    );
                    m.insert("critical_determinant".into(), scalar_value(&delta));
                    m.insert(
                        "shortest_coefficients".into(),
                        Value::from(vec![Value::from(z.0), Value::from(z.1)]),
                    );
                    m.insert("shortest_gauge".into(), scalar_value(&gauge));
                    emit_value(&io, &Value::Object(m))?
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Torus { which } => run_torus(which),
        Command::Reduce { io } => {
            let (p, _) = input_polygon(&io)?;
            let rb = reduced_basis(&p)?;
            match io.format {
                Format::Text => emit(&io, &text::reduce(&rb))?,
                Format::Structured => {
                    let mut m = Map::new();
                    let t = &rb.transform;
                    m.insert(
                        "basis".into(),
                        Value::from(vec![
                            Value::from(vec![
                                scalar::to_string(&t.a),
                                scalar::to_string(&t.c),
                            ]),
                            Value::from(vec![
                                scalar::to_string(&t.b),
                                scalar::to_string(&t.d),
                            ]),
                        ]),
                    );
                    m.insert("first_minimum".into(), scalar_value(&rb.a1));
                    m.insert("second_minimum".into(), scalar_value(&rb.a2));
                    emit_value(&io, &Value::Object(m))?
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Minkowski { io } => {
            let (p, _) = input_polygon(&io)?;
            let witness = minkowski_witness(&p)?;
            match io.format {
                Format::Text => {
                    let line = match witness {
                        Some((x, y)) => format!("witness: ({x}, {y})\n"),
                        None => format!(
                            "witness: none (area {} below 4)\n",
                            scalar::to_string(&p.area())
                        ),
                    };
                    emit(&io, &line)?
                }
                Format::Structured => {
                    let mut m = Map::new();
                    m.insert(
                        "witness".into(),
                        match witness {
                            Some((x, y)) => Value::from(vec![Value::from(x), Value::from(y)]),
                            None => Value::Null,
                        },
                    );
                    m.insert("area".into(), scalar_value(&p.area()));
                    emit_value(&io, &Value::Object(m))?
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Simplex { which } => run_simplex(which),
        Command::Random { io, seed, constraint } => {
            let spec = RandomBodySpec::new(seed).with_constraint(constraint.into());
            let body = random_body(&spec)?;
            emit_body_file(&io, &BodyFile::polygon(body))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { io, max_coeff, trace } => {
            let (p, _) = input_polygon(&io)?;
            // A trace scene shows where the descent ends: the terminal body
            // solid, the earlier polygons as fading frames behind it.
            let mut scene = if trace {
                let cert = descend(&p, None)?;
                SvgScene::for_body(cert.terminal.clone()).with_trace(cert)
            } else {
                SvgScene::for_body(p)
            };
            if let Some(m) = max_coeff {
                if m < 0 {
                    return Err(usage("--max-coeff must be nonnegative"));
                }
                scene = scene.with_lines(m);
            }
            emit(&io, &render_svg(&scene))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Battery { io, count, seed } => {
            let constraints = [
                BodyConstraint::None,
                BodyConstraint::OriginInterior,
                BodyConstraint::Symmetric,
                BodyConstraint::Unavoidable,
            ];
            let mut lines = String::new();
            let mut reports = Vec::new();
            let mut failures = 0usize;
            for i in 0..count {
                let constraint = constraints[i % constraints.len()];
                let spec = RandomBodySpec::new(seed.wrapping_add(i as u64))
                    .with_constraint(constraint);
                let body = random_body(&spec)?;
                let report = inequality_battery(&body);
                let mut pass = 0usize;
                let mut fail = 0usize;
                let mut na = 0usize;
                for e in &report.entries {
                    match e.status {
                        CheckStatus::Pass => pass += 1,
                        CheckStatus::Fail => fail += 1,
                        CheckStatus::NotApplicable => na += 1,
                    }
                }
                failures += fail;
                lines.push_str(&format!(
                    "body {i} [{}]: {pass} pass, {fail} fail, {na} not-applicable\n",
                    &body_digest(&body)[..12],
                ));
                if io.format == Format::Structured {
                    reports.push(invariant_report_value(&report));
                }
            }
            match io.format {
                Format::Text => {
                    lines.push_str(&format!("battery: {count} bodies, {failures} failures\n"));
                    emit(&io, &lines)?
                }
                Format::Structured => {
                    let mut m = Map::new();
                    m.insert("count".into(), Value::from(count as u64));
                    m.insert("seed".into(), Value::from(seed));
                    m.insert("failures".into(), Value::from(failures as u64));
                    m.insert("reports".into(), Value::from(reports));
                    emit_value(&io, &Value::Object(m))?
                }
            }
            Ok(if failures > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
    }
}

fn run_torus(which: TorusCommand) -> Result<ExitCode, Failure> {
    match which {
        TorusCommand::Systole { io } => {
            let m = torus_metric(&io)?;
            let value = systole(&m)?;
            match io.format {
                Format::Text => emit(&io, &format!("systole: {}\n", scalar::to_string(&value)))?,
                Format::Structured => {
                    let mut obj = Map::new();
                    obj.insert("systole".into(), scalar_value(&value));
                    emit_value(&io, &Value::Object(obj))?
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        TorusCommand::HtArea { io } => {
            let m = torus_metric(&io)?;
            let q = ht_area(&m);
            match io.format {
                Format::Text => {
                    emit(&io, &format!("ht area times pi: {}\n", scalar::to_string(&q)))?
                }
                Format::Structured => {
                    let mut obj = Map::new();
                    obj.insert("ht_area_times_pi".into(), scalar_value(&q));
                    emit_value(&io, &Value::Object(obj))?
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        TorusCommand::BhArea { io } => {
            let m = torus_metric(&io)?;
            let q = bh_area(&m)?;
            match io.format {
                Format::Text => {
                    emit(&io, &format!("bh area over pi: {}\n", scalar::to_string(&q)))?
                }
                Format::Structured => {
                    let mut obj = Map::new();
                    obj.insert("bh_area_over_pi".into(), scalar_value(&q));
                    emit_value(&io, &Value::Object(obj))?
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        TorusCommand::Check { io } => {
            let m = torus_metric(&io)?;
            let report = systolic_check(&m)?;
            let violated = !report.general_holds()
                || report.reversible_holds() == Some(false);
            match io.format {
                Format::Text => emit(&io, &text::torus_check(&report))?,
                Format::Structured => emit_value(&io, &systolic_report_value(&report))?,
            }
            Ok(if violated { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        TorusCommand::Zoll { io } => {
            let m = torus_metric(&io)?;
            let zoll = zoll_check(&m)?;
            match io.format {
                Format::Text => {
                    emit(&io, &format!("zoll: {}\n", if zoll { "yes" } else { "no" }))?
                }
                Format::Structured => {
                    let mut obj = Map::new();
                    obj.insert("zoll".into(), Value::from(zoll));
                    emit_value(&io, &Value::Object(obj))?
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_simplex(which: SimplexCommand) -> Result<ExitCode, Failure> {
    match which {
        SimplexCommand::Basic { dim, io } => {
            if dim == 0 {
                return Err(usage("dimension must be at least 1"));
            }
            emit_body_file(&io, &BodyFile::simplex(basic_simplex(dim)))?;
            Ok(ExitCode::SUCCESS)
        }
        SimplexCommand::Dual { io } => {
            let s = input_simplex(&io)?;
            emit_body_file(&io, &BodyFile::simplex(dual_simplex(&s)?))?;
            Ok(ExitCode::SUCCESS)
        }
        SimplexCommand::Verify { io } => {
            let s = input_simplex(&io)?;
            let verdict = unavoidable_simplex(&s)?;
            match io.format {
                Format::Text => emit(
                    &io,
                    &format!("unavoidable: {}\n", if verdict { "yes" } else { "no" }),
                )?,
                Format::Structured => {
                    let mut obj = Map::new();
                    obj.insert("unavoidable".into(), Value::from(verdict));
                    emit_value(&io, &Value::Object(obj))?
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
