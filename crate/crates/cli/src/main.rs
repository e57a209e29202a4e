mod catalog;
mod input;

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ybk::classify::{census, sampled_census, Relation, SolutionCensus};
use ybk::constructions::{
    cartesian_product, derived_solution, disjoint_union_solution, glued_identity_extension,
    left_derived_solution, level_solution, trivial_extension,
};
use ybk::homology::{beta_orbits, cohomology, homology, verify_complex, Coefficients};
use ybk::io::SolutionDocument;
use ybk::kgraph::{
    complete_diamond, normalize, periodicity, unique_pullback, unique_pushout, Direction,
    DEFAULT_PERIODICITY_BOUND,
};
use ybk::semigroup::{
    check_cancellative, graded_elements, growth, presentations, semigroup_extension_check,
};
use ybk::solution::DegeneracyWitness;
use ybk::{Builtin, Error, Solution};

use input::{format_word, load_family, load_solution, parse_word, LoadError};

/// Set-theoretic Yang-Baxter solutions and single-vertex k-graphs.
///
/// Inputs are JSON solution or theta documents, `-` for stdin, `NAME:N` for a
/// builtin (identity, flip, double_shift, shift, dihedral) or `catalog:NAME`.
#[derive(Parser)]
#[command(name = "ybk", version)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the braid relation.
    Verify { input: String },
    /// Report all solution properties with witnesses.
    Props { input: String },
    /// Check the left-action, right-action and compatibility equations.
    Equations { input: String },
    /// The level solution R^{n,n}.
    Level {
        input: String,
        #[arg(long)]
        n: usize,
    },
    /// The derived solution (right by default).
    Derive {
        input: String,
        #[arg(long)]
        left: bool,
    },
    /// Cartesian product of two solutions.
    Product { first: String, second: String },
    /// Trivial extension of one solution by another.
    ExtendTrivial { first: String, second: String },
    /// Identity extension glued by the (1,2) map of a 2-colour theta document.
    ExtendGlued { theta: String },
    /// Disjoint-union solution of a theta family.
    Union { theta: String },
    /// Single-vertex k-graph operations.
    Kgraph {
        #[command(subcommand)]
        action: KgraphCommand,
    },
    /// Least n with R^{n,n} = id, up to a bound.
    Periodic {
        input: String,
        #[arg(long, default_value_t = DEFAULT_PERIODICITY_BOUND)]
        bound: usize,
    },
    /// Growth, cancellativity, presentations and extension of the YB-semigroup.
    Semigroup(SemigroupArgs),
    /// Enumerate and classify all solutions on [N].
    #[command(alias = "classify")]
    Enumerate {
        #[arg(long)]
        size: usize,
        /// conjugacy or yb-iso.
        #[arg(long, default_value = "yb-iso")]
        relation: String,
        /// Classify the solutions among this many random bijections instead.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// YB homology and cohomology in one degree.
    Homology {
        input: String,
        #[arg(long)]
        degree: usize,
        /// Cohomology coefficients: z or z/M.
        #[arg(long, default_value = "z")]
        coeff: String,
        /// Also check that consecutive boundaries compose to zero.
        #[arg(long)]
        verify_complex: bool,
    },
    /// Emit the document of a builtin solution.
    Builtin {
        name: String,
        #[arg(long)]
        size: usize,
        /// One-line permutation f for the permutation solution (f(y), g(x)).
        #[arg(long, value_delimiter = ',')]
        f: Option<Vec<u32>>,
        #[arg(long, value_delimiter = ',')]
        g: Option<Vec<u32>>,
    },
    /// List the bundled catalog or print one entry.
    Catalog { name: Option<String> },
}

#[derive(Args)]
struct SemigroupArgs {
    input: String,
    /// Defaults to 6 for N <= 2 and 5 otherwise.
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long)]
    cancel: bool,
    #[arg(long)]
    presentation: bool,
    #[arg(long)]
    extension_check: bool,
}

#[derive(Subcommand)]
enum KgraphCommand {
    /// Check the generalized QYBE on every colour triple.
    Verify {
        input: String,
        /// Colours of the constant family when the input is a solution.
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Normal form of a word `c:x c:x ...`.
    Normalize {
        input: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Complete a factorization diamond.
    Diamond {
        input: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        pushout: bool,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
}

struct Report {
    text: String,
    json: Value,
    code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Report {
        Report {
            text,
            json,
            code: 0,
        }
    }

    fn document(doc: String) -> Report {
        let json = serde_json::from_str(&doc).expect("documents are JSON");
        Report::ok(doc, json)
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Io(m) => Failure::Usage(m),
            LoadError::Lib(e) => Failure::Lib(e),
        }
    }
}

/// Property failures exit with 1, malformed input and limits with 2.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::NotAYbeSolution
        | Error::Degenerate
        | Error::NotDerivedType
        | Error::PropertyMissing(_)
        | Error::InvalidFamily
        | Error::NotConstantFamily
        | Error::NotAComplex(_)
        | Error::PreconditionFailed(_) => 1,
        _ => 2,
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit(r: &Solution, name: Option<String>) -> Report {
    let mut doc = SolutionDocument::from_solution(r);
    doc.name = name;
    Report::document(doc.emit())
}

fn cmd_verify(input: &str) -> Result<Report, Failure> {
    let (r, _) = load_solution(input)?;
    let w = r.ybe_witness();
    let text = match w {
        None => "YBE: yes".to_string(),
        Some([x, y, z]) => format!("YBE: no (braid relation fails at ({x}, {y}, {z}))"),
    };
    Ok(Report {
        text,
        json: json!({ "ybe": w.is_none(), "witness": w }),
        code: u8::from(w.is_some()),
    })
}

const FLAG_KEYS: [&str; 7] = [
    "is_bijection",
    "is_ybe",
    "involutive",
    "square_free",
    "non_degenerate",
    "symmetric",
    "derived_type",
];

fn cmd_props(input: &str) -> Result<Report, Failure> {
    let (r, meta) = load_solution(input)?;
    let p = r.properties();
    let w = &p.witnesses;
    let mut lines = vec![format!("size: {}", r.size()), "bijection: yes".to_string()];
    lines.push(match w.ybe {
        None => "YBE: yes".into(),
        Some([x, y, z]) => format!("YBE: no (braid relation fails at ({x}, {y}, {z}))"),
    });
    lines.push(match w.involutive {
        None => "involutive: yes".into(),
        Some((x, y)) => format!("involutive: no (R^2 moves ({x}, {y}))"),
    });
    lines.push(match w.square_free {
        None => "square-free: yes".into(),
        Some(x) => format!("square-free: no (R moves ({x}, {x}))"),
    });
    lines.push(match &w.non_degenerate {
        None => "non-degenerate: yes".into(),
        Some(DegeneracyWitness::Alpha { x, y1, y2 }) => {
            format!("non-degenerate: no (alpha_{x} sends {y1} and {y2} to the same point)")
        }
        Some(DegeneracyWitness::Beta { y, x1, x2 }) => {
            format!("non-degenerate: no (beta_{y} sends {x1} and {x2} to the same point)")
        }
    });
    lines.push(format!("symmetric: {}", yes(p.symmetric)));
    lines.push(format!("derived type: {}", yes(p.derived_type)));
    let mut value = serde_json::to_value(&p).expect("reports serialize");
    let mut code = 0;
    let expected = meta.as_ref().and_then(|m| m.get("expected"));
    if let Some(expected) = expected {
        let mismatches: Vec<&str> = FLAG_KEYS
            .iter()
            .zip(p.flags())
            .filter(|(key, flag)| {
                expected
                    .get(**key)
                    .is_some_and(|v| v.as_bool() != Some(*flag))
            })
            .map(|(key, _)| *key)
            .collect();
        if mismatches.is_empty() {
            lines.push("expected profile: matches".into());
        } else {
            lines.push(format!(
                "expected profile: mismatch on {}",
                mismatches.join(", ")
            ));
            code = 1;
        }
        value["expected_mismatches"] = json!(mismatches);
    }
    Ok(Report {
        text: lines.join("\n"),
        json: value,
        code,
    })
}

fn cmd_equations(input: &str) -> Result<Report, Failure> {
    let (r, _) = load_solution(input)?;
    let s = r.check_structure_equations();
    let line = |name: &str, w: Option<[u32; 3]>| match w {
        None => format!("{name}: holds"),
        Some([x, y, z]) => format!("{name}: fails at ({x}, {y}, {z})"),
    };
    let text = [
        line("left action", s.left_action),
        line("right action", s.right_action),
        line("compatibility", s.compatibility),
    ]
    .join("\n");
    Ok(Report {
        text,
        json: serde_json::to_value(&s).expect("reports serialize"),
        code: u8::from(!s.all_hold()),
    })
}

fn cmd_kgraph(action: &KgraphCommand) -> Result<Report, Failure> {
    match action {
        KgraphCommand::Verify { input, k } => {
            let fam = load_family(input, *k)?;
            let v = fam.validate();
            let text = match v {
                Ok(()) => format!("k-graph: yes (k = {}, sizes {:?})", fam.k(), fam.sizes()),
                Err(w) => format!(
                    "k-graph: no (colours {:?} fail at {:?})",
                    w.colours, w.point
                ),
            };
            Ok(Report {
                text,
                json: json!({ "kgraph": v.is_ok(), "k": fam.k(), "sizes": fam.sizes(), "witness": v.err() }),
                code: u8::from(v.is_err()),
            })
        }
        KgraphCommand::Normalize { input, word, k } => {
            let fam = Arc::new(load_family(input, *k)?);
            let w = normalize(&fam, &parse_word(word)?)?;
            Ok(Report::ok(
                format_word(w.letters()),
                json!({ "normal_form": w.letters(), "degree": w.degree() }),
            ))
        }
        KgraphCommand::Diamond {
            input,
            mu,
            nu,
            pushout,
            k,
        } => {
            let fam = Arc::new(load_family(input, *k)?);
            let mu = normalize(&fam, &parse_word(mu)?)?;
            let nu = normalize(&fam, &parse_word(nu)?)?;
            let dir = if *pushout {
                Direction::Pushout
            } else {
                Direction::Pullback
            };
            let pb = unique_pullback(&fam);
            let po = unique_pushout(&fam);
            let (mt, nt) = complete_diamond(&mu, &nu, dir)?;
            let text = format!(
                "mu~: {}\nnu~: {}\nunique pullback: {}\nunique pushout: {}",
                format_word(mt.letters()),
                format_word(nt.letters()),
                yes(pb.is_ok()),
                yes(po.is_ok())
            );
            Ok(Report::ok(
                text,
                json!({
                    "mu_tilde": mt.letters(),
                    "nu_tilde": nt.letters(),
                    "unique_pullback": pb.is_ok(),
                    "unique_pushout": po.is_ok(),
                }),
            ))
        }
    }
}

fn default_max_len(size: usize) -> usize {
    if size <= 2 {
        6
    } else {
        5
    }
}

fn cmd_semigroup(args: &SemigroupArgs) -> Result<Report, Failure> {
    let (r, _) = load_solution(&args.input)?;
    let max_len = args.max_len.unwrap_or_else(|| default_max_len(r.size()));
    let g = growth(&r, max_len)?;
    let mut lines = vec![format!(
        "growth: {}",
        g.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )];
    let mut value = json!({ "growth": g, "max_len": max_len });
    let mut code = 0;
    if args.cancel {
        match check_cancellative(&r, max_len)? {
            None => lines.push(format!("cancellative up to length {max_len}: yes")),
            Some(w) => {
                let side = match w.side {
                    ybk::semigroup::Side::Left => "left",
                    ybk::semigroup::Side::Right => "right",
                };
                lines.push(format!(
                    "cancellative up to length {max_len}: no ({side}: a = {:?}, b = {:?}, c = {:?})",
                    w.a, w.b, w.c
                ));
                value["cancel_witness"] = serde_json::to_value(&w).expect("witness serializes");
                code = 1;
            }
        }
        value["cancellative"] = json!(code == 0);
    }
    if args.presentation {
        let p = presentations(&r);
        lines.push(p.semigroup.clone());
        lines.push(p.group.clone());
        if max_len >= 2 {
            lines.push(format!(
                "length-2 classes: {}",
                graded_elements(&r, 2)?.class_count()
            ));
        }
        value["presentation"] = serde_json::to_value(&p).expect("presentations serialize");
    }
    if args.extension_check {
        let w = semigroup_extension_check(&r, max_len)?;
        lines.push(match &w {
            None => format!("extension to G_R^+ up to length {max_len}: yes"),
            Some(w) => format!("extension to G_R^+ up to length {max_len}: no ({w:?})"),
        });
        value["extension"] = json!(w.is_none());
        if w.is_some() {
            code = 1;
        }
    }
    Ok(Report {
        text: lines.join("\n"),
        json: value,
        code,
    })
}

fn table_json(r: &Solution) -> Value {
    json!(r.table().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>())
}

fn census_report(c: &SolutionCensus) -> Report {
    let mut lines = Vec::new();
    let source = if c.exhaustive {
        format!(
            "{} YBE solutions among {} bijections (exhaustive)",
            c.solutions.len(),
            c.total_bijections.unwrap_or_default()
        )
    } else {
        format!(
            "{} distinct YBE solutions among {} random bijections (sampled, not exhaustive)",
            c.solutions.len(),
            c.total_bijections.unwrap_or_default()
        )
    };
    lines.push(format!("size {}: {source}", c.size));
    lines.push(format!("{} classes under {}", c.classes.len(), c.relation));
    let mut classes = Vec::new();
    for (i, class) in c.classes.iter().enumerate() {
        let rep = &c.solutions[class.representative()];
        let flags: Vec<&str> = FLAG_KEYS
            .iter()
            .zip(class.properties.flags())
            .filter(|(_, f)| *f)
            .map(|(k, _)| *k)
            .collect();
        lines.push(format!(
            "class {}: {} member(s), representative {:?}, properties: {}",
            i + 1,
            class.members.len(),
            rep.table(),
            flags.join(", ")
        ));
        let mut props = serde_json::to_value(&class.properties).expect("reports serialize");
        if let Some(obj) = props.as_object_mut() {
            obj.remove("witnesses");
        }
        classes.push(json!({
            "representative": table_json(rep),
            "members": class.members.iter().map(|&m| table_json(&c.solutions[m])).collect::<Vec<_>>(),
            "properties": props,
            "uniform_flags": class.uniform_flags,
        }));
    }
    Report::ok(
        lines.join("\n"),
        json!({
            "size": c.size,
            "exhaustive": c.exhaustive,
            "total_bijections": c.total_bijections.map(|t| t.to_string()),
            "solution_count": c.solutions.len(),
            "relation": c.relation.name(),
            "class_count": c.classes.len(),
            "classes": classes,
        }),
    )
}

fn cmd_homology(input: &str, degree: usize, coeff: &str, check: bool) -> Result<Report, Failure> {
    let (r, _) = load_solution(input)?;
    let coefficients = Coefficients::parse(coeff)?;
    let mut lines = Vec::new();
    let mut value = json!({ "degree": degree });
    if check {
        let ok = verify_complex(&r, degree + 1)?;
        lines.push(format!(
            "boundaries compose to zero through degree {}: {}",
            degree + 1,
            yes(ok)
        ));
        value["complex"] = json!(ok);
        if !ok {
            return Ok(Report {
                text: lines.join("\n"),
                json: value,
                code: 1,
            });
        }
    }
    let h = homology(&r, degree)?;
    let c = cohomology(&r, degree, coefficients)?;
    let coeff_name = match coefficients {
        Coefficients::Integers => "Z".to_string(),
        Coefficients::Modular(m) => format!("Z/{m}"),
    };
    lines.push(format!("H_{degree} = {h}"));
    lines.push(format!("H^{degree}({coeff_name}) = {c}"));
    let orbits = beta_orbits(&r);
    lines.push(format!("beta orbits: {:?}", orbits.blocks));
    value["homology"] = serde_json::to_value(&h).expect("groups serialize");
    value["cohomology"] = serde_json::to_value(&c).expect("groups serialize");
    value["coefficients"] = json!(coeff_name);
    value["beta_orbits"] = json!(orbits.blocks);
    Ok(Report::ok(lines.join("\n"), value))
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Verify { input } => cmd_verify(input),
        Command::Props { input } => cmd_props(input),
        Command::Equations { input } => cmd_equations(input),
        Command::Level { input, n } => {
            let (r, _) = load_solution(input)?;
            Ok(emit(&level_solution(&r, *n)?, None))
        }
        Command::Derive { input, left } => {
            let (r, _) = load_solution(input)?;
            let d = if *left {
                left_derived_solution(&r)?
            } else {
                derived_solution(&r)?
            };
            Ok(emit(&d, None))
        }
        Command::Product { first, second } => {
            let (a, _) = load_solution(first)?;
            let (b, _) = load_solution(second)?;
            Ok(emit(&cartesian_product(&a, &b)?, None))
        }
        Command::ExtendTrivial { first, second } => {
            let (a, _) = load_solution(first)?;
            let (b, _) = load_solution(second)?;
            Ok(emit(&trivial_extension(&a, &b)?, None))
        }
        Command::ExtendGlued { theta } => {
            let fam = load_family(theta, 2)?;
            if fam.k() != 2 {
                return Err(Failure::Usage(format!(
                    "extend-glued needs a 2-colour family, got k = {}",
                    fam.k()
                )));
            }
            Ok(emit(&glued_identity_extension(fam.map(1, 2))?, None))
        }
        Command::Union { theta } => {
            let fam = load_family(theta, 3)?;
            Ok(emit(&disjoint_union_solution(&fam), None))
        }
        Command::Kgraph { action } => cmd_kgraph(action),
        Command::Periodic { input, bound } => {
            let (r, _) = load_solution(input)?;
            let p = periodicity(&r, *bound)?;
            Ok(Report::ok(p.to_string(), json!({ "periodicity": p })))
        }
        Command::Semigroup(args) => cmd_semigroup(args),
        Command::Enumerate {
            size,
            relation,
            sample,
            seed,
        } => {
            let relation = Relation::parse(relation)?;
            let c = match sample {
                Some(s) => sampled_census(*size, *s, *seed, relation)?,
                None => census(*size, relation)?,
            };
            Ok(census_report(&c))
        }
        Command::Homology {
            input,
            degree,
            coeff,
            verify_complex,
        } => cmd_homology(input, *degree, coeff, *verify_complex),
        Command::Builtin { name, size, f, g } => {
            let b = match (f, g) {
                (Some(f), Some(g)) => Builtin::Permutation {
                    f: f.clone(),
                    g: g.clone(),
                },
                (None, None) => Builtin::parse(name)?,
                _ => return Err(Failure::Usage("--f and --g go together".into())),
            };
            Ok(emit(&b.build(*size)?, Some(format!("{}{size}", b.name()))))
        }
        Command::Catalog { name } => match name {
            None => {
                let names = catalog::names();
                Ok(Report::ok(names.join("\n"), json!(names)))
            }
            Some(n) => {
                let text =
                    catalog::get(n).ok_or_else(|| Failure::Lib(Error::UnknownName(n.clone())))?;
                Ok(Report::document(ybk::io::canonicalize(text)?))
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("YBK_LIMIT") {
        match v.parse::<u64>() {
            Ok(limit) if limit > 0 => ybk::words::set_word_limit(limit),
            _ => {
                eprintln!("error: YBK_LIMIT must be a positive integer, got `{v}`");
                return ExitCode::from(2);
            }
        }
    }
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string(&report.json).expect("values serialize")
                );
            } else {
                println!("{}", report.text);
            }
            ExitCode::from(report.code)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
