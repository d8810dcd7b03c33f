//! `isq`: command-line front end.
//!
//! Reports are JSON on stdout (or `--out`); `--pretty` prints an indented
//! text rendering instead. Exit status: 0 when the computation succeeds and
//! every checked property holds, 1 when a property fails, 2 on bad input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use isq::builders::{
    brandt_semigroup_over, cyclic_group, direct_product_with_group, example_s6, example_t,
    symmetric_inverse_monoid,
};
use isq::congruence::{all_congruences, is_simeq_congruence};
use isq::factorize::{admissible_normals, factorize_hom};
use isq::green::green_relations;
use isq::json::{parse_hom, parse_semigroup, parse_subset, semigroup_to_json, SemigroupJson};
use isq::munn::{self, MunnTree, Presentation};
use isq::normal::{
    enumerate_normal, has_kernel_property, is_clifford, is_closed, is_full, is_normal,
};
use isq::poly;
use isq::quotient::build_quotient;
use isq::semigroup::check_inverse_semigroup;
use isq::suite::{paper_suite, SuiteOptions};
use isq::{InverseSemigroup, IsqError, Partition, RawTable};

#[derive(Parser)]
#[command(
    name = "isq",
    version,
    about = "Normal inverse subsemigroups and quotient ordered groupoids"
)]
struct Cli {
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Human-readable output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    /// Word length bound for symbolic searches.
    #[arg(long, global = true, default_value_t = 4)]
    maxlen: usize,
    /// Size cap for exhaustive algorithms (overrides ISQ_MAX_ELEMENTS).
    #[arg(long, global = true)]
    max_size: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a fixture semigroup.
    #[command(subcommand)]
    Builder(Builder),
    /// Validate a semigroup file.
    Verify { file: PathBuf },
    /// Green's relations.
    Green { file: PathBuf },
    /// Test a subset for normality, or list every normal inverse subsemigroup.
    Normal {
        file: PathBuf,
        #[arg(long)]
        set: Option<PathBuf>,
    },
    /// The quotient ordered groupoid S⫽N.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        by: PathBuf,
    },
    /// All congruences, optionally only those with a given kernel.
    Congruences {
        file: PathBuf,
        #[arg(long)]
        kernel: Option<PathBuf>,
    },
    /// Factor a homomorphism through S⫽K.
    Factorize {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        hom: PathBuf,
    },
    /// Checks on the polycyclic and gauge monoids.
    Poly {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PolyCheck::Gauge)]
        check: PolyCheck,
    },
    /// Free inverse monoid computations.
    #[command(subcommand)]
    Munn(Munn),
    /// Run every worked example and property suite.
    Suite {
        /// Accepted for compatibility; the paper suite is the only suite.
        #[arg(long)]
        paper: bool,
    },
}

#[derive(Subcommand)]
enum Builder {
    /// The symmetric inverse monoid of degree n.
    In {
        #[arg(long)]
        n: usize,
    },
    /// The six-element example.
    ExampleA,
    /// The example T generated by id13, id24, f, g.
    ExampleB,
    /// Direct product with a group.
    Product {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        group: PathBuf,
    },
    /// Brandt semigroup on k indices, optionally over a group.
    Brandt {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// Cyclic group of order n.
    Cyclic {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum Munn {
    /// Evaluate a word under an assignment of generators.
    Eval {
        #[arg(long)]
        word: String,
        #[arg(long)]
        assign: String,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Bounded search for membership in the normal submonoid generated by Q(R).
    Member {
        #[arg(long)]
        pres: String,
        #[arg(long)]
        word: String,
    },
    /// Munn tree of a word.
    Tree {
        #[arg(long)]
        word: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyCheck {
    Gauge,
    Assoc,
    Classes,
}

/// A finished report and whether everything it checked held.
struct Outcome {
    report: Value,
    holds: bool,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Self {
            report,
            holds: true,
        }
    }
}

fn read(path: &Path) -> Result<String, IsqError> {
    std::fs::read_to_string(path).map_err(|e| IsqError::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<InverseSemigroup, IsqError> {
    parse_semigroup(&read(path)?)
}

fn semigroup_value(s: &InverseSemigroup) -> Value {
    serde_json::from_str(&semigroup_to_json(s)).expect("valid json")
}

fn labels(s: &InverseSemigroup, p: &Partition) -> Vec<Vec<String>> {
    p.classes()
        .iter()
        .map(|c| c.iter().map(|&x| s.label(x)).collect())
        .collect()
}

fn build(b: Builder) -> Result<Outcome, IsqError> {
    let s = match b {
        Builder::In { n } => symmetric_inverse_monoid(n)?,
        Builder::ExampleA => example_s6(),
        Builder::ExampleB => example_t(),
        Builder::Product { left, group } => {
            direct_product_with_group(&load(&left)?, &load(&group)?)?
        }
        Builder::Brandt { k, group } => {
            let g = match group {
                Some(path) => load(&path)?,
                None => cyclic_group(1)?,
            };
            brandt_semigroup_over(k, &g)?
        }
        Builder::Cyclic { n } => cyclic_group(n)?,
    };
    Ok(Outcome::ok(semigroup_value(&s)))
}

fn verify(path: &Path) -> Result<Outcome, IsqError> {
    let parsed: SemigroupJson = serde_json::from_str(&read(path)?)?;
    let raw = match &parsed {
        SemigroupJson::Table { mul, inv, .. } => Some(RawTable {
            mul: mul.clone(),
            inv: inv.clone(),
        }),
        SemigroupJson::Pbij { .. } => None,
    };
    if let Some(raw) = raw {
        let report = check_inverse_semigroup(&raw);
        if !report.is_empty() {
            let violations: Vec<String> = report
                .violations
                .iter()
                .take(50)
                .map(ToString::to_string)
                .collect();
            return Ok(Outcome {
                report: json!({ "valid": false, "violation_count": report.violations.len(), "violations": violations }),
                holds: false,
            });
        }
    }
    let s = match parsed.into_semigroup() {
        Ok(s) => s,
        Err(e @ (IsqError::NotClosed(_) | IsqError::NotInverseSemigroup(_))) => {
            return Ok(Outcome {
                report: json!({ "valid": false, "violations": [e.to_string()] }),
                holds: false,
            })
        }
        Err(e) => return Err(e),
    };
    let g = green_relations(&s);
    let order_ok = s.elements().all(|a| {
        s.leq(a, a)
            && s.elements()
                .all(|b| !(s.leq(a, b) && s.leq(b, a)) || a == b)
    });
    Ok(Outcome {
        report: json!({
            "valid": true,
            "size": s.len(),
            "backend": s.backend_name(),
            "idempotents": s.idempotents(),
            "zero": s.zero(),
            "identity": s.identity(),
            "natural_order_is_partial_order": order_ok,
            "d_equals_j": g.d == g.j,
        }),
        holds: order_ok && g.d == g.j,
    })
}

fn green(path: &Path) -> Result<Outcome, IsqError> {
    let s = load(path)?;
    let g = green_relations(&s);
    Ok(Outcome::ok(json!({
        "r": g.r.classes(),
        "l": g.l.classes(),
        "d": g.d.classes(),
        "j": g.j.classes(),
        "j_labels": labels(&s, &g.j),
        "j_order": g.j_leq,
        "j_poset_is_semilattice": g.j_poset_is_meet_semilattice(),
    })))
}

fn normal(path: &Path, set: Option<PathBuf>) -> Result<Outcome, IsqError> {
    let s = load(path)?;
    match set {
        Some(set) => {
            let n = parse_subset(&s, &read(&set)?)?;
            let normal = is_normal(&s, &n);
            Ok(Outcome {
                report: json!({
                    "indices": n.to_vec(),
                    "full": is_full(&s, &n),
                    "normal": normal,
                    "kernel_property": has_kernel_property(&s, &n),
                    "clifford": is_clifford(&s, &n),
                    "closed": is_closed(&s, &n),
                }),
                holds: normal,
            })
        }
        None => {
            let lattice = enumerate_normal(&s)?;
            let members: Vec<Value> = lattice
                .members
                .iter()
                .map(|n| json!({ "indices": n.to_vec(), "kernel_property": has_kernel_property(&s, n) }))
                .collect();
            Ok(Outcome::ok(
                json!({ "members": members, "inclusions": lattice.hasse_edges() }),
            ))
        }
    }
}

fn quotient(path: &Path, by: &Path) -> Result<Outcome, IsqError> {
    let s = load(path)?;
    let n = parse_subset(&s, &read(by)?)?;
    let q = build_quotient(&s, &n)?;
    let k = q.num_classes();
    let chain = (0..k).all(|a| (0..k).all(|b| q.class_leq(a, b) || q.class_leq(b, a)));
    let congruence = is_simeq_congruence(&s, &n)?;
    let mut report = serde_json::to_value(q.to_json())?;
    let extra = json!({
        "num_classes": k,
        "class_labels": labels(&s, &q.classes),
        "order_is_chain": chain,
        "is_congruence": congruence,
    });
    if let (Value::Object(r), Value::Object(e)) = (&mut report, extra) {
        r.extend(e);
    }
    Ok(Outcome::ok(report))
}

fn congruences(path: &Path, kernel: Option<PathBuf>) -> Result<Outcome, IsqError> {
    let s = load(path)?;
    let lattice = all_congruences(&s)?;
    let filter = kernel
        .map(|k| read(&k).and_then(|t| parse_subset(&s, &t)))
        .transpose()?;
    let keep: Vec<usize> = (0..lattice.len())
        .filter(|&i| {
            !filter
                .as_ref()
                .is_some_and(|n| lattice.members[i].kernel(&s) != *n)
        })
        .collect();
    let members: Vec<Value> = keep
        .iter()
        .map(|&i| {
            let rho = &lattice.members[i];
            json!({
                "classes": rho.partition().classes(),
                "kernel": rho.kernel(&s).to_vec(),
                "trace": rho.trace(&s).partition.classes(),
            })
        })
        .collect();
    Ok(Outcome::ok(
        json!({ "count": members.len(), "congruences": members }),
    ))
}

fn factorize(source: &Path, target: &Path, hom: &Path) -> Result<Outcome, IsqError> {
    let s = load(source)?;
    let sigma = load(target)?;
    let phi = parse_hom(&s, &sigma, &read(hom)?)?;
    let f = factorize_hom(&s, &sigma, &phi)?;
    let admissible = admissible_normals(&s, &sigma, &phi)?;
    let unique = admissible == [f.kernel.clone()];
    Ok(Outcome {
        report: json!({
            "kernel": f.kernel.to_vec(),
            "classes": f.quotient.classes.classes(),
            "kappa": f.kappa.map(),
            "star_injective": f.kappa.is_star_injective(&f.quotient.groupoid),
            "admissible_normals": admissible.iter().map(|n| n.to_vec()).collect::<Vec<_>>(),
            "unique": unique,
        }),
        holds: unique,
    })
}

fn poly_cmd(n: usize, check: PolyCheck, maxlen: usize) -> Result<Outcome, IsqError> {
    if n == 0 {
        return Err(IsqError::Input("alphabet must be nonempty".into()));
    }
    let report = match check {
        PolyCheck::Gauge => isq::checks::gauge_properties(n, maxlen),
        PolyCheck::Assoc => isq::checks::poly_associativity(n, maxlen.min(3)),
        PolyCheck::Classes => {
            let cmp = poly::compare_gauge_leq(n, maxlen);
            let mut r = isq::checks::CheckReport::new("closed form against witness search");
            r.case(cmp.contradictions == 0, || format!("{cmp:?}"));
            r
        }
    };
    Ok(Outcome {
        holds: report.passed(),
        report: serde_json::to_value(&report)?,
    })
}

fn munn_cmd(m: Munn, maxlen: usize) -> Result<Outcome, IsqError> {
    match m {
        Munn::Eval {
            word,
            assign,
            input,
        } => {
            let s = load(&input)?;
            let w = munn::parse_word(&word)?;
            let x = munn::evaluate(&w, &munn::parse_assignment(&assign)?, &s)?;
            Ok(Outcome::ok(json!({
                "element": x,
                "label": s.label(x),
                "idempotent": s.is_idempotent(x),
                "zero": s.zero() == Some(x),
            })))
        }
        Munn::Member { pres, word } => {
            let p = Presentation::parse(&pres)?;
            let x = MunnTree::parse(&word)?;
            match munn::bounded_n_membership(&p, &x, maxlen) {
                munn::Membership::Yes(cert) => Ok(Outcome::ok(json!({
                    "member": "yes",
                    "certificate": cert.iter().map(|w| munn::format_word(w)).collect::<Vec<_>>(),
                }))),
                munn::Membership::Inconclusive => Ok(Outcome {
                    report: json!({ "member": "inconclusive", "maxlen": maxlen }),
                    holds: false,
                }),
            }
        }
        Munn::Tree { word } => {
            let x = MunnTree::parse(&word)?;
            Ok(Outcome::ok(json!({
                "vertices": x.vertices().map(munn::format_word).collect::<Vec<_>>(),
                "end": munn::format_word(x.end()),
                "normal_form": x.to_string(),
                "idempotent": x.is_idempotent(),
            })))
        }
    }
}

fn suite(seed: u64, maxlen: usize) -> Result<Outcome, IsqError> {
    let r = paper_suite(SuiteOptions {
        seed,
        maxlen,
        ..SuiteOptions::default()
    });
    Ok(Outcome {
        holds: r.passed,
        report: serde_json::to_value(&r)?,
    })
}

fn run(cli: Cli) -> Result<Outcome, IsqError> {
    match cli.command {
        Command::Builder(b) => build(b),
        Command::Verify { file } => verify(&file),
        Command::Green { file } => green(&file),
        Command::Normal { file, set } => normal(&file, set),
        Command::Quotient { file, by } => quotient(&file, &by),
        Command::Congruences { file, kernel } => congruences(&file, kernel),
        Command::Factorize {
            source,
            target,
            hom,
        } => factorize(&source, &target, &hom),
        Command::Poly { n, check } => poly_cmd(n, check, cli.maxlen),
        Command::Munn(m) => munn_cmd(m, cli.maxlen),
        Command::Suite { .. } => suite(cli.seed, cli.maxlen),
    }
}

/// Indented `key: value` rendering of a JSON report.
fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_scalar_list(x) || !matches!(x, Value::Object(_) | Value::Array(_)) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(x, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if matches!(x, Value::Object(_)) {
                    out.push_str(&format!("{pad}-\n"));
                    render(x, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}- {}\n", inline(x)));
                }
            }
        }
        x => out.push_str(&format!("{pad}{}\n", inline(x))),
    }
}

fn is_scalar_list(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !matches!(x, Value::Object(_))),
        _ => false,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    isq::limits::set_max_elements(cli.max_size);
    let (pretty, out) = (cli.pretty, cli.out.clone());
    match run(cli) {
        Ok(outcome) => {
            let text = if pretty {
                let mut s = String::new();
                render(&outcome.report, 0, &mut s);
                s
            } else {
                format!("{}\n", outcome.report)
            };
            let written = match out {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display()))
                }
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("isq: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if outcome.holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("isq: {e}");
            ExitCode::from(2)
        }
    }
}
