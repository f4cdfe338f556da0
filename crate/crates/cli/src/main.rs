use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weylfock::characters::{self, apply_e, apply_f, enumerate, fock_coordinates, weight_functions, EnumerateOptions};
use weylfock::ffield::{Classification, FqContext, FqPoly};
use weylfock::semisimple::SemisimpleClass;
use weylfock::theta::{self, DualPair, ThetaCase};
use weylfock::{CharacterLabel, Error, Family, GammaDescriptor, GlobalContext, QIndex, RootRatio, Sign};

mod checks;

#[derive(Parser)]
#[command(name = "weylfock", version, about = "Symbols, Fock spaces and colored weight functions")]
struct Cli {
    /// Odd prime power q
    #[arg(long, global = true)]
    q: Option<u64>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colored weight functions of a label
    Weights(LabelArg),
    /// Add or remove a 1-hook of a given residue
    Branch {
        #[command(flatten)]
        label: LabelArg,
        #[arg(long, allow_hyphen_values = true)]
        colour: String,
        #[arg(long, allow_hyphen_values = true)]
        i: String,
        /// Remove instead of add
        #[arg(long)]
        remove: bool,
    },
    /// Fock coordinates and weights of a label
    Fock(LabelArg),
    /// Theta-cuspidality, first occurrences and compatibility
    #[command(subcommand)]
    Theta(ThetaCommand),
    /// List every label of a given rank
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        /// Quadratic-unipotent labels only
        #[arg(long)]
        qu: bool,
        /// Largest star rank, using every Γ of degree at most 2 over F_q
        #[arg(long, default_value_t = 0)]
        star_bound: u32,
    },
    /// Polynomials over F_q
    #[command(subcommand)]
    Ff(FfCommand),
    /// Semisimple classes of the dual group
    #[command(subcommand)]
    Ss(SsCommand),
    /// Run an invariant suite
    Check {
        #[arg(value_name = "SUITE")]
        suite: Option<String>,
        #[arg(long = "suite")]
        suite_flag: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_weight: u32,
        #[arg(long, default_value_t = 3)]
        max_rank: u32,
        #[arg(long, default_value_t = 3)]
        max_charge: i64,
    },
}

#[derive(Args)]
struct LabelArg {
    /// Path to a label, `-` for stdin, or inline JSON
    #[arg(long)]
    label: String,
}

#[derive(Subcommand)]
enum ThetaCommand {
    FirstOccurrence {
        #[command(flatten)]
        label: LabelArg,
        #[arg(long = "case")]
        case: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
    },
    Eta(LabelArg),
    Compatible {
        #[command(flatten)]
        label: LabelArg,
        #[arg(long)]
        other: String,
        #[arg(long, value_enum)]
        pair: Pair,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Pair {
    SpOeven,
    SpOodd,
}

#[derive(Subcommand)]
enum FfCommand {
    /// Monic irreducibles of a degree
    #[command(visible_alias = "enumerate")]
    Irreducibles {
        #[arg(long)]
        deg: usize,
    },
    /// Self-dual irreducibles of degree 2δ
    SelfDual {
        #[arg(long)]
        delta: usize,
    },
    /// Class, σ, dual and negation of a polynomial given low-to-high as `c0,c1,...,1`
    Classify {
        #[arg(long)]
        poly: String,
    },
    /// σ of an element of F1 or F2
    Sigma {
        #[arg(long)]
        poly: String,
    },
}

#[derive(Subcommand)]
enum SsCommand {
    /// Check a class against the structural constraints
    Validate(ClassArg),
    /// Centralizer shape inside the dual group of a family
    Centralizer {
        #[command(flatten)]
        class: ClassArg,
        #[arg(long)]
        family: String,
    },
    /// Spinor-norm value of an odd orthogonal class
    Spinor(ClassArg),
}

#[derive(Args)]
struct ClassArg {
    /// Class JSON, a path to it, or `-` for stdin
    #[arg(long)]
    class: String,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure { code: 1, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn read_input(src: &str) -> Result<String, Failure> {
    let t = src.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(src.to_string());
    }
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(src).map_err(|e| usage(format!("{src}: {e}")))
}

fn read_label(src: &str, ctx: &GlobalContext) -> Result<CharacterLabel, Failure> {
    let text = read_input(src)?;
    let l: CharacterLabel = serde_json::from_str(&text).map_err(|e| usage(format!("label: {e}")))?;
    l.validate(ctx)?;
    Ok(l)
}

fn context(q: Option<u64>) -> Result<GlobalContext, Failure> {
    let q = q.ok_or_else(|| usage("--q is required: signs depend on q mod 4"))?;
    Ok(GlobalContext::new(q)?)
}

fn parse_sign(s: &str) -> Result<Sign, Failure> {
    match s {
        "+" | "+1" | "1" | "plus" => Ok(Sign::Plus),
        "-" | "-1" | "minus" => Ok(Sign::Minus),
        _ => Err(usage(format!("expected a sign, got {s:?}"))),
    }
}

fn parse_family(s: &str) -> Result<Family, Failure> {
    Family::parse(s).ok_or_else(|| usage(format!("unknown family {s:?}; expected Sp, Oodd or Oeven")))
}

fn ratio_json(r: &RootRatio<QIndex>, var: &str) -> Value {
    let show = |v: Vec<QIndex>| v.iter().map(|a| a.to_string()).collect::<Vec<_>>();
    json!({ "text": r.render(var), "zeros": show(r.zeros()), "poles": show(r.poles()) })
}

fn print_ratio(name: &str, r: &RootRatio<QIndex>, var: &str) {
    let show = |v: Vec<QIndex>| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ");
    println!("{name} = {}", r.render(var));
    println!("  zeros {{{}}}", show(r.zeros()));
    println!("  poles {{{}}}", show(r.poles()));
}

fn emit(json_mode: bool, value: Value, text: impl FnOnce()) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(&value).expect("values serialize"));
    } else {
        text();
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let js = cli.json;
    match cli.command {
        Command::Weights(arg) => {
            let ctx = context(cli.q)?;
            let l = read_label(&arg.label, &ctx)?;
            let (op, om) = weight_functions(&l, &ctx)?;
            emit(js, json!({ "O_plus": ratio_json(&op, "u"), "O_minus": ratio_json(&om, "v") }), || {
                print_ratio("O+(u)", &op, "u");
                print_ratio("O-(v)", &om, "v");
            });
        }
        Command::Branch { label, colour, i, remove } => {
            let ctx = context(cli.q)?;
            let l = read_label(&label.label, &ctx)?;
            let colour = parse_sign(&colour)?;
            let i = QIndex::parse(&i).ok_or_else(|| usage(format!("cannot read residue {i:?}")))?;
            let out = if remove { apply_e(&l, colour, i, &ctx)? } else { apply_f(&l, colour, i, &ctx)? };
            emit(js, json!(out), || {
                if out.is_empty() {
                    println!("(none)");
                }
                for x in &out {
                    println!("{x}");
                }
            });
        }
        Command::Fock(arg) => {
            let ctx = context(cli.q)?;
            let l = read_label(&arg.label, &ctx)?;
            let coords = fock_coordinates(&l, &ctx)?;
            let (wp, wm) = characters::weights(&l, &ctx)?;
            let w_json = |w: &weylfock::Weight| -> Value {
                w.0.iter().map(|(i, k)| (i.to_string(), json!(k))).collect::<serde_json::Map<_, _>>().into()
            };
            emit(js, json!({ "coordinates": coords, "wt_plus": w_json(&wp), "wt_minus": w_json(&wm) }), || {
                for (name, c, w) in [("+", &coords[0], &wp), ("-", &coords[1], &wm)] {
                    let parts: Vec<String> = c.lambdas.iter().zip(&c.xis).map(|(l, x)| format!("|{l}, {x}⟩")).collect();
                    println!("colour {name}: {}", parts.join(" ⊗ "));
                    let wt: Vec<String> = w.0.iter().map(|(i, k)| format!("{k}Λ[{i}]")).collect();
                    println!("  wt = {}", if wt.is_empty() { "0".into() } else { wt.join(" + ") });
                }
            });
        }
        Command::Theta(t) => theta_cmd(t, cli.q, js)?,
        Command::Enumerate { family, n, qu, star_bound } => {
            let family = parse_family(&family)?;
            let mut gammas = Vec::new();
            if star_bound > 0 && !qu {
                let ctx = context(cli.q)?;
                let k = FqContext::new(ctx.q())?;
                for d in 1..=2 {
                    for f in k.irreducibles(d)?.into_iter().chain(k.self_dual_irreducibles(d)) {
                        if let Ok(g) = k.descriptor(&f) {
                            // One representative per pair {Γ, Γ*}.
                            if g.class == weylfock::GammaClass::F2 && k.dual(&f)? < f {
                                continue;
                            }
                            gammas.push(g);
                        }
                    }
                }
                gammas.sort();
                gammas.dedup();
            }
            let opts = EnumerateOptions { quadratic_unipotent: qu, star_bound, gammas };
            let labels = enumerate(family, n, &opts);
            emit(js, json!(labels), || {
                for l in &labels {
                    println!("{l}");
                }
                println!("{} labels", labels.len());
            });
        }
        Command::Ff(f) => ff_cmd(f, cli.q, js)?,
        Command::Ss(cmd) => {
            let ctx = context(cli.q)?;
            let read = |arg: &ClassArg| -> Result<SemisimpleClass, Failure> {
                let s: SemisimpleClass =
                    serde_json::from_str(&read_input(&arg.class)?).map_err(|e| usage(format!("class: {e}")))?;
                s.validate(&ctx)?;
                Ok(s)
            };
            match cmd {
                SsCommand::Validate(arg) => {
                    read(&arg)?;
                    emit(js, json!({ "valid": true }), || println!("valid"));
                }
                SsCommand::Centralizer { class, family } => {
                    let c = read(&class)?.centralizer(parse_family(&family)?, &ctx)?;
                    emit(js, json!(c), || {
                        let f = |x: &weylfock::semisimple::Factor| match x.group_type {
                            Some(t) => format!("{:?}{}({t})", x.family, x.n),
                            None => format!("{:?}{}", x.family, x.n),
                        };
                        let mut parts = vec![f(&c.plus), f(&c.minus)];
                        for l in &c.star {
                            parts.push(format!("GL{}({}q^{})", l.m, l.epsilon, l.delta));
                        }
                        println!("{}", parts.join(" × "));
                    });
                }
                SsCommand::Spinor(arg) => {
                    let sp = read(&arg)?.spinor_value(&ctx)?;
                    emit(js, json!(sp), || println!("{sp}"));
                }
            }
        }
        Command::Check { suite, suite_flag, max_weight, max_rank, max_charge } => {
            let name = suite.or(suite_flag).unwrap_or_else(|| "all".into());
            let ctx = context(cli.q.or(Some(3)))?;
            let limits = checks::Limits { max_weight, max_rank, max_charge };
            let names: Vec<&str> = if name == "all" { checks::SUITES.to_vec() } else { vec![name.as_str()] };
            let mut failed = false;
            let mut report = Vec::new();
            for n in names {
                let r = checks::run(n, limits, &ctx)
                    .ok_or_else(|| usage(format!("unknown suite {n:?}; known: {}", checks::SUITES.join(", "))))?;
                failed |= !r.failures.is_empty();
                report.push(r);
            }
            emit(
                js,
                json!(report
                    .iter()
                    .map(|r| json!({ "suite": r.name, "passed": r.passed, "failed": r.failures.len(),
                                     "first_failure": r.failures.first() }))
                    .collect::<Vec<_>>()),
                || {
                    for r in &report {
                        let status = if r.failures.is_empty() { "ok" } else { "FAILED" };
                        println!("{}: {} passed, {} failed [{status}]", r.name, r.passed, r.failures.len());
                        if let Some(f) = r.failures.first() {
                            println!("  first failure: {f}");
                        }
                    }
                },
            );
            if failed {
                return Err(Failure { code: 2, message: "suite failed".into() });
            }
        }
    }
    Ok(())
}

fn theta_cmd(t: ThetaCommand, q: Option<u64>, js: bool) -> Result<(), Failure> {
    let ctx = context(q)?;
    match t {
        ThetaCommand::FirstOccurrence { label, case, alpha } => {
            let l = read_label(&label.label, &ctx)?;
            let case = ThetaCase::parse(&case, parse_sign(&alpha)?)
                .ok_or_else(|| usage(format!("unknown case {case:?}; expected I, II or III")))?;
            let fo = theta::first_occurrence(&l, case, &ctx)?;
            emit(js, json!(fo), || {
                for o in fo.entries {
                    println!("dim {} on tower {:?}", o.dim, o.tower);
                }
            });
        }
        ThetaCommand::Eta(arg) => {
            let l = read_label(&arg.label, &ctx)?;
            let eta = theta::eta_signs(&l.cuspidal_support(&ctx)?)?;
            emit(js, json!(eta), || match eta {
                theta::EtaSigns::Single(s) => println!("η = {s}"),
                theta::EtaSigns::Pair(p, m) => println!("η₊ = {p}, η₋ = {m}"),
            });
        }
        ThetaCommand::Compatible { label, other, pair } => {
            let l1 = read_label(&label.label, &ctx)?;
            let l2 = read_label(&other, &ctx)?;
            let pair = match pair {
                Pair::SpOeven => DualPair::SpOeven,
                Pair::SpOodd => DualPair::SpOodd,
            };
            let r = theta::theta_compatible(&l1, &l2, pair, &ctx)?;
            emit(js, json!(r), || {
                for (name, ok) in &r.conditions {
                    println!("[{}] {name}", if *ok { "x" } else { " " });
                }
                println!("{}", if r.compatible { "compatible" } else { "not compatible" });
            });
        }
    }
    Ok(())
}

fn describe(k: &FqContext, f: &FqPoly) -> Value {
    let class = match k.classify(f) {
        Ok(Classification::F0) => json!("F0"),
        Ok(Classification::F1 { delta }) => json!({ "class": "F1", "delta": delta }),
        Ok(Classification::F2 { delta, .. }) => json!({ "class": "F2", "delta": delta }),
        Err(_) => Value::Null,
    };
    let desc: Option<GammaDescriptor> = k.descriptor(f).ok();
    json!({ "poly": f.to_string(), "coeffs": f, "classification": class, "sigma": desc.map(|d| d.sigma) })
}

fn ff_cmd(f: FfCommand, q: Option<u64>, js: bool) -> Result<(), Failure> {
    let ctx = context(q)?;
    let k = FqContext::new(ctx.q())?;
    let list = |polys: Vec<FqPoly>| {
        let values: Vec<Value> = polys.iter().map(|f| describe(&k, f)).collect();
        emit(js, json!(values), || {
            for p in &polys {
                println!("{p}");
            }
            println!("{} polynomials", polys.len());
        });
    };
    match f {
        FfCommand::Irreducibles { deg } => list(k.irreducibles(deg)?),
        FfCommand::SelfDual { delta } => list(k.self_dual_irreducibles(delta)),
        FfCommand::Classify { poly } => {
            let coeffs: Result<Vec<u32>, _> = poly.split(',').map(|c| c.trim().parse::<u32>()).collect();
            let coeffs = coeffs.map_err(|e| usage(format!("poly: {e}")))?;
            let f = k.poly(coeffs)?;
            let mut v = describe(&k, &f);
            v["irreducible"] = json!(k.is_irreducible(&f));
            v["dual"] = json!(k.dual(&f).ok().map(|d| d.to_string()));
            v["negation"] = json!(k.negate_class(&f).to_string());
            emit(js, v.clone(), || {
                println!("{f}");
                println!("  irreducible: {}", v["irreducible"]);
                println!("  classification: {}", v["classification"]);
                println!("  sigma: {}", v["sigma"]);
                println!("  dual: {}", v["dual"]);
                println!("  negation: {}", v["negation"]);
            });
        }
        FfCommand::Sigma { poly } => {
            let coeffs: Result<Vec<u32>, _> = poly.split(',').map(|c| c.trim().parse::<u32>()).collect();
            let f = k.poly(coeffs.map_err(|e| usage(format!("poly: {e}")))?)?;
            let d = k.descriptor(&f)?;
            emit(js, json!(d.sigma), || println!("{}", d.sigma));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    if let Some(n) = std::env::var("WEYLFOCK_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
