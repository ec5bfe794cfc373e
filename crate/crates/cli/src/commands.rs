use clap::{error::ErrorKind, Parser, Subcommand};
use extcalc::bockstein::{bf_dim, coh_dim_min, covering_dim, sp_in_ae, validate_bf, witness_7_3, witness_7_4};
use extcalc::exttype::{classify_finite_type, has_compact_type, mod_p_trivial, moore_eq_em, sp_eq_km};
use extcalc::graded::{cin, coef_homology, dim_coef, leq_gr, pairing, smash, suspend, vanishing_check};
use extcalc::presentation::{chain_homology, group_from_presentation, moore_graded, snf};
use extcalc::{
    sigma, tau, tensor, tor, AdmissibleGroup, BocksteinFunction, ChainComplex, GradedGroup, IntMatrix, LeqGr, Prime,
};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::parse::{parse_graded, parse_group};
use crate::Failure;

/// Every subcommand name.
pub const COMMANDS: [&str; 29] = [
    "canon", "tensor", "tor", "sigma", "tau", "snf", "present", "homology", "moore", "hcoef", "dim", "cin", "smash",
    "suspend", "pairing", "vanish", "leqgr", "bfcheck", "bfdim", "covdim", "spae", "cohdimmin", "witness73",
    "witness74", "spaek", "modp", "classify", "compact", "mooreem",
];

#[derive(Debug, Parser)]
#[command(name = "extcalc", version, about = "Graded abelian groups, Bockstein bases and extension types")]
struct Cli {
    /// Print a JSON result envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Use `⊕` and `∞` in text output.
    #[arg(long, global = true)]
    unicode: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical form of a group.
    #[command(name = "canon")]
    Canon { group: String },
    /// Tensor product A ⊗ B.
    #[command(name = "tensor")]
    Tensor { a: String, b: String },
    /// Torsion product Tor(A, B).
    #[command(name = "tor")]
    Tor { a: String, b: String },
    /// Bockstein basis sigma(G).
    #[command(name = "sigma")]
    Sigma { group: String },
    /// tau(G): sigma(G) closed under the EM-type completion.
    #[command(name = "tau")]
    Tau { group: String },
    /// Smith normal form of an integer matrix given as JSON rows.
    #[command(name = "snf")]
    Snf { matrix: String },
    /// Group with the given number of generators and JSON relation rows.
    #[command(name = "present")]
    Present { generators: usize, relations: String },
    /// Reduced homology of a chain complex (JSON file or inline document).
    #[command(name = "homology")]
    Homology { complex: String },
    /// Reduced homology of the Moore space M(G, n).
    #[command(name = "moore")]
    Moore { group: String, n: u32 },
    /// Homology of K with coefficients in G.
    #[command(name = "hcoef")]
    Hcoef { graded: String, group: String },
    /// Homological dimension dim_G(K).
    #[command(name = "dim")]
    Dim { graded: String, group: String },
    /// Connectivity index of K.
    #[command(name = "cin")]
    Cin { graded: String },
    /// Reduced homology of K ∧ L.
    #[command(name = "smash")]
    Smash { k: String, l: String },
    /// r-fold suspension.
    #[command(name = "suspend")]
    Suspend { graded: String, r: u32 },
    /// Cohomology of a compactum X with coefficients in a complex K.
    #[command(name = "pairing")]
    Pairing { x: String, k: String },
    /// The three vanishing conditions for H^n(X; K), n >= m.
    #[command(name = "vanish", allow_negative_numbers = true)]
    Vanish { x: String, k: String, m: i64 },
    /// Compare K <=_Gr L.
    #[command(name = "leqgr")]
    Leqgr { k: String, l: String },
    /// Check the Bockstein inequalities of a dimension function.
    #[command(name = "bfcheck")]
    Bfcheck { function: String },
    /// dim_G of a dimension function.
    #[command(name = "bfdim")]
    Bfdim { function: String, group: String },
    /// Covering dimension of a dimension function.
    #[command(name = "covdim")]
    Covdim { function: String },
    /// Is SP(K) an absolute extensor of the compactum?
    #[command(name = "spae")]
    Spae { function: String, graded: String },
    /// Minimal complex of a dimension function.
    #[command(name = "cohdimmin")]
    Cohdimmin { function: String },
    /// Separating function when sigma(F) is not inside tau(G).
    #[command(name = "witness73")]
    Witness73 { g: String, f: String, m: u32 },
    /// Separating function when sigma(F) is inside tau(G) but not sigma(G).
    #[command(name = "witness74")]
    Witness74 { g: String, f: String, m: u32 },
    /// Does SP(L) have the extension type of K(G, n)?
    #[command(name = "spaek")]
    Spaek {
        #[arg(long)]
        graded: String,
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: u32,
    },
    /// Is H^*(SP(K); Z/p) trivial?
    #[command(name = "modp")]
    Modp { graded: String, p: u64 },
    /// Finite-dimensional extension type of SP(L), if any.
    #[command(name = "classify")]
    Classify { graded: String },
    /// Does SP(L) have the extension type of S^1?
    #[command(name = "compact")]
    Compact { graded: String },
    /// Are M(G, n) and K(G, n) of the same extension type?
    #[command(name = "mooreem")]
    Mooreem { group: String, n: u32 },
}

pub(crate) enum Output {
    Value { json: Value, text: String },
    Help(String),
}

type Res = Result<Output, Failure>;

fn out(json: Value, text: impl Into<String>) -> Res {
    let mut text = text.into();
    text.push('\n');
    Ok(Output::Value { json, text })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn domain<T>(r: extcalc::Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::domain)
}

fn group(text: &str) -> Result<AdmissibleGroup, Failure> {
    Ok(parse_group(text)?)
}

fn graded(text: &str) -> Result<GradedGroup, Failure> {
    Ok(parse_graded(text)?)
}

/// An inline JSON document, or the path of a file holding one.
fn document(arg: &str) -> Result<String, Failure> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::usage("io", format!("cannot read {arg}: {e}")))
}

fn load_error(e: extcalc::Error) -> Failure {
    Failure::usage(e.code(), e.to_string())
}

fn function(arg: &str) -> Result<BocksteinFunction, Failure> {
    BocksteinFunction::from_json(&document(arg)?).map_err(load_error)
}

/// A function that satisfies every Bockstein inequality.
fn valid_function(arg: &str) -> Result<BocksteinFunction, Failure> {
    let alpha = function(arg)?;
    let violations = validate_bf(&alpha);
    if violations.is_empty() {
        Ok(alpha)
    } else {
        Err(Failure::Domain(crate::ErrorBody {
            code: "invalid_bockstein_function".into(),
            message: format!("{} Bockstein inequality violation(s)", violations.len()),
            details: Some(json!({ "violations": violations })),
        }))
    }
}

fn matrix(arg: &str, cols: Option<usize>) -> Result<IntMatrix, Failure> {
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(arg).map_err(|e| Failure::usage("bad_matrix", format!("matrix must be JSON rows of integers: {e}")))?;
    let width = rows.first().map_or(cols.unwrap_or(0), Vec::len);
    IntMatrix::from_rows(&rows, width).ok_or_else(|| Failure::usage("bad_matrix", "matrix rows have different lengths"))
}

fn integer(n: &BigInt) -> Value {
    i64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

fn graded_out(k: &GradedGroup) -> Res {
    out(json!({ "graded": k }), k.to_string())
}

fn group_out(g: &AdmissibleGroup) -> Res {
    out(json!({ "group": g.to_string() }), g.to_string())
}

fn function_out(alpha: &BocksteinFunction) -> Res {
    out(json!({ "function": alpha, "text": alpha.to_string() }), alpha.to_string())
}

/// Parse `args` and run the command. Returns the subcommand name when known.
pub(crate) fn dispatch(args: &[String]) -> (Option<String>, Res) {
    let argv = std::iter::once("extcalc".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let name = args.iter().find(|a| COMMANDS.contains(&a.as_str())).cloned();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (name, Ok(Output::Help(e.to_string()))),
                _ => {
                    let code = match e.kind() {
                        ErrorKind::InvalidSubcommand => "unknown_command",
                        ErrorKind::MissingSubcommand | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                            "missing_command"
                        }
                        _ => "usage",
                    };
                    let message = if code == "missing_command" {
                        "no subcommand given; see --help".to_string()
                    } else {
                        first_paragraph(&e.render().to_string())
                    };
                    (name, Err(Failure::usage(code, message)))
                }
            };
        }
    };
    let name = args.iter().find(|a| COMMANDS.contains(&a.as_str())).cloned();
    (name, execute(cli.command))
}

/// Clap's message without the usage block, on one line.
fn first_paragraph(rendered: &str) -> String {
    let lines: Vec<&str> = rendered.lines().take_while(|l| !l.trim().is_empty()).map(str::trim).collect();
    lines.join(" ").trim_start_matches("error: ").to_string()
}

fn execute(cmd: Command) -> Res {
    match cmd {
        Command::Canon { group: g } => group_out(&group(&g)?),
        Command::Tensor { a, b } => group_out(&tensor(&group(&a)?, &group(&b)?)),
        Command::Tor { a, b } => group_out(&tor(&group(&a)?, &group(&b)?)),
        Command::Sigma { group: g } => {
            let s = domain(sigma(&group(&g)?))?;
            out(json!({ "set": s, "text": s.to_string() }), s.to_string())
        }
        Command::Tau { group: g } => {
            let s = domain(tau(&group(&g)?))?;
            out(json!({ "set": s, "text": s.to_string() }), s.to_string())
        }
        Command::Snf { matrix: m } => {
            let r = snf(&matrix(&m, None)?);
            let factors: Vec<Value> = r.invariant_factors().iter().map(integer).collect();
            let text = format!("D = {}\nU = {}\nV = {}", r.d, r.u, r.v);
            out(json!({ "u": r.u, "d": r.d, "v": r.v, "invariant_factors": factors }), text)
        }
        Command::Present { generators, relations } => {
            let m = matrix(&relations, Some(generators))?;
            group_out(&domain(group_from_presentation(generators, &m))?)
        }
        Command::Homology { complex } => {
            let c = ChainComplex::from_json(&document(&complex)?).map_err(load_error)?;
            graded_out(&domain(chain_homology(&c))?)
        }
        Command::Moore { group: g, n } => graded_out(&domain(moore_graded(&group(&g)?, n))?),
        Command::Hcoef { graded: k, group: g } => graded_out(&domain(coef_homology(&graded(&k)?, &group(&g)?))?),
        Command::Dim { graded: k, group: g } => {
            let d = domain(dim_coef(&graded(&k)?, &group(&g)?))?;
            out(json!({ "value": d }), d.to_string())
        }
        Command::Cin { graded: k } => {
            let d = cin(&graded(&k)?);
            out(json!({ "value": d }), d.to_string())
        }
        Command::Smash { k, l } => graded_out(&smash(&graded(&k)?, &graded(&l)?)),
        Command::Suspend { graded: k, r } => graded_out(&suspend(&graded(&k)?, r)),
        Command::Pairing { x, k } => {
            let p = pairing(&graded(&x)?, &graded(&k)?);
            let text = format!("via cohomology: {}\nvia homology:   {}", p.via_cohomology, p.via_homology);
            out(json!({ "via_cohomology": p.via_cohomology, "via_homology": p.via_homology, "agrees": p.agrees() }), text)
        }
        Command::Vanish { x, k, m } => {
            let v = vanishing_check(&graded(&x)?, &graded(&k)?, m);
            let text = format!(
                "H^n(X;K) = 0 for n >= {m}: {}\nhomology side: {}\ncohomology side: {}",
                v.cohomology, v.homology_side, v.cohomology_side
            );
            let mut value = to_value(&v);
            value["agree"] = Value::Bool(v.agree());
            out(value, text)
        }
        Command::Leqgr { k, l } => {
            let r = leq_gr(&graded(&k)?, &graded(&l)?);
            let text = match &r {
                LeqGr::Holds { checked } => format!("holds ({} coefficient groups checked)", checked.len()),
                LeqGr::Fails { coefficient, dim_k, dim_l } => {
                    format!("fails at {coefficient}: dim(K) = {dim_k} > dim(L) = {dim_l}")
                }
            };
            out(to_value(&r), text)
        }
        Command::Bfcheck { function: f } => {
            let alpha = valid_function(&f)?;
            out(json!({ "valid": true, "function": alpha }), "valid Bockstein function")
        }
        Command::Bfdim { function: f, group: g } => {
            let d = domain(bf_dim(&valid_function(&f)?, &group(&g)?))?;
            out(json!({ "value": d }), d.to_string())
        }
        Command::Covdim { function: f } => {
            let d = covering_dim(&valid_function(&f)?);
            out(json!({ "value": d }), d.to_string())
        }
        Command::Spae { function: f, graded: k } => {
            let holds = sp_in_ae(&valid_function(&f)?, &graded(&k)?);
            out(json!({ "holds": holds }), holds.to_string())
        }
        Command::Cohdimmin { function: f } => {
            let c = coh_dim_min(&valid_function(&f)?);
            out(json!({ "complex": c, "text": c.to_string() }), c.to_string())
        }
        Command::Witness73 { g, f, m } => function_out(&domain(witness_7_3(&group(&g)?, &group(&f)?, m))?),
        Command::Witness74 { g, f, m } => function_out(&domain(witness_7_4(&group(&g)?, &group(&f)?, m))?),
        Command::Spaek { graded: l, group: g, n } => {
            let r = domain(sp_eq_km(&graded(&l)?, &group(&g)?, n))?;
            let mut text = r.verdict.to_string();
            for f in &r.failures {
                text.push_str(&format!("\nclause {:?} fails in degree {}", f.clause, f.degree));
                if let Some(w) = f.witness {
                    text.push_str(&format!(" (witness {w})"));
                }
            }
            out(to_value(&r), text)
        }
        Command::Modp { graded: k, p } => {
            let p = Prime::new(p).map_err(load_error)?;
            let trivial = domain(mod_p_trivial(&graded(&k)?, p))?;
            out(json!({ "trivial": trivial }), trivial.to_string())
        }
        Command::Classify { graded: l } => {
            let c = domain(classify_finite_type(&graded(&l)?))?;
            let mut value = to_value(&c);
            value["text"] = Value::String(c.to_string());
            out(value, c.to_string())
        }
        Command::Compact { graded: l } => {
            let c = domain(has_compact_type(&graded(&l)?))?;
            out(json!({ "compact": c }), c.to_string())
        }
        Command::Mooreem { group: g, n } => {
            let v = domain(moore_eq_em(&group(&g)?, n))?;
            let text = match &v {
                extcalc::MooreEmVerdict::Localization { primes } => {
                    format!("yes: K({}, 1)", AdmissibleGroup::localized(primes.clone()))
                }
                extcalc::MooreEmVerdict::Rational => format!("yes: K(Q, {n})"),
                extcalc::MooreEmVerdict::No => "no".into(),
            };
            out(to_value(&v), text)
        }
    }
}
