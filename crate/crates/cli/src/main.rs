//! `shirshov` — compute with finitely presented associative algebras over
//! the integers: normal forms with proof traces, Gröbner-Shirshov basis
//! checking and completion, ideal membership, and two-sided inverse search.
//!
//! Exit codes: 0 success (including negative answers such as "not a member"
//! or "no inverse up to the bound"), 1 usage or parse errors, 2 precondition
//! violations (the rules are not a basis and `--auto-complete` was not
//! given, or the element reduces to zero), 3 completion obstructions.

mod render;

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use shirshov::{
    check_gsb, complete, invert_element, membership, CompletionOutcome, Gsb, GsbError,
    InvertOutcome, ParseError, Presentation, ReductionMode, SolverError,
};

#[derive(Parser)]
#[command(name = "shirshov", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Head,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a polynomial to normal form modulo the presentation's rules.
    Nf {
        /// Presentation file.
        file: PathBuf,
        /// Polynomial expression to reduce.
        #[arg(long)]
        poly: String,
        /// Head mode reduces only leading terms; full mode reduces every
        /// term.
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
        /// Print the reduction steps before the normal form.
        #[arg(long)]
        trace: bool,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
    /// Check whether the relations form a Gröbner-Shirshov basis.
    GsbCheck {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Close the relations under compositions within budgets.
    Complete {
        file: PathBuf,
        /// Largest ambiguity degree a new rule may be derived from.
        #[arg(long, default_value_t = 16)]
        max_degree: usize,
        /// Largest number of rules completion may add.
        #[arg(long, default_value_t = 64)]
        max_rules: usize,
        #[arg(long)]
        json: bool,
    },
    /// List the irreducible words up to a degree bound, largest first.
    Irr {
        file: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
    /// Decide ideal membership; requires the rules to be a basis.
    Member {
        file: PathBuf,
        #[arg(long)]
        poly: String,
        /// Complete the rules first if they are not already a basis.
        #[arg(long)]
        auto_complete: bool,
    },
    /// Search for a two-sided inverse with support up to a degree bound.
    Invert {
        file: PathBuf,
        /// Element to invert.
        #[arg(long)]
        elem: String,
        /// Support degree bound; defaults to twice the largest rule degree.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Complete the rules first if they are not already a basis.
        #[arg(long)]
        auto_complete: bool,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type CliResult = Result<i32, Failure>;

fn main() {
    // Die quietly when the consumer of a pipe goes away (e.g. `irr | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

fn load_presentation(path: &PathBuf) -> Result<Presentation, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?;
    Presentation::parse(&text)
        .map_err(|e| Failure::new(1, format!("{}:{e}", path.display())))
}

fn parse_poly(pres: &Presentation, text: &str) -> Result<shirshov::Polynomial, Failure> {
    pres.parse_polynomial(text)
        .map_err(|e: ParseError| Failure::new(1, format!("in `{text}`: {e}")))
}

fn not_a_gsb(pres: &Presentation, err: &GsbError) -> Failure {
    let GsbError::NotAGsb {
        rule_left,
        rule_right,
        ambiguity,
        residual,
    } = err;
    Failure::new(
        2,
        format!(
            "not a Gröbner-Shirshov basis: the composition of rules {rule_left} and {rule_right} \
             at {} leaves the nonzero residual {}; re-run with --auto-complete",
            pres.format_word(ambiguity),
            pres.format_polynomial(residual),
        ),
    )
}

/// Obtains a verified basis, completing first when requested. Obstructions
/// exit with code 3; an exhausted budget leaves the precondition unmet and
/// exits with code 2.
fn obtain_gsb(pres: &Presentation, auto_complete: bool) -> Result<Gsb, Failure> {
    if !auto_complete {
        return Gsb::check(pres.rules().clone()).map_err(|e| not_a_gsb(pres, &e));
    }
    let result = complete(pres.rules(), 16, 64);
    match result.outcome {
        CompletionOutcome::Completed(rules) => Ok(Gsb::Basis(rules)),
        CompletionOutcome::TrivialRing => Ok(Gsb::TrivialRing),
        CompletionOutcome::ConstantObstruction(n) => Err(Failure::new(
            3,
            format!("completion obstruction: the constant {n} lies in the ideal"),
        )),
        CompletionOutcome::NonMonicObstruction(p) => Err(Failure::new(
            3,
            format!(
                "completion obstruction: residual {} has a non-unit leading coefficient",
                pres.format_polynomial(&p)
            ),
        )),
        CompletionOutcome::BudgetExhausted(_) => Err(Failure::new(
            2,
            "completion budget exhausted before reaching a basis; raise the budgets with the \
             `complete` command",
        )),
    }
}

fn dispatch(command: Command) -> CliResult {
    match command {
        Command::Nf {
            file,
            poly,
            mode,
            trace,
            json,
        } => cmd_nf(&file, &poly, mode, trace, json),
        Command::GsbCheck { file, json } => cmd_gsb_check(&file, json),
        Command::Complete {
            file,
            max_degree,
            max_rules,
            json,
        } => cmd_complete(&file, max_degree, max_rules, json),
        Command::Irr { file, max_degree } => cmd_irr(&file, max_degree),
        Command::Member {
            file,
            poly,
            auto_complete,
        } => cmd_member(&file, &poly, auto_complete),
        Command::Invert {
            file,
            elem,
            max_degree,
            auto_complete,
            json,
        } => cmd_invert(&file, &elem, max_degree, auto_complete, json),
    }
}

fn cmd_nf(file: &PathBuf, poly: &str, mode: Mode, trace: bool, json: bool) -> CliResult {
    let pres = load_presentation(file)?;
    let p = parse_poly(&pres, poly)?;
    let mode = match mode {
        Mode::Head => ReductionMode::Head,
        Mode::Full => ReductionMode::Full,
    };
    let (nf, reduction) = pres.rules().normal_form(&p, mode);
    if json {
        let mut doc = json!({
            "schema": render::SCHEMA,
            "command": "nf",
            "input": pres.format_polynomial(&p),
            "mode": match mode {
                ReductionMode::Head => "head",
                ReductionMode::Full => "full",
            },
            "normal_form": pres.format_polynomial(&nf),
        });
        if trace {
            doc["trace"] = render::trace_json(&pres, &reduction);
        }
        println!("{doc}");
    } else {
        if trace {
            for line in render::step_lines(&pres, &reduction) {
                println!("{line}");
            }
        }
        println!("{}", pres.format_polynomial(&nf));
    }
    Ok(0)
}

fn cmd_gsb_check(file: &PathBuf, json: bool) -> CliResult {
    let pres = load_presentation(file)?;
    let report = check_gsb(pres.rules());
    if json {
        println!("{}", render::gsb_report_json(&pres, &report));
        return Ok(0);
    }
    if report.is_gsb {
        println!(
            "GSB: yes ({} compositions, all reduce to 0)",
            report.entries.len()
        );
    } else {
        let failing: Vec<_> = report
            .entries
            .iter()
            .filter(|e| !e.residual.is_zero())
            .collect();
        println!(
            "GSB: no ({} compositions, {} nonzero residuals)",
            report.entries.len(),
            failing.len()
        );
        for entry in failing {
            println!(
                "  rules {} and {} at {}: residual {}",
                entry.composition.rule_left,
                entry.composition.rule_right,
                pres.format_word(&entry.composition.ambiguity),
                pres.format_polynomial(&entry.residual),
            );
        }
    }
    Ok(0)
}

fn cmd_complete(file: &PathBuf, max_degree: usize, max_rules: usize, json: bool) -> CliResult {
    let pres = load_presentation(file)?;
    let result = complete(pres.rules(), max_degree, max_rules);
    if json {
        let mut doc = json!({
            "schema": render::SCHEMA,
            "command": "complete",
            "max_degree": max_degree,
            "max_rules": max_rules,
        });
        let code = match &result.outcome {
            CompletionOutcome::Completed(rules) => {
                doc["outcome"] = "completed".into();
                doc["rules"] = render::rules_json(&pres, rules).into();
                doc["provenance"] = render::provenance_json(&pres, &result.provenance);
                0
            }
            CompletionOutcome::TrivialRing => {
                doc["outcome"] = "trivial-ring".into();
                0
            }
            CompletionOutcome::ConstantObstruction(n) => {
                doc["outcome"] = "constant-obstruction".into();
                doc["constant"] = n.to_string().into();
                3
            }
            CompletionOutcome::NonMonicObstruction(p) => {
                doc["outcome"] = "non-monic-obstruction".into();
                doc["residual"] = pres.format_polynomial(p).into();
                3
            }
            CompletionOutcome::BudgetExhausted(rules) => {
                doc["outcome"] = "budget-exhausted".into();
                doc["rules"] = render::rules_json(&pres, rules).into();
                0
            }
        };
        println!("{doc}");
        return Ok(code);
    }
    match result.outcome {
        CompletionOutcome::Completed(rules) => {
            println!("completed: {} rules", rules.len());
            for rule in rules.rules() {
                println!("  {}: {}", rule.index(), pres.format_polynomial(rule.poly()));
            }
            Ok(0)
        }
        CompletionOutcome::TrivialRing => {
            println!(
                "TRIVIAL RING: the unit lies in the ideal; the presented algebra is the zero \
                 ring and every element reduces to 0"
            );
            Ok(0)
        }
        CompletionOutcome::ConstantObstruction(n) => {
            println!(
                "obstruction: the constant {n} lies in the ideal; no monic completion exists \
                 over the integers"
            );
            Ok(3)
        }
        CompletionOutcome::NonMonicObstruction(p) => {
            println!(
                "obstruction: residual {} has a non-unit leading coefficient; dividing would \
                 change the ideal over the integers",
                pres.format_polynomial(&p)
            );
            Ok(3)
        }
        CompletionOutcome::BudgetExhausted(rules) => {
            println!(
                "budget exhausted (max degree {max_degree}, max rules {max_rules}); {} rules so far",
                rules.len()
            );
            for rule in rules.rules() {
                println!("  {}: {}", rule.index(), pres.format_polynomial(rule.poly()));
            }
            Ok(0)
        }
    }
}

fn cmd_irr(file: &PathBuf, max_degree: usize) -> CliResult {
    let pres = load_presentation(file)?;
    for word in pres.rules().enumerate_irr(max_degree) {
        println!("{}", pres.format_word(&word));
    }
    Ok(0)
}

fn cmd_member(file: &PathBuf, poly: &str, auto_complete: bool) -> CliResult {
    let pres = load_presentation(file)?;
    let p = parse_poly(&pres, poly)?;
    let rules = match obtain_gsb(&pres, auto_complete)? {
        Gsb::Basis(rules) => rules,
        Gsb::TrivialRing => {
            println!("yes (trivial ring: every element reduces to 0)");
            return Ok(0);
        }
    };
    let (member, trace) = membership(&p, &rules).map_err(|e| not_a_gsb(&pres, &e))?;
    if member {
        println!("yes");
    } else {
        println!("no (normal form: {})", pres.format_polynomial(&trace.output));
    }
    Ok(0)
}

fn cmd_invert(
    file: &PathBuf,
    elem: &str,
    max_degree: Option<usize>,
    auto_complete: bool,
    json: bool,
) -> CliResult {
    let pres = load_presentation(file)?;
    let u = parse_poly(&pres, elem)?;
    let gsb = obtain_gsb(&pres, auto_complete)?;
    let bound = max_degree.unwrap_or_else(|| {
        let lead = gsb
            .rules()
            .map(|rules| rules.max_lead_degree())
            .unwrap_or(0);
        if lead == 0 {
            1
        } else {
            2 * lead
        }
    });
    let outcome = invert_element(&u, &gsb, bound).map_err(|e| match e {
        SolverError::ZeroElement => Failure::new(2, e.to_string()),
        SolverError::Internal(_) => Failure::new(2, e.to_string()),
    })?;
    match outcome {
        InvertOutcome::Inverse(cert) => {
            if json {
                println!("{}", render::certificate_json(&pres, &cert));
            } else {
                println!("{}", pres.format_polynomial(&cert.inverse));
            }
        }
        InvertOutcome::NoSolutionUpToDegree { max_degree } => {
            if json {
                println!(
                    "{}",
                    json!({
                        "schema": render::SCHEMA,
                        "command": "invert",
                        "outcome": "no-solution-up-to-degree",
                        "max_degree": max_degree,
                    })
                );
            } else {
                println!(
                    "no inverse found with support of degree <= {max_degree} (unknown beyond \
                     this bound)"
                );
            }
        }
        InvertOutcome::TrivialRing => {
            if json {
                println!(
                    "{}",
                    json!({
                        "schema": render::SCHEMA,
                        "command": "invert",
                        "outcome": "trivial-ring",
                        "inverse": "0",
                    })
                );
            } else {
                println!(
                    "TRIVIAL RING: the presented algebra is the zero ring; every element is \
                     invertible with inverse 0"
                );
            }
        }
    }
    Ok(0)
}
