use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mvfusion::corpus;
use mvfusion::fusion::{fuse, govar_ideal, FusionOptions, Mode};
use mvfusion::ideal::groebner_basis;
use mvfusion::ideal::DEFAULT_BUDGET;
use mvfusion::poly::{MonomialOrder, Polynomial, Ring};
use mvfusion::tableau::{parse_datum, rank_for_datum_len, sigma};
use mvfusion::{FusionError, Rational, Tableau};

#[derive(Parser)]
#[command(name = "mvfusion", version, about = "Multiply MV basis elements of C[N] for GL_m by fusing orbital varieties")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Rank m of GL_m (default: largest entry of the inputs).
    #[arg(long, global = true)]
    m: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Paper)]
    mode: ModeArg,
    #[arg(long, global = true)]
    json: bool,
    /// Pair budget per Groebner basis (also MVFUSION_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Fuse two tableaux and print the product.
    Fuse { a: String, b: String },
    /// Lusztig datum of a tableau.
    Lusztig { tableau: String },
    /// Dominant tableau of a Lusztig datum such as 1,0,1.
    Sigma { datum: String },
    /// Generators of the orbital-variety ideal of a tableau.
    Govar { tableau: String },
    /// Semistandard tableaux of a shape and weight, e.g. `tabs 4,2 3,2,1`.
    Tabs { shape: String, weight: String },
    /// Reduced Groebner basis of the polynomials in a file.
    Gb { file: PathBuf },
    /// Run a corpus of golden cases (default: the shipped one).
    Corpus { file: Option<PathBuf> },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Paper,
    Strict,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Degrevlex,
}

enum Failure {
    Input(String),
    Theory(String),
    Budget(String),
}

impl From<FusionError> for Failure {
    fn from(e: FusionError) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else if matches!(e, FusionError::TheoryViolation(_)) {
            Failure::Theory(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<mvfusion::AlgebraError> for Failure {
    fn from(e: mvfusion::AlgebraError) -> Self {
        FusionError::from(e).into()
    }
}

impl From<mvfusion::TableauError> for Failure {
    fn from(e: mvfusion::TableauError) -> Self {
        FusionError::from(e).into()
    }
}

fn budget(cli: &Cli) -> Result<u64, Failure> {
    if let Some(b) = cli.budget {
        return Ok(b);
    }
    match std::env::var("MVFUSION_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Input(format!("MVFUSION_BUDGET is not a number: `{}`", v))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn infer_m(cli: &Cli, texts: &[&str]) -> usize {
    cli.m.unwrap_or_else(|| texts.iter().flat_map(|t| t.chars()).filter_map(|c| c.to_digit(10)).max().unwrap_or(1).max(1) as usize)
}

fn list(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Failure::Input(format!("bad number `{}` in `{}`", x, s))))
        .collect()
}

/// Variable names in order of first appearance; `A[1,2,1]` counts as one name.
fn variable_names(text: &str) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_ascii_alphabetic() || chars[i] == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            if i < chars.len() && chars[i] == '[' {
                while i < chars.len() && chars[i] != ']' {
                    i += 1;
                }
                i += 1;
            }
            let name: String = chars[start..i.min(chars.len())].iter().collect();
            if !names.contains(&name) {
                names.push(name);
            }
        } else {
            i += 1;
        }
    }
    names
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let budget = budget(cli)?;
    let mode = match cli.mode {
        ModeArg::Paper => Mode::Paper,
        ModeArg::Strict => Mode::Strict,
    };
    let opts = FusionOptions { mode, budget };
    match &cli.cmd {
        Cmd::Fuse { a, b } => {
            let m = infer_m(cli, &[a, b]);
            let f = fuse(&Tableau::parse(a, m)?, &Tableau::parse(b, m)?, &opts)?;
            if cli.json {
                let text = serde_json::to_string_pretty(&f.report()?).map_err(|e| Failure::Input(e.to_string()))?;
                println!("{}", text);
            } else {
                // simple components first, then tableaux in descending order
                let mut comps: Vec<_> = f.components.iter().collect();
                comps.sort_by(|x, y| x.multiplicity.cmp(&y.multiplicity).then_with(|| y.tableau.to_string().cmp(&x.tableau.to_string())));
                let mut seen: Vec<(String, u64)> = Vec::new();
                for c in comps {
                    let key = c.stable.to_string();
                    match seen.iter_mut().find(|(k, _)| *k == key) {
                        Some(e) => e.1 += c.multiplicity,
                        None => seen.push((key, c.multiplicity)),
                    }
                }
                let line: Vec<String> = seen.iter().map(|(k, v)| format!("{}:{}", k, v)).collect();
                println!("{}", line.join("  "));
            }
        }
        Cmd::Lusztig { tableau } => {
            let m = infer_m(cli, &[tableau]);
            let n = Tableau::parse(tableau, m)?.lusztig_datum();
            println!("{}", n.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        }
        Cmd::Sigma { datum } => {
            let n = parse_datum(datum)?;
            let m = match cli.m {
                Some(m) => m,
                None => rank_for_datum_len(n.len())?,
            };
            println!("{}", sigma(&n, m)?);
        }
        Cmd::Govar { tableau } => {
            let m = infer_m(cli, &[tableau]);
            let g = govar_ideal(&Tableau::parse(tableau, m)?, budget)?;
            println!("{}", g.ideal.basis_strings()?.join("; "));
        }
        Cmd::Tabs { shape, weight } => {
            let (mut lambda, mut mu) = (list(shape)?, list(weight)?);
            let len = lambda.len().max(mu.len());
            lambda.resize(len, 0);
            mu.resize(len, 0);
            if lambda.iter().sum::<usize>() != mu.iter().sum::<usize>() {
                return Err(Failure::Input(format!("shape {} and weight {} have different sizes", shape, weight)));
            }
            for t in Tableau::enumerate(&lambda, &mu) {
                println!("{}", t);
            }
        }
        Cmd::Gb { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Failure::Input(format!("{}: {}", file.display(), e)))?;
            let lines: Vec<&str> =
                text.lines().flat_map(|l| l.split(';')).map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
            let names = variable_names(&lines.join(" "));
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let ring = Ring::with_names(&refs)?;
            let gens = lines.iter().map(|l| Polynomial::<Rational>::parse(&ring, l)).collect::<Result<Vec<_>, _>>()?;
            let order = match cli.order {
                OrderArg::Lex => MonomialOrder::Lex,
                OrderArg::Degrevlex => MonomialOrder::DegRevLex,
            };
            for g in groebner_basis(&ring, &gens, &order, budget)? {
                println!("{}", g);
            }
        }
        Cmd::Corpus { file } => {
            let text = match file {
                Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {}", p.display(), e)))?,
                None => corpus::SHIPPED.to_string(),
            };
            let cases = corpus::parse(&text).map_err(|e| Failure::Input(e.to_string()))?;
            if cases.is_empty() {
                eprintln!("warning: corpus has no cases");
            }
            let out = corpus::run_all(&cases, &opts);
            for o in &out {
                if o.passed() {
                    println!("ok    {} ({:.2} s)", o.name, o.seconds);
                } else {
                    println!("FAIL  {}", o.name);
                    for f in &o.failures {
                        println!("      {}", f);
                    }
                    if let Some(e) = &o.error {
                        println!("      error: {}", e);
                    }
                }
            }
            let passed = out.iter().filter(|o| o.passed()).count();
            println!("{}/{} pass", passed, out.len());
            let failed: Vec<_> = out.iter().filter(|o| !o.passed()).collect();
            if !failed.is_empty() {
                let msg = format!("{} of {} cases failed", failed.len(), out.len());
                return Err(if failed.iter().all(|o| o.budget_exceeded) { Failure::Budget(msg) } else { Failure::Theory(msg) });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
        Err(Failure::Theory(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
        Err(Failure::Budget(e)) => {
            eprintln!("error: {}", e);
            ExitCode::from(3)
        }
    }
}
