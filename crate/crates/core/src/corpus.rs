//! Golden fusion cases stored as text.
//!
//! ```text
//! case: ex01
//! m: 4
//! in: 2 1/3
//! relations: A[1,2,1] A[2,3,1] + s A[1,3,1]
//! component: 13/2 1 | A[1,2,1]; s
//! component: 12/3 1 | A[2,3,1]; s
//! expect: 3:1 2/3:1
//! ```
//!
//! `relations` and `primary` are optional. Component ideals live in the nilpotent ring plus `s`.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::fusion::{fuse, with_parameter, Fusion, FusionOptions};
use crate::ideal::Ideal;
use crate::tableau::{datum_len, sigma};
use crate::{FusionError, QIdeal, Tableau};

/// The cases shipped with the crate.
pub const SHIPPED: &str = include_str!("../data/corpus.txt");

#[derive(Debug, Error)]
#[error("corpus line {line}: {msg}")]
pub struct CorpusError {
    pub line: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedComponent {
    pub tableau: String,
    pub multiplicity: u64,
    pub gens: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub name: String,
    pub m: usize,
    pub input: (String, String),
    pub relations: Vec<String>,
    pub components: Vec<ExpectedComponent>,
    pub primary: Vec<(String, Vec<String>)>,
    /// Products of stable tableaux joined by `*`, with multiplicities.
    pub expect: Vec<(String, u64)>,
}

fn split_gens(s: &str) -> Vec<String> {
    s.split(';').map(|g| g.trim().to_string()).filter(|g| !g.is_empty()).collect()
}

fn parse_products(s: &str, line: usize) -> Result<Vec<(String, u64)>, CorpusError> {
    let mut out = Vec::new();
    for item in s.split_whitespace() {
        let (t, k) = item.rsplit_once(':').ok_or_else(|| CorpusError { line, msg: format!("expected tableau:mult, got `{}`", item) })?;
        let k: u64 = k.parse().map_err(|_| CorpusError { line, msg: format!("bad multiplicity `{}`", k) })?;
        out.push((t.to_string(), k));
    }
    Ok(out)
}

/// Stable tableau of a product of stable tableaux: Lusztig data add.
pub fn product_key(factors: &str, m: usize) -> Result<String, FusionError> {
    let mut n = vec![0; datum_len(m)];
    for f in factors.split('*') {
        for (a, b) in n.iter_mut().zip(Tableau::parse(f, m)?.lusztig_datum()) {
            *a += b;
        }
    }
    Ok(sigma(&n, m)?.strip_padding().to_string())
}

/// Expected products keyed like `Fusion::product`.
pub fn expected_product(case: &Case) -> Result<BTreeMap<String, u64>, FusionError> {
    let mut out = BTreeMap::new();
    for (t, k) in &case.expect {
        *out.entry(product_key(t, case.m)?).or_insert(0) += k;
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<Vec<Case>, CorpusError> {
    let mut cases: Vec<Case> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let (key, val) = l.split_once(':').ok_or_else(|| CorpusError { line, msg: "expected `key: value`".into() })?;
        let val = val.trim();
        if key == "case" {
            cases.push(Case {
                name: val.to_string(),
                m: 0,
                input: (String::new(), String::new()),
                relations: vec![],
                components: vec![],
                primary: vec![],
                expect: vec![],
            });
            continue;
        }
        let c = cases.last_mut().ok_or_else(|| CorpusError { line, msg: "field before first `case:`".into() })?;
        match key {
            "m" => c.m = val.parse().map_err(|_| CorpusError { line, msg: format!("bad m `{}`", val) })?,
            "in" => {
                let parts: Vec<&str> = val.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(CorpusError { line, msg: "`in:` takes two tableaux".into() });
                }
                c.input = (parts[0].to_string(), parts[1].to_string());
            }
            "relations" => c.relations = split_gens(val),
            "component" => {
                let (head, gens) = val.split_once('|').ok_or_else(|| CorpusError { line, msg: "missing `|`".into() })?;
                let head: Vec<&str> = head.split_whitespace().collect();
                if head.len() != 2 {
                    return Err(CorpusError { line, msg: "component needs tableau and multiplicity".into() });
                }
                let multiplicity = head[1].parse().map_err(|_| CorpusError { line, msg: format!("bad multiplicity `{}`", head[1]) })?;
                c.components.push(ExpectedComponent { tableau: head[0].to_string(), multiplicity, gens: split_gens(gens) });
            }
            "primary" => {
                let (t, gens) = val.split_once('|').ok_or_else(|| CorpusError { line, msg: "missing `|`".into() })?;
                c.primary.push((t.trim().to_string(), split_gens(gens)));
            }
            "expect" => c.expect = parse_products(val, line)?,
            _ => return Err(CorpusError { line, msg: format!("unknown key `{}`", key) }),
        }
    }
    for c in &cases {
        if c.m == 0 || c.input.0.is_empty() {
            return Err(CorpusError { line: 0, msg: format!("case `{}` lacks `m:` or `in:`", c.name) });
        }
    }
    Ok(cases)
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: String,
    pub failures: Vec<String>,
    pub product: BTreeMap<String, u64>,
    pub seconds: f64,
    /// Set when the pipeline itself failed.
    pub error: Option<String>,
    pub budget_exceeded: bool,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.error.is_none()
    }
}

fn parse_in(i: &QIdeal, gens: &[String]) -> Result<QIdeal, FusionError> {
    let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
    Ok(Ideal::parse(i.ring(), &refs)?)
}

fn check(case: &Case, f: &Fusion) -> Result<Vec<String>, FusionError> {
    let mut bad = Vec::new();
    if !case.relations.is_empty() {
        let fam = &f.family.f;
        let rel = parse_in(fam, &case.relations)?;
        let s = fam.ring().param_index().expect("family ring has s");
        let rel = rel.saturate_var(s)?;
        if !rel.equals(fam)? {
            bad.push(format!("relations: family is {:?}", fam.basis_strings()?));
        }
    }
    let got: BTreeMap<String, _> = f.components.iter().map(|c| (c.tableau.to_string(), c)).collect();
    let want: Vec<&str> = case.components.iter().map(|c| c.tableau.as_str()).collect();
    if case.components.len() != got.len() || want.iter().any(|t| !got.contains_key(*t)) {
        bad.push(format!("components: expected {:?}, got {:?}", want, got.keys().collect::<Vec<_>>()));
    }
    for ec in &case.components {
        let Some(c) = got.get(&ec.tableau) else { continue };
        if c.multiplicity != ec.multiplicity {
            bad.push(format!("{}: multiplicity {} expected {}", ec.tableau, c.multiplicity, ec.multiplicity));
        }
        let p = with_parameter(&c.prime)?;
        if !parse_in(&p, &ec.gens)?.equals(&p)? {
            bad.push(format!("{}: prime is {:?}", ec.tableau, p.basis_strings()?));
        }
    }
    for (t, gens) in &case.primary {
        let Some(c) = got.get(t) else { continue };
        let q = with_parameter(&c.primary)?;
        if !parse_in(&q, gens)?.equals(&q)? {
            bad.push(format!("{}: primary is {:?}", t, q.basis_strings()?));
        }
    }
    if !case.expect.is_empty() {
        let want = expected_product(case)?;
        let mut have = BTreeMap::new();
        for (t, k) in f.product() {
            *have.entry(product_key(&t, case.m)?).or_insert(0) += k;
        }
        if want != have {
            bad.push(format!("product: expected {:?}, got {:?}", want, have));
        }
    }
    Ok(bad)
}

pub fn run_case(case: &Case, opts: &FusionOptions) -> Outcome {
    let start = Instant::now();
    let mut out = Outcome {
        name: case.name.clone(),
        failures: vec![],
        product: BTreeMap::new(),
        seconds: 0.0,
        error: None,
        budget_exceeded: false,
    };
    let run = || -> Result<(Fusion, Vec<String>), FusionError> {
        let a = Tableau::parse(&case.input.0, case.m)?;
        let b = Tableau::parse(&case.input.1, case.m)?;
        let f = fuse(&a, &b, opts)?;
        let bad = check(case, &f)?;
        Ok((f, bad))
    };
    match run() {
        Ok((f, bad)) => {
            out.product = f.product();
            out.failures = bad;
        }
        Err(e) => {
            out.budget_exceeded = e.is_budget();
            out.error = Some(e.to_string());
        }
    }
    out.seconds = start.elapsed().as_secs_f64();
    out
}

/// Runs every case in parallel; the result keeps the corpus order.
pub fn run_all(cases: &[Case], opts: &FusionOptions) -> Vec<Outcome> {
    cases.par_iter().map(|c| run_case(c, opts)).collect()
}
