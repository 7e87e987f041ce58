//! Fusion of generalized orbital varieties: rank conditions, the family over the `s`-line,
//! its zero fibre, and the components with their multiplicities.

pub mod govar;
pub mod rank;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::FusionError;
use crate::ideal::{minimal_primes, primary_multiplicity, Ideal, DEFAULT_BUDGET};
use crate::poly::{Polynomial, Var};
use crate::slice::{build_u, build_u_nilpotent, submatrix, SliceMatrix};
use crate::tableau::{dominance_padding, rho_dot, sigma, Tableau};
use crate::{QIdeal, QPoly, Rational};

pub use govar::{expected_dimension, govar_ideal, GovarIdeal};
pub use rank::{column_count, fitting_generators, generic_jordan_type, generic_rank, rank_bounds, rank_conditions, rank_ideal, Eigen, PivotPolicy, RankBound};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Saturate by `s` and by the nonvanishing minors.
    Paper,
    /// Additionally keep only the unique top-dimensional minimal prime of the family.
    Strict,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "paper" => Ok(Mode::Paper),
            "strict" => Ok(Mode::Strict),
            _ => Err(format!("unknown mode `{}`", s)),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FusionOptions {
    pub mode: Mode,
    pub budget: u64,
}

impl Default for FusionOptions {
    fn default() -> Self {
        FusionOptions { mode: Mode::Paper, budget: DEFAULT_BUDGET }
    }
}

/// Two tableaux padded so that the summed weight is dominant.
#[derive(Clone, Debug)]
pub struct FusionProblem {
    pub m: usize,
    pub input: (Tableau, Tableau),
    pub left: Tableau,
    pub right: Tableau,
    pub lambda1: Vec<usize>,
    pub lambda2: Vec<usize>,
    pub lambda: Vec<usize>,
    pub mu1: Vec<usize>,
    pub mu2: Vec<usize>,
    pub mu: Vec<usize>,
}

fn add(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl FusionProblem {
    pub fn new(a: &Tableau, b: &Tableau) -> Result<Self, FusionError> {
        let (left, right) = dominance_padding(a, b)?;
        let (lambda1, lambda2) = (left.shape(), right.shape());
        let (mu1, mu2) = (left.weight(), right.weight());
        Ok(FusionProblem {
            m: a.m(),
            input: (a.clone(), b.clone()),
            lambda: add(&lambda1, &lambda2),
            mu: add(&mu1, &mu2),
            left,
            right,
            lambda1,
            lambda2,
            mu1,
            mu2,
        })
    }

    /// Inputs given by Lusztig data, normalised through the dominant section.
    pub fn from_data(n1: &[usize], n2: &[usize], m: usize) -> Result<Self, FusionError> {
        Self::new(&sigma(n1, m)?, &sigma(n2, m)?)
    }

    /// `rho_dot(lambda - mu)`: the dimension of every component of the zero fibre.
    pub fn expected_dimension(&self) -> usize {
        let nu: Vec<i64> = self.lambda.iter().zip(&self.mu).map(|(&l, &w)| l as i64 - w as i64).collect();
        rho_dot(&nu) as usize
    }
}

/// The family ideal over the `s`-line.
#[derive(Clone, Debug)]
pub struct Family {
    pub slice: SliceMatrix<Rational>,
    /// Rank conditions before any saturation.
    pub i0: QIdeal,
    /// `I0 : s^inf`.
    pub bare: QIdeal,
    /// The family: saturated by `s` and the nonvanishing minors (and reduced to its top prime in strict mode).
    pub f: QIdeal,
}

fn trimmed(nu: &[usize]) -> Vec<usize> {
    govar::trim(nu)
}

pub fn family_ideal(problem: &FusionProblem, opts: &FusionOptions) -> Result<Family, FusionError> {
    let slice = build_u::<Rational>(&problem.mu1, &problem.mu2)?;
    let ring = slice.ring().clone();
    let s_idx = ring.param_index().expect("family ring has s");
    let s = Polynomial::var(&ring, s_idx);
    let zero = Polynomial::zero(&ring);
    let policy = PivotPolicy::UnitsAndParam(s_idx);
    let mut gens: Vec<QPoly> = Vec::new();
    let mut wits: Vec<Vec<QPoly>> = Vec::new();
    let mut last_p = 0;
    for i in 1..=problem.m {
        let p = slice.layout.prefix(i);
        if p == 0 || p == last_p {
            continue;
        }
        last_p = p;
        let a = submatrix(&slice, p, true)?;
        for (e, tab) in [(&zero, &problem.left), (&s, &problem.right)] {
            let rc = rank_conditions(&a, e, &trimmed(&tab.sub_shape(i)), policy)?;
            gens.extend(rc.upper);
            wits.extend(rc.witnesses);
        }
    }
    let i0 = Ideal::new(&ring, gens).with_budget(opts.budget);
    let bare = i0.saturate_var(s_idx)?;
    let mut f = govar::saturate_all(bare.clone(), wits)?;
    f = f.saturate_var(s_idx)?.reduced()?;
    if opts.mode == Mode::Strict {
        let target = problem.expected_dimension() + 1;
        let top: Vec<_> = minimal_primes(&f)?.into_iter().filter(|p| p.dimension == target).collect();
        if top.len() != 1 {
            return Err(FusionError::TheoryViolation(format!(
                "family should have a unique component of dimension {}, found {}",
                target,
                top.len()
            )));
        }
        f = top.into_iter().next().unwrap().ideal;
    }
    Ok(Family { slice, i0, bare, f })
}

/// `(F + (s), F|_{s=0})`: the zero fibre in the family ring and in the nilpotent ring.
pub fn zero_fiber(f: &QIdeal) -> Result<(QIdeal, QIdeal), FusionError> {
    let ring = f.ring().clone();
    let s_idx = ring.param_index().ok_or_else(|| FusionError::Algebra(crate::AlgebraError::UnknownVariable("s".into())))?;
    let with_s = f.with_gens(&[Polynomial::var(&ring, s_idx)])?.reduced()?;
    let small = ring.without(&[s_idx])?;
    let zero = Rational::from_integer(0.into());
    let gens = with_s
        .gens()
        .iter()
        .map(|g| g.specialize(s_idx, &zero))
        .filter(|g| !g.is_zero())
        .map(|g| g.embed(&small))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((with_s, Ideal::new(&small, gens).with_budget(f.budget()).reduced()?))
}

/// Add `s` back to an ideal of the nilpotent ring.
pub fn with_parameter(i: &QIdeal) -> Result<QIdeal, FusionError> {
    let ring = i.ring().extended(&[(Var::Param, 1)])?;
    let s = Polynomial::var(&ring, ring.nvars() - 1);
    Ok(i.embed(&ring)?.with_gens(&[s])?)
}

/// A component of the zero fibre.
#[derive(Clone, Debug)]
pub struct Component {
    pub tableau: Tableau,
    pub stable: Tableau,
    pub prime: QIdeal,
    pub primary: QIdeal,
    pub multiplicity: u64,
    pub certified: bool,
}

/// Candidates `tau` in `YT(lambda)_mu` with `J0 inside P_tau`.
pub fn identify_components(j0: &QIdeal, lambda: &[usize], mu: &[usize], budget: u64) -> Result<Vec<GovarIdeal>, FusionError> {
    let cands = Tableau::enumerate(lambda, mu);
    let found: Vec<Result<Option<GovarIdeal>, FusionError>> = cands
        .par_iter()
        .map(|tau| {
            let g = govar_ideal(tau, budget)?;
            let p = g.ideal.embed(j0.ring())?;
            if p.contains_ideal(j0)? {
                Ok(Some(GovarIdeal { ideal: p, ..g }))
            } else {
                Ok(None)
            }
        })
        .collect();
    let mut out = Vec::new();
    for r in found {
        if let Some(g) = r? {
            out.push(g);
        }
    }
    Ok(out)
}

/// Structure constants in stable-tableau form, plus all intermediate data.
#[derive(Clone, Debug)]
pub struct Fusion {
    pub problem: FusionProblem,
    pub mode: Mode,
    pub family: Family,
    pub j: QIdeal,
    pub j0: QIdeal,
    pub components: Vec<Component>,
    pub degree_j: u64,
    pub dimension_j: usize,
}

pub fn fuse(a: &Tableau, b: &Tableau, opts: &FusionOptions) -> Result<Fusion, FusionError> {
    let problem = FusionProblem::new(a, b)?;
    fuse_problem(problem, opts)
}

pub fn fuse_problem(problem: FusionProblem, opts: &FusionOptions) -> Result<Fusion, FusionError> {
    let family = family_ideal(&problem, opts)?;
    let (j, j0) = zero_fiber(&family.f)?;
    let target = problem.expected_dimension();
    let dim = j0.dimension()?;
    if dim != Some(target) {
        return Err(FusionError::TheoryViolation(format!("zero fibre has dimension {:?}, expected {}", dim, target)));
    }
    let found = identify_components(&j0, &problem.lambda, &problem.mu, opts.budget)?;
    if found.is_empty() {
        return Err(FusionError::TheoryViolation("no tableau component contains the zero fibre".into()));
    }
    let primes: Vec<QIdeal> = found.iter().map(|g| g.ideal.clone()).collect();
    let mut components = Vec::new();
    for (k, g) in found.iter().enumerate() {
        let others: Vec<QIdeal> = primes.iter().enumerate().filter(|(n, _)| *n != k).map(|(_, p)| p.clone()).collect();
        let (primary, mult) = primary_multiplicity(&j0, &g.ideal, &others)?;
        components.push(Component {
            tableau: g.tableau.clone(),
            stable: g.tableau.strip_padding(),
            prime: g.ideal.clone(),
            primary: primary.reduced()?,
            multiplicity: mult,
            certified: g.certified,
        });
    }
    verify_components(&problem, &components, target)?;
    let degree_j = j0.degree()?;
    let total: u64 = components.iter().map(|c| c.multiplicity * c.prime.degree().unwrap_or(0)).sum();
    if total != degree_j {
        return Err(FusionError::TheoryViolation(format!(
            "degree of the zero fibre is {} but the components account for {}",
            degree_j, total
        )));
    }
    Ok(Fusion { problem, mode: opts.mode, family, j, j0, components, degree_j, dimension_j: target })
}

/// Each prime must have the expected dimension and its generic Jordan types must recover the
/// Gelfand-Tsetlin pattern of its tableau.
fn verify_components(problem: &FusionProblem, components: &[Component], target: usize) -> Result<(), FusionError> {
    let nil = build_u_nilpotent::<Rational>(&problem.mu)?;
    let zero = Polynomial::zero(nil.ring());
    for c in components {
        let dim = c.prime.dimension()?;
        if dim != Some(target) {
            return Err(FusionError::TheoryViolation(format!("component {} has dimension {:?}, expected {}", c.tableau, dim, target)));
        }
        let p = c.prime.embed(nil.ring())?;
        let mut last = 0;
        for i in 1..=problem.m {
            let n = nil.layout.prefix(i);
            if n == 0 || n == last {
                continue;
            }
            last = n;
            let a = submatrix(&nil, n, true)?;
            let got = generic_jordan_type(&a, n, &zero, &p)?;
            let want = govar::trim(&c.tableau.sub_shape(i));
            if got != want {
                return Err(FusionError::TheoryViolation(format!(
                    "component {}: generic Jordan type of A_{} is {:?}, expected {:?}",
                    c.tableau, i, got, want
                )));
            }
        }
    }
    Ok(())
}

impl Fusion {
    /// Stable tableau -> multiplicity.
    pub fn product(&self) -> BTreeMap<String, u64> {
        let mut out = BTreeMap::new();
        for c in &self.components {
            *out.entry(c.stable.to_string()).or_insert(0) += c.multiplicity;
        }
        out
    }

    pub fn report(&self) -> Result<FusionReport, FusionError> {
        let mut components = Vec::new();
        for c in &self.components {
            let prime = with_parameter(&c.prime)?;
            let primary = with_parameter(&c.primary)?;
            components.push(ComponentReport {
                tableau: c.tableau.to_string(),
                stable: c.stable.to_string(),
                multiplicity: c.multiplicity,
                prime: prime.basis_strings()?,
                primary: primary.basis_strings()?,
                degree: c.prime.degree()?,
                certified: c.certified,
            });
        }
        Ok(FusionReport {
            input: [self.problem.input.0.to_string(), self.problem.input.1.to_string()],
            padded: [self.problem.left.to_string(), self.problem.right.to_string()],
            m: self.problem.m,
            mode: self.mode,
            mu: self.problem.mu.clone(),
            lambda: self.problem.lambda.clone(),
            components,
            degree_j: self.degree_j,
            dimension_j: self.dimension_j,
            family: self.family.f.basis_strings()?,
            zero_fiber: self.j.basis_strings()?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub tableau: String,
    pub stable: String,
    pub multiplicity: u64,
    pub prime: Vec<String>,
    pub primary: Vec<String>,
    pub degree: u64,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionReport {
    pub input: [String; 2],
    pub padded: [String; 2],
    pub m: usize,
    pub mode: Mode,
    pub mu: Vec<usize>,
    pub lambda: Vec<usize>,
    pub components: Vec<ComponentReport>,
    #[serde(rename = "degree_J")]
    pub degree_j: u64,
    #[serde(rename = "dimension_J")]
    pub dimension_j: usize,
    pub family: Vec<String>,
    pub zero_fiber: Vec<String>,
}
