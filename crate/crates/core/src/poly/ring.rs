//! Polynomial rings with named variables and a grading.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::poly::monomial::MAX_VARS;

/// A ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    /// `A[i,j,k]`: slot `k` of block `(i,j)` of a slice matrix (1-based).
    Slice { i: u8, j: u8, k: u8 },
    /// The deformation parameter `s`.
    Param,
    /// Anything else, including auxiliary variables.
    Named(String),
}

impl Var {
    pub fn slice(i: usize, j: usize, k: usize) -> Self {
        Var::Slice { i: i as u8, j: j as u8, k: k as u8 }
    }

    pub fn named(s: &str) -> Self {
        if s == "s" {
            Var::Param
        } else {
            Var::Named(s.to_string())
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Slice { i, j, k } => write!(f, "A[{},{},{}]", i, j, k),
            Var::Param => write!(f, "s"),
            Var::Named(n) => write!(f, "{}", n),
        }
    }
}

/// Ordered variable list plus positive integer weights.
#[derive(Debug, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<Var>,
    weights: Vec<u32>,
    index: HashMap<Var, usize>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(vars: Vec<Var>, weights: Vec<u32>) -> Result<RingRef, AlgebraError> {
        if vars.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(vars.len()));
        }
        if weights.len() != vars.len() || weights.iter().any(|&w| w == 0) {
            return Err(AlgebraError::Invalid("weights must be positive, one per variable".into()));
        }
        let mut index = HashMap::new();
        for (n, v) in vars.iter().enumerate() {
            if index.insert(v.clone(), n).is_some() {
                return Err(AlgebraError::Invalid(format!("duplicate variable {}", v)));
            }
        }
        Ok(Arc::new(Ring { vars, weights, index }))
    }

    /// Standard-graded ring on the given names.
    pub fn with_names(names: &[&str]) -> Result<RingRef, AlgebraError> {
        let vars: Vec<Var> = names.iter().map(|n| Var::named(n)).collect();
        let w = vec![1; vars.len()];
        Ring::new(vars, w)
    }

    /// Coordinate ring of the full slice `T_mu` (every block), optionally with `s`.
    pub fn slice(mu: &[usize], with_parameter: bool) -> Result<RingRef, AlgebraError> {
        Self::slice_ring(mu, with_parameter, false)
    }

    /// Coordinate ring of the block upper-triangular slice: blocks `(i,j)` with `i < j` only.
    pub fn upper_slice(mu: &[usize], with_parameter: bool) -> Result<RingRef, AlgebraError> {
        Self::slice_ring(mu, with_parameter, true)
    }

    fn slice_ring(mu: &[usize], with_parameter: bool, upper: bool) -> Result<RingRef, AlgebraError> {
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::Invalid(format!("{:?} is not a partition", mu)));
        }
        let m = mu.len();
        let mut vars = Vec::new();
        let mut weights = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if upper && j <= i {
                    continue;
                }
                for k in 1..=mu[i].min(mu[j]) {
                    vars.push(Var::slice(i + 1, j + 1, k));
                    // entry A_ij^k sits in the last row of block i, column k of block j
                    weights.push((mu[i] + 1 - k) as u32);
                }
            }
        }
        if with_parameter {
            vars.push(Var::Param);
            weights.push(1);
        }
        Ring::new(vars, weights)
    }

    /// This ring with extra variables appended after the existing ones.
    pub fn extended(&self, extra: &[(Var, u32)]) -> Result<RingRef, AlgebraError> {
        let mut vars = self.vars.clone();
        let mut weights = self.weights.clone();
        for (v, w) in extra {
            vars.push(v.clone());
            weights.push(*w);
        }
        Ring::new(vars, weights)
    }

    /// This ring with the listed variable indices removed.
    pub fn without(&self, drop: &[usize]) -> Result<RingRef, AlgebraError> {
        let mut vars = Vec::new();
        let mut weights = Vec::new();
        for n in 0..self.vars.len() {
            if !drop.contains(&n) {
                vars.push(self.vars[n].clone());
                weights.push(self.weights[n]);
            }
        }
        Ring::new(vars, weights)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn var(&self, n: usize) -> &Var {
        &self.vars[n]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, v: &Var) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn param_index(&self) -> Option<usize> {
        self.index_of(&Var::Param)
    }

    /// Fresh auxiliary variable name not present in the ring.
    pub fn fresh_name(&self, base: &str) -> Var {
        let mut n = 0;
        loop {
            let v = Var::Named(if n == 0 { base.to_string() } else { format!("{}{}", base, n) });
            if !self.index.contains_key(&v) {
                return v;
            }
            n += 1;
        }
    }
}
