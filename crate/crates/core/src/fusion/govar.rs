//! Ideals of generalized orbital varieties `X(tau)` in the nilpotent slice.

use crate::error::FusionError;
use crate::ideal::{certify_prime, minimal_primes, Ideal};
use crate::fusion::rank::{rank_conditions, PivotPolicy};
use crate::poly::Polynomial;
use crate::slice::{build_u_nilpotent, submatrix, SliceMatrix};
use crate::tableau::{rho_dot, Tableau};
use crate::{QIdeal, QPoly, Rational};

#[derive(Clone, Debug)]
pub struct GovarIdeal {
    pub tableau: Tableau,
    pub ideal: QIdeal,
    /// Primality proven by the structural certificate.
    pub certified: bool,
    pub dimension: usize,
}

/// `rho_dot(lambda - mu)` for a tableau: the dimension of `X(tau)`.
pub fn expected_dimension(tau: &Tableau) -> usize {
    let nu: Vec<i64> = tau.shape().iter().zip(tau.weight()).map(|(&l, w)| l as i64 - w as i64).collect();
    rho_dot(&nu) as usize
}

pub(crate) fn trim(nu: &[usize]) -> Vec<usize> {
    nu.iter().copied().filter(|&x| x > 0).collect()
}

/// Saturate by each witness ideal in turn, skipping duplicates.
pub(crate) fn saturate_all(mut cur: QIdeal, witnesses: Vec<Vec<QPoly>>) -> Result<QIdeal, FusionError> {
    let mut done: Vec<Vec<QPoly>> = Vec::new();
    let mut ws = witnesses;
    ws.sort_by_key(|w| w.len());
    for w in ws {
        let mut key = w.clone();
        key.sort_by_key(|p| p.to_string());
        if done.contains(&key) {
            continue;
        }
        done.push(key);
        let wi = Ideal::new(cur.ring(), w).with_budget(cur.budget());
        cur = cur.saturate(&wi)?;
    }
    Ok(cur)
}

/// Conditions `rank (A_i)^c = p - #(first c columns of lambda(i))` on the nilpotent slice.
pub fn orbit_conditions(tau: &Tableau, slice: &SliceMatrix<Rational>) -> Result<(Vec<QPoly>, Vec<Vec<QPoly>>), FusionError> {
    let ring = slice.ring().clone();
    let zero = Polynomial::zero(&ring);
    let mut gens = Vec::new();
    let mut wits = Vec::new();
    let mut last_p = 0;
    for i in 1..=tau.m() {
        let p = slice.layout.prefix(i);
        if p == 0 || p == last_p {
            continue;
        }
        last_p = p;
        let a = submatrix(slice, p, true)?;
        let rc = rank_conditions(&a, &zero, &trim(&tau.sub_shape(i)), PivotPolicy::Units)?;
        gens.extend(rc.upper);
        wits.extend(rc.witnesses);
    }
    Ok((gens, wits))
}

/// Prime ideal of `X(tau)` in the coordinate ring of the nilpotent slice of weight `mu(tau)`.
pub fn govar_ideal(tau: &Tableau, budget: u64) -> Result<GovarIdeal, FusionError> {
    let mu = tau.weight();
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(FusionError::Tableau(crate::TableauError::Invalid(format!("weight {:?} of {} is not dominant", mu, tau))));
    }
    let slice = build_u_nilpotent::<Rational>(&mu)?;
    let ring = slice.ring().clone();
    let (gens, wits) = orbit_conditions(tau, &slice)?;
    let k = Ideal::new(&ring, gens).with_budget(budget);
    let cur = saturate_all(k, wits)?.reduced()?;
    let target = expected_dimension(tau);
    if cur.dimension()? == Some(target) && certify_prime(&cur)? {
        return Ok(GovarIdeal { tableau: tau.clone(), ideal: cur, certified: true, dimension: target });
    }
    let primes = minimal_primes(&cur)?;
    let top: Vec<_> = primes.into_iter().filter(|p| p.dimension == target).collect();
    match top.len() {
        1 => {
            let p = top.into_iter().next().unwrap();
            Ok(GovarIdeal { tableau: tau.clone(), ideal: p.ideal, certified: p.certified, dimension: target })
        }
        n => Err(FusionError::TheoryViolation(format!(
            "X({}) should have a unique component of dimension {}, found {}",
            tau, target, n
        ))),
    }
}
