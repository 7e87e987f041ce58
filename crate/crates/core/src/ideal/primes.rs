//! Minimal primes by factor splitting, with a structural primality certificate.

use crate::error::AlgebraError;
use crate::ideal::ideal::Ideal;
use crate::poly::{ExactField, Monomial, Polynomial};

/// A minimal prime candidate.
#[derive(Clone, Debug)]
pub struct PrimeComponent<C: ExactField> {
    pub ideal: Ideal<C>,
    /// `false` when the splitting ran out of moves without proving primality.
    pub certified: bool,
    pub dimension: usize,
}

/// Greatest common divisor, via the generator of `(a) cap (b)`.
pub fn gcd<C: ExactField>(a: &Polynomial<C>, b: &Polynomial<C>, budget: u64) -> Result<Polynomial<C>, AlgebraError> {
    let ring = a.ring();
    if a.is_zero() {
        return Ok(b.clone());
    }
    if b.is_zero() {
        return Ok(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Polynomial::one(ring));
    }
    let ia = Ideal::new(ring, vec![a.clone()]).with_budget(budget);
    let ib = Ideal::new(ring, vec![b.clone()]).with_budget(budget);
    let l = ia.intersect(&ib)?.reduced()?;
    if l.gens().len() != 1 {
        return Err(AlgebraError::Invalid("intersection of principal ideals is not principal".into()));
    }
    (a * b).div_exact(&l.gens()[0])
}

fn monomial_content<C: ExactField>(g: &Polynomial<C>) -> Monomial {
    let mut it = g.terms().map(|(m, _)| *m);
    let first = it.next().unwrap_or_default();
    it.fold(first, |a, m| a.gcd(&m))
}

/// A nontrivial factorisation `g = a * b` of some basis element, if one is visible.
fn find_split<C: ExactField>(gb: &[Polynomial<C>], budget: u64) -> Result<Option<(Polynomial<C>, Polynomial<C>)>, AlgebraError> {
    for g in gb {
        if g.is_constant() {
            continue;
        }
        let ring = g.ring();
        let c = monomial_content(g);
        if !c.is_one() {
            let x = (0..ring.nvars()).find(|&n| c.exp(n) > 0).unwrap();
            let xv = Polynomial::var(ring, x);
            let rest = g.div_exact(&xv)?;
            if rest.is_constant() {
                continue;
            }
            if c.degree() == 1 && g.nterms() == 1 {
                continue;
            }
            if rest.nterms() == 1 && rest.support_mask() == xv.support_mask() {
                // pure power: replace by the variable itself
                return Ok(Some((xv.clone(), xv)));
            }
            return Ok(Some((xv, rest)));
        }
    }
    for g in gb {
        if g.is_constant() {
            continue;
        }
        let ring = g.ring();
        for x in 0..ring.nvars() {
            let d = g.degree_in(x);
            if d == 0 {
                continue;
            }
            if d == 1 {
                let a = g.coefficient_of(x, 1);
                let b = g.coefficient_of(x, 0);
                if a.is_constant() {
                    continue;
                }
                let h = gcd(&a, &b, budget)?;
                if !h.is_constant() {
                    return Ok(Some((h.clone(), g.div_exact(&h)?)));
                }
            } else {
                let h = gcd(g, &g.derivative(x), budget)?;
                if !h.is_constant() {
                    return Ok(Some((h.clone(), g.div_exact(&h)?)));
                }
            }
        }
    }
    Ok(None)
}

/// An irreducible polynomial test that only answers "yes" when it can prove it.
pub fn certainly_irreducible<C: ExactField>(g: &Polynomial<C>, budget: u64) -> Result<bool, AlgebraError> {
    if g.is_constant() {
        return Ok(false);
    }
    if g.total_degree() == Some(1) {
        return Ok(true);
    }
    for x in 0..g.ring().nvars() {
        if g.degree_in(x) == 1 {
            let a = g.coefficient_of(x, 1);
            let b = g.coefficient_of(x, 0);
            if b.is_zero() {
                continue;
            }
            if gcd(&a, &b, budget)?.is_constant() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Eliminate variables that occur linearly with a constant coefficient, then require at most
/// one remaining generator, which must be irreducible.
pub fn certify_prime<C: ExactField>(ideal: &Ideal<C>) -> Result<bool, AlgebraError> {
    let ring = ideal.ring().clone();
    let budget = ideal.budget();
    let mut cur = ideal.reduced()?;
    if cur.is_unit()? {
        return Ok(false);
    }
    loop {
        let gb = cur.gb()?;
        if gb.is_empty() {
            return Ok(true);
        }
        let mut found = None;
        'outer: for (n, g) in gb.iter().enumerate() {
            for x in 0..ring.nvars() {
                if g.degree_in(x) == 1 {
                    let a = g.coefficient_of(x, 1);
                    if a.is_constant() {
                        found = Some((n, x, a.constant_term()));
                        break 'outer;
                    }
                }
            }
        }
        let Some((n, x, a)) = found else { break };
        let g = &gb[n];
        let rest = g - &Polynomial::var(&ring, x).scale(&a);
        let value = rest.scale(&(-(C::one() / a)));
        let others: Vec<Polynomial<C>> =
            gb.iter().enumerate().filter(|(k, _)| *k != n).map(|(_, p)| p.substitute(x, &value)).collect();
        cur = Ideal::new(&ring, others).with_budget(budget);
    }
    let gb = cur.gb()?;
    if gb.len() == 1 {
        return certainly_irreducible(&gb[0], budget);
    }
    Ok(false)
}

/// Minimal primes of `ideal`. Leaves of the splitting are certified where possible.
pub fn minimal_primes<C: ExactField>(ideal: &Ideal<C>) -> Result<Vec<PrimeComponent<C>>, AlgebraError> {
    let budget = ideal.budget();
    let mut stack = vec![ideal.clone()];
    let mut leaves: Vec<Ideal<C>> = Vec::new();
    while let Some(j) = stack.pop() {
        if j.is_unit()? {
            continue;
        }
        let gb = j.gb()?;
        match find_split(&gb, budget)? {
            Some((a, b)) => {
                let ja = j.with_gens(&[a.clone()])?;
                if a == b {
                    stack.push(ja);
                } else {
                    stack.push(ja);
                    stack.push(j.with_gens(&[b])?);
                }
            }
            None => {
                let r = j.reduced()?;
                if !leaves.iter().any(|l| l.equals(&r).unwrap_or(false)) {
                    leaves.push(r);
                }
            }
        }
    }
    // drop non-minimal leaves
    let mut keep = vec![true; leaves.len()];
    for a in 0..leaves.len() {
        for b in 0..leaves.len() {
            if a != b && keep[b] && keep[a] && leaves[a].contains_ideal(&leaves[b])? {
                keep[a] = false;
            }
        }
    }
    let mut out = Vec::new();
    for (l, k) in leaves.into_iter().zip(keep) {
        if !k {
            continue;
        }
        let certified = certify_prime(&l)?;
        let dimension = l.dimension()?.expect("proper ideal");
        out.push(PrimeComponent { ideal: l, certified, dimension });
    }
    Ok(out)
}

/// Multiplicity of the prime `p` in `ideal`, given the other minimal primes:
/// `deg(ideal : (cap others)^inf) / deg(p)`.
pub fn primary_multiplicity<C: ExactField>(
    ideal: &Ideal<C>,
    p: &Ideal<C>,
    others: &[Ideal<C>],
) -> Result<(Ideal<C>, u64), AlgebraError> {
    let primary = primary_component(ideal, others)?;
    let dq = primary.degree()?;
    let dp = p.degree()?;
    if dp == 0 || dq % dp != 0 {
        return Err(AlgebraError::Invalid(format!("degree {} is not a multiple of {}", dq, dp)));
    }
    Ok((primary, dq / dp))
}

/// `ideal : (cap others)^inf`.
pub fn primary_component<C: ExactField>(ideal: &Ideal<C>, others: &[Ideal<C>]) -> Result<Ideal<C>, AlgebraError> {
    let mut inter: Option<Ideal<C>> = None;
    for o in others {
        inter = Some(match inter {
            None => o.clone(),
            Some(a) => a.intersect(o)?,
        });
    }
    match inter {
        None => Ok(ideal.clone()),
        Some(w) => ideal.saturate(&w.reduced()?),
    }
}
