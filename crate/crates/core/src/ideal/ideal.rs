//! Ideals of polynomial rings over an exact field.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::AlgebraError;
use crate::ideal::groebner::{groebner_basis, normal_form, DEFAULT_BUDGET};
use crate::ideal::hilbert;
use crate::poly::{ExactField, Monomial, MonomialOrder, Polynomial, Ring, RingRef, Var};

/// Finitely generated ideal with a per-order cache of reduced Groebner bases.
pub struct Ideal<C: ExactField> {
    ring: RingRef,
    gens: Vec<Polynomial<C>>,
    budget: u64,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial<C>>>>>,
}

impl<C: ExactField> Clone for Ideal<C> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            budget: self.budget,
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl<C: ExactField> fmt::Debug for Ideal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<C: ExactField> fmt::Display for Ideal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, g) in self.gens.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ")")
    }
}

impl<C: ExactField> Ideal<C> {
    /// Panics if a generator belongs to another ring.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial<C>>) -> Self {
        Self::try_new(ring, gens).expect("generators from a different ring")
    }

    pub fn try_new(ring: &RingRef, gens: Vec<Polynomial<C>>) -> Result<Self, AlgebraError> {
        let mut g = Vec::with_capacity(gens.len());
        for p in gens {
            if **p.ring() != **ring {
                return Err(AlgebraError::RingMismatch);
            }
            if !p.is_zero() && !g.contains(&p) {
                g.push(p);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: g, budget: DEFAULT_BUDGET, cache: Mutex::new(HashMap::new()) })
    }

    pub fn parse(ring: &RingRef, gens: &[&str]) -> Result<Self, AlgebraError> {
        let g = gens.iter().map(|s| Polynomial::parse(ring, s)).collect::<Result<Vec<_>, _>>()?;
        Self::try_new(ring, g)
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self::new(ring, vec![])
    }

    pub fn unit(ring: &RingRef) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)])
    }

    /// Same generators, different reduction budget; derived ideals inherit it.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    fn derived(&self, ring: &RingRef, gens: Vec<Polynomial<C>>) -> Self {
        Self::new(ring, gens).with_budget(self.budget)
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<C>] {
        &self.gens
    }

    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<Vec<Polynomial<C>>>, AlgebraError> {
        if let Some(g) = self.cache.lock().expect("cache lock").get(order) {
            return Ok(g.clone());
        }
        let gb = Arc::new(groebner_basis(&self.ring, &self.gens, order, self.budget)?);
        self.cache.lock().expect("cache lock").insert(order.clone(), gb.clone());
        Ok(gb)
    }

    /// Reduced basis in degree reverse lexicographic order.
    pub fn gb(&self) -> Result<Arc<Vec<Polynomial<C>>>, AlgebraError> {
        self.groebner(&MonomialOrder::DegRevLex)
    }

    /// The ideal generated by its own reduced basis.
    pub fn reduced(&self) -> Result<Self, AlgebraError> {
        let g = self.gb()?;
        let r = self.derived(&self.ring, g.to_vec());
        r.cache.lock().expect("cache lock").insert(MonomialOrder::DegRevLex, g);
        Ok(r)
    }

    pub fn is_unit(&self) -> Result<bool, AlgebraError> {
        let g = self.gb()?;
        Ok(g.len() == 1 && g[0].is_constant())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial<C>) -> Result<Polynomial<C>, AlgebraError> {
        Ok(normal_form(f, &self.gb()?, &MonomialOrder::DegRevLex))
    }

    pub fn contains(&self, f: &Polynomial<C>) -> Result<bool, AlgebraError> {
        if **f.ring() != *self.ring {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, o: &Self) -> Result<bool, AlgebraError> {
        for g in &o.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals (same reduced basis).
    pub fn equals(&self, o: &Self) -> Result<bool, AlgebraError> {
        if *self.ring != *o.ring {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(*self.gb()? == *o.gb()?)
    }

    pub fn sum(&self, o: &Self) -> Result<Self, AlgebraError> {
        if *self.ring != *o.ring {
            return Err(AlgebraError::RingMismatch);
        }
        let mut g = self.gens.clone();
        g.extend(o.gens.iter().cloned());
        Ok(self.derived(&self.ring, g))
    }

    pub fn with_gens(&self, extra: &[Polynomial<C>]) -> Result<Self, AlgebraError> {
        let o = Self::try_new(&self.ring, extra.to_vec())?;
        self.sum(&o)
    }

    pub fn product(&self, o: &Self) -> Result<Self, AlgebraError> {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &o.gens {
                g.push(a.try_mul(b)?);
            }
        }
        Ok(self.derived(&self.ring, g))
    }

    /// Move to another ring, matching variables by name.
    pub fn embed(&self, target: &RingRef) -> Result<Self, AlgebraError> {
        let g = self.gens.iter().map(|p| p.embed(target)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.derived(target, g))
    }

    /// Substitute a constant for variable `n`.
    pub fn specialize(&self, n: usize, value: &C) -> Self {
        let g = self.gens.iter().map(|p| p.specialize(n, value)).collect();
        self.derived(&self.ring, g)
    }

    /// Intersection with the subring on the remaining variables, expressed in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Self, AlgebraError> {
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let order = MonomialOrder::elimination(vars);
        let gb = self.groebner(&order)?;
        let kept: Vec<Polynomial<C>> = gb.iter().filter(|p| vars.iter().all(|&v| !p.uses_var(v))).cloned().collect();
        Ok(self.derived(&self.ring, kept))
    }

    /// Extend the ring by fresh variables, returning the extended ring and the embedded generators.
    fn extend(&self, names: &[&str]) -> Result<(RingRef, Vec<Polynomial<C>>, Vec<usize>), AlgebraError> {
        let mut extra = Vec::new();
        let mut probe = (*self.ring).extended(&[])?;
        for n in names {
            let v = probe.fresh_name(n);
            probe = probe.extended(&[(v.clone(), 1)])?;
            extra.push((v, 1));
        }
        let big = self.ring.extended(&extra)?;
        let g = self.gens.iter().map(|p| p.embed(&big)).collect::<Result<Vec<_>, _>>()?;
        let idx = (self.ring.nvars()..big.nvars()).collect();
        Ok((big, g, idx))
    }

    /// Eliminate the auxiliary variables of an extension and map back to this ring.
    fn contract(&self, big: &RingRef, gens: Vec<Polynomial<C>>, aux: &[usize]) -> Result<Self, AlgebraError> {
        let e = self.derived(big, gens).eliminate(aux)?;
        let g = e.gens.iter().map(|p| p.embed(&self.ring)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.derived(&self.ring, g))
    }

    pub fn intersect(&self, o: &Self) -> Result<Self, AlgebraError> {
        if *self.ring != *o.ring {
            return Err(AlgebraError::RingMismatch);
        }
        if self.is_zero() || o.is_zero() {
            return Ok(self.derived(&self.ring, vec![]));
        }
        let (big, g1, aux) = self.extend(&["_t"])?;
        let t = Polynomial::var(&big, aux[0]);
        let one_t = &Polynomial::one(&big) - &t;
        let mut g: Vec<Polynomial<C>> = g1.iter().map(|p| &t * p).collect();
        for p in &o.gens {
            g.push(&one_t * &p.embed(&big)?);
        }
        self.contract(&big, g, &aux)
    }

    /// `I : f`.
    pub fn quotient_elem(&self, f: &Polynomial<C>) -> Result<Self, AlgebraError> {
        if f.is_zero() {
            return Ok(Self::unit(&self.ring).with_budget(self.budget));
        }
        let fi = self.derived(&self.ring, vec![f.clone()]);
        let inter = self.intersect(&fi)?;
        let g = inter.gens.iter().map(|p| p.div_exact(f)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.derived(&self.ring, g))
    }

    /// `I : J`.
    pub fn quotient(&self, o: &Self) -> Result<Self, AlgebraError> {
        let mut acc: Option<Self> = None;
        for g in &o.gens {
            let q = self.quotient_elem(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Self::unit(&self.ring).with_budget(self.budget)))
    }

    /// `I : f^inf` by the Rabinowitsch trick.
    pub fn saturate_elem(&self, f: &Polynomial<C>) -> Result<Self, AlgebraError> {
        if f.is_zero() {
            return Ok(Self::unit(&self.ring).with_budget(self.budget));
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let (big, mut g, aux) = self.extend(&["_u"])?;
        let u = Polynomial::var(&big, aux[0]);
        g.push(&Polynomial::one(&big) - &(&u * &f.embed(&big)?));
        self.contract(&big, g, &aux)
    }

    /// `I : f^inf` by iterated quotients until the chain stabilises.
    pub fn saturate_elem_iterated(&self, f: &Polynomial<C>) -> Result<Self, AlgebraError> {
        let mut cur = self.clone();
        loop {
            let next = cur.quotient_elem(f)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `I : x_n^inf`. Weighted-homogeneous ideals use a reverse-lexicographic basis with `x_n` last.
    pub fn saturate_var(&self, n: usize) -> Result<Self, AlgebraError> {
        if !self.gens.iter().all(|g| g.is_weighted_homogeneous()) {
            return self.saturate_elem(&Polynomial::var(&self.ring, n));
        }
        let mut vars: Vec<(Var, u32)> = Vec::new();
        for k in 0..self.ring.nvars() {
            if k != n {
                vars.push((self.ring.var(k).clone(), self.ring.weights()[k]));
            }
        }
        vars.push((self.ring.var(n).clone(), self.ring.weights()[n]));
        let perm = Ring::new(vars.iter().map(|v| v.0.clone()).collect(), vars.iter().map(|v| v.1).collect())?;
        let last = perm.nvars() - 1;
        let g = self.gens.iter().map(|p| p.embed(&perm)).collect::<Result<Vec<_>, _>>()?;
        let order = MonomialOrder::WeightedDegRevLex(perm.weights().to_vec().into());
        let gb = groebner_basis(&perm, &g, &order, self.budget)?;
        let mut out = Vec::with_capacity(gb.len());
        for p in gb {
            let k = p.terms().map(|(m, _)| m.exp(last)).min().unwrap_or(0);
            let q = if k == 0 {
                p
            } else {
                Polynomial::from_terms(&perm, p.terms().map(|(m, c)| (m.with_exp(last, m.exp(last) - k), c.clone())))
            };
            out.push(q.embed(&self.ring)?);
        }
        Ok(self.derived(&self.ring, out))
    }

    /// `I : W^inf` via one auxiliary variable: `(I R[z] : (sum_i z^(i-1) w_i)^inf) cap R`.
    pub fn saturate(&self, w: &Self) -> Result<Self, AlgebraError> {
        let ws: Vec<&Polynomial<C>> = w.gens.iter().collect();
        match ws.len() {
            0 => return Ok(self.clone()),
            1 => return self.saturate_elem(ws[0]),
            _ => {}
        }
        if ws.iter().any(|p| p.is_constant()) {
            return Ok(self.clone());
        }
        let (big, mut g, aux) = self.extend(&["_z", "_u"])?;
        let z = Polynomial::var(&big, aux[0]);
        let u = Polynomial::var(&big, aux[1]);
        let mut h = Polynomial::zero(&big);
        let mut zp = Polynomial::one(&big);
        for p in &ws {
            h = &h + &(&zp * &p.embed(&big)?);
            zp = &zp * &z;
        }
        g.push(&Polynomial::one(&big) - &(&u * &h));
        self.contract(&big, g, &aux)
    }

    /// `I : W^inf` as the intersection of the saturations by each generator.
    pub fn saturate_by_parts(&self, w: &Self) -> Result<Self, AlgebraError> {
        let mut acc: Option<Self> = None;
        for g in &w.gens {
            let s = self.saturate_elem(g)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.clone()))
    }

    /// `f` lies in the radical: `1 in I + (1 - u f)`.
    pub fn radical_contains(&self, f: &Polynomial<C>) -> Result<bool, AlgebraError> {
        let (big, mut g, aux) = self.extend(&["_u"])?;
        let u = Polynomial::var(&big, aux[0]);
        g.push(&Polynomial::one(&big) - &(&u * &f.embed(&big)?));
        self.derived(&big, g).is_unit()
    }

    pub fn leading_monomials(&self) -> Result<Vec<Monomial>, AlgebraError> {
        let order = MonomialOrder::DegRevLex;
        Ok(self.gb()?.iter().filter_map(|p| p.lead(&order).map(|l| l.0)).collect())
    }

    /// Krull dimension of `R/I`; `None` for the unit ideal.
    pub fn dimension(&self) -> Result<Option<usize>, AlgebraError> {
        Ok(hilbert::max_independent_set(&self.leading_monomials()?, self.ring.nvars()))
    }

    /// Degree of `R/I` (sum over top-dimensional components with multiplicity); zero for the unit ideal.
    pub fn degree(&self) -> Result<u64, AlgebraError> {
        Ok(hilbert::dimension_degree(&self.leading_monomials()?, self.ring.nvars()).map_or(0, |x| x.1))
    }

    pub fn hilbert_numerator(&self) -> Result<Vec<num_bigint::BigInt>, AlgebraError> {
        Ok(hilbert::hilbert_numerator(&self.leading_monomials()?))
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_weighted_homogeneous())
    }

    /// Reduced basis rendered as strings.
    pub fn basis_strings(&self) -> Result<Vec<String>, AlgebraError> {
        Ok(self.gb()?.iter().map(|p| p.to_string()).collect())
    }
}
