//! Sparse polynomials in canonical form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::poly::monomial::Monomial;
use crate::poly::order::MonomialOrder;
use crate::poly::ring::{RingRef, Var};
use crate::poly::scalar::{ExactField, Scalar};

/// A polynomial: zero coefficients are never stored.
#[derive(Clone)]
pub struct Polynomial<C> {
    ring: RingRef,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> PartialEq for Polynomial<C> {
    fn eq(&self, o: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &o.ring) || *self.ring == *o.ring) && self.terms == o.terms
    }
}

impl<C: Scalar + std::hash::Hash> std::hash::Hash for Polynomial<C> {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.terms.hash(h);
    }
}

impl<C: Scalar + Eq> Eq for Polynomial<C> {}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: &RingRef, c: C) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn from_int(ring: &RingRef, c: i64) -> Self {
        Self::constant(ring, C::from_i64(c).expect("integer fits the scalar type"))
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// The `n`-th variable of the ring.
    pub fn var(ring: &RingRef, n: usize) -> Self {
        assert!(n < ring.nvars(), "variable index out of range");
        Self::monomial(ring, Monomial::var(n, 1), C::one())
    }

    pub fn var_named(ring: &RingRef, v: &Var) -> Result<Self, AlgebraError> {
        let n = ring.index_of(v).ok_or_else(|| AlgebraError::UnknownVariable(v.to_string()))?;
        Ok(Self::var(ring, n))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(ring: &RingRef, it: I) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, C> {
        self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> C {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                let s = x.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn same_ring(&self, o: &Self) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.ring, &o.ring) || *self.ring == *o.ring {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.same_ring(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.same_ring(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.same_ring(o)?;
        let mut r = Self::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (*m, x.clone() * c.clone())).collect(),
        }
    }

    /// Multiply by a monomial times a scalar.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(&self.ring);
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        r
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Maximum weighted degree under the ring's weights.
    pub fn weighted_degree(&self) -> Option<u64> {
        let w = self.ring.weights();
        self.terms.keys().map(|m| m.weighted_degree(w)).max()
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        let w = self.ring.weights();
        let mut it = self.terms.keys().map(|m| m.weighted_degree(w));
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    pub fn degree_in(&self, n: usize) -> u16 {
        self.terms.keys().map(|m| m.exp(n)).max().unwrap_or(0)
    }

    /// Bitmask of the variables that occur.
    pub fn support_mask(&self) -> u32 {
        self.terms.keys().fold(0, |a, m| a | m.support_mask())
    }

    pub fn uses_var(&self, n: usize) -> bool {
        self.terms.keys().any(|m| m.exp(n) > 0)
    }

    /// Coefficient of `x_n^e`, as a polynomial free of `x_n`.
    pub fn coefficient_of(&self, n: usize, e: u16) -> Self {
        Self::from_terms(
            &self.ring,
            self.terms.iter().filter(|(m, _)| m.exp(n) == e).map(|(m, c)| (m.with_exp(n, 0), c.clone())),
        )
    }

    pub fn derivative(&self, n: usize) -> Self {
        Self::from_terms(
            &self.ring,
            self.terms.iter().filter(|(m, _)| m.exp(n) > 0).map(|(m, c)| {
                let e = m.exp(n);
                (m.with_exp(n, e - 1), c.clone() * C::from_u16(e).expect("small integer"))
            }),
        )
    }

    /// Leading term under `order`.
    pub fn lead(&self, order: &MonomialOrder) -> Option<(Monomial, C)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (*m, c.clone()))
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, C)> {
        let mut v: Vec<(Monomial, C)> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn evaluate(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.ring.nvars(), "point has wrong dimension");
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (n, x) in point.iter().enumerate() {
                for _ in 0..m.exp(n) {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Replace variable `n` by `value` (a polynomial of the same ring).
    pub fn substitute(&self, n: usize, value: &Self) -> Self {
        let mut powers: Vec<Self> = vec![Self::one(&self.ring)];
        let mut r = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exp(n) as usize;
            while powers.len() <= e {
                let next = &powers[powers.len() - 1] * value;
                powers.push(next);
            }
            let rest = m.with_exp(n, 0);
            for (pm, pc) in &powers[e].terms {
                r.add_term(rest.mul(pm), c.clone() * pc.clone());
            }
        }
        r
    }

    /// Replace variable `n` by a constant.
    pub fn specialize(&self, n: usize, value: &C) -> Self {
        self.substitute(n, &Self::constant(&self.ring, value.clone()))
    }

    /// Move to another ring, matching variables by name. Fails if a used variable is missing.
    pub fn embed(&self, target: &RingRef) -> Result<Self, AlgebraError> {
        let src = &self.ring;
        let mut map = Vec::with_capacity(src.nvars());
        for v in src.vars() {
            map.push(target.index_of(v));
        }
        let mut r = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = [0u16; crate::poly::monomial::MAX_VARS];
            for (n, t) in map.iter().enumerate() {
                let x = m.exp(n);
                if x == 0 {
                    continue;
                }
                match t {
                    Some(t) => e[*t] += x,
                    None => return Err(AlgebraError::UnknownVariable(src.var(n).to_string())),
                }
            }
            r.add_term(Monomial::from_exps(&e[..target.nvars()]), c.clone());
        }
        Ok(r)
    }

    pub fn map_coeffs<D: Scalar, F: Fn(&C) -> D>(&self, f: F) -> Polynomial<D> {
        let mut r = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            r.add_term(*m, f(c));
        }
        r
    }

    pub fn parse(ring: &RingRef, text: &str) -> Result<Self, AlgebraError> {
        crate::poly::parse::parse_polynomial(ring, text)
    }
}

impl<C: ExactField> Polynomial<C> {
    /// Scale so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.lead(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&(C::one() / c)),
        }
    }

    /// `self / d`, failing unless the division is exact.
    pub fn div_exact(&self, d: &Self) -> Result<Self, AlgebraError> {
        self.same_ring(d)?;
        if d.is_zero() {
            return Err(AlgebraError::NotExact);
        }
        let order = MonomialOrder::DegRevLex;
        let (dm, dc) = d.lead(&order).expect("nonzero");
        let inv = C::one() / dc;
        let mut rem = self.clone();
        let mut q = Self::zero(&self.ring);
        while let Some((m, c)) = rem.lead(&order) {
            let t = m.div(&dm).ok_or(AlgebraError::NotExact)?;
            let f = c * inv.clone();
            q.add_term(t, f.clone());
            rem = rem.try_sub(&d.mul_term(&t, &f))?;
        }
        Ok(q)
    }
}

impl<C: Scalar> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &RingRef, m: &Monomial) -> fmt::Result {
    // the parameter goes first, as in `s*A[1,3,1]`
    let mut idx: Vec<usize> = (0..ring.nvars()).filter(|&n| m.exp(n) > 0).collect();
    idx.sort_by_key(|&n| (!matches!(ring.var(n), Var::Param), n));
    for (pos, n) in idx.iter().enumerate() {
        if pos > 0 {
            write!(f, "*")?;
        }
        write!(f, "{}", ring.var(*n))?;
        if m.exp(*n) > 1 {
            write!(f, "^{}", m.exp(*n))?;
        }
    }
    Ok(())
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let order = MonomialOrder::DegRevLex;
        let terms = self.sorted_terms(&order);
        for (pos, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative_literal();
            let a = c.abs_value();
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $try:ident) => {
        impl<C: Scalar> $tr<&Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            /// Panics if the operands live in different rings; use the `try_` form to get an error instead.
            fn $f(self, o: &Polynomial<C>) -> Polynomial<C> {
                self.$try(o).expect("polynomials from different rings")
            }
        }
        impl<C: Scalar> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, o: Polynomial<C>) -> Polynomial<C> {
                (&self).$f(&o)
            }
        }
        impl<C: Scalar> $tr<&Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, o: &Polynomial<C>) -> Polynomial<C> {
                (&self).$f(o)
            }
        }
        impl<C: Scalar> $tr<Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, o: Polynomial<C>) -> Polynomial<C> {
                self.$f(&o)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

/// Compare two polynomials by their term lists under `order`, largest terms first.
pub fn cmp_by_order<C: Scalar>(a: &Polynomial<C>, b: &Polynomial<C>, order: &MonomialOrder) -> Ordering {
    let ta = a.sorted_terms(order);
    let tb = b.sorted_terms(order);
    for (x, y) in ta.iter().zip(tb.iter()) {
        let c = order.cmp(&x.0, &y.0);
        if c != Ordering::Equal {
            return c;
        }
    }
    ta.len().cmp(&tb.len())
}
