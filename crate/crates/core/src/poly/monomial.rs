//! Dense exponent vectors.

use std::fmt;

pub const MAX_VARS: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0 }
    }

    pub fn var(n: usize, e: u16) -> Self {
        let mut m = Self::one();
        m.exps[n] = e;
        m.deg = e as u32;
        m
    }

    pub fn from_exps(e: &[u16]) -> Self {
        assert!(e.len() <= MAX_VARS);
        let mut m = Self::one();
        m.exps[..e.len()].copy_from_slice(e);
        m.deg = e.iter().map(|&x| x as u32).sum();
        m
    }

    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn exp(&self, n: usize) -> u16 {
        self.exps[n]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn weighted_degree(&self, w: &[u32]) -> u64 {
        w.iter().zip(self.exps.iter()).map(|(&a, &b)| a as u64 * b as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bit `n` set when variable `n` occurs.
    pub fn support_mask(&self) -> u32 {
        let mut m = 0u32;
        for (n, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << n;
            }
        }
        m
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for n in 0..MAX_VARS {
            r.exps[n] += o.exps[n];
        }
        r.deg += o.deg;
        r
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.deg <= o.deg && self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self` when exact.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        if !o.divides(self) {
            return None;
        }
        let mut r = *self;
        for n in 0..MAX_VARS {
            r.exps[n] -= o.exps[n];
        }
        r.deg -= o.deg;
        Some(r)
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut r = Self::one();
        for n in 0..MAX_VARS {
            r.exps[n] = self.exps[n].max(o.exps[n]);
        }
        r.deg = r.exps.iter().map(|&x| x as u32).sum();
        r
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut r = Self::one();
        for n in 0..MAX_VARS {
            r.exps[n] = self.exps[n].min(o.exps[n]);
        }
        r.deg = r.exps.iter().map(|&x| x as u32).sum();
        r
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(o.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn with_exp(&self, n: usize, e: u16) -> Monomial {
        let mut r = *self;
        r.deg = r.deg - r.exps[n] as u32 + e as u32;
        r.exps[n] = e;
        r
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "x{:?}", &self.exps[..last])
    }
}
