//! Symbolic Mirkovic-Vybornov slice matrices.

use crate::error::AlgebraError;
use crate::poly::{Polynomial, Ring, RingRef, Scalar, SymbolicMatrix, Var};

/// Block sizes `mu` and their offsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLayout {
    mu: Vec<usize>,
    offsets: Vec<usize>,
}

impl BlockLayout {
    pub fn new(mu: &[usize]) -> Result<Self, AlgebraError> {
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::Invalid(format!("{:?} is not weakly decreasing", mu)));
        }
        let mut offsets = vec![0];
        for &b in mu {
            offsets.push(offsets.last().unwrap() + b);
        }
        Ok(BlockLayout { mu: mu.to_vec(), offsets })
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn m(&self) -> usize {
        self.mu.len()
    }

    pub fn size(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// First row/column of block `i` (0-based).
    pub fn offset(&self, i: usize) -> usize {
        self.offsets[i]
    }

    /// `|mu(i)|` for 1-based `i`.
    pub fn prefix(&self, i: usize) -> usize {
        self.offsets[i]
    }

    pub fn is_prefix(&self, p: usize) -> bool {
        self.offsets.contains(&p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceKind {
    TMu,
    UFamily,
    UNilpotent,
}

#[derive(Clone, Debug)]
pub struct SliceMatrix<C: Scalar> {
    pub matrix: SymbolicMatrix<C>,
    pub layout: BlockLayout,
    pub kind: SliceKind,
}

/// Companion matrix of a monic polynomial given by coefficients `c_0, ..., c_d` (lowest first):
/// ones on the superdiagonal, last row `-c_0, ..., -c_{d-1}`.
pub fn companion<C: Scalar>(ring: &RingRef, coeffs: &[Polynomial<C>]) -> Result<SymbolicMatrix<C>, AlgebraError> {
    let d = coeffs.len().checked_sub(1).ok_or_else(|| AlgebraError::Invalid("empty polynomial".into()))?;
    if coeffs[d] != Polynomial::one(ring) {
        return Err(AlgebraError::Invalid("companion matrix of a non-monic polynomial".into()));
    }
    let mut m = SymbolicMatrix::zeros(ring, d, d);
    for i in 0..d.saturating_sub(1) {
        m.set(i, i + 1, Polynomial::one(ring));
    }
    for (k, c) in coeffs[..d].iter().enumerate() {
        m.set(d - 1, k, -c);
    }
    Ok(m)
}

/// Coefficients of `t^a (t - s)^b` in `t`, lowest first, with `s` the given polynomial.
pub fn shifted_power_coeffs<C: Scalar>(ring: &RingRef, a: usize, b: usize, s: &Polynomial<C>) -> Vec<Polynomial<C>> {
    let mut c = vec![Polynomial::zero(ring); a + b + 1];
    // (t - s)^b = sum_k binom(b,k) (-s)^(b-k) t^k
    let mut binom: i64 = 1;
    for k in 0..=b {
        let sign = if (b - k) % 2 == 0 { 1 } else { -1 };
        c[a + k] = s.pow((b - k) as u32).scale(&C::from_i64(sign * binom).expect("small integer"));
        binom = binom * (b - k) as i64 / (k + 1) as i64;
    }
    c
}

fn place_variables<C: Scalar>(m: &mut SymbolicMatrix<C>, layout: &BlockLayout, ring: &RingRef, i: usize, j: usize) -> Result<(), AlgebraError> {
    let mu = layout.mu();
    let row = layout.offset(i) + mu[i] - 1;
    for k in 1..=mu[i].min(mu[j]) {
        let v = Polynomial::var_named(ring, &Var::slice(i + 1, j + 1, k))?;
        m.set(row, layout.offset(j) + k - 1, v);
    }
    Ok(())
}

fn superdiagonal_ones<C: Scalar>(m: &mut SymbolicMatrix<C>, layout: &BlockLayout, ring: &RingRef) {
    for i in 0..layout.m() {
        for q in 0..layout.mu()[i].saturating_sub(1) {
            let r = layout.offset(i) + q;
            m.set(r, r + 1, Polynomial::one(ring));
        }
    }
}

/// `J_{0,mu} + X` with a variable in every admissible slot of every block.
pub fn build_t<C: Scalar>(mu: &[usize]) -> Result<SliceMatrix<C>, AlgebraError> {
    let layout = BlockLayout::new(mu)?;
    let ring = Ring::slice(mu, false)?;
    let n = layout.size();
    let mut m = SymbolicMatrix::zeros(&ring, n, n);
    superdiagonal_ones(&mut m, &layout, &ring);
    for i in 0..layout.m() {
        for j in 0..layout.m() {
            if mu[i] > 0 && mu[j] > 0 {
                place_variables(&mut m, &layout, &ring, i, j)?;
            }
        }
    }
    Ok(SliceMatrix { matrix: m, layout, kind: SliceKind::TMu })
}

/// Upper-triangular family: diagonal blocks are companions of `t^{mu'_i} (t - s)^{mu''_i}`.
pub fn build_u<C: Scalar>(mu1: &[usize], mu2: &[usize]) -> Result<SliceMatrix<C>, AlgebraError> {
    if mu1.len() != mu2.len() {
        return Err(AlgebraError::Shape("mu' and mu'' have different lengths".into()));
    }
    let mu: Vec<usize> = mu1.iter().zip(mu2).map(|(a, b)| a + b).collect();
    let layout = BlockLayout::new(&mu)?;
    let ring = Ring::upper_slice(&mu, true)?;
    let s = Polynomial::var_named(&ring, &Var::Param)?;
    let n = layout.size();
    let mut m = SymbolicMatrix::zeros(&ring, n, n);
    for i in 0..layout.m() {
        if mu[i] == 0 {
            continue;
        }
        let comp = companion(&ring, &shifted_power_coeffs(&ring, mu1[i], mu2[i], &s))?;
        let o = layout.offset(i);
        for a in 0..mu[i] {
            for b in 0..mu[i] {
                m.set(o + a, o + b, comp.get(a, b).clone());
            }
        }
        for j in i + 1..layout.m() {
            if mu[j] > 0 {
                place_variables(&mut m, &layout, &ring, i, j)?;
            }
        }
    }
    Ok(SliceMatrix { matrix: m, layout, kind: SliceKind::UFamily })
}

/// `T_mu` intersected with strictly upper-triangular matrices, over the ring without `s`.
pub fn build_u_nilpotent<C: Scalar>(mu: &[usize]) -> Result<SliceMatrix<C>, AlgebraError> {
    let layout = BlockLayout::new(mu)?;
    let ring = Ring::upper_slice(mu, false)?;
    let n = layout.size();
    let mut m = SymbolicMatrix::zeros(&ring, n, n);
    superdiagonal_ones(&mut m, &layout, &ring);
    for i in 0..layout.m() {
        for j in i + 1..layout.m() {
            if mu[i] > 0 && mu[j] > 0 {
                place_variables(&mut m, &layout, &ring, i, j)?;
            }
        }
    }
    Ok(SliceMatrix { matrix: m, layout, kind: SliceKind::UNilpotent })
}

/// The `m x m` polynomial matrix `g(A)`, in the ring of `A` extended by `t`.
/// Block `(j,i)` of `A` produces entry `(i,j)`.
pub fn g_of_a<C: Scalar>(a: &SliceMatrix<C>) -> Result<(RingRef, SymbolicMatrix<C>), AlgebraError> {
    let base = a.matrix.ring();
    let tv = base.fresh_name("t");
    let ring = base.extended(&[(tv, 1)])?;
    let t = Polynomial::var(&ring, ring.nvars() - 1);
    let lay = &a.layout;
    let mu = lay.mu();
    let m = lay.m();
    let mut g = SymbolicMatrix::zeros(&ring, m, m);
    for i in 0..m {
        for j in 0..m {
            let mut e = if i == j { t.pow(mu[i] as u32) } else { Polynomial::zero(&ring) };
            if mu[j] > 0 {
                let row = lay.offset(j) + mu[j] - 1;
                for k in 1..=mu[i] {
                    let x = a.matrix.get(row, lay.offset(i) + k - 1).embed(&ring)?;
                    e = &e - &(&x * &t.pow(k as u32 - 1));
                }
            }
            g.set(i, j, e);
        }
    }
    Ok((ring, g))
}

/// Upper-left `p x p` block. With `require_invariant`, `p` must be a block-prefix size.
pub fn submatrix<C: Scalar>(a: &SliceMatrix<C>, p: usize, require_invariant: bool) -> Result<SymbolicMatrix<C>, AlgebraError> {
    if require_invariant && !a.layout.is_prefix(p) {
        return Err(AlgebraError::Invalid(format!("{} is not a block-prefix size", p)));
    }
    a.matrix.leading_block(p)
}

impl<C: Scalar> SliceMatrix<C> {
    pub fn ring(&self) -> &RingRef {
        self.matrix.ring()
    }

    pub fn pretty(&self) -> String {
        self.matrix.pretty(self.layout.mu())
    }
}
