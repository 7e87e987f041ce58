//! Dense matrices with polynomial entries.

use std::collections::HashMap;
use std::fmt;

use crate::error::AlgebraError;
use crate::poly::polynomial::Polynomial;
use crate::poly::ring::RingRef;
use crate::poly::scalar::Scalar;

/// Largest size for symbolic cofactor determinants.
pub const MAX_DET_SIZE: usize = 12;

#[derive(Clone)]
pub struct SymbolicMatrix<C> {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<C>>,
}

impl<C: Scalar> SymbolicMatrix<C> {
    pub fn zeros(ring: &RingRef, rows: usize, cols: usize) -> Self {
        SymbolicMatrix { ring: ring.clone(), rows, cols, entries: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &RingRef, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &RingRef, rows: Vec<Vec<Polynomial<C>>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(AlgebraError::Shape("ragged rows".into()));
        }
        let entries: Vec<Polynomial<C>> = rows.into_iter().flatten().collect();
        for e in &entries {
            if **e.ring() != **ring {
                return Err(AlgebraError::RingMismatch);
            }
        }
        Ok(SymbolicMatrix { ring: ring.clone(), rows: r, cols: c, entries })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<C> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<C>) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Polynomial<C>] {
        &self.entries
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        if self.cols != o.rows {
            return Err(AlgebraError::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut r = Self::zeros(&self.ring, self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), o.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.try_add(&a.try_mul(b)?)?;
                    }
                }
                r.set(i, j, acc);
            }
        }
        Ok(r)
    }

    pub fn pow(&self, e: u32) -> Result<Self, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::Shape("power of a non-square matrix".into()));
        }
        let mut r = Self::identity(&self.ring, self.rows);
        for _ in 0..e {
            r = r.try_mul(self)?;
        }
        Ok(r)
    }

    /// `self - e * Id`.
    pub fn shift(&self, e: &Polynomial<C>) -> Result<Self, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::Shape("shift of a non-square matrix".into()));
        }
        let mut r = self.clone();
        for i in 0..self.rows {
            let v = r.get(i, i).try_sub(e)?;
            r.set(i, i, v);
        }
        Ok(r)
    }

    /// Upper-left `p x p` block.
    pub fn leading_block(&self, p: usize) -> Result<Self, AlgebraError> {
        if p > self.rows || p > self.cols {
            return Err(AlgebraError::Shape(format!("block size {} exceeds matrix", p)));
        }
        self.select(&(0..p).collect::<Vec<_>>(), &(0..p).collect::<Vec<_>>())
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<Self, AlgebraError> {
        let mut r = Self::zeros(&self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                if i >= self.rows || j >= self.cols {
                    return Err(AlgebraError::Shape("index out of range".into()));
                }
                r.set(a, b, self.get(i, j).clone());
            }
        }
        Ok(r)
    }

    pub fn map<F: Fn(&Polynomial<C>) -> Polynomial<C>>(&self, f: F) -> Self {
        SymbolicMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Move every entry to another ring (variables matched by name).
    pub fn embed(&self, target: &RingRef) -> Result<Self, AlgebraError> {
        let entries = self.entries.iter().map(|e| e.embed(target)).collect::<Result<Vec<_>, _>>()?;
        Ok(SymbolicMatrix { ring: target.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Determinant by cofactor expansion along rows, memoised on the set of remaining columns.
    pub fn determinant(&self) -> Result<Polynomial<C>, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n > MAX_DET_SIZE {
            return Err(AlgebraError::TooLarge(n));
        }
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        let mut memo: HashMap<u32, Polynomial<C>> = HashMap::new();
        Ok(self.det_rec(0, (1u32 << n) - 1, &mut memo))
    }

    fn det_rec(&self, row: usize, cols: u32, memo: &mut HashMap<u32, Polynomial<C>>) -> Polynomial<C> {
        if cols == 0 {
            return Polynomial::one(&self.ring);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = Polynomial::zero(&self.ring);
        let mut sign_pos = true;
        for j in 0..self.cols {
            if cols & (1 << j) == 0 {
                continue;
            }
            let a = self.get(row, j);
            if !a.is_zero() {
                let sub = self.det_rec(row + 1, cols & !(1 << j), memo);
                if !sub.is_zero() {
                    let t = a * &sub;
                    acc = if sign_pos { acc + t } else { acc - t };
                }
            }
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// All `r x r` minors: row sets in colexicographic order, then column sets.
    pub fn minors(&self, r: usize) -> Result<Vec<Polynomial<C>>, AlgebraError> {
        let mut out = Vec::new();
        if r == 0 {
            out.push(Polynomial::one(&self.ring));
            return Ok(out);
        }
        if r > self.rows || r > self.cols {
            return Ok(out);
        }
        let rsets = subsets(self.rows, r);
        let csets = subsets(self.cols, r);
        for rs in &rsets {
            if rs.iter().any(|&i| (0..self.cols).all(|j| self.get(i, j).is_zero())) {
                continue;
            }
            for cs in &csets {
                let d = self.select(rs, cs)?.determinant()?;
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[C]) -> Vec<Vec<C>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).evaluate(point)).collect()).collect()
    }

    /// Row-major entry strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect()
    }

    /// Plain text with optional block separators after the given row/column counts.
    pub fn pretty(&self, blocks: &[usize]) -> String {
        let cells = self.to_strings();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        let mut cuts = Vec::new();
        let mut acc = 0;
        for b in blocks {
            acc += b;
            cuts.push(acc);
        }
        cuts.pop();
        let mut out = String::new();
        for (i, row) in cells.iter().enumerate() {
            if i > 0 && cuts.contains(&i) {
                let mut line = String::new();
                for j in 0..self.cols {
                    if j > 0 && cuts.contains(&j) {
                        line.push_str("-+");
                    }
                    line.push_str(&"-".repeat(width + 1));
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
            let mut line = String::new();
            for (j, c) in row.iter().enumerate() {
                if j > 0 && cuts.contains(&j) {
                    line.push_str(" |");
                }
                line.push_str(&format!(" {:>w$}", if c == "0" { "." } else { c }, w = width));
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

impl<C: Scalar> PartialEq for SymbolicMatrix<C> {
    fn eq(&self, o: &Self) -> bool {
        self.rows == o.rows && self.cols == o.cols && self.entries == o.entries
    }
}

impl<C: Scalar> fmt::Debug for SymbolicMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty(&[]))
    }
}

/// `k`-subsets of `0..n` in colexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // colex successor: bump the first position that can move
        let mut i = 0;
        while i < k && (if i + 1 < k { cur[i] + 1 == cur[i + 1] } else { cur[i] + 1 == n }) {
            i += 1;
        }
        if i == k {
            return out;
        }
        cur[i] += 1;
        for (t, c) in cur.iter_mut().enumerate().take(i) {
            *c = t;
        }
    }
}

/// Determinant of a numeric matrix by fraction-free Bareiss elimination.
pub fn bareiss_determinant<C: Scalar>(m: &[Vec<C>]) -> C {
    let n = m.len();
    if n == 0 {
        return C::one();
    }
    let mut a: Vec<Vec<C>> = m.to_vec();
    let mut prev = C::one();
    let mut sign = C::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return C::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone()) / prev.clone();
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}
