//! Semistandard Young tableaux, Gelfand-Tsetlin patterns and Lusztig data.

use std::fmt;
use std::str::FromStr;

use crate::error::TableauError;

/// Largest supported rank (entries are single digits).
pub const MAX_M: usize = 9;

/// Semistandard tableau with entries in `1..=m`. Rows are stored without trailing empty rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    m: usize,
    rows: Vec<Vec<u8>>,
}

/// Number of pairs `(a,b)` with `1 <= a < b <= m`.
pub fn datum_len(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Position of `(a,b)` in the order `(1,2),...,(1,m),(2,3),...,(m-1,m)`.
pub fn pair_index(a: usize, b: usize, m: usize) -> usize {
    debug_assert!(1 <= a && a < b && b <= m);
    (a - 1) * m - (a - 1) * a / 2 + (b - a - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(k: usize, m: usize) -> (usize, usize) {
    let mut k = k;
    for a in 1..m {
        if k < m - a {
            return (a, a + 1 + k);
        }
        k -= m - a;
    }
    panic!("pair index out of range")
}

/// `sum n_(a,b) (e_a - e_b)`.
pub fn datum_weight(n: &[usize], m: usize) -> Vec<i64> {
    let mut w = vec![0; m];
    for (k, &c) in n.iter().enumerate() {
        let (a, b) = pair_from_index(k, m);
        w[a - 1] += c as i64;
        w[b - 1] -= c as i64;
    }
    w
}

/// `sum_a (m + 1 - a) nu_a`.
pub fn rho_dot(nu: &[i64]) -> i64 {
    let m = nu.len() as i64;
    nu.iter().enumerate().map(|(a, &x)| (m - a as i64) * x).sum()
}

fn check_m(m: usize) -> Result<(), TableauError> {
    if m == 0 || m > MAX_M {
        return Err(TableauError::Invalid(format!("m = {} outside 1..=9", m)));
    }
    Ok(())
}

impl Tableau {
    pub fn empty(m: usize) -> Self {
        Tableau { m, rows: Vec::new() }
    }

    /// Build from rows, validating the semistandard conditions.
    pub fn from_rows(m: usize, rows: Vec<Vec<u8>>) -> Result<Self, TableauError> {
        check_m(m)?;
        let mut rows = rows;
        while rows.last().map_or(false, |r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() > m {
            return Err(TableauError::NotSemistandard(format!("{} rows but m = {}", rows.len(), m)));
        }
        for (a, r) in rows.iter().enumerate() {
            if r.is_empty() {
                return Err(TableauError::NotSemistandard("empty row above a nonempty one".into()));
            }
            for &e in r {
                if e == 0 || e as usize > m {
                    return Err(TableauError::EntryTooLarge { entry: e as u32, m });
                }
            }
            if r.windows(2).any(|w| w[0] > w[1]) {
                return Err(TableauError::NotSemistandard(format!("row {} decreases", a + 1)));
            }
            if a > 0 {
                let up = &rows[a - 1];
                if up.len() < r.len() {
                    return Err(TableauError::NotSemistandard("shape is not a partition".into()));
                }
                if r.iter().zip(up.iter()).any(|(d, u)| u >= d) {
                    return Err(TableauError::NotSemistandard(format!("column not strict between rows {} and {}", a, a + 1)));
                }
            }
        }
        Ok(Tableau { m, rows })
    }

    pub fn parse(s: &str, m: usize) -> Result<Self, TableauError> {
        check_m(m)?;
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Self::empty(m));
        }
        let mut rows = Vec::new();
        for part in s.split('/') {
            let mut r = Vec::new();
            for ch in part.chars() {
                let d = ch.to_digit(10).ok_or_else(|| TableauError::Parse(s.to_string()))?;
                if d == 0 || d as usize > m {
                    return Err(TableauError::EntryTooLarge { entry: d, m });
                }
                r.push(d as u8);
            }
            if r.is_empty() {
                return Err(TableauError::Parse(s.to_string()));
            }
            rows.push(r);
        }
        Self::from_rows(m, rows)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Row lengths, padded to length `m`.
    pub fn shape(&self) -> Vec<usize> {
        (0..self.m).map(|a| self.rows.get(a).map_or(0, |r| r.len())).collect()
    }

    /// Number of entries equal to each of `1..=m`.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = vec![0; self.m];
        for r in &self.rows {
            for &e in r {
                w[e as usize - 1] += 1;
            }
        }
        w
    }

    /// Same tableau viewed with a larger alphabet.
    pub fn with_m(&self, m: usize) -> Result<Self, TableauError> {
        Self::from_rows(m, self.rows.clone())
    }

    fn count(&self, a: usize, b: usize) -> usize {
        self.rows.get(a - 1).map_or(0, |r| r.iter().filter(|&&e| e as usize == b).count())
    }

    /// Subtableau of entries `<= i`.
    pub fn sub_tableau(&self, i: usize) -> Tableau {
        let rows = self.rows.iter().map(|r| r.iter().copied().filter(|&e| e as usize <= i).collect()).collect();
        Tableau::from_rows(self.m, rows).expect("subtableau of a tableau")
    }

    /// Shapes of the subtableaux: entry `i-1` is `lambda(i)`, of length `i`.
    pub fn gt_pattern(&self) -> Vec<Vec<usize>> {
        (1..=self.m)
            .map(|i| (1..=i).map(|a| self.rows.get(a - 1).map_or(0, |r| r.iter().filter(|&&e| e as usize <= i).count())).collect())
            .collect()
    }

    /// `lambda(i)` padded with zeros to length `i`.
    pub fn sub_shape(&self, i: usize) -> Vec<usize> {
        if i == 0 {
            return Vec::new();
        }
        self.gt_pattern()[i - 1].clone()
    }

    pub fn from_gt_pattern(pattern: &[Vec<usize>]) -> Result<Self, TableauError> {
        let m = pattern.len();
        check_m(m)?;
        for (i, row) in pattern.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(TableauError::Invalid("pattern rows have the wrong length".into()));
            }
            if i > 0 {
                let prev = &pattern[i - 1];
                for j in 0..i {
                    if !(row[j + 1] <= prev[j] && prev[j] <= row[j]) {
                        return Err(TableauError::Invalid("pattern does not interlace".into()));
                    }
                }
            }
        }
        let mut rows = vec![Vec::new(); m];
        for a in 1..=m {
            for b in a..=m {
                let hi = pattern[b - 1][a - 1];
                let lo = if b >= 2 && a <= b - 1 { pattern[b - 2][a - 1] } else { 0 };
                rows[a - 1].extend(std::iter::repeat(b as u8).take(hi - lo));
            }
        }
        Self::from_rows(m, rows)
    }

    /// `n_(a,b)`: number of entries `b` in row `a`, for `a < b`.
    pub fn lusztig_datum(&self) -> Vec<usize> {
        let m = self.m;
        let mut n = vec![0; datum_len(m)];
        for a in 1..=m {
            for b in a + 1..=m {
                n[pair_index(a, b, m)] = self.count(a, b);
            }
        }
        n
    }

    /// `mu0_i`: number of entries `i` in row `i`.
    pub fn padding(&self) -> Vec<usize> {
        (1..=self.m).map(|i| self.count(i, i)).collect()
    }

    pub fn from_datum_padding(n: &[usize], padding: &[usize], m: usize) -> Result<Self, TableauError> {
        check_m(m)?;
        if n.len() != datum_len(m) {
            return Err(TableauError::DatumLength { got: n.len(), expected: datum_len(m) });
        }
        if padding.len() != m {
            return Err(TableauError::Invalid(format!("padding has length {}, expected {}", padding.len(), m)));
        }
        Self::from_rows(m, build_rows(n, padding, m))
    }

    /// Smallest padding that still gives a semistandard tableau.
    pub fn strip_padding(&self) -> Tableau {
        let n = self.lusztig_datum();
        let pad = minimal_padding(&n, self.m, vec![0; self.m], None);
        Self::from_datum_padding(&n, &pad, self.m).expect("minimal padding is valid")
    }

    pub fn is_stable(&self) -> bool {
        self.strip_padding() == *self
    }

    /// Add `extra[i]` entries `i+1` to row `i+1`.
    pub fn add_padding(&self, extra: &[usize]) -> Result<Self, TableauError> {
        if extra.len() != self.m {
            return Err(TableauError::Invalid("padding vector has the wrong length".into()));
        }
        let pad: Vec<usize> = self.padding().iter().zip(extra).map(|(a, b)| a + b).collect();
        Self::from_datum_padding(&self.lusztig_datum(), &pad, self.m)
    }

    /// All tableaux of shape `lambda` and weight `mu` (both of length `m`), sorted.
    pub fn enumerate(lambda: &[usize], mu: &[usize]) -> Vec<Tableau> {
        let m = lambda.len();
        if m == 0 || mu.len() != m || lambda.iter().sum::<usize>() != mu.iter().sum::<usize>() || lambda.windows(2).any(|w| w[0] < w[1]) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut pattern: Vec<Vec<usize>> = vec![Vec::new(); m];
        pattern[m - 1] = lambda.to_vec();
        gt_rec(m, mu, &mut pattern, &mut out);
        out.sort();
        out
    }
}

fn gt_rec(i: usize, mu: &[usize], pattern: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
    if i == 1 {
        if pattern[0][0] == mu[0] {
            if let Ok(t) = Tableau::from_gt_pattern(pattern) {
                out.push(t);
            }
        }
        return;
    }
    let upper = pattern[i - 1].clone();
    let total: usize = upper.iter().sum();
    if total < mu[i - 1] {
        return;
    }
    let target = total - mu[i - 1];
    let mut cur = vec![0; i - 1];
    fn choose(j: usize, upper: &[usize], cur: &mut Vec<usize>, left: usize, acc: &mut Vec<Vec<usize>>) {
        if j == cur.len() {
            if left == 0 {
                acc.push(cur.clone());
            }
            return;
        }
        let (lo, hi) = (upper[j + 1], upper[j]);
        let rest_max: usize = (j + 1..cur.len()).map(|k| upper[k]).sum();
        for x in lo..=hi.min(left) {
            if left - x > rest_max {
                continue;
            }
            cur[j] = x;
            choose(j + 1, upper, cur, left - x, acc);
        }
    }
    let mut choices = Vec::new();
    choose(0, &upper, &mut cur, target, &mut choices);
    for c in choices {
        pattern[i - 2] = c;
        gt_rec(i - 1, mu, pattern, out);
    }
}

fn build_rows(n: &[usize], pad: &[usize], m: usize) -> Vec<Vec<u8>> {
    (1..=m)
        .map(|a| {
            let mut r: Vec<u8> = std::iter::repeat(a as u8).take(pad[a - 1]).collect();
            for b in a + 1..=m {
                r.extend(std::iter::repeat(b as u8).take(n[pair_index(a, b, m)]));
            }
            r
        })
        .collect()
}

/// Rows `i` and `i+1` (1-based) are compatible: shape and column strictness.
fn rows_ok(rows: &[Vec<u8>], i: usize) -> bool {
    let (up, down) = (&rows[i - 1], &rows[i]);
    up.len() >= down.len() && down.iter().zip(up.iter()).all(|(d, u)| u < d)
}

/// Raise `base` from the bottom row upwards by the least amount making the rows semistandard,
/// and, when `other` is given, making `weight + other` dominant.
fn minimal_padding(n: &[usize], m: usize, base: Vec<usize>, other: Option<&[usize]>) -> Vec<usize> {
    let mut pad = base;
    let col = |pad: &[usize], i: usize| -> usize {
        pad[i - 1] + (1..i).map(|a| n[pair_index(a, i, m)]).sum::<usize>()
    };
    for i in (1..m).rev() {
        loop {
            let rows = build_rows(n, &pad, m);
            let mut ok = rows_ok(&rows, i);
            if let Some(o) = other {
                ok &= col(&pad, i) + o[i - 1] >= col(&pad, i + 1) + o[i];
            }
            if ok {
                break;
            }
            pad[i - 1] += 1;
        }
    }
    pad
}

/// The dominant tableau with Lusztig datum `n`: least padding making the tableau semistandard of
/// dominant weight.
pub fn sigma(n: &[usize], m: usize) -> Result<Tableau, TableauError> {
    check_m(m)?;
    if n.len() != datum_len(m) {
        return Err(TableauError::DatumLength { got: n.len(), expected: datum_len(m) });
    }
    let pad = minimal_padding(n, m, vec![0; m], Some(&vec![0; m]));
    Tableau::from_datum_padding(n, &pad, m)
}

/// Pad the larger tableau (ties: the first) until the summed weight is dominant.
pub fn dominance_padding(a: &Tableau, b: &Tableau) -> Result<(Tableau, Tableau), TableauError> {
    if a.m != b.m {
        return Err(TableauError::RankMismatch(a.m, b.m));
    }
    let m = a.m;
    let (wa, wb) = (a.weight(), b.weight());
    let mu: Vec<usize> = wa.iter().zip(&wb).map(|(x, y)| x + y).collect();
    if mu.windows(2).all(|w| w[0] >= w[1]) {
        return Ok((a.clone(), b.clone()));
    }
    let pad_first = a.size() >= b.size();
    let (big, other) = if pad_first { (a, &wb) } else { (b, &wa) };
    let pad = minimal_padding(&big.lusztig_datum(), m, big.padding(), Some(other));
    let padded = Tableau::from_datum_padding(&big.lusztig_datum(), &pad, m)?;
    Ok(if pad_first { (padded, b.clone()) } else { (a.clone(), padded) })
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "-");
        }
        for (a, r) in self.rows.iter().enumerate() {
            if a > 0 {
                write!(f, "/")?;
            }
            for e in r {
                write!(f, "{}", e)?;
            }
        }
        Ok(())
    }
}

/// Parse a datum such as `1,0,1`.
pub fn parse_datum(s: &str) -> Result<Vec<usize>, TableauError> {
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| TableauError::Parse(s.to_string()))).collect()
}

/// Smallest `m` with `datum_len(m) == len`.
pub fn rank_for_datum_len(len: usize) -> Result<usize, TableauError> {
    (1..=MAX_M).find(|&m| datum_len(m) == len).ok_or(TableauError::DatumLength { got: len, expected: 0 })
}

impl FromStr for Tableau {
    type Err = TableauError;
    /// Uses the largest entry as `m`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let m = s.chars().filter_map(|c| c.to_digit(10)).max().unwrap_or(1).max(1) as usize;
        Tableau::parse(s, m)
    }
}
