//! Dense matrices over a commutative ring and exact determinants.

use super::{ExactDiv, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct RingMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Ring> RingMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                left: entries.len(),
                right: rows * cols,
            });
        }
        Ok(RingMatrix { rows, cols, entries })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> T>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn check_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self, unit: &T) -> Result<T> {
        self.check_square()?;
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(self.cofactor_rec(0, &cols, unit))
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize], unit: &T) -> T {
        if cols.is_empty() {
            return unit.clone();
        }
        let mut acc = unit.zero_like();
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a.mul(&self.cofactor_rec(row + 1, &rest, unit));
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
}

impl<T: ExactDiv> RingMatrix<T> {
    /// Exact determinant: cofactor expansion up to 4x4, fraction-free
    /// Bareiss elimination above. `unit` supplies the ring context for the
    /// empty matrix.
    pub fn det_exact(&self, unit: &T) -> Result<T> {
        self.check_square()?;
        let n = self.rows;
        if n <= 4 {
            return self.det_cofactor(unit);
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = unit.one_like();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        negate = !negate;
                    }
                    None => return Ok(unit.zero_like()),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j).mul(&pivot).sub(&m.get(i, k).mul(m.get(k, j)));
                    m.entries[i * n + j] = num.div_exact(&prev)?;
                }
                m.entries[i * n + k] = unit.zero_like();
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if negate { d.neg() } else { d })
    }
}

/// Determinant by dynamic programming over column subsets: row `i` is
/// expanded against every set of `i` columns already used. Uses no
/// division, so it is valid over rings with zero divisors. Cost is
/// `O(2^n n)` ring operations.
pub fn det_by_minors<T: Ring>(m: &RingMatrix<T>, unit: &T) -> Result<T> {
    m.check_square()?;
    let n = m.rows;
    assert!(n < usize::BITS as usize, "matrix too large for subset expansion");
    let mut layer: Vec<(usize, T)> = vec![(0, unit.clone())];
    for row in 0..n {
        let mut next: std::collections::HashMap<usize, T> = std::collections::HashMap::new();
        for (mask, val) in &layer {
            for c in 0..n {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let a = m.get(row, c);
                if a.is_zero() {
                    continue;
                }
                // sign of placing column c after the columns in mask
                let above = (mask >> c).count_ones();
                let term = val.mul(a);
                let term = if above % 2 == 1 { term.neg() } else { term };
                let key = mask | (1 << c);
                match next.get_mut(&key) {
                    Some(slot) => *slot = slot.add(&term),
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        layer = next.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        layer.sort_by_key(|(k, _)| *k);
        if layer.is_empty() {
            return Ok(unit.zero_like());
        }
    }
    Ok(layer.pop().map(|(_, v)| v).unwrap_or_else(|| unit.zero_like()))
}
