//! Semistandard tableaux and their column words.

use crate::error::{Error, Result};
use crate::symfunc::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    max_entry: u32,
}

impl Tableau {
    /// Checks that rows weakly increase, columns strictly increase and
    /// entries lie in `1..=max_entry`.
    pub fn new(rows: Vec<Vec<u32>>, max_entry: u32) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        if shape.len() != rows.len() {
            return Err(Error::InvalidPartition("tableau has an empty row".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.iter().any(|&e| e == 0 || e > max_entry) {
                return Err(Error::Precondition(format!(
                    "row {} has an entry outside 1..={max_entry}",
                    i + 1
                )));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Precondition(format!("row {} is not weakly increasing", i + 1)));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(b, a)| b <= a) {
                return Err(Error::Precondition(format!("column strictness fails in row {}", i + 1)));
            }
        }
        Ok(Tableau { shape, rows, max_entry })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn max_entry(&self) -> u32 {
        self.max_entry
    }

    /// Entries read bottom to top in each column, columns left to right.
    pub fn column_word(&self) -> Vec<u32> {
        let mut w = Vec::new();
        for c in 0..self.shape.part(0) as usize {
            for row in self.rows.iter().rev() {
                if let Some(&e) = row.get(c) {
                    w.push(e);
                }
            }
        }
        w
    }
}

pub fn column_word(t: &Tableau) -> Vec<u32> {
    t.column_word()
}

/// All semistandard tableaux of the given shape with entries `≤ n`.
pub fn ssyt_enumerate(lam: &Partition, n: u32) -> Vec<Tableau> {
    fn fill_row(lam: &Partition, n: u32, rows: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, out: &mut Vec<Tableau>) {
        let i = rows.len();
        if i == lam.len() {
            out.push(Tableau {
                shape: lam.clone(),
                rows: rows.clone(),
                max_entry: n,
            });
            return;
        }
        let c = cur.len();
        if c == lam.part(i) as usize {
            rows.push(std::mem::take(cur));
            fill_row(lam, n, rows, &mut Vec::new(), out);
            *cur = rows.pop().unwrap();
            return;
        }
        let lo_row = cur.last().copied().unwrap_or(1);
        let lo_col = if i > 0 { rows[i - 1][c] + 1 } else { 1 };
        for e in lo_row.max(lo_col)..=n {
            cur.push(e);
            fill_row(lam, n, rows, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    fill_row(lam, n, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}
