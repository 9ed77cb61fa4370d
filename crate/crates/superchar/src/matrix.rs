//! Dense integer matrices over an ordered block.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    pub rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { rows: vec![vec![0; n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.rows[i][i] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        IntMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        let n = self.size();
        let mut out = Self::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let x = self.rows[i][l];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out.rows[i][j] += x * o.rows[l][j];
                }
            }
        }
        out
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| self.rows[i][i] == 1 && (i + 1..n).all(|j| self.rows[i][j] == 0))
    }

    /// Inverse of a lower unitriangular matrix by forward substitution.
    pub fn unitriangular_inverse(&self) -> Option<IntMatrix> {
        if !self.is_lower_unitriangular() {
            return None;
        }
        let n = self.size();
        let mut x = Self::zeros(n);
        for j in 0..n {
            for i in j..n {
                let mut v = i64::from(i == j);
                for l in j..i {
                    v -= self.rows[i][l] * x.rows[l][j];
                }
                x.rows[i][j] = v;
            }
        }
        Some(x)
    }

    pub fn max_abs(&self) -> i64 {
        self.rows.iter().flatten().map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
