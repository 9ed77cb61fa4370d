//! Integer polynomials in z and Laurent polynomials in e^{ε_i}, e^{δ_j}.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::text::fmt_half;

/// Σ c_i z^i with i ≥ 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZPoly {
    coeffs: Vec<i64>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(deg: u32) -> Self {
        let mut coeffs = vec![0; deg as usize + 1];
        coeffs[deg as usize] = 1;
        ZPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> i64 {
        self.coeffs.get(deg).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &ZPoly) -> ZPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        ZPoly::from_coeffs((0..len).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn add_monomial(&mut self, deg: u32, c: i64) {
        let d = deg as usize;
        if self.coeffs.len() <= d {
            self.coeffs.resize(d + 1, 0);
        }
        self.coeffs[d] += c;
        *self = ZPoly::from_coeffs(std::mem::take(&mut self.coeffs));
    }

    /// z·p
    pub fn shift_up(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = vec![0];
        c.extend(&self.coeffs);
        ZPoly { coeffs: c }
    }

    /// (z⁻¹·p)₊, dropping the constant term.
    pub fn shift_down_truncated(&self) -> ZPoly {
        ZPoly::from_coeffs(self.coeffs.iter().skip(1).copied().collect())
    }

    pub fn eval(&self, z: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * z + c)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            let a = c.abs();
            match (d, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match d {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{d}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Σ c_ν e^ν over doubled exponent vectors (ε-part then δ-part).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentPoly {
    pub m: usize,
    pub terms: BTreeMap<Vec<i64>, i64>,
}

impl LaurentPoly {
    pub fn zero(m: usize) -> Self {
        LaurentPoly { m, terms: BTreeMap::new() }
    }

    pub fn constant(m: usize, dim: usize, c: i64) -> Self {
        let mut p = Self::zero(m);
        p.add_term(vec![0; dim], c);
        p
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &LaurentPoly, c: i64) {
        for (e, v) in &o.terms {
            self.add_term(e.clone(), c * v);
        }
    }

    pub fn coeff(&self, e: &[i64]) -> i64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at the identity: the sum of all coefficients.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn map_exponents(&self, f: impl Fn(&[i64]) -> Vec<i64>) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.m);
        for (e, c) in &self.terms {
            out.add_term(f(e), *c);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let join = |v: &[i64]| v.iter().map(|&x| fmt_half(x)).collect::<Vec<_>>().join(",");
            write!(f, "{c} * e({}|{})", join(&e[..self.m]), join(&e[self.m..]))?;
        }
        Ok(())
    }
}
