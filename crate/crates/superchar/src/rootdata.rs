//! Root data, ρ, dominance, atypicality and the even Weyl group.
//!
//! All weights are stored as doubled integers so that the half-integral
//! coordinates of osp(2m+1,2n) stay exact.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{fmt_half, parse_half};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Gl,
    OspEven,
    OspOdd,
}

/// gl(m,n), osp(2m,2n) or osp(2m+1,2n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Algebra {
    pub family: Family,
    pub m: usize,
    pub n: usize,
}

/// A basis vector of the Cartan dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Eps(usize),
    Delta(usize),
}

/// The maximal atypical families every block reduces to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reduced {
    /// gl(k,k)
    Gl,
    /// osp(2k,2k)
    Even,
    /// osp(2k+2,2k)
    ZeroMark,
    /// osp(2k+1,2k)
    Odd,
}

impl Algebra {
    pub fn new(family: Family, m: usize, n: usize) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::Shape("m+n must be positive".into()));
        }
        Ok(Algebra { family, m, n })
    }

    pub fn gl(m: usize, n: usize) -> Self {
        Algebra { family: Family::Gl, m, n }
    }

    /// osp(2m,2n).
    pub fn osp_even(m: usize, n: usize) -> Self {
        Algebra { family: Family::OspEven, m, n }
    }

    /// osp(2m+1,2n).
    pub fn osp_odd(m: usize, n: usize) -> Self {
        Algebra { family: Family::OspOdd, m, n }
    }

    /// The maximal atypical algebra of rank k for a reduced family.
    pub fn reduced(kind: Reduced, k: usize) -> Self {
        match kind {
            Reduced::Gl => Self::gl(k, k),
            Reduced::Even => Self::osp_even(k, k),
            Reduced::ZeroMark => Self::osp_even(k + 1, k),
            Reduced::Odd => Self::osp_odd(k, k),
        }
    }

    /// Which reduced family this algebra belongs to, if any.
    pub fn reduced_kind(&self) -> Option<(Reduced, usize)> {
        match self.family {
            Family::Gl if self.m == self.n => Some((Reduced::Gl, self.n)),
            Family::OspEven if self.m == self.n => Some((Reduced::Even, self.n)),
            Family::OspEven if self.m == self.n + 1 => Some((Reduced::ZeroMark, self.n)),
            Family::OspOdd if self.m == self.n => Some((Reduced::Odd, self.n)),
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Doubled coordinates of osp(2m+1,2n) weights are odd.
    pub fn half_integral(&self) -> bool {
        self.family == Family::OspOdd
    }

    fn coord(&self, b: Basis) -> usize {
        match b {
            Basis::Eps(i) => i,
            Basis::Delta(j) => self.m + j,
        }
    }

    /// The ordering of basis vectors defining the Borel subalgebra: a root is
    /// positive when it pairs positively with a height decreasing along it.
    pub fn basis_sequence(&self) -> Vec<Basis> {
        let (m, n) = (self.m, self.n);
        let eps = Basis::Eps;
        let del = Basis::Delta;
        let mut seq = Vec::with_capacity(m + n);
        match self.family {
            Family::Gl => {
                seq.extend((0..m).map(eps));
                seq.extend((0..n).map(del));
            }
            Family::OspOdd if m >= n => {
                seq.extend((0..m - n).map(eps));
                for j in 0..n {
                    seq.push(eps(m - n + j));
                    seq.push(del(j));
                }
            }
            Family::OspOdd => {
                seq.extend((0..n - m).map(del));
                for i in 0..m {
                    seq.push(eps(i));
                    seq.push(del(n - m + i));
                }
            }
            Family::OspEven if m > n => {
                seq.extend((0..m - n).map(eps));
                for j in 0..n {
                    seq.push(del(j));
                    seq.push(eps(m - n + j));
                }
            }
            Family::OspEven => {
                seq.extend((0..n - m).map(del));
                for i in 0..m {
                    seq.push(del(n - m + i));
                    seq.push(eps(i));
                }
            }
        }
        seq
    }

    fn heights(&self) -> Vec<i64> {
        let seq = self.basis_sequence();
        let total = seq.len() as i64;
        let mut h = vec![0; self.dim()];
        for (p, b) in seq.iter().enumerate() {
            h[self.coord(*b)] = total - p as i64;
        }
        h
    }

    /// Positive even and odd roots in doubled coordinates.
    pub fn positive_roots(&self) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let (m, d) = (self.m, self.dim());
        let h = self.heights();
        let mut even = Vec::new();
        let mut odd = Vec::new();
        let mut push = |terms: &[(i64, usize)], is_odd: bool| {
            let height: i64 = terms.iter().map(|&(c, i)| c * h[i]).sum();
            if height > 0 {
                let mut v = vec![0; d];
                for &(c, i) in terms {
                    v[i] += 2 * c;
                }
                if is_odd {
                    odd.push(v);
                } else {
                    even.push(v);
                }
            }
        };
        let eps: Vec<usize> = (0..m).collect();
        let del: Vec<usize> = (m..d).collect();
        let gl = self.family == Family::Gl;
        for block in [&eps, &del] {
            for x in 0..block.len() {
                for y in x + 1..block.len() {
                    for (s1, s2) in [(1, -1), (-1, 1), (1, 1), (-1, -1)] {
                        if gl && s1 == s2 {
                            continue;
                        }
                        push(&[(s1, block[x]), (s2, block[y])], false);
                    }
                }
            }
        }
        for &i in &eps {
            for &j in &del {
                for (s1, s2) in [(1, -1), (-1, 1), (1, 1), (-1, -1)] {
                    if gl && s1 == s2 {
                        continue;
                    }
                    push(&[(s1, i), (s2, j)], true);
                }
            }
        }
        if !gl {
            for &j in &del {
                push(&[(2, j)], false);
                push(&[(-2, j)], false);
            }
        }
        if self.family == Family::OspOdd {
            for &i in &eps {
                push(&[(1, i)], false);
                push(&[(-1, i)], false);
            }
            for &j in &del {
                push(&[(1, j)], true);
                push(&[(-1, j)], true);
            }
        }
        (even, odd)
    }

    /// Doubled ρ₀ = half the sum of the positive even roots.
    pub fn rho0(&self) -> Vec<i64> {
        let (even, _) = self.positive_roots();
        let mut r = vec![0; self.dim()];
        for a in &even {
            for (x, y) in r.iter_mut().zip(a) {
                *x += y;
            }
        }
        r.iter().map(|x| x / 2).collect()
    }

    /// ρ = ρ₀ − ρ₁ for the Borel of [`Algebra::basis_sequence`].
    ///
    /// For gl this is only defined modulo ε₁+…+ε_m − δ₁−…−δ_n, which is
    /// orthogonal to every root; the representative with integral
    /// coordinates is chosen.
    pub fn rho(&self) -> Weight {
        let (even, odd) = self.positive_roots();
        let mut r = vec![0i64; self.dim()];
        for a in &even {
            for (x, y) in r.iter_mut().zip(a) {
                *x += y;
            }
        }
        for a in &odd {
            for (x, y) in r.iter_mut().zip(a) {
                *x -= y;
            }
        }
        let mut r: Vec<i64> = r.iter().map(|x| x / 2).collect();
        if self.family == Family::Gl && r.iter().any(|x| x % 2 != 0) {
            for (i, x) in r.iter_mut().enumerate() {
                *x += if i < self.m { -1 } else { 1 };
            }
        }
        Weight::from_coords(self.m, r)
    }

    pub fn check_shape(&self, w: &Weight) -> Result<()> {
        if w.a.len() != self.m || w.b.len() != self.n {
            return Err(Error::Shape(format!(
                "{self} needs {} a-coordinates and {} b-coordinates",
                self.m, self.n
            )));
        }
        let want = i64::from(self.half_integral());
        if w.coords().any(|x| x.rem_euclid(2) != want) {
            return Err(Error::Parity(self.to_string()));
        }
        Ok(())
    }

    /// Dominance of λ given λ+ρ.
    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        self.check_shape(w)?;
        let dec = |v: &[i64]| v.windows(2).all(|p| p[0] > p[1]);
        Ok(match self.family {
            Family::Gl => dec(&w.a) && dec(&w.b),
            Family::OspOdd => {
                let plain = dec(&w.a)
                    && w.a.last().is_none_or(|&x| x >= 1)
                    && dec(&w.b)
                    && w.b.last().is_none_or(|&x| x >= 1);
                plain || odd_trailing_branch(&w.a, &w.b)
            }
            Family::OspEven => {
                let m = w.a.len();
                let plain = (m < 2 || {
                    let head = &w.a[..m - 1];
                    dec(head) && head[m - 2] > w.a[m - 1].abs()
                }) && dec(&w.b)
                    && w.b.last().is_none_or(|&x| x > 0);
                plain || even_trailing_branch(&w.a, &w.b)
            }
        })
    }

    pub fn require_dominant(&self, w: &Weight) -> Result<()> {
        if self.is_dominant(w)? {
            Ok(())
        } else {
            Err(Error::NotDominant(format!("{w} in {self}")))
        }
    }

    /// Number of atypical pairs and the matched (ε_i, δ_j) indices.
    pub fn atypicality(&self, w: &Weight) -> Result<(usize, Vec<(usize, usize)>)> {
        self.require_dominant(w)?;
        let pairs = self.pairing(w);
        Ok((pairs.len(), pairs))
    }

    fn pairing(&self, w: &Weight) -> Vec<(usize, usize)> {
        let mut used = vec![false; self.n];
        let mut pairs = Vec::new();
        for (i, &x) in w.a.iter().enumerate() {
            let target = match self.family {
                Family::Gl => -x,
                _ => x.abs(),
            };
            if let Some(j) = (0..self.n).find(|&j| !used[j] && w.b[j] == target) {
                used[j] = true;
                pairs.push((i, j));
            }
        }
        pairs
    }

    pub fn core_marks(&self, w: &Weight) -> Result<CoreMarks> {
        self.require_dominant(w)?;
        let pairs = self.pairing(w);
        let mut a_marks: Vec<i64> = (0..self.m)
            .filter(|i| !pairs.iter().any(|p| p.0 == *i))
            .map(|i| match self.family {
                Family::Gl => w.a[i],
                _ => w.a[i].abs(),
            })
            .collect();
        let mut b_marks: Vec<i64> = (0..self.n)
            .filter(|j| !pairs.iter().any(|p| p.1 == *j))
            .map(|j| w.b[j])
            .collect();
        a_marks.sort_unstable_by(|x, y| y.cmp(x));
        b_marks.sort_unstable_by(|x, y| y.cmp(x));
        let zero_mark_present = self.family == Family::OspEven && a_marks.contains(&0);
        Ok(CoreMarks { a_marks, b_marks, zero_mark_present })
    }

    /// Whether v − u is a nonnegative integral combination of positive roots.
    pub fn leq_standard(&self, u: &Weight, v: &Weight) -> bool {
        let diff: Vec<i64> = v.coords().zip(u.coords()).map(|(x, y)| x - y).collect();
        if diff.iter().any(|x| x % 2 != 0) {
            return false;
        }
        let seq = self.basis_sequence();
        let d: Vec<i64> = seq.iter().map(|b| diff[self.coord(*b)] / 2).collect();
        let prefix: Vec<i64> = d
            .iter()
            .scan(0, |acc, x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        let total = prefix.last().copied().unwrap_or(0);
        let len = prefix.len();
        match self.family {
            Family::Gl => total == 0 && prefix.iter().all(|&s| s >= 0),
            Family::OspOdd => prefix.iter().all(|&s| s >= 0),
            Family::OspEven if self.m == 0 => {
                prefix.iter().all(|&s| s >= 0) && total % 2 == 0
            }
            Family::OspEven if len == 1 => total == 0,
            Family::OspEven => {
                prefix[..len - 2].iter().all(|&s| s >= 0)
                    && total >= 0
                    && total % 2 == 0
                    && prefix[len - 2] >= total / 2
            }
        }
    }

    /// Every element of the even Weyl group, with its determinant.
    pub fn weyl_elements(&self) -> Result<Vec<WeylElement>> {
        let (ta, tb) = self.factor_types();
        let order = ta.order(self.m).saturating_mul(tb.order(self.n));
        if order > 10_000_000 {
            return Err(Error::TooLarge(format!("|W| = {order} for {self}")));
        }
        let left = signed_perms(self.m, ta);
        let right = signed_perms(self.n, tb);
        let mut out = Vec::with_capacity(order);
        for x in &left {
            for y in &right {
                out.push(WeylElement { a: x.clone(), b: y.clone() });
            }
        }
        Ok(out)
    }

    /// The diagram automorphism σ of osp(2m,2n): negates a_m.
    pub fn sigma_flip(&self, w: &Weight) -> Result<Weight> {
        if self.family != Family::OspEven {
            return Err(Error::WrongFamily(format!("sigma is defined for osp(2m,2n), not {self}")));
        }
        let mut out = w.clone();
        if let Some(x) = out.a.last_mut() {
            *x = -*x;
        }
        Ok(out)
    }

    /// Weyl types of the ε and δ factors of the even part.
    pub fn factor_types(&self) -> (WeylType, WeylType) {
        match self.family {
            Family::Gl => (WeylType::A, WeylType::A),
            Family::OspEven => (WeylType::D, WeylType::BC),
            Family::OspOdd => (WeylType::BC, WeylType::BC),
        }
    }

    /// Moves a regular vector (doubled) into the dominant g₀-chamber.
    /// Returns the sign of the Weyl element used, or `None` if the vector lies
    /// on a wall.
    pub fn resolve_g0(&self, x: &[i64]) -> Option<(i64, Vec<i64>)> {
        let (ta, tb) = self.factor_types();
        let (sa, ya) = ta.resolve(&x[..self.m])?;
        let (sb, yb) = tb.resolve(&x[self.m..])?;
        let mut y = ya;
        y.extend(yb);
        Some((sa * sb, y))
    }

    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        let w = parse_raw(s)?;
        self.check_shape(&w)?;
        Ok(w)
    }

    /// Reads λ rather than λ+ρ; returns λ+ρ.
    pub fn parse_lambda(&self, s: &str) -> Result<Weight> {
        let lambda = parse_raw(s)?;
        if lambda.a.len() != self.m || lambda.b.len() != self.n {
            return Err(Error::Shape(format!("{self} needs {} a-coordinates and {} b-coordinates", self.m, self.n)));
        }
        let w = self.shift_by_rho(&lambda);
        self.check_shape(&w)?;
        Ok(w)
    }

    /// λ+ρ from λ.
    pub fn shift_by_rho(&self, lambda: &Weight) -> Weight {
        lambda.plus(&self.rho())
    }

    /// λ from λ+ρ.
    pub fn unshift(&self, w: &Weight) -> Weight {
        w.minus(&self.rho())
    }
}

fn parse_raw(s: &str) -> Result<Weight> {
    let (left, right) = s
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("weight {s:?} lacks '|'")))?;
    let side = |t: &str| -> Result<Vec<i64>> {
        if t.trim().is_empty() {
            return Ok(Vec::new());
        }
        t.split(',').map(parse_half).collect()
    };
    Ok(Weight { a: side(left)?, b: side(right)? })
}

fn odd_trailing_branch(a: &[i64], b: &[i64]) -> bool {
    let p = a.iter().rev().take_while(|&&x| x == -1).count();
    if p == 0 || p > b.len() {
        return false;
    }
    let head = &a[..a.len() - p];
    let dec = |v: &[i64]| v.windows(2).all(|q| q[0] > q[1]);
    if !dec(head) || head.last().is_some_and(|&x| x < 1) {
        return false;
    }
    let (bh, bt) = b.split_at(b.len() - p);
    bt.iter().all(|&x| x == 1) && dec(bh) && bh.last().is_none_or(|&x| x >= 1)
}

fn even_trailing_branch(a: &[i64], b: &[i64]) -> bool {
    let p = b.iter().rev().take_while(|&&x| x == 0).count();
    if p == 0 || p > a.len() {
        return false;
    }
    let dec = |v: &[i64]| v.windows(2).all(|q| q[0] > q[1]);
    let (bh, _) = b.split_at(b.len() - p);
    if !dec(bh) || bh.last().is_some_and(|&x| x <= 0) {
        return false;
    }
    let (ah, at) = a.split_at(a.len() - p);
    at.iter().all(|&x| x == 0) && dec(ah) && ah.last().is_none_or(|&x| x >= 0)
}

/// λ+ρ in doubled coordinates: `a` along ε, `b` along δ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl Weight {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Self {
        Weight { a, b }
    }

    /// Builds a weight from ordinary (undoubled) integer coordinates.
    pub fn from_integers(a: &[i64], b: &[i64]) -> Self {
        Weight { a: a.iter().map(|x| 2 * x).collect(), b: b.iter().map(|x| 2 * x).collect() }
    }

    pub fn from_coords(m: usize, mut v: Vec<i64>) -> Self {
        let b = v.split_off(m);
        Weight { a: v, b }
    }

    pub fn coords(&self) -> impl Iterator<Item = i64> + '_ {
        self.a.iter().chain(&self.b).copied()
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.coords().collect()
    }

    pub fn plus(&self, o: &Weight) -> Weight {
        Weight::from_coords(self.a.len(), self.coords().zip(o.coords()).map(|(x, y)| x + y).collect())
    }

    pub fn minus(&self, o: &Weight) -> Weight {
        Weight::from_coords(self.a.len(), self.coords().zip(o.coords()).map(|(x, y)| x - y).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|&x| fmt_half(x)).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(&self.a), join(&self.b))
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Gl => write!(f, "gl({},{})", self.m, self.n),
            Family::OspEven => write!(f, "osp({},{})", 2 * self.m, 2 * self.n),
            Family::OspOdd => write!(f, "osp({},{})", 2 * self.m + 1, 2 * self.n),
        }
    }
}

impl std::str::FromStr for Algebra {
    type Err = Error;

    /// "gl:m:n" or "osp:M:N" with N even.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| -> Result<usize> {
            t.parse().map_err(|_| Error::Parse(format!("bad rank {t:?} in {s:?}")))
        };
        match parts.as_slice() {
            ["gl", m, n] => Algebra::new(Family::Gl, num(m)?, num(n)?),
            ["osp", big_m, big_n] => {
                let (big_m, big_n) = (num(big_m)?, num(big_n)?);
                if big_n % 2 != 0 {
                    return Err(Error::Parse(format!("osp({big_m},{big_n}) needs even N")));
                }
                if big_m % 2 == 0 {
                    Algebra::new(Family::OspEven, big_m / 2, big_n / 2)
                } else {
                    Algebra::new(Family::OspOdd, big_m / 2, big_n / 2)
                }
            }
            _ => Err(Error::Parse(format!("expected gl:m:n or osp:M:N, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreMarks {
    pub a_marks: Vec<i64>,
    pub b_marks: Vec<i64>,
    pub zero_mark_present: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylType {
    /// Symmetric group.
    A,
    /// All signed permutations.
    BC,
    /// Signed permutations with an even number of sign changes.
    D,
}

impl WeylType {
    pub fn order(self, r: usize) -> usize {
        let fact: usize = (1..=r).product();
        match self {
            WeylType::A => fact,
            WeylType::BC => fact.saturating_mul(1usize.checked_shl(r as u32).unwrap_or(usize::MAX)),
            WeylType::D if r == 0 => 1,
            WeylType::D => fact.saturating_mul(1usize.checked_shl(r as u32 - 1).unwrap_or(usize::MAX)),
        }
    }

    /// Dominant representative of a regular vector and the sign of the
    /// element reaching it; `None` on a wall.
    pub fn resolve(self, x: &[i64]) -> Option<(i64, Vec<i64>)> {
        let keyed: Vec<i64> = match self {
            WeylType::A => x.to_vec(),
            _ => x.iter().map(|v| v.abs()).collect(),
        };
        let mut order: Vec<usize> = (0..x.len()).collect();
        order.sort_by(|&i, &j| keyed[j].cmp(&keyed[i]));
        let mut y: Vec<i64> = order.iter().map(|&i| keyed[i]).collect();
        if y.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        let mut sign = perm_sign(&order);
        let negs = x.iter().filter(|&&v| v < 0).count();
        match self {
            WeylType::A => {}
            WeylType::BC => {
                if y.last() == Some(&0) {
                    return None;
                }
                if negs % 2 == 1 {
                    sign = -sign;
                }
            }
            WeylType::D => {
                if negs % 2 == 1 && y.last().is_some_and(|&v| v != 0) {
                    let last = y.len() - 1;
                    y[last] = -y[last];
                }
            }
        }
        Some((sign, y))
    }
}

pub(crate) fn perm_sign(p: &[usize]) -> i64 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// out[i] = ±v[perm[i]].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub neg: Vec<bool>,
}

impl SignedPerm {
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.perm
            .iter()
            .zip(&self.neg)
            .map(|(&p, &s)| if s { -v[p] } else { v[p] })
            .collect()
    }

    pub fn det(&self) -> i64 {
        let negs = self.neg.iter().filter(|&&s| s).count();
        perm_sign(&self.perm) * if negs % 2 == 0 { 1 } else { -1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub a: SignedPerm,
    pub b: SignedPerm,
}

impl WeylElement {
    /// Acts on a concatenated coordinate vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let m = self.a.perm.len();
        let mut out = self.a.apply(&v[..m]);
        out.extend(self.b.apply(&v[m..]));
        out
    }

    pub fn det(&self) -> i64 {
        self.a.det() * self.b.det()
    }
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..r {
        let mut next = Vec::with_capacity(out.len() * (k + 1));
        for p in &out {
            for pos in 0..=k {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

pub(crate) fn signed_perms(r: usize, ty: WeylType) -> Vec<SignedPerm> {
    let perms = permutations(r);
    let masks: Vec<Vec<bool>> = match ty {
        WeylType::A => vec![vec![false; r]],
        _ => (0u64..1 << r)
            .filter(|mask| ty != WeylType::D || mask.count_ones() % 2 == 0)
            .map(|mask| (0..r).map(|i| mask >> i & 1 == 1).collect())
            .collect(),
    };
    perms
        .iter()
        .flat_map(|p| masks.iter().map(move |s| SignedPerm { perm: p.clone(), neg: s.clone() }))
        .collect()
}
