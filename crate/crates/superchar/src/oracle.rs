//! Recursive evaluation of K^{λ,μ}_{G,P¹}(z) on signed diagrams, independent
//! of the move graph.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::diagrams::{Diagram, Sign};
use crate::error::{Error, Result};
use crate::poly::ZPoly;
use crate::rootdata::{Algebra, Family, Reduced, Weight};

/// Maximal atypical diagram in compact form: crosses at the tail, ascending
/// non-tail cross positions, and the tail sign (osp(2k+1,2k) only).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    pub tail: u32,
    pub crosses: Vec<usize>,
    pub sign: Option<Sign>,
}

impl Shape {
    fn new(kind: Reduced, tail: u32, crosses: Vec<usize>, sign: Option<Sign>) -> Shape {
        let sign = if kind == Reduced::Odd && tail > 0 { sign } else { None };
        Shape { tail, crosses, sign }
    }

    /// Reads a standard (osp(2k,2k), osp(2k+2,2k)) or signed (osp(2k+1,2k))
    /// diagram.
    pub fn of_diagram(kind: Reduced, f: &Diagram) -> Result<Shape> {
        if f.cells.iter().skip(1).any(|c| c.core() > 0 || c.cross > 1) {
            return Err(Error::NonCanonical(format!("{f} is not maximal atypical")));
        }
        Ok(Shape::new(kind, f.tail().cross, f.nontail_crosses(), f.sign))
    }

    fn rank(&self) -> usize {
        self.tail as usize + self.crosses.len()
    }

    fn top(&self) -> Option<usize> {
        self.crosses.last().copied()
    }

    fn is_zero(&self, kind: Reduced) -> bool {
        self.crosses.is_empty() && (kind != Reduced::Odd || self.sign != Some(Sign::Plus))
    }

    fn is_eps1(&self, kind: Reduced) -> bool {
        kind == Reduced::Odd && self.crosses.is_empty() && self.sign == Some(Sign::Plus)
    }

    /// Second largest cross position, the tail counting as 0.
    fn second(&self) -> Option<usize> {
        let n = self.crosses.len();
        if n >= 2 {
            Some(self.crosses[n - 2])
        } else if self.tail > 0 {
            Some(0)
        } else {
            None
        }
    }

    fn l(&self, s: usize, t: usize) -> i64 {
        (s + 1..t).map(|r| if self.crosses.contains(&r) { 1 } else { -1 }).sum()
    }

    fn without(&self, kind: Reduced, drop: &[usize]) -> Shape {
        let crosses = self.crosses.iter().copied().filter(|p| !drop.contains(p)).collect();
        Shape::new(kind, self.tail, crosses, self.sign)
    }
}

fn zero_value(kind: Reduced, k: usize) -> ZPoly {
    match kind {
        Reduced::Even => ZPoly::one().add(&ZPoly::monomial(2 * k as u32 - 1)),
        Reduced::ZeroMark => ZPoly::one().add(&ZPoly::monomial(2 * k as u32)),
        _ => ZPoly::one(),
    }
}

/// The pair conditions for moving two crosses from the tail to t₁−1, t₁.
pub fn exceptional_shapes(kind: Reduced, lambda: &Shape, mu: &Shape) -> bool {
    let Some(t1) = lambda.top() else { return false };
    let t = t1 - 1;
    if t == 0 || !lambda.crosses.contains(&t) {
        return false;
    }
    // signs must agree literally, so an osp(2k+1,2k) λ with empty tail never pairs
    let expected = Shape { tail: lambda.tail + 2, ..lambda.without(kind, &[t, t1]) };
    if *mu != expected {
        return false;
    }
    let norm = 2 * i64::from(lambda.tail) + i64::from(kind == Reduced::ZeroMark);
    let l0 = lambda.l(0, t);
    let parity_ok = match kind {
        Reduced::ZeroMark => l0 % 2 == 0,
        _ => l0.rem_euclid(2) == 1,
    };
    parity_ok && (0..t).all(|s| lambda.l(s, t) <= 0) && l0 + norm > 0
}

type Key = (Reduced, usize, Shape, Shape);

/// Memoized recursion. Entries are written once; the lock is never held
/// across a recursive call.
#[derive(Debug, Default)]
pub struct Oracle {
    memo: Mutex<HashMap<Key, ZPoly>>,
}

impl Oracle {
    pub fn new() -> Self {
        Oracle::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.lock().map(|m| m.len()).unwrap_or(0)
    }

    /// K^{λ,μ}_{G,P¹}(z) for λ+ρ and μ+ρ given as weights.
    pub fn k_poly(&self, alg: &Algebra, lambda: &Weight, mu: &Weight) -> Result<ZPoly> {
        reduced_osp(alg)?;
        let (mut lambda, mut mu) = (lambda.clone(), mu.clone());
        if alg.family == Family::OspEven && lambda.a.last().is_some_and(|&x| x < 0) {
            lambda = alg.sigma_flip(&lambda)?;
            mu = alg.sigma_flip(&mu)?;
        }
        for w in [&lambda, &mu] {
            if alg.atypicality(w)?.0 != alg.m.min(alg.n) {
                return Err(Error::OutOfRegime(format!("{w} is not in the principal block of {alg}")));
            }
        }
        if alg.family == Family::OspEven && mu.a.last().is_some_and(|&x| x < 0) {
            return Ok(ZPoly::zero());
        }
        let f = Diagram::of_weight(alg, &lambda)?;
        let g = Diagram::of_weight(alg, &mu)?;
        self.k_poly_diagrams(alg, &f, &g)
    }

    /// The same on standard or signed diagrams.
    pub fn k_poly_diagrams(&self, alg: &Algebra, lambda: &Diagram, mu: &Diagram) -> Result<ZPoly> {
        let (kind, k) = reduced_osp(alg)?;
        let l = Shape::of_diagram(kind, lambda)?;
        let m = Shape::of_diagram(kind, mu)?;
        if l.rank() != k || m.rank() != k {
            return Err(Error::OutOfRegime(format!("{lambda} or {mu} is not maximal atypical in {alg}")));
        }
        self.eval(kind, k, &l, &m)
    }

    fn eval(&self, kind: Reduced, k: usize, lambda: &Shape, mu: &Shape) -> Result<ZPoly> {
        let key = (kind, k, lambda.clone(), mu.clone());
        if let Some(p) = self.memo.lock().ok().and_then(|m| m.get(&key).cloned()) {
            return Ok(p);
        }
        let p = self.compute(kind, k, lambda, mu)?;
        if let Ok(mut m) = self.memo.lock() {
            m.entry(key).or_insert_with(|| p.clone());
        }
        Ok(p)
    }

    fn compute(&self, kind: Reduced, k: usize, lambda: &Shape, mu: &Shape) -> Result<ZPoly> {
        let odd = kind == Reduced::Odd;
        if lambda.is_zero(kind) && !odd {
            return Ok(if mu.is_zero(kind) { zero_value(kind, k) } else { ZPoly::zero() });
        }
        if lambda == mu {
            return Ok(ZPoly::one());
        }
        if lambda.is_zero(kind) {
            return Ok(ZPoly::zero());
        }
        if lambda.is_eps1(kind) {
            return Ok(if mu.is_zero(kind) { ZPoly::monomial(2 * k as u32 - 1) } else { ZPoly::zero() });
        }
        let Some(t1) = lambda.top() else {
            return Err(Error::Internal(format!("{lambda:?} has no cross off the tail")));
        };
        if t1 == 1 {
            return Ok(self.pretail(kind, k, lambda, mu));
        }
        if exceptional_shapes(kind, lambda, mu) {
            return Ok(ZPoly::one());
        }
        let second = lambda.second();
        if second.is_none_or(|t2| t1 >= t2 + 2) {
            let mut crosses = lambda.crosses.clone();
            let n = crosses.len();
            crosses[n - 1] = t1 - 1;
            let lower = Shape::new(kind, lambda.tail, crosses, lambda.sign);
            if *mu == lower {
                return Ok(ZPoly::one());
            }
            return Ok(self.eval(kind, k, &lower, mu)?.shift_down_truncated());
        }
        match second {
            Some(t2) if t2 >= 1 && t1 == t2 + 1 => {
                if mu.top() != Some(t2) {
                    return Ok(ZPoly::zero());
                }
                let l = lambda.without(kind, &[t1]);
                let m = mu.without(kind, &[t2]);
                Ok(self.eval(kind, k - 1, &l, &m)?.shift_up())
            }
            _ => Err(Error::OutOfRegime(format!("no recursion clause for {lambda:?}, {mu:?}"))),
        }
    }

    fn pretail(&self, kind: Reduced, k: usize, lambda: &Shape, mu: &Shape) -> ZPoly {
        let kk = k as u32;
        match kind {
            Reduced::Even if mu.is_zero(kind) => {
                if k == 1 {
                    ZPoly::one()
                } else {
                    ZPoly::one().add(&ZPoly::monomial(2 * kk - 2))
                }
            }
            Reduced::ZeroMark if mu.is_zero(kind) => ZPoly::monomial(2 * kk - 1),
            Reduced::Odd => {
                let first = k == 1 || lambda.sign == Some(Sign::Minus);
                match (first, mu.is_eps1(kind), mu.is_zero(kind)) {
                    (true, true, _) | (false, _, true) => ZPoly::one(),
                    (true, _, true) | (false, true, _) => ZPoly::monomial(2 * kk - 2),
                    _ => ZPoly::zero(),
                }
            }
            _ => ZPoly::zero(),
        }
    }
}

fn reduced_osp(alg: &Algebra) -> Result<(Reduced, usize)> {
    match alg.reduced_kind() {
        Some((Reduced::Gl, _)) | None => Err(Error::WrongFamily(format!("{alg} is not a reduced osp algebra"))),
        Some(x) => Ok(x),
    }
}

/// Whether (λ,μ), given by λ+ρ and μ+ρ, is an exceptional pair.
pub fn is_exceptional_pair(alg: &Algebra, lambda: &Weight, mu: &Weight) -> Result<bool> {
    let (kind, _) = reduced_osp(alg)?;
    let l = Shape::of_diagram(kind, &Diagram::of_weight(alg, lambda)?)?;
    let m = Shape::of_diagram(kind, &Diagram::of_weight(alg, mu)?)?;
    Ok(exceptional_shapes(kind, &l, &m))
}
