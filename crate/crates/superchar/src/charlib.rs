//! Euler characteristics and simple characters, as combinations of E_μ, as
//! g₀-decompositions, or as Laurent polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::diagrams::{bar_reduce_diagram, Cell, Diagram, Sign};
use crate::error::{Error, Result};
use crate::kdengine::Block;
use crate::poly::LaurentPoly;
use crate::rootdata::{Algebra, Family, WeylElement, Weight};

/// Multiplicities of g₀-irreducibles, keyed by doubled highest weight.
pub type G0Decomposition = BTreeMap<Vec<i64>, i64>;

/// Laurent expansions stop here.
pub const TERM_BUDGET: usize = 2_000_000;

fn osp_only(alg: &Algebra) -> Result<()> {
    if alg.family == Family::Gl {
        return Err(Error::WrongFamily(format!("characters of {alg} are not finite combinations")));
    }
    Ok(())
}

/// Which coordinates belong to the tail Levi of q_μ: the last s ε and δ
/// coordinates, plus one more ε when an osp(2m,2n) tail carries >.
pub fn tail_levi(alg: &Algebra, w: &Weight) -> Result<Vec<bool>> {
    let f = Diagram::of_weight(alg, w)?;
    let s = f.tail_length() as usize;
    let sa = (s + usize::from(alg.family == Family::OspEven && f.tail().gt)).min(alg.m);
    let sb = s.min(alg.n);
    let mut mask = vec![false; alg.m + alg.n];
    mask[alg.m - sa..alg.m].iter_mut().for_each(|x| *x = true);
    mask[alg.m + alg.n - sb..].iter_mut().for_each(|x| *x = true);
    Ok(mask)
}

/// E_μ for μ+ρ = w, decomposed over g₀: the alternating sum over W of
/// e^{μ+ρ₀} times the product of (1+e^{−α}) over the odd positive roots
/// outside the tail Levi, resolved monomial by monomial.
pub fn euler_g0(alg: &Algebra, w: &Weight) -> Result<G0Decomposition> {
    osp_only(alg)?;
    alg.require_dominant(w)?;
    let levi = tail_levi(alg, w)?;
    let (_, odd) = alg.positive_roots();
    let outside = odd
        .iter()
        .filter(|r| r.iter().zip(&levi).any(|(&x, &inside)| x != 0 && !inside));
    let dim = alg.m + alg.n;
    let mut product: HashMap<Vec<i64>, i64> = HashMap::from([(vec![0; dim], 1)]);
    for root in outside {
        let mut next = product.clone();
        for (v, c) in &product {
            let u: Vec<i64> = v.iter().zip(root).map(|(x, y)| x - y).collect();
            *next.entry(u).or_insert(0) += c;
        }
        product = next;
    }
    let rho0 = alg.rho0();
    let shifted: Vec<i64> = alg.unshift(w).to_vec().iter().zip(&rho0).map(|(x, r)| x + r).collect();
    let mut out = G0Decomposition::new();
    for (v, c) in product {
        let x: Vec<i64> = shifted.iter().zip(&v).map(|(a, b)| a + b).collect();
        if let Some((sign, y)) = alg.resolve_g0(&x) {
            let hw: Vec<i64> = y.iter().zip(&rho0).map(|(a, r)| a - r).collect();
            *out.entry(hw).or_insert(0) += sign * c;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Character of the g₀-irreducible with doubled highest weight `hw`.
pub fn g0_character(alg: &Algebra, hw: &[i64], weyl: &[WeylElement]) -> Result<LaurentPoly> {
    let rho0 = alg.rho0();
    let top: Vec<i64> = hw.iter().zip(&rho0).map(|(a, r)| a + r).collect();
    let mut p = LaurentPoly::zero(alg.m);
    for g in weyl {
        let e: Vec<i64> = g.apply(&top).iter().zip(&rho0).map(|(a, r)| a - r).collect();
        p.add_term(e, g.det());
    }
    let (even, _) = alg.positive_roots();
    for root in &even {
        p = divide_by_one_minus(&p, root)?;
    }
    Ok(p)
}

/// p / (1 − e^{−α}), exact.
fn divide_by_one_minus(p: &LaurentPoly, root: &[i64]) -> Result<LaurentPoly> {
    let Some(i) = root.iter().position(|&x| x != 0) else {
        return Err(Error::Internal("zero root".into()));
    };
    let mut strings: HashMap<Vec<i64>, BTreeMap<i64, i64>> = HashMap::new();
    for (e, &c) in &p.terms {
        let k = e[i].div_euclid(root[i]);
        let base: Vec<i64> = e.iter().zip(root).map(|(x, r)| x - k * r).collect();
        *strings.entry(base).or_default().entry(k).or_insert(0) += c;
    }
    let mut out = LaurentPoly::zero(p.m);
    for (base, coeffs) in strings {
        let (&lo, _) = coeffs.first_key_value().unwrap_or((&0, &0));
        let (&hi, _) = coeffs.last_key_value().unwrap_or((&0, &0));
        let mut run = 0;
        for k in (lo..=hi).rev() {
            run += coeffs.get(&k).copied().unwrap_or(0);
            if run != 0 {
                out.add_term(base.iter().zip(root).map(|(x, r)| x + k * r).collect(), run);
            }
        }
        if run != 0 {
            return Err(Error::Internal("Weyl numerator is not divisible".into()));
        }
        if out.len() > TERM_BUDGET {
            return Err(Error::TooLarge(format!("more than {TERM_BUDGET} monomials")));
        }
    }
    Ok(out)
}

/// Expands a g₀-decomposition into a Laurent polynomial.
pub fn expand(alg: &Algebra, dec: &G0Decomposition) -> Result<LaurentPoly> {
    let weyl = alg.weyl_elements()?;
    let mut out = LaurentPoly::zero(alg.m);
    for (hw, &c) in dec {
        out.add_scaled(&g0_character(alg, hw, &weyl)?, c);
        if out.len() > TERM_BUDGET {
            return Err(Error::TooLarge(format!("more than {TERM_BUDGET} monomials")));
        }
    }
    Ok(out)
}

pub fn euler_character(alg: &Algebra, w: &Weight) -> Result<LaurentPoly> {
    expand(alg, &euler_g0(alg, w)?)
}

/// Σ c_μ E_μ, weights given as μ+ρ, highest first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterExpr {
    pub terms: Vec<(i64, Weight)>,
}

impl fmt::Display for CharacterExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, w)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "\u{2212}" } else { "+" };
            match (i, *c < 0) {
                (0, false) => {}
                (0, true) => write!(f, "{sign}")?,
                _ => write!(f, " {sign} ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "E({w})")?;
        }
        Ok(())
    }
}

/// Ch(L_λ) = Σ D^{λ,μ} E_μ for λ+ρ = w.
pub fn simple_character_expr(alg: &Algebra, w: &Weight) -> Result<CharacterExpr> {
    osp_only(alg)?;
    alg.require_dominant(w)?;
    let flip = alg.family == Family::OspEven && w.a.last().is_some_and(|&x| x < 0);
    let w = if flip { alg.sigma_flip(w)? } else { w.clone() };
    let f = Diagram::of_weight(alg, &w)?;
    let reduced = bar_reduce_diagram(&f)?;
    let k = reduced.total_crosses() as usize;
    if k == 0 {
        let w = if flip { alg.sigma_flip(&w)? } else { w };
        return Ok(CharacterExpr { terms: vec![(1, w)] });
    }
    let ralg = match alg.family {
        Family::OspOdd => Algebra::osp_odd(k, k),
        _ if reduced.tail().gt => Algebra::osp_even(k + 1, k),
        _ => Algebra::osp_even(k, k),
    };
    let canonical = if alg.family == Family::OspOdd { reduced.canonicalize_odd()? } else { reduced };
    let block = Block::ancestors_of(&ralg, &canonical)?;
    let l = block
        .position(&canonical)
        .ok_or_else(|| Error::Internal(format!("{canonical} missing from its own block")))?;
    let d = block.d_matrix()?;
    let same = ralg == *alg;
    let lift = if same { HashMap::new() } else { pullback(alg, &f)? };
    let mut terms = Vec::new();
    for i in l..block.len() {
        let c = d.get(i, l);
        if c == 0 {
            continue;
        }
        let mu = if same {
            block.member_weight(i)?
        } else {
            let key = block.member_signed(i)?;
            let g = lift
                .get(&key)
                .ok_or_else(|| Error::Internal(format!("no preimage of {key} in {alg}")))?;
            g.weights(alg)?.swap_remove(0)
        };
        terms.push((c, if flip { alg.sigma_flip(&mu)? } else { mu }));
    }
    Ok(CharacterExpr { terms })
}

/// Diagrams of the block of f in alg, keyed by their bar reductions.
fn pullback(alg: &Algebra, f: &Diagram) -> Result<HashMap<Diagram, Diagram>> {
    let core = f.core_diagram();
    let k = f.total_crosses();
    let reach = f.rightmost_cross().unwrap_or(0);
    let open: Vec<usize> = (1..=reach).filter(|&p| core.cell(p).core() == 0).collect();
    let mut out = HashMap::new();
    for j in 0..=(k as usize).min(open.len()) {
        for subset in subsets(&open, j) {
            let mut cells = core.cells.clone();
            if cells.len() <= reach {
                cells.resize(reach + 1, Cell::EMPTY);
            }
            cells[0].cross = k - j as u32;
            for p in subset {
                cells[p].cross = 1;
            }
            let signs: &[Option<Sign>] = if alg.family == Family::OspOdd && cells[0].cross > 0 && cells[0].core() == 0 {
                &[Some(Sign::Plus), Some(Sign::Minus)]
            } else {
                &[None]
            };
            for &sign in signs {
                let g = Diagram::new(alg.family, 0, cells.clone(), sign);
                if g.weights(alg).is_ok() {
                    out.insert(bar_reduce_diagram(&g)?, g);
                }
            }
        }
    }
    Ok(out)
}

fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in pool.iter().enumerate() {
        for mut rest in subsets(&pool[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Ch(L_λ) over g₀.
pub fn simple_character_g0(alg: &Algebra, w: &Weight) -> Result<G0Decomposition> {
    let expr = simple_character_expr(alg, w)?;
    let mut out = G0Decomposition::new();
    for (c, mu) in &expr.terms {
        for (hw, m) in euler_g0(alg, mu)? {
            *out.entry(hw).or_insert(0) += c * m;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

pub fn simple_character_laurent(alg: &Algebra, w: &Weight) -> Result<LaurentPoly> {
    expand(alg, &simple_character_g0(alg, w)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Expr,
    Laurent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Character {
    Expr(CharacterExpr),
    Laurent(LaurentPoly),
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Character::Expr(e) => e.fmt(f),
            Character::Laurent(p) => p.fmt(f),
        }
    }
}

pub fn simple_character(alg: &Algebra, w: &Weight, mode: Mode) -> Result<Character> {
    Ok(match mode {
        Mode::Expr => Character::Expr(simple_character_expr(alg, w)?),
        Mode::Laurent => Character::Laurent(simple_character_laurent(alg, w)?),
    })
}

/// Value at the identity.
pub fn dimension_eval(c: &LaurentPoly) -> i64 {
    c.dimension()
}
