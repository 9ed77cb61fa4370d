//! Legal and exceptional moves on canonical maximal atypical diagrams, caps
//! and free positions.
//!
//! Canonical means: osp(2k,2k) or osp(2k+2,2k) diagrams (tail holds crosses
//! and at most one >), or the <-tailed model of osp(2k+1,2k); no core
//! symbols away from the tail.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagrams::{Cell, Diagram};
use crate::error::{Error, Result};
use crate::rootdata::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    Ordinary,
    TailLow,
    TailHigh,
    Exceptional,
}

/// A labeled edge (s,t;w), or (s₀:s,t;w) for exceptional moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveEdge {
    pub kind: MoveKind,
    pub start: usize,
    pub mid: Option<usize>,
    pub end: usize,
    pub degree: u32,
}

impl fmt::Display for MoveEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mid {
            Some(s) => write!(f, "({}:{},{};{})", self.start, s, self.end, self.degree),
            None => write!(f, "({},{};{})", self.start, self.end, self.degree),
        }
    }
}

pub fn check_canonical(f: &Diagram) -> Result<()> {
    let bad = |why: &str| Err(Error::NonCanonical(format!("{f}: {why}")));
    let tail = f.tail();
    match f.family {
        Family::Gl => return bad("gl diagrams have no move calculus here"),
        Family::OspEven if tail.lt => return bad("< at the zero position"),
        Family::OspOdd if !tail.lt || tail.gt || f.sign.is_some() => {
            return bad("osp(2k+1,2k) blocks use the <-tailed model")
        }
        _ => {}
    }
    if f.cells.iter().skip(1).any(|c| c.core() > 0 || c.cross > 1) {
        return bad("core symbols away from the tail");
    }
    Ok(())
}

fn step_value(f: &Diagram, r: usize) -> i64 {
    if f.cell(r).cross > 0 {
        1
    } else {
        -1
    }
}

fn l_raw(f: &Diagram, s: usize, t: usize) -> i64 {
    (s + 1..t).map(|r| step_value(f, r)).sum()
}

/// Crosses minus empty positions strictly between s and t.
pub fn l_between(f: &Diagram, s: usize, t: usize) -> Result<i64> {
    if (s + 1..t).any(|r| r > 0 && f.cell(r).core() > 0) {
        return Err(Error::NonCanonical(format!("{f}: core symbol between {s} and {t}")));
    }
    Ok(l_raw(f, s, t))
}

/// Twice the tail crosses plus the tail core symbols.
pub fn tail_norm(f: &Diagram) -> u32 {
    let t = f.tail();
    2 * t.cross + t.core()
}

fn with_move(f: &Diagram, from: &[usize], to: &[usize]) -> Diagram {
    let mut g = f.clone();
    for &s in from {
        g.cell_mut(s).cross -= 1;
    }
    for &t in to {
        *g.cell_mut(t) = Cell::CROSS;
    }
    Diagram::new(g.family, 0, g.cells, None)
}

/// Ends t > s reachable with l(s,r) ≥ 0 for all s<r<t and l(s,t) ≥ 0,
/// with their l(s,t).
fn weak_ends(f: &Diagram, s: usize) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    let mut w = 0;
    let mut t = s + 1;
    while w >= 0 {
        if f.cell(t).cross == 0 {
            out.push((t, w));
        }
        w += step_value(f, t);
        t += 1;
    }
    out
}

/// Ordinary and tail moves out of f.
pub fn legal_moves_from(f: &Diagram) -> Result<Vec<(Diagram, MoveEdge)>> {
    check_canonical(f)?;
    let mut out = Vec::new();
    for s in f.nontail_crosses() {
        for (t, w) in weak_ends(f, s) {
            let e = MoveEdge { kind: MoveKind::Ordinary, start: s, mid: None, end: t, degree: w as u32 };
            out.push((with_move(f, &[s], &[t]), e));
        }
    }
    let tail = f.tail();
    if tail.cross > 0 {
        let ng = i64::from(tail_norm(f)) - 2;
        let low_allowed = tail.core() == 0;
        let mut low_alive = low_allowed;
        let mut w = 0;
        let mut t = 1;
        while ng + w >= 0 {
            low_alive &= w >= 0;
            if f.cell(t).cross == 0 {
                let g = with_move(f, &[0], &[t]);
                let high = MoveEdge { kind: MoveKind::TailHigh, start: 0, mid: None, end: t, degree: (ng + w) as u32 };
                out.push((g.clone(), high));
                if low_alive && ng != 0 {
                    let low = MoveEdge { kind: MoveKind::TailLow, degree: w as u32, ..high };
                    out.push((g, low));
                }
            }
            w += step_value(f, t);
            t += 1;
        }
    }
    Ok(out)
}

/// Moves of two tail crosses to s < t.
pub fn exceptional_moves_from(f: &Diagram) -> Result<Vec<(Diagram, MoveEdge)>> {
    check_canonical(f)?;
    let mut out = Vec::new();
    if f.tail().cross < 2 {
        return Ok(out);
    }
    let ng = i64::from(tail_norm(f)) - 4;
    let last = f.cells.len();
    for s in 1..=last + ng.max(0) as usize + 2 {
        if f.cell(s).cross > 0 {
            continue;
        }
        let mut suffix = 0;
        let mut left_ok = true;
        for a in (0..s).rev() {
            if suffix > 0 {
                left_ok = false;
                break;
            }
            if a > 0 {
                suffix += step_value(f, a);
            }
        }
        if !left_ok {
            continue;
        }
        let v = ng + l_raw(f, 0, s);
        if v <= 0 || v % 2 == 0 {
            continue;
        }
        for (t, w) in weak_ends(f, s) {
            let e = MoveEdge { kind: MoveKind::Exceptional, start: 0, mid: Some(s), end: t, degree: w as u32 };
            out.push((with_move(f, &[0, 0], &[s, t]), e));
        }
    }
    Ok(out)
}

pub fn all_moves_from(f: &Diagram) -> Result<Vec<(Diagram, MoveEdge)>> {
    let mut out = legal_moves_from(f)?;
    out.extend(exceptional_moves_from(f)?);
    Ok(out)
}

/// For each non-tail cross, the end of its unique degree-0 ordinary move.
pub fn caps_of(f: &Diagram) -> Result<Vec<(usize, usize)>> {
    check_canonical(f)?;
    let mut caps = Vec::new();
    for s in f.nontail_crosses() {
        let zero: Vec<usize> = weak_ends(f, s).into_iter().filter(|&(_, w)| w == 0).map(|(t, _)| t).collect();
        match zero.as_slice() {
            [t] => caps.push((s, *t)),
            _ => return Err(Error::Internal(format!("{f}: {} degree-0 moves from {s}", zero.len()))),
        }
    }
    for (i, &(s1, t1)) in caps.iter().enumerate() {
        for &(s2, t2) in &caps[i + 1..] {
            let disjoint = t1 < s2;
            let nested = t2 < t1;
            if !(disjoint || nested) {
                return Err(Error::Internal(format!("{f}: caps ({s1},{t1}) and ({s2},{t2}) overlap")));
            }
        }
    }
    Ok(caps)
}

pub fn free_horizon(f: &Diagram) -> usize {
    f.cells.len() + 2 * f.total_crosses() as usize + 2
}

/// Empty non-tail positions that end no cap, up to [`free_horizon`].
pub fn free_positions(f: &Diagram) -> Result<Vec<usize>> {
    let caps = caps_of(f)?;
    Ok((1..=free_horizon(f))
        .filter(|&t| f.cell(t).cross == 0 && !caps.iter().any(|c| c.1 == t))
        .collect())
}
