//! Weight diagrams: construction from weights and back, translation steps,
//! bar reduction and the <-tailed model of osp(2k+1,2k) blocks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{Algebra, Family, Weight};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub gt: bool,
    pub lt: bool,
    pub cross: u32,
}

impl Cell {
    pub const EMPTY: Cell = Cell { gt: false, lt: false, cross: 0 };
    pub const CROSS: Cell = Cell { gt: false, lt: false, cross: 1 };

    pub fn is_empty(&self) -> bool {
        *self == Cell::EMPTY
    }

    pub fn core(&self) -> u32 {
        u32::from(self.gt) + u32::from(self.lt)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// A finitely supported diagram. Index p sits at p+offset (gl), p
/// (osp(2m,2n)) or p+½ (osp(2m+1,2n)); index 0 is the tail for osp.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Diagram {
    pub family: Family,
    pub offset: i64,
    pub cells: Vec<Cell>,
    pub sign: Option<Sign>,
}

impl Diagram {
    pub fn new(family: Family, offset: i64, cells: Vec<Cell>, sign: Option<Sign>) -> Self {
        let mut d = Diagram { family, offset, cells, sign };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        while self.cells.last().is_some_and(Cell::is_empty) {
            self.cells.pop();
        }
        if self.family == Family::Gl {
            let lead = self.cells.iter().take_while(|c| c.is_empty()).count();
            if lead == self.cells.len() {
                self.offset = 0;
            } else {
                self.cells.drain(..lead);
                self.offset += lead as i64;
            }
        } else {
            self.offset = 0;
        }
    }

    pub fn cell(&self, p: usize) -> Cell {
        self.cells.get(p).copied().unwrap_or_default()
    }

    pub fn cell_mut(&mut self, p: usize) -> &mut Cell {
        if p >= self.cells.len() {
            self.cells.resize(p + 1, Cell::EMPTY);
        }
        &mut self.cells[p]
    }

    pub fn has_tail(&self) -> bool {
        self.family != Family::Gl
    }

    pub fn tail(&self) -> Cell {
        if self.has_tail() {
            self.cell(0)
        } else {
            Cell::EMPTY
        }
    }

    /// Doubled semantic position of index p.
    pub fn position2(&self, p: usize) -> i64 {
        match self.family {
            Family::Gl => 2 * (self.offset + p as i64),
            Family::OspEven => 2 * p as i64,
            Family::OspOdd => 2 * p as i64 + 1,
        }
    }

    pub fn total_crosses(&self) -> u32 {
        self.cells.iter().map(|c| c.cross).sum()
    }

    /// Indices of crosses outside the tail, ascending.
    pub fn nontail_crosses(&self) -> Vec<usize> {
        let start = usize::from(self.has_tail());
        (start..self.cells.len()).filter(|&p| self.cells[p].cross > 0).collect()
    }

    /// Index of the rightmost cross (0 if all crosses sit at the tail).
    pub fn rightmost_cross(&self) -> Option<usize> {
        (0..self.cells.len()).rev().find(|&p| self.cells[p].cross > 0)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::MalformedDiagram(format!("{self}: {why}")));
        for (p, c) in self.cells.iter().enumerate() {
            let tail = p == 0 && self.has_tail();
            if tail {
                if self.family == Family::OspEven && c.lt {
                    return bad("< at the zero position");
                }
                if c.gt && c.lt {
                    return bad("two core symbols at the tail");
                }
            } else if c.core() + c.cross > 1 {
                return bad("more than one symbol at a position");
            }
        }
        let tail = self.tail();
        let wants_sign = self.family == Family::OspOdd && tail.cross > 0 && tail.core() == 0;
        if wants_sign != self.sign.is_some() {
            return bad("indicator present iff osp(2m+1,2n) tail holds crosses and no core symbol");
        }
        Ok(())
    }

    /// Replaces every cross by an empty cell.
    pub fn core_diagram(&self) -> Diagram {
        let cells = self.cells.iter().map(|c| Cell { cross: 0, ..*c }).collect();
        Diagram::new(self.family, self.offset, cells, None)
    }

    /// Builds f_λ from λ+ρ.
    pub fn of_weight(alg: &Algebra, w: &Weight) -> Result<Diagram> {
        alg.require_dominant(w)?;
        let (xs, ys): (Vec<i64>, Vec<i64>) = match alg.family {
            Family::Gl => (w.a.iter().map(|x| x / 2).collect(), w.b.iter().map(|y| -y / 2).collect()),
            Family::OspEven => (w.a.iter().map(|x| x.abs() / 2).collect(), w.b.iter().map(|y| y / 2).collect()),
            Family::OspOdd => (
                w.a.iter().map(|x| (x.abs() - 1) / 2).collect(),
                w.b.iter().map(|y| (y - 1) / 2).collect(),
            ),
        };
        let offset = match alg.family {
            Family::Gl => xs.iter().chain(&ys).copied().min().unwrap_or(0),
            _ => 0,
        };
        let len = xs.iter().chain(&ys).map(|&v| (v - offset) as usize + 1).max().unwrap_or(0);
        let mut gt = vec![0u32; len];
        let mut lt = vec![0u32; len];
        for &x in &xs {
            gt[(x - offset) as usize] += 1;
        }
        for &y in &ys {
            lt[(y - offset) as usize] += 1;
        }
        let mut cells = Vec::with_capacity(len);
        for p in 0..len {
            let cross = gt[p].min(lt[p]);
            let (g, l) = (gt[p] - cross, lt[p] - cross);
            if g > 1 || l > 1 {
                return Err(Error::Internal(format!("dominant weight {w} stacks core symbols")));
            }
            cells.push(Cell { gt: g == 1, lt: l == 1, cross });
        }
        let mut sign = None;
        if alg.family == Family::OspOdd && cells.first().is_some_and(|c| c.cross > 0 && c.core() == 0) {
            sign = Some(if w.a.contains(&1) { Sign::Plus } else { Sign::Minus });
        }
        Ok(Diagram::new(alg.family, offset, cells, sign))
    }

    /// Every dominant λ+ρ with this diagram: one weight, or two for
    /// osp(2m,2n) diagrams with an empty zero position (positive first).
    pub fn weights(&self, alg: &Algebra) -> Result<Vec<Weight>> {
        if alg.family != self.family {
            return Err(Error::WrongFamily(format!("{self} is not a diagram of {alg}")));
        }
        self.validate()?;
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (p, c) in self.cells.iter().enumerate() {
            let v = self.position2(p);
            let na = c.cross + u32::from(c.gt);
            let nb = c.cross + u32::from(c.lt);
            match self.family {
                Family::Gl => {
                    a.extend(std::iter::repeat_n(v, na as usize));
                    b.extend(std::iter::repeat_n(-v, nb as usize));
                }
                Family::OspEven => {
                    a.extend(std::iter::repeat_n(v, na as usize));
                    b.extend(std::iter::repeat_n(v, nb as usize));
                }
                Family::OspOdd if p == 0 => {
                    let plus = usize::from(c.gt || self.sign == Some(Sign::Plus));
                    let plus = plus.min(na as usize);
                    a.extend(std::iter::repeat_n(1, plus));
                    a.extend(std::iter::repeat_n(-1, na as usize - plus));
                    b.extend(std::iter::repeat_n(1, nb as usize));
                }
                Family::OspOdd => {
                    a.extend(std::iter::repeat_n(v, na as usize));
                    b.extend(std::iter::repeat_n(v, nb as usize));
                }
            }
        }
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable_by(|x, y| y.cmp(x));
        if a.len() != alg.m || b.len() != alg.n {
            return Err(Error::MalformedDiagram(format!(
                "{self} has {} ε-symbols and {} δ-symbols, {alg} needs {} and {}",
                a.len(),
                b.len(),
                alg.m,
                alg.n
            )));
        }
        let w = Weight::new(a, b);
        if !alg.is_dominant(&w)? {
            return Err(Error::MalformedDiagram(format!("{self} reads back to non-dominant {w}")));
        }
        let mut out = vec![w.clone()];
        if self.family == Family::OspEven && alg.m > 0 && self.tail().is_empty() {
            out.push(alg.sigma_flip(&w)?);
        }
        Ok(out)
    }

    /// Moves the core symbol at `p` one step, exchanging with a cross.
    pub fn translation_step(&self, p: usize, dir: Direction) -> Result<Diagram> {
        let illegal = |why: &str| Err(Error::IllegalStep(format!("{self} at {p}: {why}")));
        let q = match dir {
            Direction::Right => p + 1,
            Direction::Left if p == 0 => {
                if self.family != Family::Gl {
                    return illegal("nothing lies left of the tail");
                }
                // shift the frame so index -1 exists
                let mut cells = vec![Cell::EMPTY];
                cells.extend(self.cells.iter().copied());
                let shifted = Diagram { family: self.family, offset: self.offset - 1, cells, sign: None };
                let moved = shifted.translation_step(1, Direction::Left)?;
                return Ok(moved);
            }
            Direction::Left => p - 1,
        };
        let src = self.cell(p);
        let dst = self.cell(q);
        let tail_involved = self.has_tail() && (p == 0 || q == 0);
        if tail_involved && self.family == Family::OspEven {
            return illegal("symbols never move from or to the zero position");
        }
        if src.core() != 1 {
            return illegal("no single core symbol to move");
        }
        let mut out = self.clone();
        let sym = Cell { gt: src.gt, lt: src.lt, cross: 0 };
        if tail_involved && p == 0 {
            // osp(2m+1,2n): leaving the tail
            if dst.core() > 0 {
                return illegal("target holds a core symbol");
            }
            let s = src.cross;
            let (tail_cross, sign) = if dst.cross == 0 {
                (s, (s > 0).then_some(Sign::Minus))
            } else {
                (s + 1, Some(Sign::Plus))
            };
            *out.cell_mut(0) = Cell { gt: false, lt: false, cross: tail_cross };
            *out.cell_mut(q) = sym;
            out.sign = sign;
        } else if tail_involved {
            // osp(2m+1,2n): entering the tail from position 3/2
            if src.cross > 0 {
                return illegal("source holds a cross");
            }
            if dst.core() > 0 {
                return illegal("the tail already holds a core symbol");
            }
            let mut tail = Cell { cross: dst.cross, ..sym };
            let mut left_behind = Cell::EMPTY;
            if self.sign == Some(Sign::Plus) {
                tail.cross -= 1;
                left_behind = Cell::CROSS;
            }
            *out.cell_mut(0) = tail;
            *out.cell_mut(p) = left_behind;
            out.sign = None;
        } else {
            if src.cross > 0 {
                return illegal("source holds a cross");
            }
            if dst.core() > 0 || dst.cross > 1 {
                return illegal("target holds a core symbol");
            }
            *out.cell_mut(p) = dst;
            *out.cell_mut(q) = sym;
        }
        out.normalize();
        Ok(out)
    }

    /// Number of crosses at the tail, less one for an osp(2m+1,2n) diagram
    /// with indicator +.
    pub fn tail_length(&self) -> u32 {
        let c = self.tail().cross;
        if self.sign == Some(Sign::Plus) {
            c - 1
        } else {
            c
        }
    }

    /// Signed osp(2k+1,2k) diagram → its <-tailed model.
    pub fn canonicalize_odd(&self) -> Result<Diagram> {
        self.require_plain_odd()?;
        if self.tail().core() > 0 {
            return Err(Error::NonCanonical(format!("{self} already carries a tail symbol")));
        }
        let c = self.tail().cross;
        let mut cells = vec![Cell { lt: true, ..Cell::EMPTY }, Cell::EMPTY];
        cells.extend(self.cells.iter().skip(1).copied());
        match self.sign {
            Some(Sign::Plus) => {
                cells[0].cross = c - 1;
                cells[1] = Cell::CROSS;
            }
            _ => cells[0].cross = c,
        }
        Ok(Diagram::new(Family::OspOdd, 0, cells, None))
    }

    /// Inverse of [`Diagram::canonicalize_odd`].
    pub fn decanonicalize(&self) -> Result<Diagram> {
        self.require_plain_odd()?;
        let tail = self.tail();
        if !tail.lt || tail.gt {
            return Err(Error::NonCanonical(format!("{self} has no < at the tail")));
        }
        let first = self.cell(1).cross;
        let c = tail.cross + first;
        let mut cells = vec![Cell { cross: c, ..Cell::EMPTY }];
        cells.extend(self.cells.iter().skip(2).copied());
        let sign = match (c, first) {
            (0, _) => None,
            (_, 1) => Some(Sign::Plus),
            _ => Some(Sign::Minus),
        };
        Ok(Diagram::new(Family::OspOdd, 0, cells, sign))
    }

    fn require_plain_odd(&self) -> Result<()> {
        if self.family != Family::OspOdd {
            return Err(Error::WrongFamily(format!("{self} is not an osp(2m+1,2n) diagram")));
        }
        if self.cells.iter().skip(1).any(|c| c.core() > 0) {
            return Err(Error::NonCanonical(format!("{self} has core symbols outside the tail")));
        }
        Ok(())
    }
}

/// f_λ for λ+ρ = w.
pub fn diagram_of(alg: &Algebra, w: &Weight) -> Result<Diagram> {
    Diagram::of_weight(alg, w)
}

pub fn weights_of(alg: &Algebra, f: &Diagram) -> Result<Vec<Weight>> {
    f.weights(alg)
}

pub fn tail_length(alg: &Algebra, w: &Weight) -> Result<u32> {
    Ok(diagram_of(alg, w)?.tail_length())
}

/// Reduces λ to the maximal atypical block of g_χ by pushing every core
/// symbol to the right of all crosses and erasing it.
pub fn bar_reduce(alg: &Algebra, w: &Weight) -> Result<(Algebra, Weight)> {
    let f = diagram_of(alg, w)?;
    let reduced = bar_reduce_diagram(&f)?;
    let k = reduced.total_crosses() as usize;
    let ralg = match alg.family {
        Family::Gl => Algebra::gl(k, k),
        Family::OspOdd => Algebra::osp_odd(k, k),
        Family::OspEven if reduced.tail().gt => Algebra::osp_even(k + 1, k),
        Family::OspEven => Algebra::osp_even(k, k),
    };
    let ws = reduced.weights(&ralg)?;
    let negative = alg.family == Family::OspEven && w.a.last().is_some_and(|&x| x < 0);
    let pick = if negative && ws.len() == 2 { 1 } else { 0 };
    Ok((ralg, ws[pick].clone()))
}

/// Diagram-level bar reduction.
pub fn bar_reduce_diagram(f: &Diagram) -> Result<Diagram> {
    let mut f = f.clone();
    let keep_tail = f.family == Family::OspEven;
    // symbols are tracked by semantic index, since gl frames renormalize
    let mut symbols: Vec<i64> = (0..f.cells.len())
        .filter(|&p| f.cells[p].core() > 0 && !(keep_tail && p == 0))
        .map(|p| f.offset + p as i64)
        .collect();
    symbols.reverse();
    for mut sem in symbols {
        loop {
            let p = (sem - f.offset) as usize;
            let crosses_right = if f.family == Family::OspOdd && p == 0 {
                f.total_crosses() > 0
            } else {
                (p + 1..f.cells.len()).any(|r| f.cells[r].cross > 0)
            };
            if !crosses_right {
                break;
            }
            f = f.translation_step(p, Direction::Right)?;
            sem += 1;
        }
        let c = f.cell_mut((sem - f.offset) as usize);
        c.gt = false;
        c.lt = false;
        f.normalize();
    }
    Ok(f)
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Some(Sign::Plus) => write!(f, "(+)")?,
            Some(Sign::Minus) => write!(f, "(-)")?,
            None => {}
        }
        if self.cells.is_empty() {
            write!(f, "0")?;
        }
        for (p, c) in self.cells.iter().enumerate() {
            if p > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", render_cell(c))?;
        }
        if self.family == Family::Gl {
            write!(f, "@{}", self.offset)?;
        }
        Ok(())
    }
}

fn render_cell(c: &Cell) -> String {
    if c.is_empty() {
        return "0".into();
    }
    let mut s = match c.cross {
        0 => String::new(),
        1 => "x".into(),
        k => format!("{k}x"),
    };
    if c.gt {
        s.push('>');
    }
    if c.lt {
        s.push('<');
    }
    s
}

fn parse_cell(t: &str) -> Result<Cell> {
    let bad = || Error::Parse(format!("bad diagram cell {t:?}"));
    let t = t.trim().replace('×', "x");
    let mut cell = Cell::EMPTY;
    if t == "0" {
        return Ok(cell);
    }
    let mut rest = t.as_str();
    for sym in ['>', '<'] {
        if let Some(r) = rest.strip_prefix(sym).or_else(|| rest.strip_suffix(sym)) {
            if sym == '>' {
                cell.gt = true;
            } else {
                cell.lt = true;
            }
            rest = r;
        }
    }
    if !rest.is_empty() {
        let count = rest.strip_suffix('x').ok_or_else(bad)?;
        cell.cross = if count.is_empty() { 1 } else { count.parse().map_err(|_| bad())? };
        if cell.cross == 0 {
            return Err(bad());
        }
    }
    if cell.is_empty() {
        return Err(bad());
    }
    Ok(cell)
}

impl Diagram {
    /// Parses the text form; the family is needed to know the tail rules.
    pub fn parse(family: Family, s: &str) -> Result<Diagram> {
        let mut body = s.trim().replace('\u{2212}', "-");
        let mut sign = None;
        for (tag, sg) in [("(+)", Sign::Plus), ("(-)", Sign::Minus)] {
            if let Some(r) = body.strip_prefix(tag) {
                sign = Some(sg);
                body = r.to_string();
            }
        }
        let mut offset = 0;
        if let Some((cells, off)) = body.rsplit_once('@') {
            if family != Family::Gl {
                return Err(Error::Parse("only gl diagrams carry an offset".into()));
            }
            offset = off.trim().parse().map_err(|_| Error::Parse(format!("bad offset in {s:?}")))?;
            body = cells.to_string();
        }
        let cells = body.split(',').map(parse_cell).collect::<Result<Vec<_>>>()?;
        let d = Diagram::new(family, offset, cells, sign);
        d.validate()?;
        Ok(d)
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" | "\u{2212}" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("bad sign {s:?}"))),
        }
    }
}
