//! Blocks, the move graph, path sums and the K and D matrices.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::diagrams::{Cell, Diagram};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::moves::{all_moves_from, caps_of, check_canonical, exceptional_moves_from, MoveEdge, MoveKind};
use crate::poly::ZPoly;
use crate::rootdata::{Algebra, Family, Reduced, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub mv: MoveEdge,
}

/// The ancestors of one canonical diagram under the move graph, ordered so
/// that every edge runs from a later member to an earlier one.
#[derive(Debug, Clone)]
pub struct Block {
    pub alg: Algebra,
    pub kind: Reduced,
    pub members: Vec<Diagram>,
    pub edges: Vec<Edge>,
    index: HashMap<Diagram, usize>,
    out: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathOrder {
    Decreasing,
    Increasing,
}

/// The canonical diagram of a weight in a reduced osp algebra: f_λ itself,
/// or its <-tailed model for osp(2k+1,2k).
pub fn canonical_diagram(alg: &Algebra, w: &Weight) -> Result<Diagram> {
    let f = Diagram::of_weight(alg, w)?;
    if alg.family == Family::OspOdd {
        f.canonicalize_odd()
    } else {
        Ok(f)
    }
}

fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in pool.iter().enumerate() {
        for mut rest in combinations(&pool[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn order_key(f: &Diagram) -> (i64, Vec<i64>) {
    let mut pos: Vec<i64> = Vec::new();
    for (p, c) in f.cells.iter().enumerate() {
        pos.extend(std::iter::repeat_n(f.position2(p), c.cross as usize));
    }
    pos.sort_unstable_by(|a, b| b.cmp(a));
    (pos.iter().sum(), pos)
}

/// Every canonical maximal atypical diagram of a reduced osp algebra with
/// all crosses at positions ≤ `reach`.
pub fn principal_diagrams(alg: &Algebra, reach: usize) -> Result<Vec<Diagram>> {
    let (kind, k) = match alg.reduced_kind() {
        Some((Reduced::Gl, _)) | None => {
            return Err(Error::WrongFamily(format!("{alg} is not a reduced osp algebra")))
        }
        Some(x) => x,
    };
    let tail = Cell { gt: kind == Reduced::ZeroMark, lt: kind == Reduced::Odd, cross: 0 };
    let pool: Vec<usize> = (1..=reach).collect();
    let mut out = Vec::new();
    for j in 0..=k.min(reach) {
        for subset in combinations(&pool, j) {
            let mut cells = vec![Cell::EMPTY; reach + 1];
            cells[0] = Cell { cross: (k - j) as u32, ..tail };
            for p in subset {
                cells[p] = Cell::CROSS;
            }
            out.push(Diagram::new(alg.family, 0, cells, None));
        }
    }
    Ok(out)
}

impl Block {
    /// All canonical diagrams supported left of the rightmost cross of
    /// `target` from which `target` is reachable.
    pub fn ancestors_of(alg: &Algebra, target: &Diagram) -> Result<Block> {
        let (kind, k) = match alg.reduced_kind() {
            Some((Reduced::Gl, _)) | None => {
                return Err(Error::WrongFamily(format!("{alg} is not a reduced osp algebra")))
            }
            Some(x) => x,
        };
        check_canonical(target)?;
        let tail = target.tail();
        let tail_ok = match kind {
            Reduced::Even => tail.core() == 0,
            Reduced::ZeroMark => tail.gt,
            _ => tail.lt,
        };
        if !tail_ok || target.family != alg.family || target.total_crosses() as usize != k {
            return Err(Error::NonCanonical(format!("{target} is not a maximal atypical diagram of {alg}")));
        }
        let reach = target.rightmost_cross().unwrap_or(0);
        let candidates = principal_diagrams(alg, reach)?;
        let cindex: HashMap<Diagram, usize> = candidates.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let mut raw_edges = Vec::new();
        let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); candidates.len()];
        for (i, f) in candidates.iter().enumerate() {
            for (g, mv) in all_moves_from(f)? {
                if let Some(&j) = cindex.get(&g) {
                    incoming[j].push(raw_edges.len());
                    raw_edges.push(Edge { from: i, to: j, mv });
                }
            }
        }
        let start = cindex[target];
        let mut seen = vec![false; candidates.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &e in &incoming[v] {
                let u = raw_edges[e].from;
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        let mut members: Vec<Diagram> =
            candidates.iter().zip(&seen).filter(|(_, &s)| s).map(|(d, _)| d.clone()).collect();
        members.sort_by(|a, b| {
            order_key(b).cmp(&order_key(a)).then_with(|| a.to_string().cmp(&b.to_string()))
        });
        let index: HashMap<Diagram, usize> = members.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let mut edges = Vec::new();
        for e in &raw_edges {
            if let (Some(&a), Some(&b)) = (index.get(&candidates[e.from]), index.get(&candidates[e.to])) {
                edges.push(Edge { from: a, to: b, mv: e.mv });
            }
        }
        edges.sort_by_key(|e| (e.from, e.to, e.mv));
        let mut out = vec![Vec::new(); members.len()];
        for (i, e) in edges.iter().enumerate() {
            out[e.from].push(i);
        }
        let block = Block { alg: *alg, kind, members, edges, index, out };
        block.check_acyclic()?;
        Ok(block)
    }

    /// The block of λ+ρ = w together with λ's position in it.
    pub fn of_weight(alg: &Algebra, w: &Weight) -> Result<(Block, usize)> {
        let f = canonical_diagram(alg, w)?;
        let b = Block::ancestors_of(alg, &f)?;
        let i = b.index[&f];
        Ok((b, i))
    }

    fn check_acyclic(&self) -> Result<()> {
        let n = self.members.len();
        let mut indeg = vec![0; n];
        for e in &self.edges {
            indeg[e.to] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut visited = 0;
        while let Some(v) = queue.pop() {
            visited += 1;
            for &e in &self.out[v] {
                let t = self.edges[e].to;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push(t);
                }
            }
        }
        if visited != n {
            return Err(Error::CycleDetected);
        }
        if self.edges.iter().any(|e| e.from <= e.to) {
            return Err(Error::Internal("member order is not compatible with the edges".into()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, f: &Diagram) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// λ+ρ of a member (the positive weight for osp(2k,2k)).
    pub fn member_weight(&self, i: usize) -> Result<Weight> {
        let f = &self.members[i];
        let f = if self.alg.family == Family::OspOdd { f.decanonicalize()? } else { f.clone() };
        Ok(f.weights(&self.alg)?.swap_remove(0))
    }

    /// The signed diagram of a member (identity outside osp(2k+1,2k)).
    pub fn member_signed(&self, i: usize) -> Result<Diagram> {
        let f = &self.members[i];
        if self.alg.family == Family::OspOdd {
            f.decanonicalize()
        } else {
            Ok(f.clone())
        }
    }

    fn edge_sign(e: &Edge, order: PathOrder) -> i64 {
        let s = if e.mv.degree.is_multiple_of(2) { 1 } else { -1 };
        match order {
            PathOrder::Decreasing => s,
            PathOrder::Increasing => -s,
        }
    }

    /// Σ over monotone paths from → to of the path signs, restricted to
    /// edges accepted by `filter`.
    pub fn path_sum(&self, from: usize, to: usize, order: PathOrder, filter: &dyn Fn(&Edge) -> bool) -> i64 {
        let mut memo = HashMap::new();
        let bound = match order {
            PathOrder::Decreasing => usize::MAX,
            PathOrder::Increasing => 0,
        };
        self.walk(from, to, bound, order, filter, &mut memo)
    }

    fn walk(
        &self,
        v: usize,
        to: usize,
        bound: usize,
        order: PathOrder,
        filter: &dyn Fn(&Edge) -> bool,
        memo: &mut HashMap<(usize, usize), i64>,
    ) -> i64 {
        if let Some(&x) = memo.get(&(v, bound)) {
            return x;
        }
        let mut total = i64::from(v == to);
        if v > to {
            for &ei in &self.out[v] {
                let e = &self.edges[ei];
                let fits = match order {
                    PathOrder::Decreasing => e.mv.end < bound,
                    PathOrder::Increasing => e.mv.end > bound,
                };
                if fits && e.to >= to && filter(e) {
                    total += Self::edge_sign(e, order) * self.walk(e.to, to, e.mv.end, order, filter, memo);
                }
            }
        }
        memo.insert((v, bound), total);
        total
    }

    /// K^{λ,μ}(−1) over decreasing paths from μ to λ.
    pub fn k_entry(&self, lambda: usize, mu: usize) -> i64 {
        self.path_sum(mu, lambda, PathOrder::Decreasing, &|_| true)
    }

    fn regular_filter(&self, mu: usize) -> Result<impl Fn(&Edge) -> bool + '_> {
        let f = &self.members[mu];
        let caps = caps_of(f)?;
        let f = f.clone();
        Ok(move |e: &Edge| match e.mv.kind {
            MoveKind::Ordinary => caps.contains(&(e.mv.start, e.mv.end)),
            _ => is_free(&f, &caps, e.mv.end),
        })
    }

    /// The same value summed over regular paths only.
    pub fn k_entry_regular(&self, lambda: usize, mu: usize) -> Result<i64> {
        let filter = self.regular_filter(mu)?;
        Ok(self.path_sum(mu, lambda, PathOrder::Decreasing, &filter))
    }

    /// The same value summed over strongly regular paths: regular, without
    /// exceptional edges and without a pair of tail edges ending at
    /// consecutive free positions t' < t for which the diagram before the
    /// first of them admits the exceptional move (s₀:t',t;0).
    pub fn k_entry_strong(&self, lambda: usize, mu: usize) -> Result<i64> {
        Ok(self.strong_paths(lambda, mu)?.iter().map(|p| self.path_sign(p)).sum())
    }

    fn path_sign(&self, p: &[usize]) -> i64 {
        let deg: u32 = p.iter().map(|&e| self.edges[e].mv.degree).sum();
        if deg.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn strong_paths(&self, lambda: usize, mu: usize) -> Result<Vec<Vec<usize>>> {
        let filter = self.regular_filter(mu)?;
        let f = &self.members[mu];
        let caps = caps_of(f)?;
        let mut paths = Vec::new();
        let mut stack = Vec::new();
        self.collect_paths(mu, lambda, usize::MAX, &filter, &mut stack, &mut paths);
        let prev_free = |t: usize| (1..t).rev().find(|&r| is_free(f, &caps, r));
        let mut exc_cache: HashMap<usize, Vec<(usize, usize, u32)>> = HashMap::new();
        let mut strong = Vec::new();
        'paths: for p in paths {
            if p.iter().any(|&e| self.edges[e].mv.kind == MoveKind::Exceptional) {
                continue;
            }
            let tails: Vec<&Edge> = p
                .iter()
                .map(|&e| &self.edges[e])
                .filter(|e| matches!(e.mv.kind, MoveKind::TailLow | MoveKind::TailHigh))
                .collect();
            for (x, ex) in tails.iter().enumerate() {
                for ey in &tails[x + 1..] {
                    if prev_free(ex.mv.end) != Some(ey.mv.end) {
                        continue;
                    }
                    let exc = match exc_cache.get(&ex.from) {
                        Some(v) => v,
                        None => {
                            let v = exceptional_moves_from(&self.members[ex.from])?
                                .into_iter()
                                .map(|(_, m)| (m.mid.unwrap_or(0), m.end, m.degree))
                                .collect();
                            exc_cache.entry(ex.from).or_insert(v)
                        }
                    };
                    if exc.contains(&(ey.mv.end, ex.mv.end, 0)) {
                        continue 'paths;
                    }
                }
            }
            strong.push(p);
        }
        Ok(strong)
    }

    fn collect_paths(
        &self,
        v: usize,
        to: usize,
        bound: usize,
        filter: &dyn Fn(&Edge) -> bool,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == to {
            out.push(stack.clone());
            return;
        }
        for &ei in &self.out[v] {
            let e = &self.edges[ei];
            if e.mv.end < bound && e.to >= to && filter(e) {
                stack.push(ei);
                self.collect_paths(e.to, to, e.mv.end, filter, stack, out);
                stack.pop();
            }
        }
    }

    /// entry(i,j) = K^{member_j, member_i}.
    pub fn k_matrix(&self) -> IntMatrix {
        let n = self.len();
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                m.rows[i][j] = self.k_entry(j, i);
            }
        }
        m
    }

    /// D from increasing paths, checked against the inverse of K.
    pub fn d_matrix(&self) -> Result<IntMatrix> {
        let n = self.len();
        let mut d = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                d.rows[i][j] = self.path_sum(i, j, PathOrder::Increasing, &|_| true);
            }
        }
        let inv = self
            .k_matrix()
            .unitriangular_inverse()
            .ok_or_else(|| Error::Internal("K is not unitriangular".into()))?;
        for i in 0..n {
            for j in 0..n {
                if inv.rows[i][j] != d.rows[i][j] {
                    return Err(Error::InversionMismatch(i, j));
                }
            }
        }
        Ok(d)
    }

    fn level_end(&self, lambda: usize, j: usize) -> Option<usize> {
        let mut xs = self.members[lambda].nontail_crosses();
        xs.reverse();
        j.checked_sub(1).and_then(|i| xs.get(i).copied())
    }

    /// K^{λ,μ}_{P^{j−1},P^j}(z): single moves μ → λ ending at the j-th
    /// cross of λ from the right.
    pub fn k_poly_level(&self, j: usize, lambda: usize, mu: usize) -> ZPoly {
        if lambda == mu {
            return ZPoly::one();
        }
        let mut p = ZPoly::zero();
        if let Some(t) = self.level_end(lambda, j) {
            for &ei in &self.out[mu] {
                let e = &self.edges[ei];
                if e.to == lambda && e.mv.end == t {
                    p.add_monomial(e.mv.degree, 1);
                }
            }
        }
        p
    }

    /// K^{λ,μ}(−1) as the product of the level matrices evaluated at −1.
    pub fn compose_check(&self, lambda: usize, mu: usize) -> i64 {
        let n = self.len();
        let levels = self.members[lambda].nontail_crosses().len();
        let mut v = vec![0i64; n];
        v[mu] = 1;
        for j in 1..=levels {
            let mut next = v.clone();
            for (x, &vx) in v.iter().enumerate() {
                if vx == 0 {
                    continue;
                }
                for (y, slot) in next.iter_mut().enumerate().take(x) {
                    *slot += self.k_poly_level(j, y, x).eval(-1) * vx;
                }
            }
            v = next;
        }
        v[lambda]
    }

    pub fn report(&self) -> Result<BlockReport> {
        let order = (0..self.len()).map(|i| self.member_weight(i).map(|w| w.to_string())).collect::<Result<_>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| EdgeReport { from: e.from, to: e.to, label: e.mv.to_string() })
            .collect();
        Ok(BlockReport {
            algebra: self.alg.to_string(),
            order,
            edges,
            k: self.k_matrix().rows,
            d: self.d_matrix()?.rows,
        })
    }

    pub fn to_dot(&self) -> Result<String> {
        let mut s = String::from("digraph block {\n  rankdir=LR;\n");
        for i in 0..self.len() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", self.member_weight(i)?);
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.mv);
        }
        s.push_str("}\n");
        Ok(s)
    }
}

fn is_free(f: &Diagram, caps: &[(usize, usize)], t: usize) -> bool {
    t >= 1 && f.cell(t).cross == 0 && !caps.iter().any(|c| c.1 == t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub from: usize,
    pub to: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub algebra: String,
    pub order: Vec<String>,
    pub edges: Vec<EdgeReport>,
    #[serde(rename = "K")]
    pub k: Vec<Vec<i64>>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<i64>>,
}
