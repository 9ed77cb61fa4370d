//! Seeded random cases: the move graph against the recursion, and the four
//! path-sum evaluators against each other.

use std::thread;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superchar::kdengine::{principal_diagrams, Block};
use superchar::{Algebra, Diagram, Error, Family, IntMatrix, Oracle, Reduced, Result, ZPoly};

/// Non-members sampled per case to confirm the recursion gives 0 there.
const OUTSIDE_SAMPLES: usize = 16;

struct Case {
    alg: Algebra,
    top: Diagram,
    outside: Vec<Diagram>,
}

fn draw(rng: &mut ChaCha8Rng, max_position: usize) -> Result<Case> {
    let kind = [Reduced::Even, Reduced::ZeroMark, Reduced::Odd][rng.random_range(0..3)];
    let k = rng.random_range(1..=3);
    let alg = Algebra::reduced(kind, k);
    let all = principal_diagrams(&alg, max_position)?;
    let top = all.choose(rng).cloned().ok_or_else(|| Error::Internal("no diagrams".into()))?;
    let outside = all.choose_multiple(rng, OUTSIDE_SAMPLES).cloned().collect();
    Ok(Case { alg, top, outside })
}

fn signed(alg: &Algebra, f: &Diagram) -> Result<Diagram> {
    if alg.family == Family::OspOdd {
        f.decanonicalize()
    } else {
        Ok(f.clone())
    }
}

fn check(case: &Case) -> Result<usize> {
    let Case { alg, top, outside } = case;
    let b = Block::ancestors_of(alg, top)?;
    let l = b.position(top).ok_or_else(|| Error::Internal("top missing".into()))?;
    let k = b.k_matrix();
    let d = b.d_matrix()?;
    if d.mul(&k) != IntMatrix::identity(b.len()) {
        return Err(Error::Internal("D·K ≠ I".into()));
    }
    let mut checks = 1;
    for x in 0..b.len() {
        for y in x..b.len() {
            let want = b.k_entry(x, y);
            let got = [b.k_entry_regular(x, y)?, b.k_entry_strong(x, y)?, b.compose_check(x, y)];
            if got != [want; 3] {
                return Err(Error::Internal(format!("evaluators disagree at ({x},{y}): {want} vs {got:?}")));
            }
            checks += 1;
        }
    }
    // the zero weight of osp(2k,2k), osp(2k+2,2k) sits at the full parabolic
    if alg.family == Family::OspEven && top.nontail_crosses().is_empty() {
        return Ok(checks);
    }
    let oracle = Oracle::new();
    let lam = signed(alg, top)?;
    for mu in b.members.iter().chain(outside) {
        let want = oracle.k_poly_diagrams(alg, &lam, &signed(alg, mu)?)?;
        let got = b.position(mu).map_or_else(ZPoly::zero, |m| b.k_poly_level(1, l, m));
        if got != want {
            return Err(Error::Internal(format!("μ={mu}: moves give {got}, recursion {want}")));
        }
        checks += 1;
    }
    Ok(checks)
}

pub fn run(seed: u64, max_position: usize, cases: usize) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let drawn = (0..cases).map(|_| draw(&mut rng, max_position)).collect::<Result<Vec<_>>>()?;
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(cases.max(1));
    let chunk = cases.div_ceil(workers).max(1);
    let results: Vec<Result<usize>> = thread::scope(|s| {
        let handles: Vec<_> = drawn
            .chunks(chunk)
            .map(|part| (part.len(), s.spawn(move || part.iter().map(check).collect::<Vec<_>>())))
            .collect();
        handles
            .into_iter()
            .flat_map(|(n, h)| {
                h.join().unwrap_or_else(|_| (0..n).map(|_| Err(Error::Internal("worker panicked".into()))).collect())
            })
            .collect()
    });
    let mut out = String::new();
    let mut failures = 0;
    for (i, (case, r)) in drawn.iter().zip(&results).enumerate() {
        let status = match r {
            Ok(n) => format!("ok ({n} checks)"),
            Err(e) => {
                failures += 1;
                format!("FAIL {e}")
            }
        };
        out += &format!("case {i:>3}: {} {} {status}\n", case.alg, case.top);
    }
    out += &format!("verify: {cases} cases, {failures} failures (seed {seed}, max position {max_position})");
    if failures > 0 {
        return Err(Error::Internal(out));
    }
    Ok(out)
}
