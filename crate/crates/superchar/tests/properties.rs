use proptest::prelude::*;
use superchar::diagrams::bar_reduce_diagram;
use superchar::kdengine::{principal_diagrams, Block};
use superchar::{Algebra, Diagram, Family, IntMatrix, Oracle, Reduced, Weight, ZPoly};

fn algebra() -> impl Strategy<Value = Algebra> {
    (0..3u8, 1..4usize, 1..4usize).prop_map(|(f, m, n)| match f {
        0 => Algebra::osp_even(m, n),
        1 => Algebra::osp_odd(m, n),
        _ => Algebra::gl(m, n),
    })
}

/// Random λ+ρ, filtered to dominant ones.
fn dominant() -> impl Strategy<Value = (Algebra, Weight)> {
    dominant_in(algebra())
}

fn dominant_in(algs: impl Strategy<Value = Algebra>) -> impl Strategy<Value = (Algebra, Weight)> {
    algs.prop_flat_map(|alg| {
            let half = alg.half_integral();
            let coord = move || (-6i64..=6).prop_map(move |x| if half { 2 * x + 1 } else { 2 * x });
            let a = proptest::collection::vec(coord(), alg.m);
            let b = proptest::collection::vec(coord(), alg.n);
            (Just(alg), a, b)
        })
        .prop_map(|(alg, mut a, mut b)| {
            a.sort_unstable_by(|x, y| y.cmp(x));
            b.sort_unstable_by(|x, y| y.cmp(x));
            (alg, Weight::new(a, b))
        })
        .prop_filter("dominant", |(alg, w)| alg.is_dominant(w).unwrap_or(false))
}

fn reduced() -> impl Strategy<Value = Algebra> {
    (0..3u8, 1..=3usize).prop_map(|(f, k)| {
        let kind = [Reduced::Even, Reduced::ZeroMark, Reduced::Odd][f as usize];
        Algebra::reduced(kind, k)
    })
}

/// A canonical diagram of a reduced algebra together with its block.
fn block() -> impl Strategy<Value = (Algebra, Diagram, Block)> {
    reduced()
        .prop_flat_map(|alg| {
            let all = principal_diagrams(&alg, 6).unwrap();
            (Just(alg), proptest::sample::select(all))
        })
        .prop_map(|(alg, f)| {
            let b = Block::ancestors_of(&alg, &f).unwrap();
            (alg, f, b)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn diagram_round_trip((alg, w) in dominant()) {
        let f = Diagram::of_weight(&alg, &w).unwrap();
        prop_assert!(f.weights(&alg).unwrap().contains(&w));
        prop_assert_eq!(alg.atypicality(&w).unwrap().0, f.total_crosses() as usize);
        prop_assert_eq!(Diagram::parse(alg.family, &f.to_string()).unwrap(), f);
    }

    #[test]
    fn bar_reduction_keeps_crosses((alg, w) in dominant()) {
        let f = Diagram::of_weight(&alg, &w).unwrap();
        let g = bar_reduce_diagram(&f).unwrap();
        prop_assert_eq!(g.total_crosses(), f.total_crosses());
        prop_assert!(g.cells.iter().skip(1).all(|c| c.core() == 0));
    }

    #[test]
    fn sigma_is_a_dominant_involution((alg, w) in dominant_in((1..4usize, 1..4usize).prop_map(|(m, n)| Algebra::osp_even(m, n)))) {
        let s = alg.sigma_flip(&w).unwrap();
        prop_assert!(alg.is_dominant(&s).unwrap());
        prop_assert_eq!(alg.sigma_flip(&s).unwrap(), w);
    }

    #[test]
    fn standard_order_is_a_partial_order((alg, u) in dominant(), seed in any::<u64>()) {
        let shift = |x: u64| Weight::from_coords(alg.m, u.coords().enumerate().map(|(i, c)| c - 2 * ((x >> (3 * i)) & 3) as i64).collect());
        let v = shift(seed);
        let w = shift(seed.rotate_left(17));
        prop_assert!(alg.leq_standard(&u, &u));
        if alg.leq_standard(&u, &v) && alg.leq_standard(&v, &u) {
            prop_assert_eq!(&u, &v);
        }
        if alg.leq_standard(&w, &v) && alg.leq_standard(&v, &u) {
            prop_assert!(alg.leq_standard(&w, &u));
        }
    }

    #[test]
    fn odd_models_are_inverse(k in 1..=3usize, idx in any::<proptest::sample::Index>()) {
        let alg = Algebra::osp_odd(k, k);
        let all = principal_diagrams(&alg, 6).unwrap();
        let f = idx.get(&all);
        let s = f.decanonicalize().unwrap();
        prop_assert_eq!(&s.canonicalize_odd().unwrap(), f);
        prop_assert_eq!(&bar_reduce_diagram(f).unwrap(), &s);
    }

    #[test]
    fn d_inverts_k((_, _, b) in block()) {
        let k = b.k_matrix();
        prop_assert!(k.is_lower_unitriangular());
        prop_assert_eq!(b.d_matrix().unwrap().mul(&k), IntMatrix::identity(b.len()));
    }

    #[test]
    fn multiplicity_one((alg, f, b) in block()) {
        let oracle = Oracle::new();
        let signed = |g: &Diagram| if alg.family == Family::OspOdd { g.decanonicalize().unwrap() } else { g.clone() };
        prop_assume!(alg.family == Family::OspOdd || !f.nontail_crosses().is_empty());
        let l = b.position(&f).unwrap();
        for m in l..b.len() {
            let p = oracle.k_poly_diagrams(&alg, &signed(&f), &signed(&b.members[m])).unwrap();
            prop_assert!(p.coeffs().iter().all(|&c| c == 0 || c == 1), "{}", p);
        }
    }

    /// Away from the walls, K^{λ,μ} = (z⁻¹K^{λ−α,μ})₊ on the move graph.
    #[test]
    fn telescoping((alg, f, b) in block()) {
        let crosses = f.nontail_crosses();
        let t1 = *crosses.last().unwrap_or(&0);
        let t2 = if crosses.len() >= 2 { crosses[crosses.len() - 2] } else { 0 };
        let single = crosses.len() == 1 && f.tail().cross == 0;
        // the <-tailed model shifts every signed position up by one
        let floor = if alg.family == Family::OspOdd { 3 } else { 2 };
        prop_assume!(t1 >= floor && (single || t1 >= t2 + 2));
        let mut cells = f.cells.clone();
        cells[t1].cross = 0;
        cells[t1 - 1].cross = 1;
        let lower = Diagram::new(alg.family, 0, cells, None);
        let lb = Block::ancestors_of(&alg, &lower).unwrap();
        let l = b.position(&f).unwrap();
        let ll = lb.position(&lower).unwrap();
        let level = |blk: &Block, top: usize, mu: &Diagram| {
            blk.position(mu).map_or_else(ZPoly::zero, |i| blk.k_poly_level(1, top, i))
        };
        for mu in principal_diagrams(&alg, t1).unwrap() {
            if mu == f || mu == lower {
                continue;
            }
            prop_assert_eq!(level(&b, l, &mu), level(&lb, ll, &mu).shift_down_truncated(), "μ = {}", mu);
        }
    }
}
