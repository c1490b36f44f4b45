use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use holant3::arith::mat2::trace_and_discriminant;
use holant3::arith::roots::root_of_unity_from_invariants;
use holant3::arith::{eigen2, int, mat_pow, rat, Mat2, QuadExt, Rat};
use holant3::classify::dichotomy;
use holant3::fixtures::random_grid;
use holant3::gadget::{g1_chain, VertexSide, g1_matrix, gadget_by_name, needs_parameter, GADGET_NAMES};
use holant3::grid::{eval_brute, eval_dp};
use holant3::io::{parse_rat, GridFile};
use holant3::signature::{classify_form, flip, holo_transform_row, is_degenerate, Side, SymSig3};

fn rational(h: i64) -> impl Strategy<Value = Rat> {
    (-h..=h, 1..=h).prop_map(|(p, q)| rat(p, q))
}

fn signature(h: i64) -> impl Strategy<Value = SymSig3> {
    [rational(h), rational(h), rational(h), rational(h)].prop_map(|[a, b, c, d]| SymSig3::new(a, b, c, d))
}

fn matrix(h: i64) -> impl Strategy<Value = Mat2> {
    [rational(h), rational(h), rational(h), rational(h)].prop_map(|[a, b, c, d]| Mat2::from_rats(a, b, c, d))
}

fn surd(d: i64, h: i64) -> impl Strategy<Value = QuadExt> {
    (rational(h), rational(h)).prop_map(move |(p, q)| QuadExt::new(p, q, int(d)).expect("non-square radicand"))
}

proptest! {
    #[test]
    fn root_of_unity_routes_agree(m in matrix(100)) {
        prop_assume!(!m.det().is_zero());
        let (a, b) = trace_and_discriminant(&m).unwrap();
        prop_assert!(root_of_unity_from_invariants(&a, &b).unwrap().routes_agree);
    }

    #[test]
    fn eigen_decomposition_reassembles(m in matrix(20)) {
        prop_assume!(!m.get(1, 0).is_zero());
        if let Some(e) = eigen2(&m).unwrap().real() {
            prop_assume!(!e.delta.is_zero());
            prop_assert_eq!(e.reassemble(), Some(m));
        }
    }

    #[test]
    fn quadratic_field_laws(
        (u, v, w) in prop::sample::select(vec![2i64, 3, 5, 10, 40])
            .prop_flat_map(|d| (surd(d, 20), surd(d, 20), surd(d, 20)))
    ) {
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
        if !u.is_zero() {
            prop_assert!((&u * &u.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn tractability_is_flip_invariant(s in signature(4)) {
        prop_assert_eq!(classify_form(&flip(&s)).is_tractable(), classify_form(&s).is_tractable());
    }

    #[test]
    fn holographic_round_trip(s in signature(20), m in matrix(6)) {
        prop_assume!(!m.det().is_zero());
        let d = s.to_dense(Side::Lhs);
        let back = holo_transform_row(&holo_transform_row(&d, &m), &m.inverse().unwrap());
        prop_assert_eq!(back.values, d.values);
    }

    #[test]
    fn hadamard_twice_scales_by_eight(s in signature(20)) {
        let h = Mat2::hadamard();
        let d = s.to_dense(Side::Lhs);
        let twice = holo_transform_row(&holo_transform_row(&d, &h), &h);
        prop_assert_eq!(twice.values, d.scale(&QuadExt::from_int(8)).values);
    }

    #[test]
    fn degenerate_factor_reproduces(u0 in rational(9), u1 in rational(9), k in rational(9)) {
        let s = SymSig3::new(&k * &u0 * &u0 * &u0, &k * &u0 * &u0 * &u1, &k * &u0 * &u1 * &u1, &k * &u1 * &u1 * &u1);
        let d = is_degenerate(&s);
        prop_assert!(d.is_some());
        prop_assert_eq!(d.unwrap().expand(), s);
    }

    #[test]
    fn gadget_side_parity(s in signature(9), p in rational(9)) {
        let param = QuadExt::from(p);
        for name in GADGET_NAMES {
            let g = gadget_by_name(name, needs_parameter(name).then_some(&param)).unwrap();
            prop_assert!(g.contract(&s).is_ok());
            // unary attachments count as exposed edges on their side
            let (m, n) = g.side_profile();
            let ul = g.unaries.iter().filter(|u| u.vertex.side == VertexSide::Lhs).count();
            let ur = g.unaries.len() - ul;
            prop_assert_eq!((m + ul) % 3, (n + ur) % 3, "{}", name);
        }
    }

    #[test]
    fn unbalanced_gadgets_are_rejected(s in signature(9)) {
        let g = holant3::gadget::Gadget::new("bad", 1, 1)
            .edges(&[(0, 0), (0, 0)])
            .dangle(holant3::gadget::VertexRef::lhs(0))
            .dangle(holant3::gadget::VertexRef::rhs(0))
            .dangle(holant3::gadget::VertexRef::rhs(0));
        prop_assert!(g.contract(&s).is_err());
    }

    #[test]
    fn g1_chains_are_matrix_powers(s in signature(9), k in 1usize..4) {
        let chain = g1_chain(k).contract(&s).unwrap().as_matrix();
        prop_assert_eq!(chain, Some(mat_pow(&g1_matrix(&s), k as u32)));
    }

    #[test]
    fn evaluators_agree_and_flip_is_invisible(s in signature(6), n in 1usize..5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_grid(&mut rng, &s, n);
        let brute = eval_brute(&g).unwrap();
        prop_assert_eq!(&brute, &eval_dp(&g).unwrap());
        prop_assert_eq!(&brute, &eval_brute(&g.with_lhs_signature(&flip(&s))).unwrap());
    }

    #[test]
    fn verdict_ignores_flip_and_positive_scale(s in signature(3), k in 1i64..6, q in 1i64..6) {
        let kind = dichotomy(&s).is_ptime();
        prop_assert_eq!(dichotomy(&flip(&s)).is_ptime(), kind);
        prop_assert_eq!(dichotomy(&s.scale(&rat(k, q))).is_ptime(), kind);
    }

    #[test]
    fn instance_files_round_trip(s in signature(30), n in 1usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_grid(&mut rng, &s, n);
        let file = GridFile::from_grid(&s, &g);
        let again = GridFile::from_json(&file.to_json()).unwrap();
        prop_assert_eq!(&again, &file);
        let (f2, g2) = again.to_grid().unwrap();
        prop_assert_eq!(f2, s);
        prop_assert_eq!(g2.edges, g.edges);
    }

    #[test]
    fn rationals_print_and_parse(r in rational(1000)) {
        prop_assert_eq!(parse_rat(&r.to_string()).unwrap(), r);
    }
}
