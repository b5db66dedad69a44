use mincode::blocking::{
    condition_b, condition_c, is_blocking, is_cutting, is_cutting_pairwise, is_ks_blocking, set_dimension,
    theorem_hypotheses, Flavor,
};
use mincode::codes::{
    ab_check, build_code, is_minimal_bruteforce, is_minimal_hdz, minimal_codewords, Budgets, LinearCode,
};
use mincode::funcspec::{cardinality_formula, FunctionSpec, ZeroSetMode};
use mincode::geometry::PointSet;
use mincode::repro::{check_weight_laws, fingerprint};
use mincode::{Elem, Field, Mode, Space};
use proptest::prelude::*;

fn gf(q: u64) -> Field {
    Field::with_order(q, None).unwrap()
}

fn code_strategy() -> impl Strategy<Value = LinearCode> {
    (prop_oneof![Just(2u64), Just(3u64)], 1usize..=12, 1usize..=4).prop_flat_map(|(q, len, rows)| {
        prop::collection::vec(prop::collection::vec(0..q as Elem, len), rows)
            .prop_map(move |g| LinearCode::from_generator(&gf(q), g).unwrap())
    })
}

/// A table function on F_q^n for small q, n.
fn function_strategy() -> impl Strategy<Value = FunctionSpec> {
    (prop_oneof![Just(2u64), Just(3u64)], 2usize..=3).prop_flat_map(|(q, n)| {
        let size = (q as usize).pow(n as u32);
        prop::collection::vec(0..q as Elem, size).prop_map(move |t| {
            FunctionSpec::table(&Space::new(&gf(q), n).unwrap(), t).unwrap()
        })
    })
}

/// A function constant on the lines through the origin, so `C̃_f` exists.
fn cone_function_strategy() -> impl Strategy<Value = FunctionSpec> {
    (prop_oneof![Just(2u64), Just(3u64)], 2usize..=3).prop_flat_map(|(q, n)| {
        let space = Space::new(&gf(q), n).unwrap();
        let reps = space.projective_size();
        prop::collection::vec(0..q as Elem, reps).prop_map(move |vals| {
            let reps = space.projective_points();
            let mut table = vec![0; space.size()];
            for i in 1..space.size() {
                let (r, _) = space.normalize(i).unwrap();
                table[i] = vals[reps.binary_search(&r).unwrap()];
            }
            FunctionSpec::table(&space, table).unwrap()
        })
    })
}

fn point_set_strategy() -> impl Strategy<Value = (Space, PointSet)> {
    (prop_oneof![Just(2u64), Just(3u64)], 2usize..=3).prop_flat_map(|(q, n)| {
        let space = Space::new(&gf(q), n).unwrap();
        let size = space.size();
        prop::collection::vec(any::<bool>(), size - 1).prop_map(move |bits| {
            let set = PointSet::from_indices(size, bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1));
            (space.clone(), set)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hdz_agrees_with_bruteforce(code in code_strategy()) {
        let b = Budgets::default();
        let brute = is_minimal_bruteforce(&code, &b).unwrap();
        let hdz = is_minimal_hdz(&code, &b).unwrap();
        prop_assert_eq!(brute.minimal, hdz.minimal);
        let classes = ((code.q() as usize).pow(code.dim() as u32) - 1) / (code.q() as usize - 1);
        let mins = minimal_codewords(&code, &b).unwrap().len();
        prop_assert_eq!(mins == classes, brute.minimal);
    }

    #[test]
    fn cover_witness_reverifies(code in code_strategy()) {
        let rep = is_minimal_bruteforce(&code, &Budgets::default()).unwrap();
        if let Some(mincode::codes::MinimalityWitness::Cover { covering, covered }) = rep.witness {
            prop_assert!(covered.support.is_subset(&covering.support));
            let rank = mincode::linalg::rank(code.field(), code.length(), &[covering.values, covered.values]);
            prop_assert_eq!(rank, 2);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn function_code_laws(f in function_strategy()) {
        let b = Budgets::default();
        let code = build_code(&f, Mode::Affine).unwrap();
        check_weight_laws(&code).map_err(TestCaseError::fail)?;

        // dimension law
        let n = f.space().n();
        let zeros = f.zero_set(ZeroSetMode::AffineStar).unwrap().count();
        let full = !f.is_linear() && zeros < f.space().size() - 1;
        prop_assert_eq!(code.dim() == n + 1, full);

        let ab = ab_check(&code, &b).unwrap();
        if ab.zero_count_threshold_hit == Some(true) {
            prop_assert!(!ab.satisfies_ab);
        }
        let minimal = is_minimal_bruteforce(&code, &b).unwrap().minimal;
        if ab.satisfies_ab {
            prop_assert!(minimal);
        }
        if n >= 2 && theorem_hypotheses(&f, Mode::Affine).unwrap().theorem_applies {
            prop_assert!(minimal);
            prop_assert!(is_minimal_hdz(&code, &b).unwrap().minimal);
        }
    }

    #[test]
    fn projective_code_laws(f in cone_function_strategy()) {
        let b = Budgets::default();
        let code = build_code(&f, Mode::Projective).unwrap();
        check_weight_laws(&code).map_err(TestCaseError::fail)?;
        let ab = ab_check(&code, &b).unwrap();
        if ab.zero_count_threshold_hit == Some(true) {
            prop_assert!(!ab.satisfies_ab);
        }
        let minimal = is_minimal_bruteforce(&code, &b).unwrap().minimal;
        prop_assert_eq!(minimal, is_minimal_hdz(&code, &b).unwrap().minimal);
        if ab.satisfies_ab {
            prop_assert!(minimal);
        }
        if theorem_hypotheses(&f, Mode::Projective).unwrap().theorem_applies {
            prop_assert!(minimal);
        }
    }

    #[test]
    fn conditions_b_and_c(f in function_strategy()) {
        let b = condition_b(&f).holds;
        let c = condition_c(&f).holds;
        if b {
            prop_assert!(c);
        }
        if f.space().q() == 2 && c {
            prop_assert!(b);
        }
    }

    #[test]
    fn permutation_invariance(f in function_strategy(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let b = Budgets::default();
        let code = build_code(&f, Mode::Affine).unwrap();
        prop_assume!(code.dim() > 0);
        let mut perm: Vec<usize> = (0..code.length()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let p = code.permute_columns(&perm).unwrap();
        prop_assert_eq!(fingerprint(&code, &b).unwrap(), fingerprint(&p, &b).unwrap());
    }

    #[test]
    fn cutting_characterizations((space, set) in point_set_strategy(), k in 1usize..=2) {
        prop_assume!(k < space.n());
        let span = is_cutting(&space, &set, k, Flavor::Vectorial).unwrap();
        let pairwise = is_cutting_pairwise(&space, &set, k, Flavor::Vectorial).unwrap();
        prop_assert_eq!(span.holds, pairwise.holds);
        let blocking = is_blocking(&space, &set, k, Flavor::Vectorial).unwrap();
        if span.holds {
            prop_assert!(blocking.holds);
            prop_assert!(set_dimension(&space, &set, Flavor::Vectorial) > space.n() - k);
        }
        if let Some(w) = &blocking.witness {
            prop_assert!(w.points(&space, false).intersection(&set).is_empty());
        }
        if let Some(w) = &span.witness {
            // both subspaces contain B ∩ S
            let inter = w.subspace.points(&space, false).intersection(&set);
            prop_assert!(inter.is_subset(&w.other.points(&space, false)));
            prop_assert!(w.subspace != w.other);
        }
        let ks = is_ks_blocking(&space, &set, k, space.n() - 1, Flavor::Vectorial).unwrap();
        if ks.holds {
            prop_assert!(blocking.holds);
        }
    }
}

proptest! {
    #[test]
    fn formula_recursion(q in 2u64..=9, r in 1u32..=4, k in 2u32..=4) {
        let qq = q as u128;
        let prev = cardinality_formula(q, r, k - 1).unwrap();
        let z = cardinality_formula(q, r, k).unwrap();
        let rec = prev * (qq.pow(r) - (qq - 1).pow(r)) + (qq.pow((k - 1) * r) - prev) * (qq - 1).pow(r - 1);
        prop_assert_eq!(z, rec);
    }

    #[test]
    fn frk_scales_by_lambda_r(q in prop_oneof![Just(2u64), Just(3), Just(4), Just(5)], r in 1usize..=3, x in any::<u64>(), lam in 1u32..5) {
        let field = gf(q);
        prop_assume!(lam < field.q());
        let f = FunctionSpec::monomial_blocks(&field, r, 2).unwrap();
        let space = f.space();
        let xi = (x % space.size() as u64) as usize;
        let lx = space.scale(xi, lam);
        prop_assert_eq!(f.eval_index(lx), field.mul(field.pow(lam, r as u64), f.eval_index(xi)));
    }
}
