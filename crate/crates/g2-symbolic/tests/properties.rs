use g2_symbolic::*;
use proptest::prelude::*;

fn coef_strategy() -> impl Strategy<Value = Coef> {
    prop::collection::vec((-3i64..=3, -6i32..=6, -2i32..=2), 1..3).prop_map(|ts| {
        let mut c = int(0);
        for (r, q, t) in ts {
            c = &c + &mono(rat(r, 1), q, t);
        }
        c
    })
}

fn mono_strategy() -> impl Strategy<Value = Coef> {
    (prop_oneof![Just(1i64), Just(-1), Just(2)], -8i32..=2, 0i32..=2)
        .prop_map(|(r, q, t)| mono(rat(r, 1), q, t))
}

fn ratfunc_strategy() -> impl Strategy<Value = RatFuncX> {
    (
        prop::collection::vec(coef_strategy(), 1..4),
        prop::collection::vec((mono_strategy(), 1u32..=3), 0..3),
    )
        .prop_map(|(num, eulers)| {
            let mut f = RatFuncX::from_poly(Poly::new(num));
            for (a, k) in eulers {
                f = f.mul(&RatFuncX::euler(&a, k));
            }
            f
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associativity(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn distributivity(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy()) {
        let lhs = a.mul(&b.add(&c));
        let rhs = a.mul(&b).add(&a.mul(&c));
        prop_assert_eq!(lhs.to_text(), rhs.to_text());
    }

    #[test]
    fn series_is_multiplicative(a in ratfunc_strategy(), b in ratfunc_strategy()) {
        let k = 6;
        let lhs = a.mul(&b).series(k).unwrap();
        let rhs = a.series(k).unwrap().mul(&b.series(k).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reexpansion_agrees(a in ratfunc_strategy()) {
        prop_assert_eq!(a.series(9).unwrap().truncate(4), a.series(4).unwrap());
    }

    #[test]
    fn division_inverts_multiplication(a in ratfunc_strategy(), b in ratfunc_strategy()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a);
    }

    #[test]
    fn zeta_is_geometric(shift2 in -9i32..=9, t in -2i32..=2, f in 1u32..=3) {
        let k = 4 * f as usize;
        let fi = f as i32;
        let a = &c_pow(fi * t) * &q_half(-fi * shift2);
        let s = zeta_local(shift2, t, f).series(k).unwrap();
        prop_assert_eq!(s, Series::geometric(&a, f as usize, k));
    }

    #[test]
    fn substitution_commutes(a in ratfunc_strategy(), b in ratfunc_strategy()) {
        // q^{1/2} -> 5, i.e. q = 25
        let r = rat(5, 1);
        let ev = |f: &RatFuncX| f.map_coefs(|c| c.eval_sqrt_q(&r)).unwrap();
        prop_assert_eq!(ev(&a.mul(&b)), ev(&a).mul(&ev(&b)));
        prop_assert_eq!(ev(&a.add(&b)), ev(&a).add(&ev(&b)));
    }

    #[test]
    fn coefficient_substitution_is_a_ring_map(a in coef_strategy(), b in coef_strategy()) {
        let r = rat(5, 1);
        prop_assert_eq!((&a * &b).eval_sqrt_q(&r), &a.eval_sqrt_q(&r) * &b.eval_sqrt_q(&r));
        let even = |c: &Coef| c.terms().all(|(e, _)| e[0] % 2 == 0);
        if even(&a) {
            let direct = a.eval_q(25).unwrap();
            let doubled = &a * &a;
            prop_assert_eq!(doubled.eval_q(25).unwrap(), &direct * &direct);
        }
    }
}
