use g2_satake::*;
use g2_symbolic::*;
use proptest::prelude::*;

fn nonzero() -> impl Strategy<Value = (i64, i64)> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_tori_satisfy_the_generating_identity(a in nonzero(), b in nonzero()) {
        let t = rational_torus(rat(a.0, a.1), rat(b.0, b.1));
        prop_assert!(check_generating_identity(&t, &c_pow(1), 8).unwrap());
    }

    #[test]
    fn weights_are_inversion_stable(a in nonzero(), b in nonzero()) {
        let w = satake_weights(&rational_torus(rat(a.0, a.1), rat(b.0, b.1))).unwrap();
        prop_assert!(w.inversion_stable());
        prop_assert_eq!(w.product(), int(1));
        let den = w.char_poly(&int(1));
        prop_assert_eq!(den.reversed(), -den.clone());
    }

    #[test]
    fn newton_and_sym_trace_agree(a in nonzero(), b in nonzero()) {
        let w = satake_weights(&rational_torus(rat(a.0, a.1), rat(b.0, b.1))).unwrap();
        prop_assert!(newton_consistent(&w, 8));
    }
}
