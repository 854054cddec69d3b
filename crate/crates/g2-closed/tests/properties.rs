use g2_closed::*;
use g2_group::{support_conditions, GroupCoord};
use g2_padic::{LocalCubic, LocalCubicType};
use g2_symbolic::rat;
use num_rational::BigRational;
use proptest::prelude::*;

fn etype() -> impl Strategy<Value = LocalCubicType> {
    prop_oneof![Just(LocalCubicType::Quad), Just(LocalCubicType::Cubic)]
}

fn point(p: u64) -> impl Strategy<Value = GroupCoord> {
    (0i64..=3, 0i64..=8, 0u32..=2, 1i64..p as i64).prop_map(move |(n, m, j, u)| {
        if j == 0 {
            GroupCoord::toral(n, m)
        } else {
            GroupCoord::with_d(n, m, u, j, p)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn translation_in_d_by_integers(t in etype(), g in point(5), d0 in -20i64..20) {
        let e = LocalCubic::standard(t, 5).unwrap();
        let h = GroupCoord::new(g.n, g.m, &g.d + BigRational::from_integer(d0.into()));
        for v in [Variant::Printed, Variant::Corrected] {
            prop_assert_eq!(f_star(&e, &g, v).unwrap(), f_star(&e, &h, v).unwrap());
            prop_assert_eq!(
                gauss_closed(&e, &g, v).map(|b| b.value).ok(),
                gauss_closed(&e, &h, v).map(|b| b.value).ok()
            );
        }
        prop_assert_eq!(ds_closed(&e, &g).unwrap(), ds_closed(&e, &h).unwrap());
    }

    #[test]
    fn explicit_table_agrees_with_unnormalized(t in etype(), g in point(7)) {
        let e = LocalCubic::standard(t, 7).unwrap();
        let pt = BranchPoint::of(&g, 7);
        let un = f_unnorm_at(t, &pt).at_c(&rat(1, 1));
        prop_assert_eq!(&f_star_at(t, &pt, Variant::Corrected).value, &un);
        if support_conditions(&e, &g) {
            prop_assert_eq!(&f_star_at(t, &pt, Variant::Printed).value, &un);
            prop_assert_eq!(f_unnorm(&e, &g).unwrap().at_c(&rat(1, 1)), un);
        }
    }
}
