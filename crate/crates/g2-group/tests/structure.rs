//! Randomized structural checks, at least 10³ cases each.

use g2_group::*;
use g2_padic::{LocalCubic, LocalCubicType};
use g2_symbolic::rat;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

const P: u64 = 5;

fn coord(max_pole: u32) -> impl Strategy<Value = BigRational> {
    (-24i64..=24, 0..=max_pole).prop_map(|(a, k)| rat(a, 5i64.pow(k)))
}

fn ucoord(max_pole: u32) -> impl Strategy<Value = UCoordQ> {
    prop::array::uniform5(coord(max_pole)).prop_map(|r| UCoord::from_rationals(&r, &P))
}

fn group_coord() -> impl Strategy<Value = GroupCoord> {
    (0i64..=2, 0i64..=4, prop_oneof![Just((0i64, 0u32)), (1i64..5, 1u32..=2)])
        .prop_map(|(n, m, (u, j))| GroupCoord::with_d(n, m, u, j, P))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn embedding_lands_in_so7(u in ucoord(2), g in group_coord()) {
        let m = iota(&u, &g, &P);
        prop_assert!(m.preserves_form());
        prop_assert_eq!(m.det(), BigRational::one());
    }

    #[test]
    fn uk_matrix_and_inequalities_agree(u in ucoord(3), g in group_coord(), dk in 0i64..=2) {
        let k = g.n + dk;
        let a = in_uk(&u, &g, k, UkMethod::Matrix, &P).unwrap();
        let b = in_uk(&u, &g, k, UkMethod::Inequalities, &P).unwrap();
        prop_assert_eq!(a, b);
        if g.d_branch(P).is_none() && g.m >= g.n {
            let c = in_uk(&u, &GroupCoord::toral(g.n, g.m), k, UkMethod::ToralInequalities, &P).unwrap();
            let a0 = in_uk(&u, &GroupCoord::toral(g.n, g.m), k, UkMethod::Matrix, &P).unwrap();
            prop_assert_eq!(a0, c);
        }
    }

    #[test]
    fn character_is_multiplicative(u in ucoord(2), v in ucoord(2), cubic in any::<bool>()) {
        let t = if cubic { LocalCubicType::Cubic } else { LocalCubicType::Quad };
        let e = LocalCubic::standard(t, P).unwrap();
        let w = extract_u_coords(&u_matrix(&u, &P).mul(&u_matrix(&v, &P)), &P).unwrap();
        let lhs = psi_e_u(&e, &w, &P).unwrap();
        let rhs = psi_e_u(&e, &u, &P).unwrap().mul(&psi_e_u(&e, &v, &P).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn extraction_round_trips(u in ucoord(3)) {
        prop_assert_eq!(extract_u_coords(&u_matrix(&u, &P), &P).unwrap(), u);
    }

    #[test]
    fn integral_u_does_not_change_height(u in ucoord(0), n in 0i64..=2, m in 0i64..=4) {
        let g = GroupCoord::toral(n, m);
        let with_u = gamma_norm(&iota(&u, &g, &P), P).unwrap();
        let bare = gamma_norm(&torus_matrix::<BigRational>(n, m, &P), P).unwrap();
        prop_assert_eq!(with_u, bare);
    }
}
