use g2_group::*;
use g2_padic::{CycloValue, LocalCubic, LocalCubicType, PadicCtx, PadicScalar};
use g2_symbolic::rat;
use num_rational::BigRational;
use num_traits::{One, Zero};

const P: u64 = 5;

fn uq(r: [(i64, i64); 5]) -> UCoordQ {
    UCoord::from_rationals(&r.map(|(a, b)| rat(a, b)), &P)
}

fn quad() -> LocalCubic {
    LocalCubic::standard(LocalCubicType::Quad, P).unwrap()
}

fn cubic() -> LocalCubic {
    LocalCubic::standard(LocalCubicType::Cubic, P).unwrap()
}

#[test]
fn iota_of_identity() {
    let m = iota(&UCoordQ::identity(&P), &GroupCoord::identity(), &P);
    assert_eq!(m, Mat7::<BigRational>::identity(&P));
}

#[test]
fn iota_of_torus_is_the_weight_diagonal() {
    let m = iota(&UCoordQ::identity(&P), &GroupCoord::toral(1, 2), &P);
    let t1 = rat(5, 1);
    let t2 = rat(25, 1);
    let diag = [
        t1.clone(),
        &t2 / &t1,
        &t1 * &t1 / &t2,
        BigRational::one(),
        &t2 / (&t1 * &t1),
        &t1 / &t2,
        BigRational::one() / &t1,
    ];
    for i in 0..7 {
        for j in 0..7 {
            let e = if i == j { diag[i].clone() } else { BigRational::zero() };
            assert_eq!(m.get(i, j), &e);
        }
    }
}

#[test]
fn r5_entries() {
    let m = iota(&uq([(0, 1), (0, 1), (0, 1), (0, 1), (3, 1)]), &GroupCoord::identity(), &P);
    assert_eq!(m.get(0, 5), &rat(3, 2));
    assert_eq!(m.get(1, 6), &rat(-3, 2));
    for i in 0..7 {
        for j in 0..7 {
            if (i, j) != (0, 5) && (i, j) != (1, 6) {
                let e = if i == j { BigRational::one() } else { BigRational::zero() };
                assert_eq!(m.get(i, j), &e);
            }
        }
    }
}

#[test]
fn heights() {
    let id = Mat7::<BigRational>::identity(&P);
    assert_eq!(gamma_norm(&id, P).unwrap(), 0);
    let t = iota(&UCoordQ::identity(&P), &GroupCoord::toral(1, 2), &P);
    assert_eq!(gamma_norm(&t, P).unwrap(), 1);
    let u = iota(&uq([(0, 1), (0, 1), (0, 1), (1, 25), (0, 1)]), &GroupCoord::identity(), &P);
    assert_eq!(gamma_norm(&u, P).unwrap(), 2);
}

#[test]
fn uk_membership_examples() {
    let u = uq([(0, 1), (0, 1), (0, 1), (1, 5), (0, 1)]);
    let g = GroupCoord::identity();
    for method in [UkMethod::Matrix, UkMethod::Inequalities, UkMethod::ToralInequalities] {
        assert!(in_uk(&UCoordQ::identity(&P), &g, 0, method, &P).unwrap());
        assert!(!in_uk(&u, &g, 0, method, &P).unwrap());
        assert!(in_uk(&u, &g, 1, method, &P).unwrap());
    }
}

#[test]
fn support_examples() {
    for e in [quad(), cubic()] {
        assert!(support_conditions(&e, &GroupCoord::identity()));
        assert!(!support_conditions(&e, &GroupCoord::toral(0, 1)));
    }
    // t1³/t2, t2²/t1³ and t2/t1 all integral at (1, 3): the four memberships hold
    assert!(support_conditions(&cubic(), &GroupCoord::toral(1, 3)));
    assert!(!support_conditions(&cubic(), &GroupCoord::toral(2, 2)));
    assert!(support_conditions(&quad(), &GroupCoord::toral(2, 2)));
}

#[test]
fn nontoral_reduction() {
    let o = CubicOrientation::of(&quad());
    let g = GroupCoord::with_d(1, 2, 1, 0, P);
    assert_eq!(g.l(P), Some(0));
    assert_eq!(reduce_nontoral(&o, &g, P).unwrap().1, g);
    let g = GroupCoord::with_d(1, 1, 1, 2, P);
    assert_eq!(g.l(P), Some(1));
    let (o2, g2) = reduce_nontoral(&o, &g, P).unwrap();
    assert_eq!(g2.l(P), Some(-1));
    let (o3, g3) = flip_orientation(&o2, &g2, P).unwrap();
    assert_eq!((g3.n, g3.m, g3.l(P)), (g.n, g.m, g.l(P)));
    assert_eq!(o3, o);
    let oc = CubicOrientation::of(&cubic());
    let (oc2, gc2) = flip_orientation(&oc, &g, P).unwrap();
    assert_eq!(gc2.l(P), Some(-1));
    let (oc3, gc3) = flip_orientation(&oc2, &gc2, P).unwrap();
    assert_eq!(oc3, oc);
    assert_eq!(gc3.l(P), g.l(P));
}

#[test]
fn extraction() {
    let id = Mat7::<BigRational>::identity(&P);
    assert_eq!(extract_u_coords(&id, &P).unwrap(), UCoord::identity(&P));
    let u = uq([(1, 5), (-2, 3), (7, 25), (1, 1), (4, 5)]);
    assert_eq!(extract_u_coords(&u_matrix(&u, &P), &P).unwrap(), u);
    let t = iota(&u, &GroupCoord::toral(1, 2), &P);
    assert!(extract_u_coords(&t, &P).is_err());
}

#[test]
fn character_of_a_product() {
    let e = cubic();
    let u = uq([(1, 5), (2, 5), (3, 25), (4, 5), (1, 25)]);
    let v = uq([(3, 5), (1, 25), (1, 5), (2, 25), (2, 5)]);
    let w = extract_u_coords(&u_matrix(&u, &P).mul(&u_matrix(&v, &P)), &P).unwrap();
    let lhs = psi_e_u(&e, &w, &P).unwrap();
    let rhs = psi_e_u(&e, &u, &P).unwrap().mul(&psi_e_u(&e, &v, &P).unwrap());
    assert_eq!(lhs, rhs);
    assert_ne!(lhs, CycloValue::one(P));
}

#[test]
fn padic_matrix_agrees_with_exact() {
    let ctx = PadicCtx { p: P, prec: 12 };
    let r = [(1, 5), (-2, 3), (7, 25), (1, 1), (4, 5)].map(|(a, b)| rat(a, b));
    let g = GroupCoord::with_d(1, 2, 3, 1, P);
    let exact = gamma_norm(&iota(&UCoord::<BigRational>::from_rationals(&r, &P), &g, &P), P).unwrap();
    let up: UCoordP = UCoord::from_rationals(&r, &ctx);
    let trunc = gamma_norm(&iota(&up, &g, &ctx), P).unwrap();
    assert_eq!(exact, trunc);
    let z = PadicScalar::zero(P);
    assert!(z.is_exact_zero());
}
