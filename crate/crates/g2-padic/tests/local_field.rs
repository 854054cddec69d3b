use g2_padic::*;
use g2_symbolic::{rat, CoefExt};
use num_rational::BigRational;
use num_traits::{One, Zero};

fn r(n: i64, d: i64) -> BigRational {
    rat(n, d)
}

#[test]
fn psi_is_trivial_on_integers() {
    let x = PadicScalar::from_rational(&r(17, 3), 5, 8);
    assert_eq!(psi(&x).unwrap(), CycloValue::one(5));
}

#[test]
fn psi_of_one_over_p_is_a_root_of_unity() {
    let x = PadicScalar::from_rational(&r(1, 5), 5, 8);
    assert_eq!(psi(&x).unwrap(), CycloValue::zeta(5, 1, 1));
}

#[test]
fn psi_needs_digits_below_the_point() {
    let x = PadicScalar::from_parts(5, -3, 7, 2);
    assert!(matches!(psi(&x), Err(LocalFieldError::InsufficientPrecision(_))));
}

#[test]
fn primitive_character_sum_matches_shell_table() {
    let mut s = CycloValue::zero(5);
    for u in 1..5 {
        s = s.add(&psi_rational(&r(u, 5), 5));
    }
    let expect = shell_integral_closed(1).eval_q(5).unwrap().as_constant().unwrap();
    assert_eq!(s.as_rational().unwrap(), expect);
    assert_eq!(expect, r(-1, 1));
}

#[test]
fn shell_table_values() {
    assert!(shell_integral_closed(2).is_zero());
    assert_eq!(shell_integral_closed(1).to_text(), "-1");
    assert_eq!(shell_integral_closed(0).eval_q(5).unwrap().as_constant(), Some(r(4, 5)));
}

fn shell_by_cells(j: i64, p: u64) -> BigRational {
    let plan = CellPlan::uniform(p, 1, j, 1 - j + 1, 1 << 20);
    let v = haar_cell_sum(
        &plan,
        |c| Ok(psi_rational(&c[0], p)),
        |c| Ok(arith::vp(&c[0], p) == Some(-j)),
    )
    .unwrap();
    v.as_rational().expect("rational shell integral")
}

#[test]
fn shell_table_equals_cell_sums() {
    for p in [5u64, 7] {
        for j in -1..=2i32 {
            let closed = shell_integral_closed(j).eval_q(p).unwrap().as_constant().unwrap();
            assert_eq!(shell_by_cells(j as i64, p), closed, "p={p} j={j}");
        }
    }
}

#[test]
fn classification_examples() {
    assert_eq!(classify_cubic(-1, 0, 5).unwrap(), LocalCubicType::Split);
    assert_eq!(classify_cubic(2, 0, 5).unwrap(), LocalCubicType::Quad);
    // x^3 - 2 over F_5: exhaustive root search
    let roots = (0..5).filter(|x| (x * x * x - 2i64).rem_euclid(5) == 0).count();
    let expect = if roots == 0 { LocalCubicType::Cubic } else { LocalCubicType::Quad };
    assert_eq!(classify_cubic(0, 2, 5).unwrap(), expect);
    assert!(classify_cubic(0, 0, 5).is_err());
    assert!(classify_cubic(10, 0, 5).is_err());
    assert!(classify_cubic(1, 1, 3).is_err());
}

#[test]
fn psi_e_examples() {
    let e = LocalCubic::standard(LocalCubicType::Quad, 5).unwrap();
    let z = r(0, 1);
    assert_eq!(psi_e(&e, &z, &z, &z, &5).unwrap(), CycloValue::one(5));
    assert_eq!(psi_e(&e, &z, &z, &r(1, 5), &5).unwrap(), CycloValue::zeta(5, 1, 1));
    // N = 0: r1 does not enter
    assert_eq!(psi_e(&e, &r(1, 5), &z, &z, &5).unwrap(), CycloValue::one(5));
    let c = LocalCubic::standard(LocalCubicType::Cubic, 5).unwrap();
    assert_eq!(psi_e(&c, &r(1, 5), &z, &z, &5).unwrap(), CycloValue::zeta(5, 1, 4));
}

#[test]
fn unit_ball_has_measure_one() {
    let plan = CellPlan::uniform(5, 1, 0, 2, 1000);
    let v = haar_cell_sum(&plan, |_| Ok(CycloValue::one(5)), |_| Ok(true)).unwrap();
    assert_eq!(v.as_rational(), Some(BigRational::one()));
}

#[test]
fn character_integrates_to_zero_on_large_ball() {
    let plan = CellPlan::uniform(5, 1, 1, 1, 1000);
    let v = haar_cell_sum(&plan, |c| Ok(psi_rational(&c[0], 5)), |_| Ok(true)).unwrap();
    assert_eq!(v.as_rational(), Some(BigRational::zero()));
}

#[test]
fn quadratic_special_integral() {
    for p in [5u64, 7] {
        let e = LocalCubic::standard(LocalCubicType::Quad, p).unwrap();
        let d = r(e.d, 1);
        for prec in [0, 1] {
            let plan = CellPlan::uniform(p, 2, 1, prec, 1 << 20);
            let v = haar_cell_sum(
                &plan,
                |c| Ok(psi_rational(&(&d * &c[0] + &c[1] * &c[1] / &c[0]), p)),
                |c| Ok(c.iter().all(|x| arith::vp(x, p) == Some(-1))),
            )
            .unwrap();
            assert_eq!(v.as_rational(), Some(r(1 - p as i64, 1)));
        }
    }
}

#[test]
fn budget_is_enforced() {
    let plan = CellPlan::uniform(5, 4, 2, 2, 1000);
    let err = haar_cell_sum(&plan, |_| Ok(CycloValue::one(5)), |_| Ok(true)).unwrap_err();
    assert!(matches!(err, LocalFieldError::BudgetExceeded { .. }));
}

#[test]
fn precision_rule() {
    let plan = CellPlan::uniform(5, 2, 1, 2, 1000);
    assert!(plan.check_precision(&[0]).is_ok());
    assert!(plan.check_precision(&[1]).is_err());
}

#[test]
fn plan_serializes() {
    let plan = CellPlan::uniform(7, 3, 1, 2, 99);
    let s = serde_json::to_string(&plan).unwrap();
    let back: CellPlan = serde_json::from_str(&s).unwrap();
    assert_eq!(back, plan);
}
