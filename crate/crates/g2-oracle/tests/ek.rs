use g2_closed::{ds_closed, ek_closed};
use g2_group::GroupCoord;
use g2_oracle::*;
use g2_padic::{LocalCubic, LocalCubicType};
use num_traits::{Signed, Zero};

const P: u64 = 5;

fn e(t: LocalCubicType) -> LocalCubic {
    LocalCubic::standard(t, P).unwrap()
}

fn brute(e: &LocalCubic, g: &GroupCoord, k: i64) -> EkResult {
    ek_brute(e, g, k, &EnumPlan::for_instance(g, k, P)).unwrap()
}

const TORAL: [(i64, i64); 5] = [(0, 0), (1, 1), (1, 2), (2, 3), (2, 4)];

#[test]
fn toral_values_match_closed() {
    for t in [LocalCubicType::Quad, LocalCubicType::Cubic] {
        let e = e(t);
        for (n, m) in TORAL {
            let g = GroupCoord::toral(n, m);
            for k in n..=n + 2 {
                let closed = coef_at_q(&ek_closed(&e, &g, k).unwrap(), P, 0).unwrap();
                assert_eq!(brute(&e, &g, k).value, closed, "{t:?} ({n},{m}) k={k}");
            }
        }
    }
}

#[test]
fn below_n_is_empty() {
    let e = e(LocalCubicType::Quad);
    let g = GroupCoord::toral(2, 3);
    for k in 0..2 {
        let plan = EnumPlan::for_instance(&g, k, P);
        assert!(ek_measure(&e, &g, k, &plan).unwrap().value.is_zero());
    }
}

#[test]
fn non_toral_values_vanish() {
    for t in [LocalCubicType::Quad, LocalCubicType::Cubic] {
        let e = e(t);
        for (n, m, u) in [(1, 1, 1), (2, 3, 1), (2, 3, 2)] {
            let g = GroupCoord::with_d(n, m, u, 1, P);
            for k in n..=n + 2 {
                assert!(brute(&e, &g, k).value.is_zero(), "{t:?} {g:?} k={k}");
            }
        }
    }
}

#[test]
fn truncated_series_matches_closed_ds() {
    for t in [LocalCubicType::Quad, LocalCubicType::Cubic] {
        let e = e(t);
        for (n, m) in [(0, 0), (1, 1), (1, 2)] {
            let g = GroupCoord::toral(n, m);
            let kmax = n + 2;
            let plan = EnumPlan::for_instance(&g, kmax, P);
            let trunc = ds_truncated(&e, &g, kmax, &plan).unwrap();
            let series = ds_closed(&e, &g).unwrap().series(kmax as usize + 1).unwrap();
            assert!(trunc.matches(&series, P), "{t:?} ({n},{m}): {:?}", trunc.d);
        }
    }
}

#[test]
fn field_identity_series_head() {
    let e = e(LocalCubicType::Cubic);
    let g = GroupCoord::identity();
    let trunc = ds_truncated(&e, &g, 2, &EnumPlan::for_instance(&g, 2, P)).unwrap();
    let d: Vec<String> = trunc.d.iter().map(|x| x.to_string()).collect();
    assert_eq!(d, ["1", "-26", "25"]);
}

#[test]
fn enlarging_the_plan_changes_nothing() {
    let e = e(LocalCubicType::Quad);
    for (n, m) in [(1, 1), (2, 4)] {
        let g = GroupCoord::toral(n, m);
        let k = n + 1;
        let base = EnumPlan::for_instance(&g, k, P);
        let wider = EnumPlan { radius: base.radius + 1, ..base.clone() };
        let deeper = EnumPlan { depth: base.depth + 10, ..base.clone() };
        let v = ek_brute(&e, &g, k, &base).unwrap().value;
        assert_eq!(ek_brute(&e, &g, k, &wider).unwrap().value, v);
        assert_eq!(ek_brute(&e, &g, k, &deeper).unwrap().value, v);
    }
}

#[test]
fn character_integral_is_dominated_by_volume() {
    for t in [LocalCubicType::Quad, LocalCubicType::Cubic] {
        let e = e(t);
        for (n, m) in TORAL {
            let g = GroupCoord::toral(n, m);
            for k in n..=n + 1 {
                let plan = EnumPlan::for_instance(&g, k, P);
                let chi = ek_brute(&e, &g, k, &plan).unwrap().value;
                let vol = ek_measure(&e, &g, k, &plan).unwrap().value;
                assert!(vol.is_positive() && chi.abs() <= vol, "{t:?} ({n},{m}) k={k}");
            }
        }
    }
}

#[test]
fn frontier_split_is_deterministic() {
    let e = e(LocalCubicType::Cubic);
    let g = GroupCoord::toral(1, 2);
    let base = EnumPlan::for_instance(&g, 2, P);
    let serial = EnumPlan { frontier: 1, ..base.clone() };
    let a = ek_brute(&e, &g, 2, &base).unwrap();
    let b = ek_brute(&e, &g, 2, &serial).unwrap();
    assert_eq!(a.value, b.value);
    assert_eq!(a.visits, b.visits);
}

#[test]
fn budget_is_enforced() {
    let e = e(LocalCubicType::Quad);
    let g = GroupCoord::toral(1, 1);
    let plan = EnumPlan { budget: 50, ..EnumPlan::for_instance(&g, 3, P) };
    assert!(matches!(ek_brute(&e, &g, 3, &plan), Err(OracleError::BudgetExceeded { .. })));
}

#[test]
fn plan_round_trips_through_json() {
    let plan = EnumPlan::for_instance(&GroupCoord::toral(1, 2), 3, P);
    let text = serde_json::to_string(&plan).unwrap();
    assert_eq!(serde_json::from_str::<EnumPlan>(&text).unwrap(), plan);
}
