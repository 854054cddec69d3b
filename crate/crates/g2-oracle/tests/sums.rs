use g2_closed::{
    alpha_valuation, f_unnorm, gauss_closed, kappa_abc_closed, kappa_closed, BranchPoint, ClosedError, KappaAbc,
    Variant,
};
use g2_group::{support_conditions, GroupCoord};
use g2_oracle::*;
use g2_padic::{shell_integral_closed, LocalCubic, LocalCubicType};
use g2_symbolic::rat;

fn types(p: u64) -> Vec<LocalCubic> {
    [LocalCubicType::Quad, LocalCubicType::Cubic]
        .into_iter()
        .map(|t| LocalCubic::standard(t, p).unwrap())
        .collect()
}

fn support_grid(e: &LocalCubic, nmax: i64, jmax: u32) -> Vec<GroupCoord> {
    let p = e.p;
    let mut out = Vec::new();
    for n in 0..=nmax {
        for m in 0..=3 * nmax + 3 {
            out.push(GroupCoord::toral(n, m));
            for j in 1..=jmax {
                for u in (1..p as i64).step_by(if j > 1 { 3 } else { 1 }) {
                    out.push(GroupCoord::with_d(n, m, u, j, p));
                }
            }
        }
    }
    out.retain(|g| support_conditions(e, g));
    out
}

#[test]
fn gauss_sum_matches_corrected_tables_on_support() {
    for p in [5, 7, 11] {
        for e in types(p) {
            for g in support_grid(&e, 3, 2) {
                let brute = gauss_brute(&e, &g).unwrap();
                let closed = gauss_closed(&e, &g, Variant::Corrected).unwrap();
                assert_eq!(
                    coef_at_q(&closed.value, p, 0),
                    Some(brute.clone()),
                    "p={p} {:?} {g:?} row {}",
                    e.etype,
                    closed.tag
                );
            }
        }
    }
}

#[test]
fn gauss_sum_printed_table_fails_only_at_quad_diagonal() {
    for p in [5, 7, 11] {
        for e in types(p) {
            let mut bad = Vec::new();
            for g in support_grid(&e, 3, 2) {
                let brute = gauss_brute(&e, &g).unwrap();
                let ok = match gauss_closed(&e, &g, Variant::Printed) {
                    Ok(b) => coef_at_q(&b.value, p, 0) == Some(brute),
                    Err(ClosedError::NoBranch(_)) => false,
                    Err(err) => panic!("{err}"),
                };
                if !ok {
                    bad.push((g.n, g.m, g.d_branch(p)));
                }
            }
            let want: Vec<_> = match e.etype {
                LocalCubicType::Quad => (1..=3).map(|n| (n, n, None)).collect(),
                _ => vec![],
            };
            assert_eq!(bad, want, "p={p} {:?}", e.etype);
        }
    }
}

#[test]
fn gauss_sum_inversion_is_immaterial() {
    for e in types(5) {
        for g in support_grid(&e, 2, 1) {
            assert_eq!(gauss_brute(&e, &g).unwrap(), gauss_brute_uninverted(&e, &g).unwrap());
        }
    }
}

#[test]
fn kappa_counts_match_closed() {
    for p in [5, 7] {
        for n1 in 0..=3 {
            for n2 in 0..=3 {
                for n3 in 0..=(n1 + n2).min(3) {
                    let closed = kappa_closed(n1, n2, n3).unwrap();
                    assert_eq!(
                        coef_at_q(&closed, p, 0),
                        Some(kappa_count(n1, n2, n3, p).unwrap()),
                        "p={p} κ({n1},{n2},{n3})"
                    );
                }
            }
        }
    }
}

#[test]
fn kappa_abc_shell_vanishes_plain_does_not() {
    for p in [5, 7] {
        for e in types(p) {
            for n2 in 1..=3 {
                let brute = kappa_abc_count(&e, 1, Some(n2)).unwrap();
                assert_eq!(brute, kappa_abc_closed(&e, KappaAbc::Shell(1, n2), Variant::Printed).unwrap());
            }
            let plain = kappa_abc_count(&e, 1, None).unwrap();
            let q = p as i64;
            assert_eq!(plain, rat(q * q * q, q + 1));
            assert_eq!(plain, kappa_abc_closed(&e, KappaAbc::Plain(1), Variant::Corrected).unwrap());
            assert_ne!(plain, kappa_abc_closed(&e, KappaAbc::Plain(1), Variant::Printed).unwrap());
        }
    }
}

#[test]
fn special_integrals() {
    for p in [5, 7] {
        let q = p as i64;
        let [quad, cubic] = [types(p)[0], types(p)[1]];
        assert_eq!(quad_integral_brute(&quad, 1), rat(1 - q, 1), "p={p}");
        assert_eq!(field_integral_brute(&cubic, 1), rat(1 - q, 1), "p={p}");
        assert_eq!(box_integral_brute(p, 1), rat(-1, 1), "p={p}");
    }
}

#[test]
fn special_integrals_are_stable_in_precision() {
    let e = types(5);
    assert_eq!(quad_integral_brute(&e[0], 2), quad_integral_brute(&e[0], 1));
    assert_eq!(box_integral_brute(5, 2), box_integral_brute(5, 1));
}

#[test]
fn shell_integrals_match_closed() {
    for p in [5, 7] {
        for j in -2..=2 {
            let closed = shell_integral_closed(j as i32);
            assert_eq!(coef_at_q(&closed, p, 0), Some(shell_brute(j, p)), "p={p} j={j}");
        }
    }
}

#[test]
fn shell_path_reproduces_f_unnorm() {
    for p in [5, 7] {
        for e in types(p) {
            for g in support_grid(&e, 2, 2) {
                let pt = BranchPoint::of(&g, p);
                assert_eq!(alpha_valuation_exact(&e, &g).unwrap(), alpha_valuation(e.etype, &pt), "{g:?}");
                assert_eq!(f_shellpath(&e, &g).unwrap(), f_unnorm(&e, &g).unwrap(), "p={p} {g:?}");
            }
        }
    }
}
