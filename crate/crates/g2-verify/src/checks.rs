//! Check families. Each returns one [`Outcome`] per instance, in grid order.

use crate::config::RunConfig;
use crate::report::{Check, Outcome, Provenance};
use g2_closed::{
    convolve_ps_variant, ds_closed, ek_closed, f_star, f_unnorm, gauss_closed, kappa_abc_closed, kappa_closed,
    KappaAbc, Variant,
};
use g2_group::{support_conditions, GroupCoord};
use g2_oracle::{
    box_integral_brute, coef_at_q, ds_truncated, ek_brute, f_shellpath, field_integral_brute, gauss_brute,
    kappa_abc_count, kappa_count, quad_integral_brute, shell_brute, EnumPlan, OracleError,
};
use g2_padic::{shell_integral_closed, LocalCubic, LocalCubicType};
use g2_satake::{check_generating_identity, formal_torus, lfactor, newton_consistent, rational_torus, satake_weights};
use g2_symbolic::{c_pow, rat, zeta_local, Coef, CoefExt, RatFuncX};
use num_rational::BigRational;
use rayon::prelude::*;
use std::time::Instant;

fn check(id: &str, instance: String, lhs: String, rhs: String, equal: bool, prov: Provenance, start: Instant) -> Outcome {
    Outcome::Done(Check {
        id: id.to_string(),
        instance,
        lhs,
        rhs,
        equal,
        provenance: prov,
        ms: start.elapsed().as_millis(),
    })
}

fn instance(e: &LocalCubic, g: &GroupCoord) -> String {
    format!("{} p={} n={} m={} d={}", e.etype, e.p, g.n, g.m, g.d)
}

fn at_q(c: &Coef, p: u64) -> Option<BigRational> {
    coef_at_q(c, p, 0)
}

fn q_text(c: &Coef, p: u64) -> String {
    match at_q(c, p) {
        Some(v) => format!("{} = {v}", c.to_text()),
        None => c.to_text(),
    }
}

/// Toral points and, for each `j` in `js`, every `d = u/p^j` with `u` a unit residue.
pub fn grid(cfg: &RunConfig, js: &[u32]) -> Vec<GroupCoord> {
    let p = cfg.prime;
    let mut out = Vec::new();
    for n in cfg.n.clone() {
        for m in cfg.m.clone() {
            out.push(GroupCoord::toral(n, m));
            for &j in js {
                for u in 1..p as i64 {
                    out.push(GroupCoord::with_d(n, m, u, j, p));
                }
            }
        }
    }
    out
}

fn support_grid(cfg: &RunConfig, e: &LocalCubic, js: &[u32]) -> Vec<GroupCoord> {
    grid(cfg, js).into_iter().filter(|g| support_conditions(e, g)).collect()
}

fn over_budget(id: &str, instance: String, err: &OracleError) -> Outcome {
    Outcome::OverBudget {
        id: id.to_string(),
        instance,
        detail: err.to_string(),
    }
}

fn oracle_failure(id: &str, instance: String, err: OracleError, start: Instant) -> Outcome {
    match err {
        OracleError::BudgetExceeded { .. } => over_budget(id, instance, &err),
        other => check(id, instance, format!("error: {other}"), String::new(), false, Provenance::PaperFormula, start),
    }
}

/// `F* ∗ P_s = D_s` on toral points and `|d| = q`.
pub fn identity(cfg: &RunConfig, variant: Variant) -> Vec<Outcome> {
    let jobs: Vec<(LocalCubic, GroupCoord)> = cfg
        .nonsplit()
        .into_iter()
        .flat_map(|e| grid(cfg, &[1]).into_iter().map(move |g| (e, g)))
        .collect();
    jobs.into_par_iter()
        .map(|(e, g)| {
            let start = Instant::now();
            let rhs = ds_closed(&e, &g).expect("validated algebra");
            let (lhs, equal) = match convolve_ps_variant(&e, &g, variant) {
                Ok(l) => (l.to_text(), l == rhs),
                Err(err) => (format!("error: {err}"), false),
            };
            check("identity", instance(&e, &g), lhs, rhs.to_text(), equal, variant.into(), start)
        })
        .collect()
}

/// `(F* ∗ P_s)(1)` against `1/ζ(s+7/2)` (quad) and `1/(ζ(s+3/2)ζ(s+7/2))` (cubic).
pub fn anchors(cfg: &RunConfig, variant: Variant) -> Vec<Outcome> {
    let inv = |shift2| zeta_local(shift2, 0, 1).inv().expect("nonzero");
    cfg.nonsplit()
        .into_iter()
        .map(|e| {
            let start = Instant::now();
            let want: RatFuncX = match e.etype {
                LocalCubicType::Quad => inv(7),
                _ => inv(3).mul(&inv(7)),
            };
            let g = GroupCoord::identity();
            let (lhs, equal) = match convolve_ps_variant(&e, &g, variant) {
                Ok(l) => (l.to_text(), l == want),
                Err(err) => (format!("error: {err}"), false),
            };
            let ds_ok = ds_closed(&e, &g).expect("validated algebra") == want;
            let rhs = format!("{}{}", want.to_text(), if ds_ok { "" } else { " (D_s disagrees)" });
            check("anchor", instance(&e, &g), lhs, rhs, equal && ds_ok, variant.into(), start)
        })
        .collect()
}

/// `D_s` prefix from the `E_k` oracle against the closed `D_s`, on support points.
pub fn series(cfg: &RunConfig) -> Vec<Outcome> {
    let p = cfg.prime;
    let jobs: Vec<(LocalCubic, GroupCoord)> = cfg
        .nonsplit()
        .into_iter()
        .flat_map(|e| support_grid(cfg, &e, &[1]).into_iter().map(move |g| (e, g)))
        .collect();
    jobs.into_par_iter()
        .map(|(e, g)| {
            let start = Instant::now();
            let plan = EnumPlan {
                budget: cfg.budget,
                ..EnumPlan::for_instance(&g, cfg.kmax, p)
            };
            let inst = format!("{} kmax={}", instance(&e, &g), cfg.kmax);
            let closed = ds_closed(&e, &g).expect("validated algebra");
            let Ok(sx) = closed.series(cfg.kmax as usize + 1) else {
                return check("series", inst, "not a power series".into(), closed.to_text(), false, Provenance::PaperFormula, start);
            };
            match ds_truncated(&e, &g, cfg.kmax, &plan) {
                Ok(t) => {
                    let lhs: Vec<String> = t.d.iter().map(|x| x.to_string()).collect();
                    let rhs: Vec<String> = (0..=cfg.kmax as usize)
                        .map(|k| coef_at_q(&sx.coeff(k), p, 7 * k as i32).map_or_else(|| sx.coeff(k).to_text(), |v| v.to_string()))
                        .collect();
                    let equal = t.matches(&sx, p);
                    check("series", inst, lhs.join(", "), rhs.join(", "), equal, Provenance::PaperFormula, start)
                }
                Err(err) => oracle_failure("series", inst, err, start),
            }
        })
        .collect()
}

/// `E_k` for `k ∈ {n, n+1, n+2}` at toral support points and non-toral points with `|p| ≤ 1`.
pub fn ek(cfg: &RunConfig) -> Vec<Outcome> {
    let p = cfg.prime;
    let mut jobs = Vec::new();
    for e in cfg.nonsplit() {
        for g in support_grid(cfg, &e, &[1]) {
            if g.l(p).map_or(true, |l| l <= 0) {
                for k in g.n..=g.n + 2 {
                    jobs.push((e, g.clone(), k));
                }
            }
        }
    }
    jobs.into_par_iter()
        .map(|(e, g, k)| {
            let start = Instant::now();
            let inst = format!("{} k={k}", instance(&e, &g));
            let closed = ek_closed(&e, &g, k).expect("validated algebra");
            let plan = EnumPlan {
                budget: cfg.budget,
                ..EnumPlan::for_instance(&g, k, p)
            };
            match ek_brute(&e, &g, k, &plan) {
                Ok(r) => {
                    let equal = at_q(&closed, p).as_ref() == Some(&r.value);
                    check("ek", inst, r.value.to_string(), q_text(&closed, p), equal, Provenance::PaperFormula, start)
                }
                Err(err) => oracle_failure("ek", inst, err, start),
            }
        })
        .collect()
}

/// Gaussian sums on support points with `d = 0`, `|d| = q`, `|d| = q²`.
pub fn gauss(cfg: &RunConfig, variant: Variant) -> Vec<Outcome> {
    let p = cfg.prime;
    let jobs: Vec<(LocalCubic, GroupCoord)> = cfg
        .nonsplit()
        .into_iter()
        .flat_map(|e| support_grid(cfg, &e, &[1, 2]).into_iter().map(move |g| (e, g)))
        .collect();
    jobs.into_par_iter()
        .map(|(e, g)| {
            let start = Instant::now();
            let inst = instance(&e, &g);
            let brute = match gauss_brute(&e, &g) {
                Ok(b) => b,
                Err(err) => return oracle_failure("gauss", inst, err, start),
            };
            let (lhs, equal) = match gauss_closed(&e, &g, variant) {
                Ok(b) => (format!("{} [{}]", q_text(&b.value, p), b.tag), at_q(&b.value, p) == Some(brute.clone())),
                Err(err) => (format!("error: {err}"), false),
            };
            check("gauss", inst, lhs, brute.to_string(), equal, variant.into(), start)
        })
        .collect()
}

/// `κ(n1, n2, n3)` for all `n_i ≤ 3` with `n1 + n2 ≥ n3`.
pub fn kappa(cfg: &RunConfig) -> Vec<Outcome> {
    let p = cfg.prime;
    let mut out = Vec::new();
    for n1 in 0..=3 {
        for n2 in 0..=3 {
            for n3 in 0..=(n1 + n2).min(3) {
                let start = Instant::now();
                let inst = format!("p={p} κ({n1},{n2},{n3})");
                let closed = kappa_closed(n1, n2, n3).expect("n1+n2 ≥ n3");
                match kappa_count(n1, n2, n3, p) {
                    Ok(v) => {
                        let equal = at_q(&closed, p).as_ref() == Some(&v);
                        out.push(check("kappa", inst, q_text(&closed, p), v.to_string(), equal, Provenance::PaperFormula, start));
                    }
                    Err(err) => out.push(oracle_failure("kappa", inst, err, start)),
                }
            }
        }
    }
    out
}

/// `κ^{(1)}_{a,b,c}` plain and on shells `|x| = |y| = q^{n2}`.
pub fn kappa_abc(cfg: &RunConfig, variant: Variant) -> Vec<Outcome> {
    let mut out = Vec::new();
    for e in cfg.nonsplit() {
        let mut cases: Vec<(KappaAbc, Option<i64>, Variant)> =
            (1..=3).map(|n2| (KappaAbc::Shell(1, n2), Some(n2), Variant::Printed)).collect();
        cases.push((KappaAbc::Plain(1), None, variant));
        for (which, n2, v) in cases {
            let start = Instant::now();
            let inst = format!("{} p={} {which:?}", e.etype, e.p);
            let closed = kappa_abc_closed(&e, which, v).expect("stated case");
            match kappa_abc_count(&e, 1, n2) {
                Ok(b) => out.push(check("kappa-abc", inst, closed.to_string(), b.to_string(), closed == b, v.into(), start)),
                Err(err) => out.push(oracle_failure("kappa-abc", inst, err, start)),
            }
        }
    }
    out
}

/// The two `1 − q` integrals, the box integral `−1` and the shells `j ∈ [−2, 2]`.
pub fn special(cfg: &RunConfig) -> Vec<Outcome> {
    let p = cfg.prime;
    let q = p as i64;
    let mut out = Vec::new();
    let mut push = |id: &str, inst: String, closed: BigRational, brute: BigRational, start: Instant| {
        out.push(check(id, inst, closed.to_string(), brute.to_string(), closed == brute, Provenance::PaperFormula, start));
    };
    let start = Instant::now();
    push("box-integral", format!("p={p}"), rat(-1, 1), box_integral_brute(p, 1), start);
    for e in cfg.nonsplit() {
        let start = Instant::now();
        let (id, brute) = match e.etype {
            LocalCubicType::Quad => ("quad-integral", quad_integral_brute(&e, 1)),
            _ => ("field-integral", field_integral_brute(&e, 1)),
        };
        push(id, format!("{} p={p} D={} N={}", e.etype, e.d, e.n), rat(1 - q, 1), brute, start);
    }
    for j in -2..=2 {
        let start = Instant::now();
        let closed = at_q(&shell_integral_closed(j as i32), p).expect("integral powers of q");
        push("shell", format!("p={p} j={j}"), closed, shell_brute(j, p), start);
    }
    out
}

/// `F_shellpath = F_unnorm` and `F* = F_unnorm` (twist 1) on support points.
pub fn whittaker(cfg: &RunConfig, variant: Variant) -> Vec<Outcome> {
    let one = rat(1, 1);
    let jobs: Vec<(LocalCubic, GroupCoord)> = cfg
        .nonsplit()
        .into_iter()
        .flat_map(|e| support_grid(cfg, &e, &[1, 2]).into_iter().map(move |g| (e, g)))
        .collect();
    jobs.into_par_iter()
        .flat_map_iter(|(e, g)| {
            let start = Instant::now();
            let inst = instance(&e, &g);
            let base = f_unnorm(&e, &g).expect("validated algebra");
            let path = match f_shellpath(&e, &g) {
                Ok(s) => check("f-shellpath", inst.clone(), s.to_text(), base.to_text(), s == base, Provenance::PaperFormula, start),
                Err(err) => oracle_failure("f-shellpath", inst.clone(), err, start),
            };
            let start = Instant::now();
            let star = f_star(&e, &g, variant).expect("validated algebra");
            let (lhs, rhs) = (star.value.at_c(&one), base.at_c(&one));
            let table = check(
                "f-star",
                inst,
                format!("{} [{}]", lhs.to_text(), star.tag),
                rhs.to_text(),
                lhs == rhs,
                variant.into(),
                start,
            );
            [path, table]
        })
        .collect()
}

/// Generating identity and Newton relations on a rational torus grid to `order`,
/// and on the formal torus to `min(order, 5)`.
pub fn lfactor_checks(cfg: &RunConfig) -> Vec<Outcome> {
    let vals = [rat(1, 1), rat(2, 1), rat(1, 2), rat(3, 1), rat(-2, 3)];
    let order = cfg.order;
    let tori: Vec<(BigRational, BigRational)> =
        vals.iter().flat_map(|a| vals.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let mut out: Vec<Outcome> = tori
        .into_par_iter()
        .map(|(a, b)| {
            let start = Instant::now();
            let t = rational_torus(a.clone(), b.clone());
            let w = satake_weights(&t).expect("units");
            let ok = check_generating_identity(&t, &c_pow(1), order).expect("units") && newton_consistent(&w, order);
            let lhs = lfactor(&w, 1).to_text();
            check(
                "lfactor",
                format!("t=({a},{b}) order={order}"),
                lhs,
                format!("Σ h_k(t) c^k X^k to X^{order}"),
                ok,
                Provenance::PaperFormula,
                start,
            )
        })
        .collect();
    let start = Instant::now();
    let formal_order = order.min(5);
    let (t, c) = formal_torus();
    let ok = check_generating_identity(&t, &c, formal_order).expect("units")
        && newton_consistent(&satake_weights(&t).expect("units"), formal_order);
    out.push(check(
        "lfactor",
        format!("formal torus order={formal_order}"),
        "1/det(1 - st(t) c X)".into(),
        format!("Σ h_k(t) c^k X^k to X^{formal_order}"),
        ok,
        Provenance::PaperFormula,
        start,
    ));
    out
}

pub fn check_identity(cfg: &RunConfig) -> Vec<Outcome> {
    let v = cfg.variant();
    let mut out = anchors(cfg, v);
    out.extend(identity(cfg, v));
    out.extend(series(cfg));
    out
}

pub fn check_lemmas(cfg: &RunConfig) -> Vec<Outcome> {
    let v = cfg.variant();
    let mut out = kappa(cfg);
    out.extend(kappa_abc(cfg, v));
    out.extend(special(cfg));
    out.extend(gauss(cfg, v));
    out.extend(whittaker(cfg, v));
    out.extend(ek(cfg));
    out
}

pub fn check_lfactor(cfg: &RunConfig) -> Vec<Outcome> {
    lfactor_checks(cfg)
}
