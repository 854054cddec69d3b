//! `E_k(g) = ∫_{U_k(g)} Ψ_E(u) du` by adaptive refinement of p-adic boxes in
//! `(r1, r2, r3, r4)`, with `r5` integrated out exactly.

use crate::OracleError;
use g2_group::GroupCoord;
use g2_padic::{arith::vp, psi_rational, CycloValue, LocalCubic};
use g2_symbolic::{rat, rat_pow, Laurent};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

/// Polynomial in `r1..r5`.
type P5 = Laurent<5>;
/// Sparse polynomial in `r1..r4`.
type P4 = Vec<([u32; 4], BigRational)>;

/// Enumeration plan: every variable starts in `p^{-radius} O` and boxes are
/// refined down to `p^{depth} O` at most.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumPlan {
    pub radius: i64,
    pub depth: i64,
    pub budget: u64,
    /// Size of the breadth-first frontier handed to the worker pool.
    pub frontier: usize,
}

impl EnumPlan {
    /// Radius `k + |n| + |m| + 2|v(d)| + 3`, depth 40, budget `2·10^8`.
    pub fn for_instance(g: &GroupCoord, k: i64, p: u64) -> Self {
        let vd = vp(&g.d, p).map_or(0, |v| v.abs());
        Self {
            radius: k + g.n.abs() + g.m.abs() + 2 * vd + 3,
            depth: 40,
            budget: 200_000_000,
            frontier: 256,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EkResult {
    #[serde(serialize_with = "crate::ser_rat")]
    pub value: BigRational,
    pub visits: u64,
    pub ms: u128,
}

struct Cell {
    c: [BigRational; 4],
    e: [i64; 4],
    live: Vec<usize>,
}

struct Instance {
    p: u64,
    cons: Vec<(P4, i64)>,
    /// `L = r4 + D r2 − N r1`.
    l: [BigRational; 4],
    vol_r5: BigRational,
    character: bool,
}

fn pp(p: u64, e: i64) -> BigRational {
    rat_pow(&rat(p as i64, 1), e)
}

fn v_or_inf(x: &BigRational, p: u64) -> i64 {
    vp(x, p).unwrap_or(i64::MAX / 4)
}

/// Entries of `ι(u) ι(g)` as polynomials in `r1..r5`; same layout as
/// [`g2_group::u_matrix`].
fn matrix_polys(g: &GroupCoord, p: u64) -> Vec<P5> {
    let r = |i| P5::var_pow(i, 1);
    let h = rat(1, 2);
    let z = P5::zero;
    let (r1, r2, r3, r4, r5) = (r(0), r(1), r(2), r(3), r(4));
    let mut u: Vec<Vec<P5>> = (0..7)
        .map(|i| (0..7).map(|j| if i == j { P5::one() } else { z() }).collect())
        .collect();
    u[0][2] = r2.clone();
    u[0][3] = r3.clone();
    u[0][4] = (-&r4).scale(&h);
    u[0][5] = (&(&r2 * &r3) + &r5).scale(&h);
    u[0][6] = (&(&r2 * &r4) - &(&r3 * &r3)).scale(&h);
    u[1][2] = r1.clone();
    u[1][3] = r2.clone();
    u[1][4] = (-&r3).scale(&h);
    u[1][5] = (&(&r1 * &r3) - &(&r2 * &r2)).scale(&h);
    u[1][6] = (&(&(&r1 * &r4) - &(&r2 * &r3).scale(&rat(2, 1))) - &r5).scale(&h);
    u[2][5] = r3.scale(&h);
    u[2][6] = r4.scale(&h);
    u[3][5] = -&r2;
    u[3][6] = -&r3;
    u[4][5] = -&r1;
    u[4][6] = -&r2;
    let (n, m) = (g.n, g.m);
    let ex = [n, m - n, 2 * n - m, 0, m - 2 * n, n - m, -n];
    let d = &g.d;
    let mut xd: Vec<Vec<BigRational>> = (0..7)
        .map(|i| (0..7).map(|j| if i == j { rat(1, 1) } else { rat(0, 1) }).collect())
        .collect();
    xd[0][1] = d.clone();
    xd[2][3] = -d.clone();
    xd[2][4] = -(d * d) / rat(2, 1);
    xd[3][4] = d.clone();
    xd[5][6] = -d.clone();
    let mut out = Vec::new();
    for i in 0..7 {
        for j in 0..7 {
            let mut acc = z();
            for k in 0..7 {
                if xd[k][j].is_zero() || u[i][k].is_zero() {
                    continue;
                }
                acc += &u[i][k].scale(&(pp(p, ex[k]) * &xd[k][j]));
            }
            if !acc.is_zero() {
                out.push(acc);
            }
        }
    }
    out
}

fn to_p4(poly: &P5) -> P4 {
    poly.terms()
        .map(|(e, c)| ([e[0] as u32, e[1] as u32, e[2] as u32, e[3] as u32], c.clone()))
        .collect()
}

fn build(e: &LocalCubic, g: &GroupCoord, k: i64, character: bool) -> Result<Instance, OracleError> {
    let p = e.p;
    let mut cons: Vec<(P4, i64)> = Vec::new();
    let mut balls: Vec<(P4, i64)> = Vec::new();
    for poly in matrix_polys(g, p) {
        let (with5, without5): (Vec<_>, Vec<_>) = poly.terms().partition(|(ex, _)| ex[4] != 0);
        if with5.is_empty() {
            cons.push((to_p4(&poly), k));
            continue;
        }
        if with5.len() != 1 || *with5[0].0 != [0, 0, 0, 0, 1] {
            return Err(OracleError::Unsupported("entry not affine in r5".into()));
        }
        let a = with5[0].1.clone();
        // |a r5 + b| ≤ q^k  ⇔  |r5 − f| ≤ q^{k + v(a)},  f = −b/a
        let f: P4 = without5
            .iter()
            .map(|(ex, c)| ([ex[0] as u32, ex[1] as u32, ex[2] as u32, ex[3] as u32], -(*c).clone() / &a))
            .collect();
        balls.push((f, k + vp(&a, p).expect("nonzero")));
    }
    let j0 = (0..balls.len()).min_by_key(|&j| balls[j].1).expect("r5 appears in ι(u)");
    let (f0, rho0) = balls[j0].clone();
    for (j, (f, rho)) in balls.iter().enumerate() {
        if j == j0 {
            continue;
        }
        let mut diff: BTreeMap<[u32; 4], BigRational> = f.iter().cloned().collect();
        for (ex, c) in &f0 {
            *diff.entry(*ex).or_insert_with(BigRational::zero) -= c;
        }
        let diff: P4 = diff.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        cons.push((diff, *rho));
    }
    Ok(Instance {
        p,
        cons,
        l: [rat(-e.n, 1), rat(e.d, 1), rat(0, 1), rat(1, 1)],
        vol_r5: pp(p, rho0),
        character,
    })
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |a, i| a * (n - i) as i64 / (i + 1) as i64)
}

/// Coefficients of `P(c + h)` as a polynomial in `h`.
fn taylor(poly: &P4, c: &[BigRational; 4]) -> BTreeMap<[u32; 4], BigRational> {
    let mut out: BTreeMap<[u32; 4], BigRational> = BTreeMap::new();
    for (ex, co) in poly {
        let mut terms: Vec<([u32; 4], BigRational)> = vec![([0; 4], co.clone())];
        for i in 0..4 {
            if ex[i] == 0 {
                continue;
            }
            let mut next = Vec::new();
            for (mm, cc) in &terms {
                for a in 0..=ex[i] {
                    let mut m2 = *mm;
                    m2[i] += a;
                    let w = cc * rat(binom(ex[i], a), 1) * rat_pow(&c[i], (ex[i] - a) as i64);
                    if !w.is_zero() {
                        next.push((m2, w));
                    }
                }
            }
            terms = next;
        }
        for (mm, cc) in terms {
            *out.entry(mm).or_insert_with(BigRational::zero) += cc;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

enum Step {
    Dead,
    Leaf(CycloValue),
    Split(Vec<Cell>),
}

impl Instance {
    fn step(&self, cell: Cell, depth: i64) -> Result<Step, OracleError> {
        let p = self.p;
        let mut live = Vec::new();
        let mut worst: Option<(i64, usize)> = None;
        for &ci in &cell.live {
            let (poly, t) = &self.cons[ci];
            let tay = taylor(poly, &cell.c);
            let f0 = tay.get(&[0; 4]).cloned().unwrap_or_else(BigRational::zero);
            let mut low: Option<(i64, [u32; 4])> = None;
            for (mon, co) in &tay {
                if *mon == [0; 4] {
                    continue;
                }
                let val = v_or_inf(co, p) + (0..4).map(|i| mon[i] as i64 * cell.e[i]).sum::<i64>();
                if low.map_or(true, |(b, _)| val < b) {
                    low = Some((val, *mon));
                }
            }
            let vf = v_or_inf(&f0, p);
            match low {
                Some((mv, _)) if mv < -t => {
                    if vf < mv {
                        return Ok(Step::Dead);
                    }
                    let mon = low.unwrap().1;
                    let var = (0..4).filter(|&i| mon[i] > 0).min_by_key(|&i| cell.e[i]).unwrap();
                    live.push(ci);
                    if worst.map_or(true, |(b, _)| mv < b) {
                        worst = Some((mv, var));
                    }
                }
                _ => {
                    if vf < -t {
                        return Ok(Step::Dead);
                    }
                }
            }
        }
        match worst {
            None => {
                let vol = &self.vol_r5 * pp(p, -cell.e.iter().sum::<i64>());
                if !self.character {
                    return Ok(Step::Leaf(CycloValue::rational(p, vol)));
                }
                let constant = (0..4).all(|i| self.l[i].is_zero() || v_or_inf(&self.l[i], p) + cell.e[i] >= 0);
                if !constant {
                    return Ok(Step::Leaf(CycloValue::zero(p)));
                }
                let x = (0..4).fold(BigRational::zero(), |a, i| a + &self.l[i] * &cell.c[i]);
                Ok(Step::Leaf(psi_rational(&x, p).scale(&vol)))
            }
            Some((_, var)) => {
                if cell.e[var] >= depth {
                    return Err(OracleError::InsufficientPrecision(depth));
                }
                let step = pp(p, cell.e[var]);
                let kids = (0..p as i64)
                    .map(|a| {
                        let mut c = cell.c.clone();
                        c[var] = &c[var] + rat(a, 1) * &step;
                        let mut e = cell.e;
                        e[var] += 1;
                        Cell { c, e, live: live.clone() }
                    })
                    .collect();
                Ok(Step::Split(kids))
            }
        }
    }

    fn run(&self, plan: &EnumPlan) -> Result<(CycloValue, u64), OracleError> {
        let p = self.p;
        let visits = AtomicU64::new(0);
        let tick = |n: u64| -> Result<(), OracleError> {
            let v = visits.fetch_add(n, Ordering::Relaxed) + n;
            if v > plan.budget {
                Err(OracleError::BudgetExceeded { visits: v, budget: plan.budget })
            } else {
                Ok(())
            }
        };
        let root = Cell {
            c: std::array::from_fn(|_| BigRational::zero()),
            e: [-plan.radius; 4],
            live: (0..self.cons.len()).collect(),
        };
        let mut acc = CycloValue::zero(p);
        let mut frontier = vec![root];
        while !frontier.is_empty() && frontier.len() < plan.frontier {
            let mut next = Vec::new();
            for cell in frontier {
                tick(1)?;
                match self.step(cell, plan.depth)? {
                    Step::Dead => {}
                    Step::Leaf(v) => acc = acc.add(&v),
                    Step::Split(kids) => next.extend(kids),
                }
            }
            frontier = next;
        }
        let parts: Vec<CycloValue> = frontier
            .into_par_iter()
            .map(|cell| {
                let mut stack = vec![cell];
                let mut sub = CycloValue::zero(p);
                let mut local = 0u64;
                while let Some(cell) = stack.pop() {
                    local += 1;
                    if local == 4096 {
                        tick(local)?;
                        local = 0;
                    }
                    match self.step(cell, plan.depth)? {
                        Step::Dead => {}
                        Step::Leaf(v) => sub = sub.add(&v),
                        Step::Split(kids) => stack.extend(kids),
                    }
                }
                tick(local)?;
                Ok(sub)
            })
            .collect::<Result<_, OracleError>>()?;
        for part in parts {
            acc = acc.add(&part);
        }
        Ok((acc, visits.load(Ordering::Relaxed)))
    }
}

fn run_instance(
    e: &LocalCubic,
    g: &GroupCoord,
    k: i64,
    plan: &EnumPlan,
    character: bool,
) -> Result<EkResult, OracleError> {
    let start = Instant::now();
    let inst = build(e, g, k, character)?;
    let (val, visits) = inst.run(plan)?;
    let value = val
        .as_rational()
        .ok_or_else(|| OracleError::NotRational(format!("E_{k} at {g:?}: {val}")))?;
    Ok(EkResult {
        value,
        visits,
        ms: start.elapsed().as_millis(),
    })
}

/// `E_k(g) = ∫_{U_k(g)} Ψ_E(u) du`.
pub fn ek_brute(e: &LocalCubic, g: &GroupCoord, k: i64, plan: &EnumPlan) -> Result<EkResult, OracleError> {
    run_instance(e, g, k, plan, true)
}

/// `vol(U_k(g))`, the same integral with the trivial character.
pub fn ek_measure(e: &LocalCubic, g: &GroupCoord, k: i64, plan: &EnumPlan) -> Result<EkResult, OracleError> {
    run_instance(e, g, k, plan, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use g2_group::{iota, UCoordQ};

    #[test]
    fn polynomial_matrix_matches_iota() {
        let p = 5;
        let g = GroupCoord::with_d(1, 3, 2, 1, p);
        let polys = matrix_polys(&g, p);
        let r = [rat(1, 5), rat(-3, 25), rat(7, 1), rat(2, 3), rat(-1, 125)];
        let m = iota(&UCoordQ::from_rationals(&r, &p), &g, &p);
        let nonzero: Vec<BigRational> = m.entries().iter().filter(|x| !x.is_zero()).cloned().collect();
        let from_polys: Vec<BigRational> = polys.iter().map(|q| q.eval(&r)).filter(|x| !x.is_zero()).collect();
        assert_eq!(nonzero, from_polys);
    }

    fn eval(poly: &P4, c: &[BigRational; 4]) -> BigRational {
        poly.iter().fold(BigRational::zero(), |acc, (ex, co)| {
            let mut t = co.clone();
            for i in 0..4 {
                if ex[i] > 0 {
                    t *= rat_pow(&c[i], ex[i] as i64);
                }
            }
            acc + t
        })
    }

    #[test]
    fn taylor_recovers_values() {
        let poly: P4 = vec![([1, 2, 0, 0], rat(3, 1)), ([0, 0, 0, 1], rat(-1, 2))];
        let c = [rat(2, 1), rat(1, 5), rat(0, 1), rat(4, 1)];
        let t = taylor(&poly, &c);
        assert_eq!(t[&[0; 4]], eval(&poly, &c));
        assert_eq!(t[&[1, 2, 0, 0]], rat(3, 1));
    }
}
