//! Piecewise value tables with branch tags.

use crate::checks::grid;
use crate::config::{Format, RunConfig};
use g2_closed::{ds_closed, f_star, gauss_closed, kappa_closed};
use g2_group::support_conditions;
use g2_padic::shell_integral_closed;
use g2_symbolic::CoefExt;
use serde::Serialize;
use std::io::Write;

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub table: &'static str,
    pub instance: String,
    pub branch: String,
    pub value: String,
}

fn ds_branch(n: i64, m: i64, toral: bool) -> &'static str {
    match () {
        _ if !toral || m < n || m > 3 * n => "zero",
        _ if m == 2 * n => "m=2n",
        _ if m < 2 * n => "m<2n",
        _ => "m>2n",
    }
}

pub fn rows(cfg: &RunConfig) -> Vec<Row> {
    let mut out = Vec::new();
    let variant = cfg.variant();
    for e in cfg.nonsplit() {
        for g in grid(cfg, &[1]) {
            let inst = format!("{} p={} n={} m={} d={}", e.etype, e.p, g.n, g.m, g.d);
            let f = f_star(&e, &g, variant).expect("validated algebra");
            out.push(Row { table: "F*", instance: inst.clone(), branch: f.tag.to_string(), value: f.value.to_text() });
            if support_conditions(&e, &g) {
                let (branch, value) = match gauss_closed(&e, &g, variant) {
                    Ok(b) => (b.tag.to_string(), b.value.to_text()),
                    Err(err) => ("none".to_string(), err.to_string()),
                };
                out.push(Row { table: "GS", instance: inst.clone(), branch, value });
            }
            let toral = g.d_branch(e.p).is_none();
            let ds = ds_closed(&e, &g).expect("validated algebra");
            out.push(Row { table: "D_s", instance: inst, branch: ds_branch(g.n, g.m, toral).into(), value: ds.to_text() });
        }
    }
    if cfg.split {
        for n1 in 0..=3 {
            for n2 in 0..=3 {
                for n3 in 0..=(n1 + n2).min(3) {
                    let v = kappa_closed(n1, n2, n3).expect("n1+n2 ≥ n3");
                    out.push(Row { table: "kappa", instance: format!("({n1},{n2},{n3})"), branch: "closed".into(), value: v.to_text() });
                }
            }
        }
        for j in -2..=2 {
            let branch = match j {
                j if j > 1 => "j>1",
                1 => "j=1",
                _ => "j<=0",
            };
            out.push(Row { table: "shell", instance: format!("j={j}"), branch: branch.into(), value: shell_integral_closed(j).to_text() });
        }
    }
    out
}

pub fn write(rows: &[Row], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()
        }
    }
}
