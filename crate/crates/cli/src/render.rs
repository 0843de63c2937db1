use std::fmt::Write as _;

use serde_json::{json, Value};

use serre_core::diamond::{d0_factors, delta_of_tau, diamond_set, GaloisParams};
use serre_core::filtration::{example1_filtration, v1_s1_filtrations, FiltrationLayer};
use serre_core::report::CheckRecord;
use serre_core::tuples::tuple_to_string;
use serre_core::weight::Weight;
use serre_core::{Error, Params};

use crate::{usage, Format, Outcome, RunConfig, Suite};

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn record_json(r: &CheckRecord) -> Value {
    json!({
        "paper_anchor": r.anchor,
        "instance": r.instance,
        "expected": r.expected,
        "got": r.got,
        "status": if r.pass { "pass" } else { "fail" },
    })
}

pub fn report(cfg: &RunConfig, suite: Suite, records: &[CheckRecord]) -> String {
    let passed = records.iter().filter(|r| r.pass).count();
    let name = clap::ValueEnum::to_possible_value(&suite).map(|v| v.get_name().to_string()).unwrap_or_default();
    match cfg.format {
        Format::Json => to_json(&json!({
            "suite": name,
            "passed": passed,
            "failed": records.len() - passed,
            "status": if passed == records.len() { "pass" } else { "fail" },
            "records": records.iter().map(record_json).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            for r in records.iter().filter(|r| !r.pass) {
                let _ = writeln!(out, "FAIL {} | {}\n     expected {}\n     got      {}", r.anchor, r.instance, r.expected, r.got);
            }
            let _ = writeln!(out, "{name}: {passed}/{} checks passed", records.len());
            out
        }
    }
}

/// One row per Diamond weight, in `S_λ` order.
fn diamond_rows(params: &Params, rho: &GaloisParams) -> Result<Vec<(String, usize, String, Weight, Weight)>, Error> {
    let mut rows = Vec::new();
    for d in diamond_set(params, rho)? {
        let own = d0_factors(params, rho, &d)?
            .into_iter()
            .find(|x| x.weight == d.weight)
            .ok_or_else(|| Error::Invariant(format!("{} is not in its own block", d.weight)))?;
        let delta = delta_of_tau(params, rho, &own)?;
        rows.push((d.s.to_string(), d.ell, tuple_to_string(&d.lambda), d.weight.clone(), delta.weight));
    }
    Ok(rows)
}

pub fn diamond(cfg: &RunConfig) -> Result<Outcome, Error> {
    let params = cfg.params()?;
    let mut text = String::new();
    let mut all = Vec::new();
    for rho in cfg.rhos(&params)? {
        let rows = diamond_rows(&params, &rho)?;
        let _ = writeln!(text, "D(ρ) for p={} {rho}: {} weights", params.p(), rows.len());
        for (s, ell, lambda, w, delta) in &rows {
            let _ = writeln!(text, "  S={s:<10} ℓ={ell}  λ={lambda:<28} σ={w:<24} δ(σ)={delta}");
        }
        all.push(json!({
            "instance": format!("p={} {rho}", params.p()),
            "weights": rows.iter().map(|(s, ell, lambda, w, delta)| json!({
                "s": s, "ell": ell, "lambda": lambda, "weight": w.to_string(), "delta": delta.to_string(),
            })).collect::<Vec<_>>(),
        }));
    }
    let body = match cfg.format {
        Format::Text => text,
        Format::Json => to_json(&json!({ "command": "diamond", "results": all })),
    };
    Ok(Outcome { body, pass: true })
}

pub fn d0(cfg: &RunConfig) -> Result<Outcome, Error> {
    let params = cfg.params()?;
    let f = params.f();
    let mut text = String::new();
    let mut all = Vec::new();
    let mut pass = true;
    for rho in cfg.rhos(&params)? {
        let mut seen: Vec<Weight> = Vec::new();
        let mut blocks = Vec::new();
        let _ = writeln!(text, "D_0(ρ) for p={} {rho}", params.p());
        for d in diamond_set(&params, &rho)? {
            let factors = d0_factors(&params, &rho, &d)?;
            let _ = writeln!(text, "  block σ={}", d.weight);
            let mut cols: Vec<Vec<String>> = vec![Vec::new(); f + 1];
            let mut rows = Vec::new();
            for x in &factors {
                let depth = serre_core::tuples::s_of_mu(&x.mu).len();
                let delta = if x.lifts { Some(delta_of_tau(&params, &rho, x)?.weight) } else { None };
                let mark = match &delta {
                    Some(w) => format!("{} * δ={w}", x.weight),
                    None => x.weight.to_string(),
                };
                cols[depth].push(mark);
                seen.push(x.weight.clone());
                rows.push(json!({
                    "mu": tuple_to_string(&x.mu),
                    "weight": x.weight.to_string(),
                    "column": depth,
                    "lifts": x.lifts,
                    "delta": delta.map(|w| w.to_string()),
                }));
            }
            for (c, col) in cols.iter().enumerate() {
                let _ = writeln!(text, "    [{c}] {}", col.join(" ⊕ "));
            }
            blocks.push(json!({ "sigma": d.weight.to_string(), "factors": rows }));
        }
        let n = seen.len();
        seen.sort();
        seen.dedup();
        let mult_one = seen.len() == n;
        pass &= mult_one;
        let _ = writeln!(text, "  multiplicity one: {}", if mult_one { "yes" } else { "no" });
        all.push(json!({
            "instance": format!("p={} {rho}", params.p()),
            "multiplicity_one": mult_one,
            "blocks": blocks,
        }));
    }
    let body = match cfg.format {
        Format::Text => text,
        Format::Json => to_json(&json!({ "command": "d0", "results": all })),
    };
    Ok(Outcome { body, pass })
}

/// Columns left to right, each listed top to bottom, joined by a dash on the first row.
pub fn layers_text(layers: &FiltrationLayer) -> String {
    let cols: Vec<Vec<String>> =
        layers.layers.iter().map(|c| c.iter().map(|w| w.to_string()).collect()).collect();
    let width: Vec<usize> = cols.iter().map(|c| c.iter().map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let height = cols.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in 0..height {
        let mut line = String::new();
        for (k, col) in cols.iter().enumerate() {
            if k > 0 {
                line.push_str(if row == 0 { " — " } else { "   " });
            }
            let cell = col.get(row).map(String::as_str).unwrap_or("");
            let _ = write!(line, "{cell:<w$}", w = width[k]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn layers_json(layers: &FiltrationLayer) -> Value {
    json!(layers.layers.iter().map(|c| c.iter().map(|w| w.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub fn example1(cfg: &RunConfig) -> Result<Outcome, Error> {
    let params = cfg.params()?;
    let r = cfg.digits()?.ok_or_else(|| usage("--r must give the digits of σ"))?;
    let r: Vec<u32> = r.iter().map(|&x| u32::try_from(x).map_err(|_| usage("negative digit"))).collect::<Result<_, _>>()?;
    let sigma = Weight::new(&params, r, cfg.twist as i64)?;
    let j = cfg.j.ok_or_else(|| usage("--j is required"))?;
    let ex = example1_filtration(&params, &sigma, j)?;
    let body = match cfg.format {
        Format::Text => format!(
            "σ={} τ={} j={j} ω={}\n{}",
            ex.sigma,
            ex.tau,
            ex.omega,
            layers_text(&ex.layers)
        ),
        Format::Json => to_json(&json!({
            "command": "filtration",
            "which": "example1",
            "sigma": ex.sigma.to_string(),
            "tau": ex.tau.to_string(),
            "j": j,
            "omega": ex.omega.to_string(),
            "layers": layers_json(&ex.layers),
        })),
    };
    Ok(Outcome { body, pass: true })
}

pub fn v1_s1(cfg: &RunConfig, s1: bool) -> Result<Outcome, Error> {
    let params = cfg.params()?;
    let r = cfg.digits()?.ok_or_else(|| usage("--r must give (r_0, r_1)"))?;
    if cfg.case == Some(crate::Case::Reducible) {
        return Err(usage("the V_1 and S_1 displays need ρ irreducible"));
    }
    let rho = GaloisParams::new(false, r, cfg.twist);
    let v = v1_s1_filtrations(&params, &rho)?;
    let layers = if s1 { &v.s1 } else { &v.v1 };
    let name = if s1 { "s1" } else { "v1" };
    let body = match cfg.format {
        Format::Text => format!("{name} for p={} {rho}\n{}", params.p(), layers_text(layers)),
        Format::Json => to_json(&json!({
            "command": "filtration",
            "which": name,
            "instance": format!("p={} {rho}", params.p()),
            "tau": v.tau.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "layers": layers_json(layers),
        })),
    };
    Ok(Outcome { body, pass: true })
}
