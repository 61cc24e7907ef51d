use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use trilin_core::algebra::{heisenberg_with_cap, json::to_json, verify_commutator_order, verify_cross_commutators, Mode};
use trilin_core::closed_forms::{quantity, strong_pump, ModelParams, Quantity};
use trilin_core::fock::{self, scaling_chis};
use trilin_core::report::{analytic_report, fmt17, num, MomentReport};
use trilin_core::series::{verify_all, verify_appendix_a as appendix_check, verify_table1 as table_check};

use crate::exit::{fixture_failure, Failure};

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn print_json(v: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).expect("reports serialise");
    write_output(None, &(text + "\n"))
}

fn verdict(passed: bool) -> Result<(), Failure> {
    if passed {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn parse_mode(s: &str) -> Result<Mode, Failure> {
    s.parse().map_err(Failure::Usage)
}

pub fn expand(mode: &str, order: u32, term_cap: usize, out: Option<&Path>) -> Result<(), Failure> {
    let p = heisenberg_with_cap(parse_mode(mode)?, order, term_cap)?;
    write_output(out, &to_json(&p))
}

pub fn verify_appendix_a(mode: &str, fixtures: &Path) -> Result<(), Failure> {
    let modes = if mode == "all" { Mode::ALL.to_vec() } else { vec![parse_mode(mode)?] };
    let mut reports = Vec::new();
    for m in modes {
        reports.push(appendix_check(m, fixtures).map_err(fixture_failure)?);
    }
    let passed = reports.iter().all(|r| r.passed);
    print_json(&json!({ "target": "appendix-a", "passed": passed, "reports": reports }))?;
    verdict(passed)
}

pub fn verify_series(max_order: u32) -> Result<(), Failure> {
    let report = verify_all(max_order)?;
    print_json(&json!({ "target": "series", "passed": report.passed, "report": report }))?;
    verdict(report.passed)
}

pub fn verify_table1() -> Result<(), Failure> {
    let report = table_check();
    print_json(&json!({ "target": "table1", "passed": report.passed, "report": report }))?;
    verdict(report.passed)
}

pub fn verify_commutators(order: u32) -> Result<(), Failure> {
    let mut reports = Vec::new();
    for m in Mode::ALL {
        reports.push(verify_commutator_order(m, order)?);
    }
    reports.extend(verify_cross_commutators(order)?);
    let passed = reports.iter().all(|r| r.passed);
    print_json(&json!({ "target": "commutators", "passed": passed, "reports": reports }))?;
    verdict(passed)
}

pub struct SweepSpec {
    pub chi: f64,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub steps: usize,
    pub quantities: Vec<String>,
    pub strong_pump: bool,
}

fn sweep_csv(spec: &SweepSpec) -> Result<String, Failure> {
    if spec.steps < 2 {
        return Err(Failure::Usage(format!("steps must be at least 2, got {}", spec.steps)));
    }
    if !(spec.alpha_min >= 0.0 && spec.alpha_max >= spec.alpha_min && spec.alpha_max.is_finite()) {
        return Err(Failure::Usage(format!("need 0 <= alpha-min <= alpha-max, got [{}, {}]", spec.alpha_min, spec.alpha_max)));
    }
    let qs: Vec<Quantity> = spec.quantities.iter().map(|s| s.parse().map_err(Failure::Usage)).collect::<Result<_, _>>()?;
    if qs.is_empty() {
        return Err(Failure::Usage("no quantities given".into()));
    }
    ModelParams::new(spec.alpha_min, spec.chi)?;
    if spec.strong_pump {
        let probe = ModelParams::new(1.0, 0.0)?;
        if let Some(q) = qs.iter().find(|q| strong_pump(**q, &probe).is_none()) {
            return Err(Failure::Usage(format!("{q} has no strong-pump form")));
        }
    }

    let mut header = vec!["alpha".to_string()];
    for q in &qs {
        if q.is_real() || spec.strong_pump {
            header.push(q.name().to_string());
        } else {
            header.push(format!("{}_re", q.name()));
            header.push(format!("{}_im", q.name()));
        }
    }
    let step = (spec.alpha_max - spec.alpha_min) / (spec.steps - 1) as f64;
    let rows: Vec<String> = (0..spec.steps)
        .into_par_iter()
        .map(|i| {
            let alpha = if i + 1 == spec.steps { spec.alpha_max } else { spec.alpha_min + step * i as f64 };
            let p = ModelParams::new(alpha, spec.chi).expect("validated range");
            let mut cells = vec![fmt17(alpha)];
            for &q in &qs {
                if spec.strong_pump {
                    cells.push(fmt17(strong_pump(q, &p).expect("validated quantity").value));
                } else {
                    let v = quantity(q, &p).value;
                    cells.push(fmt17(v.re));
                    if !q.is_real() {
                        cells.push(fmt17(v.im));
                    }
                }
            }
            cells.join(",")
        })
        .collect();
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    Ok(out)
}

pub fn sweep(spec: &SweepSpec, out: Option<&Path>) -> Result<(), Failure> {
    write_output(out, &sweep_csv(spec)?)
}

fn errors_json(analytic: &MomentReport, oracle: &MomentReport) -> Value {
    let map: serde_json::Map<String, Value> = Quantity::all()
        .map(|q| (q.name().to_string(), num((analytic.quantity(q) - oracle.quantity(q)).norm())))
        .collect();
    Value::Object(map)
}

fn cell(q: Quantity, r: &MomentReport) -> String {
    let z = r.quantity(q);
    if q.is_real() {
        fmt17(z.re)
    } else {
        let im = fmt17(z.im);
        let sep = if im.starts_with('-') { "" } else { "+" };
        format!("{}{sep}{im}i", fmt17(z.re))
    }
}

fn moments_text(analytic: &MomentReport, oracle: Option<&MomentReport>) -> String {
    let mut s = String::new();
    s.push_str(&format!("alpha           {}\n", fmt17(analytic.alpha)));
    s.push_str(&format!("chi             {}\n", fmt17(analytic.chi)));
    s.push_str(&format!("chi_prime       {}\n", fmt17(analytic.chi_prime)));
    s.push_str(&format!("validity        {}{}\n", fmt17(analytic.validity), if analytic.warning { "  (warning)" } else { "" }));
    s.push_str(&format!("energy_residual {}\n", fmt17(analytic.energy_residual)));
    if let Some(o) = oracle {
        let t = o.truncation.as_ref().expect("oracle reports carry truncation");
        s.push_str(&format!(
            "oracle window   m = {}..{}, tail {}, max sector dim {}\n",
            t.m_min,
            t.m_max,
            fmt17(t.tail_mass),
            t.max_sector_dim
        ));
    }
    s.push('\n');
    for q in Quantity::all() {
        match oracle {
            None => s.push_str(&format!("{:<12} {}\n", q.name(), cell(q, analytic))),
            Some(o) => s.push_str(&format!(
                "{:<12} {:<50} {:<50} {}\n",
                q.name(),
                cell(q, analytic),
                cell(q, o),
                fmt17((analytic.quantity(q) - o.quantity(q)).norm())
            )),
        }
    }
    s
}

pub fn moments(alpha: f64, chi: f64, with_oracle: bool, as_json: bool, tail_tol: f64) -> Result<(), Failure> {
    let params = ModelParams::new(alpha, chi)?;
    let analytic = analytic_report(&params);
    let oracle = if with_oracle { Some(fock::oracle_moments(alpha, chi, tail_tol)?) } else { None };
    if as_json {
        let v = match &oracle {
            None => analytic.to_json(),
            Some(o) => json!({
                "analytic": analytic.to_json(),
                "oracle": o.to_json(),
                "abs_errors": errors_json(&analytic, o),
            }),
        };
        print_json(&v)
    } else {
        if analytic.warning {
            eprintln!("trilin: warning: validity indicator {} exceeds 0.1", fmt17(analytic.validity));
        }
        write_output(None, &moments_text(&analytic, oracle.as_ref()))
    }
}

pub fn compare(base_alpha: f64, chi_primes: &[f64], tail_tol: f64, out: Option<&Path>) -> Result<(), Failure> {
    if !(base_alpha > 0.0) {
        return Err(Failure::Usage(format!("alpha must be positive, got {base_alpha}")));
    }
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for &cp in chi_primes {
        if cp == 0.0 {
            skipped.push(num(cp));
            continue;
        }
        reports.push(fock::compare(cp, &scaling_chis(cp, base_alpha), tail_tol)?);
    }
    let passed = reports.iter().all(|r| r.passed);
    let v = json!({
        "base_alpha": num(base_alpha),
        "skipped_chi_prime": skipped,
        "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        "passed": passed,
    });
    write_output(out, &(serde_json::to_string_pretty(&v).expect("report serialises") + "\n"))?;
    verdict(passed)
}
