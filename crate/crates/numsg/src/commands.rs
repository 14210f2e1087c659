use std::collections::BTreeSet;

use numsg_core::catenary::default_window;
use numsg_core::construction::{CheckStatus, RealizationTrace};
use numsg_core::factorization::factorizations_capped;
use numsg_core::oracle::{oracle_betti, oracle_catenary};
use numsg_core::{
    adjoin as core_adjoin, betti_elements, catenary_element, catenary_set, glue as core_glue,
    monoid_catenary, realize as core_realize, verify_trace, BPolicy, Error, NumericalMonoid,
    VerifyBudget,
};
use serde_json::{json, Value};

use crate::output::{join, monoid_json, set_text, Provenance, Report};

/// Upper limit on the factorizations `factorize` will list.
const FACTORIZE_CAP: usize = 1_000_000;

pub struct Failure {
    pub name: &'static str,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            name: e.name(),
            message: e.to_string(),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn field_rows(pairs: &[(&str, String)]) -> (Vec<String>, Vec<Vec<String>>) {
    let header = vec!["field".into(), "value".into()];
    let rows = pairs
        .iter()
        .map(|(k, v)| vec![(*k).to_string(), v.clone()])
        .collect();
    (header, rows)
}

fn text_fields(pairs: &[(&str, String)]) -> Vec<String> {
    let width = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}"))
        .collect()
}

pub fn analyze(raw: &[u64], window: Option<u64>) -> Outcome {
    let s = NumericalMonoid::new(raw)?;
    let apery = s.apery_set(s.multiplicity())?;
    let betti = betti_elements(&s);
    let catenary = monoid_catenary(&s)?;
    let (set, profile) = catenary_set(&s, window)?;
    let pairs = [
        ("monoid", s.to_string()),
        ("generators", join(s.generators())),
        ("frobenius", s.frobenius().to_string()),
        ("genus", s.genus().to_string()),
        ("apery", join(&apery)),
        ("betti", join(&betti)),
        ("catenary", catenary.to_string()),
        ("catenary_set", set_text(&set)),
    ];
    let (header, rows) = field_rows(&pairs);
    Ok(Report {
        command: "analyze",
        text: text_fields(&pairs),
        header,
        rows,
        payload: json!({
            "monoid": monoid_json(&s),
            "genus": s.genus(),
            "apery": { "modulus": s.multiplicity(), "elements": apery },
            "betti": betti,
            "catenary": catenary,
            "catenary_set": set,
        }),
        provenance: Provenance::windowed(json!({ "generators": raw }), profile.window_end)
            .with("stable", json!(profile.stable)),
    })
}

pub fn factorize(raw: &[u64], n: i64) -> Outcome {
    let s = NumericalMonoid::new(raw)?;
    let z = if n < 0 {
        Vec::new()
    } else {
        factorizations_capped(&s, n as u64, FACTORIZE_CAP)?
    };
    let vectors: Vec<Vec<u64>> = z.iter().map(|a| a.coefficients().to_vec()).collect();
    Ok(Report {
        command: "factorize",
        text: z.iter().map(ToString::to_string).collect(),
        header: s.generators().iter().map(ToString::to_string).collect(),
        rows: vectors
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect())
            .collect(),
        payload: json!({
            "monoid": monoid_json(&s),
            "element": n,
            "factorizations": vectors,
        }),
        provenance: Provenance::exact(json!({ "generators": raw, "n": n })),
    })
}

pub fn catenary(raw: &[u64], n: i64, use_oracle: bool) -> Outcome {
    let s = NumericalMonoid::new(raw)?;
    let c = if use_oracle {
        oracle_catenary(&s, n)?
    } else {
        catenary_element(&s, n)?
    };
    Ok(Report {
        command: "catenary",
        text: vec![c.to_string()],
        header: vec!["n".into(), "catenary".into()],
        rows: vec![vec![n.to_string(), c.to_string()]],
        payload: json!({ "monoid": monoid_json(&s), "element": n, "catenary": c }),
        provenance: Provenance::exact(json!({ "generators": raw, "n": n }))
            .with("method", json!(if use_oracle { "oracle" } else { "optimized" })),
    })
}

pub fn betti(raw: &[u64], use_oracle: bool) -> Outcome {
    let s = NumericalMonoid::new(raw)?;
    let bound = s.betti_bound();
    let betti = if use_oracle {
        oracle_betti(&s, bound)?
    } else {
        betti_elements(&s)
    };
    Ok(Report {
        command: "betti",
        text: vec![join(&betti)],
        header: vec!["betti".into()],
        rows: betti.iter().map(|b| vec![b.to_string()]).collect(),
        payload: json!({ "monoid": monoid_json(&s), "betti": betti }),
        provenance: Provenance::exact(json!({ "generators": raw }))
            .with("scan_end", json!(bound))
            .with("method", json!(if use_oracle { "oracle" } else { "optimized" })),
    })
}

pub fn cset(raw: &[u64], window: Option<u64>) -> Outcome {
    let s = NumericalMonoid::new(raw)?;
    let (set, profile) = catenary_set(&s, window)?;
    Ok(Report {
        command: "cset",
        text: vec![set_text(&set)],
        header: vec!["catenary".into()],
        rows: set.iter().map(|c| vec![c.to_string()]).collect(),
        payload: json!({ "monoid": monoid_json(&s), "catenary_set": set }),
        provenance: Provenance::windowed(json!({ "generators": raw }), profile.window_end)
            .with("stable", json!(profile.stable)),
    })
}

pub fn glue(g1: &[u64], d1: u64, g2: &[u64], d2: u64) -> Outcome {
    let s1 = NumericalMonoid::new(g1)?;
    let s2 = NumericalMonoid::new(g2)?;
    let g = core_glue(&s1, d1, &s2, d2)?;
    let pairs = [
        ("gluing", format!("{d1}·{s1} + {d2}·{s2}")),
        ("d", g.spec.d.to_string()),
        ("result", g.result.to_string()),
        ("frobenius", g.result.frobenius().to_string()),
    ];
    let (header, rows) = field_rows(&pairs);
    Ok(Report {
        command: "glue",
        text: text_fields(&pairs),
        header,
        rows,
        payload: json!({
            "s1": monoid_json(&s1),
            "d1": d1,
            "s2": monoid_json(&s2),
            "d2": d2,
            "d": g.spec.d,
            "result": monoid_json(&g.result),
            "proper": g.is_proper(),
        }),
        provenance: Provenance::exact(json!({ "g1": g1, "d1": d1, "g2": g2, "d2": d2 })),
    })
}

pub fn adjoin(raw: &[u64], c: u64, b: u64) -> Outcome {
    let s = NumericalMonoid::new(raw)?;
    let step = core_adjoin(&s, c, b)?;
    let betti = step.betti();
    let pairs = [
        ("base", s.to_string()),
        ("base_catenary", step.base_catenary.to_string()),
        ("result", step.result.to_string()),
        ("frobenius", step.result.frobenius().to_string()),
        ("cb", step.cb().to_string()),
        ("betti", join(&betti)),
        ("catenary", step.catenary().to_string()),
    ];
    let (header, rows) = field_rows(&pairs);
    Ok(Report {
        command: "adjoin",
        text: text_fields(&pairs),
        header,
        rows,
        payload: json!({
            "base": monoid_json(&s),
            "c": c,
            "b": b,
            "base_catenary": step.base_catenary,
            "result": monoid_json(&step.result),
            "cb": step.cb(),
            "betti": betti,
            "catenary": step.catenary(),
        }),
        provenance: Provenance::exact(json!({ "generators": raw, "c": c, "b": b })),
    })
}

/// Rows `(c, b, monoid, claimed set)` in the layout of the step table.
fn trace_rows(trace: &RealizationTrace) -> Vec<(u64, Option<u64>, &NumericalMonoid, &BTreeSet<u64>)> {
    let base_c = *trace.base_set.last().expect("base set is nonempty");
    std::iter::once((base_c, None, &trace.base_monoid, &trace.base_set))
        .chain(
            trace
                .steps
                .iter()
                .map(|s| (s.step.c, Some(s.step.b), &s.step.result, &s.claimed_set)),
        )
        .collect()
}

pub fn realize(target: &[u64], b_list: Option<Vec<u64>>, verify: Option<u64>) -> Outcome {
    let target_set: BTreeSet<u64> = target.iter().copied().collect();
    let policy = match &b_list {
        Some(list) => BPolicy::Explicit(list.clone()),
        None => BPolicy::Smallest,
    };
    let trace = core_realize(&target_set, &policy)?;
    let rows = trace_rows(&trace);

    let mut text = vec!["c, b, monoid, catenary set".to_string()];
    let mut csv_rows = Vec::new();
    let mut json_rows = Vec::new();
    for &(c, b, m, set) in &rows {
        let b_text = b.map_or(String::new(), |b| b.to_string());
        text.push(format!("{c}, {}, {m}, {}", b.map_or("-".into(), |b| b.to_string()), set_text(set)));
        csv_rows.push(vec![c.to_string(), b_text, m.to_string(), set_text(set)]);
        json_rows.push(json!({ "c": c, "b": b, "monoid": monoid_json(m), "catenary_set": set }));
    }

    let mut payload = json!({ "target": target_set, "steps": json_rows });
    if let Some(window) = verify {
        let report = verify_trace(&trace, &VerifyBudget::with_window(window));
        let mut checks = Vec::new();
        for check in &report.checks {
            let status = match check.status {
                CheckStatus::Passed => "passed",
                CheckStatus::Failed => "failed",
                CheckStatus::Skipped => "skipped",
            };
            text.push(format!(
                "verify {}: {} {status}{}",
                check.scope,
                check.check,
                if check.detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", check.detail)
                }
            ));
            checks.push(json!({
                "scope": check.scope,
                "check": check.check,
                "status": status,
                "detail": check.detail,
            }));
        }
        if !report.passed() {
            let failed: Vec<String> = report
                .failures()
                .map(|c| format!("{} {}", c.scope, c.check))
                .collect();
            return Err(Failure {
                name: "VerificationFailed",
                message: failed.join("; "),
            });
        }
        payload["verification"] = Value::Array(checks);
    }

    let mut inputs = json!({ "target": target });
    if let Some(list) = &b_list {
        inputs["b_list"] = json!(list);
    }
    if let Some(window) = verify {
        inputs["verify"] = json!(window);
    }
    Ok(Report {
        command: "realize",
        text,
        header: vec!["c".into(), "b".into(), "monoid".into(), "catenary_set".into()],
        rows: csv_rows,
        payload,
        provenance: Provenance::exact(inputs)
            .with("base_window", json!(default_window(&trace.base_monoid))),
    })
}

pub fn plot_data(raw: &[u64], window: Option<u64>) -> Outcome {
    let s = NumericalMonoid::new(raw)?;
    let (_, profile) = catenary_set(&s, window)?;
    let rows: Vec<Vec<String>> = profile
        .entries
        .iter()
        .map(|&(n, c)| vec![n.to_string(), c.to_string()])
        .collect();
    Ok(Report {
        command: "plot-data",
        text: Vec::new(),
        header: vec!["n".into(), "catenary".into()],
        rows,
        payload: json!({
            "monoid": monoid_json(&s),
            "points": profile.entries.iter().map(|&(n, c)| json!([n, c])).collect::<Vec<_>>(),
        }),
        provenance: Provenance::windowed(json!({ "generators": raw }), profile.window_end)
            .with("stable", json!(profile.stable)),
    })
}
