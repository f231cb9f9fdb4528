//! Human-readable rendering. Reads nothing but the report JSON, so the text
//! of a saved report can be regenerated from the file.

use std::fmt::Write;

use serde_json::Value;

fn s(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn qualifier(q: &Value) -> String {
    match (q["kind"].as_str(), q.get("window"), q.get("excluded")) {
        (Some(kind), Some(w), _) => format!("{kind} (window {w})"),
        (Some(kind), _, Some(e)) => format!("{kind} ({e} excluded)"),
        (Some(kind), _, _) => kind.to_string(),
        _ => "-".into(),
    }
}

fn ideal(out: &mut String, indent: &str, v: &Value) {
    let _ = writeln!(out, "{indent}method: {}", s(&v["methodDetail"]));
    let _ = writeln!(out, "{indent}zero set: {} [{}]", s(&v["zeroSet"]["display"]), s(&v["zeroSet"]["kind"]));
    let _ = writeln!(out, "{indent}proper: {}", qualifier(&v["properness"]));
    let _ = writeln!(out, "{indent}invariant: {}", qualifier(&v["verification"]));
}

fn verdict(out: &mut String, name: &str, v: &Value) {
    let status = s(&v["status"]);
    let detail = if let Some(c) = v.get("certificate") {
        format!("{} (checked below {}, period {} from {})", s(&c["description"]), c["checkedBelow"], c["period"], c["tailStart"])
    } else if let Some(w) = v.get("witness") {
        s(&w["description"])
    } else {
        s(&v["reason"])
    };
    let _ = writeln!(out, "  {name}: {status}: {detail}");
}

/// Renders a report given as JSON.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    let tool = &report["tool"];
    let _ = writeln!(out, "{} {} report (version {})", s(&tool["name"]), s(&tool["version"]), report["reportVersion"]);
    if let Some(p) = report.get("parameters") {
        let _ = writeln!(
            out,
            "parameters: window {}, max power {}, edge budget {}, p {}, spectral start {} maxN {} epsilon {}",
            p["window"], p["maxPower"], p["edgeBudget"], p["p"], p["spectral"]["start"], p["spectral"]["maxN"], p["spectral"]["epsilon"]
        );
    }
    if let Some(op) = report.get("operator") {
        let _ = writeln!(out, "operator: {}", s(&op["kind"]));
    }

    if let Some(c) = report.get("classification") {
        let _ = writeln!(out, "\nclassification");
        verdict(&mut out, "lattice homomorphism", &c["latticeHomomorphism"]);
        verdict(&mut out, "injective homomorphism", &c["injectiveHomomorphism"]);
        verdict(&mut out, "weighted permutation", &c["weightedPermutation"]);
        verdict(&mut out, "interval preserving", &c["intervalPreserving"]);
    }
    if let Some(Value::Array(list)) = report.get("ideals") {
        let _ = writeln!(out, "\nideals");
        for entry in list {
            match entry.get("ideal") {
                Some(i) => {
                    let _ = writeln!(out, "  {}: {}", s(&entry["constructor"]), s(&entry["status"]));
                    ideal(&mut out, "    ", i);
                }
                None => {
                    let _ = writeln!(out, "  {}: {}: {}", s(&entry["constructor"]), s(&entry["status"]), s(&entry["reason"]));
                }
            }
        }
    }
    if let Some(r) = report.get("irreducibility") {
        let _ = writeln!(out, "\nirreducibility: {}", s(&r["verdict"]));
        if let Some(c) = r.get("certificate") {
            let mut line = format!("  certificate: {}", s(&c["tag"]));
            if let Some(w) = c.get("window") {
                let _ = write!(line, " (window {w}, max power {}, positive offsets {})", c["maxPower"], c["positiveOffsets"]);
            }
            let _ = writeln!(out, "{line}");
        }
        if let Some(i) = r.get("ideal") {
            ideal(&mut out, "  ", i);
        }
        if let Some(w) = r.get("window") {
            let _ = writeln!(out, "  undecided with window {w}, max power {}", r["maxPower"]);
        }
        if let Some(reason) = r.get("reason") {
            let _ = writeln!(out, "  {}", s(reason));
        }
    }
    if let Some(sp) = report.get("spectral") {
        let _ = writeln!(out, "\nspectral: {}", s(&sp["status"]));
        if let Some(reason) = sp.get("reason") {
            let _ = writeln!(out, "  {}", s(reason));
        }
        if let Some(Value::Array(samples)) = sp.get("samples") {
            for sample in samples {
                let _ = writeln!(out, "  n = {:>8}  {}", sample["n"].as_u64().unwrap_or_default(), sample["value"]);
            }
        }
        if let Some(last) = sp.get("last") {
            let _ = writeln!(out, "  last: n = {}, {}", last["n"], last["value"]);
        }
        if let Some(f) = sp.get("finding") {
            let mut line = format!("  finding: {}", s(&f["tag"]));
            for key in ["lowerBoundSeen", "fittedLimit", "slope", "finalValue"] {
                if let Some(v) = f.get(key) {
                    let _ = write!(line, ", {key} {v}");
                }
            }
            let _ = writeln!(out, "{line}");
        }
    }
    if let Some(o) = report.get("oracle") {
        let _ = writeln!(out, "\noracle: {}x{} matrix", o["size"], o["size"]);
        let _ = writeln!(out, "  strongly connected: {}", o["stronglyConnected"]);
        let _ = writeln!(out, "  irreducible: {}", o["irreducible"]);
        if let Some(Value::Array(sets)) = o.get("invariantZeroSets") {
            let _ = writeln!(out, "  invariant zero sets ({}):", sets.len());
            for set in sets {
                let _ = writeln!(out, "    {set}");
            }
        }
    }
    if let Some(Value::Array(d)) = report.get("diagnostics") {
        if !d.is_empty() {
            let _ = writeln!(out, "\ndiagnostics");
            for item in d {
                let _ = writeln!(out, "  [{}] {}: {}", s(&item["section"]), s(&item["kind"]), s(&item["message"]));
            }
        }
    }
    out
}
