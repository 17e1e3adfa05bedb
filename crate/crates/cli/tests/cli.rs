//! End-to-end tests of the binary: exit codes, the golden-table
//! regression (including the rule-inversion mutation), output formats,
//! and validation of the JSON output against the shipped schema.

use std::collections::HashMap;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symspace"))
        .args(args)
        .env_remove("SYMSPACE_MUTATE_RULE")
        .output()
        .expect("binary runs")
}

fn run_mutated(args: &[&str], family: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symspace"))
        .args(args)
        .env("SYMSPACE_MUTATE_RULE", family)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

#[test]
fn classify_basics() {
    let out = run(&["classify", "DIII:6"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["verdict"], "OR");
    assert_eq!(v["dimension"], 30);
    assert_eq!(v["euler_characteristic"], 32);

    // complex-type space su(5): even dimension, even diagram flip
    let out = run(&["classify", "TypeIV:A,4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["verdict"], "OP");
}

#[test]
fn exit_codes() {
    // parse failure: unknown family
    let out = run(&["classify", "XYZ:1"]);
    assert_eq!(out.status.code(), Some(2));
    // parse failure: malformed parameter
    let out = run(&["classify", "AIII:2"]);
    assert_eq!(out.status.code(), Some(2));
    // invalid parameters
    let out = run(&["classify", "AIII:0,2"]);
    assert_eq!(out.status.code(), Some(3));
    // unsupported space payload (stretch family)
    let out = run(&["report", "EIII", "--pontrjagin", "1,1,1,1,1,1,1,1"]);
    assert_eq!(out.status.code(), Some(4));
    // the closed-form signature is still printed on the way out
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["signature_closed_form"], "3");
}

#[test]
fn golden_table_passes_and_mutations_fail() {
    let out = run(&["table1", "--golden"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    // 12 family blocks in the stream
    let families: std::collections::BTreeSet<String> = stdout(&out)
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            v["family"].as_str().unwrap().to_string()
        })
        .collect();
    assert_eq!(families.len(), 12);

    // inverting any one family rule must be caught
    for fam in [
        "AI", "AII", "AIII", "BDI", "DIII", "CI", "CII", "EIII", "EVII", "FII", "G", "TypeIV",
    ] {
        let out = run_mutated(&["table1", "--golden"], fam);
        assert_eq!(out.status.code(), Some(1), "mutated {fam} not caught");
    }
}

#[test]
fn report_g2so4() {
    let out = run(&[
        "report", "G:", "--signature", "--poincare", "--pontrjagin", "2",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["signature_lgenus"].as_i64().unwrap().abs(), 1);
    assert_eq!(v["poincare"][4], 1);
    assert_eq!(v["poincare"][8], 1);
    assert_ne!(v["pontrjagin_numbers"]["2"], "0");
}

#[test]
fn degreeset_examples() {
    let out = run(&["degreeset", "3", "EVII"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["signs"], "Both");
    assert_eq!(v["degrees"], serde_json::json!([0, 3, -3]));

    let out = run(&["degreeset", "2", "G"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["signs"], "OneIndeterminate");
    assert_eq!(v["indeterminate_magnitude"], 2);

    let out = run(&["degreeset", "0", "AI:5"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["signs"], "ZeroOnly");
    assert_eq!(v["degrees"], serde_json::json!([0]));
}

#[test]
fn csv_column_order_is_fixed() {
    let out = run(&["classify", "AIII:2,2", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "space,family,verdict,justification,dimension,euler_characteristic,complex_dimension,\
         signature_lgenus,signature_closed_form,poincare,pontrjagin_numbers"
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("AIII:2,2,AIII,OP,NonzeroSignature,8,6,4"), "{row}");
}

#[test]
fn table1_is_sorted_deterministically() {
    let a = stdout(&run(&["table1"]));
    let b = stdout(&run(&["table1"]));
    assert_eq!(a, b);
    let keys: Vec<(String, Vec<u64>, String)> = a
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            (
                v["family"].as_str().unwrap().to_string(),
                v["params"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|p| p.as_u64().unwrap())
                    .collect(),
                v["space"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

// ----------------------------------------------------------------------
// JSON schema validation (a minimal draft-07 subset validator)
// ----------------------------------------------------------------------

fn validate_against_schema(value: &serde_json::Value, schema: &serde_json::Value) -> Vec<String> {
    let mut errors = Vec::new();
    validate_inner(value, schema, "$", &mut errors);
    errors
}

fn type_matches(value: &serde_json::Value, ty: &str) -> bool {
    match ty {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "integer" => value.is_i64() || value.is_u64(),
        "number" => value.is_number(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        _ => false,
    }
}

fn validate_inner(
    value: &serde_json::Value,
    schema: &serde_json::Value,
    path: &str,
    errors: &mut Vec<String>,
) {
    if let Some(ty) = schema.get("type") {
        let ok = match ty {
            serde_json::Value::String(t) => type_matches(value, t),
            serde_json::Value::Array(ts) => ts
                .iter()
                .any(|t| type_matches(value, t.as_str().unwrap_or(""))),
            _ => true,
        };
        if !ok {
            errors.push(format!("{path}: type mismatch ({ty})"));
            return;
        }
    }
    if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
        for key in required {
            let key = key.as_str().unwrap();
            if value.get(key).is_none() {
                errors.push(format!("{path}: missing required key {key}"));
            }
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(|e| e.as_array()) {
        if !allowed.contains(value) {
            errors.push(format!("{path}: {value} not in enum"));
        }
    }
    if let Some(min) = schema.get("minimum").and_then(|m| m.as_i64()) {
        if let Some(v) = value.as_i64() {
            if v < min {
                errors.push(format!("{path}: {v} below minimum {min}"));
            }
        }
    }
    if let Some(pattern) = schema.get("pattern").and_then(|p| p.as_str()) {
        // the shipped schema uses one pattern: an optionally-signed
        // integer or num/den rational
        if let Some(s) = value.as_str() {
            let ok = {
                let body = s.strip_prefix('-').unwrap_or(s);
                let mut parts = body.splitn(2, '/');
                let num_ok = parts
                    .next()
                    .is_some_and(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_digit()));
                let den_ok = match parts.next() {
                    None => true,
                    Some(d) => !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()),
                };
                num_ok && den_ok
            };
            if !ok {
                errors.push(format!("{path}: '{s}' does not match {pattern}"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(|p| p.as_object()) {
        if let Some(obj) = value.as_object() {
            for (key, sub) in props {
                if let Some(v) = obj.get(key) {
                    validate_inner(v, sub, &format!("{path}.{key}"), errors);
                }
            }
        }
    }
    if let Some(additional) = schema.get("additionalProperties") {
        if additional.is_object() {
            if let Some(obj) = value.as_object() {
                let declared: HashMap<&String, ()> = schema
                    .get("properties")
                    .and_then(|p| p.as_object())
                    .map(|p| p.keys().map(|k| (k, ())).collect())
                    .unwrap_or_default();
                for (key, v) in obj {
                    if !declared.contains_key(key) {
                        validate_inner(v, additional, &format!("{path}.{key}"), errors);
                    }
                }
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(arr) = value.as_array() {
            for (i, v) in arr.iter().enumerate() {
                validate_inner(v, items, &format!("{path}[{i}]"), errors);
            }
        }
    }
}

#[test]
fn json_outputs_validate_against_shipped_schema() {
    let schema: serde_json::Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let mut samples = Vec::new();
    for args in [
        vec!["classify", "DIII:6"],
        vec!["classify", "TypeIV:D,4"],
        vec!["report", "G", "--signature", "--poincare", "--pontrjagin", "2"],
        vec!["report", "AIII:2,2", "--signature", "--poincare"],
        vec!["report", "EIII"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}");
        samples.push(stdout(&out).trim().to_string());
    }
    for line in stdout(&run(&["table1"])).lines().take(20) {
        samples.push(line.to_string());
    }
    for sample in samples {
        let value: serde_json::Value = serde_json::from_str(&sample).unwrap();
        let errors = validate_against_schema(&value, &schema);
        assert!(errors.is_empty(), "{sample}\n{errors:?}");
    }
}
