use std::fs;
use std::path::Path;
use std::process::ExitCode;

use serde_json::{json, Map, Value};
use tropical::clifford::{multiplication_table, tensor_iso_check};
use tropical::dequant::{dequant_add, DequantScalar};
use tropical::exterior::{circuits_from_wedge, vanishing_locus_member};
use tropical::hypersurface::{bend_points, hypersurface_cells};
use tropical::ideal::{hilbert_function, IdealTruncation};
use tropical::json as wire;
use tropical::{Error, TropScalar, TropVector, Valuation};

use crate::{Cli, CliffordOp, Command, ExteriorOp, MatroidOp, TropicalizeArgs};

type Outcome = std::result::Result<Value, Failure>;

/// A failure reported as `{"error": kind, "detail": ...}` with exit code 1.
struct Failure {
    kind: &'static str,
    detail: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { kind: e.kind(), detail: e.to_string() }
    }
}

pub fn main(cli: Cli) -> ExitCode {
    let (body, code) = match dispatch(cli.command) {
        Ok(v) => (v, ExitCode::SUCCESS),
        Err(f) => (json!({"error": f.kind, "detail": f.detail}), ExitCode::from(1)),
    };
    let text = serde_json::to_string_pretty(&body).expect("values serialize") + "\n";
    match cli.output {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                eprintln!("trop: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    code
}

fn read_json(path: &Path) -> std::result::Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure { kind: "Io", detail: format!("{}: {e}", path.display()) })?;
    serde_json::from_str(&text).map_err(|e| Failure { kind: "Parse", detail: format!("{}: {e}", path.display()) })
}

fn parse_point(s: &str) -> std::result::Result<Vec<TropScalar>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(s.split(',').map(|p| p.trim().parse()).collect::<tropical::Result<Vec<_>>>()?)
}

fn parse_valuation(s: &str) -> std::result::Result<Valuation, Failure> {
    Ok(s.parse::<Valuation>()?)
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Eval { poly, point } => {
            let f = wire::poly_from_json(&read_json(&poly)?)?;
            let x = parse_point(&point)?;
            Ok(json!({
                "value": wire::scalar_to_json(&f.evaluate(&x)?),
                "vanishes": f.tropically_vanishes(&x)?,
            }))
        }
        Command::Bend { poly, point } => {
            let f = wire::poly_from_json(&read_json(&poly)?)?;
            let relations: Vec<Value> = f
                .bend_relations()
                .pairs
                .iter()
                .map(|(l, r)| json!({"lhs": wire::poly_to_json(l), "rhs": wire::poly_to_json(r)}))
                .collect();
            let mut out = json!({ "relations": relations });
            if let Some(p) = point {
                out["satisfied"] = json!(f.satisfies_bend_congruence(&parse_point(&p)?)?);
            }
            Ok(out)
        }
        Command::Hypersurface { poly } => {
            let f = wire::poly_from_json(&read_json(&poly)?)?;
            let cells = hypersurface_cells(&f)?;
            let mut out = json!({
                "count": cells.len(),
                "cells": cells.iter().map(wire::cell_to_json).collect::<Vec<_>>(),
            });
            if f.nvars() == 1 {
                out["bend_points"] = Value::Array(bend_points(&f)?.iter().map(wire::rational_to_json).collect());
            }
            Ok(out)
        }
        Command::Tropicalize(args) => tropicalize(args),
        Command::Matroid { op } => matroid(op),
        Command::Exterior { op } => exterior(op),
        Command::Clifford { op } => clifford(op),
        Command::Dequantize { a, b, ell } => {
            let wrap = |v: f64| {
                DequantScalar::new(v).ok_or(Failure { kind: "BadInput", detail: format!("{v} is not a real number or -inf") })
            };
            let v = dequant_add(wrap(a)?, wrap(b)?, ell)?;
            Ok(json!({"value": v.value(), "max": a.max(b)}))
        }
        Command::Valuate { valuation, value } => {
            let v = parse_valuation(&valuation)?;
            let a = if value.trim_start().starts_with('{') {
                let parsed: Value = serde_json::from_str(&value)
                    .map_err(|e| Failure { kind: "Parse", detail: e.to_string() })?;
                wire::field_elem_from_json(&parsed)?
            } else {
                wire::field_elem_from_json(&Value::String(value))?
            };
            Ok(json!({"value": wire::scalar_to_json(&v.valuate(&a)?)}))
        }
    }
}

fn tropicalize(args: TropicalizeArgs) -> Outcome {
    let (nvars, gens) = wire::generators_from_json(&read_json(&args.gens)?)?;
    let v = parse_valuation(&args.valuation)?;
    let t = IdealTruncation::new(gens.clone(), nvars, v.clone(), args.degree, args.homogeneous)?;
    let hilbert: Vec<Value> = hilbert_function(&gens, nvars, &v, args.degree, args.homogeneous)?
        .iter()
        .map(|h| json!({"degree": h.degree, "rank": h.rank, "quotient": h.quotient}))
        .collect();
    let mut out = json!({
        "monomials": t.monomials,
        "matroid": wire::matroid_to_json(&t.matroid),
        "hilbert": hilbert,
    });
    if let Some(path) = args.member {
        let f = wire::poly_from_json(&read_json(&path)?)?;
        out["member"] = json!(t.member(&f)?);
    }
    if args.trials > 0 {
        let report = t.check_elimination_axiom(args.trials, args.seed);
        out["elimination"] = json!({
            "trials": report.trials,
            "successes": report.successes,
            "vacuous": report.vacuous,
            "failures": report.failures,
            "seed": args.seed,
        });
    }
    Ok(out)
}

fn keyed_vectors(items: impl IntoIterator<Item = (tropical::Subset, TropVector)>) -> Value {
    let mut map = Map::new();
    for (s, v) in items {
        map.insert(s.to_string(), wire::vector_to_json(&v));
    }
    Value::Object(map)
}

fn vector_arg(s: &str) -> std::result::Result<TropVector, Failure> {
    Ok(TropVector(parse_point(s)?))
}

fn matroid(op: MatroidOp) -> Outcome {
    let load = |p: &Path| -> std::result::Result<_, Failure> { Ok(wire::matroid_from_json(&read_json(p)?)?) };
    match op {
        MatroidOp::Check { matroid } => {
            let m = load(&matroid)?;
            Ok(match m.check_vm_axiom() {
                Ok(()) => json!({"vm": true}),
                Err(v) => json!({"vm": false, "violation": v.to_string()}),
            })
        }
        MatroidOp::Circuits { matroid } => Ok(json!({"circuits": keyed_vectors(load(&matroid)?.circuits())})),
        MatroidOp::Cocircuits { matroid } => Ok(json!({"cocircuits": keyed_vectors(load(&matroid)?.cocircuits())})),
        MatroidOp::Dual { matroid } => Ok(wire::matroid_to_json(&load(&matroid)?.dual())),
        MatroidOp::Member { matroid, point } => {
            let m = load(&matroid)?;
            Ok(json!({"member": m.linear_space_member(&vector_arg(&point)?)?}))
        }
        MatroidOp::Eliminate { matroid, f, g, beta } => {
            let m = load(&matroid)?;
            if beta == 0 {
                return Err(Failure { kind: "IndexOutOfRange", detail: "beta is 1-based".into() });
            }
            let h = m.eliminate(&vector_arg(&f)?, &vector_arg(&g)?, beta - 1)?;
            Ok(json!({"h": wire::vector_to_json(&h)}))
        }
    }
}

fn exterior(op: ExteriorOp) -> Outcome {
    let load = |p: &Path| -> std::result::Result<_, Failure> { Ok(wire::ext_from_json(&read_json(p)?)?) };
    match op {
        ExteriorOp::Wedge { a, b } => Ok(wire::ext_to_json(&load(&a)?.wedge(&load(&b)?)?)),
        ExteriorOp::Circuits { p } => Ok(json!({"circuits": keyed_vectors(circuits_from_wedge(&load(&p)?)?)})),
        ExteriorOp::Dual { p } => Ok(wire::ext_to_json(&load(&p)?.hodge_dual())),
        ExteriorOp::Member { p, point } => {
            Ok(json!({"member": vanishing_locus_member(&load(&p)?, &vector_arg(&point)?)?}))
        }
    }
}

fn clifford(op: CliffordOp) -> Outcome {
    match op {
        CliffordOp::Table { n } => {
            let table: Vec<Value> = multiplication_table(n)?
                .iter()
                .map(|(s, t, u)| json!({"left": s.to_string(), "right": t.to_string(), "product": u.to_string()}))
                .collect();
            Ok(json!({"n": n, "coefficient": "0", "table": table}))
        }
        CliffordOp::TensorCheck { m, n } => {
            let r = tensor_iso_check(m, n)?;
            Ok(json!({"holds": r.holds, "products_checked": r.products_checked}))
        }
    }
}
