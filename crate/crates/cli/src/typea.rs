//! `arcs` and `motzkin`.

use anyhow::{bail, Context, Result};
use cambrian_core::coxeter::{Coxeter, TypeTag};
use cambrian_core::typea::{
    delta, maximal_diagrams, motzkin_paths, motzkin_paths_no_low_peaks, psi_inverse, sortable_arcs, Arc,
    ArcDiagram, MotzkinPath, NuMap,
};
use cambrian_core::weak::parse_permutation;
use cambrian_core::lattice::FacetPolynomial;
use serde_json::{json, Value};

use crate::args::{ArcsArgs, MotzkinArgs};
use crate::common::coxeter_element;
use crate::output::{Output, Table};

fn arc_json(a: &Arc) -> Value {
    json!({"left": a.left, "right": a.right, "above": a.above_points()})
}

fn diagram_json(d: &ArcDiagram) -> Value {
    json!({"n": d.n, "arcs": d.arcs.iter().map(arc_json).collect::<Vec<_>>()})
}

fn diagram_string(d: &ArcDiagram) -> String {
    d.arcs.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

/// `arcs`: `Δ(w)` for a permutation, or the sortable arcs and maximal
/// diagrams of a Coxeter element of `A_n`.
pub fn arcs(args: &ArcsArgs) -> Result<Output> {
    if let Some(p) = &args.perm {
        let perm = parse_permutation(p).with_context(|| format!("--perm {p}"))?;
        let d = delta(&perm);
        let mut table = Table::new(&["left", "right", "above"]);
        for a in &d.arcs {
            let above: Vec<String> = a.above_points().iter().map(|x| x.to_string()).collect();
            table.push(vec![a.left.to_string(), a.right.to_string(), above.join(" ")]);
        }
        return Ok(Output::json(diagram_json(&d)).with_table(table));
    }
    let n = args.n.context("give --perm, or --n with --coxeter or --bipartite")?;
    if n == 0 {
        bail!("--n must be at least 1");
    }
    let cox = Coxeter::new(TypeTag::A(n))?;
    let c = coxeter_element(&cox, args.coxeter.as_deref(), args.bipartite)?;
    let nu = NuMap::of(&c);
    let arcs = sortable_arcs(&nu);
    let mads = maximal_diagrams(&nu)?;
    let poly = FacetPolynomial::from_degrees(mads.iter().map(|d| d.len()));
    let mut table = Table::new(&["diagram", "arcs"]);
    for d in &mads {
        table.push(vec![diagram_string(d), d.len().to_string()]);
    }
    let mut out = json!({
        "n": n,
        "coxeter": c.label_string(cox.diagram()),
        "nu": nu.label(),
        "sortable_arcs": arcs.len(),
        "maximal_diagrams": mads.len(),
        "polynomial": poly.coeffs,
    });
    if args.mad {
        out["diagrams"] = json!(mads.iter().map(diagram_json).collect::<Vec<_>>());
    }
    Ok(Output::json(out).with_table(table))
}

/// `motzkin`: counts, listings, or `Ψ⁻¹` of one path.
pub fn motzkin(args: &MotzkinArgs) -> Result<Output> {
    if let Some(s) = &args.psi_inverse {
        let path: MotzkinPath = s.parse().with_context(|| format!("--psi-inverse {s}"))?;
        if path.len() != args.n {
            bail!("--psi-inverse {s}: length {} differs from --n {}", path.len(), args.n);
        }
        let d = psi_inverse(&path).with_context(|| format!("--psi-inverse {s}"))?;
        let mut out = diagram_json(&d);
        out["path"] = json!(path.to_string());
        out["peaks"] = json!(path.peaks());
        return Ok(Output::json(out));
    }
    let all = motzkin_paths(args.n);
    let bar = motzkin_paths_no_low_peaks(args.n);
    if args.count {
        let mut table = Table::new(&["M", "Mbar"]);
        table.push(vec![all.len().to_string(), bar.len().to_string()]);
        return Ok(Output::json(json!({"M": all.len(), "Mbar": bar.len()})).with_table(table));
    }
    let chosen = if args.no_low_peaks { bar } else { all };
    let mut table = Table::new(&["path", "up_steps", "peaks"]);
    let mut list = Vec::new();
    for p in &chosen {
        let peaks: Vec<String> = p.peaks().iter().map(|(x, y)| format!("({x},{y})")).collect();
        table.push(vec![p.to_string(), p.count_up().to_string(), peaks.join(" ")]);
        list.push(json!({"path": p.to_string(), "up_steps": p.count_up(), "peaks": p.peaks()}));
    }
    Ok(Output::json(json!({"n": args.n, "count": chosen.len(), "paths": list})).with_table(table))
}
