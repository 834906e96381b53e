//! `rep` and `smc`.

use anyhow::{bail, Context, Result};
use cambrian_rep::smc::{mutate, SemibrickPair, Witness};
use cambrian_rep::torsion::{members, TorsLattice};
use cambrian_rep::PathAlgebra;
use serde_json::{json, Value};

use crate::args::{CoxArgs, MutateArgs, RepArgs};
use crate::common::{coxeter, word};
use crate::output::{Output, Table};

fn algebra(args: &CoxArgs) -> Result<PathAlgebra> {
    let (cox, c) = coxeter(args)?;
    PathAlgebra::new(&cox, &c).context("--type must be simply laced (A, D or E)")
}

fn dims_string(alg: &PathAlgebra, r: usize) -> String {
    alg.dims(r).iter().map(|d| d.to_string()).collect()
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// `rep`: indecomposables by root index, with Hom and Ext¹ on request.
pub fn rep(args: &RepArgs) -> Result<Output> {
    let alg = algebra(&args.cox)?;
    let cox = alg.coxeter();
    let injective = |a: usize| (0..alg.rank()).any(|i| alg.injective(i) == a);
    let mut table = Table::new(&["index", "dims", "simple", "projective", "injective"]);
    let mut list = Vec::new();
    for r in 0..alg.len() {
        let row = (alg.is_simple(r), alg.is_projective(r), injective(r));
        table.push(vec![r.to_string(), dims_string(&alg, r), row.0.to_string(), row.1.to_string(), row.2.to_string()]);
        list.push(json!({"index": r, "dims": alg.dims(r), "simple": row.0, "projective": row.1, "injective": row.2}));
    }
    let tl = TorsLattice::new(&alg)?;
    let mut out = json!({
        "type": cox.type_tag().to_string(),
        "coxeter": alg.coxeter_element().label_string(cox.diagram()),
        "vertices": cox.diagram().labels,
        "indecomposables": list,
        "torsion_classes": tl.len(),
    });
    if let Some(s) = &args.hom {
        let (a, b) = parse_pair(s).with_context(|| format!("--hom {s}: expected two indices `a,b`"))?;
        if a >= alg.len() || b >= alg.len() {
            bail!("--hom {s}: indices must be below {}", alg.len());
        }
        out["hom"] = json!({"a": a, "b": b, "hom": alg.hom(a, b), "ext": alg.ext(a, b)});
    }
    Ok(Output::json(out).with_table(table))
}

fn pair_json(alg: &PathAlgebra, p: &SemibrickPair) -> Value {
    let side = |s: &[usize]| s.iter().map(|&r| json!({"index": r, "dims": dims_string(alg, r)})).collect::<Vec<_>>();
    json!({"D": side(&p.x), "U": side(&p.y)})
}

fn side_string(alg: &PathAlgebra, s: &[usize]) -> String {
    s.iter().map(|&r| dims_string(alg, r)).collect::<Vec<_>>().join(" ")
}

/// `smc list`: every torsion class with `(D(T), U(T))` and `φ_c⁻¹(T)`.
pub fn smc_list(args: &CoxArgs) -> Result<Output> {
    let alg = algebra(args)?;
    let tl = TorsLattice::new(&alg)?;
    let cox = alg.coxeter();
    let mut table = Table::new(&["id", "size", "D", "U", "sortable"]);
    let mut list = Vec::new();
    for (id, &t) in tl.classes.iter().enumerate() {
        let p = SemibrickPair::of_torsion_class(&tl, t);
        let w = word(cox, alg.phi_inverse(t)?);
        let size = members(t).len();
        table.push(vec![id.to_string(), size.to_string(), side_string(&alg, &p.x), side_string(&alg, &p.y), w.clone()]);
        let mut entry = json!({"id": id, "members": members(t)});
        let pj = pair_json(&alg, &p);
        entry["D"] = pj["D"].clone();
        entry["U"] = pj["U"].clone();
        entry["sortable"] = json!(w);
        list.push(entry);
    }
    let out = json!({
        "type": cox.type_tag().to_string(),
        "coxeter": alg.coxeter_element().label_string(cox.diagram()),
        "count": tl.len(),
        "torsion_classes": list,
    });
    Ok(Output::json(out).with_table(table))
}

/// Decodes `d:0,1` or `u:2` into the selected bricks of `p`.
fn parse_at(at: &str, p: &SemibrickPair) -> Result<Vec<usize>> {
    let (side, rest) = at.split_once(':').with_context(|| format!("--at {at}: expected `d:POSITIONS` or `u:POSITIONS`"))?;
    let list = match side.trim() {
        "d" | "D" => &p.x,
        "u" | "U" => &p.y,
        other => bail!("--at {at}: unknown side `{other}` (use d or u)"),
    };
    let mut out = Vec::new();
    for s in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let k: usize = s.parse().with_context(|| format!("--at {at}: `{s}` is not a position"))?;
        let brick = list.get(k).with_context(|| format!("--at {at}: position {k} is out of range (side has {})", list.len()))?;
        out.push(*brick);
    }
    Ok(out)
}

/// `smc mutate`: `μ_S(D(T), U(T))` for a subset `S` of one side.
pub fn smc_mutate(args: &MutateArgs) -> Result<Output> {
    let alg = algebra(&args.cox)?;
    let tl = TorsLattice::new(&alg)?;
    let t = *tl
        .classes
        .get(args.torsion)
        .with_context(|| format!("--torsion {}: ids run from 0 to {}", args.torsion, tl.len() - 1))?;
    let p = SemibrickPair::of_torsion_class(&tl, t);
    let at = parse_at(&args.at, &p)?;
    let res = mutate(&alg, &p, &at)?;
    let q = &res.pair;
    let target = tl.classes.iter().position(|&s| SemibrickPair::of_torsion_class(&tl, s) == *q);
    let mut table = Table::new(&["brick", "side", "witness"]);
    let mut prov = Vec::new();
    for pv in &res.provenance {
        let side = if pv.down { "D" } else { "U" };
        let witness = match pv.witness {
            Witness::Cokernel { of } => format!("cokernel of {}", dims_string(&alg, of)),
            Witness::Kernel { of } => format!("kernel of {}", dims_string(&alg, of)),
            Witness::Extension { of } => format!("extension of {}", dims_string(&alg, of)),
            Witness::Carried => "carried".to_string(),
        };
        table.push(vec![dims_string(&alg, pv.brick), side.into(), witness]);
        let mut e = json!({"brick": pv.brick, "dims": dims_string(&alg, pv.brick), "side": side});
        e["witness"] = serde_json::to_value(pv.witness)?;
        prov.push(e);
    }
    let out = json!({
        "torsion": args.torsion,
        "input": pair_json(&alg, &p),
        "at": at,
        "result": pair_json(&alg, q),
        "result_torsion": target,
        "provenance": prov,
    });
    Ok(Output::json(out).with_table(table))
}
