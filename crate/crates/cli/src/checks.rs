//! `verify` and `lab`.

use anyhow::{bail, Context, Result};
use cambrian_core::cambrian::Cambrian;
use cambrian_core::coxeter::{Coxeter, CoxeterElement, TypeTag};
use cambrian_core::heaps::CoxeterHeap;
use cambrian_verify::combinatorics::{
    bijection_check, bookkeeping_check, generating_function_check, image_check, interval_check, orbit_check,
    quotient_orbit_check,
};
use cambrian_verify::representations::QuiverCase;
use cambrian_verify::{run, Outcome, Report, VerifyError, TITLES};
use serde_json::{json, Value};

use crate::args::{Check, Experiment, LabArgs, VerifyArgs};
use crate::common::{coxeter, coxeter_element, parse_type, word};
use crate::output::{Output, Table};

fn criterion_of(check: Check) -> Option<u8> {
    Some(match check {
        Check::Image => 1,
        Check::PopMutation => 2,
        Check::Preimages => 3,
        Check::GeneratingFunction => 4,
        Check::Bijection => 5,
        Check::Orbits => 6,
        Check::Intervals => 7,
        Check::Bookkeeping => 8,
        Check::Appendix => 9,
        Check::Vectors => 10,
        Check::Acceptance => return None,
    })
}

fn outcome_json(o: &Outcome) -> Value {
    json!({
        "criterion": o.id,
        "title": o.title,
        "passed": o.passed(),
        "checked": o.report.checked,
        "failed": o.report.failed,
        "counterexample": o.report.counterexamples.first(),
        "notes": o.notes,
    })
}

fn outcome_row(o: &Outcome) -> Vec<String> {
    vec![
        o.id.to_string(),
        o.title.to_string(),
        if o.passed() { "PASS" } else { "FAIL" }.to_string(),
        o.report.checked.to_string(),
        o.report.failed.to_string(),
        o.report.counterexamples.first().cloned().unwrap_or_default(),
    ]
}

fn outcomes_output(outcomes: &[Outcome]) -> Output {
    let mut table = Table::new(&["criterion", "title", "result", "checked", "failed", "counterexample"]);
    for o in outcomes {
        table.push(outcome_row(o));
    }
    let failed = outcomes.iter().any(|o| !o.passed());
    let json = match outcomes {
        [one] => outcome_json(one),
        _ => json!({"passed": !failed, "criteria": outcomes.iter().map(outcome_json).collect::<Vec<_>>()}),
    };
    Output { failed, ..Output::json(json).with_table(table) }
}

/// Runs `f` on every item with up to `jobs` threads; results keep the
/// input order.
fn par_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.clamp(1, items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let mut slots: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    std::thread::scope(|s| {
        let f = &f;
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                s.spawn(move || {
                    (j..items.len()).step_by(jobs).map(|k| (k, f(&items[k]))).collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (k, r) in h.join().expect("worker thread panicked") {
                slots[k] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every slot filled")).collect()
}

fn one_c(check: Check, cox: &Coxeter, c: &CoxeterElement) -> Result<Report, VerifyError> {
    match check {
        Check::PopMutation => QuiverCase::new(cox, c)?.pop_mutation(),
        Check::Preimages => QuiverCase::new(cox, c)?.preimages(),
        Check::Appendix => QuiverCase::new(cox, c)?.appendix(),
        _ => {
            let camb = Cambrian::new(cox, c)?;
            match check {
                Check::Image => image_check(cox, c, &camb),
                Check::Orbits => orbit_check(cox, c, &camb),
                Check::Intervals => interval_check(cox, c, &camb),
                _ => {
                    let name = format!("{} c={}", cox.type_tag(), c.label_string(cox.diagram()));
                    bookkeeping_check(camb.lattice(), &name)
                }
            }
        }
    }
}

fn type_a_rank(tag: TypeTag, flag: &str) -> Result<usize> {
    match tag {
        TypeTag::A(n) => Ok(n),
        other => bail!("{flag}: this check needs type A, got {other}"),
    }
}

/// `verify`: the acceptance criteria, or one sweep restricted to a type.
pub fn verify(args: &VerifyArgs) -> Result<Output> {
    let Some(id) = criterion_of(args.check) else {
        if !args.ty.is_empty() || args.n.is_some() {
            bail!("--type and --n do not apply to `verify acceptance`");
        }
        let outcomes = (1..=10).map(run).collect::<Result<Vec<_>, _>>()?;
        return Ok(outcomes_output(&outcomes));
    };
    let title = TITLES[id as usize - 1];
    let mut out = Outcome { id, title, report: Report::new(title), notes: Vec::new() };
    match args.check {
        Check::GeneratingFunction | Check::Bijection => {
            let n = match (args.ty.is_empty(), args.n) {
                (true, None) => return Ok(outcomes_output(&[run(id)?])),
                (true, Some(n)) => n,
                (false, None) => type_a_rank(parse_type(&args.ty)?, "--type")?,
                (false, Some(_)) => bail!("give either --type or --n, not both"),
            };
            if n == 0 {
                bail!("--n must be at least 1");
            }
            if args.check == Check::GeneratingFunction {
                out.report.absorb(generating_function_check(n)?);
            } else {
                for k in 1..=n {
                    out.report.absorb(bijection_check(k)?);
                }
            }
        }
        Check::Vectors => {
            if !args.ty.is_empty() || args.n.is_some() {
                bail!("--type and --n do not apply to `verify vectors`");
            }
            return Ok(outcomes_output(&[run(id)?]));
        }
        _ => {
            if args.n.is_some() {
                bail!("--n only applies to `verify generating-function` and `verify bijection`");
            }
            if args.ty.is_empty() {
                if args.coxeter.is_some() || args.bipartite {
                    bail!("--coxeter and --bipartite need --type");
                }
                return Ok(outcomes_output(&[run(id)?]));
            }
            let cox = Coxeter::new(parse_type(&args.ty)?)?;
            let elements = if args.coxeter.is_some() || args.bipartite {
                vec![coxeter_element(&cox, args.coxeter.as_deref(), args.bipartite)?]
            } else {
                CoxeterElement::all(cox.diagram())
            };
            let reports = par_map(&elements, args.jobs, |c| one_c(args.check, &cox, c));
            for r in reports {
                out.report.absorb(r?);
            }
        }
    }
    Ok(outcomes_output(&[out]))
}

fn same_as(cox: &Coxeter, c: &CoxeterElement, d: &CoxeterElement) -> bool {
    let w = c.element(cox);
    w == d.element(cox) || w == d.inverse_element(cox)
}

/// `lab`: data for open questions. Nothing here is asserted.
pub fn lab(args: &LabArgs) -> Result<Output> {
    match args.experiment {
        Experiment::ImageSizeExtremes => image_size_extremes(args),
        Experiment::UpsilonCensus => upsilon_census(args),
        Experiment::QuotientOrbitBound => {
            let tag = parse_type(&args.cox.ty.ty)?;
            let (report, maxima) = quotient_orbit_check(tag, args.samples, args.seed)?;
            let h = tag.coxeter_number();
            let mut table = Table::new(&["sample", "max_orbit"]);
            for (k, m) in maxima.iter().enumerate() {
                table.push(vec![k.to_string(), m.to_string()]);
            }
            let out = json!({
                "type": tag.to_string(),
                "samples": args.samples,
                "seed": args.seed,
                "coxeter_number": h,
                "largest_orbit": maxima.iter().max(),
                "within_bound": maxima.iter().all(|&m| m <= h),
                "maxima": maxima,
                "checked": report.checked,
                "failed": report.failed,
                "counterexample": report.counterexamples.first(),
            });
            Ok(Output::json(out).with_table(table))
        }
    }
}

fn image_size_extremes(args: &LabArgs) -> Result<Output> {
    if args.cox.coxeter.is_some() || args.cox.bipartite {
        bail!("image-size-extremes sweeps every Coxeter element; drop --coxeter and --bipartite");
    }
    let cox = Coxeter::new(parse_type(&args.cox.ty.ty)?)?;
    let d = cox.diagram();
    let (lin, bip) = (CoxeterElement::linear(d), CoxeterElement::bipartite(d));
    let mut rows = Vec::new();
    for c in CoxeterElement::all(d) {
        let size = Cambrian::new(&cox, &c)?.lattice().pop_down_image().len();
        rows.push((c.label_string(d), size, same_as(&cox, &c, &lin), same_as(&cox, &c, &bip)));
    }
    let min = rows.iter().map(|r| r.1).min().context("no Coxeter elements")?;
    let max = rows.iter().map(|r| r.1).max().context("no Coxeter elements")?;
    let mut table = Table::new(&["coxeter", "image_size", "linear", "bipartite"]);
    let mut list = Vec::new();
    for (w, s, l, b) in &rows {
        table.push(vec![w.clone(), s.to_string(), l.to_string(), b.to_string()]);
        list.push(json!({"coxeter": w, "image_size": s, "linear": l, "bipartite": b}));
    }
    let out = json!({
        "type": cox.type_tag().to_string(),
        "min": min,
        "max": max,
        "min_at_linear": rows.iter().any(|r| r.2 && r.1 == min),
        "max_at_bipartite": rows.iter().any(|r| r.3 && r.1 == max),
        "elements": list,
    });
    Ok(Output::json(out).with_table(table))
}

fn upsilon_census(args: &LabArgs) -> Result<Output> {
    let (cox, c) = coxeter(&args.cox)?;
    let camb = Cambrian::new(&cox, &c)?;
    let (max, arg) = camb.lattice().orbit_stats();
    let z = CoxeterHeap::new(&cox, &c)?.z_c();
    let members: Vec<String> = arg.iter().map(|&k| word(&cox, camb.element(k))).collect();
    let contains_z = arg.iter().any(|&k| camb.element(k) == z);
    let mut table = Table::new(&["element", "is_z_c"]);
    for &k in &arg {
        table.push(vec![word(&cox, camb.element(k)), (camb.element(k) == z).to_string()]);
    }
    let out = json!({
        "type": cox.type_tag().to_string(),
        "coxeter": c.label_string(cox.diagram()),
        "max_orbit": max,
        "size": arg.len(),
        "members": members,
        "z_c": word(&cox, z),
        "contains_z_c": contains_z,
        "equals_z_c": contains_z && arg.len() == 1,
    });
    Ok(Output::json(out).with_table(table))
}
