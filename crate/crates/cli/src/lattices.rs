//! `roots`, `lattice`, `pop`, `orbit`, `image`, `cjc` and `heap`.

use std::collections::BTreeMap;

use anyhow::{Context, Result};
use cambrian_core::cambrian::Cambrian;
use cambrian_core::coxeter::{Coxeter, CoxeterElement, GroupElement, TypeTag};
use cambrian_core::heaps::CoxeterHeap;
use cambrian_core::lattice::{hasse_dot, FacetPolynomial, FiniteLattice, ShardLabeling};
use cambrian_core::weak::{pop_up_weak, pop_weak, transposition_table, WeakOrder};
use serde_json::{json, Value};

use crate::args::{CoxArgs, Kind, KindArgs, LatticeArgs, OrbitArgs, PopArgs, TypeArgs};
use crate::common::{coxeter, element, labels_of_mask, parse_type, show, word, Style};
use crate::output::{Output, Table};

/// A weak order or Cambrian lattice with its elements.
pub struct Chosen {
    /// The Coxeter system.
    pub cox: Coxeter,
    /// The Coxeter element (meaningful for Cambrian lattices).
    pub c: CoxeterElement,
    /// The lattice.
    pub lattice: FiniteLattice,
    /// Element `k` of the lattice.
    pub elements: Vec<GroupElement>,
}

impl Chosen {
    /// Builds the lattice selected by `args`.
    pub fn new(args: &KindArgs) -> Result<Self> {
        let (cox, c) = coxeter(&args.cox)?;
        Ok(match args.kind {
            Kind::Weak => {
                let weak = WeakOrder::new(&cox)?;
                let elements = (0..weak.lattice().len()).map(|k| weak.element(k)).collect();
                Chosen { lattice: weak.lattice().clone(), cox, c, elements }
            }
            Kind::Cambrian => {
                let camb = Cambrian::new(&cox, &c)?;
                Chosen { lattice: camb.lattice().clone(), elements: camb.sortables().to_vec(), cox, c }
            }
        })
    }

    fn index_of(&self, w: GroupElement, flag: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|&x| x == w)
            .with_context(|| format!("{flag} {}: not an element of this lattice", word(&self.cox, w)))
    }

    fn header(&self, kind: Kind) -> serde_json::Map<String, Value> {
        let mut m = serde_json::Map::new();
        m.insert("type".into(), json!(self.cox.type_tag().to_string()));
        m.insert("kind".into(), json!(if kind == Kind::Weak { "weak" } else { "cambrian" }));
        if kind == Kind::Cambrian {
            m.insert("coxeter".into(), json!(self.c.label_string(self.cox.diagram())));
        }
        m
    }
}

fn flag_of(style: Style) -> &'static str {
    match style {
        Style::Permutation => "--perm",
        Style::Word => "--word",
    }
}

/// `roots`: positive roots with coordinates in the simple-root basis.
pub fn roots(args: &TypeArgs) -> Result<Output> {
    let tag = parse_type(&args.ty)?;
    let cox = Coxeter::new(tag)?;
    let rs = cox.roots();
    let transpositions: BTreeMap<usize, (usize, usize)> = match tag {
        TypeTag::A(_) => transposition_table(&cox)?.into_iter().map(|(t, r)| (r, t)).collect(),
        _ => BTreeMap::new(),
    };
    let mut table = Table::new(&["index", "coordinates", "transposition"]);
    let mut list = Vec::new();
    for r in 0..rs.len() {
        let coords = rs.coord_strings(r);
        let t = transpositions.get(&r).map(|(a, b)| format!("({a} {b})")).unwrap_or_default();
        table.push(vec![r.to_string(), coords.join(" "), t.clone()]);
        let mut entry = json!({"index": r, "coordinates": coords});
        if let Some((a, b)) = transpositions.get(&r) {
            entry["transposition"] = json!([a, b]);
        }
        list.push(entry);
    }
    let out = json!({
        "type": tag.to_string(),
        "rank": cox.rank(),
        "count": rs.len(),
        "roots": list,
    });
    Ok(Output::json(out).with_table(table))
}

/// `lattice`: elements and cover relations.
pub fn lattice(args: &LatticeArgs) -> Result<Output> {
    let ch = Chosen::new(&args.lattice)?;
    let l = &ch.lattice;
    let names: Vec<String> = ch.elements.iter().map(|&w| word(&ch.cox, w)).collect();
    let covers = l.cover_pairs();
    let mut table = Table::new(&["index", "element", "length", "lower_covers"]);
    for (k, name) in names.iter().enumerate() {
        let lc: Vec<String> = l.lower_covers(k).iter().map(|x| x.to_string()).collect();
        table.push(vec![k.to_string(), name.clone(), ch.elements[k].length().to_string(), lc.join(" ")]);
    }
    let mut m = ch.header(args.lattice.kind);
    m.insert("size".into(), json!(l.len()));
    m.insert("height".into(), json!(l.height()));
    m.insert("elements".into(), json!(names));
    m.insert("covers".into(), json!(covers));
    let shards = if args.shards { Some(ShardLabeling::new(l)?) } else { None };
    let dot = hasse_dot(l, None, shards.as_ref());
    if let Some(path) = &args.legend {
        let mut legend = Table::new(&["index", "element"]);
        for (k, n) in names.iter().enumerate() {
            legend.push(vec![k.to_string(), n.clone()]);
        }
        std::fs::write(path, crate::output::csv(&legend) + "\n")
            .with_context(|| format!("--legend {}", path.display()))?;
    }
    Ok(Output::json(Value::Object(m)).with_table(table).with_dot(dot))
}

/// `pop`: `pop↓` (or `pop↑`) of one element.
pub fn pop(args: &PopArgs) -> Result<Output> {
    let (cox, c) = coxeter(&args.lattice.cox)?;
    let (w, style) = element(&cox, &args.element)?.context("give the element with --perm or --word")?;
    let result = match (args.lattice.kind, args.up) {
        (Kind::Weak, false) => pop_weak(&cox, w),
        (Kind::Weak, true) => pop_up_weak(&cox, w),
        (Kind::Cambrian, up) => {
            let camb = Cambrian::new(&cox, &c)?;
            let k = camb.index_of(w).with_context(|| {
                format!("{} {}: not c-sortable for c = {}", flag_of(style), show(&cox, w, style).unwrap_or_default(), c.label_string(cox.diagram()))
            })?;
            let l = camb.lattice();
            camb.element(if up { l.pop_up(k) } else { l.pop_down(k) })
        }
    };
    let s = show(&cox, result, style)?;
    let mut table = Table::new(&["input", "result"]);
    table.push(vec![show(&cox, w, style)?, s.clone()]);
    Ok(Output::json(json!({ "result": s })).with_table(table))
}

/// `orbit`: the forward orbit of one element, or orbit statistics.
pub fn orbit(args: &OrbitArgs) -> Result<Output> {
    let ch = Chosen::new(&args.lattice)?;
    let l = &ch.lattice;
    let h = ch.cox.type_tag().coxeter_number();
    match element(&ch.cox, &args.element)? {
        Some((w, style)) => {
            let k = ch.index_of(w, flag_of(style))?;
            let orbit: Vec<String> =
                l.orbit(k).into_iter().map(|x| show(&ch.cox, ch.elements[x], style)).collect::<Result<_>>()?;
            let mut table = Table::new(&["step", "element"]);
            for (i, e) in orbit.iter().enumerate() {
                table.push(vec![i.to_string(), e.clone()]);
            }
            Ok(Output::json(json!({ "orbit": orbit, "size": orbit.len() })).with_table(table))
        }
        None => {
            let sizes = l.orbit_sizes();
            let (max, arg) = l.orbit_stats();
            let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
            for s in sizes {
                *hist.entry(s).or_default() += 1;
            }
            let mut table = Table::new(&["orbit_size", "elements"]);
            for (s, n) in &hist {
                table.push(vec![s.to_string(), n.to_string()]);
            }
            let mut m = ch.header(args.lattice.kind);
            m.insert("size".into(), json!(l.len()));
            m.insert("coxeter_number".into(), json!(h));
            m.insert("max_orbit".into(), json!(max));
            m.insert("maximizers".into(), json!(arg.iter().map(|&x| word(&ch.cox, ch.elements[x])).collect::<Vec<_>>()));
            m.insert("histogram".into(), json!(hist.iter().map(|(s, n)| json!({"orbit_size": s, "elements": n})).collect::<Vec<_>>()));
            Ok(Output::json(Value::Object(m)).with_table(table))
        }
    }
}

/// `image`: the image of `pop↓` on `Camb_c` with the two descriptions.
pub fn image(args: &CoxArgs) -> Result<Output> {
    let (cox, c) = coxeter(args)?;
    let camb = Cambrian::new(&cox, &c)?;
    let conds = camb.image_conditions()?;
    let mut table = Table::new(&["element", "in_image", "commuting_descents", "boolean_interval"]);
    let mut members = Vec::new();
    let mut agree = true;
    for (w, k) in &conds {
        agree &= k.in_image == k.condition2 && k.in_image == k.condition3;
        if k.in_image {
            members.push(word(&cox, *w));
        }
        table.push(vec![word(&cox, *w), k.in_image.to_string(), k.condition2.to_string(), k.condition3.to_string()]);
    }
    let out = json!({
        "type": cox.type_tag().to_string(),
        "coxeter": c.label_string(cox.diagram()),
        "lattice_size": camb.len(),
        "image_size": members.len(),
        "image": members,
        "conditions_agree": agree,
    });
    Ok(Output::json(out).with_table(table))
}

/// `cjc`: facets of the canonical join complex and `P_L(q)` three ways.
pub fn cjc(args: &KindArgs) -> Result<Output> {
    let ch = Chosen::new(args)?;
    let l = &ch.lattice;
    let s = ShardLabeling::new(l)?;
    let facets = s.facets();
    let poly = FacetPolynomial::via_facets(&s);
    let dual = FacetPolynomial::of(&l.dual())?;
    let mut table = Table::new(&["facet", "size"]);
    for f in &facets {
        let names: Vec<String> = f.iter().map(|&j| word(&ch.cox, ch.elements[j])).collect();
        table.push(vec![names.join(" | "), f.len().to_string()]);
    }
    let mut m = ch.header(args.kind);
    m.insert("size".into(), json!(l.len()));
    m.insert("facets".into(), json!(facets.len()));
    m.insert("pop_down_image".into(), json!(l.pop_down_image().len()));
    m.insert("pop_up_image".into(), json!(l.pop_up_image().len()));
    m.insert("polynomial".into(), json!(poly.coeffs));
    m.insert("polynomial_via_pop_down".into(), json!(FacetPolynomial::via_pop_down(l, &s).coeffs));
    m.insert("polynomial_via_pop_up".into(), json!(FacetPolynomial::via_pop_up(l, &s).coeffs));
    m.insert("dual_polynomial".into(), json!(dual.coeffs));
    Ok(Output::json(Value::Object(m)).with_table(table))
}

/// `heap`: `h`, `sort_c(w∘)`, `z_c`, its orbit and the bipartition.
pub fn heap(args: &CoxArgs) -> Result<Output> {
    let (cox, c) = coxeter(args)?;
    let hp = CoxeterHeap::new(&cox, &c)?;
    let orbit: Vec<String> = hp.expected_orbit().into_iter().map(|w| word(&cox, w)).collect();
    let (x1, x2) = hp.bipartition();
    let mut table = Table::new(&["step", "element"]);
    for (i, e) in orbit.iter().enumerate() {
        table.push(vec![i.to_string(), e.clone()]);
    }
    let out = json!({
        "type": cox.type_tag().to_string(),
        "coxeter": c.label_string(cox.diagram()),
        "coxeter_number": hp.coxeter_number(),
        "sort_w0": cox.label_word(hp.sort_word()),
        "z_c": word(&cox, hp.z_c()),
        "z_c_orbit": orbit,
        "x1": labels_of_mask(&cox, x1),
        "x2": labels_of_mask(&cox, x2),
    });
    Ok(Output::json(out).with_table(table).with_dot(hp.ar_quiver_dot()))
}
