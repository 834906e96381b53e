//! Shared argument decoding and element formatting.

use anyhow::{bail, Context, Result};
use cambrian_core::coxeter::{Coxeter, CoxeterElement, GroupElement, TypeTag};
use cambrian_core::weak::{format_permutation, from_permutation, parse_permutation, to_permutation};

use crate::args::{CoxArgs, ElementArgs};

/// Decodes `--type`, accepting `A4`, `A 4`, `I2:5` and `I2 5`.
pub fn parse_type(parts: &[String]) -> Result<TypeTag> {
    let joined = match parts {
        [one] => one.clone(),
        [head, rank] if head.eq_ignore_ascii_case("I2") => format!("I2:{rank}"),
        [head, rank] => format!("{head}{rank}"),
        _ => bail!("--type needs a type such as A4, D5 or I2:7"),
    };
    joined.parse::<TypeTag>().with_context(|| format!("--type {}", parts.join(" ")))
}

/// Decodes `--coxeter WORD` or `--bipartite` for `cox`; the default is the
/// linear element.
pub fn coxeter_element(cox: &Coxeter, word: Option<&str>, bipartite: bool) -> Result<CoxeterElement> {
    let d = cox.diagram();
    match word {
        Some(w) => {
            let idx = cox.parse_label_word(w).with_context(|| format!("--coxeter {w}"))?;
            CoxeterElement::from_word(d, &idx).with_context(|| format!("--coxeter {w}"))
        }
        None if bipartite => Ok(CoxeterElement::bipartite(d)),
        None => Ok(CoxeterElement::linear(d)),
    }
}

/// The Coxeter system and element selected by `args`.
pub fn coxeter(args: &CoxArgs) -> Result<(Coxeter, CoxeterElement)> {
    let tag = parse_type(&args.ty.ty)?;
    let cox = Coxeter::new(tag)?;
    let c = coxeter_element(&cox, args.coxeter.as_deref(), args.bipartite)?;
    Ok((cox, c))
}

/// How an element was given, so results are printed the same way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// One-line permutation.
    Permutation,
    /// Word of generator labels.
    Word,
}

/// Decodes `--perm` or `--word`.
pub fn element(cox: &Coxeter, args: &ElementArgs) -> Result<Option<(GroupElement, Style)>> {
    if let Some(p) = &args.perm {
        let perm = parse_permutation(p).with_context(|| format!("--perm {p}"))?;
        let w = from_permutation(cox, &perm).with_context(|| format!("--perm {p}"))?;
        return Ok(Some((w, Style::Permutation)));
    }
    if let Some(s) = &args.word {
        if s.trim() == "e" || s.trim().is_empty() {
            return Ok(Some((GroupElement::IDENTITY, Style::Word)));
        }
        let idx = cox.parse_label_word(s).with_context(|| format!("--word {s}"))?;
        let w = cox.from_word(&idx).with_context(|| format!("--word {s}"))?;
        return Ok(Some((w, Style::Word)));
    }
    Ok(None)
}

/// A reduced word in labels, `e` for the identity.
pub fn word(cox: &Coxeter, w: GroupElement) -> String {
    let labels = cox.label_word(&cox.reduced_word(w));
    if labels.is_empty() {
        "e".into()
    } else {
        labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// `w` in the given style.
pub fn show(cox: &Coxeter, w: GroupElement, style: Style) -> Result<String> {
    match style {
        Style::Permutation => Ok(format_permutation(&to_permutation(cox, w)?)),
        Style::Word => Ok(word(cox, w)),
    }
}

/// A bitmask of generator indices as sorted labels.
pub fn labels_of_mask(cox: &Coxeter, mask: u64) -> Vec<usize> {
    (0..cox.rank()).filter(|&i| mask >> i & 1 == 1).map(|i| cox.diagram().labels[i]).collect()
}
