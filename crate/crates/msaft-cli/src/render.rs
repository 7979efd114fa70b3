//! Deterministic text, JSON and DOT rendering.
//!
//! Text and DOT honor the display offset (`--one-indexed`); JSON is always
//! 0-indexed and byte-stable: objects keep the documented key order and
//! arrays follow the canonical sort of the underlying data.

use msaft::ideal::TermOrder;
use msaft::msafts::Msaft;
use msaft::ngon::Secant;
use msaft::poly::{Coeff, Monomial, Polynomial};
use num_traits::{One, Signed};
use serde_json::{json, Map, Value};

pub fn secant_text(s: Secant, off: usize) -> String {
    format!("{{{},{}}}", s.u() + off, s.v() + off)
}

pub fn secant_list_text(secants: &[Secant], off: usize) -> String {
    secants
        .iter()
        .map(|&s| secant_text(s, off))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Like [TermOrder::render_monomial] but with the display offset.
pub fn monomial_text(o: &TermOrder, m: &Monomial, off: usize) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.exps()
        .iter()
        .map(|&(rank, e)| {
            let s = o.secant_of_rank(rank);
            let var = format!("s[{},{}]", s.u() + off, s.v() + off);
            if e == 1 {
                var
            } else {
                format!("{var}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Like [TermOrder::render_polynomial] but with the display offset.
pub fn polynomial_text(o: &TermOrder, p: &Polynomial, off: usize) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs != Coeff::one() || m.is_one() {
            out.push_str(&abs.to_string());
            if !m.is_one() {
                out.push('*');
            }
        }
        if !m.is_one() {
            out.push_str(&monomial_text(o, m, off));
        }
    }
    out
}

pub fn secant_json(s: Secant) -> Value {
    json!([s.u(), s.v()])
}

pub fn secant_list_json(secants: &[Secant]) -> Value {
    Value::Array(secants.iter().map(|&s| secant_json(s)).collect())
}

/// The documented export document: keys n, count, class_count, msafts.
pub fn msafts_json(n: usize, msafts: &[Msaft], class_count: usize) -> String {
    let mut root = Map::new();
    root.insert("n".into(), json!(n));
    root.insert("count".into(), json!(msafts.len()));
    root.insert("class_count".into(), json!(class_count));
    root.insert(
        "msafts".into(),
        Value::Array(msafts.iter().map(|m| secant_list_json(m.secants())).collect()),
    );
    Value::Object(root).to_string()
}

/// One DOT graph per maximal set: the n polygon vertices plus one edge per
/// secant, loops as self-edges.
pub fn msafts_dot(n: usize, msafts: &[Msaft], off: usize) -> String {
    let mut out = String::new();
    for (k, m) in msafts.iter().enumerate() {
        out.push_str(&format!("graph msaft_{k} {{\n"));
        for v in 0..n {
            out.push_str(&format!("  v{};\n", v + off));
        }
        for &s in m.secants() {
            out.push_str(&format!("  v{} -- v{};\n", s.u() + off, s.v() + off));
        }
        out.push_str("}\n");
    }
    out
}
