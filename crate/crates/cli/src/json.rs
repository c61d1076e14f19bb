//! JSON encodings. Rationals are always `"p/q"` strings.

use intdiff::rational::format_pq;
use intdiff::structure::{BnElement, Label};
use intdiff::{ElementN, PolyN};
use serde_json::{json, Value};

/// `{rank, graded, fpart}`. A term goes to `fpart` when any factor is a
/// matrix unit; each term lists its factors and coefficient.
pub fn element(a: &ElementN) -> Value {
    let (mut graded, mut fpart) = (Vec::new(), Vec::new());
    for (key, c) in a.terms() {
        let term = json!({ "factors": key, "coeff": format_pq(c) });
        if key.iter().any(|atom| atom.is_unit()) {
            fpart.push(term);
        } else {
            graded.push(term);
        }
    }
    json!({ "rank": a.rank(), "graded": graded, "fpart": fpart })
}

pub fn poly(p: &PolyN) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(exps, c)| json!({ "exponents": exps, "coeff": format_pq(c) }))
        .collect();
    json!({ "rank": p.rank(), "terms": terms })
}

pub fn quotient(q: &BnElement) -> Value {
    let terms: Vec<Value> = q
        .terms()
        .iter()
        .map(|(key, c)| {
            let factors: Vec<Value> = key
                .iter()
                .map(|&(k, t)| json!({ "dpow": k, "hpow": t }))
                .collect();
            json!({ "factors": factors, "coeff": format_pq(c) })
        })
        .collect();
    json!({ "rank": q.rank(), "terms": terms })
}

pub fn label(l: &[Label]) -> String {
    l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("")
}
