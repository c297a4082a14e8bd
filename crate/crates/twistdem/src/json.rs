//! JSON encodings of roots, characters, decompositions, partition tuples,
//! relations and verification reports.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use twistdem_core::finite::Decomposition;
use twistdem_core::presentations::{PartitionTuple, RelationDescriptor, RootForm};
use twistdem_core::verify::{Status, VerificationReport, Witness};
use twistdem_core::{AffineRealRoot, GradedCharacter, HalfInt, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRecord {
    pub classical: Vec<i64>,
    pub delta: String,
    pub sign: String,
    pub half: bool,
    pub length: String,
    pub d: i64,
}

impl From<&AffineRealRoot> for RootRecord {
    fn from(r: &AffineRealRoot) -> Self {
        RootRecord {
            classical: r.classical.clone(),
            delta: r.delta.to_string(),
            sign: if r.sign() > 0 { "+" } else { "-" }.to_string(),
            half: r.half,
            length: if r.long { "long" } else { "short" }.to_string(),
            d: r.d,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub weight: Vec<i64>,
    pub grade: String,
    pub coeff: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRecord {
    pub level: i64,
    pub terms: Vec<TermRecord>,
}

/// Coefficients that fit in `i64` become JSON numbers, larger ones strings.
fn big_to_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn big_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| anyhow!("coefficient {n} is not an integer")),
        Value::String(s) => s.parse().with_context(|| format!("bad coefficient {s:?}")),
        other => bail!("bad coefficient {other}"),
    }
}

/// Terms come out sorted by `(grade, weight)`, the character's own order.
pub fn character_record(ch: &GradedCharacter) -> CharacterRecord {
    CharacterRecord {
        level: ch.level(),
        terms: ch
            .terms()
            .map(|(w, g, c)| TermRecord { weight: w.coords().to_vec(), grade: g.to_string(), coeff: big_to_json(c) })
            .collect(),
    }
}

pub fn character_from_record(rec: &CharacterRecord) -> Result<GradedCharacter> {
    let rank = rec.terms.first().map_or(0, |t| t.weight.len());
    let mut ch = GradedCharacter::zero(rank, rec.level);
    for t in &rec.terms {
        let grade: HalfInt = t.grade.parse().map_err(|e| anyhow!("{e}"))?;
        ch.add_term(Weight::new(t.weight.clone()), grade, &big_from_json(&t.coeff)?)
            .map_err(|e| anyhow!("{e}"))?;
    }
    Ok(ch)
}

/// `[{"weight": [...], "mult": m}, ...]` in weight order.
pub fn decomposition_json(d: &Decomposition) -> Value {
    Value::Array(
        d.iter()
            .map(|(w, m)| json!({"weight": w.coords(), "mult": big_to_json(m)}))
            .collect(),
    )
}

/// `{"[1,0]": {"parts": [...], "s": s, "m": m}, ...}` keyed by the root.
pub fn partition_tuple_json(xi: &PartitionTuple) -> Value {
    let mut map = serde_json::Map::new();
    for e in &xi.entries {
        map.insert(
            Weight::new(e.root.clone()).to_string(),
            json!({"parts": e.partition.parts(), "s": e.s, "m": e.m}),
        );
    }
    Value::Object(map)
}

pub fn relation_json(r: &RelationDescriptor) -> Value {
    json!({
        "root": r.root,
        "form": match r.form { RootForm::Full => "full", RootForm::Half => "half" },
        "delta": r.delta.to_string(),
        "exponent": r.exponent,
    })
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::CharacterTerm { weight, grade, left, right } => json!({
            "kind": "character_term",
            "weight": weight.coords(),
            "grade": grade.to_string(),
            "left": big_to_json(left),
            "right": big_to_json(right),
        }),
        Witness::Integers { left, right } => {
            json!({"kind": "integers", "left": big_to_json(left), "right": big_to_json(right)})
        }
        Witness::Decomposition { weight, left, right } => json!({
            "kind": "decomposition",
            "weight": weight.coords(),
            "left": big_to_json(left),
            "right": big_to_json(right),
        }),
        Witness::Matrix { instance, determinant } => {
            json!({"kind": "matrix", "instance": instance, "determinant": determinant})
        }
        Witness::IndexSet { r, s, k, detail } => json!({
            "kind": "index_set",
            "r": r.to_string(),
            "s": s.to_string(),
            "k": k,
            "detail": detail,
        }),
        Witness::Relation { expected, found } => {
            json!({"kind": "relation", "expected": expected, "found": found})
        }
        Witness::Error(e) => json!({"kind": "error", "message": e}),
    }
}

pub fn report_json(rep: &VerificationReport) -> Value {
    let params: BTreeMap<&str, &str> = rep.params.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
    let (status, reason) = match &rep.status {
        Status::Pass => ("pass", None),
        Status::Fail => ("fail", None),
        Status::Skipped(r) => ("skipped", Some(r.as_str())),
    };
    let mut out = json!({
        "check": rep.check,
        "params": params,
        "status": status,
        "details": rep.details,
    });
    if let Some(r) = reason {
        out["reason"] = json!(r);
    }
    if let Some(w) = &rep.witness {
        out["witness"] = witness_json(w);
    }
    if let Some(t) = rep.timing {
        out["timing_ms"] = json!(t.as_secs_f64() * 1e3);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use twistdem_core::demazure::demazure_character;
    use twistdem_core::{RootSystemData, TwistedFamily};

    #[test]
    fn character_round_trip() {
        let rsd = RootSystemData::for_family(TwistedFamily::A2n, 2).unwrap();
        let ch = demazure_character(&rsd, 2, &Weight::new(vec![1, 1])).unwrap();
        let rec = character_record(&ch);
        let text = serde_json::to_string(&rec).unwrap();
        let back: CharacterRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(character_from_record(&back).unwrap(), ch);
        let grades: Vec<HalfInt> = rec.terms.iter().map(|t| t.grade.parse().unwrap()).collect();
        assert!(grades.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn root_record_shape() {
        let rsd = RootSystemData::for_family(TwistedFamily::A2n, 1).unwrap();
        let roots = rsd.positive_real_roots(HalfInt::from_int(1));
        let v = serde_json::to_value(RootRecord::from(&roots[0])).unwrap();
        for key in ["classical", "delta", "sign", "half", "length", "d"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn big_coefficients_become_strings() {
        let big = BigInt::from(i64::MAX) * 4;
        assert_eq!(big_from_json(&big_to_json(&big)).unwrap(), big);
        assert_eq!(big_to_json(&BigInt::from(-3)), json!(-3));
    }
}
