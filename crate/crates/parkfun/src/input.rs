//! Parsers and serializers for the textual interchange formats.
//!
//! - partitions: dot-joined parts, `"2.1"`; the empty partition is `""`
//! - rationals: `"num"` or `"num/den"`, arbitrary precision
//! - preference sequences: comma-joined entries, `"1,2,2,10"`; empty is
//!   `""` or `"-"`
//! - symmetric functions: a JSON object with a single basis key, e.g.
//!   `{"h": {"2.1": "3", "3": "1"}}`
//!
//! Parsers reject rather than repair malformed input; they are exercised by
//! the fuzz targets under `fuzz/`.

use num::bigint::BigInt;
use num::{Signed, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::parking::{PrefSeq, QSymFn};
use crate::partition::Partition;
use crate::rational::{format_rat, Rat};
use crate::series::{GradedSeries, QGradedSeries};
use crate::symfun::{Basis, SymFn};

/// Parse a dot-joined partition such as `2.1`. The empty string is the
/// empty partition; parts must be positive and weakly decreasing.
pub fn parse_partition(s: &str) -> Result<Partition> {
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in s.split('.') {
        let part: u32 = piece
            .parse()
            .map_err(|_| Error::Parse(format!("invalid partition part {piece:?}")))?;
        parts.push(part);
    }
    Partition::new(parts).map_err(|_| {
        Error::Parse(format!(
            "partition parts must be positive and weakly decreasing, got {s:?}"
        ))
    })
}

/// Parse an exact rational, `-3`, `16`, or `22/7`. The denominator must be
/// positive after reduction; a zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let parse_int = |piece: &str| -> Result<BigInt> {
        piece
            .parse()
            .map_err(|_| Error::Parse(format!("invalid integer {piece:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            if den.is_negative() {
                return Err(Error::Parse(
                    "denominators are written positive; move the sign to the numerator".into(),
                ));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Parse a comma-joined preference sequence such as `1,2,2,10`. Both the
/// empty string and `-` denote the empty sequence.
pub fn parse_pref_seq(s: &str) -> Result<PrefSeq> {
    if s.is_empty() || s == "-" {
        return Ok(PrefSeq::empty());
    }
    let mut entries = Vec::new();
    for piece in s.split(',') {
        let entry: u32 = piece
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid sequence entry {piece:?}")))?;
        entries.push(entry);
    }
    PrefSeq::new(entries).map_err(|_| Error::Parse("sequence entries must be positive".into()))
}

/// Parse a symmetric function from its JSON form: one basis letter mapping
/// to an object of partition keys and rational coefficient strings.
pub fn parse_symfn(s: &str) -> Result<SymFn> {
    let value: Value =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    if obj.len() != 1 {
        return Err(Error::Parse(
            "expected exactly one basis key (m, e, h, p, or s)".into(),
        ));
    }
    let (key, terms) = obj.iter().next().expect("length checked");
    let basis: Basis = key.parse()?;
    let terms = terms
        .as_object()
        .ok_or_else(|| Error::Parse("expected an object of partition keys".into()))?;
    let mut f = SymFn::zero(basis);
    for (part_str, coeff) in terms {
        let partition = parse_partition(part_str)?;
        let coeff_str = coeff
            .as_str()
            .ok_or_else(|| Error::Parse("coefficients are written as strings".into()))?;
        f.add_term(partition, parse_rational(coeff_str)?);
    }
    Ok(f)
}

/// Serialize a symmetric function as `{"<basis>": {"<partition>": "<coeff>"}}`
/// with terms in the canonical partition order.
pub fn symfn_to_json(f: &SymFn) -> Value {
    let mut terms = Map::new();
    for (lambda, c) in f.terms() {
        terms.insert(lambda.to_string(), Value::String(format_rat(c)));
    }
    let mut outer = Map::new();
    outer.insert(f.basis().letter().to_string(), Value::Object(terms));
    Value::Object(outer)
}

/// Serialize a q-polynomial as `{"<q-exponent>": {...symfn...}}` in
/// increasing exponent order.
pub fn qsymfn_to_json(q: &QSymFn) -> Value {
    let mut outer = Map::new();
    for (exp, f) in q.terms() {
        outer.insert(exp.to_string(), symfn_to_json(f));
    }
    Value::Object(outer)
}

/// Serialize a series as a degree-indexed array of symmetric functions.
pub fn series_to_json(s: &GradedSeries) -> Value {
    Value::Array(s.coeffs().iter().map(symfn_to_json).collect())
}

/// Serialize a q-series as a degree-indexed array of q-polynomials.
pub fn qseries_to_json(s: &QGradedSeries) -> Value {
    Value::Array(
        (0..=s.truncation())
            .map(|n| qsymfn_to_json(s.coeff(n)))
            .collect(),
    )
}

/// Serialize a preference sequence as a JSON array of integers.
pub fn pref_seq_to_json(seq: &PrefSeq) -> Value {
    Value::Array(
        seq.entries()
            .iter()
            .map(|&e| Value::Number(e.into()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_frac};

    #[test]
    fn partition_round_trip() {
        for s in ["", "3", "2.1", "5.5.2.1.1"] {
            let p = parse_partition(s).unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!(parse_partition("1.2").is_err());
        assert!(parse_partition("0").is_err());
        assert!(parse_partition("2..1").is_err());
        assert!(parse_partition("a").is_err());
    }

    #[test]
    fn rational_round_trip() {
        assert_eq!(parse_rational("16").unwrap(), rat(16));
        assert_eq!(parse_rational("-7/3").unwrap(), rat_frac(-7, 3));
        assert_eq!(parse_rational("2198/3").unwrap(), rat_frac(2198, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
        // non-reduced input reduces
        assert_eq!(format_rat(&parse_rational("4/6").unwrap()), "2/3");
    }

    #[test]
    fn pref_seq_round_trip() {
        assert_eq!(parse_pref_seq("").unwrap(), PrefSeq::empty());
        assert_eq!(parse_pref_seq("-").unwrap(), PrefSeq::empty());
        let s = parse_pref_seq("1,2,2,10").unwrap();
        assert_eq!(s.entries(), &[1, 2, 2, 10]);
        assert!(parse_pref_seq("1,0").is_err());
        assert!(parse_pref_seq("1,,2").is_err());
        assert!(parse_pref_seq(",").is_err());
    }

    #[test]
    fn symfn_json_round_trip() {
        let f = parse_symfn(r#"{"h": {"3": "1", "2.1": "3", "1.1.1": "1"}}"#).unwrap();
        assert_eq!(f.basis(), Basis::Homogeneous);
        assert_eq!(f.num_terms(), 3);
        let json = symfn_to_json(&f);
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(text, r#"{"h":{"3":"1","2.1":"3","1.1.1":"1"}}"#);
        let back = parse_symfn(&text).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn symfn_rejects_malformed_objects() {
        assert!(parse_symfn("[]").is_err());
        assert!(parse_symfn(r#"{"x": {}}"#).is_err());
        assert!(parse_symfn(r#"{"h": {"2.1": 3}}"#).is_err());
        assert!(parse_symfn(r#"{"h": {}, "e": {}}"#).is_err());
        assert!(parse_symfn("{").is_err());
    }

    #[test]
    fn serialization_is_in_canonical_order() {
        // degree first, then reverse-lexicographic inside a degree
        let f = parse_symfn(r#"{"m": {"1.1.1": "1", "3": "2", "": "5", "2.1": "1/2"}}"#).unwrap();
        let text = serde_json::to_string(&symfn_to_json(&f)).unwrap();
        assert_eq!(text, r#"{"m":{"":"5","3":"2","2.1":"1/2","1.1.1":"1"}}"#);
    }
}
