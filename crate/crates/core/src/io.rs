//! JSON input documents and command reports.
//!
//! A document names a value of `n` and a map of arc sets:
//!
//! ```json
//! {"n": 3, "sets": {"X": {"explicit": [[-4,3],[-4,6]], "families": []}}}
//! ```
//!
//! Family entries are objects with a `kind` (`left_fan`, `right_fan`, `band`,
//! `half_left`, `half_right`) and integer parameters.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arc::{Arc, ModelParams};
use crate::arc_set::{ArcSet, FountainFamily};
use crate::error::{Error, Result};

/// Schema for every `--format json` report.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub n: ModelParams,
    pub sets: BTreeMap<String, ArcSet>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    n: i64,
    #[serde(default)]
    sets: BTreeMap<String, RawSet>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSet {
    #[serde(default)]
    explicit: Vec<[i64; 2]>,
    #[serde(default)]
    families: Vec<Value>,
}

fn invalid(locus: impl Into<String>, message: impl ToString) -> Error {
    Error::Validation {
        locus: locus.into(),
        message: message.to_string(),
    }
}

fn parse_set(name: &str, raw: RawSet, p: ModelParams) -> Result<ArcSet> {
    let mut set = ArcSet::empty(p);
    for (i, [t, u]) in raw.explicit.into_iter().enumerate() {
        let locus = format!("sets.{name}.explicit[{i}]");
        let arc = Arc::new(t, u).map_err(|e| invalid(&locus, e))?;
        set.insert(arc).map_err(|e| invalid(&locus, e))?;
    }
    for (i, v) in raw.families.into_iter().enumerate() {
        let locus = format!("sets.{name}.families[{i}]");
        let fam: FountainFamily = serde_json::from_value(v).map_err(|e| invalid(&locus, e))?;
        set.add_family(fam).map_err(|e| invalid(&locus, e))?;
    }
    Ok(set)
}

pub fn parse_document(bytes: &[u8]) -> Result<Document> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 0,
        column: e.valid_up_to(),
        message: "input is not valid UTF-8".into(),
    })?;
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let n = ModelParams::new(raw.n).map_err(|e| invalid("n", e))?;
    let mut sets = BTreeMap::new();
    for (name, rs) in raw.sets {
        let set = parse_set(&name, rs, n)?;
        sets.insert(name, set);
    }
    Ok(Document { n, sets })
}

impl Document {
    pub fn new(n: ModelParams) -> Self {
        Document {
            n,
            sets: BTreeMap::new(),
        }
    }

    pub fn set(&self, name: &str) -> Result<&ArcSet> {
        self.sets
            .get(name)
            .ok_or_else(|| invalid(format!("sets.{name}"), "no such set in the document"))
    }

    /// Pretty-printed JSON; `parse_document` reads it back unchanged.
    pub fn to_json(&self) -> String {
        let raw = RawDocument {
            n: self.n.n(),
            sets: self
                .sets
                .iter()
                .map(|(k, s)| {
                    let rs = RawSet {
                        explicit: s.explicit().iter().map(|a| [a.t(), a.u()]).collect(),
                        families: s
                            .families()
                            .iter()
                            .map(|f| serde_json::to_value(f).expect("families serialize"))
                            .collect(),
                    };
                    (k.clone(), rs)
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("documents serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// A computation finished; there was nothing to pass or fail.
    Ok,
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_check(passed: bool) -> Self {
        if passed {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// The envelope printed by every command in JSON mode.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub verdict: Verdict,
    pub witnesses: Vec<Value>,
    pub result: Value,
    pub timing_ms: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = r#"{
  "n": 3,
  "sets": {
    "X": {"explicit": [[-4,3],[-4,6]], "families": []},
    "D": {"explicit": [[-4,6]]}
  }
}"#;

    #[test]
    fn parses_example() {
        let doc = parse_document(EXAMPLE.as_bytes()).unwrap();
        assert_eq!(doc.n.n(), 3);
        assert_eq!(doc.sets.len(), 2);
        assert_eq!(doc.set("X").unwrap().explicit().len(), 2);
        assert!(doc.set("Y").is_err());
    }

    #[test]
    fn round_trip() {
        let mut doc = parse_document(EXAMPLE.as_bytes()).unwrap();
        let mut y = ArcSet::empty(doc.n);
        y.add_family(FountainFamily::Band {
            k_max: -5,
            l_min: 6,
        })
        .unwrap();
        y.add_family(FountainFamily::RightFan { p: -4, u_min: 9 })
            .unwrap();
        doc.sets.insert("Y".into(), y);
        let text = doc.to_json();
        assert_eq!(parse_document(text.as_bytes()).unwrap(), doc);
    }

    #[test]
    fn rejects_non_admissible_arc() {
        let e = parse_document(br#"{"n":3,"sets":{"X":{"explicit":[[3,6]]}}}"#).unwrap_err();
        match e {
            Error::Validation { locus, message } => {
                assert_eq!(locus, "sets.X.explicit[0]");
                assert!(message.contains("(3,6)"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_kind() {
        let e = parse_document(br#"{"n":3,"sets":{"X":{"families":[{"kind":"spiral","p":1}]}}}"#)
            .unwrap_err();
        assert!(matches!(e, Error::Validation { ref locus, .. } if locus == "sets.X.families[0]"));
    }

    #[test]
    fn rejects_bad_family_parameters() {
        let e = parse_document(
            br#"{"n":3,"sets":{"X":{"families":[{"kind":"band","k_max":4,"l_min":1}]}}}"#,
        )
        .unwrap_err();
        assert!(matches!(e, Error::Validation { .. }));
    }

    #[test]
    fn malformed_json_has_position() {
        let e = parse_document(b"{\n  \"n\": 3,\n  \"sets\": [\n").unwrap_err();
        match e {
            Error::Parse { line, .. } => assert!(line >= 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_document(br#"{"n":0}"#),
            Err(Error::Validation { .. })
        ));
    }
}
