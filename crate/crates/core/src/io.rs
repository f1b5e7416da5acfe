//! Canonical JSON documents.
//!
//! Field elements are written as integer codes. Subspaces are written by
//! their reduced row echelon basis, and codes in sorted order, so emitting a
//! document is canonical.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cdc::ConstantDimensionCode;
use crate::error::{Error, Result};
use crate::flags::{Flag, FlagCode, TypeVector};
use crate::genset::CodeProduct;
use crate::gf::{Field, FieldAutomorphism};
use crate::grassmann::{AmbientSpace, GroupElement, Subspace};
use crate::linalg::Matrix;

pub const FORMAT_VERSION: &str = "flagcode/1";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldRepr {
    p: u32,
    e: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubspaceRepr {
    k: usize,
    basis: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CdcRepr {
    q: usize,
    n: usize,
    k: usize,
    words: Vec<SubspaceRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum PayloadRepr {
    Cdc {
        q: usize,
        n: usize,
        k: usize,
        words: Vec<SubspaceRepr>,
    },
    Flagcode {
        q: usize,
        n: usize,
        #[serde(rename = "type")]
        typevec: Vec<usize>,
        flags: Vec<Vec<SubspaceRepr>>,
    },
    Codeproduct {
        q: usize,
        n: usize,
        components: Vec<CdcRepr>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocumentRepr {
    format_version: String,
    field: FieldRepr,
    n: usize,
    payload: PayloadRepr,
}

/// Any of the three payload kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Cdc(ConstantDimensionCode),
    FlagCode(FlagCode),
    Product(CodeProduct),
}

impl Document {
    pub fn ambient(&self) -> AmbientSpace {
        match self {
            Document::Cdc(c) => c.ambient(),
            Document::FlagCode(c) => c.ambient().clone(),
            Document::Product(p) => p.typevec().ambient().clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Cdc(_) => "cdc",
            Document::FlagCode(_) => "flagcode",
            Document::Product(_) => "codeproduct",
        }
    }

    pub fn to_value(&self) -> Value {
        let amb = self.ambient();
        let f = amb.field();
        let payload = match self {
            Document::Cdc(c) => cdc_value(c),
            Document::FlagCode(c) => flagcode_value(c),
            Document::Product(p) => json!({
                "kind": "codeproduct",
                "q": f.q(),
                "n": amb.n(),
                "components": p.components().iter().map(cdc_body).collect::<Vec<_>>(),
            }),
        };
        json!({
            "format_version": FORMAT_VERSION,
            "field": {"p": f.p(), "e": f.e()},
            "n": amb.n(),
            "payload": payload,
        })
    }

    /// Pretty-printed canonical JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        to_pretty(&self.to_value())
    }

    pub fn from_json(text: &str) -> Result<Document> {
        let repr: DocumentRepr = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if repr.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported format_version {:?}",
                repr.format_version
            )));
        }
        let field = Field::new(repr.field.p, repr.field.e)?;
        let amb = AmbientSpace::new(&field, repr.n)?;
        let check = |q: usize, n: usize| -> Result<()> {
            if q != field.q() || n != repr.n {
                return Err(Error::Parse(format!(
                    "payload declares q={q}, n={n} but the document has q={}, n={}",
                    field.q(),
                    repr.n
                )));
            }
            Ok(())
        };
        match repr.payload {
            PayloadRepr::Cdc { q, n, k, words } => {
                check(q, n)?;
                Ok(Document::Cdc(parse_cdc(&amb, k, &words)?))
            }
            PayloadRepr::Flagcode { q, n, typevec, flags } => {
                check(q, n)?;
                let tv = TypeVector::new(&amb, &typevec)?;
                let flags = flags
                    .iter()
                    .map(|f| {
                        let spaces = f.iter().map(|s| parse_subspace(&amb, s)).collect::<Result<Vec<_>>>()?;
                        Flag::new(&tv, spaces)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Document::FlagCode(FlagCode::new(&tv, flags)?))
            }
            PayloadRepr::Codeproduct { q, n, components } => {
                check(q, n)?;
                let comps = components
                    .iter()
                    .map(|c| {
                        check(c.q, c.n)?;
                        parse_cdc(&amb, c.k, &c.words)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Document::Product(CodeProduct::new(comps)?))
            }
        }
    }
}

fn parse_subspace(amb: &AmbientSpace, s: &SubspaceRepr) -> Result<Subspace> {
    for row in &s.basis {
        if row.len() != amb.n() {
            return Err(Error::DimensionMismatch {
                expected: amb.n(),
                got: row.len(),
            });
        }
    }
    let u = Subspace::from_vectors(amb, &s.basis)?;
    if u.dim() != s.k {
        return Err(Error::DimensionMismatch {
            expected: s.k,
            got: u.dim(),
        });
    }
    Ok(u)
}

fn parse_cdc(amb: &AmbientSpace, k: usize, words: &[SubspaceRepr]) -> Result<ConstantDimensionCode> {
    let words = words
        .iter()
        .map(|w| parse_subspace(amb, w))
        .collect::<Result<Vec<_>>>()?;
    let c = ConstantDimensionCode::new(words)?;
    if c.k() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            got: c.k(),
        });
    }
    Ok(c)
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn subspace_value(u: &Subspace) -> Value {
    json!({"k": u.dim(), "basis": u.basis().to_rows()})
}

pub fn flag_value(f: &Flag) -> Value {
    Value::Array(f.spaces().iter().map(subspace_value).collect())
}

fn cdc_body(c: &ConstantDimensionCode) -> Value {
    json!({
        "q": c.ambient().field().q(),
        "n": c.n(),
        "k": c.k(),
        "words": c.words().iter().map(subspace_value).collect::<Vec<_>>(),
    })
}

/// A cdc payload object, including its `kind` tag.
pub fn cdc_value(c: &ConstantDimensionCode) -> Value {
    let mut v = cdc_body(c);
    v["kind"] = json!("cdc");
    v
}

/// A flag code payload object, including its `kind` tag.
pub fn flagcode_value(c: &FlagCode) -> Value {
    json!({
        "kind": "flagcode",
        "q": c.ambient().field().q(),
        "n": c.ambient().n(),
        "type": c.typevec().dims(),
        "flags": c.flags().iter().map(flag_value).collect::<Vec<_>>(),
    })
}

pub fn group_element_value(g: &GroupElement) -> Value {
    json!({"matrix": g.matrix().to_rows(), "frobenius_power": g.automorphism().power()})
}

pub fn group_element_from_value(field: &Field, v: &Value) -> Result<GroupElement> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Repr {
        matrix: Vec<Vec<u64>>,
        frobenius_power: u32,
    }
    let r: Repr = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let n = r.matrix.len();
    let m = Matrix::from_rows(field, n, &r.matrix)?;
    let phi = FieldAutomorphism::new(field, r.frobenius_power)?;
    GroupElement::semilinear(m, phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = r#"{
      "format_version": "flagcode/1",
      "field": {"p": 2, "e": 1},
      "n": 3,
      "payload": {"kind": "flagcode", "q": 2, "n": 3, "type": [1, 2],
        "flags": [
          [{"k": 1, "basis": [[0, 1, 0]]}, {"k": 2, "basis": [[0, 1, 1], [0, 0, 1]]}],
          [{"k": 1, "basis": [[1, 0, 0]]}, {"k": 2, "basis": [[1, 0, 0], [0, 1, 0]]}]
        ]}
    }"#;

    #[test]
    fn round_trip_is_canonical() {
        let doc = Document::from_json(DOC).unwrap();
        let text = doc.to_json();
        let again = Document::from_json(&text).unwrap();
        assert_eq!(again, doc);
        assert_eq!(again.to_json(), text);
    }

    #[test]
    fn permuted_input_emits_identically() {
        let permuted = DOC.replace(
            r#"[{"k": 1, "basis": [[0, 1, 0]]}, {"k": 2, "basis": [[0, 1, 1], [0, 0, 1]]}],
          [{"k": 1, "basis": [[1, 0, 0]]}, {"k": 2, "basis": [[1, 0, 0], [0, 1, 0]]}]"#,
            r#"[{"k": 1, "basis": [[1, 0, 0]]}, {"k": 2, "basis": [[1, 1, 0], [0, 1, 0]]}],
          [{"k": 1, "basis": [[0, 1, 0]]}, {"k": 2, "basis": [[0, 1, 0], [0, 0, 1]]}]"#,
        );
        assert_ne!(permuted, DOC);
        let a = Document::from_json(DOC).unwrap().to_json();
        let b = Document::from_json(&permuted).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(matches!(Document::from_json(""), Err(Error::Parse(_))));
        assert!(matches!(Document::from_json("{}"), Err(Error::Parse(_))));
        let bad_version = DOC.replace("flagcode/1", "flagcode/9");
        assert!(matches!(Document::from_json(&bad_version), Err(Error::Parse(_))));
        let bad_q = DOC.replace("\"q\": 2", "\"q\": 3");
        assert!(matches!(Document::from_json(&bad_q), Err(Error::Parse(_))));
        let wrong_k = DOC.replace(
            "{\"k\": 1, \"basis\": [[0, 1, 0]]}",
            "{\"k\": 2, \"basis\": [[0, 1, 0]]}",
        );
        assert!(matches!(
            Document::from_json(&wrong_k),
            Err(Error::DimensionMismatch { .. })
        ));
        let not_nested = DOC.replace("[[0, 1, 1], [0, 0, 1]]", "[[1, 0, 0], [0, 0, 1]]");
        assert!(matches!(Document::from_json(&not_nested), Err(Error::NotNested { .. })));
        let empty = DOC.replace(
            r#"[{"k": 1, "basis": [[0, 1, 0]]}, {"k": 2, "basis": [[0, 1, 1], [0, 0, 1]]}],
          [{"k": 1, "basis": [[1, 0, 0]]}, {"k": 2, "basis": [[1, 0, 0], [0, 1, 0]]}]"#,
            "",
        );
        assert_eq!(Document::from_json(&empty).unwrap_err(), Error::EmptyCode);
    }

    #[test]
    fn group_elements_round_trip() {
        let f = Field::with_order(4).unwrap();
        let g = GroupElement::semilinear(
            Matrix::from_rows(&f, 2, &[vec![0, 2], vec![1, 0]]).unwrap(),
            FieldAutomorphism::new(&f, 1).unwrap(),
        )
        .unwrap();
        let v = group_element_value(&g);
        assert_eq!(group_element_from_value(&f, &v).unwrap(), g);
    }
}
