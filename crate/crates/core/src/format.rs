//! The `qckit-1` JSON format: code files and the report emitters shared by
//! every front end.
//!
//! Base-field elements are written as a bare integer over a prime field and
//! as an ascending coefficient array over `F_p` otherwise; both forms are
//! accepted on input. Elements of constituent fields are arrays of base-field
//! elements.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cyclic::{CyclicCode, IsodualCyclic};
use crate::error::{Error, Result};
use crate::galois::{Elem, Field, FieldKind};
use crate::linear_code::{LinearCode, MonomialMap};
use crate::polynomial::{FactorClassification, Poly};
use crate::quasi_cyclic::{
    ConstituentDecomposition, EnumerationReport, IsodualQc, IsodualVerdict, QuasiCyclicCode, SelfDualReport, SlotKind,
};

pub const FORMAT_VERSION: &str = "qckit-1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemRepr {
    Int(u32),
    Coeffs(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyclicBlock {
    pub n: usize,
    pub g: Vec<ElemRepr>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QcBlock {
    pub l: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub format_version: String,
    pub field: FieldSpec,
    pub n: usize,
    pub generators: Vec<Vec<ElemRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<CyclicBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qc: Option<QcBlock>,
}

/// A validated code file.
#[derive(Debug, Clone)]
pub struct LoadedCode {
    pub field: Field,
    pub code: LinearCode,
    pub cyclic: Option<CyclicCode>,
    pub qc: Option<QuasiCyclicCode>,
}

fn format_err(msg: impl std::fmt::Display) -> Error {
    Error::Format(format!("{FORMAT_VERSION}: {msg}"))
}

impl FieldSpec {
    pub fn of(field: &Field) -> Result<FieldSpec> {
        match field.kind() {
            FieldKind::Prime => Ok(FieldSpec { p: field.p(), e: 1, modulus: None }),
            FieldKind::Extension if field.base().map(|b| b.kind()) == Some(FieldKind::Prime) => Ok(FieldSpec {
                p: field.p(),
                e: field.degree() as u32,
                modulus: Some(field.modulus().to_vec()),
            }),
            _ => Err(format_err(format!("{field} is not a base field and has no code-file form"))),
        }
    }

    pub fn build(&self) -> Result<Field> {
        match (&self.modulus, self.e) {
            (_, 0) => Err(format_err("field degree e must be at least 1")),
            (Some(_), 1) => Err(format_err("modulus must be omitted when e = 1")),
            (None, e) => Field::new(self.p, e),
            (Some(modulus), e) => {
                if modulus.len() != e as usize + 1 {
                    return Err(format_err(format!("modulus has degree {} but e = {e}", modulus.len() as i64 - 1)));
                }
                Field::from_modulus(self.p, modulus)
            }
        }
    }
}

/// Serialization of a base-field element.
pub fn elem_repr(field: &Field, x: Elem) -> ElemRepr {
    if field.kind() == FieldKind::Prime {
        ElemRepr::Int(x)
    } else {
        ElemRepr::Coeffs(field.prime_coeffs(x))
    }
}

pub fn parse_elem(field: &Field, repr: &ElemRepr) -> Result<Elem> {
    match repr {
        ElemRepr::Int(x) if field.contains(*x) => Ok(*x),
        ElemRepr::Int(x) => Err(format_err(format!("element {x} is outside F_{}", field.q()))),
        ElemRepr::Coeffs(cs) => {
            if cs.len() > field.degree() || cs.iter().any(|&c| c >= field.p()) {
                return Err(format_err(format!("{cs:?} is not a coefficient vector of F_{}", field.q())));
            }
            Ok(field.from_prime_coeffs(cs))
        }
    }
}

impl CodeFile {
    pub fn from_linear(code: &LinearCode) -> Result<CodeFile> {
        let field = code.field();
        Ok(CodeFile {
            format_version: FORMAT_VERSION.into(),
            field: FieldSpec::of(field)?,
            n: code.len(),
            generators: code
                .generator()
                .iter()
                .map(|row| row.iter().map(|&x| elem_repr(field, x)).collect())
                .collect(),
            cyclic: None,
            qc: None,
        })
    }

    pub fn from_cyclic(code: &CyclicCode) -> Result<CodeFile> {
        let mut file = Self::from_linear(&code.to_linear())?;
        file.cyclic = Some(CyclicBlock {
            n: code.len(),
            g: code.generator().coeffs().iter().map(|&c| elem_repr(code.field(), c)).collect(),
        });
        Ok(file)
    }

    pub fn from_qc(code: &QuasiCyclicCode) -> Result<CodeFile> {
        let mut file = Self::from_linear(code.code())?;
        file.qc = Some(QcBlock { l: code.index(), m: code.co_index() });
        Ok(file)
    }

    pub fn parse(text: &str) -> Result<CodeFile> {
        let file: CodeFile = serde_json::from_str(text).map_err(format_err)?;
        if file.format_version != FORMAT_VERSION {
            return Err(format_err(format!("unsupported format_version {:?}", file.format_version)));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("code files always serialize");
        s.push('\n');
        s
    }

    /// Builds the field and code and checks the structure blocks against
    /// the generators.
    pub fn load(&self) -> Result<LoadedCode> {
        let field = self.field.build()?;
        let rows = self
            .generators
            .iter()
            .map(|row| row.iter().map(|x| parse_elem(&field, x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let code = LinearCode::from_rows(&field, self.n, &rows)?;
        let cyclic = match &self.cyclic {
            None => None,
            Some(block) => {
                if block.n != self.n {
                    return Err(format_err(format!("cyclic length {} differs from n = {}", block.n, self.n)));
                }
                let g = block.g.iter().map(|x| parse_elem(&field, x)).collect::<Result<Vec<_>>>()?;
                let c = CyclicCode::unchecked_length(&field, self.n, &Poly::new(&field, g))?;
                if c.to_linear() != code {
                    return Err(format_err("cyclic generator does not match the generator matrix"));
                }
                Some(c)
            }
        };
        let qc = match self.qc {
            None => None,
            Some(QcBlock { l, m }) => {
                if l.checked_mul(m) != Some(self.n) {
                    return Err(format_err(format!("l m = {l} x {m} differs from n = {}", self.n)));
                }
                Some(QuasiCyclicCode::from_linear(code.clone(), l)?)
            }
        };
        Ok(LoadedCode { field, code, cyclic, qc })
    }
}

/// Parses and validates a code file in one step.
pub fn load_code(text: &str) -> Result<LoadedCode> {
    CodeFile::parse(text)?.load()
}

// Report emitters.

/// Any element, recursing through constituent fields.
pub fn elem_json(field: &Field, x: Elem) -> Value {
    match field.base() {
        None => json!(x),
        Some(base) if field.kind() == FieldKind::Constituent => {
            Value::Array(field.coeffs(x).iter().map(|&c| elem_json(base, c)).collect())
        }
        Some(_) => json!(field.prime_coeffs(x)),
    }
}

pub fn field_json(field: &Field) -> Value {
    match (field.kind(), field.base()) {
        (FieldKind::Constituent, Some(base)) => json!({
            "base": field_json(base),
            "modulus": field.modulus().iter().map(|&c| elem_json(base, c)).collect::<Vec<_>>(),
            "degree": field.degree(),
            "conjugation": field.has_conjugation(),
        }),
        _ => serde_json::to_value(FieldSpec::of(field).expect("prime or prime extension")).expect("serializable"),
    }
}

pub fn poly_json(f: &Poly) -> Value {
    Value::Array(f.coeffs().iter().map(|&c| elem_json(f.field(), c)).collect())
}

pub fn matrix_json(code: &LinearCode) -> Value {
    let field = code.field();
    Value::Array(
        code.generator()
            .iter()
            .map(|row| Value::Array(row.iter().map(|&x| elem_json(field, x)).collect()))
            .collect(),
    )
}

pub fn map_json(map: &MonomialMap, field: &Field) -> Value {
    json!({
        "perm": map.perm(),
        "diag": map.diag().iter().map(|&d| elem_json(field, d)).collect::<Vec<_>>(),
        "is_permutation": map.is_permutation(),
        "is_identity": map.is_identity(),
    })
}

pub fn code_json(code: &LinearCode) -> Value {
    json!({
        "field": field_json(code.field()),
        "n": code.len(),
        "k": code.dim(),
        "generators": matrix_json(code),
    })
}

pub fn factor_json(c: &FactorClassification) -> Value {
    let var = "Y";
    json!({
        "q": c.q(),
        "m": c.m,
        "delta": elem_json(&c.field, c.delta),
        "self_reciprocal": c.self_reciprocal.iter().map(poly_json).collect::<Vec<_>>(),
        "pairs": c.pairs.iter().map(|(h, hs)| json!([poly_json(h), poly_json(hs)])).collect::<Vec<_>>(),
        "s": c.s(),
        "t": c.t(),
        "r": c.r(),
        "display": {
            "self_reciprocal": c.self_reciprocal.iter().map(|g| g.display(var)).collect::<Vec<_>>(),
            "pairs": c.pairs.iter().map(|(h, hs)| [h.display(var), hs.display(var)]).collect::<Vec<_>>(),
        },
    })
}

fn kind_json(kind: SlotKind) -> Value {
    match kind {
        SlotKind::SelfReciprocal => json!({"type": "self_reciprocal"}),
        SlotKind::Pair { partner, first } => {
            json!({"type": if first { "pair_first" } else { "pair_second" }, "partner": partner})
        }
    }
}

pub fn decomposition_json(d: &ConstituentDecomposition) -> Value {
    let constituents: Vec<Value> = d
        .ring
        .slots()
        .iter()
        .zip(&d.comps)
        .enumerate()
        .map(|(i, (slot, c))| {
            json!({
                "slot": i,
                "modulus": poly_json(&slot.modulus),
                "modulus_display": slot.modulus.display("Y"),
                "kind": kind_json(slot.kind),
                "field": field_json(&slot.field),
                "dim": c.dim(),
                "generators": matrix_json(c),
            })
        })
        .collect();
    json!({
        "l": d.l,
        "m": d.ring.m(),
        "classification": factor_json(d.classification()),
        "constituents": constituents,
        "base_dimension": d.base_dimension(),
    })
}

pub fn selfdual_json(report: &SelfDualReport) -> Value {
    json!({
        "selfdual": report.direct,
        "componentwise": report.componentwise,
        "direct": report.direct,
        "agree": report.agree(),
    })
}

pub fn verdict_json(v: &IsodualVerdict, field: &Field) -> Value {
    let components: Vec<Value> = v
        .component_report
        .iter()
        .map(|c| {
            json!({
                "slot": c.slot,
                "modulus": poly_json(&c.modulus),
                "kind": kind_json(c.kind),
                "dim": c.dim,
                "dual_dim": c.dual_dim,
                "equivalent": c.equivalent,
                "witness": c.witness.as_ref().map(|w| json!(w.perm())),
            })
        })
        .collect();
    json!({
        "result": v.result.name(),
        "strategy": v.strategy.name(),
        "witness": v.witness.as_ref().map(|w| map_json(w, field)),
        "components": components,
        "note": v.note,
    })
}

pub fn isodual_cyclic_json(c: &IsodualCyclic) -> Value {
    json!({
        "code": serde_json::to_value(CodeFile::from_cyclic(&c.code).expect("base field")).expect("serializable"),
        "generator_display": c.code.generator().display("x"),
        "self_dual": c.self_dual,
        "witness": map_json(&c.witness, c.code.field()),
        "witness_kind": if c.witness.is_permutation() { "permutation" } else { "monomial" },
    })
}

pub fn isodual_qc_json(c: &IsodualQc) -> Value {
    let field = c.code.field();
    json!({
        "code": serde_json::to_value(CodeFile::from_qc(&c.code).expect("base field")).expect("serializable"),
        "permutation_verdict": verdict_json(&c.verdict, field),
        "bruteforce_verdict": c.bruteforce.as_ref().map(|v| verdict_json(v, field)),
        "monomial_witness": map_json(&c.monomial_witness, field),
    })
}

pub fn enumeration_json(r: &EnumerationReport) -> Value {
    let orbit: Vec<Value> = r
        .orbit
        .iter()
        .map(|e| json!({"tuple": e.tuple, "hash": format!("{:016x}", e.hash), "dim": e.code.dim()}))
        .collect();
    json!({
        "p": r.p,
        "r": r.r,
        "tuples_counted": r.tuples_counted,
        "expected": r.expected,
        "distinct_codes": r.distinct_codes,
        "orbit": orbit,
    })
}

pub fn error_json(e: &Error) -> Value {
    json!({"error": {"kind": e.kind(), "message": e.to_string(), "format_version": FORMAT_VERSION}})
}
