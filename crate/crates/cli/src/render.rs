//! Table forms of the reports.

use std::fmt::Write;
use std::path::Path;

use qckit::cyclic::IsodualCyclic;
use qckit::format::elem_json;
use qckit::quasi_cyclic::{ConstituentDecomposition, EnumerationReport, IsodualQc, IsodualVerdict, SelfDualReport, SlotKind};
use qckit::{FactorClassification, LinearCode, MonomialMap};

fn matrix(out: &mut String, code: &LinearCode, indent: &str) {
    if code.generator().is_empty() {
        let _ = writeln!(out, "{indent}(zero code)");
    }
    for row in code.generator() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{indent}[{}]", cells.join(" "));
    }
}

pub fn code(title: &str, c: &LinearCode) -> String {
    let mut out = format!("{title}: [{}, {}] over {}\n", c.len(), c.dim(), c.field());
    matrix(&mut out, c, "  ");
    out
}

pub fn factor(c: &FactorClassification) -> String {
    let mut out = format!("Y^{} - 1 over F_{}: {} factors (s = {}, t = {})\n", c.m, c.q(), c.r(), c.s(), c.t());
    let _ = writeln!(out, "  delta = {}", elem_json(&c.field, c.delta));
    for g in &c.self_reciprocal {
        let _ = writeln!(out, "  self-reciprocal  {}", g.display("Y"));
    }
    for (h, hs) in &c.pairs {
        let _ = writeln!(out, "  pair             {}  |  {}", h.display("Y"), hs.display("Y"));
    }
    out
}

pub fn decomposition(d: &ConstituentDecomposition) -> String {
    let mut out = factor(d.classification());
    let _ = writeln!(out, "constituents (index {}):", d.l);
    for (i, (slot, c)) in d.ring.slots().iter().zip(&d.comps).enumerate() {
        let kind = match slot.kind {
            SlotKind::SelfReciprocal => "self-reciprocal".to_string(),
            SlotKind::Pair { partner, .. } => format!("paired with slot {partner}"),
        };
        let _ = writeln!(out, "  slot {i}: {} ({kind}), dim {}", slot.modulus.display("Y"), c.dim());
        matrix(&mut out, c, "    ");
    }
    let _ = writeln!(out, "dimension over the base field: {}", d.base_dimension());
    out
}

pub fn dual(c: &LinearCode, output: Option<&Path>) -> String {
    let mut out = code("dual", c);
    if let Some(p) = output {
        let _ = writeln!(out, "written to {}", p.display());
    }
    out
}

pub fn selfdual(r: &SelfDualReport) -> String {
    format!(
        "self-dual: {} (componentwise {}, direct {})\n",
        if r.direct { "yes" } else { "no" },
        r.componentwise,
        r.direct
    )
}

fn perm_line(w: &MonomialMap) -> String {
    if w.is_permutation() {
        format!("perm {:?}", w.perm())
    } else {
        format!("perm {:?} diag {:?}", w.perm(), w.diag())
    }
}

pub fn verdict(v: &IsodualVerdict) -> String {
    let mut out = format!("{} ({})\n", v.result.name(), v.strategy.name());
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "  witness: {}", perm_line(w));
    }
    for c in &v.component_report {
        let eq = match c.equivalent {
            Some(true) => "equivalent",
            Some(false) => "not equivalent",
            None => "not searched",
        };
        let w = c.witness.as_ref().map(|w| format!(" by {:?}", w.perm())).unwrap_or_default();
        let _ = writeln!(
            out,
            "  slot {} {}: dim {} vs dual dim {}, {eq}{w}",
            c.slot,
            c.modulus.display("Y"),
            c.dim,
            c.dual_dim
        );
    }
    if let Some(n) = &v.note {
        let _ = writeln!(out, "  note: {n}");
    }
    out
}

pub fn equivalence(w: Option<&MonomialMap>, mode: &str) -> String {
    match w {
        Some(w) => format!("{mode} equivalent: {}\n", perm_line(w)),
        None => format!("not {mode} equivalent\n"),
    }
}

pub fn isodual_cyclic(c: &IsodualCyclic) -> String {
    let mut out = format!("{}\n", c.code);
    let _ = writeln!(out, "  self-dual: {}", c.self_dual);
    let _ = writeln!(out, "  witness onto the dual: {}", perm_line(&c.witness));
    out
}

pub fn isodual_qc(c: &IsodualQc) -> String {
    let mut out = code("quasi-cyclic code", c.code.code());
    let _ = write!(out, "permutation verdict: {}", verdict(&c.verdict));
    if let Some(b) = &c.bruteforce {
        let _ = write!(out, "exhaustive check: {}", verdict(b));
    }
    let _ = writeln!(out, "monomial witness onto the dual: {}", perm_line(&c.monomial_witness));
    out
}

pub fn enumeration(r: &EnumerationReport) -> String {
    let mut out = format!(
        "index p = {}, r = {} factors: {} selections (p^r = {}), {} distinct codes\n",
        r.p, r.r, r.tuples_counted, r.expected, r.distinct_codes
    );
    for e in &r.orbit {
        let _ = writeln!(out, "  {:?}  {:016x}", e.tuple, e.hash);
    }
    out
}
