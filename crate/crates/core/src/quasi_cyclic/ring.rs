//! The splitting `F_q[Y]/(Y^m - 1) = prod_f F_q[Y]/(f)` and the constituent
//! codes of a quasi-cyclic code.

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::linear_code::LinearCode;
use crate::polynomial::{factor_cyclic_modulus, FactorClassification, Poly};

use super::{phi, phi_inv, QuasiCyclicCode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlotKind {
    SelfReciprocal,
    /// `h_j` (`first`) or `h_j*`, with the index of the other slot.
    Pair { partner: usize, first: bool },
}

/// One factor `f` of `Y^m - 1` with its local field `F_q[Y]/(f)`.
#[derive(Debug, Clone)]
pub struct Slot {
    pub modulus: Poly,
    pub field: Field,
    pub kind: SlotKind,
    /// `e_f = 1 mod f`, `0 mod (Y^m - 1)/f`.
    pub idempotent: Poly,
    /// Class of `Y^-1 = Y^(m-1)` in the local field.
    pub y_inv: Elem,
}

impl Slot {
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct QcRing {
    base: Field,
    m: usize,
    classification: FactorClassification,
    slots: Vec<Slot>,
}

impl QcRing {
    pub fn new(base: &Field, m: usize) -> Result<QcRing> {
        let classification = factor_cyclic_modulus(base, m)?;
        let modulus = Poly::x_pow_minus_one(base, m);
        let s = classification.s();
        let mut slots = Vec::with_capacity(classification.r());
        for (idx, f) in classification.factors().into_iter().enumerate() {
            let kind = if idx < s {
                SlotKind::SelfReciprocal
            } else {
                let first = (idx - s) % 2 == 0;
                SlotKind::Pair { partner: if first { idx + 1 } else { idx - 1 }, first }
            };
            let field = Field::constituent(base, &f)?;
            let cofactor = modulus.exact_div(&f)?.expect("factor divides Y^m - 1");
            let u = cofactor.inverse_mod(&f)?.expect("distinct factors are coprime");
            let idempotent = u.mul(&cofactor).rem(&modulus)?;
            let y_inv = field.pow(field.variable(), m as u64 - 1);
            slots.push(Slot { modulus: f, field, kind, idempotent, y_inv });
        }
        Ok(QcRing { base: base.clone(), m, classification, slots })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn classification(&self) -> &FactorClassification {
        &self.classification
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// `a mod f` as an element of the local field at `slot`.
    pub fn reduce(&self, slot: usize, a: &Poly) -> Elem {
        let s = &self.slots[slot];
        let r = a.rem(&s.modulus).expect("nonzero modulus");
        s.field.from_coeffs(r.coeffs())
    }

    /// The local element as a polynomial of degree below `deg f`.
    pub fn lift(&self, slot: usize, x: Elem) -> Poly {
        Poly::new(&self.base, self.slots[slot].field.coeffs(x))
    }

    /// `a(Y) -> a(Y^-1)` from the field at `from` into the field at `to`.
    /// Between the two slots of a pair this is the field isomorphism that
    /// identifies them; on a self-reciprocal slot it is the conjugation.
    pub fn transfer(&self, from: usize, to: usize, x: Elem) -> Elem {
        let target = &self.slots[to];
        self.lift(from, x).eval_in(&target.field, target.y_inv)
    }

    pub fn transfer_code(&self, from: usize, to: usize, code: &LinearCode) -> LinearCode {
        code.map_entries(&self.slots[to].field, |x| self.transfer(from, to, x))
    }

    /// Constituents of a quasi-cyclic code with co-index `m` over the base.
    pub fn decompose(&self, c: &QuasiCyclicCode) -> Result<ConstituentDecomposition> {
        if c.field() != &self.base {
            return Err(Error::FieldMismatch);
        }
        if c.co_index() != self.m {
            return Err(Error::ShapeMismatch(format!("co-index {} but ring has m = {}", c.co_index(), self.m)));
        }
        let l = c.index();
        let tuples: Vec<Vec<Poly>> = c
            .code()
            .generator()
            .iter()
            .map(|row| phi(&self.base, row, l, self.m))
            .collect::<Result<_>>()?;
        let comps = (0..self.slots.len())
            .map(|slot| {
                let rows: Vec<Vec<Elem>> =
                    tuples.iter().map(|t| t.iter().map(|cj| self.reduce(slot, cj)).collect()).collect();
                LinearCode::from_rows(&self.slots[slot].field, l, &rows).expect("rows have length l")
            })
            .collect();
        Ok(ConstituentDecomposition { ring: self.clone(), l, comps })
    }

    /// Reassembles a quasi-cyclic code from one length-`l` code per slot.
    pub fn reconstruct(&self, l: usize, comps: &[LinearCode]) -> Result<QuasiCyclicCode> {
        if comps.len() != self.slots.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} constituents for {} factors",
                comps.len(),
                self.slots.len()
            )));
        }
        let modulus = Poly::x_pow_minus_one(&self.base, self.m);
        let mut rows = Vec::new();
        for (slot, (s, comp)) in self.slots.iter().zip(comps).enumerate() {
            if comp.len() != l || comp.field() != &s.field {
                return Err(Error::ShapeMismatch(format!("constituent {slot} has the wrong length or field")));
            }
            let y = s.field.variable();
            for v in comp.generator() {
                let mut w = v.clone();
                for _ in 0..s.degree() {
                    let lifted: Vec<Poly> = w
                        .iter()
                        .map(|&x| self.lift(slot, x).mul(&s.idempotent).rem(&modulus))
                        .collect::<Result<_>>()?;
                    rows.push(phi_inv(&self.base, &lifted, self.m)?);
                    w.iter_mut().for_each(|x| *x = s.field.mul(*x, y));
                }
            }
        }
        let code = LinearCode::from_rows(&self.base, l * self.m, &rows)?;
        Ok(QuasiCyclicCode::from_parts_unchecked(l, self.m, code))
    }

    /// The constituents of the Euclidean dual: Hermitian duals on
    /// self-reciprocal slots, and on a pair `(h, h*)` the dual of the code at
    /// `h*` carried over to `h` and vice versa.
    pub fn dual_constituents(&self, comps: &[LinearCode]) -> Vec<LinearCode> {
        self.slots
            .iter()
            .enumerate()
            .map(|(slot, s)| match s.kind {
                SlotKind::SelfReciprocal => comps[slot].hermitian_dual(),
                SlotKind::Pair { partner, .. } => {
                    self.transfer_code(partner, slot, &comps[partner].euclidean_dual())
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct ConstituentDecomposition {
    pub ring: QcRing,
    pub l: usize,
    /// One code per slot, in the order `g_1..g_s, h_1, h_1*, ..., h_t, h_t*`.
    pub comps: Vec<LinearCode>,
}

impl ConstituentDecomposition {
    pub fn classification(&self) -> &FactorClassification {
        self.ring.classification()
    }

    fn s(&self) -> usize {
        self.ring.classification.s()
    }

    pub fn fields_g(&self) -> Vec<&Field> {
        self.ring.slots[..self.s()].iter().map(|s| &s.field).collect()
    }

    pub fn fields_h(&self) -> Vec<(&Field, &Field)> {
        self.ring.slots[self.s()..].chunks(2).map(|p| (&p[0].field, &p[1].field)).collect()
    }

    pub fn comps_g(&self) -> &[LinearCode] {
        &self.comps[..self.s()]
    }

    pub fn comps_h(&self) -> Vec<(&LinearCode, &LinearCode)> {
        self.comps[self.s()..].chunks(2).map(|p| (&p[0], &p[1])).collect()
    }

    /// `sum_f deg(f) dim(C_f)`, the dimension over the base field.
    pub fn base_dimension(&self) -> usize {
        self.ring.slots.iter().zip(&self.comps).map(|(s, c)| s.degree() * c.dim()).sum()
    }

    pub fn reconstruct(&self) -> Result<QuasiCyclicCode> {
        self.ring.reconstruct(self.l, &self.comps)
    }

    pub fn dual(&self) -> ConstituentDecomposition {
        ConstituentDecomposition { ring: self.ring.clone(), l: self.l, comps: self.ring.dual_constituents(&self.comps) }
    }
}

/// Constituents of `c` in a freshly built ring.
pub fn crt_decompose(c: &QuasiCyclicCode) -> Result<ConstituentDecomposition> {
    QcRing::new(c.field(), c.co_index())?.decompose(c)
}
