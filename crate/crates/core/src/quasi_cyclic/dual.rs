//! Duals, self-duality and the self-dual construction.

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::galois::{find_sqrt_minus_one, Field};
use crate::linear_code::LinearCode;

use super::ring::{QcRing, SlotKind};
use super::QuasiCyclicCode;

impl QuasiCyclicCode {
    /// The Euclidean dual, computed from the kernel and from the
    /// constituents; the two must agree.
    pub fn dual(&self) -> Result<QuasiCyclicCode> {
        let ring = QcRing::new(self.field(), self.co_index())?;
        self.dual_in(&ring)
    }

    pub fn dual_in(&self, ring: &QcRing) -> Result<QuasiCyclicCode> {
        let kernel = self.code().euclidean_dual();
        let via_constituents = ring.decompose(self)?.dual().reconstruct()?;
        if via_constituents.code() != &kernel {
            return Err(Error::DualMismatch);
        }
        Ok(via_constituents)
    }

    pub fn selfdual_report(&self) -> Result<SelfDualReport> {
        let ring = QcRing::new(self.field(), self.co_index())?;
        self.selfdual_report_in(&ring)
    }

    pub fn selfdual_report_in(&self, ring: &QcRing) -> Result<SelfDualReport> {
        let d = ring.decompose(self)?;
        let mut componentwise = true;
        for (slot, s) in ring.slots().iter().enumerate() {
            let c = &d.comps[slot];
            componentwise &= match s.kind {
                SlotKind::SelfReciprocal => *c == c.hermitian_dual(),
                SlotKind::Pair { partner, first: false } => {
                    *c == ring.transfer_code(partner, slot, &d.comps[partner].euclidean_dual())
                }
                SlotKind::Pair { first: true, .. } => true,
            };
        }
        let direct = *self.code() == self.code().euclidean_dual();
        Ok(SelfDualReport { componentwise, direct })
    }

    /// Whether the code equals its dual; the componentwise criterion and the
    /// direct comparison must agree.
    pub fn is_selfdual(&self) -> Result<bool> {
        let r = self.selfdual_report()?;
        if !r.agree() {
            return Err(Error::RouteMismatch("componentwise self-duality disagrees with C = C^perp"));
        }
        Ok(r.direct)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfDualReport {
    /// Hermitian self-dual on every self-reciprocal slot and `C'' = C'^perp`
    /// on every pair.
    pub componentwise: bool,
    /// `C = C^perp` on the full code.
    pub direct: bool,
}

impl SelfDualReport {
    pub fn agree(&self) -> bool {
        self.componentwise == self.direct
    }
}

/// Whether a self-dual index-`l` quasi-cyclic code over `F_q` exists (for
/// any admissible `m`): `l` even and `-1` a square in `F_q`. The arithmetic
/// condition on `(p, e)` and the search for `gamma^2 = -1` must agree.
pub fn selfdual_exists(q: u64, l: usize) -> Result<bool> {
    let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let arithmetic = p == 2 || p % 4 == 1 || e % 2 == 0;
    let field = Field::new(p as u32, e)?;
    let by_search = find_sqrt_minus_one(&field).is_some();
    if arithmetic != by_search {
        return Err(Error::RouteMismatch("square root of -1 search disagrees with the arithmetic condition"));
    }
    Ok(l % 2 == 0 && arithmetic)
}

/// Every constituent is spanned by `l/2` disjoint copies of `(1, gamma)`
/// with `gamma^2 = -1`; the result is verified self-dual.
pub fn construct_selfdual_qc(field: &Field, l: usize, m: usize) -> Result<QuasiCyclicCode> {
    if l == 0 || l % 2 == 1 {
        return Err(Error::BadParameters(format!("index must be even and positive, got {l}")));
    }
    let gamma = find_sqrt_minus_one(field).ok_or(Error::NoGamma { q: field.q() })?;
    let ring = QcRing::new(field, m)?;
    let rows: Vec<Vec<u32>> = (0..l / 2)
        .map(|k| {
            let mut row = vec![0; l];
            row[2 * k] = 1;
            row[2 * k + 1] = gamma;
            row
        })
        .collect();
    let comps: Vec<LinearCode> = ring
        .slots()
        .iter()
        .map(|s| LinearCode::from_rows(&s.field, l, &rows))
        .collect::<Result<_>>()?;
    let code = ring.reconstruct(l, &comps)?;
    let report = code.selfdual_report_in(&ring)?;
    if !(report.direct && report.componentwise) {
        return Err(Error::RouteMismatch("constructed code is not self-dual"));
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Elem;

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn abab() -> QuasiCyclicCode {
        QuasiCyclicCode::new(&f(2), 2, 3, &[vec![1, 0, 1, 0, 1, 0], vec![0, 1, 0, 1, 0, 1]]).unwrap()
    }

    #[test]
    fn dual_of_abab() {
        let c = abab();
        let d = c.dual().unwrap();
        assert_eq!(d.dim(), 4);
        let ring = QcRing::new(&f(2), 3).unwrap();
        let dd = ring.decompose(&d).unwrap();
        assert_eq!(dd.comps[0].dim(), 0);
        assert_eq!(dd.comps[1], LinearCode::full(&ring.slots()[1].field, 2));
        assert_eq!(d.dual().unwrap(), c);
    }

    #[test]
    fn dual_with_pairs_and_extension_base() {
        let f4 = Field::new(2, 2).unwrap();
        for (field, l, m) in [(f(2), 2, 7), (f(3), 1, 13), (f4.clone(), 2, 5), (f(5), 2, 3)] {
            let ring = QcRing::new(&field, m).unwrap();
            let mut rows = Vec::new();
            let n = l * m;
            let mut v: Vec<Elem> = (0..n).map(|k| ((k * k + 1) % field.q() as usize) as Elem).collect();
            for _ in 0..2 {
                rows.push(v.clone());
                v.rotate_left(1);
            }
            let fld = &field;
            let shifted: Vec<Vec<Elem>> = rows
                .iter()
                .flat_map(|r| (0..m).map(move |i| super::super::shift_map(n, i * l).apply_vec(fld, r)))
                .collect();
            let c = QuasiCyclicCode::new(&field, l, m, &shifted).unwrap();
            let d = c.dual_in(&ring).unwrap();
            assert_eq!(c.dim() + d.dim(), n);
        }
    }

    #[test]
    fn selfdual_examples() {
        let f2 = f(2);
        let ring = QcRing::new(&f2, 3).unwrap();
        let f4 = &ring.slots()[1].field;
        let omega = f4.variable();
        let comps = vec![
            LinearCode::from_rows(&ring.slots()[0].field, 2, &[vec![1, 1]]).unwrap(),
            LinearCode::from_rows(f4, 2, &[vec![1, omega]]).unwrap(),
        ];
        assert_eq!(comps[1].hermitian_dual(), comps[1]);
        let c = ring.reconstruct(2, &comps).unwrap();
        assert_eq!(c.dim(), 3);
        assert!(c.is_selfdual().unwrap());
        assert!(!abab().is_selfdual().unwrap());
        let zero = QuasiCyclicCode::new(&f2, 2, 3, &[]).unwrap();
        assert!(!zero.is_selfdual().unwrap());
    }

    #[test]
    fn existence_examples() {
        assert!(selfdual_exists(2, 2).unwrap());
        assert!(selfdual_exists(5, 2).unwrap());
        assert!(!selfdual_exists(3, 2).unwrap());
        assert!(selfdual_exists(9, 2).unwrap());
        assert!(!selfdual_exists(2, 3).unwrap());
        assert!(matches!(selfdual_exists(6, 2), Err(Error::NotPrimePower(6))));
    }

    #[test]
    fn construction_examples() {
        let c = construct_selfdual_qc(&f(2), 2, 3).unwrap();
        assert_eq!((c.len(), c.dim()), (6, 3));
        let c = construct_selfdual_qc(&f(5), 2, 1).unwrap();
        assert_eq!(c.code().generator(), &[vec![1, 2]]);
        assert!(matches!(construct_selfdual_qc(&f(3), 2, 1), Err(Error::NoGamma { q: 3 })));
        assert!(matches!(construct_selfdual_qc(&f(5), 3, 1), Err(Error::BadParameters(_))));
    }

    #[test]
    fn no_selfdual_code_of_length_two_over_f3() {
        let f3 = f(3);
        for a in 0..3 {
            for b in 0..3 {
                if (a, b) == (0, 0) {
                    continue;
                }
                let c = LinearCode::from_rows(&f3, 2, &[vec![a, b]]).unwrap();
                assert!(!c.is_self_dual());
            }
        }
    }
}
