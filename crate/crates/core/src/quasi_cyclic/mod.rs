//! Quasi-cyclic codes of index `l` and co-index `m` over `F_q`.
//!
//! Coordinates are indexed `j + i l` with `0 <= j < l`, `0 <= i < m`, so the
//! shift by `l` positions moves every block of `l` coordinates one step and
//! [`phi`] reads column `j` of the `m x l` array as `c_j(Y)`.

mod dual;
mod isodual;
mod multiplier;
mod ring;

pub use dual::{construct_selfdual_qc, selfdual_exists, SelfDualReport};
pub use isodual::{
    construct_isodual_qc, is_isodual, ComponentFinding, IsodualQc, IsodualStrategy, IsodualVerdict, Verdict,
};
pub use multiplier::{enumerate_multiplier_equivalents, EnumerationReport, OrbitEntry, ENUMERATION_TUPLE_BOUND};
pub use ring::{crt_decompose, ConstituentDecomposition, QcRing, Slot, SlotKind};

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::linear_code::{LinearCode, MonomialMap};
use crate::polynomial::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiCyclicCode {
    l: usize,
    m: usize,
    code: LinearCode,
}

impl QuasiCyclicCode {
    pub fn new(field: &Field, l: usize, m: usize, rows: &[Vec<Elem>]) -> Result<QuasiCyclicCode> {
        if l == 0 {
            return Err(Error::BadParameters("index must be positive".into()));
        }
        check_co_index(field, m)?;
        Self::from_linear(LinearCode::from_rows(field, l * m, rows)?, l)
    }

    /// Views a linear code of length `l m` as index-`l` quasi-cyclic.
    pub fn from_linear(code: LinearCode, l: usize) -> Result<QuasiCyclicCode> {
        if l == 0 || code.len() % l != 0 || code.is_empty() {
            return Err(Error::BadParameters(format!("length {} is not a positive multiple of {l}", code.len())));
        }
        let m = code.len() / l;
        check_co_index(code.field(), m)?;
        if !code.is_invariant_under(&shift_map(code.len(), l)) {
            return Err(Error::NotShiftInvariant { l });
        }
        Ok(QuasiCyclicCode { l, m, code })
    }

    pub(crate) fn from_parts_unchecked(l: usize, m: usize, code: LinearCode) -> QuasiCyclicCode {
        QuasiCyclicCode { l, m, code }
    }

    pub fn field(&self) -> &Field {
        self.code.field()
    }

    pub fn index(&self) -> usize {
        self.l
    }

    pub fn co_index(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.l * self.m
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim(&self) -> usize {
        self.code.dim()
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// Smallest `d | lm` with the row space invariant under the shift by `d`.
    pub fn minimal_index(&self) -> usize {
        let n = self.len();
        (1..=n)
            .filter(|d| n % d == 0)
            .find(|&d| self.code.is_invariant_under(&shift_map(n, d)))
            .unwrap_or(n)
    }

    /// Applies the same permutation of `{0..l}` inside every block.
    pub fn permute_slots(&self, perm: &MonomialMap) -> Result<QuasiCyclicCode> {
        if perm.len() != self.l {
            return Err(Error::LengthMismatch { expected: self.l, found: perm.len() });
        }
        let map = block_map(perm, self.m);
        Ok(QuasiCyclicCode { l: self.l, m: self.m, code: self.code.apply_monomial(&map)? })
    }
}

fn check_co_index(field: &Field, m: usize) -> Result<()> {
    if m == 0 || m % field.p() as usize == 0 {
        return Err(Error::NotCoprime { n: m, q: field.q() });
    }
    Ok(())
}

/// `T^d`: coordinate `k` moves to `k + d mod n`.
pub fn shift_map(n: usize, d: usize) -> MonomialMap {
    MonomialMap::permutation((0..n).map(|k| (k + d) % n).collect()).expect("rotation is a bijection")
}

/// Lifts a map on the `l` slots to `lm` coordinates, acting inside each block.
pub fn block_map(slot_map: &MonomialMap, m: usize) -> MonomialMap {
    let l = slot_map.len();
    let mut perm = Vec::with_capacity(l * m);
    let mut diag = vec![1; l * m];
    for i in 0..m {
        for j in 0..l {
            let t = slot_map.perm()[j];
            perm.push(t + i * l);
            diag[t + i * l] = slot_map.diag()[t];
        }
    }
    MonomialMap::new(perm, diag).expect("blockwise lift of a monomial map")
}

/// The reindexing `j + i l -> i + j m` that lays the coefficient vectors of
/// `c_0, ..., c_{l-1}` end to end.
pub fn phi_reindex_map(l: usize, m: usize) -> MonomialMap {
    let mut perm = vec![0; l * m];
    for i in 0..m {
        for j in 0..l {
            perm[j + i * l] = i + j * m;
        }
    }
    MonomialMap::permutation(perm).expect("reindexing is a bijection")
}

/// `(c_0(Y), ..., c_{l-1}(Y))` with `c_j = sum_i v[j + i l] Y^i`.
pub fn phi(field: &Field, v: &[Elem], l: usize, m: usize) -> Result<Vec<Poly>> {
    if v.len() != l * m {
        return Err(Error::LengthMismatch { expected: l * m, found: v.len() });
    }
    Ok((0..l).map(|j| Poly::new(field, (0..m).map(|i| v[j + i * l]).collect())).collect())
}

/// Inverse of [`phi`]; entries are reduced mod `Y^m - 1` first.
pub fn phi_inv(field: &Field, polys: &[Poly], m: usize) -> Result<Vec<Elem>> {
    let l = polys.len();
    let modulus = Poly::x_pow_minus_one(field, m);
    let mut v = vec![0; l * m];
    for (j, c) in polys.iter().enumerate() {
        if c.field() != field {
            return Err(Error::FieldMismatch);
        }
        let r = c.rem(&modulus)?;
        for i in 0..m {
            v[j + i * l] = r.coeff(i);
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::CyclicCode;

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn make_examples() {
        let f2 = f(2);
        let ham = CyclicCode::new(&f2, 7, &Poly::new(&f2, vec![1, 1, 0, 1])).unwrap().to_linear();
        let c = QuasiCyclicCode::from_linear(ham, 1).unwrap();
        assert_eq!(c.minimal_index(), 1);

        let c = QuasiCyclicCode::new(&f2, 2, 3, &[vec![1, 0, 1, 0, 1, 0], vec![0, 1, 0, 1, 0, 1]]).unwrap();
        assert_eq!((c.dim(), c.minimal_index()), (2, 1));

        assert!(matches!(
            QuasiCyclicCode::new(&f2, 2, 3, &[vec![1, 0, 0, 0, 0, 0]]),
            Err(Error::NotShiftInvariant { l: 2 })
        ));
        assert!(matches!(QuasiCyclicCode::new(&f2, 2, 2, &[]), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn phi_examples() {
        let f2 = f(2);
        let v = vec![1, 0, 0, 1, 1, 0];
        let c = phi(&f2, &v, 2, 3).unwrap();
        assert_eq!(c, vec![Poly::new(&f2, vec![1, 0, 1]), Poly::new(&f2, vec![0, 1])]);
        assert_eq!(phi_inv(&f2, &c, 3).unwrap(), v);
        let shifted = shift_map(6, 2).apply_vec(&f2, &v);
        let y = Poly::x(&f2);
        let modulus = Poly::x_pow_minus_one(&f2, 3);
        let expect: Vec<Poly> = c.iter().map(|p| p.mul(&y).rem(&modulus).unwrap()).collect();
        assert_eq!(phi(&f2, &shifted, 2, 3).unwrap(), expect);
        assert!(matches!(phi(&f2, &v, 2, 2), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn block_map_permutes_phi_slots() {
        let f3 = f(3);
        let slot = MonomialMap::new(vec![2, 0, 1], vec![1, 2, 1]).unwrap();
        let big = block_map(&slot, 2);
        let v: Vec<Elem> = vec![1, 2, 0, 0, 1, 1];
        let before = phi(&f3, &v, 3, 2).unwrap();
        let after = phi(&f3, &big.apply_vec(&f3, &v), 3, 2).unwrap();
        for j in 0..3 {
            let t = slot.perm()[j];
            assert_eq!(after[t], before[j].scale(slot.diag()[t]));
        }
    }
}
