//! Linear codes given by a canonical (RREF) generator matrix.
//!
//! Because the generator is canonical, code equality is matrix equality and
//! every set-level identity between codes becomes a decidable comparison.

mod equivalence;

pub use equivalence::{equivalence_search, joint_permutation_search, EquivalenceMode, DEFAULT_CUTOFF};

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::linalg;

/// Largest `q^k` for which codewords are enumerated.
pub const ENUMERATION_BOUND: u64 = 1 << 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    field: Field,
    n: usize,
    gen: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}, {}] code over {}", self.n, self.dim(), self.field)?;
        for row in &self.gen {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl LinearCode {
    /// The row space of `rows`, in canonical form. Dependent and zero rows
    /// are allowed.
    pub fn from_rows(field: &Field, n: usize, rows: &[Vec<Elem>]) -> Result<LinearCode> {
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch { expected: n, found: row.len() });
            }
            if row.iter().any(|&x| !field.contains(x)) {
                return Err(Error::BadParameters("entry outside the field".into()));
            }
        }
        Ok(Self::from_rows_unchecked(field, n, rows))
    }

    pub(crate) fn from_rows_unchecked(field: &Field, n: usize, rows: &[Vec<Elem>]) -> LinearCode {
        let (gen, pivots) = linalg::rref(field, rows, n);
        LinearCode { field: field.clone(), n, gen, pivots }
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode { field: field.clone(), n, gen: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &Field, n: usize) -> LinearCode {
        let rows: Vec<Vec<Elem>> = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        Self::from_rows_unchecked(field, n, &rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.gen.len()
    }

    pub fn generator(&self) -> &[Vec<Elem>] {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        v.len() == self.n && linalg::in_span(&self.field, &self.gen, &self.pivots, v)
    }

    /// Whether every row of `other` lies in `self`.
    pub fn contains_code(&self, other: &LinearCode) -> bool {
        other.gen.iter().all(|r| self.contains(r))
    }

    /// `{v : sum v_i c_i = 0 for all c}`.
    pub fn euclidean_dual(&self) -> LinearCode {
        let basis = linalg::nullspace(&self.field, &self.gen, self.n);
        Self::from_rows_unchecked(&self.field, self.n, &basis)
    }

    /// Entrywise conjugation (identity unless the field carries one).
    pub fn conjugate(&self) -> LinearCode {
        if !self.field.has_conjugation() {
            return self.clone();
        }
        let rows: Vec<Vec<Elem>> = self
            .gen
            .iter()
            .map(|r| r.iter().map(|&x| self.field.conjugate(x)).collect())
            .collect();
        Self::from_rows_unchecked(&self.field, self.n, &rows)
    }

    /// Dual under `<a, b> = sum a_k conj(b_k)`, i.e. the Euclidean dual of
    /// the conjugated code.
    pub fn hermitian_dual(&self) -> LinearCode {
        self.conjugate().euclidean_dual()
    }

    /// Applies `f` to every generator entry; `f` must be additive and
    /// multiplicative into `target`.
    pub fn map_entries(&self, target: &Field, f: impl Fn(Elem) -> Elem) -> LinearCode {
        let rows: Vec<Vec<Elem>> = self.gen.iter().map(|r| r.iter().map(|&x| f(x)).collect()).collect();
        Self::from_rows_unchecked(target, self.n, &rows)
    }

    pub fn apply_monomial(&self, map: &MonomialMap) -> Result<LinearCode> {
        if map.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: map.len() });
        }
        let rows: Vec<Vec<Elem>> = self.gen.iter().map(|r| map.apply_vec(&self.field, r)).collect();
        Ok(Self::from_rows_unchecked(&self.field, self.n, &rows))
    }

    /// Block-diagonal sum over concatenated coordinates.
    pub fn direct_sum(parts: &[LinearCode]) -> Result<LinearCode> {
        let Some(first) = parts.first() else {
            return Err(Error::BadParameters("direct sum of no codes".into()));
        };
        if parts.iter().any(|c| c.field != first.field) {
            return Err(Error::FieldMismatch);
        }
        let n: usize = parts.iter().map(|c| c.n).sum();
        let mut rows = Vec::new();
        let mut offset = 0;
        for c in parts {
            for r in &c.gen {
                let mut row = vec![0; n];
                row[offset..offset + c.n].copy_from_slice(r);
                rows.push(row);
            }
            offset += c.n;
        }
        Ok(Self::from_rows_unchecked(&first.field, n, &rows))
    }

    /// Restriction of every codeword to the given coordinates, in order.
    pub fn project(&self, coords: &[usize]) -> LinearCode {
        let rows: Vec<Vec<Elem>> =
            self.gen.iter().map(|r| coords.iter().map(|&c| r[c]).collect()).collect();
        Self::from_rows_unchecked(&self.field, coords.len(), &rows)
    }

    pub fn is_invariant_under(&self, map: &MonomialMap) -> bool {
        map.len() == self.n && self.gen.iter().all(|r| self.contains(&map.apply_vec(&self.field, r)))
    }

    pub fn codeword_count(&self) -> u64 {
        (self.field.q() as u64).checked_pow(self.dim() as u32).unwrap_or(u64::MAX)
    }

    /// Calls `f` on every codeword (message vectors in base-`q` counting order).
    pub fn for_each_codeword(&self, mut f: impl FnMut(&[Elem])) -> Result<()> {
        let total = self.codeword_count();
        if total > ENUMERATION_BOUND {
            return Err(Error::TooLarge(total));
        }
        let k = self.dim();
        let field = &self.field;
        let q = field.q();
        let mut msg = vec![0; k];
        let mut word = vec![0; self.n];
        for _ in 0..total {
            word.iter_mut().for_each(|x| *x = 0);
            for (coef, row) in msg.iter().zip(&self.gen) {
                if *coef == 0 {
                    continue;
                }
                for (w, &g) in word.iter_mut().zip(row) {
                    *w = field.add(*w, field.mul(*coef, g));
                }
            }
            f(&word);
            for digit in msg.iter_mut() {
                *digit += 1;
                if *digit < q {
                    break;
                }
                *digit = 0;
            }
        }
        Ok(())
    }

    /// `counts[w]` = number of codewords of Hamming weight `w`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let mut counts = vec![0; self.n + 1];
        self.for_each_codeword(|w| counts[w.iter().filter(|&&x| x != 0).count()] += 1)?;
        Ok(counts)
    }

    /// Whether `C = C^perp`.
    pub fn is_self_dual(&self) -> bool {
        2 * self.dim() == self.n && self.euclidean_dual() == *self
    }
}

/// `x -> (diag[i] * x[perm^-1(i)])_i`: coordinate `j` of the source moves to
/// position `perm[j]` and is then scaled by `diag[perm[j]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialMap {
    perm: Vec<usize>,
    diag: Vec<Elem>,
}

impl MonomialMap {
    pub fn new(perm: Vec<usize>, diag: Vec<Elem>) -> Result<MonomialMap> {
        let n = perm.len();
        if diag.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: diag.len() });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::BadParameters("perm is not a bijection".into()));
            }
            seen[p] = true;
        }
        if diag.contains(&0) {
            return Err(Error::ZeroScalar);
        }
        Ok(MonomialMap { perm, diag })
    }

    pub fn permutation(perm: Vec<usize>) -> Result<MonomialMap> {
        let n = perm.len();
        Self::new(perm, vec![1; n])
    }

    pub fn identity(n: usize) -> MonomialMap {
        MonomialMap { perm: (0..n).collect(), diag: vec![1; n] }
    }

    pub fn diagonal(diag: Vec<Elem>) -> Result<MonomialMap> {
        let n = diag.len();
        Self::new((0..n).collect(), diag)
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn diag(&self) -> &[Elem] {
        &self.diag
    }

    pub fn is_permutation(&self) -> bool {
        self.diag.iter().all(|&d| d == 1)
    }

    pub fn is_identity(&self) -> bool {
        self.is_permutation() && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn apply_vec(&self, field: &Field, v: &[Elem]) -> Vec<Elem> {
        let mut out = vec![0; v.len()];
        for (j, &x) in v.iter().enumerate() {
            let t = self.perm[j];
            out[t] = field.mul(self.diag[t], x);
        }
        out
    }

    /// The map "apply `self`, then `then`".
    pub fn then(&self, then: &MonomialMap, field: &Field) -> MonomialMap {
        let n = self.len();
        let mut perm = vec![0; n];
        let mut diag = vec![0; n];
        for j in 0..n {
            let mid = self.perm[j];
            let t = then.perm[mid];
            perm[j] = t;
            diag[t] = field.mul(then.diag[t], self.diag[mid]);
        }
        MonomialMap { perm, diag }
    }

    pub fn inverse(&self, field: &Field) -> MonomialMap {
        let n = self.len();
        let mut perm = vec![0; n];
        let mut diag = vec![0; n];
        for j in 0..n {
            let t = self.perm[j];
            perm[t] = j;
            diag[j] = field.inv(self.diag[t]);
        }
        MonomialMap { perm, diag }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn from_rows_examples() {
        let c = LinearCode::from_rows(&f(2), 3, &[vec![1, 1, 0], vec![0, 0, 0]]).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(c.generator(), &[vec![1, 1, 0]]);
        let c = LinearCode::from_rows(&f(3), 2, &[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(c.dim(), 1);
        let c = LinearCode::from_rows(&f(2), 2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(c, LinearCode::full(&f(2), 2));
        assert!(matches!(
            LinearCode::from_rows(&f(2), 2, &[vec![1]]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn dual_examples() {
        let rep = LinearCode::from_rows(&f(2), 2, &[vec![1, 1]]).unwrap();
        assert_eq!(rep.euclidean_dual(), rep);
        assert!(rep.is_self_dual());
        assert_eq!(LinearCode::zero(&f(3), 4).euclidean_dual(), LinearCode::full(&f(3), 4));
        let c = LinearCode::from_rows(&f(3), 2, &[vec![1, 1]]).unwrap();
        assert_eq!(c.euclidean_dual(), LinearCode::from_rows(&f(3), 2, &[vec![1, 2]]).unwrap());
    }

    #[test]
    fn hermitian_dual_over_gf4() {
        let f2 = f(2);
        let g = crate::Poly::new(&f2, vec![1, 1, 1]);
        let gf4 = Field::constituent(&f2, &g).unwrap();
        let w = gf4.variable();
        let c = LinearCode::from_rows(&gf4, 2, &[vec![1, w]]).unwrap();
        assert_eq!(c.hermitian_dual(), c);
        assert_ne!(c.euclidean_dual(), c);
        // without conjugation the two duals agree.
        let plain = Field::new(2, 2).unwrap();
        let d = LinearCode::from_rows(&plain, 2, &[vec![1, w]]).unwrap();
        assert_eq!(d.hermitian_dual(), d.euclidean_dual());
    }

    #[test]
    fn monomial_examples() {
        let c = LinearCode::from_rows(&f(2), 2, &[vec![1, 0]]).unwrap();
        assert_eq!(c.apply_monomial(&MonomialMap::identity(2)).unwrap(), c);
        let swapped = c.apply_monomial(&MonomialMap::permutation(vec![1, 0]).unwrap()).unwrap();
        assert_eq!(swapped.generator(), &[vec![0, 1]]);
        let d = LinearCode::from_rows(&f(3), 2, &[vec![1, 1]]).unwrap();
        let scaled = d.apply_monomial(&MonomialMap::diagonal(vec![1, 2]).unwrap()).unwrap();
        assert_eq!(scaled.generator(), &[vec![1, 2]]);
        assert!(matches!(MonomialMap::permutation(vec![0, 0]), Err(Error::BadParameters(_))));
        assert_eq!(MonomialMap::diagonal(vec![1, 0]).unwrap_err(), Error::ZeroScalar);
    }

    #[test]
    fn direct_sum_examples() {
        let f2 = f(2);
        let a = LinearCode::from_rows(&f2, 2, &[vec![1, 1]]).unwrap();
        let b = LinearCode::from_rows(&f2, 2, &[vec![1, 0]]).unwrap();
        let s = LinearCode::direct_sum(&[a.clone(), b]).unwrap();
        assert_eq!((s.len(), s.dim()), (4, 2));
        let padded = LinearCode::direct_sum(&[a, LinearCode::zero(&f2, 3)]).unwrap();
        assert_eq!(padded.generator(), &[vec![1, 1, 0, 0, 0]]);
    }

    #[test]
    fn weight_distribution_examples() {
        let f2 = f(2);
        assert_eq!(LinearCode::zero(&f2, 3).weight_distribution().unwrap(), vec![1, 0, 0, 0]);
        let rep = LinearCode::from_rows(&f2, 2, &[vec![1, 1]]).unwrap();
        assert_eq!(rep.weight_distribution().unwrap(), vec![1, 0, 1]);
        let blocks = LinearCode::from_rows(
            &f2,
            6,
            &[vec![1, 0, 0, 1, 0, 0], vec![0, 1, 0, 0, 1, 0], vec![0, 0, 1, 0, 0, 1]],
        )
        .unwrap();
        assert_eq!(blocks.weight_distribution().unwrap(), vec![1, 0, 3, 0, 3, 0, 1]);
        let big = LinearCode::full(&Field::prime(5).unwrap(), 8);
        assert!(matches!(big.weight_distribution(), Err(Error::TooLarge(_))));
    }

    #[test]
    fn composition_and_inverse() {
        let f5 = f(5);
        let a = MonomialMap::new(vec![2, 0, 1], vec![2, 3, 4]).unwrap();
        let b = MonomialMap::new(vec![1, 2, 0], vec![1, 4, 2]).unwrap();
        let v = vec![1, 2, 3];
        let ab = a.then(&b, &f5);
        assert_eq!(ab.apply_vec(&f5, &v), b.apply_vec(&f5, &a.apply_vec(&f5, &v)));
        assert_eq!(a.inverse(&f5).apply_vec(&f5, &a.apply_vec(&f5, &v)), v);
    }
}
