//! Multipliers acting on cyclic constituents.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use crate::arith::is_prime;
use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::linear_code::LinearCode;

use super::ring::QcRing;
use super::{block_map, shift_map, QuasiCyclicCode};

/// Largest `p^r` accepted by [`enumerate_multiplier_equivalents`].
pub const ENUMERATION_TUPLE_BOUND: u64 = 1 << 20;

impl QuasiCyclicCode {
    /// Whether every constituent is cyclic of length `l`. Checked on the
    /// constituents and, independently, as invariance of the whole code
    /// under the cyclic shift of the `l` slots; the two must agree.
    pub fn constituents_all_cyclic(&self) -> Result<bool> {
        let ring = QcRing::new(self.field(), self.co_index())?;
        self.constituents_all_cyclic_in(&ring)
    }

    pub fn constituents_all_cyclic_in(&self, ring: &QcRing) -> Result<bool> {
        let l = self.index();
        let d = ring.decompose(self)?;
        let rotate = shift_map(l, 1);
        let by_constituents = d.comps.iter().all(|c| c.is_invariant_under(&rotate));
        let by_slots = self.code().is_invariant_under(&block_map(&rotate, self.co_index()));
        if by_constituents != by_slots {
            return Err(Error::RouteMismatch("constituent cyclicity disagrees with slot-shift invariance"));
        }
        Ok(by_constituents)
    }

    /// Per slot, the smallest multiplier carrying this constituent onto the
    /// one of `other` at the same factor; `None` if some slot has none.
    pub fn multiplier_equivalent(&self, other: &QuasiCyclicCode) -> Result<Option<Vec<usize>>> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if (self.index(), self.co_index()) != (other.index(), other.co_index()) {
            return Err(Error::ShapeMismatch("index or co-index differ".into()));
        }
        let ring = QcRing::new(self.field(), self.co_index())?;
        let mine = cyclic_constituents(self, &ring)?;
        let theirs = cyclic_constituents(other, &ring)?;
        let mut tuple = Vec::with_capacity(mine.len());
        for (a, b) in mine.iter().zip(&theirs) {
            match a.multiplier_equivalent(b)? {
                Some(w) => tuple.push(w),
                None => return Ok(None),
            }
        }
        Ok(Some(tuple))
    }
}

fn cyclic_constituents(c: &QuasiCyclicCode, ring: &QcRing) -> Result<Vec<CyclicCode>> {
    if !c.constituents_all_cyclic_in(ring)? {
        return Err(Error::NotCyclicConstituents);
    }
    ring.decompose(c)?.comps.iter().map(CyclicCode::from_linear).collect()
}

#[derive(Debug, Clone)]
pub struct OrbitEntry {
    /// Multiplier per slot; `0` marks a slot left unchanged by selection.
    pub tuple: Vec<usize>,
    pub hash: u64,
    pub code: QuasiCyclicCode,
}

#[derive(Debug, Clone)]
pub struct EnumerationReport {
    /// Number of irreducible factors of `Y^m - 1`.
    pub r: usize,
    /// The (prime) index.
    pub p: usize,
    /// Selections enumerated: subsets of slots times multiplier labels.
    pub tuples_counted: u64,
    /// `p^r`, computed directly.
    pub expected: u64,
    pub distinct_codes: usize,
    pub orbit: Vec<OrbitEntry>,
}

/// Applies every selection of multipliers to the constituents of an
/// index-`p` code with cyclic constituents and reconstructs the results.
pub fn enumerate_multiplier_equivalents(c: &QuasiCyclicCode) -> Result<EnumerationReport> {
    let p = c.index();
    if !is_prime(p as u64) {
        return Err(Error::NotPrimeIndex(p));
    }
    let ring = QcRing::new(c.field(), c.co_index())?;
    let comps = cyclic_constituents(c, &ring)?;
    let r = comps.len();
    let expected = (p as u64).checked_pow(r as u32).filter(|&x| x <= ENUMERATION_TUPLE_BOUND);
    let expected = expected.ok_or(Error::TooLarge((p as u64).saturating_pow(r as u32)))?;

    let mut orbit = Vec::new();
    let mut seen: HashSet<LinearCode> = HashSet::new();
    for subset in 0u64..(1 << r) {
        let chosen: Vec<usize> = (0..r).filter(|&i| subset >> i & 1 == 1).collect();
        let mut labels = vec![1usize; chosen.len()];
        loop {
            let mut tuple = vec![0; r];
            let mut images = Vec::with_capacity(r);
            for (i, comp) in comps.iter().enumerate() {
                match chosen.iter().position(|&s| s == i) {
                    Some(k) => {
                        tuple[i] = labels[k];
                        images.push(comp.multiplier_apply(labels[k])?.to_linear());
                    }
                    None => images.push(comp.to_linear()),
                }
            }
            let code = ring.reconstruct(p, &images)?;
            let mut h = DefaultHasher::new();
            code.code().hash(&mut h);
            seen.insert(code.code().clone());
            orbit.push(OrbitEntry { tuple, hash: h.finish(), code });
            if !advance(&mut labels, p - 1) {
                break;
            }
        }
    }
    Ok(EnumerationReport {
        r,
        p,
        tuples_counted: orbit.len() as u64,
        expected,
        distinct_codes: seen.len(),
        orbit,
    })
}

/// Odometer over `{1..=top}^k`; false once it wraps.
fn advance(labels: &mut [usize], top: usize) -> bool {
    for x in labels.iter_mut() {
        if *x < top {
            *x += 1;
            return true;
        }
        *x = 1;
    }
    false
}
