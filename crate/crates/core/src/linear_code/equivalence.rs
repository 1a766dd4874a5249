//! Exhaustive equivalence search with pruning.
//!
//! Source columns are assigned in order. After each assignment the partial
//! map must already send the puncturing of `C` on the assigned columns onto
//! the puncturing of `D` on their images; that test is exact, so the first
//! complete assignment found is a witness, and exhausting the tree proves
//! there is none. Branches are visited in increasing (target, scalar) order,
//! so the returned witness is deterministic.

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::linalg;

use super::{LinearCode, MonomialMap};

/// Default largest length accepted by [`equivalence_search`].
pub const DEFAULT_CUTOFF: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquivalenceMode {
    /// Coordinate permutations only.
    Permutation,
    /// Permutations composed with nonzero coordinate scalings.
    Monomial,
}

impl EquivalenceMode {
    pub fn name(self) -> &'static str {
        match self {
            EquivalenceMode::Permutation => "permutation",
            EquivalenceMode::Monomial => "monomial",
        }
    }
}

/// Finds a map with `apply_monomial(c, map) = d`, or proves none exists.
pub fn equivalence_search(
    c: &LinearCode,
    d: &LinearCode,
    mode: EquivalenceMode,
    cutoff: usize,
) -> Result<Option<MonomialMap>> {
    if c.field != d.field {
        return Err(Error::FieldMismatch);
    }
    if c.n != d.n {
        return Err(Error::LengthMismatch { expected: c.n, found: d.n });
    }
    if c.n > cutoff {
        return Err(Error::CutoffExceeded { n: c.n, cutoff });
    }
    if c.dim() != d.dim() {
        return Ok(None);
    }
    if c == d {
        return Ok(Some(MonomialMap::identity(c.n)));
    }
    if c.codeword_count() <= super::ENUMERATION_BOUND
        && c.weight_distribution()? != d.weight_distribution()?
    {
        return Ok(None);
    }

    let mut search = Search {
        n: c.n,
        problems: vec![Problem::new(c, d)],
        scalars: match mode {
            EquivalenceMode::Permutation => vec![1],
            EquivalenceMode::Monomial => (1..c.field.q()).collect(),
        },
        targets: Vec::with_capacity(c.n),
        factors: Vec::with_capacity(c.n),
        used: vec![false; c.n],
    };
    if !search.extend() {
        return Ok(None);
    }
    let mut diag = vec![1; c.n];
    for (j, &t) in search.targets.iter().enumerate() {
        diag[t] = search.factors[j];
    }
    let map = MonomialMap::new(search.targets, diag)?;
    debug_assert_eq!(c.apply_monomial(&map)?, *d);
    Ok(Some(map))
}

/// One coordinate permutation carrying every `pairs[i].0` onto `pairs[i].1`
/// at once. The codes may live over different fields but share a length.
pub fn joint_permutation_search(
    pairs: &[(LinearCode, LinearCode)],
    cutoff: usize,
) -> Result<Option<MonomialMap>> {
    let Some((first, _)) = pairs.first() else {
        return Err(Error::BadParameters("no codes to compare".into()));
    };
    let n = first.n;
    for (c, d) in pairs {
        if c.field != d.field {
            return Err(Error::FieldMismatch);
        }
        if c.n != n || d.n != n {
            return Err(Error::LengthMismatch { expected: n, found: if c.n != n { c.n } else { d.n } });
        }
    }
    if n > cutoff {
        return Err(Error::CutoffExceeded { n, cutoff });
    }
    if pairs.iter().any(|(c, d)| c.dim() != d.dim()) {
        return Ok(None);
    }
    let mut search = Search {
        n,
        problems: pairs.iter().map(|(c, d)| Problem::new(c, d)).collect(),
        scalars: vec![1],
        targets: Vec::with_capacity(n),
        factors: Vec::with_capacity(n),
        used: vec![false; n],
    };
    if !search.extend() {
        return Ok(None);
    }
    Ok(Some(MonomialMap::permutation(search.targets)?))
}

struct Problem<'a> {
    field: &'a Field,
    k: usize,
    src_cols: Vec<Vec<Elem>>,
    dst_cols: Vec<Vec<Elem>>,
}

impl<'a> Problem<'a> {
    fn new(c: &'a LinearCode, d: &LinearCode) -> Problem<'a> {
        Problem { field: &c.field, k: c.dim(), src_cols: columns(c), dst_cols: columns(d) }
    }

    /// Row spaces of the punctured codes on the assigned columns agree.
    fn consistent(&self, targets: &[usize], factors: &[Elem]) -> bool {
        let width = targets.len();
        let field = self.field;
        let mut a = vec![vec![0; width]; self.k];
        let mut b = vec![vec![0; width]; self.k];
        for (pos, (&t, &s)) in targets.iter().zip(factors).enumerate() {
            for row in 0..self.k {
                a[row][pos] = field.mul(s, self.src_cols[pos][row]);
                b[row][pos] = self.dst_cols[t][row];
            }
        }
        linalg::rref(field, &a, width).0 == linalg::rref(field, &b, width).0
    }
}

fn columns(c: &LinearCode) -> Vec<Vec<Elem>> {
    (0..c.n).map(|j| c.gen.iter().map(|r| r[j]).collect()).collect()
}

struct Search<'a> {
    n: usize,
    problems: Vec<Problem<'a>>,
    scalars: Vec<Elem>,
    targets: Vec<usize>,
    factors: Vec<Elem>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let j = self.targets.len();
        if j == self.n {
            return true;
        }
        // Scaling every column by one common factor preserves the image, so
        // the first scalar can be fixed.
        let scalar_count = if j == 0 { 1 } else { self.scalars.len() };
        for t in 0..self.n {
            if self.used[t] {
                continue;
            }
            for si in 0..scalar_count {
                let s = self.scalars[si];
                self.targets.push(t);
                self.factors.push(s);
                self.used[t] = true;
                if self.consistent() && self.extend() {
                    return true;
                }
                self.used[t] = false;
                self.targets.pop();
                self.factors.pop();
            }
        }
        false
    }

    fn consistent(&self) -> bool {
        self.problems.iter().all(|p| p.consistent(&self.targets, &self.factors))
    }
}
