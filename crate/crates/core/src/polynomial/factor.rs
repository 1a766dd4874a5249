//! Classified factorization of `Y^m - 1` over `F_q` for `gcd(m, q) = 1`.
//!
//! Distinct-degree splitting with `gcd(Y^(q^d) - Y, f)`, then Berlekamp's
//! deterministic splitting inside each equal-degree part.

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::linalg;

use super::Poly;

/// `Y^m - 1 = delta * g_1 ... g_s * h_1 h_1* ... h_t h_t*`.
///
/// Both lists are sorted by degree and then by coefficients from the top
/// down; inside a pair, `h_j` is the smaller partner in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorClassification {
    pub field: Field,
    pub m: usize,
    pub delta: Elem,
    pub self_reciprocal: Vec<Poly>,
    pub pairs: Vec<(Poly, Poly)>,
}

impl FactorClassification {
    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn s(&self) -> usize {
        self.self_reciprocal.len()
    }

    pub fn t(&self) -> usize {
        self.pairs.len()
    }

    /// Total number of irreducible factors, `s + 2t`.
    pub fn r(&self) -> usize {
        self.s() + 2 * self.t()
    }

    /// `g_1, ..., g_s, h_1, h_1*, ..., h_t, h_t*`.
    pub fn factors(&self) -> Vec<Poly> {
        let mut out = self.self_reciprocal.clone();
        for (h, hs) in &self.pairs {
            out.push(h.clone());
            out.push(hs.clone());
        }
        out
    }

    /// `delta` times the product of all factors.
    pub fn product(&self) -> Poly {
        self.factors()
            .iter()
            .fold(Poly::constant(&self.field, self.delta), |acc, f| acc.mul(f))
    }
}

pub fn factor_cyclic_modulus(field: &Field, m: usize) -> Result<FactorClassification> {
    if m == 0 || m % field.p() as usize == 0 {
        return Err(Error::NotCoprime { n: m, q: field.q() });
    }
    let target = Poly::x_pow_minus_one(field, m);
    let mut factors = Vec::new();
    for (d, part) in distinct_degree(&target)? {
        factors.extend(equal_degree(&part, d)?);
    }
    factors.sort_by(|a, b| a.cmp_canonical(b));

    let mut self_reciprocal = Vec::new();
    let mut pairs = Vec::new();
    let mut used = vec![false; factors.len()];
    for i in 0..factors.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let rec = factors[i].reciprocal()?;
        if rec == factors[i] {
            self_reciprocal.push(factors[i].clone());
            continue;
        }
        let j = (i + 1..factors.len())
            .find(|&j| !used[j] && factors[j] == rec)
            .ok_or(Error::RouteMismatch("reciprocal partner missing from factorization"))?;
        used[j] = true;
        pairs.push((factors[i].clone(), factors[j].clone()));
    }

    let mut out = FactorClassification { field: field.clone(), m, delta: 1, self_reciprocal, pairs };
    let prod = out.product();
    out.delta = field.div(target.lead(), prod.lead())?;
    if out.product() != target {
        return Err(Error::RouteMismatch("factors do not multiply back to Y^m - 1"));
    }
    Ok(out)
}

/// Splits a squarefree monic polynomial into `(d, product of its degree-d factors)`.
fn distinct_degree(f: &Poly) -> Result<Vec<(usize, Poly)>> {
    let field = f.field();
    let q = field.q() as u64;
    let x = Poly::x(field);
    let mut rest = f.monic();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if 2 * d > deg {
            out.push((deg, rest.clone()));
            break;
        }
        h = h.pow_mod(q, &rest)?;
        let g = rest.gcd(&h.sub(&x))?;
        if !g.is_one() {
            rest = rest.exact_div(&g)?.expect("gcd divides");
            h = h.rem(&rest)?;
            out.push((d, g));
        }
    }
    Ok(out)
}

/// Berlekamp splitting of a squarefree monic product of degree-`d` irreducibles.
fn equal_degree(f: &Poly, d: usize) -> Result<Vec<Poly>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field();
    let q = field.q() as u64;
    let k = n / d;

    // Row i of Q - I holds Y^(iq) mod f minus Y^i.
    let yq = Poly::x(field).pow_mod(q, f)?;
    let mut power = Poly::one(field);
    let mut cols: Vec<Vec<Elem>> = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            cols[j][i] = power.coeff(j);
        }
        cols[i][i] = field.sub(cols[i][i], 1);
        power = power.mul_mod(&yq, f)?;
    }
    // v (Q - I) = 0  <=>  (Q - I)^T v = 0; `cols` already holds the transpose.
    let kernel = linalg::nullspace(field, &cols, n);
    debug_assert_eq!(kernel.len(), k);

    let mut parts = vec![f.clone()];
    for v in kernel {
        if parts.len() == k {
            break;
        }
        let vp = Poly::new(field, v);
        if vp.degree().unwrap_or(0) == 0 {
            continue;
        }
        for c in field.elements() {
            if parts.len() == k {
                break;
            }
            let shifted = vp.sub(&Poly::constant(field, c));
            let mut next = Vec::with_capacity(parts.len() + 1);
            for u in parts {
                if u.degree() == Some(d) {
                    next.push(u);
                    continue;
                }
                let g = u.gcd(&shifted)?;
                match g.degree() {
                    Some(gd) if gd > 0 && gd < u.degree().unwrap() => {
                        next.push(u.exact_div(&g)?.expect("gcd divides"));
                        next.push(g);
                    }
                    _ => next.push(u),
                }
            }
            parts = next;
        }
    }
    if parts.len() != k {
        return Err(Error::RouteMismatch("equal-degree splitting did not separate all factors"));
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cyclotomic_cosets;

    fn p(field: &Field, c: &[Elem]) -> Poly {
        Poly::new(field, c.to_vec())
    }

    #[test]
    fn seven_over_f2() {
        let f2 = Field::prime(2).unwrap();
        let c = factor_cyclic_modulus(&f2, 7).unwrap();
        assert_eq!(c.self_reciprocal, vec![p(&f2, &[1, 1])]);
        assert_eq!(c.pairs, vec![(p(&f2, &[1, 1, 0, 1]), p(&f2, &[1, 0, 1, 1]))]);
        assert_eq!(c.delta, 1);
        assert_eq!((c.s(), c.t(), c.r()), (1, 1, 3));
    }

    #[test]
    fn trivial_and_split_cases() {
        let f2 = Field::prime(2).unwrap();
        let c = factor_cyclic_modulus(&f2, 1).unwrap();
        assert_eq!(c.self_reciprocal, vec![p(&f2, &[1, 1])]);
        assert_eq!(c.t(), 0);

        let f3 = Field::prime(3).unwrap();
        let c = factor_cyclic_modulus(&f3, 4).unwrap();
        assert_eq!(
            c.self_reciprocal,
            vec![p(&f3, &[1, 1]), p(&f3, &[2, 1]), p(&f3, &[1, 0, 1])]
        );
        assert_eq!(c.t(), 0);

        assert!(matches!(factor_cyclic_modulus(&f2, 4), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn counts_match_cosets_over_extension_fields() {
        for (pp, e) in [(2, 2), (3, 2), (2, 3)] {
            let field = Field::new(pp, e).unwrap();
            for m in 1..=21 {
                if m % pp as usize == 0 {
                    continue;
                }
                let c = factor_cyclic_modulus(&field, m).unwrap();
                assert_eq!(c.r(), cyclotomic_cosets(field.q() as u64, m).len());
                assert_eq!(c.product(), Poly::x_pow_minus_one(&field, m));
                for f in c.factors() {
                    assert!(f.is_monic() && f.is_irreducible());
                }
            }
        }
    }
}
