//! Exact arithmetic in finite fields.
//!
//! A [`Field`] is either a prime field `F_p`, an extension `F_p[x]/(f)`
//! presented over its prime field, or a quotient `K[Y]/(g)` presented over an
//! arbitrary base field `K` (constituent fields of the CRT splitting, and
//! splitting fields of `x^n - 1`). Elements are plain [`Elem`] integers: the
//! coefficient vector over the base, read as a base-`|K|` numeral with the
//! constant term as the least significant digit. Base-field elements therefore
//! keep their encoding inside any extension, zero is `0` and one is `1`.
//!
//! Multiplication goes through discrete log tables built at construction,
//! addition is digit-wise modulo `p`.

use std::fmt;
use std::sync::Arc;

use crate::arith::{is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::polynomial::Poly;

/// Encoded field element; see the module docs for the encoding.
pub type Elem = u32;

/// Largest field cardinality accepted by the constructors.
pub const DEFAULT_FIELD_BOUND: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    /// `F_p`.
    Prime,
    /// `F_{p^e}` or any other extension `K[x]/(f)` without a conjugation.
    Extension,
    /// `F_q[Y]/(g)` for an irreducible factor `g` of `Y^m - 1`, carrying the
    /// conjugation `r -> r^(q^(d/2))` when `g` is self-reciprocal of even degree.
    Constituent,
}

struct Inner {
    kind: FieldKind,
    p: u32,
    q: u32,
    digits: u32,
    base: Option<Field>,
    modulus: Vec<Elem>,
    conj_exp: u64,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

/// Shared handle to an immutable finite field.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.kind == other.0.kind
                && self.0.q == other.0.q
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.q.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.base {
            None => write!(f, "F_{}", self.0.p),
            Some(base) => {
                let var = if self.0.kind == FieldKind::Constituent { "Y" } else { "x" };
                let m = Poly::new(base, self.0.modulus.clone());
                write!(f, "{base}[{var}]/({})", m.display(var))
            }
        }
    }
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if p as u64 > DEFAULT_FIELD_BOUND {
            return Err(Error::BoundExceeded { q: p as u64, bound: DEFAULT_FIELD_BOUND });
        }
        let (exp, log) = prime_tables(p);
        Ok(Field(Arc::new(Inner {
            kind: FieldKind::Prime,
            p,
            q: p,
            digits: 1,
            base: None,
            modulus: Vec::new(),
            conj_exp: 1,
            exp,
            log,
        })))
    }

    /// `F_{p^e}` with the smallest monic irreducible modulus of degree `e`.
    ///
    /// Candidates are ordered by their non-leading coefficients read as a
    /// base-`p` numeral, constant term least significant.
    pub fn new(p: u32, e: u32) -> Result<Field> {
        Self::with_bound(p, e, DEFAULT_FIELD_BOUND)
    }

    pub fn with_bound(p: u32, e: u32, bound: u64) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::BadParameters("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
        if q > bound {
            return Err(Error::BoundExceeded { q, bound });
        }
        let prime = Field::prime(p)?;
        if e == 1 {
            return Ok(prime);
        }
        let modulus = crate::polynomial::smallest_irreducible(&prime, e as usize);
        Self::build(FieldKind::Extension, &prime, &modulus, bound)
    }

    /// Builds `F_p` or `F_p[x]/(modulus)` from a prime and explicit modulus
    /// coefficients (ascending, over `F_p`).
    pub fn from_modulus(p: u32, modulus: &[u32]) -> Result<Field> {
        let prime = Field::prime(p)?;
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::NotIrreducible { degree: modulus.len().saturating_sub(1) });
        }
        let f = Poly::new(&prime, modulus.to_vec());
        match f.degree() {
            Some(1) if f.is_monic() => Ok(prime),
            _ => Self::build(FieldKind::Extension, &prime, &f, DEFAULT_FIELD_BOUND),
        }
    }

    /// `base[x]/(modulus)` without conjugation.
    pub fn extension(base: &Field, modulus: &Poly) -> Result<Field> {
        Self::build(FieldKind::Extension, base, modulus, DEFAULT_FIELD_BOUND)
    }

    /// `base[Y]/(modulus)` as a constituent field, with conjugation when the
    /// modulus is self-reciprocal of even degree.
    pub fn constituent(base: &Field, modulus: &Poly) -> Result<Field> {
        Self::build(FieldKind::Constituent, base, modulus, DEFAULT_FIELD_BOUND)
    }

    fn build(kind: FieldKind, base: &Field, modulus: &Poly, bound: u64) -> Result<Field> {
        if modulus.field() != base {
            return Err(Error::FieldMismatch);
        }
        let d = match modulus.degree() {
            Some(d) if d >= 1 && modulus.is_monic() => d,
            other => return Err(Error::NotIrreducible { degree: other.unwrap_or(0) }),
        };
        let q = (base.q() as u64).checked_pow(d as u32).unwrap_or(u64::MAX);
        if q > bound {
            return Err(Error::BoundExceeded { q, bound });
        }
        if !modulus.is_irreducible() {
            return Err(Error::NotIrreducible { degree: d });
        }
        let conj_exp = if kind == FieldKind::Constituent
            && d % 2 == 0
            && modulus.reciprocal().map(|r| &r == modulus).unwrap_or(false)
        {
            (base.q() as u64).pow(d as u32 / 2)
        } else {
            1
        };
        let coeffs = modulus.coeffs().to_vec();
        let (exp, log) = extension_tables(base, &coeffs, q as u32);
        Ok(Field(Arc::new(Inner {
            kind,
            p: base.p(),
            q: q as u32,
            digits: base.0.digits * d as u32,
            base: Some(base.clone()),
            modulus: coeffs,
            conj_exp,
            exp,
            log,
        })))
    }

    pub fn kind(&self) -> FieldKind {
        self.0.kind
    }

    /// Characteristic.
    pub fn p(&self) -> u32 {
        self.0.p
    }

    /// Cardinality.
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Degree over the prime field.
    pub fn prime_degree(&self) -> u32 {
        self.0.digits
    }

    /// Degree over [`Field::base`] (1 for prime fields).
    pub fn degree(&self) -> usize {
        self.0.modulus.len().saturating_sub(1).max(1)
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    /// Monic modulus over the base, ascending; empty for prime fields.
    pub fn modulus(&self) -> &[Elem] {
        &self.0.modulus
    }

    pub fn modulus_poly(&self) -> Option<Poly> {
        self.0.base.as_ref().map(|b| Poly::new(b, self.0.modulus.clone()))
    }

    /// Exponent applied by [`Field::conjugate`]; 1 means the identity.
    pub fn conjugation_exponent(&self) -> u64 {
        self.0.conj_exp
    }

    pub fn has_conjugation(&self) -> bool {
        self.0.conj_exp != 1
    }

    /// The smallest element generating the multiplicative group.
    pub fn generator(&self) -> Elem {
        self.0.exp[1 % self.0.exp.len()]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.0.q
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.0.q
    }

    /// The image of the integer `n` (reduced modulo `p`).
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.0.p as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return a ^ b;
        }
        if self.0.digits == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            let s = (a % p + b % p) % p;
            out += s * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        if self.0.digits == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += ((p - a % p) % p) * place;
            place *= p;
            a /= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.0;
        inner.exp[(inner.log[a as usize] + inner.log[b as usize]) as usize]
    }

    /// Inverse of a nonzero element. Panics on zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        let order = self.0.q - 1;
        self.0.exp[((order - self.0.log[a as usize]) % order) as usize]
    }

    pub fn checked_inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv(a))
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.checked_inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.0.q - 1) as u64;
        let k = (self.0.log[a as usize] as u64 * (e % order)) % order;
        self.0.exp[k as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> u64 {
        assert!(a != 0, "order of zero");
        let group = (self.0.q - 1) as u64;
        let l = self.0.log[a as usize] as u64;
        group / crate::arith::gcd(l, group)
    }

    /// `a^(conjugation exponent)`: the Frobenius power realising `Y -> Y^-1`
    /// on a self-reciprocal constituent, identity everywhere else.
    pub fn conjugate(&self, a: Elem) -> Elem {
        if self.0.conj_exp == 1 {
            a
        } else {
            self.pow(a, self.0.conj_exp)
        }
    }

    /// Coefficients of `a` over the base field (length [`Field::degree`]).
    pub fn coeffs(&self, a: Elem) -> Vec<Elem> {
        let d = self.degree();
        match &self.0.base {
            None => vec![a],
            Some(base) => split_digits(a, base.q(), d),
        }
    }

    /// Inverse of [`Field::coeffs`]; shorter inputs are zero-padded.
    pub fn from_coeffs(&self, coeffs: &[Elem]) -> Elem {
        match &self.0.base {
            None => coeffs.first().copied().unwrap_or(0) % self.0.p,
            Some(base) => {
                let bq = base.q();
                coeffs.iter().rev().fold(0, |acc, &c| acc * bq + c)
            }
        }
    }

    /// Coefficients over the prime field, flattened through every level.
    pub fn prime_coeffs(&self, a: Elem) -> Vec<u32> {
        split_digits(a, self.0.p, self.0.digits as usize)
    }

    pub fn from_prime_coeffs(&self, coeffs: &[u32]) -> Elem {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.0.p + c)
    }

    /// The class of the variable (`x` or `Y`) in an extension.
    pub fn variable(&self) -> Elem {
        match &self.0.base {
            None => 0,
            Some(_) if self.degree() == 1 => {
                // Y mod (Y - c) is c.
                self.0.base.as_ref().unwrap().neg(self.0.modulus[0])
            }
            Some(base) => base.q(),
        }
    }
}

fn split_digits(mut a: Elem, radix: u32, len: usize) -> Vec<Elem> {
    let mut out = vec![0; len];
    for slot in out.iter_mut() {
        *slot = a % radix;
        a /= radix;
    }
    out
}

fn prime_tables(p: u32) -> (Vec<Elem>, Vec<u32>) {
    let order = (p - 1) as u64;
    let divisors = prime_divisors(order);
    let pw = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= p as u64;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r
    };
    let g = (1..p as u64)
        .find(|&g| divisors.iter().all(|&r| pw(g, order / r) != 1))
        .expect("prime field has a primitive root");
    fill_tables(p, |x| ((x as u64 * g) % p as u64) as Elem)
}

fn extension_tables(base: &Field, modulus: &[Elem], q: u32) -> (Vec<Elem>, Vec<u32>) {
    let mul = |a: Elem, b: Elem| slow_mul(base, modulus, a, b);
    let pow = |a: Elem, mut e: u64| {
        let (mut r, mut b) = (1, a);
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let order = (q - 1) as u64;
    let divisors = prime_divisors(order);
    let g = (1..q)
        .find(|&g| divisors.iter().all(|&r| pow(g, order / r) != 1))
        .expect("finite field has a primitive element");
    fill_tables(q, |x| mul(x, g))
}

/// `exp` holds `g^k` for `k < 2(q-1)` so that a sum of two logs indexes it
/// without reduction.
fn fill_tables(q: u32, mut times_g: impl FnMut(Elem) -> Elem) -> (Vec<Elem>, Vec<u32>) {
    let order = (q - 1) as usize;
    let mut exp = vec![0; 2 * order];
    let mut log = vec![0; q as usize];
    let mut x = 1;
    for k in 0..order {
        exp[k] = x;
        exp[k + order] = x;
        log[x as usize] = k as u32;
        x = times_g(x);
    }
    (exp, log)
}

fn slow_mul(base: &Field, modulus: &[Elem], a: Elem, b: Elem) -> Elem {
    let d = modulus.len() - 1;
    let bq = base.q();
    let ac = split_digits(a, bq, d);
    let bc = split_digits(b, bq, d);
    let mut prod = vec![0; 2 * d - 1];
    for (i, &x) in ac.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in bc.iter().enumerate() {
            prod[i + j] = base.add(prod[i + j], base.mul(x, y));
        }
    }
    for k in (d..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        for t in 0..d {
            prod[k - d + t] = base.sub(prod[k - d + t], base.mul(c, modulus[t]));
        }
        prod[k] = 0;
    }
    prod[..d].iter().rev().fold(0, |acc, &c| acc * bq + c)
}

/// A field element bundled with its field, for checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in {}", self.field.coeffs(self.value), self.field)
    }
}

impl FieldElement {
    pub fn new(field: &Field, value: Elem) -> Result<Self> {
        if !field.contains(value) {
            return Err(Error::BadParameters(format!("{value} is not an element of {field}")));
        }
        Ok(FieldElement { field: field.clone(), value })
    }

    pub fn from_coeffs(field: &Field, coeffs: &[Elem]) -> Result<Self> {
        Self::new(field, field.from_coeffs(coeffs))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn coeffs(&self) -> Vec<Elem> {
        self.field.coeffs(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: Elem) -> Self {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.checked_inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.value, e))
    }

    pub fn conjugate(&self) -> Self {
        self.with(self.field.conjugate(self.value))
    }
}

/// Some `gamma` with `gamma^2 + 1 = 0`, found by enumerating the field.
/// In characteristic 2 this is `1`.
pub fn find_sqrt_minus_one(field: &Field) -> Option<Elem> {
    if field.p() == 2 {
        return Some(1);
    }
    field
        .elements()
        .find(|&a| field.add(field.mul(a, a), 1) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.kind(), FieldKind::Prime);
        assert!(f2.modulus().is_empty());
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.inv(2), 2);
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn gf4_modulus_and_product() {
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        // x * x = x + 1
        let x = f4.variable();
        assert_eq!(f4.coeffs(f4.mul(x, x)), vec![1, 1]);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(Field::new(2, 21), Err(Error::BoundExceeded { .. })));
        assert!(matches!(Field::with_bound(3, 3, 20), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn pow_to_group_order_is_one() {
        for (p, e) in [(2, 3), (3, 2), (5, 1), (7, 2)] {
            let f = Field::new(p, e).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(a, (f.q() - 1) as u64), 1);
            }
        }
    }

    #[test]
    fn conjugation_on_gf4_constituent() {
        let f2 = Field::prime(2).unwrap();
        let g = Poly::new(&f2, vec![1, 1, 1]);
        let gf = Field::constituent(&f2, &g).unwrap();
        assert!(gf.has_conjugation());
        let y = gf.variable();
        assert_eq!(gf.coeffs(gf.conjugate(y)), vec![1, 1]);
        assert_eq!(gf.conjugate(1), 1);
        // a degree-one modulus gives the identity.
        let lin = Field::constituent(&f2, &Poly::new(&f2, vec![1, 1])).unwrap();
        assert!(!lin.has_conjugation());
    }

    #[test]
    fn sqrt_minus_one_examples() {
        assert_eq!(find_sqrt_minus_one(&Field::prime(2).unwrap()), Some(1));
        assert_eq!(find_sqrt_minus_one(&Field::prime(5).unwrap()), Some(2));
        assert_eq!(find_sqrt_minus_one(&Field::prime(3).unwrap()), None);
        assert!(find_sqrt_minus_one(&Field::new(3, 2).unwrap()).is_some());
    }

    #[test]
    fn checked_element_errors() {
        let f3 = Field::prime(3).unwrap();
        let f5 = Field::prime(5).unwrap();
        let a = FieldElement::new(&f3, 2).unwrap();
        let b = FieldElement::new(&f5, 2).unwrap();
        assert_eq!(a.add(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(FieldElement::new(&f3, 0).unwrap().inv().unwrap_err(), Error::DivisionByZero);
        assert_eq!(a.inv().unwrap().value(), 2);
    }

    #[test]
    fn explicit_modulus_is_validated() {
        assert!(Field::from_modulus(2, &[1, 1, 1]).is_ok());
        assert!(matches!(Field::from_modulus(2, &[1, 0, 1]), Err(Error::NotIrreducible { .. })));
    }
}
