//! Dense univariate polynomials over a [`Field`].

mod factor;

pub use factor::{factor_cyclic_modulus, FactorClassification};

use std::cmp::Ordering;
use std::fmt;

use crate::arith::gcd as int_gcd;
use crate::error::{Error, Result};
use crate::galois::{Elem, Field};

/// Ascending coefficients with trailing zeros stripped; the zero polynomial
/// has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(field: &Field, c: Elem, k: usize) -> Poly {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly::new(field, coeffs)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(field: &Field, n: usize) -> Poly {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = field.add(coeffs[0], field.neg(1));
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    fn ensure_same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(self.field.inv(self.lead()))
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.ensure_same_field(other)?;
        Ok(self.add(other))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.ensure_same_field(other)?;
        Ok(self.sub(other))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.ensure_same_field(other)?;
        Ok(self.mul(other))
    }

    /// Panics if the operands live over different fields; see [`Poly::try_add`].
    pub fn add(&self, other: &Poly) -> Poly {
        assert!(self.field == other.field, "polynomials over different fields");
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert!(self.field == other.field, "polynomials over different fields");
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert!(self.field == other.field, "polynomials over different fields");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.ensure_same_field(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv_lead = f.inv(divisor.lead());
        let mut quot = vec![0; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = f.mul(rem[k], inv_lead);
            if c == 0 {
                continue;
            }
            quot[k - dd] = c;
            for (t, &b) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + t] = f.sub(rem[k - dd + t], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.divmod(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.ensure_same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `(d, u, v)` with `d` the monic gcd and `u*self + v*other = d`.
    pub fn egcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.ensure_same_field(other)?;
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let c = f.inv(r0.lead());
        Ok((r0.scale(c), s0.scale(c), t0.scale(c)))
    }

    /// Inverse of `self` modulo `modulus`, when coprime.
    pub fn inverse_mod(&self, modulus: &Poly) -> Result<Option<Poly>> {
        let (d, u, _) = self.egcd(modulus)?;
        if !d.is_one() {
            return Ok(None);
        }
        Ok(Some(u.rem(modulus)?))
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluates at a point of `ext`, where `ext` is this polynomial's field
    /// or has it as its direct base (base elements keep their encoding).
    pub fn eval_in(&self, ext: &Field, x: Elem) -> Elem {
        debug_assert!(ext == &self.field || ext.base() == Some(&self.field));
        self.coeffs.iter().rev().fold(0, |acc, &c| ext.add(ext.mul(acc, x), c))
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        self.try_mul(other)?.rem(modulus)
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            base = base.mul_mod(&base, modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Monic reciprocal `f(0)^-1 x^deg f(1/x)`.
    pub fn reciprocal(&self) -> Result<Poly> {
        let c0 = self.coeff(0);
        if c0 == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let mut rev = self.coeffs.clone();
        rev.reverse();
        Ok(Poly::new(&self.field, rev).scale(self.field.inv(c0)))
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal().map(|r| &r == self).unwrap_or(false)
    }

    /// `f(-x)`.
    pub fn negate_var(&self) -> Poly {
        let f = &self.field;
        Poly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 1 { f.neg(c) } else { c })
                .collect(),
        )
    }

    /// `f(lambda x)`.
    pub fn scale_var(&self, lambda: Elem) -> Result<Poly> {
        if lambda == 0 {
            return Err(Error::ZeroScalar);
        }
        let f = &self.field;
        let mut power = 1;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            out.push(f.mul(c, power));
            power = f.mul(power, lambda);
        }
        Ok(Poly::new(f, out))
    }

    /// `f(x^a) mod (x^n - 1)` for `gcd(a, n) = 1`.
    pub fn power_var(&self, a: usize, n: usize) -> Result<Poly> {
        if n == 0 || int_gcd(a as u64, n as u64) != 1 {
            return Err(Error::MultiplierNotCoprime { a, n });
        }
        let f = &self.field;
        let mut out = vec![0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let k = (i as u64 * a as u64 % n as u64) as usize;
            out[k] = f.add(out[k], c);
        }
        Ok(Poly::new(f, out))
    }

    /// Exact irreducibility over the coefficient field: for every
    /// `i <= deg/2`, `gcd(f, x^(q^i) - x) = 1`.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let q = self.field.q() as u64;
        let x = Poly::x(&self.field);
        let mut h = x.clone();
        for _ in 1..=n / 2 {
            h = h.pow_mod(q, self).expect("nonzero modulus");
            let g = self.gcd(&h.sub(&x)).expect("same field");
            if !g.is_one() {
                return false;
            }
        }
        true
    }

    /// Degree first, then coefficients compared from the top down.
    pub fn cmp_canonical(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Human-readable form such as `Y^3 + Y + 1`; coefficients are printed
    /// as their integer encodings.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}

/// All monic polynomials of degree `d`, in increasing order of their lower
/// coefficients read as a base-`q` numeral (constant term least significant).
pub fn monic_polys(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.q() as u64;
    let count = q.checked_pow(d as u32).unwrap_or(u64::MAX);
    (0..count).map(move |mut t| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push((t % q) as Elem);
            t /= q;
        }
        coeffs.push(1);
        Poly::new(field, coeffs)
    })
}

/// The first monic irreducible of degree `d` in [`monic_polys`] order.
pub fn smallest_irreducible(field: &Field, d: usize) -> Poly {
    monic_polys(field, d)
        .find(|f| f.is_irreducible())
        .expect("irreducible polynomials exist in every degree")
}
