//! Cyclic codes `<g(x)>` in `F_q[x]/(x^n - 1)`.

use std::fmt;

use crate::arith::{gcd, mod_inverse, multiplicative_order, prime_divisors};
use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::linear_code::{LinearCode, MonomialMap};
use crate::polynomial::{smallest_irreducible, Poly};

#[derive(Clone, PartialEq, Eq)]
pub struct CyclicCode {
    field: Field,
    n: usize,
    g: Poly,
}

impl fmt::Display for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}> of length {} over {}", self.g.display("x"), self.n, self.field)
    }
}

impl fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl CyclicCode {
    /// `<g>` for monic `g | x^n - 1` with `gcd(n, q) = 1`.
    pub fn new(field: &Field, n: usize, g: &Poly) -> Result<CyclicCode> {
        if n == 0 || n % field.p() as usize == 0 {
            return Err(Error::NotCoprime { n, q: field.q() });
        }
        Self::unchecked_length(field, n, g)
    }

    /// Like [`CyclicCode::new`] but allowing repeated-root lengths.
    pub fn unchecked_length(field: &Field, n: usize, g: &Poly) -> Result<CyclicCode> {
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        if n == 0 {
            return Err(Error::BadParameters("length must be positive".into()));
        }
        if !g.is_monic() {
            return Err(Error::BadParameters("generator must be monic".into()));
        }
        if !g.divides(&Poly::x_pow_minus_one(field, n))? {
            return Err(Error::NotDivisor { n });
        }
        Ok(CyclicCode { field: field.clone(), n, g: g.clone() })
    }

    /// Recovers the generator of a shift-invariant linear code.
    pub fn from_linear(code: &LinearCode) -> Result<CyclicCode> {
        let field = code.field();
        let n = code.len();
        if n == 0 {
            return Err(Error::BadParameters("length must be positive".into()));
        }
        let modulus = Poly::x_pow_minus_one(field, n);
        let mut g = modulus.clone();
        for row in code.generator() {
            g = g.gcd(&Poly::new(field, row.clone()))?;
        }
        let c = CyclicCode { field: field.clone(), n, g };
        if c.to_linear() != *code {
            return Err(Error::NotShiftInvariant { l: 1 });
        }
        Ok(c)
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

    pub fn generator(&self) -> &Poly {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.n - self.g.degree().unwrap_or(0)
    }

    /// `h = (x^n - 1) / g`.
    pub fn check_polynomial(&self) -> Poly {
        Poly::x_pow_minus_one(&self.field, self.n).exact_div(&self.g).ok().flatten().expect("g divides x^n - 1")
    }

    /// Generator matrix with rows `x^i g`, `0 <= i < k`.
    pub fn to_linear(&self) -> LinearCode {
        let k = self.dim();
        let rows: Vec<Vec<Elem>> = (0..k)
            .map(|i| {
                let mut row = vec![0; self.n];
                for (j, &c) in self.g.coeffs().iter().enumerate() {
                    row[i + j] = c;
                }
                row
            })
            .collect();
        LinearCode::from_rows(&self.field, self.n, &rows).expect("rows have length n")
    }

    /// `<h*>`, cross-checked against the kernel of the expanded matrix.
    pub fn dual(&self) -> Result<CyclicCode> {
        let h = self.check_polynomial();
        let d = CyclicCode { field: self.field.clone(), n: self.n, g: h.reciprocal()? };
        if d.to_linear() != self.to_linear().euclidean_dual() {
            return Err(Error::RouteMismatch("cyclic dual disagrees with the kernel dual"));
        }
        Ok(d)
    }

    /// `{i : g(alpha^i) = 0}` for the canonical primitive `n`-th root `alpha`.
    pub fn defining_set(&self) -> Result<Vec<usize>> {
        Ok(SplittingField::new(&self.field, self.n)?.defining_set(&self.g))
    }

    /// `mu_a(C)`: the generator route `gcd(x^n - 1, g(x^a))`, checked against
    /// the defining-set route `a^-1 T` whenever the length is coprime to `q`.
    pub fn multiplier_apply(&self, a: usize) -> Result<CyclicCode> {
        let g = self.multiplier_generator(a)?;
        let out = CyclicCode { field: self.field.clone(), n: self.n, g };
        if self.n % self.field.p() as usize != 0 {
            let sf = SplittingField::new(&self.field, self.n)?;
            if sf.multiplier_generator(&self.g, a)? != out.g {
                return Err(Error::RouteMismatch("multiplier routes disagree"));
            }
        }
        Ok(out)
    }

    fn multiplier_generator(&self, a: usize) -> Result<Poly> {
        let modulus = Poly::x_pow_minus_one(&self.field, self.n);
        modulus.gcd(&self.g.power_var(a, self.n)?)
    }

    /// Smallest `a` in `(Z/n)^*` with `mu_a(self) = other`.
    pub fn multiplier_equivalent(&self, other: &CyclicCode) -> Result<Option<usize>> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, found: other.n });
        }
        if self.dim() != other.dim() {
            return Ok(None);
        }
        for a in units(self.n) {
            if self.multiplier_generator(a)? == other.g {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }

    /// `<g*>` and the coordinate map `i -> -i` carrying this code onto it.
    pub fn reciprocal_code(&self) -> Result<(CyclicCode, MonomialMap)> {
        let out = CyclicCode { field: self.field.clone(), n: self.n, g: self.g.reciprocal()? };
        let witness = negation_map(self.n);
        verify(&self.to_linear(), &witness, &out.to_linear())?;
        Ok((out, witness))
    }

    /// `<g(lambda x)>` and the diagonal map `diag[i] = lambda^i`.
    pub fn scale_code(&self, lambda: Elem) -> Result<(CyclicCode, MonomialMap)> {
        let f = &self.field;
        if lambda == 0 || !f.contains(lambda) || f.pow(lambda, self.n as u64) != 1 {
            return Err(Error::NotRootOfUnity { n: self.n });
        }
        let out = CyclicCode { field: f.clone(), n: self.n, g: self.g.scale_var(lambda)?.monic() };
        let witness = power_diagonal(f, self.n, lambda);
        verify(&self.to_linear(), &witness, &out.to_linear())?;
        Ok((out, witness))
    }
}

/// Coordinate action of `mu_a`: position `i` moves to `a i mod n`.
pub fn multiplier_map(n: usize, a: usize) -> Result<MonomialMap> {
    if n == 0 || gcd(a as u64, n as u64) != 1 {
        return Err(Error::MultiplierNotCoprime { a, n });
    }
    MonomialMap::permutation((0..n).map(|i| i * a % n).collect())
}

/// `(Z/n)^*` in increasing order (`{1}` for `n = 1`).
pub fn units(n: usize) -> impl Iterator<Item = usize> {
    (1..n.max(2)).filter(move |&a| gcd(a as u64, n as u64) == 1)
}

fn negation_map(n: usize) -> MonomialMap {
    MonomialMap::permutation((0..n).map(|i| (n - i) % n).collect()).expect("bijection")
}

fn power_diagonal(field: &Field, n: usize, lambda: Elem) -> MonomialMap {
    let mut diag = Vec::with_capacity(n);
    let mut x = 1;
    for _ in 0..n {
        diag.push(x);
        x = field.mul(x, lambda);
    }
    MonomialMap::diagonal(diag).expect("nonzero powers")
}

fn verify(from: &LinearCode, map: &MonomialMap, to: &LinearCode) -> Result<()> {
    if from.apply_monomial(map)? != *to {
        return Err(Error::RouteMismatch("witness does not carry the code onto its image"));
    }
    Ok(())
}

/// For `g f = x^n - 1`, the map `i -> -i` carrying `<g>` onto `<f>^perp = <g*>`.
pub fn cofactor_dual_equivalence(g: &Poly, f: &Poly, n: usize) -> Result<MonomialMap> {
    let field = g.field();
    if f.field() != field {
        return Err(Error::FieldMismatch);
    }
    if n == 0 || g.try_mul(f)? != Poly::x_pow_minus_one(field, n) {
        return Err(Error::NotCofactors { n });
    }
    let c = CyclicCode { field: field.clone(), n, g: g.monic() };
    let d = CyclicCode { field: field.clone(), n, g: f.monic() };
    let witness = negation_map(n);
    verify(&c.to_linear(), &witness, &d.to_linear().euclidean_dual())?;
    Ok(witness)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsodualVariant {
    /// `<(x - 1) f(-x)>`.
    A,
    /// `<(x + 1) f(x)>`.
    B,
}

#[derive(Debug, Clone)]
pub struct IsodualCyclic {
    pub code: CyclicCode,
    /// Carries `code` onto its Euclidean dual.
    pub witness: MonomialMap,
    pub self_dual: bool,
}

/// Length-`2s` isodual cyclic code from `x^s - 1 = (x - 1) f(x)`, `s` odd.
///
/// In characteristic 2 the two variants coincide and the length is a
/// repeated-root length, which is accepted here.
pub fn construct_isodual_cyclic(field: &Field, s: usize, variant: IsodualVariant) -> Result<IsodualCyclic> {
    let p = field.p() as usize;
    if s == 0 || s % 2 == 0 || s % p == 0 {
        return Err(Error::BadParameters(format!(
            "s must be odd and coprime to q = {}, got {s}",
            field.q()
        )));
    }
    let x = Poly::x(field);
    let one = Poly::one(field);
    let f = Poly::x_pow_minus_one(field, s).exact_div(&x.sub(&one))?.expect("x - 1 divides x^s - 1");
    let g = match variant {
        IsodualVariant::A => x.sub(&one).mul(&f.negate_var()),
        IsodualVariant::B => x.add(&one).mul(&f),
    };
    let n = 2 * s;
    let code = CyclicCode::unchecked_length(field, n, &g)?;
    let linear = code.to_linear();
    let dual = linear.euclidean_dual();
    let self_dual = linear == dual;
    let witness = if self_dual {
        MonomialMap::identity(n)
    } else {
        // The dual is <h*> and h* is a scalar multiple of g*(-x).
        let minus_one = field.neg(1);
        negation_map(n).then(&power_diagonal(field, n, minus_one), field)
    };
    verify(&linear, &witness, &dual)?;
    Ok(IsodualCyclic { code, witness, self_dual })
}

/// `F_{q^k} = F_q[z]/(M)` with `n | q^k - 1` and a fixed primitive `n`-th
/// root of unity. Elements are polynomials reduced mod `M`, so no tables are
/// built and `q^k` may exceed the field-table bound.
#[derive(Debug, Clone)]
pub struct SplittingField {
    base: Field,
    n: usize,
    modulus: Poly,
    alpha: Poly,
}

impl SplittingField {
    /// `M` is the smallest monic irreducible of degree `k = ord_n(q)` and
    /// `alpha = beta^((q^k - 1) / n)` for the smallest primitive `beta`, both
    /// in the encoding order used by [`Field`].
    pub fn new(base: &Field, n: usize) -> Result<SplittingField> {
        if n == 0 || n % base.p() as usize == 0 {
            return Err(Error::NotCoprime { n, q: base.q() });
        }
        let q = base.q() as u64;
        let k = multiplicative_order(q, n as u64) as usize;
        let size = q.checked_pow(k as u32).filter(|&s| s < 1 << 62).ok_or(Error::TooLarge(u64::MAX))?;
        let modulus = smallest_irreducible(base, k);
        let order = size - 1;
        let primes = prime_divisors(order);
        let mut code = 1u64;
        let beta = loop {
            let mut digits = Vec::with_capacity(k);
            let mut c = code;
            for _ in 0..k {
                digits.push((c % q) as Elem);
                c /= q;
            }
            let cand = Poly::new(base, digits);
            let primitive = primes
                .iter()
                .all(|&r| !cand.pow_mod(order / r, &modulus).expect("nonzero modulus").is_one());
            if primitive {
                break cand;
            }
            code += 1;
        };
        let alpha = beta.pow_mod(order / n as u64, &modulus)?;
        Ok(SplittingField { base: base.clone(), n, modulus, alpha })
    }

    /// The same field with `alpha` replaced by `alpha^j`, `gcd(j, n) = 1`.
    pub fn with_alpha_power(&self, j: usize) -> Result<SplittingField> {
        if gcd(j as u64, self.n as u64) != 1 {
            return Err(Error::MultiplierNotCoprime { a: j, n: self.n });
        }
        let alpha = self.alpha.pow_mod(j as u64, &self.modulus)?;
        Ok(SplittingField { alpha, ..self.clone() })
    }

    /// Degree `k` of the extension.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn alpha(&self) -> &Poly {
        &self.alpha
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul_mod(b, &self.modulus).expect("nonzero modulus")
    }

    fn eval(&self, g: &Poly, x: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.base);
        for &c in g.coeffs().iter().rev() {
            acc = self.mul(&acc, x).add(&Poly::constant(&self.base, c));
        }
        acc
    }

    pub fn defining_set(&self, g: &Poly) -> Vec<usize> {
        let mut root = Poly::one(&self.base);
        let mut out = Vec::new();
        for i in 0..self.n {
            if self.eval(g, &root).is_zero() {
                out.push(i);
            }
            root = self.mul(&root, &self.alpha);
        }
        out
    }

    /// `prod_{i in T} (x - alpha^i)`, brought back to the base field.
    pub fn polynomial_from_defining_set(&self, set: &[usize]) -> Result<Poly> {
        let zero = Poly::zero(&self.base);
        let mut coeffs = vec![Poly::one(&self.base)];
        for &i in set {
            let root = self.alpha.pow_mod(i as u64, &self.modulus)?;
            let mut next = vec![zero.clone(); coeffs.len() + 1];
            for (j, c) in coeffs.iter().enumerate() {
                next[j + 1] = next[j + 1].add(c);
                next[j] = next[j].sub(&self.mul(c, &root));
            }
            coeffs = next;
        }
        let mut out = Vec::with_capacity(coeffs.len());
        for c in &coeffs {
            match c.degree() {
                None => out.push(0),
                Some(0) => out.push(c.coeff(0)),
                Some(_) => return Err(Error::RouteMismatch("defining set is not a union of cyclotomic cosets")),
            }
        }
        Ok(Poly::new(&self.base, out))
    }

    /// Generator of `mu_a(<g>)` through the defining set `a^-1 T`.
    pub fn multiplier_generator(&self, g: &Poly, a: usize) -> Result<Poly> {
        let inv = mod_inverse(a as u64, self.n as u64)
            .ok_or(Error::MultiplierNotCoprime { a, n: self.n })? as usize;
        let mut set: Vec<usize> = self.defining_set(g).iter().map(|&i| i * inv % self.n).collect();
        set.sort_unstable();
        self.polynomial_from_defining_set(&set)
    }
}
