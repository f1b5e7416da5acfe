//! Finite fields `F_q`, `q = p^e <= 256`.
//!
//! Elements are encoded as integer codes in `[0, q)`: the base-`p` digits of
//! a code are the coefficients of its polynomial representative, constant
//! term first. Arithmetic goes through tables built once per field.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: usize = 256;

/// Monic irreducible moduli, coefficients from the constant term upwards.
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

/// Immutable arithmetic context of a finite field.
pub struct FieldCtx {
    p: u32,
    e: u32,
    q: usize,
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    // frob[j][a] = a^(p^j)
    frob: Vec<Vec<u8>>,
}

/// Shared handle to a [`FieldCtx`]; cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldCtx>);

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds `F_{p^e}` with the built-in modulus for `(p, e)`.
pub fn field_new(p: u32, e: u32) -> Result<Field> {
    Field::new(p, e)
}

impl Field {
    pub fn new(p: u32, e: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::CompositeCharacteristic(p));
        }
        if e == 0 {
            return Err(Error::UnsupportedFieldSize { p, e });
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_ORDER as u64);
        let Some(q) = q else {
            return Err(Error::UnsupportedFieldSize { p, e });
        };
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            let Some((_, _, coeffs)) = MODULI.iter().find(|(mp, me, _)| *mp == p && *me == e) else {
                return Err(Error::UnsupportedFieldSize { p, e });
            };
            assert!(is_irreducible(coeffs, p), "built-in modulus for {p}^{e} is reducible");
            coeffs.to_vec()
        };
        Ok(Field(Arc::new(FieldCtx::build(p, e, q as usize, modulus))))
    }

    /// Field of order `q`, which must be a supported prime power.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p as u32, e)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn q(&self) -> usize {
        self.0.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn element(&self, code: u64) -> Result<FieldElement> {
        self.check_code(code)?;
        Ok(FieldElement {
            value: code as u8,
            field: self.clone(),
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            value: 0,
            field: self.clone(),
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            value: 1,
            field: self.clone(),
        }
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q()).map(|v| FieldElement {
            value: v as u8,
            field: self.clone(),
        })
    }

    pub fn check_code(&self, code: u64) -> Result<()> {
        if code >= self.q() as u64 {
            return Err(Error::ElementOutOfRange { code, q: self.q() });
        }
        Ok(())
    }

    /// The `e` automorphisms of the field, identity first.
    pub fn automorphisms(&self) -> Vec<FieldAutomorphism> {
        (0..self.e()).map(|power| FieldAutomorphism { power }).collect()
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.0.add[a as usize * self.0.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.0.mul[a as usize * self.0.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.0.neg[a as usize]
    }

    /// Inverse of a nonzero code; `inv(0)` is meaningless and returns 0.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.0.inv[a as usize]
    }

    /// `a^(p^power)`.
    #[inline]
    pub fn frobenius(&self, power: u32, a: u8) -> u8 {
        self.0.frob[power as usize][a as usize]
    }

    pub fn same_as(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.p() == other.p() && self.e() == other.e())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q())
    }
}

impl FieldCtx {
    fn build(p: u32, e: u32, q: usize, modulus: Vec<u32>) -> FieldCtx {
        let digits = |mut v: usize| -> Vec<u32> {
            let mut out = vec![0u32; e as usize];
            for d in out.iter_mut() {
                *d = (v % p as usize) as u32;
                v /= p as usize;
            }
            out
        };
        let encode =
            |poly: &[u32]| -> usize { poly.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize) };
        let polys: Vec<Vec<u32>> = (0..q).map(digits).collect();

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u32> = polys[a].iter().zip(&polys[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum) as u8;
                let prod = poly_mul_mod(&polys[a], &polys[b], &modulus, p);
                mul[a * q + b] = encode(&prod) as u8;
            }
        }
        let neg: Vec<u8> = polys
            .iter()
            .map(|a| {
                let n: Vec<u32> = a.iter().map(|&x| (p - x) % p).collect();
                encode(&n) as u8
            })
            .collect();
        let mut inv = vec![0u8; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .expect("nonzero element without inverse") as u8;
        }
        let pow = |a: u8, k: u64| -> u8 {
            let mut acc = 1u8;
            for _ in 0..k {
                acc = mul[acc as usize * q + a as usize];
            }
            acc
        };
        let frob = (0..e)
            .map(|j| {
                let k = (p as u64).pow(j);
                (0..q).map(|a| if a == 0 { 0 } else { pow(a as u8, k) }).collect()
            })
            .collect();
        FieldCtx {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            frob,
        }
    }
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * e.max(1)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (e..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        // modulus is monic: subtract c * x^(deg-e) * modulus
        for (k, &m) in modulus.iter().enumerate() {
            let idx = deg - e + k;
            prod[idx] = (prod[idx] + (p - c) * m) % p;
        }
    }
    prod.truncate(e);
    prod
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                divisor.push((c % p as u64) as u32);
                c /= p as u64;
            }
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(a: &[u32], monic: &[u32], p: u32) -> Vec<u32> {
    let d = monic.len() - 1;
    let mut r = a.to_vec();
    for deg in (d..r.len()).rev() {
        let c = r[deg];
        if c == 0 {
            continue;
        }
        for (k, &m) in monic.iter().enumerate() {
            let idx = deg - d + k;
            r[idx] = (r[idx] + (p - c) * m) % p;
        }
    }
    r.truncate(d);
    r
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// An element of a finite field, tagged with its field.
#[derive(Clone)]
pub struct FieldElement {
    value: u8,
    field: Field,
}

impl FieldElement {
    pub fn value(&self) -> u8 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field.same_as(&other.field) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn with(&self, value: u8) -> FieldElement {
        FieldElement {
            value,
            field: self.field.clone(),
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.with(self.field.inv(self.value)))
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Code order; carries no algebraic meaning.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.field.p(), self.field.e(), self.value).cmp(&(other.field.p(), other.field.e(), other.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The automorphism `x -> x^(p^power)` of a field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldAutomorphism {
    power: u32,
}

impl FieldAutomorphism {
    pub const IDENTITY: FieldAutomorphism = FieldAutomorphism { power: 0 };

    pub fn new(field: &Field, power: u32) -> Result<FieldAutomorphism> {
        if power >= field.e() {
            return Err(Error::Parse(format!(
                "Frobenius power {power} out of range for F_{}",
                field.q()
            )));
        }
        Ok(FieldAutomorphism { power })
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0
    }

    pub fn compose(&self, other: &FieldAutomorphism, field: &Field) -> FieldAutomorphism {
        FieldAutomorphism {
            power: (self.power + other.power) % field.e(),
        }
    }

    pub fn inverse(&self, field: &Field) -> FieldAutomorphism {
        FieldAutomorphism {
            power: (field.e() - self.power) % field.e(),
        }
    }

    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        a.with(a.field.frobenius(self.power, a.value))
    }
}

/// `a^(p^power)` for the automorphism `phi`.
pub fn frobenius_apply(phi: &FieldAutomorphism, a: &FieldElement) -> FieldElement {
    phi.apply(a)
}
