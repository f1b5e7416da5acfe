//! Subspaces of `F_q^n` in canonical form and the actions of `GL_n` and `ΓL_n`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldAutomorphism, FieldElement};
use crate::linalg::{rref_in_place, Matrix};

/// Default cap on the number of subspaces [`enumerate_grassmannian`] will list.
pub const ENUMERATION_CAP: u128 = 1 << 20;

/// The space `F_q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientSpace {
    field: Field,
    n: usize,
}

impl AmbientSpace {
    pub fn new(field: &Field, n: usize) -> Result<AmbientSpace> {
        if n == 0 {
            return Err(Error::ShapeMismatch("ambient dimension must be at least 1".into()));
        }
        Ok(AmbientSpace {
            field: field.clone(),
            n,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// A subspace, stored as the nonzero rows of its reduced row echelon basis.
///
/// Two subspaces are equal exactly when their bases are equal.
#[derive(Clone)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    /// Row space of `rows`; the rows need not be independent.
    pub fn from_rows(ambient: &AmbientSpace, rows: &Matrix) -> Result<Subspace> {
        if rows.cols() != ambient.n {
            return Err(Error::ShapeMismatch(format!(
                "{} columns in F_q^{}",
                rows.cols(),
                ambient.n
            )));
        }
        if !rows.field().same_as(&ambient.field) {
            return Err(Error::MixedFields);
        }
        Ok(Subspace::canonical(&ambient.field, ambient.n, rows.data().to_vec()))
    }

    /// Row space of integer-coded vectors.
    pub fn from_vectors(ambient: &AmbientSpace, vectors: &[Vec<u64>]) -> Result<Subspace> {
        let m = Matrix::from_rows(&ambient.field, ambient.n, vectors)?;
        Subspace::from_rows(ambient, &m)
    }

    /// Span of standard basis vectors, 1-based as in `<e_1, e_3>`.
    pub fn coordinate(ambient: &AmbientSpace, indices: &[usize]) -> Result<Subspace> {
        let vectors: Vec<Vec<u64>> = indices
            .iter()
            .map(|&i| {
                if i == 0 || i > ambient.n {
                    return Err(Error::ShapeMismatch(format!("e_{i} in F_q^{}", ambient.n)));
                }
                let mut v = vec![0; ambient.n];
                v[i - 1] = 1;
                Ok(v)
            })
            .collect::<Result<_>>()?;
        Subspace::from_vectors(ambient, &vectors)
    }

    pub(crate) fn canonical(field: &Field, n: usize, mut data: Vec<u8>) -> Subspace {
        let rows = data.len() / n;
        let rank = rref_in_place(field, &mut data, rows, n).len();
        data.truncate(rank * n);
        Subspace {
            basis: Matrix::from_raw(field, rank, n, data),
        }
    }

    pub fn zero(ambient: &AmbientSpace) -> Subspace {
        Subspace {
            basis: Matrix::zeros(&ambient.field, 0, ambient.n),
        }
    }

    pub fn full(ambient: &AmbientSpace) -> Subspace {
        Subspace {
            basis: Matrix::identity(&ambient.field, ambient.n),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn n(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> AmbientSpace {
        AmbientSpace {
            field: self.field().clone(),
            n: self.n(),
        }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn same_ambient(&self, other: &Subspace) -> bool {
        self.n() == other.n() && self.field().same_as(other.field())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut data = self.basis.data().to_vec();
        data.extend_from_slice(other.basis.data());
        Ok(Subspace::canonical(self.field(), self.n(), data))
    }

    /// Intersection by Zassenhaus: reduce `[U U; V 0]` and read the rows
    /// whose left half vanished.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.n();
        let w = 2 * n;
        let rows = self.dim() + other.dim();
        let mut data = vec![0u8; rows * w];
        for i in 0..self.dim() {
            let r = self.basis.row(i);
            data[i * w..i * w + n].copy_from_slice(r);
            data[i * w + n..(i + 1) * w].copy_from_slice(r);
        }
        for j in 0..other.dim() {
            let i = self.dim() + j;
            data[i * w..i * w + n].copy_from_slice(other.basis.row(j));
        }
        let pivots = rref_in_place(self.field(), &mut data, rows, w);
        let mut out = Vec::new();
        for (i, &c) in pivots.iter().enumerate() {
            if c >= n {
                out.extend_from_slice(&data[i * w + n..(i + 1) * w]);
            }
        }
        Ok(Subspace::canonical(self.field(), n, out))
    }

    /// Whether `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.is_subspace_of_unchecked(other))
    }

    pub(crate) fn is_subspace_of_unchecked(&self, other: &Subspace) -> bool {
        if self.dim() > other.dim() {
            return false;
        }
        (0..self.dim()).all(|i| other.contains_vector(self.basis.row(i)))
    }

    /// Membership of a vector of element codes.
    pub fn contains_vector(&self, v: &[u8]) -> bool {
        let f = self.field();
        let mut v = v.to_vec();
        let mut r = 0;
        // basis is in RREF: eliminate each pivot coordinate in turn
        for c in 0..self.n() {
            if r == self.dim() {
                break;
            }
            if self.basis.get(r, c) == 0 {
                continue;
            }
            let factor = v[c];
            if factor != 0 {
                let neg = f.neg(factor);
                for (j, x) in v.iter_mut().enumerate().skip(c) {
                    *x = f.add(*x, f.mul(neg, self.basis.get(r, j)));
                }
            }
            r += 1;
        }
        v.iter().all(|&x| x == 0)
    }

    /// `dim(U + V) - dim(U ∩ V)`.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        let s = self.sum(other)?.dim();
        Ok(2 * s - self.dim() - other.dim())
    }

    /// `rowsp(φ(U A))`.
    pub fn act(&self, g: &GroupElement) -> Result<Subspace> {
        if g.n() != self.n() {
            return Err(Error::AmbientMismatch);
        }
        if !g.field().same_as(self.field()) {
            return Err(Error::MixedFields);
        }
        Ok(self.act_unchecked(&g.matrix, g.automorphism))
    }

    /// One past the last coordinate used by the basis; `U · A` reads only
    /// that many leading rows of `A`.
    pub(crate) fn support_len(&self) -> usize {
        let n = self.n();
        (0..n)
            .rev()
            .find(|&j| (0..self.dim()).any(|i| self.basis.get(i, j) != 0))
            .map_or(0, |j| j + 1)
    }

    pub(crate) fn act_unchecked(&self, a: &Matrix, phi: FieldAutomorphism) -> Subspace {
        let img = self.basis.mul_unchecked(a).apply_automorphism(&phi);
        Subspace::canonical(self.field(), self.n(), img.data().to_vec())
    }
}

pub fn subspace_from_rows(ambient: &AmbientSpace, rows: &Matrix) -> Result<Subspace> {
    Subspace::from_rows(ambient, rows)
}

pub fn subspace_distance(u: &Subspace, v: &Subspace) -> Result<usize> {
    u.distance(v)
}

pub fn act(u: &Subspace, g: &GroupElement) -> Result<Subspace> {
    u.act(g)
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.hash(state);
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dimension first, then lexicographic order of the RREF basis.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.basis.cmp(&other.basis)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for i in 0..self.dim() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.basis.row(i))?;
        }
        write!(f, ">")
    }
}

/// Which group acts: `GL_n(F_q)` or `ΓL_n(F_q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Linear,
    Semilinear,
}

/// An element `(A, φ)` of `ΓL_n(F_q)`; linear when `φ` is the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    matrix: Matrix,
    automorphism: FieldAutomorphism,
}

impl GroupElement {
    pub fn linear(matrix: Matrix) -> Result<GroupElement> {
        GroupElement::semilinear(matrix, FieldAutomorphism::IDENTITY)
    }

    pub fn semilinear(matrix: Matrix, automorphism: FieldAutomorphism) -> Result<GroupElement> {
        if !matrix.is_square() {
            return Err(Error::ShapeMismatch("group elements need a square matrix".into()));
        }
        if automorphism.power() >= matrix.field().e() {
            return Err(Error::Parse(format!(
                "Frobenius power {} out of range",
                automorphism.power()
            )));
        }
        if !matrix.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(GroupElement { matrix, automorphism })
    }

    pub(crate) fn from_parts_unchecked(matrix: Matrix, automorphism: FieldAutomorphism) -> GroupElement {
        GroupElement { matrix, automorphism }
    }

    pub fn identity(field: &Field, n: usize) -> GroupElement {
        GroupElement {
            matrix: Matrix::identity(field, n),
            automorphism: FieldAutomorphism::IDENTITY,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn automorphism(&self) -> FieldAutomorphism {
        self.automorphism
    }

    pub fn is_linear(&self) -> bool {
        self.automorphism.is_identity()
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }

    /// `(A, φ)(B, φ') = (A φ^{-1}(B), φφ')`; acting by the product equals
    /// acting by `self` and then by `other`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.n() != other.n() {
            return Err(Error::AmbientMismatch);
        }
        let f = self.field();
        let twisted = other.matrix.apply_automorphism(&self.automorphism.inverse(f));
        Ok(GroupElement {
            matrix: self.matrix.mul(&twisted)?,
            automorphism: self.automorphism.compose(&other.automorphism, f),
        })
    }

    pub fn inverse(&self) -> GroupElement {
        let f = self.field();
        let inv = self.matrix.inverse().expect("group elements are invertible");
        GroupElement {
            matrix: inv.apply_automorphism(&self.automorphism),
            automorphism: self.automorphism.inverse(f),
        }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Frobenius power first, then the matrix; this is the search order.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.automorphism, &self.matrix).cmp(&(other.automorphism, &other.matrix))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_linear() {
            write!(f, "{:?}", self.matrix)
        } else {
            write!(f, "({:?}, φ^{})", self.matrix, self.automorphism.power())
        }
    }
}

/// Gaussian binomial `[n choose k]_q`, `None` on overflow.
pub fn gaussian_binomial(n: usize, k: usize, q: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.checked_mul(q.checked_pow((n - i) as u32)?.checked_sub(1)?)?;
        den = den.checked_mul(q.checked_pow((i + 1) as u32)?.checked_sub(1)?)?;
    }
    Some(num / den)
}

/// All `k`-dimensional subspaces, each once, in canonical order.
pub fn enumerate_grassmannian(ambient: &AmbientSpace, k: usize) -> Result<Vec<Subspace>> {
    enumerate_grassmannian_capped(ambient, k, ENUMERATION_CAP)
}

pub fn enumerate_grassmannian_capped(ambient: &AmbientSpace, k: usize, cap: u128) -> Result<Vec<Subspace>> {
    let n = ambient.n;
    if k > n {
        return Err(Error::DimensionMismatch { expected: n, got: k });
    }
    let q = ambient.field.q();
    let count = gaussian_binomial(n, k, q as u128).unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::TooLarge {
            needed: count,
            budget: cap,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut pivots = Vec::with_capacity(k);
    pivot_sets(n, k, 0, &mut pivots, &mut |piv| {
        // free slots: (row, col) with col > pivot of row and col not a pivot
        let free: Vec<(usize, usize)> = piv
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..n).filter(|c| !piv.contains(c)).map(move |c| (r, c)))
            .collect();
        let mut digits = vec![0u8; free.len()];
        loop {
            let mut data = vec![0u8; k * n];
            for (r, &p) in piv.iter().enumerate() {
                data[r * n + p] = 1;
            }
            for (&(r, c), &d) in free.iter().zip(&digits) {
                data[r * n + c] = d;
            }
            out.push(Subspace {
                basis: Matrix::from_raw(&ambient.field, k, n, data),
            });
            // odometer increment
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return;
                }
                digits[i] += 1;
                if (digits[i] as usize) < q {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    });
    out.sort();
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}

fn pivot_sets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        visit(cur);
        return;
    }
    for c in start..n {
        cur.push(c);
        pivot_sets(n, k, c + 1, cur, visit);
        cur.pop();
    }
}

/// Whether the scalar matrix `λ I_n` fixes `u` (it always does).
pub fn scalar_fix_check(lambda: &FieldElement, u: &Subspace) -> Result<bool> {
    if lambda.is_zero() {
        return Err(Error::Singular);
    }
    if !lambda.field().same_as(u.field()) {
        return Err(Error::MixedFields);
    }
    let g = GroupElement::linear(Matrix::scalar(u.field(), u.n(), lambda.value()))?;
    Ok(u.act(&g)? == *u)
}
