//! Exact matrix model of su(n) and SU(n) over the Gaussian rationals.
//!
//! Root spaces: `V_{jk}` (j < k) is spanned by `E_{jk} - E_{kj}` and
//! `i(E_{jk} + E_{kj})`, in that order. The torus is spanned by
//! `i(E_{kk} - E_{nn})`, k = 1..n-1. Indices in the public API are 1-based.

use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Result, SigError};
use crate::linalg::{q, sign, QMatrix, Q};

pub type GaussQ = Complex<Q>;

fn gq(re: Q, im: Q) -> GaussQ {
    Complex::new(re, im)
}

fn gi() -> GaussQ {
    gq(Q::zero(), Q::one())
}

/// Square matrix with Gaussian-rational entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CMatrix {
    n: usize,
    data: Vec<GaussQ>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![GaussQ::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = GaussQ::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 1-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &GaussQ {
        &self.data[(row - 1) * self.n + (col - 1)]
    }

    pub fn set(&mut self, row: usize, col: usize, v: GaussQ) {
        self.data[(row - 1) * self.n + (col - 1)] = v;
    }

    fn at(&self, i: usize, j: usize) -> &GaussQ {
        &self.data[i * self.n + j]
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        CMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        CMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> CMatrix {
        CMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn star(&self) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.at(i, j).conj();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn trace(&self) -> GaussQ {
        (0..self.n).map(|i| self.at(i, i).clone()).sum()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.at(i, j).is_zero()))
    }

    /// Determinant by elimination over Q(i).
    pub fn determinant(&self) -> GaussQ {
        let n = self.n;
        let mut m = self.clone();
        let mut det = GaussQ::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return GaussQ::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = m.at(c, c).clone();
            det *= &pivot;
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c) / &pivot;
                for j in c..n {
                    let d = &f * m.at(c, j);
                    m.data[i * n + j] -= d;
                }
            }
        }
        det
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", fmt_gauss(self.at(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

pub fn fmt_gauss(z: &GaussQ) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (true, true) => "0".into(),
        (false, true) => z.re.to_string(),
        (true, false) if z.im == Q::one() => "i".into(),
        (true, false) if z.im == -Q::one() => "-i".into(),
        (true, false) => format!("{}i", z.im),
        _ => format!("{}{:+}i", z.re, z.im),
    }
}

/// An element of su(n): skew-hermitian and traceless.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement(CMatrix);

impl AlgebraElement {
    pub fn new(m: CMatrix) -> Result<Self> {
        if !m.star().add(&m).is_zero() || !m.trace().is_zero() {
            return Err(SigError::InvalidSpec(
                "matrix is not skew-hermitian and traceless".into(),
            ));
        }
        Ok(AlgebraElement(m))
    }

    pub fn zero(n: usize) -> Self {
        AlgebraElement(CMatrix::zeros(n))
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    /// `i * diag(values)`; the values must sum to zero.
    pub fn diag_i(values: &[Q]) -> Result<Self> {
        let n = values.len();
        let mut m = CMatrix::zeros(n);
        for (k, v) in values.iter().enumerate() {
            m.set(k + 1, k + 1, gq(Q::zero(), v.clone()));
        }
        Self::new(m)
    }

    pub fn diag_i_int(values: &[i64]) -> Result<Self> {
        Self::diag_i(&values.iter().map(|&v| q(v)).collect::<Vec<_>>())
    }

    /// `i(E_kk - E_nn)`.
    pub fn torus_basis(n: usize, k: usize) -> Self {
        let mut m = CMatrix::zeros(n);
        m.set(k, k, gi());
        m.set(n, n, -gi());
        AlgebraElement(m)
    }

    /// `E_jk - E_kj`.
    pub fn root_re(n: usize, j: usize, k: usize) -> Self {
        let mut m = CMatrix::zeros(n);
        m.set(j, k, GaussQ::one());
        m.set(k, j, -GaussQ::one());
        AlgebraElement(m)
    }

    /// `i(E_jk + E_kj)`.
    pub fn root_im(n: usize, j: usize, k: usize) -> Self {
        let mut m = CMatrix::zeros(n);
        m.set(j, k, gi());
        m.set(k, j, gi());
        AlgebraElement(m)
    }

    pub fn add(&self, other: &Self) -> Self {
        AlgebraElement(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        AlgebraElement(self.0.sub(&other.0))
    }

    pub fn scale(&self, c: &Q) -> Self {
        AlgebraElement(self.0.scale(c))
    }

    pub fn neg(&self) -> Self {
        self.scale(&q(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_diagonal(&self) -> bool {
        self.0.is_diagonal()
    }

    /// Imaginary parts of the diagonal: `X = i diag(z)` gives `z`.
    pub fn diagonal_values(&self) -> Vec<Q> {
        (1..=self.n())
            .map(|k| self.0.get(k, k).im.clone())
            .collect()
    }

    /// Block-diagonal embedding: `self` placed on each index block of an
    /// `n`-dimensional matrix (indices 1-based, zero elsewhere).
    pub fn embed_blocks(&self, n: usize, blocks: &[Vec<usize>]) -> Self {
        let mut m = CMatrix::zeros(n);
        for block in blocks {
            for (a, &ia) in block.iter().enumerate() {
                for (b, &ib) in block.iter().enumerate() {
                    let v = self.0.get(a + 1, b + 1);
                    if !v.is_zero() {
                        m.set(ia, ib, v.clone());
                    }
                }
            }
        }
        AlgebraElement(m)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `[X, Y] = XY - YX`.
pub fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    AlgebraElement(x.0.mul(&y.0).sub(&y.0.mul(&x.0)))
}

/// `Re tr(X* Y)`.
pub fn frobenius(x: &AlgebraElement, y: &AlgebraElement) -> Q {
    let n = x.n();
    let mut s = Q::zero();
    for i in 1..=n {
        for j in 1..=n {
            let a = x.0.get(i, j);
            let b = y.0.get(i, j);
            // Re(conj(a) b) = a.re b.re + a.im b.im
            s += &a.re * &b.re + &a.im * &b.im;
        }
    }
    s
}

/// An element of SU(n).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    matrix: CMatrix,
    pub generalized_permutation: bool,
}

/// Value tags accepted for generalized permutation entries.
pub fn unit_from_tag(tag: &str) -> Option<GaussQ> {
    match tag {
        "1" => Some(GaussQ::one()),
        "-1" => Some(-GaussQ::one()),
        "i" => Some(gi()),
        "-i" => Some(-gi()),
        _ => None,
    }
}

fn is_fourth_root_of_unity(z: &GaussQ) -> bool {
    [GaussQ::one(), -GaussQ::one(), gi(), -gi()].contains(z)
}

impl GroupElement {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        let n = matrix.size();
        if matrix.star().mul(&matrix) != CMatrix::identity(n) {
            return Err(SigError::InvalidSpec("matrix is not unitary".into()));
        }
        if matrix.determinant() != GaussQ::one() {
            return Err(SigError::InvalidSpec(
                "matrix does not have determinant 1".into(),
            ));
        }
        let generalized_permutation = (1..=n).all(|i| {
            let nz: Vec<&GaussQ> = (1..=n)
                .map(|j| matrix.get(i, j))
                .filter(|z| !z.is_zero())
                .collect();
            nz.len() == 1 && is_fourth_root_of_unity(nz[0])
        });
        Ok(GroupElement {
            matrix,
            generalized_permutation,
        })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement {
            matrix: CMatrix::identity(n),
            generalized_permutation: true,
        }
    }

    /// Generalized permutation matrix from `(row, col, value)` triples.
    pub fn from_entries(n: usize, entries: &[(usize, usize, GaussQ)]) -> Result<Self> {
        let mut m = CMatrix::zeros(n);
        for (r, c, v) in entries {
            if *r == 0 || *c == 0 || *r > n || *c > n {
                return Err(SigError::InvalidSpec(format!(
                    "entry ({r},{c}) out of range"
                )));
            }
            m.set(*r, *c, v.clone());
        }
        Self::new(m)
    }

    /// The permutation matrix sending `e_j` to `e_{perm[j]}` (0-based
    /// `perm`), with the column-1 entry negated when needed for det 1.
    pub fn from_permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = CMatrix::zeros(n);
        for (j, &p) in perm.iter().enumerate() {
            m.set(p + 1, j + 1, GaussQ::one());
        }
        if permutation_sign(perm) < 0 {
            m.set(perm[0] + 1, 1, -GaussQ::one());
        }
        GroupElement {
            matrix: m,
            generalized_permutation: true,
        }
    }

    /// `diag(λ^{e_1}, ..., λ^{e_n})` for a unit Gaussian rational `λ`.
    pub fn torus_element(lambda: &GaussQ, exponents: &[i64]) -> Result<Self> {
        let n = exponents.len();
        let mut m = CMatrix::zeros(n);
        for (k, &e) in exponents.iter().enumerate() {
            m.set(k + 1, k + 1, gauss_pow(lambda, e));
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.size()
    }

    pub fn inverse(&self) -> Self {
        GroupElement {
            matrix: self.matrix.star(),
            generalized_permutation: self.generalized_permutation,
        }
    }

    pub fn mul(&self, other: &GroupElement) -> Self {
        GroupElement {
            matrix: self.matrix.mul(&other.matrix),
            generalized_permutation: self.generalized_permutation && other.generalized_permutation,
        }
    }

    /// Underlying permutation (0-based, `e_j -> e_{perm[j]}`) of a
    /// generalized permutation matrix.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        if !self.generalized_permutation {
            return None;
        }
        let n = self.n();
        Some(
            (1..=n)
                .map(|j| (1..=n).find(|&i| !self.matrix.get(i, j).is_zero()).unwrap() - 1)
                .collect(),
        )
    }

    /// Nonzero entries as `(row, col, tag)` triples, column by column.
    pub fn entries(&self) -> Vec<(usize, usize, String)> {
        let n = self.n();
        let mut out = Vec::new();
        for j in 1..=n {
            for i in 1..=n {
                let v = self.matrix.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, fmt_gauss(v)));
                }
            }
        }
        out
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generalized_permutation {
            let parts: Vec<String> = self
                .entries()
                .into_iter()
                .map(|(i, j, t)| format!("{i}{j}:{t}"))
                .collect();
            write!(f, "{{{}}}", parts.join(" "))
        } else {
            self.matrix.fmt(f)
        }
    }
}

pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

pub fn gauss_pow(z: &GaussQ, e: i64) -> GaussQ {
    // Unit modulus: the inverse is the conjugate.
    let base = if e < 0 { z.conj() } else { z.clone() };
    let mut out = GaussQ::one();
    for _ in 0..e.unsigned_abs() {
        out = &out * &base;
    }
    out
}

/// `Ad_g X = g X g^{-1}`.
pub fn adjoint(g: &GroupElement, x: &AlgebraElement) -> AlgebraElement {
    AlgebraElement(g.matrix.mul(&x.0).mul(&g.matrix.star()))
}

/// `Ad_{g^{-1}} X = g^{-1} X g`.
pub fn adjoint_inverse(g: &GroupElement, x: &AlgebraElement) -> AlgebraElement {
    AlgebraElement(g.matrix.star().mul(&x.0).mul(&g.matrix))
}

/// One vector of the ordered real basis of su(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisSlot {
    /// `i(E_kk - E_nn)`
    Torus(usize),
    /// `E_jk - E_kj`
    RootRe(usize, usize),
    /// `i(E_jk + E_kj)`
    RootIm(usize, usize),
}

impl BasisSlot {
    pub fn element(self, n: usize) -> AlgebraElement {
        match self {
            BasisSlot::Torus(k) => AlgebraElement::torus_basis(n, k),
            BasisSlot::RootRe(j, k) => AlgebraElement::root_re(n, j, k),
            BasisSlot::RootIm(j, k) => AlgebraElement::root_im(n, j, k),
        }
    }

    /// Coefficient of this basis vector in `x` (the basis is not
    /// orthogonal on the torus, but the coordinate map is still exact).
    fn coordinate(self, x: &AlgebraElement) -> Q {
        let m = x.matrix();
        match self {
            BasisSlot::Torus(k) => m.get(k, k).im.clone(),
            BasisSlot::RootRe(j, k) => m.get(j, k).re.clone(),
            BasisSlot::RootIm(j, k) => m.get(j, k).im.clone(),
        }
    }

    /// The root space `(j, k)` this slot belongs to, if any.
    pub fn root_space(self) -> Option<(usize, usize)> {
        match self {
            BasisSlot::Torus(_) => None,
            BasisSlot::RootRe(j, k) | BasisSlot::RootIm(j, k) => Some((j, k)),
        }
    }
}

/// Ordered basis of su(n) defining its orientation: torus vectors first,
/// then each `V_{jk}` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationConvention {
    pub n: usize,
    pub slots: Vec<(BasisSlot, i8)>,
}

impl OrientationConvention {
    pub fn standard(n: usize) -> Self {
        let mut slots: Vec<(BasisSlot, i8)> = (1..n).map(|k| (BasisSlot::Torus(k), 1)).collect();
        for j in 1..=n {
            for k in j + 1..=n {
                slots.push((BasisSlot::RootRe(j, k), 1));
                slots.push((BasisSlot::RootIm(j, k), 1));
            }
        }
        OrientationConvention { n, slots }
    }

    /// The opposite orientation: the first two torus vectors swapped (or the
    /// single torus vector negated for su(2)).
    pub fn reversed(n: usize) -> Self {
        let mut c = Self::standard(n);
        if n >= 3 {
            c.slots.swap(0, 1);
        } else {
            c.slots[0].1 = -1;
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.slots.len()
    }

    pub fn basis(&self) -> Vec<AlgebraElement> {
        self.slots
            .iter()
            .map(|&(s, sg)| {
                let e = s.element(self.n);
                if sg < 0 {
                    e.neg()
                } else {
                    e
                }
            })
            .collect()
    }

    /// Real coordinates of `x` in this ordered basis.
    pub fn coords(&self, x: &AlgebraElement) -> Vec<Q> {
        self.slots
            .iter()
            .map(|&(s, sg)| {
                let c = s.coordinate(x);
                if sg < 0 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    }

    pub fn coords_matrix(&self, xs: &[AlgebraElement]) -> QMatrix {
        QMatrix::from_rows(xs.iter().map(|x| self.coords(x)).collect(), self.dim())
    }
}

/// A real subspace of su(n) with an ordered (hence oriented) basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub n: usize,
    pub basis: Vec<AlgebraElement>,
}

impl Subspace {
    /// Fails with [`SigError::DimensionCollapse`] if the basis is dependent.
    pub fn new(n: usize, basis: Vec<AlgebraElement>) -> Result<Self> {
        let conv = OrientationConvention::standard(n);
        let rank = conv.coords_matrix(&basis).rank();
        if rank != basis.len() {
            return Err(SigError::DimensionCollapse {
                rank,
                expected: basis.len(),
            });
        }
        Ok(Subspace { n, basis })
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            n,
            basis: OrientationConvention::standard(n).basis(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        let conv = OrientationConvention::standard(self.n);
        conv.coords_matrix(&self.basis)
            .solve_row_combination(&conv.coords(x))
            .is_some()
    }

    /// Same span, regardless of basis order.
    pub fn same_span(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && other.basis.iter().all(|x| self.contains(x))
    }
}

/// Frobenius orthogonal complement of `s` in su(n). The basis comes from the
/// reduced echelon form of the defining equations, so it is deterministic.
pub fn orth_complement(s: &Subspace) -> Subspace {
    let conv = OrientationConvention::standard(s.n);
    let ambient = conv.basis();
    let rows: Vec<Vec<Q>> = s
        .basis
        .iter()
        .map(|v| ambient.iter().map(|b| frobenius(b, v)).collect())
        .collect();
    let eqs = QMatrix::from_rows(rows, conv.dim());
    let basis = eqs
        .nullspace()
        .into_iter()
        .map(|coef| {
            coef.iter()
                .zip(&ambient)
                .filter(|(c, _)| !c.is_zero())
                .fold(AlgebraElement::zero(s.n), |acc, (c, b)| {
                    acc.add(&b.scale(c))
                })
        })
        .collect();
    Subspace { n: s.n, basis }
}

/// Sign of the determinant of the change of basis taking ordered basis `b`
/// to ordered basis `a` (both must span the same space).
pub fn orientation_det(
    a: &[AlgebraElement],
    b: &[AlgebraElement],
    conv: &OrientationConvention,
) -> Result<i32> {
    if a.len() != b.len() {
        return Err(SigError::NotSameSpan);
    }
    if a.is_empty() {
        return Ok(1);
    }
    let ma = conv.coords_matrix(a);
    let mb = conv.coords_matrix(b);
    let (_, pivots) = mb.rref();
    if pivots.len() != b.len() || ma.rank() != a.len() {
        return Err(SigError::NotSameSpan);
    }
    let mut stacked = a.to_vec();
    stacked.extend_from_slice(b);
    if conv.coords_matrix(&stacked).rank() != a.len() {
        return Err(SigError::NotSameSpan);
    }
    // a = M b restricted to the pivot columns of b, where b is invertible.
    let da = ma.select_columns(&pivots).determinant();
    let db = mb.select_columns(&pivots).determinant();
    Ok(sign(&da) * sign(&db))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(tag: &str) -> GaussQ {
        unit_from_tag(tag).unwrap()
    }

    /// g₁ of the SU(6) worked example.
    fn g1() -> GroupElement {
        GroupElement::from_entries(
            6,
            &[
                (1, 6, unit("1")),
                (2, 1, unit("-1")),
                (3, 2, unit("1")),
                (4, 3, unit("1")),
                (5, 4, unit("1")),
                (6, 5, unit("1")),
            ],
        )
        .unwrap()
    }

    fn delta3(x: &AlgebraElement) -> AlgebraElement {
        x.embed_blocks(6, &[vec![1, 2], vec![3, 4], vec![5, 6]])
    }

    #[test]
    fn adjoint_identity() {
        let x = AlgebraElement::root_im(4, 1, 3);
        assert_eq!(adjoint(&GroupElement::identity(4), &x), x);
    }

    #[test]
    fn adjoint_matches_worked_example() {
        let g = g1();
        let h = delta3(&AlgebraElement::diag_i_int(&[1, -1]).unwrap());
        assert_eq!(
            adjoint_inverse(&g, &h),
            AlgebraElement::diag_i_int(&[-1, 1, -1, 1, -1, 1]).unwrap()
        );
        let h = delta3(&AlgebraElement::root_re(2, 1, 2));
        let expected = AlgebraElement::root_re(6, 2, 3)
            .add(&AlgebraElement::root_re(6, 4, 5))
            .add(&AlgebraElement::root_re(6, 1, 6));
        assert_eq!(adjoint_inverse(&g, &h), expected);
        let h = delta3(&AlgebraElement::root_im(2, 1, 2));
        let expected = AlgebraElement::root_im(6, 2, 3)
            .add(&AlgebraElement::root_im(6, 4, 5))
            .sub(&AlgebraElement::root_im(6, 1, 6));
        assert_eq!(adjoint_inverse(&g, &h), expected);
    }

    #[test]
    fn frobenius_examples() {
        let a = AlgebraElement::root_re(3, 1, 2);
        let b = AlgebraElement::root_im(3, 1, 2);
        assert_eq!(frobenius(&a, &a), q(2));
        assert_eq!(frobenius(&a, &b), q(0));
        let d = AlgebraElement::diag_i_int(&[1, -1, 0]).unwrap();
        assert_eq!(frobenius(&d, &d), q(2));
    }

    #[test]
    fn coordinates_reconstruct() {
        let conv = OrientationConvention::standard(4);
        let basis = conv.basis();
        let x = AlgebraElement::diag_i_int(&[3, -1, 0, -2])
            .unwrap()
            .add(&AlgebraElement::root_im(4, 2, 4).scale(&q(5)))
            .add(&AlgebraElement::root_re(4, 1, 3).scale(&q(-2)));
        let rebuilt = conv
            .coords(&x)
            .iter()
            .zip(&basis)
            .fold(AlgebraElement::zero(4), |acc, (c, b)| acc.add(&b.scale(c)));
        assert_eq!(rebuilt, x);
    }

    #[test]
    fn complement_of_everything_is_zero() {
        let full = Subspace::full(3);
        assert_eq!(orth_complement(&full).dim(), 0);
        let zero = Subspace {
            n: 3,
            basis: vec![],
        };
        assert_eq!(orth_complement(&zero).dim(), 8);
    }

    #[test]
    fn orientation_det_examples() {
        let conv = OrientationConvention::standard(3);
        let b = vec![
            AlgebraElement::root_re(3, 1, 2),
            AlgebraElement::root_im(3, 1, 2),
            AlgebraElement::torus_basis(3, 1),
        ];
        assert_eq!(orientation_det(&b, &b, &conv).unwrap(), 1);
        let swapped = vec![b[1].clone(), b[0].clone(), b[2].clone()];
        assert_eq!(orientation_det(&swapped, &b, &conv).unwrap(), -1);
        let other = vec![
            b[0].clone(),
            b[1].clone(),
            AlgebraElement::torus_basis(3, 2),
        ];
        assert_eq!(
            orientation_det(&other, &b, &conv),
            Err(SigError::NotSameSpan)
        );
    }

    #[test]
    fn group_elements_validate() {
        assert!(g1().generalized_permutation);
        let bad = GroupElement::from_entries(2, &[(1, 2, unit("1")), (2, 1, unit("1"))]);
        assert!(bad.is_err());
        let p = GroupElement::from_permutation(&[1, 0, 2]);
        assert_eq!(p.matrix().determinant(), GaussQ::one());
        assert_eq!(p.permutation().unwrap(), vec![1, 0, 2]);
        let lambda = Complex::new(crate::linalg::q_frac(3, 5), crate::linalg::q_frac(4, 5));
        let t = GroupElement::torus_element(&lambda, &[2, -1, -1]).unwrap();
        assert!(!t.generalized_permutation);
    }
}
