//! The twist `ψ_g` at a candidate fixed point and its differential.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{embed_h, BiquotientSpec, HBasis, PairElement};
use crate::error::{Result, SigError};
use crate::liealg::{
    adjoint_inverse, AlgebraElement, GaussQ, GroupElement, OrientationConvention, Subspace,
};
use crate::linalg::{q, QMatrix, Q};

/// `Ad_{g^{-1}}` applied to the basis of `h`, and the solver for
/// `β^{-1} ∘ α`.
#[derive(Debug, Clone)]
pub struct Twist {
    pub g: GroupElement,
    /// `Ad_{g^{-1}} X_b - Y_b` for the ordered basis `(X_b, Y_b)` of `h`.
    pub images: Vec<AlgebraElement>,
    coords: QMatrix,
    conv: OrientationConvention,
}

impl Twist {
    pub fn new(g: &GroupElement, h: &HBasis) -> Self {
        let n = g.n();
        let images: Vec<AlgebraElement> = h
            .elements
            .iter()
            .map(|e| adjoint_inverse(g, &e.left).sub(&e.right))
            .collect();
        let conv = OrientationConvention::standard(n);
        let coords = conv.coords_matrix(&images);
        Twist {
            g: g.clone(),
            images,
            coords,
            conv,
        }
    }

    /// `α(Ad_{g^{-1}} X, Y) = Ad_{g^{-1}} X - Y`.
    pub fn alpha(&self, xy: &PairElement) -> AlgebraElement {
        adjoint_inverse(&self.g, &xy.left).sub(&xy.right)
    }

    /// Coefficients `c` with `Σ c_b images_b = v`, if any.
    pub fn solve(&self, v: &AlgebraElement) -> Option<Vec<Q>> {
        self.coords.solve_row_combination(&self.conv.coords(v))
    }
}

/// Span of `{Ad_{g^{-1}} X - Y}` over `h`, keeping the ordered image basis.
pub fn vertical_space(g: &GroupElement, h: &HBasis) -> Result<Subspace> {
    Subspace::new(g.n(), Twist::new(g, h).images)
}

/// `Ad_{g^{-1}} X + Y`.
pub fn flipped_dpsi(g: &GroupElement, xy: &PairElement) -> Result<AlgebraElement> {
    let z = adjoint_inverse(g, &xy.left).add(&xy.right);
    if !z.is_diagonal() {
        return Err(SigError::NotInMaxTorus);
    }
    Ok(z)
}

/// `-π₂ β^{-1} α (Ad_{g^{-1}} × 1)(X, Y) + Y`, with `β^{-1}` an exact solve
/// on `h`.
pub fn general_dpsi(twist: &Twist, h: &HBasis, xy: &PairElement) -> Result<AlgebraElement> {
    let c = twist.solve(&twist.alpha(xy)).ok_or(SigError::NotSolvable)?;
    let mut z = xy.right.clone();
    for (cb, e) in c.iter().zip(&h.elements) {
        if !cb.is_zero() {
            z = z.sub(&e.right.scale(cb));
        }
    }
    if !z.is_diagonal() {
        return Err(SigError::NotInMaxTorus);
    }
    Ok(z)
}

/// `dψ_g(X, Y)` in the mode selected by the spec.
pub fn dpsi(g: &GroupElement, spec: &BiquotientSpec, xy: &PairElement) -> Result<AlgebraElement> {
    if !g.generalized_permutation {
        return Err(SigError::NotInMaxTorus);
    }
    if spec.flipped_torus_mode {
        flipped_dpsi(g, xy)
    } else {
        let h = embed_h(&spec.embedding, spec.n)?;
        general_dpsi(&Twist::new(g, &h), &h, xy)
    }
}

/// Unit-modulus Gaussian rational of infinite order used for group-level
/// checks.
pub(crate) fn witness_lambda() -> GaussQ {
    GaussQ::new(Q::new(3.into(), 5.into()), Q::new(4.into(), 5.into()))
}

fn scaled_exponents(rows: &[(Vec<i64>, Q)], n: usize, scale: &Q) -> Option<Vec<i64>> {
    (0..n)
        .map(|i| {
            let v: Q = rows.iter().map(|(r, c)| c * q(r[i])).sum::<Q>() * scale;
            if v.is_integer() {
                v.to_integer().to_i64()
            } else {
                None
            }
        })
        .collect()
}

fn torus_at(rows: &[(Vec<i64>, Q)], n: usize, scale: &Q) -> Option<GroupElement> {
    let e = scaled_exponents(rows, n, scale)?;
    GroupElement::torus_element(&witness_lambda(), &e).ok()
}

/// Whether `H g` is fixed by `T̃` (infinitesimal solve plus an exact
/// group-level check).
pub(crate) fn verify_with(g: &GroupElement, spec: &BiquotientSpec, h: &HBasis) -> bool {
    if !g.generalized_permutation {
        return false;
    }
    let twist = Twist::new(g, h);
    let n = spec.n;
    for row in &spec.tilde_torus {
        let Ok(xy) = spec_pair(spec, &row.left, &row.right) else {
            return false;
        };
        let Some(c) = twist.solve(&twist.alpha(&xy)) else {
            return false;
        };
        if c[h.torus_count..].iter().any(|v| !v.is_zero()) {
            return false;
        }
        let denom = c[..h.torus_count]
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let scale = Q::from_integer(denom);
        let s_left: Vec<(Vec<i64>, Q)> = h
            .torus_weights
            .iter()
            .zip(&c)
            .map(|((p, _), cb)| (p.clone(), cb.clone()))
            .collect();
        let s_right: Vec<(Vec<i64>, Q)> = h
            .torus_weights
            .iter()
            .zip(&c)
            .map(|((_, qq), cb)| (qq.clone(), cb.clone()))
            .collect();
        let one = vec![(row.left.clone(), Q::one())];
        let one_r = vec![(row.right.clone(), Q::one())];
        let (Some(t1), Some(t2), Some(s1), Some(s2)) = (
            torus_at(&one, n, &scale),
            torus_at(&one_r, n, &scale),
            torus_at(&s_left, n, &scale),
            torus_at(&s_right, n, &scale),
        ) else {
            return false;
        };
        let lhs = t1.mul(g).mul(&t2.inverse());
        let rhs = s1.mul(g).mul(&s2.inverse());
        if lhs != rhs {
            return false;
        }
        debug_assert!(scale.is_positive());
    }
    true
}

fn spec_pair(spec: &BiquotientSpec, left: &[i64], right: &[i64]) -> Result<PairElement> {
    spec.diag_pair(left, right)
}

/// Whether `H g` is a fixed point of `T̃`.
pub fn verify_fixed_point(g: &GroupElement, spec: &BiquotientSpec) -> bool {
    match embed_h(&spec.embedding, spec.n) {
        Ok(h) => verify_with(g, spec, &h),
        Err(_) => false,
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::biquot::{EmbeddingFactor, EmbeddingSpec, TildeRow};
    use crate::liealg::unit_from_tag;

    pub(crate) fn gp(n: usize, entries: &[(usize, usize, &str)]) -> GroupElement {
        let e: Vec<_> = entries
            .iter()
            .map(|&(r, c, t)| (r, c, unit_from_tag(t).unwrap()))
            .collect();
        GroupElement::from_entries(n, &e).unwrap()
    }

    pub(crate) fn g1() -> GroupElement {
        gp(
            6,
            &[
                (1, 6, "1"),
                (2, 1, "-1"),
                (3, 2, "1"),
                (4, 3, "1"),
                (5, 4, "1"),
                (6, 5, "1"),
            ],
        )
    }

    pub(crate) fn g2() -> GroupElement {
        gp(
            6,
            &[
                (1, 1, "1"),
                (2, 2, "-1"),
                (3, 6, "1"),
                (4, 3, "1"),
                (5, 4, "1"),
                (6, 5, "1"),
            ],
        )
    }

    pub(crate) fn g3() -> GroupElement {
        gp(
            6,
            &[
                (1, 1, "1"),
                (2, 2, "-1"),
                (3, 3, "1"),
                (4, 4, "1"),
                (5, 6, "1"),
                (6, 5, "1"),
            ],
        )
    }

    pub(crate) fn hp2_spec(flipped: bool, circle_left: Vec<i64>) -> BiquotientSpec {
        BiquotientSpec {
            n: 6,
            embedding: EmbeddingSpec {
                factors: vec![
                    EmbeddingFactor::special_unitary(
                        2,
                        vec![vec![1, 2], vec![3, 4], vec![5, 6]],
                        vec![],
                    ),
                    EmbeddingFactor::special_unitary(5, vec![], vec![vec![1, 2, 3, 4, 5]]),
                ],
            },
            tilde_torus: vec![TildeRow {
                left: circle_left,
                right: vec![0; 6],
            }],
            circle: vec![1],
            fixed_point_reps: None,
            flipped_torus_mode: flipped,
            reversed_orientation: false,
        }
    }

    pub(crate) fn golden() -> BiquotientSpec {
        let mut s = hp2_spec(true, vec![1, 1, -1, -1, 0, 0]);
        s.fixed_point_reps = Some(vec![g1(), g2(), g3()]);
        s
    }

    fn diag(v: &[i64]) -> AlgebraElement {
        AlgebraElement::diag_i_int(v).unwrap()
    }

    #[test]
    fn flipped_dpsi_matches_worked_example() {
        let spec = golden();
        let xy = spec.circle_element().unwrap();
        assert_eq!(
            dpsi(&g1(), &spec, &xy).unwrap(),
            diag(&[1, -1, -1, 0, 0, 1])
        );
        assert_eq!(
            dpsi(&g2(), &spec, &xy).unwrap(),
            diag(&[1, 1, -1, 0, 0, -1])
        );
        assert_eq!(
            dpsi(&g3(), &spec, &xy).unwrap(),
            diag(&[1, 1, -1, -1, 0, 0])
        );
        let id = GroupElement::identity(6);
        assert_eq!(dpsi(&id, &spec, &xy).unwrap(), xy.left);
    }

    #[test]
    fn general_dpsi_solves_the_twist() {
        let spec = hp2_spec(false, vec![1, 1, -1, -1, 0, 0]);
        let xy = spec.circle_element().unwrap();
        assert_eq!(
            dpsi(&g1(), &spec, &xy).unwrap(),
            diag(&[2, -2, 0, -1, 1, 0])
        );
        assert_eq!(
            dpsi(&g2(), &spec, &xy).unwrap(),
            diag(&[2, 0, -2, 1, -1, 0])
        );
        assert_eq!(
            dpsi(&g3(), &spec, &xy).unwrap(),
            diag(&[1, 1, -1, -1, 0, 0])
        );
    }

    #[test]
    fn vertical_dimension() {
        let spec = golden();
        let h = embed_h(&spec.embedding, 6).unwrap();
        for g in [g1(), g2(), g3()] {
            assert_eq!(vertical_space(&g, &h).unwrap().dim(), 27);
        }
    }

    #[test]
    fn diagonal_embedding_collapses() {
        let spec = EmbeddingSpec {
            factors: vec![EmbeddingFactor::special_unitary(
                2,
                vec![vec![1, 2]],
                vec![vec![1, 2]],
            )],
        };
        let h = embed_h(&spec, 2).unwrap();
        let r = vertical_space(&GroupElement::identity(2), &h);
        assert!(matches!(r, Err(SigError::DimensionCollapse { .. })));
    }

    #[test]
    fn fixed_point_verification() {
        let spec = golden();
        assert!(verify_fixed_point(&g1(), &spec));
        assert!(verify_fixed_point(&g2(), &spec));
        assert!(verify_fixed_point(&g3(), &spec));
        // The identity coset is a fixed point as well: it is the coset of g3.
        assert!(verify_fixed_point(&GroupElement::identity(6), &spec));
    }

    #[test]
    fn non_permutation_is_not_verified() {
        let h = GroupElement::new({
            let mut m = crate::liealg::CMatrix::identity(6);
            let a = GaussQ::new(q(3) / q(5), q(0));
            let b = GaussQ::new(q(4) / q(5), q(0));
            m.set(1, 1, a.clone());
            m.set(1, 2, -b.clone());
            m.set(2, 1, b);
            m.set(2, 2, a);
            m
        })
        .unwrap();
        assert!(!verify_fixed_point(&h, &golden()));
    }
}
