//! Signature of equal-rank biquotients `G//H`, `G = SU(n)`, `H ⊂ G × G`,
//! via a circle in a torus `T̃ ⊂ T_max × T_max` commuting with `H`.
//!
//! Supported scope: every fixed point has a representative in the normalizer
//! of the maximal torus (a generalized permutation matrix). Inputs outside
//! that scope are refused with a scope error instead of being approximated.

mod fixed;
mod signature;
mod twist;

pub use fixed::{enumerate_fixed_points, torus_freeness_check, torus_freeness_witness};
pub use signature::{
    biquotient_signature, biquotient_signature_expecting, check_circle_scaling,
    check_orientation_reversal, contribution_orientdet, contribution_rootsign,
    horizontal_root_spaces, orientation_flip, weights_at, FixedPointDatum, SignatureReport, Weight,
};
pub use twist::{dpsi, flipped_dpsi, general_dpsi, verify_fixed_point, vertical_space, Twist};

use crate::error::{Result, SigError};
use crate::liealg::{bracket, AlgebraElement, OrientationConvention};
use crate::linalg::{q, QMatrix, Q};

/// One factor of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorKind {
    /// `SU(k)` embedded block-diagonally on each listed index block.
    SpecialUnitary(usize),
    /// A circle `s ↦ (diag(s^P), diag(s^Q))`.
    Torus { p: Vec<i64>, q: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingFactor {
    pub kind: FactorKind,
    /// 1-based index blocks on the left copy of `G`.
    pub left_blocks: Vec<Vec<usize>>,
    /// 1-based index blocks on the right copy of `G`.
    pub right_blocks: Vec<Vec<usize>>,
}

impl EmbeddingFactor {
    pub fn special_unitary(
        k: usize,
        left_blocks: Vec<Vec<usize>>,
        right_blocks: Vec<Vec<usize>>,
    ) -> Self {
        EmbeddingFactor {
            kind: FactorKind::SpecialUnitary(k),
            left_blocks,
            right_blocks,
        }
    }

    pub fn torus(p: Vec<i64>, q: Vec<i64>) -> Self {
        EmbeddingFactor {
            kind: FactorKind::Torus { p, q },
            left_blocks: Vec::new(),
            right_blocks: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EmbeddingSpec {
    pub factors: Vec<EmbeddingFactor>,
}

/// An element `(X, Y)` of `g ⊕ g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairElement {
    pub left: AlgebraElement,
    pub right: AlgebraElement,
}

impl PairElement {
    pub fn scale(&self, c: &Q) -> Self {
        PairElement {
            left: self.left.scale(c),
            right: self.right.scale(c),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        PairElement {
            left: self.left.add(&other.left),
            right: self.right.add(&other.right),
        }
    }
}

/// Ordered basis of `h ⊂ g ⊕ g`: all torus directions first (factor order),
/// then the root-space pairs (factor order). The order fixes the orientation
/// of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HBasis {
    pub elements: Vec<PairElement>,
    /// Number of leading torus directions.
    pub torus_count: usize,
    /// Integer diagonal data `(P, Q)` of each torus direction.
    pub torus_weights: Vec<(Vec<i64>, Vec<i64>)>,
}

impl HBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn torus(&self) -> &[PairElement] {
        &self.elements[..self.torus_count]
    }
}

/// One generator of `t̃`: integer weight rows for each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildeRow {
    pub left: Vec<i64>,
    pub right: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiquotientSpec {
    pub n: usize,
    pub embedding: EmbeddingSpec,
    pub tilde_torus: Vec<TildeRow>,
    /// Integer coefficients selecting the circle generator in `t̃`.
    pub circle: Vec<i64>,
    pub fixed_point_reps: Option<Vec<crate::liealg::GroupElement>>,
    /// Use `dψ_g(X, Y) = Ad_{g^{-1}} X + Y` instead of solving the twist
    /// equation.
    pub flipped_torus_mode: bool,
    /// Orient `g` by the reversed convention (for the reversal check).
    pub reversed_orientation: bool,
}

impl BiquotientSpec {
    pub fn convention(&self) -> OrientationConvention {
        if self.reversed_orientation {
            OrientationConvention::reversed(self.n)
        } else {
            OrientationConvention::standard(self.n)
        }
    }

    fn diag_pair(&self, left: &[i64], right: &[i64]) -> Result<PairElement> {
        let n = self.n;
        if left.len() != n || right.len() != n {
            return Err(SigError::InvalidSpec(format!(
                "weight rows must have length {n}"
            )));
        }
        let mk = |v: &[i64]| {
            AlgebraElement::diag_i_int(v).map_err(|_| {
                SigError::InvalidSpec(format!("weight row {v:?} does not sum to zero"))
            })
        };
        Ok(PairElement {
            left: mk(left)?,
            right: mk(right)?,
        })
    }

    /// Generators of `t̃`.
    pub fn tilde_generators(&self) -> Result<Vec<PairElement>> {
        self.tilde_torus
            .iter()
            .map(|r| self.diag_pair(&r.left, &r.right))
            .collect()
    }

    /// The circle generator `(X, Y) = Σ c_r (X_r, Y_r)`.
    pub fn circle_element(&self) -> Result<PairElement> {
        if self.circle.len() != self.tilde_torus.len() {
            return Err(SigError::InvalidSpec(format!(
                "circle has {} coefficients for {} torus generators",
                self.circle.len(),
                self.tilde_torus.len()
            )));
        }
        let left: Vec<i64> = (0..self.n)
            .map(|i| {
                self.tilde_torus
                    .iter()
                    .zip(&self.circle)
                    .map(|(r, c)| c * r.left[i])
                    .sum()
            })
            .collect();
        let right: Vec<i64> = (0..self.n)
            .map(|i| {
                self.tilde_torus
                    .iter()
                    .zip(&self.circle)
                    .map(|(r, c)| c * r.right[i])
                    .sum()
            })
            .collect();
        self.diag_pair(&left, &right)
    }
}

fn check_blocks(n: usize, k: usize, blocks: &[Vec<usize>]) -> Result<()> {
    let mut used = vec![false; n + 1];
    for b in blocks {
        if b.len() != k {
            return Err(SigError::InvalidSpec(format!(
                "block {b:?} does not have length {k}"
            )));
        }
        for &i in b {
            if i == 0 || i > n {
                return Err(SigError::InvalidSpec(format!("index {i} outside 1..={n}")));
            }
            if used[i] {
                return Err(SigError::InvalidSpec(format!(
                    "index {i} used twice on one side"
                )));
            }
            used[i] = true;
        }
    }
    Ok(())
}

pub(crate) fn pair_bracket(a: &PairElement, b: &PairElement) -> PairElement {
    PairElement {
        left: bracket(&a.left, &b.left),
        right: bracket(&a.right, &b.right),
    }
}

/// Diagonal integer data of a torus direction `(i diag P, i diag Q)`.
fn integer_diagonal(x: &AlgebraElement) -> Vec<i64> {
    x.diagonal_values()
        .iter()
        .map(|v| {
            assert!(v.is_integer(), "torus basis with non-integral weights");
            i64::try_from(v.to_integer()).expect("weight fits in i64")
        })
        .collect()
}

/// Ordered oriented basis of `h` for the embedding. Fails with
/// [`SigError::NotAHomomorphism`] if brackets are not preserved.
pub fn embed_h(spec: &EmbeddingSpec, n: usize) -> Result<HBasis> {
    let mut torus = Vec::new();
    let mut roots = Vec::new();
    // Per-factor source bases, kept for the bracket check.
    let mut per_factor: Vec<(Vec<AlgebraElement>, Vec<PairElement>)> = Vec::new();
    let mut pending: Vec<PairElement> = Vec::new();
    for f in &spec.factors {
        match &f.kind {
            FactorKind::SpecialUnitary(k) => {
                let k = *k;
                if k < 2 {
                    return Err(SigError::InvalidSpec("SU(k) factor needs k >= 2".into()));
                }
                if f.left_blocks.is_empty() && f.right_blocks.is_empty() {
                    return Err(SigError::InvalidSpec(
                        "SU(k) factor is not embedded anywhere".into(),
                    ));
                }
                check_blocks(n, k, &f.left_blocks)?;
                check_blocks(n, k, &f.right_blocks)?;
                let src = OrientationConvention::standard(k).basis();
                let img: Vec<PairElement> = src
                    .iter()
                    .map(|x| PairElement {
                        left: x.embed_blocks(n, &f.left_blocks),
                        right: x.embed_blocks(n, &f.right_blocks),
                    })
                    .collect();
                torus.extend(img[..k - 1].iter().cloned());
                roots.extend(img[k - 1..].iter().cloned());
                per_factor.push((src, img));
            }
            FactorKind::Torus { p, q: qq } => {
                if p.len() != n || qq.len() != n {
                    return Err(SigError::InvalidSpec(format!(
                        "torus weights must have length {n}"
                    )));
                }
                let el = PairElement {
                    left: AlgebraElement::diag_i_int(p).map_err(|_| {
                        SigError::InvalidSpec("torus P row must sum to zero".into())
                    })?,
                    right: AlgebraElement::diag_i_int(qq).map_err(|_| {
                        SigError::InvalidSpec("torus Q row must sum to zero".into())
                    })?,
                };
                if el.left.is_zero() && el.right.is_zero() {
                    return Err(SigError::InvalidSpec("zero torus factor".into()));
                }
                torus.push(el.clone());
                per_factor.push((vec![AlgebraElement::zero(1)], vec![el]));
            }
        }
    }
    // Homomorphism: brackets inside a factor are preserved, and distinct
    // factors commute.
    for (fi, (src, img)) in per_factor.iter().enumerate() {
        if src[0].n() > 1 {
            let conv = OrientationConvention::standard(src[0].n());
            for a in 0..src.len() {
                for b in a + 1..src.len() {
                    let br = bracket(&src[a], &src[b]);
                    let coef = conv.coords(&br);
                    let expected = coef.iter().zip(img).filter(|(c, _)| **c != q(0)).fold(
                        PairElement {
                            left: AlgebraElement::zero(n),
                            right: AlgebraElement::zero(n),
                        },
                        |acc, (c, e)| acc.add(&e.scale(c)),
                    );
                    if pair_bracket(&img[a], &img[b]) != expected {
                        return Err(SigError::NotAHomomorphism(format!(
                            "factor {} does not preserve brackets",
                            fi + 1
                        )));
                    }
                }
            }
        }
        for (other_src, other) in per_factor.iter().skip(fi + 1) {
            let both_unitary = src[0].n() > 1 && other_src[0].n() > 1;
            for a in img {
                for b in other {
                    let br = pair_bracket(a, b);
                    if br.left.is_zero() && br.right.is_zero() {
                        continue;
                    }
                    if both_unitary {
                        return Err(SigError::NotAHomomorphism(
                            "distinct SU(k) factors do not commute".into(),
                        ));
                    }
                    pending.push(br);
                }
            }
        }
    }
    // Torus factors need not be central, but h must stay a subalgebra.
    let conv = OrientationConvention::standard(n);
    let pair_coords = |e: &PairElement| {
        let mut c = conv.coords(&e.left);
        c.extend(conv.coords(&e.right));
        c
    };
    let all: Vec<&PairElement> = torus.iter().chain(&roots).collect();
    let width = 2 * conv.dim();
    let m = QMatrix::from_rows(all.iter().map(|e| pair_coords(e)).collect(), width);
    if m.rank() < all.len() {
        return Err(SigError::InvalidSpec("embedding is not injective".into()));
    }
    if pending
        .iter()
        .any(|br| m.solve_row_combination(&pair_coords(br)).is_none())
    {
        return Err(SigError::NotAHomomorphism(
            "subgroup algebra is not closed under brackets".into(),
        ));
    }
    let torus_weights = torus
        .iter()
        .map(|t| (integer_diagonal(&t.left), integer_diagonal(&t.right)))
        .collect();
    let torus_count = torus.len();
    torus.extend(roots);
    Ok(HBasis {
        elements: torus,
        torus_count,
        torus_weights,
    })
}
