//! Signature of equal-rank homogeneous spaces G/H, and the fixed-point
//! signature kernel shared with the biquotient engine.

use crate::error::Result;
use crate::rootsys::RootSystem;
use crate::weyl::{inversion_count_outside, minimal_coset_representatives, WeylGroup};

/// Per-fixed-point data fed to [`signature_kernel`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightSignSummary {
    /// Parity of the number of negative rotation numbers at each point.
    pub parities: Vec<bool>,
    /// Optional signed rotation numbers per point (never zero).
    pub rotation_numbers: Option<Vec<Vec<i64>>>,
}

impl WeightSignSummary {
    pub fn from_parities(parities: impl IntoIterator<Item = bool>) -> Self {
        WeightSignSummary {
            parities: parities.into_iter().collect(),
            rotation_numbers: None,
        }
    }

    /// Builds the summary from rotation numbers; `None` if any of them is 0.
    pub fn from_rotation_numbers(points: Vec<Vec<i64>>) -> Option<Self> {
        if points.iter().flatten().any(|&m| m == 0) {
            return None;
        }
        let parities = points
            .iter()
            .map(|ms| ms.iter().filter(|&&m| m < 0).count() % 2 == 1)
            .collect();
        Some(WeightSignSummary {
            parities,
            rotation_numbers: Some(points),
        })
    }
}

/// Sum over fixed points of `(-1)^{#negative rotation numbers}`.
pub fn signature_kernel(summary: &WeightSignSummary) -> i64 {
    summary
        .parities
        .iter()
        .map(|&odd| if odd { -1 } else { 1 })
        .sum()
}

/// One coset of `W(G)/W(H)` and its contribution to the signature sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetContribution {
    pub word: Vec<usize>,
    pub inversions: usize,
    pub contribution: i64,
}

/// Result of a homogeneous computation; the signature is up to global sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousReport {
    pub real_dimension: usize,
    pub euler_characteristic: usize,
    pub signature_up_to_sign: i64,
    pub cosets: Vec<CosetContribution>,
}

/// Number of positive roots of G that are not roots of H; the real dimension
/// of G/H is twice this.
pub fn complex_dimension(sys_g: &RootSystem, sys_h: &RootSystem) -> usize {
    sys_g
        .positives
        .iter()
        .filter(|a| !sys_h.contains(a))
        .count()
}

pub fn homogeneous_report(
    sys_g: &RootSystem,
    sys_h: &RootSystem,
    cap: usize,
) -> Result<HomogeneousReport> {
    let w_g = WeylGroup::generate(sys_g, cap)?;
    let reps = minimal_coset_representatives(&w_g, sys_g, sys_h);
    let half_dim = complex_dimension(sys_g, sys_h);
    let cosets: Vec<CosetContribution> = reps
        .representatives
        .iter()
        .map(|w| {
            let inversions = inversion_count_outside(w, sys_g, sys_h);
            CosetContribution {
                word: w.word.clone(),
                inversions,
                contribution: if inversions.is_multiple_of(2) { 1 } else { -1 },
            }
        })
        .collect();
    // Dimension 2 mod 4: the signature is zero by definition.
    let signature_up_to_sign = if half_dim % 2 == 1 {
        0
    } else {
        signature_kernel(&WeightSignSummary::from_parities(
            cosets.iter().map(|c| c.inversions % 2 == 1),
        ))
    };
    Ok(HomogeneousReport {
        real_dimension: 2 * half_dim,
        euler_characteristic: cosets.len(),
        signature_up_to_sign,
        cosets,
    })
}

/// Signature of G/H up to a global sign.
pub fn homogeneous_signature(sys_g: &RootSystem, sys_h: &RootSystem, cap: usize) -> Result<i64> {
    Ok(homogeneous_report(sys_g, sys_h, cap)?.signature_up_to_sign)
}

/// `|W(G)| / |W(H)|`, the number of torus-fixed points.
pub fn euler_characteristic_equal_rank(
    sys_g: &RootSystem,
    sys_h: &RootSystem,
    cap: usize,
) -> Result<usize> {
    let w_g = WeylGroup::generate(sys_g, cap)?;
    let w_h = WeylGroup::generate(sys_h, cap)?;
    Ok(w_g.order() / w_h.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, Root};
    use crate::weyl::DEFAULT_WEYL_CAP;

    #[test]
    fn kernel_examples() {
        assert_eq!(
            signature_kernel(&WeightSignSummary::from_parities([true, false, false])),
            1
        );
        assert_eq!(signature_kernel(&WeightSignSummary::default()), 0);
        assert_eq!(
            signature_kernel(&WeightSignSummary::from_parities([false; 3])),
            3
        );
    }

    #[test]
    fn rotation_numbers_reject_zero() {
        assert!(WeightSignSummary::from_rotation_numbers(vec![vec![1, 0]]).is_none());
        let s = WeightSignSummary::from_rotation_numbers(vec![vec![-2, -2, -1, 1], vec![1, 1]])
            .unwrap();
        assert_eq!(s.parities, vec![true, false]);
    }

    #[test]
    fn cp2() {
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let a1 = a2.subsystem(&[Root::e_diff(3, 1, 2)]).unwrap();
        assert_eq!(
            homogeneous_signature(&a2, &a1, DEFAULT_WEYL_CAP)
                .unwrap()
                .abs(),
            1
        );
        assert_eq!(
            euler_characteristic_equal_rank(&a2, &a1, DEFAULT_WEYL_CAP).unwrap(),
            3
        );
        assert_eq!(
            euler_characteristic_equal_rank(&a2, &a2, DEFAULT_WEYL_CAP).unwrap(),
            1
        );
    }

    #[test]
    fn odd_complex_dimension_gives_zero() {
        // CP^1 = SU(2)/S(U1xU1) has real dimension 2.
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        let r = homogeneous_report(&a1, &a1.empty_like(), DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(r.real_dimension, 2);
        assert_eq!(r.euler_characteristic, 2);
        assert_eq!(r.signature_up_to_sign, 0);
    }
}
