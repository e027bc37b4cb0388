//! Isotropy weights, orientation bookkeeping and the fixed-point sum.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::fixed::{
    enumerate_fixed_points, torus_freeness_witness, torus_parametrization_faithful,
};
use super::twist::{flipped_dpsi, general_dpsi, vertical_space, Twist};
use super::{embed_h, pair_bracket, BiquotientSpec, HBasis};
use crate::error::{Result, SigError};
use crate::liealg::{
    bracket, frobenius, orientation_det, orth_complement, permutation_sign, AlgebraElement,
    GroupElement, OrientationConvention, Subspace,
};
use crate::linalg::Q;

/// Value of the root `e_j - e_k` on the twisted circle generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub j: usize,
    pub k: usize,
    pub value: Q,
    /// `±1`; the orientation flip is carried by the first weight.
    pub sign_convention: i32,
}

impl Weight {
    pub fn signed_value(&self) -> Q {
        if self.sign_convention < 0 {
            -self.value.clone()
        } else {
            self.value.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointDatum {
    pub rep: GroupElement,
    pub vertical: Subspace,
    pub horizontal: Subspace,
    pub horizontal_spaces: Vec<(usize, usize)>,
    pub z: AlgebraElement,
    pub weights: Vec<Weight>,
    pub orientation_flip: i32,
    pub contribution: i32,
    pub contribution_orientdet: i32,
    /// `ad_Z` preserves the horizontal space and is skew there.
    pub weight_skew: bool,
    /// In flipped mode: whether `Ad_{g^{-1}} X + Y` agrees with the solved
    /// twist on all of `t̃` at this point.
    pub flipped_formula_agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureReport {
    pub n: usize,
    pub real_dimension: usize,
    pub fixed_points: Vec<FixedPointDatum>,
    pub signature_up_to_sign: i64,
    pub cross_checks: BTreeMap<String, bool>,
    pub notes: Vec<String>,
}

impl SignatureReport {
    pub fn contributions(&self) -> Vec<i32> {
        self.fixed_points.iter().map(|p| p.contribution).collect()
    }
}

struct Frame {
    twist: Twist,
    vertical: Subspace,
    horizontal: Subspace,
    spaces: Vec<(usize, usize)>,
}

fn frame(g: &GroupElement, h: &HBasis) -> Result<Frame> {
    if !g.generalized_permutation {
        return Err(SigError::NotInMaxTorus);
    }
    let n = g.n();
    let twist = Twist::new(g, h);
    let vertical = Subspace::new(n, twist.images.clone())?;
    let horizontal = orth_complement(&vertical);
    let mut spaces = Vec::new();
    for j in 1..=n {
        for k in j + 1..=n {
            if horizontal.contains(&AlgebraElement::root_re(n, j, k))
                && horizontal.contains(&AlgebraElement::root_im(n, j, k))
            {
                spaces.push((j, k));
            }
        }
    }
    if 2 * spaces.len() != horizontal.dim() {
        return Err(SigError::NonSplitHorizontal);
    }
    Ok(Frame {
        twist,
        vertical,
        horizontal,
        spaces,
    })
}

fn twisted(
    fr: &Frame,
    spec: &BiquotientSpec,
    h: &HBasis,
    xy: &super::PairElement,
) -> Result<AlgebraElement> {
    if spec.flipped_torus_mode {
        flipped_dpsi(&fr.twist.g, xy)
    } else {
        general_dpsi(&fr.twist, h, xy)
    }
}

fn root_values(fr: &Frame, z: &AlgebraElement) -> Vec<(usize, usize, Q)> {
    let d = z.diagonal_values();
    fr.spaces
        .iter()
        .map(|&(j, k)| (j, k, &d[j - 1] - &d[k - 1]))
        .collect()
}

/// Sign comparing the orientation induced on the vertical space by the
/// ordered basis of `h` with the one the convention of `g` leaves for it
/// after the horizontal root spaces are split off.
fn flip_in(fr: &Frame, conv: &OrientationConvention) -> Result<i32> {
    let n = conv.n;
    let (h_idx, v_idx): (Vec<usize>, Vec<usize>) = (0..conv.dim()).partition(|&i| {
        conv.slots[i]
            .0
            .root_space()
            .is_some_and(|s| fr.spaces.contains(&s))
    });
    let order: Vec<usize> = h_idx.iter().chain(&v_idx).copied().collect();
    let perm = permutation_sign(&order) as i32;
    let reference: Vec<AlgebraElement> = v_idx
        .iter()
        .map(|&i| {
            let (s, sg) = conv.slots[i];
            let e = s.element(n);
            if sg < 0 {
                e.neg()
            } else {
                e
            }
        })
        .collect();
    Ok(perm * orientation_det(&fr.twist.images, &reference, conv)?)
}

fn reference_horizontal(fr: &Frame, conv: &OrientationConvention) -> Vec<AlgebraElement> {
    conv.slots
        .iter()
        .filter(|(s, _)| s.root_space().is_some_and(|r| fr.spaces.contains(&r)))
        .map(|&(s, sg)| {
            let e = s.element(conv.n);
            if sg < 0 {
                e.neg()
            } else {
                e
            }
        })
        .collect()
}

fn rootsign(values: &[(usize, usize, Q)], flip: i32) -> Result<i32> {
    let mut neg = 0;
    for (j, k, v) in values {
        if v.is_zero() {
            return Err(SigError::ZeroWeight { j: *j, k: *k });
        }
        if v.is_negative() {
            neg += 1;
        }
    }
    Ok(if neg % 2 == 0 { flip } else { -flip })
}

/// Orients each `V_{jk}` so that `ad_Z` rotates it positively and compares
/// the product orientation with the reference one.
fn orientdet(
    fr: &Frame,
    z: &AlgebraElement,
    conv: &OrientationConvention,
    flip: i32,
) -> Result<i32> {
    let n = conv.n;
    let mut oriented = Vec::with_capacity(2 * fr.spaces.len());
    for &(j, k) in &fr.spaces {
        let a = AlgebraElement::root_re(n, j, k);
        let b = AlgebraElement::root_im(n, j, k);
        let m = frobenius(&bracket(z, &a), &b) / frobenius(&b, &b);
        if m.is_zero() {
            return Err(SigError::ZeroWeight { j, k });
        }
        if m.is_positive() {
            oriented.push(a);
            oriented.push(b);
        } else {
            oriented.push(b);
            oriented.push(a);
        }
    }
    Ok(flip * orientation_det(&oriented, &reference_horizontal(fr, conv), conv)?)
}

fn skew_on(horizontal: &Subspace, z: &AlgebraElement) -> bool {
    let images: Vec<AlgebraElement> = horizontal.basis.iter().map(|u| bracket(z, u)).collect();
    images.iter().all(|x| horizontal.contains(x))
        && images.iter().enumerate().all(|(a, za)| {
            horizontal.basis.iter().enumerate().all(|(b, v)| {
                (frobenius(za, v) + frobenius(&horizontal.basis[a], &images[b])).is_zero()
            })
        })
}

fn datum(
    g: &GroupElement,
    spec: &BiquotientSpec,
    h: &HBasis,
    conv: &OrientationConvention,
) -> Result<FixedPointDatum> {
    let fr = frame(g, h)?;
    let xy = spec.circle_element()?;
    let z = twisted(&fr, spec, h, &xy)?;
    let values = root_values(&fr, &z);
    let flip = flip_in(&fr, conv)?;
    let contribution = rootsign(&values, flip)?;
    let contribution_orientdet = orientdet(&fr, &z, conv, flip)?;
    let flipped_formula_agrees = if spec.flipped_torus_mode {
        let mut agrees = true;
        for gen in spec.tilde_generators()? {
            let general = general_dpsi(&fr.twist, h, &gen).ok();
            agrees &= general == Some(flipped_dpsi(g, &gen)?);
        }
        Some(agrees)
    } else {
        None
    };
    let weights = values
        .into_iter()
        .enumerate()
        .map(|(i, (j, k, value))| Weight {
            j,
            k,
            value,
            sign_convention: if i == 0 { flip } else { 1 },
        })
        .collect();
    Ok(FixedPointDatum {
        rep: g.clone(),
        weight_skew: skew_on(&fr.horizontal, &z),
        vertical: fr.vertical,
        horizontal: fr.horizontal,
        horizontal_spaces: fr.spaces,
        z,
        weights,
        orientation_flip: flip,
        contribution,
        contribution_orientdet,
        flipped_formula_agrees,
    })
}

/// Whether no root space of the horizontal space at `g` is fixed by all of
/// `t̃`.
pub(crate) fn is_isolated(g: &GroupElement, spec: &BiquotientSpec, h: &HBasis) -> Result<bool> {
    let fr = frame(g, h)?;
    let zs = spec
        .tilde_generators()?
        .iter()
        .map(|xy| twisted(&fr, spec, h, xy))
        .collect::<Result<Vec<_>>>()?;
    let values: Vec<Vec<(usize, usize, Q)>> = zs.iter().map(|z| root_values(&fr, z)).collect();
    Ok((0..fr.spaces.len()).all(|s| values.iter().any(|v| !v[s].2.is_zero())))
}

fn point_setup(g: &GroupElement, spec: &BiquotientSpec) -> Result<(HBasis, Frame)> {
    let h = embed_h(&spec.embedding, spec.n)?;
    let fr = frame(g, &h)?;
    Ok((h, fr))
}

/// Root spaces `V_{jk}` spanning the horizontal space at `g`.
pub fn horizontal_root_spaces(
    g: &GroupElement,
    spec: &BiquotientSpec,
) -> Result<Vec<(usize, usize)>> {
    Ok(point_setup(g, spec)?.1.spaces)
}

/// Root values on the twisted circle generator at `g`.
pub fn weights_at(g: &GroupElement, spec: &BiquotientSpec) -> Result<Vec<Weight>> {
    let h = embed_h(&spec.embedding, spec.n)?;
    Ok(datum(g, spec, &h, &spec.convention())?.weights)
}

pub fn orientation_flip(g: &GroupElement, spec: &BiquotientSpec) -> Result<i32> {
    let (_, fr) = point_setup(g, spec)?;
    flip_in(&fr, &spec.convention())
}

/// `(-1)^{#negative weights}` times the orientation flip.
pub fn contribution_rootsign(g: &GroupElement, spec: &BiquotientSpec) -> Result<i32> {
    let (h, fr) = point_setup(g, spec)?;
    let z = twisted(&fr, spec, &h, &spec.circle_element()?)?;
    rootsign(&root_values(&fr, &z), flip_in(&fr, &spec.convention())?)
}

/// The same contribution from rotation numbers and a determinant.
pub fn contribution_orientdet(g: &GroupElement, spec: &BiquotientSpec) -> Result<i32> {
    let (h, fr) = point_setup(g, spec)?;
    let conv = spec.convention();
    let z = twisted(&fr, spec, &h, &spec.circle_element()?)?;
    orientdet(&fr, &z, &conv, flip_in(&fr, &conv)?)
}

/// Signature of `G//H` up to a global sign, with per-point data.
pub fn biquotient_signature(spec: &BiquotientSpec) -> Result<SignatureReport> {
    biquotient_signature_expecting(spec, None)
}

/// As [`biquotient_signature`], failing with
/// [`SigError::IncompleteEnumeration`] unless exactly `expected` isolated
/// fixed points are found.
pub fn biquotient_signature_expecting(
    spec: &BiquotientSpec,
    expected: Option<usize>,
) -> Result<SignatureReport> {
    let n = spec.n;
    let h = embed_h(&spec.embedding, n)?;
    let gens = spec.tilde_generators()?;
    spec.circle_element()?;
    let dim_g = n * n - 1;
    let mut report = SignatureReport {
        n,
        real_dimension: dim_g.saturating_sub(h.dim()),
        fixed_points: Vec::new(),
        signature_up_to_sign: 0,
        cross_checks: BTreeMap::new(),
        notes: Vec::new(),
    };
    if h.torus_count < n - 1 {
        report.cross_checks.insert("rank_deficient".into(), true);
        report.notes.push(
            "rank of H is below rank of G: all Pontryagin numbers vanish, so sigma = 0".into(),
        );
        return Ok(report);
    }
    vertical_space(&GroupElement::identity(n), &h)?;
    if !torus_parametrization_faithful(&h, n) {
        return Err(SigError::InvalidSpec(
            "torus directions of H do not parametrize its maximal torus injectively".into(),
        ));
    }
    if let Some(permutation) = torus_freeness_witness(&h, n) {
        return Err(SigError::NotFree { permutation });
    }
    for gen in &gens {
        for e in &h.elements {
            let br = pair_bracket(gen, e);
            if !br.left.is_zero() || !br.right.is_zero() {
                return Err(SigError::InvalidSpec(
                    "acting torus does not commute with H".into(),
                ));
            }
        }
    }
    let reps = enumerate_fixed_points(spec, expected)?;
    let conv = spec.convention();
    for (i, g) in reps.iter().enumerate() {
        let d = datum(g, spec, &h, &conv).map_err(|e| e.at(i + 1, g.to_string()))?;
        report.fixed_points.push(d);
    }
    let points = &report.fixed_points;
    report.signature_up_to_sign = points.iter().map(|p| p.contribution as i64).sum();
    let sigma = report.signature_up_to_sign;
    let checks = &mut report.cross_checks;
    checks.insert(
        "engine_equivalence".into(),
        points
            .iter()
            .all(|p| p.contribution == p.contribution_orientdet),
    );
    checks.insert(
        "bounded_by_fixed_point_count".into(),
        sigma.unsigned_abs() as usize <= points.len(),
    );
    checks.insert(
        "weight_skewness".into(),
        points.iter().all(|p| p.weight_skew),
    );
    if !report.real_dimension.is_multiple_of(4) {
        checks.insert("vanishes_outside_dimension_4k".into(), sigma == 0);
    }
    if spec.flipped_torus_mode {
        let bad: Vec<String> = points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.flipped_formula_agrees == Some(false))
            .map(|(i, _)| format!("#{}", i + 1))
            .collect();
        checks.insert("flipped_formula_consistent".into(), bad.is_empty());
        if !bad.is_empty() {
            report.notes.push(format!(
                "Ad(g^-1)X + Y differs from the solved twist at fixed points {}",
                bad.join(", ")
            ));
        }
    } else {
        report.notes.push(
            "twist solved on h directly; no complementary torus choice enters the weights".into(),
        );
    }
    Ok(report)
}

/// Reversing the orientation of `g` negates every contribution.
pub fn check_orientation_reversal(spec: &BiquotientSpec) -> Result<bool> {
    let base = biquotient_signature(spec)?;
    let mut rev = spec.clone();
    rev.reversed_orientation = !spec.reversed_orientation;
    let other = biquotient_signature(&rev)?;
    Ok(base.fixed_points.len() == other.fixed_points.len()
        && base
            .contributions()
            .iter()
            .zip(other.contributions())
            .all(|(a, b)| *a == -b)
        && base.signature_up_to_sign == -other.signature_up_to_sign)
}

/// Scaling the circle by a positive factor leaves every contribution fixed.
pub fn check_circle_scaling(spec: &BiquotientSpec, factor: i64) -> Result<bool> {
    if factor <= 0 {
        return Err(SigError::InvalidSpec(
            "scaling factor must be positive".into(),
        ));
    }
    let base = biquotient_signature(spec)?;
    let mut scaled = spec.clone();
    scaled.circle = spec.circle.iter().map(|c| c * factor).collect();
    let other = biquotient_signature(&scaled)?;
    Ok(base.contributions() == other.contributions())
}
