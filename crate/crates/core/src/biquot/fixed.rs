//! Torus freeness and the search for `T̃`-fixed points.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::One;

use super::signature::is_isolated;
use super::twist::verify_with;
use super::{embed_h, BiquotientSpec, FactorKind, HBasis};
use crate::error::{Result, SigError};
use crate::liealg::GroupElement;
use crate::linalg::smith_invariants;

fn unimodular_columns(rows: &[Vec<i64>], r: usize) -> bool {
    let inv = smith_invariants(rows);
    inv.len() == r && inv.iter().all(|d| d.is_one())
}

/// Whether `θ ↦ exp(Σ θ_b (i P_b, i Q_b))` is injective on `R^r / 2πZ^r`.
pub(crate) fn torus_parametrization_faithful(h: &HBasis, n: usize) -> bool {
    let r = h.torus_count;
    let rows: Vec<Vec<i64>> = (0..2 * n)
        .map(|i| {
            h.torus_weights
                .iter()
                .map(|(p, q)| if i < n { p[i] } else { q[i - n] })
                .collect()
        })
        .collect();
    unimodular_columns(&rows, r)
}

/// A permutation `w` for which `s ↦ P s - w(Q s)` has a nontrivial kernel on
/// the torus of `H`, if any.
pub fn torus_freeness_witness(h: &HBasis, n: usize) -> Option<Vec<usize>> {
    let r = h.torus_count;
    (0..n).permutations(n).find(|w| {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                h.torus_weights
                    .iter()
                    .map(|(p, q)| p[w[i]] - q[i])
                    .collect()
            })
            .collect();
        !unimodular_columns(&rows, r)
    })
}

/// Whether the maximal torus of `H` acts freely on `G`.
pub fn torus_freeness_check(spec: &BiquotientSpec) -> bool {
    match embed_h(&spec.embedding, spec.n) {
        Ok(h) => torus_freeness_witness(&h, spec.n).is_none(),
        Err(_) => false,
    }
}

/// Generators `(σ_L, σ_R)` of the Weyl group of `H` acting on permutation
/// patterns by `π ↦ σ_L ∘ π ∘ σ_R^{-1}`.
fn weyl_h_generators(spec: &BiquotientSpec) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = spec.n;
    let swap_all = |blocks: &[Vec<usize>], a: usize| {
        let mut s: Vec<usize> = (0..n).collect();
        for b in blocks {
            s.swap(b[a - 1] - 1, b[a] - 1);
        }
        s
    };
    let mut gens = Vec::new();
    for f in &spec.embedding.factors {
        if let FactorKind::SpecialUnitary(k) = f.kind {
            for a in 1..k {
                gens.push((swap_all(&f.left_blocks, a), swap_all(&f.right_blocks, a)));
            }
        }
    }
    gens
}

fn orbit(pattern: &[usize], gens: &[(Vec<usize>, Vec<usize>)]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([pattern.to_vec()]);
    let mut stack = vec![pattern.to_vec()];
    while let Some(p) = stack.pop() {
        for (l, r) in gens {
            // r is an involution, so r^{-1} = r.
            let next: Vec<usize> = (0..p.len()).map(|j| l[p[r[j]]]).collect();
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    seen
}

/// Representatives of the `T̃`-fixed points of `G//H`, one per `H`-orbit.
///
/// Two generalized permutations with the same underlying permutation are
/// `H`-equivalent once the torus of `H` acts freely, so orbits are tracked
/// on permutation patterns modulo the Weyl group of `H`.
pub fn enumerate_fixed_points(
    spec: &BiquotientSpec,
    expected: Option<usize>,
) -> Result<Vec<GroupElement>> {
    let h = embed_h(&spec.embedding, spec.n)?;
    let gens = weyl_h_generators(spec);
    let reps = match &spec.fixed_point_reps {
        Some(given) => {
            let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
            for (i, g) in given.iter().enumerate() {
                let Some(p) = g.permutation() else {
                    return Err(SigError::NotInMaxTorus.at(i + 1, g.to_string()));
                };
                if !verify_with(g, spec, &h) {
                    return Err(SigError::InvalidSpec(format!(
                        "representative #{} is not a fixed point",
                        i + 1
                    )));
                }
                if seen.contains(&p) {
                    return Err(SigError::InvalidSpec(format!(
                        "representative #{} repeats an earlier fixed point",
                        i + 1
                    )));
                }
                seen.extend(orbit(&p, &gens));
            }
            given.clone()
        }
        None => {
            let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
            let mut reps = Vec::new();
            for p in (0..spec.n).permutations(spec.n) {
                if seen.contains(&p) {
                    continue;
                }
                let g = GroupElement::from_permutation(&p);
                if verify_with(&g, spec, &h) {
                    reps.push(g);
                }
                seen.extend(orbit(&p, &gens));
            }
            reps
        }
    };
    if let Some(expected) = expected {
        let mut found = 0;
        for g in &reps {
            if is_isolated(g, spec, &h)? {
                found += 1;
            }
        }
        if found != expected || reps.len() != expected {
            return Err(SigError::IncompleteEnumeration { found, expected });
        }
    }
    Ok(reps)
}
