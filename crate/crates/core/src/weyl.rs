//! Weyl group enumeration and coset decomposition.
//!
//! Elements are stored as ambient matrices scaled by [`DENOM`]: types A–D act
//! by signed permutations, while the G2 and F4 models need entries in 1/3 Z
//! and 1/2 Z respectively. A single global scale keeps hashing consistent
//! between a group and its reflection subgroups.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Result, SigError};
use crate::rootsys::{Root, RootSystem};

/// Common denominator of all stored matrix entries.
pub const DENOM: i64 = 6;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_WEYL_CAP: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    dim: usize,
    /// Row-major, scaled by `DENOM`.
    matrix: Vec<i64>,
    /// Reduced word in the simple reflections (indices into `simples`).
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        let mut matrix = vec![0; dim * dim];
        for i in 0..dim {
            matrix[i * dim + i] = DENOM;
        }
        WeylElement {
            dim,
            matrix,
            word: Vec::new(),
        }
    }

    pub fn reflection(r: &Root) -> Self {
        let dim = r.0.len();
        let norm = r.dot(r);
        let mut matrix = vec![0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let id = if i == j { DENOM } else { 0 };
                let num = 2 * DENOM * r.0[i] * r.0[j];
                assert_eq!(
                    num % norm,
                    0,
                    "reflection not representable at scale {DENOM}"
                );
                matrix[i * dim + j] = id - num / norm;
            }
        }
        WeylElement {
            dim,
            matrix,
            word: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Scaled matrix entries; divide by [`DENOM`] for the true value.
    pub fn scaled_matrix(&self) -> &[i64] {
        &self.matrix
    }

    /// Matrix product `self * other`; the word is concatenated, not reduced.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.dim;
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let s: i64 = (0..n)
                    .map(|k| self.matrix[i * n + k] * other.matrix[k * n + j])
                    .sum();
                debug_assert_eq!(s % DENOM, 0);
                matrix[i * n + j] = s / DENOM;
            }
        }
        let mut word = self.word.clone();
        word.extend(&other.word);
        WeylElement {
            dim: n,
            matrix,
            word,
        }
    }

    /// Inverse (the transpose, since the matrix is orthogonal).
    pub fn inverse(&self) -> WeylElement {
        let n = self.dim;
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                matrix[j * n + i] = self.matrix[i * n + j];
            }
        }
        WeylElement {
            dim: n,
            matrix,
            word: self.word.iter().rev().copied().collect(),
        }
    }

    pub fn act(&self, r: &Root) -> Root {
        let n = self.dim;
        Root(
            (0..n)
                .map(|i| {
                    let s: i64 = (0..n).map(|k| self.matrix[i * n + k] * r.0[k]).sum();
                    debug_assert_eq!(s % DENOM, 0);
                    s / DENOM
                })
                .collect(),
        )
    }

    /// `w^{-1}(r)` without materializing the inverse.
    pub fn act_inverse(&self, r: &Root) -> Root {
        let n = self.dim;
        Root(
            (0..n)
                .map(|i| {
                    let s: i64 = (0..n).map(|k| self.matrix[k * n + i] * r.0[k]).sum();
                    s / DENOM
                })
                .collect(),
        )
    }

    /// Determinant sign: each simple reflection contributes -1.
    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// A fully enumerated Weyl group in breadth-first (length, lexicographic)
/// order; element 0 is the identity.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub dim: usize,
    pub elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
}

impl WeylGroup {
    /// Closure of the simple reflections of `sys`, stopping with
    /// [`SigError::GroupTooLarge`] once more than `cap` elements are found.
    pub fn generate(sys: &RootSystem, cap: usize) -> Result<WeylGroup> {
        let dim = sys.ambient_dim;
        let gens: Vec<WeylElement> = sys.simples.iter().map(WeylElement::reflection).collect();
        let id = WeylElement::identity(dim);
        let mut index = HashMap::new();
        index.insert(id.matrix.clone(), 0);
        let mut elements = vec![id];
        let mut head = 0;
        while head < elements.len() {
            for (i, s) in gens.iter().enumerate() {
                let mut child = elements[head].compose(s);
                child.word = elements[head].word.clone();
                child.word.push(i);
                if index.contains_key(&child.matrix) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(SigError::GroupTooLarge { cap });
                }
                index.insert(child.matrix.clone(), elements.len());
                elements.push(child);
            }
            head += 1;
        }
        Ok(WeylGroup {
            dim,
            elements,
            index,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.matrix).copied()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.index.contains_key(&w.matrix)
    }

    /// The unique element of maximal length.
    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("a group is never empty")
    }
}

/// One representative per left coset `w W_H`.
#[derive(Debug, Clone)]
pub struct CosetList {
    pub representatives: Vec<WeylElement>,
}

impl CosetList {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

/// Checks that `sub` is a subgroup of `ambient` as sets of matrices.
fn check_subgroup(ambient: &WeylGroup, sub: &WeylGroup) -> Result<()> {
    if sub.dim != ambient.dim || !sub.elements.iter().all(|h| ambient.contains(h)) {
        return Err(SigError::NotASubgroup);
    }
    let members: HashSet<&[i64]> = sub.elements.iter().map(|h| h.scaled_matrix()).collect();
    let id = WeylElement::identity(sub.dim);
    if !members.contains(id.scaled_matrix()) {
        return Err(SigError::NotASubgroup);
    }
    // Grow a generated subgroup one missing element at a time; every product
    // must stay inside the set.
    let mut gens: Vec<&WeylElement> = Vec::new();
    let mut reached: HashSet<Vec<i64>> = HashSet::from([id.matrix.clone()]);
    for h in &sub.elements {
        if reached.contains(&h.matrix) {
            continue;
        }
        gens.push(h);
        let mut queue: VecDeque<WeylElement> = reached
            .iter()
            .map(|m| WeylElement {
                dim: sub.dim,
                matrix: m.clone(),
                word: Vec::new(),
            })
            .collect();
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.compose(g);
                if !members.contains(y.scaled_matrix()) {
                    return Err(SigError::NotASubgroup);
                }
                if reached.insert(y.matrix.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(())
}

/// Brute-force left coset decomposition `W_G / W_H`. The representative of
/// each coset is its first element in (length, lexicographic word) order,
/// i.e. the minimal-length one.
pub fn left_cosets(w_g: &WeylGroup, w_h: &WeylGroup) -> Result<CosetList> {
    check_subgroup(w_g, w_h)?;
    let mut assigned = vec![false; w_g.order()];
    let mut representatives = Vec::new();
    for (i, w) in w_g.elements.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        representatives.push(w.clone());
        for h in &w_h.elements {
            let j = w_g
                .position(&w.compose(h))
                .expect("product of group elements stays in the group");
            assigned[j] = true;
        }
    }
    Ok(CosetList { representatives })
}

/// Minimal coset representatives for a reflection subgroup given by its root
/// subsystem: exactly the `w` mapping every positive root of `sys_h` to a
/// positive root of `sys_g`. Linear in `|W_G|`, unlike [`left_cosets`].
pub fn minimal_coset_representatives(
    w_g: &WeylGroup,
    sys_g: &RootSystem,
    sys_h: &RootSystem,
) -> CosetList {
    let representatives = w_g
        .elements
        .iter()
        .filter(|w| {
            sys_h
                .positives
                .iter()
                .all(|a| sys_g.is_positive(&w.act(a)).unwrap_or(false))
        })
        .cloned()
        .collect();
    CosetList { representatives }
}

/// `#{α ∈ Δ_G^+ \ Δ_H | α ∘ w^{-1} ∉ Δ_G^+}`, roots read as functionals on
/// the torus. Identifying functionals with vectors, `α ∘ w^{-1}` is the image
/// `w(α)`; this is the count that is constant on left cosets `w W_H`.
pub fn inversion_count_outside(w: &WeylElement, sys_g: &RootSystem, sys_h: &RootSystem) -> usize {
    sys_g
        .positives
        .iter()
        .filter(|a| !sys_h.contains(a))
        .filter(|a| !sys_g.is_positive(&w.act(a)).unwrap_or(false))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn group(f: Family, r: usize) -> (RootSystem, WeylGroup) {
        let sys = RootSystem::build(f, r).unwrap();
        let w = WeylGroup::generate(&sys, DEFAULT_WEYL_CAP).unwrap();
        (sys, w)
    }

    #[test]
    fn classical_orders() {
        for (f, r, order) in [
            (Family::A, 2, 6),
            (Family::A, 5, 720),
            (Family::C, 3, 48),
            (Family::B, 3, 48),
            (Family::D, 4, 192),
            (Family::G2, 2, 12),
        ] {
            assert_eq!(group(f, r).1.order(), order, "{f}{r}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let sys = RootSystem::build(Family::A, 3).unwrap();
        assert_eq!(
            WeylGroup::generate(&sys, 10).unwrap_err(),
            SigError::GroupTooLarge { cap: 10 }
        );
    }

    #[test]
    fn words_are_reduced_and_lexicographic() {
        let (_, w) = group(Family::A, 2);
        let words: Vec<Vec<usize>> = w.elements.iter().map(|e| e.word.clone()).collect();
        assert_eq!(
            words,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![0, 1],
                vec![1, 0],
                vec![0, 1, 0]
            ]
        );
        assert_eq!(w.longest().len(), 3);
    }

    #[test]
    fn action_examples() {
        let e12 = Root::e_diff(3, 1, 2);
        let e23 = Root::e_diff(3, 2, 3);
        let id = WeylElement::identity(3);
        assert_eq!(id.act(&e12), e12);
        let s = WeylElement::reflection(&e12);
        assert_eq!(s.act(&e12), e12.neg());
        // s_α(β) = β - 2<β,α>/<α,α> α = (e2-e3) + (e1-e2)
        assert_eq!(s.act(&e23), Root::e_diff(3, 1, 3));
    }

    #[test]
    fn elements_permute_roots() {
        for (f, r) in [(Family::G2, 2), (Family::B, 2), (Family::C, 3)] {
            let (sys, w) = group(f, r);
            for e in &w.elements {
                for root in &sys.roots {
                    assert!(sys.contains(&e.act(root)));
                }
            }
        }
    }

    #[test]
    fn coset_counts() {
        let (a2, wa2) = group(Family::A, 2);
        let a1 = a2.subsystem(&[Root::e_diff(3, 1, 2)]).unwrap();
        let wa1 = WeylGroup::generate(&a1, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(left_cosets(&wa2, &wa1).unwrap().len(), 3);
        let full = left_cosets(&wa2, &wa2).unwrap();
        assert_eq!(full.len(), 1);
        assert!(full.representatives[0].is_empty());

        let (a3, wa3) = group(Family::A, 3);
        let h = a3
            .subsystem(&[Root::e_diff(4, 1, 2), Root::e_diff(4, 3, 4)])
            .unwrap();
        let wh = WeylGroup::generate(&h, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(left_cosets(&wa3, &wh).unwrap().len(), 6);
    }

    #[test]
    fn non_subgroup_rejected() {
        let (a2, wa2) = group(Family::A, 2);
        let a1 = a2.subsystem(&[Root::e_diff(3, 1, 2)]).unwrap();
        let mut bogus = WeylGroup::generate(&a1, DEFAULT_WEYL_CAP).unwrap();
        // Swap in a 3-cycle for the reflection: {e, (123)} is not closed.
        let c = wa2.elements[3].clone();
        bogus.index.clear();
        bogus.index.insert(bogus.elements[0].matrix.clone(), 0);
        bogus.index.insert(c.matrix.clone(), 1);
        bogus.elements[1] = c;
        assert_eq!(
            left_cosets(&wa2, &bogus).unwrap_err(),
            SigError::NotASubgroup
        );
    }

    #[test]
    fn inversion_examples() {
        let (a2, wa2) = group(Family::A, 2);
        let a1 = a2.subsystem(&[Root::e_diff(3, 1, 2)]).unwrap();
        let e = &wa2.elements[0];
        assert_eq!(inversion_count_outside(e, &a2, &a1), 0);
        let w0 = wa2.longest();
        assert_eq!(inversion_count_outside(w0, &a2, &a1), 2);
        assert_eq!(inversion_count_outside(w0, &a2, &a2.empty_like()), 3);
    }

    #[test]
    fn fast_and_brute_force_cosets_agree() {
        let (c3, wc3) = group(Family::C, 3);
        let h = c3
            .subsystem(&[
                Root(vec![2, 0, 0]),
                Root(vec![0, 1, -1]),
                Root(vec![0, 0, 2]),
            ])
            .unwrap();
        let wh = WeylGroup::generate(&h, DEFAULT_WEYL_CAP).unwrap();
        let brute = left_cosets(&wc3, &wh).unwrap();
        let fast = minimal_coset_representatives(&wc3, &c3, &h);
        assert_eq!(brute.representatives, fast.representatives);
        assert_eq!(fast.len(), 3);
    }
}
