use proptest::prelude::*;
use sigcalc_core::biquot::{
    biquotient_signature, biquotient_signature_expecting, BiquotientSpec, EmbeddingFactor,
    EmbeddingSpec, TildeRow,
};
use sigcalc_core::homsig::{euler_characteristic_equal_rank, homogeneous_signature};
use sigcalc_core::rootsys::{Family, Root, RootSystem};
use sigcalc_core::weyl::{
    inversion_count_outside, left_cosets, minimal_coset_representatives, WeylGroup,
    DEFAULT_WEYL_CAP,
};

fn a(n: usize) -> RootSystem {
    RootSystem::build(Family::A, n).unwrap()
}

/// Block subsystem `S(U(k_1) × ... )` of `A_{n-1}` from block sizes.
fn blocks(sizes: &[usize]) -> (RootSystem, RootSystem) {
    let n: usize = sizes.iter().sum();
    let g = a(n - 1);
    let mut gens = Vec::new();
    let mut start = 1;
    for &s in sizes {
        for i in start..start + s - 1 {
            gens.push(Root::e_diff(n, i, i + 1));
        }
        start += s;
    }
    let h = if gens.is_empty() {
        g.empty_like()
    } else {
        g.subsystem(&gens).unwrap()
    };
    (g, h)
}

fn c3_c1c2() -> (RootSystem, RootSystem) {
    let c3 = RootSystem::build(Family::C, 3).unwrap();
    let gens = [
        Root(vec![2, 0, 0]),
        Root(vec![0, 1, -1]),
        Root(vec![0, 0, 2]),
    ];
    let h = c3.subsystem(&gens).unwrap();
    (c3, h)
}

/// Signature of `Gr(k, n)` from Schubert calculus: the middle-degree
/// intersection form pairs each partition in the `k × (n-k)` box with its
/// complement, so only self-complementary partitions contribute (+1 each).
fn schubert_signature(k: usize, n: usize) -> i64 {
    let m = n - k;
    if (k * m) % 2 == 1 {
        return 0;
    }
    let half = k * m / 2;
    fn partitions(
        k: usize,
        m: usize,
        size: usize,
        max: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if acc.len() == k {
            if size == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for p in (0..=max.min(size).min(m)).rev() {
            acc.push(p);
            partitions(k, m, size - p, p, acc, out);
            acc.pop();
        }
    }
    let mut parts = Vec::new();
    partitions(k, m, half, m, &mut Vec::new(), &mut parts);
    parts
        .iter()
        .filter(|l| (0..k).all(|i| l[i] + l[k - 1 - i] == m))
        .count() as i64
}

#[test]
fn coset_parity_is_invariant() {
    let cases = [blocks(&[2, 1]), blocks(&[2, 2]), c3_c1c2()];
    for (g, h) in &cases {
        let wg = WeylGroup::generate(g, DEFAULT_WEYL_CAP).unwrap();
        let wh = WeylGroup::generate(h, DEFAULT_WEYL_CAP).unwrap();
        for w in &wg.elements {
            let p = inversion_count_outside(w, g, h) % 2;
            for v in &wh.elements {
                assert_eq!(inversion_count_outside(&w.compose(v), g, h) % 2, p);
            }
        }
    }
}

#[test]
fn fast_cosets_match_brute_force() {
    for (g, h) in [
        blocks(&[2, 1]),
        blocks(&[2, 2]),
        blocks(&[1, 3, 1]),
        c3_c1c2(),
    ] {
        let wg = WeylGroup::generate(&g, DEFAULT_WEYL_CAP).unwrap();
        let wh = WeylGroup::generate(&h, DEFAULT_WEYL_CAP).unwrap();
        let brute = left_cosets(&wg, &wh).unwrap();
        let fast = minimal_coset_representatives(&wg, &g, &h);
        let words = |c: &sigcalc_core::weyl::CosetList| {
            let mut v: Vec<Vec<usize>> = c.representatives.iter().map(|w| w.word.clone()).collect();
            v.sort();
            v
        };
        assert_eq!(words(&brute), words(&fast));
        assert_eq!(brute.len() * wh.order(), wg.order());
    }
}

#[test]
fn grassmannians_match_schubert_calculus() {
    for (k, n) in [
        (1, 3),
        (1, 5),
        (2, 4),
        (2, 5),
        (2, 6),
        (3, 6),
        (2, 7),
        (3, 7),
    ] {
        let (g, h) = blocks(&[k, n - k]);
        assert_eq!(
            homogeneous_signature(&g, &h, DEFAULT_WEYL_CAP)
                .unwrap()
                .abs(),
            schubert_signature(k, n),
            "Gr({k},{n})"
        );
    }
}

#[test]
fn euler_characteristics() {
    let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    for (k, n) in [(1, 3), (2, 4), (2, 6), (3, 7)] {
        let (g, h) = blocks(&[k, n - k]);
        assert_eq!(
            euler_characteristic_equal_rank(&g, &h, DEFAULT_WEYL_CAP).unwrap(),
            binom(n, k)
        );
    }
    let (g, h) = c3_c1c2();
    assert_eq!(
        euler_characteristic_equal_rank(&g, &h, DEFAULT_WEYL_CAP).unwrap(),
        3
    );
}

#[test]
fn full_flags_have_zero_signature() {
    let (g, h) = blocks(&[1, 1, 1, 1]);
    assert_eq!(homogeneous_signature(&g, &h, DEFAULT_WEYL_CAP).unwrap(), 0);
    let c2 = RootSystem::build(Family::C, 2).unwrap();
    assert_eq!(
        homogeneous_signature(&c2, &c2.empty_like(), DEFAULT_WEYL_CAP).unwrap(),
        0
    );
}

#[test]
fn conjugate_subsystems_give_equal_signatures() {
    let g = a(2);
    for (j, k) in [(1, 2), (2, 3), (1, 3)] {
        let h = g.subsystem(&[Root::e_diff(3, j, k)]).unwrap();
        assert_eq!(
            homogeneous_signature(&g, &h, DEFAULT_WEYL_CAP)
                .unwrap()
                .abs(),
            1
        );
    }
    let g = a(3);
    for pairs in [[(1, 2), (3, 4)], [(1, 3), (2, 4)], [(1, 4), (2, 3)]] {
        let gens: Vec<Root> = pairs.iter().map(|&(j, k)| Root::e_diff(4, j, k)).collect();
        let h = g.subsystem(&gens).unwrap();
        assert_eq!(
            homogeneous_signature(&g, &h, DEFAULT_WEYL_CAP)
                .unwrap()
                .abs(),
            2
        );
    }
}

#[test]
fn quaternionic_plane() {
    let (g, h) = c3_c1c2();
    assert_eq!(
        homogeneous_signature(&g, &h, DEFAULT_WEYL_CAP)
            .unwrap()
            .abs(),
        1
    );
}

/// `SU(n)/S(U(1) × U(n-1))` as a biquotient with `H` on the right.
fn projective(n: usize, circle: Vec<i64>) -> BiquotientSpec {
    let mut q = vec![0; n];
    q[0] = -1;
    q[1] = 1;
    BiquotientSpec {
        n,
        embedding: EmbeddingSpec {
            factors: vec![
                EmbeddingFactor::special_unitary(n - 1, vec![], vec![(2..=n).collect()]),
                EmbeddingFactor::torus(vec![0; n], q),
            ],
        },
        tilde_torus: vec![TildeRow {
            left: circle,
            right: vec![0; n],
        }],
        circle: vec![1],
        fixed_point_reps: None,
        flipped_torus_mode: false,
        reversed_orientation: false,
    }
}

#[test]
fn homogeneous_encodings_agree() {
    for (n, circle) in [(3, vec![1, 0, -1]), (5, vec![2, 1, 0, -1, -2])] {
        let (g, h) = blocks(&[1, n - 1]);
        let expected = homogeneous_signature(&g, &h, DEFAULT_WEYL_CAP)
            .unwrap()
            .abs();
        let r = biquotient_signature_expecting(&projective(n, circle), Some(n)).unwrap();
        assert_eq!(r.signature_up_to_sign.abs(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cp2_signature_is_circle_independent(x in -6i64..=6, y in -6i64..=6) {
        let circle = vec![x, y, -x - y];
        prop_assume!(x != y && x != -x - y && y != -x - y);
        let spec = projective(3, circle);
        let r = biquotient_signature(&spec).unwrap();
        prop_assert_eq!(r.fixed_points.len(), 3);
        prop_assert_eq!(r.signature_up_to_sign.abs(), 1);
        prop_assert!(r.cross_checks["engine_equivalence"]);
        prop_assert!(r.cross_checks["weight_skewness"]);
        let mut rev = spec.clone();
        rev.reversed_orientation = true;
        prop_assert_eq!(biquotient_signature(&rev).unwrap().signature_up_to_sign, -r.signature_up_to_sign);
    }
}
