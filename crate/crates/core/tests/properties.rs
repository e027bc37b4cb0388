use proptest::prelude::*;
use sigcalc_core::liealg::{
    adjoint, bracket, frobenius, orientation_det, orth_complement, permutation_sign,
    AlgebraElement, GaussQ, GroupElement, OrientationConvention, Subspace,
};
use sigcalc_core::linalg::{q, Q};
use sigcalc_core::rootsys::{Family, RootSystem};
use sigcalc_core::weyl::{WeylGroup, DEFAULT_WEYL_CAP};

fn lambda() -> GaussQ {
    GaussQ::new(Q::new(3.into(), 5.into()), Q::new(4.into(), 5.into()))
}

fn element(n: usize, coords: &[i64]) -> AlgebraElement {
    OrientationConvention::standard(n)
        .basis()
        .iter()
        .zip(coords)
        .fold(AlgebraElement::zero(n), |acc, (b, &c)| {
            acc.add(&b.scale(&q(c)))
        })
}

fn group(perm: &[usize], exps: &[i64]) -> GroupElement {
    let n = perm.len();
    let mut e = exps[..n - 1].to_vec();
    e.push(-e.iter().sum::<i64>());
    GroupElement::from_permutation(perm).mul(&GroupElement::torus_element(&lambda(), &e).unwrap())
}

fn setup() -> impl Strategy<Value = (Vec<usize>, Vec<i64>, Vec<i64>, Vec<i64>)> {
    (2usize..=4).prop_flat_map(|n| {
        let d = n * n - 1;
        (
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(-2i64..=2, n),
            prop::collection::vec(-3i64..=3, d),
            prop::collection::vec(-3i64..=3, d),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn adjoint_is_an_isometry((perm, exps, x, y) in setup()) {
        let n = perm.len();
        let g = group(&perm, &exps);
        let (x, y) = (element(n, &x), element(n, &y));
        prop_assert_eq!(frobenius(&adjoint(&g, &x), &adjoint(&g, &y)), frobenius(&x, &y));
    }

    #[test]
    fn adjoint_is_a_lie_map((perm, exps, x, y) in setup()) {
        let n = perm.len();
        let g = group(&perm, &exps);
        let (x, y) = (element(n, &x), element(n, &y));
        prop_assert_eq!(adjoint(&g, &bracket(&x, &y)), bracket(&adjoint(&g, &x), &adjoint(&g, &y)));
    }

    #[test]
    fn complement_is_an_involution((perm, _e, x, y) in setup()) {
        let n = perm.len();
        let basis = vec![element(n, &x), element(n, &y)];
        let s = Subspace::new(n, basis);
        prop_assume!(s.is_ok());
        let s = s.unwrap();
        let c = orth_complement(&s);
        prop_assert_eq!(s.dim() + c.dim(), n * n - 1);
        prop_assert!(orth_complement(&c).same_span(&s));
    }

    #[test]
    fn generalized_permutations_permute_root_spaces((perm, exps, _x, _y) in setup()) {
        let n = perm.len();
        let g = group(&perm, &exps);
        for j in 1..=n {
            for k in j + 1..=n {
                let (a, b) = (perm[j - 1] + 1, perm[k - 1] + 1);
                let (a, b) = (a.min(b), a.max(b));
                let target = Subspace::new(
                    n,
                    vec![AlgebraElement::root_re(n, a, b), AlgebraElement::root_im(n, a, b)],
                )
                .unwrap();
                prop_assert!(target.contains(&adjoint(&g, &AlgebraElement::root_re(n, j, k))));
                prop_assert!(target.contains(&adjoint(&g, &AlgebraElement::root_im(n, j, k))));
            }
        }
    }

    #[test]
    fn reordering_a_basis_has_the_permutation_sign(perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle()) {
        let conv = OrientationConvention::standard(3);
        let b = conv.basis();
        let a: Vec<AlgebraElement> = perm.iter().map(|&i| b[i].clone()).collect();
        prop_assert_eq!(orientation_det(&a, &b, &conv).unwrap() as i64, permutation_sign(&perm));
    }

    #[test]
    fn weyl_action_is_a_group_action(
        fam in prop::sample::select(vec![(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G2, 2), (Family::F4, 4)]),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
        r in any::<prop::sample::Index>(),
    ) {
        let sys = RootSystem::build(fam.0, fam.1).unwrap();
        let w = WeylGroup::generate(&sys, DEFAULT_WEYL_CAP).unwrap();
        let a = &w.elements[i.index(w.order())];
        let b = &w.elements[j.index(w.order())];
        let root = &sys.roots[r.index(sys.roots.len())];
        let image = a.compose(b).act(root);
        prop_assert!(sys.contains(&image));
        prop_assert_eq!(image, a.act(&b.act(root)));
    }
}
