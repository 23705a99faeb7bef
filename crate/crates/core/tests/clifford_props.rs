use proptest::prelude::*;
use tenfold_core::clifford::{
    classify_complex, classify_real, classify_real_recursive, CliffordSignature, ComplexCliffordIndex,
};

fn sig(p: u32, q: u32) -> CliffordSignature {
    CliffordSignature::new(p, q)
}

#[test]
fn dimension_matches_algebra_size() {
    for p in 0..=16 {
        for q in 0..=(16 - p) {
            let s = sig(p, q);
            assert_eq!(classify_real(s).real_dim(), s.algebra_dim(), "{s}");
        }
    }
}

#[test]
fn two_paths_agree_up_to_sixteen() {
    let mut cases = 0;
    for p in 0..=16 {
        for q in 0..=16 {
            assert_eq!(classify_real(sig(p, q)), classify_real_recursive(sig(p, q)), "({p},{q})");
            cases += 1;
        }
    }
    assert_eq!(cases, 289);
}

#[test]
fn two_summands_only_at_residues_one_and_five() {
    for p in 0..12 {
        for q in 0..12 {
            let s = sig(p, q);
            assert_eq!(classify_real(s).summands == 2, matches!(s.residue(), 1 | 5), "{s}");
        }
    }
}

proptest! {
    #[test]
    fn hyperbolic_pair_keeps_type(p in 0u32..20, q in 0u32..20) {
        let a = classify_real(sig(p, q));
        let b = classify_real(sig(p + 1, q + 1));
        prop_assert!(a.same_type(&b));
        prop_assert_eq!(b.block, 2 * a.block);
    }

    #[test]
    fn complex_two_fold(n in 0u32..40) {
        let a = classify_complex(ComplexCliffordIndex { n });
        let b = classify_complex(ComplexCliffordIndex { n: n + 2 });
        prop_assert!(a.same_type(&b));
        prop_assert_eq!(b.block, 2 * a.block);
        prop_assert_eq!(a.real_dim(), 2u128 << n);
    }

    #[test]
    fn eight_fold_periodicity(p in 0u32..20, q in 0u32..20) {
        let a = classify_real(sig(p, q));
        for b in [classify_real(sig(p + 8, q)), classify_real(sig(p, q + 8))] {
            prop_assert!(a.same_type(&b));
            prop_assert_eq!(b.block, 16 * a.block);
        }
    }

    #[test]
    fn display_round_trip(p in 0u32..24, q in 0u32..24) {
        let a = classify_real(sig(p, q));
        prop_assert_eq!(a.to_string().parse::<tenfold_core::MatrixAlgebra>().unwrap(), a);
    }
}
