mod common;

use common::oracles::commutant_by_characters;
use proptest::prelude::*;
use tenfold_core::clifford::{classify_real, CliffordSignature};
use tenfold_core::rep::{
    build_generators, commutant_dimension, commutant_dimension_dense, grothendieck, irreducible_pieces,
    restriction_quotient, verify_relations,
};
use tenfold_core::tenfold::{ko_group, GroupTag};

#[test]
fn relations_and_division_rings_up_to_ten_generators() {
    for n in 0..=10u32 {
        for p in 0..=n {
            let s = CliffordSignature::new(p, n - p);
            let alg = classify_real(s);
            let gens = build_generators(s).unwrap();
            assert!(verify_relations(&gens), "{s}");
            assert_eq!(gens.dimension as u64, alg.faithful_real_dim(), "{s}");
            let pieces = irreducible_pieces(&gens).unwrap();
            assert_eq!(pieces.len(), usize::from(alg.summands), "{s}");
            for piece in &pieces {
                assert!(verify_relations(piece), "{s}");
                assert_eq!(piece.dimension as u64, alg.irrep_real_dim(), "{s}");
                let dim = commutant_dimension(piece).unwrap();
                assert_eq!(dim, commutant_by_characters(piece), "{s}");
                assert_eq!(dim as u32, alg.ring.real_dim(), "{s}");
                if piece.dimension <= 8 {
                    assert_eq!(commutant_dimension_dense(piece).unwrap(), dim, "{s}");
                }
            }
        }
    }
}

#[test]
fn the_two_irreducibles_are_inequivalent() {
    // the commutant of the sum is the sum of the two rings, no off-diagonal maps
    for (p, q) in [(0, 1), (3, 0), (1, 2), (2, 3), (7, 0), (0, 5)] {
        let s = CliffordSignature::new(p, q);
        let gens = build_generators(s).unwrap();
        let ring = classify_real(s).ring.real_dim() as usize;
        assert_eq!(commutant_dimension(&gens).unwrap(), 2 * ring, "{s}");
        assert_eq!(commutant_by_characters(&gens), 2 * ring, "{s}");
    }
}

#[test]
fn quotients_match_ko_groups() {
    for k in 0..8 {
        assert_eq!(restriction_quotient(k), ko_group(k), "k={k}");
    }
    let expected = [
        GroupTag::Z,
        GroupTag::Z2,
        GroupTag::Z2,
        GroupTag::Zero,
        GroupTag::Z,
        GroupTag::Zero,
        GroupTag::Zero,
        GroupTag::Zero,
    ];
    for (k, e) in expected.iter().enumerate() {
        assert_eq!(restriction_quotient(k as i64), *e);
    }
}

#[test]
fn grothendieck_groups_are_z_plus_z_at_three_and_seven() {
    for k in 0..16i64 {
        let r = grothendieck(k);
        let expected = if matches!(k % 8, 3 | 7) { GroupTag::ZplusZ } else { GroupTag::Z };
        assert_eq!(r.group, expected, "k={k}");
        assert_eq!(r.group == GroupTag::ZplusZ, r.irrep_count == 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_signatures_satisfy_relations(p in 0u32..=12, q in 0u32..=12) {
        prop_assume!(p + q <= 12);
        let gens = build_generators(CliffordSignature::new(p, q)).unwrap();
        prop_assert!(verify_relations(&gens));
    }
}
