//! Clifford algebra periodicity, the tenfold periodic table, characteristic
//! class genera, and lattice topological invariants of Bloch Hamiltonians.

pub mod charclass;
pub mod clifford;
pub mod invariants;
pub mod linalg;
pub mod models;
pub mod rep;
pub mod tenfold;

pub use clifford::{
    chessboard, classify_complex, classify_real, classify_real_recursive, star_index,
    verify_isomorphisms, CliffordSignature, ComplexCliffordIndex, DivisionRing, MatrixAlgebra,
};
pub use rep::{
    build_generators, commutant_dimension, complex_restriction_quotient, grothendieck,
    irreducible_pieces, restriction_quotient, verify_relations, GeneratorSet, GrothendieckRecord,
    RepError,
};
pub use tenfold::{
    az_signature, index_table, index_type, k_group, ko_group, periodic_table, symmetric_space,
    AZClass, CartanLabel, Family, GroupTag, IndexForm, PeriodicTable,
};
