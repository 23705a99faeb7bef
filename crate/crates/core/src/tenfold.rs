//! KO/K groups of a point, index types, symmetric spaces with their
//! Altland-Zirnbauer labels, and the assembled periodic table.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clifford::{star_index, CliffordSignature};

/// The abelian groups that occur in the tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupTag {
    Zero,
    Z,
    Z2,
    ZplusZ,
}

impl GroupTag {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupTag::Zero => "0",
            GroupTag::Z => "Z",
            GroupTag::Z2 => "Z2",
            GroupTag::ZplusZ => "Z+Z",
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown group tag {0:?}")]
pub struct ParseGroupError(pub String);

impl FromStr for GroupTag {
    type Err = ParseGroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "0" => Ok(GroupTag::Zero),
            "Z" => Ok(GroupTag::Z),
            "Z2" | "Z₂" | "Z_2" => Ok(GroupTag::Z2),
            "Z+Z" | "Z⊕Z" => Ok(GroupTag::ZplusZ),
            other => Err(ParseGroupError(other.to_string())),
        }
    }
}

impl Serialize for GroupTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for GroupTag {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Real,
    Complex,
}

impl Family {
    /// Length of the Bott period.
    pub fn period(self) -> u32 {
        match self {
            Family::Real => 8,
            Family::Complex => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Real => "real",
            Family::Complex => "complex",
        })
    }
}

fn reduce(k: i64, period: u32) -> u32 {
    k.rem_euclid(i64::from(period)) as u32
}

const KO_POINT: [GroupTag; 8] = [
    GroupTag::Z,
    GroupTag::Z2,
    GroupTag::Z2,
    GroupTag::Zero,
    GroupTag::Z,
    GroupTag::Zero,
    GroupTag::Zero,
    GroupTag::Zero,
];

/// `KO^{-k}(pt)`.
pub fn ko_group(k: i64) -> GroupTag {
    KO_POINT[reduce(k, 8) as usize]
}

/// `K^{-k}(pt)`.
pub fn k_group(k: i64) -> GroupTag {
    if reduce(k, 2) == 0 {
        GroupTag::Z
    } else {
        GroupTag::Zero
    }
}

/// Group for `family` at `k`.
pub fn point_group(k: i64, family: Family) -> GroupTag {
    match family {
        Family::Real => ko_group(k),
        Family::Complex => k_group(k),
    }
}

/// What the index of a `Cl_k`-linear Dirac operator computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndexForm {
    /// `Â(M)`, an integer.
    AhatInteger,
    /// `Â(M) / 2`, an integer.
    HalfAhat,
    /// `dim_C H_k mod 2`.
    ModTwoComplexDim,
    /// `dim_H H_k mod 2`.
    ModTwoQuaternionDim,
    /// `Td(M)`, an integer.
    ToddInteger,
    Zero,
}

impl IndexForm {
    /// Group in which this index takes values.
    pub fn value_group(self) -> GroupTag {
        match self {
            IndexForm::AhatInteger | IndexForm::HalfAhat | IndexForm::ToddInteger => GroupTag::Z,
            IndexForm::ModTwoComplexDim | IndexForm::ModTwoQuaternionDim => GroupTag::Z2,
            IndexForm::Zero => GroupTag::Zero,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IndexForm::AhatInteger => "AhatInteger",
            IndexForm::HalfAhat => "HalfAhat",
            IndexForm::ModTwoComplexDim => "ModTwoComplexDim",
            IndexForm::ModTwoQuaternionDim => "ModTwoQuaternionDim",
            IndexForm::ToddInteger => "ToddInteger",
            IndexForm::Zero => "Zero",
        }
    }

    /// Short symbolic form for text tables.
    pub fn symbol(self) -> &'static str {
        match self {
            IndexForm::AhatInteger => "Â(M)",
            IndexForm::HalfAhat => "Â(M)/2",
            IndexForm::ModTwoComplexDim => "dim_C H mod 2",
            IndexForm::ModTwoQuaternionDim => "dim_H H mod 2",
            IndexForm::ToddInteger => "Td(M)",
            IndexForm::Zero => "0",
        }
    }
}

impl fmt::Display for IndexForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexType {
    pub k: u32,
    pub family: Family,
    pub form: IndexForm,
}

pub fn index_type(k: i64, family: Family) -> IndexType {
    let k = reduce(k, family.period());
    let form = match (family, k) {
        (Family::Real, 0) => IndexForm::AhatInteger,
        (Family::Real, 1) => IndexForm::ModTwoComplexDim,
        (Family::Real, 2) => IndexForm::ModTwoQuaternionDim,
        (Family::Real, 4) => IndexForm::HalfAhat,
        (Family::Real, _) => IndexForm::Zero,
        (Family::Complex, 0) => IndexForm::ToddInteger,
        (Family::Complex, _) => IndexForm::Zero,
    };
    IndexType { k, family, form }
}

/// Entry `(s, n)` is the index type of `Cl*_{s-n}`; 8×8 for real, 2×2 for complex.
pub fn index_table(family: Family) -> Vec<Vec<IndexForm>> {
    let size = family.period();
    (0..size)
        .map(|s| {
            (0..size)
                .map(|n| {
                    let k = match family {
                        Family::Real => i64::from(star_index(s, n)),
                        Family::Complex => i64::from(s) - i64::from(n),
                    };
                    index_type(k, family).form
                })
                .collect()
        })
        .collect()
}

/// `KO^{-(s-n)}(pt)` on an 8×8 grid with rows `s` and columns `n`.
pub fn ko_grid() -> Vec<Vec<GroupTag>> {
    (0..8)
        .map(|s| (0..8).map(|n| ko_group(i64::from(star_index(s, n)))).collect())
        .collect()
}

/// The ten Cartan labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanLabel {
    A,
    AIII,
    AI,
    BDI,
    D,
    DIII,
    AII,
    CII,
    C,
    CI,
}

impl CartanLabel {
    pub const ALL: [CartanLabel; 10] = [
        CartanLabel::A,
        CartanLabel::AIII,
        CartanLabel::AI,
        CartanLabel::BDI,
        CartanLabel::D,
        CartanLabel::DIII,
        CartanLabel::AII,
        CartanLabel::CII,
        CartanLabel::C,
        CartanLabel::CI,
    ];

    /// Real labels in order of the space index `R_0 .. R_7`.
    pub const REAL: [CartanLabel; 8] = [
        CartanLabel::AI,
        CartanLabel::BDI,
        CartanLabel::D,
        CartanLabel::DIII,
        CartanLabel::AII,
        CartanLabel::CII,
        CartanLabel::C,
        CartanLabel::CI,
    ];

    pub const COMPLEX: [CartanLabel; 2] = [CartanLabel::A, CartanLabel::AIII];

    pub fn as_str(self) -> &'static str {
        match self {
            CartanLabel::A => "A",
            CartanLabel::AIII => "AIII",
            CartanLabel::AI => "AI",
            CartanLabel::BDI => "BDI",
            CartanLabel::D => "D",
            CartanLabel::DIII => "DIII",
            CartanLabel::AII => "AII",
            CartanLabel::CII => "CII",
            CartanLabel::C => "C",
            CartanLabel::CI => "CI",
        }
    }

    pub fn family(self) -> Family {
        match self {
            CartanLabel::A | CartanLabel::AIII => Family::Complex,
            _ => Family::Real,
        }
    }

    /// Index `s` of the symmetric space `R_s` or `C_s`.
    pub fn space_index(self) -> u32 {
        let list: &[CartanLabel] = match self.family() {
            Family::Real => &Self::REAL,
            Family::Complex => &Self::COMPLEX,
        };
        list.iter().position(|&l| l == self).expect("label is listed") as u32
    }
}

impl fmt::Display for CartanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TenfoldError {
    #[error("unknown Cartan label {0:?}")]
    UnknownLabel(String),
}

impl FromStr for CartanLabel {
    type Err = TenfoldError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CartanLabel::ALL
            .iter()
            .copied()
            .find(|l| l.as_str() == s.trim())
            .ok_or_else(|| TenfoldError::UnknownLabel(s.to_string()))
    }
}

impl Serialize for CartanLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for CartanLabel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Symmetry signature: `T² ∈ {0, ±1}`, `C² ∈ {0, ±1}`, chiral `S ∈ {0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AZClass {
    pub label: CartanLabel,
    #[serde(rename = "T")]
    pub t: i8,
    #[serde(rename = "C")]
    pub c: i8,
    #[serde(rename = "S")]
    pub s: u8,
}

pub fn az_signature(label: CartanLabel) -> AZClass {
    use CartanLabel::*;
    let (t, c, s) = match label {
        A => (0, 0, 0),
        AIII => (0, 0, 1),
        AI => (1, 0, 0),
        BDI => (1, 1, 1),
        D => (0, 1, 0),
        DIII => (-1, 1, 1),
        AII => (-1, 0, 0),
        CII => (-1, -1, 1),
        C => (0, -1, 0),
        CI => (1, -1, 1),
    };
    AZClass { label, t, c, s }
}

/// Parses a label and returns its signature.
pub fn az_signature_named(label: &str) -> Result<AZClass, TenfoldError> {
    label.parse().map(az_signature)
}

/// Label with the given `(T², C², S)` pattern, if any.
pub fn az_class_from_signature(t: i8, c: i8, s: u8) -> Option<CartanLabel> {
    CartanLabel::ALL.iter().copied().find(|&l| {
        let sig = az_signature(l);
        (sig.t, sig.c, sig.s) == (t, c, s)
    })
}

/// Clifford extension problem attached to a symmetric space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Extension {
    Real { from: CliffordSignature, to: CliffordSignature },
    Complex { from: u32, to: u32 },
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extension::Real { from, to } => write!(f, "{from} -> {to}"),
            Extension::Complex { from, to } => write!(f, "ℂl({from}) -> ℂl({to})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SymmetricSpace {
    pub family: Family,
    pub index: u32,
    pub coset: &'static str,
    pub pi0: GroupTag,
    pub cartan_label: CartanLabel,
    pub extension: Extension,
}

/// Coset, `π₀`, and the `(p, q)` pair of the extension `from -> to`.
type SpaceRow = (&'static str, GroupTag, (u32, u32), (u32, u32));

const REAL_SPACES: [SpaceRow; 8] = [
    ("O(2n)/O(n)×O(n)", GroupTag::Z, (0, 2), (1, 2)),
    ("O(n)×O(n)/O(n)", GroupTag::Z2, (1, 2), (1, 3)),
    ("O(2n)/U(n)", GroupTag::Z2, (0, 2), (0, 3)),
    ("U(2n)/Sp(n)", GroupTag::Zero, (0, 3), (0, 4)),
    ("Sp(2n)/Sp(n)×Sp(n)", GroupTag::Z, (2, 0), (3, 0)),
    ("Sp(n)×Sp(n)/Sp(n)", GroupTag::Zero, (3, 0), (3, 1)),
    ("Sp(n)/U(n)", GroupTag::Zero, (2, 0), (2, 1)),
    ("U(n)/O(n)", GroupTag::Zero, (2, 1), (2, 2)),
];

const COMPLEX_SPACES: [(&str, GroupTag, (u32, u32)); 2] = [
    ("U(2n)/U(n)×U(n)", GroupTag::Z, (0, 1)),
    ("U(n)×U(n)/U(n)", GroupTag::Zero, (1, 2)),
];

/// `R_k` (k mod 8) or `C_k` (k mod 2).
pub fn symmetric_space(k: i64, family: Family) -> SymmetricSpace {
    let index = reduce(k, family.period());
    match family {
        Family::Real => {
            let (coset, pi0, from, to) = REAL_SPACES[index as usize];
            SymmetricSpace {
                family,
                index,
                coset,
                pi0,
                cartan_label: CartanLabel::REAL[index as usize],
                extension: Extension::Real {
                    from: CliffordSignature::new(from.0, from.1),
                    to: CliffordSignature::new(to.0, to.1),
                },
            }
        }
        Family::Complex => {
            let (coset, pi0, (from, to)) = COMPLEX_SPACES[index as usize];
            SymmetricSpace {
                family,
                index,
                coset,
                pi0,
                cartan_label: CartanLabel::COMPLEX[index as usize],
                extension: Extension::Complex { from, to },
            }
        }
    }
}

/// One row of the periodic table: a symmetry class and its groups for `d = 0..7`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicRow {
    pub label: CartanLabel,
    #[serde(rename = "T")]
    pub t: i8,
    #[serde(rename = "C")]
    pub c: i8,
    #[serde(rename = "S")]
    pub s: u8,
    pub groups: Vec<GroupTag>,
}

impl PeriodicRow {
    pub fn class(&self) -> AZClass {
        AZClass { label: self.label, t: self.t, c: self.c, s: self.s }
    }
}

/// Complex rows `A`, `AIII` first, then the eight real rows `AI .. CI`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicTable {
    pub rows: Vec<PeriodicRow>,
}

impl PeriodicTable {
    pub fn row(&self, label: CartanLabel) -> Option<&PeriodicRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    /// Group for `label` in spatial dimension `d` (mod 8).
    pub fn entry(&self, label: CartanLabel, d: i64) -> Option<GroupTag> {
        self.row(label).map(|r| r.groups[reduce(d, 8) as usize])
    }
}

/// Cell for class `label` in dimension `d`: `KO^{-(s-d)}` or `K^{-(s-d)}`.
pub fn table_entry(label: CartanLabel, d: i64) -> GroupTag {
    let s = i64::from(label.space_index());
    point_group(s - d, label.family())
}

pub fn periodic_table() -> PeriodicTable {
    let rows = CartanLabel::COMPLEX
        .iter()
        .chain(CartanLabel::REAL.iter())
        .map(|&label| {
            let class = az_signature(label);
            PeriodicRow {
                label,
                t: class.t,
                c: class.c,
                s: class.s,
                groups: (0..8).map(|d| table_entry(label, d)).collect(),
            }
        })
        .collect();
    PeriodicTable { rows }
}

/// The same table assembled from `π₀` of the symmetric spaces instead of the
/// KO/K groups, using the relabelling `π₀(R_{s-d})`.
pub fn periodic_table_from_homotopy() -> PeriodicTable {
    let rows = CartanLabel::COMPLEX
        .iter()
        .chain(CartanLabel::REAL.iter())
        .map(|&label| {
            let class = az_signature(label);
            let s = i64::from(label.space_index());
            PeriodicRow {
                label,
                t: class.t,
                c: class.c,
                s: class.s,
                groups: (0..8).map(|d| symmetric_space(s - d, label.family()).pi0).collect(),
            }
        })
        .collect();
    PeriodicTable { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ko_and_k_examples() {
        assert_eq!(ko_group(1), GroupTag::Z2);
        assert_eq!(ko_group(4), GroupTag::Z);
        assert_eq!(ko_group(8), GroupTag::Z);
        assert_eq!(ko_group(-1), GroupTag::Zero);
        assert_eq!(k_group(0), GroupTag::Z);
        assert_eq!(k_group(1), GroupTag::Zero);
        assert_eq!(k_group(7), GroupTag::Zero);
    }

    #[test]
    fn index_type_examples() {
        assert_eq!(index_type(4, Family::Real).form, IndexForm::HalfAhat);
        assert_eq!(index_type(3, Family::Real).form, IndexForm::Zero);
        assert_eq!(index_type(0, Family::Complex).form, IndexForm::ToddInteger);
    }

    #[test]
    fn index_table_examples() {
        let real = index_table(Family::Real);
        assert_eq!(real[0][0], IndexForm::AhatInteger);
        assert_eq!(real[0][6], IndexForm::ModTwoQuaternionDim);
        let complex = index_table(Family::Complex);
        assert_eq!(complex[1][0], IndexForm::Zero);
    }

    #[test]
    fn index_value_group_matches_point_groups() {
        for k in 0..8 {
            assert_eq!(index_type(k, Family::Real).form.value_group(), ko_group(k));
        }
        for k in 0..2 {
            assert_eq!(index_type(k, Family::Complex).form.value_group(), k_group(k));
        }
    }

    #[test]
    fn symmetric_space_examples() {
        let r0 = symmetric_space(0, Family::Real);
        assert_eq!((r0.coset, r0.pi0, r0.cartan_label), ("O(2n)/O(n)×O(n)", GroupTag::Z, CartanLabel::AI));
        let r5 = symmetric_space(5, Family::Real);
        assert_eq!((r5.coset, r5.pi0, r5.cartan_label), ("Sp(n)×Sp(n)/Sp(n)", GroupTag::Zero, CartanLabel::CII));
        let c1 = symmetric_space(1, Family::Complex);
        assert_eq!((c1.coset, c1.pi0, c1.cartan_label), ("U(n)×U(n)/U(n)", GroupTag::Zero, CartanLabel::AIII));
    }

    #[test]
    fn pi0_matches_ko() {
        for k in 0..8 {
            assert_eq!(symmetric_space(k, Family::Real).pi0, ko_group(k));
        }
        for k in 0..2 {
            assert_eq!(symmetric_space(k, Family::Complex).pi0, k_group(k));
        }
    }

    #[test]
    fn az_examples() {
        let s = az_signature(CartanLabel::AII);
        assert_eq!((s.t, s.c, s.s), (-1, 0, 0));
        let s = az_signature(CartanLabel::A);
        assert_eq!((s.t, s.c, s.s), (0, 0, 0));
        let s = az_signature_named("CI").unwrap();
        assert_eq!((s.t, s.c, s.s), (1, -1, 1));
        assert!(matches!(az_signature_named("BD"), Err(TenfoldError::UnknownLabel(_))));
    }

    #[test]
    fn chiral_iff_both_or_aiii() {
        for label in CartanLabel::ALL {
            let s = az_signature(label);
            let expected = (s.t != 0 && s.c != 0) || label == CartanLabel::AIII;
            assert_eq!(s.s == 1, expected, "{label}");
        }
    }

    #[test]
    fn periodic_table_examples() {
        let table = periodic_table();
        assert_eq!(table.rows.len(), 10);
        assert_eq!(table.entry(CartanLabel::D, 2), Some(GroupTag::Z));
        assert_eq!(table.entry(CartanLabel::AII, 2), Some(GroupTag::Z2));
        assert_eq!(table.entry(CartanLabel::A, 5), Some(GroupTag::Zero));
        assert!(table.rows.iter().all(|r| !r.groups.contains(&GroupTag::ZplusZ)));
    }

    #[test]
    fn bott_shift() {
        let table = periodic_table();
        let real = &table.rows[2..];
        for pair in real.windows(2) {
            for d in 0..8 {
                assert_eq!(pair[1].groups[(d + 1) % 8], pair[0].groups[d]);
            }
        }
    }

    #[test]
    fn homotopy_relabelling_gives_same_grid() {
        assert_eq!(periodic_table(), periodic_table_from_homotopy());
    }

    #[test]
    fn group_tag_round_trip() {
        for tag in [GroupTag::Zero, GroupTag::Z, GroupTag::Z2, GroupTag::ZplusZ] {
            assert_eq!(tag.to_string().parse::<GroupTag>().unwrap(), tag);
        }
        assert_eq!("Z₂".parse::<GroupTag>().unwrap(), GroupTag::Z2);
    }
}
