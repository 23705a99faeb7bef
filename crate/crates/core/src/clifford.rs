//! Structure theorem for real and complex Clifford algebras.
//!
//! `Cl_{p,q}` is generated by `p` generators squaring to `-1` followed by `q`
//! generators squaring to `+1`. Every such algebra is a matrix algebra over
//! one of the division rings `R`, `C`, `H`, or a direct sum of two copies of
//! one. The classification is computed twice: once from the closed-form rule
//! on `(q - p) mod 8` and once by recursive reduction through the tensor
//! product isomorphisms and eight-fold periodicity. The two must agree.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Real associative division algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DivisionRing {
    R,
    C,
    H,
}

impl DivisionRing {
    /// Dimension as a real vector space.
    pub fn real_dim(self) -> u32 {
        match self {
            DivisionRing::R => 1,
            DivisionRing::C => 2,
            DivisionRing::H => 4,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            DivisionRing::R => 'R',
            DivisionRing::C => 'C',
            DivisionRing::H => 'H',
        }
    }
}

/// Signature `(p, q)`: `p` generators with `e² = -1`, `q` with `e² = +1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CliffordSignature {
    pub p: u32,
    pub q: u32,
}

impl CliffordSignature {
    pub const fn new(p: u32, q: u32) -> Self {
        Self { p, q }
    }

    /// `Cl_n = Cl_{n,0}`, only negative generators.
    pub const fn negative(n: u32) -> Self {
        Self { p: n, q: 0 }
    }

    /// `Cl*_n = Cl_{0,n}`, only positive generators.
    pub const fn positive(n: u32) -> Self {
        Self { p: 0, q: n }
    }

    pub fn generators(self) -> u32 {
        self.p + self.q
    }

    /// Dimension of the algebra as a real vector space, `2^(p+q)`.
    pub fn algebra_dim(self) -> u128 {
        1u128 << self.generators()
    }

    /// `(q - p) mod 8`, the residue that fixes the algebra type.
    pub fn residue(self) -> u32 {
        (i64::from(self.q) - i64::from(self.p)).rem_euclid(8) as u32
    }
}

impl fmt::Display for CliffordSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// Index of the complex Clifford algebra `ℂl_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComplexCliffordIndex {
    pub n: u32,
}

/// A matrix algebra `K(m)` or `K(m) ⊕ K(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatrixAlgebra {
    pub ring: DivisionRing,
    pub block: u64,
    pub summands: u8,
}

impl MatrixAlgebra {
    pub const fn new(ring: DivisionRing, block: u64, summands: u8) -> Self {
        Self { ring, block, summands }
    }

    pub const fn simple(ring: DivisionRing, block: u64) -> Self {
        Self::new(ring, block, 1)
    }

    /// `summands · block² · dim_R(ring)`.
    pub fn real_dim(&self) -> u128 {
        let b = u128::from(self.block);
        u128::from(self.summands) * b * b * u128::from(self.ring.real_dim())
    }

    /// Real dimension of one irreducible module, `block · dim_R(ring)`.
    pub fn irrep_real_dim(&self) -> u64 {
        self.block * u64::from(self.ring.real_dim())
    }

    /// Real size of the smallest faithful module (both irreducibles when
    /// the algebra is not simple).
    pub fn faithful_real_dim(&self) -> u64 {
        self.irrep_real_dim() * u64::from(self.summands)
    }

    pub fn is_simple(&self) -> bool {
        self.summands == 1
    }

    /// Tensor product over `R`, using `C⊗C = C⊕C`, `C⊗H = C(2)`,
    /// `H⊗H = R(4)` and `R⊗K = K`.
    pub fn tensor(&self, other: &MatrixAlgebra) -> MatrixAlgebra {
        use DivisionRing::*;
        let (ring, block, summands) = match (self.ring, other.ring) {
            (R, k) | (k, R) => (k, 1, 1),
            (C, C) => (C, 1, 2),
            (C, H) | (H, C) => (C, 2, 1),
            (H, H) => (R, 4, 1),
        };
        MatrixAlgebra {
            ring,
            block: self.block * other.block * block,
            summands: self.summands * other.summands * summands,
        }
    }

    /// Same ring and number of summands; block sizes may differ.
    pub fn same_type(&self, other: &MatrixAlgebra) -> bool {
        self.ring == other.ring && self.summands == other.summands
    }
}

impl fmt::Display for MatrixAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.summands {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}", self.ring.symbol())?;
            if self.block != 1 {
                write!(f, "({})", self.block)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse matrix algebra from {0:?}")]
pub struct ParseAlgebraError(pub String);

impl FromStr for MatrixAlgebra {
    type Err = ParseAlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseAlgebraError(s.to_string());
        let parse_one = |part: &str| -> Result<(DivisionRing, u64), ParseAlgebraError> {
            let part = part.trim();
            let mut chars = part.chars();
            let ring = match chars.next() {
                Some('R') => DivisionRing::R,
                Some('C') => DivisionRing::C,
                Some('H') => DivisionRing::H,
                _ => return Err(err()),
            };
            let rest = chars.as_str();
            if rest.is_empty() {
                return Ok((ring, 1));
            }
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(err)?;
            let block: u64 = inner.parse().map_err(|_| err())?;
            if block == 0 {
                return Err(err());
            }
            Ok((ring, block))
        };
        let parts: Vec<_> = s.split('+').collect();
        match parts.as_slice() {
            [one] => {
                let (ring, block) = parse_one(one)?;
                Ok(MatrixAlgebra::new(ring, block, 1))
            }
            [a, b] => {
                let first = parse_one(a)?;
                if first != parse_one(b)? {
                    return Err(err());
                }
                Ok(MatrixAlgebra::new(first.0, first.1, 2))
            }
            _ => Err(err()),
        }
    }
}

impl Serialize for MatrixAlgebra {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MatrixAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn pow2(e: u32) -> u64 {
    1u64 << e
}

/// Closed-form classification from the `(q - p) mod 8` rule.
pub fn classify_real(sig: CliffordSignature) -> MatrixAlgebra {
    use DivisionRing::*;
    let n = sig.generators();
    match sig.residue() {
        0 | 2 => MatrixAlgebra::new(R, pow2(n / 2), 1),
        3 | 7 => MatrixAlgebra::new(C, pow2((n - 1) / 2), 1),
        4 | 6 => MatrixAlgebra::new(H, pow2((n - 2) / 2), 1),
        1 => MatrixAlgebra::new(R, pow2((n - 1) / 2), 2),
        5 => MatrixAlgebra::new(H, pow2((n - 3) / 2), 2),
        _ => unreachable!("residue is reduced mod 8"),
    }
}

/// The five low-dimensional algebras everything else is built from, plus `Cl_{0,0} = R`.
fn base_case(p: u32, q: u32) -> Option<MatrixAlgebra> {
    use DivisionRing::*;
    match (p, q) {
        (0, 0) => Some(MatrixAlgebra::simple(R, 1)),
        (1, 0) => Some(MatrixAlgebra::simple(C, 1)),
        (0, 1) => Some(MatrixAlgebra::new(R, 1, 2)),
        (1, 1) => Some(MatrixAlgebra::simple(R, 2)),
        (2, 0) => Some(MatrixAlgebra::simple(H, 1)),
        (0, 2) => Some(MatrixAlgebra::simple(R, 2)),
        _ => None,
    }
}

fn reduce_small(p: u32, q: u32) -> MatrixAlgebra {
    if p <= 1 && q <= 1 && !(p == 1 && q == 1) {
        return base_case(p, q).expect("(0,0), (1,0), (0,1) are base cases");
    }
    if p >= 1 && q >= 1 {
        // Cl_{p+1,q+1} = Cl_{p,q} ⊗ Cl_{1,1}
        return reduce_small(p - 1, q - 1).tensor(&base_case(1, 1).unwrap());
    }
    if q == 0 {
        // Cl_{p+2,q} = Cl_{q,p} ⊗ Cl_{2,0}, here with q = 0
        reduce_small(0, p - 2).tensor(&base_case(2, 0).unwrap())
    } else {
        // Cl_{p,q+2} = Cl_{q,p} ⊗ Cl_{0,2}, here with p = 0
        reduce_small(q - 2, 0).tensor(&base_case(0, 2).unwrap())
    }
}

/// Classification computed purely by recursive reduction: eight-fold
/// periodicity first, then the tensor product isomorphisms down to a base case.
pub fn classify_real_recursive(sig: CliffordSignature) -> MatrixAlgebra {
    let (mut p, mut q) = (sig.p, sig.q);
    let mut acc = MatrixAlgebra::simple(DivisionRing::R, 1);
    if p >= 8 {
        let factor = reduce_small(8, 0);
        while p >= 8 {
            acc = acc.tensor(&factor);
            p -= 8;
        }
    }
    if q >= 8 {
        let factor = reduce_small(0, 8);
        while q >= 8 {
            acc = acc.tensor(&factor);
            q -= 8;
        }
    }
    reduce_small(p, q).tensor(&acc)
}

/// `ℂl_n`: `C(2^{n/2})` for even `n`, two copies of `C(2^{(n-1)/2})` for odd `n`.
pub fn classify_complex(idx: ComplexCliffordIndex) -> MatrixAlgebra {
    MatrixAlgebra::new(DivisionRing::C, pow2(idx.n / 2), if idx.n % 2 == 1 { 2 } else { 1 })
}

/// Table with rows indexed by the positive count `s` and columns by the
/// negative count `n`; entry `(s, n)` is `Cl_{n,s}`.
pub fn chessboard(rows: u32, cols: u32) -> Vec<Vec<MatrixAlgebra>> {
    (0..rows)
        .map(|s| (0..cols).map(|n| classify_real(CliffordSignature::new(n, s))).collect())
        .collect()
}

/// `k` such that `Cl_{n,s} ≅ Cl*_k` up to eight-fold periodicity, i.e. `(s - n) mod 8`.
pub fn star_index(s: u32, n: u32) -> u32 {
    (i64::from(s) - i64::from(n)).rem_euclid(8) as u32
}

/// Which algebra isomorphism an entry of an [`IsomorphismReport`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IsomorphismRule {
    /// `Cl_{p,q} ≅ Cl_{p-4,q+4}`
    ShiftByFour,
    /// `Cl_{p,q+1} ≅ Cl_{q,p+1}`
    SwapPlusOne,
    /// `Cl_{p,q+2} ≅ Cl_{q,p} ⊗ Cl_{0,2}`
    TensorPositivePair,
    /// `Cl_{p+2,q} ≅ Cl_{q,p} ⊗ Cl_{2,0}`
    TensorNegativePair,
    /// `Cl_{p+1,q+1} ≅ Cl_{p,q} ⊗ Cl_{1,1}`
    TensorHyperbolic,
    /// `Cl_{p+8,q} ≅ Cl_{p,q} ⊗ Cl_{8,0}`
    PeriodNegative,
    /// `Cl_{p,q+8} ≅ Cl_{p,q} ⊗ Cl_{0,8}`
    PeriodPositive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismViolation {
    pub rule: IsomorphismRule,
    pub base: CliffordSignature,
    pub lhs: MatrixAlgebra,
    pub rhs: MatrixAlgebra,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct IsomorphismReport {
    pub checked: usize,
    pub violations: Vec<IsomorphismViolation>,
}

impl IsomorphismReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sweep `0 <= p, q <= limit` and check the algebra isomorphisms against
/// `classify_real`. Violations are reported, never raised.
pub fn verify_isomorphisms(limit: u32) -> IsomorphismReport {
    let cl = |p: u32, q: u32| classify_real(CliffordSignature::new(p, q));
    let mut report = IsomorphismReport::default();
    let mut check = |rule, base, lhs: MatrixAlgebra, rhs: MatrixAlgebra| {
        report.checked += 1;
        if lhs != rhs {
            report.violations.push(IsomorphismViolation { rule, base, lhs, rhs });
        }
    };
    let cl02 = cl(0, 2);
    let cl20 = cl(2, 0);
    let cl11 = cl(1, 1);
    let cl80 = cl(8, 0);
    let cl08 = cl(0, 8);
    for p in 0..=limit {
        for q in 0..=limit {
            let base = CliffordSignature::new(p, q);
            if p >= 4 {
                check(IsomorphismRule::ShiftByFour, base, cl(p, q), cl(p - 4, q + 4));
            }
            check(IsomorphismRule::SwapPlusOne, base, cl(p, q + 1), cl(q, p + 1));
            check(IsomorphismRule::TensorPositivePair, base, cl(p, q + 2), cl(q, p).tensor(&cl02));
            check(IsomorphismRule::TensorNegativePair, base, cl(p + 2, q), cl(q, p).tensor(&cl20));
            check(IsomorphismRule::TensorHyperbolic, base, cl(p + 1, q + 1), cl(p, q).tensor(&cl11));
            check(IsomorphismRule::PeriodNegative, base, cl(p + 8, q), cl(p, q).tensor(&cl80));
            check(IsomorphismRule::PeriodPositive, base, cl(p, q + 8), cl(p, q).tensor(&cl08));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use DivisionRing::*;

    fn sig(p: u32, q: u32) -> CliffordSignature {
        CliffordSignature::new(p, q)
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(classify_real(sig(0, 0)), MatrixAlgebra::new(R, 1, 1));
        assert_eq!(classify_real(sig(2, 0)), MatrixAlgebra::new(H, 1, 1));
        assert_eq!(classify_real(sig(0, 3)), MatrixAlgebra::new(C, 2, 1));
    }

    #[test]
    fn recursive_examples() {
        assert_eq!(classify_real_recursive(sig(1, 1)), MatrixAlgebra::new(R, 2, 1));
        assert_eq!(classify_real_recursive(sig(9, 0)), MatrixAlgebra::new(C, 16, 1));
        assert_eq!(classify_real_recursive(sig(9, 0)), classify_real(sig(9, 0)));
        assert_eq!(classify_real_recursive(sig(0, 8)), MatrixAlgebra::new(R, 16, 1));
    }

    #[test]
    fn complex_examples() {
        let c = |n| classify_complex(ComplexCliffordIndex { n });
        assert_eq!(c(0), MatrixAlgebra::new(C, 1, 1));
        assert_eq!(c(1), MatrixAlgebra::new(C, 1, 2));
        assert_eq!(c(4), MatrixAlgebra::new(C, 4, 1));
    }

    #[test]
    fn chessboard_examples() {
        let board = chessboard(8, 8);
        assert_eq!(board[0][3], MatrixAlgebra::new(H, 1, 2));
        assert_eq!(board[7][7], MatrixAlgebra::new(R, 128, 1));
        assert_eq!(board[1][0], MatrixAlgebra::new(R, 1, 2));
    }

    #[test]
    fn star_index_examples() {
        assert_eq!(star_index(0, 1), 7);
        assert_eq!(star_index(3, 3), 0);
        assert_eq!(star_index(2, 5), 5);
    }

    #[test]
    fn star_index_matches_up_to_periodicity() {
        for s in 0..12 {
            for n in 0..12 {
                let a = classify_real(sig(n, s));
                let b = classify_real(CliffordSignature::positive(star_index(s, n)));
                assert!(a.same_type(&b), "s={s} n={n}");
                // blocks differ by powers of two: periodicity steps scale by 16,
                // trading (1,1) pairs scales by 2
                assert!(a.block.is_power_of_two() && b.block.is_power_of_two());
            }
        }
    }

    #[test]
    fn shift_by_four_example() {
        assert_eq!(classify_real(sig(4, 0)), classify_real(sig(0, 4)));
        assert_eq!(classify_real(sig(0, 4)), MatrixAlgebra::new(H, 2, 1));
        assert_eq!(classify_real(sig(0, 1)), classify_real(sig(0, 1)));
    }

    #[test]
    fn isomorphism_sweep_is_clean() {
        let report = verify_isomorphisms(12);
        assert!(report.is_clean(), "{:?}", report.violations);
        assert!(report.checked > 13 * 13 * 6);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(MatrixAlgebra::new(H, 2, 2).to_string(), "H(2)+H(2)");
        assert_eq!(MatrixAlgebra::new(R, 1, 1).to_string(), "R");
        assert_eq!("R(8)+R(8)".parse::<MatrixAlgebra>().unwrap(), MatrixAlgebra::new(R, 8, 2));
        assert!("R(8)+C(8)".parse::<MatrixAlgebra>().is_err());
        assert!("Q".parse::<MatrixAlgebra>().is_err());
        assert!("R(0)".parse::<MatrixAlgebra>().is_err());
    }

    #[test]
    fn tensor_table() {
        let r = |b| MatrixAlgebra::simple(R, b);
        assert_eq!(MatrixAlgebra::simple(C, 1).tensor(&MatrixAlgebra::simple(C, 1)), MatrixAlgebra::new(C, 1, 2));
        assert_eq!(MatrixAlgebra::simple(C, 1).tensor(&MatrixAlgebra::simple(H, 1)), MatrixAlgebra::simple(C, 2));
        assert_eq!(MatrixAlgebra::simple(H, 2).tensor(&MatrixAlgebra::simple(H, 3)), r(24));
        assert_eq!(r(2).tensor(&MatrixAlgebra::new(H, 2, 2)), MatrixAlgebra::new(H, 4, 2));
    }
}
