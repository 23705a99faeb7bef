//! Explicit real matrix representations of `Cl_{p,q}`.
//!
//! Generators are built as signed permutation matrices, so the Clifford
//! relations can be checked in exact integer arithmetic. The commutant of a
//! representation identifies the division ring empirically, and the
//! Grothendieck records of `Cl_k` feed the restriction quotients that line up
//! with the KO-groups of a point.
//!
//! Index convention for the quotients: the group attached to `k` is
//! `M̂_k / i* M̂_{k+1} ≅ M_{k-1} / i* M_k`, so it is decided by the records of
//! `Cl_{k-1}` and `Cl_k`.

use std::collections::HashMap;
use std::fmt;

use nalgebra::DMatrix;
use serde::Serialize;
use thiserror::Error;

use crate::clifford::{classify_complex, classify_real, CliffordSignature, ComplexCliffordIndex};
use crate::tenfold::GroupTag;

/// Largest `p + q` for which representations are built.
pub const MAX_GENERATORS: u32 = 12;

/// Singular values below this count as zero when sizing a nullspace.
pub const RANK_THRESHOLD: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RepError {
    #[error("representation of {sig} exceeds the size guard p + q <= {MAX_GENERATORS}")]
    SizeGuardExceeded { sig: CliffordSignature },
    #[error("singular value {value:e} is too close to the rank threshold")]
    RankAmbiguous { value: f64 },
    #[error("restriction to an eigenspace of the volume element is not monomial")]
    NonMonomialSplit,
}

/// Dense square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            m.data[i * n..(i + 1) * n].copy_from_slice(row);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        IntMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> IntMatrix {
        IntMatrix { n: self.n, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let (a, b) = (self.n, other.n);
        let n = a * b;
        let mut out = IntMatrix::zeros(n);
        for i in 0..a {
            for j in 0..a {
                let x = self.data[i * a + j];
                if x == 0 {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        out.data[(i * b + k) * n + j * b + l] = x * other.data[k * b + l];
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n + other.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                out[(self.n + i, self.n + j)] = other[(i, j)];
            }
        }
        out
    }

    pub fn is_identity_multiple(&self, c: i64) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self[(i, j)] == if i == j { c } else { 0 }))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// If this is a signed permutation matrix, returns `(π, s)` with
    /// `M e_j = s[j] e_{π[j]}`.
    pub fn as_signed_permutation(&self) -> Option<(Vec<usize>, Vec<i64>)> {
        let n = self.n;
        let mut perm = vec![usize::MAX; n];
        let mut sign = vec![0; n];
        let mut seen_row = vec![false; n];
        for j in 0..n {
            for i in 0..n {
                let x = self[(i, j)];
                if x == 0 {
                    continue;
                }
                if (x != 1 && x != -1) || perm[j] != usize::MAX || seen_row[i] {
                    return None;
                }
                perm[j] = i;
                sign[j] = x;
                seen_row[i] = true;
            }
            if perm[j] == usize::MAX {
                return None;
            }
        }
        Some((perm, sign))
    }

    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self[(i, j)] as f64)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<_> = (0..self.n).map(|j| format!("{:2}", self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Generators of a real representation of `Cl_{p,q}`: the first `p`
/// matrices square to `-1`, the remaining `q` to `+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub signature: CliffordSignature,
    pub matrices: Vec<IntMatrix>,
    pub dimension: usize,
}

impl GeneratorSet {
    pub fn new(signature: CliffordSignature, matrices: Vec<IntMatrix>, dimension: usize) -> Self {
        debug_assert_eq!(matrices.len() as u32, signature.generators());
        Self { signature, matrices, dimension }
    }

    /// Product of all generators in order, `ω = e_1 e_2 ... e_n`.
    pub fn volume_element(&self) -> IntMatrix {
        self.matrices
            .iter()
            .fold(IntMatrix::identity(self.dimension), |acc, g| acc.mul(g))
    }
}

fn j2() -> IntMatrix {
    IntMatrix::from_rows(&[&[0, -1], &[1, 0]])
}
fn x2() -> IntMatrix {
    IntMatrix::from_rows(&[&[0, 1], &[1, 0]])
}
fn z2() -> IntMatrix {
    IntMatrix::from_rows(&[&[1, 0], &[0, -1]])
}

/// Left multiplication by `i` and `j` on `H = span(1, i, j, k)`.
fn quaternion_units() -> (IntMatrix, IntMatrix) {
    let li = IntMatrix::from_rows(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    let lj = IntMatrix::from_rows(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]]);
    (li, lj)
}

struct Raw {
    negative: Vec<IntMatrix>,
    positive: Vec<IntMatrix>,
    dim: usize,
}

fn build_raw(p: u32, q: u32) -> Raw {
    if p >= 1 && q >= 1 {
        // Cl_{p,q} = Cl_{p-1,q-1} ⊗ Cl_{1,1}: g -> g ⊗ (e1 e2), adjoin 1 ⊗ e1, 1 ⊗ e2
        let inner = build_raw(p - 1, q - 1);
        let id = IntMatrix::identity(inner.dim);
        let omega = j2().mul(&z2());
        let mut negative: Vec<_> = inner.negative.iter().map(|g| g.kron(&omega)).collect();
        negative.push(id.kron(&j2()));
        let mut positive: Vec<_> = inner.positive.iter().map(|g| g.kron(&omega)).collect();
        positive.push(id.kron(&z2()));
        return Raw { negative, positive, dim: inner.dim * 2 };
    }
    if q == 0 && p >= 4 {
        // Cl_{p,0} from Cl_{p-4,4}: f_i -> f_i ω with ω = f_1 f_2 f_3 f_4
        let inner = build_raw(p - 4, 4);
        let omega = inner.positive.iter().fold(IntMatrix::identity(inner.dim), |acc, f| acc.mul(f));
        let mut negative = inner.negative;
        negative.extend(inner.positive.iter().map(|f| f.mul(&omega)));
        return Raw { negative, positive: Vec::new(), dim: inner.dim };
    }
    if p == 0 && q >= 2 {
        // Cl_{0,q} = Cl_{q-2,0} ⊗ Cl_{0,2}: negatives flip sign against ω = xz
        let inner = build_raw(q - 2, 0);
        let id = IntMatrix::identity(inner.dim);
        let omega = x2().mul(&z2());
        let mut positive: Vec<_> = inner.negative.iter().map(|g| g.kron(&omega)).collect();
        positive.push(id.kron(&x2()));
        positive.push(id.kron(&z2()));
        return Raw { negative: Vec::new(), positive, dim: inner.dim * 2 };
    }
    match (p, q) {
        (0, 0) => Raw { negative: Vec::new(), positive: Vec::new(), dim: 1 },
        (1, 0) => Raw { negative: vec![j2()], positive: Vec::new(), dim: 2 },
        (2, 0) => {
            let (li, lj) = quaternion_units();
            Raw { negative: vec![li, lj], positive: Vec::new(), dim: 4 }
        }
        (3, 0) => {
            // the two inequivalent irreducibles differ by the sign of e3 = ±e1 e2
            let (li, lj) = quaternion_units();
            let lk = li.mul(&lj);
            Raw {
                negative: vec![li.block_diag(&li), lj.block_diag(&lj), lk.block_diag(&lk.scale(-1))],
                positive: Vec::new(),
                dim: 8,
            }
        }
        (0, 1) => Raw { negative: Vec::new(), positive: vec![z2()], dim: 2 },
        _ => unreachable!("all signatures reduce to a base case"),
    }
}

/// Minimal faithful representation of `Cl_{p,q}` with entries in `{-1, 0, 1}`:
/// irreducible when the algebra is simple, otherwise the direct sum of its
/// two inequivalent irreducibles.
pub fn build_generators(sig: CliffordSignature) -> Result<GeneratorSet, RepError> {
    if sig.generators() > MAX_GENERATORS {
        return Err(RepError::SizeGuardExceeded { sig });
    }
    let raw = build_raw(sig.p, sig.q);
    let mut matrices = raw.negative;
    matrices.extend(raw.positive);
    Ok(GeneratorSet::new(sig, matrices, raw.dim))
}

/// Exact check of `e_i e_j + e_j e_i = ∓2δ_ij` with the sign set by the signature.
pub fn verify_relations(gens: &GeneratorSet) -> bool {
    let n = gens.dimension;
    if gens.matrices.len() as u32 != gens.signature.generators()
        || gens.matrices.iter().any(|m| m.size() != n)
    {
        return false;
    }
    let p = gens.signature.p as usize;
    for (i, a) in gens.matrices.iter().enumerate() {
        let square = if i < p { -1 } else { 1 };
        if !a.mul(a).is_identity_multiple(square) {
            return false;
        }
        for b in &gens.matrices[i + 1..] {
            if !a.mul(b).add(&b.mul(a)).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Splits a representation along the eigenspaces of the volume element when
/// it is central and squares to one; otherwise returns the input unchanged.
pub fn irreducible_pieces(gens: &GeneratorSet) -> Result<Vec<GeneratorSet>, RepError> {
    let n = gens.dimension;
    let omega = gens.volume_element();
    let central = gens.matrices.iter().all(|g| g.mul(&omega) == omega.mul(g));
    if !central
        || !omega.mul(&omega).is_identity_multiple(1)
        || omega.is_identity_multiple(1)
        || omega.is_identity_multiple(-1)
    {
        return Ok(vec![gens.clone()]);
    }
    let (perm, sign) = omega.as_signed_permutation().ok_or(RepError::NonMonomialSplit)?;
    let mut pieces = Vec::with_capacity(2);
    for lambda in [1i64, -1] {
        // eigenvectors of ω as integer vectors: e_i (fixed points) or e_i + λ s e_j (pairs)
        let mut basis: Vec<Vec<(usize, i64)>> = Vec::new();
        for i in 0..n {
            let j = perm[i];
            if j == i {
                if sign[i] == lambda {
                    basis.push(vec![(i, 1)]);
                }
            } else if i < j {
                basis.push(vec![(i, 1), (j, lambda * sign[i])]);
            }
        }
        let dim = basis.len();
        let mut matrices = Vec::with_capacity(gens.matrices.len());
        for g in &gens.matrices {
            let mut m = IntMatrix::zeros(dim);
            for (b, vb) in basis.iter().enumerate() {
                // g v_b as a sparse vector
                let mut image: HashMap<usize, i64> = HashMap::new();
                for &(idx, c) in vb {
                    for row in 0..n {
                        let x = g[(row, idx)];
                        if x != 0 {
                            *image.entry(row).or_insert(0) += x * c;
                        }
                    }
                }
                for (a, va) in basis.iter().enumerate() {
                    let num: i64 = va.iter().map(|&(idx, c)| c * image.get(&idx).copied().unwrap_or(0)).sum();
                    if num == 0 {
                        continue;
                    }
                    let den_sq = (va.len() * vb.len()) as i64;
                    if num * num != den_sq {
                        return Err(RepError::NonMonomialSplit);
                    }
                    m[(a, b)] = num.signum();
                }
            }
            matrices.push(m);
        }
        pieces.push(GeneratorSet::new(gens.signature, matrices, dim));
    }
    Ok(pieces)
}

/// Dimension of `{X : X g = g X for every generator g}` over `R`.
///
/// Signed permutation generators are handled exactly by tracking the orbits
/// of matrix entries under `X -> g X gᵀ`; anything else goes through the
/// dense singular value route.
pub fn commutant_dimension(gens: &GeneratorSet) -> Result<usize, RepError> {
    let perms: Option<Vec<_>> = gens.matrices.iter().map(IntMatrix::as_signed_permutation).collect();
    match perms {
        Some(perms) => Ok(monomial_commutant_dimension(gens.dimension, &perms)),
        None => commutant_dimension_dense(gens),
    }
}

fn monomial_commutant_dimension(n: usize, perms: &[(Vec<usize>, Vec<i64>)]) -> usize {
    // union-find over entries (a, b) with a sign relative to the root
    let size = n * n;
    let mut parent: Vec<usize> = (0..size).collect();
    let mut parity = vec![1i64; size];
    let mut forced_zero = vec![false; size];

    fn find(parent: &mut [usize], parity: &mut [i64], x: usize) -> (usize, i64) {
        let mut root = x;
        let mut sign = 1;
        while parent[root] != root {
            sign *= parity[root];
            root = parent[root];
        }
        // path compression
        let mut cur = x;
        let mut cur_sign = sign;
        while parent[cur] != cur {
            let next = parent[cur];
            let next_sign = cur_sign * parity[cur];
            parent[cur] = root;
            parity[cur] = cur_sign;
            cur = next;
            cur_sign = next_sign;
        }
        (root, sign)
    }

    for (perm, sign) in perms {
        for a in 0..n {
            for b in 0..n {
                // X_{π(a),π(b)} = s_a s_b X_{a,b}
                let u = a * n + b;
                let v = perm[a] * n + perm[b];
                let rel = sign[a] * sign[b];
                let (ru, su) = find(&mut parent, &mut parity, u);
                let (rv, sv) = find(&mut parent, &mut parity, v);
                if ru == rv {
                    if su * sv != rel {
                        forced_zero[ru] = true;
                    }
                } else {
                    // X_v = rel X_u, X_u = su X_ru, X_v = sv X_rv  =>  X_rv = sv rel su X_ru
                    parent[rv] = ru;
                    parity[rv] = sv * rel * su;
                    forced_zero[ru] |= forced_zero[rv];
                }
            }
        }
    }
    (0..size)
        .filter(|&x| {
            let (r, _) = find(&mut parent, &mut parity, x);
            r == x && !forced_zero[x]
        })
        .count()
}

/// Commutant dimension from the singular values of the stacked commutation
/// system `(gᵀ ⊗ 1 - 1 ⊗ g) vec(X) = 0`. Intended for small representations.
pub fn commutant_dimension_dense(gens: &GeneratorSet) -> Result<usize, RepError> {
    let n = gens.dimension;
    let unknowns = n * n;
    if gens.matrices.is_empty() {
        return Ok(unknowns);
    }
    let rows = unknowns * gens.matrices.len();
    let mut system = DMatrix::<f64>::zeros(rows, unknowns);
    for (gi, g) in gens.matrices.iter().enumerate() {
        let offset = gi * unknowns;
        // row (i, j) of X g - g X, column-major vec: index = i + j n
        for i in 0..n {
            for j in 0..n {
                let row = offset + i + j * n;
                for k in 0..n {
                    // (X g)_{ij} = Σ_k X_{ik} g_{kj}
                    let gkj = g[(k, j)] as f64;
                    if gkj != 0.0 {
                        system[(row, i + k * n)] += gkj;
                    }
                    // (g X)_{ij} = Σ_k g_{ik} X_{kj}
                    let gik = g[(i, k)] as f64;
                    if gik != 0.0 {
                        system[(row, k + j * n)] -= gik;
                    }
                }
            }
        }
    }
    let singular = system.singular_values();
    let mut rank = 0;
    for &s in singular.iter() {
        if s > 1e-12 && s < 1e-8 {
            return Err(RepError::RankAmbiguous { value: s });
        }
        if s > RANK_THRESHOLD {
            rank += 1;
        }
    }
    Ok(unknowns - rank)
}

/// Grothendieck group of `Cl_k` with the size and count of its irreducibles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GrothendieckRecord {
    pub k: u32,
    pub group: GroupTag,
    pub irrep_real_dim: u64,
    pub irrep_count: u8,
}

fn record_from(k: u32, irrep_real_dim: u64, irrep_count: u8) -> GrothendieckRecord {
    let group = if irrep_count == 2 { GroupTag::ZplusZ } else { GroupTag::Z };
    GrothendieckRecord { k, group, irrep_real_dim, irrep_count }
}

/// `M_k` for the real Clifford algebra `Cl_k = Cl_{k,0}`, `k` taken mod 8.
pub fn grothendieck(k: i64) -> GrothendieckRecord {
    let k = k.rem_euclid(8) as u32;
    real_record(k)
}

fn real_record(k: u32) -> GrothendieckRecord {
    let alg = classify_real(CliffordSignature::negative(k));
    record_from(k, alg.irrep_real_dim(), alg.summands)
}

/// `M^C_k` for `ℂl_k`, `k` taken mod 2. Dimensions are real dimensions.
pub fn complex_grothendieck(k: i64) -> GrothendieckRecord {
    let k = k.rem_euclid(2) as u32;
    complex_record(k)
}

fn complex_record(k: u32) -> GrothendieckRecord {
    let alg = classify_complex(ComplexCliffordIndex { n: k });
    record_from(k, alg.irrep_real_dim(), alg.summands)
}

fn quotient_from(prev: GrothendieckRecord, cur: GrothendieckRecord) -> GroupTag {
    if prev.irrep_count == 2 {
        GroupTag::Z
    } else if cur.irrep_real_dim == 2 * prev.irrep_real_dim {
        GroupTag::Z2
    } else {
        GroupTag::Zero
    }
}

/// `M̂_k / i* M̂_{k+1}`, computed from the records of `Cl_{k-1}` and `Cl_k`.
pub fn restriction_quotient(k: i64) -> GroupTag {
    // use the unreduced pair (k-1, k) with k-1 in 0..8 so that dimensions compare honestly
    let prev = (k - 1).rem_euclid(8) as u32;
    quotient_from(real_record(prev), real_record(prev + 1))
}

/// Complex analogue of [`restriction_quotient`].
pub fn complex_restriction_quotient(k: i64) -> GroupTag {
    let prev = (k - 1).rem_euclid(2) as u32;
    quotient_from(complex_record(prev), complex_record(prev + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::DivisionRing;

    fn sig(p: u32, q: u32) -> CliffordSignature {
        CliffordSignature::new(p, q)
    }

    #[test]
    fn single_negative_generator() {
        let g = build_generators(sig(1, 0)).unwrap();
        assert_eq!(g.dimension, 2);
        assert!(g.matrices[0].mul(&g.matrices[0]).is_identity_multiple(-1));
    }

    #[test]
    fn hyperbolic_plane() {
        let g = build_generators(sig(1, 1)).unwrap();
        assert_eq!(g.dimension, 2);
        let (a, b) = (&g.matrices[0], &g.matrices[1]);
        assert!(a.mul(a).is_identity_multiple(-1));
        assert!(b.mul(b).is_identity_multiple(1));
        assert!(a.mul(b).add(&b.mul(a)).is_zero());
    }

    #[test]
    fn two_positive_generators() {
        let g = build_generators(sig(0, 2)).unwrap();
        assert_eq!(g.dimension, 2);
        let prod = g.matrices[0].mul(&g.matrices[1]);
        assert!(!prod.is_identity_multiple(1) && !prod.is_identity_multiple(-1));
        assert!(verify_relations(&g));
    }

    #[test]
    fn relations_detect_corruption() {
        let mut g = build_generators(sig(2, 0)).unwrap();
        assert!(verify_relations(&g));
        let m = &mut g.matrices[1];
        let (i, j) = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .find(|&(i, j)| m[(i, j)] != 0)
            .unwrap();
        m[(i, j)] = -m[(i, j)];
        assert!(!verify_relations(&g));
    }

    #[test]
    fn empty_generator_set_is_vacuous() {
        let g = GeneratorSet::new(sig(0, 0), vec![], 1);
        assert!(verify_relations(&g));
        assert_eq!(commutant_dimension(&g).unwrap(), 1);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(build_generators(sig(7, 6)), Err(RepError::SizeGuardExceeded { .. })));
        assert!(build_generators(sig(6, 6)).is_ok());
    }

    #[test]
    fn commutant_examples_match_brute_force_nullspace() {
        // Cl_{1,1} on R²: only scalars commute
        let g = build_generators(sig(1, 1)).unwrap();
        assert_eq!(commutant_dimension(&g).unwrap(), 1);
        assert_eq!(commutant_dimension_dense(&g).unwrap(), 1);
        // rotation by 90°: a + b J
        let g = build_generators(sig(1, 0)).unwrap();
        assert_eq!(commutant_dimension(&g).unwrap(), 2);
        assert_eq!(commutant_dimension_dense(&g).unwrap(), 2);
        // quaternion left multiplications commute with right multiplications
        let g = build_generators(sig(2, 0)).unwrap();
        assert_eq!(commutant_dimension(&g).unwrap(), 4);
        assert_eq!(commutant_dimension_dense(&g).unwrap(), 4);
    }

    #[test]
    fn semisimple_split() {
        let g = build_generators(sig(3, 0)).unwrap();
        let pieces = irreducible_pieces(&g).unwrap();
        assert_eq!(pieces.len(), 2);
        for piece in &pieces {
            assert_eq!(piece.dimension, 4);
            assert!(verify_relations(piece));
            assert_eq!(commutant_dimension(piece).unwrap(), 4);
        }
        // the direct sum of two inequivalent quaternionic irreducibles
        assert_eq!(commutant_dimension(&g).unwrap(), 8);
    }

    #[test]
    fn grothendieck_examples() {
        let r = grothendieck(3);
        assert_eq!((r.group, r.irrep_real_dim, r.irrep_count), (GroupTag::ZplusZ, 4, 2));
        let r = grothendieck(0);
        assert_eq!((r.group, r.irrep_real_dim, r.irrep_count), (GroupTag::Z, 1, 1));
        assert_eq!(grothendieck(11), grothendieck(3));
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(restriction_quotient(0), GroupTag::Z);
        assert_eq!(restriction_quotient(2), GroupTag::Z2);
        assert_eq!(restriction_quotient(5), GroupTag::Zero);
        assert_eq!(complex_restriction_quotient(0), GroupTag::Z);
        assert_eq!(complex_restriction_quotient(1), GroupTag::Zero);
        assert_eq!(complex_restriction_quotient(6), GroupTag::Z);
    }

    #[test]
    fn irrep_dims_double_exactly_at_z2() {
        for k in 0..8i64 {
            let doubled = grothendieck(k).irrep_real_dim * 2 == real_record(k.rem_euclid(8) as u32 + 1).irrep_real_dim;
            let prev_count = grothendieck(k).irrep_count;
            let q = restriction_quotient(k + 1);
            assert_eq!(q == GroupTag::Z2, doubled && prev_count == 1, "k={k}");
        }
    }

    #[test]
    fn ring_dimension_via_commutant_small() {
        for n in 0..=6u32 {
            for p in 0..=n {
                let s = sig(p, n - p);
                let gens = build_generators(s).unwrap();
                let ring = classify_real(s).ring;
                for piece in irreducible_pieces(&gens).unwrap() {
                    assert_eq!(commutant_dimension(&piece).unwrap() as u32, ring.real_dim(), "{s}");
                }
            }
        }
        assert_eq!(DivisionRing::H.real_dim(), 4);
    }
}
