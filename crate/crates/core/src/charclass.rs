//! Multiplicative sequences in Pontryagin and Chern classes with exact
//! rational coefficients: the Â-genus and the Todd class.
//!
//! A one-variable power series `Q(t) = Σ a_j t^j` determines the sequence
//! `∏_i Q(t_i)` over formal roots. Its degree-`m` part is `Σ_λ a_λ m_λ(t)`
//! over partitions `λ ⊢ m`; rewriting the monomial symmetric functions in the
//! elementary ones by exact Gaussian elimination expresses it in `p_i`
//! (`t = x²`) or `c_i` (`t = x`).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::tenfold::{index_type, Family, IndexForm};

/// Largest supported cutoff, in real cohomological degree.
pub const MAX_CUTOFF: u32 = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharClassError {
    #[error("cutoff degree {0} exceeds the supported maximum {MAX_CUTOFF}")]
    CutoffTooLarge(u32),
    #[error("series cutoff {cutoff} is below the manifold dimension {dimension}")]
    CutoffTooSmall { cutoff: u32, dimension: u32 },
    #[error("monomial {monomial} has degree {degree}, expected {dimension}")]
    DegreeMismatch { monomial: String, degree: u32, dimension: u32 },
    #[error("series is in {series} classes but the numbers are in {numbers} classes")]
    KindMismatch { series: ClassKind, numbers: ClassKind },
    #[error("predicted index {value} is not an integer")]
    NonIntegralIndex { value: String },
    #[error("no integral index prescription for {series:?} at k = {k}")]
    NoPrescription { series: SeriesId, k: i64 },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// Which characteristic classes the variables stand for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassKind {
    /// `p_i`, degree `4i`.
    Pontryagin,
    /// `c_i`, degree `2i`.
    Chern,
}

impl ClassKind {
    pub fn letter(self) -> char {
        match self {
            ClassKind::Pontryagin => 'p',
            ClassKind::Chern => 'c',
        }
    }

    /// Real degree of the first class.
    pub fn weight(self) -> u32 {
        match self {
            ClassKind::Pontryagin => 4,
            ClassKind::Chern => 2,
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        match c {
            'p' => Some(ClassKind::Pontryagin),
            'c' => Some(ClassKind::Chern),
            _ => None,
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::Pontryagin => "Pontryagin",
            ClassKind::Chern => "Chern",
        })
    }
}

/// Exponent vector: entry `i` is the power of the `(i+1)`-th class.
/// Trailing zeros are always trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// Monomial `∏ class_{λ_j}` for a partition `λ`.
    pub fn from_partition(parts: &[u32]) -> Self {
        let len = parts.iter().copied().max().unwrap_or(0) as usize;
        let mut exps = vec![0; len];
        for &p in parts {
            exps[p as usize - 1] += 1;
        }
        Monomial::from_exponents(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Weighted degree `Σ i · e_i` in units of the first class.
    pub fn weight(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum()
    }

    /// Real cohomological degree.
    pub fn degree(&self, kind: ClassKind) -> u32 {
        self.weight() * kind.weight()
    }

    pub fn render(&self, kind: ClassKind) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("{}{}", kind.letter(), i + 1)
                } else {
                    format!("{}{}^{}", kind.letter(), i + 1, e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Parses `"p1^2*p2"`, `"c1*c2"` or `"1"`. The class letter is returned
    /// unless the monomial is `1`.
    pub fn parse(s: &str) -> Result<(Option<ClassKind>, Monomial), CharClassError> {
        let err = || CharClassError::Parse(s.to_string());
        let s = s.trim();
        if s == "1" {
            return Ok((None, Monomial::one()));
        }
        let mut kind = None;
        let mut exps: Vec<u32> = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let mut chars = factor.chars();
            let letter = chars.next().and_then(ClassKind::from_letter).ok_or_else(err)?;
            if kind.is_some_and(|k| k != letter) {
                return Err(err());
            }
            kind = Some(letter);
            let rest = chars.as_str();
            let (idx, pow) = match rest.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| err())?),
                None => (rest, 1),
            };
            let idx: usize = idx.parse().map_err(|_| err())?;
            if idx == 0 || pow == 0 {
                return Err(err());
            }
            if exps.len() < idx {
                exps.resize(idx, 0);
            }
            exps[idx - 1] += pow;
        }
        Ok((kind, Monomial::from_exponents(exps)))
    }
}

/// Polynomial in `p_i` or `c_i` with exact rational coefficients, truncated
/// above `cutoff` (real degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPolynomial {
    pub kind: ClassKind,
    pub cutoff: u32,
    terms: BTreeMap<Monomial, BigRational>,
}

impl GradedPolynomial {
    pub fn zero(kind: ClassKind, cutoff: u32) -> Self {
        Self { kind, cutoff, terms: BTreeMap::new() }
    }

    pub fn one(kind: ClassKind, cutoff: u32) -> Self {
        let mut p = Self::zero(kind, cutoff);
        p.add_term(Monomial::one(), BigRational::one());
        p
    }

    /// Adds `coeff · mono`, dropping it if above the cutoff.
    pub fn add_term(&mut self, mono: Monomial, coeff: BigRational) {
        if mono.degree(self.kind) > self.cutoff || coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono.clone()).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of a monomial written as text, e.g. `"p1^2"`.
    pub fn coefficient_of(&self, mono: &str) -> Result<BigRational, CharClassError> {
        let (kind, m) = Monomial::parse(mono)?;
        if let Some(kind) = kind {
            if kind != self.kind {
                return Err(CharClassError::KindMismatch { series: self.kind, numbers: kind });
            }
        }
        Ok(self.coefficient(&m))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Terms sorted by degree, then by exponent vector descending.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then_with(|| b.0.cmp(a.0)));
        v
    }

    /// Homogeneous part of real degree `degree`.
    pub fn homogeneous(&self, degree: u32) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero(self.kind, self.cutoff);
        for (m, c) in &self.terms {
            if m.degree(self.kind) == degree {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &GradedPolynomial) -> GradedPolynomial {
        assert_eq!(self.kind, other.kind);
        let cutoff = self.cutoff.min(other.cutoff);
        let mut out = GradedPolynomial::zero(self.kind, cutoff);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let len = ma.0.len().max(mb.0.len());
                let exps = (0..len)
                    .map(|i| ma.0.get(i).copied().unwrap_or(0) + mb.0.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(Monomial::from_exponents(exps), ca * cb);
            }
        }
        out
    }

    /// Value after substituting `class_i -> values[i-1]` (missing values are zero).
    pub fn substitute(&self, values: &[BigRational]) -> BigRational {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().enumerate().fold(c.clone(), |acc, (i, &e)| {
                    let v = values.get(i).cloned().unwrap_or_else(BigRational::zero);
                    acc * num_traits::pow(v, e as usize)
                })
            })
            .sum()
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let is_one = m.0.is_empty();
            if is_one {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.render(self.kind))?;
            } else {
                write!(f, "({abs})*{}", m.render(self.kind))?;
            }
        }
        Ok(())
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// Multiplicative inverse of a power series with nonzero constant term.
pub fn invert_series(a: &[BigRational]) -> Vec<BigRational> {
    assert!(!a.is_empty() && !a[0].is_zero(), "constant term must be invertible");
    let inv0 = a[0].recip();
    let mut b: Vec<BigRational> = Vec::with_capacity(a.len());
    b.push(inv0.clone());
    for n in 1..a.len() {
        let s: BigRational = (1..=n).map(|k| &a[k] * &b[n - k]).sum();
        b.push(-(&inv0 * s));
    }
    b
}

/// `(√y/2) / sinh(√y/2)` as a series in `y`, through `y^terms-1`.
pub fn ahat_root_series(terms: usize) -> Vec<BigRational> {
    // sinh(z)/z = Σ z^{2j}/(2j+1)! with z² = y/4
    let s: Vec<_> = (0..terms as u32)
        .map(|j| ratio(BigInt::one(), factorial(2 * j + 1) * BigInt::from(4).pow(j)))
        .collect();
    invert_series(&s)
}

/// `x / (1 - e^{-x})` as a series in `x`, through `x^terms-1`.
pub fn todd_root_series(terms: usize) -> Vec<BigRational> {
    // (1 - e^{-x})/x = Σ (-1)^j x^j/(j+1)!
    let s: Vec<_> = (0..terms as u32)
        .map(|j| {
            let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            ratio(sign, factorial(j + 1))
        })
        .collect();
    invert_series(&s)
}

/// Partitions of `m` into at most `max_len` parts, each at most `max_part`,
/// as non-increasing vectors.
fn partitions(m: u32, max_part: u32, max_len: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max_part: u32, len_left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if len_left == 0 {
            return;
        }
        for part in (1..=max_part.min(rem)).rev() {
            cur.push(part);
            rec(rem - part, part, len_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Coefficient of `x^λ` in `∏_j e_{μ_j}(x)`: the number of 0-1 matrices with
/// row sums `μ` and column sums `λ`.
fn elementary_in_monomial(mu: &[u32], lambda: &[u32]) -> BigInt {
    fn rec(rows: &[u32], cols: Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), BigInt>) -> BigInt {
        let Some((&k, rest)) = rows.split_first() else {
            return if cols.iter().all(|&c| c == 0) { BigInt::one() } else { BigInt::zero() };
        };
        let key = (rows.len(), cols.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let open: Vec<usize> = (0..cols.len()).filter(|&i| cols[i] > 0).collect();
        let mut total = BigInt::zero();
        // choose k of the open columns
        let mut choose = |subset: &[usize]| {
            let mut next = cols.clone();
            for &i in subset {
                next[i] -= 1;
            }
            next.sort_unstable_by(|a, b| b.cmp(a));
            total += rec(rest, next, memo);
        };
        for_each_subset(&open, k as usize, &mut Vec::new(), 0, &mut choose);
        memo.insert(key, total.clone());
        total
    }
    fn for_each_subset(items: &[usize], k: usize, cur: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            for_each_subset(items, k, cur, i + 1, f);
            cur.pop();
        }
    }
    rec(mu, lambda.to_vec(), &mut HashMap::new())
}

/// Solves `A x = b` over the rationals; `A` must be square and invertible.
fn solve_exact(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("elementary basis is a basis");
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col][col..].iter_mut() {
            *x = &*x * &inv;
        }
        b[col] = &b[col] * &inv;
        let (pivot_row, pivot_b) = (a[col].clone(), b[col].clone());
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * p;
                }
                b[r] -= &factor * &pivot_b;
            }
        }
    }
    b
}

/// The multiplicative sequence of `Q(t) = Σ coeffs[j] t^j` with `roots`
/// formal roots, truncated at real degree `cutoff`.
pub fn multiplicative_sequence(
    kind: ClassKind,
    coeffs: &[BigRational],
    cutoff: u32,
    roots: u32,
) -> GradedPolynomial {
    let top = cutoff / kind.weight();
    let mut out = GradedPolynomial::zero(kind, cutoff);
    let coeff = |j: u32| coeffs.get(j as usize).cloned().unwrap_or_else(BigRational::zero);
    for m in 0..=top {
        if m == 0 {
            out.add_term(Monomial::one(), coeff(0));
            continue;
        }
        // monomial symmetric functions that survive with `roots` variables,
        // and the elementary products e_μ with every μ_j <= roots
        let lambdas = partitions(m, m, roots);
        let mus = partitions(m, roots, m);
        debug_assert_eq!(lambdas.len(), mus.len());
        let target: Vec<BigRational> = lambdas
            .iter()
            .map(|lam| {
                let mut value = lam.iter().fold(BigRational::one(), |acc, &j| acc * coeff(j));
                // ∏ Q(t_i) weights m_λ by a_0^{roots - len(λ)}
                for _ in lam.len() as u32..roots {
                    value *= coeff(0);
                }
                value
            })
            .collect();
        let matrix: Vec<Vec<BigRational>> = lambdas
            .iter()
            .map(|lam| {
                mus.iter()
                    .map(|mu| BigRational::from_integer(elementary_in_monomial(mu, lam)))
                    .collect()
            })
            .collect();
        let solution = solve_exact(matrix, target);
        for (mu, c) in mus.iter().zip(solution) {
            out.add_term(Monomial::from_partition(mu), c);
        }
    }
    out
}

fn check_cutoff(cutoff: u32) -> Result<(), CharClassError> {
    if cutoff > MAX_CUTOFF {
        Err(CharClassError::CutoffTooLarge(cutoff))
    } else {
        Ok(())
    }
}

/// Default number of formal roots for a given cutoff.
pub fn default_roots(kind: ClassKind, cutoff: u32) -> u32 {
    cutoff / kind.weight() + 1
}

/// `Â = ∏ (x_i/2)/sinh(x_i/2)` in Pontryagin classes.
pub fn ahat_series(cutoff_degree: u32) -> Result<GradedPolynomial, CharClassError> {
    ahat_series_with_roots(cutoff_degree, default_roots(ClassKind::Pontryagin, cutoff_degree))
}

pub fn ahat_series_with_roots(cutoff_degree: u32, roots: u32) -> Result<GradedPolynomial, CharClassError> {
    check_cutoff(cutoff_degree)?;
    let terms = (cutoff_degree / 4 + 1) as usize;
    Ok(multiplicative_sequence(ClassKind::Pontryagin, &ahat_root_series(terms), cutoff_degree, roots))
}

/// `Td = ∏ x_i/(1 - e^{-x_i})` in Chern classes.
pub fn todd_series(cutoff_degree: u32) -> Result<GradedPolynomial, CharClassError> {
    todd_series_with_roots(cutoff_degree, default_roots(ClassKind::Chern, cutoff_degree))
}

pub fn todd_series_with_roots(cutoff_degree: u32, roots: u32) -> Result<GradedPolynomial, CharClassError> {
    check_cutoff(cutoff_degree)?;
    let terms = (cutoff_degree / 2 + 1) as usize;
    Ok(multiplicative_sequence(ClassKind::Chern, &todd_root_series(terms), cutoff_degree, roots))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesId {
    Ahat,
    Todd,
}

impl SeriesId {
    pub fn kind(self) -> ClassKind {
        match self {
            SeriesId::Ahat => ClassKind::Pontryagin,
            SeriesId::Todd => ClassKind::Chern,
        }
    }

    pub fn series(self, cutoff: u32) -> Result<GradedPolynomial, CharClassError> {
        match self {
            SeriesId::Ahat => ahat_series(cutoff),
            SeriesId::Todd => todd_series(cutoff),
        }
    }
}

impl FromStr for SeriesId {
    type Err = CharClassError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ahat" | "a-hat" => Ok(SeriesId::Ahat),
            "todd" | "td" => Ok(SeriesId::Todd),
            _ => Err(CharClassError::Parse(s.to_string())),
        }
    }
}

/// Characteristic numbers of a closed manifold: values of top-degree
/// monomials integrated against the fundamental class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicNumbers {
    pub kind: ClassKind,
    pub dimension: u32,
    values: BTreeMap<Monomial, BigRational>,
}

impl CharacteristicNumbers {
    pub fn new(kind: ClassKind, dimension: u32) -> Self {
        Self { kind, dimension, values: BTreeMap::new() }
    }

    /// Sets the number for a monomial; its degree must equal the dimension.
    pub fn set(&mut self, mono: Monomial, value: BigRational) -> Result<(), CharClassError> {
        let degree = mono.degree(self.kind);
        if degree != self.dimension {
            return Err(CharClassError::DegreeMismatch {
                monomial: mono.render(self.kind),
                degree,
                dimension: self.dimension,
            });
        }
        self.values.insert(mono, value);
        Ok(())
    }

    /// Builds from text pairs such as `("p1", "-48")`; the class kind is
    /// taken from the monomials.
    pub fn from_pairs<'a>(
        dimension: u32,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, CharClassError> {
        let mut kind = None;
        let mut parsed = Vec::new();
        for (mono, value) in pairs {
            let (k, m) = Monomial::parse(mono)?;
            if let Some(k) = k {
                if kind.is_some_and(|prev| prev != k) {
                    return Err(CharClassError::Parse(mono.to_string()));
                }
                kind = Some(k);
            }
            let v: BigRational = value.trim().parse().map_err(|_| CharClassError::Parse(value.to_string()))?;
            parsed.push((m, v));
        }
        let mut nums = CharacteristicNumbers::new(kind.unwrap_or(ClassKind::Pontryagin), dimension);
        for (m, v) in parsed {
            nums.set(m, v)?;
        }
        Ok(nums)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.values.iter()
    }
}

/// Pairs the top-degree part of `series` with the characteristic numbers.
pub fn evaluate_genus(
    series: &GradedPolynomial,
    nums: &CharacteristicNumbers,
) -> Result<BigRational, CharClassError> {
    if series.kind != nums.kind && !nums.values.is_empty() {
        return Err(CharClassError::KindMismatch { series: series.kind, numbers: nums.kind });
    }
    if series.cutoff < nums.dimension {
        return Err(CharClassError::CutoffTooSmall { cutoff: series.cutoff, dimension: nums.dimension });
    }
    for mono in nums.values.keys() {
        let degree = mono.degree(nums.kind);
        if degree != nums.dimension {
            return Err(CharClassError::DegreeMismatch {
                monomial: mono.render(nums.kind),
                degree,
                dimension: nums.dimension,
            });
        }
    }
    Ok(nums.values.iter().map(|(m, v)| series.coefficient(m) * v).sum())
}

/// Integer predicted by the index theorem for a `Cl_k`-linear Dirac
/// operator (real, Â) or `ℂl_k` (complex, Td).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexValue {
    pub form: IndexForm,
    pub value: String,
}

impl IndexValue {
    pub fn as_bigint(&self) -> BigInt {
        self.value.parse().expect("stored as an integer")
    }
}

/// Applies the index prescription for `k`: `Â` at `k ≡ 0`, `Â/2` at `k ≡ 4`
/// (mod 8) and `Td` at even `k`. Other `k` have mod-2 or trivial indices that
/// characteristic numbers do not determine, and are rejected.
pub fn integrality_check(
    series_id: SeriesId,
    nums: &CharacteristicNumbers,
    k: i64,
) -> Result<IndexValue, CharClassError> {
    let family = match series_id {
        SeriesId::Ahat => Family::Real,
        SeriesId::Todd => Family::Complex,
    };
    let form = index_type(k, family).form;
    let divisor = match form {
        IndexForm::AhatInteger | IndexForm::ToddInteger => 1,
        IndexForm::HalfAhat => 2,
        _ => return Err(CharClassError::NoPrescription { series: series_id, k }),
    };
    let series = series_id.series(nums.dimension.max(series_id.kind().weight()))?;
    let genus = evaluate_genus(&series, nums)? / BigRational::from_integer(BigInt::from(divisor));
    if !genus.is_integer() {
        return Err(CharClassError::NonIntegralIndex { value: genus.to_string() });
    }
    Ok(IndexValue { form, value: genus.to_integer().to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ahat_low_degree() {
        let a = ahat_series(12).unwrap();
        assert_eq!(a.coefficient_of("1").unwrap(), q(1, 1));
        assert_eq!(a.coefficient_of("p1").unwrap(), q(-1, 24));
        assert_eq!(a.coefficient_of("p2").unwrap(), q(-1, 1440));
        assert_eq!(a.coefficient_of("p1^2").unwrap(), q(7, 5760));
    }

    #[test]
    fn todd_low_degree() {
        let t = todd_series(6).unwrap();
        assert_eq!(t.coefficient_of("1").unwrap(), q(1, 1));
        assert_eq!(t.coefficient_of("c1").unwrap(), q(1, 2));
        assert_eq!(t.coefficient_of("c1*c2").unwrap(), q(1, 24));
    }

    #[test]
    fn cutoff_guard() {
        assert_eq!(ahat_series(28), Err(CharClassError::CutoffTooLarge(28)));
        assert!(todd_series(24).is_ok());
    }

    #[test]
    fn monomial_parsing() {
        let (k, m) = Monomial::parse("p1^2*p2").unwrap();
        assert_eq!(k, Some(ClassKind::Pontryagin));
        assert_eq!(m.exponents(), &[2, 1]);
        assert_eq!(m.render(ClassKind::Pontryagin), "p1^2*p2");
        assert_eq!(m.degree(ClassKind::Pontryagin), 16);
        assert!(Monomial::parse("p1*c1").is_err());
        assert!(Monomial::parse("p0").is_err());
        assert!(Monomial::parse("x1").is_err());
    }

    #[test]
    fn series_inversion() {
        let one_minus_t = vec![q(1, 1), q(-1, 1), q(0, 1), q(0, 1)];
        assert_eq!(invert_series(&one_minus_t), vec![q(1, 1); 4]);
    }

    #[test]
    fn zero_counts_matrix() {
        // e1^2 = m_2 + 2 m_11
        assert_eq!(elementary_in_monomial(&[1, 1], &[2]), BigInt::from(1));
        assert_eq!(elementary_in_monomial(&[1, 1], &[1, 1]), BigInt::from(2));
        assert_eq!(elementary_in_monomial(&[2], &[2]), BigInt::from(0));
    }

    #[test]
    fn k3_and_cp2() {
        let k3 = CharacteristicNumbers::from_pairs(4, [("p1", "-48")]).unwrap();
        assert_eq!(evaluate_genus(&ahat_series(4).unwrap(), &k3).unwrap(), q(2, 1));
        assert_eq!(integrality_check(SeriesId::Ahat, &k3, 0).unwrap().value, "2");
        assert_eq!(integrality_check(SeriesId::Ahat, &k3, 4).unwrap().value, "1");
        let cp2 = CharacteristicNumbers::from_pairs(4, [("c1^2", "9"), ("c2", "3")]).unwrap();
        assert_eq!(evaluate_genus(&todd_series(4).unwrap(), &cp2).unwrap(), q(1, 1));
        assert_eq!(integrality_check(SeriesId::Todd, &cp2, 0).unwrap().value, "1");
    }

    #[test]
    fn zero_numbers_give_zero() {
        let zeros = CharacteristicNumbers::from_pairs(8, [("p1^2", "0"), ("p2", "0")]).unwrap();
        assert_eq!(evaluate_genus(&ahat_series(8).unwrap(), &zeros).unwrap(), q(0, 1));
    }

    #[test]
    fn degree_mismatch() {
        assert!(matches!(
            CharacteristicNumbers::from_pairs(4, [("p2", "1")]),
            Err(CharClassError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn non_integral_and_missing_prescription() {
        let odd = CharacteristicNumbers::from_pairs(4, [("p1", "-24")]).unwrap();
        assert_eq!(integrality_check(SeriesId::Ahat, &odd, 0).unwrap().value, "1");
        assert!(matches!(
            integrality_check(SeriesId::Ahat, &odd, 4),
            Err(CharClassError::NonIntegralIndex { .. })
        ));
        assert!(matches!(
            integrality_check(SeriesId::Ahat, &odd, 1),
            Err(CharClassError::NoPrescription { .. })
        ));
    }

    #[test]
    fn display() {
        let a = ahat_series(8).unwrap();
        assert_eq!(a.to_string(), "1 - (1/24)*p1 + (7/5760)*p1^2 - (1/1440)*p2");
    }
}
