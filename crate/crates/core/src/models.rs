//! Bloch Hamiltonians on the honeycomb lattice: the Haldane model, the
//! Kane-Mele model, generic `d·Γ` models loaded from JSON, and checks of
//! anti-unitary symmetries.
//!
//! Displacement convention (lattice constant 1): nearest neighbours
//! `a1 = (1/2, √3/2)`, `a2 = (1/2, -√3/2)`, `a3 = (-1, 0)`, next-nearest
//! neighbours `b1 = a2 - a3`, `b2 = a3 - a1`, `b3 = a1 - a2`. With these, the
//! Haldane Dirac point whose low-energy expansion is
//! `-3t₂cosφ σ0 + (3/2)t₁(κ₂σ1 - κ₁σ2) + (M - 3√3 t₂ sinφ)σ3` sits at
//! `K = (0, -4π/(3√3))`.
//!
//! The Haldane Hamiltonian in its textbook form is not periodic in `k`
//! because the two sublattices sit at different positions. Each model carries
//! its orbital positions `τ_j`; [`BlochModel::hamiltonian_periodic`] returns
//! `U† H U` with `U = diag(e^{ik·τ_j})`, which is periodic under the
//! reciprocal lattice and agrees with `H` wherever `k·τ_j ∈ 2πZ`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{c, conj, frobenius, hermitian_deviation, kron, max_abs_diff, pauli, CMatrix};
use crate::tenfold::{az_class_from_signature, CartanLabel};

pub type Vec2 = [f64; 2];

/// Tolerance for symmetry checks.
pub const SYMMETRY_TOL: f64 = 1e-9;

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("operator is {op}x{op} but the model has {bands} bands")]
    DimensionMismatch { op: usize, bands: usize },
    #[error("symmetry check passed but U·conj(U) != {square}·1 (deviation {deviation:e})")]
    AmbiguousClass { square: i8, deviation: f64 },
    #[error("no symmetry class has signature T={t}, C={c}, S={s}")]
    UnknownSignature { t: i8, c: i8, s: u8 },
    #[error("invalid model description: {0}")]
    InvalidModel(String),
    #[error("grid must have at least 2 points per direction")]
    GridTooSmall,
}

pub fn dot(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

fn sub(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] - b[0], a[1] - b[1]]
}

fn cross(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Bravais lattice plus the displacement sets used to write hoppings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lattice {
    /// Primitive vectors, ordered so that `A1 × A2 > 0`.
    pub bravais: [Vec2; 2],
    pub nearest: [Vec2; 3],
    pub next_nearest: [Vec2; 3],
}

impl Lattice {
    /// Reciprocal basis with `G_i · A_j = 2π δ_ij`.
    pub fn reciprocal(&self) -> [Vec2; 2] {
        let [a1, a2] = self.bravais;
        let area = cross(a1, a2);
        [
            [2.0 * PI * a2[1] / area, -2.0 * PI * a2[0] / area],
            [-2.0 * PI * a1[1] / area, 2.0 * PI * a1[0] / area],
        ]
    }

    /// Cartesian momentum for reduced coordinates `(k1, k2)`.
    pub fn momentum(&self, k1: f64, k2: f64) -> Vec2 {
        let [g1, g2] = self.reciprocal();
        [k1 * g1[0] + k2 * g2[0], k1 * g1[1] + k2 * g2[1]]
    }
}

/// The displacement vectors `a_i` and `b_i`.
pub fn honeycomb_displacements() -> ([Vec2; 3], [Vec2; 3]) {
    let a = [[0.5, SQRT3 / 2.0], [0.5, -SQRT3 / 2.0], [-1.0, 0.0]];
    let b = [sub(a[1], a[2]), sub(a[2], a[0]), sub(a[0], a[1])];
    (a, b)
}

/// Honeycomb lattice with nearest-neighbour distance 1 (Haldane model).
pub fn haldane_lattice() -> Lattice {
    let (a, b) = honeycomb_displacements();
    Lattice { bravais: [b[0], [-b[1][0], -b[1][1]]], nearest: a, next_nearest: b }
}

/// Triangular Bravais lattice with lattice constant 1, as used by the
/// Kane-Mele functions and by JSON models.
pub fn triangular_lattice() -> Lattice {
    let (a, b) = honeycomb_displacements();
    Lattice { bravais: [[1.0, 0.0], [0.5, SQRT3 / 2.0]], nearest: a, next_nearest: b }
}

type Evaluator = Arc<dyn Fn(Vec2) -> CMatrix + Send + Sync>;

/// A momentum-dependent Hermitian matrix with lattice metadata.
#[derive(Clone)]
pub struct BlochModel {
    pub name: String,
    pub bands: usize,
    pub params: Vec<(String, f64)>,
    pub lattice: Lattice,
    /// Position of the orbital behind each basis index.
    pub orbitals: Vec<Vec2>,
    evaluator: Evaluator,
}

impl fmt::Debug for BlochModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BlochModel")
            .field("name", &self.name)
            .field("bands", &self.bands)
            .field("params", &self.params)
            .finish()
    }
}

impl BlochModel {
    pub fn new(
        name: impl Into<String>,
        bands: usize,
        params: Vec<(String, f64)>,
        lattice: Lattice,
        orbitals: Vec<Vec2>,
        evaluator: impl Fn(Vec2) -> CMatrix + Send + Sync + 'static,
    ) -> Self {
        assert_eq!(orbitals.len(), bands);
        Self { name: name.into(), bands, params, lattice, orbitals, evaluator: Arc::new(evaluator) }
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    /// `H(k)` as written, `k` Cartesian.
    pub fn hamiltonian(&self, k: Vec2) -> CMatrix {
        (self.evaluator)(k)
    }

    /// `U(k)† H(k) U(k)` with `U = diag(e^{ik·τ_j})`; periodic in `k`.
    pub fn hamiltonian_periodic(&self, k: Vec2) -> CMatrix {
        let mut h = self.hamiltonian(k);
        if self.orbitals.iter().all(|t| t[0] == 0.0 && t[1] == 0.0) {
            return h;
        }
        let phases: Vec<Complex64> = self.orbitals.iter().map(|&t| Complex64::from_polar(1.0, dot(k, t))).collect();
        for i in 0..self.bands {
            for j in 0..self.bands {
                h[(i, j)] = phases[i].conj() * h[(i, j)] * phases[j];
            }
        }
        h
    }

    /// Periodic-gauge Hamiltonian at reduced coordinates `(k1, k2)`.
    pub fn hamiltonian_reduced(&self, k1: f64, k2: f64) -> CMatrix {
        self.hamiltonian_periodic(self.lattice.momentum(k1, k2))
    }

    /// The sub-model on the given basis indices.
    pub fn restrict(&self, indices: &[usize]) -> BlochModel {
        let idx = indices.to_vec();
        let parent = self.evaluator.clone();
        let orbitals = idx.iter().map(|&i| self.orbitals[i]).collect();
        let n = idx.len();
        BlochModel {
            name: format!("{}{:?}", self.name, indices),
            bands: n,
            params: self.params.clone(),
            lattice: self.lattice,
            orbitals,
            evaluator: Arc::new(move |k| {
                let h = parent(k);
                CMatrix::from_fn(n, n, |i, j| h[(idx[i], idx[j])])
            }),
        }
    }

    /// Largest Hermiticity violation over the given momenta.
    pub fn max_hermitian_deviation(&self, ks: &[Vec2]) -> f64 {
        ks.iter().map(|&k| hermitian_deviation(&self.hamiltonian(k))).fold(0.0, f64::max)
    }

    /// Largest `|H(k + G) - H(k)|` over the given momenta and both reciprocal basis vectors,
    /// in the periodic gauge.
    pub fn max_periodicity_deviation(&self, ks: &[Vec2]) -> f64 {
        let g = self.lattice.reciprocal();
        let mut worst = 0.0f64;
        for &k in ks {
            let h = self.hamiltonian_periodic(k);
            for gv in g {
                let shifted = self.hamiltonian_periodic([k[0] + gv[0], k[1] + gv[1]]);
                worst = worst.max(max_abs_diff(&h, &shifted));
            }
        }
        worst
    }
}

/// Parameters of the Haldane model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HaldaneParams {
    pub t1: f64,
    pub t2: f64,
    pub phi: f64,
    pub m: f64,
}

impl HaldaneParams {
    pub fn new(t1: f64, t2: f64, phi: f64, m: f64) -> Self {
        Self { t1, t2, phi, m }
    }
}

/// Dirac point of the Haldane model in this convention.
pub fn haldane_k_point() -> Vec2 {
    [0.0, -4.0 * PI / (3.0 * SQRT3)]
}

/// Coefficients `(d0, d1, d2, d3)` of `σ0..σ3` in the Haldane Hamiltonian.
pub fn haldane_d(p: &HaldaneParams, k: Vec2) -> [f64; 4] {
    let (a, b) = honeycomb_displacements();
    let mut d = [0.0; 4];
    for i in 0..3 {
        let ka = dot(k, a[i]);
        let kb = dot(k, b[i]);
        d[0] += 2.0 * p.t2 * p.phi.cos() * kb.cos();
        d[1] += p.t1 * ka.cos();
        d[2] += p.t1 * ka.sin();
        d[3] += p.m / 3.0 - 2.0 * p.t2 * p.phi.sin() * kb.sin();
    }
    d
}

fn pauli_combination(d: &[f64; 4]) -> CMatrix {
    CMatrix::from_row_slice(
        2,
        2,
        &[c(d[0] + d[3], 0.0), c(d[1], -d[2]), c(d[1], d[2]), c(d[0] - d[3], 0.0)],
    )
}

/// Two-band Haldane model.
pub fn haldane(p: HaldaneParams) -> BlochModel {
    let (a, _) = honeycomb_displacements();
    BlochModel::new(
        "haldane",
        2,
        vec![("t1".into(), p.t1), ("t2".into(), p.t2), ("phi".into(), p.phi), ("M".into(), p.m)],
        haldane_lattice(),
        vec![[0.0, 0.0], a[2]],
        move |k| pauli_combination(&haldane_d(&p, k)),
    )
}

/// Low-energy expansion around `K`, as a function of `κ = k - K`.
pub fn haldane_continuum(kappa: Vec2, p: &HaldaneParams) -> CMatrix {
    let d = [
        -3.0 * p.t2 * p.phi.cos(),
        1.5 * p.t1 * kappa[1],
        -1.5 * p.t1 * kappa[0],
        p.m - 3.0 * SQRT3 * p.t2 * p.phi.sin(),
    ];
    pauli_combination(&d)
}

/// `Γ1..Γ5` and `Γ_ij = [Γ_i, Γ_j]/(2i)` on sublattice ⊗ spin.
#[derive(Debug, Clone)]
pub struct GammaSet {
    pub gamma: [CMatrix; 5],
    commutators: BTreeMap<(usize, usize), CMatrix>,
}

impl GammaSet {
    /// `Γ_ij` for `1 <= i < j <= 5`.
    pub fn gamma_ij(&self, i: usize, j: usize) -> &CMatrix {
        &self.commutators[&(i, j)]
    }

    /// `Γ_i` for `1 <= i <= 5`.
    pub fn gamma_i(&self, i: usize) -> &CMatrix {
        &self.gamma[i - 1]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&(usize, usize), &CMatrix)> {
        self.commutators.iter()
    }
}

pub fn gamma_set() -> GammaSet {
    let s = |i, j| kron(&pauli(i), &pauli(j));
    let gamma = [s(1, 0), s(3, 0), s(2, 1), s(2, 2), s(2, 3)];
    let mut commutators = BTreeMap::new();
    for i in 1..=5 {
        for j in i + 1..=5 {
            let (gi, gj) = (&gamma[i - 1], &gamma[j - 1]);
            let comm = gi * gj - gj * gi;
            commutators.insert((i, j), comm / c(0.0, 2.0));
        }
    }
    GammaSet { gamma, commutators }
}

/// Parameters of the Kane-Mele model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KaneMeleParams {
    pub t: f64,
    pub lso: f64,
    pub lr: f64,
    pub m: f64,
}

impl KaneMeleParams {
    pub fn new(t: f64, lso: f64, lr: f64, m: f64) -> Self {
        Self { t, lso, lr, m }
    }
}

/// Dirac point of the Kane-Mele functions.
pub fn kane_mele_k_point() -> Vec2 {
    [4.0 * PI / 3.0, 0.0]
}

/// The eight nonzero coefficient functions, keyed `"1"`, `"2"`, `"3"`, `"4"`,
/// `"12"`, `"15"`, `"23"`, `"24"`.
pub fn kane_mele_d(p: &KaneMeleParams, k: Vec2) -> [(&'static str, f64); 8] {
    let (x, y) = (k[0] / 2.0, SQRT3 * k[1] / 2.0);
    [
        ("1", p.t * (1.0 + 2.0 * x.cos() * y.cos())),
        ("2", p.m),
        ("3", p.lr * (1.0 - x.cos() * y.cos())),
        ("4", -SQRT3 * p.lr * x.sin() * y.sin()),
        ("12", -2.0 * p.t * x.cos() * y.sin()),
        ("15", p.lso * (2.0 * k[0].sin() - 4.0 * x.sin() * y.cos())),
        ("23", -p.lr * x.cos() * y.sin()),
        ("24", SQRT3 * p.lr * x.sin() * y.cos()),
    ]
}

fn gamma_by_key<'a>(g: &'a GammaSet, key: &str) -> Option<&'a CMatrix> {
    let digits: Vec<usize> = key.chars().map(|ch| ch.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?;
    match digits.as_slice() {
        [i] if (1..=5).contains(i) => Some(g.gamma_i(*i)),
        [i, j] if 1 <= *i && i < j && *j <= 5 => Some(g.gamma_ij(*i, *j)),
        _ => None,
    }
}

/// Four-band Kane-Mele model, basis index `2·sublattice + spin`.
pub fn kane_mele(p: KaneMeleParams) -> BlochModel {
    let g = gamma_set();
    BlochModel::new(
        "kane-mele",
        4,
        vec![("t".into(), p.t), ("lso".into(), p.lso), ("lr".into(), p.lr), ("M".into(), p.m)],
        triangular_lattice(),
        vec![[0.0, 0.0]; 4],
        move |k| {
            let mut h = CMatrix::zeros(4, 4);
            for (key, value) in kane_mele_d(&p, k) {
                h += gamma_by_key(&g, key).expect("valid key") * c(value, 0.0);
            }
            h
        },
    )
}

/// Basis indices of the spin-up sector (`s3 = +1`).
pub const KANE_MELE_SPIN_UP: [usize; 2] = [0, 2];
/// Basis indices of the spin-down sector.
pub const KANE_MELE_SPIN_DOWN: [usize; 2] = [1, 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryKind {
    /// Time reversal: `U conj(H(-k)) U† = H(k)`.
    T,
    /// Charge conjugation: `U conj(H(-k)) U† = -H(k)`.
    C,
}

/// `Θ = U K` with `K` complex conjugation.
#[derive(Debug, Clone, PartialEq)]
pub struct AntiUnitaryOp {
    pub unitary: CMatrix,
    pub kind: SymmetryKind,
    pub square: i8,
}

impl AntiUnitaryOp {
    pub fn new(unitary: CMatrix, kind: SymmetryKind, square: i8) -> Self {
        Self { unitary, kind, square }
    }

    /// `Θ ψ = U conj(ψ)`, applied column by column.
    pub fn apply(&self, psi: &CMatrix) -> CMatrix {
        &self.unitary * conj(psi)
    }

    /// `|U conj(U) - square·1|`.
    pub fn square_deviation(&self) -> f64 {
        let n = self.unitary.nrows();
        let target = CMatrix::identity(n, n) * c(f64::from(self.square), 0.0);
        max_abs_diff(&(&self.unitary * conj(&self.unitary)), &target)
    }
}

/// `Θ = (σ0 ⊗ i s2) K`, squaring to `-1`.
pub fn kane_mele_time_reversal() -> AntiUnitaryOp {
    let is2 = pauli(2) * c(0.0, 1.0);
    AntiUnitaryOp::new(kron(&pauli(0), &is2), SymmetryKind::T, -1)
}

/// Plain complex conjugation on `n` bands as a time-reversal candidate.
pub fn spinless_time_reversal(n: usize) -> AntiUnitaryOp {
    AntiUnitaryOp::new(CMatrix::identity(n, n), SymmetryKind::T, 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymmetryReport {
    pub passed: bool,
    pub max_deviation: f64,
}

/// Checks `U conj(H(-k)) U† = ±H(k)` on a `grid × grid` mesh of the
/// Brillouin zone (periodic gauge).
pub fn check_antiunitary(model: &BlochModel, op: &AntiUnitaryOp, grid: usize) -> Result<SymmetryReport, ModelError> {
    if op.unitary.nrows() != model.bands || op.unitary.ncols() != model.bands {
        return Err(ModelError::DimensionMismatch { op: op.unitary.nrows(), bands: model.bands });
    }
    if grid < 2 {
        return Err(ModelError::GridTooSmall);
    }
    let sign = match op.kind {
        SymmetryKind::T => 1.0,
        SymmetryKind::C => -1.0,
    };
    let u_dag = op.unitary.adjoint();
    let mut worst = 0.0f64;
    for i in 0..grid {
        for j in 0..grid {
            // offset so the mesh avoids sitting only on high-symmetry points
            let (k1, k2) = ((i as f64 + 0.31) / grid as f64, (j as f64 + 0.17) / grid as f64);
            let k = model.lattice.momentum(k1, k2);
            let h = model.hamiltonian_periodic(k);
            let h_minus = model.hamiltonian_periodic([-k[0], -k[1]]);
            let image = &op.unitary * conj(&h_minus) * &u_dag;
            let scale = frobenius(&h).max(1.0);
            worst = worst.max(max_abs_diff(&image, &(h * c(sign, 0.0))) / scale);
        }
    }
    Ok(SymmetryReport { passed: worst < SYMMETRY_TOL, max_deviation: worst })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassDetection {
    pub label: CartanLabel,
    pub t: i8,
    pub c: i8,
    pub s: u8,
    pub t_deviation: Option<f64>,
    pub c_deviation: Option<f64>,
}

/// Tests the supplied candidates and maps the surviving `(T², C², S)` to a
/// Cartan label. Chiral symmetry is counted as present when both `T` and `C` are.
pub fn detect_az_class(
    model: &BlochModel,
    candidate_t: Option<&AntiUnitaryOp>,
    candidate_c: Option<&AntiUnitaryOp>,
    grid: usize,
) -> Result<ClassDetection, ModelError> {
    let probe = |op: Option<&AntiUnitaryOp>| -> Result<(i8, Option<f64>), ModelError> {
        let Some(op) = op else { return Ok((0, None)) };
        let report = check_antiunitary(model, op, grid)?;
        if !report.passed {
            return Ok((0, Some(report.max_deviation)));
        }
        let dev = op.square_deviation();
        if dev > SYMMETRY_TOL {
            return Err(ModelError::AmbiguousClass { square: op.square, deviation: dev });
        }
        Ok((op.square, Some(report.max_deviation)))
    };
    let (t, t_deviation) = probe(candidate_t)?;
    let (cc, c_deviation) = probe(candidate_c)?;
    let s = u8::from(t != 0 && cc != 0);
    let label = az_class_from_signature(t, cc, s).ok_or(ModelError::UnknownSignature { t, c: cc, s })?;
    Ok(ClassDetection { label, t, c: cc, s, t_deviation, c_deviation })
}

/// One harmonic `amp · f(k · (Σ n_i a_i + Σ m_i b_i))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Harmonic {
    /// `"const"`, `"cos"` or `"sin"`.
    pub kind: String,
    #[serde(default)]
    pub a: [i32; 3],
    #[serde(default)]
    pub b: [i32; 3],
    pub amp: f64,
}

/// Optional explicit symmetry operator in a model file. Matrix entries are
/// `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperatorSpec {
    pub matrix: Vec<Vec<[f64; 2]>>,
    pub square: i8,
}

/// `(kind, displacement, amplitude)` with kind 0 = const, 1 = cos, 2 = sin.
type ParsedHarmonic = (u8, Vec2, f64);

/// JSON description of a `d·Γ` model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub bands: usize,
    /// `"pauli"` (2 bands, keys `0..3`) or `"kane-mele"` (4 bands, keys `0`, `1..5`, `ij`).
    pub gamma_basis: String,
    pub d: BTreeMap<String, Vec<Harmonic>>,
    #[serde(default, rename = "T")]
    pub time_reversal: Option<OperatorSpec>,
    #[serde(default, rename = "C")]
    pub charge_conjugation: Option<OperatorSpec>,
}

impl ModelSpec {
    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        serde_json::from_str(text).map_err(|e| ModelError::InvalidModel(e.to_string()))
    }

    fn basis_matrix(&self, key: &str) -> Option<CMatrix> {
        match self.gamma_basis.as_str() {
            "pauli" => match key {
                "0" | "1" | "2" | "3" => Some(pauli(key.parse().ok()?)),
                _ => None,
            },
            "kane-mele" => {
                if key == "0" {
                    Some(CMatrix::identity(4, 4))
                } else {
                    gamma_by_key(&gamma_set(), key).cloned()
                }
            }
            _ => None,
        }
    }

    pub fn build(&self) -> Result<BlochModel, ModelError> {
        let expected = match self.gamma_basis.as_str() {
            "pauli" => 2,
            "kane-mele" => 4,
            other => return Err(ModelError::InvalidModel(format!("unknown gamma basis {other:?}"))),
        };
        if self.bands != expected {
            return Err(ModelError::InvalidModel(format!(
                "basis {} needs {expected} bands, got {}",
                self.gamma_basis, self.bands
            )));
        }
        let (a, b) = honeycomb_displacements();
        let mut terms: Vec<(CMatrix, Vec<ParsedHarmonic>)> = Vec::new();
        for (key, harmonics) in &self.d {
            let mat = self
                .basis_matrix(key)
                .ok_or_else(|| ModelError::InvalidModel(format!("unknown coefficient key {key:?}")))?;
            let mut parsed = Vec::new();
            for h in harmonics {
                let kind = match h.kind.as_str() {
                    "const" => 0,
                    "cos" => 1,
                    "sin" => 2,
                    other => return Err(ModelError::InvalidModel(format!("unknown harmonic {other:?}"))),
                };
                let mut r = [0.0, 0.0];
                for i in 0..3 {
                    r[0] += f64::from(h.a[i]) * a[i][0] + f64::from(h.b[i]) * b[i][0];
                    r[1] += f64::from(h.a[i]) * a[i][1] + f64::from(h.b[i]) * b[i][1];
                }
                parsed.push((kind, r, h.amp));
            }
            terms.push((mat, parsed));
        }
        let n = self.bands;
        Ok(BlochModel::new(
            format!("json:{}", self.gamma_basis),
            n,
            Vec::new(),
            triangular_lattice(),
            vec![[0.0, 0.0]; n],
            move |k| {
                let mut h = CMatrix::zeros(n, n);
                for (mat, harmonics) in &terms {
                    let coeff: f64 = harmonics
                        .iter()
                        .map(|&(kind, r, amp)| match kind {
                            0 => amp,
                            1 => amp * dot(k, r).cos(),
                            _ => amp * dot(k, r).sin(),
                        })
                        .sum();
                    h += mat * c(coeff, 0.0);
                }
                h
            },
        ))
    }

    fn operator(&self, spec: &OperatorSpec, kind: SymmetryKind) -> Result<AntiUnitaryOp, ModelError> {
        let n = spec.matrix.len();
        if spec.matrix.iter().any(|row| row.len() != n) {
            return Err(ModelError::InvalidModel("symmetry matrix must be square".into()));
        }
        let m = CMatrix::from_fn(n, n, |i, j| c(spec.matrix[i][j][0], spec.matrix[i][j][1]));
        Ok(AntiUnitaryOp::new(m, kind, spec.square))
    }

    /// The file's `T` operator, or the basis default (`σ0⊗is2` for
    /// Kane-Mele, plain conjugation for Pauli).
    pub fn time_reversal(&self) -> Result<AntiUnitaryOp, ModelError> {
        match &self.time_reversal {
            Some(spec) => self.operator(spec, SymmetryKind::T),
            None if self.gamma_basis == "kane-mele" => Ok(kane_mele_time_reversal()),
            None => Ok(spinless_time_reversal(self.bands)),
        }
    }

    pub fn charge_conjugation(&self) -> Result<Option<AntiUnitaryOp>, ModelError> {
        self.charge_conjugation.as_ref().map(|s| self.operator(s, SymmetryKind::C)).transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_ks(n: usize) -> Vec<Vec2> {
        // deterministic scatter over a few Brillouin zones
        (0..n).map(|i| [((i * 37) % 101) as f64 * 0.13 - 6.0, ((i * 53) % 97) as f64 * 0.11 - 5.0]).collect()
    }

    #[test]
    fn haldane_hermitian_and_periodic() {
        let m = haldane(HaldaneParams::new(1.0, 0.2, PI / 2.0, 0.5));
        let ks = sample_ks(100);
        assert!(m.max_hermitian_deviation(&ks) < 1e-12);
        assert!(m.max_periodicity_deviation(&ks) < 1e-10);
    }

    #[test]
    fn haldane_mass_at_k() {
        let p = HaldaneParams::new(1.0, 0.2, 0.7, 0.3);
        let d = haldane_d(&p, haldane_k_point());
        assert!((d[3] - (p.m - 3.0 * SQRT3 * p.t2 * p.phi.sin())).abs() < 1e-12);
        assert!(d[1].abs() < 1e-12 && d[2].abs() < 1e-12);
        assert!((d[0] + 3.0 * p.t2 * p.phi.cos()).abs() < 1e-12);
        // the periodic gauge agrees with the literal form at K
        let m = haldane(p);
        let k = haldane_k_point();
        assert!(max_abs_diff(&m.hamiltonian(k), &m.hamiltonian_periodic(k)) < 1e-12);
    }

    #[test]
    fn haldane_gapless_without_mass_terms() {
        let m = haldane(HaldaneParams::new(1.0, 0.0, 0.0, 0.0));
        let e = crate::linalg::eig_hermitian(&m.hamiltonian(haldane_k_point())).unwrap();
        assert!((e.eigenvalues[1] - e.eigenvalues[0]).abs() < 1e-12);
    }

    #[test]
    fn continuum_at_zero_momentum() {
        let p = HaldaneParams::new(1.0, 0.2, 1.1, 0.4);
        let h = haldane_continuum([0.0, 0.0], &p);
        let mass = p.m - 3.0 * SQRT3 * p.t2 * p.phi.sin();
        assert!((h[(0, 0)].re - (-3.0 * p.t2 * p.phi.cos() + mass)).abs() < 1e-14);
        assert!((h[(1, 1)].re - (-3.0 * p.t2 * p.phi.cos() - mass)).abs() < 1e-14);
        let closed = HaldaneParams::new(1.0, 0.2, 1.1, 3.0 * SQRT3 * 0.2 * 1.1f64.sin());
        let h = haldane_continuum([0.0, 0.0], &closed);
        assert!((h[(0, 0)] - h[(1, 1)]).norm() < 1e-14);
    }

    #[test]
    fn continuum_linearizes_lattice_model() {
        let p = HaldaneParams::new(1.0, 0.2, PI / 3.0, 0.1);
        let m = haldane(p);
        let k = haldane_k_point();
        let dir = [0.6, -0.8];
        let err = |eps: f64| {
            let kappa = [eps * dir[0], eps * dir[1]];
            max_abs_diff(&m.hamiltonian([k[0] + kappa[0], k[1] + kappa[1]]), &haldane_continuum(kappa, &p))
        };
        let (e3, e4) = (err(1e-3), err(1e-4));
        assert!(e3 < 1e-5, "{e3}");
        let ratio = e3 / e4;
        assert!((50.0..200.0).contains(&ratio), "{ratio}");
    }

    #[test]
    fn gamma_relations() {
        let g = gamma_set();
        let id = CMatrix::identity(4, 4);
        for i in 1..=5 {
            for j in 1..=5 {
                let (a, b) = (g.gamma_i(i), g.gamma_i(j));
                let anti = a * b + b * a;
                let expected = if i == j { &id * c(2.0, 0.0) } else { CMatrix::zeros(4, 4) };
                assert!(max_abs_diff(&anti, &expected) < 1e-15);
            }
            assert!(hermitian_deviation(g.gamma_i(i)) < 1e-15);
        }
        let g15 = g.gamma_ij(1, 5);
        assert!(hermitian_deviation(g15) < 1e-15);
        assert!(g15.trace().norm() < 1e-15);
        assert!(max_abs_diff(g15, &kron(&pauli(3), &pauli(3))) < 1e-15);
        assert!(max_abs_diff(g.gamma_ij(1, 2), &(kron(&pauli(2), &pauli(0)) * c(-1.0, 0.0))) < 1e-15);
    }

    #[test]
    fn kane_mele_spin_blocks_decouple_without_rashba() {
        let m = kane_mele(KaneMeleParams::new(1.0, 0.06, 0.0, 0.1));
        for k in sample_ks(50) {
            let h = m.hamiltonian(k);
            for &i in &KANE_MELE_SPIN_UP {
                for &j in &KANE_MELE_SPIN_DOWN {
                    assert!(h[(i, j)].norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn kane_mele_hermitian_periodic_and_masses() {
        let p = KaneMeleParams::new(1.0, 0.06, 0.05, 0.1);
        let m = kane_mele(p);
        let ks = sample_ks(100);
        assert!(m.max_hermitian_deviation(&ks) < 1e-12);
        assert!(m.max_periodicity_deviation(&ks) < 1e-10);
        let q = KaneMeleParams { lr: 0.0, ..p };
        let h = kane_mele(q).hamiltonian(kane_mele_k_point());
        let up = h[(0, 0)].re;
        let down = h[(1, 1)].re;
        assert!((up - (q.m - 3.0 * SQRT3 * q.lso)).abs() < 1e-12);
        assert!((down - (q.m + 3.0 * SQRT3 * q.lso)).abs() < 1e-12);
    }

    #[test]
    fn kane_mele_constant_mass() {
        let g = gamma_set();
        let m = kane_mele(KaneMeleParams::new(1.0, 0.06, 0.05, 0.1));
        let diff = m.hamiltonian([0.3, 1.1]) - m.hamiltonian([-2.0, 0.4]);
        let component = (g.gamma_i(2) * diff).trace() / c(4.0, 0.0);
        assert!(component.norm() < 1e-14);
    }

    #[test]
    fn time_reversal_checks() {
        let km = kane_mele(KaneMeleParams::new(1.0, 0.06, 0.05, 0.1));
        let r = check_antiunitary(&km, &kane_mele_time_reversal(), 12).unwrap();
        assert!(r.passed, "{r:?}");
        let h = haldane(HaldaneParams::new(1.0, 0.2, PI / 2.0, 0.0));
        let r = check_antiunitary(&h, &spinless_time_reversal(2), 12).unwrap();
        assert!(!r.passed && r.max_deviation > 0.01);
        let h0 = haldane(HaldaneParams::new(1.0, 0.2, 0.0, 0.3));
        let r = check_antiunitary(&h0, &spinless_time_reversal(2), 12).unwrap();
        assert!(r.passed && r.max_deviation < 1e-12);
        let cc = AntiUnitaryOp::new(CMatrix::identity(2, 2), SymmetryKind::C, 1);
        assert!(!check_antiunitary(&h, &cc, 6).unwrap().passed);
        assert!(matches!(
            check_antiunitary(&h, &kane_mele_time_reversal(), 4),
            Err(ModelError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn class_detection() {
        let h = haldane(HaldaneParams::new(1.0, 0.2, PI / 2.0, 0.0));
        assert_eq!(detect_az_class(&h, None, None, 6).unwrap().label, CartanLabel::A);
        let km = kane_mele(KaneMeleParams::new(1.0, 0.06, 0.05, 0.1));
        let t = kane_mele_time_reversal();
        assert_eq!(detect_az_class(&km, Some(&t), None, 6).unwrap().label, CartanLabel::AII);
        // real H ∝ σ1 commutes with K and anticommutes with σ3
        let chiral = BlochModel::new(
            "chiral",
            2,
            vec![],
            triangular_lattice(),
            vec![[0.0, 0.0]; 2],
            |k| pauli(1) * c(1.0 + k[0].cos() + k[1].cos(), 0.0),
        );
        let tt = spinless_time_reversal(2);
        let cc = AntiUnitaryOp::new(pauli(3), SymmetryKind::C, 1);
        assert_eq!(detect_az_class(&chiral, Some(&tt), Some(&cc), 6).unwrap().label, CartanLabel::BDI);
        let bad = AntiUnitaryOp::new(CMatrix::identity(2, 2), SymmetryKind::T, -1);
        assert!(matches!(detect_az_class(&chiral, Some(&bad), None, 4), Err(ModelError::AmbiguousClass { .. })));
    }

    #[test]
    fn json_model_reproduces_kane_mele() {
        let text = r#"{
            "bands": 4,
            "gamma_basis": "kane-mele",
            "d": {
                "1": [{"kind": "const", "amp": 1.0},
                      {"kind": "cos", "a": [1, 0, 0], "amp": 1.0},
                      {"kind": "cos", "a": [0, 1, 0], "amp": 1.0}],
                "2": [{"kind": "const", "amp": 0.1}],
                "12": [{"kind": "sin", "a": [1, 0, 0], "amp": -1.0},
                       {"kind": "sin", "a": [0, 1, 0], "amp": 1.0}],
                "15": [{"kind": "sin", "a": [0, 0, -1], "amp": 0.12},
                       {"kind": "sin", "a": [1, 0, 0], "amp": -0.12},
                       {"kind": "sin", "a": [0, 1, 0], "amp": -0.12}]
            }
        }"#;
        let spec = ModelSpec::from_json(text).unwrap();
        let model = spec.build().unwrap();
        let km = kane_mele(KaneMeleParams::new(1.0, 0.06, 0.0, 0.1));
        for k in sample_ks(30) {
            assert!(max_abs_diff(&model.hamiltonian(k), &km.hamiltonian(k)) < 1e-12, "{k:?}");
        }
        assert!(check_antiunitary(&model, &spec.time_reversal().unwrap(), 8).unwrap().passed);
    }

    #[test]
    fn json_model_errors() {
        assert!(ModelSpec::from_json("{").is_err());
        let spec = ModelSpec::from_json(r#"{"bands": 2, "gamma_basis": "pauli", "d": {"7": []}}"#).unwrap();
        assert!(matches!(spec.build(), Err(ModelError::InvalidModel(_))));
        let spec = ModelSpec::from_json(r#"{"bands": 4, "gamma_basis": "pauli", "d": {}}"#).unwrap();
        assert!(spec.build().is_err());
    }
}
