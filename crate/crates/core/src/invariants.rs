//! Topological invariants on a discretized Brillouin zone.
//!
//! The zone is sampled on an `N × N` mesh in reduced coordinates `(k1, k2)`
//! of the model's reciprocal basis, traversed right-handed. Link variables are
//! normalized determinants of overlap matrices, so degenerate occupied bands
//! need no special handling. The Chern number is `C = (1/2π) ∫ F` for the
//! Berry connection `A = i⟨u|∂u⟩`; with this choice the lower band of a
//! two-band `d·σ` model has `C` equal to the degree of `k ↦ d(k)/|d(k)|`.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{eig_hermitian, CMatrix, EigError};
use crate::models::{
    check_antiunitary, haldane, kane_mele, kane_mele_time_reversal, AntiUnitaryOp, BlochModel, HaldaneParams,
    KaneMeleParams, ModelError, SymmetryKind,
};
use crate::tenfold::{periodic_table, CartanLabel, GroupTag};

/// Smallest admissible gap between occupied and empty bands.
pub const GAP_TOL: f64 = 1e-8;
/// Largest admissible distance of `flux / 2π` from an integer.
pub const INTEGRALITY_TOL: f64 = 1e-6;
/// Smallest mesh accepted.
pub const MIN_GRID: usize = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InvariantError {
    #[error("gap {gap:e} at k = ({k1:.4}, {k2:.4}) is below {GAP_TOL:e}")]
    GapClosure { gap: f64, k1: f64, k2: f64 },
    #[error("flux/2π = {value} is not an integer; refine the mesh")]
    NonIntegral { value: f64 },
    #[error("time-reversal check failed (deviation {deviation:e})")]
    SymmetryViolated { deviation: f64 },
    #[error("{0}")]
    InvalidInput(String),
    #[error("witness set does not establish the table entry: {0}")]
    WitnessInsufficient(String),
    #[error(transparent)]
    Eig(#[from] EigError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Called with `(i, j, frame)` after each occupied frame is computed; used to
/// redress eigenvectors, e.g. to test gauge invariance.
pub type GaugeHook<'a> = &'a (dyn Fn(usize, usize, &mut CMatrix) + Sync);

/// The lower half of the bands.
pub fn lower_bands(model: &BlochModel) -> Vec<usize> {
    (0..model.bands / 2).collect()
}

fn validate_occupied(model: &BlochModel, occupied: &[usize]) -> Result<(), InvariantError> {
    if occupied.is_empty() || occupied.iter().any(|&b| b >= model.bands) {
        return Err(InvariantError::InvalidInput(format!(
            "occupied bands {occupied:?} out of range for {} bands",
            model.bands
        )));
    }
    let unique: BTreeSet<_> = occupied.iter().collect();
    if unique.len() != occupied.len() {
        return Err(InvariantError::InvalidInput("occupied bands repeat".into()));
    }
    Ok(())
}

fn validate_grid(n: usize) -> Result<(), InvariantError> {
    if n < MIN_GRID {
        return Err(InvariantError::InvalidInput(format!("grid {n} is below {MIN_GRID}")));
    }
    Ok(())
}

/// Occupied eigenvector frames on the mesh, row-major in `j` (index `j·N + i`).
struct Frames {
    n: usize,
    rows: usize,
    frames: Vec<CMatrix>,
    min_gap: f64,
}

impl Frames {
    fn at(&self, i: usize, j: usize) -> &CMatrix {
        &self.frames[(j % self.rows) * self.n + i % self.n]
    }
}

fn band_gap(values: &[f64], occupied: &[usize]) -> f64 {
    let mut gap = f64::INFINITY;
    for (b, &e) in values.iter().enumerate() {
        if occupied.contains(&b) {
            continue;
        }
        for &o in occupied {
            gap = gap.min((e - values[o]).abs());
        }
    }
    gap
}

/// Frames for `i in 0..N`, `j in 0..rows`; `rows = N` covers the torus.
fn compute_frames(
    model: &BlochModel,
    occupied: &[usize],
    n: usize,
    rows: usize,
    hook: Option<GaugeHook<'_>>,
) -> Result<Frames, InvariantError> {
    let results: Vec<Result<(CMatrix, f64), InvariantError>> = (0..rows * n)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx % n, idx / n);
            let (k1, k2) = (i as f64 / n as f64, j as f64 / n as f64);
            let eig = eig_hermitian(&model.hamiltonian_reduced(k1, k2))?;
            let gap = band_gap(&eig.eigenvalues, occupied);
            if gap < GAP_TOL {
                return Err(InvariantError::GapClosure { gap, k1, k2 });
            }
            let mut frame = eig.columns(occupied);
            if let Some(h) = hook {
                h(i, j, &mut frame);
            }
            Ok((frame, gap))
        })
        .collect();
    let mut frames = Vec::with_capacity(rows * n);
    let mut min_gap = f64::INFINITY;
    for r in results {
        let (f, g) = r?;
        min_gap = min_gap.min(g);
        frames.push(f);
    }
    Ok(Frames { n, rows, frames, min_gap })
}

/// Normalized `det(ψ_a† ψ_b)`.
fn link(a: &CMatrix, b: &CMatrix) -> Complex64 {
    let d = (a.adjoint() * b).determinant();
    let norm = d.norm();
    if norm > 0.0 {
        d / norm
    } else {
        Complex64::new(1.0, 0.0)
    }
}

/// Link variables and plaquette curvature on the full torus.
#[derive(Debug, Clone, Serialize)]
pub struct BerryField {
    pub grid: usize,
    /// Per plaquette `(i, j)`, index `j·N + i`: principal value in `(-π, π]`
    /// of `arg(U1(k) U2(k+e1) U1(k+e2)* U2(k)*)`.
    pub plaquettes: Vec<f64>,
    /// Per mesh point: `(U1, U2)` as `(re, im)` pairs.
    pub links: Vec<[(f64, f64); 2]>,
    pub min_gap: f64,
}

impl BerryField {
    /// `Σ F`, which is `2π` times an integer up to rounding.
    pub fn total_flux(&self) -> f64 {
        self.plaquettes.iter().sum()
    }

    /// `(1/2π) ∫ F` with `A = i⟨u|∂u⟩`, before rounding.
    pub fn chern_raw(&self) -> f64 {
        -self.total_flux() / (2.0 * PI)
    }

    pub fn chern(&self) -> Result<i64, InvariantError> {
        let raw = self.chern_raw();
        if (raw - raw.round()).abs() > INTEGRALITY_TOL {
            return Err(InvariantError::NonIntegral { value: raw });
        }
        Ok(raw.round() as i64)
    }
}

pub fn berry_field(
    model: &BlochModel,
    occupied: &[usize],
    n: usize,
    hook: Option<GaugeHook<'_>>,
) -> Result<BerryField, InvariantError> {
    validate_occupied(model, occupied)?;
    validate_grid(n)?;
    let frames = compute_frames(model, occupied, n, n, hook)?;
    let mut links = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            let here = frames.at(i, j);
            links.push([link(here, frames.at(i + 1, j)), link(here, frames.at(i, j + 1))]);
        }
    }
    let u = |i: usize, j: usize| links[(j % n) * n + i % n];
    let mut plaquettes = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            let w = u(i, j)[0] * u(i + 1, j)[1] * u(i, j + 1)[0].conj() * u(i, j)[1].conj();
            plaquettes.push(w.arg());
        }
    }
    Ok(BerryField {
        grid: n,
        plaquettes,
        links: links.iter().map(|l| [(l[0].re, l[0].im), (l[1].re, l[1].im)]).collect(),
        min_gap: frames.min_gap,
    })
}

/// Chern number of the occupied bands.
pub fn chern_number(model: &BlochModel, occupied: &[usize], n: usize) -> Result<i64, InvariantError> {
    berry_field(model, occupied, n, None)?.chern()
}

/// [`chern_number`] with a hook that may redress each occupied frame.
pub fn chern_number_with_gauge(
    model: &BlochModel,
    occupied: &[usize],
    n: usize,
    hook: GaugeHook<'_>,
) -> Result<i64, InvariantError> {
    berry_field(model, occupied, n, Some(hook))?.chern()
}

/// `Θ Ψ ε` with `ε = [[0, 1], [-1, 0]]` applied to pairs of columns.
fn kramers_partner(op: &AntiUnitaryOp, frame: &CMatrix) -> CMatrix {
    let t = op.apply(frame);
    let mut out = t.clone();
    for p in 0..frame.ncols() / 2 {
        let (a, b) = (2 * p, 2 * p + 1);
        out.set_column(a, &(-t.column(b)));
        out.set_column(b, &t.column(a));
    }
    out
}

/// Kramers-paired frame `(u_1, Θu_1, u_2, Θu_2, ...)` at a time-reversal
/// invariant momentum, built from an occupied frame by Gram-Schmidt.
fn trim_frame(op: &AntiUnitaryOp, frame: &CMatrix) -> CMatrix {
    let rows = frame.nrows();
    let cols = frame.ncols();
    let mut out = CMatrix::zeros(rows, cols);
    let mut filled = 0;
    for c in 0..cols {
        if filled == cols {
            break;
        }
        let mut v = frame.column(c).into_owned();
        for f in 0..filled {
            let proj = out.column(f).dotc(&v);
            v -= out.column(f) * proj;
        }
        let norm = v.norm();
        if norm < 1e-6 {
            continue;
        }
        v /= Complex64::new(norm, 0.0);
        let tv = &op.unitary * v.map(|z| z.conj());
        out.set_column(filled, &v);
        out.set_column(filled + 1, &tv);
        filled += 2;
    }
    out
}

/// Z₂ index of a time-reversal invariant insulator with `Θ² = -1`, occupied
/// bands the lower half.
///
/// Half of the zone, `k2 ∈ [0, 1/2]`, is sampled with eigenvector frames on
/// its interior and frames on the two invariant lines `k2 = 0, 1/2` tied to
/// their time-reversed partners, `Ψ(-k) = Θ Ψ(k) ε`. The index is
/// `(1/2π)(Σ F - ∮ A) mod 2` over that half.
pub fn z2_invariant(model: &BlochModel, t: &AntiUnitaryOp, n: usize) -> Result<u8, InvariantError> {
    z2_invariant_impl(model, t, n, None)
}

/// [`z2_invariant`] with a hook that may redress the frames returned by the
/// eigensolver before the time-reversal constraint is imposed.
pub fn z2_invariant_with_gauge(
    model: &BlochModel,
    t: &AntiUnitaryOp,
    n: usize,
    hook: GaugeHook<'_>,
) -> Result<u8, InvariantError> {
    z2_invariant_impl(model, t, n, Some(hook))
}

fn z2_invariant_impl(
    model: &BlochModel,
    t: &AntiUnitaryOp,
    n: usize,
    hook: Option<GaugeHook<'_>>,
) -> Result<u8, InvariantError> {
    validate_grid(n)?;
    if !n.is_multiple_of(2) {
        return Err(InvariantError::InvalidInput(format!("grid {n} must be even")));
    }
    if t.kind != SymmetryKind::T || t.square != -1 {
        return Err(InvariantError::InvalidInput("need a time-reversal operator with square -1".into()));
    }
    let occupied = lower_bands(model);
    if !occupied.len().is_multiple_of(2) {
        return Err(InvariantError::InvalidInput("occupied band count must be even".into()));
    }
    let check = check_antiunitary(model, t, n)?;
    if !check.passed || t.square_deviation() > crate::models::SYMMETRY_TOL {
        return Err(InvariantError::SymmetryViolated {
            deviation: check.max_deviation.max(t.square_deviation()),
        });
    }

    let half = n / 2;
    let rows = half + 1;
    let mut frames = compute_frames(model, &occupied, n, rows, hook)?;
    for j in [0, half] {
        for i in [0, half] {
            let idx = j * n + i;
            frames.frames[idx] = trim_frame(t, &frames.frames[idx]);
        }
        for i in 1..half {
            let partner = kramers_partner(t, &frames.frames[j * n + i]);
            frames.frames[j * n + (n - i)] = partner;
        }
    }

    let at = |i: usize, j: usize| &frames.frames[j * n + i % n];
    let mut flux = 0.0;
    for j in 0..half {
        for i in 0..n {
            let w = link(at(i, j), at(i + 1, j))
                * link(at(i + 1, j), at(i + 1, j + 1))
                * link(at(i, j + 1), at(i + 1, j + 1)).conj()
                * link(at(i, j), at(i, j + 1)).conj();
            flux += w.arg();
        }
    }
    let mut boundary = 0.0;
    for i in 0..n {
        boundary += link(at(i, 0), at(i + 1, 0)).arg();
        boundary -= link(at(i, half), at(i + 1, half)).arg();
    }
    let raw = (flux - boundary) / (2.0 * PI);
    if (raw - raw.round()).abs() > INTEGRALITY_TOL {
        return Err(InvariantError::NonIntegral { value: raw });
    }
    Ok((raw.round() as i64).rem_euclid(2) as u8)
}

/// Sweep specification for the Haldane phase diagram.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseDiagramSpec {
    pub t1: f64,
    pub t2: f64,
    pub phi_range: (f64, f64),
    pub m_over_t2_range: (f64, f64),
    pub resolution: usize,
    pub grid: usize,
}

impl Default for PhaseDiagramSpec {
    fn default() -> Self {
        Self {
            t1: 1.0,
            t2: 0.2,
            phi_range: (-PI, PI),
            m_over_t2_range: (-8.0, 8.0),
            resolution: 41,
            grid: 24,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseCell {
    pub phi: f64,
    pub m_over_t2: f64,
    /// `None` when the gap closes on the mesh.
    pub chern: Option<i64>,
    pub gap_min: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseDiagram {
    pub spec: PhaseDiagramSpec,
    /// Row-major: `cells[a * resolution + b]` has the `a`-th `φ` and `b`-th `M/t₂`.
    pub cells: Vec<PhaseCell>,
}

fn linspace(range: (f64, f64), count: usize, idx: usize) -> f64 {
    if count == 1 {
        return range.0;
    }
    range.0 + (range.1 - range.0) * idx as f64 / (count - 1) as f64
}

/// Smallest direct gap of the two bands over the mesh.
fn min_gap_on_mesh(model: &BlochModel, n: usize) -> f64 {
    (0..n * n)
        .map(|idx| {
            let (i, j) = (idx % n, idx / n);
            let h = model.hamiltonian_reduced(i as f64 / n as f64, j as f64 / n as f64);
            match eig_hermitian(&h) {
                Ok(e) => band_gap(&e.eigenvalues, &[0]),
                Err(_) => 0.0,
            }
        })
        .fold(f64::INFINITY, f64::min)
}

/// Lower-band Chern number of the Haldane model over a `(φ, M/t₂)` grid.
pub fn phase_diagram(spec: PhaseDiagramSpec) -> Result<PhaseDiagram, InvariantError> {
    if spec.resolution < 2 {
        return Err(InvariantError::InvalidInput("resolution must be at least 2".into()));
    }
    validate_grid(spec.grid)?;
    let r = spec.resolution;
    let cells = (0..r * r)
        .into_par_iter()
        .map(|idx| {
            let phi = linspace(spec.phi_range, r, idx / r);
            let m_over_t2 = linspace(spec.m_over_t2_range, r, idx % r);
            let model = haldane(HaldaneParams::new(spec.t1, spec.t2, phi, m_over_t2 * spec.t2));
            match berry_field(&model, &[0], spec.grid, None) {
                Ok(field) => {
                    let chern = field.chern()?;
                    Ok(PhaseCell { phi, m_over_t2, chern: Some(chern), gap_min: field.min_gap })
                }
                Err(InvariantError::GapClosure { .. }) => {
                    Ok(PhaseCell { phi, m_over_t2, chern: None, gap_min: min_gap_on_mesh(&model, spec.grid) })
                }
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>, InvariantError>>()?;
    Ok(PhaseDiagram { spec, cells })
}

impl PhaseDiagram {
    pub fn cell(&self, a: usize, b: usize) -> &PhaseCell {
        &self.cells[a * self.spec.resolution + b]
    }

    /// Whether `|M/t₂| < 3√3 |sin φ|`.
    pub fn predicted_nontrivial(phi: f64, m_over_t2: f64) -> bool {
        m_over_t2.abs() < 3.0 * 3f64.sqrt() * phi.sin().abs()
    }

    /// Cells whose computed phase contradicts the analytic boundary, excluding
    /// cells within one grid step of it and cells marked as gap closures.
    pub fn boundary_mismatches(&self) -> Vec<PhaseCell> {
        let r = self.spec.resolution;
        let mut out = Vec::new();
        for a in 0..r {
            for b in 0..r {
                let cell = self.cell(a, b);
                let Some(chern) = cell.chern else { continue };
                let predicted = Self::predicted_nontrivial(cell.phi, cell.m_over_t2);
                if (chern != 0) == predicted {
                    continue;
                }
                let near_boundary = [(-1i64, 0i64), (1, 0), (0, -1), (0, 1)].iter().any(|&(da, db)| {
                    let (na, nb) = (a as i64 + da, b as i64 + db);
                    if na < 0 || nb < 0 || na >= r as i64 || nb >= r as i64 {
                        return false;
                    }
                    let nc = self.cell(na as usize, nb as usize);
                    Self::predicted_nontrivial(nc.phi, nc.m_over_t2) != predicted
                });
                if !near_boundary {
                    out.push(*cell);
                }
            }
        }
        out
    }

    /// CSV with columns `phi,m_over_t2,chern,gap_min`; gap closures are
    /// written as `gap_closure`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("phi,m_over_t2,chern,gap_min\n");
        for c in &self.cells {
            let chern = c.chern.map_or_else(|| "gap_closure".to_string(), |v| v.to_string());
            s.push_str(&format!("{:.6},{:.6},{},{:.6e}\n", c.phi, c.m_over_t2, chern, c.gap_min));
        }
        s
    }
}

/// A model whose invariant bears witness to a table entry.
#[derive(Debug, Clone)]
pub enum Witness {
    /// Chern number of the lower half of the bands.
    Chern(BlochModel),
    /// Z₂ index under the given time reversal.
    Z2(BlochModel, AntiUnitaryOp),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntryReport {
    pub label: CartanLabel,
    pub dimension: u32,
    pub values: BTreeSet<i64>,
    pub table_entry: GroupTag,
    pub consistent: bool,
}

/// Computes the witnesses' invariants and checks that they realise the
/// group in the periodic table: at least two distinct Chern numbers for a `Z`
/// entry of class A, both Z₂ values for class AII.
pub fn verify_table_entry(
    label: CartanLabel,
    dimension: u32,
    witnesses: &[Witness],
    grid: usize,
) -> Result<TableEntryReport, InvariantError> {
    if dimension != 2 || !matches!(label, CartanLabel::A | CartanLabel::AII) {
        return Err(InvariantError::InvalidInput(format!(
            "only classes A and AII in dimension 2 have witnesses, got {label} in {dimension}"
        )));
    }
    if witnesses.is_empty() {
        return Err(InvariantError::WitnessInsufficient("no witnesses".into()));
    }
    let mut values = BTreeSet::new();
    for w in witnesses {
        let v = match (label, w) {
            (CartanLabel::A, Witness::Chern(model)) => chern_number(model, &lower_bands(model), grid)?,
            (CartanLabel::AII, Witness::Z2(model, t)) => i64::from(z2_invariant(model, t, grid)?),
            _ => {
                return Err(InvariantError::WitnessInsufficient(format!(
                    "witness kind does not match class {label}"
                )))
            }
        };
        values.insert(v);
    }
    let table_entry = periodic_table().entry(label, i64::from(dimension)).expect("label is in the table");
    let consistent = match label {
        CartanLabel::A => table_entry == GroupTag::Z && values.len() >= 2,
        _ => table_entry == GroupTag::Z2 && values.contains(&0) && values.contains(&1),
    };
    Ok(TableEntryReport { label, dimension, values, table_entry, consistent })
}

/// Haldane models on both sides of the phase boundary and both signs of `φ`.
pub fn haldane_witnesses() -> Vec<Witness> {
    [(PI / 2.0, 0.0), (-PI / 2.0, 0.0), (PI / 2.0, 2.0)]
        .iter()
        .map(|&(phi, m)| Witness::Chern(haldane(HaldaneParams::new(1.0, 0.2, phi, m))))
        .collect()
}

/// Kane-Mele models on both sides of the phase boundary.
pub fn kane_mele_witnesses() -> Vec<Witness> {
    [0.1, 0.4]
        .iter()
        .map(|&m| Witness::Z2(kane_mele(KaneMeleParams::new(1.0, 0.06, 0.0, m)), kane_mele_time_reversal()))
        .collect()
}
