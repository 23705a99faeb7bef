use std::fs;

use serde_json::{json, Map, Value};
use tenfold_core::charclass::{integrality_check, CharClassError, CharacteristicNumbers, SeriesId};
use tenfold_core::clifford::{
    chessboard, classify_complex, classify_real, classify_real_recursive, CliffordSignature, ComplexCliffordIndex,
};
use tenfold_core::invariants::{berry_field, lower_bands, phase_diagram, z2_invariant, PhaseDiagram, PhaseDiagramSpec};
use tenfold_core::models::{
    detect_az_class, haldane, kane_mele, kane_mele_time_reversal, check_antiunitary, BlochModel, HaldaneParams,
    KaneMeleParams, ModelSpec,
};
use tenfold_core::rep::{complex_grothendieck, complex_restriction_quotient, grothendieck, restriction_quotient};
use tenfold_core::tenfold::{index_table, k_group, ko_grid, ko_group, periodic_table, Family};

use crate::args::{
    ChernArgs, ChessboardArgs, ClassifyArgs, Command, FamilyArgs, GenusArgs, ModelAction, ModelCheckArgs, ModelKind,
    PhaseDiagramArgs, SeriesArg, SymmetryArg, Z2Args,
};
use crate::render;
use crate::{CliError, Report};

pub const GOLDEN_CHESSBOARD: &str = include_str!("../../../tables/chessboard.json");
pub const GOLDEN_PERIODIC_TABLE: &str = include_str!("../../../tables/periodic_table.json");
pub const GOLDEN_INDEX_REAL: &str = include_str!("../../../tables/index_table_real.json");
pub const GOLDEN_INDEX_COMPLEX: &str = include_str!("../../../tables/index_table_complex.json");
pub const GOLDEN_KO_GRID: &str = include_str!("../../../tables/ko_grid.json");

pub fn dispatch(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Chessboard(a) => chessboard_cmd(a),
        Command::Classify(a) => classify_cmd(a),
        Command::Groups(a) => groups_cmd(a),
        Command::KoTable(a) => ko_table_cmd(a),
        Command::IndexTable(a) => index_table_cmd(a),
        Command::PeriodicTable => periodic_table_cmd(),
        Command::Genus(a) => genus_cmd(a),
        Command::Model { action: ModelAction::Check(a) } => model_check_cmd(a),
        Command::Chern(a) => chern_cmd(a),
        Command::Z2(a) => z2_cmd(a),
        Command::PhaseDiagram(a) => phase_diagram_cmd(a),
        Command::VerifyAll => Ok(crate::verify::report()),
    }
}

fn params<T: serde::Serialize>(args: &T) -> Value {
    serde_json::to_value(args).expect("argument structs serialize")
}

fn family(a: &FamilyArgs) -> Family {
    if a.complex {
        Family::Complex
    } else {
        Family::Real
    }
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn labels(prefix: &str, n: u32) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}={i}")).collect()
}

pub fn chessboard_payload(rows: u32, cols: u32) -> Value {
    let entries: Vec<Vec<String>> = chessboard(rows, cols).iter().map(|r| strings(r)).collect();
    json!({ "rows": rows, "cols": cols, "row_index": "s", "col_index": "n", "entries": entries })
}

fn chessboard_cmd(a: ChessboardArgs) -> Result<Report, CliError> {
    if a.rows == 0 || a.cols == 0 {
        return Err(CliError::Usage("--rows and --cols must be positive".into()));
    }
    if a.rows + a.cols > 120 {
        return Err(CliError::Usage("--rows + --cols must not exceed 120".into()));
    }
    let board = chessboard(a.rows, a.cols);
    let rows: Vec<(String, Vec<String>)> =
        board.iter().enumerate().map(|(s, r)| (format!("s={s}"), strings(r))).collect();
    let text = render::grid("s\\n", &labels("n", a.cols), &rows);
    let header: Vec<String> = std::iter::once("s".to_string()).chain((0..a.cols).map(|n| format!("n{n}"))).collect();
    let body: Vec<Vec<String>> =
        board.iter().enumerate().map(|(s, r)| std::iter::once(s.to_string()).chain(strings(r)).collect()).collect();
    Ok(Report {
        command: "chessboard",
        params: params(&a),
        payload: chessboard_payload(a.rows, a.cols),
        text,
        csv: Some(render::csv(&header, &body)),
        failure: None,
    })
}

fn classify_cmd(a: ClassifyArgs) -> Result<Report, CliError> {
    let (payload, text, failure) = if let Some(n) = a.n {
        let alg = classify_complex(ComplexCliffordIndex { n });
        let payload = json!({
            "family": "complex",
            "generators": n,
            "algebra": alg.to_string(),
            "ring": alg.ring.symbol().to_string(),
            "block": alg.block,
            "summands": alg.summands,
        });
        (payload, format!("{alg}\n"), None)
    } else {
        if a.p + a.q > 120 {
            return Err(CliError::Usage("p + q must not exceed 120".into()));
        }
        let sig = CliffordSignature::new(a.p, a.q);
        let alg = classify_real(sig);
        let recursive = classify_real_recursive(sig);
        let payload = json!({
            "family": "real",
            "signature": sig,
            "algebra": alg.to_string(),
            "ring": alg.ring.symbol().to_string(),
            "block": alg.block,
            "summands": alg.summands,
            "residue": sig.residue(),
            "recursive": recursive.to_string(),
            "agree": alg == recursive,
        });
        let failure = (alg != recursive).then(|| format!("{sig}: lookup gives {alg}, recursion gives {recursive}"));
        (payload, format!("{alg}\n"), failure)
    };
    Ok(Report { command: "classify", params: params(&a), payload, text, csv: None, failure })
}

fn groups_cmd(a: FamilyArgs) -> Result<Report, CliError> {
    let fam = family(&a);
    let mut rows = Vec::new();
    let mut records = Vec::new();
    let mut mismatch = None;
    for k in 0..i64::from(fam.period()) {
        let (rec, quotient, point) = match fam {
            Family::Real => (grothendieck(k), restriction_quotient(k), ko_group(k)),
            Family::Complex => (complex_grothendieck(k), complex_restriction_quotient(k), k_group(k)),
        };
        if quotient != point && mismatch.is_none() {
            mismatch = Some(format!("k={k}: quotient {quotient} differs from {point}"));
        }
        rows.push(vec![
            k.to_string(),
            rec.group.to_string(),
            rec.irrep_real_dim.to_string(),
            rec.irrep_count.to_string(),
            quotient.to_string(),
            point.to_string(),
            if quotient == point { "yes" } else { "no" }.to_string(),
        ]);
        records.push(json!({
            "k": k,
            "grothendieck": rec.group,
            "irrep_real_dim": rec.irrep_real_dim,
            "irrep_count": rec.irrep_count,
            "quotient": quotient,
            "point_group": point,
            "agree": quotient == point,
        }));
    }
    let point_name = match fam {
        Family::Real => "KO^-k",
        Family::Complex => "K^-k",
    };
    let header = strings(&["k", "M_k", "irrep_dim", "irreps", "quotient", point_name, "agree"]);
    Ok(Report {
        command: "groups",
        params: params(&a),
        payload: json!({ "family": fam, "rows": records }),
        text: render::table(&header, &rows),
        csv: Some(render::csv(&header, &rows)),
        failure: mismatch,
    })
}

pub fn ko_table_payload(fam: Family) -> Value {
    let entries: Vec<Vec<String>> = match fam {
        Family::Real => ko_grid().iter().map(|r| strings(r)).collect(),
        Family::Complex => (0..2i64).map(|s| (0..2i64).map(|n| k_group(s - n).to_string()).collect()).collect(),
    };
    match fam {
        Family::Real => json!({ "entries": entries }),
        Family::Complex => json!({ "family": "complex", "entries": entries }),
    }
}

fn grid_report(command: &'static str, params: Value, payload: Value, entries: Vec<Vec<String>>) -> Report {
    let n = entries.len() as u32;
    let rows: Vec<(String, Vec<String>)> =
        entries.iter().enumerate().map(|(s, r)| (format!("s={s}"), r.clone())).collect();
    let header: Vec<String> = std::iter::once("s".to_string()).chain((0..n).map(|i| format!("n{i}"))).collect();
    let body: Vec<Vec<String>> = entries
        .iter()
        .enumerate()
        .map(|(s, r)| std::iter::once(s.to_string()).chain(r.iter().cloned()).collect())
        .collect();
    Report {
        command,
        params,
        payload,
        text: render::grid("s\\n", &labels("n", n), &rows),
        csv: Some(render::csv(&header, &body)),
        failure: None,
    }
}

fn ko_table_cmd(a: FamilyArgs) -> Result<Report, CliError> {
    let fam = family(&a);
    let payload = ko_table_payload(fam);
    let entries = entries_of(&payload);
    Ok(grid_report("ko-table", params(&a), payload, entries))
}

pub fn index_table_payload(fam: Family) -> Value {
    let entries: Vec<Vec<&str>> = index_table(fam).iter().map(|r| r.iter().map(|f| f.name()).collect()).collect();
    json!({ "family": fam, "entries": entries })
}

fn index_table_cmd(a: FamilyArgs) -> Result<Report, CliError> {
    let fam = family(&a);
    let symbols: Vec<Vec<String>> =
        index_table(fam).iter().map(|r| r.iter().map(|f| f.symbol().to_string()).collect()).collect();
    Ok(grid_report("index-table", params(&a), index_table_payload(fam), symbols))
}

fn entries_of(payload: &Value) -> Vec<Vec<String>> {
    payload["entries"]
        .as_array()
        .map(|rows| {
            rows.iter()
                .map(|r| r.as_array().into_iter().flatten().map(|c| c.as_str().unwrap_or("").to_string()).collect())
                .collect()
        })
        .unwrap_or_default()
}

pub fn periodic_table_payload() -> Value {
    serde_json::to_value(periodic_table()).expect("table serializes")
}

fn periodic_table_cmd() -> Result<Report, CliError> {
    let table = periodic_table();
    let header: Vec<String> = ["label", "T", "C", "S"]
        .iter()
        .map(|s| s.to_string())
        .chain((0..8).map(|d| format!("d={d}")))
        .collect();
    let rows: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|r| {
            [r.label.to_string(), r.t.to_string(), r.c.to_string(), r.s.to_string()]
                .into_iter()
                .chain(strings(&r.groups))
                .collect()
        })
        .collect();
    let csv_header: Vec<String> =
        header.iter().map(|h| h.strip_prefix("d=").map_or(h.clone(), |d| format!("d{d}"))).collect();
    Ok(Report {
        command: "periodic-table",
        params: json!({}),
        payload: periodic_table_payload(),
        text: render::table(&header, &rows),
        csv: Some(render::csv(&csv_header, &rows)),
        failure: None,
    })
}

fn charclass_err(e: CharClassError) -> CliError {
    match e {
        CharClassError::CutoffTooLarge { .. }
        | CharClassError::Parse(_)
        | CharClassError::DegreeMismatch { .. }
        | CharClassError::KindMismatch { .. }
        | CharClassError::CutoffTooSmall { .. } => CliError::Usage(e.to_string()),
        _ => CliError::Failure(e.to_string()),
    }
}

fn read_numbers(path: &std::path::Path) -> Result<Vec<(String, String)>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Usage(format!("{}: expected an object of monomials", path.display())))?;
    obj.iter()
        .map(|(k, v)| match v {
            Value::String(s) => Ok((k.clone(), s.clone())),
            Value::Number(n) if n.is_i64() => Ok((k.clone(), n.to_string())),
            _ => Err(CliError::Usage(format!("{k}: value must be an integer or a rational string"))),
        })
        .collect()
}

fn genus_cmd(a: GenusArgs) -> Result<Report, CliError> {
    let id = match a.series {
        SeriesArg::Ahat => SeriesId::Ahat,
        SeriesArg::Todd => SeriesId::Todd,
    };
    let kind = id.kind();
    let series = id.series(a.degree).map_err(charclass_err)?;
    let terms = series.sorted_terms();
    let coefficients: Vec<Value> =
        terms.iter().map(|(m, c)| json!({ "monomial": m.render(kind), "value": c.to_string() })).collect();
    let name = match id {
        SeriesId::Ahat => "Â",
        SeriesId::Todd => "Td",
    };
    let mut text = format!("{name} through degree {}\n", a.degree);
    let rows: Vec<Vec<String>> = terms.iter().map(|(m, c)| vec![m.render(kind), c.to_string()]).collect();
    text.push_str(&render::table(&strings(&["monomial", "coefficient"]), &rows));
    let mut payload = Map::new();
    payload.insert("series".into(), json!(a.series));
    payload.insert("cutoff".into(), json!(a.degree));
    payload.insert("coefficients".into(), Value::Array(coefficients));
    if let Some(path) = &a.eval {
        let pairs = read_numbers(path)?;
        let dims: Vec<u32> = pairs
            .iter()
            .map(|(m, _)| {
                tenfold_core::charclass::Monomial::parse(m).map(|(_, mono)| mono.degree(kind)).map_err(charclass_err)
            })
            .collect::<Result<_, _>>()?;
        let dimension = *dims.first().ok_or_else(|| CliError::Usage("no characteristic numbers given".into()))?;
        if dimension > a.degree {
            return Err(CliError::Usage(format!("--degree {} is below the dimension {dimension}", a.degree)));
        }
        let nums = CharacteristicNumbers::from_pairs(dimension, pairs.iter().map(|(m, v)| (m.as_str(), v.as_str())))
            .map_err(charclass_err)?;
        let value = tenfold_core::charclass::evaluate_genus(&series, &nums).map_err(charclass_err)?;
        let k = a.k.unwrap_or(i64::from(dimension));
        text.push_str(&format!("{name}[M] = {value}  (dimension {dimension})\n"));
        let index = match integrality_check(id, &nums, k) {
            Ok(iv) => {
                text.push_str(&format!("index ({}, k={k}) = {}\n", iv.form.symbol(), iv.value));
                json!({ "k": k, "form": iv.form.name(), "value": iv.value })
            }
            Err(CharClassError::NoPrescription { .. }) => {
                text.push_str(&format!("index: no integer prescription at k={k}\n"));
                Value::Null
            }
            Err(e) => return Err(CliError::Failure(e.to_string())),
        };
        payload.insert(
            "evaluation".into(),
            json!({ "dimension": dimension, "genus": value.to_string(), "index": index }),
        );
    }
    Ok(Report {
        command: "genus",
        params: params(&a),
        payload: Value::Object(payload),
        text,
        csv: Some(render::csv(&strings(&["monomial", "coefficient"]), &rows)),
        failure: None,
    })
}

fn model_check_cmd(a: ModelCheckArgs) -> Result<Report, CliError> {
    let text = fs::read_to_string(&a.file).map_err(|e| CliError::Usage(format!("{}: {e}", a.file.display())))?;
    let spec = ModelSpec::from_json(&text).map_err(|e| CliError::Usage(e.to_string()))?;
    let model = spec.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let t = spec.time_reversal().map_err(|e| CliError::Usage(e.to_string()))?;
    let c = spec.charge_conjugation().map_err(|e| CliError::Usage(e.to_string()))?;
    let op = match a.symmetry {
        SymmetryArg::T => t.clone(),
        SymmetryArg::C => c.clone().ok_or_else(|| CliError::Usage("the model file defines no C operator".into()))?,
    };
    let report = check_antiunitary(&model, &op, a.grid).map_err(|e| CliError::Usage(e.to_string()))?;
    let detection = detect_az_class(&model, Some(&t), c.as_ref(), a.grid).map_err(|e| CliError::Failure(e.to_string()))?;
    let sym = match a.symmetry {
        SymmetryArg::T => "T",
        SymmetryArg::C => "C",
    };
    let mut text = format!(
        "{sym}: {} (max deviation {:.3e})\n",
        if report.passed { "pass" } else { "fail" },
        report.max_deviation
    );
    text.push_str(&format!(
        "class: {} (T={}, C={}, S={})\n",
        detection.label, detection.t, detection.c, detection.s
    ));
    let failure = (!report.passed).then(|| format!("{sym} deviation {:.3e} exceeds tolerance", report.max_deviation));
    Ok(Report {
        command: "model check",
        params: params(&a),
        payload: json!({
            "bands": model.bands,
            "symmetry": sym,
            "passed": report.passed,
            "max_deviation": report.max_deviation,
            "class": detection,
        }),
        text,
        csv: None,
        failure,
    })
}

fn invariant_err(e: tenfold_core::invariants::InvariantError) -> CliError {
    use tenfold_core::invariants::InvariantError as E;
    match e {
        E::InvalidInput(_) => CliError::Usage(e.to_string()),
        _ => CliError::Failure(e.to_string()),
    }
}

fn chern_model(a: &ChernArgs) -> (BlochModel, Value) {
    match a.model {
        ModelKind::Haldane => (
            haldane(HaldaneParams::new(a.t1, a.t2, a.phi, a.m)),
            json!({ "model": "haldane", "t1": a.t1, "t2": a.t2, "phi": a.phi, "M": a.m, "grid": a.grid }),
        ),
        ModelKind::KaneMele => (
            kane_mele(KaneMeleParams::new(a.t, a.lso, a.lr, a.m)),
            json!({ "model": "kane-mele", "t": a.t, "lso": a.lso, "lr": a.lr, "M": a.m, "grid": a.grid }),
        ),
    }
}

fn chern_cmd(a: ChernArgs) -> Result<Report, CliError> {
    let (model, params) = chern_model(&a);
    let occupied = lower_bands(&model);
    let field = berry_field(&model, &occupied, a.grid, None).map_err(invariant_err)?;
    let chern = field.chern().map_err(invariant_err)?;
    Ok(Report {
        command: "chern",
        params,
        payload: json!({
            "chern": chern,
            "occupied": occupied,
            "raw": field.chern_raw(),
            "min_gap": field.min_gap,
        }),
        text: format!("{chern}\n"),
        csv: None,
        failure: None,
    })
}

fn z2_cmd(a: Z2Args) -> Result<Report, CliError> {
    if a.model != ModelKind::KaneMele {
        return Err(CliError::Usage("z2 needs a time-reversal invariant model: --model kane-mele".into()));
    }
    let model = kane_mele(KaneMeleParams::new(a.t, a.lso, a.lr, a.m));
    let t = kane_mele_time_reversal();
    let z2 = z2_invariant(&model, &t, a.grid).map_err(invariant_err)?;
    Ok(Report {
        command: "z2",
        params: params(&a),
        payload: json!({ "z2": z2 }),
        text: format!("{z2}\n"),
        csv: None,
        failure: None,
    })
}

fn phase_symbol(c: Option<i64>) -> char {
    match c {
        None => 'x',
        Some(0) => '.',
        Some(1) => '+',
        Some(-1) => '-',
        Some(_) => '*',
    }
}

fn phase_map(pd: &PhaseDiagram) -> String {
    let r = pd.spec.resolution;
    let mut s = String::new();
    for b in (0..r).rev() {
        let line: String = (0..r).map(|a| phase_symbol(pd.cell(a, b).chern)).collect();
        s.push_str(&format!("{:>7.2} {line}\n", pd.cell(0, b).m_over_t2));
    }
    s.push_str(&format!(
        "M/t2 vs phi in [{:.4}, {:.4}]; '+' C=1, '-' C=-1, '.' C=0, 'x' gap closes\n",
        pd.spec.phi_range.0, pd.spec.phi_range.1
    ));
    s
}

fn phase_diagram_cmd(a: PhaseDiagramArgs) -> Result<Report, CliError> {
    if a.model != ModelKind::Haldane {
        return Err(CliError::Usage("phase-diagram supports --model haldane".into()));
    }
    let spec = PhaseDiagramSpec { t1: a.t1, t2: a.t2, resolution: a.resolution, grid: a.grid, ..Default::default() };
    let pd = phase_diagram(spec).map_err(invariant_err)?;
    let csv = pd.to_csv();
    let mismatches = pd.boundary_mismatches();
    let closures = pd.cells.iter().filter(|c| c.chern.is_none()).count();
    let mut text = phase_map(&pd);
    text.push_str(&format!(
        "{} cells, {closures} gap closures, {} off the analytic boundary\n",
        pd.cells.len(),
        mismatches.len()
    ));
    if let Some(path) = &a.out {
        fs::write(path, &csv).map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
        text.push_str(&format!("wrote {}\n", path.display()));
    }
    let cells: Vec<Value> = pd
        .cells
        .iter()
        .map(|c| json!({ "phi": c.phi, "m_over_t2": c.m_over_t2, "chern": c.chern, "gap_min": c.gap_min }))
        .collect();
    Ok(Report {
        command: "phase-diagram",
        params: params(&a),
        payload: json!({
            "resolution": pd.spec.resolution,
            "grid": pd.spec.grid,
            "gap_closures": closures,
            "boundary_mismatches": mismatches.len(),
            "cells": cells,
        }),
        text,
        csv: Some(csv),
        failure: None,
    })
}
