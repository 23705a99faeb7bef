//! Cross-module consistency suites behind `tenfold verify-all`.

use std::f64::consts::PI;

use serde::Serialize;
use serde_json::{json, Value};
use tenfold_core::charclass::{
    ahat_series, evaluate_genus, integrality_check, todd_series, CharacteristicNumbers, SeriesId,
};
use tenfold_core::clifford::{classify_real, classify_real_recursive, verify_isomorphisms, CliffordSignature};
use tenfold_core::invariants::{
    chern_number, haldane_witnesses, kane_mele_witnesses, phase_diagram, verify_table_entry, z2_invariant,
    PhaseDiagramSpec,
};
use tenfold_core::models::{haldane, kane_mele, kane_mele_time_reversal, HaldaneParams, KaneMeleParams};
use tenfold_core::rep::{
    build_generators, commutant_dimension, commutant_dimension_dense, complex_restriction_quotient,
    irreducible_pieces, restriction_quotient, verify_relations,
};
use tenfold_core::tenfold::{
    k_group, ko_group, periodic_table, periodic_table_from_homotopy, CartanLabel, Family, GroupTag,
};

use crate::commands::{
    chessboard_payload, index_table_payload, ko_table_payload, periodic_table_payload, GOLDEN_CHESSBOARD,
    GOLDEN_INDEX_COMPLEX, GOLDEN_INDEX_REAL, GOLDEN_KO_GRID, GOLDEN_PERIODIC_TABLE,
};
use crate::{pretty, Report};

type Check = Result<String, String>;

/// A named suite.
pub type Suite = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    };
}

/// Result of one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Name and body of every suite, in execution order.
pub fn suites() -> Vec<Suite> {
    vec![
        ("chessboard", chessboard_golden),
        ("dual-path", dual_path),
        ("isomorphisms", isomorphisms),
        ("representations", representations),
        ("abs-chain", abs_chain),
        ("tables", tables),
        ("genus-coefficients", genus_coefficients),
        ("genus-evaluation", genus_evaluation),
        ("haldane", haldane_suite),
        ("kane-mele", kane_mele_suite),
        ("table-witnesses", table_witnesses),
    ]
}

pub fn run_suite(name: &str) -> Option<SuiteOutcome> {
    suites().into_iter().find(|(n, _)| *n == name).map(|(name, f)| outcome(name, f))
}

fn outcome(name: &'static str, f: fn() -> Check) -> SuiteOutcome {
    match f() {
        Ok(detail) => SuiteOutcome { name, passed: true, detail },
        Err(detail) => SuiteOutcome { name, passed: false, detail },
    }
}

pub fn run_all() -> Vec<SuiteOutcome> {
    suites().into_iter().map(|(name, f)| outcome(name, f)).collect()
}

pub(crate) fn report() -> Report {
    let results = run_all();
    let mut text = String::new();
    for r in &results {
        text.push_str(&format!("{} {}: {}\n", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail));
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    text.push_str(&format!("{} suites, {failed} failed\n", results.len()));
    let failure = results.iter().find(|r| !r.passed).map(|r| format!("{}: {}", r.name, r.detail));
    Report {
        command: "verify-all",
        params: json!({}),
        payload: json!({ "passed": failed == 0, "suites": results }),
        text,
        csv: None,
        failure,
    }
}

fn golden(name: &str, computed: &Value, expected: &str) -> Check {
    let rendered = pretty(computed);
    if rendered == expected {
        return Ok(format!("{name} matches"));
    }
    let want: Value = serde_json::from_str(expected).map_err(|e| format!("{name}: unreadable golden file: {e}"))?;
    if &want == computed {
        Err(format!("{name}: same content, different formatting"))
    } else {
        Err(format!("{name}: differs from the golden file"))
    }
}

fn chessboard_golden() -> Check {
    golden("chessboard 8x8", &chessboard_payload(8, 8), GOLDEN_CHESSBOARD)
}

fn dual_path() -> Check {
    let mut count = 0;
    for p in 0..=16 {
        for q in 0..=16 {
            let sig = CliffordSignature::new(p, q);
            let (a, b) = (classify_real(sig), classify_real_recursive(sig));
            ensure!(a == b, "{sig}: lookup {a}, recursion {b}");
            ensure!(a.real_dim() == sig.algebra_dim(), "{sig}: {a} has the wrong dimension");
            count += 1;
        }
    }
    Ok(format!("{count} signatures agree"))
}

fn isomorphisms() -> Check {
    let report = verify_isomorphisms(12);
    if let Some(v) = report.violations.first() {
        return Err(format!("{:?} at {}: {} vs {}", v.rule, v.base, v.lhs, v.rhs));
    }
    Ok(format!("{} instances, no violations", report.checked))
}

fn representations() -> Check {
    let mut pieces_checked = 0;
    for n in 0..=10u32 {
        for p in 0..=n {
            let sig = CliffordSignature::new(p, n - p);
            let alg = classify_real(sig);
            let gens = build_generators(sig).map_err(|e| format!("{sig}: {e}"))?;
            ensure!(verify_relations(&gens), "{sig}: generator relations fail");
            let pieces = irreducible_pieces(&gens).map_err(|e| format!("{sig}: {e}"))?;
            ensure!(pieces.len() == usize::from(alg.summands), "{sig}: {} irreducible pieces", pieces.len());
            for piece in &pieces {
                ensure!(verify_relations(piece), "{sig}: piece relations fail");
                let dim = commutant_dimension(piece).map_err(|e| format!("{sig}: {e}"))?;
                ensure!(
                    dim == alg.ring.real_dim() as usize,
                    "{sig}: commutant has dimension {dim}, ring {} has {}",
                    alg.ring.symbol(),
                    alg.ring.real_dim()
                );
                if piece.dimension <= 8 {
                    let dense = commutant_dimension_dense(piece).map_err(|e| format!("{sig}: {e}"))?;
                    ensure!(dense == dim, "{sig}: dense nullspace {dense} vs exact {dim}");
                }
                pieces_checked += 1;
            }
        }
    }
    Ok(format!("{pieces_checked} irreducible pieces, p+q <= 10"))
}

fn abs_chain() -> Check {
    for k in 0..8 {
        let (quot, ko) = (restriction_quotient(k), ko_group(k));
        ensure!(quot == ko, "k={k}: quotient {quot}, KO {ko}");
    }
    for k in 0..2 {
        let (quot, kk) = (complex_restriction_quotient(k), k_group(k));
        ensure!(quot == kk, "complex k={k}: quotient {quot}, K {kk}");
    }
    Ok("quotients equal KO^-k for k=0..7 and K^-k for k=0..1".into())
}

fn tables() -> Check {
    golden("periodic table", &periodic_table_payload(), GOLDEN_PERIODIC_TABLE)?;
    golden("real index table", &index_table_payload(Family::Real), GOLDEN_INDEX_REAL)?;
    golden("complex index table", &index_table_payload(Family::Complex), GOLDEN_INDEX_COMPLEX)?;
    golden("KO grid", &ko_table_payload(Family::Real), GOLDEN_KO_GRID)?;
    let table = periodic_table();
    ensure!(table == periodic_table_from_homotopy(), "homotopy reindexing gives a different table");
    let real: Vec<_> = CartanLabel::REAL.iter().map(|&l| table.row(l).expect("real row")).collect();
    for pair in real.windows(2) {
        let (prev, cur) = (pair[0], pair[1]);
        for d in 0..8 {
            ensure!(
                cur.groups[(d + 1) % 8] == prev.groups[d],
                "{} is not {} shifted right by one",
                cur.label,
                prev.label
            );
        }
    }
    for row in &real {
        let s = i64::from(row.label.space_index());
        for (d, g) in row.groups.iter().enumerate() {
            let q = restriction_quotient(s - d as i64);
            ensure!(*g == q, "{} d={d}: table {g}, quotient {q}", row.label);
        }
    }
    ensure!(table.entry(CartanLabel::A, 2) == Some(GroupTag::Z), "class A in d=2 is not Z");
    ensure!(table.entry(CartanLabel::AII, 2) == Some(GroupTag::Z2), "class AII in d=2 is not Z2");
    Ok("periodic, index and KO tables match; Bott shift and ABS consistency hold".into())
}

fn genus_coefficients() -> Check {
    let a = ahat_series(12).map_err(|e| e.to_string())?;
    let expected = [
        ("p1", "-1/24"),
        ("p1^2", "7/5760"),
        ("p2", "-1/1440"),
        ("p1^3", "-31/967680"),
        ("p1*p2", "11/241920"),
        ("p3", "-1/60480"),
    ];
    for (mono, value) in expected {
        let got = a.coefficient_of(mono).map_err(|e| e.to_string())?.to_string();
        ensure!(got == value, "Â {mono}: {got}, expected {value}");
    }
    let t = todd_series(6).map_err(|e| e.to_string())?;
    for (mono, value) in [("c1", "1/2"), ("c1^2", "1/12"), ("c2", "1/12"), ("c1*c2", "1/24")] {
        let got = t.coefficient_of(mono).map_err(|e| e.to_string())?.to_string();
        ensure!(got == value, "Td {mono}: {got}, expected {value}");
    }
    Ok("Â through degree 12 and Td through degree 6".into())
}

fn genus_evaluation() -> Check {
    let k3 = CharacteristicNumbers::from_pairs(4, [("p1", "-48")]).map_err(|e| e.to_string())?;
    let ahat = evaluate_genus(&ahat_series(4).map_err(|e| e.to_string())?, &k3).map_err(|e| e.to_string())?;
    ensure!(ahat.to_string() == "2", "Â(K3) = {ahat}");
    let idx = integrality_check(SeriesId::Ahat, &k3, 4).map_err(|e| e.to_string())?;
    ensure!(idx.value == "1", "Â(K3)/2 = {}", idx.value);
    let cp2 = CharacteristicNumbers::from_pairs(4, [("c1^2", "9"), ("c2", "3")]).map_err(|e| e.to_string())?;
    let td = evaluate_genus(&todd_series(4).map_err(|e| e.to_string())?, &cp2).map_err(|e| e.to_string())?;
    ensure!(td.to_string() == "1", "Td(CP2) = {td}");
    Ok("Â(K3) = 2, Â(K3)/2 = 1, Td(CP2) = 1".into())
}

fn haldane_suite() -> Check {
    let c = |phi: f64, m: f64| {
        chern_number(&haldane(HaldaneParams::new(1.0, 0.2, phi, m)), &[0], 24).map_err(|e| e.to_string())
    };
    let top = c(PI / 2.0, 0.0)?;
    ensure!(top.abs() == 1, "C(φ=π/2, M=0) = {top}");
    ensure!(c(-PI / 2.0, 0.0)? == -top, "reversing φ does not flip the Chern number");
    let trivial = c(PI / 2.0, 2.0)?;
    ensure!(trivial == 0, "C(φ=π/2, M=2) = {trivial}");
    let pd = phase_diagram(PhaseDiagramSpec::default()).map_err(|e| e.to_string())?;
    let bad = pd.boundary_mismatches();
    if let Some(cell) = bad.first() {
        return Err(format!(
            "{} cells off the boundary, first at φ={:.3}, M/t2={:.3}",
            bad.len(),
            cell.phi,
            cell.m_over_t2
        ));
    }
    Ok(format!("C = {top}, 0 off-boundary cells in a 41x41 sweep"))
}

fn kane_mele_suite() -> Check {
    let t = kane_mele_time_reversal();
    let z = |lr: f64, m: f64| {
        z2_invariant(&kane_mele(KaneMeleParams::new(1.0, 0.06, lr, m)), &t, 24).map_err(|e| e.to_string())
    };
    for (m, want) in [(0.1, 1), (0.4, 0)] {
        for lr in [0.0, 0.03] {
            let got = z(lr, m)?;
            ensure!(got == want, "Z2(M={m}, λR={lr}) = {got}, expected {want}");
        }
    }
    Ok("Z2 = 1 at M=0.1 and 0 at M=0.4, with and without Rashba coupling".into())
}

fn table_witnesses() -> Check {
    let a = verify_table_entry(CartanLabel::A, 2, &haldane_witnesses(), 24).map_err(|e| e.to_string())?;
    ensure!(a.consistent, "class A witnesses give {:?}", a.values);
    let aii = verify_table_entry(CartanLabel::AII, 2, &kane_mele_witnesses(), 24).map_err(|e| e.to_string())?;
    ensure!(aii.consistent, "class AII witnesses give {:?}", aii.values);
    Ok(format!("A: {:?} realise {}, AII: {:?} realise {}", a.values, a.table_entry, aii.values, aii.table_entry))
}
