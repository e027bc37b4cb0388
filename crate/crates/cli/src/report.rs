//! Text and JSON rendering of run reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use sigcalc_core::biquot::{FixedPointDatum, SignatureReport};
use sigcalc_core::homsig::HomogeneousReport;

use crate::config::Emit;
use crate::run::{Outcome, RunReport};

#[derive(Debug, Serialize)]
struct WeightJson {
    root: [usize; 2],
    value: String,
    signed: String,
}

#[derive(Debug, Serialize)]
struct FixedPointJson {
    index: usize,
    representative: Vec<(usize, usize, String)>,
    horizontal: Vec<String>,
    circle_generator: Vec<String>,
    weights: Vec<WeightJson>,
    orientation_flip: i32,
    contribution: i32,
    contribution_orientdet: i32,
}

#[derive(Debug, Serialize)]
struct CosetJson {
    word: Vec<usize>,
    inversions: usize,
    contribution: i64,
}

#[derive(Debug, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
enum ReportJson {
    Homogeneous {
        real_dimension: usize,
        euler_characteristic: usize,
        cosets: Vec<CosetJson>,
        contributions: Vec<i64>,
        signature_up_to_sign: i64,
        checks: BTreeMap<&'static str, bool>,
        notes: Vec<String>,
    },
    Biquotient {
        n: usize,
        real_dimension: usize,
        fixed_points: Vec<FixedPointJson>,
        contributions: Vec<i64>,
        signature_up_to_sign: i64,
        cross_checks: BTreeMap<String, bool>,
        checks: BTreeMap<&'static str, bool>,
        notes: Vec<String>,
    },
}

fn space_name(&(j, k): &(usize, usize)) -> String {
    format!("V{j},{k}")
}

fn fixed_point_json(index: usize, p: &FixedPointDatum) -> FixedPointJson {
    FixedPointJson {
        index,
        representative: p.rep.entries(),
        horizontal: p.horizontal_spaces.iter().map(space_name).collect(),
        circle_generator: p
            .z
            .diagonal_values()
            .iter()
            .map(|v| v.to_string())
            .collect(),
        weights: p
            .weights
            .iter()
            .map(|w| WeightJson {
                root: [w.j, w.k],
                value: w.value.to_string(),
                signed: w.signed_value().to_string(),
            })
            .collect(),
        orientation_flip: p.orientation_flip,
        contribution: p.contribution,
        contribution_orientdet: p.contribution_orientdet,
    }
}

fn to_json(report: &RunReport) -> ReportJson {
    let contributions = report.contributions();
    let signature_up_to_sign = report.signature_up_to_sign();
    let checks = report.checks.clone();
    match &report.outcome {
        Outcome::Homogeneous(r) => ReportJson::Homogeneous {
            real_dimension: r.real_dimension,
            euler_characteristic: r.euler_characteristic,
            cosets: r
                .cosets
                .iter()
                .map(|c| CosetJson {
                    word: c.word.clone(),
                    inversions: c.inversions,
                    contribution: c.contribution,
                })
                .collect(),
            contributions,
            signature_up_to_sign,
            checks,
            notes: report.notes.clone(),
        },
        Outcome::Biquotient(r) => ReportJson::Biquotient {
            n: r.n,
            real_dimension: r.real_dimension,
            fixed_points: r
                .fixed_points
                .iter()
                .enumerate()
                .map(|(i, p)| fixed_point_json(i + 1, p))
                .collect(),
            contributions,
            signature_up_to_sign,
            cross_checks: r.cross_checks.clone(),
            checks,
            notes: r.notes.iter().chain(&report.notes).cloned().collect(),
        },
    }
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

fn homogeneous_text(r: &HomogeneousReport, out: &mut String) {
    let _ = writeln!(
        out,
        "homogeneous space of real dimension {}",
        r.real_dimension
    );
    let _ = writeln!(out, "euler characteristic = {}", r.euler_characteristic);
    let rows: Vec<Vec<String>> = r
        .cosets
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let word: Vec<String> = c.word.iter().map(|s| format!("s{}", s + 1)).collect();
            vec![
                (i + 1).to_string(),
                if word.is_empty() {
                    "e".into()
                } else {
                    word.join(" ")
                },
                c.inversions.to_string(),
                format!("{:+}", c.contribution),
            ]
        })
        .collect();
    out.push_str(&table(
        &["#", "coset representative", "inversions", "contribution"],
        &rows,
    ));
}

fn biquotient_text(r: &SignatureReport, out: &mut String) {
    let _ = writeln!(
        out,
        "biquotient of SU({}) of real dimension {}",
        r.n, r.real_dimension
    );
    let _ = writeln!(out, "isolated fixed points = {}", r.fixed_points.len());
    let rows: Vec<Vec<String>> = r
        .fixed_points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let rep: Vec<String> = p
                .rep
                .entries()
                .into_iter()
                .map(|(a, b, t)| format!("({a},{b})={t}"))
                .collect();
            let spaces: Vec<String> = p.horizontal_spaces.iter().map(space_name).collect();
            let weights: Vec<String> = p.weights.iter().map(|w| w.value.to_string()).collect();
            let signs: Vec<&str> = p
                .weights
                .iter()
                .map(|w| if w.sign_convention < 0 { "-" } else { "+" })
                .collect();
            vec![
                (i + 1).to_string(),
                rep.join(" "),
                spaces.join(" + "),
                format!("({})", weights.join(", ")),
                signs.concat(),
                format!("{:+}", p.orientation_flip),
                format!("{:+}", p.contribution),
            ]
        })
        .collect();
    out.push_str(&table(
        &[
            "#",
            "representative",
            "horizontal",
            "weights",
            "signs",
            "flip",
            "contribution",
        ],
        &rows,
    ));
    for (name, ok) in &r.cross_checks {
        let _ = writeln!(
            out,
            "cross-check {name}: {}",
            if *ok { "ok" } else { "FAILED" }
        );
    }
    for note in &r.notes {
        let _ = writeln!(out, "note: {note}");
    }
}

/// Renders a report; JSON output is byte-identical across runs.
pub fn emit_report(report: &RunReport, format: Emit) -> String {
    match format {
        Emit::Json => {
            let mut s = serde_json::to_string_pretty(&to_json(report)).expect("report serializes");
            s.push('\n');
            s
        }
        Emit::Text => {
            let mut out = String::new();
            match &report.outcome {
                Outcome::Homogeneous(r) => homogeneous_text(r, &mut out),
                Outcome::Biquotient(r) => biquotient_text(r, &mut out),
            }
            for (name, ok) in &report.checks {
                let _ = writeln!(out, "check {name}: {}", if *ok { "pass" } else { "FAIL" });
            }
            for note in &report.notes {
                let _ = writeln!(out, "note: {note}");
            }
            let _ = writeln!(
                out,
                "sigma (up to global sign) = {}",
                report.signature_up_to_sign()
            );
            out
        }
    }
}
