use std::fmt::Write as _;

use antilimit::algebra::Rational;
use serde::Serialize;

use crate::args::Format;
use crate::doc::{
    poly_from_doc, DeduceDoc, PolyDoc, RationalDoc, RootDoc, TableDoc, ValueDoc, ValueField, VerifyDoc,
};
use crate::error::CliError;

/// Pretty JSON with a trailing newline; field order follows the structs.
pub fn json<T: Serialize>(doc: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(doc)? + "\n")
}

fn csv_rows<I, R>(header: &[&str], rows: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Failed(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Failed(e.to_string()))
}

fn rat_text(r: &RationalDoc) -> String {
    r.to_rational().map(|r| r.to_string()).unwrap_or_else(|| format!("{}/{}", r.num, r.den))
}

fn poly_text(coeffs: &[RationalDoc]) -> String {
    poly_from_doc(coeffs).map(|p| p.to_string()).unwrap_or_default()
}

fn complex_text(re: &str, im: &str) -> String {
    match im.strip_prefix('-') {
        _ if im.trim_start_matches(['-', '0', '.']).is_empty() => re.to_string(),
        Some(abs) => format!("{re} - {abs}i"),
        None => format!("{re} + {im}i"),
    }
}

fn root_text(r: &RootDoc) -> String {
    match &r.exact {
        Some(x) => rat_text(x),
        None => complex_text(&r.approx.re, &r.approx.im),
    }
}

fn value_text(v: &ValueField) -> String {
    match v {
        ValueField::Exact(r) => rat_text(r),
        ValueField::Approx(z) => complex_text(&z.re, &z.im),
    }
}

fn roots_md(out: &mut String, roots: &[RootDoc]) {
    out.push_str("| kind | X | residual |\n|---|---|---|\n");
    for r in roots {
        let _ = writeln!(out, "| {} | {} | {} |", r.kind.name(), root_text(r), r.residual);
    }
}

fn roots_csv_rows(roots: &[RootDoc]) -> Vec<Vec<String>> {
    roots
        .iter()
        .map(|r| {
            vec![
                r.kind.name().to_string(),
                r.approx.re.clone(),
                r.approx.im.clone(),
                r.exact.as_ref().map(rat_text).unwrap_or_default(),
                r.residual.clone(),
            ]
        })
        .collect()
}

const ROOT_HEADER: [&str; 5] = ["kind", "re", "im", "exact", "residual"];

pub fn value(doc: &ValueDoc, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(doc),
        Format::Csv => {
            let first = doc.first_intersection.as_ref().map(root_text).unwrap_or_default();
            csv_rows(
                &["series", "value", "decimal_re", "decimal_im", "first_intersection", "roots"],
                [vec![
                    doc.series.clone(),
                    value_text(&doc.value),
                    doc.decimal.re.clone(),
                    doc.decimal.im.clone(),
                    first,
                    doc.roots.len().to_string(),
                ]],
            )
        }
        Format::Md => {
            let mut out = format!("## {}\n\n", doc.series);
            let _ = writeln!(out, "- value: {}", value_text(&doc.value));
            let _ = writeln!(out, "- decimal: {}", complex_text(&doc.decimal.re, &doc.decimal.im));
            let first = doc.first_intersection.as_ref().map(root_text).unwrap_or_else(|| "none (no real root)".into());
            let _ = writeln!(out, "- first intersection: X = {first}");
            let _ = writeln!(out, "- intersections: {}\n", doc.roots.len());
            roots_md(&mut out, &doc.roots);
            Ok(out)
        }
    }
}

pub fn roots(doc: &ValueDoc, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(&doc.roots),
        Format::Csv => csv_rows(&ROOT_HEADER, roots_csv_rows(&doc.roots)),
        Format::Md => {
            let mut out = format!("## Intersections of {}\n\n", doc.series);
            roots_md(&mut out, &doc.roots);
            Ok(out)
        }
    }
}

pub fn poly(doc: &PolyDoc, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(doc),
        Format::Csv => {
            let len = doc.p_odd.len().max(doc.p_even.len());
            let cell = |v: &[RationalDoc], i: usize| v.get(i).map(rat_text).unwrap_or_else(|| "0".into());
            csv_rows(
                &["degree", "p_odd", "p_even"],
                (0..len).map(|i| vec![i.to_string(), cell(&doc.p_odd, i), cell(&doc.p_even, i)]),
            )
        }
        Format::Md => {
            let mut out = format!("## {}\n\n", doc.series);
            let _ = writeln!(out, "- P_o(x) = {}", poly_text(&doc.p_odd));
            let _ = writeln!(out, "- P_e(x) = {}", poly_text(&doc.p_even));
            let _ = writeln!(out, "- P_o(x) - P_e(x) = {}", poly_text(&doc.difference));
            match &doc.structural_k {
                Some(k) => {
                    let _ = writeln!(out, "- P_o(x) + P_e(x) = k = {}", rat_text(k));
                }
                None => out.push_str("- P_o(x) + P_e(x) is not constant\n"),
            }
            let _ = writeln!(
                out,
                "- fit degree {}, {} points per branch, {} verified beyond",
                doc.fit_degree, doc.points_used, doc.verify_count
            );
            if let Some(checks) = &doc.checks {
                out.push_str("\n| check | result | detail |\n|---|---|---|\n");
                for c in checks {
                    let verdict = if c.passed { "pass" } else { "FAIL" };
                    let _ = writeln!(out, "| {} | {} | {} |", c.name, verdict, c.detail);
                }
            }
            Ok(out)
        }
    }
}

/// `p_even` in the `-[P_o(x) - k]` form when `p_odd + p_even = k`.
pub fn p_even_relation(k: Option<&RationalDoc>, p_even: &[RationalDoc]) -> String {
    let Some(k) = k.and_then(RationalDoc::to_rational) else {
        return poly_text(p_even);
    };
    if k == Rational::default() {
        return "-P_o(x)".into();
    }
    if k < Rational::default() {
        format!("-[P_o(x) + {}]", -k)
    } else {
        format!("-[P_o(x) - {k}]")
    }
}

pub fn table(doc: &TableDoc, format: Format) -> Result<String, CliError> {
    let value_cell = |row: &crate::doc::TableRow| match row.note {
        Some(n) => format!("{} [{}]", rat_text(&row.value), n),
        None => rat_text(&row.value),
    };
    match format {
        Format::Json => json(doc),
        Format::Csv => csv_rows(
            &["s", "p_odd", "p_even", "k", "value", "note"],
            doc.rows.iter().map(|r| {
                vec![
                    r.s.to_string(),
                    poly_text(&r.p_odd),
                    poly_text(&r.p_even),
                    r.structural_k.as_ref().map(rat_text).unwrap_or_default(),
                    rat_text(&r.value),
                    r.note.and_then(|n| doc.notes.get(n - 1)).cloned().unwrap_or_default(),
                ]
            }),
        ),
        Format::Md => {
            let mut out = format!("| s | P_o(x) | P_e(x) | {}(s) |\n|---|---|---|---|\n", doc.family);
            for r in &doc.rows {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    r.s,
                    poly_text(&r.p_odd),
                    p_even_relation(r.structural_k.as_ref(), &r.p_even),
                    value_cell(r)
                );
            }
            if !doc.notes.is_empty() {
                out.push('\n');
                for (i, note) in doc.notes.iter().enumerate() {
                    let _ = writeln!(out, "[{}] {}", i + 1, note);
                }
            }
            Ok(out)
        }
    }
}

pub fn deduce(doc: &DeduceDoc, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(doc),
        Format::Csv => csv_rows(
            &["series", "known", "known_value", "combined_value", "target", "value"],
            [vec![
                doc.series.clone(),
                doc.known.clone(),
                rat_text(&doc.known_value),
                rat_text(&doc.combined_value),
                doc.target.clone(),
                rat_text(&doc.value),
            ]],
        ),
        Format::Md => Ok(format!(
            "- {} = {}\n- {} = {}\n- {} = {}\n",
            doc.series,
            rat_text(&doc.combined_value),
            doc.known,
            rat_text(&doc.known_value),
            doc.target,
            rat_text(&doc.value)
        )),
    }
}

pub fn verify(doc: &VerifyDoc, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(doc),
        Format::Csv => csv_rows(
            &["suite", "case", "passed", "detail"],
            doc.suites.iter().flat_map(|s| {
                s.cases.iter().map(|c| vec![s.suite.clone(), c.case.clone(), c.passed.to_string(), c.detail.clone()])
            }),
        ),
        Format::Md => {
            let mut out = String::new();
            for s in &doc.suites {
                let _ = writeln!(out, "{}: {} passed, {} failed", s.suite, s.passed, s.failed);
                for c in s.cases.iter().filter(|c| !c.passed) {
                    let _ = writeln!(out, "  FAIL {}: {}", c.case, c.detail);
                }
            }
            let _ = writeln!(out, "total: {} passed, {} failed", doc.passed, doc.failed);
            Ok(out)
        }
    }
}
