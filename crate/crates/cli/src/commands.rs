use std::str::FromStr;

use antilimit::algebra::Rational;
use antilimit::engine::{characterize, characterize_unchecked, table_properties, CharacteristicPair, EngineError, FitOptions};
use antilimit::oracle::reference_row;
use antilimit::series::{Family, SeriesClass, SeriesSpec};
use antilimit::solver::{intersect, AntiLimit, SolverError};
use rayon::prelude::*;

use crate::args::{Cli, Command, FamilyArg, FitArgs};
use crate::doc::{poly_doc, DeduceDoc, PolyDoc, RationalDoc, TableDoc, TableRow, ValueDoc};
use crate::error::CliError;
use crate::{plot, range, render, verify, Output};

fn parse_series(text: &str) -> Result<SeriesSpec, CliError> {
    SeriesSpec::from_str(text).map_err(|e| CliError::Parse(format!("cannot parse series `{text}`: {e}")))
}

fn options(fit: &FitArgs) -> FitOptions {
    FitOptions { max_degree: fit.max_degree, verify_count: fit.verify_count }
}

/// Fits a series. A classification the window cannot settle (such as
/// `eta(0)`'s constant magnitudes) is left to the fit itself; convergent
/// or non-alternating series need `--force`.
pub(crate) fn fit_series(spec: &SeriesSpec, fit: &FitArgs) -> Result<CharacteristicPair, CliError> {
    let opts = options(fit);
    if fit.force {
        return Ok(characterize_unchecked(spec, &opts)?);
    }
    match characterize(spec, &opts) {
        Err(EngineError::NotAlternatingDivergent(SeriesClass::Indeterminate)) => {
            Ok(characterize_unchecked(spec, &opts)?)
        }
        other => Ok(other?),
    }
}

fn solve(spec: &SeriesSpec, fit: &FitArgs, precision: u32) -> Result<(CharacteristicPair, AntiLimit), CliError> {
    let pair = fit_series(spec, fit)?;
    let anti = intersect(&pair, precision)?;
    Ok((pair, anti))
}

fn family(arg: FamilyArg) -> Family {
    match arg {
        FamilyArg::Eta => Family::Eta,
        FamilyArg::Beta => Family::Beta,
    }
}

/// `Family` and `s` when the spec is a plain eta/beta at `s <= -1`.
fn plain_family(spec: &SeriesSpec) -> Option<(Family, i64)> {
    match spec {
        SeriesSpec::Eta(s) if *s <= -1 => Some((Family::Eta, *s)),
        SeriesSpec::Beta(s) if *s <= -1 => Some((Family::Beta, *s)),
        _ => None,
    }
}

fn ok(text: String) -> Output {
    Output { text, success: true }
}

pub fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let digits = cli.precision;
    let format = cli.format;
    match &cli.command {
        Command::Value { series, fit } => {
            let (pair, anti) = solve(&parse_series(series)?, fit, digits)?;
            Ok(ok(render::value(&ValueDoc::new(&pair, &anti, digits), format)?))
        }
        Command::Roots { series, fit } => {
            let (pair, anti) = solve(&parse_series(series)?, fit, digits)?;
            Ok(ok(render::roots(&ValueDoc::new(&pair, &anti, digits), format)?))
        }
        Command::Poly { series, fit } => {
            let spec = parse_series(series)?;
            let pair = fit_series(&spec, fit)?;
            let report = plain_family(&spec).map(|(f, s)| table_properties(&pair, f, s));
            Ok(ok(render::poly(&PolyDoc::new(&pair, report.as_ref()), format)?))
        }
        Command::Table { family: f, range: r } => {
            let doc = table(family(*f), &range::int_range(r)?, digits)?;
            Ok(ok(render::table(&doc, format)?))
        }
        Command::Deduce { series, known, value, fit } => {
            let doc = deduce(series, known, value.as_deref(), fit, digits)?;
            Ok(ok(render::deduce(&doc, format)?))
        }
        Command::Verify { suite, seed, cases } => {
            let doc = verify::run(*suite, *seed, *cases);
            let success = doc.failed == 0;
            Ok(Output { text: render::verify(&doc, format)?, success })
        }
        Command::Plot { series, range: r, samples, out, fit } => {
            let text = plot_csv(series, r, *samples, fit, digits)?;
            match out {
                Some(path) => {
                    std::fs::write(path, &text)
                        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
                    let rows = text.lines().count() - 1;
                    Ok(ok(format!("wrote {rows} rows to {}\n", path.display())))
                }
                None => Ok(ok(text)),
            }
        }
    }
}

fn misprint_note(family: Family, s: i64, pair: &CharacteristicPair) -> Option<String> {
    let row = reference_row(family, s)?;
    if pair.p_odd == row.p_odd {
        return None;
    }
    match &row.erratum {
        Some(e) if pair.p_odd == row.corrected_p_odd() => {
            let one = Rational::from_integer(1.into());
            Some(format!(
                "{}({s}): the x^{} coefficient derives to {} from the partial sums; the often-quoted {} \
                 would give P_o(1) = {} instead of S_1 = {}.",
                family.name(),
                e.degree,
                e.derived,
                e.listed,
                row.p_odd.eval(&one),
                pair.p_odd.eval(&one)
            ))
        }
        _ => Some(format!("{}({s}): differs from the reference listing P_o(x) = {}", family.name(), row.p_odd)),
    }
}

fn table(family: Family, ss: &[i64], digits: u32) -> Result<TableDoc, CliError> {
    if let Some(bad) = ss.iter().find(|s| **s > -1) {
        return Err(CliError::Parse(format!("table needs s <= -1, got {bad}")));
    }
    let opts = FitOptions::default();
    let computed: Vec<_> = ss
        .par_iter()
        .map(|&s| -> Result<_, CliError> {
            let pair = characterize(&family.spec(s), &opts)?;
            let anti = intersect(&pair, digits)?;
            let value = anti.exact_value().cloned().ok_or(SolverError::InexactValue)?;
            Ok((s, pair, value))
        })
        .collect::<Result<_, _>>()?;
    let mut notes = Vec::new();
    let rows = computed
        .into_iter()
        .map(|(s, pair, value)| {
            let note = misprint_note(family, s, &pair).map(|n| {
                notes.push(n);
                notes.len()
            });
            TableRow {
                s,
                p_odd: poly_doc(&pair.p_odd),
                p_even: poly_doc(&pair.p_even),
                structural_k: pair.structural_k.as_ref().map(RationalDoc::from),
                value: (&value).into(),
                note,
            }
        })
        .collect();
    Ok(TableDoc { family: family.name().into(), rows, notes })
}

fn deduce(series: &str, known: &str, value: Option<&str>, fit: &FitArgs, digits: u32) -> Result<DeduceDoc, CliError> {
    let combined = parse_series(series)?;
    let known_spec = parse_series(known)?;
    let target = match &combined {
        SeriesSpec::Sum(a, b) if **a == known_spec => (**b).clone(),
        SeriesSpec::Sum(a, b) if **b == known_spec => (**a).clone(),
        _ => return Err(SolverError::SpecMismatch(known_spec).into()),
    };
    let known_value = match value {
        Some(text) => range::rational(text)?,
        None => {
            let (_, anti) = solve(&known_spec, fit, digits)?;
            anti.exact_value().cloned().ok_or_else(|| {
                CliError::Failed(format!("{known_spec} has no exact value; pass it with --value"))
            })?
        }
    };
    let (_, anti) = solve(&combined, fit, digits)?;
    let total = anti.exact_value().cloned().ok_or(SolverError::InexactValue)?;
    Ok(DeduceDoc {
        series: combined.to_string(),
        known: known_spec.to_string(),
        known_value: (&known_value).into(),
        combined_value: (&total).into(),
        target: target.to_string(),
        value: (&(total - known_value)).into(),
    })
}

fn plot_csv(series: &str, range_text: &str, samples: usize, fit: &FitArgs, digits: u32) -> Result<String, CliError> {
    let spec = parse_series(series)?;
    let (a, b) = range::rational_range(range_text)?;
    if samples < 2 {
        return Err(CliError::Parse(format!("--samples must be at least 2, got {samples}")));
    }
    let pair = fit_series(&spec, fit)?;
    let anti = match intersect(&pair, digits) {
        Ok(anti) => Some(anti),
        Err(SolverError::NoIntersection(_) | SolverError::IdenticalBranches) => None,
        Err(e) => return Err(e.into()),
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["x", "p_odd", "p_even"])?;
    for x in plot::rows(anti.as_ref(), &a, &b, samples) {
        w.write_record([
            plot::fixed(&x, digits),
            plot::fixed(&pair.p_odd.eval(&x), digits),
            plot::fixed(&pair.p_even.eval(&x), digits),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Failed(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Failed(e.to_string()))
}

