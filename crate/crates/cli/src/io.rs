use std::fs;
use std::path::Path;

use meb_kit_core::PointSet;
use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::report::CliError;

#[derive(Deserialize, Serialize)]
struct PointsDoc {
    points: Vec<Vec<f64>>,
}

pub fn format_for(path: &Path, explicit: Option<Format>) -> Format {
    explicit.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
        _ => Format::Csv,
    })
}

pub fn read_points(path: &Path, format: Format) -> Result<PointSet, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display()), None))?;
    let rows = match format {
        Format::Csv => parse_csv(&text)?,
        Format::Json => parse_json(&text)?,
    };
    PointSet::from_rows(&rows).map_err(|e| CliError::input(e.to_string(), None))
}

pub fn parse_csv(text: &str) -> Result<Vec<Vec<f64>>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map(|p| p.line());
            CliError::input(format!("malformed CSV: {e}"), line)
        })?;
        let line = record.position().map_or(rows.len() as u64 + 1, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        let row = record
            .iter()
            .map(|cell| {
                cell.parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| CliError::input(format!("non-numeric cell {cell:?}"), Some(line)))
            })
            .collect::<Result<Vec<f64>, _>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(CliError::input(
                    format!("expected {} columns, found {}", first.len(), row.len()),
                    Some(line),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::input("no points in file".into(), Some(1)));
    }
    Ok(rows)
}

pub fn parse_json(text: &str) -> Result<Vec<Vec<f64>>, CliError> {
    let doc: PointsDoc = serde_json::from_str(text)
        .map_err(|e| CliError::input(format!("malformed JSON: {e}"), Some(e.line() as u64)))?;
    if doc.points.is_empty() {
        return Err(CliError::input("no points in file".into(), None));
    }
    let d = doc.points[0].len();
    if let Some(i) = doc.points.iter().position(|r| r.len() != d) {
        return Err(CliError::input(
            format!("point {i} has {} coordinates, expected {d}", doc.points[i].len()),
            None,
        ));
    }
    Ok(doc.points)
}

pub fn write_points(path: &Path, format: Format, points: &PointSet) -> Result<(), CliError> {
    let text = match format {
        Format::Csv => {
            let mut out = String::new();
            for p in points.iter() {
                let cells: Vec<String> = p.coords().iter().map(|x| format!("{x:.16e}")).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let doc = PointsDoc {
                points: points.iter().map(|p| p.coords().to_vec()).collect(),
            };
            serde_json::to_string(&doc).expect("finite coordinates serialize")
        }
    };
    fs::write(path, text).map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()), None))
}
