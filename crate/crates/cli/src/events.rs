//! Interval tables of extrema: CSV with header `variable,kind,start,end`.
//!
//! `kind` is `min` or `max`; bounds are exact decimals, `p/q`, `inf` or `-inf`.

use std::io::Read;

use extremamatch_core::poset::{build_poset, variables_in_order, ExtremaError, ExtremaEvent, ExtremumKind, PosetOfExtrema, TimeInterval};
use extremamatch_core::rational::{format_rational, ExtRational};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EventsError {
    #[error("events CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("events CSV header must be `variable,kind,start,end`, got `{0}`")]
    Header(String),
    #[error("events CSV line {line}: {message}")]
    Row { line: u64, message: String },
    #[error("events: {0}")]
    Poset(#[from] ExtremaError),
    #[error("events mention `{0}`, which is not a network node")]
    NotANode(String),
}

const HEADER: [&str; 4] = ["variable", "kind", "start", "end"];

pub fn read_events<R: Read>(input: R) -> Result<Vec<ExtremaEvent>, EventsError> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    let header = reader.headers()?.clone();
    if header.iter().collect::<Vec<_>>() != HEADER {
        return Err(EventsError::Header(header.iter().collect::<Vec<_>>().join(",")));
    }
    let mut events = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        let row = |message: String| EventsError::Row { line, message };
        if record.len() != 4 {
            return Err(row(format!("expected 4 fields, found {}", record.len())));
        }
        let variable = record[0].to_string();
        if variable.is_empty() {
            return Err(row("empty variable name".into()));
        }
        let kind = match &record[1] {
            "min" => ExtremumKind::Min,
            "max" => ExtremumKind::Max,
            other => return Err(row(format!("kind must be `min` or `max`, got `{other}`"))),
        };
        let bound = |field: &str, text: &str| ExtRational::parse(text).map_err(|e| row(format!("{field} `{text}`: {e}")));
        let start = bound("start", &record[2])?;
        let end = bound("end", &record[3])?;
        let interval = TimeInterval::new(start, end).map_err(|e| row(e.to_string()))?;
        events.push(ExtremaEvent { variable, kind, interval });
    }
    Ok(events)
}

/// Builds the poset over `variables`, or over the events' own variables in first-appearance order.
pub fn events_to_poset(events: Vec<ExtremaEvent>, variables: Option<&[String]>) -> Result<PosetOfExtrema, EventsError> {
    let vars = match variables {
        Some(v) => {
            if let Some(e) = events.iter().find(|e| !v.contains(&e.variable)) {
                return Err(EventsError::NotANode(e.variable.clone()));
            }
            v.to_vec()
        }
        None => variables_in_order(&events),
    };
    Ok(build_poset(events, vars)?)
}

fn bound_text(b: &ExtRational) -> String {
    match b {
        ExtRational::NegInf => "-inf".into(),
        ExtRational::PosInf => "inf".into(),
        ExtRational::Finite(r) => format_rational(r),
    }
}

pub fn write_events(events: &[ExtremaEvent]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for e in events {
        w.write_record([e.variable.as_str(), e.kind.as_str(), &bound_text(e.interval.start()), &bound_text(e.interval.end())])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
}
