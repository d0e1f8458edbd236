use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::{Layout, Matrix, StepMatrix};
use crate::error::{Error, Result};
use crate::lie::{HalfInt, LieType, WeightFW};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Format::Plain),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

type Rows = Vec<Vec<Option<HalfInt>>>;

/// Wire shape of a step matrix. Absent triangle positions serialize as `null`.
#[derive(Clone, Debug, Serialize)]
pub struct StepMatrixJson {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remapped_from: Option<usize>,
    pub lambda: WeightFW,
    pub layout: &'static str,
    #[serde(rename = "P", skip_serializing_if = "Option::is_none")]
    pub p: Option<Rows>,
    #[serde(rename = "Q", skip_serializing_if = "Option::is_none")]
    pub q: Option<Rows>,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    pub r: Option<Rows>,
    #[serde(rename = "T", skip_serializing_if = "Option::is_none")]
    pub t: Option<Rows>,
    #[serde(rename = "M")]
    pub max: HalfInt,
}

impl From<&StepMatrix> for StepMatrixJson {
    fn from(sm: &StepMatrix) -> Self {
        let space = sm.space();
        let mut out = StepMatrixJson {
            lie_type: space.lie_type(),
            n: space.n(),
            k: space.k(),
            remapped_from: space.is_remapped().then_some(space.requested_k()),
            lambda: sm.lambda().clone(),
            layout: "blocks",
            p: None,
            q: None,
            r: None,
            t: None,
            max: sm.max(),
        };
        match sm.layout() {
            Layout::Blocks { p, q, r } => {
                out.p = Some(p.to_rows());
                out.q = Some(q.to_rows());
                out.r = Some(r.to_rows());
            }
            Layout::Triangular { t } => {
                out.layout = "triangular";
                out.t = Some(t.to_rows());
            }
        }
        out
    }
}

fn latex_cell(v: Option<HalfInt>) -> String {
    match v.map(HalfInt::fraction) {
        None => "0".to_string(),
        Some((num, 1)) => num.to_string(),
        Some((num, den)) if num < 0 => format!("-\\frac{{{}}}{{{den}}}", -num),
        Some((num, den)) => format!("\\frac{{{num}}}{{{den}}}"),
    }
}

/// Body of a `pmatrix`: cells joined by `&`, rows by `\\`.
pub fn latex_matrix_body(m: &Matrix) -> String {
    m.to_rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&c| latex_cell(c))
                .collect::<Vec<_>>()
                .join("&")
        })
        .collect::<Vec<_>>()
        .join("\\\\")
}

/// Right-aligned text grid; absent cells print as `·`.
pub fn plain_matrix(m: &Matrix) -> String {
    let cells: Vec<Vec<String>> = m
        .to_rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| c.map_or_else(|| "·".to_string(), |v| v.to_string()))
                .collect()
        })
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(0);
    cells
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| format!("{s:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn render_plain(sm: &StepMatrix) -> String {
    let space = sm.space();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}_{}/P(α_{}) λ={}",
        space.lie_type(),
        space.n(),
        space.k(),
        sm.lambda()
    );
    match sm.layout() {
        Layout::Blocks { p, q, r } => {
            for (name, m) in [("P", p), ("Q", q), ("R", r)] {
                let _ = writeln!(out, "{name}:\n{}", plain_matrix(m));
            }
        }
        Layout::Triangular { t } => {
            let _ = writeln!(out, "T:\n{}", plain_matrix(t));
        }
    }
    let _ = writeln!(out, "M = {}", sm.max());
    out
}

fn render_latex(sm: &StepMatrix) -> String {
    let space = sm.space();
    let sub = format!("{},\\lambda", space.k());
    let z = space.lie_type();
    let pm = |m: &Matrix| format!("\\begin{{pmatrix}}{}\\end{{pmatrix}}", latex_matrix_body(m));
    let mut out = String::new();
    match sm.layout() {
        Layout::Blocks { p, q, r } => {
            let _ = writeln!(
                out,
                "T_{{{sub}}}^{{{z}}}=(P_{{{sub}}}^{{{z}}},Q_{{{sub}}}^{{{z}}},R_{{{sub}}}^{{{z}}}),"
            );
            let _ = writeln!(out, "P_{{{sub}}}^{{{z}}}={},", pm(p));
            let _ = writeln!(out, "Q_{{{sub}}}^{{{z}}}={},", pm(q));
            let _ = writeln!(out, "R_{{{sub}}}^{{{z}}}={},", pm(r));
        }
        Layout::Triangular { t } => {
            let _ = writeln!(out, "T_{{{sub}}}^{{{z}}}={},", pm(t));
        }
    }
    let _ = writeln!(out, "M_{{{sub}}}^{{{z}}}={}", latex_cell(Some(sm.max())));
    out
}

/// Deterministic text rendering of a step matrix.
pub fn render(sm: &StepMatrix, format: Format) -> String {
    match format {
        Format::Plain => render_plain(sm),
        Format::Json => {
            serde_json::to_string(&StepMatrixJson::from(sm)).expect("serializable") + "\n"
        }
        Format::Latex => render_latex(sm),
    }
}
