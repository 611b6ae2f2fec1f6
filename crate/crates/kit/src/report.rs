//! Command results, rendered either as a plain table or as JSON.
//!
//! Every number in a table also appears in the JSON. Rationals are JSON
//! strings `"p/q"` (integers too: `"2/1"`); dimensions, ranks and counts are
//! JSON integers.

use std::fmt::Write as _;

use diffeo_core::{RatMat, Rational};
use serde::Serialize;

/// `p/q` with an explicit denominator.
pub fn rat(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(rat).collect()
}

pub fn matrix(m: &RatMat) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| rats(&m.row_vec(r))).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentReport {
    pub space: String,
    pub k: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RhoReport {
    pub space: String,
    pub k: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
    pub iso: bool,
    /// Row-major, `target_dim` rows of `source_dim` entries.
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckFormReport {
    pub space: String,
    pub form: String,
    pub degree: usize,
    pub compatible: bool,
    /// The first arrow along which the family fails to be compatible.
    pub arrow: Option<String>,
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EvalFormReport {
    pub space: String,
    pub form: String,
    pub degree: usize,
    pub fibre_dim: usize,
    pub coords: Vec<String>,
    pub zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FilteredReport {
    pub space: String,
    pub depth: usize,
    pub weakly_filtered: String,
    pub filtered: String,
    pub uncovered_pair: Option<(String, String)>,
    pub unequalized_pair: Option<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionEntry {
    pub name: String,
    pub kind: String,
    pub valid: bool,
    pub constraints: Vec<String>,
    pub violated: Vec<String>,
    pub functional: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionsReport {
    pub space: String,
    pub tangent_dim: usize,
    pub sections: Vec<SectionEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleEntry {
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub agrees: bool,
    pub origin: String,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub name: String,
    pub space: String,
    pub params: Vec<(String, String)>,
    pub charts: usize,
    pub arrows: usize,
    pub wedge_type: bool,
    pub oracles: Vec<OracleEntry>,
    /// The presentation in the text format, with `--export`.
    pub export: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Tangent(TangentReport),
    Rho(RhoReport),
    CheckForm(CheckFormReport),
    EvalForm(EvalFormReport),
    Filtered(FilteredReport),
    Sections(SectionsReport),
    Catalog(CatalogReport),
}

impl Report {
    /// Whether a verdict-style command answered "no". Commands without a
    /// verdict never do.
    pub fn is_negative(&self) -> bool {
        match self {
            Report::Tangent(_) | Report::EvalForm(_) => false,
            Report::Rho(r) => !r.iso,
            Report::CheckForm(r) => !r.compatible,
            Report::Filtered(r) => r.filtered != "yes",
            Report::Sections(r) => r.sections.iter().any(|s| !s.valid),
            Report::Catalog(r) => r.oracles.iter().any(|o| !o.agrees),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut o = String::new();
        match self {
            Report::Tangent(r) => {
                writeln!(o, "space {}, k = {}", r.space, r.k).unwrap();
                if r.k == 1 {
                    writeln!(o, "dim T = {}", r.dim).unwrap();
                } else {
                    writeln!(o, "dim T^{} = {}", r.k, r.dim).unwrap();
                }
            }
            Report::Rho(r) => {
                writeln!(o, "space {}", r.space).unwrap();
                writeln!(o, "rho_{k} : T^{k} -> wedge^{k} T", k = r.k).unwrap();
                writeln!(
                    o,
                    "source {}, target {}, {}surjective, {}injective, {}iso (rank {})",
                    r.source_dim,
                    r.target_dim,
                    if r.surjective { "" } else { "not " },
                    if r.injective { "" } else { "not " },
                    if r.iso { "" } else { "not " },
                    r.rank
                )
                .unwrap();
                writeln!(o, "matrix {}x{}:", r.target_dim, r.source_dim).unwrap();
                for row in &r.matrix {
                    writeln!(o, "  {}", human_strings(row)).unwrap();
                }
            }
            Report::CheckForm(r) => {
                writeln!(o, "space {}", r.space).unwrap();
                writeln!(o, "form {} (degree {})", r.form, r.degree).unwrap();
                if r.compatible {
                    writeln!(o, "verdict: compatible").unwrap();
                } else {
                    writeln!(o, "verdict: incompatible").unwrap();
                    if let Some(a) = &r.arrow {
                        writeln!(o, "counterexample arrow: {a}").unwrap();
                    }
                    if let Some(res) = &r.residual {
                        writeln!(o, "residual: {res}").unwrap();
                    }
                }
            }
            Report::EvalForm(r) => {
                writeln!(o, "space {}", r.space).unwrap();
                writeln!(o, "form {} (degree {}) at the marked point", r.form, r.degree).unwrap();
                writeln!(o, "fibre dim {}", r.fibre_dim).unwrap();
                writeln!(o, "coords: {}", human_strings(&r.coords)).unwrap();
                writeln!(o, "zero: {}", yes_no(r.zero)).unwrap();
            }
            Report::Filtered(r) => {
                writeln!(o, "space {}, depth {}", r.space, r.depth).unwrap();
                writeln!(o, "weakly_filtered: {}, filtered: {}", r.weakly_filtered, r.filtered).unwrap();
                if let Some((a, b)) = &r.uncovered_pair {
                    writeln!(o, "no common target for charts: {a}, {b}").unwrap();
                }
                if let Some((a, b)) = &r.unequalized_pair {
                    writeln!(o, "not coequalized: {a}, {b}").unwrap();
                }
            }
            Report::Sections(r) => {
                writeln!(o, "space {}, dim T = {}", r.space, r.tangent_dim).unwrap();
                for s in &r.sections {
                    writeln!(o, "section {} ({}): {}", s.name, s.kind, if s.valid { "valid" } else { "invalid" }).unwrap();
                    for c in &s.constraints {
                        writeln!(o, "  constraint: {c}").unwrap();
                    }
                    for c in &s.violated {
                        writeln!(o, "  violated: {c}").unwrap();
                    }
                    if let Some(f) = &s.functional {
                        writeln!(o, "  functional: {}", human_strings(f)).unwrap();
                    }
                }
            }
            Report::Catalog(r) => {
                if let Some(text) = &r.export {
                    return text.clone();
                }
                writeln!(o, "catalog {} -> space {}", r.name, r.space).unwrap();
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(o, "params: {}", if params.is_empty() { "(defaults)".into() } else { params.join(", ") }).unwrap();
                writeln!(o, "charts {}, arrows {}, wedge-type {}", r.charts, r.arrows, yes_no(r.wedge_type)).unwrap();
                let width = r.oracles.iter().map(|e| e.quantity.chars().count()).max().unwrap_or(0);
                for e in &r.oracles {
                    let pad = width - e.quantity.chars().count();
                    writeln!(
                        o,
                        "  {}{}  expected {:<8} computed {:<8} {:<4} [{}] {}",
                        e.quantity,
                        " ".repeat(pad),
                        e.expected,
                        e.computed,
                        if e.agrees { "ok" } else { "FAIL" },
                        e.origin,
                        e.note
                    )
                    .unwrap();
                }
            }
        }
        o
    }
}

fn human_strings(v: &[String]) -> String {
    let items: Vec<&str> = v.iter().map(|e| e.strip_suffix("/1").unwrap_or(e)).collect();
    format!("[{}]", items.join(", "))
}
