//! The `diffeo-kit` command line.
//!
//! Exit codes: 0 on success; 1 when `--strict` is set and a verdict-style
//! command (`rho`, `check-form`, `filtered`, `sections`, `catalog`) answers
//! "no"; 2 when the input could not be read, parsed or computed on.

use std::fs;

use clap::{Parser, Subcommand};
use diffeo_core::catalog::{self, evaluate, CatalogEntry, Origin, FILTER_DEPTH};
use diffeo_core::forms::{self, Compatibility};
use diffeo_core::presentation::filteredness;
use diffeo_core::tangent::{bundle_fibre, rho_map, tangent_space, MapSummary};
use diffeo_core::GermPresentation;

use crate::format::{self, Document};
use crate::report::*;

#[derive(Debug, Parser)]
#[command(name = "diffeo-kit", version, about = "Tangent spaces, T^k fibres and form compatibility for presented diffeological spaces")]
pub struct Cli {
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Exit with code 1 when a verdict is negative.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Catalog parameters, `key=value[,key=value...]`.
    #[arg(long, global = true, value_name = "K=V,...")]
    pub params: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of the T^k fibre at the marked point (T itself for k = 1).
    Tangent {
        /// A presentation file, or `catalog:NAME`.
        file: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// The comparison map T^k -> wedge^k T.
    Rho {
        file: String,
        #[arg(long)]
        k: usize,
    },
    /// Exact compatibility of a form family along every arrow.
    CheckForm {
        file: String,
        #[arg(long)]
        form: String,
        /// Extra file with `form` blocks for this space.
        #[arg(long)]
        data: Option<String>,
    },
    /// Value of a compatible form at the marked point, as a functional on T^k.
    EvalForm {
        file: String,
        #[arg(long)]
        form: String,
        #[arg(long)]
        data: Option<String>,
    },
    /// Weak filteredness and filteredness of the closed arrow set.
    Filtered {
        file: String,
        #[arg(long, default_value_t = FILTER_DEPTH)]
        depth: usize,
    },
    /// Gluing conditions for section data over a wedge-type space.
    Sections {
        file: String,
        #[arg(long)]
        data: Option<String>,
    },
    /// A catalog space and its oracle table.
    Catalog {
        name: String,
        /// Print the presentation in the text format.
        #[arg(long)]
        export: bool,
    },
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

type Failure = String;

fn parse_params(raw: Option<&str>) -> Result<Vec<(String, String)>, Failure> {
    let Some(raw) = raw else { return Ok(Vec::new()) };
    raw.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|kv| match kv.split_once('=') {
            Some((k, v)) if !k.trim().is_empty() => Ok((k.trim().to_string(), v.trim().to_string())),
            _ => Err(format!("malformed parameter `{kv}`, expected key=value")),
        })
        .collect()
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))
}

fn load(file: &str, params: &[(String, String)]) -> Result<Document, Failure> {
    let doc = match file.strip_prefix("catalog:") {
        Some(name) => Document {
            presentation: catalog::build_catalog_space(name, params)
                .map_err(|e| e.to_string())?
                .presentation,
            forms: Vec::new(),
            sections: Vec::new(),
        },
        None => {
            if !params.is_empty() {
                return Err("--params only applies to catalog spaces".into());
            }
            format::parse_document(&read(file)?).map_err(|e| format!("{file}: {e}"))?
        }
    };
    doc.presentation.ensure_valid().map_err(|e| e.to_string())?;
    Ok(doc)
}

fn with_data(mut doc: Document, data: Option<&str>) -> Result<Document, Failure> {
    if let Some(path) = data {
        let extra = format::parse_data(&read(path)?, &doc.presentation).map_err(|e| format!("{path}: {e}"))?;
        for f in extra.forms {
            if doc.form(&f.name).is_some() {
                return Err(format!("{path}: form `{}` is already defined", f.name));
            }
            doc.forms.push(f);
        }
        doc.sections.extend(extra.sections);
    }
    Ok(doc)
}

fn find_form<'a>(doc: &'a Document, name: &str) -> Result<&'a forms::PresentedForm, Failure> {
    doc.form(name).ok_or_else(|| {
        let known: Vec<&str> = doc.forms.iter().map(|f| f.name.as_str()).collect();
        format!(
            "no form named `{name}` (defined: {})",
            if known.is_empty() { "none".to_string() } else { known.join(", ") }
        )
    })
}

fn catalog_report(entry: &CatalogEntry, name: &str, export: bool) -> Result<CatalogReport, Failure> {
    let p = &entry.presentation;
    let mut oracles = Vec::new();
    for o in &entry.oracles {
        let computed = evaluate(p, o.quantity).map_err(|e| e.to_string())?;
        oracles.push(OracleEntry {
            quantity: o.quantity.to_string(),
            expected: o.expected.to_string(),
            computed: computed.to_string(),
            agrees: computed == o.expected,
            origin: match o.origin {
                Origin::Published => "published",
                Origin::HandComputed => "hand-computed",
                Origin::Immediate => "immediate",
            }
            .to_string(),
            note: o.note.to_string(),
        });
    }
    Ok(CatalogReport {
        name: name.to_string(),
        space: p.name.clone(),
        params: entry.params.clone(),
        charts: p.charts.len(),
        arrows: p.arrows.len(),
        wedge_type: entry.wedge_type,
        oracles,
        export: export.then(|| format::print_presentation(p)),
    })
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let params = parse_params(cli.params.as_deref())?;
    let e = |e: diffeo_core::Error| e.to_string();
    Ok(match &cli.command {
        Command::Tangent { file, k } => {
            let p = load(file, &params)?.presentation;
            let dim = if *k == 1 {
                tangent_space(&p).map_err(e)?.dim
            } else {
                bundle_fibre(&p, *k).map_err(e)?.dim
            };
            Report::Tangent(TangentReport { space: p.name, k: *k, dim })
        }
        Command::Rho { file, k } => {
            let p = load(file, &params)?.presentation;
            let m = rho_map(&p, *k).map_err(e)?;
            let s = MapSummary::of(&m);
            Report::Rho(RhoReport {
                space: p.name,
                k: *k,
                source_dim: s.source_dim,
                target_dim: s.target_dim,
                rank: s.rank,
                injective: s.injective(),
                surjective: s.surjective(),
                iso: s.iso(),
                matrix: matrix(&m),
            })
        }
        Command::CheckForm { file, form, data } => {
            let doc = with_data(load(file, &params)?, data.as_deref())?;
            let w = find_form(&doc, form)?;
            let verdict = forms::check_form_compatibility(&doc.presentation, w).map_err(e)?;
            let (arrow, residual) = match verdict {
                Compatibility::Compatible => (None, None),
                Compatibility::Incompatible { arrow, residual } => (Some(arrow), Some(residual.to_string())),
            };
            Report::CheckForm(CheckFormReport {
                space: doc.presentation.name.clone(),
                form: w.name.clone(),
                degree: w.degree,
                compatible: arrow.is_none(),
                arrow,
                residual,
            })
        }
        Command::EvalForm { file, form, data } => {
            let doc = with_data(load(file, &params)?, data.as_deref())?;
            let w = find_form(&doc, form)?;
            let v = forms::form_at_point(&doc.presentation, w).map_err(e)?;
            Report::EvalForm(EvalFormReport {
                space: doc.presentation.name.clone(),
                form: w.name.clone(),
                degree: v.degree,
                fibre_dim: v.coords.len(),
                zero: v.is_zero(),
                coords: rats(&v.coords),
            })
        }
        Command::Filtered { file, depth } => {
            let p = load(file, &params)?.presentation;
            let f = filteredness(&p, *depth).map_err(e)?;
            Report::Filtered(FilteredReport {
                space: p.name,
                depth: *depth,
                weakly_filtered: f.weakly_filtered.to_string(),
                filtered: f.filtered.to_string(),
                uncovered_pair: f.uncovered_pair,
                unequalized_pair: f.unequalized_pair,
            })
        }
        Command::Sections { file, data } => {
            let doc = with_data(load(file, &params)?, data.as_deref())?;
            if doc.sections.is_empty() {
                return Err("no `section` blocks found".into());
            }
            let p = &doc.presentation;
            let mut sections = Vec::new();
            for s in &doc.sections {
                let r = forms::check_section(p, s).map_err(e)?;
                sections.push(SectionEntry {
                    name: s.name.clone(),
                    kind: s.kind.to_string(),
                    valid: r.valid,
                    constraints: r.constraints,
                    violated: r.violated,
                    functional: r.functional.as_deref().map(rats),
                });
            }
            Report::Sections(SectionsReport {
                space: p.name.clone(),
                tangent_dim: tangent_space(p).map_err(e)?.dim,
                sections,
            })
        }
        Command::Catalog { name, export } => {
            let entry = catalog::build_catalog_space(name, &params).map_err(e)?;
            Report::Catalog(catalog_report(&entry, name, *export)?)
        }
    })
}

/// Runs one command; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => Outcome {
            code: if cli.strict && report.is_negative() { 1 } else { 0 },
            stdout: if cli.json { report.to_json() } else { report.to_table() },
            stderr: String::new(),
        },
        Err(msg) => Outcome::input_error(msg),
    }
}

/// Reads the presentation a command would operate on.
pub fn load_presentation(file: &str, params: &[(String, String)]) -> Result<GermPresentation, String> {
    load(file, params).map(|d| d.presentation)
}
