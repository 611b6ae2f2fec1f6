//! Finite presentations of pointed germ categories.
//!
//! A [`GermPresentation`] lists pointed charts `(R^n, 0) -> (X, x)` and pointed
//! polynomial transition germs between them. Identity arrows are implicit.
//! Everything computed from a presentation is a statement about the finite
//! fragment it lists, not about the full germ category.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::symcalc::{compose_maps, Poly, PolyMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub id: String,
    pub dim: usize,
}

/// A pointed transition germ `src -> dst`, indices into the chart list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub dst: usize,
    pub map: PolyMap,
}

/// Realization of every chart inside `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    pub dim: usize,
    /// One map per chart, in chart order.
    pub embeds: Vec<PolyMap>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermPresentation {
    pub name: String,
    pub charts: Vec<Chart>,
    pub arrows: Vec<Arrow>,
    pub ambient: Option<Ambient>,
    /// Charts meet only at the marked point (a wedge of branches glued there).
    pub wedge: bool,
}

impl GermPresentation {
    pub fn new(name: impl Into<String>) -> Self {
        GermPresentation {
            name: name.into(),
            charts: Vec::new(),
            arrows: Vec::new(),
            ambient: None,
            wedge: false,
        }
    }

    pub fn with_chart(mut self, id: impl Into<String>, dim: usize) -> Self {
        self.charts.push(Chart { id: id.into(), dim });
        self
    }

    pub fn with_arrow(mut self, id: impl Into<String>, src: &str, dst: &str, map: PolyMap) -> Result<Self> {
        let src = self.chart_index(src)?;
        let dst = self.chart_index(dst)?;
        self.arrows.push(Arrow {
            id: id.into(),
            src,
            dst,
            map,
        });
        Ok(self)
    }

    pub fn with_ambient(mut self, dim: usize, embeds: Vec<PolyMap>) -> Self {
        self.ambient = Some(Ambient { dim, embeds });
        self
    }

    pub fn with_wedge(mut self, wedge: bool) -> Self {
        self.wedge = wedge;
        self
    }

    pub fn chart_index(&self, id: &str) -> Result<usize> {
        self.charts
            .iter()
            .position(|c| c.id == id)
            .ok_or_else(|| Error::UnknownChart(id.to_string()))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.charts.iter().map(|c| c.dim).collect()
    }

    pub fn max_chart_dim(&self) -> usize {
        self.charts.iter().map(|c| c.dim).max().unwrap_or(0)
    }

    /// Fails with the rendered [`ValidationReport`] unless the presentation is valid.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = validate_presentation(self);
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidPresentation(report.to_string()))
        }
    }
}

/// One violated invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    NoCharts,
    DuplicateId(String),
    ArrowEndpoint { arrow: String },
    ArrowShape { arrow: String, expected: (usize, usize), actual: (usize, usize) },
    ArrowNotPointed { arrow: String, constants: String },
    AmbientCount { expected: usize, actual: usize },
    AmbientShape { chart: String, expected: (usize, usize), actual: (usize, usize) },
    AmbientNotPointed { chart: String },
    /// `embed(dst) ∘ arrow - embed(src)` is not zero.
    AmbientMismatch { arrow: String, residual: String },
    /// Charts fall into several components; the germ category is always connected.
    Disconnected { components: Vec<Vec<String>> },
    NotWedge { reason: String },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::NoCharts => write!(f, "presentation has no charts"),
            Issue::DuplicateId(id) => write!(f, "identifier `{id}` is used twice"),
            Issue::ArrowEndpoint { arrow } => write!(f, "arrow `{arrow}` refers to a missing chart"),
            Issue::ArrowShape { arrow, expected, actual } => write!(
                f,
                "arrow `{arrow}`: expected map R^{} -> R^{}, got R^{} -> R^{}",
                expected.0, expected.1, actual.0, actual.1
            ),
            Issue::ArrowNotPointed { arrow, constants } => {
                write!(f, "arrow `{arrow}` is not pointed: constant terms {constants}")
            }
            Issue::AmbientCount { expected, actual } => {
                write!(f, "ambient: expected {expected} embeddings, got {actual}")
            }
            Issue::AmbientShape { chart, expected, actual } => write!(
                f,
                "embedding of `{chart}`: expected R^{} -> R^{}, got R^{} -> R^{}",
                expected.0, expected.1, actual.0, actual.1
            ),
            Issue::AmbientNotPointed { chart } => write!(f, "embedding of `{chart}` is not pointed"),
            Issue::AmbientMismatch { arrow, residual } => write!(
                f,
                "arrow `{arrow}` does not commute with the ambient maps: difference {residual}"
            ),
            Issue::Disconnected { components } => {
                write!(f, "chart diagram is disconnected:")?;
                for c in components {
                    write!(f, " {{{}}}", c.join(", "))?;
                }
                Ok(())
            }
            Issue::NotWedge { reason } => write!(f, "flagged wedge but {reason}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return f.write_str("valid");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "- {issue}")?;
        }
        Ok(())
    }
}

/// Checks every structural invariant and itemizes each violation.
pub fn validate_presentation(p: &GermPresentation) -> ValidationReport {
    let mut issues = Vec::new();
    if p.charts.is_empty() {
        issues.push(Issue::NoCharts);
    }
    let mut seen = BTreeSet::new();
    for id in p.charts.iter().map(|c| &c.id).chain(p.arrows.iter().map(|a| &a.id)) {
        if !seen.insert(id.as_str()) {
            issues.push(Issue::DuplicateId(id.clone()));
        }
    }
    let mut arrows_ok = true;
    for a in &p.arrows {
        let (Some(src), Some(dst)) = (p.charts.get(a.src), p.charts.get(a.dst)) else {
            issues.push(Issue::ArrowEndpoint { arrow: a.id.clone() });
            arrows_ok = false;
            continue;
        };
        let actual = (a.map.source_dim(), a.map.target_dim());
        if actual != (src.dim, dst.dim) {
            issues.push(Issue::ArrowShape {
                arrow: a.id.clone(),
                expected: (src.dim, dst.dim),
                actual,
            });
            arrows_ok = false;
            continue;
        }
        if !a.map.is_pointed() {
            let consts: Vec<String> = a
                .map
                .components()
                .iter()
                .map(|c| c.constant_term().to_string())
                .collect();
            issues.push(Issue::ArrowNotPointed {
                arrow: a.id.clone(),
                constants: format!("[{}]", consts.join(", ")),
            });
        }
    }
    if let Some(amb) = &p.ambient {
        check_ambient(p, amb, arrows_ok, &mut issues);
    }
    if arrows_ok && !p.charts.is_empty() {
        let comps = components(p);
        if comps.len() > 1 {
            issues.push(Issue::Disconnected {
                components: comps
                    .into_iter()
                    .map(|c| c.into_iter().map(|i| p.charts[i].id.clone()).collect())
                    .collect(),
            });
        }
    }
    if p.wedge {
        if let Err(reason) = wedge_structure(p) {
            issues.push(Issue::NotWedge { reason });
        }
    }
    ValidationReport { issues }
}

fn check_ambient(p: &GermPresentation, amb: &Ambient, arrows_ok: bool, issues: &mut Vec<Issue>) {
    if amb.embeds.len() != p.charts.len() {
        issues.push(Issue::AmbientCount {
            expected: p.charts.len(),
            actual: amb.embeds.len(),
        });
        return;
    }
    let mut shapes_ok = true;
    for (c, e) in p.charts.iter().zip(&amb.embeds) {
        let actual = (e.source_dim(), e.target_dim());
        if actual != (c.dim, amb.dim) {
            issues.push(Issue::AmbientShape {
                chart: c.id.clone(),
                expected: (c.dim, amb.dim),
                actual,
            });
            shapes_ok = false;
        } else if !e.is_pointed() {
            issues.push(Issue::AmbientNotPointed { chart: c.id.clone() });
        }
    }
    if !(shapes_ok && arrows_ok) {
        return;
    }
    for a in &p.arrows {
        let through = compose_maps(&amb.embeds[a.dst], &a.map).expect("shapes checked");
        let direct = &amb.embeds[a.src];
        if &through != direct {
            let residual: Vec<Poly> = through
                .components()
                .iter()
                .zip(direct.components())
                .map(|(x, y)| x - y)
                .collect();
            let residual = PolyMap::new(a.map.source_dim(), residual).expect("same arity");
            issues.push(Issue::AmbientMismatch {
                arrow: a.id.clone(),
                residual: residual.to_string(),
            });
        }
    }
}

/// Connected components of the underlying graph, each sorted by chart index.
fn components(p: &GermPresentation) -> Vec<Vec<usize>> {
    let n = p.charts.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for a in &p.arrows {
        let (ra, rb) = (find(&mut parent, a.src), find(&mut parent, a.dst));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match roots.iter().position(|&x| x == r) {
            Some(k) => out[k].push(i),
            None => {
                roots.push(r);
                out.push(vec![i]);
            }
        }
    }
    out
}

/// The point chart and branch charts of a wedge-shaped presentation: exactly
/// one zero-dimensional chart, and every arrow leaves it.
pub fn wedge_structure(p: &GermPresentation) -> core::result::Result<(usize, Vec<usize>), String> {
    let points: Vec<usize> = (0..p.charts.len()).filter(|&i| p.charts[i].dim == 0).collect();
    let [point] = points[..] else {
        return Err(format!("it has {} zero-dimensional charts", points.len()));
    };
    if let Some(a) = p.arrows.iter().find(|a| a.src != point) {
        return Err(format!("arrow `{}` does not start at the marked point", a.id));
    }
    let branches = (0..p.charts.len()).filter(|&i| i != point).collect();
    Ok((point, branches))
}

/// An arrow of the saturated arrow set; `label` records how it was composed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedArrow {
    pub label: String,
    pub src: usize,
    pub dst: usize,
    pub map: PolyMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub arrows: Vec<ClosedArrow>,
    /// No further composite with a generator produces a new arrow.
    pub closed: bool,
}

impl Closure {
    /// Arrows `src -> dst`.
    pub fn hom(&self, src: usize, dst: usize) -> impl Iterator<Item = &ClosedArrow> {
        self.arrows.iter().filter(move |a| a.src == src && a.dst == dst)
    }
}

/// Saturates the arrows (identities included) under composition with the
/// generators, keeping every composite of at most `depth` generators.
///
/// Arrows are deduplicated by exact polynomial equality. `closed` is true
/// when one further round of composition would add nothing.
pub fn composition_closure(p: &GermPresentation, depth: usize) -> Result<Closure> {
    p.ensure_valid()?;
    let depth = depth.max(1);
    let mut set: Vec<ClosedArrow> = p
        .charts
        .iter()
        .enumerate()
        .map(|(i, c)| ClosedArrow {
            label: format!("id_{}", c.id),
            src: i,
            dst: i,
            map: PolyMap::identity(c.dim),
        })
        .collect();
    let mut frontier = Vec::new();
    for a in &p.arrows {
        let candidate = ClosedArrow {
            label: a.id.clone(),
            src: a.src,
            dst: a.dst,
            map: a.map.clone(),
        };
        if insert_new(&mut set, candidate.clone()) {
            frontier.push(candidate);
        }
    }
    let mut rounds_left = depth - 1;
    loop {
        let mut fresh = Vec::new();
        for f in &frontier {
            for g in p.arrows.iter().filter(|g| g.src == f.dst) {
                let map = compose_maps(&g.map, &f.map)?;
                let candidate = ClosedArrow {
                    label: format!("{}∘{}", g.id, f.label),
                    src: f.src,
                    dst: g.dst,
                    map,
                };
                if !contains(&set, &candidate) && !contains(&fresh, &candidate) {
                    fresh.push(candidate);
                }
            }
        }
        if fresh.is_empty() {
            return Ok(Closure {
                arrows: set,
                closed: true,
            });
        }
        if rounds_left == 0 {
            return Ok(Closure {
                arrows: set,
                closed: false,
            });
        }
        rounds_left -= 1;
        set.extend(fresh.iter().cloned());
        frontier = fresh;
    }
}

fn contains(set: &[ClosedArrow], a: &ClosedArrow) -> bool {
    set.iter().any(|b| b.src == a.src && b.dst == a.dst && b.map == a.map)
}

fn insert_new(set: &mut Vec<ClosedArrow>, a: ClosedArrow) -> bool {
    if contains(set, &a) {
        false
    } else {
        set.push(a);
        true
    }
}

/// Three-valued verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    fn from_bool(b: bool) -> Self {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filteredness {
    pub weakly_filtered: Tri,
    pub filtered: Tri,
    /// A pair of charts with no common target, when weak filteredness fails.
    pub uncovered_pair: Option<(String, String)>,
    /// A parallel pair nobody coequalizes, when filteredness fails.
    pub unequalized_pair: Option<(String, String)>,
}

/// Decides (weak) filteredness of the fragment within its closed arrow set.
/// Both verdicts are `Unknown` when closure is not reached within `depth`.
pub fn filteredness(p: &GermPresentation, depth: usize) -> Result<Filteredness> {
    let closure = composition_closure(p, depth)?;
    if !closure.closed {
        return Ok(Filteredness {
            weakly_filtered: Tri::Unknown,
            filtered: Tri::Unknown,
            uncovered_pair: None,
            unequalized_pair: None,
        });
    }
    let n = p.charts.len();
    let mut uncovered = None;
    'pairs: for i in 0..n {
        for j in i + 1..n {
            let covered = (0..n).any(|l| closure.hom(i, l).next().is_some() && closure.hom(j, l).next().is_some());
            if !covered {
                uncovered = Some((p.charts[i].id.clone(), p.charts[j].id.clone()));
                break 'pairs;
            }
        }
    }
    let weak = uncovered.is_none();
    let mut unequalized = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let parallel: Vec<&ClosedArrow> = closure.hom(i, j).collect();
            for (x, f) in parallel.iter().enumerate() {
                for g in &parallel[x + 1..] {
                    let coequalized = closure.arrows.iter().filter(|h| h.src == j).any(|h| {
                        compose_maps(&h.map, &f.map).ok() == compose_maps(&h.map, &g.map).ok()
                    });
                    if !coequalized {
                        unequalized = Some((f.label.clone(), g.label.clone()));
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(Filteredness {
        weakly_filtered: Tri::from_bool(weak),
        filtered: Tri::from_bool(weak && unequalized.is_none()),
        uncovered_pair: uncovered,
        unequalized_pair: unequalized,
    })
}

/// A map of presented spaces: each source chart factors through a target
/// chart via a pointed polynomial germ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedMap {
    pub source: GermPresentation,
    pub target: GermPresentation,
    /// Per source chart: target chart index and the factoring germ.
    pub charts: Vec<(usize, PolyMap)>,
}

impl PresentedMap {
    /// Checks shapes, pointedness and commutation with every source arrow.
    ///
    /// For a source arrow `f : i -> j` the composites `φ_j ∘ f` and `φ_i`
    /// land in target charts `τ(j)`, `τ(i)`. They must agree exactly when the
    /// charts coincide; otherwise some target arrow `g : τ(i) -> τ(j)` must
    /// satisfy `g ∘ φ_i = φ_j ∘ f`, or, failing that, both must agree after
    /// the target's ambient realization.
    pub fn validate(&self) -> Result<()> {
        self.source.ensure_valid()?;
        self.target.ensure_valid()?;
        if self.charts.len() != self.source.charts.len() {
            return Err(Error::InvalidMap(format!(
                "expected {} chart assignments, got {}",
                self.source.charts.len(),
                self.charts.len()
            )));
        }
        for (c, (t, phi)) in self.source.charts.iter().zip(&self.charts) {
            let Some(tc) = self.target.charts.get(*t) else {
                return Err(Error::InvalidMap(format!("chart `{}` maps to a missing target chart", c.id)));
            };
            if (phi.source_dim(), phi.target_dim()) != (c.dim, tc.dim) {
                return Err(Error::InvalidMap(format!(
                    "germ for `{}` should be R^{} -> R^{}, got R^{} -> R^{}",
                    c.id,
                    c.dim,
                    tc.dim,
                    phi.source_dim(),
                    phi.target_dim()
                )));
            }
            if !phi.is_pointed() {
                return Err(Error::InvalidMap(format!("germ for `{}` is not pointed", c.id)));
            }
        }
        for f in &self.source.arrows {
            let (ti, phi_i) = &self.charts[f.src];
            let (tj, phi_j) = &self.charts[f.dst];
            let via_j = compose_maps(phi_j, &f.map)?;
            let ok = if ti == tj {
                &via_j == phi_i
            } else {
                let by_arrow = self
                    .target
                    .arrows
                    .iter()
                    .filter(|g| g.src == *ti && g.dst == *tj)
                    .any(|g| compose_maps(&g.map, phi_i).ok().as_ref() == Some(&via_j));
                by_arrow
                    || self.target.ambient.as_ref().is_some_and(|amb| {
                        compose_maps(&amb.embeds[*tj], &via_j).ok()
                            == compose_maps(&amb.embeds[*ti], phi_i).ok()
                    })
            };
            if !ok {
                return Err(Error::InvalidMap(format!(
                    "does not commute with source arrow `{}`",
                    f.id
                )));
            }
        }
        Ok(())
    }

    /// The identity of a presentation.
    pub fn identity(p: &GermPresentation) -> Self {
        PresentedMap {
            source: p.clone(),
            target: p.clone(),
            charts: p
                .charts
                .iter()
                .enumerate()
                .map(|(i, c)| (i, PolyMap::identity(c.dim)))
                .collect(),
        }
    }

    /// The map into `R^N` given by the ambient realization.
    pub fn from_ambient(p: &GermPresentation) -> Result<Self> {
        let amb = p.ambient.as_ref().ok_or(Error::MissingAmbient)?;
        let target = crate::catalog::euclidean(amb.dim);
        Ok(PresentedMap {
            source: p.clone(),
            target,
            charts: amb.embeds.iter().map(|e| (0, e.clone())).collect(),
        })
    }
}
