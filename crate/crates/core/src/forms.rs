//! Differential forms on a presented space as compatible families of chart
//! forms, their values at the marked point, the dual comparison `ρ*`, and
//! section checking on wedge-type presentations.
//!
//! Functionals are row vectors throughout: the value of a chart form at the
//! origin is a row on `⋀^k R^n`, and a [`PointForm`] is a row on the `T^k`
//! colimit.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{shape_err, Error, Result};
use crate::linalg::{kernel_basis, solve, Rational, RatMat};
use crate::presentation::{wedge_structure, GermPresentation, PresentedMap};
use crate::symcalc::{form_value_at_zero, pullback_form, PolyForm, PolyMap};
use crate::tangent::{bundle_fibre, pushforward_map, rho_map, tangent_space};

/// One chart form per chart; a candidate element of `Ω^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedForm {
    pub name: String,
    pub degree: usize,
    pub components: Vec<PolyForm>,
}

impl PresentedForm {
    pub fn new(name: impl Into<String>, degree: usize, components: Vec<PolyForm>) -> Self {
        PresentedForm {
            name: name.into(),
            degree,
            components,
        }
    }

    pub fn zero(p: &GermPresentation, degree: usize) -> Self {
        PresentedForm::new(
            "0",
            degree,
            p.charts.iter().map(|c| PolyForm::zero(c.dim, degree)).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(PolyForm::is_zero)
    }

    /// Rejects families whose components do not fit the charts of `p`.
    pub fn check_shape(&self, p: &GermPresentation) -> Result<()> {
        if self.components.len() != p.charts.len() {
            return Err(shape_err(
                "presented form",
                format_args!("{} chart components", p.charts.len()),
                format_args!("{}", self.components.len()),
            ));
        }
        for (c, w) in p.charts.iter().zip(&self.components) {
            if w.degree() != self.degree {
                return Err(Error::Degree {
                    expected: self.degree,
                    actual: w.degree(),
                });
            }
            if w.domain_dim() != c.dim {
                return Err(shape_err(
                    "presented form component",
                    format_args!("form on R^{} for chart `{}`", c.dim, c.id),
                    format_args!("form on R^{}", w.domain_dim()),
                ));
            }
        }
        Ok(())
    }
}

/// Outcome of a compatibility check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Compatibility {
    Compatible,
    /// `pullback(ω_dst, arrow) - ω_src` is the nonzero `residual`.
    Incompatible { arrow: String, residual: PolyForm },
}

impl Compatibility {
    pub fn is_compatible(&self) -> bool {
        matches!(self, Compatibility::Compatible)
    }
}

impl fmt::Display for Compatibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Compatibility::Compatible => f.write_str("compatible"),
            Compatibility::Incompatible { arrow, residual } => {
                write!(f, "incompatible along `{arrow}` (residual {residual})")
            }
        }
    }
}

fn check_arrows(p: &GermPresentation, w: &PresentedForm, keep: impl Fn(usize, usize) -> bool) -> Result<Compatibility> {
    p.ensure_valid()?;
    w.check_shape(p)?;
    for a in p.arrows.iter().filter(|a| keep(a.src, a.dst)) {
        let pulled = pullback_form(&w.components[a.dst], &a.map)?;
        let residual = pulled.sub(&w.components[a.src])?;
        if !residual.is_zero() {
            return Ok(Compatibility::Incompatible {
                arrow: a.id.clone(),
                residual,
            });
        }
    }
    Ok(Compatibility::Compatible)
}

/// Checks `pullback(ω_j, f) = ω_i` exactly for every arrow `f : i -> j`.
pub fn check_form_compatibility(p: &GermPresentation, w: &PresentedForm) -> Result<Compatibility> {
    check_arrows(p, w, |_, _| true)
}

/// Top-degree check: only arrows between charts of the maximal dimension `n`
/// are examined. Requires `degree = n = max chart dim`.
pub fn check_on_top_charts(p: &GermPresentation, w: &PresentedForm, n: usize) -> Result<Compatibility> {
    let top = p.max_chart_dim();
    if n != top {
        return Err(Error::Degree {
            expected: top,
            actual: n,
        });
    }
    if w.degree != n {
        return Err(Error::Degree {
            expected: n,
            actual: w.degree,
        });
    }
    check_arrows(p, w, |s, t| p.charts[s].dim == n && p.charts[t].dim == n)
}

/// True iff every chart component vanishes at the origin.
pub fn vanishes_at_point(w: &PresentedForm) -> bool {
    w.components
        .iter()
        .all(|c| form_value_at_zero(c).iter().all(Zero::is_zero))
}

/// A functional on the `T^k` fibre, in its colimit basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointForm {
    pub degree: usize,
    pub coords: Vec<Rational>,
}

impl PointForm {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn as_row(&self) -> RatMat {
        RatMat::row(self.coords.clone())
    }
}

fn require_compatible(p: &GermPresentation, w: &PresentedForm) -> Result<()> {
    match check_form_compatibility(p, w)? {
        Compatibility::Compatible => Ok(()),
        Compatibility::Incompatible { arrow, .. } => Err(Error::IncompatibleForm {
            form: w.name.clone(),
            arrow,
        }),
    }
}

/// Assembles the chart values at the origin into a functional on `T^k`.
pub fn form_at_point(p: &GermPresentation, w: &PresentedForm) -> Result<PointForm> {
    require_compatible(p, w)?;
    let fibre = bundle_fibre(p, w.degree)?;
    let values: Vec<Rational> = w.components.iter().flat_map(form_value_at_zero).collect();
    let row = RatMat::row(values);
    if !(&row * &fibre.relations.relation_basis).is_zero() {
        return Err(Error::Internal(format!(
            "values of the compatible form `{}` do not descend to the fibre",
            w.name
        )));
    }
    Ok(PointForm {
        degree: w.degree,
        coords: (&row * &fibre.relations.section).entries().to_vec(),
    })
}

/// Pulls an ambient form back to every chart.
pub fn restrict_ambient_form(p: &GermPresentation, w: &PolyForm) -> Result<PresentedForm> {
    let amb = p.ambient.as_ref().ok_or(Error::MissingAmbient)?;
    if w.domain_dim() != amb.dim {
        return Err(shape_err(
            "ambient form",
            format_args!("form on R^{}", amb.dim),
            format_args!("form on R^{}", w.domain_dim()),
        ));
    }
    let components = amb
        .embeds
        .iter()
        .map(|e| pullback_form(w, e))
        .collect::<Result<Vec<_>>>()?;
    let out = PresentedForm::new(format!("restricted({w})"), w.degree(), components);
    if !check_form_compatibility(p, &out)?.is_compatible() {
        return Err(Error::Internal("restriction of an ambient form is incompatible".into()));
    }
    Ok(out)
}

/// Pulls a form on the target of `m` back to its source.
pub fn pullback_family(m: &PresentedMap, w: &PresentedForm) -> Result<PresentedForm> {
    w.check_shape(&m.target)?;
    let components = m
        .charts
        .iter()
        .map(|(t, phi)| pullback_form(&w.components[*t], phi))
        .collect::<Result<Vec<_>>>()?;
    Ok(PresentedForm::new(format!("pullback({})", w.name), w.degree, components))
}

/// Pulls a functional on `⋀^k` of the target tangent space back along the
/// pushforward: a functional on `⋀^k` of the source tangent space.
pub fn tilde_form_at_point(m: &PresentedMap, functional: &[Rational], k: usize) -> Result<Vec<Rational>> {
    let push = pushforward_map(m, k)?;
    if functional.len() != push.wedge.rows() {
        return Err(shape_err(
            "functional on the wedge power of the target tangent space",
            push.wedge.rows(),
            functional.len(),
        ));
    }
    let row = RatMat::row(functional.to_vec());
    Ok((&row * &push.wedge).entries().to_vec())
}

/// The value at the marked point of an ambient form seen as a functional on
/// `⋀^k T`, through the ambient realization.
pub fn tilde_ambient_form(p: &GermPresentation, w: &PolyForm) -> Result<Vec<Rational>> {
    let m = PresentedMap::from_ambient(p)?;
    if w.domain_dim() != m.target.charts[0].dim {
        return Err(shape_err(
            "ambient form",
            format_args!("form on R^{}", m.target.charts[0].dim),
            format_args!("form on R^{}", w.domain_dim()),
        ));
    }
    tilde_form_at_point(&m, &form_value_at_zero(w), w.degree())
}

/// `ρ*`, the transpose of [`rho_map`]: sends functionals on `⋀^k T` to
/// functionals on `T^k` (as columns).
pub fn rho_dual(p: &GermPresentation, k: usize) -> Result<RatMat> {
    Ok(rho_map(p, k)?.transpose())
}

/// Dimension of the span of the point values of a finite family.
pub fn reachable_fibre_dim(p: &GermPresentation, forms: &[PresentedForm]) -> Result<usize> {
    let mut rows = Vec::with_capacity(forms.len());
    let mut width = None;
    for w in forms {
        let v = form_at_point(p, w)?;
        match width {
            None => width = Some(v.coords.len()),
            Some(n) if n != v.coords.len() => {
                return Err(Error::Degree {
                    expected: forms[0].degree,
                    actual: w.degree,
                })
            }
            Some(_) => {}
        }
        rows.push(v.coords);
    }
    let Some(width) = width else { return Ok(0) };
    Ok(RatMat::from_rows(width, rows).rank())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionKind {
    Tangent,
    Cotangent,
}

impl fmt::Display for SectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SectionKind::Tangent => "tangent",
            SectionKind::Cotangent => "cotangent",
        })
    }
}

/// Per-chart coefficient data for a section of `T` or `T*`.
///
/// Chart `i` carries a map `R^{n_i} -> R^{n_i}`: coefficients in the
/// coordinate frame (tangent) or coframe (cotangent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedSection {
    pub name: String,
    pub kind: SectionKind,
    pub components: Vec<PolyMap>,
    /// Cotangent only: a functional on the tangent space at the marked point.
    pub point: Option<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionReport {
    pub valid: bool,
    /// The linear conditions on the chart values at the origin, one per line.
    pub constraints: Vec<String>,
    /// Conditions the given data violates.
    pub violated: Vec<String>,
    /// Cotangent only: the functional the chart values determine.
    pub functional: Option<Vec<Rational>>,
}

fn render_constraint(coeffs: &[Rational], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(" = 0");
    out
}

/// Decides whether per-chart data glues to a section over a wedge-type
/// presentation.
///
/// Tangent: the cocone images of the branch values at the origin must be one
/// vector. Cotangent: one functional on the tangent space must restrict to
/// every branch value; if a point functional is given it must be that one.
/// The zero-dimensional point chart imposes nothing.
pub fn check_section(p: &GermPresentation, s: &PresentedSection) -> Result<SectionReport> {
    if !p.wedge {
        return Err(Error::NotWedgeType);
    }
    p.ensure_valid()?;
    let (_, branches) = wedge_structure(p).map_err(Error::InvalidPresentation)?;
    if s.components.len() != p.charts.len() {
        return Err(shape_err("section", p.charts.len(), s.components.len()));
    }
    for (c, m) in p.charts.iter().zip(&s.components) {
        if (m.source_dim(), m.target_dim()) != (c.dim, c.dim) {
            return Err(shape_err(
                "section component",
                format_args!("map R^{} -> R^{} for chart `{}`", c.dim, c.dim, c.id),
                format_args!("R^{} -> R^{}", m.source_dim(), m.target_dim()),
            ));
        }
    }
    let t = tangent_space(p)?;
    let mut names = Vec::new();
    let mut values = Vec::new();
    for &b in &branches {
        let c = &p.charts[b];
        for (r, comp) in s.components[b].components().iter().enumerate() {
            names.push(format!("{}[{}](0)", c.id, r + 1));
            values.push(comp.constant_term());
        }
    }
    let blocks: Vec<&RatMat> = branches.iter().map(|&b| &t.cocone[b]).collect();
    let h = RatMat::hstack(t.dim, &blocks);
    let a = RatMat::column(values.clone());

    match s.kind {
        SectionKind::Tangent => {
            // consecutive differences cocone_b a_b - cocone_{b+1} a_{b+1}
            let pairs = branches.len().saturating_sub(1);
            let mut l = RatMat::zeros(pairs * t.dim, names.len());
            let mut off = 0;
            for (n, &b) in branches.iter().enumerate() {
                let d = p.charts[b].dim;
                for r in 0..t.dim {
                    for c in 0..d {
                        if n < pairs {
                            l[(n * t.dim + r, off + c)] += &t.cocone[b][(r, c)];
                        }
                        if n > 0 {
                            l[((n - 1) * t.dim + r, off + c)] -= &t.cocone[b][(r, c)];
                        }
                    }
                }
                off += d;
            }
            let (rref, pivots) = l.rref();
            let constraints: Vec<String> = (0..pivots.len())
                .map(|r| render_constraint(&rref.row_vec(r), &names))
                .collect();
            let residual = &rref * &a;
            let violated = (0..pivots.len())
                .filter(|&r| !residual[(r, 0)].is_zero())
                .map(|r| constraints[r].clone())
                .collect::<Vec<_>>();
            Ok(SectionReport {
                valid: violated.is_empty(),
                constraints,
                violated,
                functional: None,
            })
        }
        SectionKind::Cotangent => {
            let kernel = kernel_basis(&h);
            let constraints: Vec<String> = (0..kernel.cols())
                .map(|j| render_constraint(&kernel.col_vec(j), &names))
                .collect();
            let mut violated: Vec<String> = (0..kernel.cols())
                .filter(|&j| !(&kernel.col_range(j, j + 1).transpose() * &a).is_zero())
                .map(|j| constraints[j].clone())
                .collect();
            let functional = solve(&h.transpose(), &a).map(|l| l.entries().to_vec());
            if let (Some(given), Some(found)) = (&s.point, &functional) {
                if given.len() != t.dim {
                    return Err(shape_err("point functional", t.dim, given.len()));
                }
                if given != found {
                    violated.push(format!(
                        "point functional must equal ({})",
                        found.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
                    ));
                }
            }
            Ok(SectionReport {
                valid: violated.is_empty(),
                constraints,
                violated,
                functional,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::catalog;
    use crate::linalg::int;
    use crate::symcalc::Poly;

    fn s(n: usize) -> Poly {
        Poly::var(n, 0)
    }

    fn c(n: usize, v: i64) -> Poly {
        Poly::constant(n, int(v))
    }

    fn one_form(f: Poly) -> PolyForm {
        PolyForm::monomial(1, &[0], f).unwrap()
    }

    fn wedge_family(f: Poly, g: Poly) -> PresentedForm {
        PresentedForm::new("w", 1, vec![PolyForm::zero(0, 1), one_form(f), one_form(g)])
    }

    fn area() -> PolyForm {
        PolyForm::monomial(2, &[0, 1], Poly::one(2)).unwrap()
    }

    #[test]
    fn wedge_families_are_compatible() {
        let p = catalog::wedge_lines(2);
        let w = wedge_family(&s(1) * &s(1), &c(1, 3) - &s(1));
        assert_eq!(check_form_compatibility(&p, &w).unwrap(), Compatibility::Compatible);
    }

    #[test]
    fn z2_forms() {
        let p = catalog::z2_quotient();
        let area = PresentedForm::new("area", 2, vec![area()]);
        assert!(check_form_compatibility(&p, &area).unwrap().is_compatible());
        let dx = PresentedForm::new("dx", 1, vec![PolyForm::coordinate(2, 0)]);
        match check_form_compatibility(&p, &dx).unwrap() {
            Compatibility::Incompatible { arrow, residual } => {
                assert_eq!(arrow, "neg");
                assert_eq!(residual, PolyForm::coordinate(2, 0).scale(&int(-2)));
            }
            other => panic!("{other}"),
        }
        assert_eq!(
            form_at_point(&p, &dx).unwrap_err(),
            Error::IncompatibleForm {
                form: "dx".into(),
                arrow: "neg".into()
            }
        );
        let v = form_at_point(&p, &area).unwrap();
        assert_eq!(v.coords, vec![int(1)]);
        assert!(!vanishes_at_point(&area));
        // ρ* has no columns to hit a nonzero value
        let rd = rho_dual(&p, 2).unwrap();
        assert_eq!(rd.shape(), (1, 0));
    }

    #[test]
    fn top_chart_checks() {
        let p = catalog::z2_quotient();
        let vol = PresentedForm::new("area", 2, vec![area()]);
        assert_eq!(
            check_on_top_charts(&p, &vol, 2).unwrap(),
            check_form_compatibility(&p, &vol).unwrap()
        );
        let e = catalog::euclidean(2);
        let f = PresentedForm::new("f", 2, vec![area().mul_function(&(&s(2) + &c(2, 5)))]);
        assert!(check_on_top_charts(&e, &f, 2).unwrap().is_compatible());
        assert!(matches!(check_on_top_charts(&e, &f, 1), Err(Error::Degree { .. })));
    }

    #[test]
    fn vanishing() {
        let x_dx = wedge_family(s(1), s(1));
        assert!(vanishes_at_point(&x_dx));
        assert!(!vanishes_at_point(&wedge_family(c(1, 1), c(1, 1))));
    }

    #[test]
    fn point_values_on_wedge() {
        let p = catalog::wedge_lines(2);
        let v = form_at_point(&p, &wedge_family(c(1, 2), c(1, 3))).unwrap();
        assert_eq!(v.coords, vec![int(2), int(3)]);
        assert!(form_at_point(&p, &wedge_family(s(1), &s(1) * &s(1))).unwrap().is_zero());
    }

    #[test]
    fn ambient_restrictions() {
        let p = catalog::axes_subset();
        let r = restrict_ambient_form(&p, &area()).unwrap();
        assert!(r.is_zero());
        let dx = restrict_ambient_form(&p, &PolyForm::coordinate(2, 0)).unwrap();
        assert_eq!(dx.components[1], PolyForm::coordinate(1, 0));
        assert!(dx.components[2].is_zero());
        let sp = restrict_ambient_form(&catalog::spaghetti(3), &PolyForm::coordinate(2, 0)).unwrap();
        assert!(sp.components[1..].iter().all(|w| *w == PolyForm::coordinate(1, 0)));
        assert_eq!(
            restrict_ambient_form(&catalog::wedge_lines(2), &area()).unwrap_err(),
            Error::MissingAmbient
        );
    }

    #[test]
    fn tilde_values() {
        let p = catalog::axes_subset();
        assert_eq!(tilde_ambient_form(&p, &area()).unwrap(), vec![int(1)]);
        assert!(tilde_ambient_form(&p, &PolyForm::zero(2, 2)).unwrap().iter().all(Zero::is_zero));
        assert_eq!(tilde_ambient_form(&catalog::euclidean(2), &area()).unwrap(), vec![int(1)]);
        let rd = rho_dual(&p, 2).unwrap();
        assert_eq!(rd.shape(), (0, 1));
    }

    #[test]
    fn reachable_dims() {
        let p = catalog::wedge_lines(2);
        let fam = [wedge_family(c(1, 1), c(1, 0)), wedge_family(c(1, 0), c(1, 1))];
        assert_eq!(reachable_fibre_dim(&p, &fam).unwrap(), 2);
        assert_eq!(reachable_fibre_dim(&p, &[]).unwrap(), 0);
        let z = catalog::z2_quotient();
        let a = PresentedForm::new("a", 2, vec![area()]);
        let b = PresentedForm::new("b", 2, vec![area().scale(&int(2))]);
        assert_eq!(reachable_fibre_dim(&z, &[a, b]).unwrap(), 1);
    }

    fn section(kind: SectionKind, f: Poly, g: Poly) -> PresentedSection {
        PresentedSection {
            name: "s".into(),
            kind,
            components: vec![
                PolyMap::zero(0, 0),
                PolyMap::new(1, vec![f]).unwrap(),
                PolyMap::new(1, vec![g]).unwrap(),
            ],
            point: None,
        }
    }

    #[test]
    fn tangent_sections() {
        let p = catalog::wedge_lines(2);
        let ok = check_section(&p, &section(SectionKind::Tangent, &s(1) * &s(1), s(1).pow(3))).unwrap();
        assert!(ok.valid);
        let bad = check_section(&p, &section(SectionKind::Tangent, &c(1, 1) + &s(1), s(1))).unwrap();
        assert!(!bad.valid);
        assert_eq!(bad.constraints, vec!["x1[1](0) = 0".to_string(), "x2[1](0) = 0".to_string()]);
        assert_eq!(bad.violated, vec!["x1[1](0) = 0".to_string()]);
    }

    #[test]
    fn cotangent_sections() {
        let p = catalog::wedge_lines(2);
        let mut sec = section(SectionKind::Cotangent, &c(1, 1) + &s(1), &c(1, 2) - &s(1));
        let r = check_section(&p, &sec).unwrap();
        assert!(r.valid && r.constraints.is_empty());
        assert_eq!(r.functional, Some(vec![int(1), int(2)]));
        sec.point = Some(vec![int(1), int(3)]);
        assert!(!check_section(&p, &sec).unwrap().valid);
        assert_eq!(check_section(&catalog::z2_quotient(), &sec).unwrap_err(), Error::NotWedgeType);
    }

    #[test]
    fn single_branch_imposes_nothing() {
        let p = catalog::wedge_lines(1);
        let sec = PresentedSection {
            name: "s".into(),
            kind: SectionKind::Tangent,
            components: vec![PolyMap::zero(0, 0), PolyMap::new(1, vec![c(1, 7)]).unwrap()],
            point: None,
        };
        let r = check_section(&p, &sec).unwrap();
        assert!(r.valid && r.constraints.is_empty());
    }
}
