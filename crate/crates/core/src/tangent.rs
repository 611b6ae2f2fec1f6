//! The colimit engine: fibre functors on a presentation, colimits and limits of
//! vector-space diagrams, the comparison map `ρ : T^k -> ⋀^k T`, and
//! pushforwards along presented maps.
//!
//! Colimits are taken over the listed arrows plus implicit identities; the
//! arrows are not closed under composition first, since composites add no
//! new relations.
//!
//! Basis convention: the colimit is the direct sum of the objects (in object
//! order) modulo the relation span, with the quotient basis given by the
//! standard basis vectors of the direct sum picked out by
//! [`cokernel_presentation`]. Cocone matrices are therefore reproducible.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{shape_err, Error, Result};
use num_traits::One;

use crate::linalg::{cokernel_presentation, kernel_basis, QuotientPresentation, RatMat, Rational};
use crate::multilinear::{binomial, exterior_power_map};
use crate::presentation::{GermPresentation, PresentedMap};

/// Finite diagram of coordinate spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectDiagram {
    objects: Vec<usize>,
    arrows: Vec<(usize, usize, RatMat)>,
}

impl VectDiagram {
    pub fn new(objects: Vec<usize>, arrows: Vec<(usize, usize, RatMat)>) -> Result<Self> {
        for (s, t, a) in &arrows {
            let (Some(&ds), Some(&dt)) = (objects.get(*s), objects.get(*t)) else {
                return Err(Error::BadParameter(format!("arrow {s} -> {t} has a missing endpoint")));
            };
            if a.shape() != (dt, ds) {
                return Err(shape_err(
                    "vect diagram arrow",
                    format_args!("{dt}x{ds}"),
                    format_args!("{}x{}", a.rows(), a.cols()),
                ));
            }
        }
        Ok(VectDiagram { objects, arrows })
    }

    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    pub fn arrows(&self) -> &[(usize, usize, RatMat)] {
        &self.arrows
    }

    fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.objects.len() + 1);
        let mut acc = 0;
        out.push(0);
        for d in &self.objects {
            acc += d;
            out.push(acc);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColimitResult {
    pub dim: usize,
    /// One `dim x object_dim` matrix per object.
    pub cocone: Vec<RatMat>,
    /// The colimit as a quotient of the direct sum of the objects.
    pub relations: QuotientPresentation,
}

impl ColimitResult {
    /// The unique `u` with `u · cocone_i = maps_i` for all `i`, or `None` if
    /// `maps` is not a compatible cocone. `maps` must share a common target.
    pub fn factor(&self, maps: &[&RatMat]) -> Result<Option<RatMat>> {
        if maps.len() != self.cocone.len() {
            return Err(shape_err("cocone factorization", maps.len(), self.cocone.len()));
        }
        let target = maps.first().map(|m| m.rows()).unwrap_or(0);
        for (m, c) in maps.iter().zip(&self.cocone) {
            if m.shape() != (target, c.cols()) {
                return Err(shape_err(
                    "cocone factorization",
                    format_args!("{}x{}", target, c.cols()),
                    format_args!("{}x{}", m.rows(), m.cols()),
                ));
            }
        }
        let stacked = RatMat::hstack(target, maps);
        let u = &stacked * &self.relations.section;
        Ok((&u * &self.relations.projection == stacked).then_some(u))
    }
}

/// Colimit of a diagram: the direct sum modulo `ι_j(A v) - ι_i(v)` for every
/// arrow `A : i -> j` and source basis vector `v`.
pub fn vect_colimit(d: &VectDiagram) -> ColimitResult {
    let offsets = d.offsets();
    let total = offsets[d.objects.len()];
    let ncols: usize = d.arrows.iter().map(|(s, _, _)| d.objects[*s]).sum();
    let mut rel = RatMat::zeros(total, ncols);
    let mut col = 0;
    for (s, t, a) in &d.arrows {
        for v in 0..d.objects[*s] {
            for r in 0..d.objects[*t] {
                rel[(offsets[*t] + r, col)] += &a[(r, v)];
            }
            rel[(offsets[*s] + v, col)] -= Rational::one();
            col += 1;
        }
    }
    let q = cokernel_presentation(&rel);
    let cocone = (0..d.objects.len())
        .map(|i| q.projection.col_range(offsets[i], offsets[i + 1]))
        .collect();
    ColimitResult {
        dim: q.quotient_dim,
        cocone,
        relations: q,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitResult {
    pub dim: usize,
    /// One `object_dim x dim` matrix per object.
    pub cone: Vec<RatMat>,
}

/// Limit of a diagram: the kernel of `(x_i) ↦ (A x_s - x_t)` on the product.
pub fn vect_limit(d: &VectDiagram) -> LimitResult {
    let offsets = d.offsets();
    let total = offsets[d.objects.len()];
    let nrows: usize = d.arrows.iter().map(|(_, t, _)| d.objects[*t]).sum();
    let mut diff = RatMat::zeros(nrows, total);
    let mut row = 0;
    for (s, t, a) in &d.arrows {
        for r in 0..d.objects[*t] {
            for c in 0..d.objects[*s] {
                diff[(row, offsets[*s] + c)] += &a[(r, c)];
            }
            diff[(row, offsets[*t] + r)] -= Rational::one();
            row += 1;
        }
    }
    let k = kernel_basis(&diff);
    let cone = (0..d.objects.len())
        .map(|i| k.row_range(offsets[i], offsets[i + 1]))
        .collect();
    LimitResult { dim: k.cols(), cone }
}

/// The image of the presentation under `⋀^k ∘ T_0`: objects `⋀^k R^{n_i}`,
/// arrows `⋀^k` of the Jacobians at the origin.
pub fn apply_fibre_functor(p: &GermPresentation, k: usize) -> Result<VectDiagram> {
    p.ensure_valid()?;
    let objects = p.charts.iter().map(|c| binomial(c.dim, k)).collect();
    let arrows = p
        .arrows
        .iter()
        .map(|a| Ok((a.src, a.dst, exterior_power_map(&a.map.jacobian_at_zero()?, k))))
        .collect::<Result<Vec<_>>>()?;
    VectDiagram::new(objects, arrows)
}

/// Colimit of `⋀^k ∘ T_0`: the fibre of `T^k` at the marked point.
pub fn bundle_fibre(p: &GermPresentation, k: usize) -> Result<ColimitResult> {
    Ok(vect_colimit(&apply_fibre_functor(p, k)?))
}

/// The internal tangent space at the marked point.
pub fn tangent_space(p: &GermPresentation) -> Result<ColimitResult> {
    bundle_fibre(p, 1)
}

/// `dim ⋀^k T`.
pub fn wedge_tangent_dim(p: &GermPresentation, k: usize) -> Result<usize> {
    Ok(binomial(tangent_space(p)?.dim, k))
}

/// Matrix of `ρ : T^k -> ⋀^k T` in the colimit basis of `T^k` and the
/// lexicographic wedge basis of `⋀^k T`.
///
/// On the slot of chart `i` it is `⋀^k` of the tangent cocone map; that
/// this kills every relation of `T^k` is checked on each call.
pub fn rho_map(p: &GermPresentation, k: usize) -> Result<RatMat> {
    let t = tangent_space(p)?;
    let tk = bundle_fibre(p, k)?;
    let target = binomial(t.dim, k);
    let blocks: Vec<RatMat> = t.cocone.iter().map(|c| exterior_power_map(c, k)).collect();
    let refs: Vec<&RatMat> = blocks.iter().collect();
    let m = RatMat::hstack(target, &refs);
    if !(&m * &tk.relations.relation_basis).is_zero() {
        return Err(Error::Internal(format!(
            "rho in degree {k} does not annihilate the relations of {}",
            p.name
        )));
    }
    Ok(&m * &tk.relations.section)
}

/// Rank data of a linear map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapSummary {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl MapSummary {
    pub fn of(m: &RatMat) -> Self {
        MapSummary {
            source_dim: m.cols(),
            target_dim: m.rows(),
            rank: m.rank(),
        }
    }

    pub fn injective(&self) -> bool {
        self.rank == self.source_dim
    }

    pub fn surjective(&self) -> bool {
        self.rank == self.target_dim
    }

    pub fn iso(&self) -> bool {
        self.injective() && self.surjective()
    }
}

/// Maps induced on `T^k` and on `⋀^k T` by a presented map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushforward {
    pub bundle: RatMat,
    pub wedge: RatMat,
    /// The induced map on tangent spaces.
    pub tangent: RatMat,
}

fn induced(m: &PresentedMap, src: &ColimitResult, dst: &ColimitResult, k: usize) -> Result<RatMat> {
    let mut blocks = Vec::with_capacity(m.charts.len());
    for (t, phi) in &m.charts {
        let j = exterior_power_map(&phi.jacobian_at_zero()?, k);
        blocks.push(&dst.cocone[*t] * &j);
    }
    let refs: Vec<&RatMat> = blocks.iter().collect();
    let stacked = RatMat::hstack(dst.dim, &refs);
    if !(&stacked * &src.relations.relation_basis).is_zero() {
        return Err(Error::InvalidMap(format!(
            "does not descend to the degree-{k} fibre of the fragment {}",
            m.source.name
        )));
    }
    Ok(&stacked * &src.relations.section)
}

/// Induced maps on fibres; the square with `ρ` on both sides is checked.
pub fn pushforward_map(m: &PresentedMap, k: usize) -> Result<Pushforward> {
    m.validate()?;
    let t_src = tangent_space(&m.source)?;
    let t_dst = tangent_space(&m.target)?;
    let tangent = induced(m, &t_src, &t_dst, 1)?;
    let bundle = induced(m, &bundle_fibre(&m.source, k)?, &bundle_fibre(&m.target, k)?, k)?;
    let wedge = exterior_power_map(&tangent, k);
    let left = &rho_map(&m.target, k)? * &bundle;
    let right = &wedge * &rho_map(&m.source, k)?;
    if left != right {
        return Err(Error::Internal(format!("pushforward does not commute with rho in degree {k}")));
    }
    Ok(Pushforward {
        bundle,
        wedge,
        tangent,
    })
}
