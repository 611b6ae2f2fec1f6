//! Exact polynomial calculus on Euclidean chart domains.
//!
//! Variables are positional: a [`Poly`] in `n` variables is written in
//! `s1..sn`. Germs are represented by polynomial maps, which is enough for
//! every transition germ the catalog needs; smooth-but-flat germs cannot be
//! expressed and are deliberately out of reach.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{shape_err, Error, Result};
use crate::linalg::{RatMat, Rational};
use crate::multilinear::IndexBasis;

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial over the rationals in canonical form: no
/// stored zero coefficients, every exponent vector has length `nvars`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The coordinate function `s_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.nvars])
    }

    /// Coefficient of `s_{i+1}` in the linear part.
    pub fn linear_coeff(&self, i: usize) -> Rational {
        let mut e = vec![0; self.nvars];
        e[i] = 1;
        self.coeff(&e)
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative in `s_{i+1}`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * Rational::from_integer(e[i].into()));
        }
        out
    }

    /// Substitutes `values[i]` for `s_{i+1}`; all values share one variable count.
    pub fn substitute(&self, values: &[Poly], target_nvars: usize) -> Self {
        assert_eq!(values.len(), self.nvars, "substitution arity");
        let mut powers: Vec<Vec<Poly>> = values.iter().map(|v| vec![Poly::one(v.nvars)]).collect();
        let mut out = Self::zero(target_nvars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target_nvars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &values[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation arity");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prints in the input grammar: `3/2*s1^2*s2 - s1 + 1`, highest lex term first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let is_const = e.iter().all(|&k| k == 0);
            let mut first = true;
            if is_const || !mag.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "s{}", i + 1)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Polynomial map `R^n -> R^m`, one component per target coordinate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyMap {
    source_dim: usize,
    components: Vec<Poly>,
}

impl PolyMap {
    pub fn new(source_dim: usize, components: Vec<Poly>) -> Result<Self> {
        if let Some(bad) = components.iter().find(|p| p.nvars() != source_dim) {
            return Err(shape_err(
                "polynomial map component",
                format_args!("{source_dim} variables"),
                format_args!("{} variables", bad.nvars()),
            ));
        }
        Ok(PolyMap {
            source_dim,
            components,
        })
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            source_dim: n,
            components: (0..n).map(|i| Poly::var(n, i)).collect(),
        }
    }

    /// The constant germ at the origin.
    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        PolyMap {
            source_dim,
            components: vec![Poly::zero(source_dim); target_dim],
        }
    }

    /// The linear map with the given `m x n` matrix.
    pub fn linear(a: &RatMat) -> Self {
        let n = a.cols();
        let components = (0..a.rows())
            .map(|r| Poly::from_terms(n, (0..n).map(|c| (unit(n, c), a[(r, c)].clone()))))
            .collect();
        PolyMap {
            source_dim: n,
            components,
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    /// Sends the origin to the origin.
    pub fn is_pointed(&self) -> bool {
        self.components.iter().all(|p| p.constant_term().is_zero())
    }

    /// Symbolic Jacobian, `target_dim x source_dim`.
    pub fn jacobian(&self) -> Vec<Vec<Poly>> {
        self.components
            .iter()
            .map(|p| (0..self.source_dim).map(|i| p.derivative(i)).collect())
            .collect()
    }

    pub fn jacobian_at_zero(&self) -> Result<RatMat> {
        if !self.is_pointed() {
            return Err(Error::NotPointed {
                context: format!("jacobian of {self}"),
            });
        }
        let n = self.source_dim;
        let mut j = RatMat::zeros(self.target_dim(), n);
        for (r, p) in self.components.iter().enumerate() {
            for c in 0..n {
                j[(r, c)] = p.linear_coeff(c);
            }
        }
        Ok(j)
    }

    pub fn eval(&self, point: &[Rational]) -> Vec<Rational> {
        self.components.iter().map(|p| p.eval(point)).collect()
    }
}

fn unit(n: usize, i: usize) -> Monomial {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// `f ∘ g`. Requires `g.target_dim() == f.source_dim()`.
pub fn compose_maps(f: &PolyMap, g: &PolyMap) -> Result<PolyMap> {
    if g.target_dim() != f.source_dim {
        return Err(shape_err(
            "compose_maps",
            format_args!("inner map into R^{}", f.source_dim),
            format_args!("R^{}", g.target_dim()),
        ));
    }
    let components = f
        .components
        .iter()
        .map(|p| p.substitute(&g.components, g.source_dim))
        .collect();
    Ok(PolyMap {
        source_dim: g.source_dim,
        components,
    })
}

impl fmt::Debug for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R^{} -> {}", self.source_dim, self)
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Differential `k`-form on `R^n` with polynomial coefficients, one per
/// element of [`IndexBasis`]`(n, k)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyForm {
    domain_dim: usize,
    degree: usize,
    coeffs: Vec<Poly>,
}

impl PolyForm {
    pub fn new(domain_dim: usize, degree: usize, coeffs: Vec<Poly>) -> Result<Self> {
        let expected = crate::multilinear::binomial(domain_dim, degree);
        if coeffs.len() != expected {
            return Err(shape_err(
                "form coefficients",
                format_args!("{expected} coefficients"),
                format_args!("{}", coeffs.len()),
            ));
        }
        if let Some(bad) = coeffs.iter().find(|p| p.nvars() != domain_dim) {
            return Err(shape_err(
                "form coefficient",
                format_args!("{domain_dim} variables"),
                format_args!("{} variables", bad.nvars()),
            ));
        }
        Ok(PolyForm {
            domain_dim,
            degree,
            coeffs,
        })
    }

    pub fn zero(domain_dim: usize, degree: usize) -> Self {
        PolyForm {
            domain_dim,
            degree,
            coeffs: vec![Poly::zero(domain_dim); crate::multilinear::binomial(domain_dim, degree)],
        }
    }

    pub fn function(p: Poly) -> Self {
        PolyForm {
            domain_dim: p.nvars(),
            degree: 0,
            coeffs: vec![p],
        }
    }

    /// `c · ds_{i1} ∧ ... ∧ ds_{ik}` for arbitrary (0-based) indices; repeated
    /// indices give zero and the sign follows the sorting permutation.
    pub fn monomial(domain_dim: usize, indices: &[usize], c: Poly) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= domain_dim) {
            return Err(shape_err(
                "differential index",
                format_args!("index below {domain_dim}"),
                bad + 1,
            ));
        }
        let mut form = Self::zero(domain_dim, indices.len());
        if let Some((sign, sorted)) = sort_with_sign(indices) {
            let basis = IndexBasis::new(domain_dim, indices.len());
            let pos = basis.position(&sorted).expect("sorted subset is a basis element");
            form.coeffs[pos] = if sign < 0 { -&c } else { c };
        }
        Ok(form)
    }

    /// `ds_{i+1}`.
    pub fn coordinate(domain_dim: usize, i: usize) -> Self {
        Self::monomial(domain_dim, &[i], Poly::one(domain_dim)).expect("index in range")
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map_coeffs(|p| p.scale(s))
    }

    pub fn mul_function(&self, f: &Poly) -> Self {
        self.map_coeffs(|p| p * f)
    }

    fn map_coeffs(&self, g: impl Fn(&Poly) -> Poly) -> Self {
        PolyForm {
            domain_dim: self.domain_dim,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(g).collect(),
        }
    }

    pub fn add(&self, other: &PolyForm) -> Result<Self> {
        self.same_space(other, "form sum")?;
        Ok(PolyForm {
            domain_dim: self.domain_dim,
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &PolyForm) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    fn same_space(&self, other: &PolyForm, context: &'static str) -> Result<()> {
        if (self.domain_dim, self.degree) != (other.domain_dim, other.degree) {
            return Err(shape_err(
                context,
                format_args!("{}-form on R^{}", self.degree, self.domain_dim),
                format_args!("{}-form on R^{}", other.degree, other.domain_dim),
            ));
        }
        Ok(())
    }

    /// Coordinates of the value at the origin in the dual of the wedge basis.
    pub fn value_at_zero(&self) -> Vec<Rational> {
        self.coeffs.iter().map(Poly::constant_term).collect()
    }
}

/// Sorts distinct indices and reports the permutation sign; `None` on repeats.
fn sort_with_sign(indices: &[usize]) -> Option<(i8, Vec<usize>)> {
    let mut v = indices.to_vec();
    let mut sign = 1i8;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            } else if v[j] == v[j + 1] {
                return None;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

/// `a ∧ b`; degrees add and the result is graded anticommutative.
pub fn wedge_forms(a: &PolyForm, b: &PolyForm) -> Result<PolyForm> {
    if a.domain_dim != b.domain_dim {
        return Err(shape_err("wedge_forms", a.domain_dim, b.domain_dim));
    }
    let n = a.domain_dim;
    let (ba, bb) = (IndexBasis::new(n, a.degree), IndexBasis::new(n, b.degree));
    let target = IndexBasis::new(n, a.degree + b.degree);
    let mut out = PolyForm::zero(n, a.degree + b.degree);
    for (i, si) in ba.subsets().iter().enumerate() {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for (j, sj) in bb.subsets().iter().enumerate() {
            if b.coeffs[j].is_zero() {
                continue;
            }
            let joined: Vec<usize> = si.iter().chain(sj).copied().collect();
            let Some((sign, sorted)) = sort_with_sign(&joined) else {
                continue;
            };
            let pos = target.position(&sorted).expect("basis element");
            let prod = &a.coeffs[i] * &b.coeffs[j];
            out.coeffs[pos] = if sign < 0 {
                &out.coeffs[pos] - &prod
            } else {
                &out.coeffs[pos] + &prod
            };
        }
    }
    Ok(out)
}

/// Determinant of a small square matrix of polynomials by cofactor expansion.
fn poly_det(m: &[Vec<Poly>], nvars: usize) -> Poly {
    match m.len() {
        0 => Poly::one(nvars),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        k => {
            let mut acc = Poly::zero(nvars);
            for c in 0..k {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][c] * &poly_det(&minor, nvars);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Pullback `f^* w` of a form on `R^m` along `f : R^n -> R^m`.
pub fn pullback_form(w: &PolyForm, f: &PolyMap) -> Result<PolyForm> {
    if f.target_dim() != w.domain_dim {
        return Err(shape_err(
            "pullback_form",
            format_args!("map into R^{}", w.domain_dim),
            format_args!("R^{}", f.target_dim()),
        ));
    }
    let (n, m, k) = (f.source_dim(), w.domain_dim, w.degree);
    let jac = f.jacobian();
    let src = IndexBasis::new(m, k);
    let dst = IndexBasis::new(n, k);
    let mut out = PolyForm::zero(n, k);
    for (j, sj) in src.subsets().iter().enumerate() {
        if w.coeffs[j].is_zero() {
            continue;
        }
        let pulled = w.coeffs[j].substitute(f.components(), n);
        for (i, si) in dst.subsets().iter().enumerate() {
            let minor: Vec<Vec<Poly>> = sj
                .iter()
                .map(|&r| si.iter().map(|&c| jac[r][c].clone()).collect())
                .collect();
            let det = poly_det(&minor, n);
            if det.is_zero() {
                continue;
            }
            out.coeffs[i] = &out.coeffs[i] + &(&pulled * &det);
        }
    }
    Ok(out)
}

/// Exterior derivative; `d ∘ d = 0`.
pub fn exterior_derivative(w: &PolyForm) -> PolyForm {
    let (n, k) = (w.domain_dim, w.degree);
    let src = IndexBasis::new(n, k);
    let dst = IndexBasis::new(n, k + 1);
    let mut out = PolyForm::zero(n, k + 1);
    for (j, sj) in src.subsets().iter().enumerate() {
        if w.coeffs[j].is_zero() {
            continue;
        }
        for i in (0..n).filter(|i| !sj.contains(i)) {
            let partial = w.coeffs[j].derivative(i);
            if partial.is_zero() {
                continue;
            }
            // moving ds_i past the smaller indices of sj
            let before = sj.iter().filter(|&&x| x < i).count();
            let mut merged = sj.clone();
            merged.insert(before, i);
            let pos = dst.position(&merged).expect("basis element");
            out.coeffs[pos] = if before % 2 == 1 {
                &out.coeffs[pos] - &partial
            } else {
                &out.coeffs[pos] + &partial
            };
        }
    }
    out
}

/// Value at the origin as coordinates in the dual of the lexicographic wedge basis.
pub fn form_value_at_zero(w: &PolyForm) -> Vec<Rational> {
    w.value_at_zero()
}

impl fmt::Debug for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-form on R^{}: {}", self.degree, self.domain_dim, self)
    }
}

/// Prints in the input grammar, e.g. `(s1 + 2) d[1] + (3) d[2]`; indices are 1-based.
impl fmt::Display for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let basis = IndexBasis::new(self.domain_dim, self.degree);
        let mut wrote = false;
        for (c, s) in self.coeffs.iter().zip(basis.subsets()) {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            wrote = true;
            write!(f, "({c}) d[")?;
            for (n, i) in s.iter().enumerate() {
                if n > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", i + 1)?;
            }
            f.write_str("]")?;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    fn s(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn compose_identity_and_powers() {
        let g = PolyMap::new(1, vec![s(1, 0).pow(2)]).unwrap();
        assert_eq!(compose_maps(&PolyMap::identity(1), &g).unwrap(), g);
        let f = PolyMap::new(1, vec![s(1, 0).pow(3)]).unwrap();
        let fg = compose_maps(&f, &g).unwrap();
        assert_eq!(fg.components()[0], s(1, 0).pow(6));
    }

    #[test]
    fn negation_is_an_involution() {
        let neg = PolyMap::linear(&-&RatMat::identity(2));
        assert_eq!(compose_maps(&neg, &neg).unwrap(), PolyMap::identity(2));
    }

    #[test]
    fn compose_rejects_arity_mismatch() {
        let f = PolyMap::identity(2);
        let g = PolyMap::identity(3);
        assert!(compose_maps(&f, &g).is_err());
    }

    #[test]
    fn jacobian_examples() {
        assert_eq!(PolyMap::identity(3).jacobian_at_zero().unwrap(), RatMat::identity(3));
        let t = s(1, 0);
        let f = PolyMap::new(1, vec![t.clone(), &t.scale(&int(5)) + &t.pow(2)]).unwrap();
        assert_eq!(f.jacobian_at_zero().unwrap(), RatMat::from_i64(2, 1, &[1, 5]));
        assert_eq!(PolyMap::zero(0, 1).jacobian_at_zero().unwrap().shape(), (1, 0));
        let shifted = PolyMap::new(1, vec![&t + &Poly::one(1)]).unwrap();
        assert!(matches!(
            shifted.jacobian_at_zero(),
            Err(Error::NotPointed { .. })
        ));
    }

    #[test]
    fn wedge_examples() {
        let dx = PolyForm::coordinate(2, 0);
        let dy = PolyForm::coordinate(2, 1);
        let vol = PolyForm::monomial(2, &[0, 1], Poly::one(2)).unwrap();
        assert_eq!(wedge_forms(&dx, &dy).unwrap(), vol);
        assert!(wedge_forms(&dx, &dx).unwrap().is_zero());
        // (x dy) ∧ (y dx) = -xy dx∧dy
        let a = dy.mul_function(&s(2, 0));
        let b = dx.mul_function(&s(2, 1));
        let expected = vol.mul_function(&-&(&s(2, 0) * &s(2, 1)));
        assert_eq!(wedge_forms(&a, &b).unwrap(), expected);
    }

    #[test]
    fn pullback_examples() {
        let vol = PolyForm::monomial(2, &[0, 1], Poly::one(2)).unwrap();
        let curve = PolyMap::new(1, vec![s(1, 0).pow(2), s(1, 0)]).unwrap();
        assert!(pullback_form(&vol, &curve).unwrap().is_zero());

        let dx = PolyForm::coordinate(2, 0);
        let pulled = pullback_form(&dx, &curve).unwrap();
        assert_eq!(pulled, PolyForm::coordinate(1, 0).mul_function(&s(1, 0).scale(&int(2))));

        let neg = PolyMap::linear(&-&RatMat::identity(2));
        assert_eq!(pullback_form(&vol, &neg).unwrap(), vol);
        assert!(pullback_form(&vol, &PolyMap::identity(3)).is_err());
    }

    #[test]
    fn pullback_matches_finite_differences() {
        // dx along t -> (t^2, t) is 2t dt; check the coefficient against a
        // symmetric difference quotient of x(t) at a few rational points.
        let curve = PolyMap::new(1, vec![s(1, 0).pow(2), s(1, 0)]).unwrap();
        let pulled = pullback_form(&PolyForm::coordinate(2, 0), &curve).unwrap();
        let h = frac(1, 1000);
        for t in [frac(1, 3), int(2), frac(-5, 7)] {
            let plus = curve.eval(&[&t + &h])[0].clone();
            let minus = curve.eval(&[&t - &h])[0].clone();
            let quotient = (plus - minus) / (&h * int(2));
            // exact for quadratics
            assert_eq!(quotient, pulled.coeffs()[0].eval(&[t]));
        }
    }

    #[test]
    fn derivative_examples() {
        let x = s(1, 0);
        assert_eq!(exterior_derivative(&PolyForm::function(x)), PolyForm::coordinate(1, 0));
        let xdy = PolyForm::coordinate(2, 1).mul_function(&s(2, 0));
        let vol = PolyForm::monomial(2, &[0, 1], Poly::one(2)).unwrap();
        assert_eq!(exterior_derivative(&xdy), vol);
        assert!(exterior_derivative(&vol).is_zero());
        assert_eq!(exterior_derivative(&vol).degree(), 3);
    }

    #[test]
    fn values_at_zero() {
        let vol = PolyForm::monomial(2, &[0, 1], Poly::one(2)).unwrap();
        assert_eq!(form_value_at_zero(&vol), vec![int(1)]);
        let xdy = PolyForm::coordinate(2, 1).mul_function(&s(2, 0));
        assert_eq!(form_value_at_zero(&xdy), vec![int(0), int(0)]);
        let w = PolyForm::new(2, 1, vec![&Poly::constant(2, int(2)) + &s(2, 0), Poly::constant(2, int(3))])
            .unwrap();
        assert_eq!(form_value_at_zero(&w), vec![int(2), int(3)]);
    }

    #[test]
    fn monomial_sorts_with_sign() {
        let a = PolyForm::monomial(3, &[2, 0], Poly::one(3)).unwrap();
        let b = PolyForm::monomial(3, &[0, 2], Poly::one(3)).unwrap();
        assert_eq!(a, b.scale(&int(-1)));
        assert!(PolyForm::monomial(3, &[1, 1], Poly::one(3)).unwrap().is_zero());
        assert!(PolyForm::monomial(2, &[2], Poly::one(2)).is_err());
    }

    #[test]
    fn display_forms() {
        let p = &(&s(2, 0).pow(2).scale(&frac(3, 2)) - &s(2, 1)) + &Poly::constant(2, int(-1));
        assert_eq!(alloc::format!("{p}"), "3/2*s1^2 - s2 - 1");
        assert_eq!(alloc::format!("{}", Poly::zero(0)), "0");
        let w = PolyForm::coordinate(2, 1).mul_function(&s(2, 0));
        assert_eq!(alloc::format!("{w}"), "(s1) d[2]");
    }
}
