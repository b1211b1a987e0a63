//! Parametrized projective varieties with closed-form Jacobians, and
//! Terracini-style dimension counts for their secant and tangential
//! varieties.
//!
//! Every chart is an affine polynomial map `Cⁿ → C^{N+1}` covering a dense
//! open subset of the affine cone. Dimensions are generic ranks at random
//! integer points.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::combinat::{binomial, k_subsets, multisets};
use crate::composition::{AlgebraTag, CompElem};
use crate::error::VarietyError;
use crate::fts::{fts_dim, plucker, plucker_differential};
use crate::jordan::{jordan_dim, JordanMat};
use crate::linalg::{span_dim, span_dim_float, Mat};
use crate::scalar::Scalar;
use crate::so_series::{isotropic_point, isotropic_tangent};

const PARAM_BOUND: i64 = 9;

/// The map defining a variety.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    /// `P ↦ (1, P, P♯, N(P))`.
    Fts(AlgebraTag),
    /// Product of projective spaces, given by the vector-space dimensions.
    Segre(Vec<usize>),
    /// Degree `degree` monomials on `C^vars`.
    Veronese { degree: usize, vars: usize },
    /// `P¹ × Q^{m-2}`: a qubit times an isotropic vector of `C^m`.
    QuadricProduct { m: usize },
    /// `k×k` minors of `(I | P)`.
    Grassmannian { k: usize, n: usize },
    /// Rank-one Hermitian matrices over a composition algebra.
    RankOne(AlgebraTag),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamVariety {
    name: String,
    title: String,
    chart: Chart,
    domain_dim: usize,
    ambient_dim: usize,
}

fn join(dims: &[usize], sep: &str) -> String {
    dims.iter().map(|d| format!("{d}")).collect::<Vec<_>>().join(sep)
}

impl ParamVariety {
    pub fn fts(tag: AlgebraTag) -> Self {
        let title = match tag {
            AlgebraTag::DegMinus1 => "v3(P1)".into(),
            AlgebraTag::Deg0 => "P1xP1xP1".into(),
            AlgebraTag::CC => "LG(3,6)".into(),
            AlgebraTag::CplusC => "G(3,6)".into(),
            AlgebraTag::M2C => "OG(6,12)".into(),
            AlgebraTag::OctC => "E7/P1".into(),
        };
        Self::build(format!("fts-{}", tag.name()), title, Chart::Fts(tag), jordan_dim(tag), fts_dim(tag) - 1)
    }

    pub fn segre(dims: &[usize]) -> Self {
        let title = dims.iter().map(|d| format!("P{}", d - 1)).collect::<Vec<_>>().join("x");
        let domain = dims.iter().map(|d| d - 1).sum();
        let ambient = dims.iter().product::<usize>() - 1;
        Self::build(format!("segre-{}", join(dims, "-")), title, Chart::Segre(dims.to_vec()), domain, ambient)
    }

    pub fn veronese(degree: usize, vars: usize) -> Self {
        Self::build(
            format!("veronese-{degree}-{vars}"),
            format!("v{degree}(P{})", vars - 1),
            Chart::Veronese { degree, vars },
            vars - 1,
            binomial(vars + degree - 1, degree) - 1,
        )
    }

    /// Separable states of `C² ⊗ C^m` under `SL2 × SO(m)`.
    pub fn quadric_product(m: usize) -> Self {
        Self::build(format!("so-{m}"), format!("P1xQ{}", m - 2), Chart::QuadricProduct { m }, m - 1, 2 * m - 1)
    }

    pub fn grassmannian(k: usize, n: usize) -> Self {
        Self::build(
            format!("grassmannian-{k}-{n}"),
            format!("G({k},{n})"),
            Chart::Grassmannian { k, n },
            k * (n - k),
            binomial(n, k) - 1,
        )
    }

    pub fn rank_one(tag: AlgebraTag) -> Self {
        let title = match tag {
            AlgebraTag::CC => "v2(P2)".into(),
            AlgebraTag::CplusC => "P2xP2".into(),
            AlgebraTag::M2C => "G(2,6)".into(),
            AlgebraTag::OctC => "E6/P1".into(),
            t => format!("rank-one {}", t.name()),
        };
        Self::build(format!("severi-{}", tag.name()), title, Chart::RankOne(tag), 2 * tag.dim(), jordan_dim(tag) - 1)
    }

    fn build(name: String, title: String, chart: Chart, domain_dim: usize, ambient_dim: usize) -> Self {
        ParamVariety { name, title, chart, domain_dim, ambient_dim }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Conventional notation such as `G(3,6)`.
    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn chart_kind(&self) -> &Chart {
        &self.chart
    }

    /// Dimension of the variety.
    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    /// `N` for `X ⊂ Pᴺ`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Bound on the total degree of the chart polynomials.
    pub fn degree(&self) -> usize {
        match &self.chart {
            Chart::Fts(_) | Chart::QuadricProduct { .. } => 3,
            Chart::Segre(d) => d.len(),
            Chart::Veronese { degree, .. } => *degree,
            Chart::Grassmannian { k, .. } => *k,
            Chart::RankOne(_) => 2,
        }
    }

    fn check(&self, p: &[Scalar]) -> Result<(), VarietyError> {
        if p.len() != self.domain_dim {
            return Err(VarietyError::ParamLength { expected: self.domain_dim, found: p.len() });
        }
        Ok(())
    }

    pub fn random_params<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Scalar> {
        (0..self.domain_dim).map(|_| Scalar::random_int(rng, PARAM_BOUND)).collect()
    }

    /// Affine cone coordinates of the chart point, `ambient_dim + 1` of them.
    pub fn chart(&self, p: &[Scalar]) -> Result<Vec<Scalar>, VarietyError> {
        self.check(p)?;
        Ok(match &self.chart {
            Chart::Fts(tag) => plucker(&jordan_params(*tag, p)).coords(),
            Chart::Segre(dims) => {
                let factors = segre_factors(dims, p);
                tensor(&factors.iter().map(Vec::as_slice).collect::<Vec<_>>())
            }
            Chart::Veronese { degree, vars } => {
                let v = affine(p);
                multisets(*vars, *degree).iter().map(|ms| ms.iter().map(|&i| v[i].clone()).product()).collect()
            }
            Chart::QuadricProduct { .. } => {
                let w = isotropic_point(&p[1..]);
                tensor(&[&[Scalar::one(), p[0].clone()], &w])
            }
            Chart::Grassmannian { k, n } => {
                let m = grassmann_rows(*k, *n, p);
                k_subsets(*n, *k).iter().map(|cols| column_minor(&m, cols)).collect()
            }
            Chart::RankOne(tag) => {
                let (a, b) = comp_params(*tag, p);
                JordanMat::rank_one_chart(*tag, &a, &b).expect("nondegenerate tag").coords()
            }
        })
    }

    /// Derivative of the chart at `p` along `dir`.
    pub fn tangent(&self, p: &[Scalar], dir: &[Scalar]) -> Result<Vec<Scalar>, VarietyError> {
        self.check(p)?;
        self.check(dir)?;
        Ok(match &self.chart {
            Chart::Fts(tag) => {
                let q = jordan_params(*tag, dir);
                plucker_differential(&jordan_params(*tag, p), &q).expect("same tag").coords()
            }
            Chart::Segre(dims) => {
                let factors = segre_factors(dims, p);
                let dfactors = segre_factors(dims, dir);
                let mut out = vec![Scalar::zero(); self.ambient_dim + 1];
                for i in 0..dims.len() {
                    let mut parts: Vec<&[Scalar]> = factors.iter().map(Vec::as_slice).collect();
                    let mut d = dfactors[i].clone();
                    d[0] = Scalar::zero();
                    parts[i] = &d;
                    add_into(&mut out, &tensor(&parts));
                }
                out
            }
            Chart::Veronese { degree, vars } => {
                let v = affine(p);
                let mut dv = affine(dir);
                dv[0] = Scalar::zero();
                multisets(*vars, *degree)
                    .iter()
                    .map(|ms| {
                        // Product rule over the factors of the monomial.
                        (0..ms.len())
                            .map(|skip| {
                                ms.iter()
                                    .enumerate()
                                    .map(|(j, &i)| if j == skip { dv[i].clone() } else { v[i].clone() })
                                    .product::<Scalar>()
                            })
                            .sum()
                    })
                    .collect()
            }
            Chart::QuadricProduct { .. } => {
                let w = isotropic_point(&p[1..]);
                let dw = isotropic_tangent(&p[1..], &dir[1..]);
                let mut out = tensor(&[&[Scalar::zero(), dir[0].clone()], &w]);
                add_into(&mut out, &tensor(&[&[Scalar::one(), p[0].clone()], &dw]));
                out
            }
            Chart::Grassmannian { k, n } => {
                let m = grassmann_rows(*k, *n, p);
                let dm = grassmann_rows(*k, *n, dir);
                k_subsets(*n, *k)
                    .iter()
                    .map(|cols| {
                        // d det = Σ_r det(M with row r replaced by dM).
                        (0..*k)
                            .map(|r| {
                                let sub = Mat::from_fn(*k, *k, |i, j| {
                                    let src = if i == r { &dm } else { &m };
                                    if i == r && cols[j] < *k {
                                        Scalar::zero()
                                    } else {
                                        src[(i, cols[j])].clone()
                                    }
                                });
                                sub.det().expect("square")
                            })
                            .sum()
                    })
                    .collect()
            }
            Chart::RankOne(tag) => {
                let (a, b) = comp_params(*tag, p);
                let (da, db) = comp_params(*tag, dir);
                let diag = [Scalar::zero(), a.polar(&da), b.polar(&db)];
                let off = [da.mul(&b.conj()).expect("tag").add(&a.mul(&db.conj()).expect("tag")), db, da.conj()];
                JordanMat::new(*tag, diag, off).expect("tag").coords()
            }
        })
    }

    /// Columns `∂chart/∂p_k`, one per parameter.
    pub fn partials(&self, p: &[Scalar]) -> Result<Vec<Vec<Scalar>>, VarietyError> {
        (0..self.domain_dim).map(|k| self.tangent(p, &unit(self.domain_dim, k))).collect()
    }

    /// The `(N+1) × n` Jacobian matrix.
    pub fn jacobian(&self, p: &[Scalar]) -> Result<Mat, VarietyError> {
        let cols = self.partials(p)?;
        Ok(Mat::from_fn(self.ambient_dim + 1, self.domain_dim, |i, j| cols[j][i].clone()))
    }
}

fn unit(n: usize, k: usize) -> Vec<Scalar> {
    (0..n).map(|i| if i == k { Scalar::one() } else { Scalar::zero() }).collect()
}

fn affine(p: &[Scalar]) -> Vec<Scalar> {
    core::iter::once(Scalar::one()).chain(p.iter().cloned()).collect()
}

fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += b;
        }
    }
}

/// Row-major tensor product.
fn tensor(parts: &[&[Scalar]]) -> Vec<Scalar> {
    let mut out = vec![Scalar::one()];
    for part in parts {
        let mut next = Vec::with_capacity(out.len() * part.len());
        for a in &out {
            for b in part.iter() {
                next.push(a * b);
            }
        }
        out = next;
    }
    out
}

fn segre_factors(dims: &[usize], p: &[Scalar]) -> Vec<Vec<Scalar>> {
    let mut offset = 0;
    dims.iter()
        .map(|&d| {
            let f = affine(&p[offset..offset + d - 1]);
            offset += d - 1;
            f
        })
        .collect()
}

fn jordan_params(tag: AlgebraTag, p: &[Scalar]) -> JordanMat {
    JordanMat::from_coords(tag, p).expect("length checked")
}

fn comp_params(tag: AlgebraTag, p: &[Scalar]) -> (CompElem, CompElem) {
    let d = tag.dim();
    (CompElem::new(tag, p[..d].to_vec()).expect("length"), CompElem::new(tag, p[d..].to_vec()).expect("length"))
}

/// `(I | P)` with `P` read row-major from `p`.
fn grassmann_rows(k: usize, n: usize, p: &[Scalar]) -> Mat {
    Mat::from_fn(k, n, |i, j| {
        if j < k {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        } else {
            p[i * (n - k) + j - k].clone()
        }
    })
}

fn column_minor(m: &Mat, cols: &[usize]) -> Scalar {
    Mat::from_fn(m.rows(), cols.len(), |i, j| m[(i, cols[j])].clone()).det().expect("square")
}

/// Weights `w_j` with `f'(0) = Σ_j w_j f(j)` for every polynomial of degree
/// at most `deg`, from differentiating the Lagrange basis on nodes `0..=deg`.
pub fn derivative_weights(deg: usize) -> Vec<Scalar> {
    let r = |v: i64| BigRational::from_integer(v.into());
    let n = deg as i64;
    (0..=n)
        .map(|k| {
            let mut total = BigRational::zero();
            for m in (0..=n).filter(|&m| m != k) {
                let mut term = r(1) / r(k - m);
                for j in (0..=n).filter(|&j| j != k && j != m) {
                    term = term * r(-j) / r(k - j);
                }
                total += term;
            }
            Scalar::real(total)
        })
        .collect()
}

/// Exact derivative at `p` along `dir` of a polynomial map of degree at most
/// `deg`.
pub fn directional_derivative<F>(f: F, p: &[Scalar], dir: &[Scalar], deg: usize) -> Vec<Scalar>
where
    F: Fn(&[Scalar]) -> Vec<Scalar>,
{
    let weights = derivative_weights(deg);
    let mut acc: Vec<Scalar> = Vec::new();
    for (j, w) in weights.iter().enumerate() {
        let t = Scalar::from_i64(j as i64);
        let shifted: Vec<Scalar> = p.iter().zip(dir).map(|(a, b)| a + &(b * &t)).collect();
        let val = f(&shifted);
        if acc.is_empty() {
            acc = vec![Scalar::zero(); val.len()];
        }
        for (a, v) in acc.iter_mut().zip(&val) {
            *a += w * v;
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RankMode {
    Exact,
    Float { tol: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TerraciniOptions {
    pub trials: usize,
    /// Cap on resamples of degenerate points, per trial.
    pub max_resamples: usize,
    pub mode: RankMode,
}

impl Default for TerraciniOptions {
    fn default() -> Self {
        TerraciniOptions { trials: 3, max_resamples: 20, mode: RankMode::Exact }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimEstimate {
    /// Projective dimension.
    pub dim: usize,
    /// Degenerate samples thrown away along the way.
    pub resamples: usize,
}

fn rank(vs: &[Vec<Scalar>], mode: RankMode) -> usize {
    match mode {
        RankMode::Exact => span_dim(vs),
        RankMode::Float { tol } => span_dim_float(vs, tol),
    }
    .expect("equal lengths")
}

/// Affine tangent space of the cone at `chart(p)`, or `None` when it has the
/// wrong dimension.
fn cone_tangent(x: &ParamVariety, p: &[Scalar], mode: RankMode) -> Result<Option<Vec<Vec<Scalar>>>, VarietyError> {
    let mut vs = vec![x.chart(p)?];
    vs.extend(x.partials(p)?);
    Ok((rank(&vs, mode) == x.domain_dim + 1).then_some(vs))
}

fn generic_tangent<R: Rng + ?Sized>(
    x: &ParamVariety,
    opts: &TerraciniOptions,
    resamples: &mut usize,
    rng: &mut R,
) -> Result<(Vec<Scalar>, Vec<Vec<Scalar>>), VarietyError> {
    for attempt in 0..=opts.max_resamples {
        let p = x.random_params(rng);
        if let Some(vs) = cone_tangent(x, &p, opts.mode)? {
            return Ok((p, vs));
        }
        if attempt < opts.max_resamples {
            *resamples += 1;
            log::debug!("{}: degenerate tangent space, resampling", x.name);
        }
    }
    Err(VarietyError::Degenerate { name: x.name.clone(), attempts: opts.max_resamples })
}

/// Projective dimension of `σ(X)`: the span of the cone tangent spaces at two
/// random points, maximized over trials.
pub fn secant_dim<R: Rng + ?Sized>(
    x: &ParamVariety,
    opts: &TerraciniOptions,
    rng: &mut R,
) -> Result<DimEstimate, VarietyError> {
    if opts.trials == 0 {
        return Err(VarietyError::NoTrials);
    }
    let mut best = 0;
    let mut resamples = 0;
    for _ in 0..opts.trials {
        let (_, mut vs) = generic_tangent(x, opts, &mut resamples, rng)?;
        vs.extend(generic_tangent(x, opts, &mut resamples, rng)?.1);
        best = best.max(rank(&vs, opts.mode) - 1);
    }
    Ok(DimEstimate { dim: best, resamples })
}

/// Point of the tangential construction `s·chart(p) + t·J(p)q`.
pub fn tangential_point(
    x: &ParamVariety,
    p: &[Scalar],
    q: &[Scalar],
    s: &Scalar,
    t: &Scalar,
) -> Result<Vec<Scalar>, VarietyError> {
    let mut v: Vec<Scalar> = x.chart(p)?.iter().map(|a| a * s).collect();
    add_into(&mut v, &x.tangent(p, q)?.iter().map(|a| a * t).collect::<Vec<_>>());
    Ok(v)
}

/// Projective dimension of `τ(X)`: the generic rank of the Jacobian of
/// `(p, q, s, t) ↦ s·chart(p) + t·J(p)q`, minus one.
pub fn tangential_dim<R: Rng + ?Sized>(
    x: &ParamVariety,
    opts: &TerraciniOptions,
    rng: &mut R,
) -> Result<DimEstimate, VarietyError> {
    if opts.trials == 0 {
        return Err(VarietyError::NoTrials);
    }
    let mut best = 0;
    let mut resamples = 0;
    for _ in 0..opts.trials {
        let (p, _) = generic_tangent(x, opts, &mut resamples, rng)?;
        let q = x.random_params(rng);
        let s = Scalar::random_nonzero_int(rng, PARAM_BOUND);
        let t = Scalar::random_nonzero_int(rng, PARAM_BOUND);
        let jq = x.tangent(&p, &q)?;
        let mut cols = vec![x.chart(&p)?, jq];
        let along_q = |pp: &[Scalar]| x.tangent(pp, &q).expect("length checked");
        for k in 0..x.domain_dim {
            let e = unit(x.domain_dim, k);
            let jk = x.tangent(&p, &e)?;
            let hk = directional_derivative(along_q, &p, &e, x.degree());
            cols.push(jk.iter().zip(&hk).map(|(a, b)| &(a * &s) + &(b * &t)).collect());
            cols.push(jk.iter().map(|a| a * &t).collect());
        }
        best = best.max(rank(&cols, opts.mode) - 1);
    }
    Ok(DimEstimate { dim: best, resamples })
}

/// The two possible patterns for `(dim τ, dim σ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dichotomy {
    /// `dim τ = min(2n, N)` and `dim σ = min(2n+1, N)` with `τ ≠ σ`.
    Case1 { tangential: usize, secant: usize },
    /// `τ = σ`.
    Case2 { dim: usize },
}

impl Dichotomy {
    pub fn case_name(&self) -> &'static str {
        match self {
            Dichotomy::Case1 { .. } => "Case1",
            Dichotomy::Case2 { .. } => "Case2",
        }
    }
}

/// Sorts computed dimensions into the two cases.
pub fn dichotomy_from_dims(x: &ParamVariety, secant: usize, tangential: usize) -> Result<Dichotomy, VarietyError> {
    let (n, amb) = (x.domain_dim, x.ambient_dim);
    if secant == tangential {
        Ok(Dichotomy::Case2 { dim: secant })
    } else if tangential == (2 * n).min(amb) && secant == (2 * n + 1).min(amb) {
        Ok(Dichotomy::Case1 { tangential, secant })
    } else {
        Err(VarietyError::Inconsistent { name: x.name.clone(), secant, tangential, n, ambient: amb })
    }
}

pub fn dichotomy<R: Rng + ?Sized>(
    x: &ParamVariety,
    opts: &TerraciniOptions,
    rng: &mut R,
) -> Result<Dichotomy, VarietyError> {
    let s = secant_dim(x, opts, rng)?.dim;
    let t = tangential_dim(x, opts, rng)?.dim;
    dichotomy_from_dims(x, s, t)
}

/// Every built-in variety, in a fixed order.
pub fn catalog() -> Vec<ParamVariety> {
    let mut out: Vec<ParamVariety> = AlgebraTag::ALL.into_iter().map(ParamVariety::fts).collect();
    out.extend([3, 5, 6, 7, 9].map(ParamVariety::quadric_product));
    out.extend([vec![2, 2, 2], vec![3, 3], vec![3, 4]].iter().map(|d| ParamVariety::segre(d)));
    out.push(ParamVariety::veronese(2, 3));
    out.push(ParamVariety::veronese(3, 2));
    out.extend([(2, 5), (2, 6), (2, 7), (3, 6)].map(|(k, n)| ParamVariety::grassmannian(k, n)));
    out.extend([AlgebraTag::CC, AlgebraTag::CplusC, AlgebraTag::M2C, AlgebraTag::OctC].map(ParamVariety::rank_one));
    out
}

/// Looks up a catalog entry, or builds `so-<m>` for any `m ≥ 3`.
pub fn variety_by_name(name: &str) -> Option<ParamVariety> {
    if let Some(v) = catalog().into_iter().find(|v| v.name == name) {
        return Some(v);
    }
    let m: usize = name.strip_prefix("so-")?.parse().ok()?;
    (m >= 3).then(|| ParamVariety::quadric_product(m))
}
