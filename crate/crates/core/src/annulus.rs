//! Boundary quadrature on the annulus covering `F(z) = zⁿ : A(ρ) → A(ρⁿ)`.
//!
//! Sections are truncated Laurent series `f(z) = z^c Σ_{|d|≤D} a_d z^d`
//! (one exponent `c` per component), sampled on the two boundary circles at
//! `θ_j = 2πj/N`. Every fractional power is taken by continuity in `θ` from
//! the base angle `θ = 0`. Component `0` is the outer circle `|z| = 1`,
//! component `1` the inner circle `|z| = ρ`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::check::{self, Check, ISOMETRY_TOL};
use crate::covering::{build_covering, schreier_transversal, SheetPermutation, Transversal};
use crate::error::{Error, Result};
use crate::induction::{
    annulus_bookkeeping, build_g2, build_j2_diagonal, extend_to_double, induce_representation, transport_signatures,
    verify_symmetry_conditions, InducedRep, SignatureData,
};
use crate::linalg::{CMatrix, C64};
use crate::presentation::{double_group, surface_group, GeneratorLabel};
use crate::representation::MatrixRep;
use crate::torus::lattice_rep;

/// Sup estimates above this are flagged by [`hardy_bound_check`].
pub const HARDY_FLAG_THRESHOLD: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnulusCovering {
    pub rho1: f64,
    pub n: usize,
    pub rho2: f64,
    /// `√F′ = √n z^{(n−1)/2}` is multivalued (even `n`); continuity from `θ = 0` fixes it.
    pub branch_flagged: bool,
}

pub fn make_annulus_cover(rho1: f64, n: i64) -> Result<AnnulusCovering> {
    if !(rho1 > 0.0 && rho1 < 1.0) {
        return Err(Error::InvalidRadius(rho1));
    }
    if n < 1 {
        return Err(Error::InvalidSheetCount(n));
    }
    let n = n as usize;
    Ok(AnnulusCovering { rho1, n, rho2: rho1.powi(n as i32), branch_flagged: n.is_multiple_of(2) })
}

impl AnnulusCovering {
    pub fn radius1(&self, component: usize) -> f64 {
        if component == 0 {
            1.0
        } else {
            self.rho1
        }
    }

    pub fn radius2(&self, component: usize) -> f64 {
        if component == 0 {
            1.0
        } else {
            self.rho2
        }
    }

    /// Preimage angles `θ_k = (φ + 2πk)/n`.
    pub fn preimage_angles(&self, phi: f64) -> Vec<f64> {
        (0..self.n).map(|k| (phi + 2.0 * PI * k as f64) / self.n as f64).collect()
    }
}

/// `f(z) = z^c Σ_{d=−D}^{D} a_d z^d`, valued in `ℂ^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct SectionSpec {
    exponents: Vec<f64>,
    degree: usize,
    /// `coeffs[d + D][j]`
    coeffs: Vec<Vec<C64>>,
}

impl SectionSpec {
    /// `coeffs` lists `a_{−D} … a_D`, each of length `exponents.len()`.
    pub fn new(exponents: Vec<f64>, coeffs: Vec<Vec<C64>>) -> Result<Self> {
        let m = exponents.len();
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::DimensionMismatch { expected: coeffs.len() + 1, found: coeffs.len() });
        }
        if let Some(bad) = coeffs.iter().find(|a| a.len() != m) {
            return Err(Error::DimensionMismatch { expected: m, found: bad.len() });
        }
        Ok(SectionSpec { exponents, degree: coeffs.len() / 2, coeffs })
    }

    pub fn scalar(c: f64, coeffs: Vec<C64>) -> Result<Self> {
        Self::new(vec![c], coeffs.into_iter().map(|a| vec![a]).collect())
    }

    pub fn zero(exponents: Vec<f64>, degree: usize) -> Self {
        let m = exponents.len();
        SectionSpec { exponents, degree, coeffs: vec![vec![C64::new(0.0, 0.0); m]; 2 * degree + 1] }
    }

    /// Multiplier exponents `c_j = α_j / 2π` for a diagonal core-loop image.
    pub fn exponents_for(chi_core: &CMatrix) -> Vec<f64> {
        (0..chi_core.rows()).map(|j| chi_core[(j, j)].arg() / (2.0 * PI)).collect()
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn exponents(&self) -> &[f64] {
        &self.exponents
    }

    /// `a_d` for `|d| ≤ D`.
    pub fn coefficient(&self, d: i64) -> &[C64] {
        &self.coeffs[(d + self.degree as i64) as usize]
    }

    /// Value at `r e^{iθ}` continued along `θ` from `0`.
    pub fn evaluate(&self, r: f64, theta: f64) -> Vec<C64> {
        // Horner in z, then the factor z^{c−D}.
        let z = C64::from_polar(r, theta);
        let mut out = vec![C64::new(0.0, 0.0); self.rank()];
        for a in self.coeffs.iter().rev() {
            for (o, x) in out.iter_mut().zip(a) {
                *o = *o * z + x;
            }
        }
        let d = self.degree as f64;
        for (o, &c) in out.iter_mut().zip(&self.exponents) {
            *o *= C64::from_polar(r.powf(c - d), (c - d) * theta);
        }
        out
    }

    /// `Σ_d |a_d|² r^{2(d+c)}` per component, summed: the exact value of
    /// `(1/2π) ∮ |f|² dθ` on `|z| = r`.
    pub fn parseval(&self, r: f64) -> f64 {
        let mut total = 0.0;
        for (idx, a) in self.coeffs.iter().enumerate() {
            let d = idx as f64 - self.degree as f64;
            for (x, &c) in a.iter().zip(&self.exponents) {
                total += x.norm_sqr() * r.powf(2.0 * (d + c));
            }
        }
        total
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySection {
    pub component: usize,
    pub radius: f64,
    /// `samples[j]` at `θ_j = 2πj/N`.
    pub samples: Vec<Vec<C64>>,
    pub branch_flipped: bool,
}

impl BoundarySection {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.samples.first().map_or(0, Vec::len)
    }
}

fn check_samples(samples: usize, degree: usize) -> Result<()> {
    if !samples.is_power_of_two() {
        return Err(Error::SamplesNotPowerOfTwo(samples));
    }
    let required = 2 * degree + 2;
    if samples < required {
        return Err(Error::Undersampled { samples, required });
    }
    Ok(())
}

fn angle(j: usize, samples: usize) -> f64 {
    2.0 * PI * j as f64 / samples as f64
}

/// Samples `f` on boundary circle `component` of `A(ρ)`.
pub fn sample_section(spec: &SectionSpec, rho: f64, component: usize, samples: usize) -> Result<BoundarySection> {
    check_samples(samples, spec.degree)?;
    let radius = if component == 0 { 1.0 } else { rho };
    let samples = (0..samples).map(|j| spec.evaluate(radius, angle(j, samples))).collect();
    Ok(BoundarySection { component, radius, samples, branch_flipped: false })
}

/// `[f(z_k)/√F′(z_k)]_k` at `w = R e^{iφ}`, with `φ` continued freely.
pub fn pushforward_at(cov: &AnnulusCovering, spec: &SectionSpec, component: usize, phi: f64, flip: bool) -> Vec<C64> {
    let n = cov.n as f64;
    let r = cov.radius1(component);
    let sign = if flip { -1.0 } else { 1.0 };
    let mut out = Vec::with_capacity(cov.n * spec.rank());
    for theta in cov.preimage_angles(phi) {
        let root = C64::from_polar(sign * n.sqrt() * r.powf((n - 1.0) / 2.0), (n - 1.0) * theta / 2.0);
        out.extend(spec.evaluate(r, theta).into_iter().map(|v| v / root));
    }
    out
}

/// Samples of the pushed-forward section on boundary circle `component` of
/// `A(ρⁿ)`; `flip` negates the global branch of `√F′`.
pub fn pushforward_section(
    cov: &AnnulusCovering,
    spec: &SectionSpec,
    component: usize,
    samples: usize,
    flip: bool,
) -> Result<BoundarySection> {
    check_samples(samples, spec.degree)?;
    let values = (0..samples).map(|j| pushforward_at(cov, spec, component, angle(j, samples), flip)).collect();
    Ok(BoundarySection { component, radius: cov.radius2(component), samples: values, branch_flipped: flip })
}

/// `Σ_i (2π/N) r_i Σ_j g_j* J_i f_j` over the given boundary circles.
pub fn indefinite_inner_product(f: &[BoundarySection], g: &[BoundarySection], j: &[CMatrix]) -> Result<C64> {
    if f.len() != g.len() || f.len() != j.len() {
        return Err(Error::DimensionMismatch { expected: f.len(), found: g.len().max(j.len()) });
    }
    let mut total = C64::new(0.0, 0.0);
    for ((fi, gi), ji) in f.iter().zip(g).zip(j) {
        if fi.len() != gi.len() {
            return Err(Error::DimensionMismatch { expected: fi.len(), found: gi.len() });
        }
        if fi.radius != gi.radius {
            return Err(Error::InvalidRadius(gi.radius));
        }
        if fi.dim() != ji.rows() || gi.dim() != ji.rows() {
            return Err(Error::DimensionMismatch { expected: ji.rows(), found: fi.dim() });
        }
        let sum: C64 = fi
            .samples
            .iter()
            .zip(&gi.samples)
            .map(|(fv, gv)| gv.iter().zip(ji.matvec(fv)).map(|(a, b)| a.conj() * b).sum::<C64>())
            .sum();
        total += sum * (2.0 * PI * fi.radius / fi.len() as f64);
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq)]
pub struct HardyBound {
    pub sup: f64,
    pub flagged: bool,
}

/// Largest `∮ |f|² r dθ` over the circles `|z| = r` and `|z| = ρ/r`, `r ∈ r_grid`.
pub fn hardy_bound_check(spec: &SectionSpec, rho: f64, r_grid: &[f64]) -> Result<HardyBound> {
    let samples = (4 * spec.degree + 4).next_power_of_two();
    let id = [CMatrix::identity(spec.rank())];
    let mut sup: f64 = 0.0;
    for &r in r_grid {
        if !(r > rho && r < 1.0) {
            return Err(Error::InvalidRadius(r));
        }
        for radius in [r, rho / r] {
            let s = BoundarySection {
                component: 0,
                radius,
                samples: (0..samples).map(|j| spec.evaluate(radius, angle(j, samples))).collect(),
                branch_flipped: false,
            };
            sup = sup.max(indefinite_inner_product(core::slice::from_ref(&s), core::slice::from_ref(&s), &id)?.re);
        }
    }
    Ok(HardyBound { sup, flagged: sup.is_nan() || sup > HARDY_FLAG_THRESHOLD })
}

/// The induced data on the base annulus.
#[derive(Debug, Clone)]
pub struct AnnulusBundle {
    pub transversal: Transversal,
    pub chi2: InducedRep,
    pub g2: CMatrix,
    pub j2: Vec<CMatrix>,
    pub checks: Vec<Check>,
}

/// Runs the induction pipeline for the cyclic covering: extends
/// `χ(A1) = chi_core` with `sig` to the torus double of `A(ρ)`, restricts to
/// the lattice generated by `A1ⁿ` and `B1`, induces, and builds `G₂` and `J₂`.
pub fn annulus_bundle(cov: &AnnulusCovering, chi_core: &CMatrix, sig: &SignatureData) -> Result<AnnulusBundle> {
    let surface = surface_group(0, 2)?;
    let chi_s = MatrixRep::from_ordered(&surface, chi_core.rows(), vec![chi_core.adjoint(), chi_core.clone()])?;
    let double = double_group(0, 2)?;
    let chi_x = extend_to_double(&chi_s, sig, &double)?;

    let cycle: Vec<usize> = (1..=cov.n).collect();
    let cover = build_covering(
        double.clone(),
        cov.n,
        &[
            (GeneratorLabel::A(1), SheetPermutation::cycle(cov.n, &cycle)?),
            (GeneratorLabel::B(1), SheetPermutation::identity(cov.n)),
        ],
    )?;
    let t = schreier_transversal(&cover);
    let image = |l| chi_x.image(l).expect("torus generator");
    let chi1 = lattice_rep(&t, image(GeneratorLabel::A(1)), image(GeneratorLabel::B(1)))?;
    let chi2 = induce_representation(&t, &chi1)?;
    let g2 = build_g2(&t, &chi1, sig.g())?;
    let lifts = transport_signatures(&t, &chi1, sig, &annulus_bookkeeping(&t)?)?;
    let j2 = build_j2_diagonal(&lifts);
    let mut checks = chi2.block_monomial_checks();
    checks.extend(verify_symmetry_conditions(&chi2, &g2, &j2, &double)?);
    Ok(AnnulusBundle { transversal: t, chi2, g2, j2, checks })
}

#[derive(Debug, Clone)]
pub struct IsometryResult {
    /// `[f̂², ĥ²]` on the base.
    pub base: C64,
    /// `[f̂¹, ĥ¹]` on the cover.
    pub cover: C64,
    pub residual: f64,
    /// Per boundary circle: base integral minus cover integral.
    pub component_residuals: [f64; 2],
    pub checks: Vec<Check>,
}

impl IsometryResult {
    pub fn passed(&self) -> bool {
        check::all_pass(&self.checks)
    }
}

fn check_multiplier(spec: &SectionSpec, chi_core: &CMatrix) -> Result<()> {
    if spec.rank() != chi_core.rows() {
        return Err(Error::DimensionMismatch { expected: chi_core.rows(), found: spec.rank() });
    }
    let expected =
        CMatrix::diagonal(&spec.exponents.iter().map(|&c| C64::from_polar(1.0, 2.0 * PI * c)).collect::<Vec<_>>());
    if chi_core.distance(&expected) > crate::check::EXACT_TOL {
        let j = (0..spec.rank())
            .max_by(|&a, &b| {
                (chi_core[(a, a)] - expected[(a, a)]).norm().total_cmp(&(chi_core[(b, b)] - expected[(b, b)]).norm())
            })
            .unwrap_or(0);
        return Err(Error::MultiplierMismatch { exponent: spec.exponents[j], phase: chi_core[(j, j)].arg() });
    }
    Ok(())
}

/// Compares `[F_* f, F_* h]` over `∂A(ρⁿ)` with `J₂` against `[f, h]` over
/// `∂A(ρ)` with `J₁`, after building `χ₂`, `G₂`, `J₂` by induction.
///
/// `chi_core` is the (diagonal) image of the core loop on the cover; both
/// sections must carry the matching multiplier exponents.
pub fn verify_isometry(
    cov: &AnnulusCovering,
    f: &SectionSpec,
    h: &SectionSpec,
    chi_core: &CMatrix,
    sig: &SignatureData,
    samples: usize,
) -> Result<IsometryResult> {
    check_multiplier(f, chi_core)?;
    check_multiplier(h, chi_core)?;
    let bundle = annulus_bundle(cov, chi_core, sig)?;
    let mut checks = bundle.checks.clone();

    let mut cover = C64::new(0.0, 0.0);
    let mut base = C64::new(0.0, 0.0);
    let mut component_residuals = [0.0; 2];
    for (i, slot) in component_residuals.iter_mut().enumerate() {
        let f1 = sample_section(f, cov.rho1, i, samples)?;
        let h1 = sample_section(h, cov.rho1, i, samples)?;
        let c1 = indefinite_inner_product(&[f1], &[h1], core::slice::from_ref(sig.j(i)))?;
        let f2 = pushforward_section(cov, f, i, samples, false)?;
        let h2 = pushforward_section(cov, h, i, samples, false)?;
        let c2 = indefinite_inner_product(&[f2], &[h2], core::slice::from_ref(&bundle.j2[i]))?;
        *slot = (c2 - c1).norm();
        cover += c1;
        base += c2;
    }
    let residual = (base - cover).norm();
    for (i, r) in component_residuals.iter().enumerate() {
        check::push(&mut checks, format!("change of variables, circle {i}"), *r, ISOMETRY_TOL);
    }
    checks.push(monodromy_check(cov, f, &bundle.chi2, samples.min(64)));
    check::push(&mut checks, "isometry", residual, ISOMETRY_TOL);
    Ok(IsometryResult { base, cover, residual, component_residuals, checks })
}

/// `F_* f` continued once around the base core loop equals `χ₂(A1) F_* f`,
/// with the wrap block carrying the spin sign `(−1)^{n−1}` of `√F′`.
/// Relative residual over `samples` points on the outer circle.
pub fn monodromy_check(cov: &AnnulusCovering, f: &SectionSpec, chi2: &InducedRep, samples: usize) -> Check {
    let m = f.rank();
    let mut a = chi2.rep().image(GeneratorLabel::A(1)).expect("A1 image").clone();
    if cov.n.is_multiple_of(2) {
        let wrap = a.block(cov.n - 1, 0, m).scale((-1.0).into());
        a.set_block(cov.n - 1, 0, &wrap);
    }
    let (mut worst, mut scale) = (0.0f64, 1.0f64);
    for j in 0..samples {
        let phi = angle(j, samples);
        let here = pushforward_at(cov, f, 0, phi, false);
        let moved = pushforward_at(cov, f, 0, phi + 2.0 * PI, false);
        let expected = a.matvec(&here);
        for (x, y) in moved.iter().zip(&expected) {
            worst = worst.max((x - y).norm());
            scale = scale.max(y.norm());
        }
    }
    Check::new("pushforward monodromy", worst / scale, crate::check::EXACT_TOL)
}

/// `true` if each residual is at most twice the previous one, or within a
/// factor two of the rounding floor `noise`.
pub fn monotone_within_noise(residuals: &[f64], noise: f64) -> bool {
    residuals.windows(2).all(|w| w[1] <= 2.0 * w[0].max(noise))
}
