//! Signature data, the extension of a representation from `π₁(S)` to the
//! double, induction along a covering, and the transported pairing `G₂` and
//! boundary signatures `J₂`.
//!
//! Everything here works in the flat unitary regime: `G` is a constant
//! selfadjoint unitary matrix, so `G⁻¹ = G` and inverses of representation
//! images are adjoints.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::{self, Check, EXACT_TOL};
use crate::covering::Transversal;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::presentation::{surface_group, DoubledPresentation, GeneratorLabel, GroupPresentation, Presentation};
use crate::representation::{MatrixRep, SubgroupRep};
use crate::word::Word;

/// Signature matrices `J_0 … J_{k-1}` of the boundary circles; `G = J_0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignatureData {
    j: Vec<CMatrix>,
}

impl SignatureData {
    /// Each matrix must be selfadjoint and unitary.
    pub fn new(j: Vec<CMatrix>) -> Result<Self> {
        let m = j.first().map_or(0, CMatrix::rows);
        for (index, mat) in j.iter().enumerate() {
            if mat.rows() != m || mat.cols() != m {
                return Err(Error::DimensionMismatch { expected: m, found: mat.rows() });
            }
            let residual = mat.signature_residual();
            if residual.is_nan() || residual >= EXACT_TOL {
                return Err(Error::NotSignature { index, residual });
            }
        }
        Ok(SignatureData { j })
    }

    /// `J_i = ε_i I_m`.
    pub fn from_signs(m: usize, signs: &[f64]) -> Result<Self> {
        Self::new(signs.iter().map(|&e| CMatrix::scalar(m, e.into())).collect())
    }

    pub fn g(&self) -> &CMatrix {
        &self.j[0]
    }

    pub fn j(&self, i: usize) -> &CMatrix {
        &self.j[i]
    }

    pub fn all(&self) -> &[CMatrix] {
        &self.j
    }

    pub fn len(&self) -> usize {
        self.j.len()
    }

    pub fn is_empty(&self) -> bool {
        self.j.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.j.first().map_or(0, CMatrix::rows)
    }

    /// Residuals of `χ(A_i)* J_i χ(A_i) = J_i` for a representation of `π₁(S)`.
    pub fn compatibility(&self, chi: &MatrixRep, surface: &GroupPresentation) -> Result<Vec<Check>> {
        if self.len() != surface.k as usize {
            return Err(Error::DimensionMismatch { expected: surface.k as usize, found: self.len() });
        }
        if chi.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: chi.dim() });
        }
        let mut out = Vec::new();
        for (i, j) in self.j.iter().enumerate() {
            let a = chi.image(GeneratorLabel::A(i as u32)).ok_or_else(|| Error::MissingImage(format!("A{i}")))?;
            let residual = a.adjoint().matmul(j).matmul(a).distance(j);
            check::push(&mut out, format!("A{i}* J{i} A{i} = J{i}"), residual, EXACT_TOL);
        }
        Ok(out)
    }
}

/// Residuals of `χ(T^τ)* G χ(T) = G` for every generator `T`.
pub fn involution_symmetry(chi: &MatrixRep, g: &CMatrix, p: &DoubledPresentation) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (idx, label) in p.generators().iter().enumerate() {
        let t = Word::generator(p.alphabet(), idx as u32)?;
        let tt = p.apply_involution(&t)?;
        let lhs = chi.evaluate(&tt)?.adjoint().matmul(g).matmul(&chi.evaluate(&t)?);
        check::push(&mut out, format!("{label}^tau* G {label} = G"), lhs.distance(g), EXACT_TOL);
    }
    Ok(out)
}

/// Extends a unitary `χ` on `π₁(S)` to `π₁(X)` using
/// `χ(B_j) = G J_j`, `χ(A''_i) = G χ(B'_i) G`, `χ(B''_i) = G χ(A'_i) G`,
/// and re-verifies the relator, the involution symmetry and
/// `χ(B_j)* G = J_j` on the result.
pub fn extend_to_double(chi_s: &MatrixRep, sig: &SignatureData, p: &DoubledPresentation) -> Result<MatrixRep> {
    let surface = surface_group(i64::from(p.s), i64::from(p.k))?;
    if chi_s.alphabet() != surface.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    for c in sig.compatibility(chi_s, &surface)? {
        if !c.passed() {
            let index = c.name[1..].split('*').next().and_then(|s| s.parse().ok()).unwrap_or(0);
            return Err(Error::IncompatibleSignature { index, residual: c.residual });
        }
    }
    let g = sig.g();
    let image = |l: GeneratorLabel| chi_s.image(l).cloned().ok_or_else(|| Error::MissingImage(l.to_string()));
    let mut images = Vec::with_capacity(p.rank());
    for &label in p.generators() {
        images.push(match label {
            GeneratorLabel::A(_) | GeneratorLabel::APrime(_) | GeneratorLabel::BPrime(_) => image(label)?,
            GeneratorLabel::B(j) => g.matmul(sig.j(j as usize)),
            GeneratorLabel::ADouble(i) => g.matmul(&image(GeneratorLabel::BPrime(i))?).matmul(g),
            GeneratorLabel::BDouble(i) => g.matmul(&image(GeneratorLabel::APrime(i))?).matmul(g),
        });
    }
    let chi = MatrixRep::from_ordered(p, chi_s.dim(), images)?;

    let mut checks = chi.check(p)?;
    checks.extend(involution_symmetry(&chi, g, p)?);
    for j in 1..p.k {
        let b = chi.image(GeneratorLabel::B(j)).expect("B_j present");
        let residual = b.adjoint().matmul(g).distance(sig.j(j as usize));
        check::push(&mut checks, format!("B{j}* G = J{j}"), residual, EXACT_TOL);
    }
    if let Some(c) = check::first_failure(&checks) {
        return Err(Error::ExtensionInconsistent { check: c.name.clone(), residual: c.residual });
    }
    Ok(chi)
}

/// `χ₂`: block-monomial images of the double's generators.
#[derive(Debug, Clone, PartialEq)]
pub struct InducedRep {
    rep: MatrixRep,
    n: usize,
    m: usize,
    /// `columns[g][k] = σ_g(k)`: the non-zero block of row `k`.
    columns: Vec<Vec<usize>>,
}

impl InducedRep {
    pub fn rep(&self) -> &MatrixRep {
        &self.rep
    }

    pub fn sheets(&self) -> usize {
        self.n
    }

    pub fn block_dim(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.n * self.m
    }

    pub fn block_columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn evaluate(&self, w: &Word) -> Result<CMatrix> {
        self.rep.evaluate(w)
    }

    /// Structural check: exactly one non-zero `m × m` block in every block
    /// row and block column, at the recorded position. The residual counts
    /// offending block rows and columns.
    pub fn block_monomial_checks(&self) -> Vec<Check> {
        let mut out = Vec::new();
        for (g, (img, cols)) in self.rep.images().iter().zip(&self.columns).enumerate() {
            let offending = block_monomial_defects(img, self.n, self.m, Some(cols));
            check::push(&mut out, format!("block monomial {}", self.rep.labels()[g]), offending as f64, 0.5);
        }
        out
    }
}

/// Number of block rows/columns without exactly one non-zero block, plus
/// rows whose non-zero block is not at `expected[row]`.
pub fn block_monomial_defects(mat: &CMatrix, n: usize, m: usize, expected: Option<&[usize]>) -> usize {
    let nonzero: Vec<Vec<bool>> = (0..n).map(|k| (0..n).map(|j| !mat.block(k, j, m).is_zero()).collect()).collect();
    let mut defects = 0;
    for k in 0..n {
        let row: Vec<usize> = (0..n).filter(|&j| nonzero[k][j]).collect();
        if row.len() != 1 || expected.is_some_and(|e| e[k] != row[0]) {
            defects += 1;
        }
        if (0..n).filter(|&i| nonzero[i][k]).count() != 1 {
            defects += 1;
        }
    }
    defects
}

/// Induces `χ₁` (given on Schreier generators) up to `π₁(X₂)`:
/// block `(k, σ_g(k))` of `χ₂(g)` is `χ₁(g_k g g_{σ_g(k)}⁻¹)`.
pub fn induce_representation(t: &Transversal, chi1: &SubgroupRep) -> Result<InducedRep> {
    for c in chi1.check(t)? {
        if !c.passed() {
            if let Some(relator) = c.name.strip_prefix("unitary ") {
                return Err(Error::NotUnitary { generator: relator.to_string(), residual: c.residual });
            }
            return Err(Error::InconsistentSubgroupRep { relator: c.name, residual: c.residual });
        }
    }
    let cover = t.covering();
    let p = cover.presentation();
    let (n, m) = (cover.sheets(), chi1.dim());
    let mut images = Vec::with_capacity(p.rank());
    let mut columns = Vec::with_capacity(p.rank());
    for g in 0..p.rank() as u32 {
        let gw = Word::generator(p.alphabet(), g)?;
        let mut img = CMatrix::zeros(n * m, n * m);
        let mut cols = vec![0; n];
        for (k, col) in cols.iter_mut().enumerate() {
            let (h, j) = t.factorize(k, &gw)?;
            img.set_block(k, j, &chi1.evaluate_element(t, &h)?);
            *col = j;
        }
        images.push(img);
        columns.push(cols);
    }
    Ok(InducedRep { rep: MatrixRep::from_ordered(p, n * m, images)?, n, m, columns })
}

/// `G₂` with block `(k, ν(k))` equal to `G₁ χ₁(h_k)`, where `g_k^τ = h_k g_{ν(k)}`.
pub fn build_g2(t: &Transversal, chi1: &SubgroupRep, g1: &CMatrix) -> Result<CMatrix> {
    let (n, m) = (t.sheets(), chi1.dim());
    if g1.rows() != m || g1.cols() != m {
        return Err(Error::DimensionMismatch { expected: m, found: g1.rows() });
    }
    t.require_involution_stable()?;
    let mut g2 = CMatrix::zeros(n * m, n * m);
    for k in 0..n {
        let (h, nu) = t.nu_decompose(k)?;
        g2.set_block(k, nu, &g1.matmul(&chi1.evaluate_element(t, &h)?));
    }
    Ok(g2)
}

/// Where the lift `g_k p̃_i` of boundary circle `i` of `S₂` sits upstairs:
/// on the translate `R · L_l` of the base lift of circle `l` of `S₁`, with
/// `R` in the subgroup.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftRecord {
    pub component: usize,
    pub transport: Word,
}

/// `records[i][k]` for every boundary circle `i` of `S₂` and sheet `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftBookkeeping {
    pub records: Vec<Vec<LiftRecord>>,
}

/// Bookkeeping for the identity covering: every lift is the base lift.
pub fn identity_bookkeeping(t: &Transversal) -> Result<LiftBookkeeping> {
    if t.sheets() != 1 {
        return Err(Error::InvalidSheetCount(t.sheets() as i64));
    }
    let p = t.covering().presentation();
    let id = Word::identity(p.alphabet());
    let records = (0..p.k as usize).map(|i| vec![LiftRecord { component: i, transport: id.clone() }]).collect();
    Ok(LiftBookkeeping { records })
}

/// [`identity_bookkeeping`] for one sheet, else [`annulus_bookkeeping`].
pub fn default_bookkeeping(t: &Transversal) -> Result<LiftBookkeeping> {
    if t.sheets() == 1 {
        identity_bookkeeping(t)
    } else {
        annulus_bookkeeping(t)
    }
}

/// Bookkeeping for annulus coverings: the double is the torus `(s, k) = (0, 2)`
/// and `B1` fixes every sheet, so every lift stays on the base line of the
/// matching circle and `R = 1`.
pub fn annulus_bookkeeping(t: &Transversal) -> Result<LiftBookkeeping> {
    let cover = t.covering();
    let p = cover.presentation();
    let b = p
        .index_of(GeneratorLabel::B(1))
        .filter(|_| p.s == 0 && p.k == 2)
        .ok_or(Error::InvalidSurface { s: i64::from(p.s), k: i64::from(p.k) })?;
    if !cover.permutation(b).is_identity() {
        return Err(Error::InvalidPermutation("B1 must fix every sheet of an annulus covering".to_string()));
    }
    let id = Word::identity(p.alphabet());
    let records = (0..2).map(|i| vec![LiftRecord { component: i, transport: id.clone() }; cover.sheets()]).collect();
    Ok(LiftBookkeeping { records })
}

/// `J₁` at every lift `g_k p̃_i`, transported from the base values of `S₁`.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftSignatures {
    /// `values[i][k] = J₁(g_k p̃_i)`
    pub values: Vec<Vec<CMatrix>>,
}

/// Transports `J_{1,l}` to every lift via `J₁(R q̃) = χ₁(R) J₁(q̃) χ₁(R)*`
/// and cross-checks each value against `χ₁(T)* G₁` with
/// `T = g_k^τ T_i g_k⁻¹` the lift's own monodromy.
pub fn transport_signatures(
    t: &Transversal,
    chi1: &SubgroupRep,
    sig1: &SignatureData,
    book: &LiftBookkeeping,
) -> Result<LiftSignatures> {
    let cover = t.covering();
    let p = cover.presentation();
    let n = cover.sheets();
    let mut values = Vec::with_capacity(book.records.len());
    for (i, row) in book.records.iter().enumerate() {
        if row.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: row.len() });
        }
        let base_monodromy = p.boundary_monodromy(i as u32)?;
        let mut vals = Vec::with_capacity(n);
        for (k, rec) in row.iter().enumerate() {
            if rec.component >= sig1.len() {
                return Err(Error::DimensionMismatch { expected: sig1.len(), found: rec.component + 1 });
            }
            let r = chi1.evaluate_element(t, &rec.transport)?;
            let transported = r.matmul(sig1.j(rec.component)).matmul(&r.adjoint());

            let gk = &t.reps()[k];
            let mono = p.apply_involution(gk)?.multiply(&base_monodromy)?.multiply(&gk.invert())?;
            let direct = match chi1.evaluate_element(t, &mono) {
                Ok(x) => x.adjoint().matmul(sig1.g()),
                Err(Error::NotSubgroupElement { .. }) => {
                    return Err(Error::TransportInconsistency { component: i, sheet: k, residual: f64::INFINITY })
                }
                Err(e) => return Err(e),
            };
            let residual = transported.distance(&direct);
            if residual.is_nan() || residual >= EXACT_TOL {
                return Err(Error::TransportInconsistency { component: i, sheet: k, residual });
            }
            vals.push(transported);
        }
        values.push(vals);
    }
    Ok(LiftSignatures { values })
}

/// `[J₂]_{kj} = J₁(g_k p̃) δ_{kj}` for each boundary circle of `S₂`.
pub fn build_j2_diagonal(lifts: &LiftSignatures) -> Vec<CMatrix> {
    lifts.values.iter().map(|row| CMatrix::block_diagonal(row)).collect()
}

/// `J_{2,0} = G₂` and `J_{2,i} = χ₂(B_i)* G₂`.
pub fn build_j2_from_pairing(chi2: &InducedRep, g2: &CMatrix, p: &DoubledPresentation) -> Result<Vec<CMatrix>> {
    (0..p.k).map(|i| Ok(chi2.evaluate(&p.boundary_monodromy(i)?)?.adjoint().matmul(g2))).collect()
}

/// Residual report for the symmetry conditions on the covering surface.
pub fn verify_symmetry_conditions(
    chi2: &InducedRep,
    g2: &CMatrix,
    j2: &[CMatrix],
    p: &DoubledPresentation,
) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    check::push(&mut out, "G2* = G2", g2.distance(&g2.adjoint()), EXACT_TOL);
    out.extend(involution_symmetry(chi2.rep(), g2, p)?);

    let paired = build_j2_from_pairing(chi2, g2, p)?;
    if j2.len() != paired.len() {
        return Err(Error::DimensionMismatch { expected: paired.len(), found: j2.len() });
    }
    for (i, (j, jp)) in j2.iter().zip(&paired).enumerate() {
        check::push(&mut out, format!("J2[{i}]* = J2[{i}]"), j.distance(&j.adjoint()), EXACT_TOL);
        let sq = j.matmul(j).distance(&CMatrix::identity(j.rows()));
        check::push(&mut out, format!("J2[{i}]^2 = I"), sq, EXACT_TOL);
        let a = chi2.evaluate(&p.boundary_loop(i as u32)?)?;
        let compat = a.adjoint().matmul(j).matmul(&a).distance(j);
        check::push(&mut out, format!("A{i}* J2[{i}] A{i} = J2[{i}]"), compat, EXACT_TOL);
        check::push(&mut out, format!("J2[{i}] diagonal = chi2(T)* G2"), j.distance(jp), EXACT_TOL);
    }

    // For each circle i and generator R: the lift R p̃_i has monodromy
    // T' = R^τ T_i R⁻¹; check T' R = R^τ T_i and the transport of J₂.
    for i in 0..p.k {
        let ti = p.boundary_monodromy(i)?;
        let j_here = chi2.evaluate(&ti)?.adjoint().matmul(g2);
        for (idx, label) in p.generators().iter().enumerate() {
            let r = Word::generator(p.alphabet(), idx as u32)?;
            let rt = p.apply_involution(&r)?;
            let moved = rt.multiply(&ti)?.multiply(&r.invert())?;
            let lhs = chi2.evaluate(&moved)?.matmul(&chi2.evaluate(&r)?);
            let rhs = chi2.evaluate(&rt)?.matmul(&chi2.evaluate(&ti)?);
            check::push(
                &mut out,
                format!("T(R p) R = R^tau T(p), R={label}, circle {i}"),
                lhs.distance(&rhs),
                EXACT_TOL,
            );

            let rm = chi2.evaluate(&r)?;
            let j_moved = chi2.evaluate(&moved)?.adjoint().matmul(g2);
            let transported = rm.adjoint().matmul(&j_moved).matmul(&rm);
            check::push(
                &mut out,
                format!("R* J2(R p) R = J2(p), R={label}, circle {i}"),
                transported.distance(&j_here),
                EXACT_TOL,
            );
        }
    }
    Ok(out)
}
