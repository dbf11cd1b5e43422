//! Runs a configuration through the library and collects a report.

use std::f64::consts::PI;
use std::path::Path;
use std::time::Instant;

use hardy_cover_core::annulus::{
    annulus_bundle, hardy_bound_check, indefinite_inner_product, make_annulus_cover, monotone_within_noise,
    pushforward_section, sample_section, verify_isometry, SectionSpec,
};
use hardy_cover_core::induction::{LiftBookkeeping, LiftRecord};
use hardy_cover_core::{
    build_g2, build_j2_diagonal, default_bookkeeping, double_group, induce_representation, schreier_transversal,
    surface_group, transport_signatures, verify_symmetry_conditions, CMatrix, Check, DoubledPresentation, InducedRep,
    Presentation, SignatureData, SubgroupRep, Transversal, Word, C64, ISOMETRY_TOL, LONG_WORD_TOL,
};
use serde_json::json;

use crate::config::{
    GroupConfig, InduceConfig, IsometryConfig, LiftJson, RunConfig, SignatureJson, Source, Tolerances, VerifyConfig,
};
use crate::error::{CliError, Result};
use crate::formats::{
    complex_json, matrix_from_json, matrix_to_json, word_from_json, CoveringJson, InducedJson, PresentationJson,
    RepresentationJson,
};
use crate::random::{random_section, seeded};
use crate::report::Report;

/// Executes `cfg`; file paths in it are resolved against `base`. Errors end
/// up in the report, which then fails.
pub fn run_pipeline(cfg: &RunConfig, base: &Path) -> Report {
    let start = Instant::now();
    let mut report = Report::new(cfg.mode(), serde_json::to_value(cfg).unwrap_or_default());
    let tol = cfg.tolerances();
    let outcome = match cfg {
        RunConfig::Group(c) => run_group(c, &mut report),
        RunConfig::Induce(c) => run_induce(c, base, &mut report, &tol),
        RunConfig::Verify(c) => run_verify(c, base, &mut report, &tol),
        RunConfig::Isometry(c) => run_isometry(c, &mut report, &tol),
    };
    if let Err(e) = outcome {
        report.error = Some(e.to_string());
    }
    report.finish();
    report.elapsed = start.elapsed();
    report
}

/// Structural checks: the residual counts mismatches.
fn count_check(name: impl Into<String>, mismatches: usize) -> Check {
    Check::new(name, mismatches as f64, 0.5)
}

fn is_rotation(a: &Word, b: &Word) -> bool {
    let (x, y) = (a.letters(), b.letters());
    x.len() == y.len() && (x.is_empty() || (0..x.len()).any(|s| x[s..].iter().chain(&x[..s]).eq(y.iter())))
}

fn run_group(c: &GroupConfig, report: &mut Report) -> Result<()> {
    let tol = Tolerances::default();
    if c.double {
        let p = double_group(c.genus, c.boundary)?;
        let (s, k) = (p.s as usize, p.k as usize);
        let expected_rank = 4 * s + 2 * (k - 1);
        report.push(&count_check(format!("generator count = {expected_rank}"), p.rank().abs_diff(expected_rank)), &tol);
        let expected_len = 8 * s + 4 * (k - 1);
        report.push(
            &count_check(format!("relator length = {expected_len}"), p.relator().len().abs_diff(expected_len)),
            &tol,
        );
        report
            .push(&count_check(format!("genus = {}", 2 * s + k - 1), (p.genus as usize).abs_diff(2 * s + k - 1)), &tol);
        let mut not_involutive = 0;
        for g in 0..p.rank() as u32 {
            let w = Word::generator(p.alphabet(), g)?;
            if p.apply_involution(&p.apply_involution(&w)?)? != w {
                not_involutive += 1;
            }
        }
        report.push(&count_check("tau^2 = id on generators", not_involutive), &tol);
        let reversed = is_rotation(&p.apply_involution(p.relator())?, &p.relator().invert());
        report.push(&count_check("tau(R) is a rotation of R^-1", usize::from(!reversed)), &tol);
        report.data = serde_json::to_value(PresentationJson::double(&p)).expect("serializable");
    } else {
        let p = surface_group(c.genus, c.boundary)?;
        let (s, k) = (p.s as usize, p.k as usize);
        report.push(&count_check(format!("generator count = {}", 2 * s + k), p.rank().abs_diff(2 * s + k)), &tol);
        report
            .push(&count_check(format!("relator length = {}", 4 * s + k), p.relator().len().abs_diff(4 * s + k)), &tol);
        report.data = serde_json::to_value(PresentationJson::surface(&p)).expect("serializable");
    }
    Ok(())
}

struct Induced {
    p: DoubledPresentation,
    t: Transversal,
    chi1: SubgroupRep,
    chi2: InducedRep,
}

fn prefixed<'a>(prefix: &'a str, checks: impl IntoIterator<Item = Check> + 'a) -> impl Iterator<Item = Check> + 'a {
    checks.into_iter().map(move |c| Check::new(format!("{prefix}: {}", c.name), c.residual, c.tolerance))
}

fn induce_common(
    genus: i64,
    boundary: i64,
    covering: &Source<CoveringJson>,
    representation: &Source<RepresentationJson>,
    base: &Path,
    report: &mut Report,
    tol: &Tolerances,
) -> Result<Induced> {
    let p = double_group(genus, boundary)?;
    let cover = covering.load(base)?.build(&p)?;
    let t = schreier_transversal(&cover);
    let chi1 = representation.load(base)?.build(&t)?;
    report.data = json!({
        "n": t.sheets(),
        "m": chi1.dim(),
        "schreier_generators": chi1.names(),
        "subgroup_relators": t.subgroup_relators()?.iter().map(|r| t.format_schreier_word(r)).collect::<Vec<_>>(),
    });
    let chi1_checks: Vec<Check> = prefixed("chi1", chi1.check(&t)?).collect();
    report.extend(&chi1_checks, tol);
    let chi2 = induce_representation(&t, &chi1)?;
    let chi2_checks: Vec<Check> =
        prefixed("chi2", chi2.block_monomial_checks().into_iter().chain(chi2.rep().check(&p)?)).collect();
    report.extend(&chi2_checks, tol);
    Ok(Induced { p, t, chi1, chi2 })
}

fn run_induce(c: &InduceConfig, base: &Path, report: &mut Report, tol: &Tolerances) -> Result<()> {
    let ind = induce_common(c.genus, c.boundary, &c.covering, &c.representation, base, report, tol)?;
    report.induced = Some(InducedJson::from_induced(&ind.chi2));
    Ok(())
}

fn signatures(sig: &SignatureJson, m: usize) -> Result<SignatureData> {
    Ok(match sig {
        SignatureJson::Signs(signs) => SignatureData::from_signs(m, signs)?,
        SignatureJson::Matrices(ms) => SignatureData::new(
            ms.iter()
                .enumerate()
                .map(|(i, j)| matrix_from_json(j, &format!("signatures[{i}]")))
                .collect::<Result<_>>()?,
        )?,
    })
}

fn bookkeeping(lifts: &[Vec<LiftJson>], p: &DoubledPresentation) -> Result<LiftBookkeeping> {
    let records = lifts
        .iter()
        .map(|row| {
            row.iter()
                .map(|l| Ok(LiftRecord { component: l.component, transport: word_from_json(p, &l.transport)? }))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(LiftBookkeeping { records })
}

fn run_verify(c: &VerifyConfig, base: &Path, report: &mut Report, tol: &Tolerances) -> Result<()> {
    let ind = induce_common(c.genus, c.boundary, &c.covering, &c.representation, base, report, tol)?;
    let sig = signatures(&c.signatures, ind.chi1.dim())?;
    if sig.len() != ind.p.k as usize {
        return Err(CliError::Config(format!("expected {} signature matrices, got {}", ind.p.k, sig.len())));
    }
    let g2 = build_g2(&ind.t, &ind.chi1, sig.g())?;
    let book = match &c.lifts {
        Some(lifts) => bookkeeping(lifts, &ind.p)?,
        None => default_bookkeeping(&ind.t)
            .map_err(|e| CliError::Config(format!("`lifts` is required for this covering ({e})")))?,
    };
    let lifts = transport_signatures(&ind.t, &ind.chi1, &sig, &book)?;
    let j2 = build_j2_diagonal(&lifts);
    report.extend(&verify_symmetry_conditions(&ind.chi2, &g2, &j2, &ind.p)?, tol);
    if let Some(obj) = report.data.as_object_mut() {
        obj.insert("g2".into(), serde_json::to_value(matrix_to_json(&g2)).expect("serializable"));
        obj.insert(
            "j2".into(),
            serde_json::to_value(j2.iter().map(matrix_to_json).collect::<Vec<_>>()).expect("serializable"),
        );
    }
    Ok(())
}

/// Sample counts used for the convergence table: powers of two from 64 (or
/// the Nyquist minimum) up to `samples`.
pub fn convergence_grid(samples: usize, degree: usize) -> Vec<usize> {
    let start = 64usize.max((2 * degree + 2).next_power_of_two()).min(samples);
    let mut grid: Vec<usize> =
        std::iter::successors(Some(start), |&n| Some(n * 2)).take_while(|&n| n <= samples).collect();
    if grid.last() != Some(&samples) {
        grid.push(samples);
    }
    grid
}

fn constant_product(rho: f64, signs: [f64; 2]) -> Result<C64> {
    let one = SectionSpec::scalar(0.0, vec![C64::new(1.0, 0.0)])?;
    let s = [sample_section(&one, rho, 0, 16)?, sample_section(&one, rho, 1, 16)?];
    let j = signs.map(|e| CMatrix::scalar(1, e.into()));
    Ok(indefinite_inner_product(&s, &s, &j)?)
}

fn run_isometry(c: &IsometryConfig, report: &mut Report, tol: &Tolerances) -> Result<()> {
    report.seed = Some(c.seed);
    let cov = make_annulus_cover(c.rho1, c.n)?;
    let core = CMatrix::scalar(c.m, C64::from_polar(1.0, c.alpha));
    let exps = SectionSpec::exponents_for(&core);
    let sig = SignatureData::from_signs(c.m, &c.signs)?;
    let bundle = annulus_bundle(&cov, &core, &sig)?;
    let bundle_checks: Vec<Check> = prefixed("bundle", bundle.checks.clone()).collect();
    report.extend(&bundle_checks, tol);

    let grid = convergence_grid(c.samples, c.degree);
    let mut rng = seeded(c.seed);
    let mut worst = vec![0.0f64; grid.len()];
    let mut scale = 0.0f64;
    let mut trials = Vec::with_capacity(c.trials);
    let mut hardy_sup = 0.0f64;
    let r_grid: Vec<f64> = [0.05, 0.25, 0.5, 0.75, 0.95].iter().map(|t| c.rho1 + (1.0 - c.rho1) * t).collect();
    for i in 0..c.trials {
        let f = random_section(&mut rng, &exps, c.degree);
        let h = random_section(&mut rng, &exps, c.degree);
        let mut last = None;
        for (slot, &n) in worst.iter_mut().zip(&grid) {
            let r = verify_isometry(&cov, &f, &h, &core, &sig, n)?;
            *slot = slot.max(r.residual);
            last = Some(r);
        }
        let r = last.expect("non-empty grid");
        scale = scale.max(r.cover.norm());
        hardy_sup = hardy_sup.max(hardy_bound_check(&f, c.rho1, &r_grid)?.sup);
        report.push(&Check::new(format!("trial {i}: isometry"), r.residual, ISOMETRY_TOL), tol);
        let cov_res = r.component_residuals[0].max(r.component_residuals[1]);
        report.push(&Check::new(format!("trial {i}: change of variables"), cov_res, ISOMETRY_TOL), tol);
        let mono = r.checks.iter().find(|c| c.name == "pushforward monodromy").expect("monodromy check");
        report.push(&Check::new(format!("trial {i}: pushforward monodromy"), mono.residual, mono.tolerance), tol);
        trials.push(json!({
            "residual": r.residual,
            "base": complex_json(r.base),
            "cover": complex_json(r.cover),
        }));
    }

    let noise = 1e-13 * (1.0 + scale);
    let monotone = monotone_within_noise(&worst, noise);
    report.push(&count_check("convergence monotone within 2x noise", usize::from(!monotone)), tol);
    report.push(&Check::new("convergence final", *worst.last().unwrap_or(&f64::NAN), ISOMETRY_TOL), tol);

    let [e0, e1] = c.signs;
    for (name, rho) in [("A(rho1)", cov.rho1), ("A(rho2)", cov.rho2)] {
        let v = constant_product(rho, c.signs)?;
        let expected = 2.0 * PI * (e0 + e1 * rho);
        report.push(
            &Check::new(format!("[1,1] on {name} = 2pi(e0 + e1 rho)"), (v - expected).norm(), LONG_WORD_TOL),
            tol,
        );
    }
    let zc = SectionSpec::new(exps.clone(), vec![vec![C64::new(1.0, 0.0); c.m]])?;
    let pushed = [pushforward_section(&cov, &zc, 0, 64, false)?, pushforward_section(&cov, &zc, 1, 64, false)?];
    let base = indefinite_inner_product(&pushed, &pushed, &bundle.j2)?;
    let expected: f64 = exps.iter().map(|&e| 2.0 * PI * (e0 + e1 * c.rho1.powf(1.0 + 2.0 * e))).sum();
    report.push(&Check::new("[z^c, z^c] pushed forward = closed form", (base - expected).norm(), ISOMETRY_TOL), tol);

    report.data = json!({
        "rho2": cov.rho2,
        "branch_flagged": cov.branch_flagged,
        "exponents": exps,
        "trials": trials,
        "convergence": grid.iter().zip(&worst).map(|(n, r)| json!({"samples": n, "max_residual": r})).collect::<Vec<_>>(),
        "hardy_sup": hardy_sup,
    });
    Ok(())
}
