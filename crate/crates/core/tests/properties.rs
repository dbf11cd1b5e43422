use std::f64::consts::PI;

use hardy_cover_core::annulus::{
    indefinite_inner_product, make_annulus_cover, monotone_within_noise, pushforward_section, sample_section,
    verify_isometry, SectionSpec,
};
use hardy_cover_core::induction::block_monomial_defects;
use hardy_cover_core::torus::lattice_rep;
use hardy_cover_core::*;
use proptest::prelude::*;

fn letters(rank: u32, max_len: usize) -> impl Strategy<Value = Vec<(u32, i8)>> {
    prop::collection::vec((0..rank, prop::bool::ANY).prop_map(|(g, inv)| (g, if inv { -1 } else { 1 })), 0..max_len)
}

fn word(alphabet: Alphabet, raw: &[(u32, i8)]) -> Word {
    Word::from_signed(alphabet, raw).unwrap()
}

fn torus_transversal(n: usize, b_shift: usize) -> Transversal {
    let p = double_group(0, 2).unwrap();
    let cyc: Vec<usize> = (1..=n).collect();
    let a = SheetPermutation::cycle(n, &cyc).unwrap();
    let mut b = SheetPermutation::identity(n);
    for _ in 0..b_shift {
        b = b.then(&a);
    }
    let c = build_covering(p, n, &[(GeneratorLabel::A(1), a), (GeneratorLabel::B(1), b)]).unwrap();
    schreier_transversal(&c)
}

/// Commuting unitaries `W diag(e^{iα}) W*`, `W diag(e^{iβ}) W*`.
fn commuting_pair(m: usize, seed: &[f64]) -> (CMatrix, CMatrix) {
    let raw: Vec<Vec<C64>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    C64::new(seed[(i * m + j) % seed.len()], seed[(i + j + 1) % seed.len()] + (i == j) as u8 as f64)
                })
                .collect()
        })
        .collect();
    let w = CMatrix::from_rows(&raw).orthonormalize_columns();
    let d = |off: usize| {
        CMatrix::diagonal(&(0..m).map(|i| C64::from_polar(1.0, 3.0 * seed[(i + off) % seed.len()])).collect::<Vec<_>>())
    };
    (w.matmul(&d(0)).matmul(&w.adjoint()), w.matmul(&d(3)).matmul(&w.adjoint()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduction_is_idempotent(raw in letters(4, 30)) {
        let a = Alphabet::tagged("prop", 4);
        let w = word(a, &raw);
        prop_assert_eq!(Word::new(a, w.letters().iter().copied()).unwrap(), w.clone());
        prop_assert_eq!(w.invert().invert(), w.clone());
        prop_assert!(w.multiply(&w.invert()).unwrap().is_empty());
    }

    #[test]
    fn multiplication_is_associative(x in letters(3, 12), y in letters(3, 12), z in letters(3, 12)) {
        let a = Alphabet::tagged("prop", 3);
        let (x, y, z) = (word(a, &x), word(a, &y), word(a, &z));
        prop_assert_eq!(x.multiply(&y).unwrap().multiply(&z).unwrap(), x.multiply(&y.multiply(&z).unwrap()).unwrap());
    }

    #[test]
    fn involution_squares_to_identity(s in 0i64..3, k in 1i64..4, raw in letters(16, 40)) {
        let p = double_group(s, k).unwrap();
        let rank = p.rank() as u32;
        prop_assume!(rank > 0);
        let raw: Vec<(u32, i8)> = raw.into_iter().map(|(g, e)| (g % rank, e)).collect();
        let w = word(p.alphabet(), &raw);
        prop_assert_eq!(p.apply_involution(&p.apply_involution(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn sigma_reverses_products(n in 1usize..7, shift in 0usize..7, x in letters(2, 15), y in letters(2, 15)) {
        let t = torus_transversal(n, shift % n);
        let c = t.covering();
        let a = c.presentation().alphabet();
        let (g1, g2) = (word(a, &x), word(a, &y));
        let lhs = c.sigma(&g2.multiply(&g1).unwrap()).unwrap();
        for k in 0..n {
            prop_assert_eq!(c.sigma(&g1).unwrap().apply(c.sigma(&g2).unwrap().apply(k)), lhs.apply(k));
        }
    }

    #[test]
    fn factorization_and_rewriting_round_trip(n in 1usize..7, shift in 0usize..7, x in letters(2, 20)) {
        let t = torus_transversal(n, shift % n);
        let c = t.covering();
        let a = c.presentation().alphabet();
        let g = word(a, &x);
        for k in 0..n {
            let (h, j) = t.factorize(k, &g).unwrap();
            prop_assert!(c.in_subgroup(&h).unwrap());
            prop_assert_eq!(t.reps()[k].multiply(&g).unwrap(), h.multiply(&t.reps()[j]).unwrap());
            prop_assert_eq!(t.expand(&t.schreier_rewrite(&h).unwrap()).unwrap(), h);
        }
        let stable = t.involution_stable().unwrap();
        prop_assert_eq!(stable, (2 * (shift % n)) % n == 0);
        if !stable {
            prop_assert_eq!(t.nu(), Err(Error::NotInvolutionStable));
            return Ok(());
        }
        let nu = t.nu().unwrap();
        let mut seen = nu.clone();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..n).collect::<Vec<_>>());
        for k in 0..n {
            prop_assert_eq!(nu[nu[k]], k);
        }
    }

    #[test]
    fn induced_rep_is_a_unitary_block_monomial_homomorphism(
        n in 1usize..6,
        m in 1usize..3,
        seed in prop::collection::vec(-1.0f64..1.0, 6),
        x in letters(2, 20),
        y in letters(2, 20),
    ) {
        let t = torus_transversal(n, 0);
        let (p, q) = commuting_pair(m, &seed);
        let chi2 = induce_representation(&t, &lattice_rep(&t, &p, &q).unwrap()).unwrap();
        let a = t.covering().presentation().alphabet();
        let (u, v) = (word(a, &x), word(a, &y));
        let uv = chi2.evaluate(&u.multiply(&v).unwrap()).unwrap();
        prop_assert!(uv.distance(&chi2.evaluate(&u).unwrap().matmul(&chi2.evaluate(&v).unwrap())) < LONG_WORD_TOL);
        prop_assert!(uv.unitarity_residual() < LONG_WORD_TOL);
        prop_assert_eq!(block_monomial_defects(&uv, n, m, None), 0);
        prop_assert!(check::all_pass(&chi2.rep().check(t.covering().presentation()).unwrap()));
    }

    #[test]
    fn induction_in_stages_matches_one_step(
        n1 in 1usize..4,
        n2 in 1usize..4,
        seed in prop::collection::vec(-1.0f64..1.0, 6),
        x in letters(2, 16),
    ) {
        let (p, q) = commuting_pair(2, &seed);
        let direct_t = torus_transversal(n1 * n2, 0);
        let direct = induce_representation(&direct_t, &lattice_rep(&direct_t, &p, &q).unwrap()).unwrap();

        let inner_t = torus_transversal(n2, 0);
        let inner = induce_representation(&inner_t, &lattice_rep(&inner_t, &p, &q).unwrap()).unwrap();
        let outer_t = torus_transversal(n1, 0);
        let mid = lattice_rep(&outer_t, &inner.rep().images()[0], &inner.rep().images()[1]).unwrap();
        let staged = induce_representation(&outer_t, &mid).unwrap();

        let w = word(direct_t.covering().presentation().alphabet(), &x);
        let a = direct.evaluate(&w).unwrap().trace();
        let b = staged.evaluate(&w).unwrap().trace();
        prop_assert!((a - b).norm() < 1e-10);
    }

    #[test]
    fn extension_then_restriction_is_symmetric(alpha in -3.0f64..3.0, e0 in prop::bool::ANY, e1 in prop::bool::ANY, n in 1usize..5) {
        let s = |b: bool| if b { 1.0 } else { -1.0 };
        let surface = surface_group(0, 2).unwrap();
        let core = CMatrix::scalar(1, C64::from_polar(1.0, alpha));
        let chi_s = MatrixRep::from_ordered(&surface, 1, vec![core.adjoint(), core]).unwrap();
        let sig = SignatureData::from_signs(1, &[s(e0), s(e1)]).unwrap();
        let double = double_group(0, 2).unwrap();
        let chi_x = extend_to_double(&chi_s, &sig, &double).unwrap();
        let t = torus_transversal(n, 0);
        let chi1 = SubgroupRep::restrict(&t, &chi_x).unwrap();
        let chi2 = induce_representation(&t, &chi1).unwrap();
        let g2 = build_g2(&t, &chi1, sig.g()).unwrap();
        let lifts = transport_signatures(&t, &chi1, &sig, &induction::annulus_bookkeeping(&t).unwrap()).unwrap();
        let checks = verify_symmetry_conditions(&chi2, &g2, &build_j2_diagonal(&lifts), &double).unwrap();
        prop_assert!(check::all_pass(&checks), "{:?}", check::first_failure(&checks));
    }
}

fn random_spec(c: f64, coeffs: &[(f64, f64)]) -> SectionSpec {
    SectionSpec::scalar(c, coeffs.iter().map(|&(re, im)| C64::new(re, im)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn isometry_converges(
        fc in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 9),
        hc in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 9),
    ) {
        let alpha = 0.7;
        let cov = make_annulus_cover(0.6, 3).unwrap();
        let core = CMatrix::scalar(1, C64::from_polar(1.0, alpha));
        let sig = SignatureData::from_signs(1, &[1.0, -1.0]).unwrap();
        let (f, h) = (random_spec(alpha / (2.0 * PI), &fc), random_spec(alpha / (2.0 * PI), &hc));
        let residuals: Vec<f64> =
            [16, 64, 256, 1024].iter().map(|&n| verify_isometry(&cov, &f, &h, &core, &sig, n).unwrap().residual).collect();
        prop_assert!(monotone_within_noise(&residuals, 1e-13 * (1.0 + verify_isometry(&cov, &f, &h, &core, &sig, 16).unwrap().cover.norm())));
        prop_assert!(residuals[3] < ISOMETRY_TOL);
    }

    #[test]
    fn branch_flip_and_positive_definiteness(
        fc in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 7),
        n in 1i64..5,
    ) {
        let cov = make_annulus_cover(0.6, n).unwrap();
        let f = random_spec(0.0, &fc);
        let j = vec![CMatrix::identity(cov.n); 2];
        let flip = |b| [pushforward_section(&cov, &f, 0, 32, b).unwrap(), pushforward_section(&cov, &f, 1, 32, b).unwrap()];
        let (a, b) = (flip(false), flip(true));
        let pa = indefinite_inner_product(&a, &a, &j).unwrap();
        let pb = indefinite_inner_product(&b, &b, &j).unwrap();
        prop_assert!((pa - pb).norm() < 1e-12 * (1.0 + pa.norm()));

        let s = [sample_section(&f, 0.6, 0, 32).unwrap(), sample_section(&f, 0.6, 1, 32).unwrap()];
        let id = [CMatrix::identity(1), CMatrix::identity(1)];
        let v = indefinite_inner_product(&s, &s, &id).unwrap();
        prop_assert!(v.re >= 0.0 && v.im.abs() < 1e-12 * (1.0 + v.re));
        let nonzero = fc.iter().any(|&(re, im)| re != 0.0 || im != 0.0);
        prop_assert_eq!(v.re > 0.0, nonzero);
    }

    #[test]
    fn section_monodromy(c in -0.5f64..0.5, fc in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 5), r in 0.3f64..1.0) {
        let f = random_spec(c, &fc);
        let phase = C64::from_polar(1.0, 2.0 * PI * c);
        for j in 0..16 {
            let theta = 2.0 * PI * j as f64 / 16.0;
            let here = f.evaluate(r, theta)[0];
            let there = f.evaluate(r, theta + 2.0 * PI)[0];
            prop_assert!((there - phase * here).norm() < 1e-12 * (1.0 + here.norm()));
        }
    }
}
