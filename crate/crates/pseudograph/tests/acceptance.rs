//! Acceptance suite: one test per headline capability, each printing a
//! PASS line with its timing. Every tolerance is pinned here, in code.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use num_bigint::BigUint;
use pseudograph::audit::{self, AuditConfig, MixingMode, Verdict};
use pseudograph::construct;
use pseudograph::graph::Graph;
use pseudograph::mc;
use pseudograph::oracle;
use pseudograph::rng::{derive_seed, SplitMix64};
use pseudograph::spectral;
use std::time::Instant;

fn report(name: &str, started: Instant) {
    println!("ACCEPT {name}: PASS ({:.2}s)", started.elapsed().as_secs_f64());
}

#[test]
fn criterion_01_paley_13_srg_and_second_eigenvalue() {
    let t0 = Instant::now();
    let built = construct::paley(13).unwrap();
    let params = spectral::srg_detect(&built.graph).expect("Paley(13) is strongly regular");
    assert_eq!((params.n, params.d, params.eta, params.mu), (13, 6, 2, 3));
    let s = spectral::full_spectrum(&built.graph).unwrap();
    let expected = (13f64.sqrt() + 1.0) / 2.0;
    assert!(
        (s.lambda() - expected).abs() <= 1e-8,
        "lambda = {}, expected {expected}",
        s.lambda()
    );
    report("01 paley-13 srg + lambda", t0);
}

#[test]
fn criterion_02_inner_product_graph_15_6_1_3() {
    let t0 = Instant::now();
    let built = construct::inner_product_graph(5).unwrap();
    let params = spectral::srg_detect(&built.graph).expect("srg expected");
    assert_eq!((params.n, params.d, params.eta, params.mu), (15, 6, 1, 3));
    let s = spectral::full_spectrum(&built.graph).unwrap();
    assert!((s.lambda() - 3.0).abs() <= 1e-8, "lambda = {}", s.lambda());
    report("02 inner-product-graph(5)", t0);
}

#[test]
fn criterion_03_dgt_5_3_eigenvalue_support() {
    let t0 = Instant::now();
    let built = construct::dgt_graph(5, 3).unwrap();
    let s = spectral::full_spectrum(&built.graph).unwrap();
    for &l in s.eigenvalues.iter().skip(1) {
        assert!(
            (l - 2.0).abs() <= 1e-8 || (l + 3.0).abs() <= 1e-8,
            "nontrivial eigenvalue {l} outside {{2, -3}}"
        );
    }
    report("03 dgt(5,3) eigenvalues", t0);
}

#[test]
fn criterion_04_pg_polarity_3_2() {
    let t0 = Instant::now();
    let built = construct::pg_polarity(3, 2).unwrap();
    let g = &built.graph;
    assert_eq!(g.n(), 13);
    assert_eq!(g.loop_count(), 4);
    let s = spectral::full_spectrum(g).unwrap();
    for &l in s.eigenvalues.iter().skip(1) {
        assert!(
            (l.abs() - 3f64.sqrt()).abs() <= 1e-8,
            "nontrivial |eigenvalue| {l} differs from sqrt(3)"
        );
    }
    assert_eq!(g.count_four_cycles(), 0, "polarity graph of a projective plane is C4-free");
    report("04 pg-polarity(3,2)", t0);
}

#[test]
fn criterion_05_norm_graph_3_3() {
    let t0 = Instant::now();
    let built = construct::norm_graph(3, 3).unwrap();
    let g = &built.graph;
    assert_eq!(g.n(), 18);
    assert_eq!(g.regular_degree(), Some(8));
    let s = spectral::full_spectrum(g).unwrap();
    assert!((s.lambda() - 3.0).abs() <= 1e-8, "lambda = {}", s.lambda());
    assert!(
        !audit::contains_complete_bipartite(g, 3, 3),
        "norm graph must not contain K_{{3,3}}"
    );
    report("05 norm-graph(3,3)", t0);
}

#[test]
fn criterion_06_triangle_free_dense_family() {
    let t0 = Instant::now();
    let built = construct::alon_triangle_free(4).unwrap();
    let g4 = &built.graph;
    assert_eq!(g4.n(), 4096);
    assert_eq!(g4.regular_degree(), Some(56));
    assert_eq!(
        spectral::circuit_count(g4, 3).unwrap(),
        BigUint::from(0u32),
        "closed 3-walks must vanish"
    );
    let e = spectral::extremal_lambda(g4, 1e-8).unwrap();
    let bound = 9.0 * 16.0 + 3.0 * 4.0 + 0.25;
    assert!(e.lambda <= bound + 1e-6, "lambda = {} > {bound}", e.lambda);

    let g5 = construct::alon_triangle_free(5).unwrap().graph;
    assert_eq!(g5.n(), 32768);
    assert_eq!(g5.regular_degree(), Some(240));
    assert!(!g5.has_triangle(), "neighbor-set intersections found a triangle");
    report("06 triangle-free dense family", t0);
}

#[test]
fn criterion_07_ramanujan_expander_17_13() {
    let t0 = Instant::now();
    assert_eq!(construct::sum_of_four_squares_vectors(17).len(), 18);
    let built = construct::lps(17, 13).unwrap();
    let g = &built.graph;
    assert_eq!(g.n(), 1092);
    assert_eq!(g.regular_degree(), Some(18));
    assert!(g.is_connected());
    // the girth theorem for this family guarantees girth >= 2 log_p q,
    // which is 2 log_17 13 = 1.81 here
    let girth = g.girth().unwrap();
    assert!((girth as f64) >= 2.0 * 13f64.ln() / 17f64.ln(), "girth = {girth}");
    let e = spectral::extremal_lambda(g, 1e-8).unwrap();
    let bound = 2.0 * 17f64.sqrt();
    assert!(e.lambda <= bound + 1e-6, "lambda = {} > {bound}", e.lambda);
    report("07 expander lps(17,13)", t0);
}

// Stated as girth >= 4 in the requirements, but that figure is not
// attainable at this parameter pair: the quaternion 47 + 52i has norm
// 47^2 + 52^2 = 4913 = 17^3 with 52 divisible by 13, which is precisely a
// closed non-backtracking 3-walk witness, and the exhaustive count finds
// 1092 triangles (three per vertex). The family's own guarantee,
// girth >= 2 log_p q = 1.81, holds. This test keeps the stated figure and
// is expected to fail; the test above carries the attainable content.
#[test]
fn criterion_07_girth_as_stated() {
    let t0 = Instant::now();
    let g = construct::lps(17, 13).unwrap().graph;
    let girth = g.girth().unwrap();
    assert!(
        girth >= 4,
        "stated girth >= 4 is unattainable: measured girth {girth}; \
         see the analysis in this test's comment"
    );
    report("07b girth as stated", t0);
}

#[test]
fn criterion_08_mixing_exhaustive_zero_violations() {
    let t0 = Instant::now();
    for seed in 0..10u64 {
        let built = construct::random_regular(10, 3, derive_seed(314, seed)).unwrap();
        let f = audit::audit_mixing(&built.graph, MixingMode::Exhaustive, 1e-6);
        assert_eq!(f.verdict, Verdict::Pass, "violation on seed {seed}: {f:?}");
    }
    let f = audit::audit_mixing(&Graph::cycle(12), MixingMode::Exhaustive, 1e-6);
    assert_eq!(f.verdict, Verdict::Pass, "violation on C12: {f:?}");
    report("08 mixing exhaustive", t0);
}

#[test]
fn criterion_09_tightness_witnesses() {
    let t0 = Instant::now();
    // maximum cut of K4 meets the spectral ceiling exactly
    let k4 = Graph::complete(4);
    let s = spectral::full_spectrum(&k4).unwrap();
    let f = audit::audit_maxcut(&k4, s.lambda_min(), 1e-6);
    assert_eq!(f.verdict, Verdict::Pass);
    assert!(f.slack.abs() <= 1e-9, "maxcut slack = {}", f.slack);

    // Paley(25): both the independence ceiling and the chromatic floor are attained
    let p25 = construct::paley(25).unwrap().graph;
    let s = spectral::full_spectrum(&p25).unwrap();
    let findings = audit::audit_alpha_chi(&p25, s.lambda(), oracle::DEFAULT_NODE_BUDGET, 1e-6);
    let alpha = findings.iter().find(|f| f.id == "independence-upper").unwrap();
    assert_eq!(alpha.lhs, 5.0);
    assert!(alpha.slack.abs() <= 1e-9, "alpha slack = {}", alpha.slack);
    let chi = findings.iter().find(|f| f.id == "chromatic-hoffman-lower").unwrap();
    assert_eq!(chi.lhs, 5.0);
    assert!(chi.slack.abs() <= 1e-9, "chi slack = {}", chi.slack);
    report("09 tightness witnesses", t0);
}

#[test]
fn criterion_10_connectivity_and_matchings() {
    let t0 = Instant::now();
    let p13 = construct::paley(13).unwrap().graph;
    let kappa = p13.vertex_connectivity();
    let kappa_edge = p13.edge_connectivity();
    assert_eq!(kappa, 6);
    assert_eq!(kappa_edge, 6);
    let s = spectral::full_spectrum(&p13).unwrap();
    let bound = 6.0 - 36.0 * s.lambda() * s.lambda() / 6.0;
    assert!(kappa as f64 >= bound, "kappa below the spectral bound");

    // every even-order constructed graph with gap >= 2 has a perfect
    // matching; the gap is measured, not assumed (alon(4) has lambda = d
    // because its connection set spans a proper subgroup, so it does not
    // qualify)
    let even_corpus: Vec<(&str, Graph)> = vec![
        ("norm(3,3)", construct::norm_graph(3, 3).unwrap().graph),
        ("dgt(4,2)", construct::dgt_graph(4, 2).unwrap().graph),
        ("lps(17,13)", construct::lps(17, 13).unwrap().graph),
        ("alon(4)", construct::alon_triangle_free(4).unwrap().graph),
    ];
    let mut qualified = 0;
    for (name, g) in even_corpus {
        assert_eq!(g.n() % 2, 0, "{name} should have even order");
        let d = g.regular_degree().unwrap() as f64;
        let lambda = spectral::extremal_lambda(&g, 1e-7).unwrap().lambda;
        if d - lambda >= 2.0 {
            qualified += 1;
            assert!(oracle::has_perfect_matching(&g), "{name}: perfect matching missing");
        }
    }
    assert!(qualified >= 3, "expected at least three qualifying graphs, got {qualified}");
    report("10 connectivity + matchings", t0);
}

#[test]
fn criterion_11_giant_component_phase() {
    let t0 = Instant::now();
    let g = construct::lps(17, 13).unwrap().graph;
    let trials = 200;

    // supercritical: mean largest-component fraction tracks 1 - conj(2)/2
    let root = mc::dual_branching_root(2.0).unwrap();
    assert!((root * (-root).exp() - 2.0 * (-2.0f64).exp()).abs() <= 1e-12);
    let predicted = 1.0 - root / 2.0;
    let pts = mc::giant_component_experiment(&g, &[2.0], trials, 2024).unwrap();
    assert!(
        (pts[0].mean_largest_fraction - predicted).abs() <= 0.04,
        "mean fraction {} vs predicted {predicted}",
        pts[0].mean_largest_fraction
    );

    // subcritical: largest component below a tenth of the graph almost always
    let d = 18.0;
    let p = 0.5 / d;
    let mut small = 0;
    for t in 0..trials {
        let sub = mc::sample_subgraph(&g, p, derive_seed(77, t as u64));
        let largest = sub.components().iter().map(|c| c.len()).max().unwrap();
        if (largest as f64) <= 0.1 * g.n() as f64 {
            small += 1;
        }
    }
    assert!(small * 100 >= trials * 95, "only {small}/{trials} subcritical trials were small");
    report("11 giant component", t0);
}

#[test]
fn criterion_12_random_mst_weight() {
    let t0 = Instant::now();
    let g = construct::paley(1009).unwrap().graph;
    let (est, benchmark) = mc::mst_experiment(&g, 30, 99).unwrap();
    let expected = 1009.0 / 504.0 * 1.202_056_903_159_594_3;
    assert!((benchmark - expected).abs() < 1e-9);
    assert!(
        (est.mean - expected).abs() <= 0.1 * expected,
        "mean {} not within 10% of {expected}",
        est.mean
    );
    report("12 random mst", t0);
}

#[test]
fn criterion_13_enumeration_infrastructure() {
    let t0 = Instant::now();
    assert_eq!(oracle::count_spanning_trees(&Graph::complete(4)), BigUint::from(16u32));
    assert_eq!(oracle::count_perfect_matchings(&Graph::cycle(6)), 2);
    assert_eq!(oracle::hamilton_count(&Graph::complete(5)), 12);
    // independent route: deletion-contraction on the Petersen graph
    let petersen = Graph::petersen();
    let dc = deletion_contraction_count(&petersen);
    assert_eq!(dc, 2000);
    assert_eq!(oracle::count_spanning_trees(&petersen), BigUint::from(dc));
    report("13 enumeration infrastructure", t0);
}

/// Test-only spanning-tree oracle: deletion-contraction on multigraphs,
/// independent of the determinant route.
fn deletion_contraction_count(g: &Graph) -> u64 {
    // multigraph as a multiset of edges over n vertices
    let edges: Vec<(usize, usize)> = g.edge_list().into_iter().filter(|&(u, v)| u != v).collect();
    fn recurse(n: usize, edges: &[(usize, usize)]) -> u64 {
        // count spanning trees of the multigraph (n vertices, edge list)
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        let mut comps = n;
        for &(u, v) in edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                comps -= 1;
            }
        }
        if comps > 1 {
            return 0;
        }
        if edges.is_empty() {
            return u64::from(n == 1);
        }
        // spanning trees of a single vertex with leftover loops: 1
        if n == 1 {
            return 1;
        }
        let (u, v) = edges[0];
        let rest = &edges[1..];
        // delete
        let deleted = recurse(n, rest);
        // contract: map v onto u, drop loops
        let contracted: Vec<(usize, usize)> = rest
            .iter()
            .filter_map(|&(a, b)| {
                let a = if a == v { u } else { a };
                let b = if b == v { u } else { b };
                let (a, b) = (a.min(b), a.max(b));
                (a != b).then_some((if a > v { a - 1 } else { a }, if b > v { b - 1 } else { b }))
            })
            .collect();
        deleted + recurse(n - 1, &contracted)
    }
    // relabeling in the contraction assumes u < v; edge_list guarantees it
    recurse(g.n(), &edges)
}

#[test]
fn criterion_14_soundness_and_determinism() {
    let t0 = Instant::now();
    let corpus: Vec<(&str, construct::Construction)> = vec![
        ("paley-5", construct::paley(5).unwrap()),
        ("paley-13", construct::paley(13).unwrap()),
        ("paley-25", construct::paley(25).unwrap()),
        ("inner-product-5", construct::inner_product_graph(5).unwrap()),
        ("dgt-5-3", construct::dgt_graph(5, 3).unwrap()),
        ("dgt-4-2", construct::dgt_graph(4, 2).unwrap()),
        ("pg-polarity-3-2", construct::pg_polarity(3, 2).unwrap()),
        ("pg-polarity-2-2", construct::pg_polarity(2, 2).unwrap()),
        ("norm-3-3", construct::norm_graph(3, 3).unwrap()),
        ("power-residue-37-3", construct::power_residue_cayley(37, 3).unwrap()),
        ("random-regular-16-3", construct::random_regular(16, 3, 5).unwrap()),
    ];
    let config = AuditConfig::default();
    for (name, built) in &corpus {
        let report_a = audit::full_report(&built.graph, Some(&built.claims), &config);
        let failures = report_a.failures();
        assert!(
            failures.is_empty(),
            "{name}: exact values violated an audited inequality: {failures:?}"
        );
        let ser_a = serde_json::to_string(&report_a).unwrap();
        let ser_b = serde_json::to_string(&audit::full_report(&built.graph, Some(&built.claims), &config)).unwrap();
        assert_eq!(ser_a, ser_b, "{name}: report not byte-identical across runs");
    }
    // large instances: claims re-verified through the iterative solver
    let lps = construct::lps(17, 13).unwrap();
    let findings = audit::verify_claims(&lps.graph, &lps.claims, 2048);
    assert!(
        findings.iter().all(|f| f.verdict != Verdict::Fail),
        "lps claims failed: {findings:?}"
    );
    report("14 soundness + determinism", t0);
}

#[test]
fn criterion_15_character_spectra() {
    let t0 = Instant::now();
    // quadratic residues mod 13
    let residues: Vec<Vec<u64>> = (1..13u64)
        .filter(|&x| (1..13).any(|y| y * y % 13 == x))
        .map(|x| vec![x])
        .collect();
    let paley_cayley = construct::cayley_abelian(&[13], &residues).unwrap();

    // cycles C_8 and C_12
    let c8 = construct::cayley_abelian(&[8], &[vec![1], vec![7]]).unwrap();
    let c12 = construct::cayley_abelian(&[12], &[vec![1], vec![11]]).unwrap();

    // the 4-dimensional cube
    let basis: Vec<Vec<u64>> = (0..4).map(|i| (0..4).map(|j| u64::from(i == j)).collect()).collect();
    let cube = construct::cayley_abelian(&[2, 2, 2, 2], &basis).unwrap();

    for (name, built) in [
        ("paley-13-cayley", paley_cayley),
        ("c8", c8),
        ("c12", c12),
        ("4-cube", cube),
    ] {
        let spec = spectral::full_spectrum(&built.graph).unwrap();
        let mut predicted = built.claims.predicted_spectrum.clone().unwrap();
        predicted.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (i, (a, b)) in predicted.iter().zip(&spec.eigenvalues).enumerate() {
            assert!(
                (a - b).abs() <= 1e-8,
                "{name}: predicted[{i}] = {a} vs computed {b}"
            );
        }
    }
    // the cube spectrum is the binomial ladder {4, 2, 0, -2, -4}
    let cube2 = construct::cayley_abelian(
        &[2, 2, 2, 2],
        &(0..4).map(|i| (0..4).map(|j| u64::from(i == j)).collect()).collect::<Vec<_>>(),
    )
    .unwrap();
    let s = spectral::full_spectrum(&cube2.graph).unwrap();
    let counts: Vec<usize> = [-4.0f64, -2.0, 0.0, 2.0, 4.0]
        .iter()
        .map(|&v| s.eigenvalues.iter().filter(|&&l| (l - v).abs() < 1e-8).count())
        .collect();
    assert_eq!(counts, vec![1, 4, 6, 4, 1]);
    report("15 character spectra", t0);
}

#[test]
fn seeded_rng_streams_are_stable() {
    // frozen values guard against accidental generator changes, which would
    // silently invalidate every recorded experiment
    let mut r = SplitMix64::new(0);
    let first: Vec<u64> = (0..3).map(|_| r.next_u64()).collect();
    assert_eq!(first, vec![16294208416658607535, 7960286522194355700, 487617019471545679]);
}
