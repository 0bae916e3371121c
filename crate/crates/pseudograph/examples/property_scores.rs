//! Finite-size deviation scores for the classical pseudo-randomness
//! properties: closed-walk ratios, eigenvalue deviations, subset
//! discrepancy, walk-count uniformity, and codegree sums. A genuine
//! pseudo-random graph scores near the random-graph ideal; a clustered
//! graph of the same density does not.
//!
//! Run with: cargo run --release --example property_scores

use pseudograph::construct::paley;
use pseudograph::graph::Graph;
use pseudograph::spectral::property_scores;

fn show(name: &str, g: &Graph, p: f64) {
    let ps = property_scores(g, p, 4, 2000, 7).unwrap();
    println!("{name} (density target {p:.3}):");
    println!("  closed-walk ratio Tr(A^4)/(np)^4   {:.4}", ps.circuit_ratio);
    println!("  top-eigenvalue deviation           {:+.4}", ps.eig_top_deviation);
    println!("  second-eigenvalue ratio            {:.4}", ps.eig_second_ratio);
    println!("  subset discrepancy ({:?})", ps.disc_method);
    println!("                                     {:.4}", ps.disc_score);
    println!("  pair walk-count ratio              {:.4}", ps.walk_pair_ratio);
    println!("  codegree deviation / n^3           {:.6}", ps.codegree_score);
    println!("  agreement deviation / n^3          {:.6}", ps.agreement_score);
}

fn main() {
    let p13 = paley(13).unwrap().graph;
    show("paley(13)", &p13, 0.5);

    // two disjoint cliques: same density, conspicuously non-uniform
    let mut edges = Vec::new();
    for u in 0..7 {
        for v in (u + 1)..7 {
            edges.push((u, v));
            edges.push((u + 7, v + 7));
        }
    }
    let clustered = Graph::from_edge_list(14, &edges).unwrap();
    show("two disjoint 7-cliques", &clustered, clustered.density());
}
