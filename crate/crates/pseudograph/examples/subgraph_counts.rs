//! Labeled subgraph counts against the m^s (d/n)^r random-graph prediction,
//! and the subset-size threshold that forces clique containment.
//!
//! Run with: cargo run --release --example subgraph_counts

use pseudograph::construct;
use pseudograph::graph::Graph;
use pseudograph::oracle::{automorphism_count, count_labeled_copies};
use pseudograph::spectral::full_spectrum;

fn main() {
    let k3 = Graph::complete(3);
    for (name, g) in [
        ("paley(101)", construct::paley(101).unwrap().graph),
        ("paley(13)", construct::paley(13).unwrap().graph),
        ("norm_graph(5,3)", construct::norm_graph(5, 3).unwrap().graph),
    ] {
        let n = g.n() as f64;
        let d = g.regular_degree().unwrap() as f64;
        let labeled = count_labeled_copies(&g, &k3) as f64;
        let predicted = n.powi(3) * (d / n).powi(3);
        println!(
            "{name}: labeled triangles {labeled} vs prediction {predicted:.1}  (ratio {:.4}, |Aut| = {})",
            labeled / predicted,
            automorphism_count(&k3)
        );
    }

    // triangle-free pseudo-random graph: triangles vanish while the clique
    // threshold correctly stays out of reach
    let alon = construct::alon_triangle_free(4).unwrap().graph;
    let s = pseudograph::spectral::extremal_lambda(&alon, 1e-8).unwrap();
    let (n, d) = (alon.n() as f64, 56.0);
    let threshold = (s.lambda + 1.0) * n / d * (1.0 + n / d);
    println!(
        "alon(4): closed 3-walks = {}, clique threshold {threshold:.0} vs n = {n} (no containment implied)",
        pseudograph::spectral::circuit_count(&alon, 3).unwrap()
    );

    let p13 = construct::paley(13).unwrap().graph;
    let spec = full_spectrum(&p13).unwrap();
    let threshold = (spec.lambda() + 1.0) * 13.0 / 6.0 * (1.0 + 13.0 / 6.0);
    println!("paley(13): clique threshold {threshold:.2}; triangles present: {}", p13.has_triangle());
}
