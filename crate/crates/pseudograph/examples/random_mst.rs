//! Random minimum spanning trees: with independent uniform(0,1) edge
//! lengths, the expected tree weight of a well-connected d-regular graph on
//! n vertices approaches (n/d) zeta(3).
//!
//! Run with: cargo run --release --example random_mst

use pseudograph::construct::paley;
use pseudograph::graph::Graph;
use pseudograph::mc::mst_experiment;

fn main() {
    // closed-form sanity: MST of a triangle keeps the two smallest of three
    // uniforms, mean 1/4 + 2/4 = 3/4
    let (est, _) = mst_experiment(&Graph::complete(3), 20_000, 1).unwrap();
    println!("triangle: mean {:.4} vs order-statistics value 0.75", est.mean);

    for (name, g, trials) in [
        ("complete(100)", Graph::complete(100), 100),
        ("paley(101)", paley(101).unwrap().graph, 100),
        ("paley(1009)", paley(1009).unwrap().graph, 30),
    ] {
        let (est, benchmark) = mst_experiment(&g, trials, 99).unwrap();
        println!(
            "{name}: mean {:.4} +- {:.4} vs (n/d) zeta(3) = {:.4}  ({} trials)",
            est.mean, est.stderr, benchmark, est.trials
        );
    }
}
