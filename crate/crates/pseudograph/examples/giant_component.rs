//! Phase transition of random subgraphs: sampling each edge with
//! probability alpha/d, the largest component jumps from logarithmic size to
//! a (1 - conj(alpha)/alpha) fraction as alpha crosses 1.
//!
//! Run with: cargo run --release --example giant_component

use pseudograph::construct::lps;
use pseudograph::mc::{dual_branching_root, giant_component_experiment};

fn main() {
    let g = lps(17, 13).unwrap().graph;
    println!("host: expander on {} vertices, degree {:?}", g.n(), g.regular_degree());

    let grid: Vec<f64> = vec![0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0, 2.5, 3.0];
    let points = giant_component_experiment(&g, &grid, 200, 2024).unwrap();
    println!(
        "{:>6} {:>16} {:>10} {:>14} {:>12}",
        "alpha", "mean fraction", "stderr", "second comp.", "predicted"
    );
    for pt in &points {
        println!(
            "{:>6.2} {:>16.4} {:>10.4} {:>14.1} {:>12}",
            pt.alpha,
            pt.mean_largest_fraction,
            pt.stderr,
            pt.mean_second_largest,
            pt.predicted_fraction.map(|p| format!("{p:.4}")).unwrap_or("-".into())
        );
    }

    let root = dual_branching_root(2.0).unwrap();
    println!(
        "conjugate root at alpha = 2: {root:.10} (residual {:.2e})",
        (root * (-root).exp() - 2.0 * (-2.0f64).exp()).abs()
    );
}
