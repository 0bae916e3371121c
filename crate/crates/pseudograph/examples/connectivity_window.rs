//! Sharpness of the connectivity threshold in random subgraphs: the window
//! between 25% and 75% connectivity frequency narrows relative to its
//! location for well-connected hosts.
//!
//! Run with: cargo run --release --example connectivity_window

use pseudograph::construct::lps;
use pseudograph::graph::Graph;
use pseudograph::mc::connectivity_window_experiment;

fn main() {
    // classical benchmark: complete graph, transition near ln(n)/n
    let kn = Graph::complete(200);
    let grid: Vec<f64> = (1..=14).map(|i| 0.004 * i as f64).collect();
    let win = connectivity_window_experiment(&kn, &grid, 100, 7).unwrap();
    println!("complete(200): transition predicted near ln(n)/n = {:.4}", (200f64).ln() / 200.0);
    println!(
        "  p(25%) = {:.4}, p(75%) = {:.4}, ratio = {:.4}",
        win.p_quarter, win.p_three_quarters, win.window_ratio
    );

    let g = lps(17, 13).unwrap().graph;
    let grid: Vec<f64> = (1..=16).map(|i| 0.04 * i as f64).collect();
    let win = connectivity_window_experiment(&g, &grid, 100, 11).unwrap();
    println!("expander lps(17,13):");
    println!(
        "  p(25%) = {:.4}, p(75%) = {:.4}, ratio = {:.4}",
        win.p_quarter, win.p_three_quarters, win.window_ratio
    );
    for pt in &win.curve.points {
        println!("    p = {:.3}  connected {:>5.1}%", pt.x, 100.0 * pt.mean);
    }
}
