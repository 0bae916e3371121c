//! Verify the edge-distribution bound |e(U,W) - d|U||W|/n| <= lambda *
//! sqrt(|U||W|(1-|U|/n)(1-|W|/n)) over every subset pair of small regular
//! graphs, and sample it on larger ones.
//!
//! Run with: cargo run --release --example mixing_bound

use pseudograph::audit::{audit_mixing, MixingMode};
use pseudograph::construct;
use pseudograph::graph::Graph;

fn main() {
    println!("exhaustive over all 4^n subset pairs:");
    for (name, g) in [
        ("cycle(10)", Graph::cycle(10)),
        ("petersen", Graph::petersen()),
        ("k(6,6)", Graph::complete_bipartite(6, 6)),
        ("random 3-regular n=12", construct::random_regular(12, 3, 7).unwrap().graph),
    ] {
        let f = audit_mixing(&g, MixingMode::Exhaustive, 1e-6);
        println!("  {name}: {:?}  worst deviation-bound gap {:.3e}", f.verdict, f.lhs);
        if let Some(d) = &f.detail {
            println!("    {d}");
        }
    }

    println!("sampled (100k pairs) plus all |U| <= 3 exactly:");
    let p13 = construct::paley(13).unwrap().graph;
    let f = audit_mixing(&p13, MixingMode::Sampled { budget: 100_000, seed: 5 }, 1e-6);
    println!("  paley(13): {:?}", f.verdict);
    if let Some(d) = &f.detail {
        println!("    {d}");
    }
}
