//! Largest clique-free subgraphs: the local-search partition guarantees a
//! (t-2)/(t-1) fraction of the edges, and the exact branch-and-bound oracle
//! pins the true optimum at desk scale.
//!
//! Run with: cargo run --release --example turan_subgraphs

use pseudograph::construct;
use pseudograph::graph::Graph;
use pseudograph::oracle::{cross_edges, greedy_turan_partition, turan_number, DEFAULT_NODE_BUDGET};

fn main() {
    let cases: Vec<(&str, Graph, usize)> = vec![
        ("complete(5), t=3", Graph::complete(5), 3),
        ("complete(6), t=4", Graph::complete(6), 4),
        ("petersen, t=3", Graph::petersen(), 3),
        ("paley(13), t=3", construct::paley(13).unwrap().graph, 3),
        ("k(3,4), t=3", Graph::complete_bipartite(3, 4), 3),
    ];
    for (name, g, t) in cases {
        let m = g.m() as f64;
        let assign = greedy_turan_partition(&g, t - 1);
        let cross = cross_edges(&g, &assign);
        let guarantee = (t as f64 - 2.0) / (t as f64 - 1.0) * m;
        let run = turan_number(&g, t, DEFAULT_NODE_BUDGET);
        let bound = run.outcome.exact().unwrap();
        println!(
            "{name}: m = {m}, partition keeps {cross} cross edges (guarantee {guarantee:.1}), exact optimum {:?}",
            bound.exact().map(|v| v.to_string()).unwrap_or(format!("[{}, {}]", bound.lower, bound.upper))
        );
    }
}
