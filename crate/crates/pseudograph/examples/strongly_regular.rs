//! Detect strong regularity from codegrees, evaluate the closed-form
//! eigenvalues and multiplicities, and cross-check against the dense solver.
//!
//! Run with: cargo run --release --example strongly_regular

use pseudograph::construct;
use pseudograph::graph::Graph;
use pseudograph::spectral::{full_spectrum, srg_detect, srg_spectrum};

fn main() {
    let graphs: Vec<(&str, Graph)> = vec![
        ("pentagon", Graph::cycle(5)),
        ("petersen", Graph::petersen()),
        ("paley(13)", construct::paley(13).unwrap().graph),
        ("paley(25)", construct::paley(25).unwrap().graph),
        ("inner_product(5)", construct::inner_product_graph(5).unwrap().graph),
        ("dgt(5,3)", construct::dgt_graph(5, 3).unwrap().graph),
        ("path(3)", Graph::path(3)),
    ];
    for (name, g) in graphs {
        match srg_detect(&g) {
            Some(p) => {
                let eig = srg_spectrum(&p).unwrap();
                let spec = full_spectrum(&g).unwrap();
                let groups = spec.multiplicities(1e-6);
                println!(
                    "{name}: srg({}, {}, {}, {})  eigenvalues {:.6} (x{}), {:.6} (x{})",
                    p.n, p.d, p.eta, p.mu, eig.lambda_2, eig.mult_2, eig.lambda_3, eig.mult_3
                );
                println!(
                    "  dense solver groups: {:?}",
                    groups.iter().map(|(v, m)| (format!("{v:.6}"), *m)).collect::<Vec<_>>()
                );
            }
            None => println!("{name}: not strongly regular"),
        }
    }
}
