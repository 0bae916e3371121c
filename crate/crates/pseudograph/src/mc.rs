//! Monte Carlo experiments on random subgraphs of a host graph: the phase
//! transition of the largest component, the sharpness of the connectivity
//! threshold, random minimum spanning tree weights, minimum-degree
//! thresholds, and exact-count sandwiches for spanning trees, perfect
//! matchings and Hamilton cycles.
//!
//! Determinism contract: every experiment takes a master seed; the seed for
//! grid point i, trial j is derive_seed(derive_seed(master, i), j). Results
//! are therefore independent of execution order and can be reproduced from
//! the recorded master seed alone.

use crate::audit::{round_sig, Finding, Verdict};
use crate::graph::Graph;
use crate::oracle;
use crate::rng::{derive_seed, SplitMix64};
use num_bigint::BigUint;
use serde::Serialize;
use std::fmt;

pub const SEED_RULE: &str = "splitmix64-nested-v1";

#[derive(Debug, Clone, PartialEq)]
pub enum McError {
    BadParameter(String),
    Disconnected,
    WindowNotBracketed { low: f64, high: f64 },
}

impl fmt::Display for McError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McError::BadParameter(msg) => write!(f, "{msg}"),
            McError::Disconnected => write!(f, "experiment requires a connected host graph"),
            McError::WindowNotBracketed { low, high } => {
                write!(f, "grid does not bracket the transition (frequencies {low}..{high})")
            }
        }
    }
}

impl std::error::Error for McError {}

/// Mean, spread and provenance of one Monte Carlo statistic.
#[derive(Debug, Clone, Serialize)]
pub struct McEstimate {
    pub statistic: String,
    pub trials: usize,
    pub mean: f64,
    pub stddev: f64,
    pub stderr: f64,
    pub master_seed: u64,
    pub seed_rule: &'static str,
}

impl McEstimate {
    fn from_samples(statistic: &str, samples: &[f64], master_seed: u64) -> McEstimate {
        let t = samples.len();
        let mean = samples.iter().sum::<f64>() / t as f64;
        let var = if t > 1 {
            samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (t as f64 - 1.0)
        } else {
            0.0
        };
        let stddev = var.sqrt();
        McEstimate {
            statistic: statistic.to_string(),
            trials: t,
            mean: round_sig(mean),
            stddev: round_sig(stddev),
            stderr: round_sig(stddev / (t as f64).sqrt()),
            master_seed,
            seed_rule: SEED_RULE,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CurvePoint {
    pub x: f64,
    pub mean: f64,
    pub stderr: f64,
    pub trials: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct PhaseCurve {
    pub statistic: String,
    pub master_seed: u64,
    pub seed_rule: &'static str,
    pub points: Vec<CurvePoint>,
}

/// Random subgraph: every edge of the host kept independently with
/// probability p, in canonical edge order, deterministically per seed.
pub fn sample_subgraph(g: &Graph, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p));
    let mut rng = SplitMix64::new(seed);
    let kept: Vec<(usize, usize)> = g
        .edge_list()
        .into_iter()
        .filter(|_| rng.bernoulli(p))
        .collect();
    Graph::from_edge_list(g.n(), &kept).unwrap()
}

/// Union-find over the kept edges; returns (largest component size, second
/// largest, connected?). Avoids materializing a graph per trial.
fn sampled_component_stats(g: &Graph, p: f64, seed: u64) -> (usize, usize, bool) {
    let n = g.n();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    let mut size = vec![1u32; n];
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let mut rng = SplitMix64::new(seed);
    for u in 0..n {
        for &w in g.neighbors(u) {
            let w = w as usize;
            if u < w && rng.bernoulli(p) {
                let (ru, rw) = (find(&mut parent, u as u32), find(&mut parent, w as u32));
                if ru != rw {
                    let (big, small) = if size[ru as usize] >= size[rw as usize] { (ru, rw) } else { (rw, ru) };
                    parent[small as usize] = big;
                    size[big as usize] += size[small as usize];
                }
            }
        }
    }
    let mut first = 0usize;
    let mut second = 0usize;
    for v in 0..n as u32 {
        if find(&mut parent, v) == v {
            let s = size[v as usize] as usize;
            if s > first {
                second = first;
                first = s;
            } else if s > second {
                second = s;
            }
        }
    }
    (first, second, first == n)
}

/// The conjugate root of x e^{-x} = a e^{-a} in (0, 1), for a > 1, by
/// bisection to absolute residual 1e-12.
pub fn dual_branching_root(a: f64) -> Result<f64, McError> {
    if !(a > 1.0) {
        return Err(McError::BadParameter(format!("need a > 1, got {a}")));
    }
    let target = a * (-a).exp();
    let f = |x: f64| x * (-x).exp() - target;
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    // f is increasing on (0,1); f(0) < 0 < f(1) for a > 1
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    let root = 0.5 * (lo + hi);
    debug_assert!((root * (-root).exp() - target).abs() <= 1e-12);
    Ok(root)
}

#[derive(Debug, Clone, Serialize)]
pub struct GiantComponentPoint {
    /// Mean edges per vertex in the sampled subgraph: p = alpha / d.
    pub alpha: f64,
    pub mean_largest_fraction: f64,
    pub stderr: f64,
    pub mean_second_largest: f64,
    /// 1 - conjugate(alpha)/alpha, defined for alpha > 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_fraction: Option<f64>,
    pub trials: usize,
}

/// Phase-transition experiment: for each alpha on the grid, sample the
/// edge-probability alpha/d subgraph and record largest-component fractions
/// against the branching-process prediction.
pub fn giant_component_experiment(
    g: &Graph,
    alpha_grid: &[f64],
    trials: usize,
    master_seed: u64,
) -> Result<Vec<GiantComponentPoint>, McError> {
    let d = g
        .regular_degree()
        .ok_or_else(|| McError::BadParameter("host graph must be regular".into()))? as f64;
    let n = g.n() as f64;
    let mut out = Vec::with_capacity(alpha_grid.len());
    for (pi, &alpha) in alpha_grid.iter().enumerate() {
        let p = (alpha / d).clamp(0.0, 1.0);
        let point_seed = derive_seed(master_seed, pi as u64);
        let mut fractions = Vec::with_capacity(trials);
        let mut seconds = Vec::with_capacity(trials);
        for t in 0..trials {
            let (first, second, _) = sampled_component_stats(g, p, derive_seed(point_seed, t as u64));
            fractions.push(first as f64 / n);
            seconds.push(second as f64);
        }
        let est = McEstimate::from_samples("largest-component-fraction", &fractions, master_seed);
        let predicted = if alpha > 1.0 {
            Some(round_sig(1.0 - dual_branching_root(alpha)? / alpha))
        } else {
            None
        };
        out.push(GiantComponentPoint {
            alpha,
            mean_largest_fraction: est.mean,
            stderr: est.stderr,
            mean_second_largest: round_sig(seconds.iter().sum::<f64>() / trials as f64),
            predicted_fraction: predicted,
            trials,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConnectivityWindow {
    pub curve: PhaseCurve,
    /// Edge probability where the (monotonized) connectivity frequency
    /// crosses 1/4 and 3/4.
    pub p_quarter: f64,
    pub p_three_quarters: f64,
    /// p_quarter / p_three_quarters; approaches 1 for sharp thresholds.
    pub window_ratio: f64,
}

/// Estimates the connectivity threshold window of random subgraphs by
/// monotone interpolation of the connectivity frequency over a p-grid.
pub fn connectivity_window_experiment(
    g: &Graph,
    p_grid: &[f64],
    trials: usize,
    master_seed: u64,
) -> Result<ConnectivityWindow, McError> {
    if !g.is_connected() {
        return Err(McError::Disconnected);
    }
    if p_grid.len() < 2 || p_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(McError::BadParameter("p grid must be strictly increasing".into()));
    }
    let mut points = Vec::with_capacity(p_grid.len());
    let mut freqs = Vec::with_capacity(p_grid.len());
    for (pi, &p) in p_grid.iter().enumerate() {
        let point_seed = derive_seed(master_seed, pi as u64);
        let mut connected = 0usize;
        for t in 0..trials {
            let (_, _, conn) = sampled_component_stats(g, p, derive_seed(point_seed, t as u64));
            if conn {
                connected += 1;
            }
        }
        let freq = connected as f64 / trials as f64;
        let stderr = (freq * (1.0 - freq) / trials as f64).sqrt();
        points.push(CurvePoint { x: p, mean: round_sig(freq), stderr: round_sig(stderr), trials });
        freqs.push(freq);
    }
    // running maximum tames sampling noise; the true curve is monotone
    let mut monotone = freqs.clone();
    for i in 1..monotone.len() {
        monotone[i] = monotone[i].max(monotone[i - 1]);
    }
    let lo = monotone[0];
    let hi = *monotone.last().unwrap();
    if lo > 0.25 || hi < 0.75 {
        return Err(McError::WindowNotBracketed { low: lo, high: hi });
    }
    let crossing = |level: f64| -> f64 {
        for i in 1..monotone.len() {
            if monotone[i] >= level && monotone[i - 1] < level {
                let (x0, x1) = (p_grid[i - 1], p_grid[i]);
                let (y0, y1) = (monotone[i - 1], monotone[i]);
                return x0 + (level - y0) / (y1 - y0) * (x1 - x0);
            }
        }
        if monotone[0] >= level {
            p_grid[0]
        } else {
            *p_grid.last().unwrap()
        }
    };
    let p_quarter = crossing(0.25);
    let p_three_quarters = crossing(0.75);
    Ok(ConnectivityWindow {
        curve: PhaseCurve {
            statistic: "connectivity-frequency".into(),
            master_seed,
            seed_rule: SEED_RULE,
            points,
        },
        p_quarter: round_sig(p_quarter),
        p_three_quarters: round_sig(p_three_quarters),
        window_ratio: round_sig(p_quarter / p_three_quarters),
    })
}

/// Random minimum spanning tree weight: independent uniform(0,1) edge
/// lengths per trial, exact tree by sorted-edge growth (Kruskal). The
/// benchmark value is (n/d) zeta(3).
pub fn mst_experiment(g: &Graph, trials: usize, master_seed: u64) -> Result<(McEstimate, f64), McError> {
    if !g.is_connected() {
        return Err(McError::Disconnected);
    }
    let edges = g.edge_list();
    let non_loop: Vec<(usize, usize)> = edges.into_iter().filter(|&(u, v)| u != v).collect();
    let mut samples = Vec::with_capacity(trials);
    for t in 0..trials {
        let mut rng = SplitMix64::new(derive_seed(master_seed, t as u64));
        let mut weighted: Vec<(f64, usize, usize)> = non_loop
            .iter()
            .map(|&(u, v)| (rng.next_f64(), u, v))
            .collect();
        weighted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        samples.push(mst_weight(g.n(), &weighted));
    }
    let est = McEstimate::from_samples("mst-weight", &samples, master_seed);
    let d = 2.0 * non_loop.len() as f64 / g.n() as f64;
    let zeta3 = 1.202_056_903_159_594_3;
    let prediction = g.n() as f64 / d * zeta3;
    Ok((est, round_sig(prediction)))
}

fn mst_weight(n: usize, sorted_edges: &[(f64, usize, usize)]) -> f64 {
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let mut weight = 0.0;
    let mut joined = 0usize;
    for &(w, u, v) in sorted_edges {
        let (ru, rv) = (find(&mut parent, u as u32), find(&mut parent, v as u32));
        if ru != rv {
            parent[ru as usize] = rv;
            weight += w;
            joined += 1;
            if joined == n - 1 {
                break;
            }
        }
    }
    weight
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeThresholdPoint {
    pub offset: f64,
    pub p: f64,
    pub clipped: bool,
    /// Frequency of minimum degree >= 2 in the sampled subgraph.
    pub min_degree_two_frequency: f64,
    pub stderr: f64,
    /// Frequency of an actual spanning cycle, confirmed by search; only
    /// measured on hosts small enough for the exact oracle.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamiltonian_frequency: Option<f64>,
    pub trials: usize,
}

/// Near p = (log n + log log n + c)/d the obstacle to a spanning cycle is a
/// vertex of degree at most one; this experiment estimates how often that
/// obstacle is absent across offsets c.
pub fn degree_threshold_experiment(
    g: &Graph,
    offsets: &[f64],
    trials: usize,
    master_seed: u64,
) -> Result<Vec<DegreeThresholdPoint>, McError> {
    let d = g
        .regular_degree()
        .ok_or_else(|| McError::BadParameter("host graph must be regular".into()))? as f64;
    let n = g.n() as f64;
    let base = n.ln() + n.ln().ln();
    let mut out = Vec::with_capacity(offsets.len());
    for (pi, &c) in offsets.iter().enumerate() {
        let raw = (base + c) / d;
        let p = raw.clamp(0.0, 1.0);
        let clipped = raw > 1.0 || raw < 0.0;
        let point_seed = derive_seed(master_seed, pi as u64);
        let confirm = g.n() <= 40;
        let mut good = 0usize;
        let mut hamiltonian = 0usize;
        let mut degree = vec![0u32; g.n()];
        for t in 0..trials {
            let trial_seed = derive_seed(point_seed, t as u64);
            if confirm {
                // materialize the subgraph so the degree statistic and the
                // search see the same sample
                let sub = sample_subgraph(g, p, trial_seed);
                if (0..sub.n()).all(|v| sub.degree(v) >= 2) {
                    good += 1;
                }
                let run = oracle::hamilton_search(&sub, 2_000_000);
                if matches!(run.outcome, crate::oracle::OracleOutcome::Exact(crate::oracle::HamiltonResult::Found(_))) {
                    hamiltonian += 1;
                }
            } else {
                let mut rng = SplitMix64::new(trial_seed);
                degree.iter_mut().for_each(|x| *x = 0);
                for u in 0..g.n() {
                    for &w in g.neighbors(u) {
                        let w = w as usize;
                        if u < w && rng.bernoulli(p) {
                            degree[u] += 1;
                            degree[w] += 1;
                        }
                    }
                }
                if degree.iter().all(|&x| x >= 2) {
                    good += 1;
                }
            }
        }
        let freq = good as f64 / trials as f64;
        out.push(DegreeThresholdPoint {
            offset: c,
            p: round_sig(p),
            clipped,
            min_degree_two_frequency: round_sig(freq),
            stderr: round_sig((freq * (1.0 - freq) / trials as f64).sqrt()),
            hamiltonian_frequency: confirm.then(|| round_sig(hamiltonian as f64 / trials as f64)),
            trials,
        });
    }
    Ok(out)
}

/// Natural log of a large positive integer via its decimal representation.
pub fn ln_big(x: &BigUint) -> f64 {
    let s = x.to_string();
    if s == "0" {
        return f64::NEG_INFINITY;
    }
    let lead: f64 = s[..s.len().min(17)].parse().unwrap();
    let rest = s.len().saturating_sub(17) as f64;
    lead.ln() + rest * 10f64.ln()
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Exact-count sandwiches: for a nearly regular graph with uniform edge
/// distribution at density p (tolerance eps), the counts of spanning trees,
/// perfect matchings and Hamilton cycles must land between the
/// (p -+ 2 eps)-scaled benchmark counts. The uniformity hypothesis is
/// checked exhaustively at small order; when it fails the findings are
/// reported as hypothesis-not-met, not as failures.
pub fn enumeration_bounds_check(g: &Graph, eps: f64) -> Result<Vec<Finding>, McError> {
    let n = g.n();
    let p = g.density();
    if eps <= 0.0 || 2.0 * eps >= p {
        return Err(McError::BadParameter(format!(
            "need 0 < eps < p/2 = {:.4}, got {eps}",
            p / 2.0
        )));
    }
    let hypothesis_met = super_regularity_hypothesis(g, p, eps);
    let nf = n as f64;
    let mut out = Vec::new();

    let mark = |mut f: Finding| -> Finding {
        if !hypothesis_met {
            f.verdict = Verdict::HypothesisNotMet;
            f.detail = Some(format!(
                "{}; uniformity hypothesis not met at eps = {eps}",
                f.detail.unwrap_or_default()
            ));
        }
        f
    };

    // spanning trees vs (p +- 2 eps)^(n-1) n^(n-2)
    if g.is_connected() {
        let t = oracle::count_spanning_trees(g);
        let ln_t = ln_big(&t);
        let lo = (nf - 1.0) * (p - 2.0 * eps).ln() + (nf - 2.0) * nf.ln();
        let hi = (nf - 1.0) * (p + 2.0 * eps).ln() + (nf - 2.0) * nf.ln();
        out.push(mark(sandwich_finding("spanning-tree-count-sandwich", lo, ln_t, hi)));
    }

    if n <= 16 {
        if n % 2 == 0 {
            let m_count = oracle::count_perfect_matchings(g);
            let ln_m = if m_count == 0 { f64::NEG_INFINITY } else { (m_count as f64).ln() };
            let nu = nf / 2.0;
            let ln_bench = ln_factorial(n) - ln_factorial(n / 2) - nu * 2f64.ln();
            let lo = nu * (p - 2.0 * eps).ln() + ln_bench;
            let hi = nu * (p + 2.0 * eps).ln() + ln_bench;
            out.push(mark(sandwich_finding("matching-count-sandwich", lo, ln_m, hi)));
        }
        let h_count = oracle::hamilton_count(g);
        let ln_h = if h_count == 0 { f64::NEG_INFINITY } else { (h_count as f64).ln() };
        let lo = nf * (p - 2.0 * eps).ln() + ln_factorial(n);
        let hi = nf * (p + 2.0 * eps).ln() + ln_factorial(n);
        out.push(mark(sandwich_finding("hamilton-count-sandwich", lo, ln_h, hi)));

        // asymptotic floor (d / log n)^n on the Hamilton count for sparse
        // hosts with a strong gap; at desk scale the hidden constant
        // dominates, so this is a margin, never a verdict
        if let Some(d) = g.regular_degree() {
            let d = d as f64;
            if d > nf.ln() && h_count > 0 {
                let floor = nf * (d / nf.ln()).ln();
                out.push(Finding {
                    id: "hamilton-count-floor-margin".into(),
                    lhs: round_sig(ln_h),
                    rhs: round_sig(floor),
                    verdict: Verdict::Advisory,
                    slack: round_sig(ln_h - floor),
                    method: crate::audit::Method::Advisory,
                    detail: Some("log count vs n log(d / log n)".into()),
                    seed: None,
                });
            }
        }
    }
    Ok(out)
}

fn sandwich_finding(id: &str, lo: f64, value: f64, hi: f64) -> Finding {
    let ok = lo <= value + 1e-9 && value <= hi + 1e-9;
    Finding {
        id: id.into(),
        lhs: round_sig(value),
        rhs: round_sig(hi),
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        slack: round_sig(hi - value),
        method: crate::audit::Method::Oracle,
        detail: Some(format!("log-scale sandwich [{:.6}, {:.6}]", round_sig(lo), round_sig(hi))),
        seed: None,
    }
}

/// Degrees within (p -+ eps) n and, for every disjoint pair of sets of size
/// at least eps n, pair density within eps of p. Exhaustive for n <= 14.
fn super_regularity_hypothesis(g: &Graph, p: f64, eps: f64) -> bool {
    let n = g.n();
    let nf = n as f64;
    for v in 0..n {
        let d = g.degree(v) as f64;
        if d < (p - eps) * nf || d > (p + eps) * nf {
            return false;
        }
    }
    if n > 14 {
        return true; // degree check only above the exhaustive cap
    }
    let min_size = (eps * nf).ceil().max(1.0) as usize;
    // ternary masks: each vertex in U, in W, or in neither
    let mut assignment = vec![0u8; n];
    loop {
        let us: Vec<usize> = (0..n).filter(|&i| assignment[i] == 1).collect();
        let ws: Vec<usize> = (0..n).filter(|&i| assignment[i] == 2).collect();
        if us.len() >= min_size && ws.len() >= min_size {
            let e = g.edges_between(&us, &ws) as f64;
            let density = e / (us.len() as f64 * ws.len() as f64);
            if (density - p).abs() > eps + 1e-12 {
                return false;
            }
        }
        // odometer base 3
        let mut pos = 0;
        while pos < n {
            assignment[pos] += 1;
            if assignment[pos] < 3 {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    true
}
