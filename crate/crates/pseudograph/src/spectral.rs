//! Spectra of adjacency matrices: a deterministic dense symmetric
//! eigensolver, iterative extremal eigenvalues for graphs above the dense
//! cap, closed-form strongly-regular spectra, exact closed-walk counts, and
//! the finite-size deviation scores for the classical pseudo-randomness
//! properties (closed-walk ratios, eigenvalue gaps, discrepancy, codegree
//! sums).
//!
//! The dense path reduces to tridiagonal form by Householder reflections and
//! diagonalizes with implicitly shifted QL iterations, accumulating
//! eigenvectors; the iteration order is fixed, so results are reproducible
//! for a given floating-point profile.

use crate::graph::Graph;
use crate::rng::SplitMix64;
use num_bigint::BigUint;
use std::fmt;

pub const DEFAULT_DENSE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    AboveDenseCap { n: usize, cap: usize },
    NoConvergence { iterations: usize },
    InfeasibleSrg(String),
    WalkLengthTooLarge,
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::AboveDenseCap { n, cap } => write!(
                f,
                "n = {n} exceeds the dense solver cap {cap}; use extremal_lambda instead"
            ),
            SpectralError::NoConvergence { iterations } => {
                write!(f, "iteration did not converge within {iterations} steps")
            }
            SpectralError::InfeasibleSrg(msg) => write!(f, "infeasible strongly regular parameters: {msg}"),
            SpectralError::WalkLengthTooLarge => write!(f, "walk length too large for exact counting"),
        }
    }
}

impl std::error::Error for SpectralError {}

/// Parameters (n, d, eta, mu) of a strongly regular graph: d-regular on n
/// vertices, adjacent pairs have eta common neighbors, non-adjacent pairs mu.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SrgParams {
    pub n: usize,
    pub d: usize,
    pub eta: usize,
    pub mu: usize,
}

impl SrgParams {
    /// The counting identity d(d - eta - 1) = (n - d - 1) mu every strongly
    /// regular graph satisfies.
    pub fn is_feasible(&self) -> bool {
        self.eta <= self.d
            && self.mu <= self.d
            && self.d < self.n
            && self.d as i128 * (self.d as i128 - self.eta as i128 - 1)
                == (self.n as i128 - self.d as i128 - 1) * self.mu as i128
    }
}

/// Sorted spectrum of a graph with per-eigenvalue residuals.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Eigenvalues sorted descending by value.
    pub eigenvalues: Vec<f64>,
    /// `||A v - lambda v||` for each eigenpair, in the same order.
    pub residuals: Vec<f64>,
}

impl Spectrum {
    /// Largest eigenvalue.
    pub fn lambda_1(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// max over i >= 2 of |lambda_i|, the nontrivial extreme. Zero for n = 1.
    pub fn lambda(&self) -> f64 {
        self.eigenvalues
            .iter()
            .skip(1)
            .fold(0.0f64, |acc, &x| acc.max(x.abs()))
    }

    pub fn lambda_min(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    pub fn spectral_gap(&self) -> f64 {
        self.lambda_1() - self.lambda()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0f64, |a, &b| a.max(b))
    }

    /// Eigenvalues grouped into multiplicity classes: values closer than
    /// `rel_tol * max(1, |value|)` are merged.
    pub fn multiplicities(&self, rel_tol: f64) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &v in &self.eigenvalues {
            match out.last_mut() {
                Some((rep, count)) if (*rep - v).abs() <= rel_tol * rep.abs().max(1.0) => {
                    // running mean keeps the representative centered
                    *rep = (*rep * *count as f64 + v) / (*count as f64 + 1.0);
                    *count += 1;
                }
                _ => out.push((v, 1)),
            }
        }
        out
    }
}

/// All n eigenvalues of the adjacency matrix (loops contribute 1 to the
/// diagonal), with residual verification.
pub fn full_spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    full_spectrum_capped(g, DEFAULT_DENSE_CAP)
}

pub fn full_spectrum_capped(g: &Graph, cap: usize) -> Result<Spectrum, SpectralError> {
    let n = g.n();
    if n > cap {
        return Err(SpectralError::AboveDenseCap { n, cap });
    }
    if n == 0 {
        return Ok(Spectrum { eigenvalues: vec![], residuals: vec![] });
    }
    let a = adjacency_matrix(g);
    let (mut values, vectors) = symmetric_eigen(n, &a);
    // residuals from the original matrix, then sort descending
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap());
    let mut residuals = vec![0.0; n];
    let mut av = vec![0.0; n];
    for (slot, &col) in order.iter().enumerate() {
        for (r, item) in av.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (c, av_rc) in a[r * n..(r + 1) * n].iter().enumerate() {
                acc += av_rc * vectors[c * n + col];
            }
            *item = acc;
        }
        let lam = values[col];
        let res: f64 = av
            .iter()
            .enumerate()
            .map(|(r, &x)| {
                let d = x - lam * vectors[r * n + col];
                d * d
            })
            .sum();
        residuals[slot] = res.sqrt();
    }
    values.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(Spectrum { eigenvalues: values, residuals })
}

fn adjacency_matrix(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut a = vec![0.0f64; n * n];
    for u in 0..n {
        for &w in g.neighbors(u) {
            a[u * n + w as usize] = 1.0;
        }
    }
    a
}

/// Householder reduction to tridiagonal form followed by implicit QL with
/// shifts; returns (eigenvalues ascending, eigenvectors column-major in a
/// row-major n*n buffer: vector i is column i).
fn symmetric_eigen(n: usize, a: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let mut v = a.to_vec();
    let mut d = vec![0.0f64; n];
    let mut e = vec![0.0f64; n];
    tridiagonalize(n, &mut v, &mut d, &mut e);
    ql_implicit(n, &mut v, &mut d, &mut e);
    (d, v)
}

fn tridiagonalize(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64]) {
    let idx = |r: usize, c: usize| r * n + c;
    for j in 0..n {
        d[j] = v[idx(n - 1, j)];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[idx(i - 1, j)];
                v[idx(i, j)] = 0.0;
                v[idx(j, i)] = 0.0;
            }
        } else {
            for item in d.iter_mut().take(i) {
                *item /= scale;
                h += *item * *item;
            }
            let f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }
            for j in 0..i {
                let f = d[j];
                v[idx(j, i)] = f;
                let mut g = e[j] + v[idx(j, j)] * f;
                for k in (j + 1)..i {
                    g += v[idx(k, j)] * d[k];
                    e[k] += v[idx(k, j)] * f;
                }
                e[j] = g;
            }
            let mut f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let f = d[j];
                let g = e[j];
                for k in j..i {
                    v[idx(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[idx(i - 1, j)];
                v[idx(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }
    // accumulate the Householder transformations
    for i in 0..n.saturating_sub(1) {
        v[idx(n - 1, i)] = v[idx(i, i)];
        v[idx(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[idx(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[idx(k, i + 1)] * v[idx(k, j)];
                }
                for k in 0..=i {
                    v[idx(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[idx(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[idx(n - 1, j)];
        v[idx(n - 1, j)] = 0.0;
    }
    v[idx(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

fn ql_implicit(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64]) {
    let idx = |r: usize, c: usize| r * n + c;
    for i in 1..n {
        e[i - 1] = e[i];
    }
    if n > 0 {
        e[n - 1] = 0.0;
    }
    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    let eps = 2.0f64.powi(-52);
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            loop {
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0f64;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0f64;
                let mut s2 = 0.0f64;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        h = v[idx(k, i + 1)];
                        v[idx(k, i + 1)] = s * v[idx(k, i)] + c * h;
                        v[idx(k, i)] = c * v[idx(k, i)] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    // selection sort ascending keeps eigenvector columns aligned
    for i in 0..n.saturating_sub(1) {
        let mut k = i;
        let mut p = d[i];
        for j in (i + 1)..n {
            if d[j] < p {
                k = j;
                p = d[j];
            }
        }
        if k != i {
            d.swap(i, k);
            for r in 0..n {
                v.swap(idx(r, i), idx(r, k));
            }
        }
    }
}

/// Extremal eigenvalues of a (possibly large, sparse) graph: the largest
/// eigenvalue and the largest nontrivial magnitude.
#[derive(Debug, Clone, Copy)]
pub struct ExtremalEigen {
    pub lambda_1: f64,
    /// max over i >= 2 of |lambda_i|.
    pub lambda: f64,
    pub iterations: usize,
    pub residual: f64,
}

const POWER_ITERATION_CAP: usize = 200_000;

/// Power iteration for the top eigenpair, then iteration with the squared
/// operator on the complement of the top eigenvector (re-orthogonalized each
/// step) for the nontrivial extreme.
pub fn extremal_lambda(g: &Graph, tol: f64) -> Result<ExtremalEigen, SpectralError> {
    assert!(tol > 0.0);
    let n = g.n();
    if n == 0 {
        return Ok(ExtremalEigen { lambda_1: 0.0, lambda: 0.0, iterations: 0, residual: 0.0 });
    }
    if n == 1 {
        let a00 = if g.has_loop_at(0) { 1.0 } else { 0.0 };
        return Ok(ExtremalEigen { lambda_1: a00, lambda: 0.0, iterations: 0, residual: 0.0 });
    }

    // top eigenpair, iterating on A + shift*I so the largest eigenvalue
    // strictly dominates in magnitude even for bipartite graphs
    let shift = (0..n).map(|v| g.degree(v)).max().unwrap_or(0) as f64 + 1.0;
    let mut v1 = deterministic_unit_vector(n, 0x5EED_0001);
    let mut tmp = vec![0.0; n];
    let mut lambda_1 = 0.0;
    let mut iters = 0;
    let mut resid1 = f64::INFINITY;
    while iters < POWER_ITERATION_CAP {
        matvec(g, &v1, &mut tmp);
        let rho: f64 = dot(&v1, &tmp);
        let res = residual_norm(&tmp, rho, &v1);
        lambda_1 = rho;
        resid1 = res;
        for (t, x) in tmp.iter_mut().zip(v1.iter()) {
            *t += shift * x;
        }
        let norm = dot(&tmp, &tmp).sqrt();
        if norm == 0.0 {
            lambda_1 = 0.0;
            resid1 = 0.0;
            break;
        }
        for (t, x) in tmp.iter().zip(v1.iter_mut()) {
            *x = t / norm;
        }
        iters += 1;
        if res <= tol * lambda_1.abs().max(1.0) {
            break;
        }
    }
    if resid1 > tol * lambda_1.abs().max(1.0) {
        return Err(SpectralError::NoConvergence { iterations: iters });
    }

    // nontrivial extreme via A^2 restricted to the orthogonal complement
    let mut w = deterministic_unit_vector(n, 0x5EED_0002);
    orthogonalize(&mut w, &v1);
    normalize(&mut w);
    let mut t1 = vec![0.0; n];
    let mut t2 = vec![0.0; n];
    let mut lambda_sq = 0.0;
    let mut resid2 = f64::INFINITY;
    while iters < POWER_ITERATION_CAP {
        matvec(g, &w, &mut t1);
        matvec(g, &t1, &mut t2);
        orthogonalize(&mut t2, &v1);
        let rho: f64 = dot(&w, &t2);
        let res = residual_norm(&t2, rho, &w);
        lambda_sq = rho;
        resid2 = res;
        let norm = dot(&t2, &t2).sqrt();
        if norm == 0.0 {
            lambda_sq = 0.0;
            resid2 = 0.0;
            break;
        }
        for (t, x) in t2.iter().zip(w.iter_mut()) {
            *x = t / norm;
        }
        iters += 1;
        if res <= tol * lambda_sq.abs().max(1.0) {
            break;
        }
    }
    if resid2 > tol * lambda_sq.abs().max(1.0) {
        return Err(SpectralError::NoConvergence { iterations: iters });
    }

    Ok(ExtremalEigen {
        lambda_1,
        lambda: lambda_sq.max(0.0).sqrt(),
        iterations: iters,
        residual: resid1.max(resid2),
    })
}

fn deterministic_unit_vector(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = SplitMix64::new(seed);
    let mut v: Vec<f64> = (0..n).map(|_| rng.next_f64() - 0.5).collect();
    normalize(&mut v);
    v
}

fn matvec(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (u, slot) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for &w in g.neighbors(u) {
            acc += x[w as usize];
        }
        *slot = acc;
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) {
    let norm = dot(v, v).sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

fn orthogonalize(v: &mut [f64], against: &[f64]) {
    let c = dot(v, against);
    for (x, y) in v.iter_mut().zip(against) {
        *x -= c * y;
    }
}

fn residual_norm(av: &[f64], rho: f64, v: &[f64]) -> f64 {
    av.iter()
        .zip(v)
        .map(|(&a, &x)| {
            let d = a - rho * x;
            d * d
        })
        .sum::<f64>()
        .sqrt()
}

/// Closed-form eigenvalues and multiplicities of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SrgEigen {
    pub lambda_2: f64,
    pub lambda_3: f64,
    pub mult_2: usize,
    pub mult_3: usize,
}

/// Restricted eigenvalues (eta - mu +- sqrt((eta - mu)^2 + 4(d - mu))) / 2
/// with multiplicities solving 1 + s2 + s3 = n and d + s2 l2 + s3 l3 = 0.
/// Non-integer multiplicities are an infeasibility, except the conference
/// case where both equal (n - 1)/2 exactly.
pub fn srg_spectrum(p: &SrgParams) -> Result<SrgEigen, SpectralError> {
    if !p.is_feasible() {
        return Err(SpectralError::InfeasibleSrg(format!(
            "identity d(d - eta - 1) = (n - d - 1) mu fails for ({}, {}, {}, {})",
            p.n, p.d, p.eta, p.mu
        )));
    }
    let (n, d, eta, mu) = (p.n as f64, p.d as f64, p.eta as f64, p.mu as f64);
    let disc = (eta - mu) * (eta - mu) + 4.0 * (d - mu);
    let root = disc.sqrt();
    if root == 0.0 {
        return Err(SpectralError::InfeasibleSrg("coincident restricted eigenvalues".into()));
    }
    let lambda_2 = 0.5 * (eta - mu + root);
    let lambda_3 = 0.5 * (eta - mu - root);
    let s2 = 0.5 * ((n - 1.0) + ((n - 1.0) * (mu - eta) - 2.0 * d) / root);
    let s3 = n - 1.0 - s2;
    let tol = 1e-6;
    if (s2 - s2.round()).abs() > tol || (s3 - s3.round()).abs() > tol || s2.round() < 0.0 || s3.round() < 0.0 {
        return Err(SpectralError::InfeasibleSrg(format!(
            "non-integer multiplicities s2 = {s2}, s3 = {s3}"
        )));
    }
    let eig = SrgEigen {
        lambda_2,
        lambda_3,
        mult_2: s2.round() as usize,
        mult_3: s3.round() as usize,
    };
    debug_assert!(eig.mult_2 + eig.mult_3 + 1 == p.n);
    debug_assert!((d + s2 * lambda_2 + s3 * lambda_3).abs() < 1e-6 * n);
    Ok(eig)
}

/// Detects strong regularity: a loopless regular graph where the codegree is
/// constant on adjacent pairs and constant on non-adjacent pairs. Complete
/// and empty graphs are degenerate (one of the two pair classes is empty)
/// and return None.
pub fn srg_detect(g: &Graph) -> Option<SrgParams> {
    if !g.is_loopless() || g.n() < 3 {
        return None;
    }
    let d = g.regular_degree()?;
    let n = g.n();
    let mut eta: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for x in 0..n {
        for y in (x + 1)..n {
            let c = g.codegree(x, y);
            let slot = if g.has_edge(x, y) { &mut eta } else { &mut mu };
            match slot {
                None => *slot = Some(c),
                Some(v) if *v == c => {}
                Some(_) => return None,
            }
        }
    }
    Some(SrgParams { n, d, eta: eta?, mu: mu? })
}

/// Exact number of closed walks of length t: the trace of the t-th power of
/// the adjacency matrix, by per-vertex walk counting.
pub fn circuit_count(g: &Graph, t: usize) -> Result<BigUint, SpectralError> {
    assert!(t >= 1);
    let n = g.n();
    if n == 0 {
        return Ok(BigUint::from(0u32));
    }
    // fast path: trace of A^3 on loopless graphs is a codegree sum over edges
    if t == 3 && g.is_loopless() {
        let mut total: u128 = 0;
        for u in 0..n {
            for &w in g.neighbors(u) {
                total += g.codegree(u, w as usize) as u128;
            }
        }
        return Ok(BigUint::from(total));
    }
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0).max(1);
    let bits = (t as f64) * (max_deg as f64).log2().max(0.0) + (n as f64).log2() + 2.0;
    if bits < 120.0 {
        let mut total: u128 = 0;
        let mut cur = vec![0u128; n];
        let mut next = vec![0u128; n];
        for s in 0..n {
            cur.iter_mut().for_each(|x| *x = 0);
            cur[s] = 1;
            for _ in 0..t {
                for (y, slot) in next.iter_mut().enumerate() {
                    let mut acc = 0u128;
                    for &x in g.neighbors(y) {
                        acc += cur[x as usize];
                    }
                    *slot = acc;
                }
                std::mem::swap(&mut cur, &mut next);
            }
            total += cur[s];
        }
        Ok(BigUint::from(total))
    } else {
        // arbitrary-precision fallback for long walks
        let mut total = BigUint::from(0u32);
        let mut cur: Vec<BigUint> = vec![BigUint::from(0u32); n];
        let mut next: Vec<BigUint> = vec![BigUint::from(0u32); n];
        for s in 0..n {
            cur.iter_mut().for_each(|x| *x = BigUint::from(0u32));
            cur[s] = BigUint::from(1u32);
            for _ in 0..t {
                for (y, slot) in next.iter_mut().enumerate() {
                    let mut acc = BigUint::from(0u32);
                    for &x in g.neighbors(y) {
                        acc += &cur[x as usize];
                    }
                    *slot = acc;
                }
                std::mem::swap(&mut cur, &mut next);
            }
            total += &cur[s];
        }
        Ok(total)
    }
}

/// How the discrepancy score was obtained.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum DiscMethod {
    ExhaustiveSubsets,
    Sampled { budget: usize, seed: u64 },
}

/// Finite-size deviation scores for a target density p. Small values mean
/// the graph resembles a random graph of that density; the scores are
/// ordered so the classical implication chain (walk counts => eigenvalue
/// gap => discrepancy) can be eyeballed.
#[derive(Debug, Clone)]
pub struct PropertyScores {
    pub density: f64,
    pub walk_length: usize,
    /// Tr(A^t) / (np)^t.
    pub circuit_ratio: f64,
    /// lambda_1 / (np) - 1.
    pub eig_top_deviation: f64,
    /// max_{i >= 2} |lambda_i| / (np).
    pub eig_second_ratio: f64,
    /// max over subset pairs of |e(X,Y) - p |X||Y|| / (p n^2).
    pub disc_score: f64,
    pub disc_method: DiscMethod,
    /// max over ordered vertex pairs of walks of length t-1 from x to y,
    /// relative to n^(t-2) p^(t-1).
    pub walk_pair_ratio: f64,
    /// max degree relative to np.
    pub degree_ratio: f64,
    /// Sum over unordered pairs of |codeg - p^2 n|, normalized by n^3.
    pub codegree_score: f64,
    /// Sum over unordered pairs of |s(x,y) - (p^2 + (1-p)^2) n| / n^3.
    pub agreement_score: f64,
}

pub fn property_scores(
    g: &Graph,
    p: f64,
    t: usize,
    sample_budget: usize,
    seed: u64,
) -> Result<PropertyScores, SpectralError> {
    assert!(p > 0.0 && p < 1.0, "density must be in (0,1)");
    let n = g.n();
    let np = n as f64 * p;
    let spec = full_spectrum(g)?;
    let tr = circuit_count(g, t)?;
    let tr_f = biguint_to_f64(&tr);
    let circuit_ratio = tr_f / np.powi(t as i32);

    let (disc_score, disc_method) = if n <= 14 {
        (disc_exhaustive(g, p), DiscMethod::ExhaustiveSubsets)
    } else {
        (disc_sampled(g, p, sample_budget, seed), DiscMethod::Sampled { budget: sample_budget, seed })
    };

    // max pair walk count for walks of length t-1
    let walk_pair_max = max_pair_walks(g, t.saturating_sub(1));
    let walk_pair_ratio = if t >= 2 {
        walk_pair_max / ((n as f64).powi(t as i32 - 2) * p.powi(t as i32 - 1))
    } else {
        0.0
    };
    let degree_ratio = (0..n).map(|v| g.degree(v)).max().unwrap_or(0) as f64 / np;

    let cstats = g.codegree_stats(p, DEFAULT_DENSE_CAP).map_err(|_| SpectralError::AboveDenseCap {
        n,
        cap: DEFAULT_DENSE_CAP,
    })?;

    Ok(PropertyScores {
        density: p,
        walk_length: t,
        circuit_ratio,
        eig_top_deviation: spec.lambda_1() / np - 1.0,
        eig_second_ratio: spec.lambda() / np,
        disc_score,
        disc_method,
        walk_pair_ratio,
        degree_ratio,
        codegree_score: cstats.codegree_deviation_normalized,
        agreement_score: cstats.agreement_deviation_normalized,
    })
}

fn biguint_to_f64(x: &BigUint) -> f64 {
    x.to_string().parse::<f64>().unwrap_or(f64::INFINITY)
}

/// Exact maximum of |e(X,Y) - p |X||Y|| over all 4^n subset pairs, found by
/// scanning Y and optimizing X analytically: for fixed Y the deviation is a
/// sum of independent per-vertex terms, so the extreme X keeps exactly the
/// positive (or exactly the negative) terms.
fn disc_exhaustive(g: &Graph, p: f64) -> f64 {
    let n = g.n();
    debug_assert!(n <= 20);
    let rows: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut best = 0.0f64;
    for ymask in 0u32..(1u32 << n) {
        let ysize = ymask.count_ones() as f64;
        let mut pos = 0.0f64;
        let mut neg = 0.0f64;
        for row in rows.iter() {
            let t = (row & ymask).count_ones() as f64 - p * ysize;
            if t > 0.0 {
                pos += t;
            } else {
                neg -= t;
            }
        }
        best = best.max(pos).max(neg);
    }
    best / (p * (n * n) as f64)
}

fn disc_sampled(g: &Graph, p: f64, budget: usize, seed: u64) -> f64 {
    let n = g.n();
    let mut rng = SplitMix64::new(seed);
    let mut best = 0.0f64;
    for _ in 0..(2 * budget) {
        let xs: Vec<usize> = (0..n).filter(|_| rng.bernoulli(0.5)).collect();
        let ys: Vec<usize> = (0..n).filter(|_| rng.bernoulli(0.5)).collect();
        let e = g.edges_between(&xs, &ys) as f64;
        let dev = (e - p * xs.len() as f64 * ys.len() as f64).abs();
        best = best.max(dev);
    }
    best / (p * (n * n) as f64)
}

fn max_pair_walks(g: &Graph, len: usize) -> f64 {
    let n = g.n();
    if len == 0 || n == 0 {
        return 0.0;
    }
    let mut best = 0u128;
    let mut cur = vec![0u128; n];
    let mut next = vec![0u128; n];
    for s in 0..n {
        cur.iter_mut().for_each(|x| *x = 0);
        cur[s] = 1;
        for _ in 0..len {
            for (y, slot) in next.iter_mut().enumerate() {
                let mut acc = 0u128;
                for &x in g.neighbors(y) {
                    acc += cur[x as usize];
                }
                *slot = acc;
            }
            std::mem::swap(&mut cur, &mut next);
        }
        for (y, &c) in cur.iter().enumerate() {
            if y != s {
                best = best.max(c);
            }
        }
    }
    best as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} != {b} within {tol}");
    }

    #[test]
    fn k4_spectrum() {
        let s = full_spectrum(&Graph::complete(4)).unwrap();
        let expect = [3.0, -1.0, -1.0, -1.0];
        for (a, b) in s.eigenvalues.iter().zip(expect) {
            assert_close(*a, b, 1e-10);
        }
        assert!(s.max_residual() < 1e-10);
    }

    #[test]
    fn cycle_spectrum_closed_form() {
        // eigenvalues of C_n are 2 cos(2 pi j / n)
        for n in [5usize, 8, 12] {
            let s = full_spectrum(&Graph::cycle(n)).unwrap();
            let mut expect: Vec<f64> = (0..n)
                .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos())
                .collect();
            expect.sort_by(|a, b| b.partial_cmp(a).unwrap());
            for (a, b) in s.eigenvalues.iter().zip(expect) {
                assert_close(*a, b, 1e-9);
            }
        }
    }

    #[test]
    fn loop_contributes_to_diagonal() {
        let g = Graph::from_edge_list(1, &[(0, 0)]).unwrap();
        let s = full_spectrum(&g).unwrap();
        assert_close(s.eigenvalues[0], 1.0, 1e-12);
    }

    #[test]
    fn trace_identities() {
        for g in [
            Graph::complete(6),
            Graph::cycle(7),
            Graph::petersen(),
            Graph::complete_bipartite(3, 4),
            Graph::from_edge_list(4, &[(0, 0), (0, 1), (1, 2), (2, 3), (3, 3)]).unwrap(),
        ] {
            let s = full_spectrum(&g).unwrap();
            let sum: f64 = s.eigenvalues.iter().sum();
            let sum_sq: f64 = s.eigenvalues.iter().map(|l| l * l).sum();
            let trace = g.loop_count() as f64;
            let deg_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            assert_close(sum, trace, 1e-7 * g.n() as f64);
            // Tr(A^2) counts nonzero entries: twice the non-loop edges plus loops
            assert_close(sum_sq, deg_sum as f64, 1e-7 * g.n() as f64);
        }
    }

    #[test]
    fn power_iteration_matches_dense() {
        for g in [Graph::petersen(), Graph::cycle(9), Graph::complete_bipartite(3, 3)] {
            let s = full_spectrum(&g).unwrap();
            let e = extremal_lambda(&g, 1e-10).unwrap();
            assert_close(e.lambda_1, s.lambda_1(), 1e-6);
            assert_close(e.lambda, s.lambda(), 1e-6);
        }
    }

    #[test]
    fn bipartite_lambda_is_degree() {
        let g = Graph::complete_bipartite(4, 4);
        let e = extremal_lambda(&g, 1e-10).unwrap();
        assert_close(e.lambda_1, 4.0, 1e-8);
        assert_close(e.lambda, 4.0, 1e-8);
    }

    #[test]
    fn regular_lambda1_is_degree() {
        let e = extremal_lambda(&Graph::petersen(), 1e-10).unwrap();
        assert_close(e.lambda_1, 3.0, 1e-8);
    }

    #[test]
    fn srg_pentagon() {
        let p = SrgParams { n: 5, d: 2, eta: 0, mu: 1 };
        let e = srg_spectrum(&p).unwrap();
        assert_close(e.lambda_2, (-1.0 + 5.0f64.sqrt()) / 2.0, 1e-12);
        assert_close(e.lambda_3, (-1.0 - 5.0f64.sqrt()) / 2.0, 1e-12);
        assert_eq!((e.mult_2, e.mult_3), (2, 2));
    }

    #[test]
    fn srg_13_6_2_3() {
        let e = srg_spectrum(&SrgParams { n: 13, d: 6, eta: 2, mu: 3 }).unwrap();
        assert_close(e.lambda_2, (-1.0 + 13.0f64.sqrt()) / 2.0, 1e-12);
        assert_eq!((e.mult_2, e.mult_3), (6, 6));
    }

    #[test]
    fn srg_15_6_1_3() {
        let e = srg_spectrum(&SrgParams { n: 15, d: 6, eta: 1, mu: 3 }).unwrap();
        assert_close(e.lambda_2, 1.0, 1e-12);
        assert_close(e.lambda_3, -3.0, 1e-12);
        assert_eq!((e.mult_2, e.mult_3), (9, 5));
        // trace check: 6 + 9 * 1 + 5 * (-3) = 0
    }

    #[test]
    fn srg_infeasible_params_rejected() {
        assert!(srg_spectrum(&SrgParams { n: 10, d: 4, eta: 2, mu: 3 }).is_err());
    }

    #[test]
    fn srg_detect_known() {
        assert_eq!(
            srg_detect(&Graph::petersen()),
            Some(SrgParams { n: 10, d: 3, eta: 0, mu: 1 })
        );
        assert_eq!(srg_detect(&Graph::path(3)), None);
        assert_eq!(
            srg_detect(&Graph::cycle(5)),
            Some(SrgParams { n: 5, d: 2, eta: 0, mu: 1 })
        );
        // complete graphs are degenerate
        assert_eq!(srg_detect(&Graph::complete(5)), None);
    }

    #[test]
    fn srg_detect_and_spectrum_agree_with_dense() {
        let g = Graph::petersen();
        let params = srg_detect(&g).unwrap();
        let closed = srg_spectrum(&params).unwrap();
        let spec = full_spectrum(&g).unwrap();
        let groups = spec.multiplicities(1e-6);
        assert_eq!(groups.len(), 3);
        assert_close(groups[0].0, 3.0, 1e-8);
        assert_close(groups[1].0, closed.lambda_2, 1e-8);
        assert_eq!(groups[1].1, closed.mult_2);
        assert_close(groups[2].0, closed.lambda_3, 1e-8);
        assert_eq!(groups[2].1, closed.mult_3);
    }

    #[test]
    fn circuit_counts_small() {
        // d-regular loopless, t = 2: trace A^2 = n d
        let g = Graph::petersen();
        assert_eq!(circuit_count(&g, 2).unwrap(), BigUint::from(30u32));
        // K3 has 6 closed walks of length 3
        assert_eq!(circuit_count(&Graph::complete(3), 3).unwrap(), BigUint::from(6u32));
        // closed walks match the spectral moment
        let s = full_spectrum(&g).unwrap();
        for t in 1..=6 {
            let exact = biguint_to_f64(&circuit_count(&g, t).unwrap());
            let moment: f64 = s.eigenvalues.iter().map(|l| l.powi(t as i32)).sum();
            assert_close(exact, moment, 1e-6 * s.lambda_1().powi(t as i32));
        }
    }

    #[test]
    fn circuit_count_t3_paths_match_dp() {
        // the codegree fast path must agree with the generic walk DP
        let g = Graph::petersen();
        let mut total = 0u64;
        for u in 0..g.n() {
            for &w in g.neighbors(u) {
                total += g.codegree(u, w as usize) as u64;
            }
        }
        assert_eq!(circuit_count(&g, 3).unwrap(), BigUint::from(total));
        assert_eq!(total, 0); // Petersen is triangle-free
    }

    #[test]
    fn regular_lambda_lower_bound() {
        // for d-regular graphs, nd = sum of squared eigenvalues forces
        // lambda >= sqrt(d (n - d) / (n - 1))
        for g in [Graph::petersen(), Graph::cycle(8), Graph::complete(6)] {
            let d = g.regular_degree().unwrap() as f64;
            let n = g.n() as f64;
            let s = full_spectrum(&g).unwrap();
            let bound = (d * (n - d) / (n - 1.0)).sqrt();
            assert!(s.lambda() >= bound - 1e-8, "lower bound violated");
        }
    }

    #[test]
    fn disc_score_separates_uniform_from_clustered() {
        // two disjoint cliques have visible discrepancy at p = 1/2
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in (u + 1)..4 {
                edges.push((u, v));
                edges.push((u + 4, v + 4));
            }
        }
        let split = Graph::from_edge_list(8, &edges).unwrap();
        let ps = property_scores(&split, 0.5, 4, 100, 7).unwrap();
        assert!(ps.disc_score >= 0.1, "disc = {}", ps.disc_score);

        // complete graph at the diagonal-adjusted density d/n: nearly uniform
        let kn = Graph::complete(8);
        let ps = property_scores(&kn, 7.0 / 8.0, 4, 100, 7).unwrap();
        assert!(ps.disc_score < 0.05, "disc = {}", ps.disc_score);
    }

    mod properties {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]
            #[test]
            fn trace_identities_on_random_graphs(n in 2usize..16, p in 0.1f64..0.9, seed in 0u64..500, loops in 0usize..3) {
                let mut g = crate::construct::gnp(n, p, seed).graph;
                // sprinkle loops to exercise the diagonal convention
                let mut edges = g.edge_list();
                for v in 0..loops.min(n) {
                    edges.push((v, v));
                }
                g = Graph::from_edge_list(n, &edges).unwrap();
                let s = full_spectrum(&g).unwrap();
                let sum: f64 = s.eigenvalues.iter().sum();
                let sum_sq: f64 = s.eigenvalues.iter().map(|l| l * l).sum();
                let deg_sum: usize = (0..n).map(|v| g.degree(v)).sum();
                prop_assert!((sum - g.loop_count() as f64).abs() < 1e-7 * n as f64);
                prop_assert!((sum_sq - deg_sum as f64).abs() < 1e-7 * n as f64);
                // closed walks of length 3 equal the third spectral moment
                let walks = circuit_count(&g, 3).unwrap();
                let moment: f64 = s.eigenvalues.iter().map(|l| l.powi(3)).sum();
                let walks_f: f64 = walks.to_string().parse().unwrap();
                prop_assert!((walks_f - moment).abs() < 1e-6 * s.lambda_1().abs().max(1.0).powi(3));
            }
        }
    }

    #[test]
    fn disc_exhaustive_matches_naive() {
        let g = Graph::petersen();
        let p = 1.0 / 3.0;
        let fast = disc_exhaustive(&g, p);
        // naive double loop over all subset pairs
        let n = g.n();
        let mut best = 0.0f64;
        for xm in 0u32..(1 << n) {
            let xs: Vec<usize> = (0..n).filter(|&i| xm >> i & 1 == 1).collect();
            for ym in 0u32..(1 << n) {
                let ys: Vec<usize> = (0..n).filter(|&i| ym >> i & 1 == 1).collect();
                let e = g.edges_between(&xs, &ys) as f64;
                best = best.max((e - p * xs.len() as f64 * ys.len() as f64).abs());
            }
        }
        assert_close(fast, best / (p * (n * n) as f64), 1e-12);
    }
}
