//! Deterministic builders for the classical pseudo-random graph families:
//! random models, quadratic-residue and power-residue Cayley graphs,
//! inner-product and affine difference graphs, projective polarity graphs,
//! binary-Cayley triangle-free and odd-girth graphs, the
//! Lubotzky-Phillips-Sarnak expanders on PSL(2,q), and projective norm
//! graphs.
//!
//! Every builder attaches machine-checkable [`Claims`] (degree, exact or
//! bounded nontrivial eigenvalues, strong-regularity parameters, forbidden
//! subgraphs) that downstream audits re-verify against computed spectra and
//! exact oracles. Builders are deterministic: identical parameters (and seed,
//! where one applies) give identical edge lists.

use crate::field::{FieldElt, FiniteField};
use crate::graph::Graph;
use crate::rng::SplitMix64;
use crate::spectral::SrgParams;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum ConstructError {
    NotPrime(u64),
    NotPrimePower(u64),
    BadResidueClass { value: u64, requirement: &'static str },
    OddStubCount { n: usize, d: usize },
    DegreeTooLarge { n: usize, d: usize },
    RestartCapExhausted(usize),
    EvenParameter(u64),
    DivisibilityViolated { divisor: u64, value: u64 },
    ParameterTooSmall { name: &'static str, min: u64, got: u64 },
    ParameterOutOfRange { name: &'static str, got: u64 },
    AsymmetricConnectionSet,
    IdentityInConnectionSet,
    QuadraticResidueRequired { p: u64, q: u64 },
    SpectralRadiusCondition { p: u64, q: u64 },
    DuplicateGenerator,
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::NotPrime(p) => write!(f, "{p} is not prime"),
            ConstructError::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            ConstructError::BadResidueClass { value, requirement } => {
                write!(f, "{value} does not satisfy {requirement}")
            }
            ConstructError::OddStubCount { n, d } => {
                write!(f, "n*d must be even, got n = {n}, d = {d}")
            }
            ConstructError::DegreeTooLarge { n, d } => write!(f, "degree {d} too large for n = {n}"),
            ConstructError::RestartCapExhausted(cap) => {
                write!(f, "configuration model failed to produce a simple graph in {cap} restarts")
            }
            ConstructError::EvenParameter(k) => write!(f, "parameter {k} must be odd"),
            ConstructError::DivisibilityViolated { divisor, value } => {
                write!(f, "{divisor} must not divide {value}")
            }
            ConstructError::ParameterTooSmall { name, min, got } => {
                write!(f, "parameter {name} must be at least {min}, got {got}")
            }
            ConstructError::ParameterOutOfRange { name, got } => {
                write!(f, "parameter {name} out of range: {got}")
            }
            ConstructError::AsymmetricConnectionSet => {
                write!(f, "connection set is not closed under inverses")
            }
            ConstructError::IdentityInConnectionSet => write!(f, "connection set contains the identity"),
            ConstructError::QuadraticResidueRequired { p, q } => {
                write!(f, "{p} must be a quadratic residue modulo {q}")
            }
            ConstructError::SpectralRadiusCondition { p, q } => {
                write!(f, "need q > 2 sqrt(p), got p = {p}, q = {q}")
            }
            ConstructError::DuplicateGenerator => write!(f, "duplicate generator"),
        }
    }
}

impl std::error::Error for ConstructError {}

/// Forbidden-subgraph assertions a family carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Forbidden {
    Triangle,
    FourCycle,
    /// No odd cycle of length <= max_length.
    ShortOddCycles { max_length: usize },
    /// No complete bipartite K_{a,b}.
    CompleteBipartite { a: usize, b: usize },
}

/// Machine-checkable claims attached to a constructed graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct Claims {
    pub family: String,
    pub params: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    /// Exact value of max_{i >= 2} |lambda_i|, when the family pins one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_exact: Option<f64>,
    /// Upper bound on max_{i >= 2} |lambda_i|.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_upper: Option<f64>,
    /// Every nontrivial eigenvalue lies in this set (exact values).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nontrivial_eigenvalues: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub srg: Option<SrgParams>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub forbidden: Vec<Forbidden>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub girth_lower_bound: Option<f64>,
    /// Full predicted spectrum (descending), for abelian Cayley graphs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_spectrum: Option<Vec<f64>>,
}

impl Claims {
    fn new(family: &str) -> Self {
        Claims { family: family.to_string(), ..Default::default() }
    }

    fn param(mut self, key: &str, value: u64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }
}

/// A built graph together with the claims its family guarantees.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub claims: Claims,
}

/// Decomposes q into (p, k) with p prime and q = p^k, if possible.
pub fn prime_power_decompose(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// Binomial random graph: each pair independently with probability p.
pub fn gnp(n: usize, p: f64, seed: u64) -> Construction {
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::from_edge_list(n, &edges).unwrap();
    let claims = Claims::new("gnp").param("n", n as u64).param("seed", seed);
    Construction { graph, claims }
}

const CONFIGURATION_RESTART_CAP: usize = 100_000;

/// Uniform-ish random d-regular simple graph via the configuration model:
/// pair up n*d stubs at random and restart from scratch on any loop or
/// repeated edge.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Construction, ConstructError> {
    if n * d % 2 != 0 {
        return Err(ConstructError::OddStubCount { n, d });
    }
    if d >= n {
        return Err(ConstructError::DegreeTooLarge { n, d });
    }
    let mut rng = SplitMix64::new(seed);
    let mut stubs: Vec<u32> = Vec::with_capacity(n * d);
    'restart: for _ in 0..CONFIGURATION_RESTART_CAP {
        stubs.clear();
        for v in 0..n {
            for _ in 0..d {
                stubs.push(v as u32);
            }
        }
        rng.shuffle(&mut stubs);
        let mut seen = HashSet::with_capacity(n * d / 2);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0] as usize, pair[1] as usize);
            if u == v {
                continue 'restart;
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                continue 'restart;
            }
            edges.push(key);
        }
        let graph = Graph::from_edge_list(n, &edges).unwrap();
        let claims = Claims::new("random_regular")
            .param("n", n as u64)
            .param("d", d as u64)
            .param("seed", seed);
        return Ok(Construction { graph, claims: Claims { degree: Some(d), ..claims } });
    }
    Err(ConstructError::RestartCapExhausted(CONFIGURATION_RESTART_CAP))
}

/// Quadratic-residue graph on GF(q), q a prime power congruent to 1 mod 4:
/// vertices are field elements, a ~ b iff a - b is a nonzero square.
pub fn paley(q: u64) -> Result<Construction, ConstructError> {
    let (p, k) = prime_power_decompose(q).ok_or(ConstructError::NotPrimePower(q))?;
    if q % 4 != 1 {
        return Err(ConstructError::BadResidueClass { value: q, requirement: "q = 1 (mod 4)" });
    }
    let field = FiniteField::new(p, k, None).expect("prime power decomposition is valid");
    // -1 is a square, so chi(a - b) = chi(b - a) and adjacency is symmetric
    let square = square_indicator(&field);
    let mut edges = Vec::with_capacity((q as usize) * ((q as usize - 1) / 2) / 2);
    for a in 0..q {
        let ea = field.element(a);
        for b in (a + 1)..q {
            let diff = field.sub(&field.element(b), &ea);
            if square[field.index_of(&diff) as usize] {
                edges.push((a as usize, b as usize));
            }
        }
    }
    let graph = Graph::from_edge_list(q as usize, &edges).unwrap();
    let claims = Claims {
        degree: Some(((q - 1) / 2) as usize),
        lambda_exact: Some(((q as f64).sqrt() + 1.0) / 2.0),
        srg: Some(SrgParams {
            n: q as usize,
            d: ((q - 1) / 2) as usize,
            eta: ((q - 5) / 4) as usize,
            mu: ((q - 1) / 4) as usize,
        }),
        ..Claims::new("paley").param("q", q)
    };
    Ok(Construction { graph, claims })
}

fn square_indicator(field: &FiniteField) -> Vec<bool> {
    let q = field.order();
    let mut sq = vec![false; q as usize];
    for i in 1..q {
        let e = field.element(i);
        let s = field.mul(&e, &e);
        sq[field.index_of(&s) as usize] = true;
    }
    sq
}

/// Graph on odd-weight binary k-vectors (k odd, all-ones excluded), two
/// distinct vertices adjacent iff their inner product is odd.
pub fn inner_product_graph(k: usize) -> Result<Construction, ConstructError> {
    if k % 2 == 0 {
        return Err(ConstructError::EvenParameter(k as u64));
    }
    if k < 5 {
        return Err(ConstructError::ParameterTooSmall { name: "k", min: 5, got: k as u64 });
    }
    let all_ones = (1u64 << k) - 1;
    let vertices: Vec<u64> = (0u64..(1 << k))
        .filter(|&v| v.count_ones() % 2 == 1 && v != all_ones)
        .collect();
    let n = vertices.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if (vertices[i] & vertices[j]).count_ones() % 2 == 1 {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edge_list(n, &edges).unwrap();
    let d = (1usize << (k - 2)) - 2;
    let claims = Claims {
        degree: Some(d),
        lambda_exact: Some(1.0 + 2.0f64.powi(((k - 3) / 2) as i32)),
        srg: Some(SrgParams {
            n,
            d,
            eta: (1usize << (k - 3)) - 3,
            mu: (1usize << (k - 3)) - 1,
        }),
        ..Claims::new("inner_product").param("k", k as u64)
    };
    Ok(Construction { graph, claims })
}

/// Affine difference graph on GF(q)^2: fix the first k of the q+1 directions
/// through the origin (slopes 0, 1, ..., q-1 in field-index order, then the
/// vertical direction); x ~ y iff x - y is parallel to a chosen direction.
pub fn dgt_graph(q: u64, k: usize) -> Result<Construction, ConstructError> {
    let count = q as usize + 1;
    if k < 1 || k > count {
        return Err(ConstructError::ParameterOutOfRange { name: "k", got: k as u64 });
    }
    dgt_graph_with_lines(q, &(0..k).collect::<Vec<_>>())
}

/// As [`dgt_graph`] but with an explicit choice of direction indices into
/// the canonical order (0..q are the slopes in field-index order, q is the
/// vertical direction).
pub fn dgt_graph_with_lines(q: u64, line_indices: &[usize]) -> Result<Construction, ConstructError> {
    let (p, deg) = prime_power_decompose(q).ok_or(ConstructError::NotPrimePower(q))?;
    let field = FiniteField::new(p, deg, None).expect("valid prime power");
    let k = line_indices.len();
    if k == 0 || line_indices.iter().any(|&i| i > q as usize) {
        return Err(ConstructError::ParameterOutOfRange { name: "line index", got: k as u64 });
    }
    let mut uniq: Vec<usize> = line_indices.to_vec();
    uniq.sort_unstable();
    uniq.dedup();
    if uniq.len() != k {
        return Err(ConstructError::DuplicateGenerator);
    }
    // direction vectors: slope s -> (1, s); index q -> (0, 1)
    let dirs: Vec<(FieldElt, FieldElt)> = uniq
        .iter()
        .map(|&i| {
            if i < q as usize {
                (field.one(), field.element(i as u64))
            } else {
                (field.zero(), field.one())
            }
        })
        .collect();
    // difference set: all nonzero multiples of the chosen directions
    let mut diffs: HashSet<(u64, u64)> = HashSet::new();
    for (dx, dy) in &dirs {
        for t in 1..q {
            let te = field.element(t);
            diffs.insert((field.index_of(&field.mul(&te, dx)), field.index_of(&field.mul(&te, dy))));
        }
    }
    let n = (q * q) as usize;
    let vid = |x: u64, y: u64| (x * q + y) as usize;
    let mut edges = Vec::new();
    for x1 in 0..q {
        for y1 in 0..q {
            let e1 = (field.element(x1), field.element(y1));
            for x2 in 0..q {
                for y2 in 0..q {
                    if vid(x1, y1) >= vid(x2, y2) {
                        continue;
                    }
                    let dx = field.sub(&field.element(x2), &e1.0);
                    let dy = field.sub(&field.element(y2), &e1.1);
                    if diffs.contains(&(field.index_of(&dx), field.index_of(&dy))) {
                        edges.push((vid(x1, y1), vid(x2, y2)));
                    }
                }
            }
        }
    }
    let graph = Graph::from_edge_list(n, &edges).unwrap();
    let claims = Claims {
        degree: Some(k * (q as usize - 1)),
        nontrivial_eigenvalues: Some(vec![q as f64 - k as f64, -(k as f64)]),
        ..Claims::new("dgt").param("q", q).param("k", k as u64)
    };
    Ok(Construction { graph, claims })
}

/// Polarity graph of the projective space PG(t, q): vertices are projective
/// points (first nonzero coordinate normalized to 1), x ~ y (including
/// x = y, which puts a loop at the absolute points) iff the bilinear form
/// x_0 y_0 + ... + x_t y_t vanishes.
pub fn pg_polarity(q: u64, t: usize) -> Result<Construction, ConstructError> {
    if t < 2 {
        return Err(ConstructError::ParameterTooSmall { name: "t", min: 2, got: t as u64 });
    }
    let (p, deg) = prime_power_decompose(q).ok_or(ConstructError::NotPrimePower(q))?;
    let field = FiniteField::new(p, deg, None).expect("valid prime power");
    // canonical projective representatives
    let mut points: Vec<Vec<FieldElt>> = Vec::new();
    let mut coords = vec![0u64; t + 1];
    loop {
        let vec: Vec<FieldElt> = coords.iter().map(|&c| field.element(c)).collect();
        if let Some(first) = vec.iter().position(|e| !e.is_zero()) {
            if vec[first] == field.one() {
                points.push(vec);
            }
        }
        // odometer over coordinate indices
        let mut pos = 0;
        loop {
            if pos > t {
                break;
            }
            coords[pos] += 1;
            if coords[pos] < q {
                break;
            }
            coords[pos] = 0;
            pos += 1;
        }
        if pos > t {
            break;
        }
    }
    let n = points.len();
    debug_assert_eq!(n as u64, (q.pow(t as u32 + 1) - 1) / (q - 1));
    let form_vanishes = |a: &[FieldElt], b: &[FieldElt]| -> bool {
        let mut acc = field.zero();
        for (x, y) in a.iter().zip(b) {
            acc = field.add(&acc, &field.mul(x, y));
        }
        acc.is_zero()
    };
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i..n {
            if form_vanishes(&points[i], &points[j]) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edge_list(n, &edges).unwrap();
    let d = ((q.pow(t as u32) - 1) / (q - 1)) as usize;
    let mut claims = Claims {
        degree: Some(d),
        // A^2 = mu J + (d - mu) I with mu = (q^(t-1) - 1)/(q - 1)
        lambda_exact: Some((q as f64).powf((t as f64 - 1.0) / 2.0)),
        ..Claims::new("pg_polarity").param("q", q).param("t", t as u64)
    };
    if t == 2 {
        claims.forbidden.push(Forbidden::FourCycle);
    }
    Ok(Construction { graph, claims })
}

/// Cayley graph of a finite abelian group given as cyclic factors, with a
/// symmetric connection set. Returns the graph together with the exact
/// spectrum predicted by character sums.
pub fn cayley_abelian(factors: &[u64], connection: &[Vec<u64>]) -> Result<Construction, ConstructError> {
    assert!(!factors.is_empty() && factors.iter().all(|&f| f >= 1));
    let order: u64 = factors.iter().product();
    let rank = factors.len();
    let mut seen = HashSet::new();
    for s in connection {
        if s.len() != rank || s.iter().zip(factors).any(|(&x, &f)| x >= f) {
            return Err(ConstructError::ParameterOutOfRange { name: "generator", got: s.len() as u64 });
        }
        if s.iter().all(|&x| x == 0) {
            return Err(ConstructError::IdentityInConnectionSet);
        }
        if !seen.insert(s.clone()) {
            return Err(ConstructError::DuplicateGenerator);
        }
    }
    for s in connection {
        let neg: Vec<u64> = s.iter().zip(factors).map(|(&x, &f)| (f - x) % f).collect();
        if !seen.contains(&neg) {
            return Err(ConstructError::AsymmetricConnectionSet);
        }
    }
    // mixed-radix indexing of group elements
    let to_index = |tuple: &[u64]| -> usize {
        let mut idx = 0u64;
        for (&x, &f) in tuple.iter().zip(factors).rev() {
            let _ = f;
            idx = idx * f + x;
        }
        idx as usize
    };
    let from_index = |mut idx: u64| -> Vec<u64> {
        let mut t = Vec::with_capacity(rank);
        for &f in factors {
            t.push(idx % f);
            idx /= f;
        }
        t
    };
    let mut edges = HashSet::new();
    for g in 0..order {
        let gt = from_index(g);
        for s in connection {
            let ht: Vec<u64> = gt.iter().zip(s).zip(factors).map(|((&x, &y), &f)| (x + y) % f).collect();
            let h = to_index(&ht) as usize;
            let g = g as usize;
            edges.insert((g.min(h), g.max(h)));
        }
    }
    let mut edge_vec: Vec<(usize, usize)> = edges.into_iter().collect();
    edge_vec.sort_unstable();
    let graph = Graph::from_edge_list(order as usize, &edge_vec).unwrap();

    // predicted eigenvalues: one per character, the sum of character values
    // over the connection set (real by symmetry of the set)
    let mut predicted = Vec::with_capacity(order as usize);
    for a in 0..order {
        let at = from_index(a);
        let mut re = 0.0f64;
        let mut im = 0.0f64;
        for s in connection {
            let v = crate::field::character_value(factors, &at, s).expect("validated tuples");
            re += v.re;
            im += v.im;
        }
        debug_assert!(im.abs() < 1e-9, "character sum should be real for symmetric sets");
        predicted.push(re);
    }
    predicted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let claims = Claims {
        degree: Some(connection.len()),
        predicted_spectrum: Some(predicted),
        ..Claims::new("cayley_abelian").param("order", order)
    };
    Ok(Construction { graph, claims })
}

/// Cayley graph on the additive group of GF(q) whose connection set is the
/// set of k-th powers; requires that set to be symmetric (checked), which
/// holds exactly when -1 is a k-th power.
pub fn power_residue_cayley(q: u64, k: u64) -> Result<Construction, ConstructError> {
    let (p, deg) = prime_power_decompose(q).ok_or(ConstructError::NotPrimePower(q))?;
    if k == 0 {
        return Err(ConstructError::ParameterTooSmall { name: "k", min: 1, got: 0 });
    }
    let field = FiniteField::new(p, deg, None).expect("valid prime power");
    let mut powers: HashSet<u64> = HashSet::new();
    for y in 1..q {
        powers.insert(field.index_of(&field.pow(&field.element(y), k)));
    }
    // symmetry: S = -S elementwise
    for &s in &powers {
        let neg = field.index_of(&field.neg(&field.element(s)));
        if !powers.contains(&neg) {
            return Err(ConstructError::AsymmetricConnectionSet);
        }
    }
    let mut edges = Vec::new();
    for a in 0..q {
        let ea = field.element(a);
        for b in (a + 1)..q {
            let diff = field.sub(&field.element(b), &ea);
            if powers.contains(&field.index_of(&diff)) {
                edges.push((a as usize, b as usize));
            }
        }
    }
    let graph = Graph::from_edge_list(q as usize, &edges).unwrap();
    let claims = Claims {
        degree: Some(powers.len()),
        // Weil/Gauss-sum bound on nontrivial character sums over k-th powers
        lambda_upper: Some((k as f64 - 1.0) * (q as f64).sqrt()),
        ..Claims::new("power_residue").param("q", q).param("k", k)
    };
    Ok(Construction { graph, claims })
}

/// Cayley graph descriptor on the group GF(2)^dimension, with vertices as
/// bitmasks. Used for the binary constructions whose interesting instances
/// are too large to always materialize.
#[derive(Debug, Clone)]
pub struct BinaryCayley {
    pub dimension: usize,
    /// Nonzero, pairwise distinct masks; closed under inverse automatically
    /// since every element is an involution.
    pub generators: Vec<u64>,
}

impl BinaryCayley {
    pub fn vertex_count(&self) -> u64 {
        1u64 << self.dimension
    }

    pub fn neighbors_of(&self, v: u64) -> impl Iterator<Item = u64> + '_ {
        self.generators.iter().map(move |&s| v ^ s)
    }

    /// Materializes the adjacency structure. Intended for dimensions up to
    /// about 16; the 2^20-vertex instances should be queried implicitly.
    pub fn graph(&self) -> Graph {
        let n = self.vertex_count() as usize;
        let mut edges = Vec::with_capacity(n * self.generators.len() / 2);
        for v in 0..n as u64 {
            for &s in &self.generators {
                let w = v ^ s;
                if v < w {
                    edges.push((v as usize, w as usize));
                }
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// True iff the graph has no odd cycle of length <= 2h + 1, checked by
    /// breadth-first search to depth h from the identity (enough by vertex
    /// transitivity): a short odd cycle forces an edge inside a BFS level.
    pub fn no_short_odd_cycle(&self, h: usize) -> bool {
        let mut dist: HashMap<u64, usize> = HashMap::new();
        dist.insert(0, 0);
        let mut frontier = vec![0u64];
        for depth in 1..=h {
            let mut next = Vec::new();
            for &v in &frontier {
                for w in self.neighbors_of(v) {
                    if !dist.contains_key(&w) {
                        dist.insert(w, depth);
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        for (&v, &dv) in dist.iter() {
            for w in self.neighbors_of(v) {
                if let Some(&dw) = dist.get(&w) {
                    if dv == dw {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn alon_generators(k: usize, exponent: u64, copies: usize) -> Result<Vec<u64>, ConstructError> {
    let field = FiniteField::new(2, k, None).expect("GF(2^k)");
    let q = field.order();
    let mut w0: Vec<FieldElt> = Vec::new();
    let mut w1: Vec<FieldElt> = Vec::new();
    for i in 1..q {
        let a = field.element(i);
        let pw = field.pow(&a, exponent);
        if field.leading_coeff(&pw) == 0 {
            w0.push(a);
        } else {
            w1.push(a);
        }
    }
    debug_assert_eq!(w0.len() as u64, q / 2 - 1);
    debug_assert_eq!(w1.len() as u64, q / 2);
    // pack (w, w^3, w^5, ...) into a bitmask of `copies` blocks of k bits
    let pack = |w: &FieldElt| -> u64 {
        let mut mask = 0u64;
        for block in 0..copies {
            let power = field.pow(w, 2 * block as u64 + 1);
            let bits = field.index_of(&power); // coefficient bits of the element
            mask |= bits << (block * k);
        }
        mask
    };
    let u0: Vec<u64> = w0.iter().map(pack).collect();
    let u1: Vec<u64> = w1.iter().map(pack).collect();
    let mut gens: HashSet<u64> = HashSet::with_capacity(u0.len() * u1.len());
    for &a in &u0 {
        for &b in &u1 {
            gens.insert(a ^ b);
        }
    }
    if gens.len() != u0.len() * u1.len() || gens.contains(&0) {
        return Err(ConstructError::DuplicateGenerator);
    }
    let mut out: Vec<u64> = gens.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Dense triangle-free pseudo-random graph: the Cayley graph on GF(2)^(3k)
/// with connection set {(w0, w0^3, w0^5) + (w1, w1^3, w1^5)} where w0 runs
/// over nonzero field elements whose seventh power has leading coefficient 0
/// and w1 over those with leading coefficient 1. Requires 3 not dividing k
/// (so that seventh powers permute the field).
pub fn alon_triangle_free(k: usize) -> Result<Construction, ConstructError> {
    if k % 3 == 0 {
        return Err(ConstructError::DivisibilityViolated { divisor: 3, value: k as u64 });
    }
    if k < 4 {
        return Err(ConstructError::ParameterTooSmall { name: "k", min: 4, got: k as u64 });
    }
    let cayley = alon_triangle_free_cayley(k)?;
    let graph = cayley.graph();
    let dd = 1u64 << (k - 1);
    let claims = Claims {
        degree: Some((dd * (dd - 1)) as usize),
        lambda_upper: Some(9.0 * 2.0f64.powi(k as i32) + 3.0 * 2.0f64.powf(k as f64 / 2.0) + 0.25),
        forbidden: vec![Forbidden::Triangle],
        ..Claims::new("alon_triangle_free").param("k", k as u64)
    };
    Ok(Construction { graph, claims })
}

/// Generator-level view of [`alon_triangle_free`].
pub fn alon_triangle_free_cayley(k: usize) -> Result<BinaryCayley, ConstructError> {
    if k % 3 == 0 {
        return Err(ConstructError::DivisibilityViolated { divisor: 3, value: k as u64 });
    }
    Ok(BinaryCayley { dimension: 3 * k, generators: alon_generators(k, 7, 3)? })
}

/// Generalization with odd girth above 2h + 1: the Cayley graph on
/// GF(2)^((2h+1)k) with connection set built from powers (w, w^3, ..., w^(4h+1))
/// split by the leading coefficient of w^(4h+3). Requires 4h + 3 not
/// dividing 2^k - 1. Returned as a descriptor; materialize via
/// [`BinaryCayley::graph`] when the dimension is small enough.
pub fn alon_general(k: usize, h: usize) -> Result<BinaryCayley, ConstructError> {
    if h < 1 {
        return Err(ConstructError::ParameterTooSmall { name: "h", min: 1, got: h as u64 });
    }
    let modulus = 4 * h as u64 + 3;
    let field_order = (1u64 << k) - 1;
    if field_order % modulus == 0 {
        return Err(ConstructError::DivisibilityViolated { divisor: modulus, value: field_order });
    }
    Ok(BinaryCayley {
        dimension: (2 * h + 1) * k,
        generators: alon_generators(k, modulus, 2 * h + 1)?,
    })
}

/// Ramanujan expanders of Lubotzky, Phillips and Sarnak: the Cayley graph of
/// PSL(2, q) whose p + 1 generators come from the integer solutions of
/// a0^2 + a1^2 + a2^2 + a3^2 = p with a0 odd positive and a1, a2, a3 even.
pub fn lps(p: u64, q: u64) -> Result<Construction, ConstructError> {
    if !crate::field::is_prime(p) {
        return Err(ConstructError::NotPrime(p));
    }
    if !crate::field::is_prime(q) {
        return Err(ConstructError::NotPrime(q));
    }
    if p == q {
        return Err(ConstructError::BadResidueClass { value: p, requirement: "p != q" });
    }
    if p % 4 != 1 {
        return Err(ConstructError::BadResidueClass { value: p, requirement: "p = 1 (mod 4)" });
    }
    if q % 4 != 1 {
        return Err(ConstructError::BadResidueClass { value: q, requirement: "q = 1 (mod 4)" });
    }
    if legendre(p % q, q) != 1 {
        return Err(ConstructError::QuadraticResidueRequired { p, q });
    }
    if (q as f64) <= 2.0 * (p as f64).sqrt() {
        return Err(ConstructError::SpectralRadiusCondition { p, q });
    }

    let vectors = sum_of_four_squares_vectors(p);
    debug_assert_eq!(vectors.len() as u64, p + 1);

    // least positive i with i^2 = -1 and least positive square root of p, mod q
    let i_unit = (1..q).find(|&x| x * x % q == q - 1).expect("q = 1 mod 4 has i");
    let sqrt_p = (1..q).find(|&x| x * x % q == p % q).expect("p is a QR mod q");
    let sqrt_p_inv = mod_pow_u64(sqrt_p, q - 2, q);

    let reduce = |v: i64| -> u64 { v.rem_euclid(q as i64) as u64 };
    let mut gens: Vec<[u64; 4]> = Vec::with_capacity(vectors.len());
    let mut gen_set = HashSet::new();
    for &(a0, a1, a2, a3) in &vectors {
        // (1/sqrt(p)) [[a0 + i a1, a2 + i a3], [-a2 + i a3, a0 - i a1]]
        let m = [
            reduce(a0 + i_unit as i64 * a1),
            reduce(a2 + i_unit as i64 * a3),
            reduce(-a2 + i_unit as i64 * a3),
            reduce(a0 - i_unit as i64 * a1),
        ];
        let scaled = m.map(|x| x * sqrt_p_inv % q);
        let canon = psl2_canonicalize(scaled, q);
        if canon == psl2_canonicalize([1, 0, 0, 1], q) {
            return Err(ConstructError::IdentityInConnectionSet);
        }
        if !gen_set.insert(canon) {
            return Err(ConstructError::DuplicateGenerator);
        }
        gens.push(canon);
    }
    // closure under inverse: conjugating the quaternion negates a1, a2, a3,
    // which permutes the solution set
    for g in &gens {
        let inv = psl2_canonicalize([g[3], q - g[1] % q, q - g[2] % q, g[0]], q)
            .map(|x| x % q);
        if !gen_set.contains(&inv) {
            return Err(ConstructError::AsymmetricConnectionSet);
        }
    }

    // enumerate PSL(2, q) and index canonical representatives
    let mut index: HashMap<[u64; 4], usize> = HashMap::new();
    let mut elements: Vec<[u64; 4]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                // ad - bc = 1
                let d = if a != 0 {
                    ((1 + b * c % q) % q) * mod_pow_u64(a, q - 2, q) % q
                } else {
                    if b == 0 {
                        continue;
                    }
                    // -bc = 1 requires c = -b^(-1); d is free, handled below
                    u64::MAX
                };
                if a != 0 {
                    let m = psl2_canonicalize([a, b, c, d], q);
                    if !index.contains_key(&m) {
                        index.insert(m, elements.len());
                        elements.push(m);
                    }
                } else {
                    let c_req = (q - mod_pow_u64(b, q - 2, q) % q) % q;
                    if c != c_req {
                        continue;
                    }
                    for d in 0..q {
                        let m = psl2_canonicalize([a, b, c, d], q);
                        if !index.contains_key(&m) {
                            index.insert(m, elements.len());
                            elements.push(m);
                        }
                    }
                }
            }
        }
    }
    let n = elements.len();
    debug_assert_eq!(n as u64, q * (q * q - 1) / 2);

    let mut edges = HashSet::new();
    for (gi, g) in elements.iter().enumerate() {
        for s in &gens {
            let prod = mat_mul(s, g, q);
            let h = index[&psl2_canonicalize(prod, q)];
            edges.insert((gi.min(h), gi.max(h)));
        }
    }
    let mut edge_vec: Vec<(usize, usize)> = edges.into_iter().collect();
    edge_vec.sort_unstable();
    let graph = Graph::from_edge_list(n, &edge_vec).unwrap();
    let claims = Claims {
        degree: Some((p + 1) as usize),
        lambda_upper: Some(2.0 * (p as f64).sqrt()),
        connected: Some(true),
        girth_lower_bound: Some(2.0 * (q as f64).ln() / (p as f64).ln()),
        ..Claims::new("lps").param("p", p).param("q", q)
    };
    Ok(Construction { graph, claims })
}

/// All integer vectors (a0, a1, a2, a3) with a0 odd positive, the rest even,
/// summing in squares to p. There are exactly p + 1 of them for p = 1 mod 4.
pub fn sum_of_four_squares_vectors(p: u64) -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    let bound = (p as f64).sqrt() as i64 + 1;
    let mut a0 = 1i64;
    while a0 * a0 <= p as i64 {
        let r1 = p as i64 - a0 * a0;
        let mut a1 = -bound;
        while a1 <= bound {
            if a1.rem_euclid(2) == 0 && a1 * a1 <= r1 {
                let r2 = r1 - a1 * a1;
                let mut a2 = -bound;
                while a2 <= bound {
                    if a2.rem_euclid(2) == 0 && a2 * a2 <= r2 {
                        let r3 = r2 - a2 * a2;
                        let a3 = (r3 as f64).sqrt().round() as i64;
                        if a3 * a3 == r3 && a3.rem_euclid(2) == 0 {
                            if a3 == 0 {
                                out.push((a0, a1, a2, 0));
                            } else {
                                out.push((a0, a1, a2, a3));
                                out.push((a0, a1, a2, -a3));
                            }
                        }
                    }
                    a2 += 1;
                }
            }
            a1 += 1;
        }
        a0 += 2;
    }
    out.sort_unstable();
    out
}

fn legendre(a: u64, q: u64) -> i64 {
    if a % q == 0 {
        return 0;
    }
    let r = mod_pow_u64(a % q, (q - 1) / 2, q);
    if r == 1 {
        1
    } else {
        -1
    }
}

fn mod_pow_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

fn mat_mul(a: &[u64; 4], b: &[u64; 4], q: u64) -> [u64; 4] {
    [
        (a[0] * b[0] + a[1] * b[2]) % q,
        (a[0] * b[1] + a[1] * b[3]) % q,
        (a[2] * b[0] + a[3] * b[2]) % q,
        (a[2] * b[1] + a[3] * b[3]) % q,
    ]
}

/// Representative of {M, -M} whose first nonzero entry in row-major order
/// lies in 1..=(q-1)/2.
fn psl2_canonicalize(m: [u64; 4], q: u64) -> [u64; 4] {
    let m = m.map(|x| x % q);
    for &x in &m {
        if x != 0 {
            if x <= (q - 1) / 2 {
                return m;
            }
            return m.map(|y| (q - y) % q);
        }
    }
    m
}

/// Projective norm graph: vertices GF(p^(t-1)) x GF(p)*, with (X, a) ~ (Y, b)
/// iff N(X + Y) = ab for the norm down to GF(p). Vertices where N(X + X)
/// equals a^2 carry a loop; keeping those loops is what makes the graph
/// exactly (p^(t-1) - 1)-regular with nontrivial eigenvalues of modulus
/// exactly p^((t-1)/2).
pub fn norm_graph(p: u64, t: usize) -> Result<Construction, ConstructError> {
    if !crate::field::is_prime(p) {
        return Err(ConstructError::NotPrime(p));
    }
    if t < 3 {
        return Err(ConstructError::ParameterTooSmall { name: "t", min: 3, got: t as u64 });
    }
    let field = FiniteField::new(p, t - 1, None).expect("valid field");
    let q = field.order();
    let n = (q * (p - 1)) as usize;
    let vid = |x: u64, a: u64| -> usize { (x * (p - 1) + (a - 1)) as usize };
    let mut edges = Vec::new();
    for x in 0..q {
        let ex = field.element(x);
        for a in 1..p {
            for y in x..q {
                let sum = field.add(&ex, &field.element(y));
                if sum.is_zero() {
                    continue;
                }
                let norm = field.norm_to_prime_field(&sum);
                let b_start = if y == x { a } else { 1 };
                for b in b_start..p {
                    if a * b % p == norm {
                        let (u, v) = (vid(x, a), vid(y, b));
                        if u <= v {
                            edges.push((u, v));
                        }
                    }
                }
            }
        }
    }
    let graph = Graph::from_edge_list(n, &edges).unwrap();
    let factorial = |m: usize| -> usize { (1..=m).product::<usize>().max(1) };
    let claims = Claims {
        degree: Some((q - 1) as usize),
        lambda_exact: Some((p as f64).powf((t as f64 - 1.0) / 2.0)),
        forbidden: vec![Forbidden::CompleteBipartite { a: t, b: factorial(t - 1) + 1 }],
        ..Claims::new("norm_graph").param("p", p).param("t", t as u64)
    };
    Ok(Construction { graph, claims })
}
