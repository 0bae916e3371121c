//! Immutable undirected graphs (loops permitted), edge-count primitives with
//! the double-counting convention for overlapping sets, degree and codegree
//! statistics, and exact connectivity via max-flow.
//!
//! Conventions, fixed once for the whole crate:
//! - a loop at v contributes 1 to deg(v) and 1 to the diagonal of the
//!   adjacency matrix;
//! - the edge count m counts each non-loop edge once and each loop once;
//! - `edges_between(U, W)` counts incidences, so an edge with both ends in
//!   the intersection contributes 2, and e(U,U) = 2 e(U) + (loops in U);
//! - `induced_edge_count(U)` counts internal non-loop edges once, loops once.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    DuplicateEdge(usize, usize),
    TooLarge { n: usize, cap: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::TooLarge { n, cap } => {
                write!(f, "graph with n = {n} exceeds the dense cap {cap}")
            }
        }
    }
}

impl std::error::Error for GraphError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>, // sorted; a loop appears as v in adj[v]
    m: usize,
    loop_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. A pair (u, u) is recorded as a loop.
    /// Duplicate edges (in either orientation) are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        let mut loops = 0usize;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            if u == v {
                adj[u].push(u as u32);
                loops += 1;
            } else {
                adj[u].push(v as u32);
                adj[v].push(u as u32);
            }
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Graph { n, adj, m: seen.len(), loop_count: loops })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Non-loop edges counted once plus loops counted once.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn loop_count(&self) -> usize {
        self.loop_count
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn has_loop_at(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn is_loopless(&self) -> bool {
        self.loop_count == 0
    }

    /// Each edge once, u <= v, sorted.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &w in &self.adj[u] {
                let w = w as usize;
                if u <= w {
                    edges.push((u, w));
                }
            }
        }
        edges
    }

    /// Degree if regular, None otherwise.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        if (1..self.n).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        self.adj.iter().map(|a| a.len()).sum::<usize>() as f64 / self.n as f64
    }

    /// Edge density m / C(n,2).
    pub fn density(&self) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        2.0 * self.m as f64 / (self.n as f64 * (self.n as f64 - 1.0))
    }

    /// Number of incidences between U and W: sum over u in U of
    /// |adj(u) ∩ W|. An edge inside U ∩ W is counted twice; a loop at a
    /// vertex of U ∩ W once.
    pub fn edges_between(&self, us: &[usize], ws: &[usize]) -> usize {
        let wset = VertexSet::from_slice(self.n, ws);
        us.iter()
            .map(|&u| self.adj[u].iter().filter(|&&w| wset.contains(w as usize)).count())
            .sum()
    }

    /// Internal edges of U: non-loop edges with both ends in U counted once,
    /// loops at vertices of U counted once.
    pub fn induced_edge_count(&self, us: &[usize]) -> usize {
        let uset = VertexSet::from_slice(self.n, us);
        let mut count = 0;
        for &u in us {
            for &w in &self.adj[u] {
                let w = w as usize;
                if u <= w && uset.contains(w) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let sum: usize = degs.iter().sum();
        let mean = sum as f64 / self.n as f64;
        // K = sum d(v)^2 - (sum d(v))^2 / n, kept exact as a ratio of integers
        let sum_sq: u128 = degs.iter().map(|&d| (d as u128) * (d as u128)).sum();
        let irregularity =
            (self.n as u128 * sum_sq) as f64 / self.n as f64 - (sum as f64) * (sum as f64) / self.n as f64;
        DegreeStats {
            min: degs.iter().copied().min().unwrap_or(0),
            max: degs.iter().copied().max().unwrap_or(0),
            mean,
            irregularity: irregularity.max(0.0),
        }
    }

    /// Number of common neighbors of x and y.
    pub fn codegree(&self, x: usize, y: usize) -> usize {
        let (a, b) = (&self.adj[x], &self.adj[y]);
        let (mut i, mut j, mut c) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    c += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        c
    }

    /// Full pairwise codegree/agreement table with aggregate deviations from
    /// the random-graph benchmark at density `p`. Requires a loopless graph
    /// and n at most `cap` (the table is dense in pairs).
    pub fn codegree_stats(&self, p: f64, cap: usize) -> Result<CodegreeStats, GraphError> {
        assert!(self.is_loopless(), "codegree table requires a loopless graph");
        if self.n > cap {
            return Err(GraphError::TooLarge { n: self.n, cap });
        }
        let n = self.n;
        let mut min_codeg = usize::MAX;
        let mut max_codeg = 0usize;
        let mut codeg_dev = 0.0f64;
        let mut agree_dev = 0.0f64;
        let codeg_target = p * p * n as f64;
        let agree_target = (p * p + (1.0 - p) * (1.0 - p)) * n as f64;
        let mut table = Vec::with_capacity(n * (n - 1) / 2);
        for x in 0..n {
            for y in (x + 1)..n {
                let c = self.codegree(x, y);
                // agreement count: vertices joined to both or to neither;
                // always nonnegative, summed before subtracting to stay in usize
                let s = n + 2 * c - self.degree(x) - self.degree(y);
                table.push(c as u32);
                min_codeg = min_codeg.min(c);
                max_codeg = max_codeg.max(c);
                codeg_dev += (c as f64 - codeg_target).abs();
                agree_dev += (s as f64 - agree_target).abs();
            }
        }
        if n < 2 {
            min_codeg = 0;
        }
        let n3 = (n as f64).powi(3);
        Ok(CodegreeStats {
            table,
            n,
            min_codegree: min_codeg,
            max_codegree: max_codeg,
            codegree_deviation: codeg_dev,
            agreement_deviation: agree_dev,
            codegree_deviation_normalized: codeg_dev / n3,
            agreement_deviation_normalized: agree_dev / n3,
        })
    }

    /// Connected components as sorted vertex sets, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &self.adj[u] {
                    let w = w as usize;
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Exact vertex connectivity by unit-capacity max-flow over the vertex
    /// split network, minimized over all non-adjacent pairs. A complete
    /// graph has connectivity n - 1 by convention.
    pub fn vertex_connectivity(&self) -> usize {
        assert!(self.is_loopless() && self.n >= 2);
        let n = self.n;
        let mut best = n - 1;
        for s in 0..n {
            for t in (s + 1)..n {
                if self.has_edge(s, t) {
                    continue;
                }
                best = best.min(self.vertex_flow(s, t, best));
                if best == 0 {
                    return 0;
                }
            }
        }
        best
    }

    // Max number of internally vertex-disjoint s-t paths, stopped early once
    // the flow reaches `cap`. Nodes are split: v_in = 2v, v_out = 2v+1.
    fn vertex_flow(&self, s: usize, t: usize, cap: usize) -> usize {
        let size = 2 * self.n;
        let mut net = FlowNetwork::new(size);
        for v in 0..self.n {
            let c = if v == s || v == t { self.n as i64 } else { 1 };
            net.add_edge(2 * v, 2 * v + 1, c);
        }
        for u in 0..self.n {
            for &w in &self.adj[u] {
                let w = w as usize;
                net.add_edge(2 * u + 1, 2 * w, self.n as i64);
            }
        }
        net.max_flow(2 * s + 1, 2 * t, cap as i64) as usize
    }

    /// Exact edge connectivity by unit-capacity max-flow from vertex 0 to
    /// every other vertex.
    pub fn edge_connectivity(&self) -> usize {
        assert!(self.is_loopless() && self.n >= 2);
        // cutting all edges at a minimum-degree vertex always disconnects
        let mut best = (0..self.n).map(|v| self.degree(v)).min().unwrap();
        for t in 1..self.n {
            let mut net = FlowNetwork::new(self.n);
            for u in 0..self.n {
                for &w in &self.adj[u] {
                    let w = w as usize;
                    if u < w {
                        net.add_undirected_edge(u, w, 1);
                    }
                }
            }
            best = best.min(net.max_flow(0, t, best as i64) as usize);
            if best == 0 {
                return 0;
            }
        }
        best
    }

    /// Exact girth (length of a shortest cycle), None for forests. Loops
    /// count as cycles of length 1.
    pub fn girth(&self) -> Option<usize> {
        if self.loop_count > 0 {
            return Some(1);
        }
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            for d in dist.iter_mut() {
                *d = usize::MAX;
            }
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    let w = w as usize;
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u {
                        // non-tree edge closes a cycle through the root
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        if best == usize::MAX {
            None
        } else {
            Some(best)
        }
    }

    /// True iff some edge lies in a triangle, by sorted neighbor-list
    /// intersection over all edges.
    pub fn has_triangle(&self) -> bool {
        for u in 0..self.n {
            for &w in &self.adj[u] {
                let w = w as usize;
                if u < w && self.codegree(u, w) > 0 {
                    return true;
                }
            }
        }
        false
    }

    /// Counts 4-cycles exhaustively. Each 4-cycle a-b-c-d has two diagonal
    /// pairs {a,c} and {b,d}, and contributes one unordered pair of common
    /// neighbors to each, so summing C(codeg, 2) over all vertex pairs
    /// counts every 4-cycle exactly twice.
    pub fn count_four_cycles(&self) -> u64 {
        let mut twice = 0u64;
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                // exclude x and y themselves, which can appear as common
                // neighbors when loops are present
                let c = self
                    .common_neighbors(x, y)
                    .iter()
                    .filter(|&&z| z != x && z != y)
                    .count() as u64;
                twice += c * c.saturating_sub(1) / 2;
            }
        }
        twice / 2
    }

    pub fn common_neighbors(&self, x: usize, y: usize) -> Vec<usize> {
        let (a, b) = (&self.adj[x], &self.adj[y]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i] as usize);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// Cycle on n >= 3 vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// Path on n vertices.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// Complete bipartite graph with parts a and b.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edge_list(a + b, &edges).unwrap()
    }

    /// The Petersen graph.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer cycle
            edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
            edges.push((i, 5 + i)); // spokes
        }
        Graph::from_edge_list(10, &edges).unwrap()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub mean: f64,
    /// Sum over vertices of (d(v) - mean)^2; zero iff regular.
    pub irregularity: f64,
}

#[derive(Debug, Clone)]
pub struct CodegreeStats {
    /// codeg(x,y) for x < y in row-major pair order.
    pub table: Vec<u32>,
    pub n: usize,
    pub min_codegree: usize,
    pub max_codegree: usize,
    /// Sum over unordered distinct pairs of |codeg(x,y) - p^2 n|.
    pub codegree_deviation: f64,
    /// Sum over unordered distinct pairs of |s(x,y) - (p^2 + (1-p)^2) n|,
    /// where s(x,y) counts vertices joined to x and y the same way.
    pub agreement_deviation: f64,
    pub codegree_deviation_normalized: f64,
    pub agreement_deviation_normalized: f64,
}

impl CodegreeStats {
    pub fn codegree_of(&self, x: usize, y: usize) -> u32 {
        assert!(x != y && x < self.n && y < self.n);
        let (a, b) = (x.min(y), x.max(y));
        // index of pair (a,b) with a < b in row-major order
        let idx = a * self.n - a * (a + 1) / 2 + (b - a - 1);
        self.table[idx]
    }
}

/// Sorted-unique vertex set with a bitset for membership tests.
pub struct VertexSet {
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn from_slice(n: usize, vs: &[usize]) -> Self {
        let mut bits = vec![0u64; n.div_ceil(64)];
        for &v in vs {
            assert!(v < n, "vertex {v} out of range");
            bits[v / 64] |= 1 << (v % 64);
        }
        VertexSet { bits }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.bits[v / 64] >> (v % 64) & 1 == 1
    }
}

/// Dinic max-flow on a small network; used for exact connectivity.
struct FlowNetwork {
    to: Vec<usize>,
    cap: Vec<i64>,
    next: Vec<Option<usize>>,
    head: Vec<Option<usize>>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork { to: Vec::new(), cap: Vec::new(), next: Vec::new(), head: vec![None; n] }
    }

    fn push_arc(&mut self, u: usize, v: usize, c: i64) {
        self.to.push(v);
        self.cap.push(c);
        self.next.push(self.head[u]);
        self.head[u] = Some(self.to.len() - 1);
    }

    fn add_edge(&mut self, u: usize, v: usize, c: i64) {
        self.push_arc(u, v, c);
        self.push_arc(v, u, 0);
    }

    fn add_undirected_edge(&mut self, u: usize, v: usize, c: i64) {
        self.push_arc(u, v, c);
        self.push_arc(v, u, c);
    }

    fn max_flow(&mut self, s: usize, t: usize, stop_at: i64) -> i64 {
        let n = self.head.len();
        let mut flow = 0i64;
        loop {
            // BFS levels
            let mut level = vec![usize::MAX; n];
            level[s] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let mut e = self.head[u];
                while let Some(idx) = e {
                    if self.cap[idx] > 0 && level[self.to[idx]] == usize::MAX {
                        level[self.to[idx]] = level[u] + 1;
                        queue.push_back(self.to[idx]);
                    }
                    e = self.next[idx];
                }
            }
            if level[t] == usize::MAX {
                return flow;
            }
            let mut iter: Vec<Option<usize>> = self.head.clone();
            loop {
                let pushed = self.dfs(s, t, i64::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
                if flow >= stop_at {
                    return flow;
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i64, level: &[usize], iter: &mut [Option<usize>]) -> i64 {
        if u == t {
            return limit;
        }
        while let Some(idx) = iter[u] {
            let v = self.to[idx];
            if self.cap[idx] > 0 && level[v] == level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[idx]), level, iter);
                if pushed > 0 {
                    self.cap[idx] -= pushed;
                    self.cap[idx ^ 1] += pushed;
                    return pushed;
                }
            }
            iter[u] = self.next[idx];
        }
        0
    }
}
