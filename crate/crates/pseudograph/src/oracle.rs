//! Exact combinatorial oracles at desk scale, plus the greedy procedures the
//! spectral bounds are compared against. Every oracle either returns an
//! exact value (with a witness that re-validates against the graph) or an
//! explicit Unknown when its node budget runs out; it never silently
//! degrades to a heuristic. Tie-breaking is always by least vertex index so
//! witnesses are reproducible.

use crate::graph::Graph;
use crate::rng::SplitMix64;
use num_bigint::{BigInt, BigUint, Sign};
use std::collections::HashMap;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Outcome of a budgeted exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome<T> {
    Exact(T),
    /// Budget exhausted before the search completed.
    Unknown,
}

impl<T> OracleOutcome<T> {
    pub fn exact(&self) -> Option<&T> {
        match self {
            OracleOutcome::Exact(v) => Some(v),
            OracleOutcome::Unknown => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, OracleOutcome::Unknown)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRun<T> {
    pub outcome: OracleOutcome<T>,
    pub nodes_expanded: u64,
}

struct BudgetCounter {
    nodes: u64,
    budget: u64,
}

impl BudgetCounter {
    fn new(budget: u64) -> Self {
        BudgetCounter { nodes: 0, budget }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.budget
    }
}

// ---------------------------------------------------------------------------
// independence number
// ---------------------------------------------------------------------------

/// Exact maximum independent set by branch and bound over u128 vertex masks
/// (n <= 128). Branches on the highest-degree candidate; the bound is
/// current size plus candidates remaining.
pub fn exact_alpha(g: &Graph, budget: u64) -> OracleRun<(usize, Vec<usize>)> {
    assert!(g.n() <= 128, "independent-set oracle supports n <= 128");
    assert!(g.is_loopless(), "independent sets are defined on loopless graphs");
    let n = g.n();
    let masks: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w))
        .collect();
    let full: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };

    // greedy seed: min-degree-first gives a decent starting bound
    let (mut best_size, best_set) = greedy_independent_mask(g, full);
    let mut counter = BudgetCounter::new(budget);
    let mut complete = true;

    fn recurse(
        masks: &[u128],
        mut candidates: u128,
        current: u128,
        size: usize,
        best_size: &mut usize,
        best_set: &mut u128,
        counter: &mut BudgetCounter,
        complete: &mut bool,
    ) {
        if !counter.tick() {
            *complete = false;
            return;
        }
        if size + candidates.count_ones() as usize <= *best_size {
            return;
        }
        if candidates == 0 {
            if size > *best_size {
                *best_size = size;
                *best_set = current;
            }
            return;
        }
        // pivot: candidate with most candidate-neighbors
        let mut pivot = 0usize;
        let mut pivot_deg = -1i64;
        let mut scan = candidates;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let d = (masks[v] & candidates).count_ones() as i64;
            if d > pivot_deg {
                pivot_deg = d;
                pivot = v;
            }
        }
        let bit = 1u128 << pivot;
        // include pivot first: tends to reach good solutions sooner
        recurse(masks, candidates & !(masks[pivot] | bit), current | bit, size + 1, best_size, best_set, counter, complete);
        candidates &= !bit;
        recurse(masks, candidates, current, size, best_size, best_set, counter, complete);
    }

    let mut best_mask = best_set;
    recurse(&masks, full, 0, 0, &mut best_size, &mut best_mask, &mut counter, &mut complete);
    let outcome = if complete {
        let set: Vec<usize> = (0..n).filter(|&v| best_mask >> v & 1 == 1).collect();
        debug_assert!(is_independent(g, &set));
        OracleOutcome::Exact((best_size, set))
    } else {
        OracleOutcome::Unknown
    };
    OracleRun { outcome, nodes_expanded: counter.nodes }
}

fn greedy_independent_mask(g: &Graph, mut candidates: u128) -> (usize, u128) {
    let mut chosen = 0u128;
    let mut size = 0usize;
    while candidates != 0 {
        // min degree within the candidate set, least index on ties
        let mut best = usize::MAX;
        let mut best_deg = usize::MAX;
        let mut scan = candidates;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let d = g.neighbors(v).iter().filter(|&&w| candidates >> w & 1 == 1).count();
            if d < best_deg {
                best_deg = d;
                best = v;
            }
        }
        chosen |= 1 << best;
        size += 1;
        candidates &= !(1u128 << best);
        for &w in g.neighbors(best) {
            candidates &= !(1u128 << w);
        }
    }
    (size, chosen)
}

pub fn is_independent(g: &Graph, set: &[usize]) -> bool {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// chromatic number
// ---------------------------------------------------------------------------

/// Exact chromatic number by iterative deepening on the color count with
/// saturation-order branching, seeded by a greedy clique lower bound.
pub fn exact_chi(g: &Graph, budget: u64) -> OracleRun<(usize, Vec<usize>)> {
    assert!(g.is_loopless(), "colorings are defined on loopless graphs");
    let n = g.n();
    if n == 0 {
        return OracleRun { outcome: OracleOutcome::Exact((0, vec![])), nodes_expanded: 0 };
    }
    if g.m() == 0 {
        return OracleRun { outcome: OracleOutcome::Exact((1, vec![0; n])), nodes_expanded: 0 };
    }
    let lb = greedy_clique(g).len().max(2);
    let mut counter = BudgetCounter::new(budget);
    for k in lb..=n {
        let mut colors = vec![usize::MAX; n];
        match try_color(g, k, &mut colors, &mut counter) {
            Some(true) => {
                debug_assert!(is_proper_coloring(g, &colors));
                return OracleRun { outcome: OracleOutcome::Exact((k, colors)), nodes_expanded: counter.nodes };
            }
            Some(false) => continue,
            None => return OracleRun { outcome: OracleOutcome::Unknown, nodes_expanded: counter.nodes },
        }
    }
    unreachable!("every graph is n-colorable")
}

// Some(true) = colored, Some(false) = proven impossible, None = out of budget.
fn try_color(g: &Graph, k: usize, colors: &mut [usize], counter: &mut BudgetCounter) -> Option<bool> {
    if !counter.tick() {
        return None;
    }
    let n = g.n();
    // saturation-order vertex choice
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0usize);
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut seen = 0u64;
        for &w in g.neighbors(v) {
            let c = colors[w as usize];
            if c != usize::MAX {
                seen |= 1 << c;
            }
        }
        let key = (seen.count_ones() as usize, g.degree(v));
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }
    if pick == usize::MAX {
        return Some(true);
    }
    let mut used = 0u64;
    let mut max_assigned = 0usize;
    for v in 0..n {
        if colors[v] != usize::MAX {
            max_assigned = max_assigned.max(colors[v] + 1);
        }
    }
    for &w in g.neighbors(pick) {
        let c = colors[w as usize];
        if c != usize::MAX {
            used |= 1 << c;
        }
    }
    // symmetry breaking: allow at most one brand-new color
    let limit = k.min(max_assigned + 1);
    for c in 0..limit {
        if used >> c & 1 == 1 {
            continue;
        }
        colors[pick] = c;
        match try_color(g, k, colors, counter) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => {
                colors[pick] = usize::MAX;
                return None;
            }
        }
        colors[pick] = usize::MAX;
    }
    Some(false)
}

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    for u in 0..g.n() {
        for &w in g.neighbors(u) {
            if u != w as usize && colors[u] == colors[w as usize] {
                return false;
            }
        }
    }
    true
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    for start in 0..n {
        let mut clique = vec![start];
        let mut candidates: Vec<usize> = g.neighbors(start).iter().map(|&w| w as usize).filter(|&w| w != start).collect();
        while let Some(&v) = candidates.first() {
            clique.push(v);
            candidates.retain(|&w| w != v && g.has_edge(v, w));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

// ---------------------------------------------------------------------------
// max cut
// ---------------------------------------------------------------------------

/// Exact maximum cut by Gray-code enumeration of bipartitions with the last
/// vertex pinned (each cut is visited once). Loops never cross a cut.
pub fn exact_maxcut(g: &Graph) -> (usize, Vec<bool>) {
    let n = g.n();
    assert!((1..=24).contains(&n), "exact max cut supports 1 <= n <= 24");
    let mut side = vec![false; n];
    let mut cut = 0usize;
    let mut best = 0usize;
    let mut best_mask = 0u32;
    let mut mask = 0u32;
    let steps = 1u64 << (n - 1);
    for i in 1..steps {
        // Gray code flips exactly one vertex per step
        let flip = i.trailing_zeros() as usize;
        let new_side = !side[flip];
        for &w in g.neighbors(flip) {
            let w = w as usize;
            if w == flip {
                continue;
            }
            if side[w] == new_side {
                cut -= 1;
            } else {
                cut += 1;
            }
        }
        side[flip] = new_side;
        mask ^= 1 << flip;
        if cut > best {
            best = cut;
            best_mask = mask;
        }
    }
    (best, (0..n).map(|v| best_mask >> v & 1 == 1).collect())
}

pub fn cut_size(g: &Graph, side: &[bool]) -> usize {
    let mut c = 0;
    for u in 0..g.n() {
        for &w in g.neighbors(u) {
            let w = w as usize;
            if u < w && side[u] != side[w] {
                c += 1;
            }
        }
    }
    c
}

/// Single-flip local search from the all-one-side start; a lower bound used
/// above the exact cap.
pub fn local_maxcut(g: &Graph, seed: u64) -> (usize, Vec<bool>) {
    let n = g.n();
    let mut rng = SplitMix64::new(seed);
    let mut side: Vec<bool> = (0..n).map(|_| rng.bernoulli(0.5)).collect();
    loop {
        let mut improved = false;
        for v in 0..n {
            let mut gain = 0i64;
            for &w in g.neighbors(v) {
                let w = w as usize;
                if w == v {
                    continue;
                }
                if side[w] == side[v] {
                    gain += 1;
                } else {
                    gain -= 1;
                }
            }
            if gain > 0 {
                side[v] = !side[v];
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    (cut_size(g, &side), side)
}

// ---------------------------------------------------------------------------
// Hamilton cycles
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonResult {
    Found(Vec<usize>),
    Absent,
}

/// Finds a Hamilton cycle or proves absence by backtracking from vertex 0,
/// pruning when an unvisited vertex loses all its escape routes.
pub fn hamilton_search(g: &Graph, budget: u64) -> OracleRun<HamiltonResult> {
    let n = g.n();
    if n < 3 {
        return OracleRun { outcome: OracleOutcome::Exact(HamiltonResult::Absent), nodes_expanded: 0 };
    }
    let mut counter = BudgetCounter::new(budget);
    let mut path = vec![0usize];
    let mut visited = vec![false; n];
    visited[0] = true;
    let found = hamilton_recurse(g, &mut path, &mut visited, &mut counter);
    let outcome = match found {
        Some(true) => OracleOutcome::Exact(HamiltonResult::Found(path)),
        Some(false) => OracleOutcome::Exact(HamiltonResult::Absent),
        None => OracleOutcome::Unknown,
    };
    OracleRun { outcome, nodes_expanded: counter.nodes }
}

fn hamilton_recurse(g: &Graph, path: &mut Vec<usize>, visited: &mut [bool], counter: &mut BudgetCounter) -> Option<bool> {
    if !counter.tick() {
        return None;
    }
    let n = g.n();
    let tail = *path.last().unwrap();
    if path.len() == n {
        return Some(g.has_edge(tail, 0));
    }
    // prune: every unvisited vertex needs at least two usable endpoints
    for u in 0..n {
        if visited[u] {
            continue;
        }
        let mut usable = 0;
        for &w in g.neighbors(u) {
            let w = w as usize;
            if !visited[w] || w == tail || w == 0 {
                usable += 1;
                if usable >= 2 {
                    break;
                }
            }
        }
        if usable < 2 {
            return Some(false);
        }
    }
    for &w in g.neighbors(tail) {
        let w = w as usize;
        if visited[w] {
            continue;
        }
        visited[w] = true;
        path.push(w);
        match hamilton_recurse(g, path, visited, counter) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => {
                path.pop();
                visited[w] = false;
                return None;
            }
        }
        path.pop();
        visited[w] = false;
    }
    Some(false)
}

/// Exact number of Hamilton cycles (undirected, so each cycle counted once).
pub fn hamilton_count(g: &Graph) -> u128 {
    let n = g.n();
    assert!(n <= 16, "exact Hamilton-cycle counting supports n <= 16");
    if n < 3 {
        return 0;
    }
    // directed cycles through vertex 0, halved
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut count = 0u128;
    fn walk(g: &Graph, v: usize, visited: &mut [bool], depth: usize, count: &mut u128) {
        if depth == g.n() {
            if g.has_edge(v, 0) {
                *count += 1;
            }
            return;
        }
        for &w in g.neighbors(v) {
            let w = w as usize;
            if !visited[w] {
                visited[w] = true;
                walk(g, w, visited, depth + 1, count);
                visited[w] = false;
            }
        }
    }
    walk(g, 0, &mut visited, 1, &mut count);
    count / 2
}

pub fn is_hamilton_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.n();
    if cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    cycle.windows(2).all(|w| g.has_edge(w[0], w[1])) && g.has_edge(cycle[n - 1], cycle[0])
}

// ---------------------------------------------------------------------------
// matchings
// ---------------------------------------------------------------------------

/// Maximum matching in a general graph by Edmonds' blossom algorithm,
/// deterministic with least-index scanning. Returns the mate array.
pub fn max_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.n();
    let mut mate: Vec<i64> = vec![-1; n];
    // greedy warm start
    for u in 0..n {
        if mate[u] == -1 {
            for &w in g.neighbors(u) {
                let w = w as usize;
                if w != u && mate[w] == -1 {
                    mate[u] = w as i64;
                    mate[w] = u as i64;
                    break;
                }
            }
        }
    }
    let mut parent = vec![-1i64; n];
    let mut base: Vec<usize> = (0..n).collect();
    for root in 0..n {
        if mate[root] != -1 {
            continue;
        }
        // BFS forest from the exposed root, contracting blossoms on the fly
        for v in 0..n {
            parent[v] = -1;
            base[v] = v;
        }
        let mut used = vec![false; n];
        used[root] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        let mut augmented = false;
        'bfs: while let Some(v) = queue.pop_front() {
            for &wref in g.neighbors(v) {
                let w = wref as usize;
                if w == v || base[v] == base[w] || mate[v] == w as i64 {
                    continue;
                }
                if w == root || (mate[w] != -1 && parent[mate[w] as usize] != -1) {
                    // odd cycle: contract the blossom at the common base
                    let cur = blossom_lca(&mate, &parent, &base, v, w);
                    let mut blossom = vec![false; n];
                    mark_blossom_path(&mate, &mut parent, &base, &mut blossom, v, cur, w);
                    mark_blossom_path(&mate, &mut parent, &base, &mut blossom, w, cur, v);
                    for i in 0..n {
                        if blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[w] == -1 {
                    parent[w] = v as i64;
                    if mate[w] == -1 {
                        augment_path(&mut mate, &parent, w);
                        augmented = true;
                        break 'bfs;
                    } else {
                        let m = mate[w] as usize;
                        used[m] = true;
                        queue.push_back(m);
                    }
                }
            }
        }
        let _ = augmented;
    }
    mate.into_iter().map(|m| if m < 0 { None } else { Some(m as usize) }).collect()
}

fn blossom_lca(mate: &[i64], parent: &[i64], base: &[usize], mut v: usize, mut w: usize) -> usize {
    let n = mate.len();
    let mut seen = vec![false; n];
    loop {
        v = base[v];
        seen[v] = true;
        if mate[v] == -1 {
            break;
        }
        v = parent[mate[v] as usize] as usize;
    }
    loop {
        w = base[w];
        if seen[w] {
            return w;
        }
        w = parent[mate[w] as usize] as usize;
    }
}

fn mark_blossom_path(
    mate: &[i64],
    parent: &mut [i64],
    base: &[usize],
    blossom: &mut [bool],
    mut v: usize,
    lca: usize,
    mut child: usize,
) {
    while base[v] != lca {
        blossom[base[v]] = true;
        let m = mate[v] as usize;
        blossom[base[m]] = true;
        parent[v] = child as i64;
        child = m;
        v = parent[m] as usize;
    }
}

fn augment_path(mate: &mut [i64], parent: &[i64], mut w: usize) {
    loop {
        let v = parent[w] as usize;
        let next = mate[v];
        mate[v] = w as i64;
        mate[w] = v as i64;
        if next == -1 {
            break;
        }
        w = next as usize;
    }
}

pub fn matching_size(mate: &[Option<usize>]) -> usize {
    mate.iter().filter(|m| m.is_some()).count() / 2
}

/// Deterministic perfect-matching decision via the blossom algorithm.
pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n() % 2 == 0 && matching_size(&max_matching(g)) * 2 == g.n()
}

const TUTTE_PRIME: u64 = (1 << 61) - 1;

/// Randomized perfect-matching test: the determinant of the Tutte matrix
/// with random entries over GF(2^61 - 1), repeated `trials` times. One-sided:
/// a nonzero determinant certifies a perfect matching; all-zero answers are
/// wrong with probability below (n / p)^trials.
pub fn tutte_matrix_probe(g: &Graph, seed: u64, trials: usize) -> bool {
    let n = g.n();
    if n % 2 != 0 {
        return false;
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let mut m = vec![0u64; n * n];
        for u in 0..n {
            for &w in g.neighbors(u) {
                let w = w as usize;
                if u < w {
                    let x = rng.next_below(TUTTE_PRIME - 1) + 1;
                    m[u * n + w] = x;
                    m[w * n + u] = TUTTE_PRIME - x;
                }
            }
        }
        if det_mod_p(&mut m, n) != 0 {
            return true;
        }
    }
    false
}

fn det_mod_p(m: &mut [u64], n: usize) -> u64 {
    let p = TUTTE_PRIME;
    let mut det: u64 = 1;
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r * n + col] != 0);
        let Some(pivot) = pivot else { return 0 };
        if pivot != col {
            for j in 0..n {
                m.swap(pivot * n + j, col * n + j);
            }
            det = p - det;
        }
        let pv = m[col * n + col];
        det = ((det as u128 * pv as u128) % p as u128) as u64;
        let inv = mod_pow(pv, p - 2, p);
        for r in (col + 1)..n {
            let factor = ((m[r * n + col] as u128 * inv as u128) % p as u128) as u64;
            if factor == 0 {
                continue;
            }
            for j in col..n {
                let sub = (factor as u128 * m[col * n + j] as u128 % p as u128) as u64;
                m[r * n + j] = (m[r * n + j] + p - sub) % p;
            }
        }
    }
    det % p
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
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

/// Exact number of perfect matchings by memoized recursion on the set of
/// uncovered vertices (n <= 32).
pub fn count_perfect_matchings(g: &Graph) -> u128 {
    let n = g.n();
    assert!(n <= 32, "perfect-matching counting supports n <= 32");
    if n % 2 != 0 {
        return 0;
    }
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, u128> = HashMap::new();
    fn count(g: &Graph, mask: u64, memo: &mut HashMap<u64, u128>) -> u128 {
        if mask == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(&mask) {
            return c;
        }
        let v = mask.trailing_zeros() as usize;
        let mut total = 0u128;
        for &w in g.neighbors(v) {
            let w = w as usize;
            if w != v && mask >> w & 1 == 1 {
                total += count(g, mask & !(1 << v) & !(1 << w), memo);
            }
        }
        memo.insert(mask, total);
        total
    }
    count(g, full, &mut memo)
}

// ---------------------------------------------------------------------------
// subgraph counting
// ---------------------------------------------------------------------------

/// Exact number of labeled (injective, not necessarily induced) copies of
/// `h` in `g`, by backtracking over vertex images.
pub fn count_labeled_copies(g: &Graph, h: &Graph) -> u128 {
    count_copies_impl(g, h, false)
}

/// Labeled induced copies: non-edges of `h` must map to non-edges of `g`.
pub fn count_labeled_induced_copies(g: &Graph, h: &Graph) -> u128 {
    count_copies_impl(g, h, true)
}

fn count_copies_impl(g: &Graph, h: &Graph, induced: bool) -> u128 {
    assert!(h.n() <= 6, "pattern graphs are capped at 6 vertices");
    assert!(h.is_loopless(), "pattern graphs must be loopless");
    let hn = h.n();
    if hn == 0 {
        return 1;
    }
    if g.n() < hn {
        return 0;
    }
    let mut image = vec![usize::MAX; hn];
    let mut used = vec![false; g.n()];
    let mut count = 0u128;
    fn assign(
        g: &Graph,
        h: &Graph,
        pos: usize,
        image: &mut [usize],
        used: &mut [bool],
        induced: bool,
        count: &mut u128,
    ) {
        if pos == h.n() {
            *count += 1;
            return;
        }
        'candidates: for cand in 0..g.n() {
            if used[cand] {
                continue;
            }
            for earlier in 0..pos {
                let need = h.has_edge(pos, earlier);
                let have = g.has_edge(cand, image[earlier]);
                if need && !have {
                    continue 'candidates;
                }
                if induced && !need && have {
                    continue 'candidates;
                }
            }
            image[pos] = cand;
            used[cand] = true;
            assign(g, h, pos + 1, image, used, induced, count);
            used[cand] = false;
            image[pos] = usize::MAX;
        }
    }
    assign(g, h, 0, &mut image, &mut used, induced, &mut count);
    count
}

/// |Aut(h)| by brute force over vertex permutations.
pub fn automorphism_count(h: &Graph) -> u128 {
    let n = h.n();
    assert!(n <= 8);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0u128;
    loop {
        let ok = (0..n).all(|u| {
            (u..n).all(|v| h.has_edge(u, v) == h.has_edge(perm[u], perm[v]))
        });
        if ok {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    count
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

// ---------------------------------------------------------------------------
// spanning trees
// ---------------------------------------------------------------------------

/// Exact spanning-tree count: the determinant of any cofactor of the
/// Laplacian, computed by fraction-free (Bareiss) elimination over exact
/// integers. Zero for disconnected graphs. Loops never enter the Laplacian.
pub fn count_spanning_trees(g: &Graph) -> BigUint {
    let n = g.n();
    if n == 0 {
        return BigUint::from(0u32);
    }
    if n == 1 {
        return BigUint::from(1u32);
    }
    let m = n - 1;
    let mut lap: Vec<BigInt> = vec![BigInt::from(0); m * m];
    for u in 0..n {
        for &w in g.neighbors(u) {
            let w = w as usize;
            if u == w {
                continue;
            }
            if u < m {
                lap[u * m + u] += 1;
            }
            if u < m && w < m {
                lap[u * m + w] -= 1;
            }
        }
    }
    let det = bareiss_determinant(&mut lap, m);
    match det.sign() {
        Sign::Minus => BigUint::from(0u32), // cannot happen for a Laplacian minor
        _ => det.magnitude().clone(),
    }
}

fn bareiss_determinant(m: &mut [BigInt], n: usize) -> BigInt {
    let mut sign = 1i64;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if m[k * n + k] == BigInt::from(0) {
            let swap_row = ((k + 1)..n).find(|&r| m[r * n + k] != BigInt::from(0));
            match swap_row {
                Some(r) => {
                    for j in 0..n {
                        m.swap(r * n + j, k * n + j);
                    }
                    sign = -sign;
                }
                None => return BigInt::from(0),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                m[i * n + j] = num / &prev; // exact division in Bareiss
            }
        }
        prev = m[k * n + k].clone();
    }
    let det = m[(n - 1) * n + (n - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

// ---------------------------------------------------------------------------
// triangle factors
// ---------------------------------------------------------------------------

/// Exact triangle-factor existence by covering the least uncovered vertex
/// with each of its triangles in turn. Returns the factor when one exists.
pub fn triangle_factor(g: &Graph, budget: u64) -> OracleRun<Option<Vec<[usize; 3]>>> {
    let n = g.n();
    assert!(n % 3 == 0, "triangle factor requires 3 | n");
    assert!(n <= 21, "triangle-factor oracle supports n <= 21");
    let mut counter = BudgetCounter::new(budget);
    let mut covered = vec![false; n];
    let mut factor: Vec<[usize; 3]> = Vec::new();
    fn cover(g: &Graph, covered: &mut [bool], factor: &mut Vec<[usize; 3]>, counter: &mut BudgetCounter) -> Option<bool> {
        if !counter.tick() {
            return None;
        }
        let v = match covered.iter().position(|&c| !c) {
            Some(v) => v,
            None => return Some(true),
        };
        let nbrs: Vec<usize> = g.neighbors(v).iter().map(|&w| w as usize).filter(|&w| w != v && !covered[w]).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    covered[v] = true;
                    covered[a] = true;
                    covered[b] = true;
                    factor.push([v, a, b]);
                    match cover(g, covered, factor, counter) {
                        Some(true) => return Some(true),
                        Some(false) => {}
                        None => return None,
                    }
                    factor.pop();
                    covered[v] = false;
                    covered[a] = false;
                    covered[b] = false;
                }
            }
        }
        Some(false)
    }
    let outcome = match cover(g, &mut covered, &mut factor, &mut counter) {
        Some(true) => OracleOutcome::Exact(Some(factor)),
        Some(false) => OracleOutcome::Exact(None),
        None => OracleOutcome::Unknown,
    };
    OracleRun { outcome, nodes_expanded: counter.nodes }
}

// ---------------------------------------------------------------------------
// Turan numbers
// ---------------------------------------------------------------------------

/// Result of the clique-free subgraph search: the largest edge count of a
/// K_t-free subgraph, exact when `lower == upper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TuranBound {
    pub lower: usize,
    pub upper: usize,
}

impl TuranBound {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

/// Largest number of edges in a K_t-free subgraph, as a branch-and-bound
/// over minimum edge sets hitting every t-clique. The bound is a greedy
/// edge-disjoint clique packing.
pub fn turan_number(g: &Graph, t: usize, budget: u64) -> OracleRun<TuranBound> {
    assert!(t >= 3);
    assert!(g.is_loopless());
    let edges = g.edge_list();
    let m = edges.len();
    assert!(m <= 128, "turan oracle supports m <= 128 edges");
    let edge_index: HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    // enumerate all t-cliques as edge masks
    let mut cliques: Vec<u128> = Vec::new();
    let mut current = Vec::new();
    enumerate_cliques(g, 0, t, &mut current, &mut |clique: &[usize]| {
        let mut mask = 0u128;
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                mask |= 1 << edge_index[&(u.min(v), u.max(v))];
            }
        }
        cliques.push(mask);
    });
    if cliques.is_empty() {
        return OracleRun {
            outcome: OracleOutcome::Exact(TuranBound { lower: m, upper: m }),
            nodes_expanded: 0,
        };
    }
    let mut counter = BudgetCounter::new(budget);
    let mut best = usize::MAX; // fewest deletions found
    let mut complete = true;
    fn packing_bound(cliques: &[u128], deleted: u128) -> usize {
        // greedy edge-disjoint packing of un-hit cliques
        let mut taken = deleted;
        let mut count = 0;
        for &c in cliques {
            if c & taken == 0 {
                taken |= c;
                count += 1;
            }
        }
        count
    }
    fn search(
        cliques: &[u128],
        deleted: u128,
        ndel: usize,
        best: &mut usize,
        counter: &mut BudgetCounter,
        complete: &mut bool,
    ) {
        if !counter.tick() {
            *complete = false;
            return;
        }
        if ndel + packing_bound(cliques, deleted) >= *best {
            return;
        }
        let unhit = cliques.iter().find(|&&c| c & deleted == 0);
        let Some(&clique) = unhit else {
            *best = ndel;
            return;
        };
        let mut scan = clique;
        while scan != 0 {
            let e = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            search(cliques, deleted | 1 << e, ndel + 1, best, counter, complete);
        }
    }
    // a valid starting upper bound: delete one edge per greedy-packed clique
    // times clique edge count (always enough to hit everything)
    best = best.min(m + 1);
    search(&cliques, 0, 0, &mut best, &mut counter, &mut complete);
    let root_packing = packing_bound(&cliques, 0);
    let bound = if complete {
        TuranBound { lower: m - best, upper: m - best }
    } else {
        TuranBound { lower: m.saturating_sub(best), upper: m - root_packing }
    };
    OracleRun { outcome: OracleOutcome::Exact(bound), nodes_expanded: counter.nodes }
}

fn enumerate_cliques(g: &Graph, start: usize, t: usize, current: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if current.len() == t {
        emit(current);
        return;
    }
    for v in start..g.n() {
        if current.iter().all(|&u| g.has_edge(u, v)) {
            current.push(v);
            enumerate_cliques(g, v + 1, t, current, emit);
            current.pop();
        }
    }
}

// ---------------------------------------------------------------------------
// greedy procedures
// ---------------------------------------------------------------------------

/// Greedy independent set: repeatedly take a vertex of minimum degree in the
/// shrinking induced subgraph (least index on ties) and delete its closed
/// neighborhood.
pub fn greedy_independent(g: &Graph, start: &[usize]) -> Vec<usize> {
    let mut alive = vec![false; g.n()];
    for &v in start {
        alive[v] = true;
    }
    let mut chosen = Vec::new();
    loop {
        let mut pick = usize::MAX;
        let mut pick_deg = usize::MAX;
        for v in 0..g.n() {
            if !alive[v] {
                continue;
            }
            let d = g.neighbors(v).iter().filter(|&&w| w as usize != v && alive[w as usize]).count();
            if d < pick_deg {
                pick_deg = d;
                pick = v;
            }
        }
        if pick == usize::MAX {
            break;
        }
        chosen.push(pick);
        alive[pick] = false;
        for &w in g.neighbors(pick) {
            alive[w as usize] = false;
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Outcome of the two-phase greedy coloring.
#[derive(Debug, Clone)]
pub struct GreedyColoring {
    pub colors: Vec<usize>,
    pub color_count: usize,
    /// Colors spent extracting independent sets while the residual graph was
    /// large (phase one).
    pub extraction_colors: usize,
    /// Colors spent on the small residue by smallest-last sequential
    /// coloring (phase two).
    pub residual_colors: usize,
}

/// Two-phase coloring procedure: extract greedy independent sets while the
/// remaining vertex set has at least n / ln((d - lambda)/(lambda + 1) + 1)
/// vertices, then finish the residue by smallest-last sequential coloring
/// with fresh colors.
pub fn greedy_coloring(g: &Graph, d: f64, lambda: f64) -> GreedyColoring {
    assert!(lambda < d, "procedure requires lambda < d");
    let n = g.n();
    let ratio = (d - lambda) / (lambda + 1.0) + 1.0;
    let threshold = if ratio > 1.0 { n as f64 / ratio.ln() } else { n as f64 };
    let mut colors = vec![usize::MAX; n];
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut next_color = 0usize;
    while remaining.len() as f64 >= threshold && !remaining.is_empty() {
        let set = greedy_independent(g, &remaining);
        for &v in &set {
            colors[v] = next_color;
        }
        next_color += 1;
        remaining.retain(|&v| colors[v] == usize::MAX);
    }
    let extraction_colors = next_color;
    // smallest-last order on the residue, then sequential coloring with a
    // disjoint palette
    let order = smallest_last_order(g, &remaining);
    let palette_base = next_color;
    let mut residual_max = 0usize;
    for &v in order.iter().rev() {
        let mut used = vec![false; g.degree(v) + 1];
        for &w in g.neighbors(v) {
            let c = colors[w as usize];
            if c != usize::MAX && c >= palette_base {
                let slot = c - palette_base;
                if slot < used.len() {
                    used[slot] = true;
                }
            }
        }
        let c = used.iter().position(|&u| !u).unwrap();
        colors[v] = palette_base + c;
        residual_max = residual_max.max(c + 1);
    }
    debug_assert!(is_proper_coloring(g, &colors));
    GreedyColoring {
        colors,
        color_count: palette_base + residual_max,
        extraction_colors,
        residual_colors: residual_max,
    }
}

fn smallest_last_order(g: &Graph, vertices: &[usize]) -> Vec<usize> {
    let mut alive = vec![false; g.n()];
    for &v in vertices {
        alive[v] = true;
    }
    let mut order = Vec::with_capacity(vertices.len());
    for _ in 0..vertices.len() {
        let mut pick = usize::MAX;
        let mut pick_deg = usize::MAX;
        for v in 0..g.n() {
            if !alive[v] {
                continue;
            }
            let d = g.neighbors(v).iter().filter(|&&w| w as usize != v && alive[w as usize]).count();
            if d < pick_deg {
                pick_deg = d;
                pick = v;
            }
        }
        order.push(pick);
        alive[pick] = false;
    }
    order
}

/// Local-search partition into `parts` classes in which no vertex has more
/// than deg/(parts) neighbors inside its own class. The internal edge count
/// strictly decreases with every move, which guarantees termination; this is
/// asserted at runtime.
pub fn greedy_turan_partition(g: &Graph, parts: usize) -> Vec<usize> {
    assert!(parts >= 2);
    assert!(g.is_loopless());
    let n = g.n();
    let mut assign: Vec<usize> = (0..n).map(|v| v % parts).collect();
    let internal = |assign: &[usize], v: usize| -> usize {
        g.neighbors(v).iter().filter(|&&w| assign[w as usize] == assign[v]).count()
    };
    let total_internal = |assign: &[usize]| -> usize {
        (0..n).map(|v| internal(assign, v)).sum::<usize>() / 2
    };
    let mut potential = total_internal(&assign);
    loop {
        let mut moved = false;
        for v in 0..n {
            let deg = g.degree(v);
            if internal(&assign, v) * parts > deg {
                // move to the class minimizing internal degree (least index ties)
                let mut counts = vec![0usize; parts];
                for &w in g.neighbors(v) {
                    counts[assign[w as usize]] += 1;
                }
                let target = counts
                    .iter()
                    .enumerate()
                    .min_by_key(|&(i, &c)| (c, i))
                    .map(|(i, _)| i)
                    .unwrap();
                if target != assign[v] {
                    assign[v] = target;
                    let new_potential = total_internal(&assign);
                    assert!(new_potential < potential, "internal edge count must strictly decrease");
                    potential = new_potential;
                    moved = true;
                }
            }
        }
        if !moved {
            break;
        }
    }
    assign
}

pub fn cross_edges(g: &Graph, assign: &[usize]) -> usize {
    let mut c = 0;
    for u in 0..g.n() {
        for &w in g.neighbors(u) {
            let w = w as usize;
            if u < w && assign[u] != assign[w] {
                c += 1;
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_known_values() {
        let run = exact_alpha(&Graph::cycle(5), DEFAULT_NODE_BUDGET);
        assert_eq!(run.outcome.exact().unwrap().0, 2);
        let run = exact_alpha(&Graph::complete_bipartite(3, 3), DEFAULT_NODE_BUDGET);
        assert_eq!(run.outcome.exact().unwrap().0, 3);
        let run = exact_alpha(&Graph::petersen(), DEFAULT_NODE_BUDGET);
        assert_eq!(run.outcome.exact().unwrap().0, 4);
        let (size, set) = run.outcome.exact().unwrap().clone();
        assert_eq!(set.len(), size);
        assert!(is_independent(&Graph::petersen(), &set));
    }

    #[test]
    fn alpha_budget_exhaustion_is_unknown() {
        let run = exact_alpha(&Graph::petersen(), 2);
        assert!(run.outcome.is_unknown());
    }

    #[test]
    fn chi_known_values() {
        assert_eq!(exact_chi(&Graph::cycle(5), DEFAULT_NODE_BUDGET).outcome.exact().unwrap().0, 3);
        assert_eq!(exact_chi(&Graph::complete(4), DEFAULT_NODE_BUDGET).outcome.exact().unwrap().0, 4);
        assert_eq!(exact_chi(&Graph::petersen(), DEFAULT_NODE_BUDGET).outcome.exact().unwrap().0, 3);
        assert_eq!(exact_chi(&Graph::complete_bipartite(4, 4), DEFAULT_NODE_BUDGET).outcome.exact().unwrap().0, 2);
        let empty = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(exact_chi(&empty, DEFAULT_NODE_BUDGET).outcome.exact().unwrap().0, 1);
    }

    #[test]
    fn maxcut_known_values() {
        assert_eq!(exact_maxcut(&Graph::complete(4)).0, 4);
        assert_eq!(exact_maxcut(&Graph::cycle(5)).0, 4);
        assert_eq!(exact_maxcut(&Graph::complete_bipartite(3, 3)).0, 9);
        let (best, side) = exact_maxcut(&Graph::petersen());
        assert_eq!(best, 12);
        assert_eq!(cut_size(&Graph::petersen(), &side), best);
    }

    #[test]
    fn local_maxcut_is_valid_lower_bound() {
        let g = Graph::petersen();
        let (c, side) = local_maxcut(&g, 5);
        assert_eq!(cut_size(&g, &side), c);
        assert!(c <= 12);
    }

    #[test]
    fn hamilton_cases() {
        let run = hamilton_search(&Graph::cycle(5), DEFAULT_NODE_BUDGET);
        match run.outcome.exact().unwrap() {
            HamiltonResult::Found(cycle) => assert!(is_hamilton_cycle(&Graph::cycle(5), cycle)),
            HamiltonResult::Absent => panic!("C5 is Hamiltonian"),
        }
        // hypohamiltonian: no Hamilton cycle in the Petersen graph
        let run = hamilton_search(&Graph::petersen(), DEFAULT_NODE_BUDGET);
        assert_eq!(*run.outcome.exact().unwrap(), HamiltonResult::Absent);
        assert_eq!(hamilton_count(&Graph::cycle(5)), 1);
        assert_eq!(hamilton_count(&Graph::complete(5)), 12);
        assert_eq!(hamilton_count(&Graph::petersen()), 0);
    }

    #[test]
    fn matching_known_values() {
        assert!(has_perfect_matching(&Graph::complete(4)));
        assert!(!has_perfect_matching(&Graph::cycle(5)));
        assert!(has_perfect_matching(&Graph::petersen()));
        assert_eq!(count_perfect_matchings(&Graph::cycle(6)), 2);
        assert_eq!(count_perfect_matchings(&Graph::complete(4)), 3);
        assert_eq!(count_perfect_matchings(&Graph::petersen()), 6);
        // star: maximum matching is one edge
        let star = Graph::complete_bipartite(1, 5);
        assert_eq!(matching_size(&max_matching(&star)), 1);
    }

    #[test]
    fn blossom_handles_odd_components() {
        // two triangles joined by an edge: perfect matching exists
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap();
        assert!(has_perfect_matching(&g));
        // two disjoint triangles: none
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!has_perfect_matching(&g));
        assert_eq!(matching_size(&max_matching(&g)), 2);
    }

    #[test]
    fn tutte_probe_agrees_with_blossom_on_random_graphs() {
        for trial in 0..200u64 {
            let n = 6 + (trial % 13) as usize * 2; // even sizes 6..30
            let built = crate::construct::gnp(n, 0.3, 1000 + trial);
            let g = &built.graph;
            let deterministic = has_perfect_matching(g);
            let randomized = tutte_matrix_probe(g, 777 + trial, 8);
            assert_eq!(deterministic, randomized, "disagreement on trial {trial}");
        }
    }

    #[test]
    fn subgraph_counting() {
        let k3 = Graph::complete(3);
        assert_eq!(count_labeled_copies(&Graph::complete(4), &k3), 24);
        // labeled edges: 2m
        let k2 = Graph::complete(2);
        assert_eq!(count_labeled_copies(&Graph::petersen(), &k2), 30);
        // induced paths on 3 vertices in K4: none (every triple is a triangle)
        let p3 = Graph::path(3);
        assert_eq!(count_labeled_induced_copies(&Graph::complete(4), &p3), 0);
        assert_eq!(count_labeled_copies(&Graph::complete(4), &p3), 24);
        assert_eq!(automorphism_count(&k3), 6);
        assert_eq!(automorphism_count(&Graph::cycle(5)), 10);
        assert_eq!(automorphism_count(&Graph::path(3)), 2);
    }

    #[test]
    fn triangle_count_matches_walk_trace() {
        // Tr(A^3) = 6 * number of triangles on loopless graphs
        for g in [Graph::complete(5), Graph::complete_bipartite(3, 3), Graph::cycle(7)] {
            let tr = crate::spectral::circuit_count(&g, 3).unwrap();
            let labeled = count_labeled_copies(&g, &Graph::complete(3));
            assert_eq!(tr, BigUint::from(labeled));
        }
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(count_spanning_trees(&Graph::complete(4)), BigUint::from(16u32));
        assert_eq!(count_spanning_trees(&Graph::cycle(5)), BigUint::from(5u32));
        assert_eq!(count_spanning_trees(&Graph::petersen()), BigUint::from(2000u32));
        // Cayley's formula on a few sizes
        for n in 2..=8usize {
            let expect = BigUint::from(n as u64).pow(n as u32 - 2);
            assert_eq!(count_spanning_trees(&Graph::complete(n)), expect);
        }
        let disconnected = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(count_spanning_trees(&disconnected), BigUint::from(0u32));
    }

    #[test]
    fn triangle_factor_cases() {
        let run = triangle_factor(&Graph::complete(6), DEFAULT_NODE_BUDGET);
        let factor = run.outcome.exact().unwrap().clone().unwrap();
        assert_eq!(factor.len(), 2);
        let run = triangle_factor(&Graph::cycle(9), DEFAULT_NODE_BUDGET);
        assert!(run.outcome.exact().unwrap().is_none());
        // complete tripartite K_{3,3,3}: transversal triangles exist
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, b));
            }
        }
        for b in 3..6 {
            for c in 6..9 {
                edges.push((b, c));
            }
        }
        for a in 0..3 {
            for c in 6..9 {
                edges.push((a, c));
            }
        }
        let k333 = Graph::from_edge_list(9, &edges).unwrap();
        let run = triangle_factor(&k333, DEFAULT_NODE_BUDGET);
        assert!(run.outcome.exact().unwrap().is_some());
    }

    #[test]
    fn turan_numbers_small() {
        // largest triangle-free subgraph of K4 is C4
        let run = turan_number(&Graph::complete(4), 3, DEFAULT_NODE_BUDGET);
        assert_eq!(run.outcome.exact().unwrap().exact(), Some(4));
        // largest K5-free subgraph of K5 drops one edge
        let run = turan_number(&Graph::complete(5), 5, DEFAULT_NODE_BUDGET);
        assert_eq!(run.outcome.exact().unwrap().exact(), Some(9));
        // largest triangle-free subgraph of K5 is K_{2,3}
        let run = turan_number(&Graph::complete(5), 3, DEFAULT_NODE_BUDGET);
        assert_eq!(run.outcome.exact().unwrap().exact(), Some(6));
        // bipartite graphs are already triangle-free
        let g = Graph::complete_bipartite(3, 4);
        let run = turan_number(&g, 3, DEFAULT_NODE_BUDGET);
        assert_eq!(run.outcome.exact().unwrap().exact(), Some(12));
    }

    #[test]
    fn greedy_independent_cases() {
        let empty = Graph::from_edge_list(4, &[]).unwrap();
        assert_eq!(greedy_independent(&empty, &[0, 1, 2, 3]), vec![0, 1, 2, 3]);
        let c5 = Graph::cycle(5);
        let set = greedy_independent(&c5, &[0, 1, 2, 3, 4]);
        assert_eq!(set.len(), 2);
        assert!(is_independent(&c5, &set));
    }

    #[test]
    fn greedy_coloring_cases() {
        // complete graph: every extraction is a singleton
        let kn = Graph::complete(6);
        let gc = greedy_coloring(&kn, 5.0, 1.0);
        assert!(is_proper_coloring(&kn, &gc.colors));
        assert_eq!(gc.color_count, 6);
        let empty = Graph::from_edge_list(5, &[]).unwrap();
        let gc = greedy_coloring(&empty, 1.0, 0.0);
        assert_eq!(gc.color_count, 1);
    }

    #[test]
    fn turan_partition_cases() {
        let k4 = Graph::complete(4);
        let assign = greedy_turan_partition(&k4, 2);
        for v in 0..4 {
            let internal = k4.neighbors(v).iter().filter(|&&w| assign[w as usize] == assign[v]).count();
            assert!(internal * 2 <= k4.degree(v));
        }
        assert!(cross_edges(&k4, &assign) >= 3); // (t-2)/(t-1) * m = 3
        // a bipartite graph's own bipartition is a fixed point
        let g = Graph::complete_bipartite(3, 3);
        let assign = greedy_turan_partition(&g, 2);
        assert_eq!(cross_edges(&g, &assign), 9);
        // K6 into 3 parts keeps at least 2/3 of the edges
        let k6 = Graph::complete(6);
        let assign = greedy_turan_partition(&k6, 3);
        assert!(cross_edges(&k6, &assign) >= 10);
    }

    #[test]
    fn alpha_cover_duality_on_bipartite_graphs() {
        // Konig: on bipartite graphs, alpha = n - maximum matching
        for (a, b) in [(3usize, 3usize), (2, 5), (4, 4)] {
            let g = Graph::complete_bipartite(a, b);
            let alpha = exact_alpha(&g, DEFAULT_NODE_BUDGET).outcome.exact().unwrap().0;
            let matching = matching_size(&max_matching(&g));
            assert_eq!(alpha + matching, g.n());
        }
        for seed in 0..20u64 {
            // random bipartite graph on 6 + 6
            let mut rng = SplitMix64::new(seed);
            let mut edges = Vec::new();
            for u in 0..6 {
                for v in 6..12 {
                    if rng.bernoulli(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(12, &edges).unwrap();
            let alpha = exact_alpha(&g, DEFAULT_NODE_BUDGET).outcome.exact().unwrap().0;
            let matching = matching_size(&max_matching(&g));
            assert_eq!(alpha + matching, g.n(), "Konig duality failed at seed {seed}");
        }
    }
}
