//! Brute-force references and graph generators.
//!
//! Everything here is quadratic or worse and meant for small inputs only.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dfs::{three_edge_connectivity, DfsParams, DfsTree, EdgeKind, NIL};
use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::graph::{connected_components, MultiGraph, Partition};

/// Largest edge count accepted by the exhaustive cut enumerations.
pub const MAX_BRUTE_EDGES: usize = 64;
/// Largest vertex count accepted by the pairwise flow oracle.
pub const MAX_BRUTE_VERTICES: usize = 256;

/// Maximum number of edge-disjoint `s`-`t` paths, stopping early at `cap`.
pub fn capped_edge_connectivity(g: &MultiGraph, s: usize, t: usize, cap: usize) -> usize {
    assert_ne!(s, t);
    // Arc 2e goes u->v, arc 2e+1 goes v->u; each has capacity 1.
    let mut flow = vec![0i8; 2 * g.m()];
    let mut value = 0;
    let mut pred = vec![NIL; g.n()];
    while value < cap {
        pred.iter_mut().for_each(|p| *p = NIL);
        pred[s] = usize::MAX - 1;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(x) = queue.pop_front() {
            for (y, e) in g.neighbors(x) {
                let arc = if g.edge(e).0 == x { 2 * e } else { 2 * e + 1 };
                if pred[y] == NIL && flow[arc] < 1 {
                    pred[y] = arc;
                    if y == t {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if pred[t] == NIL {
            break;
        }
        let mut y = t;
        while y != s {
            let arc = pred[y];
            flow[arc] += 1;
            flow[arc ^ 1] -= 1;
            let (a, b) = g.edge(arc / 2);
            y = if arc % 2 == 0 { a } else { b };
        }
        value += 1;
    }
    value
}

pub fn pair_edge_connectivity(g: &MultiGraph, s: usize, t: usize) -> usize {
    capped_edge_connectivity(g, s, t, usize::MAX)
}

/// Classes of the relation "at least `k` edge-disjoint paths".
///
/// Panics if the relation computed by flows is not transitive.
pub fn brute_kecc(g: &MultiGraph, k: usize) -> Result<Partition> {
    let n = g.n();
    if n > MAX_BRUTE_VERTICES {
        return Err(Error::SizeGuard { what: "n", value: n, limit: MAX_BRUTE_VERTICES });
    }
    let mut rel = vec![vec![false; n]; n];
    for s in 0..n {
        rel[s][s] = true;
        for t in s + 1..n {
            let ok = capped_edge_connectivity(g, s, t, k) >= k;
            rel[s][t] = ok;
            rel[t][s] = ok;
        }
    }
    let mut label = vec![NIL; n];
    for s in 0..n {
        if label[s] == NIL {
            for t in s..n {
                if rel[s][t] {
                    assert_eq!(label[t], NIL, "relation not transitive at {s},{t}");
                    label[t] = s;
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            assert_eq!(rel[a][b], label[a] == label[b], "relation not an equivalence at {a},{b}");
        }
    }
    Ok(Partition::from_dense_labels(&label, n))
}

fn component_count_without(g: &MultiGraph, removed: &[usize]) -> usize {
    let mut d = Dsu::new(g.n());
    let mut count = g.n();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !removed.contains(&e) && d.find(u) != d.find(v) {
            d.union(u, v);
            count -= 1;
        }
    }
    count
}

fn guard_edges(g: &MultiGraph) -> Result<()> {
    if g.m() > MAX_BRUTE_EDGES {
        return Err(Error::SizeGuard { what: "m", value: g.m(), limit: MAX_BRUTE_EDGES });
    }
    Ok(())
}

/// Every edge triple whose removal splits a 3-edge-connected graph in two.
pub fn brute_3cuts(g: &MultiGraph) -> Result<BTreeSet<[usize; 3]>> {
    guard_edges(g)?;
    let m = g.m();
    let mut out = BTreeSet::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if component_count_without(g, &[a, b, c]) == 2 {
                    out.insert([a, b, c]);
                }
            }
        }
    }
    Ok(out)
}

/// Number of 3-edge sets whose removal increases the component count while
/// no proper subset does.
pub fn brute_min_3cut_count(g: &MultiGraph) -> Result<u128> {
    guard_edges(g)?;
    let m = g.m();
    let base = connected_components(g).count();
    let is_cut = |r: &[usize]| component_count_without(g, r) > base;
    let single: Vec<bool> = (0..m).map(|e| is_cut(&[e])).collect();
    let mut pair = vec![vec![false; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            pair[a][b] = is_cut(&[a, b]);
        }
    }
    let mut count = 0;
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if single[a] || single[b] || single[c] || pair[a][b] || pair[a][c] || pair[b][c] {
                    continue;
                }
                if is_cut(&[a, b, c]) {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// DFS parameters recomputed from explicit `B(v)` sets.
#[derive(Debug, Clone)]
pub struct NaiveParams {
    /// `B(v)` as `(tail, head, edge id)`, sorted by `(head, edge id)`.
    pub b: Vec<Vec<(usize, usize, usize)>>,
    pub b_count: Vec<usize>,
    pub l: Vec<usize>,
    pub l_edge: Vec<usize>,
    pub low: Vec<usize>,
    /// First and second element of `B(v)` as `(tail, head, edge id)`.
    pub low1: Vec<Option<(usize, usize, usize)>>,
    pub low2: Vec<Option<(usize, usize, usize)>>,
    pub high: Vec<usize>,
    /// Witness for `high`: the smallest edge id among back-edges with that head.
    pub high_witness: Vec<Option<(usize, usize, usize)>>,
    pub m: Vec<usize>,
    pub next_m: Vec<usize>,
    pub last_m: Vec<usize>,
    pub m_tilde: Vec<usize>,
    pub m_low1: Vec<usize>,
    pub m_low2: Vec<usize>,
    pub low1_child: Vec<usize>,
    pub low2_child: Vec<usize>,
}

pub fn naive_params(t: &DfsTree) -> NaiveParams {
    let n = t.n();
    let mut b = vec![Vec::new(); n];
    for (e, &(x, y)) in t.ends.iter().enumerate() {
        if t.kind[e] != EdgeKind::Back {
            continue;
        }
        // Walk from the tail up to, but excluding, the head.
        let mut v = x;
        while v != y {
            b[v].push((x, y, e));
            v = t.parent[v];
        }
    }
    for list in &mut b {
        list.sort_by_key(|&(_, y, e)| (y, e));
    }
    let nca = |xs: &mut dyn Iterator<Item = usize>| -> usize {
        let mut acc = NIL;
        for x in xs {
            acc = if acc == NIL { x } else { nca_pair(t, acc, x) };
        }
        acc
    };

    let mut l: Vec<usize> = (0..n).collect();
    let mut l_edge = vec![NIL; n];
    for (e, &(x, y)) in t.ends.iter().enumerate() {
        if t.kind[e] == EdgeKind::Back && (y, e) < (l[x], l_edge[x]) {
            l[x] = y;
            l_edge[x] = e;
        }
    }
    let b_count: Vec<usize> = b.iter().map(Vec::len).collect();
    let low1: Vec<_> = b.iter().map(|s| s.first().copied()).collect();
    let low2: Vec<_> = b.iter().map(|s| s.get(1).copied()).collect();
    let high_witness: Vec<_> = b
        .iter()
        .map(|s| {
            let top = s.iter().map(|&(_, y, _)| y).max()?;
            s.iter().copied().filter(|&(_, y, _)| y == top).min_by_key(|&(_, _, e)| e)
        })
        .collect();
    let low: Vec<usize> = (0..n).map(|v| b[v].first().map_or(NIL, |&(_, y, _)| y)).collect();
    let high: Vec<usize> = (0..n).map(|v| b[v].iter().map(|&(_, y, _)| y).max().unwrap_or(NIL)).collect();

    let mut low1_child = vec![NIL; n];
    let mut low2_child = vec![NIL; n];
    for v in 0..n {
        let mut cs: Vec<usize> = t.children(v).to_vec();
        cs.sort_by_key(|&c| (low[c], c));
        low1_child[v] = cs.first().copied().unwrap_or(NIL);
        low2_child[v] = cs.get(1).copied().unwrap_or(NIL);
    }

    let mut m = vec![NIL; n];
    let mut m_tilde = vec![NIL; n];
    let mut m_low1 = vec![NIL; n];
    let mut m_low2 = vec![NIL; n];
    for v in 1..n {
        if b[v].is_empty() {
            continue;
        }
        let mv = nca(&mut b[v].iter().map(|&(x, _, _)| x));
        m[v] = mv;
        m_tilde[v] = nca(&mut b[v].iter().map(|&(x, _, _)| x).filter(|&x| x != mv));
        for (child, out) in [(low1_child[mv], &mut m_low1), (low2_child[mv], &mut m_low2)] {
            if child != NIL {
                out[v] = nca(&mut b[v].iter().map(|&(x, _, _)| x).filter(|&x| t.is_descendant(x, child)));
            }
        }
    }
    let mut next_m = vec![NIL; n];
    let mut last_m = vec![NIL; n];
    for v in 1..n {
        if m[v] == NIL {
            continue;
        }
        next_m[v] = (1..v).rev().find(|&u| m[u] == m[v]).unwrap_or(NIL);
        last_m[v] = (1..=v).find(|&u| m[u] == m[v]).unwrap();
    }
    NaiveParams {
        b,
        b_count,
        l,
        l_edge,
        low,
        low1,
        low2,
        high,
        high_witness,
        m,
        next_m,
        last_m,
        m_tilde,
        m_low1,
        m_low2,
        low1_child,
        low2_child,
    }
}

impl NaiveParams {
    /// Names the first field where `p` disagrees, with the vertex and values.
    pub fn first_mismatch(&self, p: &DfsParams) -> Option<String> {
        let split = |x: &Option<(usize, usize, usize)>| x.map_or([NIL; 3], |(d, y, e)| [y, d, e]);
        let b = &p.base;
        let h = &p.high;
        let n = self.b.len();
        for v in 0..n {
            let checks: [(&str, Vec<usize>, Vec<usize>); 14] = [
                ("b_count", vec![b.b_count[v]], vec![self.b_count[v]]),
                ("l", vec![b.l[v], b.l_edge[v]], vec![self.l[v], self.l_edge[v]]),
                ("low1", vec![b.low1[v], b.low1_d[v], b.low1_edge[v]], split(&self.low1[v]).to_vec()),
                ("low2", vec![b.low2[v], b.low2_d[v], b.low2_edge[v]], split(&self.low2[v]).to_vec()),
                ("low", vec![b.low(v)], vec![self.low[v]]),
                ("high", vec![h.high[v], h.high_d[v], h.high_edge[v]], split(&self.high_witness[v]).to_vec()),
                ("low1_child", vec![b.low1_child[v]], vec![self.low1_child[v]]),
                ("low2_child", vec![b.low2_child[v]], vec![self.low2_child[v]]),
                ("M", vec![p.chain.m[v]], vec![self.m[v]]),
                ("nextM", vec![p.chain.next_m[v]], vec![self.next_m[v]]),
                ("lastM", vec![p.chain.last_m[v]], vec![self.last_m[v]]),
                ("M~", vec![p.variants.m_tilde[v]], vec![self.m_tilde[v]]),
                ("M_low1", vec![p.variants.m_low1[v]], vec![self.m_low1[v]]),
                ("M_low2", vec![p.variants.m_low2[v]], vec![self.m_low2[v]]),
            ];
            for (name, got, want) in checks {
                if got != want {
                    return Some(format!("{name}({v}): got {got:?}, naive {want:?}"));
                }
            }
        }
        None
    }
}

fn nca_pair(t: &DfsTree, mut a: usize, b: usize) -> usize {
    while !t.is_descendant(b, a) {
        a = t.parent[a];
    }
    a
}

/// Graph families used by tests, the CLI and benchmarks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Vertices 0 and 1 joined by three paths of length two.
    Theta,
    /// Two triangles joined by a perfect matching.
    Prism,
    /// Hub 0 joined to every vertex of the rim cycle `1..=rim`.
    Wheel {
        rim: usize,
    },
    /// Two copies of K5 joined by the edges (0,5), (1,6), (2,7).
    TwinK5,
    /// Random Hamiltonian cycle plus a random chord cover plus `extra` random
    /// chords, regenerated until 3-edge-connected.
    Random3ec {
        n: usize,
        extra: usize,
    },
    /// `m` uniformly random non-loop edges.
    RandomGeneral {
        n: usize,
        m: usize,
    },
    Grid {
        rows: usize,
        cols: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub model: Model,
    pub seed: u64,
}

pub const RANDOM_3EC_ATTEMPTS: usize = 100;

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Complete { .. } => "complete",
            Model::Cycle { .. } => "cycle",
            Model::Theta => "theta",
            Model::Prism => "prism",
            Model::Wheel { .. } => "wheel",
            Model::TwinK5 => "twin_k5",
            Model::Random3ec { .. } => "random_3ec",
            Model::RandomGeneral { .. } => "random_general",
            Model::Grid { .. } => "grid",
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (n, edges) = match spec.model {
        Model::Complete { n } => {
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    e.push((u, v));
                }
            }
            (n, e)
        }
        Model::Cycle { n } => {
            if n < 2 {
                return Err(Error::InvalidSpec("cycle needs n >= 2".into()));
            }
            (n, (0..n).map(|i| (i, (i + 1) % n)).collect())
        }
        Model::Theta => (5, vec![(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]),
        Model::Prism => (6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
        Model::Wheel { rim } => {
            if rim < 3 {
                return Err(Error::InvalidSpec("wheel needs rim >= 3".into()));
            }
            let mut e: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
            e.extend((1..=rim).map(|i| (i, i % rim + 1)));
            (rim + 1, e)
        }
        Model::TwinK5 => {
            let mut e = Vec::new();
            for off in [0, 5] {
                for u in 0..5 {
                    for v in u + 1..5 {
                        e.push((off + u, off + v));
                    }
                }
            }
            e.extend([(0, 5), (1, 6), (2, 7)]);
            (10, e)
        }
        Model::Random3ec { n, extra } => return random_3ec(&mut rng, n, extra),
        Model::RandomGeneral { n, m } => {
            if n < 2 && m > 0 {
                return Err(Error::InvalidSpec("edges need n >= 2".into()));
            }
            (n, (0..m).map(|_| random_pair(&mut rng, n)).collect())
        }
        Model::Grid { rows, cols } => {
            let id = |r: usize, c: usize| r * cols + c;
            let mut e = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        e.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        e.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            (rows * cols, e)
        }
    };
    MultiGraph::new(n, edges)
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    (u, v)
}

fn random_3ec(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Result<MultiGraph> {
    if n == 0 {
        return Err(Error::InvalidSpec("random_3ec needs n >= 1".into()));
    }
    if n == 1 {
        return MultiGraph::new(1, vec![]);
    }
    for _ in 0..RANDOM_3EC_ATTEMPTS {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect();
        perm.shuffle(rng);
        for pair in perm.chunks(2) {
            match *pair {
                [a, b] => edges.push((a, b)),
                [a] => {
                    let mut b = rng.gen_range(0..n - 1);
                    if b >= a {
                        b += 1;
                    }
                    edges.push((a, b));
                }
                _ => unreachable!(),
            }
        }
        for _ in 0..extra {
            edges.push(random_pair(rng, n));
        }
        // Otherwise a DFS would just follow the Hamiltonian cycle.
        edges.shuffle(rng);
        let g = MultiGraph::new(n, edges)?;
        if three_edge_connectivity(&g).is_ok() {
            return Ok(g);
        }
    }
    Err(Error::RetryExhausted(RANDOM_3EC_ATTEMPTS))
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rng);
    p
}
