//! DFS tree and the per-vertex parameters built on it.
//!
//! After [`DfsTree::build`] every vertex is identified with its preorder
//! number; all arrays in this module are indexed by preorder id and the root
//! is `0`. Edge ids are those of the input graph.
//!
//! For a non-root vertex `v`, `B(v)` is the set of back-edges `(x, y)` with
//! `x` in the subtree `T(v)` and `y` a proper ancestor of `v`. A back-edge is
//! written `(tail, head)` with the tail being the descendant endpoint.

use crate::dsu::TreeDsu;
use crate::error::{Error, Result, SmallCut};
use crate::graph::MultiGraph;

/// Sentinel for "no vertex" / "no edge" / "undefined".
///
/// It compares greater than every vertex id, so a test such as
/// `low(c) < v` is false for an undefined `low`.
pub const NIL: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Tree,
    Back,
}

#[derive(Debug, Clone)]
pub struct DfsTree {
    /// Root in the input graph's vertex ids.
    pub root: usize,
    /// Preorder id -> input vertex id.
    pub vertex: Vec<usize>,
    /// Input vertex id -> preorder id.
    pub pre: Vec<usize>,
    pub parent: Vec<usize>,
    /// Edge id of the tree edge `(v, parent(v))`; `NIL` at the root.
    pub parent_edge: Vec<usize>,
    /// Number of descendants, `v` included.
    pub nd: Vec<usize>,
    pub kind: Vec<EdgeKind>,
    /// Per edge id: `(lower, upper)` endpoints in preorder ids. For tree edges
    /// this is `(child, parent)`, for back-edges `(tail, head)`.
    pub ends: Vec<(usize, usize)>,
    child_start: Vec<usize>,
    children: Vec<usize>,
    up_start: Vec<usize>,
    up: Vec<(usize, usize)>,
    down_start: Vec<usize>,
    down: Vec<(usize, usize)>,
}

impl DfsTree {
    /// Runs an iterative DFS from `root`, scanning adjacency lists in order.
    ///
    /// Only the edge used to enter a vertex is skipped when looking back at
    /// its parent, so extra copies of a parallel tree edge become back-edges.
    pub fn build(g: &MultiGraph, root: usize) -> Result<DfsTree> {
        let n = g.n();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut pre = vec![NIL; n];
        let mut vertex = Vec::with_capacity(n);
        let mut parent = vec![NIL; n];
        let mut parent_edge = vec![NIL; n];
        let mut kind = vec![EdgeKind::Back; g.m()];

        pre[root] = 0;
        vertex.push(root);
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, i) = *top;
            if i == g.degree(v) {
                stack.pop();
                continue;
            }
            top.1 += 1;
            let (w, e) = g.neighbor(v, i);
            if pre[w] == NIL {
                let p = vertex.len();
                pre[w] = p;
                vertex.push(w);
                parent[p] = pre[v];
                parent_edge[p] = e;
                kind[e] = EdgeKind::Tree;
                stack.push((w, 0));
            }
        }
        if vertex.len() < n {
            let missing = pre.iter().position(|&p| p == NIL).unwrap();
            return Err(Error::Disconnected(missing));
        }

        let mut nd = vec![1usize; n];
        for v in (1..n).rev() {
            nd[parent[v]] += nd[v];
        }

        let ends: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (pre[a], pre[b]);
                (a.max(b), a.min(b))
            })
            .collect();

        let mut child_count = vec![0usize; n];
        for v in 1..n {
            child_count[parent[v]] += 1;
        }
        let (child_start, children) = csr(n, &child_count, (1..n).map(|v| (parent[v], v)));

        let mut up_count = vec![0usize; n];
        let mut down_count = vec![0usize; n];
        for (e, &(x, y)) in ends.iter().enumerate() {
            if kind[e] == EdgeKind::Back {
                up_count[x] += 1;
                down_count[y] += 1;
            }
        }
        let backs = || ends.iter().enumerate().filter(|&(e, _)| kind[e] == EdgeKind::Back);
        let (up_start, up) = csr(n, &up_count, backs().map(|(e, &(x, y))| (x, (y, e))));
        let (down_start, down) = csr(n, &down_count, backs().map(|(e, &(x, y))| (y, (x, e))));

        Ok(DfsTree {
            root,
            vertex,
            pre,
            parent,
            parent_edge,
            nd,
            kind,
            ends,
            child_start,
            children,
            up_start,
            up,
            down_start,
            down,
        })
    }

    pub fn n(&self) -> usize {
        self.vertex.len()
    }

    /// `u ∈ T(v)`, in preorder ids.
    #[inline]
    pub fn is_descendant(&self, u: usize, v: usize) -> bool {
        v <= u && u < v + self.nd[v]
    }

    /// Children of `v` in increasing preorder.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[self.child_start[v]..self.child_start[v + 1]]
    }

    /// Back-edges whose tail is `v`, as `(head, edge id)`.
    pub fn up_edges(&self, v: usize) -> &[(usize, usize)] {
        &self.up[self.up_start[v]..self.up_start[v + 1]]
    }

    /// Back-edges whose head is `v`, as `(tail, edge id)`.
    pub fn down_edges(&self, v: usize) -> &[(usize, usize)] {
        &self.down[self.down_start[v]..self.down_start[v + 1]]
    }
}

fn csr<T: Copy + Default>(n: usize, count: &[usize], items: impl Iterator<Item = (usize, T)>) -> (Vec<usize>, Vec<T>) {
    let mut start = vec![0usize; n + 1];
    for v in 0..n {
        start[v + 1] = start[v] + count[v];
    }
    let mut fill = start.clone();
    let mut out = vec![T::default(); start[n]];
    for (k, item) in items {
        out[fill[k]] = item;
        fill[k] += 1;
    }
    (start, out)
}

/// Parameters computable in one bottom-up pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseParams {
    /// Lowest head of a back-edge leaving `v` itself, or `v` if there is none.
    pub l: Vec<usize>,
    /// Edge id realizing `l(v)` (smallest id among ties), or `NIL`.
    pub l_edge: Vec<usize>,
    pub b_count: Vec<usize>,
    /// The two smallest back-edges of `B(v)` under the order (head, edge id):
    /// head, tail and edge id. `NIL` where `B(v)` is too small.
    pub low1: Vec<usize>,
    pub low1_d: Vec<usize>,
    pub low1_edge: Vec<usize>,
    pub low2: Vec<usize>,
    pub low2_d: Vec<usize>,
    pub low2_edge: Vec<usize>,
    /// Children of `v` with the smallest and second smallest `low`, ties broken
    /// by preorder.
    pub low1_child: Vec<usize>,
    pub low2_child: Vec<usize>,
}

impl BaseParams {
    #[inline]
    pub fn low(&self, v: usize) -> usize {
        if v == NIL {
            NIL
        } else {
            self.low1[v]
        }
    }
}

#[derive(Clone, Copy)]
struct BackRef {
    head: usize,
    edge: usize,
    tail: usize,
}

const NO_BACK: BackRef = BackRef { head: NIL, edge: NIL, tail: NIL };

impl BackRef {
    fn key(&self) -> (usize, usize) {
        (self.head, self.edge)
    }
}

#[derive(Clone, Copy)]
struct Best2([BackRef; 2]);

impl Best2 {
    fn push(&mut self, b: BackRef) {
        if b.key() < self.0[0].key() {
            self.0[1] = self.0[0];
            self.0[0] = b;
        } else if b.key() < self.0[1].key() {
            self.0[1] = b;
        }
    }
}

pub fn compute_base_params(t: &DfsTree) -> BaseParams {
    let n = t.n();
    let mut p = BaseParams {
        l: (0..n).collect(),
        l_edge: vec![NIL; n],
        b_count: vec![0; n],
        low1: vec![NIL; n],
        low1_d: vec![NIL; n],
        low1_edge: vec![NIL; n],
        low2: vec![NIL; n],
        low2_d: vec![NIL; n],
        low2_edge: vec![NIL; n],
        low1_child: vec![NIL; n],
        low2_child: vec![NIL; n],
    };
    for v in (0..n).rev() {
        let mut best = Best2([NO_BACK; 2]);
        let mut count = 0usize;
        for &(head, edge) in t.up_edges(v) {
            count += 1;
            best.push(BackRef { head, edge, tail: v });
            if (head, edge) < (p.l[v], p.l_edge[v]) || p.l_edge[v] == NIL {
                p.l[v] = head;
                p.l_edge[v] = edge;
            }
        }
        let (mut c1, mut c2) = (NIL, NIL);
        for &c in t.children(v) {
            count += p.b_count[c];
            for (head, edge, tail) in
                [(p.low1[c], p.low1_edge[c], p.low1_d[c]), (p.low2[c], p.low2_edge[c], p.low2_d[c])]
            {
                if head < v {
                    best.push(BackRef { head, edge, tail });
                }
            }
            if c1 == NIL || p.low1[c] < p.low1[c1] {
                c2 = c1;
                c1 = c;
            } else if c2 == NIL || p.low1[c] < p.low1[c2] {
                c2 = c;
            }
        }
        p.b_count[v] = count - t.down_edges(v).len();
        p.low1_child[v] = c1;
        p.low2_child[v] = c2;
        let [a, b] = best.0;
        (p.low1[v], p.low1_d[v], p.low1_edge[v]) = (a.head, a.tail, a.edge);
        (p.low2[v], p.low2_d[v], p.low2_edge[v]) = (b.head, b.tail, b.edge);
    }
    // The root has no B-set; what the loop left there is meaningless.
    p.b_count[0] = 0;
    for a in [&mut p.low1, &mut p.low1_d, &mut p.low1_edge, &mut p.low2, &mut p.low2_d, &mut p.low2_edge] {
        a[0] = NIL;
    }
    p
}

/// `high(v)`: the greatest head over `B(v)`, with a witness tail and edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighParams {
    pub high: Vec<usize>,
    pub high_d: Vec<usize>,
    pub high_edge: Vec<usize>,
}

/// Heads are processed in decreasing order; each back-edge `(x, y)` assigns
/// `high = y` to every still-unassigned vertex on the tree path from `x` up
/// to (excluding) `y`. Assigned vertices are merged into their parent's set
/// so each is written once.
pub fn compute_high(t: &DfsTree) -> HighParams {
    let n = t.n();
    let mut h = HighParams { high: vec![NIL; n], high_d: vec![NIL; n], high_edge: vec![NIL; n] };
    let mut dsu = TreeDsu::new(n);
    for y in (0..n).rev() {
        for &(x, e) in t.down_edges(y) {
            let mut z = dsu.top(x);
            while z > y {
                h.high[z] = y;
                h.high_d[z] = x;
                h.high_edge[z] = e;
                let p = t.parent[z];
                let next = dsu.top(p);
                dsu.link(z, p);
                z = next;
            }
        }
    }
    h
}

/// `M(v)` is the nearest common ancestor of the tails of `B(v)`. Vertices
/// sharing the same `M` form a list in decreasing order linked by `next_m`,
/// headed by `M` itself and ending at `last_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MChain {
    pub m: Vec<usize>,
    pub next_m: Vec<usize>,
    pub last_m: Vec<usize>,
    /// Iterations of the descent loop, for scaling diagnostics.
    pub descents: usize,
}

impl MChain {
    /// `M⁻¹(m)` in decreasing order; empty if no vertex has `M = m`.
    pub fn inverse(&self, m: usize) -> impl Iterator<Item = usize> + '_ {
        let start = if self.m[m] == m { m } else { NIL };
        std::iter::successors((start != NIL).then_some(start), move |&v| {
            let nx = self.next_m[v];
            (nx != NIL).then_some(nx)
        })
    }
}

pub fn compute_m_chain(t: &DfsTree, base: &BaseParams) -> MChain {
    let n = t.n();
    let mut ch = MChain { m: vec![NIL; n], next_m: vec![NIL; n], last_m: vec![NIL; n], descents: 0 };
    for v in (1..n).rev() {
        if base.b_count[v] == 0 {
            continue;
        }
        let (mut c, mut m) = (v, v);
        loop {
            if base.l[m] < v {
                break;
            }
            let c1 = base.low1_child[m];
            let c2 = base.low2_child[m];
            if base.low(c2) < v {
                break;
            }
            debug_assert!(base.low(c1) < v);
            c = c1;
            m = ch.m[c1];
            ch.descents += 1;
        }
        ch.m[v] = m;
        if c != v {
            ch.next_m[c] = v;
        }
    }
    for v in 1..n {
        if ch.m[v] != NIL {
            let nx = ch.next_m[v];
            ch.last_m[v] = if nx == NIL { v } else { ch.last_m[nx] };
        }
    }
    ch
}

/// Nearest common ancestors of restricted tail sets of `B(v)`:
/// `m_tilde` over tails other than `M(v)`, `m_low1` / `m_low2` over tails
/// below the low1 / low2 child of `M(v)`. `NIL` when the set is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MVariants {
    pub m_tilde: Vec<usize>,
    pub m_low1: Vec<usize>,
    pub m_low2: Vec<usize>,
    /// `currentM` descents performed by each of the three passes.
    pub descents: [usize; 3],
}

pub fn compute_m_variants(t: &DfsTree, base: &BaseParams, chain: &MChain) -> MVariants {
    let n = t.n();
    let mut out = MVariants { m_tilde: vec![NIL; n], m_low1: vec![NIL; n], m_low2: vec![NIL; n], descents: [0; 3] };
    let mut current: Vec<usize> = (0..n).collect();

    // Shared descent: starting at `m`, move down the low1 spine until the
    // tails of B(v) below `m` no longer fit under a single child.
    let descend = |current: &[usize], mut m: usize, v: usize, steps: &mut usize| -> usize {
        loop {
            if base.l[m] < v {
                return m;
            }
            if base.low(base.low2_child[m]) < v {
                return m;
            }
            let c1 = base.low1_child[m];
            debug_assert!(base.low(c1) < v);
            m = current[c1];
            *steps += 1;
        }
    };

    for v in (1..n).rev() {
        let m = chain.m[v];
        if m == NIL {
            continue;
        }
        let c = base.low1_child[m];
        if base.low(c) >= v {
            continue;
        }
        if base.low(base.low2_child[m]) < v {
            out.m_tilde[v] = m;
            continue;
        }
        let r = descend(&current, current[c], v, &mut out.descents[0]);
        out.m_tilde[v] = r;
        current[c] = r;
    }

    for (pass, pick_low2) in [(1, false), (2, true)] {
        for (i, x) in current.iter_mut().enumerate() {
            *x = i;
        }
        for v in (1..n).rev() {
            let m = chain.m[v];
            if m == NIL {
                continue;
            }
            let c = if pick_low2 { base.low2_child[m] } else { base.low1_child[m] };
            if base.low(c) >= v {
                continue;
            }
            let r = descend(&current, current[c], v, &mut out.descents[pass]);
            if pick_low2 {
                out.m_low2[v] = r;
            } else {
                out.m_low1[v] = r;
            }
            current[c] = r;
        }
    }
    out
}

/// Everything the cut enumeration needs.
#[derive(Debug, Clone)]
pub struct DfsParams {
    pub base: BaseParams,
    pub high: HighParams,
    pub chain: MChain,
    pub variants: MVariants,
}

impl DfsParams {
    pub fn compute(t: &DfsTree) -> DfsParams {
        let base = compute_base_params(t);
        let chain = compute_m_chain(t, &base);
        DfsParams::complete(t, base, chain)
    }

    /// Finishes a computation that already has the base parameters and `M`.
    pub fn complete(t: &DfsTree, base: BaseParams, chain: MChain) -> DfsParams {
        let high = compute_high(t);
        let variants = compute_m_variants(t, &base, &chain);
        DfsParams { base, high, chain, variants }
    }
}

/// Finds a cut of size at most two, or `None` if the tree's graph is
/// 3-edge-connected: every `B(v)` has at least two edges and no two are equal.
///
/// Equal B-sets share `M` and `b_count`, and since `b_count` is monotone along
/// an `M⁻¹` list only neighbours in that list need comparing.
pub fn small_cut(t: &DfsTree, base: &BaseParams, chain: &MChain) -> Option<SmallCut> {
    for v in 1..t.n() {
        match base.b_count[v] {
            0 => return Some(SmallCut::Bridge { edge: t.parent_edge[v] }),
            1 => return Some(SmallCut::TwoCut { edges: sorted2(t.parent_edge[v], base.low1_edge[v]) }),
            _ => {}
        }
    }
    for v in 1..t.n() {
        let w = chain.next_m[v];
        if w != NIL && base.b_count[v] == base.b_count[w] {
            return Some(SmallCut::TwoCut { edges: sorted2(t.parent_edge[v], t.parent_edge[w]) });
        }
    }
    None
}

/// Checks 3-edge-connectivity of `g` with a DFS from vertex 0.
pub fn three_edge_connectivity(g: &MultiGraph) -> Result<(), SmallCut> {
    if g.n() <= 1 {
        return Ok(());
    }
    let t = match DfsTree::build(g, 0) {
        Ok(t) => t,
        Err(Error::Disconnected(v)) => return Err(SmallCut::Disconnected { vertex: v }),
        Err(e) => unreachable!("{e}"),
    };
    let base = compute_base_params(&t);
    let chain = compute_m_chain(&t, &base);
    match small_cut(&t, &base, &chain) {
        Some(c) => Err(c),
        None => Ok(()),
    }
}

fn sorted2(a: usize, b: usize) -> [usize; 2] {
    [a.min(b), a.max(b)]
}
