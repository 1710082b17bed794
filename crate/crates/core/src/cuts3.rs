//! Enumeration of all 3-edge cuts of a 3-edge-connected graph.
//!
//! Every 3-cut contains one, two or three tree edges of the DFS tree. The
//! emitters below each handle one arrangement:
//!
//! | kind | tree edges                | condition                    |
//! |------|---------------------------|------------------------------|
//! | I    | `(v,p(v))`                | `B(v) = {e1, e2}`            |
//! | IIa  | `(u,p(u)), (v,p(v))`, u>v | `B(v) = B(u) ⊔ {e}`          |
//! | IIb  | `(u,p(u)), (v,p(v))`, u>v | `B(u) = B(v) ⊔ {e}`          |
//! | III  | `u, v` in disjoint subtrees below `w` | `B(w) = B(u) ⊔ B(v)` |
//! | IV   | `u ⊂ v ⊂ w` nested        | `B(v) = B(u) ⊔ B(w)`         |
//!
//! All vertex ids are preorder ids of the tree the parameters came from.

use crate::dfs::{small_cut, DfsParams, DfsTree, NIL};
use crate::error::{Error, Result, SmallCut};
use crate::graph::MultiGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutKind {
    I,
    IIa,
    IIb,
    III,
    IV,
}

impl CutKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CutKind::I => "I",
            CutKind::IIa => "IIa",
            CutKind::IIb => "IIb",
            CutKind::III => "III",
            CutKind::IV => "IV",
        }
    }
}

impl std::fmt::Display for CutKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A back-edge, `tail` being the descendant endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BackEdge {
    pub tail: usize,
    pub head: usize,
    pub id: usize,
}

/// How a cut sits on the DFS tree, in terms of its anchor vertices.
///
/// A vertex `x` stands for the tree edge `(x, p(x))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    I { v: usize, e1: BackEdge, e2: BackEdge },
    IIa { u: usize, v: usize, e: BackEdge },
    IIb { u: usize, v: usize, e: BackEdge },
    III { u: usize, v: usize, w: usize },
    IV { u: usize, v: usize, w: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreeCut {
    /// Edge ids, ascending.
    pub edges: [usize; 3],
    pub shape: Shape,
}

impl ThreeCut {
    fn new(edges: [usize; 3], shape: Shape) -> ThreeCut {
        let mut edges = edges;
        edges.sort_unstable();
        ThreeCut { edges, shape }
    }

    pub fn kind(&self) -> CutKind {
        match self.shape {
            Shape::I { .. } => CutKind::I,
            Shape::IIa { .. } => CutKind::IIa,
            Shape::IIb { .. } => CutKind::IIb,
            Shape::III { .. } => CutKind::III,
            Shape::IV { .. } => CutKind::IV,
        }
    }
}

/// Read-only view shared by the emitters.
#[derive(Clone, Copy)]
pub struct Ctx<'a> {
    pub t: &'a DfsTree,
    pub p: &'a DfsParams,
}

impl<'a> Ctx<'a> {
    pub fn new(t: &'a DfsTree, p: &'a DfsParams) -> Self {
        Ctx { t, p }
    }

    fn n(&self) -> usize {
        self.t.n()
    }
    fn b(&self, v: usize) -> usize {
        self.p.base.b_count[v]
    }
    fn high(&self, v: usize) -> usize {
        self.p.high.high[v]
    }
    fn low(&self, v: usize) -> usize {
        self.p.base.low(v)
    }
    fn m(&self, v: usize) -> usize {
        self.p.chain.m[v]
    }
    fn next_m(&self, v: usize) -> usize {
        self.p.chain.next_m[v]
    }
    fn pe(&self, v: usize) -> usize {
        self.t.parent_edge[v]
    }
    /// Head of the list `M⁻¹(m)`, or `NIL` if the list is empty.
    fn list_head(&self, m: usize) -> usize {
        if m != NIL && self.m(m) == m {
            m
        } else {
            NIL
        }
    }
    /// The back-edge `(x, l(x))`.
    fn l_edge(&self, x: usize) -> BackEdge {
        BackEdge { tail: x, head: self.p.base.l[x], id: self.p.base.l_edge[x] }
    }
    fn high_edge(&self, u: usize) -> BackEdge {
        BackEdge { tail: self.p.high.high_d[u], head: self.high(u), id: self.p.high.high_edge[u] }
    }
    fn tree3(&self, u: usize, v: usize, w: usize) -> [usize; 3] {
        [self.pe(u), self.pe(v), self.pe(w)]
    }
}

/// One tree edge: `b_count(v) = 2`.
pub fn type1_cuts(cx: Ctx) -> Vec<ThreeCut> {
    let base = &cx.p.base;
    (1..cx.n())
        .filter(|&v| cx.b(v) == 2)
        .map(|v| {
            let e1 = BackEdge { tail: base.low1_d[v], head: base.low1[v], id: base.low1_edge[v] };
            let e2 = BackEdge { tail: base.low2_d[v], head: base.low2[v], id: base.low2_edge[v] };
            ThreeCut::new([cx.pe(v), e1.id, e2.id], Shape::I { v, e1, e2 })
        })
        .collect()
}

/// Two tree edges, `u` a descendant of `v`, `B(v) = B(u) ⊔ {e}`.
///
/// For each `v` the candidate `u` is the lowest member of `M⁻¹(m)` above `v`,
/// for `m` one of `M̃(v)`, `M_low1(v)`, `M_low2(v)`; the tail of `e` is
/// `M(v)`, `M_low2(v)` or `M_low1(v)` respectively.
pub fn type2a_cuts(cx: Ctx) -> Vec<ThreeCut> {
    let n = cx.n();
    let var = &cx.p.variants;
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    for phase in 0..3 {
        for (i, x) in current.iter_mut().enumerate() {
            *x = i;
        }
        for v in (1..n).rev() {
            let (m, x) = match phase {
                0 => (var.m_tilde[v], cx.m(v)),
                1 => (var.m_low1[v], var.m_low2[v]),
                _ => (var.m_low2[v], var.m_low1[v]),
            };
            if cx.list_head(m) == NIL || x == NIL {
                continue;
            }
            let mut u = current[m];
            while cx.next_m(u) != NIL && cx.next_m(u) > v {
                u = cx.next_m(u);
            }
            current[m] = u;
            if u > v && cx.high(u) < v && cx.b(v) == cx.b(u) + 1 {
                let e = cx.l_edge(x);
                debug_assert!(e.head < v, "extra back-edge must leap over v");
                out.push(ThreeCut::new([cx.pe(u), cx.pe(v), e.id], Shape::IIa { u, v, e }));
            }
        }
    }
    out
}

/// Two tree edges, `u` a descendant of `v`, `B(u) = B(v) ⊔ {e}`.
///
/// Here `e` is always `(highD(u), high(u))`.
pub fn type2b_cuts(cx: Ctx) -> Vec<ThreeCut> {
    let n = cx.n();
    let var = &cx.p.variants;
    let mut out = Vec::new();
    let mut emit = |u: usize, v: usize| {
        let e = cx.high_edge(u);
        out.push(ThreeCut::new([cx.pe(u), cx.pe(v), e.id], Shape::IIb { u, v, e }));
    };

    // Same M: v is the next list element below u.
    for u in 1..n {
        let v = cx.next_m(u);
        if v != NIL && cx.b(u) == cx.b(v) + 1 {
            emit(u, v);
        }
    }

    let mut current: Vec<usize> = (0..n).collect();
    for phase in 0..2 {
        for (i, x) in current.iter_mut().enumerate() {
            *x = i;
        }
        for u in (1..n).rev() {
            let m = if phase == 0 { var.m_tilde[u] } else { var.m_low1[u] };
            // M̃(u) = M(u) when the tails split below M(u), a list already
            // covered by the nextM case; M_low1(u) = M̃(u) repeats phase 0.
            let seen = if phase == 0 { cx.m(u) } else { var.m_tilde[u] };
            if m == seen || cx.list_head(m) == NIL {
                continue;
            }
            let mut v = current[m];
            while v != NIL && v >= u {
                v = cx.next_m(v);
            }
            current[m] = v;
            if v != NIL && cx.b(u) == cx.b(v) + 1 {
                emit(u, v);
            }
        }
    }
    out
}

/// Three tree edges, `u` and `v` in disjoint subtrees of `w`,
/// `B(w) = B(u) ⊔ B(v)`.
pub fn type3_cuts(cx: Ctx) -> Vec<ThreeCut> {
    let n = cx.n();
    let var = &cx.p.variants;
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    // Lowest member of M⁻¹(m) greater than w.
    let lowest_above = |current: &mut Vec<usize>, m: usize, w: usize| -> usize {
        if cx.list_head(m) == NIL {
            return NIL;
        }
        let mut u = current[m];
        while cx.next_m(u) != NIL && cx.next_m(u) > w {
            u = cx.next_m(u);
        }
        current[m] = u;
        if u > w {
            u
        } else {
            NIL
        }
    };
    for w in (1..n).rev() {
        let (m1, m2) = (var.m_low1[w], var.m_low2[w]);
        if m1 == NIL || m2 == NIL {
            continue;
        }
        let u = lowest_above(&mut current, m1, w);
        let v = lowest_above(&mut current, m2, w);
        if u == NIL || v == NIL {
            continue;
        }
        if cx.b(w) == cx.b(u) + cx.b(v) && cx.high(u) < w && cx.high(v) < w {
            out.push(ThreeCut::new(cx.tree3(u, v, w), Shape::III { u, v, w }));
        }
    }
    out
}

/// Three nested tree edges `u ⊂ v ⊂ w` with `M(v) ≠ M(w)`.
pub fn type4_diff_m_cuts(cx: Ctx) -> Vec<ThreeCut> {
    let n = cx.n();
    let var = &cx.p.variants;
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    for v in (1..n).rev() {
        let (m1, m2) = (var.m_low1[v], var.m_low2[v]);
        if cx.list_head(m1) == NIL || cx.list_head(m2) == NIL {
            continue;
        }
        let mut w = current[m1];
        while w != NIL && w >= v {
            w = cx.next_m(w);
        }
        current[m1] = w;
        let u = cx.p.chain.last_m[m2];
        if w != NIL && u > v && cx.high(u) < v && cx.b(v) == cx.b(u) + cx.b(w) {
            out.push(ThreeCut::new(cx.tree3(u, v, w), Shape::IV { u, v, w }));
        }
    }
    out
}

/// `high⁻¹(h)` for every `h`, each list in decreasing vertex order.
pub fn high_inverse(cx: Ctx) -> (Vec<usize>, Vec<usize>) {
    let n = cx.n();
    let mut start = vec![0usize; n + 1];
    for v in 1..n {
        let h = cx.high(v);
        if h != NIL {
            start[h + 1] += 1;
        }
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut items = vec![0usize; start[n]];
    for v in (1..n).rev() {
        let h = cx.high(v);
        if h != NIL {
            items[fill[h]] = v;
            fill[h] += 1;
        }
    }
    (start, items)
}

/// Walks each `high⁻¹` list, calling `f(z, run_broken)` per element, where
/// `run_broken` is set when `z` is not an ancestor of the previous element.
fn scan_runs(cx: Ctx, hinv: &(Vec<usize>, Vec<usize>), mut f: impl FnMut(usize, bool)) {
    let (start, items) = hinv;
    for h in 0..cx.n() {
        let list = &items[start[h]..start[h + 1]];
        for (i, &z) in list.iter().enumerate() {
            f(z, i == 0 || !cx.t.is_descendant(list[i - 1], z));
        }
    }
}

/// Three nested tree edges `u ⊂ v ⊂ w` with `w = nextM(v)`.
///
/// Within a run of `high⁻¹(h)` where each element is an ancestor of the
/// previous one, the candidate `u` for `v` is the stacked vertex with
/// `b_count(u) = b_count(v) - b_count(nextM(v))`.
pub fn type4_next_m_cuts(cx: Ctx, hinv: &(Vec<usize>, Vec<usize>), m_edges: usize) -> Vec<ThreeCut> {
    let mut out = Vec::new();
    let mut by_count = vec![NIL; m_edges + 1];
    let mut stack: Vec<usize> = Vec::new();
    scan_runs(cx, hinv, |z, broken| {
        if broken {
            for s in stack.drain(..) {
                by_count[cx.b(s)] = NIL;
            }
        }
        let w = cx.next_m(z);
        if w == NIL {
            stack.push(z);
            by_count[cx.b(z)] = z;
        } else if cx.b(z) > cx.b(w) {
            let v = z;
            let u = by_count[cx.b(v) - cx.b(w)];
            if u != NIL && cx.low(u) >= w {
                out.push(ThreeCut::new(cx.tree3(u, v, w), Shape::IV { u, v, w }));
            }
        }
    });
    for s in stack.drain(..) {
        by_count[cx.b(s)] = NIL;
    }
    out
}

/// For every `v` with `nextM(v) ≠ NIL`, the candidates `u` for a nested cut
/// `u ⊂ v ⊂ w` with `M(w) = M(v)` and `w` below `nextM(v)`. Each stack has
/// its deepest vertex on top.
pub fn fill_stack_u(cx: Ctx, hinv: &(Vec<usize>, Vec<usize>)) -> Vec<Vec<usize>> {
    let mut stack_u = vec![Vec::new(); cx.n()];
    let mut s: Vec<usize> = Vec::new();
    scan_runs(cx, hinv, |z, broken| {
        if broken {
            s.clear();
        }
        let next = cx.next_m(z);
        if next == NIL {
            s.push(z);
            return;
        }
        let last = cx.p.chain.last_m[z];
        while let Some(&top) = s.last() {
            if cx.low(top) < last {
                s.pop();
            } else {
                break;
            }
        }
        while let Some(&top) = s.last() {
            if cx.low(top) < next {
                s.pop();
                stack_u[z].push(top);
            } else {
                break;
            }
        }
    });
    stack_u
}

/// Three nested tree edges with `M(w) = M(v)` and `w ≠ nextM(v)`.
///
/// Returns the cuts and the number of `lowestW` descents taken.
pub fn type4_deep_m_cuts(cx: Ctx, mut stack_u: Vec<Vec<usize>>) -> (Vec<ThreeCut>, usize) {
    let n = cx.n();
    let mut out = Vec::new();
    let mut lowest_w: Vec<usize> = (0..n).map(|v| cx.next_m(v)).collect();
    let mut descents = 0;
    for v in 1..n {
        while let Some(u) = stack_u[v].pop() {
            let lu = cx.low(u);
            let mut w = lowest_w[v];
            while w != NIL && w > lu {
                w = lowest_w[w];
                descents += 1;
            }
            if w == NIL {
                continue;
            }
            lowest_w[v] = w;
            if cx.b(v) == cx.b(u) + cx.b(w) {
                out.push(ThreeCut::new(cx.tree3(u, v, w), Shape::IV { u, v, w }));
            }
        }
    }
    (out, descents)
}

/// Output of [`enumerate`].
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub cuts: Vec<ThreeCut>,
    /// Triples emitted more than once and dropped.
    pub duplicates: usize,
    pub lowest_w_descents: usize,
}

/// Runs every emitter on a 3-edge-connected graph's DFS data.
pub fn enumerate(t: &DfsTree, p: &DfsParams, m_edges: usize) -> Enumeration {
    let cx = Ctx::new(t, p);
    let hinv = high_inverse(cx);
    let (deep, lowest_w_descents) = type4_deep_m_cuts(cx, fill_stack_u(cx, &hinv));
    let all = [
        type1_cuts(cx),
        type2a_cuts(cx),
        type2b_cuts(cx),
        type3_cuts(cx),
        type4_diff_m_cuts(cx),
        type4_next_m_cuts(cx, &hinv, m_edges),
        deep,
    ];
    let mut cuts: Vec<ThreeCut> = all.into_iter().flatten().collect();
    let repeated = repeated_triples(&cuts, m_edges);
    let before = cuts.len();
    let mut i = 0;
    cuts.retain(|_| {
        i += 1;
        !repeated[i - 1]
    });
    Enumeration { duplicates: before - cuts.len(), cuts, lowest_w_descents }
}

/// Flags every cut whose triple already occurred earlier in `cuts`.
///
/// Each triple is packed with its position into one `u128` and the keys are
/// LSD radix sorted on 11-bit digits, which keeps this linear.
fn repeated_triples(cuts: &[ThreeCut], m: usize) -> Vec<bool> {
    const BITS: usize = 11;
    const MASK: u128 = (1 << BITS) - 1;
    let mut out = vec![false; cuts.len()];
    if cuts.len() < 2 {
        return out;
    }
    let b = (usize::BITS - m.leading_zeros()) as usize;
    assert!(3 * b <= 96 && cuts.len() <= u32::MAX as usize, "too many edges or cuts");
    let mut keys: Vec<u128> = cuts
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let [x, y, z] = c.edges.map(|e| e as u128);
            (((x << (2 * b)) | (y << b) | z) << 32) | i as u128
        })
        .collect();
    let mut tmp = vec![0u128; keys.len()];
    let mut count = vec![0usize; MASK as usize + 2];
    for d in 0..(3 * b).div_ceil(BITS) {
        let shift = 32 + d * BITS;
        let digit = |k: u128| ((k >> shift) & MASK) as usize;
        count.fill(0);
        for &k in &keys {
            count[digit(k) + 1] += 1;
        }
        for i in 0..=MASK as usize {
            count[i + 1] += count[i];
        }
        for &k in &keys {
            let slot = &mut count[digit(k)];
            tmp[*slot] = k;
            *slot += 1;
        }
        std::mem::swap(&mut keys, &mut tmp);
    }
    // Equal triples are now adjacent, in order of position.
    for w in keys.windows(2) {
        if w[0] >> 32 == w[1] >> 32 {
            out[(w[1] & u32::MAX as u128) as usize] = true;
        }
    }
    out
}

/// DFS data for a 3-edge-connected graph, or the small cut that prevents it.
pub fn prepare(g: &MultiGraph, root: usize) -> Result<(DfsTree, DfsParams)> {
    let t = match DfsTree::build(g, root) {
        Err(Error::Disconnected(v)) => return Err(Error::NotThreeEdgeConnected(SmallCut::Disconnected { vertex: v })),
        r => r?,
    };
    let p = DfsParams::compute(&t);
    if let Some(c) = small_cut(&t, &p.base, &p.chain) {
        return Err(Error::NotThreeEdgeConnected(c));
    }
    Ok((t, p))
}

/// All 3-edge cuts of a 3-edge-connected graph, using a DFS rooted at 0.
pub fn all_3cuts(g: &MultiGraph) -> Result<Vec<ThreeCut>> {
    all_3cuts_rooted(g, 0)
}

pub fn all_3cuts_rooted(g: &MultiGraph, root: usize) -> Result<Vec<ThreeCut>> {
    if g.n() <= 1 {
        return Ok(Vec::new());
    }
    let (t, p) = prepare(g, root)?;
    Ok(enumerate(&t, &p, g.m()).cuts)
}
