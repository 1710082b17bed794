//! 4-edge-connected components of a 3-edge-connected graph.
//!
//! Every 3-cut `C` splits the graph into `V_C`, the side without the DFS
//! root, and the rest. Cuts are processed in increasing `|V_C|`; each one is
//! replaced by two fresh vertices so that the two sides become disconnected
//! while each side stays 3-edge-connected. Afterwards the components of the
//! split graph, restricted to original vertices, are the 4-edge-connected
//! components.

use crate::cuts3::{enumerate, prepare, BackEdge, Shape, ThreeCut};
use crate::dfs::{DfsParams, DfsTree};
use crate::dsu::Dsu;
use crate::error::Result;
use crate::graph::{MultiGraph, Partition};

/// One edge of a cut: its id, its endpoint inside `V_C` (preorder id), and
/// whether that endpoint is the edge's lower one (the child of a tree edge or
/// the tail of a back-edge).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CutSide {
    pub edge: usize,
    pub inner: usize,
    pub inner_is_lower: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassifiedCut {
    /// `|V_C|`.
    pub r_size: usize,
    pub sides: [CutSide; 3],
}

pub fn classify_and_size(cut: &ThreeCut, t: &DfsTree) -> ClassifiedCut {
    let nd = &t.nd;
    // Tree edge of `x`, with the child or the parent on the V_C side.
    let tree = |x: usize, inner_is_child: bool| CutSide {
        edge: t.parent_edge[x],
        inner: if inner_is_child { x } else { t.parent[x] },
        inner_is_lower: inner_is_child,
    };
    let back = |e: BackEdge, inner_is_tail: bool| CutSide {
        edge: e.id,
        inner: if inner_is_tail { e.tail } else { e.head },
        inner_is_lower: inner_is_tail,
    };
    let (r_size, sides) = match cut.shape {
        Shape::I { v, e1, e2 } => (nd[v], [tree(v, true), back(e1, true), back(e2, true)]),
        Shape::IIa { u, v, e } => (nd[v] - nd[u], [tree(u, false), tree(v, true), back(e, true)]),
        Shape::IIb { u, v, e } => (nd[v] - nd[u], [tree(u, false), tree(v, true), back(e, false)]),
        Shape::III { u, v, w } => (nd[w] - nd[u] - nd[v], [tree(u, false), tree(v, false), tree(w, true)]),
        Shape::IV { u, v, w } => (nd[u] + nd[w] - nd[v], [tree(u, true), tree(v, false), tree(w, true)]),
    };
    ClassifiedCut { r_size, sides }
}

/// Stable counting sort by `r_size`, which lies in `1..n`. The permutation
/// is applied in place.
pub fn sort_cuts(mut cuts: Vec<ClassifiedCut>, n: usize) -> Vec<ClassifiedCut> {
    let mut start = vec![0usize; n + 1];
    for c in &cuts {
        start[c.r_size] += 1;
    }
    let mut acc = 0;
    for s in start.iter_mut() {
        let k = *s;
        *s = acc;
        acc += k;
    }
    let mut dest: Vec<usize> = cuts
        .iter()
        .map(|c| {
            let d = start[c.r_size];
            start[c.r_size] += 1;
            d
        })
        .collect();
    for i in 0..cuts.len() {
        while dest[i] != i {
            let d = dest[i];
            cuts.swap(i, d);
            dest.swap(i, d);
        }
    }
    cuts
}

/// Split-graph bookkeeping, in preorder ids. Vertices `n..` are created ones.
///
/// Splitting at a cut replaces each of its edges by two: one on the `V_C`
/// side, joined to a fresh vertex standing for the rest of the graph, and one
/// on the other side, joined to a fresh vertex standing for `V_C`. Cuts come
/// in increasing `|V_C|`, so only the second copy can meet a later cut.
#[derive(Debug, Clone)]
pub struct SplitState {
    pub n: usize,
    pub vertex_count: usize,
    /// Endpoints of the copy standing for each original edge, aligned with
    /// its `(lower, upper)` ends.
    pub current: Vec<[usize; 2]>,
    /// `V_C`-side copies, which no later cut touches.
    pub settled: Vec<[usize; 2]>,
}

impl SplitState {
    pub fn new(t: &DfsTree) -> SplitState {
        SplitState {
            n: t.n(),
            vertex_count: t.n(),
            current: t.ends.iter().map(|&(a, b)| [a, b]).collect(),
            settled: Vec::new(),
        }
    }

    pub fn live_edge_count(&self) -> usize {
        self.current.len() + self.settled.len()
    }

    /// Applies one cut. `ends` gives each original edge's `(lower, upper)`.
    pub fn apply(&mut self, c: &ClassifiedCut, ends: &[(usize, usize)]) {
        let vc = self.vertex_count;
        let vc_tilde = vc + 1;
        self.vertex_count += 2;
        for s in &c.sides {
            let k = usize::from(!s.inner_is_lower);
            debug_assert_eq!(
                s.inner,
                if s.inner_is_lower { ends[s.edge].0 } else { ends[s.edge].1 },
                "cut side does not touch edge {}",
                s.edge
            );
            let cur = &mut self.current[s.edge];
            let x = cur[k];
            // The V_C end is either the original one or a stand-in created by
            // an earlier, smaller cut on the same side.
            assert!(x == s.inner || x >= self.n, "edge {} lost its V_C endpoint", s.edge);
            self.settled.push([x, vc_tilde]);
            cur[k] = vc;
        }
    }

    /// Components of the live graph, restricted to original vertices.
    pub fn components(&self) -> Partition {
        let mut d = Dsu::new(self.vertex_count);
        for &[a, b] in self.current.iter().chain(&self.settled) {
            d.union(a, b);
        }
        let labels: Vec<usize> = (0..self.n).map(|v| d.find(v)).collect();
        Partition::from_dense_labels(&labels, self.vertex_count)
    }
}

/// Processes sorted cuts and returns the partition in preorder ids.
pub fn split(t: &DfsTree, cuts: &[ClassifiedCut]) -> Partition {
    let mut st = SplitState::new(t);
    for c in cuts {
        st.apply(c, &t.ends);
    }
    debug_assert_eq!(st.vertex_count, t.n() + 2 * cuts.len());
    debug_assert_eq!(st.live_edge_count(), t.ends.len() + 3 * cuts.len());
    st.components()
}

/// 4-edge-connected components of a 3-edge-connected graph, via a DFS from
/// `root`. Fails if `g` is not 3-edge-connected.
pub fn four_ecc_3ec_rooted(g: &MultiGraph, root: usize) -> Result<Partition> {
    if g.n() <= 1 {
        return Ok(Partition::singletons(g.n()));
    }
    let (t, p) = prepare(g, root)?;
    Ok(four_ecc_from_dfs(g, &t, &p))
}

/// The rest of the computation once `g` is known to be 3-edge-connected.
pub(crate) fn four_ecc_from_dfs(g: &MultiGraph, t: &DfsTree, p: &DfsParams) -> Partition {
    let classified = enumerate(t, p, g.m()).cuts.iter().map(|c| classify_and_size(c, t)).collect();
    let sorted = sort_cuts(classified, t.n());
    let by_pre = split(t, &sorted);
    let labels: Vec<usize> = (0..g.n()).map(|v| by_pre.label(t.pre[v])).collect();
    Partition::from_dense_labels(&labels, g.n())
}

/// Every 3-cut of a 3-edge-connected graph together with its `|V_C|` for a
/// DFS rooted at 0, sorted by edge triple.
pub fn cuts_with_rsize(g: &MultiGraph) -> Result<Vec<(ThreeCut, usize)>> {
    if g.n() <= 1 {
        return Ok(Vec::new());
    }
    let (t, p) = prepare(g, 0)?;
    let mut out: Vec<_> = enumerate(&t, &p, g.m()).cuts.iter().map(|c| (*c, classify_and_size(c, &t).r_size)).collect();
    out.sort_unstable_by_key(|(c, _)| c.edges);
    Ok(out)
}

pub fn four_ecc_3ec(g: &MultiGraph) -> Result<Partition> {
    four_ecc_3ec_rooted(g, 0)
}

/// True iff `g` is connected, 3-edge-connected and has no 3-edge cut.
pub fn is_4_edge_connected(g: &MultiGraph) -> bool {
    if g.n() == 0 {
        return false;
    }
    if g.n() == 1 {
        return true;
    }
    match prepare(g, 0) {
        Ok((t, p)) => enumerate(&t, &p, g.m()).cuts.is_empty(),
        Err(_) => false,
    }
}
