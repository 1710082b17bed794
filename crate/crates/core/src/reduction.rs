//! Reduction of arbitrary multigraphs to 3-edge-connected pieces.
//!
//! A 2-edge-connected graph `H` shrinks, by contracting each of its
//! 3-edge-connected components, to a quotient `Q` in which every edge lies on
//! exactly one cycle. For each component `C` the auxiliary graph `C̄` is
//! `H[C]` plus, for every cycle of `Q` passing through `C`, one virtual edge
//! joining the vertices where the cycle enters and leaves `C`. `C̄` is
//! 3-edge-connected, and its 3-cuts describe the minimal 3-cuts of `H` that
//! cross `C`.

use crate::cuts3::all_3cuts;
use crate::dfs::{
    compute_base_params, compute_m_chain, three_edge_connectivity, BaseParams, DfsParams, DfsTree, EdgeKind, MChain,
    NIL,
};
use crate::dsu::Dsu;
use crate::error::{Error, Result, SmallCut};
use crate::four_ecc::{four_ecc_3ec, four_ecc_from_dfs};
use crate::graph::{MultiGraph, Partition};

/// Edge ids of all bridges, ascending.
pub fn bridges(g: &MultiGraph) -> Vec<usize> {
    let n = g.n();
    let mut pre = vec![NIL; n];
    let mut low = vec![0usize; n];
    let mut out = Vec::new();
    let mut counter = 0;
    // (vertex, edge used to enter it, adjacency cursor)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for s in 0..n {
        if pre[s] != NIL {
            continue;
        }
        pre[s] = counter;
        low[s] = counter;
        counter += 1;
        stack.push((s, NIL, 0));
        while let Some(top) = stack.last_mut() {
            let (v, via, i) = *top;
            if i < g.degree(v) {
                top.2 += 1;
                let (w, e) = g.neighbor(v, i);
                if e == via {
                    continue;
                }
                if pre[w] == NIL {
                    pre[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(pre[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > pre[p] {
                        out.push(via);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// An induced piece of a larger graph with maps back to it.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: MultiGraph,
    /// Local vertex -> vertex of the parent graph.
    pub vertices: Vec<usize>,
    /// Local edge -> edge of the parent graph.
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct TwoEcc {
    pub partition: Partition,
    pub bridges: Vec<usize>,
    /// One subgraph per class, indexed by class id.
    pub components: Vec<Subgraph>,
}

pub fn two_ecc(g: &MultiGraph) -> TwoEcc {
    let br = bridges(g);
    let mut is_bridge = vec![false; g.m()];
    for &e in &br {
        is_bridge[e] = true;
    }
    let mut d = Dsu::new(g.n());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !is_bridge[e] {
            d.union(u, v);
        }
    }
    let roots: Vec<usize> = (0..g.n()).map(|v| d.find(v)).collect();
    let partition = Partition::from_dense_labels(&roots, g.n());
    let components = if partition.count() == 1 {
        vec![Subgraph { graph: g.clone(), vertices: (0..g.n()).collect(), edges: (0..g.m()).collect() }]
    } else {
        split_by_class(g, &partition, |e| !is_bridge[e])
    };
    TwoEcc { partition, bridges: br, components }
}

/// Induced subgraphs of every class, keeping only edges accepted by `keep`.
/// Local ids follow increasing ids of `g`.
fn split_by_class(g: &MultiGraph, p: &Partition, keep: impl Fn(usize) -> bool) -> Vec<Subgraph> {
    let mut local = vec![0usize; g.n()];
    let mut vertices = vec![Vec::new(); p.count()];
    for v in 0..g.n() {
        let c = p.label(v);
        local[v] = vertices[c].len();
        vertices[c].push(v);
    }
    let mut edges = vec![Vec::new(); p.count()];
    let mut origin = vec![Vec::new(); p.count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let c = p.label(u);
        if c == p.label(v) && keep(e) {
            edges[c].push((local[u], local[v]));
            origin[c].push(e);
        }
    }
    vertices
        .into_iter()
        .zip(edges.into_iter().zip(origin))
        .map(|(vertices, (edges, origin))| Subgraph {
            graph: MultiGraph::new(vertices.len(), edges).expect("induced subgraph"),
            vertices,
            edges: origin,
        })
        .collect()
}

/// 3-edge-connected components of a 2-edge-connected graph.
///
/// Every 2-cut contains a tree edge: either `(v, p(v))` with `b_count(v) = 1`,
/// or two tree edges of a group of vertices with equal `B`. Removing all such
/// tree edges cuts the tree into pieces that no 2-cut separates. For a group
/// `v1 > … > vk` of equal `B(v)` with at least two back-edges, the piece of
/// `v1` and the piece of `p(vk)` lie on the same side of every cut in the
/// group and are merged.
pub fn three_ecc(g: &MultiGraph) -> Result<Partition> {
    three_ecc_with_dfs(g).map(|(p, _)| p)
}

type DfsParts = (DfsTree, BaseParams, MChain);

/// Also hands back the DFS data when the whole graph is one class, so that
/// later stages can reuse it.
fn three_ecc_with_dfs(g: &MultiGraph) -> Result<(Partition, Option<DfsParts>)> {
    let n = g.n();
    if n <= 1 {
        return Ok((Partition::singletons(n), None));
    }
    let (t, base) = two_edge_connected_dfs(g)?;
    Ok(classes_from_dfs(t, base))
}

/// DFS tree and base parameters of a 2-edge-connected graph with `n >= 2`.
fn two_edge_connected_dfs(g: &MultiGraph) -> Result<(DfsTree, BaseParams)> {
    let t = match DfsTree::build(g, 0) {
        Err(Error::Disconnected(v)) => return Err(Error::NotTwoEdgeConnected(SmallCut::Disconnected { vertex: v })),
        r => r?,
    };
    let base = compute_base_params(&t);
    if let Some(v) = (1..t.n()).find(|&v| base.b_count[v] == 0) {
        return Err(Error::NotTwoEdgeConnected(SmallCut::Bridge { edge: t.parent_edge[v] }));
    }
    Ok((t, base))
}

fn classes_from_dfs(t: DfsTree, base: BaseParams) -> (Partition, Option<DfsParts>) {
    let n = t.n();
    let chain = compute_m_chain(&t, &base);
    let b = &base.b_count;

    let mut cut = vec![false; n];
    let mut has_prev = vec![false; n];
    for v in 1..n {
        if b[v] == 1 {
            cut[v] = true;
        }
        let w = chain.next_m[v];
        if w != NIL && b[v] == b[w] {
            cut[v] = true;
            cut[w] = true;
            has_prev[w] = true;
        }
    }
    let mut d = Dsu::new(n);
    for v in 1..n {
        if !cut[v] {
            d.union(v, t.parent[v]);
        }
    }
    for v in 1..n {
        // v heads a group if it has an equal successor but no equal predecessor.
        let w = chain.next_m[v];
        if has_prev[v] || w == NIL || b[v] != b[w] || b[v] < 2 {
            continue;
        }
        let mut last = w;
        while chain.next_m[last] != NIL && b[chain.next_m[last]] == b[v] {
            last = chain.next_m[last];
        }
        d.union(v, t.parent[last]);
    }
    let labels: Vec<usize> = (0..n).map(|x| d.find(t.pre[x])).collect();
    let p = Partition::from_dense_labels(&labels, n);
    let parts = (p.count() == 1).then_some((t, base, chain));
    (p, parts)
}

/// 3-edge-connected components of an arbitrary graph.
pub fn three_ecc_general(g: &MultiGraph) -> Partition {
    let two = two_ecc(g);
    let mut labels = vec![NIL; g.n()];
    let mut next = 0;
    for comp in &two.components {
        let p = three_ecc(&comp.graph).expect("2-edge-connected component");
        for (local, &v) in comp.vertices.iter().enumerate() {
            labels[v] = next + p.label(local);
        }
        next += p.count();
    }
    Partition::from_dense_labels(&labels, next)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QEdge {
    pub a: usize,
    pub b: usize,
    /// Edge of the underlying graph.
    pub edge: usize,
}

/// The graph obtained by contracting each 3-edge-connected component.
#[derive(Debug, Clone)]
pub struct QuotientGraph {
    pub nodes: usize,
    pub edges: Vec<QEdge>,
    /// Cycle id of each quotient edge.
    pub cycle_of: Vec<usize>,
    /// Each cycle as `(node, edge in, edge out)` steps in cyclic order, with
    /// edges given as indices into `edges`.
    pub cycles: Vec<Vec<(usize, usize, usize)>>,
}

pub fn build_quotient(g: &MultiGraph, classes: &Partition) -> QuotientGraph {
    let nodes = classes.count();
    let edges: Vec<QEdge> = g
        .edges()
        .iter()
        .enumerate()
        .filter_map(|(e, &(u, v))| {
            let (a, b) = (classes.label(u), classes.label(v));
            (a != b).then_some(QEdge { a, b, edge: e })
        })
        .collect();
    let mut q = QuotientGraph { nodes, edges, cycle_of: Vec::new(), cycles: Vec::new() };
    if q.edges.is_empty() {
        assert_eq!(nodes, 1, "quotient of a connected graph must be connected");
        return q;
    }
    let qg = MultiGraph::new(nodes, q.edges.iter().map(|e| (e.a, e.b)).collect()).expect("quotient graph");
    let t = DfsTree::build(&qg, 0).expect("quotient of a connected graph must be connected");
    q.cycle_of = vec![NIL; q.edges.len()];
    for (e, &(x, y)) in t.ends.iter().enumerate() {
        if t.kind[e] != EdgeKind::Back {
            continue;
        }
        let id = q.cycles.len();
        let mut path = vec![e];
        let mut z = x;
        while z != y {
            path.push(t.parent_edge[z]);
            z = t.parent[z];
        }
        for &f in &path {
            assert_eq!(q.cycle_of[f], NIL, "quotient edge {f} lies on two cycles");
            q.cycle_of[f] = id;
        }
        // Consecutive edges of the cycle meet at x, p(x), ..., and the last
        // tree edge meets the back-edge again at y.
        let mut steps = Vec::with_capacity(path.len());
        let mut z = x;
        for i in 0..path.len() {
            let next = path[(i + 1) % path.len()];
            steps.push((t.vertex[z], path[i], next));
            z = if i + 1 < path.len() { t.parent[z] } else { y };
        }
        // The final step's node is y, reached after the last tree edge.
        let k = steps.len();
        steps[k - 1].0 = t.vertex[y];
        q.cycles.push(steps);
    }
    if let Some(f) = q.cycle_of.iter().position(|&c| c == NIL) {
        panic!("quotient edge {f} lies on no cycle");
    }
    q
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrigin {
    Real(usize),
    /// Stands for the quotient cycle with this id.
    Virtual(usize),
}

#[derive(Debug, Clone)]
pub struct AuxiliaryGraph {
    pub graph: MultiGraph,
    /// Local vertex -> vertex of the graph it was built from.
    pub origin: Vec<usize>,
    pub multiplicity: Vec<u64>,
    pub edge_origin: Vec<EdgeOrigin>,
}

/// One auxiliary graph per 3-edge-connected class, indexed by class id.
///
/// Panics if a constructed graph fails the 3-edge-connectivity test.
pub fn build_auxiliary_graphs(g: &MultiGraph, classes: &Partition, q: &QuotientGraph) -> Vec<AuxiliaryGraph> {
    let out = build_auxiliary_unchecked(g, classes, q);
    for (c, aux) in out.iter().enumerate() {
        if let Err(cut) = three_edge_connectivity(&aux.graph) {
            panic!("auxiliary graph of class {c} is not 3-edge-connected: {cut}");
        }
    }
    out
}

// The pipeline skips the separate check: cut enumeration repeats it anyway
// and fails the same way.
fn build_auxiliary_unchecked(g: &MultiGraph, classes: &Partition, q: &QuotientGraph) -> Vec<AuxiliaryGraph> {
    let members = classes.classes();
    let mut local = vec![NIL; g.n()];
    for class in &members {
        for (i, &v) in class.iter().enumerate() {
            local[v] = i;
        }
    }
    let mut edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); members.len()];
    let mut mult: Vec<Vec<u64>> = vec![Vec::new(); members.len()];
    let mut origin: Vec<Vec<EdgeOrigin>> = vec![Vec::new(); members.len()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let c = classes.label(u);
        if c == classes.label(v) {
            edges[c].push((local[u], local[v]));
            mult[c].push(1);
            origin[c].push(EdgeOrigin::Real(e));
        }
    }
    for (id, steps) in q.cycles.iter().enumerate() {
        let len = steps.len() as u64;
        for &(node, e_in, e_out) in steps {
            let end_in = endpoint_in(g, classes, q.edges[e_in].edge, node);
            let end_out = endpoint_in(g, classes, q.edges[e_out].edge, node);
            if end_in != end_out {
                edges[node].push((local[end_in], local[end_out]));
                mult[node].push(len);
                origin[node].push(EdgeOrigin::Virtual(id));
            }
        }
    }
    members
        .into_iter()
        .zip(edges)
        .zip(mult.into_iter().zip(origin))
        .map(|((vertices, edges), (multiplicity, edge_origin))| {
            let graph = MultiGraph::new(vertices.len(), edges).expect("auxiliary graph");
            AuxiliaryGraph { graph, origin: vertices, multiplicity, edge_origin }
        })
        .collect()
}

fn endpoint_in(g: &MultiGraph, classes: &Partition, edge: usize, class: usize) -> usize {
    let (u, v) = g.edge(edge);
    if classes.label(u) == class {
        u
    } else {
        debug_assert_eq!(classes.label(v), class);
        v
    }
}

/// Auxiliary graphs of every 2-edge-connected component with at least two
/// vertices, with vertex origins mapped back to `g`.
pub fn auxiliary_graphs(g: &MultiGraph) -> Vec<AuxiliaryGraph> {
    auxiliary_pieces(g).into_iter().map(|(a, _)| a).collect()
}

fn auxiliary_pieces(g: &MultiGraph) -> Vec<(AuxiliaryGraph, Option<DfsParts>)> {
    match whole_graph_classes(g) {
        Some((classes, parts)) => pieces_of_whole(g, classes, parts),
        None => pieces_by_component(g),
    }
}

/// 3ecc classes of a 2-edge-connected input. Such an input needs no separate
/// bridge search: its DFS shows there are no bridges and goes on to the 3ecc
/// step.
fn whole_graph_classes(g: &MultiGraph) -> Option<(Partition, Option<DfsParts>)> {
    if g.n() < 2 {
        return None;
    }
    let (t, base) = two_edge_connected_dfs(g).ok()?;
    Some(classes_from_dfs(t, base))
}

fn pieces_of_whole(
    g: &MultiGraph,
    classes: Partition,
    parts: Option<DfsParts>,
) -> Vec<(AuxiliaryGraph, Option<DfsParts>)> {
    let mut out = Vec::new();
    let whole = Subgraph { graph: g.clone(), vertices: (0..g.n()).collect(), edges: (0..g.m()).collect() };
    push_pieces(whole, classes, parts, &mut out);
    out
}

fn pieces_by_component(g: &MultiGraph) -> Vec<(AuxiliaryGraph, Option<DfsParts>)> {
    let mut out = Vec::new();
    for comp in two_ecc(g).components {
        if comp.graph.n() < 2 {
            continue;
        }
        let (classes, parts) = three_ecc_with_dfs(&comp.graph).expect("2-edge-connected component");
        push_pieces(comp, classes, parts, &mut out);
    }
    out
}

/// Auxiliary graphs of one 2-edge-connected component with known classes.
fn push_pieces(
    comp: Subgraph,
    classes: Partition,
    parts: Option<DfsParts>,
    out: &mut Vec<(AuxiliaryGraph, Option<DfsParts>)>,
) {
    if classes.count() == 1 {
        let m = comp.graph.m();
        let aux = AuxiliaryGraph {
            graph: comp.graph,
            origin: comp.vertices,
            multiplicity: vec![1; m],
            edge_origin: comp.edges.into_iter().map(EdgeOrigin::Real).collect(),
        };
        out.push((aux, parts));
        return;
    }
    let q = build_quotient(&comp.graph, &classes);
    for mut aux in build_auxiliary_unchecked(&comp.graph, &classes, &q) {
        for v in aux.origin.iter_mut() {
            *v = comp.vertices[*v];
        }
        for o in aux.edge_origin.iter_mut() {
            if let EdgeOrigin::Real(e) = o {
                *e = comp.edges[*e];
            }
        }
        out.push((aux, None));
    }
}

/// Number of minimal 3-edge cuts: 3-sets of edges whose removal increases
/// the number of connected components while no proper subset does.
pub fn count_minimal_3cuts(g: &MultiGraph) -> u128 {
    let mut total = 0u128;
    for aux in auxiliary_graphs(g) {
        if aux.graph.n() < 2 {
            continue;
        }
        let cuts = all_3cuts(&aux.graph).expect("auxiliary graphs are 3-edge-connected");
        for c in cuts {
            total += c.edges.iter().map(|&e| aux.multiplicity[e] as u128).product::<u128>();
        }
    }
    total
}

/// 4-edge-connected components of an arbitrary multigraph.
pub fn four_ecc_general(g: &MultiGraph) -> Partition {
    let pieces = match whole_graph_classes(g) {
        // The whole graph is 3-edge-connected and already passed the 2-cut
        // checks, so its DFS goes straight on to the cut search.
        Some((_, Some((t, base, chain)))) => {
            let params = DfsParams::complete(&t, base, chain);
            return four_ecc_from_dfs(g, &t, &params);
        }
        Some((classes, None)) => pieces_of_whole(g, classes, None),
        None => pieces_by_component(g),
    };
    let mut labels = vec![NIL; g.n()];
    let mut next = 0;
    for (aux, parts) in pieces {
        let p = match parts {
            _ if aux.graph.n() < 2 => Partition::singletons(aux.graph.n()),
            Some((t, base, chain)) => {
                let params = DfsParams::complete(&t, base, chain);
                four_ecc_from_dfs(&aux.graph, &t, &params)
            }
            None => four_ecc_3ec(&aux.graph).expect("auxiliary graphs are 3-edge-connected"),
        };
        for (local, &v) in aux.origin.iter().enumerate() {
            labels[v] = next + p.label(local);
        }
        next += p.count();
    }
    // Vertices of single-vertex 2-edge-connected components.
    for l in labels.iter_mut() {
        if *l == NIL {
            *l = next;
            next += 1;
        }
    }
    Partition::from_dense_labels(&labels, next)
}
