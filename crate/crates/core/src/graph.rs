//! Undirected multigraphs, the text file format and vertex partitions.

use std::fmt::Write as _;
use std::io::Read;

use crate::error::{Error, Result};

/// An immutable undirected multigraph on vertices `0..n`.
///
/// Edges are identified by their index in [`MultiGraph::edges`]. Parallel
/// edges are allowed, self-loops are not. Adjacency is stored in CSR form;
/// each vertex lists its incident edges in increasing edge-id order.
///
/// Adjacency entries are 32-bit, so `n` and `m` must stay below `2^32`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj_start: Vec<usize>,
    adj: Vec<(u32, u32)>,
}

pub const MAX_GRAPH_SIZE: usize = u32::MAX as usize;

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (what, value) in [("n", n), ("m", edges.len())] {
            if value > MAX_GRAPH_SIZE {
                return Err(Error::SizeGuard { what, value, limit: MAX_GRAPH_SIZE });
            }
        }
        for (id, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::EndpointOutOfRange { edge: id, vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { edge: id, vertex: u });
            }
        }
        let mut adj_start = vec![0usize; n + 1];
        for &(u, v) in &edges {
            adj_start[u + 1] += 1;
            adj_start[v + 1] += 1;
        }
        for i in 0..n {
            adj_start[i + 1] += adj_start[i];
        }
        let mut fill = adj_start.clone();
        let mut adj = vec![(0, 0); 2 * edges.len()];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[fill[u]] = (v as u32, id as u32);
            fill[u] += 1;
            adj[fill[v]] = (u as u32, id as u32);
            fill[v] += 1;
        }
        Ok(MultiGraph { n, edges, adj_start, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// `(neighbor, edge id)` pairs incident to `v`.
    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.adj[self.adj_start[v]..self.adj_start[v + 1]].iter().map(|&(w, e)| (w as usize, e as usize))
    }

    /// The `i`-th entry of [`MultiGraph::neighbors`].
    #[inline]
    pub fn neighbor(&self, v: usize, i: usize) -> (usize, usize) {
        let (w, e) = self.adj[self.adj_start[v] + i];
        (w as usize, e as usize)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj_start[v + 1] - self.adj_start[v]
    }

    /// Relabels vertex `v` as `perm[v]`, keeping edge ids.
    pub fn permute_vertices(&self, perm: &[usize]) -> MultiGraph {
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        MultiGraph::new(self.n, edges).expect("permutation of a valid graph")
    }

    /// Serializes in the same format [`parse_graph`] reads.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(16 + self.edges.len() * 12);
        writeln!(s, "{} {}", self.n, self.edges.len()).unwrap();
        for &(u, v) in &self.edges {
            writeln!(s, "{u} {v}").unwrap();
        }
        s
    }
}

/// Parses the `n m` header followed by `m` lines of `u v`.
///
/// Blank lines and lines starting with `#` are skipped. Errors carry the
/// 1-based line number where the problem was found.
pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let bad = |line: usize, msg: String| Error::Parse { line, msg };

    let (hline, header) = lines.next().ok_or_else(|| bad(1, "missing header".into()))?;
    let (n, m) = parse_pair(header).ok_or_else(|| bad(hline, format!("malformed header `{header}`")))?;

    let mut edges = Vec::with_capacity(m.min(1 << 24));
    let mut last_line = hline;
    for (line, l) in lines {
        if edges.len() == m {
            return Err(bad(line, format!("more than {m} edge lines")));
        }
        let (u, v) = parse_pair(l).ok_or_else(|| bad(line, format!("malformed edge `{l}`")))?;
        for x in [u, v] {
            if x >= n {
                return Err(bad(line, format!("endpoint {x} out of range for {n} vertices")));
            }
        }
        if u == v {
            return Err(bad(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(bad(last_line, format!("expected {m} edges, found {}", edges.len())));
    }
    MultiGraph::new(n, edges)
}

/// Reads a graph from a path, or from standard input when `path` is `-`.
pub fn read_graph(path: &str) -> Result<MultiGraph> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    parse_graph(&text)
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let mut it = s.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// A labeling of vertices into classes, kept in canonical form: class ids are
/// assigned in order of each class's smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    labels: Vec<usize>,
    count: usize,
}

impl Partition {
    /// Canonicalizes an arbitrary labeling. Labels need not be dense.
    pub fn from_labels<L: Copy + Eq + std::hash::Hash>(raw: &[L]) -> Partition {
        let mut map = std::collections::HashMap::new();
        let labels = raw
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Partition { labels, count: map.len() }
    }

    /// Same as [`Partition::from_labels`] for labels known to be `< bound`.
    pub fn from_dense_labels(raw: &[usize], bound: usize) -> Partition {
        let mut map = vec![usize::MAX; bound];
        let mut count = 0;
        let labels = raw
            .iter()
            .map(|&l| {
                if map[l] == usize::MAX {
                    map[l] = count;
                    count += 1;
                }
                map[l]
            })
            .collect();
        Partition { labels, count }
    }

    pub fn singletons(n: usize) -> Partition {
        Partition { labels: (0..n).collect(), count: n }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Classes as sorted vertex lists, ordered by smallest member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &l) in self.labels.iter().enumerate() {
            out[l].push(v);
        }
        out
    }

    /// True if every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.len() != coarser.len() {
            return false;
        }
        let mut image = vec![usize::MAX; self.count];
        for (v, &l) in self.labels.iter().enumerate() {
            let c = coarser.labels[v];
            if image[l] == usize::MAX {
                image[l] = c;
            } else if image[l] != c {
                return false;
            }
        }
        true
    }
}

pub fn connected_components(g: &MultiGraph) -> Partition {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut count = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for (w, _) in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    // Seeds are scanned in increasing order, so labels are already canonical.
    Partition { labels: label, count }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_graph("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(connected_components(&g).count(), 1);
    }

    #[test]
    fn parallel_edges_keep_ids() {
        let g = parse_graph("2 3\n0 1\n0 1\n0 1\n").unwrap();
        assert_eq!(g.m(), 3);
        let ids: Vec<_> = g.neighbors(0).map(|(_, e)| e).collect();
        assert_eq!(ids, vec![0, 1, 2]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = |s: &str| match parse_graph(s) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("2 1\n0 0\n"), 2);
        assert_eq!(err("x 1\n"), 1);
        assert_eq!(err("2 1\n# c\n0 5\n"), 3);
        assert_eq!(err("2 2\n0 1\n"), 2);
        assert_eq!(err("2 1\n0 1\n1 0\n"), 3);
        assert_eq!(err("2 1\n0 1 1\n"), 2);
        assert_eq!(err(""), 1);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# hi\n\n2 1\n\n# edge\n1 0\n").unwrap();
        assert_eq!(g.edges(), &[(1, 0)]);
    }

    #[test]
    fn components_examples() {
        let g = parse_graph("4 2\n0 1\n2 3\n").unwrap();
        let p = connected_components(&g);
        assert_eq!(p.classes(), vec![vec![0, 1], vec![2, 3]]);
        let e = MultiGraph::new(3, vec![]).unwrap();
        assert_eq!(connected_components(&e).count(), 3);
    }

    #[test]
    fn canonical_labels() {
        let p = Partition::from_labels(&[7, 3, 7, 9]);
        assert_eq!(p.labels(), &[0, 1, 0, 2]);
        assert!(Partition::singletons(4).refines(&p));
        assert!(!p.refines(&Partition::singletons(4)));
    }
}
