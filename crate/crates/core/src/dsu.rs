/// Disjoint-set union with path compression and union by rank.
#[derive(Debug, Clone)]
pub struct Dsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`; returns the new representative.
    pub fn union(&mut self, a: usize, b: usize) -> usize {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        let (hi, lo) = if self.rank[a] >= self.rank[b] { (a, b) } else { (b, a) };
        self.parent[lo] = hi;
        if self.rank[hi] == self.rank[lo] {
            self.rank[hi] += 1;
        }
        hi
    }
}

/// Union-find over tree vertices where every set is a connected subtree and
/// `top` reports its topmost vertex. Linking always attaches a set to the set
/// of the parent, so the parent's label survives.
#[derive(Debug, Clone)]
pub(crate) struct TreeDsu {
    dsu: Dsu,
    label: Vec<usize>,
}

impl TreeDsu {
    pub fn new(n: usize) -> Self {
        TreeDsu { dsu: Dsu::new(n), label: (0..n).collect() }
    }

    pub fn top(&mut self, x: usize) -> usize {
        let r = self.dsu.find(x);
        self.label[r]
    }

    /// Joins the set of `child` into the set of `parent`.
    pub fn link(&mut self, child: usize, parent: usize) {
        let t = self.top(parent);
        let r = self.dsu.union(child, parent);
        self.label[r] = t;
    }
}
