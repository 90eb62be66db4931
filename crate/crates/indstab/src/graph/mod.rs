//! Simple undirected graphs on at most 64 vertices.
//!
//! A neighborhood is a single machine word, which keeps the independence
//! recurrence, the branch-and-bound for alpha, and the exhaustive scans on
//! bitwise operations throughout. Families that outgrow the cap are handled
//! by closed-form polynomials elsewhere and never materialize a `Graph`.

mod alpha;
mod canon;
mod family;
mod io;

pub use alpha::independence_number;
pub use canon::canonical_code;
pub use family::FamilySpec;
pub use io::{parse_edge_list, parse_graph6, parse_graph6_file, to_graph6};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Immutable simple graph: vertex count plus per-vertex neighbor bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { index: w, order: n });
                }
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask of all vertices.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adj(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = if u >= 63 { 0 } else { !0u64 << (u + 1) };
            let mut m = self.adj[u] & above;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Relabels vertices: vertex v becomes perm[v].
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            let mut m = self.adj[v];
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                adj[perm[v]] |= 1 << perm[u];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Connected components of the sub-vertex-set `within`, as bitmasks.
    pub fn components(&self, within: u64) -> Vec<u64> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let seed = 1u64 << left.trailing_zeros();
            let mut comp = seed;
            loop {
                let mut grow = comp;
                let mut m = comp;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    grow |= self.adj[v] & within;
                }
                if grow == comp {
                    break;
                }
                comp = grow;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components(self.full_mask()).len() == 1
    }

    /// Tree test: connected with exactly n-1 edges.
    pub fn is_tree(&self) -> bool {
        self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// True when no induced K_{1,3} exists.
    pub fn is_claw_free(&self) -> bool {
        for v in 0..self.n {
            let nb: Vec<usize> = mask_vertices(self.adj[v]).collect();
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if self.has_edge(nb[i], nb[j]) {
                        continue;
                    }
                    for k in j + 1..nb.len() {
                        if !self.has_edge(nb[i], nb[k]) && !self.has_edge(nb[j], nb[k]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Join: disjoint copies plus all cross edges.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::SizeOverflow(format!(
                "join order {n} exceeds {MAX_VERTICES}"
            )));
        }
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..n {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::SizeOverflow(format!(
                "union order {n} exceeds {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![0u64; n];
        adj[..self.n].copy_from_slice(&self.adj);
        for v in 0..other.n {
            adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(Graph { n, adj })
    }

    /// Corona: a private copy of `other` joined to each vertex of `self`.
    pub fn corona(&self, other: &Graph) -> Result<Graph> {
        let n = self.n * (1 + other.n);
        if n > MAX_VERTICES {
            return Err(Error::SizeOverflow(format!(
                "corona order {n} exceeds {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![0u64; n];
        adj[..self.n].copy_from_slice(&self.adj);
        for v in 0..self.n {
            let base = self.n + v * other.n;
            for u in 0..other.n {
                adj[base + u] = other.adj[u] << base;
                adj[base + u] |= 1 << v;
                adj[v] |= 1 << (base + u);
            }
        }
        Ok(Graph { n, adj })
    }

    /// Lexicographic product: substitutes a copy of `other` for each vertex.
    /// Vertex (v, u) maps to index v*|other| + u.
    pub fn lex_product(&self, other: &Graph) -> Result<Graph> {
        let n = self.n * other.n;
        if n > MAX_VERTICES {
            return Err(Error::SizeOverflow(format!(
                "lexicographic product order {n} exceeds {MAX_VERTICES}"
            )));
        }
        let k = other.n;
        let mut adj = vec![0u64; n];
        for vi in 0..self.n {
            for ul in 0..k {
                let a = vi * k + ul;
                // inside the same copy
                adj[a] |= other.adj[ul] << (vi * k);
                // across adjacent copies: complete join
                let mut m = self.adj[vi];
                while m != 0 {
                    let vj = m.trailing_zeros() as usize;
                    m &= m - 1;
                    let block = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
                    adj[a] |= block << (vj * k);
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Graph star iterated k times: each iteration attaches one pendant
    /// vertex to every existing vertex (corona with K_1).
    pub fn graph_star_k(&self, k: u32) -> Result<Graph> {
        if k == 0 {
            return Err(Error::BadKStar);
        }
        let final_n = self
            .n
            .checked_shl(k)
            .filter(|&x| x <= MAX_VERTICES)
            .ok_or_else(|| Error::SizeOverflow(format!("{}*2^{} exceeds {}", self.n, k, MAX_VERTICES)))?;
        let _ = final_n;
        let k1 = Graph::empty(1)?;
        let mut g = self.clone();
        for _ in 0..k {
            g = g.corona(&k1)?;
        }
        Ok(g)
    }
}

/// Iterates the vertex indices set in a mask.
pub fn mask_vertices(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let e3 = Graph::new(3, &[]).unwrap();
        assert_eq!(e3.edge_count(), 0);
        // P4 has degree sequence 1,2,2,1
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.degree_sequence(), vec![1, 1, 2, 2]);
    }

    #[test]
    fn build_errors() {
        assert!(matches!(Graph::new(0, &[]), Err(Error::EmptyGraph)));
        assert!(matches!(Graph::new(65, &[]), Err(Error::TooManyVertices(65))));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::LoopEdge(1))));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        // duplicates collapse
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn join_examples() {
        let k1 = FamilySpec::complete(1).build().unwrap();
        let k2 = k1.join(&k1).unwrap();
        assert_eq!(k2.edge_count(), 1);
        // empty(4) + complete(2): 4*2+1 = 9 edges, alpha 4
        let g = Graph::empty(4).unwrap().join(&FamilySpec::complete(2).build().unwrap()).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert_eq!(independence_number(&g), 4);
        // K1 + empty(3) = K_{1,3}
        let claw = k1.join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(claw.degree_sequence(), vec![1, 1, 1, 3]);
    }

    #[test]
    fn union_examples() {
        let k1 = Graph::empty(1).unwrap();
        let e2 = k1.disjoint_union(&k1).unwrap();
        assert_eq!((e2.n(), e2.edge_count()), (2, 0));
        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        let two_k2 = p2.disjoint_union(&p2).unwrap();
        assert_eq!(independence_number(&two_k2), 2);
        let c5 = FamilySpec::cycle(5).build().unwrap();
        let g = c5.disjoint_union(&k1).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(independence_number(&g), 3);
    }

    #[test]
    fn corona_counts_match_closed_forms() {
        // K3 o empty(2): 9 vertices, |E| = 3 + 3*0 + 3*2 = 9
        let k3 = FamilySpec::complete(3).build().unwrap();
        let e2 = Graph::empty(2).unwrap();
        let g = k3.corona(&e2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 9));
        // K1 o empty(n) = K_{1,n}
        let k1 = Graph::empty(1).unwrap();
        let star = k1.corona(&Graph::empty(5).unwrap()).unwrap();
        assert_eq!(star.degree_sequence(), vec![1, 1, 1, 1, 1, 5]);
        // P2 o K1 = P4
        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        let p4 = p2.corona(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(p4.degree_sequence(), vec![1, 1, 2, 2]);
        assert!(p4.is_connected());
    }

    #[test]
    fn corona_vertex_edge_closed_forms_random() {
        // |V| = n + n*h, |E| = e_g + n*e_h + n*h over assorted pairs
        let pairs = [
            (FamilySpec::path(4), FamilySpec::complete(3)),
            (FamilySpec::cycle(5), FamilySpec::empty(2)),
            (FamilySpec::star(3), FamilySpec::path(2)),
        ];
        for (a, b) in pairs {
            let (g, h) = (a.build().unwrap(), b.build().unwrap());
            let c = g.corona(&h).unwrap();
            assert_eq!(c.n(), g.n() + g.n() * h.n());
            assert_eq!(
                c.edge_count(),
                g.edge_count() + g.n() * h.edge_count() + g.n() * h.n()
            );
        }
    }

    #[test]
    fn lex_product_examples() {
        // P3[K2]: 6 vertices, 11 edges
        let p3 = FamilySpec::path(3).build().unwrap();
        let k2 = FamilySpec::complete(2).build().unwrap();
        let g = p3.lex_product(&k2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 11));
        // G[K1] = G and K1[H] = H
        let c5 = FamilySpec::cycle(5).build().unwrap();
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(c5.lex_product(&k1).unwrap(), c5);
        assert_eq!(k1.lex_product(&c5).unwrap(), c5);
    }

    #[test]
    fn graph_star_examples() {
        let k1 = Graph::empty(1).unwrap();
        let k2 = k1.graph_star_k(1).unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        // K2* = P4
        let p4 = FamilySpec::complete(2).build().unwrap().graph_star_k(1).unwrap();
        assert_eq!(p4.degree_sequence(), vec![1, 1, 2, 2]);
        // K1 double star: 4 vertices, acyclic, connected
        let t = k1.graph_star_k(2).unwrap();
        assert_eq!(t.n(), 4);
        assert!(t.is_tree());
        // iteration identity

        let c4 = FamilySpec::cycle(4).build().unwrap();
        assert_eq!(
            c4.graph_star_k(2).unwrap(),
            c4.graph_star_k(1).unwrap().graph_star_k(1).unwrap()
        );
        assert!(matches!(
            Graph::empty(40).unwrap().graph_star_k(1),
            Err(Error::SizeOverflow(_))
        ));
    }

    #[test]
    fn claw_free_and_tree_predicates() {
        let claw = FamilySpec::star(3).build().unwrap();
        assert!(!claw.is_claw_free());
        assert!(claw.is_tree());
        let c6 = FamilySpec::cycle(6).build().unwrap();
        assert!(c6.is_claw_free());
        assert!(!c6.is_tree());
        // K_{1,n} o empty(m) stays a tree
        for n in 1..=4 {
            for m in 1..=3 {
                let star = FamilySpec::star(n).build().unwrap();
                let t = star.corona(&Graph::empty(m).unwrap()).unwrap();
                assert!(t.is_tree(), "K_{{1,{n}}} o empty({m})");
            }
        }
    }

    #[test]
    fn alpha_join_union_laws() {
        let gs = [
            FamilySpec::path(4).build().unwrap(),
            FamilySpec::cycle(5).build().unwrap(),
            FamilySpec::complete(3).build().unwrap(),
            FamilySpec::star(3).build().unwrap(),
        ];
        for g in &gs {
            for h in &gs {
                let a = independence_number(g);
                let b = independence_number(h);
                assert_eq!(independence_number(&g.disjoint_union(h).unwrap()), a + b);
                assert_eq!(independence_number(&g.join(h).unwrap()), a.max(b));
            }
            // joining a clique never changes alpha
            let m = FamilySpec::complete(4).build().unwrap();
            assert_eq!(
                independence_number(&g.join(&m).unwrap()),
                independence_number(g)
            );
        }
    }
}
