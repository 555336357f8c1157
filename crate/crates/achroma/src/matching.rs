//! Exact maximum matching via Edmonds' blossom algorithm.
//!
//! Signs play no role here; the matching bound on the achromatic number only
//! needs the size of a maximum matching of the underlying graph. The
//! implementation is the classical O(V^3) augmenting-path search with blossom
//! contraction through `base` pointers.

use crate::graph::SignedGraph;

struct Blossom {
    adj: Vec<Vec<usize>>,
    matched: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    queue: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Blossom {
    fn new(g: &SignedGraph) -> Blossom {
        let n = g.order();
        let adj = g
            .adjacency()
            .into_iter()
            .map(|row| row.into_iter().map(|(v, _)| v).collect())
            .collect();
        Blossom {
            adj,
            matched: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
            queue: Vec::new(),
            in_queue: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lowest_common_ancestor(&self, mut a: usize, mut b: usize) -> usize {
        let n = self.adj.len();
        let mut on_path = vec![false; n];
        loop {
            a = self.base[a];
            on_path[a] = true;
            match self.matched[a] {
                Some(m) => match self.parent[m] {
                    Some(p) => a = p,
                    None => break,
                },
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.matched[b].expect("even vertex on alternating path")]
                .expect("path leads to root");
        }
    }

    fn mark_path(&mut self, mut v: usize, base_vertex: usize, mut child: usize) {
        while self.base[v] != base_vertex {
            let m = self.matched[v].expect("blossom vertices are matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("alternating path continues");
        }
    }

    fn contract(&mut self, v: usize, to: usize) {
        let cur_base = self.lowest_common_ancestor(v, to);
        self.in_blossom.fill(false);
        self.mark_path(v, cur_base, to);
        self.mark_path(to, cur_base, v);
        for i in 0..self.adj.len() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = cur_base;
                if !self.in_queue[i] {
                    self.in_queue[i] = true;
                    self.queue.push(i);
                }
            }
        }
    }

    /// Searches an augmenting path from `root`; applies it when found.
    fn try_augment(&mut self, root: usize) -> bool {
        let n = self.adj.len();
        self.parent = vec![None; n];
        self.base = (0..n).collect();
        self.in_queue = vec![false; n];
        self.queue = vec![root];
        self.in_queue[root] = true;

        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.matched[v] == Some(to) {
                    continue;
                }
                if to == root || matches!(self.matched[to], Some(m) if self.parent[m].is_some()) {
                    self.contract(v, to);
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.matched[to] {
                        None => {
                            self.augment_along(to);
                            return true;
                        }
                        Some(m) => {
                            if !self.in_queue[m] {
                                self.in_queue[m] = true;
                                self.queue.push(m);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn augment_along(&mut self, mut v: usize) {
        while let Some(pv) = self.parent[v] {
            let next = self.matched[pv];
            self.matched[v] = Some(pv);
            self.matched[pv] = Some(v);
            match next {
                Some(n) => v = n,
                None => break,
            }
        }
    }
}

/// Size of a maximum matching of the underlying unsigned graph.
pub fn max_matching(g: &SignedGraph) -> usize {
    let mut state = Blossom::new(g);
    let mut size = 0;
    for v in 0..g.order() {
        if state.matched[v].is_none() && state.try_augment(v) {
            size += 1;
        }
    }
    size
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::Positive as P;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SignedGraph {
        let list: Vec<(usize, usize, crate::graph::Sign)> =
            edges.iter().map(|&(u, v)| (u, v, P)).collect();
        SignedGraph::from_edges(n, &list)
    }

    /// Exhaustive oracle: branch on including or skipping the first edge.
    fn brute(n: usize, edges: &[(usize, usize)]) -> usize {
        fn go(edges: &[(usize, usize)], used: u64) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let skip = go(rest, used);
                    if used >> u & 1 == 0 && used >> v & 1 == 0 {
                        let take = 1 + go(rest, used | 1 << u | 1 << v);
                        skip.max(take)
                    } else {
                        skip
                    }
                }
            }
        }
        let _ = n;
        go(edges, 0)
    }

    #[test]
    fn known_matchings() {
        assert_eq!(max_matching(&graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])), 2);
        let c5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        assert_eq!(max_matching(&graph(5, &c5)), 2);
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert_eq!(max_matching(&graph(4, &k4)), 2);
        // Two triangles joined by a bridge: needs blossom handling.
        let bowtie = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)];
        assert_eq!(max_matching(&graph(6, &bowtie)), 3);
        assert_eq!(max_matching(&graph(3, &[])), 0);
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        assert_eq!(max_matching(&graph(10, &edges)), 5);
    }

    #[test]
    fn agrees_with_brute_force() {
        // Deterministic sweep over all graphs on 5 vertices plus a sample of
        // denser 7-vertex graphs seeded by a simple counter.
        for mask in 0u32..(1 << 10) {
            let pairs: Vec<(usize, usize)> = (0..5)
                .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
                .collect();
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            assert_eq!(max_matching(&graph(5, &edges)), brute(5, &edges), "mask {mask}");
        }

        let mut state = 0x2545f4914f6cdd1du64;
        for _ in 0..200 {
            let pairs: Vec<(usize, usize)> = (0..7)
                .flat_map(|u| ((u + 1)..7).map(move |v| (u, v)))
                .collect();
            let mut edges = Vec::new();
            for &e in &pairs {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                if state & 1 == 1 {
                    edges.push(e);
                }
            }
            assert_eq!(max_matching(&graph(7, &edges)), brute(7, &edges));
        }
    }
}
