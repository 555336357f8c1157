//! Signed graphs, signed multigraphs and the complete signed multigraphs `K*_k`.
//!
//! A signed graph is a simple graph together with a signature assigning
//! `Positive` or `Negative` to every edge. The multigraph variant allows one
//! positive and one negative edge per vertex pair plus negative loops; it is
//! the codomain of colouring reductions and the home of `K*_k`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Edge sign. Multiplication follows the usual rule of signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    /// Sign of an integer; zero counts as positive.
    pub fn of(value: i64) -> Sign {
        if value < 0 {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// Parity of a count, used for signature balance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(count: usize) -> Parity {
        if count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A simple graph with signed edges. Vertices are `0..order`.
/// No loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedGraph {
    order: usize,
    edges: BTreeMap<(usize, usize), Sign>,
}

impl SignedGraph {
    pub fn new(order: usize) -> SignedGraph {
        SignedGraph {
            order,
            edges: BTreeMap::new(),
        }
    }

    /// Builds a graph from an edge list in one call. Panics on invalid edges;
    /// intended for fixtures and generators whose edges are correct by
    /// construction.
    pub fn from_edges(order: usize, edges: &[(usize, usize, Sign)]) -> SignedGraph {
        let mut g = SignedGraph::new(order);
        for &(u, v, s) in edges {
            g.add_edge(u, v, s).expect("valid edge list");
        }
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    fn key(u: usize, v: usize) -> (usize, usize) {
        if u < v {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<()> {
        if u >= self.order || v >= self.order {
            return Err(Error::invalid(format!(
                "edge ({u}, {v}) out of range for order {}",
                self.order
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u} not allowed")));
        }
        let key = Self::key(u, v);
        if self.edges.contains_key(&key) {
            return Err(Error::invalid(format!("duplicate edge ({u}, {v})")));
        }
        self.edges.insert(key, sign);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains_key(&Self::key(u, v))
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        if u == v {
            return None;
        }
        self.edges.get(&Self::key(u, v)).copied()
    }

    /// Edges in lexicographic order as `(u, v, sign)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.edges.iter().map(|(&(u, v), &s)| (u, v, s))
    }

    pub fn set_sign(&mut self, u: usize, v: usize, sign: Sign) -> Result<()> {
        let key = Self::key(u, v);
        match self.edges.get_mut(&key) {
            Some(s) => {
                *s = sign;
                Ok(())
            }
            None => Err(Error::invalid(format!("no edge ({u}, {v}) to re-sign"))),
        }
    }

    pub fn flip_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let key = Self::key(u, v);
        match self.edges.get_mut(&key) {
            Some(s) => {
                *s = s.flip();
                Ok(())
            }
            None => Err(Error::invalid(format!("no edge ({u}, {v}) to flip"))),
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        match self.edges.remove(&Self::key(u, v)) {
            Some(_) => Ok(()),
            None => Err(Error::invalid(format!("no edge ({u}, {v}) to remove"))),
        }
    }

    /// Adjacency lists: for each vertex, its neighbours with edge signs,
    /// sorted by neighbour index.
    pub fn adjacency(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = vec![Vec::new(); self.order];
        for (&(u, v), &s) in &self.edges {
            adj[u].push((v, s));
            adj[v].push((u, s));
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .keys()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Number of negative edges.
    pub fn negative_edge_count(&self) -> usize {
        self.edges.values().filter(|s| s.is_negative()).count()
    }

    /// The subgraph induced by `vertices` (deduplicated, in ascending order),
    /// relabelled to `0..vertices.len()`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<SignedGraph> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.iter().any(|&v| v >= self.order) {
            return Err(Error::invalid("induced vertex out of range"));
        }
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SignedGraph::new(keep.len());
        for (&(u, v), &s) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.add_edge(index[u], index[v], s)?;
            }
        }
        Ok(g)
    }

    /// The graph with vertex `v` deleted and the remaining vertices
    /// relabelled downwards.
    pub fn remove_vertex(&self, v: usize) -> Result<SignedGraph> {
        if v >= self.order {
            return Err(Error::invalid(format!("vertex {v} out of range")));
        }
        let keep: Vec<usize> = (0..self.order).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.order];
        let mut components = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            let mut queue = std::collections::VecDeque::from([start]);
            seen[start] = true;
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &(w, _) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }
}

/// A multigraph edge with `u <= v`; `u == v` is a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiEdge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl MultiEdge {
    pub fn new(u: usize, v: usize, sign: Sign) -> MultiEdge {
        if u <= v {
            MultiEdge { u, v, sign }
        } else {
            MultiEdge { u: v, v: u, sign }
        }
    }

    pub fn is_loop(self) -> bool {
        self.u == self.v
    }
}

/// A signed multigraph with at most one positive and one negative edge per
/// vertex pair, and negative loops. Each vertex carries a label, exposed as a
/// colour magnitude by `build_kstar` and by colouring reductions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedMultigraph {
    labels: Vec<u32>,
    edges: Vec<MultiEdge>,
}

impl SignedMultigraph {
    pub fn new(labels: Vec<u32>) -> SignedMultigraph {
        SignedMultigraph {
            labels,
            edges: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    /// Inserts an edge unless an equal one is already present.
    /// Keeps the edge list sorted; equality of multigraphs is structural.
    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<()> {
        if u >= self.order() || v >= self.order() {
            return Err(Error::invalid("multigraph edge out of range"));
        }
        let e = MultiEdge::new(u, v, sign);
        if e.is_loop() && !e.sign.is_negative() {
            return Err(Error::invalid("only negative loops are allowed"));
        }
        match self.edges.binary_search(&e) {
            Ok(_) => Ok(()),
            Err(pos) => {
                self.edges.insert(pos, e);
                Ok(())
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize, sign: Sign) -> bool {
        self.edges.binary_search(&MultiEdge::new(u, v, sign)).is_ok()
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == v) as usize + (e.v == v) as usize)
            .sum()
    }
}

/// A colour from the set `M_k`: a nonzero integer `+-i`, or `0` standing for
/// the merged colour written `+-0` (only available when `k` is odd).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Colour(pub i32);

impl Colour {
    pub fn magnitude(self) -> u32 {
        self.0.unsigned_abs()
    }

    /// Sign of the colour; `+-0` counts as positive.
    pub fn sign(self) -> Sign {
        Sign::of(self.0 as i64)
    }

    pub fn negate(self) -> Colour {
        Colour(-self.0)
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 > 0 {
            write!(f, "+{}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// The colour set `M_k` in ascending order: `{-n..-1, 1..n}` for `k = 2n`,
/// with `0` added for `k = 2n+1`.
pub fn colour_set(k: usize) -> Result<Vec<Colour>> {
    if k == 0 {
        return Err(Error::invalid("colour set requires k >= 1"));
    }
    let n = (k / 2) as i32;
    let mut set: Vec<Colour> = (-n..=n).map(Colour).collect();
    if k % 2 == 0 {
        set.retain(|c| c.0 != 0);
    }
    Ok(set)
}

/// Largest magnitude in `M_k`.
pub fn max_magnitude(k: usize) -> u32 {
    (k / 2) as u32
}

/// The magnitudes allowed by `M_k`: `0..=k/2` for odd `k`, `1..=k/2` for even.
pub fn magnitudes(k: usize) -> impl Iterator<Item = u32> {
    let lo = if k % 2 == 0 { 1 } else { 0 };
    lo..=max_magnitude(k)
}

/// Number of edges of `K*_k`.
pub fn kstar_size(k: usize) -> usize {
    if k % 2 == 0 {
        (k / 2) * (k / 2)
    } else {
        let h = k.div_ceil(2);
        h * h - 1
    }
}

/// Signature balance of `K*_k`: the parity of its negative edge count.
pub fn kstar_balance(k: usize) -> Parity {
    let vertices = k.div_ceil(2);
    let loops = k / 2;
    Parity::of(vertices * (vertices - 1) / 2 + loops)
}

/// The complete signed multigraph `K*_k`: one vertex per magnitude allowed by
/// `M_k`, one positive and one negative edge per vertex pair, and a negative
/// loop at every vertex of nonzero magnitude. Vertex labels are magnitudes.
pub fn build_kstar(k: usize) -> Result<SignedMultigraph> {
    if k == 0 {
        return Err(Error::invalid("K* requires k >= 1"));
    }
    let labels: Vec<u32> = magnitudes(k).collect();
    let mut g = SignedMultigraph::new(labels.clone());
    for (i, &label) in labels.iter().enumerate() {
        for j in (i + 1)..labels.len() {
            g.add_edge(i, j, Sign::Positive)?;
            g.add_edge(i, j, Sign::Negative)?;
        }
        if label != 0 {
            g.add_edge(i, i, Sign::Negative)?;
        }
    }
    Ok(g)
}

/// The path `P_n` on vertices `0..=signs.len()`: edge `(i, i+1)` carries
/// `signs[i]`. An empty slice yields the single vertex `P_1`.
pub fn path_graph(signs: &[Sign]) -> SignedGraph {
    let mut g = SignedGraph::new(signs.len() + 1);
    for (i, &s) in signs.iter().enumerate() {
        g.add_edge(i, i + 1, s).expect("path edges are in range");
    }
    g
}

/// The cycle `C_n` on vertices `0..signs.len()`: edge `(i, i+1 mod n)`
/// carries `signs[i]`.
pub fn cycle_graph(signs: &[Sign]) -> Result<SignedGraph> {
    let n = signs.len();
    if n < 3 {
        return Err(Error::invalid("cycle requires order >= 3"));
    }
    let mut g = SignedGraph::new(n);
    for (i, &s) in signs.iter().enumerate() {
        g.add_edge(i, (i + 1) % n, s)?;
    }
    Ok(g)
}

/// The complete graph `K_n` with every edge carrying `sign`.
pub fn complete_graph(n: usize, sign: Sign) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v, sign).expect("clique edges are in range");
        }
    }
    g
}

/// An edge type `(i, j, sign)` of `K*_k`, with magnitudes normalized `i <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeType {
    pub lo: u32,
    pub hi: u32,
    pub sign: Sign,
}

impl EdgeType {
    pub fn new(i: u32, j: u32, sign: Sign) -> EdgeType {
        if i <= j {
            EdgeType { lo: i, hi: j, sign }
        } else {
            EdgeType { lo: j, hi: i, sign }
        }
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.lo, self.hi, self.sign)
    }
}

/// All edge types of `K*_k` in ascending `(lo, hi, sign)` order.
pub fn kstar_edge_types(k: usize) -> Vec<EdgeType> {
    let mags: Vec<u32> = magnitudes(k).collect();
    let mut types = Vec::with_capacity(kstar_size(k));
    for (a, &i) in mags.iter().enumerate() {
        for &j in &mags[a..] {
            if i == j {
                if i != 0 {
                    types.push(EdgeType::new(i, j, Sign::Negative));
                }
            } else {
                types.push(EdgeType::new(i, j, Sign::Positive));
                types.push(EdgeType::new(i, j, Sign::Negative));
            }
        }
    }
    types.sort();
    types
}
