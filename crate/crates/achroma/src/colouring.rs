//! Proper and complete colourings of signed graphs.
//!
//! A k-colouring assigns each vertex a colour from `M_k`. It is proper when
//! no edge `uv` has `phi(u) = sigma(uv) * phi(v)`, and complete when it is
//! proper and its reduction realizes every edge of `K*_k`. The reduction
//! switches negative-coloured vertices, identifies colour classes and
//! simplifies; mechanically each edge contributes the type
//! `(|phi(u)|, |phi(v)|, sigma * sgn(phi(u)) * sgn(phi(v)))`.
//!
//! Inferred colourings assign a magnitude and a flag instead; a minus flag
//! means "switch this vertex, then use the positive colour". They describe
//! complete colourings of every switching-equivalent graph at once.

use crate::error::{Error, Result};
use crate::graph::{
    build_kstar, kstar_edge_types, magnitudes, max_magnitude, Colour, EdgeType, Sign, SignedGraph,
    SignedMultigraph,
};
use crate::switching::{switch, SwitchSet};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A total assignment of colours from `M_k` to the vertices `0..len`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    k: usize,
    colours: Vec<Colour>,
}

impl Colouring {
    pub fn new(k: usize, colours: Vec<Colour>) -> Result<Colouring> {
        if k == 0 {
            return Err(Error::invalid("colouring requires k >= 1"));
        }
        for (v, c) in colours.iter().enumerate() {
            if c.magnitude() > max_magnitude(k) || (c.0 == 0 && k % 2 == 0) {
                return Err(Error::invalid(format!(
                    "colour {c} of vertex {v} is not in M_{k}"
                )));
            }
        }
        Ok(Colouring { k, colours })
    }

    /// Convenience constructor from raw integers.
    pub fn from_ints(k: usize, colours: &[i32]) -> Result<Colouring> {
        Colouring::new(k, colours.iter().map(|&c| Colour(c)).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn get(&self, v: usize) -> Colour {
        self.colours[v]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }
}

/// Flag of an inferred colour: minus means "switch the vertex first".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flag {
    Plus,
    Minus,
}

impl Flag {
    pub fn is_minus(self) -> bool {
        self == Flag::Minus
    }
}

impl std::fmt::Display for Flag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Flag::Plus => "+",
            Flag::Minus => "-",
        })
    }
}

/// A total assignment of `(magnitude, flag)` pairs from `M'_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InferredColouring {
    k: usize,
    items: Vec<(u32, Flag)>,
}

impl InferredColouring {
    pub fn new(k: usize, items: Vec<(u32, Flag)>) -> Result<InferredColouring> {
        if k == 0 {
            return Err(Error::invalid("inferred colouring requires k >= 1"));
        }
        for (v, &(m, _)) in items.iter().enumerate() {
            if m > max_magnitude(k) || (m == 0 && k % 2 == 0) {
                return Err(Error::invalid(format!(
                    "magnitude {m} of vertex {v} is not allowed by M'_{k}"
                )));
            }
        }
        Ok(InferredColouring { k, items })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, v: usize) -> (u32, Flag) {
        self.items[v]
    }

    pub fn items(&self) -> &[(u32, Flag)] {
        &self.items
    }

    /// The vertices carrying a minus flag.
    pub fn minus_set(&self) -> SwitchSet {
        self.items
            .iter()
            .enumerate()
            .filter(|(_, (_, f))| f.is_minus())
            .map(|(v, _)| v)
            .collect()
    }
}

fn check_total(g: &SignedGraph, len: usize) -> Result<()> {
    if g.order() != len {
        return Err(Error::invalid(format!(
            "colouring covers {len} vertices but the graph has {}",
            g.order()
        )));
    }
    Ok(())
}

/// Whether `phi` is proper on `g`: no edge `uv` with `phi(u) = sigma * phi(v)`.
pub fn is_proper(g: &SignedGraph, phi: &Colouring) -> Result<bool> {
    check_total(g, phi.len())?;
    for (u, v, sign) in g.edges() {
        let cu = phi.get(u).0;
        let cv = phi.get(v).0;
        let rhs = if sign.is_negative() { -cv } else { cv };
        if cu == rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The edge type contributed by edge `(u, v)` under `phi`:
/// `(|phi(u)|, |phi(v)|, sigma * sgn(phi(u)) * sgn(phi(v)))` with `sgn(0) = +`.
pub fn classify_edge(g: &SignedGraph, phi: &Colouring, u: usize, v: usize) -> Result<EdgeType> {
    check_total(g, phi.len())?;
    let sigma = g
        .sign(u, v)
        .ok_or_else(|| Error::invalid(format!("({u}, {v}) is not an edge")))?;
    let cu = phi.get(u);
    let cv = phi.get(v);
    Ok(EdgeType::new(
        cu.magnitude(),
        cv.magnitude(),
        sigma * cu.sign() * cv.sign(),
    ))
}

/// The reduction of `(g, phi)`: one vertex per magnitude used by `phi`
/// (labels are magnitudes, in ascending order), one edge per realized type.
/// Requires `phi` proper, so that every realized type is a `K*` edge.
pub fn reduce(g: &SignedGraph, phi: &Colouring) -> Result<SignedMultigraph> {
    if !is_proper(g, phi)? {
        return Err(Error::invalid("reduction requires a proper colouring"));
    }
    let used: Vec<u32> = {
        let set: BTreeSet<u32> = phi.colours().iter().map(|c| c.magnitude()).collect();
        set.into_iter().collect()
    };
    let index = |m: u32| used.binary_search(&m).expect("magnitude present");
    let mut reduced = SignedMultigraph::new(used.clone());
    for (u, v, _) in g.edges() {
        let t = classify_edge(g, phi, u, v)?;
        reduced.add_edge(index(t.lo), index(t.hi), t.sign)?;
    }
    Ok(reduced)
}

/// Whether `phi` is a complete k-colouring: proper, and the reduction is
/// exactly `K*_k` (every magnitude used, every edge type realized).
pub fn is_complete(g: &SignedGraph, phi: &Colouring) -> Result<bool> {
    if !is_proper(g, phi)? {
        return Ok(false);
    }
    Ok(reduce(g, phi)? == build_kstar(phi.k())?)
}

/// Turns an inferred colouring into the switched graph it describes plus the
/// plain all-nonnegative colouring on it.
pub fn realize(g: &SignedGraph, gamma: &InferredColouring) -> Result<(SignedGraph, Colouring)> {
    check_total(g, gamma.len())?;
    let switched = switch(g, &gamma.minus_set())?;
    let phi = Colouring::new(
        gamma.k(),
        gamma.items().iter().map(|&(m, _)| Colour(m as i32)).collect(),
    )?;
    Ok((switched, phi))
}

/// Effective sign of an edge under an inferred colouring: the signature sign
/// flipped once per minus-flagged endpoint.
pub fn effective_sign(sigma: Sign, fu: Flag, fv: Flag) -> Sign {
    let mut s = sigma;
    if fu.is_minus() {
        s = s.flip();
    }
    if fv.is_minus() {
        s = s.flip();
    }
    s
}

/// Whether `gamma` is a complete inferred k-colouring of `g`, checked
/// directly on the unswitched graph. Agrees with
/// `is_complete(realize(g, gamma))` for every total `gamma`.
pub fn is_inferred_complete(g: &SignedGraph, gamma: &InferredColouring) -> Result<bool> {
    check_total(g, gamma.len())?;
    let k = gamma.k();

    let needed: BTreeSet<u32> = magnitudes(k).collect();
    let used: BTreeSet<u32> = gamma.items().iter().map(|&(m, _)| m).collect();
    if used != needed {
        return Ok(false);
    }

    let mut seen: BTreeSet<EdgeType> = BTreeSet::new();
    for (u, v, sigma) in g.edges() {
        let (mu, fu) = gamma.get(u);
        let (mv, fv) = gamma.get(v);
        let eff = effective_sign(sigma, fu, fv);
        if mu == mv && (mu == 0 || eff == Sign::Positive) {
            return Ok(false);
        }
        seen.insert(EdgeType::new(mu, mv, eff));
    }
    Ok(kstar_edge_types(k).iter().all(|t| seen.contains(t)))
}

/// Negates every colour of magnitude `i > 0`. Preserves properness and
/// completeness.
pub fn negate_colour_class(phi: &Colouring, i: u32) -> Result<Colouring> {
    if i == 0 || i > max_magnitude(phi.k()) {
        return Err(Error::invalid(format!(
            "class {i} is not a nonzero magnitude of M_{}",
            phi.k()
        )));
    }
    Colouring::new(
        phi.k(),
        phi.colours()
            .iter()
            .map(|&c| if c.magnitude() == i { c.negate() } else { c })
            .collect(),
    )
}

/// Toggles the flag of every vertex of magnitude `i` (0 allowed). Preserves
/// inferred completeness: n-edges and p-edges of the touched types swap in
/// pairs.
pub fn swap_inferred_flags(gamma: &InferredColouring, i: u32) -> Result<InferredColouring> {
    if i > max_magnitude(gamma.k()) || (i == 0 && gamma.k() % 2 == 0) {
        return Err(Error::invalid(format!(
            "magnitude {i} is not allowed by M'_{}",
            gamma.k()
        )));
    }
    InferredColouring::new(
        gamma.k(),
        gamma
            .items()
            .iter()
            .map(|&(m, f)| {
                if m == i {
                    let nf = if f.is_minus() { Flag::Plus } else { Flag::Minus };
                    (m, nf)
                } else {
                    (m, f)
                }
            })
            .collect(),
    )
}

/// Deletes the colour class of magnitude `i` from a complete colouring,
/// relabelling the largest remaining magnitude into the gap. Yields the
/// induced subgraph with a complete (k-2)-colouring, or (k-1) when `i = 0`.
pub fn drop_colour_class(
    g: &SignedGraph,
    phi: &Colouring,
    i: u32,
) -> Result<(SignedGraph, Colouring)> {
    if !is_complete(g, phi)? {
        return Err(Error::invalid("class removal requires a complete colouring"));
    }
    let k = phi.k();
    if i > max_magnitude(k) || (i == 0 && k % 2 == 0) {
        return Err(Error::invalid(format!("magnitude {i} is not in M_{k}")));
    }
    let new_k = if i == 0 { k - 1 } else { k - 2 };
    if new_k == 0 {
        return Err(Error::invalid("cannot drop the only colour class"));
    }

    let keep: Vec<usize> = (0..g.order())
        .filter(|&v| phi.get(v).magnitude() != i)
        .collect();
    let sub = g.induced_subgraph(&keep)?;
    let top = max_magnitude(k) as i32;
    let colours = keep
        .iter()
        .map(|&v| {
            let c = phi.get(v);
            // The largest magnitude fills the dropped slot so that the
            // remaining magnitudes are exactly those of M_{new_k}.
            if i != 0 && c.magnitude() == top as u32 {
                Colour(i as i32 * c.0.signum())
            } else {
                c
            }
        })
        .collect();
    Ok((sub, Colouring::new(new_k, colours)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    /// Five vertices whose 4-colouring reduces to K*_4.
    fn reduction_example() -> (SignedGraph, Colouring) {
        let g = SignedGraph::from_edges(
            5,
            &[
                (0, 1, N),
                (1, 4, N),
                (3, 4, P),
                (0, 2, P),
                (1, 2, P),
                (2, 3, P),
                (2, 4, P),
            ],
        );
        let phi = Colouring::from_ints(4, &[1, 2, -1, -2, 2]).unwrap();
        (g, phi)
    }

    /// Four vertices, three edges; complete as signed, breaks after switching
    /// one endpoint of the positive edge.
    fn preservation_example() -> (SignedGraph, SignedGraph, Colouring, Colouring) {
        let a = SignedGraph::from_edges(4, &[(0, 1, N), (1, 2, N), (1, 3, P)]);
        let c = SignedGraph::from_edges(4, &[(0, 1, P), (1, 2, N), (1, 3, N)]);
        let phi_a = Colouring::from_ints(3, &[1, 1, 0, 0]).unwrap();
        let phi_c = Colouring::from_ints(3, &[-1, 1, 0, 0]).unwrap();
        (a, c, phi_a, phi_c)
    }

    fn k5_signed() -> SignedGraph {
        SignedGraph::from_edges(
            5,
            &[
                (0, 1, P),
                (2, 3, P),
                (2, 4, P),
                (3, 4, P),
                (0, 2, N),
                (0, 3, N),
                (0, 4, N),
                (1, 2, N),
                (1, 3, N),
                (1, 4, N),
            ],
        )
    }

    #[test]
    fn proper_and_classify() {
        let (g, phi) = reduction_example();
        assert!(is_proper(&g, &phi).unwrap());
        assert_eq!(
            classify_edge(&g, &phi, 1, 4).unwrap(),
            EdgeType::new(2, 2, N)
        );
        assert_eq!(
            classify_edge(&g, &phi, 2, 3).unwrap(),
            EdgeType::new(1, 2, P)
        );
        // An equal pair joined positively is improper.
        let bad = Colouring::from_ints(4, &[1, 1, -1, -2, 2]).unwrap();
        let mut g2 = SignedGraph::new(2);
        g2.add_edge(0, 1, P).unwrap();
        let bad2 = Colouring::from_ints(2, &[1, 1]).unwrap();
        assert!(!is_proper(&g2, &bad2).unwrap());
        drop(bad);
    }

    #[test]
    fn reduction_yields_kstar4() {
        let (g, phi) = reduction_example();
        assert_eq!(reduce(&g, &phi).unwrap(), build_kstar(4).unwrap());
        assert!(is_complete(&g, &phi).unwrap());
    }

    #[test]
    fn completeness_not_switching_invariant() {
        let (a, c, phi_a, phi_c) = preservation_example();
        assert!(is_complete(&a, &phi_a).unwrap());
        assert!(is_proper(&c, &phi_c).unwrap());
        assert!(!is_complete(&c, &phi_c).unwrap());
    }

    #[test]
    fn switching_a_nonzero_vertex_preserves_completeness() {
        let (g, phi) = reduction_example();
        // Switch vertex 1 and negate its colour: still complete.
        let s: SwitchSet = [1].into_iter().collect();
        let switched = switch(&g, &s).unwrap();
        let mut colours: Vec<i32> = phi.colours().iter().map(|c| c.0).collect();
        colours[1] = -colours[1];
        let phi2 = Colouring::from_ints(4, &colours).unwrap();
        assert!(is_complete(&switched, &phi2).unwrap());
    }

    #[test]
    fn realize_matches_switched_graph() {
        let g = k5_signed();
        let gamma = InferredColouring::new(
            5,
            vec![
                (0, Flag::Minus),
                (1, Flag::Plus),
                (1, Flag::Plus),
                (2, Flag::Plus),
                (2, Flag::Minus),
            ],
        )
        .unwrap();
        let (switched, phi) = realize(&g, &gamma).unwrap();
        let s: SwitchSet = [0, 4].into_iter().collect();
        assert_eq!(switched, switch(&g, &s).unwrap());
        assert_eq!(phi, Colouring::from_ints(5, &[0, 1, 1, 2, 2]).unwrap());
        assert!(is_complete(&switched, &phi).unwrap());
        assert!(is_inferred_complete(&g, &gamma).unwrap());
    }

    #[test]
    fn inferred_equals_realized_exhaustively() {
        // Every total inferred colouring on a few small graphs, k <= 5.
        let graphs = vec![
            SignedGraph::from_edges(3, &[(0, 1, N), (1, 2, P), (0, 2, N)]),
            SignedGraph::from_edges(4, &[(0, 1, N), (1, 2, N), (1, 3, P)]),
            SignedGraph::from_edges(4, &[(0, 1, P), (1, 2, N), (2, 3, P), (0, 3, N)]),
        ];
        for g in &graphs {
            for k in 1..=5usize {
                let options: Vec<(u32, Flag)> = magnitudes(k)
                    .flat_map(|m| [(m, Flag::Plus), (m, Flag::Minus)])
                    .collect();
                let n = g.order();
                let total = options.len().pow(n as u32);
                for code in 0..total {
                    let mut c = code;
                    let mut items = Vec::with_capacity(n);
                    for _ in 0..n {
                        items.push(options[c % options.len()]);
                        c /= options.len();
                    }
                    let gamma = InferredColouring::new(k, items).unwrap();
                    let (sw, phi) = realize(g, &gamma).unwrap();
                    assert_eq!(
                        is_inferred_complete(g, &gamma).unwrap(),
                        is_complete(&sw, &phi).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn class_operations_preserve_completeness() {
        let (g, phi) = reduction_example();
        for i in 1..=2u32 {
            let negated = negate_colour_class(&phi, i).unwrap();
            assert!(is_complete(&g, &negated).unwrap());
        }
        assert!(negate_colour_class(&phi, 0).is_err());

        let gamma = InferredColouring::new(
            4,
            phi.colours()
                .iter()
                .map(|c| {
                    let f = if c.0 < 0 { Flag::Minus } else { Flag::Plus };
                    (c.magnitude(), f)
                })
                .collect(),
        )
        .unwrap();
        assert!(is_inferred_complete(&g, &gamma).unwrap());
        for i in 1..=2u32 {
            let swapped = swap_inferred_flags(&gamma, i).unwrap();
            assert!(is_inferred_complete(&g, &swapped).unwrap());
        }
    }

    #[test]
    fn drop_class_keeps_completeness() {
        let (g, phi) = reduction_example();
        let (sub, smaller) = drop_colour_class(&g, &phi, 1).unwrap();
        assert_eq!(sub.order(), 3);
        assert_eq!(smaller.k(), 2);
        assert!(is_complete(&sub, &smaller).unwrap());

        let (sub2, smaller2) = drop_colour_class(&g, &phi, 2).unwrap();
        assert_eq!(smaller2.k(), 2);
        assert!(is_complete(&sub2, &smaller2).unwrap());

        // Dropping +-0 from an odd complete colouring.
        let (a, _, phi_a, _) = preservation_example();
        let (sub3, smaller3) = drop_colour_class(&a, &phi_a, 0).unwrap();
        assert_eq!(smaller3.k(), 2);
        assert!(is_complete(&sub3, &smaller3).unwrap());
    }

    #[test]
    fn colour_validation() {
        assert!(Colouring::from_ints(4, &[0, 1]).is_err());
        assert!(Colouring::from_ints(4, &[3, 1]).is_err());
        assert!(Colouring::from_ints(5, &[0, -2]).is_ok());
        assert!(InferredColouring::new(4, vec![(0, Flag::Plus)]).is_err());
        assert!(InferredColouring::new(5, vec![(3, Flag::Plus)]).is_err());
    }
}
