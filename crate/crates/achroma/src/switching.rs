//! Switching of signed graphs and switching equivalence.
//!
//! Switching at a vertex set `S` flips the sign of every edge with exactly
//! one endpoint in `S`. It is an involution, and complementing `S` inside a
//! connected component changes nothing. Two signatures on the same underlying
//! graph are equivalent when some switch maps one to the other; equivalence
//! is decided in linear time through a spanning-tree normal form.

use crate::error::{Error, Result};
use crate::graph::{Parity, Sign, SignedGraph};
use std::collections::BTreeSet;

/// A set of vertices to switch.
pub type SwitchSet = BTreeSet<usize>;

/// The graph obtained from `g` by switching every vertex of `s`.
pub fn switch(g: &SignedGraph, s: &SwitchSet) -> Result<SignedGraph> {
    if let Some(&v) = s.iter().find(|&&v| v >= g.order()) {
        return Err(Error::invalid(format!("switch vertex {v} out of range")));
    }
    let mut out = SignedGraph::new(g.order());
    for (u, v, sign) in g.edges() {
        let crossing = s.contains(&u) != s.contains(&v);
        let new_sign = if crossing { sign.flip() } else { sign };
        out.add_edge(u, v, new_sign)?;
    }
    Ok(out)
}

/// Parity of the number of negative edges.
pub fn signature_balance(g: &SignedGraph) -> Parity {
    Parity::of(g.negative_edge_count())
}

/// Per-component switch membership that makes every spanning-tree edge
/// positive. BFS from the least vertex of each component, neighbours in
/// ascending order; the root is never switched.
fn tree_potentials(g: &SignedGraph) -> Vec<Sign> {
    let adj = g.adjacency();
    let mut potential = vec![None; g.order()];
    for root in 0..g.order() {
        if potential[root].is_some() {
            continue;
        }
        potential[root] = Some(Sign::Positive);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, sign) in &adj[u] {
                if potential[v].is_none() {
                    // Switching v by potential[u] * sign turns edge uv positive.
                    potential[v] = Some(potential[u].unwrap() * sign);
                    queue.push_back(v);
                }
            }
        }
    }
    potential.into_iter().map(|p| p.unwrap()).collect()
}

/// The spanning-tree-positive normal form of `g` together with the switch
/// set producing it. Idempotent: the normal form of a normal form is itself,
/// with an empty switch set.
pub fn canonical_form(g: &SignedGraph) -> (SignedGraph, SwitchSet) {
    let potential = tree_potentials(g);
    let s: SwitchSet = (0..g.order())
        .filter(|&v| potential[v].is_negative())
        .collect();
    let normal = switch(g, &s).expect("potentials cover all vertices");
    (normal, s)
}

/// Decides switching equivalence of two signatures on the same underlying
/// graph. Returns the switch set mapping `g1` to `g2` if one exists.
///
/// The underlying graphs must agree (same order, same edge set); differing
/// underlying graphs are a parameter error, not inequivalence.
pub fn are_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Result<Option<SwitchSet>> {
    if g1.order() != g2.order() {
        return Err(Error::invalid("equivalence requires equal orders"));
    }
    let mut e1: Vec<(usize, usize)> = g1.edges().map(|(u, v, _)| (u, v)).collect();
    let e2: Vec<(usize, usize)> = g2.edges().map(|(u, v, _)| (u, v)).collect();
    e1.sort_unstable();
    if e1 != e2 {
        return Err(Error::invalid(
            "equivalence requires the same underlying graph",
        ));
    }

    // Product signature: edge uv is negative exactly where g1 and g2 differ.
    // g1 ~ g2 iff the difference is a cut, i.e. switching the difference
    // graph's "negative part" is consistent along every cycle.
    let mut diff = SignedGraph::new(g1.order());
    for (u, v, s1) in g1.edges() {
        let s2 = g2.sign(u, v).unwrap();
        diff.add_edge(u, v, s1 * s2)?;
    }
    let potential = tree_potentials(&diff);
    for (u, v, s) in diff.edges() {
        if potential[u] * potential[v] * s != Sign::Positive {
            return Ok(None);
        }
    }
    let s: SwitchSet = (0..g1.order())
        .filter(|&v| potential[v].is_negative())
        .collect();
    debug_assert_eq!(&switch(g1, &s).unwrap(), g2);
    Ok(Some(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    /// The signed K_5 whose switch at two vertices is tested below.
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

    fn k5_switched() -> SignedGraph {
        SignedGraph::from_edges(
            5,
            &[
                (0, 1, N),
                (0, 2, P),
                (0, 3, P),
                (0, 4, N),
                (1, 2, N),
                (1, 3, N),
                (1, 4, P),
                (2, 3, P),
                (2, 4, N),
                (3, 4, N),
            ],
        )
    }

    fn cycle(signs: &[Sign]) -> SignedGraph {
        let n = signs.len();
        let mut g = SignedGraph::new(n);
        for (i, &s) in signs.iter().enumerate() {
            g.add_edge(i, (i + 1) % n, s).unwrap();
        }
        g
    }

    #[test]
    fn switch_two_vertices_of_k5() {
        let s: SwitchSet = [0, 4].into_iter().collect();
        assert_eq!(switch(&k5_signed(), &s).unwrap(), k5_switched());
    }

    #[test]
    fn balance_of_k5_example() {
        assert_eq!(signature_balance(&k5_signed()), Parity::Even);
    }

    #[test]
    fn switch_is_involution() {
        let g = k5_signed();
        for bits in 0..32u32 {
            let s: SwitchSet = (0..5).filter(|&v| bits >> v & 1 == 1).collect();
            let twice = switch(&switch(&g, &s).unwrap(), &s).unwrap();
            assert_eq!(twice, g);
        }
    }

    #[test]
    fn switch_complement_agrees() {
        let g = k5_signed();
        for bits in 0..32u32 {
            let s: SwitchSet = (0..5).filter(|&v| bits >> v & 1 == 1).collect();
            let c: SwitchSet = (0..5).filter(|&v| bits >> v & 1 == 0).collect();
            assert_eq!(switch(&g, &s).unwrap(), switch(&g, &c).unwrap());
        }
    }

    #[test]
    fn triangle_balance_separates_classes() {
        let all_plus = cycle(&[P, P, P]);
        let one_minus = cycle(&[N, P, P]);
        let two_minus = cycle(&[N, N, P]);
        assert_eq!(are_equivalent(&all_plus, &one_minus).unwrap(), None);
        let s = are_equivalent(&all_plus, &two_minus).unwrap().unwrap();
        assert_eq!(switch(&all_plus, &s).unwrap(), two_minus);
    }

    #[test]
    fn equivalence_matches_brute_force() {
        // Oracle: enumerate all 2^n switch sets.
        fn brute(g1: &SignedGraph, g2: &SignedGraph) -> bool {
            let n = g1.order();
            (0..1u32 << n).any(|bits| {
                let s: SwitchSet = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
                &switch(g1, &s).unwrap() == g2
            })
        }

        // A deterministic little generator over several underlying graphs.
        let shapes: Vec<Vec<(usize, usize)>> = vec![
            vec![(0, 1), (1, 2), (2, 3), (3, 0)],
            vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)],
            vec![(0, 1), (1, 2), (2, 3)],
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        ];
        for shape in shapes {
            let n = 5;
            let m = shape.len();
            for sig1 in 0..1u32 << m {
                for sig2 in 0..1u32 << m {
                    let build = |sig: u32| {
                        let mut g = SignedGraph::new(n);
                        for (i, &(u, v)) in shape.iter().enumerate() {
                            g.add_edge(u, v, if sig >> i & 1 == 1 { N } else { P }).unwrap();
                        }
                        g
                    };
                    let g1 = build(sig1);
                    let g2 = build(sig2);
                    let fast = are_equivalent(&g1, &g2).unwrap();
                    assert_eq!(fast.is_some(), brute(&g1, &g2));
                    if let Some(s) = fast {
                        assert_eq!(switch(&g1, &s).unwrap(), g2);
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_complete() {
        let g = k5_signed();
        let (normal, s) = canonical_form(&g);
        assert_eq!(switch(&g, &s).unwrap(), normal);
        let (normal2, s2) = canonical_form(&normal);
        assert_eq!(normal2, normal);
        assert!(s2.is_empty());

        // Equivalent graphs share a normal form; inequivalent ones do not.
        for bits in 0..32u32 {
            let s: SwitchSet = (0..5).filter(|&v| bits >> v & 1 == 1).collect();
            let h = switch(&g, &s).unwrap();
            assert_eq!(canonical_form(&h).0, normal);
        }
        let mut other = g.clone();
        other.flip_edge(0, 1).unwrap();
        assert_ne!(canonical_form(&other).0, normal);
    }

    #[test]
    fn cycle_balance_is_switching_invariant() {
        for n in 3..=10usize {
            for sig in 0..1u32 << n {
                let signs: Vec<Sign> = (0..n)
                    .map(|i| if sig >> i & 1 == 1 { N } else { P })
                    .collect();
                let g = cycle(&signs);
                let balance = signature_balance(&g);
                for bits in [1u32, 3, 5, (1 << n) - 1] {
                    let s: SwitchSet = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
                    assert_eq!(signature_balance(&switch(&g, &s).unwrap()), balance);
                }
                if n > 6 {
                    break; // full signature sweep only for small n
                }
            }
        }
    }
}
