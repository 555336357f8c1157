//! Closed-form achromatic numbers for signed paths, cycles, and complete
//! graphs, with the Euler-trail constructions that witness them.
//!
//! All formulas are stated over indexed shapes: `P_n` has edges `(i, i+1)`,
//! `C_n` additionally `(n-1, 0)`. Path values depend only on the order (any
//! signature of a path switches to any other); cycle values depend only on
//! the order and the signature balance.

use serde::{Deserialize, Serialize};

use crate::colouring::{effective_sign, is_inferred_complete, Colouring, Flag, InferredColouring};
use crate::graph::{
    build_kstar, colour_set, kstar_balance, kstar_size, magnitudes, Parity, Sign, SignedGraph,
};
use crate::switching::signature_balance;
use crate::{Error, Result};

/// The three signed complete graphs with closed-form achromatic numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompleteVariant {
    AllPositive,
    AllNegative,
    /// All-negative `K_n` minus a matching of the given non-zero size.
    NegativeMinusMatching(usize),
}

/// Largest `k` whose `K*_k` fits in `budget` edges.
fn largest_k_fitting(budget: usize) -> usize {
    let mut k = 1;
    while kstar_size(k + 1) <= budget {
        k += 1;
    }
    k
}

/// `psi(P_n, sigma)` for every signature: the largest `k` with
/// `|E(K*_k)| <= n - 1`.
pub fn psi_path(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::invalid("path requires order >= 1"));
    }
    Ok(largest_k_fitting(n - 1))
}

/// `psi(C_n, sigma)` for every signature of the given balance. With `k_0`
/// the largest `k` such that `|E(K*_k)| <= n`, the value is `k_0`, `k_0 - 1`
/// or `k_0 - 2` depending on how tightly `C_n` fits an Euler tour of
/// `K*_{k_0}` and whether the balances agree.
pub fn psi_cycle(n: usize, balance: Parity) -> Result<usize> {
    if n < 3 {
        return Err(Error::invalid("cycle requires order >= 3"));
    }
    let k0 = largest_k_fitting(n);
    let m = kstar_size(k0);
    let same = kstar_balance(k0) == balance;
    let value = if n >= m + 2 || (n == m + 1 && !same) || (n == m && same) {
        k0
    } else if n == m + 1 || k0 % 2 == 1 {
        // n = m + 1 with equal balance, or n = m with k_0 odd and different
        // balance.
        k0 - 1
    } else {
        // n = m with k_0 even and different balance.
        k0 - 2
    };
    Ok(value)
}

/// Closed-form `psi` for signed complete graphs. The all-negative and
/// minus-matching forms are theorems for `n >= 5` only; smaller orders are
/// left to the solver.
pub fn psi_complete(n: usize, variant: CompleteVariant) -> Result<usize> {
    if n == 0 {
        return Err(Error::invalid("complete graph requires order >= 1"));
    }
    match variant {
        CompleteVariant::AllPositive => Ok(n),
        CompleteVariant::AllNegative => {
            if n < 5 {
                return Err(Error::invalid("all-negative closed form requires n >= 5"));
            }
            Ok(2)
        }
        CompleteVariant::NegativeMinusMatching(m) => {
            if n < 5 {
                return Err(Error::invalid("minus-matching closed form requires n >= 5"));
            }
            if m == 0 || m > n / 2 {
                return Err(Error::invalid("matching size must be in 1..=n/2"));
            }
            Ok(3)
        }
    }
}

/// A closed Euler trail of `K*_k`: `vertices` are the visited magnitudes
/// (first equals last), `signs[i]` is the sign of the edge traversed between
/// `vertices[i]` and `vertices[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerTrail {
    pub vertices: Vec<u32>,
    pub signs: Vec<Sign>,
}

/// A closed Euler trail of `K*_k` starting at the least magnitude. Every
/// vertex of `K*_k` has even degree, so the trail exists for all `k >= 2`;
/// `K*_1` has no edges to traverse.
pub fn euler_trail_kstar(k: usize) -> Result<EulerTrail> {
    if k < 2 {
        return Err(Error::invalid("Euler trail requires k >= 2"));
    }
    let kstar = build_kstar(k)?;
    let labels = kstar.labels().to_vec();
    let edges = kstar.edges();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); kstar.order()];
    for (id, e) in edges.iter().enumerate() {
        incident[e.u].push(id);
        if e.u != e.v {
            incident[e.v].push(id);
        }
    }
    let mut used = vec![false; edges.len()];
    let mut cursor = vec![0usize; kstar.order()];
    // Hierholzer: walk until stuck, back out emitting the circuit.
    let mut stack: Vec<(usize, Option<usize>)> = vec![(0, None)];
    let mut tour: Vec<(usize, Option<usize>)> = Vec::new();
    while let Some(&(v, entry)) = stack.last() {
        let mut stepped = false;
        while cursor[v] < incident[v].len() {
            let id = incident[v][cursor[v]];
            if used[id] {
                cursor[v] += 1;
                continue;
            }
            used[id] = true;
            let e = edges[id];
            let next = if e.u == v { e.v } else { e.u };
            stack.push((next, Some(id)));
            stepped = true;
            break;
        }
        if !stepped {
            tour.push((v, entry));
            stack.pop();
        }
    }
    tour.reverse();
    debug_assert!(used.iter().all(|&u| u), "K*_k is connected");
    let vertices: Vec<u32> = tour.iter().map(|&(v, _)| labels[v]).collect();
    let signs: Vec<Sign> = tour
        .iter()
        .filter_map(|&(_, entry)| entry.map(|id| edges[id].sign))
        .collect();
    debug_assert_eq!(signs.len(), kstar_size(k));
    debug_assert_eq!(vertices.first(), vertices.last());
    Ok(EulerTrail { vertices, signs })
}

fn expect_path(g: &SignedGraph) -> Result<()> {
    let n = g.order();
    if n == 0 {
        return Err(Error::invalid("path requires order >= 1"));
    }
    if g.size() != n - 1 || (0..n.saturating_sub(1)).any(|i| !g.has_edge(i, i + 1)) {
        return Err(Error::invalid("expected the path with edges (i, i+1)"));
    }
    Ok(())
}

fn expect_cycle(g: &SignedGraph) -> Result<()> {
    let n = g.order();
    if n < 3 {
        return Err(Error::invalid("cycle requires order >= 3"));
    }
    if g.size() != n
        || (0..n - 1).any(|i| !g.has_edge(i, i + 1))
        || !g.has_edge(n - 1, 0)
    {
        return Err(Error::invalid("expected the cycle with edges (i, i+1 mod n)"));
    }
    Ok(())
}

/// Colours vertices `0..n` along a closed trail: vertex `i` takes magnitude
/// `vertices[i mod m]`, and each flag is chosen so the effective sign of
/// edge `(i-1, i)` equals the trail edge's sign. Past one lap the trail is
/// re-entered from its start, which only repeats already-realized types.
fn trail_colouring(g: &SignedGraph, k: usize, trail: &EulerTrail, n: usize) -> Result<InferredColouring> {
    let m = trail.signs.len();
    let mut items = Vec::with_capacity(n);
    items.push((trail.vertices[0], Flag::Plus));
    for i in 1..n {
        let sigma = g
            .sign(i - 1, i)
            .ok_or_else(|| Error::invalid("missing path edge"))?;
        let want = trail.signs[(i - 1) % m];
        let prev = items[i - 1].1;
        let flip = (sigma != want) != prev.is_minus();
        items.push((
            trail.vertices[i % m],
            if flip { Flag::Minus } else { Flag::Plus },
        ));
    }
    InferredColouring::new(k, items)
}

/// A complete `psi_path(n)`-colouring of any signed path on indexed
/// vertices, built by walking an Euler trail of `K*_k`.
pub fn construct_path_colouring(g: &SignedGraph) -> Result<InferredColouring> {
    expect_path(g)?;
    let n = g.order();
    let k = psi_path(n)?;
    let gamma = if k == 1 {
        InferredColouring::new(1, vec![(0, Flag::Plus); n])?
    } else {
        trail_colouring(g, k, &euler_trail_kstar(k)?, n)?
    };
    debug_assert!(matches!(is_inferred_complete(g, &gamma), Ok(true)));
    Ok(gamma)
}

/// A complete `psi_cycle(n, balance)`-colouring of any signed cycle on
/// indexed vertices. Three constructions cover the theorem's cases:
///
/// * `n = m_{k_0}` with matching balance: the cycle switches onto an Euler
///   tour of `K*_{k_0}`; the closing edge's effective sign is forced to
///   match the tour's last edge by the balance parity.
/// * `n = m_{k_0} + 1` with differing balance: one lap of the tour colours a
///   spanning path whose ends share a (nonzero) magnitude, and the parity
///   mismatch forces the closing edge effectively negative.
/// * otherwise the induced `P_{n-1}` is already worth the target value and
///   the remaining vertex takes any properly extending colour.
pub fn construct_cycle_colouring(g: &SignedGraph) -> Result<InferredColouring> {
    expect_cycle(g)?;
    let n = g.order();
    let balance = signature_balance(g);
    let k = psi_cycle(n, balance)?;
    let k0 = largest_k_fitting(n);
    let m = kstar_size(k0);
    let same = kstar_balance(k0) == balance;

    let gamma = if n == m && same {
        trail_colouring(g, k0, &euler_trail_kstar(k0)?, n)?
    } else if n == m + 1 && !same {
        // Here k_0 is even: for odd k_0, m_{k_0} + 1 = m_{k_0 + 1} would have
        // raised k_0. The trail junction therefore has magnitude 1, which
        // tolerates the closing edge's parity-forced negative sign.
        debug_assert_eq!(k0 % 2, 0);
        trail_colouring(g, k0, &euler_trail_kstar(k0)?, n)?
    } else {
        let kept: Vec<usize> = (0..n - 1).collect();
        let base = construct_path_colouring(&g.induced_subgraph(&kept)?)?;
        debug_assert_eq!(base.k(), k, "induced path is worth exactly the target");
        let (m_prev, f_prev) = base.get(n - 2);
        let (m_first, f_first) = base.get(0);
        let s_prev = g.sign(n - 2, n - 1).expect("cycle edge");
        let s_close = g.sign(0, n - 1).expect("cycle edge");
        let mut extension = None;
        'search: for mag in magnitudes(k) {
            for flag in [Flag::Plus, Flag::Minus] {
                let ok_prev = m_prev != mag
                    || (mag != 0 && effective_sign(s_prev, f_prev, flag).is_negative());
                let ok_close = m_first != mag
                    || (mag != 0 && effective_sign(s_close, f_first, flag).is_negative());
                if ok_prev && ok_close {
                    extension = Some((mag, flag));
                    break 'search;
                }
            }
        }
        let (mag, flag) =
            extension.expect("two constraints cannot exclude every magnitude when k >= 3");
        let mut items = base.items().to_vec();
        items.push((mag, flag));
        InferredColouring::new(k, items)?
    };
    debug_assert!(matches!(is_inferred_complete(g, &gamma), Ok(true)));
    Ok(gamma)
}

/// The distinct-colour complete `n`-colouring of `(K_n, +)`: vertex `i`
/// takes the `i`-th colour of `M_n` in ascending order.
pub fn construct_positive_clique_colouring(n: usize) -> Result<Colouring> {
    Colouring::new(n, colour_set(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::is_complete;
    use crate::graph::Sign::{Negative as N, Positive as P};
    use crate::graph::{complete_graph, cycle_graph, path_graph, MultiEdge};
    use crate::solver::{psi, SearchOptions};

    fn signs_of_mask(len: usize, mask: u32) -> Vec<Sign> {
        (0..len)
            .map(|i| if mask >> i & 1 == 1 { N } else { P })
            .collect()
    }

    #[test]
    fn path_formula_values() {
        let expected = [
            (1, 1),
            (2, 2),
            (3, 2),
            (4, 3),
            (5, 4),
            (8, 4),
            (9, 5),
            (10, 6), // m_6 = 9 fits into 9 edges
            (15, 6),
            (16, 7), // m_7 = 15 fits into 15 edges
            (17, 8), // m_8 = 16 fits into 16 edges
        ];
        for (n, k) in expected {
            assert_eq!(psi_path(n).unwrap(), k, "n = {n}");
        }
        assert!(psi_path(0).is_err());
    }

    #[test]
    fn path_formula_matches_solver_over_all_signatures() {
        let opts = SearchOptions::default();
        for n in 1..=9usize {
            let expected = psi_path(n).unwrap();
            for mask in 0..(1u32 << (n - 1)) {
                let g = path_graph(&signs_of_mask(n - 1, mask));
                assert_eq!(
                    psi(&g, &opts).unwrap().value,
                    expected,
                    "n = {n}, mask = {mask}"
                );
            }
        }
    }

    #[test]
    fn cycle_formula_values() {
        assert_eq!(psi_cycle(3, Parity::Even).unwrap(), 3);
        assert_eq!(psi_cycle(3, Parity::Odd).unwrap(), 2);
        assert_eq!(psi_cycle(4, Parity::Odd).unwrap(), 4);
        assert_eq!(psi_cycle(4, Parity::Even).unwrap(), 2);
        // n = m_4 + 1 = 5: the parity-mismatch case keeps k_0 = 4.
        assert_eq!(psi_cycle(5, Parity::Even).unwrap(), 4);
        assert_eq!(psi_cycle(5, Parity::Odd).unwrap(), 3);
        // n = m_5 = 8: K*_5 has odd balance.
        assert_eq!(psi_cycle(8, Parity::Odd).unwrap(), 5);
        assert_eq!(psi_cycle(8, Parity::Even).unwrap(), 4);
        // n = m_6 = 9: K*_6 has even balance; k_0 even drops by two.
        assert_eq!(psi_cycle(9, Parity::Even).unwrap(), 6);
        assert_eq!(psi_cycle(9, Parity::Odd).unwrap(), 4);
        // n = m_6 + 1 = 10.
        assert_eq!(psi_cycle(10, Parity::Odd).unwrap(), 6);
        assert_eq!(psi_cycle(10, Parity::Even).unwrap(), 5);
        // Far from the threshold the value is just k_0.
        assert_eq!(psi_cycle(12, Parity::Even).unwrap(), 6);
        assert_eq!(psi_cycle(12, Parity::Odd).unwrap(), 6);
        // n = m_7 = 15: K*_7 has odd balance; k_0 odd drops by one.
        assert_eq!(psi_cycle(15, Parity::Odd).unwrap(), 7);
        assert_eq!(psi_cycle(15, Parity::Even).unwrap(), 6);
        assert!(psi_cycle(2, Parity::Even).is_err());
    }

    #[test]
    fn cycle_formula_matches_solver_over_all_signatures() {
        let opts = SearchOptions::default();
        for n in 3..=9usize {
            for mask in 0..(1u32 << n) {
                let g = cycle_graph(&signs_of_mask(n, mask)).unwrap();
                let expected = psi_cycle(n, signature_balance(&g)).unwrap();
                assert_eq!(
                    psi(&g, &opts).unwrap().value,
                    expected,
                    "n = {n}, mask = {mask}"
                );
            }
        }
    }

    #[test]
    fn complete_formula_values_and_hypotheses() {
        assert_eq!(psi_complete(6, CompleteVariant::AllPositive).unwrap(), 6);
        assert_eq!(psi_complete(1, CompleteVariant::AllPositive).unwrap(), 1);
        assert_eq!(psi_complete(5, CompleteVariant::AllNegative).unwrap(), 2);
        assert_eq!(
            psi_complete(6, CompleteVariant::NegativeMinusMatching(2)).unwrap(),
            3
        );
        assert!(psi_complete(4, CompleteVariant::AllNegative).is_err());
        assert!(psi_complete(4, CompleteVariant::NegativeMinusMatching(1)).is_err());
        assert!(psi_complete(6, CompleteVariant::NegativeMinusMatching(0)).is_err());
        assert!(psi_complete(6, CompleteVariant::NegativeMinusMatching(4)).is_err());
        assert!(psi_complete(0, CompleteVariant::AllPositive).is_err());
    }

    #[test]
    fn complete_formula_matches_solver() {
        let opts = SearchOptions::default();
        for n in 1..=7usize {
            assert_eq!(
                psi(&complete_graph(n, P), &opts).unwrap().value,
                psi_complete(n, CompleteVariant::AllPositive).unwrap()
            );
        }
        for n in 5..=7usize {
            assert_eq!(
                psi(&complete_graph(n, N), &opts).unwrap().value,
                psi_complete(n, CompleteVariant::AllNegative).unwrap()
            );
            for m in 1..=n / 2 {
                let mut g = complete_graph(n, N);
                for i in 0..m {
                    g.remove_edge(2 * i, 2 * i + 1).unwrap();
                }
                assert_eq!(
                    psi(&g, &opts).unwrap().value,
                    psi_complete(n, CompleteVariant::NegativeMinusMatching(m)).unwrap(),
                    "n = {n}, matching = {m}"
                );
            }
        }
    }

    #[test]
    fn euler_trail_covers_kstar_exactly_once() {
        assert!(euler_trail_kstar(1).is_err());
        for k in 2..=12usize {
            let trail = euler_trail_kstar(k).unwrap();
            assert_eq!(trail.signs.len(), kstar_size(k), "k = {k}");
            assert_eq!(trail.vertices.len(), kstar_size(k) + 1);
            assert_eq!(trail.vertices.first(), trail.vertices.last());
            // Starts at the least magnitude of M_k.
            assert_eq!(trail.vertices[0], if k % 2 == 0 { 1 } else { 0 });
            let kstar = build_kstar(k).unwrap();
            let index_of = |mag: u32| kstar.labels().iter().position(|&l| l == mag).unwrap();
            let mut walked: Vec<MultiEdge> = (0..trail.signs.len())
                .map(|i| {
                    MultiEdge::new(
                        index_of(trail.vertices[i]),
                        index_of(trail.vertices[i + 1]),
                        trail.signs[i],
                    )
                })
                .collect();
            walked.sort();
            assert_eq!(walked, kstar.edges(), "k = {k}");
        }
    }

    #[test]
    fn trail_for_k2_is_the_single_loop() {
        let trail = euler_trail_kstar(2).unwrap();
        assert_eq!(trail.vertices, vec![1, 1]);
        assert_eq!(trail.signs, vec![N]);
    }

    #[test]
    fn path_construction_is_complete_for_all_small_signatures() {
        for n in 1..=9usize {
            for mask in 0..(1u32 << (n - 1)) {
                let g = path_graph(&signs_of_mask(n - 1, mask));
                let gamma = construct_path_colouring(&g).unwrap();
                assert_eq!(gamma.k(), psi_path(n).unwrap());
                assert!(
                    is_inferred_complete(&g, &gamma).unwrap(),
                    "n = {n}, mask = {mask}"
                );
            }
        }
        // Longer paths exercise several laps of the trail.
        for n in [10usize, 13, 17, 26] {
            let signs: Vec<Sign> = (0..n - 1).map(|i| if i % 3 == 0 { N } else { P }).collect();
            let g = path_graph(&signs);
            let gamma = construct_path_colouring(&g).unwrap();
            assert_eq!(gamma.k(), psi_path(n).unwrap());
            assert!(is_inferred_complete(&g, &gamma).unwrap(), "n = {n}");
        }
        assert!(construct_path_colouring(&complete_graph(3, P)).is_err());
    }

    #[test]
    fn cycle_construction_is_complete_for_all_small_signatures() {
        for n in 3..=9usize {
            for mask in 0..(1u32 << n) {
                let g = cycle_graph(&signs_of_mask(n, mask)).unwrap();
                let gamma = construct_cycle_colouring(&g).unwrap();
                assert_eq!(
                    gamma.k(),
                    psi_cycle(n, signature_balance(&g)).unwrap(),
                    "n = {n}, mask = {mask}"
                );
                assert!(
                    is_inferred_complete(&g, &gamma).unwrap(),
                    "n = {n}, mask = {mask}"
                );
            }
        }
        for n in [10usize, 12, 16, 25] {
            for flip in [0usize, 1] {
                let signs: Vec<Sign> =
                    (0..n).map(|i| if i % 2 == flip { N } else { P }).collect();
                let g = cycle_graph(&signs).unwrap();
                let gamma = construct_cycle_colouring(&g).unwrap();
                assert_eq!(gamma.k(), psi_cycle(n, signature_balance(&g)).unwrap());
                assert!(is_inferred_complete(&g, &gamma).unwrap(), "n = {n}");
            }
        }
        assert!(construct_cycle_colouring(&path_graph(&[P, P])).is_err());
    }

    #[test]
    fn positive_clique_colouring_is_complete() {
        for n in 1..=8usize {
            let phi = construct_positive_clique_colouring(n).unwrap();
            let g = complete_graph(n, P);
            assert!(is_complete(&g, &phi).unwrap(), "n = {n}");
        }
        let phi4 = construct_positive_clique_colouring(4).unwrap();
        let values: Vec<i32> = phi4.colours().iter().map(|c| c.0).collect();
        assert_eq!(values, vec![-2, -1, 1, 2]);
        let phi5 = construct_positive_clique_colouring(5).unwrap();
        let values: Vec<i32> = phi5.colours().iter().map(|c| c.0).collect();
        assert_eq!(values, vec![-2, -1, 0, 1, 2]);
    }
}
